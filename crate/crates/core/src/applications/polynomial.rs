use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::ring::{Module, Rational};

/// Dense univariate polynomial with rational coefficients in ascending degree.
/// Trailing zero coefficients are never stored, so the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Polynomial {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Polynomial {
        Polynomial::new(vec![c])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Polynomial {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Polynomial { coeffs }
    }

    /// `(x - r_0)(x - r_1)…`; the empty product is `1`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Polynomial {
        roots
            .into_iter()
            .fold(Polynomial::constant(Rational::one()), |acc, r| acc.mul(&Polynomial::new(vec![-r, Rational::one()])))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(out)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * &Rational::from_integer(k as i64)).collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Polynomial {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    /// `f(x0), f'(x0), …, f^(n)(x0)`
    pub fn derivatives_at(&self, x0: &Rational, n: usize) -> Vec<Rational> {
        let mut p = self.clone();
        let mut out = Vec::with_capacity(n + 1);
        for _ in 0..=n {
            out.push(p.eval(x0));
            p = p.derivative();
        }
        out
    }

    /// Drop every term of degree above `n`.
    pub fn truncate(&self, n: usize) -> Polynomial {
        Polynomial::new(self.coeffs.iter().take(n + 1).cloned().collect())
    }

    /// `p(x + shift)`
    pub fn shift(&self, shift: &Rational) -> Polynomial {
        let step = Polynomial::new(vec![shift.clone(), Rational::one()]);
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| acc.mul(&step).add(&Polynomial::constant(c.clone())))
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].recip().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Polynomial::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dc);
            }
            quot[k] = c;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if mag.denom().to_string() != "1" && k > 0 {
                    write!(f, "({mag})")?;
                } else {
                    write!(f, "{mag}")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Module<Rational> for Polynomial {
    fn add_vec(&self, rhs: &Self) -> Result<Self> {
        Ok(self.add(rhs))
    }
    fn sub_vec(&self, rhs: &Self) -> Result<Self> {
        Ok(self.sub(rhs))
    }
    fn scale_left(&self, r: &Rational) -> Result<Self> {
        Ok(self.scale(r))
    }
    fn scale_right(&self, r: &Rational) -> Result<Self> {
        Ok(self.scale(r))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Polynomial, D::Error> {
        Vec::<Rational>::deserialize(deserializer).map(Polynomial::new)
    }
}
