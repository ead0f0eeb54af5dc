//! The classical special cases of the Newton expansion: polynomial
//! interpolation through distinct nodes, Taylor expansion at one point, and
//! Gram-Schmidt orthogonalization of a basis with a symmetric Gram matrix.
//!
//! In the interpolation cases the vector data `g^k = x^k` is symbolic, a
//! [`Polynomial`], so the left difference derivatives come out as the Newton
//! basis polynomials themselves rather than values at sample points.

pub mod classical;
mod polynomial;

pub use polynomial::Polynomial;

use crate::biortho::{biorthogonalize, BiorthoResult};
use crate::diffcalc::{delta_right, newton_expand, Algorithm, NewtonExpansion};
use crate::error::{Error, Result};
use crate::matrix::{IndexSequence, Matrix};
use crate::ring::Rational;

/// Pairwise distinct interpolation nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSet(Vec<Rational>);

impl NodeSet {
    pub fn new(nodes: Vec<Rational>) -> Result<NodeSet> {
        for (pos, x) in nodes.iter().enumerate() {
            if nodes[..pos].contains(x) {
                return Err(Error::DuplicateNode(x.to_string()));
            }
        }
        Ok(NodeSet(nodes))
    }

    pub fn from_ints(nodes: &[i64]) -> Result<NodeSet> {
        NodeSet::new(nodes.iter().map(|&x| Rational::from_integer(x)).collect())
    }

    pub fn nodes(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Vandermonde matrix of order `n`: row `k`, column `i` holds `x_i^k`.
pub fn vandermonde(nodes: &NodeSet, n: usize) -> Result<Matrix<Rational>> {
    if nodes.len() <= n {
        return Err(Error::Shape(format!("order {n} needs {} nodes, got {}", n + 1, nodes.len())));
    }
    Ok(Matrix::from_fn(n + 1, n + 1, |k, i| nodes.0[i].pow(k as u32)))
}

/// Matrix of derivatives at `x0`: row `k`, column `i` holds `d^i/dx^i x^k` at `x0`,
/// that is `k!/(k-i)! · x0^(k-i)` for `i ≤ k` and zero above the diagonal.
pub fn taylor_matrix(x0: &Rational, n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n + 1, n + 1, |k, i| {
        if i > k {
            Rational::zero()
        } else {
            Rational::factorial(k) / Rational::factorial(k - i) * x0.pow((k - i) as u32)
        }
    })
}

/// `g^k = x^k` for `k = 0 …= n`.
pub fn monomials(n: usize) -> Vec<Polynomial> {
    (0..=n).map(Polynomial::monomial).collect()
}

/// Result of [`newton_interpolate`] or [`taylor_interpolate`].
#[derive(Clone, Debug, PartialEq)]
pub struct Interpolant {
    /// Terms `(Δ_R^m f, |D_m|_m^m, Δ_L^m g)` with polynomial `Δ_L^m g`.
    pub expansion: NewtonExpansion<Rational, Polynomial>,
    /// The sum of the expansion.
    pub polynomial: Polynomial,
}

impl Interpolant {
    fn from_expansion(expansion: NewtonExpansion<Rational, Polynomial>) -> Result<Interpolant> {
        let polynomial = expansion.sum()?;
        Ok(Interpolant { expansion, polynomial })
    }

    /// The right difference derivatives `Δ_R^0 f, …, Δ_R^n f`.
    pub fn differences(&self) -> Vec<Rational> {
        self.expansion.terms().iter().map(|t| t.delta_right.clone()).collect()
    }

    pub fn pivots(&self) -> Vec<Rational> {
        self.expansion.terms().iter().map(|t| t.pivot.clone()).collect()
    }

    /// `|D_m|_m^m · Δ_L^m g`, the polynomial multiplying `Δ_R^m f`.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.expansion.terms().iter().map(|t| t.delta_left.scale(&t.pivot)).collect()
    }
}

fn check_values(values: &[Rational], n: usize) -> Result<()> {
    if values.len() <= n {
        return Err(Error::Shape(format!("order {n} needs {} values, got {}", n + 1, values.len())));
    }
    Ok(())
}

/// Interpolating polynomial of degree ≤ `n` through `(x_i, values_i)`,
/// `i = 0 …= n`, in Newton form.
pub fn newton_interpolate(nodes: &NodeSet, values: &[Rational], n: usize) -> Result<Interpolant> {
    check_values(values, n)?;
    let d = vandermonde(nodes, n)?;
    let expansion = newton_expand(values, &monomials(n), &d, n).map_err(|e| match e {
        Error::NonGeneric { .. } => unreachable!("distinct nodes give a generic Vandermonde matrix"),
        other => other,
    })?;
    Interpolant::from_expansion(expansion)
}

/// Taylor polynomial of degree ≤ `n` at `x0` from `derivs[i] = f^(i)(x0)`.
pub fn taylor_interpolate(x0: &Rational, derivs: &[Rational], n: usize) -> Result<Interpolant> {
    check_values(derivs, n)?;
    let d = taylor_matrix(x0, n);
    Interpolant::from_expansion(newton_expand(derivs, &monomials(n), &d, n)?)
}

/// Divided difference of `f` at the merging nodes `x0, x0 + eps, …, x0 + m·eps`
/// next to its limit `f^(m)(x0) / m!`. Returns `(difference, limit)`.
pub fn confluent_limit_check(f: &Polynomial, x0: &Rational, m: usize, eps: &Rational) -> Result<(Rational, Rational)> {
    if eps.is_zero() && m > 0 {
        return Err(Error::DuplicateNode(x0.to_string()));
    }
    let nodes = NodeSet::new((0..=m).map(|j| x0 + &(eps * &Rational::from_integer(j as i64))).collect())?;
    let values: Vec<Rational> = nodes.nodes().iter().map(|x| f.eval(x)).collect();
    let d = vandermonde(&nodes, m)?;
    let all = IndexSequence::range(m + 1);
    let difference = delta_right(&values, &d, &all, &all, Algorithm::Biortho)?;
    let limit = f.nth_derivative(m).eval(x0) / Rational::factorial(m);
    Ok((difference, limit))
}

/// A symmetric positive definite Gram matrix `G[k][i] = (v^k, v^i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GramData {
    gram: Matrix<Rational>,
}

impl GramData {
    /// Checks exact symmetry, then positive definiteness through the leading
    /// corner quasideterminants, which must all be strictly positive.
    pub fn new(gram: Matrix<Rational>) -> Result<GramData> {
        if !gram.is_square() || gram.n_rows() == 0 {
            return Err(Error::Shape("gram matrix must be square and nonempty".into()));
        }
        if gram != gram.transpose() {
            return Err(Error::NotSymmetric);
        }
        let n = gram.n_rows() - 1;
        let b = biorthogonalize(&gram, n).map_err(|e| match e {
            Error::NonGeneric { order } => Error::NotPositiveDefinite { order },
            other => other,
        })?;
        if let Some(order) = b.pivots().iter().position(|p| !p.is_positive()) {
            return Err(Error::NotPositiveDefinite { order });
        }
        Ok(GramData { gram })
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.gram
    }
}

/// Orthogonalize `v^0 … v^n`. Row `m` of `C` gives `w^m = Σ_k c_k^m v^k`,
/// with `(w^m, v^m) = 1` and `(w^m, w^m) = pivots[m]⁻¹`.
pub fn gram_schmidt(gram: &GramData, n: usize) -> Result<BiorthoResult<Rational>> {
    biorthogonalize(&gram.gram, n)
}

/// `(w^m, w^m)` for `m = 0 …= n`, computed from `C` and `G` directly.
pub fn orthogonal_norms(gram: &GramData, basis: &BiorthoResult<Rational>) -> Result<Vec<Rational>> {
    let c = basis.c();
    let wgw = c.mul(&gram.gram.leading(basis.order())?)?.mul(&c.transpose())?;
    Ok((0..=basis.order()).map(|m| wgw.get(m, m).clone()).collect())
}

/// `Σ_m (f, w^m) (w^m, w^m)⁻¹ (w^m, g)` where `f_k = (f, v^k)` and `g^k = (v^k, g)`.
pub fn orthogonal_expansion(gram: &GramData, f: &[Rational], g: &[Rational], n: usize) -> Result<Rational> {
    if f.len() <= n || g.len() <= n {
        return Err(Error::Shape(format!("order {n} needs {} values of f and g", n + 1)));
    }
    let basis = gram_schmidt(gram, n)?;
    let norms = orthogonal_norms(gram, &basis)?;
    let c = basis.c();
    let mut acc = Rational::zero();
    for (m, norm) in norms.iter().enumerate() {
        let fw: Rational = (0..=m).map(|k| &f[k] * c.get(m, k)).sum();
        let wg: Rational = (0..=m).map(|k| c.get(m, k) * &g[k]).sum();
        let inv = norm.recip().ok_or(Error::NotPositiveDefinite { order: m })?;
        acc = acc + fw * inv * wg;
    }
    Ok(acc)
}
