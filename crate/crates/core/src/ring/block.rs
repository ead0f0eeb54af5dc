use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// A `dim × dim` matrix of rationals, used as a noncommutative ring element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Block {
    dim: usize,
    entries: Vec<Rational>,
}

impl Block {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Block> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Shape("block must have positive dimension".into()));
        }
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Shape(format!("block rows must all have length {dim}")));
        }
        Ok(Block { dim, entries: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints<const D: usize>(rows: [[i64; D]; D]) -> Block {
        let rows = rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect()).collect();
        Block::from_rows(rows).expect("square by construction")
    }

    pub fn zero(dim: usize) -> Block {
        assert!(dim > 0);
        Block { dim, entries: vec![Rational::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Block {
        let mut b = Block::zero(dim);
        for i in 0..dim {
            b.entries[i * dim + i] = Rational::one();
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.dim).map(|c| c.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    fn check_dim(&self, other: &Block) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::VariantMismatch(format!("block dimensions {} and {}", self.dim, other.dim)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Block) -> Result<Block> {
        self.check_dim(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Block { dim: self.dim, entries })
    }

    pub fn sub(&self, other: &Block) -> Result<Block> {
        self.check_dim(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Block { dim: self.dim, entries })
    }

    pub fn neg(&self) -> Block {
        Block { dim: self.dim, entries: self.entries.iter().map(|a| -a).collect() }
    }

    pub fn mul(&self, other: &Block) -> Result<Block> {
        self.check_dim(other)?;
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = Rational::zero();
                for l in 0..d {
                    let a = self.get(i, l);
                    if !a.is_zero() {
                        acc = acc + a * other.get(l, j);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Block { dim: d, entries })
    }

    /// Gauss-Jordan elimination taking the first nonzero pivot in each column.
    pub fn inverse(&self) -> Option<Block> {
        let d = self.dim;
        let mut work = self.rows();
        let mut inv = Block::identity(d).rows();
        for col in 0..d {
            let pivot_row = (col..d).find(|&r| !work[r][col].is_zero())?;
            work.swap(col, pivot_row);
            inv.swap(col, pivot_row);
            let p = work[col][col].recip().expect("nonzero pivot");
            for j in 0..d {
                work[col][j] = &work[col][j] * &p;
                inv[col][j] = &inv[col][j] * &p;
            }
            for r in 0..d {
                if r == col || work[r][col].is_zero() {
                    continue;
                }
                let factor = work[r][col].clone();
                for j in 0..d {
                    let w = &work[col][j] * &factor;
                    work[r][j] = &work[r][j] - &w;
                    let v = &inv[col][j] * &factor;
                    inv[r][j] = &inv[r][j] - &v;
                }
            }
        }
        Some(Block::from_rows(inv).expect("square"))
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Block {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Block {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Block, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(deserializer)?;
        Block::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
