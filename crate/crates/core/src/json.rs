//! JSON documents for matrices and biorthogonalization results.
//!
//! A matrix is written as
//!
//! ```json
//! {"ring": "rational", "rows": [["1", "1/2"], ["0", "-3"]]}
//! ```
//!
//! or, for entries that are `d × d` blocks, with `"ring": {"block": d}` and
//! every entry a nested array of rational strings.

use serde::{Deserialize, Serialize};

use crate::biortho::BiorthoResult;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Rational, Ring, RingElement};

/// Which ring the entries of a matrix document live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingSpec {
    Rational,
    Block(usize),
}

impl RingSpec {
    pub fn of(element: &RingElement) -> RingSpec {
        match element.block_dim() {
            None => RingSpec::Rational,
            Some(d) => RingSpec::Block(d),
        }
    }

    pub fn admits(self, element: &RingElement) -> bool {
        RingSpec::of(element) == self
    }

    /// The multiplicative identity of this ring.
    pub fn one(self) -> Result<RingElement> {
        match self {
            RingSpec::Rational => Ok(Rational::one().into()),
            RingSpec::Block(0) => Err(Error::Shape("block dimension must be positive".into())),
            RingSpec::Block(d) => Ok(crate::ring::Block::identity(d).into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub ring: RingSpec,
    pub rows: Vec<Vec<RingElement>>,
}

impl MatrixDoc {
    /// Validate shape and entry variants and build the matrix.
    pub fn to_matrix(&self) -> Result<Matrix<RingElement>> {
        self.ring.one()?;
        for row in &self.rows {
            if let Some(bad) = row.iter().find(|e| !self.ring.admits(e)) {
                return Err(Error::VariantMismatch(format!("entry {bad} does not belong to ring {:?}", self.ring)));
            }
        }
        Matrix::from_rows(self.rows.clone())
    }

    pub fn from_matrix(m: &Matrix<RingElement>) -> MatrixDoc {
        let ring = m.template().map_or(RingSpec::Rational, RingSpec::of);
        MatrixDoc { ring, rows: m.rows() }
    }

    pub fn from_rational(m: &Matrix<Rational>) -> MatrixDoc {
        MatrixDoc { ring: RingSpec::Rational, rows: m.map(|x| RingElement::from(x.clone())).rows() }
    }

    /// The matrix as plain rationals, if the ring is rational.
    pub fn to_rational_matrix(&self) -> Result<Matrix<Rational>> {
        if self.ring != RingSpec::Rational {
            return Err(Error::VariantMismatch("expected a rational matrix".into()));
        }
        let m = self.to_matrix()?;
        Ok(m.map(|e| e.as_rational().expect("checked variant").clone()))
    }
}

/// JSON form of a [`BiorthoResult`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BiorthoDoc {
    pub order: usize,
    #[serde(rename = "A")]
    pub a: MatrixDoc,
    #[serde(rename = "C")]
    pub c: MatrixDoc,
    pub pivots: Vec<RingElement>,
}

impl BiorthoDoc {
    pub fn new<R: Ring + Into<RingElement>>(b: &BiorthoResult<R>) -> BiorthoDoc {
        let lift = |m: &Matrix<R>| MatrixDoc::from_matrix(&m.map(|x| x.clone().into()));
        BiorthoDoc {
            order: b.order(),
            a: lift(b.a()),
            c: lift(b.c()),
            pivots: b.pivots().iter().map(|p| p.clone().into()).collect(),
        }
    }
}
