//! Exact arithmetic: rationals, rational matrix blocks, and the ring and
//! module contracts every algorithm in this crate is written against.
//!
//! Multiplication is never assumed to commute. Algorithms that need a zero
//! or a one build it from an existing element with [`Ring::zero_like`] and
//! [`Ring::one_like`], since the block ring has one identity per dimension.

mod block;
mod rational;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use block::Block;
pub use rational::Rational;

use crate::error::{Error, Result};

/// An associative ring with unit whose inverses, when they exist, are two-sided.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn negate(&self) -> Self;
    fn try_add(&self, rhs: &Self) -> Result<Self>;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    /// `Err(NotInvertible)` when no two-sided inverse exists.
    fn try_inverse(&self) -> Result<Self>;

    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.negate())
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

/// A bimodule over `R`: values that can be added and scaled from either side.
///
/// Covector data `f` is scaled on the right and vector data `g` on the left;
/// every ring is a module over itself, and polynomials with rational
/// coefficients are a module over the rationals.
pub trait Module<R: Ring>: Clone + PartialEq + fmt::Debug {
    fn add_vec(&self, rhs: &Self) -> Result<Self>;
    fn sub_vec(&self, rhs: &Self) -> Result<Self>;
    /// `r · self`
    fn scale_left(&self, r: &R) -> Result<Self>;
    /// `self · r`
    fn scale_right(&self, r: &R) -> Result<Self>;
}

impl<R: Ring> Module<R> for R {
    fn add_vec(&self, rhs: &Self) -> Result<Self> {
        self.try_add(rhs)
    }
    fn sub_vec(&self, rhs: &Self) -> Result<Self> {
        self.try_sub(rhs)
    }
    fn scale_left(&self, r: &R) -> Result<Self> {
        r.try_mul(self)
    }
    fn scale_right(&self, r: &R) -> Result<Self> {
        self.try_mul(r)
    }
}

/// Sum of a nonempty sequence of module elements.
pub(crate) fn sum_nonempty<R: Ring, M: Module<R>>(items: impl IntoIterator<Item = M>) -> Result<M> {
    let mut iter = items.into_iter();
    let first = iter.next().expect("sum of an empty sequence");
    iter.try_fold(first, |acc, x| acc.add_vec(&x))
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn negate(&self) -> Self {
        -self
    }
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        Ok(self + rhs)
    }
    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        Ok(self - rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(self * rhs)
    }
    fn try_inverse(&self) -> Result<Self> {
        self.recip().ok_or(Error::NotInvertible)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
}

impl Ring for Block {
    fn zero_like(&self) -> Self {
        Block::zero(self.dim())
    }
    fn one_like(&self) -> Self {
        Block::identity(self.dim())
    }
    fn is_zero(&self) -> bool {
        Block::is_zero(self)
    }
    fn negate(&self) -> Self {
        Block::neg(self)
    }
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        Block::add(self, rhs)
    }
    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        Block::sub(self, rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Block::mul(self, rhs)
    }
    fn try_inverse(&self) -> Result<Self> {
        self.inverse().ok_or(Error::NotInvertible)
    }
}

/// A ring element whose variant is chosen at runtime, as read from JSON.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingElement {
    Rational(Rational),
    Block(Block),
}

impl RingElement {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RingElement::Rational(r) => Some(r),
            RingElement::Block(_) => None,
        }
    }

    pub fn as_block(&self) -> Option<&Block> {
        match self {
            RingElement::Block(b) => Some(b),
            RingElement::Rational(_) => None,
        }
    }

    /// `None` for rationals, `Some(d)` for `d × d` blocks.
    pub fn block_dim(&self) -> Option<usize> {
        self.as_block().map(Block::dim)
    }

    fn binary(
        &self,
        rhs: &Self,
        rat: impl FnOnce(&Rational, &Rational) -> Rational,
        blk: impl FnOnce(&Block, &Block) -> Result<Block>,
    ) -> Result<Self> {
        match (self, rhs) {
            (RingElement::Rational(a), RingElement::Rational(b)) => Ok(RingElement::Rational(rat(a, b))),
            (RingElement::Block(a), RingElement::Block(b)) => blk(a, b).map(RingElement::Block),
            _ => Err(Error::VariantMismatch("rational combined with block".into())),
        }
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Rational(r) => fmt::Debug::fmt(r, f),
            RingElement::Block(b) => fmt::Debug::fmt(b, f),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Rational(r) => fmt::Display::fmt(r, f),
            RingElement::Block(b) => fmt::Display::fmt(b, f),
        }
    }
}

impl From<Rational> for RingElement {
    fn from(r: Rational) -> Self {
        RingElement::Rational(r)
    }
}

impl From<Block> for RingElement {
    fn from(b: Block) -> Self {
        RingElement::Block(b)
    }
}

impl Ring for RingElement {
    fn zero_like(&self) -> Self {
        match self {
            RingElement::Rational(r) => RingElement::Rational(r.zero_like()),
            RingElement::Block(b) => RingElement::Block(b.zero_like()),
        }
    }
    fn one_like(&self) -> Self {
        match self {
            RingElement::Rational(r) => RingElement::Rational(r.one_like()),
            RingElement::Block(b) => RingElement::Block(b.one_like()),
        }
    }
    fn is_zero(&self) -> bool {
        match self {
            RingElement::Rational(r) => r.is_zero(),
            RingElement::Block(b) => b.is_zero(),
        }
    }
    fn negate(&self) -> Self {
        match self {
            RingElement::Rational(r) => RingElement::Rational(-r),
            RingElement::Block(b) => RingElement::Block(b.neg()),
        }
    }
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.binary(rhs, |a, b| a + b, Block::add)
    }
    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.binary(rhs, |a, b| a - b, Block::sub)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.binary(rhs, |a, b| a * b, Block::mul)
    }
    fn try_inverse(&self) -> Result<Self> {
        match self {
            RingElement::Rational(r) => r.try_inverse().map(RingElement::Rational),
            RingElement::Block(b) => b.try_inverse().map(RingElement::Block),
        }
    }
}
