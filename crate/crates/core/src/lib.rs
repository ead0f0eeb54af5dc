//! Exact noncommutative interpolation.
//!
//! `ncinterp` inverts finite matrices whose entries may not commute, and
//! expresses the inverse through corner quasideterminants. The same
//! machinery yields left and right difference derivatives of covector and
//! vector data, and a Newton-style expansion of the bilinear pairing they
//! define. Divided differences, Newton interpolation, the Taylor formula and
//! Gram-Schmidt orthogonalization fall out as special cases.
//!
//! All arithmetic is exact: entries are arbitrary-precision [`Rational`]s or
//! square [`Block`]s of them, the latter serving as a noncommutative ring.
//!
//! ```
//! use ncinterp::applications::{newton_interpolate, NodeSet, Polynomial};
//! use ncinterp::Rational;
//!
//! let nodes = NodeSet::from_ints(&[0, 1, 2]).unwrap();
//! let values: Vec<Rational> = [0, 1, 4].iter().map(|&v| Rational::from_integer(v)).collect();
//! let fit = newton_interpolate(&nodes, &values, 2).unwrap();
//! assert_eq!(fit.polynomial, Polynomial::monomial(2));
//! assert_eq!(fit.differences(), vec![Rational::from_integer(0), 1.into(), 1.into()]);
//! ```
//!
//! The guide in `book/` walks through each concept with runnable snippets.

pub mod applications;
pub mod biortho;
pub mod diffcalc;
mod error;
pub mod json;
pub mod matrix;
pub mod random;
pub mod ring;

pub use biortho::{biorthogonalize, biorthogonalize_permuted, BiorthoResult};
pub use diffcalc::{
    delta_left, delta_right, inverse_by_expansion, newton_expand, pairing_truncated, Algorithm, NewtonExpansion,
    NewtonTerm,
};
pub use error::{Error, Result};
pub use matrix::{IndexSequence, Matrix};
pub use ring::{Block, Module, Rational, Ring, RingElement};

// The guide's snippets run as doctests so the book stays in sync with the code.
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
pub mod book_introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod book_exact_arithmetic {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/quasideterminants.md")]
pub mod book_quasideterminants {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/biorthogonalization.md")]
pub mod book_biorthogonalization {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/difference-derivatives.md")]
pub mod book_difference_derivatives {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/newton-expansion.md")]
pub mod book_newton_expansion {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/applications.md")]
pub mod book_applications {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub mod book_cli {}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub mod readme {}
