//! Seeded generators for reproducible property checks.
//!
//! Numerators are drawn uniformly from `[-9, 9]` and denominators from
//! `[-9, 9] \ {0}`, which keeps bit growth small over many exact operations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::applications::Polynomial;
use crate::biortho::biorthogonalize;
use crate::matrix::Matrix;
use crate::ring::{Block, Rational, Ring, RingElement};

/// Deterministic generator of random exact values.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn rational(&mut self) -> Rational {
        let num = self.rng.random_range(-9..=9);
        let mut den = 0;
        while den == 0 {
            den = self.rng.random_range(-9..=9);
        }
        Rational::new(num, den)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn block(&mut self, dim: usize) -> Block {
        let rows = (0..dim).map(|_| (0..dim).map(|_| self.rational()).collect()).collect();
        Block::from_rows(rows).expect("square")
    }

    pub fn invertible_block(&mut self, dim: usize) -> Block {
        loop {
            let b = self.block(dim);
            if b.inverse().is_some() {
                return b;
            }
        }
    }

    /// A random element of the same ring as `template`.
    pub fn element_like(&mut self, template: &RingElement) -> RingElement {
        match template.block_dim() {
            None => self.rational().into(),
            Some(d) => self.block(d).into(),
        }
    }

    pub fn rational_matrix(&mut self, rows: usize, cols: usize) -> Matrix<Rational> {
        Matrix::from_fn(rows, cols, |_, _| self.rational())
    }

    /// `block_dim = None` gives rational entries.
    pub fn matrix(&mut self, rows: usize, cols: usize, block_dim: Option<usize>) -> Matrix<RingElement> {
        Matrix::from_fn(rows, cols, |_, _| match block_dim {
            None => self.rational().into(),
            Some(d) => self.block(d).into(),
        })
    }

    /// A square matrix of size `n + 1` whose biorthogonalization succeeds at
    /// every order up to `n`.
    pub fn generic_matrix(&mut self, n: usize, block_dim: Option<usize>) -> Matrix<RingElement> {
        loop {
            let m = self.matrix(n + 1, n + 1, block_dim);
            if biorthogonalize(&m, n).is_ok() {
                return m;
            }
        }
    }

    pub fn vector(&mut self, len: usize, template: &RingElement) -> Vec<RingElement> {
        (0..len).map(|_| self.element_like(template)).collect()
    }

    pub fn rationals(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.rational()).collect()
    }

    /// `len` pairwise distinct rationals.
    pub fn distinct_rationals(&mut self, len: usize) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        while out.len() < len {
            let r = self.rational();
            if !out.contains(&r) {
                out.push(r);
            }
        }
        out
    }

    pub fn polynomial(&mut self, max_degree: usize) -> Polynomial {
        let degree = self.rng.random_range(0..=max_degree);
        Polynomial::new(self.rationals(degree + 1))
    }

    /// Symmetric positive definite `size × size` matrix `Bᵀ B + I`.
    pub fn spd_matrix(&mut self, size: usize) -> Matrix<Rational> {
        let b = self.rational_matrix(size, size);
        let btb = b.transpose().mul(&b).expect("square");
        let one = Rational::one();
        Matrix::from_fn(size, size, |k, i| {
            let x = btb.get(k, i).clone();
            if k == i {
                x.try_add(&one).expect("rational")
            } else {
                x
            }
        })
    }

    /// A uniformly random permutation of `0..len`.
    pub fn permutation(&mut self, len: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (0..len).collect();
        for i in (1..len).rev() {
            let j = self.rng.random_range(0..=i);
            v.swap(i, j);
        }
        v
    }
}
