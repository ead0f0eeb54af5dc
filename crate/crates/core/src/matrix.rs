//! Dense matrices over a [`Ring`], with exact inversion and quasideterminants.
//!
//! Index convention: the entry in row `k`, column `i` of a coefficient matrix
//! `D` is the pairing `y_i^k` of the `k`-th basis vector with the `i`-th dual
//! basis covector. The inverse `Z` is the literal two-sided inverse of the
//! stored array, so `Z[i][k]` is `z_k^i` and
//! `quasidet(D, i, k) = Z[i][k]⁻¹`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Ordered list of pairwise distinct indices, used to pick rows or columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSequence(Vec<usize>);

impl IndexSequence {
    pub fn new(indices: Vec<usize>) -> Result<IndexSequence> {
        for (pos, &i) in indices.iter().enumerate() {
            if indices[..pos].contains(&i) {
                return Err(Error::DuplicateIndex(i));
            }
        }
        Ok(IndexSequence(indices))
    }

    /// `0, 1, …, len-1`
    pub fn range(len: usize) -> IndexSequence {
        IndexSequence((0..len).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn check_bounds(&self, bound: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i >= bound) {
            Some(&index) => Err(Error::IndexOutOfBounds { index, bound }),
            None => Ok(()),
        }
    }
}

impl std::ops::Index<usize> for IndexSequence {
    type Output = usize;
    fn index(&self, pos: usize) -> &usize {
        &self.0[pos]
    }
}

impl TryFrom<Vec<usize>> for IndexSequence {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<IndexSequence> {
        IndexSequence::new(v)
    }
}

/// Row-major rectangular matrix whose entries all share one ring variant.
#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Matrix<R>> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::Shape("rows have different lengths".into()));
        }
        let entries: Vec<R> = rows.into_iter().flatten().collect();
        if let Some(first) = entries.first() {
            let zero = first.zero_like();
            if entries.iter().any(|e| e.zero_like() != zero) {
                return Err(Error::VariantMismatch("matrix entries of mixed ring variants".into()));
            }
        }
        Ok(Matrix { n_rows, n_cols, entries })
    }

    pub fn from_fn(n_rows: usize, n_cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Matrix<R> {
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for k in 0..n_rows {
            for i in 0..n_cols {
                entries.push(f(k, i));
            }
        }
        Matrix { n_rows, n_cols, entries }
    }

    /// `n × n` identity in the ring of `template`.
    pub fn identity(n: usize, template: &R) -> Matrix<R> {
        let (zero, one) = (template.zero_like(), template.one_like());
        Matrix::from_fn(n, n, |k, i| if k == i { one.clone() } else { zero.clone() })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    /// Entry in row `row`, column `col`. Panics when out of bounds.
    pub fn get(&self, row: usize, col: usize) -> &R {
        assert!(row < self.n_rows && col < self.n_cols, "entry ({row}, {col}) out of bounds");
        &self.entries[row * self.n_cols + col]
    }

    pub fn row(&self, row: usize) -> &[R] {
        &self.entries[row * self.n_cols..(row + 1) * self.n_cols]
    }

    pub fn column(&self, col: usize) -> Vec<R> {
        (0..self.n_rows).map(|k| self.get(k, col).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        (0..self.n_rows).map(|k| self.row(k).to_vec()).collect()
    }

    /// Some entry, to build zeros and ones of the right variant.
    pub fn template(&self) -> Option<&R> {
        self.entries.first()
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix { n_rows: self.n_rows, n_cols: self.n_cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Matrix<R> {
        Matrix::from_fn(self.n_cols, self.n_rows, |k, i| self.get(i, k).clone())
    }

    /// Submatrix with the given columns and rows, in the given order:
    /// entry `(j, l)` of the result is entry `(rows[j], cols[l])` of `self`.
    pub fn submatrix(&self, cols: &IndexSequence, rows: &IndexSequence) -> Result<Matrix<R>> {
        cols.check_bounds(self.n_cols)?;
        rows.check_bounds(self.n_rows)?;
        Ok(Matrix::from_fn(rows.len(), cols.len(), |j, l| self.get(rows[j], cols[l]).clone()))
    }

    /// The order-`n` leading truncation, `(n+1) × (n+1)`.
    pub fn leading(&self, n: usize) -> Result<Matrix<R>> {
        let r = IndexSequence::range(n + 1);
        self.submatrix(&r, &r)
    }

    pub fn mul(&self, rhs: &Matrix<R>) -> Result<Matrix<R>> {
        if self.n_cols != rhs.n_rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.n_rows, self.n_cols, rhs.n_rows, rhs.n_cols
            )));
        }
        if self.n_cols == 0 {
            return Err(Error::Shape("empty inner dimension".into()));
        }
        let mut entries = Vec::with_capacity(self.n_rows * rhs.n_cols);
        for k in 0..self.n_rows {
            for i in 0..rhs.n_cols {
                let mut acc = self.get(k, 0).try_mul(rhs.get(0, i))?;
                for l in 1..self.n_cols {
                    acc = acc.try_add(&self.get(k, l).try_mul(rhs.get(l, i))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { n_rows: self.n_rows, n_cols: rhs.n_cols, entries })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.n_rows).all(|k| {
                (0..self.n_cols).all(|i| if k == i { self.get(k, i).is_one() } else { self.get(k, i).is_zero() })
            })
    }

    /// Lower triangular with ones on the diagonal.
    pub fn is_lower_unitriangular(&self) -> bool {
        self.is_square()
            && (0..self.n_rows)
                .all(|k| self.get(k, k).is_one() && (k + 1..self.n_cols).all(|i| self.get(k, i).is_zero()))
    }

    /// Upper triangular with ones on the diagonal.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.transpose().is_lower_unitriangular()
    }

    /// Two-sided inverse by Gauss-Jordan elimination over the ring.
    ///
    /// In each column the first row (at or below the diagonal) holding an
    /// invertible entry is taken as the pivot. Failure to find one is
    /// reported as `NonGeneric { order }` with the zero-based column.
    pub fn invert(&self) -> Result<Matrix<R>> {
        if !self.is_square() {
            return Err(Error::Shape(format!("cannot invert {}x{} matrix", self.n_rows, self.n_cols)));
        }
        let n = self.n_rows;
        let Some(template) = self.template() else {
            return Ok(self.clone());
        };
        let mut work = self.rows();
        let mut inv = Matrix::identity(n, template).rows();
        for c in 0..n {
            let (pivot_row, pivot_inv) = (c..n)
                .find_map(|r| work[r][c].try_inverse().ok().map(|p| (r, p)))
                .ok_or(Error::NonGeneric { order: c })?;
            work.swap(c, pivot_row);
            inv.swap(c, pivot_row);
            for x in work[c].iter_mut().chain(inv[c].iter_mut()) {
                *x = pivot_inv.try_mul(x)?;
            }
            for r in 0..n {
                if r == c || work[r][c].is_zero() {
                    continue;
                }
                let factor = work[r][c].clone();
                for l in 0..n {
                    let w = factor.try_mul(&work[c][l])?;
                    work[r][l] = work[r][l].try_sub(&w)?;
                    let v = factor.try_mul(&inv[c][l])?;
                    inv[r][l] = inv[r][l].try_sub(&v)?;
                }
            }
        }
        Matrix::from_rows(inv)
    }

    /// The `(i, j)` quasideterminant `|M|_i^j`: the inverse of the entry in
    /// row `i`, column `j` of `M⁻¹`. In the commutative case this is
    /// `(-1)^(i+j) det M / det M_i^j`, where `M_i^j` drops column `i` and row `j`.
    pub fn quasidet(&self, i: usize, j: usize) -> Result<R> {
        if !self.is_square() {
            return Err(Error::Shape("quasideterminant of a non-square matrix".into()));
        }
        let n = self.n_rows;
        for index in [i, j] {
            if index >= n {
                return Err(Error::IndexOutOfBounds { index, bound: n });
            }
        }
        let z = self.invert()?;
        z.get(i, j).try_inverse().map_err(|_| Error::NonGeneric { order: n - 1 })
    }
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for k in 0..self.n_rows {
            list.entry(&&self.entries[k * self.n_cols..(k + 1) * self.n_cols]);
        }
        list.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Block, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn int_matrix<const N: usize, const M: usize>(rows: [[i64; M]; N]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect()).unwrap()
    }

    fn seq(v: &[usize]) -> IndexSequence {
        IndexSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn submatrix_examples() {
        let m = int_matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]]);
        assert_eq!(m.submatrix(&seq(&[0, 1]), &seq(&[0, 1])).unwrap(), int_matrix([[1, 2], [4, 5]]));

        let m = int_matrix([[1, 2], [3, 4]]);
        assert_eq!(m.submatrix(&seq(&[1, 0]), &seq(&[0, 1])).unwrap(), int_matrix([[2, 1], [4, 3]]));

        // x_i^k for nodes 0, 1, 2
        let v = int_matrix([[1, 1, 1], [0, 1, 2], [0, 1, 4]]);
        assert_eq!(v.submatrix(&seq(&[0, 2]), &seq(&[1, 2])).unwrap(), int_matrix([[0, 2], [0, 4]]));
    }

    #[test]
    fn submatrix_errors() {
        let m = int_matrix([[1, 2], [3, 4]]);
        assert_eq!(m.submatrix(&seq(&[0, 2]), &seq(&[0, 1])), Err(Error::IndexOutOfBounds { index: 2, bound: 2 }));
        assert_eq!(IndexSequence::new(vec![1, 0, 1]), Err(Error::DuplicateIndex(1)));
    }

    #[test]
    fn invert_examples() {
        let id = Matrix::identity(3, &q(1, 1));
        assert_eq!(id.invert().unwrap(), id);
        let m = int_matrix([[1, 2], [3, 4]]);
        let expected = Matrix::from_rows(vec![vec![q(-2, 1), q(1, 1)], vec![q(3, 2), q(-1, 2)]]).unwrap();
        assert_eq!(m.invert().unwrap(), expected);
    }

    #[test]
    fn invert_block_diagonal() {
        let a = Block::from_ints([[2, 1], [1, 1]]);
        let b = Block::from_ints([[0, 1], [-1, 3]]);
        let z = Block::zero(2);
        let m = Matrix::from_rows(vec![vec![a, z.clone()], vec![z, b]]).unwrap();
        let inv = m.invert().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn invert_uses_row_swaps() {
        let m = int_matrix([[0, 1], [1, 0]]);
        assert_eq!(m.invert().unwrap(), m);
    }

    #[test]
    fn invert_reports_failing_order() {
        assert_eq!(int_matrix([[0, 0], [0, 0]]).invert(), Err(Error::NonGeneric { order: 0 }));
        assert_eq!(int_matrix([[1, 2], [2, 4]]).invert(), Err(Error::NonGeneric { order: 1 }));
    }

    #[test]
    fn empty_matrix() {
        let e: Matrix<Rational> = Matrix::from_rows(vec![]).unwrap();
        assert_eq!(e.invert().unwrap(), e);
        assert!(matches!(e.quasidet(0, 0), Err(Error::IndexOutOfBounds { .. })));
    }

    #[test]
    fn quasidet_examples() {
        assert_eq!(int_matrix([[5]]).quasidet(0, 0).unwrap(), q(5, 1));
        let m = int_matrix([[1, 2], [3, 4]]);
        assert_eq!(m.quasidet(0, 0).unwrap(), q(-1, 2));
        assert_eq!(m.quasidet(1, 0).unwrap(), q(2, 3));
    }

    #[test]
    fn quasidet_of_singular_or_degenerate_entry() {
        assert!(matches!(int_matrix([[1, 2], [2, 4]]).quasidet(0, 0), Err(Error::NonGeneric { .. })));
        // inverse is [[0,1],[1,0]]; its (0,0) entry is zero
        assert_eq!(int_matrix([[0, 1], [1, 0]]).quasidet(0, 0), Err(Error::NonGeneric { order: 1 }));
    }

    #[test]
    fn mixed_variants_rejected() {
        use crate::ring::RingElement;
        let rows = vec![vec![RingElement::from(q(1, 1)), RingElement::from(Block::identity(2))]];
        assert!(matches!(Matrix::from_rows(rows), Err(Error::VariantMismatch(_))));
    }

    #[test]
    fn triangular_predicates() {
        assert!(int_matrix([[1, 0], [5, 1]]).is_lower_unitriangular());
        assert!(!int_matrix([[1, 2], [5, 1]]).is_lower_unitriangular());
        assert!(int_matrix([[1, 7], [0, 1]]).is_upper_unitriangular());
        assert!(!int_matrix([[2, 0], [0, 1]]).is_upper_unitriangular());
    }
}
