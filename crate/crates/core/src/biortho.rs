//! Biorthogonalization of a pair of dual bases.
//!
//! Given the pairing matrix `D` (row `k`, column `i` holds `y_i^k`), build the
//! upper triangular `A` and lower triangular `C` such that
//!
//! * `q_m = Σ_i p_i a_m^i` satisfies `(v^k, q_m) = 0` for `k < m` and `(v^m, q_m) = 1`,
//! * `w^m = Σ_k c_k^m v^k` satisfies `(w^m, p_i) = 0` for `i < m` and `(w^m, p_m) = 1`.
//!
//! In matrix terms `D·A` is lower unitriangular and `C·D` is upper
//! unitriangular. `A` stores `a_m^i` at row `i`, column `m`; `C` stores
//! `c_k^m` at row `m`, column `k`.

use crate::error::{Error, Result};
use crate::matrix::{IndexSequence, Matrix};
use crate::ring::Ring;

/// Output of [`biorthogonalize`].
#[derive(Clone, Debug, PartialEq)]
pub struct BiorthoResult<R> {
    a: Matrix<R>,
    c: Matrix<R>,
    pivots: Vec<R>,
}

impl<R: Ring> BiorthoResult<R> {
    /// Highest order `n`; the matrices are `(n+1) × (n+1)`.
    pub fn order(&self) -> usize {
        self.pivots.len() - 1
    }

    /// Upper triangular, `a_m^i` at row `i`, column `m`.
    pub fn a(&self) -> &Matrix<R> {
        &self.a
    }

    /// Lower triangular, `c_k^m` at row `m`, column `k`.
    pub fn c(&self) -> &Matrix<R> {
        &self.c
    }

    /// `pivots[m]` is the corner quasideterminant `|D_m|_m^m`.
    pub fn pivots(&self) -> &[R] {
        &self.pivots
    }

    /// Diagonal matrix of pivots.
    pub fn pivot_matrix(&self) -> Matrix<R> {
        let zero = self.pivots[0].zero_like();
        let n = self.pivots.len();
        Matrix::from_fn(n, n, |m, l| if m == l { self.pivots[m].clone() } else { zero.clone() })
    }
}

/// Biorthogonalize the order-`n` leading truncation of `d`.
///
/// Each order reuses the vectors already built, so the whole pass costs
/// `O(n³)` ring operations. Returns `NonGeneric { order: m }` when the
/// order-`m` corner quasideterminant is not invertible.
pub fn biorthogonalize<R: Ring>(d: &Matrix<R>, n: usize) -> Result<BiorthoResult<R>> {
    if d.n_rows() <= n || d.n_cols() <= n {
        return Err(Error::Shape(format!(
            "order {n} needs a {0}x{0} matrix, got {1}x{2}",
            n + 1,
            d.n_rows(),
            d.n_cols()
        )));
    }
    let zero = d.get(0, 0).zero_like();
    let one = d.get(0, 0).one_like();

    // a_cols[j][i] = a_j^i for i <= j; c_rows[j][k] = c_k^j for k <= j
    let mut a_cols: Vec<Vec<R>> = Vec::with_capacity(n + 1);
    let mut c_rows: Vec<Vec<R>> = Vec::with_capacity(n + 1);
    let mut pivots: Vec<R> = Vec::with_capacity(n + 1);

    for m in 0..=n {
        // (w^j, p_m) and (v^m, q_j), each premultiplied by the pivot t_j = (w^j, q_j)⁻¹
        let mut a_tilde: Vec<R> = vec![zero.clone(); m + 1];
        let mut c_tilde: Vec<R> = vec![zero.clone(); m + 1];
        a_tilde[m] = one.clone();
        c_tilde[m] = one.clone();
        for j in 0..m {
            let mut alpha = zero.clone();
            for (k, c) in c_rows[j].iter().enumerate() {
                alpha = alpha.try_add(&c.try_mul(d.get(k, m))?)?;
            }
            let mut beta = zero.clone();
            for (i, a) in a_cols[j].iter().enumerate() {
                beta = beta.try_add(&d.get(m, i).try_mul(a)?)?;
            }
            let right = pivots[j].try_mul(&alpha)?;
            for (i, a) in a_cols[j].iter().enumerate() {
                a_tilde[i] = a_tilde[i].try_sub(&a.try_mul(&right)?)?;
            }
            let left = beta.try_mul(&pivots[j])?;
            for (k, c) in c_rows[j].iter().enumerate() {
                c_tilde[k] = c_tilde[k].try_sub(&left.try_mul(c)?)?;
            }
        }
        let mut pivot = zero.clone();
        for (i, a) in a_tilde.iter().enumerate() {
            pivot = pivot.try_add(&d.get(m, i).try_mul(a)?)?;
        }
        let pivot_inv = pivot.try_inverse().map_err(|_| Error::NonGeneric { order: m })?;
        let a_col = a_tilde.iter().map(|a| a.try_mul(&pivot_inv)).collect::<Result<Vec<_>>>()?;
        let c_row = c_tilde.iter().map(|c| pivot_inv.try_mul(c)).collect::<Result<Vec<_>>>()?;

        #[cfg(debug_assertions)]
        {
            let corner = d.leading(m)?.quasidet(m, m);
            assert!(
                corner.as_ref() == Ok(&pivot) && a_col[m] == c_row[m],
                "pivot at order {m} disagrees with the corner quasideterminant"
            );
        }

        a_cols.push(a_col);
        c_rows.push(c_row);
        pivots.push(pivot);
    }

    let a = Matrix::from_fn(n + 1, n + 1, |i, m| a_cols[m].get(i).cloned().unwrap_or_else(|| zero.clone()));
    let c = Matrix::from_fn(n + 1, n + 1, |m, k| c_rows[m].get(k).cloned().unwrap_or_else(|| zero.clone()));
    Ok(BiorthoResult { a, c, pivots })
}

/// Biorthogonalize the bases reordered as `p_{cols[0]}, p_{cols[1]}, …` and
/// `v^{rows[0]}, v^{rows[1]}, …`.
pub fn biorthogonalize_permuted<R: Ring>(
    d: &Matrix<R>,
    cols: &IndexSequence,
    rows: &IndexSequence,
) -> Result<BiorthoResult<R>> {
    if cols.len() != rows.len() || cols.is_empty() {
        return Err(Error::Shape(format!(
            "column and row sequences must be nonempty and of equal length, got {} and {}",
            cols.len(),
            rows.len()
        )));
    }
    let sub = d.submatrix(cols, rows)?;
    biorthogonalize(&sub, cols.len() - 1)
}
