//! Left and right difference derivatives, the inverse-matrix expansion over
//! corner quasideterminants, and the generalized Newton expansion of the
//! truncated pairing.
//!
//! Covector data `f` (values `f_i = (f, p_i)`, indexed by column) is always
//! multiplied on the right; vector data `g` (values `g^k = (v^k, g)`, indexed
//! by row) on the left. With noncommutative entries these orders matter.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::biortho::{biorthogonalize, biorthogonalize_permuted};
use crate::error::{Error, Result};
use crate::matrix::{IndexSequence, Matrix};
use crate::ring::{sum_nonempty, Module, Ring};

/// How a difference derivative is computed. All three give identical results.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Divided-difference recurrence from order `m-1` to order `m`.
    Recurrence,
    /// Weighted sum with inverted quasideterminants of the selected submatrix.
    Quasidet,
    /// Pairing with the biorthogonal vectors `q_m` / `w^m`.
    Biortho,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Recurrence, Algorithm::Quasidet, Algorithm::Biortho];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Recurrence => "recurrence",
            Algorithm::Quasidet => "quasidet",
            Algorithm::Biortho => "biortho",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Algorithm> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown algorithm {s:?}")))
    }
}

fn check_sequences<R: Ring>(d: &Matrix<R>, cols: &IndexSequence, rows: &IndexSequence) -> Result<()> {
    if cols.len() != rows.len() || cols.is_empty() {
        return Err(Error::Shape(format!(
            "column and row sequences must be nonempty and of equal length, got {} and {}",
            cols.len(),
            rows.len()
        )));
    }
    cols.check_bounds(d.n_cols())?;
    rows.check_bounds(d.n_rows())
}

fn check_data_len<T>(data: &[T], indices: &IndexSequence) -> Result<()> {
    indices.check_bounds(data.len())
}

fn non_generic(order: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::NotInvertible => Error::NonGeneric { order },
        other => other,
    }
}

/// The `m`-th right difference derivative `(Δ_R^m f)` for the columns `cols`
/// (`i_0 … i_m`) and rows `rows` (`k_0 … k_m`), where `m + 1 = cols.len()`.
///
/// `f` is indexed by absolute column, so it must cover every index in `cols`.
pub fn delta_right<R: Ring, F: Module<R>>(
    f: &[F],
    d: &Matrix<R>,
    cols: &IndexSequence,
    rows: &IndexSequence,
    algorithm: Algorithm,
) -> Result<F> {
    check_sequences(d, cols, rows)?;
    check_data_len(f, cols)?;
    let m = cols.len() - 1;
    match algorithm {
        Algorithm::Recurrence => {
            let mut rec = Recurrence { d, memo: HashMap::new() };
            let mut memo = HashMap::new();
            rec.right(&|i| f[i].clone(), &mut memo, cols.as_slice(), rows.as_slice())
        }
        Algorithm::Quasidet => {
            let sub = d.submatrix(cols, rows)?;
            let terms = (0..=m)
                .map(|j| {
                    let weight = sub.quasidet(j, m)?.try_inverse().map_err(non_generic(m))?;
                    f[cols[j]].scale_right(&weight)
                })
                .collect::<Result<Vec<_>>>()?;
            sum_nonempty(terms)
        }
        Algorithm::Biortho => {
            let b = biorthogonalize_permuted(d, cols, rows)?;
            let terms = (0..=m).map(|j| f[cols[j]].scale_right(b.a().get(j, m))).collect::<Result<Vec<_>>>()?;
            sum_nonempty(terms)
        }
    }
}

/// The `m`-th left difference derivative `(Δ_L^m g)`; mirror of [`delta_right`].
///
/// `g` is indexed by absolute row, so it must cover every index in `rows`.
pub fn delta_left<R: Ring, G: Module<R>>(
    g: &[G],
    d: &Matrix<R>,
    cols: &IndexSequence,
    rows: &IndexSequence,
    algorithm: Algorithm,
) -> Result<G> {
    check_sequences(d, cols, rows)?;
    check_data_len(g, rows)?;
    let m = cols.len() - 1;
    match algorithm {
        Algorithm::Recurrence => {
            let mut rec = Recurrence { d, memo: HashMap::new() };
            let mut memo = HashMap::new();
            rec.left(&|k| g[k].clone(), &mut memo, cols.as_slice(), rows.as_slice())
        }
        Algorithm::Quasidet => {
            let sub = d.submatrix(cols, rows)?;
            let terms = (0..=m)
                .map(|l| {
                    let weight = sub.quasidet(m, l)?.try_inverse().map_err(non_generic(m))?;
                    g[rows[l]].scale_left(&weight)
                })
                .collect::<Result<Vec<_>>>()?;
            sum_nonempty(terms)
        }
        Algorithm::Biortho => {
            let b = biorthogonalize_permuted(d, cols, rows)?;
            let terms = (0..=m).map(|l| g[rows[l]].scale_left(b.c().get(m, l))).collect::<Result<Vec<_>>>()?;
            sum_nonempty(terms)
        }
    }
}

type Key = (Vec<usize>, Vec<usize>);

/// Memoized evaluation of the difference recurrences. The memo holds the
/// derivatives of rows (right side) or columns (left side) of `d`, keyed by
/// the row or column index.
struct Recurrence<'a, R> {
    d: &'a Matrix<R>,
    memo: HashMap<usize, HashMap<Key, R>>,
}

fn replace_last(seq: &[usize], last: usize) -> Vec<usize> {
    let mut v = seq[..seq.len() - 1].to_vec();
    v.push(last);
    v
}

impl<R: Ring> Recurrence<'_, R> {
    fn right<V: Module<R>>(
        &mut self,
        value: &dyn Fn(usize) -> V,
        memo: &mut HashMap<Key, V>,
        cols: &[usize],
        rows: &[usize],
    ) -> Result<V> {
        let key = (cols.to_vec(), rows.to_vec());
        if let Some(v) = memo.get(&key) {
            return Ok(v.clone());
        }
        let m = cols.len() - 1;
        let result = if m == 0 {
            let y = self.d.get(rows[0], cols[0]).try_inverse().map_err(non_generic(0))?;
            value(cols[0]).scale_right(&y)?
        } else {
            let head = &cols[..m];
            let swapped = replace_last(head, cols[m]);
            let prev_rows = &rows[..m];
            let num =
                self.right(value, memo, head, prev_rows)?.sub_vec(&self.right(value, memo, &swapped, prev_rows)?)?;
            let den =
                self.right_row(rows[m], head, prev_rows)?.try_sub(&self.right_row(rows[m], &swapped, prev_rows)?)?;
            num.scale_right(&den.try_inverse().map_err(non_generic(m))?)?
        };
        memo.insert(key, result.clone());
        Ok(result)
    }

    fn right_row(&mut self, k: usize, cols: &[usize], rows: &[usize]) -> Result<R> {
        let d = self.d;
        let mut memo = self.memo.remove(&k).unwrap_or_default();
        let result = self.right(&|i| d.get(k, i).clone(), &mut memo, cols, rows);
        self.memo.insert(k, memo);
        result
    }

    fn left<V: Module<R>>(
        &mut self,
        value: &dyn Fn(usize) -> V,
        memo: &mut HashMap<Key, V>,
        cols: &[usize],
        rows: &[usize],
    ) -> Result<V> {
        let key = (cols.to_vec(), rows.to_vec());
        if let Some(v) = memo.get(&key) {
            return Ok(v.clone());
        }
        let m = cols.len() - 1;
        let result = if m == 0 {
            let y = self.d.get(rows[0], cols[0]).try_inverse().map_err(non_generic(0))?;
            value(rows[0]).scale_left(&y)?
        } else {
            let head = &rows[..m];
            let swapped = replace_last(head, rows[m]);
            let prev_cols = &cols[..m];
            let den =
                self.left_col(cols[m], prev_cols, head)?.try_sub(&self.left_col(cols[m], prev_cols, &swapped)?)?;
            let num =
                self.left(value, memo, prev_cols, head)?.sub_vec(&self.left(value, memo, prev_cols, &swapped)?)?;
            num.scale_left(&den.try_inverse().map_err(non_generic(m))?)?
        };
        memo.insert(key, result.clone());
        Ok(result)
    }

    fn left_col(&mut self, i: usize, cols: &[usize], rows: &[usize]) -> Result<R> {
        let d = self.d;
        let mut memo = self.memo.remove(&i).unwrap_or_default();
        let result = self.left(&|k| d.get(k, i).clone(), &mut memo, cols, rows);
        self.memo.insert(i, memo);
        result
    }
}

/// Inverse of the order-`n` truncation `D_n`, assembled as
/// `z_k^i = Σ_{m ≥ max(i,k)} (|D_m|_i^m)⁻¹ · |D_m|_m^m · (|D_m|_m^k)⁻¹`.
///
/// All corner quasideterminants come out of a single biorthogonalization
/// pass; entry `(i, k)` of the result is `z_k^i`.
pub fn inverse_by_expansion<R: Ring>(d: &Matrix<R>, n: usize) -> Result<Matrix<R>> {
    let b = biorthogonalize(d, n)?;
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let terms = (i.max(k)..=n)
                .map(|m| b.a().get(i, m).try_mul(&b.pivots()[m])?.try_mul(b.c().get(m, k)))
                .collect::<Result<Vec<_>>>()?;
            row.push(sum_nonempty(terms)?);
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

fn check_pairing_data<R: Ring, G>(f: &[R], g: &[G], d: &Matrix<R>, n: usize) -> Result<()> {
    if f.len() <= n || g.len() <= n {
        return Err(Error::Shape(format!(
            "order {n} needs at least {} values of f and g, got {} and {}",
            n + 1,
            f.len(),
            g.len()
        )));
    }
    if d.n_rows() <= n || d.n_cols() <= n {
        return Err(Error::Shape(format!("order {n} exceeds a {}x{} matrix", d.n_rows(), d.n_cols())));
    }
    Ok(())
}

/// The truncated pairing `(f, g)_n = Σ_{i,k ≤ n} f_i · z_k^i · g^k`.
pub fn pairing_truncated<R: Ring, G: Module<R>>(f: &[R], g: &[G], d: &Matrix<R>, n: usize) -> Result<G> {
    check_pairing_data(f, g, d, n)?;
    let z = inverse_by_expansion(d, n)?;
    let mut terms = Vec::with_capacity((n + 1) * (n + 1));
    for (i, fi) in f.iter().enumerate().take(n + 1) {
        for (k, gk) in g.iter().enumerate().take(n + 1) {
            terms.push(gk.scale_left(&fi.try_mul(z.get(i, k))?)?);
        }
    }
    sum_nonempty(terms)
}

/// One order of a [`NewtonExpansion`], kept as three separate factors.
/// Serializes as the triple `[delta_right, pivot, delta_left]`.
#[derive(Clone, Debug, PartialEq)]
pub struct NewtonTerm<R, G> {
    pub delta_right: R,
    pub pivot: R,
    pub delta_left: G,
}

impl<R: Serialize, G: Serialize> Serialize for NewtonTerm<R, G> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.delta_right, &self.pivot, &self.delta_left).serialize(serializer)
    }
}

impl<R: Ring, G: Module<R>> NewtonTerm<R, G> {
    /// `Δ_R^m f · |D_m|_m^m · Δ_L^m g`
    pub fn value(&self) -> Result<G> {
        self.delta_left.scale_left(&self.delta_right.try_mul(&self.pivot)?)
    }
}

/// The terms `(Δ_R^m f, |D_m|_m^m, Δ_L^m g)` for `m = 0 … n`, with the standard
/// index sequences `0 … m`. Their products sum to the truncated pairing.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct NewtonExpansion<R, G> {
    terms: Vec<NewtonTerm<R, G>>,
}

impl<R: Ring, G: Module<R>> NewtonExpansion<R, G> {
    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[NewtonTerm<R, G>] {
        &self.terms
    }

    /// Sum of the terms of order `0 …= m`.
    pub fn partial_sum(&self, m: usize) -> Result<G> {
        sum_nonempty(self.terms[..=m].iter().map(NewtonTerm::value).collect::<Result<Vec<_>>>()?)
    }

    pub fn sum(&self) -> Result<G> {
        self.partial_sum(self.order())
    }
}

/// Expand `(f, g)_n` into its Newton terms.
pub fn newton_expand<R: Ring, G: Module<R>>(
    f: &[R],
    g: &[G],
    d: &Matrix<R>,
    n: usize,
) -> Result<NewtonExpansion<R, G>> {
    check_pairing_data(f, g, d, n)?;
    let b = biorthogonalize(d, n)?;
    let mut terms = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let right = sum_nonempty((0..=m).map(|i| f[i].try_mul(b.a().get(i, m))).collect::<Result<Vec<_>>>()?)?;
        let left = sum_nonempty((0..=m).map(|k| g[k].scale_left(b.c().get(m, k))).collect::<Result<Vec<_>>>()?)?;
        terms.push(NewtonTerm { delta_right: right, pivot: b.pivots()[m].clone(), delta_left: left });
    }
    Ok(NewtonExpansion { terms })
}
