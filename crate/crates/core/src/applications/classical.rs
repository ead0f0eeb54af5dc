//! Textbook formulas for the commutative scalar case. They share no code with
//! the general machinery and serve as reference values for it.

use crate::ring::Rational;

use super::Polynomial;

/// Divided difference `Δ^m f(x_0, …, x_m)` by the classical recursion
/// `(Δ^{m-1} f(x_0 … x_{m-1}) - Δ^{m-1} f(x_0 … x_{m-2}, x_m)) / (x_{m-1} - x_m)`.
///
/// `values[j]` is `f(nodes[j])`. Panics if two nodes coincide.
pub fn divided_difference(nodes: &[Rational], values: &[Rational]) -> Rational {
    assert_eq!(nodes.len(), values.len());
    assert!(!nodes.is_empty());
    let m = nodes.len() - 1;
    if m == 0 {
        return values[0].clone();
    }
    let mut swapped_nodes = nodes[..m - 1].to_vec();
    swapped_nodes.push(nodes[m].clone());
    let mut swapped_values = values[..m - 1].to_vec();
    swapped_values.push(values[m].clone());
    let a = divided_difference(&nodes[..m], &values[..m]);
    let b = divided_difference(&swapped_nodes, &swapped_values);
    (a - b) / (&nodes[m - 1] - &nodes[m])
}

/// Newton form `Σ_m (x - x_0)…(x - x_{m-1}) Δ^m f(x_0, …, x_m)`.
pub fn newton_polynomial(nodes: &[Rational], values: &[Rational]) -> Polynomial {
    (0..nodes.len()).fold(Polynomial::zero(), |acc, m| {
        let basis = Polynomial::from_roots(&nodes[..m]);
        acc.add(&basis.scale(&divided_difference(&nodes[..=m], &values[..=m])))
    })
}

/// Lagrange form `Σ_i f_i Π_{j≠i} (x - x_j)/(x_i - x_j)`.
pub fn lagrange_polynomial(nodes: &[Rational], values: &[Rational]) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (i, (xi, fi)) in nodes.iter().zip(values).enumerate() {
        let others: Vec<Rational> = nodes.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect();
        let denom: Rational = others.iter().fold(Rational::one(), |p, xj| p * (xi - xj));
        acc = acc.add(&Polynomial::from_roots(&others).scale(&(fi / &denom)));
    }
    acc
}

/// Taylor polynomial `Σ_m (x - x_0)^m f^(m)(x_0) / m!` from `derivs[m] = f^(m)(x_0)`.
pub fn taylor_polynomial(x0: &Rational, derivs: &[Rational]) -> Polynomial {
    derivs.iter().enumerate().fold(Polynomial::zero(), |acc, (m, d)| {
        let basis = Polynomial::from_roots(std::iter::repeat_n(x0, m));
        acc.add(&basis.scale(&(d / &Rational::factorial(m))))
    })
}

/// Complete homogeneous symmetric polynomial `h_degree(vars)`, summing every
/// monomial of the given degree once.
pub fn complete_homogeneous(degree: usize, vars: &[Rational]) -> Rational {
    fn go(degree: usize, vars: &[Rational], prod: Rational) -> Rational {
        if degree == 0 {
            return prod;
        }
        match vars.split_first() {
            None => Rational::zero(),
            // either use the first variable once more, or never again
            Some((x, rest)) => go(degree - 1, vars, &prod * x) + go(degree, rest, prod),
        }
    }
    go(degree, vars, Rational::one())
}
