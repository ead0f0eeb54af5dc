//! Acceptance suite: one PASS/FAIL line per criterion, exact equality
//! throughout. Exits nonzero if any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use ncinterp::applications::classical::{
    complete_homogeneous, divided_difference, lagrange_polynomial, taylor_polynomial,
};
use ncinterp::applications::{
    confluent_limit_check, gram_schmidt, newton_interpolate, orthogonal_expansion, orthogonal_norms,
    taylor_interpolate, vandermonde, GramData, NodeSet, Polynomial,
};
use ncinterp::random::Sampler;
use ncinterp::{
    biorthogonalize, biorthogonalize_permuted, delta_left, delta_right, inverse_by_expansion, newton_expand,
    pairing_truncated, Algorithm, IndexSequence, Matrix, Rational, RingElement,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// The shared corpus for criteria 1–3: 200 generic matrices, rational of
/// order 1…6 and 2×2-block of order 1…4.
fn corpus() -> Vec<(Matrix<RingElement>, usize)> {
    let mut s = Sampler::new(2024);
    let mut out = Vec::with_capacity(200);
    for n in 1..=6 {
        for _ in 0..20 {
            out.push((s.generic_matrix(n, None), n));
        }
    }
    for n in 1..=4 {
        for _ in 0..20 {
            out.push((s.generic_matrix(n, Some(2)), n));
        }
    }
    out
}

fn label(d: &Matrix<RingElement>, n: usize) -> String {
    match d.get(0, 0).block_dim() {
        Some(k) => format!("{k}×{k} blocks, order {n}"),
        None => format!("rational, order {n}"),
    }
}

fn inverse_expansion(corpus: &[(Matrix<RingElement>, usize)]) -> Outcome {
    let start = Instant::now();
    for (d, n) in corpus {
        let expected = d.invert().map_err(|e| format!("{}: elimination failed: {e}", label(d, *n)))?;
        let got = inverse_by_expansion(d, *n).map_err(|e| format!("{}: {e}", label(d, *n)))?;
        ensure!(got == expected, "{}: expansion inverse differs from elimination", label(d, *n));
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:.1?}, limit 60s");
    Ok(format!("{} matrices in {elapsed:.1?}", corpus.len()))
}

fn newton_identity(corpus: &[(Matrix<RingElement>, usize)]) -> Outcome {
    let mut s = Sampler::new(2);
    for (d, n) in corpus {
        let t = d.get(0, 0).clone();
        let f = s.vector(n + 1, &t);
        let g = s.vector(n + 1, &t);
        let e = newton_expand(&f, &g, d, *n).map_err(|e| e.to_string())?;
        let pairing = pairing_truncated(&f, &g, d, *n).map_err(|e| e.to_string())?;
        ensure!(e.sum().map_err(|e| e.to_string())? == pairing, "{}: Newton sum ≠ pairing", label(d, *n));
    }
    Ok(format!("{} matrices", corpus.len()))
}

fn factorization(corpus: &[(Matrix<RingElement>, usize)]) -> Outcome {
    for (d, n) in corpus {
        let b = biorthogonalize(d, *n).map_err(|e| e.to_string())?;
        let dn = d.leading(*n).map_err(|e| e.to_string())?;
        let da = dn.mul(b.a()).map_err(|e| e.to_string())?;
        let cd = b.c().mul(&dn).map_err(|e| e.to_string())?;
        ensure!(da.is_lower_unitriangular(), "{}: D·A not lower unitriangular", label(d, *n));
        ensure!(cd.is_upper_unitriangular(), "{}: C·D not upper unitriangular", label(d, *n));
        let abc = b.a().mul(&b.pivot_matrix()).and_then(|ab| ab.mul(b.c())).map_err(|e| e.to_string())?;
        ensure!(abc == dn.invert().map_err(|e| e.to_string())?, "{}: A·diag(pivots)·C ≠ D⁻¹", label(d, *n));
    }
    Ok(format!("{} matrices", corpus.len()))
}

/// A random instance on which every algorithm, including the literal
/// recurrence, can evaluate order-`m` derivatives along random sequences.
fn generic_instance(
    s: &mut Sampler,
    m: usize,
    block: Option<usize>,
) -> (Matrix<RingElement>, IndexSequence, IndexSequence, Vec<RingElement>, Vec<RingElement>) {
    let size = m + 2;
    loop {
        let d = s.matrix(size, size, block);
        let cols = IndexSequence::new(s.permutation(size)[..=m].to_vec()).unwrap();
        let rows = IndexSequence::new(s.permutation(size)[..=m].to_vec()).unwrap();
        let t = d.get(0, 0).clone();
        let f = s.vector(size, &t);
        let g = s.vector(size, &t);
        if delta_right(&f, &d, &cols, &rows, Algorithm::Recurrence).is_ok()
            && delta_left(&g, &d, &cols, &rows, Algorithm::Recurrence).is_ok()
            && biorthogonalize_permuted(&d, &cols, &rows).is_ok()
        {
            return (d, cols, rows, f, g);
        }
    }
}

fn three_way_agreement() -> Outcome {
    let mut s = Sampler::new(4);
    let mut count = 0;
    for block in [None, Some(2)] {
        for m in 0..=5 {
            for _ in 0..4 {
                let (d, cols, rows, f, g) = generic_instance(&mut s, m, block);
                let right: Vec<_> = Algorithm::ALL
                    .iter()
                    .map(|&a| delta_right(&f, &d, &cols, &rows, a))
                    .collect::<ncinterp::Result<_>>()
                    .map_err(|e| e.to_string())?;
                let left: Vec<_> = Algorithm::ALL
                    .iter()
                    .map(|&a| delta_left(&g, &d, &cols, &rows, a))
                    .collect::<ncinterp::Result<_>>()
                    .map_err(|e| e.to_string())?;
                ensure!(right.windows(2).all(|w| w[0] == w[1]), "right derivatives disagree, m={m} {block:?}");
                ensure!(left.windows(2).all(|w| w[0] == w[1]), "left derivatives disagree, m={m} {block:?}");
                count += 1;
            }
        }
    }
    Ok(format!("{count} instances × 2 sides, m ≤ 5"))
}

/// Shuffle the first `prefix` entries of `seq`.
fn shuffle_prefix(s: &mut Sampler, seq: &IndexSequence, prefix: usize) -> IndexSequence {
    let mut v: Vec<usize> = s.permutation(prefix).iter().map(|&j| seq[j]).collect();
    v.extend_from_slice(&seq.as_slice()[prefix..]);
    IndexSequence::new(v).unwrap()
}

fn symmetry() -> Outcome {
    const PERMS: usize = 20;
    let mut s = Sampler::new(5);
    let mut instances = 0;
    for block in [None, Some(2)] {
        for m in 1..=4 {
            // the symmetry is stated for matrices generic under every
            // reordering; redraw until all sampled reorderings are
            let (d, cols, rows, f, g, perms) = loop {
                let (d, cols, rows, f, g) = generic_instance(&mut s, m, block);
                let perms: Vec<_> = (0..PERMS)
                    .map(|_| {
                        let right = (shuffle_prefix(&mut s, &cols, m + 1), shuffle_prefix(&mut s, &rows, m));
                        let left = (shuffle_prefix(&mut s, &cols, m), shuffle_prefix(&mut s, &rows, m + 1));
                        (right, left)
                    })
                    .collect();
                if perms.iter().all(|((rc, rr), (lc, lr))| {
                    biorthogonalize_permuted(&d, rc, rr).is_ok() && biorthogonalize_permuted(&d, lc, lr).is_ok()
                }) {
                    break (d, cols, rows, f, g, perms);
                }
            };
            let right = delta_right(&f, &d, &cols, &rows, Algorithm::Biortho).map_err(|e| e.to_string())?;
            let left = delta_left(&g, &d, &cols, &rows, Algorithm::Biortho).map_err(|e| e.to_string())?;
            for ((rc, rr), (lc, lr)) in &perms {
                let r = delta_right(&f, &d, rc, rr, Algorithm::Biortho).map_err(|e| e.to_string())?;
                let l = delta_left(&g, &d, lc, lr, Algorithm::Biortho).map_err(|e| e.to_string())?;
                ensure!(r == right, "Δ_R changed under reordering, m={m} {block:?}");
                ensure!(l == left, "Δ_L changed under reordering, m={m} {block:?}");
            }
            instances += 1;
        }
    }
    Ok(format!("{instances} instances × {PERMS} reorderings per side"))
}

/// Interpolating polynomial by solving the Vandermonde system directly.
fn dense_solve(nodes: &[Rational], values: &[Rational]) -> Polynomial {
    let n = nodes.len();
    let a = Matrix::from_fn(n, n, |i, k| nodes[i].pow(k as u32));
    let z = a.invert().unwrap();
    Polynomial::new((0..n).map(|k| (0..n).map(|i| z.get(k, i) * &values[i]).sum()).collect())
}

fn classical_newton() -> Outcome {
    let mut s = Sampler::new(6);
    for trial in 0..100 {
        let n = trial % 9;
        let nodes = s.distinct_rationals(n + 1);
        let values = s.rationals(n + 1);
        let fit = newton_interpolate(&NodeSet::new(nodes.clone()).unwrap(), &values, n).map_err(|e| e.to_string())?;
        ensure!(fit.polynomial == lagrange_polynomial(&nodes, &values), "trial {trial}: differs from Lagrange");
        ensure!(fit.polynomial == dense_solve(&nodes, &values), "trial {trial}: differs from the dense solve");
        for (m, ((diff, pivot), basis)) in fit.differences().iter().zip(fit.pivots()).zip(fit.basis()).enumerate() {
            ensure!(*diff == divided_difference(&nodes[..=m], &values[..=m]), "trial {trial}: difference {m}");
            let product: Rational = nodes[..m].iter().fold(Rational::one(), |p, x| p * (&nodes[m] - x));
            ensure!(pivot == product, "trial {trial}: pivot {m} ≠ ∏(x_m − x_j)");
            ensure!(basis == Polynomial::from_roots(&nodes[..m]), "trial {trial}: basis {m} ≠ ∏(x − x_j)");
        }
    }
    Ok("100 node sets, n ≤ 8".into())
}

fn classical_taylor() -> Outcome {
    let mut s = Sampler::new(7);
    let mut cases = 0;
    for _ in 0..40 {
        let f = s.polynomial(8);
        let x0 = s.rational();
        let deg = f.degree().unwrap_or(0);
        for n in [deg.saturating_sub(2), deg, deg + 1] {
            let derivs = f.derivatives_at(&x0, n);
            let fit = taylor_interpolate(&x0, &derivs, n).map_err(|e| e.to_string())?;
            ensure!(fit.polynomial == taylor_polynomial(&x0, &derivs), "S_n ≠ Taylor polynomial (n={n})");
            ensure!(fit.polynomial == f.shift(&x0).truncate(n).shift(&-&x0), "S_n ≠ truncation of f (n={n})");
            for (m, term) in fit.expansion.terms().iter().enumerate() {
                let fact = Rational::factorial(m);
                ensure!(term.pivot == fact, "pivot {m} ≠ {m}!");
                ensure!(term.delta_right == &derivs[m] / &fact, "Δ_R^{m} ≠ f^({m})(x0)/{m}!");
                let power = Polynomial::from_roots(std::iter::repeat_n(&x0, m)).scale(&fact.recip().unwrap());
                ensure!(term.delta_left == power, "Δ_L^{m} ≠ (x − x0)^{m}/{m}!");
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} polynomial/order pairs"))
}

fn confluent_limit() -> Outcome {
    let mut checks = 0;
    for d in 0..=6usize {
        for m in 0..=d {
            for x0 in [Rational::zero(), Rational::new(1, 3), Rational::from_integer(2)] {
                let f = Polynomial::monomial(d);
                let mut errors = Vec::new();
                for j in 1..=6 {
                    let eps = Rational::new(1, 1 << j);
                    let (diff, limit) = confluent_limit_check(&f, &x0, m, &eps).map_err(|e| e.to_string())?;
                    errors.push((diff - limit).abs());
                }
                for (j, w) in errors.windows(2).enumerate() {
                    ensure!(
                        &w[1] * &Rational::from_integer(2) <= w[0],
                        "d={d} m={m} x0={x0}: error at eps=1/{} is not at most half the error at eps=1/{}",
                        1 << (j + 2),
                        1 << (j + 1)
                    );
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} halvings, d ≤ 6, eps = 1/2 … 1/64"))
}

fn gram_schmidt_check() -> Outcome {
    let mut s = Sampler::new(9);
    for trial in 0..50 {
        let size = 1 + trial % 7;
        let n = size - 1;
        let g = s.spd_matrix(size);
        let data = GramData::new(g.clone()).map_err(|e| e.to_string())?;
        let b = gram_schmidt(&data, n).map_err(|e| e.to_string())?;
        let cgc = b.c().mul(&g).and_then(|x| x.mul(&b.c().transpose())).map_err(|e| e.to_string())?;
        let norms = orthogonal_norms(&data, &b).map_err(|e| e.to_string())?;
        for (m, norm) in norms.iter().enumerate() {
            ensure!(cgc.get(m, m) == norm, "trial {trial}: norm {m}");
            for l in (0..size).filter(|&l| l != m) {
                ensure!(cgc.get(m, l).is_zero(), "trial {trial}: C·G·Cᵀ has ({m},{l}) ≠ 0");
            }
        }
        let f = s.rationals(size);
        let h = s.rationals(size);
        for k in 0..=n {
            let expansion = orthogonal_expansion(&data, &f, &h, k).map_err(|e| e.to_string())?;
            let pairing = pairing_truncated(&f, &h, &g, k).map_err(|e| e.to_string())?;
            ensure!(expansion == pairing, "trial {trial}: orthogonal expansion ≠ pairing at order {k}");
        }
    }
    Ok("50 Gram matrices, order ≤ 6".into())
}

fn schur() -> Outcome {
    let mut s = Sampler::new(10);
    let mut count = 0;
    for m in 0..=4 {
        for _ in 0..3 {
            let nodes = NodeSet::new(s.distinct_rationals(m + 1)).unwrap();
            let d = vandermonde(&nodes, m).map_err(|e| e.to_string())?;
            let all = IndexSequence::range(m + 1);
            for k in 0..=m + 4 {
                let row: Vec<Rational> = nodes.nodes().iter().map(|x| x.pow(k as u32)).collect();
                let expected = if k < m { Rational::zero() } else { complete_homogeneous(k - m, nodes.nodes()) };
                for alg in Algorithm::ALL {
                    let got = delta_right(&row, &d, &all, &all, alg).map_err(|e| e.to_string())?;
                    ensure!(got == expected, "m={m} k={k} ({alg}): Δ^m x^k ≠ h_(k−m)");
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} (m, k) pairs, m ≤ 4, k ≤ m+4"))
}

fn cli_corpus() -> Outcome {
    let cases = common::golden::cases();
    ensure!(cases.len() >= 12, "only {} golden jobs", cases.len());
    for command in ["invert", "biortho", "diffderiv", "newton", "taylor", "gram"] {
        ensure!(cases.iter().any(|c| c.args[0] == command), "no golden job for {command}");
    }
    let mut statuses: Vec<String> = Vec::new();
    for case in &cases {
        common::golden::check(case)?;
        statuses.push(std::fs::read_to_string(case.dir.join("status")).unwrap().trim().to_string());
    }
    for code in ["0", "2", "3", "4"] {
        ensure!(statuses.iter().any(|s| s == code), "no golden job exits with {code}");
    }
    Ok(format!("{} jobs, byte-stable", cases.len()))
}

fn main() {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("inverse by quasideterminant expansion equals elimination", Box::new(|| inverse_expansion(&corpus))),
        ("Newton expansion sum equals the truncated pairing", Box::new(|| newton_identity(&corpus))),
        ("D·A, C·D unitriangular and D⁻¹ = A·diag(pivots)·C", Box::new(|| factorization(&corpus))),
        ("recurrence, quasideterminant and biorthogonal derivatives agree", Box::new(three_way_agreement)),
        ("difference derivatives are symmetric under reordering", Box::new(symmetry)),
        ("classical Newton interpolation recovered", Box::new(classical_newton)),
        ("classical Taylor expansion recovered", Box::new(classical_taylor)),
        ("confluent divided differences converge at least linearly", Box::new(confluent_limit)),
        ("Gram–Schmidt orthogonality and orthogonal expansion", Box::new(gram_schmidt_check)),
        ("Vandermonde derivatives are complete homogeneous polynomials", Box::new(schur)),
        ("CLI golden corpus", Box::new(cli_corpus)),
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {:>2} {name} — {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2} {name} — {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
