//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test -p matconj --test acceptance -- --nocapture`
//! to see the lines.

mod common;

use std::time::Instant;

use common::*;
use matconj::random::SplitMix64;
use matconj::{
    abs_matrix, bound_interpolation_diag, bound_spectral, bound_triangular, bound_von_neumann,
    conjugate, conjugating_polynomial, convergence_study, disc_omission_error,
    divided_differences, eval_poly_at_matrix, operator_norm, phi_hermite, phi_integral,
    phi_parlett, polar_representation, pompeiu_scalar, random_experiment, schur_decompose,
    CMatrix, Complex64, Disc, DiscSet, HermitePolynomial, Method, QuadratureConfig, Spectrum,
    StudyMode, WirtingerFunction,
};

struct Criterion {
    number: u32,
    label: &'static str,
    failures: Vec<String>,
    started: Instant,
    budget_seconds: f64,
}

impl Criterion {
    fn new(number: u32, label: &'static str, budget_seconds: f64) -> Self {
        Criterion { number, label, failures: Vec::new(), started: Instant::now(), budget_seconds }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(mut self) {
        let elapsed = self.started.elapsed().as_secs_f64();
        if elapsed > self.budget_seconds {
            self.failures.push(format!(
                "runtime {elapsed:.1}s exceeded the {:.0}s budget",
                self.budget_seconds
            ));
        }
        let verdict = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "[acceptance] criterion {} ({}): {verdict} ({elapsed:.1}s)",
            self.number, self.label
        );
        assert!(
            self.failures.is_empty(),
            "criterion {} ({}) failed:\n  {}",
            self.number,
            self.label,
            self.failures.join("\n  ")
        );
    }
}

fn frob(a: &CMatrix) -> f64 {
    a.frobenius_norm()
}

fn tau() -> WirtingerFunction {
    WirtingerFunction::tau()
}

// ------------------------------------------------------------------------
// Criterion 1: the six defining properties of the conjugation map hold on
// at least 200 random fixtures of sizes 2..8; the involution property holds
// exactly for diagonalizable fixtures and fails for every defective one.
// ------------------------------------------------------------------------
#[test]
fn criterion_1_axiom_suite() {
    let mut cr = Criterion::new(1, "axiom suite", 60.0);

    // (i) basis projectors are fixed points
    for n in 2..=8usize {
        for j in 0..n {
            let mut e = CMatrix::zeros(n, n);
            e[(j, j)] = ONE;
            let ec = conjugate(&e, Method::Parlett, 1e-8).unwrap();
            cr.check(frob(&(&ec - &e)) <= 1e-10, || {
                format!("(i) projector e_{j} of size {n} moved by {}", frob(&(&ec - &e)))
            });
        }
    }

    let mut rng = SplitMix64::new(0xAC5);
    let mut defective_seen = 0usize;
    let mut diagonalizable_seen = 0usize;
    for seed in 0..200u64 {
        let fixture = random_fixture(seed);
        let a = &fixture.matrix;
        let n = a.rows();
        let tol = fixture_tol(a);
        let ac = conjugate(a, Method::Parlett, tol).unwrap();

        // (ii) conjugate homogeneity
        let alpha = Complex64::new(0.5 + rng.next_f64(), rng.next_centered());
        let lhs = conjugate(&a.scale(alpha), Method::Parlett, tol * alpha.norm().max(1.0)).unwrap();
        let rhs = ac.scale(alpha.conj());
        cr.check(frob(&(&lhs - &rhs)) <= 1e-6 * (1.0 + frob(&rhs)), || {
            format!("(ii) {}: scaling violated by {}", fixture.label, frob(&(&lhs - &rhs)))
        });

        // (iii) similarity covariance, tolerance scaled by the conditioning
        let (t, t_inv) = unitriangular_with_inverse(n, seed ^ 0x51, 0.25);
        let kappa = operator_norm(&t) * operator_norm(&t_inv);
        let lhs = conjugate(&similarity(&t, &t_inv, a), Method::Parlett, tol).unwrap();
        let rhs = similarity(&t, &t_inv, &ac);
        cr.check(frob(&(&lhs - &rhs)) <= 1e-6 * kappa * kappa * (1.0 + frob(&rhs)), || {
            format!("(iii) {}: similarity violated by {}", fixture.label, frob(&(&lhs - &rhs)))
        });

        // (iv) additivity over a commuting pair (both linear in A, so the
        // cluster structures stay aligned)
        let p_a = &a.scale(Complex64::new(0.7, -0.1)) + &CMatrix::identity(n).scale(Complex64::new(0.3, 0.0));
        let q_a = &a.scale(Complex64::new(-0.4, 0.5)) + &CMatrix::identity(n).scale(Complex64::new(-0.1, 0.2));
        let sum = &p_a + &q_a;
        let lhs = conjugate(&sum, Method::Parlett, tol).unwrap();
        let rhs = &conjugate(&p_a, Method::Parlett, tol).unwrap()
            + &conjugate(&q_a, Method::Parlett, tol).unwrap();
        cr.check(frob(&(&lhs - &rhs)) <= 1e-6 * (1.0 + frob(&rhs)), || {
            format!("(iv) {}: additivity violated by {}", fixture.label, frob(&(&lhs - &rhs)))
        });

        // (v) the conjugate commutes with polynomials in A
        let b = {
            let sq = &(a * a).scale(Complex64::new(0.2, 0.1));
            &(sq + &a.scale(Complex64::new(-0.5, 0.4))) + &CMatrix::identity(n).scale(Complex64::new(0.1, -0.3))
        };
        let comm = &(&ac * &b) - &(&b * &ac);
        cr.check(frob(&comm) <= 1e-6 * (1.0 + frob(&ac) * frob(&b)), || {
            format!("(v) {}: commutator has norm {}", fixture.label, frob(&comm))
        });

        // (vi) the conjugate is an involution exactly on diagonalizable input
        let acc = conjugate(&ac, Method::Parlett, fixture_tol(&ac)).unwrap();
        let drift = frob(&(&acc - a)) / frob(a).max(1.0);
        if fixture.defective {
            defective_seen += 1;
            cr.check(drift > 1e-3, || {
                format!("(vi) {}: defective fixture should not be recovered, drift {drift}", fixture.label)
            });
        } else {
            diagonalizable_seen += 1;
            cr.check(drift <= 1e-6, || {
                format!("(vi) {}: diagonalizable fixture drifted by {drift}", fixture.label)
            });
        }
    }
    cr.check(defective_seen >= 30, || format!("only {defective_seen} defective fixtures sampled"));
    cr.check(diagonalizable_seen >= 30, || {
        format!("only {diagonalizable_seen} diagonalizable fixtures sampled")
    });

    // (iv) once more with a quadratic pair on a clean diagonalizable matrix
    {
        let u = matconj::random::random_unitary(4, 4242);
        let d = CMatrix::from_diag(&[c(1.0, 0.0), c(-1.0, 1.0), c(2.0, -0.5), c(0.3, 1.5)]);
        let m = &(&u * &d) * &u.adjoint();
        let p_m = &(&m * &m).scale(c(0.3, 0.0)) + &m;
        let q_m = &m.scale(c(0.0, 0.5)) + &CMatrix::identity(4).scale(c(0.7, 0.0));
        let tol = fixture_tol(&m);
        let lhs = conjugate(&(&p_m + &q_m), Method::Parlett, tol).unwrap();
        let rhs = &conjugate(&p_m, Method::Parlett, tol).unwrap()
            + &conjugate(&q_m, Method::Parlett, tol).unwrap();
        cr.check(frob(&(&lhs - &rhs)) <= 1e-6 * (1.0 + frob(&rhs)), || {
            format!("(iv) quadratic pair: additivity violated by {}", frob(&(&lhs - &rhs)))
        });
    }

    cr.finish();
}

// ------------------------------------------------------------------------
// Criterion 2: the interpolation, block-recurrence, and quadrature routes
// agree pairwise within 1e-5 (1 + ||result||) for the four test functions
// on the curated suite with Jordan blocks up to size 4.
// ------------------------------------------------------------------------
#[test]
fn criterion_2_cross_method_agreement() {
    let mut cr = Criterion::new(2, "cross-method agreement", 120.0);
    let functions: Vec<(&str, WirtingerFunction)> = vec![
        ("tau", tau()),
        ("|z|^2", WirtingerFunction::monomial(1, 1)),
        ("zbar^2", WirtingerFunction::monomial(0, 2)),
        ("z^2", WirtingerFunction::holo_poly(vec![ZERO, ZERO, ONE])),
    ];
    let cfg = QuadratureConfig::default();
    for fixture in cross_method_suite() {
        let a = &fixture.matrix;
        let tol = fixture_tol(a);
        let s = schur_decompose(a, tol).unwrap();
        let spec = matconj::eigen_structure(&s, tol);
        let discs = DiscSet::around_spectrum(&spec, operator_norm(a)).unwrap();
        for (name, f) in &functions {
            let h = phi_hermite(f, a, tol).unwrap();
            let p = phi_parlett(f, a, tol).unwrap();
            let q = phi_integral(f, a, &discs, &cfg).unwrap();
            let pairs = [("hermite/parlett", &h, &p), ("hermite/integral", &h, &q), ("parlett/integral", &p, &q)];
            for (pair, x, y) in pairs {
                let diff = frob(&(x - y));
                let allowed = 1e-5 * (1.0 + frob(y));
                cr.check(diff <= allowed, || {
                    format!("{} / {name} / {pair}: differ by {diff} (allowed {allowed})", fixture.label)
                });
            }
        }
    }
    cr.finish();
}

// ------------------------------------------------------------------------
// Criterion 3: closed forms reproduced to 1e-8.
// ------------------------------------------------------------------------
#[test]
fn criterion_3_closed_forms() {
    let mut cr = Criterion::new(3, "closed forms", 60.0);
    let close = |got: &CMatrix, expected: &CMatrix| -> (bool, f64) {
        let diff = frob(&(got - expected));
        (diff <= 1e-8 * (1.0 + frob(expected)), diff)
    };

    // conjugate of a Jordan block is the conjugated scalar matrix
    for size in 2..=4usize {
        let lambda = c(0.8, -0.6);
        let j = jordan_block(lambda, size);
        let expected = CMatrix::identity(size).scale(lambda.conj());
        for method in [Method::Hermite, Method::Parlett] {
            let got = conjugate(&j, method, 1e-8).unwrap();
            let (ok, diff) = close(&got, &expected);
            cr.check(ok, || format!("jordan {size} via {}: off by {diff}", method.name()));
        }
    }

    // triangular 2x2 with distinct eigenvalues: the corner element
    {
        let (alpha, beta, gamma) = (c(1.1, 0.8), c(-0.4, 0.3), c(2.0, -1.5));
        let a = CMatrix::from_rows(vec![vec![alpha, gamma], vec![ZERO, beta]]).unwrap();
        let corner = (alpha.conj() - beta.conj()) / (alpha - beta) * gamma;
        let expected =
            CMatrix::from_rows(vec![vec![alpha.conj(), corner], vec![ZERO, beta.conj()]]).unwrap();
        let got = conjugate(&a, Method::Parlett, 1e-8).unwrap();
        let (ok, diff) = close(&got, &expected);
        cr.check(ok, || format!("distinct-eigenvalue corner: off by {diff}"));
    }

    // five extensions of the real square function on a 2x2 Jordan block
    {
        let lambda = c(0.7, 0.9);
        let a = jordan_block(lambda, 2);
        let tol = 1e-8;
        let cases: Vec<(&str, WirtingerFunction, Complex64, Complex64)> = vec![
            // (label, function, diagonal value, corner value)
            ("z^2", WirtingerFunction::holo_poly(vec![ZERO, ZERO, ONE]), lambda * lambda, 2.0 * lambda),
            ("|z|^2", WirtingerFunction::monomial(1, 1), lambda * lambda.conj(), lambda.conj()),
            ("zbar^2", WirtingerFunction::monomial(0, 2), lambda.conj() * lambda.conj(), ZERO),
            (
                "(Re z)^2",
                WirtingerFunction::zzbar_poly(vec![
                    (2, 0, c(0.25, 0.0)),
                    (1, 1, c(0.5, 0.0)),
                    (0, 2, c(0.25, 0.0)),
                ]),
                c(lambda.re * lambda.re, 0.0),
                c(lambda.re, 0.0),
            ),
            (
                "Re(z^2)",
                WirtingerFunction::zzbar_poly(vec![(2, 0, c(0.5, 0.0)), (0, 2, c(0.5, 0.0))]),
                c((lambda * lambda).re, 0.0),
                lambda,
            ),
        ];
        let mut results = Vec::new();
        for (label, f, diag, corner) in &cases {
            let got = phi_parlett(f, &a, tol).unwrap();
            let expected =
                CMatrix::from_rows(vec![vec![*diag, *corner], vec![ZERO, *diag]]).unwrap();
            let (ok, diff) = close(&got, &expected);
            cr.check(ok, || format!("extension {label}: off by {diff}"));
            results.push(got);
        }
        // the five matrices are genuinely different
        for i in 0..results.len() {
            for j in i + 1..results.len() {
                cr.check(frob(&(&results[i] - &results[j])) > 1e-3, || {
                    format!("extensions {i} and {j} coincide")
                });
            }
        }
        // the local extension of the real data reproduces the holomorphic one
        let real_lambda = 1.3;
        let a_real = jordan_block(c(real_lambda, 0.0), 2);
        let ext = WirtingerFunction::real_extension(vec![(
            real_lambda,
            vec![real_lambda * real_lambda, 2.0 * real_lambda, 2.0],
        )])
        .unwrap();
        let got = phi_parlett(&ext, &a_real, tol).unwrap();
        let expected = &a_real * &a_real;
        let (ok, diff) = close(&got, &expected);
        cr.check(ok, || format!("real extension of the square: off by {diff}"));
    }

    // rank-one matrices
    {
        let mut rng = SplitMix64::new(31415);
        let n = 5;
        let u: Vec<Complex64> = (0..n).map(|_| rng.next_complex_centered() + c(0.3, 0.0)).collect();
        let v: Vec<Complex64> = (0..n).map(|_| rng.next_complex_centered() + c(0.0, 0.3)).collect();
        let overlap: Complex64 = v.iter().zip(u.iter()).map(|(vi, ui)| vi.conj() * ui).sum();
        assert!(overlap.norm() > 0.05, "fixture overlap too small");
        let r = CMatrix::from_fn(n, n, |i, j| u[i] * v[j].conj());
        let got = conjugate(&r, Method::Parlett, matconj::default_cluster_tol(&r)).unwrap();
        let expected = r.scale(overlap.conj() / overlap);
        let (ok, diff) = close(&got, &expected);
        cr.check(ok, || format!("rank-one with overlap: off by {diff}"));

        // orthogonal pair: the conjugate vanishes
        let uu: Complex64 = u.iter().map(|z| z.conj() * z).sum();
        let vu: Complex64 = u.iter().zip(v.iter()).map(|(ui, vi)| ui.conj() * vi).sum();
        let w: Vec<Complex64> = (0..n).map(|i| v[i] - u[i] * (vu / uu)).collect();
        let r0 = CMatrix::from_fn(n, n, |i, j| u[i] * w[j].conj());
        let got0 = conjugate(&r0, Method::Parlett, fixture_tol(&r0)).unwrap();
        cr.check(frob(&got0) <= 1e-8 * (1.0 + frob(&r0)), || {
            format!("rank-one orthogonal: conjugate has norm {}", frob(&got0))
        });
    }

    // companion matrices
    {
        let (l1, l2) = (c(1.0, 0.5), c(-0.7, 0.2));
        let comp = CMatrix::from_rows(vec![
            vec![ZERO, -l1 * l2],
            vec![ONE, l1 + l2],
        ])
        .unwrap();
        let got = conjugate(&comp, Method::Parlett, matconj::default_cluster_tol(&comp)).unwrap();
        let scale = 1.0 / (l2 - l1);
        let expected = CMatrix::from_rows(vec![
            vec![
                (l2 * l1.conj() - l1 * l2.conj()) * scale,
                (l2 * l1.norm_sqr() - l1 * l2.norm_sqr()) * scale,
            ],
            vec![(l2.conj() - l1.conj()) * scale, (l2.norm_sqr() - l1.norm_sqr()) * scale],
        ])
        .unwrap();
        let (ok, diff) = close(&got, &expected);
        cr.check(ok, || format!("companion with distinct roots: off by {diff}"));

        // double root: the conjugate is diagonal
        let lam = c(0.6, -0.9);
        let comp2 = CMatrix::from_rows(vec![vec![ZERO, -lam * lam], vec![ONE, 2.0 * lam]]).unwrap();
        let got2 = conjugate(&comp2, Method::Parlett, fixture_tol(&comp2)).unwrap();
        let expected2 = CMatrix::identity(2).scale(lam.conj());
        let (ok2, diff2) = close(&got2, &expected2);
        cr.check(ok2, || format!("companion with double root: off by {diff2}"));
    }

    // block-triangular matrix through the coupling Sylvester equation
    {
        let a_block = {
            let m = matconj::random::uniform_complex_matrix(3, 7101);
            &m - &CMatrix::identity(3).scale(c(2.0, 0.0))
        };
        let b_block = {
            let m = matconj::random::uniform_complex_matrix(2, 7102);
            &m + &CMatrix::identity(2).scale(c(2.0, 0.0))
        };
        let coupling = matconj::random::uniform_complex_matrix(3, 7103).submatrix(0..3, 0..2);
        let mut big = CMatrix::zeros(5, 5);
        big.set_submatrix(0, 0, &a_block);
        big.set_submatrix(0, 3, &coupling);
        big.set_submatrix(3, 3, &b_block);
        let x = solve_sylvester_full(&a_block, &b_block, &coupling);
        let ac = conjugate(&a_block, Method::Parlett, matconj::default_cluster_tol(&a_block)).unwrap();
        let bc = conjugate(&b_block, Method::Parlett, matconj::default_cluster_tol(&b_block)).unwrap();
        let top_right = &(&ac * &x) - &(&x * &bc);
        let mut expected = CMatrix::zeros(5, 5);
        expected.set_submatrix(0, 0, &ac);
        expected.set_submatrix(0, 3, &top_right);
        expected.set_submatrix(3, 3, &bc);
        let got = conjugate(&big, Method::Parlett, matconj::default_cluster_tol(&big)).unwrap();
        let (ok, diff) = close(&got, &expected);
        cr.check(ok, || format!("block-triangular: off by {diff}"));
    }

    // coupled and uncoupled chains with a small eigenvalue
    {
        let lambda = c(0.08, 0.06);
        let n = 4;
        let (b0, b) = chained_pair(lambda, n);
        // conjugating polynomial is the scaled monomial of degree n-1
        let spec = Spectrum::from_pairs(&[(lambda, 1), (ZERO, n - 1)], 1e-8).unwrap();
        let poly = conjugating_polynomial(&spec).unwrap();
        let top = lambda.conj() / lambda.powu(3);
        for (k, coeff) in poly.coefficients.iter().enumerate() {
            let expected = if k == 3 { top } else { ZERO };
            cr.check((coeff - expected).norm() <= 1e-8 * (1.0 + top.norm()), || {
                format!("chain conjugating polynomial coefficient {k} off: {coeff} vs {expected}")
            });
        }
        let b0c = conjugate(&b0, Method::Parlett, 1e-6).unwrap();
        let mut expected0 = CMatrix::zeros(n, n);
        expected0[(0, 0)] = lambda.conj();
        let (ok0, diff0) = close(&b0c, &expected0);
        cr.check(ok0, || format!("uncoupled chain conjugate: off by {diff0}"));
        let bc = conjugate(&b, Method::Parlett, 1e-6).unwrap();
        let mut expected_b = CMatrix::zeros(n, n);
        expected_b[(0, 0)] = lambda.conj();
        for k in 1..n {
            expected_b[(0, k)] = lambda.conj() * lambda.powi(-(k as i32));
        }
        let (okb, diffb) = close(&bc, &expected_b);
        cr.check(okb, || format!("coupled chain conjugate: off by {diffb}"));
    }

    // perturbed double eigenvalue: discontinuous polynomial coefficients,
    // continuous values
    {
        let (lam, mu) = (c(0.5, 0.3), c(-0.8, 0.1));
        let closed_eps = |eps: f64, z: Complex64| -> Complex64 {
            let eps2 = c(eps * eps, 0.0);
            let den = (mu - lam) * (mu - lam) - eps2;
            lam.conj() * (ONE - ((z - lam) * (z - lam) - eps2) / den)
                + (z - mu) * ((z - lam) * (lam - mu) - eps2) / den
                + mu.conj() * ((z - lam) * (z - lam) - eps2) / den
        };
        let closed_zero = |z: Complex64| -> Complex64 {
            let u = (z - mu) / (lam - mu);
            let v = (z - lam) / (mu - lam);
            lam.conj() * u * (2.0 - u) + mu.conj() * v * v
        };
        let spec0 = Spectrum::from_pairs(&[(lam, 2), (mu, 1)], 1e-8).unwrap();
        let poly0 = conjugating_polynomial(&spec0).unwrap();
        for probe in [c(0.2, -0.1), c(1.0, 1.0), c(-0.3, 0.6)] {
            cr.check((poly0.eval(probe) - closed_zero(probe)).norm() <= 1e-8, || {
                format!("confluent conjugating polynomial off at {probe}")
            });
        }
        let mut errors = Vec::new();
        for &eps in &[1e-1, 1e-2, 1e-3] {
            let spec_eps = Spectrum::from_pairs(
                &[(lam + c(eps, 0.0), 1), (lam - c(eps, 0.0), 1), (mu, 1)],
                1e-9,
            )
            .unwrap();
            let poly_eps = conjugating_polynomial(&spec_eps).unwrap();
            for probe in [c(0.2, -0.1), c(1.0, 1.0)] {
                cr.check((poly_eps.eval(probe) - closed_eps(eps, probe)).norm() <= 1e-8, || {
                    format!("perturbed conjugating polynomial off at {probe}, eps {eps}")
                });
            }
            // evaluated at the perturbed matrix the discontinuity cancels
            let a_eps = CMatrix::from_diag(&[lam + c(eps, 0.0), lam - c(eps, 0.0), mu]);
            let p_eps = HermitePolynomial::from_monomial_coefficients(poly_eps.coefficients.clone());
            let p_zero = HermitePolynomial::from_monomial_coefficients(poly0.coefficients.clone());
            let diff = frob(
                &(&eval_poly_at_matrix(&p_eps, &a_eps).unwrap()
                    - &eval_poly_at_matrix(&p_zero, &a_eps).unwrap()),
            );
            errors.push((eps, diff));
        }
        // the difference decays linearly in eps
        let slope = {
            let pts: Vec<(f64, f64)> = errors.iter().map(|&(e, d)| (e.ln(), d.ln())).collect();
            let n = pts.len() as f64;
            let sx: f64 = pts.iter().map(|p| p.0).sum();
            let sy: f64 = pts.iter().map(|p| p.1).sum();
            let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
            let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
            (n * sxy - sx * sy) / (n * sxx - sx * sx)
        };
        cr.check((0.8..=1.2).contains(&slope), || {
            format!("perturbed-vs-confluent value difference should decay linearly, slope {slope}")
        });
    }

    // polar data of the triangular 2x2 examples
    {
        let (alpha, beta, gamma) = (c(1.5, 0.9), c(0.2, -0.5), c(0.8, 0.4));
        let a = CMatrix::from_rows(vec![vec![alpha, gamma], vec![ZERO, beta]]).unwrap();
        let abs_a = abs_matrix(&a).unwrap();
        let expected_abs = CMatrix::from_rows(vec![
            vec![c(alpha.norm(), 0.0), (alpha.norm() - beta.norm()) / (alpha - beta) * gamma],
            vec![ZERO, c(beta.norm(), 0.0)],
        ])
        .unwrap();
        let (ok, diff) = close(&abs_a, &expected_abs);
        cr.check(ok, || format!("abs of distinct-moduli triangle: off by {diff}"));
        let parts = polar_representation(&a).unwrap();
        let expected_v = CMatrix::from_rows(vec![
            vec![alpha / alpha.norm(), (alpha / alpha.norm() - beta / beta.norm()) * gamma / (alpha - beta)],
            vec![ZERO, beta / beta.norm()],
        ])
        .unwrap();
        let (okv, diffv) = close(&parts.v_part, &expected_v);
        cr.check(okv, || format!("polar factor of distinct-moduli triangle: off by {diffv}"));

        let a_eq = CMatrix::from_rows(vec![vec![alpha, gamma], vec![ZERO, alpha]]).unwrap();
        let abs_eq = abs_matrix(&a_eq).unwrap();
        let expected_abs_eq = CMatrix::from_rows(vec![
            vec![c(alpha.norm(), 0.0), alpha.conj() / (2.0 * alpha.norm()) * gamma],
            vec![ZERO, c(alpha.norm(), 0.0)],
        ])
        .unwrap();
        let (oke, diffe) = close(&abs_eq, &expected_abs_eq);
        cr.check(oke, || format!("abs of equal-eigenvalue triangle: off by {diffe}"));
        let parts_eq = polar_representation(&a_eq).unwrap();
        let phase = alpha / alpha.norm();
        let expected_v_eq = CMatrix::from_rows(vec![
            vec![phase, gamma / (2.0 * alpha.norm())],
            vec![ZERO, phase],
        ])
        .unwrap();
        let (okve, diffve) = close(&parts_eq.v_part, &expected_v_eq);
        cr.check(okve, || format!("polar factor of equal-eigenvalue triangle: off by {diffve}"));
    }

    // second-order divided difference of the conjugation on a rotated pair
    // of nearby nodes; the oracle is the leading coefficient of the
    // quadratic interpolant, sum_i y_i / prod_{j != i} (x_i - x_j)
    {
        let lambda = c(0.4, -0.2);
        let eps = 1e-2;
        let nodes = [lambda, lambda + c(eps, 0.0), lambda + c(0.0, eps)];
        let values: Vec<Complex64> = nodes.iter().map(|z| z.conj()).collect();
        let mut oracle = ZERO;
        for i in 0..3 {
            let mut denom = ONE;
            for j in 0..3 {
                if i != j {
                    denom *= nodes[i] - nodes[j];
                }
            }
            oracle += values[i] / denom;
        }
        let table = divided_differences(&tau(), &nodes).unwrap();
        let got = table.entry(0, 2);
        cr.check((got - oracle).norm() <= 1e-8 * oracle.norm(), || {
            format!("rotated-pair divided difference {got} vs oracle {oracle}")
        });
        // magnitude grows like 1/eps: the map is unbounded
        cr.check((got.norm() - (2.0f64).sqrt() / eps).abs() <= 1e-4 / eps, || {
            format!("rotated-pair difference should have modulus sqrt(2)/eps, got {}", got.norm())
        });
    }

    cr.finish();
}

// ------------------------------------------------------------------------
// Criterion 4: disc-omission error laws on a 4x4 fixture with known Jordan
// structure: boundary-only decays linearly, area-corrected evaluations
// quadratically, and the omitted-mass quadrature matches the closed form.
// ------------------------------------------------------------------------
#[test]
fn criterion_4_disc_omission_laws() {
    let mut cr = Criterion::new(4, "disc-omission error laws", 120.0);
    let lambdas = [c(0.0, 0.0), c(2.0, 0.0), c(3.0, 1.0)];
    let j = block_diag(&[
        jordan_block(lambdas[0], 2),
        jordan_block(lambdas[1], 1),
        jordan_block(lambdas[2], 1),
    ]);
    let (t, t_inv) = unitriangular_with_inverse(4, 97, 0.3);
    let a = similarity(&t, &t_inv, &j);
    let cfg = QuadratureConfig::default();
    let eps_list = [0.1, 0.05, 0.025, 0.0125];
    let cluster_tol = 1e-6;

    let expectations = [
        (StudyMode::BoundaryOnly, 0.8, 1.2),
        (StudyMode::WithAreaCentered, 1.8, 2.2),
        (StudyMode::WithAreaOffcenter, 1.7, 2.2),
    ];
    for (mode, lo, hi) in expectations {
        let table = convergence_study(&a, &eps_list, mode, &cfg, cluster_tol).unwrap();
        let slope = table.fitted_slope;
        cr.check((lo..=hi).contains(&slope), || {
            format!("{}: fitted slope {slope} outside [{lo}, {hi}]", mode.name())
        });
    }

    // omitted-mass quadrature against the closed form
    let radii = [0.05, 0.04, 0.06];
    let discs = DiscSet::new(
        lambdas.iter().zip(radii.iter()).map(|(&z, &r)| Disc { center: z, radius: r }).collect(),
        vec![0.5, 0.5, 0.5],
    )
    .unwrap();
    let quadrature = disc_omission_error(&a, &discs, &cfg).unwrap();
    let closed = {
        // per-block sums over the other discs' radii
        let mut inner = CMatrix::zeros(4, 4);
        let block_info: [(usize, usize, usize); 3] = [(0, 0, 2), (1, 2, 1), (2, 3, 1)];
        for &(j_idx, start, size) in &block_info {
            for i in 0..size {
                let mut coeff = ZERO;
                for (k_idx, &lk) in lambdas.iter().enumerate() {
                    if k_idx != j_idx {
                        let gap = lk - lambdas[j_idx];
                        coeff += c(radii[k_idx] * radii[k_idx], 0.0) / gap.powu(i as u32 + 1);
                    }
                }
                // S^i places coeff on the i-th superdiagonal of the block
                for row in 0..size - i {
                    inner[(start + row, start + row + i)] = coeff;
                }
            }
        }
        similarity(&t, &t_inv, &inner)
    };
    let rel = frob(&(&quadrature - &closed)) / frob(&closed);
    cr.check(rel <= 1e-6, || {
        format!("omitted mass differs from the closed form by relative {rel}")
    });

    // halving the radii divides the omitted mass by four
    let halved = DiscSet::new(
        lambdas
            .iter()
            .zip(radii.iter())
            .map(|(&z, &r)| Disc { center: z, radius: r / 2.0 })
            .collect(),
        vec![0.5, 0.5, 0.5],
    )
    .unwrap();
    let quarter = disc_omission_error(&a, &halved, &cfg).unwrap();
    let ratio = operator_norm(&quadrature) / operator_norm(&quarter);
    cr.check((ratio - 4.0).abs() <= 0.2, || {
        format!("halving radii should quarter the omitted mass, ratio {ratio}")
    });

    cr.finish();
}

// ------------------------------------------------------------------------
// Criterion 5: no bound violations anywhere in the suite.
// ------------------------------------------------------------------------
#[test]
fn criterion_5_bound_sandwiches() {
    let mut cr = Criterion::new(5, "norm bounds", 60.0);
    let guard = 1.0 + 1e-8;

    for seed in 0..60u64 {
        let fixture = random_fixture(seed);
        let a = &fixture.matrix;
        let tol = fixture_tol(a);
        let ac_norm = operator_norm(&conjugate(a, Method::Parlett, tol).unwrap());

        let sb = bound_spectral(a).unwrap();
        cr.check(sb.lower <= ac_norm * guard, || {
            format!("{}: spectral radius {} above ||A^c|| {}", fixture.label, sb.lower, ac_norm)
        });
        if let Some(upper) = sb.upper {
            cr.check(ac_norm <= upper * guard, || {
                format!("{}: ||A^c|| {} above kappa rho {}", fixture.label, ac_norm, upper)
            });
        } else {
            cr.check(fixture.defective, || {
                format!("{}: upper bound missing on a diagonalizable fixture", fixture.label)
            });
        }

        let tb = bound_triangular(a).unwrap();
        cr.check(ac_norm <= tb * guard, || {
            format!("{}: ||A^c|| {} above the triangular bound {}", fixture.label, ac_norm, tb)
        });

        let s = schur_decompose(a, tol).unwrap();
        let spec = matconj::eigen_structure(&s, tol);
        let poly = conjugating_polynomial(&spec).unwrap();
        let vn = bound_von_neumann(&poly, operator_norm(a));
        cr.check(ac_norm <= vn.value * guard, || {
            format!("{}: ||A^c|| {} above the sampled bound {}", fixture.label, ac_norm, vn.value)
        });
    }

    // interpolation bound on normal contractions with spectrum in the disc
    let mut rng = SplitMix64::new(0xB0B);
    for trial in 0..20u64 {
        let n = 3 + (rng.next_u64() % 3) as usize;
        let diag: Vec<Complex64> = (0..n)
            .map(|k| {
                Complex64::from_polar(
                    0.15 + 0.75 * (k as f64 + rng.next_f64()) / n as f64,
                    std::f64::consts::TAU * rng.next_f64(),
                )
            })
            .collect();
        let u = matconj::random::random_unitary(n, 9000 + trial);
        let a = &(&u * &CMatrix::from_diag(&diag)) * &u.adjoint();
        assert!(operator_norm(&a) <= 1.0 + 1e-9);
        let s = schur_decompose(&a, 1e-10).unwrap();
        let spec = matconj::eigen_structure(&s, 1e-10);
        let values: Vec<f64> = spec.representatives().iter().map(|z| z.conj().norm()).collect();
        match bound_interpolation_diag(&spec, &values) {
            Ok(bound) => {
                let phi_norm = operator_norm(&conjugate(&a, Method::Parlett, 1e-10).unwrap());
                cr.check(phi_norm <= bound * guard, || {
                    format!("trial {trial}: ||tau(A)|| {phi_norm} above the interpolation bound {bound}")
                });
            }
            Err(e) => cr.check(false, || format!("trial {trial}: interpolation bound failed: {e}")),
        }
    }

    // the uncoupled chain realizes the lower bound exactly
    {
        let lambda = c(0.08, 0.06);
        let (b0, _) = chained_pair(lambda, 4);
        let sb = bound_spectral(&b0).unwrap();
        let norm = operator_norm(&conjugate(&b0, Method::Parlett, 1e-6).unwrap());
        cr.check((sb.lower - 0.1).abs() <= 1e-9 && (norm - 0.1).abs() <= 1e-8, || {
            format!("chain lower bound {} vs realized {}", sb.lower, norm)
        });
    }

    cr.finish();
}

// ------------------------------------------------------------------------
// Criterion 6: random-matrix trend. The conjugate-to-norm ratio sits inside
// [0.3, 1.5] log n and the norm stays within 2.5 of the spectral radius.
// ------------------------------------------------------------------------
#[test]
fn criterion_6_random_matrix_trend() {
    let mut cr = Criterion::new(6, "random-matrix trend", 300.0);
    let rows = random_experiment(&[50, 100, 200], 20, 0xA11CE).unwrap();
    for row in &rows {
        let log_n = (row.n as f64).ln();
        cr.check(
            row.mean_conj_ratio >= 0.3 * log_n && row.mean_conj_ratio <= 1.5 * log_n,
            || {
                format!(
                    "n={}: mean ||A^c||/||A|| = {:.3} outside [{:.3}, {:.3}]",
                    row.n,
                    row.mean_conj_ratio,
                    0.3 * log_n,
                    1.5 * log_n
                )
            },
        );
        cr.check(row.mean_norm_over_rho <= 2.5, || {
            format!("n={}: mean ||A||/rho = {:.3} above 2.5", row.n, row.mean_norm_over_rho)
        });
        cr.check(row.mean_kappa.is_finite() && row.mean_kappa > 0.0, || {
            format!("n={}: eigenvector conditioning column missing", row.n)
        });
        println!(
            "[acceptance]   n={}: ratio {:.3} (0.7 log n = {:.3}), kappa {:.1} (0.5 n = {}), norm/rho {:.3}",
            row.n,
            row.mean_conj_ratio,
            0.7 * log_n,
            row.mean_kappa,
            row.n / 2,
            row.mean_norm_over_rho
        );
    }
    cr.finish();
}

// ------------------------------------------------------------------------
// Criterion 7: scalar boundary-plus-area checks.
// ------------------------------------------------------------------------
#[test]
fn criterion_7_scalar_quadrature() {
    let mut cr = Criterion::new(7, "scalar quadrature checks", 30.0);
    let cfg = QuadratureConfig::default();

    // the conjugation is reproduced from boundary plus area
    let disc = Disc { center: ZERO, radius: 1.5 };
    for z in [c(0.4, -0.3), c(-0.7, 0.5), c(0.1, 0.9)] {
        let got = pompeiu_scalar(&tau(), z, &disc, 1, 0.0, &cfg).unwrap();
        cr.check((got - z.conj()).norm() <= 1e-6, || {
            format!("conjugation at {z}: estimate {got}")
        });
    }

    // the r^2 correction for |z|^2 restores the value the omitted core eats
    let f = WirtingerFunction::monomial(1, 1);
    let z = c(0.3, 0.2);
    let r = 0.05;
    let corrected = pompeiu_scalar(&f, z, &disc, 1, r, &cfg).unwrap();
    let expected = z * z.conj();
    cr.check((corrected - expected).norm() <= 1e-6, || {
        format!("corrected estimate {corrected} vs {expected}")
    });
    let uncorrected = corrected + c(r * r, 0.0);
    let miss = (uncorrected - expected).norm();
    cr.check((miss - r * r).abs() <= 0.1 * r * r, || {
        format!("uncorrected estimate should miss by about r^2 = {}, missed by {miss}", r * r)
    });

    cr.finish();
}
