//! Fixture builders shared by the integration suites.
#![allow(dead_code)]

use matconj::random::SplitMix64;
use matconj::{schur_decompose, solve_sylvester_tri, CMatrix, Complex64};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn jordan_block(lambda: Complex64, size: usize) -> CMatrix {
    let mut j = CMatrix::zeros(size, size);
    for i in 0..size {
        j[(i, i)] = lambda;
        if i + 1 < size {
            j[(i, i + 1)] = ONE;
        }
    }
    j
}

/// Shift matrix: ones on the first superdiagonal.
pub fn shift_matrix(n: usize) -> CMatrix {
    jordan_block(ZERO, n)
}

pub fn block_diag(blocks: &[CMatrix]) -> CMatrix {
    let n: usize = blocks.iter().map(|b| b.rows()).sum();
    let mut out = CMatrix::zeros(n, n);
    let mut offset = 0;
    for b in blocks {
        out.set_submatrix(offset, offset, b);
        offset += b.rows();
    }
    out
}

/// Unit upper-triangular T with random strict upper part of the given
/// magnitude, together with its exact inverse (finite Neumann series of the
/// nilpotent part).
pub fn unitriangular_with_inverse(n: usize, seed: u64, magnitude: f64) -> (CMatrix, CMatrix) {
    let mut rng = SplitMix64::new(seed);
    let mut nilpotent = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            nilpotent[(i, j)] = rng.next_complex_centered().scale(2.0 * magnitude);
        }
    }
    let t = &CMatrix::identity(n) + &nilpotent;
    let mut inv = CMatrix::identity(n);
    let mut power = CMatrix::identity(n);
    for k in 1..n {
        power = &power * &nilpotent;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        inv = &inv + &power.scale(Complex64::new(sign, 0.0));
    }
    (t, inv)
}

/// T A T^{-1}.
pub fn similarity(t: &CMatrix, t_inv: &CMatrix, a: &CMatrix) -> CMatrix {
    &(t * a) * t_inv
}

/// Solve A X - X B = C for general square A, B with disjoint spectra, by
/// reducing both to Schur form. Test oracle only.
pub fn solve_sylvester_full(a: &CMatrix, b: &CMatrix, rhs: &CMatrix) -> CMatrix {
    let sa = schur_decompose(a, 1e-10).unwrap();
    let sb = schur_decompose(b, 1e-10).unwrap();
    let c_tilde = &(&sa.q.adjoint() * rhs) * &sb.q;
    let y = solve_sylvester_tri(&sa.t, &sb.t, &c_tilde).unwrap();
    &(&sa.q * &y) * &sb.q.adjoint()
}

/// Example matrices with lambda in position (1,1) and a shift chain below:
/// `b0` is the direct sum of [lambda] and a nilpotent chain, `b` couples
/// them through an extra superdiagonal one.
pub fn chained_pair(lambda: Complex64, n: usize) -> (CMatrix, CMatrix) {
    let mut b0 = CMatrix::zeros(n, n);
    b0[(0, 0)] = lambda;
    for j in 1..n - 1 {
        b0[(j, j + 1)] = ONE;
    }
    let mut b = b0.clone();
    b[(0, 1)] = ONE;
    (b0, b)
}

#[derive(Clone)]
pub struct Fixture {
    pub label: String,
    pub matrix: CMatrix,
    pub defective: bool,
}

/// Deterministic mixed fixture: plain dense draws, normal matrices, and
/// similarity-transformed Jordan structures with separated eigenvalues.
pub fn random_fixture(seed: u64) -> Fixture {
    let mut rng = SplitMix64::new(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1));
    let kind = rng.next_u64() % 3;
    let n = 2 + (rng.next_u64() % 7) as usize; // 2..=8
    match kind {
        0 => {
            // dense draw; diagonalizable with well-separated eigenvalues
            // in practice, resampled if the spectrum nearly collides
            for attempt in 0..20u64 {
                let a = matconj::random::uniform_complex_matrix(n, seed ^ (attempt << 33) ^ 0xD1CE);
                let s = schur_decompose(&a, 1e-12).unwrap();
                let diag = s.t.diag();
                let mut min_sep = f64::INFINITY;
                for i in 0..n {
                    for j in i + 1..n {
                        min_sep = min_sep.min((diag[i] - diag[j]).norm());
                    }
                }
                if min_sep > 0.05 {
                    return Fixture { label: format!("dense-{n}-{seed}"), matrix: a, defective: false };
                }
            }
            unreachable!("dense fixtures with separated spectra exist");
        }
        1 => {
            // normal: unitary conjugation of a separated diagonal
            let diag: Vec<Complex64> = (0..n)
                .map(|k| {
                    Complex64::from_polar(0.5 + 0.45 * k as f64, 0.7 * k as f64 + rng.next_f64())
                })
                .collect();
            let u = matconj::random::random_unitary(n, seed ^ 0xBEEF);
            let a = &(&u * &CMatrix::from_diag(&diag)) * &u.adjoint();
            Fixture { label: format!("normal-{n}-{seed}"), matrix: a, defective: false }
        }
        _ => {
            // T (D + N) T^{-1} with Jordan blocks of size <= 4
            let mut blocks: Vec<CMatrix> = Vec::new();
            let mut defective = false;
            let mut used = 0;
            let mut idx = 0;
            while used < n {
                let size = (1 + rng.next_u64() % 3).min((n - used) as u64).min(4) as usize;
                // separated representative per block
                let lambda = Complex64::from_polar(
                    0.6 + 0.5 * idx as f64,
                    1.1 * idx as f64 + 0.3 * rng.next_f64(),
                );
                if size > 1 {
                    defective = true;
                }
                blocks.push(jordan_block(lambda, size));
                used += size;
                idx += 1;
            }
            let j = block_diag(&blocks);
            let (t, t_inv) = unitriangular_with_inverse(n, seed ^ 0xFACE, 0.25);
            let a = similarity(&t, &t_inv, &j);
            Fixture { label: format!("jordan-{n}-{seed}"), matrix: a, defective }
        }
    }
}

/// The curated cross-method suite: Jordan blocks up to size 4, transformed
/// and mixed structures, normal matrices, dense draws.
pub fn cross_method_suite() -> Vec<Fixture> {
    let mut out = Vec::new();
    out.push(Fixture {
        label: "jordan2".into(),
        matrix: jordan_block(c(0.8, 0.6), 2),
        defective: true,
    });
    out.push(Fixture {
        label: "jordan3".into(),
        matrix: jordan_block(c(-0.5, 1.1), 3),
        defective: true,
    });
    out.push(Fixture {
        label: "jordan4".into(),
        matrix: jordan_block(c(1.2, -0.4), 4),
        defective: true,
    });
    {
        let (t, t_inv) = unitriangular_with_inverse(4, 11, 0.3);
        out.push(Fixture {
            label: "jordan4-similar".into(),
            matrix: similarity(&t, &t_inv, &jordan_block(c(0.3, 0.2), 4)),
            defective: true,
        });
    }
    {
        let j = block_diag(&[
            jordan_block(c(1.0, 1.0), 2),
            jordan_block(c(-1.0, 0.0), 1),
            jordan_block(c(2.0, -1.0), 1),
        ]);
        let (t, t_inv) = unitriangular_with_inverse(4, 13, 0.3);
        out.push(Fixture {
            label: "mixed-blocks".into(),
            matrix: similarity(&t, &t_inv, &j),
            defective: true,
        });
    }
    {
        let u = matconj::random::random_unitary(4, 17);
        let d = CMatrix::from_diag(&[c(1.0, 0.0), c(0.0, 1.5), c(-2.0, 0.5), c(0.7, -0.7)]);
        out.push(Fixture {
            label: "normal4".into(),
            matrix: &(&u * &d) * &u.adjoint(),
            defective: false,
        });
    }
    out.push(Fixture {
        label: "repeated-diagonalizable".into(),
        matrix: CMatrix::from_diag(&[c(2.0, 1.0), c(2.0, 1.0), c(-1.0, 0.0)]),
        defective: false,
    });
    out.push(Fixture { label: "nilpotent3".into(), matrix: shift_matrix(3), defective: true });
    out.push(Fixture {
        label: "scalar".into(),
        matrix: CMatrix::identity(3).scale(c(0.4, -1.2)),
        defective: false,
    });
    out.push(Fixture {
        label: "dense3".into(),
        matrix: matconj::random::uniform_complex_matrix(3, 101),
        defective: false,
    });
    out.push(Fixture {
        label: "dense6".into(),
        matrix: matconj::random::uniform_complex_matrix(6, 202),
        defective: false,
    });
    out.push(Fixture {
        label: "dense8".into(),
        matrix: matconj::random::uniform_complex_matrix(8, 303),
        defective: false,
    });
    out
}

/// Cluster tolerance used when evaluating fixtures that may carry defective
/// eigenvalues: QR scatters an exactly multiple eigenvalue of a size-m
/// block by about eps^(1/m), so the tolerance must sit above that scatter
/// and below the designed cluster separation.
pub fn fixture_tol(a: &CMatrix) -> f64 {
    1e-3 * matconj::operator_norm(a).max(1.0)
}
