//! Operator norm, spectral radius, and eigenvector condition number.

use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::linalg::lu;
use crate::linalg::schur::{schur_decompose, SchurForm};
use crate::linalg::spectrum::eigen_structure;
use crate::random::SplitMix64;

const NORM_TOL: f64 = 1e-10;
const NORM_CAP: usize = 10_000;

/// Largest singular value via power iteration on A^H A.
pub fn operator_norm(a: &CMatrix) -> f64 {
    let n = a.cols();
    if n == 0 || a.rows() == 0 {
        return 0.0;
    }
    if a.max_abs() == 0.0 {
        return 0.0;
    }
    let mut rng = SplitMix64::new(0x5EED_0001);
    let mut v: Vec<Complex64> = (0..n).map(|_| rng.next_complex_centered() + 1.0).collect();
    normalize(&mut v);
    let mut sigma = 0.0f64;
    for _ in 0..NORM_CAP {
        let w = a.mul_vec(&v);
        let sigma_next = l2(&w);
        let mut u = a.adjoint_mul_vec(&w);
        let nu = l2(&u);
        if nu == 0.0 {
            // start vector fell into the kernel of A^H A; restart
            v = (0..n).map(|_| rng.next_complex_centered()).collect();
            normalize(&mut v);
            continue;
        }
        for z in u.iter_mut() {
            *z /= nu;
        }
        v = u;
        if (sigma_next - sigma).abs() <= NORM_TOL * sigma_next.max(f64::MIN_POSITIVE) {
            return sigma_next;
        }
        sigma = sigma_next;
    }
    sigma
}

fn l2(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn normalize(v: &mut [Complex64]) {
    let norm = l2(v);
    if norm > 0.0 {
        for z in v.iter_mut() {
            *z /= norm;
        }
    }
}

/// Largest eigenvalue modulus, read off the Schur diagonal.
pub fn spectral_radius(a: &CMatrix) -> Result<f64> {
    let s = schur_decompose(a, crate::linalg::spectrum::default_cluster_tol(a))?;
    Ok(s.t.diag().iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// Eigenvector matrix assembled from a Schur form, columns normalized to
/// unit 2-norm. Requires all diagonal entries pairwise distinct within the
/// given tolerance regime (callers check via the spectrum).
fn eigenvector_matrix(s: &SchurForm) -> CMatrix {
    let n = s.n();
    let t = &s.t;
    let mut vectors = CMatrix::zeros(n, n);
    for k in 0..n {
        let lambda = t[(k, k)];
        let mut y = vec![Complex64::new(0.0, 0.0); n];
        y[k] = Complex64::new(1.0, 0.0);
        for i in (0..k).rev() {
            let mut acc = Complex64::new(0.0, 0.0);
            for m in i + 1..=k {
                acc += t[(i, m)] * y[m];
            }
            y[i] = -acc / (t[(i, i)] - lambda);
        }
        let mut x = s.q.mul_vec(&y);
        normalize(&mut x);
        for i in 0..n {
            vectors[(i, k)] = x[i];
        }
    }
    vectors
}

/// Condition number ||V|| ||V^{-1}|| of the unit-column eigenvector matrix.
/// Errors when some cluster has exponent bound >= 2.
pub fn kappa_eigvec(a: &CMatrix) -> Result<f64> {
    let tol = crate::linalg::spectrum::default_cluster_tol(a);
    let s = schur_decompose(a, tol)?;
    kappa_from_schur(&s, tol)
}

pub(crate) fn kappa_from_schur(s: &SchurForm, cluster_tol: f64) -> Result<f64> {
    let spec = eigen_structure(s, cluster_tol);
    if let Some(cluster) = spec.clusters.iter().find(|c| c.exponent_bound >= 2) {
        return Err(Error::NotDiagonalizable {
            representative: cluster.representative,
            exponent_bound: cluster.exponent_bound,
        });
    }
    let v = eigenvector_matrix(s);
    let v_inv = lu::inverse(&v)?;
    Ok(operator_norm(&v) * operator_norm(&v_inv))
}
