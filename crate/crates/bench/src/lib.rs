//! Shared fixtures for the criterion benchmarks.

use matconj::{CMatrix, Complex64};

/// Dense complex draw with entries uniform on [-1/2, 1/2).
pub fn dense(n: usize, seed: u64) -> CMatrix {
    matconj::random::uniform_complex_matrix(n, seed)
}

/// Single Jordan block at 0.8 + 0.6i.
pub fn jordan(n: usize) -> CMatrix {
    let lambda = Complex64::new(0.8, 0.6);
    CMatrix::from_fn(n, n, |i, j| {
        if i == j {
            lambda
        } else if j == i + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}
