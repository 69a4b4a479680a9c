//! Small deterministic PRNG for experiments and fixtures.
//!
//! Seeded runs must be byte-identical across platforms, so we keep the
//! generator in-crate instead of pulling in an external RNG.

use num_complex::Complex64;

use crate::cmatrix::CMatrix;

/// SplitMix64. Passes through the full 64-bit state space, no seed escrow.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [-1/2, 1/2).
    pub fn next_centered(&mut self) -> f64 {
        self.next_f64() - 0.5
    }

    pub fn next_complex_centered(&mut self) -> Complex64 {
        Complex64::new(self.next_centered(), self.next_centered())
    }

    /// Derive an independent child stream.
    pub fn split(&mut self) -> SplitMix64 {
        SplitMix64::new(self.next_u64())
    }
}

/// n x n matrix X + iY with X, Y entries uniform on [-1/2, 1/2).
pub fn uniform_complex_matrix(n: usize, seed: u64) -> CMatrix {
    let mut rng = SplitMix64::new(seed);
    CMatrix::from_fn(n, n, |_, _| rng.next_complex_centered())
}

/// Random unitary matrix: modified Gram-Schmidt on a random complex matrix.
pub fn random_unitary(n: usize, seed: u64) -> CMatrix {
    let mut rng = SplitMix64::new(seed);
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.next_complex_centered()).collect())
        .collect();
    for j in 0..n {
        for k in 0..j {
            let proj: Complex64 = (0..n).map(|i| cols[k][i].conj() * cols[j][i]).sum();
            for i in 0..n {
                let correction = proj * cols[k][i];
                cols[j][i] -= correction;
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!(norm > 1e-8, "random columns degenerate, reseed");
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    CMatrix::from_fn(n, n, |i, j| cols[j][i])
}
