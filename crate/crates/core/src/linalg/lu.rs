//! LU factorization with partial pivoting, solves, inverse, resolvent.

use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};

pub struct Lu {
    factors: CMatrix,
    pivots: Vec<usize>,
    min_pivot: f64,
}

pub fn lu_factor(a: &CMatrix) -> Result<Lu> {
    let n = a.require_square()?;
    let mut lu = a.clone();
    let mut pivots = Vec::with_capacity(n);
    let mut min_pivot = f64::INFINITY;
    for k in 0..n {
        let mut best = k;
        let mut best_mag = lu[(k, k)].norm();
        for i in k + 1..n {
            let mag = lu[(i, k)].norm();
            if mag > best_mag {
                best = i;
                best_mag = mag;
            }
        }
        pivots.push(best);
        if best != k {
            for j in 0..n {
                let tmp = lu[(k, j)];
                lu[(k, j)] = lu[(best, j)];
                lu[(best, j)] = tmp;
            }
        }
        min_pivot = min_pivot.min(best_mag);
        if best_mag == 0.0 {
            continue;
        }
        let pivot = lu[(k, k)];
        for i in k + 1..n {
            let factor = lu[(i, k)] / pivot;
            lu[(i, k)] = factor;
            for j in k + 1..n {
                let update = factor * lu[(k, j)];
                lu[(i, j)] -= update;
            }
        }
    }
    if n == 0 {
        min_pivot = 0.0;
    }
    Ok(Lu { factors: lu, pivots, min_pivot })
}

impl Lu {
    pub fn n(&self) -> usize {
        self.factors.rows()
    }

    /// Magnitude of the smallest pivot encountered; zero means exactly
    /// singular.
    pub fn min_pivot(&self) -> f64 {
        self.min_pivot
    }

    pub fn solve_vec(&self, b: &[Complex64]) -> Result<Vec<Complex64>> {
        let n = self.n();
        assert_eq!(b.len(), n, "rhs length mismatch");
        if self.min_pivot == 0.0 {
            return Err(Error::NearSingular { at: Complex64::new(0.0, 0.0), context: "LU solve" });
        }
        let mut x = b.to_vec();
        for k in 0..n {
            x.swap(k, self.pivots[k]);
        }
        for k in 0..n {
            for i in k + 1..n {
                let update = self.factors[(i, k)] * x[k];
                x[i] -= update;
            }
        }
        for k in (0..n).rev() {
            for j in k + 1..n {
                let update = self.factors[(k, j)] * x[j];
                x[k] -= update;
            }
            x[k] /= self.factors[(k, k)];
        }
        Ok(x)
    }

    pub fn solve_mat(&self, b: &CMatrix) -> Result<CMatrix> {
        let n = self.n();
        assert_eq!(b.rows(), n, "rhs row mismatch");
        let mut out = CMatrix::zeros(n, b.cols());
        for j in 0..b.cols() {
            let col: Vec<Complex64> = (0..n).map(|i| b[(i, j)]).collect();
            let sol = self.solve_vec(&col)?;
            for i in 0..n {
                out[(i, j)] = sol[i];
            }
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<CMatrix> {
        self.solve_mat(&CMatrix::identity(self.n()))
    }
}

/// A^{-1} through pivoted LU. Errors on exactly singular input.
pub fn inverse(a: &CMatrix) -> Result<CMatrix> {
    lu_factor(a)?.inverse()
}

/// (zeta I - A)^{-1}. Errors when zeta sits within 1e-14 * scale of the
/// spectrum, detected through pivot collapse.
pub fn resolvent(a: &CMatrix, zeta: Complex64) -> Result<CMatrix> {
    let n = a.require_square()?;
    let mut m = a.scale(Complex64::new(-1.0, 0.0));
    for i in 0..n {
        m[(i, i)] += zeta;
    }
    let lu = lu_factor(&m)?;
    let scale = a.frobenius_norm().max(zeta.norm()).max(1.0);
    if lu.min_pivot() <= 1e-14 * scale {
        return Err(Error::NearSingular { at: zeta, context: "resolvent" });
    }
    lu.inverse()
}
