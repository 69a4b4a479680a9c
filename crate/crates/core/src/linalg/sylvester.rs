//! Triangular Sylvester solver T_ii X - X T_jj = C by entrywise
//! back-substitution over the two triangles.

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};

/// Both coefficient matrices must be upper triangular with disjoint
/// diagonals; X has shape rows(t_ii) x cols(t_jj).
pub fn solve_sylvester_tri(t_ii: &CMatrix, t_jj: &CMatrix, c: &CMatrix) -> Result<CMatrix> {
    let p = t_ii.require_square()?;
    let q = t_jj.require_square()?;
    if c.rows() != p || c.cols() != q {
        return Err(Error::ShapeMismatch { expected: (p, q), found: (c.rows(), c.cols()) });
    }
    let mut x = CMatrix::zeros(p, q);
    for l in 0..q {
        for k in (0..p).rev() {
            let mut rhs = c[(k, l)];
            // column below, already solved
            for m in k + 1..p {
                rhs -= t_ii[(k, m)] * x[(m, l)];
            }
            // row to the left, already solved
            for m in 0..l {
                rhs += x[(k, m)] * t_jj[(m, l)];
            }
            let left = t_ii[(k, k)];
            let right = t_jj[(l, l)];
            let den = left - right;
            let tiny = f64::EPSILON * (left.norm() + right.norm()) + f64::MIN_POSITIVE;
            if den.norm() <= tiny {
                return Err(Error::SingularPair { left, right });
            }
            x[(k, l)] = rhs / den;
        }
    }
    Ok(x)
}
