//! Eigenvalue clusters with minimal-polynomial exponent bounds.

use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::linalg::norms::operator_norm;
use crate::linalg::schur::{cluster_diagonal, SchurForm};

#[derive(Debug, Clone)]
pub struct Cluster {
    /// Arithmetic mean of the member diagonal entries.
    pub representative: Complex64,
    /// Member count; an upper bound for the exponent of the representative
    /// in the minimal polynomial. Overestimation only adds matched
    /// derivatives to the interpolation data, which is harmless.
    pub exponent_bound: usize,
    /// Indices into the Schur diagonal.
    pub members: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Spectrum {
    pub clusters: Vec<Cluster>,
    pub cluster_tol: f64,
}

impl Spectrum {
    /// Direct construction from (eigenvalue, exponent bound) pairs; used
    /// when the structure is known rather than estimated.
    pub fn from_pairs(pairs: &[(Complex64, usize)], cluster_tol: f64) -> Result<Self> {
        let mut clusters = Vec::with_capacity(pairs.len());
        let mut next = 0usize;
        for &(value, exponent) in pairs {
            if exponent == 0 {
                return Err(Error::domain("exponent bound must be at least 1"));
            }
            clusters.push(Cluster {
                representative: value,
                exponent_bound: exponent,
                members: (next..next + exponent).collect(),
            });
            next += exponent;
        }
        let spectrum = Spectrum { clusters, cluster_tol };
        spectrum.validate()?;
        Ok(spectrum)
    }

    fn validate(&self) -> Result<()> {
        for (i, a) in self.clusters.iter().enumerate() {
            for b in self.clusters.iter().skip(i + 1) {
                if (a.representative - b.representative).norm() <= self.cluster_tol {
                    return Err(Error::domain(format!(
                        "cluster representatives {} and {} are not separated by more than {}",
                        a.representative, b.representative, self.cluster_tol
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn total_multiplicity(&self) -> usize {
        self.clusters.iter().map(|c| c.exponent_bound).sum()
    }

    pub fn max_exponent_bound(&self) -> usize {
        self.clusters.iter().map(|c| c.exponent_bound).max().unwrap_or(0)
    }

    pub fn representatives(&self) -> Vec<Complex64> {
        self.clusters.iter().map(|c| c.representative).collect()
    }

    /// Minimal pairwise distance between cluster representatives; `None`
    /// when there is a single cluster.
    pub fn min_separation(&self) -> Option<f64> {
        let reps = self.representatives();
        if reps.len() < 2 {
            return None;
        }
        let mut best = f64::INFINITY;
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                best = best.min((reps[i] - reps[j]).norm());
            }
        }
        Some(best)
    }

    pub fn is_simple(&self) -> bool {
        self.clusters.iter().all(|c| c.exponent_bound == 1)
    }
}

/// Cluster the Schur diagonal under |t_ii - t_jj| <= cluster_tol. Always
/// succeeds; representatives are member means and exponent bounds are
/// member counts.
pub fn eigen_structure(s: &SchurForm, cluster_tol: f64) -> Spectrum {
    let diag = s.t.diag();
    let groups = cluster_diagonal(&diag, cluster_tol);
    let clusters = groups
        .into_iter()
        .map(|members| {
            let mean = members.iter().map(|&i| diag[i]).sum::<Complex64>() / members.len() as f64;
            Cluster { representative: mean, exponent_bound: members.len(), members }
        })
        .collect();
    Spectrum { clusters, cluster_tol }
}

/// Default clustering tolerance, 1e-8 * max(1, ||A||).
pub fn default_cluster_tol(a: &CMatrix) -> f64 {
    1e-8 * operator_norm(a).max(1.0)
}
