//! Dense complex linear algebra: Schur decomposition, eigenstructure
//! estimation, Sylvester solves, norms, and resolvents.

mod lu;
mod norms;
mod schur;
mod spectrum;
mod sylvester;

pub use lu::{inverse, lu_factor, resolvent, Lu};
pub use norms::{kappa_eigvec, operator_norm, spectral_radius};
pub use schur::{reorder_schur, schur_decompose, SchurForm};
pub use spectrum::{default_cluster_tol, eigen_structure, Cluster, Spectrum};
pub use sylvester::solve_sylvester_tri;

pub(crate) use norms::kappa_from_schur;
