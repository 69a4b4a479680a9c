//! Functional calculus for merely-smooth functions of complex matrices.
//!
//! Holomorphic functions of a matrix are classical; this crate evaluates
//! phi(A) when phi is only smooth (finitely many continuous partials near
//! the eigenvalues), with the complex conjugation z -> zbar as the flagship
//! example. Three mutually cross-checking evaluation routes are provided:
//!
//! * Hermite interpolation on the eigenvalue clusters, with confluent
//!   divided differences taking the d-partial (Wirtinger) convention;
//! * a clustered Schur-Parlett block recurrence that never separates
//!   nearly equal eigenvalues;
//! * boundary-plus-area (Cauchy-Green) quadrature with explicit control of
//!   the error from omitting small discs around the spectrum.
//!
//! On top of the calculus sit the matrix conjugate `A^c`, the conjugating
//! polynomial, spectral/triangular/sampled-supremum/interpolation norm
//! bounds, the matrix absolute value abs(A) = (A A^c)^{1/2}, the
//! commutative polar representation A = abs(A) V, and the Newton-iteration
//! sign decomposition.
//!
//! ```
//! use matconj::{CMatrix, conjugate_with_defaults};
//! use num_complex::Complex64;
//!
//! // a Jordan block: the conjugate collapses the nilpotent part
//! let a = CMatrix::from_rows(vec![
//!     vec![Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0)],
//!     vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0)],
//! ]).unwrap();
//! let ac = conjugate_with_defaults(&a).unwrap();
//! assert!((ac[(0, 0)] - Complex64::new(0.0, -1.0)).norm() < 1e-10);
//! assert!(ac[(0, 1)].norm() < 1e-10);
//! ```

pub mod calculus;
pub mod cauchy_green;
pub mod cmatrix;
pub mod conjugate;
pub mod error;
pub mod experiment;
pub mod io;
pub mod linalg;
pub mod random;
pub mod wirtinger;

pub use calculus::{
    divided_differences, eval_poly_at_matrix, hermite_interpolant, opitz_matrix, phi_hermite,
    phi_parlett, DividedDifferenceTable, HermitePolynomial,
};
pub use cauchy_green::{
    boundary_only_conjugate, convergence_study, disc_omission_error, phi_integral, pompeiu_scalar,
    Disc, DiscSet, QuadratureConfig, StudyMode, StudyRow, StudyTable,
};
pub use cmatrix::CMatrix;
pub use conjugate::{
    abs_matrix, bound_interpolation_diag, bound_spectral, bound_triangular, bound_von_neumann,
    conjugate, conjugate_with_defaults, conjugating_polynomial, evaluate, polar_representation,
    sign_decomposition, ConjugatingPolynomial, Method, PolarParts, SampledBound, SpectralBounds,
};
pub use error::{Error, ErrorClass, Result};
pub use experiment::{random_experiment, ExperimentRow};
pub use linalg::{
    default_cluster_tol, eigen_structure, inverse, kappa_eigvec, operator_norm, reorder_schur,
    resolvent, schur_decompose, solve_sylvester_tri, spectral_radius, Cluster, SchurForm, Spectrum,
};
pub use wirtinger::{numeric_partials, FunctionSpec, SmoothnessDomain, WirtingerFunction};

pub use num_complex::Complex64;
