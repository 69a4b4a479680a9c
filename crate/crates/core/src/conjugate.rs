//! The matrix conjugate A^c and everything built on top of it: the
//! conjugating polynomial, norm bounds, the matrix absolute value, the
//! polar representation, and the sign decomposition.
//!
//! A^c applies z -> zbar through the smooth functional calculus. It equals
//! T conj(D) T^{-1} in Jordan coordinates, is always diagonalizable, and
//! coincides with the Hermitian transpose exactly for normal matrices.

use num_complex::Complex64;

use crate::calculus::{
    eval_poly_at_matrix, hermite_interpolant, phi_hermite, phi_parlett, HermitePolynomial,
};
use crate::cauchy_green::{phi_integral, DiscSet, QuadratureConfig};
use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::linalg::{
    default_cluster_tol, eigen_structure, lu_factor, operator_norm, schur_decompose, Spectrum,
};
use crate::wirtinger::WirtingerFunction;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Evaluation route for the conjugate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Hermite,
    Parlett,
    Integral,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Hermite => "hermite",
            Method::Parlett => "parlett",
            Method::Integral => "integral",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hermite" => Ok(Method::Hermite),
            "parlett" => Ok(Method::Parlett),
            "integral" => Ok(Method::Integral),
            other => Err(Error::parse(format!("unknown method '{other}'"))),
        }
    }
}

/// Evaluate phi(A) by the requested route. The integral route builds a
/// default disc cover around the eigenvalue clusters.
pub fn evaluate(
    f: &WirtingerFunction,
    a: &CMatrix,
    method: Method,
    cluster_tol: f64,
) -> Result<CMatrix> {
    match method {
        Method::Hermite => phi_hermite(f, a, cluster_tol),
        Method::Parlett => phi_parlett(f, a, cluster_tol),
        Method::Integral => {
            let s = schur_decompose(a, cluster_tol)?;
            let spec = eigen_structure(&s, cluster_tol);
            let discs = DiscSet::around_spectrum(&spec, operator_norm(a))?;
            phi_integral(f, a, &discs, &QuadratureConfig::default())
        }
    }
}

/// A^c = tau(A). Defaults: `conjugate_with_defaults` uses the block route
/// with the standard cluster tolerance.
pub fn conjugate(a: &CMatrix, method: Method, cluster_tol: f64) -> Result<CMatrix> {
    evaluate(&WirtingerFunction::tau(), a, method, cluster_tol)
}

pub fn conjugate_with_defaults(a: &CMatrix) -> Result<CMatrix> {
    conjugate(a, Method::Parlett, default_cluster_tol(a))
}

/// The unique polynomial of degree m-1 with tau_A(lambda_j) = conj(lambda_j)
/// and vanishing derivatives through order n_j at every multiple cluster;
/// evaluating it at A reproduces A^c.
#[derive(Debug, Clone)]
pub struct ConjugatingPolynomial {
    /// ascending monomial coefficients
    pub coefficients: Vec<Complex64>,
    pub spectrum: Spectrum,
}

impl ConjugatingPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = ZERO;
        for &c in self.coefficients.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn eval_derivative(&self, order: usize, z: Complex64) -> Complex64 {
        let mut acc = ZERO;
        for idx in (order..self.coefficients.len()).rev() {
            let mut factor = 1.0;
            for i in 0..order {
                factor *= (idx - i) as f64;
            }
            acc = acc * z + self.coefficients[idx] * factor;
        }
        acc
    }

    pub fn eval_at_matrix(&self, a: &CMatrix) -> Result<CMatrix> {
        let p = HermitePolynomial::from_monomial_coefficients(self.coefficients.clone());
        eval_poly_at_matrix(&p, a)
    }
}

pub fn conjugating_polynomial(spec: &Spectrum) -> Result<ConjugatingPolynomial> {
    let p = hermite_interpolant(spec, &WirtingerFunction::tau())?;
    Ok(ConjugatingPolynomial { coefficients: p.monomial_coefficients(), spectrum: spec.clone() })
}

/// Sandwich rho(A) <= ||A^c|| <= kappa(T) rho(A). The upper side needs a
/// diagonalizable matrix; it is absent and flagged otherwise.
#[derive(Debug, Clone)]
pub struct SpectralBounds {
    pub lower: f64,
    pub upper: Option<f64>,
    pub kappa: Option<f64>,
}

pub fn bound_spectral(a: &CMatrix) -> Result<SpectralBounds> {
    let tol = default_cluster_tol(a);
    let s = schur_decompose(a, tol)?;
    let lower = s.t.diag().iter().map(|z| z.norm()).fold(0.0, f64::max);
    match crate::linalg::kappa_from_schur(&s, tol) {
        Ok(kappa) => Ok(SpectralBounds { lower, upper: Some(kappa * lower), kappa: Some(kappa) }),
        Err(Error::NotDiagonalizable { .. }) => {
            Ok(SpectralBounds { lower, upper: None, kappa: None })
        }
        Err(e) => Err(e),
    }
}

/// Triangular-recurrence bound: ||A|| for a single cluster, otherwise
/// n (2 ||A|| / delta + 1)^{n-2} ||A|| with delta the realized separation.
pub fn bound_triangular(a: &CMatrix) -> Result<f64> {
    let n = a.require_square()?;
    let tol = default_cluster_tol(a);
    let s = schur_decompose(a, tol)?;
    let spec = eigen_structure(&s, tol);
    let norm = operator_norm(a);
    match spec.min_separation() {
        None => Ok(norm),
        Some(delta) => Ok(n as f64 * (2.0 * norm / delta + 1.0).powi(n as i32 - 2) * norm),
    }
}

/// Number of boundary samples used by [`bound_von_neumann`].
pub const VON_NEUMANN_SAMPLES: usize = 4096;

#[derive(Debug, Clone, Copy)]
pub struct SampledBound {
    pub value: f64,
    pub samples: usize,
}

/// sup |tau_A| over the circle |z| = radius, sampled at equispaced points.
/// The maximum modulus principle puts the true supremum on the boundary.
pub fn bound_von_neumann(p: &ConjugatingPolynomial, radius: f64) -> SampledBound {
    let mut best = 0.0f64;
    for k in 0..VON_NEUMANN_SAMPLES {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / VON_NEUMANN_SAMPLES as f64;
        let z = Complex64::from_polar(radius, theta);
        best = best.max(p.eval(z).norm());
    }
    SampledBound { value: best, samples: VON_NEUMANN_SAMPLES }
}

/// Interpolation bound for simple spectra inside the unit disc:
/// (4 / delta^2) max_j values[j], with delta the Blaschke separation
/// min_lambda prod |(lambda_j - lambda) / (1 - lambda_j conj(lambda))|.
/// Callers must ensure ||A|| <= 1.
pub fn bound_interpolation_diag(spec: &Spectrum, values: &[f64]) -> Result<f64> {
    if !spec.is_simple() {
        return Err(Error::domain("interpolation bound needs a simple spectrum"));
    }
    if values.len() != spec.clusters.len() {
        return Err(Error::domain("one value per eigenvalue required"));
    }
    let reps = spec.representatives();
    for rep in &reps {
        if rep.norm() >= 1.0 {
            return Err(Error::domain(format!(
                "eigenvalue {rep} is not strictly inside the unit disc"
            )));
        }
    }
    let mut delta = f64::INFINITY;
    for (i, lambda) in reps.iter().enumerate() {
        let mut product = 1.0;
        for (j, other) in reps.iter().enumerate() {
            if i != j {
                product *= ((other - lambda) / (1.0 - other * lambda.conj())).norm();
            }
        }
        delta = delta.min(product);
    }
    let max_value = values.iter().copied().fold(0.0, f64::max);
    Ok(4.0 / (delta * delta) * max_value)
}

/// Principal square root of an upper-triangular matrix whose spectrum is
/// real nonnegative up to rounding. Diagonal entries near zero map to zero;
/// an off-diagonal entry that needs dividing by a vanishing pivot pair is
/// accepted only when the numerator vanishes too.
fn triangular_sqrt(t: &CMatrix) -> Result<CMatrix> {
    let n = t.rows();
    let scale = t.frobenius_norm().max(1.0);
    let mut s = CMatrix::zeros(n, n);
    for i in 0..n {
        let d = t[(i, i)];
        s[(i, i)] = if d.norm() <= 1e-14 * scale { ZERO } else { d.sqrt() };
    }
    for dist in 1..n {
        for i in 0..n - dist {
            let j = i + dist;
            let mut rhs = t[(i, j)];
            for k in i + 1..j {
                rhs -= s[(i, k)] * s[(k, j)];
            }
            let den = s[(i, i)] + s[(j, j)];
            if den.norm() <= 1e-14 * scale.sqrt() {
                if rhs.norm() <= 1e-10 * scale {
                    s[(i, j)] = ZERO;
                    continue;
                }
                return Err(Error::NearSingular {
                    at: t[(i, i)],
                    context: "triangular square root",
                });
            }
            s[(i, j)] = rhs / den;
        }
    }
    Ok(s)
}

/// abs(A) = (A A^c)^{1/2} through a Schur-based principal square root.
/// The product A A^c has spectrum {|lambda_j|^2}, so the principal branch
/// is well defined; blocks of a zero eigenvalue contribute zero.
pub fn abs_matrix(a: &CMatrix) -> Result<CMatrix> {
    a.require_square()?;
    let tol = default_cluster_tol(a);
    let ac = conjugate(a, Method::Parlett, tol)?;
    let product = a * &ac;
    let s = schur_decompose(&product, default_cluster_tol(&product))?;
    let root = triangular_sqrt(&s.t)?;
    Ok(&(&s.q * &root) * &s.q.adjoint())
}

#[derive(Debug, Clone)]
pub struct PolarParts {
    pub abs_part: CMatrix,
    pub v_part: CMatrix,
}

/// A = abs(A) V with V = abs(A)^{-1} A. Both factors are polynomials in A,
/// so the representation commutes; it matches the classical polar
/// decomposition exactly for normal matrices.
pub fn polar_representation(a: &CMatrix) -> Result<PolarParts> {
    a.require_square()?;
    let tol = default_cluster_tol(a);
    let s = schur_decompose(a, tol)?;
    let norm = operator_norm(a);
    for lambda in s.t.diag() {
        if lambda.norm() <= 1e-12 * norm.max(1.0) {
            return Err(Error::NearSingular { at: lambda, context: "polar representation" });
        }
    }
    let abs_part = abs_matrix(a)?;
    let v_part = lu_factor(&abs_part)?.solve_mat(a)?;
    Ok(PolarParts { abs_part, v_part })
}

/// Matrix sign decomposition A = sign(A) N with N = (A^2)^{1/2}, computed
/// by the Newton iteration X <- (X + X^{-1}) / 2 started at A.
pub fn sign_decomposition(a: &CMatrix) -> Result<(CMatrix, CMatrix)> {
    a.require_square()?;
    let tol = default_cluster_tol(a);
    let s = schur_decompose(a, tol)?;
    let norm = operator_norm(a);
    for lambda in s.t.diag() {
        if lambda.re.abs() <= 1e-8 * norm.max(1.0) {
            return Err(Error::ImaginaryAxisEigenvalue { eigenvalue: lambda });
        }
    }
    let mut x = a.clone();
    let mut converged = false;
    for _ in 0..100 {
        let x_inv = lu_factor(&x)?.inverse()?;
        let next = (&x + &x_inv).scale(Complex64::new(0.5, 0.0));
        let step = (&next - &x).frobenius_norm();
        let size = x.frobenius_norm();
        x = next;
        if step <= 1e-12 * size {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { what: "sign Newton iteration", iterations: 100 });
    }
    let n_part = &x * a;
    Ok((x, n_part))
}
