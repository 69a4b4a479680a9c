//! Quadrature engine for boundary-plus-area integral representations.
//!
//! The integration region is a disjoint union of discs around the
//! eigenvalue clusters. Each disc contributes a boundary integral over its
//! outer circle (trapezoid rule, spectrally accurate for the periodic
//! integrand) and an area integral over the annulus between a small omitted
//! core of radius eps_j and the outer radius R_j (tensor product of the
//! angular trapezoid with radial Gauss-Legendre). The omitted cores are
//! never shrunk to zero numerically; the error laws they induce are first
//! order in eps for boundary-only evaluation and second order once the
//! area term is included, which `convergence_study` measures.

use num_complex::Complex64;
use serde::Serialize;

use crate::calculus::phi_parlett_on_schur;
use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::linalg::{default_cluster_tol, eigen_structure, operator_norm, schur_decompose, SchurForm, Spectrum};
use crate::wirtinger::WirtingerFunction;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const TAU_PI: f64 = 2.0 * std::f64::consts::PI;

#[derive(Debug, Clone, Copy)]
pub struct Disc {
    pub center: Complex64,
    /// omitted-core radius eps_j
    pub radius: f64,
}

/// Disjoint disc cover of the spectrum with outer integration radii.
#[derive(Debug, Clone)]
pub struct DiscSet {
    pub discs: Vec<Disc>,
    pub outer_radii: Vec<f64>,
}

impl DiscSet {
    pub fn new(discs: Vec<Disc>, outer_radii: Vec<f64>) -> Result<Self> {
        if discs.is_empty() {
            return Err(Error::EmptyInput { what: "disc set" });
        }
        if discs.len() != outer_radii.len() {
            return Err(Error::domain("one outer radius per disc required"));
        }
        for (j, disc) in discs.iter().enumerate() {
            if !(disc.radius > 0.0) || !disc.radius.is_finite() {
                return Err(Error::domain(format!("disc {j} has invalid radius")));
            }
            if !(outer_radii[j] > disc.radius) || !outer_radii[j].is_finite() {
                return Err(Error::domain(format!(
                    "outer radius of disc {j} must exceed its core radius"
                )));
            }
        }
        for i in 0..discs.len() {
            for j in i + 1..discs.len() {
                let gap = (discs[i].center - discs[j].center).norm();
                if gap <= discs[i].radius + discs[j].radius {
                    return Err(Error::DiscsOverlap { first: i, second: j });
                }
            }
        }
        Ok(DiscSet { discs, outer_radii })
    }

    /// Default cover: one disc per cluster representative. Core radii are
    /// 5e-4 * max(1, scale) capped at an eighth of the separation; outer
    /// radii are max(3 eps_j, half the distance to the nearest other
    /// center), with half of max(1, scale) for a lone cluster.
    pub fn around_spectrum(spec: &Spectrum, norm_scale: f64) -> Result<Self> {
        let reps = spec.representatives();
        if reps.is_empty() {
            return Err(Error::EmptyInput { what: "spectrum" });
        }
        let scale = norm_scale.max(1.0);
        let mut discs = Vec::with_capacity(reps.len());
        let mut outer = Vec::with_capacity(reps.len());
        for (j, &center) in reps.iter().enumerate() {
            let nearest = reps
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != j)
                .map(|(_, &other)| (other - center).norm())
                .fold(f64::INFINITY, f64::min);
            let eps = if nearest.is_finite() {
                (5e-4 * scale).min(nearest / 8.0)
            } else {
                5e-4 * scale
            };
            let big_r = if nearest.is_finite() {
                (3.0 * eps).max(nearest / 2.0)
            } else {
                (3.0 * eps).max(0.5 * scale)
            };
            discs.push(Disc { center, radius: eps });
            outer.push(big_r);
        }
        DiscSet::new(discs, outer)
    }

    fn scaled(&self, core_factor: f64, outer_factor: f64) -> Result<Self> {
        let discs = self
            .discs
            .iter()
            .map(|d| Disc { center: d.center, radius: d.radius * core_factor })
            .collect();
        let outer = self.outer_radii.iter().map(|r| r * outer_factor).collect();
        DiscSet::new(discs, outer)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig {
    pub angular_nodes: usize,
    pub radial_nodes: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { angular_nodes: 256, radial_nodes: 64 }
    }
}

impl QuadratureConfig {
    pub fn new(angular_nodes: usize, radial_nodes: usize) -> Result<Self> {
        if angular_nodes < 8 || radial_nodes < 8 {
            return Err(Error::domain("quadrature needs at least 8 nodes per direction"));
        }
        Ok(QuadratureConfig { angular_nodes, radial_nodes })
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1].
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let pk = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = pk;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Upper-triangular (zeta I - T)^{-1}; errors when zeta sits within 1e-10
/// of a diagonal entry.
fn triangular_resolvent(t: &CMatrix, zeta: Complex64) -> Result<CMatrix> {
    let n = t.rows();
    let mut x = CMatrix::zeros(n, n);
    for j in 0..n {
        let pivot = zeta - t[(j, j)];
        if pivot.norm() <= 1e-10 {
            return Err(Error::EigenvalueOnQuadratureNode { eigenvalue: t[(j, j)] });
        }
        x[(j, j)] = 1.0 / pivot;
        for i in (0..j).rev() {
            let mut acc = ZERO;
            for k in i + 1..=j {
                // R[i][k] = -t[i][k] off the diagonal
                acc += t[(i, k)] * x[(k, j)];
            }
            x[(i, j)] = acc / (zeta - t[(i, i)]);
        }
    }
    Ok(x)
}

/// Distance from `from` to the circle |zeta - center| = radius along
/// direction theta.
fn ray_exit_radius(from: Complex64, center: Complex64, radius: f64, theta: f64) -> f64 {
    let u = center - from;
    let d = u.norm();
    if d == 0.0 {
        return radius;
    }
    let psi = theta - u.arg();
    let discriminant = radius * radius - d * d * psi.sin().powi(2);
    d * psi.cos() + discriminant.max(0.0).sqrt()
}

struct SchurQuadrature<'a> {
    s: &'a SchurForm,
    cfg: QuadratureConfig,
    gl_nodes: Vec<f64>,
    gl_weights: Vec<f64>,
}

impl<'a> SchurQuadrature<'a> {
    fn new(s: &'a SchurForm, cfg: QuadratureConfig) -> Self {
        let (gl_nodes, gl_weights) = gauss_legendre(cfg.radial_nodes);
        SchurQuadrature { s, cfg, gl_nodes, gl_weights }
    }

    /// (1/2 pi i) contour integral of g(zeta) (zeta I - T)^{-1} d zeta over
    /// the circle (center, radius), accumulated into `acc`.
    fn boundary(
        &self,
        acc: &mut CMatrix,
        center: Complex64,
        radius: f64,
        g: &mut dyn FnMut(Complex64) -> Result<Complex64>,
    ) -> Result<()> {
        let n_ang = self.cfg.angular_nodes;
        for a in 0..n_ang {
            let theta = TAU_PI * a as f64 / n_ang as f64;
            let dir = Complex64::from_polar(1.0, theta);
            let zeta = center + radius * dir;
            let rslv = triangular_resolvent(&self.s.t, zeta)?;
            let weight = g(zeta)? * radius * dir / n_ang as f64;
            add_scaled(acc, &rslv, weight);
        }
        Ok(())
    }

    /// -(1/pi) area integral of g(zeta) (zeta I - T)^{-1} d mu over the
    /// region between radius `inner(theta)` and `outer(theta)` around
    /// `center`, accumulated into `acc` with an overall `sign`.
    fn area(
        &self,
        acc: &mut CMatrix,
        center: Complex64,
        inner: f64,
        outer: &dyn Fn(f64) -> f64,
        sign: f64,
        g: &mut dyn FnMut(Complex64) -> Result<Complex64>,
    ) -> Result<()> {
        let n_ang = self.cfg.angular_nodes;
        for a in 0..n_ang {
            let theta = TAU_PI * a as f64 / n_ang as f64;
            let dir = Complex64::from_polar(1.0, theta);
            let hi = outer(theta);
            if hi <= inner {
                continue;
            }
            let mid = 0.5 * (inner + hi);
            let half = 0.5 * (hi - inner);
            for (x, w) in self.gl_nodes.iter().zip(self.gl_weights.iter()) {
                let t = mid + half * x;
                let zeta = center + t * dir;
                let rslv = triangular_resolvent(&self.s.t, zeta)?;
                // -(1/pi) * (2 pi / n_ang) * w * t, with w scaled to [inner, hi]
                let weight = g(zeta)? * (sign * 2.0 / n_ang as f64 * w * half * t);
                add_scaled(acc, &rslv, weight);
            }
        }
        Ok(())
    }

    fn to_original_basis(&self, acc: &CMatrix) -> CMatrix {
        &(&self.s.q * acc) * &self.s.q.adjoint()
    }
}

fn add_scaled(acc: &mut CMatrix, m: &CMatrix, weight: Complex64) {
    for i in 0..acc.rows() {
        for j in 0..acc.cols() {
            let update = m[(i, j)] * weight;
            acc[(i, j)] += update;
        }
    }
}

fn covered_by_outer(discs: &DiscSet, point: Complex64) -> bool {
    discs
        .discs
        .iter()
        .zip(discs.outer_radii.iter())
        .any(|(d, &r)| (point - d.center).norm() < r)
}

/// phi(A) by boundary-plus-area quadrature. Every eigenvalue must lie
/// inside some disc's outer region; the area term runs over the annuli
/// [eps_j, R_j], so the omitted cores contribute an O(eps^2) error for
/// covers centered on the clusters. An eigenvalue landing within 1e-10 of
/// a quadrature node triggers one radius re-jitter before failing.
pub fn phi_integral(
    f: &WirtingerFunction,
    a: &CMatrix,
    discs: &DiscSet,
    cfg: &QuadratureConfig,
) -> Result<CMatrix> {
    a.require_square()?;
    if f.max_order() < 1 {
        return Err(Error::InsufficientOrder { required: 1, available: f.max_order() });
    }
    let s = schur_decompose(a, default_cluster_tol(a))?;
    for lambda in s.t.diag() {
        if !covered_by_outer(discs, lambda) {
            return Err(Error::UncoveredEigenvalue { eigenvalue: lambda });
        }
    }
    match phi_integral_on_schur(f, &s, discs, cfg) {
        Err(Error::EigenvalueOnQuadratureNode { .. }) => {
            let jittered = discs.scaled(1.0031, 0.9973)?;
            phi_integral_on_schur(f, &s, &jittered, cfg)
        }
        other => other,
    }
}

fn phi_integral_on_schur(
    f: &WirtingerFunction,
    s: &SchurForm,
    discs: &DiscSet,
    cfg: &QuadratureConfig,
) -> Result<CMatrix> {
    let n = s.n();
    let quad = SchurQuadrature::new(s, *cfg);
    let mut acc = CMatrix::zeros(n, n);
    for (disc, &big_r) in discs.discs.iter().zip(discs.outer_radii.iter()) {
        quad.boundary(&mut acc, disc.center, big_r, &mut |zeta| f.value(zeta))?;
        quad.area(&mut acc, disc.center, disc.radius, &|_| big_r, -1.0, &mut |zeta| {
            f.partial(0, 1, zeta)
        })?;
    }
    Ok(quad.to_original_basis(&acc))
}

/// Boundary-only conjugate approximation: (1/2 pi i) sum_j of the contour
/// integral of conj(zeta) (zeta I - A)^{-1} over the core circles. The
/// discs must cover the spectrum; the error is first order in the radii.
pub fn boundary_only_conjugate(
    a: &CMatrix,
    discs: &DiscSet,
    cfg: &QuadratureConfig,
) -> Result<CMatrix> {
    a.require_square()?;
    let s = schur_decompose(a, default_cluster_tol(a))?;
    for lambda in s.t.diag() {
        let covered = discs.discs.iter().any(|d| (lambda - d.center).norm() < d.radius);
        if !covered {
            return Err(Error::UncoveredEigenvalue { eigenvalue: lambda });
        }
        for d in &discs.discs {
            if ((lambda - d.center).norm() - d.radius).abs() <= 1e-10 {
                return Err(Error::EigenvalueOnQuadratureNode { eigenvalue: lambda });
            }
        }
    }
    let quad = SchurQuadrature::new(&s, *cfg);
    let mut acc = CMatrix::zeros(s.n(), s.n());
    for disc in &discs.discs {
        quad.boundary(&mut acc, disc.center, disc.radius, &mut |zeta| Ok(zeta.conj()))?;
    }
    Ok(quad.to_original_basis(&acc))
}

/// The area-integral mass lost by omitting the cores:
/// (1/pi) sum_j integral over B(z_j, eps_j) of the resolvent. Discs must
/// be centered on the eigenvalue clusters.
pub fn disc_omission_error(
    a: &CMatrix,
    discs: &DiscSet,
    cfg: &QuadratureConfig,
) -> Result<CMatrix> {
    a.require_square()?;
    let s = schur_decompose(a, default_cluster_tol(a))?;
    let scale = operator_norm(a).max(1.0);
    for disc in &discs.discs {
        let nearest = s.t.diag().iter().map(|l| (l - disc.center).norm()).fold(f64::INFINITY, f64::min);
        if nearest > 1e-8 * scale {
            return Err(Error::domain(format!(
                "disc center {} is not an eigenvalue (distance {nearest:.3e})",
                disc.center
            )));
        }
    }
    disc_area_integral(&s, discs, cfg)
}

/// (1/pi) sum_j integral of the resolvent over the full discs; no center
/// validation, also used with off-center discs by the convergence study.
fn disc_area_integral(s: &SchurForm, discs: &DiscSet, cfg: &QuadratureConfig) -> Result<CMatrix> {
    let quad = SchurQuadrature::new(s, *cfg);
    let mut acc = CMatrix::zeros(s.n(), s.n());
    for disc in &discs.discs {
        let r = disc.radius;
        quad.area(&mut acc, disc.center, 0.0, &|_| r, 1.0, &mut |_| Ok(Complex64::new(1.0, 0.0)))?;
    }
    Ok(quad.to_original_basis(&acc))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StudyMode {
    /// contour integrals over the core circles alone, O(eps)
    BoundaryOnly,
    /// boundary over a fixed outer region plus the annular area term,
    /// cores centered on the clusters, O(eps^2)
    WithAreaCentered,
    /// same, with core centers displaced by C eps^2, still O(eps^2)
    WithAreaOffcenter,
}

impl StudyMode {
    pub fn name(&self) -> &'static str {
        match self {
            StudyMode::BoundaryOnly => "boundary_only",
            StudyMode::WithAreaCentered => "with_area_centered",
            StudyMode::WithAreaOffcenter => "with_area_offcenter",
        }
    }
}

impl std::str::FromStr for StudyMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "boundary_only" => Ok(StudyMode::BoundaryOnly),
            "with_area_centered" => Ok(StudyMode::WithAreaCentered),
            "with_area_offcenter" => Ok(StudyMode::WithAreaOffcenter),
            other => Err(Error::parse(format!("unknown study mode '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StudyRow {
    pub eps: f64,
    pub error: f64,
    pub slope_to_prev: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StudyTable {
    pub mode: String,
    pub rows: Vec<StudyRow>,
    /// least-squares slope of log error against log eps
    pub fitted_slope: f64,
}

impl StudyTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("eps,error,slope_to_prev\n");
        for row in &self.rows {
            match row.slope_to_prev {
                Some(s) => out.push_str(&format!("{},{},{}\n", row.eps, row.error, s)),
                None => out.push_str(&format!("{},{},\n", row.eps, row.error)),
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("study table serialization cannot fail")
    }
}

/// Per-epsilon disc-omission errors against the block-recurrence conjugate,
/// with the log-log slope. Deterministic center displacement directions.
pub fn convergence_study(
    a: &CMatrix,
    eps_list: &[f64],
    mode: StudyMode,
    cfg: &QuadratureConfig,
    cluster_tol: f64,
) -> Result<StudyTable> {
    if eps_list.is_empty() {
        return Err(Error::EmptyInput { what: "eps list" });
    }
    for w in eps_list.windows(2) {
        if w[1] >= w[0] {
            return Err(Error::domain("eps list must be strictly decreasing"));
        }
    }
    if !(eps_list[eps_list.len() - 1] > 0.0) {
        return Err(Error::domain("eps values must be positive"));
    }
    a.require_square()?;
    let s = schur_decompose(a, cluster_tol)?;
    let spec = eigen_structure(&s, cluster_tol);
    let reps = spec.representatives();
    let separation = spec.min_separation();
    let scale = operator_norm(a).max(1.0);
    let reference = phi_parlett_on_schur(&WirtingerFunction::tau(), &s)?;
    // fixed outer region, independent of eps
    let outer_radius = match separation {
        Some(d) => d / 2.0,
        None => 0.5 * scale,
    };
    let directions: Vec<Complex64> = (0..reps.len())
        .map(|j| Complex64::from_polar(1.0, 0.9 + 2.399_963 * j as f64))
        .collect();

    let mut rows: Vec<StudyRow> = Vec::with_capacity(eps_list.len());
    for &eps in eps_list {
        if let Some(d) = separation {
            if 3.0 * eps >= d {
                return Err(Error::domain(format!(
                    "eps {eps} too large for cluster separation {d}"
                )));
            }
        }
        if mode != StudyMode::BoundaryOnly && eps >= outer_radius {
            return Err(Error::domain(format!(
                "eps {eps} reaches the outer integration radius {outer_radius}"
            )));
        }
        let centers: Vec<Complex64> = match mode {
            StudyMode::BoundaryOnly => reps
                .iter()
                .zip(directions.iter())
                .map(|(&rep, &dir)| rep + 0.5 * eps * dir)
                .collect(),
            StudyMode::WithAreaCentered => reps.clone(),
            StudyMode::WithAreaOffcenter => reps
                .iter()
                .zip(directions.iter())
                .map(|(&rep, &dir)| rep + 0.5 * eps * eps * dir)
                .collect(),
        };
        let value = match mode {
            StudyMode::BoundaryOnly => {
                let discs = DiscSet::new(
                    centers.iter().map(|&c| Disc { center: c, radius: eps }).collect(),
                    vec![outer_radius; centers.len()],
                )?;
                boundary_only_conjugate(a, &discs, cfg)?
            }
            StudyMode::WithAreaCentered | StudyMode::WithAreaOffcenter => {
                let quad = SchurQuadrature::new(&s, *cfg);
                let mut acc = CMatrix::zeros(s.n(), s.n());
                for (&rep, &core_center) in reps.iter().zip(centers.iter()) {
                    quad.boundary(&mut acc, rep, outer_radius, &mut |zeta| Ok(zeta.conj()))?;
                    // annulus from the (possibly displaced) core out to the
                    // fixed circle around the representative
                    let upper =
                        move |theta: f64| ray_exit_radius(core_center, rep, outer_radius, theta);
                    quad.area(&mut acc, core_center, eps, &upper, -1.0, &mut |_| {
                        Ok(Complex64::new(1.0, 0.0))
                    })?;
                }
                quad.to_original_basis(&acc)
            }
        };
        let error = operator_norm(&(&value - &reference));
        let slope_to_prev = rows.last().map(|prev: &StudyRow| {
            (error.ln() - prev.error.ln()) / (eps.ln() - prev.eps.ln())
        });
        rows.push(StudyRow { eps, error, slope_to_prev });
    }
    let fitted_slope = fit_slope(&rows);
    Ok(StudyTable { mode: mode.name().to_string(), rows, fitted_slope })
}

fn fit_slope(rows: &[StudyRow]) -> f64 {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.error > 0.0)
        .map(|r| (r.eps.ln(), r.error.ln()))
        .collect();
    if pts.len() < 2 {
        return f64::NAN;
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Scalar boundary-plus-area estimate of d^{n-1} f(z) / (n-1)! inside the
/// disc, with a core of radius `omit_r` around z excluded from the area
/// term and the induced r^{2k} corrections subtracted.
pub fn pompeiu_scalar(
    f: &WirtingerFunction,
    z: Complex64,
    disc: &Disc,
    n: usize,
    omit_r: f64,
    cfg: &QuadratureConfig,
) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::domain("derivative index n must be at least 1"));
    }
    if omit_r < 0.0 {
        return Err(Error::domain("omitted radius must be nonnegative"));
    }
    let dist_to_boundary = disc.radius - (z - disc.center).norm();
    if dist_to_boundary <= omit_r {
        return Err(Error::domain(format!(
            "point {z} must lie inside the disc with more than {omit_r} to spare"
        )));
    }
    if f.max_order() < 1 || f.max_order() + 1 < n {
        return Err(Error::InsufficientOrder { required: n.max(1), available: f.max_order() });
    }

    let n_ang = cfg.angular_nodes;
    let (gl_nodes, gl_weights) = gauss_legendre(cfg.radial_nodes);
    let mut estimate = ZERO;
    // boundary: (1/2 pi i) contour of f(zeta) / (zeta - z)^n
    for a in 0..n_ang {
        let theta = TAU_PI * a as f64 / n_ang as f64;
        let dir = Complex64::from_polar(1.0, theta);
        let zeta = disc.center + disc.radius * dir;
        estimate += f.value(zeta)? / (zeta - z).powi(n as i32) * disc.radius * dir / n_ang as f64;
    }
    // area: -(1/pi) integral of dbar f / (zeta - z)^n over disc minus core
    for a in 0..n_ang {
        let theta = TAU_PI * a as f64 / n_ang as f64;
        let dir = Complex64::from_polar(1.0, theta);
        let hi = ray_exit_radius(z, disc.center, disc.radius, theta);
        if hi <= omit_r {
            continue;
        }
        let mid = 0.5 * (omit_r + hi);
        let half = 0.5 * (hi - omit_r);
        for (x, w) in gl_nodes.iter().zip(gl_weights.iter()) {
            let t = mid + half * x;
            let zeta = z + t * dir;
            let dbar = f.partial(0, 1, zeta)?;
            estimate -= dbar / (zeta - z).powi(n as i32) * (2.0 / n_ang as f64 * w * half * t);
        }
    }
    // corrections sum_k d^{n-1+k} dbar^k f(z) / ((n-1+k)! k!) r^{2k}
    if omit_r > 0.0 {
        let k_max = ((f.max_order() + 1).saturating_sub(n) / 2).min(8);
        let mut r_pow = 1.0;
        for k in 1..=k_max {
            r_pow *= omit_r * omit_r;
            let num = f.partial(n - 1 + k, k, z)?;
            let denom = factorial(n - 1 + k) * factorial(k);
            estimate -= num * (r_pow / denom);
        }
    }
    Ok(estimate)
}

fn factorial(k: usize) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}
