//! Scalar functions of z = x + iy exposing Wirtinger partials.
//!
//! A `WirtingerFunction` carries its value w(z) together with the mixed
//! partials d^a dbar^b w(z), where d = (d/dx - i d/dy)/2 and
//! dbar = (d/dx + i d/dy)/2. A function is holomorphic exactly when its
//! dbar partial vanishes identically.
//!
//! Builtins carry closed-form partials. Black-box functions fall back to
//! central finite differences through [`numeric_partials`].

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Where the function is smooth. Evaluation inside the excluded set is a
/// domain error.
#[derive(Debug, Clone, PartialEq)]
pub enum SmoothnessDomain {
    EntirePlane,
    PuncturedAtOrigin,
    OffImaginaryAxis,
    PuncturedAt(Vec<Complex64>),
}

impl SmoothnessDomain {
    fn check(&self, z: Complex64) -> Result<()> {
        let excluded = match self {
            SmoothnessDomain::EntirePlane => false,
            SmoothnessDomain::PuncturedAtOrigin => z == ZERO,
            SmoothnessDomain::OffImaginaryAxis => z.re == 0.0,
            SmoothnessDomain::PuncturedAt(points) => points.contains(&z),
        };
        if excluded {
            Err(Error::domain(format!("evaluation point {z} lies in the excluded set")))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for SmoothnessDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmoothnessDomain::EntirePlane => write!(f, "entire plane"),
            SmoothnessDomain::PuncturedAtOrigin => write!(f, "plane punctured at the origin"),
            SmoothnessDomain::OffImaginaryAxis => write!(f, "plane minus the imaginary axis"),
            SmoothnessDomain::PuncturedAt(points) => write!(f, "plane punctured at {points:?}"),
        }
    }
}

#[derive(Clone)]
enum Kind {
    /// coeff * z^k * zbar^m
    Monomial { k: u32, m: u32, coeff: Complex64 },
    /// sum of (k, m, coeff) monomials
    ZzbarPoly { terms: Vec<(u32, u32, Complex64)> },
    /// holomorphic polynomial, ascending coefficients
    HoloPoly { coeffs: Vec<Complex64> },
    /// |z| = (z zbar)^{1/2}
    Abs,
    /// z / |z| = (z zbar)^{-1/2} z
    Arg,
    /// (z^2)^{-1/2} z, locally constant +-1 off the imaginary axis
    Sign,
    /// local extension of real derivative data at real nodes
    RealExtension { nodes: Vec<RealExtensionNode> },
    /// value-only function with finite-difference partials
    BlackBox {
        f: Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>,
        max_order: usize,
        step: f64,
        singular: Vec<Complex64>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RealExtensionNode {
    pub point: f64,
    /// derivative values at the node, orders 0..=n
    pub derivatives: Vec<f64>,
}

/// Symbolic differentiation of |z| and z/|z| is carried to this total order.
pub const ABS_ARG_MAX_ORDER: usize = 8;

/// Effectively unlimited order for builtins with closed forms at all orders.
pub const UNBOUNDED_ORDER: usize = usize::MAX / 2;

#[derive(Clone)]
pub struct WirtingerFunction {
    kind: Kind,
}

impl fmt::Debug for WirtingerFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WirtingerFunction({})", self.describe())
    }
}

/// JSON wire format for function specs:
/// `{"fn":"tau"}`, `{"fn":"monomial","k":2,"m":1}`,
/// `{"fn":"zzbar_poly","terms":[[k,m,re,im],...]}`,
/// `{"fn":"holo_poly","coeffs":[[re,im],...]}`,
/// `{"fn":"abs"}`, `{"fn":"arg"}`, `{"fn":"sign"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "fn", rename_all = "snake_case")]
pub enum FunctionSpec {
    Tau,
    Abs,
    Arg,
    Sign,
    Monomial { k: u32, m: u32 },
    ZzbarPoly { terms: Vec<(u32, u32, f64, f64)> },
    HoloPoly { coeffs: Vec<(f64, f64)> },
}

impl FunctionSpec {
    pub fn build(&self) -> WirtingerFunction {
        match self {
            FunctionSpec::Tau => WirtingerFunction::tau(),
            FunctionSpec::Abs => WirtingerFunction::abs_fn(),
            FunctionSpec::Arg => WirtingerFunction::arg_fn(),
            FunctionSpec::Sign => WirtingerFunction::sign_fn(),
            FunctionSpec::Monomial { k, m } => WirtingerFunction::monomial(*k, *m),
            FunctionSpec::ZzbarPoly { terms } => WirtingerFunction::zzbar_poly(
                terms.iter().map(|&(k, m, re, im)| (k, m, Complex64::new(re, im))).collect(),
            ),
            FunctionSpec::HoloPoly { coeffs } => WirtingerFunction::holo_poly(
                coeffs.iter().map(|&(re, im)| Complex64::new(re, im)).collect(),
            ),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            serde_json::from_str(trimmed).map_err(|e| Error::parse(format!("function spec: {e}")))
        } else {
            match trimmed {
                "tau" => Ok(FunctionSpec::Tau),
                "abs" => Ok(FunctionSpec::Abs),
                "arg" => Ok(FunctionSpec::Arg),
                "sign" => Ok(FunctionSpec::Sign),
                other => Err(Error::parse(format!(
                    "unknown function '{other}' (expected tau, abs, arg, sign, or JSON spec)"
                ))),
            }
        }
    }
}

impl WirtingerFunction {
    /// z -> zbar.
    pub fn tau() -> Self {
        WirtingerFunction { kind: Kind::Monomial { k: 0, m: 1, coeff: ONE } }
    }

    pub fn abs_fn() -> Self {
        WirtingerFunction { kind: Kind::Abs }
    }

    pub fn arg_fn() -> Self {
        WirtingerFunction { kind: Kind::Arg }
    }

    pub fn sign_fn() -> Self {
        WirtingerFunction { kind: Kind::Sign }
    }

    /// z^k zbar^m.
    pub fn monomial(k: u32, m: u32) -> Self {
        WirtingerFunction { kind: Kind::Monomial { k, m, coeff: ONE } }
    }

    pub fn zzbar_poly(terms: Vec<(u32, u32, Complex64)>) -> Self {
        WirtingerFunction { kind: Kind::ZzbarPoly { terms } }
    }

    /// Ascending coefficients c_0 + c_1 z + ...
    pub fn holo_poly(coeffs: Vec<Complex64>) -> Self {
        WirtingerFunction { kind: Kind::HoloPoly { coeffs } }
    }

    /// Local extension of real-variable derivative data. At each real node
    /// the d-partials of the extension reproduce the supplied derivatives
    /// and the dbar-partials vanish; between nodes the value follows the
    /// nearest node's polynomial.
    pub fn real_extension(nodes: Vec<(f64, Vec<f64>)>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::EmptyInput { what: "real extension nodes" });
        }
        let mut built = Vec::with_capacity(nodes.len());
        for (point, derivatives) in nodes {
            if !point.is_finite() || derivatives.iter().any(|v| !v.is_finite()) {
                return Err(Error::domain("real extension data must be finite"));
            }
            if derivatives.is_empty() {
                return Err(Error::EmptyInput { what: "derivative values at a node" });
            }
            built.push(RealExtensionNode { point, derivatives });
        }
        Ok(WirtingerFunction { kind: Kind::RealExtension { nodes: built } })
    }

    /// Wrap a value-only function; partials come from central finite
    /// differences with the given step scale.
    pub fn black_box(
        f: Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>,
        max_order: usize,
        step: f64,
        singular: Vec<Complex64>,
    ) -> Self {
        WirtingerFunction { kind: Kind::BlackBox { f, max_order, step, singular } }
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            Kind::Monomial { k: 0, m: 1, coeff } if *coeff == ONE => "tau".to_string(),
            Kind::Monomial { k, m, .. } => format!("monomial(k={k}, m={m})"),
            Kind::ZzbarPoly { terms } => format!("zzbar_poly({} terms)", terms.len()),
            Kind::HoloPoly { coeffs } => format!("holo_poly(degree {})", coeffs.len().saturating_sub(1)),
            Kind::Abs => "abs".to_string(),
            Kind::Arg => "arg".to_string(),
            Kind::Sign => "sign".to_string(),
            Kind::RealExtension { nodes } => format!("real_extension({} nodes)", nodes.len()),
            Kind::BlackBox { .. } => "black_box".to_string(),
        }
    }

    /// Highest total derivative order available.
    pub fn max_order(&self) -> usize {
        match &self.kind {
            Kind::Monomial { .. } | Kind::ZzbarPoly { .. } | Kind::HoloPoly { .. } | Kind::Sign => {
                UNBOUNDED_ORDER
            }
            Kind::Abs | Kind::Arg => ABS_ARG_MAX_ORDER,
            Kind::RealExtension { nodes } => {
                nodes.iter().map(|n| n.derivatives.len() - 1).min().unwrap_or(0)
            }
            Kind::BlackBox { max_order, .. } => *max_order,
        }
    }

    pub fn smoothness_domain(&self) -> SmoothnessDomain {
        match &self.kind {
            Kind::Abs | Kind::Arg => SmoothnessDomain::PuncturedAtOrigin,
            Kind::Sign => SmoothnessDomain::OffImaginaryAxis,
            Kind::BlackBox { singular, .. } if !singular.is_empty() => {
                SmoothnessDomain::PuncturedAt(singular.clone())
            }
            _ => SmoothnessDomain::EntirePlane,
        }
    }

    pub fn value(&self, z: Complex64) -> Result<Complex64> {
        self.partial(0, 0, z)
    }

    /// dbar w at z.
    pub fn dbar(&self, z: Complex64) -> Result<Complex64> {
        self.partial(0, 1, z)
    }

    /// d^nu w at z.
    pub fn d(&self, nu: usize, z: Complex64) -> Result<Complex64> {
        self.partial(nu, 0, z)
    }

    /// Mixed partial d^a dbar^b w at z.
    pub fn partial(&self, a: usize, b: usize, z: Complex64) -> Result<Complex64> {
        let order = a + b;
        if order > self.max_order() {
            return Err(Error::InsufficientOrder { required: order, available: self.max_order() });
        }
        self.smoothness_domain().check(z)?;
        Ok(match &self.kind {
            Kind::Monomial { k, m, coeff } => *coeff * monomial_partial(*k, *m, a, b, z),
            Kind::ZzbarPoly { terms } => terms
                .iter()
                .map(|&(k, m, coeff)| coeff * monomial_partial(k, m, a, b, z))
                .sum(),
            Kind::HoloPoly { coeffs } => {
                if b > 0 {
                    ZERO
                } else {
                    holo_poly_derivative(coeffs, a, z)
                }
            }
            Kind::Abs => {
                // d^a dbar^b (z zbar)^{1/2} = c_a c_b |z| z^{-a} zbar^{-b}
                // with c_p the falling product of 1/2.
                let c = half_falling(0.5, a) * half_falling(0.5, b);
                Complex64::new(c, 0.0) * z.norm() * z.powi(-(a as i32)) * z.conj().powi(-(b as i32))
            }
            Kind::Arg => {
                let c = half_falling(0.5, a) * half_falling(-0.5, b);
                Complex64::new(c, 0.0) * (z / z.norm())
                    * z.powi(-(a as i32))
                    * z.conj().powi(-(b as i32))
            }
            Kind::Sign => {
                if a == 0 && b == 0 {
                    if z.re > 0.0 {
                        ONE
                    } else {
                        -ONE
                    }
                } else {
                    ZERO
                }
            }
            Kind::RealExtension { nodes } => real_extension_partial(nodes, a, b, z),
            Kind::BlackBox { f, step, singular, .. } => {
                let h = step * z.norm().max(1.0);
                return numeric_partials(f.as_ref(), z, a, b, h, singular);
            }
        })
    }
}

/// d^a dbar^b (z^k zbar^m) = k!/(k-a)! m!/(m-b)! z^{k-a} zbar^{m-b},
/// zero when a > k or b > m.
fn monomial_partial(k: u32, m: u32, a: usize, b: usize, z: Complex64) -> Complex64 {
    let (k, m) = (k as usize, m as usize);
    if a > k || b > m {
        return ZERO;
    }
    let mut factor = 1.0;
    for i in 0..a {
        factor *= (k - i) as f64;
    }
    for j in 0..b {
        factor *= (m - j) as f64;
    }
    Complex64::new(factor, 0.0) * z.powu((k - a) as u32) * z.conj().powu((m - b) as u32)
}

fn holo_poly_derivative(coeffs: &[Complex64], a: usize, z: Complex64) -> Complex64 {
    if a >= coeffs.len() {
        return ZERO;
    }
    // Horner on the a-th derivative coefficients
    let mut acc = ZERO;
    for idx in (a..coeffs.len()).rev() {
        let mut factor = 1.0;
        for i in 0..a {
            factor *= (idx - i) as f64;
        }
        acc = acc * z + coeffs[idx] * factor;
    }
    acc
}

/// prod_{i=0}^{p-1} (start - i); empty product is 1.
fn half_falling(start: f64, p: usize) -> f64 {
    (0..p).fold(1.0, |acc, i| acc * (start - i as f64))
}

fn real_extension_partial(nodes: &[RealExtensionNode], a: usize, b: usize, z: Complex64) -> Complex64 {
    if b > 0 {
        return ZERO;
    }
    let node = nodes
        .iter()
        .min_by(|x, y| {
            let dx = (z - Complex64::new(x.point, 0.0)).norm();
            let dy = (z - Complex64::new(y.point, 0.0)).norm();
            dx.partial_cmp(&dy).unwrap()
        })
        .expect("at least one node");
    let zeta = z - Complex64::new(node.point, 0.0);
    let mut acc = ZERO;
    let mut factorial = 1.0;
    for (offset, v) in node.derivatives.iter().skip(a).enumerate() {
        if offset > 0 {
            factorial *= offset as f64;
        }
        acc += Complex64::new(v / factorial, 0.0) * zeta.powu(offset as u32);
    }
    acc
}

/// Central finite-difference estimate of d^a dbar^b f at z with grid step h.
/// Uses the binomial expansion of ((dx - i dy)/2)^a ((dx + i dy)/2)^b and a
/// composed two-point central stencil per real direction; the error is
/// O(h^2) for f in C^{a+b+2}.
pub fn numeric_partials(
    f: &dyn Fn(Complex64) -> Complex64,
    z: Complex64,
    a: usize,
    b: usize,
    h: f64,
    singular: &[Complex64],
) -> Result<Complex64> {
    if h <= 0.0 {
        return Err(Error::domain("finite-difference step must be positive"));
    }
    let i_unit = Complex64::new(0.0, 1.0);
    let mut acc = ZERO;
    for i in 0..=a {
        for j in 0..=b {
            let coeff = Complex64::new(binomial(a, i) * binomial(b, j), 0.0)
                * (-i_unit).powu(i as u32)
                * i_unit.powu(j as u32);
            let p = a + b - i - j; // order in x
            let q = i + j; // order in y
            acc += coeff * central_mixed(f, z, p, q, h, singular)?;
        }
    }
    Ok(acc * Complex64::new(0.5f64.powi((a + b) as i32), 0.0))
}

/// Composed central difference D_x^p D_y^q f(z).
fn central_mixed(
    f: &dyn Fn(Complex64) -> Complex64,
    z: Complex64,
    p: usize,
    q: usize,
    h: f64,
    singular: &[Complex64],
) -> Result<Complex64> {
    let mut acc = ZERO;
    for s in 0..=p {
        for t in 0..=q {
            let sign = if (s + t) % 2 == 0 { 1.0 } else { -1.0 };
            let weight = sign * binomial(p, s) * binomial(q, t);
            let point = z
                + Complex64::new((p as f64 - 2.0 * s as f64) * h, (q as f64 - 2.0 * t as f64) * h);
            if singular.iter().any(|sing| (point - sing).norm() < h * 1e-6) {
                return Err(Error::domain(format!(
                    "finite-difference grid point {point} hits a declared singularity"
                )));
            }
            acc += Complex64::new(weight, 0.0) * f(point);
        }
    }
    Ok(acc / Complex64::new((2.0 * h).powi((p + q) as i32), 0.0))
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut out = 1.0;
    for i in 0..k {
        out *= (n - i) as f64 / (i + 1) as f64;
    }
    out
}

/// Default relative step for [`numeric_partials`].
pub fn default_fd_step(z: Complex64) -> f64 {
    1e-4 * z.norm().max(1.0)
}
