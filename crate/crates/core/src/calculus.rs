//! Evaluation of phi(A) for merely-smooth phi.
//!
//! Two routes live here. The interpolation route builds the Hermite
//! polynomial matching d^nu phi at each eigenvalue cluster (confluent
//! divided differences use the d-partial convention) and evaluates it at
//! the matrix. The block route reorders the Schur form by clusters,
//! expands phi on each diagonal block through the nilpotent series, and
//! fills the off-diagonal blocks by Sylvester recurrences.

use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::linalg::{schur_decompose, solve_sylvester_tri, SchurForm, Spectrum};
use crate::wirtinger::WirtingerFunction;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Triangular table of divided differences over an admissibly ordered node
/// list (equal nodes adjacent). Entry (i, j) is phi[lambda_i, ..., lambda_j].
#[derive(Debug, Clone)]
pub struct DividedDifferenceTable {
    nodes: Vec<Complex64>,
    /// layers[d][i] = phi[lambda_i, ..., lambda_{i+d}]
    layers: Vec<Vec<Complex64>>,
}

impl DividedDifferenceTable {
    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        assert!(i <= j && j < self.nodes.len(), "table index out of range");
        self.layers[j - i][i]
    }

    /// Newton coefficients phi[lambda_0, ..., lambda_k] for k = 0..m-1.
    pub fn newton_coefficients(&self) -> Vec<Complex64> {
        self.layers.iter().map(|layer| layer[0]).collect()
    }
}

fn check_admissible(nodes: &[Complex64]) -> Result<()> {
    if nodes.is_empty() {
        return Err(Error::EmptyInput { what: "node list" });
    }
    for i in 0..nodes.len() {
        for j in i + 2..nodes.len() {
            if nodes[i] == nodes[j] && nodes[i + 1..j].iter().any(|z| *z != nodes[i]) {
                return Err(Error::InadmissibleNodes);
            }
        }
    }
    Ok(())
}

fn longest_equal_run(nodes: &[Complex64]) -> usize {
    let mut best = 1;
    let mut run = 1;
    for w in nodes.windows(2) {
        if w[0] == w[1] {
            run += 1;
            best = best.max(run);
        } else {
            run = 1;
        }
    }
    best
}

/// Fill the divided-difference table. Distinct endpoints use the usual
/// recurrence; equal endpoints take d^{j-i} phi(lambda_i) / (j-i)!.
pub fn divided_differences(
    f: &WirtingerFunction,
    nodes: &[Complex64],
) -> Result<DividedDifferenceTable> {
    check_admissible(nodes)?;
    let run = longest_equal_run(nodes);
    if run - 1 > f.max_order() {
        return Err(Error::InsufficientOrder { required: run - 1, available: f.max_order() });
    }
    let m = nodes.len();
    let mut layers: Vec<Vec<Complex64>> = Vec::with_capacity(m);
    let mut base = Vec::with_capacity(m);
    for &z in nodes {
        base.push(f.value(z)?);
    }
    layers.push(base);
    let mut factorial = 1.0;
    for d in 1..m {
        factorial *= d as f64;
        let mut layer = Vec::with_capacity(m - d);
        for i in 0..m - d {
            let j = i + d;
            let value = if nodes[i] == nodes[j] {
                f.partial(d, 0, nodes[i])? / factorial
            } else {
                (layers[d - 1][i + 1] - layers[d - 1][i]) / (nodes[j] - nodes[i])
            };
            layer.push(value);
        }
        layers.push(layer);
    }
    Ok(DividedDifferenceTable { nodes: nodes.to_vec(), layers })
}

/// Upper bidiagonal matrix with the nodes on the diagonal and ones on the
/// superdiagonal. Applying a function to it reproduces the whole
/// divided-difference table entrywise.
pub fn opitz_matrix(nodes: &[Complex64]) -> Result<CMatrix> {
    check_admissible(nodes)?;
    let m = nodes.len();
    let mut a = CMatrix::zeros(m, m);
    for (i, &z) in nodes.iter().enumerate() {
        a[(i, i)] = z;
        if i + 1 < m {
            a[(i, i + 1)] = ONE;
        }
    }
    Ok(a)
}

/// Interpolation polynomial in Newton form over an explicit node multiset.
#[derive(Debug, Clone)]
pub struct HermitePolynomial {
    nodes: Vec<Complex64>,
    coefficients: Vec<Complex64>,
}

impl HermitePolynomial {
    pub fn from_newton(nodes: Vec<Complex64>, coefficients: Vec<Complex64>) -> Self {
        assert_eq!(nodes.len(), coefficients.len(), "one coefficient per node");
        HermitePolynomial { nodes, coefficients }
    }

    /// Monomial-basis polynomial c_0 + c_1 z + ... as a Newton form with all
    /// nodes at zero.
    pub fn from_monomial_coefficients(coeffs: Vec<Complex64>) -> Self {
        let nodes = vec![ZERO; coeffs.len()];
        HermitePolynomial { nodes, coefficients: coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    pub fn newton_coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let m = self.coefficients.len();
        if m == 0 {
            return ZERO;
        }
        let mut acc = self.coefficients[m - 1];
        for k in (0..m - 1).rev() {
            acc = acc * (z - self.nodes[k]) + self.coefficients[k];
        }
        acc
    }

    /// p^{(order)}(z) by Horner with derivative propagation.
    pub fn eval_derivative(&self, order: usize, z: Complex64) -> Complex64 {
        let m = self.coefficients.len();
        if m == 0 {
            return ZERO;
        }
        let mut d = vec![ZERO; order + 1];
        d[0] = self.coefficients[m - 1];
        for k in (0..m - 1).rev() {
            let shift = z - self.nodes[k];
            for r in (1..=order).rev() {
                d[r] = d[r] * shift + d[r - 1] * r as f64;
            }
            d[0] = d[0] * shift + self.coefficients[k];
        }
        d[order]
    }

    /// Expand into ascending monomial coefficients.
    pub fn monomial_coefficients(&self) -> Vec<Complex64> {
        let m = self.coefficients.len();
        let mut out = vec![ZERO; m.max(1)];
        if m == 0 {
            return out;
        }
        out[0] = self.coefficients[m - 1];
        let mut degree = 0usize;
        for k in (0..m - 1).rev() {
            // multiply by (z - node_k), then add c_k
            degree += 1;
            for idx in (1..=degree).rev() {
                out[idx] = out[idx - 1] - self.nodes[k] * out[idx];
            }
            out[0] = -self.nodes[k] * out[0] + self.coefficients[k];
        }
        out
    }
}

/// Deterministic Leja-style ordering of the cluster representatives: start
/// at the largest modulus, then greedily maximize the distance product to
/// the already chosen points. Ties break on cluster index.
fn leja_order(reps: &[Complex64]) -> Vec<usize> {
    let n = reps.len();
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for step in 0..n {
        let mut best: Option<(usize, f64)> = None;
        for i in 0..n {
            if used[i] {
                continue;
            }
            let score = if step == 0 {
                reps[i].norm()
            } else {
                order.iter().map(|&j: &usize| (reps[i] - reps[j]).norm().ln()).sum()
            };
            let better = match best {
                None => true,
                Some((_, s)) => score > s,
            };
            if better {
                best = Some((i, score));
            }
        }
        let (idx, _) = best.expect("non-empty");
        used[idx] = true;
        order.push(idx);
    }
    order
}

/// Hermite interpolant matching d^nu f(lambda_j) for nu = 0..n_j at every
/// cluster representative.
pub fn hermite_interpolant(spec: &Spectrum, f: &WirtingerFunction) -> Result<HermitePolynomial> {
    if spec.clusters.is_empty() {
        return Err(Error::EmptyInput { what: "spectrum" });
    }
    let needed = spec.max_exponent_bound() - 1;
    if needed > f.max_order() {
        return Err(Error::InsufficientOrder { required: needed, available: f.max_order() });
    }
    let reps = spec.representatives();
    let order = leja_order(&reps);
    let mut nodes = Vec::with_capacity(spec.total_multiplicity());
    for &idx in &order {
        let cluster = &spec.clusters[idx];
        nodes.extend(std::iter::repeat_n(cluster.representative, cluster.exponent_bound));
    }
    let table = divided_differences(f, &nodes)?;
    Ok(HermitePolynomial { nodes, coefficients: table.newton_coefficients() })
}

/// Horner evaluation of the Newton-form polynomial at a matrix argument.
pub fn eval_poly_at_matrix(p: &HermitePolynomial, a: &CMatrix) -> Result<CMatrix> {
    let n = a.require_square()?;
    let m = p.coefficients.len();
    if m == 0 {
        return Ok(CMatrix::zeros(n, n));
    }
    let mut acc = CMatrix::identity(n).scale(p.coefficients[m - 1]);
    for k in (0..m - 1).rev() {
        let mut shifted = a.clone();
        for i in 0..n {
            shifted[(i, i)] -= p.nodes[k];
        }
        acc = &acc * &shifted;
        for i in 0..n {
            acc[(i, i)] += p.coefficients[k];
        }
    }
    Ok(acc)
}

/// phi(A) through the Hermite interpolation pipeline.
pub fn phi_hermite(f: &WirtingerFunction, a: &CMatrix, cluster_tol: f64) -> Result<CMatrix> {
    let s = schur_decompose(a, cluster_tol)?;
    let spec = crate::linalg::eigen_structure(&s, cluster_tol);
    let p = hermite_interpolant(&spec, f)?;
    eval_poly_at_matrix(&p, a)
}

/// phi on a single cluster block T = lambda I + N: the series
/// sum_nu d^nu phi(lambda) / nu! N^nu, truncated at the block size or when
/// a power of N collapses below 1e-14 ||T||.
fn block_value(
    f: &WirtingerFunction,
    t: &CMatrix,
    range: std::ops::Range<usize>,
    lambda: Complex64,
) -> Result<CMatrix> {
    let size = range.len();
    let mut nilpotent = CMatrix::zeros(size, size);
    for i in 0..size {
        for j in i + 1..size {
            nilpotent[(i, j)] = t[(range.start + i, range.start + j)];
        }
    }
    let block_scale = {
        let mut s = nilpotent.frobenius_norm().powi(2);
        for i in range.clone() {
            s += t[(i, i)].norm_sqr();
        }
        s.sqrt()
    };
    let mut out = CMatrix::identity(size).scale(f.value(lambda)?);
    let mut power = CMatrix::identity(size);
    let mut factorial = 1.0;
    for nu in 1..size {
        factorial *= nu as f64;
        power = &power * &nilpotent;
        if power.frobenius_norm() < 1e-14 * block_scale {
            break;
        }
        let coeff = f.partial(nu, 0, lambda)? / factorial;
        out = &out + &power.scale(coeff);
    }
    Ok(out)
}

/// phi(A) through the clustered block recurrence on the Schur form.
///
/// Diagonal blocks treat every eigenvalue of the cluster as the
/// representative value; off-diagonal blocks (i, j) are solved in order of
/// increasing superdiagonal distance, each from a Sylvester equation whose
/// right side involves already computed blocks only.
pub fn phi_parlett(f: &WirtingerFunction, a: &CMatrix, cluster_tol: f64) -> Result<CMatrix> {
    let s = schur_decompose(a, cluster_tol)?;
    phi_parlett_on_schur(f, &s)
}

pub(crate) fn phi_parlett_on_schur(f: &WirtingerFunction, s: &SchurForm) -> Result<CMatrix> {
    let n = s.n();
    let t = &s.t;
    let ranges = s.block_ranges();
    let nblocks = ranges.len();
    let reps: Vec<Complex64> = ranges
        .iter()
        .map(|r| r.clone().map(|i| t[(i, i)]).sum::<Complex64>() / r.len() as f64)
        .collect();
    let largest = ranges.iter().map(|r| r.len()).max().unwrap_or(0);
    if largest > 0 && largest - 1 > f.max_order() {
        return Err(Error::InsufficientOrder { required: largest - 1, available: f.max_order() });
    }

    let mut phi = CMatrix::zeros(n, n);
    for (b, range) in ranges.iter().enumerate() {
        let block = block_value(f, t, range.clone(), reps[b])?;
        phi.set_submatrix(range.start, range.start, &block);
    }
    let starts: Vec<usize> = ranges.iter().map(|r| r.start).collect();
    let ends: Vec<usize> = ranges.iter().map(|r| r.end).collect();
    for dist in 1..nblocks {
        for i in 0..nblocks - dist {
            let j = i + dist;
            let (ri, rj) = (ranges[i].clone(), ranges[j].clone());
            // right side of the Sylvester system: the commutator terms of
            // all blocks strictly between i and j plus the edge products,
            // assembled entrywise as
            //   sum_{m in blocks i..j-1} Phi[p][m] T[m][q]
            // - sum_{m in blocks i+1..j} T[p][m] Phi[m][q]
            let mut rhs = CMatrix::zeros(ri.len(), rj.len());
            for (pi, p) in ri.clone().enumerate() {
                for (qi, q) in rj.clone().enumerate() {
                    let mut acc = ZERO;
                    for m in starts[i]..ends[j - 1] {
                        acc += phi[(p, m)] * t[(m, q)];
                    }
                    for m in starts[i + 1]..ends[j] {
                        acc -= t[(p, m)] * phi[(m, q)];
                    }
                    rhs[(pi, qi)] = acc;
                }
            }
            let t_ii = t.submatrix(ri.clone(), ri.clone());
            let t_jj = t.submatrix(rj.clone(), rj.clone());
            let x = solve_sylvester_tri(&t_ii, &t_jj, &rhs)?;
            phi.set_submatrix(ri.start, rj.start, &x);
        }
    }
    Ok(&(&s.q * &phi) * &s.q.adjoint())
}
