//! Complex Schur decomposition: Householder reduction to Hessenberg form
//! followed by single-shift (Wilkinson) QR iteration with deflation, then
//! reordering so that eigenvalue clusters occupy adjacent diagonal blocks.

use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Unitary Q and upper-triangular T with A = Q T Q^H, plus the partition of
/// the diagonal into cluster blocks. `block_starts` always begins with 0;
/// block k spans `block_starts[k]..block_starts[k+1]` (or to n for the last).
#[derive(Debug, Clone)]
pub struct SchurForm {
    pub q: CMatrix,
    pub t: CMatrix,
    pub block_starts: Vec<usize>,
}

impl SchurForm {
    pub fn n(&self) -> usize {
        self.t.rows()
    }

    pub fn block_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let n = self.n();
        let mut out = Vec::with_capacity(self.block_starts.len());
        for (k, &start) in self.block_starts.iter().enumerate() {
            let end = self.block_starts.get(k + 1).copied().unwrap_or(n);
            out.push(start..end);
        }
        out
    }

    /// Reassemble Q T Q^H.
    pub fn reconstruct(&self) -> CMatrix {
        &(&self.q * &self.t) * &self.q.adjoint()
    }
}

/// Complex Givens rotation G = [[c, s], [-conj(s), c]] with c real >= 0 and
/// G (a, b)^T = (r, 0)^T.
pub(crate) fn givens(a: Complex64, b: Complex64) -> (f64, Complex64, Complex64) {
    if b == ZERO {
        return (1.0, ZERO, a);
    }
    if a == ZERO {
        let babs = b.norm();
        return (0.0, b.conj() / babs, Complex64::new(babs, 0.0));
    }
    let aabs = a.norm();
    let denom = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let c = aabs / denom;
    let phase = a / aabs;
    let s = phase * b.conj() / denom;
    (c, s, phase * denom)
}

fn apply_left(m: &mut CMatrix, k: usize, c: f64, s: Complex64, cols: std::ops::Range<usize>) {
    for j in cols {
        let x = m[(k, j)];
        let y = m[(k + 1, j)];
        m[(k, j)] = c * x + s * y;
        m[(k + 1, j)] = -s.conj() * x + c * y;
    }
}

/// Right-multiplication by G^H on columns k, k+1.
fn apply_right(m: &mut CMatrix, k: usize, c: f64, s: Complex64, rows: std::ops::Range<usize>) {
    for i in rows {
        let x = m[(i, k)];
        let y = m[(i, k + 1)];
        m[(i, k)] = c * x + s.conj() * y;
        m[(i, k + 1)] = -s * x + c * y;
    }
}

/// Householder reduction to upper Hessenberg form; returns (H, Q) with
/// A = Q H Q^H.
fn hessenberg(a: &CMatrix) -> (CMatrix, CMatrix) {
    let n = a.rows();
    let mut h = a.clone();
    let mut q = CMatrix::identity(n);
    if n < 3 {
        return (h, q);
    }
    for k in 0..n - 2 {
        let mut v: Vec<Complex64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = v[0];
        let phase = if x0 == ZERO { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let beta = -phase * norm;
        v[0] -= beta;
        let vnorm_sqr: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm_sqr == 0.0 {
            continue;
        }
        let m = v.len();
        // H <- P H with P = I - 2 v v^H / (v^H v) acting on rows k+1..n
        for j in 0..n {
            let mut dot = ZERO;
            for i in 0..m {
                dot += v[i].conj() * h[(k + 1 + i, j)];
            }
            let factor = dot * 2.0 / vnorm_sqr;
            for i in 0..m {
                let update = factor * v[i];
                h[(k + 1 + i, j)] -= update;
            }
        }
        // H <- H P on columns k+1..n
        for i in 0..n {
            let mut dot = ZERO;
            for jj in 0..m {
                dot += h[(i, k + 1 + jj)] * v[jj];
            }
            let factor = dot * 2.0 / vnorm_sqr;
            for jj in 0..m {
                let update = factor * v[jj].conj();
                h[(i, k + 1 + jj)] -= update;
            }
        }
        // Q <- Q P
        for i in 0..n {
            let mut dot = ZERO;
            for jj in 0..m {
                dot += q[(i, k + 1 + jj)] * v[jj];
            }
            let factor = dot * 2.0 / vnorm_sqr;
            for jj in 0..m {
                let update = factor * v[jj].conj();
                q[(i, k + 1 + jj)] -= update;
            }
        }
        // entries below the subdiagonal are exact zeros by construction
        h[(k + 1, k)] = beta;
        for i in k + 2..n {
            h[(i, k)] = ZERO;
        }
    }
    (h, q)
}

/// Eigenvalue of the trailing 2x2 of the active block closest to the last
/// diagonal entry.
fn wilkinson_shift(h: &CMatrix, hi: usize) -> Complex64 {
    let a = h[(hi - 1, hi - 1)];
    let b = h[(hi - 1, hi)];
    let c = h[(hi, hi - 1)];
    let d = h[(hi, hi)];
    let half_tr = (a + d) * 0.5;
    let disc = ((a - d) * 0.5).powi(2) + b * c;
    let root = disc.sqrt();
    let mu1 = half_tr + root;
    let mu2 = half_tr - root;
    if (mu1 - d).norm() <= (mu2 - d).norm() {
        mu1
    } else {
        mu2
    }
}

/// One explicit single-shift QR step on the active window [lo, hi].
fn qr_step(h: &mut CMatrix, q: &mut CMatrix, lo: usize, hi: usize, shift: Complex64) {
    let n = h.rows();
    for k in lo..=hi {
        h[(k, k)] -= shift;
    }
    let mut rotations = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (c, s, r) = givens(h[(k, k)], h[(k + 1, k)]);
        apply_left(h, k, c, s, k + 1..n);
        h[(k, k)] = r;
        h[(k + 1, k)] = ZERO;
        rotations.push((c, s));
    }
    for (idx, &(c, s)) in rotations.iter().enumerate() {
        let k = lo + idx;
        let row_end = (k + 2).min(hi) + 1;
        apply_right(h, k, c, s, 0..row_end.min(n));
        apply_right(q, k, c, s, 0..n);
    }
    for k in lo..=hi {
        h[(k, k)] += shift;
    }
}

/// QR iteration on a Hessenberg matrix. Mutates (h, q) toward triangular
/// form. Iteration budget is `100 * n` per eigenvalue deflation.
fn qr_iterate(h: &mut CMatrix, q: &mut CMatrix) -> Result<()> {
    let n = h.rows();
    if n < 2 {
        return Ok(());
    }
    let scale = h.frobenius_norm().max(f64::MIN_POSITIVE);
    let eps = f64::EPSILON;
    let negligible = |h: &CMatrix, i: usize| -> bool {
        let local = h[(i - 1, i - 1)].norm() + h[(i, i)].norm();
        let thr = if local > 0.0 { eps * local } else { eps * scale };
        h[(i, i - 1)].norm() <= thr
    };
    let cap = 100 * n;
    let mut hi = n - 1;
    let mut since_deflation = 0usize;
    while hi > 0 {
        if negligible(h, hi) {
            h[(hi, hi - 1)] = ZERO;
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        // unreduced window [lo, hi]
        let mut lo = hi;
        while lo > 0 && !negligible(h, lo) {
            lo -= 1;
        }
        if lo > 0 {
            h[(lo, lo - 1)] = ZERO;
        }
        if since_deflation >= cap {
            return Err(Error::NoConvergence { what: "QR iteration", iterations: cap });
        }
        let shift = if since_deflation > 0 && since_deflation.is_multiple_of(25) {
            // exceptional shift to break symmetric stagnation
            h[(hi, hi)] + Complex64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(h, hi)
        };
        qr_step(h, q, lo, hi, shift);
        since_deflation += 1;
    }
    // flush rounding below the diagonal
    for i in 0..n {
        for j in 0..i {
            h[(i, j)] = ZERO;
        }
    }
    Ok(())
}

/// Connected components of the diagonal under |d_i - d_j| <= tol, merged
/// until the cluster means themselves stay separated by more than tol.
pub(crate) fn cluster_diagonal(diag: &[Complex64], tol: f64) -> Vec<Vec<usize>> {
    let n = diag.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in i + 1..n {
            if (diag[i] - diag[j]).norm() <= tol {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    loop {
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut group_of = vec![usize::MAX; n];
        for i in 0..n {
            let root = find(&mut parent, i);
            if group_of[root] == usize::MAX {
                group_of[root] = groups.len();
                groups.push(Vec::new());
            }
            groups[group_of[root]].push(i);
        }
        let means: Vec<Complex64> = groups
            .iter()
            .map(|g| g.iter().map(|&i| diag[i]).sum::<Complex64>() / g.len() as f64)
            .collect();
        let mut merged = false;
        'outer: for a in 0..groups.len() {
            for b in a + 1..groups.len() {
                if (means[a] - means[b]).norm() <= tol {
                    let (ra, rb) = (find(&mut parent, groups[a][0]), find(&mut parent, groups[b][0]));
                    parent[ra] = rb;
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            groups.sort_by_key(|g| g.iter().copied().min().unwrap());
            return groups;
        }
    }
}

/// Swap the adjacent diagonal entries k, k+1 of T by a unitary similarity.
/// Equal entries make the swap the identity.
pub(crate) fn swap_adjacent(t: &mut CMatrix, q: &mut CMatrix, k: usize) {
    let n = t.rows();
    let lam1 = t[(k, k)];
    let lam2 = t[(k + 1, k + 1)];
    let t12 = t[(k, k + 1)];
    let gap = lam2 - lam1;
    if gap == ZERO {
        return;
    }
    let (c, s, _r) = givens(t12, gap);
    apply_left(t, k, c, s, 0..n);
    apply_right(t, k, c, s, 0..n);
    apply_right(q, k, c, s, 0..n);
    t[(k + 1, k)] = ZERO;
    // the similarity exchanges the eigenvalues exactly
    t[(k, k)] = lam2;
    t[(k + 1, k + 1)] = lam1;
}

/// Reorder the diagonal of a Schur form to `target_order` by adjacent
/// unitary swaps. `target_order[p]` is the current diagonal position whose
/// eigenvalue should end up at position p.
pub fn reorder_schur(s: &SchurForm, target_order: &[usize]) -> Result<SchurForm> {
    let n = s.n();
    if target_order.len() != n {
        return Err(Error::domain(format!(
            "permutation has length {}, expected {n}",
            target_order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in target_order {
        if p >= n || seen[p] {
            return Err(Error::domain("target order is not a permutation"));
        }
        seen[p] = true;
    }

    let mut t = s.t.clone();
    let mut q = s.q.clone();
    // track which original position sits where
    let mut current: Vec<usize> = (0..n).collect();
    // original block id of every position, so block_starts can be rebuilt
    let mut block_of = vec![0usize; n];
    for (bid, range) in s.block_ranges().iter().enumerate() {
        for i in range.clone() {
            block_of[i] = bid;
        }
    }
    for p in 0..n {
        let want = target_order[p];
        let at = current.iter().position(|&orig| orig == want).expect("tracked");
        for k in (p..at).rev() {
            swap_adjacent(&mut t, &mut q, k);
            current.swap(k, k + 1);
        }
    }
    let mut block_starts = vec![0usize];
    for p in 1..n {
        if block_of[current[p]] != block_of[current[p - 1]] {
            block_starts.push(p);
        }
    }
    Ok(SchurForm { q, t, block_starts })
}

/// Full pipeline: Hessenberg, QR iteration, cluster the diagonal with
/// `cluster_tol`, reorder so cluster members are adjacent.
pub fn schur_decompose(a: &CMatrix, cluster_tol: f64) -> Result<SchurForm> {
    let n = a.require_square()?;
    if !a.is_finite() {
        return Err(Error::domain("matrix has non-finite entries"));
    }
    if cluster_tol <= 0.0 {
        return Err(Error::domain("cluster tolerance must be positive"));
    }
    if n == 0 {
        return Ok(SchurForm { q: CMatrix::zeros(0, 0), t: CMatrix::zeros(0, 0), block_starts: vec![] });
    }
    let (mut t, mut q) = hessenberg(a);
    qr_iterate(&mut t, &mut q)?;

    let clusters = cluster_diagonal(&t.diag(), cluster_tol);
    // target order: cluster by cluster, members in diagonal order
    let mut target = Vec::with_capacity(n);
    let mut block_starts = Vec::with_capacity(clusters.len());
    for group in &clusters {
        block_starts.push(target.len());
        target.extend(group.iter().copied());
    }
    let plain = SchurForm { q, t, block_starts: vec![0] };
    let reordered = reorder_schur(&plain, &target)?;
    Ok(SchurForm { q: reordered.q, t: reordered.t, block_starts })
}
