//! Dense real symmetric eigensolver for the few lowest eigenpairs.
//!
//! Householder reduction to tridiagonal form (lower triangle, row-major),
//! implicit-shift QL for all eigenvalues of the tridiagonal matrix, then
//! inverse iteration for the wanted eigenvectors and back-transformation
//! through the stored reflectors.

use crate::error::{Error, Result};

/// Eigenvalues ascending with matching orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

struct Tridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
    /// reduced matrix; row `k` holds reflector `k` right of the diagonal
    work: Vec<f64>,
    taus: Vec<f64>,
    n: usize,
}

fn tridiagonalize(matrix: &[f64], n: usize) -> Tridiagonal {
    let mut a = matrix.to_vec();
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n.saturating_sub(1)];
    let mut taus = vec![0.0; n.saturating_sub(1)];
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];

    for k in 0..n.saturating_sub(1) {
        let m = n - k - 1;
        let alpha = a[(k + 1) * n + k];
        let mut xnorm_sq = 0.0;
        for i in 1..m {
            let x = a[(k + 1 + i) * n + k];
            xnorm_sq += x * x;
        }
        diag[k] = a[k * n + k];
        if xnorm_sq == 0.0 {
            taus[k] = 0.0;
            off[k] = alpha;
            continue;
        }
        let beta = -alpha.signum() * alpha.hypot(xnorm_sq.sqrt());
        let tau = (beta - alpha) / beta;
        let scale = 1.0 / (alpha - beta);
        v[0] = 1.0;
        for i in 1..m {
            v[i] = a[(k + 1 + i) * n + k] * scale;
        }
        taus[k] = tau;
        off[k] = beta;
        a[k * n + k + 1..k * n + n].copy_from_slice(&v[..m]);

        // p = tau·A22·v from the lower triangle
        p[..m].iter_mut().for_each(|x| *x = 0.0);
        for i in 0..m {
            let row = &a[(k + 1 + i) * n + k + 1..(k + 1 + i) * n + k + 2 + i];
            let vi = v[i];
            let mut acc = row[i] * vi;
            for j in 0..i {
                acc += row[j] * v[j];
                p[j] += row[j] * vi;
            }
            p[i] += acc;
        }
        let mut pv = 0.0;
        for i in 0..m {
            p[i] *= tau;
            pv += p[i] * v[i];
        }
        let half = 0.5 * tau * pv;
        for i in 0..m {
            p[i] -= half * v[i];
        }
        // A22 −= v pᵀ + p vᵀ on the lower triangle
        for i in 0..m {
            let (vi, wi) = (v[i], p[i]);
            let row = &mut a[(k + 1 + i) * n + k + 1..(k + 1 + i) * n + k + 2 + i];
            for (j, x) in row.iter_mut().enumerate() {
                *x -= vi * p[j] + wi * v[j];
            }
        }
    }
    if n > 0 {
        diag[n - 1] = a[(n - 1) * n + n - 1];
    }
    Tridiagonal {
        diag,
        off,
        work: a,
        taus,
        n,
    }
}

impl Tridiagonal {
    /// `y ← Q y` with `Q = H₀H₁⋯H_{n−2}`.
    fn back_transform(&self, y: &mut [f64]) {
        let n = self.n;
        for k in (0..n.saturating_sub(1)).rev() {
            let tau = self.taus[k];
            if tau == 0.0 {
                continue;
            }
            let v = &self.work[k * n + k + 1..k * n + n];
            let tail = &mut y[k + 1..];
            let dot: f64 = v.iter().zip(tail.iter()).map(|(a, b)| a * b).sum();
            let s = tau * dot;
            for (t, vi) in tail.iter_mut().zip(v) {
                *t -= s * vi;
            }
        }
    }

    fn norm(&self) -> f64 {
        let n = self.n;
        (0..n)
            .map(|i| {
                let mut s = self.diag[i].abs();
                if i > 0 {
                    s += self.off[i - 1].abs();
                }
                if i + 1 < n {
                    s += self.off[i].abs();
                }
                s
            })
            .fold(0.0, f64::max)
    }
}

/// All eigenvalues of the symmetric tridiagonal matrix, ascending.
fn tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    let max_iter = 60;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > max_iter {
                return Err(Error::EigenSolver {
                    iterations: iter,
                    detail: format!("implicit QL stalled at index {l} (off-diagonal {:e})", e[l]),
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// LU factors of `T − λI` with partial pivoting, for repeated solves.
struct ShiftedLu {
    diag: Vec<f64>,
    sup1: Vec<f64>,
    sup2: Vec<f64>,
    mult: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    fn new(d: &[f64], e: &[f64], shift: f64, tiny: f64) -> Self {
        let n = d.len();
        let mut diag: Vec<f64> = d.iter().map(|x| x - shift).collect();
        let mut sup1: Vec<f64> = e.to_vec();
        sup1.push(0.0);
        let mut sup2 = vec![0.0; n];
        let mut mult = vec![0.0; n];
        let mut swapped = vec![false; n];
        for i in 0..n.saturating_sub(1) {
            let sub = e[i];
            if diag[i].abs() >= sub.abs() {
                if diag[i] == 0.0 {
                    diag[i] = tiny;
                }
                let m = sub / diag[i];
                diag[i + 1] -= m * sup1[i];
                mult[i] = m;
            } else {
                let m = diag[i] / sub;
                let old_sup = sup1[i];
                diag[i] = sub;
                sup1[i] = diag[i + 1];
                sup2[i] = sup1[i + 1];
                diag[i + 1] = old_sup - m * sup1[i];
                sup1[i + 1] = -m * sup2[i];
                mult[i] = m;
                swapped[i] = true;
            }
        }
        for x in diag.iter_mut() {
            if *x == 0.0 {
                *x = tiny;
            }
        }
        Self {
            diag,
            sup1,
            sup2,
            mult,
            swapped,
        }
    }

    fn solve(&self, rhs: &mut [f64]) {
        let n = rhs.len();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                rhs.swap(i, i + 1);
            }
            rhs[i + 1] -= self.mult[i] * rhs[i];
        }
        for i in (0..n).rev() {
            let mut v = rhs[i];
            if i + 1 < n {
                v -= self.sup1[i] * rhs[i + 1];
            }
            if i + 2 < n {
                v -= self.sup2[i] * rhs[i + 2];
            }
            rhs[i] = v / self.diag[i];
        }
    }
}

fn normalize(x: &mut [f64]) -> f64 {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
    norm
}

fn orthogonalize(x: &mut [f64], against: &[Vec<f64>]) {
    for u in against {
        let dot: f64 = x.iter().zip(u).map(|(a, b)| a * b).sum();
        x.iter_mut().zip(u).for_each(|(a, b)| *a -= dot * b);
    }
}

/// Eigenvectors of the tridiagonal matrix for the given (ascending)
/// eigenvalues by inverse iteration; vectors of nearby eigenvalues are
/// kept orthogonal by Gram–Schmidt.
fn tridiagonal_eigenvectors(tri: &Tridiagonal, values: &[f64]) -> Vec<Vec<f64>> {
    let n = tri.n;
    let norm = tri.norm().max(f64::MIN_POSITIVE);
    let tiny = f64::EPSILON * norm;
    let cluster_gap = 1e-3 * norm;
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(values.len());
    let mut cluster_start = 0;
    for (k, &lambda) in values.iter().enumerate() {
        if k > 0 && lambda - values[k - 1] > cluster_gap {
            cluster_start = k;
        }
        let lu = ShiftedLu::new(&tri.diag, &tri.off, lambda, tiny);
        // deterministic, generic start vector
        let mut x: Vec<f64> = (0..n)
            .map(|i| 1.0 + 0.5 * ((i as f64 + 1.0) * (0.618_033_988_75 + k as f64)).sin())
            .collect();
        normalize(&mut x);
        for _ in 0..4 {
            lu.solve(&mut x);
            orthogonalize(&mut x, &vectors[cluster_start..k]);
            if normalize(&mut x) == 0.0 {
                x = (0..n).map(|i| if i == k % n { 1.0 } else { 0.0 }).collect();
            }
        }
        vectors.push(x);
    }
    vectors
}

/// Largest absolute row sum.
pub fn inf_norm(matrix: &[f64], n: usize) -> f64 {
    (0..n)
        .map(|i| {
            matrix[i * n..(i + 1) * n]
                .iter()
                .map(|x| x.abs())
                .sum::<f64>()
        })
        .fold(0.0, f64::max)
}

/// `‖A x − λ x‖₂` for a full row-major matrix.
pub fn residual_norm(matrix: &[f64], n: usize, lambda: f64, x: &[f64]) -> f64 {
    (0..n)
        .map(|i| {
            let row = &matrix[i * n..(i + 1) * n];
            let ax: f64 = row.iter().zip(x).map(|(a, b)| a * b).sum();
            let r = ax - lambda * x[i];
            r * r
        })
        .sum::<f64>()
        .sqrt()
}

/// The `k` lowest eigenpairs of a full, symmetric, row-major `n × n` matrix.
///
/// Only the lower triangle is read. Each eigenvector has its
/// largest-magnitude component positive. The results are checked after the
/// fact: residuals must be below `1e-8·‖A‖∞` and the vectors orthonormal to
/// `1e-8`, otherwise an [`Error::EigenSolver`] is returned.
pub fn lowest_eigenpairs(matrix: &[f64], n: usize, k: usize) -> Result<SymmetricEigen> {
    if matrix.len() != n * n {
        return Err(Error::invalid(format!(
            "matrix has {} entries, expected {n}x{n}",
            matrix.len()
        )));
    }
    if k > n {
        return Err(Error::invalid(format!(
            "requested {k} eigenpairs of a {n}x{n} matrix"
        )));
    }
    if n == 0 || k == 0 {
        return Ok(SymmetricEigen {
            values: Vec::new(),
            vectors: Vec::new(),
        });
    }
    let tri = tridiagonalize(matrix, n);
    let all = tridiagonal_eigenvalues(&tri.diag, &tri.off)?;
    let values = all[..k].to_vec();
    let mut vectors = tridiagonal_eigenvectors(&tri, &values);
    for x in vectors.iter_mut() {
        tri.back_transform(x);
        normalize(x);
        let lead = x
            .iter()
            .copied()
            .fold(0.0f64, |m, v| if v.abs() > m.abs() { v } else { m });
        if lead < 0.0 {
            x.iter_mut().for_each(|v| *v = -*v);
        }
    }

    let scale = inf_norm(matrix, n).max(f64::MIN_POSITIVE);
    for (j, (lambda, x)) in values.iter().zip(&vectors).enumerate() {
        let r = residual_norm(matrix, n, *lambda, x);
        if r > 1e-8 * scale {
            return Err(Error::EigenSolver {
                iterations: 4,
                detail: format!("eigenpair {j}: residual {r:e} exceeds 1e-8 x {scale:e}"),
            });
        }
    }
    for i in 0..k {
        for j in 0..=i {
            let dot: f64 = vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a * b).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            if (dot - target).abs() > 1e-8 {
                return Err(Error::EigenSolver {
                    iterations: 4,
                    detail: format!("eigenvectors {i}, {j} not orthonormal (overlap {dot:e})"),
                });
            }
        }
    }
    Ok(SymmetricEigen { values, vectors })
}

/// All eigenvalues, ascending, without vectors.
pub fn eigenvalues(matrix: &[f64], n: usize) -> Result<Vec<f64>> {
    if matrix.len() != n * n {
        return Err(Error::invalid(format!(
            "matrix has {} entries, expected {n}x{n}",
            matrix.len()
        )));
    }
    let tri = tridiagonalize(matrix, n);
    tridiagonal_eigenvalues(&tri.diag, &tri.off)
}
