//! Dense symmetric eigensolver used as the independent verification oracle.
//!
//! The adjacency matrix is reduced to tridiagonal form by Householder
//! similarity transforms, then all eigenvalues are extracted by Sturm-sequence
//! bisection. Nothing here is shared with the certified power iteration in
//! `spectral`; the two routes cross-check each other in the test suite.

use crate::graph::Graph;
use crate::spectral::SpectralError;

/// Largest graph the dense oracle accepts.
pub const DENSE_LIMIT: usize = 512;

/// All adjacency eigenvalues in descending order, each accurate to well
/// within `1e-10 * max(1, max_degree)`.
pub fn dense_spectrum_oracle(g: &Graph) -> Result<Vec<f64>, SpectralError> {
    let n = g.n();
    if n > DENSE_LIMIT {
        return Err(SpectralError::TooLarge { n, limit: DENSE_LIMIT });
    }
    let mut a = vec![0.0f64; n * n];
    for u in 0..n {
        for &v in g.neighbors(u) {
            a[u * n + v] = 1.0;
        }
    }
    let (d, e) = householder_tridiagonalize(&mut a, n);
    let mut eigs = tridiagonal_eigenvalues(&d, &e);
    eigs.reverse();
    Ok(eigs)
}

/// Reduces the symmetric matrix `a` (row-major, n x n) to tridiagonal form.
/// Returns (diagonal, subdiagonal); `a` is clobbered.
fn householder_tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut e = vec![0.0f64; n.saturating_sub(1)];

    for k in 0..n.saturating_sub(2) {
        let len = n - k - 1;
        // x = A[k+1.., k]
        let mut x = vec![0.0f64; len];
        for i in 0..len {
            x[i] = a[(k + 1 + i) * n + k];
        }
        let sigma: f64 = x[1..].iter().map(|t| t * t).sum();
        if sigma == 0.0 {
            e[k] = x[0];
            continue;
        }
        let mu = (x[0] * x[0] + sigma).sqrt();
        let v0 = if x[0] <= 0.0 { x[0] - mu } else { -sigma / (x[0] + mu) };
        let beta = 2.0 * v0 * v0 / (sigma + v0 * v0);
        let mut v = x;
        for t in v.iter_mut().skip(1) {
            *t /= v0;
        }
        v[0] = 1.0;
        e[k] = mu;

        // Rank-2 update of the trailing block: B -= v w' + w v' with
        // p = beta B v, w = p - (beta/2)(p'v) v.
        let base = k + 1;
        let mut p = vec![0.0f64; len];
        for (i, pi) in p.iter_mut().enumerate() {
            let row = (base + i) * n + base;
            let mut s = 0.0;
            for j in 0..len {
                s += a[row + j] * v[j];
            }
            *pi = beta * s;
        }
        let pv: f64 = p.iter().zip(&v).map(|(pi, vi)| pi * vi).sum();
        let w: Vec<f64> = p
            .iter()
            .zip(&v)
            .map(|(pi, vi)| pi - 0.5 * beta * pv * vi)
            .collect();
        for i in 0..len {
            let row = (base + i) * n + base;
            for j in 0..len {
                a[row + j] -= v[i] * w[j] + w[i] * v[j];
            }
        }
    }

    if n >= 2 {
        e[n - 2] = a[(n - 1) * n + (n - 2)];
    }
    let d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    (d, e)
}

/// Number of eigenvalues of the tridiagonal matrix strictly below `lambda`,
/// as the count of negative pivots in the LDL' factorization.
fn sturm_count(d: &[f64], e: &[f64], lambda: f64) -> usize {
    // Tiny pivots are clamped so a zero pivot cannot poison the recursion.
    const PIVOT_GUARD: f64 = 1e-300;
    let mut count = 0;
    let mut q = d[0] - lambda;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..d.len() {
        let q_safe = if q.abs() < PIVOT_GUARD {
            if q >= 0.0 { PIVOT_GUARD } else { -PIVOT_GUARD }
        } else {
            q
        };
        q = (d[i] - lambda) - e[i - 1] * e[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues of a symmetric tridiagonal matrix, ascending, by bisection
/// inside the Gershgorin interval.
fn tridiagonal_eigenvalues(d: &[f64], e: &[f64]) -> Vec<f64> {
    let n = d.len();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![d[0]];
    }

    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..n {
        let left = if i > 0 { e[i - 1].abs() } else { 0.0 };
        let right = if i < n - 1 { e[i].abs() } else { 0.0 };
        lo = lo.min(d[i] - left - right);
        hi = hi.max(d[i] + left + right);
    }
    lo -= 1.0;
    hi += 1.0;

    let mut eigs = Vec::with_capacity(n);
    for k in 0..n {
        let mut a = lo;
        let mut b = hi;
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if b - a <= 1e-13 + 2.0 * f64::EPSILON * mid.abs() {
                break;
            }
            if sturm_count(d, e, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        eigs.push(0.5 * (a + b));
    }
    eigs
}
