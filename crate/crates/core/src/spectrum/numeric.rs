//! Cyclic Jacobi eigensolver for real symmetric matrices.

use super::matrix::{check_symmetric, IntMatrix};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of the symmetric `n x n` row-major matrix `a`, descending.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    let norm: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * norm.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let np = c * akp - s * akq;
                    let nq = s * akp + c * akq;
                    a[k * n + p] = np;
                    a[p * n + k] = np;
                    a[k * n + q] = nq;
                    a[q * n + k] = nq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}

pub fn numeric_eigenvalues(m: &IntMatrix) -> Result<Vec<f64>> {
    check_symmetric(m)?;
    Ok(symmetric_eigenvalues(m.to_f64(), m.order()))
}

/// Tolerance for interlacing comparisons between two approximate spectra.
pub const INTERLACING_TOL: f64 = 1e-6;

/// Checks `λ_i >= μ_i >= λ_{n-m+i}` for the principal submatrix on `rows`.
pub fn interlacing_check(m: &IntMatrix, rows: &[usize]) -> Result<bool> {
    let n = m.order();
    let k = rows.len();
    let mut seen = vec![false; n];
    if k == 0
        || rows
            .iter()
            .any(|&r| r >= n || std::mem::replace(&mut seen[r], true))
    {
        return Err(Error::BadSubset { order: n });
    }
    let full = numeric_eigenvalues(m)?;
    let sub = numeric_eigenvalues(&m.principal(rows))?;
    Ok((0..k).all(|i| {
        full[i] >= sub[i] - INTERLACING_TOL && sub[i] >= full[n - k + i] - INTERLACING_TOL
    }))
}
