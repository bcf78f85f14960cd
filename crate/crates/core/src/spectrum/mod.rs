//! Exact and numeric Laplacian spectra.

mod exact;
mod matrix;
mod numeric;
mod poly;
mod rational;

pub use exact::{
    complement_charpoly, complement_spectrum, divisible_by_root_power, extract_spectrum,
    join_charpoly, join_spectrum, ExactSpectrum, QuadraticPair,
};
pub use matrix::{charpoly, laplacian, IntMatrix};
pub use numeric::{interlacing_check, numeric_eigenvalues, symmetric_eigenvalues, INTERLACING_TOL};
pub use poly::{CharPoly, Poly};
pub use rational::{roots_above, squarefree_decomposition};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Tolerance for matching exact eigenvalues against the numeric solver.
pub const EIGENVALUE_TOL: f64 = 1e-8;

/// Characteristic polynomial and exact spectrum of `L(g)`.
pub fn laplacian_spectrum(g: &Graph) -> (CharPoly, ExactSpectrum) {
    let p = charpoly(&laplacian(g));
    let s = extract_spectrum(&p);
    (p, s)
}

/// Checks that `(x - alpha)^2` divides the characteristic polynomial of every
/// principal submatrix of `L(g)` of order `m + 2`, where `alpha` must have
/// multiplicity exactly `n - m` in `L(g)` and `1 <= m <= n - 2`.
pub fn submatrix_divisibility_check(g: &Graph, alpha: i64, m: usize) -> Result<bool> {
    let n = g.order();
    let (_, spec) = laplacian_spectrum(g);
    let found = spec.multiplicity(alpha);
    if m == 0 || m + 2 > n || found != n - m {
        return Err(Error::Multiplicity {
            alpha,
            found,
            expected: n.saturating_sub(m),
        });
    }
    let l = laplacian(g);
    let mut ok = true;
    for_each_subset(n, m + 2, &mut |rows| {
        let p = charpoly(&l.principal(rows));
        ok = divisible_by_root_power(p.as_poly(), alpha, 2);
        ok
    });
    Ok(ok)
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it returns false.
pub(crate) fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    fn rec(
        start: usize,
        n: usize,
        k: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            let go = rec(v + 1, n, k, cur, f);
            cur.pop();
            if !go {
                return false;
            }
        }
        true
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyId};

    #[test]
    fn divisibility_on_known_members() {
        let g = Graph::new(3).join(&Graph::complete(3));
        assert!(submatrix_divisibility_check(&g, 6, 3).unwrap());
        let e = family(FamilyId::Eq1Graph, &[7]).unwrap();
        assert!(submatrix_divisibility_check(&e, 7, 3).unwrap());
    }

    #[test]
    fn divisibility_rejects_wrong_multiplicity() {
        let g = Graph::new(3).join(&Graph::complete(3));
        assert!(matches!(
            submatrix_divisibility_check(&g, 6, 2),
            Err(Error::Multiplicity {
                found: 3,
                expected: 4,
                ..
            })
        ));
        assert!(submatrix_divisibility_check(&g, 5, 3).is_err());
    }

    #[test]
    fn subsets_enumerated() {
        let mut count = 0;
        for_each_subset(6, 5, &mut |_| {
            count += 1;
            true
        });
        assert_eq!(count, 6);
    }
}
