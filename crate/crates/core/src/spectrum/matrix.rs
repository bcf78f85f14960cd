use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::poly::{CharPoly, Poly};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = IntMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.entries[i * n + j] = BigInt::from(v);
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.order + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Principal submatrix on `rows` (in the given order).
    pub fn principal(&self, rows: &[usize]) -> IntMatrix {
        let k = rows.len();
        let mut m = IntMatrix::zeros(k);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in rows.iter().enumerate() {
                m.entries[a * k + b] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries
            .iter()
            .map(|v| v.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// `L(G) = D(G) - A(G)`.
pub fn laplacian(g: &Graph) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n);
    for v in 0..n {
        m.set(v, v, BigInt::from(g.degree(v)));
        for u in g.neighbor_iter(v) {
            m.set(v, u, BigInt::from(-1));
        }
    }
    m
}

/// `det(xI - M)` by Berkowitz's division-free algorithm.
///
/// Processes leading principal submatrices `M_r`. With `M_{r+1}` split as
/// `[[M_r, c], [s, a]]`, the coefficient vector of `M_{r+1}` is a lower
/// triangular Toeplitz matrix with first column
/// `1, -a, -s c, -s M_r c, ..., -s M_r^{r-1} c` applied to that of `M_r`.
pub fn charpoly(m: &IntMatrix) -> CharPoly {
    let n = m.order();
    // descending coefficients of the current leading block
    let mut p: Vec<BigInt> = vec![BigInt::from(1)];
    for r in 0..n {
        let mut col = Vec::with_capacity(r + 2);
        col.push(BigInt::from(1));
        col.push(-m.get(r, r));
        let mut v: Vec<BigInt> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for k in 0..r {
            let dot: BigInt = (0..r).map(|j| m.get(r, j) * &v[j]).sum();
            col.push(-dot);
            if k + 1 < r {
                v = (0..r)
                    .map(|i| (0..r).map(|j| m.get(i, j) * &v[j]).sum())
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                if pj.is_zero() {
                    continue;
                }
                *slot += &col[i - j] * pj;
            }
        }
        p = next;
    }
    p.reverse();
    CharPoly::from_poly(Poly::new(p)).expect("characteristic polynomial is monic")
}

pub(crate) fn check_symmetric(m: &IntMatrix) -> Result<()> {
    if m.is_symmetric() {
        Ok(())
    } else {
        Err(Error::NotSymmetric)
    }
}
