//! Polynomials over the rationals: gcd, square-free decomposition, Sturm counts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
struct QPoly(Vec<BigRational>);

impl QPoly {
    fn from_int(p: &Poly) -> Self {
        QPoly::norm(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    fn norm(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        QPoly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn monic(&self) -> Self {
        match self.0.last() {
            None => self.clone(),
            Some(lead) => QPoly(self.0.iter().map(|c| c / lead).collect()),
        }
    }

    fn derivative(&self) -> Self {
        QPoly::norm(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    fn sub(&self, o: &QPoly) -> Self {
        let n = self.0.len().max(o.0.len());
        QPoly::norm(
            (0..n)
                .map(|k| {
                    let a = self.0.get(k).cloned().unwrap_or_else(BigRational::zero);
                    let b = o.0.get(k).cloned().unwrap_or_else(BigRational::zero);
                    a - b
                })
                .collect(),
        )
    }

    fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dd = d.degree();
        let lead = d.0.last().unwrap().clone();
        if r.len() < d.0.len() {
            return (QPoly(vec![]), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = &r[k] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[k - dd + j] -= &c * dc;
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        (QPoly::norm(q), QPoly::norm(r))
    }

    fn gcd(&self, o: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Converts a monic polynomial with integral coefficients back to `Poly`.
    fn to_int(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .map(|c| {
                    assert!(c.is_integer(), "non-integral coefficient {c}");
                    c.to_integer()
                })
                .collect(),
        )
    }

    fn sign_at(&self, x: &BigRational) -> i8 {
        let v = self
            .0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c);
        sign(&v)
    }
}

fn sign(v: &BigRational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Yun's square-free decomposition of a monic integer polynomial:
/// `p = prod f_i^i` with each `f_i` monic, square-free and pairwise coprime.
/// Only non-constant factors are returned, in increasing multiplicity.
pub fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    let f = QPoly::from_int(p).monic();
    if f.degree() == 0 {
        return vec![];
    }
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.div_rem(&a0).0;
    let c = fp.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while !b.is_one() && b.degree() > 0 {
        let a = b.gcd(&d);
        if a.degree() > 0 {
            out.push((a.to_int(), i));
        }
        let nb = b.div_rem(&a).0;
        let nc = d.div_rem(&a).0;
        d = nc.sub(&nb.derivative());
        b = nb;
        i += 1;
    }
    out
}

/// Number of distinct real roots of the square-free polynomial `p` strictly
/// greater than `a`, where `a` is not a root of `p`.
pub fn roots_above(p: &Poly, a: i64) -> usize {
    let p0 = QPoly::from_int(p);
    if p0.degree() == 0 {
        return 0;
    }
    let mut seq = vec![p0.clone(), p0.derivative()];
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(QPoly(r.0.iter().map(|c| -c).collect()));
    }
    let at = BigRational::from_integer(BigInt::from(a));
    let variations = |signs: Vec<i8>| {
        let nz: Vec<i8> = signs.into_iter().filter(|&s| s != 0).collect();
        nz.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let v_a = variations(seq.iter().map(|q| q.sign_at(&at)).collect());
    let v_inf = variations(seq.iter().map(|q| sign(q.0.last().unwrap())).collect());
    v_a - v_inf
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn yun_separates_multiplicities() {
        // (x^2 - 5x + 5)^2 (x - 1)^3 (x + 2)
        let q = Poly::from_i64(&[5, -5, 1]);
        let p = q.pow(2).mul(&Poly::linear(1).pow(3)).mul(&Poly::linear(-2));
        let d = squarefree_decomposition(&p);
        assert_eq!(d, vec![(Poly::linear(-2), 1), (q, 2), (Poly::linear(1), 3)]);
    }

    #[test]
    fn squarefree_input() {
        let p = Poly::from_i64(&[8, -7, 1]);
        assert_eq!(squarefree_decomposition(&p), vec![(p.clone(), 1)]);
    }

    #[test]
    fn sturm_counts() {
        // roots (7 ± sqrt 17)/2 ≈ 1.438, 5.561
        let p = Poly::from_i64(&[8, -7, 1]);
        assert_eq!(roots_above(&p, 0), 2);
        assert_eq!(roots_above(&p, 3), 1);
        assert_eq!(roots_above(&p, 6), 0);
    }
}
