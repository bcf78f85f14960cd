use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::poly::{CharPoly, Poly};
use super::rational::{roots_above, squarefree_decomposition};
use crate::error::{Error, Result};

/// Eigenvalues of a characteristic polynomial: the integer roots with their
/// multiplicities (descending) and whatever factor is left over.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExactSpectrum {
    order: usize,
    integer_part: Vec<(i64, usize)>,
    residual: Option<Poly>,
}

/// Roots of a quadratic residual `x^2 + bx + c`: `(sum ± sqrt(discriminant)) / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticPair {
    #[serde(serialize_with = "as_decimal")]
    pub sum: BigInt,
    #[serde(serialize_with = "as_decimal")]
    pub discriminant: BigInt,
}

fn as_decimal<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl fmt::Display for QuadraticPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ± √{})/2", self.sum, self.discriminant)
    }
}

impl ExactSpectrum {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `(eigenvalue, multiplicity)` pairs, eigenvalues strictly decreasing.
    pub fn integer_part(&self) -> &[(i64, usize)] {
        &self.integer_part
    }

    /// Monic factor without integer roots, if any.
    pub fn residual(&self) -> Option<&Poly> {
        self.residual.as_ref()
    }

    pub fn is_integral(&self) -> bool {
        self.residual.is_none()
    }

    pub fn multiplicity(&self, value: i64) -> usize {
        self.integer_part
            .iter()
            .find(|(v, _)| *v == value)
            .map_or(0, |(_, m)| *m)
    }

    /// Square-free factors of the residual with their multiplicities.
    pub fn residual_factors(&self) -> Vec<(Poly, usize)> {
        self.residual
            .as_ref()
            .map(squarefree_decomposition)
            .unwrap_or_default()
    }

    /// Number of distinct eigenvalues, counting every distinct root of the residual.
    pub fn distinct_count(&self) -> usize {
        self.integer_part.len()
            + self
                .residual_factors()
                .iter()
                .map(|(f, _)| f.degree())
                .sum::<usize>()
    }

    /// Number of distinct eigenvalues strictly greater than `value`.
    pub fn distinct_above(&self, value: i64) -> usize {
        let ints = self.integer_part.iter().filter(|(v, _)| *v > value).count();
        let res: usize = self
            .residual_factors()
            .iter()
            .map(|(f, _)| roots_above(f, value))
            .sum();
        ints + res
    }

    /// Largest multiplicity of a nonzero eigenvalue, 0 if there is none.
    pub fn max_nonzero_multiplicity(&self) -> usize {
        let ints = self
            .integer_part
            .iter()
            .filter(|(v, _)| *v != 0)
            .map(|(_, m)| *m)
            .max()
            .unwrap_or(0);
        let res = self
            .residual_factors()
            .iter()
            .map(|(_, m)| *m)
            .max()
            .unwrap_or(0);
        ints.max(res)
    }

    /// Every multiplicity attained by some nonzero eigenvalue.
    pub fn nonzero_multiplicities(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .integer_part
            .iter()
            .filter(|(v, _)| *v != 0)
            .map(|(_, m)| *m)
            .chain(self.residual_factors().iter().map(|(_, m)| *m))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Quadratic residual roots, when the residual has degree 2.
    pub fn quadratic_pair(&self) -> Option<QuadraticPair> {
        let r = self.residual.as_ref().filter(|r| r.degree() == 2)?;
        let b = r.coeff(1);
        let c = r.coeff(0);
        Some(QuadraticPair {
            sum: -b.clone(),
            discriminant: &b * &b - BigInt::from(4) * c,
        })
    }

    /// Expanded integer eigenvalues, descending. Residual roots are omitted.
    pub fn integer_eigenvalues(&self) -> Vec<i64> {
        self.integer_part
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }

    /// Multiplies the spectrum back out.
    pub fn to_charpoly(&self) -> CharPoly {
        let mut p = Poly::from_roots(&self.integer_part);
        if let Some(r) = &self.residual {
            p = p.mul(r);
        }
        CharPoly::from_poly(p).expect("product of monic factors is monic")
    }

    /// Normalized spectrum of `prod (x - v)^m * residual`.
    pub fn from_parts(integer_part: &[(i64, usize)], residual: Option<Poly>) -> ExactSpectrum {
        let mut p = Poly::from_roots(integer_part);
        if let Some(r) = residual {
            assert!(r.is_monic(), "residual must be monic");
            p = p.mul(&r);
        }
        extract_spectrum(&CharPoly::from_poly(p).expect("monic"))
    }

    fn from_eigenvalue_list(order: usize, mut values: Vec<i64>) -> ExactSpectrum {
        values.sort_unstable_by(|a, b| b.cmp(a));
        let mut integer_part: Vec<(i64, usize)> = Vec::new();
        for v in values {
            match integer_part.last_mut() {
                Some((w, m)) if *w == v => *m += 1,
                _ => integer_part.push((v, 1)),
            }
        }
        ExactSpectrum {
            order,
            integer_part,
            residual: None,
        }
    }
}

impl fmt::Display for ExactSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, m)) in self.integer_part.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}^{m}")?;
        }
        if let Some(r) = &self.residual {
            if !self.integer_part.is_empty() {
                f.write_str(", ")?;
            }
            write!(f, "roots of {r}")?;
        }
        f.write_str("}")
    }
}

/// Splits off every integer root of `p` to full multiplicity.
///
/// Zero roots are stripped first. Each remaining candidate `d` must divide
/// the trailing nonzero coefficient and lie within the Fujiwara root bound;
/// Descartes' rule of signs bounds the number of positive and of negative
/// roots, so a side is skipped when it admits none and its scan stops once
/// that many roots are found. For Laplacian polynomials the coefficients
/// alternate in sign, so negative candidates are never tried.
pub fn extract_spectrum(p: &CharPoly) -> ExactSpectrum {
    let order = p.degree();
    let (mut q, zeros) = p.as_poly().strip_zero_roots();
    let mut found: Vec<(i64, usize)> = Vec::new();
    for sign in [1i64, -1] {
        if q.degree() == 0 {
            break;
        }
        let budget = if sign == 1 {
            q.sign_changes()
        } else {
            q.reflect().sign_changes()
        };
        if budget == 0 {
            continue;
        }
        let mut located = 0;
        let mut bound = q.root_bound();
        let mut d: u64 = 1;
        while q.degree() > 0 && located < budget && d <= bound {
            let root = sign * d as i64;
            if divides(d, &q.coeff(0)) {
                let mut mult = 0;
                while let Some(next) = q.div_linear(root) {
                    q = next;
                    mult += 1;
                    if q.degree() == 0 {
                        break;
                    }
                }
                if mult > 0 {
                    located += mult;
                    found.push((root, mult));
                    if q.degree() > 0 {
                        bound = q.root_bound();
                    }
                }
            }
            d += 1;
        }
    }
    if zeros > 0 {
        found.push((0, zeros));
    }
    found.sort_unstable_by_key(|e| std::cmp::Reverse(e.0));
    ExactSpectrum {
        order,
        integer_part: found,
        residual: (q.degree() > 0).then_some(q),
    }
}

fn divides(d: u64, c: &BigInt) -> bool {
    if let Some(small) = c.to_i128() {
        small % d as i128 == 0
    } else {
        c.mod_floor(&BigInt::from(d)).is_zero()
    }
}

/// Spectrum of the complement: each of the `n - 1` largest eigenvalues `μ`
/// becomes `n - μ`, and one zero is kept.
pub fn complement_spectrum(s: &ExactSpectrum) -> Result<ExactSpectrum> {
    if !s.is_integral() {
        return Err(Error::ResidualPresent);
    }
    let n = s.order as i64;
    let mut values = s.integer_eigenvalues();
    values.pop();
    let mut out: Vec<i64> = values.into_iter().map(|mu| n - mu).collect();
    out.push(0);
    Ok(ExactSpectrum::from_eigenvalue_list(s.order, out))
}

/// Spectrum of `G ∇ H` from those of `G` (order n) and `H` (order m):
/// `n + m`, `m + μ_i` for the `n - 1` largest `μ_i` of G, `n + μ'_j` for the
/// `m - 1` largest `μ'_j` of H, and 0.
pub fn join_spectrum(g: &ExactSpectrum, h: &ExactSpectrum) -> Result<ExactSpectrum> {
    if !g.is_integral() || !h.is_integral() {
        return Err(Error::ResidualPresent);
    }
    let (n, m) = (g.order as i64, h.order as i64);
    let mut gv = g.integer_eigenvalues();
    gv.pop();
    let mut hv = h.integer_eigenvalues();
    hv.pop();
    let mut out = vec![n + m, 0];
    out.extend(gv.into_iter().map(|mu| m + mu));
    out.extend(hv.into_iter().map(|mu| n + mu));
    Ok(ExactSpectrum::from_eigenvalue_list(g.order + h.order, out))
}

/// Characteristic polynomial of the complement's Laplacian from that of the
/// graph: `x * p(n - x) / (x - n)` up to sign, valid for any spectrum.
pub fn complement_charpoly(p: &CharPoly) -> CharPoly {
    let n = p.degree() as i64;
    if n == 0 {
        return p.clone();
    }
    let mut q = p.as_poly().compose_linear(-1, n);
    if q.leading() < BigInt::zero() {
        q = q.neg();
    }
    let q = q.div_linear(n).expect("a Laplacian has eigenvalue 0");
    CharPoly::from_poly(q.mul(&Poly::linear(0))).expect("monic")
}

/// Characteristic polynomial of `L(G ∇ H)` from those of `L(G)` and `L(H)`.
pub fn join_charpoly(g: &CharPoly, h: &CharPoly) -> CharPoly {
    let (n, m) = (g.degree() as i64, h.degree() as i64);
    let a = g
        .as_poly()
        .compose_linear(1, -m)
        .div_linear(m)
        .expect("a Laplacian has eigenvalue 0");
    let b = h
        .as_poly()
        .compose_linear(1, -n)
        .div_linear(n)
        .expect("a Laplacian has eigenvalue 0");
    let p = a.mul(&b).mul(&Poly::from_roots(&[(0, 1), (n + m, 1)]));
    CharPoly::from_poly(p).expect("monic")
}

/// Whether `(x - alpha)^k` divides `p` exactly.
pub fn divisible_by_root_power(p: &Poly, alpha: i64, k: usize) -> bool {
    let mut q = p.clone();
    for _ in 0..k {
        match q.div_linear(alpha) {
            Some(next) if !q.is_zero() => q = next,
            _ => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyId, Graph};
    use crate::spectrum::{charpoly, laplacian};

    fn spec(g: &Graph) -> ExactSpectrum {
        extract_spectrum(&charpoly(&laplacian(g)))
    }

    #[test]
    fn polynomial_complement_and_join() {
        let p4 = family(FamilyId::Path, &[4]).unwrap();
        let c5 = family(FamilyId::Cycle, &[5]).unwrap();
        let cp = |g: &Graph| charpoly(&laplacian(g));
        assert_eq!(complement_charpoly(&cp(&p4)), cp(&p4.complement()));
        assert_eq!(complement_charpoly(&cp(&c5)), cp(&c5.complement()));
        assert_eq!(join_charpoly(&cp(&p4), &cp(&c5)), cp(&p4.join(&c5)));
        let k1 = Graph::new(1);
        assert_eq!(join_charpoly(&cp(&k1), &cp(&k1)), cp(&Graph::complete(2)));
    }

    #[test]
    fn extract_examples() {
        let p = CharPoly::from_poly(Poly::from_i64(&[0, 9, -6, 1])).unwrap();
        let s = extract_spectrum(&p);
        assert_eq!(s.integer_part(), &[(3, 2), (0, 1)]);
        assert!(s.is_integral());

        let k24 = family(FamilyId::CompleteBipartite, &[2, 4]).unwrap();
        assert_eq!(spec(&k24).integer_part(), &[(6, 1), (4, 1), (2, 3), (0, 1)]);

        let g = family(FamilyId::Gnr, &[3, 1]).unwrap();
        let s = spec(&g);
        assert_eq!(s.integer_part(), &[(3, 3), (0, 1)]);
        assert_eq!(s.residual(), Some(&Poly::from_i64(&[8, -7, 1])));
        let q = s.quadratic_pair().unwrap();
        assert_eq!((q.sum, q.discriminant), (BigInt::from(7), BigInt::from(17)));
    }

    #[test]
    fn general_polynomials_with_negative_roots() {
        // (x + 3)^2 (x - 5) (x^2 + 1) x
        let p = Poly::from_roots(&[(-3, 2), (5, 1), (0, 1)]).mul(&Poly::from_i64(&[1, 0, 1]));
        let s = extract_spectrum(&CharPoly::from_poly(p.clone()).unwrap());
        assert_eq!(s.integer_part(), &[(5, 1), (0, 1), (-3, 2)]);
        assert_eq!(s.residual(), Some(&Poly::from_i64(&[1, 0, 1])));
        assert_eq!(s.to_charpoly().into_poly(), p);
    }

    #[test]
    fn multiplicities() {
        assert_eq!(spec(&Graph::complete(6)).multiplicity(6), 5);
        let k24 = family(FamilyId::CompleteBipartite, &[2, 4]).unwrap();
        assert_eq!(spec(&k24).multiplicity(2), 3);
        let p4 = family(FamilyId::Path, &[4]).unwrap();
        let s = spec(&p4);
        assert_eq!(s.multiplicity(2), 1);
        assert_eq!(s.multiplicity(5), 0);
        assert_eq!(s.residual(), Some(&Poly::from_i64(&[2, -4, 1])));
    }

    #[test]
    fn complement_formula() {
        let s = complement_spectrum(&spec(&Graph::complete(6))).unwrap();
        assert_eq!(s.integer_part(), &[(0, 6)]);

        let g = Graph::new(3).join(&Graph::complete(3));
        let s = complement_spectrum(&spec(&g)).unwrap();
        assert_eq!(s.integer_part(), &[(3, 2), (0, 4)]);
        assert_eq!(s, spec(&g.complement()));

        let k24 = family(FamilyId::CompleteBipartite, &[2, 4]).unwrap();
        let s = complement_spectrum(&spec(&k24)).unwrap();
        assert_eq!(s.integer_part(), &[(4, 3), (2, 1), (0, 2)]);
        assert_eq!(s, spec(&k24.complement()));

        let p4 = family(FamilyId::Path, &[4]).unwrap();
        assert_eq!(complement_spectrum(&spec(&p4)), Err(Error::ResidualPresent));
    }

    #[test]
    fn join_formula() {
        let c4 = family(FamilyId::Cycle, &[4]).unwrap();
        let k1 = Graph::new(1);
        let s = join_spectrum(&spec(&c4), &spec(&k1)).unwrap();
        assert_eq!(s.integer_part(), &[(5, 2), (3, 2), (0, 1)]);
        assert_eq!(s, spec(&c4.join(&k1)));

        let s = join_spectrum(&spec(&Graph::new(3)), &spec(&Graph::complete(3))).unwrap();
        assert_eq!(s.integer_part(), &[(6, 3), (3, 2), (0, 1)]);

        let s = join_spectrum(&spec(&k1), &spec(&k1)).unwrap();
        assert_eq!(s, spec(&Graph::complete(2)));
    }

    #[test]
    fn divisibility() {
        let p = Poly::from_i64(&[4, -4, 1]);
        assert!(divisible_by_root_power(&p, 2, 2));
        assert!(!divisible_by_root_power(&p, 2, 3));
        assert!(!divisible_by_root_power(&p, 1, 1));
    }

    #[test]
    fn cycle_five_has_squared_quadratic() {
        let c5 = family(FamilyId::Cycle, &[5]).unwrap();
        let s = spec(&c5);
        assert_eq!(s.integer_part(), &[(0, 1)]);
        assert_eq!(s.residual_factors(), vec![(Poly::from_i64(&[5, -5, 1]), 2)]);
        assert_eq!(s.distinct_count(), 3);
        assert_eq!(s.max_nonzero_multiplicity(), 2);
        assert_eq!(s.distinct_above(2), 1);
    }
}
