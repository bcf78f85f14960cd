use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending order of degree with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Poly::from_i64(&[1])
    }

    /// `x - root`.
    pub fn linear(root: i64) -> Self {
        Poly::from_i64(&[-root, 1])
    }

    /// `prod (x - root)^mult`.
    pub fn from_roots(roots: &[(i64, usize)]) -> Self {
        roots
            .iter()
            .fold(Poly::one(), |acc, &(r, m)| acc.mul(&Poly::linear(r).pow(m)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Ascending coefficients `c_0, ..., c_deg`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact quotient by `x - root`, or `None` if `root` is not a root.
    pub fn div_linear(&self, root: i64) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::default());
        }
        let r = BigInt::from(root);
        let n = self.coeffs.len();
        let mut q = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for k in (1..n).rev() {
            carry = &self.coeffs[k] + &carry * &r;
            q[k - 1] = carry.clone();
        }
        let rem = &self.coeffs[0] + &carry * &r;
        rem.is_zero().then(|| Poly::new(q))
    }

    /// Number of sign changes in the coefficient sequence (zeros skipped).
    pub fn sign_changes(&self) -> usize {
        let mut prev: Option<bool> = None;
        let mut changes = 0;
        for c in self.coeffs.iter().filter(|c| !c.is_zero()) {
            let pos = c.is_positive();
            if prev.is_some_and(|p| p != pos) {
                changes += 1;
            }
            prev = Some(pos);
        }
        changes
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Strips factors of `x`: returns `(q, z)` with `self = x^z q` and `q(0) != 0`.
    pub fn strip_zero_roots(&self) -> (Poly, usize) {
        let z = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (Poly::new(self.coeffs[z..].to_vec()), z)
    }

    /// Upper bound on the absolute value of every complex root (Fujiwara),
    /// rounded up with slack. Requires a non-constant polynomial.
    pub fn root_bound(&self) -> u64 {
        let n = self.degree();
        debug_assert!(n >= 1);
        let lead = log_abs(&self.coeffs[n]);
        let mut best = f64::NEG_INFINITY;
        for k in 1..=n {
            let c = &self.coeffs[n - k];
            if c.is_zero() {
                continue;
            }
            let mut v = (log_abs(c) - lead) / k as f64;
            if k == n {
                v -= std::f64::consts::LN_2 / k as f64;
            }
            best = best.max(v);
        }
        if best == f64::NEG_INFINITY {
            return 1;
        }
        let b = 2.0 * best.exp();
        if b >= 1e18 {
            u64::MAX
        } else {
            (b * (1.0 + 1e-9)).ceil() as u64 + 1
        }
    }

    /// `p(a x + b)`.
    pub fn compose_linear(&self, a: i64, b: i64) -> Poly {
        let inner = Poly::from_i64(&[b, a]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::default(), |acc, c| acc.mul(&inner).add_constant(c))
    }

    fn add_constant(mut self, c: &BigInt) -> Poly {
        if self.coeffs.is_empty() {
            self.coeffs.push(BigInt::zero());
        }
        self.coeffs[0] += c;
        Poly::new(self.coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }
}

fn log_abs(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    let a = c.abs();
    match a.to_f64() {
        Some(f) if f.is_finite() => f.ln(),
        _ => {
            let bits = a.bits();
            let shift = bits.saturating_sub(60);
            let top = (&a >> shift).to_f64().unwrap_or(1.0);
            top.ln() + shift as f64 * std::f64::consts::LN_2
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Monic characteristic polynomial `det(xI - M)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly(Poly);

impl CharPoly {
    /// Wraps a monic polynomial; `None` if `p` is not monic.
    pub fn from_poly(p: Poly) -> Option<Self> {
        p.is_monic().then_some(CharPoly(p))
    }

    pub fn as_poly(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.0.coeffs()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.coeff(k)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({})", self.0)
    }
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}
