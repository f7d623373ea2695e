//! Exact cyclotomic numbers.
//!
//! A value is a rational linear combination `Σ q_k ζ_N^k` of powers of a
//! primitive `N`-th root of unity, stored as a length-`N` vector of
//! big rationals.  Arithmetic happens in the group ring `Q[Z/N]` (cyclic
//! convolution) and is only reduced modulo the `N`-th cyclotomic polynomial
//! `Φ_N` at equality tests and when rendering, so hot loops never pay for
//! canonicalization.  Conjugation is the index flip `ζ^k ↦ ζ^{−k}`; values
//! over different conductors are compared after lifting to the least common
//! multiple.  Coefficients are arbitrary-precision rationals: inner products
//! divide by group orders well past 10⁴ and must stay exact.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num::integer::lcm;
use num::traits::{One, Signed, Zero};
use num::{BigInt, BigRational};

/// `Σ q_k ζ_N^k` with `0 ≤ k < N`.
#[derive(Debug, Clone)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

/// Monic coefficient vector (low degree first) of the `n`-th cyclotomic
/// polynomial, computed by exact division of `x^n − 1` by all proper-divisor
/// cyclotomics and memoized process-wide.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(hit) = cache.read().unwrap().get(&n) {
        return hit.clone();
    }
    // x^n − 1.
    let mut poly = vec![BigInt::zero(); (n + 1) as usize];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            poly = poly_div_exact(poly, &phi_d);
        }
    }
    let arc = Arc::new(poly);
    cache.write().unwrap().entry(n).or_insert(arc).clone()
}

/// Exact division of polynomials over Z with monic divisor.
fn poly_div_exact(mut num: Vec<BigInt>, den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    assert!(den[dn].is_one(), "divisor must be monic");
    assert!(num.len() > dn);
    let qn = num.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let coef = num[k + dn].clone();
        if !coef.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                let sub = &coef * dj;
                num[k + j] -= sub;
            }
        }
        quot[k] = coef;
    }
    debug_assert!(num.iter().all(Zero::is_zero), "division was not exact");
    quot
}

impl Cyclotomic {
    pub fn zero(conductor: u64) -> Self {
        assert!(conductor >= 1);
        Cyclotomic {
            conductor,
            coeffs: vec![BigRational::zero(); conductor as usize],
        }
    }

    pub fn one(conductor: u64) -> Self {
        let mut v = Self::zero(conductor);
        v.coeffs[0] = BigRational::one();
        v
    }

    /// `ζ_N^k`, with any integer exponent reduced mod `N`.
    pub fn root_of_unity(conductor: u64, k: i64) -> Self {
        let mut v = Self::zero(conductor);
        let k = k.rem_euclid(conductor as i64) as usize;
        v.coeffs[k] = BigRational::one();
        v
    }

    pub fn from_rational(conductor: u64, q: BigRational) -> Self {
        let mut v = Self::zero(conductor);
        v.coeffs[0] = q;
        v
    }

    /// `Σ_k counts[k] · ζ_N^k` in one allocation — the natural way to total a
    /// multiset of roots of unity gathered as per-exponent tallies.
    pub fn from_root_counts(conductor: u64, counts: &[u64]) -> Self {
        assert_eq!(counts.len(), conductor as usize, "one tally per exponent");
        let mut v = Self::zero(conductor);
        for (k, &c) in counts.iter().enumerate() {
            if c != 0 {
                v.coeffs[k] = BigRational::from_integer(BigInt::from(c));
            }
        }
        v
    }

    pub fn from_integer(conductor: u64, k: i64) -> Self {
        Self::from_rational(conductor, BigRational::from_integer(BigInt::from(k)))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Re-express over conductor `m` (requires `N | m`): `ζ_N = ζ_m^{m/N}`.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m % self.conductor == 0, "lift target must be a multiple");
        if m == self.conductor {
            return self.clone();
        }
        let stride = (m / self.conductor) as usize;
        let mut out = Self::zero(m);
        for (k, q) in self.coeffs.iter().enumerate() {
            if !q.is_zero() {
                out.coeffs[k * stride] = q.clone();
            }
        }
        out
    }

    fn common(self: &Cyclotomic, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = lcm(self.conductor, other.conductor);
        (self.lift(m), other.lift(m))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.conductor == other.conductor {
            let mut out = self.clone();
            for (o, q) in out.coeffs.iter_mut().zip(&other.coeffs) {
                if !q.is_zero() {
                    *o += q;
                }
            }
            out
        } else {
            let (a, b) = self.common(other);
            a.add(&b)
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|q| -q.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cyclic convolution over a common conductor, skipping zero terms —
    /// character values are sparse (single roots of unity or short sums).
    pub fn mul(&self, other: &Self) -> Self {
        if self.conductor != other.conductor {
            let (a, b) = self.common(other);
            return a.mul(&b);
        }
        let n = self.conductor as usize;
        let mut out = Self::zero(self.conductor);
        for (i, qi) in self.coeffs.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            for (j, qj) in other.coeffs.iter().enumerate() {
                if qj.is_zero() {
                    continue;
                }
                let k = (i + j) % n;
                out.coeffs[k] += qi * qj;
            }
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Complex conjugation: `ζ^k ↦ ζ^{−k}`.
    pub fn conjugate(&self) -> Self {
        let n = self.conductor as usize;
        let mut out = Self::zero(self.conductor);
        for (k, q) in self.coeffs.iter().enumerate() {
            if !q.is_zero() {
                out.coeffs[(n - k) % n] = q.clone();
            }
        }
        out
    }

    /// Canonical form: coefficients reduced modulo `Φ_N`, so every
    /// coefficient of index ≥ φ(N) vanishes and equal values have equal
    /// coefficient vectors.
    pub fn reduced(&self) -> Self {
        let phi = cyclotomic_polynomial(self.conductor);
        let deg = phi.len() - 1;
        let mut coeffs = self.coeffs.clone();
        for k in (deg..coeffs.len()).rev() {
            if coeffs[k].is_zero() {
                continue;
            }
            let q = std::mem::replace(&mut coeffs[k], BigRational::zero());
            for (j, pj) in phi.iter().enumerate().take(deg) {
                if !pj.is_zero() {
                    let sub = &q * BigRational::from_integer(pj.clone());
                    coeffs[k - deg + j] -= sub;
                }
            }
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs,
        }
    }

    /// Semantic zero test (reduces first).
    pub fn is_zero(&self) -> bool {
        if self.coeffs.iter().all(Zero::is_zero) {
            return true;
        }
        self.reduced().coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        let red = self.reduced();
        if red.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(red.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The value as a nonnegative integer, if it is one — degrees and inner
    /// products of genuine characters land here.
    pub fn as_u64(&self) -> Option<u64> {
        let q = self.as_rational()?;
        if !q.denom().is_one() || q.numer().is_negative() {
            return None;
        }
        let digits = q.numer().to_u64_digits().1;
        match digits.len() {
            0 => Some(0),
            1 => Some(digits[0]),
            _ => None,
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor && self.coeffs == other.coeffs {
            return true;
        }
        self.sub(other).is_zero()
    }
}
impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    // Reduced canonical rendering: `q0 + q1*z^1 + …` with sign-aware joining,
    // `z` the primitive N-th root (callers annotate the conductor).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let red = self.reduced();
        let mut wrote = false;
        for (k, q) in red.coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let mag = q.abs();
            if wrote {
                f.write_str(if q.is_negative() { " - " } else { " + " })?;
            } else if q.is_negative() {
                f.write_str("-")?;
            }
            if k == 0 {
                write!(f, "{}", format_rational(&mag))?;
            } else {
                write!(f, "{}*z^{}", format_rational(&mag), k)?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
