//! Exact integers and rationals, and the scalar q-analog functions built on
//! them: Gaussian binomials, the products `alpha` and `beta`, triangular
//! numbers, q-Stirling numbers of the second kind, and their counterparts
//! over the inverted base `p = 1/q`.
//!
//! Nothing here uses floating point.

mod mparam;

pub use mparam::MParamPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;
/// Arbitrary-precision rational in canonical form.
pub type ExactRational = BigRational;

/// `sigma(i) = i (i - 1) / 2`.
pub fn sigma(i: i64) -> i64 {
    i * (i - 1) / 2
}

#[cfg(test)]
pub(crate) fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

pub(crate) fn rat(v: i64) -> ExactRational {
    ExactRational::from_integer(ExactInt::from(v))
}

pub(crate) fn to_rat(v: &ExactInt) -> ExactRational {
    ExactRational::from_integer(v.clone())
}

/// Ordinary binomial coefficient.
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc = acc * ExactInt::from(n - i) / ExactInt::from(i + 1);
    }
    acc
}

pub fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= q as u64 {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Which q-analog function to evaluate over the inverted base.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PKind {
    Alpha,
    Beta,
    Gaussian,
}

/// The scalar q-analog functions for a fixed prime `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QBase {
    q: u32,
}

impl QBase {
    pub fn new(q: u32) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(QBase { q })
    }

    pub(crate) fn new_unchecked(q: u32) -> Self {
        debug_assert!(is_prime(q));
        QBase { q }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `q^e` for `e >= 0`.
    pub fn pow(&self, e: u64) -> ExactInt {
        num_traits::pow(ExactInt::from(self.q), e as usize)
    }

    /// `q^e` for any integer `e`.
    pub fn pow_rat(&self, e: i64) -> ExactRational {
        let base = ExactRational::from_integer(ExactInt::from(self.q));
        if e >= 0 {
            num_traits::pow(base, e as usize)
        } else {
            num_traits::pow(base.recip(), (-e) as usize)
        }
    }

    /// Gaussian binomial `[n u]`, the number of `u`-dimensional subspaces of
    /// `GF(q)^n`. Zero outside `0 <= u <= n`.
    pub fn gaussian(&self, n: i64, u: i64) -> ExactInt {
        if u < 0 || n < 0 || u > n {
            return ExactInt::zero();
        }
        let u = u.min(n - u);
        let one = ExactInt::one();
        let mut acc = ExactInt::one();
        // Each partial product is itself a Gaussian binomial, so every
        // division is exact.
        for t in 0..u {
            acc *= self.pow((n - t) as u64) - &one;
            acc /= self.pow((t + 1) as u64) - &one;
        }
        acc
    }

    /// `[n 1] = (q^n - 1) / (q - 1)`.
    pub fn q_int(&self, n: i64) -> ExactInt {
        self.gaussian(n, 1)
    }

    /// `alpha(m, u) = prod_{i<u} (q^m - q^i)`; `alpha(m, 0) = 1`.
    ///
    /// Requires `m >= 0`; see [`QBase::alpha_ext`] for shifted arguments that
    /// may go negative.
    pub fn alpha(&self, m: i64, u: i64) -> ExactInt {
        assert!(m >= 0, "alpha({m}, {u}) needs m >= 0; use alpha_ext");
        if u <= 0 {
            return ExactInt::one();
        }
        if u > m {
            return ExactInt::zero();
        }
        let qm = self.pow(m as u64);
        (0..u).fold(ExactInt::one(), |acc, i| acc * (&qm - self.pow(i as u64)))
    }

    /// `alpha(m, u)` read as a function of `q^m`, valid for every integer `m`.
    /// Agrees with [`QBase::alpha`] when `m >= 0`.
    pub fn alpha_ext(&self, m: i64, u: i64) -> ExactRational {
        if m >= 0 {
            return to_rat(&self.alpha(m, u));
        }
        let qm = self.pow_rat(m);
        (0..u.max(0)).fold(ExactRational::one(), |acc, i| acc * (&qm - self.pow_rat(i)))
    }

    /// `beta(m, u) = prod_{i<u} [m-i 1]`; `beta(m, 0) = 1`.
    pub fn beta(&self, m: i64, u: i64) -> ExactInt {
        (0..u.max(0)).fold(ExactInt::one(), |acc, i| acc * self.q_int(m - i))
    }

    /// q-Stirling number of the second kind `S_q(nu, l)`.
    pub fn q_stirling2(&self, nu: u32, l: u32) -> ExactRational {
        RationalBase::from_q(*self).stirling2(nu, l)
    }

    /// The same family of functions over `p = 1/q`.
    pub fn inverse(&self) -> RationalBase {
        RationalBase::inverse_of(*self)
    }

    /// Evaluates `alpha_p`, `beta_p` or `[a b]_p`.
    pub fn p_variant(&self, kind: PKind, a: i64, b: i64) -> ExactRational {
        let p = self.inverse();
        match kind {
            PKind::Alpha => p.alpha(a, b),
            PKind::Beta => p.beta(a, b),
            PKind::Gaussian => p.gaussian(a, b),
        }
    }
}

/// q-analog functions over an arbitrary rational base other than 0 and 1.
///
/// Used with `b = 1/q` for the inverted-base identities, and with `b = q`
/// as an independent rational route for the integer functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalBase {
    b: ExactRational,
}

impl RationalBase {
    pub fn new(b: ExactRational) -> Result<Self> {
        if b.is_zero() || b.is_one() {
            return Err(Error::OutOfRange("base must differ from 0 and 1".into()));
        }
        Ok(RationalBase { b })
    }

    pub fn from_q(q: QBase) -> Self {
        RationalBase { b: rat(q.q() as i64) }
    }

    pub fn inverse_of(q: QBase) -> Self {
        RationalBase { b: rat(q.q() as i64).recip() }
    }

    pub fn base(&self) -> &ExactRational {
        &self.b
    }

    pub fn pow(&self, e: i64) -> ExactRational {
        if e >= 0 {
            num_traits::pow(self.b.clone(), e as usize)
        } else {
            num_traits::pow(self.b.recip(), (-e) as usize)
        }
    }

    pub fn gaussian(&self, n: i64, u: i64) -> ExactRational {
        if u < 0 || n < 0 || u > n {
            return ExactRational::zero();
        }
        let one = ExactRational::one();
        let mut acc = ExactRational::one();
        for t in 0..u {
            acc *= self.pow(n - t) - &one;
            acc /= self.pow(t + 1) - &one;
        }
        acc
    }

    pub fn q_int(&self, n: i64) -> ExactRational {
        self.gaussian(n, 1)
    }

    pub fn alpha(&self, m: i64, u: i64) -> ExactRational {
        let bm = self.pow(m);
        (0..u.max(0)).fold(ExactRational::one(), |acc, i| acc * (&bm - self.pow(i)))
    }

    pub fn beta(&self, m: i64, u: i64) -> ExactRational {
        (0..u.max(0)).fold(ExactRational::one(), |acc, i| acc * self.q_int(m - i))
    }

    pub fn stirling2(&self, nu: u32, l: u32) -> ExactRational {
        let l = l as i64;
        let mut sum = ExactRational::zero();
        for i in 0..=l {
            let term = self.pow(sigma(i))
                * self.gaussian(l, i)
                * num_traits::pow(self.q_int(l - i), nu as usize);
            if i % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        sum * self.pow(-sigma(l)) / self.beta(l, l)
    }
}

/// Integer value of an exact rational, if it is one.
pub fn as_integer(v: &ExactRational) -> Option<ExactInt> {
    v.is_integer().then(|| v.to_integer())
}

/// Sign-aware decimal rendering of a rational, `num/den` or plain `num`.
pub fn render(v: &ExactRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else if v.is_negative() {
        format!("-{}/{}", v.numer().abs(), v.denom())
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}
