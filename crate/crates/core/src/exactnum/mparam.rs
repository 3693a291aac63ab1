use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat, render, ExactRational, QBase};

/// A Laurent polynomial `sum_e c_e Q^e` in the indeterminate `Q = q^m`, with
/// exact rational coefficients. It stands for a coefficient that depends on
/// the extension degree `m`.
///
/// Zero coefficients are never stored, so derived equality is equality of
/// functions of `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MParamPoly {
    q: u32,
    terms: BTreeMap<i32, ExactRational>,
}

impl MParamPoly {
    pub fn zero(q: u32) -> Self {
        MParamPoly { q, terms: BTreeMap::new() }
    }

    pub fn one(q: u32) -> Self {
        Self::constant(q, ExactRational::one())
    }

    pub fn constant(q: u32, c: ExactRational) -> Self {
        Self::monomial(q, 0, c)
    }

    pub fn from_int(q: u32, c: i64) -> Self {
        Self::constant(q, rat(c))
    }

    /// `c * Q^e`.
    pub fn monomial(q: u32, e: i32, c: ExactRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MParamPoly { q, terms }
    }

    /// The indeterminate `Q = q^m` itself.
    pub fn big_q(q: u32) -> Self {
        Self::monomial(q, 1, ExactRational::one())
    }

    /// `alpha(m, u) = prod_{i<u} (Q - q^i)` as a polynomial in `Q`.
    pub fn alpha(base: QBase, u: i64) -> Self {
        let q = base.q();
        (0..u.max(0)).fold(Self::one(q), |acc, i| {
            let factor = Self::big_q(q) - Self::constant(q, base.pow_rat(i));
            &acc * &factor
        })
    }

    pub fn base(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `Q^e`.
    pub fn coeff(&self, e: i32) -> ExactRational {
        self.terms.get(&e).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &ExactRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// The value when the polynomial does not depend on `m`.
    pub fn as_constant(&self) -> Option<ExactRational> {
        match self.terms.len() {
            0 => Some(ExactRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.q);
        }
        MParamPoly {
            q: self.q,
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Substitutes `m -> m - s`, i.e. `Q -> q^{-s} Q`: each coefficient
    /// `c_e` becomes `c_e q^{-s e}`.
    pub fn shift_m(&self, s: i64) -> Self {
        if s == 0 {
            return self.clone();
        }
        let base = QBase::new(self.q).expect("MParamPoly base is prime");
        MParamPoly {
            q: self.q,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v * base.pow_rat(-s * *e as i64)))
                .collect(),
        }
    }

    /// Value at a concrete `m` (any integer), substituting `Q = q^m`.
    pub fn eval(&self, m: i64) -> ExactRational {
        let base = QBase::new(self.q).expect("MParamPoly base is prime");
        self.terms
            .iter()
            .fold(ExactRational::zero(), |acc, (e, c)| acc + c * base.pow_rat(m * *e as i64))
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.q, other.q, "MParamPoly base mismatch");
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(ExactRational::zero);
            if negate {
                *entry -= c;
            } else {
                *entry += c;
            }
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        MParamPoly { q: self.q, terms }
    }
}

impl Add for &MParamPoly {
    type Output = MParamPoly;
    fn add(self, rhs: &MParamPoly) -> MParamPoly {
        self.combine(rhs, false)
    }
}

impl Sub for &MParamPoly {
    type Output = MParamPoly;
    fn sub(self, rhs: &MParamPoly) -> MParamPoly {
        self.combine(rhs, true)
    }
}

impl Add for MParamPoly {
    type Output = MParamPoly;
    fn add(self, rhs: MParamPoly) -> MParamPoly {
        &self + &rhs
    }
}

impl Sub for MParamPoly {
    type Output = MParamPoly;
    fn sub(self, rhs: MParamPoly) -> MParamPoly {
        &self - &rhs
    }
}

impl Neg for &MParamPoly {
    type Output = MParamPoly;
    fn neg(self) -> MParamPoly {
        MParamPoly {
            q: self.q,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &MParamPoly {
    type Output = MParamPoly;
    fn mul(self, rhs: &MParamPoly) -> MParamPoly {
        assert_eq!(self.q, rhs.q, "MParamPoly base mismatch");
        let mut terms: BTreeMap<i32, ExactRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                *terms.entry(ea + eb).or_insert_with(ExactRational::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MParamPoly { q: self.q, terms }
    }
}

impl fmt::Display for MParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match e {
                0 => render(c),
                1 => format!("{}*Q", render(c)),
                _ => format!("{}*Q^{}", render(c), e),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_scales_coefficients() {
        // alpha(m - 1, 2) from alpha(m, 2) by shifting, checked at several m.
        let b = QBase::new(2).unwrap();
        let a = MParamPoly::alpha(b, 2);
        for m in 0..6 {
            assert_eq!(a.shift_m(1).eval(m), b.alpha_ext(m - 1, 2));
            assert_eq!(a.eval(m), b.alpha_ext(m, 2));
        }
        // Shifting the exponent instead would be wrong: Q^1 shifted by 1 is Q/2, not 1.
        let q = MParamPoly::big_q(2);
        assert_eq!(q.shift_m(1), MParamPoly::monomial(2, 1, ExactRational::new(1.into(), 2.into())));
    }

    #[test]
    fn arithmetic_is_canonical() {
        let q = MParamPoly::big_q(3);
        let one = MParamPoly::one(3);
        let diff = &(&q + &one) - &q;
        assert_eq!(diff, one);
        assert!((&q - &q).is_zero());
        let sq = &(&q - &one) * &(&q + &one);
        assert_eq!(sq, &(&q * &q) - &one);
        assert_eq!(sq.as_constant(), None);
        assert_eq!(one.as_constant(), Some(rat(1)));
    }

    #[test]
    fn negative_exponents_evaluate() {
        let p = MParamPoly::monomial(2, -1, rat(3));
        assert_eq!(p.eval(2), ExactRational::new(3.into(), 4.into()));
        assert_eq!(p.to_string(), "3*Q^-1");
    }
}
