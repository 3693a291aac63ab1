//! Arithmetic in `GF(q^m)` for prime `q`, with elements stored in the power
//! basis of a monic irreducible modulus.
//!
//! Elements are identified with the integer `sum_i a_i q^i` of their
//! little-endian coordinate vector `(a_0, ..., a_{m-1})`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::is_prime;

/// Largest field order accepted.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;
const TABLE_LIMIT: u32 = 256;

/// Description of `GF(q^m)`: a prime `q`, the degree `m` and a monic
/// irreducible modulus of degree `m`, little-endian.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub q: u32,
    pub m: usize,
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    /// Validates the parameters, including irreducibility of the modulus.
    pub fn new(q: u32, m: usize, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if m == 0 {
            return Err(Error::InvalidModulus("extension degree m must be at least 1".into()));
        }
        if (q as u64).checked_pow(m as u32).is_none_or(|order| order > MAX_FIELD_ORDER) {
            return Err(Error::FieldTooLarge { q, m });
        }
        if modulus.len() != m + 1 {
            return Err(Error::InvalidModulus(format!(
                "expected {} coefficients for degree {m}, got {}",
                m + 1,
                modulus.len()
            )));
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= q) {
            return Err(Error::InvalidModulus(format!("coefficient {c} is not in GF({q})")));
        }
        if modulus[m] != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if !poly::is_irreducible(&modulus, q) {
            return Err(Error::Reducible(modulus, q));
        }
        Ok(FieldSpec { q, m, modulus })
    }

    /// The lexicographically first monic irreducible modulus of degree `m`
    /// (comparing coefficient vectors from the constant term upwards as
    /// the integer `sum c_i q^i`).
    pub fn default_for(q: u32, m: usize) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if m == 0 {
            return Err(Error::InvalidModulus("extension degree m must be at least 1".into()));
        }
        let order = (q as u64).checked_pow(m as u32).filter(|&o| o <= MAX_FIELD_ORDER);
        let order = order.ok_or(Error::FieldTooLarge { q, m })?;
        for low in 0..order {
            let mut modulus = poly::digits(low, q, m);
            modulus.push(1);
            if poly::is_irreducible(&modulus, q) {
                return Ok(FieldSpec { q, m, modulus });
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn order(&self) -> u32 {
        self.q.pow(self.m as u32)
    }
}

/// An element of `GF(q^m)`, identified by its integer encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExtElement(pub u32);

impl ExtElement {
    pub const ZERO: ExtElement = ExtElement(0);
    pub const ONE: ExtElement = ExtElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// `GF(q^m)` with precomputed coordinates and, for small orders, operation
/// tables.
#[derive(Debug)]
pub struct GaloisField {
    spec: FieldSpec,
    order: u32,
    digits: Vec<Vec<u32>>,
    add_table: Option<Vec<u32>>,
    mul_table: Option<Vec<u32>>,
}

impl GaloisField {
    pub fn new(spec: FieldSpec) -> Self {
        let order = spec.order();
        let digits = (0..order as u64).map(|v| poly::digits(v, spec.q, spec.m)).collect();
        let mut field = GaloisField { spec, order, digits, add_table: None, mul_table: None };
        if order <= TABLE_LIMIT {
            let o = order as usize;
            let mut add = vec![0u32; o * o];
            let mut mul = vec![0u32; o * o];
            for a in 0..order {
                for b in 0..order {
                    add[a as usize * o + b as usize] = field.add_slow(a, b);
                    mul[a as usize * o + b as usize] = field.mul_slow(a, b);
                }
            }
            field.add_table = Some(add);
            field.mul_table = Some(mul);
        }
        field
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn q(&self) -> u32 {
        self.spec.q
    }

    pub fn m(&self) -> usize {
        self.spec.m
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = ExtElement> {
        (0..self.order).map(ExtElement)
    }

    /// Coordinates of `a` in the power basis, little-endian.
    pub fn coeffs(&self, a: ExtElement) -> &[u32] {
        &self.digits[a.0 as usize]
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<ExtElement> {
        if coeffs.len() != self.spec.m {
            return Err(Error::Dimension(format!(
                "element needs {} coordinates, got {}",
                self.spec.m,
                coeffs.len()
            )));
        }
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.spec.q {
                return Err(Error::ElementOutOfRange { value: c as u64, q: self.spec.q, m: self.spec.m });
            }
            v = v * self.spec.q as u64 + c as u64;
        }
        Ok(ExtElement(v as u32))
    }

    pub fn from_int(&self, v: u64) -> Result<ExtElement> {
        if v >= self.order as u64 {
            return Err(Error::ElementOutOfRange { value: v, q: self.spec.q, m: self.spec.m });
        }
        Ok(ExtElement(v as u32))
    }

    /// The embedding of `c in GF(q)`.
    pub fn scalar(&self, c: u32) -> ExtElement {
        ExtElement(c % self.spec.q)
    }

    /// The `t`-th power-basis element `x^t`, `t < m`.
    pub fn basis(&self, t: usize) -> ExtElement {
        ExtElement(self.spec.q.pow(t as u32))
    }

    /// A root of the modulus: the residue class of `x`.
    pub fn generator(&self) -> ExtElement {
        if self.spec.m == 1 {
            // GF(q) itself; the class of x is -modulus[0].
            ExtElement((self.spec.q - self.spec.modulus[0]) % self.spec.q)
        } else {
            self.basis(1)
        }
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        let q = self.spec.q;
        let da = &self.digits[a as usize];
        let db = &self.digits[b as usize];
        let mut v = 0u32;
        for i in (0..self.spec.m).rev() {
            v = v * q + (da[i] + db[i]) % q;
        }
        v
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let q = self.spec.q;
        let prod = poly::mul_mod(&self.digits[a as usize], &self.digits[b as usize], &self.spec.modulus, q);
        prod.iter().rev().fold(0u32, |acc, &d| acc * q + d)
    }

    #[inline]
    pub fn add(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        if self.spec.q == 2 {
            return ExtElement(a.0 ^ b.0);
        }
        match &self.add_table {
            Some(t) => ExtElement(t[a.0 as usize * self.order as usize + b.0 as usize]),
            None => ExtElement(self.add_slow(a.0, b.0)),
        }
    }

    pub fn neg(&self, a: ExtElement) -> ExtElement {
        let q = self.spec.q;
        let d = &self.digits[a.0 as usize];
        ExtElement(d.iter().rev().fold(0u32, |acc, &c| acc * q + (q - c) % q))
    }

    pub fn sub(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        match &self.mul_table {
            Some(t) => ExtElement(t[a.0 as usize * self.order as usize + b.0 as usize]),
            None => ExtElement(self.mul_slow(a.0, b.0)),
        }
    }

    pub fn pow(&self, a: ExtElement, mut e: u64) -> ExtElement {
        let mut base = a;
        let mut acc = ExtElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: ExtElement) -> Option<ExtElement> {
        if a.is_zero() {
            return None;
        }
        Some(self.pow(a, self.order as u64 - 2))
    }

    /// `a^{q^i}`.
    pub fn frobenius(&self, a: ExtElement, i: usize) -> ExtElement {
        (0..i).fold(a, |acc, _| self.pow(acc, self.spec.q as u64))
    }
}

/// Polynomials over `GF(q)`, little-endian.
pub(crate) mod poly {
    pub fn digits(mut v: u64, q: u32, len: usize) -> Vec<u32> {
        (0..len)
            .map(|_| {
                let d = (v % q as u64) as u32;
                v /= q as u64;
                d
            })
            .collect()
    }

    fn trim(mut p: Vec<u32>) -> Vec<u32> {
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    }

    fn inv_mod(a: u32, q: u32) -> u32 {
        // q is prime; Fermat.
        let mut acc = 1u64;
        let mut base = a as u64 % q as u64;
        let mut e = q as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % q as u64;
            }
            base = base * base % q as u64;
            e >>= 1;
        }
        acc as u32
    }

    /// Remainder of `a` modulo `b` (`b` nonzero).
    pub fn rem(a: &[u32], b: &[u32], q: u32) -> Vec<u32> {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], q) as u64;
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let factor = r[r.len() - 1] as u64 * lead_inv % q as u64;
            for (i, &bc) in b.iter().enumerate() {
                let sub = factor * bc as u64 % q as u64;
                let idx = i + shift;
                r[idx] = ((r[idx] as u64 + q as u64 - sub) % q as u64) as u32;
            }
            r = trim(r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], q: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % q as u64;
            }
        }
        trim(out.into_iter().map(|v| v as u32).collect())
    }

    /// `a * b mod modulus`, padded to `deg(modulus)` coordinates.
    pub fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], q: u32) -> Vec<u32> {
        let m = modulus.len() - 1;
        let mut r = rem(&mul(a, b, q), modulus, q);
        r.resize(m, 0);
        r
    }

    fn gcd(a: &[u32], b: &[u32], q: u32) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, q);
            a = b;
            b = r;
        }
        a
    }

    /// Ben-Or test: `f` of degree `m` is irreducible iff
    /// `gcd(x^{q^i} - x mod f, f) = 1` for `1 <= i <= m/2`.
    pub fn is_irreducible(f: &[u32], q: u32) -> bool {
        let f = trim(f.to_vec());
        if f.len() < 2 {
            return false;
        }
        let m = f.len() - 1;
        if m == 1 {
            return true;
        }
        if f[0] == 0 {
            return false;
        }
        let mut power = vec![0, 1];
        for _ in 1..=m / 2 {
            // power <- power^q mod f
            let mut acc = vec![1u32];
            let mut base = power.clone();
            let mut e = q;
            while e > 0 {
                if e & 1 == 1 {
                    acc = rem(&mul(&acc, &base, q), &f, q);
                }
                base = rem(&mul(&base, &base, q), &f, q);
                e >>= 1;
            }
            power = acc;
            let mut diff = power.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + q - 1) % q;
            let g = gcd(&f, &diff, q);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Irreducibility by trial division with every monic polynomial of
    /// degree at most m/2.
    fn irreducible_by_trial(f: &[u32], q: u32) -> bool {
        let m = f.len() - 1;
        for d in 1..=m / 2 {
            for low in 0..(q as u64).pow(d as u32) {
                let mut g = poly::digits(low, q, d);
                g.push(1);
                if poly::rem(f, &g, q).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn ben_or_agrees_with_trial_division() {
        for q in [2u32, 3, 5] {
            for m in 1..=5usize {
                if (q as u64).pow(m as u32) > 3200 {
                    continue;
                }
                for low in 0..(q as u64).pow(m as u32) {
                    let mut f = poly::digits(low, q, m);
                    f.push(1);
                    assert_eq!(poly::is_irreducible(&f, q), irreducible_by_trial(&f, q), "{f:?} over GF({q})");
                }
            }
        }
    }

    #[test]
    fn default_moduli() {
        assert_eq!(FieldSpec::default_for(2, 2).unwrap().modulus, vec![1, 1, 1]);
        assert_eq!(FieldSpec::default_for(2, 3).unwrap().modulus, vec![1, 1, 0, 1]);
        assert_eq!(FieldSpec::default_for(3, 2).unwrap().modulus, vec![1, 0, 1]);
        assert_eq!(FieldSpec::default_for(2, 1).unwrap().modulus, vec![0, 1]);
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(FieldSpec::new(2, 2, vec![1, 0, 1]), Err(Error::Reducible(..))));
        assert!(matches!(FieldSpec::new(4, 1, vec![0, 1]), Err(Error::NotPrime(4))));
        assert!(matches!(FieldSpec::new(2, 2, vec![1, 1]), Err(Error::InvalidModulus(_))));
        assert!(matches!(FieldSpec::new(2, 2, vec![1, 1, 2]), Err(Error::InvalidModulus(_))));
        assert!(matches!(FieldSpec::new(3, 2, vec![1, 0, 2]), Err(Error::InvalidModulus(_))));
        assert!(matches!(FieldSpec::new(2, 30, vec![0; 31]), Err(Error::FieldTooLarge { .. })));
        assert!(FieldSpec::new(3, 3, vec![1, 2, 0, 1]).is_ok());
    }

    #[test]
    fn field_axioms_small() {
        for (q, m) in [(2u32, 1usize), (2, 3), (3, 2), (5, 1), (2, 9)] {
            let f = GaloisField::new(FieldSpec::default_for(q, m).unwrap());
            let elems: Vec<_> = f.elements().take(40).collect();
            for &a in &elems {
                assert_eq!(f.add(a, f.neg(a)), ExtElement::ZERO);
                if let Some(inv) = f.inv(a) {
                    assert_eq!(f.mul(a, inv), ExtElement::ONE);
                }
                for &b in &elems {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in elems.iter().take(6) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                // Frobenius is additive and fixes GF(q).
                assert_eq!(f.frobenius(a, m), a);
            }
            for c in 0..q {
                assert_eq!(f.frobenius(f.scalar(c), 1), f.scalar(c));
            }
            // The generator is a root of the modulus.
            let g = f.generator();
            let mut acc = ExtElement::ZERO;
            for (i, &c) in f.spec().modulus.iter().enumerate() {
                acc = f.add(acc, f.mul(f.scalar(c), f.pow(g, i as u64)));
            }
            assert_eq!(acc, ExtElement::ZERO);
        }
    }

    #[test]
    fn element_encodings_agree() {
        let f = GaloisField::new(FieldSpec::default_for(3, 2).unwrap());
        let e = f.from_coeffs(&[2, 1]).unwrap();
        assert_eq!(e, ExtElement(5));
        assert_eq!(f.coeffs(e), &[2, 1]);
        assert_eq!(f.from_int(5).unwrap(), e);
        assert!(f.from_int(9).is_err());
        assert!(f.from_coeffs(&[3, 0]).is_err());
        assert!(f.from_coeffs(&[1]).is_err());
    }
}
