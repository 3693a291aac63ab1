//! Homogeneous bivariate polynomials in `(x, y)` whose coefficients depend
//! on `m` through `Q = q^m`, together with the q-product, q-powers, the
//! q-transform and the two q-derivatives.
//!
//! A polynomial of degree `r` is stored as the coefficient list of
//! `y^u x^{r-u}` for `u = 0..=r`. The q-product is not commutative; operand
//! order is always preserved.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rat, sigma, ExactRational, MParamPoly, QBase};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogPoly {
    q: u32,
    coeffs: Vec<MParamPoly>,
}

impl HomogPoly {
    /// Builds a polynomial from its `y`-degree-indexed coefficients. The
    /// degree is `coeffs.len() - 1`.
    pub fn new(q: u32, coeffs: Vec<MParamPoly>) -> Result<Self> {
        QBase::new(q)?;
        if coeffs.is_empty() {
            return Err(Error::Dimension("a homogeneous polynomial needs at least one coefficient".into()));
        }
        if let Some(bad) = coeffs.iter().find(|c| c.base() != q) {
            return Err(Error::BaseMismatch { left: q, right: bad.base() });
        }
        Ok(HomogPoly { q, coeffs })
    }

    /// Polynomial with constant rational coefficients.
    pub fn from_rationals(q: u32, coeffs: &[ExactRational]) -> Result<Self> {
        Self::new(q, coeffs.iter().map(|c| MParamPoly::constant(q, c.clone())).collect())
    }

    pub fn from_ints(q: u32, coeffs: &[i64]) -> Result<Self> {
        Self::new(q, coeffs.iter().map(|&c| MParamPoly::from_int(q, c)).collect())
    }

    pub fn zero(q: u32, degree: usize) -> Self {
        HomogPoly { q, coeffs: vec![MParamPoly::zero(q); degree + 1] }
    }

    /// The constant polynomial `1` (degree 0).
    pub fn one(q: u32) -> Self {
        Self::constant(MParamPoly::one(q))
    }

    pub fn constant(c: MParamPoly) -> Self {
        HomogPoly { q: c.base(), coeffs: vec![c] }
    }

    pub fn x(q: u32) -> Self {
        HomogPoly { q, coeffs: vec![MParamPoly::one(q), MParamPoly::zero(q)] }
    }

    pub fn y(q: u32) -> Self {
        HomogPoly { q, coeffs: vec![MParamPoly::zero(q), MParamPoly::one(q)] }
    }

    /// `c * y^u x^{r-u}`.
    pub fn monomial(q: u32, degree: usize, u: usize, c: MParamPoly) -> Self {
        let mut p = Self::zero(q, degree);
        p.coeffs[u] = c;
        p
    }

    /// `x + (Q - 1) y`, the rank weight enumerator of `GF(q^m)`.
    pub fn space_generator(q: u32) -> Self {
        let c = &MParamPoly::big_q(q) - &MParamPoly::one(q);
        HomogPoly { q, coeffs: vec![MParamPoly::one(q), c] }
    }

    /// `x - y`.
    pub fn difference_generator(q: u32) -> Self {
        HomogPoly { q, coeffs: vec![MParamPoly::one(q), MParamPoly::from_int(q, -1)] }
    }

    pub fn base(&self) -> u32 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `y^u x^{r-u}`; zero when `u > r`.
    pub fn coeff(&self, u: usize) -> MParamPoly {
        self.coeffs.get(u).cloned().unwrap_or_else(|| MParamPoly::zero(self.q))
    }

    pub fn coeffs(&self) -> &[MParamPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MParamPoly::is_zero)
    }

    fn qbase(&self) -> QBase {
        QBase::new_unchecked(self.q)
    }

    fn same_base(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::BaseMismatch { left: self.q, right: other.q });
        }
        Ok(())
    }

    /// Coefficientwise sum of two polynomials of equal degree.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_base(other)?;
        if self.degree() != other.degree() {
            return Err(Error::Dimension(format!(
                "cannot add degrees {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(HomogPoly { q: self.q, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale_rat(&rat(-1)))
    }

    /// Multiplies every coefficient by an `m`-dependent factor.
    pub fn scale(&self, c: &MParamPoly) -> Self {
        HomogPoly { q: self.q, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn scale_rat(&self, c: &ExactRational) -> Self {
        HomogPoly { q: self.q, coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    /// `f(x, y; m - s)`.
    pub fn shift_m(&self, s: i64) -> Self {
        HomogPoly { q: self.q, coeffs: self.coeffs.iter().map(|a| a.shift_m(s)).collect() }
    }

    /// `f(x, c y)`: coefficient `u` is multiplied by `c^u`.
    pub fn scale_y(&self, c: &ExactRational) -> Self {
        let mut power = ExactRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.scale(&power));
            power *= c;
        }
        HomogPoly { q: self.q, coeffs }
    }

    /// `f / x`, defined when the `y^r` coefficient vanishes.
    pub fn div_x(&self) -> Option<Self> {
        let r = self.degree();
        if r == 0 || !self.coeffs[r].is_zero() {
            return None;
        }
        Some(HomogPoly { q: self.q, coeffs: self.coeffs[..r].to_vec() })
    }

    /// `f / y`, defined when the `x^r` coefficient vanishes.
    pub fn div_y(&self) -> Option<Self> {
        if self.degree() == 0 || !self.coeffs[0].is_zero() {
            return None;
        }
        Some(HomogPoly { q: self.q, coeffs: self.coeffs[1..].to_vec() })
    }

    /// The q-product `self * other`:
    /// `c_u(m) = sum_i q^{i s} a_i(m) b_{u-i}(m - i)` with `s = deg(other)`.
    pub fn q_product(&self, other: &Self) -> Result<Self> {
        self.same_base(other)?;
        let r = self.degree();
        let s = other.degree();
        let base = self.qbase();
        // Shifted copies of the right operand, one per left index.
        let shifted: Vec<Vec<MParamPoly>> = (0..=r)
            .map(|i| other.coeffs.iter().map(|b| b.shift_m(i as i64)).collect())
            .collect();
        let mut coeffs = vec![MParamPoly::zero(self.q); r + s + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let weighted = a.scale(&base.pow_rat((i * s) as i64));
            for (j, b) in shifted[i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(&weighted * b);
                }
            }
        }
        Ok(HomogPoly { q: self.q, coeffs })
    }

    /// `a^{[n]}`, with `a^{[0]} = 1` and `a^{[n]} = a^{[n-1]} * a`.
    pub fn q_power(&self, n: usize) -> Self {
        let mut acc = HomogPoly::one(self.q);
        for _ in 0..n {
            acc = acc.q_product(self).expect("same base");
        }
        acc
    }

    /// `a_l = [x + (Q-1) y]^{[l]}` in closed form: coefficient `u` is
    /// `[l u] alpha(m, u)`.
    pub fn a_poly(base: QBase, l: usize) -> Self {
        let q = base.q();
        let coeffs = (0..=l)
            .map(|u| {
                let g = base.gaussian(l as i64, u as i64);
                MParamPoly::alpha(base, u as i64).scale(&ExactRational::from_integer(g))
            })
            .collect();
        HomogPoly { q, coeffs }
    }

    /// `b_l = (x - y)^{[l]}` in closed form: coefficient `u` is
    /// `[l u] (-1)^u q^{sigma_u}`.
    pub fn b_poly(base: QBase, l: usize) -> Self {
        let q = base.q();
        let coeffs = (0..=l)
            .map(|u| {
                let u = u as i64;
                let mut c = ExactRational::from_integer(base.gaussian(l as i64, u)) * base.pow_rat(sigma(u));
                if u % 2 == 1 {
                    c = -c;
                }
                MParamPoly::constant(q, c)
            })
            .collect();
        HomogPoly { q, coeffs }
    }

    /// The q-transform `sum_i a_i(m) y^{[i]} * x^{[r-i]}`.
    pub fn q_transform(&self) -> Self {
        let r = self.degree();
        let y = HomogPoly::y(self.q);
        let x = HomogPoly::x(self.q);
        let mut acc = HomogPoly::zero(self.q, r);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = y.q_power(i).q_product(&x.q_power(r - i)).expect("same base");
            acc = acc.add(&term.scale(a)).expect("same degree");
        }
        acc
    }

    /// The `nu`-th q-derivative with respect to `x`: `y^i x^{r-i}` maps to
    /// `beta(r-i, nu) y^i x^{r-i-nu}`. Past the degree the result is the zero
    /// polynomial of degree 0.
    pub fn q_derivative(&self, nu: usize) -> Self {
        let r = self.degree();
        if nu > r {
            return HomogPoly::zero(self.q, 0);
        }
        let base = self.qbase();
        let coeffs = (0..=r - nu)
            .map(|i| {
                let b = base.beta((r - i) as i64, nu as i64);
                self.coeffs[i].scale(&ExactRational::from_integer(b))
            })
            .collect();
        HomogPoly { q: self.q, coeffs }
    }

    /// The `nu`-th q^{-1}-derivative with respect to `y`: `y^l x^s` maps to
    /// `q^{nu(1-l) + sigma_nu} beta(l, nu) y^{l-nu} x^s`.
    pub fn q_inv_derivative(&self, nu: usize) -> Self {
        let r = self.degree();
        if nu > r {
            return HomogPoly::zero(self.q, 0);
        }
        let base = self.qbase();
        let n = nu as i64;
        let coeffs = (nu..=r)
            .map(|l| {
                let l = l as i64;
                let factor = ExactRational::from_integer(base.beta(l, n)) * base.pow_rat(n * (1 - l) + sigma(n));
                self.coeffs[l as usize].scale(&factor)
            })
            .collect();
        HomogPoly { q: self.q, coeffs }
    }

    /// Coefficients at a concrete `m`.
    pub fn values_at(&self, m: i64) -> Vec<ExactRational> {
        self.coeffs.iter().map(|c| c.eval(m)).collect()
    }

    /// The polynomial with every coefficient frozen at a concrete `m`.
    pub fn specialize(&self, m: i64) -> Self {
        HomogPoly {
            q: self.q,
            coeffs: self.coeffs.iter().map(|c| MParamPoly::constant(self.q, c.eval(m))).collect(),
        }
    }

    /// `f(x, y; m)` at a concrete point.
    pub fn evaluate(&self, m: i64, x: &ExactRational, y: &ExactRational) -> ExactRational {
        let r = self.degree();
        let mut total = ExactRational::zero();
        for (u, c) in self.coeffs.iter().enumerate() {
            let term = c.eval(m) * num_traits::pow(y.clone(), u) * num_traits::pow(x.clone(), r - u);
            total += term;
        }
        total
    }

    /// `f(1, 1; m)` as a function of `m`.
    pub fn sum_coeffs(&self) -> MParamPoly {
        self.coeffs.iter().fold(MParamPoly::zero(self.q), |acc, c| &acc + c)
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.degree();
        let mut parts = Vec::new();
        for (u, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match (u, r - u) {
                (0, 0) => String::new(),
                (0, 1) => "x".to_string(),
                (0, e) => format!("x^{e}"),
                (1, 0) => "y".to_string(),
                (d, 0) => format!("y^{d}"),
                (1, 1) => "yx".to_string(),
                (1, e) => format!("yx^{e}"),
                (d, 1) => format!("y^{d}x"),
                (d, e) => format!("y^{d}x^{e}"),
            };
            parts.push(if mono.is_empty() { format!("({c})") } else { format!("({c}){mono}") });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
