//! The MacWilliams identity for the rank metric: the functional transform
//! through q-products, the Krawtchouk form, and the enumerators of duals of
//! one-dimensional codes.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{as_integer, render, sigma, to_rat, ExactInt, ExactRational, MParamPoly, QBase};
use crate::gfcodes::RankDistribution;
use crate::qpoly::HomogPoly;

/// How a dual distribution was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Functional,
    Krawtchouk,
    Brute,
}

/// A distribution and its transform, with the parameters used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformReport {
    pub method: Method,
    pub q: u32,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub input: RankDistribution,
    pub output: RankDistribution,
}

fn q_inv_m(base: QBase) -> MParamPoly {
    MParamPoly::monomial(base.q(), -1, ExactRational::one())
}

/// `q^{-m} {a_r + (q^m - 1) b_r}` at the given `m`: the rank enumerator of
/// the dual of `<v>` for `v in GF(q^m)^r` of full rank `r`.
pub fn mrd_r_enumerator(base: QBase, r: usize, m: usize) -> Result<HomogPoly> {
    if r > m {
        return Err(Error::OutOfRange(format!("no vector of rank {r} exists when m = {m}")));
    }
    let q = base.q();
    let qm1 = &MParamPoly::big_q(q) - &MParamPoly::one(q);
    let sum = HomogPoly::a_poly(base, r).add(&HomogPoly::b_poly(base, r).scale(&qm1))?;
    Ok(sum.scale(&q_inv_m(base)).specialize(m as i64))
}

/// `q^{-m} {a_n + (q^m - 1) b_r * a_{n-r}}` at the given `m`: the rank
/// enumerator of `<v>^perp` for any `v in GF(q^m)^n` with `rk(v) = r`.
pub fn dual_vector_enumerator(base: QBase, n: usize, r: usize, m: usize) -> Result<HomogPoly> {
    if r > m.min(n) {
        return Err(Error::OutOfRange(format!("rank {r} impossible for n = {n}, m = {m}")));
    }
    let q = base.q();
    let qm1 = &MParamPoly::big_q(q) - &MParamPoly::one(q);
    let prod = HomogPoly::b_poly(base, r).q_product(&HomogPoly::a_poly(base, n - r))?;
    let sum = HomogPoly::a_poly(base, n).add(&prod.scale(&qm1))?;
    Ok(sum.scale(&q_inv_m(base)).specialize(m as i64))
}

fn integral(values: Vec<ExactRational>) -> Result<RankDistribution> {
    values
        .into_iter()
        .enumerate()
        .map(|(j, v)| as_integer(&v).ok_or(Error::NonIntegral { index: j, value: render(&v) }))
        .collect::<Result<Vec<ExactInt>>>()
        .map(RankDistribution::new)
}

/// `B_j = q^{-mk} [y^j] sum_i A_i (x - y)^{[i]} * a_{n-i}`, evaluated at `m`.
///
/// A non-integral `B_j` is reported as [`Error::NonIntegral`].
pub fn macwilliams_functional(base: QBase, m: usize, a: &RankDistribution, k: usize) -> Result<RankDistribution> {
    let n = a.n();
    let q = base.q();
    let mut acc = HomogPoly::zero(q, n);
    for (i, ai) in a.counts().iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        let term = HomogPoly::b_poly(base, i).q_product(&HomogPoly::a_poly(base, n - i))?;
        acc = acc.add(&term.scale_rat(&to_rat(ai)))?;
    }
    let scale = base.pow_rat(-((m * k) as i64));
    integral(acc.values_at(m as i64).into_iter().map(|v| v * &scale).collect())
}

fn krawtchouk_rat(base: QBase, j: usize, i: usize, m: i64, n: usize) -> ExactRational {
    let (j, i, n) = (j as i64, i as i64, n as i64);
    let mut acc = ExactRational::zero();
    for l in 0..=j {
        let g = base.gaussian(i, l) * base.gaussian(n - i, j - l);
        if g.is_zero() {
            continue;
        }
        let mut term = to_rat(&g) * base.pow_rat(sigma(l) + l * (n - i)) * base.alpha_ext(m - l, j - l);
        if l % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    acc
}

/// Generalized Krawtchouk polynomial
/// `P_j(i; m, n) = sum_l [i l][n-i j-l] (-1)^l q^{sigma_l} q^{l(n-i)} alpha(m-l, j-l)`.
///
/// Requires `i <= n`.
pub fn krawtchouk(base: QBase, j: usize, i: usize, m: usize, n: usize) -> ExactInt {
    assert!(i <= n, "krawtchouk needs i <= n");
    let v = krawtchouk_rat(base, j, i, m as i64, n);
    as_integer(&v).expect("Krawtchouk values are integers for m >= 0")
}

/// `B_j = q^{-mk} sum_i A_i P_j(i; m, n)`.
pub fn macwilliams_krawtchouk(base: QBase, m: usize, a: &RankDistribution, k: usize) -> Result<RankDistribution> {
    let n = a.n();
    let scale = base.pow_rat(-((m * k) as i64));
    let values = (0..=n)
        .map(|j| {
            let s: ExactInt = a
                .counts()
                .iter()
                .enumerate()
                .filter(|(_, ai)| !ai.is_zero())
                .map(|(i, ai)| ai * krawtchouk(base, j, i, m, n))
                .sum();
            to_rat(&s) * &scale
        })
        .collect();
    integral(values)
}

/// Runs an analytic transform and packages the result.
pub fn transform(base: QBase, m: usize, a: &RankDistribution, k: usize, method: Method) -> Result<TransformReport> {
    let output = match method {
        Method::Functional => macwilliams_functional(base, m, a, k)?,
        Method::Krawtchouk => macwilliams_krawtchouk(base, m, a, k)?,
        Method::Brute => return Err(Error::Unsupported("brute transform needs a concrete code".into())),
    };
    Ok(TransformReport { method, q: base.q(), m, n: a.n(), k, input: a.clone(), output })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> QBase {
        QBase::new(2).unwrap()
    }

    fn dist(v: &[i64]) -> RankDistribution {
        RankDistribution::new(v.iter().map(|&c| ExactInt::from(c)).collect())
    }

    #[test]
    fn single_vector_duals() {
        assert_eq!(mrd_r_enumerator(b2(), 1, 3).unwrap(), HomogPoly::from_ints(2, &[1, 0]).unwrap());
        assert_eq!(mrd_r_enumerator(b2(), 2, 2).unwrap(), HomogPoly::from_ints(2, &[1, 0, 3]).unwrap());
        assert!(mrd_r_enumerator(b2(), 3, 2).is_err());
        assert_eq!(dual_vector_enumerator(b2(), 2, 0, 2).unwrap(), HomogPoly::from_ints(2, &[1, 9, 6]).unwrap());
        assert_eq!(dual_vector_enumerator(b2(), 2, 2, 2).unwrap(), HomogPoly::from_ints(2, &[1, 0, 3]).unwrap());
        assert_eq!(dual_vector_enumerator(b2(), 2, 1, 2).unwrap(), HomogPoly::from_ints(2, &[1, 3, 0]).unwrap());
    }

    #[test]
    fn full_rank_coefficients_factor() {
        // [y^p] of the r-enumerator is [r p] times its own top coefficient at length p.
        for q in [2, 3] {
            let b = QBase::new(q).unwrap();
            for m in 1..5 {
                for r in 1..=m {
                    let e = mrd_r_enumerator(b, r, m).unwrap().values_at(m as i64);
                    for p in 0..=r {
                        let top = mrd_r_enumerator(b, p, m).unwrap().values_at(m as i64)[p].clone();
                        let top = if p == 0 { ExactRational::one() } else { top };
                        assert_eq!(e[p], to_rat(&b.gaussian(r as i64, p as i64)) * top);
                    }
                }
            }
        }
    }

    #[test]
    fn transform_examples() {
        for f in [macwilliams_functional, macwilliams_krawtchouk] {
            assert_eq!(f(b2(), 2, &dist(&[1, 9, 6]), 2).unwrap(), dist(&[1, 0, 0]));
            assert_eq!(f(b2(), 2, &dist(&[1, 0, 0]), 0).unwrap(), dist(&[1, 9, 6]));
            assert_eq!(f(b2(), 2, &dist(&[1, 3, 0]), 1).unwrap(), dist(&[1, 3, 0]));
            assert_eq!(f(b2(), 2, &dist(&[1, 0, 3]), 1).unwrap(), dist(&[1, 0, 3]));
        }
    }

    #[test]
    fn non_code_inputs_are_flagged() {
        let err = macwilliams_functional(b2(), 2, &dist(&[1, 1, 0]), 1).unwrap_err();
        assert!(matches!(err, Error::NonIntegral { .. }));
        assert!(macwilliams_krawtchouk(b2(), 2, &dist(&[1, 1, 0]), 1).is_err());
    }

    #[test]
    fn krawtchouk_examples() {
        assert_eq!(krawtchouk(b2(), 1, 0, 2, 2), ExactInt::from(9));
        assert_eq!(krawtchouk(b2(), 1, 1, 2, 2), ExactInt::from(1));
        assert_eq!(krawtchouk(b2(), 2, 1, 2, 2), ExactInt::from(-2));
        assert_eq!(krawtchouk(b2(), 0, 2, 3, 2), ExactInt::one());
    }

    #[test]
    fn report_serializes() {
        let r = transform(b2(), 2, &dist(&[1, 3, 0]), 1, Method::Krawtchouk).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains(r#""method":"krawtchouk""#));
        assert!(s.contains(r#""output":["1","3","0"]"#));
        assert!(transform(b2(), 2, &dist(&[1, 3, 0]), 1, Method::Brute).is_err());
    }
}
