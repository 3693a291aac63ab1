//! The rank-metric Singleton bound and the rank distribution of MRD codes.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{sigma, to_rat, ExactInt, ExactRational, QBase};
use crate::gfcodes::{brute_distribution, LinearCode, RankDistribution};

/// Parameters of an MRD code, `d = n - k + 1` in the Class-I case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MrdParams {
    pub q: u32,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl MrdParams {
    pub fn class_one(q: u32, m: usize, n: usize, k: usize) -> Result<Self> {
        if !(1 <= k && k <= n && n <= m) {
            return Err(Error::OutOfRange(format!("need 1 <= k <= n <= m, got k = {k}, n = {n}, m = {m}")));
        }
        Ok(MrdParams { q, m, n, k, d: n - k + 1 })
    }
}

/// `min{q^{m(n-d+1)}, q^{n(m-d+1)}}`.
pub fn singleton_bound(base: QBase, m: usize, n: usize, d: usize) -> Result<ExactInt> {
    if d < 1 || d > m.min(n) {
        return Err(Error::OutOfRange(format!("distance {d} outside 1..={}", m.min(n))));
    }
    let a = base.pow((m * (n - d + 1)) as u64);
    let b = base.pow((n * (m - d + 1)) as u64);
    Ok(a.min(b))
}

/// Whether `code` attains the Singleton bound. The zero code does not.
pub fn is_mrd(code: &LinearCode, cap: u64) -> Result<bool> {
    let field = code.field();
    let Some(d) = brute_distribution(code, cap)?.min_nonzero_weight() else {
        return Ok(false);
    };
    let base = QBase::new(field.q())?;
    let size = base.pow((field.m() * code.k()) as u64);
    Ok(size == singleton_bound(base, field.m(), code.n(), d)?)
}

/// `a_j = sum_{i<=j} [l-i l-j] b_i`.
pub fn gaussian_partial_sums(base: QBase, l: usize, b: &[ExactRational]) -> Vec<ExactRational> {
    let l = l as i64;
    (0..=l)
        .map(|j| {
            (0..=j)
                .map(|i| to_rat(&base.gaussian(l - i, l - j)) * &b[i as usize])
                .fold(ExactRational::zero(), |acc, t| acc + t)
        })
        .collect()
}

/// Inverse of [`gaussian_partial_sums`]:
/// `b_i = sum_{j<=i} (-1)^{i-j} q^{sigma_{i-j}} [l-j l-i] a_j`.
pub fn invert_gaussian_partial_sums(base: QBase, l: usize, a: &[ExactRational]) -> Vec<ExactRational> {
    let l = l as i64;
    (0..=l)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let t = to_rat(&base.gaussian(l - j, l - i)) * base.pow_rat(sigma(i - j)) * &a[j as usize];
                    if (i - j) % 2 == 1 {
                        -t
                    } else {
                        t
                    }
                })
                .fold(ExactRational::zero(), |acc, t| acc + t)
        })
        .collect()
}

/// Rank distribution of an `(n, k)` linear MRD code over `GF(q^m)`, `n <= m`:
/// `A_0 = 1` and
/// `A_{d+i} = [n d+i] sum_{j<=i} (-1)^{i-j} q^{sigma_{i-j}} [d+i d+j] (q^{m(j+1)} - 1)`.
pub fn mrd_distribution(base: QBase, m: usize, n: usize, k: usize) -> Result<RankDistribution> {
    let p = MrdParams::class_one(base.q(), m, n, k)?;
    let d = p.d as i64;
    let n_ = n as i64;
    let mut counts = vec![BigInt::zero(); n + 1];
    counts[0] = BigInt::from(1);
    for i in 0..=(n_ - d) {
        let mut s = BigInt::zero();
        for j in 0..=i {
            let mut t: BigInt = base.pow(sigma(i - j) as u64)
                * base.gaussian(d + i, d + j)
                * (base.pow((m as i64 * (j + 1)) as u64) - BigInt::from(1));
            if (i - j) % 2 == 1 {
                t = -t;
            }
            s += t;
        }
        counts[(d + i) as usize] = base.gaussian(n_, d + i) * s;
    }
    Ok(RankDistribution::new(counts))
}

/// Rank distribution of a Class-II MRD code (`n >= m`) of minimum distance
/// `d`: its codewords transpose to those of an `(m, m-d+1)` MRD code over
/// `GF(q^n)`, so the distribution is [`mrd_distribution`] with `m` and `n`
/// exchanged, padded to length `n + 1`.
pub fn class2_distribution(base: QBase, m: usize, n: usize, d: usize) -> Result<RankDistribution> {
    if n < m {
        return Err(Error::OutOfRange(format!("Class-II needs n >= m, got n = {n}, m = {m}")));
    }
    if d < 1 || d > m {
        return Err(Error::OutOfRange(format!("distance {d} outside 1..={m}")));
    }
    let inner = mrd_distribution(base, n, m, m - d + 1)?;
    let mut counts = inner.counts().to_vec();
    counts.resize(n + 1, BigInt::zero());
    Ok(RankDistribution::new(counts))
}
