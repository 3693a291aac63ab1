use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::code::{CodeVector, LinearCode};
use super::field::GaloisField;
use crate::error::{Error, Result};
use crate::exactnum::ExactInt;
use crate::qpoly::HomogPoly;

/// Default enumeration budget, in codewords.
pub const DEFAULT_CAP: u64 = 1 << 24;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "RANKMAC_CAP";

/// The cap from `RANKMAC_CAP`, or [`DEFAULT_CAP`] when unset or unparsable.
pub fn cap_from_env() -> u64 {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

fn rank_gf2(vals: &[u32]) -> usize {
    let mut basis = [0u32; 32];
    let mut r = 0;
    for &v in vals {
        let mut x = v;
        while x != 0 {
            let h = 31 - x.leading_zeros() as usize;
            if basis[h] == 0 {
                basis[h] = x;
                r += 1;
                break;
            }
            x ^= basis[h];
        }
    }
    r
}

/// Rank over `GF(q)` of the rows stored in `rows` (`count` rows of width `w`).
fn rank_mod_q(rows: &mut [u32], count: usize, w: usize, q: u32) -> usize {
    let mut rank = 0;
    for col in 0..w {
        let Some(sel) = (rank..count).find(|&r| rows[r * w + col] != 0) else {
            continue;
        };
        if sel != rank {
            for c in 0..w {
                rows.swap(sel * w + c, rank * w + c);
            }
        }
        let piv = rows[rank * w + col];
        let inv = (1..q).find(|x| x * piv % q == 1).unwrap_or(1);
        for c in col..w {
            rows[rank * w + c] = rows[rank * w + c] * inv % q;
        }
        for r in rank + 1..count {
            let f = rows[r * w + col];
            if f != 0 {
                for c in col..w {
                    let sub = f * rows[rank * w + c] % q;
                    rows[r * w + c] = (rows[r * w + c] + q - sub) % q;
                }
            }
        }
        rank += 1;
        if rank == count {
            break;
        }
    }
    rank
}

struct RankScratch<'a> {
    field: &'a GaloisField,
    buf: Vec<u32>,
}

impl<'a> RankScratch<'a> {
    fn new(field: &'a GaloisField) -> Self {
        RankScratch { field, buf: Vec::new() }
    }

    fn rank(&mut self, entries: &[u32]) -> usize {
        let q = self.field.q();
        if q == 2 {
            return rank_gf2(entries);
        }
        let m = self.field.m();
        self.buf.clear();
        for &e in entries {
            self.buf.extend_from_slice(self.field.coeffs(super::field::ExtElement(e)));
        }
        rank_mod_q(&mut self.buf, entries.len(), m, q)
    }
}

/// Rank of `v` over `GF(q)`: the rank of the `m x n` matrix of coordinates.
pub fn rank_weight(v: &CodeVector, field: &GaloisField) -> usize {
    let raw: Vec<u32> = v.entries().iter().map(|e| e.0).collect();
    RankScratch::new(field).rank(&raw)
}

/// Rank weight distribution `(A_0, ..., A_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankDistribution {
    counts: Vec<ExactInt>,
}

impl RankDistribution {
    pub fn new(counts: Vec<ExactInt>) -> Self {
        RankDistribution { counts }
    }

    pub fn from_u64(counts: &[u64]) -> Self {
        RankDistribution { counts: counts.iter().map(|&c| BigInt::from(c)).collect() }
    }

    /// Code length.
    pub fn n(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn counts(&self) -> &[ExactInt] {
        &self.counts
    }

    pub fn get(&self, i: usize) -> ExactInt {
        self.counts.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn total(&self) -> ExactInt {
        self.counts.iter().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| !self.counts[i].is_zero())
    }

    pub fn max_nonzero_weight(&self) -> Option<usize> {
        (1..self.counts.len()).rev().find(|&i| !self.counts[i].is_zero())
    }
}

impl fmt::Display for RankDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for RankDistribution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        strings.serialize(s)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CountRepr {
    Text(String),
    Int(i64),
}

impl<'de> Deserialize<'de> for RankDistribution {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<CountRepr> = Vec::deserialize(d)?;
        let counts = raw
            .into_iter()
            .map(|c| match c {
                CountRepr::Int(v) => Ok(BigInt::from(v)),
                CountRepr::Text(s) => s.trim().parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(RankDistribution { counts })
    }
}

pub(crate) fn check_cap(q: u32, exponent: usize, cap: u64) -> Result<u64> {
    let required = BigInt::from(q).pow(exponent as u32);
    match required.to_u64() {
        Some(r) if r <= cap => Ok(r),
        _ => Err(Error::CapExceeded { required: required.to_string(), cap }),
    }
}

/// Walks the `GF(q)`-span of `basis` in modular Gray-code order over the
/// index range `[start, end)`, calling `visit` on every combination.
fn gray_walk<F: FnMut(&[u32])>(
    field: &GaloisField,
    basis: &[Vec<u32>],
    start: u64,
    end: u64,
    mut visit: F,
) {
    let q = field.q();
    let width = basis.first().map_or(0, |b| b.len());
    let add = |a: u32, b: u32| -> u32 {
        if q == 2 {
            a ^ b
        } else {
            field.add(super::field::ExtElement(a), super::field::ExtElement(b)).0
        }
    };
    // Gray image of `start`: digit i is d_i - d_{i+1} mod q.
    let mut cur = vec![0u32; width];
    let mut digits = Vec::with_capacity(basis.len());
    let mut j = start;
    for _ in 0..basis.len() {
        digits.push((j % q as u64) as u32);
        j /= q as u64;
    }
    for (i, b) in basis.iter().enumerate() {
        let next = digits.get(i + 1).copied().unwrap_or(0);
        let g = (digits[i] + q - next) % q;
        for _ in 0..g {
            for (c, &e) in cur.iter_mut().zip(b) {
                *c = add(*c, e);
            }
        }
    }
    let mut idx = start;
    while idx < end {
        visit(&cur);
        let mut t = 0;
        let mut j = idx;
        while j % q as u64 == (q - 1) as u64 {
            j /= q as u64;
            t += 1;
        }
        idx += 1;
        if idx < end {
            for (c, &e) in cur.iter_mut().zip(&basis[t]) {
                *c = add(*c, e);
            }
        }
    }
}

fn chunks(total: u64) -> Vec<(u64, u64)> {
    let pieces = if total < 1 << 12 { 1 } else { (rayon::current_num_threads() as u64 * 8).min(total) };
    let step = total.div_ceil(pieces);
    (0..pieces)
        .map(|p| (p * step, ((p + 1) * step).min(total)))
        .filter(|(a, b)| a < b)
        .collect()
}

/// `GF(q)`-basis `{x^t * row_i}` of a code, as raw entry vectors.
fn prime_field_basis(code: &LinearCode) -> Vec<Vec<u32>> {
    let field = code.field();
    let mut out = Vec::new();
    for row in code.generator() {
        for t in 0..field.m() {
            out.push(row.scaled(field.basis(t), field).entries().iter().map(|e| e.0).collect());
        }
    }
    out
}

/// Exhaustive rank census of all `q^{mk}` codewords of `code`.
pub fn brute_distribution(code: &LinearCode, cap: u64) -> Result<RankDistribution> {
    let field = code.field();
    let n = code.n();
    let total = check_cap(field.q(), field.m() * code.k(), cap)?;
    if code.k() == 0 {
        let mut counts = vec![0u64; n + 1];
        counts[0] = 1;
        return Ok(RankDistribution::from_u64(&counts));
    }
    let basis = prime_field_basis(code);
    let counts = chunks(total)
        .into_par_iter()
        .map(|(a, b)| {
            let mut local = vec![0u64; n + 1];
            let mut scratch = RankScratch::new(field);
            gray_walk(field, &basis, a, b, |v| local[scratch.rank(v)] += 1);
            local
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                x
            },
        );
    Ok(RankDistribution::from_u64(&counts))
}

/// Minimum rank distance, or `None` for the zero code.
pub fn min_rank_distance(code: &LinearCode, cap: u64) -> Result<Option<usize>> {
    Ok(brute_distribution(code, cap)?.min_nonzero_weight())
}

/// Largest rank weight of a codeword, or `None` for the zero code.
pub fn diameter(code: &LinearCode, cap: u64) -> Result<Option<usize>> {
    Ok(brute_distribution(code, cap)?.max_nonzero_weight())
}

/// `sum_u chi(u.v) y^{rk(u)} x^{n-rk(u)}` over all `u in GF(2^m)^n`, with
/// `chi(a) = (-1)^{a_0}`.
pub fn hadamard_rank_enumerator(v: &CodeVector, field: &GaloisField, cap: u64) -> Result<HomogPoly> {
    if field.q() != 2 {
        return Err(Error::Unsupported(format!("character sums need q = 2, got q = {}", field.q())));
    }
    let n = v.len();
    let m = field.m();
    let total = check_cap(2, m * n, cap)?;
    // Each basis vector x^t e_i carries x^t v_i in an extra slot, so the
    // last coordinate of the running vector is u.v.
    let mut basis = Vec::with_capacity(m * n);
    for i in 0..n {
        for t in 0..m {
            let mut b = vec![0u32; n + 1];
            b[i] = field.basis(t).0;
            b[n] = field.mul(field.basis(t), v.entries()[i]).0;
            basis.push(b);
        }
    }
    let counts = chunks(total)
        .into_par_iter()
        .map(|(a, b)| {
            let mut local = vec![0i64; n + 1];
            gray_walk(field, &basis, a, b, |u| {
                let r = rank_gf2(&u[..n]);
                local[r] += if u[n] & 1 == 0 { 1 } else { -1 };
            });
            local
        })
        .reduce(
            || vec![0i64; n + 1],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                x
            },
        );
    HomogPoly::from_ints(2, &counts)
}
