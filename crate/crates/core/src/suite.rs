//! Grid verification: a corpus of small codes and the identity checks run
//! on each of them, plus the code-independent checks on the same grid.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{sigma, to_rat, ExactInt, ExactRational, PKind, QBase, RationalBase};
use crate::gfcodes::{
    brute_distribution, hadamard_rank_enumerator, rank_weight, CodeFile, CodeVector, ExtElement, FieldSpec,
    GaloisField, LinearCode, RankDistribution,
};
use crate::macwilliams::{dual_vector_enumerator, krawtchouk, macwilliams_functional, macwilliams_krawtchouk};
use crate::moments::{self, DualPair, MomentCheck};
use crate::mrd::{is_mrd, mrd_distribution};
use crate::qpoly::HomogPoly;

/// Grid bounds for [`run`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridConfig {
    pub q: Vec<u32>,
    pub max_m: usize,
    pub max_n: usize,
    /// Largest code (and dual) size enumerated; larger cells are skipped.
    pub cap: u64,
    pub seed: u64,
    /// Random generators drawn per `(m, n, k)` cell.
    pub random_per_cell: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig { q: vec![2], max_m: 3, max_n: 4, cap: 1 << 20, seed: 0, random_per_cell: 3 }
    }
}

/// How a corpus code was built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeKind {
    Zero,
    WholeSpace,
    Repetition,
    Gabidulin,
    CartesianProduct,
    Random,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub label: String,
    pub kind: CodeKind,
    pub code: LinearCode,
}

fn field(q: u32, m: usize) -> Result<Arc<GaloisField>> {
    Ok(Arc::new(GaloisField::new(FieldSpec::default_for(q, m)?)))
}

fn fits(q: u32, exponent: usize, cap: u64) -> bool {
    (q as u64).checked_pow(exponent as u32).is_some_and(|v| v <= cap)
}

fn random_code(f: &Arc<GaloisField>, n: usize, k: usize, rng: &mut ChaCha8Rng) -> LinearCode {
    loop {
        let rows = (0..k)
            .map(|_| CodeVector((0..n).map(|_| ExtElement(rng.gen_range(0..f.order()))).collect()))
            .collect();
        if let Ok(c) = LinearCode::new(Arc::clone(f), n, rows) {
            return c;
        }
    }
}

fn cell_seed(seed: u64, q: u32, m: usize, n: usize, k: usize) -> u64 {
    seed ^ ((q as u64) << 48) ^ ((m as u64) << 32) ^ ((n as u64) << 16) ^ k as u64
}

/// Structured codes for every cell plus seeded random generators. Codes
/// whose size or dual size exceeds `cap` appear in `skipped` instead.
pub fn corpus(cfg: &GridConfig) -> Result<(Vec<CorpusEntry>, Vec<String>)> {
    let mut out = Vec::new();
    let mut skipped = Vec::new();
    let mut push = |label: String, kind: CodeKind, code: LinearCode| {
        let m = code.field().m();
        let q = code.field().q();
        if fits(q, m * code.k(), cfg.cap) && fits(q, m * (code.n() - code.k()), cfg.cap) {
            out.push(CorpusEntry { label, kind, code });
        } else {
            skipped.push(label);
        }
    };
    for &q in &cfg.q {
        for m in 1..=cfg.max_m {
            let f = field(q, m)?;
            for n in 1..=cfg.max_n {
                let tag = format!("q={q} m={m} n={n}");
                push(format!("{tag} zero"), CodeKind::Zero, LinearCode::zero(Arc::clone(&f), n));
                push(format!("{tag} whole"), CodeKind::WholeSpace, LinearCode::whole_space(Arc::clone(&f), n));
                push(format!("{tag} repetition"), CodeKind::Repetition, LinearCode::repetition(Arc::clone(&f), n));
                if n <= m {
                    for k in 1..=n {
                        let g = LinearCode::gabidulin_standard(Arc::clone(&f), n, k)?;
                        push(format!("{tag} gabidulin k={k}"), CodeKind::Gabidulin, g);
                    }
                }
                for s in 1..=2usize.min(n - 1) {
                    let base = LinearCode::repetition(Arc::clone(&f), n - s);
                    push(format!("{tag} repetition x F^{s}"), CodeKind::CartesianProduct, base.cartesian_product(s));
                }
                for k in 1..=n {
                    let mut rng = ChaCha8Rng::seed_from_u64(cell_seed(cfg.seed, q, m, n, k));
                    for t in 0..cfg.random_per_cell {
                        let c = random_code(&f, n, k, &mut rng);
                        push(format!("{tag} random k={k} #{t}"), CodeKind::Random, c);
                    }
                }
            }
        }
    }
    Ok((out, skipped))
}

/// A failed check with enough context to reproduce it.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub label: String,
    pub check: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code: Option<CodeFile>,
}

/// Per-code results.
#[derive(Clone, Debug, Serialize)]
pub struct CodeReport {
    pub label: String,
    pub kind: CodeKind,
    pub q: u32,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub distribution: RankDistribution,
    pub dual_distribution: RankDistribution,
    pub held: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
}

/// Tally for one family of checks.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Tally {
    pub held: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        if ok {
            self.held += 1;
        } else {
            self.failed += 1;
        }
    }
}

/// The full grid report.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub config: GridConfig,
    pub codes_checked: usize,
    pub codes_skipped: Vec<String>,
    pub macwilliams: Tally,
    pub moments: Tally,
    pub mrd: Tally,
    pub dual_vectors: Tally,
    pub hadamard: Tally,
    pub krawtchouk: Tally,
    pub scalar: Tally,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn failed(&self) -> usize {
        [&self.macwilliams, &self.moments, &self.mrd, &self.dual_vectors, &self.hadamard, &self.krawtchouk, &self.scalar]
            .iter()
            .map(|t| t.failed)
            .sum()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }
}

struct CodeOutcome {
    report: CodeReport,
    macwilliams: Tally,
    moments: Tally,
    mrd: Tally,
}

fn check_code(entry: &CorpusEntry, cap: u64) -> Result<CodeOutcome> {
    let code = &entry.code;
    let f = code.field();
    let base = QBase::new(f.q())?;
    let (m, n, k) = (f.m(), code.n(), code.k());
    let pair = DualPair::from_code(code, cap)?;
    let a = pair.code().clone();
    let b = pair.dual().clone();
    let mut failures = Vec::new();
    let mut fail = |check: &str, detail: String| {
        failures.push(Failure {
            label: entry.label.clone(),
            check: check.to_string(),
            detail,
            code: Some(CodeFile::from_code(code)),
        })
    };
    let mut mw = Tally::default();
    let functional = macwilliams_functional(base, m, &a, k);
    let kraw = macwilliams_krawtchouk(base, m, &a, k);
    for (name, got) in [("functional", &functional), ("krawtchouk", &kraw)] {
        let ok = got.as_ref().is_ok_and(|d| d == &b);
        mw.record(ok);
        if !ok {
            fail(name, format!("expected {b}, got {got:?}"));
        }
    }
    let back = macwilliams_functional(base, m, &b, n - k);
    let ok = back.as_ref().is_ok_and(|d| d == &a);
    mw.record(ok);
    if !ok {
        fail("involution", format!("expected {a}, got {back:?}"));
    }
    let total_ok = a.total() == base.pow((m * k) as u64) && b.total() == base.pow((m * (n - k)) as u64);
    mw.record(total_ok);
    if !total_ok {
        fail("cardinality", format!("A = {a}, B = {b}"));
    }

    let mut mo = Tally::default();
    let mut checks: Vec<MomentCheck> = moments::all_checks(&pair, 3);
    // The same identities with B from the transform instead of enumeration.
    if let Ok(bf) = &functional {
        let alt = DualPair::new(base, m, k, a.clone(), bf.clone())?;
        checks.extend(moments::all_checks(&alt, 1));
    }
    for c in &checks {
        if c.is_skipped() {
            mo.skipped += 1;
        } else {
            mo.record(c.holds());
            if c.failed() {
                fail("moment", serde_json::to_string(c).unwrap_or_default());
            }
        }
    }

    let mut mr = Tally::default();
    if entry.kind == CodeKind::Gabidulin {
        let expect = mrd_distribution(base, m, n, k)?;
        let ok = expect == a;
        mr.record(ok);
        if !ok {
            fail("mrd distribution", format!("analytic {expect}, census {a}"));
        }
        let mrd = is_mrd(code, cap)?;
        mr.record(mrd);
        if !mrd {
            fail("mrd flag", "Gabidulin code not MRD".into());
        }
        // The dual of an MRD code is MRD: no dual weights in 1..=k.
        let ok = (1..=k).all(|i| b.get(i) == ExactInt::from(0));
        mr.record(ok);
        if !ok {
            fail("mrd dual", format!("dual distribution {b}"));
        }
    }
    if entry.kind == CodeKind::CartesianProduct {
        // Predicted by the q-product of the factor enumerator with a_s.
        let s = code.k() - 1;
        let r = n - s;
        let c0 = LinearCode::repetition(Arc::clone(f), r);
        let a0 = brute_distribution(&c0, cap)?;
        let w0 = HomogPoly::from_rationals(f.q(), &a0.counts().iter().map(to_rat).collect::<Vec<_>>())?;
        let pred = w0.q_product(&HomogPoly::a_poly(base, s))?.values_at(m as i64);
        let ok = pred == a.counts().iter().map(to_rat).collect::<Vec<_>>();
        mr.record(ok);
        if !ok {
            fail("cartesian product", format!("census {a}"));
        }
    }

    let held = mw.held + mo.held + mr.held;
    let skipped = mo.skipped;
    Ok(CodeOutcome {
        report: CodeReport {
            label: entry.label.clone(),
            kind: entry.kind.clone(),
            q: f.q(),
            m,
            n,
            k,
            distribution: a,
            dual_distribution: b,
            held,
            skipped,
            failures,
        },
        macwilliams: mw,
        moments: mo,
        mrd: mr,
    })
}

/// Per-code checks over the corpus. Results keep corpus order.
pub fn check_corpus(entries: &[CorpusEntry], cap: u64) -> Result<Vec<CodeReport>> {
    Ok(check_corpus_tallied(entries, cap)?.into_iter().map(|o| o.report).collect())
}

fn check_corpus_tallied(entries: &[CorpusEntry], cap: u64) -> Result<Vec<CodeOutcome>> {
    entries.par_iter().map(|e| check_code(e, cap)).collect()
}

/// Every `v in GF(q^m)^n`: the census of `<v>^perp` equals the enumerator
/// predicted from `rk(v)` alone. Returns `(held, failures)`.
pub fn dual_vector_checks(q: u32, m: usize, n: usize, cap: u64) -> Result<(usize, Vec<Failure>)> {
    let f = field(q, m)?;
    let base = QBase::new(q)?;
    if !fits(q, m * n, cap) {
        return Err(Error::CapExceeded { required: format!("{q}^{}", m * n), cap });
    }
    let order = f.order() as u64;
    let count = order.pow(n as u32);
    let predicted: Vec<Vec<ExactRational>> = (0..=m.min(n))
        .map(|r| dual_vector_enumerator(base, n, r, m).map(|p| p.values_at(m as i64)))
        .collect::<Result<_>>()?;
    let results: Vec<Option<Failure>> = (0..count)
        .into_par_iter()
        .map(|idx| {
            let mut j = idx;
            let v = CodeVector(
                (0..n)
                    .map(|_| {
                        let e = ExtElement((j % order) as u32);
                        j /= order;
                        e
                    })
                    .collect(),
            );
            let r = rank_weight(&v, &f);
            let dual = LinearCode::span_of(Arc::clone(&f), v.clone()).dual();
            let census = brute_distribution(&dual, cap).ok()?;
            let got: Vec<ExactRational> = census.counts().iter().map(to_rat).collect();
            (got != predicted[r]).then(|| Failure {
                label: format!("q={q} m={m} n={n} v={:?}", v.entries().iter().map(|e| e.0).collect::<Vec<_>>()),
                check: "dual of <v>".into(),
                detail: format!("rank {r}, census {census}"),
                code: None,
            })
        })
        .collect();
    let failures: Vec<Failure> = results.into_iter().flatten().collect();
    Ok((count as usize - failures.len(), failures))
}

/// Every `v in GF(2^m)^n`: the character-sum enumerator equals
/// `(x - y)^{[r]} * a_{n-r}` at `m`, `r = rk(v)`.
pub fn hadamard_checks(m: usize, n: usize, cap: u64) -> Result<(usize, Vec<Failure>)> {
    let f = field(2, m)?;
    let base = QBase::new(2)?;
    let order = f.order() as u64;
    let count = order.pow(n as u32);
    let predicted: Vec<HomogPoly> = (0..=m.min(n))
        .map(|r| HomogPoly::b_poly(base, r).q_product(&HomogPoly::a_poly(base, n - r)).map(|p| p.specialize(m as i64)))
        .collect::<Result<_>>()?;
    let mut held = 0;
    let mut failures = Vec::new();
    for idx in 0..count {
        let mut j = idx;
        let v = CodeVector(
            (0..n)
                .map(|_| {
                    let e = ExtElement((j % order) as u32);
                    j /= order;
                    e
                })
                .collect(),
        );
        let r = rank_weight(&v, &f);
        let h = hadamard_rank_enumerator(&v, &f, cap)?;
        if h == predicted[r] {
            held += 1;
        } else {
            failures.push(Failure {
                label: format!("m={m} n={n} v={:?}", v.entries().iter().map(|e| e.0).collect::<Vec<_>>()),
                check: "hadamard".into(),
                detail: format!("got {h}, expected {}", predicted[r]),
                code: None,
            });
        }
    }
    Ok((held, failures))
}

/// Krawtchouk recurrence, initial values and product expansion on
/// `i, j <= max_ij`, `m, n <= max_mn`.
pub fn krawtchouk_checks(q: u32, max_ij: usize, max_mn: usize) -> Result<(usize, Vec<Failure>)> {
    let base = QBase::new(q)?;
    let mut held = 0;
    let mut failures = Vec::new();
    let mut record = |ok: bool, label: String| {
        if ok {
            held += 1;
        } else {
            failures.push(Failure { label, check: "krawtchouk".into(), detail: String::new(), code: None });
        }
    };
    for m in 0..=max_mn {
        for n in 0..=max_mn {
            for j in 0..=max_ij.min(n) {
                record(
                    krawtchouk(base, j, 0, m, n) == base.gaussian(n as i64, j as i64) * base.alpha(m as i64, j as i64),
                    format!("initial q={q} j={j} m={m} n={n}"),
                );
            }
            // P_{j+1}(i+1; m+1, n+1) = q^{j+1} P_{j+1}(i; m, n) - q^j P_j(i; m, n).
            for i in 0..=max_ij.min(n) {
                for j in 0..=max_ij.min(n) {
                    let lhs = krawtchouk(base, j + 1, i + 1, m + 1, n + 1);
                    let rhs = base.pow(j as u64 + 1) * krawtchouk(base, j + 1, i, m, n)
                        - base.pow(j as u64) * krawtchouk(base, j, i, m, n);
                    record(lhs == rhs, format!("recurrence q={q} i={i} j={j} m={m} n={n}"));
                }
            }
            if m >= 1 {
                for i in 0..=max_ij.min(n) {
                    let prod = HomogPoly::b_poly(base, i).q_product(&HomogPoly::a_poly(base, n - i))?;
                    let vals = prod.values_at(m as i64);
                    for (j, v) in vals.iter().enumerate().take(max_ij + 1) {
                        record(
                            *v == to_rat(&krawtchouk(base, j, i, m, n)),
                            format!("expansion q={q} i={i} j={j} m={m} n={n}"),
                        );
                    }
                }
            }
        }
    }
    Ok((held, failures))
}

/// Scalar identities: q-Stirling expansion of `[m 1]^nu`, the p-conversions,
/// the `delta` and `theta` closed forms, the orthogonality sum, and the
/// symmetry of `S(nu, n, m)`.
pub fn scalar_checks(q: u32, max: usize) -> Result<(usize, Vec<Failure>)> {
    let base = QBase::new(q)?;
    let p = base.inverse();
    let pb = RationalBase::from_q(base);
    let mut held = 0;
    let mut failures = Vec::new();
    let mut record = |ok: bool, label: String| {
        if ok {
            held += 1;
        } else {
            failures.push(Failure { label, check: "scalar".into(), detail: String::new(), code: None });
        }
    };
    let mx = max as i64;
    for nu in 0..=mx {
        for m in 0..=mx {
            let lhs = num_traits::pow(to_rat(&base.q_int(m)), nu as usize);
            let rhs = (0..=nu).fold(ExactRational::from_integer(0.into()), |acc, l| {
                acc + base.pow_rat(sigma(l))
                    * base.q_stirling2(nu as u32, l as u32)
                    * to_rat(&base.beta(m, l))
            });
            record(lhs == rhs, format!("stirling q={q} nu={nu} m={m}"));
            let lhs_p = num_traits::pow(p.q_int(m), nu as usize);
            let rhs_p = (0..=nu)
                .fold(ExactRational::from_integer(0.into()), |acc, l| {
                    acc + p.pow(sigma(l)) * p.stirling2(nu as u32, l as u32) * p.beta(m, l)
                });
            record(lhs_p == rhs_p, format!("stirling over p q={q} nu={nu} m={m}"));
            let u = nu;
            let s = sigma(u);
            let alpha_ok = to_rat(&base.alpha(m, u))
                == p.pow(-m * u - s) * if u % 2 == 1 { -p.alpha(m, u) } else { p.alpha(m, u) };
            record(alpha_ok, format!("alpha_p q={q} m={m} u={u}"));
            let g_ok = to_rat(&base.gaussian(m, u)) == p.pow(-u * (m - u)) * base.p_variant(PKind::Gaussian, m, u);
            record(g_ok, format!("gaussian_p q={q} n={m} u={u}"));
            if u <= m {
                let b_ok = to_rat(&base.beta(m, u)) == p.pow(-u * (m - u) - s) * base.p_variant(PKind::Beta, m, u);
                record(b_ok, format!("beta_p q={q} m={m} u={u}"));
            }
        }
    }
    for m in 0..=mx {
        for nu in 0..=mx {
            for j in 0..=nu {
                record(
                    moments::delta_sum(base, m, nu, j) == moments::delta_closed(base, m, nu, j),
                    format!("delta q={q} m={m} nu={nu} j={j}"),
                );
                if nu <= m {
                    record(
                        moments::theta_sum(base, m, nu, j) == moments::theta_closed(base, m, nu, j),
                        format!("theta q={q} n={m} nu={nu} j={j}"),
                    );
                }
            }
            for l in 0..=nu {
                let expect = if l == nu { 1 } else { 0 };
                record(
                    moments::orthogonality_sum(base, nu, l) == ExactRational::from_integer(expect.into()),
                    format!("orthogonality q={q} nu={nu} l={l}"),
                );
            }
        }
    }
    for nu in 0..=mx.min(4) {
        for m in 0..=mx.min(4) {
            for n in 0..=mx.min(4) {
                let lhs = moments::s_sum(base, nu, n, m);
                let rhs = pb.pow(nu * (n - m)) * moments::s_sum(base, nu, m, n);
                record(lhs == rhs, format!("S symmetry q={q} nu={nu} n={n} m={m}"));
            }
        }
    }
    Ok((held, failures))
}

fn absorb(t: &mut Tally, failures: &mut Vec<Failure>, r: (usize, Vec<Failure>)) {
    t.held += r.0;
    t.failed += r.1.len();
    failures.extend(r.1);
}

/// Runs every check on the grid.
pub fn run(cfg: &GridConfig) -> Result<SuiteReport> {
    let (entries, codes_skipped) = corpus(cfg)?;
    let outcomes = check_corpus_tallied(&entries, cfg.cap)?;
    let mut report = SuiteReport {
        config: cfg.clone(),
        codes_checked: outcomes.len(),
        codes_skipped,
        macwilliams: Tally::default(),
        moments: Tally::default(),
        mrd: Tally::default(),
        dual_vectors: Tally::default(),
        hadamard: Tally::default(),
        krawtchouk: Tally::default(),
        scalar: Tally::default(),
        failures: Vec::new(),
    };
    for o in outcomes {
        for (dst, src) in [(&mut report.macwilliams, &o.macwilliams), (&mut report.moments, &o.moments), (&mut report.mrd, &o.mrd)] {
            dst.held += src.held;
            dst.failed += src.failed;
            dst.skipped += src.skipped;
        }
        report.failures.extend(o.report.failures);
    }
    for &q in &cfg.q {
        for m in 1..=cfg.max_m {
            for n in 1..=cfg.max_n.min(3) {
                if fits(q, m * n, cfg.cap) {
                    absorb(&mut report.dual_vectors, &mut report.failures, dual_vector_checks(q, m, n, cfg.cap)?);
                } else {
                    report.dual_vectors.skipped += 1;
                }
                if q == 2 && fits(2, m * n, cfg.cap) {
                    absorb(&mut report.hadamard, &mut report.failures, hadamard_checks(m, n, cfg.cap)?);
                } else if q == 2 {
                    report.hadamard.skipped += 1;
                }
            }
        }
        absorb(&mut report.krawtchouk, &mut report.failures, krawtchouk_checks(q, 5, 6)?);
        absorb(&mut report.scalar, &mut report.failures, scalar_checks(q, 5)?);
    }
    Ok(report)
}
