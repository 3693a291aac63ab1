//! Moment identities relating the rank distribution of a code to that of
//! its dual: binomial moments, q-analogues of the Pless identities, and the
//! family `T_{lambda,mu,nu}` of q-moments.

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, render, sigma, to_rat, ExactRational, QBase, RationalBase};
use crate::gfcodes::{brute_distribution, LinearCode, RankDistribution};

/// Which identity a [`MomentCheck`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    BinomialX,
    BinomialXLow,
    BinomialY,
    BinomialYLow,
    BinomialYHigh,
    PlessX,
    PlessXLow,
    PlessXSpace,
    PlessY,
    PlessYLow,
    TLambdaReduction,
    TMuReduction,
    TMomentSumJ,
    TMomentSpace,
    TMomentSumL,
    TLambdaSpace,
    TMuSpace,
}

impl Identity {
    pub const ALL: [Identity; 17] = [
        Identity::BinomialX,
        Identity::BinomialXLow,
        Identity::BinomialY,
        Identity::BinomialYLow,
        Identity::BinomialYHigh,
        Identity::PlessX,
        Identity::PlessXLow,
        Identity::PlessXSpace,
        Identity::PlessY,
        Identity::PlessYLow,
        Identity::TLambdaReduction,
        Identity::TMuReduction,
        Identity::TMomentSumJ,
        Identity::TMomentSpace,
        Identity::TMomentSumL,
        Identity::TLambdaSpace,
        Identity::TMuSpace,
    ];
}

/// Result of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Held,
    Failed,
    Skipped { reason: String },
}

fn ser_rat<S: Serializer>(v: &Option<ExactRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_some(&render(r)),
        None => s.serialize_none(),
    }
}

/// Both sides of an identity at given parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentCheck {
    pub identity: Identity,
    pub nu: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
    #[serde(serialize_with = "ser_rat")]
    pub lhs: Option<ExactRational>,
    #[serde(serialize_with = "ser_rat")]
    pub rhs: Option<ExactRational>,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl MomentCheck {
    fn compare(identity: Identity, nu: usize, lhs: ExactRational, rhs: ExactRational) -> Self {
        let outcome = if lhs == rhs { Outcome::Held } else { Outcome::Failed };
        MomentCheck { identity, nu, lambda: None, mu: None, lhs: Some(lhs), rhs: Some(rhs), outcome }
    }

    fn skipped(identity: Identity, nu: usize, reason: String) -> Self {
        MomentCheck { identity, nu, lambda: None, mu: None, lhs: None, rhs: None, outcome: Outcome::Skipped { reason } }
    }

    fn with_lambda(mut self, lambda: usize) -> Self {
        self.lambda = Some(lambda);
        self
    }

    fn with_mu(mut self, mu: usize) -> Self {
        self.mu = Some(mu);
        self
    }

    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Held
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Failed
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.outcome, Outcome::Skipped { .. })
    }
}

/// The rank distributions of a code and of its dual.
#[derive(Clone, Debug)]
pub struct DualPair {
    base: QBase,
    m: usize,
    k: usize,
    a: RankDistribution,
    b: RankDistribution,
}

impl DualPair {
    pub fn new(base: QBase, m: usize, k: usize, a: RankDistribution, b: RankDistribution) -> Result<Self> {
        if a.counts().len() != b.counts().len() || a.counts().is_empty() {
            return Err(Error::Dimension(format!(
                "distributions of lengths {} and {}",
                a.counts().len(),
                b.counts().len()
            )));
        }
        if k > a.n() {
            return Err(Error::OutOfRange(format!("k = {k} exceeds n = {}", a.n())));
        }
        Ok(DualPair { base, m, k, a, b })
    }

    /// Both distributions by exhaustive enumeration.
    pub fn from_code(code: &LinearCode, cap: u64) -> Result<Self> {
        let base = QBase::new(code.field().q())?;
        let a = brute_distribution(code, cap)?;
        let b = brute_distribution(&code.dual(), cap)?;
        Self::new(base, code.field().m(), code.k(), a, b)
    }

    pub fn base(&self) -> QBase {
        self.base
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn code(&self) -> &RankDistribution {
        &self.a
    }

    pub fn dual(&self) -> &RankDistribution {
        &self.b
    }

    /// Minimum rank distance of the dual; `n + 1` when the dual is `{0}`.
    pub fn dual_min_distance(&self) -> usize {
        self.b.min_nonzero_weight().unwrap_or(self.n() + 1)
    }

    /// Diameter of the dual; `0` when the dual is `{0}`.
    pub fn dual_diameter(&self) -> usize {
        self.b.max_nonzero_weight().unwrap_or(0)
    }
}

struct Eval {
    q: RationalBase,
    p: RationalBase,
    m: i64,
    n: i64,
    k: i64,
    a: Vec<ExactRational>,
    b: Vec<ExactRational>,
}

fn alt(e: i64, v: ExactRational) -> ExactRational {
    if e.rem_euclid(2) == 1 {
        -v
    } else {
        v
    }
}

fn sum<I: Iterator<Item = ExactRational>>(it: I) -> ExactRational {
    it.fold(ExactRational::zero(), |acc, t| acc + t)
}

impl Eval {
    fn new(pair: &DualPair) -> Self {
        Eval {
            q: RationalBase::from_q(pair.base),
            p: pair.base.inverse(),
            m: pair.m as i64,
            n: pair.n() as i64,
            k: pair.k as i64,
            a: pair.a.counts().iter().map(to_rat).collect(),
            b: pair.b.counts().iter().map(to_rat).collect(),
        }
    }

    fn g(&self, n: i64, u: i64) -> ExactRational {
        self.q.gaussian(n, u)
    }

    fn pw(&self, e: i64) -> ExactRational {
        self.q.pow(e)
    }

    fn al(&self, m: i64, u: i64) -> ExactRational {
        self.q.alpha(m, u)
    }

    fn stirling(&self, nu: i64, l: i64) -> ExactRational {
        self.q.stirling2(nu as u32, l as u32)
    }

    fn binomial_x_lhs(&self, nu: i64) -> ExactRational {
        sum((0..=self.n - nu).map(|i| self.g(self.n - i, nu) * &self.a[i as usize]))
    }

    fn binomial_y_lhs(&self, nu: i64) -> ExactRational {
        sum((nu..=self.n).map(|i| self.g(i, nu) * self.pw(nu * (self.n - i)) * &self.a[i as usize]))
    }

    /// `[n-j n-nu] (-1)^j q^{sigma_j} alpha(m-j, nu-j) q^{j(nu-j)}`.
    fn binomial_y_weight(&self, nu: i64, j: i64) -> ExactRational {
        alt(
            j,
            self.g(self.n - j, self.n - nu) * self.pw(sigma(j) + j * (nu - j)) * self.al(self.m - j, nu - j),
        )
    }

    fn pless_x_lhs(&self, nu: i64) -> ExactRational {
        let s = sum((0..=self.n).map(|i| num_traits::pow(self.q.q_int(self.n - i), nu as usize) * &self.a[i as usize]));
        s * self.pw(-self.m * self.k)
    }

    fn pless_y_lhs(&self, nu: i64) -> ExactRational {
        let s = sum((0..=self.n).map(|i| num_traits::pow(self.p.q_int(i), nu as usize) * &self.a[i as usize]));
        s * self.p.pow(self.m * self.k)
    }

    fn t(&self, lambda: i64, mu: i64, nu: i64) -> ExactRational {
        let s = sum((0..=self.n).map(|i| {
            num_traits::pow(self.g(i, lambda), mu as usize) * self.pw(nu * (self.n - i)) * &self.a[i as usize]
        }));
        s * self.pw(-self.m * self.k)
    }

    /// `q^{-mn} sum_i f(i) [n i] alpha(m, i)`: the value over `GF(q^m)^n`.
    fn over_space<F: Fn(i64) -> ExactRational>(&self, f: F) -> ExactRational {
        let s = sum((0..=self.n).map(|i| f(i) * self.g(self.n, i) * self.al(self.m, i)));
        s * self.pw(-self.m * self.n)
    }
}

fn below_dual_distance(pair: &DualPair, identity: Identity, nu: usize) -> Option<MomentCheck> {
    let d = pair.dual_min_distance();
    (nu >= d).then(|| MomentCheck::skipped(identity, nu, format!("nu = {nu} is not below the dual minimum distance {d}")))
}

/// `sum_{i<=n-nu} [n-i nu] A_i = q^{m(k-nu)} sum_{j<=nu} [n-j n-nu] B_j`.
pub fn binomial_moment_x(pair: &DualPair, nu: usize) -> MomentCheck {
    let e = Eval::new(pair);
    let v = nu as i64;
    let rhs = sum((0..=v).map(|j| e.g(e.n - j, e.n - v) * &e.b[j as usize])) * e.pw(e.m * (e.k - v));
    MomentCheck::compare(Identity::BinomialX, nu, e.binomial_x_lhs(v), rhs)
}

/// For `nu < d'`: `sum_{i<=n-nu} [n-i nu] A_i = q^{m(k-nu)} [n nu]`.
pub fn binomial_moment_x_simplified(pair: &DualPair, nu: usize) -> MomentCheck {
    if let Some(skip) = below_dual_distance(pair, Identity::BinomialXLow, nu) {
        return skip;
    }
    let e = Eval::new(pair);
    let v = nu as i64;
    let rhs = e.g(e.n, v) * e.pw(e.m * (e.k - v));
    MomentCheck::compare(Identity::BinomialXLow, nu, e.binomial_x_lhs(v), rhs)
}

/// `sum_{i>=nu} [i nu] q^{nu(n-i)} A_i =
/// q^{m(k-nu)} sum_{j<=nu} [n-j n-nu] (-1)^j q^{sigma_j} alpha(m-j, nu-j) q^{j(nu-j)} B_j`.
pub fn binomial_moment_y(pair: &DualPair, nu: usize) -> MomentCheck {
    let e = Eval::new(pair);
    let v = nu as i64;
    let rhs = sum((0..=v).map(|j| e.binomial_y_weight(v, j) * &e.b[j as usize])) * e.pw(e.m * (e.k - v));
    MomentCheck::compare(Identity::BinomialY, nu, e.binomial_y_lhs(v), rhs)
}

/// For `nu < d'`: `sum_{i>=nu} [i nu] q^{nu(n-i)} A_i = q^{m(k-nu)} [n nu] alpha(m, nu)`.
pub fn binomial_moment_y_low(pair: &DualPair, nu: usize) -> MomentCheck {
    if let Some(skip) = below_dual_distance(pair, Identity::BinomialYLow, nu) {
        return skip;
    }
    let e = Eval::new(pair);
    let v = nu as i64;
    let rhs = e.g(e.n, v) * e.al(e.m, v) * e.pw(e.m * (e.k - v));
    MomentCheck::compare(Identity::BinomialYLow, nu, e.binomial_y_lhs(v), rhs)
}

/// For `delta' < nu <= n`:
/// `sum_{i<=nu} [n-i n-nu] (-1)^i q^{sigma_i} alpha(m-i, nu-i) q^{i(nu-i)} A_i = 0`.
pub fn binomial_moment_y_high(pair: &DualPair, nu: usize) -> MomentCheck {
    let delta = pair.dual_diameter();
    if nu <= delta || nu > pair.n() {
        return MomentCheck::skipped(
            Identity::BinomialYHigh,
            nu,
            format!("nu = {nu} is not above the dual diameter {delta}"),
        );
    }
    let e = Eval::new(pair);
    let v = nu as i64;
    let lhs = sum((0..=v).map(|i| e.binomial_y_weight(v, i) * &e.a[i as usize]));
    MomentCheck::compare(Identity::BinomialYHigh, nu, lhs, ExactRational::zero())
}

/// Both forms of the second binomial-moment corollary.
pub fn binomial_moment_y_corollaries(pair: &DualPair, nu: usize) -> [MomentCheck; 2] {
    [binomial_moment_y_low(pair, nu), binomial_moment_y_high(pair, nu)]
}

/// `q^{-mk} sum_i [n-i 1]^nu A_i =
/// sum_{j<=nu} B_j sum_{l<=nu} [n-j n-l] beta(l, l) S_q(nu, l) q^{-ml+sigma_l}`.
pub fn pless_x(pair: &DualPair, nu: usize) -> MomentCheck {
    let e = Eval::new(pair);
    let v = nu as i64;
    let rhs = sum((0..=v.min(e.n)).map(|j| {
        let inner = sum((0..=v).map(|l| {
            e.g(e.n - j, e.n - l) * e.q.beta(l, l) * e.stirling(v, l) * e.pw(-e.m * l + sigma(l))
        }));
        inner * &e.b[j as usize]
    }));
    MomentCheck::compare(Identity::PlessX, nu, e.pless_x_lhs(v), rhs)
}

/// For `nu < d'`, the two code-independent forms
/// `sum_l beta(n, l) S_q(nu, l) q^{-ml+sigma_l}` and
/// `q^{-mn} sum_i [n-i 1]^nu [n i] alpha(m, i)`.
pub fn pless_x_simplified(pair: &DualPair, nu: usize) -> [MomentCheck; 2] {
    if below_dual_distance(pair, Identity::PlessXLow, nu).is_some() {
        return [
            below_dual_distance(pair, Identity::PlessXLow, nu).unwrap(),
            below_dual_distance(pair, Identity::PlessXSpace, nu).unwrap(),
        ];
    }
    let e = Eval::new(pair);
    let v = nu as i64;
    let lhs = e.pless_x_lhs(v);
    let low = sum((0..=v).map(|l| e.q.beta(e.n, l) * e.stirling(v, l) * e.pw(-e.m * l + sigma(l))));
    let space = e.over_space(|i| num_traits::pow(e.q.q_int(e.n - i), nu));
    [
        MomentCheck::compare(Identity::PlessXLow, nu, lhs.clone(), low),
        MomentCheck::compare(Identity::PlessXSpace, nu, lhs, space),
    ]
}

/// With `p = 1/q`: `p^{mk} sum_i [i 1]_p^nu A_i =
/// sum_{j<=nu} B_j p^{j(m+n-j)} sum_{l=j}^{nu} beta_p(l, l) S_p(nu, l) (-1)^l [n-j n-l]_p alpha_p(m-j, l-j)`.
pub fn pless_y(pair: &DualPair, nu: usize) -> MomentCheck {
    let e = Eval::new(pair);
    let v = nu as i64;
    let p = &e.p;
    let rhs = sum((0..=v.min(e.n)).map(|j| {
        let inner = sum((j..=v).map(|l| {
            alt(
                l,
                p.beta(l, l) * p.stirling2(nu as u32, l as u32) * p.gaussian(e.n - j, e.n - l) * p.alpha(e.m - j, l - j),
            )
        }));
        inner * p.pow(j * (e.m + e.n - j)) * &e.b[j as usize]
    }));
    MomentCheck::compare(Identity::PlessY, nu, e.pless_y_lhs(v), rhs)
}

/// For `nu < d'`: `p^{mk} sum_i [i 1]_p^nu A_i = sum_l beta_p(n, l) S_p(nu, l) alpha_p(m, l) (-1)^l`.
pub fn pless_y_simplified(pair: &DualPair, nu: usize) -> MomentCheck {
    if let Some(skip) = below_dual_distance(pair, Identity::PlessYLow, nu) {
        return skip;
    }
    let e = Eval::new(pair);
    let v = nu as i64;
    let p = &e.p;
    let rhs = sum((0..=v).map(|l| alt(l, p.beta(e.n, l) * p.stirling2(nu as u32, l as u32) * p.alpha(e.m, l))));
    MomentCheck::compare(Identity::PlessYLow, nu, e.pless_y_lhs(v), rhs)
}

/// `T_{lambda,mu,nu} = q^{-mk} sum_i [i lambda]^mu q^{nu(n-i)} A_i`; `nu` may be negative.
pub fn t_moment(pair: &DualPair, lambda: usize, mu: usize, nu: i64) -> ExactRational {
    Eval::new(pair).t(lambda as i64, mu as i64, nu)
}

/// Reductions of `T_{lambda,1,nu}` and `T_{1,mu,nu}` to `T_{0,0,*}`.
pub fn t_reductions(pair: &DualPair, lambda: usize, mu: usize, nu: usize) -> [MomentCheck; 2] {
    let e = Eval::new(pair);
    let (lam, mu_, v) = (lambda as i64, mu as i64, nu as i64);
    let via_lambda = sum((0..=lam).map(|l| {
        alt(l, e.g(lam, l) * e.pw(sigma(l) + e.n * (lam - l)) * e.t(0, 0, v - lam + l))
    })) / e.al(lam, lam);
    let one_minus_q = ExactRational::one() - e.q.base();
    let via_mu = sum((0..=mu_).map(|a| {
        alt(a, to_rat(&binomial(mu as u64, a as u64)) * e.pw(a * e.n) * e.t(0, 0, v - a))
    })) / num_traits::pow(one_minus_q, mu);
    [
        MomentCheck::compare(Identity::TLambdaReduction, nu, e.t(lam, 1, v), via_lambda).with_lambda(lambda),
        MomentCheck::compare(Identity::TMuReduction, nu, e.t(1, mu_, v), via_mu).with_mu(mu),
    ]
}

/// For `nu < d'`, the three code-independent forms of `T_{0,0,nu}`.
pub fn t_closed_forms(pair: &DualPair, nu: usize) -> [MomentCheck; 3] {
    let ids = [Identity::TMomentSumJ, Identity::TMomentSpace, Identity::TMomentSumL];
    if below_dual_distance(pair, ids[0], nu).is_some() {
        return ids.map(|id| below_dual_distance(pair, id, nu).unwrap());
    }
    let e = Eval::new(pair);
    let v = nu as i64;
    let t = e.t(0, 0, v);
    let sum_j = s_sum(pair.base, v, e.n, e.m);
    let space = e.over_space(|i| e.pw(v * (e.n - i)));
    let sum_l = sum((0..=v).map(|l| e.g(v, l) * e.al(e.m, l) * e.pw(e.n * (v - l)))) * e.pw(-e.m * v);
    [
        MomentCheck::compare(ids[0], nu, t.clone(), sum_j),
        MomentCheck::compare(ids[1], nu, t.clone(), space),
        MomentCheck::compare(ids[2], nu, t, sum_l),
    ]
}

/// For `lambda, mu <= nu < d'`, the code-independent forms of
/// `T_{lambda,1,nu}` and `T_{1,mu,nu}`.
pub fn t_space_forms(pair: &DualPair, lambda: usize, mu: usize, nu: usize) -> [MomentCheck; 2] {
    let lam_check = |id: Identity| -> Option<MomentCheck> {
        below_dual_distance(pair, id, nu).or_else(|| {
            (lambda > nu || mu > nu)
                .then(|| MomentCheck::skipped(id, nu, format!("lambda = {lambda}, mu = {mu} exceed nu = {nu}")))
        })
    };
    if let Some(skip) = lam_check(Identity::TLambdaSpace) {
        return [skip.with_lambda(lambda), lam_check(Identity::TMuSpace).unwrap().with_mu(mu)];
    }
    let e = Eval::new(pair);
    let (lam, mu_, v) = (lambda as i64, mu as i64, nu as i64);
    let lam_form = sum((lam..=e.n).map(|i| e.g(e.n - lam, i - lam) * e.pw(v * (e.n - i)) * e.al(e.m, i)))
        * e.g(e.n, lam)
        * e.pw(-e.m * e.n);
    let mu_form = e.over_space(|i| num_traits::pow(e.q.q_int(i), mu) * e.pw(v * (e.n - i)));
    [
        MomentCheck::compare(Identity::TLambdaSpace, nu, e.t(lam, 1, v), lam_form).with_lambda(lambda),
        MomentCheck::compare(Identity::TMuSpace, nu, e.t(1, mu_, v), mu_form).with_mu(mu),
    ]
}

/// Every identity at every `nu <= n`, with `lambda <= n` and `mu <= max_mu`.
pub fn all_checks(pair: &DualPair, max_mu: usize) -> Vec<MomentCheck> {
    let n = pair.n();
    let mut out = Vec::new();
    for nu in 0..=n {
        out.push(binomial_moment_x(pair, nu));
        out.push(binomial_moment_x_simplified(pair, nu));
        out.push(binomial_moment_y(pair, nu));
        out.extend(binomial_moment_y_corollaries(pair, nu));
        out.push(pless_x(pair, nu));
        out.extend(pless_x_simplified(pair, nu));
        out.push(pless_y(pair, nu));
        out.push(pless_y_simplified(pair, nu));
        out.extend(t_closed_forms(pair, nu));
        for lambda in 0..=n {
            out.push(t_reductions(pair, lambda, 0, nu)[0].clone());
        }
        for mu in 0..=max_mu {
            out.push(t_reductions(pair, 0, mu, nu)[1].clone());
        }
        for lambda in 0..=nu {
            for mu in 0..=nu.min(max_mu) {
                let [l, m] = t_space_forms(pair, lambda, mu, nu);
                if mu == 0 {
                    out.push(l);
                }
                if lambda == 0 {
                    out.push(m);
                }
            }
        }
    }
    out
}

/// `S(nu, n, m) = sum_{j<=nu} [nu j] alpha(n, j) q^{-mj}`.
pub fn s_sum(base: QBase, nu: i64, n: i64, m: i64) -> ExactRational {
    let q = RationalBase::from_q(base);
    sum((0..=nu).map(|j| q.gaussian(nu, j) * q.alpha(n, j) * q.pow(-m * j)))
}

/// `delta(m, nu, j) = sum_{i<=j} [j i] (-1)^i q^{sigma_i} alpha(m-i, nu)`.
pub fn delta_sum(base: QBase, m: i64, nu: i64, j: i64) -> ExactRational {
    let q = RationalBase::from_q(base);
    sum((0..=j).map(|i| alt(i, q.gaussian(j, i) * q.pow(sigma(i)) * q.alpha(m - i, nu))))
}

/// `alpha(nu, j) alpha(m-j, nu-j) q^{j(m-j)}`.
pub fn delta_closed(base: QBase, m: i64, nu: i64, j: i64) -> ExactRational {
    let q = RationalBase::from_q(base);
    q.alpha(nu, j) * q.alpha(m - j, nu - j) * q.pow(j * (m - j))
}

/// `theta(n, nu, j) = sum_{l<=j} [j l] [n-j nu-l] q^{l(n-nu)} (-1)^l q^{sigma_l} alpha(nu-l, j-l)`.
pub fn theta_sum(base: QBase, n: i64, nu: i64, j: i64) -> ExactRational {
    let q = RationalBase::from_q(base);
    sum((0..=j).map(|l| {
        alt(
            l,
            q.gaussian(j, l) * q.gaussian(n - j, nu - l) * q.pow(l * (n - nu) + sigma(l)) * q.alpha(nu - l, j - l),
        )
    }))
}

/// `(-1)^j q^{sigma_j} [n-j n-nu]`.
pub fn theta_closed(base: QBase, n: i64, nu: i64, j: i64) -> ExactRational {
    let q = RationalBase::from_q(base);
    alt(j, q.pow(sigma(j)) * q.gaussian(n - j, n - nu))
}

/// `sum_{j<=nu-l} [nu-l j] (-1)^j q^{sigma_j}`, which is `1` if `nu = l` and `0` otherwise.
pub fn orthogonality_sum(base: QBase, nu: i64, l: i64) -> ExactRational {
    let q = RationalBase::from_q(base);
    sum((0..=nu - l).map(|j| alt(j, q.gaussian(nu - l, j) * q.pow(sigma(j)))))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::exactnum::{rat, ExactInt};
    use crate::gfcodes::{FieldSpec, GaloisField, DEFAULT_CAP};

    fn gf(q: u32, m: usize) -> Arc<GaloisField> {
        Arc::new(GaloisField::new(FieldSpec::default_for(q, m).unwrap()))
    }

    fn frac(a: i64, b: i64) -> ExactRational {
        ExactRational::new(a.into(), b.into())
    }

    fn whole() -> DualPair {
        DualPair::from_code(&LinearCode::whole_space(gf(2, 2), 2), DEFAULT_CAP).unwrap()
    }

    fn rep() -> DualPair {
        DualPair::from_code(&LinearCode::repetition(gf(2, 2), 2), DEFAULT_CAP).unwrap()
    }

    fn gab() -> DualPair {
        DualPair::from_code(&LinearCode::gabidulin_standard(gf(2, 2), 2, 1).unwrap(), DEFAULT_CAP).unwrap()
    }

    fn sides(c: &MomentCheck) -> (ExactRational, ExactRational) {
        (c.lhs.clone().unwrap(), c.rhs.clone().unwrap())
    }

    #[test]
    fn binomial_x_examples() {
        let c = binomial_moment_x(&whole(), 1);
        assert_eq!(sides(&c), (rat(12), rat(12)));
        let c = binomial_moment_x(&rep(), 1);
        assert_eq!(sides(&c), (rat(6), rat(6)));
        let c = binomial_moment_x(&rep(), 0);
        assert_eq!(sides(&c), (rat(4), rat(4)));
        assert!(binomial_moment_x_simplified(&whole(), 1).holds());
        let c = binomial_moment_x_simplified(&gab(), 1);
        assert_eq!(sides(&c), (rat(3), rat(3)));
        assert!(binomial_moment_x_simplified(&gab(), 2).is_skipped());
    }

    #[test]
    fn binomial_y_examples() {
        assert_eq!(sides(&binomial_moment_y(&whole(), 1)), (rat(36), rat(36)));
        assert_eq!(sides(&binomial_moment_y(&rep(), 1)), (rat(6), rat(6)));
        assert_eq!(sides(&binomial_moment_y_low(&whole(), 1)), (rat(36), rat(36)));
        let high = binomial_moment_y_high(&rep(), 2);
        assert_eq!(sides(&high), (rat(0), rat(0)));
        assert!(binomial_moment_y_high(&rep(), 1).is_skipped());
        let zero = DualPair::from_code(&LinearCode::zero(gf(2, 2), 2), DEFAULT_CAP).unwrap();
        assert!(binomial_moment_y_high(&zero, 2).is_skipped());
        assert!(binomial_moment_y_high(&whole(), 1).holds());
        assert!(binomial_moment_y_high(&whole(), 2).holds());
    }

    #[test]
    fn pless_examples() {
        let c = pless_x(&whole(), 1);
        assert_eq!(sides(&c), (frac(3, 4), frac(3, 4)));
        assert_eq!(sides(&pless_x(&rep(), 0)), (rat(1), rat(1)));
        assert!(pless_x_simplified(&whole(), 1).iter().all(MomentCheck::holds));
        assert_eq!(sides(&pless_y(&whole(), 0)), (rat(1), rat(1)));
        assert!(pless_y(&rep(), 1).holds());
        assert!(pless_y_simplified(&whole(), 1).holds());
    }

    #[test]
    fn t_moment_examples() {
        assert_eq!(t_moment(&whole(), 0, 0, 0), rat(1));
        assert_eq!(t_moment(&rep(), 0, 0, 0), rat(1));
        assert_eq!(t_moment(&whole(), 0, 0, 1), frac(7, 4));
        assert_eq!(t_moment(&rep(), 0, 0, 1), frac(5, 2));
        assert!(t_reductions(&whole(), 1, 0, 1).iter().all(MomentCheck::holds));
        assert!(t_reductions(&rep(), 0, 2, 2).iter().all(MomentCheck::holds));
        let forms = t_closed_forms(&whole(), 1);
        for f in &forms {
            assert_eq!(sides(f), (frac(7, 4), frac(7, 4)));
        }
        assert!(t_closed_forms(&whole(), 0).iter().all(MomentCheck::holds));
        assert!(t_closed_forms(&rep(), 2).iter().all(MomentCheck::is_skipped));
    }

    #[test]
    fn all_checks_on_small_pairs() {
        for pair in [whole(), rep(), gab()] {
            let checks = all_checks(&pair, 3);
            assert!(checks.iter().all(|c| !c.failed()), "{:?}", checks.iter().find(|c| c.failed()));
            assert!(checks.iter().any(MomentCheck::holds));
        }
    }

    #[test]
    fn a_false_pair_fails() {
        let b = QBase::new(2).unwrap();
        let a = RankDistribution::new([1, 3, 0].map(ExactInt::from).to_vec());
        let wrong = RankDistribution::new([1, 9, 6].map(ExactInt::from).to_vec());
        let pair = DualPair::new(b, 2, 1, a, wrong).unwrap();
        assert!(binomial_moment_x(&pair, 1).failed());
    }

    #[test]
    fn helper_sums() {
        let b = QBase::new(2).unwrap();
        assert_eq!(delta_sum(b, 3, 2, 1), rat(36));
        assert_eq!(delta_closed(b, 3, 2, 1), rat(36));
        assert_eq!(delta_sum(b, 4, 3, 0), to_rat(&b.alpha(4, 3)));
        assert_eq!(theta_sum(b, 4, 2, 0), to_rat(&b.gaussian(4, 2)));
        assert_eq!(orthogonality_sum(b, 3, 3), rat(1));
        assert_eq!(orthogonality_sum(b, 3, 1), rat(0));
    }

    #[test]
    fn serialized_check_is_flat() {
        let s = serde_json::to_string(&binomial_moment_x(&whole(), 1)).unwrap();
        assert_eq!(s, r#"{"identity":"binomial_x","nu":1,"lhs":"12","rhs":"12","status":"held"}"#);
        let s = serde_json::to_string(&t_closed_forms(&rep(), 2)[0]).unwrap();
        assert!(s.contains(r#""status":"skipped","reason":"#));
    }
}
