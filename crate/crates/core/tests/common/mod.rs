//! Law checkers shared by the property tests and the acceptance run. Each
//! returns `Err` with a description when the two sides differ.

#![allow(dead_code)]

use num_traits::One;
use rand::Rng;
use rankmac::exactnum::{sigma, ExactRational, MParamPoly, QBase};
use rankmac::qpoly::HomogPoly;

pub type Law = Result<(), String>;

fn rat(v: i64) -> ExactRational {
    ExactRational::from_integer(v.into())
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Law {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Builds an `m`-dependent coefficient from `(exponent of Q, value)` pairs.
pub fn mparam(q: u32, terms: &[(i32, i64)]) -> MParamPoly {
    terms.iter().fold(MParamPoly::zero(q), |acc, &(e, c)| &acc + &MParamPoly::monomial(q, e, rat(c)))
}

pub fn poly(q: u32, coeffs: &[Vec<(i32, i64)>]) -> HomogPoly {
    HomogPoly::new(q, coeffs.iter().map(|t| mparam(q, t)).collect()).unwrap()
}

/// Random polynomial of the given degree with coefficients in `Q^{-1}..Q^2`.
pub fn random_poly<R: Rng>(rng: &mut R, q: u32, degree: usize) -> HomogPoly {
    let coeffs: Vec<Vec<(i32, i64)>> = (0..=degree)
        .map(|_| (0..rng.gen_range(0..3)).map(|_| (rng.gen_range(-1..=2), rng.gen_range(-4..=4))).collect())
        .collect();
    poly(q, &coeffs)
}

fn with_coeff(f: &HomogPoly, u: usize, c: MParamPoly) -> HomogPoly {
    let mut cs = f.coeffs().to_vec();
    cs[u] = c;
    HomogPoly::new(f.base(), cs).unwrap()
}

fn sum_terms(q: u32, degree: usize, terms: impl IntoIterator<Item = HomogPoly>) -> HomogPoly {
    terms.into_iter().fold(HomogPoly::zero(q, degree), |acc, t| acc.add(&t).unwrap())
}

fn base_of(f: &HomogPoly) -> QBase {
    QBase::new(f.base()).unwrap()
}

/// `[f*g]^{(nu)} = sum_l [nu l] q^{(nu-l)(r-l)} f^{(l)} * g^{(nu-l)}`.
pub fn leibniz_x(f: &HomogPoly, g: &HomogPoly, nu: usize) -> Law {
    let (r, s) = (f.degree(), g.degree());
    let base = base_of(f);
    let lhs = f.q_product(g).unwrap().q_derivative(nu);
    if nu > r + s {
        return ensure(lhs.is_zero(), || format!("derivative {nu} past degree {} is nonzero", r + s));
    }
    let terms = (nu.saturating_sub(s)..=nu.min(r)).map(|l| {
        let c = ExactRational::from_integer(base.gaussian(nu as i64, l as i64))
            * base.pow_rat(((nu - l) * (r - l)) as i64);
        f.q_derivative(l).q_product(&g.q_derivative(nu - l)).unwrap().scale_rat(&c)
    });
    let rhs = sum_terms(f.base(), r + s - nu, terms);
    ensure(lhs == rhs, || format!("x-Leibniz nu={nu}: {f} and {g}"))
}

/// `[f*g]^{{nu}} = sum_l [nu l] q^{l(s-nu+l)} f^{{l}} * g^{{nu-l}}(m-l)`.
pub fn leibniz_y(f: &HomogPoly, g: &HomogPoly, nu: usize) -> Law {
    let (r, s) = (f.degree(), g.degree());
    let base = base_of(f);
    let lhs = f.q_product(g).unwrap().q_inv_derivative(nu);
    if nu > r + s {
        return ensure(lhs.is_zero(), || format!("derivative {nu} past degree {} is nonzero", r + s));
    }
    let terms = (nu.saturating_sub(s)..=nu.min(r)).map(|l| {
        let (li, ni) = (l as i64, nu as i64);
        let c = ExactRational::from_integer(base.gaussian(ni, li)) * base.pow_rat(li * (s as i64 - ni + li));
        let right = g.q_inv_derivative(nu - l).shift_m(li);
        f.q_inv_derivative(l).q_product(&right).unwrap().scale_rat(&c)
    });
    let rhs = sum_terms(f.base(), r + s - nu, terms);
    ensure(lhs == rhs, || format!("y-Leibniz nu={nu}: {f} and {g}"))
}

/// With the top `y` coefficient of `u` cleared: `(u*v)/x = (u/x)*v`.
pub fn division_ux(u: &HomogPoly, v: &HomogPoly) -> Law {
    if u.degree() == 0 {
        return Ok(());
    }
    let u = with_coeff(u, u.degree(), MParamPoly::zero(u.base()));
    let lhs = u.q_product(v).unwrap().div_x().ok_or("u*v not divisible by x")?;
    let rhs = u.div_x().unwrap().q_product(v).unwrap();
    ensure(lhs == rhs, || format!("(ux) for {u} and {v}"))
}

/// With the top `y` coefficient of `v` cleared: `(u*v)/x = u(x,qy)*(v/x)`.
pub fn division_vx(u: &HomogPoly, v: &HomogPoly) -> Law {
    if v.degree() == 0 {
        return Ok(());
    }
    let v = with_coeff(v, v.degree(), MParamPoly::zero(v.base()));
    let lhs = u.q_product(&v).unwrap().div_x().ok_or("u*v not divisible by x")?;
    let rhs = u.scale_y(&rat(u.base() as i64)).q_product(&v.div_x().unwrap()).unwrap();
    ensure(lhs == rhs, || format!("(vx) for {u} and {v}"))
}

/// With `u_0` cleared: `(u*v)/y = q^s (u/y)*v(m-1)`.
pub fn division_uy(u: &HomogPoly, v: &HomogPoly) -> Law {
    if u.degree() == 0 {
        return Ok(());
    }
    let u = with_coeff(u, 0, MParamPoly::zero(u.base()));
    let lhs = u.q_product(v).unwrap().div_y().ok_or("u*v not divisible by y")?;
    let rhs = u
        .div_y()
        .unwrap()
        .q_product(&v.shift_m(1))
        .unwrap()
        .scale_rat(&base_of(v).pow_rat(v.degree() as i64));
    ensure(lhs == rhs, || format!("(uy) for {u} and {v}"))
}

/// With `v_0` cleared: `(u*v)/y = u(x,qy)*(v/y)`.
pub fn division_vy(u: &HomogPoly, v: &HomogPoly) -> Law {
    if v.degree() == 0 {
        return Ok(());
    }
    let v = with_coeff(v, 0, MParamPoly::zero(v.base()));
    let lhs = u.q_product(&v).unwrap().div_y().ok_or("u*v not divisible by y")?;
    let rhs = u.scale_y(&rat(u.base() as i64)).q_product(&v.div_y().unwrap()).unwrap();
    ensure(lhs == rhs, || format!("(vy) for {u} and {v}"))
}

/// `(a+c)*b = a*b + c*b` and `b*(a+c) = b*a + b*c` for `deg a = deg c`.
pub fn distributivity(a: &HomogPoly, c: &HomogPoly, b: &HomogPoly) -> Law {
    let ac = a.add(c).unwrap();
    let left = ac.q_product(b).unwrap() == a.q_product(b).unwrap().add(&c.q_product(b).unwrap()).unwrap();
    let right = b.q_product(&ac).unwrap() == b.q_product(a).unwrap().add(&b.q_product(c).unwrap()).unwrap();
    ensure(left && right, || format!("distributivity for {a}, {c}, {b}"))
}

/// A constant independent of `m` commutes with everything.
pub fn constant_commutes(c: i64, b: &HomogPoly) -> Law {
    let k = HomogPoly::constant(MParamPoly::from_int(b.base(), c));
    let scaled = b.scale_rat(&rat(c));
    ensure(k.q_product(b).unwrap() == scaled && b.q_product(&k).unwrap() == scaled, || {
        format!("constant {c} against {b}")
    })
}

/// `(b * a_s)(1,1;m) = Q^s b(1,1;m)`.
pub fn product_at_one(b: &HomogPoly, s: usize) -> Law {
    let base = base_of(b);
    let lhs = b.q_product(&HomogPoly::a_poly(base, s)).unwrap().sum_coeffs();
    let rhs = &MParamPoly::monomial(b.base(), s as i32, ExactRational::one()) * &b.sum_coeffs();
    ensure(lhs == rhs, || format!("(b*a_{s})(1,1) for {b}"))
}

/// The derivative closed forms of `a_l` and `b_l`.
pub fn special_derivatives(base: QBase, l: usize, nu: usize) -> Law {
    if nu > l {
        return Ok(());
    }
    let q = base.q();
    let beta = ExactRational::from_integer(base.beta(l as i64, nu as i64));
    let a = HomogPoly::a_poly(base, l);
    let b = HomogPoly::b_poly(base, l);
    ensure(a.q_derivative(nu) == HomogPoly::a_poly(base, l - nu).scale_rat(&beta), || {
        format!("a_{l} q-derivative {nu}")
    })?;
    ensure(b.q_derivative(nu) == HomogPoly::b_poly(base, l - nu).scale_rat(&beta), || {
        format!("b_{l} q-derivative {nu}")
    })?;
    let alpha = MParamPoly::alpha(base, nu as i64).scale(&(&beta * base.pow_rat(-sigma(nu as i64))));
    let expect_a = HomogPoly::a_poly(base, l - nu).shift_m(nu as i64).scale(&alpha);
    ensure(a.q_inv_derivative(nu) == expect_a, || format!("a_{l} q^-1-derivative {nu} over q={q}"))?;
    let sign = if nu % 2 == 1 { -beta } else { beta };
    ensure(b.q_inv_derivative(nu) == HomogPoly::b_poly(base, l - nu).scale_rat(&sign), || {
        format!("b_{l} q^-1-derivative {nu} over q={q}")
    })
}

/// `x^{[l]} = x^l`, `y^{[l]} = q^{sigma_l} y^l`, `a_1^{[l]} = a_l`, `b_1^{[l]} = b_l`.
pub fn special_powers(base: QBase, l: usize) -> Law {
    let q = base.q();
    let x = HomogPoly::x(q).q_power(l);
    let mut xs = vec![MParamPoly::zero(q); l + 1];
    xs[0] = MParamPoly::one(q);
    ensure(x == HomogPoly::new(q, xs.clone()).unwrap(), || format!("x^[{l}]"))?;
    xs.reverse();
    let y = HomogPoly::new(q, xs).unwrap().scale_rat(&base.pow_rat(sigma(l as i64)));
    ensure(HomogPoly::y(q).q_power(l) == y, || format!("y^[{l}]"))?;
    ensure(HomogPoly::a_poly(base, 1).q_power(l) == HomogPoly::a_poly(base, l), || format!("a_1^[{l}]"))?;
    ensure(HomogPoly::b_poly(base, 1).q_power(l) == HomogPoly::b_poly(base, l), || format!("b_1^[{l}]"))
}

/// Every law on one seeded draw: degrees up to 5 and `nu` up to 4.
pub fn random_trial<R: Rng>(rng: &mut R) -> Vec<String> {
    let q = if rng.gen_bool(0.5) { 2 } else { 3 };
    let (r, s) = (rng.gen_range(0..=5), rng.gen_range(0..=5));
    let f = random_poly(rng, q, r);
    let g = random_poly(rng, q, s);
    let h = random_poly(rng, q, r);
    let nu = rng.gen_range(0..=4);
    let c = rng.gen_range(-5..=5);
    let laws = [
        leibniz_x(&f, &g, nu),
        leibniz_y(&f, &g, nu),
        division_ux(&f, &g),
        division_vx(&f, &g),
        division_uy(&f, &g),
        division_vy(&f, &g),
        distributivity(&f, &h, &g),
        constant_commutes(c, &f),
        product_at_one(&f, s),
    ];
    laws.into_iter().filter_map(|l| l.err()).collect()
}

/// The closed forms on the full grid `q in {2,3}`, `l <= 6`, `nu <= l`.
pub fn closed_form_grid() -> Vec<String> {
    let mut out = Vec::new();
    for q in [2, 3] {
        let base = QBase::new(q).unwrap();
        for l in 0..=6 {
            out.extend(special_powers(base, l).err());
            for nu in 0..=l {
                out.extend(special_derivatives(base, l, nu).err());
            }
        }
    }
    out
}
