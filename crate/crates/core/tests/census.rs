use std::sync::Arc;

use rankmac::exactnum::{ExactInt, QBase};
use rankmac::gfcodes::{
    brute_distribution, rank_weight, CodeFile, CodeVector, ExtElement, FieldSpec, GaloisField, LinearCode,
    RankDistribution, DEFAULT_CAP,
};
use rankmac::macwilliams::macwilliams_functional;

fn field(q: u32, m: usize) -> Arc<GaloisField> {
    Arc::new(GaloisField::new(FieldSpec::default_for(q, m).unwrap()))
}

/// Rank of every vector by plain enumeration of all `(q^m)^n` tuples.
fn naive_space_census(f: &GaloisField, n: usize) -> Vec<u64> {
    let order = f.order() as u64;
    let mut counts = vec![0u64; n + 1];
    for idx in 0..order.pow(n as u32) {
        let mut j = idx;
        let v: Vec<ExtElement> = (0..n)
            .map(|_| {
                let e = ExtElement((j % order) as u32);
                j /= order;
                e
            })
            .collect();
        counts[rank_weight(&CodeVector(v), f)] += 1;
    }
    counts
}

#[test]
fn space_census_matches_gaussian_count() {
    for (q, m, n) in [(2, 1, 3), (2, 2, 2), (2, 3, 2), (2, 2, 3), (3, 2, 2), (3, 1, 3), (2, 4, 2)] {
        let f = field(q, m);
        let base = QBase::new(q).unwrap();
        let counts = naive_space_census(&f, n);
        for (u, &c) in counts.iter().enumerate() {
            let expect = base.gaussian(n as i64, u as i64) * base.alpha(m as i64, u as i64);
            assert_eq!(ExactInt::from(c), expect, "q={q} m={m} n={n} u={u}");
        }
        let whole = brute_distribution(&LinearCode::whole_space(f, n), DEFAULT_CAP).unwrap();
        assert_eq!(whole, RankDistribution::from_u64(&counts));
    }
}

#[test]
fn brute_census_matches_message_enumeration() {
    let f = field(3, 2);
    let code = LinearCode::gabidulin_standard(Arc::clone(&f), 2, 1).unwrap();
    let order = f.order() as u32;
    let mut counts = vec![0u64; 3];
    for c in 0..order {
        let w = code.generator()[0].scaled(ExtElement(c), &f);
        counts[rank_weight(&w, &f)] += 1;
    }
    assert_eq!(brute_distribution(&code, DEFAULT_CAP).unwrap(), RankDistribution::from_u64(&counts));
    assert_eq!(counts, vec![1, 0, 8]);
}

#[test]
fn dual_census_agrees_with_transform_on_file_codes() {
    let text = r#"{"q": 2, "m": 3, "n": 3, "generator": [[1, 2, 4], [1, 4, 6]]}"#;
    let code = CodeFile::parse(text).unwrap().to_code().unwrap();
    let base = QBase::new(2).unwrap();
    let a = brute_distribution(&code, DEFAULT_CAP).unwrap();
    let b = brute_distribution(&code.dual(), DEFAULT_CAP).unwrap();
    assert_eq!(macwilliams_functional(base, 3, &a, code.k()).unwrap(), b);
    assert_eq!(a.total(), ExactInt::from(64));
}

#[test]
fn explicit_modulus_gives_isomorphic_census() {
    // x^3 + x^2 + 1 instead of the default modulus.
    let text = r#"{"q": 2, "m": 3, "modulus": [1, 0, 1, 1], "n": 2, "generator": [[[1, 0, 0], [0, 1, 0]]]}"#;
    let code = CodeFile::parse(text).unwrap().to_code().unwrap();
    assert_eq!(brute_distribution(&code, DEFAULT_CAP).unwrap(), RankDistribution::from_u64(&[1, 0, 7]));
}
