use bhl::double::{
    bicrossproduct, check_double, check_equivalence_lemmas, check_matched_pair, drinfeld_double, Lemma, MatchedPair,
};
use bhl::examples::{group_algebra, sweedler};
use bhl::hopf::check_hopf;
use bhl::multilinear::LinMap;
use bhl::report::Report;
use bhl::scalars::Cyc;

fn notes<'a>(r: &'a Report, prefix: &'a str) -> impl Iterator<Item = bool> + 'a {
    r.checks
        .iter()
        .filter(move |c| c.check.starts_with(prefix) && !c.check.ends_with("agree"))
        .map(|c| c.witness.as_deref() == Some("value=true"))
}

#[test]
fn trivial_matched_pair_gives_the_tensor_product() {
    let (k2, k3) = (group_algebra(2).unwrap(), group_algebra(3).unwrap());
    let mp = MatchedPair::trivial(&k2, &k3);
    assert!(check_matched_pair(&mp).all_pass());
    let p = bicrossproduct(&mp).unwrap();
    assert_eq!(p.dim, 6);
    assert!(check_hopf(&p).all_pass());
    assert!(p.is_commutative() && p.is_cocommutative());
}

#[test]
fn doubles_have_square_dimension_and_pass() {
    for h in [group_algebra(2).unwrap(), group_algebra(3).unwrap(), sweedler()] {
        let d = drinfeld_double(&h).unwrap();
        assert_eq!(d.hopf.dim, h.dim * h.dim);
        assert_eq!(d.factor_dims, (h.dim, h.dim));
        let r = check_double(&d);
        assert!(r.all_pass(), "{}: {:?}", h.name, r.first_failure());
    }
    let d2 = drinfeld_double(&group_algebra(2).unwrap()).unwrap();
    assert!(d2.hopf.is_commutative() && d2.hopf.is_cocommutative());
    assert!(!drinfeld_double(&sweedler()).unwrap().hopf.is_commutative());
}

#[test]
fn corrupted_double_action_is_not_a_matched_pair() {
    let d = drinfeld_double(&sweedler()).unwrap();
    let mut mp = d.pair.clone();
    let v = &mp.act_bh.get(0, 0).clone() + &Cyc::one();
    mp.act_bh.set(0, 0, v);
    assert!(check_matched_pair(&mp).any_fail());
}

#[test]
fn r_matrix_of_the_double() {
    let d = drinfeld_double(&group_algebra(2).unwrap()).unwrap();
    // Σ_i (1⊗e_i) ⊗ (e^i⊗1) with 1 = δ₀+δ₁ in B, on the basis index 2b+h
    let mut want = LinMap::zeros(&[], &[4, 4]);
    for i in 0..2 {
        for b in 0..2 {
            want.set((b * 2 + i) * 4 + i * 2, 0, Cyc::one());
        }
    }
    assert_eq!(d.r_matrix.reshape(&[], &[4, 4]), want);
    for h in [group_algebra(2).unwrap(), sweedler()] {
        let d = drinfeld_double(&h).unwrap();
        let n = d.hopf.dim;
        let eps_id = d.hopf.counit.tensor(&LinMap::identity(&[n]));
        let got = LinMap::compose(&eps_id, &d.r_matrix.reshape(&[], &[n, n])).unwrap();
        assert_eq!(got.reshape(&[], &[n]), d.hopf.unit, "{}", h.name);
    }
}

#[test]
fn equivalence_lemmas() {
    let z = check_equivalence_lemmas(&group_algebra(3).unwrap(), Lemma::Zhang, None).unwrap();
    let vals: Vec<bool> = notes(&z, "zhang.").collect();
    assert_eq!(vals.len(), 7);
    assert!(vals.iter().all(|v| *v));
    let c = check_equivalence_lemmas(&group_algebra(2).unwrap(), Lemma::Commutativity, None).unwrap();
    assert!(notes(&c, "commutativity.").all(|v| v));
    let c = check_equivalence_lemmas(&sweedler(), Lemma::Commutativity, None).unwrap();
    let vals: Vec<bool> = notes(&c, "commutativity.").collect();
    assert!(!vals.is_empty() && vals.iter().all(|v| !v), "{vals:?}");
    assert!(c.passed("commutativity.agree"));
}
