use bhl::bosonization::{
    biproduct_decompose_check, check_bosonization_data, check_smash_compat, cross_product, r_coaction,
    regular_smash_module, smash_tensor, BraidedHopfInModules,
};
use bhl::error::Error;
use bhl::examples::{group_algebra, hmnd_r, FamilyParams};
use bhl::hopf::{check_hopf, Hopf, Side};
use bhl::multilinear::LinMap;
use bhl::scalars::Cyc;
use bhl::yd::is_yd;

fn line() -> BraidedHopfInModules {
    BraidedHopfInModules::line(&FamilyParams::new(1, &[1], None)).unwrap()
}

fn e(dim: usize, k: usize) -> Vec<Cyc> {
    (0..dim).map(|i| if i == k { Cyc::one() } else { Cyc::zero() }).collect()
}

fn mul(h: &Hopf, x: &[Cyc], y: &[Cyc]) -> Vec<Cyc> {
    let xy: Vec<Cyc> = x.iter().flat_map(|u| y.iter().map(move |w| u * w)).collect();
    h.mult.reshape(&[h.dim * h.dim], &[h.dim]).apply(&xy).unwrap()
}

fn outer(x: &[Cyc], y: &[Cyc]) -> Vec<Cyc> {
    x.iter().flat_map(|u| y.iter().map(move |w| u * w)).collect()
}

fn add(x: &[Cyc], y: &[Cyc]) -> Vec<Cyc> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn neg(x: &[Cyc]) -> Vec<Cyc> {
    x.iter().map(|a| -a).collect()
}

#[test]
fn r_coactions_of_the_line() {
    // basis of B: 1, x; of A = kZ2: 1, g
    let bh = line();
    let rho = r_coaction(&bh, Side::Right).unwrap();
    let want = LinMap::from_fn(&[2], &[2, 2], |c, d| match (d, c) {
        (0, 0) | (1, 3) => Cyc::one(),
        _ => Cyc::zero(),
    });
    assert_eq!(rho.coaction, want);
    assert!(is_yd(&rho));
    let lambda = r_coaction(&bh, Side::Left).unwrap();
    let want = LinMap::from_fn(&[2], &[2, 2], |c, d| match (d, c) {
        (0, 0) | (1, 3) => Cyc::one(),
        _ => Cyc::zero(),
    });
    assert_eq!(lambda.coaction, want);
    assert!(check_bosonization_data(&bh, Side::Left).unwrap().all_pass());
    assert!(check_bosonization_data(&bh, Side::Right).unwrap().all_pass());
}

#[test]
fn bosonizing_the_trivial_algebra_gives_back_a() {
    let p = FamilyParams::new(1, &[], Some(1));
    let a = group_algebra(2).unwrap();
    let bh = BraidedHopfInModules::trivial(&a, &hmnd_r(&p).unwrap()).unwrap();
    for side in [Side::Left, Side::Right] {
        assert!(cross_product(&bh, side).unwrap().structure_eq(&a));
    }
}

#[test]
fn cross_product_of_the_line_is_sweedler() {
    let bh = line();
    for side in [Side::Left, Side::Right] {
        let cp = cross_product(&bh, side).unwrap();
        assert_eq!(cp.dim, 4);
        assert!(check_hopf(&cp).all_pass());
        assert!(!cp.is_commutative() && !cp.is_cocommutative());
    }
    // B⋊A on the basis b⊗a, index 2b+a: G = 1⊗g, X = x⊗g
    let cp = cross_product(&bh, Side::Left).unwrap();
    let (one, g, x) = (e(4, 0), e(4, 1), e(4, 3));
    assert_eq!(mul(&cp, &g, &g), one);
    assert_eq!(mul(&cp, &x, &x), vec![Cyc::zero(); 4]);
    assert_eq!(mul(&cp, &x, &g), neg(&mul(&cp, &g, &x)));
    let dx = cp.comult.apply(&x).unwrap();
    assert_eq!(dx, add(&outer(&one, &x), &outer(&x, &g)));
    assert_eq!(cp.antipode.apply(&x).unwrap(), neg(&mul(&cp, &x, &g)));
    assert!(biproduct_decompose_check(&FamilyParams::new(1, &[1], Some(1))).unwrap().all_pass());
}

#[test]
fn smash_modules() {
    let bh = line();
    for side in [Side::Left, Side::Right] {
        let m = regular_smash_module(&bh, side).unwrap();
        assert!(check_smash_compat(&m, &bh).unwrap().all_pass());
        let mm = smash_tensor(&bh, &m, &m).unwrap();
        assert!(check_smash_compat(&mm, &bh).unwrap().all_pass());
        let mut bad = m.clone();
        let v = &bad.act_b.get(0, 0).clone() + &Cyc::one();
        bad.act_b.set(0, 0, v);
        assert!(check_smash_compat(&bad, &bh).unwrap().any_fail());
    }
}

#[test]
fn even_weights_are_refused() {
    assert!(matches!(biproduct_decompose_check(&FamilyParams::new(1, &[2], None)), Err(Error::BadFamilyParams(_))));
    assert!(matches!(BraidedHopfInModules::line(&FamilyParams::new(1, &[2], None)), Err(Error::BadFamilyParams(_))));
}
