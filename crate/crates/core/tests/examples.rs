use bhl::context::check_quasitriangular;
use bhl::error::Error;
use bhl::examples::{
    braided_line, group_algebra, hmnd, hmnd_r, quantum_line, sweedler, transparency_demo, FamilyParams,
};
use bhl::hopf::check_hopf;
use bhl::multilinear::LinMap;
use bhl::scalars::Cyc;

fn col(f: &LinMap, d: usize) -> Vec<Cyc> {
    (0..f.cod_size()).map(|c| f.get(c, d).clone()).collect()
}

#[test]
fn group_algebras() {
    let k1 = group_algebra(1).unwrap();
    assert_eq!(k1.dim, 1);
    assert!(check_hopf(&k1).all_pass());
    let k2 = group_algebra(2).unwrap();
    assert_eq!(k2.antipode, LinMap::identity(&[2]));
    assert!(check_hopf(&group_algebra(4).unwrap()).all_pass());
    assert!(group_algebra(0).is_err());
}

#[test]
fn family_dimensions_and_relations() {
    let h = hmnd(&FamilyParams::new(2, &[1], None)).unwrap();
    assert_eq!(h.dim, 8);
    // g = index 2, x = index 1; gx = i·xg
    let n = h.dim;
    let gx = col(&h.mult, 2 * n + 1);
    let xg: Vec<Cyc> = col(&h.mult, n + 2).iter().map(|v| v * &Cyc::root_of_unity(4, 1).unwrap()).collect();
    assert_eq!(gx, xg);
    let h = hmnd(&FamilyParams::new(3, &[1, 1], None)).unwrap();
    assert_eq!(h.dim, 24);
    assert!(check_hopf(&h).all_pass());
    // x₁ is the top bit (index 2), x₂ index 1
    let n = h.dim;
    let x1x2 = col(&h.mult, 2 * n + 1);
    let x2x1: Vec<Cyc> = col(&h.mult, n + 2).iter().map(|v| -v).collect();
    assert_eq!(x1x2, x2x1);
    assert!(x1x2.iter().any(|v| !v.is_zero()));
    assert!(hmnd(&FamilyParams::new(1, &[1], None)).unwrap().structure_eq(&sweedler()));
}

#[test]
fn r_matrices_of_the_family() {
    let r = hmnd_r(&FamilyParams::new(1, &[1], Some(1))).unwrap();
    let half = Cyc::from_ratio(1, 2);
    // ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) with 1 = index 0, g = index 2
    let mut want = LinMap::zeros(&[], &[4, 4]);
    want.set(0, 0, half.clone());
    want.set(2, 0, half.clone());
    want.set(8, 0, half.clone());
    want.set(10, 0, -&half);
    assert_eq!(r.reshape(&[], &[4, 4]), want);
    let p = FamilyParams::new(2, &[1], Some(2));
    let qt = check_quasitriangular(&hmnd(&p).unwrap(), &hmnd_r(&p).unwrap()).unwrap();
    assert!(qt.all_pass() && qt.note_value("triangular"));
    assert!(matches!(hmnd_r(&FamilyParams::new(2, &[1], Some(1))), Err(Error::BadS(_))));
}

#[test]
fn the_braided_line() {
    let bl = braided_line(&FamilyParams::new(1, &[1], None)).unwrap();
    assert_eq!(bl.base.dim, 2);
    assert_eq!(bl.line.dim, 2);
    // Δ(x) = 1⊗x + x⊗1
    assert_eq!(col(&bl.line.comult, 1), vec![Cyc::zero(), Cyc::one(), Cyc::one(), Cyc::zero()]);
    assert!(bl.line.is_commutative() && bl.line.is_cocommutative());
    let bl = braided_line(&FamilyParams::new(2, &[1, 1], None)).unwrap();
    assert!(check_hopf(&bl.line).all_pass());
}

#[test]
fn transparency_demonstrations() {
    for p in [FamilyParams::new(1, &[1], Some(1)), FamilyParams::new(2, &[1], Some(2))] {
        let r = transparency_demo(&p, None, 2).unwrap();
        assert!(r.all_pass(), "{p:?}: {:?}", r.first_failure());
    }
}

#[test]
fn the_quantum_line_has_the_order_of_its_self_braiding() {
    let q = quantum_line(2, 1).unwrap();
    assert_eq!(q.dim, 4);
    assert!(check_hopf(&q).all_pass());
}
