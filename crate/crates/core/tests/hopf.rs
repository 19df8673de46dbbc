use bhl::context::Ctx;
use bhl::examples::{group_algebra, hmnd, sweedler, FamilyParams};
use bhl::hopf::{check_bialgebra, check_hopf, dual_hopf, op_cop, switch_structure, Hopf, OpCop, Parts, Structure};
use bhl::multilinear::LinMap;
use bhl::scalars::Cyc;

/// Sweedler's algebra written out by hand on the basis g^a x^e, index 2a+e.
fn sweedler_by_hand() -> Hopf {
    let idx = |a: usize, e: usize| 2 * (a % 2) + e;
    let sign = |k: usize| if k.is_multiple_of(2) { Cyc::one() } else { Cyc::from_int(-1) };
    let mut mult = LinMap::zeros(&[4, 4], &[4]);
    for (a, e) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for (b, f) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            if e + f < 2 {
                // x^e g^b = (-1)^{eb} g^b x^e
                mult.set(idx(a + b, e + f), idx(a, e) * 4 + idx(b, f), sign(e * b));
            }
        }
    }
    let mut comult = LinMap::zeros(&[4], &[4, 4]);
    for a in 0..2 {
        comult.set(idx(a, 0) * 4 + idx(a, 0), idx(a, 0), Cyc::one());
        // Δ(g^a x) = g^a ⊗ g^a x + g^a x ⊗ g^{a+1}
        comult.set(idx(a, 0) * 4 + idx(a, 1), idx(a, 1), Cyc::one());
        comult.set(idx(a, 1) * 4 + idx(a + 1, 0), idx(a, 1), Cyc::one());
    }
    let unit = LinMap::from_fn(&[], &[4], |c, _| if c == 0 { Cyc::one() } else { Cyc::zero() });
    let counit = LinMap::from_fn(&[4], &[], |_, d| if d % 2 == 0 { Cyc::one() } else { Cyc::zero() });
    let mut antipode = LinMap::zeros(&[4], &[4]);
    for a in 0..2 {
        antipode.set(idx(a, 0), idx(a, 0), Cyc::one());
        // S(g^a x) = (-1)^a g^{a+1} x
        antipode.set(idx(a + 1, 1), idx(a, 1), sign(a));
    }
    let parts = Parts { mult, comult, unit, counit, antipode, antipode_inv: None };
    Hopf::new("sweedler_by_hand", &Ctx::vec(), None, parts).unwrap()
}

#[test]
fn hand_written_sweedler_matches_the_builtin() {
    let h = sweedler_by_hand();
    assert!(check_hopf(&h).all_pass());
    assert!(h.structure_eq(&sweedler()));
    assert!(h.structure_eq(&hmnd(&FamilyParams::new(1, &[1], None)).unwrap()));
}

#[test]
fn examples_pass_the_hopf_axioms() {
    for h in [
        group_algebra(2).unwrap(),
        group_algebra(3).unwrap(),
        sweedler(),
        hmnd(&FamilyParams::new(2, &[1], None)).unwrap(),
    ] {
        let r = check_hopf(&h);
        assert!(r.all_pass(), "{}: {:?}", h.name, r.first_failure());
    }
}

#[test]
fn corrupted_comultiplication_fails() {
    let mut p = sweedler().parts();
    // Δx = x⊗x
    for c in 0..16 {
        p.comult.set(c, 1, if c == 5 { Cyc::one() } else { Cyc::zero() });
    }
    let h = Hopf::new("bad", &Ctx::vec(), None, p).unwrap();
    assert!(check_hopf(&h).any_fail());
}

#[test]
fn corrupted_antipode_fails() {
    let mut p = sweedler().parts();
    // S(x) = -gx instead of gx
    p.antipode.set(3, 1, Cyc::from_int(-1));
    p.antipode_inv = None;
    let h = Hopf::new("bad", &Ctx::vec(), None, p).unwrap();
    let r = check_hopf(&h);
    assert!(r.any_fail());
    assert!(!r.passed("antipode_left") || !r.passed("antipode_right"));
}

#[test]
fn antipode_inverses() {
    for n in 2..=5 {
        let h = group_algebra(n).unwrap();
        assert_eq!(h.antipode, h.antipode_inv);
        // S(g^k) = g^{n-k}
        for k in 0..n {
            assert_eq!(*h.antipode.get((n - k) % n, k), Cyc::one());
        }
    }
    let h = sweedler();
    assert_eq!(LinMap::compose(&h.antipode, &h.antipode_inv).unwrap(), LinMap::identity(&[4]));
    assert_ne!(h.antipode, h.antipode_inv);
}

#[test]
fn op_and_cop() {
    let k4 = group_algebra(4).unwrap();
    assert!(op_cop(&k4, OpCop::Op).structure_eq(&k4));
    let s = sweedler();
    assert!(check_hopf(&op_cop(&s, OpCop::OpCop)).all_pass());
    assert!(check_bialgebra(&op_cop(&s, OpCop::Cop)).all_pass());
    assert!(check_hopf(&op_cop(&s, OpCop::Op)).all_pass());
    assert!(!op_cop(&s, OpCop::Op).structure_eq(&s));
}

#[test]
fn duals() {
    let d2 = dual_hopf(&group_algebra(2).unwrap());
    assert!(check_hopf(&d2).all_pass());
    assert!(d2.is_commutative() && d2.is_cocommutative());
    // the dual basis of kZ2 consists of orthogonal idempotents
    for i in 0..2 {
        for j in 0..2 {
            for c in 0..2 {
                let want = if i == j && c == i { Cyc::one() } else { Cyc::zero() };
                assert_eq!(*d2.mult.get(c, i * 2 + j), want);
            }
        }
    }
    for h in [group_algebra(3).unwrap(), sweedler()] {
        let d = dual_hopf(&h);
        assert!(check_hopf(&d).all_pass(), "{}", h.name);
        assert!(dual_hopf(&d).structure_eq(&h), "{}", h.name);
    }
}

#[test]
fn comodules_and_dual_modules_correspond() {
    let h = sweedler();
    let rho = h.comult.clone();
    let back = match switch_structure(&h, &h.obj, &Structure::Comodule(rho.clone())).unwrap() {
        m @ Structure::Module(_) => switch_structure(&h, &h.obj, &m).unwrap(),
        _ => panic!("expected a module"),
    };
    match back {
        Structure::Comodule(r) => assert_eq!(r.reshape(&[4], &[4, 4]), rho),
        _ => panic!("expected a comodule"),
    }
}
