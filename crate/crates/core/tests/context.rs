use bhl::context::{character, check_braiding_linearity, check_quasitriangular, duality_maps, Ctx, Duality, Obj};
use bhl::examples::{cyclic_context, group_algebra, hmnd, hmnd_r, sweedler, FamilyParams};
use bhl::multilinear::{vec_swap, LinMap};
use bhl::scalars::Cyc;

#[test]
fn vec_braiding_is_the_flip() {
    let ctx = Ctx::vec();
    assert_eq!(ctx.braiding(&Obj::plain(2), &Obj::plain(3), 1).unwrap(), vec_swap(2, 3));
    assert_eq!(ctx.braiding(&Obj::plain(2), &Obj::plain(3), -1).unwrap(), vec_swap(3, 2));
}

#[test]
fn characters_braid_by_powers_of_i() {
    // R₁ = ¼ Σ i^{-jt} g^j⊗g^t acts on χ_a⊗χ_b by ¼ Σ i^{-jt+aj+bt} = i^{ab}
    let (a, ctx) = cyclic_context(2, 1).unwrap();
    for x in 0..4 {
        for y in 0..4 {
            let b = ctx.braiding(&character(&a, 4, x), &character(&a, 4, y), 1).unwrap();
            assert_eq!(*b.get(0, 0), Cyc::root_of_unity(4, (x * y) as i64).unwrap(), "χ{x}⊗χ{y}");
        }
    }
    let (a2, ctx2) = cyclic_context(1, 1).unwrap();
    let sign = character(&a2, 2, 1);
    assert_eq!(*ctx2.braiding(&sign, &sign, 1).unwrap().get(0, 0), Cyc::from_int(-1));
}

#[test]
fn triangularity() {
    let p2 = FamilyParams::new(1, &[], Some(1));
    let r = check_quasitriangular(&hmnd(&p2).unwrap(), &hmnd_r(&p2).unwrap()).unwrap();
    assert!(r.all_pass());
    assert!(r.note_value("triangular"));
    let p4 = FamilyParams::new(2, &[], Some(1));
    let r = check_quasitriangular(&hmnd(&p4).unwrap(), &hmnd_r(&p4).unwrap()).unwrap();
    assert!(r.all_pass());
    assert!(!r.note_value("triangular"));
}

#[test]
fn trivial_r_matrix_on_sweedler_is_not_quasitriangular() {
    let h = sweedler();
    let one = LinMap::from_fn(&[], &[4, 4], |c, _| if c == 0 { Cyc::one() } else { Cyc::zero() });
    let r = check_quasitriangular(&h, &one).unwrap();
    assert!(!r.passed("qt.intertwines"));
    assert!(r.passed("qt.delta_left") && r.passed("qt.delta_right"));
}

#[test]
fn transparency_of_characters() {
    let (a, ctx) = cyclic_context(2, 1).unwrap();
    let chars: Vec<Obj> = (0..4).map(|c| character(&a, 4, c)).collect();
    assert!(!ctx.is_transparent(&chars[1], &chars[1..2]).transparent);
    assert!(ctx.is_transparent(&chars[2], &chars).transparent);
    assert!(Ctx::vec().is_transparent(&Obj::plain(3), &[Obj::plain(2)]).transparent);
}

#[test]
fn ev_prime_against_ev_on_characters() {
    // ev' on χ_a⊗χ_a* is ev after Φ_{χ_a, χ_{-a}}, which scales by i^{-a²}
    let (a, ctx) = cyclic_context(2, 1).unwrap();
    for c in 0..4 {
        let x = character(&a, 4, c);
        let evp = duality_maps(&ctx, Duality::EvPrime, &x).unwrap();
        let ev = duality_maps(&ctx, Duality::Ev, &x).unwrap();
        let scalar = Cyc::root_of_unity(4, -((c * c) as i64)).unwrap();
        assert_eq!(*evp.get(0, 0), &scalar * ev.get(0, 0), "χ{c}");
    }
    let x = character(&a, 4, 1);
    assert_ne!(duality_maps(&ctx, Duality::EvPrime, &x).unwrap(), duality_maps(&ctx, Duality::Ev, &x).unwrap());
}

#[test]
fn braiding_linearity() {
    for n in 2..=3 {
        let r = check_braiding_linearity(&group_algebra(n).unwrap(), 2);
        assert!(r.note_value("braid_lin.i.linear") && r.note_value("braid_lin.ii.colinear"));
    }
    let r = check_braiding_linearity(&sweedler(), 2);
    assert!(!r.note_value("braid_lin.i.linear") && !r.note_value("braid_lin.ii.colinear"));
    let r = check_braiding_linearity(&bhl::hopf::dual_hopf(&sweedler()), 2);
    assert!(!r.note_value("braid_lin.i.linear"));
    assert!(!r.any_fail());
}
