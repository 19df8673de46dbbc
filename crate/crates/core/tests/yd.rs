use bhl::context::{character, Obj};
use bhl::examples::{cyclic_context, group_algebra, hmnd_r, sweedler, FamilyParams};
use bhl::hopf::Side;
use bhl::multilinear::{vec_swap, LinMap};
use bhl::scalars::Cyc;
use bhl::yd::{
    adjoint_ll_module, adjoint_yd_module, check_hexagons, check_yd, equivalence_outcomes, is_yd, mutants,
    qt_induced_yd, trivial_yd, yd_braiding, yd_tensor, Direction, Family, Variant, YdModule,
};

#[test]
fn adjoint_coaction_on_kz2() {
    // h ↦ h2 ⊗ h3 S⁻¹(h1) sends g to g⊗1 and 1 to 1⊗1
    let m = adjoint_yd_module(&group_algebra(2).unwrap());
    let want = LinMap::from_fn(&[2], &[2, 2], |c, d| if c == d * 2 { Cyc::one() } else { Cyc::zero() });
    assert_eq!(m.coaction, want);
    assert!(check_yd(&m).all_pass());
}

#[test]
fn adjoint_sweedler_passes_every_condition() {
    let m = adjoint_yd_module(&sweedler());
    let r = check_yd(&m);
    assert!(r.all_pass(), "{:?}", r.first_failure());
    assert!(is_yd(&adjoint_ll_module(&sweedler())));
}

#[test]
fn regular_action_with_trivial_coaction_fails_on_sweedler() {
    let h = sweedler();
    let t = trivial_yd(&h, &h.obj, Variant::LrHop);
    let m = YdModule::new(&h, &h.obj, Variant::LrHop, &h.mult, &t.coaction).unwrap();
    assert!(!is_yd(&m));
    assert!(check_yd(&m).any_fail());
    // on a commutative, cocommutative algebra the same module is YD
    let k = group_algebra(3).unwrap();
    let t = trivial_yd(&k, &k.obj, Variant::LrHop);
    assert!(is_yd(&YdModule::new(&k, &k.obj, Variant::LrHop, &k.mult, &t.coaction).unwrap()));
}

#[test]
fn trivial_modules_are_yd_in_every_variant() {
    for h in [group_algebra(2).unwrap(), sweedler()] {
        for v in Variant::ALL {
            let m = trivial_yd(&h, &Obj::plain(3), v);
            assert!(check_yd(&m).all_pass(), "{} {}", h.name, v.tag());
        }
    }
}

#[test]
fn sign_character_induces_the_coaction_g() {
    // λ(m) = R2 ⊗ R1·m with R₁ = ½(1⊗1+1⊗g+g⊗1−g⊗g) and g·m = −m gives g⊗m
    let p = FamilyParams::new(1, &[], Some(1));
    let (a, _) = cyclic_context(1, 1).unwrap();
    let sign = character(&a, 2, 1);
    let m = qt_induced_yd(&a, &hmnd_r(&p).unwrap(), &Obj::plain(1), sign.action().unwrap(), Side::Left).unwrap();
    assert_eq!(m.coaction, LinMap::from_fn(&[1], &[2, 1], |c, _| if c == 1 { Cyc::one() } else { Cyc::zero() }));
    assert!(is_yd(&m));
    // the L braiding m⊗n ↦ m₋₁·n ⊗ m₀ is then −flip
    assert_eq!(*yd_braiding(&m, &m, Family::L, Direction::Forward).unwrap().get(0, 0), Cyc::from_int(-1));
    let triv = character(&a, 2, 0);
    let t = qt_induced_yd(&a, &hmnd_r(&p).unwrap(), &Obj::plain(1), triv.action().unwrap(), Side::Left).unwrap();
    assert!(t.structure_eq(&trivial_yd(&a, &Obj::plain(1), Variant::LL)));
}

#[test]
fn tensor_with_the_trivial_module() {
    let h = sweedler();
    let m = adjoint_yd_module(&h);
    let i = trivial_yd(&h, &Obj::plain(1), Variant::LrHop);
    let mi = yd_tensor(&m, &i).unwrap();
    assert_eq!(mi.action.reshape(&[4, 4], &[4]), m.action);
    assert_eq!(mi.coaction.reshape(&[4], &[4, 4]), m.coaction);
    let mm = yd_tensor(&m, &m).unwrap();
    assert!(check_yd(&mm).all_pass());
}

#[test]
fn family_l_on_the_adjoint_of_a_group_is_the_flip() {
    let m = adjoint_ll_module(&group_algebra(2).unwrap());
    assert_eq!(yd_braiding(&m, &m, Family::L, Direction::Forward).unwrap(), vec_swap(2, 2));
}

#[test]
fn braidings_are_invertible_and_satisfy_hexagons() {
    let h = sweedler();
    let m = adjoint_yd_module(&h);
    for fam in Family::of(Variant::LrHop) {
        let f = yd_braiding(&m, &m, fam, Direction::Forward).unwrap();
        let g = yd_braiding(&m, &m, fam, Direction::Inverse).unwrap();
        assert_eq!(LinMap::compose(&g, &f).unwrap(), LinMap::identity(&[4, 4]), "{}", fam.tag());
        assert!(check_hexagons(&m, &m, &m, fam).unwrap().all_pass(), "{}", fam.tag());
    }
}

#[test]
fn mutants_never_split_equivalent_conditions() {
    let m = adjoint_yd_module(&group_algebra(2).unwrap());
    let ms = mutants(&m);
    assert_eq!(ms.len(), m.action.entries().len() + m.coaction.entries().len());
    assert!(ms.iter().any(|x| !is_yd(x)));
    for x in ms {
        for (id, a, b) in equivalence_outcomes(&x) {
            assert_eq!(a, b, "{id}");
        }
    }
}
