use bhl::double::drinfeld_double;
use bhl::error::Error;
use bhl::examples::{group_algebra, quantum_line, sweedler};
use bhl::functors::{
    apply_functor, check_center, check_functor, embedding_check, from_center, sample_objects, to_center, CatObj,
    DModule, FunctorId, Property, Source,
};
use bhl::hopf::Side;
use bhl::io::builtin_module;
use bhl::report::Status;
use bhl::scalars::Cyc;
use bhl::yd::{adjoint_ll_module, adjoint_yd_module, check_yd, Variant};

#[test]
fn f_of_the_regular_module_is_yd_with_the_dual_basis_coaction() {
    for h in [group_algebra(3).unwrap(), sweedler()] {
        let d = drinfeld_double(&h).unwrap();
        let reg = DModule::regular(&d, Side::Left);
        let y = match apply_functor(FunctorId::F, &CatObj::DMod(reg.clone())).unwrap() {
            CatObj::Yd(y) => y,
            _ => panic!("F lands in YD modules"),
        };
        assert!(check_yd(&y).all_pass(), "{}", h.name);
        // ρ(m) = Σ e^i·m ⊗ e_i
        let (n, dm) = (h.dim, reg.dim());
        let act_b = reg.act_b();
        for m in 0..dm {
            for c in 0..dm {
                for i in 0..n {
                    assert_eq!(y.coaction.get(c * n + i, m), act_b.get(c, i * dm + m));
                }
            }
        }
        assert!(check_functor(FunctorId::F, &CatObj::DMod(reg), None, Property::Roundtrip).unwrap().all_pass());
    }
}

#[test]
fn g1_matches_its_formula() {
    // h·m = ν(m ⊗ S⁻¹(h)), λ(m) = S(m₁) ⊗ m₀
    for h in [group_algebra(3).unwrap(), sweedler()] {
        for x in sample_objects(&h, Source::Yd(Variant::RR)).unwrap() {
            let rr = x.yd().unwrap();
            let g1 = apply_functor(FunctorId::G1, &x).unwrap();
            let g1 = g1.yd().unwrap();
            let (n, dm) = (h.dim, rr.dim());
            for c in 0..dm {
                for a in 0..n {
                    for m in 0..dm {
                        let mut act = Cyc::zero();
                        let mut co = Cyc::zero();
                        for k in 0..n {
                            act = &act + &(h.antipode_inv.get(k, a) * rr.action.get(c, m * n + k));
                            co = &co + &(h.antipode.get(a, k) * rr.coaction.get(c * n + k, m));
                        }
                        assert_eq!(*g1.action.get(c, a * dm + m), act);
                        assert_eq!(*g1.coaction.get(a * dm + c, m), co);
                    }
                }
            }
        }
    }
}

#[test]
fn l_is_not_braided_on_sweedler() {
    let x = CatObj::Yd(adjoint_ll_module(&sweedler()));
    let r = check_functor(FunctorId::L, &x, Some(&x), Property::Braided).unwrap();
    let f = r.checks.iter().find(|c| c.status == Status::Fail).expect("a failing check");
    assert!(f.witness.as_deref().is_some_and(|w| !w.is_empty()));
}

#[test]
fn e_is_braided_on_kz3() {
    let h = group_algebra(3).unwrap();
    let a = builtin_module("LR_Hcop", &h).unwrap();
    let b = builtin_module("LR_Hcop:1", &h).unwrap();
    let r = check_functor(FunctorId::E, &a, Some(&b), Property::Braided).unwrap();
    assert!(r.all_pass(), "{:?}", r.first_failure());
}

#[test]
fn center_round_trip() {
    let m = adjoint_yd_module(&sweedler());
    let c = to_center(&m).unwrap();
    assert!(check_center(&c).all_pass());
    assert!(from_center(&c).unwrap().structure_eq(&m));
}

#[test]
fn embedding_into_the_center() {
    for h in [group_algebra(2).unwrap(), sweedler()] {
        assert!(embedding_check(&h, 2).unwrap().all_pass(), "{}", h.name);
    }
    assert!(matches!(embedding_check(&quantum_line(2, 1).unwrap(), 2), Err(Error::TransparencyViolated(_))));
}

#[test]
fn wrong_source_is_a_signature_mismatch() {
    let x = CatObj::Yd(adjoint_yd_module(&sweedler()));
    assert!(matches!(apply_functor(FunctorId::L, &x), Err(Error::SignatureMismatch(_))));
}
