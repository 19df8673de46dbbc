use bhl::examples::group_algebra;
use bhl::hopf::{check_hopf, dual_hopf};
use bhl::multilinear::LinMap;
use bhl::scalars::Cyc;
use bhl::yd::{adjoint_yd_module, equivalence_outcomes, YdModule};
use proptest::prelude::*;

fn cyc() -> impl Strategy<Value = Cyc> {
    prop::collection::vec((-4i64..=4, 1i64..=3), 4).prop_map(|cs| {
        cs.iter().enumerate().fold(Cyc::zero(), |acc, (k, &(n, d))| {
            &acc + &(&Cyc::from_ratio(n, d) * &Cyc::root_of_unity(12, k as i64).unwrap())
        })
    })
}

fn linmap(dom: usize, cod: usize) -> impl Strategy<Value = LinMap> {
    prop::collection::vec(-3i64..=3, dom * cod)
        .prop_map(move |v| LinMap::from_entries(&[dom], &[cod], v.into_iter().map(Cyc::from_int).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyc_field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Cyc::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Cyc::one());
        }
    }

    #[test]
    fn cyc_text_round_trip(a in cyc()) {
        prop_assert_eq!(Cyc::parse(12, &a.to_text(12)).unwrap(), a);
    }

    #[test]
    fn composition_is_associative(f in linmap(2, 3), g in linmap(3, 2), h in linmap(2, 3)) {
        let l = LinMap::compose(&h, &LinMap::compose(&g, &f).unwrap()).unwrap();
        let r = LinMap::compose(&LinMap::compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn tensor_is_functorial(f in linmap(2, 3), g in linmap(3, 2), h in linmap(2, 2), k in linmap(2, 3)) {
        let l = LinMap::compose(&g.tensor(&k), &f.tensor(&h)).unwrap();
        let r = LinMap::compose(&g, &f).unwrap().tensor(&LinMap::compose(&k, &h).unwrap());
        prop_assert_eq!(l, r);
    }

    #[test]
    fn linmap_text_round_trip(f in linmap(3, 2)) {
        let (g, _) = LinMap::parse(&f.to_text()).unwrap();
        prop_assert_eq!(g, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn cyclic_group_algebras_and_duals(n in 1usize..=6) {
        let h = group_algebra(n).unwrap();
        prop_assert!(check_hopf(&h).all_pass());
        let d = dual_hopf(&h);
        prop_assert!(check_hopf(&d).all_pass());
        prop_assert!(dual_hopf(&d).structure_eq(&h));
    }

    #[test]
    fn perturbed_modules_keep_equivalent_conditions_equivalent(
        n in 2usize..=3, which in 0usize..2, slot in 0usize..64, v in cyc()
    ) {
        let m = adjoint_yd_module(&group_algebra(n).unwrap());
        let base = if which == 0 { &m.action } else { &m.coaction };
        let k = slot % base.entries().len();
        let mut e = base.entries().to_vec();
        e[k] = &e[k] + &v;
        let f = LinMap::from_entries(base.dom(), base.cod(), e).unwrap();
        let mu = YdModule { action: if which == 0 { f.clone() } else { m.action.clone() },
                            coaction: if which == 1 { f } else { m.coaction.clone() }, ..m.clone() };
        for (id, a, b) in equivalence_outcomes(&mu) {
            prop_assert_eq!(a, b, "{}", id);
        }
    }
}
