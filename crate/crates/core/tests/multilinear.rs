use bhl::multilinear::{coev, ev, map_equal, parse_linmap, vec_swap, Equality, LinMap};
use bhl::scalars::Cyc;

fn c(v: i64) -> Cyc {
    Cyc::from_int(v)
}

#[test]
fn identities_and_swaps() {
    let id2 = LinMap::identity(&[2]);
    assert_eq!(LinMap::compose(&id2, &id2).unwrap(), id2);
    let back = LinMap::compose(&vec_swap(2, 3), &vec_swap(3, 2)).unwrap();
    assert_eq!(back, LinMap::identity(&[3, 2]));
    assert_eq!(LinMap::identity(&[2]).tensor(&LinMap::identity(&[3])), LinMap::identity(&[2, 3]));
}

#[test]
fn tensoring_with_the_unit_object_is_trivial() {
    let f = LinMap::from_fn(&[2], &[3], |r, d| c((r * 2 + d) as i64 - 1));
    let unit = LinMap::identity(&[]);
    assert!(map_equal(&f.tensor(&unit), &f).holds());
}

#[test]
fn shapes_of_ev_tensor_coev() {
    let t = ev(2).tensor(&coev(2));
    assert_eq!(t.dom(), &[2, 2]);
    assert_eq!(t.cod(), &[2, 2]);
}

#[test]
fn swap_moves_basis_vectors() {
    // e₀⊗e₁ ↦ e₁⊗e₀: domain index 0·2+1, codomain index 1·2+0
    let s = vec_swap(2, 2);
    assert_eq!(*s.get(2, 1), Cyc::one());
    assert_eq!(s.apply(&[c(0), c(1), c(0), c(0)]).unwrap(), vec![c(0), c(0), c(1), c(0)]);
    assert_eq!(vec_swap(1, 5), LinMap::identity(&[5]).reshape(&[1, 5], &[5, 1]));
}

#[test]
fn ev_is_the_kronecker_delta() {
    let e = ev(2);
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(*e.get(0, i * 2 + j), if i == j { Cyc::one() } else { Cyc::zero() });
        }
    }
    assert_eq!(e.apply(&[c(1), c(0), c(0), c(0)]).unwrap(), vec![c(1)]);
}

#[test]
fn snake_identities_in_dims_one_to_four() {
    for n in 1..=4 {
        let id = LinMap::identity(&[n]);
        // P* → P*⊗P⊗P* → P*
        let left = LinMap::compose(&ev(n).tensor(&id), &id.tensor(&coev(n)).reshape(&[n], &[n, n, n])).unwrap();
        assert!(map_equal(&left.reshape(&[n], &[n]), &id).holds(), "dim {n}");
        // P → P⊗P*⊗P → P
        let right = LinMap::compose(&id.tensor(&ev(n)), &coev(n).tensor(&id).reshape(&[n], &[n, n, n])).unwrap();
        assert!(map_equal(&right.reshape(&[n], &[n]), &id).holds(), "dim {n}");
    }
}

#[test]
fn equality_reports_the_first_differing_entry() {
    assert!(map_equal(&LinMap::identity(&[2]), &LinMap::identity(&[2])).holds());
    match map_equal(&LinMap::identity(&[2, 2]), &vec_swap(2, 2)) {
        Equality::EntryDiffers(m) => {
            assert_eq!(m.cod_index, vec![0, 1]);
            assert_eq!(m.dom_index, vec![0, 1]);
        }
        other => panic!("expected an entry witness, got {other:?}"),
    }
    assert!(matches!(map_equal(&LinMap::identity(&[2]), &LinMap::identity(&[3])), Equality::SignatureDiffers { .. }));
}

#[test]
fn text_round_trip_and_offsets() {
    let f =
        LinMap::from_fn(&[2, 3], &[2], |r, d| &Cyc::from_ratio((r + d) as i64, 3) * &Cyc::root_of_unity(4, 1).unwrap());
    let text = f.to_text();
    let (g, used) = LinMap::parse(&text).unwrap();
    assert_eq!(g, f);
    assert_eq!(used, text.trim_end().len().max(used).min(text.len()));
    let bad = "junk";
    match parse_linmap(bad, 100) {
        Err(bhl::multilinear::MapError::Parse { offset, .. }) => assert!(offset >= 100),
        other => panic!("expected a parse error, got {other:?}"),
    }
}
