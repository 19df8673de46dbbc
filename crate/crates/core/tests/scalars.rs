use bhl::scalars::{cyc_arith, ArithOp, Cyc};
use num_rational::BigRational;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn z(n: i64, k: i64) -> Cyc {
    Cyc::root_of_unity(n, k).unwrap()
}

#[test]
fn normalization_reduces_modulo_the_cyclotomic_polynomial() {
    assert_eq!(Cyc::normalize(4, &[q(0), q(0), q(1)]).unwrap(), Cyc::from_int(-1));
    assert_eq!(Cyc::normalize(2, &[q(0), q(1)]).unwrap(), Cyc::from_int(-1));
    assert_eq!(Cyc::normalize(3, &[q(1), q(1), q(1)]).unwrap(), Cyc::zero());
}

#[test]
fn field_operations() {
    let one = Cyc::one();
    let i = z(4, 1);
    let a = cyc_arith(ArithOp::Add, &one, Some(&i)).unwrap();
    let b = &one - &i;
    assert_eq!(cyc_arith(ArithOp::Mul, &a, Some(&b)).unwrap(), Cyc::from_int(2));
    assert_eq!(cyc_arith(ArithOp::Inv, &i, None).unwrap(), -&i);
    let sum = cyc_arith(ArithOp::Add, &Cyc::from_ratio(1, 2), Some(&Cyc::from_ratio(1, 3))).unwrap();
    assert_eq!(sum, Cyc::from_ratio(5, 6));
    assert!(Cyc::zero().inv().is_err());
}

#[test]
fn half_turn_roots_are_minus_one() {
    for (n, k) in [(2, 1), (4, 2), (6, 3)] {
        assert_eq!(z(n, k), Cyc::from_int(-1), "ζ_{n}^{k}");
    }
}

#[test]
fn mixed_conductors_embed_into_the_lcm() {
    // ζ₄ · ζ₃ = ζ₁₂^{3+4}
    assert_eq!(&z(4, 1) * &z(3, 1), z(12, 7));
    assert_eq!((&z(4, 1) * &z(3, 1)).conductor(), 12);
}

#[test]
fn text_round_trip() {
    let x = &(&z(12, 5) * &Cyc::from_ratio(-7, 3)) + &Cyc::from_ratio(1, 2);
    let s = x.to_text(12);
    assert_eq!(Cyc::parse(12, &s).unwrap(), x);
}
