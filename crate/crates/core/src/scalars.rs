//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! A [`Cyc`] stores the coefficients of a polynomial in ζ_N reduced modulo the
//! N-th cyclotomic polynomial. Values of different conductors combine by
//! embedding both into the field of the least common multiple.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("invalid conductor {0}")]
    InvalidConductor(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor mismatch: {0} and {1}")]
    ConductorMismatch(u32, u32),
    #[error("malformed scalar `{0}`")]
    Parse(String),
}

/// Monic integer coefficients of Φ_N, lowest degree first.
fn cyclotomic_poly(n: u32) -> Rc<Vec<BigInt>> {
    thread_local! {
        static CACHE: RefCell<HashMap<u32, Rc<Vec<BigInt>>>> = RefCell::new(HashMap::new());
    }
    if let Some(p) = CACHE.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    // x^n - 1 divided by Φ_d for every proper divisor d of n.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_poly(d);
            num = exact_div(&num, &div);
        }
    }
    let p = Rc::new(num);
    CACHE.with(|c| c.borrow_mut().insert(n, p.clone()));
    p
}

fn exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut q = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        q[k] = c;
    }
    q
}

/// Degree of Φ_N, i.e. Euler's totient.
pub fn totient(n: u32) -> usize {
    let mut result = n as u64;
    let mut m = n as u64;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result as usize
}

fn reduce(n: u32, mut raw: Vec<BigRational>) -> Vec<BigRational> {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    if raw.len() <= deg {
        raw.resize(deg, BigRational::zero());
        return raw;
    }
    for k in (deg..raw.len()).rev() {
        let c = std::mem::take(&mut raw[k]);
        if c.is_zero() {
            continue;
        }
        for (j, pj) in phi.iter().enumerate().take(deg) {
            if !pj.is_zero() {
                raw[k - deg + j] -= &c * BigRational::from_integer(pj.clone());
            }
        }
    }
    raw.truncate(deg);
    raw
}

/// An exact element of Q(ζ_N).
#[derive(Clone, Debug)]
pub struct Cyc {
    n: u32,
    c: Vec<BigRational>,
}

impl Cyc {
    pub fn zero() -> Self {
        Cyc { n: 1, c: vec![BigRational::zero()] }
    }

    pub fn one() -> Self {
        Cyc::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Cyc { n: 1, c: vec![BigRational::from_integer(BigInt::from(v))] }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Cyc { n: 1, c: vec![BigRational::new(BigInt::from(num), BigInt::from(den))] }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyc { n: 1, c: vec![r] }
    }

    /// Canonical reduction of `raw` (coefficients of powers of ζ_N) modulo Φ_N.
    pub fn normalize(conductor: i64, raw: &[BigRational]) -> Result<Self, ScalarError> {
        if conductor < 1 || conductor > u32::MAX as i64 {
            return Err(ScalarError::InvalidConductor(conductor));
        }
        let n = conductor as u32;
        // ζ^N = 1, so fold exponents first.
        let mut folded = vec![BigRational::zero(); raw.len().min(n as usize).max(1)];
        for (k, v) in raw.iter().enumerate() {
            folded[k % n as usize] += v;
        }
        Ok(Cyc { n, c: reduce(n, folded) })
    }

    /// ζ_N^(k mod N).
    pub fn root_of_unity(conductor: i64, k: i64) -> Result<Self, ScalarError> {
        if conductor < 1 {
            return Err(ScalarError::InvalidConductor(conductor));
        }
        let e = k.rem_euclid(conductor) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        Cyc::normalize(conductor, &raw)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    fn is_rational(&self) -> bool {
        self.c.len() == 1
    }

    /// Rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Embeds into Q(ζ_M) for a multiple M of the conductor.
    pub fn lift(&self, m: u32) -> Result<Self, ScalarError> {
        if m == self.n {
            return Ok(self.clone());
        }
        if m == 0 {
            return Err(ScalarError::ConductorMismatch(self.n, m));
        }
        if self.is_rational() {
            let mut c = vec![BigRational::zero(); totient(m)];
            c[0] = self.c[0].clone();
            return Ok(Cyc { n: m, c });
        }
        if !m.is_multiple_of(self.n) {
            return Err(ScalarError::ConductorMismatch(self.n, m));
        }
        let step = (m / self.n) as usize;
        let mut raw = vec![BigRational::zero(); (self.c.len() - 1) * step + 1];
        for (k, v) in self.c.iter().enumerate() {
            raw[k * step] = v.clone();
        }
        Ok(Cyc { n: m, c: reduce(m, raw) })
    }

    fn unify(a: &Cyc, b: &Cyc) -> (Cyc, Cyc) {
        let m = a.n.lcm(&b.n);
        (a.lift(m).expect("lcm embedding"), b.lift(m).expect("lcm embedding"))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Cyc { n: self.n, c: vec![self.c[0].recip()] });
        }
        let phi: Vec<BigRational> =
            cyclotomic_poly(self.n).iter().map(|x| BigRational::from_integer(x.clone())).collect();
        let s = poly_inverse_mod(&self.c, &phi);
        Ok(Cyc { n: self.n, c: reduce(self.n, s) })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Cyc::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Complex conjugate, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let n = self.n as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (k, v) in self.c.iter().enumerate() {
            raw[(n - k) % n] += v;
        }
        Cyc { n: self.n, c: reduce(self.n, raw) }
    }

    /// Text form: comma separated `num/den` pairs, one per basis power.
    pub fn to_text(&self, conductor: u32) -> String {
        let v = self.lift(conductor).unwrap_or_else(|_| self.clone());
        v.c.iter().map(|r| format!("{}/{}", r.numer(), r.denom())).collect::<Vec<_>>().join(",")
    }

    pub fn parse(conductor: u32, s: &str) -> Result<Self, ScalarError> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != totient(conductor) {
            return Err(ScalarError::Parse(s.to_string()));
        }
        let mut c = Vec::with_capacity(parts.len());
        for p in parts {
            let (a, b) = p.split_once('/').ok_or_else(|| ScalarError::Parse(s.to_string()))?;
            let a: BigInt = a.trim().parse().map_err(|_| ScalarError::Parse(s.to_string()))?;
            let b: BigInt = b.trim().parse().map_err(|_| ScalarError::Parse(s.to_string()))?;
            if b.is_zero() {
                return Err(ScalarError::Parse(s.to_string()));
            }
            c.push(BigRational::new(a, b));
        }
        Ok(Cyc { n: conductor, c })
    }
}

fn trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = &r[k + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
        }
        q[k] = c;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    (q, r)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(&mut out);
    out
}

/// Extended Euclid: returns s with s·a ≡ 1 mod m (a and m coprime).
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![BigRational::zero()], vec![BigRational::one()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is a nonzero constant gcd.
    let g = r0[0].clone();
    s0.iter().map(|x| x / &g).collect()
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        if self.is_rational() {
            return other.as_rational().is_some_and(|r| r == self.c[0]);
        }
        if other.is_rational() {
            return self.as_rational().is_some_and(|r| r == other.c[0]);
        }
        let (a, b) = Cyc::unify(self, other);
        a.c == b.c
    }
}

impl Eq for Cyc {}

impl<'a> Add<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn add(self, o: &'a Cyc) -> Cyc {
        if self.n == o.n || o.is_rational() {
            let mut c = self.c.clone();
            for (i, v) in o.c.iter().enumerate() {
                c[i] += v;
            }
            return Cyc { n: self.n, c };
        }
        if self.is_rational() {
            return o + self;
        }
        let (a, b) = Cyc::unify(self, o);
        &a + &b
    }
}

impl AddAssign<&Cyc> for Cyc {
    fn add_assign(&mut self, o: &Cyc) {
        if self.n == o.n || o.is_rational() {
            for (i, v) in o.c.iter().enumerate() {
                self.c[i] += v;
            }
        } else {
            *self = &*self + o;
        }
    }
}

impl<'a> Sub<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn sub(self, o: &'a Cyc) -> Cyc {
        self + &(-o)
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

impl<'a> Mul<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn mul(self, o: &'a Cyc) -> Cyc {
        if o.is_rational() {
            let r = &o.c[0];
            return Cyc { n: self.n, c: self.c.iter().map(|x| x * r).collect() };
        }
        if self.is_rational() {
            return o * self;
        }
        if self.n != o.n {
            let (a, b) = Cyc::unify(self, o);
            return &a * &b;
        }
        Cyc { n: self.n, c: reduce(self.n, poly_mul(&self.c, &o.c)) }
    }
}

impl Add for Cyc {
    type Output = Cyc;
    fn add(self, o: Cyc) -> Cyc {
        &self + &o
    }
}

impl Sub for Cyc {
    type Output = Cyc;
    fn sub(self, o: Cyc) -> Cyc {
        &self - &o
    }
}

impl Mul for Cyc {
    type Output = Cyc;
    fn mul(self, o: Cyc) -> Cyc {
        &self * &o
    }
}

impl fmt::Display for Cyc {
    /// Human form, e.g. `1/2 - z^3` with z = ζ_N.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            let coef = if k > 0 && mag.is_one() { String::new() } else { mag.to_string() };
            let var = match k {
                0 => String::new(),
                1 => format!("z{}", self.n),
                _ => format!("z{}^{}", self.n, k),
            };
            let body = match (coef.is_empty(), var.is_empty()) {
                (true, _) => var,
                (_, true) => coef,
                _ => format!("{coef}*{var}"),
            };
            terms.push((v.is_negative(), body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (neg, body)) in terms.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// Binary and unary field operations selected at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
    Inv,
}

pub fn cyc_arith(op: ArithOp, a: &Cyc, b: Option<&Cyc>) -> Result<Cyc, ScalarError> {
    match (op, b) {
        (ArithOp::Add, Some(b)) => Ok(a + b),
        (ArithOp::Mul, Some(b)) => Ok(a * b),
        (ArithOp::Neg, _) => Ok(-a),
        (ArithOp::Inv, _) => a.inv(),
        (_, None) => Err(ScalarError::Parse("missing operand".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn cyclotomic_polynomials() {
        let p = |n| cyclotomic_poly(n).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        assert_eq!(p(1), "-1 1");
        assert_eq!(p(4), "1 0 1");
        assert_eq!(p(6), "1 -1 1");
        assert_eq!(p(12), "1 0 -1 0 1");
        for n in 1..40 {
            assert_eq!(cyclotomic_poly(n).len() - 1, totient(n));
        }
    }

    #[test]
    fn normalize_examples() {
        let i2 = Cyc::normalize(4, &[q(0, 1), q(0, 1), q(1, 1)]).unwrap();
        assert_eq!(i2.coeffs(), &[q(-1, 1), q(0, 1)]);
        let z2 = Cyc::normalize(2, &[q(0, 1), q(1, 1)]).unwrap();
        assert_eq!(z2, Cyc::from_int(-1));
        let s = Cyc::normalize(3, &[q(1, 1), q(1, 1), q(1, 1)]).unwrap();
        assert!(s.is_zero());
        assert_eq!(Cyc::normalize(0, &[]), Err(ScalarError::InvalidConductor(0)));
    }

    #[test]
    fn arith_examples() {
        let i = Cyc::root_of_unity(4, 1).unwrap();
        let one = Cyc::one();
        assert_eq!(&(&one + &i) * &(&one - &i), Cyc::from_int(2));
        assert_eq!(i.inv().unwrap(), -&i);
        assert_eq!(&Cyc::from_ratio(1, 2) + &Cyc::from_ratio(1, 3), Cyc::from_ratio(5, 6));
        assert_eq!(Cyc::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(Cyc::root_of_unity(2, 1).unwrap(), Cyc::from_int(-1));
        assert_eq!(Cyc::root_of_unity(4, 2).unwrap(), Cyc::from_int(-1));
        assert_eq!(Cyc::root_of_unity(6, 3).unwrap(), Cyc::from_int(-1));
        for n in 1..=12 {
            for k in 0..n {
                assert_eq!(Cyc::root_of_unity(n, k).unwrap().pow(n as u32), Cyc::one());
            }
        }
    }

    #[test]
    fn mixed_conductors_embed() {
        let i = Cyc::root_of_unity(4, 1).unwrap();
        let w = Cyc::root_of_unity(3, 1).unwrap();
        let z12 = Cyc::root_of_unity(12, 1).unwrap();
        // ζ12 = ζ4^{-1}·ζ3^{...}: check ζ12^3 = i and ζ12^4 = ω
        assert_eq!(z12.pow(3), i);
        assert_eq!(z12.pow(4), w);
        assert_eq!((&i * &w).pow(12), Cyc::one());
    }

    #[test]
    fn text_round_trip() {
        let x = Cyc::normalize(12, &[q(1, 2), q(-3, 5), q(0, 1), q(7, 1)]).unwrap();
        let t = x.to_text(12);
        assert_eq!(Cyc::parse(12, &t).unwrap(), x);
        assert_eq!(format!("{}", Cyc::root_of_unity(4, 3).unwrap()), "-z4");
    }
}
