//! Built-in Hopf algebras: cyclic group algebras, the family `H(m,n,d)` with its
//! quasitriangular structures, and the exterior braided line over it.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::context::{Ctx, Obj};
use crate::error::{Error, Result};
use crate::hopf::{check_hopf, Hopf, Kind, Parts};
use crate::multilinear::{map_equal, LinMap};
use crate::report::Report;
use crate::scalars::Cyc;

/// Parameters of `H(m,n,d)`: `g` of order `2m`, `n` skew-primitives with weights `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub m: usize,
    pub n: usize,
    pub d: Vec<usize>,
    pub s: Option<usize>,
}

impl FamilyParams {
    pub fn new(m: usize, d: &[usize], s: Option<usize>) -> Self {
        FamilyParams { m, n: d.len(), d: d.to_vec(), s }
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::BadFamilyParams("m must be positive".into()));
        }
        if self.d.len() != self.n {
            return Err(Error::BadFamilyParams(format!("expected {} weights, got {}", self.n, self.d.len())));
        }
        for &di in &self.d {
            if di % 2 == 0 || di == 0 || di >= 2 * self.m {
                return Err(Error::BadFamilyParams(format!("weight {di} must be odd and in [1, {})", 2 * self.m)));
            }
        }
        if let Some(s) = self.s {
            if s >= 2 * self.m {
                return Err(Error::BadFamilyParams(format!("s = {s} must be below {}", 2 * self.m)));
            }
        }
        Ok(())
    }

    /// `s·d_i ≡ m (mod 2m)` for every weight.
    pub fn s_valid(&self, s: usize) -> bool {
        s < 2 * self.m && self.d.iter().all(|&di| (s * di) % (2 * self.m) == self.m)
    }

    /// The smallest admissible `s`; `s = m` always qualifies.
    pub fn smallest_s(&self) -> usize {
        (0..2 * self.m).find(|&s| self.s_valid(s)).unwrap_or(self.m)
    }

    pub fn dim(&self) -> usize {
        (2 * self.m) << self.n
    }

    /// The parameters of `H(m, n-1, d^{≤n-1})`.
    pub fn base(&self) -> FamilyParams {
        FamilyParams { m: self.m, n: self.n - 1, d: self.d[..self.n - 1].to_vec(), s: self.s }
    }
}

fn one_at(len: usize, k: usize) -> impl Fn(usize, usize) -> Cyc {
    move |c, _| if c == k % len { Cyc::one() } else { Cyc::zero() }
}

/// `k[Z_N]` on the basis `1, g, …, g^{N-1}`.
pub fn group_algebra(n: usize) -> Result<Hopf> {
    if n == 0 {
        return Err(Error::BadFamilyParams("group order must be positive".into()));
    }
    let mult = LinMap::from_fn(&[n, n], &[n], |c, d| if c == (d / n + d % n) % n { Cyc::one() } else { Cyc::zero() });
    let comult = LinMap::from_fn(&[n], &[n, n], |c, d| if c == d * n + d { Cyc::one() } else { Cyc::zero() });
    let antipode = LinMap::from_fn(&[n], &[n], |c, d| if c == (n - d) % n { Cyc::one() } else { Cyc::zero() });
    let parts = Parts {
        mult,
        comult,
        unit: LinMap::from_fn(&[], &[n], one_at(n, 0)),
        counit: LinMap::from_fn(&[n], &[], |_, _| Cyc::one()),
        antipode: antipode.clone(),
        antipode_inv: Some(antipode),
    };
    Ok(Hopf::new(&format!("kZ{n}"), &Ctx::vec(), None, parts)?.with_kind(Kind::Cyclic(n)))
}

/// The four-dimensional Sweedler algebra, `H(1,1,(1))`.
pub fn sweedler() -> Hopf {
    hmnd(&FamilyParams::new(1, &[1], None)).expect("valid parameters").with_name("sweedler")
}

/// Sparse element of `H` or `H⊗H` keyed by basis index.
type Elem<K> = HashMap<K, Cyc>;

struct Pbw {
    m: usize,
    n: usize,
    d: Vec<usize>,
    omega: Cyc,
}

impl Pbw {
    fn dim(&self) -> usize {
        (2 * self.m) << self.n
    }

    fn idx(&self, a: usize, eps: usize) -> usize {
        (a % (2 * self.m)) * (1 << self.n) + eps
    }

    /// Bit of `x_i` (1-based) in the exponent mask; `x_1` is the most significant.
    fn bit(&self, i: usize) -> usize {
        1 << (self.n - i)
    }

    /// `g^a x^ε · g^b x^δ` as a scalar times a basis element, or zero.
    fn mul_basis(&self, p: usize, q: usize) -> Option<(Cyc, usize)> {
        let w = 1 << self.n;
        let (a, eps, b, del) = (p / w, p % w, q / w, q % w);
        if eps & del != 0 {
            return None;
        }
        let mut weight = 0usize;
        let mut crossings = 0usize;
        for i in 1..=self.n {
            if eps & self.bit(i) != 0 {
                weight += self.d[i - 1];
                for j in 1..i {
                    if del & self.bit(j) != 0 {
                        crossings += 1;
                    }
                }
            }
        }
        let two_m = 2 * self.m;
        // x^ε g^b = ω^{-b·Σd} g^b x^ε
        let e = (two_m - (b * weight) % two_m) % two_m;
        let mut coef = self.omega.pow(e as u32);
        if crossings % 2 == 1 {
            coef = -coef;
        }
        Some((coef, self.idx(a + b, eps | del)))
    }

    fn mul(&self, x: &Elem<usize>, y: &Elem<usize>) -> Elem<usize> {
        let mut out: Elem<usize> = HashMap::new();
        for (p, u) in x {
            for (q, v) in y {
                if let Some((c, r)) = self.mul_basis(*p, *q) {
                    let t = &(u * v) * &c;
                    let e = out.entry(r).or_insert_with(Cyc::zero);
                    *e += &t;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn mul2(&self, x: &Elem<(usize, usize)>, y: &Elem<(usize, usize)>) -> Elem<(usize, usize)> {
        let mut out: Elem<(usize, usize)> = HashMap::new();
        for ((p1, p2), u) in x {
            for ((q1, q2), v) in y {
                if let (Some((c1, r1)), Some((c2, r2))) = (self.mul_basis(*p1, *q1), self.mul_basis(*p2, *q2)) {
                    let t = &(&(u * v) * &c1) * &c2;
                    let e = out.entry((r1, r2)).or_insert_with(Cyc::zero);
                    *e += &t;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn x(&self, i: usize) -> usize {
        self.idx(0, self.bit(i))
    }

    fn comult_of(&self, p: usize) -> Elem<(usize, usize)> {
        let w = 1 << self.n;
        let (a, eps) = (p / w, p % w);
        let mut acc: Elem<(usize, usize)> = HashMap::from([((self.idx(a, 0), self.idx(a, 0)), Cyc::one())]);
        for i in 1..=self.n {
            if eps & self.bit(i) != 0 {
                let dx: Elem<(usize, usize)> =
                    HashMap::from([((0, self.x(i)), Cyc::one()), ((self.x(i), self.idx(self.m, 0)), Cyc::one())]);
                acc = self.mul2(&acc, &dx);
            }
        }
        acc
    }

    fn antipode_of(&self, p: usize) -> Elem<usize> {
        let w = 1 << self.n;
        let (a, eps) = (p / w, p % w);
        let mut acc: Elem<usize> = HashMap::from([(0, Cyc::one())]);
        for i in (1..=self.n).rev() {
            if eps & self.bit(i) != 0 {
                // S(x_i) = -x_i g^m
                let sx = self.mul(
                    &HashMap::from([(self.x(i), -Cyc::one())]),
                    &HashMap::from([(self.idx(self.m, 0), Cyc::one())]),
                );
                acc = self.mul(&acc, &sx);
            }
        }
        let two_m = 2 * self.m;
        self.mul(&acc, &HashMap::from([(self.idx(two_m - a % two_m, 0), Cyc::one())]))
    }
}

fn pbw(p: &FamilyParams) -> Pbw {
    let omega = Cyc::root_of_unity(2 * p.m as i64, 1).expect("positive conductor");
    Pbw { m: p.m, n: p.n, d: p.d.clone(), omega }
}

/// `H(m,n,d)` on the basis `g^a x^ε`, index `a·2^n + ε`, with `x_1` the top bit of `ε`.
pub fn hmnd(p: &FamilyParams) -> Result<Hopf> {
    p.validate()?;
    let b = pbw(p);
    let dim = b.dim();
    let mut mult = LinMap::zeros(&[dim, dim], &[dim]);
    for x in 0..dim {
        for y in 0..dim {
            if let Some((c, r)) = b.mul_basis(x, y) {
                mult.set(r, x * dim + y, c);
            }
        }
    }
    let mut comult = LinMap::zeros(&[dim], &[dim, dim]);
    let mut antipode = LinMap::zeros(&[dim], &[dim]);
    for x in 0..dim {
        for ((u, v), c) in b.comult_of(x) {
            comult.set(u * dim + v, x, c);
        }
        for (u, c) in b.antipode_of(x) {
            antipode.set(u, x, c);
        }
    }
    let w = 1 << p.n;
    let parts = Parts {
        mult,
        comult,
        unit: LinMap::from_fn(&[], &[dim], one_at(dim, 0)),
        counit: LinMap::from_fn(&[dim], &[], |_, x| if x % w == 0 { Cyc::one() } else { Cyc::zero() }),
        antipode,
        antipode_inv: None,
    };
    let name = format!("H({},{},{:?})", p.m, p.n, p.d);
    let h = Hopf::new(&name, &Ctx::vec(), None, parts)?;
    Ok(if p.n == 0 { h.with_kind(Kind::Cyclic(2 * p.m)) } else { h })
}

/// `R_s = (1/2m) Σ_{j,t} ω^{-jt} g^j ⊗ g^{st}` in `H(m,n,d)⊗H(m,n,d)`.
pub fn hmnd_r(p: &FamilyParams) -> Result<LinMap> {
    p.validate()?;
    let s = p.s.ok_or_else(|| Error::BadS("no s given".into()))?;
    if !p.s_valid(s) {
        return Err(Error::BadS(format!("s·d_i ≢ m (mod {}) for s = {s}", 2 * p.m)));
    }
    Ok(r_element(p, s))
}

fn r_element(p: &FamilyParams, s: usize) -> LinMap {
    let b = pbw(p);
    let dim = b.dim();
    let two_m = 2 * p.m;
    let scale = Cyc::from_ratio(1, two_m as i64);
    let mut acc: HashMap<usize, Cyc> = HashMap::new();
    for j in 0..two_m {
        for t in 0..two_m {
            let e = (two_m - (j * t) % two_m) % two_m;
            let c = &b.omega.pow(e as u32) * &scale;
            let key = b.idx(j, 0) * dim + b.idx(s * t, 0);
            let v = acc.entry(key).or_insert_with(Cyc::zero);
            *v += &c;
        }
    }
    let mut r = LinMap::zeros(&[], &[dim, dim]);
    for (k, v) in acc {
        r.set(k, 0, v);
    }
    r
}

/// The exterior algebra `k[x]/(x²)` as a Hopf algebra in modules over `H(m, n-1, d^{≤n-1})`.
#[derive(Debug, Clone)]
pub struct BraidedLine {
    pub params: FamilyParams,
    pub s: usize,
    pub base: Hopf,
    pub r: LinMap,
    pub ctx: Ctx,
    pub line: Hopf,
}

pub fn braided_line(p: &FamilyParams) -> Result<BraidedLine> {
    p.validate()?;
    if p.n == 0 {
        return Err(Error::BadFamilyParams("the braided line needs n ≥ 1".into()));
    }
    let s = match p.s {
        Some(s) if p.s_valid(s) => s,
        Some(s) => return Err(Error::BadS(format!("s = {s} violates s·d_i ≡ m (mod {})", 2 * p.m))),
        None => p.smallest_s(),
    };
    let bp = p.base();
    let base = hmnd(&bp)?;
    let r = r_element(&bp, s);
    let ctx = Ctx::mod_over(&base, &r)?;
    let da = base.dim;
    let w = 1 << bp.n;
    let omega = Cyc::root_of_unity(2 * p.m as i64, 1)?;
    let dn = p.d[p.n - 1];
    // g^a acts on x by ω^{a·d_n}; every x_i acts by zero
    let action = LinMap::from_fn(&[da, 2], &[2], |c, col| {
        let (h, v) = (col / 2, col % 2);
        let (a, eps) = (h / w, h % w);
        if eps != 0 || c != v {
            Cyc::zero()
        } else if v == 0 {
            Cyc::one()
        } else {
            omega.pow(((a * dn) % (2 * p.m)) as u32)
        }
    });
    let obj = Obj::module(&ctx, action)?;
    let mult = LinMap::from_fn(&[2, 2], &[2], |c, d| match (d / 2, d % 2) {
        (0, y) => one_at(2, y)(c, 0),
        (x, 0) => one_at(2, x)(c, 0),
        _ => Cyc::zero(),
    });
    let comult = LinMap::from_fn(&[2], &[2, 2], |c, d| match d {
        0 => one_at(4, 0)(c, 0),
        _ => {
            if c == 1 || c == 2 {
                Cyc::one()
            } else {
                Cyc::zero()
            }
        }
    });
    let antipode = LinMap::from_fn(&[2], &[2], |c, d| {
        if c != d {
            Cyc::zero()
        } else if d == 0 {
            Cyc::one()
        } else {
            -Cyc::one()
        }
    });
    let parts = Parts {
        mult,
        comult,
        unit: LinMap::from_fn(&[], &[2], one_at(2, 0)),
        counit: LinMap::from_fn(&[2], &[], |_, d| if d == 0 { Cyc::one() } else { Cyc::zero() }),
        antipode: antipode.clone(),
        antipode_inv: Some(antipode),
    };
    let line = Hopf::new("B", &ctx, Some(obj), parts)?;
    Ok(BraidedLine { params: p.clone(), s, base, r, ctx, line })
}

/// Checks that the braiding of the line with `m` is `x⊗v ↦ g^{±s·d_n}·v ⊗ x` in both
/// directions, that the two agree, and that the line is transparent on the standard probes.
pub fn transparency_demo(p: &FamilyParams, m: Option<&Obj>, depth: usize) -> Result<Report> {
    let bl = braided_line(p)?;
    let ctx = &bl.ctx;
    let reg = ctx.regular_obj(0);
    let m = m.unwrap_or(&reg);
    ctx.validate(m)?;
    let b = &bl.line.obj;
    let dm = m.dim();
    let act = m.action().expect("module");
    let bp = bl.params.base();
    let w = 1 << bp.n;
    let two_m = 2 * p.m;
    let sdn = (bl.s * p.d[p.n - 1]) % two_m;
    let g_pow = |k: usize| -> LinMap {
        let gi = (k % two_m) * w;
        LinMap::from_fn(&[dm], &[dm], |c, v| act.get(c, gi * dm + v).clone())
    };
    let expect = |k: usize| -> LinMap {
        let gk = g_pow(k);
        LinMap::from_fn(&[dm], &[dm, 2], |c, v| if c % 2 == 1 { gk.get(c / 2, v).clone() } else { Cyc::zero() })
    };
    let restrict = |f: &LinMap| -> LinMap { LinMap::from_fn(&[dm], &[dm, 2], |c, v| f.get(c, dm + v).clone()) };
    let fwd = restrict(&ctx.braiding(b, m, 1)?);
    let inv = restrict(&ctx.braiding(m, b, -1)?);
    let mut rep = Report::new();
    rep.record("demo.forward", map_equal(&fwd, &expect(sdn)));
    rep.record("demo.inverse", map_equal(&inv, &expect(two_m - sdn)));
    rep.record("demo.agree", map_equal(&fwd, &inv));
    let probes = ctx.standard_probes(depth);
    let t = ctx.is_transparent(b, &probes);
    rep.flag(
        "demo.transparent",
        t.transparent,
        format!("probe {:?}: {}", t.failing_probe, t.witness.unwrap_or_default()),
    );
    let h = check_hopf(&bl.line);
    rep.flag("demo.line_is_hopf", h.all_pass(), h.first_failure().map(|c| c.check.clone()).unwrap_or_default());
    rep.flag(
        "demo.line_commutative_cocommutative",
        bl.line.is_commutative() && bl.line.is_cocommutative(),
        "braided (co)commutativity fails",
    );
    rep.push("demo.probes", crate::report::Status::Pass, Some(ctx.probe_note()));
    Ok(rep)
}

/// `k[Z_N]` as a module context braided by `R_s` when `N = 2m`.
pub fn cyclic_context(m: usize, s: usize) -> Result<(Hopf, Ctx)> {
    let p = FamilyParams { m, n: 0, d: vec![], s: Some(s) };
    let a = hmnd(&p)?;
    let r = hmnd_r(&p)?;
    let ctx = Ctx::mod_over(&a, &r)?;
    Ok((a, ctx))
}

/// The quantum line `k[x]/(x^N)` in modules over `k[Z_{2m}]` braided by `R_s`, with `g·x = ω x`
/// and `x` primitive; `N` is the order of `q = ω^s`, the self-braiding scalar of `x`.
pub fn quantum_line(m: usize, s: usize) -> Result<Hopf> {
    let (a, ctx) = cyclic_context(m, s)?;
    let two_m = 2 * m;
    let omega = Cyc::root_of_unity(two_m as i64, 1)?;
    let q = omega.pow(s as u32);
    let n = if s.is_multiple_of(two_m) { 1 } else { two_m / num_integer::gcd(s, two_m) };
    let qint = |k: usize| -> Cyc {
        let mut acc = Cyc::zero();
        for i in 0..k {
            acc += &q.pow(i as u32);
        }
        acc
    };
    let fact = |k: usize| -> Cyc { (1..=k).fold(Cyc::one(), |acc, i| &acc * &qint(i)) };
    let binom = |k: usize, j: usize| -> Cyc {
        let den = &fact(j) * &fact(k - j);
        &fact(k) * &den.inv().expect("q-factorials below the order of q are nonzero")
    };
    let action = LinMap::from_fn(&[a.dim, n], &[n], |c, col| {
        let (g, v) = (col / n, col % n);
        if c == v {
            omega.pow(((g * v) % two_m) as u32)
        } else {
            Cyc::zero()
        }
    });
    let obj = Obj::module(&ctx, action)?;
    let mult = LinMap::from_fn(&[n, n], &[n], |c, d| if d / n + d % n == c { Cyc::one() } else { Cyc::zero() });
    let comult = LinMap::from_fn(&[n], &[n, n], |c, k| {
        let (i, j) = (c / n, c % n);
        if i + j == k {
            binom(k, i)
        } else {
            Cyc::zero()
        }
    });
    let antipode = LinMap::from_fn(&[n], &[n], |c, k| {
        if c != k {
            return Cyc::zero();
        }
        let v = q.pow((k * k.saturating_sub(1) / 2) as u32);
        if k % 2 == 1 {
            -v
        } else {
            v
        }
    });
    let parts = Parts {
        mult,
        comult,
        unit: LinMap::from_fn(&[], &[n], one_at(n, 0)),
        counit: LinMap::from_fn(&[n], &[], |_, d| if d == 0 { Cyc::one() } else { Cyc::zero() }),
        antipode,
        antipode_inv: None,
    };
    Hopf::new(&format!("k[x]/x^{n}"), &ctx, Some(obj), parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::check_quasitriangular;

    #[test]
    fn sweedler_relations() {
        let h = sweedler();
        assert_eq!(h.dim, 4);
        assert!(check_hopf(&h).all_pass(), "{}", check_hopf(&h).to_text());
        // basis 1, x, g, gx; g·x = -x·g
        let gx = h.mult.get(3, 2 * 4 + 1).clone();
        let xg = h.mult.get(3, 4 + 2).clone();
        assert_eq!(gx, -xg);
    }

    #[test]
    fn hmnd_is_hopf() {
        for (m, d) in [(2usize, vec![1usize]), (2, vec![1, 1]), (3, vec![1, 1]), (2, vec![3])] {
            let p = FamilyParams::new(m, &d, None);
            let h = hmnd(&p).unwrap();
            assert_eq!(h.dim, p.dim());
            let rep = check_hopf(&h);
            assert!(rep.all_pass(), "{m} {d:?}\n{}", rep.to_text());
        }
    }

    #[test]
    fn r_matrix_m1() {
        let p = FamilyParams::new(1, &[1], Some(1));
        let r = hmnd_r(&p).unwrap();
        let half = Cyc::from_ratio(1, 2);
        // basis index of g is 2
        let want = |u: usize, v: usize| -> Cyc {
            match (u, v) {
                (0, 0) | (0, 2) | (2, 0) => half.clone(),
                (2, 2) => -half.clone(),
                _ => Cyc::zero(),
            }
        };
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(r.get(u * 4 + v, 0), &want(u, v));
            }
        }
        let rep = check_quasitriangular(&hmnd(&p).unwrap(), &r).unwrap();
        assert!(rep.all_pass());
        assert_eq!(rep.get("triangular").unwrap().witness.as_deref(), Some("value=true"));
    }

    #[test]
    fn bad_s_refused() {
        let p = FamilyParams::new(2, &[1], Some(1));
        assert!(matches!(hmnd_r(&p), Err(Error::BadS(_))));
        assert!(FamilyParams::new(2, &[2], None).validate().is_err());
    }

    #[test]
    fn demo_small() {
        let rep = transparency_demo(&FamilyParams::new(1, &[1], Some(1)), None, 2).unwrap();
        assert!(rep.all_pass(), "{}", rep.to_text());
    }
}
