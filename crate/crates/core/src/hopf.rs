//! Hopf algebras in a braided context: structure constants, axiom checks,
//! opposite and co-opposite structures, duals and the module/comodule switch.

use std::fmt;

use crate::context::{Ctx, Diagram, Obj};
use crate::error::{Error, Result};
use crate::multilinear::{map_equal, Equality, LinMap, MapError};
use crate::report::Report;

/// Extra information about where a Hopf algebra came from, used to pick probes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Kind {
    Generic,
    /// The group algebra of the cyclic group of the given order.
    Cyclic(usize),
}

/// Structure maps of a finite-dimensional Hopf algebra living in a context.
#[derive(Clone)]
pub struct Hopf {
    pub name: String,
    pub dim: usize,
    pub mult: LinMap,
    pub comult: LinMap,
    pub unit: LinMap,
    pub counit: LinMap,
    pub antipode: LinMap,
    pub antipode_inv: LinMap,
    pub ctx: Ctx,
    /// `H` as an object of the context.
    pub obj: Obj,
    pub kind: Kind,
    /// Set when the structure was derived by a construction that is only guaranteed
    /// to give a Hopf algebra under a symmetry hypothesis that failed.
    pub unverified: bool,
}

impl fmt::Debug for Hopf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hopf({}, dim={}, ctx={:?})", self.name, self.dim, self.ctx)
    }
}

/// The raw maps handed to [`Hopf::new`].
#[derive(Debug, Clone)]
pub struct Parts {
    pub mult: LinMap,
    pub comult: LinMap,
    pub unit: LinMap,
    pub counit: LinMap,
    pub antipode: LinMap,
    pub antipode_inv: Option<LinMap>,
}

fn shaped(f: &LinMap, dom: &[usize], cod: &[usize], what: &str) -> Result<LinMap> {
    if f.dom_size() != dom.iter().product::<usize>() || f.cod_size() != cod.iter().product::<usize>() {
        return Err(Error::SignatureMismatch(format!(
            "{what}: expected {dom:?}->{cod:?}, got {:?}->{:?}",
            f.dom(),
            f.cod()
        )));
    }
    Ok(f.reshape(dom, cod))
}

impl Hopf {
    /// Builds the structure, inverting the antipode when no inverse is given.
    ///
    /// In a module context `obj` must carry the action of the acting algebra on `H`;
    /// in `Vec` it may be omitted.
    pub fn new(name: &str, ctx: &Ctx, obj: Option<Obj>, parts: Parts) -> Result<Self> {
        let d = parts.mult.cod_size();
        let mult = shaped(&parts.mult, &[d, d], &[d], "mult")?;
        let comult = shaped(&parts.comult, &[d], &[d, d], "comult")?;
        let unit = shaped(&parts.unit, &[], &[d], "unit")?;
        let counit = shaped(&parts.counit, &[d], &[], "counit")?;
        let antipode = shaped(&parts.antipode, &[d], &[d], "antipode")?;
        let obj = match obj {
            Some(o) => {
                if o.dim() != d {
                    return Err(Error::SignatureMismatch(format!("object has dim {}, algebra {d}", o.dim())));
                }
                ctx.validate(&o)?;
                o
            }
            None if ctx.is_vec() => Obj::plain(d),
            None => return Err(Error::NotAModule("H needs an action in a module context".into())),
        };
        let antipode_inv = match parts.antipode_inv {
            Some(s) => shaped(&s, &[d], &[d], "antipode_inv")?,
            None => invert_antipode(&antipode)?,
        };
        Ok(Hopf {
            name: name.to_string(),
            dim: d,
            mult,
            comult,
            unit,
            counit,
            antipode,
            antipode_inv,
            ctx: ctx.clone(),
            obj,
            kind: Kind::Generic,
            unverified: false,
        })
    }

    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn parts(&self) -> Parts {
        Parts {
            mult: self.mult.clone(),
            comult: self.comult.clone(),
            unit: self.unit.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            antipode_inv: Some(self.antipode_inv.clone()),
        }
    }

    /// Starts a diagram on copies of `H`.
    pub fn diagram(&self, n: usize) -> Diagram {
        let objs: Vec<&Obj> = (0..n).map(|_| &self.obj).collect();
        Diagram::new(&self.ctx, &objs)
    }

    /// `H` as an object of `Vec` with the same structure maps.
    pub fn structure_eq(&self, other: &Hopf) -> bool {
        self.mult == other.mult
            && self.comult == other.comult
            && self.unit == other.unit
            && self.counit == other.counit
            && self.antipode == other.antipode
            && self.antipode_inv == other.antipode_inv
    }

    /// `∇Φ_{H,H} = ∇`.
    pub fn is_commutative(&self) -> bool {
        map_equal(&self.diagram(2).braid(0).mu(0, self).finish(), &self.mult).holds()
    }

    /// `Φ_{H,H}Δ = Δ`.
    pub fn is_cocommutative(&self) -> bool {
        map_equal(&self.diagram(1).delta(0, self).braid(0).finish(), &self.comult).holds()
    }

    /// `Φ_{H,H}` equals its inverse.
    pub fn braiding_symmetric(&self) -> bool {
        let dd = self.diagram(2).braid(0).braid(0).finish();
        map_equal(&dd, &LinMap::identity(&[self.dim, self.dim])).holds()
    }
}

fn invert_antipode(s: &LinMap) -> Result<LinMap> {
    s.inverse().map_err(|e| match e {
        MapError::Singular => Error::AntipodeNotBijective,
        other => Error::Map(other),
    })
}

/// The exact inverse of the antipode matrix.
pub fn compute_antipode_inverse(h: &Hopf) -> Result<LinMap> {
    invert_antipode(&h.antipode)
}

/// Records the first failing equality of a group under one id.
fn eq_all(rep: &mut Report, id: &str, es: Vec<Equality>) {
    match es.into_iter().find(|e| !e.holds()) {
        None => rep.pass(id),
        Some(e) => rep.record(id, e),
    }
}

/// Which side a structure acts or coacts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// Associativity and unitality of a left action `[dimH, dim] → [dim]` (plain contraction).
pub fn check_module(h: &Hopf, act: &LinMap, dim: usize) -> Report {
    check_action(h, Side::Left, act, dim)
}

pub fn check_action(h: &Hopf, side: Side, act: &LinMap, dim: usize) -> Report {
    let mut rep = Report::new();
    let d = h.dim;
    let v = Ctx::vec();
    let (ho, mo) = (Obj::plain(d), Obj::plain(dim));
    let (dom, id_len) = match side {
        Side::Left => (vec![d, dim], dim),
        Side::Right => (vec![dim, d], dim),
    };
    if act.dom_size() != d * dim || act.cod_size() != id_len {
        rep.fail("module.signature", format!("action has shape {:?}->{:?}", act.dom(), act.cod()));
        return rep;
    }
    let act = act.reshape(&dom, &[dim]);
    match side {
        Side::Left => {
            let l = Diagram::new(&v, &[&ho, &ho, &mo]).map(0, &h.mult, &[&ho]).map(0, &act, &[&mo]).finish();
            let r = Diagram::new(&v, &[&ho, &ho, &mo]).map(1, &act, &[&mo]).map(0, &act, &[&mo]).finish();
            rep.record("module.assoc", map_equal(&l, &r));
            let u = Diagram::new(&v, &[&mo]).map(0, &h.unit, &[&ho]).map(0, &act, &[&mo]).finish();
            rep.record("module.unit", map_equal(&u, &LinMap::identity(&[dim])));
        }
        Side::Right => {
            let l = Diagram::new(&v, &[&mo, &ho, &ho]).map(1, &h.mult, &[&ho]).map(0, &act, &[&mo]).finish();
            let r = Diagram::new(&v, &[&mo, &ho, &ho]).map(0, &act, &[&mo]).map(0, &act, &[&mo]).finish();
            rep.record("module.assoc", map_equal(&l, &r));
            let u = Diagram::new(&v, &[&mo]).map(1, &h.unit, &[&ho]).map(0, &act, &[&mo]).finish();
            rep.record("module.unit", map_equal(&u, &LinMap::identity(&[dim])));
        }
    }
    rep
}

/// Coassociativity and counitality of a coaction `[dim] → [dimH, dim]` (left) or `[dim, dimH]` (right).
pub fn check_coaction(h: &Hopf, side: Side, coact: &LinMap, dim: usize) -> Report {
    let mut rep = Report::new();
    let d = h.dim;
    let v = Ctx::vec();
    let (ho, mo) = (Obj::plain(d), Obj::plain(dim));
    if coact.dom_size() != dim || coact.cod_size() != d * dim {
        rep.fail("comodule.signature", format!("coaction has shape {:?}->{:?}", coact.dom(), coact.cod()));
        return rep;
    }
    match side {
        Side::Left => {
            let c = coact.reshape(&[dim], &[d, dim]);
            let l = Diagram::new(&v, &[&mo]).map(0, &c, &[&ho, &mo]).map(0, &h.comult, &[&ho, &ho]).finish();
            let r = Diagram::new(&v, &[&mo]).map(0, &c, &[&ho, &mo]).map(1, &c, &[&ho, &mo]).finish();
            rep.record("comodule.coassoc", map_equal(&l, &r));
            let u = Diagram::new(&v, &[&mo]).map(0, &c, &[&ho, &mo]).map(0, &h.counit, &[]).finish();
            rep.record("comodule.counit", map_equal(&u, &LinMap::identity(&[dim])));
        }
        Side::Right => {
            let c = coact.reshape(&[dim], &[dim, d]);
            let l = Diagram::new(&v, &[&mo]).map(0, &c, &[&mo, &ho]).map(1, &h.comult, &[&ho, &ho]).finish();
            let r = Diagram::new(&v, &[&mo]).map(0, &c, &[&mo, &ho]).map(0, &c, &[&mo, &ho]).finish();
            rep.record("comodule.coassoc", map_equal(&l, &r));
            let u = Diagram::new(&v, &[&mo]).map(0, &c, &[&mo, &ho]).map(1, &h.counit, &[]).finish();
            rep.record("comodule.counit", map_equal(&u, &LinMap::identity(&[dim])));
        }
    }
    rep
}

/// `f: ⊗dom → ⊗cod` commutes with the diagonal actions of the acting algebra.
pub fn check_morphism(ctx: &Ctx, f: &LinMap, dom: &[&Obj], cod: &[&Obj]) -> Equality {
    let Some(a) = ctx.algebra() else {
        return Equality::Equal;
    };
    let x = ctx.tensor_objs(dom);
    let y = ctx.tensor_objs(cod);
    let (dx, dy) = (x.dim(), y.dim());
    let f = f.reshape(&[dx], &[dy]);
    let ax = x.action().expect("module").reshape(&[a.dim, dx], &[dx]);
    let ay = y.action().expect("module").reshape(&[a.dim, dy], &[dy]);
    let l = LinMap::compose(&f, &ax).expect("shape");
    let r = LinMap::compose(&ay, &LinMap::identity(&[a.dim]).tensor(&f)).expect("shape");
    map_equal(&l, &r)
}

/// Bialgebra axioms with the compatibility taken through the context braiding.
pub fn check_bialgebra(h: &Hopf) -> Report {
    let mut rep = Report::new();
    let id = LinMap::identity(&[h.dim]);
    let l = h.diagram(3).mu(0, h).mu(0, h).finish();
    let r = h.diagram(3).mu(1, h).mu(0, h).finish();
    rep.record("assoc", map_equal(&l, &r));
    let ul = h.diagram(1).eta(0, h).mu(0, h).finish();
    let ur = h.diagram(1).eta(1, h).mu(0, h).finish();
    eq_all(&mut rep, "unit", vec![map_equal(&ul, &id), map_equal(&ur, &id)]);
    let l = h.diagram(1).delta(0, h).delta(0, h).finish();
    let r = h.diagram(1).delta(0, h).delta(1, h).finish();
    rep.record("coassoc", map_equal(&l, &r));
    let cl = h.diagram(1).delta(0, h).eps(0, h).finish();
    let cr = h.diagram(1).delta(0, h).eps(1, h).finish();
    eq_all(&mut rep, "counit", vec![map_equal(&cl, &id), map_equal(&cr, &id)]);
    let l = h.diagram(2).mu(0, h).delta(0, h).finish();
    let r = h.diagram(2).delta(0, h).delta(2, h).braid(1).mu(0, h).mu(1, h).finish();
    rep.record("compat", map_equal(&l, &r));
    let l = h.diagram(2).mu(0, h).eps(0, h).finish();
    let r = h.diagram(2).eps(0, h).eps(0, h).finish();
    rep.record("counit_mult", map_equal(&l, &r));
    let l = h.diagram(0).eta(0, h).delta(0, h).finish();
    let r = h.diagram(0).eta(0, h).eta(1, h).finish();
    rep.record("unit_comult", map_equal(&l, &r));
    let e = h.diagram(0).eta(0, h).eps(0, h).finish();
    rep.record("eps_unit", map_equal(&e, &LinMap::identity(&[])));
    if !h.ctx.is_vec() {
        let o = &h.obj;
        let es = vec![
            check_morphism(&h.ctx, &h.mult, &[o, o], &[o]),
            check_morphism(&h.ctx, &h.comult, &[o], &[o, o]),
            check_morphism(&h.ctx, &h.unit, &[], &[o]),
            check_morphism(&h.ctx, &h.counit, &[o], &[]),
            check_morphism(&h.ctx, &h.antipode, &[o], &[o]),
            check_morphism(&h.ctx, &h.antipode_inv, &[o], &[o]),
        ];
        eq_all(&mut rep, "ctx_morphisms", es);
    }
    rep
}

/// Bialgebra axioms plus the antipode laws.
pub fn check_hopf(h: &Hopf) -> Report {
    let mut rep = check_bialgebra(h);
    let ee = h.diagram(1).eps(0, h).eta(0, h).finish();
    let l = h.diagram(1).delta(0, h).s(0, h).mu(0, h).finish();
    rep.record("antipode_left", map_equal(&l, &ee));
    let r = h.diagram(1).delta(0, h).s(1, h).mu(0, h).finish();
    rep.record("antipode_right", map_equal(&r, &ee));
    let l = h.diagram(2).mu(0, h).s(0, h).finish();
    let r = h.diagram(2).s(0, h).s(1, h).braid(0).mu(0, h).finish();
    rep.record("antimult", map_equal(&l, &r));
    let l = h.diagram(1).s(0, h).delta(0, h).finish();
    let r = h.diagram(1).delta(0, h).braid(0).s(0, h).s(1, h).finish();
    rep.record("anticomult", map_equal(&l, &r));
    let id = LinMap::identity(&[h.dim]);
    let a = LinMap::compose(&h.antipode, &h.antipode_inv).expect("shape");
    let b = LinMap::compose(&h.antipode_inv, &h.antipode).expect("shape");
    eq_all(&mut rep, "antipode_inverse", vec![map_equal(&a, &id), map_equal(&b, &id)]);
    // S is also the antipode of H^{op,cop}: ∇Φ (S⊗H) Φ^{-1}Δ = ηε
    let l = h.diagram(1).delta(0, h).ibraid(0).s(0, h).braid(0).mu(0, h).finish();
    let r = h.diagram(1).delta(0, h).ibraid(0).s(1, h).braid(0).mu(0, h).finish();
    eq_all(&mut rep, "antipode_opcop", vec![map_equal(&l, &ee), map_equal(&r, &ee)]);
    rep
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpCop {
    Op,
    Cop,
    OpCop,
}

/// `∇^{op} = ∇Φ`, `Δ^{cop} = Φ^{-1}Δ`. `op` and `cop` swap `S` with `S^{-1}`; `opcop` keeps `S`.
pub fn op_cop(h: &Hopf, which: OpCop) -> Hopf {
    let mut out = h.clone();
    let op_mult = h.diagram(2).braid(0).mu(0, h).finish();
    let cop_comult = h.diagram(1).delta(0, h).ibraid(0).finish();
    let symmetric = h.braiding_symmetric();
    match which {
        OpCop::Op => {
            out.mult = op_mult;
            std::mem::swap(&mut out.antipode, &mut out.antipode_inv);
            out.unverified = !symmetric;
            out.name = format!("{}^op", h.name);
        }
        OpCop::Cop => {
            out.comult = cop_comult;
            std::mem::swap(&mut out.antipode, &mut out.antipode_inv);
            out.unverified = !symmetric;
            out.name = format!("{}^cop", h.name);
        }
        OpCop::OpCop => {
            out.mult = op_mult;
            out.comult = cop_comult;
            out.name = format!("{}^opcop", h.name);
        }
    }
    out.kind = if which == OpCop::Cop || h.is_commutative() { h.kind.clone() } else { Kind::Generic };
    out
}

/// The dual Hopf algebra on the dual basis.
///
/// Multiplication: `⟨fg, h⟩ = ⟨f, h1'⟩⟨g', h2⟩` where `h1' ⊗ g' = Φ_{H*,H}(g ⊗ h1)`.
/// Comultiplication: `⟨f1, h''⟩⟨f2'', h'⟩ = ⟨f, hh'⟩` where `h'' ⊗ f2'' = Φ_{H*,H}(f2 ⊗ h)`.
pub fn dual_hopf(h: &Hopf) -> Hopf {
    let ctx = &h.ctx;
    let hd = ctx.dual_obj(&h.obj);
    let ho = &h.obj;
    let mult = Diagram::new(ctx, &[&hd, &hd]).coev(2, ho).delta(2, h).braid(1).ev(0).ev(0).finish();
    let comult = dual_comult(h, &hd);
    let unit = h.counit.transpose();
    let counit = h.unit.transpose();
    Hopf {
        name: format!("{}*", h.name),
        dim: h.dim,
        mult,
        comult,
        unit,
        counit,
        antipode: h.antipode.transpose(),
        antipode_inv: h.antipode_inv.transpose(),
        ctx: ctx.clone(),
        obj: hd,
        kind: Kind::Generic,
        unverified: false,
    }
}

fn dual_comult(h: &Hopf, hd: &Obj) -> LinMap {
    // f ↦ Σ ⟨f, a b⟩ a* ⊗ b*, with a* carried across b by the inverse crossing
    // so that pairing through Φ_{H*,H} undoes it.
    let ho = &h.obj;
    Diagram::new(&h.ctx, &[hd]).coev(1, ho).coev(3, ho).ibraid(2).mu(1, h).ev(0).finish()
}

/// The pairing `H*⊗H* × H⊗H → k` used for the dual coproduct, as a map `[H*,H*,H,H] → []`.
pub fn dual_pairing(h: &Hopf) -> LinMap {
    let hd = h.ctx.dual_obj(&h.obj);
    let ho = &h.obj;
    Diagram::new(&h.ctx, &[&hd, &hd, ho, ho]).braid(1).ev(0).ev(0).finish()
}

/// The braided antipode identities: `∇Φ^{-1}(S^{-1}⊗H)Δ = ηε`, and the same with `Φ`
/// when `Φ_{H,H}` is symmetric.
pub fn check_antipode_identities(h: &Hopf) -> Report {
    let mut rep = Report::new();
    let ee = h.diagram(1).eps(0, h).eta(0, h).finish();
    let l = h.diagram(1).delta(0, h).sinv(0, h).ibraid(0).mu(0, h).finish();
    rep.record("antipode2", map_equal(&l, &ee));
    if h.braiding_symmetric() {
        let l = h.diagram(1).delta(0, h).sinv(0, h).braid(0).mu(0, h).finish();
        rep.record("antipode2_symmetric", map_equal(&l, &ee));
    } else {
        rep.precondition("antipode2_symmetric", "Φ_{H,H} is not symmetric");
    }
    rep
}

/// A module or comodule structure on an object.
#[derive(Debug, Clone)]
pub enum Structure {
    /// Right `H`-coaction `[M] → [M, H]`.
    Comodule(LinMap),
    /// Left `H*`-action `[H*, M] → [M]`.
    Module(LinMap),
}

/// Right `H`-comodules correspond to left `H*`-modules.
pub fn switch_structure(h: &Hopf, m: &Obj, s: &Structure) -> Result<Structure> {
    let ctx = &h.ctx;
    let hd = ctx.dual_obj(&h.obj);
    let dm = m.dim();
    match s {
        Structure::Comodule(rho) => {
            let rho = shaped(rho, &[dm], &[dm, h.dim], "coaction")?;
            let act = Diagram::new(ctx, &[&hd, m]).map(1, &rho, &[m, &h.obj]).braid(0).ev(1).finish();
            Ok(Structure::Module(act))
        }
        Structure::Module(nu) => {
            let nu = shaped(nu, &[h.dim, dm], &[dm], "action")?;
            let co = Diagram::new(ctx, &[m]).coev(0, &h.obj).map(1, &nu, &[m]).braid(0).finish();
            Ok(Structure::Comodule(co))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Cyc;

    fn kz(n: usize) -> Hopf {
        let mult =
            LinMap::from_fn(&[n, n], &[n], |c, d| if c == (d / n + d % n) % n { Cyc::one() } else { Cyc::zero() });
        let comult = LinMap::from_fn(&[n], &[n, n], |c, d| if c == d * n + d { Cyc::one() } else { Cyc::zero() });
        let unit = LinMap::from_fn(&[], &[n], |c, _| if c == 0 { Cyc::one() } else { Cyc::zero() });
        let counit = LinMap::from_fn(&[n], &[], |_, _| Cyc::one());
        let antipode = LinMap::from_fn(&[n], &[n], |c, d| if c == (n - d) % n { Cyc::one() } else { Cyc::zero() });
        Hopf::new("kZ", &Ctx::vec(), None, Parts { mult, comult, unit, counit, antipode, antipode_inv: None })
            .unwrap()
            .with_kind(Kind::Cyclic(n))
    }

    #[test]
    fn group_algebras_are_hopf() {
        for n in 1..=5 {
            let h = kz(n);
            let rep = check_hopf(&h);
            assert!(rep.all_pass(), "{}", rep.to_text());
            assert!(check_antipode_identities(&h).all_pass());
            assert_eq!(h.antipode_inv, h.antipode);
        }
    }

    #[test]
    fn singular_antipode_is_rejected() {
        let h = kz(2);
        let mut p = h.parts();
        p.antipode = LinMap::zeros(&[2], &[2]);
        p.antipode_inv = None;
        assert_eq!(Hopf::new("bad", &Ctx::vec(), None, p).unwrap_err(), Error::AntipodeNotBijective);
    }

    #[test]
    fn dual_of_group_algebra_is_commutative() {
        let h = kz(3);
        let d = dual_hopf(&h);
        assert!(check_hopf(&d).all_pass());
        assert!(d.is_commutative() && d.is_cocommutative());
        assert!(dual_hopf(&d).structure_eq(&h));
    }
}
