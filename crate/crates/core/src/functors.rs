//! Functors between modules over the double and the YD categories, with round-trip,
//! monoidality and braiding checks, and the center functor on finite probe families.

use serde::{Deserialize, Serialize};

use crate::context::{Ctx, Diagram, Obj};
use crate::double::{drinfeld_double, DoubleData};
use crate::error::{Error, Result};
use crate::hopf::{check_action, op_cop, Hopf, OpCop, Side};
use crate::multilinear::{map_equal, LinMap};
use crate::report::Report;
use crate::yd::{
    braiding_unchecked, check_yd, require_transparent, tensor_unchecked, Direction, Family, Variant, YdModule, YdOps,
};

/// A module over `D(H)` on one side.
#[derive(Debug, Clone)]
pub struct DModule {
    pub d: DoubleData,
    pub obj: Obj,
    pub action: LinMap,
    pub side: Side,
}

impl DModule {
    pub fn new(d: &DoubleData, obj: &Obj, action: &LinMap, side: Side) -> Result<Self> {
        let (n, dm) = (d.hopf.dim, obj.dim());
        if action.dom_size() != n * dm || action.cod_size() != dm {
            return Err(Error::SignatureMismatch(format!(
                "D(H)-action {:?}->{:?} on an object of dim {dm}",
                action.dom(),
                action.cod()
            )));
        }
        let dom = match side {
            Side::Left => [n, dm],
            Side::Right => [dm, n],
        };
        Ok(DModule { d: d.clone(), obj: obj.clone(), action: action.reshape(&dom, &[dm]), side })
    }

    /// `D(H)` acting on itself by multiplication.
    pub fn regular(d: &DoubleData, side: Side) -> Self {
        DModule { d: d.clone(), obj: d.hopf.obj.clone(), action: d.hopf.mult.clone(), side }
    }

    pub fn dim(&self) -> usize {
        self.obj.dim()
    }

    fn ctx(&self) -> &Ctx {
        &self.d.h.ctx
    }

    /// Restriction of the action along the embedding of a factor.
    fn restrict(&self, embed: &LinMap, factor: &Obj) -> LinMap {
        let dobj = &self.d.hopf.obj;
        match self.side {
            Side::Left => Diagram::new(self.ctx(), &[factor, &self.obj])
                .map(0, embed, &[dobj])
                .map(0, &self.action, &[&self.obj])
                .finish(),
            Side::Right => Diagram::new(self.ctx(), &[&self.obj, factor])
                .map(1, embed, &[dobj])
                .map(0, &self.action, &[&self.obj])
                .finish(),
        }
    }

    /// Action of `H ⊂ D(H)`.
    pub fn act_h(&self) -> LinMap {
        self.restrict(&self.d.embed_h, &self.d.h.obj)
    }

    /// Action of `B = (H^op)* ⊂ D(H)`.
    pub fn act_b(&self) -> LinMap {
        self.restrict(&self.d.embed_b, &self.d.b.obj)
    }

    /// Assembles `(f⊗h)·m = f·(h·m)` (left) or `m·(f⊗h) = (m·f)·h` (right).
    fn from_parts(d: &DoubleData, obj: &Obj, act_b: &LinMap, act_h: &LinMap, side: Side) -> Self {
        let ctx = &d.h.ctx;
        let (bo, ho, dobj) = (&d.b.obj, &d.h.obj, &d.hopf.obj);
        let action = match side {
            Side::Left => {
                Diagram::new(ctx, &[dobj, obj]).split(0, &[bo, ho]).map(1, act_h, &[obj]).map(0, act_b, &[obj]).finish()
            }
            Side::Right => {
                Diagram::new(ctx, &[obj, dobj]).split(1, &[bo, ho]).map(0, act_b, &[obj]).map(0, act_h, &[obj]).finish()
            }
        };
        DModule { d: d.clone(), obj: obj.clone(), action, side }
    }

    pub fn structure_eq(&self, other: &DModule) -> bool {
        self.side == other.side && self.dim() == other.dim() && self.action == other.action
    }
}

pub fn check_dmodule(m: &DModule) -> Report {
    check_action(&m.d.hopf, m.side, &m.action, m.dim())
}

/// Diagonal `D(H)`-action on `M⊗N`.
pub fn dmodule_tensor(m: &DModule, n: &DModule) -> Result<DModule> {
    if m.side != n.side {
        return Err(Error::VariantMismatch("left and right D(H)-modules".into()));
    }
    let ctx = m.ctx();
    let dd = &m.d.hopf;
    let (mo, no) = (&m.obj, &n.obj);
    let mn = ctx.tensor_obj(mo, no);
    let action = match m.side {
        Side::Left => Diagram::new(ctx, &[&dd.obj, mo, no])
            .delta(0, dd)
            .braid(1)
            .map(0, &m.action, &[mo])
            .map(1, &n.action, &[no])
            .merge(0, 2, &mn),
        Side::Right => Diagram::new(ctx, &[mo, no, &dd.obj])
            .delta(2, dd)
            .braid(1)
            .map(0, &m.action, &[mo])
            .map(1, &n.action, &[no])
            .merge(0, 2, &mn),
    }
    .finish();
    DModule::new(&m.d, &mn, &action, m.side)
}

/// `Φ(ℛ)`: the braiding of left `D(H)`-modules induced by the R-matrix.
pub fn psi_from_r(m: &DModule, n: &DModule) -> LinMap {
    let dobj = &m.d.hopf.obj;
    Diagram::new(m.ctx(), &[&m.obj, &n.obj])
        .map(0, &m.d.r_matrix, &[dobj, dobj])
        .braid(1)
        .map(0, &m.action, &[&m.obj])
        .map(1, &n.action, &[&n.obj])
        .braid(0)
        .finish()
}

/// `Ψ_{M,N}(m⊗n) = e^i·n ⊗ e_i·m` over the dual bases, with crossings from the context.
pub fn psi(m: &DModule, n: &DModule) -> LinMap {
    let ho = &m.d.h.obj;
    Diagram::new(m.ctx(), &[&m.obj, &n.obj])
        .coev(0, ho)
        .braid(1)
        .map(0, &m.act_h(), &[&m.obj])
        .map(1, &n.act_b(), &[&n.obj])
        .braid(0)
        .finish()
}

/// The braiding of right `D(H)`-modules: `m⊗n ↦ Φ^{-1}(m·e_i ⊗ n·e^i)`.
pub fn psi_r(m: &DModule, n: &DModule) -> LinMap {
    let ho = &m.d.h.obj;
    Diagram::new(m.ctx(), &[&m.obj, &n.obj])
        .coev(2, ho)
        .braid(0)
        .braid(1)
        .map(0, &n.act_h(), &[&n.obj])
        .map(1, &m.act_b(), &[&m.obj])
        .finish()
}

/// A left `H`-module used as a probe for half-braidings.
#[derive(Debug, Clone)]
pub struct Probe {
    pub obj: Obj,
    /// `[H, X] → [X]`.
    pub action: LinMap,
}

/// An object of the right center of left `H`-modules, restricted to a finite probe family.
///
/// `half[k]` is `c_{X_k, V}: X_k⊗V → V⊗X_k`; `pairs` lists `(i, j, k)` with `X_k = X_i⊗X_j`.
#[derive(Debug, Clone)]
pub struct CenterObject {
    pub h: Hopf,
    pub obj: Obj,
    pub action: LinMap,
    pub probes: Vec<Probe>,
    pub half: Vec<LinMap>,
    pub pairs: Vec<(usize, usize, usize)>,
}

impl CenterObject {
    pub fn structure_eq(&self, other: &CenterObject) -> bool {
        self.obj.dim() == other.obj.dim()
            && self.action == other.action
            && self.half.len() == other.half.len()
            && self.half.iter().zip(&other.half).all(|(a, b)| a == b)
    }
}

fn probe_tensor(h: &Hopf, x: &Probe, y: &Probe) -> Probe {
    let ctx = &h.ctx;
    let xy = ctx.tensor_obj(&x.obj, &y.obj);
    let action = Diagram::new(ctx, &[&h.obj, &x.obj, &y.obj])
        .delta(0, h)
        .braid(1)
        .map(0, &x.action, &[&x.obj])
        .map(1, &y.action, &[&y.obj])
        .merge(0, 2, &xy)
        .finish()
        .reshape(&[h.dim, xy.dim()], &[xy.dim()]);
    Probe { obj: xy, action }
}

/// The trivial module, the regular module, and their pairwise tensor products.
pub fn standard_center_probes(h: &Hopf) -> (Vec<Probe>, Vec<(usize, usize, usize)>) {
    let ctx = &h.ctx;
    let unit = ctx.unit_obj();
    let triv = Probe { obj: unit.clone(), action: Diagram::new(ctx, &[&h.obj, &unit]).eps(0, h).finish() };
    let reg = Probe { obj: h.obj.clone(), action: h.mult.clone() };
    let mut probes = vec![triv, reg];
    let mut pairs = vec![];
    for i in 0..2 {
        for j in 0..2 {
            pairs.push((i, j, probes.len()));
            let t = probe_tensor(h, &probes[i], &probes[j]);
            probes.push(t);
        }
    }
    (probes, pairs)
}

/// Index of the regular probe in [`standard_center_probes`].
pub const REGULAR_PROBE: usize = 1;
/// Index of the trivial probe in [`standard_center_probes`].
pub const TRIVIAL_PROBE: usize = 0;

fn probe_as_yd(h: &Hopf, p: &Probe) -> YdModule {
    let mut m = crate::yd::trivial_yd(h, &p.obj, Variant::LrHop);
    m.action = p.action.clone();
    m
}

/// Half-braidings `c_{X,M} = Φ^{1+}_{X,M}` on the standard probes.
pub fn to_center(m: &YdModule) -> Result<CenterObject> {
    if m.variant != Variant::LrHop {
        return Err(Error::VariantMismatch(format!("center needs LR_Hop, got {}", m.variant.tag())));
    }
    let (probes, pairs) = standard_center_probes(&m.h);
    require_transparent(&m.h, &[&m.obj], crate::context::probe_depth())?;
    let half = probes
        .iter()
        .map(|p| braiding_unchecked(&probe_as_yd(&m.h, p), m, Family::OnePlus, Direction::Forward))
        .collect();
    Ok(CenterObject { h: m.h.clone(), obj: m.obj.clone(), action: m.action.clone(), probes, half, pairs })
}

/// `ρ = c_{H,V}(η⊗V)` recovers the YD structure.
pub fn from_center(c: &CenterObject) -> Result<YdModule> {
    let h = &c.h;
    let reg = c
        .probes
        .iter()
        .position(|p| p.obj.dim() == h.dim && p.action == h.mult)
        .ok_or_else(|| Error::PreconditionViolated("the probe family lacks the regular module".into()))?;
    let coaction = Diagram::new(&h.ctx, &[&c.obj]).eta(0, h).map(0, &c.half[reg], &[&c.obj, &h.obj]).finish();
    YdModule::new(h, &c.obj, Variant::LrHop, &c.action, &coaction)
}

/// Braid relation, invertibility, `H`-linearity, naturality against right multiplications
/// on the regular probe, agreement with `Φ` on the trivial probe, and the identity
/// `c_{H,V} = (V⊗∇)(c_{H,V}(η⊗V)⊗H)Φ_{H,V}`.
pub fn check_center(c: &CenterObject) -> Report {
    let mut rep = Report::new();
    let h = &c.h;
    let ctx = &h.ctx;
    let v = &c.obj;
    let dv = v.dim();
    for (k, (p, cx)) in c.probes.iter().zip(&c.half).enumerate() {
        let dx = p.obj.dim();
        let inv = cx.reshape(&[dx * dv], &[dv * dx]).inverse();
        rep.flag(format!("center.invertible.{k}"), inv.is_ok(), "half-braiding is singular");
        // H-linearity: c(h·(x⊗v)) = h·c(x⊗v)
        let l = Diagram::new(ctx, &[&h.obj, &p.obj, v])
            .delta(0, h)
            .braid(1)
            .map(0, &p.action, &[&p.obj])
            .map(1, &c.action, &[v])
            .map(0, cx, &[v, &p.obj])
            .finish();
        let r = Diagram::new(ctx, &[&h.obj, &p.obj, v])
            .map(1, cx, &[v, &p.obj])
            .delta(0, h)
            .braid(1)
            .map(0, &c.action, &[v])
            .map(1, &p.action, &[&p.obj])
            .finish();
        rep.record(format!("center.linear.{k}"), map_equal(&l, &r));
    }
    for &(i, j, k) in &c.pairs {
        let (xi, xj) = (&c.probes[i].obj, &c.probes[j].obj);
        let lhs = c.half[k].reshape(&[xi.dim(), xj.dim(), dv], &[dv, xi.dim(), xj.dim()]);
        let rhs = Diagram::new(ctx, &[xi, xj, v]).map(1, &c.half[j], &[v, xj]).map(0, &c.half[i], &[v, xi]).finish();
        rep.record(format!("center.braid_rel.{i}.{j}"), map_equal(&lhs, &rhs));
    }
    if let Some(t) = c.probes.iter().position(|p| p.obj.dim() == 1 && is_counit_action(h, p)) {
        let phi = Diagram::new(ctx, &[&c.probes[t].obj, v]).braid(0).finish();
        rep.record("center.trivial_probe_is_braiding", map_equal(&c.half[t], &phi));
    }
    if let Some(reg) = c.probes.iter().position(|p| p.obj.dim() == h.dim && p.action == h.mult) {
        let ho = &h.obj;
        let cr = &c.half[reg];
        for a in 0..h.dim {
            let ra = Diagram::new(ctx, &[ho]).map(1, &basis_element(h, a), &[ho]).mu(0, h).finish();
            let l = Diagram::new(ctx, &[ho, v]).map(0, &ra, &[ho]).map(0, cr, &[v, ho]).finish();
            let r = Diagram::new(ctx, &[ho, v]).map(0, cr, &[v, ho]).map(1, &ra, &[ho]).finish();
            rep.record(format!("center.natural.right_mult.{a}"), map_equal(&l, &r));
        }
        let rho = Diagram::new(ctx, &[v]).eta(0, h).map(0, cr, &[v, ho]).finish();
        let r = Diagram::new(ctx, &[ho, v]).braid(0).map(0, &rho, &[v, ho]).mu(1, h).finish();
        rep.record("center.moj_uslov", map_equal(cr, &r));
    }
    rep
}

fn is_counit_action(h: &Hopf, p: &Probe) -> bool {
    let e = Diagram::new(&h.ctx, &[&h.obj, &p.obj]).eps(0, h).finish();
    p.action == e
}

fn basis_element(h: &Hopf, a: usize) -> LinMap {
    LinMap::from_fn(&[], &[h.dim], |c, _| if c == a { crate::scalars::Cyc::one() } else { crate::scalars::Cyc::zero() })
}

/// Every functor of the comparison diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FunctorId {
    F,
    G,
    #[serde(rename = "F_l")]
    Fl,
    #[serde(rename = "G_l")]
    Gl,
    L,
    A,
    #[serde(rename = "A_inv")]
    AInv,
    Ch,
    Ch1,
    Ch2,
    Bfun,
    E,
    #[serde(rename = "E_inv")]
    EInv,
    F1,
    #[serde(rename = "F1_inv")]
    F1Inv,
    F2,
    F3,
    F4,
    S,
    #[serde(rename = "S_inv")]
    SInv,
    T,
    #[serde(rename = "T_inv")]
    TInv,
    G1,
    G2,
    K,
    #[serde(rename = "K_inv")]
    KInv,
}

impl FunctorId {
    pub const ALL: [FunctorId; 26] = [
        FunctorId::F,
        FunctorId::G,
        FunctorId::Fl,
        FunctorId::Gl,
        FunctorId::L,
        FunctorId::A,
        FunctorId::AInv,
        FunctorId::Ch,
        FunctorId::Ch1,
        FunctorId::Ch2,
        FunctorId::Bfun,
        FunctorId::E,
        FunctorId::EInv,
        FunctorId::F1,
        FunctorId::F1Inv,
        FunctorId::F2,
        FunctorId::F3,
        FunctorId::F4,
        FunctorId::S,
        FunctorId::SInv,
        FunctorId::T,
        FunctorId::TInv,
        FunctorId::G1,
        FunctorId::G2,
        FunctorId::K,
        FunctorId::KInv,
    ];

    pub fn tag(self) -> &'static str {
        use FunctorId::*;
        match self {
            F => "F",
            G => "G",
            Fl => "F_l",
            Gl => "G_l",
            L => "L",
            A => "A",
            AInv => "A_inv",
            Ch => "Ch",
            Ch1 => "Ch1",
            Ch2 => "Ch2",
            Bfun => "Bfun",
            E => "E",
            EInv => "E_inv",
            F1 => "F1",
            F1Inv => "F1_inv",
            F2 => "F2",
            F3 => "F3",
            F4 => "F4",
            S => "S",
            SInv => "S_inv",
            T => "T",
            TInv => "T_inv",
            G1 => "G1",
            G2 => "G2",
            K => "K",
            KInv => "K_inv",
        }
    }

    pub fn parse(s: &str) -> Option<FunctorId> {
        FunctorId::ALL.into_iter().find(|f| f.tag() == s)
    }

    pub fn source(self) -> Source {
        use FunctorId::*;
        match self {
            F | Fl => Source::DMod(Side::Left),
            S | T | F3 => Source::DMod(Side::Right),
            G | AInv | Ch | Ch1 | Ch2 | F1Inv | K => Source::Yd(Variant::LrHop),
            Gl | L | F1 | F2 => Source::Yd(Variant::LL),
            A => Source::Yd(Variant::RlHcop),
            Bfun | EInv => Source::Yd(Variant::RlHop),
            E | TInv => Source::Yd(Variant::LrHcop),
            SInv | F4 | G1 | G2 => Source::Yd(Variant::RR),
            KInv => Source::Center,
        }
    }

    pub fn target(self) -> Source {
        use FunctorId::*;
        match self {
            G | Gl => Source::DMod(Side::Left),
            SInv | TInv => Source::DMod(Side::Right),
            F | F1 | A | Ch | Ch1 | Ch2 | KInv => Source::Yd(Variant::LrHop),
            Fl | F1Inv => Source::Yd(Variant::LL),
            F2 | AInv => Source::Yd(Variant::RlHcop),
            E | F3 | F4 | Bfun => Source::Yd(Variant::RlHop),
            T | EInv => Source::Yd(Variant::LrHcop),
            S | L => Source::Yd(Variant::RR),
            G1 | G2 => Source::Yd(Variant::LlCopOp),
            K => Source::Center,
        }
    }
}

/// The category a functor starts or ends in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Yd(Variant),
    DMod(Side),
    Center,
}

/// An object of one of the categories related by the functors.
#[derive(Debug, Clone)]
pub enum CatObj {
    Yd(YdModule),
    DMod(DModule),
    Center(CenterObject),
}

impl CatObj {
    pub fn kind(&self) -> Source {
        match self {
            CatObj::Yd(m) => Source::Yd(m.variant),
            CatObj::DMod(m) => Source::DMod(m.side),
            CatObj::Center(_) => Source::Center,
        }
    }

    pub fn structure_eq(&self, other: &CatObj) -> bool {
        match (self, other) {
            (CatObj::Yd(a), CatObj::Yd(b)) => a.structure_eq(b),
            (CatObj::DMod(a), CatObj::DMod(b)) => a.structure_eq(b),
            (CatObj::Center(a), CatObj::Center(b)) => a.structure_eq(b),
            _ => false,
        }
    }

    pub fn hopf(&self) -> &Hopf {
        match self {
            CatObj::Yd(m) => &m.h,
            CatObj::DMod(m) => &m.d.h,
            CatObj::Center(c) => &c.h,
        }
    }

    pub fn obj(&self) -> &Obj {
        match self {
            CatObj::Yd(m) => &m.obj,
            CatObj::DMod(m) => &m.obj,
            CatObj::Center(c) => &c.obj,
        }
    }

    pub fn yd(&self) -> Option<&YdModule> {
        match self {
            CatObj::Yd(m) => Some(m),
            _ => None,
        }
    }

    pub fn dmod(&self) -> Option<&DModule> {
        match self {
            CatObj::DMod(m) => Some(m),
            _ => None,
        }
    }

    /// The structure laws of the object's category.
    pub fn check(&self) -> Report {
        match self {
            CatObj::Yd(m) => check_yd(m),
            CatObj::DMod(m) => check_dmodule(m),
            CatObj::Center(c) => check_center(c),
        }
    }
}

fn yd(h: &Hopf, obj: &Obj, v: Variant, a: LinMap, c: LinMap) -> YdModule {
    YdModule::new(h, obj, v, &a, &c).expect("functor output shapes")
}

fn double_of(h: &Hopf) -> Result<DoubleData> {
    drinfeld_double(h)
}

/// The structure maps of each functor. Inputs are assumed to match the source signature.
mod raw {
    use super::*;

    pub fn f(m: &DModule) -> YdModule {
        let ho = &m.d.h.obj;
        let rho = Diagram::new(m.ctx(), &[&m.obj]).coev(0, ho).map(1, &m.act_b(), &[&m.obj]).braid(0).finish();
        yd(&m.d.h, &m.obj, Variant::LrHop, m.act_h(), rho)
    }

    pub fn g(k: &YdModule, d: &DoubleData) -> DModule {
        let bo = &d.b.obj;
        let act_b = Diagram::new(k.ctx(), &[bo, &k.obj]).coact(k, 1).braid(0).ev(1).finish();
        DModule::from_parts(d, &k.obj, &act_b, &k.action, Side::Left)
    }

    pub fn fl(m: &DModule) -> YdModule {
        let ho = &m.d.h.obj;
        let lambda = Diagram::new(m.ctx(), &[&m.obj]).coev(0, ho).s(0, &m.d.h).map(1, &m.act_b(), &[&m.obj]).finish();
        yd(&m.d.h, &m.obj, Variant::LL, m.act_h(), lambda)
    }

    pub fn gl(n: &YdModule, d: &DoubleData) -> DModule {
        let bo = &d.b.obj;
        let act_b = Diagram::new(n.ctx(), &[bo, &n.obj]).coact(n, 1).sinv(1, &n.h).ev(0).finish();
        DModule::from_parts(d, &n.obj, &act_b, &n.action, Side::Left)
    }

    pub fn l(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let a = Diagram::new(m.ctx(), &[o, &h.obj]).ibraid(0).sinv(0, h).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).s(0, h).braid(0).finish();
        yd(h, o, Variant::RR, a, c)
    }

    pub fn l_inv(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let a = Diagram::new(m.ctx(), &[&h.obj, o]).s(0, h).braid(0).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).ibraid(0).sinv(0, h).finish();
        yd(h, o, Variant::LL, a, c)
    }

    pub fn a(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let a = Diagram::new(m.ctx(), &[&h.obj, o]).ibraid(0).s(1, h).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).sinv(0, h).braid(0).finish();
        yd(h, o, Variant::LrHop, a, c)
    }

    pub fn a_inv(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let a = Diagram::new(m.ctx(), &[o, &h.obj]).sinv(1, h).braid(0).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).ibraid(0).s(0, h).finish();
        yd(h, o, Variant::RlHcop, a, c)
    }

    /// `H`-structures transported to `H^{op,cop}`: `ρ' = (M⊗S^{-1})ρ`, `h·'m = S(h)·m`.
    pub fn ch(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let k = op_cop(h, OpCop::OpCop);
        let a = Diagram::new(m.ctx(), &[&h.obj, o]).s(0, h).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).sinv(1, h).finish();
        yd(&k, o, Variant::LrHop, a, c)
    }

    pub fn ch_inv(m: &YdModule, h: &Hopf) -> YdModule {
        let o = &m.obj;
        let a = Diagram::new(m.ctx(), &[&h.obj, o]).sinv(0, h).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).s(1, h).finish();
        yd(h, o, Variant::LrHop, a, c)
    }

    /// `λ' = (S^{-1}⊗M)λ`, `m·'h = m·S(h)`.
    pub fn bfun(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let k = op_cop(h, OpCop::OpCop);
        let a = Diagram::new(m.ctx(), &[o, &h.obj]).s(1, h).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).sinv(0, h).finish();
        yd(&k, o, Variant::RlHop, a, c)
    }

    pub fn bfun_inv(m: &YdModule, h: &Hopf) -> YdModule {
        let o = &m.obj;
        let a = Diagram::new(m.ctx(), &[o, &h.obj]).sinv(1, h).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).s(0, h).finish();
        yd(h, o, Variant::RlHop, a, c)
    }

    pub fn e(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let a = Diagram::new(m.ctx(), &[o, &h.obj]).sinv(1, h).braid(0).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).ibraid(0).s(0, h).finish();
        yd(h, o, Variant::RlHop, a, c)
    }

    pub fn e_inv(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let a = Diagram::new(m.ctx(), &[&h.obj, o]).s(0, h).ibraid(0).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).braid(0).sinv(1, h).finish();
        yd(h, o, Variant::LrHcop, a, c)
    }

    pub fn f1(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).sinv(0, h).braid(0).finish();
        yd(h, o, Variant::LrHop, m.action.clone(), c)
    }

    pub fn f1_inv(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).s(1, h).ibraid(0).finish();
        yd(h, o, Variant::LL, m.action.clone(), c)
    }

    /// Coaction `m ↦ m·e^i ⊗ S(e_i)` shared by `S` and `T`.
    fn s_coaction(m: &DModule) -> LinMap {
        let ho = &m.d.h.obj;
        Diagram::new(m.ctx(), &[&m.obj]).coev_prime(1, ho).map(0, &m.act_b(), &[&m.obj]).s(1, &m.d.h).finish()
    }

    pub fn s(m: &DModule) -> YdModule {
        yd(&m.d.h, &m.obj, Variant::RR, m.act_h(), s_coaction(m))
    }

    /// `n·f = ⟨f, S^{-1}(n1)⟩ n0` after the crossing.
    fn b_action_from_right_coaction(n: &YdModule, d: &DoubleData) -> LinMap {
        let bo = &d.b.obj;
        Diagram::new(n.ctx(), &[&n.obj, bo]).coact(n, 0).sinv(1, &n.h).ev_prime(1).finish()
    }

    pub fn s_inv(n: &YdModule, d: &DoubleData) -> DModule {
        let act_b = b_action_from_right_coaction(n, d);
        DModule::from_parts(d, &n.obj, &act_b, &n.action, Side::Right)
    }

    pub fn t(m: &DModule) -> YdModule {
        let h = &m.d.h;
        let a = Diagram::new(m.ctx(), &[&h.obj, &m.obj]).braid(0).sinv(1, h).map(0, &m.act_h(), &[&m.obj]).finish();
        yd(h, &m.obj, Variant::LrHcop, a, s_coaction(m))
    }

    pub fn t_inv(n: &YdModule, d: &DoubleData) -> DModule {
        let h = &n.h;
        let act_h = Diagram::new(n.ctx(), &[&n.obj, &h.obj]).s(1, h).ibraid(0).act(n, 0).finish();
        let act_b = b_action_from_right_coaction(n, d);
        DModule::from_parts(d, &n.obj, &act_b, &act_h, Side::Right)
    }

    pub fn g1(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let a = Diagram::new(m.ctx(), &[&h.obj, o]).sinv(0, h).ibraid(0).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).braid(0).s(0, h).finish();
        yd(h, o, Variant::LlCopOp, a, c)
    }

    pub fn g1_inv(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let a = Diagram::new(m.ctx(), &[o, &h.obj]).braid(0).s(0, h).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).sinv(0, h).ibraid(0).finish();
        yd(h, o, Variant::RR, a, c)
    }

    pub fn g2(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let a = Diagram::new(m.ctx(), &[&h.obj, o]).s(0, h).braid(0).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).ibraid(0).sinv(0, h).finish();
        yd(h, o, Variant::LlCopOp, a, c)
    }

    pub fn g2_inv(m: &YdModule) -> YdModule {
        let (h, o) = (&m.h, &m.obj);
        let a = Diagram::new(m.ctx(), &[o, &h.obj]).ibraid(0).sinv(0, h).act(m, 0).finish();
        let c = Diagram::new(m.ctx(), &[o]).coact(m, 0).s(0, h).braid(0).finish();
        yd(h, o, Variant::RR, a, c)
    }
}

fn check_source(fid: FunctorId, x: &CatObj) -> Result<()> {
    let want = fid.source();
    if x.kind() != want {
        return Err(Error::SignatureMismatch(format!("{} expects {:?}, got {:?}", fid.tag(), want, x.kind())));
    }
    Ok(())
}

/// Transparency of `H` is needed by every functor touching a mixed variant or `D(H)`.
fn check_transparency(fid: FunctorId, x: &CatObj) -> Result<()> {
    let needs = |s: Source| match s {
        Source::Yd(v) => v.needs_transparency(),
        Source::DMod(_) | Source::Center => true,
    };
    if needs(fid.source()) || needs(fid.target()) {
        require_transparent(x.hopf(), &[x.obj()], crate::context::probe_depth())?;
    }
    Ok(())
}

/// Applies a functor to an object, enforcing its source signature and transparency hypothesis.
pub fn apply_functor(fid: FunctorId, x: &CatObj) -> Result<CatObj> {
    check_source(fid, x)?;
    check_transparency(fid, x)?;
    apply_unchecked(fid, x)
}

fn apply_unchecked(fid: FunctorId, x: &CatObj) -> Result<CatObj> {
    use FunctorId::*;
    let out = match (fid, x) {
        (F, CatObj::DMod(m)) => CatObj::Yd(raw::f(m)),
        (Fl, CatObj::DMod(m)) => CatObj::Yd(raw::fl(m)),
        (S, CatObj::DMod(m)) => CatObj::Yd(raw::s(m)),
        (T, CatObj::DMod(m)) => CatObj::Yd(raw::t(m)),
        (F3, CatObj::DMod(m)) => CatObj::Yd(raw::e(&raw::t(m))),
        (G, CatObj::Yd(k)) => CatObj::DMod(raw::g(k, &double_of(&k.h)?)),
        (Gl, CatObj::Yd(k)) => CatObj::DMod(raw::gl(k, &double_of(&k.h)?)),
        (SInv, CatObj::Yd(k)) => CatObj::DMod(raw::s_inv(k, &double_of(&k.h)?)),
        (TInv, CatObj::Yd(k)) => CatObj::DMod(raw::t_inv(k, &double_of(&k.h)?)),
        (L, CatObj::Yd(m)) => CatObj::Yd(raw::l(m)),
        (A, CatObj::Yd(m)) => CatObj::Yd(raw::a(m)),
        (AInv, CatObj::Yd(m)) => CatObj::Yd(raw::a_inv(m)),
        (Ch | Ch1 | Ch2, CatObj::Yd(m)) => CatObj::Yd(raw::ch(m)),
        (Bfun, CatObj::Yd(m)) => CatObj::Yd(raw::bfun(m)),
        (E, CatObj::Yd(m)) => CatObj::Yd(raw::e(m)),
        (EInv, CatObj::Yd(m)) => CatObj::Yd(raw::e_inv(m)),
        (F1, CatObj::Yd(m)) => CatObj::Yd(raw::f1(m)),
        (F1Inv, CatObj::Yd(m)) => CatObj::Yd(raw::f1_inv(m)),
        (F2, CatObj::Yd(m)) => CatObj::Yd(raw::a_inv(&raw::f1(m))),
        (F4, CatObj::Yd(m)) => {
            let d = double_of(&m.h)?;
            CatObj::Yd(raw::e(&raw::t(&raw::s_inv(m, &d))))
        }
        (G1, CatObj::Yd(m)) => CatObj::Yd(raw::g1(m)),
        (G2, CatObj::Yd(m)) => CatObj::Yd(raw::g2(m)),
        (K, CatObj::Yd(m)) => CatObj::Center(to_center(m)?),
        (KInv, CatObj::Center(c)) => CatObj::Yd(from_center(c)?),
        _ => return Err(Error::SignatureMismatch(format!("{} cannot act on {:?}", fid.tag(), x.kind()))),
    };
    Ok(out)
}

/// The inverse of a functor, applied to an object of its target.
fn apply_inverse(fid: FunctorId, y: &CatObj, original: &CatObj) -> Result<CatObj> {
    use FunctorId::*;
    let h = original.hopf();
    let out = match (fid, y) {
        (F, CatObj::Yd(k)) => CatObj::DMod(raw::g(k, &original.dmod().expect("source").d)),
        (Fl, CatObj::Yd(k)) => CatObj::DMod(raw::gl(k, &original.dmod().expect("source").d)),
        (S, CatObj::Yd(k)) => CatObj::DMod(raw::s_inv(k, &original.dmod().expect("source").d)),
        (T, CatObj::Yd(k)) => CatObj::DMod(raw::t_inv(k, &original.dmod().expect("source").d)),
        (F3, CatObj::Yd(k)) => CatObj::DMod(raw::t_inv(&raw::e_inv(k), &original.dmod().expect("source").d)),
        (G, CatObj::DMod(m)) => CatObj::Yd(raw::f(m)),
        (Gl, CatObj::DMod(m)) => CatObj::Yd(raw::fl(m)),
        (SInv, CatObj::DMod(m)) => CatObj::Yd(raw::s(m)),
        (TInv, CatObj::DMod(m)) => CatObj::Yd(raw::t(m)),
        (L, CatObj::Yd(m)) => CatObj::Yd(raw::l_inv(m)),
        (A, CatObj::Yd(m)) => CatObj::Yd(raw::a_inv(m)),
        (AInv, CatObj::Yd(m)) => CatObj::Yd(raw::a(m)),
        (Ch | Ch1 | Ch2, CatObj::Yd(m)) => CatObj::Yd(raw::ch_inv(m, h)),
        (Bfun, CatObj::Yd(m)) => CatObj::Yd(raw::bfun_inv(m, h)),
        (E, CatObj::Yd(m)) => CatObj::Yd(raw::e_inv(m)),
        (EInv, CatObj::Yd(m)) => CatObj::Yd(raw::e(m)),
        (F1, CatObj::Yd(m)) => CatObj::Yd(raw::f1_inv(m)),
        (F1Inv, CatObj::Yd(m)) => CatObj::Yd(raw::f1(m)),
        (F2, CatObj::Yd(m)) => CatObj::Yd(raw::f1_inv(&raw::a(m))),
        (F4, CatObj::Yd(m)) => {
            let d = double_of(h)?;
            CatObj::Yd(raw::s(&raw::t_inv(&raw::e_inv(m), &d)))
        }
        (G1, CatObj::Yd(m)) => CatObj::Yd(raw::g1_inv(m)),
        (G2, CatObj::Yd(m)) => CatObj::Yd(raw::g2_inv(m)),
        (K, CatObj::Center(c)) => CatObj::Yd(from_center(c)?),
        (KInv, CatObj::Yd(m)) => CatObj::Center(to_center(m)?),
        _ => return Err(Error::SignatureMismatch(format!("no inverse of {} on {:?}", fid.tag(), y.kind()))),
    };
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Roundtrip,
    Monoidal,
    Braided,
}

impl Property {
    pub fn parse(s: &str) -> Option<Property> {
        match s {
            "roundtrip" => Some(Property::Roundtrip),
            "monoidal" => Some(Property::Monoidal),
            "braided" => Some(Property::Braided),
            _ => None,
        }
    }
}

fn tensor(x: &CatObj, y: &CatObj) -> Result<CatObj> {
    match (x, y) {
        (CatObj::Yd(a), CatObj::Yd(b)) => Ok(CatObj::Yd(tensor_unchecked(a, b))),
        (CatObj::DMod(a), CatObj::DMod(b)) => Ok(CatObj::DMod(dmodule_tensor(a, b)?)),
        _ => Err(Error::PreconditionViolated("tensor products of center objects are not formed".into())),
    }
}

/// Compares the parts of two objects that a functor tag is responsible for.
fn compare(rep: &mut Report, id: &str, fid: FunctorId, a: &CatObj, b: &CatObj) {
    match (a, b) {
        (CatObj::Yd(a), CatObj::Yd(b)) => {
            let act = matches!(fid, FunctorId::Ch1) || !matches!(fid, FunctorId::Ch2);
            let coact = matches!(fid, FunctorId::Ch2) || !matches!(fid, FunctorId::Ch1);
            if act {
                rep.record(format!("{id}.action"), map_equal(&a.action, &b.action));
            }
            if coact {
                rep.record(format!("{id}.coaction"), map_equal(&a.coaction, &b.coaction));
            }
        }
        (CatObj::DMod(a), CatObj::DMod(b)) => rep.record(format!("{id}.action"), map_equal(&a.action, &b.action)),
        (CatObj::Center(a), CatObj::Center(b)) => {
            rep.record(format!("{id}.action"), map_equal(&a.action, &b.action));
            for (k, (x, y)) in a.half.iter().zip(&b.half).enumerate() {
                rep.record(format!("{id}.half.{k}"), map_equal(x, y));
            }
        }
        _ => rep.fail(id, "objects of different categories"),
    }
}

/// Named braiding on a pair of objects of one category.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Braid {
    Yd(Family),
    /// The inverse of the family's braiding on the swapped pair.
    YdRev(Family),
    Psi,
    /// `Ψ^{-1}` on the swapped pair.
    PsiRev,
    PsiR,
    PsiRRev,
    Center,
}

impl Braid {
    fn label(self) -> String {
        match self {
            Braid::Yd(f) => format!("Phi{}", f.tag()),
            Braid::YdRev(f) => format!("inv(Phi{}_rev)", f.tag()),
            Braid::Psi => "Psi".into(),
            Braid::PsiRev => "inv(Psi_rev)".into(),
            Braid::PsiR => "PsiR".into(),
            Braid::PsiRRev => "inv(PsiR_rev)".into(),
            Braid::Center => "center".into(),
        }
    }

    fn eval(self, x: &CatObj, y: &CatObj) -> Result<LinMap> {
        match (self, x, y) {
            (Braid::Yd(f), CatObj::Yd(a), CatObj::Yd(b)) => Ok(braiding_unchecked(a, b, f, Direction::Forward)),
            (Braid::YdRev(f), CatObj::Yd(a), CatObj::Yd(b)) => Ok(braiding_unchecked(b, a, f, Direction::Inverse)),
            (Braid::Psi, CatObj::DMod(a), CatObj::DMod(b)) => Ok(psi(a, b)),
            (Braid::PsiRev, CatObj::DMod(a), CatObj::DMod(b)) => {
                let p = psi(b, a);
                Ok(p.reshape(&[b.dim() * a.dim()], &[a.dim() * b.dim()])
                    .inverse()?
                    .reshape(&[a.dim(), b.dim()], &[b.dim(), a.dim()]))
            }
            (Braid::PsiR, CatObj::DMod(a), CatObj::DMod(b)) => Ok(psi_r(a, b)),
            (Braid::PsiRRev, CatObj::DMod(a), CatObj::DMod(b)) => {
                let p = psi_r(b, a);
                Ok(p.reshape(&[b.dim() * a.dim()], &[a.dim() * b.dim()])
                    .inverse()?
                    .reshape(&[a.dim(), b.dim()], &[b.dim(), a.dim()]))
            }
            (Braid::Center, CatObj::Center(_), CatObj::Center(c)) => {
                // c_{X,V} with X the first object viewed as a probe
                let xa = match x {
                    CatObj::Center(a) => a,
                    _ => unreachable!(),
                };
                let p = Probe { obj: xa.obj.clone(), action: xa.action.clone() };
                let m = from_center(c)?;
                Ok(braiding_unchecked(&probe_as_yd(&c.h, &p), &m, Family::OnePlus, Direction::Forward))
            }
            _ => Err(Error::SignatureMismatch("braiding does not apply to these objects".into())),
        }
    }
}

/// Source braiding and the admissible target braidings of each braided claim.
fn braided_claim(fid: FunctorId) -> Option<(Braid, Vec<Braid>)> {
    use Braid::*;
    use Family::*;
    use FunctorId as X;
    let both = |f: Family, g: Family| vec![Yd(f), YdRev(f), Yd(g), YdRev(g)];
    Some(match fid {
        X::F => (Psi, vec![Yd(OnePlus)]),
        X::G => (Yd(OnePlus), vec![Psi]),
        X::Fl => (Psi, vec![Yd(L), YdRev(L)]),
        X::Gl => (Yd(L), vec![Psi, PsiRev]),
        X::L => (Yd(L), vec![Yd(R), YdRev(R)]),
        X::A => (Yd(ThreePlus), vec![Yd(OnePlus)]),
        X::AInv => (Yd(OnePlus), vec![Yd(ThreePlus)]),
        X::Ch => (Yd(OnePlus), vec![Yd(TwoPlus)]),
        X::E => (Yd(TwoPlus), vec![Yd(FourPlus)]),
        X::EInv => (Yd(FourPlus), vec![Yd(TwoPlus)]),
        X::F1 => (Yd(L), vec![Yd(OnePlus), YdRev(OneMinus)]),
        X::F1Inv => (Yd(OnePlus), vec![Yd(L), YdRev(L)]),
        X::F2 => (Yd(L), both(ThreePlus, ThreeMinus)),
        X::F3 => (PsiR, both(FourPlus, FourMinus)),
        X::F4 => (Yd(R), both(FourPlus, FourMinus)),
        X::S => (PsiR, vec![Yd(R), YdRev(R)]),
        X::SInv => (Yd(R), vec![PsiR, PsiRRev]),
        X::T => (PsiR, vec![Yd(TwoMinus), YdRev(TwoMinus)]),
        X::TInv => (Yd(TwoMinus), vec![PsiR, PsiRRev]),
        X::G1 | X::G2 => (Yd(R), vec![Yd(G), YdRev(G)]),
        X::K => (Yd(OnePlus), vec![Center]),
        X::KInv => (Center, vec![Yd(OnePlus)]),
        X::Ch1 | X::Ch2 | X::Bfun => return None,
    })
}

/// Whether the property is claimed to hold for the functor.
pub fn expected(fid: FunctorId, property: Property) -> bool {
    !(property == Property::Braided && matches!(fid, FunctorId::L | FunctorId::Ch))
}

/// Round-trip, monoidality or braiding preservation of a functor on `M` (and `N`).
pub fn check_functor(fid: FunctorId, m: &CatObj, n: Option<&CatObj>, property: Property) -> Result<Report> {
    check_source(fid, m)?;
    check_transparency(fid, m)?;
    if let Some(n) = n {
        check_source(fid, n)?;
        check_transparency(fid, n)?;
    }
    let mut rep = Report::new();
    let t = fid.tag();
    match property {
        Property::Roundtrip => {
            let fm = apply_unchecked(fid, m)?;
            rep.extend(&format!("{t}.image."), fm.check());
            let back = apply_inverse(fid, &fm, m)?;
            compare(&mut rep, &format!("{t}.roundtrip"), fid, &back, m);
        }
        Property::Monoidal => {
            let n = n.ok_or_else(|| Error::PreconditionViolated("monoidality needs a second object".into()))?;
            let fmn = apply_unchecked(fid, &tensor(m, n)?)?;
            let fmfn = tensor(&apply_unchecked(fid, m)?, &apply_unchecked(fid, n)?)?;
            match fid {
                FunctorId::Ch | FunctorId::Bfun => {
                    let (a, b) = (fmn.yd().expect("yd"), fmfn.yd().expect("yd"));
                    let p = if fid == FunctorId::Ch { "ch" } else { "b" };
                    rep.record(format!("{t}.monoidal.{p}1.action"), map_equal(&a.action, &b.action));
                    rep.record(format!("{t}.monoidal.{p}2.coaction"), map_equal(&a.coaction, &b.coaction));
                }
                _ => compare(&mut rep, &format!("{t}.monoidal"), fid, &fmn, &fmfn),
            }
        }
        Property::Braided => {
            let n = n.ok_or_else(|| Error::PreconditionViolated("braidings need a second object".into()))?;
            let Some((src, tgts)) = braided_claim(fid) else {
                rep.precondition(format!("{t}.braided"), "no braided claim for a restricted functor");
                return Ok(rep);
            };
            let (fm, fn_) = (apply_unchecked(fid, m)?, apply_unchecked(fid, n)?);
            let s = src.eval(m, n)?;
            let mut any = false;
            let mut witnesses = vec![];
            for b in &tgts {
                let tb = b.eval(&fm, &fn_)?;
                let e = map_equal(&s, &tb.reshape(s.dom(), s.cod()));
                rep.note(format!("{t}.braided.{}->{}", src.label(), b.label()), e.holds());
                if let Some(w) = e.witness() {
                    witnesses.push(format!("{}: {w}", b.label()));
                }
                any |= e.holds();
            }
            rep.flag(format!("{t}.braided"), any, witnesses.join("; "));
        }
    }
    Ok(rep)
}

/// `D(H)`-modules → YD → center on the regular module, with braidings compared.
pub fn embedding_check(h: &Hopf, depth: usize) -> Result<Report> {
    let ctx = &h.ctx;
    if !ctx.is_vec() {
        let probes = ctx.standard_probes(depth);
        let t = ctx.is_transparent(&h.obj, &probes);
        if !t.transparent {
            return Err(Error::TransparencyViolated(format!(
                "H is not in the Müger center: probe {:?}: {}",
                t.failing_probe,
                t.witness.unwrap_or_default()
            )));
        }
    }
    let d = drinfeld_double(h)?;
    let reg = DModule::regular(&d, Side::Left);
    let mut rep = Report::new();
    let ym = raw::f(&reg);
    rep.extend("yd.", check_yd(&ym));
    let c = to_center(&ym)?;
    rep.extend("", check_center(&c));
    let c_mm = braiding_unchecked(&ym, &ym, Family::OnePlus, Direction::Forward);
    rep.record("braiding.psi_is_center_braiding", map_equal(&psi(&reg, &reg), &c_mm));
    rep.record("braiding.psi_is_phi_r", map_equal(&psi(&reg, &reg), &psi_from_r(&reg, &reg)));
    Ok(rep)
}

/// The two commuting squares and the triangle `F = F1∘F_l`, on the regular modules of `D(H)`.
pub fn check_rectangles(h: &Hopf) -> Result<Report> {
    use FunctorId::*;
    let d = drinfeld_double(h)?;
    let mut rep = Report::new();
    let left = CatObj::DMod(DModule::regular(&d, Side::Left));
    let right = CatObj::DMod(DModule::regular(&d, Side::Right));
    let chain = |fs: &[FunctorId], x: &CatObj| -> Result<CatObj> {
        fs.iter().try_fold(x.clone(), |acc, &f| apply_functor(f, &acc))
    };
    let a = chain(&[F, AInv], &left)?;
    let b = chain(&[Fl, F2], &left)?;
    compare(&mut rep, "rectangle.left", F, &a, &b);
    let a = chain(&[T, E], &right)?;
    let b = chain(&[S, F4], &right)?;
    compare(&mut rep, "rectangle.right", F, &a, &b);
    let a = chain(&[F], &left)?;
    let b = chain(&[Fl, F1], &left)?;
    compare(&mut rep, "triangle.f1", F, &a, &b);
    Ok(rep)
}

/// Dual-basis identities used by the functor proofs.
pub fn check_functor_identities(h: &Hopf) -> Result<Report> {
    let ctx = &h.ctx;
    let ho = &h.obj;
    let mut rep = Report::new();
    let loop_h = Diagram::new(ctx, &[ho]).coev(0, ho).ibraid(0).ibraid(1).ev(0).finish();
    rep.record("petlja_h", map_equal(&loop_h, &LinMap::identity(&[h.dim])));
    let d = drinfeld_double(h)?;
    let lhs = Diagram::new(ctx, &[]).coev(0, ho).delta(1, &d.b).finish();
    let rhs = Diagram::new(ctx, &[]).coev(0, ho).coev(2, ho).ibraid(1).braid(0).mu(0, h).finish();
    rep.record("yddh_monoidal", map_equal(&lhs, &rhs));
    Ok(rep)
}

/// Small objects of each category over `h`, built from the two adjoint LL modules.
///
/// D-module samples are the regular module and one 1·dim(H) module from a YD image.
pub fn sample_objects(h: &Hopf, src: Source) -> Result<Vec<CatObj>> {
    use FunctorId::*;
    let ll = vec![CatObj::Yd(crate::yd::adjoint_ll_module(h)), CatObj::Yd(crate::yd::coadjoint_ll_module(h))];
    let map = |f: FunctorId, xs: &[CatObj]| xs.iter().map(|x| apply_functor(f, x)).collect::<Result<Vec<_>>>();
    let mut lr = map(F1, &ll)?;
    lr.push(CatObj::Yd(crate::yd::adjoint_yd_module(h)));
    let rr = map(L, &ll)?;
    Ok(match src {
        Source::Yd(Variant::LL) => ll,
        Source::Yd(Variant::LrHop) => lr,
        Source::Yd(Variant::RR) => rr,
        Source::Yd(Variant::RlHcop) => map(AInv, &lr)?,
        Source::Yd(Variant::RlHop) => map(F4, &rr)?,
        Source::Yd(Variant::LrHcop) => map(EInv, &map(F4, &rr)?)?,
        Source::Yd(Variant::LlCopOp) => map(G1, &rr)?,
        Source::DMod(side) => {
            let d = double_of(h)?;
            let small = match side {
                Side::Left => apply_functor(G, &lr[0])?,
                Side::Right => apply_functor(SInv, &rr[0])?,
            };
            vec![CatObj::DMod(DModule::regular(&d, side)), small]
        }
        Source::Center => map(K, &lr)?,
    })
}

/// Every sample YD module over `h`, across all variants.
pub fn builtin_yd_modules(h: &Hopf) -> Result<Vec<YdModule>> {
    let mut out = vec![];
    for v in Variant::ALL {
        for x in sample_objects(h, Source::Yd(v))? {
            out.push(x.yd().expect("YD sample").clone());
        }
    }
    Ok(out)
}
