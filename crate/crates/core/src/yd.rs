//! Yetter-Drinfel'd modules in all side/op/cop variants: compatibility checks with their
//! equivalent reformulations, tensor products and braidings.

use serde::{Deserialize, Serialize};

use crate::context::{Ctx, Diagram, Obj};
use crate::error::{Error, Result};
use crate::hopf::{check_action, check_coaction, check_morphism, op_cop, Hopf, OpCop, Side};
use crate::multilinear::{map_equal, LinMap};
use crate::report::Report;
use crate::scalars::Cyc;

/// Which Yetter-Drinfel'd category a module lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Left module, left comodule.
    #[serde(rename = "LL")]
    LL,
    /// Right module, right comodule.
    #[serde(rename = "RR")]
    RR,
    /// Left `H`-module, right `H^op`-comodule.
    #[serde(rename = "LR_Hop")]
    LrHop,
    /// Left `H^cop`-module, right `H`-comodule.
    #[serde(rename = "LR_Hcop")]
    LrHcop,
    /// Right `H^cop`-module, left `H`-comodule.
    #[serde(rename = "RL_Hcop")]
    RlHcop,
    /// Right `H`-module, left `H^op`-comodule.
    #[serde(rename = "RL_Hop")]
    RlHop,
    /// Left `H^cop`-module, left `H^op`-comodule.
    #[serde(rename = "LL_cop_op", alias = "RR_mixed_G1")]
    LlCopOp,
}

impl Variant {
    pub const ALL: [Variant; 7] =
        [Variant::LL, Variant::RR, Variant::LrHop, Variant::LrHcop, Variant::RlHcop, Variant::RlHop, Variant::LlCopOp];

    pub fn action_side(self) -> Side {
        match self {
            Variant::LL | Variant::LrHop | Variant::LrHcop | Variant::LlCopOp => Side::Left,
            Variant::RR | Variant::RlHcop | Variant::RlHop => Side::Right,
        }
    }

    pub fn coaction_side(self) -> Side {
        match self {
            Variant::LL | Variant::RlHcop | Variant::RlHop | Variant::LlCopOp => Side::Left,
            Variant::RR | Variant::LrHop | Variant::LrHcop => Side::Right,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Variant::LL => "LL",
            Variant::RR => "RR",
            Variant::LrHop => "LR_Hop",
            Variant::LrHcop => "LR_Hcop",
            Variant::RlHcop => "RL_Hcop",
            Variant::RlHop => "RL_Hop",
            Variant::LlCopOp => "LL_cop_op",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        if s == "RR_mixed_G1" {
            return Some(Variant::LlCopOp);
        }
        Variant::ALL.into_iter().find(|v| v.tag() == s)
    }

    /// Whether the category needs `Φ_{H,M}` symmetric to be monoidal.
    pub fn needs_transparency(self) -> bool {
        !matches!(self, Variant::LL | Variant::RR)
    }

    /// Acting-side decoration: the tensor product uses `Δ^cop`.
    fn module_cop(self) -> bool {
        matches!(self, Variant::LrHcop | Variant::RlHcop | Variant::LlCopOp)
    }

    /// Coacting-side decoration: the tensor product uses `∇^op`.
    fn comodule_op(self) -> bool {
        matches!(self, Variant::LrHop | Variant::RlHop | Variant::LlCopOp)
    }
}

/// A braiding family on one of the YD categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    L,
    R,
    #[serde(rename = "1+")]
    OnePlus,
    #[serde(rename = "1-")]
    OneMinus,
    #[serde(rename = "2+")]
    TwoPlus,
    #[serde(rename = "2-")]
    TwoMinus,
    #[serde(rename = "3+")]
    ThreePlus,
    #[serde(rename = "3-")]
    ThreeMinus,
    #[serde(rename = "4+")]
    FourPlus,
    #[serde(rename = "4-")]
    FourMinus,
    /// The braiding of the left `H^cop`-module, left `H^op`-comodule category.
    #[serde(rename = "G")]
    G,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::L,
        Family::R,
        Family::OnePlus,
        Family::OneMinus,
        Family::TwoPlus,
        Family::TwoMinus,
        Family::ThreePlus,
        Family::ThreeMinus,
        Family::FourPlus,
        Family::FourMinus,
        Family::G,
    ];

    pub fn variant(self) -> Variant {
        match self {
            Family::L => Variant::LL,
            Family::R => Variant::RR,
            Family::OnePlus | Family::OneMinus => Variant::LrHop,
            Family::TwoPlus | Family::TwoMinus => Variant::LrHcop,
            Family::ThreePlus | Family::ThreeMinus => Variant::RlHcop,
            Family::FourPlus | Family::FourMinus => Variant::RlHop,
            Family::G => Variant::LlCopOp,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Family::L => "L",
            Family::R => "R",
            Family::OnePlus => "1+",
            Family::OneMinus => "1-",
            Family::TwoPlus => "2+",
            Family::TwoMinus => "2-",
            Family::ThreePlus => "3+",
            Family::ThreeMinus => "3-",
            Family::FourPlus => "4+",
            Family::FourMinus => "4-",
            Family::G => "G",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.tag() == s)
    }

    /// The families braiding a variant.
    pub fn of(v: Variant) -> Vec<Family> {
        Family::ALL.into_iter().filter(|f| f.variant() == v).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Forward,
    Inverse,
}

/// An object with an action and a coaction of `h`, tagged with its variant.
///
/// Shapes: left action `[H, M] → [M]`, right action `[M, H] → [M]`,
/// left coaction `[M] → [H, M]`, right coaction `[M] → [M, H]`.
#[derive(Debug, Clone)]
pub struct YdModule {
    pub h: Hopf,
    pub obj: Obj,
    pub action: LinMap,
    pub coaction: LinMap,
    pub variant: Variant,
}

/// Diagram steps that use the structure of a YD module.
pub trait YdOps {
    fn act(self, m: &YdModule, at: usize) -> Self;
    fn coact(self, m: &YdModule, at: usize) -> Self;
}

impl YdOps for Diagram {
    fn act(self, m: &YdModule, at: usize) -> Self {
        self.map(at, &m.action, &[&m.obj])
    }

    fn coact(self, m: &YdModule, at: usize) -> Self {
        match m.variant.coaction_side() {
            Side::Left => self.map(at, &m.coaction, &[&m.h.obj, &m.obj]),
            Side::Right => self.map(at, &m.coaction, &[&m.obj, &m.h.obj]),
        }
    }
}

impl YdModule {
    pub fn new(h: &Hopf, obj: &Obj, variant: Variant, action: &LinMap, coaction: &LinMap) -> Result<Self> {
        let (d, dm) = (h.dim, obj.dim());
        let adom = match variant.action_side() {
            Side::Left => vec![d, dm],
            Side::Right => vec![dm, d],
        };
        let ccod = match variant.coaction_side() {
            Side::Left => vec![d, dm],
            Side::Right => vec![dm, d],
        };
        if action.dom_size() != d * dm || action.cod_size() != dm {
            return Err(Error::SignatureMismatch(format!(
                "action {:?}->{:?} does not fit {adom:?}->[{dm}]",
                action.dom(),
                action.cod()
            )));
        }
        if coaction.dom_size() != dm || coaction.cod_size() != d * dm {
            return Err(Error::SignatureMismatch(format!(
                "coaction {:?}->{:?} does not fit [{dm}]->{ccod:?}",
                coaction.dom(),
                coaction.cod()
            )));
        }
        h.ctx.validate(obj)?;
        Ok(YdModule {
            h: h.clone(),
            obj: obj.clone(),
            action: action.reshape(&adom, &[dm]),
            coaction: coaction.reshape(&[dm], &ccod),
            variant,
        })
    }

    pub fn dim(&self) -> usize {
        self.obj.dim()
    }

    pub fn ctx(&self) -> &Ctx {
        &self.h.ctx
    }

    /// The same data with another variant tag.
    pub fn retag(&self, variant: Variant) -> Result<Self> {
        YdModule::new(&self.h, &self.obj, variant, &self.action, &self.coaction)
    }

    /// Equality of all structure constants and tags.
    pub fn structure_eq(&self, other: &YdModule) -> bool {
        self.variant == other.variant
            && self.dim() == other.dim()
            && self.h.structure_eq(&other.h)
            && self.action == other.action
            && self.coaction == other.coaction
    }

    fn diagram_hm(&self) -> Diagram {
        let (h, m) = (&self.h.obj, &self.obj);
        match self.variant.action_side() {
            Side::Left => Diagram::new(self.ctx(), &[h, m]),
            Side::Right => Diagram::new(self.ctx(), &[m, h]),
        }
    }
}

/// `Φ_{X,Y}` equals `Φ_{Y,X}^{-1}`.
pub fn pair_symmetric(ctx: &Ctx, x: &Obj, y: &Obj) -> bool {
    if ctx.is_vec() {
        return true;
    }
    let dd = Diagram::new(ctx, &[x, y]).braid(0).braid(0).finish();
    map_equal(&dd, &LinMap::identity(&[x.dim(), y.dim()])).holds()
}

/// Module and comodule laws, plus context-linearity of both structure maps.
pub fn check_structure(m: &YdModule) -> Report {
    let mut rep = Report::new();
    rep.extend("", check_action(&m.h, m.variant.action_side(), &m.action, m.dim()));
    rep.extend("", check_coaction(&m.h, m.variant.coaction_side(), &m.coaction, m.dim()));
    if !m.ctx().is_vec() {
        let (h, o) = (&m.h.obj, &m.obj);
        let a = match m.variant.action_side() {
            Side::Left => check_morphism(m.ctx(), &m.action, &[h, o], &[o]),
            Side::Right => check_morphism(m.ctx(), &m.action, &[o, h], &[o]),
        };
        rep.record("module.ctx_morphism", a);
        let c = match m.variant.coaction_side() {
            Side::Left => check_morphism(m.ctx(), &m.coaction, &[o], &[h, o]),
            Side::Right => check_morphism(m.ctx(), &m.coaction, &[o], &[o, h]),
        };
        rep.record("comodule.ctx_morphism", c);
    }
    rep
}

/// One compatibility condition: both sides as maps, plus the symmetry it presupposes.
struct Condition {
    id: &'static str,
    lhs: LinMap,
    rhs: LinMap,
    /// `Some(reason)` when the condition is only meaningful under a failed symmetry hypothesis.
    blocked: Option<&'static str>,
}

fn left_yd(m: &YdModule, k: &Hopf) -> Condition {
    let d = || m.diagram_hm();
    let lhs = d().delta(0, k).braid(1).act(m, 0).coact(m, 0).braid(1).mu(0, k).finish();
    let rhs = d().delta(0, k).coact(m, 2).braid(1).mu(0, k).act(m, 1).finish();
    Condition { id: "left_yd", lhs, rhs, blocked: None }
}

fn left_yd_oth(m: &YdModule, k: &Hopf) -> Condition {
    let d = || m.diagram_hm();
    let lhs = d().act(m, 0).coact(m, 0).finish();
    let rhs =
        d().delta(0, k).delta(1, k).coact(m, 3).braid(1).s(1, k).braid(2).braid(1).mu(1, k).act(m, 2).mu(0, k).finish();
    let blocked = (!pair_symmetric(m.ctx(), &k.obj, &m.obj)).then_some("Φ_{H,M} is not symmetric");
    Condition { id: "left_yd_oth", lhs, rhs, blocked }
}

fn right_yd(m: &YdModule, k: &Hopf) -> Condition {
    let d = || m.diagram_hm();
    let lhs = d().delta(1, k).braid(0).act(m, 1).coact(m, 1).braid(0).mu(1, k).finish();
    let rhs = d().coact(m, 0).delta(2, k).braid(1).act(m, 0).mu(1, k).finish();
    Condition { id: "right_yd", lhs, rhs, blocked: None }
}

fn right_yd_oth(m: &YdModule, k: &Hopf) -> Condition {
    let d = || m.diagram_hm();
    let lhs = d().act(m, 0).coact(m, 0).finish();
    let rhs =
        d().delta(1, k).coact(m, 0).delta(2, k).braid(2).braid(1).s(3, k).braid(2).act(m, 0).mu(1, k).mu(1, k).finish();
    let blocked = (!pair_symmetric(m.ctx(), &k.obj, &m.obj)).then_some("Φ_{H,M} is not symmetric");
    Condition { id: "right_yd_oth", lhs, rhs, blocked }
}

fn yd_mix(m: &YdModule, k: &Hopf, star: bool) -> Condition {
    let d = || m.diagram_hm();
    let lhs = d().delta(0, k).act(m, 1);
    let lhs = if star { lhs.braid(0) } else { lhs.ibraid(0) };
    let lhs = lhs.coact(m, 0).mu(1, k).finish();
    let rhs = d().delta(0, k).coact(m, 2).braid(1).act(m, 0).mu(1, k).finish();
    let blocked = (star && !k.braiding_symmetric()).then_some("Φ_{H,H} is not symmetric");
    Condition { id: if star { "yd_mix_star" } else { "yd_mix" }, lhs, rhs, blocked }
}

fn yd_s(m: &YdModule, k: &Hopf, star: bool) -> Condition {
    let d = || m.diagram_hm();
    let lhs = d().act(m, 0).coact(m, 0).finish();
    let rhs = d().delta(0, k).delta(1, k).coact(m, 3).sinv(0, k).braid(2).act(m, 1).mu(2, k);
    let rhs = if star { rhs.braid(0).braid(1) } else { rhs.ibraid(0).ibraid(1) };
    let rhs = rhs.mu(1, k).finish();
    let blocked = (star && !k.braiding_symmetric()).then_some("Φ_{H,H} is not symmetric");
    Condition { id: if star { "yd_s_star" } else { "yd_s" }, lhs, rhs, blocked }
}

fn yd_other_mix(m: &YdModule, k: &Hopf) -> Condition {
    let d = || m.diagram_hm();
    let lhs = d().delta(1, k).act(m, 0).braid(0).coact(m, 1).mu(0, k).finish();
    let rhs = d().coact(m, 0).delta(2, k).braid(1).mu(0, k).act(m, 1).finish();
    Condition { id: "yd_other_mix", lhs, rhs, blocked: None }
}

fn yd_s_other(m: &YdModule, k: &Hopf) -> Condition {
    let d = || m.diagram_hm();
    let lhs = d().act(m, 0).coact(m, 0).finish();
    let rhs = d()
        .delta(1, k)
        .delta(1, k)
        .coact(m, 0)
        .sinv(4, k)
        .braid(1)
        .mu(0, k)
        .act(m, 1)
        .braid(1)
        .braid(0)
        .mu(0, k)
        .finish();
    let blocked = (!k.braiding_symmetric()).then_some("Φ_{H,H} is not symmetric");
    Condition { id: "yd_s_other", lhs, rhs, blocked }
}

/// Primary condition first, then equivalent reformulations grouped in agreeing pairs.
fn conditions(m: &YdModule) -> (Condition, Vec<(Condition, Condition)>) {
    let k = m.h.clone();
    match m.variant {
        Variant::LL | Variant::LlCopOp => (left_yd(m, &k), vec![(left_yd(m, &k), left_yd_oth(m, &k))]),
        Variant::RR => (right_yd(m, &k), vec![(right_yd(m, &k), right_yd_oth(m, &k))]),
        Variant::LrHop | Variant::LrHcop => (
            yd_mix(m, &k, false),
            vec![(yd_mix(m, &k, false), yd_s(m, &k, false)), (yd_mix(m, &k, true), yd_s(m, &k, true))],
        ),
        Variant::RlHcop | Variant::RlHop => (yd_other_mix(m, &k), vec![(yd_other_mix(m, &k), yd_s_other(m, &k))]),
    }
}

/// Outcome of one condition: `None` when its hypothesis fails.
fn evaluate(rep: &mut Report, c: &Condition) -> Option<bool> {
    if let Some(why) = c.blocked {
        rep.precondition(format!("yd.{}", c.id), why);
        return None;
    }
    let e = map_equal(&c.lhs, &c.rhs);
    let ok = e.holds();
    if rep.get(&format!("yd.{}", c.id)).is_none() {
        rep.record(format!("yd.{}", c.id), e);
    }
    Some(ok)
}

/// Structure laws, the primary compatibility condition, every equivalent form
/// and an agreement flag per equivalence.
///
/// Checks of the form `yd.<condition>`; agreement as `agree.<a>.<b>`. An equivalent form
/// whose symmetry hypothesis fails is reported as a precondition and not compared.
pub fn check_yd(m: &YdModule) -> Report {
    let mut rep = Report::new();
    rep.extend("", check_structure(m));
    let (primary, pairs) = conditions(m);
    let primary_ok = evaluate(&mut rep, &primary).unwrap_or(false);
    rep.note("yd.primary_holds", primary_ok);
    for (a, b) in &pairs {
        let (x, y) = (evaluate(&mut rep, a), evaluate(&mut rep, b));
        let id = format!("agree.{}.{}", a.id, b.id);
        match (x, y) {
            (Some(x), Some(y)) => rep.flag(id, x == y, format!("{}={x} {}={y}", a.id, b.id)),
            _ => rep.precondition(id, "symmetry hypothesis of the equivalence fails"),
        }
    }
    rep
}

/// Structure laws and primary condition hold.
pub fn is_yd(m: &YdModule) -> bool {
    let rep = check_structure(m);
    rep.all_pass() && {
        let (c, _) = conditions(m);
        c.blocked.is_none() && map_equal(&c.lhs, &c.rhs).holds()
    }
}

/// Pairs `(primary, equivalent)` evaluated on `m`, skipping blocked ones.
pub fn equivalence_outcomes(m: &YdModule) -> Vec<(String, bool, bool)> {
    let (_, pairs) = conditions(m);
    pairs
        .iter()
        .filter(|(a, b)| a.blocked.is_none() && b.blocked.is_none())
        .map(|(a, b)| {
            (format!("{}<=>{}", a.id, b.id), map_equal(&a.lhs, &a.rhs).holds(), map_equal(&b.lhs, &b.rhs).holds())
        })
        .collect()
}

/// Checks `Φ_{H,X}` symmetric for `H` against the standard probes and the given objects.
pub(crate) fn require_transparent(h: &Hopf, extra: &[&Obj], depth: usize) -> Result<()> {
    let ctx = &h.ctx;
    if ctx.is_vec() {
        return Ok(());
    }
    let mut probes = ctx.standard_probes(depth);
    probes.extend(extra.iter().map(|o| (*o).clone()));
    let t = ctx.is_transparent(&h.obj, &probes);
    if t.transparent {
        Ok(())
    } else {
        Err(Error::TransparencyViolated(format!(
            "Φ_{{H,X}} not symmetric for probe {:?}: {}",
            t.failing_probe,
            t.witness.unwrap_or_default()
        )))
    }
}

fn same_base(m: &YdModule, n: &YdModule) -> Result<()> {
    if m.variant != n.variant {
        return Err(Error::VariantMismatch(format!("{} vs {}", m.variant.tag(), n.variant.tag())));
    }
    if !m.ctx().same(n.ctx()) || !m.h.structure_eq(&n.h) {
        return Err(Error::VariantMismatch("modules over different Hopf algebras".into()));
    }
    Ok(())
}

/// Diagonal action and codiagonal coaction on `M⊗N`.
pub fn yd_tensor(m: &YdModule, n: &YdModule) -> Result<YdModule> {
    same_base(m, n)?;
    if m.variant.needs_transparency() {
        require_transparent(&m.h, &[&m.obj, &n.obj], crate::context::probe_depth())?;
    }
    Ok(tensor_unchecked(m, n))
}

pub(crate) fn tensor_unchecked(m: &YdModule, n: &YdModule) -> YdModule {
    let v = m.variant;
    let ctx = m.ctx();
    let h = &m.h;
    let mn = ctx.tensor_obj(&m.obj, &n.obj);
    let (mo, no, ho) = (&m.obj, &n.obj, &h.obj);
    let km = if v.module_cop() { op_cop(h, OpCop::Cop) } else { h.clone() };
    let kc = if v.comodule_op() { op_cop(h, OpCop::Op) } else { h.clone() };
    let action = match v.action_side() {
        Side::Left => Diagram::new(ctx, &[ho, mo, no]).delta(0, &km).braid(1).act(m, 0).act(n, 1).merge(0, 2, &mn),
        Side::Right => Diagram::new(ctx, &[mo, no, ho]).delta(2, &km).braid(1).act(m, 0).act(n, 1).merge(0, 2, &mn),
    }
    .finish();
    let coaction = match (v, v.coaction_side()) {
        (Variant::RR, _) => Diagram::new(ctx, &[mo, no]).coact(m, 0).coact(n, 2).braid(1).mu(2, &kc).merge(0, 2, &mn),
        (_, Side::Right) => Diagram::new(ctx, &[mo, no]).coact(m, 0).coact(n, 2).ibraid(1).mu(2, &kc).merge(0, 2, &mn),
        (Variant::LL, _) => Diagram::new(ctx, &[mo, no]).coact(m, 0).coact(n, 2).braid(1).mu(0, &kc).merge(1, 2, &mn),
        (_, Side::Left) => Diagram::new(ctx, &[mo, no]).coact(m, 0).coact(n, 2).ibraid(1).mu(0, &kc).merge(1, 2, &mn),
    }
    .finish();
    YdModule::new(h, &mn, v, &action, &coaction).expect("tensor shapes")
}

/// The braiding `M⊗N → N⊗M` of the given family, or its inverse `N⊗M → M⊗N`.
pub fn yd_braiding(m: &YdModule, n: &YdModule, family: Family, direction: Direction) -> Result<LinMap> {
    same_base(m, n)?;
    if family.variant() != m.variant {
        return Err(Error::VariantMismatch(format!(
            "family {} braids {}, modules are {}",
            family.tag(),
            family.variant().tag(),
            m.variant.tag()
        )));
    }
    if m.variant.needs_transparency() {
        require_transparent(&m.h, &[&m.obj, &n.obj], crate::context::probe_depth())?;
    }
    Ok(braiding_unchecked(m, n, family, direction))
}

pub(crate) fn braiding_unchecked(m: &YdModule, n: &YdModule, family: Family, direction: Direction) -> LinMap {
    let ctx = m.ctx();
    let h = &m.h;
    let (mo, no) = (&m.obj, &n.obj);
    let fwd = Diagram::new(ctx, &[mo, no]);
    let inv = Diagram::new(ctx, &[no, mo]);
    use Direction::*;
    use Family::*;
    match (family, direction) {
        (L, Forward) => fwd.coact(m, 0).braid(1).act(n, 0),
        (L, Inverse) => inv.coact(m, 1).ibraid(0).sinv(0, h).act(n, 0).ibraid(0),
        (R, Forward) => fwd.coact(n, 1).braid(0).act(m, 1),
        (R, Inverse) => inv.coact(n, 0).sinv(1, h).ibraid(1).act(m, 1).ibraid(0),
        (OnePlus, Forward) => fwd.braid(0).coact(n, 0).act(m, 1),
        (OnePlus, Inverse) => inv.coact(n, 0).s(1, h).act(m, 1).ibraid(0),
        (OneMinus, Forward) => fwd.ibraid(0).coact(n, 0).act(m, 1),
        (OneMinus, Inverse) => inv.coact(n, 0).s(1, h).act(m, 1).braid(0),
        (TwoPlus, Forward) => fwd.coact(m, 0).act(n, 1).braid(0),
        (TwoPlus, Inverse) => inv.ibraid(0).coact(m, 0).s(1, h).act(n, 1),
        (TwoMinus, Forward) => fwd.coact(m, 0).act(n, 1).ibraid(0),
        (TwoMinus, Inverse) => inv.braid(0).coact(m, 0).s(1, h).act(n, 1),
        (ThreePlus, Forward) => fwd.coact(n, 1).act(m, 0).braid(0),
        (ThreePlus, Inverse) => inv.ibraid(0).coact(n, 1).s(1, h).act(m, 0),
        (ThreeMinus, Forward) => fwd.coact(n, 1).act(m, 0).ibraid(0),
        (ThreeMinus, Inverse) => inv.braid(0).coact(n, 1).s(1, h).act(m, 0),
        (FourPlus, Forward) => fwd.braid(0).coact(m, 1).act(n, 0),
        (FourPlus, Inverse) => inv.coact(m, 1).s(1, h).act(n, 0).ibraid(0),
        (FourMinus, Forward) => fwd.ibraid(0).coact(m, 1).act(n, 0),
        (FourMinus, Inverse) => inv.coact(m, 1).s(1, h).act(n, 0).braid(0),
        (G, Forward) => fwd.braid(0).coact(n, 0).braid(0).act(m, 1),
        (G, Inverse) => inv.coact(n, 0).sinv(0, h).ibraid(0).act(m, 1).ibraid(0),
    }
    .finish()
}

/// `M` with the trivial action (through the counit) and trivial coaction (through the unit).
pub fn trivial_yd(h: &Hopf, obj: &Obj, variant: Variant) -> YdModule {
    let ctx = &h.ctx;
    let (ho, o) = (&h.obj, obj);
    let action = match variant.action_side() {
        Side::Left => Diagram::new(ctx, &[ho, o]).eps(0, h),
        Side::Right => Diagram::new(ctx, &[o, ho]).eps(1, h),
    }
    .finish();
    let coaction = match variant.coaction_side() {
        Side::Left => Diagram::new(ctx, &[o]).eta(0, h),
        Side::Right => Diagram::new(ctx, &[o]).eta(1, h),
    }
    .finish();
    YdModule::new(h, obj, variant, &action, &coaction).expect("trivial shapes")
}

/// `H` with the regular left action and the adjoint right coaction
/// `h ↦ h2 ⊗ h3 S^{-1}(h1)` (crossings taken inverse).
pub fn adjoint_yd_module(h: &Hopf) -> YdModule {
    let coaction = h.diagram(1).delta(0, h).delta(1, h).sinv(0, h).ibraid(0).ibraid(1).mu(1, h).finish();
    YdModule::new(h, &h.obj, Variant::LrHop, &h.mult, &coaction).expect("adjoint shapes")
}

/// Coaction induced by a quasitriangular structure on a module over `a` in `Vec`:
/// left `λ(m) = R2 ⊗ R1·m` (an LL module), right `ρ(m) = m·R1 ⊗ R2` (an RR module).
pub fn qt_induced_yd(a: &Hopf, r: &LinMap, m: &Obj, action: &LinMap, side: Side) -> Result<YdModule> {
    let qt = crate::context::check_quasitriangular(a, r)?;
    if qt.any_fail() {
        let w = qt.first_failure().map(|c| c.check.clone()).unwrap_or_default();
        return Err(Error::NotQuasitriangular(w));
    }
    let d = a.dim;
    let r = r.reshape(&[], &[d, d]);
    let ctx = &a.ctx;
    let ao = &a.obj;
    let dm = m.dim();
    let (variant, coaction) = match side {
        Side::Left => {
            let act = action.reshape(&[d, dm], &[dm]);
            // R ⊗ m → R1 m ⊗ R2 → R2 ⊗ R1 m
            let rm = r.tensor(&LinMap::identity(&[dm]));
            let c = Diagram::from_map(ctx, &rm, &[ao, ao, m]).swap(1).map(0, &act, &[m]).swap(0).finish();
            (Variant::LL, c)
        }
        Side::Right => {
            let act = action.reshape(&[dm, d], &[dm]);
            // m ⊗ R → m R1 ⊗ R2
            let mr = LinMap::identity(&[dm]).tensor(&r);
            let c = Diagram::from_map(ctx, &mr, &[m, ao, ao]).map(0, &act, &[m]).finish();
            (Variant::RR, c)
        }
    };
    YdModule::new(a, m, variant, action, &coaction)
}

/// Every single-entry perturbation (+1) of the action and the coaction.
pub fn mutants(m: &YdModule) -> Vec<YdModule> {
    let mut out = vec![];
    let one = Cyc::one();
    for which in 0..2 {
        let base = if which == 0 { &m.action } else { &m.coaction };
        for k in 0..base.entries().len() {
            let mut e = base.entries().to_vec();
            e[k] = &e[k] + &one;
            let f = LinMap::from_entries(base.dom(), base.cod(), e).expect("same shape");
            let mut mu = m.clone();
            if which == 0 {
                mu.action = f;
            } else {
                mu.coaction = f;
            }
            out.push(mu);
        }
    }
    out
}

/// The hexagon identities for a braiding family on a triple.
pub fn check_hexagons(x: &YdModule, y: &YdModule, z: &YdModule, family: Family) -> Result<Report> {
    let mut rep = Report::new();
    let c = |a: &YdModule, b: &YdModule| yd_braiding(a, b, family, Direction::Forward);
    let ctx = x.ctx();
    let (xo, yo, zo) = (&x.obj, &y.obj, &z.obj);
    let xy = yd_tensor(x, y)?;
    let yz = yd_tensor(y, z)?;
    let lhs = c(&xy, z)?.reshape(&[xo.dim(), yo.dim(), zo.dim()], &[zo.dim(), xo.dim(), yo.dim()]);
    let rhs = Diagram::new(ctx, &[xo, yo, zo]).map(1, &c(y, z)?, &[zo, yo]).map(0, &c(x, z)?, &[zo, xo]).finish();
    rep.record(format!("hexagon.left.{}", family.tag()), map_equal(&lhs, &rhs));
    let lhs = c(x, &yz)?.reshape(&[xo.dim(), yo.dim(), zo.dim()], &[yo.dim(), zo.dim(), xo.dim()]);
    let rhs = Diagram::new(ctx, &[xo, yo, zo]).map(0, &c(x, y)?, &[yo, xo]).map(1, &c(x, z)?, &[zo, xo]).finish();
    rep.record(format!("hexagon.right.{}", family.tag()), map_equal(&lhs, &rhs));
    Ok(rep)
}

/// `f: M → N` intertwines actions and coactions.
pub fn check_yd_morphism(m: &YdModule, n: &YdModule, f: &LinMap) -> Report {
    let mut rep = Report::new();
    let ctx = m.ctx();
    let h = &m.h.obj;
    let (mo, no) = (&m.obj, &n.obj);
    let f = f.reshape(&[mo.dim()], &[no.dim()]);
    let (l, r) = match m.variant.action_side() {
        Side::Left => (
            Diagram::new(ctx, &[h, mo]).act(m, 0).map(0, &f, &[no]).finish(),
            Diagram::new(ctx, &[h, mo]).map(1, &f, &[no]).act(n, 0).finish(),
        ),
        Side::Right => (
            Diagram::new(ctx, &[mo, h]).act(m, 0).map(0, &f, &[no]).finish(),
            Diagram::new(ctx, &[mo, h]).map(0, &f, &[no]).act(n, 0).finish(),
        ),
    };
    rep.record("morphism.linear", map_equal(&l, &r));
    let (l, r) = match m.variant.coaction_side() {
        Side::Left => (
            Diagram::new(ctx, &[mo]).coact(m, 0).map(1, &f, &[no]).finish(),
            Diagram::new(ctx, &[mo]).map(0, &f, &[no]).coact(n, 0).finish(),
        ),
        Side::Right => (
            Diagram::new(ctx, &[mo]).coact(m, 0).map(0, &f, &[no]).finish(),
            Diagram::new(ctx, &[mo]).map(0, &f, &[no]).coact(n, 0).finish(),
        ),
    };
    rep.record("morphism.colinear", map_equal(&l, &r));
    rep
}

/// Invertibility, linearity and colinearity of one family on a pair.
pub fn check_braiding_pair(m: &YdModule, n: &YdModule, family: Family) -> Result<Report> {
    let mut rep = Report::new();
    let t = family.tag();
    let f = yd_braiding(m, n, family, Direction::Forward)?;
    let g = yd_braiding(m, n, family, Direction::Inverse)?;
    let (dm, dn) = (m.dim(), n.dim());
    let fg = LinMap::compose(&f, &g.reshape(&[dn, dm], &[dm, dn])).map_err(Error::Map)?;
    let gf = LinMap::compose(&g, &f.reshape(&[dm, dn], &[dn, dm])).map_err(Error::Map)?;
    rep.record(format!("invertible.{t}.fwd_inv"), map_equal(&fg, &LinMap::identity(&[dn, dm])));
    rep.record(format!("invertible.{t}.inv_fwd"), map_equal(&gf, &LinMap::identity(&[dm, dn])));
    let mn = yd_tensor(m, n)?;
    let nm = yd_tensor(n, m)?;
    let flat = f.reshape(&[dm * dn], &[dn * dm]);
    rep.extend(&format!("{t}."), check_yd_morphism(&mn, &nm, &flat));
    Ok(rep)
}

/// Naturality of a family against a YD morphism `f: M → M'` in the first slot.
pub fn check_naturality(m: &YdModule, m2: &YdModule, f: &LinMap, n: &YdModule, family: Family) -> Result<Report> {
    let mut rep = Report::new();
    let ctx = m.ctx();
    let (mo, m2o, no) = (&m.obj, &m2.obj, &n.obj);
    let f = f.reshape(&[mo.dim()], &[m2o.dim()]);
    let c1 = yd_braiding(m, n, family, Direction::Forward)?;
    let c2 = yd_braiding(m2, n, family, Direction::Forward)?;
    let l = Diagram::new(ctx, &[mo, no]).map(0, &f, &[m2o]).map(0, &c2, &[no, m2o]).finish();
    let r = Diagram::new(ctx, &[mo, no]).map(0, &c1, &[no, mo]).map(1, &f, &[m2o]).finish();
    rep.record(format!("natural.first.{}", family.tag()), map_equal(&l, &r));
    let c1 = yd_braiding(n, m, family, Direction::Forward)?;
    let c2 = yd_braiding(n, m2, family, Direction::Forward)?;
    let l = Diagram::new(ctx, &[no, mo]).map(1, &f, &[m2o]).map(0, &c2, &[m2o, no]).finish();
    let r = Diagram::new(ctx, &[no, mo]).map(0, &c1, &[mo, no]).map(0, &f, &[m2o]).finish();
    rep.record(format!("natural.second.{}", family.tag()), map_equal(&l, &r));
    Ok(rep)
}

/// `H` with the regular left action and the left adjoint coaction `h ↦ h1 S(h3) ⊗ h2`.
pub fn adjoint_ll_module(h: &Hopf) -> YdModule {
    let coaction = h.diagram(1).delta(0, h).delta(1, h).s(2, h).braid(1).mu(0, h).finish();
    YdModule::new(h, &h.obj, Variant::LL, &h.mult, &coaction).expect("adjoint shapes")
}

/// `H` with the left adjoint action `h·x = h1 x S(h2)` and the regular left coaction.
pub fn coadjoint_ll_module(h: &Hopf) -> YdModule {
    let o = &h.obj;
    let action = Diagram::new(&h.ctx, &[o, o]).delta(0, h).braid(1).s(2, h).mu(0, h).mu(0, h).finish();
    YdModule::new(h, o, Variant::LL, &action, &h.comult).expect("adjoint shapes")
}
