//! The ambient braided category and a small string-diagram compiler.
//!
//! A context is either plain vector spaces with the swap, or left modules over
//! an ordinary quasitriangular Hopf algebra `(A, R)` braided by
//! `Φ(x ⊗ y) = R2·y ⊗ R1·x`. With this orientation the coproduct axioms that
//! make Φ a braiding are `(Δ⊗id)R = R13·R23` and `(id⊗Δ)R = R13·R12`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{Hopf, Kind};
use crate::multilinear::{self, map_equal, size, LinMap, Op, Program, Vector};
use crate::report::Report;
use crate::scalars::Cyc;

/// An object of the ambient category: a based space, with a left A-action in module contexts.
#[derive(Clone)]
pub struct Obj(Arc<ObjData>);

pub struct ObjData {
    pub dim: usize,
    pub action: Option<LinMap>,
}

impl Obj {
    pub fn plain(dim: usize) -> Self {
        Obj(Arc::new(ObjData { dim, action: None }))
    }

    /// An object carrying `action: [dimA, d] → [d]`, validated against the context.
    pub fn module(ctx: &Ctx, action: LinMap) -> Result<Self> {
        let o = Obj::with_action(action);
        ctx.validate(&o)?;
        Ok(o)
    }

    pub(crate) fn with_action(action: LinMap) -> Self {
        let dim = action.cod()[0];
        Obj(Arc::new(ObjData { dim, action: Some(action) }))
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn action(&self) -> Option<&LinMap> {
        self.0.action.as_ref()
    }
}

impl fmt::Debug for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Obj(dim={}, module={})", self.dim(), self.action().is_some())
    }
}

pub enum CtxKind {
    Vec,
    ModOver { a: Hopf, r: LinMap, r_inv: LinMap },
}

/// The ambient braided category.
#[derive(Clone)]
pub struct Ctx(Arc<CtxKind>);

impl fmt::Debug for Ctx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            CtxKind::Vec => write!(f, "Vec"),
            CtxKind::ModOver { a, .. } => write!(f, "ModOver({})", a.name),
        }
    }
}

impl Ctx {
    pub fn vec() -> Self {
        Ctx(Arc::new(CtxKind::Vec))
    }

    /// Modules over `(a, r)`; refuses unless `r` passes the quasitriangularity check.
    pub fn mod_over(a: &Hopf, r: &LinMap) -> Result<Self> {
        if !a.ctx.is_vec() {
            return Err(Error::PreconditionViolated("module contexts are built over Hopf algebras in Vec".into()));
        }
        let rep = check_quasitriangular(a, r)?;
        if let Some(c) = rep.checks.iter().find(|c| c.check != "triangular" && c.status != crate::report::Status::Pass)
        {
            return Err(Error::NotQuasitriangular(format!("{}: {}", c.check, c.witness.clone().unwrap_or_default())));
        }
        let r_inv = r_inverse(a, r);
        Ok(Ctx(Arc::new(CtxKind::ModOver { a: a.clone(), r: r.clone(), r_inv })))
    }

    pub fn kind(&self) -> &CtxKind {
        &self.0
    }

    pub fn is_vec(&self) -> bool {
        matches!(&*self.0, CtxKind::Vec)
    }

    pub fn same(&self, other: &Ctx) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.is_vec() && other.is_vec())
    }

    /// The acting algebra of a module context.
    pub fn algebra(&self) -> Option<&Hopf> {
        match &*self.0 {
            CtxKind::Vec => None,
            CtxKind::ModOver { a, .. } => Some(a),
        }
    }

    pub fn r_matrix(&self) -> Option<&LinMap> {
        match &*self.0 {
            CtxKind::Vec => None,
            CtxKind::ModOver { r, .. } => Some(r),
        }
    }

    /// Checks associativity and unitality of an object's action.
    pub fn validate(&self, x: &Obj) -> Result<()> {
        match (&*self.0, x.action()) {
            (CtxKind::Vec, None) => Ok(()),
            (CtxKind::Vec, Some(_)) => Err(Error::NotAModule("Vec objects carry no action".into())),
            (CtxKind::ModOver { .. }, None) => Err(Error::NotAModule("missing action".into())),
            (CtxKind::ModOver { a, .. }, Some(act)) => {
                let rep = crate::hopf::check_module(a, act, x.dim());
                match rep.first_failure() {
                    None => Ok(()),
                    Some(c) => {
                        Err(Error::NotAModule(format!("{}: {}", c.check, c.witness.clone().unwrap_or_default())))
                    }
                }
            }
        }
    }

    pub fn unit_obj(&self) -> Obj {
        match &*self.0 {
            CtxKind::Vec => Obj::plain(1),
            CtxKind::ModOver { a, .. } => Obj::with_action(a.counit.reshape(&[a.dim, 1], &[1])),
        }
    }

    /// The regular module of the acting algebra (or a plain space of the given dimension in Vec).
    pub fn regular_obj(&self, vec_dim: usize) -> Obj {
        match &*self.0 {
            CtxKind::Vec => Obj::plain(vec_dim),
            CtxKind::ModOver { a, .. } => Obj::with_action(a.mult.clone()),
        }
    }

    /// `X ⊗ Y` with the diagonal action.
    pub fn tensor_obj(&self, x: &Obj, y: &Obj) -> Obj {
        match &*self.0 {
            CtxKind::Vec => Obj::plain(x.dim() * y.dim()),
            CtxKind::ModOver { a, .. } => {
                let (ax, ay) = (x.action().expect("module"), y.action().expect("module"));
                let d = a.dim;
                let prog = Program {
                    dom: vec![d, x.dim(), y.dim()],
                    ops: vec![
                        Op::Apply { at: 0, f: Arc::new(a.comult.clone()) },
                        Op::Swap { at: 1 },
                        Op::Apply { at: 0, f: Arc::new(ax.clone()) },
                        Op::Apply { at: 1, f: Arc::new(ay.clone()) },
                        Op::Merge { at: 0, k: 2 },
                    ],
                };
                let m = prog.to_map(&[x.dim() * y.dim()]);
                Obj::with_action(m.reshape(&[d, x.dim() * y.dim()], &[x.dim() * y.dim()]))
            }
        }
    }

    pub fn tensor_objs(&self, xs: &[&Obj]) -> Obj {
        let mut acc = self.unit_obj();
        for (k, x) in xs.iter().enumerate() {
            acc = if k == 0 { (*x).clone() } else { self.tensor_obj(&acc, x) };
        }
        acc
    }

    /// Left dual with `(a·f)(v) = f(S(a)·v)`.
    pub fn dual_obj(&self, x: &Obj) -> Obj {
        match &*self.0 {
            CtxKind::Vec => Obj::plain(x.dim()),
            CtxKind::ModOver { a, .. } => {
                let act = x.action().expect("module");
                let d = x.dim();
                let s = &a.antipode;
                let m = LinMap::from_fn(&[a.dim, d], &[d], |j, ai| {
                    let (ag, i) = (ai / d, ai % d);
                    let mut acc = Cyc::zero();
                    for b in 0..a.dim {
                        let sb = s.get(b, ag);
                        if !sb.is_zero() {
                            let v = act.get(i, b * d + j);
                            if !v.is_zero() {
                                acc += &(sb * v);
                            }
                        }
                    }
                    acc
                });
                Obj::with_action(m)
            }
        }
    }

    /// `Φ_{X,Y}: X⊗Y → Y⊗X` for sign +1, its inverse `Y⊗X → X⊗Y` for sign −1.
    pub fn braiding(&self, x: &Obj, y: &Obj, sign: i32) -> Result<LinMap> {
        self.validate(x)?;
        self.validate(y)?;
        Ok(self.braiding_map(x, y, sign))
    }

    pub(crate) fn braiding_map(&self, x: &Obj, y: &Obj, sign: i32) -> LinMap {
        match &*self.0 {
            CtxKind::Vec => {
                if sign > 0 {
                    multilinear::vec_swap(x.dim(), y.dim())
                } else {
                    multilinear::vec_swap(y.dim(), x.dim())
                }
            }
            CtxKind::ModOver { a, r, r_inv } => {
                let (ax, ay) = (x.action().expect("module"), y.action().expect("module"));
                let (dx, dy, d) = (x.dim(), y.dim(), a.dim);
                if sign > 0 {
                    // x⊗y ↦ R1 x ⊗ R2 y ↦ swap
                    let prog = Program {
                        dom: vec![d, d, dx, dy],
                        ops: vec![
                            Op::Swap { at: 1 },
                            Op::Apply { at: 0, f: Arc::new(ax.clone()) },
                            Op::Apply { at: 1, f: Arc::new(ay.clone()) },
                            Op::Swap { at: 0 },
                        ],
                    };
                    element_then(r, &prog, &[dx, dy], &[dy, dx])
                } else {
                    // y⊗x ↦ x⊗y ↦ R^{-1}·(x⊗y)
                    let prog = Program {
                        dom: vec![d, d, dy, dx],
                        ops: vec![
                            Op::Swap { at: 2 },
                            Op::Swap { at: 1 },
                            Op::Apply { at: 0, f: Arc::new(ax.clone()) },
                            Op::Apply { at: 1, f: Arc::new(ay.clone()) },
                        ],
                    };
                    element_then(r_inv, &prog, &[dy, dx], &[dx, dy])
                }
            }
        }
    }

    fn braid_op(&self, x: &Obj, y: &Obj, sign: i32, at: usize) -> Op {
        if self.is_vec() {
            return Op::Swap { at };
        }
        Op::Apply { at, f: Arc::new(self.braiding_map(x, y, sign)) }
    }

    /// Double braiding `Φ_{Y,X}Φ_{X,Y}` is the identity for every probe.
    pub fn is_transparent(&self, x: &Obj, probes: &[Obj]) -> Transparency {
        if self.is_vec() {
            return Transparency { transparent: true, failing_probe: None, witness: None };
        }
        for (k, y) in probes.iter().enumerate() {
            let dd = Diagram::new(self, &[x, y]).braid(0).braid(0).finish();
            let e = map_equal(&dd, &LinMap::identity(&[x.dim(), y.dim()]));
            if !e.holds() {
                return Transparency { transparent: false, failing_probe: Some(k), witness: e.witness() };
            }
        }
        Transparency { transparent: true, failing_probe: None, witness: None }
    }

    /// Trivial, regular, tensor powers of the regular module up to `depth`, their duals,
    /// and all characters when the acting algebra is a cyclic group algebra.
    pub fn standard_probes(&self, depth: usize) -> Vec<Obj> {
        match &*self.0 {
            CtxKind::Vec => {
                let mut v = vec![Obj::plain(1)];
                for k in 1..=depth.max(1) {
                    v.push(Obj::plain(1 << k));
                }
                v
            }
            CtxKind::ModOver { a, .. } => {
                let mut base = vec![self.unit_obj()];
                let reg = self.regular_obj(0);
                let mut p = reg.clone();
                base.push(reg.clone());
                for _ in 2..=depth.max(1) {
                    p = self.tensor_obj(&p, &reg);
                    base.push(p.clone());
                }
                let duals: Vec<Obj> = base.iter().map(|o| self.dual_obj(o)).collect();
                base.extend(duals);
                if let Kind::Cyclic(n) = a.kind {
                    for c in 0..n {
                        base.push(character(a, n, c));
                    }
                }
                base
            }
        }
    }

    pub fn probe_note(&self) -> String {
        match &*self.0 {
            CtxKind::Vec => "probes: Vec (symmetric)".into(),
            CtxKind::ModOver { .. } => {
                "probes: trivial, regular and its tensor powers, their duals, characters of cyclic groups".into()
            }
        }
    }
}

/// The character `g ↦ ζ_n^c` of the cyclic group algebra `a = k[Z_n]`.
pub fn character(a: &Hopf, n: usize, c: usize) -> Obj {
    let m = LinMap::from_fn(&[a.dim, 1], &[1], |_, k| Cyc::root_of_unity(n as i64, (c * k) as i64).expect("conductor"));
    Obj::with_action(m)
}

/// Runs `prog` on `elem ⊗ e_j` for each basis vector `e_j` of `dom`.
fn element_then(elem: &LinMap, prog: &Program, dom: &[usize], cod: &[usize]) -> LinMap {
    let e = elem.column(0);
    let inner = size(dom);
    let columns: Vec<Vector> = (0..inner)
        .map(|j| {
            let mut dims = e.dims.clone();
            dims.extend_from_slice(dom);
            let terms = e.terms.iter().map(|(k, x)| (k * inner + j, x.clone())).collect();
            prog.run(&Vector { dims, terms })
        })
        .collect();
    LinMap::from_columns(dom, cod, &columns)
}

/// `R^{-1} = (S⊗id)R`.
fn r_inverse(a: &Hopf, r: &LinMap) -> LinMap {
    let d = a.dim;
    let id = LinMap::identity(&[d]);
    LinMap::compose(&a.antipode.tensor(&id), r).expect("R lives in A⊗A")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transparency {
    pub transparent: bool,
    pub failing_probe: Option<usize>,
    pub witness: Option<String>,
}

/// Compiles a string diagram, read top to bottom, into a [`LinMap`].
///
/// Wires carry objects so braidings are taken in the ambient context.
#[derive(Clone)]
pub struct Diagram {
    ctx: Ctx,
    start: Option<Arc<LinMap>>,
    dom: Vec<usize>,
    wires: Vec<Obj>,
    ops: Vec<Op>,
}

impl Diagram {
    pub fn new(ctx: &Ctx, dom: &[&Obj]) -> Self {
        let wires: Vec<Obj> = dom.iter().map(|o| (*o).clone()).collect();
        let dims = wires.iter().map(|o| o.dim()).collect();
        Diagram { ctx: ctx.clone(), start: None, dom: dims, wires, ops: vec![] }
    }

    /// Starts from an existing map whose codomain is split into the given wires.
    pub fn from_map(ctx: &Ctx, f: &LinMap, wires: &[&Obj]) -> Self {
        let wires: Vec<Obj> = wires.iter().map(|o| (*o).clone()).collect();
        let dims: Vec<usize> = wires.iter().map(|o| o.dim()).collect();
        assert_eq!(size(&dims), f.cod_size(), "wires do not match the starting map");
        let f = f.reshape(f.dom(), &dims);
        Diagram { ctx: ctx.clone(), dom: f.dom().to_vec(), start: Some(Arc::new(f)), wires, ops: vec![] }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn wires(&self) -> &[Obj] {
        &self.wires
    }

    /// Applies `f` to wires `at ..`, producing the wires `out`.
    pub fn map(mut self, at: usize, f: &LinMap, out: &[&Obj]) -> Self {
        let k = f.dom().len();
        let dims: Vec<usize> = self.wires[at..at + k].iter().map(|o| o.dim()).collect();
        assert_eq!(dims, f.dom(), "map domain does not match wires at {at}");
        let od: Vec<usize> = out.iter().map(|o| o.dim()).collect();
        assert_eq!(od, f.cod(), "map codomain does not match output wires");
        self.ops.push(Op::Apply { at, f: Arc::new(f.clone()) });
        self.wires.splice(at..at + k, out.iter().map(|o| (*o).clone()));
        self
    }

    /// `Φ` on wires `at, at+1`.
    pub fn braid(mut self, at: usize) -> Self {
        let (x, y) = (self.wires[at].clone(), self.wires[at + 1].clone());
        self.ops.push(self.ctx.braid_op(&x, &y, 1, at));
        self.wires.swap(at, at + 1);
        self
    }

    /// `Φ^{-1}` on wires `at, at+1`: the inverse of `Φ_{w[at+1], w[at]}`.
    pub fn ibraid(mut self, at: usize) -> Self {
        let (x, y) = (self.wires[at].clone(), self.wires[at + 1].clone());
        self.ops.push(self.ctx.braid_op(&y, &x, -1, at));
        self.wires.swap(at, at + 1);
        self
    }

    /// Plain exchange of wires, for identifications outside the ambient category.
    pub fn swap(mut self, at: usize) -> Self {
        self.ops.push(Op::Swap { at });
        self.wires.swap(at, at + 1);
        self
    }

    /// `e_P` on wires `P*, P` at `at, at+1`.
    pub fn ev(mut self, at: usize) -> Self {
        let d = self.wires[at].dim();
        self.ops.push(Op::Apply { at, f: Arc::new(multilinear::ev(d)) });
        self.wires.drain(at..at + 2);
        self
    }

    /// `d_P` inserted at `at`, producing wires `P, P*`.
    pub fn coev(mut self, at: usize, p: &Obj) -> Self {
        let pd = self.ctx.dual_obj(p);
        self.ops.push(Op::Apply { at, f: Arc::new(multilinear::coev(p.dim())) });
        self.wires.splice(at..at, [p.clone(), pd]);
        self
    }

    /// `e'_P = e_P Φ_{P,P*}` on wires `P, P*`.
    pub fn ev_prime(self, at: usize) -> Self {
        self.braid(at).ev(at)
    }

    /// `d'_P = Φ^{-1} d_P` inserted at `at`, producing wires `P*, P`.
    pub fn coev_prime(self, at: usize, p: &Obj) -> Self {
        self.coev(at, p).ibraid(at)
    }

    pub fn mu(self, at: usize, h: &Hopf) -> Self {
        self.map(at, &h.mult, &[&h.obj])
    }

    pub fn delta(self, at: usize, h: &Hopf) -> Self {
        self.map(at, &h.comult, &[&h.obj, &h.obj])
    }

    pub fn eta(self, at: usize, h: &Hopf) -> Self {
        self.map(at, &h.unit, &[&h.obj])
    }

    pub fn eps(self, at: usize, h: &Hopf) -> Self {
        self.map(at, &h.counit, &[])
    }

    pub fn s(self, at: usize, h: &Hopf) -> Self {
        self.map(at, &h.antipode, &[&h.obj])
    }

    pub fn sinv(self, at: usize, h: &Hopf) -> Self {
        self.map(at, &h.antipode_inv, &[&h.obj])
    }

    /// Applies `f` to a single wire keeping its object.
    pub fn endo(self, at: usize, f: &LinMap) -> Self {
        let o = self.wires[at].clone();
        self.map(at, f, &[&o])
    }

    /// Merges wires `at .. at+k` into the single given object.
    pub fn merge(mut self, at: usize, k: usize, obj: &Obj) -> Self {
        let d: usize = self.wires[at..at + k].iter().map(|o| o.dim()).product();
        assert_eq!(d, obj.dim(), "merged object has the wrong dimension");
        self.ops.push(Op::Merge { at, k });
        self.wires.splice(at..at + k, [obj.clone()]);
        self
    }

    /// Splits wire `at` into the given objects.
    pub fn split(mut self, at: usize, parts: &[&Obj]) -> Self {
        let dims: Vec<usize> = parts.iter().map(|o| o.dim()).collect();
        self.ops.push(Op::Split { at, parts: dims });
        self.wires.splice(at..at + 1, parts.iter().map(|o| (*o).clone()));
        self
    }

    pub fn cod_dims(&self) -> Vec<usize> {
        self.wires.iter().map(|o| o.dim()).collect()
    }

    pub fn finish(self) -> LinMap {
        let cod = self.cod_dims();
        let prog = Program { dom: self.dom.clone(), ops: self.ops };
        match self.start {
            None => prog.to_map(&cod),
            Some(f) => {
                use rayon::prelude::*;
                let start_dims: Vec<usize> = f.cod().to_vec();
                let columns: Vec<Vector> = (0..f.dom_size())
                    .into_par_iter()
                    .map(|d| {
                        let mut v = f.column(d);
                        v.dims = start_dims.clone();
                        prog.run(&v)
                    })
                    .collect();
                LinMap::from_columns(f.dom(), &cod, &columns)
            }
        }
    }
}

/// Product on `H^{⊗k}`: `(x1..xk)(y1..yk) = x1y1 ⊗ ... ` with braided interleaving.
pub fn tensor_power_product(h: &Hopf, k: usize, x: &LinMap, y: &LinMap) -> LinMap {
    let objs: Vec<&Obj> = (0..2 * k).map(|_| &h.obj).collect();
    let mut d = Diagram::from_map(&h.ctx, &x.tensor(y), &objs);
    for i in 0..k {
        // wires: p_0..p_{i-1}, x_i..x_{k-1}, y_i..y_{k-1}; bring y_i next to x_i
        let mut pos = k;
        while pos > i + 1 {
            d = d.braid(pos - 1);
            pos -= 1;
        }
        d = d.mu(i, h);
    }
    d.finish()
}

/// Quasitriangularity axioms of `R ∈ A⊗A`, plus the triangularity flag.
pub fn check_quasitriangular(a: &Hopf, r: &LinMap) -> Result<Report> {
    let d = a.dim;
    if r.dom_size() != 1 || r.cod_size() != d * d {
        return Err(Error::SignatureMismatch("R must be an element of A⊗A".into()));
    }
    let r = r.reshape(&[], &[d, d]);
    let ctx = &a.ctx;
    let h = &a.obj;
    let mut rep = Report::new();
    let one = a.unit.clone();
    let r12 = r.tensor(&one);
    let r23 = one.tensor(&r);
    let r13 = Diagram::from_map(ctx, &r, &[h, h]).map(1, &a.unit, &[h]).finish();
    let lhs = Diagram::from_map(ctx, &r, &[h, h]).delta(0, a).finish();
    rep.record("qt.delta_left", map_equal(&lhs, &tensor_power_product(a, 3, &r13, &r23)));
    let lhs = Diagram::from_map(ctx, &r, &[h, h]).delta(1, a).finish();
    rep.record("qt.delta_right", map_equal(&lhs, &tensor_power_product(a, 3, &r13, &r12)));
    // Δ^op(a)·R = R·Δ(a), as maps A → A⊗A
    let dop = Diagram::new(ctx, &[h]).delta(0, a).braid(0).finish();
    let dl = Diagram::new(ctx, &[h]).delta(0, a).finish();
    let left = right_multiply_by(a, &dop, &r);
    let right = left_multiply_by(a, &r, &dl);
    rep.record("qt.intertwines", map_equal(&left, &right));
    let rinv = r_inverse(a, &r);
    let one2 = one.tensor(&one);
    rep.record("qt.invertible_left", map_equal(&tensor_power_product(a, 2, &r, &rinv), &one2));
    rep.record("qt.invertible_right", map_equal(&tensor_power_product(a, 2, &rinv, &r), &one2));
    let eps_r = Diagram::from_map(ctx, &r, &[h, h]).eps(0, a).finish();
    rep.record("qt.counit", map_equal(&eps_r, &one));
    let r21 = Diagram::from_map(ctx, &r, &[h, h]).braid(0).finish();
    let tri = map_equal(&tensor_power_product(a, 2, &r21, &r), &one2).holds();
    rep.note("triangular", tri);
    Ok(rep)
}

/// `x ↦ f(x)·r` for `f: A → A⊗A` and `r ∈ A⊗A`.
fn right_multiply_by(a: &Hopf, f: &LinMap, r: &LinMap) -> LinMap {
    let h = &a.obj;
    let mut d = Diagram::from_map(&a.ctx, &f.tensor(r).reshape(f.dom(), &[a.dim; 4]), &[h, h, h, h]);
    d = d.braid(1).mu(0, a).mu(1, a);
    d.finish()
}

/// `x ↦ r·f(x)`.
fn left_multiply_by(a: &Hopf, r: &LinMap, f: &LinMap) -> LinMap {
    let h = &a.obj;
    let rf = r.tensor(f).reshape(f.dom(), &[a.dim; 4]);
    Diagram::from_map(&a.ctx, &rf, &[h, h, h, h]).braid(1).mu(0, a).mu(1, a).finish()
}

/// Duality morphisms of `object`: `ev`, `coev`, `ev_prime`, `coev_prime`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Duality {
    Ev,
    Coev,
    EvPrime,
    CoevPrime,
}

pub fn duality_maps(ctx: &Ctx, which: Duality, object: &Obj) -> Result<LinMap> {
    ctx.validate(object)?;
    if let Some(a) = ctx.algebra() {
        if LinMap::compose(&a.antipode, &a.antipode_inv).ok() != Some(LinMap::identity(&[a.dim])) {
            return Err(Error::NoDual("antipode of the acting algebra is not invertible".into()));
        }
    }
    let dual = ctx.dual_obj(object);
    Ok(match which {
        Duality::Ev => multilinear::ev(object.dim()),
        Duality::Coev => multilinear::coev(object.dim()),
        Duality::EvPrime => Diagram::new(ctx, &[object, &dual]).ev_prime(0).finish(),
        Duality::CoevPrime => Diagram::new(ctx, &[]).coev_prime(0, object).finish(),
    })
}

/// On probe families: (i) Φ left H-linear ⇔ H transparent and cocommutative;
/// (ii) Φ left H-colinear ⇔ H transparent and commutative.
pub fn check_braiding_linearity(h: &Hopf, depth: usize) -> Report {
    let ctx = &h.ctx;
    let mut rep = Report::new();
    let probes = ctx.standard_probes(depth);
    let transparent = ctx.is_transparent(&h.obj, &probes).transparent;
    let hh = &h.obj;
    let cocomm = map_equal(
        &Diagram::new(ctx, &[hh]).delta(0, h).braid(0).finish(),
        &Diagram::new(ctx, &[hh]).delta(0, h).finish(),
    )
    .holds();
    let comm = map_equal(
        &Diagram::new(ctx, &[hh, hh]).braid(0).mu(0, h).finish(),
        &Diagram::new(ctx, &[hh, hh]).mu(0, h).finish(),
    )
    .holds();

    // (i) H-modules: trivial, regular, regular ⊗ regular (diagonal)
    let unit = ctx.unit_obj();
    let mods: Vec<(Obj, LinMap)> = {
        let triv = h.counit.tensor(&LinMap::identity(&[unit.dim()]));
        let triv = triv.reshape(&[h.dim, unit.dim()], &[unit.dim()]);
        let reg = h.mult.clone();
        let sq_obj = ctx.tensor_obj(hh, hh);
        let sq = diagonal_action(h, (hh, &reg), (hh, &reg));
        let sq = sq.reshape(&[h.dim, h.dim * h.dim], &[h.dim * h.dim]);
        vec![(unit.clone(), triv), (hh.clone(), reg), (sq_obj, sq)]
    };
    let mut linear = true;
    let mut lin_witness = None;
    'outer: for (x, ax) in &mods {
        for (y, ay) in &mods {
            let lhs =
                Diagram::new(ctx, &[hh, x, y]).map(0, &diagonal_action(h, (x, ax), (y, ay)), &[x, y]).braid(0).finish();
            let rhs =
                Diagram::new(ctx, &[hh, x, y]).braid(1).map(0, &diagonal_action(h, (y, ay), (x, ax)), &[y, x]).finish();
            let e = map_equal(&lhs, &rhs);
            if !e.holds() {
                linear = false;
                lin_witness = e.witness();
                break 'outer;
            }
        }
    }
    let rhs_i = transparent && cocomm;
    rep.note("braid_lin.i.linear", linear);
    rep.note("braid_lin.i.transparent_and_cocommutative", rhs_i);
    rep.flag(
        "braid_lin.i.agree",
        linear == rhs_i,
        format!("linear={linear} rhs={rhs_i} {}", lin_witness.unwrap_or_default()),
    );

    // (ii) H-comodules: trivial, regular, regular ⊗ regular (codiagonal)
    let comods: Vec<(Obj, LinMap)> = {
        let triv = h.unit.tensor(&LinMap::identity(&[unit.dim()]));
        let reg = h.comult.clone();
        let sq_obj = ctx.tensor_obj(hh, hh);
        let sq = codiagonal_coaction(h, (hh, &reg), (hh, &reg));
        let sq = sq.reshape(&[h.dim * h.dim], &[h.dim, h.dim * h.dim]);
        vec![(unit.clone(), triv), (hh.clone(), reg), (sq_obj, sq)]
    };
    let mut colinear = true;
    let mut col_witness = None;
    'outer2: for (x, lx) in &comods {
        for (y, ly) in &comods {
            let lhs = Diagram::new(ctx, &[x, y])
                .braid(0)
                .map(0, &codiagonal_coaction(h, (y, ly), (x, lx)), &[hh, y, x])
                .finish();
            let rhs = Diagram::new(ctx, &[x, y])
                .map(0, &codiagonal_coaction(h, (x, lx), (y, ly)), &[hh, x, y])
                .braid(1)
                .finish();
            let e = map_equal(&lhs, &rhs);
            if !e.holds() {
                colinear = false;
                col_witness = e.witness();
                break 'outer2;
            }
        }
    }
    let rhs_ii = transparent && comm;
    rep.note("braid_lin.ii.colinear", colinear);
    rep.note("braid_lin.ii.transparent_and_commutative", rhs_ii);
    rep.flag(
        "braid_lin.ii.agree",
        colinear == rhs_ii,
        format!("colinear={colinear} rhs={rhs_ii} {}", col_witness.unwrap_or_default()),
    );
    rep
}

/// Diagonal left action on `X⊗Y`: `(μ_X⊗μ_Y)(H⊗Φ_{H,X}⊗Y)(Δ⊗X⊗Y)`.
pub fn diagonal_action(h: &Hopf, x: (&Obj, &LinMap), y: (&Obj, &LinMap)) -> LinMap {
    Diagram::new(&h.ctx, &[&h.obj, x.0, y.0]).delta(0, h).braid(1).map(0, x.1, &[x.0]).map(1, y.1, &[y.0]).finish()
}

/// Codiagonal left coaction on `X⊗Y`: `(∇⊗X⊗Y)(H⊗Φ_{X,H}⊗Y)(λ_X⊗λ_Y)`.
pub fn codiagonal_coaction(h: &Hopf, x: (&Obj, &LinMap), y: (&Obj, &LinMap)) -> LinMap {
    Diagram::new(&h.ctx, &[x.0, y.0]).map(0, x.1, &[&h.obj, x.0]).map(2, y.1, &[&h.obj, y.0]).braid(1).mu(0, h).finish()
}

static PROBE_DEPTH: std::sync::atomic::AtomicUsize = std::sync::atomic::AtomicUsize::new(2);

/// Sets the configured probe depth; ignored below 1.
pub fn set_probe_depth(depth: usize) {
    if depth >= 1 {
        PROBE_DEPTH.store(depth, std::sync::atomic::Ordering::Relaxed);
    }
}

/// Tensor depth of probe families: `BHL_PROBE_DEPTH` when set to a positive integer,
/// else the value from [`set_probe_depth`] (default 2).
pub fn probe_depth() -> usize {
    std::env::var("BHL_PROBE_DEPTH")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&d| d >= 1)
        .unwrap_or_else(|| PROBE_DEPTH.load(std::sync::atomic::Ordering::Relaxed))
}
