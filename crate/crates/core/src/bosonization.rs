//! Bosonization of a Hopf algebra living in modules over a quasitriangular Hopf algebra.
//!
//! The left form is the biproduct `B⋊A` on `B⊗A`; the right form is `A⋉B` on `A⊗B`,
//! where `B` is made a right module through `b·a = S^{-1}(a)·b`.

use crate::context::{check_quasitriangular, Ctx, Diagram, Obj};
use crate::error::{Error, Result};
use crate::examples::{braided_line, hmnd, FamilyParams};
use crate::hopf::{check_action, check_hopf, Hopf, Parts, Side};
use crate::multilinear::{map_equal, LinMap};
use crate::report::Report;
use crate::scalars::Cyc;
use crate::yd::{
    braiding_unchecked, check_yd, check_yd_morphism, tensor_unchecked, trivial_yd, Direction, Family, YdModule,
};

/// `B` is a Hopf algebra in left `A`-modules braided by `R`.
#[derive(Debug, Clone)]
pub struct BraidedHopfInModules {
    pub a: Hopf,
    pub r: LinMap,
    pub b: Hopf,
}

impl BraidedHopfInModules {
    pub fn new(a: &Hopf, r: &LinMap, b: &Hopf) -> Result<Self> {
        if !a.ctx.is_vec() {
            return Err(Error::PreconditionViolated("the acting algebra must live in Vec".into()));
        }
        let act = b.obj.action().ok_or_else(|| Error::NotAModule("B carries no action".into()))?;
        if act.dom_size() != a.dim * b.dim || act.cod_size() != b.dim {
            return Err(Error::SignatureMismatch(format!(
                "B's action {:?}->{:?} does not match dim A = {}, dim B = {}",
                act.dom(),
                act.cod(),
                a.dim,
                b.dim
            )));
        }
        let qt = check_quasitriangular(a, r)?;
        if let Some(c) = qt.first_failure() {
            return Err(Error::NotQuasitriangular(c.check.clone()));
        }
        Ok(BraidedHopfInModules { a: a.clone(), r: r.reshape(&[], &[a.dim, a.dim]), b: b.clone() })
    }

    /// `k` with the trivial action, as a Hopf algebra in the same context.
    pub fn trivial(a: &Hopf, r: &LinMap) -> Result<Self> {
        let ctx = Ctx::mod_over(a, r)?;
        let one = || LinMap::identity(&[1]);
        let parts = Parts {
            mult: one().reshape(&[1, 1], &[1]),
            comult: one().reshape(&[1], &[1, 1]),
            unit: one().reshape(&[], &[1]),
            counit: one().reshape(&[1], &[]),
            antipode: one(),
            antipode_inv: Some(one()),
        };
        let b = Hopf::new("k", &ctx, Some(ctx.unit_obj()), parts)?;
        Self::new(a, r, &b)
    }

    /// The exterior line over `H(m, n-1, d)` from the family parameters.
    pub fn line(p: &FamilyParams) -> Result<Self> {
        let bl = braided_line(p)?;
        Self::new(&bl.base, &bl.r, &bl.line)
    }

    fn bo(&self) -> Obj {
        Obj::plain(self.b.dim)
    }

    /// `[A, B] → [B]`.
    pub fn left_action(&self) -> LinMap {
        self.b.obj.action().expect("checked in new").reshape(&[self.a.dim, self.b.dim], &[self.b.dim])
    }

    /// `[B, A] → [B]`, `b·a = S^{-1}(a)·b`.
    pub fn right_action(&self) -> LinMap {
        let (ao, bo) = (&self.a.obj, self.bo());
        Diagram::new(&Ctx::vec(), &[&bo, ao]).sinv(1, &self.a).swap(0).map(0, &self.left_action(), &[&bo]).finish()
    }
}

/// `B` with its `A`-action and the coaction induced by `R`:
/// left `λ(b) = R2 ⊗ R1·b` (an LL module) or right `ρ(b) = b·R1 ⊗ R2` (an RR module).
pub fn r_coaction(bh: &BraidedHopfInModules, side: Side) -> Result<YdModule> {
    let act = match side {
        Side::Left => bh.left_action(),
        Side::Right => bh.right_action(),
    };
    crate::yd::qt_induced_yd(&bh.a, &bh.r, &bh.bo(), &act, side)
}

/// The bosonization as a Hopf algebra in `Vec`: `B⋊A` (left) or `A⋉B` (right).
pub fn cross_product(bh: &BraidedHopfInModules, side: Side) -> Result<Hopf> {
    let y = r_coaction(bh, side)?;
    let (a, b) = (&bh.a, &bh.b);
    let v = Ctx::vec();
    let (ao, bo) = (&a.obj, &bh.bo());
    let parts = match side {
        Side::Left => {
            let act = bh.left_action();
            let mult = Diagram::new(&v, &[bo, ao, bo, ao])
                .delta(1, a)
                .swap(2)
                .map(1, &act, &[bo])
                .map(0, &b.mult, &[bo])
                .mu(1, a)
                .finish();
            let comult = Diagram::new(&v, &[bo, ao])
                .map(0, &b.comult, &[bo, bo])
                .map(1, &y.coaction, &[ao, bo])
                .delta(3, a)
                .swap(2)
                .mu(1, a)
                .finish();
            // S(b⊗a) = (1⊗S(b_{-1}a))(S(b_0)⊗1)
            let antipode = Diagram::new(&v, &[bo, ao])
                .map(0, &y.coaction, &[ao, bo])
                .swap(1)
                .mu(0, a)
                .s(0, a)
                .map(1, &b.antipode, &[bo])
                .delta(0, a)
                .swap(1)
                .map(0, &act, &[bo])
                .finish();
            Parts {
                mult,
                comult,
                unit: b.unit.tensor(&a.unit),
                counit: b.counit.tensor(&a.counit),
                antipode,
                antipode_inv: None,
            }
        }
        Side::Right => {
            let act = bh.right_action();
            let mult = Diagram::new(&v, &[ao, bo, ao, bo])
                .delta(2, a)
                .swap(1)
                .mu(0, a)
                .map(1, &act, &[bo])
                .map(1, &b.mult, &[bo])
                .finish();
            let comult = Diagram::new(&v, &[ao, bo])
                .delta(0, a)
                .map(2, &b.comult, &[bo, bo])
                .map(2, &y.coaction, &[bo, ao])
                .swap(1)
                .mu(2, a)
                .finish();
            // S(a⊗b) = (S(a b_1)⊗1)(1⊗S(b_0))
            let antipode = Diagram::new(&v, &[ao, bo])
                .map(1, &y.coaction, &[bo, ao])
                .map(1, &b.antipode, &[bo])
                .swap(0)
                .mu(1, a)
                .s(1, a)
                .delta(1, a)
                .swap(0)
                .map(1, &act, &[bo])
                .finish();
            Parts {
                mult,
                comult,
                unit: a.unit.tensor(&b.unit),
                counit: a.counit.tensor(&b.counit),
                antipode,
                antipode_inv: None,
            }
        }
    };
    let name = match side {
        Side::Left => format!("{}#{}", b.name, a.name),
        Side::Right => format!("{}#{}", a.name, b.name),
    };
    Hopf::new(&name, &v, None, parts)
}

/// `B` is a Hopf algebra among the induced YD modules, and the context braiding on `B`
/// is the YD braiding of the induced structure.
pub fn check_bosonization_data(bh: &BraidedHopfInModules, side: Side) -> Result<Report> {
    let y = r_coaction(bh, side)?;
    let mut rep = Report::new();
    rep.extend("yd.", check_yd(&y));
    let yy = tensor_unchecked(&y, &y);
    let one = trivial_yd(&bh.a, &Obj::plain(1), y.variant);
    let b = &bh.b;
    rep.extend("mult.", check_yd_morphism(&yy, &y, &b.mult));
    rep.extend("comult.", check_yd_morphism(&y, &yy, &b.comult));
    rep.extend("unit.", check_yd_morphism(&one, &y, &b.unit));
    rep.extend("counit.", check_yd_morphism(&y, &one, &b.counit));
    let (family, ctx_braid) = match side {
        Side::Left => (Family::L, bh.b.ctx.braiding(&b.obj, &b.obj, 1)?),
        Side::Right => {
            // x⊗y ↦ y·R1 ⊗ x·R2
            let (bo, ao) = (bh.bo(), &bh.a.obj);
            let act = bh.right_action();
            let r =
                Diagram::from_map(&Ctx::vec(), &bh.r.tensor(&LinMap::identity(&[b.dim, b.dim])), &[ao, ao, &bo, &bo])
                    .swap(2)
                    .swap(1)
                    .swap(0)
                    .swap(2)
                    .map(0, &act, &[&bo])
                    .map(1, &act, &[&bo])
                    .finish();
            (Family::R, r)
        }
    };
    let yd_braid = braiding_unchecked(&y, &y, family, Direction::Forward);
    rep.record("braiding.matches_context", map_equal(&ctx_braid.reshape(yd_braid.dom(), yd_braid.cod()), &yd_braid));
    Ok(rep)
}

/// A vector space with an `A`-action and a `B`-action on the side of the bosonization.
#[derive(Debug, Clone)]
pub struct SmashModule {
    pub dim: usize,
    pub side: Side,
    pub act_a: LinMap,
    pub act_b: LinMap,
}

impl SmashModule {
    /// Restriction of an action of the bosonization along the two embeddings.
    pub fn restrict(bh: &BraidedHopfInModules, side: Side, action: &LinMap, dim: usize) -> Self {
        let (a, b) = (&bh.a, &bh.b);
        let v = Ctx::vec();
        let (ao, bo, mo) = (&a.obj, &bh.bo(), &Obj::plain(dim));
        let (act_a, act_b) = match side {
            Side::Left => {
                let act = action.reshape(&[b.dim, a.dim, dim], &[dim]);
                (
                    Diagram::new(&v, &[ao, mo]).map(0, &b.unit, &[bo]).map(0, &act, &[mo]).finish(),
                    Diagram::new(&v, &[bo, mo]).map(1, &a.unit, &[ao]).map(0, &act, &[mo]).finish(),
                )
            }
            Side::Right => {
                let act = action.reshape(&[dim, a.dim, b.dim], &[dim]);
                (
                    Diagram::new(&v, &[mo, ao]).map(2, &b.unit, &[bo]).map(0, &act, &[mo]).finish(),
                    Diagram::new(&v, &[mo, bo]).map(1, &a.unit, &[ao]).map(0, &act, &[mo]).finish(),
                )
            }
        };
        SmashModule { dim, side, act_a, act_b }
    }

    /// `(b⊗a)·m = b·(a·m)` (left) or `m·(a⊗b) = (m·a)·b` (right).
    pub fn combined(&self, bh: &BraidedHopfInModules) -> LinMap {
        let v = Ctx::vec();
        let (ao, bo, mo) = (&bh.a.obj, &bh.bo(), &Obj::plain(self.dim));
        match self.side {
            Side::Left => Diagram::new(&v, &[bo, ao, mo])
                .map(1, &self.act_a, &[mo])
                .map(0, &self.act_b, &[mo])
                .finish()
                .reshape(&[bh.b.dim * bh.a.dim, self.dim], &[self.dim]),
            Side::Right => Diagram::new(&v, &[mo, ao, bo])
                .map(0, &self.act_a, &[mo])
                .map(0, &self.act_b, &[mo])
                .finish()
                .reshape(&[self.dim, bh.a.dim * bh.b.dim], &[self.dim]),
        }
    }
}

/// Module laws of both actions and the mixed associativity
/// `a·(b·m) = (a1·b)·(a2·m)` (left) or `(m·b)·a = (m·a1)·(b·a2)` (right);
/// when they hold, the combined action is checked to be a module over the bosonization.
pub fn check_smash_compat(m: &SmashModule, bh: &BraidedHopfInModules) -> Result<Report> {
    let (a, b) = (&bh.a, &bh.b);
    let v = Ctx::vec();
    let (ao, bo, mo) = (&a.obj, &bh.bo(), &Obj::plain(m.dim));
    let mut rep = Report::new();
    rep.extend("a.", check_action(a, m.side, &m.act_a, m.dim));
    rep.extend("b.", check_action(b, m.side, &m.act_b, m.dim));
    let (l, r) = match m.side {
        Side::Left => {
            let act = bh.left_action();
            (
                Diagram::new(&v, &[ao, bo, mo]).map(1, &m.act_b, &[mo]).map(0, &m.act_a, &[mo]).finish(),
                Diagram::new(&v, &[ao, bo, mo])
                    .delta(0, a)
                    .swap(1)
                    .map(0, &act, &[bo])
                    .map(1, &m.act_a, &[mo])
                    .map(0, &m.act_b, &[mo])
                    .finish(),
            )
        }
        Side::Right => {
            let act = bh.right_action();
            (
                Diagram::new(&v, &[mo, bo, ao]).map(0, &m.act_b, &[mo]).map(0, &m.act_a, &[mo]).finish(),
                Diagram::new(&v, &[mo, bo, ao])
                    .delta(2, a)
                    .swap(1)
                    .map(0, &m.act_a, &[mo])
                    .map(1, &act, &[bo])
                    .map(0, &m.act_b, &[mo])
                    .finish(),
            )
        }
    };
    rep.record("compat", map_equal(&l, &r));
    if rep.all_pass() {
        let cp = cross_product(bh, m.side)?;
        rep.extend("cross.", check_action(&cp, m.side, &m.combined(bh), m.dim));
    }
    Ok(rep)
}

/// The regular module of the bosonization restricted to the two factors.
pub fn regular_smash_module(bh: &BraidedHopfInModules, side: Side) -> Result<SmashModule> {
    let cp = cross_product(bh, side)?;
    Ok(SmashModule::restrict(bh, side, &cp.mult, cp.dim))
}

/// Diagonal action of the bosonization on `M⊗N`, restricted to the factors.
pub fn smash_tensor(bh: &BraidedHopfInModules, m: &SmashModule, n: &SmashModule) -> Result<SmashModule> {
    if m.side != n.side {
        return Err(Error::VariantMismatch("left and right smash modules".into()));
    }
    let cp = cross_product(bh, m.side)?;
    let v = Ctx::vec();
    let (co, mo, no) = (&cp.obj, &Obj::plain(m.dim), &Obj::plain(n.dim));
    let (am, an) = (m.combined(bh), n.combined(bh));
    let action = match m.side {
        Side::Left => Diagram::new(&v, &[co, mo, no]).delta(0, &cp).swap(1).map(0, &am, &[mo]).map(1, &an, &[no]),
        Side::Right => Diagram::new(&v, &[mo, no, co]).delta(2, &cp).swap(1).map(0, &am, &[mo]).map(1, &an, &[no]),
    }
    .finish();
    Ok(SmashModule::restrict(bh, m.side, &action, m.dim * n.dim))
}

/// `H(m,n,d) ≅ B⋊H(m,n-1,d')` through `g ↦ 1⊗g`, `x_i ↦ 1⊗x_i`, `x_n ↦ x_n⊗g^m`,
/// checked to be a bijective bialgebra map commuting with the antipodes.
pub fn biproduct_decompose_check(p: &FamilyParams) -> Result<Report> {
    p.validate()?;
    if p.n == 0 {
        return Err(Error::BadFamilyParams("the decomposition needs n ≥ 1".into()));
    }
    let h = hmnd(p)?;
    let bh = BraidedHopfInModules::line(p)?;
    let cp = cross_product(&bh, Side::Left)?;
    let da = bh.a.dim;
    let (wa, wh) = (1usize << (p.n - 1), 1usize << p.n);
    let two_m = 2 * p.m;
    let basis = |b: usize, a: usize| -> Vec<Cyc> {
        let mut v = vec![Cyc::zero(); cp.dim];
        v[b * da + a] = Cyc::one();
        v
    };
    let mul = |x: &[Cyc], y: &[Cyc]| -> Result<Vec<Cyc>> {
        let mut xy = Vec::with_capacity(x.len() * y.len());
        for u in x {
            for w in y {
                xy.push(u * w);
            }
        }
        Ok(cp.mult.reshape(&[cp.dim * cp.dim], &[cp.dim]).apply(&xy)?)
    };
    let g_img = basis(0, wa);
    let x_img = |i: usize| -> Vec<Cyc> {
        if i < p.n {
            // x_i is bit (n-1-i) of the base exponent mask, x_1 the top bit
            basis(0, 1 << (p.n - 1 - i))
        } else {
            basis(1, p.m * wa)
        }
    };
    let mut columns = Vec::with_capacity(h.dim);
    for idx in 0..h.dim {
        let (gexp, eps) = (idx / wh, idx % wh);
        let mut acc = basis(0, 0);
        for _ in 0..gexp % two_m {
            acc = mul(&acc, &g_img)?;
        }
        for i in 1..=p.n {
            if eps & (1 << (p.n - i)) != 0 {
                acc = mul(&acc, &x_img(i))?;
            }
        }
        columns.push(acc);
    }
    let f = LinMap::from_fn(&[h.dim], &[cp.dim], |r, c| columns[c][r].clone());
    let mut rep = Report::new();
    rep.extend("cross.", check_hopf(&cp));
    rep.flag("biproduct.bijective", f.inverse().is_ok(), "the generator map is singular");
    let ff = f.tensor(&f);
    let c = |g: &LinMap, k: &LinMap| LinMap::compose(g, k).expect("shapes");
    rep.record("biproduct.mult", map_equal(&c(&f, &h.mult), &c(&cp.mult, &ff)));
    rep.record("biproduct.unit", map_equal(&c(&f, &h.unit), &cp.unit));
    rep.record("biproduct.comult", map_equal(&c(&ff, &h.comult), &c(&cp.comult, &f)));
    rep.record("biproduct.counit", map_equal(&h.counit, &c(&cp.counit, &f)));
    rep.record("biproduct.antipode", map_equal(&c(&f, &h.antipode), &c(&cp.antipode, &f)));
    Ok(rep)
}
