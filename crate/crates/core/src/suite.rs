//! The acceptance matrix: one report per numbered criterion, each check id prefixed `cN.`.

use rayon::prelude::*;

use crate::bosonization::biproduct_decompose_check;
use crate::context::{character, check_braiding_linearity, check_quasitriangular, probe_depth};
use crate::double::{
    check_double, check_equivalence_lemmas, check_matched_pair, double_r_matrix, drinfeld_double,
    symmetricity_conditions, Lemma,
};
use crate::error::{Error, Result};
use crate::examples::{
    cyclic_context, group_algebra, hmnd, hmnd_r, quantum_line, sweedler, transparency_demo, FamilyParams,
};
use crate::functors::{
    builtin_yd_modules, check_center, check_functor, embedding_check, psi, psi_from_r, sample_objects, to_center,
    CatObj, DModule, FunctorId, Property,
};
use crate::hopf::{check_hopf, dual_hopf, Hopf, Side};
use crate::multilinear::{map_equal, LinMap};
use crate::report::Report;
use crate::scalars::Cyc;
use crate::yd::{
    adjoint_yd_module, check_braiding_pair, check_hexagons, check_naturality, equivalence_outcomes, mutants,
    yd_braiding, yd_tensor, Direction, Family,
};

pub const CRITERIA: usize = 12;

/// Checks expected to fail, with the reason they do. `suite` still reports them as failures.
pub const KNOWN_FAILURES: &[(&str, &str)] =
    &[("c8.sweedler.L.monoidal", "the single-antipode L is anti-monoidal on a noncommutative, noncocommutative H")];

pub fn is_known_failure(id: &str) -> bool {
    KNOWN_FAILURES.iter().any(|(k, _)| id.starts_with(k))
}

/// Runs one criterion (1-based).
pub fn criterion(k: usize) -> Result<Report> {
    let rep = match k {
        1 => c1(),
        2 => c2(),
        3 => c3(),
        4 => c4(),
        5 => c5(),
        6 => c6(),
        7 => c7(),
        8 => c8(),
        9 => c9(),
        10 => c10(),
        11 => c11(),
        12 => c12(),
        _ => return Err(Error::PreconditionViolated(format!("no criterion {k}"))),
    }?;
    let mut out = Report::new();
    out.extend(&format!("c{k}."), rep);
    Ok(out)
}

/// Every criterion, run concurrently and emitted in numeric order.
pub fn run_suite() -> Report {
    let parts: Vec<Report> = (1..=CRITERIA)
        .into_par_iter()
        .map(|k| {
            criterion(k).unwrap_or_else(|e| {
                let mut r = Report::new();
                r.fail(format!("c{k}.error"), e.to_string());
                r
            })
        })
        .collect();
    let mut out = Report::new();
    for p in parts {
        out.extend("", p);
    }
    out
}

fn note_value(r: &Report, id: &str) -> bool {
    r.note_value(id)
}

/// One summary check for a sub-report: pass iff every check in it passes.
fn summarize(rep: &mut Report, id: impl Into<String>, sub: &Report) {
    match sub.first_failure() {
        None => rep.pass(id),
        Some(c) => rep.fail(id, format!("{}: {}", c.check, c.witness.clone().unwrap_or_default())),
    }
}

fn axiom_algebras() -> Result<Vec<Hopf>> {
    let fam = |m, d: &[usize]| hmnd(&FamilyParams::new(m, d, None));
    Ok(vec![group_algebra(2)?, group_algebra(3)?, group_algebra(4)?, fam(1, &[1])?, fam(2, &[1])?, fam(2, &[1, 1])?])
}

fn c1() -> Result<Report> {
    let mut rep = Report::new();
    let hs = axiom_algebras()?;
    let subs: Vec<Report> = hs.par_iter().map(check_hopf).collect();
    for (h, sub) in hs.iter().zip(subs) {
        rep.extend(&format!("{}.", h.name), sub);
    }
    Ok(rep)
}

fn c2() -> Result<Report> {
    let mut rep = Report::new();
    for h in axiom_algebras()? {
        let d = dual_hopf(&h);
        rep.extend(&format!("{}.dual.", h.name), check_hopf(&d));
        rep.flag(format!("{}.double_dual", h.name), dual_hopf(&d).structure_eq(&h), "H** differs from H");
    }
    Ok(rep)
}

fn c3() -> Result<Report> {
    let mut rep = Report::new();
    for h in [group_algebra(2)?, group_algebra(3)?, sweedler()] {
        let d = drinfeld_double(&h)?;
        let n = &h.name;
        rep.flag(format!("{n}.dim"), d.hopf.dim == h.dim * h.dim, format!("dim {}", d.hopf.dim));
        rep.extend(&format!("{n}.double."), check_double(&d));
        rep.extend(&format!("{n}.matched_pair."), check_matched_pair(&d.pair));
    }
    let k2 = group_algebra(2)?;
    let d2 = drinfeld_double(&k2)?;
    rep.flag("kZ2.commutative", d2.hopf.is_commutative(), "D(kZ2) not commutative");
    rep.flag("kZ2.cocommutative", d2.hopf.is_cocommutative(), "D(kZ2) not cocommutative");
    rep.extend("kZ2.", check_equivalence_lemmas(&k2, Lemma::Commutativity, None)?);
    Ok(rep)
}

fn c4() -> Result<Report> {
    let mut rep = Report::new();
    for h in [group_algebra(2)?, sweedler()] {
        let d = drinfeld_double(&h)?;
        let (_, qt) = double_r_matrix(&d)?;
        rep.extend(&format!("{}.qt.", h.name), qt);
    }
    let d = drinfeld_double(&sweedler())?;
    let reg = DModule::regular(&d, Side::Left);
    let p = psi(&reg, &reg);
    rep.flag("sweedler.psi_entries", p.entries().len() == 256 * 256, format!("{} entries", p.entries().len()));
    rep.record("sweedler.psi_is_phi_r", map_equal(&p, &psi_from_r(&reg, &reg)));
    Ok(rep)
}

fn c5() -> Result<Report> {
    let mut rep = Report::new();
    let h = sweedler();
    let d = drinfeld_double(&h)?;
    let reg = CatObj::DMod(DModule::regular(&d, Side::Left));
    let small = crate::functors::apply_functor(FunctorId::G, &CatObj::Yd(adjoint_yd_module(&h)))?;
    let sq = {
        let s = small.dmod().expect("D-module");
        CatObj::DMod(crate::functors::dmodule_tensor(s, s)?)
    };
    let f = FunctorId::F;
    rep.extend("roundtrip.regular.", check_functor(f, &reg, None, Property::Roundtrip)?);
    rep.extend("roundtrip.square.", check_functor(f, &sq, None, Property::Roundtrip)?);
    rep.extend("monoidal.regular_regular.", check_functor(f, &reg, Some(&reg), Property::Monoidal)?);
    rep.extend("monoidal.regular_square.", check_functor(f, &reg, Some(&sq), Property::Monoidal)?);
    rep.extend("braided.regular_regular.", check_functor(f, &reg, Some(&reg), Property::Braided)?);
    rep.extend("braided.regular_square.", check_functor(f, &reg, Some(&sq), Property::Braided)?);
    Ok(rep)
}

fn c6() -> Result<Report> {
    let mut rep = Report::new();
    let mut total_mutants = 0;
    for h in [group_algebra(2)?, group_algebra(3)?, sweedler()] {
        let mods = builtin_yd_modules(&h)?;
        let results: Vec<(usize, Vec<String>)> = mods
            .par_iter()
            .map(|m| {
                let mut cases = vec![m.clone()];
                cases.extend(mutants(m));
                let bad = cases
                    .iter()
                    .enumerate()
                    .flat_map(|(i, c)| {
                        equivalence_outcomes(c)
                            .into_iter()
                            .filter(|(_, a, b)| a != b)
                            .map(move |(id, a, b)| format!("case {i} {id}: {a} vs {b}"))
                    })
                    .collect();
                (cases.len() - 1, bad)
            })
            .collect();
        for (i, (m, (count, bad))) in mods.iter().zip(results).enumerate() {
            total_mutants += count;
            let id = format!("{}.{}.{i}.agree", h.name, m.variant.tag());
            rep.flag(id, bad.is_empty(), bad.join("; "));
        }
    }
    let status = if total_mutants >= 50 { crate::report::Status::Pass } else { crate::report::Status::Fail };
    rep.push("mutant_count", status, Some(format!("{total_mutants} mutants")));
    Ok(rep)
}

fn c7() -> Result<Report> {
    let h = sweedler();
    let families: Vec<Family> = Family::ALL.into_iter().collect();
    let subs: Vec<Result<Report>> = families
        .par_iter()
        .map(|&f| {
            let mut rep = Report::new();
            let ms: Vec<_> = sample_objects(&h, crate::functors::Source::Yd(f.variant()))?
                .into_iter()
                .map(|x| x.yd().expect("YD").clone())
                .collect();
            let t = f.tag();
            for (i, m) in ms.iter().enumerate() {
                for (j, n) in ms.iter().enumerate() {
                    rep.extend(&format!("{t}.pair.{i}.{j}."), check_braiding_pair(m, n, f)?);
                }
            }
            let (a, b) = (&ms[0], &ms[1]);
            rep.extend(&format!("{t}.hexagon.aba."), check_hexagons(a, b, a, f)?);
            rep.extend(&format!("{t}.hexagon.bab."), check_hexagons(b, a, b, f)?);
            // naturality against the braiding c_{a,b}: a⊗b → b⊗a, itself a YD morphism
            let c = yd_braiding(a, b, f, Direction::Forward)?;
            let (ab, ba) = (yd_tensor(a, b)?, yd_tensor(b, a)?);
            let flat = c.reshape(&[ab.dim()], &[ba.dim()]);
            rep.extend(&format!("{t}.natural."), check_naturality(&ab, &ba, &flat, a, f)?);
            Ok(rep)
        })
        .collect();
    let mut rep = Report::new();
    for s in subs {
        rep.extend("", s?);
    }
    Ok(rep)
}

/// Pairs of sample objects small enough for tensor checks.
fn small_pairs(xs: &[CatObj]) -> Vec<(usize, usize)> {
    let mut out = vec![];
    for i in 0..xs.len() {
        for j in 0..xs.len() {
            if xs[i].obj().dim() * xs[j].obj().dim() <= 64 {
                out.push((i, j));
            }
        }
    }
    out
}

fn c8() -> Result<Report> {
    use FunctorId::*;
    let hs = [group_algebra(2)?, group_algebra(3)?, sweedler()];
    let jobs: Vec<(usize, FunctorId)> =
        (0..hs.len()).flat_map(|i| [F1, A, E, S, T, L, Ch].into_iter().map(move |f| (i, f))).collect();
    let subs: Vec<Result<Report>> = jobs
        .par_iter()
        .map(|&(i, f)| {
            let h = &hs[i];
            let mut rep = Report::new();
            let xs = sample_objects(h, f.source())?;
            let pre = format!("{}.{}", h.name, f.tag());
            let full = !matches!(f, L | Ch);
            if full {
                for (k, x) in xs.iter().enumerate() {
                    summarize(
                        &mut rep,
                        format!("{pre}.roundtrip.{k}"),
                        &check_functor(f, x, None, Property::Roundtrip)?,
                    );
                }
            }
            let mut counterexample = None;
            for (a, b) in small_pairs(&xs) {
                let (x, y) = (&xs[a], &xs[b]);
                let mon = check_functor(f, x, Some(y), Property::Monoidal)?;
                summarize(&mut rep, format!("{pre}.monoidal.{a}.{b}"), &mon);
                let br = check_functor(f, x, Some(y), Property::Braided)?;
                if full {
                    summarize(&mut rep, format!("{pre}.braided.{a}.{b}"), &br);
                } else if counterexample.is_none() {
                    if let Some(c) = br.checks.iter().find(|c| c.status == crate::report::Status::Fail) {
                        counterexample = Some(format!("pair ({a},{b}): {}", c.witness.clone().unwrap_or_default()));
                    }
                }
            }
            if !full {
                rep.push(
                    format!("{pre}.braided_counterexample"),
                    if counterexample.is_some() { crate::report::Status::Pass } else { crate::report::Status::Fail },
                    Some(counterexample.unwrap_or_else(|| "braidings preserved on every sample pair".into())),
                );
            }
            Ok(rep)
        })
        .collect();
    let mut rep = Report::new();
    for s in subs {
        rep.extend("", s?);
    }
    // L and Ch fail to be braided somewhere: the claim is existential over the algebras.
    for f in [L, Ch] {
        let hits: Vec<String> = rep
            .checks
            .iter()
            .filter(|c| c.check.ends_with(&format!(".{}.braided_counterexample", f.tag())))
            .filter(|c| c.status == crate::report::Status::Pass)
            .map(|c| format!("{}: {}", c.check, c.witness.clone().unwrap_or_default()))
            .collect();
        rep.flag(format!("{}.not_braided", f.tag()), !hits.is_empty(), "no counterexample found");
    }
    // per-algebra counterexample search results are data, the aggregate above is the claim
    for c in rep.checks.iter_mut() {
        if c.check.ends_with(".braided_counterexample") && c.status == crate::report::Status::Fail {
            c.status = crate::report::Status::Pass;
            c.witness = Some(format!("value=false ({})", c.witness.clone().unwrap_or_default()));
        }
    }
    Ok(rep)
}

fn c9() -> Result<Report> {
    let mut rep = Report::new();
    let k3 = group_algebra(3)?;
    let z = check_equivalence_lemmas(&k3, Lemma::Zhang, None)?;
    let all_true = (1..=7).all(|i| note_value(&z, &format!("zhang.{i}")));
    rep.extend("kZ3.", z);
    rep.flag("kZ3.all_true", all_true, "some condition false");
    let (a, ctx) = cyclic_context(2, 1)?;
    for (c, want) in [(1, false), (2, true)] {
        let x = character(&a, 4, c);
        let s = symmetricity_conditions(&ctx, &x);
        let vals: Vec<bool> = s
            .checks
            .iter()
            .filter(|k| k.check != "symmetric.agree")
            .map(|k| k.witness.as_deref() == Some("value=true"))
            .collect();
        rep.extend(&format!("chi{c}."), s);
        rep.flag(format!("chi{c}.all_{want}"), vals.iter().all(|v| *v == want), format!("{vals:?}"));
    }
    Ok(rep)
}

fn c10() -> Result<Report> {
    let mut rep = Report::new();
    // basis of H(1,1,(1)) in PBW order: 1, x, g, gx
    let r = hmnd_r(&FamilyParams::new(1, &[1], Some(1)))?;
    let half = Cyc::from_ratio(1, 2);
    let (one, g) = (0, 2);
    let expected = LinMap::from_fn(&[], &[4, 4], |c, _| {
        let (i, j) = (c / 4, c % 4);
        match (i, j) {
            (a, b) if a == one && b == one => half.clone(),
            (a, b) if (a == one && b == g) || (a == g && b == one) => half.clone(),
            (a, b) if a == g && b == g => -&half,
            _ => Cyc::zero(),
        }
    });
    rep.record("hmnd_r.1_1_1_1", map_equal(&r, &expected));
    // valid s: admissible for some one-generator family H(m,1,(d)), d odd
    for m in 1..=3 {
        for d in (1..2 * m).step_by(2) {
            let base = FamilyParams::new(m, &[d], None);
            for s in (0..2 * m).filter(|&s| base.s_valid(s)) {
                let p = FamilyParams::new(m, &[d], Some(s));
                let qt = check_quasitriangular(&hmnd(&p)?, &hmnd_r(&p)?)?;
                let tri = note_value(&qt, "triangular");
                rep.flag(format!("triangular.m{m}.d{d}.s{s}"), tri == (s == m), format!("triangular={tri}"));
            }
        }
    }
    let depth = probe_depth();
    for p in [
        FamilyParams::new(1, &[1], Some(1)),
        FamilyParams::new(2, &[1], Some(2)),
        FamilyParams::new(3, &[1, 1], Some(3)),
    ] {
        let id = format!("demo.{}_{}_{:?}", p.m, p.n, p.d);
        rep.extend(&format!("{id}."), transparency_demo(&p, None, depth)?);
    }
    for p in [FamilyParams::new(1, &[1], Some(1)), FamilyParams::new(2, &[1, 1], Some(2))] {
        let id = format!("biproduct.{}_{}_{:?}", p.m, p.n, p.d);
        rep.extend(&format!("{id}."), biproduct_decompose_check(&p)?);
    }
    Ok(rep)
}

fn c11() -> Result<Report> {
    let mut rep = Report::new();
    let h = sweedler();
    let c = to_center(&adjoint_yd_module(&h))?;
    rep.extend("adjoint_sweedler.", check_center(&c));
    let depth = probe_depth();
    for h in [group_algebra(2)?, sweedler()] {
        rep.extend(&format!("embedding.{}.", h.name), embedding_check(&h, depth)?);
    }
    let ql = quantum_line(2, 1)?;
    match embedding_check(&ql, depth) {
        Err(Error::TransparencyViolated(w)) => {
            rep.push("embedding.refuses.quantum_line", crate::report::Status::Pass, Some(w))
        }
        Err(e) => rep.fail("embedding.refuses.quantum_line", format!("wrong error: {e}")),
        Ok(_) => rep.fail("embedding.refuses.quantum_line", "accepted a non-transparent H"),
    }
    Ok(rep)
}

fn c12() -> Result<Report> {
    let mut rep = Report::new();
    let depth = probe_depth();
    let value = note_value;
    for n in 2..=4 {
        let h = group_algebra(n)?;
        let r = check_braiding_linearity(&h, depth);
        let pos = value(&r, "braid_lin.i.linear") && value(&r, "braid_lin.ii.colinear");
        rep.extend(&format!("{}.", h.name), r);
        rep.flag(format!("{}.positive", h.name), pos, "Φ not (co)linear on a transparent commutative cocommutative H");
    }
    let h = sweedler();
    let r = check_braiding_linearity(&h, depth);
    let neg = !value(&r, "braid_lin.i.linear") && !value(&r, "braid_lin.ii.colinear");
    rep.extend("sweedler.", r);
    rep.flag("sweedler.negative", neg, "Φ (co)linear on a noncommutative H");
    Ok(rep)
}
