//! Text formats for algebras and modules, and the built-in objects addressable by name.
//!
//! Algebra file:
//! ```text
//! conductor=<N>
//! dim=<d>
//! <mult> <comult> <unit> <counit> <antipode> <antipode_inv | auto>
//! ```
//! Module file:
//! ```text
//! algebra=<path or builtin:name>
//! variant=<YD tag>          (or dmodule=left|right)
//! <action> [<coaction>]
//! ```

use std::path::{Path, PathBuf};

use crate::double::drinfeld_double;
use crate::error::{Error, Result};
use crate::examples::{group_algebra, hmnd, sweedler, FamilyParams};
use crate::functors::{sample_objects, CatObj, DModule, Source};
use crate::hopf::{Hopf, Parts, Side};
use crate::multilinear::{parse_linmap, LinMap, MapError};
use crate::yd::{adjoint_ll_module, adjoint_yd_module, coadjoint_ll_module, Variant, YdModule};

fn perr(offset: usize, msg: impl Into<String>) -> Error {
    Error::Map(MapError::Parse { offset, msg: msg.into() })
}

pub fn algebra_to_text(h: &Hopf) -> String {
    let maps = [&h.mult, &h.comult, &h.unit, &h.counit, &h.antipode, &h.antipode_inv];
    let n = maps.iter().fold(1u32, |acc, m| num_integer::lcm(acc, m.conductor()));
    let mut out = format!("conductor={n}\ndim={}\n", h.dim);
    for m in maps {
        out.push_str(&m.to_text());
    }
    out
}

/// Offset of the first non-blank byte at or after `pos`.
fn skip_blank(text: &str, pos: usize) -> usize {
    let rest = &text[pos..];
    pos + (rest.len() - rest.trim_start().len())
}

/// Reads `key=value` on the next non-blank line starting at `pos`.
fn header_field(text: &str, pos: &mut usize, key: &str) -> Result<String> {
    let start = skip_blank(text, *pos);
    let end = text[start..].find('\n').map(|k| start + k).unwrap_or(text.len());
    let line = &text[start..end];
    let (k, v) = line.split_once('=').ok_or_else(|| perr(start, format!("expected `{key}=...`")))?;
    if k.trim() != key {
        return Err(perr(start, format!("expected `{key}=...`, found `{}`", k.trim())));
    }
    *pos = end;
    Ok(v.trim().to_string())
}

fn next_map(text: &str, pos: &mut usize) -> Result<LinMap> {
    let (m, used) = parse_linmap(&text[*pos..], *pos)?;
    *pos += used;
    Ok(m)
}

fn at_token(text: &str, pos: usize, tok: &str) -> bool {
    text[pos..].trim_start().starts_with(tok)
}

pub fn parse_algebra(text: &str, name: &str) -> Result<Hopf> {
    let mut pos = 0;
    let cond_at = skip_blank(text, pos);
    let conductor: u32 = header_field(text, &mut pos, "conductor")?
        .parse()
        .map_err(|_| perr(cond_at, "conductor must be a positive integer"))?;
    if conductor == 0 {
        return Err(perr(cond_at, "conductor must be a positive integer"));
    }
    let dim_at = skip_blank(text, pos);
    let dim: usize =
        header_field(text, &mut pos, "dim")?.parse().map_err(|_| perr(dim_at, "dim must be an integer"))?;
    let mut maps = Vec::with_capacity(5);
    for _ in 0..5 {
        let at = skip_blank(text, pos);
        let m = next_map(text, &mut pos)?;
        if m.conductor() > 1 && !conductor.is_multiple_of(m.conductor()) {
            return Err(perr(at, format!("map conductor {} does not divide {conductor}", m.conductor())));
        }
        maps.push(m);
    }
    let antipode_inv = if at_token(text, pos, "auto") { None } else { Some(next_map(text, &mut pos)?) };
    let mut it = maps.into_iter();
    let mut take = || it.next().expect("five maps");
    let parts = Parts { mult: take(), comult: take(), unit: take(), counit: take(), antipode: take(), antipode_inv };
    let h = Hopf::new(name, &crate::context::Ctx::vec(), None, parts)?;
    if h.dim != dim {
        return Err(perr(dim_at, format!("dim={dim} but the maps have dimension {}", h.dim)));
    }
    Ok(h)
}

/// Built-in algebras: `kZ<N>`, `sweedler`, `hmnd:<m>:<d1,d2,..>`.
pub fn builtin_algebra(name: &str) -> Result<Hopf> {
    if name == "sweedler" {
        return Ok(sweedler());
    }
    if let Some(n) = name.strip_prefix("kZ") {
        let n = n.parse().map_err(|_| Error::PreconditionViolated(format!("bad group order in `{name}`")))?;
        return group_algebra(n);
    }
    if let Some(rest) = name.strip_prefix("hmnd:") {
        let (m, d) = rest.split_once(':').unwrap_or((rest, ""));
        let m = m.parse().map_err(|_| Error::BadFamilyParams(format!("bad m in `{name}`")))?;
        let d = parse_list(d).map_err(|_| Error::BadFamilyParams(format!("bad d in `{name}`")))?;
        return hmnd(&FamilyParams::new(m, &d, None));
    }
    Err(Error::PreconditionViolated(format!("unknown built-in algebra `{name}`")))
}

pub fn parse_list(s: &str) -> std::result::Result<Vec<usize>, std::num::ParseIntError> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(|t| t.trim().parse()).collect()
}

/// Where an algebra comes from: a file or a built-in name.
pub fn load_algebra(spec: &str) -> std::result::Result<Hopf, LoadError> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtin_algebra(name).map_err(LoadError::Model);
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io(format!("{spec}: {e}")))?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| spec.into());
    parse_algebra(&text, &name).map_err(|e| LoadError::Parse(format!("{spec}: {e}")))
}

/// Failure to obtain an input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoadError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Model(Error),
}

/// Built-in modules over `h`: `adjoint` (LR_Hop), `adjoint_ll`, `coadjoint_ll`,
/// `regular_left`, `regular_right` (modules over the double), and the sample objects
/// `<variant tag>[:i]`, `dmod_left[:i]`, `dmod_right[:i]`.
pub fn builtin_module(name: &str, h: &Hopf) -> Result<CatObj> {
    Ok(match name {
        "adjoint" => CatObj::Yd(adjoint_yd_module(h)),
        "adjoint_ll" => CatObj::Yd(adjoint_ll_module(h)),
        "coadjoint_ll" => CatObj::Yd(coadjoint_ll_module(h)),
        "regular_left" => CatObj::DMod(DModule::regular(&drinfeld_double(h)?, Side::Left)),
        "regular_right" => CatObj::DMod(DModule::regular(&drinfeld_double(h)?, Side::Right)),
        _ => return sample_module(name, h),
    })
}

fn sample_module(name: &str, h: &Hopf) -> Result<CatObj> {
    let unknown = || Error::PreconditionViolated(format!("unknown built-in module `{name}`"));
    let (kind, idx) = match name.split_once(':') {
        Some((k, i)) => (k, i.parse::<usize>().map_err(|_| unknown())?),
        None => (name, 0),
    };
    let src = match kind {
        "dmod_left" => Source::DMod(Side::Left),
        "dmod_right" => Source::DMod(Side::Right),
        _ => Source::Yd(Variant::parse(kind).ok_or_else(unknown)?),
    };
    sample_objects(h, src)?.into_iter().nth(idx).ok_or_else(unknown)
}

/// Parses a module file; the algebra line is resolved relative to `dir`.
pub fn parse_module(text: &str, dir: &Path) -> std::result::Result<CatObj, LoadError> {
    let mut pos = 0;
    let pe = |e: Error| LoadError::Parse(e.to_string());
    let alg = header_field(text, &mut pos, "algebra").map_err(pe)?;
    let alg_spec = if alg.starts_with("builtin:") {
        alg
    } else {
        let p: PathBuf = dir.join(&alg);
        p.to_string_lossy().into_owned()
    };
    let h = load_algebra(&alg_spec)?;
    let kind_at = skip_blank(text, pos);
    let is_dmod = text[kind_at..].starts_with("dmodule");
    if is_dmod {
        let side = header_field(text, &mut pos, "dmodule").map_err(pe)?;
        let side = match side.as_str() {
            "left" => Side::Left,
            "right" => Side::Right,
            _ => return Err(pe(perr(kind_at, "dmodule must be left or right"))),
        };
        let act = next_map(text, &mut pos).map_err(pe)?;
        let d = drinfeld_double(&h).map_err(LoadError::Model)?;
        let dim = act.cod_size();
        let obj = crate::context::Obj::plain(dim);
        return DModule::new(&d, &obj, &act, side).map(CatObj::DMod).map_err(LoadError::Model);
    }
    let tag = header_field(text, &mut pos, "variant").map_err(pe)?;
    let variant = Variant::parse(&tag).ok_or_else(|| pe(perr(kind_at, format!("unknown variant `{tag}`"))))?;
    let act = next_map(text, &mut pos).map_err(pe)?;
    let coact = next_map(text, &mut pos).map_err(pe)?;
    let obj = crate::context::Obj::plain(act.cod_size());
    YdModule::new(&h, &obj, variant, &act, &coact).map(CatObj::Yd).map_err(LoadError::Model)
}

/// Loads a module from a file or `builtin:<name>`; built-ins live over `h`.
pub fn load_module(spec: &str, h: &Hopf) -> std::result::Result<CatObj, LoadError> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtin_module(name, h).map_err(LoadError::Model);
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io(format!("{spec}: {e}")))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    parse_module(&text, dir).map_err(|e| match e {
        LoadError::Parse(m) => LoadError::Parse(format!("{spec}: {m}")),
        other => other,
    })
}

pub fn yd_module_to_text(m: &YdModule, algebra: &str) -> String {
    format!("algebra={algebra}\nvariant={}\n{}{}", m.variant.tag(), m.action.to_text(), m.coaction.to_text())
}
