//! Dense multilinear maps between tensor products of based spaces.
//!
//! Entries are stored row-major over (codomain multi-index, domain multi-index)
//! with the leftmost tensor factor most significant. Composite string diagrams
//! are evaluated column by column on sparse vectors ([`Vector`], [`Program`]),
//! so intermediate identities never get materialized.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::{Cyc, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("compose mismatch: {left:?} vs {right:?}")]
    ComposeMismatch { left: Vec<usize>, right: Vec<usize> },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("map is singular")]
    Singular,
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub fn size(dims: &[usize]) -> usize {
    dims.iter().product()
}

/// Splits a flat index into its multi-index over `dims`.
pub fn unflatten(dims: &[usize], mut idx: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (k, d) in dims.iter().enumerate().rev() {
        out[k] = idx % d;
        idx /= d;
    }
    out
}

pub fn flatten(dims: &[usize], multi: &[usize]) -> usize {
    dims.iter().zip(multi).fold(0, |acc, (d, i)| acc * d + i)
}

type Columns = Arc<Vec<Vec<(usize, Cyc)>>>;

#[derive(Clone)]
pub struct LinMap {
    dom: Vec<usize>,
    cod: Vec<usize>,
    entries: Vec<Cyc>,
    cols: OnceLock<Columns>,
}

/// First position where two maps differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub cod_index: Vec<usize>,
    pub dom_index: Vec<usize>,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "entry cod={:?} dom={:?}: {} vs {}", self.cod_index, self.dom_index, self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equality {
    Equal,
    SignatureDiffers { left: (Vec<usize>, Vec<usize>), right: (Vec<usize>, Vec<usize>) },
    EntryDiffers(Mismatch),
}

impl Equality {
    pub fn holds(&self) -> bool {
        matches!(self, Equality::Equal)
    }

    pub fn witness(&self) -> Option<String> {
        match self {
            Equality::Equal => None,
            Equality::SignatureDiffers { left, right } => {
                Some(format!("signature {:?}->{:?} vs {:?}->{:?}", left.0, left.1, right.0, right.1))
            }
            Equality::EntryDiffers(m) => Some(m.to_string()),
        }
    }
}

impl LinMap {
    pub fn zeros(dom: &[usize], cod: &[usize]) -> Self {
        let n = size(dom) * size(cod);
        LinMap { dom: dom.to_vec(), cod: cod.to_vec(), entries: vec![Cyc::zero(); n], cols: OnceLock::new() }
    }

    pub fn identity(dims: &[usize]) -> Self {
        let mut m = LinMap::zeros(dims, dims);
        for i in 0..size(dims) {
            m.set(i, i, Cyc::one());
        }
        m
    }

    /// Builds a map from its entry function `f(cod_index, dom_index)`.
    pub fn from_fn(dom: &[usize], cod: &[usize], f: impl Fn(usize, usize) -> Cyc) -> Self {
        let (dn, cn) = (size(dom), size(cod));
        let mut entries = Vec::with_capacity(dn * cn);
        for c in 0..cn {
            for d in 0..dn {
                entries.push(f(c, d));
            }
        }
        LinMap { dom: dom.to_vec(), cod: cod.to_vec(), entries, cols: OnceLock::new() }
    }

    pub fn from_entries(dom: &[usize], cod: &[usize], entries: Vec<Cyc>) -> Result<Self, MapError> {
        let expected = size(dom) * size(cod);
        if entries.len() != expected {
            return Err(MapError::LengthMismatch { expected, got: entries.len() });
        }
        Ok(LinMap { dom: dom.to_vec(), cod: cod.to_vec(), entries, cols: OnceLock::new() })
    }

    /// An element of the tensor product `cod`, as a map from the unit object.
    pub fn element(cod: &[usize], coords: Vec<Cyc>) -> Result<Self, MapError> {
        LinMap::from_entries(&[], cod, coords)
    }

    /// Assembles a map from the images of the domain basis vectors.
    pub fn from_columns(dom: &[usize], cod: &[usize], columns: &[Vector]) -> Self {
        let dn = size(dom);
        let mut m = LinMap::zeros(dom, cod);
        for (d, v) in columns.iter().enumerate() {
            for (c, x) in &v.terms {
                m.entries[c * dn + d] = x.clone();
            }
        }
        m
    }

    pub fn dom(&self) -> &[usize] {
        &self.dom
    }

    pub fn cod(&self) -> &[usize] {
        &self.cod
    }

    pub fn dom_size(&self) -> usize {
        size(&self.dom)
    }

    pub fn cod_size(&self) -> usize {
        size(&self.cod)
    }

    pub fn entries(&self) -> &[Cyc] {
        &self.entries
    }

    pub fn get(&self, c: usize, d: usize) -> &Cyc {
        &self.entries[c * self.dom_size() + d]
    }

    pub fn set(&mut self, c: usize, d: usize, v: Cyc) {
        let dn = self.dom_size();
        self.entries[c * dn + d] = v;
        self.cols = OnceLock::new();
    }

    /// Least conductor containing every entry.
    pub fn conductor(&self) -> u32 {
        self.entries.iter().fold(1u32, |acc, x| {
            if x.is_zero() || x.as_rational().is_some() {
                acc
            } else {
                num_integer::lcm(acc, x.conductor())
            }
        })
    }

    /// Same entries with different factor lists of equal products.
    pub fn reshape(&self, dom: &[usize], cod: &[usize]) -> Self {
        assert_eq!(size(dom), self.dom_size(), "reshape must keep the domain size");
        assert_eq!(size(cod), self.cod_size(), "reshape must keep the codomain size");
        LinMap { dom: dom.to_vec(), cod: cod.to_vec(), entries: self.entries.clone(), cols: OnceLock::new() }
    }

    /// Nonzero entries of each column.
    pub fn columns(&self) -> Columns {
        self.cols
            .get_or_init(|| {
                let dn = self.dom_size();
                let mut cols = vec![Vec::new(); dn];
                for (k, x) in self.entries.iter().enumerate() {
                    if !x.is_zero() {
                        cols[k % dn].push((k / dn, x.clone()));
                    }
                }
                Arc::new(cols)
            })
            .clone()
    }

    pub fn column(&self, d: usize) -> Vector {
        let cols = self.columns();
        Vector { dims: self.cod.clone(), terms: cols[d].to_vec() }
    }

    pub fn transpose(&self) -> Self {
        let dn = self.dom_size();
        LinMap::from_fn(&self.cod, &self.dom, |c, d| self.entries[d * dn + c].clone())
    }

    pub fn scale(&self, s: &Cyc) -> Self {
        let entries = self.entries.iter().map(|x| x * s).collect();
        LinMap { dom: self.dom.clone(), cod: self.cod.clone(), entries, cols: OnceLock::new() }
    }

    pub fn add(&self, other: &LinMap) -> Result<Self, MapError> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(LinMap { dom: self.dom.clone(), cod: self.cod.clone(), entries, cols: OnceLock::new() })
    }

    pub fn sub(&self, other: &LinMap) -> Result<Self, MapError> {
        self.same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(LinMap { dom: self.dom.clone(), cod: self.cod.clone(), entries, cols: OnceLock::new() })
    }

    fn same_shape(&self, other: &LinMap) -> Result<(), MapError> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(MapError::ComposeMismatch { left: self.cod.clone(), right: other.cod.clone() });
        }
        Ok(())
    }

    /// `g ∘ f`.
    pub fn compose(g: &LinMap, f: &LinMap) -> Result<Self, MapError> {
        if f.cod != g.dom {
            return Err(MapError::ComposeMismatch { left: g.dom.clone(), right: f.cod.clone() });
        }
        let gcols = g.columns();
        let fcols = f.columns();
        let columns: Vec<Vector> = fcols
            .par_iter()
            .map(|col| {
                let mut acc: HashMap<usize, Cyc> = HashMap::new();
                for (k, x) in col {
                    for (c, y) in &gcols[*k] {
                        accumulate(&mut acc, *c, x * y);
                    }
                }
                Vector::from_map(&g.cod, acc)
            })
            .collect();
        Ok(LinMap::from_columns(&f.dom, &g.cod, &columns))
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &LinMap) -> Self {
        let dom: Vec<usize> = self.dom.iter().chain(&other.dom).copied().collect();
        let cod: Vec<usize> = self.cod.iter().chain(&other.cod).copied().collect();
        let (od, oc) = (other.dom_size(), other.cod_size());
        let dn = size(&dom);
        let mut m = LinMap::zeros(&dom, &cod);
        let (sc, oc_cols) = (self.columns(), other.columns());
        for (d1, col1) in sc.iter().enumerate() {
            for (d2, col2) in oc_cols.iter().enumerate() {
                for (c1, x) in col1 {
                    for (c2, y) in col2 {
                        m.entries[(c1 * oc + c2) * dn + d1 * od + d2] = x * y;
                    }
                }
            }
        }
        m
    }

    /// Matrix-vector product over the flat domain.
    pub fn apply(&self, v: &[Cyc]) -> Result<Vec<Cyc>, MapError> {
        if v.len() != self.dom_size() {
            return Err(MapError::LengthMismatch { expected: self.dom_size(), got: v.len() });
        }
        let mut out = vec![Cyc::zero(); self.cod_size()];
        let cols = self.columns();
        for (d, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, y) in &cols[d] {
                out[*c] += &(x * y);
            }
        }
        Ok(out)
    }

    /// Two-sided inverse of a square map, by exact Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, MapError> {
        let n = self.dom_size();
        if n != self.cod_size() {
            return Err(MapError::Singular);
        }
        let mut a: Vec<Vec<Cyc>> = (0..n).map(|r| self.entries[r * n..(r + 1) * n].to_vec()).collect();
        let mut inv: Vec<Vec<Cyc>> =
            (0..n).map(|r| (0..n).map(|c| if r == c { Cyc::one() } else { Cyc::zero() }).collect()).collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(MapError::Singular)?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col].inv()?;
            for k in 0..n {
                a[col][k] = &a[col][k] * &p;
                inv[col][k] = &inv[col][k] * &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for k in 0..n {
                        if !a[col][k].is_zero() {
                            let t = &f * &a[col][k];
                            a[r][k] = &a[r][k] - &t;
                        }
                        if !inv[col][k].is_zero() {
                            let t = &f * &inv[col][k];
                            inv[r][k] = &inv[r][k] - &t;
                        }
                    }
                }
            }
        }
        let entries = inv.into_iter().flatten().collect();
        LinMap::from_entries(&self.cod, &self.dom, entries)
    }

    /// Header `dom=[..];cod=[..];N=<conductor>` followed by one line per row.
    pub fn to_text(&self) -> String {
        let n = self.conductor();
        let list = |v: &[usize]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
        let mut out = format!("dom=[{}];cod=[{}];N={}\n", list(&self.dom), list(&self.cod), n);
        let dn = self.dom_size().max(1);
        for row in self.entries.chunks(dn) {
            let line: Vec<String> = row.iter().map(|x| x.to_text(n)).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        if self.dom_size() == 0 || self.cod_size() == 0 {
            out.push('\n');
        }
        out
    }

    /// Parses one serialized map from the start of `text`; returns it and the bytes consumed.
    pub fn parse(text: &str) -> Result<(Self, usize), MapError> {
        parse_linmap(text, 0)
    }
}

fn accumulate(acc: &mut HashMap<usize, Cyc>, k: usize, x: Cyc) {
    match acc.get_mut(&k) {
        Some(v) => *v += &x,
        None => {
            acc.insert(k, x);
        }
    }
}

/// Parses a map starting at byte `base` of some enclosing document; error offsets are absolute.
pub fn parse_linmap(text: &str, base: usize) -> Result<(LinMap, usize), MapError> {
    let err = |off: usize, msg: &str| MapError::Parse { offset: base + off, msg: msg.to_string() };
    let start = text.len() - text.trim_start().len();
    let line_end = text[start..].find('\n').map(|k| start + k).unwrap_or(text.len());
    let header = &text[start..line_end];
    let mut dom = None;
    let mut cod = None;
    let mut cond = None;
    let mut off = start;
    for part in header.split(';') {
        let (k, v) = part.split_once('=').ok_or_else(|| err(off, "expected key=value in header"))?;
        let parse_list = |v: &str| -> Result<Vec<usize>, MapError> {
            let inner = v.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']'));
            let inner = inner.ok_or_else(|| err(off, "expected [..] dimension list"))?;
            if inner.trim().is_empty() {
                return Ok(vec![]);
            }
            inner.split(',').map(|d| d.trim().parse::<usize>().map_err(|_| err(off, "bad dimension"))).collect()
        };
        match k.trim() {
            "dom" => dom = Some(parse_list(v)?),
            "cod" => cod = Some(parse_list(v)?),
            "N" => cond = Some(v.trim().parse::<u32>().map_err(|_| err(off, "bad conductor"))?),
            _ => return Err(err(off, "unknown header key")),
        }
        off += part.len() + 1;
    }
    let (dom, cod, n) = match (dom, cod, cond) {
        (Some(d), Some(c), Some(n)) if n >= 1 => (d, c, n),
        _ => return Err(err(start, "header needs dom, cod and N>=1")),
    };
    let count = size(&dom) * size(&cod);
    let mut entries = Vec::with_capacity(count);
    let mut pos = line_end;
    while entries.len() < count {
        let rest = &text[pos..];
        let skip = rest.len() - rest.trim_start().len();
        pos += skip;
        if pos >= text.len() {
            return Err(err(pos, "unexpected end of entries"));
        }
        let tok_len = text[pos..].find(char::is_whitespace).unwrap_or(text.len() - pos);
        let tok = &text[pos..pos + tok_len];
        let x = Cyc::parse(n, tok).map_err(|_| err(pos, &format!("bad scalar `{tok}`")))?;
        entries.push(x);
        pos += tok_len;
    }
    let m = LinMap::from_entries(&dom, &cod, entries).map_err(|_| err(pos, "entry count"))?;
    Ok((m, pos))
}

impl PartialEq for LinMap {
    fn eq(&self, other: &Self) -> bool {
        map_equal(self, other).holds()
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinMap({:?} -> {:?})", self.dom, self.cod)?;
        if self.entries.len() <= 64 {
            write!(f, " [")?;
            for (k, x) in self.entries.iter().enumerate() {
                if k > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Exact comparison; on failure reports the first differing entry.
pub fn map_equal(f: &LinMap, g: &LinMap) -> Equality {
    if f.dom != g.dom || f.cod != g.cod {
        return Equality::SignatureDiffers {
            left: (f.dom.clone(), f.cod.clone()),
            right: (g.dom.clone(), g.cod.clone()),
        };
    }
    let dn = f.dom_size().max(1);
    for (k, (a, b)) in f.entries.iter().zip(&g.entries).enumerate() {
        if a != b {
            return Equality::EntryDiffers(Mismatch {
                cod_index: unflatten(&f.cod, k / dn),
                dom_index: unflatten(&f.dom, k % dn),
                left: a.to_string(),
                right: b.to_string(),
            });
        }
    }
    Equality::Equal
}

/// `e_i ⊗ e_j ↦ e_j ⊗ e_i`.
pub fn vec_swap(x: usize, y: usize) -> LinMap {
    let mut m = LinMap::zeros(&[x, y], &[y, x]);
    for i in 0..x {
        for j in 0..y {
            m.set(j * x + i, i * y + j, Cyc::one());
        }
    }
    m
}

/// Evaluation `P* ⊗ P → I`, `e^i ⊗ e_j ↦ δ_ij`.
pub fn ev(dim: usize) -> LinMap {
    let mut m = LinMap::zeros(&[dim, dim], &[]);
    for i in 0..dim {
        m.set(0, i * dim + i, Cyc::one());
    }
    m
}

/// Dual basis `I → P ⊗ P*`, `1 ↦ Σ e_i ⊗ e^i`.
pub fn coev(dim: usize) -> LinMap {
    let mut m = LinMap::zeros(&[], &[dim, dim]);
    for i in 0..dim {
        m.set(i * dim + i, 0, Cyc::one());
    }
    m
}

/// A sparse vector in a tensor product of based spaces.
#[derive(Clone, Debug)]
pub struct Vector {
    pub dims: Vec<usize>,
    pub terms: Vec<(usize, Cyc)>,
}

impl Vector {
    pub fn basis(dims: &[usize], idx: usize) -> Self {
        Vector { dims: dims.to_vec(), terms: vec![(idx, Cyc::one())] }
    }

    fn from_map(dims: &[usize], acc: HashMap<usize, Cyc>) -> Self {
        let mut terms: Vec<(usize, Cyc)> = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        terms.sort_by_key(|(k, _)| *k);
        Vector { dims: dims.to_vec(), terms }
    }

    /// Applies `f` to the wires `at .. at + f.dom().len()`.
    pub fn apply_at(&self, at: usize, f: &LinMap) -> Vector {
        let k = f.dom().len();
        assert!(at + k <= self.dims.len(), "apply_at out of range");
        assert_eq!(&self.dims[at..at + k], f.dom(), "wire dimensions do not match map domain");
        let right: usize = size(&self.dims[at + k..]);
        let (mid_in, mid_out) = (f.dom_size(), f.cod_size());
        let cols = f.columns();
        let mut acc = HashMap::with_capacity(self.terms.len());
        for (idx, x) in &self.terms {
            let r = idx % right;
            let rest = idx / right;
            let m = rest % mid_in;
            let l = rest / mid_in;
            for (c, y) in &cols[m] {
                accumulate(&mut acc, (l * mid_out + c) * right + r, x * y);
            }
        }
        let mut dims = self.dims[..at].to_vec();
        dims.extend_from_slice(f.cod());
        dims.extend_from_slice(&self.dims[at + k..]);
        Vector::from_map(&dims, acc)
    }

    /// Exchanges wires `at` and `at + 1`.
    pub fn swap_at(&self, at: usize) -> Vector {
        let (a, b) = (self.dims[at], self.dims[at + 1]);
        let right = size(&self.dims[at + 2..]);
        let terms = self
            .terms
            .iter()
            .map(|(idx, x)| {
                let r = idx % right;
                let rest = idx / right;
                let j = rest % b;
                let i = (rest / b) % a;
                let l = rest / (a * b);
                (((l * b + j) * a + i) * right + r, x.clone())
            })
            .collect::<Vec<_>>();
        let mut dims = self.dims.clone();
        dims.swap(at, at + 1);
        let mut v = Vector { dims, terms };
        v.terms.sort_by_key(|(k, _)| *k);
        v
    }

    /// Merges wires `at .. at + k` into one wire.
    pub fn merge(&self, at: usize, k: usize) -> Vector {
        let mut dims = self.dims[..at].to_vec();
        dims.push(size(&self.dims[at..at + k]));
        dims.extend_from_slice(&self.dims[at + k..]);
        Vector { dims, terms: self.terms.clone() }
    }

    /// Splits wire `at` into wires of the given dimensions.
    pub fn split(&self, at: usize, parts: &[usize]) -> Vector {
        assert_eq!(size(parts), self.dims[at], "split must keep the wire dimension");
        let mut dims = self.dims[..at].to_vec();
        dims.extend_from_slice(parts);
        dims.extend_from_slice(&self.dims[at + 1..]);
        Vector { dims, terms: self.terms.clone() }
    }

    pub fn scale(&self, s: &Cyc) -> Vector {
        let terms = self.terms.iter().map(|(k, x)| (*k, x * s)).filter(|(_, x)| !x.is_zero()).collect();
        Vector { dims: self.dims.clone(), terms }
    }
}

/// One step of a compiled diagram.
#[derive(Clone, Debug)]
pub enum Op {
    Apply { at: usize, f: Arc<LinMap> },
    Swap { at: usize },
    Merge { at: usize, k: usize },
    Split { at: usize, parts: Vec<usize> },
}

/// A straight-line diagram evaluated column by column.
#[derive(Clone, Debug)]
pub struct Program {
    pub dom: Vec<usize>,
    pub ops: Vec<Op>,
}

impl Program {
    pub fn run(&self, v: &Vector) -> Vector {
        let mut v = v.clone();
        for op in &self.ops {
            v = match op {
                Op::Apply { at, f } => v.apply_at(*at, f),
                Op::Swap { at } => v.swap_at(*at),
                Op::Merge { at, k } => v.merge(*at, *k),
                Op::Split { at, parts } => v.split(*at, parts),
            };
        }
        v
    }

    /// Evaluates on every basis vector of the domain; `cod` gives the output wires.
    pub fn to_map(&self, cod: &[usize]) -> LinMap {
        let n = size(&self.dom);
        let columns: Vec<Vector> = (0..n).into_par_iter().map(|d| self.run(&Vector::basis(&self.dom, d))).collect();
        if let Some(c) = columns.first() {
            assert_eq!(size(&c.dims), size(cod), "program output does not match codomain");
        }
        LinMap::from_columns(&self.dom, cod, &columns)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(dom: &[usize], cod: &[usize], seed: i64) -> LinMap {
        LinMap::from_fn(dom, cod, |c, d| Cyc::from_int(((c as i64 * 7 + d as i64 * 3 + seed) % 5) - 2))
    }

    #[test]
    fn compose_examples() {
        let id2 = LinMap::identity(&[2]);
        assert_eq!(LinMap::compose(&id2, &id2).unwrap(), id2);
        let s = LinMap::compose(&vec_swap(2, 3), &vec_swap(3, 2)).unwrap();
        assert_eq!(s, LinMap::identity(&[3, 2]));
        // (ev ⊗ id)(id ⊗ coev) = id on P*
        let lhs =
            LinMap::compose(&ev(2).tensor(&LinMap::identity(&[2])), &LinMap::identity(&[2]).tensor(&coev(2))).unwrap();
        assert_eq!(lhs, LinMap::identity(&[2]));
        assert!(LinMap::compose(&id2, &LinMap::identity(&[3])).is_err());
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(LinMap::identity(&[2]).tensor(&LinMap::identity(&[3])), LinMap::identity(&[2, 3]));
        let f = small(&[2], &[3], 1);
        assert_eq!(f.tensor(&LinMap::identity(&[])), f);
        let g = ev(2).tensor(&coev(2));
        assert_eq!((g.dom(), g.cod()), (&[2usize, 2][..], &[2usize, 2][..]));
    }

    #[test]
    fn swap_and_apply() {
        let s = vec_swap(2, 2);
        assert_eq!(s.get(2, 1), &Cyc::one());
        let v = s.apply(&[Cyc::zero(), Cyc::one(), Cyc::zero(), Cyc::zero()]).unwrap();
        assert_eq!(v[2], Cyc::one());
        assert_eq!(vec_swap(1, 5), LinMap::identity(&[5]).reshape(&[1, 5], &[5, 1]));
        assert_eq!(ev(2).apply(&[Cyc::one(), Cyc::zero(), Cyc::zero(), Cyc::zero()]).unwrap(), vec![Cyc::one()]);
        assert!(s.apply(&[Cyc::one()]).is_err());
    }

    #[test]
    fn equality_witness() {
        let e = map_equal(&LinMap::identity(&[2, 2]), &vec_swap(2, 2));
        match e {
            Equality::EntryDiffers(m) => {
                assert_eq!(m.cod_index, vec![0, 1]);
                assert_eq!(m.dom_index, vec![0, 1]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn snakes() {
        for d in 1..=6 {
            let id = LinMap::identity(&[d]);
            let a = LinMap::compose(&id.tensor(&ev(d)), &coev(d).tensor(&id)).unwrap();
            let b = LinMap::compose(&ev(d).tensor(&id), &id.tensor(&coev(d))).unwrap();
            assert_eq!(a, id);
            assert_eq!(b, id);
        }
    }

    #[test]
    fn program_matches_dense() {
        let f = small(&[2, 3], &[3], 2);
        let g = small(&[3, 2], &[2, 2, 2], 4);
        let prog = Program {
            dom: vec![2, 3, 2],
            ops: vec![
                Op::Apply { at: 0, f: Arc::new(f.clone()) },
                Op::Apply { at: 0, f: Arc::new(g.clone()) },
                Op::Swap { at: 1 },
            ],
        };
        let dense = LinMap::compose(
            &LinMap::identity(&[2]).tensor(&vec_swap(2, 2)),
            &LinMap::compose(&g, &f.tensor(&LinMap::identity(&[2]))).unwrap(),
        )
        .unwrap();
        assert_eq!(prog.to_map(&[2, 2, 2]), dense);
    }

    #[test]
    fn inverse_and_text() {
        let m = LinMap::from_fn(&[3], &[3], |c, d| Cyc::from_int(if c == d { 2 } else { (c + d) as i64 }));
        let inv = m.inverse().unwrap();
        assert_eq!(LinMap::compose(&m, &inv).unwrap(), LinMap::identity(&[3]));
        let i = Cyc::root_of_unity(4, 1).unwrap();
        let t = m.scale(&i);
        let (back, _) = LinMap::parse(&t.to_text()).unwrap();
        assert_eq!(back, t);
        assert!(LinMap::zeros(&[2], &[2]).inverse().is_err());
    }
}
