//! Encoders from classical combinatorial objects into multi-complexes, and
//! the edge-deletion formula for `P_C` in dimension at most one.

use std::collections::{BTreeSet, HashSet};

use crate::complex::{MultiComplex, Multiset};
use crate::error::{Error, Result};
use crate::hopf::{Element, Scalar};
use crate::iso::canonical_form;
use crate::limits::MAX_FACE_WORD;

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

/// A simple graph: one two-element face per edge.
pub fn from_graph(n: usize, edges: &[(usize, usize)]) -> Result<MultiComplex> {
    let mut seen = HashSet::new();
    for &(a, b) in edges {
        check_vertex(a, n)?;
        check_vertex(b, n)?;
        if a == b {
            return Err(Error::LoopNotAllowed(a));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
        }
    }
    from_multigraph(n, edges)
}

/// A multigraph: a loop at `a` becomes `{a, a}`, parallel edges become
/// repeated faces. No relations beyond the singleton ones.
pub fn from_multigraph(n: usize, edges: &[(usize, usize)]) -> Result<MultiComplex> {
    for &(a, b) in edges {
        check_vertex(a, n)?;
        check_vertex(b, n)?;
    }
    let faces = edges.iter().map(|&(a, b)| Multiset::from([a, b])).collect();
    MultiComplex::from_nonsingletons(n, faces, &[])
}

/// A hypergraph with one face per hyperedge.
///
/// Single-vertex hyperedges collide with the mandatory singletons; when
/// `allow_singleton_edges` is set they are encoded as `{a, a}`, otherwise
/// rejected.
pub fn from_hypergraph(
    n: usize,
    edges: &[Vec<usize>],
    allow_singleton_edges: bool,
) -> Result<MultiComplex> {
    let mut faces = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        let set: BTreeSet<usize> = e.iter().copied().collect();
        for &v in &set {
            check_vertex(v, n)?;
        }
        match set.len() {
            0 => return Err(Error::EmptyEdge(i)),
            1 if !allow_singleton_edges => return Err(Error::SingletonEdge(i)),
            1 => {
                let v = *set.iter().next().expect("one element");
                faces.push(Multiset::from([v, v]));
            }
            _ => faces.push(Multiset::new(set)),
        }
    }
    MultiComplex::from_nonsingletons(n, faces, &[])
}

/// An abstract simplicial complex given by its full face family, ordered by
/// inclusion. Singletons may be listed or omitted; every vertex of `0..n`
/// is a 0-simplex.
pub fn from_simplicial(n: usize, faces: &[Vec<usize>]) -> Result<MultiComplex> {
    let family = simplex_family(n, faces)?;
    let list: Vec<&BTreeSet<usize>> = family.iter().filter(|f| f.len() >= 2).collect();
    let contents = list
        .iter()
        .map(|f| Multiset::new(f.iter().copied()))
        .collect();
    let mut pairs = Vec::new();
    for (i, a) in list.iter().enumerate() {
        for (j, b) in list.iter().enumerate() {
            if i != j && a.is_subset(b) {
                pairs.push((i, j));
            }
        }
    }
    MultiComplex::from_nonsingletons(n, contents, &pairs)
}

fn simplex_family(n: usize, faces: &[Vec<usize>]) -> Result<BTreeSet<BTreeSet<usize>>> {
    let mut family: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for f in faces {
        for &v in f {
            check_vertex(v, n)?;
        }
        let set: BTreeSet<usize> = f.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::EmptyEdge(family.len()));
        }
        family.insert(set);
    }
    for f in &family {
        if f.len() < 3 {
            continue;
        }
        for &v in f {
            let mut sub = f.clone();
            sub.remove(&v);
            if !family.contains(&sub) {
                return Err(Error::NotDownwardClosed(sub.into_iter().collect()));
            }
        }
    }
    Ok(family)
}

/// A Δ-complex: each simplex of dimension at least one is given by its
/// ordered vertex tuple (repeats allowed), and `face_of` lists
/// `(face, simplex)` incidences between them by index. The order is the
/// transitive closure of the incidences.
pub fn from_delta(
    n: usize,
    simplices: &[Vec<usize>],
    face_of: &[(usize, usize)],
) -> Result<MultiComplex> {
    for (i, s) in simplices.iter().enumerate() {
        if s.len() < 2 {
            return Err(Error::MalformedIncidence(format!(
                "simplex {i} has fewer than two vertices"
            )));
        }
        for &v in s {
            check_vertex(v, n)?;
        }
    }
    let contents: Vec<Multiset> = simplices.iter().map(|s| Multiset::new(s.clone())).collect();
    for &(lo, hi) in face_of {
        if lo >= simplices.len() || hi >= simplices.len() {
            return Err(Error::MalformedIncidence(format!(
                "incidence ({lo}, {hi}) refers to a missing simplex"
            )));
        }
        if simplices[lo].len() >= simplices[hi].len()
            || !contents[lo].is_contained_in(&contents[hi])
        {
            return Err(Error::MalformedIncidence(format!(
                "simplex {lo} cannot be a face of simplex {hi}"
            )));
        }
    }
    MultiComplex::from_nonsingletons(n, contents, face_of)
}

/// A colored simplicial complex: `colors` assigns a count to faces (given by
/// vertex set). A vertex `a` with count `k` gains `k` loops `{a, a}`; a face
/// of dimension at least one with count `k` gains `k` extra copies. The
/// order is strict multiset containment.
pub fn from_colored_simplicial(
    n: usize,
    faces: &[Vec<usize>],
    colors: &[(Vec<usize>, i64)],
) -> Result<MultiComplex> {
    let family = simplex_family(n, faces)?;
    let mut contents: Vec<Multiset> = family
        .iter()
        .filter(|f| f.len() >= 2)
        .map(|f| Multiset::new(f.iter().copied()))
        .collect();
    for (i, (face, color)) in colors.iter().enumerate() {
        if *color < 0 {
            return Err(Error::NegativeColor {
                face: i,
                color: *color,
            });
        }
        let set: BTreeSet<usize> = face.iter().copied().collect();
        for &v in &set {
            check_vertex(v, n)?;
        }
        let copies = *color as usize;
        match set.len() {
            0 => return Err(Error::EmptyEdge(i)),
            1 => {
                let a = *set.iter().next().expect("one element");
                contents.extend(std::iter::repeat_n(Multiset::from([a, a]), copies));
            }
            _ => {
                if !family.contains(&set) {
                    return Err(Error::MalformedIncidence(format!(
                        "colored face {set:?} is not in the complex"
                    )));
                }
                contents.extend(std::iter::repeat_n(Multiset::new(set), copies));
            }
        }
    }
    if contents.len() > MAX_FACE_WORD {
        return Err(Error::SizeLimitExceeded {
            what: "non-singleton face count",
            actual: contents.len(),
            limit: MAX_FACE_WORD,
        });
    }
    let mut pairs = Vec::new();
    for (i, a) in contents.iter().enumerate() {
        for (j, b) in contents.iter().enumerate() {
            if a != b && a.is_contained_in(b) {
                pairs.push((i, j));
            }
        }
    }
    MultiComplex::from_nonsingletons(n, contents, &pairs)
}

/// `P_C = Σ_{E ⊆ E(C)} (-1)^{|E|} (C - E)` for complexes of dimension at
/// most one.
pub fn pc_dim1(c: &MultiComplex) -> Result<Element> {
    let dim = c.dimension();
    if dim > 1 {
        return Err(Error::DimensionTooHigh(dim));
    }
    let full = c.full_mask();
    let mut out = Element::zero();
    let mut removed = 0u64;
    loop {
        let sign = if removed.count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        };
        out.add_term(
            canonical_form(&c.spanning(full & !removed))?,
            Scalar::from_integer(sign.into()),
        );
        if removed == full {
            break;
        }
        removed = (removed.wrapping_sub(full)) & full;
    }
    Ok(out)
}

/// Edges of a simple graph whose complex is `c`, if `c` is one.
pub fn as_simple_graph(c: &MultiComplex) -> Option<Vec<(usize, usize)>> {
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(c.m());
    for (j, f) in c.nonsingletons().iter().enumerate() {
        match f.as_slice() {
            &[a, b] if a != b && c.below(j) == 0 && seen.insert((a, b)) => edges.push((a, b)),
            _ => return None,
        }
    }
    Some(edges)
}

/// Masks of the non-singleton faces of each component of `c`, for callers
/// that need the faces rather than the vertex sets.
pub fn component_face_masks(c: &MultiComplex) -> Vec<u64> {
    c.component_masks()
        .into_iter()
        .map(|x| {
            c.nonsingletons()
                .iter()
                .enumerate()
                .filter(|(_, f)| f.support_bits() & !x == 0)
                .fold(0u64, |acc, (j, _)| acc | 1 << j)
        })
        .collect()
}
