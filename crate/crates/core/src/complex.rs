//! Multi-complexes: a base set `{0..n}`, a family of non-empty multisets over
//! it, and a partial order on that family compatible with containment.
//!
//! Vertices are numbered from 0 in the API; the text formats number them from 1.
//! Face ids `0..n` are the singletons `{k}`, ids `n..n + m` are the
//! non-singleton faces in canonical order. Non-singleton faces are addressed
//! by their index `j = id - n` in bit masks.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::limits::MAX_FACE_WORD;
use crate::mask::SubComplexMask;

/// A finite multiset of vertices, stored sorted with repetitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multiset(Vec<usize>);

impl Multiset {
    pub fn new(elements: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = elements.into_iter().collect();
        v.sort_unstable();
        Multiset(v)
    }

    pub fn singleton(v: usize) -> Self {
        Multiset(vec![v])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The vertex of a one-element multiset.
    pub fn as_singleton(&self) -> Option<usize> {
        match self.0.as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    /// Distinct elements in increasing order.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.0.clone();
        s.dedup();
        s
    }

    /// Support as a vertex bit set.
    pub fn support_bits(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &v| acc | (1u64 << v))
    }

    pub fn multiplicity(&self, v: usize) -> usize {
        self.0.iter().filter(|&&x| x == v).count()
    }

    /// Multiplicity-wise containment: every element occurs in `other` at
    /// least as often as in `self`.
    pub fn is_contained_in(&self, other: &Multiset) -> bool {
        let (a, b) = (&self.0, &other.0);
        let mut j = 0;
        for &x in a {
            while j < b.len() && b[j] < x {
                j += 1;
            }
            if j == b.len() || b[j] != x {
                return false;
            }
            j += 1;
        }
        true
    }

    /// Image under a vertex map, re-sorted.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Multiset {
        Multiset::new(self.0.iter().map(|&v| f(v)))
    }

    /// Distinct elements with their multiplicities.
    pub fn counts(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &v in &self.0 {
            match out.last_mut() {
                Some((w, c)) if *w == v => *c += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }
}

impl fmt::Debug for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl From<Vec<usize>> for Multiset {
    fn from(v: Vec<usize>) -> Self {
        Multiset::new(v)
    }
}

impl<const N: usize> From<[usize; N]> for Multiset {
    fn from(v: [usize; N]) -> Self {
        Multiset::new(v)
    }
}

/// A face of a complex together with its id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub content: Multiset,
}

/// A validated multi-complex. Immutable once built.
///
/// The order is stored as, for every non-singleton face, the bit set of
/// non-singleton faces strictly below it. Relations with singletons are
/// implied by supports.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiComplex {
    n: usize,
    faces: Vec<Multiset>,
    below: Vec<u64>,
}

impl fmt::Debug for MultiComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiComplex")
            .field("n", &self.n)
            .field("faces", &self.faces)
            .field("below", &self.below)
            .finish()
    }
}

impl MultiComplex {
    /// Validates a complex given by all of its faces, singletons included.
    ///
    /// `order_pairs` holds `(lower, upper)` pairs of indices into `faces`.
    /// Relations between singletons and the faces containing them are added
    /// automatically; the result's order is the reflexive-transitive closure.
    pub fn new(n: usize, faces: Vec<Multiset>, order_pairs: &[(usize, usize)]) -> Result<Self> {
        let mut singleton_of = vec![None; n];
        let mut nonsingleton = Vec::new();
        let mut slot = vec![usize::MAX; faces.len()];
        for (id, face) in faces.iter().enumerate() {
            if face.is_empty() {
                return Err(Error::EmptyFace(id));
            }
            if let Some(&v) = face.as_slice().iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if let Some(v) = face.as_singleton() {
                if singleton_of[v].is_some() {
                    return Err(Error::DuplicateSingleton(v));
                }
                singleton_of[v] = Some(id);
            } else {
                slot[id] = nonsingleton.len();
                nonsingleton.push(id);
            }
        }
        if let Some(v) = singleton_of.iter().position(Option::is_none) {
            return Err(Error::MissingSingleton(v));
        }

        let mut rel = Vec::new();
        for &(lo, hi) in order_pairs {
            if lo >= faces.len() {
                return Err(Error::UnknownFace(lo));
            }
            if hi >= faces.len() {
                return Err(Error::UnknownFace(hi));
            }
            if lo == hi {
                continue;
            }
            match (faces[lo].as_singleton(), faces[hi].as_singleton()) {
                (Some(v), _) => {
                    if !faces[hi].as_slice().contains(&v) {
                        return Err(Error::SingletonRelationViolation {
                            vertex: v,
                            face: hi,
                        });
                    }
                }
                (None, Some(_)) => {
                    return Err(Error::ContainmentViolation {
                        lower: lo,
                        upper: hi,
                    })
                }
                (None, None) => rel.push((slot[lo], slot[hi])),
            }
        }
        let contents = nonsingleton.iter().map(|&id| faces[id].clone()).collect();
        Self::build(n, contents, &rel, &nonsingleton)
    }

    /// Builds from non-singleton faces only; pairs index into `faces`.
    pub fn from_nonsingletons(
        n: usize,
        faces: Vec<Multiset>,
        order_pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let mut all: Vec<Multiset> = (0..n).map(Multiset::singleton).collect();
        all.extend(faces);
        let shifted: Vec<(usize, usize)> =
            order_pairs.iter().map(|&(a, b)| (a + n, b + n)).collect();
        Self::new(n, all, &shifted)
    }

    /// Core constructor. `ids` maps positions in `faces` back to caller ids
    /// for error messages.
    fn build(
        n: usize,
        faces: Vec<Multiset>,
        rel: &[(usize, usize)],
        ids: &[usize],
    ) -> Result<Self> {
        let m = faces.len();
        if m > MAX_FACE_WORD {
            return Err(Error::SizeLimitExceeded {
                what: "non-singleton face count",
                actual: m,
                limit: MAX_FACE_WORD,
            });
        }
        for (j, f) in faces.iter().enumerate() {
            if f.is_empty() {
                return Err(Error::EmptyFace(ids[j]));
            }
            if f.len() == 1 {
                return Err(Error::DuplicateSingleton(f.as_slice()[0]));
            }
            if let Some(&v) = f.as_slice().iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        let mut below = vec![0u64; m];
        for &(lo, hi) in rel {
            if lo == hi {
                continue;
            }
            if !faces[lo].is_contained_in(&faces[hi]) {
                return Err(Error::ContainmentViolation {
                    lower: ids[lo],
                    upper: ids[hi],
                });
            }
            below[hi] |= 1u64 << lo;
        }
        // Warshall closure on the strict relation.
        for k in 0..m {
            for i in 0..m {
                if below[i] >> k & 1 == 1 {
                    below[i] |= below[k];
                }
            }
        }
        for i in 0..m {
            if below[i] >> i & 1 == 1 {
                let j = (0..m)
                    .find(|&j| j != i && below[i] >> j & 1 == 1 && below[j] >> i & 1 == 1)
                    .unwrap_or(i);
                return Err(Error::CycleInOrder(ids[i], ids[j]));
            }
        }
        Ok(Self::canonical_order(n, faces, below))
    }

    /// Reorders non-singleton faces by (content, contents strictly below,
    /// current position). Stable and idempotent.
    fn canonical_order(n: usize, faces: Vec<Multiset>, below: Vec<u64>) -> Self {
        let m = faces.len();
        let signature = |i: usize| -> Vec<&Multiset> {
            let mut s: Vec<&Multiset> = bits(below[i]).map(|j| &faces[j]).collect();
            s.sort();
            s
        };
        let sigs: Vec<Vec<&Multiset>> = (0..m).map(signature).collect();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&a, &b| {
            faces[a]
                .cmp(&faces[b])
                .then_with(|| sigs[a].cmp(&sigs[b]))
                .then(a.cmp(&b))
        });
        if order.iter().enumerate().all(|(i, &o)| i == o) {
            return MultiComplex { n, faces, below };
        }
        let mut new_pos = vec![0; m];
        for (new, &old) in order.iter().enumerate() {
            new_pos[old] = new;
        }
        let remap = |mask: u64| bits(mask).fold(0u64, |acc, j| acc | 1u64 << new_pos[j]);
        let new_below = order.iter().map(|&old| remap(below[old])).collect();
        let new_faces = order.iter().map(|&old| faces[old].clone()).collect();
        MultiComplex {
            n,
            faces: new_faces,
            below: new_below,
        }
    }

    /// The complex based on the empty set.
    pub fn empty() -> Self {
        MultiComplex {
            n: 0,
            faces: Vec::new(),
            below: Vec::new(),
        }
    }

    /// `n` vertices and no other faces.
    pub fn discrete(n: usize) -> Self {
        MultiComplex {
            n,
            faces: Vec::new(),
            below: Vec::new(),
        }
    }

    /// Size of the base set.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of non-singleton faces.
    pub fn m(&self) -> usize {
        self.faces.len()
    }

    /// Total number of faces, singletons included.
    pub fn face_count(&self) -> usize {
        self.n + self.faces.len()
    }

    pub fn nonsingletons(&self) -> &[Multiset] {
        &self.faces
    }

    /// Non-singleton faces strictly below non-singleton face `j`.
    pub fn below(&self, j: usize) -> u64 {
        self.below[j]
    }

    pub fn below_masks(&self) -> &[u64] {
        &self.below
    }

    /// Mask with every non-singleton face.
    pub fn full_mask(&self) -> u64 {
        low_bits(self.m())
    }

    pub fn face(&self, id: usize) -> Result<Face> {
        let content = if id < self.n {
            Multiset::singleton(id)
        } else if id < self.face_count() {
            self.faces[id - self.n].clone()
        } else {
            return Err(Error::UnknownFace(id));
        };
        Ok(Face { id, content })
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.face_count()).map(|id| self.face(id).expect("id in range"))
    }

    /// `a ≼ b` for face ids.
    pub fn leq(&self, a: usize, b: usize) -> Result<bool> {
        let total = self.face_count();
        if a >= total {
            return Err(Error::UnknownFace(a));
        }
        if b >= total {
            return Err(Error::UnknownFace(b));
        }
        Ok(match (a < self.n, b < self.n) {
            _ if a == b => true,
            (true, true) | (false, true) => false,
            (true, false) => self.faces[b - self.n].as_slice().contains(&a),
            (false, false) => self.below[b - self.n] >> (a - self.n) & 1 == 1,
        })
    }

    /// Applies the vertex permutation `k -> perm[k]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: p,
                    n: self.n,
                });
            }
            seen[p] = true;
        }
        assert!(seen.iter().all(|&s| s), "not a permutation");
        let faces = self.faces.iter().map(|f| f.map(|v| perm[v])).collect();
        Ok(Self::canonical_order(self.n, faces, self.below.clone()))
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &MultiComplex) -> MultiComplex {
        let shift = self.n;
        let offset = self.m();
        let mut faces = self.faces.clone();
        faces.extend(other.faces.iter().map(|f| f.map(|v| v + shift)));
        let mut below = self.below.clone();
        below.extend(other.below.iter().map(|&b| b << offset));
        Self::canonical_order(self.n + other.n, faces, below)
    }

    /// Restriction to the vertex set `vertices`, relabeled to `0..|X|` in
    /// increasing order.
    pub fn restrict(&self, vertices: &[usize]) -> Result<MultiComplex> {
        let mut x = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            x |= 1u64 << v;
        }
        Ok(self.restrict_bits(x))
    }

    /// Restriction to the vertex bit set `x`.
    pub fn restrict_bits(&self, x: u64) -> MultiComplex {
        let x = x & low_bits(self.n);
        let mut rank = vec![usize::MAX; self.n];
        let mut r = 0;
        for (v, slot) in rank.iter_mut().enumerate() {
            if x >> v & 1 == 1 {
                *slot = r;
                r += 1;
            }
        }
        let kept: Vec<usize> = (0..self.m())
            .filter(|&j| self.faces[j].support_bits() & !x == 0)
            .collect();
        let mut new_idx = vec![usize::MAX; self.m()];
        for (i, &j) in kept.iter().enumerate() {
            new_idx[j] = i;
        }
        let faces = kept
            .iter()
            .map(|&j| self.faces[j].map(|v| rank[v]))
            .collect();
        let below = kept
            .iter()
            .map(|&j| bits(self.below[j]).fold(0u64, |acc, i| acc | 1u64 << new_idx[i]))
            .collect();
        Self::canonical_order(r, faces, below)
    }

    /// Path-connectivity classes of the base set, each with its restriction,
    /// ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<(Vec<usize>, MultiComplex)> {
        self.component_masks()
            .into_iter()
            .map(|x| (bits(x).collect(), self.restrict_bits(x)))
            .collect()
    }

    /// Vertex bit sets of the path-connectivity classes.
    pub fn component_masks(&self) -> Vec<u64> {
        component_masks(self.n, self.faces.iter().map(Multiset::support_bits))
    }

    pub fn component_count(&self) -> usize {
        self.component_masks().len()
    }

    /// True when the base set forms a single path-connectivity class.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Longest chain length among all faces; 0 for complexes without
    /// non-singleton faces.
    pub fn dimension(&self) -> usize {
        (0..self.m()).map(|j| self.height(j)).max().unwrap_or(0)
    }

    /// Longest chain ending at face `id`.
    pub fn face_dimension(&self, id: usize) -> Result<usize> {
        if id < self.n {
            Ok(0)
        } else if id < self.face_count() {
            Ok(self.height(id - self.n))
        } else {
            Err(Error::UnknownFace(id))
        }
    }

    fn height(&self, j: usize) -> usize {
        // Strict predecessors always have strictly smaller height, and every
        // non-singleton face sits above at least one singleton.
        1 + bits(self.below[j])
            .map(|i| self.height(i))
            .max()
            .unwrap_or(0)
    }

    /// Down-closure of the given faces, as a spanning sub-complex.
    pub fn generated_sub(&self, ids: &[usize]) -> Result<SubComplexMask<'_>> {
        let mut mask = 0u64;
        for &id in ids {
            if id >= self.face_count() {
                return Err(Error::UnknownFace(id));
            }
            if id >= self.n {
                let j = id - self.n;
                mask |= 1u64 << j | self.below[j];
            }
        }
        SubComplexMask::new(self, mask)
    }

    /// Whether `mask` is closed under taking lower faces.
    pub fn is_down_closed(&self, mask: u64) -> bool {
        bits(mask).all(|j| self.below[j] & !mask == 0)
    }

    /// The spanning sub-complex with non-singleton faces `mask`.
    ///
    /// `mask` must be down-closed.
    pub fn spanning(&self, mask: u64) -> MultiComplex {
        debug_assert!(self.is_down_closed(mask));
        let kept: Vec<usize> = bits(mask & self.full_mask()).collect();
        let mut new_idx = vec![usize::MAX; self.m()];
        for (i, &j) in kept.iter().enumerate() {
            new_idx[j] = i;
        }
        let faces = kept.iter().map(|&j| self.faces[j].clone()).collect();
        let below = kept
            .iter()
            .map(|&j| bits(self.below[j]).fold(0u64, |acc, i| acc | 1u64 << new_idx[i]))
            .collect();
        MultiComplex {
            n: self.n,
            faces,
            below,
        }
    }

    /// Vertex bit sets of the components of the spanning sub-complex `mask`.
    pub fn spanning_components(&self, mask: u64) -> Vec<u64> {
        component_masks(self.n, bits(mask).map(|j| self.faces[j].support_bits()))
    }

    /// Ids of the dimension-1 faces, i.e. the edge set `E(C)`.
    pub fn edge_ids(&self) -> Vec<usize> {
        (0..self.m())
            .filter(|&j| self.height(j) == 1)
            .map(|j| j + self.n)
            .collect()
    }

    /// `C - E` for a set of edges of a complex of dimension at most 1.
    pub fn delete_faces(&self, ids: &[usize]) -> Result<MultiComplex> {
        let dim = self.dimension();
        if dim > 1 {
            return Err(Error::DimensionTooHigh(dim));
        }
        let mut drop = 0u64;
        for &id in ids {
            if id < self.n {
                return Err(Error::NotAnEdge(id));
            }
            if id >= self.face_count() {
                return Err(Error::UnknownFace(id));
            }
            drop |= 1u64 << (id - self.n);
        }
        Ok(self.spanning(self.full_mask() & !drop))
    }
}

impl PartialOrd for MultiComplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiComplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.faces.cmp(&other.faces))
            .then_with(|| self.below.cmp(&other.below))
    }
}

/// Iterates the set bits of `mask` in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// The mask `{0..k}`.
pub fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

fn component_masks(n: usize, supports: impl Iterator<Item = u64>) -> Vec<u64> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for s in supports {
        let mut it = bits(s);
        if let Some(first) = it.next() {
            for v in it {
                let (a, b) = (find(&mut parent, first), find(&mut parent, v));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut masks: Vec<(usize, u64)> = Vec::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        match masks.iter_mut().find(|(root, _)| *root == r) {
            Some((_, m)) => *m |= 1u64 << v,
            None => masks.push((r, 1u64 << v)),
        }
    }
    masks.into_iter().map(|(_, m)| m).collect()
}
