//! Isomorphism machinery: canonical keys, automorphism and embedding
//! counts, and sub-complex multiplicities.
//!
//! Canonical labeling works on the face structure directly: the nodes are the
//! vertices and the non-singleton faces, vertex–face incidences carry the
//! multiplicity, and face–face arcs carry the strict order. Colour
//! refinement followed by individualization gives a search tree whose leaves
//! are full labelings; the key is the smallest leaf certificate. Disconnected
//! complexes are keyed through their sorted component keys.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::complex::{bits, low_bits, MultiComplex, Multiset};
use crate::error::{Error, Result};
use crate::limits::limits;
use crate::poset::down_sets;

/// Byte string naming an isomorphism class of multi-complexes.
///
/// Layout: `n`, `m`, then each non-singleton face as its length followed by
/// its sorted vertex labels, then for each face the little-endian bit set of
/// faces strictly below it (`ceil(m / 8)` bytes each).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    /// The key of the complex based on the empty set, i.e. the unit.
    pub fn empty() -> Self {
        CanonicalKey(vec![0, 0])
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Grading: size of the base set.
    pub fn degree(&self) -> usize {
        self.0[0] as usize
    }

    pub fn is_empty_complex(&self) -> bool {
        self.0[0] == 0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let s = s.trim();
        if !s.len().is_multiple_of(2) || !s.is_ascii() {
            return Err(Error::MalformedKey);
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16).map_err(|_| Error::MalformedKey))
            .collect::<Result<Vec<u8>>>()?;
        let key = CanonicalKey(bytes);
        key.decode()?;
        Ok(key)
    }

    /// The labeled complex this key serializes.
    pub fn decode(&self) -> Result<MultiComplex> {
        let b = &self.0;
        let (&n, &m) = match (b.first(), b.get(1)) {
            (Some(n), Some(m)) => (n, m),
            _ => return Err(Error::MalformedKey),
        };
        let (n, m) = (n as usize, m as usize);
        let mut pos = 2;
        let mut faces = Vec::with_capacity(m);
        for _ in 0..m {
            let len = *b.get(pos).ok_or(Error::MalformedKey)? as usize;
            let labels = b.get(pos + 1..pos + 1 + len).ok_or(Error::MalformedKey)?;
            faces.push(Multiset::new(labels.iter().map(|&x| x as usize)));
            pos += 1 + len;
        }
        let width = m.div_ceil(8);
        let mut pairs = Vec::new();
        for hi in 0..m {
            let row = b.get(pos..pos + width).ok_or(Error::MalformedKey)?;
            for (k, &byte) in row.iter().enumerate() {
                for bit in 0..8 {
                    if byte >> bit & 1 == 1 {
                        pairs.push((k * 8 + bit, hi));
                    }
                }
            }
            pos += width;
        }
        if pos != b.len() || pairs.iter().any(|&(lo, _)| lo >= m) {
            return Err(Error::MalformedKey);
        }
        MultiComplex::from_nonsingletons(n, faces, &pairs).map_err(|_| Error::MalformedKey)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Serializes a complex in its current labeling and face order.
fn serialize(c: &MultiComplex) -> Vec<u8> {
    let order: Vec<usize> = (0..c.m()).collect();
    serialize_with(
        c.n(),
        &order,
        |j| c.nonsingletons()[j].clone(),
        c.below_masks(),
    )
}

/// Serializes faces listed by `order` (old indices), with contents given by
/// `content` and strict down-sets `below` in old indices.
fn serialize_with(
    n: usize,
    order: &[usize],
    content: impl Fn(usize) -> Multiset,
    below: &[u64],
) -> Vec<u8> {
    let m = order.len();
    let mut pos = vec![0usize; m];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let mut out = Vec::with_capacity(2 + 4 * m);
    out.push(n as u8);
    out.push(m as u8);
    for &old in order {
        let f = content(old);
        out.push(f.len() as u8);
        out.extend(f.as_slice().iter().map(|&v| v as u8));
    }
    let width = m.div_ceil(8);
    for &old in order {
        let mut row = vec![0u8; width];
        for j in bits(below[old]) {
            let p = pos[j];
            row[p / 8] |= 1 << (p % 8);
        }
        out.extend(row);
    }
    out
}

/// A node colour with its sorted neighbourhood of (tag, label, colour).
type Signature = (u32, Vec<(u8, u32, u32)>);

/// Node graph used by refinement: vertices `0..n`, faces `n..n + m`.
struct Structure<'a> {
    c: &'a MultiComplex,
    n: usize,
    /// Per node: (relation tag, label, neighbour).
    adj: Vec<Vec<(u8, u32, usize)>>,
}

const REL_VERTEX_IN_FACE: u8 = 0;
const REL_FACE_HAS_VERTEX: u8 = 1;
const REL_BELOW: u8 = 2;
const REL_ABOVE: u8 = 3;

impl<'a> Structure<'a> {
    fn new(c: &'a MultiComplex) -> Self {
        let n = c.n();
        let m = c.m();
        let mut adj = vec![Vec::new(); n + m];
        for (j, f) in c.nonsingletons().iter().enumerate() {
            for (v, mult) in f.counts() {
                adj[v].push((REL_VERTEX_IN_FACE, mult as u32, n + j));
                adj[n + j].push((REL_FACE_HAS_VERTEX, mult as u32, v));
            }
            for i in bits(c.below(j)) {
                adj[n + j].push((REL_BELOW, 0, n + i));
                adj[n + i].push((REL_ABOVE, 0, n + j));
            }
        }
        Structure { c, n, adj }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    fn initial_colors(&self) -> Vec<u32> {
        let mut colors: Vec<u32> = (0..self.len())
            .map(|x| if x < self.n { 0 } else { 1 })
            .collect();
        self.refine(&mut colors);
        colors
    }

    /// Refines an ordered partition to the coarsest equitable one below it.
    /// New colour classes keep the relative order of the classes they split.
    fn refine(&self, colors: &mut [u32]) {
        let mut count = densify(colors);
        loop {
            let sigs: Vec<Signature> = (0..self.len())
                .map(|x| {
                    let mut s: Vec<(u8, u32, u32)> = self.adj[x]
                        .iter()
                        .map(|&(tag, label, y)| (tag, label, colors[y]))
                        .collect();
                    s.sort_unstable();
                    (colors[x], s)
                })
                .collect();
            let mut sorted: Vec<&Signature> = sigs.iter().collect();
            sorted.sort();
            sorted.dedup();
            if sorted.len() == count {
                return;
            }
            count = sorted.len();
            for (x, sig) in sigs.iter().enumerate() {
                colors[x] = sorted.binary_search(&sig).expect("present") as u32;
            }
        }
    }

    /// The first non-trivial cell, vertex cells before face cells.
    fn target_cell(&self, colors: &[u32]) -> Option<Vec<usize>> {
        let mut cells: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (x, &c) in colors.iter().enumerate() {
            cells.entry(c).or_default().push(x);
        }
        let mut face_cell = None;
        for cell in cells.into_values() {
            if cell.len() > 1 {
                if cell[0] < self.n {
                    return Some(cell);
                }
                face_cell.get_or_insert(cell);
            }
        }
        face_cell
    }

    fn individualize(&self, colors: &[u32], x: usize) -> Vec<u32> {
        let mut out: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
        out[x] = 2 * colors[x];
        self.refine(&mut out);
        out
    }

    /// Certificate of a discrete colouring, plus the position of each node
    /// in it.
    fn leaf(&self, colors: &[u32]) -> (Vec<u8>, Vec<usize>) {
        let n = self.n;
        let m = self.c.m();
        let mut verts: Vec<usize> = (0..n).collect();
        verts.sort_by_key(|&v| colors[v]);
        let mut label = vec![0usize; n];
        for (new, &v) in verts.iter().enumerate() {
            label[v] = new;
        }
        let contents: Vec<Multiset> = self
            .c
            .nonsingletons()
            .iter()
            .map(|f| f.map(|v| label[v]))
            .collect();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&a, &b| {
            contents[a]
                .cmp(&contents[b])
                .then(colors[n + a].cmp(&colors[n + b]))
        });
        let cert = serialize_with(n, &order, |j| contents[j].clone(), self.c.below_masks());
        let mut position = label;
        position.resize(n + m, 0);
        for (new, &old) in order.iter().enumerate() {
            position[n + old] = n + new;
        }
        (cert, position)
    }
}

fn densify(colors: &mut [u32]) -> usize {
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).expect("present") as u32;
    }
    distinct.len()
}

fn is_discrete(colors: &[u32]) -> bool {
    let mut seen = HashSet::with_capacity(colors.len());
    colors.iter().all(|c| seen.insert(*c))
}

/// Search for the minimal certificate, pruning with automorphisms found at
/// equal leaves.
struct CanonSearch<'s, 'a> {
    s: &'s Structure<'a>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl CanonSearch<'_, '_> {
    fn run(&mut self, colors: Vec<u32>, prefix: &mut Vec<usize>) {
        let Some(cell) = self.s.target_cell(&colors) else {
            self.visit_leaf(&colors);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &x in &cell {
            if !explored.is_empty() {
                let orbits = self.orbits_fixing(prefix);
                if explored.iter().any(|&y| orbits[y] == orbits[x]) {
                    continue;
                }
            }
            let child = self.s.individualize(&colors, x);
            prefix.push(x);
            self.run(child, prefix);
            prefix.pop();
            explored.push(x);
        }
    }

    fn visit_leaf(&mut self, colors: &[u32]) {
        debug_assert!(is_discrete(colors));
        let (cert, pos) = self.s.leaf(colors);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == cert {
                let inverse = invert(&reference.1);
                let gamma: Vec<usize> = pos.iter().map(|&p| inverse[p]).collect();
                if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                    self.automorphisms.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((cert.clone(), pos.clone()));
        }
        if self.best.as_ref().is_none_or(|b| cert < b.0) {
            self.best = Some((cert, pos));
        }
    }

    /// Orbit representative per node under automorphisms fixing `prefix`.
    fn orbits_fixing(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.s.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.automorphisms {
            if prefix.iter().all(|&x| g[x] == x) {
                for (x, &y) in g.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..parent.len()).map(|x| find(&mut parent, x)).collect()
    }
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

fn canonical_connected(c: &MultiComplex) -> CanonicalKey {
    let s = Structure::new(c);
    let mut search = CanonSearch {
        s: &s,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    search.run(s.initial_colors(), &mut Vec::new());
    CanonicalKey(search.best.expect("search visits a leaf").0)
}

const CACHE_CAPACITY: usize = 1 << 20;

fn cache() -> &'static RwLock<HashMap<Vec<u8>, CanonicalKey>> {
    static CACHE: OnceLock<RwLock<HashMap<Vec<u8>, CanonicalKey>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Canonical key of the isomorphism class of `c`, memoized process-wide.
pub fn canonical_form(c: &MultiComplex) -> Result<CanonicalKey> {
    limits().check_vertices(c.n())?;
    let raw = serialize(c);
    if let Some(k) = cache().read().expect("cache lock").get(&raw) {
        return Ok(k.clone());
    }
    let key = compute_key(c)?;
    let mut guard = cache().write().expect("cache lock");
    if guard.len() >= CACHE_CAPACITY {
        guard.clear();
    }
    guard.insert(raw, key.clone());
    Ok(key)
}

/// Canonical key without consulting or filling the memo cache.
pub fn canonical_form_uncached(c: &MultiComplex) -> Result<CanonicalKey> {
    limits().check_vertices(c.n())?;
    compute_key(c)
}

fn compute_key(c: &MultiComplex) -> Result<CanonicalKey> {
    let comps = c.component_masks();
    if comps.len() <= 1 {
        return Ok(canonical_connected(c));
    }
    let mut keys = comps
        .into_iter()
        .map(|x| canonical_form(&c.restrict_bits(x)))
        .collect::<Result<Vec<_>>>()?;
    keys.sort();
    let mut union = MultiComplex::empty();
    for k in &keys {
        union = union.disjoint_union(&k.decode()?);
    }
    Ok(CanonicalKey(serialize(&union)))
}

/// The canonical representative of `c`'s isomorphism class.
pub fn canonical_complex(c: &MultiComplex) -> Result<MultiComplex> {
    canonical_form(c)?.decode()
}

pub fn is_isomorphic(c: &MultiComplex, d: &MultiComplex) -> Result<bool> {
    if c.n() != d.n() || c.m() != d.m() {
        // Still enforce the size bound for consistent error behaviour.
        limits().check_vertices(c.n())?;
        limits().check_vertices(d.n())?;
        return Ok(false);
    }
    Ok(canonical_form(c)? == canonical_form(d)?)
}

/// Number of automorphisms of `c`: vertex permutations together with a
/// matching bijection of face instances preserving content and order.
pub fn automorphism_count(c: &MultiComplex) -> Result<u64> {
    limits().check_vertices(c.n())?;
    let mut by_key: BTreeMap<CanonicalKey, (MultiComplex, u64)> = BTreeMap::new();
    for x in c.component_masks() {
        let comp = c.restrict_bits(x);
        let key = canonical_form(&comp)?;
        by_key.entry(key).or_insert((comp, 0)).1 += 1;
    }
    let overflow = || Error::SizeLimitExceeded {
        what: "automorphism count",
        actual: usize::MAX,
        limit: u64::MAX as usize,
    };
    let mut total: u64 = 1;
    for (comp, copies) in by_key.into_values() {
        let a = connected_automorphisms(&comp);
        for k in 1..=copies {
            total = total
                .checked_mul(a)
                .and_then(|t| t.checked_mul(k))
                .ok_or_else(overflow)?;
        }
    }
    Ok(total)
}

/// Counts leaves of the unpruned search tree with the first leaf's
/// certificate; the automorphism group acts regularly on them.
fn connected_automorphisms(c: &MultiComplex) -> u64 {
    fn walk(s: &Structure, colors: Vec<u32>, first: &mut Option<Vec<u8>>, count: &mut u64) {
        match s.target_cell(&colors) {
            None => {
                let (cert, _) = s.leaf(&colors);
                match first {
                    None => {
                        *first = Some(cert);
                        *count = 1;
                    }
                    Some(f) if *f == cert => *count += 1,
                    Some(_) => {}
                }
            }
            Some(cell) => {
                for x in cell {
                    walk(s, s.individualize(&colors, x), first, count);
                }
            }
        }
    }
    let s = Structure::new(c);
    let mut first = None;
    let mut count = 0;
    walk(&s, s.initial_colors(), &mut first, &mut count);
    count
}

/// Number of injective morphisms `d -> c` onto sub-multi-complexes: an
/// injective vertex map together with an injective assignment of `d`'s
/// non-singleton faces to face instances of `c` with the mapped content,
/// such that the order is preserved and reflected and the image is closed
/// under taking lower faces in `c`.
pub fn embedding_count(c: &MultiComplex, d: &MultiComplex) -> Result<u64> {
    limits().check_vertices(c.n())?;
    limits().check_vertices(d.n())?;
    if d.n() > c.n() || d.m() > c.m() {
        return Ok(0);
    }
    let mut by_content: HashMap<&Multiset, Vec<usize>> = HashMap::new();
    for (j, f) in c.nonsingletons().iter().enumerate() {
        by_content.entry(f).or_default().push(j);
    }
    // Faces of d become checkable once their largest vertex is mapped.
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); d.n()];
    for (j, f) in d.nonsingletons().iter().enumerate() {
        ready[*f.as_slice().last().expect("non-empty")].push(j);
    }
    let mut e = Embedder {
        c,
        d,
        by_content,
        ready,
        map: vec![usize::MAX; d.n()],
        used: 0,
        count: 0,
    };
    e.assign_vertex(0);
    Ok(e.count)
}

struct Embedder<'a> {
    c: &'a MultiComplex,
    d: &'a MultiComplex,
    by_content: HashMap<&'a Multiset, Vec<usize>>,
    ready: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: u64,
    count: u64,
}

impl Embedder<'_> {
    fn assign_vertex(&mut self, v: usize) {
        if v == self.d.n() {
            let mut phi = vec![usize::MAX; self.d.m()];
            self.assign_face(0, &mut phi, 0);
            return;
        }
        for w in 0..self.c.n() {
            if self.used >> w & 1 == 1 {
                continue;
            }
            self.map[v] = w;
            let feasible = self.ready[v].iter().all(|&j| {
                let image = self.d.nonsingletons()[j].map(|x| self.map[x]);
                self.by_content.contains_key(&image)
            });
            if feasible {
                self.used |= 1 << w;
                self.assign_vertex(v + 1);
                self.used &= !(1 << w);
            }
        }
        self.map[v] = usize::MAX;
    }

    fn assign_face(&mut self, j: usize, phi: &mut Vec<usize>, taken: u64) {
        if j == self.d.m() {
            let image = taken;
            let closed = bits(image).all(|i| self.c.below(i) & !image == 0);
            if closed {
                self.count += 1;
            }
            return;
        }
        let content = self.d.nonsingletons()[j].map(|x| self.map[x]);
        let candidates = match self.by_content.get(&content) {
            Some(c) => c.clone(),
            None => return,
        };
        for cand in candidates {
            if taken >> cand & 1 == 1 {
                continue;
            }
            let consistent = (0..j).all(|i| {
                let d_below = self.d.below(j) >> i & 1 == 1;
                let d_above = self.d.below(i) >> j & 1 == 1;
                let c_below = self.c.below(cand) >> phi[i] & 1 == 1;
                let c_above = self.c.below(phi[i]) >> cand & 1 == 1;
                d_below == c_below && d_above == c_above
            });
            if consistent {
                phi[j] = cand;
                self.assign_face(j + 1, phi, taken | 1 << cand);
            }
        }
    }
}

/// Number of sub-multi-complexes of `c` isomorphic to `d`, by enumeration.
pub fn sub_complex_count(c: &MultiComplex, d: &MultiComplex) -> Result<u64> {
    let target = canonical_form(d)?;
    if d.n() > c.n() {
        return Ok(0);
    }
    let mut count = 0u64;
    for x in 0..=low_bits(c.n()) {
        if x.count_ones() as usize != d.n() {
            continue;
        }
        let r = c.restrict_bits(x);
        if r.m() < d.m() {
            continue;
        }
        for mask in down_sets(&r)? {
            if mask.count_ones() as usize == d.m() && canonical_form(&r.spanning(mask))? == target {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `[C:D]`, the number of sub-multi-complexes of `c` isomorphic to `d`.
///
/// Computed by enumeration and checked against embeddings divided by
/// automorphisms.
pub fn multiplicity(c: &MultiComplex, d: &MultiComplex) -> Result<u64> {
    let direct = sub_complex_count(c, d)?;
    let embeddings = embedding_count(c, d)?;
    let auts = automorphism_count(d)?;
    if embeddings % auts != 0 || embeddings / auts != direct {
        return Err(Error::CrossCheckMismatch {
            what: "multiplicity",
            left: direct.to_string(),
            right: format!("{embeddings}/{auts}"),
        });
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> MultiComplex {
        MultiComplex::from_nonsingletons(
            n,
            edges.iter().map(|&(a, b)| Multiset::from([a, b])).collect(),
            &[],
        )
        .unwrap()
    }

    fn k3() -> MultiComplex {
        graph(3, &[(0, 1), (0, 2), (1, 2)])
    }

    #[test]
    fn empty_key_is_fixed() {
        let k = canonical_form(&MultiComplex::empty()).unwrap();
        assert_eq!(k, CanonicalKey::empty());
        assert_eq!(k.to_hex(), "0000");
        assert_eq!(k.decode().unwrap(), MultiComplex::empty());
    }

    #[test]
    fn relabeled_edge_has_same_key() {
        let a = graph(3, &[(0, 1)]);
        let b = graph(3, &[(1, 2)]);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert!(is_isomorphic(&k3(), &k3().relabel(&[2, 0, 1]).unwrap()).unwrap());
    }

    #[test]
    fn non_isomorphic_pairs() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let k2v = graph(3, &[(0, 1)]);
        assert!(!is_isomorphic(&p3, &k2v).unwrap());
        let double = MultiComplex::from_nonsingletons(
            2,
            vec![Multiset::from([0, 1]), Multiset::from([0, 1])],
            &[],
        )
        .unwrap();
        assert!(!is_isomorphic(&double, &graph(2, &[(0, 1)])).unwrap());
    }

    #[test]
    fn key_round_trips_through_hex_and_decode() {
        let c = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let k = canonical_form(&c).unwrap();
        assert_eq!(CanonicalKey::from_hex(&k.to_hex()).unwrap(), k);
        assert_eq!(canonical_form(&k.decode().unwrap()).unwrap(), k);
        assert_eq!(k.degree(), 4);
        assert!(CanonicalKey::from_hex("zz").is_err());
        assert!(CanonicalKey::from_hex("0201").is_err());
    }

    #[test]
    fn order_distinguishes_parallel_faces() {
        // Triangle with one extra edge parallel to {0,1} that is not under
        // the 2-face, versus the same with the other {0,1} edge free.
        let faces = vec![
            Multiset::from([0, 1]),
            Multiset::from([0, 1]),
            Multiset::from([1, 2]),
            Multiset::from([0, 2]),
            Multiset::from([0, 1, 2]),
        ];
        let a =
            MultiComplex::from_nonsingletons(3, faces.clone(), &[(0, 4), (2, 4), (3, 4)]).unwrap();
        let b =
            MultiComplex::from_nonsingletons(3, faces.clone(), &[(1, 4), (2, 4), (3, 4)]).unwrap();
        let c = MultiComplex::from_nonsingletons(3, faces, &[(2, 4), (3, 4)]).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap());
        assert!(!is_isomorphic(&a, &c).unwrap());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&MultiComplex::discrete(1)).unwrap(), 1);
        assert_eq!(automorphism_count(&k3()).unwrap(), 6);
        assert_eq!(automorphism_count(&graph(4, &[(0, 1), (2, 3)])).unwrap(), 8);
        assert_eq!(automorphism_count(&MultiComplex::empty()).unwrap(), 1);
        let double = MultiComplex::from_nonsingletons(
            2,
            vec![Multiset::from([0, 1]), Multiset::from([0, 1])],
            &[],
        )
        .unwrap();
        assert_eq!(automorphism_count(&double).unwrap(), 4);
    }

    #[test]
    fn embedding_counts() {
        let k2 = graph(2, &[(0, 1)]);
        assert_eq!(embedding_count(&k3(), &k2).unwrap(), 6);
        assert_eq!(embedding_count(&k3(), &MultiComplex::empty()).unwrap(), 1);
        assert_eq!(embedding_count(&k2, &k3()).unwrap(), 0);
    }

    #[test]
    fn multiplicities() {
        let k2 = graph(2, &[(0, 1)]);
        assert_eq!(multiplicity(&k3(), &k2).unwrap(), 3);
        assert_eq!(multiplicity(&k3(), &graph(3, &[(0, 1)])).unwrap(), 3);
        assert_eq!(multiplicity(&k3(), &k3()).unwrap(), 1);
        assert_eq!(multiplicity(&k2, &MultiComplex::discrete(2)).unwrap(), 1);
    }

    #[test]
    fn embedding_respects_down_closure() {
        // A lone 3-face over a full 2-simplex is not a sub-complex image.
        let hyper =
            MultiComplex::from_nonsingletons(3, vec![Multiset::from([0, 1, 2])], &[]).unwrap();
        let simplex = MultiComplex::from_nonsingletons(
            3,
            vec![
                Multiset::from([0, 1]),
                Multiset::from([0, 2]),
                Multiset::from([1, 2]),
                Multiset::from([0, 1, 2]),
            ],
            &[(0, 3), (1, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(embedding_count(&simplex, &hyper).unwrap(), 0);
        assert_eq!(multiplicity(&simplex, &hyper).unwrap(), 0);
    }

    #[test]
    fn large_symmetric_complexes_are_fast() {
        let mut edges = Vec::new();
        for a in 0..8 {
            for b in a + 1..8 {
                edges.push((a, b));
            }
        }
        let k8 = graph(8, &edges);
        let k = canonical_form_uncached(&k8).unwrap();
        assert_eq!(k.decode().unwrap().m(), 28);
        let disc = MultiComplex::discrete(16);
        assert_eq!(canonical_form_uncached(&disc).unwrap().degree(), 16);
    }

    #[test]
    fn size_limit() {
        let big = MultiComplex::discrete(17);
        assert!(matches!(
            canonical_form(&big),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
