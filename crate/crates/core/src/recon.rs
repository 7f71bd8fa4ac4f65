//! Decks of graphs and exhaustive reconstruction scans.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::complex::{bits, low_bits, MultiComplex, Multiset};
use crate::error::{Error, Result};
use crate::hopf::{is_primitive, Element};
use crate::iso::{canonical_form, canonical_form_uncached, CanonicalKey};

/// Largest vertex count for exhaustive graph enumeration.
pub const MAX_SCAN_VERTICES: usize = 7;

/// Which deletions make up a deck.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeckKind {
    /// `G - v` for each vertex.
    VertexOneDeleted,
    /// `G - X` for each nonempty vertex set `X`.
    VertexFull,
    /// `G - e` for each edge.
    Edge,
    /// `G - E` for each nonempty edge set `E`.
    EdgeFull,
}

impl DeckKind {
    pub const ALL: [DeckKind; 4] = [
        DeckKind::VertexOneDeleted,
        DeckKind::VertexFull,
        DeckKind::Edge,
        DeckKind::EdgeFull,
    ];

    pub fn is_vertex(self) -> bool {
        matches!(self, DeckKind::VertexOneDeleted | DeckKind::VertexFull)
    }
}

impl fmt::Display for DeckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeckKind::VertexOneDeleted => "vertex",
            DeckKind::VertexFull => "vertex-full",
            DeckKind::Edge => "edge",
            DeckKind::EdgeFull => "edge-full",
        })
    }
}

impl FromStr for DeckKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "vertex" | "vertex-one-deleted" => Ok(DeckKind::VertexOneDeleted),
            "vertex-full" => Ok(DeckKind::VertexFull),
            "edge" => Ok(DeckKind::Edge),
            "edge-full" => Ok(DeckKind::EdgeFull),
            _ => Err(format!(
                "unknown deck kind {s:?} (expected vertex, vertex-full, edge or edge-full)"
            )),
        }
    }
}

/// A multiset of isomorphism classes of deleted subobjects.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Deck {
    pub kind: DeckKind,
    pub cards: BTreeMap<CanonicalKey, usize>,
}

impl Deck {
    /// Number of cards, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.cards.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }
}

fn check_kind(c: &MultiComplex, kind: DeckKind) -> Result<()> {
    let dim = c.dimension();
    if !kind.is_vertex() && dim > 1 {
        return Err(Error::DimensionTooHigh(dim));
    }
    Ok(())
}

/// The deck of `g` of the given kind. Vertex decks work for any complex;
/// edge decks need dimension at most 1.
pub fn deck(g: &MultiComplex, kind: DeckKind) -> Result<Deck> {
    check_kind(g, kind)?;
    let mut cards = BTreeMap::new();
    let mut add = |c: MultiComplex| -> Result<()> {
        *cards.entry(canonical_form(&c)?).or_insert(0) += 1;
        Ok(())
    };
    let all = low_bits(g.n());
    match kind {
        DeckKind::VertexOneDeleted => {
            for v in 0..g.n() {
                add(g.restrict_bits(all & !(1 << v)))?;
            }
        }
        DeckKind::VertexFull => {
            for x in 1..=all {
                add(g.restrict_bits(all & !x))?;
            }
        }
        DeckKind::Edge => {
            for j in 0..g.m() {
                add(g.spanning(g.full_mask() & !(1 << j)))?;
            }
        }
        DeckKind::EdgeFull => {
            let full = g.full_mask();
            if g.m() >= 32 {
                return Err(Error::SizeLimitExceeded {
                    what: "edge count for the full edge deck",
                    actual: g.m(),
                    limit: 31,
                });
            }
            let mut e = full;
            while e != 0 {
                add(g.spanning(full & !e))?;
                e = (e - 1) & full;
            }
        }
    }
    Ok(Deck { kind, cards })
}

pub fn decks_equal(g: &MultiComplex, h: &MultiComplex, kind: DeckKind) -> Result<bool> {
    Ok(deck(g, kind)? == deck(h, kind)?)
}

/// Whether `[G] - [H]` is primitive.
pub fn difference_is_primitive(g: &MultiComplex, h: &MultiComplex) -> Result<bool> {
    let diff = &Element::from_complex(g)? - &Element::from_complex(h)?;
    is_primitive(&diff)
}

/// The simple graph on `n` vertices whose edges are the set bits of `mask`
/// over the pairs `(a, b)`, `a < b`, in lexicographic order.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> MultiComplex {
    let pairs = vertex_pairs(n);
    let faces = bits(mask)
        .map(|i| {
            let (a, b) = pairs[i];
            Multiset::from([a, b])
        })
        .collect();
    MultiComplex::from_nonsingletons(n, faces, &[]).expect("simple graph is valid")
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

/// Isomorphism classes of simple graphs on `n` vertices, found by
/// canonicalizing every edge set.
pub fn simple_graph_classes(n: usize, jobs: usize) -> Result<BTreeSet<CanonicalKey>> {
    if n > MAX_SCAN_VERTICES {
        return Err(Error::SizeLimitExceeded {
            what: "vertex count for graph enumeration",
            actual: n,
            limit: MAX_SCAN_VERTICES,
        });
    }
    let pair_count = n * n.saturating_sub(1) / 2;
    let total: u64 = 1 << pair_count;
    let jobs = jobs.max(1) as u64;
    let chunk = total.div_ceil(jobs);
    let parts = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|t| {
                s.spawn(move || -> Result<BTreeSet<CanonicalKey>> {
                    let mut seen = BTreeSet::new();
                    let lo = t * chunk;
                    let hi = ((t + 1) * chunk).min(total);
                    for mask in lo..hi {
                        seen.insert(canonical_form_uncached(&graph_from_edge_mask(n, mask))?);
                    }
                    Ok(seen)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect::<Vec<_>>()
    });
    let mut all = BTreeSet::new();
    for part in parts {
        all.extend(part?);
    }
    Ok(all)
}

/// Result of [`scan_counterexamples`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub n: usize,
    pub kind: DeckKind,
    pub min_edges: usize,
    /// Isomorphism classes meeting the edge floor.
    pub graphs: usize,
    /// Distinct decks among them.
    pub deck_classes: usize,
    /// Non-isomorphic pairs sharing a deck, each ordered and sorted.
    pub pairs: Vec<(CanonicalKey, CanonicalKey)>,
    /// Every reported pair consists of two connected graphs.
    pub pairs_connected: bool,
    /// Every disconnected graph has a deck no other graph shares.
    pub disconnected_unique: bool,
    /// For edge-full decks: whether `[G] - [H]` is primitive, per pair.
    pub differences_primitive: Option<Vec<bool>>,
}

/// Groups all simple graphs on `n` vertices with at least `min_edges` edges
/// by deck and reports the collisions.
pub fn scan_counterexamples(
    n: usize,
    kind: DeckKind,
    jobs: usize,
    min_edges: usize,
) -> Result<ScanReport> {
    let classes: Vec<CanonicalKey> = simple_graph_classes(n, jobs)?
        .into_iter()
        .map(|k| Ok((k.decode()?.m(), k)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&(m, _)| m >= min_edges)
        .map(|(_, k)| k)
        .collect();

    let jobs = jobs.max(1);
    let chunk = classes.len().div_ceil(jobs).max(1);
    let decks = std::thread::scope(|s| {
        let handles: Vec<_> = classes
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(|k| deck(&k.decode()?, kind))
                        .collect::<Result<Vec<_>>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("deck worker panicked"))
            .collect::<Vec<_>>()
    });
    let mut groups: BTreeMap<Deck, Vec<CanonicalKey>> = BTreeMap::new();
    let mut class_iter = classes.iter();
    for part in decks {
        for d in part? {
            let key = class_iter.next().expect("one deck per class").clone();
            groups.entry(d).or_default().push(key);
        }
    }

    let mut pairs = Vec::new();
    let mut disconnected_unique = true;
    for members in groups.values() {
        if members.len() > 1 {
            for k in members {
                if !k.decode()?.is_connected() {
                    disconnected_unique = false;
                }
            }
        }
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    let mut pairs_connected = true;
    for (a, b) in &pairs {
        if !(a.decode()?.is_connected() && b.decode()?.is_connected()) {
            pairs_connected = false;
        }
    }
    let differences_primitive = if kind == DeckKind::EdgeFull {
        let flags = pairs
            .iter()
            .map(|(a, b)| difference_is_primitive(&a.decode()?, &b.decode()?))
            .collect::<Result<Vec<_>>>()?;
        Some(flags)
    } else {
        None
    };
    Ok(ScanReport {
        n,
        kind,
        min_edges,
        graphs: classes.len(),
        deck_classes: groups.len(),
        pairs,
        pairs_connected,
        disconnected_unique,
        differences_primitive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encode::from_graph;

    fn key(c: &MultiComplex) -> CanonicalKey {
        canonical_form(c).unwrap()
    }

    #[test]
    fn small_decks() {
        let k2 = from_graph(2, &[(0, 1)]).unwrap();
        let two = MultiComplex::discrete(2);
        let v = key(&MultiComplex::discrete(1));
        let d = deck(&k2, DeckKind::VertexOneDeleted).unwrap();
        assert_eq!(d.cards, BTreeMap::from([(v.clone(), 2)]));
        assert_eq!(
            deck(&two, DeckKind::VertexOneDeleted).unwrap().cards,
            d.cards
        );
        assert!(decks_equal(&k2, &two, DeckKind::VertexOneDeleted).unwrap());

        let k3 = from_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let p3 = from_graph(3, &[(0, 1), (1, 2)]).unwrap();
        let e = deck(&k3, DeckKind::Edge).unwrap();
        assert_eq!(e.cards, BTreeMap::from([(key(&p3), 3)]));
        assert!(!decks_equal(&k3, &p3, DeckKind::VertexOneDeleted).unwrap());
        assert!(decks_equal(&k3, &k3, DeckKind::VertexFull).unwrap());
    }

    #[test]
    fn deck_sizes() {
        let g = from_graph(4, &[(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
        assert_eq!(deck(&g, DeckKind::VertexOneDeleted).unwrap().len(), 4);
        assert_eq!(deck(&g, DeckKind::VertexFull).unwrap().len(), 15);
        assert_eq!(deck(&g, DeckKind::Edge).unwrap().len(), 4);
        assert_eq!(deck(&g, DeckKind::EdgeFull).unwrap().len(), 15);
    }

    #[test]
    fn primitive_differences() {
        let k2 = from_graph(2, &[(0, 1)]).unwrap();
        let k3 = from_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let p3 = from_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(difference_is_primitive(&k3, &k3).unwrap());
        assert!(difference_is_primitive(&k2, &MultiComplex::discrete(2)).unwrap());
        assert!(!difference_is_primitive(&k3, &p3).unwrap());
    }

    #[test]
    fn census_small() {
        let counts: Vec<usize> = (0..=4)
            .map(|n| simple_graph_classes(n, 2).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11]);
    }

    #[test]
    fn scan_n2_and_n4() {
        let r = scan_counterexamples(2, DeckKind::VertexOneDeleted, 1, 0).unwrap();
        assert_eq!(r.pairs.len(), 1);
        assert!(!r.pairs_connected);
        let r = scan_counterexamples(4, DeckKind::VertexOneDeleted, 2, 0).unwrap();
        assert!(r.pairs.is_empty());
        assert!(r.disconnected_unique);
        let r = scan_counterexamples(4, DeckKind::EdgeFull, 1, 0).unwrap();
        assert_eq!(r.pairs.len(), 2);
        assert!(!r.pairs_connected);
        assert_eq!(r.differences_primitive, Some(vec![false, false]));
        let r = scan_counterexamples(4, DeckKind::Edge, 2, 4).unwrap();
        assert_eq!(r.graphs, 4);
        assert!(r.pairs.is_empty());
    }

    #[test]
    fn scan_size_bound() {
        assert!(matches!(
            simple_graph_classes(8, 1),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn kind_names() {
        for k in DeckKind::ALL {
            assert_eq!(k.to_string().parse::<DeckKind>().unwrap(), k);
        }
        assert!("cards".parse::<DeckKind>().is_err());
    }
}
