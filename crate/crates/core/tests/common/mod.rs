#![allow(dead_code)]

use std::collections::BTreeSet;

use mcx_core::iso::canonical_form;
use mcx_core::recon::simple_graph_classes;
use mcx_core::{MultiComplex, Multiset};
use proptest::prelude::*;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> MultiComplex {
    MultiComplex::from_nonsingletons(
        n,
        edges.iter().map(|&(a, b)| Multiset::from([a, b])).collect(),
        &[],
    )
    .unwrap()
}

/// All simple graphs on exactly `n` vertices up to isomorphism.
pub fn graphs_on(n: usize) -> Vec<MultiComplex> {
    simple_graph_classes(n, 1)
        .unwrap()
        .into_iter()
        .map(|k| k.decode().unwrap())
        .collect()
}

pub fn graphs_up_to(max_n: usize) -> Vec<MultiComplex> {
    (1..=max_n).flat_map(graphs_on).collect()
}

/// Multigraphs (loops and parallel edges allowed) with `1..=max_n`
/// vertices and at most `max_e` edges, up to isomorphism.
pub fn multigraphs(max_n: usize, max_e: usize) -> Vec<MultiComplex> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for n in 1..=max_n {
        let types: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
        let mut stack: Vec<(usize, Vec<(usize, usize)>)> = vec![(0, Vec::new())];
        while let Some((start, edges)) = stack.pop() {
            let c = graph(n, &edges);
            if seen.insert(canonical_form(&c).unwrap()) {
                out.push(c);
            }
            if edges.len() < max_e {
                for t in start..types.len() {
                    let mut next = edges.clone();
                    next.push(types[t]);
                    stack.push((t, next));
                }
            }
        }
    }
    out
}

pub fn simplex2() -> MultiComplex {
    MultiComplex::from_nonsingletons(
        3,
        vec![
            Multiset::from([0, 1]),
            Multiset::from([0, 2]),
            Multiset::from([1, 2]),
            Multiset::from([0, 1, 2]),
        ],
        &[(0, 3), (1, 3), (2, 3)],
    )
    .unwrap()
}

/// A full triangle plus a second copy of edge {0,1} that is not one of its
/// faces.
pub fn delta_example() -> MultiComplex {
    MultiComplex::from_nonsingletons(
        3,
        vec![
            Multiset::from([0, 1]),
            Multiset::from([0, 1]),
            Multiset::from([1, 2]),
            Multiset::from([0, 2]),
            Multiset::from([0, 1, 2]),
        ],
        &[(0, 4), (2, 4), (3, 4)],
    )
    .unwrap()
}

/// Connected graphs on at most 5 vertices, connected multigraphs on at
/// most 3 vertices with at most 4 edges, the 2-simplex and the
/// Δ-complex example.
pub fn connected_corpus() -> Vec<MultiComplex> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let all = graphs_up_to(5)
        .into_iter()
        .chain(multigraphs(3, 4))
        .chain([simplex2(), delta_example()]);
    for c in all {
        if c.is_connected() && seen.insert(canonical_form(&c).unwrap()) {
            out.push(c);
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn leq(c: &MultiComplex, i: usize, j: usize) -> bool {
    c.below(j) >> i & 1 == 1
}

/// Number of isomorphisms `c -> d`: vertex bijections together with face
/// bijections that respect contents and the order in both directions.
pub fn brute_iso_count(c: &MultiComplex, d: &MultiComplex) -> u64 {
    if c.n() != d.n() || c.m() != d.m() {
        return 0;
    }
    let mut total = 0;
    for pi in permutations(c.n()) {
        let image: Vec<Multiset> = c.nonsingletons().iter().map(|f| f.map(|v| pi[v])).collect();
        let mut sigma = vec![usize::MAX; c.m()];
        let mut used = vec![false; d.m()];
        total += assign(c, d, &image, 0, &mut sigma, &mut used);
    }
    total
}

fn assign(
    c: &MultiComplex,
    d: &MultiComplex,
    image: &[Multiset],
    j: usize,
    sigma: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> u64 {
    if j == c.m() {
        return 1;
    }
    let mut count = 0;
    for k in 0..d.m() {
        if used[k] || d.nonsingletons()[k] != image[j] {
            continue;
        }
        let consistent = (0..j)
            .all(|i| leq(c, i, j) == leq(d, sigma[i], k) && leq(c, j, i) == leq(d, k, sigma[i]));
        if !consistent {
            continue;
        }
        sigma[j] = k;
        used[k] = true;
        count += assign(c, d, image, j + 1, sigma, used);
        used[k] = false;
    }
    count
}

/// Sub-multi-complexes of `c` isomorphic to `d`, by enumerating every
/// vertex subset and every order-closed set of faces over it.
pub fn brute_sub_count(c: &MultiComplex, d: &MultiComplex) -> u64 {
    let mut count = 0;
    for x in 0u64..1 << c.n() {
        if x.count_ones() as usize != d.n() {
            continue;
        }
        let inside: Vec<usize> = (0..c.m())
            .filter(|&j| c.nonsingletons()[j].support_bits() & !x == 0)
            .collect();
        let r = c.restrict_bits(x);
        for sub in 0u64..1 << inside.len() {
            if sub.count_ones() as usize != d.m() {
                continue;
            }
            let mask = mcx_core::complex::bits(sub).fold(0u64, |acc, i| acc | 1 << inside[i]);
            if (0..c.m()).any(|j| mask >> j & 1 == 1 && c.below(j) & !mask != 0) {
                continue;
            }
            // same faces, viewed inside the restriction
            let rmask = restricted_mask(c, &r, x, mask);
            if brute_iso_count(&r.spanning(rmask), d) > 0 {
                count += 1;
            }
        }
    }
    count
}

fn restricted_mask(c: &MultiComplex, r: &MultiComplex, x: u64, mask: u64) -> u64 {
    // restrict_bits keeps the relative order of surviving faces
    let kept: Vec<usize> = (0..c.m())
        .filter(|&j| c.nonsingletons()[j].support_bits() & !x == 0)
        .collect();
    assert_eq!(kept.len(), r.m());
    kept.iter()
        .enumerate()
        .filter(|(_, &j)| mask >> j & 1 == 1)
        .fold(0u64, |acc, (i, _)| acc | 1 << i)
}

/// Random valid multi-complexes on `1..=max_n` vertices with at most
/// `max_m` non-singleton faces.
pub fn arb_complex(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiComplex> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let face = proptest::collection::vec(0..n, 2..=3).prop_map(Multiset::new);
            (Just(n), proptest::collection::vec(face, 0..=max_m))
        })
        .prop_flat_map(|(n, faces)| {
            let candidates: Vec<(usize, usize)> = (0..faces.len())
                .flat_map(|i| (0..faces.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| {
                    faces[i].len() < faces[j].len() && faces[i].is_contained_in(&faces[j])
                })
                .collect();
            let k = candidates.len();
            (
                Just(n),
                Just(faces),
                Just(candidates),
                proptest::collection::vec(any::<bool>(), k),
            )
        })
        .prop_map(|(n, faces, candidates, keep)| {
            let pairs: Vec<(usize, usize)> = candidates
                .into_iter()
                .zip(keep)
                .filter_map(|(p, k)| k.then_some(p))
                .collect();
            MultiComplex::from_nonsingletons(n, faces, &pairs).unwrap()
        })
}

/// Random multigraphs, i.e. complexes of dimension at most 1.
pub fn arb_multigraph(max_n: usize, max_e: usize) -> impl Strategy<Value = MultiComplex> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_e).prop_map(move |edges| graph(n, &edges))
    })
}

pub fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
