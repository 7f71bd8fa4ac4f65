mod common;

use common::*;
use mcx_core::iso::{
    automorphism_count, canonical_form, embedding_count, is_isomorphic, multiplicity,
};
use mcx_core::poset::{down_sets, SpanningLattice};
use mcx_core::MultiComplex;
use proptest::prelude::*;

/// Injective maps `V(h) -> V(g)` sending edges to edges, over graph
/// automorphisms of `h`.
fn graph_subgraph_count(g: &[(usize, usize)], gn: usize, h: &[(usize, usize)], hn: usize) -> u64 {
    let adj = |edges: &[(usize, usize)], a: usize, b: usize| {
        edges
            .iter()
            .any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
    };
    let mut maps = 0u64;
    let mut f = vec![0usize; hn];
    fn rec(k: usize, f: &mut Vec<usize>, gn: usize, ok: &dyn Fn(&[usize]) -> bool, out: &mut u64) {
        if k == f.len() {
            if ok(f) {
                *out += 1;
            }
            return;
        }
        for v in 0..gn {
            if !f[..k].contains(&v) {
                f[k] = v;
                rec(k + 1, f, gn, ok, out);
            }
        }
    }
    let edge_map_ok = |f: &[usize]| h.iter().all(|&(a, b)| adj(g, f[a], f[b]));
    rec(0, &mut f, gn, &edge_map_ok, &mut maps);
    let mut auts = 0u64;
    let self_ok = |f: &[usize]| h.iter().all(|&(a, b)| adj(h, f[a], f[b]));
    rec(0, &mut vec![0; hn], hn, &self_ok, &mut auts);
    maps / auts
}

fn edges_of(c: &MultiComplex) -> Vec<(usize, usize)> {
    c.nonsingletons()
        .iter()
        .map(|f| (f.as_slice()[0], f.as_slice()[1]))
        .collect()
}

#[test]
fn graph_census_matches_known_counts() {
    let counts: Vec<usize> = (1..=5).map(|n| graphs_on(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34]);
}

#[test]
fn multigraph_corpus_is_iso_free() {
    let mgs = multigraphs(2, 2);
    // one vertex: 0, 1, 2 loops; two vertices: all multisets of size <= 2 over
    // {loop a, loop b, edge} up to swapping a and b
    assert_eq!(mgs.len(), 3 + 1 + 2 + 4);
    for (i, a) in mgs.iter().enumerate() {
        for b in &mgs[i + 1..] {
            assert_eq!(brute_iso_count(a, b), 0);
        }
    }
}

#[test]
fn automorphisms_match_brute_force_on_corpus() {
    for c in graphs_up_to(4)
        .iter()
        .chain(&multigraphs(3, 3))
        .chain(&[simplex2(), delta_example()])
    {
        assert_eq!(
            automorphism_count(c).unwrap(),
            brute_iso_count(c, c),
            "{c:?}"
        );
    }
}

#[test]
fn multiplicity_matches_graph_level_counting() {
    let gs = graphs_up_to(4);
    for g in &gs {
        for h in &gs {
            let direct = if h.n() > g.n() {
                0
            } else {
                graph_subgraph_count(&edges_of(g), g.n(), &edges_of(h), h.n())
            };
            assert_eq!(multiplicity(g, h).unwrap(), direct, "{g:?} / {h:?}");
        }
    }
}

#[test]
fn multiplicity_matches_sub_complex_census() {
    let big = [
        simplex2(),
        delta_example(),
        graph(2, &[(0, 0), (0, 1), (0, 1)]),
    ];
    for c in &big {
        let mut seen = std::collections::BTreeSet::new();
        for x in 1u64..1 << c.n() {
            let r = c.restrict_bits(x);
            for m in down_sets(&r).unwrap() {
                let d = r.spanning(m);
                if !seen.insert(canonical_form(&d).unwrap()) {
                    continue;
                }
                let mult = multiplicity(c, &d).unwrap();
                assert_eq!(mult, brute_sub_count(c, &d), "{c:?} / {d:?}");
                assert_eq!(
                    mult * automorphism_count(&d).unwrap(),
                    embedding_count(c, &d).unwrap()
                );
            }
        }
    }
}

#[test]
fn down_sets_match_brute_force() {
    for c in [
        simplex2(),
        delta_example(),
        graph(3, &[(0, 1), (1, 2), (0, 0)]),
    ] {
        let brute: Vec<u64> = (0u64..1 << c.m())
            .filter(|&m| c.is_down_closed(m))
            .collect();
        let mut fast = down_sets(&c).unwrap();
        fast.sort_unstable();
        assert_eq!(fast, brute);
    }
}

#[test]
fn mobius_matches_chain_counting() {
    for c in [
        simplex2(),
        delta_example(),
        graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
    ] {
        let lattice = SpanningLattice::new(&c).unwrap();
        for &d in lattice.masks() {
            for &e in lattice.masks() {
                if d & !e == 0 {
                    assert_eq!(
                        lattice.mobius(d, e).unwrap(),
                        lattice.mobius_chain_oracle(d, e).unwrap()
                    );
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn canonical_form_agrees_with_brute_iso(a in arb_complex(4, 4), b in arb_complex(4, 4)) {
        let brute = brute_iso_count(&a, &b) > 0;
        prop_assert_eq!(is_isomorphic(&a, &b).unwrap(), brute);
    }

    #[test]
    fn relabeled_copies_are_isomorphic(
        (c, perm) in arb_complex(5, 5).prop_flat_map(|c| { let n = c.n(); (Just(c), arb_perm(n)) })
    ) {
        let d = c.relabel(&perm).unwrap();
        prop_assert!(brute_iso_count(&c, &d) > 0);
        prop_assert_eq!(canonical_form(&c).unwrap(), canonical_form(&d).unwrap());
    }

    #[test]
    fn automorphisms_match_brute_force(c in arb_complex(4, 5)) {
        prop_assert_eq!(automorphism_count(&c).unwrap(), brute_iso_count(&c, &c));
    }

    #[test]
    fn multiplicity_matches_census_on_random(c in arb_complex(4, 4), x in 1u64..16, pick in any::<u64>()) {
        let r = c.restrict_bits(x);
        let sets = down_sets(&r).unwrap();
        let d = r.spanning(sets[(pick % sets.len() as u64) as usize]);
        let mult = multiplicity(&c, &d).unwrap();
        prop_assert!(mult >= 1);
        prop_assert_eq!(mult, brute_sub_count(&c, &d));
        prop_assert_eq!(mult * automorphism_count(&d).unwrap(), embedding_count(&c, &d).unwrap());
    }
}
