mod common;

use common::*;
use mcx_core::encode::{from_graph, from_multigraph, from_simplicial};
use mcx_core::format::{parse_complex, parse_json, parse_text, to_json, to_text};
use mcx_core::hopf::key_product;
use mcx_core::iso::{canonical_form, is_isomorphic, CanonicalKey};
use mcx_core::MultiComplex;
use proptest::prelude::*;

fn key(c: &MultiComplex) -> CanonicalKey {
    canonical_form(c).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_and_json_round_trip_exactly(c in arb_complex(5, 6)) {
        let text = to_text(&c);
        let back = parse_text(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(to_text(&back), text);
        let json = to_json(&c);
        let back = parse_json(&json).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(to_json(&back), json);
        prop_assert_eq!(parse_complex(&to_json(&c)).unwrap(), c);
    }

    #[test]
    fn canonical_key_decodes_to_isomorphic_complex(c in arb_complex(5, 6)) {
        let k = key(&c);
        let d = k.decode().unwrap();
        prop_assert_eq!(key(&d), k.clone());
        prop_assert_eq!(CanonicalKey::from_hex(&k.to_hex()).unwrap(), k);
        prop_assert_eq!(d.n(), c.n());
        prop_assert_eq!(d.m(), c.m());
    }

    #[test]
    fn union_is_commutative_and_associative(
        a in arb_complex(3, 3),
        b in arb_complex(3, 3),
        c in arb_complex(3, 3),
    ) {
        prop_assert_eq!(key(&a.disjoint_union(&b)), key(&b.disjoint_union(&a)));
        prop_assert_eq!(
            key(&a.disjoint_union(&b).disjoint_union(&c)),
            key(&a.disjoint_union(&b.disjoint_union(&c)))
        );
        prop_assert_eq!(key_product(&key(&a), &key(&b)).unwrap(), key(&a.disjoint_union(&b)));
        prop_assert_eq!(key(&a.disjoint_union(&MultiComplex::empty())), key(&a));
    }

    #[test]
    fn restriction_composes(c in arb_complex(5, 6), x in any::<u64>(), y in any::<u64>()) {
        let all = (1u64 << c.n()) - 1;
        let (x, y) = (x & all, y & all);
        let once = c.restrict_bits(x & y);
        let twice = c.restrict_bits(x).restrict_bits(compress(y, x));
        prop_assert_eq!(once.clone(), twice);
        prop_assert_eq!(once.restrict_bits(u64::MAX), once);
    }

    #[test]
    fn components_rebuild_the_complex(c in arb_complex(5, 5)) {
        let mut union = MultiComplex::empty();
        for (_, comp) in c.connected_components() {
            prop_assert!(comp.is_connected());
            union = union.disjoint_union(&comp);
        }
        prop_assert!(is_isomorphic(&union, &c).unwrap());
    }

    #[test]
    fn graph_encoder_commutes_with_restriction(
        n in 1usize..6,
        edges in proptest::collection::btree_set((0usize..6, 0usize..6), 0..10),
        x in any::<u64>(),
    ) {
        let edges: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|&(a, b)| a < b && b < n)
            .collect();
        let g = from_graph(n, &edges).unwrap();
        let x = x & ((1 << n) - 1);
        let kept: Vec<usize> = (0..n).filter(|v| x >> v & 1 == 1).collect();
        let rank = |v: usize| kept.iter().position(|&k| k == v).unwrap();
        let induced: Vec<(usize, usize)> = edges
            .iter()
            .filter(|&&(a, b)| x >> a & 1 == 1 && x >> b & 1 == 1)
            .map(|&(a, b)| (rank(a), rank(b)))
            .collect();
        prop_assert_eq!(g.restrict_bits(x), from_graph(kept.len(), &induced).unwrap());
    }

    #[test]
    fn multigraph_encoder_commutes_with_union(
        a in proptest::collection::vec((0usize..3, 0usize..3), 0..4),
        b in proptest::collection::vec((0usize..2, 0usize..2), 0..4),
    ) {
        let shifted: Vec<(usize, usize)> = a
            .iter()
            .copied()
            .chain(b.iter().map(|&(x, y)| (x + 3, y + 3)))
            .collect();
        let joint = from_multigraph(5, &shifted).unwrap();
        let parts = from_multigraph(3, &a).unwrap().disjoint_union(&from_multigraph(2, &b).unwrap());
        prop_assert!(is_isomorphic(&joint, &parts).unwrap());
    }
}

/// Re-indexes the bits of `y` that lie in `x` to the positions they take
/// after restricting to `x`.
fn compress(y: u64, x: u64) -> u64 {
    let mut out = 0;
    let mut r = 0;
    for v in 0..64 {
        if x >> v & 1 == 1 {
            out |= (y >> v & 1) << r;
            r += 1;
        }
    }
    out
}

#[test]
fn simplicial_family_is_closed_under_restriction() {
    let s = from_simplicial(
        4,
        &[
            vec![0, 1],
            vec![0, 2],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
            vec![0, 1, 2],
        ],
    )
    .unwrap();
    let r = s.restrict_bits(0b0111);
    assert_eq!(r, simplex2());
    let edge_only = s.restrict_bits(0b1010);
    assert_eq!(edge_only, graph(2, &[(0, 1)]));
}

#[test]
fn delta_example_restrictions() {
    let d = delta_example();
    assert_eq!(d.restrict_bits(0b011), graph(2, &[(0, 1), (0, 1)]));
    assert_eq!(d.restrict_bits(0b110), graph(2, &[(0, 1)]));
}
