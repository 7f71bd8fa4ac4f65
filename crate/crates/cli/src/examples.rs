//! Golden checks run by `mcx verify examples`.

use mcx_core::encode::{from_colored_simplicial, pc_dim1};
use mcx_core::format::{encode_text, parse_text, EncodeKind};
use mcx_core::hopf::{
    antipode_axiomatic, antipode_grouped, antipode_primitive, coproduct, int, is_primitive,
    primitive_pc, product, to_primitive_basis,
};
use mcx_core::iso::{canonical_form, is_isomorphic, multiplicity};
use mcx_core::{CanonicalKey, Element, MultiComplex, Multiset, Result, TensorElement};

pub const K2: &str = include_str!("../corpus/k2.mcx");
pub const K3: &str = include_str!("../corpus/k3.mcx");
pub const PATH3: &str = include_str!("../corpus/path3.mcx");
pub const MULTIGRAPH: &str = include_str!("../corpus/multigraph.mcx");
pub const MULTIGRAPH_LOOPS: &str = include_str!("../corpus/multigraph-loops.mcx");
pub const SIMPLEX2: &str = include_str!("../corpus/simplex2.mcx");
pub const DELTA: &str = include_str!("../corpus/delta.mcx");
pub const DELTA_ENC: &str = include_str!("../corpus/delta.enc.txt");
pub const COLORED_ENC: &str = include_str!("../corpus/colored.enc.txt");
pub const PATH3_ENC: &str = include_str!("../corpus/path3.enc.txt");

/// The complexes shipped in the corpus, by file stem.
pub fn corpus() -> Result<Vec<(&'static str, MultiComplex)>> {
    [
        ("k2", K2),
        ("k3", K3),
        ("path3", PATH3),
        ("multigraph", MULTIGRAPH),
        ("multigraph-loops", MULTIGRAPH_LOOPS),
        ("simplex2", SIMPLEX2),
        ("delta", DELTA),
    ]
    .into_iter()
    .map(|(name, text)| Ok((name, parse_text(text)?)))
    .collect()
}

fn key(c: &MultiComplex) -> Result<CanonicalKey> {
    canonical_form(c)
}

fn graph(n: usize, edges: &[(usize, usize)]) -> MultiComplex {
    mcx_core::encode::from_multigraph(n, edges).expect("valid graph")
}

fn lin(terms: &[(i64, &MultiComplex)]) -> Result<Element> {
    let mut e = Element::zero();
    for &(c, x) in terms {
        e.add_term(key(x)?, int(c));
    }
    Ok(e)
}

fn ten(terms: &[(i64, &MultiComplex, &MultiComplex)]) -> Result<TensorElement> {
    let mut t = TensorElement::default();
    for &(c, a, b) in terms {
        t.add_term(key(a)?, key(b)?, int(c));
    }
    Ok(t)
}

struct Named {
    k3: MultiComplex,
    p3: MultiComplex,
    k2: MultiComplex,
    v: MultiComplex,
    k2v: MultiComplex,
    v2: MultiComplex,
    v3: MultiComplex,
    empty: MultiComplex,
}

fn named() -> Named {
    let v = MultiComplex::discrete(1);
    let k2 = graph(2, &[(0, 1)]);
    Named {
        k3: graph(3, &[(0, 1), (1, 2), (0, 2)]),
        p3: graph(3, &[(0, 1), (1, 2)]),
        k2v: k2.disjoint_union(&v),
        k2,
        v2: MultiComplex::discrete(2),
        v3: MultiComplex::discrete(3),
        v,
        empty: MultiComplex::empty(),
    }
}

type Check = (&'static str, fn() -> Result<bool>);

pub const CHECKS: &[Check] = &[
    ("k3 primitive", k3_primitive),
    ("path primitive", path_primitive),
    ("path primitive basis", path_basis),
    ("path coproduct", path_coproduct),
    ("path product coproducts", path_product_coproducts),
    ("path primitive is primitive", path_is_primitive),
    ("multigraph encoding", multigraph_encoding),
    ("multigraph primitive", multigraph_primitive),
    ("delta complex encoding", delta_encoding),
    ("delta complex primitive", delta_primitive),
    ("colored encoding", colored_encoding),
    ("edge list encoding", edge_list_encoding),
    ("path antipode", path_antipode),
    ("grouped antipode divergence", grouped_divergence),
    ("multiplicities", multiplicities),
];

pub fn run_all() -> Vec<(&'static str, Result<bool>)> {
    CHECKS.iter().map(|&(name, f)| (name, f())).collect()
}

fn k3_primitive() -> Result<bool> {
    let g = named();
    let k3 = parse_text(K3)?;
    let expect = lin(&[(1, &g.k3), (-3, &g.p3), (3, &g.k2v), (-1, &g.v3)])?;
    Ok(primitive_pc(&k3)? == expect)
}

fn path_primitive() -> Result<bool> {
    let g = named();
    let p3 = parse_text(PATH3)?;
    let expect = lin(&[(1, &g.p3), (-2, &g.k2v), (1, &g.v3)])?;
    let p_k2 = lin(&[(1, &g.k2), (-1, &g.v2)])?;
    let p_v = lin(&[(1, &g.v)])?;
    // G = P_G + 2 P_{G1} P_{G2} + P_{G2}^3
    let mut rebuilt = primitive_pc(&p3)?;
    rebuilt.add_scaled(&product(&p_k2, &p_v)?, &int(2));
    rebuilt.add_scaled(&product(&product(&p_v, &p_v)?, &p_v)?, &int(1));
    Ok(primitive_pc(&p3)? == expect
        && primitive_pc(&g.k2)? == p_k2
        && primitive_pc(&g.v)? == p_v
        && rebuilt == Element::from_complex(&p3)?)
}

fn path_basis() -> Result<bool> {
    let g = named();
    let basis = to_primitive_basis(&parse_text(PATH3)?)?;
    let (p3, k2, v) = (key(&g.p3)?, key(&g.k2)?, key(&g.v)?);
    let mut pair = vec![k2, v.clone()];
    pair.sort();
    let expect = [
        (vec![p3], 1u64),
        (pair, 2),
        (vec![v.clone(), v.clone(), v], 1),
    ]
    .into_iter()
    .collect();
    Ok(basis == expect)
}

fn path_coproduct() -> Result<bool> {
    let g = named();
    let expect = ten(&[
        (1, &g.empty, &g.p3),
        (2, &g.v, &g.k2),
        (1, &g.v, &g.v2),
        (2, &g.k2, &g.v),
        (1, &g.v2, &g.v),
        (1, &g.p3, &g.empty),
    ])?;
    let got = coproduct(&Element::from_complex(&parse_text(PATH3)?)?)?;
    Ok(got.len() == 6 && got == expect)
}

fn path_product_coproducts() -> Result<bool> {
    let g = named();
    let k2v = ten(&[
        (1, &g.empty, &g.k2v),
        (2, &g.v, &g.v2),
        (1, &g.v, &g.k2),
        (2, &g.v2, &g.v),
        (1, &g.k2, &g.v),
        (1, &g.k2v, &g.empty),
    ])?;
    let v3 = ten(&[
        (1, &g.empty, &g.v3),
        (3, &g.v, &g.v2),
        (3, &g.v2, &g.v),
        (1, &g.v3, &g.empty),
    ])?;
    Ok(coproduct(&Element::from_complex(&g.k2v)?)? == k2v
        && coproduct(&Element::from_complex(&g.v3)?)? == v3)
}

fn path_is_primitive() -> Result<bool> {
    is_primitive(&primitive_pc(&parse_text(PATH3)?)?)
}

fn multigraph_encoding() -> Result<bool> {
    let c = parse_text(MULTIGRAPH_LOOPS)?;
    let expect = graph(2, &[(0, 0), (0, 0), (0, 1), (0, 1)]);
    Ok(c == expect && c.below_masks().iter().all(|&b| b == 0))
}

fn multigraph_primitive() -> Result<bool> {
    let c = parse_text(MULTIGRAPH)?;
    let double = graph(2, &[(0, 1), (0, 1)]);
    let loop_edge = graph(2, &[(0, 0), (0, 1)]);
    let edge = graph(2, &[(0, 1)]);
    let loop_vertex = graph(2, &[(0, 0)]);
    let bare = MultiComplex::discrete(2);
    let expect = lin(&[
        (1, &c),
        (-1, &double),
        (-2, &loop_edge),
        (1, &loop_vertex),
        (2, &edge),
        (-1, &bare),
    ])?;
    let p = pc_dim1(&c)?;
    Ok(p.len() == 6 && p == expect && p == primitive_pc(&c)?)
}

fn delta_encoding() -> Result<bool> {
    let c = parse_text(DELTA)?;
    let enc = encode_text(EncodeKind::Delta, DELTA_ENC)?;
    let tri = c.n()
        + c.nonsingletons()
            .iter()
            .position(|f| f.len() == 3)
            .expect("triangle");
    let doubled: Vec<usize> = (c.n()..c.face_count())
        .filter(|&id| {
            c.face(id)
                .map(|f| f.content == Multiset::from([0, 1]))
                .unwrap_or(false)
        })
        .collect();
    let below: Vec<bool> = doubled
        .iter()
        .map(|&id| c.leq(id, tri))
        .collect::<Result<_>>()?;
    Ok(c.face_count() == 8
        && c == enc
        && below.len() == 2
        && below.iter().filter(|&&b| b).count() == 1)
}

fn delta_primitive() -> Result<bool> {
    let c = parse_text(DELTA)?;
    let s = parse_text(SIMPLEX2)?;
    Ok(is_primitive(&primitive_pc(&c)?)? && is_primitive(&primitive_pc(&s)?)?)
}

fn colored_encoding() -> Result<bool> {
    let c = encode_text(EncodeKind::Colored, COLORED_ENC)?;
    let faces = [vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]];
    let direct = from_colored_simplicial(3, &faces, &[(vec![0], 1), (vec![0, 1], 1)])?;
    let loops = c
        .nonsingletons()
        .iter()
        .filter(|f| f.as_slice() == [0, 0])
        .count();
    let edges12 = c
        .nonsingletons()
        .iter()
        .filter(|f| f.as_slice() == [0, 1])
        .count();
    Ok(c == direct && c.m() == 6 && loops == 1 && edges12 == 2)
}

fn edge_list_encoding() -> Result<bool> {
    let c = encode_text(EncodeKind::Graph, PATH3_ENC)?;
    is_isomorphic(&c, &parse_text(PATH3)?)
}

fn path_antipode() -> Result<bool> {
    let g = named();
    let p3 = Element::from_complex(&parse_text(PATH3)?)?;
    let expect = lin(&[(-1, &g.p3), (4, &g.k2v), (-4, &g.v3)])?;
    Ok(antipode_axiomatic(&p3)? == expect && antipode_primitive(&p3)? == expect)
}

fn grouped_divergence() -> Result<bool> {
    let g = named();
    let k2 = Element::from_complex(&parse_text(K2)?)?;
    let p3 = Element::from_complex(&parse_text(PATH3)?)?;
    let dk2 = &antipode_axiomatic(&k2)? - &antipode_grouped(&k2)?;
    let dp3 = &antipode_axiomatic(&p3)? - &antipode_grouped(&p3)?;
    Ok(dk2 == lin(&[(1, &g.v2)])? && dp3 == lin(&[(2, &g.k2v), (-3, &g.v3)])?)
}

fn multiplicities() -> Result<bool> {
    let g = named();
    Ok(multiplicity(&g.k3, &g.p3)? == 3
        && multiplicity(&g.k3, &g.k2v)? == 3
        && multiplicity(&g.p3, &g.k2v)? == 2
        && multiplicity(&g.k3, &g.v3)? == 1)
}
