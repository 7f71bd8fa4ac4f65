//! The Hopf algebra of multi-complexes: product is disjoint union, the
//! coproduct splits the base set, and the primitives `P_C` come from the
//! Möbius function of the spanning sub-complex lattice.
//!
//! Three antipodes are provided. [`antipode_axiomatic`] solves
//! `m ∘ (S ⊗ id) ∘ Δ = u ∘ ε` degree by degree and is the reference.
//! [`antipode_primitive`] sums `(-1)^{c_D} P_D` over spanning sub-complexes.
//! [`antipode_grouped`] sums `(-1)^t [C : D_1⋯D_t] D_1⋯D_t` over component
//! multisets; it does not agree with the other two and is kept for
//! comparison.

mod element;
mod verify;

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use element::{int, Element, ElementJson, Scalar, TensorElement, TermJson};
pub use verify::{verify_hopf_axioms, Axiom, AxiomCheck, AxiomReport};

use crate::complex::{low_bits, MultiComplex};
use crate::error::Result;
use crate::iso::{canonical_form, CanonicalKey};
use crate::limits::limits;
use crate::poset::{down_sets, SpanningLattice};

struct Memo<K, V>(OnceLock<RwLock<HashMap<K, Arc<V>>>>);

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    const fn new() -> Self {
        Memo(OnceLock::new())
    }

    fn map(&self) -> &RwLock<HashMap<K, Arc<V>>> {
        self.0.get_or_init(|| RwLock::new(HashMap::new()))
    }

    fn get_or_try(&self, key: &K, f: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
        if let Some(v) = self.map().read().expect("memo lock").get(key) {
            return Ok(v.clone());
        }
        let v = Arc::new(f()?);
        self.map()
            .write()
            .expect("memo lock")
            .insert(key.clone(), v.clone());
        Ok(v)
    }
}

static PRODUCTS: Memo<(CanonicalKey, CanonicalKey), CanonicalKey> = Memo::new();
static COPRODUCTS: Memo<CanonicalKey, TensorElement> = Memo::new();
static PRIMITIVES: Memo<CanonicalKey, Element> = Memo::new();
static ANTIPODES: Memo<CanonicalKey, Element> = Memo::new();

/// Class of the disjoint union of two classes.
pub fn key_product(a: &CanonicalKey, b: &CanonicalKey) -> Result<CanonicalKey> {
    if a.is_empty_complex() {
        return Ok(b.clone());
    }
    if b.is_empty_complex() {
        return Ok(a.clone());
    }
    let pair = if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let k = PRODUCTS.get_or_try(&pair, || {
        canonical_form(&pair.0.decode()?.disjoint_union(&pair.1.decode()?))
    })?;
    Ok((*k).clone())
}

/// Bilinear extension of disjoint union.
pub fn product(a: &Element, b: &Element) -> Result<Element> {
    let mut out = Element::zero();
    for (ka, va) in a.terms() {
        for (kb, vb) in b.terms() {
            out.add_term(key_product(ka, kb)?, va * vb);
        }
    }
    Ok(out)
}

/// Product in the tensor square, factor by factor.
pub fn tensor_product(a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for ((a1, a2), va) in a.terms() {
        for ((b1, b2), vb) in b.terms() {
            out.add_term(key_product(a1, b1)?, key_product(a2, b2)?, va * vb);
        }
    }
    Ok(out)
}

/// `Δ(C) = Σ_{X ⊔ Y = n_C} C|_X ⊗ C|_Y` on a basis class.
pub fn coproduct_key(key: &CanonicalKey) -> Result<Arc<TensorElement>> {
    COPRODUCTS.get_or_try(key, || {
        let c = key.decode()?;
        limits().check_vertices(c.n())?;
        let all = low_bits(c.n());
        let mut out = TensorElement::zero();
        for x in 0..=all {
            let left = canonical_form(&c.restrict_bits(x))?;
            let right = canonical_form(&c.restrict_bits(all & !x))?;
            out.add_term(left, right, Scalar::one());
        }
        Ok(out)
    })
}

/// Linear extension of the coproduct.
pub fn coproduct(a: &Element) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for (k, v) in a.terms() {
        out.add_scaled(&*coproduct_key(k)?, v);
    }
    Ok(out)
}

/// Coefficient of the unit.
pub fn counit(a: &Element) -> Scalar {
    a.coeff(&CanonicalKey::empty())
}

/// Spanning sub-complexes of `c` grouped by class: (class, how many masks,
/// number of connected components).
pub fn spanning_census(c: &MultiComplex) -> Result<Vec<(CanonicalKey, u64, usize)>> {
    let mut census: BTreeMap<CanonicalKey, (u64, usize)> = BTreeMap::new();
    for mask in down_sets(c)? {
        let key = canonical_form(&c.spanning(mask))?;
        let comps = c.spanning_components(mask).len();
        census.entry(key).or_insert((0, comps)).0 += 1;
    }
    Ok(census
        .into_iter()
        .map(|(k, (count, comps))| (k, count, comps))
        .collect())
}

/// `P_C = Σ_{D ≼ C} μ(D, C) D`.
pub fn primitive_pc(c: &MultiComplex) -> Result<Element> {
    Ok((*primitive_key(&canonical_form(c)?)?).clone())
}

/// `P_C` for a class, memoized.
pub fn primitive_key(key: &CanonicalKey) -> Result<Arc<Element>> {
    PRIMITIVES.get_or_try(key, || {
        let c = key.decode()?;
        let lattice = SpanningLattice::new(&c)?;
        let mu = lattice.mobius_to_top();
        let mut out = Element::zero();
        for (mask, m) in lattice.masks().iter().zip(mu.iter()) {
            if !m.is_zero() {
                out.add_term(
                    canonical_form(&c.spanning(*mask))?,
                    Scalar::from_integer(m.clone()),
                );
            }
        }
        Ok(out)
    })
}

/// A monomial in the primitives `P_D`: the sorted list of connected classes.
pub type PrimitiveMonomial = Vec<CanonicalKey>;

/// `C = Σ_{D ≼ C} P_D` regrouped: the coefficient of `P_{D_1}⋯P_{D_t}` is the
/// number of spanning sub-complexes with components `D_1, …, D_t`.
pub fn to_primitive_basis(c: &MultiComplex) -> Result<BTreeMap<PrimitiveMonomial, u64>> {
    let mut out: BTreeMap<PrimitiveMonomial, u64> = BTreeMap::new();
    for mask in down_sets(c)? {
        let mut factors = c
            .spanning_components(mask)
            .into_iter()
            .map(|x| canonical_form(&c.spanning(mask).restrict_bits(x)))
            .collect::<Result<Vec<_>>>()?;
        factors.sort();
        *out.entry(factors).or_insert(0) += 1;
    }
    Ok(out)
}

/// Expands a polynomial in the primitives back into the class basis.
pub fn from_primitive_basis(coeffs: &BTreeMap<PrimitiveMonomial, u64>) -> Result<Element> {
    let mut out = Element::zero();
    for (monomial, &count) in coeffs {
        if count == 0 {
            continue;
        }
        let mut term = Element::one();
        for key in monomial {
            term = product(&term, &*primitive_key(key)?)?;
        }
        out.add_scaled(&term, &Scalar::from_integer(BigInt::from(count)));
    }
    Ok(out)
}

/// `S(C) = Σ_{D ≼ C} (-1)^{c_D} P_D`, extended linearly.
pub fn antipode_primitive(a: &Element) -> Result<Element> {
    let mut out = Element::zero();
    for (k, v) in a.terms() {
        let c = k.decode()?;
        for (d, count, comps) in spanning_census(&c)? {
            let sign = if comps % 2 == 0 { 1 } else { -1 };
            let coeff = v * Scalar::from_integer(BigInt::from(sign * count as i64));
            out.add_scaled(&*primitive_key(&d)?, &coeff);
        }
    }
    Ok(out)
}

/// Reference antipode from `m ∘ (S ⊗ id) ∘ Δ = u ∘ ε`: `S(1) = 1` and
/// `S(C) = -C - Σ S(C|_X) · C|_Y` over splits with `X` non-empty and proper.
pub fn antipode_axiomatic(a: &Element) -> Result<Element> {
    let mut out = Element::zero();
    for (k, v) in a.terms() {
        out.add_scaled(&*antipode_key(k)?, v);
    }
    Ok(out)
}

fn antipode_key(key: &CanonicalKey) -> Result<Arc<Element>> {
    ANTIPODES.get_or_try(key, || {
        if key.is_empty_complex() {
            return Ok(Element::one());
        }
        let c = key.decode()?;
        let all = low_bits(c.n());
        let mut out = Element::basis(key.clone());
        for x in 1..all {
            let left = antipode_key(&canonical_form(&c.restrict_bits(x))?)?;
            let right = Element::from_complex(&c.restrict_bits(all & !x))?;
            out += &product(&left, &right)?;
        }
        Ok(-&out)
    })
}

/// `S(C) = Σ (-1)^t [C : D_1⋯D_t] D_1⋯D_t` over multisets of connected
/// classes, evaluated from the spanning census.
pub fn antipode_grouped(a: &Element) -> Result<Element> {
    let mut out = Element::zero();
    for (k, v) in a.terms() {
        let c = k.decode()?;
        for (d, count, comps) in spanning_census(&c)? {
            let sign: i64 = if comps % 2 == 0 { 1 } else { -1 };
            out.add_term(
                d,
                v * Scalar::from_integer(BigInt::from(sign * count as i64)),
            );
        }
    }
    Ok(out)
}

/// Whether `Δ(a) = a ⊗ 1 + 1 ⊗ a`.
pub fn is_primitive(a: &Element) -> Result<bool> {
    let delta = coproduct(a)?;
    let mut expected = TensorElement::tensor(a, &Element::one());
    expected.add_scaled(&TensorElement::tensor(&Element::one(), a), &Scalar::one());
    Ok(delta == expected)
}

/// `m ∘ (f ⊗ g)` applied to a tensor.
pub fn multiply_through(
    t: &TensorElement,
    f: impl Fn(&Element) -> Result<Element>,
    g: impl Fn(&Element) -> Result<Element>,
) -> Result<Element> {
    let mut out = Element::zero();
    for ((a, b), v) in t.terms() {
        let left = f(&Element::basis(a.clone()))?;
        let right = g(&Element::basis(b.clone()))?;
        out.add_scaled(&product(&left, &right)?, v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Multiset;

    fn graph(n: usize, edges: &[(usize, usize)]) -> MultiComplex {
        MultiComplex::from_nonsingletons(
            n,
            edges.iter().map(|&(a, b)| Multiset::from([a, b])).collect(),
            &[],
        )
        .unwrap()
    }

    fn key(c: &MultiComplex) -> CanonicalKey {
        canonical_form(c).unwrap()
    }

    fn el(terms: &[(i64, &MultiComplex)]) -> Element {
        Element::from_terms(terms.iter().map(|&(c, g)| (key(g), int(c))))
    }

    struct Small {
        v: MultiComplex,
        v2: MultiComplex,
        v3: MultiComplex,
        e: MultiComplex,
        ev: MultiComplex,
        p3: MultiComplex,
        k3: MultiComplex,
    }

    fn small() -> Small {
        Small {
            v: MultiComplex::discrete(1),
            v2: MultiComplex::discrete(2),
            v3: MultiComplex::discrete(3),
            e: graph(2, &[(0, 1)]),
            ev: graph(3, &[(0, 1)]),
            p3: graph(3, &[(0, 1), (1, 2)]),
            k3: graph(3, &[(0, 1), (0, 2), (1, 2)]),
        }
    }

    #[test]
    fn products() {
        let s = small();
        let e = el(&[(1, &s.e)]);
        assert_eq!(product(&Element::one(), &e).unwrap(), e);
        assert_eq!(product(&e, &el(&[(1, &s.v)])).unwrap(), el(&[(1, &s.ev)]));
        let sum = el(&[(1, &s.v), (1, &s.e)]);
        assert_eq!(
            product(&sum, &el(&[(1, &s.v)])).unwrap(),
            el(&[(1, &s.v2), (1, &s.ev)])
        );
    }

    #[test]
    fn small_coproducts() {
        let s = small();
        let empty = CanonicalKey::empty();
        let dv = coproduct(&el(&[(1, &s.v)])).unwrap();
        assert_eq!(dv.len(), 2);
        assert_eq!(dv.coeff(&empty, &key(&s.v)), int(1));
        assert_eq!(dv.coeff(&key(&s.v), &empty), int(1));

        let de = coproduct(&el(&[(1, &s.e)])).unwrap();
        assert_eq!(de.len(), 3);
        assert_eq!(de.coeff(&key(&s.v), &key(&s.v)), int(2));
    }

    #[test]
    fn counit_values() {
        let s = small();
        assert_eq!(counit(&Element::one()), int(1));
        assert_eq!(counit(&el(&[(1, &s.k3)])), int(0));
        let mut a = Element::one().scale(&int(3));
        a.add_term(key(&s.v), int(2));
        assert_eq!(counit(&a), int(3));
    }

    #[test]
    fn small_primitives() {
        let s = small();
        assert_eq!(primitive_pc(&s.v).unwrap(), el(&[(1, &s.v)]));
        assert_eq!(
            primitive_pc(&s.p3).unwrap(),
            el(&[(1, &s.p3), (-2, &s.ev), (1, &s.v3)])
        );
        assert_eq!(primitive_pc(&s.e).unwrap(), el(&[(1, &s.e), (-1, &s.v2)]));
    }

    #[test]
    fn basis_change_examples() {
        let s = small();
        let v = key(&s.v);
        let p3 = to_primitive_basis(&s.p3).unwrap();
        let expected: BTreeMap<PrimitiveMonomial, u64> = [
            (vec![key(&s.p3)], 1),
            (vec![key(&s.e), v.clone()], 2),
            (vec![v.clone(), v.clone(), v.clone()], 1),
        ]
        .into_iter()
        .map(|(mut k, c)| {
            k.sort();
            (k, c)
        })
        .collect();
        assert_eq!(p3, expected);
        assert_eq!(from_primitive_basis(&p3).unwrap(), el(&[(1, &s.p3)]));

        let mut mixed = BTreeMap::new();
        mixed.insert(vec![key(&s.e)], 1);
        mixed.insert(vec![v.clone()], 0);
        mixed.insert(vec![v.clone(), v.clone()], 1);
        assert_eq!(from_primitive_basis(&mixed).unwrap(), el(&[(1, &s.e)]));
        assert_eq!(
            to_primitive_basis(&s.v).unwrap(),
            BTreeMap::from([(vec![v], 1)])
        );
    }

    #[test]
    fn antipodes_on_small_graphs() {
        let s = small();
        let e = el(&[(1, &s.e)]);
        let expected_e = el(&[(2, &s.v2), (-1, &s.e)]);
        assert_eq!(antipode_axiomatic(&e).unwrap(), expected_e);
        assert_eq!(antipode_primitive(&e).unwrap(), expected_e);
        assert_eq!(antipode_grouped(&e).unwrap(), el(&[(1, &s.v2), (-1, &s.e)]));

        let p = el(&[(1, &s.p3)]);
        let expected_p = el(&[(-1, &s.p3), (4, &s.ev), (-4, &s.v3)]);
        assert_eq!(antipode_axiomatic(&p).unwrap(), expected_p);
        assert_eq!(antipode_primitive(&p).unwrap(), expected_p);
        assert_eq!(
            antipode_grouped(&p).unwrap(),
            el(&[(-1, &s.p3), (2, &s.ev), (-1, &s.v3)])
        );

        assert_eq!(antipode_axiomatic(&Element::one()).unwrap(), Element::one());
        let v = el(&[(1, &s.v)]);
        assert_eq!(antipode_axiomatic(&v).unwrap(), -&v);
        assert_eq!(antipode_grouped(&v).unwrap(), -&v);
    }

    #[test]
    fn primitivity() {
        let s = small();
        assert!(is_primitive(&el(&[(1, &s.v)])).unwrap());
        assert!(is_primitive(&primitive_pc(&s.k3).unwrap()).unwrap());
        assert!(!is_primitive(&el(&[(1, &s.e)])).unwrap());
        assert!(is_primitive(&Element::zero()).unwrap());
    }
}
