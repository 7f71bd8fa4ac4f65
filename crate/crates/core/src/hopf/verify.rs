use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{
    antipode_axiomatic, coproduct, coproduct_key, counit, multiply_through, product,
    tensor_product, Element, Scalar,
};
use crate::error::Result;
use crate::iso::CanonicalKey;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    Coassociativity,
    LeftCounit,
    RightCounit,
    Multiplicativity,
    LeftAntipode,
    RightAntipode,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Coassociativity => "coassociativity",
            Axiom::LeftCounit => "counit (ε⊗id)Δ",
            Axiom::RightCounit => "counit (id⊗ε)Δ",
            Axiom::Multiplicativity => "Δ(ab) = Δ(a)Δ(b)",
            Axiom::LeftAntipode => "m(S⊗id)Δ = uε",
            Axiom::RightAntipode => "m(id⊗S)Δ = uε",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub element: usize,
    pub axiom: Axiom,
    pub passed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Triple = BTreeMap<(CanonicalKey, CanonicalKey, CanonicalKey), Scalar>;

fn add(t: &mut Triple, k: (CanonicalKey, CanonicalKey, CanonicalKey), v: Scalar) {
    let slot = t.entry(k).or_insert_with(Scalar::zero);
    *slot += v;
}

fn prune(mut t: Triple) -> Triple {
    t.retain(|_, v| !v.is_zero());
    t
}

fn coassociative(a: &Element) -> Result<bool> {
    let delta = coproduct(a)?;
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((x, y), v) in delta.terms() {
        for ((x1, x2), w) in coproduct_key(x)?.terms() {
            add(&mut left, (x1.clone(), x2.clone(), y.clone()), v * w);
        }
        for ((y1, y2), w) in coproduct_key(y)?.terms() {
            add(&mut right, (x.clone(), y1.clone(), y2.clone()), v * w);
        }
    }
    Ok(prune(left) == prune(right))
}

fn counit_law(a: &Element, on_left: bool) -> Result<bool> {
    let mut out = Element::zero();
    for ((x, y), v) in coproduct(a)?.terms() {
        let (eps_of, keep) = if on_left { (x, y) } else { (y, x) };
        let e = counit(&Element::basis(eps_of.clone()));
        out.add_term(keep.clone(), v * e);
    }
    Ok(&out == a)
}

fn antipode_law(a: &Element, on_left: bool) -> Result<bool> {
    let delta = coproduct(a)?;
    let id = |x: &Element| Ok(x.clone());
    let lhs = if on_left {
        multiply_through(&delta, antipode_axiomatic, id)?
    } else {
        multiply_through(&delta, id, antipode_axiomatic)?
    };
    Ok(lhs == Element::one().scale(&counit(a)))
}

fn multiplicative(a: &Element, b: &Element) -> Result<bool> {
    let lhs = coproduct(&product(a, b)?)?;
    let rhs = tensor_product(&coproduct(a)?, &coproduct(b)?)?;
    Ok(lhs == rhs)
}

/// Checks the bialgebra and antipode identities on every element; the
/// product identity pairs each element with its successor (cyclically).
pub fn verify_hopf_axioms(corpus: &[Element]) -> Result<AxiomReport> {
    let mut report = AxiomReport::default();
    for (i, a) in corpus.iter().enumerate() {
        let b = &corpus[(i + 1) % corpus.len()];
        let results = [
            (Axiom::Coassociativity, coassociative(a)?),
            (Axiom::LeftCounit, counit_law(a, true)?),
            (Axiom::RightCounit, counit_law(a, false)?),
            (Axiom::Multiplicativity, multiplicative(a, b)?),
            (Axiom::LeftAntipode, antipode_law(a, true)?),
            (Axiom::RightAntipode, antipode_law(a, false)?),
        ];
        report
            .checks
            .extend(results.into_iter().map(|(axiom, passed)| AxiomCheck {
                element: i,
                axiom,
                passed,
            }));
    }
    Ok(report)
}
