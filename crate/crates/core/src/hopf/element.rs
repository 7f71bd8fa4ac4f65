//! Sparse exact-rational linear combinations over canonical keys.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::MultiComplex;
use crate::error::{Error, Result};
use crate::iso::{canonical_form, CanonicalKey};

pub type Scalar = BigRational;

/// An element of the multi-complex algebra: a finite combination of
/// isomorphism classes. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<CanonicalKey, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    /// The unit, i.e. the class of the empty complex.
    pub fn one() -> Self {
        Element::basis(CanonicalKey::empty())
    }

    pub fn basis(key: CanonicalKey) -> Self {
        let mut e = Element::zero();
        e.add_term(key, Scalar::one());
        e
    }

    pub fn from_complex(c: &MultiComplex) -> Result<Self> {
        Ok(Element::basis(canonical_form(c)?))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (CanonicalKey, Scalar)>) -> Self {
        let mut e = Element::zero();
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    pub fn add_term(&mut self, key: CanonicalKey, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &CanonicalKey) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn to_json(&self) -> ElementJson {
        ElementJson {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| TermJson {
                    key: k.to_hex(),
                    num: v.numer().to_string(),
                    den: v.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &ElementJson) -> Result<Self> {
        let mut e = Element::zero();
        for t in &json.terms {
            let key = CanonicalKey::from_hex(&t.key)?;
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| Error::Json(format!("bad numerator {:?}", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| Error::Json(format!("bad denominator {:?}", t.den)))?;
            if den.is_zero() {
                return Err(Error::Json("zero denominator".into()));
            }
            e.add_term(key, Scalar::new(num, den));
        }
        Ok(e)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(k, v)| (k.to_hex(), v.to_string())))
            .finish()
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), -v.clone());
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

/// JSON form of an element: `{"terms": [{"key", "num", "den"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub key: String,
    pub num: String,
    pub den: String,
}

/// A finite combination of pairs of classes, the codomain of the coproduct.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(CanonicalKey, CanonicalKey), Scalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn add_term(&mut self, left: CanonicalKey, right: CanonicalKey, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Scalar) {
        for ((a, b), v) in &other.terms {
            self.add_term(a.clone(), b.clone(), v * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(CanonicalKey, CanonicalKey), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &CanonicalKey, right: &CanonicalKey) -> Scalar {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exchanges the tensor factors.
    pub fn swap(&self) -> TensorElement {
        TensorElement {
            terms: self
                .terms
                .iter()
                .map(|((a, b), v)| ((b.clone(), a.clone()), v.clone()))
                .collect(),
        }
    }

    /// `a ⊗ b` of two elements.
    pub fn tensor(a: &Element, b: &Element) -> TensorElement {
        let mut out = TensorElement::zero();
        for (ka, va) in a.terms() {
            for (kb, vb) in b.terms() {
                out.add_term(ka.clone(), kb.clone(), va * vb);
            }
        }
        out
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.terms
                    .iter()
                    .map(|((a, b), v)| (format!("{a}⊗{b}"), v.to_string())),
            )
            .finish()
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

/// Integer scalar shorthand.
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}
