//! Human-readable rendering of elements and tensors.

use std::collections::BTreeMap;

use mcx_core::format::to_text;
use mcx_core::hopf::PrimitiveMonomial;
use mcx_core::{CanonicalKey, Element, Scalar, TensorElement};
use num_traits::Signed;

/// Assigns short aliases `c1, c2, ...` to keys in order of first use.
#[derive(Default)]
pub struct Legend {
    aliases: BTreeMap<CanonicalKey, usize>,
    order: Vec<CanonicalKey>,
}

impl Legend {
    pub fn alias(&mut self, key: &CanonicalKey) -> String {
        if key.is_empty_complex() {
            return "1".into();
        }
        let next = self.order.len() + 1;
        let id = *self.aliases.entry(key.clone()).or_insert_with(|| {
            self.order.push(key.clone());
            next
        });
        format!("c{id}")
    }

    pub fn render(&self) -> String {
        if self.order.is_empty() {
            return String::new();
        }
        let mut out = String::from("where\n");
        for (i, k) in self.order.iter().enumerate() {
            out.push_str(&format!("  c{} = {}\n", i + 1, one_line(k)));
        }
        out
    }
}

/// The canonical text form of a key's complex on a single line.
pub fn one_line(key: &CanonicalKey) -> String {
    match key.decode() {
        Ok(c) => to_text(&c).lines().collect::<Vec<_>>().join(" | "),
        Err(_) => key.to_hex(),
    }
}

pub fn coeff(q: &Scalar) -> String {
    let sign = if q.is_negative() { '-' } else { '+' };
    let a = q.abs();
    if a.is_integer() {
        format!("{sign}{}", a.numer())
    } else {
        format!("{sign}{}/{}", a.numer(), a.denom())
    }
}

/// Terms in descending key order, so larger complexes come first.
pub fn element(e: &Element, legend: &mut Legend) -> String {
    if e.is_zero() {
        return "0\n".into();
    }
    let mut terms: Vec<_> = e.terms().collect();
    terms.reverse();
    terms
        .into_iter()
        .map(|(k, q)| format!("{}·{}\n", coeff(q), legend.alias(k)))
        .collect()
}

pub fn tensor(t: &TensorElement, legend: &mut Legend) -> String {
    if t.is_zero() {
        return "0\n".into();
    }
    let mut terms: Vec<_> = t.terms().collect();
    terms.sort_by(|((a, b), _), ((c, d), _)| (c.degree(), d, c).cmp(&(a.degree(), b, a)));
    terms
        .into_iter()
        .map(|((a, b), q)| format!("{}·{} ⊗ {}\n", coeff(q), legend.alias(a), legend.alias(b)))
        .collect()
}

pub fn monomials(m: &BTreeMap<PrimitiveMonomial, u64>, legend: &mut Legend) -> String {
    let mut out = String::new();
    for (mono, k) in m.iter().rev() {
        let factors: Vec<String> = mono
            .iter()
            .map(|key| format!("P[{}]", legend.alias(key)))
            .collect();
        let body = if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("·")
        };
        out.push_str(&format!("+{k}·{body}\n"));
    }
    out
}

pub fn with_legend(body: String, legend: &Legend) -> String {
    format!("{body}{}", legend.render())
}
