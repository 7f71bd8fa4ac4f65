//! The poset `X_C` of spanning sub-complexes and its Möbius function.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::complex::MultiComplex;
use crate::error::{Error, Result};
use crate::limits::limits;
use crate::mask::SubComplexMask;

/// All down-closed sets of non-singleton faces of `c`, sorted by
/// (size, bits).
pub fn down_sets(c: &MultiComplex) -> Result<Vec<u64>> {
    limits().check_faces(c.m())?;
    // A linear extension: faces by height.
    let mut topo: Vec<usize> = (0..c.m()).collect();
    topo.sort_by_key(|&j| c.face_dimension(j + c.n()).expect("valid id"));
    let mut out = Vec::new();
    fn extend(c: &MultiComplex, topo: &[usize], i: usize, mask: u64, out: &mut Vec<u64>) {
        if i == topo.len() {
            out.push(mask);
            return;
        }
        let j = topo[i];
        extend(c, topo, i + 1, mask, out);
        if c.below(j) & !mask == 0 {
            extend(c, topo, i + 1, mask | 1u64 << j, out);
        }
    }
    extend(c, &topo, 0, 0, &mut out);
    out.sort_by_key(|&m| (m.count_ones(), m));
    Ok(out)
}

type MobiusRow = Arc<HashMap<u64, BigInt>>;

/// The lattice of spanning sub-complexes of a complex.
pub struct SpanningLattice<'a> {
    owner: &'a MultiComplex,
    masks: Vec<u64>,
    index: HashMap<u64, usize>,
    rows: Mutex<HashMap<u64, MobiusRow>>,
    to_top: Mutex<Option<Arc<Vec<BigInt>>>>,
}

impl<'a> SpanningLattice<'a> {
    pub fn new(owner: &'a MultiComplex) -> Result<Self> {
        let masks = down_sets(owner)?;
        let index = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Ok(SpanningLattice {
            owner,
            masks,
            index,
            rows: Mutex::new(HashMap::new()),
            to_top: Mutex::new(None),
        })
    }

    pub fn owner(&self) -> &'a MultiComplex {
        self.owner
    }

    /// Masks in deterministic (size, bits) order.
    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.index.contains_key(&mask)
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    pub fn elements(&self) -> impl Iterator<Item = SubComplexMask<'a>> + '_ {
        self.masks
            .iter()
            .map(|&m| SubComplexMask::new(self.owner, m).expect("lattice masks are down-closed"))
    }

    pub fn top(&self) -> u64 {
        self.owner.full_mask()
    }

    /// Lattice elements `g` with `lower ⊆ g ⊆ upper`.
    fn interval(&self, lower: u64, upper: u64) -> Vec<u64> {
        let free = upper & !lower;
        let mut out = Vec::new();
        let mut sub = free;
        loop {
            let g = lower | sub;
            if self.contains(g) {
                out.push(g);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
        out.sort_by_key(|&m| (m.count_ones(), m));
        out
    }

    fn check_pair(&self, lower: u64, upper: u64) -> Result<()> {
        if !self.contains(lower) || !self.contains(upper) || lower & !upper != 0 {
            return Err(Error::NotComparable(lower, upper));
        }
        Ok(())
    }

    /// `μ(lower, g)` for every `g ⊇ lower`, memoized per lower mask.
    fn row(&self, lower: u64) -> MobiusRow {
        if let Some(r) = self.rows.lock().expect("memo lock").get(&lower) {
            return r.clone();
        }
        let up = self.interval(lower, self.top());
        let row =
            Arc::new(mobius_row_i64(&up, lower).unwrap_or_else(|| mobius_row_big(&up, lower)));
        self.rows
            .lock()
            .expect("memo lock")
            .insert(lower, row.clone());
        row
    }

    /// `μ(D, E)` in `X_C`, from `μ(D,D) = 1` and
    /// `μ(D,E) = -Σ_{D ⊆ F ⊊ E} μ(D,F)`.
    pub fn mobius(&self, lower: u64, upper: u64) -> Result<BigInt> {
        self.check_pair(lower, upper)?;
        Ok(self.row(lower)[&upper].clone())
    }

    pub fn mobius_masks(&self, d: &SubComplexMask<'_>, e: &SubComplexMask<'_>) -> Result<BigInt> {
        if !std::ptr::eq(d.owner(), self.owner) || !std::ptr::eq(e.owner(), self.owner) {
            return Err(Error::OwnerMismatch);
        }
        self.mobius(d.bits(), e.bits())
    }

    /// `μ(D, C)` for every mask `D`, aligned with [`Self::masks`]. Uses the
    /// dual recursion `μ(D,C) = -Σ_{D ⊊ F ⊆ C} μ(F,C)`.
    pub fn mobius_to_top(&self) -> Arc<Vec<BigInt>> {
        let mut guard = self.to_top.lock().expect("memo lock");
        if let Some(v) = guard.as_ref() {
            return v.clone();
        }
        let top = self.top();
        let mut mu: Vec<BigInt> = vec![BigInt::zero(); self.len()];
        for (i, &d) in self.masks.iter().enumerate().rev() {
            if d == top {
                mu[i] = BigInt::one();
                continue;
            }
            let free = top & !d;
            let mut acc = BigInt::zero();
            let mut sub = free;
            while sub != 0 {
                if let Some(k) = self.index_of(d | sub) {
                    acc += &mu[k];
                }
                sub = (sub - 1) & free;
            }
            mu[i] = -acc;
        }
        let v = Arc::new(mu);
        *guard = Some(v.clone());
        v
    }

    /// Möbius values by summing `(-1)^length` over strict chains, counted by
    /// length. `μ(lower, g)` for every `g ⊇ lower`.
    pub fn chain_oracle_row(&self, lower: u64) -> Result<HashMap<u64, BigInt>> {
        if !self.contains(lower) {
            return Err(Error::NotComparable(lower, lower));
        }
        let up = self.interval(lower, self.top());
        let pos: HashMap<u64, usize> = up.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let depth = (self.top() & !lower).count_ones() as usize;
        let overflow = || Error::SizeLimitExceeded {
            what: "chain count",
            actual: usize::MAX,
            limit: i128::MAX as usize,
        };
        // chains[g]: number of chains lower = x0 < ... < xk = g of the current length k.
        let mut chains = vec![0i128; up.len()];
        chains[0] = 1;
        let mut signed = vec![0i128; up.len()];
        signed[0] = 1;
        for k in 1..=depth {
            let mut next = vec![0i128; up.len()];
            for (i, &g) in up.iter().enumerate() {
                let free = g & !lower;
                // proper subsets h of g within the interval
                let mut sub = free;
                loop {
                    sub = sub.wrapping_sub(1) & free;
                    let h = lower | sub;
                    if h != g {
                        if let Some(&p) = pos.get(&h) {
                            next[i] = next[i].checked_add(chains[p]).ok_or_else(overflow)?;
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                }
            }
            if next.iter().all(|&x| x == 0) {
                break;
            }
            for (s, &c) in signed.iter_mut().zip(&next) {
                *s = if k % 2 == 0 {
                    s.checked_add(c)
                } else {
                    s.checked_sub(c)
                }
                .ok_or_else(overflow)?;
            }
            chains = next;
        }
        Ok(up
            .iter()
            .zip(signed)
            .map(|(&g, s)| (g, BigInt::from(s)))
            .collect())
    }

    /// Chain-sum Möbius value for a single interval.
    pub fn mobius_chain_oracle(&self, lower: u64, upper: u64) -> Result<BigInt> {
        self.check_pair(lower, upper)?;
        Ok(self
            .chain_oracle_row(lower)?
            .remove(&upper)
            .expect("in interval"))
    }
}

/// `μ(lower, ·)` over the sorted up-set `up` with checked `i64` arithmetic.
fn mobius_row_i64(up: &[u64], lower: u64) -> Option<HashMap<u64, BigInt>> {
    let pos: HashMap<u64, usize> = up.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let mut mu = vec![0i64; up.len()];
    for (i, &g) in up.iter().enumerate() {
        if g == lower {
            mu[i] = 1;
            continue;
        }
        let free = g & !lower;
        let mut acc: i64 = 0;
        let mut sub = free;
        loop {
            sub = sub.wrapping_sub(1) & free;
            if let Some(&p) = pos.get(&(lower | sub)) {
                acc = acc.checked_add(mu[p])?;
            }
            if sub == 0 {
                break;
            }
        }
        mu[i] = acc.checked_neg()?;
    }
    Some(
        up.iter()
            .zip(mu)
            .map(|(&g, v)| (g, BigInt::from(v)))
            .collect(),
    )
}

fn mobius_row_big(up: &[u64], lower: u64) -> HashMap<u64, BigInt> {
    let pos: HashMap<u64, usize> = up.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let mut mu = vec![BigInt::zero(); up.len()];
    for (i, &g) in up.iter().enumerate() {
        if g == lower {
            mu[i] = BigInt::one();
            continue;
        }
        let free = g & !lower;
        let mut acc = BigInt::zero();
        let mut sub = free;
        loop {
            sub = sub.wrapping_sub(1) & free;
            if let Some(&p) = pos.get(&(lower | sub)) {
                acc += &mu[p];
            }
            if sub == 0 {
                break;
            }
        }
        mu[i] = -acc;
    }
    up.iter().zip(mu).map(|(&g, v)| (g, v)).collect()
}
