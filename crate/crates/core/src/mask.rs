use std::fmt;

use crate::complex::{bits, MultiComplex};
use crate::error::{Error, Result};

/// A spanning sub-complex `D ≼ C`, given by a down-closed set of
/// non-singleton faces of its owner. Singletons are always present.
#[derive(Clone, Copy)]
pub struct SubComplexMask<'a> {
    owner: &'a MultiComplex,
    bits: u64,
}

impl<'a> SubComplexMask<'a> {
    pub fn new(owner: &'a MultiComplex, bits: u64) -> Result<Self> {
        if bits & !owner.full_mask() != 0 || !owner.is_down_closed(bits) {
            return Err(Error::NotDownClosed(bits));
        }
        Ok(SubComplexMask { owner, bits })
    }

    pub fn empty(owner: &'a MultiComplex) -> Self {
        SubComplexMask { owner, bits: 0 }
    }

    pub fn full(owner: &'a MultiComplex) -> Self {
        SubComplexMask {
            owner,
            bits: owner.full_mask(),
        }
    }

    pub fn owner(&self) -> &'a MultiComplex {
        self.owner
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Face ids of the included non-singleton faces.
    pub fn face_ids(&self) -> impl Iterator<Item = usize> + '_ {
        bits(self.bits).map(move |j| j + self.owner.n())
    }

    pub fn intersect(&self, other: &SubComplexMask<'a>) -> Result<SubComplexMask<'a>> {
        self.same_owner(other)?;
        Ok(SubComplexMask {
            owner: self.owner,
            bits: self.bits & other.bits,
        })
    }

    pub fn is_subset_of(&self, other: &SubComplexMask<'a>) -> Result<bool> {
        self.same_owner(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    /// The spanning sub-complex as a standalone complex.
    pub fn to_complex(&self) -> MultiComplex {
        self.owner.spanning(self.bits)
    }

    fn same_owner(&self, other: &SubComplexMask<'_>) -> Result<()> {
        if std::ptr::eq(self.owner, other.owner) {
            Ok(())
        } else {
            Err(Error::OwnerMismatch)
        }
    }
}

impl PartialEq for SubComplexMask<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.owner, other.owner) && self.bits == other.bits
    }
}

impl Eq for SubComplexMask<'_> {}

impl fmt::Debug for SubComplexMask<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubComplexMask({:#x})", self.bits)
    }
}
