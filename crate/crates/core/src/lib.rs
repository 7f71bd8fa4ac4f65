//! Multi-complexes and their Hopf algebra.
//!
//! A multi-complex is a family of multisets over a finite base set with a
//! partial order compatible with containment; graphs, multigraphs,
//! hypergraphs, simplicial and Δ-complexes all embed. Isomorphism classes
//! span a commutative, cocommutative Hopf algebra with disjoint union as
//! product and restriction to complementary vertex sets as coproduct.
//!
//! - [`complex`]: the objects and their structural operations.
//! - [`iso`]: canonical keys, automorphisms, embeddings, multiplicities.
//! - [`poset`]: the spanning sub-complex lattice and its Möbius function.
//! - [`hopf`]: elements, coproduct, primitives `P_C`, antipodes.
//! - [`encode`]: graphs, multigraphs, hypergraphs and complexes as inputs.
//! - [`recon`]: vertex and edge decks and exhaustive reconstruction scans.
//! - [`format`]: the `.mcx` text format and its JSON twin.

pub mod complex;
pub mod encode;
pub mod error;
pub mod format;
pub mod hopf;
pub mod iso;
pub mod limits;
pub mod mask;
pub mod poset;
pub mod recon;

pub use complex::{Face, MultiComplex, Multiset};
pub use error::{Error, Result};
pub use hopf::{Element, Scalar, TensorElement};
pub use iso::CanonicalKey;
pub use mask::SubComplexMask;
pub use poset::SpanningLattice;
