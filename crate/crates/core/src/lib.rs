//! Exact computation with Frobenius structures on algebras in a concrete
//! sovereign monoidal category.
//!
//! The backend category lives in [`finvect`]: finite-dimensional spaces
//! over arbitrary-precision rationals, with strict duals and pinned
//! (co)evaluation conventions. On top of it, [`structures`] defines
//! algebras, coalgebras, pairings and module actions together with exact
//! checkers for their axioms; [`frobenius`] converts among the three
//! presentations of a Frobenius structure and decides symmetry;
//! [`nakayama`] implements the convolution monoid of points, units and
//! inner automorphisms, Nakayama automorphisms, the pairing-relation
//! solver and separability idempotents. [`zoo`] generates the standard
//! example algebras, and [`sample`] provides the seeded randomness used by
//! the property suites.
//!
//! All arithmetic is exact; every identity is checked with zero
//! tolerance. Values are immutable after construction and all operations
//! are pure functions, so independent checks can run on separate threads
//! freely.

// Objects are tiny and shape lists are built by value everywhere; the
// `&[x.clone()]` idiom reads better than slice::from_ref. Index loops
// over structure-constant tables stay as index loops.
#![allow(clippy::cloned_ref_to_slice_refs, clippy::needless_range_loop)]

pub mod error;
pub mod exact;
pub mod finvect;
pub mod frobenius;
pub mod nakayama;
pub mod sample;
pub mod structures;
pub mod zoo;

pub use error::Error;
pub use exact::{Matrix, Scalar};
