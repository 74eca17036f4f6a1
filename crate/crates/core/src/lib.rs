//! Exact characters of semisimple Lie algebra representations and the
//! recognition and classification of rectangular weight multisets.
//!
//! The crate is layered bottom-up:
//!
//! - [`exactlin`]: arbitrary-precision vectors, rational matrices, rank,
//!   exact solving and Hermite bases.
//! - [`liealg`]: simple and semisimple types, Cartan data, roots, Weyl orbits
//!   and the orthogonal realization of the classical families.
//! - [`charcalc`]: formal characters via Freudenthal's recursion, with the
//!   Weyl dimension formula kept as an independent check.
//! - [`rectkit`]: rectangularity certificates, lengths and box automorphisms.
//! - [`classify`]: the catalogue of indecomposable hypercubic
//!   representations, unique decomposition, and bounded brute-force
//!   verification.

pub mod charcalc;
pub mod classify;
pub mod exactlin;
pub mod liealg;
pub mod rectkit;

pub use charcalc::{CharError, FormalCharacter, IrrepName, RepSpec};
pub use exactlin::{IntVector, RatMatrix};
pub use liealg::{Family, LieError, SemisimpleAlgebra, SimpleType, Weight};
pub use rectkit::{RectCertificate, WeightMultiset};
