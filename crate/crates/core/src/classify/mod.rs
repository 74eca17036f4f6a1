//! The catalogue of indecomposable hypercubic representations, unique
//! decomposition of faithful rectangular representations, and bounded
//! brute-force verification.
//!
//! Factor indices are 0-based throughout.

mod catalogue;
mod census;
mod decompose;
mod enumerate;
mod verify;

pub use catalogue::{
    catalogue_closure, catalogue_items, catalogue_lengths, catalogue_spec, CatalogueItem,
};
pub use census::{
    long_roots_3space_census, roots_in_plane_census, PlaneCensus, SpaceCensus, SubspaceRecord,
};
pub use decompose::{decompose, reconstruct, DecomposeError, Decomposition, DecompositionPart};
pub use enumerate::{
    algebras_up_to, enumerate_for_algebra, enumerate_rectangular, estimate_enumeration,
    multiplicity_free_irreps, EnumeratedRep, EnumerationEstimate,
};
pub use verify::{
    howe_expected, verify_classification, verify_classification_with, verify_howe,
    ClassificationReport, HoweEntry, HoweReport,
};

use thiserror::Error;

use crate::charcalc::{CharError, RepSpec};
use crate::liealg::LieError;

/// Desk-scale caps for enumeration.
pub const MAX_ENUM_RANK: usize = 4;
pub const MAX_ENUM_DIM: u64 = 256;
/// Caps for the irreducible multiplicity-free survey.
pub const MAX_HOWE_RANK: usize = 4;
pub const MAX_HOWE_DIM: u64 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("bounds exceeded: {0}")]
    Bounds(String),
    #[error("invalid catalogue item: {0}")]
    InvalidItem(String),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// The representative of `spec` under permutations of identical factors:
/// factors sorted by label, ties broken by the smallest resulting spec.
pub fn canonical_form(spec: &RepSpec) -> RepSpec {
    let algebra = spec.algebra();
    let order = algebra.sorting_permutation();
    let factors = algebra.factors();
    // Runs of equal labels in sorted order can be permuted freely.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match groups.last_mut() {
            Some(g) if factors[g[0]] == factors[i] => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
    for g in &groups {
        let arrangements = permutations(g);
        perms = perms
            .iter()
            .flat_map(|p| {
                arrangements.iter().map(move |a| {
                    let mut q = p.clone();
                    q.extend_from_slice(a);
                    q
                })
            })
            .collect();
    }
    perms
        .iter()
        .map(|p| spec.permute_factors(p).expect("valid permutation"))
        .min()
        .expect("at least one arrangement")
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}
