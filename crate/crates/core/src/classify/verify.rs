//! Bounded verification: brute-force enumeration against the catalogue
//! closure, and the multiplicity-free irreducible survey.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use super::catalogue::{catalogue_closure, catalogue_items, CatalogueItem};
use super::decompose::{decompose, reconstruct};
use super::enumerate::{dominant_weights_up_to, enumerate_rectangular, EnumeratedRep};
use super::{canonical_form, ClassifyError, MAX_HOWE_DIM, MAX_HOWE_RANK};
use crate::charcalc::{
    character_of, irreducible_character, is_multiplicity_free, name_irrep, weyl_dimension, RepSpec,
};
use crate::liealg::{Family, SemisimpleAlgebra, SimpleType, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub max_rank: usize,
    pub max_dim: u64,
    pub enumerated: Vec<EnumeratedRep>,
    pub catalogue_size: usize,
    /// In the catalogue closure but not found by enumeration.
    pub missing_from_enumeration: Vec<RepSpec>,
    /// Found by enumeration but absent from the catalogue closure.
    pub missing_from_catalogue: Vec<RepSpec>,
    /// Enumerated specs whose decomposition failed or did not round-trip.
    pub decompose_failures: Vec<(RepSpec, String)>,
    /// Enumerated specs breaking a structural consequence of the
    /// classification.
    pub corollary_violations: Vec<(RepSpec, String)>,
}

impl ClassificationReport {
    /// The two generators agree.
    pub fn equal(&self) -> bool {
        self.missing_from_enumeration.is_empty() && self.missing_from_catalogue.is_empty()
    }

    pub fn is_clean(&self) -> bool {
        self.equal() && self.decompose_failures.is_empty() && self.corollary_violations.is_empty()
    }
}

/// Checks of the structural corollaries on one enumerated spec; returns the
/// violated statements.
pub(crate) fn corollary_checks(e: &EnumeratedRep) -> Vec<String> {
    let mut out = Vec::new();
    let spec = &e.spec;
    let count = spec.num_constituents();
    if count.count_ones() != 1 {
        out.push(format!("{count} irreducible summands is not a power of 2"));
    }
    let factors = spec.algebra().factors();
    for t in factors {
        let ok = match t.family() {
            Family::A => matches!(t.rank(), 1 | 3),
            Family::B => t.rank() >= 2,
            Family::D => t.rank() >= 4,
            _ => false,
        };
        if !ok {
            out.push(format!("factor {t} cannot carry a rectangular representation"));
        }
    }
    let all_a1 = factors.iter().all(|t| t.family() == Family::A && t.rank() == 1);
    let twos = e.lengths.iter().filter(|&&l| l == 2).count();
    let threes = e.lengths.iter().filter(|&&l| l == 3).count();
    if twos <= 1 && threes <= 1 && !all_a1 {
        out.push("at most one 2 and one 3 among the lengths, but not only A1 factors".into());
    }
    if twos <= 1 && e.lengths.iter().all(|l| l % 2 == 0) {
        let mut want = e.lengths.clone();
        let mut got: Vec<u64> = match spec.summands() {
            [(hw, m)] if *m == BigUint::from(1u32) => hw
                .to_i64s()
                .unwrap_or_default()
                .iter()
                .map(|&x| x as u64 + 1)
                .collect(),
            _ => Vec::new(),
        };
        want.sort_unstable();
        got.sort_unstable();
        if !all_a1 || got != want {
            out.push("even lengths with at most one 2, but not an irreducible tensor of symmetric powers".into());
        }
    }
    out
}

/// Compares enumeration with the closure of the full catalogue.
pub fn verify_classification(max_rank: usize, max_dim: u64) -> Result<ClassificationReport, ClassifyError> {
    verify_classification_with(&catalogue_items(max_rank, max_dim), max_rank, max_dim)
}

/// Compares enumeration with the closure of the given items, so a tampered
/// catalogue can be checked for detection.
pub fn verify_classification_with(
    items: &[CatalogueItem],
    max_rank: usize,
    max_dim: u64,
) -> Result<ClassificationReport, ClassifyError> {
    let enumerated = enumerate_rectangular(max_rank, max_dim)?;
    let closure = catalogue_closure(items, max_rank, max_dim)?;
    let found: BTreeSet<RepSpec> = enumerated.iter().map(|e| e.spec.clone()).collect();
    let missing_from_enumeration = closure.difference(&found).cloned().collect();
    let missing_from_catalogue = found.difference(&closure).cloned().collect();

    let mut decompose_failures = Vec::new();
    let mut corollary_violations = Vec::new();
    for e in &enumerated {
        let outcome = decompose(&e.spec).and_then(|d| {
            let rebuilt = reconstruct(&d)?;
            Ok((d, rebuilt))
        });
        match outcome {
            Ok((d, rebuilt)) => {
                let same = character_of(&rebuilt).ok() == character_of(&e.spec).ok()
                    && canonical_form(&rebuilt) == e.spec;
                if !same {
                    decompose_failures.push((e.spec.clone(), format!("{d} does not reproduce the input")));
                }
            }
            Err(err) => decompose_failures.push((e.spec.clone(), err.to_string())),
        }
        for v in corollary_checks(e) {
            corollary_violations.push((e.spec.clone(), v));
        }
    }
    Ok(ClassificationReport {
        max_rank,
        max_dim,
        catalogue_size: closure.len(),
        enumerated,
        missing_from_enumeration,
        missing_from_catalogue,
        decompose_failures,
        corollary_violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoweEntry {
    pub highest_weight: Weight,
    pub name: String,
    pub dimension: BigUint,
    pub multiplicity_free: bool,
    pub expected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoweReport {
    pub simple_type: SimpleType,
    pub max_dim: u64,
    /// Every dominant weight within the bound, in weight order.
    pub entries: Vec<HoweEntry>,
    /// Multiplicity-free but not on the list.
    pub unexpected: Vec<Weight>,
    /// On the list but not multiplicity-free.
    pub missing: Vec<Weight>,
}

impl HoweReport {
    pub fn flagged(&self) -> Vec<&HoweEntry> {
        self.entries.iter().filter(|e| e.multiplicity_free).collect()
    }

    pub fn ok(&self) -> bool {
        self.unexpected.is_empty() && self.missing.is_empty()
    }
}

fn fundamental(n: usize, i: usize, k: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i - 1] = k;
    v
}

/// The known weight-multiplicity-free irreducibles of `t` with dimension at
/// most `max_dim`, trivial included, sorted.
pub fn howe_expected(t: SimpleType, max_dim: u64) -> Vec<Weight> {
    let n = t.rank();
    let alg = SemisimpleAlgebra::simple(t);
    let fits = |v: &Vec<i64>| {
        weyl_dimension(&alg, &Weight::from_i64s(v)).is_ok_and(|d| d <= BigUint::from(max_dim))
    };
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    out.insert(vec![0; n]);
    match t.family() {
        Family::A => {
            for i in 1..=n {
                out.insert(fundamental(n, i, 1));
            }
            for end in [1, n] {
                for k in 1.. {
                    let v = fundamental(n, end, k);
                    if !fits(&v) {
                        break;
                    }
                    out.insert(v);
                }
            }
        }
        Family::B => {
            out.insert(fundamental(n, 1, 1));
            out.insert(fundamental(n, n, 1));
        }
        Family::C => {
            out.insert(fundamental(n, 1, 1));
            if n == 3 {
                out.insert(fundamental(n, 3, 1));
            }
        }
        Family::D => {
            out.insert(fundamental(n, 1, 1));
            out.insert(fundamental(n, n - 1, 1));
            out.insert(fundamental(n, n, 1));
        }
        Family::G => {
            out.insert(fundamental(n, 1, 1));
        }
        Family::F => {}
        Family::E => match n {
            6 => {
                out.insert(fundamental(n, 1, 1));
                out.insert(fundamental(n, 6, 1));
            }
            7 => {
                out.insert(fundamental(n, 7, 1));
            }
            _ => {}
        },
    }
    out.into_iter().filter(|v| fits(v)).map(|v| Weight::from_i64s(&v)).collect()
}

/// Surveys every irreducible of `t` up to `max_dim` for weight
/// multiplicity-freeness and compares with the known list.
pub fn verify_howe(t: SimpleType, max_dim: u64) -> Result<HoweReport, ClassifyError> {
    if t.rank() > MAX_HOWE_RANK {
        return Err(ClassifyError::Bounds(format!(
            "rank must be at most {MAX_HOWE_RANK}, got {}",
            t.rank()
        )));
    }
    if max_dim == 0 || max_dim > MAX_HOWE_DIM {
        return Err(ClassifyError::Bounds(format!(
            "max dimension must be between 1 and {MAX_HOWE_DIM}, got {max_dim}"
        )));
    }
    let alg = SemisimpleAlgebra::simple(t);
    let expected: BTreeSet<Weight> = howe_expected(t, max_dim).into_iter().collect();
    let mut entries = Vec::new();
    for v in dominant_weights_up_to(t, max_dim) {
        let hw = Weight::from_i64s(&v);
        let c = irreducible_character(&alg, &hw)?;
        entries.push(HoweEntry {
            name: name_irrep(t, &hw).to_string(),
            dimension: c.mass(),
            multiplicity_free: is_multiplicity_free(&c),
            expected: expected.contains(&hw),
            highest_weight: hw,
        });
    }
    entries.sort_by(|a, b| a.highest_weight.cmp(&b.highest_weight));
    let unexpected = entries
        .iter()
        .filter(|e| e.multiplicity_free && !e.expected)
        .map(|e| e.highest_weight.clone())
        .collect();
    let missing = entries
        .iter()
        .filter(|e| e.expected && !e.multiplicity_free)
        .map(|e| e.highest_weight.clone())
        .collect();
    Ok(HoweReport {
        simple_type: t,
        max_dim,
        entries,
        unexpected,
        missing,
    })
}
