use std::fmt;

use thiserror::Error;

use super::catalogue::{catalogue_spec, CatalogueItem};
use crate::charcalc::{
    character_of, is_faithful, restrict_to_factors, CharError, FormalCharacter, RepSpec,
};
use crate::liealg::{Family, SimpleType};
use crate::rectkit::{diagnose_rectangular, RectFailure, WeightMultiset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("representation is not faithful")]
    NotFaithful,
    #[error("representation is not rectangular: {0}")]
    NotRectangular(RectFailure),
    #[error("no catalogue decomposition reproduces the character: {0}")]
    CatalogueMismatch(String),
    #[error(transparent)]
    Char(#[from] CharError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecompositionPart {
    /// 0-based factor indices of the input algebra, ascending.
    pub factors: Vec<usize>,
    pub item: CatalogueItem,
}

/// A partition of the simple factors with one catalogue item per part,
/// sorted by smallest factor index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub parts: Vec<DecompositionPart>,
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊗ ")?;
            }
            write!(f, "{}{:?}", p.item, p.factors)?;
        }
        Ok(())
    }
}

fn catalogue_character(item: CatalogueItem) -> Result<FormalCharacter, DecomposeError> {
    let (_, spec) = catalogue_spec(item)
        .map_err(|e| DecomposeError::CatalogueMismatch(e.to_string()))?;
    Ok(character_of(&spec)?)
}

fn single_factor_candidates(t: SimpleType, restricted: &FormalCharacter) -> Vec<CatalogueItem> {
    match (t.family(), t.rank()) {
        (Family::A, 1) => {
            let top = restricted
                .entries()
                .keys()
                .filter_map(|w| u64::try_from(w.coords()[0].clone()).ok())
                .max()
                .unwrap_or(0);
            let mut out = Vec::new();
            if top >= 1 {
                out.push(CatalogueItem::A1Sym(top));
                out.push(CatalogueItem::A1PairSym(top, top - 1));
            }
            out
        }
        (Family::B, 2) => vec![CatalogueItem::B2StdSpin, CatalogueItem::BmSpin(2)],
        (Family::B, m) => vec![CatalogueItem::BmSpin(m)],
        (Family::A, 3) => vec![CatalogueItem::A3StdDual],
        (Family::D, 4) => vec![
            CatalogueItem::D4Spin,
            CatalogueItem::D4StdSpinPlus,
            CatalogueItem::D4StdSpinMinus,
        ],
        (Family::D, m) => vec![CatalogueItem::DmSpin(m)],
        _ => Vec::new(),
    }
}

/// The unique factorization of a faithful rectangular representation into
/// catalogue items.
///
/// The restriction of the character to a part is a constant multiple of
/// that part's character, so each factor is matched after stripping the
/// multiple. A `D2Spin` part restricts to `Std` plus two trivial weights on
/// each of its factors, which matches no single-factor item; the `A1`
/// factors left over after single matching are paired jointly against
/// `D2Spin`. The tensor product of the parts is checked against the input
/// before returning.
pub fn decompose(spec: &RepSpec) -> Result<Decomposition, DecomposeError> {
    if !is_faithful(spec) {
        return Err(DecomposeError::NotFaithful);
    }
    let character = character_of(spec)?;
    diagnose_rectangular(&WeightMultiset::from_character(&character))
        .map_err(DecomposeError::NotRectangular)?;

    let algebra = spec.algebra();
    let k = algebra.num_factors();
    let mut restricted = Vec::with_capacity(k);
    for i in 0..k {
        restricted.push(restrict_to_factors(&character, &[i])?.strip_multiple().1);
    }

    let a1 = SimpleType::new(Family::A, 1).expect("A1 is admissible");
    let d2 = catalogue_character(CatalogueItem::D2Spin)?;
    let mut parts: Vec<DecompositionPart> = Vec::new();
    let mut unmatched = Vec::new();
    for i in 0..k {
        let t = algebra.factors()[i];
        let mut found = None;
        for item in single_factor_candidates(t, &restricted[i]) {
            if catalogue_character(item)? == restricted[i] {
                found = Some(item);
                break;
            }
        }
        match found {
            Some(item) => parts.push(DecompositionPart {
                factors: vec![i],
                item,
            }),
            None => unmatched.push(i),
        }
    }

    // What is left must pair up into `D2Spin` parts over two `A1` factors.
    while let Some(i) = unmatched.first().copied() {
        unmatched.remove(0);
        let t = algebra.factors()[i];
        let mut partner = None;
        if t == a1 {
            for (pos, &j) in unmatched.iter().enumerate() {
                if algebra.factors()[j] != a1 {
                    continue;
                }
                if restrict_to_factors(&character, &[i, j])?.strip_multiple().1 == d2 {
                    partner = Some(pos);
                    break;
                }
            }
        }
        let Some(pos) = partner else {
            return Err(DecomposeError::CatalogueMismatch(format!(
                "factor {i} ({t}) matches no catalogue item"
            )));
        };
        let j = unmatched.remove(pos);
        parts.push(DecompositionPart {
            factors: vec![i, j],
            item: CatalogueItem::D2Spin,
        });
    }
    parts.sort_by_key(|p| p.factors[0]);
    let decomposition = Decomposition { parts };

    let rebuilt = reconstruct(&decomposition)?;
    if character_of(&rebuilt)? != character {
        return Err(DecomposeError::CatalogueMismatch(format!(
            "tensor product of {decomposition} differs from the input"
        )));
    }
    Ok(decomposition)
}

/// The external tensor product of the parts, with factors put back in the
/// original order.
pub fn reconstruct(d: &Decomposition) -> Result<RepSpec, DecomposeError> {
    let mut combined: Option<RepSpec> = None;
    let mut order: Vec<usize> = Vec::new();
    for part in &d.parts {
        let (_, spec) = catalogue_spec(part.item)
            .map_err(|e| DecomposeError::CatalogueMismatch(e.to_string()))?;
        combined = Some(match combined {
            Some(c) => c.external_tensor(&spec),
            None => spec,
        });
        order.extend_from_slice(&part.factors);
    }
    let combined =
        combined.ok_or_else(|| DecomposeError::CatalogueMismatch("no parts".into()))?;
    // Factor `order[p]` of the original sits at position `p`; invert.
    let mut inverse = vec![0; order.len()];
    for (p, &orig) in order.iter().enumerate() {
        if orig >= inverse.len() {
            return Err(DecomposeError::CatalogueMismatch("parts do not partition the factors".into()));
        }
        inverse[orig] = p;
    }
    Ok(combined.permute_factors(&inverse)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{SemisimpleAlgebra, Weight};

    fn st(f: Family, r: usize) -> SimpleType {
        SimpleType::new(f, r).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::from_i64s(c)
    }

    #[test]
    fn examples() {
        let alg = SemisimpleAlgebra::new(vec![st(Family::A, 1), st(Family::B, 3)]).unwrap();
        let spec = RepSpec::from_weights(alg, [w(&[2, 0, 0, 1])]).unwrap();
        let d = decompose(&spec).unwrap();
        assert_eq!(
            d.parts,
            vec![
                DecompositionPart { factors: vec![0], item: CatalogueItem::A1Sym(2) },
                DecompositionPart { factors: vec![1], item: CatalogueItem::BmSpin(3) },
            ]
        );

        let (_, b2) = catalogue_spec(CatalogueItem::B2StdSpin).unwrap();
        assert_eq!(decompose(&b2).unwrap().parts[0].item, CatalogueItem::B2StdSpin);

        let (_, d2) = catalogue_spec(CatalogueItem::D2Spin).unwrap();
        let parts = decompose(&d2).unwrap().parts;
        assert_eq!(parts, vec![DecompositionPart { factors: vec![0, 1], item: CatalogueItem::D2Spin }]);
    }

    #[test]
    fn rejections() {
        let a2 = SemisimpleAlgebra::simple(st(Family::A, 2));
        let std = RepSpec::from_weights(a2, [w(&[1, 0])]).unwrap();
        assert_eq!(
            decompose(&std),
            Err(DecomposeError::NotRectangular(RectFailure::Asymmetry))
        );
        let a1a1 = SemisimpleAlgebra::new(vec![st(Family::A, 1), st(Family::A, 1)]).unwrap();
        let half = RepSpec::from_weights(a1a1, [w(&[1, 0])]).unwrap();
        assert_eq!(decompose(&half), Err(DecomposeError::NotFaithful));
        let a1 = SemisimpleAlgebra::simple(st(Family::A, 1));
        let doubled = RepSpec::from_weights(a1, [w(&[1]), w(&[1])]).unwrap();
        assert_eq!(
            decompose(&doubled),
            Err(DecomposeError::NotRectangular(RectFailure::Multiplicity))
        );
    }

    #[test]
    fn d2_pair_among_other_factors() {
        // A1 x B2 x A1 with D2Spin on factors 0 and 2, tensored with B2 Spin.
        let alg = SemisimpleAlgebra::new(vec![st(Family::A, 1), st(Family::B, 2), st(Family::A, 1)]).unwrap();
        let spec = RepSpec::from_weights(alg, [w(&[1, 0, 1, 0]), w(&[0, 0, 1, 1])]).unwrap();
        let d = decompose(&spec).unwrap();
        assert_eq!(
            d.parts,
            vec![
                DecompositionPart { factors: vec![0, 2], item: CatalogueItem::D2Spin },
                DecompositionPart { factors: vec![1], item: CatalogueItem::BmSpin(2) },
            ]
        );
        assert_eq!(reconstruct(&d).unwrap(), spec);
    }
}
