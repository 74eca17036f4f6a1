use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use super::{canonical_form, ClassifyError};
use crate::charcalc::{resolve_irrep, IrrepName, RepSpec};
use crate::liealg::{Family, SemisimpleAlgebra, SimpleType, Weight};

/// The faithful indecomposable hypercubic representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogueItem {
    /// `(A1, Sym^r)`, `r ≥ 1`.
    A1Sym(u64),
    /// `(A1, Sym^hi ⊕ Sym^lo)` with `hi = lo + 1`.
    A1PairSym(u64, u64),
    /// `(A1 × A1, Std⊗1 ⊕ 1⊗Std)`.
    D2Spin,
    /// `(B2, Std ⊕ Spin)`.
    B2StdSpin,
    /// `(B_m, Spin)`, `m ≥ 2`.
    BmSpin(usize),
    /// `(A3, Std ⊕ Std^∨)`.
    A3StdDual,
    /// `(D4, Spin+ ⊕ Spin-)`.
    D4Spin,
    /// `(D4, Std ⊕ Spin+)`.
    D4StdSpinPlus,
    /// `(D4, Std ⊕ Spin-)`.
    D4StdSpinMinus,
    /// `(D_m, Spin+ ⊕ Spin-)`, `m ≥ 5`.
    DmSpin(usize),
}

impl CatalogueItem {
    /// A pair item from two symmetric powers in either order.
    pub fn pair(r1: u64, r2: u64) -> Result<Self, ClassifyError> {
        let item = CatalogueItem::A1PairSym(r1.max(r2), r1.min(r2));
        item.validate()?;
        Ok(item)
    }

    pub fn validate(self) -> Result<(), ClassifyError> {
        let ok = match self {
            CatalogueItem::A1Sym(r) => r >= 1,
            CatalogueItem::A1PairSym(hi, lo) => lo.checked_add(1) == Some(hi),
            CatalogueItem::BmSpin(m) => m >= 2,
            CatalogueItem::DmSpin(m) => m >= 5,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(ClassifyError::InvalidItem(self.to_string()))
        }
    }

    pub fn rank(self) -> usize {
        match self {
            CatalogueItem::A1Sym(_) | CatalogueItem::A1PairSym(..) => 1,
            CatalogueItem::D2Spin | CatalogueItem::B2StdSpin => 2,
            CatalogueItem::A3StdDual => 3,
            CatalogueItem::D4Spin | CatalogueItem::D4StdSpinPlus | CatalogueItem::D4StdSpinMinus => 4,
            CatalogueItem::BmSpin(m) | CatalogueItem::DmSpin(m) => m,
        }
    }

    /// Dimension in closed form.
    pub fn dimension(self) -> BigUint {
        match self {
            CatalogueItem::A1Sym(r) => BigUint::from(r) + 1u32,
            CatalogueItem::A1PairSym(hi, lo) => BigUint::from(hi) + lo + 2u32,
            CatalogueItem::D2Spin => BigUint::from(4u32),
            CatalogueItem::B2StdSpin => BigUint::from(9u32),
            CatalogueItem::A3StdDual => BigUint::from(8u32),
            CatalogueItem::D4Spin | CatalogueItem::D4StdSpinPlus | CatalogueItem::D4StdSpinMinus => {
                BigUint::from(16u32)
            }
            CatalogueItem::BmSpin(m) | CatalogueItem::DmSpin(m) => BigUint::from(1u32) << m,
        }
    }
}

impl fmt::Display for CatalogueItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogueItem::A1Sym(r) => write!(f, "A1Sym({r})"),
            CatalogueItem::A1PairSym(hi, lo) => write!(f, "A1PairSym({hi},{lo})"),
            CatalogueItem::D2Spin => write!(f, "D2Spin"),
            CatalogueItem::B2StdSpin => write!(f, "B2StdSpin"),
            CatalogueItem::BmSpin(m) => write!(f, "BmSpin({m})"),
            CatalogueItem::A3StdDual => write!(f, "A3StdDual"),
            CatalogueItem::D4Spin => write!(f, "D4Spin"),
            CatalogueItem::D4StdSpinPlus => write!(f, "D4StdSpinPlus"),
            CatalogueItem::D4StdSpinMinus => write!(f, "D4StdSpinMinus"),
            CatalogueItem::DmSpin(m) => write!(f, "DmSpin({m})"),
        }
    }
}

fn simple(family: Family, rank: usize) -> SimpleType {
    SimpleType::new(family, rank).expect("catalogue types are admissible")
}

/// The algebra and representation named by `item`, with highest weights
/// resolved through the alias table.
pub fn catalogue_spec(item: CatalogueItem) -> Result<(SemisimpleAlgebra, RepSpec), ClassifyError> {
    item.validate()?;
    use IrrepName::*;
    let (algebra, names): (SemisimpleAlgebra, Vec<Vec<IrrepName>>) = match item {
        CatalogueItem::A1Sym(r) => (simple(Family::A, 1).into(), vec![vec![Sym(r)]]),
        CatalogueItem::A1PairSym(hi, lo) => {
            (simple(Family::A, 1).into(), vec![vec![Sym(hi)], vec![Sym(lo)]])
        }
        CatalogueItem::D2Spin => {
            let a1 = simple(Family::A, 1);
            (
                SemisimpleAlgebra::new(vec![a1, a1])?,
                vec![vec![Std, Triv], vec![Triv, Std]],
            )
        }
        CatalogueItem::B2StdSpin => (simple(Family::B, 2).into(), vec![vec![Std], vec![Spin]]),
        CatalogueItem::BmSpin(m) => (simple(Family::B, m).into(), vec![vec![Spin]]),
        CatalogueItem::A3StdDual => (
            simple(Family::A, 3).into(),
            vec![vec![Std], vec![Dual(Box::new(Std))]],
        ),
        CatalogueItem::D4Spin => (simple(Family::D, 4).into(), vec![vec![Spin]]),
        CatalogueItem::D4StdSpinPlus => {
            (simple(Family::D, 4).into(), vec![vec![Std], vec![SpinPlus]])
        }
        CatalogueItem::D4StdSpinMinus => {
            (simple(Family::D, 4).into(), vec![vec![Std], vec![SpinMinus]])
        }
        CatalogueItem::DmSpin(m) => (simple(Family::D, m).into(), vec![vec![Spin]]),
    };
    let mut weights = Vec::new();
    for term in &names {
        // A term is one irreducible per factor; a name resolving to several
        // constituents distributes over the term.
        let mut partial = vec![Weight::zero(0)];
        for (t, name) in algebra.factors().iter().zip(term) {
            let options = resolve_irrep(*t, name)?;
            partial = partial
                .iter()
                .flat_map(|p| options.iter().map(move |o| p.concat(o)))
                .collect();
        }
        weights.extend(partial);
    }
    let spec = RepSpec::from_weights(algebra.clone(), weights)?;
    Ok((algebra, spec))
}

/// The lengths multiset of an item, ascending, from the closed-form table.
pub fn catalogue_lengths(item: CatalogueItem) -> Vec<u64> {
    match item {
        CatalogueItem::A1Sym(r) => vec![r + 1],
        CatalogueItem::A1PairSym(hi, lo) => vec![hi + lo + 2],
        CatalogueItem::D2Spin => vec![2, 2],
        CatalogueItem::B2StdSpin => vec![3, 3],
        CatalogueItem::A3StdDual => vec![2, 2, 2],
        CatalogueItem::D4Spin | CatalogueItem::D4StdSpinPlus | CatalogueItem::D4StdSpinMinus => {
            vec![2; 4]
        }
        CatalogueItem::BmSpin(m) | CatalogueItem::DmSpin(m) => vec![2; m],
    }
}

/// Every item with rank at most `max_rank` and dimension at most `max_dim`,
/// in the derived order.
pub fn catalogue_items(max_rank: usize, max_dim: u64) -> Vec<CatalogueItem> {
    let mut out = Vec::new();
    let fits = |item: CatalogueItem| item.rank() <= max_rank && item.dimension() <= BigUint::from(max_dim);
    if max_rank >= 1 {
        for r in 1..max_dim {
            out.push(CatalogueItem::A1Sym(r));
        }
        for lo in 0.. {
            let item = CatalogueItem::A1PairSym(lo + 1, lo);
            if !fits(item) {
                break;
            }
            out.push(item);
        }
    }
    out.extend([
        CatalogueItem::D2Spin,
        CatalogueItem::B2StdSpin,
        CatalogueItem::A3StdDual,
        CatalogueItem::D4Spin,
        CatalogueItem::D4StdSpinPlus,
        CatalogueItem::D4StdSpinMinus,
    ]);
    for m in 2..=max_rank {
        out.push(CatalogueItem::BmSpin(m));
        if m >= 5 {
            out.push(CatalogueItem::DmSpin(m));
        }
    }
    out.retain(|&i| fits(i));
    out.sort();
    out
}

/// Canonical forms of all external tensor products of the given items whose
/// total rank and dimension stay within the bounds.
pub fn catalogue_closure(
    items: &[CatalogueItem],
    max_rank: usize,
    max_dim: u64,
) -> Result<BTreeSet<RepSpec>, ClassifyError> {
    let mut items: Vec<CatalogueItem> = items.to_vec();
    items.sort();
    items.dedup();
    let specs: Vec<(CatalogueItem, RepSpec)> = items
        .iter()
        .map(|&i| catalogue_spec(i).map(|(_, s)| (i, s)))
        .collect::<Result<_, _>>()?;
    let mut out = BTreeSet::new();
    // Multisets of items as non-decreasing index sequences.
    let mut stack: Vec<(usize, usize, BigUint, Option<RepSpec>)> =
        vec![(0, 0, BigUint::from(1u32), None)];
    while let Some((start, rank, dim, spec)) = stack.pop() {
        if let Some(s) = &spec {
            out.insert(canonical_form(s));
        }
        for (k, (item, s)) in specs.iter().enumerate().skip(start) {
            let r = rank + item.rank();
            let d = &dim * item.dimension();
            if r > max_rank || d > BigUint::from(max_dim) {
                continue;
            }
            let next = match &spec {
                Some(prev) => prev.external_tensor(s),
                None => s.clone(),
            };
            stack.push((k, r, d, Some(next)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charcalc::character_of;

    #[test]
    fn spec_examples() {
        let (alg, spec) = catalogue_spec(CatalogueItem::BmSpin(3)).unwrap();
        assert_eq!(alg.to_string(), "B3");
        assert_eq!(spec.dimension().unwrap(), BigUint::from(8u32));
        let (_, spec) = catalogue_spec(CatalogueItem::A1PairSym(4, 3)).unwrap();
        assert_eq!(spec.dimension().unwrap(), BigUint::from(9u32));
        let (_, spec) = catalogue_spec(CatalogueItem::A3StdDual).unwrap();
        assert_eq!(spec.dimension().unwrap(), BigUint::from(8u32));
        let (_, spec) = catalogue_spec(CatalogueItem::DmSpin(5)).unwrap();
        assert_eq!(spec.summands().len(), 2);
        assert!(catalogue_spec(CatalogueItem::A1PairSym(4, 1)).is_err());
        assert!(catalogue_spec(CatalogueItem::A1Sym(0)).is_err());
        assert!(catalogue_spec(CatalogueItem::DmSpin(4)).is_err());
        assert!(catalogue_spec(CatalogueItem::BmSpin(1)).is_err());
        assert_eq!(CatalogueItem::pair(3, 4).unwrap(), CatalogueItem::A1PairSym(4, 3));
    }

    #[test]
    fn closed_form_dimensions_match_specs() {
        for item in catalogue_items(6, 128) {
            let (_, spec) = catalogue_spec(item).unwrap();
            assert_eq!(spec.dimension().unwrap(), item.dimension(), "{item}");
            assert_eq!(character_of(&spec).unwrap().mass(), item.dimension(), "{item}");
        }
    }

    #[test]
    fn items_within_small_bounds() {
        let items = catalogue_items(1, 9);
        assert_eq!(items.len(), 8 + 4);
        let items = catalogue_items(2, 64);
        assert!(items.contains(&CatalogueItem::B2StdSpin));
        assert!(items.contains(&CatalogueItem::BmSpin(2)));
        assert!(!items.contains(&CatalogueItem::A3StdDual));
    }

    #[test]
    fn closure_counts_rank_one() {
        let closure = catalogue_closure(&catalogue_items(1, 9), 1, 9).unwrap();
        assert_eq!(closure.len(), 12);
        let closure = catalogue_closure(&catalogue_items(2, 4), 2, 4).unwrap();
        // A1: Sym1..3, Pair(1,0); A1xA1: Sym1⊗Sym1, D2Spin; B2: Spin
        assert_eq!(closure.len(), 7);
    }
}
