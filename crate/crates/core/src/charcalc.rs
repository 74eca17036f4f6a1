//! Formal characters: irreducibles by Freudenthal's recursion, sums, external
//! tensors, duals and factor restrictions.
//!
//! Characters are kept in fundamental-weight coordinates. The Weyl dimension
//! formula is implemented separately and only serves as a cross-check on the
//! recursion.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::liealg::{Family, LieError, RootSystem, SemisimpleAlgebra, SimpleType, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("highest weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("summand multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("'{alias}' is not defined for {simple_type}")]
    AliasUndefined { alias: String, simple_type: SimpleType },
    #[error("highest weight for {simple_type} needs {expected} coordinates, got {found}")]
    HwArity {
        simple_type: SimpleType,
        expected: usize,
        found: usize,
    },
    #[error("invalid factor selection: {0}")]
    FactorSelection(String),
    #[error("characters live over different algebras ({0} and {1})")]
    AlgebraMismatch(SemisimpleAlgebra, SemisimpleAlgebra),
}

/// A finite multiset of weights over a fixed algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormalCharacter {
    algebra: SemisimpleAlgebra,
    entries: BTreeMap<Weight, BigUint>,
}

impl FormalCharacter {
    pub fn empty(algebra: SemisimpleAlgebra) -> Self {
        FormalCharacter {
            algebra,
            entries: BTreeMap::new(),
        }
    }

    /// The one-dimensional trivial character.
    pub fn trivial(algebra: SemisimpleAlgebra) -> Self {
        let zero = Weight::zero(algebra.rank());
        FormalCharacter {
            algebra,
            entries: BTreeMap::from([(zero, BigUint::one())]),
        }
    }

    /// Builds a character from explicit entries; zero multiplicities are
    /// dropped.
    pub fn from_entries(
        algebra: SemisimpleAlgebra,
        entries: impl IntoIterator<Item = (Weight, BigUint)>,
    ) -> Result<Self, CharError> {
        let mut out = FormalCharacter::empty(algebra);
        for (w, m) in entries {
            out.algebra.check_weight(&w)?;
            out.insert(w, m);
        }
        Ok(out)
    }

    fn insert(&mut self, w: Weight, m: BigUint) {
        if !m.is_zero() {
            *self.entries.entry(w).or_default() += m;
        }
    }

    pub fn algebra(&self) -> &SemisimpleAlgebra {
        &self.algebra
    }

    pub fn entries(&self) -> &BTreeMap<Weight, BigUint> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigUint)> {
        self.entries.iter()
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total multiplicity, i.e. the dimension of the representation.
    pub fn mass(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> BigUint {
        self.entries.get(w).cloned().unwrap_or_default()
    }

    /// The sum of two characters over the same algebra.
    pub fn sum(&self, other: &FormalCharacter) -> Result<FormalCharacter, CharError> {
        if self.algebra != other.algebra {
            return Err(CharError::AlgebraMismatch(
                self.algebra.clone(),
                other.algebra.clone(),
            ));
        }
        let mut out = self.clone();
        for (w, m) in &other.entries {
            out.insert(w.clone(), m.clone());
        }
        Ok(out)
    }

    pub fn scaled(&self, k: &BigUint) -> FormalCharacter {
        let mut out = FormalCharacter::empty(self.algebra.clone());
        for (w, m) in &self.entries {
            out.insert(w.clone(), m * k);
        }
        out
    }

    /// Splits off the gcd of the multiplicities: `self = k * reduced`.
    pub fn strip_multiple(&self) -> (BigUint, FormalCharacter) {
        let g = self
            .entries
            .values()
            .fold(BigUint::zero(), |acc, m| acc.gcd(m));
        if g.is_zero() || g.is_one() {
            return (g.max(BigUint::one()), self.clone());
        }
        let entries = self
            .entries
            .iter()
            .map(|(w, m)| (w.clone(), m / &g))
            .collect();
        (
            g,
            FormalCharacter {
                algebra: self.algebra.clone(),
                entries,
            },
        )
    }

    /// Reorders factor blocks: factor `i` of the result is factor `perm[i]`
    /// of `self`.
    pub fn permute_factors(&self, perm: &[usize]) -> Result<FormalCharacter, CharError> {
        check_permutation(perm, self.algebra.num_factors())?;
        let algebra = self.algebra.subalgebra(perm)?;
        let blocks: Vec<_> = perm.iter().map(|&i| self.algebra.block(i)).collect();
        let mut out = FormalCharacter::empty(algebra);
        for (w, m) in &self.entries {
            out.insert(permute_weight(w, &blocks), m.clone());
        }
        Ok(out)
    }

    /// True when multiplicity is constant on every Weyl orbit.
    pub fn is_weyl_invariant(&self) -> bool {
        self.entries.iter().all(|(w, m)| {
            self.algebra
                .dominant_conjugate(w)
                .is_ok_and(|d| self.entries.get(&d) == Some(m))
        })
    }
}

fn permute_weight(w: &Weight, blocks: &[std::ops::Range<usize>]) -> Weight {
    let coords = blocks
        .iter()
        .flat_map(|b| w.coords().coords()[b.clone()].iter().cloned())
        .collect();
    Weight::new(crate::exactlin::IntVector::new(coords))
}

fn check_permutation(perm: &[usize], n: usize) -> Result<(), CharError> {
    let mut seen = vec![false; n];
    for &i in perm {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(CharError::FactorSelection(format!(
                "{perm:?} is not a permutation of {n} factors"
            )));
        }
    }
    if perm.len() != n {
        return Err(CharError::FactorSelection(format!(
            "{perm:?} is not a permutation of {n} factors"
        )));
    }
    Ok(())
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {{", self.algebra)?;
        for (i, (w, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if m.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{m}·{w}")?;
            }
        }
        write!(f, "}}")
    }
}

/// A representation as a formal sum of irreducibles, each given by its
/// highest weight. Summands are kept sorted and merged.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepSpec {
    algebra: SemisimpleAlgebra,
    summands: Vec<(Weight, BigUint)>,
}

impl RepSpec {
    pub fn new(
        algebra: SemisimpleAlgebra,
        summands: impl IntoIterator<Item = (Weight, BigUint)>,
    ) -> Result<Self, CharError> {
        let mut merged: BTreeMap<Weight, BigUint> = BTreeMap::new();
        for (w, m) in summands {
            algebra.check_weight(&w)?;
            if !w.is_dominant() {
                return Err(CharError::NotDominant(w));
            }
            if m.is_zero() {
                return Err(CharError::ZeroMultiplicity);
            }
            *merged.entry(w).or_default() += m;
        }
        Ok(RepSpec {
            algebra,
            summands: merged.into_iter().collect(),
        })
    }

    /// Sum of the given irreducibles, each with multiplicity one (repeats
    /// accumulate).
    pub fn from_weights(
        algebra: SemisimpleAlgebra,
        weights: impl IntoIterator<Item = Weight>,
    ) -> Result<Self, CharError> {
        RepSpec::new(algebra, weights.into_iter().map(|w| (w, BigUint::one())))
    }

    pub fn irreducible(algebra: SemisimpleAlgebra, hw: Weight) -> Result<Self, CharError> {
        RepSpec::from_weights(algebra, [hw])
    }

    pub fn algebra(&self) -> &SemisimpleAlgebra {
        &self.algebra
    }

    pub fn summands(&self) -> &[(Weight, BigUint)] {
        &self.summands
    }

    pub fn highest_weights(&self) -> impl Iterator<Item = &Weight> {
        self.summands.iter().map(|(w, _)| w)
    }

    /// Number of irreducible constituents counted with multiplicity.
    pub fn num_constituents(&self) -> BigUint {
        self.summands.iter().map(|(_, m)| m).sum()
    }

    pub fn dimension(&self) -> Result<BigUint, CharError> {
        let mut total = BigUint::zero();
        for (w, m) in &self.summands {
            total += weyl_dimension(&self.algebra, w)? * m;
        }
        Ok(total)
    }

    /// The external tensor product over `self.algebra × other.algebra`.
    pub fn external_tensor(&self, other: &RepSpec) -> RepSpec {
        let algebra = self.algebra.product(&other.algebra);
        let mut merged: BTreeMap<Weight, BigUint> = BTreeMap::new();
        for (a, m) in &self.summands {
            for (b, n) in &other.summands {
                *merged.entry(a.concat(b)).or_default() += m * n;
            }
        }
        RepSpec {
            algebra,
            summands: merged.into_iter().collect(),
        }
    }

    /// See [`FormalCharacter::permute_factors`].
    pub fn permute_factors(&self, perm: &[usize]) -> Result<RepSpec, CharError> {
        check_permutation(perm, self.algebra.num_factors())?;
        let algebra = self.algebra.subalgebra(perm)?;
        let blocks: Vec<_> = perm.iter().map(|&i| self.algebra.block(i)).collect();
        RepSpec::new(
            algebra,
            self.summands
                .iter()
                .map(|(w, m)| (permute_weight(w, &blocks), m.clone())),
        )
    }

    /// The contragredient representation.
    pub fn dual(&self) -> Result<RepSpec, CharError> {
        let mut out = Vec::with_capacity(self.summands.len());
        for (w, m) in &self.summands {
            out.push((self.algebra.dominant_conjugate(&-w)?, m.clone()));
        }
        RepSpec::new(self.algebra.clone(), out)
    }
}

impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.algebra)?;
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, m)) in self.summands.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !m.is_one() {
                write!(f, "{m}·")?;
            }
            write!(f, "V{w}")?;
        }
        Ok(())
    }
}

type SimpleChar = Arc<Vec<(Vec<i64>, BigUint)>>;

fn memo() -> &'static Mutex<HashMap<(SimpleType, Vec<i64>), SimpleChar>> {
    static MEMO: OnceLock<Mutex<HashMap<(SimpleType, Vec<i64>), SimpleChar>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Multiplicities of the dominant weights of the irreducible with highest
/// weight `hw`, by Freudenthal's formula
///
/// ```text
/// m(μ) = 2 Σ_{β>0} Σ_{k≥1} m(μ+kβ) (μ+kβ, β) / (|λ+ρ|² - |μ+ρ|²)
/// ```
///
/// processed in order of increasing depth below `hw`.
pub fn dominant_multiplicities(t: SimpleType, hw: &[i64]) -> Vec<(Vec<i64>, BigUint)> {
    let rs = t.root_system();
    let n = t.rank();
    assert_eq!(hw.len(), n);
    assert!(hw.iter().all(|&x| x >= 0), "highest weight must be dominant");

    let depth = |mu: &[i64]| -> i64 {
        let diff: Vec<i64> = hw.iter().zip(mu).map(|(a, b)| a - b).collect();
        rs.scaled_root_coords(&diff).iter().sum()
    };

    // Dominant weights below hw: walk down by positive roots inside the
    // dominant chamber.
    let mut dominant: Vec<Vec<i64>> = vec![hw.to_vec()];
    let mut seen: std::collections::HashSet<Vec<i64>> = dominant.iter().cloned().collect();
    let mut i = 0;
    while i < dominant.len() {
        let mu = dominant[i].clone();
        for beta in &rs.pos_fund {
            let nu: Vec<i64> = mu.iter().zip(beta).map(|(a, b)| a - b).collect();
            if nu.iter().all(|&x| x >= 0) && seen.insert(nu.clone()) {
                dominant.push(nu);
            }
        }
        i += 1;
    }
    dominant.sort_by_cached_key(|mu| (depth(mu), std::cmp::Reverse(mu.clone())));

    let shift = |mu: &[i64]| -> Vec<i64> { mu.iter().map(|x| x + 1).collect() };
    let top = rs.scaled_inner(&shift(hw), &shift(hw));
    let mut mult: HashMap<Vec<i64>, BigUint> = HashMap::new();
    let mut out = Vec::with_capacity(dominant.len());
    for mu in dominant {
        let m = if mu == hw {
            BigUint::one()
        } else {
            freudenthal_step(&rs, &mu, top, &mult)
        };
        mult.insert(mu.clone(), m.clone());
        out.push((mu, m));
    }
    out
}

fn freudenthal_step(
    rs: &RootSystem,
    mu: &[i64],
    top: i128,
    mult: &HashMap<Vec<i64>, BigUint>,
) -> BigUint {
    let shifted: Vec<i64> = mu.iter().map(|x| x + 1).collect();
    let denom = top - rs.scaled_inner(&shifted, &shifted);
    assert!(denom > 0, "Freudenthal denominator must be positive");
    let mut num = BigInt::zero();
    for beta in &rs.pos_fund {
        let mut nu = mu.to_vec();
        loop {
            for (x, b) in nu.iter_mut().zip(beta) {
                *x += b;
            }
            let Some(m) = mult.get(&rs.dominant_conjugate(&nu)) else {
                break;
            };
            num += BigInt::from(m.clone()) * (2 * rs.scaled_inner(&nu, beta));
        }
    }
    let (q, r) = num.div_rem(&BigInt::from(denom));
    assert!(r.is_zero() && !q.is_negative(), "Freudenthal recursion is not integral");
    q.to_biguint().expect("non-negative")
}

/// All weights of a simple-factor irreducible, memoized per process.
fn simple_character(t: SimpleType, hw: &[i64]) -> SimpleChar {
    let key = (t, hw.to_vec());
    if let Some(c) = memo().lock().expect("character memo poisoned").get(&key) {
        return Arc::clone(c);
    }
    let rs = t.root_system();
    let mut out = Vec::new();
    for (mu, m) in dominant_multiplicities(t, hw) {
        if m.is_zero() {
            continue;
        }
        for w in rs.orbit(&mu) {
            out.push((w, m.clone()));
        }
    }
    out.sort();
    let c = Arc::new(out);
    let mut guard = memo().lock().expect("character memo poisoned");
    Arc::clone(guard.entry(key).or_insert(c))
}

fn check_dominant(algebra: &SemisimpleAlgebra, hw: &Weight) -> Result<Vec<i64>, CharError> {
    algebra.check_weight(hw)?;
    if !hw.is_dominant() {
        return Err(CharError::NotDominant(hw.clone()));
    }
    hw.to_i64s()
        .ok_or(CharError::Lie(LieError::CoordinateOverflow))
}

/// The character of the irreducible with highest weight `hw`. Product
/// algebras are handled factor by factor and tensored.
pub fn irreducible_character(
    algebra: &SemisimpleAlgebra,
    hw: &Weight,
) -> Result<FormalCharacter, CharError> {
    let v = check_dominant(algebra, hw)?;
    let mut acc: Vec<(Vec<i64>, BigUint)> = vec![(Vec::new(), BigUint::one())];
    for (i, t) in algebra.factors().iter().enumerate() {
        let block = simple_character(*t, &v[algebra.block(i)]);
        let mut next = Vec::with_capacity(acc.len() * block.len());
        for (p, m) in &acc {
            for (b, n) in block.iter() {
                let mut w = p.clone();
                w.extend_from_slice(b);
                next.push((w, m * n));
            }
        }
        acc = next;
    }
    Ok(FormalCharacter {
        algebra: algebra.clone(),
        entries: acc
            .into_iter()
            .map(|(w, m)| (Weight::from_i64s(&w), m))
            .collect(),
    })
}

/// Dimension by the Weyl dimension formula
/// `∏_{β>0} (λ+ρ, β) / (ρ, β)`, evaluated exactly.
pub fn weyl_dimension(algebra: &SemisimpleAlgebra, hw: &Weight) -> Result<BigUint, CharError> {
    algebra.check_weight(hw)?;
    if !hw.is_dominant() {
        return Err(CharError::NotDominant(hw.clone()));
    }
    let mut dim = BigRational::one();
    for (i, t) in algebra.factors().iter().enumerate() {
        let rs = t.root_system();
        let lambda = &hw.coords().coords()[algebra.block(i)];
        for c in &rs.pos_root_coords {
            let mut num = BigInt::zero();
            let mut den = BigInt::zero();
            for j in 0..t.rank() {
                let weight = BigInt::from(c[j] * rs.sym[j]);
                num += &weight * (&lambda[j] + 1);
                den += weight;
            }
            dim *= BigRational::new(num, den);
        }
    }
    assert!(dim.is_integer(), "Weyl dimension must be an integer");
    Ok(dim.to_integer().to_biguint().expect("positive"))
}

/// The character of a formal sum of irreducibles.
pub fn character_of(spec: &RepSpec) -> Result<FormalCharacter, CharError> {
    let mut out = FormalCharacter::empty(spec.algebra.clone());
    for (hw, m) in &spec.summands {
        let c = irreducible_character(&spec.algebra, hw)?;
        for (w, n) in c.entries {
            out.insert(w, n * m);
        }
    }
    Ok(out)
}

/// Pairwise concatenation of weights with multiplied multiplicities.
pub fn external_tensor(c1: &FormalCharacter, c2: &FormalCharacter) -> FormalCharacter {
    let mut out = FormalCharacter::empty(c1.algebra.product(&c2.algebra));
    for (a, m) in &c1.entries {
        for (b, n) in &c2.entries {
            out.insert(a.concat(b), m * n);
        }
    }
    out
}

/// Negates every weight.
pub fn dual(c: &FormalCharacter) -> FormalCharacter {
    FormalCharacter {
        algebra: c.algebra.clone(),
        entries: c.entries.iter().map(|(w, m)| (-w, m.clone())).collect(),
    }
}

/// Projects onto the blocks of the selected factors (0-based indices, kept
/// in the given order) and sums multiplicities.
pub fn restrict_to_factors(c: &FormalCharacter, part: &[usize]) -> Result<FormalCharacter, CharError> {
    if part.is_empty() {
        return Err(CharError::FactorSelection("empty factor set".into()));
    }
    let mut seen = vec![false; c.algebra.num_factors()];
    for &i in part {
        if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
            return Err(CharError::FactorSelection(format!(
                "{part:?} is not a set of distinct factor indices below {}",
                seen.len()
            )));
        }
    }
    let algebra = c.algebra.subalgebra(part)?;
    let blocks: Vec<_> = part.iter().map(|&i| c.algebra.block(i)).collect();
    let mut out = FormalCharacter::empty(algebra);
    for (w, m) in &c.entries {
        out.insert(permute_weight(w, &blocks), m.clone());
    }
    Ok(out)
}

pub fn is_multiplicity_free(c: &FormalCharacter) -> bool {
    c.entries.values().all(BigUint::is_one)
}

/// A representation is faithful iff every simple factor acts nontrivially,
/// i.e. some summand has a nonzero block at every factor.
pub fn is_faithful(spec: &RepSpec) -> bool {
    (0..spec.algebra.num_factors()).all(|i| {
        let block = spec.algebra.block(i);
        spec.summands
            .iter()
            .any(|(w, _)| !w.block(block.clone()).is_zero())
    })
}

/// A named irreducible of one simple factor.
///
/// Resolution per family (`ω_i` in Bourbaki numbering, `m` the rank):
///
/// | name | resolves to |
/// |---|---|
/// | `triv` | 0 |
/// | `std` | `ω1` for A–D and G2; `ω4` for F4, `ω1` for E6, `ω7` for E7, `ω8` for E8 |
/// | `spin` | `ω_m` for B; `ω_{m-1} + ω_m` (both half-spins) for D |
/// | `spin+`, `spin-` | `ω_m`, `ω_{m-1}` for D |
/// | `symK` | `Kω1` for A and C; K ≤ 1 anywhere |
/// | `wedgeK` | A: `ω_K` for K ≤ m, trivial at K = m+1; B: `ω_K` for K < m, `2ω_m` at K = m; D: `ω_K` for K ≤ m-2, `ω_{m-1}+ω_m` at K = m-1; K ≤ 1 anywhere |
/// | `dual(x)` | `-w0` applied to each constituent of `x` |
/// | `hw(...)` | the given dominant weight |
///
/// Names that would denote a reducible representation are rejected, so
/// every name except D-type `spin` is a single irreducible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IrrepName {
    Triv,
    Std,
    Spin,
    SpinPlus,
    SpinMinus,
    Sym(u64),
    Wedge(u64),
    Dual(Box<IrrepName>),
    Hw(Vec<BigInt>),
}

impl fmt::Display for IrrepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepName::Triv => write!(f, "triv"),
            IrrepName::Std => write!(f, "std"),
            IrrepName::Spin => write!(f, "spin"),
            IrrepName::SpinPlus => write!(f, "spin+"),
            IrrepName::SpinMinus => write!(f, "spin-"),
            IrrepName::Sym(k) => write!(f, "sym{k}"),
            IrrepName::Wedge(k) => write!(f, "wedge{k}"),
            IrrepName::Dual(inner) => write!(f, "dual({inner})"),
            IrrepName::Hw(c) => {
                write!(f, "hw(")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

fn standard_node(t: SimpleType) -> usize {
    match (t.family(), t.rank()) {
        (Family::F, _) => 3,
        (Family::E, 7) => 6,
        (Family::E, 8) => 7,
        _ => 0,
    }
}

/// Highest weights (one per constituent) named by `name` on factor `t`.
pub fn resolve_irrep(t: SimpleType, name: &IrrepName) -> Result<Vec<Weight>, CharError> {
    let m = t.rank();
    let undefined = || CharError::AliasUndefined {
        alias: name.to_string(),
        simple_type: t,
    };
    let fundamental = |i: usize, k: i64| Weight::fundamental(m, i, k);
    let two_nodes = |i: usize, j: usize| {
        let mut v = vec![0; m];
        v[i] += 1;
        v[j] += 1;
        Weight::from_i64s(&v)
    };
    let single = |w: Weight| Ok(vec![w]);
    match name {
        IrrepName::Triv => single(Weight::zero(m)),
        IrrepName::Std => single(fundamental(standard_node(t), 1)),
        IrrepName::Spin => match t.family() {
            Family::B => single(fundamental(m - 1, 1)),
            Family::D => Ok(vec![fundamental(m - 2, 1), fundamental(m - 1, 1)]),
            _ => Err(undefined()),
        },
        IrrepName::SpinPlus | IrrepName::SpinMinus => {
            if t.family() != Family::D {
                return Err(undefined());
            }
            let node = if *name == IrrepName::SpinPlus { m - 1 } else { m - 2 };
            single(fundamental(node, 1))
        }
        IrrepName::Sym(k) => match k {
            0 => resolve_irrep(t, &IrrepName::Triv),
            1 => resolve_irrep(t, &IrrepName::Std),
            _ if matches!(t.family(), Family::A | Family::C) => {
                let k = i64::try_from(*k).map_err(|_| undefined())?;
                single(fundamental(0, k))
            }
            _ => Err(undefined()),
        },
        IrrepName::Wedge(k) => {
            let k = usize::try_from(*k).map_err(|_| undefined())?;
            match (t.family(), k) {
                (_, 0) => resolve_irrep(t, &IrrepName::Triv),
                (_, 1) => resolve_irrep(t, &IrrepName::Std),
                (Family::A, k) if k <= m => single(fundamental(k - 1, 1)),
                (Family::A, k) if k == m + 1 => single(Weight::zero(m)),
                (Family::B, k) if k < m => single(fundamental(k - 1, 1)),
                (Family::B, k) if k == m => single(fundamental(m - 1, 2)),
                (Family::D, k) if k + 2 <= m => single(fundamental(k - 1, 1)),
                (Family::D, k) if k + 1 == m => single(two_nodes(m - 2, m - 1)),
                _ => Err(undefined()),
            }
        }
        IrrepName::Dual(inner) => {
            let rs = t.root_system();
            resolve_irrep(t, inner)?
                .into_iter()
                .map(|w| {
                    let neg: Vec<i64> = w
                        .to_i64s()
                        .ok_or(CharError::Lie(LieError::CoordinateOverflow))?
                        .iter()
                        .map(|x| -x)
                        .collect();
                    Ok(Weight::from_i64s(&rs.dominant_conjugate(&neg)))
                })
                .collect()
        }
        IrrepName::Hw(coords) => {
            if coords.len() != m {
                return Err(CharError::HwArity {
                    simple_type: t,
                    expected: m,
                    found: coords.len(),
                });
            }
            let w = Weight::new(crate::exactlin::IntVector::new(coords.clone()));
            if !w.is_dominant() {
                return Err(CharError::NotDominant(w));
            }
            single(w)
        }
    }
}

/// The preferred name of the irreducible with highest weight `hw` on `t`:
/// the first of `triv`, `std`, `dual(std)`, `spin`, `spin+`, `spin-`,
/// `symK`, `dual(symK)`, `wedgeK` that resolves to exactly `hw`, otherwise
/// `hw(...)`.
pub fn name_irrep(t: SimpleType, hw: &Weight) -> IrrepName {
    let resolves_to = |name: &IrrepName| {
        resolve_irrep(t, name).is_ok_and(|ws| ws.len() == 1 && &ws[0] == hw)
    };
    let mut candidates = vec![
        IrrepName::Triv,
        IrrepName::Std,
        IrrepName::Dual(Box::new(IrrepName::Std)),
        IrrepName::Spin,
        IrrepName::SpinPlus,
        IrrepName::SpinMinus,
    ];
    let nonzero: Vec<usize> = (0..hw.dim()).filter(|&i| !hw.coords()[i].is_zero()).collect();
    if let [i] = nonzero[..] {
        if let Ok(k) = u64::try_from(hw.coords()[i].clone()) {
            candidates.push(IrrepName::Sym(k));
            candidates.push(IrrepName::Dual(Box::new(IrrepName::Sym(k))));
        }
    }
    for k in 2..=t.rank() as u64 + 1 {
        candidates.push(IrrepName::Wedge(k));
    }
    candidates
        .into_iter()
        .find(resolves_to)
        .unwrap_or_else(|| IrrepName::Hw(hw.coords().coords().to_vec()))
}
