//! Simple and semisimple types, Cartan data, roots and Weyl orbits.
//!
//! Nodes are numbered as in Bourbaki's tables. The Cartan matrix is
//! `a_ij = 2(α_i, α_j) / (α_i, α_i)`, so the simple root `α_j` written in
//! fundamental-weight coordinates is column `j`, and the simple reflection
//! acts by `s_i(λ)_k = λ_k - λ_i a_ki`.
//!
//! Inner products are normalized so that short roots have squared length 2;
//! the symmetrizer `d_i` is then half the squared length of `α_i`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Range, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactlin::{solve_exact, IntVector, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("{family}{rank} is not an admissible simple type")]
    InvalidRank { family: Family, rank: usize },
    #[error("D2 is not simple; write it as A1*A1")]
    D2NotSimple,
    #[error("a semisimple algebra needs at least one simple factor")]
    NoFactors,
    #[error("factor index {index} is out of range for {count} factors")]
    FactorIndex { index: usize, count: usize },
    #[error("weight has {found} coordinates but the algebra has rank {expected}")]
    WeightDimension { expected: usize, found: usize },
    #[error("{0} is exceptional and has no orthogonal realization")]
    NotClassical(SimpleType),
    #[error("weight coordinates are too large for this computation")]
    CoordinateOverflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.letter() == c.to_ascii_uppercase())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple type in canonical form.
///
/// Construction folds the low-rank coincidences `B1 = C1 = A1`, `C2 = B2`
/// and `D3 = A3`, and rejects `D2`, which is not simple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, LieError> {
        use Family::*;
        let admissible = match family {
            A | B | C => rank >= 1,
            D => rank >= 2,
            E => (6..=8).contains(&rank),
            F => rank == 4,
            G => rank == 2,
        };
        if !admissible {
            return Err(LieError::InvalidRank { family, rank });
        }
        let (family, rank) = match (family, rank) {
            (B | C, 1) => (A, 1),
            (C, 2) => (B, 2),
            (D, 3) => (A, 3),
            (D, 2) => return Err(LieError::D2NotSimple),
            other => other,
        };
        Ok(SimpleType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_classical(self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        self.root_system().cartan.clone()
    }

    /// Half the squared length of each simple root.
    pub fn symmetrizer(self) -> Vec<i64> {
        self.root_system().sym.clone()
    }

    /// All positive roots in fundamental-weight coordinates.
    pub fn positive_roots(self) -> Vec<Weight> {
        self.root_system()
            .pos_fund
            .iter()
            .map(|r| Weight::from_i64s(r))
            .collect()
    }

    pub fn weyl_group_order(self) -> BigUint {
        let m = self.rank as u64;
        let fact = |n: u64| (1..=n).fold(BigUint::one(), |acc, k| acc * k);
        let pow2 = |n: u64| BigUint::one() << n;
        match self.family {
            Family::A => fact(m + 1),
            Family::B | Family::C => pow2(m) * fact(m),
            Family::D => pow2(m - 1) * fact(m),
            Family::E => match m {
                6 => BigUint::from(51_840u32),
                7 => BigUint::from(2_903_040u32),
                _ => BigUint::from(696_729_600u32),
            },
            Family::F => BigUint::from(1152u32),
            Family::G => BigUint::from(12u32),
        }
    }

    /// Cached root data for this type.
    pub fn root_system(self) -> Arc<RootSystem> {
        static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<RootSystem>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(rs) = cache.lock().expect("root cache poisoned").get(&self) {
            return Arc::clone(rs);
        }
        let rs = Arc::new(RootSystem::build(self));
        let mut guard = cache.lock().expect("root cache poisoned");
        Arc::clone(guard.entry(self).or_insert(rs))
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| format!("unknown family in {s:?}"))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| format!("bad rank in {s:?}"))?;
        SimpleType::new(family, rank).map_err(|e| e.to_string())
    }
}

/// Cartan data, positive roots and the invariant form of one simple type.
#[derive(Debug)]
pub struct RootSystem {
    pub simple_type: SimpleType,
    pub cartan: Vec<Vec<i64>>,
    pub sym: Vec<i64>,
    /// Positive roots in simple-root coordinates, ordered by height.
    pub pos_root_coords: Vec<Vec<i64>>,
    /// The same roots in fundamental-weight coordinates.
    pub pos_fund: Vec<Vec<i64>>,
    /// `(ω_i, ω_j) = gram[i][j] / gram_den`.
    pub gram: Vec<Vec<i64>>,
    pub gram_den: i64,
    /// Simple-root coordinates of `ω_j` are column `j` of `inv / inv_den`.
    pub inv: Vec<Vec<i64>>,
    pub inv_den: i64,
}

impl RootSystem {
    fn build(t: SimpleType) -> RootSystem {
        let cartan = cartan_of(t);
        let sym = symmetrizer_of(t);
        let n = t.rank;

        let amat = RatMatrix::from_i64_rows(&cartan);
        let mut inv_q = vec![vec![BigRational::zero(); n]; n];
        for j in 0..n {
            let e: Vec<BigRational> = (0..n)
                .map(|i| BigRational::from_integer(BigInt::from(i32::from(i == j))))
                .collect();
            let col = solve_exact(&amat, &e).expect("Cartan matrices are invertible");
            for i in 0..n {
                inv_q[i][j] = col[i].clone();
            }
        }
        let (inv, inv_den) = clear_denominators(&inv_q);

        // (ω_k, ω_l) = (A^{-1})_{lk} d_l
        let gram_q: Vec<Vec<BigRational>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|l| &inv_q[l][k] * BigRational::from_integer(sym[l].into()))
                    .collect()
            })
            .collect();
        let (gram, gram_den) = clear_denominators(&gram_q);

        let pos_root_coords = positive_root_closure(&cartan);
        let pos_fund = pos_root_coords
            .iter()
            .map(|c| {
                (0..n)
                    .map(|k| (0..n).map(|j| c[j] * cartan[k][j]).sum())
                    .collect()
            })
            .collect();

        RootSystem {
            simple_type: t,
            cartan,
            sym,
            pos_root_coords,
            pos_fund,
            gram,
            gram_den,
            inv,
            inv_den,
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `gram_den` times the invariant inner product of two weights.
    pub fn scaled_inner(&self, a: &[i64], b: &[i64]) -> i128 {
        let mut acc = 0i128;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc += i128::from(x) * i128::from(self.gram[i][j]) * i128::from(y);
            }
        }
        acc
    }

    /// Simple-root coordinates of `w`, scaled by `inv_den`.
    pub fn scaled_root_coords(&self, w: &[i64]) -> Vec<i64> {
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| self.inv[i][j] * w[j]).sum())
            .collect()
    }

    pub fn reflect(&self, w: &mut [i64], i: usize) {
        let c = w[i];
        if c != 0 {
            for (k, x) in w.iter_mut().enumerate() {
                *x -= c * self.cartan[k][i];
            }
        }
    }

    pub fn dominant_conjugate(&self, w: &[i64]) -> Vec<i64> {
        let mut v = w.to_vec();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            self.reflect(&mut v, i);
        }
        v
    }

    /// The Weyl orbit of `w`, by closure under simple reflections.
    pub fn orbit(&self, w: &[i64]) -> Vec<Vec<i64>> {
        let start = self.dominant_conjugate(w);
        let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start.clone()]);
        let mut out = vec![start];
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                // Only reflect downwards; this still reaches the whole orbit.
                if v[i] <= 0 {
                    continue;
                }
                let mut u = v.clone();
                self.reflect(&mut u, i);
                if seen.insert(u.clone()) {
                    out.push(u.clone());
                    queue.push_back(u);
                }
            }
        }
        out
    }
}

fn clear_denominators(m: &[Vec<BigRational>]) -> (Vec<Vec<i64>>, i64) {
    let den = m
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let rows = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|q| {
                    (q.numer() * (&den / q.denom()))
                        .to_i64()
                        .expect("Cartan data fits in i64")
                })
                .collect()
        })
        .collect();
    (rows, den.to_i64().expect("Cartan data fits in i64"))
}

fn cartan_of(t: SimpleType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            for i in 1..n {
                link(i - 1, i);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i - 1, i);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 3..n {
                link(i - 1, i);
            }
        }
    }
    match t.family {
        Family::B => a[n - 1][n - 2] = -2,
        Family::C => a[n - 2][n - 1] = -2,
        Family::F => a[2][1] = -2,
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

fn symmetrizer_of(t: SimpleType) -> Vec<i64> {
    let n = t.rank;
    match t.family {
        Family::B => (0..n).map(|i| if i + 1 < n { 2 } else { 1 }).collect(),
        Family::C => (0..n).map(|i| if i + 1 < n { 1 } else { 2 }).collect(),
        Family::F => vec![2, 2, 1, 1],
        Family::G => vec![1, 3],
        _ => vec![1; n],
    }
}

/// Positive roots in simple-root coordinates via root strings: if `β` is a
/// root and `β - pα_i` is the bottom of its `α_i`-string, then `β + α_i` is a
/// root exactly when `p > ⟨β, α_i^∨⟩`.
fn positive_root_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut out = Vec::new();
    while !level.is_empty() {
        level.sort();
        all.extend(level.iter().cloned());
        out.extend(level.iter().cloned());
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &level {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p > pairing {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        level = next.into_iter().collect();
    }
    out
}

/// An ordered product of simple types. Factor order fixes the coordinate
/// blocks of weights, so equality is order-sensitive; use
/// [`SemisimpleAlgebra::is_isomorphic`] to compare up to permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemisimpleAlgebra {
    factors: Vec<SimpleType>,
}

impl SemisimpleAlgebra {
    pub fn new(factors: Vec<SimpleType>) -> Result<Self, LieError> {
        if factors.is_empty() {
            return Err(LieError::NoFactors);
        }
        Ok(SemisimpleAlgebra { factors })
    }

    pub fn simple(t: SimpleType) -> Self {
        SemisimpleAlgebra { factors: vec![t] }
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> Result<SimpleType, LieError> {
        self.factors.get(i).copied().ok_or(LieError::FactorIndex {
            index: i,
            count: self.factors.len(),
        })
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank).sum()
    }

    /// Coordinate range of factor `i` inside a weight.
    pub fn block(&self, i: usize) -> Range<usize> {
        let start: usize = self.factors[..i].iter().map(|t| t.rank).sum();
        start..start + self.factors[i].rank
    }

    /// The product `self × other`.
    pub fn product(&self, other: &SemisimpleAlgebra) -> SemisimpleAlgebra {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        SemisimpleAlgebra { factors }
    }

    /// The sub-product on the given factor indices, in the given order.
    pub fn subalgebra(&self, part: &[usize]) -> Result<SemisimpleAlgebra, LieError> {
        let factors = part
            .iter()
            .map(|&i| self.factor(i))
            .collect::<Result<Vec<_>, _>>()?;
        SemisimpleAlgebra::new(factors)
    }

    /// A permutation listing factor indices in sorted label order; stable on
    /// ties.
    pub fn sorting_permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.factors.len()).collect();
        perm.sort_by_key(|&i| self.factors[i]);
        perm
    }

    pub fn sorted(&self) -> SemisimpleAlgebra {
        let mut factors = self.factors.clone();
        factors.sort();
        SemisimpleAlgebra { factors }
    }

    pub fn is_isomorphic(&self, other: &SemisimpleAlgebra) -> bool {
        self.sorted() == other.sorted()
    }

    pub fn weyl_group_order(&self) -> BigUint {
        self.factors
            .iter()
            .map(|t| t.weyl_group_order())
            .product()
    }

    pub fn check_weight(&self, w: &Weight) -> Result<(), LieError> {
        if w.dim() != self.rank() {
            return Err(LieError::WeightDimension {
                expected: self.rank(),
                found: w.dim(),
            });
        }
        Ok(())
    }

    /// Apply the `i`-th simple reflection, counting nodes across all factors.
    pub fn simple_reflection(&self, w: &Weight, i: usize) -> Weight {
        let mut offset = 0;
        for t in &self.factors {
            if i < offset + t.rank {
                let rs = t.root_system();
                let local = i - offset;
                let c = w.0[offset + local].clone();
                let mut coords = w.0.clone().into_coords();
                for k in 0..t.rank {
                    coords[offset + k] -= &c * rs.cartan[k][local];
                }
                return Weight(IntVector::new(coords));
            }
            offset += t.rank;
        }
        panic!("simple reflection index {i} out of range");
    }

    /// The unique dominant weight in the Weyl orbit of `w`.
    pub fn dominant_conjugate(&self, w: &Weight) -> Result<Weight, LieError> {
        self.check_weight(w)?;
        let v = w.to_i64s().ok_or(LieError::CoordinateOverflow)?;
        let mut out = Vec::with_capacity(v.len());
        for (i, t) in self.factors.iter().enumerate() {
            out.extend(t.root_system().dominant_conjugate(&v[self.block(i)]));
        }
        Ok(Weight::from_i64s(&out))
    }

    pub fn dynkin_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SemisimpleAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl From<SimpleType> for SemisimpleAlgebra {
    fn from(t: SimpleType) -> Self {
        SemisimpleAlgebra::simple(t)
    }
}

/// A weight in fundamental-weight coordinates, one block per factor.
///
/// The algebra is carried by the surrounding character or spec rather than
/// by each weight.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(IntVector);

impl Weight {
    pub fn new(coords: IntVector) -> Self {
        Weight(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Weight(IntVector::from_i64s(coords))
    }

    pub fn zero(dim: usize) -> Self {
        Weight(IntVector::zeros(dim))
    }

    /// `k` times the `i`-th fundamental weight.
    pub fn fundamental(dim: usize, i: usize, k: i64) -> Self {
        let mut v = vec![0; dim];
        v[i] = k;
        Weight::from_i64s(&v)
    }

    pub fn coords(&self) -> &IntVector {
        &self.0
    }

    pub fn into_coords(self) -> IntVector {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| c >= &BigInt::zero())
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.to_i64s()
    }

    pub fn block(&self, range: Range<usize>) -> Weight {
        Weight(self.0.slice(range))
    }

    pub fn concat(&self, other: &Weight) -> Weight {
        Weight(self.0.concat(&other.0))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(&self.0 + &rhs.0)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(&self.0 - &rhs.0)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(-&self.0)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

/// Positive roots of a simple type, in fundamental-weight coordinates.
pub fn positive_roots(t: SimpleType) -> Vec<Weight> {
    t.positive_roots()
}

pub fn cartan_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    t.cartan_matrix()
}

pub fn weyl_group_order(t: SimpleType) -> BigUint {
    t.weyl_group_order()
}

/// The full Weyl orbit of `w`.
///
/// The group is never listed; each factor's orbit is closed under simple
/// reflections and the blocks are combined.
pub fn weyl_orbit(algebra: &SemisimpleAlgebra, w: &Weight) -> Result<BTreeSet<Weight>, LieError> {
    algebra.check_weight(w)?;
    let v = w.to_i64s().ok_or(LieError::CoordinateOverflow)?;
    let mut acc: Vec<Vec<i64>> = vec![Vec::new()];
    for (i, t) in algebra.factors().iter().enumerate() {
        let block = t.root_system().orbit(&v[algebra.block(i)]);
        acc = acc
            .iter()
            .flat_map(|prefix| {
                block.iter().map(move |b| {
                    let mut p = prefix.clone();
                    p.extend_from_slice(b);
                    p
                })
            })
            .collect();
    }
    Ok(acc.iter().map(|c| Weight::from_i64s(c)).collect())
}

/// A weight of one classical factor in its orthogonal realization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrthoWeight(pub Vec<BigRational>);

impl OrthoWeight {
    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }
}

impl fmt::Display for OrthoWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Fundamental weights of a classical type in the `e_i` basis.
///
/// `B_m`, `C_m`, `D_m` live in `m` coordinates. `A_m` lives in `m + 1`
/// coordinates summing to zero, so its standard representation has weights
/// `f_k = e_k - (1/(m+1))(1, ..., 1)`.
pub fn fundamental_weights_orthogonal(t: SimpleType) -> Result<Vec<Vec<BigRational>>, LieError> {
    let m = t.rank;
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let prefix = |i: usize, len: usize, val: BigRational| -> Vec<BigRational> {
        (0..len)
            .map(|k| if k < i { val.clone() } else { BigRational::zero() })
            .collect()
    };
    let out = match t.family {
        Family::A => (1..=m)
            .map(|i| {
                let shift = q(i as i64, m as i64 + 1);
                (0..=m)
                    .map(|k| {
                        let base = if k < i { q(1, 1) } else { q(0, 1) };
                        base - &shift
                    })
                    .collect()
            })
            .collect(),
        Family::B => (1..=m)
            .map(|i| {
                if i < m {
                    prefix(i, m, q(1, 1))
                } else {
                    prefix(m, m, q(1, 2))
                }
            })
            .collect(),
        Family::C => (1..=m).map(|i| prefix(i, m, q(1, 1))).collect(),
        Family::D => (1..=m)
            .map(|i| {
                if i + 2 <= m {
                    prefix(i, m, q(1, 1))
                } else if i + 1 == m {
                    let mut v = prefix(m, m, q(1, 2));
                    v[m - 1] = q(-1, 2);
                    v
                } else {
                    prefix(m, m, q(1, 2))
                }
            })
            .collect(),
        _ => return Err(LieError::NotClassical(t)),
    };
    Ok(out)
}

/// The block of `w` at `factor_index`, mapped into the orthogonal
/// realization of that (classical) factor.
pub fn to_orthogonal(
    algebra: &SemisimpleAlgebra,
    w: &Weight,
    factor_index: usize,
) -> Result<OrthoWeight, LieError> {
    algebra.check_weight(w)?;
    let t = algebra.factor(factor_index)?;
    let basis = fundamental_weights_orthogonal(t)?;
    let block = algebra.block(factor_index);
    let len = basis[0].len();
    let mut out = vec![BigRational::zero(); len];
    for (i, c) in w.coords().coords()[block].iter().enumerate() {
        let c = BigRational::from_integer(c.clone());
        for (o, b) in out.iter_mut().zip(&basis[i]) {
            *o += &c * b;
        }
    }
    Ok(OrthoWeight(out))
}

/// The invariant inner product of two weights of a simple type.
pub fn inner_product(t: SimpleType, a: &Weight, b: &Weight) -> BigRational {
    let rs = t.root_system();
    let mut acc = BigInt::zero();
    for i in 0..t.rank {
        for j in 0..t.rank {
            acc += &a.coords()[i] * &b.coords()[j] * rs.gram[i][j];
        }
    }
    BigRational::new(acc, rs.gram_den.into())
}
