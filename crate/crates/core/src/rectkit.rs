//! Rectangularity of weight multisets.
//!
//! A multiset is rectangular when it is multiplicity-free and some linear
//! isomorphism carries it onto a product `Z_{d_1} × ... × Z_{d_n}`, where
//! `Z_d = {-d, -d+2, ..., d}`. Detection is exact and produces a
//! [`RectCertificate`] that can be checked independently.
//!
//! Detection goes through the lexicographically smallest point `v`. In any
//! linear image of a box, `v` is a vertex, and in `D = S - v` the edge
//! generators are exactly the additively irreducible elements: those nonzero
//! `u ∈ D` that are not a sum of two nonzero elements of `D`. The candidate
//! edges are then checked by rebuilding the box and testing `S = -S`, since a
//! box reconstruction alone would also accept translates.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::charcalc::FormalCharacter;
use crate::exactlin::{rank_of, IntVector, RatMatrix};

/// Points held as integer numerators over one common positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightMultiset {
    dim: usize,
    points: BTreeMap<IntVector, BigUint>,
    denominator: BigInt,
}

impl WeightMultiset {
    /// # Panics
    ///
    /// If a point has the wrong dimension or `denominator` is not positive.
    pub fn new(
        dim: usize,
        points: impl IntoIterator<Item = (IntVector, BigUint)>,
        denominator: BigInt,
    ) -> Self {
        assert!(denominator.is_positive(), "denominator must be positive");
        let mut map: BTreeMap<IntVector, BigUint> = BTreeMap::new();
        for (p, m) in points {
            assert_eq!(p.dim(), dim, "point of the wrong dimension");
            if !m.is_zero() {
                *map.entry(p).or_default() += m;
            }
        }
        let mut out = WeightMultiset {
            dim,
            points: map,
            denominator,
        };
        out.normalize();
        out
    }

    /// Integer points, each with multiplicity one (repeats accumulate).
    pub fn from_points(dim: usize, points: impl IntoIterator<Item = IntVector>) -> Self {
        WeightMultiset::new(
            dim,
            points.into_iter().map(|p| (p, BigUint::one())),
            BigInt::one(),
        )
    }

    /// Weights of a character in fundamental-weight coordinates, which are
    /// already integral.
    pub fn from_character(c: &FormalCharacter) -> Self {
        WeightMultiset::new(
            c.algebra().rank(),
            c.iter().map(|(w, m)| (w.coords().clone(), m.clone())),
            BigInt::one(),
        )
    }

    /// Points given as exact rational vectors.
    pub fn from_rational_points(
        dim: usize,
        points: impl IntoIterator<Item = (Vec<BigRational>, BigUint)>,
    ) -> Self {
        let points: Vec<_> = points.into_iter().collect();
        let den = points
            .iter()
            .flat_map(|(p, _)| p.iter())
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let scaled: Vec<_> = points
            .into_iter()
            .map(|(p, m)| {
                let v = p.iter().map(|q| q.numer() * (&den / q.denom())).collect();
                (IntVector::new(v), m)
            })
            .collect();
        WeightMultiset::new(dim, scaled, den)
    }

    fn normalize(&mut self) {
        let g = self
            .points
            .keys()
            .fold(self.denominator.clone(), |acc, p| acc.gcd(&p.content()));
        if !g.is_one() && !g.is_zero() {
            self.points = std::mem::take(&mut self.points)
                .into_iter()
                .map(|(p, m)| (p.div_exact(&g).expect("gcd divides"), m))
                .collect();
            self.denominator = &self.denominator / &g;
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// Numerator vectors and multiplicities.
    pub fn points(&self) -> &BTreeMap<IntVector, BigUint> {
        &self.points
    }

    /// Number of distinct points.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn mass(&self) -> BigUint {
        self.points.values().sum()
    }

    /// Points as exact rational vectors.
    pub fn rational_points(&self) -> Vec<(Vec<BigRational>, BigUint)> {
        self.points
            .iter()
            .map(|(p, m)| {
                let v = p
                    .iter()
                    .map(|c| BigRational::new(c.clone(), self.denominator.clone()))
                    .collect();
                (v, m.clone())
            })
            .collect()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.points.values().all(BigUint::is_one)
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        self.points
            .iter()
            .all(|(p, m)| self.points.get(&-p) == Some(m))
    }

    /// The image under a rational matrix with `dim` columns.
    pub fn transform(&self, m: &RatMatrix) -> WeightMultiset {
        assert_eq!(m.cols(), self.dim, "matrix does not act on this dimension");
        WeightMultiset::from_rational_points(
            m.rows(),
            self.rational_points()
                .into_iter()
                .map(|(p, k)| (m.mul_vec(&p), k)),
        )
    }

    /// The translate by a vector given in numerator coordinates.
    pub fn translate(&self, t: &IntVector) -> WeightMultiset {
        WeightMultiset::new(
            self.dim,
            self.points.iter().map(|(p, m)| (p + t, m.clone())),
            self.denominator.clone(),
        )
    }
}

/// A witness that a multiset is rectangular.
///
/// Coordinates are the multiset's numerator coordinates. The points are
/// exactly `vertex + Σ c_i edges[i]` with `0 ≤ c_i ≤ degrees[i]`, and
/// `2 vertex + Σ degrees[i] edges[i] = 0`. `padding` counts extra length-1
/// directions supplied by the caller (typically up to the algebra rank).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RectCertificate {
    pub vertex: IntVector,
    pub edges: Vec<IntVector>,
    pub degrees: Vec<u64>,
    pub padding: usize,
}

impl RectCertificate {
    /// The same certificate padded so `edges + padding` reaches `rank`.
    pub fn padded_to(mut self, rank: usize) -> Self {
        self.padding = rank.saturating_sub(self.edges.len());
        self
    }
}

impl fmt::Display for RectCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertex {} edges [", self.vertex)?;
        for (i, (e, d)) in self.edges.iter().zip(&self.degrees).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}×{e}")?;
        }
        write!(f, "] padding {}", self.padding)
    }
}

/// Why a multiset is not rectangular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Error)]
pub enum RectFailure {
    #[error("the multiset is empty")]
    Empty,
    #[error("some weight has multiplicity greater than one")]
    Multiplicity,
    #[error("the multiset is not centrally symmetric")]
    Asymmetry,
    #[error("the points do not form a box")]
    BoxMismatch,
}

impl RectFailure {
    pub fn code(self) -> &'static str {
        match self {
            RectFailure::Empty => "empty",
            RectFailure::Multiplicity => "multiplicity",
            RectFailure::Asymmetry => "asymmetry",
            RectFailure::BoxMismatch => "box_mismatch",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RectError {
    #[error("length {0} is not allowed; every length must be at least 2")]
    LengthTooSmall(u64),
}

/// The set of pairwise midpoints `(a + b) / 2`, including `a = b`, each with
/// multiplicity one.
pub fn midpoint_set(s: &WeightMultiset) -> WeightMultiset {
    let pts: Vec<&IntVector> = s.points.keys().collect();
    let mut out = BTreeSet::new();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i..] {
            out.insert(*a + *b);
        }
    }
    WeightMultiset::new(
        s.dim,
        out.into_iter().map(|p| (p, BigUint::one())),
        &s.denominator * 2,
    )
}

/// A certificate if `s` is rectangular, otherwise `None`.
pub fn detect_rectangular(s: &WeightMultiset) -> Option<RectCertificate> {
    diagnose_rectangular(s).ok()
}

/// Like [`detect_rectangular`] but reports the failing check.
pub fn diagnose_rectangular(s: &WeightMultiset) -> Result<RectCertificate, RectFailure> {
    if s.is_empty() {
        return Err(RectFailure::Empty);
    }
    if !s.is_multiplicity_free() {
        return Err(RectFailure::Multiplicity);
    }
    if !s.is_centrally_symmetric() {
        return Err(RectFailure::Asymmetry);
    }
    let vertex = s.points.keys().next().expect("non-empty").clone();
    let diffs: HashSet<IntVector> = s.points.keys().map(|p| p - &vertex).collect();
    let nonzero: Vec<&IntVector> = diffs.iter().filter(|d| !d.is_zero()).collect();

    let mut edges: Vec<IntVector> = nonzero
        .iter()
        .filter(|u| {
            !nonzero
                .iter()
                .any(|a| *a != **u && diffs.contains(&(**u - *a)) && !(**u - *a).is_zero())
        })
        .map(|u| (*u).clone())
        .collect();
    edges.sort();

    let all: Vec<IntVector> = diffs.iter().cloned().collect();
    if rank_of(&edges) != edges.len() || rank_of(&all) != edges.len() {
        return Err(RectFailure::BoxMismatch);
    }
    let degrees: Vec<u64> = edges
        .iter()
        .map(|u| {
            let mut c = 1u64;
            let mut cur = u.clone();
            loop {
                let next = &cur + u;
                if !diffs.contains(&next) {
                    return c;
                }
                cur = next;
                c += 1;
            }
        })
        .collect();

    let cert = RectCertificate {
        vertex,
        edges,
        degrees,
        padding: 0,
    };
    if verify_certificate(s, &cert) {
        Ok(cert)
    } else {
        Err(RectFailure::BoxMismatch)
    }
}

/// One-pass check of a certificate against a multiset.
pub fn verify_certificate(s: &WeightMultiset, cert: &RectCertificate) -> bool {
    if cert.vertex.dim() != s.dim
        || cert.edges.len() != cert.degrees.len()
        || cert.edges.iter().any(|e| e.dim() != s.dim)
        || !s.is_multiplicity_free()
        || rank_of(&cert.edges) != cert.edges.len()
    {
        return false;
    }
    let mut closing = cert.vertex.scale(&BigInt::from(2));
    for (e, &d) in cert.edges.iter().zip(&cert.degrees) {
        closing = &closing + &e.scale(&BigInt::from(d));
    }
    if !closing.is_zero() {
        return false;
    }
    let Some(size) = cert
        .degrees
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(usize::try_from(d).ok()?.checked_add(1)?))
    else {
        return false;
    };
    if size != s.len() {
        return false;
    }
    // Independent edges make the box points distinct, so counting plus
    // membership gives equality.
    let mut layer = vec![cert.vertex.clone()];
    for (e, &d) in cert.edges.iter().zip(&cert.degrees) {
        let mut next = Vec::with_capacity(layer.len() * (d as usize + 1));
        for p in &layer {
            let mut cur = p.clone();
            next.push(cur.clone());
            for _ in 0..d {
                cur = &cur + e;
                next.push(cur.clone());
            }
        }
        layer = next;
    }
    layer.iter().all(|p| s.points.contains_key(p))
}

/// The multiset `{d_i + 1}` joined with `padding` ones, ascending.
pub fn lengths(cert: &RectCertificate) -> Vec<u64> {
    let mut out: Vec<u64> = cert.degrees.iter().map(|d| d + 1).collect();
    out.extend(std::iter::repeat_n(1, cert.padding));
    out.sort_unstable();
    out
}

/// The common length if all lengths agree; `None` for mixed lengths or when
/// there are no lengths at all.
pub fn is_hypercubic(cert: &RectCertificate) -> Option<u64> {
    let ls = lengths(cert);
    let first = *ls.first()?;
    ls.iter().all(|&l| l == first).then_some(first)
}

/// Order of the linear symmetry group of a box with the given lengths:
/// `∏ 2^n · n!` over the distinct lengths, `n` being each one's multiplicity.
pub fn automorphism_order(lengths: &[u64]) -> Result<BigUint, RectError> {
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for &l in lengths {
        if l < 2 {
            return Err(RectError::LengthTooSmall(l));
        }
        *counts.entry(l).or_default() += 1;
    }
    Ok(counts
        .values()
        .map(|&n| (BigUint::one() << n) * (1..=n).fold(BigUint::one(), |a, k| a * k))
        .product())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(ps: &[&[i64]]) -> WeightMultiset {
        WeightMultiset::from_points(ps[0].len(), ps.iter().map(|p| IntVector::from_i64s(p)))
    }

    #[test]
    fn midpoint_examples() {
        let z2 = pts(&[&[-2], &[0], &[2]]);
        assert_eq!(midpoint_set(&z2), pts(&[&[-2], &[-1], &[0], &[1], &[2]]));
        let single = pts(&[&[3, 1]]);
        assert_eq!(midpoint_set(&single), single);
        assert_eq!(
            midpoint_set(&pts(&[&[0, 0], &[2, 0]])),
            pts(&[&[0, 0], &[1, 0], &[2, 0]])
        );
        let odd = midpoint_set(&pts(&[&[-1], &[1]]));
        assert_eq!(odd.denominator(), &BigInt::from(1));
        let half = midpoint_set(&pts(&[&[0], &[1]]));
        assert_eq!(half.denominator(), &BigInt::from(2));
        assert_eq!(half.len(), 3);
    }

    #[test]
    fn detect_examples() {
        let line = pts(&[&[-3], &[-1], &[1], &[3]]);
        let c = detect_rectangular(&line).unwrap();
        assert_eq!(c.degrees, vec![3]);
        assert_eq!(lengths(&c), vec![4]);

        let diamond = pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        let c = detect_rectangular(&diamond).unwrap();
        assert_eq!(lengths(&c), vec![2, 2]);
        let edges: BTreeSet<_> = c.edges.iter().cloned().collect();
        assert_eq!(
            edges,
            BTreeSet::from([IntVector::from_i64s(&[1, 1]), IntVector::from_i64s(&[1, -1])])
        );

        // Weights of A2 Std in fundamental coordinates.
        let a2 = pts(&[&[1, 0], &[-1, 1], &[0, -1]]);
        assert_eq!(diagnose_rectangular(&a2), Err(RectFailure::Asymmetry));

        let zero = pts(&[&[0, 0]]);
        let c = detect_rectangular(&zero).unwrap();
        assert!(c.edges.is_empty());
        assert_eq!(is_hypercubic(&c), None);
        assert_eq!(is_hypercubic(&c.clone().padded_to(2)), Some(1));

        assert_eq!(
            diagnose_rectangular(&WeightMultiset::from_points(2, [])),
            Err(RectFailure::Empty)
        );
        let doubled = WeightMultiset::new(
            1,
            [(IntVector::from_i64s(&[0]), BigUint::from(2u32))],
            BigInt::one(),
        );
        assert_eq!(diagnose_rectangular(&doubled), Err(RectFailure::Multiplicity));
        let plus = pts(&[&[0, 0], &[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(diagnose_rectangular(&plus), Err(RectFailure::BoxMismatch));
    }

    #[test]
    fn certificate_checks() {
        let s = pts(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1], &[-1, 0], &[1, 0]]);
        let c = detect_rectangular(&s).unwrap();
        assert!(verify_certificate(&s, &c));
        assert_eq!(lengths(&c), vec![2, 3]);
        let mut bad = c.clone();
        bad.degrees[0] -= 1;
        assert!(!verify_certificate(&s, &bad));
        let other = pts(&[&[-1], &[1]]);
        assert!(!verify_certificate(&other, &c));
        let shifted = pts(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1], &[-1, 2], &[1, 2]]);
        assert!(!verify_certificate(&shifted, &c));
    }

    #[test]
    fn hypercubic_and_automorphisms() {
        let cert = |ds: &[u64]| RectCertificate {
            vertex: IntVector::zeros(ds.len()),
            edges: (0..ds.len()).map(|i| IntVector::unit(ds.len(), i)).collect(),
            degrees: ds.to_vec(),
            padding: 0,
        };
        assert_eq!(is_hypercubic(&cert(&[1, 1, 1])), Some(2));
        assert_eq!(is_hypercubic(&cert(&[8])), Some(9));
        assert_eq!(is_hypercubic(&cert(&[1, 2])), None);
        assert_eq!(automorphism_order(&[2, 2]).unwrap(), BigUint::from(8u32));
        assert_eq!(automorphism_order(&[2, 3]).unwrap(), BigUint::from(4u32));
        assert_eq!(automorphism_order(&[2, 2, 2]).unwrap(), BigUint::from(48u32));
        assert_eq!(automorphism_order(&[2, 1]), Err(RectError::LengthTooSmall(1)));
    }

    #[test]
    fn transform_and_translate() {
        let s = pts(&[&[-1, 0], &[1, 0]]);
        let m = RatMatrix::from_i64_rows(&[vec![1, 1], vec![0, 1]]);
        let t = s.transform(&m);
        assert_eq!(t, pts(&[&[-1, 0], &[1, 0]]));
        let moved = s.translate(&IntVector::from_i64s(&[0, 1]));
        assert_eq!(diagnose_rectangular(&moved), Err(RectFailure::Asymmetry));
    }
}
