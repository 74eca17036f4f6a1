//! Exhaustive root-geometry censuses in the orthogonal realization of B_n.
//!
//! Long roots are `±e_i ± e_j`, short roots `±e_i`. Subspaces are spanned
//! by root tuples and deduplicated by the reduced echelon basis of their
//! rational span, with each row scaled to a primitive integer vector.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::ClassifyError;
use crate::exactlin::{rank_of, IntVector};

/// A subspace found by a census, with its root counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceRecord {
    /// Reduced echelon basis of the span, rows primitive.
    pub basis: Vec<Vec<i64>>,
    pub long_roots: usize,
    pub short_roots: usize,
    /// Spanned by standard basis vectors.
    pub standard: bool,
    /// For 3-spaces: a `±1` vector on four coordinates whose orthogonal
    /// complement within their span is this subspace.
    pub complement_of: Option<Vec<i64>>,
}

impl SubspaceRecord {
    pub fn roots(&self) -> usize {
        self.long_roots + self.short_roots
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCensus {
    pub n: usize,
    /// Number of distinct planes spanned by pairs of roots.
    pub planes: usize,
    /// Planes with at least 8 roots.
    pub large: Vec<SubspaceRecord>,
    /// Large planes that are not standard or do not hold exactly 4 long and
    /// 4 short roots.
    pub violations: Vec<SubspaceRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceCensus {
    pub n: usize,
    /// Number of distinct 3-spaces spanned by triples of long roots.
    pub spaces: usize,
    /// 3-spaces with at least 12 long roots.
    pub large: Vec<SubspaceRecord>,
    /// Every complement of a `±1` vector on four coordinates, whether or not
    /// it was reached by the census.
    pub complements: Vec<SubspaceRecord>,
    /// Large spaces of neither kind, and complements without exactly 12
    /// long roots.
    pub violations: Vec<SubspaceRecord>,
}

fn check_n(n: usize) -> Result<(), ClassifyError> {
    if !(2..=4).contains(&n) {
        return Err(ClassifyError::Bounds(format!("census rank must be between 2 and 4, got {n}")));
    }
    Ok(())
}

fn long_roots(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; n];
                v[i] = a;
                v[j] = b;
                out.push(v);
            }
        }
    }
    out
}

fn short_roots(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for s in [1, -1] {
            let mut v = vec![0; n];
            v[i] = s;
            out.push(v);
        }
    }
    out
}

fn ints(vs: &[Vec<i64>]) -> Vec<IntVector> {
    vs.iter().map(|v| IntVector::from_i64s(v)).collect()
}

fn span_key(vs: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = vs.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<BigRational>> = vs
        .iter()
        .map(|v| v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut lead = 0;
    for col in 0..cols {
        let Some(p) = (lead..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(p, lead);
        let pivot = rows[lead][col].clone();
        for x in rows[lead].iter_mut() {
            *x = &*x / &pivot;
        }
        for r in 0..rows.len() {
            if r != lead && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let lead_row = rows[lead].clone();
                for (x, y) in rows[r].iter_mut().zip(&lead_row) {
                    *x -= &f * y;
                }
            }
        }
        lead += 1;
    }
    rows.truncate(lead);
    rows.into_iter()
        .map(|row| {
            let den = row.iter().fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
            let ints: Vec<BigInt> = row.iter().map(|q| (q * &den).to_integer()).collect();
            let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            ints.iter().map(|x| (x / &g).to_i64().expect("small entries")).collect()
        })
        .collect()
}

fn contains(basis: &[Vec<i64>], v: &[i64]) -> bool {
    let mut vs = ints(basis);
    vs.push(IntVector::from_i64s(v));
    rank_of(&vs) == basis.len()
}

fn is_standard(basis: &[Vec<i64>]) -> bool {
    let support: Vec<usize> = (0..basis[0].len())
        .filter(|&k| basis.iter().any(|b| b[k] != 0))
        .collect();
    support.len() == basis.len()
}

fn record(basis: Vec<Vec<i64>>, n: usize) -> SubspaceRecord {
    let long_roots = long_roots(n).iter().filter(|r| contains(&basis, r)).count();
    let short_roots = short_roots(n).iter().filter(|r| contains(&basis, r)).count();
    SubspaceRecord {
        standard: is_standard(&basis),
        basis,
        long_roots,
        short_roots,
        complement_of: None,
    }
}

/// Vectors `e_i ± e_j ± e_l ± e_s` over all 4-subsets of coordinates.
fn four_sign_vectors(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if n < 4 {
        return out;
    }
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                for s in l + 1..n {
                    for signs in 0..8u32 {
                        let mut v = vec![0; n];
                        v[i] = 1;
                        for (bit, k) in [j, l, s].into_iter().enumerate() {
                            v[k] = if signs >> bit & 1 == 0 { 1 } else { -1 };
                        }
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

/// Orthogonal complement of `v` inside the span of its support.
fn complement_basis(v: &[i64]) -> Vec<Vec<i64>> {
    let support: Vec<usize> = (0..v.len()).filter(|&k| v[k] != 0).collect();
    let first = support[0];
    let gens: Vec<Vec<i64>> = support[1..]
        .iter()
        .map(|&k| {
            let mut w = vec![0; v.len()];
            w[first] = v[k];
            w[k] = -v[first];
            w
        })
        .collect();
    span_key(&gens)
}

fn complement_match(basis: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = basis[0].len();
    four_sign_vectors(n)
        .into_iter()
        .find(|v| complement_basis(v) == basis)
}

/// Planes spanned by pairs of roots of B_n, and those holding at least 8.
pub fn roots_in_plane_census(n: usize) -> Result<PlaneCensus, ClassifyError> {
    check_n(n)?;
    let roots: Vec<Vec<i64>> = long_roots(n).into_iter().chain(short_roots(n)).collect();
    let mut planes: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    for (a, r) in roots.iter().enumerate() {
        for s in &roots[a + 1..] {
            let pair = vec![r.clone(), s.clone()];
            if rank_of(&ints(&pair)) == 2 {
                planes.insert(span_key(&pair));
            }
        }
    }
    let total = planes.len();
    let large: Vec<SubspaceRecord> = planes
        .into_iter()
        .map(|b| record(b, n))
        .filter(|r| r.roots() >= 8)
        .collect();
    let violations = large
        .iter()
        .filter(|r| !(r.standard && r.long_roots == 4 && r.short_roots == 4))
        .cloned()
        .collect();
    Ok(PlaneCensus {
        n,
        planes: total,
        large,
        violations,
    })
}

/// 3-spaces spanned by triples of long roots of B_n, and those holding at
/// least 12 long roots.
pub fn long_roots_3space_census(n: usize) -> Result<SpaceCensus, ClassifyError> {
    check_n(n)?;
    let roots = long_roots(n);
    let mut spaces: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    for a in 0..roots.len() {
        for b in a + 1..roots.len() {
            for c in b + 1..roots.len() {
                let triple = vec![roots[a].clone(), roots[b].clone(), roots[c].clone()];
                if rank_of(&ints(&triple)) == 3 {
                    spaces.insert(span_key(&triple));
                }
            }
        }
    }
    let total = spaces.len();
    let large: Vec<SubspaceRecord> = spaces
        .into_iter()
        .map(|b| {
            let mut r = record(b, n);
            if !r.standard {
                r.complement_of = complement_match(&r.basis);
            }
            r
        })
        .filter(|r| r.long_roots >= 12)
        .collect();
    let complements: Vec<SubspaceRecord> = four_sign_vectors(n)
        .into_iter()
        .map(|v| {
            let mut r = record(complement_basis(&v), n);
            r.complement_of = Some(v);
            r
        })
        .collect();
    let violations = large
        .iter()
        .filter(|r| !r.standard && r.complement_of.is_none())
        .chain(complements.iter().filter(|r| r.long_roots != 12))
        .cloned()
        .collect();
    Ok(SpaceCensus {
        n,
        spaces: total,
        large,
        complements,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planes() {
        let c2 = roots_in_plane_census(2).unwrap();
        assert_eq!((c2.planes, c2.large.len()), (1, 1));
        assert_eq!(c2.large[0].roots(), 8);
        let c3 = roots_in_plane_census(3).unwrap();
        assert_eq!(c3.large.len(), 3);
        assert!(c3.violations.is_empty());
        let c4 = roots_in_plane_census(4).unwrap();
        assert_eq!(c4.large.len(), 6);
        assert!(c4.violations.is_empty());
        assert!(roots_in_plane_census(5).is_err());
    }

    #[test]
    fn spaces() {
        let c3 = long_roots_3space_census(3).unwrap();
        assert_eq!(c3.spaces, 1);
        assert_eq!(c3.large[0].long_roots, 12);
        let c4 = long_roots_3space_census(4).unwrap();
        assert!(c4.violations.is_empty());
        assert_eq!(c4.complements.len(), 8);
        let standard = c4.large.iter().filter(|r| r.standard).count();
        assert_eq!(standard, 4);
        assert!(c4.large.iter().filter(|r| r.standard).all(|r| r.long_roots == 12));
        let ones = c4.complements.iter().find(|r| r.complement_of == Some(vec![1, 1, 1, 1])).unwrap();
        assert_eq!(ones.long_roots, 12);
    }
}
