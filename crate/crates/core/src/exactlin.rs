//! Exact integer and rational linear algebra.
//!
//! Everything here is arbitrary precision: vectors hold [`BigInt`] coordinates
//! and matrices hold reduced [`BigRational`] entries. There is no floating
//! point anywhere in the crate, and these are the primitives the lattice code
//! is built on.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A vector of arbitrary-precision integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        IntVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    /// The `i`-th standard basis vector of length `dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|c| c * k).collect())
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        assert_eq!(self.dim(), other.dim(), "dot product of mismatched vectors");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &IntVector) -> IntVector {
        let mut coords = self.0.clone();
        coords.extend(other.0.iter().cloned());
        IntVector(coords)
    }

    /// Coordinates `range` as a new vector.
    pub fn slice(&self, range: std::ops::Range<usize>) -> IntVector {
        IntVector(self.0[range].to_vec())
    }

    /// Gcd of all coordinates (zero for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact division of every coordinate, or `None` if `k` does not divide.
    pub fn div_exact(&self, k: &BigInt) -> Option<IntVector> {
        if k.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.dim());
        for c in &self.0 {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(IntVector(out))
    }

    /// The coordinates as machine integers, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        self.0.iter().map(|c| BigRational::from_integer(c.clone())).collect()
    }
}

impl From<Vec<BigInt>> for IntVector {
    fn from(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }
}

impl std::ops::Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl fmt::Display for IntVector {
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

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.dim(), rhs.dim(), "adding mismatched vectors");
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.dim(), rhs.dim(), "subtracting mismatched vectors");
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Add for IntVector {
    type Output = IntVector;
    fn add(self, rhs: IntVector) -> IntVector {
        &self + &rhs
    }
}

impl Sub for IntVector {
    type Output = IntVector;
    fn sub(self, rhs: IntVector) -> IntVector {
        &self - &rhs
    }
}

impl Neg for IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        -&self
    }
}

/// A dense row-major matrix of rationals, each stored in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    /// # Panics
    ///
    /// If `entries.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        RatMatrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix::new(rows, cols, vec![BigRational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row.iter().map(|&x| BigRational::from_integer(x.into())));
        }
        RatMatrix::new(rows.len(), cols, entries)
    }

    /// The matrix whose rows are the given integer vectors.
    pub fn from_int_rows(rows: &[IntVector]) -> Self {
        let cols = rows.first().map_or(0, IntVector::dim);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.dim(), cols, "ragged rows");
            entries.extend(row.iter().map(|x| BigRational::from_integer(x.clone())));
        }
        RatMatrix::new(rows.len(), cols, entries)
    }

    /// The matrix whose columns are the given integer vectors.
    pub fn from_int_columns(cols: &[IntVector]) -> Self {
        Self::from_int_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = BigRational::zero();
                for k in 0..self.cols {
                    acc += self.get(r, k) * rhs.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `self * v` for an integer vector, provided the result is integral.
    pub fn mul_int_vector(&self, v: &IntVector) -> Option<IntVector> {
        let out = self.mul_vec(&v.to_rationals());
        out.into_iter()
            .map(|q| q.is_integer().then(|| q.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntVector::new)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(BigRational::is_integer)
    }

    /// Largest absolute value among the entries.
    pub fn max_abs_entry(&self) -> BigRational {
        self.entries
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    /// Determinant of a square matrix, by fraction-free elimination.
    pub fn determinant(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigRational::one();
        }
        let (mut rows, scale) = self.integer_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !rows[r][k].is_zero()) else {
                return BigRational::zero();
            };
            if p != k {
                rows.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &rows[i][j] * &rows[k][k] - &rows[i][k] * &rows[k][j];
                    rows[i][j] = v / &prev;
                }
                rows[i][k] = BigInt::zero();
            }
            prev = rows[k][k].clone();
        }
        BigRational::new(sign * prev, scale)
    }

    /// Rows scaled to integers, together with the product of the row scales.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut total = BigInt::one();
        let rows = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                total *= &l;
                row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
            })
            .collect();
        (rows, total)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

/// Rank over the rationals, by fraction-free (Bareiss) elimination.
pub fn rank(m: &RatMatrix) -> usize {
    let (rows, _) = m.integer_rows();
    integer_rank(rows, m.cols)
}

/// Rank of the span of a list of integer vectors.
pub fn rank_of(vectors: &[IntVector]) -> usize {
    let cols = vectors.first().map_or(0, IntVector::dim);
    integer_rank(vectors.iter().map(|v| v.coords().to_vec()).collect(), cols)
}

fn integer_rank(mut rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(p, rank);
        for i in rank + 1..rows.len() {
            for j in col + 1..cols {
                let v = &rows[i][j] * &rows[rank][col] - &rows[i][col] * &rows[rank][j];
                rows[i][j] = v / &prev;
            }
            rows[i][col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Some `x` with `A x = b`, or `None` when the system is inconsistent.
///
/// Free variables are set to zero, so a square invertible system returns its
/// unique solution.
pub fn solve_exact(a: &RatMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.rows(), b.len(), "right-hand side has the wrong length");
    let (rows, cols) = (a.rows(), a.cols());
    let mut aug: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut lead = 0;
    for col in 0..cols {
        let Some(p) = (lead..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(p, lead);
        let inv = aug[lead][col].recip();
        for x in aug[lead].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != lead && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=cols {
                    let delta = &f * &aug[lead][c];
                    aug[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        lead += 1;
        if lead == rows {
            break;
        }
    }
    if aug[lead..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Hermite normal form basis of the integer lattice spanned by `vectors`.
///
/// Rows come out in echelon order with strictly increasing pivot columns,
/// positive pivots, and every entry above a pivot reduced into `[0, pivot)`.
/// The result depends only on the lattice, not on the generators.
pub fn hermite_basis(vectors: &[IntVector]) -> Vec<IntVector> {
    let Some(first) = vectors.first() else {
        return Vec::new();
    };
    let cols = first.dim();
    let mut rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .inspect(|v| assert_eq!(v.dim(), cols, "vectors of mixed dimension"))
        .filter(|v| !v.is_zero())
        .map(|v| v.coords().to_vec())
        .collect();

    let mut lead = 0;
    for col in 0..cols {
        if lead == rows.len() {
            break;
        }
        // Euclid on column `col` among rows lead.., until one non-zero remains.
        loop {
            let nonzero: Vec<usize> = (lead..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .collect();
            if nonzero.is_empty() {
                break;
            }
            let p = *nonzero
                .iter()
                .min_by_key(|&&r| rows[r][col].abs())
                .expect("non-empty");
            rows.swap(p, lead);
            if nonzero.len() == 1 && (p == lead || nonzero[0] == p) {
                break;
            }
            let pivot = rows[lead][col].clone();
            for r in lead + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&pivot);
                if !q.is_zero() {
                    let lead_row = rows[lead].clone();
                    for (x, y) in rows[r].iter_mut().zip(&lead_row) {
                        *x -= &q * y;
                    }
                }
            }
        }
        if rows[lead][col].is_zero() {
            continue;
        }
        if rows[lead][col].is_negative() {
            for x in rows[lead].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot = rows[lead][col].clone();
        for r in 0..lead {
            let q = rows[r][col].div_floor(&pivot);
            if !q.is_zero() {
                let lead_row = rows[lead].clone();
                for (x, y) in rows[r].iter_mut().zip(&lead_row) {
                    *x -= &q * y;
                }
            }
        }
        lead += 1;
    }
    rows.truncate(lead);
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    rows.into_iter().map(IntVector::new).collect()
}

/// A deterministic `n x n` integer matrix of determinant `±1`.
///
/// Built from `seed` by composing elementary row operations (transvections
/// with small multipliers, swaps and sign flips). A draw whose entries exceed
/// `entry_bound` in absolute value is discarded and the sequence continues
/// from the same generator, so the output is a pure function of the inputs.
pub fn random_unimodular(n: usize, seed: u64, entry_bound: u64) -> RatMatrix {
    assert!(n >= 1, "random_unimodular needs n >= 1");
    assert!(entry_bound >= 1, "entry bound must be positive");
    let bound = BigInt::from(entry_bound);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let steps = 3 * n + 2;
    loop {
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(i32::from(i == j))).collect())
            .collect();
        let mut ok = true;
        for _ in 0..steps {
            match rng.gen_range(0..4u8) {
                0 | 1 if n > 1 => {
                    let i = rng.gen_range(0..n);
                    let mut j = rng.gen_range(0..n - 1);
                    if j >= i {
                        j += 1;
                    }
                    let k = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 });
                    let src = m[j].clone();
                    for (x, y) in m[i].iter_mut().zip(&src) {
                        *x += &k * y;
                    }
                }
                2 if n > 1 => {
                    let i = rng.gen_range(0..n);
                    let j = rng.gen_range(0..n);
                    m.swap(i, j);
                }
                _ => {
                    let i = rng.gen_range(0..n);
                    for x in m[i].iter_mut() {
                        *x = -&*x;
                    }
                }
            }
            if m.iter().flatten().any(|x| x.abs() > bound) {
                ok = false;
                break;
            }
        }
        if ok {
            let entries = m
                .into_iter()
                .flatten()
                .map(BigRational::from_integer)
                .collect();
            return RatMatrix::new(n, n, entries);
        }
    }
}
