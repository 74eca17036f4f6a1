//! Exhaustive search for faithful rectangular sums of distinct irreducibles.
//!
//! Weights are compared in an additive total order: first by height (the sum
//! of simple-root coordinates), then lexicographically. Positive roots are
//! positive in this order, so every weight of an irreducible is at most its
//! highest weight, and the largest point `c0` of a rectangular set `S` is a
//! box vertex and the highest weight of one of its summands.
//!
//! Irreducibles are decided one at a time in decreasing order of highest
//! weight. After deciding everything above a threshold, the points of `S`
//! above it are final. In `D = c0 - S` they are the smallest elements, and
//! all sums producing them use smaller elements, so the additively
//! irreducible elements (the box edges) among them are already determined.
//! A branch dies as soon as those edges are too many, dependent, or fail to
//! generate the final points downward. Once `rank` edges are known, the box
//! is fixed by `Σ d_i w_i = 2 c0` and the branch ends with one check that
//! the rest of the box splits into undecided irreducibles.
//!
//! Nothing here uses the classification itself; the only inputs are
//! characters and the box geometry.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::ops::Range;
use std::rc::Rc;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{canonical_form, ClassifyError, MAX_ENUM_DIM, MAX_ENUM_RANK};
use crate::charcalc::{
    character_of, irreducible_character, is_faithful, is_multiplicity_free, weyl_dimension,
    RepSpec,
};
use crate::liealg::{weyl_orbit, Family, RootSystem, SemisimpleAlgebra, SimpleType, Weight};
use crate::rectkit::{detect_rectangular, lengths, RectCertificate, WeightMultiset};

/// One rectangular representation found by the search, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedRep {
    pub spec: RepSpec,
    pub certificate: RectCertificate,
    /// Lengths padded to the algebra rank.
    pub lengths: Vec<u64>,
}

impl EnumeratedRep {
    pub fn algebra(&self) -> &SemisimpleAlgebra {
        self.spec.algebra()
    }
}

/// Size of a search, for dry runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationEstimate {
    pub algebras: usize,
    pub candidate_irreps: usize,
}

fn check_bounds(max_rank: usize, max_dim: u64) -> Result<(), ClassifyError> {
    if max_rank == 0 || max_rank > MAX_ENUM_RANK {
        return Err(ClassifyError::Bounds(format!(
            "max rank must be between 1 and {MAX_ENUM_RANK}, got {max_rank}"
        )));
    }
    if max_dim == 0 || max_dim > MAX_ENUM_DIM {
        return Err(ClassifyError::Bounds(format!(
            "max dimension must be between 1 and {MAX_ENUM_DIM}, got {max_dim}"
        )));
    }
    Ok(())
}

fn simple_types_of_rank(r: usize) -> Vec<SimpleType> {
    let mut out = BTreeSet::new();
    for f in Family::ALL {
        if let Ok(t) = SimpleType::new(f, r) {
            if t.rank() == r {
                out.insert(t);
            }
        }
    }
    out.into_iter().collect()
}

/// One algebra per isomorphism class of total rank at most `max_rank`, with
/// factors sorted.
pub fn algebras_up_to(max_rank: usize) -> Vec<SemisimpleAlgebra> {
    let simple: Vec<SimpleType> = (1..=max_rank).flat_map(simple_types_of_rank).collect();
    let mut out = Vec::new();
    // Non-decreasing sequences of simple types.
    let mut stack: Vec<(usize, usize, Vec<SimpleType>)> = vec![(0, 0, Vec::new())];
    while let Some((start, rank, factors)) = stack.pop() {
        if !factors.is_empty() {
            out.push(SemisimpleAlgebra::new(factors.clone()).expect("non-empty"));
        }
        for (k, t) in simple.iter().enumerate().skip(start) {
            if rank + t.rank() <= max_rank {
                let mut next = factors.clone();
                next.push(*t);
                stack.push((k, rank + t.rank(), next));
            }
        }
    }
    out.sort_by(|a, b| (a.rank(), a.factors()).cmp(&(b.rank(), b.factors())));
    out
}

/// Dominant weights of `t` whose irreducible has dimension at most `max_dim`.
pub(crate) fn dominant_weights_up_to(t: SimpleType, max_dim: u64) -> Vec<Vec<i64>> {
    let alg = SemisimpleAlgebra::simple(t);
    let n = t.rank();
    let dim = |v: &[i64]| -> u64 {
        let mut full = v.to_vec();
        full.resize(n, 0);
        weyl_dimension(&alg, &Weight::from_i64s(&full))
            .expect("dominant")
            .to_u64()
            .unwrap_or(u64::MAX)
    };
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = vec![Vec::new()];
    // The dimension grows strictly in every coordinate, so a prefix padded
    // with zeros bounds every completion from below.
    while let Some(prefix) = stack.pop() {
        if prefix.len() == n {
            out.push(prefix);
            continue;
        }
        let mut x = 0;
        loop {
            let mut next = prefix.clone();
            next.push(x);
            if dim(&next) > max_dim {
                break;
            }
            stack.push(next);
            x += 1;
        }
    }
    out.sort();
    out
}

/// Highest weights of the weight-multiplicity-free irreducibles of `t` of
/// dimension at most `max_dim`, the trivial one included.
pub fn multiplicity_free_irreps(t: SimpleType, max_dim: u64) -> Vec<Weight> {
    let alg = SemisimpleAlgebra::simple(t);
    dominant_weights_up_to(t, max_dim)
        .into_iter()
        .map(|v| Weight::from_i64s(&v))
        .filter(|hw| is_multiplicity_free(&irreducible_character(&alg, hw).expect("dominant")))
        .collect()
}

struct Candidate {
    hw: Vec<i64>,
    key: Vec<i64>,
    points: Vec<Vec<i64>>,
    dim: u64,
}

/// Coefficients of the height functional, scaled to integers.
fn height_coefficients(algebra: &SemisimpleAlgebra) -> Vec<i64> {
    let scale = algebra
        .factors()
        .iter()
        .fold(1i64, |acc, t| acc.lcm(&t.root_system().inv_den));
    let mut out = Vec::with_capacity(algebra.rank());
    for t in algebra.factors() {
        let rs = t.root_system();
        for j in 0..t.rank() {
            let col: i64 = (0..t.rank()).map(|i| rs.inv[i][j]).sum();
            out.push(col * (scale / rs.inv_den));
        }
    }
    out
}

fn key_of(hcoef: &[i64], p: &[i64]) -> Vec<i64> {
    let mut key = Vec::with_capacity(p.len() + 1);
    key.push(hcoef.iter().zip(p).map(|(h, x)| h * x).sum());
    key.extend_from_slice(p);
    key
}

fn candidates(algebra: &SemisimpleAlgebra, max_dim: u64, hcoef: &[i64]) -> Vec<Candidate> {
    let mut acc: Vec<(Vec<i64>, u64)> = vec![(Vec::new(), 1)];
    for t in algebra.factors() {
        let single = SemisimpleAlgebra::simple(*t);
        let irreps: Vec<(Vec<i64>, u64)> = multiplicity_free_irreps(*t, max_dim)
            .into_iter()
            .map(|hw| {
                let d = weyl_dimension(&single, &hw).expect("dominant").to_u64().expect("small");
                (hw.to_i64s().expect("small"), d)
            })
            .collect();
        acc = acc
            .iter()
            .flat_map(|(prefix, d)| {
                irreps.iter().filter_map(move |(hw, e)| {
                    let dim = d * e;
                    (dim <= max_dim).then(|| {
                        let mut v = prefix.clone();
                        v.extend_from_slice(hw);
                        (v, dim)
                    })
                })
            })
            .collect();
    }
    let mut out: Vec<Candidate> = acc
        .into_iter()
        .map(|(hw, dim)| {
            let c = irreducible_character(algebra, &Weight::from_i64s(&hw)).expect("dominant");
            let mut points: Vec<Vec<i64>> = c
                .entries()
                .keys()
                .map(|w| w.to_i64s().expect("small"))
                .collect();
            points.sort_by_cached_key(|p| std::cmp::Reverse(key_of(hcoef, p)));
            Candidate {
                key: key_of(hcoef, &hw),
                hw,
                points,
                dim,
            }
        })
        .collect();
    out.sort_by(|a, b| b.key.cmp(&a.key));
    out
}

struct Ctx<'a> {
    n: usize,
    factors: &'a [(Arc<RootSystem>, Range<usize>)],
    lines: RefCell<HashMap<Vec<i64>, Rc<Vec<Vec<i64>>>>>,
    max_dim: u64,
    cands: &'a [Candidate],
    by_hw: &'a HashMap<Vec<i64>, usize>,
    hcoef: &'a [i64],
    c0: Vec<i64>,
}

#[derive(Clone)]
struct State {
    included: Vec<usize>,
    occupied: HashSet<Vec<i64>>,
    /// Keys of included points not yet final.
    pending: BTreeSet<Vec<i64>>,
    /// Final elements of `D = c0 - S` with their coefficients over `edges`.
    coords: HashMap<Vec<i64>, Vec<i64>>,
    /// Nonzero final elements of `D`, in increasing order.
    order: Vec<Vec<i64>>,
    edges: Vec<Vec<i64>>,
    /// Lines through the Weyl orbits of the edges.
    lines: Vec<Vec<i64>>,
    mass: u64,
}

enum Step {
    Open,
    Dead,
    Complete,
}

/// Primitive representative of the line through `v`, first nonzero entry
/// positive.
fn line_of(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, x| acc.gcd(x));
    let sign = v.iter().find(|&&x| x != 0).map_or(1, |x| x.signum());
    v.iter().map(|x| x / g * sign).collect()
}

impl Ctx<'_> {
    /// Lines through the Weyl orbit of `v`. The Weyl group maps the box to
    /// itself, so it permutes the lines through its edges.
    fn orbit_lines(&self, v: &[i64]) -> Rc<Vec<Vec<i64>>> {
        if let Some(hit) = self.lines.borrow().get(v) {
            return hit.clone();
        }
        let mut acc: Vec<Vec<i64>> = vec![Vec::new()];
        for (rs, range) in self.factors {
            let start = v[range.clone()].to_vec();
            let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
            let mut queue = vec![start];
            while let Some(x) = queue.pop() {
                for i in 0..range.len() {
                    let mut y = x.clone();
                    rs.reflect(&mut y, i);
                    if seen.insert(y.clone()) {
                        queue.push(y);
                    }
                }
            }
            acc = acc
                .iter()
                .flat_map(|prefix| {
                    seen.iter().map(move |b| {
                        let mut w = prefix.clone();
                        w.extend_from_slice(b);
                        w
                    })
                })
                .collect();
        }
        let set: BTreeSet<Vec<i64>> = acc.iter().map(|w| line_of(w)).collect();
        let out = Rc::new(set.into_iter().collect::<Vec<_>>());
        self.lines.borrow_mut().insert(v.to_vec(), out.clone());
        out
    }

    /// Edge lines after adding `u`, if they can still belong to a box.
    fn extended_lines(&self, known: &[Vec<i64>], u: &[i64]) -> Option<Vec<Vec<i64>>> {
        let mut lines = known.to_vec();
        for l in self.orbit_lines(u).iter() {
            if !lines.contains(l) {
                lines.push(l.clone());
            }
        }
        if lines.len() > self.n {
            return None;
        }
        let refs: Vec<&[i64]> = lines.iter().map(Vec::as_slice).collect();
        independent(&refs).then_some(lines)
    }
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl State {
    fn include(&mut self, ctx: &Ctx<'_>, j: usize) {
        let c = &ctx.cands[j];
        self.included.push(j);
        self.mass += c.dim;
        for p in &c.points {
            self.occupied.insert(p.clone());
            self.pending.insert(key_of(ctx.hcoef, p));
        }
    }

    /// Coefficients of a new final element `u`, or `None` if it breaks the
    /// box structure. `Err` carries the coefficients of a new edge.
    fn classify_element(&self, ctx: &Ctx<'_>, u: &[i64]) -> Option<Result<Vec<i64>, Vec<i64>>> {
        if u.iter().all(|&x| x == 0) {
            return Some(Ok(vec![0; ctx.n]));
        }
        let mut coeffs = None;
        for a in &self.order {
            let b = sub(u, a);
            if let Some(cb) = self.coords.get(&b) {
                let ca = &self.coords[a];
                coeffs = Some(ca.iter().zip(cb).map(|(x, y)| x + y).collect::<Vec<i64>>());
                break;
            }
        }
        let (c, new_edge) = match coeffs {
            Some(c) => (c, false),
            None => {
                if self.edges.len() == ctx.n {
                    return None;
                }
                let mut vs: Vec<&[i64]> = self.edges.iter().map(Vec::as_slice).collect();
                vs.push(u);
                if !independent(&vs) || ctx.extended_lines(&self.lines, u).is_none() {
                    return None;
                }
                let mut c = vec![0; ctx.n];
                c[self.edges.len()] = 1;
                (c, true)
            }
        };
        // Boxes are closed downward along every edge an element uses.
        for (i, e) in self.edges.iter().enumerate() {
            if c[i] > 0 && !self.coords.contains_key(&sub(u, e)) {
                return None;
            }
        }
        Some(if new_edge { Err(c) } else { Ok(c) })
    }

    fn insert(&mut self, ctx: &Ctx<'_>, u: Vec<i64>) -> bool {
        match self.classify_element(ctx, &u) {
            None => false,
            Some(Ok(c)) => {
                if u.iter().any(|&x| x != 0) {
                    self.order.push(u.clone());
                }
                self.coords.insert(u, c);
                true
            }
            Some(Err(c)) => {
                self.lines = ctx.extended_lines(&self.lines, &u).expect("checked");
                self.edges.push(u.clone());
                self.order.push(u.clone());
                self.coords.insert(u, c);
                true
            }
        }
    }

    /// Makes every pending point with key above `bound` final.
    fn advance(&mut self, ctx: &Ctx<'_>, bound: Option<&[i64]>) -> Step {
        while let Some(top) = self.pending.last() {
            if bound.is_some_and(|b| top.as_slice() <= b) {
                break;
            }
            let key = self.pending.pop_last().expect("non-empty");
            let u = sub(&ctx.c0, &key[1..]);
            if !self.insert(ctx, u) {
                return Step::Dead;
            }
            if self.edges.len() == ctx.n {
                return Step::Complete;
            }
        }
        Step::Open
    }

    /// With all edges known, the box is fixed; the rest of it must split
    /// into undecided irreducibles (indices `next` and beyond).
    fn finish(&self, ctx: &Ctx<'_>, next: usize) -> Option<Vec<usize>> {
        let frame = Frame::new(&self.edges)?;
        let twice: Vec<i64> = ctx.c0.iter().map(|x| 2 * x).collect();
        let degrees = frame.coefficients(&twice)?;
        if degrees.iter().any(|&d| d < 1) {
            return None;
        }
        let size = degrees
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d as u64 + 1))?;
        if size > ctx.max_dim || self.mass > size {
            return None;
        }
        for p in &self.occupied {
            let c = frame.coefficients(&sub(&ctx.c0, p))?;
            if c.iter().zip(&degrees).any(|(x, d)| *x < 0 || x > d) {
                return None;
            }
        }
        let mut rest: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut counter = vec![0i64; ctx.n];
        loop {
            let mut p = ctx.c0.clone();
            for (e, &c) in self.edges.iter().zip(&counter) {
                for (x, y) in p.iter_mut().zip(e) {
                    *x -= c * y;
                }
            }
            if !self.occupied.contains(&p) {
                rest.insert(key_of(ctx.hcoef, &p));
            }
            // Odometer over the coefficient box.
            let mut k = 0;
            while k < ctx.n && counter[k] == degrees[k] {
                counter[k] = 0;
                k += 1;
            }
            if k == ctx.n {
                break;
            }
            counter[k] += 1;
        }
        let mut chosen = self.included.clone();
        while let Some(top) = rest.last() {
            let idx = *ctx.by_hw.get(&top[1..])?;
            if idx < next {
                return None;
            }
            for p in &ctx.cands[idx].points {
                if !rest.remove(&key_of(ctx.hcoef, p)) {
                    return None;
                }
            }
            chosen.push(idx);
        }
        chosen.sort_unstable();
        Some(chosen)
    }
}

fn minor(m: &[Vec<i128>], row: usize, col: usize) -> Vec<Vec<i128>> {
    m.iter()
        .enumerate()
        .filter(|&(r, _)| r != row)
        .map(|(_, line)| {
            line.iter()
                .enumerate()
                .filter(|&(c, _)| c != col)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// Cofactor expansion; matrices here have size at most the enumeration rank.
fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor(m, 0, j))
            })
            .sum(),
    }
}

/// The edges of a complete box as a basis: coordinates by Cramer's rule.
struct Frame {
    adj: Vec<Vec<i128>>,
    det: i128,
}

impl Frame {
    fn new(edges: &[Vec<i64>]) -> Option<Frame> {
        let n = edges.len();
        let m: Vec<Vec<i128>> = (0..n)
            .map(|i| edges.iter().map(|e| i128::from(e[i])).collect())
            .collect();
        let d = det(&m);
        if d == 0 {
            return None;
        }
        let adj = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                        sign * det(&minor(&m, i, j))
                    })
                    .collect()
            })
            .collect();
        Some(Frame { adj, det: d })
    }

    /// Integer coefficients of `v` over the edges, if they exist.
    fn coefficients(&self, v: &[i64]) -> Option<Vec<i64>> {
        self.adj
            .iter()
            .map(|row| {
                let num: i128 = row.iter().zip(v).map(|(a, &x)| a * i128::from(x)).sum();
                (num % self.det == 0).then(|| (num / self.det) as i64)
            })
            .collect()
    }
}

/// Linear independence over the rationals, by fraction-free elimination.
fn independent(vectors: &[&[i64]]) -> bool {
    let mut rows: Vec<Vec<i128>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut lead = 0;
    for col in 0..cols {
        let Some(p) = (lead..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(p, lead);
        for r in lead + 1..rows.len() {
            let (a, b) = (rows[lead][col], rows[r][col]);
            if b == 0 {
                continue;
            }
            let g = a.abs().gcd(&b.abs());
            let (fa, fb) = (a / g, b / g);
            let lead_row = rows[lead].clone();
            for (x, y) in rows[r].iter_mut().zip(&lead_row) {
                *x = *x * fa - y * fb;
            }
        }
        lead += 1;
        if lead == rows.len() {
            break;
        }
    }
    lead == rows.len()
}

fn search(ctx: &Ctx<'_>, mut st: State, start: usize, out: &mut Vec<Vec<usize>>) {
    for j in start..ctx.cands.len() {
        match st.advance(ctx, Some(&ctx.cands[j].key)) {
            Step::Dead => return,
            Step::Complete => {
                out.extend(st.finish(ctx, j));
                return;
            }
            Step::Open => {}
        }
        let c = &ctx.cands[j];
        if st.mass + c.dim > ctx.max_dim || c.points.iter().any(|p| st.occupied.contains(p)) {
            continue;
        }
        // The new highest weight is the first point to become final; test
        // it before paying for a copy of the state.
        if st.classify_element(ctx, &sub(&ctx.c0, &c.hw)).is_none() {
            continue;
        }
        let mut child = st.clone();
        child.include(ctx, j);
        search(ctx, child, j + 1, out);
    }
    if let Step::Complete = st.advance(ctx, None) {
        out.extend(st.finish(ctx, ctx.cands.len()));
    }
}

fn search_algebra(algebra: &SemisimpleAlgebra, max_dim: u64) -> Vec<Vec<Vec<i64>>> {
    let n = algebra.rank();
    let hcoef = height_coefficients(algebra);
    let cands = candidates(algebra, max_dim, &hcoef);
    let by_hw: HashMap<Vec<i64>, usize> = cands
        .iter()
        .enumerate()
        .map(|(i, c)| (c.hw.clone(), i))
        .collect();
    let factors: Vec<(Arc<RootSystem>, Range<usize>)> = (0..algebra.num_factors())
        .map(|i| (algebra.factors()[i].root_system(), algebra.block(i)))
        .collect();
    let vertex_bound = 1usize.checked_shl(n as u32).unwrap_or(usize::MAX);
    let results: Vec<Vec<usize>> = (0..cands.len())
        .into_par_iter()
        .flat_map_iter(|i0| {
            let top = &cands[i0];
            let mut out = Vec::new();
            // The orbit of the top vertex consists of box vertices.
            let orbit = weyl_orbit(algebra, &Weight::from_i64s(&top.hw)).expect("valid weight");
            if orbit.len() > vertex_bound {
                return out.into_iter();
            }
            let ctx = Ctx {
                n,
                factors: &factors,
                lines: RefCell::new(HashMap::new()),
                max_dim,
                cands: &cands,
                by_hw: &by_hw,
                hcoef: &hcoef,
                c0: top.hw.clone(),
            };
            let mut st = State {
                included: Vec::new(),
                occupied: HashSet::new(),
                pending: BTreeSet::new(),
                coords: HashMap::new(),
                order: Vec::new(),
                edges: Vec::new(),
                lines: Vec::new(),
                mass: 0,
            };
            st.include(&ctx, i0);
            search(&ctx, st, i0 + 1, &mut out);
            out.into_iter()
        })
        .collect();
    results
        .into_iter()
        .map(|idxs| idxs.into_iter().map(|i| cands[i].hw.clone()).collect())
        .collect()
}

fn finalize(algebra: &SemisimpleAlgebra, hws: Vec<Vec<i64>>) -> Option<EnumeratedRep> {
    let spec = RepSpec::from_weights(
        algebra.clone(),
        hws.iter().map(|h| Weight::from_i64s(h)),
    )
    .ok()?;
    if !is_faithful(&spec) {
        return None;
    }
    let spec = canonical_form(&spec);
    let c = character_of(&spec).ok()?;
    let cert = detect_rectangular(&WeightMultiset::from_character(&c))?.padded_to(spec.algebra().rank());
    Some(EnumeratedRep {
        lengths: lengths(&cert),
        certificate: cert,
        spec,
    })
}

/// All faithful rectangular sums of distinct irreducibles of total dimension
/// at most `max_dim` over one algebra.
pub fn enumerate_for_algebra(
    algebra: &SemisimpleAlgebra,
    max_dim: u64,
) -> Result<Vec<EnumeratedRep>, ClassifyError> {
    check_bounds(algebra.rank(), max_dim)?;
    let mut out: Vec<EnumeratedRep> = search_algebra(algebra, max_dim)
        .into_iter()
        .filter_map(|hws| finalize(algebra, hws))
        .collect();
    out.sort_by(|a, b| a.spec.cmp(&b.spec));
    out.dedup_by(|a, b| a.spec == b.spec);
    Ok(out)
}

/// All faithful rectangular sums of distinct irreducibles over algebras of
/// rank at most `max_rank` (one per isomorphism class), of total dimension
/// at most `max_dim`, in canonical order.
pub fn enumerate_rectangular(max_rank: usize, max_dim: u64) -> Result<Vec<EnumeratedRep>, ClassifyError> {
    check_bounds(max_rank, max_dim)?;
    let mut out = Vec::new();
    for algebra in algebras_up_to(max_rank) {
        out.extend(enumerate_for_algebra(&algebra, max_dim)?);
    }
    out.sort_by(|a, b| {
        (a.spec.algebra().rank(), &a.spec).cmp(&(b.spec.algebra().rank(), &b.spec))
    });
    Ok(out)
}

/// Counts of algebras and candidate irreducibles a search would visit.
pub fn estimate_enumeration(max_rank: usize, max_dim: u64) -> Result<EnumerationEstimate, ClassifyError> {
    check_bounds(max_rank, max_dim)?;
    let algebras = algebras_up_to(max_rank);
    let mut per_type: HashMap<SimpleType, Vec<u64>> = HashMap::new();
    let mut total = 0usize;
    for a in &algebras {
        let mut acc: Vec<u64> = vec![1];
        for t in a.factors() {
            let dims = per_type.entry(*t).or_insert_with(|| {
                let single = SemisimpleAlgebra::simple(*t);
                multiplicity_free_irreps(*t, max_dim)
                    .iter()
                    .map(|hw| weyl_dimension(&single, hw).expect("dominant").to_u64().expect("small"))
                    .collect()
            });
            acc = acc
                .iter()
                .flat_map(|d| dims.iter().map(move |e| d * e))
                .filter(|&d| d <= max_dim)
                .collect();
        }
        total += acc.len();
    }
    Ok(EnumerationEstimate {
        algebras: algebras.len(),
        candidate_irreps: total,
    })
}
