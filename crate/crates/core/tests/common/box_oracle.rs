//! Exhaustive rectangularity oracle over small integer point sets.
//!
//! Tries every vertex, every set of edges drawn from differences to that
//! vertex, and every degree assignment, then rebuilds the box and compares.
//! Shares no code with the library's detector.

use std::collections::BTreeSet;

pub type Point = Vec<i64>;

fn add_scaled(a: &[i64], k: i64, u: &[i64]) -> Point {
    a.iter().zip(u).map(|(x, y)| x + k * y).collect()
}

/// Rank of integer vectors by fraction-free elimination.
pub fn rank(vectors: &[Point]) -> usize {
    let mut rows: Vec<Vec<i128>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let (a, b) = (rows[r][c], rows[i][c]);
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x = *x * a - *y * b;
                }
                let g = rows[i].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    rows[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A box found by the oracle: edges with their degrees.
#[derive(Debug, Clone)]
pub struct FoundBox {
    pub edges: Vec<Point>,
    pub degrees: Vec<i64>,
}

impl FoundBox {
    pub fn lengths(&self) -> Vec<u64> {
        let mut l: Vec<u64> = self.degrees.iter().map(|&d| d as u64 + 1).collect();
        l.sort_unstable();
        l
    }
}

/// Every origin-centred box equal to `points`, over all vertices and edge
/// orders. Empty when the set is not rectangular.
pub fn all_boxes(points: &BTreeSet<Point>, first_only: bool) -> Vec<FoundBox> {
    let mut out = Vec::new();
    let Some(first) = points.iter().next() else {
        return out;
    };
    let n = first.len();
    if points.iter().any(|p| !points.contains(&p.iter().map(|x| -x).collect::<Point>())) {
        return out;
    }
    for v in points {
        let diffs: Vec<Point> = points
            .iter()
            .filter(|p| *p != v)
            .map(|p| p.iter().zip(v).map(|(a, b)| a - b).collect())
            .collect();
        let mut state = Search {
            points,
            v,
            diffs: &diffs,
            n,
            edges: Vec::new(),
            degrees: Vec::new(),
            out: &mut out,
            first_only,
        };
        state.run(0);
        if first_only && !out.is_empty() {
            break;
        }
    }
    out
}

/// Sorted lengths of some origin-centred box equal to `points`.
pub fn box_lengths(points: &BTreeSet<Point>) -> Option<Vec<u64>> {
    all_boxes(points, true).first().map(FoundBox::lengths)
}

struct Search<'a> {
    points: &'a BTreeSet<Point>,
    v: &'a Point,
    diffs: &'a [Point],
    n: usize,
    edges: Vec<Point>,
    degrees: Vec<i64>,
    out: &'a mut Vec<FoundBox>,
    first_only: bool,
}

impl Search<'_> {
    fn run(&mut self, start: usize) {
        let k = self.points.len();
        let volume: usize = self.degrees.iter().map(|&d| d as usize + 1).product();
        if volume == k && self.is_box() {
            self.out.push(FoundBox {
                edges: self.edges.clone(),
                degrees: self.degrees.clone(),
            });
        }
        if self.edges.len() == self.n || volume >= k {
            return;
        }
        for i in start..self.diffs.len() {
            let u = self.diffs[i].clone();
            let mut d = 1;
            while self.points.contains(&add_scaled(self.v, d, &u)) {
                if k.is_multiple_of(volume * (d as usize + 1)) {
                    self.edges.push(u.clone());
                    self.degrees.push(d);
                    self.run(i + 1);
                    self.edges.pop();
                    self.degrees.pop();
                    if self.first_only && !self.out.is_empty() {
                        return;
                    }
                }
                d += 1;
            }
        }
    }

    fn is_box(&self) -> bool {
        let mut far = self.v.iter().map(|x| 2 * x).collect::<Point>();
        for (u, &d) in self.edges.iter().zip(&self.degrees) {
            far = add_scaled(&far, d, u);
        }
        if far.iter().any(|&x| x != 0) || rank(&self.edges) != self.edges.len() {
            return false;
        }
        let mut built = BTreeSet::from([self.v.clone()]);
        for (u, &d) in self.edges.iter().zip(&self.degrees) {
            built = built
                .iter()
                .flat_map(|p| (0..=d).map(move |c| add_scaled(p, c, u)))
                .collect();
        }
        &built == self.points
    }
}
