//! Planar point sets and the geometric range spaces built on them.
//!
//! Points live on the `n × n` integer grid with one point per row and per
//! column. All predicates are exact integer arithmetic.

mod disc;
mod ranges;
mod ratio;
mod rect;
mod sparsity;

pub use disc::{disc_hypergraph, Disc};
pub use ranges::{interval_hypergraph, rectangle_hypergraph};
pub use ratio::{build_g, min_points_ratio_rect, ratio_classes, RatioClass, RatioGraphBuilder};
pub use rect::{min_bounding_rect, ratio_cover, Corner, Location, Rect, Side};
pub use sparsity::{build_gt, hld_parameter};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: u32,
    pub y: u32,
}

/// `n` points whose x- and y-coordinates are each a permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u32)>", into = "Vec<(u32, u32)>")]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let n = points.len();
        let mut seen_x = vec![false; n + 1];
        let mut seen_y = vec![false; n + 1];
        for p in &points {
            for (c, seen, axis) in [(p.x, &mut seen_x, 'x'), (p.y, &mut seen_y, 'y')] {
                let c = c as usize;
                if c == 0 || c > n || seen[c] {
                    return Err(Error::InvalidInput(format!(
                        "{axis}-coordinates must be a permutation of 1..={n}"
                    )));
                }
                seen[c] = true;
            }
        }
        Ok(PointSet { points })
    }

    pub fn from_coords(coords: &[(u32, u32)]) -> Result<Self> {
        PointSet::new(coords.iter().map(|&(x, y)| Point { x, y }).collect())
    }

    /// Uniformly random point set: a random permutation of the y-ranks
    /// over the x-ranks, listed in random order.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        let mut ys: Vec<u32> = (1..=n as u32).collect();
        ys.shuffle(rng);
        let mut points: Vec<Point> = ys.into_iter().enumerate().map(|(i, y)| Point { x: i as u32 + 1, y }).collect();
        points.shuffle(rng);
        PointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, v: u32) -> Point {
        self.points[v as usize]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Vertex sitting in each column, indexed by `x - 1`.
    pub(crate) fn by_column(&self) -> Vec<u32> {
        let mut col = vec![0; self.len()];
        for (v, p) in self.points.iter().enumerate() {
            col[p.x as usize - 1] = v as u32;
        }
        col
    }
}

impl TryFrom<Vec<(u32, u32)>> for PointSet {
    type Error = Error;
    fn try_from(v: Vec<(u32, u32)>) -> Result<Self> {
        PointSet::from_coords(&v)
    }
}

impl From<PointSet> for Vec<(u32, u32)> {
    fn from(p: PointSet) -> Self {
        p.points.into_iter().map(|p| (p.x, p.y)).collect()
    }
}

/// Replaces each coordinate by its 1-based rank. Ties on one axis are broken
/// by the other coordinate, then by input position.
pub fn rank_normalize(raw: &[(f64, f64)]) -> Result<PointSet> {
    if raw.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
        return Err(Error::InvalidInput("coordinates must be finite".into()));
    }
    let mut sorted: Vec<usize> = (0..raw.len()).collect();
    sorted.sort_by(|&a, &b| raw[a].0.total_cmp(&raw[b].0).then(raw[a].1.total_cmp(&raw[b].1)));
    for w in sorted.windows(2) {
        if raw[w[0]] == raw[w[1]] {
            return Err(Error::InvalidInput(format!("duplicate point {:?}", raw[w[0]])));
        }
    }
    let rank_by = |key: &dyn Fn(usize, usize) -> std::cmp::Ordering| {
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by(|&a, &b| key(a, b).then(a.cmp(&b)));
        let mut rank = vec![0u32; raw.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r as u32 + 1;
        }
        rank
    };
    let xr = rank_by(&|a, b| raw[a].0.total_cmp(&raw[b].0).then(raw[a].1.total_cmp(&raw[b].1)));
    let yr = rank_by(&|a, b| raw[a].1.total_cmp(&raw[b].1).then(raw[a].0.total_cmp(&raw[b].0)));
    PointSet::new(xr.into_iter().zip(yr).map(|(x, y)| Point { x, y }).collect())
}

/// `⌈log₂ n⌉`, with `0` for `n <= 1`.
pub fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}
