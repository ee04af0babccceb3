//! Rectangles of a fixed width-to-height ratio `2^i` and the graph `G`
//! joining pairs that such a rectangle can isolate with few other points.

use serde::{Deserialize, Serialize};

use super::{ceil_log2, Point, PointSet};
use crate::error::{Error, Result};
use crate::hypergraph::Graph;

/// Index `i` of the class of closed rectangles with width `2^i · height`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RatioClass(i32);

impl RatioClass {
    /// Valid for point sets of size `n` when `|i| <= ⌈log₂ n⌉`.
    pub fn new(i: i32, n: usize) -> Result<Self> {
        let bound = ceil_log2(n) as i32;
        if i.abs() > bound {
            return Err(Error::InvalidArgument(format!("ratio class {i} outside -{bound}..={bound}")));
        }
        Ok(RatioClass(i))
    }

    pub fn index(self) -> i32 {
        self.0
    }
}

pub fn ratio_classes(n: usize) -> Vec<RatioClass> {
    let l = ceil_log2(n) as i32;
    (-l..=l).map(RatioClass).collect()
}

/// Counts points of a fixed subset in integer boxes via 2D prefix sums.
struct GridCounter {
    n: i64,
    prefix: Vec<u32>,
}

impl GridCounter {
    fn new(n: usize, pts: impl Iterator<Item = Point>) -> Self {
        let w = n + 1;
        let mut prefix = vec![0u32; w * w];
        for p in pts {
            prefix[p.y as usize * w + p.x as usize] += 1;
        }
        for y in 1..w {
            for x in 1..w {
                prefix[y * w + x] += prefix[y * w + x - 1] + prefix[(y - 1) * w + x] - prefix[(y - 1) * w + x - 1];
            }
        }
        GridCounter { n: n as i64, prefix }
    }

    fn at(&self, x: i64, y: i64) -> u32 {
        let w = self.n + 1;
        self.prefix[(y * w + x) as usize]
    }

    /// Points with `x ∈ [xa, xb]`, `y ∈ [ya, yb]`, ranges clipped to the grid.
    fn count(&self, xa: i64, xb: i64, ya: i64, yb: i64) -> u32 {
        let (xa, xb) = (xa.max(1), xb.min(self.n));
        let (ya, yb) = (ya.max(1), yb.min(self.n));
        if xa > xb || ya > yb {
            return 0;
        }
        self.at(xb, yb) + self.at(xa - 1, ya - 1) - self.at(xa - 1, yb) - self.at(xb, ya - 1)
    }

    /// Fewest counted points in a closed rectangle of ratio `2^i` holding
    /// both `p` and `q`.
    ///
    /// Any such rectangle contains one at the smallest scale that still
    /// reaches both points, so only that scale is searched. A closed window
    /// of real length `W` catches exactly the integer spans `ℓ` with
    /// `W - 2 < ℓ <= W`; the shortest span covering the points is
    /// `max(Δ, ⌊W⌋ - 1)` in each axis, and one axis is always tight.
    fn min_in_ratio_rect(&self, p: Point, q: Point, i: i32) -> u32 {
        let (xmin, xmax) = (p.x.min(q.x) as i64, p.x.max(q.x) as i64);
        let (ymin, ymax) = (p.y.min(q.y) as i64, p.y.max(q.y) as i64);
        let (dx, dy) = (xmax - xmin, ymax - ymin);
        let k = i.unsigned_abs();
        // spans along the axis that is 2^k times longer and the other one
        let (long_d, short_d) = if i >= 0 { (dx, dy) } else { (dy, dx) };
        let (long_span, short_span) = if long_d >= short_d << k {
            (long_d, short_d.max((long_d >> k) - 1))
        } else {
            (long_d.max((short_d << k) - 1), short_d)
        };
        let (lx, ly) = if i >= 0 { (long_span, short_span) } else { (short_span, long_span) };
        let mut best = u32::MAX;
        for xa in window_starts(xmin, xmax, lx) {
            for ya in window_starts(ymin, ymax, ly) {
                best = best.min(self.count(xa, xa + lx, ya, ya + ly));
            }
        }
        best
    }
}

/// Starts `a` of windows `[a, a + len]` holding `[lo, hi]`. Starts left of
/// column 1 all clip to the same left edge, so only the leftmost one is kept.
fn window_starts(lo: i64, hi: i64, len: i64) -> impl Iterator<Item = i64> {
    let first = hi - len;
    let clipped = (first < 1).then_some(first);
    clipped.into_iter().chain(first.max(1)..=lo)
}

/// Fewest points of `p` in a closed rectangle of ratio class `i` that
/// contains both `a` and `b`.
pub fn min_points_ratio_rect(p: &PointSet, a: u32, b: u32, i: RatioClass) -> Result<usize> {
    for v in [a, b] {
        if v as usize >= p.len() {
            return Err(Error::VertexOutOfRange { vertex: v as usize, n: p.len() });
        }
    }
    if a == b {
        return Err(Error::InvalidArgument("the two vertices must differ".into()));
    }
    let grid = GridCounter::new(p.len(), p.points().iter().copied());
    Ok(grid.min_in_ratio_rect(p.point(a), p.point(b), i.index()) as usize)
}

/// Builds `G` for subsets of one point set. Ratio classes are those of the
/// full set.
pub struct RatioGraphBuilder<'a> {
    points: &'a PointSet,
    classes: Vec<i32>,
}

impl<'a> RatioGraphBuilder<'a> {
    pub fn new(points: &'a PointSet) -> Self {
        let classes = ratio_classes(points.len()).into_iter().map(RatioClass::index).collect();
        RatioGraphBuilder { points, classes }
    }

    /// `G` on the points `active`, re-indexed `0..active.len()`: `u ~ v`
    /// when some ratio class has a rectangle holding both with at most
    /// `t + 1` active points.
    pub fn graph(&self, active: &[u32], t: usize) -> Graph {
        let grid = GridCounter::new(self.points.len(), active.iter().map(|&v| self.points.point(v)));
        let mut edges = Vec::new();
        for (a, &u) in active.iter().enumerate() {
            for (b, &v) in active.iter().enumerate().skip(a + 1) {
                let (pu, pv) = (self.points.point(u), self.points.point(v));
                if self.classes.iter().any(|&i| grid.min_in_ratio_rect(pu, pv, i) as usize <= t + 1) {
                    edges.push((a as u32, b as u32));
                }
            }
        }
        Graph::from_edges(active.len(), edges)
    }
}

/// `G` on all of `p`.
pub fn build_g(p: &PointSet, t: usize) -> Graph {
    let all: Vec<u32> = (0..p.len() as u32).collect();
    RatioGraphBuilder::new(p).graph(&all, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ps(c: &[(u32, u32)]) -> PointSet {
        PointSet::from_coords(c).unwrap()
    }

    fn class(i: i32, n: usize) -> RatioClass {
        RatioClass::new(i, n).unwrap()
    }

    #[test]
    fn classes_span_minus_to_plus_log() {
        let c: Vec<i32> = ratio_classes(5).into_iter().map(RatioClass::index).collect();
        assert_eq!(c, vec![-3, -2, -1, 0, 1, 2, 3]);
        assert!(RatioClass::new(4, 5).is_err());
        assert!(RatioClass::new(0, 1).is_ok());
    }

    #[test]
    fn small_examples() {
        let two = ps(&[(1, 1), (2, 2)]);
        assert_eq!(min_points_ratio_rect(&two, 0, 1, class(0, 2)).unwrap(), 2);
        let diag = ps(&[(1, 1), (2, 2), (3, 3)]);
        assert_eq!(min_points_ratio_rect(&diag, 0, 2, class(0, 3)).unwrap(), 3);
        assert_eq!(min_points_ratio_rect(&diag, 0, 1, class(0, 3)).unwrap(), 2);
        assert!(min_points_ratio_rect(&diag, 1, 1, class(0, 3)).is_err());
    }

    #[test]
    fn wide_classes_reach_further_than_the_bounding_box() {
        let p = ps(&[(2, 1), (3, 3), (1, 2), (4, 4)]);
        // a square of side 2 fits columns 2..=3 and rows 1..=3
        assert_eq!(min_points_ratio_rect(&p, 0, 1, class(0, 4)).unwrap(), 2);
        // width 8 at height 2 spans columns 2..=9 and misses (1,2)
        assert_eq!(min_points_ratio_rect(&p, 0, 1, class(2, 4)).unwrap(), 2);
        // (1,4) and (4,1) in the flattest class: every window of height
        // 3 has width 8 and keeps all four points
        let q = ps(&[(1, 4), (4, 1), (2, 2), (3, 3)]);
        assert_eq!(min_points_ratio_rect(&q, 0, 1, class(-2, 4)).unwrap(), 4);
    }

    #[test]
    fn pair_of_two_is_the_floor() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let p = PointSet::random(9, &mut rng);
            for a in 0..9 {
                for b in a + 1..9 {
                    for i in ratio_classes(9) {
                        assert!(min_points_ratio_rect(&p, a, b, i).unwrap() >= 2);
                    }
                }
            }
        }
    }

    #[test]
    fn two_points_form_an_edge() {
        assert_eq!(build_g(&ps(&[(1, 2), (2, 1)]), 1).num_edges(), 1);
    }

    #[test]
    fn subset_graph_matches_graph_of_the_subset_alone() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = PointSet::random(10, &mut rng);
        let active = [0u32, 2, 3, 7, 9];
        let g = RatioGraphBuilder::new(&p).graph(&active, 2);
        // the same points with every other point removed from the grid
        for (a, &u) in active.iter().enumerate() {
            for (b, &v) in active.iter().enumerate().skip(a + 1) {
                let grid = GridCounter::new(10, active.iter().map(|&w| p.point(w)));
                let close = ratio_classes(10)
                    .into_iter()
                    .any(|i| grid.min_in_ratio_rect(p.point(u), p.point(v), i.index()) <= 3);
                assert_eq!(g.has_edge(a as u32, b as u32), close);
            }
        }
    }

    #[test]
    fn graph_grows_with_t() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..5 {
            let p = PointSet::random(12, &mut rng);
            let mut prev = build_g(&p, 1);
            for t in 2..5 {
                let g = build_g(&p, t);
                assert!(prev.is_subgraph_of(&g));
                prev = g;
            }
        }
    }
}
