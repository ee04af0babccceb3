use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Point, PointSet};
use crate::hypergraph::Hypergraph;

/// Closed disc with centre `(cx/den, cy/den)` and squared radius
/// `r2/den²`. All arithmetic is exact in `i128`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disc {
    pub cx: i128,
    pub cy: i128,
    pub den: i128,
    pub r2: i128,
}

impl Disc {
    /// Disc with the segment `ab` as diameter.
    pub fn diametral(a: Point, b: Point) -> Disc {
        let (ax, ay, bx, by) = (a.x as i128, a.y as i128, b.x as i128, b.y as i128);
        Disc { cx: ax + bx, cy: ay + by, den: 2, r2: (ax - bx).pow(2) + (ay - by).pow(2) }
    }

    /// Disc bounded by the circle through three points, `None` when they
    /// are collinear.
    pub fn circumscribed(a: Point, b: Point, c: Point) -> Option<Disc> {
        let [ax, ay, bx, by, cx, cy] = [a.x, a.y, b.x, b.y, c.x, c.y].map(|v| v as i128);
        let mut d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
        if d == 0 {
            return None;
        }
        let (sa, sb, sc) = (ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy);
        let mut ux = sa * (by - cy) + sb * (cy - ay) + sc * (ay - by);
        let mut uy = sa * (cx - bx) + sb * (ax - cx) + sc * (bx - ax);
        if d < 0 {
            d = -d;
            ux = -ux;
            uy = -uy;
        }
        let r2 = (d * ax - ux).pow(2) + (d * ay - uy).pow(2);
        Some(Disc { cx: ux, cy: uy, den: d, r2 })
    }

    /// Offset of `p` from the centre, scaled by `den`.
    fn offset(&self, p: Point) -> (i128, i128) {
        (self.den * p.x as i128 - self.cx, self.den * p.y as i128 - self.cy)
    }

    /// `Less` inside, `Equal` on the circle, `Greater` outside.
    pub fn classify(&self, p: Point) -> Ordering {
        let (dx, dy) = self.offset(p);
        (dx * dx + dy * dy).cmp(&self.r2)
    }

    pub fn contains(&self, p: Point) -> bool {
        self.classify(p) != Ordering::Greater
    }
}

/// Points against closed discs.
///
/// Every hyperedge other than singletons and the whole set is cut by a
/// disc whose circle passes through at least two points: the diametral
/// circle of a pair or the circumcircle of a triple. Nudging such a circle
/// keeps its strict inside and outside and can take in any run of
/// consecutive boundary points along the circle, so each candidate circle
/// contributes its strict inside united with every such run.
pub fn disc_hypergraph(p: &PointSet) -> Hypergraph {
    let n = p.len();
    let mut sets: BTreeSet<Vec<u32>> = (0..n as u32).map(|v| vec![v]).collect();
    if n > 0 {
        sets.insert((0..n as u32).collect());
    }
    let mut add_circle = |d: Disc| {
        let mut inside = Vec::new();
        let mut boundary = Vec::new();
        for v in 0..n as u32 {
            match d.classify(p.point(v)) {
                Ordering::Less => inside.push(v),
                Ordering::Equal => boundary.push(v),
                Ordering::Greater => {}
            }
        }
        sort_around(&d, p, &mut boundary);
        let m = boundary.len();
        let mut add = |run: &mut dyn Iterator<Item = u32>| {
            let mut e = inside.clone();
            e.extend(run);
            e.sort_unstable();
            if !e.is_empty() {
                sets.insert(e);
            }
        };
        add(&mut std::iter::empty());
        add(&mut boundary.iter().copied());
        for start in 0..m {
            for len in 1..m {
                add(&mut (0..len).map(|k| boundary[(start + k) % m]));
            }
        }
    };
    let pts = p.points();
    for a in 0..n {
        for b in a + 1..n {
            add_circle(Disc::diametral(pts[a], pts[b]));
            for c in b + 1..n {
                if let Some(d) = Disc::circumscribed(pts[a], pts[b], pts[c]) {
                    add_circle(d);
                }
            }
        }
    }
    Hypergraph::from_sorted_lists(n, sets.into_iter().collect())
}

/// Sorts points on the circle of `d` by angle around its centre.
fn sort_around(d: &Disc, p: &PointSet, vs: &mut [u32]) {
    let half = |(x, y): (i128, i128)| if y > 0 || (y == 0 && x > 0) { 0 } else { 1 };
    vs.sort_by(|&u, &v| {
        let (a, b) = (d.offset(p.point(u)), d.offset(p.point(v)));
        half(a).cmp(&half(b)).then_with(|| 0.cmp(&(a.0 * b.1 - a.1 * b.0)))
    });
}
