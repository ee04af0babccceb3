use serde::{Deserialize, Serialize};

use super::{Point, PointSet};

/// Closed axis-parallel rectangle. Coordinates are stored doubled so that
/// half-integer boundaries stay exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rect {
    pub x2lo: i64,
    pub x2hi: i64,
    pub y2lo: i64,
    pub y2hi: i64,
}

impl Rect {
    /// Rectangle `[xlo, xhi] × [ylo, yhi]` given in doubled coordinates.
    pub fn doubled(x2lo: i64, x2hi: i64, y2lo: i64, y2hi: i64) -> Rect {
        debug_assert!(x2lo <= x2hi && y2lo <= y2hi);
        Rect { x2lo, x2hi, y2lo, y2hi }
    }

    /// Rectangle whose boundaries sit half a unit outside the given integer
    /// column and row ranges.
    pub fn around(xlo: u32, xhi: u32, ylo: u32, yhi: u32) -> Rect {
        Rect::doubled(2 * xlo as i64 - 1, 2 * xhi as i64 + 1, 2 * ylo as i64 - 1, 2 * yhi as i64 + 1)
    }

    pub fn contains(&self, p: Point) -> bool {
        let (x, y) = (2 * p.x as i64, 2 * p.y as i64);
        self.x2lo <= x && x <= self.x2hi && self.y2lo <= y && y <= self.y2hi
    }

    pub fn contains_rect(&self, r: &Rect) -> bool {
        self.x2lo <= r.x2lo && r.x2hi <= self.x2hi && self.y2lo <= r.y2lo && r.y2hi <= self.y2hi
    }

    pub fn width2(&self) -> i64 {
        self.x2hi - self.x2lo
    }

    pub fn height2(&self) -> i64 {
        self.y2hi - self.y2lo
    }

    /// `Some(i)` when width is exactly `2^i` times height.
    pub fn ratio_class(&self) -> Option<i32> {
        let (w, h) = (self.width2(), self.height2());
        if w <= 0 || h <= 0 {
            return None;
        }
        let (big, small, sign) = if w >= h { (w, h, 1) } else { (h, w, -1) };
        if big % small != 0 {
            return None;
        }
        let q = big / small;
        (q as u64).is_power_of_two().then(|| sign * q.trailing_zeros() as i32)
    }

    pub fn points_inside(&self, p: &PointSet) -> Vec<u32> {
        (0..p.len() as u32).filter(|&v| self.contains(p.point(v))).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
    Bottom,
    Top,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Corner {
    BottomLeft,
    BottomRight,
    TopLeft,
    TopRight,
}

/// Where a point sits relative to a rectangle's boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Location {
    Interior,
    Edge(Side),
    Corner(Corner),
}

impl Location {
    /// Dense code in `0..9`.
    pub fn code(self) -> i32 {
        match self {
            Location::Interior => 0,
            Location::Edge(s) => 1 + s as i32,
            Location::Corner(c) => 5 + c as i32,
        }
    }
}

/// The smallest closed rectangle containing the points of `s`, with its
/// boundary through the extreme points.
pub fn min_bounding_rect(p: &PointSet, s: &[u32]) -> Rect {
    assert!(!s.is_empty(), "bounding rectangle of an empty set");
    let pts = s.iter().map(|&v| p.point(v));
    let (mut xlo, mut xhi, mut ylo, mut yhi) = (u32::MAX, 0, u32::MAX, 0);
    for q in pts {
        xlo = xlo.min(q.x);
        xhi = xhi.max(q.x);
        ylo = ylo.min(q.y);
        yhi = yhi.max(q.y);
    }
    Rect::doubled(2 * xlo as i64, 2 * xhi as i64, 2 * ylo as i64, 2 * yhi as i64)
}

impl Rect {
    /// Location class of `q`, which must lie in the rectangle. On a
    /// degenerate rectangle the left and bottom sides win.
    pub fn locate(&self, q: Point) -> Location {
        debug_assert!(self.contains(q));
        let (x, y) = (2 * q.x as i64, 2 * q.y as i64);
        let left = x == self.x2lo;
        let right = !left && x == self.x2hi;
        let bottom = y == self.y2lo;
        let top = !bottom && y == self.y2hi;
        match (left, right, bottom, top) {
            (true, _, true, _) => Location::Corner(Corner::BottomLeft),
            (_, true, true, _) => Location::Corner(Corner::BottomRight),
            (true, _, _, true) => Location::Corner(Corner::TopLeft),
            (_, true, _, true) => Location::Corner(Corner::TopRight),
            (true, ..) => Location::Edge(Side::Left),
            (_, true, ..) => Location::Edge(Side::Right),
            (_, _, true, _) => Location::Edge(Side::Bottom),
            (.., true) => Location::Edge(Side::Top),
            _ => Location::Interior,
        }
    }
}

/// Covers `r` by two rectangles of one ratio class, both inside `r`:
/// along the longer side, the largest `2^j` multiple of the shorter side
/// that fits, flush with each end. Returns the class and the two pieces.
pub fn ratio_cover(r: &Rect) -> (i32, Rect, Rect) {
    let (w, h) = (r.width2(), r.height2());
    assert!(w > 0 && h > 0, "degenerate rectangle");
    let (long, short) = if w >= h { (w, h) } else { (h, w) };
    let mut j = 0;
    while short << (j + 1) <= long {
        j += 1;
    }
    let piece = short << j;
    if w >= h {
        let r1 = Rect::doubled(r.x2lo, r.x2lo + piece, r.y2lo, r.y2hi);
        let r2 = Rect::doubled(r.x2hi - piece, r.x2hi, r.y2lo, r.y2hi);
        (j, r1, r2)
    } else {
        let r1 = Rect::doubled(r.x2lo, r.x2hi, r.y2lo, r.y2lo + piece);
        let r2 = Rect::doubled(r.x2lo, r.x2hi, r.y2hi - piece, r.y2hi);
        (-j, r1, r2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(c: &[(u32, u32)]) -> PointSet {
        PointSet::from_coords(c).unwrap()
    }

    #[test]
    fn single_point_is_bottom_left() {
        let p = ps(&[(1, 1), (2, 2)]);
        let r = min_bounding_rect(&p, &[1]);
        assert_eq!(r, Rect::doubled(4, 4, 4, 4));
        assert_eq!(r.locate(p.point(1)), Location::Corner(Corner::BottomLeft));
    }

    #[test]
    fn diagonal_pair_are_corners() {
        let p = ps(&[(1, 1), (2, 2), (3, 3)]);
        let r = min_bounding_rect(&p, &[0, 2]);
        assert_eq!(r, Rect::doubled(2, 6, 2, 6));
        assert_eq!(r.locate(p.point(0)), Location::Corner(Corner::BottomLeft));
        assert_eq!(r.locate(p.point(2)), Location::Corner(Corner::TopRight));
        assert_eq!(r.locate(p.point(1)), Location::Interior);
    }

    #[test]
    fn edges_are_told_apart() {
        let p = ps(&[(1, 1), (2, 3), (3, 2)]);
        let r = min_bounding_rect(&p, &[0, 1, 2]);
        assert_eq!(r.locate(p.point(0)), Location::Corner(Corner::BottomLeft));
        assert_eq!(r.locate(p.point(1)), Location::Edge(Side::Top));
        assert_eq!(r.locate(p.point(2)), Location::Edge(Side::Right));
    }

    #[test]
    fn location_codes_are_distinct() {
        let all = [
            Location::Interior,
            Location::Edge(Side::Left),
            Location::Edge(Side::Right),
            Location::Edge(Side::Bottom),
            Location::Edge(Side::Top),
            Location::Corner(Corner::BottomLeft),
            Location::Corner(Corner::BottomRight),
            Location::Corner(Corner::TopLeft),
            Location::Corner(Corner::TopRight),
        ];
        let mut codes: Vec<i32> = all.iter().map(|l| l.code()).collect();
        codes.sort_unstable();
        assert_eq!(codes, (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn ratio_classes_of_rects() {
        assert_eq!(Rect::around(1, 4, 1, 2).ratio_class(), Some(1));
        assert_eq!(Rect::around(1, 2, 1, 4).ratio_class(), Some(-1));
        assert_eq!(Rect::around(1, 3, 1, 3).ratio_class(), Some(0));
        assert_eq!(Rect::around(1, 3, 1, 2).ratio_class(), None);
    }

    #[test]
    fn cover_pieces_union_to_the_rectangle() {
        for xlo in 1..4u32 {
            for xhi in xlo..8 {
                for ylo in 1..4u32 {
                    for yhi in ylo..8 {
                        let r = Rect::around(xlo, xhi, ylo, yhi);
                        let (i, r1, r2) = ratio_cover(&r);
                        assert_eq!(r1.ratio_class(), Some(i));
                        assert_eq!(r2.ratio_class(), Some(i));
                        assert!(r.contains_rect(&r1) && r.contains_rect(&r2));
                        // pieces flush with opposite ends and overlapping
                        if i >= 0 {
                            assert!(r1.x2lo == r.x2lo && r2.x2hi == r.x2hi && r1.x2hi >= r2.x2lo);
                        } else {
                            assert!(r1.y2lo == r.y2lo && r2.y2hi == r.y2hi && r1.y2hi >= r2.y2lo);
                        }
                    }
                }
            }
        }
    }
}
