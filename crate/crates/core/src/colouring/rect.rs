//! t-subset conflict-free colouring of points against axis-parallel
//! rectangles.

use serde::{Deserialize, Serialize};

use super::greedy::degeneracy_colouring;
use super::meta::{peel, MetaStep};
use crate::colours::{SubsetColouring, Token, VertexColouring};
use crate::error::{Error, Result};
use crate::geometry::{build_g, min_bounding_rect, rectangle_hypergraph, Location, PointSet, RatioGraphBuilder};

/// How often the smallest colour `m` of `S` occurs among the points of the
/// bounding box of `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoxMultiplicity {
    One,
    Two,
    ThreeOrMore,
}

/// Constant-size descriptor of a t-subset `S` under a vertex colouring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QCode {
    /// Occurrences of `m` in `S`, 1 or 2.
    pub in_subset: u8,
    pub in_box: BoxMultiplicity,
    /// Where the single `m`-point of `S` sits in the box.
    pub location: Option<Location>,
    /// Whether that point lies left of the other `m`-point in the box.
    pub left_of_twin: Option<bool>,
}

impl QCode {
    /// Flat integer fields, `-1` for not applicable.
    pub fn fields(&self) -> [i32; 4] {
        [
            self.in_subset as i32,
            self.in_box as i32 + 1,
            self.location.map_or(-1, Location::code),
            self.left_of_twin.map_or(-1, i32::from),
        ]
    }

    /// Size of the value space.
    pub const SPACE: usize = 2 * 3 * 10 * 3;
}

/// Descriptor of `s` (which has at most two points of its smallest colour).
pub fn qcode(p: &PointSet, c: &VertexColouring, s: &[u32]) -> QCode {
    let m = s.iter().map(|&v| c.colour(v)).min().expect("nonempty subset");
    let in_s: Vec<u32> = s.iter().copied().filter(|&v| c.colour(v) == m).collect();
    let rect = min_bounding_rect(p, s);
    let in_box: Vec<u32> = (0..p.len() as u32).filter(|&v| c.colour(v) == m && rect.contains(p.point(v))).collect();
    let in_box_class = match in_box.len() {
        1 => BoxMultiplicity::One,
        2 => BoxMultiplicity::Two,
        _ => BoxMultiplicity::ThreeOrMore,
    };
    let single = (in_s.len() == 1).then(|| in_s[0]);
    let location = single.map(|v| rect.locate(p.point(v)));
    let left_of_twin = match (single, in_box_class) {
        (Some(v), BoxMultiplicity::Two) => {
            let twin = in_box.iter().copied().find(|&u| u != v).expect("two m-points in the box");
            Some(p.point(v).x < p.point(twin).x)
        }
        _ => None,
    };
    QCode { in_subset: in_s.len() as u8, in_box: in_box_class, location, left_of_twin }
}

/// Result of [`rect_subset_cf`] with the intermediate data the bounds
/// refer to.
#[derive(Clone, Debug)]
pub struct RectSubsetColouring {
    pub sigma: SubsetColouring,
    /// Final vertex colouring from the peeling loop.
    pub vertex_colours: VertexColouring,
    /// Edges of `G` on all points.
    pub g_edges: usize,
    /// Colours of the degeneracy colouring of `G` on all points.
    pub g_colours: usize,
    pub trace: Vec<MetaStep>,
}

/// t-subset CF colouring of `p` with respect to rectangles, `t >= 2`.
///
/// Vertex colours come from peeling with the proper colouring of `G`
/// recomputed on the surviving points. A subset with some colour three
/// times gets the dummy token; any other subset gets its colour sum
/// together with its [`QCode`].
pub fn rect_subset_cf(p: &PointSet, t: usize) -> Result<RectSubsetColouring> {
    if t < 2 {
        return Err(Error::InvalidArgument("rectangle subset colouring needs t >= 2".into()));
    }
    let g = build_g(p, t);
    let g_colours = degeneracy_colouring(&g).colours_used();
    let builder = RatioGraphBuilder::new(p);
    let (c, trace) = peel(p.len(), |active| Ok(degeneracy_colouring(&builder.graph(active, t)).as_slice().to_vec()))?;
    let mut counts = std::collections::HashMap::new();
    let sigma = SubsetColouring::from_fn(p.len(), t, |s| {
        counts.clear();
        for &v in s {
            *counts.entry(c.colour(v)).or_insert(0) += 1;
        }
        if counts.values().any(|&k| k >= 3) {
            return Token::Dummy;
        }
        let sum: i64 = s.iter().map(|&v| c.colour(v) as i64).sum();
        Token::with(sum, &qcode(p, &c, s).fields())
    })?;
    Ok(RectSubsetColouring { sigma, vertex_colours: c, g_edges: g.num_edges(), g_colours, trace })
}

/// A rectangle and round where an auxiliary colour occurs too often.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimViolation {
    pub round: usize,
    /// Surviving points of the rectangle in that round.
    pub points: Vec<u32>,
    pub colour: u32,
    pub count: usize,
}

/// Checks, for every round of `trace` and every rectangle hyperedge `r`,
/// that no auxiliary colour occurs more than twice in `r ∩ P'` when
/// `|r ∩ P'| <= t + 2`, nor more than `k` times when `|r ∩ P'| = t + k`.
pub fn claim_colourcount_check(p: &PointSet, t: usize, trace: &[MetaStep]) -> Option<ClaimViolation> {
    let h = rectangle_hypergraph(p);
    let n = p.len();
    for (round, step) in trace.iter().enumerate() {
        let mut aux_of = vec![0u32; n];
        for (&v, &c) in step.active.iter().zip(&step.aux) {
            aux_of[v as usize] = c;
        }
        let top = step.aux.iter().copied().max().unwrap_or(0) as usize;
        let mut count = vec![0usize; top + 1];
        for e in h.edges() {
            let alive: Vec<u32> = e.iter().copied().filter(|&v| aux_of[v as usize] > 0).collect();
            let allowed = alive.len().saturating_sub(t).max(2);
            count.iter_mut().for_each(|x| *x = 0);
            for &v in &alive {
                count[aux_of[v as usize] as usize] += 1;
            }
            if let Some((colour, &k)) = count.iter().enumerate().find(|(_, &k)| k > allowed) {
                return Some(ClaimViolation { round: round + 1, points: alive, colour: colour as u32, count: k });
            }
        }
    }
    None
}
