//! Lower-bound families and the exact checks that certify them on small
//! instances.

use num::BigUint;
use serde::{Deserialize, Serialize};

use crate::colours::{for_each_subset, VertexColouring};
use crate::error::{Error, Result};
use crate::exact::{exact_chi, exact_chi_subset_cf};
use crate::geometry::interval_hypergraph;
use crate::hypergraph::Hypergraph;
use crate::validate::Notion;

/// Vertex `0` joined with every `(t+1)`-subset of `1..n`. CF-colourable
/// with two colours, yet its `t`-subset CF number grows without bound.
pub fn star_hypergraph(n: usize, t: usize) -> Result<Hypergraph> {
    if t < 2 {
        return Err(Error::InvalidArgument(format!("star needs t >= 2, got {t}")));
    }
    if n < t + 2 {
        return Err(Error::InvalidArgument(format!("star with t = {t} needs n >= {}, got {n}", t + 2)));
    }
    let rest: Vec<u32> = (1..n as u32).collect();
    let mut edges = Vec::new();
    for_each_subset(&rest, t + 1, |s| {
        let mut e = Vec::with_capacity(t + 2);
        e.push(0);
        e.extend_from_slice(s);
        edges.push(e);
    });
    Hypergraph::new(n, edges)
}

/// Exact pair-CF numbers of interval hypergraphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalLbTable {
    /// `(n, χ)` for `n = 3, 4, ...`.
    pub rows: Vec<(usize, usize)>,
}

impl IntervalLbTable {
    pub fn get(&self, n: usize) -> Option<usize> {
        self.rows.iter().find(|r| r.0 == n).map(|r| r.1)
    }

    /// Pairs `(m, 2m+1)` in range where `χ(2m+1) < 1 + χ(m)`.
    pub fn recurrence_violations(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .filter_map(|&(m, c)| match self.get(2 * m + 1) {
                Some(big) if big < c + 1 => Some((m, 2 * m + 1)),
                _ => None,
            })
            .collect()
    }
}

/// Pair-CF number of the interval hypergraph on `n` points, for
/// `n = 3..=max_n`.
pub fn interval_lb_table(max_n: usize) -> Result<IntervalLbTable> {
    let rows = (3..=max_n)
        .map(|n| exact_chi_subset_cf(&interval_hypergraph(n), 2).map(|(k, _)| (n, k)))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntervalLbTable { rows })
}

/// Outcome of [`lbunion_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LbUnionReport {
    pub n: usize,
    /// Exact CF number of the unions of two intervals with at least three
    /// points.
    pub chi: usize,
    /// `⌈√(n−1)⌉`.
    pub bound: usize,
    pub witness: Vec<u32>,
    /// An ordered colour pair seen on two different neighbour pairs of the
    /// witness, if any.
    pub repeated_pair: Option<(u32, u32)>,
}

impl LbUnionReport {
    pub fn holds(&self) -> bool {
        self.chi >= self.bound && self.repeated_pair.is_none()
    }
}

/// First ordered colour pair that two neighbour pairs `(i, i+1)` share.
pub fn repeated_neighbour_colours(c: &VertexColouring) -> Option<(u32, u32)> {
    let mut seen = std::collections::HashSet::new();
    c.as_slice().windows(2).map(|w| (w[0], w[1])).find(|&p| !seen.insert(p))
}

/// Computes the CF number of unions of two intervals (at least three
/// points) on `n` points and compares it with `⌈√(n−1)⌉`.
pub fn lbunion_check(n: usize) -> Result<LbUnionReport> {
    let h = interval_hypergraph(n).union_hypergraph().filter_edges(|e| e.len() >= 3);
    let (chi, witness) = exact_chi(&h, Notion::Cf, None)?;
    let bound = ceil_sqrt(n.saturating_sub(1));
    Ok(LbUnionReport {
        n,
        chi: chi.max(1),
        bound,
        repeated_pair: repeated_neighbour_colours(&witness),
        witness: witness.as_slice().to_vec(),
    })
}

fn ceil_sqrt(x: usize) -> usize {
    let r = (x as f64).sqrt() as usize;
    (r.saturating_sub(1)..=r + 1).find(|&k| k * k >= x).unwrap_or(r + 1)
}

/// Refuse towers with more decimal digits than this.
pub const TOWER_DIGIT_LIMIT: u64 = 1_000_000;

/// `twr_1(m) = m`, `twr_t(m) = 2^twr_{t−1}(m)`.
pub fn tower(t: usize, m: u64) -> Result<BigUint> {
    if t == 0 {
        return Err(Error::InvalidArgument("tower height must be at least 1".into()));
    }
    let mut value = BigUint::from(m);
    for _ in 1..t {
        // 2^e has about e·log10(2) digits
        let e = u64::try_from(&value)
            .ok()
            .filter(|&e| (e as f64) * std::f64::consts::LOG10_2 <= TOWER_DIGIT_LIMIT as f64)
            .ok_or_else(|| Error::Overflow(format!("tower({t}, {m}) exceeds {TOWER_DIGIT_LIMIT} digits")))?;
        value = BigUint::from(1u8) << e;
    }
    Ok(value)
}
