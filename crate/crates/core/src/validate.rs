//! Validity checkers for every colouring notion.
//!
//! All checkers scan hyperedges in canonical order and report the first
//! violating hyperedge.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::colours::{for_each_subset, SubsetColouring, VertexColouring};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Notion {
    /// Every hyperedge with at least two vertices sees two colours.
    Proper,
    /// Every nonempty hyperedge has a uniquely coloured vertex.
    Cf,
    /// The maximum colour of every hyperedge is unique in it.
    Um,
    /// `min(|h|, t)` pairwise distinct colours in every hyperedge.
    Colourful,
    /// `min(|h|, t)` uniquely coloured vertices in every hyperedge.
    StrongCf,
    /// The `min(|h|, t)` largest colours of every hyperedge are unique.
    TUm,
}

impl Notion {
    pub const ALL: [Notion; 6] =
        [Notion::Proper, Notion::Cf, Notion::Um, Notion::Colourful, Notion::StrongCf, Notion::TUm];

    pub fn name(self) -> &'static str {
        match self {
            Notion::Proper => "proper",
            Notion::Cf => "cf",
            Notion::Um => "um",
            Notion::Colourful => "colourful",
            Notion::StrongCf => "strong-cf",
            Notion::TUm => "t-um",
        }
    }

    pub fn is_parametric(self) -> bool {
        matches!(self, Notion::Colourful | Notion::StrongCf | Notion::TUm)
    }

    /// Whether the notion depends on the order of colour values.
    pub fn is_ordered(self) -> bool {
        matches!(self, Notion::Um | Notion::TUm)
    }

    /// Resolves the parameter: `None` for fixed notions, `t >= 1` otherwise.
    pub(crate) fn param(self, t: Option<usize>) -> Result<usize> {
        match (self.is_parametric(), t) {
            (false, _) => Ok(1),
            (true, Some(t)) if t >= 1 => Ok(t),
            (true, _) => Err(Error::MissingParameter(self.name())),
        }
    }
}

impl fmt::Display for Notion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Notion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Notion> {
        Notion::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown colouring notion {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Valid,
    Counterexample(Vec<u32>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn counterexample(&self) -> Option<&[u32]> {
        match self {
            Verdict::Valid => None,
            Verdict::Counterexample(h) => Some(h),
        }
    }
}

/// Checks one hyperedge. `colours` is scratch space.
pub(crate) fn edge_satisfies(
    edge: &[u32],
    phi: &[u32],
    notion: Notion,
    t: usize,
    colours: &mut Vec<u32>,
) -> bool {
    if edge.is_empty() {
        return true;
    }
    colours.clear();
    colours.extend(edge.iter().map(|&v| phi[v as usize]));
    colours.sort_unstable_by(|a, b| b.cmp(a));
    // run lengths, largest colour first
    let runs = RunLengths { sorted: colours, pos: 0 };
    let need = edge.len().min(t);
    match notion {
        Notion::Proper => edge.len() < 2 || colours[0] != colours[colours.len() - 1],
        Notion::Cf => runs.into_iter().any(|len| len == 1),
        Notion::Um => runs.into_iter().next() == Some(1),
        Notion::Colourful => runs.into_iter().count() >= need,
        Notion::StrongCf => runs.into_iter().filter(|&len| len == 1).count() >= need,
        Notion::TUm => runs.into_iter().take(need).all(|len| len == 1),
    }
}

struct RunLengths<'a> {
    sorted: &'a [u32],
    pos: usize,
}

impl Iterator for RunLengths<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        let start = self.pos;
        let c = *self.sorted.get(start)?;
        while self.pos < self.sorted.len() && self.sorted[self.pos] == c {
            self.pos += 1;
        }
        Some(self.pos - start)
    }
}

/// Checks a vertex colouring against `notion` on every hyperedge.
pub fn validate(h: &Hypergraph, phi: &VertexColouring, notion: Notion, t: Option<usize>) -> Result<Verdict> {
    let t = notion.param(t)?;
    if phi.len() != h.n() {
        return Err(Error::InvalidArgument(format!(
            "colouring covers {} vertices, hypergraph has {}",
            phi.len(),
            h.n()
        )));
    }
    let mut scratch = Vec::new();
    for e in h.edges() {
        if !edge_satisfies(e, phi.as_slice(), notion, t, &mut scratch) {
            return Ok(Verdict::Counterexample(e.to_vec()));
        }
    }
    Ok(Verdict::Valid)
}

/// Checks that every hyperedge with more than `t` vertices contains a
/// `t`-subset whose token differs from all other `t`-subsets inside it.
pub fn validate_subset_cf(h: &Hypergraph, sigma: &SubsetColouring) -> Result<Verdict> {
    if sigma.n() != h.n() {
        return Err(Error::InvalidArgument(format!(
            "subset colouring is on {} vertices, hypergraph has {}",
            sigma.n(),
            h.n()
        )));
    }
    let mut counter = TokenCounter::new(sigma);
    for e in h.edges() {
        if e.len() > sigma.t() && !counter.has_unique(e) {
            return Ok(Verdict::Counterexample(e.to_vec()));
        }
    }
    Ok(Verdict::Valid)
}

/// Counts token multiplicities inside one hyperedge at a time, reusing
/// buffers between hyperedges.
pub(crate) struct TokenCounter<'a> {
    sigma: &'a SubsetColouring,
    ids: Vec<u32>,
    counts: Vec<u32>,
    touched: Vec<u32>,
}

impl<'a> TokenCounter<'a> {
    pub(crate) fn new(sigma: &'a SubsetColouring) -> Self {
        let ids = sigma.token_ids();
        let distinct = ids.iter().copied().max().map_or(0, |m| m as usize + 1);
        TokenCounter { sigma, ids, counts: vec![0; distinct], touched: Vec::new() }
    }

    pub(crate) fn has_unique(&mut self, edge: &[u32]) -> bool {
        let (sigma, ids, counts, touched) = (self.sigma, &self.ids, &mut self.counts, &mut self.touched);
        for_each_subset(edge, sigma.t(), |s| {
            let id = ids[sigma.rank_of(s)];
            if counts[id as usize] == 0 {
                touched.push(id);
            }
            counts[id as usize] += 1;
        });
        let mut unique = false;
        for &id in touched.iter() {
            unique |= counts[id as usize] == 1;
            counts[id as usize] = 0;
        }
        touched.clear();
        unique
    }
}
