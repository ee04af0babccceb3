//! Exact minimum colourings by backtracking, used as test oracles.
//!
//! Both solvers deepen the colour budget one at a time and refuse instances
//! above their declared limits instead of running unbounded.

use crate::colours::{binomial, for_each_subset, SubsetColouring, Token, VertexColouring};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::validate::{edge_satisfies, Notion};

/// Largest vertex count accepted by [`exact_chi`].
pub const VERTEX_SOLVER_LIMIT: usize = 12;

/// Largest number of t-subsets accepted by [`exact_chi_subset_cf`]
/// (`C(7, 2)`).
pub const SUBSET_SOLVER_LIMIT: usize = 21;

/// Minimum number of colours of a colouring valid for `notion`, with a
/// witness.
///
/// Unordered notions only explore colourings where each vertex uses at most
/// one colour more than the largest colour on earlier vertices. Ordered
/// notions (UM, t-UM) are not invariant under colour renaming and are
/// searched without that restriction.
pub fn exact_chi(h: &Hypergraph, notion: Notion, t: Option<usize>) -> Result<(usize, VertexColouring)> {
    let t = notion.param(t)?;
    let n = h.n();
    if n > VERTEX_SOLVER_LIMIT {
        return Err(Error::SizeLimit { what: format!("exact solver on {n} vertices"), limit: VERTEX_SOLVER_LIMIT });
    }
    if n == 0 {
        return Ok((0, VertexColouring::constant(0)));
    }
    // hyperedges grouped by their largest vertex
    let mut closing: Vec<Vec<&[u32]>> = vec![Vec::new(); n];
    for e in h.edges() {
        closing[*e.last().unwrap() as usize].push(e);
    }
    let mut search = VertexSearch {
        closing,
        notion,
        t,
        symmetric: !notion.is_ordered(),
        colours: vec![0; n],
        scratch: Vec::new(),
    };
    for k in 1..=n as u32 {
        if search.extend(0, k, 0) {
            return Ok((k as usize, VertexColouring::new(search.colours)?));
        }
    }
    unreachable!("n distinct colours satisfy every notion")
}

struct VertexSearch<'a> {
    closing: Vec<Vec<&'a [u32]>>,
    notion: Notion,
    t: usize,
    symmetric: bool,
    colours: Vec<u32>,
    scratch: Vec<u32>,
}

impl VertexSearch<'_> {
    fn extend(&mut self, v: usize, k: u32, max_used: u32) -> bool {
        if v == self.colours.len() {
            return true;
        }
        let top = if self.symmetric { k.min(max_used + 1) } else { k };
        for c in 1..=top {
            self.colours[v] = c;
            let ok = self.closing[v]
                .iter()
                .all(|e| edge_satisfies(e, &self.colours, self.notion, self.t, &mut self.scratch));
            if ok && self.extend(v + 1, k, max_used.max(c)) {
                return true;
            }
        }
        self.colours[v] = 0;
        false
    }
}

/// Minimum number of tokens of a `t`-subset-CF colouring, with a witness
/// whose tokens are `1..=k`.
pub fn exact_chi_subset_cf(h: &Hypergraph, t: usize) -> Result<(usize, SubsetColouring)> {
    if t == 0 {
        return Err(Error::InvalidArgument("subset size t must be at least 1".into()));
    }
    let n = h.n();
    let total = binomial(n, t) as usize;
    if total > SUBSET_SOLVER_LIMIT {
        return Err(Error::SizeLimit { what: format!("exact solver on C({n},{t}) = {total} subsets"), limit: SUBSET_SOLVER_LIMIT });
    }
    if total == 0 {
        return Ok((0, SubsetColouring::from_fn(n, t, |_| Token::int(1))?));
    }
    let index = SubsetColouring::from_fn(n, t, |_| Token::Dummy)?;
    // each constrained hyperedge becomes the list of its subset ranks,
    // checked once its colex-largest subset is assigned
    let mut closing: Vec<Vec<Vec<usize>>> = vec![Vec::new(); total];
    for e in h.edges().filter(|e| e.len() > t) {
        let mut ranks = Vec::new();
        for_each_subset(e, t, |s| ranks.push(index.rank_of(s)));
        let last = *ranks.iter().max().unwrap();
        closing[last].push(ranks);
    }
    let mut search = SubsetSearch { closing, tokens: vec![0; total], counts: Vec::new() };
    for k in 1..=total as u32 {
        search.counts = vec![0; k as usize + 1];
        if search.extend(0, k, 0) {
            let tokens = search.tokens;
            let witness = SubsetColouring::from_fn(n, t, |s| Token::int(tokens[index.rank_of(s)] as i64))?;
            return Ok((k as usize, witness));
        }
    }
    unreachable!("distinct tokens on all subsets are always valid")
}

struct SubsetSearch {
    closing: Vec<Vec<Vec<usize>>>,
    tokens: Vec<u32>,
    counts: Vec<u32>,
}

impl SubsetSearch {
    fn edge_ok(&mut self, ranks: &[usize]) -> bool {
        for &r in ranks {
            self.counts[self.tokens[r] as usize] += 1;
        }
        let ok = ranks.iter().any(|&r| self.counts[self.tokens[r] as usize] == 1);
        for &r in ranks {
            self.counts[self.tokens[r] as usize] = 0;
        }
        ok
    }

    fn extend(&mut self, r: usize, k: u32, max_used: u32) -> bool {
        if r == self.tokens.len() {
            return true;
        }
        for c in 1..=k.min(max_used + 1) {
            self.tokens[r] = c;
            let checks = std::mem::take(&mut self.closing[r]);
            let ok = checks.iter().all(|ranks| self.edge_ok(ranks));
            self.closing[r] = checks;
            if ok && self.extend(r + 1, k, max_used.max(c)) {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::{validate, validate_subset_cf};
    use proptest::prelude::*;

    fn intervals(n: u32) -> Hypergraph {
        Hypergraph::new(n as usize, (0..n).flat_map(|a| (a..n).map(move |b| (a..=b).collect::<Vec<_>>()))).unwrap()
    }

    /// Plain enumeration of every colouring with `k` colours, `k = 1, 2, ...`.
    fn brute_chi(h: &Hypergraph, notion: Notion, t: Option<usize>) -> usize {
        let n = h.n();
        for k in 1..=n as u32 {
            let mut colours = vec![1u32; n];
            loop {
                let phi = VertexColouring::new(colours.clone()).unwrap();
                if validate(h, &phi, notion, t).unwrap().is_valid() {
                    return k as usize;
                }
                let mut i = 0;
                while i < n && colours[i] == k {
                    colours[i] = 1;
                    i += 1;
                }
                if i == n {
                    break;
                }
                colours[i] += 1;
            }
        }
        n
    }

    #[test]
    fn three_point_intervals_need_two_cf_colours() {
        let (k, phi) = exact_chi(&intervals(3), Notion::Cf, None).unwrap();
        assert_eq!(k, 2);
        assert!(validate(&intervals(3), &phi, Notion::Cf, None).unwrap().is_valid());
    }

    #[test]
    fn complete_graph_needs_all_colours() {
        assert_eq!(exact_chi(&Hypergraph::complete_graph(5), Notion::Cf, None).unwrap().0, 5);
    }

    #[test]
    fn size_limits_are_hard_errors() {
        assert!(matches!(
            exact_chi(&Hypergraph::empty(13), Notion::Cf, None),
            Err(Error::SizeLimit { .. })
        ));
        assert!(matches!(exact_chi_subset_cf(&Hypergraph::empty(8), 2), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn subset_solver_small_cases() {
        let tri = Hypergraph::new(3, vec![vec![0u32, 1, 2]]).unwrap();
        let (k, sigma) = exact_chi_subset_cf(&tri, 2).unwrap();
        assert_eq!(k, 2);
        assert!(validate_subset_cf(&tri, &sigma).unwrap().is_valid());

        // only hyperedges of size <= t: nothing is constrained
        assert_eq!(exact_chi_subset_cf(&Hypergraph::complete_graph(6), 2).unwrap().0, 1);
    }

    #[test]
    fn ordered_notions_search_without_renaming() {
        let (k, phi) = exact_chi(&intervals(3), Notion::Um, None).unwrap();
        assert_eq!(k, 2);
        assert!(validate(&intervals(3), &phi, Notion::Um, None).unwrap().is_valid());
        assert_eq!(brute_chi(&intervals(4), Notion::Um, None), exact_chi(&intervals(4), Notion::Um, None).unwrap().0);
    }

    fn arb_small() -> impl Strategy<Value = (Hypergraph, usize)> {
        (1usize..=5).prop_flat_map(|n| {
            let edge = proptest::collection::vec(0..n as u32, 1..=n);
            (proptest::collection::vec(edge, 0..8), 1usize..4)
                .prop_map(move |(edges, t)| (Hypergraph::new(n, edges).unwrap(), t))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn matches_plain_enumeration((h, t) in arb_small()) {
            for notion in Notion::ALL {
                let tp = notion.is_parametric().then_some(t);
                let (k, witness) = exact_chi(&h, notion, tp).unwrap();
                prop_assert_eq!(k, brute_chi(&h, notion, tp), "notion {}", notion);
                prop_assert!(validate(&h, &witness, notion, tp).unwrap().is_valid());
                prop_assert!(witness.colours_used() <= k);
            }
        }
    }
}
