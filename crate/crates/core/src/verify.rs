//! Fast exact validators for t-subset colourings on the structured range
//! spaces, where listing every hyperedge would be too slow.
//!
//! Each validator visits every hyperedge of its family (or proves a whole
//! class of them valid at once) and reports a violating hyperedge if one
//! exists. The generic [`validate_subset_cf`](crate::validate_subset_cf)
//! is the reference they are tested against.

use std::collections::HashMap;

use crate::colours::{for_each_subset, SubsetColouring};
use crate::error::{Error, Result};
use crate::geometry::PointSet;
use crate::validate::Verdict;

/// Token multiplicities of a growing vertex set.
struct Tally {
    count: Vec<u32>,
    touched: Vec<u32>,
    unique: usize,
}

impl Tally {
    fn new(tokens: usize) -> Self {
        Tally { count: vec![0; tokens], touched: Vec::new(), unique: 0 }
    }

    fn add(&mut self, id: u32) {
        let c = &mut self.count[id as usize];
        match *c {
            0 => {
                self.unique += 1;
                self.touched.push(id);
            }
            1 => self.unique -= 1,
            _ => {}
        }
        *c += 1;
    }

    fn reset(&mut self) {
        for &id in &self.touched {
            self.count[id as usize] = 0;
        }
        self.touched.clear();
        self.unique = 0;
    }
}

/// Grows runs `order[s..=e]` one vertex at a time and checks every run of
/// more than `t` vertices for a unique token.
fn sweep_runs(sigma: &SubsetColouring, ids: &[u32], tally: &mut Tally, order: &[u32]) -> Option<Vec<u32>> {
    let t = sigma.t();
    let mut scratch = Vec::with_capacity(t);
    for s in 0..order.len() {
        tally.reset();
        for e in s..order.len() {
            let v = order[e];
            if t == 1 {
                tally.add(ids[sigma.rank_of(&[v])]);
            } else {
                for_each_subset(&order[s..e], t - 1, |rest| {
                    scratch.clear();
                    scratch.extend_from_slice(rest);
                    scratch.push(v);
                    scratch.sort_unstable();
                    tally.add(ids[sigma.rank_of(&scratch)]);
                });
            }
            if e - s + 1 > t && tally.unique == 0 {
                let mut bad = order[s..=e].to_vec();
                bad.sort_unstable();
                return Some(bad);
            }
        }
    }
    None
}

/// Validates `sigma` against the interval hypergraph on `0..n`.
pub fn validate_intervals_fast(sigma: &SubsetColouring) -> Verdict {
    let ids = sigma.token_ids();
    let mut tally = Tally::new(ids.iter().max().map_or(0, |&m| m as usize + 1));
    let order: Vec<u32> = (0..sigma.n() as u32).collect();
    match sweep_runs(sigma, &ids, &mut tally, &order) {
        Some(bad) => Verdict::Counterexample(bad),
        None => Verdict::Valid,
    }
}

/// Validates `sigma` against the rectangle hypergraph of `p`: for every
/// column range, the points inside ordered by height are swept as runs.
pub fn validate_rectangles_fast(p: &PointSet, sigma: &SubsetColouring) -> Result<Verdict> {
    if sigma.n() != p.len() {
        return Err(Error::InvalidInput(format!("colouring has {} vertices, point set {}", sigma.n(), p.len())));
    }
    let ids = sigma.token_ids();
    let mut tally = Tally::new(ids.iter().max().map_or(0, |&m| m as usize + 1));
    let col = p.by_column();
    let n = p.len();
    for a in 0..n {
        let mut strip: Vec<u32> = Vec::new();
        for &v in &col[a..] {
            let pos = strip.partition_point(|&u| p.point(u).y < p.point(v).y);
            strip.insert(pos, v);
            if let Some(bad) = sweep_runs(sigma, &ids, &mut tally, &strip) {
                return Ok(Verdict::Counterexample(bad));
            }
        }
    }
    Ok(Verdict::Valid)
}

const NONE: u32 = u32::MAX;

/// A pair colouring of points on a line that depends only on the labels
/// of the two points and whether they are neighbours.
struct LabelledPairs {
    n: usize,
    /// Largest label; labels are `1..=s`.
    s: usize,
    tokens: usize,
    /// Token of non-neighbours with labels `x <= y`, at `x * (s+1) + y`.
    spread: Vec<u32>,
    /// Token of neighbours `(i, i+1)` with labels `(x, y)`.
    adjacent: Vec<u32>,
    /// Label pairs producing each token, sorted by larger label.
    pre_spread: Vec<Vec<(usize, usize)>>,
    pre_adjacent: Vec<Vec<(usize, usize)>>,
    /// `label_prefix[l * (n+1) + i]`: positions `< i` with label `l`.
    label_prefix: Vec<u32>,
    /// `adj_prefix[(x*(s+1)+y) * (n+1) + i]`: neighbours `(j, j+1)`,
    /// `j < i`, labelled `(x, y)`.
    adj_prefix: Vec<u32>,
}

/// A union of one or two disjoint runs `[a, b]`.
type Parts<'a> = &'a [(usize, usize)];

impl LabelledPairs {
    fn new(labels: &[u32], sigma: &SubsetColouring) -> Result<Self> {
        let n = labels.len();
        if sigma.n() != n || sigma.t() != 2 {
            return Err(Error::InvalidInput("need a pair colouring on the labelled points".into()));
        }
        if labels.contains(&0) {
            return Err(Error::InvalidInput("labels must be positive".into()));
        }
        let s = labels.iter().copied().max().unwrap_or(0) as usize;
        let w = s + 1;
        let ids = sigma.token_ids();
        let tokens = ids.iter().max().map_or(0, |&m| m as usize + 1);
        let mut spread = vec![NONE; w * w];
        let mut adjacent = vec![NONE; w * w];
        for i in 0..n {
            for j in i + 1..n {
                let (x, y) = (labels[i] as usize, labels[j] as usize);
                let id = ids[sigma.rank_of(&[i as u32, j as u32])];
                let slot = if j == i + 1 { &mut adjacent[x * w + y] } else { &mut spread[x.min(y) * w + x.max(y)] };
                if *slot == NONE {
                    *slot = id;
                } else if *slot != id {
                    return Err(Error::InvalidInput(format!(
                        "pair colour of {{{i}, {j}}} is not a function of its labels"
                    )));
                }
            }
        }
        let mut pre_spread = vec![Vec::new(); tokens];
        let mut pre_adjacent = vec![Vec::new(); tokens];
        for x in 1..w {
            for y in 1..w {
                if x <= y && spread[x * w + y] != NONE {
                    pre_spread[spread[x * w + y] as usize].push((x, y));
                }
                if adjacent[x * w + y] != NONE {
                    pre_adjacent[adjacent[x * w + y] as usize].push((x, y));
                }
            }
        }
        for list in pre_spread.iter_mut().chain(pre_adjacent.iter_mut()) {
            list.sort_by_key(|&(x, y)| (x.max(y), x.min(y)));
        }
        let mut label_prefix = vec![0u32; w * (n + 1)];
        for l in 1..w {
            for i in 0..n {
                label_prefix[l * (n + 1) + i + 1] = label_prefix[l * (n + 1) + i] + (labels[i] as usize == l) as u32;
            }
        }
        let mut adj_prefix = vec![0u32; w * w * (n + 1)];
        for i in 0..n.saturating_sub(1) {
            let key = labels[i] as usize * w + labels[i + 1] as usize;
            adj_prefix[key * (n + 1) + i + 1] = 1;
        }
        for key in 0..w * w {
            let row = &mut adj_prefix[key * (n + 1)..(key + 1) * (n + 1)];
            for i in 1..=n {
                row[i] += row[i - 1];
            }
        }
        Ok(LabelledPairs { n, s, tokens, spread, adjacent, pre_spread, pre_adjacent, label_prefix, adj_prefix })
    }

    fn label_count(&self, l: usize, parts: Parts) -> u32 {
        let row = &self.label_prefix[l * (self.n + 1)..];
        parts.iter().map(|&(a, b)| row[b + 1] - row[a]).sum()
    }

    fn adjacent_count(&self, x: usize, y: usize, parts: Parts) -> u32 {
        let row = &self.adj_prefix[(x * (self.s + 1) + y) * (self.n + 1)..];
        parts.iter().map(|&(a, b)| row[b] - row[a]).sum()
    }

    /// Non-neighbour pairs in `parts` with labels `{x, y}`.
    fn spread_count(&self, x: usize, y: usize, parts: Parts) -> u32 {
        if x == y {
            let c = self.label_count(x, parts);
            c * c.saturating_sub(1) / 2 - self.adjacent_count(x, x, parts)
        } else {
            self.label_count(x, parts) * self.label_count(y, parts)
                - self.adjacent_count(x, y, parts)
                - self.adjacent_count(y, x, parts)
        }
    }

    /// Occurrences of token `id` in `parts`, whose largest label is `top`.
    fn token_count(&self, id: u32, parts: Parts, top: usize) -> u32 {
        let mut total = 0;
        for &(x, y) in self.pre_spread[id as usize].iter().take_while(|p| p.0.max(p.1) <= top) {
            total += self.spread_count(x, y, parts);
        }
        for &(x, y) in self.pre_adjacent[id as usize].iter().take_while(|p| p.0.max(p.1) <= top) {
            total += self.adjacent_count(x, y, parts);
        }
        total
    }

    /// Tries the tokens of pairs among the three largest labels.
    fn quick_unique(&self, parts: Parts) -> bool {
        let mut top = [0usize; 3];
        let mut found = 0;
        for l in (1..=self.s).rev() {
            let c = self.label_count(l, parts) as usize;
            for _ in 0..c.min(3 - found) {
                top[found] = l;
                found += 1;
            }
            if found == 3 {
                break;
            }
        }
        if found < 3 {
            return false;
        }
        let w = self.s + 1;
        for (x, y) in [(top[0], top[1]), (top[1], top[2]), (top[0], top[2])] {
            for id in [self.spread[y * w + x], self.adjacent[x * w + y], self.adjacent[y * w + x]] {
                if id != NONE && self.token_count(id, parts, top[0]) == 1 {
                    return true;
                }
            }
        }
        false
    }

    /// Counts every token in `parts`.
    fn full_unique(&self, parts: Parts, counts: &mut Vec<u32>) -> bool {
        counts.clear();
        counts.resize(self.tokens, 0);
        let w = self.s + 1;
        for x in 1..w {
            for y in x..w {
                let id = self.spread[x * w + y];
                if id != NONE {
                    counts[id as usize] += self.spread_count(x, y, parts);
                }
            }
            for y in 1..w {
                let id = self.adjacent[x * w + y];
                if id != NONE {
                    counts[id as usize] += self.adjacent_count(x, y, parts);
                }
            }
        }
        counts.contains(&1)
    }

    fn has_unique(&self, parts: Parts, counts: &mut Vec<u32>) -> bool {
        self.quick_unique(parts) || self.full_unique(parts, counts)
    }

    /// Statistics of the `KEY_DEPTH` largest labels of a run: their
    /// counts, and the neighbour counts of every label pair reaching
    /// `floor`. Label counts below `floor` are unknown.
    fn top_key(&self, a: usize, b: usize) -> TopKey {
        let parts = [(a, b)];
        let mut labels = Vec::with_capacity(KEY_DEPTH);
        let mut floor = 1;
        for l in (1..=self.s).rev() {
            let c = self.label_count(l, &parts);
            if c > 0 {
                if labels.len() == KEY_DEPTH {
                    floor = l + 1;
                    break;
                }
                labels.push((l, c));
            }
        }
        let mut adjacent = Vec::new();
        for x in 1..=self.s {
            for y in (1..=self.s).filter(|&y| x.max(y) >= floor) {
                let c = self.adjacent_count(x, y, &parts);
                if c > 0 {
                    adjacent.push((x, y, c));
                }
            }
        }
        TopKey { labels, floor, adjacent }
    }

    /// Whether every union of two separated runs with these keys has a
    /// token occurring once, counted from the keys alone.
    fn certify(&self, k1: &TopKey, k2: &TopKey) -> bool {
        let w = self.s + 1;
        let top = k1.labels[0].0.max(k2.labels[0].0);
        let floor = k1.floor.max(k2.floor);
        let mut count = vec![0u32; w];
        let mut adj = vec![0u32; w * w];
        for k in [k1, k2] {
            for &(l, c) in &k.labels {
                count[l] += c;
            }
            for &(x, y, c) in &k.adjacent {
                adj[x * w + y] += c;
            }
        }
        (0..self.tokens).any(|id| {
            let mut total = 0;
            for &(x, y) in self.pre_spread[id].iter().take_while(|p| p.0.max(p.1) <= top) {
                if x.min(y) < floor {
                    return false;
                }
                total += if x == y {
                    count[x] * count[x].saturating_sub(1) / 2 - adj[x * w + x]
                } else {
                    count[x] * count[y] - adj[x * w + y] - adj[y * w + x]
                };
            }
            for &(x, y) in self.pre_adjacent[id].iter().take_while(|p| p.0.max(p.1) <= top) {
                if x.max(y) < floor {
                    return false;
                }
                total += adj[x * w + y];
            }
            total == 1
        })
    }
}

/// Number of largest labels recorded per run.
const KEY_DEPTH: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct TopKey {
    /// `(label, count)`, largest first.
    labels: Vec<(usize, u32)>,
    floor: usize,
    adjacent: Vec<(usize, usize, u32)>,
}

/// Validates a pair colouring of points `0..n` on a line, labelled
/// `labels`, against every union of two intervals with at least three
/// points.
///
/// The pair colour must be a function of the two labels for
/// non-neighbours and of the ordered labels for neighbours; otherwise the
/// validator refuses. Runs are grouped by the statistics of their largest
/// labels. For two groups whose combined statistics already force a unique
/// token, all their unions are settled at once; every other union is
/// checked individually.
pub fn validate_interval_unions_fast(labels: &[u32], sigma: &SubsetColouring) -> Result<Verdict> {
    let lp = LabelledPairs::new(labels, sigma)?;
    let n = lp.n;
    let mut counts = Vec::new();
    for a in 0..n {
        for b in a + 2..n {
            if !lp.has_unique(&[(a, b)], &mut counts) {
                return Ok(Verdict::Counterexample((a as u32..=b as u32).collect()));
            }
        }
    }
    let mut key_id: HashMap<TopKey, usize> = HashMap::new();
    let mut keys: Vec<TopKey> = Vec::new();
    let mut runs: Vec<Vec<(usize, usize)>> = Vec::new();
    for a in 0..n {
        for b in a..n {
            let k = lp.top_key(a, b);
            let id = *key_id.entry(k.clone()).or_insert_with(|| {
                keys.push(k);
                runs.push(Vec::new());
                keys.len() - 1
            });
            runs[id].push((a, b));
        }
    }
    // runs of each group sorted by start, for the right-hand side
    let mut by_start = runs.clone();
    for r in &mut by_start {
        r.sort_unstable();
    }
    for (i, left) in runs.iter().enumerate() {
        for (j, right) in by_start.iter().enumerate() {
            if lp.certify(&keys[i], &keys[j]) {
                continue;
            }
            for &(a, b) in left {
                let from = right.partition_point(|&(c, _)| c < b + 2);
                for &(c, d) in &right[from..] {
                    if b - a + d - c < 1 {
                        continue;
                    }
                    let parts = [(a, b), (c, d)];
                    if !lp.has_unique(&parts, &mut counts) {
                        let mut bad: Vec<u32> = (a as u32..=b as u32).collect();
                        bad.extend(c as u32..=d as u32);
                        return Ok(Verdict::Counterexample(bad));
                    }
                }
            }
        }
    }
    Ok(Verdict::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{interval_um, interval_union_pairs, t_um_colouring, union_pairs_colouring};
    use crate::colours::Token;
    use crate::geometry::{interval_hypergraph, rectangle_hypergraph};
    use crate::validate::validate_subset_cf;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn unions_of_three_or_more(n: usize) -> crate::Hypergraph {
        interval_hypergraph(n).union_hypergraph().filter_edges(|e| e.len() >= 3)
    }

    #[test]
    fn interval_union_pairs_up_to_forty() {
        for n in 2..=40 {
            let labels = interval_um(n);
            let v = validate_interval_unions_fast(labels.as_slice(), &interval_union_pairs(n).unwrap()).unwrap();
            assert!(v.is_valid(), "n = {n}: {v:?}");
        }
    }

    #[test]
    fn refuses_colourings_not_given_by_labels() {
        let sigma = SubsetColouring::from_fn(4, 2, |s| Token::int(s[0] as i64)).unwrap();
        assert!(validate_interval_unions_fast(&[1, 1, 1, 1], &sigma).is_err());
    }

    #[test]
    fn constant_colouring_fails_on_the_first_run() {
        let sigma = SubsetColouring::from_fn(5, 2, |_| Token::int(1)).unwrap();
        let v = validate_interval_unions_fast(&[1, 1, 1, 1, 1], &sigma).unwrap();
        assert_eq!(v, Verdict::Counterexample(vec![0, 1, 2]));
        assert!(!validate_intervals_fast(&sigma).is_valid());
    }

    fn arb_labelled() -> impl Strategy<Value = (Vec<u32>, SubsetColouring)> {
        (3usize..=9).prop_flat_map(|n| {
            (proptest::collection::vec(1u32..=3, n), proptest::collection::vec(0i64..4, 3 * 3 * 2)).prop_map(
                move |(labels, table)| {
                    let sigma = SubsetColouring::from_fn(n, 2, |s| {
                        let (x, y) = (labels[s[0] as usize] as usize - 1, labels[s[1] as usize] as usize - 1);
                        if s[1] == s[0] + 1 {
                            Token::with(table[x * 3 + y], &[0])
                        } else {
                            Token::with(table[9 + x.min(y) * 3 + x.max(y)], &[1])
                        }
                    })
                    .unwrap();
                    (labels, sigma)
                },
            )
        })
    }

    fn arb_subset_colouring() -> impl Strategy<Value = SubsetColouring> {
        (2usize..=8, 1usize..=3).prop_flat_map(|(n, t)| {
            let t = t.min(n);
            let k = crate::colours::binomial(n, t) as usize;
            proptest::collection::vec(0i64..3, k).prop_map(move |tok| {
                let mut i = 0;
                SubsetColouring::from_fn(n, t, |_| {
                    i += 1;
                    Token::int(tok[i - 1])
                })
                .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn union_validator_matches_generic((labels, sigma) in arb_labelled()) {
            let fast = validate_interval_unions_fast(&labels, &sigma).unwrap();
            let slow = validate_subset_cf(&unions_of_three_or_more(labels.len()), &sigma).unwrap();
            prop_assert_eq!(fast.is_valid(), slow.is_valid());
        }

        #[test]
        fn interval_sweep_matches_generic(sigma in arb_subset_colouring()) {
            let slow = validate_subset_cf(&interval_hypergraph(sigma.n()), &sigma).unwrap();
            prop_assert_eq!(validate_intervals_fast(&sigma).is_valid(), slow.is_valid());
        }

        #[test]
        fn rectangle_sweep_matches_generic(sigma in arb_subset_colouring(), seed in 0u64..1000) {
            let p = PointSet::random(sigma.n(), &mut ChaCha8Rng::seed_from_u64(seed));
            let slow = validate_subset_cf(&rectangle_hypergraph(&p), &sigma).unwrap();
            prop_assert_eq!(validate_rectangles_fast(&p, &sigma).unwrap().is_valid(), slow.is_valid());
        }
    }

    /// Ruler pair colouring with the token of one label pair replaced by
    /// another's, so some unions may lose their unique token.
    fn merged_ruler(n: usize, from: usize, to: usize) -> (Vec<u32>, SubsetColouring) {
        let sigma = interval_union_pairs(n).unwrap();
        let labels = interval_um(n).as_slice().to_vec();
        let all: Vec<Token> = {
            let mut v: Vec<Token> = sigma.iter().map(|(_, t)| t.clone()).collect();
            v.sort_by_key(|t| format!("{t:?}"));
            v.dedup();
            v
        };
        let (a, b) = (all[from % all.len()].clone(), all[to % all.len()].clone());
        let merged = SubsetColouring::from_fn(n, 2, |s| {
            let tok = sigma.get(s).clone();
            if tok == a { b.clone() } else { tok }
        })
        .unwrap();
        (labels, merged)
    }

    proptest! {
        #[test]
        fn merged_ruler_tokens_agree_with_generic(n in 3usize..=20, from in 0usize..40, to in 0usize..40) {
            let (labels, sigma) = merged_ruler(n, from, to);
            let fast = validate_interval_unions_fast(&labels, &sigma).unwrap();
            let slow = validate_subset_cf(&unions_of_three_or_more(n), &sigma).unwrap();
            prop_assert_eq!(fast.is_valid(), slow.is_valid());
            if let Verdict::Counterexample(bad) = fast {
                prop_assert!(unions_of_three_or_more(n).contains_edge(&bad));
            }
        }
    }

    proptest! {
        #[test]
        fn relabelled_greedy_pairs_agree_with_generic(n in 3usize..=14, at in 0usize..14, label in 1u32..=5) {
            let psi = t_um_colouring(&interval_hypergraph(n), 2).unwrap();
            let mut labels = psi.as_slice().to_vec();
            labels[at % n] = label;
            let sigma = union_pairs_colouring(&crate::VertexColouring::new(labels.clone()).unwrap()).unwrap();
            let fast = validate_interval_unions_fast(&labels, &sigma).unwrap();
            let slow = validate_subset_cf(&unions_of_three_or_more(n), &sigma).unwrap();
            prop_assert_eq!(fast.is_valid(), slow.is_valid());
        }
    }

    #[test]
    fn union_pairs_from_t_um_colourings() {
        for n in [5, 12, 30] {
            let psi = t_um_colouring(&interval_hypergraph(n), 2).unwrap();
            let sigma = union_pairs_colouring(&psi).unwrap();
            let fast = validate_interval_unions_fast(psi.as_slice(), &sigma).unwrap();
            assert!(fast.is_valid());
            if n <= 12 {
                assert!(validate_subset_cf(&unions_of_three_or_more(n), &sigma).unwrap().is_valid());
            }
        }
    }
}
