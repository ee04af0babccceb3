//! Hypergraphs with a canonical hyperedge order, plus the simple graphs
//! (Delaunay graphs, interference graphs) derived from them.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A hypergraph on vertices `0..n`.
///
/// Hyperedges are nonempty, deduplicated, stored with sorted members and in
/// lexicographic order, so two hypergraphs are equal iff they compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    offsets: Vec<usize>,
    members: Vec<u32>,
}

impl Hypergraph {
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = u32>,
    {
        let mut list = Vec::new();
        for e in edges {
            let mut e: Vec<u32> = e.into_iter().collect();
            if let Some(&v) = e.iter().find(|&&v| v as usize >= n) {
                return Err(Error::VertexOutOfRange { vertex: v as usize, n });
            }
            e.sort_unstable();
            e.dedup();
            if !e.is_empty() {
                list.push(e);
            }
        }
        Ok(Self::from_sorted_lists(n, list))
    }

    /// Hyperedges must already be sorted, in range and nonempty.
    pub(crate) fn from_sorted_lists(n: usize, mut list: Vec<Vec<u32>>) -> Self {
        list.sort_unstable();
        list.dedup();
        let mut offsets = Vec::with_capacity(list.len() + 1);
        let mut members = Vec::with_capacity(list.iter().map(Vec::len).sum());
        offsets.push(0);
        for e in &list {
            members.extend_from_slice(e);
            offsets.push(members.len());
        }
        Hypergraph { n, offsets, members }
    }

    pub fn empty(n: usize) -> Self {
        Hypergraph { n, offsets: vec![0], members: Vec::new() }
    }

    /// The complete graph `K_n` viewed as a hypergraph (all pairs).
    pub fn complete_graph(n: usize) -> Self {
        let mut list = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                list.push(vec![u, v]);
            }
        }
        Self::from_sorted_lists(n, list)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge(&self, i: usize) -> &[u32] {
        &self.members[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        (0..self.num_edges()).map(move |i| self.edge(i))
    }

    pub fn contains_edge(&self, e: &[u32]) -> bool {
        let (mut lo, mut hi) = (0, self.num_edges());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.edge(mid).cmp(e) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Largest hyperedge cardinality (0 when there are no hyperedges).
    pub fn rank(&self) -> usize {
        self.edges().map(<[u32]>::len).max().unwrap_or(0)
    }

    /// Keeps the hyperedges satisfying `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(&[u32]) -> bool) -> Hypergraph {
        let mut offsets = vec![0];
        let mut members = Vec::new();
        for e in self.edges() {
            if keep(e) {
                members.extend_from_slice(e);
                offsets.push(members.len());
            }
        }
        Hypergraph { n: self.n, offsets, members }
    }

    /// `H[V']`: restricts every hyperedge to `keep` and re-indexes the kept
    /// vertices to `0..|V'|` in increasing order. Returns the new hypergraph
    /// and the map from new index to old vertex.
    pub fn induced_subhypergraph(&self, keep: &[u32]) -> Result<(Hypergraph, Vec<u32>)> {
        let mut old_of: Vec<u32> = keep.to_vec();
        old_of.sort_unstable();
        old_of.dedup();
        if let Some(&v) = old_of.last() {
            if v as usize >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v as usize, n: self.n });
            }
        }
        let mut new_of = vec![u32::MAX; self.n];
        for (i, &v) in old_of.iter().enumerate() {
            new_of[v as usize] = i as u32;
        }
        let mut list = Vec::with_capacity(self.num_edges());
        for e in self.edges() {
            let restricted: Vec<u32> = e
                .iter()
                .map(|&v| new_of[v as usize])
                .filter(|&v| v != u32::MAX)
                .collect();
            if !restricted.is_empty() {
                list.push(restricted);
            }
        }
        Ok((Self::from_sorted_lists(old_of.len(), list), old_of))
    }

    /// The graph formed by the hyperedges of size exactly two.
    pub fn delaunay_graph(&self) -> Graph {
        Graph::from_edges(
            self.n,
            self.edges().filter(|e| e.len() == 2).map(|e| (e[0], e[1])),
        )
    }

    /// `H^∪`: all unions `e ∪ f` of two hyperedges, `e = f` included.
    pub fn union_hypergraph(&self) -> Hypergraph {
        let m = self.num_edges();
        let mut list = Vec::with_capacity(m * (m + 1) / 2);
        for i in 0..m {
            let e = self.edge(i);
            list.push(e.to_vec());
            for j in i + 1..m {
                list.push(merge_sorted(e, self.edge(j)));
            }
        }
        Self::from_sorted_lists(self.n, list)
    }

    /// Number of vertex pairs that lie together in some hyperedge of size at
    /// most `k`.
    pub fn count_pairs_in_small_hyperedges(&self, k: usize) -> usize {
        let mut pairs = BTreeSet::new();
        for e in self.edges().filter(|e| e.len() <= k) {
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    pairs.insert((u, v));
                }
            }
        }
        pairs.len()
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

pub(crate) fn merge_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Simple undirected graph on `0..n`, no loops, no parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<u32>>,
    num_edges: usize,
}

impl Graph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                continue;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut num_edges = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            num_edges += list.len();
        }
        Graph { n, adj, num_edges: num_edges / 2 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn neighbours(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter().filter(move |&&v| v as usize > u).map(move |&v| (u as u32, v))
        })
    }

    /// Whether every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n <= other.n && self.edges().all(|(u, v)| other.has_edge(u, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[u32]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn canonical_order_and_dedup() {
        let h = hg(3, &[&[2, 1], &[0], &[1, 2], &[]]);
        assert_eq!(h.num_edges(), 2);
        assert_eq!(h.edge(0), &[0]);
        assert_eq!(h.edge(1), &[1, 2]);
        assert_eq!(h, hg(3, &[&[0], &[1, 2]]));
    }

    #[test]
    fn out_of_range_vertex_is_rejected() {
        let err = Hypergraph::new(2, vec![vec![0u32, 2]]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { vertex: 2, n: 2 });
    }

    #[test]
    fn induced_restricts_and_reindexes() {
        let h = hg(3, &[&[0, 1, 2]]);
        let (sub, map) = h.induced_subhypergraph(&[0, 2]).unwrap();
        assert_eq!(sub, hg(2, &[&[0, 1]]));
        assert_eq!(map, vec![0, 2]);

        let h = hg(3, &[&[0, 1], &[1, 2]]);
        let (sub, _) = h.induced_subhypergraph(&[0, 1]).unwrap();
        assert_eq!(sub, hg(2, &[&[0, 1], &[1]]));

        let h = hg(3, &[&[0, 1], &[0, 2]]);
        let (sub, _) = h.induced_subhypergraph(&[0]).unwrap();
        assert_eq!(sub, hg(1, &[&[0]]));

        let (sub, map) = h.induced_subhypergraph(&[]).unwrap();
        assert_eq!(sub.n(), 0);
        assert_eq!(sub.num_edges(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn delaunay_graph_takes_pairs_only() {
        let path = hg(3, &[&[0], &[1], &[2], &[0, 1], &[1, 2], &[0, 1, 2]]);
        let g = path.delaunay_graph();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        assert_eq!(hg(3, &[&[0, 1, 2]]).delaunay_graph().num_edges(), 0);
        assert_eq!(Hypergraph::complete_graph(5).delaunay_graph().num_edges(), 10);
    }

    #[test]
    fn union_examples() {
        assert_eq!(hg(2, &[&[0], &[1]]).union_hypergraph(), hg(2, &[&[0], &[1], &[0, 1]]));
        assert_eq!(
            hg(3, &[&[0, 1], &[1, 2]]).union_hypergraph(),
            hg(3, &[&[0, 1], &[1, 2], &[0, 1, 2]])
        );
    }

    #[test]
    fn union_of_three_point_intervals() {
        // Exhaustive: the 6 intervals on 3 points pairwise union to the
        // 6 intervals plus {0,2}.
        let h = hg(3, &[&[0], &[1], &[2], &[0, 1], &[1, 2], &[0, 1, 2]]);
        let u = h.union_hypergraph();
        assert_eq!(u.num_edges(), 7);
        assert!(u.contains_edge(&[0, 2]));
    }

    #[test]
    fn pairs_in_small_hyperedges() {
        let k4 = Hypergraph::complete_graph(4);
        assert_eq!(k4.count_pairs_in_small_hyperedges(2), 6);
        assert_eq!(k4.count_pairs_in_small_hyperedges(1), 0);
    }

    #[test]
    fn graph_dedups_and_drops_loops() {
        let g = Graph::from_edges(3, vec![(0, 1), (1, 0), (2, 2), (1, 2)]);
        assert_eq!(g.num_edges(), 2);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree(1), 2);
    }
}
