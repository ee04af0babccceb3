use num::rational::Ratio;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colours::for_each_subset;
use crate::hypergraph::{Graph, Hypergraph};

/// Pairs lying together in some hyperedge of size at most `k`.
pub fn build_gt(h: &Hypergraph, k: usize) -> Graph {
    let mut edges = Vec::new();
    for e in h.edges().filter(|e| e.len() <= k) {
        for (a, &u) in e.iter().enumerate() {
            edges.extend(e[a + 1..].iter().map(|&v| (u, v)));
        }
    }
    Graph::from_edges(h.n(), edges)
}

/// Largest ratio `|E(Del(H[V']))| / |V'|` found over every vertex subset of
/// size at most six and `sample_budget` random larger subsets (fixed seed).
/// A lower estimate of the hereditary Delaunay density.
pub fn hld_parameter(h: &Hypergraph, sample_budget: usize) -> Ratio<u64> {
    let n = h.n();
    let mut best = Ratio::from_integer(0u64);
    let mut consider = |subset: &[u32]| {
        let r = Ratio::new(delaunay_edges_induced(h, subset) as u64, subset.len() as u64);
        if r > best {
            best = r;
        }
    };
    let all: Vec<u32> = (0..n as u32).collect();
    for size in 1..=n.min(6) {
        for_each_subset(&all, size, &mut consider);
    }
    if n > 6 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x4c44);
        for _ in 0..sample_budget {
            let size = rng.gen_range(7..=n);
            let mut s: Vec<u32> = sample(&mut rng, n, size).into_iter().map(|v| v as u32).collect();
            s.sort_unstable();
            consider(&s);
        }
    }
    best
}

/// Number of distinct pairs `h ∩ V'` of size two; `subset` sorted.
fn delaunay_edges_induced(h: &Hypergraph, subset: &[u32]) -> usize {
    let mut pairs = Vec::new();
    for e in h.edges() {
        let mut hit = [0u32; 2];
        let mut count = 0;
        let (mut i, mut j) = (0, 0);
        while i < e.len() && j < subset.len() && count <= 2 {
            match e[i].cmp(&subset[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if count < 2 {
                        hit[count] = e[i];
                    }
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        if count == 2 {
            pairs.push((hit[0], hit[1]));
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs.len()
}
