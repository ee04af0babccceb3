use crate::colours::VertexColouring;
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};

use super::meta::{meta_colour_traced, MetaStep};

/// Smallest colour not in `used`.
fn first_free(used: &mut Vec<u32>) -> u32 {
    used.sort_unstable();
    used.dedup();
    let mut c = 1;
    for &u in used.iter() {
        if u == c {
            c += 1;
        } else if u > c {
            break;
        }
    }
    c
}

/// Proper colouring along a degeneracy order: repeatedly remove a vertex of
/// minimum degree (smallest index on ties), then colour in reverse removal
/// order with the smallest colour free among later-removed neighbours.
/// Uses at most degeneracy + 1 colours.
pub fn degeneracy_colouring(g: &Graph) -> VertexColouring {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n as u32).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| degree[v]).unwrap();
        removed[v] = true;
        order.push(v as u32);
        for &u in g.neighbours(v as u32) {
            degree[u as usize] = degree[u as usize].saturating_sub(1);
        }
    }
    let mut colours = vec![0u32; n];
    let mut used = Vec::new();
    for &v in order.iter().rev() {
        used.clear();
        used.extend(g.neighbours(v).iter().map(|&u| colours[u as usize]).filter(|&c| c > 0));
        colours[v as usize] = first_free(&mut used);
    }
    VertexColouring::new(colours).expect("greedy colours are positive")
}

/// A colouring in which every hyperedge `h` sees `min(|h|, t + 1)`
/// distinct colours.
///
/// Vertices are removed one at a time by minimum degree in a graph that
/// joins the surviving members of every hyperedge once at most `t + 1` of
/// them survive; each vertex remembers its neighbours at removal. Colouring
/// in reverse removal order, each vertex avoids those neighbours' colours.
pub fn greedy_colourful(h: &Hypergraph, t: usize) -> Result<VertexColouring> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    let k = t + 1;
    let n = h.n();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut size: Vec<usize> = Vec::with_capacity(h.num_edges());
    for (i, e) in h.edges().enumerate() {
        size.push(e.len());
        for &v in e {
            incident[v as usize].push(i);
        }
    }
    let mut adj = vec![false; n * n];
    let mut degree = vec![0usize; n];
    let mut alive = vec![true; n];
    let join = |adj: &mut Vec<bool>, degree: &mut Vec<usize>, members: &[u32], alive: &[bool]| {
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                let (u, v) = (u as usize, v as usize);
                if alive[u] && alive[v] && !adj[u * n + v] {
                    adj[u * n + v] = true;
                    adj[v * n + u] = true;
                    degree[u] += 1;
                    degree[v] += 1;
                }
            }
        }
    };
    for (i, e) in h.edges().enumerate() {
        if size[i] <= k {
            join(&mut adj, &mut degree, e, &alive);
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut later: Vec<Vec<u32>> = vec![Vec::new(); n];
    for _ in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| degree[v]).unwrap();
        alive[v] = false;
        order.push(v);
        for u in 0..n {
            if adj[v * n + u] {
                adj[v * n + u] = false;
                adj[u * n + v] = false;
                degree[u] -= 1;
                later[v].push(u as u32);
            }
        }
        degree[v] = 0;
        for &i in &incident[v] {
            size[i] -= 1;
            if size[i] == k {
                join(&mut adj, &mut degree, h.edge(i), &alive);
            }
        }
    }
    let mut colours = vec![0u32; n];
    let mut used = Vec::new();
    for &v in order.iter().rev() {
        used.clear();
        used.extend(later[v].iter().map(|&u| colours[u as usize]));
        colours[v] = first_free(&mut used);
    }
    VertexColouring::new(colours)
}

/// A t-UM colouring: the peeling meta-algorithm with [`greedy_colourful`]
/// as the auxiliary colouring.
pub fn t_um_colouring(h: &Hypergraph, t: usize) -> Result<VertexColouring> {
    Ok(t_um_colouring_traced(h, t)?.0)
}

/// [`t_um_colouring`] together with the rounds of the peeling loop.
pub fn t_um_colouring_traced(h: &Hypergraph, t: usize) -> Result<(VertexColouring, Vec<MetaStep>)> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    meta_colour_traced(h, |sub| greedy_colourful(sub, t))
}
