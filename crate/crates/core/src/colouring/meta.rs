use serde::{Deserialize, Serialize};

use crate::colours::VertexColouring;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// One round of the peeling loop: the vertices still present and the
/// auxiliary colouring they received (indexed like `active`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaStep {
    pub active: Vec<u32>,
    pub aux: Vec<u32>,
}

/// Colours `0..n` by peeling. Each round `aux` colours the surviving
/// vertices (given in increasing order); the largest colour class, smallest
/// colour on ties, is removed and its vertices get the round number.
pub fn peel<F>(n: usize, mut aux: F) -> Result<(VertexColouring, Vec<MetaStep>)>
where
    F: FnMut(&[u32]) -> Result<Vec<u32>>,
{
    let mut colours = vec![0u32; n];
    let mut active: Vec<u32> = (0..n as u32).collect();
    let mut trace = Vec::new();
    let mut round = 0;
    while !active.is_empty() {
        round += 1;
        let phi = aux(&active)?;
        if phi.len() != active.len() || phi.contains(&0) {
            return Err(Error::AuxContract { expected: active.len(), got: phi.len() });
        }
        let top = *phi.iter().max().unwrap() as usize;
        let mut size = vec![0usize; top + 1];
        for &c in &phi {
            size[c as usize] += 1;
        }
        // max_by_key keeps the last maximum, so scan colours downwards
        let chosen = (1..=top).rev().max_by_key(|&c| size[c]).unwrap() as u32;
        let mut rest = Vec::with_capacity(active.len());
        for (&v, &c) in active.iter().zip(&phi) {
            if c == chosen {
                colours[v as usize] = round;
            } else {
                rest.push(v);
            }
        }
        trace.push(MetaStep { active: std::mem::replace(&mut active, rest), aux: phi });
    }
    Ok((VertexColouring::new(colours)?, trace))
}

/// The peeling meta-algorithm on a hypergraph: `aux` colours each induced
/// sub-hypergraph on the surviving vertices.
pub fn meta_colour<F>(h: &Hypergraph, aux: F) -> Result<VertexColouring>
where
    F: FnMut(&Hypergraph) -> Result<VertexColouring>,
{
    Ok(meta_colour_traced(h, aux)?.0)
}

/// [`meta_colour`] together with the rounds of the peeling loop.
pub fn meta_colour_traced<F>(h: &Hypergraph, mut aux: F) -> Result<(VertexColouring, Vec<MetaStep>)>
where
    F: FnMut(&Hypergraph) -> Result<VertexColouring>,
{
    peel(h.n(), |active| {
        let (sub, _) = h.induced_subhypergraph(active)?;
        Ok(aux(&sub)?.as_slice().to_vec())
    })
}
