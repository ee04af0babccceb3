use crate::colours::{SubsetColouring, Token, VertexColouring};
use crate::error::{Error, Result};

/// Ruler colouring: position `i` (1-based) gets one plus the number of
/// trailing zero bits of `i`. The unique largest label of every run is its
/// deepest midpoint, so this is unique-maximum for intervals.
pub fn interval_um(n: usize) -> VertexColouring {
    VertexColouring::new((1..=n as u32).map(|i| 1 + i.trailing_zeros()).collect()).expect("labels are positive")
}

/// Tag of pair tokens between neighbours on the line.
pub const ADJACENT: i32 = 0;
/// Tag of pair tokens between non-neighbours.
pub const SPREAD: i32 = 1;

/// Pair colouring for unions of two intervals, from the ruler labels `ψ`:
/// neighbours `{i, i+1}` get `(max ψ, [ψ(i) >= ψ(i+1)])`, other pairs get
/// `(ψ(i) + ψ(j), 0)`. A kind tag keeps the two families apart.
pub fn interval_union_pairs(n: usize) -> Result<SubsetColouring> {
    if n < 2 {
        return Err(Error::InvalidArgument("need at least two points".into()));
    }
    let psi = interval_um(n);
    SubsetColouring::from_fn(n, 2, |s| {
        let (a, b) = (psi.colour(s[0]), psi.colour(s[1]));
        if s[1] == s[0] + 1 {
            Token::with(a.max(b) as i64, &[ADJACENT, (a >= b) as i32])
        } else {
            Token::with((a + b) as i64, &[SPREAD, 0])
        }
    })
}
