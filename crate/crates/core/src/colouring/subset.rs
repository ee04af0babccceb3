use crate::colours::{SubsetColouring, Token, VertexColouring};
use crate::error::Result;

/// `φ(S) = Σ_{v∈S} ψ(v)`. Valid whenever `ψ` is t-UM; at most `t·k`
/// distinct sums for `k` colours.
pub fn subset_cf_from_t_um(psi: &VertexColouring, t: usize) -> Result<SubsetColouring> {
    SubsetColouring::from_fn(psi.len(), t, |s| Token::int(s.iter().map(|&v| psi.colour(v) as i64).sum()))
}

/// `φ(S)` = the colours of `S` in vertex order. Valid whenever `c` is
/// t-strong-CF; at most `k^t` tuples.
pub fn subset_cf_from_t_strong(c: &VertexColouring, t: usize) -> Result<SubsetColouring> {
    SubsetColouring::from_fn(c.len(), t, |s| {
        let tail: Vec<i32> = s[1..].iter().map(|&v| c.colour(v) as i32).collect();
        Token::with(c.colour(s[0]) as i64, &tail)
    })
}

/// Pair colouring `(ψ(x) + ψ(y), [ψ(x) ≠ ψ(y)])`, conflict-free on the
/// union hypergraph when `ψ` is 2-UM.
pub fn union_pairs_colouring(psi: &VertexColouring) -> Result<SubsetColouring> {
    SubsetColouring::from_fn(psi.len(), 2, |s| {
        let (a, b) = (psi.colour(s[0]), psi.colour(s[1]));
        Token::with((a + b) as i64, &[(a != b) as i32])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::t_um_colouring;
    use crate::geometry::interval_hypergraph;
    use crate::hypergraph::Hypergraph;
    use crate::validate::{validate, validate_subset_cf, Notion};
    use proptest::prelude::*;

    fn triangle() -> Hypergraph {
        Hypergraph::new(3, vec![vec![0u32, 1, 2]]).unwrap()
    }

    #[test]
    fn sums_on_a_triangle() {
        let psi = VertexColouring::new(vec![1, 2, 3]).unwrap();
        let phi = subset_cf_from_t_um(&psi, 2).unwrap();
        assert_eq!(phi.get(&[0, 1]), &Token::int(3));
        assert_eq!(phi.get(&[0, 2]), &Token::int(4));
        assert_eq!(phi.get(&[1, 2]), &Token::int(5));
        assert!(validate_subset_cf(&triangle(), &phi).unwrap().is_valid());
    }

    #[test]
    fn constant_colouring_on_hyperedge_free_graph() {
        let phi = subset_cf_from_t_um(&VertexColouring::constant(5), 2).unwrap();
        assert_eq!(phi.tokens_used(), 1);
        assert!(validate_subset_cf(&Hypergraph::empty(5), &phi).unwrap().is_valid());
    }

    #[test]
    fn tuples_need_the_strong_premise() {
        let c = VertexColouring::new(vec![1, 2, 1]).unwrap();
        assert!(!validate(&triangle(), &c, Notion::StrongCf, Some(2)).unwrap().is_valid());
        let phi = subset_cf_from_t_strong(&c, 2).unwrap();
        assert_eq!(phi.get(&[0, 1]), &Token::with(1, &[2]));
        assert_eq!(phi.get(&[0, 2]), &Token::with(1, &[1]));
        assert_eq!(phi.get(&[1, 2]), &Token::with(2, &[1]));
        let distinct = subset_cf_from_t_strong(&VertexColouring::all_distinct(6), 3).unwrap();
        assert_eq!(distinct.tokens_used(), 20);
    }

    #[test]
    fn interval_transformations() {
        let h15 = interval_hypergraph(15);
        let psi = t_um_colouring(&h15, 2).unwrap();
        assert!(validate_subset_cf(&h15, &subset_cf_from_t_um(&psi, 2).unwrap()).unwrap().is_valid());
        let h10 = interval_hypergraph(10);
        let c = t_um_colouring(&h10, 2).unwrap();
        assert!(validate_subset_cf(&h10, &subset_cf_from_t_strong(&c, 2).unwrap()).unwrap().is_valid());
    }

    #[test]
    fn union_pairs_on_small_intervals() {
        let psi = VertexColouring::new(vec![1, 2, 3]).unwrap();
        let phi = union_pairs_colouring(&psi).unwrap();
        assert_eq!(phi.get(&[0, 1]), &Token::with(3, &[1]));
        assert_eq!(phi.get(&[0, 2]), &Token::with(4, &[1]));
        assert_eq!(phi.get(&[1, 2]), &Token::with(5, &[1]));
        let equal = union_pairs_colouring(&VertexColouring::new(vec![2, 2, 1, 3]).unwrap()).unwrap();
        assert_ne!(equal.get(&[0, 1]), equal.get(&[2, 3]));

        let h = interval_hypergraph(15);
        let psi = t_um_colouring(&h, 2).unwrap();
        let big = h.union_hypergraph().filter_edges(|e| e.len() >= 3);
        assert!(validate_subset_cf(&big, &union_pairs_colouring(&psi).unwrap()).unwrap().is_valid());
    }

    fn arb_case() -> impl Strategy<Value = (Hypergraph, VertexColouring, usize)> {
        (2usize..=7, 1usize..=3).prop_flat_map(|(n, t)| {
            let edges = proptest::collection::vec(proptest::collection::vec(0..n as u32, 1..=n), 0..10);
            let colours = proptest::collection::vec(1u32..=4, n);
            (edges, colours).prop_map(move |(e, c)| {
                (Hypergraph::new(n, e).unwrap(), VertexColouring::new(c).unwrap(), t.min(n))
            })
        })
    }

    proptest! {
        #[test]
        fn premises_carry_over((h, c, t) in arb_case()) {
            let k = c.colours_used();
            if validate(&h, &c, Notion::TUm, Some(t)).unwrap().is_valid() {
                let phi = subset_cf_from_t_um(&c, t).unwrap();
                prop_assert!(validate_subset_cf(&h, &phi).unwrap().is_valid());
                prop_assert!(phi.tokens_used() <= t * c.max_colour() as usize);
            }
            if validate(&h, &c, Notion::StrongCf, Some(t)).unwrap().is_valid() {
                let phi = subset_cf_from_t_strong(&c, t).unwrap();
                prop_assert!(validate_subset_cf(&h, &phi).unwrap().is_valid());
                prop_assert!(phi.tokens_used() <= k.pow(t as u32));
            }
        }
    }
}
