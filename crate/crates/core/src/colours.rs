//! Vertex colourings, colour tokens and colourings of t-subsets.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Positive-integer colour per vertex. Integer order doubles as the order
/// used by unique-maximum notions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct VertexColouring(Vec<u32>);

impl VertexColouring {
    pub fn new(colours: Vec<u32>) -> Result<Self> {
        if let Some(v) = colours.iter().position(|&c| c == 0) {
            return Err(Error::InvalidArgument(format!("vertex {v} has colour 0; colours start at 1")));
        }
        Ok(VertexColouring(colours))
    }

    pub fn constant(n: usize) -> Self {
        VertexColouring(vec![1; n])
    }

    pub fn all_distinct(n: usize) -> Self {
        VertexColouring((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colour(&self, v: u32) -> u32 {
        self.0[v as usize]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn max_colour(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct colour values.
    pub fn colours_used(&self) -> usize {
        self.0.iter().collect::<HashSet<_>>().len()
    }
}

impl TryFrom<Vec<u32>> for VertexColouring {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        VertexColouring::new(v)
    }
}

impl From<VertexColouring> for Vec<u32> {
    fn from(c: VertexColouring) -> Vec<u32> {
        c.0
    }
}

/// Colour of a t-subset. Compared structurally.
///
/// Text form: `_` for the dummy token, `7` for `Value(7, [])`,
/// `7:1.0.3` for `Value(7, [1, 0, 3])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    Dummy,
    Value(i64, SmallVec<[i32; 4]>),
}

impl Token {
    pub fn int(v: i64) -> Token {
        Token::Value(v, SmallVec::new())
    }

    pub fn with(v: i64, tail: &[i32]) -> Token {
        Token::Value(v, SmallVec::from_slice(tail))
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Dummy => write!(f, "_"),
            Token::Value(v, tail) => {
                write!(f, "{v}")?;
                for (i, x) in tail.iter().enumerate() {
                    write!(f, "{}{x}", if i == 0 { ':' } else { '.' })?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Token {
    type Err = Error;
    fn from_str(s: &str) -> Result<Token> {
        let bad = || Error::InvalidInput(format!("malformed colour token {s:?}"));
        if s == "_" {
            return Ok(Token::Dummy);
        }
        let (head, tail) = match s.split_once(':') {
            Some((h, t)) => (h, Some(t)),
            None => (s, None),
        };
        let v = head.parse::<i64>().map_err(|_| bad())?;
        let mut out = SmallVec::new();
        if let Some(tail) = tail {
            for part in tail.split('.') {
                out.push(part.parse::<i32>().map_err(|_| bad())?);
            }
        }
        Ok(Token::Value(v, out))
    }
}

/// Binomial coefficients `C(a, b)` for `a <= n`, `b <= k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binomials {
    k: usize,
    table: Vec<u64>,
}

impl Binomials {
    pub fn new(n: usize, k: usize) -> Self {
        let mut table = vec![0u64; (n + 1) * (k + 1)];
        for a in 0..=n {
            table[a * (k + 1)] = 1;
            for b in 1..=k.min(a) {
                let left = if b < a { table[(a - 1) * (k + 1) + b] } else { 0 };
                table[a * (k + 1) + b] = table[(a - 1) * (k + 1) + b - 1].saturating_add(left);
            }
        }
        Binomials { k, table }
    }

    pub fn get(&self, a: usize, b: usize) -> u64 {
        if b > self.k || b > a {
            return 0;
        }
        self.table[a * (self.k + 1) + b]
    }
}

/// `C(n, k)` without a table; saturates at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Calls `f` on every `t`-subset of `items` (as a sorted slice when `items`
/// is sorted), in colex order of positions.
pub fn for_each_subset<F: FnMut(&[u32])>(items: &[u32], t: usize, mut f: F) {
    if t > items.len() {
        return;
    }
    if t == 0 {
        f(&[]);
        return;
    }
    let mut idx: Vec<usize> = (0..t).collect();
    let mut buf: Vec<u32> = idx.iter().map(|&i| items[i]).collect();
    loop {
        f(&buf);
        // advance to the next colex combination
        let mut j = 0;
        while j + 1 < t && idx[j] + 1 == idx[j + 1] {
            idx[j] = j;
            buf[j] = items[j];
            j += 1;
        }
        idx[j] += 1;
        if idx[j] >= items.len() {
            return;
        }
        buf[j] = items[idx[j]];
    }
}

/// A colouring of all `t`-subsets of `0..n`, stored by colex rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetColouring {
    n: usize,
    t: usize,
    binom: Binomials,
    tokens: Vec<Token>,
}

impl SubsetColouring {
    /// Builds the colouring by evaluating `f` on every sorted `t`-subset.
    pub fn from_fn(n: usize, t: usize, mut f: impl FnMut(&[u32]) -> Token) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidArgument("subset size t must be at least 1".into()));
        }
        let total = binomial(n, t);
        if total > 50_000_000 {
            return Err(Error::SizeLimit { what: format!("C({n},{t}) subsets"), limit: 50_000_000 });
        }
        let mut tokens = Vec::with_capacity(total as usize);
        let all: Vec<u32> = (0..n as u32).collect();
        for_each_subset(&all, t, |s| tokens.push(f(s)));
        Ok(SubsetColouring { n, t, binom: Binomials::new(n, t), tokens })
    }

    /// Assembles a colouring from `(subset, token)` pairs; every subset must
    /// appear exactly once.
    pub fn from_assignments(
        n: usize,
        t: usize,
        pairs: impl IntoIterator<Item = (Vec<u32>, Token)>,
    ) -> Result<Self> {
        let mut slots: Vec<Option<Token>> = vec![None; binomial(n, t) as usize];
        let binom = Binomials::new(n, t);
        for (mut s, tok) in pairs {
            s.sort_unstable();
            s.dedup();
            if s.len() != t || s.iter().any(|&v| v as usize >= n) {
                return Err(Error::InvalidInput(format!("{s:?} is not a {t}-subset of 0..{n}")));
            }
            let r = colex_rank(&binom, &s);
            if slots[r].replace(tok).is_some() {
                return Err(Error::InvalidInput(format!("subset {s:?} coloured twice")));
            }
        }
        let tokens = slots
            .into_iter()
            .enumerate()
            .map(|(r, tok)| tok.ok_or_else(|| Error::InvalidInput(format!("subset of rank {r} is uncoloured"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubsetColouring { n, t, binom, tokens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Token of a sorted `t`-subset.
    pub fn get(&self, subset: &[u32]) -> &Token {
        debug_assert_eq!(subset.len(), self.t);
        &self.tokens[colex_rank(&self.binom, subset)]
    }

    pub fn rank_of(&self, subset: &[u32]) -> usize {
        colex_rank(&self.binom, subset)
    }

    pub fn token_at_rank(&self, rank: usize) -> &Token {
        &self.tokens[rank]
    }

    pub fn num_subsets(&self) -> usize {
        self.tokens.len()
    }

    /// Number of distinct tokens; the colour count of this colouring.
    pub fn tokens_used(&self) -> usize {
        self.tokens.iter().collect::<HashSet<_>>().len()
    }

    /// `(subset, token)` in colex order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<u32>, &Token)> + '_ {
        let mut subsets = Vec::with_capacity(self.tokens.len());
        let all: Vec<u32> = (0..self.n as u32).collect();
        for_each_subset(&all, self.t, |s| subsets.push(s.to_vec()));
        subsets.into_iter().zip(self.tokens.iter())
    }

    /// Dense token ids (`0..tokens_used`) indexed by colex rank.
    pub fn token_ids(&self) -> Vec<u32> {
        let mut ids = std::collections::HashMap::new();
        self.tokens
            .iter()
            .map(|tok| {
                let next = ids.len() as u32;
                *ids.entry(tok).or_insert(next)
            })
            .collect()
    }
}

fn colex_rank(binom: &Binomials, subset: &[u32]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(i, &v)| binom.get(v as usize, i + 1) as usize)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomials_match_direct_formula() {
        let b = Binomials::new(30, 4);
        for n in 0..=30 {
            for k in 0..=4 {
                assert_eq!(b.get(n, k), binomial(n, k), "C({n},{k})");
            }
        }
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn subsets_enumerate_in_colex_order() {
        let mut seen = Vec::new();
        for_each_subset(&[0, 1, 2, 3], 2, |s| seen.push(s.to_vec()));
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_subset(&[4, 7], 3, |_| count += 1);
        assert_eq!(count, 0);
    }

    #[test]
    fn rank_agrees_with_enumeration_order() {
        let c = SubsetColouring::from_fn(7, 3, |s| Token::int(s.iter().map(|&v| v as i64).sum())).unwrap();
        for (r, (s, _)) in c.iter().enumerate() {
            assert_eq!(c.rank_of(&s), r);
        }
        assert_eq!(c.num_subsets(), 35);
    }

    #[test]
    fn token_text_form() {
        for tok in [Token::Dummy, Token::int(-3), Token::with(12, &[1, 0, 9])] {
            assert_eq!(tok.to_string().parse::<Token>().unwrap(), tok);
        }
        assert_eq!(Token::with(4, &[1, 0]).to_string(), "4:1.0");
        assert!("4:x".parse::<Token>().is_err());
    }

    #[test]
    fn colour_zero_is_rejected() {
        assert!(VertexColouring::new(vec![1, 0]).is_err());
        assert_eq!(VertexColouring::new(vec![3, 1, 3]).unwrap().colours_used(), 2);
    }

    #[test]
    fn assignments_must_cover_every_subset() {
        let pairs = vec![(vec![0, 1], Token::int(1)), (vec![1, 2], Token::int(1))];
        assert!(SubsetColouring::from_assignments(3, 2, pairs).is_err());
    }

    proptest! {
        #[test]
        fn assignment_round_trip(n in 2usize..9, t in 1usize..4, salt in 0i64..100) {
            prop_assume!(t <= n);
            let c = SubsetColouring::from_fn(n, t, |s| Token::int(s[0] as i64 * salt + s.len() as i64)).unwrap();
            let back = SubsetColouring::from_assignments(n, t, c.iter().map(|(s, tok)| (s, tok.clone()))).unwrap();
            prop_assert_eq!(back, c);
        }
    }
}
