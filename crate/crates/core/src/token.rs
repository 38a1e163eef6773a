//! The 2-token graph `F2(G)`: vertices are the 2-subsets of `V(G)`, two of
//! them adjacent exactly when their symmetric difference is an edge of `G`.
//!
//! Token vertices are indexed in lexicographic order of their pairs, so
//! `{0,1}, {0,2}, .., {0,n-1}, {1,2}, ..`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{param, Result};
use crate::graph::{Graph, VertexSet};

/// Canonical 2-subset `{a, b}` with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TokenVertex {
    a: usize,
    b: usize,
}

impl TokenVertex {
    pub fn new(x: usize, y: usize) -> Result<Self> {
        if x == y {
            return param(format!("token pair needs two distinct vertices, got {{{x},{y}}}"));
        }
        Ok(TokenVertex {
            a: x.min(y),
            b: x.max(y),
        })
    }

    pub fn low(self) -> usize {
        self.a
    }

    pub fn high(self) -> usize {
        self.b
    }

    pub fn contains(self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    /// Element shared with `other` when the two pairs meet in exactly one
    /// vertex, together with the two unshared elements.
    fn pivot(self, other: TokenVertex) -> Option<(usize, usize)> {
        match (self.a == other.a, self.a == other.b, self.b == other.a, self.b == other.b) {
            (true, false, false, false) => Some((self.b, other.b)),
            (false, true, false, false) => Some((self.b, other.a)),
            (false, false, true, false) => Some((self.a, other.b)),
            (false, false, false, true) => Some((self.a, other.a)),
            _ => None,
        }
    }
}

impl fmt::Display for TokenVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

impl Serialize for TokenVertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `C(n, 2)`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Lexicographic index of `pair` among the 2-subsets of `0..n`.
pub fn pair_index(n: usize, pair: TokenVertex) -> usize {
    let a = pair.a;
    debug_assert!(pair.b < n);
    a * (2 * n - a - 1) / 2 + (pair.b - a - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_at(n: usize, mut index: usize) -> TokenVertex {
    let mut a = 0;
    while index >= n - a - 1 {
        index -= n - a - 1;
        a += 1;
    }
    TokenVertex { a, b: a + 1 + index }
}

/// Whether `p` and `q` are adjacent in `F2(g)`.
pub fn token_adjacent(g: &Graph, p: TokenVertex, q: TokenVertex) -> bool {
    p.pivot(q).is_some_and(|(x, y)| g.has_edge(x, y))
}

/// Materialized `F2(base)` with the pair <-> index correspondence.
#[derive(Clone, Debug)]
pub struct TokenGraph {
    base: Graph,
    graph: Graph,
    pairs: Vec<TokenVertex>,
}

impl TokenGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn pairs(&self) -> &[TokenVertex] {
        &self.pairs
    }

    pub fn pair_of(&self, index: usize) -> TokenVertex {
        self.pairs[index]
    }

    pub fn index_of(&self, pair: TokenVertex) -> Option<usize> {
        (pair.b < self.base.order()).then(|| pair_index(self.base.order(), pair))
    }

    /// Token-graph vertex set made of the given pairs.
    pub fn set_of_pairs<I: IntoIterator<Item = TokenVertex>>(&self, pairs: I) -> Result<VertexSet> {
        let mut idx = Vec::new();
        for p in pairs {
            match self.index_of(p) {
                Some(i) => idx.push(i),
                None => return param(format!("pair {p} is not a vertex of this token graph")),
            }
        }
        VertexSet::new(self.pairs.len(), idx)
    }

    pub fn pairs_of_set(&self, set: &VertexSet) -> Vec<TokenVertex> {
        set.iter().map(|i| self.pairs[i]).collect()
    }
}

/// Builds `F2(g)`. Each base edge `(u, v)` yields one token edge
/// `{u,w} ~ {v,w}` for every third vertex `w`.
pub fn build_f2(g: &Graph) -> Result<TokenGraph> {
    let n = g.order();
    if n < 2 {
        return param(format!("2-token graph needs a base graph of order >= 2, got {n}"));
    }
    let pairs: Vec<TokenVertex> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| TokenVertex { a, b }))
        .collect();
    let mut edges = Vec::with_capacity((n - 2) * g.edge_count());
    for &(u, v) in g.edges() {
        for w in (0..n).filter(|&w| w != u && w != v) {
            let p = pair_index(n, TokenVertex::new(u, w).expect("distinct"));
            let q = pair_index(n, TokenVertex::new(v, w).expect("distinct"));
            edges.push((p.min(q), p.max(q)));
        }
    }
    Ok(TokenGraph {
        base: g.clone(),
        graph: Graph::from_canonical(pairs.len(), edges),
        pairs,
    })
}

/// Token vertices of `F2(G1 + G2)` split by where their two elements live:
/// both in `G1`, both in `G2`, or one on each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinPartition {
    pub b1: VertexSet,
    pub b2: VertexSet,
    pub r: VertexSet,
}

/// Partitions the token vertices of `tg` at `split`, the order of the first
/// join operand.
pub fn join_partition(tg: &TokenGraph, split: usize) -> Result<JoinPartition> {
    let n = tg.base.order();
    if split == 0 || split >= n {
        return param(format!("join split must satisfy 0 < split < {n}, got {split}"));
    }
    let (mut b1, mut b2, mut r) = (Vec::new(), Vec::new(), Vec::new());
    for (i, p) in tg.pairs.iter().enumerate() {
        match (p.a < split, p.b < split) {
            (true, true) => b1.push(i),
            (false, false) => b2.push(i),
            _ => r.push(i),
        }
    }
    let order = tg.pairs.len();
    Ok(JoinPartition {
        b1: VertexSet::from_sorted(order, b1),
        b2: VertexSet::from_sorted(order, b2),
        r: VertexSet::from_sorted(order, r),
    })
}
