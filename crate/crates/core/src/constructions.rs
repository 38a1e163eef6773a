//! Explicit independent sets of 2-token graphs.
//!
//! * the parity construction for disjoint unions of paths: cross-component
//!   pairs whose positions share parity, plus within-component pairs whose
//!   positions differ in parity;
//! * the set associated with independent sets `S1 ⊆ V(E_n)` and `S2 ⊆ V(H)`
//!   in `F2(E_n + H)`, and the extraction of `(S1, S2)` from an arbitrary
//!   independent set that meets the cross pairs.
//!
//! Token sets are [`VertexSet`]s over the lexicographic pair indexing of
//! [`crate::token`].

use crate::error::{param, Error, Result};
use crate::graph::{join, path_components, Graph, VertexSet};
use crate::mis::is_independent;
use crate::token::{pair_at, pair_count, pair_index, token_adjacent, TokenVertex};

/// Components of a disjoint union of paths, odd-order components first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathUnionLayout {
    order: usize,
    /// `table[i][j]` is the base vertex at 1-indexed position `j + 1` of the
    /// `i`-th path.
    table: Vec<Vec<usize>>,
}

impl PathUnionLayout {
    fn from_paths(order: usize, paths: Vec<Vec<usize>>) -> Self {
        let (mut table, even): (Vec<_>, Vec<_>) = paths.into_iter().partition(|p| p.len() % 2 == 1);
        table.extend(even);
        PathUnionLayout { order, table }
    }

    /// Layout of an arbitrary graph whose components are all paths, or
    /// `None` if some component is not a path.
    pub fn from_graph(g: &Graph) -> Option<Self> {
        path_components(g).map(|paths| Self::from_paths(g.order(), paths))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn parts(&self) -> Vec<usize> {
        self.table.iter().map(Vec::len).collect()
    }

    pub fn odd_parts(&self) -> usize {
        self.table.iter().filter(|p| p.len() % 2 == 1).count()
    }

    pub fn vertex(&self, component: usize, position: usize) -> usize {
        self.table[component][position - 1]
    }
}

/// Layout for `FamilySpec::PathUnion(parts)`: the paths are numbered
/// consecutively in the given order, then listed odd parts first (stable
/// within each parity class).
pub fn path_union_layout(parts: &[usize]) -> Result<PathUnionLayout> {
    if parts.is_empty() {
        return param("path union needs at least one part");
    }
    if parts.contains(&0) {
        return param("path union parts must be >= 1");
    }
    let mut next = 0;
    let paths = parts
        .iter()
        .map(|&p| {
            let path: Vec<usize> = (next..next + p).collect();
            next += p;
            path
        })
        .collect();
    Ok(PathUnionLayout::from_paths(next, paths))
}

/// Parity construction: an independent set of `F2` of the path union of size
/// `(m² + t² − 2t)/4`.
pub fn path_union_independent_set(layout: &PathUnionLayout) -> VertexSet {
    let n = layout.order;
    let mut members = Vec::new();
    let mut push = |x: usize, y: usize| {
        members.push(pair_index(n, TokenVertex::new(x, y).expect("distinct vertices")));
    };
    for (i, path) in layout.table.iter().enumerate() {
        for l in 0..path.len() {
            for k in l + 1..path.len() {
                if (l + k) % 2 == 1 {
                    push(path[l], path[k]);
                }
            }
        }
        for other in &layout.table[i + 1..] {
            for (l, &x) in path.iter().enumerate() {
                for (k, &y) in other.iter().enumerate() {
                    if (l + k) % 2 == 0 {
                        push(x, y);
                    }
                }
            }
        }
    }
    VertexSet::new(pair_count(n), members).expect("pairs in range")
}

/// Ingredients of an associated independent set in `F2(E_n + H)`.
#[derive(Clone, Debug)]
pub struct AssociatedSetInput {
    pub n: usize,
    pub h: Graph,
    /// Subset of `V(E_n) = 0..n`.
    pub s1: VertexSet,
    /// Independent set of `h`, in `h`'s own labels.
    pub s2: VertexSet,
    /// Independent set of `F2(h − s2)`, written as token pairs of `h`'s
    /// original labels (indexed over `C(|h|, 2)`).
    pub mis_h_minus_s2: VertexSet,
}

fn token_set_is_independent(g: &Graph, pairs: &[TokenVertex]) -> bool {
    pairs
        .iter()
        .enumerate()
        .all(|(i, &p)| pairs[i + 1..].iter().all(|&q| !token_adjacent(g, p, q)))
}

fn contract<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Contract(msg.into()))
}

/// `I_R ∪ I_B` under the join labeling (`E_n` on `0..n`, `H` shifted by
/// `n`): every cross pair `{u, v}` with `u ∈ S1, v ∈ S2`, every pair of
/// `V(E_n) \ S1`, and the given independent set of `F2(H − S2)`.
///
/// Its size is `|S1||S2| + C(n − |S1|, 2) + |mis_h_minus_s2|`.
pub fn associated_independent_set(inp: &AssociatedSetInput) -> Result<VertexSet> {
    let n = inp.n;
    let hn = inp.h.order();
    if inp.s1.parent_order() != n {
        return contract(format!("s1 must be a subset of V(E_{n})"));
    }
    if inp.s2.parent_order() != hn {
        return contract("s2 must be a subset of V(h)");
    }
    if inp.mis_h_minus_s2.parent_order() != pair_count(hn) {
        return contract("mis_h_minus_s2 must be indexed over the token vertices of F2(h)");
    }
    if !is_independent(&inp.h, &inp.s2)? {
        return contract("s2 is not independent in h");
    }
    let residual: Vec<TokenVertex> = inp.mis_h_minus_s2.iter().map(|i| pair_at(hn, i)).collect();
    if let Some(p) = residual.iter().find(|p| inp.s2.contains(p.low()) || inp.s2.contains(p.high())) {
        return contract(format!("mis_h_minus_s2 contains {p}, which meets s2"));
    }
    if !token_set_is_independent(&inp.h, &residual) {
        return contract("mis_h_minus_s2 is not independent in F2(h - s2)");
    }

    let total = n + hn;
    let mut members = Vec::new();
    let mut push = |x: usize, y: usize| {
        members.push(pair_index(total, TokenVertex::new(x, y).expect("distinct vertices")));
    };
    for u in inp.s1.iter() {
        for v in inp.s2.iter() {
            push(u, n + v);
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&u| !inp.s1.contains(u)).collect();
    for (i, &x) in rest.iter().enumerate() {
        for &y in &rest[i + 1..] {
            push(x, y);
        }
    }
    for p in residual {
        push(n + p.low(), n + p.high());
    }
    VertexSet::new(pair_count(total), members)
}

/// Recovers `(S1, S2)` from an independent set `i` of `F2(E_n + h)` that
/// contains at least one cross pair. `S1` collects the `E_n` vertices with a
/// partner in `h`; `S2` is the partner set `N_I(u')` of the `E_n` vertex with
/// the most partners (lowest index on ties), in `h`'s labels.
pub fn extract_s1_s2(i: &VertexSet, n: usize, h: &Graph) -> Result<(VertexSet, VertexSet)> {
    let total = n + h.order();
    if i.parent_order() != pair_count(total) {
        return contract(format!("token set must be indexed over F2 of a graph of order {total}"));
    }
    let pairs: Vec<TokenVertex> = i.iter().map(|x| pair_at(total, x)).collect();
    let g = join(&Graph::new(n), h);
    if !token_set_is_independent(&g, &pairs) {
        return contract("token set is not independent in F2(E_n + h)");
    }
    let mut partners: Vec<Vec<usize>> = vec![Vec::new(); n];
    for p in &pairs {
        if p.low() < n && p.high() >= n {
            partners[p.low()].push(p.high() - n);
        }
    }
    let s1: Vec<usize> = (0..n).filter(|&u| !partners[u].is_empty()).collect();
    if s1.is_empty() {
        return contract("token set contains no cross pair");
    }
    // max_by_key keeps the last maximum; scan in reverse so ties go low
    let pivot = (0..n).rev().max_by_key(|&u| partners[u].len()).expect("n >= 1");
    Ok((
        VertexSet::new(n, s1)?,
        VertexSet::new(h.order(), partners[pivot].iter().copied())?,
    ))
}
