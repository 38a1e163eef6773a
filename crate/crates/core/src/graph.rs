//! Simple undirected graphs on vertices `0..order` and the operators the
//! join families are assembled from.

use std::fmt;

use rand::Rng;

use crate::bitset::Bitset;
use crate::error::{param, Result};

/// Simple undirected graph. Edges are kept sorted in canonical `(low, high)`
/// form alongside one adjacency bitset per vertex.
#[derive(Clone)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Bitset>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Self {
        Graph {
            order,
            edges: Vec::new(),
            adjacency: vec![Bitset::new(order); order],
        }
    }

    /// Builds a graph from an edge iterator. Pairs may come in either
    /// orientation and may repeat; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut canonical = Vec::new();
        for (u, v) in edges {
            if u == v {
                return param(format!("self-loop at vertex {u}"));
            }
            if u >= order || v >= order {
                return param(format!("edge ({u},{v}) has an endpoint >= order {order}"));
            }
            canonical.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_canonical(order, canonical))
    }

    pub(crate) fn from_canonical(order: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Bitset::new(order); order];
        for &(u, v) in &edges {
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Graph {
            order,
            edges,
            adjacency,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adjacency[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.order];
        if perm.len() != self.order {
            return param("permutation length differs from graph order");
        }
        for &p in perm {
            if p >= self.order || std::mem::replace(&mut seen[p], true) {
                return param("relabeling is not a permutation");
            }
        }
        Graph::from_edges(self.order, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Erdős–Rényi graph: each of the C(order, 2) pairs is an edge with
    /// probability `p`.
    pub fn gnp<R: Rng + ?Sized>(order: usize, p: f64, rng: &mut R) -> Graph {
        let mut edges = Vec::new();
        for u in 0..order {
            for v in u + 1..order {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_canonical(order, edges)
    }
}

/// Sorted, duplicate-free subset of the vertices of a graph of order
/// `parent_order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    parent_order: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(parent_order: usize, members: I) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&v| v >= parent_order) {
            return param(format!("vertex {bad} out of range for order {parent_order}"));
        }
        Ok(VertexSet {
            parent_order,
            members,
        })
    }

    pub fn empty(parent_order: usize) -> Self {
        VertexSet {
            parent_order,
            members: Vec::new(),
        }
    }

    pub fn all(parent_order: usize) -> Self {
        VertexSet {
            parent_order,
            members: (0..parent_order).collect(),
        }
    }

    /// `members` must already be sorted, distinct and in range.
    pub(crate) fn from_sorted(parent_order: usize, members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.last().is_none_or(|&v| v < parent_order));
        VertexSet {
            parent_order,
            members,
        }
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn to_bitset(&self) -> Bitset {
        let mut b = Bitset::new(self.parent_order);
        for &v in &self.members {
            b.insert(v);
        }
        b
    }
}

/// Join of two graphs: disjoint union plus every edge between them. The
/// vertices of `g2` are shifted by `g1.order()`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let shift = g1.order();
    let mut edges = g1.edges.clone();
    edges.extend(g2.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
    for u in 0..shift {
        for v in 0..g2.order() {
            edges.push((u, v + shift));
        }
    }
    Graph::from_canonical(shift + g2.order(), edges)
}

/// Disjoint union, `g2` shifted by `g1.order()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let shift = g1.order();
    let mut edges = g1.edges.clone();
    edges.extend(g2.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::from_canonical(shift + g2.order(), edges)
}

/// Induced subgraph on `V(g) \ removed`, renumbered to `0..` in increasing
/// order. The returned map sends each new index to its original vertex.
pub fn delete_vertices(g: &Graph, removed: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    if removed.parent_order() > g.order() {
        if let Some(&bad) = removed.members().iter().find(|&&v| v >= g.order()) {
            return param(format!("vertex {bad} out of range for order {}", g.order()));
        }
    }
    let kept: Vec<usize> = (0..g.order()).filter(|&v| !removed.contains(v)).collect();
    Ok((induced_subgraph(g, &kept), kept))
}

/// Induced subgraph on the listed vertices (sorted, distinct), vertex `i` of
/// the result being `kept[i]`.
pub fn induced_subgraph(g: &Graph, kept: &[usize]) -> Graph {
    let mut new_index = vec![usize::MAX; g.order()];
    for (i, &v) in kept.iter().enumerate() {
        new_index[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| new_index[u] != usize::MAX && new_index[v] != usize::MAX)
        .map(|&(u, v)| (new_index[u], new_index[v]))
        .collect();
    Graph::from_canonical(kept.len(), edges)
}

/// Connected components, each sorted, listed by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for start in 0..g.order() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut members = Vec::new();
        while let Some(v) = stack.pop() {
            members.push(v);
            for w in g.neighbors(v).iter() {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(VertexSet::from_sorted(g.order(), members));
    }
    out
}

/// Number of components with an odd number of vertices.
pub fn odd_component_count(g: &Graph) -> usize {
    components(g).iter().filter(|c| c.len() % 2 == 1).count()
}

/// If every component of `g` is a path, returns each component's vertices in
/// path order (starting from its lower-numbered end), components listed by
/// smallest member.
pub fn path_components(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for comp in components(g) {
        let edges_inside: usize = comp.iter().map(|v| g.degree(v)).sum::<usize>() / 2;
        if edges_inside + 1 != comp.len() || comp.iter().any(|v| g.degree(v) > 2) {
            return None;
        }
        let start = comp.iter().find(|&v| g.degree(v) <= 1)?;
        let mut walk = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(next) = g.neighbors(cur).iter().find(|&w| w != prev) {
            walk.push(next);
            prev = cur;
            cur = next;
        }
        out.push(walk);
    }
    Some(out)
}
