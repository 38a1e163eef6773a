//! Exact maximum independent sets.
//!
//! Two routes: an exhaustive include/exclude enumeration over `u64` masks for
//! graphs of order at most [`EXHAUSTIVE_CAP`], and a branch-and-bound over
//! bitsets for everything else. The exhaustive route is the oracle the
//! branch-and-bound is tested against.

use serde::Serialize;

use crate::bitset::Bitset;
use crate::error::{param, Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`max_independent_set_exhaustive`].
pub const EXHAUSTIVE_CAP: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exhaustive,
    BranchAndBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisResult {
    pub size: usize,
    pub witness: VertexSet,
    pub method: Method,
    pub nodes_explored: u64,
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> Result<bool> {
    if let Some(&bad) = s.members().iter().find(|&&v| v >= g.order()) {
        return param(format!("vertex {bad} out of range for order {}", g.order()));
    }
    let within = s.to_bitset();
    Ok(s.iter().all(|v| !g.neighbors(v).intersects(&within)))
}

/// Exhaustive search returning the lexicographically least maximum
/// independent set. Branches include-before-exclude on the lowest remaining
/// vertex, so the first maximum set reached is the least one; a branch is cut
/// only when it cannot beat the incumbent strictly.
pub fn max_independent_set_exhaustive(g: &Graph) -> Result<MisResult> {
    let n = g.order();
    if n > EXHAUSTIVE_CAP {
        return Err(Error::Capacity {
            order: n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w))
        .collect();

    struct Enum<'a> {
        adj: &'a [u64],
        best: u64,
        nodes: u64,
    }

    impl Enum<'_> {
        fn go(&mut self, candidates: u64, chosen: u64) {
            self.nodes += 1;
            if chosen.count_ones() + candidates.count_ones() <= self.best.count_ones() {
                return;
            }
            if candidates == 0 {
                self.best = chosen;
                return;
            }
            let v = candidates.trailing_zeros();
            let rest = candidates & !(1 << v);
            self.go(rest & !self.adj[v as usize], chosen | 1 << v);
            self.go(rest, chosen);
        }
    }

    let mut e = Enum {
        adj: &adj,
        best: 0,
        nodes: 0,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    e.go(all, 0);
    let members: Vec<usize> = (0..n).filter(|&v| e.best >> v & 1 == 1).collect();
    Ok(MisResult {
        size: members.len(),
        witness: VertexSet::from_sorted(n, members),
        method: Method::Exhaustive,
        nodes_explored: e.nodes,
    })
}

/// Exact maximum independent set by branch-and-bound, without a node limit.
pub fn max_independent_set(g: &Graph) -> MisResult {
    solve(g, None).expect("no budget configured")
}

/// As [`max_independent_set`], giving up with [`Error::BudgetExceeded`] once
/// more than `budget` search nodes have been expanded.
pub fn max_independent_set_with_budget(g: &Graph, budget: u64) -> Result<MisResult> {
    solve(g, Some(budget))
}

fn solve(g: &Graph, budget: Option<u64>) -> Result<MisResult> {
    let n = g.order();
    let adj: Vec<Bitset> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut search = Search {
        adj: &adj,
        budget,
        nodes: 0,
        aborted: false,
        chosen: Vec::new(),
        best: greedy_independent_set(&adj, n),
    };
    search.run(Bitset::full(n));
    if search.aborted {
        return Err(Error::BudgetExceeded {
            budget: budget.unwrap_or(0),
        });
    }
    let mut members = search.best;
    members.sort_unstable();
    Ok(MisResult {
        size: members.len(),
        witness: VertexSet::from_sorted(n, members),
        method: Method::BranchAndBound,
        nodes_explored: search.nodes,
    })
}

/// Repeatedly takes a minimum-degree vertex of the residual graph.
fn greedy_independent_set(adj: &[Bitset], n: usize) -> Vec<usize> {
    let mut residual = Bitset::full(n);
    let mut out = Vec::new();
    while !residual.is_empty() {
        let v = residual
            .iter()
            .min_by_key(|&v| adj[v].intersection_len(&residual))
            .expect("nonempty");
        out.push(v);
        residual.remove(v);
        residual.difference_with(&adj[v]);
    }
    out
}

struct Search<'a> {
    adj: &'a [Bitset],
    budget: Option<u64>,
    nodes: u64,
    aborted: bool,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, mut residual: Bitset) {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.aborted = true;
            return;
        }
        let mark = self.chosen.len();

        // A vertex with at most one residual neighbour belongs to some
        // maximum independent set of the residual graph.
        let branch_vertex = loop {
            let mut forced = None;
            let mut widest: Option<(usize, usize)> = None;
            for v in residual.iter() {
                let d = self.adj[v].intersection_len(&residual);
                if d <= 1 {
                    forced = Some(v);
                    break;
                }
                if widest.is_none_or(|(_, best_d)| d > best_d) {
                    widest = Some((v, d));
                }
            }
            match forced {
                Some(v) => {
                    self.chosen.push(v);
                    residual.remove(v);
                    residual.difference_with(&self.adj[v]);
                }
                None => break widest.map(|(v, _)| v),
            }
        };

        let Some(v) = branch_vertex else {
            if self.chosen.len() > self.best.len() {
                self.best = self.chosen.clone();
            }
            self.chosen.truncate(mark);
            return;
        };

        let room = self.best.len().saturating_sub(self.chosen.len());
        if self.clique_cover_exceeds(&residual, room).is_none() {
            self.chosen.truncate(mark);
            return;
        }

        let mut with_v = residual.clone();
        with_v.remove(v);
        with_v.difference_with(&self.adj[v]);
        self.chosen.push(v);
        self.run(with_v);
        self.chosen.pop();

        if !self.aborted {
            residual.remove(v);
            self.run(residual);
        }
        self.chosen.truncate(mark);
    }

    /// Greedily partitions `residual` into cliques. Returns `None` as soon as
    /// it is clear the partition has at most `limit` cliques, i.e. the
    /// residual graph cannot contribute more than `limit` vertices.
    fn clique_cover_exceeds(&self, residual: &Bitset, limit: usize) -> Option<usize> {
        let mut rest = residual.clone();
        let mut cliques = 0;
        while let Some(v) = rest.first() {
            rest.remove(v);
            let mut common = rest.clone();
            common.intersect_with(&self.adj[v]);
            while let Some(w) = common.first() {
                rest.remove(w);
                common.remove(w);
                common.intersect_with(&self.adj[w]);
            }
            cliques += 1;
            if cliques > limit {
                return Some(cliques);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use crate::token::build_f2;

    fn f2(spec: FamilySpec) -> Graph {
        build_f2(&spec.generate().unwrap()).unwrap().graph().clone()
    }

    #[test]
    fn independence_check() {
        let p3 = FamilySpec::Path(3).generate().unwrap();
        assert!(is_independent(&p3, &VertexSet::new(3, [0, 2]).unwrap()).unwrap());
        assert!(!is_independent(&p3, &VertexSet::new(3, [0, 1]).unwrap()).unwrap());
        assert!(is_independent(&p3, &VertexSet::empty(3)).unwrap());
        assert!(is_independent(&p3, &VertexSet::new(5, [4]).unwrap()).is_err());
    }

    #[test]
    fn exhaustive_examples() {
        assert_eq!(max_independent_set_exhaustive(&Graph::new(4)).unwrap().size, 4);
        let k5 = FamilySpec::Complete(5).generate().unwrap();
        let r = max_independent_set_exhaustive(&k5).unwrap();
        assert_eq!(r.size, 1);
        assert_eq!(r.witness.members(), &[0]);
        assert_eq!(max_independent_set_exhaustive(&f2(FamilySpec::Path(4))).unwrap().size, 4);
        assert_eq!(max_independent_set_exhaustive(&Graph::new(0)).unwrap().size, 0);
    }

    #[test]
    fn exhaustive_witness_is_lexicographically_least() {
        // P4: maximum sets {0,2}, {0,3}, {1,3}
        let p4 = FamilySpec::Path(4).generate().unwrap();
        assert_eq!(max_independent_set_exhaustive(&p4).unwrap().witness.members(), &[0, 2]);
        let c5 = FamilySpec::Cycle(5).generate().unwrap();
        assert_eq!(max_independent_set_exhaustive(&c5).unwrap().witness.members(), &[0, 2]);
    }

    #[test]
    fn exhaustive_cap() {
        let err = max_independent_set_exhaustive(&Graph::new(31)).unwrap_err();
        assert!(matches!(err, Error::Capacity { order: 31, cap: 30 }));
        assert_eq!(max_independent_set_exhaustive(&Graph::new(30)).unwrap().size, 30);
    }

    #[test]
    fn branch_and_bound_examples() {
        assert_eq!(max_independent_set(&f2(FamilySpec::Cycle(5))).size, 5);
        assert_eq!(max_independent_set(&f2(FamilySpec::Fan(2, 3))).size, 4);
        let split = FamilySpec::Join(Box::new(FamilySpec::Empty(3)), Box::new(FamilySpec::Complete(4)));
        let r = max_independent_set(&f2(split));
        assert_eq!(r.size, 5);
        assert_eq!(r.method, Method::BranchAndBound);
    }

    #[test]
    fn budget_abort_is_distinct() {
        let g = f2(FamilySpec::Wheel(4, 7));
        let err = max_independent_set_with_budget(&g, 1).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 1 }));
        let ok = max_independent_set_with_budget(&g, 100_000_000).unwrap();
        assert_eq!(ok.size, max_independent_set(&g).size);
    }

    #[test]
    fn degenerate_graphs() {
        assert_eq!(max_independent_set(&Graph::new(0)).size, 0);
        assert_eq!(max_independent_set(&Graph::new(1)).size, 1);
        assert_eq!(max_independent_set(&Graph::new(70)).size, 70);
    }
}
