//! Symbolic graph families and their generators.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{param, Result};
use crate::graph::{disjoint_union, join, Graph};

/// A member of one of the supported graph families.
///
/// Every `E_n + H` family is generated as `join(Empty(n), H)`, so the `n`
/// edgeless vertices come first and `H` occupies `n..n + |H|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Empty(usize),
    Complete(usize),
    PathUnion(Vec<usize>),
    /// `E_n + P_m`
    Fan(usize, usize),
    /// `E_n + C_m`
    Wheel(usize, usize),
    /// `E_n + K_m`
    Split(usize, usize),
    /// `K_{n,m} = E_n + E_m`
    CompleteBipartite(usize, usize),
    Join(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        match self {
            Path(m) if *m < 1 => param("path requires m >= 1"),
            Cycle(m) if *m < 3 => param(format!("cycle requires m >= 3, got {m}")),
            Empty(n) | Complete(n) if *n < 1 => param(format!("{} requires n >= 1", self.tag())),
            PathUnion(parts) if parts.is_empty() => param("path union requires at least one part"),
            PathUnion(parts) if parts.contains(&0) => param("path union parts must be >= 1"),
            Fan(n, m) | Split(n, m) | CompleteBipartite(n, m) if *n < 1 || *m < 1 => {
                param(format!("{} requires n >= 1 and m >= 1", self.tag()))
            }
            Wheel(n, _) if *n < 1 => param("wheel requires n >= 1"),
            Wheel(_, m) if *m < 3 => param(format!("wheel requires m >= 3, got {m}")),
            Join(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// Short lowercase family name as used on the command line.
    pub fn tag(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Path(_) => "path",
            Cycle(_) => "cycle",
            Empty(_) => "empty",
            Complete(_) => "complete",
            PathUnion(_) => "path-union",
            Fan(..) => "fan",
            Wheel(..) => "wheel",
            Split(..) => "split",
            CompleteBipartite(..) => "complete-bipartite",
            Join(..) => "join",
        }
    }

    /// `(n, m)` as they appear in report rows; single-parameter families
    /// report their parameter under the letter they are written with.
    pub fn params(&self) -> (Option<usize>, Option<usize>) {
        use FamilySpec::*;
        match *self {
            Path(m) | Cycle(m) => (None, Some(m)),
            Empty(n) | Complete(n) => (Some(n), None),
            Fan(n, m) | Wheel(n, m) | Split(n, m) | CompleteBipartite(n, m) => (Some(n), Some(m)),
            PathUnion(_) | Join(..) => (None, None),
        }
    }

    pub fn parts(&self) -> Option<&[usize]> {
        match self {
            FamilySpec::PathUnion(parts) => Some(parts),
            _ => None,
        }
    }

    /// For `E_n + H` families, the size `n` of the edgeless side and the
    /// spec of `H`.
    pub fn as_empty_join(&self) -> Option<(usize, FamilySpec)> {
        use FamilySpec::*;
        match self {
            Fan(n, m) => Some((*n, Path(*m))),
            Wheel(n, m) => Some((*n, Cycle(*m))),
            Split(n, m) => Some((*n, Complete(*m))),
            CompleteBipartite(n, m) => Some((*n, Empty(*m))),
            Join(a, b) => match **a {
                Empty(n) => Some((n, (**b).clone())),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match self {
            Path(m) | Cycle(m) | Empty(m) | Complete(m) => *m,
            PathUnion(parts) => parts.iter().sum(),
            Fan(n, m) | Wheel(n, m) | Split(n, m) | CompleteBipartite(n, m) => n + m,
            Join(a, b) => a.order() + b.order(),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        Ok(self.build())
    }

    fn build(&self) -> Graph {
        use FamilySpec::*;
        match self {
            Path(m) => Graph::from_canonical(*m, (1..*m).map(|i| (i - 1, i)).collect()),
            Cycle(m) => {
                let mut edges: Vec<_> = (1..*m).map(|i| (i - 1, i)).collect();
                edges.push((0, m - 1));
                Graph::from_canonical(*m, edges)
            }
            Empty(n) => Graph::new(*n),
            Complete(n) => Graph::from_canonical(
                *n,
                (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))).collect(),
            ),
            PathUnion(parts) => parts
                .iter()
                .fold(Graph::new(0), |acc, &p| disjoint_union(&acc, &Path(p).build())),
            Fan(n, m) => join(&Graph::new(*n), &Path(*m).build()),
            Wheel(n, m) => join(&Graph::new(*n), &Cycle(*m).build()),
            Split(n, m) => join(&Graph::new(*n), &Complete(*m).build()),
            CompleteBipartite(n, m) => join(&Graph::new(*n), &Graph::new(*m)),
            Join(a, b) => join(&a.build(), &b.build()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(m) | Cycle(m) => write!(f, "{}(m={m})", self.tag()),
            Empty(n) | Complete(n) => write!(f, "{}(n={n})", self.tag()),
            PathUnion(parts) => {
                let joined: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "path-union({})", joined.join(","))
            }
            Fan(n, m) | Wheel(n, m) | Split(n, m) | CompleteBipartite(n, m) => {
                write!(f, "{}(n={n},m={m})", self.tag())
            }
            Join(a, b) => write!(f, "join({a},{b})"),
        }
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
