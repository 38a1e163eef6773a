//! Cross-checking driver: evaluates closed form, explicit construction and
//! exact solver on the same instance and records whether they agree.

mod lemma;
mod sweep;

pub use lemma::{random_independent_set, run_lemma_check, LemmaConfig, LemmaFailure, LemmaReport};
pub use sweep::{compositions, run_sweep, AlphaReport, OutputFormat, Summary, SweepConfig, TSV_HEADER};

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::constructions::{
    associated_independent_set, path_union_independent_set, path_union_layout, AssociatedSetInput,
    PathUnionLayout,
};
use crate::error::{param, Error, Result};
use crate::family::FamilySpec;
use crate::formulas::alpha_closed_form;
use crate::graph::{delete_vertices, Graph, VertexSet};
use crate::mis::{
    is_independent, max_independent_set, max_independent_set_exhaustive, max_independent_set_with_budget,
    EXHAUSTIVE_CAP,
};
use crate::token::{build_f2, pair_count, pair_index, TokenGraph, TokenVertex};

/// Which of the three routes to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Methods {
    pub formula: bool,
    pub construction: bool,
    pub solver: bool,
}

impl Methods {
    pub const ALL: Methods = Methods {
        formula: true,
        construction: true,
        solver: true,
    };
}

impl Default for Methods {
    fn default() -> Self {
        Methods::ALL
    }
}

impl FromStr for Methods {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut m = Methods {
            formula: false,
            construction: false,
            solver: false,
        };
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tok {
                "formula" => m.formula = true,
                "construction" => m.construction = true,
                "solver" => m.solver = true,
                other => return param(format!("unknown method {other:?}")),
            }
        }
        if !(m.formula || m.construction || m.solver) {
            return param("at least one method is required");
        }
        Ok(m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Agree,
    Disagree,
    Aborted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Agree => "AGREE",
            Verdict::Disagree => "DISAGREE",
            Verdict::Aborted => "ABORTED",
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RowOptions {
    pub methods: Methods,
    /// Branch-and-bound node limit; `None` runs to completion.
    pub budget: Option<u64>,
    /// Omit wall-clock fields so that reports are byte-reproducible, and
    /// include the solver witness.
    pub deterministic: bool,
}

impl Default for RowOptions {
    fn default() -> Self {
        RowOptions {
            methods: Methods::ALL,
            budget: None,
            deterministic: false,
        }
    }
}

/// Input instance of a report row.
#[derive(Clone, Debug)]
pub enum Source {
    Family(FamilySpec),
    /// An explicit graph, labelled for the report.
    Graph { label: String, graph: Graph },
}

/// One verification record.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub family: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub parts: Option<Vec<usize>>,
    pub formula: Option<u64>,
    pub exceptional: Option<bool>,
    pub formula_id: Option<&'static str>,
    pub construction: Option<usize>,
    pub construction_independent: Option<bool>,
    pub construction_digest: Option<String>,
    pub construction_witness: Option<Vec<TokenVertex>>,
    pub solver: Option<usize>,
    pub solver_witness_valid: Option<bool>,
    pub solver_witness: Option<Vec<TokenVertex>>,
    pub nodes: Option<u64>,
    pub millis: Option<u64>,
    pub verdict: Verdict,
}

/// Hex SHA-256 prefix of the witness rendered as a JSON array of pairs.
pub fn witness_digest(pairs: &[TokenVertex]) -> String {
    let text = serde_json::to_string(pairs).expect("pairs serialize");
    Sha256::digest(text.as_bytes())
        .iter()
        .take(8)
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Maximum independent set of `F2(h − s2)` written in `h`'s labels. Uses
/// the parity construction when `h − s2` is a union of paths and the exact
/// solver otherwise.
pub fn residual_token_mis(h: &Graph, s2: &VertexSet, prefer_construction: bool) -> Result<VertexSet> {
    let (rest, map) = delete_vertices(h, s2)?;
    let hn = h.order();
    if rest.order() < 2 {
        return Ok(VertexSet::empty(pair_count(hn)));
    }
    let tokens = build_f2(&rest)?;
    let local = match PathUnionLayout::from_graph(&rest).filter(|_| prefer_construction) {
        Some(layout) => path_union_independent_set(&layout),
        None => max_independent_set(tokens.graph()).witness,
    };
    VertexSet::new(
        pair_count(hn),
        local.iter().map(|i| {
            let p = tokens.pair_of(i);
            pair_index(hn, TokenVertex::new(map[p.low()], map[p.high()]).expect("distinct"))
        }),
    )
}

/// Maximum independent set of a small graph: the exhaustive oracle's
/// lexicographically least one when it fits, else branch-and-bound.
fn base_mis(h: &Graph) -> VertexSet {
    if h.order() <= EXHAUSTIVE_CAP {
        max_independent_set_exhaustive(h).expect("within cap").witness
    } else {
        max_independent_set(h).witness
    }
}

/// Best associated set of `F2(E_n + h)` among the two candidates the
/// closed forms are attained by: no cross pairs (`S1 = S2 = ∅`, all of
/// `F2(E_n)` plus a maximum set of `F2(h)`), or `S1 = V(E_n)` with `S2` a
/// maximum independent set of `h`. Ties go to the first.
pub fn empty_join_construction(n: usize, h: &Graph) -> Result<VertexSet> {
    let candidate = |s1: VertexSet, s2: VertexSet| -> Result<VertexSet> {
        let mis_h_minus_s2 = residual_token_mis(h, &s2, true)?;
        associated_independent_set(&AssociatedSetInput {
            n,
            h: h.clone(),
            s1,
            s2,
            mis_h_minus_s2,
        })
    };
    let b_side = candidate(VertexSet::empty(n), VertexSet::empty(h.order()))?;
    let cross = candidate(VertexSet::all(n), base_mis(h))?;
    Ok(if cross.len() > b_side.len() { cross } else { b_side })
}

/// Explicit independent set of `F2(spec)` for the families that have one.
pub fn family_construction(spec: &FamilySpec) -> Result<Option<VertexSet>> {
    use FamilySpec::*;
    spec.validate()?;
    if spec.order() < 2 {
        return Ok(None);
    }
    let set = match spec {
        Path(m) => path_union_independent_set(&path_union_layout(&[*m])?),
        PathUnion(parts) => path_union_independent_set(&path_union_layout(parts)?),
        Empty(n) => VertexSet::all(pair_count(*n)),
        Complete(n) => VertexSet::new(
            pair_count(*n),
            (0..n / 2).map(|i| pair_index(*n, TokenVertex::new(2 * i, 2 * i + 1).expect("distinct"))),
        )?,
        _ => match spec.as_empty_join() {
            Some((n, h)) => empty_join_construction(n, &h.generate()?)?,
            None => return Ok(None),
        },
    };
    Ok(Some(set))
}

/// Evaluates the requested methods on one instance.
pub fn alpha_row(source: &Source, opts: &RowOptions) -> Result<ReportRow> {
    let (label, spec, graph) = match source {
        Source::Family(spec) => (spec.to_string(), Some(spec), spec.generate()?),
        Source::Graph { label, graph } => (label.clone(), None, graph.clone()),
    };
    let (n, m) = spec.map_or((None, None), |s| s.params());
    let mut row = ReportRow {
        family: label,
        n,
        m,
        parts: spec.and_then(|s| s.parts()).map(<[usize]>::to_vec),
        formula: None,
        exceptional: None,
        formula_id: None,
        construction: None,
        construction_independent: None,
        construction_digest: None,
        construction_witness: None,
        solver: None,
        solver_witness_valid: None,
        solver_witness: None,
        nodes: None,
        millis: None,
        verdict: Verdict::Agree,
    };

    if opts.methods.formula {
        if let Some(f) = spec.and_then(alpha_closed_form::<u64>) {
            row.formula = Some(f.value);
            row.exceptional = Some(f.exceptional);
            row.formula_id = Some(f.formula_id);
        }
    }

    let needs_tokens = opts.methods.solver || opts.methods.construction;
    let tokens: Option<TokenGraph> = if needs_tokens { Some(build_f2(&graph)?) } else { None };

    if opts.methods.construction {
        if let (Some(spec), Some(tg)) = (spec, &tokens) {
            if let Some(set) = family_construction(spec)? {
                let pairs = tg.pairs_of_set(&set);
                row.construction = Some(set.len());
                row.construction_independent = Some(is_independent(tg.graph(), &set)?);
                row.construction_digest = Some(witness_digest(&pairs));
                row.construction_witness = Some(pairs);
            }
        }
    }

    let mut aborted = false;
    if opts.methods.solver {
        let tg = tokens.as_ref().expect("built above");
        let start = Instant::now();
        let outcome = match opts.budget {
            Some(b) => max_independent_set_with_budget(tg.graph(), b),
            None => Ok(max_independent_set(tg.graph())),
        };
        let elapsed = start.elapsed();
        match outcome {
            Ok(res) => {
                row.solver = Some(res.size);
                row.nodes = Some(res.nodes_explored);
                row.solver_witness_valid = Some(is_independent(tg.graph(), &res.witness)?);
                if opts.deterministic {
                    row.solver_witness = Some(tg.pairs_of_set(&res.witness));
                }
            }
            Err(Error::BudgetExceeded { budget }) => {
                aborted = true;
                row.nodes = Some(budget);
            }
            Err(e) => return Err(e),
        }
        if !opts.deterministic {
            row.millis = Some(elapsed.as_millis() as u64);
        }
    }

    let values: Vec<u64> = [row.formula, row.construction.map(|c| c as u64), row.solver.map(|s| s as u64)]
        .into_iter()
        .flatten()
        .collect();
    let consistent = values.windows(2).all(|w| w[0] == w[1])
        && row.construction_independent != Some(false)
        && row.solver_witness_valid != Some(false);
    row.verdict = if !consistent {
        Verdict::Disagree
    } else if aborted {
        Verdict::Aborted
    } else {
        Verdict::Agree
    };
    Ok(row)
}
