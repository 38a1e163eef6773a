//! Randomized check that the associated set built from an independent set
//! of `F2(E_n + H)` is independent and at least as large.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::residual_token_mis;
use crate::bitset::Bitset;
use crate::constructions::{associated_independent_set, extract_s1_s2, AssociatedSetInput};
use crate::error::{param, Result};
use crate::family::FamilySpec;
use crate::graph::{join, Graph, VertexSet};
use crate::mis::is_independent;
use crate::num::choose2;
use crate::token::{build_f2, join_partition, TokenGraph, TokenVertex};

#[derive(Clone, Debug)]
pub struct LemmaConfig {
    pub n: usize,
    /// The `H` side; `path`, `cycle` or `complete` on `m` vertices in the
    /// command-line front end, any family here.
    pub h: FamilySpec,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaFailure {
    pub trial: usize,
    pub seed: u64,
    pub set: Vec<TokenVertex>,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub n: usize,
    pub h: FamilySpec,
    pub trials: usize,
    pub seed: u64,
    pub held: usize,
    /// Smallest and mean of `|associated| − |input|` over passing trials.
    pub min_margin: Option<i64>,
    pub mean_margin: Option<f64>,
    pub failures: Vec<LemmaFailure>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.held == self.trials
    }

    pub fn summary_line(&self) -> String {
        format!(
            "lemma n={} h={} trials={} held={} min_margin={} mean_margin={}",
            self.n,
            self.h,
            self.trials,
            self.held,
            self.min_margin.map_or("-".into(), |v| v.to_string()),
            self.mean_margin.map_or("-".into(), |v| format!("{v:.3}")),
        )
    }
}

/// Greedy maximal independent set of `F2(E_n + H)` over a shuffled vertex
/// order, seeded with one uniformly chosen cross pair so that it meets `R`.
/// `split` is `n`.
pub fn random_independent_set<R: Rng + ?Sized>(tg: &TokenGraph, split: usize, rng: &mut R) -> Result<VertexSet> {
    let part = join_partition(tg, split)?;
    let forced = *part
        .r
        .members()
        .choose(rng)
        .expect("a join of two nonempty graphs has cross pairs");
    let g = tg.graph();
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.shuffle(rng);
    let mut blocked = Bitset::new(g.order());
    let mut chosen = Vec::new();
    for v in std::iter::once(forced).chain(order) {
        if blocked.contains(v) {
            continue;
        }
        chosen.push(v);
        blocked.insert(v);
        for w in g.neighbors(v).iter() {
            blocked.insert(w);
        }
    }
    VertexSet::new(g.order(), chosen)
}

pub fn run_lemma_check(cfg: &LemmaConfig) -> Result<LemmaReport> {
    if cfg.trials == 0 {
        return param("trials must be >= 1");
    }
    if cfg.n == 0 {
        return param("n must be >= 1");
    }
    let h = cfg.h.generate()?;
    let g = join(&Graph::new(cfg.n), &h);
    let tg = build_f2(&g)?;
    let mut residual_cache: HashMap<VertexSet, VertexSet> = HashMap::new();
    let mut margins = Vec::new();
    let mut failures = Vec::new();

    for trial in 0..cfg.trials {
        let seed = cfg.seed.wrapping_add(trial as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let input = random_independent_set(&tg, cfg.n, &mut rng)?;
        let fail = |reason: String| LemmaFailure {
            trial,
            seed,
            set: tg.pairs_of_set(&input),
            reason,
        };

        let (s1, s2) = match extract_s1_s2(&input, cfg.n, &h) {
            Ok(v) => v,
            Err(e) => {
                failures.push(fail(e.to_string()));
                continue;
            }
        };
        let residual = match residual_cache.get(&s2) {
            Some(r) => r.clone(),
            None => {
                let r = residual_token_mis(&h, &s2, false)?;
                residual_cache.insert(s2.clone(), r.clone());
                r
            }
        };
        let expected = s1.len() * s2.len() + choose2(cfg.n - s1.len())? + residual.len();
        let built = associated_independent_set(&AssociatedSetInput {
            n: cfg.n,
            h: h.clone(),
            s1,
            s2,
            mis_h_minus_s2: residual,
        });
        let built = match built {
            Ok(b) => b,
            Err(e) => {
                failures.push(fail(e.to_string()));
                continue;
            }
        };
        if !is_independent(tg.graph(), &built)? {
            failures.push(fail("associated set is not independent".into()));
        } else if built.len() != expected {
            failures.push(fail(format!(
                "associated set has {} vertices, cardinality identity gives {expected}",
                built.len()
            )));
        } else if built.len() < input.len() {
            failures.push(fail(format!(
                "associated set has {} vertices, input has {}",
                built.len(),
                input.len()
            )));
        } else {
            margins.push(built.len() as i64 - input.len() as i64);
        }
    }

    Ok(LemmaReport {
        n: cfg.n,
        h: cfg.h.clone(),
        trials: cfg.trials,
        seed: cfg.seed,
        held: margins.len(),
        min_margin: margins.iter().copied().min(),
        mean_margin: (!margins.is_empty()).then(|| margins.iter().sum::<i64>() as f64 / margins.len() as f64),
        failures,
    })
}
