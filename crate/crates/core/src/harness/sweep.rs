use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::{alpha_row, Methods, ReportRow, RowOptions, Source, Verdict};
use crate::error::{param, Result};
use crate::family::FamilySpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Family tag as accepted on the command line (`fan`, `path-union`, ..).
    pub family: String,
    pub n_range: Option<RangeInclusive<usize>>,
    /// For `path-union` this bounds the total order of the compositions.
    pub m_range: Option<RangeInclusive<usize>>,
    pub methods: Methods,
    pub budget: Option<u64>,
    pub seed: u64,
    pub format: OutputFormat,
    pub deterministic: bool,
    /// Worker threads for row evaluation; `None` uses the rayon default.
    pub threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub agree: usize,
    pub disagree: usize,
    pub aborted: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlphaReport {
    pub family: String,
    pub seed: u64,
    pub methods: Methods,
    pub rows: Vec<ReportRow>,
    pub summary: Summary,
}

/// All compositions of `total` into positive parts, in lexicographic order.
pub fn compositions(total: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            go(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if total > 0 {
        go(total, &mut Vec::new(), &mut out);
    }
    out
}

fn checked(range: &Option<RangeInclusive<usize>>, name: &str, family: &str) -> Result<RangeInclusive<usize>> {
    match range {
        None => param(format!("{family} sweep requires --{name}-range")),
        Some(r) if r.is_empty() => param(format!("--{name}-range {}..{} is empty", r.start(), r.end())),
        Some(r) => Ok(r.clone()),
    }
}

impl SweepConfig {
    /// Instances of the sweep in row order: lexicographic in `(n, m)`, and
    /// for path unions by total order, then composition.
    pub fn instances(&self) -> Result<Vec<FamilySpec>> {
        if self.budget == Some(0) {
            return param("budget must be positive");
        }
        let fam = self.family.as_str();
        let specs: Vec<FamilySpec> = match fam {
            "path" | "cycle" => checked(&self.m_range, "m", fam)?
                .map(|m| if fam == "path" { FamilySpec::Path(m) } else { FamilySpec::Cycle(m) })
                .collect(),
            "empty" | "complete" => checked(&self.n_range, "n", fam)?
                .map(|n| if fam == "empty" { FamilySpec::Empty(n) } else { FamilySpec::Complete(n) })
                .collect(),
            "path-union" => checked(&self.m_range, "m", fam)?
                .flat_map(compositions)
                .map(FamilySpec::PathUnion)
                .collect(),
            "fan" | "wheel" | "split" | "complete-bipartite" => {
                let ns = checked(&self.n_range, "n", fam)?;
                let ms = checked(&self.m_range, "m", fam)?;
                ns.flat_map(|n| ms.clone().map(move |m| (n, m)))
                    .map(|(n, m)| match fam {
                        "fan" => FamilySpec::Fan(n, m),
                        "wheel" => FamilySpec::Wheel(n, m),
                        "split" => FamilySpec::Split(n, m),
                        _ => FamilySpec::CompleteBipartite(n, m),
                    })
                    .collect()
            }
            other => return param(format!("unknown family {other:?}")),
        };
        for s in &specs {
            s.validate()?;
            if s.order() < 2 {
                return param(format!("{s} has fewer than two vertices, so F2 is empty"));
            }
        }
        Ok(specs)
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<AlphaReport> {
    let specs = config.instances()?;
    let opts = RowOptions {
        methods: config.methods,
        budget: config.budget,
        deterministic: config.deterministic,
    };
    let threads = if config.deterministic {
        Some(1)
    } else {
        config.threads
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .expect("thread pool");
    let rows: Vec<ReportRow> = pool.install(|| {
        specs
            .par_iter()
            .map(|s| alpha_row(&Source::Family(s.clone()), &opts))
            .collect::<Result<_>>()
    })?;
    Ok(AlphaReport::from_rows(&config.family, config.seed, config.methods, rows))
}

fn cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

pub const TSV_HEADER: &str = "family\tn\tm\tparts\tformula\texceptional\tconstruction\tsolver\tnodes\tmillis\tverdict";

impl ReportRow {
    pub fn tsv_line(&self) -> String {
        let parts = self.parts.as_ref().map(|p| {
            p.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        });
        [
            self.family.clone(),
            cell(&self.n),
            cell(&self.m),
            cell(&parts),
            cell(&self.formula),
            cell(&self.exceptional),
            cell(&self.construction),
            cell(&self.solver),
            cell(&self.nodes),
            cell(&self.millis),
            self.verdict.to_string(),
        ]
        .join("\t")
    }
}

impl Summary {
    pub fn line(&self) -> String {
        format!(
            "# summary agree={} disagree={} aborted={}",
            self.agree, self.disagree, self.aborted
        )
    }
}

impl AlphaReport {
    pub fn from_rows(family: &str, seed: u64, methods: Methods, rows: Vec<ReportRow>) -> Self {
        let mut summary = Summary::default();
        for r in &rows {
            match r.verdict {
                Verdict::Agree => summary.agree += 1,
                Verdict::Disagree => summary.disagree += 1,
                Verdict::Aborted => summary.aborted += 1,
            }
        }
        AlphaReport {
            family: family.to_string(),
            seed,
            methods,
            rows,
            summary,
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{TSV_HEADER}").expect("writing to a String");
        for r in &self.rows {
            writeln!(out, "{}", r.tsv_line()).expect("writing to a String");
        }
        writeln!(out, "{}", self.summary.line()).expect("writing to a String");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Tsv => self.to_tsv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    /// 0 when every row agrees, 1 on any disagreement, 3 when the only
    /// failures are budget aborts.
    pub fn exit_code(&self) -> i32 {
        if self.summary.disagree > 0 {
            1
        } else if self.summary.aborted > 0 {
            3
        } else {
            0
        }
    }
}
