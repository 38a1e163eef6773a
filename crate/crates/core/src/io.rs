//! Edge-list text format.
//!
//! ```text
//! c optional comment lines
//! p <order> <edge_count>
//! e <u> <v>
//! ```
//!
//! Vertices are 0-indexed. The reader also accepts DIMACS (`p edge <n> <m>`
//! with 1-indexed `e` lines) and normalizes it to 0-indexed.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::token::TokenGraph;

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

fn number(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    match tok {
        Some(t) => t
            .parse()
            .or_else(|_| parse_err(line, format!("expected {what}, found {t:?}"))),
        None => parse_err(line, format!("missing {what}")),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.order(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").expect("writing to a String");
    }
    out
}

/// DIMACS with 1-indexed vertices.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
    }
    out
}

/// Edge list of `F2(G)` preceded by one `c pair i = {a,b}` line per token
/// vertex.
pub fn write_token_graph(tg: &TokenGraph) -> String {
    let mut out = String::new();
    for (i, p) in tg.pairs().iter().enumerate() {
        writeln!(out, "c pair {i} = {p}").expect("writing to a String");
    }
    out.push_str(&write_edge_list(tg.graph()));
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None; // order, edges, index base
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") | Some("%") => continue,
            Some("p") => {
                if header.is_some() {
                    return parse_err(line, "duplicate problem line");
                }
                let rest: Vec<&str> = toks.collect();
                header = Some(match rest.as_slice() {
                    [order, count] => (
                        number(line, Some(order), "vertex count")?,
                        number(line, Some(count), "edge count")?,
                        0,
                    ),
                    [_, order, count] => (
                        number(line, Some(order), "vertex count")?,
                        number(line, Some(count), "edge count")?,
                        1,
                    ),
                    _ => return parse_err(line, "expected `p <order> <edges>` or `p edge <n> <m>`"),
                });
            }
            Some("e") => {
                let Some((order, _, base)) = header else {
                    return parse_err(line, "edge before problem line");
                };
                let u = number(line, toks.next(), "endpoint")?;
                let v = number(line, toks.next(), "endpoint")?;
                if toks.next().is_some() {
                    return parse_err(line, "trailing tokens after edge");
                }
                if u < base || v < base || u - base >= order || v - base >= order {
                    return parse_err(line, format!("endpoint out of range in edge ({u},{v})"));
                }
                if u == v {
                    return parse_err(line, format!("self-loop at vertex {u}"));
                }
                edges.push((u - base, v - base));
            }
            Some(other) => return parse_err(line, format!("unknown line type {other:?}")),
        }
    }
    let Some((order, count, _)) = header else {
        return parse_err(text.lines().count().max(1), "missing problem line");
    };
    let g = Graph::from_edges(order, edges)?;
    if g.edge_count() != count {
        return parse_err(
            text.lines().count(),
            format!("problem line announces {count} edges, found {} distinct", g.edge_count()),
        );
    }
    Ok(g)
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use crate::token::build_f2;

    #[test]
    fn export_path3() {
        let g = FamilySpec::Path(3).generate().unwrap();
        assert_eq!(write_edge_list(&g), "p 3 2\ne 0 1\ne 1 2\n");
    }

    #[test]
    fn dimacs_is_normalized() {
        let g = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g, FamilySpec::Complete(3).generate().unwrap());
        let c5 = FamilySpec::Cycle(5).generate().unwrap();
        assert_eq!(parse_graph(&write_dimacs(&c5)).unwrap(), c5);
    }

    #[test]
    fn token_graph_round_trip() {
        let tg = build_f2(&FamilySpec::Cycle(5).generate().unwrap()).unwrap();
        let text = write_token_graph(&tg);
        assert!(text.starts_with("c pair 0 = {0,1}\n"));
        assert!(text.contains("c pair 9 = {3,4}\n"));
        assert_eq!(&parse_graph(&text).unwrap(), tg.graph());
    }

    #[test]
    fn malformed_inputs_report_lines() {
        let cases = [
            ("e 0 1\n", 1, "before problem line"),
            ("p 3 1\ne 0 x\n", 2, "expected endpoint"),
            ("p 3 1\ne 0 3\n", 2, "out of range"),
            ("p 3 1\ne 1 1\n", 2, "self-loop"),
            ("p 3 2\ne 0 1\n", 2, "announces 2 edges"),
            ("p 3\n", 1, "expected `p"),
            ("p 2 0\np 2 0\n", 2, "duplicate"),
            ("p edge 2 1\ne 0 1\n", 2, "out of range"),
            ("q\n", 1, "unknown line type"),
        ];
        for (text, line, needle) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, message }) => {
                    assert_eq!(l, line, "{text:?}");
                    assert!(message.contains(needle), "{message}");
                }
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
    }
}
