use std::collections::BTreeSet;

use super::{Family, Graph, Provenance};
use crate::error::{Error, Result};

/// Parses either the plain edge-list format (`"n m"` header, then `m` lines
/// `"u v"`, 0-based) or DIMACS `.col` (`p edge n m` / `e u v`, 1-based).
///
/// DIMACS is recognised by its first significant line starting with `c` or `p`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    let g = match first {
        Some(l) if l.starts_with('c') || l.starts_with('p') => parse_dimacs(text)?,
        _ => parse_edge_list(text)?,
    };
    let n = g.n();
    let m = g.m();
    Ok(g.with_provenance(
        Provenance::new(Family::Parsed, vec![n.into(), m.into()]),
        false,
    ))
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        err(
            line,
            format!("{what} is not a nonnegative integer: {tok:?}"),
        )
    })
}

fn add_edge(
    edges: &mut BTreeSet<(usize, usize)>,
    n: usize,
    u: usize,
    v: usize,
    line: usize,
    shown: (usize, usize),
) -> Result<()> {
    if u >= n || v >= n {
        return Err(err(
            line,
            format!(
                "endpoint out of range in edge {} {} (n = {n})",
                shown.0, shown.1
            ),
        ));
    }
    if u == v {
        return Err(err(line, format!("self-loop at vertex {}", shown.0)));
    }
    edges.insert((u.min(v), u.max(v)));
    Ok(())
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let mut toks = header.split_whitespace();
    let n = parse_usize(toks.next(), hline, "vertex count")?;
    let m = parse_usize(toks.next(), hline, "edge count")?;
    if toks.next().is_some() {
        return Err(err(hline, "header must be exactly \"n m\""));
    }
    let mut edges = BTreeSet::new();
    let mut seen = 0;
    for (line, l) in lines {
        if seen == m {
            return Err(err(
                line,
                format!("more than the {m} edges declared in the header"),
            ));
        }
        let mut toks = l.split_whitespace();
        let u = parse_usize(toks.next(), line, "endpoint")?;
        let v = parse_usize(toks.next(), line, "endpoint")?;
        if toks.next().is_some() {
            return Err(err(line, "edge line must be exactly \"u v\""));
        }
        add_edge(&mut edges, n, u, v, line, (u, v))?;
        seen += 1;
    }
    if seen < m {
        return Err(err(
            text.lines().count().max(1),
            format!("header declares {m} edges but only {seen} were given"),
        ));
    }
    Ok(Graph::from_canonical(n, edges))
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = BTreeSet::new();
    for (i, l) in text.lines().enumerate() {
        let line = i + 1;
        let l = l.trim();
        let mut toks = l.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(err(line, "duplicate problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => return Err(err(line, format!("unsupported problem type {other:?}"))),
                }
                n = Some(parse_usize(toks.next(), line, "vertex count")?);
                parse_usize(toks.next(), line, "edge count")?;
            }
            Some("e") => {
                let n = n.ok_or_else(|| err(line, "edge before problem line"))?;
                let u = parse_usize(toks.next(), line, "endpoint")?;
                let v = parse_usize(toks.next(), line, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(err(line, "DIMACS vertex ids are 1-based"));
                }
                add_edge(&mut edges, n, u - 1, v - 1, line, (u, v))?;
            }
            Some(other) => return Err(err(line, format!("unknown line type {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| err(1, "missing problem line"))?;
    Ok(Graph::from_canonical(n, edges))
}
