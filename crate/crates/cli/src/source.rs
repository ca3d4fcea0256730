//! Graph sources: files, `gen:` generator specs and a few named graphs.
//!
//! Generator specs are `gen:<family>:<p1>,<p2>,...`:
//!
//! | family            | parameters            |
//! |-------------------|-----------------------|
//! | `empty`           | `n`                   |
//! | `complete`        | `n`                   |
//! | `cycle`           | `n`                   |
//! | `path`            | `n`                   |
//! | `star`            | `t[,s]`               |
//! | `kneser`          | `a,b`                 |
//! | `random`          | `n,p[,seed]`          |
//! | `triangle-free`   | `n,p[,seed]`          |
//! | `mycielski`       | any nested source     |
//! | `complement`      | any nested source     |
//! | `union`           | `k:` + nested source  |
//!
//! Named graphs: `petersen`, `grotzsch`, `cN` (cycle) and `kN` (complete).

use std::path::Path;

use cofrac::graph::{
    gen_complete, gen_cycle, gen_empty, gen_kneser, gen_mycielski, gen_path, gen_random,
    gen_random_triangle_free, gen_star, grotzsch, parse_graph, petersen,
};
use cofrac::{rational, Error, Graph, Result};

/// Resolves `source`, using `seed` for random families that omit one.
/// Warnings go to `warn`.
pub fn load_graph(source: &str, seed: Option<u64>, warn: &mut dyn FnMut(String)) -> Result<Graph> {
    if let Some(spec) = source.strip_prefix("gen:") {
        return generate(spec, seed, warn);
    }
    if !Path::new(source).exists() {
        if let Some(g) = named(source)? {
            return Ok(g);
        }
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| Error::InvalidArgument(format!("cannot read graph file {source}: {e}")))?;
    parse_graph(&text)
}

fn named(name: &str) -> Result<Option<Graph>> {
    let number = |rest: &str| rest.parse::<usize>().ok();
    Ok(match name {
        "petersen" => Some(petersen()),
        "grotzsch" => Some(grotzsch()),
        _ => match (name.get(..1), name.get(1..).and_then(number)) {
            (Some("c"), Some(n)) => Some(gen_cycle(n)?),
            (Some("k"), Some(n)) => Some(gen_complete(n)),
            _ => None,
        },
    })
}

fn usize_param(family: &str, raw: &str) -> Result<usize> {
    raw.trim().parse().map_err(|_| {
        Error::InvalidArgument(format!(
            "{family}: expected a nonnegative integer, got {raw:?}"
        ))
    })
}

fn arity(family: &str, params: &[&str], allowed: &[usize]) -> Result<()> {
    if allowed.contains(&params.len()) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{family}: expected {} parameter(s), got {}",
            allowed
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(" or "),
            params.len()
        )))
    }
}

fn generate(spec: &str, seed: Option<u64>, warn: &mut dyn FnMut(String)) -> Result<Graph> {
    let (family, rest) = spec.split_once(':').unwrap_or((spec, ""));
    match family {
        "mycielski" => return Ok(gen_mycielski(&load_graph(rest, seed, warn)?)),
        "complement" => return Ok(load_graph(rest, seed, warn)?.complement()),
        "union" => {
            let (k, inner) = rest.split_once(':').ok_or_else(|| {
                Error::InvalidArgument("union: expected gen:union:<k>:<source>".into())
            })?;
            return load_graph(inner, seed, warn)?.disjoint_union(usize_param("union", k)?);
        }
        _ => {}
    }
    if family.is_empty() {
        return Err(Error::InvalidArgument("empty generator spec".into()));
    }
    if let Some(g) = named(family)? {
        return Ok(g);
    }
    let params: Vec<&str> = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(',').collect()
    };
    let int = |i: usize| usize_param(family, params[i]);
    match family {
        "empty" | "complete" | "cycle" | "path" => {
            arity(family, &params, &[1])?;
            let n = int(0)?;
            match family {
                "empty" => Ok(gen_empty(n)),
                "complete" => Ok(gen_complete(n)),
                "cycle" => gen_cycle(n),
                _ => gen_path(n),
            }
        }
        "star" => {
            arity(family, &params, &[1, 2])?;
            let s = if params.len() == 2 { int(1)? } else { 0 };
            gen_star(int(0)?, s)
        }
        "kneser" => {
            arity(family, &params, &[2])?;
            let (a, b) = (int(0)?, int(1)?);
            if b >= 1 && b <= a && a < 2 * b {
                warn(format!(
                    "kneser graph with a = {a} < 2b = {}: no two {b}-subsets are disjoint, the graph is edgeless",
                    2 * b
                ));
            }
            gen_kneser(a, b)
        }
        "random" | "triangle-free" => {
            arity(family, &params, &[2, 3])?;
            let n = int(0)?;
            let p = rational::parse(params[1].trim())?;
            let seed = match params.get(2) {
                Some(raw) => raw
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidArgument(format!("{family}: bad seed {raw:?}")))?,
                None => seed.ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "{family}: random graphs need a seed, inline or via --seed"
                    ))
                })?,
            };
            if family == "random" {
                gen_random(n, &p, seed)
            } else {
                gen_random_triangle_free(n, &p, seed)
            }
        }
        other => Err(Error::InvalidArgument(format!(
            "unknown graph family {other:?}"
        ))),
    }
}

/// Splits a comma-separated list of sources. A token made only of digits
/// and `/` continues the previous generator spec, so
/// `gen:star:3,0,petersen` yields `gen:star:3,0` and `petersen`.
pub fn split_sources(list: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let continues = token.chars().all(|c| c.is_ascii_digit() || c == '/')
            && out.last().is_some_and(|prev| prev.starts_with("gen:"));
        match out.last_mut() {
            Some(prev) if continues => {
                prev.push(',');
                prev.push_str(token);
            }
            _ => out.push(token.to_string()),
        }
    }
    out
}
