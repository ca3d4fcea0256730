//! Turning a fractional cocoloring into a fractional coloring.
//!
//! Clique weight is traded for independent `k`-sets, `k = omega + 1`.
//! Vertices are bucketed by how much clique weight covers them, buckets are
//! swept in increasing order, and whenever at least `R(k, k)` vertices are
//! carried an independent `k`-set is guaranteed to exist among them. The
//! vertices still carried at the end become weight-1 singletons.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::report::{TheoremReport, Verdict};
use crate::error::{Error, Result};
use crate::graph::{stats, Graph};
use crate::rational::{self, int, Rational};
use crate::sets::{lex_min_independent_of_size, VertexSet};
use crate::solver::{chi_f, verify_cover, z_f, CoverEntry, FractionalCover, Mode};

/// Diagonal Ramsey numbers `R(k, k)` that are known exactly.
pub fn ramsey_number(k: usize) -> Option<usize> {
    match k {
        1 => Some(1),
        2 => Some(2),
        3 => Some(6),
        4 => Some(18),
        _ => None,
    }
}

/// Bookkeeping of one conversion. Lists indexed by level run over `1..=n`;
/// `residues` has an extra leading `R_0 = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RamseyConversionTrace {
    pub k: usize,
    #[serde(rename = "R")]
    pub r: usize,
    pub partition_sizes: Vec<usize>,
    pub s: Vec<usize>,
    pub residues: Vec<usize>,
    #[serde(with = "rational::serde_str")]
    pub input_weight: Rational,
    #[serde(with = "rational::serde_str")]
    pub output_weight: Rational,
}

impl RamseyConversionTrace {
    /// `s_i k = |V_i| + R_{i-1} - R_i`, `R_i < R`, and the weight bound.
    pub fn accounting_holds(&self) -> bool {
        let n = self.partition_sizes.len();
        self.residues.len() == n + 1
            && self.s.len() == n
            && self.residues[0] == 0
            && (1..=n).all(|i| {
                self.s[i - 1] * self.k + self.residues[i]
                    == self.partition_sizes[i - 1] + self.residues[i - 1]
                    && self.residues[i] < self.r
            })
            && self.bound_holds()
    }

    pub fn bound_holds(&self) -> bool {
        self.output_weight <= &self.input_weight + int(self.r as i64)
    }
}

/// Level of a vertex covered by clique weight `c`: the `i` with
/// `(i-1)/n < c <= i/n`, capped at `n`; `None` when `c = 0`.
fn level(c: &Rational, n: usize) -> Option<usize> {
    if c.is_zero() {
        return None;
    }
    let scaled = c * int(n as i64);
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let i = if r.is_zero() { q } else { q + 1 };
    Some(i.to_usize().map_or(n, |i| i.min(n)))
}

/// Converts a valid fractional cocoloring of `g` into a fractional coloring
/// of weight at most `cover.weight() + R(k, k)`.
pub fn ramsey_convert(
    g: &Graph,
    cover: &FractionalCover,
) -> Result<(FractionalCover, RamseyConversionTrace)> {
    verify_cover(g, cover)
        .map_err(|v| Error::InvalidArgument(format!("input cover rejected: {v}")))?;
    let n = g.n();
    let omega = stats(g)?.omega;
    let k = omega + 1;
    let r = ramsey_number(k).ok_or_else(|| {
        Error::Unsupported(format!(
            "R({k}, {k}) is not known exactly; conversion needs omega <= 3, got {omega}"
        ))
    })?;

    let mut buckets = vec![Vec::new(); n + 1];
    for (v, c) in cover.clique_weight_per_vertex(n).iter().enumerate() {
        if let Some(i) = level(c, n) {
            buckets[i].push(v);
        }
    }

    let mut weights: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    for e in &cover.entries {
        if e.kind == crate::sets::SetKind::Independent && !e.weight.is_zero() {
            *weights
                .entry(e.members.clone())
                .or_insert_with(Rational::zero) += &e.weight;
        }
    }

    let mut partition_sizes = Vec::with_capacity(n);
    let mut s = Vec::with_capacity(n);
    let mut residues = vec![0];
    let mut carried: Vec<usize> = Vec::new();
    for (i, bucket) in buckets.iter().enumerate().skip(1) {
        partition_sizes.push(bucket.len());
        carried.extend(bucket);
        carried.sort_unstable();
        let w = Rational::new((i as i64).into(), (n as i64).into());
        let mut extracted = 0;
        while carried.len() >= r {
            let set = lex_min_independent_of_size(g, &carried, k)?.ok_or_else(|| {
                Error::Internal(format!(
                    "no independent {k}-set among {} carried vertices of a graph with omega = {omega}",
                    carried.len()
                ))
            })?;
            carried.retain(|v| set.binary_search(v).is_err());
            *weights.entry(set).or_insert_with(Rational::zero) += &w;
            extracted += 1;
        }
        s.push(extracted);
        residues.push(carried.len());
    }
    for v in carried {
        *weights.entry(vec![v]).or_insert_with(Rational::zero) += int(1);
    }

    let entries = weights
        .into_iter()
        .map(|(members, w)| CoverEntry::new(VertexSet::independent(members), w))
        .collect();
    let out = FractionalCover::new(Mode::Coloring, entries);
    verify_cover(g, &out)
        .map_err(|v| Error::Internal(format!("converted cover is not a coloring: {v}")))?;
    let trace = RamseyConversionTrace {
        k,
        r,
        partition_sizes,
        s,
        residues,
        input_weight: cover.weight(),
        output_weight: out.weight(),
    };
    if !trace.accounting_holds() {
        return Err(Error::Internal(format!(
            "conversion accounting failed: {}",
            serde_json::to_string(&trace).expect("trace serializes")
        )));
    }
    Ok((out, trace))
}

/// Every edge as a clique of weight `1/Δ`, topped up with singletons where
/// a vertex has degree below `Δ`.
pub fn manufactured_edge_cover(g: &Graph) -> FractionalCover {
    let max_deg = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    if max_deg == 0 {
        let entries = (0..g.n())
            .map(|v| CoverEntry::new(VertexSet::independent(vec![v]), int(1)))
            .collect();
        return FractionalCover::new(Mode::Cocoloring, entries);
    }
    let per_edge = |d: usize| Rational::new((d as i64).into(), (max_deg as i64).into());
    let mut entries: Vec<CoverEntry> = g
        .edges()
        .map(|(u, v)| CoverEntry::new(VertexSet::clique(vec![u, v]), per_edge(1)))
        .collect();
    for v in 0..g.n() {
        if g.degree(v) < max_deg {
            let deficit = per_edge(max_deg - g.degree(v));
            entries.push(CoverEntry::new(VertexSet::independent(vec![v]), deficit));
        }
    }
    FractionalCover::new(Mode::Cocoloring, entries)
}

/// Converts `cover` and checks `chi_f <= output <= input + R`.
pub fn check_theorem7_with_cover(g: &Graph, cover: &FractionalCover) -> Result<TheoremReport> {
    let report = TheoremReport::new("thm7", g);
    let (_, trace) = match ramsey_convert(g, cover) {
        Ok(x) => x,
        Err(Error::Unsupported(reason)) => return Ok(report.not_applicable(reason)),
        Err(e) => return Err(e),
    };
    let chi = chi_f(g)?.value;
    let report = report
        .value("k", trace.k)
        .value("R", trace.r)
        .rational("input_weight", &trace.input_weight)
        .rational("output_weight", &trace.output_weight)
        .rational("chi_f", &chi)
        .value(
            "trace",
            serde_json::to_value(&trace).expect("trace serializes"),
        );
    let ok = trace.accounting_holds() && chi <= trace.output_weight;
    Ok(report.expect(ok, || {
        format!(
            "chi_f = {}, output {} vs input {} + R = {}",
            rational::to_string(&chi),
            rational::to_string(&trace.output_weight),
            rational::to_string(&trace.input_weight),
            trace.r
        )
    }))
}

/// Runs the conversion on an optimal cocoloring of `g`.
pub fn check_theorem7(g: &Graph) -> Result<TheoremReport> {
    let cert = z_f(g)?;
    let report = check_theorem7_with_cover(g, &cert.cover)?;
    Ok(match report.verdict {
        Verdict::NotApplicable { .. } | Verdict::Fails { .. } => report,
        _ => report.rational("z_f", &cert.value),
    })
}
