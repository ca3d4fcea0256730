//! Certified `chi_f` and `Z_f`.
//!
//! Two routes produce the same optimum: an LP over every maximal set
//! (enumeration), or column generation seeded with singletons and priced by
//! the exact maximum-weight oracles. Either way the result carries a primal
//! cover and a dual labeling of equal weight, and both are re-checked by
//! [`verify_cover`] and [`verify_labeling`] before being returned.
//!
//! Among optimal cocolorings over the generated columns, the returned one
//! carries the least total clique weight.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_limit, Error, Result};
use crate::graph::Graph;
use crate::lp::{CoveringSimplex, LpStatus, PivotStats};
use crate::rational::{self, Rational};
use crate::sets::{self, SetKind, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parameter {
    #[serde(rename = "chi_f")]
    ChiF,
    #[serde(rename = "z_f")]
    ZF,
}

impl Parameter {
    pub fn mode(self) -> Mode {
        match self {
            Parameter::ChiF => Mode::Coloring,
            Parameter::ZF => Mode::Cocoloring,
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parameter::ChiF => "chi_f",
            Parameter::ZF => "z_f",
        })
    }
}

/// Coloring covers use independent sets only; cocoloring covers may also use cliques.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Coloring,
    Cocoloring,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Enumeration,
    ColumnGeneration,
}

/// Which route to take; `Auto` enumerates when the graph is within the
/// enumeration limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodChoice {
    #[default]
    Auto,
    Enumeration,
    ColumnGeneration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub method: MethodChoice,
    pub enumeration_limit: usize,
    pub column_generation_limit: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            method: MethodChoice::Auto,
            enumeration_limit: sets::DEFAULT_ENUMERATION_LIMIT,
            column_generation_limit: sets::DEFAULT_SEARCH_LIMIT,
        }
    }
}

impl SolveOptions {
    pub fn with_method(method: MethodChoice) -> Self {
        SolveOptions {
            method,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverEntry {
    pub kind: SetKind,
    pub members: Vec<usize>,
    #[serde(with = "rational::serde_str")]
    pub weight: Rational,
}

impl CoverEntry {
    pub fn new(set: VertexSet, weight: Rational) -> Self {
        CoverEntry {
            kind: set.kind,
            members: set.members,
            weight,
        }
    }

    pub fn set(&self) -> VertexSet {
        VertexSet {
            kind: self.kind,
            members: self.members.clone(),
        }
    }
}

/// Weighted cliques and independent sets meant to cover every vertex at least once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalCover {
    pub mode: Mode,
    pub entries: Vec<CoverEntry>,
}

impl FractionalCover {
    pub fn new(mode: Mode, entries: Vec<CoverEntry>) -> Self {
        FractionalCover { mode, entries }
    }

    pub fn weight(&self) -> Rational {
        rational::sum(self.entries.iter().map(|e| &e.weight))
    }

    fn weight_of(&self, kind: SetKind) -> Rational {
        rational::sum(
            self.entries
                .iter()
                .filter(|e| e.kind == kind)
                .map(|e| &e.weight),
        )
    }

    /// Total weight on independent sets.
    pub fn independent_weight(&self) -> Rational {
        self.weight_of(SetKind::Independent)
    }

    /// Total weight on cliques.
    pub fn clique_weight(&self) -> Rational {
        self.weight_of(SetKind::Clique)
    }

    /// For each vertex, the weight of the clique entries containing it.
    pub fn clique_weight_per_vertex(&self, n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for e in self.entries.iter().filter(|e| e.kind == SetKind::Clique) {
            for &v in &e.members {
                if v < n {
                    out[v] += &e.weight;
                }
            }
        }
        out
    }

    /// For each vertex, the total weight of entries containing it.
    pub fn coverage(&self, n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for e in &self.entries {
            for &v in &e.members {
                if v < n {
                    out[v] += &e.weight;
                }
            }
        }
        out
    }
}

/// Nonnegative rational label per vertex; the dual object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    pub values: Vec<Rational>,
}

impl Labeling {
    pub fn new(values: Vec<Rational>) -> Self {
        Labeling { values }
    }

    pub fn uniform(n: usize, value: Rational) -> Self {
        Labeling {
            values: vec![value; n],
        }
    }

    pub fn weight(&self) -> Rational {
        rational::sum(&self.values)
    }
}

impl Serialize for Labeling {
    /// A map `{"0": "p/q", "1": ...}` in increasing vertex order.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.values.len()))?;
        for (v, x) in self.values.iter().enumerate() {
            map.serialize_entry(&v.to_string(), &rational::to_string(x))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Labeling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = std::collections::BTreeMap::<String, String>::deserialize(d)?;
        let mut pairs = Vec::with_capacity(raw.len());
        for (k, v) in raw {
            let vertex: usize = k
                .parse()
                .map_err(|_| D::Error::custom(format!("bad vertex key {k:?}")))?;
            pairs.push((vertex, rational::parse(&v).map_err(D::Error::custom)?));
        }
        pairs.sort_by_key(|(v, _)| *v);
        let n = pairs.last().map_or(0, |(v, _)| v + 1);
        let mut values = vec![Rational::zero(); n];
        for (v, x) in pairs {
            values[v] = x;
        }
        Ok(Labeling { values })
    }
}

/// Counters describing how a value was obtained.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub columns: usize,
    pub pivots: usize,
    pub pricing_rounds: usize,
    pub max_bits: u64,
}

/// An exact optimum with its primal cover and dual labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedValue {
    pub parameter: Parameter,
    pub value: Rational,
    pub cover: FractionalCover,
    pub dual: Labeling,
    pub method: Method,
    pub stats: SolveStats,
}

/// Wire form of [`CertifiedValue`]; field order is the JSON key order.
#[derive(Serialize, Deserialize)]
struct CertificateWire {
    parameter: Parameter,
    #[serde(with = "rational::serde_str")]
    value: Rational,
    cover: Vec<CoverEntry>,
    dual: Labeling,
    method: Method,
    #[serde(default)]
    stats: SolveStats,
}

impl Serialize for CertifiedValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CertificateWire {
            parameter: self.parameter,
            value: self.value.clone(),
            cover: self.cover.entries.clone(),
            dual: self.dual.clone(),
            method: self.method,
            stats: self.stats,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CertifiedValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = CertificateWire::deserialize(d)?;
        Ok(CertifiedValue {
            parameter: w.parameter,
            value: w.value,
            cover: FractionalCover::new(w.parameter.mode(), w.cover),
            dual: w.dual,
            method: w.method,
            stats: w.stats,
        })
    }
}

impl CertifiedValue {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}

// ---------------------------------------------------------------------------
// Verification

/// Why a cover or labeling was rejected. `Display` gives a one-line reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MalformedSet {
        index: usize,
        members: Vec<usize>,
    },
    KindMismatch {
        index: usize,
        kind: SetKind,
        members: Vec<usize>,
    },
    CliqueInColoring {
        index: usize,
        members: Vec<usize>,
    },
    NegativeWeight {
        index: usize,
    },
    Uncovered {
        vertex: usize,
        covered: Rational,
    },
    LabelCount {
        expected: usize,
        found: usize,
    },
    NegativeLabel {
        vertex: usize,
    },
    Overweight {
        set: VertexSet,
        total: Rational,
    },
    WeightMismatch {
        cover: Box<Rational>,
        dual: Box<Rational>,
        value: Box<Rational>,
    },
    ModeMismatch {
        expected: Mode,
        found: Mode,
    },
    /// The exact oracle could not run on this graph.
    Unverifiable(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind_name = |k: &SetKind| match k {
            SetKind::Clique => "clique",
            SetKind::Independent => "independent set",
        };
        match self {
            Violation::MalformedSet { index, members } => {
                write!(f, "entry {index} {members:?} is unsorted or out of range")
            }
            Violation::KindMismatch {
                index,
                kind,
                members,
            } => write!(f, "entry {index} {members:?} is not a {}", kind_name(kind)),
            Violation::CliqueInColoring { index, members } => {
                write!(f, "entry {index} {members:?} is a clique in a coloring")
            }
            Violation::NegativeWeight { index } => write!(f, "entry {index} has negative weight"),
            Violation::Uncovered { vertex, covered } => write!(
                f,
                "vertex {vertex} covered {} < 1",
                rational::to_string(covered)
            ),
            Violation::LabelCount { expected, found } => {
                write!(f, "labeling has {found} values for {expected} vertices")
            }
            Violation::NegativeLabel { vertex } => {
                write!(f, "vertex {vertex} has a negative label")
            }
            Violation::Overweight { set, total } => write!(
                f,
                "{} {:?} sums to {} > 1",
                kind_name(&set.kind),
                set.members,
                rational::to_string(total)
            ),
            Violation::WeightMismatch { cover, dual, value } => write!(
                f,
                "cover weight {}, dual weight {} and value {} disagree",
                rational::to_string(cover),
                rational::to_string(dual),
                rational::to_string(value)
            ),
            Violation::ModeMismatch { expected, found } => {
                write!(f, "cover mode {found:?} does not match {expected:?}")
            }
            Violation::Unverifiable(why) => write!(f, "cannot verify labeling: {why}"),
        }
    }
}

impl std::error::Error for Violation {}

/// Checks every entry against `g`'s adjacency from scratch, the mode
/// restriction, nonnegativity, and that each vertex is covered at least once.
pub fn verify_cover(g: &Graph, cover: &FractionalCover) -> std::result::Result<(), Violation> {
    for (index, e) in cover.entries.iter().enumerate() {
        let set = e.set();
        let sorted = set.members.windows(2).all(|w| w[0] < w[1]);
        if !sorted || set.members.iter().any(|&v| v >= g.n()) {
            return Err(Violation::MalformedSet {
                index,
                members: e.members.clone(),
            });
        }
        if !set.is_valid_in(g) {
            return Err(Violation::KindMismatch {
                index,
                kind: e.kind,
                members: e.members.clone(),
            });
        }
        if cover.mode == Mode::Coloring && e.kind == SetKind::Clique && e.members.len() > 1 {
            return Err(Violation::CliqueInColoring {
                index,
                members: e.members.clone(),
            });
        }
        if e.weight.is_negative() {
            return Err(Violation::NegativeWeight { index });
        }
    }
    for (vertex, covered) in cover.coverage(g.n()).into_iter().enumerate() {
        if covered < Rational::one() {
            return Err(Violation::Uncovered { vertex, covered });
        }
    }
    Ok(())
}

/// Checks that no independent set (and, for cocoloring, no clique) carries
/// label sum above one, using the exact maximum-weight oracles.
pub fn verify_labeling(
    g: &Graph,
    labeling: &Labeling,
    mode: Mode,
) -> std::result::Result<(), Violation> {
    if labeling.values.len() != g.n() {
        return Err(Violation::LabelCount {
            expected: g.n(),
            found: labeling.values.len(),
        });
    }
    if let Some(vertex) = labeling.values.iter().position(Signed::is_negative) {
        return Err(Violation::NegativeLabel { vertex });
    }
    let oracle_err = |e: Error| Violation::Unverifiable(e.to_string());
    let (set, total) = sets::max_weight_independent_set_with_limit(g, &labeling.values, usize::MAX)
        .map_err(oracle_err)?;
    if total > Rational::one() {
        return Err(Violation::Overweight { set, total });
    }
    if mode == Mode::Cocoloring {
        let (set, total) = sets::max_weight_clique_with_limit(g, &labeling.values, usize::MAX)
            .map_err(oracle_err)?;
        if total > Rational::one() {
            return Err(Violation::Overweight { set, total });
        }
    }
    Ok(())
}

/// Full certificate check: cover, labeling, and `cover = dual = value`.
pub fn verify_certificate(g: &Graph, cert: &CertifiedValue) -> std::result::Result<(), Violation> {
    let expected = cert.parameter.mode();
    if cert.cover.mode != expected {
        return Err(Violation::ModeMismatch {
            expected,
            found: cert.cover.mode,
        });
    }
    verify_cover(g, &cert.cover)?;
    verify_labeling(g, &cert.dual, expected)?;
    let cover = cert.cover.weight();
    let dual = cert.dual.weight();
    if cover != dual || cover != cert.value {
        return Err(Violation::WeightMismatch {
            cover: Box::new(cover),
            dual: Box::new(dual),
            value: Box::new(cert.value.clone()),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Solving

pub fn chi_f(g: &Graph) -> Result<CertifiedValue> {
    solve(g, Parameter::ChiF, &SolveOptions::default())
}

pub fn z_f(g: &Graph) -> Result<CertifiedValue> {
    solve(g, Parameter::ZF, &SolveOptions::default())
}

pub fn chi_f_with(g: &Graph, opts: &SolveOptions) -> Result<CertifiedValue> {
    solve(g, Parameter::ChiF, opts)
}

pub fn z_f_with(g: &Graph, opts: &SolveOptions) -> Result<CertifiedValue> {
    solve(g, Parameter::ZF, opts)
}

pub fn solve(g: &Graph, parameter: Parameter, opts: &SolveOptions) -> Result<CertifiedValue> {
    let method = match opts.method {
        MethodChoice::Enumeration => Method::Enumeration,
        MethodChoice::ColumnGeneration => Method::ColumnGeneration,
        MethodChoice::Auto if g.n() <= opts.enumeration_limit => Method::Enumeration,
        MethodChoice::Auto => Method::ColumnGeneration,
    };
    let mode = parameter.mode();
    if g.n() == 0 {
        return Ok(CertifiedValue {
            parameter,
            value: Rational::zero(),
            cover: FractionalCover::new(mode, Vec::new()),
            dual: Labeling::new(Vec::new()),
            method,
            stats: SolveStats::default(),
        });
    }
    let (mut simplex, rounds) = match method {
        Method::Enumeration => {
            check_limit("enumeration solve", g.n(), opts.enumeration_limit)?;
            (by_enumeration(g, mode, opts.enumeration_limit)?, 0)
        }
        Method::ColumnGeneration => {
            check_limit(
                "column generation solve",
                g.n(),
                opts.column_generation_limit,
            )?;
            by_column_generation(g, mode, opts.column_generation_limit)?
        }
    };
    if mode == Mode::Cocoloring {
        let clique_cost: Vec<Rational> = simplex
            .columns()
            .iter()
            .map(|c| match c.kind {
                SetKind::Clique => Rational::one(),
                SetKind::Independent => Rational::zero(),
            })
            .collect();
        simplex.minimize_secondary(&clique_cost)?;
    }
    let cert = certificate(g, parameter, method, &simplex, rounds);
    verify_certificate(g, &cert)
        .map_err(|v| Error::Internal(format!("{v}; certificate: {}", cert.to_json())))?;
    Ok(cert)
}

fn by_enumeration(g: &Graph, mode: Mode, limit: usize) -> Result<CoveringSimplex> {
    let mut columns: BTreeSet<VertexSet> =
        sets::enumerate_maximal_independent_sets_with_limit(g, limit)?
            .into_iter()
            .collect();
    if mode == Mode::Cocoloring {
        // Singleton cliques canonicalize to independent sets and dedupe here.
        columns.extend(sets::enumerate_maximal_cliques_with_limit(g, limit)?);
    }
    let mut columns: Vec<VertexSet> = columns.into_iter().collect();
    columns.sort_by(|a, b| a.members.cmp(&b.members).then(a.kind.cmp(&b.kind)));
    let mut simplex = CoveringSimplex::new(g.n());
    for c in columns {
        simplex.add_column(c)?;
    }
    match simplex.optimize()? {
        LpStatus::Optimal => Ok(simplex),
        LpStatus::Infeasible => Err(Error::Internal(
            "maximal sets failed to cover every vertex".into(),
        )),
    }
}

fn by_column_generation(g: &Graph, mode: Mode, limit: usize) -> Result<(CoveringSimplex, usize)> {
    let mut simplex = CoveringSimplex::new(g.n());
    for v in 0..g.n() {
        simplex.add_column(VertexSet::independent(vec![v]))?;
    }
    let mut rounds = 0;
    loop {
        if simplex.optimize()? != LpStatus::Optimal {
            return Err(Error::Internal("singleton-seeded LP is infeasible".into()));
        }
        rounds += 1;
        let y = simplex.dual();
        let mut added = false;
        let (set, w) = sets::max_weight_independent_set_with_limit(g, &y, limit)?;
        if w > Rational::one() {
            simplex.add_column(set)?;
            added = true;
        }
        if mode == Mode::Cocoloring {
            let (set, w) = sets::max_weight_clique_with_limit(g, &y, limit)?;
            if w > Rational::one() {
                simplex.add_column(set)?;
                added = true;
            }
        }
        if !added {
            return Ok((simplex, rounds));
        }
    }
}

fn certificate(
    g: &Graph,
    parameter: Parameter,
    method: Method,
    simplex: &CoveringSimplex,
    rounds: usize,
) -> CertifiedValue {
    let primal = simplex.primal();
    let entries: Vec<CoverEntry> = primal
        .iter()
        .map(|(&j, x)| CoverEntry::new(simplex.columns()[j].clone(), x.clone()))
        .collect();
    let cover = FractionalCover::new(parameter.mode(), entries);
    let PivotStats { pivots, max_bits } = simplex.stats();
    debug_assert_eq!(simplex.dual().len(), g.n());
    CertifiedValue {
        parameter,
        value: cover.weight(),
        cover,
        dual: Labeling::new(simplex.dual()),
        method,
        stats: SolveStats {
            columns: simplex.columns().len(),
            pivots,
            pricing_rounds: rounds,
            max_bits,
        },
    }
}

/// Both routes for both parameters on one graph.
#[derive(Debug, Clone, Serialize)]
pub struct CrossCheckReport {
    #[serde(with = "rational::serde_str")]
    pub chi_f: Rational,
    #[serde(with = "rational::serde_str")]
    pub z_f: Rational,
    pub chi_f_enumeration: SolveStats,
    pub chi_f_column_generation: SolveStats,
    pub z_f_enumeration: SolveStats,
    pub z_f_column_generation: SolveStats,
}

/// Solves `chi_f` and `Z_f` by enumeration and by column generation and
/// insists the values agree exactly.
pub fn cross_check(g: &Graph) -> Result<CrossCheckReport> {
    cross_check_with(g, &SolveOptions::default())
}

pub fn cross_check_with(g: &Graph, opts: &SolveOptions) -> Result<CrossCheckReport> {
    let enumerate = SolveOptions {
        method: MethodChoice::Enumeration,
        ..*opts
    };
    let generate = SolveOptions {
        method: MethodChoice::ColumnGeneration,
        ..*opts
    };
    let mut pairs = Vec::new();
    for p in [Parameter::ChiF, Parameter::ZF] {
        let a = solve(g, p, &enumerate)?;
        let b = solve(g, p, &generate)?;
        if a.value != b.value {
            return Err(Error::Internal(format!(
                "{p}: enumeration gave {}, column generation gave {}; certificates: {} {}",
                rational::to_string(&a.value),
                rational::to_string(&b.value),
                a.to_json(),
                b.to_json()
            )));
        }
        pairs.push((a, b));
    }
    let (chi, z) = (&pairs[0], &pairs[1]);
    Ok(CrossCheckReport {
        chi_f: chi.0.value.clone(),
        z_f: z.0.value.clone(),
        chi_f_enumeration: chi.0.stats,
        chi_f_column_generation: chi.1.stats,
        z_f_enumeration: z.0.stats,
        z_f_column_generation: z.1.stats,
    })
}
