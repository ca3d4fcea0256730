//! Finite simple graphs on dense vertex ids `0..n`, plus the generator
//! families used throughout the crate.

mod generators;
mod parse;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{check_limit, Error, Result};
use crate::sets;

pub(crate) use generators::random_spanning_half;
pub use generators::{
    gen_complete, gen_cycle, gen_empty, gen_kneser, gen_mycielski, gen_path, gen_random,
    gen_random_triangle_free, gen_star, grotzsch, petersen, RANDOM_DRAW_BITS,
};
pub use parse::parse_graph;

/// Largest graph the bitset-based exact searches accept.
pub const MAX_BITSET_VERTICES: usize = 64;

/// Default vertex limit for the exact alpha/omega search in [`stats`].
pub const DEFAULT_STATS_LIMIT: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Star,
    StarPlusIsolated,
    Complete,
    Cycle,
    Path,
    Kneser,
    Mycielski,
    DisjointUnion,
    Random,
    RandomTriangleFree,
    Parsed,
    Empty,
    Complement,
    Subgraph,
}

/// Which generator produced a graph, and with which parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub family: Family,
    pub params: Vec<serde_json::Value>,
}

impl Provenance {
    pub fn new(family: Family, params: Vec<serde_json::Value>) -> Self {
        Provenance { family, params }
    }
}

/// An immutable simple graph.
///
/// Edges are stored as ordered pairs `(u, v)` with `u < v`; neighbour lists
/// are kept sorted alongside them.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    provenance: Option<Provenance>,
    transitive: bool,
}

impl PartialEq for Graph {
    /// Two graphs are equal when they have the same vertex count and edge set.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_canonical(n, set))
    }

    pub(crate) fn from_canonical(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adj,
            provenance: None,
            transitive: false,
        }
    }

    pub(crate) fn with_provenance(mut self, provenance: Provenance, transitive: bool) -> Self {
        self.provenance = Some(provenance);
        self.transitive = transitive;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    /// Set only by generators known to produce vertex-transitive graphs.
    pub fn is_transitive(&self) -> bool {
        self.transitive
    }

    /// Adjacency rows as 64-bit masks. Fails for graphs with more than 64 vertices.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        check_limit("bitset adjacency", self.n, MAX_BITSET_VERTICES)?;
        Ok(self
            .adj
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &v| acc | (1 << v)))
            .collect())
    }

    pub fn complement(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.insert((u, v));
                }
            }
        }
        Graph::from_canonical(self.n, edges).with_provenance(
            Provenance::new(Family::Complement, vec![self.n.into()]),
            self.transitive,
        )
    }

    /// `k` disjoint copies; copy `j` occupies ids `j*n .. (j+1)*n`.
    pub fn disjoint_union(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "disjoint union needs at least one copy".into(),
            ));
        }
        let n = self.n;
        let edges = (0..k)
            .flat_map(|j| self.edges.iter().map(move |&(u, v)| (u + j * n, v + j * n)))
            .collect();
        Ok(Graph::from_canonical(k * n, edges).with_provenance(
            Provenance::new(Family::DisjointUnion, vec![k.into()]),
            false,
        ))
    }

    /// Subgraph induced by `vertices`, relabelled in increasing id order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&v) = sorted.iter().find(|&&v| v >= self.n) {
            return Err(Error::InvalidArgument(format!("vertex {v} out of range")));
        }
        let mut edges = BTreeSet::new();
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.insert((i, j));
                }
            }
        }
        Ok(Graph::from_canonical(sorted.len(), edges).with_provenance(
            Provenance::new(Family::Subgraph, vec![sorted.len().into()]),
            false,
        ))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn has_triangle(&self) -> bool {
        self.edges.iter().any(|&(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return true,
                }
            }
            false
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Serializes to the `"n m"` + `"u v"` edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Independence number, clique number and edge count of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub alpha: usize,
    pub omega: usize,
    pub triangle_free: bool,
    pub m: usize,
}

/// Exact alpha and omega with the default vertex limit.
pub fn stats(g: &Graph) -> Result<GraphStats> {
    stats_with_limit(g, DEFAULT_STATS_LIMIT)
}

pub fn stats_with_limit(g: &Graph, limit: usize) -> Result<GraphStats> {
    check_limit(
        "exact alpha/omega search",
        g.n(),
        limit.min(MAX_BITSET_VERTICES),
    )?;
    let alpha = sets::independence_number(g)?;
    let omega = sets::clique_number(g)?;
    Ok(GraphStats {
        alpha,
        omega,
        triangle_free: omega <= 2,
        m: g.m(),
    })
}
