//! Cliques and independent sets: maximal-set enumeration and exact
//! maximum-weight search.
//!
//! Everything here works on 64-bit adjacency masks, so graphs are capped at
//! 64 vertices. Weighted search converts rational weights to integers over
//! their common denominator and runs on `u128` when the total fits, falling
//! back to `BigUint` otherwise.

use std::ops::Add;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_limit, Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Default vertex limit for full maximal-set enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 24;
/// Default vertex limit for exact maximum-weight search.
pub const DEFAULT_SEARCH_LIMIT: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    Clique,
    Independent,
}

/// A sorted, duplicate-free vertex set tagged as a clique or independent set.
///
/// Sets of size at most one are both; their canonical kind is `Independent`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet {
    pub kind: SetKind,
    pub members: Vec<usize>,
}

impl VertexSet {
    pub fn new(kind: SetKind, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        let kind = if members.len() <= 1 {
            SetKind::Independent
        } else {
            kind
        };
        VertexSet { kind, members }
    }

    pub fn independent(members: Vec<usize>) -> Self {
        Self::new(SetKind::Independent, members)
    }

    pub fn clique(members: Vec<usize>) -> Self {
        Self::new(SetKind::Clique, members)
    }

    pub(crate) fn from_mask(kind: SetKind, mask: u64) -> Self {
        Self::new(kind, bits(mask).collect())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Checks sortedness, range and the adjacency predicate of the declared
    /// kind directly against `g`'s edge set.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let sorted = self.members.windows(2).all(|w| w[0] < w[1]);
        let in_range = self.members.iter().all(|&v| v < g.n());
        sorted
            && in_range
            && self.members.iter().enumerate().all(|(i, &u)| {
                self.members[i + 1..].iter().all(|&v| match self.kind {
                    SetKind::Clique => g.has_edge(u, v),
                    SetKind::Independent => !g.has_edge(u, v),
                })
            })
    }
}

/// Iterates the set bits of `mask` in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn complement_masks(adj: &[u64]) -> Vec<u64> {
    let all = full_mask(adj.len());
    adj.iter()
        .enumerate()
        .map(|(v, &row)| !row & all & !(1 << v))
        .collect()
}

// ---------------------------------------------------------------------------
// Maximal-set enumeration

pub fn enumerate_maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_maximal_cliques_with_limit(g, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_maximal_cliques_with_limit(g: &Graph, limit: usize) -> Result<Vec<VertexSet>> {
    check_limit("maximal set enumeration", g.n(), limit)?;
    let adj = g.adjacency_masks()?;
    Ok(maximal_cliques_of(&adj, SetKind::Clique))
}

pub fn enumerate_maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_maximal_independent_sets_with_limit(g, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_maximal_independent_sets_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<Vec<VertexSet>> {
    check_limit("maximal set enumeration", g.n(), limit)?;
    let adj = g.adjacency_masks()?;
    Ok(maximal_cliques_of(
        &complement_masks(&adj),
        SetKind::Independent,
    ))
}

/// Maximal cliques of the mask graph `adj` restricted to `within`, as masks,
/// via Bron–Kerbosch with Tomita pivoting. Order is unspecified.
pub(crate) fn maximal_cliques_within(adj: &[u64], within: u64) -> Vec<u64> {
    fn expand(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        // Pivot maximizing |P ∩ N(u)| over P ∪ X.
        let pivot = bits(p | x)
            .max_by_key(|&u| ((p & adj[u]).count_ones(), std::cmp::Reverse(u)))
            .expect("p is nonempty");
        for v in bits(p & !adj[pivot]) {
            let bit = 1u64 << v;
            expand(adj, r | bit, p & adj[v], x & adj[v], out);
            p &= !bit;
            x |= bit;
        }
    }
    let mut found = Vec::new();
    if within != 0 {
        expand(adj, 0, within, 0, &mut found);
    }
    found
}

/// All maximal cliques of `adj`, sorted lexicographically by member list.
/// A graph with no vertices has no sets.
fn maximal_cliques_of(adj: &[u64], kind: SetKind) -> Vec<VertexSet> {
    let mut sets: Vec<VertexSet> = maximal_cliques_within(adj, full_mask(adj.len()))
        .into_iter()
        .map(|m| VertexSet::from_mask(kind, m))
        .collect();
    sets.sort_by(|a, b| a.members.cmp(&b.members));
    sets
}

// ---------------------------------------------------------------------------
// Maximum-weight search

trait Weight: Clone + Ord + Zero + for<'a> Add<&'a Self, Output = Self> {
    fn minus(&self, other: &Self) -> Option<Self>;
}

impl Weight for u128 {
    fn minus(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
}

impl<'b> Add<&'b Wide> for Wide {
    type Output = Wide;
    fn add(self, rhs: &'b Wide) -> Wide {
        Wide(self.0 + &rhs.0)
    }
}

impl std::ops::Add for Wide {
    type Output = Wide;
    fn add(self, rhs: Wide) -> Wide {
        Wide(self.0 + rhs.0)
    }
}

impl Zero for Wide {
    fn zero() -> Self {
        Wide(BigUint::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// Arbitrary-precision fallback weight.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Wide(BigUint);

impl Weight for Wide {
    fn minus(&self, other: &Self) -> Option<Self> {
        (self.0 >= other.0).then(|| Wide(&self.0 - &other.0))
    }
}

/// Exact maximum-weight independent set search over an adjacency-mask graph.
struct Search<'a, W> {
    adj: &'a [u64],
    weight: Vec<W>,
    /// Vertices by decreasing weight, ties by increasing id.
    order: Vec<usize>,
}

impl<'a, W: Weight> Search<'a, W> {
    fn new(adj: &'a [u64], weight: Vec<W>) -> Self {
        let mut order: Vec<usize> = (0..adj.len()).collect();
        order.sort_by(|&a, &b| weight[b].cmp(&weight[a]).then(a.cmp(&b)));
        Search { adj, weight, order }
    }

    /// Greedy partition of `cand` into cliques of the graph; an independent
    /// set meets each clique at most once, so the sum of clique maxima bounds
    /// it from above. Also returns the heaviest vertex of `cand`.
    fn clique_cover_bound(&self, cand: u64) -> (W, Option<usize>) {
        let mut commons: Vec<u64> = Vec::new();
        let mut bound = W::zero();
        let mut heaviest = None;
        for &v in &self.order {
            if cand >> v & 1 == 0 {
                continue;
            }
            heaviest.get_or_insert(v);
            let bit = 1u64 << v;
            match commons.iter_mut().find(|c| **c & bit != 0) {
                Some(c) => *c &= self.adj[v],
                None => {
                    commons.push(self.adj[v] & cand);
                    bound = bound + &self.weight[v];
                }
            }
        }
        (bound, heaviest)
    }

    fn maximize(&self, cand: u64, cur: W, best: &mut W) {
        let (bound, heaviest) = self.clique_cover_bound(cand);
        let Some(v) = heaviest else {
            if cur > *best {
                *best = cur;
            }
            return;
        };
        if cur.clone() + &bound <= *best {
            return;
        }
        let bit = 1u64 << v;
        self.maximize(
            cand & !self.adj[v] & !bit,
            cur.clone() + &self.weight[v],
            best,
        );
        self.maximize(cand & !bit, cur, best);
    }

    /// Whether some independent subset of `cand` weighs at least `need`.
    fn reaches(&self, cand: u64, need: &W) -> bool {
        if need.is_zero() {
            return true;
        }
        let (bound, heaviest) = self.clique_cover_bound(cand);
        let Some(v) = heaviest else {
            return false;
        };
        if bound < *need {
            return false;
        }
        let bit = 1u64 << v;
        let with_v = match need.minus(&self.weight[v]) {
            None => return true,
            Some(rest) => self.reaches(cand & !self.adj[v] & !bit, &rest),
        };
        with_v || self.reaches(cand & !bit, need)
    }

    /// Lexicographically smallest independent subset of `cand` (as a sorted
    /// list) whose weight is at least `target`, if one exists.
    fn lex_min_reaching(&self, mut cand: u64, target: &W) -> Option<u64> {
        if !self.reaches(cand, target) {
            return None;
        }
        let mut chosen = 0u64;
        let mut need = target.clone();
        while !need.is_zero() {
            let mut picked = false;
            for u in bits(cand) {
                let higher = !((1u64 << u) | ((1u64 << u) - 1));
                let rest = cand & higher & !self.adj[u];
                let ok = match need.minus(&self.weight[u]) {
                    None => Some(W::zero()),
                    Some(r) => self.reaches(rest, &r).then_some(r),
                };
                if let Some(r) = ok {
                    chosen |= 1 << u;
                    need = r;
                    cand = rest;
                    picked = true;
                    break;
                }
            }
            assert!(picked, "feasible target must admit an extension");
        }
        Some(chosen)
    }

    fn best(&self, cand: u64) -> (u64, W) {
        let mut best = W::zero();
        self.maximize(cand, W::zero(), &mut best);
        let mask = self
            .lex_min_reaching(cand, &best)
            .expect("the optimum is reachable");
        (mask, best)
    }
}

/// Rational weights scaled to integers over their common denominator.
struct Scaled {
    numerators: Vec<BigUint>,
    denominator: BigInt,
}

fn scale(weights: &[Rational]) -> Result<Scaled> {
    if let Some((v, _)) = weights.iter().enumerate().find(|(_, w)| w.is_negative()) {
        return Err(Error::InvalidArgument(format!(
            "negative weight at vertex {v}"
        )));
    }
    let denominator = weights
        .iter()
        .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
    let numerators = weights
        .iter()
        .map(|w| {
            (w.numer() * (&denominator / w.denom()))
                .to_biguint()
                .expect("weights are nonnegative")
        })
        .collect();
    Ok(Scaled {
        numerators,
        denominator,
    })
}

/// Runs the search on `adj` (independent sets of that mask graph) and
/// returns the lexicographically smallest maximum-weight set.
fn best_independent(adj: &[u64], weights: &[Rational]) -> Result<(u64, Rational)> {
    if weights.len() != adj.len() {
        return Err(Error::InvalidArgument(format!(
            "{} weights for {} vertices",
            weights.len(),
            adj.len()
        )));
    }
    let scaled = scale(weights)?;
    let total: BigUint = scaled.numerators.iter().sum();
    let cand = full_mask(adj.len());
    let (mask, best) = if total.bits() < 127 {
        let w: Vec<u128> = scaled
            .numerators
            .iter()
            .map(|x| x.to_u128().expect("fits"))
            .collect();
        let (mask, best) = Search::new(adj, w).best(cand);
        (mask, BigUint::from(best))
    } else {
        let w: Vec<Wide> = scaled.numerators.into_iter().map(Wide).collect();
        let (mask, best) = Search::new(adj, w).best(cand);
        (mask, best.0)
    };
    Ok((mask, Rational::new(BigInt::from(best), scaled.denominator)))
}

/// Maximum-weight independent set; ties go to the lexicographically
/// smallest member list.
pub fn max_weight_independent_set(g: &Graph, w: &[Rational]) -> Result<(VertexSet, Rational)> {
    max_weight_independent_set_with_limit(g, w, DEFAULT_SEARCH_LIMIT)
}

pub fn max_weight_independent_set_with_limit(
    g: &Graph,
    w: &[Rational],
    limit: usize,
) -> Result<(VertexSet, Rational)> {
    check_limit("maximum-weight search", g.n(), limit)?;
    let adj = g.adjacency_masks()?;
    let (mask, value) = best_independent(&adj, w)?;
    Ok((VertexSet::from_mask(SetKind::Independent, mask), value))
}

/// Maximum-weight clique, searched as an independent set of the complement.
pub fn max_weight_clique(g: &Graph, w: &[Rational]) -> Result<(VertexSet, Rational)> {
    max_weight_clique_with_limit(g, w, DEFAULT_SEARCH_LIMIT)
}

pub fn max_weight_clique_with_limit(
    g: &Graph,
    w: &[Rational],
    limit: usize,
) -> Result<(VertexSet, Rational)> {
    check_limit("maximum-weight search", g.n(), limit)?;
    let adj = complement_masks(&g.adjacency_masks()?);
    let (mask, value) = best_independent(&adj, w)?;
    Ok((VertexSet::from_mask(SetKind::Clique, mask), value))
}

fn max_cardinality(adj: &[u64]) -> usize {
    let search = Search::new(adj, vec![1u128; adj.len()]);
    let mut best = 0u128;
    search.maximize(full_mask(adj.len()), 0, &mut best);
    best as usize
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(max_cardinality(&g.adjacency_masks()?))
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(max_cardinality(&complement_masks(&g.adjacency_masks()?)))
}

/// Lexicographically smallest independent set of exactly `k` vertices drawn
/// from `within`, if any.
pub fn lex_min_independent_of_size(
    g: &Graph,
    within: &[usize],
    k: usize,
) -> Result<Option<Vec<usize>>> {
    let adj = g.adjacency_masks()?;
    let cand = within.iter().fold(0u64, |acc, &v| acc | (1 << v));
    let search = Search::new(&adj, vec![1u128; adj.len()]);
    Ok(search
        .lex_min_reaching(cand, &(k as u128))
        .map(|m| bits(m).collect()))
}
