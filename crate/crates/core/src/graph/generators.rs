use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::RngCore;

use super::{Family, Graph, Provenance};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::rng::{SeededRng, SeededRngExt};

/// Bits of each uniform draw compared against the edge probability.
pub const RANDOM_DRAW_BITS: u32 = 53;

pub fn gen_empty(n: usize) -> Graph {
    Graph::from_canonical(n, BTreeSet::new())
        .with_provenance(Provenance::new(Family::Empty, vec![n.into()]), false)
}

pub fn gen_complete(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_canonical(n, edges)
        .with_provenance(Provenance::new(Family::Complete, vec![n.into()]), true)
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "a simple cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges = (0..n)
        .map(|i| (i.min((i + 1) % n), i.max((i + 1) % n)))
        .collect();
    Ok(Graph::from_canonical(n, edges)
        .with_provenance(Provenance::new(Family::Cycle, vec![n.into()]), true))
}

pub fn gen_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "a path needs at least 1 vertex".into(),
        ));
    }
    let edges = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_canonical(n, edges)
        .with_provenance(Provenance::new(Family::Path, vec![n.into()]), false))
}

/// The star `K_{1,t}` plus `s` isolated vertices. Vertex 0 is the centre,
/// `1..=t` the leaves, `t+1..t+s` the isolated vertices.
pub fn gen_star(t: usize, s: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidArgument(
            "a star needs at least one leaf".into(),
        ));
    }
    let edges = (1..=t).map(|leaf| (0, leaf)).collect();
    let family = if s == 0 {
        Family::Star
    } else {
        Family::StarPlusIsolated
    };
    Ok(Graph::from_canonical(t + 1 + s, edges)
        .with_provenance(Provenance::new(family, vec![t.into(), s.into()]), false))
}

/// Kneser graph on the `b`-subsets of `{1..a}` in lexicographic order;
/// two subsets are adjacent when disjoint. For `a < 2b` the result is edgeless.
pub fn gen_kneser(a: usize, b: usize) -> Result<Graph> {
    if b == 0 || b > a {
        return Err(Error::InvalidArgument(format!(
            "kneser graph needs 1 <= b <= a, got a = {a}, b = {b}"
        )));
    }
    if a > 63 {
        return Err(Error::InvalidArgument(format!(
            "kneser ground set of {a} elements is too large"
        )));
    }
    let subsets = k_subsets(a, b);
    let mut edges = BTreeSet::new();
    for (i, &x) in subsets.iter().enumerate() {
        for (j, &y) in subsets.iter().enumerate().skip(i + 1) {
            if x & y == 0 {
                edges.insert((i, j));
            }
        }
    }
    Ok(Graph::from_canonical(subsets.len(), edges).with_provenance(
        Provenance::new(Family::Kneser, vec![a.into(), b.into()]),
        true,
    ))
}

/// All `b`-subsets of `{1..a}` as bitmasks (bit `i-1` for element `i`),
/// in lexicographic order of their sorted element lists.
fn k_subsets(a: usize, b: usize) -> Vec<u64> {
    fn rec(start: usize, a: usize, left: usize, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for e in start..a {
            if a - e < left {
                break;
            }
            rec(e + 1, a, left - 1, acc | (1 << e), out);
        }
    }
    let mut out = Vec::new();
    rec(0, a, b, 0, &mut out);
    out
}

/// The Mycielskian: original vertices `0..n`, shadows `n..2n`, apex `2n`.
pub fn gen_mycielski(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = BTreeSet::new();
    for (u, v) in g.edges() {
        edges.insert((u, v));
        edges.insert((u.min(n + v), u.max(n + v)));
        edges.insert((v.min(n + u), v.max(n + u)));
    }
    for i in 0..n {
        edges.insert((n + i, 2 * n));
    }
    Graph::from_canonical(2 * n + 1, edges)
        .with_provenance(Provenance::new(Family::Mycielski, vec![n.into()]), false)
}

/// `G(n, p)` driven by splitmix64 seeded with `seed`.
///
/// Pairs are visited as `(u, v)`, `u < v`, in lexicographic order; each
/// consumes one 64-bit output `x`, and the edge is kept iff
/// `(x >> 11) < p * 2^53`, compared exactly.
pub fn gen_random(n: usize, p: &Rational, seed: u64) -> Result<Graph> {
    if p.is_negative() || *p > Rational::one() {
        return Err(Error::InvalidArgument(format!(
            "edge probability {} outside [0, 1]",
            rational::to_string(p)
        )));
    }
    let mut rng = SeededRng::new(seed);
    // draw < p * 2^53  <=>  draw * q < p_num * 2^53
    let threshold = p.numer() << RANDOM_DRAW_BITS;
    let q = p.denom().clone();
    let mut edges = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            let draw = rng.next_u64() >> (64 - RANDOM_DRAW_BITS);
            if BigInt::from(draw) * &q < threshold {
                edges.insert((u, v));
            }
        }
    }
    let p_str = rational::to_string(p);
    Ok(Graph::from_canonical(n, edges).with_provenance(
        Provenance::new(Family::Random, vec![n.into(), p_str.into(), seed.into()]),
        false,
    ))
}

/// Triangle-free random graph: pairs are drawn as in [`gen_random`], and a
/// drawn pair is skipped when it would close a triangle with edges already
/// kept.
pub fn gen_random_triangle_free(n: usize, p: &Rational, seed: u64) -> Result<Graph> {
    let g = gen_random(n, p, seed)?;
    let mut adj = vec![BTreeSet::new(); n];
    let mut edges = BTreeSet::new();
    for (u, v) in g.edges() {
        if adj[u].is_disjoint(&adj[v]) {
            adj[u].insert(v);
            adj[v].insert(u);
            edges.insert((u, v));
        }
    }
    Ok(Graph::from_canonical(n, edges).with_provenance(
        Provenance::new(
            Family::RandomTriangleFree,
            vec![n.into(), rational::to_string(p).into(), seed.into()],
        ),
        false,
    ))
}

/// Spanning subgraph keeping each edge of `g` with probability 1/2,
/// using the same draw convention as [`gen_random`] over `g`'s sorted edges.
pub(crate) fn random_spanning_half(g: &Graph, seed: u64) -> Graph {
    let mut rng = SeededRng::new(seed);
    let half = 1u64 << (RANDOM_DRAW_BITS - 1);
    let edges = g
        .edges()
        .filter(|_| (rng.next_u64() >> (64 - RANDOM_DRAW_BITS)) < half)
        .collect();
    Graph::from_canonical(g.n(), edges).with_provenance(
        Provenance::new(Family::Subgraph, vec![g.n().into(), seed.into()]),
        false,
    )
}

/// The Petersen graph, built as the Kneser graph `K(5, 2)`.
pub fn petersen() -> Graph {
    gen_kneser(5, 2).expect("valid kneser parameters")
}

/// The Grötzsch graph, the Mycielskian of `C_5`.
pub fn grotzsch() -> Graph {
    gen_mycielski(&gen_cycle(5).expect("valid cycle"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::stats;
    use crate::rational::{int, ratio};

    fn sorted_edges(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn star_examples() {
        let k2 = gen_star(1, 0).unwrap();
        assert_eq!((k2.n(), sorted_edges(&k2)), (2, vec![(0, 1)]));
        let k13 = gen_star(3, 0).unwrap();
        assert_eq!((k13.n(), k13.m()), (4, 3));
        let g = gen_star(2, 1).unwrap();
        assert_eq!((g.n(), g.m()), (4, 2));
        assert_eq!(g.degree(3), 0);
        assert!(gen_star(0, 2).is_err());
    }

    /// Brute-force count of disjoint pairs of b-subsets, independent of the
    /// bitmask construction.
    fn disjoint_pairs(a: usize, b: usize) -> usize {
        let subsets: Vec<Vec<usize>> = (0u32..(1 << a))
            .filter(|m| m.count_ones() as usize == b)
            .map(|m| (0..a).filter(|i| m >> i & 1 == 1).collect())
            .collect();
        let mut count = 0;
        for i in 0..subsets.len() {
            for j in i + 1..subsets.len() {
                if subsets[i].iter().all(|x| !subsets[j].contains(x)) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn kneser_examples() {
        let k = gen_kneser(3, 1).unwrap();
        assert_eq!(k, gen_complete(3));
        assert!(k.is_transitive());

        let p = gen_kneser(5, 2).unwrap();
        assert_eq!(disjoint_pairs(5, 2), 15);
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));

        let g = gen_kneser(4, 2).unwrap();
        assert_eq!(disjoint_pairs(4, 2), 3);
        assert_eq!((g.n(), g.m()), (6, 3));
        assert!((0..6).all(|v| g.degree(v) == 1));

        assert_eq!(gen_kneser(5, 3).unwrap().m(), 0);
        assert!(gen_kneser(3, 0).is_err());
        assert!(gen_kneser(3, 4).is_err());
    }

    #[test]
    fn kneser_vertices_are_lexicographic() {
        assert_eq!(
            k_subsets(4, 2),
            vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]
        );
    }

    #[test]
    fn mycielski_examples() {
        let m = gen_mycielski(&gen_complete(2));
        assert_eq!((m.n(), m.m()), (5, 5));
        assert!((0..5).all(|v| m.degree(v) == 2));
        assert!(!m.has_triangle());
        assert_eq!(m.components().len(), 1);

        let m1 = gen_mycielski(&gen_complete(1));
        assert_eq!((m1.n(), sorted_edges(&m1)), (3, vec![(1, 2)]));

        let g = grotzsch();
        assert_eq!((g.n(), g.m()), (11, 20));
        assert!(!g.has_triangle());
    }

    #[test]
    fn random_extremes() {
        assert_eq!(gen_random(5, &int(0), 42).unwrap().m(), 0);
        assert_eq!(gen_random(5, &int(1), 42).unwrap(), gen_complete(5));
        assert!(gen_random(5, &ratio(3, 2), 42).is_err());
        assert!(gen_random(5, &int(-1), 42).is_err());
    }

    #[test]
    fn random_is_deterministic() {
        let a = gen_random(30, &ratio(1, 2), 7).unwrap();
        let b = gen_random(30, &ratio(1, 2), 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, gen_random(30, &ratio(1, 2), 8).unwrap());
    }

    #[test]
    fn random_draws_follow_documented_convention() {
        // Re-derive the first pairs by hand from the raw generator.
        let mut rng = SeededRng::new(99);
        let g = gen_random(4, &ratio(1, 3), 99).unwrap();
        let mut expected = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                let draw = rng.next_u64() >> 11;
                if (draw as u128) * 3 < (1u128 << 53) {
                    expected.push((u, v));
                }
            }
        }
        assert_eq!(sorted_edges(&g), expected);
    }

    #[test]
    fn kneser_a1_is_complete() {
        for a in 1..7 {
            assert_eq!(gen_kneser(a, 1).unwrap(), gen_complete(a));
        }
    }

    #[test]
    fn petersen_stats() {
        let s = stats(&petersen()).unwrap();
        assert_eq!((s.alpha, s.omega), (4, 2));
    }

    #[test]
    fn triangle_free_sampler() {
        for seed in 0..20 {
            let g = gen_random_triangle_free(9, &ratio(1, 2), seed).unwrap();
            let full = gen_random(9, &ratio(1, 2), seed).unwrap();
            assert!(!g.has_triangle());
            assert!(g.edges().all(|(u, v)| full.has_edge(u, v)));
        }
        assert_eq!(gen_random_triangle_free(6, &int(1), 0).unwrap().m(), 5);
    }

    #[test]
    fn spanning_half_is_subgraph() {
        let g = gen_complete(8);
        let h = random_spanning_half(&g, 3);
        assert!(h.edges().all(|(u, v)| g.has_edge(u, v)));
        assert_eq!(h, random_spanning_half(&g, 3));
    }
}
