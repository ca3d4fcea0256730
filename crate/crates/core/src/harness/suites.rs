//! Batches of checks over parameter ranges and graph collections.

use std::ops::RangeInclusive;

use super::integral::{DEFAULT_CHI_LIMIT, DEFAULT_Z_LIMIT};
use super::ramsey::{check_theorem7, check_theorem7_with_cover, manufactured_edge_cover};
use super::report::TheoremReport;
use super::theorems::*;
use crate::error::Result;
use crate::graph::{
    gen_complete, gen_cycle, gen_empty, gen_kneser, gen_mycielski, gen_path, gen_random,
    gen_random_triangle_free, gen_star, grotzsch, petersen, stats, Graph,
};
use crate::rational::ratio;
use crate::rng::derive_seed;

/// Small instances of every generator plus seeded `G(n, p)` with
/// `4 <= n <= 12`. Deterministic in `seed`.
pub fn small_corpus(seed: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    out.extend((1..=6).map(gen_complete));
    out.extend((1..=4).map(gen_empty));
    out.extend((3..=10).map(|n| gen_cycle(n).expect("n >= 3")));
    out.extend((1..=8).map(|n| gen_path(n).expect("n >= 1")));
    for t in 1..=5 {
        for s in 0..=2 {
            out.push(gen_star(t, s).expect("t >= 1"));
        }
    }
    for (a, b) in [(3, 1), (4, 1), (4, 2), (5, 2), (6, 2)] {
        out.push(gen_kneser(a, b).expect("valid kneser parameters"));
    }
    out.push(gen_mycielski(&gen_complete(2)));
    out.push(grotzsch());
    out.push(gen_complete(2).disjoint_union(3).expect("k >= 1"));
    out.push(
        gen_cycle(5)
            .expect("n >= 3")
            .disjoint_union(2)
            .expect("k >= 1"),
    );
    let probabilities = [ratio(1, 4), ratio(1, 2), ratio(3, 4)];
    let mut index = 0;
    for n in 4..=12 {
        for p in &probabilities {
            out.push(gen_random(n, p, derive_seed(seed, index)).expect("valid probability"));
            index += 1;
        }
    }
    out
}

/// `count` triangle-free graphs with `2 <= n <= max_n`, cycling through
/// sizes and edge densities. Deterministic in `seed`.
pub fn triangle_free_sample(max_n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let probabilities = [
        ratio(1, 5),
        ratio(1, 3),
        ratio(1, 2),
        ratio(2, 3),
        ratio(4, 5),
    ];
    let sizes = max_n.saturating_sub(1).max(1);
    (0..count)
        .map(|i| {
            let n = 2 + i % sizes;
            let p = &probabilities[(i / sizes) % probabilities.len()];
            gen_random_triangle_free(n.min(max_n.max(2)), p, derive_seed(seed, i as u64))
                .expect("valid probability")
        })
        .collect()
}

pub fn example1_suite(
    ts: RangeInclusive<usize>,
    ss: RangeInclusive<usize>,
) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for t in ts {
        for s in ss.clone() {
            out.push(check_example1(t, s)?);
        }
    }
    Ok(out)
}

pub fn proposition1_suite(graphs: &[Graph]) -> Result<Vec<TheoremReport>> {
    graphs.iter().map(check_proposition1).collect()
}

/// Triangle-free corpus graphs within the integral limits.
pub fn theorem3_suite(graphs: &[Graph]) -> Result<Vec<TheoremReport>> {
    graphs
        .iter()
        .filter(|g| !g.has_triangle() && g.n() <= DEFAULT_Z_LIMIT.min(DEFAULT_CHI_LIMIT))
        .map(check_theorem3)
        .collect()
}

/// Every `k` from `max(omega, 1)` while `k * n` stays within the integral
/// limit for `Z`, at most `max_k` copies.
pub fn theorem4_suite(graphs: &[Graph], max_k: usize) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for g in graphs.iter().filter(|g| g.n() > 0) {
        let omega = stats(g)?.omega.max(1);
        for k in omega..=max_k {
            if k * g.n() > DEFAULT_Z_LIMIT {
                break;
            }
            out.push(check_theorem4(g, k)?);
        }
    }
    Ok(out)
}

/// `k` runs over `omega..=omega + extra`.
pub fn theorem5_suite(
    graphs: &[Graph],
    extra: usize,
    max_total: usize,
) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for g in graphs.iter().filter(|g| g.n() > 0) {
        let omega = stats(g)?.omega;
        for k in omega..=omega + extra {
            if k * g.n() > max_total {
                break;
            }
            out.push(check_theorem5(g, k)?);
        }
    }
    Ok(out)
}

/// The named triangle-free graphs followed by a seeded sample.
pub fn theorem6_suite(max_n: usize, count: usize, seed: u64) -> Result<Vec<TheoremReport>> {
    let mut graphs = vec![
        gen_cycle(5).expect("n >= 3"),
        gen_cycle(7).expect("n >= 3"),
        petersen(),
        grotzsch(),
    ];
    graphs.extend(triangle_free_sample(max_n, count, seed));
    graphs.iter().map(check_theorem6).collect()
}

/// Each graph with an optimal cocoloring, and with the edge cover when it
/// has edges.
pub fn theorem7_suite(graphs: &[Graph]) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for g in graphs {
        out.push(check_theorem7(g)?);
        if g.m() > 0 {
            out.push(check_theorem7_with_cover(g, &manufactured_edge_cover(g))?);
        }
    }
    Ok(out)
}

pub fn mycielski_suite(graphs: &[Graph]) -> Result<Vec<TheoremReport>> {
    graphs.iter().map(check_mycielski).collect()
}

pub fn kneser_suite(params: &[(usize, usize)]) -> Result<Vec<TheoremReport>> {
    params.iter().map(|&(a, b)| check_kneser(a, b)).collect()
}
