//! Exact chromatic and cochromatic numbers for small graphs.
//!
//! Both are minimum covers of the vertex set, by independent sets only or
//! by cliques and independent sets. The search memoizes on the set of
//! uncovered vertices and always covers the lowest uncovered vertex with a
//! set that is maximal inside the uncovered part, which loses nothing.

use std::collections::HashMap;

use crate::error::{check_limit, Result};
use crate::graph::Graph;
use crate::sets::{complement_masks, full_mask, maximal_cliques_within};

pub const DEFAULT_CHI_LIMIT: usize = 16;
pub const DEFAULT_Z_LIMIT: usize = 14;

/// Chromatic number.
pub fn integral_chi(g: &Graph) -> Result<usize> {
    integral_chi_with_limit(g, DEFAULT_CHI_LIMIT)
}

pub fn integral_chi_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    check_limit("exact chromatic number", g.n(), limit)?;
    Ok(MinCover::new(g, false)?.solve())
}

/// Cochromatic number: fewest cliques and independent sets covering `V(G)`.
pub fn integral_z(g: &Graph) -> Result<usize> {
    integral_z_with_limit(g, DEFAULT_Z_LIMIT)
}

pub fn integral_z_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    check_limit("exact cochromatic number", g.n(), limit)?;
    Ok(MinCover::new(g, true)?.solve())
}

struct MinCover {
    adj: Vec<u64>,
    non_adj: Vec<u64>,
    cliques_allowed: bool,
    memo: HashMap<u64, usize>,
}

impl MinCover {
    fn new(g: &Graph, cliques_allowed: bool) -> Result<Self> {
        let adj = g.adjacency_masks()?;
        let non_adj = complement_masks(&adj);
        Ok(MinCover {
            adj,
            non_adj,
            cliques_allowed,
            memo: HashMap::new(),
        })
    }

    fn solve(&mut self) -> usize {
        self.min_parts(full_mask(self.adj.len()))
    }

    fn min_parts(&mut self, uncovered: u64) -> usize {
        if uncovered == 0 {
            return 0;
        }
        if let Some(&k) = self.memo.get(&uncovered) {
            return k;
        }
        let v = uncovered.trailing_zeros() as usize;
        let bit = 1u64 << v;
        let mut parts: Vec<u64> =
            maximal_cliques_within(&self.non_adj, uncovered & self.non_adj[v])
                .into_iter()
                .map(|m| m | bit)
                .collect();
        if parts.is_empty() {
            parts.push(bit);
        }
        if self.cliques_allowed {
            let nbrs = uncovered & self.adj[v];
            let mut cl: Vec<u64> = maximal_cliques_within(&self.adj, nbrs)
                .into_iter()
                .map(|m| m | bit)
                .collect();
            if cl.is_empty() {
                cl.push(bit);
            }
            parts.extend(cl);
        }
        let mut best = usize::MAX;
        for part in parts {
            best = best.min(1 + self.min_parts(uncovered & !part));
            if best == 1 {
                break;
            }
        }
        self.memo.insert(uncovered, best);
        best
    }
}

/// Largest-first greedy coloring: vertices by decreasing degree (ties by
/// id), each given the smallest color unused by its neighbours. Returns the
/// number of colors, an upper bound on the chromatic number.
pub fn greedy_colors(g: &Graph) -> usize {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let mut color = vec![usize::MAX; g.n()];
    let mut used = 0;
    for v in order {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|&u| color[u]).collect();
        let c = (0..)
            .find(|c| !taken.contains(c))
            .expect("some color is free");
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_cycle, gen_empty, gen_path, gen_star, petersen};
    use crate::Error;

    /// Brute force: try every assignment of vertices to k classes.
    fn brute_force_cover(g: &Graph, cliques_allowed: bool) -> usize {
        let n = g.n();
        let class_ok = |vs: &[usize]| {
            let ind = vs
                .iter()
                .all(|&a| vs.iter().all(|&b| a == b || !g.has_edge(a, b)));
            let cl = vs
                .iter()
                .all(|&a| vs.iter().all(|&b| a == b || g.has_edge(a, b)));
            ind || (cliques_allowed && cl)
        };
        for k in 1..=n {
            let mut assign = vec![0usize; n];
            loop {
                let ok = (0..k).all(|c| {
                    let vs: Vec<usize> = (0..n).filter(|&v| assign[v] == c).collect();
                    class_ok(&vs)
                });
                if ok {
                    return k;
                }
                let mut i = 0;
                while i < n {
                    assign[i] += 1;
                    if assign[i] < k {
                        break;
                    }
                    assign[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        0
    }

    #[test]
    fn chi_examples() {
        assert_eq!(integral_chi(&gen_cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(integral_chi(&gen_complete(4)).unwrap(), 4);
        assert_eq!(integral_chi(&petersen()).unwrap(), 3);
        assert_eq!(integral_chi(&gen_empty(0)).unwrap(), 0);
        assert_eq!(integral_chi(&gen_empty(3)).unwrap(), 1);
    }

    #[test]
    fn z_examples() {
        for n in 1..6 {
            assert_eq!(integral_z(&gen_complete(n)).unwrap(), 1);
        }
        assert_eq!(integral_z(&gen_cycle(5).unwrap()).unwrap(), 3);
        let k13 = gen_star(3, 0).unwrap();
        assert_eq!(brute_force_cover(&k13, true), 2);
        assert_eq!(integral_z(&k13).unwrap(), 2);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        for seed in 0..40 {
            let n = 1 + (seed as usize % 7);
            let g = crate::graph::gen_random(n, &crate::rational::ratio(1, 2), seed).unwrap();
            assert_eq!(
                integral_chi(&g).unwrap(),
                brute_force_cover(&g, false),
                "seed {seed}"
            );
            assert_eq!(
                integral_z(&g).unwrap(),
                brute_force_cover(&g, true),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn limits() {
        assert!(matches!(
            integral_chi(&gen_empty(17)),
            Err(Error::Capability { .. })
        ));
        assert!(matches!(
            integral_z(&gen_empty(15)),
            Err(Error::Capability { .. })
        ));
    }

    #[test]
    fn greedy_bounds() {
        assert_eq!(greedy_colors(&gen_complete(5)), 5);
        assert_eq!(greedy_colors(&gen_path(4).unwrap()), 2);
        assert!(greedy_colors(&petersen()) >= 3);
    }
}
