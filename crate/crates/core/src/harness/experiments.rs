//! Seeded experiments on random graphs. Each one asserts only what is
//! checkable exactly at small sizes and reports the rest as numbers.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::integral::{greedy_colors, integral_chi};
use super::report::TheoremReport;
use crate::error::{Error, Result};
use crate::graph::{gen_empty, gen_random, random_spanning_half, stats, Graph};
use crate::rational::{self, int, Rational};
use crate::rng::{SeededRng, SeededRngExt};
use crate::solver::{chi_f, z_f, CertifiedValue};

/// Random half of the subgraph induced by heavily clique-covered vertices.
#[derive(Debug, Clone)]
pub struct AksSample {
    /// Vertices of `G` covered by clique weight at least 1/2 in the optimum.
    pub v1: Vec<usize>,
    /// Spanning subgraph of `G[v1]`, relabelled in increasing id order.
    pub h: Graph,
    pub z_f: CertifiedValue,
    /// Set when `v1` is empty and `h` is the empty graph.
    pub empty: bool,
}

pub fn aks_subgraph_sample(g: &Graph, seed: u64) -> Result<AksSample> {
    let cert = z_f(g)?;
    let half = Rational::new(1.into(), 2.into());
    let v1: Vec<usize> = cert
        .cover
        .clique_weight_per_vertex(g.n())
        .iter()
        .enumerate()
        .filter(|(_, c)| **c >= half)
        .map(|(v, _)| v)
        .collect();
    if v1.is_empty() {
        let h = gen_empty(0);
        let z_f = z_f(&h)?;
        return Ok(AksSample {
            v1,
            h,
            z_f,
            empty: true,
        });
    }
    let g1 = g.induced_subgraph(&v1)?;
    let h = random_spanning_half(&g1, seed);
    let z_f = z_f(&h)?;
    Ok(AksSample {
        v1,
        h,
        z_f,
        empty: false,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Remark6Report {
    pub n: usize,
    pub seed: u64,
    pub alpha: usize,
    pub omega: usize,
    #[serde(with = "rational::serde_str")]
    pub lower_bound: Rational,
    #[serde(with = "rational::serde_str")]
    pub z_f: Rational,
    pub greedy_colors: usize,
    /// `n / (2 log2 n)`, absent for `n <= 1`.
    pub reference: Option<f64>,
    pub sandwich_holds: bool,
}

/// Samples `G(n, 1/2)` and checks `n / max(alpha, omega) <= Z_f <= greedy`.
pub fn remark6_experiment(n: usize, seed: u64) -> Result<Remark6Report> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "remark 6 experiment needs n >= 1".into(),
        ));
    }
    let g = gen_random(n, &Rational::new(1.into(), 2.into()), seed)?;
    let st = stats(&g)?;
    let lower_bound = Rational::new((n as i64).into(), (st.alpha.max(st.omega) as i64).into());
    let z = z_f(&g)?.value;
    let greedy = greedy_colors(&g);
    let reference = (n > 1).then(|| n as f64 / (2.0 * (n as f64).log2()));
    Ok(Remark6Report {
        n,
        seed,
        alpha: st.alpha,
        omega: st.omega,
        sandwich_holds: lower_bound <= z && z <= int(greedy as i64),
        lower_bound,
        z_f: z,
        greedy_colors: greedy,
        reference,
    })
}

impl Remark6Report {
    /// `Z_f` divided by the reference curve.
    pub fn reference_ratio(&self) -> Option<f64> {
        use num_traits::ToPrimitive;
        Some(self.z_f.to_f64()? / self.reference?)
    }

    /// Report for the sampled graph `g`, which [`Remark6Report::graph`] rebuilds.
    pub fn to_report(&self, g: &Graph) -> TheoremReport {
        TheoremReport::new("remark6", g)
            .value("seed", self.seed)
            .value("alpha", self.alpha)
            .value("omega", self.omega)
            .rational("lower_bound", &self.lower_bound)
            .rational("z_f", &self.z_f)
            .value("greedy_colors", self.greedy_colors)
            .value("reference", self.reference)
            .value("reference_ratio", self.reference_ratio())
            .expect(self.sandwich_holds, || "sandwich bound violated".into())
    }

    pub fn graph(&self) -> Graph {
        gen_random(self.n, &Rational::new(1.into(), 2.into()), self.seed)
            .expect("valid probability")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapReport {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub chi_complement: usize,
    /// `n / alpha - chi(G^c)`.
    #[serde(with = "rational::serde_str")]
    pub lower: Rational,
    #[serde(with = "rational::serde_str")]
    pub chi_f: Rational,
    #[serde(with = "rational::serde_str")]
    pub z_f: Rational,
    /// `chi_f - Z_f`.
    #[serde(with = "rational::serde_str")]
    pub gap: Rational,
    pub holds: bool,
}

/// Compares `n / alpha - chi(G^c)` with `chi_f - Z_f` on one graph.
pub fn gap_on_graph(g: &Graph) -> Result<GapReport> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("gap comparison needs n >= 1".into()));
    }
    let alpha = stats(g)?.alpha;
    let chi_c = integral_chi(&g.complement())?;
    let lower = Rational::new((g.n() as i64).into(), (alpha as i64).into()) - int(chi_c as i64);
    let chi = chi_f(g)?.value;
    let z = z_f(g)?.value;
    let gap = &chi - &z;
    Ok(GapReport {
        n: g.n(),
        m: g.m(),
        alpha,
        chi_complement: chi_c,
        holds: lower <= gap,
        lower,
        chi_f: chi,
        z_f: z,
        gap,
    })
}

/// [`gap_on_graph`] on `G(n, 1/(2 - eps))`, `0 <= eps <= 1`.
pub fn gap_experiment(n: usize, eps: &Rational, seed: u64) -> Result<GapReport> {
    if *eps < Rational::zero() || *eps > Rational::one() {
        return Err(Error::InvalidArgument(format!(
            "eps = {} outside [0, 1]",
            rational::to_string(eps)
        )));
    }
    let p = (int(2) - eps).recip();
    gap_on_graph(&gen_random(n, &p, seed)?)
}

impl GapReport {
    pub fn to_report(&self, g: &Graph) -> TheoremReport {
        TheoremReport::new("remark10", g)
            .value("alpha", self.alpha)
            .value("chi_complement", self.chi_complement)
            .rational("lower", &self.lower)
            .rational("chi_f", &self.chi_f)
            .rational("z_f", &self.z_f)
            .rational("gap", &self.gap)
            .expect(self.holds, || {
                format!(
                    "n/alpha - chi(G^c) = {} exceeds chi_f - z_f = {}",
                    rational::to_string(&self.lower),
                    rational::to_string(&self.gap)
                )
            })
    }
}

/// Best `Z_f` found over graphs with `n` vertices and `m` edges.
#[derive(Debug, Clone)]
pub struct ZfNmSearch {
    pub witness: Graph,
    pub best: Rational,
    pub evaluations: usize,
}

/// Randomized search for a lower bound on the largest `Z_f` among graphs
/// with `n` vertices and `m` edges.
///
/// Since complementation preserves `Z_f`, the search runs on whichever of
/// `m` and `C(n, 2) - m` is smaller and complements the witness if needed.
/// Even trials sample a uniform graph; odd trials move one edge of the
/// current best.
pub fn zf_nm_search(n: usize, m: usize, trials: usize, seed: u64) -> Result<ZfNmSearch> {
    let total = n * n.saturating_sub(1) / 2;
    if m > total {
        return Err(Error::InvalidArgument(format!(
            "m = {m} exceeds C({n}, 2) = {total}"
        )));
    }
    let flip = total - m < m;
    let target = m.min(total - m);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut rng = SeededRng::new(seed);
    let mut best: Option<(Graph, Rational)> = None;
    let mut evaluations = 0;
    for trial in 0..trials.max(1) {
        let edges: Vec<(usize, usize)> = match &best {
            Some((g, _)) if trial % 2 == 1 && target > 0 && target < total => {
                let mut edges: Vec<(usize, usize)> = g.edges().collect();
                let non_edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .copied()
                    .filter(|&(u, v)| !g.has_edge(u, v))
                    .collect();
                let out = rng.random_range(0..edges.len());
                edges[out] = non_edges[rng.random_range(0..non_edges.len())];
                edges
            }
            _ => {
                let mut shuffled = pairs.clone();
                let (chosen, _) = shuffled.partial_shuffle(&mut rng, target);
                chosen.to_vec()
            }
        };
        let g = Graph::from_edges(n, edges)?;
        let value = z_f(&g)?.value;
        evaluations += 1;
        if best.as_ref().is_none_or(|(_, b)| value > *b) {
            best = Some((g, value));
        }
    }
    let (g, value) = best.expect("at least one trial runs");
    let witness = if flip { g.complement() } else { g };
    let check = z_f(&witness)?.value;
    if check != value {
        return Err(Error::Internal(format!(
            "complement changed z_f from {} to {}",
            rational::to_string(&value),
            rational::to_string(&check)
        )));
    }
    Ok(ZfNmSearch {
        witness,
        best: value,
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_path};
    use crate::rational::ratio;
    use crate::solver::verify_certificate;

    #[test]
    fn aks_on_complete_graph() {
        let g = gen_complete(6);
        let s = aks_subgraph_sample(&g, 4).unwrap();
        assert!(!s.empty);
        assert_eq!(s.v1, (0..6).collect::<Vec<_>>());
        assert_eq!(s.h.n(), 6);
        assert!(s.h.edges().all(|(u, v)| g.has_edge(u, v)));
        verify_certificate(&s.h, &s.z_f).unwrap();
        let again = aks_subgraph_sample(&g, 4).unwrap();
        assert_eq!(again.h, s.h);
    }

    #[test]
    fn aks_subgraph_containment() {
        for seed in 0..10 {
            let g = gen_random(9, &ratio(2, 3), seed).unwrap();
            let s = aks_subgraph_sample(&g, seed).unwrap();
            let g1 = g.induced_subgraph(&s.v1).unwrap();
            assert!(s.h.edges().all(|(u, v)| g1.has_edge(u, v)));
            verify_certificate(&s.h, &s.z_f).unwrap();
        }
    }

    #[test]
    fn aks_empty_flag() {
        for g in [
            gen_empty(4),
            gen_path(1).unwrap(),
            crate::graph::gen_cycle(5).unwrap(),
        ] {
            let s = aks_subgraph_sample(&g, 1).unwrap();
            assert!(s.empty);
            assert_eq!(s.h.n(), 0);
            assert_eq!(s.z_f.value, int(0));
        }
    }

    #[test]
    fn remark6_sandwich() {
        for (n, seed) in [(30, 1), (5, 2), (1, 9)] {
            let r = remark6_experiment(n, seed).unwrap();
            assert!(r.sandwich_holds, "{r:?}");
            assert_eq!(
                r.to_report(&r.graph()).verdict,
                super::super::Verdict::Holds
            );
        }
        let r = remark6_experiment(1, 0).unwrap();
        assert_eq!(
            (r.z_f.clone(), r.greedy_colors, r.reference),
            (int(1), 1, None)
        );
    }

    #[test]
    fn gap_cases() {
        let r = gap_experiment(10, &ratio(1, 2), 3).unwrap();
        assert!(r.holds);
        let r = gap_experiment(2, &ratio(1, 2), 1).unwrap();
        assert!(r.holds);
        let r = gap_on_graph(&gen_complete(5)).unwrap();
        assert_eq!((r.alpha, r.chi_complement), (1, 1));
        assert_eq!(r.lower, int(4));
        assert_eq!(r.gap, int(4));
        assert!(r.holds);
        assert!(gap_experiment(5, &ratio(3, 2), 0).is_err());
    }

    #[test]
    fn nm_search_extremes() {
        let r = zf_nm_search(6, 0, 3, 1).unwrap();
        assert_eq!((r.best.clone(), r.witness.m()), (int(1), 0));
        let r = zf_nm_search(6, 15, 3, 1).unwrap();
        assert_eq!((r.best.clone(), r.witness.m()), (int(1), 15));
        assert!(zf_nm_search(6, 16, 3, 1).is_err());
    }

    #[test]
    fn nm_search_bound_and_determinism() {
        let r = zf_nm_search(6, 7, 200, 5).unwrap();
        assert_eq!((r.witness.n(), r.witness.m()), (6, 7));
        let st = stats(&r.witness).unwrap();
        assert!(r.best >= ratio(6, st.alpha.max(st.omega) as i64));
        assert_eq!(z_f(&r.witness).unwrap().value, r.best);
        let again = zf_nm_search(6, 7, 200, 5).unwrap();
        assert_eq!((again.witness, again.best), (r.witness, r.best));
        let flipped = zf_nm_search(6, 12, 20, 5).unwrap();
        assert_eq!(flipped.witness.m(), 12);
    }
}
