use cofrac::graph::{gen_complete, gen_kneser, gen_random, stats, Graph};
use cofrac::harness::{
    aks_subgraph_sample, check_theorem6, gap_experiment, integral_chi, integral_z,
    manufactured_edge_cover, ramsey_convert, remark6_experiment, zf_nm_search, Verdict,
};
use cofrac::rational::{int, ratio};
use cofrac::sets::{
    enumerate_maximal_cliques, enumerate_maximal_independent_sets, max_weight_clique,
    max_weight_independent_set,
};
use cofrac::solver::{
    chi_f, chi_f_with, verify_certificate, verify_cover, z_f, z_f_with, MethodChoice, SolveOptions,
};
use cofrac::{Rational, SetKind};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn is_independent(g: &Graph, s: &[usize]) -> bool {
    s.iter()
        .all(|&a| s.iter().all(|&b| a == b || !g.has_edge(a, b)))
}

fn is_clique(g: &Graph, s: &[usize]) -> bool {
    s.iter()
        .all(|&a| s.iter().all(|&b| a == b || g.has_edge(a, b)))
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

fn brute_alpha(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|s| is_independent(g, s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

fn brute_omega(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|s| is_clique(g, s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_involution(g in arb_graph(10)) {
        let c = g.complement();
        prop_assert_eq!(c.m() + g.m(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn complement_swaps_alpha_and_omega(g in arb_graph(10)) {
        let s = stats(&g).unwrap();
        let c = stats(&g.complement()).unwrap();
        prop_assert_eq!((s.alpha, s.omega), (c.omega, c.alpha));
        prop_assert_eq!((s.alpha, s.omega), (brute_alpha(&g), brute_omega(&g)));
        prop_assert_eq!(s.triangle_free, s.omega <= 2);
    }

    #[test]
    fn disjoint_union_counts(g in arb_graph(7), k in 1usize..4) {
        let kg = g.disjoint_union(k).unwrap();
        prop_assert_eq!(kg.n(), k * g.n());
        prop_assert_eq!(kg.m(), k * g.m());
        prop_assert_eq!(stats(&kg).unwrap().omega, stats(&g).unwrap().omega);
    }

    #[test]
    fn random_graphs_are_reproducible(n in 0usize..20, p in 0i64..=8, seed: u64) {
        let p = ratio(p, 8);
        prop_assert_eq!(gen_random(n, &p, seed).unwrap(), gen_random(n, &p, seed).unwrap());
    }

    #[test]
    fn maximal_sets_are_valid_and_maximal(g in arb_graph(10)) {
        let ind = enumerate_maximal_independent_sets(&g).unwrap();
        for s in &ind {
            prop_assert_eq!(s.kind, SetKind::Independent);
            prop_assert!(is_independent(&g, &s.members));
            for v in (0..g.n()).filter(|v| !s.contains(*v)) {
                prop_assert!(s.members.iter().any(|&u| g.has_edge(u, v)));
            }
        }
        let mut sorted = ind.clone();
        sorted.sort_by(|a, b| a.members.cmp(&b.members));
        prop_assert_eq!(&sorted, &ind);
        let brute: Vec<Vec<usize>> = subsets(g.n())
            .filter(|s| is_independent(&g, s))
            .filter(|s| (0..g.n()).all(|v| s.contains(&v) || s.iter().any(|&u| g.has_edge(u, v))))
            .collect();
        let mut got: Vec<Vec<usize>> = ind.iter().map(|s| s.members.clone()).collect();
        let mut brute = brute;
        got.sort();
        brute.sort();
        prop_assert_eq!(got, brute);
    }

    #[test]
    fn cliques_are_independent_sets_of_complement(g in arb_graph(10)) {
        let cl: Vec<Vec<usize>> = enumerate_maximal_cliques(&g).unwrap().into_iter().map(|s| s.members).collect();
        let ind: Vec<Vec<usize>> = enumerate_maximal_independent_sets(&g.complement())
            .unwrap()
            .into_iter()
            .map(|s| s.members)
            .collect();
        prop_assert_eq!(&cl, &ind);
        for s in &cl {
            prop_assert!(is_clique(&g, s));
        }
    }

    #[test]
    fn unit_weight_oracles_find_alpha_and_omega(g in arb_graph(10)) {
        let ones = vec![int(1); g.n()];
        let (s, w) = max_weight_independent_set(&g, &ones).unwrap();
        prop_assert!(is_independent(&g, &s.members));
        prop_assert_eq!(s.len(), brute_alpha(&g));
        prop_assert_eq!(w, int(brute_alpha(&g) as i64));
        let (c, _) = max_weight_clique(&g, &ones).unwrap();
        prop_assert!(is_clique(&g, &c.members));
        prop_assert_eq!(c.len(), brute_omega(&g));
    }

    #[test]
    fn weighted_oracle_matches_brute_force(g in arb_graph(9), raw in proptest::collection::vec((0i64..6, 1i64..5), 9)) {
        let w: Vec<Rational> = (0..g.n()).map(|v| ratio(raw[v].0, raw[v].1)).collect();
        let best = subsets(g.n())
            .filter(|s| is_independent(&g, s))
            .map(|s| s.iter().fold(int(0), |acc, &v| acc + &w[v]))
            .max()
            .unwrap();
        let (s, total) = max_weight_independent_set(&g, &w).unwrap();
        prop_assert!(is_independent(&g, &s.members));
        prop_assert_eq!(s.members.iter().fold(int(0), |acc, &v| acc + &w[v]), total.clone());
        prop_assert_eq!(total, best);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn z_f_is_self_complementary(g in arb_graph(9)) {
        prop_assert_eq!(z_f(&g).unwrap().value, z_f(&g.complement()).unwrap().value);
    }

    #[test]
    fn sandwich(g in arb_graph(9)) {
        let s = stats(&g).unwrap();
        let z = z_f(&g).unwrap().value;
        let lower = ratio(g.n() as i64, s.alpha.max(s.omega) as i64);
        let upper = chi_f(&g).unwrap().value.min(chi_f(&g.complement()).unwrap().value);
        prop_assert!(lower <= z && z <= upper);
        prop_assert!(z <= int(integral_z(&g).unwrap() as i64));
        let chi = chi_f(&g).unwrap().value;
        prop_assert!(int(s.omega as i64) <= chi && chi <= int(integral_chi(&g).unwrap() as i64));
    }

    #[test]
    fn certificates_close(g in arb_graph(10)) {
        for cert in [chi_f(&g).unwrap(), z_f(&g).unwrap()] {
            prop_assert!(verify_certificate(&g, &cert).is_ok());
            prop_assert_eq!(cert.cover.weight(), cert.dual.weight());
            prop_assert_eq!(&cert.cover.weight(), &cert.value);
        }
    }

    #[test]
    fn column_generation_equals_enumeration(g in arb_graph(10)) {
        let e = SolveOptions::with_method(MethodChoice::Enumeration);
        let c = SolveOptions::with_method(MethodChoice::ColumnGeneration);
        prop_assert_eq!(chi_f_with(&g, &e).unwrap().value, chi_f_with(&g, &c).unwrap().value);
        prop_assert_eq!(z_f_with(&g, &e).unwrap().value, z_f_with(&g, &c).unwrap().value);
    }

    #[test]
    fn induced_subgraphs_of_cliques_have_z_f_one(n in 1usize..12, mask: u16) {
        let k = gen_complete(n);
        let keep: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        prop_assume!(!keep.is_empty());
        prop_assert_eq!(z_f(&k.induced_subgraph(&keep).unwrap()).unwrap().value, int(1));
    }

    #[test]
    fn solver_is_deterministic(g in arb_graph(10)) {
        prop_assert_eq!(z_f(&g).unwrap().to_json(), z_f(&g).unwrap().to_json());
    }

    #[test]
    fn ramsey_conversion_invariants(g in arb_graph(10)) {
        prop_assume!(stats(&g).unwrap().omega <= 3);
        for cover in [z_f(&g).unwrap().cover, manufactured_edge_cover(&g)] {
            let (out, trace) = ramsey_convert(&g, &cover).unwrap();
            prop_assert!(verify_cover(&g, &out).is_ok());
            prop_assert!(out.entries.iter().all(|e| e.kind == SetKind::Independent && is_independent(&g, &e.members)));
            prop_assert!(&trace.output_weight - &trace.input_weight <= int(trace.r as i64));
            prop_assert_eq!(trace.residues[0], 0);
            for i in 1..=g.n() {
                prop_assert!(trace.residues[i] < trace.r);
                prop_assert_eq!(
                    trace.s[i - 1] * trace.k,
                    trace.partition_sizes[i - 1] + trace.residues[i - 1] - trace.residues[i]
                );
            }
        }
    }

    #[test]
    fn theorem6_never_fails_on_triangle_free(g in arb_graph(9)) {
        prop_assume!(!g.has_triangle());
        let r = check_theorem6(&g).unwrap();
        prop_assert!(!matches!(r.verdict, Verdict::Fails { .. }), "{:?}", r);
    }

    #[test]
    fn experiments_are_reproducible(seed in 0u64..1000) {
        let a = remark6_experiment(8, seed).unwrap();
        prop_assert_eq!(&a, &remark6_experiment(8, seed).unwrap());
        let a = gap_experiment(7, &ratio(1, 3), seed).unwrap();
        prop_assert_eq!(&a, &gap_experiment(7, &ratio(1, 3), seed).unwrap());
        let g = gen_random(8, &ratio(2, 3), seed).unwrap();
        prop_assert_eq!(aks_subgraph_sample(&g, seed).unwrap().h, aks_subgraph_sample(&g, seed).unwrap().h);
        let a = zf_nm_search(5, 4, 6, seed).unwrap();
        let b = zf_nm_search(5, 4, 6, seed).unwrap();
        prop_assert_eq!((a.witness, a.best), (b.witness, b.best));
    }
}

#[test]
fn kneser_with_b_one_is_complete() {
    for a in 1..8 {
        assert_eq!(gen_kneser(a, 1).unwrap(), gen_complete(a));
    }
}
