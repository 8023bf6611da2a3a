mod common;

use proptest::prelude::*;

use common::{brute_edge_connectivity, brute_vertex_connectivity};
use connpack::apps::{gossip, spread_origins, GossipPlan};
use connpack::cds::{cds_pack_centralized_with_assignment, cds_pack_distributed, CdsParams};
use connpack::graph::{
    components_in_subset, gen_gnp, is_connected, parse_edge_list, spanning_forest, to_edge_list,
    UnionFind,
};
use connpack::oracles::{
    edge_connectivity, verify_dominating_packing, verify_spanning_packing, vertex_connectivity,
};
use connpack::sim::SimConfig;
use connpack::st::{edge_partition, scale_packing, st_pack_small, target_trees, StParams};
use connpack::tester::{
    test_cds_partition_centralized, test_cds_partition_distributed, ClassPartition, Verdict,
};
use connpack::{Graph, Tree, TreePacking};

fn connected_gnp(max_n: usize) -> impl Strategy<Value = Graph> {
    (4..=max_n, 0.25f64..0.95, any::<u64>())
        .prop_map(|(n, p, seed)| gen_gnp(n, p, seed))
        .prop_filter("connected", is_connected)
}

fn single_tree(g: &Graph, weight: f64) -> TreePacking {
    TreePacking {
        trees: vec![Tree::from_edges(0, weight, &spanning_forest(g))],
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trip(g in connected_gnp(30)) {
        g.check_invariants().unwrap();
        let back = parse_edge_list(&to_edge_list(&g), false).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn connectivity_chain(g in connected_gnp(24)) {
        let k = vertex_connectivity(&g);
        let lambda = edge_connectivity(&g);
        prop_assert!(k <= lambda);
        prop_assert!(lambda <= g.min_degree());
    }

    #[test]
    fn oracles_match_exhaustive_cuts(g in connected_gnp(8)) {
        prop_assert_eq!(vertex_connectivity(&g), brute_vertex_connectivity(&g));
        prop_assert_eq!(edge_connectivity(&g), brute_edge_connectivity(&g));
    }

    #[test]
    fn union_find_counts_components(n in 1usize..40, pairs in prop::collection::vec((0usize..40, 0usize..40), 0..60)) {
        let edges: Vec<(usize, usize)> =
            pairs.into_iter().map(|(a, b)| (a % n, b % n)).filter(|(a, b)| a != b).collect();
        let g = Graph::from_edges_lossy(n, edges.iter().copied());
        let mut uf = UnionFind::new(n);
        for &(a, b) in &edges {
            uf.union(a, b);
        }
        let labels = components_in_subset(&g, &vec![true; n]);
        let distinct: std::collections::BTreeSet<_> = labels.iter().collect();
        prop_assert_eq!(uf.set_count(), distinct.len());
        for &(a, b) in &edges {
            prop_assert!(uf.same(a, b));
        }
    }

    #[test]
    fn spanning_tree_verifies(g in connected_gnp(30), w in 0.0f64..=1.0) {
        let p = single_tree(&g, w);
        let span = verify_spanning_packing(&g, &p);
        prop_assert!(span.valid);
        prop_assert!((span.total_weight - w).abs() < 1e-12);
        prop_assert!(verify_dominating_packing(&g, &p).valid);
        let mut doubled = p.clone();
        doubled.trees.push(Tree { id: 1, ..p.trees[0].clone() });
        doubled.trees[0].weight = 0.6;
        doubled.trees[1].weight = 0.6;
        prop_assert!(!verify_spanning_packing(&g, &doubled).valid);
    }

    #[test]
    fn edge_partition_is_a_partition(g in connected_gnp(30), eta in 1usize..6, seed in any::<u64>()) {
        let part = edge_partition(&g, eta, seed).unwrap();
        prop_assert_eq!(part.subgraphs.len(), eta);
        prop_assert_eq!(part.subgraphs.iter().map(|s| s.m()).sum::<usize>(), g.m());
        for (e, &p) in g.edge_list().iter().zip(&part.part) {
            prop_assert!(part.subgraphs[p].has_edge(e.u, e.v));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn spanning_packing_weight(g in connected_gnp(14)) {
        let lambda = edge_connectivity(&g);
        let state = st_pack_small(&g, lambda, &StParams::default()).unwrap();
        prop_assert!(state.iterations <= state.cap);
        let packing = scale_packing(&g, &state).unwrap();
        let report = verify_spanning_packing(&g, &packing);
        prop_assert!(report.valid);
        prop_assert!(report.total_weight >= target_trees(lambda) as f64 / 1.6 - 1e-9);
    }

    #[test]
    fn packings_pass_tester_and_gossip(g in connected_gnp(40), seed in 0u64..1000, classes in 1usize..4) {
        let params = CdsParams { classes: Some(classes), ..CdsParams::with_seed(seed) };
        let (packing, ca) = cds_pack_centralized_with_assignment(&g, g.n(), &params).unwrap();
        prop_assert!(packing.max_membership <= 3 * packing.layers);
        if packing.dominated_after_base {
            prop_assert!(packing.m_history.windows(2).all(|w| w[1] <= w[0]));
        }
        let report = verify_dominating_packing(&g, &packing.trees);
        prop_assert_eq!(report.valid, packing.all_connected);
        let part = ClassPartition::from_assignment(&ca);
        let outcome = test_cds_partition_centralized(&g, &part, seed, 4);
        // the tester never rejects a valid partition
        if part.is_valid_cds_partition(&g) {
            prop_assert!(outcome.passed());
        } else {
            prop_assert!(!outcome.passed());
        }
        if report.valid {
            let plan = GossipPlan::round_robin(spread_origins(g.n(), 12), packing.trees.len());
            let out = gossip(&g, &packing.trees, &plan, &SimConfig::new(g.n(), seed)).unwrap();
            prop_assert!(out.complete);
            prop_assert_eq!(out.missing, 0);
        }
    }

    #[test]
    fn undominated_labels_always_fail(g in connected_gnp(30), seed in any::<u64>()) {
        // class 2 lives only on vertex 0, so some vertex far from it is undominated
        let mut labels = vec![1u32; g.n()];
        labels[0] = 2;
        let part = ClassPartition::from_labels(2, &labels).unwrap();
        let dominated = part.undominated(&g).is_none();
        let outcome = test_cds_partition_centralized(&g, &part, seed, 4);
        prop_assert_eq!(outcome.verdict == Verdict::DominationFailure, !dominated);
        let (dist, _, consistent) =
            test_cds_partition_distributed(&g, &part, &SimConfig::new(g.n(), seed), 4).unwrap();
        prop_assert!(consistent);
        prop_assert_eq!(dist, outcome);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn distributed_run_is_deterministic(g in connected_gnp(30), seed in 0u64..100) {
        let params = CdsParams { classes: Some(2), layers: Some(8), ..CdsParams::with_seed(seed) };
        let cfg = SimConfig::new(g.n(), seed);
        let (a, ta) = cds_pack_distributed(&g, g.n(), &params, &cfg).unwrap();
        let (b, tb) = cds_pack_distributed(&g, g.n(), &params, &cfg).unwrap();
        prop_assert_eq!(a, b);
        prop_assert_eq!(&ta, &tb);
        prop_assert!(ta.violations.is_empty());
        prop_assert!(ta.charged_rounds >= ta.rounds_used);
    }
}
