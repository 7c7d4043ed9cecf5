mod common;

use proptest::prelude::*;
use sgcover::decomp::{circuit_through_partners, cover_0123, pair_decomposition, tree_graph_barbell};
use sgcover::engine::verify_cover;
use sgcover::generate::{random_instance, random_tree_graph, rng, GenSpec};
use sgcover::structure::{classify_bridges, is_g_bridgeless};
use sgcover::switching::normalize;
use sgcover::{EdgeId, Error, Limits, SignedGraph};

use common::acyclic;

fn s_bridgeless(seed: u64, n: usize, m: usize, neg: usize, even: bool) -> Option<SignedGraph> {
    let mut spec = GenSpec::new(n, m, neg);
    spec.s_bridgeless = true;
    spec.min_negativeness = 2;
    spec.g_bridgeless_even = even;
    spec.max_attempts = 300;
    let g = random_instance(&spec, seed, &Limits::default()).ok()?;
    // drop positive loops, then normalize
    let kept: Vec<EdgeId> = g.edge_ids().filter(|e| !g.positive_loops().contains(e)).collect();
    let h = g.spanning_subgraph(&kept).graph;
    Some(normalize(&h, &Limits::default()).unwrap().0)
}

proptest! {
    #![proptest_config(common::config(150))]

    #[test]
    fn cover_0123_meets_its_contract(seed in any::<u64>(), n in 1usize..=8, k in 2usize..=6) {
        let h = random_tree_graph(n, k, &mut rng(seed));
        let f = cover_0123(&h).unwrap();
        let r = verify_cover(&h, &f, None);
        prop_assert!(r.member_issues.is_empty());
        prop_assert!(r.multiplicities.iter().all(|&m| m <= 3));
        let cat = classify_bridges(&h).unwrap();
        for e in cat.s_bridges.iter().chain(&cat.partner_union()) {
            prop_assert!(r.multiplicities[*e] >= 1, "e{} uncovered", e);
        }
        for e in h.negative_edges() {
            if h.edge(e).is_loop() {
                prop_assert_eq!(r.multiplicities[e], 2);
            }
        }
    }

    #[test]
    fn even_tree_graphs_host_required_edges(seed in any::<u64>(), n in 1usize..=8, half in 1usize..=3) {
        let h = random_tree_graph(n, 2 * half, &mut rng(seed));
        let cert = tree_graph_barbell(&h).unwrap();
        let cat = classify_bridges(&h).unwrap();
        for e in cat.g_class_bridges.iter().chain(&cat.partner_union()) {
            prop_assert!(cert.host.contains(e));
        }
    }

    #[test]
    fn partner_circuit_contains_partners(seed in any::<u64>(), n in 2usize..=8, k in 2usize..=5) {
        let h = random_tree_graph(n, k, &mut rng(seed));
        let cat = classify_bridges(&h).unwrap();
        for (&e, s) in &cat.partner_sets {
            if let Ok(c) = circuit_through_partners(&h, e) {
                prop_assert!(c.check(&h).is_ok());
                let edges = c.edges();
                prop_assert!(s.iter().all(|f| edges.contains(f)));
            }
        }
    }

    #[test]
    fn pair_decomposition_splits_edges(seed in any::<u64>(), n in 2usize..=9, m in 4usize..=16, neg in 2usize..=6) {
        let Some(g) = s_bridgeless(seed, n, m, neg.min(m), false) else { return Ok(()); };
        let p = pair_decomposition(&g).unwrap();
        let mut all: Vec<EdgeId> = p.g1_edges.iter().chain(&p.g2_edges).copied().collect();
        all.sort_unstable();
        all.dedup();
        prop_assert_eq!(all.len(), g.edge_count());
        prop_assert!(p.g1_edges.iter().all(|&e| !g.is_negative(e)));
        let g2_pos: Vec<EdgeId> = p.g2_edges.iter().copied().filter(|&e| !g.is_negative(e)).collect();
        prop_assert!(acyclic(&g, &g2_pos));
        let shared: Vec<EdgeId> = p.g1_edges.iter().copied().filter(|e| p.g2_edges.contains(e)).collect();
        prop_assert!(acyclic(&g, &shared));
        let m2 = p.f2.multiplicities(g.edge_count());
        for e in g.edge_ids() {
            if p.g2_edges.contains(&e) {
                prop_assert!((1..=p.k).contains(&m2[e]));
            } else {
                prop_assert_eq!(m2[e], 0);
            }
        }
        if is_g_bridgeless(&g, &Limits::default()).unwrap() && g.negative_edges().len() % 2 == 0 {
            prop_assert_eq!(p.k, 2);
        }
    }
}

#[test]
fn single_negative_edge_is_rejected() {
    let g = sgcover::fixtures::triangle(1);
    assert!(matches!(pair_decomposition(&g), Err(Error::NotSBridgeless(_))));
}
