mod common;

use proptest::prelude::*;
use sgcover::structure::{bridges, classify_bridges, partner_set};
use sgcover::{EdgeId, SignedGraph};

use common::signed_graph;

fn parts_without(g: &SignedGraph, skip: &[EdgeId]) -> usize {
    let all: Vec<EdgeId> = g.edge_ids().filter(|e| !skip.contains(e)).collect();
    let (_, n) = g.vertex_components_of(&all);
    n
}

proptest! {
    #![proptest_config(common::config(200))]

    #[test]
    fn bridges_disconnect(g in signed_graph(1..=8, 12)) {
        let base = parts_without(&g, &[]);
        let want: Vec<EdgeId> = g.edge_ids().filter(|&e| parts_without(&g, &[e]) > base).collect();
        prop_assert_eq!(bridges(&g), want);
    }

    #[test]
    fn partner_sets_are_two_edge_cuts(g in signed_graph(1..=7, 11)) {
        let base = parts_without(&g, &[]);
        let br = bridges(&g);
        for e in g.negative_edges() {
            let s = partner_set(&g, e).unwrap();
            prop_assert!(s.contains(&e));
            if g.edge(e).is_loop() || br.contains(&e) {
                prop_assert_eq!(s, vec![e]);
                continue;
            }
            let mut want: Vec<EdgeId> = g
                .edge_ids()
                .filter(|&f| f == e || (!br.contains(&f) && parts_without(&g, &[e, f]) > base))
                .collect();
            want.sort_unstable();
            prop_assert_eq!(s, want);
        }
    }

    #[test]
    fn bridge_classes_follow_negative_sides(g in signed_graph(1..=8, 12)) {
        let cat = classify_bridges(&g).unwrap();
        prop_assert_eq!(&cat.bridges, &bridges(&g));
        for &b in &cat.bridges {
            let rest: Vec<EdgeId> = g.edge_ids().filter(|&f| f != b).collect();
            let (label, _) = g.vertex_components_of(&rest);
            let side = |x| label[x];
            let (lu, lv) = (side(g.edge(b).u), side(g.edge(b).v));
            let count = |l| g.negative_edges().iter().filter(|&&f| f != b && side(g.edge(f).u) == l).count();
            let (nu, nv) = (count(lu), count(lv));
            prop_assert_eq!(cat.s_bridges.contains(&b), nu > 0 && nv > 0);
            prop_assert_eq!(cat.g_class_bridges.contains(&b), nu % 2 == 1 || nv % 2 == 1);
        }
    }
}
