mod common;

use proptest::prelude::*;
use sgcover::enumerate::all_circuits;
use sgcover::switching::{negativeness_exact, normalize, switch, verify_minimal_signature};
use sgcover::Limits;

use common::{brute_negativeness, signed_graph};

proptest! {
    #![proptest_config(common::config(200))]

    #[test]
    fn switching_twice_is_identity(g in signed_graph(1..=7, 12), mask in any::<u8>()) {
        let s: Vec<usize> = (0..g.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assert_eq!(switch(&switch(&g, &s).unwrap(), &s).unwrap(), g);
    }

    #[test]
    fn negativeness_matches_brute_force(g in signed_graph(1..=7, 12), mask in any::<u8>()) {
        let l = Limits::default();
        let eps = negativeness_exact(&g, &l).unwrap();
        prop_assert_eq!(eps.epsilon_n, brute_negativeness(&g));
        let s: Vec<usize> = (0..g.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assert_eq!(negativeness_exact(&switch(&g, &s).unwrap(), &l).unwrap().epsilon_n, eps.epsilon_n);
        let after = switch(&g, &eps.optimal_switch).unwrap();
        prop_assert_eq!(after.negative_edges(), eps.resulting_negative_edges.clone());
        prop_assert_eq!(after.negative_edges().len(), eps.epsilon_n);
    }

    #[test]
    fn normalized_signature_is_minimal(g in signed_graph(1..=7, 12)) {
        let l = Limits::default();
        let (h, cert) = normalize(&g, &l).unwrap();
        prop_assert_eq!(h.negative_edges().len(), cert.epsilon_n);
        prop_assert!(verify_minimal_signature(&h, &l).unwrap());
        prop_assert_eq!(verify_minimal_signature(&g, &l).unwrap(), g.negative_edges().len() == cert.epsilon_n);
    }

    #[test]
    fn switching_keeps_circuit_balance(g in signed_graph(1..=6, 9), mask in any::<u8>()) {
        let s: Vec<usize> = (0..g.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect();
        let h = switch(&g, &s).unwrap();
        let key = |c: &sgcover::enumerate::CircuitMask| (c.edges, c.balanced());
        let a: Vec<_> = all_circuits(&g, 100_000).unwrap().iter().map(key).collect();
        let b: Vec<_> = all_circuits(&h, 100_000).unwrap().iter().map(key).collect();
        prop_assert_eq!(a, b);
    }
}
