#![allow(dead_code)]

use proptest::prelude::*;
use sgcover::{EdgeId, Sign, SignedGraph};

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

/// Random signed multigraph with `n` vertices in `vertices` and up to `max_m` edges.
pub fn signed_graph(vertices: std::ops::RangeInclusive<usize>, max_m: usize) -> impl Strategy<Value = SignedGraph> {
    vertices.prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n, any::<bool>()), 0..=max_m).prop_map(move |es| {
            let mut g = SignedGraph::new(n);
            for (u, v, neg) in es {
                g.add_edge(u, v, if neg { Sign::Negative } else { Sign::Positive }).unwrap();
            }
            g
        })
    })
}

/// Fewest negative edges over all 2^n switchings.
pub fn brute_negativeness(g: &SignedGraph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .map(|s| {
            g.edges()
                .iter()
                .filter(|e| e.sign.is_negative() ^ ((s >> e.u & 1) != (s >> e.v & 1)))
                .count()
        })
        .min()
        .unwrap_or(0)
}

/// Edge multiplicities of a family given as edge lists.
pub fn counts(edge_count: usize, sets: &[Vec<EdgeId>]) -> Vec<usize> {
    let mut m = vec![0; edge_count];
    for s in sets {
        for &e in s {
            m[e] += 1;
        }
    }
    m
}

/// True iff `edges` contain no cycle (loops count as cycles).
pub fn acyclic(g: &SignedGraph, edges: &[EdgeId]) -> bool {
    let mut root: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(r: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while r[x] != x {
            r[x] = r[r[x]];
            x = r[x];
        }
        x
    }
    for &e in edges {
        let (a, b) = (find(&mut root, g.edge(e).u), find(&mut root, g.edge(e).v));
        if a == b {
            return false;
        }
        root[a] = b;
    }
    true
}
