//! Small named instances used throughout the tests and the acceptance suite.

use crate::graph::{Sign, SignedGraph};

use Sign::{Negative as N, Positive as P};

fn build(n: usize, edges: &[(usize, usize, Sign)]) -> SignedGraph {
    SignedGraph::from_edges(n, edges.iter().copied()).expect("fixture endpoints in range")
}

/// Triangle 0-1-2 whose first `negatives` edges are negative.
pub fn triangle(negatives: usize) -> SignedGraph {
    let s = |i: usize| if i < negatives { N } else { P };
    build(3, &[(0, 1, s(0)), (1, 2, s(1)), (2, 0, s(2))])
}

/// Cycle on `n` vertices (a digon for `n = 2`); edge `i` joins `i` and `i+1 mod n`.
pub fn cycle(n: usize, negative: &[usize]) -> SignedGraph {
    let edges: Vec<_> = (0..n)
        .map(|i| (i, (i + 1) % n, if negative.contains(&i) { N } else { P }))
        .collect();
    build(n, &edges)
}

pub fn two_negative_loops() -> SignedGraph {
    build(1, &[(0, 0, N), (0, 0, N)])
}

fn k4(sign: Sign) -> SignedGraph {
    build(
        4,
        &[(0, 1, sign), (0, 2, sign), (0, 3, sign), (1, 2, sign), (1, 3, sign), (2, 3, sign)],
    )
}

/// K4 with edges 01, 02, 03, 12, 13, 23 all negative.
pub fn k4_all_negative() -> SignedGraph {
    k4(N)
}

pub fn k4_positive() -> SignedGraph {
    k4(P)
}

/// K4 whose negative edges are the perfect matching {01, 23}.
pub fn k4_matching_negative() -> SignedGraph {
    build(
        4,
        &[(0, 1, N), (0, 2, P), (0, 3, P), (1, 2, P), (1, 3, P), (2, 3, N)],
    )
}

/// Two negative loops joined by a positive path with `len` edges.
/// Edges: 0 = loop at 0, 1 = loop at `len`, then the path in order.
pub fn l2p(len: usize) -> SignedGraph {
    let mut edges = vec![(0, 0, N), (len, len, N)];
    edges.extend((0..len).map(|i| (i, i + 1, P)));
    build(len + 1, &edges)
}

/// Two triangles sharing vertex 0, one negative edge in each.
pub fn bowtie() -> SignedGraph {
    build(
        5,
        &[(0, 1, N), (1, 2, P), (2, 0, P), (0, 3, N), (3, 4, P), (4, 0, P)],
    )
}

/// Two vertices, three parallel edges, the first negative.
pub fn theta_minus() -> SignedGraph {
    build(2, &[(0, 1, N), (0, 1, P), (0, 1, P)])
}

pub fn theta() -> SignedGraph {
    build(2, &[(0, 1, P), (0, 1, P), (0, 1, P)])
}

/// Triangles 0-1-2 and 3-4-5 joined by the path 2-6-3.
/// Negative edges: 0 (01) and 3 (34). Path edges: 6, 7.
pub fn two_tri_path() -> SignedGraph {
    build(
        7,
        &[
            (0, 1, N),
            (1, 2, P),
            (2, 0, P),
            (3, 4, N),
            (4, 5, P),
            (5, 3, P),
            (2, 6, P),
            (6, 3, P),
        ],
    )
}

/// Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram on 5..9.
pub fn petersen() -> SignedGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5, P));
    }
    for i in 0..5 {
        edges.push((i, i + 5, P));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5, P));
    }
    build(10, &edges)
}

/// Two positive triangles joined by a single negative bridge (edge 6).
pub fn triangles_negative_bridge() -> SignedGraph {
    build(
        6,
        &[(0, 1, P), (1, 2, P), (2, 0, P), (3, 4, P), (4, 5, P), (5, 3, P), (2, 3, N)],
    )
}
