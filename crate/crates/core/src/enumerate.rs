//! Exhaustive circuit and signed-circuit enumeration over bitmasks.
//!
//! Only meant for desk-scale graphs (at most 64 edges and 64 vertices).

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, SignedGraph, VertexId};

/// A circuit given by its edge and vertex bitmasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CircuitMask {
    pub edges: u64,
    pub vertices: u64,
    pub negative: u32,
}

impl CircuitMask {
    pub fn balanced(&self) -> bool {
        self.negative.is_multiple_of(2)
    }

    pub fn len(&self) -> u32 {
        self.edges.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.edges == 0
    }
}

pub fn mask_to_edges(mask: u64) -> Vec<EdgeId> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn edges_to_mask(edges: &[EdgeId]) -> u64 {
    edges.iter().fold(0u64, |m, &e| m | 1 << e)
}

fn check_size(g: &SignedGraph) -> Result<()> {
    if g.edge_count() > 64 {
        return Err(Error::SizeLimit {
            what: "edge count for bitmask enumeration",
            actual: g.edge_count(),
            limit: 64,
        });
    }
    if g.vertex_count() > 64 {
        return Err(Error::SizeLimit {
            what: "vertex count for bitmask enumeration",
            actual: g.vertex_count(),
            limit: 64,
        });
    }
    Ok(())
}

/// Every circuit of `g` (loops included), each exactly once.
/// Fails with `Budget` once more than `max_count` circuits are found.
pub fn all_circuits(g: &SignedGraph, max_count: usize) -> Result<Vec<CircuitMask>> {
    check_size(g)?;
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut out = Vec::new();
    for e in g.edge_ids() {
        let ed = g.edge(e);
        if ed.is_loop() {
            out.push(CircuitMask {
                edges: 1 << e,
                vertices: 1 << ed.u,
                negative: ed.sign.is_negative() as u32,
            });
        }
    }
    struct Dfs<'a> {
        g: &'a SignedGraph,
        adj: &'a [Vec<(EdgeId, VertexId)>],
        start: VertexId,
        first: EdgeId,
        out: &'a mut Vec<CircuitMask>,
        max: usize,
    }
    impl Dfs<'_> {
        fn go(&mut self, cur: VertexId, vmask: u64, emask: u64, neg: u32) -> Result<()> {
            for &(e, w) in &self.adj[cur] {
                if emask >> e & 1 == 1 || w == cur {
                    continue;
                }
                let neg2 = neg + self.g.is_negative(e) as u32;
                if w == self.start {
                    if e > self.first {
                        self.out.push(CircuitMask {
                            edges: emask | 1 << e,
                            vertices: vmask,
                            negative: neg2,
                        });
                        if self.out.len() > self.max {
                            return Err(Error::Budget(format!(
                                "more than {} circuits",
                                self.max
                            )));
                        }
                    }
                    continue;
                }
                if w < self.start || vmask >> w & 1 == 1 {
                    continue;
                }
                self.go(w, vmask | 1 << w, emask | 1 << e, neg2)?;
            }
            Ok(())
        }
    }
    for s in 0..n {
        for &(e, w) in &adj[s] {
            if w <= s {
                continue;
            }
            let mut d = Dfs {
                g,
                adj: &adj,
                start: s,
                first: e,
                out: &mut out,
                max: max_count,
            };
            d.go(w, 1 << s | 1 << w, 1 << e, g.is_negative(e) as u32)?;
        }
    }
    Ok(out)
}

/// Edge masks of every signed circuit of `g`: balanced circuits, short
/// barbells, and long barbells with every admissible connecting path.
pub fn all_signed_circuits(g: &SignedGraph, max_count: usize) -> Result<Vec<u64>> {
    let circuits = all_circuits(g, max_count)?;
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::new();
    let mut push = |m: u64, out: &mut Vec<u64>| -> Result<()> {
        if seen.insert(m) {
            out.push(m);
            if out.len() > max_count {
                return Err(Error::Budget(format!("more than {max_count} signed circuits")));
            }
        }
        Ok(())
    };
    for c in circuits.iter().filter(|c| c.balanced()) {
        push(c.edges, &mut out)?;
    }
    let unbalanced: Vec<&CircuitMask> = circuits.iter().filter(|c| !c.balanced()).collect();
    let adj = g.adjacency();
    for (i, a) in unbalanced.iter().enumerate() {
        for b in &unbalanced[i + 1..] {
            let shared = (a.vertices & b.vertices).count_ones();
            if shared == 1 {
                push(a.edges | b.edges, &mut out)?;
            } else if shared == 0 {
                for path in connecting_paths(g, &adj, a, b) {
                    push(a.edges | b.edges | path, &mut out)?;
                }
            }
        }
    }
    Ok(out)
}

/// Every simple path from `a` to `b` whose interior avoids both circuits.
fn connecting_paths(
    g: &SignedGraph,
    adj: &[Vec<(EdgeId, VertexId)>],
    a: &CircuitMask,
    b: &CircuitMask,
) -> Vec<u64> {
    let mut out = Vec::new();
    fn go(
        adj: &[Vec<(EdgeId, VertexId)>],
        cur: VertexId,
        vmask: u64,
        emask: u64,
        a: &CircuitMask,
        b: &CircuitMask,
        out: &mut Vec<u64>,
    ) {
        for &(e, w) in &adj[cur] {
            if w == cur || emask >> e & 1 == 1 || a.vertices >> w & 1 == 1 {
                continue;
            }
            if b.vertices >> w & 1 == 1 {
                out.push(emask | 1 << e);
                continue;
            }
            if vmask >> w & 1 == 1 {
                continue;
            }
            go(adj, w, vmask | 1 << w, emask | 1 << e, a, b, out);
        }
    }
    for s in 0..g.vertex_count() {
        if a.vertices >> s & 1 == 1 {
            go(adj, s, a.vertices, 0, a, b, &mut out);
        }
    }
    out
}
