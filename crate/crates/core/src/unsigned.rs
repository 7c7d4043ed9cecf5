//! Circuit covers of bridgeless all-positive graphs within
//! min(5/3·|E|, |E|+|V|−1), and an exact minimum circuit cover.

use std::collections::VecDeque;

use num_rational::Rational64;

use crate::circuit::CoverFamily;
use crate::enumerate::{all_circuits, edges_to_mask, mask_to_edges};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, SignedGraph};
use crate::limits::Limits;
use crate::multicover::min_multicover;
use crate::structure::bridges;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Heuristic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnsignedCoverReport {
    pub cover: CoverFamily,
    pub length: usize,
    /// 5/3·|E|
    pub bound_five_thirds: Rational64,
    /// |E| + |V| − 1, with |V| counting non-isolated vertices
    pub bound_edges_vertices: Rational64,
    pub backend: Backend,
}

impl UnsignedCoverReport {
    pub fn bound(&self) -> Rational64 {
        self.bound_five_thirds.min(self.bound_edges_vertices)
    }
}

fn check_input(gu: &SignedGraph) -> Result<()> {
    if let Some(e) = gu.edge_ids().find(|&e| gu.is_negative(e)) {
        return Err(Error::pre(format!("e{e} is negative in an unsigned graph")));
    }
    if let Some(&b) = bridges(gu).first() {
        return Err(Error::Bridge(b));
    }
    Ok(())
}

fn bounds(gu: &SignedGraph) -> (Rational64, Rational64) {
    let e = gu.edge_count() as i64;
    let all: Vec<EdgeId> = gu.edge_ids().collect();
    let v = gu.vertices_of(&all).len() as i64;
    (Rational64::new(5 * e, 3), Rational64::from_integer((e + v - 1).max(0)))
}

/// Shortest circuit through `e`: the loop itself, or a BFS path between its
/// ends avoiding `e`.
fn shortest_circuit_through(gu: &SignedGraph, adj: &[Vec<(EdgeId, usize)>], e: EdgeId) -> Option<Vec<EdgeId>> {
    let ed = gu.edge(e);
    if ed.is_loop() {
        return Some(vec![e]);
    }
    let mut prev = vec![None; gu.vertex_count()];
    let mut seen = vec![false; gu.vertex_count()];
    seen[ed.u] = true;
    let mut q = VecDeque::from([ed.u]);
    while let Some(x) = q.pop_front() {
        for &(f, y) in &adj[x] {
            if f == e || seen[y] {
                continue;
            }
            seen[y] = true;
            prev[y] = Some((f, x));
            q.push_back(y);
        }
    }
    if !seen[ed.v] {
        return None;
    }
    let mut out = vec![e];
    let mut cur = ed.v;
    while let Some((f, p)) = prev[cur] {
        out.push(f);
        cur = p;
    }
    out.sort_unstable();
    Some(out)
}

/// Drops members whose every edge is covered elsewhere, longest first.
pub(crate) fn prune_sets(sets: &mut Vec<Vec<EdgeId>>, edge_count: usize) {
    let mut m = vec![0usize; edge_count];
    for s in sets.iter() {
        for &e in s {
            m[e] += 1;
        }
    }
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse((sets[i].len(), i)));
    let mut keep = vec![true; sets.len()];
    for i in order {
        if sets[i].iter().all(|&e| m[e] >= 2) {
            keep[i] = false;
            for &e in &sets[i] {
                m[e] -= 1;
            }
        }
    }
    let mut k = keep.into_iter();
    sets.retain(|_| k.next().expect("same length"));
}

fn greedy(gu: &SignedGraph) -> Result<Vec<Vec<EdgeId>>> {
    let adj = gu.adjacency();
    let mut covered = vec![false; gu.edge_count()];
    let mut sets = Vec::new();
    for e in gu.edge_ids() {
        if covered[e] {
            continue;
        }
        let c = shortest_circuit_through(gu, &adj, e).ok_or(Error::Bridge(e))?;
        for &f in &c {
            covered[f] = true;
        }
        sets.push(c);
    }
    prune_sets(&mut sets, gu.edge_count());
    Ok(sets)
}

/// Circuit cover of a bridgeless all-positive graph with length at most
/// min(5/3·|E|, |E|+|V|−1). Falls back to the exact search when the greedy
/// cover is too long.
pub fn circuit_cover_bridgeless(gu: &SignedGraph, limits: &Limits) -> Result<UnsignedCoverReport> {
    check_input(gu)?;
    let (bound_five_thirds, bound_edges_vertices) = bounds(gu);
    let bound = bound_five_thirds.min(bound_edges_vertices);
    let sets = greedy(gu)?;
    let mut cover = CoverFamily::from_edge_sets(gu, &sets)?;
    let mut backend = Backend::Heuristic;
    if Rational64::from_integer(cover.length() as i64) > bound {
        cover = exact_scc_unsigned(gu, limits)?;
        backend = Backend::Exact;
    }
    let length = cover.length();
    let m = cover.multiplicities(gu.edge_count());
    if let Some(e) = m.iter().position(|&x| x == 0) {
        return Err(Error::defect(format!("unsigned cover misses e{e}")));
    }
    if cover.members.iter().any(|sc| sc.is_barbell()) {
        return Err(Error::defect("unsigned cover holds a barbell"));
    }
    if Rational64::from_integer(length as i64) > bound {
        return Err(Error::BoundViolation(format!("unsigned cover length {length} exceeds {bound}")));
    }
    Ok(UnsignedCoverReport {
        cover,
        length,
        bound_five_thirds,
        bound_edges_vertices,
        backend,
    })
}

/// Minimum-length circuit cover, solved per component.
pub fn exact_scc_unsigned(gu: &SignedGraph, limits: &Limits) -> Result<CoverFamily> {
    if gu.edge_count() > limits.unsigned_oracle_edges {
        return Err(Error::SizeLimit {
            what: "edge count for the exact unsigned cover",
            actual: gu.edge_count(),
            limit: limits.unsigned_oracle_edges,
        });
    }
    if let Some(e) = gu.edge_ids().find(|&e| gu.is_negative(e)) {
        return Err(Error::pre(format!("e{e} is negative in an unsigned graph")));
    }
    let all: Vec<EdgeId> = gu.edge_ids().collect();
    let mut sets = Vec::new();
    for comp in gu.edge_components(&all) {
        let sub = gu.subgraph(&comp);
        let cands: Vec<u64> = all_circuits(&sub.graph, limits.max_circuits)?
            .iter()
            .map(|c| c.edges)
            .collect();
        let target = edges_to_mask(&(0..comp.len()).collect::<Vec<_>>());
        let Some(pick) = min_multicover(&cands, target, limits.max_search_nodes)? else {
            let covered = cands.iter().fold(0, |m, c| m | c);
            let e = (!covered & target).trailing_zeros() as usize;
            return Err(Error::Bridge(sub.edge_ids[e]));
        };
        sets.extend(pick.into_iter().map(|m| sub.lift_edges(&mask_to_edges(m))));
    }
    CoverFamily::from_edge_sets(gu, &sets)
}
