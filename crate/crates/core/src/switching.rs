//! Switching, exact negativeness and the cut criterion for minimal signatures.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, SignedGraph, VertexId};
use crate::limits::Limits;

/// Optimal switching found by exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativenessCertificate {
    pub epsilon_n: usize,
    /// Sorted vertex set to switch at.
    pub optimal_switch: Vec<VertexId>,
    /// Negative edges after switching at `optimal_switch`.
    pub resulting_negative_edges: Vec<EdgeId>,
}

/// Flips every non-loop edge with exactly one endpoint in `s`.
pub fn switch(g: &SignedGraph, s: &[VertexId]) -> Result<SignedGraph> {
    let n = g.vertex_count();
    let mut inside = vec![false; n];
    for &v in s {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, count: n });
        }
        inside[v] = true;
    }
    let mut out = g.clone();
    for e in g.edge_ids() {
        let ed = g.edge(e);
        if inside[ed.u] != inside[ed.v] {
            out.set_sign(e, ed.sign.flipped());
        }
    }
    Ok(out)
}

/// Sorted-list lexicographic order on vertex bitmasks.
fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    if d == 0 {
        return false;
    }
    let p = d.trailing_zeros();
    let above = |m: u64| p < 63 && (m >> (p + 1)) != 0;
    if a >> p & 1 == 1 {
        above(b)
    } else {
        !above(a)
    }
}

struct Component {
    vertices: Vec<VertexId>,
    /// per local vertex: incident non-loop edges
    incident: Vec<Vec<EdgeId>>,
    edges: Vec<EdgeId>,
}

fn components(g: &SignedGraph, cap: usize, what: &'static str) -> Result<Vec<Component>> {
    let (comp, count) = g.vertex_components();
    let mut comps: Vec<Component> = (0..count)
        .map(|_| Component {
            vertices: Vec::new(),
            incident: Vec::new(),
            edges: Vec::new(),
        })
        .collect();
    let mut local = vec![0; g.vertex_count()];
    for v in 0..g.vertex_count() {
        let c = &mut comps[comp[v]];
        local[v] = c.vertices.len();
        c.vertices.push(v);
        c.incident.push(Vec::new());
    }
    for e in g.edge_ids() {
        let ed = g.edge(e);
        let c = &mut comps[comp[ed.u]];
        c.edges.push(e);
        if !ed.is_loop() {
            c.incident[local[ed.u]].push(e);
            c.incident[local[ed.v]].push(e);
        }
    }
    if let Some(big) = comps.iter().find(|c| c.vertices.len() > cap) {
        return Err(Error::SizeLimit {
            what,
            actual: big.vertices.len(),
            limit: cap,
        });
    }
    Ok(comps)
}

/// Minimum number of negative edges over all switchings, by Gray-code search
/// over the switching classes of each component.
pub fn negativeness_exact(g: &SignedGraph, limits: &Limits) -> Result<NegativenessCertificate> {
    let comps = components(g, limits.negativeness_vertices, "component size for exact negativeness")?;
    let mut switch_set = Vec::new();
    for c in &comps {
        let k = c.vertices.len().saturating_sub(1);
        let mut neg: Vec<bool> = vec![false; g.edge_count()];
        let mut count = 0usize;
        for &e in &c.edges {
            neg[e] = g.is_negative(e);
            count += neg[e] as usize;
        }
        let (mut best, mut best_mask) = (count, 0u64);
        let mut mask = 0u64;
        for step in 1u64..(1u64 << k) {
            let bit = step.trailing_zeros() as usize;
            mask ^= 1 << bit;
            // local vertex 0 stays fixed outside the switching set
            for &e in &c.incident[bit + 1] {
                if neg[e] {
                    count -= 1;
                } else {
                    count += 1;
                }
                neg[e] = !neg[e];
            }
            if count < best || (count == best && lex_less(mask, best_mask)) {
                best = count;
                best_mask = mask;
            }
        }
        switch_set.extend((0..k).filter(|&i| best_mask >> i & 1 == 1).map(|i| c.vertices[i + 1]));
    }
    switch_set.sort_unstable();
    let switched = switch(g, &switch_set)?;
    let resulting = switched.negative_edges();
    Ok(NegativenessCertificate {
        epsilon_n: resulting.len(),
        optimal_switch: switch_set,
        resulting_negative_edges: resulting,
    })
}

/// True iff every edge cut has at most half of its edges negative.
pub fn verify_minimal_signature(g: &SignedGraph, limits: &Limits) -> Result<bool> {
    let comps = components(g, limits.cut_vertices, "component size for cut enumeration")?;
    for c in &comps {
        let k = c.vertices.len().saturating_sub(1);
        let mut in_cut = vec![false; g.edge_count()];
        let (mut size, mut neg) = (0usize, 0usize);
        for step in 1u64..(1u64 << k) {
            let bit = step.trailing_zeros() as usize;
            for &e in &c.incident[bit + 1] {
                let n = g.is_negative(e) as usize;
                if in_cut[e] {
                    size -= 1;
                    neg -= n;
                } else {
                    size += 1;
                    neg += n;
                }
                in_cut[e] = !in_cut[e];
            }
            if 2 * neg > size {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Switching-equivalent graph whose negative edge count equals its negativeness.
pub fn normalize(g: &SignedGraph, limits: &Limits) -> Result<(SignedGraph, NegativenessCertificate)> {
    let cert = negativeness_exact(g, limits)?;
    Ok((switch(g, &cert.optimal_switch)?, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// Plain enumeration of all switching sets, independent of the Gray-code walk.
    fn brute_negativeness(g: &SignedGraph) -> usize {
        (0u64..1 << g.vertex_count())
            .map(|m| {
                let s: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| m >> v & 1 == 1).collect();
                switch(g, &s).unwrap().negative_edges().len()
            })
            .min()
            .unwrap()
    }

    #[test]
    fn switch_examples() {
        let k4 = fixtures::k4_all_negative();
        assert_eq!(switch(&k4, &[]).unwrap(), k4);
        assert_eq!(switch(&k4, &[0]).unwrap().negative_edges().len(), 3);
        let lp = fixtures::two_negative_loops();
        assert_eq!(switch(&lp, &[0]).unwrap().negative_edges(), vec![0, 1]);
        assert!(matches!(switch(&k4, &[4]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn negativeness_examples() {
        let l = Limits::default();
        let c = negativeness_exact(&fixtures::k4_positive(), &l).unwrap();
        assert_eq!((c.epsilon_n, c.optimal_switch.clone()), (0, vec![]));
        let tri = fixtures::triangle(1);
        assert_eq!(negativeness_exact(&tri, &l).unwrap().epsilon_n, 1);
        assert_eq!(brute_negativeness(&tri), 1);
        let k4 = fixtures::k4_all_negative();
        let c = negativeness_exact(&k4, &l).unwrap();
        assert_eq!(c.epsilon_n, 2);
        assert_eq!(brute_negativeness(&k4), 2);
        // the two remaining negatives form a perfect matching
        let verts = k4.vertices_of(&c.resulting_negative_edges);
        assert_eq!(verts.len(), 4);
    }

    #[test]
    fn refuses_large_components() {
        let big = fixtures::cycle(21, &[0]);
        assert!(matches!(
            negativeness_exact(&big, &Limits::default()),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn cut_criterion_examples() {
        let l = Limits::default();
        assert!(!verify_minimal_signature(&fixtures::triangles_negative_bridge(), &l).unwrap());
        assert!(verify_minimal_signature(&fixtures::k4_positive(), &l).unwrap());
        assert!(verify_minimal_signature(&fixtures::l2p(1), &l).unwrap());
        assert!(!verify_minimal_signature(&fixtures::k4_all_negative(), &l).unwrap());
    }

    #[test]
    fn normalize_examples() {
        let l = Limits::default();
        let (g, c) = normalize(&fixtures::k4_all_negative(), &l).unwrap();
        assert_eq!(g.negative_edges().len(), 2);
        assert_eq!(c.resulting_negative_edges, g.negative_edges());
        let (g, _) = normalize(&fixtures::l2p(2), &l).unwrap();
        assert_eq!(g.negative_edges().len(), 2);
        let (g, _) = normalize(&fixtures::cycle(4, &[0, 2]), &l).unwrap();
        assert!(g.negative_edges().is_empty());
    }

    #[test]
    fn lexicographic_tie_break() {
        // {0} < {0,1} < {1}
        assert!(lex_less(0b01, 0b11));
        assert!(lex_less(0b11, 0b10));
        assert!(lex_less(0, 0b1));
        assert!(!lex_less(0b10, 0b11));
    }
}
