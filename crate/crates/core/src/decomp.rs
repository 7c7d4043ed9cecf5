//! Graphs whose positive edges form a spanning tree: generalized barbells
//! holding every partner set, circuits through a partner set,
//! {0,1,2,3}-covers, and the split of a minimally signed graph into an
//! unsigned bridgeless part and a covered signed part.

use crate::barbell::{gbarbell_scdc, one_two_cover, splice_loops, GBarbellCert, OneTwoCover};
use crate::circuit::{CoverFamily, SignedCircuit};
use crate::error::{Error, Result};
use crate::flow::FlowNet;
use crate::graph::{normalized, sym_diff, Dsu, EdgeId, Sign, SignedGraph, VertexId};
use crate::structure::{
    bridge_sides, bridges, bridges_of, classify_bridges, contract_within, partner_set, tree_certificate, Forest,
    TreeCertificate,
};

/// Unsigned bridgeless part plus a signed part with a bounded-multiplicity cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDecomposition {
    /// All positive and bridgeless.
    pub g1_edges: Vec<EdgeId>,
    pub g2_edges: Vec<EdgeId>,
    /// Covers every edge of `g2_edges` between 1 and `k` times.
    pub f2: CoverFamily,
    pub k: usize,
}

fn tree_graph_certificate(h: &SignedGraph) -> Result<TreeCertificate> {
    let neg = h.negative_edges();
    if neg.len() < 2 {
        return Err(Error::pre("need at least two negative edges"));
    }
    let positive: Vec<EdgeId> = h.edge_ids().filter(|&e| !h.is_negative(e)).collect();
    let (_, parts) = h.vertex_components_of(&positive);
    if parts != 1 || positive.len() + 1 != h.vertex_count() {
        return Err(Error::pre("positive edges do not form a spanning tree"));
    }
    tree_certificate(h)
}

/// Generalized barbell containing every partner set and every bridge with an
/// odd negative count on some side. Needs an even number of negative edges.
pub fn tree_graph_barbell(h: &SignedGraph) -> Result<GBarbellCert> {
    let tc = tree_graph_certificate(h)?;
    if tc.fundamental.len() % 2 == 1 {
        return Err(Error::pre("odd number of negative edges"));
    }
    let mut joined = Vec::new();
    for c in tc.fundamental.values() {
        joined = sym_diff(&joined, &c.edge_set());
    }
    let pieces = h.edge_components(&joined);
    let all: Vec<EdgeId> = h.edge_ids().collect();
    let q = contract_within(h, &all, &pieces)?;
    let odd: Vec<usize> = (0..pieces.len()).filter(|&i| h.neg_count(&pieces[i]) % 2 == 1).collect();
    // paths in one spanning tree of the quotient keep their union acyclic
    let q_all: Vec<EdgeId> = q.quotient.edge_ids().collect();
    let forest = Forest::bfs(&q.quotient, &q_all);
    let mut paths = Vec::new();
    for pair in odd.chunks(2) {
        let p = forest
            .path(pair[0], pair[1])
            .ok_or_else(|| Error::pre("graph is disconnected"))?;
        paths = sym_diff(&paths, &p);
    }
    let mut host = joined;
    host.extend(paths.iter().map(|&qe| q.edge_map[qe]));
    let cert = GBarbellCert::new(h, &host, pieces)?;

    let cat = classify_bridges(h)?;
    if let Some(e) = cat
        .g_class_bridges
        .iter()
        .chain(&cat.partner_union())
        .find(|e| cert.host.binary_search(e).is_err())
    {
        return Err(Error::defect(format!("barbell host misses required edge e{e}")));
    }
    Ok(cert)
}

/// Tree path from circuit `a` to circuit `b` meeting each only at its end.
fn joining_path(h: &SignedGraph, forest: &Forest, a: &[VertexId], b: &[VertexId]) -> Vec<EdgeId> {
    let edges = forest.path(a[0], b[0]).expect("spanning tree");
    let mut seq = vec![a[0]];
    for &e in &edges {
        let next = h.edge(e).other(*seq.last().expect("nonempty"));
        seq.push(next);
    }
    let from = (0..seq.len()).rev().find(|&i| a.binary_search(&seq[i]).is_ok()).expect("starts on a");
    let to = (from..seq.len()).find(|&i| b.binary_search(&seq[i]).is_ok()).expect("ends on b");
    edges[from..to].to_vec()
}

/// A signed circuit containing the partner set of negative edge `e`, in a
/// bridgeless graph whose positive edges form a spanning tree.
pub fn circuit_through_partners(h: &SignedGraph, e: EdgeId) -> Result<SignedCircuit> {
    let tc = tree_graph_certificate(h)?;
    if !h.try_edge(e)?.sign.is_negative() {
        return Err(Error::pre(format!("e{e} is not negative")));
    }
    if !bridges(h).is_empty() {
        return Err(Error::pre("graph has a bridge"));
    }
    let f = *tc.fundamental.keys().find(|&&f| f != e).expect("two negatives");
    let (ce, cf) = (&tc.fundamental[&e], &tc.fundamental[&f]);
    let (ve, vf) = (h.vertices_of(ce.edges()), h.vertices_of(cf.edges()));
    let shared = ve.iter().filter(|v| vf.binary_search(v).is_ok()).count();
    let edges = if shared <= 1 {
        let mut edges = [ce.edge_set(), cf.edge_set()].concat();
        if shared == 0 {
            edges.extend(joining_path(h, &tc.forest, &ve, &vf));
        }
        edges
    } else {
        sym_diff(&ce.edge_set(), &cf.edge_set())
    };
    let sc = SignedCircuit::classify(h, &edges).map_err(|d| Error::defect(format!("circuit through e{e}: {d}")))?;
    let got = sc.edges();
    if partner_set(h, e)?.iter().any(|p| got.binary_search(p).is_err()) {
        return Err(Error::defect(format!("circuit through e{e} misses part of its partner set")));
    }
    Ok(sc)
}

/// Family with multiplicities in {0,1,2,3} covering every partner set and
/// every bridge with negative edges on both sides, negative loops exactly
/// twice.
pub fn cover_0123(h: &SignedGraph) -> Result<CoverFamily> {
    tree_graph_certificate(h)?;
    let fam = CoverFamily::from_edge_sets(h, &cover_rec(h)?)?;
    check_0123(h, &fam)?;
    Ok(fam)
}

fn cover_rec(h: &SignedGraph) -> Result<Vec<Vec<EdgeId>>> {
    if let Some(&b) = bridges(h).first() {
        let (a, c) = bridge_sides(h, b)?;
        let (na, nc) = (h.neg_count(&a), h.neg_count(&c));
        if na == 0 || nc == 0 {
            let side = if na == 0 { c } else { a };
            let sub = h.subgraph(&side);
            return Ok(sub.lift_family(&cover_rec(&sub.graph)?));
        }
        // each side gets a negative loop standing in for the other
        let ed = *h.edge(b);
        let mut w = h.clone();
        let la = w.add_edge(ed.u, ed.u, Sign::Negative)?;
        let lc = w.add_edge(ed.v, ed.v, Sign::Negative)?;
        let mut fam = Vec::new();
        for (mut side, l) in [(a, la), (c, lc)] {
            side.push(l);
            let sub = w.subgraph(&side);
            fam.extend(sub.lift_family(&cover_rec(&sub.graph)?));
        }
        splice_loops(&mut fam, la, lc, Some(b))?;
        return Ok(fam);
    }
    let neg = h.negative_edges();
    if neg.len().is_multiple_of(2) {
        let cert = tree_graph_barbell(h)?;
        return Ok(gbarbell_scdc(h, &cert)?.edge_sets());
    }
    if let Some(&e) = neg.iter().find(|&&e| h.edge(e).is_loop()) {
        return loop_case(h, e);
    }
    for &e in &neg {
        let s = partner_set(h, e)?;
        let rest: Vec<EdgeId> = h.edge_ids().filter(|f| s.binary_search(f).is_err()).collect();
        let others: Vec<EdgeId> = neg.iter().copied().filter(|&f| f != e).collect();
        let comps = h.edge_components(&rest);
        let Some(m) = comps.iter().find(|c| others.iter().all(|f| c.binary_search(f).is_ok())) else {
            continue;
        };
        let sub = h.subgraph(m);
        let cert = tree_graph_barbell(&sub.graph)?;
        let mut fam = sub.lift_family(&gbarbell_scdc(&sub.graph, &cert)?.edge_sets());
        fam.push(circuit_through_partners(h, e)?.edges());
        return Ok(fam);
    }
    Err(Error::defect("no negative edge leaves the others in one piece"))
}

/// Odd count with a negative loop `e`: cover the rest, then hang `e` on two
/// unbalanced circuits so that it is covered twice.
fn loop_case(h: &SignedGraph, e: EdgeId) -> Result<Vec<Vec<EdgeId>>> {
    let rest: Vec<EdgeId> = h.edge_ids().filter(|&f| f != e).collect();
    let sub = h.subgraph(&rest);
    let cert = tree_graph_barbell(&sub.graph)?;
    let double = gbarbell_scdc(&sub.graph, &cert)?;
    if let Some(i) = double.members.iter().position(SignedCircuit::is_barbell) {
        let (c1, c2) = double.members[i].ends().expect("barbell");
        let ends = [sub.lift_edges(c1.edges()), sub.lift_edges(c2.edges())];
        let mut fam: Vec<Vec<EdgeId>> = double
            .members
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, m)| sub.lift_edges(&m.edges()))
            .collect();
        fam.extend(hang_loop(h, e, ends)?);
        return Ok(fam);
    }
    match one_two_cover(&sub.graph, &cert)? {
        OneTwoCover::Decomposition(cs) => {
            let mut fam: Vec<Vec<EdgeId>> = cs.iter().map(|c| sub.lift_edges(c.edges())).collect();
            let c = circuit_through_partners(h, e)?.edges();
            fam.push(c.clone());
            fam.push(c);
            Ok(fam)
        }
        OneTwoCover::CoverWithSpares { cover, c1, c2 } => {
            let mut fam = sub.lift_family(&cover.edge_sets());
            fam.extend(hang_loop(h, e, [sub.lift_edges(c1.edges()), sub.lift_edges(c2.edges())])?);
            Ok(fam)
        }
    }
}

/// Two barbells joining loop `e` to each circuit in `ends` along
/// edge-disjoint paths.
fn hang_loop(h: &SignedGraph, e: EdgeId, ends: [Vec<EdgeId>; 2]) -> Result<Vec<Vec<EdgeId>>> {
    let n = h.vertex_count();
    let u = h.edge(e).u;
    let on: Vec<Vec<VertexId>> = ends.iter().map(|c| h.vertices_of(c)).collect();
    let t = n + 2;
    let mut net = FlowNet::new(n + 3);
    for (i, vs) in on.iter().enumerate() {
        for &v in vs {
            net.arc(v, n + i, 1, None);
        }
        net.arc(n + i, t, 1, None);
    }
    for f in h.edge_ids() {
        let ed = h.edge(f);
        if !ed.is_loop() {
            net.undirected(ed.u, ed.v, Some(f));
        }
    }
    if net.max_flow(u, t, 2) < 2 {
        return Err(Error::defect("no two edge-disjoint paths from the loop to the spare circuits"));
    }
    let mut out = Vec::new();
    for (nodes, tags) in net.paths(u, t) {
        let i = nodes[nodes.len() - 2] - n;
        let stop = nodes
            .iter()
            .position(|v| on[i].binary_search(v).is_ok())
            .expect("walk reaches its circuit");
        let mut m: Vec<EdgeId> = tags[..stop].iter().flatten().copied().collect();
        m.extend(&ends[i]);
        m.push(e);
        out.push(normalized(&m));
    }
    Ok(out)
}

fn check_0123(h: &SignedGraph, fam: &CoverFamily) -> Result<()> {
    let m = fam.multiplicities(h.edge_count());
    if let Some(e) = (0..h.edge_count()).find(|&e| m[e] > 3) {
        return Err(Error::defect(format!("e{e} covered {} times", m[e])));
    }
    let cat = classify_bridges(h)?;
    if let Some(&e) = cat.s_bridges.iter().chain(&cat.partner_union()).find(|&&e| m[e] == 0) {
        return Err(Error::defect(format!("required edge e{e} uncovered")));
    }
    if let Some(e) = h.negative_edges().into_iter().find(|&e| h.edge(e).is_loop() && m[e] != 2) {
        return Err(Error::defect(format!("negative loop e{e} covered {} times", m[e])));
    }
    Ok(())
}

/// Splits an s-bridgeless graph whose negative edges realise its
/// negativeness. Components are handled separately; `k` is the largest
/// multiplicity bound used by any of them.
pub fn pair_decomposition(g: &SignedGraph) -> Result<PairDecomposition> {
    match g.negative_edges()[..] {
        [] => return Err(Error::pre("need at least two negative edges")),
        [e] => return Err(Error::NotSBridgeless(e)),
        _ => {}
    }
    let tc = tree_certificate(g)?;
    let cat = classify_bridges(g)?;
    if let Some(&b) = cat.bridges.iter().find(|b| cat.s_bridges.binary_search(b).is_err()) {
        return Err(Error::NotSBridgeless(b));
    }
    let mut dropped = vec![false; g.edge_count()];
    for &e in cat.bridges.iter().chain(&cat.partner_union()) {
        dropped[e] = true;
    }
    let g1_edges: Vec<EdgeId> = g.edge_ids().filter(|&e| !dropped[e]).collect();

    let mut in_tree = vec![false; g.edge_count()];
    for &e in tc.tree_edges() {
        in_tree[e] = true;
    }
    let all: Vec<EdgeId> = g.edge_ids().collect();
    let mut k = 2;
    let mut sets = Vec::new();
    for comp in g.edge_components(&all) {
        let negs = g.neg_count(&comp);
        if negs == 0 {
            continue;
        }
        if negs == 1 {
            let e = *comp.iter().find(|&&e| g.is_negative(e)).expect("one negative");
            return Err(Error::NotSBridgeless(e));
        }
        let h_edges: Vec<EdgeId> = comp.iter().copied().filter(|&e| in_tree[e] || g.is_negative(e)).collect();
        let sub = g.subgraph(&h_edges);
        let even = negs.is_multiple_of(2)
            && cat
                .bridges
                .iter()
                .filter(|b| comp.binary_search(b).is_ok())
                .all(|b| cat.g_class_bridges.binary_search(b).is_ok());
        let fam = if even {
            gbarbell_scdc(&sub.graph, &tree_graph_barbell(&sub.graph)?)?
        } else {
            k = 3;
            cover_0123(&sub.graph)?
        };
        sets.extend(sub.lift_family(&fam.edge_sets()));
    }
    let f2 = CoverFamily::from_edge_sets(g, &sets)?;
    let g2_edges = normalized(&sets.concat());
    let out = PairDecomposition {
        g1_edges,
        g2_edges,
        f2,
        k,
    };
    check_pair(g, &out)?;
    Ok(out)
}

/// Machine check of the four structural properties of a pair decomposition.
pub fn check_pair(g: &SignedGraph, p: &PairDecomposition) -> Result<()> {
    let mut seen = vec![false; g.edge_count()];
    for &e in p.g1_edges.iter().chain(&p.g2_edges) {
        seen[e] = true;
    }
    if let Some(e) = seen.iter().position(|&s| !s) {
        return Err(Error::defect(format!("e{e} lies in neither part")));
    }
    if let Some(&e) = p.g1_edges.iter().find(|&&e| g.is_negative(e)) {
        return Err(Error::defect(format!("unsigned part holds negative edge e{e}")));
    }
    if let Some(&b) = bridges_of(g, &p.g1_edges).first() {
        return Err(Error::defect(format!("unsigned part has bridge e{b}")));
    }
    let mut dsu = Dsu::new(g.vertex_count());
    if let Some(&e) = p
        .g2_edges
        .iter()
        .filter(|&&e| !g.is_negative(e))
        .find(|&&e| !dsu.union(g.edge(e).u, g.edge(e).v))
    {
        return Err(Error::defect(format!("positive edges of the signed part close a cycle at e{e}")));
    }
    let m = p.f2.multiplicities(g.edge_count());
    let mut want = vec![false; g.edge_count()];
    for &e in &p.g2_edges {
        want[e] = true;
    }
    if let Some(e) = (0..g.edge_count()).find(|&e| if want[e] { !(1..=p.k).contains(&m[e]) } else { m[e] != 0 }) {
        return Err(Error::defect(format!("e{e} covered {} times with k = {}", m[e], p.k)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn graph(n: usize, edges: &[(usize, usize, Sign)]) -> SignedGraph {
        let mut g = SignedGraph::new(n);
        for &(u, v, s) in edges {
            g.add_edge(u, v, s).unwrap();
        }
        g
    }

    fn parallel(count: usize) -> SignedGraph {
        let mut edges = vec![(0, 1, P), (1, 2, P)];
        edges.extend(std::iter::repeat_n((0, 2, N), count));
        graph(3, &edges)
    }

    #[test]
    fn barbell_host_examples() {
        let g = fixtures::two_tri_path();
        let cert = tree_graph_barbell(&g).unwrap();
        assert_eq!(cert.host, g.edge_ids().collect::<Vec<_>>());

        let g = parallel(2);
        let cert = tree_graph_barbell(&g).unwrap();
        assert_eq!(cert.host, vec![2, 3]);

        let g = fixtures::l2p(1);
        let cert = tree_graph_barbell(&g).unwrap();
        assert_eq!(cert.host, vec![0, 1, 2]);
    }

    #[test]
    fn circuit_through_partner_examples() {
        let g = parallel(2);
        let sc = circuit_through_partners(&g, 2).unwrap();
        assert_eq!(sc.kind(), "balanced");
        assert_eq!(sc.edges(), vec![2, 3]);

        let g = graph(1, &[(0, 0, N), (0, 0, N)]);
        let sc = circuit_through_partners(&g, 0).unwrap();
        assert_eq!(sc.kind(), "short");
    }

    #[test]
    fn cover_examples() {
        let g = fixtures::two_tri_path();
        let fam = cover_0123(&g).unwrap();
        assert!(fam.multiplicities(g.edge_count()).iter().all(|&m| m == 2));

        let g = parallel(3);
        let fam = cover_0123(&g).unwrap();
        let m = fam.multiplicities(g.edge_count());
        assert!(m.iter().all(|&x| x <= 3));
        assert!(m[2..].iter().all(|&x| x >= 1));

        // two loop-path-loop blocks joined by a positive bridge
        let g = graph(
            4,
            &[(0, 0, N), (0, 1, P), (1, 1, N), (1, 2, P), (2, 2, N), (2, 3, P), (3, 3, N)],
        );
        let fam = cover_0123(&g).unwrap();
        let m = fam.multiplicities(g.edge_count());
        assert!(m[3] >= 1);
        for l in [0, 2, 4, 6] {
            assert_eq!(m[l], 2);
        }
    }

    #[test]
    fn odd_loops_at_one_vertex() {
        let g = graph(1, &[(0, 0, N), (0, 0, N), (0, 0, N)]);
        let fam = cover_0123(&g).unwrap();
        assert_eq!(fam.multiplicities(3), vec![2, 2, 2]);
        assert_eq!(fam.length(), 6);
    }

    #[test]
    fn pair_decomposition_examples() {
        let g = fixtures::l2p(1);
        let p = pair_decomposition(&g).unwrap();
        assert!(p.g1_edges.is_empty());
        assert_eq!(p.k, 2);
        assert_eq!(p.g2_edges, vec![0, 1, 2]);

        let g = fixtures::k4_matching_negative();
        let p = pair_decomposition(&g).unwrap();
        assert_eq!(p.k, 2);
        assert!(!p.g1_edges.is_empty());

        let g = graph(
            4,
            &[(0, 0, N), (0, 1, P), (1, 1, N), (1, 2, P), (2, 2, N), (2, 3, P), (3, 3, N)],
        );
        assert_eq!(pair_decomposition(&g).unwrap().k, 3);
    }

    #[test]
    fn single_negative_component_rejected() {
        let g = fixtures::triangle(1);
        assert!(pair_decomposition(&g).is_err());
    }
}
