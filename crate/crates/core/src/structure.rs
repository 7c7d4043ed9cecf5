//! Bridges, minimal 2-edge-cuts, bridge classes, spanning trees of the
//! positive part, s-bridgelessness and contraction.

use std::collections::{BTreeMap, VecDeque};

use crate::circuit::{Circuit, SignedCircuit};
use crate::enumerate::{all_circuits, mask_to_edges, CircuitMask};
use crate::error::{Error, Result};
use crate::flow::FlowNet;
use crate::graph::{normalized, Dsu, EdgeId, SignedGraph, VertexId};
use crate::limits::Limits;
use crate::switching::negativeness_exact;

/// Bridges of the whole graph, sorted.
pub fn bridges(g: &SignedGraph) -> Vec<EdgeId> {
    let all: Vec<EdgeId> = g.edge_ids().collect();
    bridges_of(g, &all)
}

/// Bridges of the subgraph formed by `edges` (iterative low-link).
pub fn bridges_of(g: &SignedGraph, edges: &[EdgeId]) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let adj = g.adjacency_of(edges);
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX || adj[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, edge used to enter it, next adjacency index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, via, i) = *top;
            if i < adj[v].len() {
                top.2 += 1;
                let (e, w) = adj[v][i];
                if Some(e) == via || w == v {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push(via.expect("non-root has an entry edge"));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// `e` together with every edge forming a minimal 2-edge-cut with it.
pub fn partner_set(g: &SignedGraph, e: EdgeId) -> Result<Vec<EdgeId>> {
    let ed = *g.try_edge(e)?;
    let base = bridges(g);
    if ed.is_loop() || base.binary_search(&e).is_ok() {
        return Ok(vec![e]);
    }
    let rest: Vec<EdgeId> = g.edge_ids().filter(|&f| f != e).collect();
    let mut out: Vec<EdgeId> = bridges_of(g, &rest)
        .into_iter()
        .filter(|f| base.binary_search(f).is_err())
        .collect();
    out.push(e);
    out.sort_unstable();
    Ok(out)
}

/// Edge sets on the two sides of bridge `b` (the side of `b`'s first
/// endpoint first), restricted to `b`'s component.
pub fn bridge_sides(g: &SignedGraph, b: EdgeId) -> Result<(Vec<EdgeId>, Vec<EdgeId>)> {
    let ed = *g.try_edge(b)?;
    let rest: Vec<EdgeId> = g.edge_ids().filter(|&f| f != b).collect();
    let (comp, _) = g.vertex_components_of(&rest);
    if ed.is_loop() || comp[ed.u] == comp[ed.v] {
        return Err(Error::pre(format!("e{b} is not a bridge")));
    }
    let side = |c: usize| -> Vec<EdgeId> {
        rest.iter().copied().filter(|&f| comp[g.edge(f).u] == c).collect()
    };
    Ok((side(comp[ed.u]), side(comp[ed.v])))
}

/// Bridges, bridge classes and partner sets of negative edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CutCatalog {
    pub bridges: Vec<EdgeId>,
    /// Bridges with negative edges on both sides.
    pub s_bridges: Vec<EdgeId>,
    /// Bridges with an odd raw negative count on some side.
    pub g_class_bridges: Vec<EdgeId>,
    pub partner_sets: BTreeMap<EdgeId, Vec<EdgeId>>,
}

impl CutCatalog {
    /// Union of all partner sets, sorted.
    pub fn partner_union(&self) -> Vec<EdgeId> {
        normalized(&self.partner_sets.values().flatten().copied().collect::<Vec<_>>())
    }
}

pub fn classify_bridges(g: &SignedGraph) -> Result<CutCatalog> {
    let mut cat = CutCatalog {
        bridges: bridges(g),
        ..Default::default()
    };
    for &b in &cat.bridges {
        let (a, c) = bridge_sides(g, b)?;
        let (na, nc) = (g.neg_count(&a), g.neg_count(&c));
        if na > 0 && nc > 0 {
            cat.s_bridges.push(b);
        }
        if na % 2 == 1 || nc % 2 == 1 {
            cat.g_class_bridges.push(b);
        }
    }
    for e in g.negative_edges() {
        cat.partner_sets.insert(e, partner_set(g, e)?);
    }
    Ok(cat)
}

fn side_negativeness(g: &SignedGraph, side: &[EdgeId], limits: &Limits) -> Result<usize> {
    if side.is_empty() {
        return Ok(0);
    }
    Ok(negativeness_exact(&g.subgraph(side).graph, limits)?.epsilon_n)
}

/// Whether both sides of bridge `b` have even negativeness.
pub fn is_g_bridge(g: &SignedGraph, b: EdgeId, limits: &Limits) -> Result<bool> {
    let (a, c) = bridge_sides(g, b)?;
    Ok(side_negativeness(g, &a, limits)? % 2 == 0 && side_negativeness(g, &c, limits)? % 2 == 0)
}

pub fn is_g_bridgeless(g: &SignedGraph, limits: &Limits) -> Result<bool> {
    for b in bridges(g) {
        if is_g_bridge(g, b, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-edge signed-circuit witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SBridgelessReport {
    pub witnesses: Vec<Option<Vec<EdgeId>>>,
}

impl SBridgelessReport {
    pub fn is_s_bridgeless(&self) -> bool {
        self.witnesses.iter().all(Option::is_some)
    }

    pub fn uncovered(&self) -> Vec<EdgeId> {
        (0..self.witnesses.len()).filter(|&e| self.witnesses[e].is_none()).collect()
    }
}

/// Checks that every edge lies in some signed circuit, by enumeration.
pub fn is_s_bridgeless(g: &SignedGraph, limits: &Limits) -> Result<SBridgelessReport> {
    if g.edge_count() > limits.s_bridgeless_edges {
        return Err(Error::SizeLimit {
            what: "edge count for the s-bridgeless check",
            actual: g.edge_count(),
            limit: limits.s_bridgeless_edges,
        });
    }
    let mut w: Vec<Option<Vec<EdgeId>>> = vec![None; g.edge_count()];
    let mut todo = g.edge_count();
    let give = |mask: u64, w: &mut Vec<Option<Vec<EdgeId>>>, todo: &mut usize| {
        let edges = mask_to_edges(mask);
        for &e in &edges {
            if w[e].is_none() {
                w[e] = Some(edges.clone());
                *todo -= 1;
            }
        }
    };
    let circuits = all_circuits(g, limits.max_circuits)?;
    for c in circuits.iter().filter(|c| c.balanced()) {
        give(c.edges, &mut w, &mut todo);
    }
    let unbalanced: Vec<&CircuitMask> = circuits.iter().filter(|c| !c.balanced()).collect();
    let adj = g.adjacency();
    let mut disjoint = Vec::new();
    for (i, a) in unbalanced.iter().enumerate() {
        for b in &unbalanced[i + 1..] {
            match (a.vertices & b.vertices).count_ones() {
                1 => give(a.edges | b.edges, &mut w, &mut todo),
                0 => {
                    if let Some(p) = connecting_path(g, &adj, a, b) {
                        give(a.edges | b.edges | p, &mut w, &mut todo);
                        disjoint.push((*a, *b));
                    }
                }
                _ => {}
            }
        }
    }
    // edges still open can only sit on a connecting path of a long barbell
    for e in 0..g.edge_count() {
        if todo == 0 {
            break;
        }
        if w[e].is_some() || g.edge(e).is_loop() {
            continue;
        }
        for (a, b) in &disjoint {
            if let Some(mask) = path_through(g, a, b, e) {
                give(mask, &mut w, &mut todo);
                break;
            }
        }
    }
    for m in w.iter().flatten() {
        SignedCircuit::classify(g, m).map_err(|d| Error::defect(format!("bad witness: {d}")))?;
    }
    Ok(SBridgelessReport { witnesses: w })
}

/// Shortest path from `a` to `b` whose interior avoids both circuits.
fn connecting_path(
    g: &SignedGraph,
    adj: &[Vec<(EdgeId, VertexId)>],
    a: &CircuitMask,
    b: &CircuitMask,
) -> Option<u64> {
    let n = g.vertex_count();
    let mut prev: Vec<Option<(EdgeId, VertexId)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut q = VecDeque::new();
    for v in 0..n {
        if a.vertices >> v & 1 == 1 {
            seen[v] = true;
            q.push_back(v);
        }
    }
    while let Some(x) = q.pop_front() {
        for &(e, y) in &adj[x] {
            if seen[y] {
                continue;
            }
            seen[y] = true;
            prev[y] = Some((e, x));
            if b.vertices >> y & 1 == 1 {
                let mut mask = 0u64;
                let mut cur = y;
                while let Some((e, p)) = prev[cur] {
                    mask |= 1 << e;
                    cur = p;
                }
                return Some(mask);
            }
            q.push_back(y);
        }
    }
    None
}

/// A long barbell on `a`, `b` whose path uses edge `e`, via two disjoint
/// paths from a subdivision vertex of `e` to the contracted ends.
fn path_through(g: &SignedGraph, a: &CircuitMask, b: &CircuitMask, e: EdgeId) -> Option<u64> {
    let n = g.vertex_count();
    let inside = |m: &CircuitMask, v: VertexId| m.vertices >> v & 1 == 1;
    if a.edges >> e & 1 == 1 || b.edges >> e & 1 == 1 {
        return None;
    }
    // node layout: 2v = in, 2v+1 = out, 2n = end a, 2n+1 = end b, 2n+2 = source, 2n+3 = sink
    let node = |v: VertexId, out: bool| -> usize {
        if inside(a, v) {
            2 * n
        } else if inside(b, v) {
            2 * n + 1
        } else {
            2 * v + out as usize
        }
    };
    let (ea, eb) = (2 * n, 2 * n + 1);
    let (s, t) = (2 * n + 2, 2 * n + 3);
    let mut net = FlowNet::new(2 * n + 4);
    for v in 0..n {
        if !inside(a, v) && !inside(b, v) {
            net.arc(2 * v, 2 * v + 1, 1, None);
        }
    }
    net.arc(ea, t, 1, None);
    net.arc(eb, t, 1, None);
    let ed = g.edge(e);
    if node(ed.u, false) == node(ed.v, false) {
        return None;
    }
    net.arc(s, node(ed.u, false), 1, Some(e));
    net.arc(s, node(ed.v, false), 1, Some(e));
    for f in g.edge_ids() {
        let fd = g.edge(f);
        if f == e || fd.is_loop() {
            continue;
        }
        for (x, y) in [(fd.u, fd.v), (fd.v, fd.u)] {
            let from = node(x, true);
            // circuit ends are sinks only
            if from == ea || from == eb {
                continue;
            }
            net.arc(from, node(y, false), 1, Some(f));
        }
    }
    if net.max_flow(s, t, 2) < 2 {
        return None;
    }
    let mut mask = a.edges | b.edges;
    for (_, tags) in net.paths(s, t) {
        for f in tags.into_iter().flatten() {
            mask |= 1 << f;
        }
    }
    Some(mask)
}

/// Rooted spanning forest with parent pointers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    /// Parent vertex and the tree edge leading to it; `None` at roots and
    /// at vertices outside the forest's edges.
    pub parent: Vec<Option<(VertexId, EdgeId)>>,
    pub depth: Vec<usize>,
    pub root: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Forest {
    /// BFS forest over `edges`, roots taken in increasing vertex order.
    pub fn bfs(g: &SignedGraph, edges: &[EdgeId]) -> Forest {
        let n = g.vertex_count();
        let adj = g.adjacency_of(edges);
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut root: Vec<VertexId> = (0..n).collect();
        let mut seen = vec![false; n];
        let mut tree = Vec::new();
        for r in 0..n {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            let mut q = VecDeque::from([r]);
            while let Some(x) = q.pop_front() {
                for &(e, y) in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some((x, e));
                        depth[y] = depth[x] + 1;
                        root[y] = r;
                        tree.push(e);
                        q.push_back(y);
                    }
                }
            }
        }
        tree.sort_unstable();
        Forest {
            parent,
            depth,
            root,
            edges: tree,
        }
    }

    /// Tree edges on the path between `u` and `v`, or `None` across trees.
    pub fn path(&self, mut u: VertexId, mut v: VertexId) -> Option<Vec<EdgeId>> {
        if self.root[u] != self.root[v] {
            return None;
        }
        let mut up = Vec::new();
        let mut down = Vec::new();
        while self.depth[u] > self.depth[v] {
            let (p, e) = self.parent[u]?;
            up.push(e);
            u = p;
        }
        while self.depth[v] > self.depth[u] {
            let (p, e) = self.parent[v]?;
            down.push(e);
            v = p;
        }
        while u != v {
            let (pu, eu) = self.parent[u]?;
            let (pv, ev) = self.parent[v]?;
            up.push(eu);
            down.push(ev);
            u = pu;
            v = pv;
        }
        down.reverse();
        up.extend(down);
        Some(up)
    }
}

/// Spanning forest of the positive part plus fundamental circuits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCertificate {
    pub forest: Forest,
    pub fundamental: BTreeMap<EdgeId, Circuit>,
}

impl TreeCertificate {
    pub fn tree_edges(&self) -> &[EdgeId] {
        &self.forest.edges
    }
}

pub fn tree_certificate(g: &SignedGraph) -> Result<TreeCertificate> {
    let positive: Vec<EdgeId> = g.edge_ids().filter(|&e| !g.is_negative(e)).collect();
    let (_, whole) = g.vertex_components();
    let (_, pos) = g.vertex_components_of(&positive);
    if whole != pos {
        return Err(Error::NonMinimalSignature(
            "the positive edges do not span every component".into(),
        ));
    }
    let forest = Forest::bfs(g, &positive);
    let mut fundamental = BTreeMap::new();
    for e in g.negative_edges() {
        let ed = g.edge(e);
        let mut edges = forest.path(ed.u, ed.v).expect("same component");
        edges.push(e);
        let c = Circuit::from_edges(g, &edges)
            .map_err(|d| Error::defect(format!("fundamental circuit of e{e}: {d}")))?;
        fundamental.insert(e, c);
    }
    Ok(TreeCertificate { forest, fundamental })
}

/// Quotient of a subgraph after shrinking each piece to a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub quotient: SignedGraph,
    /// parent vertex -> quotient vertex (`None` if outside the host)
    pub vertex_map: Vec<Option<VertexId>>,
    /// quotient edge -> parent edge
    pub edge_map: Vec<EdgeId>,
    /// Pieces occupy quotient vertices `0..piece_count`.
    pub piece_count: usize,
}

impl Contraction {
    pub fn quotient_edge(&self, e: EdgeId) -> Option<EdgeId> {
        self.edge_map.iter().position(|&f| f == e)
    }

    pub fn piece_at(&self, x: VertexId) -> Option<usize> {
        (x < self.piece_count).then_some(x)
    }

    /// No loops and no cycles, parallel edges counting as cycles.
    pub fn is_acyclic(&self) -> bool {
        let mut dsu = Dsu::new(self.quotient.vertex_count());
        self.quotient.edges().iter().all(|ed| dsu.union(ed.u, ed.v))
    }
}

pub fn contract(g: &SignedGraph, pieces: &[Vec<EdgeId>]) -> Result<Contraction> {
    let all: Vec<EdgeId> = g.edge_ids().collect();
    contract_within(g, &all, pieces)
}

/// Contracts each piece of the subgraph `host`. Piece edges are deleted;
/// other host edges with both ends in one piece become quotient loops.
pub fn contract_within(g: &SignedGraph, host: &[EdgeId], pieces: &[Vec<EdgeId>]) -> Result<Contraction> {
    g.check_edges(host)?;
    let n = g.vertex_count();
    let mut vertex_map = vec![None; n];
    let mut in_piece = vec![false; g.edge_count()];
    for (i, p) in pieces.iter().enumerate() {
        g.check_edges(p)?;
        for v in g.vertices_of(p) {
            if vertex_map[v].is_some() {
                return Err(Error::pre(format!("pieces share vertex {v}")));
            }
            vertex_map[v] = Some(i);
        }
        for &e in p {
            in_piece[e] = true;
        }
    }
    let mut next = pieces.len();
    for v in g.vertices_of(host) {
        if vertex_map[v].is_none() {
            vertex_map[v] = Some(next);
            next += 1;
        }
    }
    let mut quotient = SignedGraph::new(next);
    let mut edge_map = Vec::new();
    for &e in &normalized(host) {
        if in_piece[e] {
            continue;
        }
        let ed = g.edge(e);
        let (u, v) = (vertex_map[ed.u].expect("mapped"), vertex_map[ed.v].expect("mapped"));
        quotient.add_edge(u, v, ed.sign)?;
        edge_map.push(e);
    }
    Ok(Contraction {
        quotient,
        vertex_map,
        edge_map,
        piece_count: pieces.len(),
    })
}
