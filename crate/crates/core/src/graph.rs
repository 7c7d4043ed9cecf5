//! Signed multigraph model.
//!
//! Vertices are `0..vertex_count` internally; the text format is 1-indexed.
//! Edge ids are positions in the edge list and never change once assigned.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    /// `+1` or `-1`.
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub sign: Sign,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite to `x`. For a loop this is `x` itself.
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

/// A graph with a signature; loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    pub fn new(vertex_count: usize) -> Self {
        SignedGraph {
            n: vertex_count,
            edges: Vec::new(),
        }
    }

    /// Builds a graph from `(u, v, sign)` triples with 0-indexed endpoints.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId, Sign)>,
    ) -> Result<Self> {
        let mut g = SignedGraph::new(vertex_count);
        for (u, v, s) in edges {
            g.add_edge(u, v, s)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, sign: Sign) -> Result<EdgeId> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    count: self.n,
                });
            }
        }
        self.edges.push(Edge { u, v, sign });
        Ok(self.edges.len() - 1)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.n += 1;
        self.n - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn try_edge(&self, e: EdgeId) -> Result<&Edge> {
        self.edges.get(e).ok_or(Error::UnknownEdge(e))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        0..self.edges.len()
    }

    pub fn sign(&self, e: EdgeId) -> Sign {
        self.edges[e].sign
    }

    pub fn set_sign(&mut self, e: EdgeId, sign: Sign) {
        self.edges[e].sign = sign;
    }

    pub fn is_negative(&self, e: EdgeId) -> bool {
        self.edges[e].sign.is_negative()
    }

    pub fn negative_edges(&self) -> Vec<EdgeId> {
        self.edge_ids().filter(|&e| self.is_negative(e)).collect()
    }

    pub fn positive_loops(&self) -> Vec<EdgeId> {
        self.edge_ids()
            .filter(|&e| self.edges[e].is_loop() && !self.is_negative(e))
            .collect()
    }

    pub fn check_edges(&self, edges: &[EdgeId]) -> Result<()> {
        match edges.iter().find(|&&e| e >= self.edges.len()) {
            Some(&e) => Err(Error::UnknownEdge(e)),
            None => Ok(()),
        }
    }

    /// Adjacency lists of `(edge, neighbour)` restricted to `edges`.
    /// A loop is listed once at its vertex.
    pub fn adjacency_of(&self, edges: &[EdgeId]) -> Vec<Vec<(EdgeId, VertexId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for &e in edges {
            let Edge { u, v, .. } = self.edges[e];
            adj[u].push((e, v));
            if u != v {
                adj[v].push((e, u));
            }
        }
        adj
    }

    pub fn adjacency(&self) -> Vec<Vec<(EdgeId, VertexId)>> {
        let all: Vec<EdgeId> = self.edge_ids().collect();
        self.adjacency_of(&all)
    }

    /// Degrees inside the edge subset; a loop contributes two.
    pub fn degrees_of(&self, edges: &[EdgeId]) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &e in edges {
            deg[self.edges[e].u] += 1;
            deg[self.edges[e].v] += 1;
        }
        deg
    }

    /// Sorted vertex set spanned by the edge subset.
    pub fn vertices_of(&self, edges: &[EdgeId]) -> Vec<VertexId> {
        let set: BTreeSet<VertexId> = edges
            .iter()
            .flat_map(|&e| [self.edges[e].u, self.edges[e].v])
            .collect();
        set.into_iter().collect()
    }

    /// Connected components of the whole graph, isolated vertices included.
    /// Returns the component index of every vertex and the component count.
    pub fn vertex_components(&self) -> (Vec<usize>, usize) {
        let all: Vec<EdgeId> = self.edge_ids().collect();
        self.vertex_components_of(&all)
    }

    pub fn vertex_components_of(&self, edges: &[EdgeId]) -> (Vec<usize>, usize) {
        let mut dsu = Dsu::new(self.n);
        for &e in edges {
            dsu.union(self.edges[e].u, self.edges[e].v);
        }
        let mut label = vec![usize::MAX; self.n];
        let mut comp = vec![0; self.n];
        let mut count = 0;
        for x in 0..self.n {
            let r = dsu.find(x);
            if label[r] == usize::MAX {
                label[r] = count;
                count += 1;
            }
            comp[x] = label[r];
        }
        (comp, count)
    }

    /// Edge subsets of the connected pieces of the subgraph formed by `edges`,
    /// ordered by their smallest vertex.
    pub fn edge_components(&self, edges: &[EdgeId]) -> Vec<Vec<EdgeId>> {
        let (comp, _) = self.vertex_components_of(edges);
        let mut buckets: std::collections::BTreeMap<usize, Vec<EdgeId>> = Default::default();
        for &e in edges {
            buckets.entry(comp[self.edges[e].u]).or_default().push(e);
        }
        // component labels follow smallest-vertex order already
        let mut out: Vec<Vec<EdgeId>> = buckets.into_values().collect();
        for es in &mut out {
            es.sort_unstable();
        }
        out
    }

    /// Whether the edge subset forms a single connected piece.
    pub fn is_connected_subset(&self, edges: &[EdgeId]) -> bool {
        edges.is_empty() || self.edge_components(edges).len() == 1
    }

    pub fn negative_count(&self, edges: &[EdgeId]) -> Result<usize> {
        self.check_edges(edges)?;
        Ok(edges.iter().filter(|&&e| self.is_negative(e)).count())
    }

    pub(crate) fn neg_count(&self, edges: &[EdgeId]) -> usize {
        edges.iter().filter(|&&e| self.is_negative(e)).count()
    }

    /// Extracts the subgraph on `edges` with vertices renumbered compactly.
    pub fn subgraph(&self, edges: &[EdgeId]) -> SubGraph {
        let vertex_ids = self.vertices_of(edges);
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertex_ids.iter().enumerate() {
            local[v] = i;
        }
        let mut graph = SignedGraph::new(vertex_ids.len());
        let mut edge_ids = Vec::with_capacity(edges.len());
        for &e in edges {
            let Edge { u, v, sign } = self.edges[e];
            graph.edges.push(Edge {
                u: local[u],
                v: local[v],
                sign,
            });
            edge_ids.push(e);
        }
        SubGraph {
            graph,
            edge_ids,
            vertex_ids,
        }
    }
}

impl SignedGraph {
    /// The subgraph on `edges` keeping every vertex id.
    pub fn spanning_subgraph(&self, edges: &[EdgeId]) -> SubGraph {
        let mut graph = SignedGraph::new(self.n);
        graph.edges = edges.iter().map(|&e| self.edges[e]).collect();
        SubGraph {
            graph,
            edge_ids: edges.to_vec(),
            vertex_ids: (0..self.n).collect(),
        }
    }
}

/// A compact copy of an edge-induced subgraph with maps back to the parent.
#[derive(Debug, Clone)]
pub struct SubGraph {
    pub graph: SignedGraph,
    /// local edge id -> parent edge id
    pub edge_ids: Vec<EdgeId>,
    /// local vertex id -> parent vertex id
    pub vertex_ids: Vec<VertexId>,
}

impl SubGraph {
    pub fn lift_edges(&self, local: &[EdgeId]) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = local.iter().map(|&e| self.edge_ids[e]).collect();
        out.sort_unstable();
        out
    }

    pub fn lift_family(&self, fam: &[Vec<EdgeId>]) -> Vec<Vec<EdgeId>> {
        fam.iter().map(|m| self.lift_edges(m)).collect()
    }
}

/// Union–find over `0..n`.
#[derive(Debug, Clone)]
pub struct Dsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Symmetric difference of sorted edge lists.
pub fn sym_diff(a: &[EdgeId], b: &[EdgeId]) -> Vec<EdgeId> {
    let sa: BTreeSet<_> = a.iter().copied().collect();
    let sb: BTreeSet<_> = b.iter().copied().collect();
    sa.symmetric_difference(&sb).copied().collect()
}

/// Sorted, deduplicated copy.
pub fn normalized(edges: &[EdgeId]) -> Vec<EdgeId> {
    let mut v = edges.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}
