//! Circuits, signed circuits and cover families.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{normalized, EdgeId, SignedGraph, VertexId};

/// A closed traversal: `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

/// Why a claimed (signed) circuit is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircuitDiagnostic {
    Malformed(String),
    OddNegativeCount,
    BalancedEnd,
    JointNotUnique,
    JointMissing,
    OverlappingEdges,
    EndsNotDisjoint,
    BadPath(String),
    NotASignedCircuit(String),
}

impl fmt::Display for CircuitDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircuitDiagnostic::Malformed(m) => write!(f, "not a circuit: {m}"),
            CircuitDiagnostic::OddNegativeCount => f.write_str("odd negative count"),
            CircuitDiagnostic::BalancedEnd => f.write_str("barbell end circuit is balanced"),
            CircuitDiagnostic::JointNotUnique => f.write_str("joint not unique"),
            CircuitDiagnostic::JointMissing => f.write_str("joint is not on both circuits"),
            CircuitDiagnostic::OverlappingEdges => f.write_str("edge sets overlap"),
            CircuitDiagnostic::EndsNotDisjoint => f.write_str("end circuits share a vertex"),
            CircuitDiagnostic::BadPath(m) => write!(f, "bad connecting path: {m}"),
            CircuitDiagnostic::NotASignedCircuit(m) => write!(f, "not a signed circuit: {m}"),
        }
    }
}

impl From<CircuitDiagnostic> for Error {
    fn from(d: CircuitDiagnostic) -> Self {
        Error::InvalidCircuit(d.to_string())
    }
}

type Diag<T> = std::result::Result<T, CircuitDiagnostic>;

fn malformed<T>(msg: impl Into<String>) -> Diag<T> {
    Err(CircuitDiagnostic::Malformed(msg.into()))
}

impl Circuit {
    /// Orders an unordered edge set into a closed traversal, checking that it
    /// is connected and 2-regular.
    pub fn from_edges(g: &SignedGraph, edges: &[EdgeId]) -> Diag<Circuit> {
        if edges.is_empty() {
            return malformed("empty edge set");
        }
        if let Some(&e) = edges.iter().find(|&&e| e >= g.edge_count()) {
            return malformed(format!("unknown edge e{e}"));
        }
        let set = normalized(edges);
        if set.len() != edges.len() {
            return malformed("repeated edge");
        }
        let deg = g.degrees_of(&set);
        if let Some(v) = (0..g.vertex_count()).find(|&v| deg[v] != 0 && deg[v] != 2) {
            return malformed(format!("vertex {v} has degree {}", deg[v]));
        }
        if set.len() == 1 {
            let e = g.edge(set[0]);
            if !e.is_loop() {
                return malformed("single non-loop edge");
            }
            return Ok(Circuit {
                vertices: vec![e.u],
                edges: set,
            });
        }
        let adj = g.adjacency_of(&set);
        let start = g.edge(set[0]).u;
        let mut vertices = vec![start];
        let mut order = Vec::with_capacity(set.len());
        let mut used: HashSet<EdgeId> = HashSet::new();
        let mut cur = start;
        loop {
            let next = adj[cur].iter().find(|(e, _)| !used.contains(e)).copied();
            let Some((e, w)) = next else { break };
            used.insert(e);
            order.push(e);
            if w == start {
                break;
            }
            vertices.push(w);
            cur = w;
        }
        if order.len() != set.len() {
            return malformed("edge set is disconnected");
        }
        Ok(Circuit {
            vertices,
            edges: order,
        })
    }

    /// Re-checks a circuit witness against `g`.
    pub fn check(&self, g: &SignedGraph) -> Diag<()> {
        let n = self.edges.len();
        if n == 0 || self.vertices.len() != n {
            return malformed("vertex and edge sequences disagree");
        }
        if let Some(&e) = self.edges.iter().find(|&&e| e >= g.edge_count()) {
            return malformed(format!("unknown edge e{e}"));
        }
        if normalized(&self.edges).len() != n {
            return malformed("repeated edge");
        }
        if normalized(&self.vertices).len() != n {
            return malformed("repeated vertex");
        }
        for i in 0..n {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
            let e = g.edge(self.edges[i]);
            if !((e.u == a && e.v == b) || (e.u == b && e.v == a)) {
                return malformed(format!("edge e{} does not join {a} and {b}", self.edges[i]));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edge_set(&self) -> Vec<EdgeId> {
        normalized(&self.edges)
    }

    pub fn negative_count(&self, g: &SignedGraph) -> usize {
        g.neg_count(&self.edges)
    }

    pub fn is_balanced_in(&self, g: &SignedGraph) -> bool {
        self.negative_count(g).is_multiple_of(2)
    }

    /// Arc from position `i` to position `j` walking forward (edge ids).
    pub fn forward_arc(&self, i: usize, j: usize) -> Vec<EdgeId> {
        let n = self.len();
        let mut out = Vec::new();
        let mut k = i;
        while k != j {
            out.push(self.edges[k]);
            k = (k + 1) % n;
        }
        out
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// Applies an edge relabeling (used by invariance tests and lifting).
    pub fn relabel(&self, edge_map: impl Fn(EdgeId) -> EdgeId, vertex_map: impl Fn(VertexId) -> VertexId) -> Circuit {
        Circuit {
            vertices: self.vertices.iter().map(|&v| vertex_map(v)).collect(),
            edges: self.edges.iter().map(|&e| edge_map(e)).collect(),
        }
    }
}

/// Balanced circuit, short barbell or long barbell.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SignedCircuit {
    Balanced(Circuit),
    ShortBarbell {
        c1: Circuit,
        c2: Circuit,
        joint: VertexId,
    },
    LongBarbell {
        c1: Circuit,
        /// Ordered from the `c1` end to the `c2` end.
        path: Vec<EdgeId>,
        c2: Circuit,
    },
}

impl SignedCircuit {
    /// Sorted edge ids of the whole signed circuit.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = match self {
            SignedCircuit::Balanced(c) => c.edges().to_vec(),
            SignedCircuit::ShortBarbell { c1, c2, .. } => {
                c1.edges().iter().chain(c2.edges()).copied().collect()
            }
            SignedCircuit::LongBarbell { c1, path, c2 } => c1
                .edges()
                .iter()
                .chain(path)
                .chain(c2.edges())
                .copied()
                .collect(),
        };
        out.sort_unstable();
        out
    }

    pub fn len(&self) -> usize {
        match self {
            SignedCircuit::Balanced(c) => c.len(),
            SignedCircuit::ShortBarbell { c1, c2, .. } => c1.len() + c2.len(),
            SignedCircuit::LongBarbell { c1, path, c2 } => c1.len() + path.len() + c2.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_barbell(&self) -> bool {
        !matches!(self, SignedCircuit::Balanced(_))
    }

    /// The two unbalanced end circuits of a barbell.
    pub fn ends(&self) -> Option<(&Circuit, &Circuit)> {
        match self {
            SignedCircuit::Balanced(_) => None,
            SignedCircuit::ShortBarbell { c1, c2, .. } | SignedCircuit::LongBarbell { c1, c2, .. } => {
                Some((c1, c2))
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SignedCircuit::Balanced(_) => "balanced",
            SignedCircuit::ShortBarbell { .. } => "short",
            SignedCircuit::LongBarbell { .. } => "long",
        }
    }

    /// Recognises an unordered edge set as a signed circuit of `g`.
    pub fn classify(g: &SignedGraph, edges: &[EdgeId]) -> Diag<SignedCircuit> {
        if edges.is_empty() {
            return Err(CircuitDiagnostic::NotASignedCircuit("empty edge set".into()));
        }
        if let Some(&e) = edges.iter().find(|&&e| e >= g.edge_count()) {
            return malformed(format!("unknown edge e{e}"));
        }
        let set = normalized(edges);
        if set.len() != edges.len() {
            return malformed("repeated edge");
        }
        if !g.is_connected_subset(&set) {
            return Err(CircuitDiagnostic::NotASignedCircuit("disconnected".into()));
        }
        let deg = g.degrees_of(&set);
        let touched: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| deg[v] > 0).collect();
        let deg4: Vec<VertexId> = touched.iter().copied().filter(|&v| deg[v] == 4).collect();
        let deg3: Vec<VertexId> = touched.iter().copied().filter(|&v| deg[v] == 3).collect();
        let others = touched.iter().filter(|&&v| deg[v] != 2).count();

        let sc = if others == 0 {
            SignedCircuit::Balanced(Circuit::from_edges(g, &set)?)
        } else if deg4.len() == 1 && others == 1 {
            let joint = deg4[0];
            let adj = g.adjacency_of(&set);
            // walk one closed sub-trail out of the joint
            let mut used: HashSet<EdgeId> = HashSet::new();
            let (e0, mut cur) = adj[joint][0];
            used.insert(e0);
            let mut first = vec![e0];
            while cur != joint {
                let (e, w) = *adj[cur]
                    .iter()
                    .find(|(e, _)| !used.contains(e))
                    .ok_or_else(|| CircuitDiagnostic::Malformed("dead end".into()))?;
                used.insert(e);
                first.push(e);
                cur = w;
            }
            let rest: Vec<EdgeId> = set.iter().copied().filter(|e| !used.contains(e)).collect();
            let c1 = Circuit::from_edges(g, &first)?;
            let c2 = Circuit::from_edges(g, &rest)?;
            SignedCircuit::ShortBarbell { c1, c2, joint }
        } else if deg3.len() == 2 && others == 2 {
            let sub = g.subgraph(&set);
            let local_bridges = crate::structure::bridges(&sub.graph);
            let path_edges: BTreeSet<EdgeId> = local_bridges.iter().map(|&e| sub.edge_ids[e]).collect();
            let rest: Vec<EdgeId> = set.iter().copied().filter(|e| !path_edges.contains(e)).collect();
            let parts = g.edge_components(&rest);
            if parts.len() != 2 || path_edges.is_empty() {
                return Err(CircuitDiagnostic::NotASignedCircuit("no barbell shape".into()));
            }
            let c1 = Circuit::from_edges(g, &parts[0])?;
            let c2 = Circuit::from_edges(g, &parts[1])?;
            let path: Vec<EdgeId> = path_edges.into_iter().collect();
            let ordered = order_path(g, &path, &c1)?;
            SignedCircuit::LongBarbell {
                c1,
                path: ordered,
                c2,
            }
        } else {
            return Err(CircuitDiagnostic::NotASignedCircuit(
                "degree pattern matches no signed circuit".into(),
            ));
        };
        sc.check(g)?;
        Ok(sc)
    }

    /// Checks every invariant of the claimed variant inside `g`.
    pub fn check(&self, g: &SignedGraph) -> Diag<()> {
        match self {
            SignedCircuit::Balanced(c) => {
                c.check(g)?;
                if !c.is_balanced_in(g) {
                    return Err(CircuitDiagnostic::OddNegativeCount);
                }
            }
            SignedCircuit::ShortBarbell { c1, c2, joint } => {
                c1.check(g)?;
                c2.check(g)?;
                if c1.is_balanced_in(g) || c2.is_balanced_in(g) {
                    return Err(CircuitDiagnostic::BalancedEnd);
                }
                if !disjoint(c1.edges(), c2.edges()) {
                    return Err(CircuitDiagnostic::OverlappingEdges);
                }
                let shared = shared_vertices(c1, c2);
                if shared.len() > 1 {
                    return Err(CircuitDiagnostic::JointNotUnique);
                }
                if shared != [*joint] {
                    return Err(CircuitDiagnostic::JointMissing);
                }
            }
            SignedCircuit::LongBarbell { c1, path, c2 } => {
                c1.check(g)?;
                c2.check(g)?;
                if c1.is_balanced_in(g) || c2.is_balanced_in(g) {
                    return Err(CircuitDiagnostic::BalancedEnd);
                }
                if !shared_vertices(c1, c2).is_empty() {
                    return Err(CircuitDiagnostic::EndsNotDisjoint);
                }
                if !disjoint(c1.edges(), c2.edges())
                    || !disjoint(c1.edges(), path)
                    || !disjoint(c2.edges(), path)
                {
                    return Err(CircuitDiagnostic::OverlappingEdges);
                }
                check_path(g, path, c1, c2)?;
            }
        }
        Ok(())
    }

    pub fn relabel(&self, em: impl Fn(EdgeId) -> EdgeId + Copy, vm: impl Fn(VertexId) -> VertexId + Copy) -> SignedCircuit {
        match self {
            SignedCircuit::Balanced(c) => SignedCircuit::Balanced(c.relabel(em, vm)),
            SignedCircuit::ShortBarbell { c1, c2, joint } => SignedCircuit::ShortBarbell {
                c1: c1.relabel(em, vm),
                c2: c2.relabel(em, vm),
                joint: vm(*joint),
            },
            SignedCircuit::LongBarbell { c1, path, c2 } => SignedCircuit::LongBarbell {
                c1: c1.relabel(em, vm),
                path: path.iter().map(|&e| em(e)).collect(),
                c2: c2.relabel(em, vm),
            },
        }
    }
}

fn disjoint(a: &[EdgeId], b: &[EdgeId]) -> bool {
    let sa: HashSet<_> = a.iter().collect();
    b.iter().all(|e| !sa.contains(e))
}

fn shared_vertices(c1: &Circuit, c2: &Circuit) -> Vec<VertexId> {
    let s1: BTreeSet<_> = c1.vertices().iter().copied().collect();
    c2.vertices().iter().copied().filter(|v| s1.contains(v)).collect()
}

/// Orders the path edges starting from the endpoint on `c1`.
fn order_path(g: &SignedGraph, path: &[EdgeId], c1: &Circuit) -> Diag<Vec<EdgeId>> {
    let on_c1: HashSet<VertexId> = c1.vertices().iter().copied().collect();
    let adj = g.adjacency_of(path);
    let deg = g.degrees_of(path);
    let start = (0..g.vertex_count())
        .find(|&v| deg[v] == 1 && on_c1.contains(&v))
        .ok_or_else(|| CircuitDiagnostic::BadPath("no end on first circuit".into()))?;
    let mut out = Vec::with_capacity(path.len());
    let mut used = HashSet::new();
    let mut cur = start;
    while let Some(&(e, w)) = adj[cur].iter().find(|(e, _)| !used.contains(e)) {
        used.insert(e);
        out.push(e);
        cur = w;
    }
    if out.len() != path.len() {
        return Err(CircuitDiagnostic::BadPath("not a single path".into()));
    }
    Ok(out)
}

fn check_path(g: &SignedGraph, path: &[EdgeId], c1: &Circuit, c2: &Circuit) -> Diag<()> {
    if path.is_empty() {
        return Err(CircuitDiagnostic::BadPath("empty path".into()));
    }
    if let Some(&e) = path.iter().find(|&&e| e >= g.edge_count()) {
        return malformed(format!("unknown edge e{e}"));
    }
    if normalized(path).len() != path.len() {
        return Err(CircuitDiagnostic::BadPath("repeated edge".into()));
    }
    let on_c1: HashSet<VertexId> = c1.vertices().iter().copied().collect();
    let on_c2: HashSet<VertexId> = c2.vertices().iter().copied().collect();
    let first = g.edge(path[0]);
    let mut cur = if on_c1.contains(&first.u) {
        first.u
    } else if on_c1.contains(&first.v) {
        first.v
    } else {
        return Err(CircuitDiagnostic::BadPath("does not start on first circuit".into()));
    };
    let mut seen = vec![cur];
    for (i, &e) in path.iter().enumerate() {
        let ed = g.edge(e);
        if ed.is_loop() || !ed.touches(cur) {
            return Err(CircuitDiagnostic::BadPath(format!("edge e{e} does not continue the path")));
        }
        cur = ed.other(cur);
        if seen.contains(&cur) {
            return Err(CircuitDiagnostic::BadPath("repeated vertex".into()));
        }
        seen.push(cur);
        let last = i + 1 == path.len();
        if on_c1.contains(&cur) {
            return Err(CircuitDiagnostic::BadPath("meets first circuit twice".into()));
        }
        if on_c2.contains(&cur) != last {
            return Err(CircuitDiagnostic::BadPath("meets second circuit away from its end".into()));
        }
    }
    Ok(())
}

/// Number of negative edges in an edge set.
pub fn negative_count(g: &SignedGraph, edges: &[EdgeId]) -> Result<usize> {
    g.negative_count(edges)
}

pub fn is_balanced(g: &SignedGraph, c: &Circuit) -> Result<bool> {
    c.check(g)?;
    Ok(c.is_balanced_in(g))
}

pub fn validate_signed_circuit(g: &SignedGraph, sc: &SignedCircuit) -> std::result::Result<(), CircuitDiagnostic> {
    sc.check(g)
}

/// A multiset of signed circuits.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoverFamily {
    pub members: Vec<SignedCircuit>,
}

impl CoverFamily {
    pub fn new(members: Vec<SignedCircuit>) -> Self {
        CoverFamily { members }
    }

    /// Classifies every edge set; a failure here is a construction defect.
    pub fn from_edge_sets(g: &SignedGraph, sets: &[Vec<EdgeId>]) -> Result<Self> {
        let members = sets
            .iter()
            .map(|s| {
                SignedCircuit::classify(g, s)
                    .map_err(|d| Error::defect(format!("member {s:?} rejected: {d}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut fam = CoverFamily { members };
        fam.canonicalize();
        Ok(fam)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Total edge count over members, with repetition.
    pub fn length(&self) -> usize {
        self.members.iter().map(SignedCircuit::len).sum()
    }

    pub fn multiplicities(&self, edge_count: usize) -> Vec<usize> {
        let mut m = vec![0; edge_count];
        for sc in &self.members {
            for e in sc.edges() {
                if e < edge_count {
                    m[e] += 1;
                }
            }
        }
        m
    }

    pub fn edge_sets(&self) -> Vec<Vec<EdgeId>> {
        self.members.iter().map(SignedCircuit::edges).collect()
    }

    /// Sorts members by their edge lists (smallest edge id first).
    pub fn canonicalize(&mut self) {
        self.members.sort_by_cached_key(|m| m.edges());
    }

    pub fn extend(&mut self, other: CoverFamily) {
        self.members.extend(other.members);
    }
}

/// Per-edge multiplicities and total length of a verified family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverStats {
    pub multiplicity: Vec<usize>,
    pub length: usize,
    pub uncovered: Vec<EdgeId>,
}

impl CoverStats {
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &m in &self.multiplicity {
            *h.entry(m).or_default() += 1;
        }
        h
    }
}

pub fn cover_multiplicities(g: &SignedGraph, f: &CoverFamily) -> Result<CoverStats> {
    for (i, m) in f.members.iter().enumerate() {
        m.check(g)
            .map_err(|d| Error::InvalidCircuit(format!("member {i}: {d}")))?;
    }
    let multiplicity = f.multiplicities(g.edge_count());
    let uncovered = (0..g.edge_count()).filter(|&e| multiplicity[e] == 0).collect();
    Ok(CoverStats {
        length: multiplicity.iter().sum(),
        multiplicity,
        uncovered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn negative_counts() {
        let tri = fixtures::triangle(0);
        assert_eq!(negative_count(&tri, &[0, 1, 2]).unwrap(), 0);
        let loops = fixtures::two_negative_loops();
        assert_eq!(negative_count(&loops, &[0, 1]).unwrap(), 2);
        let k4 = fixtures::k4_all_negative();
        // triangle on vertices 0,1,2 of K4 uses edges 0 (01), 1 (02), 3 (12)
        assert_eq!(negative_count(&k4, &[0, 1, 3]).unwrap(), 3);
        assert!(matches!(negative_count(&k4, &[9]), Err(Error::UnknownEdge(9))));
    }

    #[test]
    fn balance_examples() {
        let c4 = fixtures::cycle(4, &[]);
        let c = Circuit::from_edges(&c4, &[0, 1, 2, 3]).unwrap();
        assert!(is_balanced(&c4, &c).unwrap());
        let tri = fixtures::triangle(1);
        let c = Circuit::from_edges(&tri, &[0, 1, 2]).unwrap();
        assert!(!is_balanced(&tri, &c).unwrap());
        let digon = fixtures::cycle(2, &[0, 1]);
        let c = Circuit::from_edges(&digon, &[0, 1]).unwrap();
        assert!(is_balanced(&digon, &c).unwrap());
    }

    #[test]
    fn long_barbell_on_l2p1_validates() {
        let g = fixtures::l2p(1);
        let sc = SignedCircuit::classify(&g, &[0, 1, 2]).unwrap();
        assert!(matches!(sc, SignedCircuit::LongBarbell { ref path, .. } if path == &vec![2]));
        assert!(validate_signed_circuit(&g, &sc).is_ok());
    }

    #[test]
    fn balanced_claim_on_unbalanced_triangle() {
        let g = fixtures::triangle(1);
        let c = Circuit::from_edges(&g, &[0, 1, 2]).unwrap();
        let err = validate_signed_circuit(&g, &SignedCircuit::Balanced(c)).unwrap_err();
        assert_eq!(err.to_string(), "odd negative count");
    }

    #[test]
    fn short_barbell_sharing_two_vertices_rejected() {
        // two unbalanced triangles on the same vertex pair {0,1}
        let g = SignedGraph::from_edges(
            4,
            [
                (0, 1, crate::Sign::Negative),
                (1, 2, crate::Sign::Positive),
                (2, 0, crate::Sign::Positive),
                (0, 3, crate::Sign::Negative),
                (3, 1, crate::Sign::Positive),
                (1, 0, crate::Sign::Positive),
            ],
        )
        .unwrap();
        let c1 = Circuit::from_edges(&g, &[0, 1, 2]).unwrap();
        let c2 = Circuit::from_edges(&g, &[3, 4, 5]).unwrap();
        let sc = SignedCircuit::ShortBarbell { c1, c2, joint: 0 };
        assert_eq!(validate_signed_circuit(&g, &sc).unwrap_err().to_string(), "joint not unique");
    }

    #[test]
    fn cover_examples() {
        let g = fixtures::l2p(1);
        let fam = CoverFamily::from_edge_sets(&g, &[vec![0, 1, 2]]).unwrap();
        let st = cover_multiplicities(&g, &fam).unwrap();
        assert_eq!(st.multiplicity, vec![1, 1, 1]);
        assert_eq!(st.length, 3);

        let bow = fixtures::bowtie();
        let all: Vec<EdgeId> = (0..6).collect();
        let fam = CoverFamily::from_edge_sets(&bow, &[all.clone(), all]).unwrap();
        assert!(fam.members.iter().all(|m| matches!(m, SignedCircuit::ShortBarbell { .. })));
        let st = cover_multiplicities(&bow, &fam).unwrap();
        assert_eq!(st.multiplicity, vec![2; 6]);
        assert_eq!(st.length, 12);

        let st = cover_multiplicities(&bow, &CoverFamily::default()).unwrap();
        assert_eq!(st.length, 0);
        assert_eq!(st.uncovered, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn single_loops_are_circuits() {
        let g = SignedGraph::from_edges(
            1,
            [(0, 0, crate::Sign::Positive), (0, 0, crate::Sign::Negative)],
        )
        .unwrap();
        assert!(matches!(SignedCircuit::classify(&g, &[0]), Ok(SignedCircuit::Balanced(_))));
        assert_eq!(
            SignedCircuit::classify(&g, &[1]).unwrap_err(),
            CircuitDiagnostic::OddNegativeCount
        );
        assert!(matches!(
            SignedCircuit::classify(&g, &[0, 1]),
            Err(CircuitDiagnostic::BalancedEnd)
        ));
    }
}
