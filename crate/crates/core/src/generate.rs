//! Seeded random instances: general signed multigraphs filtered by
//! predicates, spanning-tree-plus-negatives graphs, even eulerian graphs
//! and generalized barbells.

use rand::seq::SliceRandom;
pub use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::barbell::GBarbellCert;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph};
use crate::limits::Limits;
use crate::structure::{is_g_bridgeless, is_s_bridgeless};
use crate::switching::negativeness_exact;

pub use rand::SeedableRng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Parameters for random instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub m: usize,
    /// Number of negative edges before any switching.
    pub neg: usize,
    pub s_bridgeless: bool,
    /// g-bridgeless with even negativeness of at least 2.
    pub g_bridgeless_even: bool,
    /// Lower bound on the negativeness.
    pub min_negativeness: usize,
    pub connected: bool,
    pub max_attempts: usize,
}

impl GenSpec {
    pub fn new(n: usize, m: usize, neg: usize) -> Self {
        GenSpec {
            n,
            m,
            neg,
            s_bridgeless: false,
            g_bridgeless_even: false,
            min_negativeness: 0,
            connected: true,
            max_attempts: 10_000,
        }
    }
}

fn sample(spec: &GenSpec, rng: &mut Rng8) -> Result<SignedGraph> {
    let mut g = SignedGraph::new(spec.n);
    let mut signs: Vec<Sign> = (0..spec.m)
        .map(|i| if i < spec.neg { Sign::Negative } else { Sign::Positive })
        .collect();
    signs.shuffle(rng);
    for s in signs {
        let u = rng.gen_range(0..spec.n);
        let v = rng.gen_range(0..spec.n);
        g.add_edge(u, v, s)?;
    }
    Ok(g)
}

fn accepts(g: &SignedGraph, spec: &GenSpec, limits: &Limits) -> Result<bool> {
    if spec.connected && g.vertex_components().1 != 1 {
        return Ok(false);
    }
    if spec.min_negativeness > 0 || spec.g_bridgeless_even {
        let eps = negativeness_exact(g, limits)?.epsilon_n;
        if eps < spec.min_negativeness || (spec.g_bridgeless_even && (eps < 2 || eps % 2 == 1)) {
            return Ok(false);
        }
    }
    if spec.s_bridgeless && !is_s_bridgeless(g, limits)?.is_s_bridgeless() {
        return Ok(false);
    }
    if spec.g_bridgeless_even && !is_g_bridgeless(g, limits)? {
        return Ok(false);
    }
    Ok(true)
}

/// Rejection sampling; deterministic for a fixed seed.
pub fn random_instance(spec: &GenSpec, seed: u64, limits: &Limits) -> Result<SignedGraph> {
    if spec.n == 0 && spec.m > 0 {
        return Err(Error::pre("edges need at least one vertex"));
    }
    if spec.neg > spec.m {
        return Err(Error::pre("more negative edges than edges"));
    }
    let mut r = rng(seed);
    for _ in 0..spec.max_attempts {
        let g = sample(spec, &mut r)?;
        if accepts(&g, spec, limits)? {
            return Ok(g);
        }
    }
    Err(Error::Budget(format!("no instance accepted after {} attempts", spec.max_attempts)))
}

/// Random spanning tree on `n` vertices (positive) plus `neg` negative edges
/// with uniform endpoints, loops allowed.
pub fn random_tree_graph(n: usize, neg: usize, rng: &mut Rng8) -> SignedGraph {
    let mut g = SignedGraph::new(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let p = order[rng.gen_range(0..i)];
        g.add_edge(p, order[i], Sign::Positive).expect("in range");
    }
    for _ in 0..neg {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        g.add_edge(u, v, Sign::Negative).expect("in range");
    }
    g
}

/// Closed walk of `len` steps over `n` vertices: connected, every degree
/// even. Signs are random with the negative count forced to `parity`.
fn closed_walk_edges(g: &mut SignedGraph, verts: &[usize], len: usize, parity: usize, rng: &mut Rng8) -> Vec<EdgeId> {
    let start = verts[rng.gen_range(0..verts.len())];
    let mut walk = vec![start];
    // visit every vertex at least once so the piece spans `verts`
    let mut rest: Vec<usize> = verts.iter().copied().filter(|&v| v != start).collect();
    rest.shuffle(rng);
    walk.extend(rest);
    while walk.len() < len {
        walk.push(verts[rng.gen_range(0..verts.len())]);
    }
    let mut edges = Vec::new();
    for i in 0..walk.len() {
        let (u, v) = (walk[i], walk[(i + 1) % walk.len()]);
        let s = if rng.gen_bool(0.4) { Sign::Negative } else { Sign::Positive };
        edges.push(g.add_edge(u, v, s).expect("in range"));
    }
    if g.neg_count(&edges) % 2 != parity {
        let e = edges[rng.gen_range(0..edges.len())];
        let s = g.sign(e).flipped();
        g.set_sign(e, s);
    }
    edges
}

/// Connected eulerian signed graph with an even negative count.
pub fn random_even_eulerian(n: usize, len: usize, rng: &mut Rng8) -> SignedGraph {
    let mut g = SignedGraph::new(n);
    let verts: Vec<usize> = (0..n).collect();
    closed_walk_edges(&mut g, &verts, len.max(n), 0, rng);
    g
}

/// Shape of a random generalized barbell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BarbellShape {
    pub pieces: usize,
    /// Vertices per piece.
    pub piece_size: usize,
    /// Closed-walk length per piece; `piece_size` gives plain circuits.
    pub piece_len: usize,
    /// Longest connector path.
    pub max_path: usize,
}

/// Random generalized barbell: pieces are closed walks on disjoint vertex
/// sets, joined along a random tree by subdivided paths; each piece's
/// negative parity matches its tree degree.
pub fn random_gbarbell(shape: BarbellShape, rng: &mut Rng8) -> Result<(SignedGraph, GBarbellCert)> {
    let t = shape.pieces.max(1);
    let size = shape.piece_size.max(1);
    let mut g = SignedGraph::new(t * size);
    let mut tree = Vec::new();
    for i in 1..t {
        tree.push((rng.gen_range(0..i), i));
    }
    let mut deg = vec![0; t];
    for &(a, b) in &tree {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut pieces = Vec::new();
    for (i, &d) in deg.iter().enumerate() {
        let verts: Vec<usize> = (i * size..(i + 1) * size).collect();
        pieces.push(closed_walk_edges(&mut g, &verts, shape.piece_len.max(size), d % 2, rng));
    }
    let mut host: Vec<EdgeId> = pieces.concat();
    for (a, b) in tree {
        let len = rng.gen_range(1..=shape.max_path.max(1));
        let mut cur = a * size + rng.gen_range(0..size);
        let end = b * size + rng.gen_range(0..size);
        for step in 0..len {
            let next = if step + 1 == len { end } else { g.add_vertex() };
            let s = if rng.gen_bool(0.3) { Sign::Negative } else { Sign::Positive };
            host.push(g.add_edge(cur, next, s)?);
            cur = next;
        }
    }
    let cert = GBarbellCert::new(&g, &host, pieces)?;
    Ok((g, cert))
}
