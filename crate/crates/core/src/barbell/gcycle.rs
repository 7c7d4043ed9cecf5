//! Covers of generalized barbells whose pieces are circuits, covering the
//! pieces at degree-one contracted vertices exactly once.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::circuit::{Circuit, CoverFamily};
use crate::error::{Error, Result};
use crate::graph::{normalized, EdgeId, SignedGraph, VertexId};

use super::{validate_gbarbell, GBarbellCert};

/// Path between two unbalanced pieces after splitting every even-degree
/// contracted vertex into degree-two copies.
#[derive(Debug, Clone)]
struct Chain {
    ends: [usize; 2],
    /// attachment vertex on each end piece
    attach: [VertexId; 2],
    edges: Vec<EdgeId>,
}

impl Chain {
    fn side(&self, piece: usize) -> usize {
        (self.ends[1] == piece) as usize
    }
}

/// Family of signed circuits such that edges of pieces at degree-one
/// contracted vertices lie in exactly one member, other piece edges in one
/// or two, and connector edges in at most one.
pub fn gcycle_cover(g: &SignedGraph, cert: &GBarbellCert) -> Result<CoverFamily> {
    validate_gbarbell(g, cert)?;
    let circuits: Vec<Circuit> = cert
        .pieces
        .iter()
        .map(|p| Circuit::from_edges(g, p).map_err(|d| Error::pre(format!("piece is not a circuit: {d}"))))
        .collect::<Result<_>>()?;
    let q = &cert.quotient;
    let x = &q.quotient;
    let t = cert.pieces.len();
    let unbalanced: Vec<bool> = (0..x.vertex_count())
        .map(|v| v < t && !circuits[v].is_balanced_in(g))
        .collect();
    let attach_at = |qe: EdgeId, at: usize| -> VertexId {
        let ed = g.edge(q.edge_map[qe]);
        if q.vertex_map[ed.u] == Some(at) {
            ed.u
        } else {
            ed.v
        }
    };
    let adj = x.adjacency();

    // pair the contracted edges at every split vertex; a balanced piece is
    // crossed along disjoint forward arcs between consecutive attachments
    let mut through: HashMap<(usize, EdgeId), (EdgeId, Vec<EdgeId>)> = HashMap::new();
    for v in 0..x.vertex_count() {
        if unbalanced[v] {
            continue;
        }
        let mut inc: Vec<(usize, EdgeId)> = adj[v]
            .iter()
            .map(|&(qe, _)| {
                let pos = if v < t {
                    circuits[v].position(attach_at(qe, v)).expect("attachment on piece")
                } else {
                    0
                };
                (pos, qe)
            })
            .collect();
        inc.sort_unstable();
        if inc.len() % 2 == 1 {
            return Err(Error::defect("odd degree at a split vertex"));
        }
        for pair in inc.chunks(2) {
            let arc = if v < t {
                circuits[v].forward_arc(pair[0].0, pair[1].0)
            } else {
                Vec::new()
            };
            through.insert((v, pair[0].1), (pair[1].1, arc.clone()));
            through.insert((v, pair[1].1), (pair[0].1, arc));
        }
    }

    let mut used = vec![false; x.edge_count()];
    let mut chains: Vec<Chain> = Vec::new();
    for p in (0..t).filter(|&p| unbalanced[p]) {
        for &(first, _) in &adj[p] {
            if used[first] {
                continue;
            }
            let mut edges = Vec::new();
            let (mut at, mut qe) = (p, first);
            let end = loop {
                used[qe] = true;
                edges.push(q.edge_map[qe]);
                let ed = x.edge(qe);
                let y = ed.other(at);
                if unbalanced[y] {
                    break y;
                }
                let (next, arc) = through[&(y, qe)].clone();
                edges.extend(arc);
                at = y;
                qe = next;
            };
            chains.push(Chain {
                ends: [p, end],
                attach: [attach_at(first, p), attach_at(qe, end)],
                edges,
            });
        }
    }
    if used.iter().any(|&u| !u) {
        return Err(Error::defect("connector edge on no chain"));
    }

    // spanning star forest of the chain forest, built from the deepest vertices up
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); t];
    for (i, c) in chains.iter().enumerate() {
        incident[c.ends[0]].push(i);
        incident[c.ends[1]].push(i);
    }
    let mut parent: Vec<Option<usize>> = vec![None; t];
    let mut seen = vec![false; t];
    let mut stars: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut covered = vec![false; t];
    for root in (0..t).filter(|&p| unbalanced[p]) {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut order = vec![root];
        let mut qu = VecDeque::from([root]);
        while let Some(v) = qu.pop_front() {
            for &ci in &incident[v] {
                let w = chains[ci].ends[1 - chains[ci].side(v)];
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(ci);
                    order.push(w);
                    qu.push_back(w);
                }
            }
        }
        for &v in order.iter().rev() {
            let Some(ci) = parent[v] else { continue };
            if covered[v] {
                continue;
            }
            let hub = chains[ci].ends[1 - chains[ci].side(v)];
            stars.entry(hub).or_default().push(ci);
            covered[v] = true;
            covered[hub] = true;
        }
        if !covered[root] {
            let ci = *incident[root]
                .first()
                .ok_or_else(|| Error::defect("unbalanced piece with no chain"))?;
            let hub = chains[ci].ends[1 - chains[ci].side(root)];
            stars.entry(hub).or_default().push(ci);
            covered[root] = true;
        }
    }

    let mut members: Vec<Vec<EdgeId>> = (0..t)
        .filter(|&p| !unbalanced[p])
        .map(|p| circuits[p].edge_set())
        .collect();
    for (&hub, spokes) in &stars {
        members.extend(realize_star(g, &circuits, &chains, hub, spokes)?);
    }
    let fam = CoverFamily::from_edge_sets(g, &members)?;
    check_bands(g, cert, &fam)?;
    Ok(fam)
}

/// Members for one star: every leaf circuit exactly once, the hub once or twice.
fn realize_star(
    g: &SignedGraph,
    circuits: &[Circuit],
    chains: &[Chain],
    hub: usize,
    spokes: &[usize],
) -> Result<Vec<Vec<EdgeId>>> {
    let d = &circuits[hub];
    // (position of the hub attachment, leaf piece, chain)
    let mut pts: Vec<(usize, usize, usize)> = spokes
        .iter()
        .map(|&ci| {
            let c = &chains[ci];
            let s = c.side(hub);
            (d.position(c.attach[s]).expect("attachment on hub"), c.ends[1 - s], ci)
        })
        .collect();
    pts.sort_unstable();
    let r = pts.len();
    let spoke = |i: usize| -> Vec<EdgeId> {
        let (_, leaf, ci) = pts[i];
        [circuits[leaf].edges(), &chains[ci].edges[..]].concat()
    };
    let full = |i: usize| -> Vec<EdgeId> { normalized(&[spoke(i), d.edge_set()].concat()) };
    let pair = |a: usize, b: usize| -> Vec<EdgeId> {
        normalized(&[spoke(a), spoke(b), d.forward_arc(pts[a].0, pts[b].0)].concat())
    };
    let hub_ok = |plan: &[Vec<EdgeId>]| -> bool {
        let mut count: HashMap<EdgeId, usize> = HashMap::new();
        for m in plan {
            for &e in m {
                *count.entry(e).or_default() += 1;
            }
        }
        d.edges().iter().all(|e| (1..=2).contains(count.get(e).unwrap_or(&0)))
    };

    let mut plans: Vec<Vec<Vec<EdgeId>>> = Vec::new();
    match r {
        1 => plans.push(vec![full(0)]),
        2 => plans.push(vec![full(0), full(1)]),
        _ if r % 2 == 1 => {
            let mut plan = vec![full(0)];
            plan.extend((1..r).step_by(2).map(|i| pair(i, i + 1)));
            plans.push(plan);
        }
        _ => {
            // each even-indexed point runs three segments ahead
            for off in 0..2 {
                plans.push(
                    (0..r / 2)
                        .map(|j| pair((off + 2 * j) % r, (off + 2 * j + 3) % r))
                        .collect(),
                );
            }
        }
    }
    if let Some(p) = plans.into_iter().find(|p| hub_ok(p) && p.iter().all(|m| is_signed(g, m))) {
        return Ok(p);
    }
    search_star(g, r, &full, &pair, &hub_ok)
        .ok_or_else(|| Error::defect(format!("no realization for a star with {r} leaves")))
}

fn is_signed(g: &SignedGraph, m: &[EdgeId]) -> bool {
    crate::circuit::SignedCircuit::classify(g, m).is_ok()
}

/// Exhaustive fallback: up to two leaves take the whole hub, the rest are
/// matched through hub arcs in either direction.
fn search_star(
    g: &SignedGraph,
    r: usize,
    full: &dyn Fn(usize) -> Vec<EdgeId>,
    pair: &dyn Fn(usize, usize) -> Vec<EdgeId>,
    hub_ok: &dyn Fn(&[Vec<EdgeId>]) -> bool,
) -> Option<Vec<Vec<EdgeId>>> {
    fn matchings(
        left: &[usize],
        plan: &mut Vec<Vec<EdgeId>>,
        pair: &dyn Fn(usize, usize) -> Vec<EdgeId>,
        done: &mut dyn FnMut(&[Vec<EdgeId>]) -> bool,
    ) -> bool {
        let Some((&a, rest)) = left.split_first() else {
            return done(plan);
        };
        for k in 0..rest.len() {
            let b = rest[k];
            let others: Vec<usize> = rest.iter().copied().filter(|&x| x != b).collect();
            for m in [pair(a, b), pair(b, a)] {
                plan.push(m);
                if matchings(&others, plan, pair, done) {
                    return true;
                }
                plan.pop();
            }
        }
        false
    }
    let mut found = None;
    for fulls in 0..=2usize.min(r) {
        if (r - fulls) % 2 == 1 {
            continue;
        }
        let choices: Vec<Vec<usize>> = match fulls {
            0 => vec![vec![]],
            1 => (0..r).map(|a| vec![a]).collect(),
            _ => (0..r).flat_map(|a| (a + 1..r).map(move |b| vec![a, b])).collect(),
        };
        for chosen in choices {
            let mut plan: Vec<Vec<EdgeId>> = chosen.iter().map(|&i| full(i)).collect();
            let left: Vec<usize> = (0..r).filter(|i| !chosen.contains(i)).collect();
            let mut done = |p: &[Vec<EdgeId>]| -> bool {
                if hub_ok(p) && p.iter().all(|m| is_signed(g, m)) {
                    found = Some(p.to_vec());
                    true
                } else {
                    false
                }
            };
            if matchings(&left, &mut plan, pair, &mut done) {
                return found;
            }
        }
    }
    None
}

fn check_bands(g: &SignedGraph, cert: &GBarbellCert, fam: &CoverFamily) -> Result<()> {
    let m = fam.multiplicities(g.edge_count());
    let q = &cert.quotient;
    let deg = q.quotient.degrees_of(&q.quotient.edge_ids().collect::<Vec<_>>());
    let mut allowed: Vec<(usize, usize)> = vec![(0, 0); g.edge_count()];
    for &e in &cert.host {
        allowed[e] = (0, 1);
    }
    for (i, p) in cert.pieces.iter().enumerate() {
        let band = if deg[i] == 1 { (1, 1) } else { (1, 2) };
        for &e in p {
            allowed[e] = band;
        }
    }
    if let Some(e) = (0..g.edge_count()).find(|&e| m[e] < allowed[e].0 || m[e] > allowed[e].1) {
        return Err(Error::defect(format!("multiplicity {} on e{e} outside its band", m[e])));
    }
    Ok(())
}
