//! Either a decomposition into balanced circuits or a {1,2}-cover with two
//! edge-disjoint unbalanced circuits covered once.

use crate::circuit::{Circuit, CoverFamily, SignedCircuit};
use crate::error::{Error, Result};
use crate::graph::{normalized, sym_diff, EdgeId, SignedGraph, VertexId};
use crate::structure::{bridges_of, Forest};

use super::{closed_trail, gbarbell_scdc, gcycle_cover, validate_gbarbell, GBarbellCert};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OneTwoCover {
    /// Balanced circuits partitioning the host.
    Decomposition(Vec<Circuit>),
    /// A {1,2}-cover and two unbalanced circuits whose edges it covers once.
    CoverWithSpares {
        cover: CoverFamily,
        c1: Circuit,
        c2: Circuit,
    },
}

pub fn one_two_cover(g: &SignedGraph, cert: &GBarbellCert) -> Result<OneTwoCover> {
    validate_gbarbell(g, cert)?;
    let mut balanced: Vec<Circuit> = Vec::new();
    let mut cover = CoverFamily::default();
    let mut spares: Option<(Circuit, Circuit)> = None;
    for comp in g.edge_components(&cert.host) {
        let pieces: Vec<Vec<EdgeId>> = cert
            .pieces
            .iter()
            .filter(|p| comp.binary_search(&p[0]).is_ok())
            .cloned()
            .collect();
        match component_cover(g, &comp, pieces)? {
            OneTwoCover::Decomposition(cs) => balanced.extend(cs),
            OneTwoCover::CoverWithSpares { cover: f, c1, c2 } => {
                cover.extend(f);
                spares.get_or_insert((c1, c2));
            }
        }
    }
    let out = match spares {
        None => OneTwoCover::Decomposition(balanced),
        Some((c1, c2)) => {
            cover.members.extend(balanced.into_iter().map(SignedCircuit::Balanced));
            cover.canonicalize();
            OneTwoCover::CoverWithSpares { cover, c1, c2 }
        }
    };
    check(g, &cert.host, &out)?;
    Ok(out)
}

fn component_cover(g: &SignedGraph, comp: &[EdgeId], pieces: Vec<Vec<EdgeId>>) -> Result<OneTwoCover> {
    if !bridges_of(g, comp).is_empty() {
        // a double cover minus one barbell
        let sub = GBarbellCert::new(g, comp, pieces)?;
        let mut f = gbarbell_scdc(g, &sub)?;
        let i = f
            .members
            .iter()
            .position(SignedCircuit::is_barbell)
            .ok_or_else(|| Error::defect("bridged host has no barbell in its double cover"))?;
        let removed = f.members.remove(i);
        let (c1, c2) = removed.ends().expect("barbell");
        let (c1, c2) = (c1.clone(), c2.clone());
        return Ok(OneTwoCover::CoverWithSpares { cover: f, c1, c2 });
    }
    eulerian_cover(g, comp)
}

fn circuit(g: &SignedGraph, edges: &[EdgeId]) -> Result<Circuit> {
    Circuit::from_edges(g, edges).map_err(|d| Error::defect(format!("expected a circuit: {d}")))
}

/// Splits an eulerian edge set into circuits along a closed trail.
fn trail_circuits(g: &SignedGraph, edges: &[EdgeId]) -> Vec<Vec<EdgeId>> {
    let (vs, es) = closed_trail(g, edges);
    let mut out = Vec::new();
    let mut stack_v: Vec<VertexId> = Vec::new();
    let mut stack_e: Vec<EdgeId> = Vec::new();
    for (i, &e) in es.iter().enumerate() {
        if stack_v.is_empty() {
            stack_v.push(vs[i]);
        }
        let next = vs[(i + 1) % vs.len()];
        stack_e.push(e);
        if let Some(k) = stack_v.iter().position(|&v| v == next) {
            out.push(normalized(&stack_e.split_off(k)));
            stack_v.truncate(k + 1);
        } else {
            stack_v.push(next);
        }
    }
    out
}

fn shared(g: &SignedGraph, a: &[EdgeId], b: &[EdgeId]) -> Vec<VertexId> {
    let va = g.vertices_of(a);
    g.vertices_of(b).into_iter().filter(|v| va.binary_search(v).is_ok()).collect()
}

/// Two unbalanced circuits meeting in at least three vertices: one circuit
/// from a chord arc of `b` plus a compatible arc of `a`, and the rest
/// (which repeats a vertex) split further.
fn resplit(g: &SignedGraph, a: &[EdgeId], b: &[EdgeId]) -> Result<Vec<Vec<EdgeId>>> {
    let (ca, cb) = (circuit(g, a)?, circuit(g, b)?);
    let on_a = g.vertices_of(a);
    let hits: Vec<usize> = (0..cb.len())
        .filter(|&i| on_a.binary_search(&cb.vertices()[i]).is_ok())
        .collect();
    let (z0, z1, z2) = (hits[0], hits[1], hits[2]);
    let chord = cb.forward_arc(z0, z1);
    let (p0, p1, p2) = (
        ca.position(cb.vertices()[z0]).expect("shared"),
        ca.position(cb.vertices()[z1]).expect("shared"),
        ca.position(cb.vertices()[z2]).expect("shared"),
    );
    let fwd = ca.forward_arc(p0, p1);
    let fwd_has_z2 = (0..fwd.len()).any(|k| (p0 + k) % ca.len() == p2);
    let arc = if fwd_has_z2 { ca.forward_arc(p1, p0) } else { fwd };
    let first = normalized(&[chord, arc].concat());
    let rest: Vec<EdgeId> = a.iter().chain(b).copied().filter(|e| first.binary_search(e).is_err()).collect();
    let mut out = vec![first];
    out.extend(trail_circuits(g, &rest));
    if out.len() < 3 {
        return Err(Error::defect("resplit produced fewer than three circuits"));
    }
    Ok(out)
}

/// Two unbalanced circuits meeting in exactly two vertices recombine into
/// two balanced circuits.
fn rebalance(g: &SignedGraph, a: &[EdgeId], b: &[EdgeId], x: VertexId, y: VertexId) -> Result<[Vec<EdgeId>; 2]> {
    let (ca, cb) = (circuit(g, a)?, circuit(g, b)?);
    let (ax, ay) = (ca.position(x).expect("shared"), ca.position(y).expect("shared"));
    let (bx, by) = (cb.position(x).expect("shared"), cb.position(y).expect("shared"));
    let (r1, r2) = (ca.forward_arc(ax, ay), ca.forward_arc(ay, ax));
    let (a1, a2) = (cb.forward_arc(bx, by), cb.forward_arc(by, bx));
    let (u, v) = if (g.neg_count(&r1) + g.neg_count(&a1)).is_multiple_of(2) {
        ([r1, a1].concat(), [r2, a2].concat())
    } else {
        ([r1, a2].concat(), [r2, a1].concat())
    };
    Ok([normalized(&u), normalized(&v)])
}

fn eulerian_cover(g: &SignedGraph, comp: &[EdgeId]) -> Result<OneTwoCover> {
    let mut unb: Vec<Vec<EdgeId>> = Vec::new();
    let mut bal: Vec<Vec<EdgeId>> = Vec::new();
    let mut shorts: Vec<(Vec<EdgeId>, Vec<EdgeId>)> = Vec::new();
    let sort = |c: Vec<EdgeId>, unb: &mut Vec<Vec<EdgeId>>, bal: &mut Vec<Vec<EdgeId>>| {
        if g.neg_count(&c) % 2 == 1 {
            unb.push(c);
        } else {
            bal.push(c);
        }
    };
    for c in trail_circuits(g, comp) {
        sort(c, &mut unb, &mut bal);
    }
    // improve until the unbalanced circuits are pairwise vertex-disjoint
    loop {
        let hit = (0..unb.len()).find_map(|i| {
            (i + 1..unb.len()).find_map(|j| {
                let s = shared(g, &unb[i], &unb[j]);
                (!s.is_empty()).then_some((i, j, s))
            })
        });
        let Some((i, j, s)) = hit else { break };
        let b = unb.remove(j);
        let a = unb.remove(i);
        match s.len() {
            1 => shorts.push((a, b)),
            2 => {
                let [u, v] = rebalance(g, &a, &b, s[0], s[1])?;
                bal.push(u);
                bal.push(v);
            }
            _ => {
                for c in resplit(g, &a, &b)? {
                    sort(c, &mut unb, &mut bal);
                }
            }
        }
    }
    let short_members = |shorts: &[(Vec<EdgeId>, Vec<EdgeId>)]| -> Vec<Vec<EdgeId>> {
        shorts.iter().map(|(a, b)| normalized(&[a.clone(), b.clone()].concat())).collect()
    };
    if unb.is_empty() {
        let Some((a, b)) = shorts.first() else {
            return Ok(OneTwoCover::Decomposition(
                bal.iter().map(|c| circuit(g, c)).collect::<Result<_>>()?,
            ));
        };
        // the decomposition itself covers everything once
        let (c1, c2) = (circuit(g, a)?, circuit(g, b)?);
        let members = [bal.clone(), short_members(&shorts)].concat();
        return Ok(OneTwoCover::CoverWithSpares {
            cover: CoverFamily::from_edge_sets(g, &members)?,
            c1,
            c2,
        });
    }
    if unb.len() % 2 == 1 {
        return Err(Error::defect("odd number of unbalanced circuits in an even host"));
    }
    // join the unbalanced circuits in pairs through a spanning tree of the quotient
    let q = crate::structure::contract_within(g, comp, &unb)?;
    let all_q: Vec<EdgeId> = q.quotient.edge_ids().collect();
    let forest = Forest::bfs(&q.quotient, &all_q);
    let mut joined: Vec<EdgeId> = Vec::new();
    for k in (0..unb.len()).step_by(2) {
        let p = forest
            .path(k, k + 1)
            .ok_or_else(|| Error::defect("quotient of a connected host is disconnected"))?;
        joined = sym_diff(&joined, &p);
    }
    let connectors: Vec<EdgeId> = joined.iter().map(|&qe| q.edge_map[qe]).collect();
    let host: Vec<EdgeId> = unb.iter().flatten().copied().chain(connectors).collect();
    let sub = GBarbellCert::new(g, &host, unb.clone())?;
    let deg = sub.quotient.quotient.degrees_of(&sub.quotient.quotient.edge_ids().collect::<Vec<_>>());
    let leaves: Vec<usize> = (0..unb.len()).filter(|&i| deg[i] == 1).collect();
    if leaves.len() < 2 {
        return Err(Error::defect("joined forest has fewer than two leaf circuits"));
    }
    let mut cover = gcycle_cover(g, &sub)?;
    cover.extend(CoverFamily::from_edge_sets(g, &[bal, short_members(&shorts)].concat())?);
    cover.canonicalize();
    Ok(OneTwoCover::CoverWithSpares {
        cover,
        c1: circuit(g, &unb[leaves[0]])?,
        c2: circuit(g, &unb[leaves[1]])?,
    })
}

fn check(g: &SignedGraph, host: &[EdgeId], out: &OneTwoCover) -> Result<()> {
    let mut inside = vec![false; g.edge_count()];
    for &e in host {
        inside[e] = true;
    }
    match out {
        OneTwoCover::Decomposition(cs) => {
            let mut m = vec![0; g.edge_count()];
            for c in cs {
                if !c.is_balanced_in(g) {
                    return Err(Error::defect("unbalanced circuit in a decomposition"));
                }
                for &e in c.edges() {
                    m[e] += 1;
                }
            }
            if (0..g.edge_count()).any(|e| m[e] != inside[e] as usize) {
                return Err(Error::defect("decomposition does not partition the host"));
            }
        }
        OneTwoCover::CoverWithSpares { cover, c1, c2 } => {
            let m = cover.multiplicities(g.edge_count());
            if (0..g.edge_count()).any(|e| if inside[e] { !(1..=2).contains(&m[e]) } else { m[e] != 0 }) {
                return Err(Error::defect("{1,2}-cover band violated"));
            }
            if c1.is_balanced_in(g) || c2.is_balanced_in(g) {
                return Err(Error::defect("spare circuit is balanced"));
            }
            if c1.edges().iter().any(|e| c2.edges().contains(e)) {
                return Err(Error::defect("spare circuits share an edge"));
            }
            if c1.edges().iter().chain(c2.edges()).any(|&e| m[e] != 1) {
                return Err(Error::defect("spare circuit edge not covered exactly once"));
            }
        }
    }
    Ok(())
}
