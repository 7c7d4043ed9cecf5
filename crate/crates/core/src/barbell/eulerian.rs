//! Double covers of even-negative eulerian graphs and of generalized barbells.
//!
//! Both constructions run on a private working graph so that negative loops
//! can be attached during surgery; those loops are spliced away before any
//! member leaves this module.

use crate::circuit::{Circuit, CoverFamily};
use crate::error::{Error, Result};
use crate::graph::{normalized, EdgeId, Sign, SignedGraph, VertexId};

use super::{check_double_cover, is_eulerian, validate_gbarbell, GBarbellCert};

/// Closed eulerian trail by Hierholzer's method, started at the smallest
/// vertex. `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % m]`.
pub(crate) fn closed_trail(w: &SignedGraph, edges: &[EdgeId]) -> (Vec<VertexId>, Vec<EdgeId>) {
    let adj = w.adjacency_of(edges);
    let Some(start) = (0..w.vertex_count()).find(|&v| !adj[v].is_empty()) else {
        return (Vec::new(), Vec::new());
    };
    let mut used = vec![false; w.edge_count()];
    let mut ptr = vec![0; w.vertex_count()];
    let mut stack: Vec<(VertexId, Option<EdgeId>)> = vec![(start, None)];
    let mut out = Vec::with_capacity(edges.len() + 1);
    while let Some(&(v, _)) = stack.last() {
        while ptr[v] < adj[v].len() && used[adj[v][ptr[v]].0] {
            ptr[v] += 1;
        }
        if let Some(&(e, x)) = adj[v].get(ptr[v]) {
            used[e] = true;
            stack.push((x, Some(e)));
        } else {
            out.push(stack.pop().expect("non-empty"));
        }
    }
    out.reverse();
    let vertices = out[..out.len() - 1].iter().map(|p| p.0).collect();
    let trail = out[1..].iter().map(|p| p.1.expect("entry edge")).collect();
    (vertices, trail)
}

fn prefix_negatives(w: &SignedGraph, es: &[EdgeId]) -> Vec<usize> {
    let mut p = vec![0; es.len() + 1];
    for (i, &e) in es.iter().enumerate() {
        p[i + 1] = p[i] + w.is_negative(e) as usize;
    }
    p
}

/// First closed sub-trail with an even negative count.
fn even_split(w: &SignedGraph, vs: &[VertexId], es: &[EdgeId]) -> Option<(usize, usize)> {
    let p = prefix_negatives(w, es);
    let m = es.len();
    (0..m).find_map(|i| {
        (i + 1..m)
            .find(|&j| vs[i] == vs[j] && (p[j] - p[i]).is_multiple_of(2))
            .map(|j| (i, j))
    })
}

/// Replaces the two members through loop `a` and the two through loop `b`
/// by their pairwise unions, dropping both loops and adding `bridge`.
pub(crate) fn splice_loops(
    fam: &mut Vec<Vec<EdgeId>>,
    a: EdgeId,
    b: EdgeId,
    bridge: Option<EdgeId>,
) -> Result<()> {
    let with = |fam: &Vec<Vec<EdgeId>>, l: EdgeId| -> Vec<usize> {
        (0..fam.len()).filter(|&i| fam[i].contains(&l)).collect()
    };
    let (ia, ib) = (with(fam, a), with(fam, b));
    if ia.len() != 2 || ib.len() != 2 || ia.iter().any(|i| ib.contains(i)) {
        return Err(Error::defect(format!(
            "loop splice expects two members per loop, found {} and {}",
            ia.len(),
            ib.len()
        )));
    }
    let mut merged = Vec::new();
    for k in 0..2 {
        let mut m: Vec<EdgeId> = fam[ia[k]].iter().chain(&fam[ib[k]]).copied().filter(|&e| e != a && e != b).collect();
        m.extend(bridge);
        merged.push(normalized(&m));
    }
    let mut drop: Vec<usize> = ia.into_iter().chain(ib).collect();
    drop.sort_unstable();
    for i in drop.into_iter().rev() {
        fam.swap_remove(i);
    }
    fam.extend(merged);
    Ok(())
}

/// Double cover of a connected eulerian edge set with an even negative
/// count inside the working graph `w`. May append loops to `w`; every
/// returned member is free of them.
pub(crate) fn solve_eulerian(w: &mut SignedGraph, edges: &[EdgeId]) -> Result<Vec<Vec<EdgeId>>> {
    let (mut vs, mut es) = closed_trail(w, edges);
    let m = es.len();
    if m != edges.len() {
        return Err(Error::defect("eulerian trail misses edges"));
    }
    let mut rerouted = false;
    loop {
        if let Some((i, j)) = even_split(w, &vs, &es) {
            let inner: Vec<EdgeId> = es[i..j].to_vec();
            let outer: Vec<EdgeId> = es[..i].iter().chain(&es[j..]).copied().collect();
            let mut fam = solve_eulerian(w, &inner)?;
            fam.extend(solve_eulerian(w, &outer)?);
            return Ok(fam);
        }
        if rerouted {
            return Err(Error::defect("rerouted trail has no even split"));
        }
        let pair = (0..m).find_map(|i| {
            (i + 2..m)
                .find(|&j| j - i + 2 <= m && vs[i] == vs[j])
                .map(|j| (i, j))
        });
        let Some((i, j)) = pair else {
            return base_case(w, &vs, &es);
        };
        let inner: Vec<EdgeId> = es[i..j].to_vec();
        let outer: Vec<EdgeId> = es[..i].iter().chain(&es[j..]).copied().collect();
        let vin = w.vertices_of(&inner);
        let vout = w.vertices_of(&outer);
        let shared = vin.iter().filter(|v| vout.binary_search(v).is_ok()).count();
        if shared == 1 {
            let u = vs[i];
            let la = w.add_edge(u, u, Sign::Negative)?;
            let lb = w.add_edge(u, u, Sign::Negative)?;
            let mut fam = solve_eulerian(w, &[inner, vec![la]].concat())?;
            fam.extend(solve_eulerian(w, &[outer, vec![lb]].concat())?);
            splice_loops(&mut fam, la, lb, None)?;
            return Ok(fam);
        }
        // reverse the sub-trail between the two visits; the new trail has an even split
        es[i..j].reverse();
        vs[i + 1..j].reverse();
        rerouted = true;
    }
}

/// Trails in which only loops repeat a vertex: a circuit (or a single
/// vertex) carrying negative loops, at most one per vertex.
fn base_case(w: &SignedGraph, vs: &[VertexId], es: &[EdgeId]) -> Result<Vec<Vec<EdgeId>>> {
    let (loops, core): (Vec<EdgeId>, Vec<EdgeId>) = es.iter().partition(|&&e| w.edge(e).is_loop());
    if let [e] = es {
        if !w.is_negative(*e) {
            return Ok(vec![vec![*e], vec![*e]]);
        }
    }
    if loops.iter().any(|&l| !w.is_negative(l)) {
        return Err(Error::defect("positive loop reached the base case"));
    }
    if core.is_empty() {
        if loops.len() % 2 == 1 || vs.iter().any(|&v| v != vs[0]) {
            return Err(Error::defect("odd loop bouquet"));
        }
        let mut fam = Vec::new();
        for pair in loops.chunks(2) {
            fam.push(normalized(pair));
            fam.push(normalized(pair));
        }
        return Ok(fam);
    }
    let c = Circuit::from_edges(w, &core).map_err(|d| Error::defect(format!("core is not a circuit: {d}")))?;
    let mut at: Vec<(usize, EdgeId)> = loops
        .iter()
        .map(|&l| {
            c.position(w.edge(l).u)
                .map(|p| (p, l))
                .ok_or_else(|| Error::defect("loop off the core circuit"))
        })
        .collect::<Result<_>>()?;
    at.sort_unstable();
    if at.windows(2).any(|p| p[0].0 == p[1].0) {
        return Err(Error::defect("two loops at one core vertex"));
    }
    let k = at.len();
    let core_set = c.edge_set();
    let barbell = |a: usize, b: usize| -> Vec<EdgeId> {
        let mut m = c.forward_arc(at[a].0, at[b].0);
        m.push(at[a].1);
        m.push(at[b].1);
        normalized(&m)
    };
    let fam = match k {
        0 => vec![core_set.clone(), core_set],
        1 => {
            let m = normalized(&[core_set, vec![at[0].1]].concat());
            vec![m.clone(), m]
        }
        _ if k.is_multiple_of(2) => {
            let mut fam = vec![core_set];
            fam.extend((0..k).map(|i| barbell(i, (i + 1) % k)));
            fam
        }
        // odd: every loop reaches the loop two steps ahead, winding twice
        _ => (0..k).map(|i| barbell(i, (i + 2) % k)).collect(),
    };
    Ok(fam)
}

fn lift(local: &[Vec<EdgeId>], map: &[EdgeId]) -> Result<Vec<Vec<EdgeId>>> {
    local
        .iter()
        .map(|m| {
            m.iter()
                .map(|&e| map.get(e).copied().ok_or_else(|| Error::defect("synthetic loop left in a member")))
                .collect::<Result<Vec<_>>>()
                .map(|v| normalized(&v))
        })
        .collect()
}

/// Signed-circuit double cover of a connected eulerian edge set with an even
/// number of negative edges.
pub fn eulerian_scdc(g: &SignedGraph, b: &[EdgeId]) -> Result<CoverFamily> {
    g.check_edges(b)?;
    let b = normalized(b);
    if !is_eulerian(g, &b) {
        return Err(Error::pre("edge set is not connected and even"));
    }
    if g.neg_count(&b) % 2 == 1 {
        return Err(Error::pre("edge set has an odd number of negative edges"));
    }
    let sub = g.subgraph(&b);
    let mut w = sub.graph.clone();
    let local: Vec<EdgeId> = (0..b.len()).collect();
    let fam = solve_eulerian(&mut w, &local)?;
    let fam = CoverFamily::from_edge_sets(g, &lift(&fam, &sub.edge_ids)?)?;
    check_double_cover(g, &fam, &b)?;
    Ok(fam)
}

/// Signed-circuit double cover of a generalized barbell: every connector edge
/// is replaced by a pair of negative loops, the pieces are covered, and the
/// loop pairs are spliced back in reverse order.
pub fn gbarbell_scdc(g: &SignedGraph, cert: &GBarbellCert) -> Result<CoverFamily> {
    validate_gbarbell(g, cert)?;
    let sub = g.subgraph(&cert.host);
    let mut w = sub.graph.clone();
    let mut local_of = vec![usize::MAX; g.edge_count()];
    for (i, &e) in sub.edge_ids.iter().enumerate() {
        local_of[e] = i;
    }
    let mut pieces: Vec<Vec<EdgeId>> = cert
        .pieces
        .iter()
        .map(|p| p.iter().map(|&e| local_of[e]).collect())
        .collect();
    let mut piece_at: Vec<Option<usize>> = vec![None; w.vertex_count()];
    for (i, p) in pieces.iter().enumerate() {
        for v in w.vertices_of(p) {
            piece_at[v] = Some(i);
        }
    }
    let mut cuts = Vec::new();
    for &e in &cert.connector_edges() {
        let le = local_of[e];
        let ed = *w.edge(le);
        let mut attach = |x: VertexId, w: &mut SignedGraph| -> Result<EdgeId> {
            let l = w.add_edge(x, x, Sign::Negative)?;
            match piece_at[x] {
                Some(i) => pieces[i].push(l),
                None => {
                    piece_at[x] = Some(pieces.len());
                    pieces.push(vec![l]);
                }
            }
            Ok(l)
        };
        let lu = attach(ed.u, &mut w)?;
        let lv = attach(ed.v, &mut w)?;
        cuts.push((le, lu, lv));
    }
    let mut fam = Vec::new();
    for p in &pieces {
        if w.neg_count(p) % 2 == 1 || !is_eulerian(&w, p) {
            return Err(Error::defect("loop-augmented piece is not even eulerian"));
        }
        fam.extend(solve_eulerian(&mut w, p)?);
    }
    for &(e, lu, lv) in cuts.iter().rev() {
        splice_loops(&mut fam, lu, lv, Some(e))?;
    }
    let fam = CoverFamily::from_edge_sets(g, &lift(&fam, &sub.edge_ids)?)?;
    check_double_cover(g, &fam, &cert.host)?;
    Ok(fam)
}
