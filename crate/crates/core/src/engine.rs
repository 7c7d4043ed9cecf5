//! End-to-end cover pipeline, the bound calculator, pruning, the cover
//! verifier and the exact signed oracle.

use std::collections::BTreeMap;

pub use num_rational::Rational64;

use crate::circuit::{CircuitDiagnostic, CoverFamily, SignedCircuit};
use crate::decomp::pair_decomposition;
use crate::enumerate::{all_signed_circuits, mask_to_edges};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, SignedGraph, VertexId};
use crate::limits::Limits;
use crate::multicover::min_multicover;
use crate::structure::is_s_bridgeless;
use crate::switching::normalize;
use crate::unsigned::{circuit_cover_bridgeless, prune_sets};

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn int(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

/// The general and the even-case upper bounds with the corollary and the
/// chained form for a given multiplicity bound `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub e: i64,
    pub v: i64,
    pub eps_n: i64,
    pub k: i64,
    pub z1: Rational64,
    pub z2: Rational64,
    pub bound_general: Rational64,
    pub bound_even: Rational64,
    pub corollary_bound: Rational64,
    pub chained_bound: Rational64,
}

/// min(5/3·E + kV + (k − 5/3)ε − (3k − 2), E + (k+1)V + (k−1)ε − (3k − 1))
pub fn chained_bound(e: i64, v: i64, eps_n: i64, k: i64) -> Rational64 {
    let a = q(5 * e, 3) + int(k * v) + (int(k) - q(5, 3)) * int(eps_n) - int(3 * k - 2);
    let b = int(e + (k + 1) * v + (k - 1) * eps_n - (3 * k - 1));
    a.min(b)
}

pub fn theorem_bounds(e: i64, v: i64, eps_n: i64, k: i64) -> Result<BoundReport> {
    if eps_n < 0 || e < 0 || v < 0 {
        return Err(Error::pre("negative size"));
    }
    if k != 2 && k != 3 {
        return Err(Error::pre("k must be 2 or 3"));
    }
    let z1 = (q(2 * e, 3) + q(4 * eps_n, 3) - int(7)).min(int(v + 2 * eps_n - 8));
    let z2 = (q(2 * e, 3) + q(eps_n, 3) - int(4)).min(int(v + eps_n - 5));
    let bound_general = int(e + 3 * v) + z1;
    let bound_even = int(e + 2 * v) + z2;
    debug_assert_eq!(chained_bound(e, v, eps_n, 3), bound_general);
    debug_assert_eq!(chained_bound(e, v, eps_n, 2), bound_even);
    Ok(BoundReport {
        e,
        v,
        eps_n,
        k,
        z1,
        z2,
        bound_general,
        bound_even,
        corollary_bound: q(14 * e, 3) - q(5 * eps_n, 3) - int(4),
        chained_bound: chained_bound(e, v, eps_n, k),
    })
}

/// Inclusion-minimal subfamily covering the same edges as `f` covers in
/// `target`; every kept member then has an edge it alone covers.
pub fn prune_cover(g: &SignedGraph, f: &CoverFamily, target: &[EdgeId]) -> Result<CoverFamily> {
    let m = f.multiplicities(g.edge_count());
    if let Some(&e) = target.iter().find(|&&e| m[e] == 0) {
        return Err(Error::NotACover(format!("e{e} is not covered")));
    }
    let mut sets = f.edge_sets();
    prune_sets(&mut sets, g.edge_count());
    CoverFamily::from_edge_sets(g, &sets)
}

/// k·|E(G2)| − 2(k − 1)
pub fn pruned_length_bound(g2_edges: usize, k: usize) -> i64 {
    (k * g2_edges) as i64 - 2 * (k as i64 - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Negativeness zero: a plain circuit cover.
    Unsigned,
    /// Unsigned bridgeless part plus a pruned signed part.
    Pair { k: usize },
}

/// Length data of the pruned signed part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PruneCheck {
    pub g2_edges: usize,
    pub k: usize,
    pub pruned_length: usize,
    pub bound: i64,
    /// Whether the pruned length equals |E(G2)|.
    pub equality: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperCover {
    /// Verified cover of the input graph, positive loops included.
    pub cover: CoverFamily,
    pub positive_loops: Vec<EdgeId>,
    pub length: usize,
    /// Length without the positive loops; this is what the bounds govern.
    pub stripped_length: usize,
    pub switch_set: Vec<VertexId>,
    pub branch: Branch,
    /// Bounds of the loop-free graph, with `k` of the branch taken.
    pub bounds: BoundReport,
    pub prune: Option<PruneCheck>,
    pub unsigned_length: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CoverOptions {
    /// Skip the exhaustive s-bridgeless check.
    pub assume_s_bridgeless: bool,
}

/// Signed-circuit cover of an s-bridgeless graph meeting the chained bound.
pub fn scc_upper_cover(g: &SignedGraph, limits: &Limits, opts: CoverOptions) -> Result<UpperCover> {
    let positive_loops = g.positive_loops();
    let kept: Vec<EdgeId> = g.edge_ids().filter(|e| positive_loops.binary_search(e).is_err()).collect();
    let stripped = g.spanning_subgraph(&kept);
    let h = &stripped.graph;
    if !opts.assume_s_bridgeless && h.edge_count() <= limits.s_bridgeless_edges {
        let report = is_s_bridgeless(h, limits)?;
        if let Some(&e) = report.uncovered().first() {
            return Err(Error::NotSBridgeless(stripped.edge_ids[e]));
        }
    }
    let (h, cert) = normalize(h, limits)?;
    let eps = cert.epsilon_n;
    let (e_count, v_count) = (h.edge_count() as i64, h.vertex_count() as i64);

    let mut sets: Vec<Vec<EdgeId>>;
    let branch;
    let mut prune = None;
    let unsigned_length;
    if eps == 0 {
        let r = circuit_cover_bridgeless(&h, limits)?;
        unsigned_length = r.length;
        sets = r.cover.edge_sets();
        branch = Branch::Unsigned;
    } else {
        let pd = pair_decomposition(&h)?;
        let g1 = h.spanning_subgraph(&pd.g1_edges);
        sets = Vec::new();
        unsigned_length = if pd.g1_edges.is_empty() {
            0
        } else {
            let r = circuit_cover_bridgeless(&g1.graph, limits)?;
            sets.extend(g1.lift_family(&r.cover.edge_sets()));
            r.length
        };
        let pruned = prune_cover(&h, &pd.f2, &pd.g2_edges)?;
        let check = PruneCheck {
            g2_edges: pd.g2_edges.len(),
            k: pd.k,
            pruned_length: pruned.length(),
            bound: pruned_length_bound(pd.g2_edges.len(), pd.k),
            equality: pruned.length() == pd.g2_edges.len(),
        };
        if check.pruned_length as i64 > check.bound {
            return Err(Error::BoundViolation(format!(
                "pruned signed part has length {} above {}",
                check.pruned_length, check.bound
            )));
        }
        sets.extend(pruned.edge_sets());
        prune = Some(check);
        branch = Branch::Pair { k: pd.k };
    }
    let k = match branch {
        Branch::Pair { k } => k as i64,
        Branch::Unsigned => 3,
    };
    let bounds = theorem_bounds(e_count, v_count, eps as i64, k)?;
    let stripped_length: usize = sets.iter().map(Vec::len).sum();
    let len_q = int(stripped_length as i64);
    let limit = match branch {
        Branch::Unsigned => q(5 * e_count, 3).min(int((e_count + v_count - 1).max(0))),
        Branch::Pair { .. } => bounds.chained_bound,
    };
    if len_q > limit {
        return Err(Error::BoundViolation(format!("cover length {stripped_length} exceeds {limit}")));
    }

    let mut all_sets: Vec<Vec<EdgeId>> = sets.iter().map(|s| stripped.lift_edges(s)).collect();
    all_sets.extend(positive_loops.iter().map(|&l| vec![l]));
    let cover = CoverFamily::from_edge_sets(g, &all_sets)?;
    let report = verify_cover(g, &cover, None);
    if !report.valid {
        return Err(Error::defect(format!("pipeline output failed verification: {}", report.summary())));
    }
    Ok(UpperCover {
        length: cover.length(),
        cover,
        positive_loops,
        stripped_length,
        switch_set: cert.optimal_switch,
        branch,
        bounds,
        prune,
        unsigned_length,
    })
}

/// Outcome of checking a family against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub valid: bool,
    pub member_issues: Vec<(usize, CircuitDiagnostic)>,
    pub multiplicities: Vec<usize>,
    pub uncovered: Vec<EdgeId>,
    /// Edges whose multiplicity falls outside the allowed set.
    pub outside_allowed: Vec<EdgeId>,
    pub length: usize,
}

impl CoverReport {
    pub fn summary(&self) -> String {
        if self.valid {
            return format!("valid cover, length {}", self.length);
        }
        let mut parts = Vec::new();
        for (i, d) in &self.member_issues {
            parts.push(format!("member {i}: {d}"));
        }
        if !self.uncovered.is_empty() {
            let es: Vec<String> = self.uncovered.iter().map(|e| format!("e{e}")).collect();
            parts.push(format!("uncovered: {}", es.join(" ")));
        }
        if !self.outside_allowed.is_empty() {
            let es: Vec<String> = self.outside_allowed.iter().map(|e| format!("e{e}")).collect();
            parts.push(format!("multiplicity not allowed: {}", es.join(" ")));
        }
        parts.join("; ")
    }
}

/// Checks every member against `g`, that every edge is covered, and, when
/// `allowed` is given, that every multiplicity lies in it.
pub fn verify_cover(g: &SignedGraph, f: &CoverFamily, allowed: Option<&[usize]>) -> CoverReport {
    let mut member_issues = Vec::new();
    let mut multiplicities = vec![0; g.edge_count()];
    for (i, m) in f.members.iter().enumerate() {
        if let Err(d) = m.check(g) {
            member_issues.push((i, d));
            continue;
        }
        for e in m.edges() {
            multiplicities[e] += 1;
        }
    }
    let uncovered: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| multiplicities[e] == 0).collect();
    let outside_allowed: Vec<EdgeId> = match allowed {
        Some(k) => (0..g.edge_count()).filter(|&e| !k.contains(&multiplicities[e])).collect(),
        None => Vec::new(),
    };
    CoverReport {
        valid: member_issues.is_empty() && uncovered.is_empty() && outside_allowed.is_empty(),
        member_issues,
        multiplicities,
        uncovered,
        outside_allowed,
        length: f.length(),
    }
}

/// Multiplicity histogram of a report.
pub fn histogram(report: &CoverReport) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &m in &report.multiplicities {
        *h.entry(m).or_insert(0) += 1;
    }
    h
}

/// Minimum-length signed-circuit cover, `None` when some edge lies in no
/// signed circuit. Solved per component.
pub fn exact_scc_signed(g: &SignedGraph, limits: &Limits) -> Result<Option<CoverFamily>> {
    if g.edge_count() > limits.signed_oracle_edges {
        return Err(Error::SizeLimit {
            what: "edge count for the exact signed cover",
            actual: g.edge_count(),
            limit: limits.signed_oracle_edges,
        });
    }
    let all: Vec<EdgeId> = g.edge_ids().collect();
    let mut sets = Vec::new();
    for comp in g.edge_components(&all) {
        let sub = g.subgraph(&comp);
        let cands = all_signed_circuits(&sub.graph, limits.max_circuits)?;
        let target = (1u64 << comp.len()) - 1;
        let Some(pick) = min_multicover(&cands, target, limits.max_search_nodes)? else {
            return Ok(None);
        };
        sets.extend(pick.into_iter().map(|m| sub.lift_edges(&mask_to_edges(m))));
    }
    CoverFamily::from_edge_sets(g, &sets).map(Some)
}

/// Members in a form suitable for display: kind and edge list.
pub fn describe(sc: &SignedCircuit) -> String {
    let es: Vec<String> = sc.edges().iter().map(|e| format!("e{e}")).collect();
    format!("{} {}", sc.kind(), es.join(" "))
}
