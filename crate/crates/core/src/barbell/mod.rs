//! Generalized barbells and their signed-circuit covers.

mod eulerian;
mod gcycle;
mod one_two;

use std::fmt;

use crate::circuit::CoverFamily;
use crate::error::{Error, Result};
use crate::graph::{normalized, EdgeId, SignedGraph};
use crate::structure::{contract_within, Contraction};

pub use eulerian::{eulerian_scdc, gbarbell_scdc};
pub(crate) use eulerian::{closed_trail, splice_loops};
pub use gcycle::gcycle_cover;
pub use one_two::{one_two_cover, OneTwoCover};

/// Host edge set, vertex-disjoint eulerian pieces and the contracted graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GBarbellCert {
    pub host: Vec<EdgeId>,
    pub pieces: Vec<Vec<EdgeId>>,
    pub quotient: Contraction,
    /// Per quotient vertex: negatives inside its piece and boundary size.
    pub parity_log: Vec<(usize, usize)>,
}

impl GBarbellCert {
    pub fn new(g: &SignedGraph, host: &[EdgeId], pieces: Vec<Vec<EdgeId>>) -> Result<Self> {
        let host = normalized(host);
        let pieces: Vec<Vec<EdgeId>> = pieces.iter().map(|p| normalized(p)).collect();
        let quotient = contract_within(g, &host, &pieces)?;
        let parity_log = parity_log(g, &pieces, &quotient);
        Ok(GBarbellCert {
            host,
            pieces,
            quotient,
            parity_log,
        })
    }

    /// Host edges outside every piece.
    pub fn connector_edges(&self) -> Vec<EdgeId> {
        self.quotient.edge_map.clone()
    }
}

fn parity_log(g: &SignedGraph, pieces: &[Vec<EdgeId>], q: &Contraction) -> Vec<(usize, usize)> {
    let deg = q.quotient.degrees_of(&q.quotient.edge_ids().collect::<Vec<_>>());
    (0..q.quotient.vertex_count())
        .map(|x| {
            let neg = if x < pieces.len() { g.neg_count(&pieces[x]) } else { 0 };
            (neg, deg[x])
        })
        .collect()
}

/// Why a generalized-barbell certificate is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GBarbellDiagnostic {
    UnknownEdge(EdgeId),
    PieceOutsideHost(usize),
    PieceNotEulerian(usize),
    PiecesOverlap,
    QuotientCyclic,
    QuotientMismatch,
    Parity {
        vertex: usize,
        negatives: usize,
        boundary: usize,
    },
}

impl fmt::Display for GBarbellDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GBarbellDiagnostic::UnknownEdge(e) => write!(f, "unknown edge e{e}"),
            GBarbellDiagnostic::PieceOutsideHost(i) => write!(f, "piece {i} is not inside the host"),
            GBarbellDiagnostic::PieceNotEulerian(i) => write!(f, "piece {i} is not eulerian"),
            GBarbellDiagnostic::PiecesOverlap => f.write_str("pieces share a vertex"),
            GBarbellDiagnostic::QuotientCyclic => f.write_str("contracted graph has a cycle"),
            GBarbellDiagnostic::QuotientMismatch => f.write_str("stored contraction is stale"),
            GBarbellDiagnostic::Parity {
                vertex,
                negatives,
                boundary,
            } => write!(
                f,
                "parity fails at contracted vertex {vertex}: {negatives} negatives, {boundary} boundary edges"
            ),
        }
    }
}

impl From<GBarbellDiagnostic> for Error {
    fn from(d: GBarbellDiagnostic) -> Self {
        Error::Precondition(format!("not a generalized barbell: {d}"))
    }
}

pub(crate) fn is_eulerian(g: &SignedGraph, edges: &[EdgeId]) -> bool {
    !edges.is_empty()
        && g.is_connected_subset(edges)
        && g.degrees_of(edges).iter().all(|d| d % 2 == 0)
}

pub fn validate_gbarbell(g: &SignedGraph, cert: &GBarbellCert) -> std::result::Result<(), GBarbellDiagnostic> {
    if let Some(&e) = cert.host.iter().find(|&&e| e >= g.edge_count()) {
        return Err(GBarbellDiagnostic::UnknownEdge(e));
    }
    let host = normalized(&cert.host);
    for (i, p) in cert.pieces.iter().enumerate() {
        if let Some(&e) = p.iter().find(|&&e| e >= g.edge_count()) {
            return Err(GBarbellDiagnostic::UnknownEdge(e));
        }
        if p.iter().any(|e| host.binary_search(e).is_err()) {
            return Err(GBarbellDiagnostic::PieceOutsideHost(i));
        }
        if normalized(p).len() != p.len() || !is_eulerian(g, p) {
            return Err(GBarbellDiagnostic::PieceNotEulerian(i));
        }
    }
    let q = contract_within(g, &host, &cert.pieces).map_err(|_| GBarbellDiagnostic::PiecesOverlap)?;
    if q != cert.quotient {
        return Err(GBarbellDiagnostic::QuotientMismatch);
    }
    if !q.is_acyclic() {
        return Err(GBarbellDiagnostic::QuotientCyclic);
    }
    for (x, (negatives, boundary)) in parity_log(g, &cert.pieces, &q).into_iter().enumerate() {
        if negatives % 2 != boundary % 2 {
            return Err(GBarbellDiagnostic::Parity {
                vertex: x,
                negatives,
                boundary,
            });
        }
    }
    Ok(())
}

/// Checks that `fam` covers every host edge exactly twice and nothing else.
pub(crate) fn check_double_cover(g: &SignedGraph, fam: &CoverFamily, host: &[EdgeId]) -> Result<()> {
    let m = fam.multiplicities(g.edge_count());
    let mut want = vec![0; g.edge_count()];
    for &e in host {
        want[e] = 2;
    }
    if let Some(e) = (0..g.edge_count()).find(|&e| m[e] != want[e]) {
        return Err(Error::defect(format!(
            "double cover has multiplicity {} on e{e}",
            m[e]
        )));
    }
    Ok(())
}
