/// Size caps for the exhaustive routines.
///
/// `SGCOVER_NEGATIVENESS_MAX_N` and `SGCOVER_ORACLE_MAX_E` override the
/// exact-negativeness vertex cap and the signed oracle edge cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest component handled by the exact negativeness search.
    pub negativeness_vertices: usize,
    /// Largest component handled by cut enumeration.
    pub cut_vertices: usize,
    /// Largest edge count for the definitional s-bridgeless check.
    pub s_bridgeless_edges: usize,
    pub signed_oracle_edges: usize,
    pub unsigned_oracle_edges: usize,
    /// Cap on enumerated circuits before giving up.
    pub max_circuits: usize,
    /// Cap on branch-and-bound nodes.
    pub max_search_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            negativeness_vertices: 20,
            cut_vertices: 14,
            s_bridgeless_edges: 24,
            signed_oracle_edges: 14,
            unsigned_oracle_edges: 18,
            max_circuits: 500_000,
            max_search_nodes: 200_000_000,
        }
    }
}

impl Limits {
    pub fn from_env() -> Self {
        let mut l = Limits::default();
        if let Some(v) = read_env("SGCOVER_NEGATIVENESS_MAX_N") {
            l.negativeness_vertices = v;
        }
        if let Some(v) = read_env("SGCOVER_ORACLE_MAX_E") {
            l.signed_oracle_edges = v;
        }
        l
    }
}

fn read_env(key: &str) -> Option<usize> {
    std::env::var(key).ok()?.trim().parse().ok()
}
