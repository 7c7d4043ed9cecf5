//! Minimum-length set multicover over edge bitmasks by branch and bound.

use crate::error::{Error, Result};

struct Search<'a> {
    cands: &'a [u64],
    /// candidate indices through each edge, shortest first
    by_edge: Vec<Vec<usize>>,
    best: u32,
    best_pick: Option<Vec<usize>>,
    nodes: u64,
    max_nodes: u64,
}

impl Search<'_> {
    /// Each uncovered edge pays at least the cheapest per-edge share of a
    /// candidate through it.
    fn lower_bound(&self, uncovered: u64) -> u32 {
        let mut total = 0.0f64;
        let mut rest = uncovered;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let share = self.by_edge[e]
                .iter()
                .map(|&c| {
                    let m = self.cands[c];
                    m.count_ones() as f64 / (m & uncovered).count_ones() as f64
                })
                .fold(f64::INFINITY, f64::min);
            total += share;
        }
        (total - 1e-9).ceil() as u32
    }

    fn go(&mut self, uncovered: u64, cost: u32, pick: &mut Vec<usize>) -> Result<()> {
        if uncovered == 0 {
            if cost < self.best {
                self.best = cost;
                self.best_pick = Some(pick.clone());
            }
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::Budget(format!("more than {} search nodes", self.max_nodes)));
        }
        if cost + self.lower_bound(uncovered) >= self.best {
            return Ok(());
        }
        let mut rest = uncovered;
        let mut branch = usize::MAX;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if branch == usize::MAX || self.by_edge[e].len() < self.by_edge[branch].len() {
                branch = e;
            }
        }
        for i in 0..self.by_edge[branch].len() {
            let c = self.by_edge[branch][i];
            pick.push(c);
            self.go(uncovered & !self.cands[c], cost + self.cands[c].count_ones(), pick)?;
            pick.pop();
        }
        Ok(())
    }
}

/// Cheapest multiset of candidates whose union contains `target`, cost being
/// total popcount. `Ok(None)` when some target edge lies in no candidate.
pub(crate) fn min_multicover(cands: &[u64], target: u64, max_nodes: u64) -> Result<Option<Vec<u64>>> {
    let mut by_edge = vec![Vec::new(); 64];
    for (i, &m) in cands.iter().enumerate() {
        let mut rest = m & target;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            by_edge[e].push(i);
        }
    }
    let mut rest = target;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if by_edge[e].is_empty() {
            return Ok(None);
        }
    }
    for list in &mut by_edge {
        list.sort_by_key(|&c| (cands[c].count_ones(), cands[c]));
    }
    let mut s = Search {
        cands,
        by_edge,
        best: u32::MAX,
        best_pick: None,
        nodes: 0,
        max_nodes,
    };
    // greedy incumbent
    let mut uncovered = target;
    let mut greedy = Vec::new();
    let mut cost = 0;
    while uncovered != 0 {
        let e = uncovered.trailing_zeros() as usize;
        let c = *s.by_edge[e]
            .iter()
            .min_by(|&&a, &&b| {
                let ra = cands[a].count_ones() as f64 / (cands[a] & uncovered).count_ones() as f64;
                let rb = cands[b].count_ones() as f64 / (cands[b] & uncovered).count_ones() as f64;
                ra.total_cmp(&rb)
            })
            .expect("nonempty");
        greedy.push(c);
        cost += cands[c].count_ones();
        uncovered &= !cands[c];
    }
    s.best = cost;
    s.best_pick = Some(greedy);
    s.go(target, 0, &mut Vec::new())?;
    let mut out: Vec<u64> = s.best_pick.expect("incumbent").into_iter().map(|c| cands[c]).collect();
    out.sort_unstable();
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(cands: &[u64], target: u64) -> Option<u32> {
        // each candidate used at most once suffices for a minimum cover
        let n = cands.len();
        (0u32..1 << n)
            .filter(|s| (0..n).filter(|i| s >> i & 1 == 1).fold(0, |m, i| m | cands[i]) & target == target)
            .map(|s| (0..n).filter(|i| s >> i & 1 == 1).map(|i| cands[i].count_ones()).sum())
            .min()
    }

    #[test]
    fn matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..10);
            let cands: Vec<u64> = (0..n).map(|_| rng.gen_range(1..256u64)).collect();
            let target = 0xff;
            let got = min_multicover(&cands, target, 1_000_000)
                .unwrap()
                .map(|p| p.iter().map(|m| m.count_ones()).sum::<u32>());
            assert_eq!(got, brute(&cands, target));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let cands: Vec<u64> = (0..20).map(|i| 0b11u64 << i | 1).collect();
        assert!(matches!(min_multicover(&cands, (1 << 21) - 1, 3), Err(Error::Budget(_))));
    }
}
