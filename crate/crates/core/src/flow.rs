//! Unit-capacity max flow used to find disjoint paths.

use std::collections::VecDeque;

use crate::graph::EdgeId;

#[derive(Debug, Clone)]
pub(crate) struct FlowNet {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
    orig: Vec<i32>,
    tag: Vec<Option<EdgeId>>,
}

impl FlowNet {
    pub fn new(nodes: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            orig: Vec::new(),
            tag: Vec::new(),
        }
    }

    pub fn arc(&mut self, a: usize, b: usize, cap: i32, tag: Option<EdgeId>) {
        self.pair(a, b, cap, 0, tag);
    }

    /// Unit edge usable in either direction; opposite flows cancel.
    pub fn undirected(&mut self, a: usize, b: usize, tag: Option<EdgeId>) {
        self.pair(a, b, 1, 1, tag);
    }

    fn pair(&mut self, a: usize, b: usize, forward: i32, backward: i32, tag: Option<EdgeId>) {
        for (x, y, c) in [(a, b, forward), (b, a, backward)] {
            self.adj[x].push(self.to.len());
            self.to.push(y);
            self.cap.push(c);
            self.orig.push(c);
            self.tag.push(tag);
        }
    }

    /// Edmonds–Karp, stopping once `limit` units are routed.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: i32) -> i32 {
        let mut total = 0;
        while total < limit {
            let mut prev = vec![usize::MAX; self.adj.len()];
            let mut seen = vec![false; self.adj.len()];
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                if x == t {
                    break;
                }
                for &a in &self.adj[x] {
                    let y = self.to[a];
                    if self.cap[a] > 0 && !seen[y] {
                        seen[y] = true;
                        prev[y] = a;
                        q.push_back(y);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut y = t;
            while y != s {
                let a = prev[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.to[a ^ 1];
            }
            total += 1;
        }
        total
    }

    /// Splits the routed flow into `s`-`t` walks, returned as node sequences
    /// paired with the tags of the arcs used. Cycles are cut out.
    pub fn paths(&self, s: usize, t: usize) -> Vec<(Vec<usize>, Vec<Option<EdgeId>>)> {
        let mut flow: Vec<i32> = (0..self.to.len())
            .map(|a| (self.orig[a] - self.cap[a]).max(0))
            .collect();
        let mut out = Vec::new();
        loop {
            let mut nodes = vec![s];
            let mut tags: Vec<Option<EdgeId>> = Vec::new();
            let mut x = s;
            while x != t {
                let Some(&a) = self.adj[x].iter().find(|&&a| flow[a] > 0) else {
                    break;
                };
                flow[a] -= 1;
                x = self.to[a];
                if let Some(pos) = nodes.iter().position(|&n| n == x) {
                    nodes.truncate(pos + 1);
                    tags.truncate(pos);
                } else {
                    nodes.push(x);
                    tags.push(self.tag[a]);
                }
            }
            if x != t {
                break;
            }
            out.push((nodes, tags));
        }
        out
    }
}
