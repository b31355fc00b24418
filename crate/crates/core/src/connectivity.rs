//! Vertex connectivity, minimum vertex cuts and Menger fans.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Vertex connectivity together with a minimum cut.
///
/// Complete graphs report `n - 1` and disconnected graphs `0`; in both cases
/// the cut is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutResult {
    pub connectivity: usize,
    pub cut: VertexSet,
}

/// Residual network with paired forward/backward arcs.
struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    orig: Vec<u32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            orig: Vec::new(),
        }
    }

    fn arc(&mut self, a: usize, b: usize, c: u32) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.orig.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
        self.orig.push(0);
    }

    /// One BFS augmentation of a unit of flow. Returns false if none exists.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut prev = vec![usize::MAX; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(a) = q.pop_front() {
            for &e in &self.head[a] {
                let b = self.to[e];
                if self.cap[e] > 0 && !seen[b] {
                    seen[b] = true;
                    prev[b] = e;
                    if b == t {
                        let mut cur = t;
                        while cur != s {
                            let e = prev[cur];
                            self.cap[e] -= 1;
                            self.cap[e ^ 1] += 1;
                            cur = self.to[e ^ 1];
                        }
                        return true;
                    }
                    q.push_back(b);
                }
            }
        }
        false
    }

    /// Pushes flow until `limit` units are routed or no augmenting path remains.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut f = 0;
        while f < limit && self.augment(s, t) {
            f += 1;
        }
        f
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            for &e in &self.head[a] {
                let b = self.to[e];
                if self.cap[e] > 0 && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen
    }

    fn flow_on(&self, e: usize) -> u32 {
        self.orig[e] - self.cap[e]
    }
}

#[inline]
fn vin(v: usize) -> usize {
    2 * v
}

#[inline]
fn vout(v: usize) -> usize {
    2 * v + 1
}

/// Split network: every vertex except `open` gets a unit arc `in -> out`.
fn split_network(g: &Graph, open: &[usize], extra_nodes: usize) -> FlowNet {
    let n = g.n();
    let mut net = FlowNet::new(2 * n + extra_nodes);
    for v in 0..n {
        let c = if open.contains(&v) { n as u32 } else { 1 };
        net.arc(vin(v), vout(v), c);
    }
    for v in 0..n {
        for &w in g.neighbors(v) {
            net.arc(vout(v), vin(w), n as u32);
        }
    }
    net
}

/// Minimum `s`-`t` vertex separator for non-adjacent `s`, `t`, or `None` when more
/// than `limit` disjoint paths exist.
pub fn min_separator(g: &Graph, s: usize, t: usize, limit: usize) -> Option<VertexSet> {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = split_network(g, &[s, t], 0);
    let f = net.max_flow(vout(s), vin(t), limit + 1);
    if f > limit {
        return None;
    }
    let r = net.reachable(vout(s));
    Some((0..g.n()).filter(|&v| r[vin(v)] && !r[vout(v)]).collect())
}

/// Vertex connectivity and the lexicographically smallest minimum cut found by
/// scanning non-adjacent pairs `(s, t)`, `s < t`, in increasing order.
pub fn vertex_connectivity(g: &Graph) -> CutResult {
    let n = g.n();
    if g.is_complete() {
        return CutResult {
            connectivity: n.saturating_sub(1),
            cut: VertexSet::new(),
        };
    }
    if !g.is_connected() {
        return CutResult {
            connectivity: 0,
            cut: VertexSet::new(),
        };
    }
    let mut best = n - 1;
    let mut best_cut: Option<VertexSet> = None;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            if let Some(cut) = min_separator(g, s, t, best) {
                let better = match &best_cut {
                    None => true,
                    Some(b) => cut.len() < b.len() || (cut.len() == b.len() && cut < *b),
                };
                if better {
                    best = cut.len();
                    best_cut = Some(cut);
                }
            }
        }
    }
    CutResult {
        connectivity: best,
        cut: best_cut.expect("non-complete connected graph has a separator"),
    }
}

/// `min(s, |targets|)` paths from `x`, pairwise disjoint apart from `x`, each
/// meeting `targets` only in its last vertex.
pub fn menger_fan(g: &Graph, x: usize, targets: &[usize], s: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if x >= n || targets.iter().any(|&y| y >= n) {
        return Err(Error::InvalidInstance("fan vertex out of range".into()));
    }
    if targets.contains(&x) {
        return Err(Error::Precondition(
            "fan source lies in the target set".into(),
        ));
    }
    let targets: VertexSet = targets.iter().copied().collect();
    let need = s.min(targets.len());
    let sink = 2 * n;
    let mut net = FlowNet::new(2 * n + 1);
    for v in 0..n {
        if v == x {
            net.arc(vin(v), vout(v), n as u32);
        } else if targets.contains(v) {
            net.arc(vin(v), sink, 1);
        } else {
            net.arc(vin(v), vout(v), 1);
        }
    }
    for v in 0..n {
        if targets.contains(v) {
            continue;
        }
        for &w in g.neighbors(v) {
            if w != x {
                net.arc(vout(v), vin(w), 1);
            }
        }
    }
    let found = net.max_flow(vout(x), sink, need);
    if found < need {
        return Err(Error::FanShortfall { found, need });
    }
    let mut paths = Vec::with_capacity(need);
    for &e in &net.head[vout(x)] {
        if net.orig[e] == 0 || net.flow_on(e) == 0 {
            continue;
        }
        let mut path = vec![x];
        let mut node = net.to[e];
        loop {
            let v = node / 2;
            path.push(v);
            if targets.contains(v) {
                break;
            }
            // in(v) -> out(v) -> in(w)
            let next = net.head[vout(v)]
                .iter()
                .copied()
                .find(|&f| net.orig[f] > 0 && net.flow_on(f) > 0)
                .expect("flow conservation");
            node = net.to[next];
        }
        paths.push(path);
    }
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_connectivities() {
        assert_eq!(vertex_connectivity(&Graph::complete(5)).connectivity, 4);
        assert!(vertex_connectivity(&Graph::complete(5)).cut.is_empty());
        let c6 = vertex_connectivity(&Graph::cycle(6));
        assert_eq!(c6.connectivity, 2);
        assert_eq!(c6.cut.into_vec(), vec![0, 2]);
        assert_eq!(vertex_connectivity(&Graph::petersen()).connectivity, 3);
        let two = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(
            vertex_connectivity(&two),
            CutResult {
                connectivity: 0,
                cut: VertexSet::new()
            }
        );
        assert_eq!(vertex_connectivity(&Graph::path(3)).cut.into_vec(), vec![1]);
    }

    #[test]
    fn fan_on_c6() {
        let paths = menger_fan(&Graph::cycle(6), 0, &[2, 4], 2).unwrap();
        assert_eq!(paths, vec![vec![0, 1, 2], vec![0, 5, 4]]);
    }

    #[test]
    fn fan_shortfall() {
        let e = menger_fan(&Graph::path(5), 0, &[3, 4], 2).unwrap_err();
        assert_eq!(e, Error::FanShortfall { found: 1, need: 2 });
        // capped by the target count
        assert_eq!(
            menger_fan(&Graph::complete(4), 0, &[1], 3).unwrap(),
            vec![vec![0, 1]]
        );
    }
}
