//! Isomorph-free enumeration of small connected graphs.
//!
//! Graphs are grown one vertex at a time. Every connected graph has a vertex
//! whose removal keeps it connected, and a bound on the independence number
//! is inherited by induced subgraphs, so each class at size `n` arises from a
//! class at size `n - 1`. Duplicates are removed by colour-refinement buckets
//! followed by an explicit isomorphism search.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::graph::Graph;
use crate::par;

/// Largest order the census handles.
pub const MAX_N: usize = 12;

#[derive(Clone, Debug)]
struct Small {
    adj: Vec<u16>,
}

impl Small {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (u, &row) in self.adj.iter().enumerate() {
            for v in u + 1..self.n() {
                if row >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n(), &edges).expect("valid edges")
    }
}

fn alpha_within(adj: &[u16], cand: u16) -> usize {
    if cand == 0 {
        return 0;
    }
    let v = cand.trailing_zeros() as usize;
    let rest = cand & !(1 << v);
    let with = 1 + alpha_within(adj, rest & !adj[v]);
    if with as u32 > rest.count_ones() {
        return with;
    }
    with.max(alpha_within(adj, rest))
}

/// Stable colour refinement; colour ids are canonical (ranked by signature).
fn refine(adj: &[u16]) -> (Vec<u32>, u64) {
    let n = adj.len();
    let mut colors: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let mut h = DefaultHasher::new();
    n.hash(&mut h);
    let mut classes = 0;
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| colors[w])
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        distinct.hash(&mut h);
        colors = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap() as u32)
            .collect();
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let mut hist = colors.clone();
    hist.sort_unstable();
    hist.hash(&mut h);
    (colors, h.finish())
}

fn isomorphic(a: &Small, ca: &[u32], b: &Small, cb: &[u32]) -> bool {
    let n = a.n();
    let mut size = vec![0usize; n + 1];
    for &c in ca {
        size[c as usize] += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (size[ca[v] as usize], ca[v]));
    let mut map = vec![usize::MAX; n];
    let mut used = 0u16;
    fn go(
        i: usize,
        order: &[usize],
        a: &Small,
        ca: &[u32],
        b: &Small,
        cb: &[u32],
        map: &mut [usize],
        used: &mut u16,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for w in 0..b.n() {
            if *used >> w & 1 == 1 || cb[w] != ca[v] {
                continue;
            }
            let fits = order[..i]
                .iter()
                .all(|&u| (a.adj[v] >> u & 1) == (b.adj[w] >> map[u] & 1));
            if !fits {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            if go(i + 1, order, a, ca, b, cb, map, used) {
                return true;
            }
            *used &= !(1 << w);
        }
        false
    }
    go(0, &order, a, ca, b, cb, &mut map, &mut used)
}

/// Connected graphs on `1..=max_n` vertices up to isomorphism, optionally with
/// independence number at most `alpha_bound`. Entry `i` holds order `i + 1`.
pub fn connected_graphs_up_to(
    max_n: usize,
    alpha_bound: Option<usize>,
    parallel: bool,
) -> Vec<Vec<Graph>> {
    assert!(max_n <= MAX_N, "census limited to {MAX_N} vertices");
    let bound = alpha_bound.unwrap_or(usize::MAX);
    let mut levels: Vec<Vec<Small>> = Vec::new();
    if max_n >= 1 && bound >= 1 {
        levels.push(vec![Small { adj: vec![0] }]);
    }
    while levels.len() < max_n && !levels.is_empty() {
        let prev = levels.last().unwrap();
        let n = prev[0].n();
        let children: Vec<Vec<Small>> = par::map(prev, parallel, |p| {
            let mut out = Vec::new();
            let all = (1u32 << n) - 1;
            for s in 1..=all {
                let s = s as u16;
                if bound != usize::MAX && 1 + alpha_within(&p.adj, (all as u16) & !s) > bound {
                    continue;
                }
                let mut adj = p.adj.clone();
                for (v, row) in adj.iter_mut().enumerate() {
                    if s >> v & 1 == 1 {
                        *row |= 1 << n;
                    }
                }
                adj.push(s);
                out.push(Small { adj });
            }
            out
        });
        let keyed: Vec<(Small, Vec<u32>, u64)> = par::map(
            &children.into_iter().flatten().collect::<Vec<_>>(),
            parallel,
            |c| {
                let (colors, key) = refine(&c.adj);
                (c.clone(), colors, key)
            },
        );
        let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
        let mut kept: Vec<(Small, Vec<u32>)> = Vec::new();
        for (c, colors, key) in keyed {
            let bucket = buckets.entry(key).or_default();
            if bucket
                .iter()
                .any(|&i| isomorphic(&kept[i].0, &kept[i].1, &c, &colors))
            {
                continue;
            }
            bucket.push(kept.len());
            kept.push((c, colors));
        }
        if kept.is_empty() {
            break;
        }
        levels.push(kept.into_iter().map(|(c, _)| c).collect());
    }
    levels
        .iter()
        .map(|level| level.iter().map(Small::to_graph).collect())
        .collect()
}

/// Connected graphs on exactly `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize, alpha_bound: Option<usize>, parallel: bool) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    connected_graphs_up_to(n, alpha_bound, parallel)
        .pop()
        .filter(|level| level.first().is_some_and(|g| g.n() == n))
        .unwrap_or_default()
}

/// Every connected labelled graph on `n` vertices, in edge-mask order.
pub fn labeled_connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "labelled enumeration limited to 8 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).filter_map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("valid edges");
        g.is_connected().then_some(g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts_match_known_sequence() {
        let levels = connected_graphs_up_to(7, None, false);
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn alpha_bound_filters() {
        // connected graphs with independence number 1 are cliques
        let levels = connected_graphs_up_to(5, Some(1), false);
        assert!(levels.iter().all(|l| l.len() == 1 && l[0].is_complete()));
        for g in connected_graphs(6, Some(2), false) {
            assert!(g.independence_number() <= 2 && g.is_connected());
        }
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(labeled_connected_graphs(4).count(), 38);
    }
}
