//! Brute-force reference implementations for small graphs.
//!
//! Everything here is exponential and guarded by an explicit size limit. The
//! subset dynamic programs work on `u32` masks, so no guard may exceed 20.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default size guard for the oracles.
pub const DEFAULT_MAX_ORACLE_N: usize = 14;

/// Absolute ceiling for the subset dynamic programs.
const DP_CEILING: usize = 20;

/// A graph with terminal pairs `(s_i, t_i)`; all terminals distinct and `2l <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkageInstance {
    pub graph: Graph,
    pub pairs: Vec<(usize, usize)>,
}

impl LinkageInstance {
    pub fn new(graph: Graph, pairs: Vec<(usize, usize)>) -> Result<Self> {
        validate_pairs(graph.n(), &pairs)?;
        Ok(LinkageInstance { graph, pairs })
    }

    pub fn ell(&self) -> usize {
        self.pairs.len()
    }
}

/// Terminals must be in range and pairwise distinct.
pub fn validate_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<()> {
    let mut seen = vec![false; n];
    for &(s, t) in pairs {
        for x in [s, t] {
            if x >= n {
                return Err(Error::InvalidInstance(format!(
                    "terminal {x} out of range for n = {n}"
                )));
            }
            if seen[x] {
                return Err(Error::InvalidInstance(format!(
                    "terminal {x} is used twice"
                )));
            }
            seen[x] = true;
        }
    }
    Ok(())
}

/// Vertex-disjoint paths, path `i` running from `s_i` to `t_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Linkage {
    pub paths: Vec<Vec<usize>>,
}

impl Linkage {
    pub fn covered(&self) -> usize {
        self.paths.iter().map(Vec::len).sum()
    }

    /// Checks that this is a linkage for `inst`, spanning if `hamiltonian`.
    pub fn check(
        &self,
        inst: &LinkageInstance,
        hamiltonian: bool,
    ) -> std::result::Result<(), String> {
        let g = &inst.graph;
        if self.paths.len() != inst.pairs.len() {
            return Err(format!(
                "{} paths for {} pairs",
                self.paths.len(),
                inst.pairs.len()
            ));
        }
        let mut seen = vec![false; g.n()];
        for (i, (p, &(s, t))) in self.paths.iter().zip(&inst.pairs).enumerate() {
            if p.first() != Some(&s) || p.last() != Some(&t) {
                return Err(format!("path {i} does not run from {s} to {t}"));
            }
            for (j, &v) in p.iter().enumerate() {
                if v >= g.n() {
                    return Err(format!("path {i} leaves the graph at {v}"));
                }
                if seen[v] {
                    return Err(format!("vertex {v} used twice"));
                }
                seen[v] = true;
                if j > 0 && !g.has_edge(p[j - 1], v) {
                    return Err(format!("path {i} uses the non-edge {}-{v}", p[j - 1]));
                }
            }
        }
        if hamiltonian {
            if let Some(v) = seen.iter().position(|&b| !b) {
                return Err(format!("vertex {v} is not covered"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Linkage {
    /// One line per path, vertex ids separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.paths {
            let line: Vec<String> = p.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Number of uncovered vertices of a best linkage, or `Infinite` if none exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Defect {
    Finite(usize),
    Infinite,
}

impl Defect {
    pub fn plus(self, other: Defect) -> Defect {
        match (self, other) {
            (Defect::Finite(a), Defect::Finite(b)) => Defect::Finite(a + b),
            _ => Defect::Infinite,
        }
    }
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::Finite(d) => write!(f, "{d}"),
            Defect::Infinite => write!(f, "inf"),
        }
    }
}

fn guard(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::SizeGuard { what, n, limit })
    } else {
        Ok(())
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Canonical pairings of a vertex list: the first vertex is matched with each
/// later one in turn, recursively.
pub fn pairings(vertices: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if vertices.is_empty() {
        return vec![Vec::new()];
    }
    let first = vertices[0];
    let mut out = Vec::new();
    for j in 1..vertices.len() {
        let rest: Vec<usize> = vertices[1..]
            .iter()
            .enumerate()
            .filter(|&(i, _)| i + 1 != j)
            .map(|(_, &v)| v)
            .collect();
        for mut tail in pairings(&rest) {
            tail.insert(0, (first, vertices[j]));
            out.push(tail);
        }
    }
    out
}

/// Sorted `r`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < r - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// All ways to choose `l` terminal pairs on `0..n`, up to reordering pairs and
/// swapping the ends of a pair.
pub fn terminal_selections(n: usize, l: usize) -> Vec<Vec<(usize, usize)>> {
    if 2 * l > n {
        return Vec::new();
    }
    subsets(n, 2 * l).iter().flat_map(|s| pairings(s)).collect()
}

struct Backtrack<'a> {
    adj: &'a [u32],
    pairs: &'a [(usize, usize)],
    reserved: u32,
    full: u32,
    hamiltonian: bool,
    paths: Vec<Vec<usize>>,
}

impl Backtrack<'_> {
    /// Can `t` be reached from `v` through vertices outside `blocked`?
    fn reaches(&self, v: usize, t: usize, blocked: u32) -> bool {
        let mut seen = 1u32 << v;
        let mut frontier = seen;
        let open = !blocked | 1 << t;
        while frontier != 0 {
            let mut next = 0;
            for x in bits(frontier) {
                next |= self.adj[x];
            }
            next &= open & !seen;
            if next >> t & 1 == 1 {
                return true;
            }
            seen |= next;
            frontier = next;
        }
        false
    }

    fn run(&mut self, i: usize, v: usize, used: u32) -> bool {
        let (_, t) = self.pairs[i];
        if v == t {
            if i + 1 == self.pairs.len() {
                return !self.hamiltonian || used == self.full;
            }
            let s = self.pairs[i + 1].0;
            self.paths.push(vec![s]);
            if self.run(i + 1, s, used | 1 << s) {
                return true;
            }
            self.paths.pop();
            return false;
        }
        let blocked = used | self.reserved;
        if !self.reaches(v, t, blocked) {
            return false;
        }
        for w in bits(self.adj[v]) {
            if w != t && blocked >> w & 1 == 1 {
                continue;
            }
            self.paths[i].push(w);
            if self.run(i, w, used | 1 << w) {
                return true;
            }
            self.paths[i].pop();
        }
        false
    }
}

/// Exhaustive linkage search.
///
/// Single-pair spanning queries use a subset dynamic program; everything else
/// backtracks, always extending the lowest-indexed unfinished path and trying
/// neighbours in increasing order.
pub fn oracle_linkage(
    inst: &LinkageInstance,
    hamiltonian: bool,
    max_n: usize,
) -> Result<Option<Linkage>> {
    let n = inst.graph.n();
    guard("oracle_linkage", n, max_n.min(DP_CEILING))?;
    if inst.pairs.is_empty() {
        return Ok((!hamiltonian || n == 0).then(Linkage::default));
    }
    if 2 * inst.ell() > n {
        return Ok(None);
    }
    if hamiltonian && inst.ell() == 1 {
        let (s, t) = inst.pairs[0];
        return Ok(ham_path_dp(&inst.graph, s, t).map(|p| Linkage { paths: vec![p] }));
    }
    let adj = masks(&inst.graph);
    let reserved = inst
        .pairs
        .iter()
        .fold(0u32, |m, &(s, t)| m | 1 << s | 1 << t);
    let s0 = inst.pairs[0].0;
    let mut bt = Backtrack {
        adj: &adj,
        pairs: &inst.pairs,
        reserved,
        full: if n == 32 { u32::MAX } else { (1u32 << n) - 1 },
        hamiltonian,
        paths: vec![vec![s0]],
    };
    if bt.run(0, s0, 1 << s0) {
        Ok(Some(Linkage { paths: bt.paths }))
    } else {
        Ok(None)
    }
}

/// Hamiltonian `s`-`t` path via the endpoint subset DP, with the path itself.
fn ham_path_dp(g: &Graph, s: usize, t: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let adj = masks(g);
    let ends = ends_from(&adj, n, s);
    let full = (1u32 << n) - 1;
    if ends[full as usize] >> t & 1 == 0 {
        return None;
    }
    let mut path = vec![t];
    let mut mask = full;
    let mut cur = t;
    while mask != 1 << s {
        let prev_mask = mask & !(1 << cur);
        let prev = bits(ends[prev_mask as usize] & adj[cur]).next()?;
        path.push(prev);
        mask = prev_mask;
        cur = prev;
    }
    path.reverse();
    Some(path)
}

/// `ends[mask]`: possible last vertices of paths from `s` spanning exactly `mask`.
fn ends_from(adj: &[u32], n: usize, s: usize) -> Vec<u32> {
    let mut ends = vec![0u32; 1 << n];
    ends[1 << s] = 1 << s;
    for mask in 0..(1u32 << n) {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        for v in bits(e) {
            for w in bits(adj[v] & !mask) {
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    ends
}

/// Minimum number of vertices left uncovered by a linkage.
///
/// Runs a subset DP over the concatenation `s_1 .. t_1, s_2 .. t_2, ...`
/// in which each `t_i` is followed by a jump to `s_{i+1}`.
pub fn oracle_min_defect(inst: &LinkageInstance, max_n: usize) -> Result<Defect> {
    let g = &inst.graph;
    let n = g.n();
    guard("oracle_min_defect", n, max_n.min(DP_CEILING))?;
    let l = inst.ell();
    if l == 0 {
        return Ok(Defect::Finite(n));
    }
    let adj = masks(g);
    let starts = inst.pairs.iter().fold(0u32, |m, &(s, _)| m | 1 << s);
    let reserved = inst.pairs.iter().fold(starts, |m, &(_, t)| m | 1 << t);
    let mut reach = vec![0u32; 1 << n];
    let s0 = inst.pairs[0].0;
    reach[1 << s0] = 1 << s0;
    let mut best: Option<u32> = None;
    for mask in 0..(1u32 << n) {
        let r = reach[mask as usize];
        if r == 0 {
            continue;
        }
        let i = (mask & starts).count_ones() as usize - 1;
        let t = inst.pairs[i].1;
        for v in bits(r) {
            if v == t {
                if i + 1 == l {
                    best = Some(best.map_or(mask.count_ones(), |b| b.max(mask.count_ones())));
                } else {
                    let s = inst.pairs[i + 1].0;
                    reach[(mask | 1 << s) as usize] |= 1 << s;
                }
                continue;
            }
            for w in bits(adj[v] & !mask) {
                if w == t || reserved >> w & 1 == 0 {
                    reach[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
    }
    Ok(match best {
        Some(c) => Defect::Finite(n - c as usize),
        None => Defect::Infinite,
    })
}

/// Minimum number of vertex-disjoint paths (single vertices allowed) covering `g`.
pub fn oracle_path_cover_number(g: &Graph, max_n: usize) -> Result<usize> {
    let n = g.n();
    guard("oracle_path_cover_number", n, max_n.min(DP_CEILING))?;
    if n == 0 {
        return Ok(0);
    }
    let adj = masks(g);
    // ends[mask]: last vertices of Hamiltonian paths of G[mask]
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..(1u32 << n) {
        let e = ends[mask as usize];
        for v in bits(e) {
            for w in bits(adj[v] & !mask) {
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    let full = (1u32 << n) - 1;
    let mut best = vec![u8::MAX; 1 << n];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask & !low;
        // submasks of `rest`, each joined with the lowest vertex
        let mut sub = rest;
        loop {
            let part = sub | low;
            if ends[part as usize] != 0 {
                let cand = best[(mask & !part) as usize].saturating_add(1);
                if cand < best[mask as usize] {
                    best[mask as usize] = cand;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(best[full as usize] as usize)
}

/// True iff every choice of `l` terminal pairs admits a spanning linkage.
/// Graphs with fewer than `2l` vertices are not Hamiltonian `l`-linked.
pub fn oracle_is_ham_linked(g: &Graph, l: usize, max_n: usize) -> Result<bool> {
    let n = g.n();
    guard("oracle_is_ham_linked", n, max_n.min(DP_CEILING))?;
    if 2 * l > n {
        return Ok(false);
    }
    for pairs in terminal_selections(n, l) {
        let inst = LinkageInstance {
            graph: g.clone(),
            pairs,
        };
        if oracle_min_defect(&inst, max_n)? != Defect::Finite(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hamiltonian path tables for every start vertex.
pub struct HamTables {
    n: usize,
    ends: Vec<Vec<u32>>,
}

impl HamTables {
    pub fn new(g: &Graph, max_n: usize) -> Result<Self> {
        let n = g.n();
        guard("HamTables", n, max_n.min(16))?;
        let adj = masks(g);
        let ends = (0..n).map(|s| ends_from(&adj, n, s)).collect();
        Ok(HamTables { n, ends })
    }

    fn full(&self) -> usize {
        (1usize << self.n) - 1
    }

    pub fn path_from(&self, u: usize) -> bool {
        self.ends[u][self.full()] != 0
    }

    pub fn path_between(&self, u: usize, v: usize) -> bool {
        self.ends[u][self.full()] >> v & 1 == 1
    }

    pub fn ham_path(&self) -> bool {
        self.n <= 1 || (0..self.n).any(|u| self.path_from(u))
    }

    /// Hamiltonian cycle; needs at least three vertices.
    pub fn ham_cycle(&self, g: &Graph) -> bool {
        self.n >= 3 && g.edges().any(|(u, v)| self.path_between(u, v))
    }

    /// Hamiltonian path between every pair of distinct vertices.
    pub fn ham_connected(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.path_between(u, v)))
    }

    /// Two disjoint paths covering all vertices, one with end `u`, the other with end `v`.
    pub fn pc_uv(&self, u: usize, v: usize) -> bool {
        let full = self.full();
        let (bu, bv) = (1usize << u, 1usize << v);
        let rest = full & !bu & !bv;
        let mut sub = rest;
        loop {
            let mu = sub | bu;
            let mv = full & !mu;
            if self.ends[u][mu] != 0 && self.ends[v][mv] != 0 {
                return true;
            }
            if sub == 0 {
                return false;
            }
            sub = (sub - 1) & rest;
        }
    }
}

/// Optimal L(2,1)-labelling span and a witness labelling.
///
/// Adjacent vertices need labels at least two apart, vertices at distance two
/// need distinct labels; `injective` additionally forbids repeated labels.
pub fn oracle_lambda(g: &Graph, injective: bool, max_n: usize) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    guard("oracle_lambda", n, max_n)?;
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let mut near = vec![vec![false; n]; n];
    for u in 0..n {
        for &w in g.neighbors(u) {
            for &x in g.neighbors(w) {
                if x != u && !g.has_edge(u, x) {
                    near[u][x] = true;
                }
            }
        }
    }
    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let lower = if injective {
        n - 1
    } else if max_deg > 0 {
        max_deg + 1
    } else {
        0
    };
    let mut span = lower;
    loop {
        let mut labels = vec![usize::MAX; n];
        if label_search(g, &near, injective, span, 0, &mut labels) {
            return Ok((span, labels));
        }
        span += 1;
    }
}

fn label_search(
    g: &Graph,
    near: &[Vec<bool>],
    injective: bool,
    span: usize,
    v: usize,
    labels: &mut [usize],
) -> bool {
    let n = g.n();
    if v == n {
        return true;
    }
    'label: for c in 0..=span {
        for u in 0..v {
            let d = labels[u].abs_diff(c);
            if g.has_edge(u, v) && d < 2 {
                continue 'label;
            }
            if (near[u][v] || injective) && d == 0 {
                continue 'label;
            }
        }
        labels[v] = c;
        if label_search(g, near, injective, span, v + 1, labels) {
            return true;
        }
    }
    labels[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(g: Graph, pairs: &[(usize, usize)]) -> LinkageInstance {
        LinkageInstance::new(g, pairs.to_vec()).unwrap()
    }

    #[test]
    fn linkage_examples() {
        assert_eq!(
            oracle_linkage(&inst(Graph::cycle(4), &[(0, 2)]), true, 14).unwrap(),
            None
        );
        let p = oracle_linkage(&inst(Graph::path(4), &[(0, 3)]), true, 14)
            .unwrap()
            .unwrap();
        assert_eq!(p.paths, vec![vec![0, 1, 2, 3]]);
        let two = inst(Graph::cycle(6), &[(0, 2), (3, 5)]);
        let l = oracle_linkage(&two, true, 14).unwrap().unwrap();
        l.check(&two, true).unwrap();
        assert!(
            oracle_linkage(&inst(Graph::cycle(6), &[(0, 3), (1, 4)]), false, 14)
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn defect_examples() {
        assert_eq!(
            oracle_min_defect(&inst(Graph::path(4), &[(0, 2)]), 14).unwrap(),
            Defect::Finite(1)
        );
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(
            oracle_min_defect(&inst(two_k2, &[(0, 2)]), 14).unwrap(),
            Defect::Infinite
        );
        assert_eq!(
            oracle_min_defect(&inst(Graph::cycle(5), &[]), 14).unwrap(),
            Defect::Finite(5)
        );
    }

    #[test]
    fn path_cover_examples() {
        assert_eq!(oracle_path_cover_number(&Graph::star(3), 14).unwrap(), 2);
        assert_eq!(oracle_path_cover_number(&Graph::empty(3), 14).unwrap(), 3);
        assert_eq!(oracle_path_cover_number(&Graph::cycle(7), 14).unwrap(), 1);
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(oracle_lambda(&Graph::complete(3), false, 10).unwrap().0, 4);
        assert_eq!(oracle_lambda(&Graph::cycle(4), false, 10).unwrap().0, 4);
        assert_eq!(oracle_lambda(&Graph::path(3), true, 10).unwrap().0, 3);
        assert_eq!(oracle_lambda(&Graph::complete(2), false, 10).unwrap().0, 2);
        assert_eq!(oracle_lambda(&Graph::path(4), false, 10).unwrap().0, 3);
    }

    #[test]
    fn selections_are_canonical() {
        assert_eq!(terminal_selections(4, 2).len(), 3);
        assert_eq!(terminal_selections(6, 1).len(), 15);
        assert_eq!(terminal_selections(5, 2).len(), 15);
        assert!(terminal_selections(3, 2).is_empty());
    }

    #[test]
    fn guard_refuses_large_inputs() {
        let e = oracle_path_cover_number(&Graph::path(15), 14).unwrap_err();
        assert!(matches!(
            e,
            Error::SizeGuard {
                n: 15,
                limit: 14,
                ..
            }
        ));
    }

    #[test]
    fn ham_tables_agree_with_linkage_search() {
        let g = Graph::petersen();
        let t = HamTables::new(&g, 14).unwrap();
        assert!(t.ham_path());
        assert!(!t.ham_cycle(&g));
        for v in 1..10 {
            let found = oracle_linkage(&inst(g.clone(), &[(0, v)]), true, 14)
                .unwrap()
                .is_some();
            assert_eq!(found, t.path_between(0, v));
        }
    }
}
