//! Simple undirected graphs on vertices `0..n`.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::bits::Bits;
use crate::error::{Error, Result};

/// A sorted set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.0.insert(i, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(i) => {
                self.0.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Undirected simple graph with sorted adjacency lists and a bit matrix.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<Bits>,
    m: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            rows: vec![Bits::new(n); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInstance(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInstance(format!("self-loop at {u}")));
            }
            g.add_edge_unchecked(u, v);
        }
        g.finish();
        Ok(g)
    }

    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        if self.rows[u].contains(v) {
            return;
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
    }

    fn finish(&mut self) {
        for a in &mut self.adj {
            a.sort_unstable();
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g.finish();
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("valid star")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges).expect("valid biclique")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("valid petersen")
    }

    /// Disjoint union, `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n();
        let mut edges: Vec<_> = self.edges().collect();
        edges.extend(other.edges().map(|(u, v)| (u + n, v + n)));
        Graph::from_edges(n + other.n(), &edges).expect("valid union")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub(crate) fn row(&self, v: usize) -> &Bits {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.rows[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n < 2 || self.m == n * (n - 1) / 2
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge_unchecked(u, v);
                }
            }
        }
        g.finish();
        g
    }

    /// Subgraph induced by `vertices`. Local vertex `i` is `map[i]` in `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut map: Vec<usize> = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && j > i {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g.finish();
        (g, map)
    }

    /// Graph with the vertices of `removed` deleted, plus the index map.
    pub fn without(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Graph with an added edge (no-op if present).
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge_unchecked(u, v);
        g.finish();
        g
    }

    /// Components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&vec![false; self.n()])
    }

    /// Components of the graph with the `blocked` vertices deleted.
    pub fn components_avoiding(&self, blocked: &[bool]) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = blocked.to_vec();
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// For every vertex `x`, the number of components of `G - x`.
    pub fn components_after_removal(&self) -> Vec<usize> {
        let n = self.n();
        let total = self.connected_components().len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut split = vec![0usize; n];
        let mut is_root = vec![false; n];
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            is_root[root] = true;
            disc[root] = time;
            low[root] = time;
            time += 1;
            // (vertex, parent, next neighbour index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            let mut root_children = 0;
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    *idx += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent == root {
                            root_children += 1;
                        } else if low[v] >= disc[parent] {
                            split[parent] += 1;
                        }
                    }
                }
            }
            split[root] = root_children;
        }
        (0..n)
            .map(|x| {
                let own = if self.adj[x].is_empty() {
                    0
                } else if split[x] == 0 {
                    1
                } else if is_root[x] {
                    split[x]
                } else {
                    split[x] + 1
                };
                total - 1 + own
            })
            .collect()
    }

    /// Vertices whose deletion increases the number of components.
    pub fn articulation_points(&self) -> VertexSet {
        let total = self.connected_components().len();
        self.components_after_removal()
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > total)
            .map(|(v, _)| v)
            .collect()
    }

    /// Exact independence number.
    pub fn independence_number(&self) -> usize {
        self.max_independent_set_bounded(usize::MAX).len()
    }

    /// A maximum independent set (lexicographically first found by the search).
    pub fn maximum_independent_set(&self) -> VertexSet {
        self.max_independent_set_bounded(usize::MAX)
            .into_iter()
            .collect()
    }

    /// True iff the independence number is below `k`.
    pub fn is_kk1_free(&self, k: usize) -> bool {
        if k == 0 {
            return false;
        }
        self.max_independent_set_bounded(k).len() < k
    }

    /// Branch and bound; stops as soon as an independent set of size `stop_at` is found.
    fn max_independent_set_bounded(&self, stop_at: usize) -> Vec<usize> {
        let n = self.n();
        let mut search = IndepSearch {
            g: self,
            best: Vec::new(),
            current: Vec::new(),
            stop_at,
        };
        let all = Bits::full(n);
        if n == 0 {
            return Vec::new();
        }
        if stop_at != usize::MAX && clique_cover_bound(self, &all) < stop_at {
            // the target is out of reach, any independent set answers a bounded query
            let mut s = Vec::new();
            greedy_independent(self, &all, &mut s);
            return s;
        }
        search.expand(all);
        search.best
    }

    /// Edge-list text: `n m` then one `u v` line per edge. Comment lines are prefixed with `#`.
    pub fn to_edge_list(&self, comments: &[String]) -> String {
        let mut s = String::new();
        for c in comments {
            s.push_str("# ");
            s.push_str(c);
            s.push('\n');
        }
        s.push_str(&format!("{} {}\n", self.n(), self.m()));
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

struct IndepSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    stop_at: usize,
}

impl IndepSearch<'_> {
    fn done(&self) -> bool {
        self.best.len() >= self.stop_at
    }

    fn expand(&mut self, mut cand: Bits) {
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        while let Some(v) = cand.first() {
            if self.done() {
                return;
            }
            if self.current.len() + clique_cover_bound(self.g, &cand) <= self.best.len() {
                return;
            }
            let mut next = cand.clone();
            next.remove(v);
            next.difference_with(self.g.row(v));
            self.current.push(v);
            self.expand(next);
            self.current.pop();
            cand.remove(v);
        }
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
    }
}

/// Number of cliques in a greedy clique cover of `cand`; bounds the independence number.
fn clique_cover_bound(g: &Graph, cand: &Bits) -> usize {
    let mut commons: Vec<Bits> = Vec::new();
    for v in cand.iter() {
        match commons.iter_mut().find(|c| c.contains(v)) {
            Some(c) => c.intersect_with(g.row(v)),
            None => {
                let mut c = g.row(v).clone();
                c.intersect_with(cand);
                commons.push(c);
            }
        }
    }
    commons.len()
}

fn greedy_independent(g: &Graph, cand: &Bits, out: &mut Vec<usize>) {
    let mut left = cand.clone();
    while let Some(v) = left.first() {
        out.push(v);
        left.remove(v);
        left.difference_with(g.row(v));
    }
}

/// Parses the edge-list or DIMACS format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#') && !is_dimacs_comment(l))
        .collect();
    let Some(&(first_line, first)) = lines.first() else {
        return Err(Error::Parse {
            line: 1,
            msg: "empty input".into(),
        });
    };
    if first.starts_with('p') {
        parse_dimacs(&lines)
    } else {
        parse_edge_list(first_line, first, &lines[1..])
    }
}

fn is_dimacs_comment(l: &str) -> bool {
    l == "c" || l.starts_with("c ") || l.starts_with("c\t")
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_num(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse::<usize>().map_err(|_| {
        parse_err(
            line,
            format!("{what} `{tok}` is not a non-negative integer"),
        )
    })
}

fn check_edge(line: usize, n: usize, u: usize, v: usize) -> Result<()> {
    if u >= n || v >= n {
        return Err(parse_err(
            line,
            format!("vertex index {} out of range for n = {n}", u.max(v)),
        ));
    }
    if u == v {
        return Err(parse_err(line, format!("self-loop at vertex {u}")));
    }
    Ok(())
}

fn parse_edge_list(hline: usize, header: &str, rest: &[(usize, &str)]) -> Result<Graph> {
    let mut toks = header.split_whitespace();
    let n = parse_num(hline, toks.next(), "vertex count").map_err(|_| {
        parse_err(
            hline,
            format!("malformed header `{header}`, expected `n m`"),
        )
    })?;
    let m = parse_num(hline, toks.next(), "edge count").map_err(|_| {
        parse_err(
            hline,
            format!("malformed header `{header}`, expected `n m`"),
        )
    })?;
    if toks.next().is_some() {
        return Err(parse_err(
            hline,
            format!("malformed header `{header}`, expected `n m`"),
        ));
    }
    let mut g = Graph::empty(n);
    for &(line, l) in rest {
        let mut t = l.split_whitespace();
        let u = parse_num(line, t.next(), "endpoint")?;
        let v = parse_num(line, t.next(), "endpoint")?;
        if t.next().is_some() {
            return Err(parse_err(line, "expected exactly two endpoints"));
        }
        check_edge(line, n, u, v)?;
        g.add_edge_unchecked(u, v);
    }
    if rest.len() != m {
        return Err(parse_err(
            hline,
            format!(
                "header declares {m} edges but {} edge lines follow",
                rest.len()
            ),
        ));
    }
    g.finish();
    Ok(g)
}

fn parse_dimacs(lines: &[(usize, &str)]) -> Result<Graph> {
    let (hline, header) = lines[0];
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "p" {
        return Err(parse_err(
            hline,
            format!("malformed header `{header}`, expected `p edge n m`"),
        ));
    }
    let n = parse_num(hline, Some(toks[2]), "vertex count")?;
    let m = parse_num(hline, Some(toks[3]), "edge count")?;
    let mut g = Graph::empty(n);
    let mut count = 0;
    for &(line, l) in &lines[1..] {
        let mut t = l.split_whitespace();
        if t.next() != Some("e") {
            return Err(parse_err(
                line,
                format!("expected an `e u v` line, found `{l}`"),
            ));
        }
        let u = parse_num(line, t.next(), "endpoint")?;
        let v = parse_num(line, t.next(), "endpoint")?;
        if u == 0 || v == 0 {
            return Err(parse_err(line, "DIMACS vertex ids start at 1"));
        }
        check_edge(line, n, u - 1, v - 1)?;
        g.add_edge_unchecked(u - 1, v - 1);
        count += 1;
    }
    if count != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges but {count} edge lines follow"),
        ));
    }
    g.finish();
    Ok(g)
}
