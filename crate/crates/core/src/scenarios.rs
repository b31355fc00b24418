//! Scenarios: how the paths of a linkage thread through a vertex cut.
//!
//! Fix a cut `A` of `G` with components `Q_1, ..., Q_m` of `G - A`. The
//! scenario of a path keeps its ends, its cut vertices and the neighbours of
//! those cut vertices on the path. Inside a scenario two consecutive vertices
//! never lie in different components and three consecutive vertices never lie
//! in the same one. A collection is plausible when every cut vertex is used
//! exactly once, no other vertex twice, and consecutive vertices that do not
//! share a component are adjacent.

use std::sync::Arc;

use crate::graph::{Graph, VertexSet};

/// A cut together with the components of the graph minus the cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutLayout {
    pub cut: VertexSet,
    pub components: Vec<VertexSet>,
    comp_of: Vec<Option<usize>>,
}

impl CutLayout {
    pub fn new(g: &Graph, cut: &VertexSet) -> Self {
        let mut blocked = vec![false; g.n()];
        for v in cut.iter() {
            blocked[v] = true;
        }
        let components = g.components_avoiding(&blocked);
        let mut comp_of = vec![None; g.n()];
        for (j, q) in components.iter().enumerate() {
            for v in q.iter() {
                comp_of[v] = Some(j);
            }
        }
        CutLayout {
            cut: cut.clone(),
            components,
            comp_of,
        }
    }

    /// Component index of `v`, `None` for cut vertices.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.comp_of[v]
    }

    fn same_component(&self, u: usize, v: usize) -> bool {
        matches!((self.comp_of[u], self.comp_of[v]), (Some(a), Some(b)) if a == b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub pair: (usize, usize),
    pub sequence: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioCollection {
    pub scenarios: Vec<Scenario>,
    pub layout: Arc<CutLayout>,
}

/// The two sequence predicates of a scenario (ends are not checked here).
pub fn is_scenario(seq: &[usize], layout: &CutLayout) -> bool {
    let c = |v: usize| layout.component_of(v);
    for w in seq.windows(2) {
        if let (Some(a), Some(b)) = (c(w[0]), c(w[1])) {
            if a != b {
                return false;
            }
        }
    }
    for w in seq.windows(3) {
        if let (Some(a), Some(b), Some(d)) = (c(w[0]), c(w[1]), c(w[2])) {
            if a == b && b == d {
                return false;
            }
        }
    }
    true
}

/// Plausibility; with `relaxed`, cut vertices may also stay unused.
pub fn check_plausible(c: &ScenarioCollection, g: &Graph, relaxed: bool) -> bool {
    let layout = &c.layout;
    let mut count = vec![0usize; g.n()];
    for sc in &c.scenarios {
        let seq = &sc.sequence;
        if seq.first() != Some(&sc.pair.0) || seq.last() != Some(&sc.pair.1) || seq.len() < 2 {
            return false;
        }
        if !is_scenario(seq, layout) {
            return false;
        }
        for w in seq.windows(2) {
            if !layout.same_component(w[0], w[1]) && !g.has_edge(w[0], w[1]) {
                return false;
            }
        }
        for &v in seq {
            count[v] += 1;
        }
    }
    if count.iter().any(|&k| k > 1) {
        return false;
    }
    relaxed || layout.cut.iter().all(|a| count[a] == 1)
}

pub fn is_plausible(c: &ScenarioCollection, g: &Graph) -> bool {
    check_plausible(c, g, false)
}

/// The sub-instance a collection induces on one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedInstance {
    pub component: usize,
    /// Component vertices that remain after deleting singly-visited ones.
    pub vertices: VertexSet,
    /// Consecutive same-component pairs, in scenario order.
    pub pairs: Vec<(usize, usize)>,
    /// Scenario vertices of the component without a same-component neighbour.
    pub deleted: Vec<usize>,
}

/// Reduces component `q` along collection `c`.
pub fn reduce_component(q: usize, c: &ScenarioCollection) -> ReducedInstance {
    let layout = &c.layout;
    let inside = |v: usize| layout.component_of(v) == Some(q);
    let mut pairs = Vec::new();
    let mut deleted = Vec::new();
    for sc in &c.scenarios {
        let seq = &sc.sequence;
        for (i, &v) in seq.iter().enumerate() {
            if !inside(v) {
                continue;
            }
            let left = i > 0 && inside(seq[i - 1]);
            let right = i + 1 < seq.len() && inside(seq[i + 1]);
            if right {
                if seq[i + 1] == v {
                    deleted.push(v);
                } else {
                    pairs.push((v, seq[i + 1]));
                }
            } else if !left {
                deleted.push(v);
            }
        }
    }
    let vertices = layout.components[q]
        .iter()
        .filter(|v| !deleted.contains(v))
        .collect();
    ReducedInstance {
        component: q,
        vertices,
        pairs,
        deleted,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Vertex(usize),
    Slot(usize),
}

#[derive(Clone, Copy, Debug)]
enum Choice {
    End,
    Tok(Tok),
    Fill(usize, Option<usize>),
}

struct Frame {
    opts: Vec<Choice>,
    next: usize,
    applied: bool,
}

struct Search<'a> {
    g: &'a Graph,
    layout: Arc<CutLayout>,
    pairs: &'a [(usize, usize)],
    relaxed: bool,
    terminal: Vec<bool>,
    in_cut: Vec<bool>,
    /// `touch[v][j]`: `v` has a neighbour in component `j`.
    touch: Vec<Vec<bool>>,
    blind: Vec<Vec<Tok>>,
    cur: usize,
    cut_used: Vec<bool>,
    cut_left: usize,
    slots: Option<Vec<(usize, usize)>>,
    fills: Vec<(usize, Option<usize>)>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn vertex_token(&self, v: usize) -> bool {
        self.in_cut[v]
    }

    fn options(&self) -> Vec<Choice> {
        match &self.slots {
            None => self.blind_options(),
            Some(slots) => self.fill_options(slots[self.fills.len()]),
        }
    }

    fn blind_options(&self) -> Vec<Choice> {
        let i = self.cur;
        let (_, t) = self.pairs[i];
        let toks = &self.blind[i];
        let last = *toks.last().expect("scenario starts with its source");
        let mut out = Vec::new();
        let last_pair = i + 1 == self.pairs.len();
        let may_end = self.relaxed || !last_pair || self.cut_left == 0;
        let free_cut = |a: usize| self.in_cut[a] && !self.terminal[a] && !self.cut_used[a];
        let n = self.g.n();
        match last {
            Tok::Vertex(v) if !self.vertex_token(v) => {
                // the source, lying in a component
                let cs = self.layout.component_of(v).expect("non-cut vertex");
                if may_end {
                    let ok = if self.in_cut[t] {
                        self.g.has_edge(v, t)
                    } else {
                        self.layout.component_of(t) == Some(cs)
                    };
                    if ok {
                        out.push(Choice::End);
                    }
                }
                for a in 0..n {
                    if free_cut(a) && self.g.has_edge(v, a) {
                        out.push(Choice::Tok(Tok::Vertex(a)));
                    }
                }
                if self.layout.components[cs].len() > 1 {
                    out.push(Choice::Tok(Tok::Slot(cs)));
                }
            }
            Tok::Vertex(v) => {
                if may_end && self.g.has_edge(v, t) {
                    out.push(Choice::End);
                }
                for a in 0..n {
                    if free_cut(a) && self.g.has_edge(v, a) {
                        out.push(Choice::Tok(Tok::Vertex(a)));
                    }
                }
                for j in 0..self.layout.components.len() {
                    if self.touch[v][j] {
                        out.push(Choice::Tok(Tok::Slot(j)));
                    }
                }
            }
            Tok::Slot(j) => {
                let prev = match toks[toks.len() - 2] {
                    Tok::Vertex(p) => p,
                    Tok::Slot(_) => unreachable!("slots never touch"),
                };
                let after_source = !self.vertex_token(prev);
                if may_end {
                    let ok = if self.in_cut[t] {
                        self.touch[t][j]
                    } else {
                        !after_source && self.layout.component_of(t) == Some(j)
                    };
                    if ok {
                        out.push(Choice::End);
                    }
                }
                for a in 0..n {
                    if free_cut(a) && self.touch[a][j] {
                        out.push(Choice::Tok(Tok::Vertex(a)));
                    }
                }
            }
        }
        out
    }

    fn fill_options(&self, (i, k): (usize, usize)) -> Vec<Choice> {
        let toks = &self.blind[i];
        let Tok::Slot(j) = toks[k] else {
            unreachable!()
        };
        let Tok::Vertex(left) = toks[k - 1] else {
            unreachable!()
        };
        let Tok::Vertex(right) = toks[k + 1] else {
            unreachable!()
        };
        let q = &self.layout.components[j];
        let free = |v: usize| !self.used[v];
        let mut out = Vec::new();
        let g = self.g;
        if !self.in_cut[left] {
            for a in q.iter() {
                if free(a) && g.has_edge(a, right) {
                    out.push(Choice::Fill(a, None));
                }
            }
        } else if !self.in_cut[right] {
            for a in q.iter() {
                if free(a) && g.has_edge(left, a) {
                    out.push(Choice::Fill(a, None));
                }
            }
        } else {
            for a in q.iter() {
                if !free(a) || !g.has_edge(left, a) {
                    continue;
                }
                if g.has_edge(a, right) {
                    out.push(Choice::Fill(a, None));
                }
                for b in q.iter() {
                    if b != a && free(b) && g.has_edge(b, right) {
                        out.push(Choice::Fill(a, Some(b)));
                    }
                }
            }
        }
        out
    }

    fn enter_fill_phase(&mut self) {
        let mut slots = Vec::new();
        for (i, toks) in self.blind.iter().enumerate() {
            for (k, t) in toks.iter().enumerate() {
                if matches!(t, Tok::Slot(_)) {
                    slots.push((i, k));
                }
            }
        }
        self.slots = Some(slots);
    }

    fn apply(&mut self, c: Choice) {
        match c {
            Choice::End => {
                let i = self.cur;
                self.blind[i].push(Tok::Vertex(self.pairs[i].1));
                self.cur += 1;
                if self.cur < self.pairs.len() {
                    self.blind.push(vec![Tok::Vertex(self.pairs[self.cur].0)]);
                } else {
                    self.enter_fill_phase();
                }
            }
            Choice::Tok(t) => {
                if let Tok::Vertex(a) = t {
                    self.cut_used[a] = true;
                    self.cut_left -= 1;
                }
                self.blind[self.cur].push(t);
            }
            Choice::Fill(a, b) => {
                self.used[a] = true;
                if let Some(b) = b {
                    self.used[b] = true;
                }
                self.fills.push((a, b));
            }
        }
    }

    fn undo(&mut self, c: Choice) {
        match c {
            Choice::End => {
                if self.cur < self.pairs.len() {
                    self.blind.pop();
                } else {
                    self.slots = None;
                }
                self.cur -= 1;
                self.blind[self.cur].pop();
            }
            Choice::Tok(t) => {
                if let Tok::Vertex(a) = t {
                    self.cut_used[a] = false;
                    self.cut_left += 1;
                }
                self.blind[self.cur].pop();
            }
            Choice::Fill(a, b) => {
                self.used[a] = false;
                if let Some(b) = b {
                    self.used[b] = false;
                }
                self.fills.pop();
            }
        }
    }

    fn complete(&self) -> bool {
        matches!(&self.slots, Some(s) if s.len() == self.fills.len())
    }

    fn build(&self) -> ScenarioCollection {
        let mut fills = self.fills.iter();
        let scenarios = self
            .blind
            .iter()
            .zip(self.pairs)
            .map(|(toks, &pair)| {
                let mut sequence = Vec::with_capacity(toks.len() + 2);
                for t in toks {
                    match *t {
                        Tok::Vertex(v) => sequence.push(v),
                        Tok::Slot(_) => {
                            let &(a, b) = fills.next().expect("every slot is filled");
                            sequence.push(a);
                            sequence.extend(b);
                        }
                    }
                }
                Scenario { pair, sequence }
            })
            .collect();
        ScenarioCollection {
            scenarios,
            layout: self.layout.clone(),
        }
    }
}

/// Lazy, deterministic stream of plausible collections.
///
/// The stream first walks blind scenarios (cut vertices interleaved with
/// component placeholders), pair by pair, then fills the placeholders with
/// concrete vertices in increasing id order.
pub struct PlausibleCollections<'a> {
    search: Search<'a>,
    stack: Vec<Frame>,
    /// Pending answer for the degenerate case without pairs.
    trivial: Option<bool>,
}

impl Iterator for PlausibleCollections<'_> {
    type Item = ScenarioCollection;

    fn next(&mut self) -> Option<ScenarioCollection> {
        if let Some(yield_it) = self.trivial.take() {
            return yield_it.then(|| ScenarioCollection {
                scenarios: Vec::new(),
                layout: self.search.layout.clone(),
            });
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.applied {
                let c = top.opts[top.next - 1];
                top.applied = false;
                self.search.undo(c);
                continue;
            }
            if top.next == top.opts.len() {
                self.stack.pop();
                continue;
            }
            let c = top.opts[top.next];
            top.next += 1;
            top.applied = true;
            self.search.apply(c);
            if self.search.complete() {
                return Some(self.search.build());
            }
            let opts = self.search.options();
            self.stack.push(Frame {
                opts,
                next: 0,
                applied: false,
            });
        }
    }
}

/// Enumerates plausible collections for `pairs` over the cut of `layout`.
/// With `relaxed`, cut vertices may stay unused.
pub fn enumerate_with_layout<'a>(
    g: &'a Graph,
    layout: Arc<CutLayout>,
    pairs: &'a [(usize, usize)],
    relaxed: bool,
) -> PlausibleCollections<'a> {
    let n = g.n();
    let mut terminal = vec![false; n];
    for &(s, t) in pairs {
        terminal[s] = true;
        terminal[t] = true;
    }
    let mut in_cut = vec![false; n];
    for a in layout.cut.iter() {
        in_cut[a] = true;
    }
    let m = layout.components.len();
    let touch = (0..n)
        .map(|v| {
            let mut row = vec![false; m];
            for &w in g.neighbors(v) {
                if let Some(j) = layout.component_of(w) {
                    row[j] = true;
                }
            }
            row
        })
        .collect();
    let cut_left = layout.cut.iter().filter(|&a| !terminal[a]).count();
    let used = terminal
        .iter()
        .zip(&in_cut)
        .map(|(&t, &c)| t && !c)
        .collect();
    let mut search = Search {
        g,
        layout,
        pairs,
        relaxed,
        terminal,
        in_cut,
        touch,
        blind: Vec::new(),
        cur: 0,
        cut_used: vec![false; n],
        cut_left,
        slots: None,
        fills: Vec::new(),
        used,
    };
    let mut stack = Vec::new();
    let trivial = if pairs.is_empty() {
        Some(relaxed || search.layout.cut.is_empty())
    } else {
        search.blind.push(vec![Tok::Vertex(pairs[0].0)]);
        stack.push(Frame {
            opts: search.options(),
            next: 0,
            applied: false,
        });
        None
    };
    PlausibleCollections {
        search,
        stack,
        trivial,
    }
}

/// Plausible collections over `cut` for `pairs`.
pub fn enumerate_plausible<'a>(
    g: &'a Graph,
    cut: &VertexSet,
    pairs: &'a [(usize, usize)],
) -> PlausibleCollections<'a> {
    enumerate_with_layout(g, Arc::new(CutLayout::new(g, cut)), pairs, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cut(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn path_through_single_cut_vertex() {
        let g = Graph::path(3);
        let all: Vec<_> = enumerate_plausible(&g, &cut(&[1]), &[(0, 2)]).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].scenarios[0].sequence, vec![0, 1, 2]);
    }

    #[test]
    fn c4_across_its_cut_has_no_collection() {
        let g = Graph::cycle(4);
        assert_eq!(enumerate_plausible(&g, &cut(&[1, 3]), &[(0, 2)]).count(), 0);
    }

    #[test]
    fn relaxed_mode_allows_unused_cut_vertices() {
        let g = Graph::cycle(4);
        let layout = Arc::new(CutLayout::new(&g, &cut(&[1, 3])));
        let seqs: Vec<_> = enumerate_with_layout(&g, layout, &[(0, 2)], true)
            .map(|c| c.scenarios[0].sequence.clone())
            .collect();
        assert_eq!(seqs, vec![vec![0, 1, 2], vec![0, 3, 2]]);
    }

    #[test]
    fn every_yield_is_plausible() {
        let g = Graph::cycle(6).with_edge(0, 3);
        let pairs = [(1, 4)];
        for c in enumerate_plausible(&g, &cut(&[0, 3]), &pairs) {
            assert!(is_plausible(&c, &g), "{c:?}");
        }
    }

    /// The worked example: s,c,d,e,f,g,o,p,q,r,y,t with the cut {d,e,f,p,r}.
    #[test]
    fn reduce_worked_example() {
        // s=0 a=1 b=2 c=3 d=4 e=5 f=6 g=7 h=8 o=9 p=10 q=11 r=12 y=13 z=14 t=15
        let mut edges: Vec<_> = (0..15).map(|i| (i, i + 1)).collect();
        edges.extend([(3, 11), (11, 13)]);
        let g = Graph::from_edges(16, &edges).unwrap();
        let layout = Arc::new(CutLayout::new(&g, &cut(&[4, 5, 6, 10, 12])));
        assert_eq!(layout.components.len(), 2);
        let c = ScenarioCollection {
            scenarios: vec![Scenario {
                pair: (0, 15),
                sequence: vec![0, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 15],
            }],
            layout: layout.clone(),
        };
        assert!(is_plausible(&c, &g));
        let q1 = layout.component_of(0).unwrap();
        let q2 = layout.component_of(7).unwrap();
        let r1 = reduce_component(q1, &c);
        assert_eq!(r1.pairs, vec![(0, 3), (13, 15)]);
        assert_eq!(r1.deleted, vec![11]);
        assert!(!r1.vertices.contains(11));
        let r2 = reduce_component(q2, &c);
        assert_eq!(r2.pairs, vec![(7, 9)]);
        assert!(r2.deleted.is_empty());
    }
}
