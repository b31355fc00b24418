//! Hamiltonian linkage in graphs of bounded independence number.
//!
//! For a graph `G` with `alpha(G) < k` and `l` terminal pairs, either `G` is
//! highly connected (then a spanning linkage always exists), or a minimum cut
//! `A` is small. In the latter case every spanning linkage induces a plausible
//! scenario collection over `A`, and the components of `G - A` reduce to
//! independent instances with independence number below `k - 1`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use crate::bits::Bits;
use crate::connectivity::{vertex_connectivity, CutResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{pairings, subsets, Defect, LinkageInstance};
use crate::par;
use crate::scenarios::{enumerate_with_layout, reduce_component, CutLayout, ScenarioCollection};

/// Connectivity above which a spanning linkage always exists.
pub fn g_threshold(k: usize, l: usize) -> usize {
    k.saturating_mul(l).max(l.saturating_mul(10))
}

/// Vertex-count bound of the kernel: `f(2, l) = 2`, `f(k, l) = 2 g(k, l) + f(k - 1, g(k, l) + l)`.
pub fn f_bound(k: usize, l: usize) -> usize {
    if k <= 2 {
        return 2;
    }
    let g = g_threshold(k, l);
    g.saturating_mul(2)
        .saturating_add(f_bound(k - 1, g.saturating_add(l)))
}

/// Contention-safe counters shared by all clones of a config.
#[derive(Debug, Default)]
pub struct Stats {
    pub nodes: AtomicU64,
    pub collections: AtomicU64,
    pub memo_hits: AtomicU64,
    pub connectivity_exits: AtomicU64,
    pub max_cut: AtomicUsize,
    pub max_depth: AtomicUsize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StatsSnapshot {
    pub nodes: u64,
    pub collections: u64,
    pub memo_hits: u64,
    pub connectivity_exits: u64,
    pub max_cut: usize,
    pub max_depth: usize,
}

impl Stats {
    pub fn snapshot(&self) -> StatsSnapshot {
        StatsSnapshot {
            nodes: self.nodes.load(Ordering::Relaxed),
            collections: self.collections.load(Ordering::Relaxed),
            memo_hits: self.memo_hits.load(Ordering::Relaxed),
            connectivity_exits: self.connectivity_exits.load(Ordering::Relaxed),
            max_cut: self.max_cut.load(Ordering::Relaxed),
            max_depth: self.max_depth.load(Ordering::Relaxed),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Promise parameter; `None` means `alpha(G) + 1`.
    pub k: Option<usize>,
    /// Verify `alpha(G) < k` exactly when `n <= max_alpha_n`.
    pub verify_promise: bool,
    pub max_alpha_n: usize,
    /// Size guard for brute-force fallbacks.
    pub max_oracle_n: usize,
    pub parallel: bool,
    pub stats: Arc<Stats>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            k: None,
            verify_promise: true,
            max_alpha_n: 30,
            max_oracle_n: crate::oracle::DEFAULT_MAX_ORACLE_N,
            parallel: par::AVAILABLE,
            stats: Arc::new(Stats::default()),
        }
    }
}

impl SolverConfig {
    pub fn with_k(k: usize) -> Self {
        SolverConfig {
            k: Some(k),
            ..Default::default()
        }
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }
}

/// The promise parameter for `g`: checked or computed as configured.
pub fn resolve_k(g: &Graph, cfg: &SolverConfig) -> Result<usize> {
    let n = g.n();
    match cfg.k {
        Some(k) => {
            if cfg.verify_promise && n <= cfg.max_alpha_n {
                let alpha = g.independence_number();
                if alpha >= k {
                    return Err(Error::PromiseViolation { alpha, k });
                }
            }
            Ok(k)
        }
        None => {
            if n > cfg.max_alpha_n {
                return Err(Error::SizeGuard {
                    what: "independence number",
                    n,
                    limit: cfg.max_alpha_n,
                });
            }
            Ok(g.independence_number() + 1)
        }
    }
}

/// An induced piece of the top-level graph with its cut data.
pub(crate) struct Piece {
    /// Local vertex `i` is global vertex `map[i]`.
    pub map: Vec<usize>,
    pub local: Graph,
    pub cut: CutResult,
    pub layout: Arc<CutLayout>,
    pub connected: bool,
}

impl Piece {
    pub fn to_local(&self, v: usize) -> usize {
        self.map.binary_search(&v).expect("vertex of the piece")
    }
}

type Key = (Bits, Vec<(usize, usize)>);

fn canonical(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut p: Vec<_> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    p.sort_unstable();
    p
}

/// Caches shared by every query against one graph.
pub(crate) struct Session<'g> {
    pub g: &'g Graph,
    pub k: usize,
    pub cfg: SolverConfig,
    pieces: Mutex<HashMap<Bits, Arc<Piece>>>,
    memo: Mutex<HashMap<Key, bool>>,
    defects: Mutex<HashMap<Key, Defect>>,
}

impl<'g> Session<'g> {
    pub fn new(g: &'g Graph, cfg: &SolverConfig) -> Result<Self> {
        let k = resolve_k(g, cfg)?;
        Ok(Session {
            g,
            k,
            cfg: cfg.clone(),
            pieces: Mutex::new(HashMap::new()),
            memo: Mutex::new(HashMap::new()),
            defects: Mutex::new(HashMap::new()),
        })
    }

    pub fn full_mask(&self) -> Bits {
        Bits::full(self.g.n())
    }

    pub fn mask_of(&self, vs: impl IntoIterator<Item = usize>) -> Bits {
        let mut b = Bits::new(self.g.n());
        for v in vs {
            b.insert(v);
        }
        b
    }

    pub fn piece(&self, mask: &Bits) -> Arc<Piece> {
        if let Some(p) = self.pieces.lock().unwrap().get(mask) {
            return p.clone();
        }
        let verts: Vec<usize> = mask.iter().collect();
        let (local, map) = self.g.induced_subgraph(&verts);
        let connected = local.is_connected();
        let cut = vertex_connectivity(&local);
        let layout = Arc::new(CutLayout::new(&local, &cut.cut));
        let p = Arc::new(Piece {
            map,
            local,
            cut,
            layout,
            connected,
        });
        self.pieces
            .lock()
            .unwrap()
            .entry(mask.clone())
            .or_insert(p)
            .clone()
    }

    fn stats(&self) -> &Stats {
        &self.cfg.stats
    }

    fn enter(&self, depth: usize) {
        let s = self.stats();
        s.nodes.fetch_add(1, Ordering::Relaxed);
        s.max_depth.fetch_max(depth, Ordering::Relaxed);
    }

    fn promise_broken(&self, piece: &Piece, k: usize) -> Error {
        Error::PromiseViolation {
            alpha: piece.local.independence_number(),
            k,
        }
    }

    /// Splits a disconnected piece: per component, its vertex mask and pairs.
    /// `None` if some pair spans two components.
    pub fn split(
        &self,
        piece: &Piece,
        pairs: &[(usize, usize)],
    ) -> Option<Vec<(Bits, Vec<(usize, usize)>)>> {
        let comps = piece.local.connected_components();
        let mut comp_of = vec![0; piece.map.len()];
        for (j, c) in comps.iter().enumerate() {
            for v in c.iter() {
                comp_of[v] = j;
            }
        }
        let mut out: Vec<(Bits, Vec<(usize, usize)>)> = comps
            .iter()
            .map(|c| (self.mask_of(c.iter().map(|v| piece.map[v])), Vec::new()))
            .collect();
        for &(s, t) in pairs {
            let (cs, ct) = (comp_of[piece.to_local(s)], comp_of[piece.to_local(t)]);
            if cs != ct {
                return None;
            }
            out[cs].1.push((s, t));
        }
        Some(out)
    }

    /// Local pairs of a piece.
    pub fn local_pairs(&self, piece: &Piece, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
        pairs
            .iter()
            .map(|&(s, t)| (piece.to_local(s), piece.to_local(t)))
            .collect()
    }

    /// Global mask and pairs of the component sub-instance induced by a collection.
    pub fn reduced(
        &self,
        piece: &Piece,
        j: usize,
        c: &ScenarioCollection,
    ) -> (Bits, Vec<(usize, usize)>) {
        let r = reduce_component(j, c);
        let mask = self.mask_of(r.vertices.iter().map(|v| piece.map[v]));
        let pairs = r
            .pairs
            .iter()
            .map(|&(a, b)| (piece.map[a], piece.map[b]))
            .collect();
        (mask, pairs)
    }

    /// Algorithm 1 on the piece `mask` with global `pairs`.
    pub fn decide(
        &self,
        mask: &Bits,
        pairs: &[(usize, usize)],
        k: usize,
        depth: usize,
    ) -> Result<bool> {
        if pairs.is_empty() {
            return Ok(mask.is_empty());
        }
        let key = (mask.clone(), canonical(pairs));
        if let Some(&v) = self.memo.lock().unwrap().get(&key) {
            self.stats().memo_hits.fetch_add(1, Ordering::Relaxed);
            return Ok(v);
        }
        self.enter(depth);
        let piece = self.piece(mask);
        let answer = if !piece.connected {
            match self.split(&piece, pairs) {
                None => false,
                Some(parts) => {
                    let mut ok = true;
                    for (m, p) in &parts {
                        if !self.decide(m, p, k, depth)? {
                            ok = false;
                            break;
                        }
                    }
                    ok
                }
            }
        } else if piece.local.is_complete() {
            true
        } else if k <= 2 {
            return Err(self.promise_broken(&piece, k));
        } else if piece.cut.connectivity >= g_threshold(k, pairs.len()) {
            self.stats()
                .connectivity_exits
                .fetch_add(1, Ordering::Relaxed);
            true
        } else {
            self.stats()
                .max_cut
                .fetch_max(piece.cut.cut.len(), Ordering::Relaxed);
            let local_pairs = self.local_pairs(&piece, pairs);
            let mut found = false;
            for c in enumerate_with_layout(&piece.local, piece.layout.clone(), &local_pairs, false)
            {
                self.stats().collections.fetch_add(1, Ordering::Relaxed);
                let mut ok = true;
                for j in 0..piece.layout.components.len() {
                    let (m, p) = self.reduced(&piece, j, &c);
                    if !self.decide(&m, &p, k - 1, depth + 1)? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    found = true;
                    break;
                }
            }
            found
        };
        self.memo.lock().unwrap().insert(key, answer);
        Ok(answer)
    }

    /// Fewest uncovered vertices over all linkages of the piece.
    pub fn defect(
        &self,
        mask: &Bits,
        pairs: &[(usize, usize)],
        k: usize,
        depth: usize,
    ) -> Result<Defect> {
        if pairs.is_empty() {
            return Ok(Defect::Finite(mask.count()));
        }
        let key = (mask.clone(), canonical(pairs));
        if let Some(&v) = self.defects.lock().unwrap().get(&key) {
            self.stats().memo_hits.fetch_add(1, Ordering::Relaxed);
            return Ok(v);
        }
        self.enter(depth);
        let piece = self.piece(mask);
        let answer = if !piece.connected {
            match self.split(&piece, pairs) {
                None => Defect::Infinite,
                Some(parts) => {
                    let mut total = Defect::Finite(0);
                    for (m, p) in &parts {
                        total = total.plus(self.defect(m, p, k, depth)?);
                        if total == Defect::Infinite {
                            break;
                        }
                    }
                    total
                }
            }
        } else if piece.local.is_complete() {
            Defect::Finite(0)
        } else if k <= 2 {
            return Err(self.promise_broken(&piece, k));
        } else if piece.cut.connectivity >= g_threshold(k, pairs.len()) {
            self.stats()
                .connectivity_exits
                .fetch_add(1, Ordering::Relaxed);
            Defect::Finite(0)
        } else {
            self.stats()
                .max_cut
                .fetch_max(piece.cut.cut.len(), Ordering::Relaxed);
            let local_pairs = self.local_pairs(&piece, pairs);
            let mut best = Defect::Infinite;
            for c in enumerate_with_layout(&piece.local, piece.layout.clone(), &local_pairs, true) {
                self.stats().collections.fetch_add(1, Ordering::Relaxed);
                let used: usize = c
                    .scenarios
                    .iter()
                    .map(|s| {
                        s.sequence
                            .iter()
                            .filter(|&&v| piece.layout.component_of(v).is_none())
                            .count()
                    })
                    .sum();
                let mut total = Defect::Finite(piece.layout.cut.len() - used);
                for j in 0..piece.layout.components.len() {
                    if total >= best {
                        break;
                    }
                    let (m, p) = self.reduced(&piece, j, &c);
                    total = total.plus(self.defect(&m, &p, k - 1, depth + 1)?);
                }
                if total < best {
                    best = total;
                    if best == Defect::Finite(0) {
                        break;
                    }
                }
            }
            best
        };
        self.defects.lock().unwrap().insert(key, answer);
        Ok(answer)
    }
}

fn check_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<()> {
    crate::oracle::validate_pairs(g.n(), pairs)
}

/// Decides spanning linkages repeatedly against one graph, sharing caches.
pub struct LinkageSolver<'g> {
    session: Session<'g>,
}

impl<'g> LinkageSolver<'g> {
    pub fn new(g: &'g Graph, cfg: &SolverConfig) -> Result<Self> {
        Ok(LinkageSolver {
            session: Session::new(g, cfg)?,
        })
    }

    pub fn k(&self) -> usize {
        self.session.k
    }

    pub(crate) fn session(&self) -> &Session<'g> {
        &self.session
    }

    /// Is there a spanning linkage for `pairs`?
    pub fn decide(&self, pairs: &[(usize, usize)]) -> Result<bool> {
        check_pairs(self.session.g, pairs)?;
        let s = &self.session;
        s.decide(&s.full_mask(), pairs, s.k, 0)
    }

    /// Minimum defect over all linkages for `pairs`.
    pub fn min_defect(&self, pairs: &[(usize, usize)]) -> Result<Defect> {
        check_pairs(self.session.g, pairs)?;
        let s = &self.session;
        s.defect(&s.full_mask(), pairs, s.k, 0)
    }

    /// Spanning linkage with the vertices in `singles` removed.
    pub(crate) fn decide_without(
        &self,
        singles: &[usize],
        pairs: &[(usize, usize)],
    ) -> Result<bool> {
        let s = &self.session;
        let mut mask = s.full_mask();
        for &v in singles {
            mask.remove(v);
        }
        s.decide(&mask, pairs, s.k, 0)
    }
}

/// Does `inst` admit a spanning linkage?
pub fn ham_linkage(inst: &LinkageInstance, cfg: &SolverConfig) -> Result<bool> {
    LinkageSolver::new(&inst.graph, cfg)?.decide(&inst.pairs)
}

/// Minimum number of uncovered vertices over all linkages, or infinite.
pub fn min_defect(inst: &LinkageInstance, cfg: &SolverConfig) -> Result<Defect> {
    LinkageSolver::new(&inst.graph, cfg)?.min_defect(&inst.pairs)
}

/// A boolean answer with an optional explanation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub answer: bool,
    pub diagnostic: Option<String>,
}

/// Hamiltonian `l`-linkedness: every choice of `l` pairs admits a spanning linkage.
pub fn ham_linkedness(g: &Graph, l: usize, cfg: &SolverConfig) -> Result<Verdict> {
    let n = g.n();
    if 2 * l > n {
        return Ok(Verdict {
            answer: false,
            diagnostic: Some(format!("{} terminals do not fit into {n} vertices", 2 * l)),
        });
    }
    let solver = LinkageSolver::new(g, cfg)?;
    let selections = crate::oracle::terminal_selections(n, l);
    let failure = par::find_map_first(&selections, cfg.parallel, |pairs| {
        match solver.decide(pairs) {
            Ok(true) => None,
            Ok(false) => Some(Ok(pairs.clone())),
            Err(e) => Some(Err(e)),
        }
    });
    match failure {
        None => Ok(Verdict {
            answer: true,
            diagnostic: None,
        }),
        Some(Ok(pairs)) => Ok(Verdict {
            answer: false,
            diagnostic: Some(format!("no spanning linkage for pairs {pairs:?}")),
        }),
        Some(Err(e)) => Err(e),
    }
}

/// A path cover shape: single-vertex paths plus terminal pairs of longer paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverShape {
    pub singles: Vec<usize>,
    pub pairs: Vec<(usize, usize)>,
}

/// First cover shape (in a fixed order) with exactly `l` paths, if any.
pub fn path_cover_shape(g: &Graph, l: usize, cfg: &SolverConfig) -> Result<Option<CoverShape>> {
    let n = g.n();
    if l > n {
        return Ok(None);
    }
    if l == 0 {
        return Ok((n == 0).then(|| CoverShape {
            singles: Vec::new(),
            pairs: Vec::new(),
        }));
    }
    let solver = LinkageSolver::new(g, cfg)?;
    path_cover_shape_with(&solver, l, cfg.parallel)
}

fn path_cover_shape_with(
    solver: &LinkageSolver<'_>,
    l: usize,
    parallel: bool,
) -> Result<Option<CoverShape>> {
    let n = solver.session.g.n();
    for j in 0..=l {
        let rest = l - j;
        if n - j < 2 * rest || (rest == 0 && n != j) {
            continue;
        }
        let mut shapes = Vec::new();
        for singles in subsets(n, j) {
            let left: Vec<usize> = (0..n).filter(|v| !singles.contains(v)).collect();
            for ends in subsets(left.len(), 2 * rest) {
                let ends: Vec<usize> = ends.iter().map(|&i| left[i]).collect();
                for pairs in pairings(&ends) {
                    shapes.push(CoverShape {
                        singles: singles.clone(),
                        pairs,
                    });
                }
            }
        }
        let hit = par::find_map_first(&shapes, parallel, |s| {
            match solver.decide_without(&s.singles, &s.pairs) {
                Ok(true) => Some(Ok(s.clone())),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        });
        if let Some(r) = hit {
            return r.map(Some);
        }
    }
    Ok(None)
}

/// Can `g` be covered by exactly `l` vertex-disjoint paths (single vertices allowed)?
pub fn path_cover_exists(g: &Graph, l: usize, cfg: &SolverConfig) -> Result<bool> {
    Ok(path_cover_shape(g, l, cfg)?.is_some())
}

/// Minimum number of paths covering `g`; sums over components.
pub fn path_cover_number(g: &Graph, cfg: &SolverConfig) -> Result<usize> {
    let k = resolve_k(g, cfg)?;
    let inner = SolverConfig {
        k: Some(k),
        verify_promise: false,
        ..cfg.clone()
    };
    let mut total = 0;
    for comp in g.connected_components() {
        let (h, _) = g.induced_subgraph(comp.as_slice());
        let solver = LinkageSolver::new(&h, &inner)?;
        let mut l = 1;
        loop {
            if path_cover_shape_with(&solver, l, cfg.parallel)?.is_some() {
                total += l;
                break;
            }
            l += 1;
        }
    }
    Ok(total)
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Some terminal pair `(s, t)` joined by a Hamiltonian path, if any.
pub fn ham_path_ends(g: &Graph, cfg: &SolverConfig) -> Result<Option<(usize, usize)>> {
    let solver = LinkageSolver::new(g, cfg)?;
    let pairs = all_pairs(g.n());
    par::find_map_first(&pairs, cfg.parallel, |&p| match solver.decide(&[p]) {
        Ok(true) => Some(Ok(p)),
        Ok(false) => None,
        Err(e) => Some(Err(e)),
    })
    .transpose()
}

pub fn ham_path(g: &Graph, cfg: &SolverConfig) -> Result<bool> {
    match g.n() {
        0 => Ok(false),
        1 => Ok(true),
        _ => Ok(ham_path_ends(g, cfg)?.is_some()),
    }
}

/// Some edge whose ends are joined by a Hamiltonian path, if any.
pub fn ham_cycle_edge(g: &Graph, cfg: &SolverConfig) -> Result<Option<(usize, usize)>> {
    if g.n() < 3 {
        return Ok(None);
    }
    let solver = LinkageSolver::new(g, cfg)?;
    let edges: Vec<_> = g.edges().collect();
    par::find_map_first(&edges, cfg.parallel, |&p| match solver.decide(&[p]) {
        Ok(true) => Some(Ok(p)),
        Ok(false) => None,
        Err(e) => Some(Err(e)),
    })
    .transpose()
}

pub fn ham_cycle(g: &Graph, cfg: &SolverConfig) -> Result<bool> {
    Ok(ham_cycle_edge(g, cfg)?.is_some())
}

/// First pair (lexicographically) not joined by a Hamiltonian path.
pub fn ham_connected_failure(g: &Graph, cfg: &SolverConfig) -> Result<Option<(usize, usize)>> {
    if g.n() < 2 {
        return Ok(None);
    }
    let solver = LinkageSolver::new(g, cfg)?;
    let pairs = all_pairs(g.n());
    par::find_map_first(&pairs, cfg.parallel, |&p| match solver.decide(&[p]) {
        Ok(true) => None,
        Ok(false) => Some(Ok(p)),
        Err(e) => Some(Err(e)),
    })
    .transpose()
}

pub fn ham_connected(g: &Graph, cfg: &SolverConfig) -> Result<bool> {
    if g.n() == 0 {
        return Ok(false);
    }
    Ok(ham_connected_failure(g, cfg)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SolverConfig {
        SolverConfig::default().sequential()
    }

    fn inst(g: Graph, pairs: &[(usize, usize)]) -> LinkageInstance {
        LinkageInstance::new(g, pairs.to_vec()).unwrap()
    }

    #[test]
    fn bounds() {
        for l in 1..=10 {
            assert_eq!(f_bound(2, l), 2);
            assert_eq!(f_bound(3, l), 20 * l + 2);
            assert_eq!(f_bound(4, l), 240 * l + 2);
        }
        assert_eq!(g_threshold(3, 1), 10);
        assert_eq!(g_threshold(12, 2), 24);
    }

    #[test]
    fn small_examples() {
        assert!(!ham_linkage(&inst(Graph::cycle(4), &[(0, 2)]), &cfg()).unwrap());
        assert!(ham_linkage(&inst(Graph::cycle(4), &[(0, 1)]), &cfg()).unwrap());
        assert!(ham_linkage(&inst(Graph::complete(5), &[(0, 1), (2, 3)]), &cfg()).unwrap());
        assert!(!ham_linkedness(&Graph::cycle(5), 1, &cfg()).unwrap().answer);
        assert!(!path_cover_exists(&Graph::star(3), 1, &cfg()).unwrap());
        assert!(path_cover_exists(&Graph::star(3), 2, &cfg()).unwrap());
        assert!(ham_path(&Graph::path(5), &cfg()).unwrap());
        assert!(ham_cycle(&Graph::cycle(6), &cfg()).unwrap());
        assert!(!ham_cycle(&Graph::path(4), &cfg()).unwrap());
    }

    #[test]
    fn defects() {
        assert_eq!(
            min_defect(&inst(Graph::path(4), &[(0, 2)]), &cfg()).unwrap(),
            Defect::Finite(1)
        );
        let two = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(
            min_defect(&inst(two, &[(0, 2)]), &cfg()).unwrap(),
            Defect::Infinite
        );
    }

    #[test]
    fn promise_is_checked() {
        let e =
            ham_linkage(&inst(Graph::cycle(6), &[(0, 1)]), &SolverConfig::with_k(3)).unwrap_err();
        assert_eq!(e, Error::PromiseViolation { alpha: 3, k: 3 });
    }

    #[test]
    fn linkedness_needs_room() {
        let v = ham_linkedness(&Graph::complete(3), 2, &cfg()).unwrap();
        assert!(!v.answer);
        assert!(v.diagnostic.is_some());
    }

    #[test]
    fn path_cover_numbers() {
        assert_eq!(path_cover_number(&Graph::star(3), &cfg()).unwrap(), 2);
        assert_eq!(path_cover_number(&Graph::empty(3), &cfg()).unwrap(), 3);
        assert_eq!(path_cover_number(&Graph::complete(4), &cfg()).unwrap(), 1);
    }
}
