//! Characterisations of Hamiltonian paths and two-path covers in graphs with
//! independence number at most four.
//!
//! The 3K1 and 4K1 Hamiltonian path tests are closed forms over articulation
//! points and 2-cuts. The remaining queries (a path from a given vertex in
//! 4K1-free graphs, two paths from given vertices, a Hamiltonian path in
//! 5K1-free graphs) run a cut-threading search. It splits at an articulation
//! point or a 2-cut, enumerates how the demanded paths cross the cut, and
//! recurses into the components. Pieces without such a cut are settled by
//! Chvatal-Erdos type bounds, and the search falls back to the exact linkage
//! solver only when none of these apply.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::HamTables;
use crate::solver::{LinkageSolver, SolverConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub query: String,
    pub graph: Graph,
    pub decided: bool,
    pub oracle: bool,
}

#[derive(Clone, Debug)]
pub struct StructuralConfig {
    /// Check the independence bound (and connectivity where required).
    pub check_promise: bool,
    /// Cross-check against the brute-force tables up to this many vertices.
    pub validate_up_to: Option<usize>,
    pub divergences: Arc<Mutex<Vec<Divergence>>>,
}

impl Default for StructuralConfig {
    fn default() -> Self {
        StructuralConfig {
            check_promise: true,
            validate_up_to: None,
            divergences: Arc::new(Mutex::new(Vec::new())),
        }
    }
}

impl StructuralConfig {
    pub fn validated(max_n: usize) -> Self {
        StructuralConfig {
            validate_up_to: Some(max_n),
            ..Default::default()
        }
    }

    pub fn divergences(&self) -> Vec<Divergence> {
        self.divergences.lock().unwrap().clone()
    }

    fn cross_check(
        &self,
        query: String,
        g: &Graph,
        decided: bool,
        oracle: impl FnOnce(&HamTables) -> bool,
    ) {
        let Some(limit) = self.validate_up_to else {
            return;
        };
        if g.n() > limit.min(16) || g.n() == 0 {
            return;
        }
        let tables = HamTables::new(g, 16).expect("within the table guard");
        self.cross_check_with(query, g, decided, oracle(&tables));
    }

    fn cross_check_with(&self, query: String, g: &Graph, decided: bool, want: bool) {
        if want != decided {
            self.divergences.lock().unwrap().push(Divergence {
                query,
                graph: g.clone(),
                decided,
                oracle: want,
            });
        }
    }
}

fn require(g: &Graph, k: usize, connected: bool, cfg: &StructuralConfig) -> Result<()> {
    if !cfg.check_promise {
        return Ok(());
    }
    if !g.is_kk1_free(k) {
        return Err(Error::PromiseViolation {
            alpha: g.independence_number(),
            k,
        });
    }
    if connected && !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn require_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::InvalidInstance(format!(
            "vertex {v} out of range for n = {}",
            g.n()
        )));
    }
    Ok(())
}

fn between_3k1(g: &Graph, u: usize, v: usize) -> bool {
    if g.n() == 2 {
        return g.has_edge(u, v);
    }
    let profile = g.components_after_removal();
    if profile[u] > 1 || profile[v] > 1 {
        return false;
    }
    for x in 0..g.n() {
        if profile[x] > 1 && x != u && x != v {
            let mut blocked = vec![false; g.n()];
            blocked[x] = true;
            let comps = g.components_avoiding(&blocked);
            if comps.iter().any(|c| c.contains(u) && c.contains(v)) {
                return false;
            }
        }
    }
    let (rest, _) = g.without(&[u, v]);
    rest.is_connected()
}

/// Hamiltonian `u`-`v` path in a connected 3K1-free graph: neither end is an
/// articulation point, every articulation point separates `u` from `v`, and
/// `{u, v}` is not a 2-cut.
pub fn ham_path_between_3k1(g: &Graph, u: usize, v: usize, cfg: &StructuralConfig) -> Result<bool> {
    require_vertex(g, u)?;
    require_vertex(g, v)?;
    if u == v {
        return Err(Error::Precondition("the two ends must differ".into()));
    }
    require(g, 3, true, cfg)?;
    let answer = between_3k1(g, u, v);
    cfg.cross_check(format!("ham_path_between_3k1({u}, {v})"), g, answer, |t| {
        t.path_between(u, v)
    });
    Ok(answer)
}

/// Hamiltonian path from `u` in a connected 3K1-free graph: `u` is not an
/// articulation point.
pub fn ham_path_from_3k1(g: &Graph, u: usize, cfg: &StructuralConfig) -> Result<bool> {
    require_vertex(g, u)?;
    require(g, 3, true, cfg)?;
    let answer = g.n() == 1 || g.components_after_removal()[u] <= 1;
    cfg.cross_check(format!("ham_path_from_3k1({u})"), g, answer, |t| {
        t.path_from(u)
    });
    Ok(answer)
}

/// Two disjoint paths covering a connected 3K1-free graph, starting at `u` and
/// at `v`: they always exist.
pub fn pc2_from_pair_3k1(g: &Graph, u: usize, v: usize, cfg: &StructuralConfig) -> Result<bool> {
    require_vertex(g, u)?;
    require_vertex(g, v)?;
    if u == v {
        return Err(Error::Precondition("the two ends must differ".into()));
    }
    require(g, 3, true, cfg)?;
    cfg.cross_check(format!("pc2_from_pair_3k1({u}, {v})"), g, true, |t| {
        t.pc_uv(u, v)
    });
    Ok(true)
}

/// Answer of the 4K1 Hamiltonian path test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FourK1Path {
    pub ham_path: bool,
    /// Set when there is no Hamiltonian path: two paths then suffice.
    pub pc2_guarantee: bool,
    /// Adjacency and triangle inspections performed.
    pub inspections: u64,
}

fn four_k1_closed_form(g: &Graph) -> FourK1Path {
    let profile = g.components_after_removal();
    let mut inspections = (g.n() + 2 * g.m()) as u64;
    let cuts: Vec<usize> = (0..g.n()).filter(|&x| profile[x] > 1).collect();
    let mut ok = cuts.iter().all(|&x| profile[x] == 2);
    if ok {
        'tri: for (i, &a) in cuts.iter().enumerate() {
            for (j, &b) in cuts.iter().enumerate().skip(i + 1) {
                inspections += 1;
                if !g.has_edge(a, b) {
                    continue;
                }
                for &c in &cuts[j + 1..] {
                    inspections += 1;
                    if g.has_edge(a, c) && g.has_edge(b, c) {
                        ok = false;
                        break 'tri;
                    }
                }
            }
        }
    }
    FourK1Path {
        ham_path: ok,
        pc2_guarantee: !ok,
        inspections,
    }
}

/// Hamiltonian path in a connected 4K1-free graph: every articulation point
/// leaves exactly two components and no three articulation points form a triangle.
pub fn ham_path_4k1(g: &Graph, cfg: &StructuralConfig) -> Result<FourK1Path> {
    require(g, 4, true, cfg)?;
    let d = four_k1_closed_form(g);
    cfg.cross_check("ham_path_4k1".into(), g, d.ham_path, |t| t.ham_path());
    Ok(d)
}

/// Hamiltonian path from `u` in a connected 4K1-free graph.
pub fn ham_path_from_4k1(g: &Graph, u: usize, cfg: &StructuralConfig) -> Result<bool> {
    FourK1Queries::new(g, cfg)?.path_from(u)
}

/// Two disjoint paths covering a 4K1-free graph (connected or not), one
/// starting at `u` and one at `v`.
pub fn pc_uv_4k1(g: &Graph, u: usize, v: usize, cfg: &StructuralConfig) -> Result<bool> {
    FourK1Queries::new(g, cfg)?.pc_uv(u, v)
}

/// Repeated end-constrained queries on one 4K1-free graph. Queries share the
/// search memo, so asking about every vertex or pair is much cheaper than
/// separate calls.
pub struct FourK1Queries<'g> {
    g: &'g Graph,
    cfg: StructuralConfig,
    engine: Engine<'g>,
    tables: Option<HamTables>,
}

impl<'g> FourK1Queries<'g> {
    pub fn new(g: &'g Graph, cfg: &StructuralConfig) -> Result<Self> {
        require(g, 4, false, cfg)?;
        let tables = match cfg.validate_up_to {
            Some(limit) if g.n() >= 1 && g.n() <= limit.min(16) => Some(HamTables::new(g, 16)?),
            _ => None,
        };
        Ok(FourK1Queries {
            g,
            cfg: cfg.clone(),
            engine: Engine::new(g),
            tables,
        })
    }

    fn record(&self, query: String, decided: bool, want: impl FnOnce(&HamTables) -> bool) {
        if let Some(t) = &self.tables {
            self.cfg.cross_check_with(query, self.g, decided, want(t));
        }
    }

    pub fn path_from(&mut self, u: usize) -> Result<bool> {
        require_vertex(self.g, u)?;
        if self.cfg.check_promise && !self.g.is_connected() {
            return Err(Error::Disconnected);
        }
        let answer = self
            .engine
            .cover_all(vec![(End::only(&[u]), End::Free)], 3)?;
        self.record(format!("ham_path_from_4k1({u})"), answer, |t| {
            t.path_from(u)
        });
        Ok(answer)
    }

    pub fn pc_uv(&mut self, u: usize, v: usize) -> Result<bool> {
        require_vertex(self.g, u)?;
        require_vertex(self.g, v)?;
        if u == v {
            return Err(Error::Precondition("the two ends must differ".into()));
        }
        let demands = vec![(End::only(&[u]), End::Free), (End::only(&[v]), End::Free)];
        let answer = self.engine.cover_all(demands, 3)?;
        self.record(format!("pc_uv_4k1({u}, {v})"), answer, |t| t.pc_uv(u, v));
        Ok(answer)
    }
}

/// Hamiltonian path in a connected 5K1-free graph.
pub fn ham_path_5k1(g: &Graph, cfg: &StructuralConfig) -> Result<bool> {
    require(g, 5, true, cfg)?;
    let answer = Engine::new(g).cover_all(vec![(End::Free, End::Free)], 4)?;
    cfg.cross_check("ham_path_5k1".into(), g, answer, |t| t.ham_path());
    Ok(answer)
}

/// Constraint on one end of a demanded path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum End {
    Free,
    Only(Vec<usize>),
}

impl End {
    fn only(vs: &[usize]) -> End {
        let mut v = vs.to_vec();
        v.sort_unstable();
        v.dedup();
        End::Only(v)
    }

    fn allows(&self, v: usize) -> bool {
        match self {
            End::Free => true,
            End::Only(s) => s.binary_search(&v).is_ok(),
        }
    }

    /// Restriction to a vertex set; `None` if nothing is left.
    fn within(&self, verts: &[usize]) -> Option<End> {
        match self {
            End::Free => Some(End::Free),
            End::Only(s) => {
                let v: Vec<usize> = s
                    .iter()
                    .copied()
                    .filter(|x| verts.binary_search(x).is_ok())
                    .collect();
                (!v.is_empty()).then_some(End::Only(v))
            }
        }
    }

    fn candidates<'a>(&'a self, verts: &'a [usize]) -> &'a [usize] {
        match self {
            End::Free => verts,
            End::Only(s) => s,
        }
    }
}

/// A path with constrained ends; orientation does not matter.
type Demand = (End, End);

fn normalise(mut d: Vec<Demand>) -> Vec<Demand> {
    for x in &mut d {
        if x.1 < x.0 {
            std::mem::swap(&mut x.0, &mut x.1);
        }
    }
    d.sort();
    d
}

/// Cut-threading search over induced subgraphs of a fixed graph.
struct Engine<'g> {
    g: &'g Graph,
    memo: HashMap<(Vec<usize>, Vec<Demand>), bool>,
}

impl<'g> Engine<'g> {
    fn new(g: &'g Graph) -> Self {
        Engine {
            g,
            memo: HashMap::new(),
        }
    }

    fn cover_all(&mut self, demands: Vec<Demand>, alpha: usize) -> Result<bool> {
        let verts: Vec<usize> = (0..self.g.n()).collect();
        self.cover(&verts, demands, alpha)
    }

    /// Can `verts` be partitioned into paths meeting `demands`, given that the
    /// induced subgraph has independence number at most `alpha`?
    fn cover(&mut self, verts: &[usize], demands: Vec<Demand>, alpha: usize) -> Result<bool> {
        let mut ds = Vec::with_capacity(demands.len());
        for (a, b) in demands {
            match (a.within(verts), b.within(verts)) {
                (Some(a), Some(b)) => ds.push((a, b)),
                _ => return Ok(false),
            }
        }
        if ds.len() > verts.len() {
            return Ok(false);
        }
        if ds.is_empty() || verts.is_empty() {
            return Ok(ds.is_empty() && verts.is_empty());
        }
        let ds = normalise(ds);
        let key = (verts.to_vec(), ds.clone());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let answer = self.cover_uncached(verts, &ds, alpha)?;
        self.memo.insert(key, answer);
        Ok(answer)
    }

    fn cover_uncached(&mut self, verts: &[usize], ds: &[Demand], alpha: usize) -> Result<bool> {
        let (h, map) = self.g.induced_subgraph(verts);
        let comps = h.connected_components();
        if comps.len() > 1 {
            let parts: Vec<Vec<usize>> = comps
                .iter()
                .map(|c| c.iter().map(|v| map[v]).collect())
                .collect();
            return self.assign(&parts, ds, alpha.saturating_sub(parts.len() - 1));
        }
        if h.is_complete() {
            return Ok(clique_cover(verts, ds));
        }
        if alpha <= 2 && ds.len() == 1 {
            return Ok(self.three_k1_single(&h, &map, &ds[0]));
        }
        if alpha <= 2 && ds.len() == 2 && ds.iter().all(|d| d.0 == End::Free || d.1 == End::Free) {
            let ends: Vec<&End> = ds
                .iter()
                .map(|d| if d.0 == End::Free { &d.1 } else { &d.0 })
                .collect();
            let (a, b) = (ends[0].candidates(verts), ends[1].candidates(verts));
            return Ok(a.iter().any(|x| b.iter().any(|y| x != y)));
        }
        if alpha <= 3 && ds.len() == 1 && ds[0] == (End::Free, End::Free) {
            return Ok(four_k1_closed_form(&h).ham_path);
        }
        if let Some(cut) = small_cut(&h) {
            let cut: Vec<usize> = cut.into_iter().map(|v| map[v]).collect();
            return self.thread(verts, &cut, ds, alpha);
        }
        // at least 3-connected from here on
        if ds.len() == 1 {
            let (a, b) = &ds[0];
            let decided = match (a, b) {
                (End::Free, End::Free) => alpha <= 4,
                (End::Free, End::Only(_)) | (End::Only(_), End::Free) => alpha <= 3,
                _ => false,
            };
            if decided {
                return Ok(true);
            }
        }
        // a Hamiltonian cycle exists; cut it just before each chosen start
        if alpha <= 3 && ds.iter().all(|d| d.0 == End::Free || d.1 == End::Free) {
            let starts: Vec<&End> = ds
                .iter()
                .map(|d| if d.0 == End::Free { &d.1 } else { &d.0 })
                .collect();
            if distinct_representatives(&starts, verts, &mut Vec::new()) {
                return Ok(true);
            }
        }
        self.fallback(&h, &map, ds)
    }

    /// Distributes demands over the components of a disconnected piece.
    fn assign(&mut self, parts: &[Vec<usize>], ds: &[Demand], alpha: usize) -> Result<bool> {
        if ds.len() < parts.len() {
            return Ok(false);
        }
        let mut choice = vec![0usize; ds.len()];
        loop {
            let mut groups: Vec<Vec<Demand>> = vec![Vec::new(); parts.len()];
            for (d, &c) in ds.iter().zip(&choice) {
                groups[c].push(d.clone());
            }
            if groups.iter().all(|g| !g.is_empty()) {
                let mut ok = true;
                for (part, group) in parts.iter().zip(groups) {
                    if !self.cover(part, group, alpha)? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    return Ok(true);
                }
            }
            let mut i = 0;
            loop {
                if i == choice.len() {
                    return Ok(false);
                }
                choice[i] += 1;
                if choice[i] < parts.len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    /// Connected piece with independence number at most two, one demand.
    fn three_k1_single(&self, h: &Graph, map: &[usize], d: &Demand) -> bool {
        let n = h.n();
        if n == 1 {
            return d.0.allows(map[0]) && d.1.allows(map[0]);
        }
        let profile = h.components_after_removal();
        match d {
            (End::Free, End::Free) => true,
            (End::Only(x), End::Free) | (End::Free, End::Only(x)) => x
                .iter()
                .any(|&v| profile[map.binary_search(&v).unwrap()] <= 1),
            (End::Only(x), End::Only(y)) => x.iter().any(|&a| {
                y.iter().any(|&b| {
                    a != b
                        && between_3k1(
                            h,
                            map.binary_search(&a).unwrap(),
                            map.binary_search(&b).unwrap(),
                        )
                })
            }),
        }
    }

    /// Enumerates how the demanded paths pass through `cut` and recurses into
    /// the components of the piece minus the cut.
    fn thread(
        &mut self,
        verts: &[usize],
        cut: &[usize],
        ds: &[Demand],
        alpha: usize,
    ) -> Result<bool> {
        let g = self.g;
        let rest: Vec<usize> = verts.iter().copied().filter(|v| !cut.contains(v)).collect();
        let (h, map) = g.induced_subgraph(&rest);
        let parts: Vec<Vec<usize>> = h
            .connected_components()
            .iter()
            .map(|c| c.iter().map(|v| map[v]).collect())
            .collect();
        let sub_alpha = alpha.saturating_sub(parts.len() - 1);
        let touch: Vec<Vec<Option<End>>> = cut
            .iter()
            .map(|&c| {
                parts
                    .iter()
                    .map(|p| {
                        let t: Vec<usize> =
                            p.iter().copied().filter(|&q| g.has_edge(c, q)).collect();
                        (!t.is_empty()).then_some(End::Only(t))
                    })
                    .collect()
            })
            .collect();
        let ctx = Threading {
            g,
            cut,
            parts: &parts,
            touch: &touch,
        };
        let p = ds.len();
        // for each demand, the cut vertices it visits in order
        let mut placements: Vec<Vec<Vec<usize>>> = Vec::new();
        match cut {
            [a] => {
                for d in 0..p {
                    let mut pl = vec![Vec::new(); p];
                    pl[d].push(*a);
                    placements.push(pl);
                }
            }
            [a, b] => {
                for d in 0..p {
                    for order in [[*a, *b], [*b, *a]] {
                        let mut pl = vec![Vec::new(); p];
                        pl[d].extend(order);
                        placements.push(pl);
                    }
                    for e in 0..p {
                        if e != d {
                            let mut pl = vec![Vec::new(); p];
                            pl[d].push(*a);
                            pl[e].push(*b);
                            placements.push(pl);
                        }
                    }
                }
            }
            _ => unreachable!("cuts have one or two vertices"),
        }
        'placements: for pl in placements {
            let mut per_demand = Vec::with_capacity(p);
            for (d, cs) in ds.iter().zip(&pl) {
                let mut out = Vec::new();
                ctx.options(d, cs, 0, &mut Vec::new(), &mut out);
                if out.is_empty() {
                    continue 'placements;
                }
                per_demand.push(out);
            }
            let mut segs = vec![Vec::new(); parts.len()];
            if self.combine(&parts, &per_demand, 0, &mut segs, sub_alpha)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn combine(
        &mut self,
        parts: &[Vec<usize>],
        per_demand: &[Vec<Vec<(usize, Demand)>>],
        i: usize,
        segs: &mut Vec<Vec<Demand>>,
        alpha: usize,
    ) -> Result<bool> {
        if i == per_demand.len() {
            if segs.iter().any(Vec::is_empty) {
                return Ok(false);
            }
            for (part, s) in parts.iter().zip(segs.iter()) {
                if !self.cover(part, s.clone(), alpha)? {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        for option in &per_demand[i] {
            for (j, d) in option {
                segs[*j].push(d.clone());
            }
            let fits = option
                .iter()
                .all(|(j, _)| segs[*j].len() <= parts[*j].len());
            let ok = fits && self.combine(parts, per_demand, i + 1, segs, alpha)?;
            for (j, _) in option {
                segs[*j].pop();
            }
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Exact linkage query. An end that is not a single vertex becomes an
    /// extra terminal adjacent to the allowed set; removing it afterwards
    /// leaves a path ending anywhere in that set.
    fn fallback(&mut self, h: &Graph, map: &[usize], ds: &[Demand]) -> Result<bool> {
        let n = h.n();
        let local = |v: usize| map.binary_search(&v).expect("vertex of the piece");
        let mut edges: Vec<(usize, usize)> = h.edges().collect();
        let mut next = n;
        let mut singles = Vec::new();
        let mut pairs = Vec::new();
        let mut fixed = vec![false; n];
        let mut terminal =
            |e: &End, edges: &mut Vec<(usize, usize)>, fixed: &mut Vec<bool>| -> Option<usize> {
                match e {
                    End::Only(s) if s.len() == 1 => {
                        let v = local(s[0]);
                        (!std::mem::replace(&mut fixed[v], true)).then_some(v)
                    }
                    _ => {
                        let z = next;
                        next += 1;
                        for v in 0..n {
                            if e.allows(map[v]) {
                                edges.push((v, z));
                            }
                        }
                        Some(z)
                    }
                }
            };
        for (a, b) in ds {
            if a == b && matches!(a, End::Only(s) if s.len() == 1) {
                let End::Only(s) = a else { unreachable!() };
                let v = local(s[0]);
                if std::mem::replace(&mut fixed[v], true) {
                    return Ok(false);
                }
                singles.push(v);
                continue;
            }
            match (
                terminal(a, &mut edges, &mut fixed),
                terminal(b, &mut edges, &mut fixed),
            ) {
                (Some(x), Some(y)) => pairs.push((x, y)),
                _ => return Ok(false),
            }
        }
        let aux = Graph::from_edges(next, &edges)?;
        let cfg = SolverConfig {
            k: Some(aux.independence_number() + 1),
            verify_promise: false,
            parallel: false,
            ..Default::default()
        };
        let solver = LinkageSolver::new(&aux, &cfg)?;
        if pairs.is_empty() {
            return Ok(singles.len() == n);
        }
        solver.decide_without(&singles, &pairs)
    }
}

fn distinct_representatives(sets: &[&End], verts: &[usize], used: &mut Vec<usize>) -> bool {
    let Some((first, rest)) = sets.split_first() else {
        return true;
    };
    for &v in first.candidates(verts) {
        if !used.contains(&v) {
            used.push(v);
            let ok = distinct_representatives(rest, verts, used);
            used.pop();
            if ok {
                return true;
            }
        }
    }
    false
}

/// Data for splitting demands at a cut.
struct Threading<'a> {
    g: &'a Graph,
    cut: &'a [usize],
    parts: &'a [Vec<usize>],
    /// Neighbours of each cut vertex inside each component.
    touch: &'a [Vec<Option<End>>],
}

impl Threading<'_> {
    /// Ways to route one demand through its cut vertices `cs`: each gap around
    /// them is empty or a segment inside one component.
    fn options(
        &self,
        d: &Demand,
        cs: &[usize],
        gap: usize,
        acc: &mut Vec<(usize, Demand)>,
        out: &mut Vec<Vec<(usize, Demand)>>,
    ) {
        let (start, end) = d;
        if cs.is_empty() {
            for (j, part) in self.parts.iter().enumerate() {
                if let (Some(a), Some(b)) = (start.within(part), end.within(part)) {
                    out.push(vec![(j, (a, b))]);
                }
            }
            return;
        }
        if gap > cs.len() {
            out.push(acc.clone());
            return;
        }
        let left = gap.checked_sub(1).map(|i| cs[i]);
        let right = cs.get(gap).copied();
        let empty_ok = match (left, right) {
            (None, Some(c)) => start.allows(c),
            (Some(c), None) => end.allows(c),
            (Some(a), Some(b)) => self.g.has_edge(a, b),
            (None, None) => unreachable!(),
        };
        if empty_ok {
            self.options(d, cs, gap + 1, acc, out);
        }
        let pos = |c: usize| self.cut.iter().position(|&x| x == c).expect("cut vertex");
        for (j, part) in self.parts.iter().enumerate() {
            let side = |c: Option<usize>, outer: &End| match c {
                Some(c) => self.touch[pos(c)][j].clone(),
                None => outer.within(part),
            };
            if let (Some(a), Some(b)) = (side(left, start), side(right, end)) {
                acc.push((j, (a, b)));
                self.options(d, cs, gap + 1, acc, out);
                acc.pop();
            }
        }
    }
}

/// Clique piece: choose ends for each demand; leftovers need a path with two ends.
fn clique_cover(verts: &[usize], ds: &[Demand]) -> bool {
    let cap = 2 * ds.len() + 1;
    let opts: Vec<Vec<(usize, Option<usize>)>> = ds
        .iter()
        .map(|(a, b)| {
            let ca: Vec<usize> = a.candidates(verts).iter().copied().take(cap).collect();
            let cb: Vec<usize> = b.candidates(verts).iter().copied().take(cap).collect();
            let mut o = Vec::new();
            for &x in &ca {
                if b.allows(x) {
                    o.push((x, None));
                }
                for &y in &cb {
                    if y != x {
                        o.push((x, Some(y)));
                    }
                }
            }
            o
        })
        .collect();
    fn rec(
        opts: &[Vec<(usize, Option<usize>)>],
        i: usize,
        used: &mut Vec<usize>,
        long: bool,
        n: usize,
    ) -> bool {
        if i == opts.len() {
            return used.len() == n || long;
        }
        for &(a, b) in &opts[i] {
            if used.contains(&a) || b.is_some_and(|b| used.contains(&b)) {
                continue;
            }
            used.push(a);
            used.extend(b);
            let ok = rec(opts, i + 1, used, long || b.is_some(), n);
            used.truncate(used.len() - 1 - usize::from(b.is_some()));
            if ok {
                return true;
            }
        }
        false
    }
    rec(&opts, 0, &mut Vec::new(), false, verts.len())
}

/// Smallest articulation point, else lexicographically smallest 2-cut.
fn small_cut(h: &Graph) -> Option<Vec<usize>> {
    let profile = h.components_after_removal();
    if let Some(x) = (0..h.n()).find(|&x| profile[x] > 1) {
        return Some(vec![x]);
    }
    if h.n() < 4 {
        return None;
    }
    for v in 0..h.n() {
        let cuts = articulation_without(h, v);
        if let Some(w) = (v + 1..h.n()).find(|&w| cuts[w]) {
            return Some(vec![v, w]);
        }
    }
    None
}

/// Articulation points of the connected graph `h - skip`.
fn articulation_without(h: &Graph, skip: usize) -> Vec<bool> {
    let n = h.n();
    let mut cut = vec![false; n];
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let root = if skip == 0 { 1 } else { 0 };
    disc[skip] = 0;
    disc[root] = 1;
    low[root] = 1;
    let mut time = 2;
    let mut root_children = 0;
    let mut stack = vec![(root, usize::MAX, 0usize)];
    while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
        let nb = h.neighbors(v);
        if *idx < nb.len() {
            let w = nb[*idx];
            *idx += 1;
            if w == skip {
                continue;
            }
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
                    cut[parent] = true;
                }
            }
        }
    }
    cut[root] = root_children > 1;
    cut
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> StructuralConfig {
        StructuralConfig::validated(14)
    }

    #[test]
    fn three_k1_examples() {
        let c = cfg();
        assert!(ham_path_between_3k1(&Graph::path(3), 0, 2, &c).unwrap());
        assert!(!ham_path_between_3k1(&Graph::path(3), 0, 1, &c).unwrap());
        assert!(!ham_path_from_3k1(&Graph::path(3), 1, &c).unwrap());
        assert!(pc2_from_pair_3k1(&Graph::complete(2), 0, 1, &c).unwrap());
        assert!(c.divergences().is_empty());
    }

    #[test]
    fn four_k1_examples() {
        let c = cfg();
        // triangle with a pendant at each corner
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let d = ham_path_4k1(&g, &c).unwrap();
        assert!(!d.ham_path && d.pc2_guarantee);
        assert!(ham_path_4k1(&Graph::path(4), &c).unwrap().ham_path);
        assert!(!ham_path_4k1(&Graph::star(3), &c).unwrap().ham_path);
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(pc_uv_4k1(&two_triangles, 0, 3, &c).unwrap());
        assert!(!pc_uv_4k1(&two_triangles, 0, 1, &c).unwrap());
        assert!(ham_path_from_4k1(&Graph::cycle(6), 2, &c).unwrap());
        assert!(c.divergences().is_empty(), "{:?}", c.divergences());
    }

    #[test]
    fn five_k1_examples() {
        let c = cfg();
        assert!(ham_path_5k1(&Graph::cycle(8), &c).unwrap());
        assert!(!ham_path_5k1(&Graph::star(3), &c).unwrap());
        assert!(ham_path_5k1(&Graph::petersen(), &c).unwrap());
        assert!(c.divergences().is_empty(), "{:?}", c.divergences());
    }

    #[test]
    fn promise_errors() {
        let e = ham_path_4k1(&Graph::empty(4).with_edge(0, 1), &cfg()).unwrap_err();
        assert_eq!(e, Error::Disconnected);
        let e = ham_path_4k1(&Graph::star(4), &cfg()).unwrap_err();
        assert_eq!(e, Error::PromiseViolation { alpha: 4, k: 4 });
        let e = ham_path_5k1(&Graph::star(5), &cfg()).unwrap_err();
        assert_eq!(e, Error::PromiseViolation { alpha: 5, k: 5 });
    }
}
