//! Witness construction for spanning linkages.

use std::collections::HashMap;

use crate::bits::Bits;
use crate::connectivity::{menger_fan, vertex_connectivity};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{oracle_linkage, Linkage, LinkageInstance};
use crate::scenarios::{enumerate_with_layout, ScenarioCollection};
use crate::solver::{g_threshold, path_cover_shape, LinkageSolver, SolverConfig};

/// Result of [`augment_linkage`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Augmented {
    pub linkage: Linkage,
    /// Number of rewrite rounds, each absorbing at least one vertex.
    pub iterations: usize,
}

/// Which rewrite absorbed the vertex in a round.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rewrite {
    /// The fan reaches every covered vertex: splice into the first edge of path 0.
    Splice,
    /// `x` is adjacent to the successor of a fan end.
    Successor(usize),
    /// Two successors are adjacent.
    Crossing(usize, usize),
}

fn same_ends(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    a.len() == b.len()
        && a.iter()
            .zip(b)
            .all(|(p, q)| p.first() == q.first() && p.last() == q.last())
}

/// Grows a linkage until it spans `g`, keeping every path's ends.
///
/// Needs `alpha(g) < k` and vertex connectivity at least `g_threshold(k, l)`.
/// Each round picks the smallest uncovered `x`, routes a fan of
/// `min(k l, covered)` paths from `x` to covered vertices and rewrites one path.
pub fn augment_linkage(g: &Graph, k: usize, current: &Linkage) -> Result<Augmented> {
    let n = g.n();
    let l = current.paths.len();
    if l == 0 {
        return Err(Error::Precondition(
            "augmentation needs at least one path".into(),
        ));
    }
    let pairs: Vec<(usize, usize)> = current
        .paths
        .iter()
        .map(|p| (p[0], *p.last().expect("non-empty path")))
        .collect();
    let inst = LinkageInstance::new(g.clone(), pairs)?;
    current
        .check(&inst, false)
        .map_err(|e| Error::Precondition(format!("not a linkage: {e}")))?;
    if n <= 30 {
        let alpha = g.independence_number();
        if alpha >= k {
            return Err(Error::PromiseViolation { alpha, k });
        }
    }
    let cv = vertex_connectivity(g).connectivity;
    if cv < g_threshold(k, l) {
        return Err(Error::Precondition(format!(
            "connectivity {cv} is below the threshold {}",
            g_threshold(k, l)
        )));
    }
    let mut paths = current.paths.clone();
    let mut iterations = 0;
    loop {
        let mut covered = vec![false; n];
        for p in &paths {
            for &v in p {
                covered[v] = true;
            }
        }
        let Some(x) = covered.iter().position(|&c| !c) else {
            break;
        };
        iterations += 1;
        let before: usize = paths.iter().map(Vec::len).sum();
        let targets: Vec<usize> = (0..n).filter(|&v| covered[v]).collect();
        let fan = menger_fan(g, x, &targets, k * l)?;
        rewrite(g, k, l, &mut paths, x, &targets, &fan)?;
        let after: usize = paths.iter().map(Vec::len).sum();
        if after <= before || !same_ends(&paths, &current.paths) {
            return Err(Error::InvariantViolation(format!(
                "round {iterations} did not grow the linkage ({before} -> {after})"
            )));
        }
    }
    let linkage = Linkage { paths };
    linkage
        .check(&inst, true)
        .map_err(|e| Error::InvariantViolation(format!("augmented linkage is invalid: {e}")))?;
    Ok(Augmented {
        linkage,
        iterations,
    })
}

fn rewrite(
    g: &Graph,
    k: usize,
    l: usize,
    paths: &mut [Vec<usize>],
    x: usize,
    targets: &[usize],
    fan: &[Vec<usize>],
) -> Result<Rewrite> {
    let end_of: HashMap<usize, &Vec<usize>> = fan.iter().map(|r| (*r.last().unwrap(), r)).collect();
    // R reversed without its last vertex: runs from next to the end back to x
    let back = |r: &Vec<usize>| -> Vec<usize> { r[..r.len() - 1].iter().rev().copied().collect() };
    if k * l >= targets.len() {
        let p = &paths[0];
        let (u, v) = (p[0], p[1]);
        let (ru, rv) = (end_of[&u], end_of[&v]);
        let mut np = vec![u];
        np.extend(back(ru));
        np.extend(&rv[1..rv.len() - 1]);
        np.extend(&p[1..]);
        paths[0] = np;
        return Ok(Rewrite::Splice);
    }
    let mut where_: HashMap<usize, (usize, usize)> = HashMap::new();
    for (i, p) in paths.iter().enumerate() {
        for (pos, &v) in p.iter().enumerate() {
            where_.insert(v, (i, pos));
        }
    }
    let mut per_path: Vec<Vec<usize>> = vec![Vec::new(); paths.len()];
    for r in fan {
        let (i, pos) = where_[r.last().unwrap()];
        per_path[i].push(pos);
    }
    let Some(i) = per_path.iter().position(|ps| ps.len() >= k) else {
        return Err(Error::InvariantViolation(format!(
            "no path collects {k} of the {} fan ends",
            fan.len()
        )));
    };
    let mut pos = per_path[i].clone();
    pos.sort_unstable();
    pos.truncate(k);
    let p = paths[i].clone();
    let ys: Vec<usize> = pos[..k - 1].iter().map(|&q| p[q + 1]).collect();
    let r_at = |q: usize| end_of[&p[q]];
    if let Some(j) = ys.iter().position(|&y| g.has_edge(x, y)) {
        let mut np = p[..=pos[j]].to_vec();
        np.extend(back(r_at(pos[j])));
        np.extend(&p[pos[j] + 1..]);
        paths[i] = np;
        return Ok(Rewrite::Successor(j));
    }
    for a in 0..ys.len() {
        for b in a + 1..ys.len() {
            if !g.has_edge(ys[a], ys[b]) {
                continue;
            }
            let rb = r_at(pos[b]);
            let mut np = p[..=pos[a]].to_vec();
            np.extend(back(r_at(pos[a])));
            np.extend(&rb[1..]);
            np.extend(p[pos[a] + 1..pos[b]].iter().rev());
            np.extend(&p[pos[b] + 1..]);
            paths[i] = np;
            return Ok(Rewrite::Crossing(a, b));
        }
    }
    Err(Error::InvariantViolation(format!(
        "x = {x} and successors {ys:?} form an independent set of size {k}"
    )))
}

/// Expands a collection into full paths, replacing each consecutive
/// same-component pair `(u, v)` with the sub-path in `sub` that starts at `u`.
pub fn stitch(c: &ScenarioCollection, sub: &[Vec<usize>]) -> Result<Linkage> {
    let by_start: HashMap<usize, &Vec<usize>> = sub.iter().map(|p| (p[0], p)).collect();
    let layout = &c.layout;
    let mut paths = Vec::with_capacity(c.scenarios.len());
    for sc in &c.scenarios {
        let seq = &sc.sequence;
        let mut path = Vec::new();
        let mut i = 0;
        while i < seq.len() {
            let v = seq[i];
            let joined = i + 1 < seq.len()
                && layout.component_of(v).is_some()
                && layout.component_of(v) == layout.component_of(seq[i + 1]);
            if joined {
                let p = by_start.get(&v).ok_or_else(|| {
                    Error::InvariantViolation(format!("no sub-path starts at {v}"))
                })?;
                if p.last() != Some(&seq[i + 1]) {
                    return Err(Error::InvariantViolation(format!(
                        "sub-path from {v} does not end at {}",
                        seq[i + 1]
                    )));
                }
                path.extend(p.iter().copied());
                i += 2;
            } else {
                path.push(v);
                i += 1;
            }
        }
        paths.push(path);
    }
    Ok(Linkage { paths })
}

struct Builder<'s, 'g> {
    solver: &'s LinkageSolver<'g>,
    cfg: &'s SolverConfig,
}

impl Builder<'_, '_> {
    fn build(
        &self,
        mask: &Bits,
        pairs: &[(usize, usize)],
        k: usize,
    ) -> Result<Option<Vec<Vec<usize>>>> {
        let s = self.solver.session();
        if pairs.is_empty() {
            return Ok(mask.is_empty().then(Vec::new));
        }
        if !s.decide(mask, pairs, k, 0)? {
            return Ok(None);
        }
        let piece = s.piece(mask);
        if !piece.connected {
            let parts = s
                .split(&piece, pairs)
                .expect("decided instances do not span components");
            let mut by_start: HashMap<usize, Vec<usize>> = HashMap::new();
            for (m, p) in &parts {
                let got = self.build(m, p, k)?.ok_or_else(|| disagree("component"))?;
                for path in got {
                    by_start.insert(path[0], path);
                }
            }
            return Ok(Some(
                pairs
                    .iter()
                    .map(|(a, _)| by_start.remove(a).unwrap())
                    .collect(),
            ));
        }
        if piece.local.is_complete() {
            let mut rest: Vec<usize> = mask.iter().collect();
            rest.retain(|v| !pairs.iter().any(|&(a, b)| a == *v || b == *v));
            let mut out: Vec<Vec<usize>> = pairs.iter().map(|&(a, b)| vec![a, b]).collect();
            out[0].splice(1..1, rest);
            return Ok(Some(out));
        }
        let local_pairs = s.local_pairs(&piece, pairs);
        if piece.cut.connectivity >= g_threshold(k, pairs.len()) {
            let initial = initial_linkage(&piece.local, &local_pairs, self.cfg.max_oracle_n)?;
            let aug = augment_linkage(&piece.local, k, &initial)?;
            return Ok(Some(
                aug.linkage
                    .paths
                    .into_iter()
                    .map(|p| p.into_iter().map(|v| piece.map[v]).collect())
                    .collect(),
            ));
        }
        for c in enumerate_with_layout(&piece.local, piece.layout.clone(), &local_pairs, false) {
            let mut subs = Vec::new();
            let mut ok = true;
            for j in 0..piece.layout.components.len() {
                let (m, p) = s.reduced(&piece, j, &c);
                if !s.decide(&m, &p, k - 1, 1)? {
                    ok = false;
                    break;
                }
                subs.push((m, p));
            }
            if !ok {
                continue;
            }
            let mut local_sub = Vec::new();
            for (m, p) in &subs {
                let got = self
                    .build(m, p, k - 1)?
                    .ok_or_else(|| disagree("reduced component"))?;
                local_sub.extend(got.into_iter().map(|path| {
                    path.into_iter()
                        .map(|v| piece.to_local(v))
                        .collect::<Vec<_>>()
                }));
            }
            let linkage = stitch(&c, &local_sub)?;
            return Ok(Some(
                linkage
                    .paths
                    .into_iter()
                    .map(|p| p.into_iter().map(|v| piece.map[v]).collect())
                    .collect(),
            ));
        }
        Err(disagree("collection search"))
    }
}

fn disagree(at: &str) -> Error {
    Error::InvariantViolation(format!("construction disagrees with the decision at {at}"))
}

/// Some linkage of `g` for `pairs`, not necessarily spanning.
///
/// Tries shortest paths one pair at a time, then falls back to exhaustive search.
fn initial_linkage(g: &Graph, pairs: &[(usize, usize)], max_oracle_n: usize) -> Result<Linkage> {
    let n = g.n();
    let mut blocked = vec![false; n];
    for &(a, b) in pairs {
        blocked[a] = true;
        blocked[b] = true;
    }
    let mut paths = Vec::new();
    for &(s, t) in pairs {
        match shortest_path(g, s, t, &blocked) {
            Some(p) => {
                for &v in &p {
                    blocked[v] = true;
                }
                paths.push(p);
            }
            None => break,
        }
    }
    if paths.len() == pairs.len() {
        return Ok(Linkage { paths });
    }
    let inst = LinkageInstance::new(g.clone(), pairs.to_vec())?;
    oracle_linkage(&inst, false, max_oracle_n)?
        .ok_or_else(|| Error::InvariantViolation("highly connected graph without a linkage".into()))
}

fn shortest_path(g: &Graph, s: usize, t: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    prev[s] = s;
    let mut q = std::collections::VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        for &w in g.neighbors(v) {
            if prev[w] != usize::MAX || (blocked[w] && w != t) {
                continue;
            }
            prev[w] = v;
            if w == t {
                let mut p = vec![t];
                let mut c = t;
                while c != s {
                    c = prev[c];
                    p.push(c);
                }
                p.reverse();
                return Some(p);
            }
            q.push_back(w);
        }
    }
    None
}

/// A spanning linkage for `inst`, following the decision procedure; `None`
/// exactly when [`crate::solver::ham_linkage`] answers false.
pub fn construct_ham_linkage(
    inst: &LinkageInstance,
    cfg: &SolverConfig,
) -> Result<Option<Linkage>> {
    let solver = LinkageSolver::new(&inst.graph, cfg)?;
    construct_with(&solver, &[], &inst.pairs, cfg)
}

pub(crate) fn construct_with(
    solver: &LinkageSolver<'_>,
    singles: &[usize],
    pairs: &[(usize, usize)],
    cfg: &SolverConfig,
) -> Result<Option<Linkage>> {
    let s = solver.session();
    let mut mask = s.full_mask();
    for &v in singles {
        mask.remove(v);
    }
    let b = Builder { solver, cfg };
    let got = b.build(&mask, pairs, s.k)?;
    Ok(got.map(|paths| Linkage { paths }))
}

/// A cover of `g` by exactly `l` paths (single vertices allowed), if one exists.
pub fn path_cover_witness(
    g: &Graph,
    l: usize,
    cfg: &SolverConfig,
) -> Result<Option<Vec<Vec<usize>>>> {
    let Some(shape) = path_cover_shape(g, l, cfg)? else {
        return Ok(None);
    };
    let solver = LinkageSolver::new(g, cfg)?;
    let linkage = construct_with(&solver, &shape.singles, &shape.pairs, cfg)?
        .ok_or_else(|| disagree("path cover"))?;
    let mut out: Vec<Vec<usize>> = shape.singles.iter().map(|&v| vec![v]).collect();
    out.extend(linkage.paths);
    Ok(Some(out))
}

/// A minimum path cover of `g`, component by component.
pub fn min_path_cover(g: &Graph, cfg: &SolverConfig) -> Result<Vec<Vec<usize>>> {
    let k = crate::solver::resolve_k(g, cfg)?;
    let inner = SolverConfig {
        k: Some(k),
        verify_promise: false,
        ..cfg.clone()
    };
    let mut out = Vec::new();
    for comp in g.connected_components() {
        let (h, map) = g.induced_subgraph(comp.as_slice());
        let mut l = 1;
        let cover = loop {
            if let Some(c) = path_cover_witness(&h, l, &inner)? {
                break c;
            }
            l += 1;
        };
        out.extend(
            cover
                .into_iter()
                .map(|p| p.into_iter().map(|v| map[v]).collect::<Vec<_>>()),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenarios::{CutLayout, Scenario};
    use crate::VertexSet;
    use std::sync::Arc;

    #[test]
    fn augments_an_edge_in_a_large_clique() {
        let g = Graph::complete(12);
        let start = Linkage {
            paths: vec![vec![0, 1]],
        };
        let out = augment_linkage(&g, 2, &start).unwrap();
        assert_eq!(out.linkage.covered(), 12);
        assert_eq!(out.iterations, 10);
        let inst = LinkageInstance::new(g, vec![(0, 1)]).unwrap();
        out.linkage.check(&inst, true).unwrap();
    }

    #[test]
    fn refuses_low_connectivity() {
        let e = augment_linkage(
            &Graph::cycle(5),
            3,
            &Linkage {
                paths: vec![vec![0, 1]],
            },
        )
        .unwrap_err();
        assert!(matches!(e, Error::Precondition(_)));
    }

    #[test]
    fn stitches_the_worked_example() {
        let mut edges: Vec<_> = (0..15).map(|i| (i, i + 1)).collect();
        edges.extend([(3, 11), (11, 13)]);
        let g = Graph::from_edges(16, &edges).unwrap();
        let cut: VertexSet = [4, 5, 6, 10, 12].into_iter().collect();
        let c = ScenarioCollection {
            scenarios: vec![Scenario {
                pair: (0, 15),
                sequence: vec![0, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 15],
            }],
            layout: Arc::new(CutLayout::new(&g, &cut)),
        };
        let sub = vec![vec![0, 1, 2, 3], vec![13, 14, 15], vec![7, 8, 9]];
        let l = stitch(&c, &sub).unwrap();
        assert_eq!(l.paths, vec![(0..16).collect::<Vec<_>>()]);
        let inst = LinkageInstance::new(g.clone(), vec![(0, 15)]).unwrap();
        let built = construct_ham_linkage(&inst, &SolverConfig::default())
            .unwrap()
            .unwrap();
        built.check(&inst, true).unwrap();
    }

    #[test]
    fn construction_matches_decision_on_small_graphs() {
        let g = Graph::cycle(6).with_edge(0, 3);
        for pairs in crate::oracle::terminal_selections(6, 2) {
            let inst = LinkageInstance::new(g.clone(), pairs).unwrap();
            let cfg = SolverConfig::default();
            let decided = crate::solver::ham_linkage(&inst, &cfg).unwrap();
            let built = construct_ham_linkage(&inst, &cfg).unwrap();
            assert_eq!(decided, built.is_some());
            if let Some(l) = built {
                l.check(&inst, true).unwrap();
            }
        }
    }

    #[test]
    fn star_cover() {
        let cover = path_cover_witness(&Graph::star(3), 2, &SolverConfig::default())
            .unwrap()
            .unwrap();
        assert_eq!(cover.len(), 2);
        assert_eq!(cover.iter().map(Vec::len).sum::<usize>(), 4);
    }
}
