//! Hardness gadgets from Hamiltonian path / path cover, and random graphs
//! with bounded independence number.
//!
//! New gadget vertices get ids `n, n + 1, ...` in construction order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::LinkageInstance;

/// A transformed graph together with the ids of the vertices that were added.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub graph: Graph,
    pub added: Vec<usize>,
}

fn check_input(g: &Graph, l: usize) -> Result<()> {
    if l == 0 {
        return Err(Error::Precondition(
            "the number of paths must be positive".into(),
        ));
    }
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Terminals `s_1..s_l` then `t_1..t_l`. `s_1` and `t_1` see all of `g`; for
/// `i >= 2` the edges `s_1 s_i`, `s_i t_i`, `t_i t_1` are added. The instance has
/// a Hamiltonian linkage exactly when `g` has a Hamiltonian path.
pub fn gadget_linkage(g: &Graph, l: usize) -> Result<LinkageInstance> {
    check_input(g, l)?;
    let n = g.n();
    let s = |i: usize| n + i;
    let t = |i: usize| n + l + i;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for v in 0..n {
        edges.push((s(0), v));
        edges.push((t(0), v));
    }
    for i in 1..l {
        edges.push((s(0), s(i)));
        edges.push((s(i), t(i)));
        edges.push((t(i), t(0)));
    }
    let graph = Graph::from_edges(n + 2 * l, &edges)?;
    LinkageInstance::new(graph, (0..l).map(|i| (s(i), t(i))).collect())
}

/// Adds `a` adjacent to all of `g`, then `b`, `c` on a pendant path and `l`
/// leaves `d_i` on `c`. The result has path cover number at most `l` exactly
/// when `g` has a Hamiltonian path, and then it is exactly `l`.
pub fn gadget_path_cover(g: &Graph, l: usize) -> Result<Gadget> {
    check_input(g, l)?;
    let n = g.n();
    let (a, b, c) = (n, n + 1, n + 2);
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend((0..n).map(|u| (a, u)));
    edges.push((a, b));
    edges.push((b, c));
    edges.extend((0..l).map(|i| (c, n + 3 + i)));
    Ok(Gadget {
        graph: Graph::from_edges(n + 3 + l, &edges)?,
        added: (n..n + 3 + l).collect(),
    })
}

/// Adds `2l` vertices adjacent to all of `g` (and not to each other). The
/// result is Hamiltonian-`l`-linked exactly when `l` paths cover `g`.
pub fn gadget_linkedness(g: &Graph, l: usize) -> Result<Gadget> {
    check_input(g, l)?;
    let n = g.n();
    if n <= 3 * l {
        return Err(Error::Precondition(format!(
            "need more than {} vertices for {l} paths, got {n}",
            3 * l
        )));
    }
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for x in n..n + 2 * l {
        edges.extend((0..n).map(|v| (x, v)));
    }
    Ok(Gadget {
        graph: Graph::from_edges(n + 2 * l, &edges)?,
        added: (n..n + 2 * l).collect(),
    })
}

/// `k - 1` balanced cliques on contiguous ids plus random edges between
/// cliques, each present with probability `extra_edge_prob`. The independence
/// number is below `k`.
pub fn random_kk1_free(k: usize, n: usize, extra_edge_prob: f64, seed: u64) -> Result<Graph> {
    random_kk1_free_stream(k, n, extra_edge_prob, seed, 0)
}

/// As [`random_kk1_free`], drawing from an independent stream of the same seed.
pub fn random_kk1_free_stream(
    k: usize,
    n: usize,
    extra_edge_prob: f64,
    seed: u64,
    stream: u64,
) -> Result<Graph> {
    if k < 2 || n == 0 {
        return Err(Error::Precondition(
            "need k >= 2 and at least one vertex".into(),
        ));
    }
    if !(0.0..=1.0).contains(&extra_edge_prob) {
        return Err(Error::Precondition(format!(
            "probability {extra_edge_prob} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let parts = k - 1;
    let clique_of: Vec<usize> = (0..n).map(|v| v * parts / n).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if clique_of[u] == clique_of[v] || rng.gen_bool(extra_edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_is_ham_linked, oracle_linkage, oracle_path_cover_number};

    #[test]
    fn linkage_gadget_examples() {
        let yes = gadget_linkage(&Graph::path(3), 2).unwrap();
        assert_eq!(yes.graph.n(), 7);
        assert_eq!(yes.pairs, vec![(3, 5), (4, 6)]);
        assert!(oracle_linkage(&yes, true, 14).unwrap().is_some());
        let no = gadget_linkage(&Graph::star(3), 2).unwrap();
        assert!(oracle_linkage(&no, true, 14).unwrap().is_none());
        let single = gadget_linkage(&Graph::empty(1), 1).unwrap();
        assert!(oracle_linkage(&single, true, 14).unwrap().is_some());
    }

    #[test]
    fn path_cover_gadget_examples() {
        let pc = |g: &Graph, l| {
            oracle_path_cover_number(&gadget_path_cover(g, l).unwrap().graph, 14).unwrap()
        };
        assert_eq!(pc(&Graph::path(2), 2), 2);
        assert!(pc(&Graph::star(3), 1) > 1);
        assert_eq!(pc(&Graph::complete(3), 3), 3);
    }

    #[test]
    fn linkedness_gadget_examples() {
        let g = gadget_linkedness(&Graph::path(4), 1).unwrap().graph;
        assert!(oracle_is_ham_linked(&g, 1, 14).unwrap());
        let g = gadget_linkedness(&Graph::star(3), 1).unwrap().graph;
        assert!(!oracle_is_ham_linked(&g, 1, 14).unwrap());
        assert!(matches!(
            gadget_linkedness(&Graph::path(3), 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn generator_examples() {
        assert_eq!(random_kk1_free(2, 5, 0.3, 1).unwrap(), Graph::complete(5));
        let two = random_kk1_free(3, 6, 0.0, 9).unwrap();
        assert_eq!(two, Graph::complete(3).disjoint_union(&Graph::complete(3)));
        let g = random_kk1_free(4, 9, 0.5, 42).unwrap();
        assert!(g.independence_number() <= 3);
        assert_eq!(g, random_kk1_free(4, 9, 0.5, 42).unwrap());
    }
}
