use proptest::prelude::*;

use hamlink::census::connected_graphs_up_to;
use hamlink::connectivity::{menger_fan, vertex_connectivity};
use hamlink::{parse_graph, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn component_count(g: &Graph, removed: &[usize]) -> usize {
    let mut blocked = vec![false; g.n()];
    for &v in removed {
        blocked[v] = true;
    }
    g.components_avoiding(&blocked).len()
}

/// Largest clique by plain subset enumeration.
fn max_clique(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|u| {
                mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || g.has_edge(u, v))
            })
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest separating set by subset enumeration; `n - 1` for complete graphs.
fn connectivity_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    let mut best = n;
    for mask in 0u32..1 << n {
        let removed: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if removed.len() < best && removed.len() + 2 <= n && component_count(g, &removed) > 1 {
            best = removed.len();
        }
    }
    best
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn induced_subgraph_keeps_inner_edges(g in graph(12), pick in any::<u16>()) {
        let keep: Vec<usize> = (0..g.n()).filter(|&v| pick >> v & 1 == 1).collect();
        let (h, map) = g.induced_subgraph(&keep);
        let inner = g.edges().filter(|&(u, v)| keep.contains(&u) && keep.contains(&v)).count();
        prop_assert_eq!(h.m(), inner);
        for (a, b) in h.edges() {
            prop_assert!(g.has_edge(map[a], map[b]));
        }
    }

    #[test]
    fn independence_number_is_clique_number_of_complement(g in graph(12)) {
        prop_assert_eq!(g.independence_number(), max_clique(&g.complement()));
        let set = g.maximum_independent_set();
        prop_assert_eq!(set.len(), g.independence_number());
        for u in set.iter() {
            for v in set.iter() {
                prop_assert!(!g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn articulation_points_by_removal(g in graph(9)) {
        let base = g.connected_components().len();
        let naive: Vec<usize> = (0..g.n()).filter(|&v| component_count(&g, &[v]) > base).collect();
        prop_assert_eq!(g.articulation_points().into_vec(), naive);
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        let text = g.to_edge_list(&["round trip".to_string()]);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn adding_an_edge_never_lowers_connectivity(g in graph(10), u in 0usize..10, v in 0usize..10) {
        let (u, v) = (u % g.n(), v % g.n());
        prop_assume!(u != v);
        let before = vertex_connectivity(&g).connectivity;
        prop_assert!(vertex_connectivity(&g.with_edge(u, v)).connectivity >= before);
    }

    #[test]
    fn fans_are_internally_disjoint(g in graph(10), x in 0usize..10, pick in any::<u16>(), s in 1usize..5) {
        let x = x % g.n();
        let targets: Vec<usize> = (0..g.n()).filter(|&v| v != x && pick >> v & 1 == 1).collect();
        prop_assume!(!targets.is_empty());
        if let Ok(paths) = menger_fan(&g, x, &targets, s) {
            prop_assert_eq!(paths.len(), s.min(targets.len()));
            let mut seen = std::collections::HashSet::new();
            for p in &paths {
                prop_assert_eq!(p[0], x);
                for w in p.windows(2) {
                    prop_assert!(g.has_edge(w[0], w[1]));
                }
                let (last, inner) = p[1..].split_last().unwrap();
                prop_assert!(targets.contains(last));
                for &v in inner {
                    prop_assert!(!targets.contains(&v));
                }
                for &v in &p[1..] {
                    prop_assert!(seen.insert(v), "vertex {} shared", v);
                }
            }
        }
    }
}

#[test]
fn articulation_points_on_connected_graphs_up_to_eight() {
    for g in connected_graphs_up_to(8, None, false).into_iter().flatten() {
        let naive: Vec<usize> = (0..g.n())
            .filter(|&v| component_count(&g, &[v]) > 1)
            .collect();
        assert_eq!(g.articulation_points().into_vec(), naive, "{g:?}");
    }
}

#[test]
fn connectivity_matches_subset_enumeration() {
    for g in connected_graphs_up_to(7, None, false).into_iter().flatten() {
        let r = vertex_connectivity(&g);
        assert_eq!(r.connectivity, connectivity_by_subsets(&g), "{g:?}");
        if !g.is_complete() {
            assert_eq!(r.cut.len(), r.connectivity);
            assert!(component_count(&g, r.cut.as_slice()) > 1);
        }
    }
}
