use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hamlink::oracle::{oracle_linkage, LinkageInstance};
use hamlink::scenarios::{
    check_plausible, enumerate_with_layout, reduce_component, CutLayout, Scenario,
    ScenarioCollection,
};
use hamlink::{Graph, VertexSet};

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// All simple sequences from `s` to `t`.
fn sequences(n: usize, s: usize, t: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let mut done = cur.clone();
        done.push(t);
        out.push(done);
        for v in 0..n {
            if v != t && !cur.contains(&v) {
                cur.push(v);
                rec(n, t, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, t, &mut vec![s], &mut out);
    out
}

type Key = Vec<Vec<usize>>;

fn naive(
    g: &Graph,
    layout: &Arc<CutLayout>,
    pairs: &[(usize, usize)],
    relaxed: bool,
) -> BTreeSet<Key> {
    let single = |pair: (usize, usize), seq: &Vec<usize>| {
        let c = ScenarioCollection {
            scenarios: vec![Scenario {
                pair,
                sequence: seq.clone(),
            }],
            layout: layout.clone(),
        };
        check_plausible(&c, g, true)
    };
    let candidates: Vec<Vec<Vec<usize>>> = pairs
        .iter()
        .map(|&(s, t)| {
            sequences(g.n(), s, t)
                .into_iter()
                .filter(|q| single((s, t), q))
                .collect()
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut pick = vec![0usize; pairs.len()];
    if candidates.iter().any(Vec::is_empty) {
        return out;
    }
    loop {
        let c = ScenarioCollection {
            scenarios: pairs
                .iter()
                .zip(&pick)
                .zip(&candidates)
                .map(|((&pair, &i), cands)| Scenario {
                    pair,
                    sequence: cands[i].clone(),
                })
                .collect(),
            layout: layout.clone(),
        };
        if check_plausible(&c, g, relaxed) {
            out.insert(c.scenarios.iter().map(|s| s.sequence.clone()).collect());
        }
        let mut i = 0;
        loop {
            if i == pick.len() {
                return out;
            }
            pick[i] += 1;
            if pick[i] < candidates[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn enumerator_matches_generate_and_filter() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut nonempty = 0;
    for round in 0..400 {
        let n = rng.gen_range(3..=7);
        let arg = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, arg);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let l = rng.gen_range(1..=2.min(n / 2));
        let pairs: Vec<(usize, usize)> = (0..l).map(|i| (order[2 * i], order[2 * i + 1])).collect();
        let cut_size = rng.gen_range(0..=2);
        let cut: VertexSet = order.choose_multiple(&mut rng, cut_size).copied().collect();
        let layout = Arc::new(CutLayout::new(&g, &cut));
        for relaxed in [false, true] {
            let fast: Vec<Key> = enumerate_with_layout(&g, layout.clone(), &pairs, relaxed)
                .map(|c| {
                    assert!(
                        check_plausible(&c, &g, relaxed),
                        "round {round}: implausible {c:?}"
                    );
                    c.scenarios.iter().map(|s| s.sequence.clone()).collect()
                })
                .collect();
            let set: BTreeSet<Key> = fast.iter().cloned().collect();
            assert_eq!(set.len(), fast.len(), "round {round}: duplicates");
            assert_eq!(
                set,
                naive(&g, &layout, &pairs, relaxed),
                "round {round}: {g:?} cut {cut:?} pairs {pairs:?}"
            );
            nonempty += usize::from(!set.is_empty());
        }
    }
    assert!(nonempty > 100);
}

/// Compressed trace of a path: ends, cut vertices and their path neighbours.
fn trace(path: &[usize], layout: &CutLayout) -> Vec<usize> {
    let in_cut = |v: usize| layout.component_of(v).is_none();
    let last = path.len() - 1;
    (0..=last)
        .filter(|&i| {
            i == 0 || i == last || in_cut(path[i]) || in_cut(path[i - 1]) || in_cut(path[i + 1])
        })
        .map(|i| path[i])
        .collect()
}

#[test]
fn traces_of_hamiltonian_linkages_reduce_to_solvable_pieces() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 150 {
        let n = rng.gen_range(4..=9);
        let arg = rng.gen_range(0.3..0.7);
        let g = random_graph(&mut rng, n, arg);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let l = rng.gen_range(1..=2.min(n / 2));
        let pairs: Vec<(usize, usize)> = (0..l).map(|i| (order[2 * i], order[2 * i + 1])).collect();
        let inst = LinkageInstance::new(g.clone(), pairs.clone()).unwrap();
        let Some(linkage) = oracle_linkage(&inst, true, 14).unwrap() else {
            continue;
        };
        let cut: VertexSet = {
            let m = rng.gen_range(1..=2);
            order[2 * l..].choose_multiple(&mut rng, m)
        }
        .copied()
        .collect();
        let layout = Arc::new(CutLayout::new(&g, &cut));
        let c = ScenarioCollection {
            scenarios: linkage
                .paths
                .iter()
                .zip(&pairs)
                .map(|(p, &pair)| Scenario {
                    pair,
                    sequence: trace(p, &layout),
                })
                .collect(),
            layout: layout.clone(),
        };
        assert!(check_plausible(&c, &g, false), "{g:?} {c:?}");
        for q in 0..layout.components.len() {
            let red = reduce_component(q, &c);
            let comp: BTreeSet<usize> = layout.components[q].iter().collect();
            let ends: BTreeSet<usize> = red.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
            let deleted: BTreeSet<usize> = red.deleted.iter().copied().collect();
            assert!(ends.is_disjoint(&deleted));
            assert_eq!(deleted.len(), red.deleted.len());
            assert!(ends.iter().chain(&deleted).all(|v| comp.contains(v)));
            let kept: BTreeSet<usize> = red.vertices.iter().collect();
            assert_eq!(kept, comp.difference(&deleted).copied().collect());
            // vertices with a same-component neighbour in their trace are exactly the pair ends
            let mut with_neighbour = BTreeSet::new();
            for s in &c.scenarios {
                for w in s.sequence.windows(2) {
                    if layout.component_of(w[0]) == Some(q) && layout.component_of(w[1]) == Some(q)
                    {
                        with_neighbour.insert(w[0]);
                        with_neighbour.insert(w[1]);
                    }
                }
            }
            assert_eq!(with_neighbour, ends);
            let verts = red.vertices.as_slice();
            if verts.is_empty() {
                assert!(red.pairs.is_empty());
                continue;
            }
            let (sub, map) = g.induced_subgraph(verts);
            let local = |v: usize| map.iter().position(|&x| x == v).unwrap();
            let sub_pairs = red
                .pairs
                .iter()
                .map(|&(a, b)| (local(a), local(b)))
                .collect();
            let sub_inst = LinkageInstance::new(sub, sub_pairs).unwrap();
            assert!(
                oracle_linkage(&sub_inst, true, 14).unwrap().is_some(),
                "{g:?} {c:?} component {q}"
            );
        }
        checked += 1;
    }
}
