use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hamlink::census::connected_graphs_up_to;
use hamlink::constructor::{construct_ham_linkage, min_path_cover, path_cover_witness};
use hamlink::labelling::{lambda_prime_via_pc, verify_labelling};
use hamlink::oracle::{
    oracle_is_ham_linked, oracle_linkage, oracle_min_defect, oracle_path_cover_number,
    terminal_selections, Defect, LinkageInstance,
};
use hamlink::reductions::{gadget_linkedness, random_kk1_free, random_kk1_free_stream};
use hamlink::solver::{
    f_bound, g_threshold, ham_linkedness, path_cover_number, LinkageSolver, SolverConfig, Stats,
};
use hamlink::Graph;

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

fn random_pairs(rng: &mut ChaCha8Rng, n: usize, l: usize) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    (0..l).map(|i| (order[2 * i], order[2 * i + 1])).collect()
}

#[test]
fn path_cover_number_is_at_most_alpha() {
    let cfg = SolverConfig::default().sequential();
    for g in connected_graphs_up_to(8, None, false).into_iter().flatten() {
        let pc = oracle_path_cover_number(&g, 14).unwrap();
        assert!(pc <= g.independence_number(), "{g:?}");
        assert_eq!(path_cover_number(&g, &cfg).unwrap(), pc, "{g:?}");
    }
}

#[test]
fn oracle_witnesses_are_valid_and_defect_zero_means_spanning() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rng.gen_range(2..=9);
        let arg = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, arg);
        let l = rng.gen_range(1..=(n / 2).min(3));
        let inst = LinkageInstance::new(g, random_pairs(&mut rng, n, l)).unwrap();
        let spanning = oracle_linkage(&inst, true, 14).unwrap();
        if let Some(lk) = &spanning {
            assert_eq!(lk.check(&inst, true), Ok(()));
        }
        if let Some(lk) = oracle_linkage(&inst, false, 14).unwrap() {
            assert_eq!(lk.check(&inst, false), Ok(()));
        }
        let defect = oracle_min_defect(&inst, 14).unwrap();
        assert_eq!(defect == Defect::Finite(0), spanning.is_some());
    }
}

#[test]
fn spanning_linkages_survive_edge_addition() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..300 {
        let n = rng.gen_range(3..=8);
        let arg = rng.gen_range(0.3..0.8);
        let g = random_graph(&mut rng, n, arg);
        let arg = rng.gen_range(1..=n / 2);
        let pairs = random_pairs(&mut rng, n, arg);
        let inst = LinkageInstance::new(g.clone(), pairs.clone()).unwrap();
        if oracle_linkage(&inst, true, 14).unwrap().is_none() {
            continue;
        }
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v {
            continue;
        }
        let more = LinkageInstance::new(g.with_edge(u, v), pairs).unwrap();
        assert!(oracle_linkage(&more, true, 14).unwrap().is_some());
    }
}

#[test]
fn linkedness_matches_the_oracle() {
    let cfg = SolverConfig::default().sequential();
    for g in connected_graphs_up_to(7, None, false).into_iter().flatten() {
        for l in 1..=2 {
            if 2 * l > g.n() {
                continue;
            }
            let v = ham_linkedness(&g, l, &cfg).unwrap();
            assert_eq!(
                v.answer,
                oracle_is_ham_linked(&g, l, 14).unwrap(),
                "{g:?} l={l}"
            );
            assert_eq!(v.diagnostic.is_none(), v.answer);
        }
    }
}

#[test]
fn bound_recursion_and_depth() {
    for k in 3..=8 {
        for l in 1..=8 {
            assert_eq!(
                f_bound(k, l),
                2 * g_threshold(k, l) + f_bound(k - 1, g_threshold(k, l) + l)
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let n = rng.gen_range(4..=10);
        let arg = rng.gen_range(0.3..0.8);
        let g = random_graph(&mut rng, n, arg);
        let stats = std::sync::Arc::new(Stats::default());
        let cfg = SolverConfig {
            stats: stats.clone(),
            ..SolverConfig::default().sequential()
        };
        let solver = LinkageSolver::new(&g, &cfg).unwrap();
        let k = solver.k();
        for pairs in terminal_selections(n, 1).into_iter().take(10) {
            solver.decide(&pairs).unwrap();
        }
        assert!(
            stats.snapshot().max_depth + 2 <= k.max(2),
            "depth {:?} with k = {k}",
            stats.snapshot()
        );
    }
}

#[test]
fn construction_agrees_with_decision() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let cfg = SolverConfig::default().sequential();
    let mut built = 0;
    for _ in 0..300 {
        let n = rng.gen_range(2..=10);
        let arg = rng.gen_range(0.3..0.9);
        let g = random_graph(&mut rng, n, arg);
        let l = rng.gen_range(1..=(n / 2).min(2));
        let inst = LinkageInstance::new(g.clone(), random_pairs(&mut rng, n, l)).unwrap();
        let decided = LinkageSolver::new(&g, &cfg)
            .unwrap()
            .decide(&inst.pairs)
            .unwrap();
        let witness = construct_ham_linkage(&inst, &cfg).unwrap();
        assert_eq!(witness.is_some(), decided, "{g:?} {:?}", inst.pairs);
        if let Some(w) = witness {
            assert_eq!(w.check(&inst, true), Ok(()));
            built += 1;
        }
        let cover = min_path_cover(&g, &cfg).unwrap();
        assert_eq!(cover.len(), oracle_path_cover_number(&g, 14).unwrap());
        let mut seen: Vec<usize> = cover.iter().flatten().copied().collect();
        seen.sort_unstable();
        assert_eq!(seen, (0..n).collect::<Vec<_>>());
        for p in &cover {
            assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
        let exact = path_cover_witness(&g, cover.len(), &cfg)
            .unwrap()
            .expect("minimum cover exists");
        assert_eq!(exact.len(), cover.len());
    }
    assert!(built > 50);
}

#[test]
fn generators_bound_alpha_and_reproduce() {
    for seed in 0..40 {
        let k = 2 + (seed as usize % 4);
        let n = 1 + (seed as usize * 7) % 25;
        let g = random_kk1_free(k, n, 0.3, seed).unwrap();
        assert!(g.independence_number() < k);
        assert_eq!(g, random_kk1_free(k, n, 0.3, seed).unwrap());
        assert_ne!(
            random_kk1_free_stream(4, 20, 0.5, seed, 1).unwrap(),
            random_kk1_free_stream(4, 20, 0.5, seed, 2).unwrap()
        );
    }
}

#[test]
fn seven_cycle_gadget_is_two_linked() {
    let g = gadget_linkedness(&Graph::cycle(7), 2).unwrap().graph;
    assert_eq!(g.n(), 11);
    assert!(oracle_is_ham_linked(&g, 2, 14).unwrap());
}

#[test]
fn labelling_witnesses_and_three_k1_free_covers() {
    let cfg = SolverConfig::default().sequential();
    for g in connected_graphs_up_to(8, Some(2), false)
        .into_iter()
        .flatten()
    {
        assert_eq!(path_cover_number(&g, &cfg).unwrap(), 1, "{g:?}");
    }
    for g in connected_graphs_up_to(7, None, false).into_iter().flatten() {
        let r = lambda_prime_via_pc(&g, &cfg).unwrap();
        assert!(verify_labelling(&g, &r.witness, true));
    }
}
