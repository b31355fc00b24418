use hamlink::oracle::{
    oracle_linkage, oracle_min_defect, terminal_selections, Defect, LinkageInstance,
};
use hamlink::solver::{LinkageSolver, SolverConfig};
use hamlink::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

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

#[test]
fn random_graphs_match_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..300 {
        let n = rng.gen_range(2..=7);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        let cfg = SolverConfig::default().sequential();
        let solver = LinkageSolver::new(&g, &cfg).unwrap();
        for l in 1..=2 {
            for pairs in terminal_selections(n, l) {
                let inst = LinkageInstance::new(g.clone(), pairs.clone()).unwrap();
                let want = oracle_linkage(&inst, true, 14).unwrap().is_some();
                let got = solver.decide(&pairs).unwrap();
                assert_eq!(got, want, "round {round} {g:?} {pairs:?}");
                let d = solver.min_defect(&pairs).unwrap();
                let dw = oracle_min_defect(&inst, 14).unwrap();
                assert_eq!(d, dw, "defect round {round} {g:?} {pairs:?}");
                assert_eq!(d == Defect::Finite(0), got);
            }
        }
    }
}
