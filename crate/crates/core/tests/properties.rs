use aalpha::graph::{joined_union, JoinedUnionSpec};
use aalpha::matrix::Matrix;
use aalpha::partitions::BlockSymmetricSpec;
use aalpha::spectra::{a_alpha_matrix, eig_symmetric, signless_laplacian_matrix, spectra_match, Alpha};
use aalpha::verify::{part_pool, random_joined_union, verify_prediction};
use aalpha::Graph;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn alpha(a: f64) -> Alpha<f64> {
    Alpha::new(a).unwrap()
}

fn symmetric(dim: usize, entries: &[f64]) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; dim]; dim];
    let mut k = 0;
    for i in 0..dim {
        for j in i..dim {
            m[i][j] = entries[k];
            m[j][i] = entries[k];
            k += 1;
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn trace_and_frobenius(g in graph_strategy(12), a in 0.0..=1.0f64) {
        let m = a_alpha_matrix(&g, &alpha(a));
        let s = eig_symmetric(&m).unwrap();
        let deg_sum: usize = g.degrees().iter().sum();
        prop_assert!((s.sum() - a * deg_sum as f64).abs() < 1e-9);
        let fro = m.frobenius_norm();
        prop_assert!((s.sum_of_squares() - fro * fro).abs() < 1e-8);
    }

    #[test]
    fn radius_between_average_and_max_degree(g in graph_strategy(12), a in 0.0..=1.0f64) {
        let s = eig_symmetric(&a_alpha_matrix(&g, &alpha(a))).unwrap();
        let degrees = g.degrees();
        let avg = degrees.iter().sum::<usize>() as f64 / g.order() as f64;
        let max = *degrees.iter().max().unwrap() as f64;
        let top = s.largest().unwrap();
        prop_assert!(top >= avg - 1e-9 && top <= max + 1e-9, "{top} vs [{avg}, {max}]");
    }

    #[test]
    fn perron_root_is_simple(g in graph_strategy(10), a in 0.0..0.95f64) {
        prop_assume!(g.order() >= 2 && g.is_connected());
        let s = eig_symmetric(&a_alpha_matrix(&g, &alpha(a))).unwrap();
        prop_assert!(s.top_gap().unwrap() > 1e-9);
    }

    #[test]
    fn half_is_half_signless_laplacian(g in graph_strategy(10)) {
        let half = eig_symmetric(&a_alpha_matrix(&g, &alpha(0.5))).unwrap();
        let q = eig_symmetric(&signless_laplacian_matrix::<f64>(&g)).unwrap();
        prop_assert!(spectra_match(&half.map(|x| 2.0 * x), &q, 1e-9).matched);
    }

    #[test]
    fn alpha_one_gives_degrees(g in graph_strategy(10)) {
        let s = eig_symmetric(&a_alpha_matrix(&g, &alpha(1.0))).unwrap();
        let mut d: Vec<f64> = g.degrees().iter().map(|&x| x as f64).collect();
        d.sort_by(|x, y| y.partial_cmp(x).unwrap());
        for (x, y) in s.values().iter().zip(&d) {
            prop_assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn deleting_a_vertex_interlaces(g in graph_strategy(10), a in 0.0..=1.0f64, pick in any::<prop::sample::Index>()) {
        prop_assume!(g.order() >= 2);
        let m = a_alpha_matrix(&g, &alpha(a));
        let drop = pick.index(g.order());
        let keep: Vec<usize> = (0..g.order()).filter(|&v| v != drop).collect();
        let sub = Matrix::from_fn(keep.len(), |i, j| m[(keep[i], keep[j])]);
        let big = eig_symmetric(&m).unwrap();
        let small = eig_symmetric(&sub).unwrap();
        for (i, mu) in small.values().iter().enumerate() {
            prop_assert!(big.values()[i] >= mu - 1e-9 && *mu >= big.values()[i + 1] - 1e-9);
        }
    }

    #[test]
    fn random_joined_union_matches_prediction(seed in any::<u64>(), a in 0.0..=1.0f64) {
        let pool = part_pool().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = random_joined_union(&mut rng, &pool).unwrap();
        let g = joined_union(&spec).unwrap();
        let pred = aalpha::families::Family::JoinedUnion { label: "random".into(), spec }
            .predict(&alpha(a))
            .unwrap();
        let report = verify_prediction("random", &g, &pred, &alpha(a), 1e-8);
        prop_assert!(report.matched, "{report:?}");
    }

    #[test]
    fn block_reduction_preserves_spectrum(
        t in 0usize..3,
        s in 1usize..4,
        copies in 1usize..5,
        raw in prop::collection::vec(-3.0..3.0f64, 64),
    ) {
        let mut it = raw.into_iter();
        let mut take = |k: usize| (&mut it).take(k).collect::<Vec<f64>>();
        let x = symmetric(t, &take(t * (t + 1) / 2));
        let flat = take(t * s);
        let beta: Vec<Vec<f64>> = (0..t).map(|i| flat[i * s..(i + 1) * s].to_vec()).collect();
        let b = symmetric(s, &take(s * (s + 1) / 2));
        let c = symmetric(s, &take(s * (s + 1) / 2));
        let spec = BlockSymmetricSpec { x, beta, b, c, copies };
        let direct = eig_symmetric(&spec.assemble().unwrap()).unwrap();
        let red = spec.reduce().unwrap();
        let mut parts = eig_symmetric(&red.reduced).unwrap();
        for _ in 0..red.multiplicity {
            parts = parts.merged(&red.repeated);
        }
        prop_assert!(spectra_match(&direct, &parts, 1e-8).matched);
    }

    #[test]
    fn joined_union_edges_and_diameter(
        base_pick in 0usize..9,
        picks in prop::collection::vec(any::<prop::sample::Index>(), 6),
    ) {
        let bases = ["path:3", "path:4", "path:5", "path:6", "star:4", "star:5", "cycle:4", "cycle:5", "cycle:6"];
        let base = aalpha::families::parse_graph_spec(bases[base_pick]).unwrap();
        let pool: Vec<Graph> = part_pool().unwrap().into_iter().filter(Graph::is_connected).collect();
        let parts: Vec<Graph> = (0..base.order()).map(|i| pool[picks[i].index(pool.len())].clone()).collect();
        let spec = JoinedUnionSpec::new(base.clone(), parts.clone()).unwrap();
        let g = joined_union(&spec).unwrap();
        let sizes = spec.sizes();
        let expected = parts.iter().map(Graph::edge_count).sum::<usize>()
            + base.edges().iter().map(|&(i, j)| sizes[i] * sizes[j]).sum::<usize>();
        prop_assert_eq!(g.edge_count(), expected);
        prop_assert_eq!(g.diameter(), base.diameter());
    }
}
