//! Cross-module invariants: product distance additivity, hypercube
//! factorization, verification cross-checks, and solver oracle
//! equivalence on mid-sized bipartite instances.

mod common;

use common::{exists_equalizer_of_size, random_connected_graph};
use equidim::equalizer::{equalized_by, is_equalizer_set};
use equidim::graph::{
    all_pairs_distances, bipartition, cartesian_product, complete, cycle, hypercube, path,
    read_graph, write_graph, Graph, Label, VertexSet,
};
use equidim::solver::{solve_exact, solve_with_forced, Strategy};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Duration;

const BUDGET: Duration = Duration::from_secs(120);

/// d((g,h),(g',h')) = d_G(g,g') + d_H(h,h') on every product pair, for
/// products up to 50 vertices.
#[test]
fn product_distance_additivity() {
    let factors: Vec<(Graph, Graph)> = vec![
        (path(5).unwrap(), path(7).unwrap()),
        (cycle(6).unwrap(), complete(2).unwrap()),
        (complete(3).unwrap(), complete(4).unwrap()),
        (path(2).unwrap(), cycle(5).unwrap()),
        (cycle(7).unwrap(), complete(2).unwrap()),
        (path(4).unwrap(), cycle(9).unwrap()),
        (complete(5).unwrap(), complete(2).unwrap()),
    ];
    for (g, h) in factors {
        let p = cartesian_product(&g, &h).unwrap();
        assert!(p.order() <= 50);
        let dg = all_pairs_distances(&g);
        let dh = all_pairs_distances(&h);
        let dp = all_pairs_distances(&p);
        let hn = h.order() as u32;
        for gi in 0..g.order() as u32 {
            for hi in 0..hn {
                for gj in 0..g.order() as u32 {
                    for hj in 0..hn {
                        assert_eq!(
                            dp.get(gi * hn + hi, gj * hn + hj),
                            dg.get(gi, gj) + dh.get(hi, hj)
                        );
                    }
                }
            }
        }
    }
}

/// The hypercube generator agrees with the n-fold product of K_2 after
/// mapping the product's {1,2} coordinates to bits.
#[test]
fn hypercube_is_iterated_k2_product()  {
    for n in 1..=6u32 {
        let q = hypercube(n).unwrap();
        let k2 = complete(2).unwrap();
        let mut product = complete(2).unwrap();
        for _ in 1..n {
            product = cartesian_product(&product, &k2).unwrap();
        }
        assert_eq!(q.order(), product.order());
        assert_eq!(q.edge_count(), product.edge_count());
        // map each product vertex (a_1..a_n) in {1,2}^n to the bit label
        let to_q = |v: u32| -> u32 {
            let coords = &product.label(v).0;
            let bits: Vec<u32> = coords.iter().map(|&c| c - 1).collect();
            q.index_of(&Label(bits)).unwrap()
        };
        for u in 0..product.order() as u32 {
            for &v in product.neighbors(u) {
                assert!(q.has_edge(to_q(u), to_q(v)));
            }
        }
    }
}

/// is_equalizer_set agrees with the pairwise equalized_by route on
/// family graphs up to 30 vertices under random candidate sets.
#[test]
fn verification_cross_check_on_families() {
    let graphs: Vec<Graph> = vec![
        path(7).unwrap(),
        cycle(9).unwrap(),
        complete(6).unwrap(),
        hypercube(4).unwrap(),
        cartesian_product(&path(3).unwrap(), &path(5).unwrap()).unwrap(),
        cartesian_product(&cycle(7).unwrap(), &complete(2).unwrap()).unwrap(),
        cartesian_product(&complete(3).unwrap(), &complete(5).unwrap()).unwrap(),
        cartesian_product(&path(5).unwrap(), &path(6).unwrap()).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in &graphs {
        assert!(g.order() <= 30);
        let d = all_pairs_distances(g);
        for _ in 0..20 {
            let s: VertexSet = (0..g.order() as u32)
                .filter(|_| rng.gen_bool(0.4))
                .collect();
            let direct = is_equalizer_set(&d, &s);
            let outside: Vec<u32> = (0..g.order() as u32).filter(|&v| !s.contains(v)).collect();
            let via_pairs = outside.iter().enumerate().all(|(i, &x)| {
                outside[i + 1..]
                    .iter()
                    .all(|&y| !equalized_by(&d, &s, x, y).unwrap().is_empty())
            });
            assert_eq!(direct.is_equalizer, via_pairs);
            if let Some(p) = direct.uncovered_pair {
                assert!(equalized_by(&d, &s, p.x, p.y).unwrap().is_empty());
            }
        }
    }
}

/// Subset enumeration and the bipartite-seeded strategy agree on
/// bipartite family instances up to 40 vertices.
#[test]
fn oracle_equivalence_on_bipartite_families() {
    let mut graphs: Vec<Graph> = Vec::new();
    for (k, n) in [
        (2u32, 2u32),
        (2, 4),
        (3, 4),
        (2, 6),
        (3, 5),
        (4, 4),
        (4, 5),
        (4, 6),
        (5, 6),
        (6, 6),
    ] {
        graphs.push(cartesian_product(&path(k).unwrap(), &path(n).unwrap()).unwrap());
    }
    for n in [4u32, 6, 8, 10, 12, 14] {
        graphs.push(cartesian_product(&cycle(n).unwrap(), &complete(2).unwrap()).unwrap());
    }
    for n in 2..=5u32 {
        graphs.push(hypercube(n).unwrap());
    }
    for g in &graphs {
        assert!(g.order() <= 40);
        let d = all_pairs_distances(g);
        let by_enum = solve_exact(g, &d, Strategy::SubsetEnumeration, BUDGET).unwrap();
        let by_seed = solve_exact(g, &d, Strategy::BipartiteSeeded, BUDGET).unwrap();
        assert_eq!(
            by_enum.xi,
            by_seed.xi,
            "strategies disagree on {:?}",
            g.family_tag()
        );
        let bip = bipartition(g);
        assert!(by_enum.xi >= bip.side_a.len().min(bip.side_b.len()));
    }
}

/// Optimality re-checked by plain exhaustion at xi - 1 on family
/// instances up to 16 vertices.
#[test]
fn certificate_soundness_small_families() {
    let graphs: Vec<Graph> = vec![
        cycle(4).unwrap(),
        cycle(5).unwrap(),
        cycle(7).unwrap(),
        path(8).unwrap(),
        hypercube(3).unwrap(),
        hypercube(4).unwrap(),
        cartesian_product(&complete(2).unwrap(), &complete(3).unwrap()).unwrap(),
        cartesian_product(&complete(3).unwrap(), &complete(4).unwrap()).unwrap(),
        cartesian_product(&path(3).unwrap(), &path(5).unwrap()).unwrap(),
        cartesian_product(&cycle(7).unwrap(), &complete(2).unwrap()).unwrap(),
    ];
    for g in &graphs {
        assert!(g.order() <= 16);
        let d = all_pairs_distances(g);
        let sol = solve_exact(g, &d, Strategy::Auto, BUDGET).unwrap();
        assert!(is_equalizer_set(&d, &sol.basis).is_equalizer);
        if sol.xi > 0 {
            assert!(
                !exists_equalizer_of_size(&d, sol.xi - 1),
                "exhaustion found a smaller set on {:?}",
                g.family_tag()
            );
        }
    }
}

/// The forced-set solver returns a superset of what it was given, and
/// forcing nothing reproduces the unconstrained answer.
#[test]
fn forced_solver_containment() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for i in 0..15u32 {
        let g = random_connected_graph(&mut rng, 5 + (i % 6), 0.2);
        let d = all_pairs_distances(&g);
        let forced: VertexSet = (0..g.order() as u32)
            .filter(|_| rng.gen_bool(0.3))
            .collect();
        let sol = solve_with_forced(&g, &d, &forced, BUDGET).unwrap();
        for v in forced.iter() {
            assert!(sol.basis.contains(v));
        }
        assert!(is_equalizer_set(&d, &sol.basis).is_equalizer);
        let unforced = solve_with_forced(&g, &d, &VertexSet::new(), BUDGET).unwrap();
        let plain = solve_exact(&g, &d, Strategy::SubsetEnumeration, BUDGET).unwrap();
        assert_eq!(unforced.xi, plain.xi);
        assert_eq!(unforced.basis, plain.basis);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Graph files round-trip: labels, adjacency, and edge counts survive
    /// a save/load cycle.
    #[test]
    fn file_round_trip(n in 2u32..24, seed in any::<u64>(), p in 0.05f64..0.5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_graph(&mut rng, n, p);
        let mut buf = Vec::new();
        write_graph(&g, &mut buf).unwrap();
        let g2 = read_graph(&buf[..]).unwrap();
        prop_assert_eq!(g2.order(), g.order());
        prop_assert_eq!(g2.edge_count(), g.edge_count());
        prop_assert_eq!(g2.labels(), g.labels());
        for v in 0..g.order() as u32 {
            prop_assert_eq!(g2.neighbors(v), g.neighbors(v));
        }
    }

    /// Bisectors are symmetric in their arguments on random graphs.
    #[test]
    fn bisector_symmetry(n in 2u32..16, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_graph(&mut rng, n, 0.25);
        let d = all_pairs_distances(&g);
        for v in 0..n {
            for w in v + 1..n {
                prop_assert_eq!(
                    equidim::equalizer::bisector(&d, v, w).unwrap(),
                    equidim::equalizer::bisector(&d, w, v).unwrap()
                );
            }
        }
    }
}
