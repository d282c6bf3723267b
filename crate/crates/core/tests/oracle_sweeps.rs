use num_bigint::BigUint;

use genusdist::combinatorics::{partitions_of, Partition};
use genusdist::genus::{bouquet_gamma, dipole_gamma, fan_gamma, fan_handles, gamma_constellation, gamma_digraph};
use genusdist::oracle::{
    enumerate_bieulerian_4tuples, enumerate_embeddings, enumerate_factorizations, total_embeddings, EulerianDigraph,
    GenusHistogram, OracleConfig,
};
use genusdist::Error;

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

#[test]
fn constellations_beyond_three_factors() {
    for m in 5..=6 {
        for n in 1..=3 {
            for lambda in partitions_of(n) {
                let oracle = enumerate_factorizations(m, n, &lambda, &cfg()).unwrap();
                assert!(
                    oracle.matches(&gamma_constellation(m, n, &lambda).unwrap()),
                    "m={m} λ={lambda}"
                );
            }
        }
    }
}

#[test]
fn four_tuples_match_formula() {
    for n in 1..=4 {
        for lambda in partitions_of(n) {
            let h = enumerate_bieulerian_4tuples(n, &lambda, &cfg()).unwrap();
            assert!(h.matches(&gamma_constellation(3, n, &lambda).unwrap()), "λ={lambda}");
        }
    }
}

#[test]
fn bouquets_and_dipoles() {
    for n in 1..=4 {
        let b = EulerianDigraph::bouquet(n).unwrap();
        assert!(enumerate_embeddings(&b, &cfg())
            .unwrap()
            .matches(&bouquet_gamma(n).unwrap()));
        let d = EulerianDigraph::dipole(n).unwrap();
        assert!(enumerate_embeddings(&d, &cfg())
            .unwrap()
            .matches(&dipole_gamma(n).unwrap()));
    }
}

/// A handle joined to a path `1 → 2 → 3` and a separate vertex `4`.
fn two_tree_fan() -> EulerianDigraph {
    let edges = vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (0, 2),
        (2, 0),
        (0, 4),
        (4, 0),
        (0, 4),
        (4, 0),
    ];
    EulerianDigraph::new(5, edges).unwrap()
}

#[test]
fn fans_against_embeddings() {
    let fans = [
        two_tree_fan(),
        // star of three leaves with doubled edges on one
        EulerianDigraph::new(4, vec![(0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0), (0, 3), (3, 0)]).unwrap(),
        // a branched tree hanging off the handle
        EulerianDigraph::new(4, vec![(0, 1), (0, 1), (1, 2), (2, 0), (1, 3), (3, 0)]).unwrap(),
    ];
    for d in &fans {
        let oracle = enumerate_embeddings(d, &cfg()).unwrap();
        assert_eq!(BigUint::from(oracle.total()), total_embeddings(d));
        let handles = fan_handles(d);
        assert!(handles.contains(&0));
        for h in handles {
            let gamma = fan_gamma(d, h).unwrap();
            assert!(oracle.matches(&gamma), "handle {h}: {:?} vs {gamma}", oracle.counts());
        }
    }
}

#[test]
fn non_fans_are_refused() {
    let bidirected_triangle = EulerianDigraph::new(3, vec![(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)]).unwrap();
    assert!(fan_handles(&bidirected_triangle).is_empty());
    assert!(matches!(fan_gamma(&bidirected_triangle, 0), Err(Error::NotAFan(_))));
    let looped = EulerianDigraph::new(2, vec![(0, 0), (0, 1), (1, 0)]).unwrap();
    assert!(matches!(fan_gamma(&looped, 0), Err(Error::NotAFan(_))));
    // the loop survives the removal of vertex 1
    assert!(matches!(fan_gamma(&looped, 1), Err(Error::NotAFan(_))));
    let oracle = enumerate_embeddings(&looped, &cfg()).unwrap();
    assert_eq!(BigUint::from(oracle.total()), total_embeddings(&looped));
}

fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

#[test]
fn results_do_not_depend_on_worker_count() {
    let lambda: Partition = "3,2".parse().unwrap();
    let run_all = || -> (GenusHistogram, GenusHistogram, GenusHistogram) {
        (
            enumerate_factorizations(3, 5, &lambda, &cfg()).unwrap(),
            enumerate_embeddings(&EulerianDigraph::dipole(4).unwrap(), &cfg()).unwrap(),
            enumerate_bieulerian_4tuples(4, &"2,2".parse().unwrap(), &cfg()).unwrap(),
        )
    };
    let one = with_threads(1, run_all);
    let four = with_threads(4, run_all);
    assert_eq!(one, four);
    // |C([3,2])| · 4! · 5! tuples
    assert_eq!(one.0.total(), 20 * 24 * 120);
    let seven = with_threads(7, run_all);
    assert_eq!(one, seven);
}

#[test]
fn digraph_counts_scale_constellations() {
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            let digraph = gamma_digraph(n, &lambda).unwrap();
            let d = EulerianDigraph::bipartite(&lambda).unwrap();
            assert_eq!(digraph.total(), total_embeddings(&d), "λ={lambda}");
        }
    }
}
