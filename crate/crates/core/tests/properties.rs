use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use triex_core::canon::canonical_form;
use triex_core::extremal::{choose2, max_triangles, triangular_decompose};
use triex_core::graph::{
    attach_fan, complete_graph, contract_pair, disjoint_union, pair_count, pair_from_index, Graph,
};
use triex_core::graph6;
use triex_core::schur::{abelian_tensor_exponent, vermani_improved_bound};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), pair_count(n)).prop_map(move |present| {
            let edges: Vec<_> = (0..present.len())
                .filter(|&p| present[p])
                .map(pair_from_index)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// One representative per isomorphism class on exactly `n` vertices, for
/// every `n <= max_n`, by adding a vertex with every neighbourhood to each
/// class on `n - 1` vertices. Keys keep isolated vertices distinguishable.
fn classes_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::empty(0).unwrap()]];
    for n in 1..=max_n {
        let mut seen: BTreeMap<(usize, String), Graph> = BTreeMap::new();
        for g in &levels[n - 1] {
            for nb in 0u64..(1 << (n - 1)) {
                let targets: Vec<usize> = (0..n - 1).filter(|v| nb >> v & 1 == 1).collect();
                let h = attach_fan(g, &targets).unwrap();
                let isolated = (0..n).filter(|&v| h.degree(v) == 0).count();
                let key = (isolated, canonical_form(&h).unwrap().graph6);
                seen.entry(key).or_insert(h);
            }
        }
        levels.push(seen.into_values().collect());
    }
    levels
}

#[test]
fn class_counts_and_lemma_checks_up_to_eight_vertices() {
    let levels = classes_up_to(8);
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    // graphs on n unlabeled vertices
    assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044, 12346]);

    for g in levels.iter().flatten() {
        // open triple exists exactly when some component is not a clique
        let label = g.components();
        let cliquish = (0..g.vertex_count()).all(|u| {
            (0..g.vertex_count()).all(|v| u == v || label[u] != label[v] || g.has_edge(u, v))
        });
        assert_eq!(
            g.find_open_triple().is_none(),
            cliquish,
            "{}",
            graph6::encode(g)
        );
        if g.is_connected() && !g.is_complete() {
            let t = g.find_open_triple().unwrap();
            assert!(g.has_edge(t.x, t.y) && g.has_edge(t.y, t.z) && !g.has_edge(t.x, t.z));
            assert!(t.x != t.z);
        }
        if g.is_complete() {
            assert!(g.find_open_triple().is_none());
        }

        // average triangles per edge, with its equality case
        let e = g.edge_count() as u64;
        let tri = g.triangle_count();
        if e == 0 {
            continue;
        }
        for m in 2..=10u64 {
            if e > choose2(m) {
                continue;
            }
            assert!(3 * tri <= (m - 2) * e, "{} m={m}", graph6::encode(g));
            if 3 * tri == (m - 2) * e {
                let s = g.strip_isolated();
                assert!(
                    s.is_complete() && s.vertex_count() as u64 == m,
                    "{} m={m}",
                    graph6::encode(g)
                );
            }
        }

        // the brute-force maximum never exceeds the closed form
        assert!(tri <= max_triangles(e));
    }
}

#[test]
fn canonical_form_survives_random_relabelings() {
    let mut rng = StdRng::seed_from_u64(17);
    let samples = [
        graph6::decode("DQc").unwrap(),
        graph6::decode("G?`FE_").unwrap(),
        attach_fan(&complete_graph(5).unwrap(), &[0, 2]).unwrap(),
        disjoint_union(&complete_graph(3).unwrap(), &complete_graph(4).unwrap()).unwrap(),
        graph6::decode("IheA@GUAo").unwrap(), // Petersen
    ];
    for g in samples {
        let want = canonical_form(&g).unwrap();
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.permute(&perm).unwrap()).unwrap(), want);
        }
    }
}

proptest! {
    #[test]
    fn union_adds_triangles(g in arb_graph(9), h in arb_graph(9)) {
        let u = disjoint_union(&g, &h).unwrap();
        prop_assert_eq!(u.triangle_count(), g.triangle_count() + h.triangle_count());
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
    }

    #[test]
    fn relabeling_preserves_counts_and_form(
        (g, perm) in arb_graph(10).prop_flat_map(|g| { let n = g.vertex_count(); (Just(g), arb_perm(n)) })
    ) {
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(h.triangle_count(), g.triangle_count());
        prop_assert_eq!(canonical_form(&h).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn contraction_shrinks(g in arb_graph(10), a in 0usize..10, b in 0usize..10) {
        let n = g.vertex_count();
        prop_assume!(n >= 2);
        let (u, v) = (a % n, b % n);
        prop_assume!(u != v);
        let c = contract_pair(&g, u, v).unwrap();
        prop_assert_eq!(c.vertex_count(), n - 1);
        prop_assert!(c.edge_count() <= g.edge_count());
    }

    #[test]
    fn strip_preserves_counts(g in arb_graph(12)) {
        let s = g.strip_isolated();
        prop_assert_eq!(s.edge_count(), g.edge_count());
        prop_assert_eq!(s.triangle_count(), g.triangle_count());
        prop_assert!((0..s.vertex_count()).all(|v| s.degree(v) > 0));
    }

    #[test]
    fn graph6_roundtrip(g in arb_graph(11)) {
        let line = graph6::encode(&g);
        prop_assert!(line.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&line).unwrap(), g);
    }

    #[test]
    fn decomposition_bounds(n in 0u64..1_000_000_000_000) {
        let d = triangular_decompose(n);
        prop_assert!(choose2(d.r) <= n && n < choose2(d.r + 1));
        prop_assert!(d.t < d.r);
        prop_assert!(max_triangles(n) <= max_triangles(n + 1));
    }

    #[test]
    fn tensor_symmetric_and_additive(
        a in prop::collection::vec(1u64..6, 0..5),
        b in prop::collection::vec(1u64..6, 0..5),
        c in prop::collection::vec(1u64..6, 0..5),
    ) {
        prop_assert_eq!(abelian_tensor_exponent(&a, &b), abelian_tensor_exponent(&b, &a));
        let ac: Vec<u64> = a.iter().chain(&c).copied().collect();
        prop_assert_eq!(
            abelian_tensor_exponent(&ac, &b),
            abelian_tensor_exponent(&a, &b) + abelian_tensor_exponent(&c, &b)
        );
    }

    #[test]
    fn vermani_specialization_dominates(
        (m, r, dq) in (2u64..20).prop_flat_map(|m| (Just(m), 0..=m)).prop_flat_map(|(m, r)| (Just(m), Just(r), 0..=m - r)),
        tensor in 0u64..30,
    ) {
        let rep = vermani_improved_bound(5, m, r, dq, tensor).unwrap();
        prop_assert!(rep.secondary.unwrap().exponent_rational >= rep.exponent_rational);
    }
}
