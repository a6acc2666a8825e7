mod common;

use common::*;
use metricsub::canon::are_isomorphic;
use metricsub::codec::write_graph6_lines;
use metricsub::construct::GALLERY_G6;
use metricsub::search::{
    regenerate_gallery, remark1_skeleton, reproduce_theorem10, skeleton_search, SearchResult, SearchSkeleton,
};
use metricsub::{Error, Graph};

fn fingerprint(r: &SearchResult) -> Vec<(String, String, u64)> {
    r.witnesses
        .iter()
        .map(|w| (w.canonical.to_hex(), w.graph6.clone(), w.labeled_count))
        .collect()
}

#[test]
fn worker_count_does_not_change_results() {
    let sk = remark1_skeleton(22);
    let serial = skeleton_search(&sk, 1).unwrap();
    for threads in [2, 4] {
        let par = skeleton_search(&sk, threads).unwrap();
        assert_eq!(fingerprint(&serial), fingerprint(&par));
        assert_eq!(serial.candidates_checked, par.candidates_checked);
    }
    assert_eq!(fingerprint(&serial), fingerprint(&skeleton_search(&sk, 1).unwrap()));
}

#[test]
fn witnesses_are_distinct_and_reanalyze() {
    let r = skeleton_search(&remark1_skeleton(22), 2).unwrap();
    assert_eq!(r.class_count, r.witnesses.len());
    assert!(r.labeled_count >= r.class_count as u64);
    assert!(r.witnesses.windows(2).all(|w| w[0].canonical < w[1].canonical));
    for (i, a) in r.witnesses.iter().enumerate() {
        for b in &r.witnesses[i + 1..] {
            assert!(!are_isomorphic(&a.graph, &b.graph));
        }
        // block order: center 0, annulus 1..=4, periphery 5..=12
        let (c, an, p) = blocks(&matrix(&a.graph)).unwrap();
        assert_eq!((c, an, p), (vec![0], (1..5).collect(), (5..13).collect()));
    }
    assert_eq!(r.orbit_check_passes(), Some(true));
}

/// First connected graph of order 6 with no nontrivial automorphism.
fn asymmetric6() -> Graph {
    (0u32..1 << 15)
        .map(|bits| {
            let mut g = Graph::new(6).unwrap();
            let pairs = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v)));
            for (i, (u, v)) in pairs.enumerate() {
                if bits >> i & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
            }
            g
        })
        .find(|g| g.is_connected() && brute_automorphisms(&matrix(g)) == 1)
        .unwrap()
}

#[test]
fn labeled_count_equals_class_count_only_for_asymmetric_blocks() {
    let r = reproduce_theorem10(1).unwrap();
    assert!(r.labeled_count > r.class_count as u64);

    let a = asymmetric6();
    let k1 = Graph::path(1).unwrap();
    let (per, _) = Graph::disjoint_union(&[k1.clone(), a.clone()]).unwrap();
    let sk = SearchSkeleton::new(k1, a, per, 2, 4).with_periphery_annulus_degree(1, 1);
    let r = skeleton_search(&sk, 2).unwrap();
    assert!(r.class_count > 0);
    assert_eq!(r.labeled_count, r.class_count as u64);
    assert_eq!(r.orbit_check_passes(), Some(true));
}

#[test]
fn infeasible_budget_is_an_error() {
    let err = skeleton_search(&remark1_skeleton(9), 1).unwrap_err();
    assert!(matches!(err, Error::Search(_)));
    assert!(err.to_string().contains("budget"), "{err}");
}

#[test]
fn shipped_gallery_matches_regeneration() {
    let regenerated = write_graph6_lines(&regenerate_gallery(2).unwrap()).unwrap();
    assert_eq!(regenerated, GALLERY_G6);
}
