mod common;

use common::*;
use metricsub::construct::{
    build_theorem6, build_theorem9, circulant_regular, circular_join, complete_minus, gallery_graph,
    nice_connection, CompleteMinusMode, ConstructionSpec, GalleryId, NiceLabeling,
};
use metricsub::certify::verify_construction;
use metricsub::Graph;

#[test]
fn circulants_are_regular_hamiltonian_and_connected() {
    for n in 3..=12 {
        for k in 2..n {
            if k * n % 2 == 1 {
                assert!(circulant_regular(n, k).is_err());
                continue;
            }
            let g = circulant_regular(n, k).unwrap();
            let m = matrix(&g);
            assert_eq!(regular(&m), Some(k), "n={n} k={k}");
            assert!(connected(&m), "n={n} k={k}");
            assert!(brute_hamiltonian(&m), "n={n} k={k}");
        }
    }
    assert!(circulant_regular(5, 3).is_err());
}

#[test]
fn theorem6_order_14_by_edge_count() {
    let (g, _) = build_theorem6(14).unwrap();
    let m = matrix(&g);
    assert_eq!(edge_count(&m), 27);
    let (c, a, p) = blocks(&m).unwrap();
    for (vs, o) in [(c, 2), (a, 4), (p, 8)] {
        let s = induced(&m, &vs);
        assert_eq!(s.len(), o);
        assert!(is_path(&s));
    }
}

#[test]
fn theorem9_larger_center_keeps_outer_blocks() {
    let (g15, _) = build_theorem9(2, 15).unwrap();
    let (g16, _) = build_theorem9(2, 16).unwrap();
    let (m15, m16) = (matrix(&g15), matrix(&g16));
    let (c15, a15, p15) = blocks(&m15).unwrap();
    let (c16, a16, p16) = blocks(&m16).unwrap();
    assert_eq!((c15.len(), c16.len()), (3, 4));
    assert!(is_cycle(&induced(&m16, &c16)));
    assert_eq!(induced(&m15, &a15), induced(&m16, &a16));
    assert_eq!(induced(&m15, &p15), induced(&m16, &p16));
}

#[test]
fn complete_minus_is_complement_of_removed_structure() {
    let cases = [
        (CompleteMinusMode::PerfectMatching, 8, 6),
        (CompleteMinusMode::HamiltonianCycle, 7, 4),
        (CompleteMinusMode::HamiltonianPath, 6, 0),
    ];
    for (mode, m, deg) in cases {
        let g = complete_minus(mode, m).unwrap();
        assert_eq!(g.order(), m);
        let comp = matrix(&g.complement());
        match mode {
            CompleteMinusMode::PerfectMatching => assert_eq!(regular(&comp), Some(1)),
            CompleteMinusMode::HamiltonianCycle => assert!(is_cycle(&comp)),
            CompleteMinusMode::HamiltonianPath => assert!(is_path(&comp)),
        }
        if deg > 0 {
            assert_eq!(g.regular_degree(), Some(deg));
        }
    }
    assert!(complete_minus(CompleteMinusMode::PerfectMatching, 7).is_err());
}

#[test]
fn circular_join_and_nice_connection_contracts() {
    let parts = vec![
        Graph::path(1).unwrap(),
        Graph::path(2).unwrap(),
        Graph::cycle(3).unwrap(),
        Graph::path(2).unwrap(),
    ];
    let g = circular_join(&parts).unwrap();
    let owner: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, p)| (0..p.order()).map(move |v| (i, v)))
        .collect();
    assert_eq!(g.order(), owner.len());
    for (u, &(i, x)) in owner.iter().enumerate() {
        for (v, &(j, y)) in owner.iter().enumerate() {
            let expected = if i == j {
                parts[i].has_edge(x, y)
            } else {
                (i + 1) % 4 == j || (j + 1) % 4 == i
            };
            assert_eq!(g.has_edge(u, v), expected, "{u} {v}");
        }
    }
    assert!(circular_join(&parts[..2]).is_err());
    let spec = ConstructionSpec::CircularJoin { parts };
    assert!(verify_construction(&spec, &g, None).passed());

    let small = Graph::cycle(3).unwrap();
    let large = Graph::cycle(5).unwrap();
    let lab = NiceLabeling {
        small: vec![2, 0, 1],
        large: vec![4, 3, 2, 1, 0],
    };
    let g = nice_connection(&small, &large, Some(&lab)).unwrap();
    let spec = ConstructionSpec::NiceConnection { g: small, h: large, labeling: Some(lab) };
    assert!(verify_construction(&spec, &g, None).passed());
    // x_1 = 2 takes y_1 = 4 and the surplus y_4, y_5
    for y in [4, 1, 0] {
        assert!(g.has_edge(2, 3 + y));
    }
}

#[test]
fn gallery_entries_certify() {
    for id in GalleryId::ALL {
        let spec = ConstructionSpec::Gallery { id };
        let (g, layout) = spec.build().unwrap();
        assert_eq!(g, gallery_graph(id).unwrap());
        let v = verify_construction(&spec, &g, layout.as_ref());
        assert!(v.passed(), "{id}: {v:?}");
    }
}
