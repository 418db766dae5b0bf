mod common;

use proptest::prelude::*;
use radmax::{
    build_H, build_radially_maximal, build_self_centered, extend, is_radially_maximal, lemma1_precondition,
    ConstructionError, ConstructionParams, Graph,
};

use common::{brute_force_radially_maximal, eccentricities, matrix};

fn feasible_grid() -> Vec<ConstructionParams> {
    let mut out = Vec::new();
    for r in 2..=8u32 {
        for d in r..=(2 * r - 2) {
            let floor = if d == r { 2 * r } else { 3 * r - 1 } as usize;
            for n in floor..=(3 * r as usize + 6) {
                out.push(ConstructionParams::new(r, d, n));
            }
        }
    }
    out
}

#[test]
fn desk_grid_has_requested_invariants() {
    for params in feasible_grid() {
        let c = build_radially_maximal(params).unwrap();
        let p = c.graph.eccentricity_profile();
        assert_eq!((c.graph.order(), p.radius, p.diameter), (params.n, params.r, params.d), "{params}");
        assert_eq!(c.labels.len(), params.n);
        if params.d > params.r {
            assert!(params.r >= 3);
        }
    }
}

#[test]
fn extension_preserves_every_eccentricity() {
    for params in feasible_grid().into_iter().step_by(5) {
        let g = build_radially_maximal(params).unwrap().graph;
        let before = eccentricities(&matrix(&g));
        for v in 0..g.order() {
            let after = eccentricities(&matrix(&extend(&g, v).unwrap()));
            assert_eq!(after[..g.order()], before[..], "{params} v={v}");
            assert_eq!(after[g.order()], before[v]);
        }
    }
}

#[test]
fn small_constructions_pass_the_brute_force_oracle() {
    for (r, n) in [(2, 4), (2, 6), (3, 6), (3, 9), (4, 11)] {
        let g = build_self_centered(r, n).unwrap().graph;
        assert!(brute_force_radially_maximal(&g), "G({r},{n})");
    }
    for (r, d, n) in [(3, 4, 8), (3, 4, 12), (4, 5, 11), (4, 6, 12)] {
        let g = build_radially_maximal(ConstructionParams::new(r, d, n)).unwrap().graph;
        assert!(brute_force_radially_maximal(&g), "({r},{d},{n})");
    }
}

#[test]
fn three_four_twelve_extends_x4() {
    let c = build_radially_maximal(ConstructionParams::new(3, 4, 12)).unwrap();
    let x4 = c.vertex("x4").unwrap();
    for copy in 8..12 {
        let mut expected: Vec<usize> = c.graph.neighbors(x4).filter(|&u| u < 8).collect();
        expected.push(x4);
        expected.sort();
        let mut got: Vec<usize> = c.graph.neighbors(copy).filter(|&u| u < 8).collect();
        got.sort();
        assert_eq!(got, expected);
    }
    assert!(is_radially_maximal(&c.graph).unwrap());
}

#[test]
fn five_seven_twenty() {
    let c = build_radially_maximal(ConstructionParams::new(5, 7, 20)).unwrap();
    let p = c.graph.eccentricity_profile();
    assert_eq!((c.graph.order(), p.radius, p.diameter), (20, 5, 7));
    assert!(is_radially_maximal(&c.graph).unwrap());
}

#[test]
fn self_centered_examples_are_radially_maximal() {
    let g = build_self_centered(3, 9).unwrap().graph;
    assert!(g.is_self_centered().unwrap());
    assert_eq!(g.radius(), 3);
    assert!(is_radially_maximal(&g).unwrap());
    assert!(is_radially_maximal(&build_self_centered(4, 11).unwrap().graph).unwrap());
}

#[test]
fn errors_name_the_violated_bound() {
    let e = build_radially_maximal(ConstructionParams::new(3, 5, 10)).unwrap_err();
    assert!(e.to_string().contains("d <= 2r-2"), "{e}");
    let e = build_radially_maximal(ConstructionParams::new(5, 6, 13)).unwrap_err();
    assert!(matches!(e, ConstructionError::UnsupportedOrder { floor: 14, .. }));
    let e = build_radially_maximal(ConstructionParams::new(5, 5, 9)).unwrap_err();
    assert!(matches!(e, ConstructionError::UnsupportedOrder { floor: 10, .. }));
    assert!(build_H(2, 3).is_err());
}

#[test]
fn extension_precondition_empirical_on_small_families() {
    for params in feasible_grid().into_iter().filter(|p| p.n <= 12) {
        let g = build_radially_maximal(params).unwrap().graph;
        for v in 0..g.order() {
            if lemma1_precondition(&g, v).unwrap() {
                assert!(is_radially_maximal(&extend(&g, v).unwrap()).unwrap(), "{params} v={v}");
            }
        }
    }
}

#[test]
fn x_2r_minus_2_is_eccentric_to_nothing_along_the_chain() {
    for r in 3..=6u32 {
        let c = build_radially_maximal(ConstructionParams::new(r, r + 1, 3 * r as usize + 3)).unwrap();
        let anchor = c.x(2 * r as usize - 2);
        let p = c.graph.eccentricity_profile();
        assert!((0..c.graph.order()).all(|v| !p.eccentric_vertices(v).contains(&anchor)));
        assert!(lemma1_precondition(&c.graph, anchor).unwrap());
    }
}

proptest! {
    #[test]
    fn extend_keeps_radius_and_diameter(n in 3usize..10, extra in proptest::collection::vec((0usize..10, 0usize..10), 0..12), at in 0usize..10) {
        let mut g = Graph::cycle(n).unwrap();
        for (u, v) in extra {
            let (u, v) = (u % n, v % n);
            if u != v && !g.has_edge(u, v) {
                g.insert_edge(u, v).unwrap();
            }
        }
        let h = extend(&g, at % n).unwrap();
        let (p, q) = (g.eccentricity_profile(), h.eccentricity_profile());
        prop_assert_eq!((p.radius, p.diameter), (q.radius, q.diameter));
        prop_assert_eq!(&q.ecc[..n], &p.ecc[..]);
    }
}
