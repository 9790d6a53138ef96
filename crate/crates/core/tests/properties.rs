use gridobs::guarding::{build_sguard_polygon, staircase_visible, OrthoPolygon};
use gridobs::io;
use gridobs::monotone::{enumerate_monotone_paths, induced_graph, monotone_path_exists, verify_representation};
use gridobs::obstacle::{build_gor2d, build_gor2d_nonblocking, GridObstacleRep2D, GridObstacleRep3D};
use gridobs::visibility::{hh_visibility_rep, special_visibility_rep};
use gridobs::{generate, Graph};
use proptest::prelude::*;
use std::sync::OnceLock;

fn grid2d(w: usize, h: usize, walls: &[bool], picks: &[usize], blocking: bool) -> GridObstacleRep2D {
    let mut rep = GridObstacleRep2D::filled(w, h, blocking);
    for y in 0..h {
        for x in 0..w {
            rep.set_obstacle(x, y, walls[y * w + x]);
        }
    }
    let mut used = Vec::new();
    for &p in picks {
        let i = p % (w * h);
        if !used.contains(&i) {
            used.push(i);
            rep.set_obstacle(i % w, i / w, false);
            rep.vertex_points.push((i % w, i / w));
        }
    }
    rep
}

fn grid3d(e: (usize, usize, usize), walls: &[bool], picks: &[usize], blocking: bool) -> GridObstacleRep3D {
    let mut rep = GridObstacleRep3D::filled(e, blocking);
    let cells = e.0 * e.1 * e.2;
    let coords = |i: usize| (i % e.0, (i / e.0) % e.1, i / (e.0 * e.1));
    for i in 0..cells {
        let (x, y, z) = coords(i);
        rep.set_obstacle(x, y, z, walls[i]);
    }
    let mut used = Vec::new();
    for &p in picks {
        let i = p % cells;
        if !used.contains(&i) {
            used.push(i);
            let (x, y, z) = coords(i);
            rep.set_obstacle(x, y, z, false);
            rep.vertex_points.push((x, y, z));
        }
    }
    rep
}

fn subgraph(a: &Graph, b: &Graph) -> bool {
    a.edges().iter().all(|&(u, v)| b.has_edge(u, v))
}

prop_compose! {
    fn small_2d(max: usize)(w in 1..=max, h in 1..=max, walls in prop::collection::vec(prop::bool::weighted(0.35), max * max),
        picks in prop::collection::vec(0usize..1000, 2..6), blocking in any::<bool>()) -> GridObstacleRep2D {
        grid2d(w, h, &walls, &picks, blocking)
    }
}

prop_compose! {
    fn small_3d()(x in 1..=3usize, y in 1..=3usize, z in 1..=3usize, walls in prop::collection::vec(prop::bool::weighted(0.35), 27),
        picks in prop::collection::vec(0usize..1000, 2..6), blocking in any::<bool>()) -> GridObstacleRep3D {
        grid3d((x, y, z), &walls, &picks, blocking)
    }
}

/// P3 polygon at the default resolution, built once.
fn p3_polygon() -> &'static OrthoPolygon {
    static P: OnceLock<OrthoPolygon> = OnceLock::new();
    P.get_or_init(|| {
        let g = Graph::path(3);
        let part = g.bipartition().unwrap();
        let rep = build_gor2d_nonblocking(&hh_visibility_rep(&g, &part).unwrap());
        build_sguard_polygon(&rep, &g, &part, 8).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn path_existence_is_symmetric(rep in small_2d(6)) {
        let n = rep.vertex_points.len();
        for u in 0..n {
            for w in 0..n {
                if u != w {
                    prop_assert_eq!(monotone_path_exists(&rep, u, w).unwrap(), monotone_path_exists(&rep, w, u).unwrap());
                }
            }
        }
    }

    #[test]
    fn sweep_matches_enumeration_2d(rep in small_2d(5)) {
        let n = rep.vertex_points.len();
        for u in 0..n {
            for w in u + 1..n {
                prop_assert_eq!(monotone_path_exists(&rep, u, w).unwrap(), enumerate_monotone_paths(&rep, u, w, 1 << 20).unwrap());
            }
        }
    }

    #[test]
    fn sweep_matches_enumeration_3d(rep in small_3d()) {
        let n = rep.vertex_points.len();
        for u in 0..n {
            for w in u + 1..n {
                prop_assert_eq!(monotone_path_exists(&rep, u, w).unwrap(), enumerate_monotone_paths(&rep, u, w, 1 << 20).unwrap());
            }
        }
    }

    #[test]
    fn clearing_an_obstacle_keeps_edges(rep in small_2d(6), cell in 0usize..36) {
        let before = induced_graph(&rep);
        let mut cleared = rep.clone();
        let i = cell % (rep.width * rep.height);
        cleared.set_obstacle(i % rep.width, i / rep.width, false);
        prop_assert!(subgraph(&before, &induced_graph(&cleared)));
    }

    #[test]
    fn blocking_edges_are_nonblocking_edges(rep in small_2d(6)) {
        let mut open = rep.clone();
        let mut closed = rep;
        open.blocking = false;
        closed.blocking = true;
        prop_assert!(subgraph(&induced_graph(&closed), &induced_graph(&open)));
    }

    #[test]
    fn induced_graph_agrees_with_pairwise_queries(rep in small_3d()) {
        let g = induced_graph(&rep);
        let n = rep.vertex_points.len();
        for u in 0..n {
            for w in u + 1..n {
                prop_assert_eq!(g.has_edge(u, w), monotone_path_exists(&rep, u, w).unwrap());
            }
        }
    }

    #[test]
    fn grid_dumps_round_trip(a in small_2d(6), b in small_3d()) {
        let text = io::write_gor2d(&a);
        prop_assert_eq!(io::parse_gor2d(&text).unwrap(), a);
        let text = io::write_gor3d(&b);
        prop_assert_eq!(io::write_gor3d(&io::parse_gor3d(&text).unwrap()), text);
    }

    #[test]
    fn staircase_visibility_is_symmetric(i in 0usize..10_000, j in 0usize..10_000) {
        let p = p3_polygon();
        let cells = p.cells();
        let (a, b) = (cells[i % cells.len()], cells[j % cells.len()]);
        prop_assert!(staircase_visible(p, a, a).unwrap());
        prop_assert_eq!(staircase_visible(p, a, b).unwrap(), staircase_visible(p, b, a).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn planar_pipeline_is_exact(n in 1usize..25, seed in any::<u64>()) {
        let g = generate::random_planar(n, seed);
        let rep = build_gor2d(&special_visibility_rep(&g).unwrap());
        prop_assert!(verify_representation(&rep, &g).unwrap().is_valid());
        let text = io::write_graph(&g, None);
        prop_assert_eq!(io::parse_graph(&text).unwrap().graph, g);
    }

    #[test]
    fn relabelling_preserves_exactness(n in 2usize..16, seed in any::<u64>(), rot in 0usize..16) {
        let (g, _) = generate::random_planar_bipartite(n, seed);
        let perm: Vec<usize> = (0..g.n()).map(|v| (v + rot) % g.n()).collect();
        let h = g.permuted(&perm);
        let part = h.bipartition().unwrap();
        let rep = build_gor2d_nonblocking(&hh_visibility_rep(&h, &part).unwrap());
        prop_assert!(verify_representation(&rep, &h).unwrap().is_valid());
    }
}
