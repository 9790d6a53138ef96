//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use gridobs::domination::min_dominating_set;
use gridobs::guarding::{
    check_reduction, coverage_map_full, guards_from_dominating_set, tail_isolation_violations, OrthoPolygon,
    DEFAULT_BUDGET,
};
use gridobs::io::{self, Artifact, GraphFile};
use gridobs::monotone::{enumerate_monotone_paths, monotone_path_exists, through_traffic, verify_representation};
use gridobs::obstacle::{
    blocking_3d_coord, build_gor2d, build_gor2d_nonblocking, build_gor3d, build_gor3d_nonblocking, gor3d_edge_route,
    GridObstacleRep2D, GridObstacleRep3D, EXTENT_FACTOR_2D,
};
use gridobs::visibility::{hh_visibility_rep, special_visibility_rep};
use gridobs::{generate, svg, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn exact<G: gridobs::monotone::ObstacleGrid>(rep: &G, g: &Graph, what: &str) -> Result<(), String> {
    let r = verify_representation(rep, g).map_err(|e| format!("{what}: {e}"))?;
    ensure(r.is_valid(), || format!("{what}: missing {:?}, spurious {:?}", r.missing, r.spurious))
}

fn planar_2d() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for i in 0..100u64 {
        let n = 1 + (i as usize * 7) % 40;
        let g = generate::random_planar(n, i);
        ensure(g.is_connected(), || format!("seed {i}: generator gave a disconnected graph"))?;
        let vis = special_visibility_rep(&g).map_err(|e| format!("seed {i}: {e}"))?;
        let rep = build_gor2d(&vis);
        exact(&rep, &g, &format!("seed {i}, n={n}"))?;
        let cap = EXTENT_FACTOR_2D * n;
        ensure(rep.width <= cap && rep.height <= cap, || {
            format!("seed {i}, n={n}: {}x{} exceeds {cap}", rep.width, rep.height)
        })?;
        worst = worst.max(rep.width.max(rep.height) as f64 / n as f64);
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("100 graphs exact, max extent/n = {worst:.2} <= {EXTENT_FACTOR_2D}, {t:.2?}"))
}

fn arbitrary_3d() -> Outcome {
    let start = Instant::now();
    let mut graphs: Vec<Graph> = (1..=10).map(Graph::complete).collect();
    for i in 0..40u64 {
        let n = 2 + (i as usize * 11) % 19;
        let p = [0.15, 0.3, 0.5, 0.7][i as usize % 4];
        graphs.push(generate::random_gnp(n, p, 1000 + i));
    }
    for (k, g) in graphs.iter().enumerate() {
        let rep = build_gor3d(g);
        exact(&rep, g, &format!("graph {k}, n={}", g.n()))?;
        let cap = 2 * g.n() + 3;
        let (x, y, z) = rep.extents;
        ensure(x <= cap && y <= cap && z <= cap, || format!("graph {k}: extents {:?} exceed {cap}", rep.extents))?;
    }
    let k4 = build_gor3d(&Graph::complete(4));
    let c = blocking_3d_coord;
    for i in 1..=4 {
        ensure(k4.vertex_points[i - 1] == (c(i), c(i), c(i)), || format!("K4 vertex {i} at {:?}", k4.vertex_points[i - 1]))?;
    }
    let route = gor3d_edge_route(0, 2);
    ensure(route == [(1, 1, 1), (3, 1, 1), (3, 1, 3), (3, 3, 3)], || format!("K4 route v1-v3 is {route:?}"))?;
    for w in route.windows(2) {
        let (a, b) = ((c(w[0].0), c(w[0].1), c(w[0].2)), (c(w[1].0), c(w[1].1), c(w[1].2)));
        for x in a.0.min(b.0)..=a.0.max(b.0) {
            for y in a.1.min(b.1)..=a.1.max(b.1) {
                for z in a.2.min(b.2)..=a.2.max(b.2) {
                    ensure(!k4.is_obstacle(x, y, z), || format!("K4 route blocked at {:?}", (x, y, z)))?;
                }
            }
        }
    }
    ensure(matches!(monotone_path_exists(&k4, 0, 2), Ok(true)), || "K4 v1-v3 not joined".into())?;
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{} graphs exact, extents <= 2n+3, K4 layout matches, {t:.2?}", graphs.len()))
}

fn planar_bipartite_2d() -> Outcome {
    let start = Instant::now();
    for i in 0..100u64 {
        let n = 1 + (i as usize * 13) % 30;
        let (g, part) = generate::random_planar_bipartite(n, 500 + i);
        let hh = hh_visibility_rep(&g, &part).map_err(|e| format!("seed {i}: {e}"))?;
        let rep = build_gor2d_nonblocking(&hh);
        exact(&rep, &g, &format!("seed {i}, n={n}"))?;
        let through = through_traffic(&rep);
        ensure(through.is_empty(), || format!("seed {i}: paths pass through vertices {through:?}"))?;
    }
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!("100 graphs exact, no through-traffic, {t:.2?}"))
}

fn bipartite_3d() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for a in 1..=6 {
        for b in 1..=6 {
            let g = Graph::complete_bipartite(a, b);
            let part = g.bipartition().map_err(|e| e.to_string())?;
            exact(&build_gor3d_nonblocking(&g, &part).map_err(|e| e.to_string())?, &g, &format!("K_{a},{b}"))?;
            count += 1;
        }
    }
    for i in 0..50u64 {
        let a = 1 + (i as usize) % 8;
        let b = 1 + (i as usize * 5) % (16 - a);
        let p = [0.2, 0.4, 0.6][i as usize % 3];
        let (g, part) = generate::random_bipartite(a, b, p, 2000 + i);
        exact(&build_gor3d_nonblocking(&g, &part).map_err(|e| e.to_string())?, &g, &format!("seed {i}, {a}+{b}"))?;
        count += 1;
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{count} graphs exact, {t:.2?}"))
}

fn random_cells(rng: &mut ChaCha8Rng, cells: usize) -> (Vec<bool>, Vec<usize>) {
    let density = rng.gen_range(1..=6) as f64 / 10.0;
    let walls: Vec<bool> = (0..cells).map(|_| rng.gen_bool(density)).collect();
    let k = rng.gen_range(2..=4);
    let mut picks: Vec<usize> = Vec::new();
    while picks.len() < k {
        let c = rng.gen_range(0..cells);
        if !picks.contains(&c) {
            picks.push(c);
        }
    }
    (walls, picks)
}

fn compare_all<G: gridobs::monotone::ObstacleGrid>(rep: &G, what: &str) -> Result<usize, String> {
    let n = rep.vertex_count();
    let mut pairs = 0;
    for u in 0..n {
        for w in 0..n {
            if u == w {
                continue;
            }
            let dp = monotone_path_exists(rep, u, w).map_err(|e| e.to_string())?;
            let brute = enumerate_monotone_paths(rep, u, w, 1 << 22).map_err(|e| e.to_string())?;
            ensure(dp == brute, || format!("{what}: pair ({u},{w}) sweep {dp}, enumeration {brute}"))?;
            pairs += 1;
        }
    }
    Ok(pairs)
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut pairs = 0;
    for i in 0..1000 {
        let (walls, picks) = random_cells(&mut rng, 16);
        let mut rep = GridObstacleRep2D::filled(4, 4, rng.gen_bool(0.5));
        for c in 0..16 {
            rep.set_obstacle(c % 4, c / 4, walls[c]);
        }
        for &c in &picks {
            rep.set_obstacle(c % 4, c / 4, false);
            rep.vertex_points.push((c % 4, c / 4));
        }
        pairs += compare_all(&rep, &format!("2D grid {i}"))?;
    }
    for i in 0..300 {
        let (walls, picks) = random_cells(&mut rng, 27);
        let mut rep = GridObstacleRep3D::filled((3, 3, 3), rng.gen_bool(0.5));
        let at = |c: usize| (c % 3, (c / 3) % 3, c / 9);
        for c in 0..27 {
            let (x, y, z) = at(c);
            rep.set_obstacle(x, y, z, walls[c]);
        }
        for &c in &picks {
            let (x, y, z) = at(c);
            rep.set_obstacle(x, y, z, false);
            rep.vertex_points.push((x, y, z));
        }
        pairs += compare_all(&rep, &format!("3D grid {i}"))?;
    }
    Ok(format!("1000 2D + 300 3D grids, {pairs} ordered pairs agree"))
}

/// Connected bipartite graphs on `1..=max_n` vertices, one per isomorphism
/// class. All of them are planar since K3,3 needs six vertices.
fn small_bipartite_classes(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let perms = permutations(n);
        let mut seen = std::collections::HashSet::new();
        for mask in 0u32..(1 << slots.len()) {
            let edges: Vec<_> = (0..slots.len()).filter(|&i| mask >> i & 1 == 1).map(|i| slots[i]).collect();
            let g = Graph::new(n, &edges).unwrap();
            if !g.is_connected() || g.bipartition().is_err() {
                continue;
            }
            let canon = perms
                .iter()
                .map(|p| {
                    let mut e: Vec<_> = edges.iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
                    e.sort_unstable();
                    e
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                out.push(g);
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn reduction_graphs() -> Vec<(String, Graph)> {
    let mut gs: Vec<(String, Graph)> =
        small_bipartite_classes(5).into_iter().map(|g| (format!("n={} m={} {:?}", g.n(), g.m(), g.edges()), g)).collect();
    gs.push(("P5".into(), Graph::path(5)));
    gs.push(("C6".into(), Graph::cycle(6)));
    gs.push(("K1,4".into(), Graph::complete_bipartite(1, 4)));
    gs
}

fn reduction_identity(polygons: &mut Vec<(String, Graph, OrthoPolygon)>) -> Outcome {
    let start = Instant::now();
    let gs = reduction_graphs();
    let count = gs.len();
    for (name, g) in gs {
        let part = g.bipartition().map_err(|e| e.to_string())?;
        let report = check_reduction(&g, &part, DEFAULT_BUDGET).map_err(|e| format!("{name}: {e}"))?;
        match report.holds() {
            Some(true) => {}
            Some(false) => return Err(format!("{name}: {report}")),
            None => return Err(format!("{name}: budget exceeded, {report}")),
        }
        polygons.push((name, g, report.polygon));
    }
    let t = within(start, Duration::from_secs(600))?;
    Ok(format!("{count} graphs satisfy m* = 2|E| + gamma, {t:.2?}"))
}

fn gadget_invariants(polygons: &[(String, Graph, OrthoPolygon)]) -> Outcome {
    ensure(!polygons.is_empty(), || "no polygons from the reduction criterion".into())?;
    for (name, g, p) in polygons {
        let bad = tail_isolation_violations(p, &coverage_map_full(p));
        ensure(bad.is_empty(), || format!("{name}: tail pixels {bad:?} not isolated"))?;
        let dom = min_dominating_set(g);
        let sol = guards_from_dominating_set(p, &dom).map_err(|e| format!("{name}: {e}"))?;
        ensure(sol.covers_all(p), || format!("{name}: constructive guards leave cells uncovered"))?;
        let want = 2 * g.m() + dom.len();
        ensure(sol.size() == want, || format!("{name}: {} constructive guards, expected {want}", sol.size()))?;
    }
    Ok(format!("{} polygons: tails isolated, constructive guards cover with 2|E| + gamma", polygons.len()))
}

fn round_trip_and_render() -> Outcome {
    let mut artifacts = Vec::new();
    for i in 0..4u64 {
        let (g, part) = generate::random_planar_bipartite(4 + 3 * i as usize, 40 + i);
        let hh = hh_visibility_rep(&g, &part).map_err(|e| e.to_string())?;
        let nb = build_gor2d_nonblocking(&hh);
        let vis = special_visibility_rep(&g).map_err(|e| e.to_string())?;
        artifacts.push(Artifact::Graph(GraphFile { graph: g.clone(), part: Some(part.clone()) }));
        artifacts.push(Artifact::Visibility(vis.clone()));
        artifacts.push(Artifact::Grid2D(if i % 2 == 0 { build_gor2d(&vis) } else { nb.clone() }));
        artifacts.push(Artifact::Grid3D(if i % 2 == 0 {
            build_gor3d(&g)
        } else {
            build_gor3d_nonblocking(&g, &part).map_err(|e| e.to_string())?
        }));
        if i < 2 {
            let report = check_reduction(&g, &part, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            let guards = report.optimum.map(|s| s.guards).unwrap_or_default();
            artifacts.push(Artifact::Polygon(report.polygon));
            artifacts.push(Artifact::Guards(guards));
        }
    }
    ensure(artifacts.len() == 20, || format!("built {} artifacts", artifacts.len()))?;
    for (k, a) in artifacts.iter().enumerate() {
        let text = io::write_artifact(a);
        let back = io::parse_artifact(&text).map_err(|e| format!("artifact {k}: {e}"))?;
        let again = io::write_artifact(&back);
        ensure(again == text, || format!("artifact {k} changed on round trip"))?;
    }
    let mut svgs: Vec<String> = artifacts.iter().map(svg::render_artifact).collect();
    for a in &artifacts {
        if let Artifact::Graph(f) = a {
            svgs.push(svg::render_graph(&f.graph));
        }
    }
    if let (Some(Artifact::Polygon(p)), Some(Artifact::Guards(gs))) = (artifacts.get(4), artifacts.get(5)) {
        svgs.push(svg::render_polygon(p, Some(gs)));
    }
    for (k, s) in svgs.iter().enumerate() {
        roxmltree::Document::parse(s).map_err(|e| format!("svg {k}: {e}"))?;
    }
    Ok(format!("20 artifacts round-trip byte-identically, {} SVGs well-formed", svgs.len()))
}

fn run(name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    match outcome {
        Ok(detail) => {
            println!("PASS {name}: {detail}");
            true
        }
        Err(detail) => {
            println!("FAIL {name}: {detail}");
            false
        }
    }
}

fn main() {
    let mut polygons = Vec::new();
    let results = [
        run("1 planar 2D blocking", planar_2d),
        run("2 arbitrary 3D blocking", arbitrary_3d),
        run("3 planar bipartite 2D non-blocking", planar_bipartite_2d),
        run("4 bipartite 3D non-blocking", bipartite_3d),
        run("5 oracle equivalence", oracle_equivalence),
        run("6 reduction identity", || reduction_identity(&mut polygons)),
        run("7 gadget invariants", || gadget_invariants(&polygons)),
        run("8 round-trip and render", round_trip_and_render),
    ];
    let passed = results.iter().filter(|&&r| r).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
