//! Seeded random test instances.
//!
//! Planar graphs come from a random stacked triangulation (each new vertex is
//! dropped into a uniformly chosen triangular face and joined to its three
//! corners), followed by deletion of a random fraction of non-bridge edges
//! and a random relabelling.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Bipartition, Graph};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected planar graph on `n >= 1` vertices, deterministic in `seed`.
pub fn random_planar(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "need at least one vertex");
    let mut rng = rng(seed);
    if n <= 2 {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        return Graph::new(n, &edges).unwrap();
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        // face 0 is kept as the outer face
        let fi = rng.gen_range(1..faces.len());
        let [a, b, c] = faces.swap_remove(fi);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    let keep_fraction = rng.gen_range(0.35..1.0);
    edges.shuffle(&mut rng);
    let mut kept = edges.clone();
    for e in edges {
        if rng.gen_bool(keep_fraction) {
            continue;
        }
        let trial: Vec<_> = kept.iter().copied().filter(|&f| f != e).collect();
        if connected(n, &trial) {
            kept = trial;
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    Graph::new(n, &kept).unwrap().permuted(&perm)
}

/// Connected planar bipartite graph on `n >= 1` vertices: a random planar
/// graph restricted to the edges joining BFS layers of different parity.
pub fn random_planar_bipartite(n: usize, seed: u64) -> (Graph, Bipartition) {
    let g = random_planar(n, seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let edges: Vec<_> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| depth[u] % 2 != depth[v] % 2)
        .collect();
    let h = Graph::new(n, &edges).unwrap();
    let part = h.bipartition().expect("parity classes form a bipartition");
    (h, part)
}

/// Erdős–Rényi graph G(n, p).
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Random bipartite graph with sides `0..a` and `a..a+b`, each cross pair
/// present with probability `p`.
pub fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> (Graph, Bipartition) {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(a + b, &edges).unwrap();
    let part = Bipartition { side_a: (0..a).collect(), side_b: (a..a + b).collect() };
    (g, part)
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planarity::check_planarity;

    #[test]
    fn single_vertex() {
        let g = random_planar(1, 7);
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn planar_connected_and_deterministic() {
        for n in 1..30 {
            let g = random_planar(n, n as u64);
            assert!(g.is_connected());
            assert!(check_planarity(&g).is_ok());
            if n >= 3 {
                assert!(g.m() <= 3 * n - 6);
            }
            assert_eq!(g, random_planar(n, n as u64));
        }
    }

    #[test]
    fn bipartite_generator() {
        let (g, p) = random_planar_bipartite(2, 3);
        assert_eq!(g.edges(), &[(0, 1)]);
        p.validate(&g).unwrap();
        for n in 3..30 {
            let (g, p) = random_planar_bipartite(n, 100 + n as u64);
            assert!(g.is_connected());
            assert!(check_planarity(&g).is_ok());
            assert!(g.m() <= 2 * n - 4);
            p.validate(&g).unwrap();
            assert_eq!(p, g.bipartition().unwrap());
            assert_eq!((g.clone(), p), random_planar_bipartite(n, 100 + n as u64));
        }
    }
}
