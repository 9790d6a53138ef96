//! Planarity testing and combinatorial embeddings.
//!
//! Each biconnected block is embedded by path addition (fragments are placed
//! into admissible faces, forced fragments first). Block rotations are then
//! concatenated at cut vertices, which keeps the embedding planar.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A rotation system: for each vertex the cyclic order of its neighbours.
///
/// Faces are traced by the rule "after dart `u -> v` comes `v -> succ_v(u)`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbedding {
    rotation: Vec<Vec<usize>>,
    outer_face: usize,
}

impl PlanarEmbedding {
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Self {
        PlanarEmbedding { rotation, outer_face: 0 }
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn into_rotation(self) -> Vec<Vec<usize>> {
        self.rotation
    }

    /// Index into [`faces`](Self::faces) of the face treated as outer.
    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    /// Neighbour following `u` in the rotation at `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        succ(&self.rotation, v, u)
    }

    /// Face boundary walks as vertex sequences (one entry per dart).
    pub fn faces(&self) -> Vec<Vec<usize>> {
        trace_faces(&self.rotation)
    }

    /// Number of faces, counting one face for each isolated vertex.
    pub fn face_count(&self) -> usize {
        let isolated = self.rotation.iter().filter(|r| r.is_empty()).count();
        self.faces().len() + isolated
    }

    /// Euler's formula summed over components, each traced with its own
    /// outer face: `n - m + f = 2c`.
    pub fn satisfies_euler(&self, g: &Graph) -> bool {
        let c = g.components().len();
        g.n() + self.face_count() == g.m() + 2 * c
    }
}

pub(crate) fn succ(rotation: &[Vec<usize>], v: usize, u: usize) -> usize {
    let r = &rotation[v];
    let i = r.iter().position(|&x| x == u).expect("dart present in rotation");
    r[(i + 1) % r.len()]
}

pub(crate) fn trace_faces(rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut faces = Vec::new();
    for u in 0..rotation.len() {
        for &v in &rotation[u] {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                face.push(a);
                let c = succ(rotation, b, a);
                a = b;
                b = c;
            }
            faces.push(face);
        }
    }
    faces
}

/// Tests planarity and returns a rotation system realizing a planar
/// embedding. Non-planar graphs are rejected with [`Error::NonPlanar`].
pub fn check_planarity(g: &Graph) -> Result<PlanarEmbedding> {
    let n = g.n();
    if g.m() > 3 * n.saturating_sub(2) && n >= 3 {
        return Err(Error::NonPlanar);
    }
    let mut rotation = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() == 2 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<_> = block.iter().map(|&(u, v)| (local[&u], local[&v])).collect();
        let faces = embed_biconnected(verts.len(), &edges)?;
        let rot = rotation_from_faces(verts.len(), &faces);
        for (i, r) in rot.into_iter().enumerate() {
            rotation[verts[i]].extend(r.into_iter().map(|x| verts[x]));
        }
    }
    let emb = PlanarEmbedding::from_rotation(rotation);
    debug_assert!(emb.satisfies_euler(g));
    Ok(emb)
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for &w in s.g.neighbors(u) {
            if s.disc[w] == 0 {
                s.stack.push((u, w));
                dfs(s, w, u);
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if w != parent && s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }
    let mut s = State {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..g.n() {
        if s.disc[v] == 0 {
            dfs(&mut s, v, usize::MAX);
        }
    }
    s.blocks
}

fn rotation_from_faces(n: usize, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut next: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let prev = f[(i + k - 1) % k];
            next[f[i]].insert(prev, f[(i + 1) % k]);
        }
    }
    next.iter()
        .map(|m| {
            let Some(&start) = m.keys().min() else { return Vec::new() };
            let mut order = vec![start];
            let mut cur = m[&start];
            while cur != start {
                order.push(cur);
                cur = m[&cur];
            }
            order
        })
        .collect()
}

enum Fragment {
    Chord(usize, usize),
    Bridge { vertices: Vec<usize>, attachments: Vec<usize> },
}

impl Fragment {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Bridge { attachments, .. } => attachments.clone(),
        }
    }
}

/// Embeds a biconnected graph with at least three vertices, returning
/// consistently oriented face cycles.
fn embed_biconnected(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<usize>>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let key = |u: usize, v: usize| (u.min(v), u.max(v));

    let cycle = find_cycle(&adj);
    let mut in_h = vec![false; n];
    let mut h_edges = HashSet::new();
    for i in 0..cycle.len() {
        in_h[cycle[i]] = true;
        h_edges.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect::<Vec<_>>()];

    while h_edges.len() < edges.len() {
        let fragments = fragments(&adj, &in_h, &h_edges);
        let mut choice = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| att.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return Err(Error::NonPlanar),
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ if choice.is_none() => choice = Some((fi, admissible[0])),
                _ => {}
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment remains");
        let path = match &fragments[fi] {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Bridge { vertices, attachments } => {
                fragment_path(&adj, vertices, attachments[0], &in_h)
            }
        };
        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    if faces.len() + n != edges.len() + 2 {
        return Err(Error::NonPlanar);
    }
    Ok(faces)
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    // every edge of a biconnected block lies on a cycle: route around edge (0, t)
    let t = adj[0][0];
    let mut parent = vec![usize::MAX; adj.len()];
    parent[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if (u == 0 && w == t) || parent[w] != usize::MAX {
                continue;
            }
            parent[w] = u;
            if w == t {
                let mut cycle = vec![t];
                let mut x = t;
                while x != 0 {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
            queue.push_back(w);
        }
    }
    unreachable!("biconnected block with three or more vertices has a cycle")
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        for &v in &adj[u] {
            if u < v && in_h[u] && in_h[v] && !h_edges.contains(&(u, v)) {
                out.push(Fragment::Chord(u, v));
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut vertices = vec![s];
        let mut attachments = Vec::new();
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if in_h[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    vertices.push(w);
                    queue.push_back(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment::Bridge { vertices, attachments });
    }
    out
}

/// Path through a bridge fragment from attachment `start` to another
/// attachment, with all interior vertices inside the fragment.
fn fragment_path(adj: &[Vec<usize>], vertices: &[usize], start: usize, in_h: &[bool]) -> Vec<usize> {
    let inside: HashSet<usize> = vertices.iter().copied().collect();
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &w in &adj[start] {
        if inside.contains(&w) && !parent.contains_key(&w) {
            parent.insert(w, start);
            queue.push_back(w);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if in_h[y] && y != start {
                let mut path = vec![y, x];
                let mut cur = x;
                while parent[&cur] != start {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.push(start);
                path.reverse();
                return path;
            }
            if inside.contains(&y) && !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a biconnected graph has two attachments")
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let u = path[0];
    let w = *path.last().unwrap();
    let i = face.iter().position(|&x| x == u).unwrap();
    let j = face.iter().position(|&x| x == w).unwrap();
    let interior = &path[1..path.len() - 1];
    let arc = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut t = from;
        while t != to {
            t = (t + 1) % k;
            out.push(face[t]);
        }
        out
    };
    let mut f1 = arc(i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = arc(j, i);
    f2.extend(interior.iter());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_has_four_faces() {
        let g = Graph::complete(4);
        let e = check_planarity(&g).unwrap();
        assert_eq!(e.face_count(), 4);
        assert!(e.satisfies_euler(&g));
    }

    #[test]
    fn k5_and_k33_rejected() {
        assert!(matches!(check_planarity(&Graph::complete(5)), Err(Error::NonPlanar)));
        assert!(matches!(
            check_planarity(&Graph::complete_bipartite(3, 3)),
            Err(Error::NonPlanar)
        ));
    }

    #[test]
    fn c4_has_two_faces() {
        let e = check_planarity(&Graph::cycle(4)).unwrap();
        assert_eq!(e.face_count(), 2);
    }

    #[test]
    fn trees_and_isolated_vertices() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let e = check_planarity(&g).unwrap();
        assert!(e.satisfies_euler(&g));
        let e1 = check_planarity(&Graph::empty(1)).unwrap();
        assert_eq!(e1.face_count(), 1);
    }

    #[test]
    fn cut_vertex_splicing() {
        // two triangles sharing vertex 2, plus a pendant edge
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)]).unwrap();
        let e = check_planarity(&g).unwrap();
        assert!(e.satisfies_euler(&g));
    }

    #[test]
    fn petersen_is_not_planar() {
        let edges = [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ];
        let g = Graph::new(10, &edges).unwrap();
        assert!(matches!(check_planarity(&g), Err(Error::NonPlanar)));
    }
}
