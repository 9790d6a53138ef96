//! Straight-line grid drawings with no horizontal edges, their upward
//! orientation, and the split drawing where every vertex is doubled into an
//! in-port and an out-port on one row.
//!
//! The drawing follows the shift method on a canonical ordering. Inputs are
//! first augmented to a triangulation: components are joined, cut vertices
//! are patched with chords, and every non-triangular face receives a new
//! vertex adjacent to its whole boundary. Everything added is flagged
//! auxiliary. A final shear `y' = a*y + b*x` removes the horizontal base edge.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::geometry::{first_conflict, Point};
use crate::graph::Graph;
use crate::planarity::{trace_faces, PlanarEmbedding};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DrawnEdge {
    pub u: usize,
    pub v: usize,
    pub auxiliary: bool,
}

/// Planar straight-line drawing on the integer grid.
///
/// Vertices `0..original_n` are the input vertices; higher indices are
/// auxiliary face vertices introduced by triangulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraightLineDrawing {
    pub positions: Vec<Point>,
    pub original_n: usize,
    pub edges: Vec<DrawnEdge>,
    pub width: i64,
    pub height: i64,
}

impl StraightLineDrawing {
    pub fn segments(&self) -> Vec<(Point, Point)> {
        self.edges.iter().map(|e| (self.positions[e.u], self.positions[e.v])).collect()
    }

    pub fn is_planar(&self) -> bool {
        first_conflict(&self.segments()).is_none()
    }

    pub fn has_horizontal_edge(&self) -> bool {
        self.edges.iter().any(|e| self.positions[e.u].1 == self.positions[e.v].1)
    }
}

/// Measured bound on drawing height: `height <= HEIGHT_FACTOR * n` over all
/// inputs including auxiliary vertices (at most `3n` vertices after
/// triangulation, shift-method height `< 3n`, shear adds the width `< 6n`).
pub const HEIGHT_FACTOR: i64 = 9;

struct Augmented {
    rotation: Vec<Vec<usize>>,
    edges: Vec<DrawnEdge>,
    present: HashSet<(usize, usize)>,
}

impl Augmented {
    fn add_edge(&mut self, u: usize, v: usize, auxiliary: bool) {
        self.present.insert((u.min(v), u.max(v)));
        self.edges.push(DrawnEdge { u, v, auxiliary });
    }

    fn insert_after(&mut self, v: usize, anchor: usize, x: usize) {
        let r = &mut self.rotation[v];
        let i = r.iter().position(|&y| y == anchor).unwrap();
        r.insert(i + 1, x);
    }

    fn insert_before(&mut self, v: usize, anchor: usize, x: usize) {
        let r = &mut self.rotation[v];
        let i = r.iter().position(|&y| y == anchor).unwrap();
        r.insert(i, x);
    }
}

/// Draws a planar graph with straight lines on an integer grid so that no
/// edge is horizontal.
pub fn straight_line_draw(g: &Graph, emb: &PlanarEmbedding) -> Result<StraightLineDrawing> {
    if !emb.satisfies_euler(g) || emb.rotation().len() != g.n() {
        return Err(Error::NonPlanar);
    }
    let n = g.n();
    let mut aug = Augmented {
        rotation: emb.rotation().to_vec(),
        edges: Vec::new(),
        present: HashSet::new(),
    };
    for &(u, v) in g.edges() {
        aug.add_edge(u, v, false);
    }
    if n <= 2 {
        if n == 2 && !g.has_edge(0, 1) {
            aug.add_edge(0, 1, true);
        }
        let positions = [(0, 0), (1, 1)][..n].to_vec();
        let size = (n as i64 - 1).max(0);
        return Ok(StraightLineDrawing {
            positions,
            original_n: n,
            edges: aug.edges,
            width: size,
            height: size,
        });
    }
    connect_components(&mut aug);
    biconnect(&mut aug);
    triangulate(&mut aug);
    let order = canonical_order(&aug.rotation)?;
    let mut positions = shift_method(&aug.rotation, &order);
    shear(&mut positions, &aug.edges);
    let width = positions.iter().map(|p| p.0).max().unwrap();
    let height = positions.iter().map(|p| p.1).max().unwrap();
    Ok(StraightLineDrawing { positions, original_n: n, edges: aug.edges, width, height })
}

fn connect_components(aug: &mut Augmented) {
    let n = aug.rotation.len();
    let mut comp = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = reps.len();
        reps.push(s);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &aug.rotation[u] {
                if comp[w] == usize::MAX {
                    comp[w] = comp[s];
                    stack.push(w);
                }
            }
        }
    }
    for &r in &reps[1..] {
        // separate plane components can be joined through any pair of angles
        aug.rotation[reps[0]].push(r);
        aug.rotation[r].push(reps[0]);
        aug.add_edge(reps[0], r, true);
    }
}

/// Adds chords `u-w` across angles `u, v, w` at cut vertices `v` until the
/// graph is biconnected.
fn biconnect(aug: &mut Augmented) {
    let n = aug.rotation.len();
    'outer: loop {
        for v in 0..n {
            let d = aug.rotation[v].len();
            if d < 2 {
                continue;
            }
            let comp = components_without(&aug.rotation, v);
            for i in 0..d {
                let u = aug.rotation[v][i];
                let w = aug.rotation[v][(i + 1) % d];
                if comp[u] != comp[w] {
                    // new face u -> v -> w -> u
                    aug.insert_after(w, v, u);
                    aug.insert_before(u, v, w);
                    aug.add_edge(u, w, true);
                    continue 'outer;
                }
            }
        }
        break;
    }
}

fn components_without(rotation: &[Vec<usize>], cut: usize) -> Vec<usize> {
    let n = rotation.len();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if s == cut || comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &rotation[u] {
                if w != cut && comp[w] == usize::MAX {
                    comp[w] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Stars every face longer than a triangle from a new vertex.
fn triangulate(aug: &mut Augmented) {
    for face in trace_faces(&aug.rotation) {
        let k = face.len();
        if k <= 3 {
            continue;
        }
        let d = aug.rotation.len();
        aug.rotation.push(face.iter().rev().copied().collect());
        for i in 0..k {
            let prev = face[(i + k - 1) % k];
            aug.insert_after(face[i], prev, d);
            aug.add_edge(face[i], d, true);
        }
    }
}

/// Canonical ordering of a triangulation, computed by repeatedly peeling a
/// chord-free contour vertex. Returns `v1, v2, v3, ..., vn`.
fn canonical_order(rotation: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = rotation.len();
    let outer = &trace_faces(rotation)[0];
    if outer.len() != 3 {
        return Err(Error::Invalid("augmentation did not triangulate".into()));
    }
    let (v1, v2, vn) = (outer[0], outer[1], outer[2]);
    let mut removed = vec![false; n];
    let mut contour = vec![v1, vn, v2];
    let mut peeled = Vec::with_capacity(n);
    let adjacent = |a: usize, b: usize| rotation[a].contains(&b);
    while contour.len() > 2 {
        let on_contour: HashSet<usize> = contour.iter().copied().collect();
        let i = (1..contour.len() - 1)
            .find(|&i| {
                let v = contour[i];
                rotation[v].iter().filter(|w| on_contour.contains(w)).count() == 2
            })
            .ok_or_else(|| Error::Invalid("no chord-free contour vertex".into()))?;
        let v = contour[i];
        let (a, b) = (contour[i - 1], contour[i + 1]);
        debug_assert!(adjacent(v, a) && adjacent(v, b));
        let r = &rotation[v];
        let d = r.len();
        let ia = r.iter().position(|&x| x == a).unwrap();
        let walk = |step: usize| {
            let mut out = Vec::new();
            let mut j = (ia + step) % d;
            while r[j] != b {
                out.push(r[j]);
                j = (j + step) % d;
            }
            out
        };
        let forward = walk(1);
        let backward = walk(d - 1);
        let fresh = |s: &[usize]| s.iter().all(|&x| !removed[x]);
        let interval = match (fresh(&forward), fresh(&backward)) {
            (true, true) if forward.is_empty() => backward,
            (true, _) => forward,
            (false, true) => backward,
            (false, false) => return Err(Error::Invalid("contour neighbours not contiguous".into())),
        };
        removed[v] = true;
        peeled.push(v);
        contour.splice(i..=i, interval);
    }
    let mut order = vec![v1, v2];
    order.extend(peeled.into_iter().rev());
    Ok(order)
}

/// Shift method on a canonical ordering.
fn shift_method(rotation: &[Vec<usize>], order: &[usize]) -> Vec<Point> {
    let n = rotation.len();
    let mut pos = vec![(0i64, 0i64); n];
    let mut dependents: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let (v1, v2, v3) = (order[0], order[1], order[2]);
    pos[v1] = (0, 0);
    pos[v2] = (2, 0);
    pos[v3] = (1, 1);
    let mut contour = vec![v1, v3, v2];
    for &vk in &order[3..] {
        let touching: Vec<usize> =
            (0..contour.len()).filter(|&i| rotation[vk].contains(&contour[i])).collect();
        let p = touching[0];
        let q = *touching.last().unwrap();
        debug_assert_eq!(touching.len(), q - p + 1, "canonical neighbours are contiguous");
        for &w in &contour[p + 1..q] {
            for &u in &dependents[w] {
                pos[u].0 += 1;
            }
        }
        for &w in &contour[q..] {
            for &u in &dependents[w] {
                pos[u].0 += 2;
            }
        }
        let (xp, yp) = pos[contour[p]];
        let (xq, yq) = pos[contour[q]];
        pos[vk] = ((xp + xq + yq - yp) / 2, (xq - xp + yp + yq) / 2);
        let mut deps = vec![vk];
        for &w in &contour[p + 1..q] {
            deps.extend(dependents[w].iter().copied());
        }
        dependents[vk] = deps;
        contour.splice(p + 1..q, [vk]);
    }
    pos
}

/// Applies the flattest shear `y' = a*y + b*x` that leaves no edge
/// horizontal, then translates to the origin.
fn shear(pos: &mut [Point], edges: &[DrawnEdge]) {
    let mut best: Option<(i64, i64, i64)> = None;
    for a in 1..=4i64 {
        for b in [1i64, -1, 2, -2, 3, -3] {
            let y = |p: Point| a * p.1 + b * p.0;
            if edges.iter().any(|e| y(pos[e.u]) == y(pos[e.v])) {
                continue;
            }
            let lo = pos.iter().map(|&p| y(p)).min().unwrap();
            let hi = pos.iter().map(|&p| y(p)).max().unwrap();
            if best.is_none_or(|(_, _, h)| hi - lo < h) {
                best = Some((a, b, hi - lo));
            }
        }
    }
    let (a, b) = match best {
        Some((a, b, _)) => (a, b),
        // every small shear collides; fall back to one that separates all x
        None => (pos.iter().map(|p| p.0).max().unwrap() + 1, 1),
    };
    for p in pos.iter_mut() {
        p.1 = a * p.1 + b * p.0;
    }
    let lo = pos.iter().map(|p| p.1).min().unwrap();
    for p in pos.iter_mut() {
        p.1 -= lo;
    }
}

/// Directs every edge from its lower to its higher endpoint.
pub fn orient_upward(d: &StraightLineDrawing) -> Result<Vec<DrawnEdge>> {
    d.edges
        .iter()
        .map(|e| {
            let (yu, yv) = (d.positions[e.u].1, d.positions[e.v].1);
            match yu.cmp(&yv) {
                std::cmp::Ordering::Less => Ok(*e),
                std::cmp::Ordering::Greater => Ok(DrawnEdge { u: e.v, v: e.u, auxiliary: e.auxiliary }),
                std::cmp::Ordering::Equal => Err(Error::HorizontalEdge(e.u, e.v)),
            }
        })
        .collect()
}

/// An upward edge of the split drawing: leaves the out-port of `from`,
/// bends once in the row above it, and enters the in-port of `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitEdge {
    pub from: usize,
    pub to: usize,
    pub bend: Point,
    pub auxiliary: bool,
}

/// Drawing where each vertex `v` is a horizontal pair `left[v]`, `right[v]`
/// on row `2 * y(v)`; x-coordinates are scaled by `scale`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitDrawing {
    pub left: Vec<Point>,
    pub right: Vec<Point>,
    pub edges: Vec<SplitEdge>,
    pub original_n: usize,
    pub scale: i64,
    pub height: i64,
}

impl SplitDrawing {
    pub fn polyline(&self, e: &SplitEdge) -> [Point; 3] {
        [self.right[e.from], e.bend, self.left[e.to]]
    }

    /// All drawn segments: the port pair of each vertex and both pieces of
    /// each edge. Out-edges of one vertex share their first piece.
    pub fn segments(&self) -> Vec<(Point, Point)> {
        let mut out: Vec<_> = self.left.iter().zip(&self.right).map(|(&l, &r)| (l, r)).collect();
        for e in &self.edges {
            let [a, b, c] = self.polyline(e);
            out.push((a, b));
            out.push((b, c));
        }
        out
    }

    pub fn is_planar(&self) -> bool {
        first_conflict(&self.segments()).is_none()
    }
}

/// Splits every vertex into an in-port and an out-port and reroutes
/// outgoing edges through a bend in the inserted row directly above.
///
/// The bend sits where the original segment crosses that row (rounded on a
/// fine x-scale). Two distinct edges crossing a half-integer row differ by
/// at least `1/(4h^2)` there, and the rounding moves a point by less than
/// half of that, so every left-to-right order survives and the split
/// drawing stays planar.
pub fn split_vertices(d: &StraightLineDrawing) -> Result<SplitDrawing> {
    let upward = orient_upward(d)?;
    let scale = 8 * (d.height + 1) * (d.height + 1);
    let left: Vec<Point> = d.positions.iter().map(|&(x, y)| (scale * x, 2 * y)).collect();
    let right: Vec<Point> = left.iter().map(|&(x, y)| (x + 1, y)).collect();
    let edges = upward
        .iter()
        .map(|e| {
            let (xu, yu) = d.positions[e.u];
            let (xv, yv) = d.positions[e.v];
            let num = scale * (2 * xu * (yv - yu) + (xv - xu));
            let den = 2 * (yv - yu);
            SplitEdge {
                from: e.u,
                to: e.v,
                bend: (round_div(num, den), 2 * yu + 1),
                auxiliary: e.auxiliary,
            }
        })
        .collect();
    Ok(SplitDrawing { left, right, edges, original_n: d.original_n, scale, height: 2 * d.height })
}

fn round_div(num: i64, den: i64) -> i64 {
    debug_assert!(den > 0);
    (2 * num + den).div_euclid(2 * den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_planar;
    use crate::planarity::check_planarity;

    fn draw(g: &Graph) -> StraightLineDrawing {
        straight_line_draw(g, &check_planarity(g).unwrap()).unwrap()
    }

    fn is_acyclic(n: usize, edges: &[DrawnEdge]) -> bool {
        let mut indeg = vec![0; n];
        for e in edges {
            indeg[e.v] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(u) = stack.pop() {
            seen += 1;
            for e in edges.iter().filter(|e| e.u == u) {
                indeg[e.v] -= 1;
                if indeg[e.v] == 0 {
                    stack.push(e.v);
                }
            }
        }
        seen == n
    }

    #[test]
    fn single_vertex_at_origin() {
        let d = draw(&Graph::empty(1));
        assert_eq!(d.positions, vec![(0, 0)]);
        assert_eq!((d.width, d.height), (0, 0));
    }

    #[test]
    fn triangle_has_no_horizontal_edge() {
        let d = draw(&Graph::cycle(3));
        assert!(!d.has_horizontal_edge());
        assert!(d.is_planar());
        let up = orient_upward(&d).unwrap();
        for e in up {
            assert!(d.positions[e.u].1 < d.positions[e.v].1);
        }
    }

    #[test]
    fn single_edge_orientation_and_split() {
        let d = draw(&Graph::path(2));
        let up = orient_upward(&d).unwrap();
        assert_eq!(up.len(), 1);
        let s = split_vertices(&d).unwrap();
        let e = s.edges[0];
        let [start, _, end] = s.polyline(&e);
        assert_eq!(start, s.right[e.from]);
        assert_eq!(end, s.left[e.to]);
        assert!(s.left[e.from].1 < s.left[e.to].1);
    }

    #[test]
    fn isolated_vertex_split() {
        let s = split_vertices(&draw(&Graph::empty(1))).unwrap();
        assert_eq!(s.left[0].1, s.right[0].1);
        assert!(s.right[0].0 > s.left[0].0);
        assert!(s.edges.is_empty());
    }

    #[test]
    fn horizontal_edge_rejected() {
        let d = StraightLineDrawing {
            positions: vec![(0, 0), (1, 0)],
            original_n: 2,
            edges: vec![DrawnEdge { u: 0, v: 1, auxiliary: false }],
            width: 1,
            height: 0,
        };
        assert!(matches!(orient_upward(&d), Err(Error::HorizontalEdge(0, 1))));
    }

    #[test]
    fn random_drawings_satisfy_invariants() {
        for seed in 0..40 {
            let n = 1 + (seed as usize * 7) % 30;
            let g = random_planar(n, seed);
            let d = draw(&g);
            assert!(d.is_planar(), "seed {seed}");
            assert!(!d.has_horizontal_edge(), "seed {seed}");
            assert!(d.height <= HEIGHT_FACTOR * n as i64, "seed {seed}: {}", d.height);
            // every input edge survives and is not auxiliary
            let real: HashSet<_> = d
                .edges
                .iter()
                .filter(|e| !e.auxiliary)
                .map(|e| (e.u.min(e.v), e.u.max(e.v)))
                .collect();
            assert_eq!(real, g.edges().iter().copied().collect());
            let up = orient_upward(&d).unwrap();
            assert!(is_acyclic(d.positions.len(), &up));
            let s = split_vertices(&d).unwrap();
            assert_eq!(s.height, 2 * d.height);
            assert!(s.is_planar(), "split drawing seed {seed}");
            for e in &s.edges {
                let [a, b, c] = s.polyline(e);
                assert!(a.1 < b.1 && b.1 < c.1, "polyline is y-monotone");
            }
        }
    }

    #[test]
    fn disconnected_input_is_drawn() {
        let g = Graph::new(5, &[(0, 1), (2, 3)]).unwrap();
        let d = draw(&g);
        assert!(d.is_planar() && !d.has_horizontal_edge());
    }
}
