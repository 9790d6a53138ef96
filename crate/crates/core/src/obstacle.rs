//! Grid-obstacle representations in two and three dimensions.
//!
//! Every grid point is either an obstacle or free. Each vertex owns one
//! free point; two vertices are adjacent when a monotone lattice path
//! joins their points (see [`crate::monotone`]).
//!
//! All builders double the drawing coordinates (`q -> 2q`) so that distinct
//! drawing elements are never lattice neighbours, and keep a one-point
//! obstacle margin around the drawing.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::visibility::{Bar, HHVisibilityRep, Segment, VisibilityRep};

/// Both 2D extents are at most `EXTENT_FACTOR_2D * n` for `n >= 1`.
///
/// Width is `2w + 1` for a representation of width `w <= m + 3n`, which is
/// below `6n - 5` once `m <= 3n - 6`. Height is `2h + 1` with `h <= n`.
pub const EXTENT_FACTOR_2D: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridObstacleRep2D {
    pub width: usize,
    pub height: usize,
    free: FixedBitSet,
    pub vertex_points: Vec<(usize, usize)>,
    pub blocking: bool,
}

impl GridObstacleRep2D {
    /// A grid in which every point is an obstacle.
    pub fn filled(width: usize, height: usize, blocking: bool) -> Self {
        GridObstacleRep2D { width, height, free: FixedBitSet::with_capacity(width * height), vertex_points: Vec::new(), blocking }
    }

    pub fn index(&self, x: usize, y: usize) -> usize {
        debug_assert!(x < self.width && y < self.height);
        y * self.width + x
    }

    pub fn in_bounds(&self, x: i64, y: i64) -> bool {
        x >= 0 && y >= 0 && (x as usize) < self.width && (y as usize) < self.height
    }

    pub fn is_obstacle(&self, x: usize, y: usize) -> bool {
        !self.free[self.index(x, y)]
    }

    pub fn set_obstacle(&mut self, x: usize, y: usize, obstacle: bool) {
        let i = self.index(x, y);
        self.free.set(i, !obstacle);
    }

    pub fn free_count(&self) -> usize {
        self.free.count_ones(..)
    }

    pub fn obstacle_count(&self) -> usize {
        self.width * self.height - self.free_count()
    }

    pub(crate) fn free_bits(&self) -> &FixedBitSet {
        &self.free
    }

    /// Vertex points are in range, pairwise distinct, and free.
    pub fn validate(&self) -> Result<()> {
        for (v, &(x, y)) in self.vertex_points.iter().enumerate() {
            if x >= self.width || y >= self.height {
                return Err(Error::Invalid(format!("vertex {v} lies outside the grid")));
            }
            if self.is_obstacle(x, y) {
                return Err(Error::Invalid(format!("vertex {v} sits on an obstacle")));
            }
        }
        let mut pts = self.vertex_points.clone();
        pts.sort_unstable();
        if pts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("two vertices share a grid point".into()));
        }
        Ok(())
    }

    fn free_line(&mut self, from: (usize, usize), to: (usize, usize)) {
        let (x0, x1) = (from.0.min(to.0), from.0.max(to.0));
        let (y0, y1) = (from.1.min(to.1), from.1.max(to.1));
        for y in y0..=y1 {
            for x in x0..=x1 {
                self.set_obstacle(x, y, false);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridObstacleRep3D {
    pub extents: (usize, usize, usize),
    free: FixedBitSet,
    pub vertex_points: Vec<(usize, usize, usize)>,
    pub blocking: bool,
}

impl GridObstacleRep3D {
    pub fn filled(extents: (usize, usize, usize), blocking: bool) -> Self {
        let cells = extents.0 * extents.1 * extents.2;
        GridObstacleRep3D { extents, free: FixedBitSet::with_capacity(cells), vertex_points: Vec::new(), blocking }
    }

    pub fn index(&self, x: usize, y: usize, z: usize) -> usize {
        let (w, h, _) = self.extents;
        (z * h + y) * w + x
    }

    pub fn is_obstacle(&self, x: usize, y: usize, z: usize) -> bool {
        !self.free[self.index(x, y, z)]
    }

    pub fn set_obstacle(&mut self, x: usize, y: usize, z: usize, obstacle: bool) {
        let i = self.index(x, y, z);
        self.free.set(i, !obstacle);
    }

    pub fn free_count(&self) -> usize {
        self.free.count_ones(..)
    }

    pub(crate) fn free_bits(&self) -> &FixedBitSet {
        &self.free
    }

    pub fn validate(&self) -> Result<()> {
        let (w, h, d) = self.extents;
        for (v, &(x, y, z)) in self.vertex_points.iter().enumerate() {
            if x >= w || y >= h || z >= d {
                return Err(Error::Invalid(format!("vertex {v} lies outside the grid")));
            }
            if self.is_obstacle(x, y, z) {
                return Err(Error::Invalid(format!("vertex {v} sits on an obstacle")));
            }
        }
        let mut pts = self.vertex_points.clone();
        pts.sort_unstable();
        if pts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("two vertices share a grid point".into()));
        }
        Ok(())
    }

    /// Frees the axis-parallel polyline through `pts`.
    fn free_polyline(&mut self, pts: &[(usize, usize, usize)]) {
        for w in pts.windows(2) {
            let (a, b) = (w[0], w[1]);
            for x in a.0.min(b.0)..=a.0.max(b.0) {
                for y in a.1.min(b.1)..=a.1.max(b.1) {
                    for z in a.2.min(b.2)..=a.2.max(b.2) {
                        self.set_obstacle(x, y, z, false);
                    }
                }
            }
        }
    }
}

/// Scales every coordinate of a visibility representation by two.
pub fn double_grid(rep: &VisibilityRep) -> VisibilityRep {
    let bars = rep
        .bars
        .iter()
        .map(|b| Bar { y: 2 * b.y, x_start: 2 * b.x_start, x_mid: 2 * b.x_mid, x_end: 2 * b.x_end })
        .collect();
    let segments = rep
        .segments
        .iter()
        .map(|s| Segment { x: 2 * s.x, y_bot: 2 * s.y_bot, y_top: 2 * s.y_top, ..*s })
        .collect();
    VisibilityRep { bars, segments }
}

/// Frees the doubled drawing of `rep` inside a one-point margin.
fn corridor_grid(rep: &VisibilityRep, blocking: bool) -> GridObstacleRep2D {
    let doubled = double_grid(rep);
    let width = 2 * rep.width().max(1) as usize + 1;
    let height = 2 * rep.height().max(1) as usize + 1;
    let mut grid = GridObstacleRep2D::filled(width, height, blocking);
    let at = |x: i64, y: i64| ((x + 1) as usize, (y + 1) as usize);
    for b in &doubled.bars {
        grid.free_line(at(b.x_start, b.y), at(b.x_end, b.y));
    }
    for s in &doubled.segments {
        grid.free_line(at(s.x, s.y_bot), at(s.x, s.y_top));
    }
    grid
}

/// Blocking representation from a split-bar visibility representation.
/// Each vertex sits between the two halves of its bar.
pub fn build_gor2d(rep: &VisibilityRep) -> GridObstacleRep2D {
    let mut grid = corridor_grid(rep, true);
    grid.vertex_points = rep.bars.iter().map(|b| ((2 * b.x_mid + 2) as usize, (2 * b.y + 1) as usize)).collect();
    grid
}

/// Non-blocking representation from a bipartite visibility representation.
/// A-vertices sit at the right end of their bar, B-vertices at the left end.
pub fn build_gor2d_nonblocking(hh: &HHVisibilityRep) -> GridObstacleRep2D {
    let mut grid = corridor_grid(&hh.rep, false);
    grid.vertex_points = (0..hh.rep.bars.len())
        .map(|v| ((2 * hh.point_column(v) + 1) as usize, (2 * hh.rep.bars[v].y + 1) as usize))
        .collect();
    grid
}

/// Maps a pre-doubling coordinate `1..=n` of the blocking 3D construction
/// onto the grid. Coordinate 0 is never used, so the margin replaces it.
pub fn blocking_3d_coord(q: usize) -> usize {
    2 * q - 1
}

/// Blocking 3D representation of an arbitrary graph. Vertex `i` (1-based)
/// sits at `(i,i,i)` and edge `(i,j)`, `i < j`, runs
/// `(i,i,i)-(j,i,i)-(j,i,j)-(j,j,j)`.
pub fn build_gor3d(g: &Graph) -> GridObstacleRep3D {
    let n = g.n();
    let side = 2 * n.max(1) + 1;
    let mut grid = GridObstacleRep3D::filled((side, side, side), true);
    let c = blocking_3d_coord;
    grid.vertex_points = (1..=n).map(|i| (c(i), c(i), c(i))).collect();
    for &(u, v) in g.edges() {
        let (i, j) = (u + 1, v + 1);
        let path = [(i, i, i), (j, i, i), (j, i, j), (j, j, j)];
        let mapped: Vec<_> = path.iter().map(|&(x, y, z)| (c(x), c(y), c(z))).collect();
        grid.free_polyline(&mapped);
    }
    for &(x, y, z) in &grid.vertex_points.clone() {
        grid.set_obstacle(x, y, z, false);
    }
    grid
}

/// Pre-doubling route of edge `(u, v)` in [`build_gor3d`], 1-based.
pub fn gor3d_edge_route(u: usize, v: usize) -> [(usize, usize, usize); 4] {
    let (i, j) = (u.min(v) + 1, u.max(v) + 1);
    [(i, i, i), (j, i, i), (j, i, j), (j, j, j)]
}

/// Non-blocking 3D representation of a bipartite graph. The `i`-th
/// A-vertex (1-based) sits at `(0,i,0)`, the `j`-th B-vertex at `(j,0,1)`,
/// and edge `(a_i, b_j)` runs `(0,i,0)-(j,i,0)-(j,i,1)-(j,0,1)`.
pub fn build_gor3d_nonblocking(g: &Graph, part: &Bipartition) -> Result<GridObstacleRep3D> {
    part.validate(g)?;
    let (na, nb) = (part.side_a.len(), part.side_b.len());
    let extents = (2 * nb + 3, 2 * na + 3, 5);
    let mut grid = GridObstacleRep3D::filled(extents, false);
    let d = |q: usize| 2 * q + 1;
    let mut rank = vec![0usize; g.n()];
    for (i, &a) in part.side_a.iter().enumerate() {
        rank[a] = i + 1;
    }
    for (j, &b) in part.side_b.iter().enumerate() {
        rank[b] = j + 1;
    }
    let in_a = part.a_mask(g.n());
    grid.vertex_points = (0..g.n())
        .map(|v| if in_a[v] { (d(0), d(rank[v]), d(0)) } else { (d(rank[v]), d(0), d(1)) })
        .collect();
    for &(u, v) in g.edges() {
        let (a, b) = if in_a[u] { (u, v) } else { (v, u) };
        let (i, j) = (rank[a], rank[b]);
        let path = [(0, i, 0), (j, i, 0), (j, i, 1), (j, 0, 1)];
        let mapped: Vec<_> = path.iter().map(|&(x, y, z)| (d(x), d(y), d(z))).collect();
        grid.free_polyline(&mapped);
    }
    for &(x, y, z) in &grid.vertex_points.clone() {
        grid.set_obstacle(x, y, z, false);
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::visibility::special_visibility_rep;

    #[test]
    fn doubling_scales_bars() {
        let rep = VisibilityRep { bars: vec![Bar { y: 1, x_start: 0, x_mid: 1, x_end: 2 }], segments: vec![] };
        let d = double_grid(&rep);
        assert_eq!(d.bars[0], Bar { y: 2, x_start: 0, x_mid: 2, x_end: 4 });
    }

    #[test]
    fn single_vertex_is_lone_free_point_on_its_bar() {
        let g = Graph::empty(1);
        let grid = build_gor2d(&special_visibility_rep(&g).unwrap());
        grid.validate().unwrap();
        assert_eq!(grid.free_count(), 5);
        let (x, y) = grid.vertex_points[0];
        assert_eq!((x, y), (4, 1));
        assert!(grid.is_obstacle(x, y - 1) && grid.is_obstacle(x, y + 1));
    }

    #[test]
    fn doubled_elements_never_touch() {
        // a free point adjacent to two different drawing elements would
        // have to belong to both; checked by scanning all free neighbours
        for seed in 0..20 {
            let g = crate::generate::random_planar(12, seed);
            let rep = special_visibility_rep(&g).unwrap();
            let grid = build_gor2d(&rep);
            let d = double_grid(&rep);
            let owner = |x: i64, y: i64| -> Vec<usize> {
                let (x, y) = (x - 1, y - 1);
                let mut out = Vec::new();
                for (v, b) in d.bars.iter().enumerate() {
                    if b.y == y && b.x_start <= x && x <= b.x_end {
                        out.push(v);
                    }
                }
                for (i, s) in d.segments.iter().enumerate() {
                    if s.x == x && s.y_bot <= y && y <= s.y_top {
                        out.push(d.bars.len() + i);
                    }
                }
                out
            };
            let incident = |a: usize, b: usize| {
                let nb = d.bars.len();
                match (a < nb, b < nb) {
                    (true, true) => a == b,
                    (true, false) => d.segments[b - nb].lower == a || d.segments[b - nb].upper == a,
                    (false, true) => d.segments[a - nb].lower == b || d.segments[a - nb].upper == b,
                    (false, false) => a == b,
                }
            };
            for y in 0..grid.height as i64 {
                for x in 0..grid.width as i64 - 1 {
                    for (dx, dy) in [(1, 0), (0, 1)] {
                        let (x2, y2) = (x + dx, y + dy);
                        if !grid.in_bounds(x2, y2) || grid.is_obstacle(x as usize, y as usize) {
                            continue;
                        }
                        if grid.is_obstacle(x2 as usize, y2 as usize) {
                            continue;
                        }
                        let (oa, ob) = (owner(x, y), owner(x2, y2));
                        assert!(oa.iter().any(|&a| ob.iter().any(|&b| incident(a, b))), "seed {seed} ({x},{y})");
                    }
                }
            }
        }
    }

    #[test]
    fn extents_within_linear_bound() {
        for seed in 0..30 {
            let n = 1 + seed as usize;
            let g = crate::generate::random_planar(n, seed);
            let grid = build_gor2d(&special_visibility_rep(&g).unwrap());
            assert!(grid.width <= EXTENT_FACTOR_2D * n && grid.height <= EXTENT_FACTOR_2D * n);
        }
    }

    #[test]
    fn k4_on_the_diagonal() {
        let grid = build_gor3d(&Graph::complete(4));
        grid.validate().unwrap();
        assert_eq!(grid.extents, (9, 9, 9));
        for i in 1..=4 {
            let c = blocking_3d_coord(i);
            assert_eq!(grid.vertex_points[i - 1], (c, c, c));
        }
        assert_eq!(gor3d_edge_route(0, 2), [(1, 1, 1), (3, 1, 1), (3, 1, 3), (3, 3, 3)]);
        for (x, y, z) in [(3, 1, 1), (3, 1, 2), (3, 2, 3)] {
            let c = blocking_3d_coord;
            assert!(!grid.is_obstacle(c(x), c(y), c(z)));
        }
    }

    #[test]
    fn k23_nonblocking_layout() {
        let g = Graph::complete_bipartite(2, 3);
        let part = g.bipartition().unwrap();
        let grid = build_gor3d_nonblocking(&g, &part).unwrap();
        grid.validate().unwrap();
        for &a in &part.side_a {
            let (x, _, z) = grid.vertex_points[a];
            assert_eq!((x, z), (1, 1));
        }
        for &b in &part.side_b {
            let (_, y, z) = grid.vertex_points[b];
            assert_eq!((y, z), (1, 3));
        }
    }

    #[test]
    fn nonbipartite_rejected_in_3d() {
        let g = Graph::cycle(3);
        let part = Bipartition { side_a: vec![0], side_b: vec![1, 2] };
        assert!(build_gor3d_nonblocking(&g, &part).is_err());
    }
}
