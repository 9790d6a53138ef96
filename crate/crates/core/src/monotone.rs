//! Monotone-path reachability in grid-obstacle representations.
//!
//! A path is a sequence of unit lattice steps through free points whose
//! coordinates are each non-decreasing or each non-increasing. In blocking
//! mode a path may not pass through the point of a third vertex.

use fixedbitset::FixedBitSet;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::obstacle::{GridObstacleRep2D, GridObstacleRep3D};

/// Read access shared by the 2D and 3D representations. Axis 0 varies
/// fastest in the linear index.
pub trait ObstacleGrid: Sync {
    fn dims(&self) -> Vec<usize>;
    fn is_free_index(&self, index: usize) -> bool;
    fn vertex_count(&self) -> usize;
    fn vertex_coords(&self, v: usize) -> Vec<usize>;
    fn blocking(&self) -> bool;
}

impl ObstacleGrid for GridObstacleRep2D {
    fn dims(&self) -> Vec<usize> {
        vec![self.width, self.height]
    }
    fn is_free_index(&self, index: usize) -> bool {
        self.free_bits()[index]
    }
    fn vertex_count(&self) -> usize {
        self.vertex_points.len()
    }
    fn vertex_coords(&self, v: usize) -> Vec<usize> {
        let (x, y) = self.vertex_points[v];
        vec![x, y]
    }
    fn blocking(&self) -> bool {
        self.blocking
    }
}

impl ObstacleGrid for GridObstacleRep3D {
    fn dims(&self) -> Vec<usize> {
        let (x, y, z) = self.extents;
        vec![x, y, z]
    }
    fn is_free_index(&self, index: usize) -> bool {
        self.free_bits()[index]
    }
    fn vertex_count(&self) -> usize {
        self.vertex_points.len()
    }
    fn vertex_coords(&self, v: usize) -> Vec<usize> {
        let (x, y, z) = self.vertex_points[v];
        vec![x, y, z]
    }
    fn blocking(&self) -> bool {
        self.blocking
    }
}

const NO_VERTEX: u32 = u32::MAX;

/// Dense lookup tables for repeated sweeps over one representation.
struct Space<'a, G: ObstacleGrid + ?Sized> {
    grid: &'a G,
    dims: Vec<usize>,
    strides: Vec<usize>,
    vertex_at: Vec<u32>,
    points: Vec<Vec<usize>>,
    blocking: bool,
}

impl<'a, G: ObstacleGrid + ?Sized> Space<'a, G> {
    fn new(grid: &'a G) -> Self {
        let dims = grid.dims();
        let mut strides = vec![1usize; dims.len()];
        for k in 1..dims.len() {
            strides[k] = strides[k - 1] * dims[k - 1];
        }
        let cells: usize = dims.iter().product();
        let mut vertex_at = vec![NO_VERTEX; cells];
        let points: Vec<Vec<usize>> = (0..grid.vertex_count()).map(|v| grid.vertex_coords(v)).collect();
        for (v, p) in points.iter().enumerate() {
            let idx: usize = p.iter().zip(&strides).map(|(c, s)| c * s).sum();
            vertex_at[idx] = v as u32;
        }
        Space { grid, dims, strides, vertex_at, points, blocking: grid.blocking() }
    }

    /// Reachability from `src` over the box of side lengths `lens` extending
    /// from `src` in direction `signs`. Local index has axis 0 fastest.
    fn sweep(&self, src: &[usize], signs: &[i64], lens: &[usize]) -> Vec<bool> {
        let d = self.dims.len();
        let total: usize = lens.iter().product();
        let mut lstride = vec![1usize; d];
        for k in 1..d {
            lstride[k] = lstride[k - 1] * lens[k - 1];
        }
        let mut reach = vec![false; total];
        let mut through = vec![false; total];
        let mut local = vec![0usize; d];
        for l in 0..total {
            let gidx: usize = (0..d)
                .map(|k| (src[k] as i64 + signs[k] * local[k] as i64) as usize * self.strides[k])
                .sum();
            if self.grid.is_free_index(gidx) {
                let r = l == 0 || (0..d).any(|k| local[k] > 0 && through[l - lstride[k]]);
                reach[l] = r;
                through[l] = r && (l == 0 || !self.blocking || self.vertex_at[gidx] == NO_VERTEX);
            }
            for k in 0..d {
                local[k] += 1;
                if local[k] < lens[k] {
                    break;
                }
                local[k] = 0;
            }
        }
        reach
    }

    /// Local index of `p` in the box swept from `src`, if `p` lies in it.
    fn local_index(&self, src: &[usize], signs: &[i64], lens: &[usize], p: &[usize]) -> Option<usize> {
        let mut idx = 0usize;
        let mut stride = 1usize;
        for k in 0..src.len() {
            let off = (p[k] as i64 - src[k] as i64) * signs[k];
            if off < 0 || off as usize >= lens[k] {
                return None;
            }
            idx += off as usize * stride;
            stride *= lens[k];
        }
        Some(idx)
    }

    fn orthants(&self) -> Vec<Vec<i64>> {
        let d = self.dims.len();
        (0..1usize << d).map(|mask| (0..d).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect()).collect()
    }

    fn lens_to_boundary(&self, src: &[usize], signs: &[i64]) -> Vec<usize> {
        (0..src.len()).map(|k| if signs[k] > 0 { self.dims[k] - src[k] } else { src[k] + 1 }).collect()
    }

    /// Vertices other than `v` reachable from the point of `v` along paths
    /// of the given orthant.
    fn reached_from(&self, v: usize, signs: &[i64]) -> Vec<usize> {
        let src = &self.points[v];
        let lens = self.lens_to_boundary(src, signs);
        let reach = self.sweep(src, signs, &lens);
        (0..self.points.len())
            .filter(|&t| t != v)
            .filter(|&t| self.local_index(src, signs, &lens, &self.points[t]).is_some_and(|i| reach[i]))
            .collect()
    }
}

fn check_query<G: ObstacleGrid + ?Sized>(rep: &G, u: usize, w: usize) -> Result<()> {
    let n = rep.vertex_count();
    for x in [u, w] {
        if x >= n {
            return Err(Error::UnknownVertex(x));
        }
    }
    if u == w {
        return Err(Error::Invalid("source and target coincide".into()));
    }
    Ok(())
}

/// Whether a monotone path joins the points of `u` and `w`. An axis on
/// which both points agree stays constant along the path.
pub fn monotone_path_exists<G: ObstacleGrid + ?Sized>(rep: &G, u: usize, w: usize) -> Result<bool> {
    check_query(rep, u, w)?;
    let space = Space::new(rep);
    let (pu, pw) = (&space.points[u], &space.points[w]);
    let signs: Vec<i64> = pu.iter().zip(pw).map(|(a, b)| if b >= a { 1 } else { -1 }).collect();
    let lens: Vec<usize> = pu.iter().zip(pw).map(|(a, b)| a.abs_diff(*b) + 1).collect();
    let reach = space.sweep(pu, &signs, &lens);
    Ok(reach[reach.len() - 1])
}

pub fn monotone_path_exists_2d(rep: &GridObstacleRep2D, u: usize, w: usize) -> Result<bool> {
    monotone_path_exists(rep, u, w)
}

pub fn monotone_path_exists_3d(rep: &GridObstacleRep3D, u: usize, w: usize) -> Result<bool> {
    monotone_path_exists(rep, u, w)
}

/// The graph whose edges are exactly the vertex pairs joined by a monotone
/// path. One sweep per source and orthant.
pub fn induced_graph<G: ObstacleGrid + ?Sized>(rep: &G) -> Graph {
    let space = Space::new(rep);
    let n = rep.vertex_count();
    let per_source = |s: usize| -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for signs in space.orthants() {
            out.extend(space.reached_from(s, &signs).into_iter().filter(|&t| t > s).map(|t| (s, t)));
        }
        out
    };
    #[cfg(feature = "parallel")]
    let edges: Vec<(usize, usize)> = (0..n).into_par_iter().flat_map_iter(per_source).collect();
    #[cfg(not(feature = "parallel"))]
    let edges: Vec<(usize, usize)> = (0..n).flat_map(per_source).collect();
    Graph::new(n, &edges).expect("induced pairs are simple")
}

/// Largest bounding box `enumerate_monotone_paths` accepts, per dimension.
pub const ENUMERATION_AREA_2D: usize = 64;
pub const ENUMERATION_AREA_3D: usize = 256;

/// Exhaustive depth-first search over monotone step sequences from `u`
/// towards `w`. Meant as an independent check of [`monotone_path_exists`]
/// on small boxes; fails once more than `cap` paths have been explored.
pub fn enumerate_monotone_paths<G: ObstacleGrid + ?Sized>(rep: &G, u: usize, w: usize, cap: usize) -> Result<bool> {
    check_query(rep, u, w)?;
    let dims = rep.dims();
    let from = rep.vertex_coords(u);
    let to = rep.vertex_coords(w);
    let area: usize = from.iter().zip(&to).map(|(a, b)| a.abs_diff(*b) + 1).product();
    let limit = if dims.len() == 2 { ENUMERATION_AREA_2D } else { ENUMERATION_AREA_3D };
    if area > limit {
        return Err(Error::Invalid(format!("bounding box of {area} points is too large to enumerate")));
    }
    let others: Vec<Vec<usize>> =
        (0..rep.vertex_count()).filter(|&x| x != u && x != w).map(|x| rep.vertex_coords(x)).collect();
    let index = |p: &[usize]| {
        let mut idx = 0;
        for k in (0..p.len()).rev() {
            idx = idx * dims[k] + p[k];
        }
        idx
    };
    let passable = |p: &[usize]| rep.is_free_index(index(p)) && !(rep.blocking() && others.iter().any(|o| o == p));

    struct Search<'s> {
        to: &'s [usize],
        explored: usize,
        cap: usize,
    }
    fn dfs(s: &mut Search, p: &mut Vec<usize>, passable: &dyn Fn(&[usize]) -> bool) -> Result<bool> {
        if p.as_slice() == s.to {
            s.explored += 1;
            return Ok(true);
        }
        let mut moved = false;
        for k in 0..p.len() {
            if p[k] == s.to[k] {
                continue;
            }
            let old = p[k];
            p[k] = if s.to[k] > old { old + 1 } else { old - 1 };
            if passable(p) {
                moved = true;
                if dfs(s, p, passable)? {
                    p[k] = old;
                    return Ok(true);
                }
            }
            p[k] = old;
        }
        if !moved {
            s.explored += 1;
            if s.explored > s.cap {
                return Err(Error::CapExceeded(s.cap));
            }
        }
        Ok(false)
    }
    let mut search = Search { to: &to, explored: 0, cap };
    let mut p = from.clone();
    dfs(&mut search, &mut p, &passable)
}

/// Differences between the graph a representation induces and the graph it
/// is meant to represent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    /// Edges of the graph with no monotone path.
    pub missing: Vec<(usize, usize)>,
    /// Monotone paths between non-adjacent vertices.
    pub spurious: Vec<(usize, usize)>,
}

impl Report {
    pub fn is_valid(&self) -> bool {
        self.missing.is_empty() && self.spurious.is_empty()
    }
}

pub fn verify_representation<G: ObstacleGrid + ?Sized>(rep: &G, g: &Graph) -> Result<Report> {
    if rep.vertex_count() != g.n() {
        return Err(Error::Invalid(format!(
            "representation has {} vertices, graph has {}",
            rep.vertex_count(),
            g.n()
        )));
    }
    let induced = induced_graph(rep);
    let missing = g.edges().iter().copied().filter(|&(u, v)| !induced.has_edge(u, v)).collect();
    let spurious = induced.edges().iter().copied().filter(|&(u, v)| !g.has_edge(u, v)).collect();
    Ok(Report { missing, spurious })
}

/// Vertices whose point some monotone path between two other vertices runs
/// through. Empty means every vertex point terminates the paths reaching it.
pub fn through_traffic<G: ObstacleGrid + ?Sized>(rep: &G) -> Vec<usize> {
    let space = Space::new(rep);
    let check = |v: usize| -> bool {
        space.orthants().iter().any(|signs| {
            let back: Vec<i64> = signs.iter().map(|s| -s).collect();
            !space.reached_from(v, signs).is_empty() && !space.reached_from(v, &back).is_empty()
        })
    };
    (0..rep.vertex_count()).filter(|&v| check(v)).collect()
}

/// For each source point, every point a monotone path from it reaches, as
/// a bitset over linear indices. Vertex points play no role here.
pub fn reachable_sets<G: ObstacleGrid + ?Sized>(rep: &G, sources: &[Vec<usize>]) -> Vec<FixedBitSet> {
    let space = Space::new(rep);
    let one = |src: &Vec<usize>| {
        let cells: usize = space.dims.iter().product();
        let mut set = FixedBitSet::with_capacity(cells);
        for signs in space.orthants() {
            let lens = space.lens_to_boundary(src, &signs);
            let reach = space.sweep(src, &signs, &lens);
            let mut local = vec![0usize; src.len()];
            for r in reach {
                if r {
                    let gidx: usize = (0..src.len())
                        .map(|k| (src[k] as i64 + signs[k] * local[k] as i64) as usize * space.strides[k])
                        .sum();
                    set.insert(gidx);
                }
                for k in 0..src.len() {
                    local[k] += 1;
                    if local[k] < lens[k] {
                        break;
                    }
                    local[k] = 0;
                }
            }
        }
        set
    };
    #[cfg(feature = "parallel")]
    return sources.par_iter().map(one).collect();
    #[cfg(not(feature = "parallel"))]
    return sources.iter().map(one).collect();
}

/// Free points as a bitset, for callers that compare obstacle sets.
pub fn free_points<G: ObstacleGrid + ?Sized>(rep: &G) -> FixedBitSet {
    let cells: usize = rep.dims().iter().product();
    let mut set = FixedBitSet::with_capacity(cells);
    for i in 0..cells {
        set.set(i, rep.is_free_index(i));
    }
    set
}
