//! Staircase guarding of orthogonal pixel polygons.
//!
//! A guard at cell `g` sees cell `p` when a path of edge-adjacent interior
//! cells joins them and is monotone in both coordinates. For a planar
//! bipartite graph, [`build_sguard_polygon`] thickens a non-blocking 2D
//! grid-obstacle representation into a polygon whose minimum guard count is
//! `2|E|` plus the domination number.
//!
//! Each vertex bar is extended by one end cell past its last channel, and
//! each edge channel carries two spirals: a left one curling upward and a
//! right one curling downward. A spiral's tail cell is visible only from the
//! short run of cells before it, which sees nothing else of interest, so
//! every spiral costs exactly one guard. Placing that guard at the spiral's
//! outer corner covers everything except the end cells.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::domination::{first_undominated, min_dominating_set};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::monotone::{monotone_path_exists, reachable_sets, ObstacleGrid};
use crate::obstacle::{build_gor2d_nonblocking, GridObstacleRep2D};
use crate::visibility::hh_visibility_rep;

/// Cell coordinates `(x, y)`, `y` pointing up.
pub type Cell = (usize, usize);

pub const DEFAULT_RESOLUTION: usize = 8;
/// Resolutions tried by [`build_sguard_polygon_auto`] stop here.
pub const MAX_RESOLUTION: usize = 64;
/// Default branch-and-bound node budget.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpiralSide {
    Left,
    Right,
}

/// A spiral attached to the channel of edge `(a, b)`, `a` on side A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spiral {
    pub edge: (usize, usize),
    pub side: SpiralSide,
    pub tail: Cell,
    /// Outer corner; a guard here covers the whole spiral.
    pub cross: Cell,
    /// Cells from which the tail is visible, corner first, tail excluded.
    pub threshold: Vec<Cell>,
}

impl Spiral {
    fn template(edge: (usize, usize), side: SpiralSide, c: usize, h: usize) -> Spiral {
        let cells = spiral_cells(side, c, h);
        Spiral { edge, side, tail: cells[9], cross: cells[6], threshold: cells[6..9].to_vec() }
    }

    /// All cells from the neck next to the channel to the tail.
    pub fn cells(&self) -> Vec<Cell> {
        let (tx, ty) = self.tail;
        match self.side {
            SpiralSide::Left => spiral_cells(self.side, tx + 2, ty - 2),
            SpiralSide::Right => spiral_cells(self.side, tx - 2, ty + 2),
        }
    }

    /// Channel cell the neck attaches to.
    pub fn attachment(&self) -> Cell {
        let (tx, ty) = self.tail;
        match self.side {
            SpiralSide::Left => (tx + 2, ty - 2),
            SpiralSide::Right => (tx - 2, ty + 2),
        }
    }
}

/// Neck (4), leg (3), turn (2), tail (1) for a channel at column `c`,
/// attached at row `h`. The right spiral is the left one rotated by 180°.
fn spiral_cells(side: SpiralSide, c: usize, h: usize) -> Vec<Cell> {
    let rel: [(i64, i64); 10] = [(-1, 0), (-2, 0), (-3, 0), (-4, 0), (-4, 1), (-4, 2), (-4, 3), (-3, 3), (-2, 3), (-2, 2)];
    let s = if side == SpiralSide::Left { 1 } else { -1 };
    rel.iter().map(|&(dx, dy)| ((c as i64 + s * dx) as usize, (h as i64 + s * dy) as usize)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoPolygon {
    pub resolution: usize,
    pub width: usize,
    pub height: usize,
    interior: FixedBitSet,
    /// End cell of each vertex; empty for polygons without a source graph.
    pub end_pixels: Vec<Cell>,
    pub spirals: Vec<Spiral>,
}

impl OrthoPolygon {
    pub fn new(resolution: usize, width: usize, height: usize) -> Self {
        OrthoPolygon {
            resolution,
            width,
            height,
            interior: FixedBitSet::with_capacity(width * height),
            end_pixels: Vec::new(),
            spirals: Vec::new(),
        }
    }

    fn index(&self, (x, y): Cell) -> usize {
        y * self.width + x
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.0 < self.width && c.1 < self.height && self.interior[self.index(c)]
    }

    pub fn set_interior(&mut self, c: Cell, inside: bool) {
        let i = self.index(c);
        self.interior.set(i, inside);
    }

    /// Interior cells in lexicographic `(x, y)` order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = self.interior.ones().map(|i| (i % self.width, i / self.width)).collect();
        out.sort_unstable();
        out
    }

    pub fn cell_count(&self) -> usize {
        self.interior.count_ones(..)
    }

    /// Whether this polygon came with a gadget index, so that cell-centre
    /// guards are known to be as good as arbitrary point guards.
    pub fn has_gadgets(&self) -> bool {
        !self.end_pixels.is_empty()
    }

    /// The graph encoded by the gadget index.
    pub fn source_graph(&self) -> Result<Graph> {
        let edges: Vec<_> = self.spirals.iter().map(|s| s.edge).collect();
        Graph::new(self.end_pixels.len(), &edges)
    }

    /// Interior is edge-connected.
    pub fn is_connected(&self) -> bool {
        let cells = self.cells();
        let Some(&start) = cells.first() else { return true };
        let mut seen = FixedBitSet::with_capacity(self.width * self.height);
        let mut stack = vec![start];
        seen.insert(self.index(start));
        let mut count = 0;
        while let Some((x, y)) = stack.pop() {
            count += 1;
            for (dx, dy) in [(1i64, 0i64), (-1, 0), (0, 1), (0, -1)] {
                let (nx, ny) = (x as i64 + dx, y as i64 + dy);
                if nx < 0 || ny < 0 {
                    continue;
                }
                let q = (nx as usize, ny as usize);
                if self.contains(q) && !seen.put(self.index(q)) {
                    stack.push(q);
                }
            }
        }
        count == cells.len()
    }
}

/// Cells as a grid with no vertex points, so monotone sweeps apply.
struct CellGrid<'a> {
    poly: &'a OrthoPolygon,
    points: Vec<Cell>,
}

impl ObstacleGrid for CellGrid<'_> {
    fn dims(&self) -> Vec<usize> {
        vec![self.poly.width, self.poly.height]
    }
    fn is_free_index(&self, index: usize) -> bool {
        self.poly.interior[index]
    }
    fn vertex_count(&self) -> usize {
        self.points.len()
    }
    fn vertex_coords(&self, v: usize) -> Vec<usize> {
        vec![self.points[v].0, self.points[v].1]
    }
    fn blocking(&self) -> bool {
        false
    }
}

/// Whether a staircase inside the polygon joins `c1` and `c2`.
pub fn staircase_visible(p: &OrthoPolygon, c1: Cell, c2: Cell) -> Result<bool> {
    for c in [c1, c2] {
        if !p.contains(c) {
            return Err(Error::CellOutside(c.0 as i64, c.1 as i64));
        }
    }
    if c1 == c2 {
        return Ok(true);
    }
    monotone_path_exists(&CellGrid { poly: p, points: vec![c1, c2] }, 0, 1)
}

/// Staircase-visible cells of each candidate cell.
#[derive(Clone, Debug)]
pub struct CoverageMap {
    /// Interior cells; bit `i` of a coverage set refers to `cells[i]`.
    pub cells: Vec<Cell>,
    /// Candidate guard cells, as indices into `cells`.
    pub candidates: Vec<usize>,
    /// Coverage of each candidate, parallel to `candidates`.
    pub cover: Vec<FixedBitSet>,
}

impl CoverageMap {
    pub fn cell_index(&self, c: Cell) -> Option<usize> {
        self.cells.binary_search(&c).ok()
    }

    /// Candidates whose coverage contains `cell`.
    pub fn coverers(&self, cell: usize) -> Vec<usize> {
        (0..self.candidates.len()).filter(|&i| self.cover[i][cell]).collect()
    }
}

/// Coverage of every interior cell, without pruning.
pub fn coverage_map_full(p: &OrthoPolygon) -> CoverageMap {
    let cells = p.cells();
    let cover = coverage_of(p, &cells, &cells);
    CoverageMap { candidates: (0..cells.len()).collect(), cells, cover }
}

fn coverage_of(p: &OrthoPolygon, cells: &[Cell], guards: &[Cell]) -> Vec<FixedBitSet> {
    let grid = CellGrid { poly: p, points: Vec::new() };
    let sources: Vec<Vec<usize>> = guards.iter().map(|&(x, y)| vec![x, y]).collect();
    reachable_sets(&grid, &sources)
        .into_iter()
        .map(|linear| {
            let mut set = FixedBitSet::with_capacity(cells.len());
            for (i, &c) in cells.iter().enumerate() {
                if linear[p.index(c)] {
                    set.insert(i);
                }
            }
            set
        })
        .collect()
}

/// Coverage map with dominated candidates removed: a candidate is dropped
/// when another covers a strict superset, or the same set and comes first.
pub fn coverage_map(p: &OrthoPolygon) -> CoverageMap {
    prune_dominated(coverage_map_full(p))
}

pub fn prune_dominated(map: CoverageMap) -> CoverageMap {
    let k = map.candidates.len();
    let sizes: Vec<usize> = map.cover.iter().map(|s| s.count_ones(..)).collect();
    // larger sets first, so a dominator is always examined before the set it dominates
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(sizes[i]), map.candidates[i]));
    let mut kept: Vec<usize> = Vec::new();
    for &i in &order {
        if !kept.iter().any(|&j| map.cover[i].is_subset(&map.cover[j])) {
            kept.push(i);
        }
    }
    kept.sort_by_key(|&i| map.candidates[i]);
    CoverageMap {
        candidates: kept.iter().map(|&i| map.candidates[i]).collect(),
        cover: kept.iter().map(|&i| map.cover[i].clone()).collect(),
        cells: map.cells,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardSolution {
    pub guards: Vec<Cell>,
    /// Coverage of each guard over [`OrthoPolygon::cells`] indices.
    pub coverage: Vec<FixedBitSet>,
    /// Set when the polygon has no gadget index, so the optimum is only
    /// known to be optimal among cell-centre guards.
    pub cell_restricted: bool,
}

impl GuardSolution {
    pub fn size(&self) -> usize {
        self.guards.len()
    }

    pub fn covers_all(&self, p: &OrthoPolygon) -> bool {
        let mut union = FixedBitSet::with_capacity(p.cell_count());
        for c in &self.coverage {
            union.union_with(c);
        }
        union.count_ones(..) == p.cell_count()
    }
}

/// Exact minimum guard set by branch-and-bound over the pruned coverage
/// map. Fails with the best known interval once `budget` search nodes
/// have been expanded.
pub fn min_sguards_exact(p: &OrthoPolygon, budget: u64) -> Result<GuardSolution> {
    let map = coverage_map(p);
    let chosen = solve_set_cover(&map.cover, map.cells.len(), budget)?;
    let mut picks: Vec<usize> = chosen.into_iter().map(|i| map.candidates[i]).collect();
    picks.sort_unstable();
    let guards: Vec<Cell> = picks.iter().map(|&i| map.cells[i]).collect();
    let coverage = picks
        .iter()
        .map(|&c| map.cover[map.candidates.binary_search(&c).unwrap()].clone())
        .collect();
    Ok(GuardSolution { guards, coverage, cell_restricted: !p.has_gadgets() })
}

/// Smallest family of `sets` covering `0..universe`, as indices.
pub fn solve_set_cover(sets: &[FixedBitSet], universe: usize, budget: u64) -> Result<Vec<usize>> {
    let mut coverers: Vec<Vec<usize>> = vec![Vec::new(); universe];
    for (i, s) in sets.iter().enumerate() {
        for e in s.ones() {
            coverers[e].push(i);
        }
    }
    if let Some(e) = coverers.iter().position(Vec::is_empty) {
        return Err(Error::Invalid(format!("cell {e} is visible from no candidate")));
    }
    let sizes: Vec<usize> = sets.iter().map(|s| s.count_ones(..)).collect();
    for list in &mut coverers {
        list.sort_by_key(|&i| (std::cmp::Reverse(sizes[i]), i));
    }
    let mut by_rarity: Vec<usize> = (0..universe).collect();
    by_rarity.sort_by_key(|&e| (coverers[e].len(), e));

    let mut solver = Solver {
        sets,
        coverers,
        by_rarity,
        max_size: sizes.iter().copied().max().unwrap_or(1).max(1),
        best: greedy_cover(sets, universe),
        nodes: 0,
        budget,
    };
    let empty = FixedBitSet::with_capacity(universe);
    let root_lower = solver.lower_bound(&empty);
    let mut chosen = Vec::new();
    if solver.search(&empty, &mut chosen).is_err() {
        return Err(Error::BudgetExceeded { lower: root_lower, upper: solver.best.len() });
    }
    Ok(solver.best)
}

fn greedy_cover(sets: &[FixedBitSet], universe: usize) -> Vec<usize> {
    let mut covered = FixedBitSet::with_capacity(universe);
    let mut picks = Vec::new();
    while covered.count_ones(..) < universe {
        let (best, _) = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.difference(&covered).count()))
            .max_by_key(|&(i, gain)| (gain, std::cmp::Reverse(i)))
            .expect("some set covers each element");
        covered.union_with(&sets[best]);
        picks.push(best);
    }
    picks
}

struct Solver<'a> {
    sets: &'a [FixedBitSet],
    coverers: Vec<Vec<usize>>,
    by_rarity: Vec<usize>,
    max_size: usize,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

struct OutOfBudget;

impl Solver<'_> {
    /// Larger of the counting bound and a packing of uncovered elements
    /// whose coverer lists are pairwise disjoint.
    fn lower_bound(&self, covered: &FixedBitSet) -> usize {
        let uncovered = covered.len() - covered.count_ones(..);
        let counting = uncovered.div_ceil(self.max_size);
        let mut used = FixedBitSet::with_capacity(self.sets.len());
        let mut packing = 0;
        for &e in &self.by_rarity {
            if covered[e] || self.coverers[e].iter().any(|&c| used[c]) {
                continue;
            }
            packing += 1;
            for &c in &self.coverers[e] {
                used.insert(c);
            }
        }
        counting.max(packing)
    }

    fn search(&mut self, covered: &FixedBitSet, chosen: &mut Vec<usize>) -> Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OutOfBudget);
        }
        let Some(&e) = self.by_rarity.iter().filter(|&&e| !covered[e]).min_by_key(|&&e| {
            (self.coverers[e].iter().filter(|&&c| !self.sets[c].is_subset(covered)).count(), e)
        }) else {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return Ok(());
        };
        if chosen.len() + self.lower_bound(covered) >= self.best.len() {
            return Ok(());
        }
        for c in self.coverers[e].clone() {
            let mut next = covered.clone();
            next.union_with(&self.sets[c]);
            chosen.push(c);
            self.search(&next, chosen)?;
            chosen.pop();
        }
        Ok(())
    }
}

/// Builds the guarding polygon for the non-blocking representation `rep`
/// of `g` at resolution `r` sub-cells per grid unit.
pub fn build_sguard_polygon(rep: &GridObstacleRep2D, g: &Graph, part: &Bipartition, r: usize) -> Result<OrthoPolygon> {
    part.validate(g)?;
    if rep.blocking || rep.vertex_points.len() != g.n() {
        return Err(Error::Invalid("expected a non-blocking representation of the graph".into()));
    }
    let in_a = part.a_mask(g.n());
    let free = |x: usize, y: usize| x < rep.width && y < rep.height && !rep.is_obstacle(x, y);

    // bars: maximal free horizontal runs through each vertex point
    let mut bars = Vec::with_capacity(g.n());
    for (v, &(x, y)) in rep.vertex_points.iter().enumerate() {
        let mut x1 = x;
        while x1 > 0 && free(x1 - 1, y) {
            x1 -= 1;
        }
        let mut x2 = x;
        while free(x2 + 1, y) {
            x2 += 1;
        }
        if (in_a[v] && x != x2) || (!in_a[v] && x != x1) {
            return Err(Error::Invalid(format!("vertex {v} is not at the end of its bar")));
        }
        bars.push((x1, x2, y));
    }
    let owner = |x: usize, y: usize| bars.iter().position(|&(x1, x2, by)| by == y && x1 <= x && x <= x2);

    // channels: maximal free vertical runs
    let mut channels: Vec<(usize, usize, usize, usize, usize)> = Vec::new();
    for x in 0..rep.width {
        let mut y = 0;
        while y < rep.height {
            if !(free(x, y) && free(x, y + 1)) {
                y += 1;
                continue;
            }
            let y0 = y;
            while free(x, y + 1) {
                y += 1;
            }
            let (Some(b), Some(a)) = (owner(x, y0), owner(x, y)) else {
                return Err(Error::Invalid(format!("vertical run at column {x} does not join two bars")));
            };
            if !in_a[a] || in_a[b] || !g.has_edge(a, b) {
                return Err(Error::Invalid(format!("vertical run at column {x} is not an edge from B up to A")));
            }
            channels.push((a, b, x, y0, y));
        }
    }
    channels.sort_by_key(|&(a, b, ..)| (a.min(b), a.max(b)));
    let found: Vec<(usize, usize)> = channels.iter().map(|&(a, b, ..)| (a.min(b), a.max(b))).collect();
    if found != g.edges() {
        return Err(Error::Invalid("channels do not match the edges of the graph".into()));
    }

    let mut poly = OrthoPolygon::new(r, r * rep.width, r * rep.height);
    for y in 0..rep.height {
        for x in 0..rep.width {
            if !free(x, y) {
                continue;
            }
            poly.set_interior((r * x, r * y), true);
            if free(x + 1, y) {
                for k in 1..r {
                    poly.set_interior((r * x + k, r * y), true);
                }
            }
            if free(x, y + 1) {
                for k in 1..r {
                    poly.set_interior((r * x, r * y + k), true);
                }
            }
        }
    }

    for (v, &(x1, x2, y)) in bars.iter().enumerate() {
        let (end, attach) = if in_a[v] {
            ((r * x2 + 1, r * y), (r * x2, r * y))
        } else {
            ((r * x1 - 1, r * y), (r * x1, r * y))
        };
        place_gadget(&mut poly, &[end], attach)?;
        poly.end_pixels.push(end);
    }
    for &(a, b, x, y0, _) in &channels {
        let (c, h) = (r * x, r * y0 + r);
        for side in [SpiralSide::Left, SpiralSide::Right] {
            if (side == SpiralSide::Left && c < 6) || h < 6 {
                return Err(Error::Clearance(r));
            }
            let spiral = Spiral::template((a, b), side, c, h);
            place_gadget(&mut poly, &spiral.cells(), (c, h))?;
            poly.spirals.push(spiral);
        }
    }
    Ok(poly)
}

/// Adds `cells` (the first of which touches `attach`) if no cell of it or
/// its 8-neighbourhood is already occupied, apart from the attachment
/// itself and the attachment's own corridor.
fn place_gadget(poly: &mut OrthoPolygon, cells: &[Cell], attach: Cell) -> Result<()> {
    let r = poly.resolution;
    let near_attach = |q: (i64, i64)| (q.0 - attach.0 as i64).abs() + (q.1 - attach.1 as i64).abs() <= 1;
    for (i, &(x, y)) in cells.iter().enumerate() {
        if x == 0 || y == 0 || x + 1 >= poly.width || y + 1 >= poly.height || poly.contains((x, y)) {
            return Err(Error::Clearance(r));
        }
        for dx in -1i64..=1 {
            for dy in -1i64..=1 {
                let q = (x as i64 + dx, y as i64 + dy);
                let qc = (q.0 as usize, q.1 as usize);
                if !poly.contains(qc) || cells.contains(&qc) {
                    continue;
                }
                if i == 0 && near_attach(q) {
                    continue;
                }
                return Err(Error::Clearance(r));
            }
        }
    }
    for &c in cells {
        poly.set_interior(c, true);
    }
    Ok(())
}

/// [`build_sguard_polygon`] starting at the default resolution and
/// doubling it while gadgets do not fit.
pub fn build_sguard_polygon_auto(rep: &GridObstacleRep2D, g: &Graph, part: &Bipartition) -> Result<OrthoPolygon> {
    let mut r = DEFAULT_RESOLUTION;
    loop {
        match build_sguard_polygon(rep, g, part, r) {
            Err(Error::Clearance(_)) if r < MAX_RESOLUTION => r *= 2,
            other => return other,
        }
    }
}

/// Guards at the end cells of `d` plus the outer corner of every spiral.
pub fn guards_from_dominating_set(p: &OrthoPolygon, d: &[usize]) -> Result<GuardSolution> {
    let g = p.source_graph()?;
    if let Some(&v) = d.iter().find(|&&v| v >= g.n()) {
        return Err(Error::UnknownVertex(v));
    }
    if let Some(v) = first_undominated(&g, d) {
        return Err(Error::NotDominating(v));
    }
    let mut guards: Vec<Cell> = d.iter().map(|&v| p.end_pixels[v]).collect();
    guards.extend(p.spirals.iter().map(|s| s.cross));
    let cells = p.cells();
    let coverage = coverage_of(p, &cells, &guards);
    let sol = GuardSolution { guards, coverage, cell_restricted: false };
    if !sol.covers_all(p) {
        return Err(Error::Invalid("corner and end-cell guards leave cells unguarded".into()));
    }
    Ok(sol)
}

/// Spirals whose tail shares a coverer with an end cell or another tail.
pub fn tail_isolation_violations(p: &OrthoPolygon, full: &CoverageMap) -> Vec<usize> {
    let idx = |c: Cell| full.cell_index(c).expect("gadget cell is interior");
    let ends: Vec<usize> = p.end_pixels.iter().map(|&c| idx(c)).collect();
    let tails: Vec<usize> = p.spirals.iter().map(|s| idx(s.tail)).collect();
    (0..tails.len())
        .filter(|&s| {
            full.coverers(tails[s]).into_iter().any(|c| {
                let cov = &full.cover[c];
                ends.iter().any(|&e| cov[e]) || tails.iter().enumerate().any(|(t, &e)| t != s && cov[e])
            })
        })
        .collect()
}

/// Outcome of comparing the guard optimum with `2|E| + γ`.
#[derive(Clone, Debug)]
pub struct ReductionReport {
    pub edges: usize,
    pub dominating_set: Vec<usize>,
    /// Optimal guards, or `None` when the solver ran out of budget.
    pub optimum: Option<GuardSolution>,
    pub bounds: (usize, usize),
    pub polygon: OrthoPolygon,
}

impl ReductionReport {
    pub fn expected(&self) -> usize {
        2 * self.edges + self.dominating_set.len()
    }

    /// `Some(true)` when the identity holds, `None` when inconclusive.
    pub fn holds(&self) -> Option<bool> {
        self.optimum.as_ref().map(|s| s.size() == self.expected())
    }
}

impl fmt::Display for ReductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, k) = (self.edges, self.dominating_set.len());
        match &self.optimum {
            Some(s) if s.size() == self.expected() => write!(f, "m*={} = 2*{m}+{k}", s.size()),
            Some(s) => write!(f, "m*={} != 2*{m}+{k} = {}", s.size(), self.expected()),
            None => write!(f, "m* in [{}, {}], 2*{m}+{k} = {} (inconclusive)", self.bounds.0, self.bounds.1, self.expected()),
        }
    }
}

/// Builds the polygon for `g`, solves it exactly, and compares with the
/// domination number.
pub fn check_reduction(g: &Graph, part: &Bipartition, budget: u64) -> Result<ReductionReport> {
    let hh = hh_visibility_rep(g, part)?;
    let rep = build_gor2d_nonblocking(&hh);
    let polygon = build_sguard_polygon_auto(&rep, g, part)?;
    let dominating_set = min_dominating_set(g);
    let (optimum, bounds) = match min_sguards_exact(&polygon, budget) {
        Ok(s) => {
            let k = s.size();
            (Some(s), (k, k))
        }
        Err(Error::BudgetExceeded { lower, upper }) => (None, (lower, upper)),
        Err(e) => return Err(e),
    };
    Ok(ReductionReport { edges: g.m(), dominating_set, optimum, bounds, polygon })
}
