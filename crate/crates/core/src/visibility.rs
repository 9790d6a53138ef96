//! Visibility representations: vertices as horizontal bars, edges as
//! vertical segments.
//!
//! Two constructions are provided:
//!
//! * [`special_visibility_rep`] for planar graphs, where each bar has a
//!   split column with every downward edge attached at or left of it and
//!   every upward edge strictly right of it.
//! * [`hh_visibility_rep`] for planar bipartite graphs, where A-bars sit
//!   above all B-bars and every edge runs from a B-bar up to an A-bar.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BinaryHeap, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::layout::{split_vertices, straight_line_draw, SplitDrawing};
use crate::planarity::check_planarity;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bar {
    pub y: i64,
    pub x_start: i64,
    pub x_mid: i64,
    pub x_end: i64,
}

impl Bar {
    pub fn contains_x(&self, x: i64) -> bool {
        self.x_start <= x && x <= self.x_end
    }
}

/// Vertical segment of edge `(lower, upper)` in column `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub lower: usize,
    pub upper: usize,
    pub x: i64,
    pub y_bot: i64,
    pub y_top: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisibilityRep {
    /// One bar per vertex, indexed by vertex.
    pub bars: Vec<Bar>,
    pub segments: Vec<Segment>,
}

impl VisibilityRep {
    pub fn width(&self) -> i64 {
        let bars = self.bars.iter().map(|b| b.x_end);
        let segs = self.segments.iter().map(|s| s.x);
        bars.chain(segs).max().map_or(0, |x| x + 1)
    }

    pub fn height(&self) -> i64 {
        self.bars.iter().map(|b| b.y).max().map_or(0, |y| y + 1)
    }
}

/// A bipartite visibility representation. A-vertices take the rightmost
/// point of their bar, B-vertices the leftmost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HHVisibilityRep {
    pub rep: VisibilityRep,
    pub part: Bipartition,
}

impl HHVisibilityRep {
    pub fn point_column(&self, v: usize) -> i64 {
        let bar = &self.rep.bars[v];
        if self.part.in_a(v) {
            bar.x_end
        } else {
            bar.x_start
        }
    }
}

/// Width bound: at most `m + 3n` columns, i.e. `WIDTH_FACTOR * (n + m)`.
pub const WIDTH_FACTOR: i64 = 3;

/// Builds a visibility representation of a planar graph in which every bar
/// splits into a left part carrying the downward edges and a right part
/// carrying the upward edges.
pub fn special_visibility_rep(g: &Graph) -> Result<VisibilityRep> {
    let emb = check_planarity(g)?;
    let drawing = straight_line_draw(g, &emb)?;
    let split = split_vertices(&drawing)?;
    visibility_from_split(&split)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Token {
    Edge(usize),
    Mid(usize),
    Pad(usize),
}

/// Exact rational `num / den` with `den > 0`.
#[derive(Clone, Copy, Debug)]
struct Frac {
    num: i128,
    den: i128,
}

impl Frac {
    fn new(num: i128, den: i128) -> Self {
        debug_assert!(den > 0);
        Frac { num, den }
    }

    fn cmp(&self, other: &Frac) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

/// Converts a split drawing into a visibility representation with the same
/// rows and the same left-to-right order within each row.
///
/// Every edge and every vertex port gets its own column token; the
/// left-to-right sequence on each vertex row becomes a chain of precedence
/// constraints, and columns are a topological order of those constraints.
/// Auxiliary vertices and edges are dropped first.
pub fn visibility_from_split(split: &SplitDrawing) -> Result<VisibilityRep> {
    let n = split.original_n;
    let edges: Vec<_> = split
        .edges
        .iter()
        .copied()
        .filter(|e| !e.auxiliary && e.from < n && e.to < n)
        .collect();
    let mut degree = vec![0usize; n];
    for e in &edges {
        degree[e.from] += 1;
        degree[e.to] += 1;
    }
    let rows: Vec<i64> = {
        let mut r: Vec<i64> = (0..n).filter(|&v| degree[v] > 0).map(|v| split.left[v].1).collect();
        r.sort_unstable();
        r.dedup();
        r
    };

    let mut succs: HashMap<Token, Vec<Token>> = HashMap::new();
    let mut indeg: HashMap<Token, usize> = HashMap::new();
    let mut all_tokens: Vec<Token> = (0..edges.len()).map(Token::Edge).collect();
    for v in (0..n).filter(|&v| degree[v] > 0) {
        all_tokens.extend([Token::Mid(v), Token::Pad(v)]);
    }
    for &t in &all_tokens {
        indeg.insert(t, 0);
    }
    let mut groups: HashMap<usize, Vec<Token>> = HashMap::new();

    for &row in &rows {
        enum Item {
            Vertex(usize),
            Cross(usize),
        }
        let mut items: Vec<(Frac, Item)> = Vec::new();
        for v in (0..n).filter(|&v| degree[v] > 0 && split.left[v].1 == row) {
            items.push((Frac::new(split.left[v].0 as i128, 1), Item::Vertex(v)));
        }
        for (i, e) in edges.iter().enumerate() {
            let (y0, y1) = (split.left[e.from].1, split.left[e.to].1);
            if y0 < row && row < y1 {
                let (bx, by) = e.bend;
                let (tx, ty) = split.left[e.to];
                let den = (ty - by) as i128;
                let num = bx as i128 * den + (tx - bx) as i128 * (row - by) as i128;
                items.push((Frac::new(num, den), Item::Cross(i)));
            }
        }
        items.sort_by(|a, b| a.0.cmp(&b.0));
        if items.windows(2).any(|w| w[0].0.cmp(&w[1].0) == Ordering::Equal) {
            return Err(Error::Invalid(format!("drawing elements coincide on row {row}")));
        }
        let mut sequence = Vec::new();
        for (_, item) in items {
            match item {
                Item::Cross(i) => sequence.push(Token::Edge(i)),
                Item::Vertex(v) => {
                    let group = vertex_group(split, &edges, v);
                    sequence.extend(group.iter().copied());
                    groups.insert(v, group);
                }
            }
        }
        for w in sequence.windows(2) {
            succs.entry(w[0]).or_default().push(w[1]);
            *indeg.get_mut(&w[1]).unwrap() += 1;
        }
    }

    let mut heap: BinaryHeap<Reverse<Token>> =
        indeg.iter().filter(|(_, &d)| d == 0).map(|(&t, _)| Reverse(t)).collect();
    let mut column: HashMap<Token, i64> = HashMap::new();
    while let Some(Reverse(t)) = heap.pop() {
        column.insert(t, column.len() as i64);
        for &s in succs.get(&t).map(Vec::as_slice).unwrap_or(&[]) {
            let d = indeg.get_mut(&s).unwrap();
            *d -= 1;
            if *d == 0 {
                heap.push(Reverse(s));
            }
        }
    }
    if column.len() != all_tokens.len() {
        return Err(Error::Invalid("row orders are inconsistent".into()));
    }

    let row_index: HashMap<i64, i64> = rows.iter().enumerate().map(|(i, &r)| (r, i as i64)).collect();
    let mut next_col = column.len() as i64;
    let top_row = rows.len() as i64;
    let mut bars = Vec::with_capacity(n);
    for v in 0..n {
        if degree[v] == 0 {
            // isolated vertices get a width-2 bar of their own, right of everything
            bars.push(Bar { y: top_row, x_start: next_col, x_mid: next_col + 1, x_end: next_col + 2 });
            next_col += 3;
            continue;
        }
        let cols: Vec<i64> = groups[&v].iter().map(|t| column[t]).collect();
        bars.push(Bar {
            y: row_index[&split.left[v].1],
            x_start: *cols.iter().min().unwrap(),
            x_mid: column[&Token::Mid(v)],
            x_end: *cols.iter().max().unwrap(),
        });
    }
    let segments = edges
        .iter()
        .enumerate()
        .map(|(i, e)| Segment {
            lower: e.from,
            upper: e.to,
            x: column[&Token::Edge(i)],
            y_bot: bars[e.from].y,
            y_top: bars[e.to].y,
        })
        .collect();
    Ok(VisibilityRep { bars, segments })
}

/// Tokens of one vertex on its row: incoming edges in the order they arrive
/// from below, the split column, a pad, then outgoing edges in the order
/// they leave upward.
fn vertex_group(split: &SplitDrawing, edges: &[crate::layout::SplitEdge], v: usize) -> Vec<Token> {
    let (lx, ly) = split.left[v];
    let mut incoming: Vec<(Frac, usize)> = edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.to == v)
        .map(|(i, e)| {
            let (bx, by) = e.bend;
            (Frac::new((bx - lx) as i128, (ly - by) as i128), i)
        })
        .collect();
    incoming.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut outgoing: Vec<(i64, usize)> =
        edges.iter().enumerate().filter(|(_, e)| e.from == v).map(|(i, e)| (e.bend.0, i)).collect();
    outgoing.sort_unstable();
    let mut group: Vec<Token> = incoming.into_iter().map(|(_, i)| Token::Edge(i)).collect();
    group.push(Token::Mid(v));
    group.push(Token::Pad(v));
    group.extend(outgoing.into_iter().map(|(_, i)| Token::Edge(i)));
    group
}

/// Builds a visibility representation of a planar bipartite graph with all
/// A-bars above all B-bars and every edge running from B up to A.
///
/// Per component, a spanning tree of A-diagonals (pairs of A-vertices that
/// are consecutive around a common B-vertex) is thickened into a disk; the
/// order in which its boundary meets the edges is the column order. On both
/// sides the edge sets of the vertices are non-crossing along that order, so
/// each vertex is stacked by its nesting depth.
pub fn hh_visibility_rep(g: &Graph, part: &Bipartition) -> Result<HHVisibilityRep> {
    part.validate(g)?;
    let emb = check_planarity(g)?;
    let rot = emb.rotation();
    let in_a = part.a_mask(g.n());
    let mut level = vec![0i64; g.n()];
    let mut span = vec![(0i64, 0i64); g.n()];
    let mut columns: HashMap<(usize, usize), i64> = HashMap::new();
    let mut offset = 0i64;

    for comp in g.components() {
        if comp.len() == 1 {
            let v = comp[0];
            span[v] = (offset, offset + 2);
            level[v] = 1;
            offset += 3;
            continue;
        }
        let order = boundary_edge_order(rot, &in_a, &comp)?;
        let mut positions: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
        for (i, &(a, b)) in order.iter().enumerate() {
            let col = offset + i as i64;
            columns.insert((a, b), col);
            positions.entry(a).or_default().push(col);
            positions.entry(b).or_default().push(col);
        }
        for side in [true, false] {
            let members: Vec<usize> = comp.iter().copied().filter(|&v| in_a[v] == side).collect();
            let sets: Vec<&Vec<i64>> = members.iter().map(|v| &positions[v]).collect();
            let depths = nesting_levels(&sets)?;
            for (k, &v) in members.iter().enumerate() {
                level[v] = depths[k];
                let p = &positions[&v];
                span[v] = (p[0], *p.last().unwrap());
            }
        }
        offset += order.len() as i64;
    }

    let y_of = |v: usize| if in_a[v] { level[v] } else { -level[v] };
    let min_y = (0..g.n()).map(y_of).min().unwrap_or(0);
    let bars: Vec<Bar> = (0..g.n())
        .map(|v| {
            let (s, e) = span[v];
            let mid = if g.degree(v) == 0 {
                s + 1
            } else if in_a[v] {
                e
            } else {
                s
            };
            Bar { y: y_of(v) - min_y, x_start: s, x_mid: mid, x_end: e }
        })
        .collect();
    let segments = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = if in_a[u] { (u, v) } else { (v, u) };
            Segment { lower: b, upper: a, x: columns[&(a, b)], y_bot: bars[b].y, y_top: bars[a].y }
        })
        .collect();
    Ok(HHVisibilityRep { rep: VisibilityRep { bars, segments }, part: part.clone() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum TourItem {
    Edge(usize),
    /// Diagonal identified by its corner `(b, a)`, where the diagonal runs
    /// from `a` to the successor of `a` around `b`.
    Leave(usize, usize),
    Arrive(usize, usize),
}

fn boundary_edge_order(rot: &[Vec<usize>], in_a: &[bool], comp: &[usize]) -> Result<Vec<(usize, usize)>> {
    let succ = |v: usize, u: usize| crate::planarity::succ(rot, v, u);
    let a_side: Vec<usize> = comp.iter().copied().filter(|&v| in_a[v]).collect();
    let edge_count: usize = a_side.iter().map(|&a| rot[a].len()).sum();

    // spanning tree over A via corners, deterministic union-find
    let mut root: HashMap<usize, usize> = a_side.iter().map(|&a| (a, a)).collect();
    fn find(root: &mut HashMap<usize, usize>, x: usize) -> usize {
        let p = root[&x];
        if p == x {
            return x;
        }
        let r = find(root, p);
        root.insert(x, r);
        r
    }
    let mut corners: HashSet<(usize, usize)> = HashSet::new();
    for &b in comp.iter().filter(|&&v| !in_a[v]) {
        for &a in &rot[b] {
            let a2 = succ(b, a);
            if a2 == a {
                continue;
            }
            let (ra, rb) = (find(&mut root, a), find(&mut root, a2));
            if ra != rb {
                root.insert(ra, rb);
                corners.insert((b, a));
            }
        }
    }

    let mut items: HashMap<usize, Vec<TourItem>> = HashMap::new();
    for &a in &a_side {
        let mut list = Vec::new();
        for &b in &rot[a] {
            if corners.contains(&(b, a)) {
                list.push(TourItem::Leave(b, a));
            }
            list.push(TourItem::Edge(b));
            let prev = pred(rot, b, a);
            if prev != a && corners.contains(&(b, prev)) {
                list.push(TourItem::Arrive(b, prev));
            }
        }
        items.insert(a, list);
    }
    let locate = |items: &HashMap<usize, Vec<TourItem>>, v: usize, it: TourItem| {
        items[&v].iter().position(|&x| x == it).expect("diagonal end present")
    };

    let steps = edge_count + 2 * (a_side.len() - 1);
    let mut order = Vec::with_capacity(edge_count);
    let (mut a, mut idx) = (a_side[0], 0usize);
    for _ in 0..steps {
        let list = &items[&a];
        match list[idx % list.len()] {
            TourItem::Edge(b) => {
                order.push((a, b));
                idx = idx % list.len() + 1;
            }
            TourItem::Leave(b, from) => {
                let to = succ(b, from);
                idx = locate(&items, to, TourItem::Arrive(b, from)) + 1;
                a = to;
            }
            TourItem::Arrive(b, from) => {
                idx = locate(&items, from, TourItem::Leave(b, from)) + 1;
                a = from;
            }
        }
    }
    let distinct: HashSet<_> = order.iter().collect();
    if order.len() != edge_count || distinct.len() != edge_count {
        return Err(Error::Invalid("boundary tour missed an edge".into()));
    }
    Ok(order)
}

fn pred(rot: &[Vec<usize>], v: usize, u: usize) -> usize {
    let r = &rot[v];
    let i = r.iter().position(|&x| x == u).unwrap();
    r[(i + r.len() - 1) % r.len()]
}

/// Stacking level of each position set: 1 + the deepest set nested inside
/// its span. Fails if two sets interleave.
fn nesting_levels(sets: &[&Vec<i64>]) -> Result<Vec<i64>> {
    let k = sets.len();
    let span = |s: &Vec<i64>| (s[0], *s.last().unwrap());
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let (lo, hi) = span(sets[i]);
            // j must not straddle i: every element of j inside i's span lies in one gap
            let inside: Vec<i64> = sets[j].iter().copied().filter(|&x| lo < x && x < hi).collect();
            if inside.is_empty() {
                continue;
            }
            let outside = sets[j].len() != inside.len();
            let gap = |x: i64| sets[i].partition_point(|&y| y < x);
            let one_gap = inside.iter().all(|&x| gap(x) == gap(inside[0]));
            if outside || !one_gap {
                return Err(Error::Invalid("edge sets interleave along the boundary".into()));
            }
        }
    }
    let mut idx: Vec<usize> = (0..k).collect();
    idx.sort_by_key(|&i| {
        let (lo, hi) = span(sets[i]);
        hi - lo
    });
    let mut level = vec![1i64; k];
    for (pos, &i) in idx.iter().enumerate() {
        let (lo, hi) = span(sets[i]);
        for &j in &idx[..pos] {
            let (l2, h2) = span(sets[j]);
            if lo < l2 && h2 < hi {
                level[i] = level[i].max(level[j] + 1);
            }
        }
    }
    Ok(level)
}

/// Which structural contract to check.
#[derive(Clone, Copy, Debug)]
pub enum VerifyMode<'a> {
    /// Downward edges at or left of the split column, upward edges right of it.
    SplitBars,
    /// A-vertices only have neighbours below, B-vertices only above, and all
    /// A-bars lie above all B-bars.
    Bipartite(&'a Bipartition),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    BarCount { expected: usize, found: usize },
    MalformedBar(usize),
    BarsOverlap(usize, usize),
    SegmentDetached { lower: usize, upper: usize },
    SegmentCrossesBar { lower: usize, upper: usize, bar: usize },
    SegmentsOverlap((usize, usize), (usize, usize)),
    MissingEdge(usize, usize),
    SpuriousEdge(usize, usize),
    WrongSide { vertex: usize, edge: (usize, usize) },
    SidesInterleaved,
    TooWide { width: i64, bound: i64 },
    TooTall { height: i64, bound: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BarCount { expected, found } => write!(f, "expected {expected} bars, found {found}"),
            Violation::MalformedBar(v) => write!(f, "bar of vertex {v} is malformed"),
            Violation::BarsOverlap(u, v) => write!(f, "bars of {u} and {v} overlap"),
            Violation::SegmentDetached { lower, upper } => {
                write!(f, "segment of edge ({lower},{upper}) does not end on its bars")
            }
            Violation::SegmentCrossesBar { lower, upper, bar } => {
                write!(f, "segment of edge ({lower},{upper}) crosses bar of {bar}")
            }
            Violation::SegmentsOverlap(a, b) => write!(f, "segments {a:?} and {b:?} overlap"),
            Violation::MissingEdge(u, v) => write!(f, "edge ({u},{v}) has no segment"),
            Violation::SpuriousEdge(u, v) => write!(f, "segment ({u},{v}) is not an edge"),
            Violation::WrongSide { vertex, edge } => {
                write!(f, "edge {edge:?} attaches on the wrong side of vertex {vertex}")
            }
            Violation::SidesInterleaved => write!(f, "some B-bar is not below every A-bar"),
            Violation::TooWide { width, bound } => write!(f, "width {width} exceeds {bound}"),
            Violation::TooTall { height, bound } => write!(f, "height {height} exceeds {bound}"),
        }
    }
}

/// Lists every violated invariant; an empty list means the representation
/// is valid for `g`.
pub fn verify_visibility_rep(rep: &VisibilityRep, g: &Graph, mode: VerifyMode) -> Vec<Violation> {
    let mut out = Vec::new();
    if rep.bars.len() != g.n() {
        out.push(Violation::BarCount { expected: g.n(), found: rep.bars.len() });
        return out;
    }
    let bars = &rep.bars;
    for (v, b) in bars.iter().enumerate() {
        if !(b.x_start <= b.x_mid && b.x_mid <= b.x_end) || b.x_start < 0 || b.y < 0 {
            out.push(Violation::MalformedBar(v));
        }
    }
    for u in 0..bars.len() {
        for v in u + 1..bars.len() {
            let (a, b) = (&bars[u], &bars[v]);
            if a.y == b.y && a.x_start <= b.x_end && b.x_start <= a.x_end {
                out.push(Violation::BarsOverlap(u, v));
            }
        }
    }
    let mut seen = HashSet::new();
    for s in &rep.segments {
        let (lo, up) = (s.lower, s.upper);
        if lo >= bars.len() || up >= bars.len() {
            out.push(Violation::SpuriousEdge(lo, up));
            continue;
        }
        let key = (lo.min(up), lo.max(up));
        if !g.has_edge(lo, up) || !seen.insert(key) {
            out.push(Violation::SpuriousEdge(lo, up));
        }
        let (bl, bu) = (&bars[lo], &bars[up]);
        if s.y_bot != bl.y || s.y_top != bu.y || s.y_bot >= s.y_top || !bl.contains_x(s.x) || !bu.contains_x(s.x) {
            out.push(Violation::SegmentDetached { lower: lo, upper: up });
        }
        for (w, b) in bars.iter().enumerate() {
            if w != lo && w != up && s.y_bot <= b.y && b.y <= s.y_top && b.contains_x(s.x) {
                out.push(Violation::SegmentCrossesBar { lower: lo, upper: up, bar: w });
            }
        }
        match mode {
            VerifyMode::SplitBars => {
                if s.x <= bl.x_mid {
                    out.push(Violation::WrongSide { vertex: lo, edge: (lo, up) });
                }
                if s.x > bu.x_mid {
                    out.push(Violation::WrongSide { vertex: up, edge: (lo, up) });
                }
            }
            VerifyMode::Bipartite(part) => {
                if !part.in_a(up) {
                    out.push(Violation::WrongSide { vertex: up, edge: (lo, up) });
                }
                if part.in_a(lo) {
                    out.push(Violation::WrongSide { vertex: lo, edge: (lo, up) });
                }
            }
        }
    }
    for (i, s) in rep.segments.iter().enumerate() {
        for t in &rep.segments[i + 1..] {
            if s.x == t.x && s.y_bot <= t.y_top && t.y_bot <= s.y_top {
                out.push(Violation::SegmentsOverlap((s.lower, s.upper), (t.lower, t.upper)));
            }
        }
    }
    for &(u, v) in g.edges() {
        if !seen.contains(&(u, v)) {
            out.push(Violation::MissingEdge(u, v));
        }
    }
    if let VerifyMode::Bipartite(part) = mode {
        let min_a = part.side_a.iter().map(|&v| bars[v].y).min();
        let max_b = part.side_b.iter().map(|&v| bars[v].y).max();
        if let (Some(a), Some(b)) = (min_a, max_b) {
            if b >= a {
                out.push(Violation::SidesInterleaved);
            }
        }
    }
    let (n, m) = (g.n() as i64, g.m() as i64);
    let width_bound = WIDTH_FACTOR * (n + m);
    if rep.width() > width_bound {
        out.push(Violation::TooWide { width: rep.width(), bound: width_bound });
    }
    if rep.height() > n.max(1) + 1 {
        out.push(Violation::TooTall { height: rep.height(), bound: n.max(1) + 1 });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{random_planar, random_planar_bipartite};

    #[test]
    fn single_vertex_one_bar() {
        let g = Graph::empty(1);
        let rep = special_visibility_rep(&g).unwrap();
        assert_eq!(rep.bars.len(), 1);
        assert!(rep.segments.is_empty());
        let b = rep.bars[0];
        assert_eq!((b.x_end - b.x_start, b.x_mid - b.x_start), (2, 1));
        assert!(verify_visibility_rep(&rep, &g, VerifyMode::SplitBars).is_empty());
    }

    #[test]
    fn single_edge() {
        let g = Graph::path(2);
        let rep = special_visibility_rep(&g).unwrap();
        assert_eq!(rep.segments.len(), 1);
        assert_ne!(rep.bars[0].y, rep.bars[1].y);
        assert!(verify_visibility_rep(&rep, &g, VerifyMode::SplitBars).is_empty());
    }

    #[test]
    fn five_vertex_example_has_split_bars() {
        // K4 with a fifth vertex on the outer face
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (1, 4)]).unwrap();
        let rep = special_visibility_rep(&g).unwrap();
        assert_eq!(verify_visibility_rep(&rep, &g, VerifyMode::SplitBars), vec![]);
        for (v, bar) in rep.bars.iter().enumerate() {
            for s in &rep.segments {
                if s.upper == v {
                    assert!(s.x <= bar.x_mid);
                }
                if s.lower == v {
                    assert!(s.x > bar.x_mid);
                }
            }
        }
    }

    #[test]
    fn random_planar_reps_verify() {
        for seed in 0..100 {
            let n = 1 + (seed as usize * 13) % 40;
            let g = random_planar(n, seed);
            let rep = special_visibility_rep(&g).unwrap();
            let report = verify_visibility_rep(&rep, &g, VerifyMode::SplitBars);
            assert!(report.is_empty(), "seed {seed}: {report:?}");
        }
    }

    #[test]
    fn detached_segment_reported() {
        let g = Graph::path(3);
        let mut rep = special_visibility_rep(&g).unwrap();
        rep.segments[0].y_top -= 1;
        let report = verify_visibility_rep(&rep, &g, VerifyMode::SplitBars);
        let (lo, up) = (rep.segments[0].lower, rep.segments[0].upper);
        assert!(report.contains(&Violation::SegmentDetached { lower: lo, upper: up }));
    }

    #[test]
    fn upward_edge_left_of_split_reported() {
        let g = Graph::path(2);
        let mut rep = special_visibility_rep(&g).unwrap();
        let lo = rep.segments[0].lower;
        rep.bars[lo].x_mid = rep.bars[lo].x_end;
        let report = verify_visibility_rep(&rep, &g, VerifyMode::SplitBars);
        assert!(report.iter().any(|v| matches!(v, Violation::WrongSide { vertex, .. } if *vertex == lo)));
    }

    #[test]
    fn hh_single_edge_and_c4() {
        let g = Graph::path(2);
        let part = g.bipartition().unwrap();
        let hh = hh_visibility_rep(&g, &part).unwrap();
        assert!(hh.rep.bars[0].y > hh.rep.bars[1].y);
        assert_eq!(hh.rep.segments.len(), 1);

        let c4 = Graph::cycle(4);
        let part = c4.bipartition().unwrap();
        let hh = hh_visibility_rep(&c4, &part).unwrap();
        assert_eq!(verify_visibility_rep(&hh.rep, &c4, VerifyMode::Bipartite(&part)), vec![]);
        assert_eq!(hh.rep.segments.len(), 4);
    }

    #[test]
    fn hh_random_and_structured() {
        let mut graphs = vec![
            Graph::complete_bipartite(2, 3),
            Graph::complete_bipartite(2, 6),
            Graph::cycle(6),
            Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 5), (5, 4), (4, 1), (6, 4)]).unwrap(),
            Graph::new(5, &[(0, 1), (2, 3)]).unwrap(),
        ];
        for seed in 0..100 {
            graphs.push(random_planar_bipartite(1 + (seed as usize * 7) % 30, seed).0);
        }
        for g in graphs {
            let part = g.bipartition().unwrap();
            let hh = hh_visibility_rep(&g, &part).unwrap();
            let report = verify_visibility_rep(&hh.rep, &g, VerifyMode::Bipartite(&part));
            assert!(report.is_empty(), "{g:?}: {report:?}");
            for s in &hh.rep.segments {
                assert!(hh.rep.bars[s.upper].y > s.y_bot);
            }
        }
    }
}
