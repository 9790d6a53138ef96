//! Line-based text formats for every artifact.
//!
//! Blank lines and lines starting with `%` are ignored on input. Writers
//! emit a canonical form, so `write(parse(write(x))) == write(x)`.
//!
//! | artifact | header | body |
//! |---|---|---|
//! | graph | `n m` | `m` lines `u v`, then optional `label v name` and `A: i j ...` |
//! | visibility rep | `visrep n` | `bar v y x_start x_mid x_end`, `seg u w x y_bot y_top` |
//! | 2D grid | `gor2d W H blocking\|nonblocking` | `H` rows top-first, then `v i x y` |
//! | 3D grid | `gor3d X Y Z blocking\|nonblocking` | per slice `--- z=k` and `Y` rows, then `v i x y z` |
//! | polygon | `r W H` | `H` rows top-first, then `end`, `spiral` and `sseg` lines |
//! | guards | (none) | `x y` per guard, then `size k` |
//!
//! Grid rows use `#` for obstacles and `.` for free points. Vertex points
//! show `A`..`Z` for vertices 0..25 and `*` beyond. Polygon rows use `#`
//! outside, `.` inside, `E` end cells, `T` tail cells and `X` corner cells.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::guarding::{Cell, OrthoPolygon, Spiral, SpiralSide};
use crate::obstacle::{GridObstacleRep2D, GridObstacleRep3D};
use crate::visibility::{Bar, Segment, VisibilityRep};

/// A graph file, optionally carrying a bipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub part: Option<Bipartition>,
}

/// Any artifact, as recognised from its header.
#[derive(Clone, Debug, PartialEq)]
pub enum Artifact {
    Graph(GraphFile),
    Visibility(VisibilityRep),
    Grid2D(GridObstacleRep2D),
    Grid3D(GridObstacleRep3D),
    Polygon(OrthoPolygon),
    Guards(Vec<Cell>),
}

/// Significant lines with their 1-based line numbers.
fn lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('%'))
        .collect()
}

fn num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::parse(line, format!("expected a number, found `{tok}`")))
}

fn nums<T: std::str::FromStr>(line: usize, toks: &[&str]) -> Result<Vec<T>> {
    toks.iter().map(|t| num(line, t)).collect()
}

fn expect_len(line: usize, toks: &[&str], len: usize, what: &str) -> Result<()> {
    if toks.len() != len {
        return Err(Error::parse(line, format!("{what} needs {len} fields, found {}", toks.len())));
    }
    Ok(())
}

fn marker(v: usize) -> char {
    if v < 26 {
        (b'A' + v as u8) as char
    } else {
        '*'
    }
}

pub fn write_graph(g: &Graph, part: Option<&Bipartition>) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            let _ = writeln!(s, "label {v} {l}");
        }
    }
    if let Some(p) = part {
        let mut a = p.side_a.clone();
        a.sort_unstable();
        let list: Vec<String> = a.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "A: {}", list.join(" "));
    }
    s
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let ls = lines(text);
    let Some(&(l0, head)) = ls.first() else { return Err(Error::parse(1, "empty graph file")) };
    let toks: Vec<&str> = head.split_whitespace().collect();
    expect_len(l0, &toks, 2, "graph header `n m`")?;
    let (n, m): (usize, usize) = (num(l0, toks[0])?, num(l0, toks[1])?);
    if ls.len() < 1 + m {
        return Err(Error::parse(ls.last().map_or(l0, |l| l.0), format!("expected {m} edge lines")));
    }
    let mut edges = Vec::with_capacity(m);
    for &(ln, line) in &ls[1..1 + m] {
        let toks: Vec<&str> = line.split_whitespace().collect();
        expect_len(ln, &toks, 2, "edge line `u v`")?;
        let (u, v): (usize, usize) = (num(ln, toks[0])?, num(ln, toks[1])?);
        if u >= n || v >= n || u == v {
            return Err(Error::parse(ln, format!("bad edge `{u} {v}` for {n} vertices")));
        }
        edges.push((u, v));
    }
    let mut graph = Graph::new(n, &edges)?;
    let mut labels: Option<Vec<String>> = None;
    let mut part = None;
    for &(ln, line) in &ls[1 + m..] {
        if let Some(rest) = line.strip_prefix("A:") {
            let a: Vec<usize> = nums(ln, &rest.split_whitespace().collect::<Vec<_>>())?;
            let mask: Vec<bool> = (0..n).map(|v| a.contains(&v)).collect();
            let side_a: Vec<usize> = (0..n).filter(|&v| mask[v]).collect();
            if side_a.len() != a.len() {
                return Err(Error::parse(ln, "side A lists an unknown or repeated vertex"));
            }
            let p = Bipartition { side_a, side_b: (0..n).filter(|&v| !mask[v]).collect() };
            p.validate(&graph).map_err(|e| Error::parse(ln, e.to_string()))?;
            part = Some(p);
        } else if let Some(rest) = line.strip_prefix("label ") {
            let (idx, name) = rest.split_once(' ').ok_or_else(|| Error::parse(ln, "label line needs `label v name`"))?;
            let v: usize = num(ln, idx)?;
            if v >= n {
                return Err(Error::parse(ln, format!("label for unknown vertex {v}")));
            }
            labels.get_or_insert_with(|| (0..n).map(|i| i.to_string()).collect())[v] = name.to_string();
        } else {
            let tok = line.split_whitespace().next().unwrap_or("");
            return Err(Error::parse(ln, format!("unexpected `{tok}` after the edge list")));
        }
    }
    if let Some(l) = labels {
        graph = graph.with_labels(l)?;
    }
    Ok(GraphFile { graph, part })
}

pub fn write_visibility(rep: &VisibilityRep) -> String {
    let mut s = format!("visrep {}\n", rep.bars.len());
    for (v, b) in rep.bars.iter().enumerate() {
        let _ = writeln!(s, "bar {v} {} {} {} {}", b.y, b.x_start, b.x_mid, b.x_end);
    }
    for g in &rep.segments {
        let _ = writeln!(s, "seg {} {} {} {} {}", g.lower, g.upper, g.x, g.y_bot, g.y_top);
    }
    s
}

pub fn parse_visibility(text: &str) -> Result<VisibilityRep> {
    let ls = lines(text);
    let Some(&(l0, head)) = ls.first() else { return Err(Error::parse(1, "empty file")) };
    let toks: Vec<&str> = head.split_whitespace().collect();
    if toks.first() != Some(&"visrep") || toks.len() != 2 {
        return Err(Error::parse(l0, "expected header `visrep n`"));
    }
    let n: usize = num(l0, toks[1])?;
    let mut bars: Vec<Option<Bar>> = vec![None; n];
    let mut segments = Vec::new();
    for &(ln, line) in &ls[1..] {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "bar" => {
                expect_len(ln, &toks, 6, "bar line")?;
                let v: usize = num(ln, toks[1])?;
                let f: Vec<i64> = nums(ln, &toks[2..])?;
                let slot = bars.get_mut(v).ok_or_else(|| Error::parse(ln, format!("bar for unknown vertex {v}")))?;
                *slot = Some(Bar { y: f[0], x_start: f[1], x_mid: f[2], x_end: f[3] });
            }
            "seg" => {
                expect_len(ln, &toks, 6, "seg line")?;
                let (lower, upper): (usize, usize) = (num(ln, toks[1])?, num(ln, toks[2])?);
                let f: Vec<i64> = nums(ln, &toks[3..])?;
                segments.push(Segment { lower, upper, x: f[0], y_bot: f[1], y_top: f[2] });
            }
            other => return Err(Error::parse(ln, format!("unknown record `{other}`"))),
        }
    }
    let bars = bars
        .into_iter()
        .enumerate()
        .map(|(v, b)| b.ok_or_else(|| Error::parse(l0, format!("vertex {v} has no bar"))))
        .collect::<Result<_>>()?;
    Ok(VisibilityRep { bars, segments })
}

fn mode_word(blocking: bool) -> &'static str {
    if blocking {
        "blocking"
    } else {
        "nonblocking"
    }
}

fn parse_mode(line: usize, tok: &str) -> Result<bool> {
    match tok {
        "blocking" => Ok(true),
        "nonblocking" => Ok(false),
        _ => Err(Error::parse(line, format!("mode must be blocking or nonblocking, found `{tok}`"))),
    }
}

/// Rows top-first of a `w x h` slice, `free` and `vertex` queried per point.
fn slice_rows(w: usize, h: usize, free: impl Fn(usize, usize) -> bool, vertex: impl Fn(usize, usize) -> Option<usize>) -> String {
    let mut s = String::with_capacity((w + 1) * h);
    for y in (0..h).rev() {
        for x in 0..w {
            s.push(match vertex(x, y) {
                Some(v) => marker(v),
                None if free(x, y) => '.',
                None => '#',
            });
        }
        s.push('\n');
    }
    s
}

/// Reads `h` rows of width `w` into a top-first char matrix.
fn read_rows<'a>(ls: &[(usize, &'a str)], at: usize, w: usize, h: usize, allowed: &str) -> Result<Vec<(usize, &'a [u8])>> {
    let mut rows = Vec::with_capacity(h);
    for k in 0..h {
        let Some(&(ln, row)) = ls.get(at + k) else {
            let last = ls.last().map_or(0, |l| l.0);
            return Err(Error::parse(last, format!("expected {h} grid rows, found {k}")));
        };
        if row.len() != w {
            return Err(Error::parse(ln, format!("row has {} characters, expected {w}", row.len())));
        }
        if let Some(c) = row.chars().find(|c| !allowed.contains(*c) && !c.is_ascii_uppercase() && *c != '*') {
            return Err(Error::parse(ln, format!("unexpected character `{c}` in grid row")));
        }
        rows.push((ln, row.as_bytes()));
    }
    Ok(rows)
}

fn check_marker(ln: usize, found: u8, v: usize) -> Result<()> {
    if found as char != marker(v) {
        return Err(Error::parse(ln, format!("vertex {v} is not marked `{}` in the grid", marker(v))));
    }
    Ok(())
}

pub fn write_gor2d(rep: &GridObstacleRep2D) -> String {
    let mut s = format!("gor2d {} {} {}\n", rep.width, rep.height, mode_word(rep.blocking));
    s += &slice_rows(
        rep.width,
        rep.height,
        |x, y| !rep.is_obstacle(x, y),
        |x, y| rep.vertex_points.iter().position(|&p| p == (x, y)),
    );
    for (v, &(x, y)) in rep.vertex_points.iter().enumerate() {
        let _ = writeln!(s, "v {v} {x} {y}");
    }
    s
}

pub fn parse_gor2d(text: &str) -> Result<GridObstacleRep2D> {
    let ls = lines(text);
    let Some(&(l0, head)) = ls.first() else { return Err(Error::parse(1, "empty file")) };
    let toks: Vec<&str> = head.split_whitespace().collect();
    if toks.first() != Some(&"gor2d") || toks.len() != 4 {
        return Err(Error::parse(l0, "expected header `gor2d W H mode`"));
    }
    let (w, h): (usize, usize) = (num(l0, toks[1])?, num(l0, toks[2])?);
    let mut rep = GridObstacleRep2D::filled(w, h, parse_mode(l0, toks[3])?);
    let rows = read_rows(&ls, 1, w, h, "#.")?;
    for (k, &(_, row)) in rows.iter().enumerate() {
        for (x, &c) in row.iter().enumerate() {
            rep.set_obstacle(x, h - 1 - k, c == b'#');
        }
    }
    for &(ln, line) in &ls[1 + h..] {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] != "v" {
            return Err(Error::parse(ln, format!("unknown record `{}`", toks[0])));
        }
        expect_len(ln, &toks, 4, "vertex line `v i x y`")?;
        let f: Vec<usize> = nums(ln, &toks[1..])?;
        if f[0] != rep.vertex_points.len() {
            return Err(Error::parse(ln, format!("expected vertex {}, found {}", rep.vertex_points.len(), f[0])));
        }
        if f[1] >= w || f[2] >= h {
            return Err(Error::parse(ln, "vertex point outside the grid"));
        }
        check_marker(ln, rows[h - 1 - f[2]].1[f[1]], f[0])?;
        rep.vertex_points.push((f[1], f[2]));
    }
    rep.validate()?;
    Ok(rep)
}

pub fn write_gor3d(rep: &GridObstacleRep3D) -> String {
    let (w, h, d) = rep.extents;
    let mut s = format!("gor3d {w} {h} {d} {}\n", mode_word(rep.blocking));
    for z in 0..d {
        let _ = writeln!(s, "--- z={z}");
        s += &slice_rows(
            w,
            h,
            |x, y| !rep.is_obstacle(x, y, z),
            |x, y| rep.vertex_points.iter().position(|&p| p == (x, y, z)),
        );
    }
    for (v, &(x, y, z)) in rep.vertex_points.iter().enumerate() {
        let _ = writeln!(s, "v {v} {x} {y} {z}");
    }
    s
}

pub fn parse_gor3d(text: &str) -> Result<GridObstacleRep3D> {
    let ls = lines(text);
    let Some(&(l0, head)) = ls.first() else { return Err(Error::parse(1, "empty file")) };
    let toks: Vec<&str> = head.split_whitespace().collect();
    if toks.first() != Some(&"gor3d") || toks.len() != 5 {
        return Err(Error::parse(l0, "expected header `gor3d X Y Z mode`"));
    }
    let (w, h, d): (usize, usize, usize) = (num(l0, toks[1])?, num(l0, toks[2])?, num(l0, toks[3])?);
    let mut rep = GridObstacleRep3D::filled((w, h, d), parse_mode(l0, toks[4])?);
    let mut at = 1;
    let mut slices = Vec::with_capacity(d);
    for z in 0..d {
        let (ln, sep) = *ls.get(at).ok_or_else(|| Error::parse(l0, format!("missing slice z={z}")))?;
        if sep != format!("--- z={z}") {
            return Err(Error::parse(ln, format!("expected `--- z={z}`")));
        }
        let rows = read_rows(&ls, at + 1, w, h, "#.")?;
        for (k, &(_, row)) in rows.iter().enumerate() {
            for (x, &c) in row.iter().enumerate() {
                rep.set_obstacle(x, h - 1 - k, z, c == b'#');
            }
        }
        slices.push(rows);
        at += 1 + h;
    }
    for &(ln, line) in &ls[at..] {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] != "v" {
            return Err(Error::parse(ln, format!("unknown record `{}`", toks[0])));
        }
        expect_len(ln, &toks, 5, "vertex line `v i x y z`")?;
        let f: Vec<usize> = nums(ln, &toks[1..])?;
        if f[0] != rep.vertex_points.len() {
            return Err(Error::parse(ln, format!("expected vertex {}, found {}", rep.vertex_points.len(), f[0])));
        }
        if f[1] >= w || f[2] >= h || f[3] >= d {
            return Err(Error::parse(ln, "vertex point outside the grid"));
        }
        check_marker(ln, slices[f[3]][h - 1 - f[2]].1[f[1]], f[0])?;
        rep.vertex_points.push((f[1], f[2], f[3]));
    }
    rep.validate()?;
    Ok(rep)
}

fn side_char(s: SpiralSide) -> char {
    match s {
        SpiralSide::Left => 'L',
        SpiralSide::Right => 'R',
    }
}

pub fn write_polygon(p: &OrthoPolygon) -> String {
    let mut s = format!("{} {} {}\n", p.resolution, p.width, p.height);
    let mut special = std::collections::HashMap::new();
    for &c in &p.end_pixels {
        special.insert(c, 'E');
    }
    for sp in &p.spirals {
        special.insert(sp.tail, 'T');
        special.insert(sp.cross, 'X');
    }
    for y in (0..p.height).rev() {
        for x in 0..p.width {
            s.push(match special.get(&(x, y)) {
                Some(&c) => c,
                None if p.contains((x, y)) => '.',
                None => '#',
            });
        }
        s.push('\n');
    }
    for (v, &(x, y)) in p.end_pixels.iter().enumerate() {
        let _ = writeln!(s, "end {v} {x} {y}");
    }
    for (i, sp) in p.spirals.iter().enumerate() {
        let (a, b) = sp.edge;
        let _ = writeln!(
            s,
            "spiral {i} {a} {b} {} {} {} {} {}",
            side_char(sp.side),
            sp.tail.0,
            sp.tail.1,
            sp.cross.0,
            sp.cross.1
        );
        let cells: Vec<String> = sp.threshold.iter().map(|(x, y)| format!("{x} {y}")).collect();
        let _ = writeln!(s, "sseg {i} {}", cells.join(" "));
    }
    s
}

pub fn parse_polygon(text: &str) -> Result<OrthoPolygon> {
    let ls = lines(text);
    let Some(&(l0, head)) = ls.first() else { return Err(Error::parse(1, "empty file")) };
    let toks: Vec<&str> = head.split_whitespace().collect();
    expect_len(l0, &toks, 3, "polygon header `r W H`")?;
    let f: Vec<usize> = nums(l0, &toks)?;
    let (w, h) = (f[1], f[2]);
    let mut p = OrthoPolygon::new(f[0], w, h);
    let rows = read_rows(&ls, 1, w, h, "#.ETX")?;
    let char_at = |c: Cell| rows[h - 1 - c.1].1[c.0];
    for (k, &(ln, row)) in rows.iter().enumerate() {
        for (x, &c) in row.iter().enumerate() {
            match c {
                b'#' => {}
                b'.' | b'E' | b'T' | b'X' => p.set_interior((x, h - 1 - k), true),
                other => return Err(Error::parse(ln, format!("unexpected character `{}`", other as char))),
            }
        }
    }
    let cell = |ln: usize, x: &str, y: &str| -> Result<Cell> {
        let c: Cell = (num(ln, x)?, num(ln, y)?);
        if c.0 >= w || c.1 >= h {
            return Err(Error::parse(ln, format!("cell ({},{}) outside the polygon grid", c.0, c.1)));
        }
        Ok(c)
    };
    for &(ln, line) in &ls[1 + h..] {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "end" => {
                expect_len(ln, &toks, 4, "end line `end v x y`")?;
                let v: usize = num(ln, toks[1])?;
                if v != p.end_pixels.len() {
                    return Err(Error::parse(ln, format!("expected end cell of vertex {}", p.end_pixels.len())));
                }
                let c = cell(ln, toks[2], toks[3])?;
                if char_at(c) != b'E' {
                    return Err(Error::parse(ln, "end cell is not marked `E`"));
                }
                p.end_pixels.push(c);
            }
            "spiral" => {
                expect_len(ln, &toks, 9, "spiral line")?;
                let i: usize = num(ln, toks[1])?;
                if i != p.spirals.len() {
                    return Err(Error::parse(ln, format!("expected spiral {}", p.spirals.len())));
                }
                let side = match toks[4] {
                    "L" => SpiralSide::Left,
                    "R" => SpiralSide::Right,
                    other => return Err(Error::parse(ln, format!("spiral side must be L or R, found `{other}`"))),
                };
                let (tail, cross) = (cell(ln, toks[5], toks[6])?, cell(ln, toks[7], toks[8])?);
                if char_at(tail) != b'T' || char_at(cross) != b'X' {
                    return Err(Error::parse(ln, "spiral tail or corner is not marked"));
                }
                let edge = (num(ln, toks[2])?, num(ln, toks[3])?);
                p.spirals.push(Spiral { edge, side, tail, cross, threshold: Vec::new() });
            }
            "sseg" => {
                let i: usize = num(ln, toks.get(1).copied().unwrap_or(""))?;
                if i + 1 != p.spirals.len() || !toks.len().is_multiple_of(2) {
                    return Err(Error::parse(ln, "sseg must follow its spiral and list x y pairs"));
                }
                let cells = toks[2..].chunks(2).map(|c| cell(ln, c[0], c[1])).collect::<Result<Vec<_>>>()?;
                p.spirals[i].threshold = cells;
            }
            other => return Err(Error::parse(ln, format!("unknown record `{other}`"))),
        }
    }
    Ok(p)
}

pub fn write_guards(guards: &[Cell]) -> String {
    let mut s = String::new();
    for (x, y) in guards {
        let _ = writeln!(s, "{x} {y}");
    }
    let _ = writeln!(s, "size {}", guards.len());
    s
}

pub fn parse_guards(text: &str) -> Result<Vec<Cell>> {
    let ls = lines(text);
    let mut guards = Vec::new();
    for (k, &(ln, line)) in ls.iter().enumerate() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "size" {
            expect_len(ln, &toks, 2, "size line")?;
            let size: usize = num(ln, toks[1])?;
            if size != guards.len() || k + 1 != ls.len() {
                return Err(Error::parse(ln, format!("size {size} does not match {} guards", guards.len())));
            }
            return Ok(guards);
        }
        expect_len(ln, &toks, 2, "guard line `x y`")?;
        guards.push((num(ln, toks[0])?, num(ln, toks[1])?));
    }
    Err(Error::parse(ls.last().map_or(1, |l| l.0), "missing `size` line"))
}

/// Parses any artifact, choosing the format from its header.
pub fn parse_artifact(text: &str) -> Result<Artifact> {
    let ls = lines(text);
    let Some(&(_, head)) = ls.first() else { return Err(Error::parse(1, "empty file")) };
    let first = head.split_whitespace().next().unwrap_or("");
    Ok(match first {
        "gor2d" => Artifact::Grid2D(parse_gor2d(text)?),
        "gor3d" => Artifact::Grid3D(parse_gor3d(text)?),
        "visrep" => Artifact::Visibility(parse_visibility(text)?),
        _ if ls.iter().any(|(_, l)| l.starts_with("size")) => Artifact::Guards(parse_guards(text)?),
        _ if head.split_whitespace().count() == 3 => Artifact::Polygon(parse_polygon(text)?),
        _ => Artifact::Graph(parse_graph(text)?),
    })
}

pub fn write_artifact(a: &Artifact) -> String {
    match a {
        Artifact::Graph(f) => write_graph(&f.graph, f.part.as_ref()),
        Artifact::Visibility(r) => write_visibility(r),
        Artifact::Grid2D(r) => write_gor2d(r),
        Artifact::Grid3D(r) => write_gor3d(r),
        Artifact::Polygon(p) => write_polygon(p),
        Artifact::Guards(g) => write_guards(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstacle::build_gor3d;

    #[test]
    fn graph_with_comments_and_labels() {
        let text = "% a path\n3 2\n0 1\n\n% middle\n1 2\nlabel 1 hub\nA: 0 2\n";
        let f = parse_graph(text).unwrap();
        assert_eq!(f.graph.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(f.graph.label(1), "hub");
        assert_eq!(f.part.as_ref().unwrap().side_b, vec![1]);
        let out = write_graph(&f.graph, f.part.as_ref());
        assert_eq!(out, "3 2\n0 1\n1 2\nlabel 0 0\nlabel 1 hub\nlabel 2 2\nA: 0 2\n");
        assert_eq!(parse_graph(&out).unwrap(), f);
    }

    #[test]
    fn graph_errors_name_the_line() {
        let err = parse_graph("2 1\n0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(err.to_string().contains("`x`"));
        assert!(matches!(parse_graph("3 2\n0 1\n").unwrap_err(), Error::Parse { .. }));
        assert!(matches!(parse_graph("2 1\n0 1\nA: 0 1\n").unwrap_err(), Error::Parse { line: 3, .. }));
    }

    #[test]
    fn gor3d_k4_round_trip() {
        let rep = build_gor3d(&Graph::complete(4));
        let text = write_gor3d(&rep);
        let back = parse_gor3d(&text).unwrap();
        assert_eq!(back, rep);
        assert_eq!(write_gor3d(&back), text);
    }

    #[test]
    fn truncated_polygon_names_short_row() {
        let text = "1 3 2\n#.#\n#.\n";
        let err = parse_polygon(text).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let text = "1 3 3\n#.#\n#.#\n";
        assert!(parse_polygon(text).unwrap_err().to_string().contains("expected 3 grid rows"));
    }

    #[test]
    fn marker_mismatch_rejected() {
        let text = "gor2d 3 1 blocking\nA.B\nv 0 0 0\nv 1 1 0\n";
        assert!(matches!(parse_gor2d(text), Err(Error::Parse { line: 4, .. })));
    }

    #[test]
    fn guards_round_trip() {
        let text = write_guards(&[(3, 4), (1, 0)]);
        assert_eq!(text, "3 4\n1 0\nsize 2\n");
        assert_eq!(parse_guards(&text).unwrap(), vec![(3, 4), (1, 0)]);
        assert!(parse_guards("3 4\nsize 2\n").is_err());
    }

    #[test]
    fn artifact_detection() {
        assert!(matches!(parse_artifact("2 1\n0 1\n").unwrap(), Artifact::Graph(_)));
        assert!(matches!(parse_artifact("1 0\nsize 1\n").unwrap(), Artifact::Guards(_)));
        assert!(matches!(parse_artifact("1 1 1\n.\n").unwrap(), Artifact::Polygon(_)));
    }
}
