//! SVG rendering of every artifact. Output is a pure function of the input.
//!
//! Elements carry a `class` naming what they depict (`bar`, `segment`,
//! `vertex`, `obstacle`, `spiral`, ...), which keeps the pictures easy to
//! restyle and to inspect in tests.

use std::fmt::Write as _;

use crate::graph::Graph;
use crate::guarding::{Cell, OrthoPolygon};
use crate::io::Artifact;
use crate::layout::straight_line_draw;
use crate::obstacle::{GridObstacleRep2D, GridObstacleRep3D};
use crate::planarity::check_planarity;
use crate::visibility::VisibilityRep;

const MARGIN: f64 = 12.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn open(width: f64, height: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
         <rect class=\"background\" x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
        w = width.ceil(),
        h = height.ceil()
    )
}

/// Pixel size of one grid unit so the longer side stays near 900px.
fn unit(w: usize, h: usize, lo: f64, hi: f64) -> f64 {
    (900.0 / w.max(h).max(1) as f64).clamp(lo, hi)
}

/// Maximal runs of `true` in `0..len`, as `(start, end)` inclusive.
fn runs(len: usize, pred: impl Fn(usize) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < len {
        if pred(i) {
            let s = i;
            while i + 1 < len && pred(i + 1) {
                i += 1;
            }
            out.push((s, i));
        }
        i += 1;
    }
    out
}

/// Straight-line picture of a graph: a planar drawing when one exists,
/// vertices on a circle otherwise.
pub fn render_graph(g: &Graph) -> String {
    let n = g.n();
    let mut pos: Vec<(f64, f64)> = match check_planarity(g).and_then(|e| straight_line_draw(g, &e)) {
        Ok(d) => d.positions[..n].iter().map(|&(x, y)| (x as f64, -(y as f64))).collect(),
        Err(_) => (0..n)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / n.max(1) as f64;
                (t.cos() * 10.0, t.sin() * 10.0)
            })
            .collect(),
    };
    let (minx, maxx) = pos.iter().fold((f64::MAX, f64::MIN), |a, p| (a.0.min(p.0), a.1.max(p.0)));
    let (miny, maxy) = pos.iter().fold((f64::MAX, f64::MIN), |a, p| (a.0.min(p.1), a.1.max(p.1)));
    let span = (maxx - minx).max(maxy - miny).max(1.0);
    let scale = 600.0 / span;
    for p in &mut pos {
        *p = ((p.0 - minx) * scale + 2.0 * MARGIN, (p.1 - miny) * scale + 2.0 * MARGIN);
    }
    let w = if n == 0 { 4.0 * MARGIN } else { (maxx - minx) * scale + 4.0 * MARGIN };
    let h = if n == 0 { 4.0 * MARGIN } else { (maxy - miny) * scale + 4.0 * MARGIN };
    let mut s = open(w, h);
    for &(u, v) in g.edges() {
        let _ = writeln!(
            s,
            "<line class=\"edge\" x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"black\" stroke-width=\"1.5\"/>",
            pos[u].0, pos[u].1, pos[v].0, pos[v].1
        );
    }
    for (v, &(x, y)) in pos.iter().enumerate() {
        let _ = writeln!(s, "<circle class=\"vertex\" cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"6\" fill=\"black\"/>");
        let _ = writeln!(
            s,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\" font-family=\"sans-serif\">{}</text>",
            x + 8.0,
            y - 8.0,
            escape(&g.label(v))
        );
    }
    s + "</svg>\n"
}

/// Bars as thick horizontals with a tick at the split column, edges as
/// thin verticals.
pub fn render_visibility(rep: &VisibilityRep) -> String {
    let (w, h) = (rep.width().max(1) as usize, rep.height().max(1) as usize);
    let u = unit(w, h, 6.0, 40.0);
    let px = |x: i64| MARGIN + x as f64 * u;
    let py = |y: i64| MARGIN + (h as i64 - 1 - y) as f64 * u;
    let mut s = open(2.0 * MARGIN + (w - 1) as f64 * u, 2.0 * MARGIN + (h - 1) as f64 * u);
    for g in &rep.segments {
        let _ = writeln!(
            s,
            "<line class=\"segment\" x1=\"{0:.1}\" y1=\"{1:.1}\" x2=\"{0:.1}\" y2=\"{2:.1}\" stroke=\"black\" stroke-width=\"1.5\"/>",
            px(g.x),
            py(g.y_bot),
            py(g.y_top)
        );
    }
    for (v, b) in rep.bars.iter().enumerate() {
        let _ = writeln!(
            s,
            "<line class=\"bar\" x1=\"{0:.1}\" y1=\"{1:.1}\" x2=\"{2:.1}\" y2=\"{1:.1}\" stroke=\"#1f4e9c\" stroke-width=\"{3:.1}\" stroke-linecap=\"square\"/>",
            px(b.x_start),
            py(b.y),
            px(b.x_end),
            (u * 0.3).max(3.0)
        );
        let _ = writeln!(
            s,
            "<line class=\"split\" x1=\"{0:.1}\" y1=\"{1:.1}\" x2=\"{0:.1}\" y2=\"{2:.1}\" stroke=\"red\" stroke-width=\"1\"/>",
            px(b.x_mid) + u / 2.0,
            py(b.y) - u * 0.3,
            py(b.y) + u * 0.3
        );
        let _ = writeln!(
            s,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"10\" font-family=\"sans-serif\">{v}</text>",
            px(b.x_start),
            py(b.y) - u * 0.25
        );
    }
    s + "</svg>\n"
}

/// Grid with obstacle cells filled, drawing corridors as bars and
/// segments, and vertex points as labelled dots.
pub fn render_gor2d(rep: &GridObstacleRep2D) -> String {
    let u = unit(rep.width, rep.height, 3.0, 24.0);
    let mut s = open(rep.width as f64 * u, rep.height as f64 * u);
    grid_panel(&mut s, rep.width, rep.height, 0.0, 0.0, u, |x, y| !rep.is_obstacle(x, y), &rep.vertex_points.iter().copied().enumerate().collect::<Vec<_>>());
    s + "</svg>\n"
}

/// Draws one 2D slice at offset `(ox, oy)`.
#[allow(clippy::too_many_arguments)]
fn grid_panel(
    s: &mut String,
    w: usize,
    h: usize,
    ox: f64,
    oy: f64,
    u: f64,
    free: impl Fn(usize, usize) -> bool,
    points: &[(usize, (usize, usize))],
) {
    let cx = |x: usize| ox + (x as f64 + 0.5) * u;
    let cy = |y: usize| oy + (h - 1 - y) as f64 * u + 0.5 * u;
    for y in 0..h {
        for (a, b) in runs(w, |x| !free(x, y)) {
            let _ = writeln!(
                s,
                "<rect class=\"obstacle\" x=\"{:.1}\" y=\"{:.1}\" width=\"{:.1}\" height=\"{:.1}\" fill=\"#c8c8c8\"/>",
                ox + a as f64 * u,
                oy + (h - 1 - y) as f64 * u,
                (b - a + 1) as f64 * u,
                u
            );
        }
    }
    let stroke = (u * 0.35).max(1.0);
    for y in 0..h {
        for (a, b) in runs(w, |x| free(x, y)).into_iter().filter(|(a, b)| b > a) {
            let _ = writeln!(
                s,
                "<line class=\"bar\" x1=\"{0:.1}\" y1=\"{1:.1}\" x2=\"{2:.1}\" y2=\"{1:.1}\" stroke=\"#1f4e9c\" stroke-width=\"{stroke:.1}\"/>",
                cx(a),
                cy(y),
                cx(b)
            );
        }
    }
    for x in 0..w {
        for (a, b) in runs(h, |y| free(x, y)).into_iter().filter(|(a, b)| b > a) {
            let _ = writeln!(
                s,
                "<line class=\"segment\" x1=\"{0:.1}\" y1=\"{1:.1}\" x2=\"{0:.1}\" y2=\"{2:.1}\" stroke=\"black\" stroke-width=\"{3:.1}\"/>",
                cx(x),
                cy(a),
                cy(b),
                (stroke * 0.6).max(1.0)
            );
        }
    }
    for &(v, (x, y)) in points {
        let _ = writeln!(
            s,
            "<circle class=\"vertex\" cx=\"{:.1}\" cy=\"{:.1}\" r=\"{:.1}\" fill=\"black\"/>",
            cx(x),
            cy(y),
            (u * 0.45).max(2.0)
        );
        let _ = writeln!(
            s,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"{:.0}\" font-family=\"sans-serif\" fill=\"#b00\">{v}</text>",
            cx(x) + u * 0.5,
            cy(y) - u * 0.5,
            (u * 1.2).clamp(8.0, 14.0)
        );
    }
}

/// Axonometric view of the free points with their links, followed by one
/// panel per `z` slice.
pub fn render_gor3d(rep: &GridObstacleRep3D) -> String {
    let (w, h, d) = rep.extents;
    let u = unit(w + d / 2, h + d / 2, 4.0, 24.0);
    // cabinet projection: z recedes up and to the right at half scale
    let proj = |x: usize, y: usize, z: usize| {
        let (x, y, z) = (x as f64, y as f64, z as f64);
        (MARGIN + (x + 0.5 * z) * u, MARGIN + (h as f64 - 1.0 - y + 0.5 * (d as f64 - 1.0 - z)) * u)
    };
    let view_w = 2.0 * MARGIN + (w as f64 + 0.5 * d as f64) * u;
    let view_h = 2.0 * MARGIN + (h as f64 + 0.5 * d as f64) * u;
    let pu = (220.0 / w.max(h).max(1) as f64).clamp(2.0, 12.0);
    let per_row = ((view_w / (w as f64 * pu + MARGIN)).floor() as usize).max(1);
    let panel_rows = d.div_ceil(per_row);
    let panel_h = h as f64 * pu + 2.0 * MARGIN;
    let total_w = view_w.max(per_row as f64 * (w as f64 * pu + MARGIN) + MARGIN);
    let mut s = open(total_w, view_h + panel_rows as f64 * panel_h);
    let free = |x: usize, y: usize, z: usize| !rep.is_obstacle(x, y, z);
    s += "<g class=\"axonometric\">\n";
    for z in 0..d {
        for y in 0..h {
            for x in 0..w {
                if !free(x, y, z) {
                    continue;
                }
                for (nx, ny, nz) in [(x + 1, y, z), (x, y + 1, z), (x, y, z + 1)] {
                    if nx < w && ny < h && nz < d && free(nx, ny, nz) {
                        let (a, b) = (proj(x, y, z), proj(nx, ny, nz));
                        let _ = writeln!(
                            s,
                            "<line class=\"path\" x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>",
                            a.0, a.1, b.0, b.1
                        );
                    }
                }
            }
        }
    }
    for (v, &(x, y, z)) in rep.vertex_points.iter().enumerate() {
        let (px, py) = proj(x, y, z);
        let _ = writeln!(s, "<circle class=\"vertex\" cx=\"{px:.1}\" cy=\"{py:.1}\" r=\"{:.1}\" fill=\"black\"/>", (u * 0.3).max(2.0));
        let _ = writeln!(
            s,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\" font-family=\"sans-serif\" fill=\"#b00\">{v}</text>",
            px + 4.0,
            py - 4.0
        );
    }
    s += "</g>\n";
    for z in 0..d {
        let (col, row) = (z % per_row, z / per_row);
        let ox = MARGIN + col as f64 * (w as f64 * pu + MARGIN);
        let oy = view_h + row as f64 * panel_h + MARGIN;
        let _ = writeln!(s, "<g class=\"slice\" data-z=\"{z}\">");
        let _ = writeln!(
            s,
            "<text x=\"{ox:.1}\" y=\"{:.1}\" font-size=\"10\" font-family=\"sans-serif\">z={z}</text>",
            oy - 2.0
        );
        let points: Vec<(usize, (usize, usize))> =
            rep.vertex_points.iter().enumerate().filter(|(_, p)| p.2 == z).map(|(v, p)| (v, (p.0, p.1))).collect();
        grid_panel(&mut s, w, h, ox, oy, pu, |x, y| free(x, y, z), &points);
        s += "</g>\n";
    }
    s + "</svg>\n"
}

/// Polygon interior on a dark background, with end cells, spiral outlines,
/// tails, corner crosses and, if given, guards.
pub fn render_polygon(p: &OrthoPolygon, guards: Option<&[Cell]>) -> String {
    let u = unit(p.width, p.height, 2.0, 20.0);
    let mut s = open(p.width as f64 * u, p.height as f64 * u);
    let top = |y: usize| (p.height - 1 - y) as f64 * u;
    let center = |(x, y): Cell| ((x as f64 + 0.5) * u, top(y) + 0.5 * u);
    let _ = writeln!(
        s,
        "<rect class=\"outside\" x=\"0\" y=\"0\" width=\"{:.1}\" height=\"{:.1}\" fill=\"#555\"/>",
        p.width as f64 * u,
        p.height as f64 * u
    );
    for y in 0..p.height {
        for (a, b) in runs(p.width, |x| p.contains((x, y))) {
            let _ = writeln!(
                s,
                "<rect class=\"interior\" x=\"{:.1}\" y=\"{:.1}\" width=\"{:.1}\" height=\"{u:.1}\" fill=\"white\"/>",
                a as f64 * u,
                top(y),
                (b - a + 1) as f64 * u
            );
        }
    }
    for sp in &p.spirals {
        let mut pts = vec![center(sp.attachment())];
        pts.extend(sp.cells().into_iter().map(center));
        let list: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.1},{y:.1}")).collect();
        let _ = writeln!(
            s,
            "<polyline class=\"spiral\" points=\"{}\" fill=\"none\" stroke=\"#2a7\" stroke-width=\"{:.1}\"/>",
            list.join(" "),
            (u * 0.2).max(1.0)
        );
        let (tx, ty) = sp.tail;
        let _ = writeln!(
            s,
            "<rect class=\"tail\" x=\"{:.1}\" y=\"{:.1}\" width=\"{u:.1}\" height=\"{u:.1}\" fill=\"#f5c542\"/>",
            tx as f64 * u,
            top(ty)
        );
        let (cx, cy) = center(sp.cross);
        let r = u * 0.4;
        let _ = writeln!(
            s,
            "<path class=\"cross\" d=\"M{:.1},{:.1}L{:.1},{:.1}M{:.1},{:.1}L{:.1},{:.1}\" stroke=\"#c00\" stroke-width=\"{:.1}\"/>",
            cx - r,
            cy - r,
            cx + r,
            cy + r,
            cx - r,
            cy + r,
            cx + r,
            cy - r,
            (u * 0.15).max(1.0)
        );
    }
    for (v, &c) in p.end_pixels.iter().enumerate() {
        let (cx, cy) = center(c);
        let _ = writeln!(s, "<circle class=\"end\" data-vertex=\"{v}\" cx=\"{cx:.1}\" cy=\"{cy:.1}\" r=\"{:.1}\" fill=\"black\"/>", u * 0.45);
    }
    for &g in guards.unwrap_or(&[]) {
        let (cx, cy) = center(g);
        let _ = writeln!(
            s,
            "<circle class=\"guard\" cx=\"{cx:.1}\" cy=\"{cy:.1}\" r=\"{:.1}\" fill=\"none\" stroke=\"#06c\" stroke-width=\"{:.1}\"/>",
            u * 0.7,
            (u * 0.15).max(1.0)
        );
    }
    s + "</svg>\n"
}

/// Renders guards alone as a scatter on a bounding grid.
fn render_guards(guards: &[Cell]) -> String {
    let w = guards.iter().map(|g| g.0 + 1).max().unwrap_or(1);
    let h = guards.iter().map(|g| g.1 + 1).max().unwrap_or(1);
    let mut p = OrthoPolygon::new(1, w, h);
    p.end_pixels.clear();
    render_polygon(&p, Some(guards))
}

pub fn render_artifact(a: &Artifact) -> String {
    match a {
        Artifact::Graph(f) => render_graph(&f.graph),
        Artifact::Visibility(r) => render_visibility(r),
        Artifact::Grid2D(r) => render_gor2d(r),
        Artifact::Grid3D(r) => render_gor3d(r),
        Artifact::Polygon(p) => render_polygon(p, None),
        Artifact::Guards(g) => render_guards(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::guarding::build_sguard_polygon_auto;
    use crate::obstacle::{build_gor2d, build_gor2d_nonblocking, build_gor3d};
    use crate::visibility::{hh_visibility_rep, special_visibility_rep};

    fn count(doc: &roxmltree::Document, class: &str) -> usize {
        doc.descendants().filter(|n| n.attribute("class") == Some(class)).count()
    }

    #[test]
    fn single_edge_grid_elements() {
        let g = Graph::path(2);
        let svg = render_gor2d(&build_gor2d(&special_visibility_rep(&g).unwrap()));
        let doc = roxmltree::Document::parse(&svg).unwrap();
        assert_eq!(count(&doc, "bar"), 2);
        assert_eq!(count(&doc, "segment"), 1);
        assert_eq!(count(&doc, "vertex"), 2);
    }

    #[test]
    fn k4_3d_is_well_formed() {
        let svg = render_gor3d(&build_gor3d(&Graph::complete(4)));
        let doc = roxmltree::Document::parse(&svg).unwrap();
        assert_eq!(count(&doc, "slice"), 9);
    }

    #[test]
    fn c4_polygon_has_eight_spirals() {
        let g = Graph::cycle(4);
        let part = g.bipartition().unwrap();
        let rep = build_gor2d_nonblocking(&hh_visibility_rep(&g, &part).unwrap());
        let p = build_sguard_polygon_auto(&rep, &g, &part).unwrap();
        let svg = render_polygon(&p, Some(&[(0, 0)]));
        let doc = roxmltree::Document::parse(&svg).unwrap();
        assert_eq!(count(&doc, "spiral"), 8);
        assert_eq!(count(&doc, "end"), 4);
        assert_eq!(count(&doc, "guard"), 1);
    }

    #[test]
    fn graphs_and_labels_escape() {
        let g = Graph::complete(5).with_labels((0..5).map(|i| format!("<v{i}&>")).collect()).unwrap();
        roxmltree::Document::parse(&render_graph(&g)).unwrap();
        roxmltree::Document::parse(&render_graph(&Graph::empty(0))).unwrap();
        roxmltree::Document::parse(&render_visibility(&special_visibility_rep(&Graph::cycle(5)).unwrap())).unwrap();
    }
}
