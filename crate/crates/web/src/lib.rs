//! Browser bindings for the demo page in `www/`.
//!
//! Each operation takes an optional edge list (the native graph format);
//! when it is blank a random graph is generated from `n` and `seed`.

use gridobs::domination::min_dominating_set;
use gridobs::guarding::{build_sguard_polygon_auto, guards_from_dominating_set, min_sguards_exact};
use gridobs::io;
use gridobs::monotone::verify_representation;
use gridobs::obstacle::{build_gor2d, build_gor2d_nonblocking, build_gor3d};
use gridobs::visibility::{hh_visibility_rep, special_visibility_rep};
use gridobs::{generate, svg, Bipartition, Graph};
use wasm_bindgen::prelude::*;

/// Polygons with at most this many cells are also solved exactly.
const EXACT_CELL_LIMIT: usize = 1500;

#[wasm_bindgen]
pub struct Demo {
    svg: String,
    summary: String,
    dump: String,
}

#[wasm_bindgen]
impl Demo {
    #[wasm_bindgen(getter)]
    pub fn svg(&self) -> String {
        self.svg.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn summary(&self) -> String {
        self.summary.clone()
    }

    /// The artifact in its text format.
    #[wasm_bindgen(getter)]
    pub fn dump(&self) -> String {
        self.dump.clone()
    }
}

fn parse_or(edge_list: &str, fallback: impl FnOnce() -> Graph) -> Result<(Graph, Option<Bipartition>), String> {
    if edge_list.trim().is_empty() {
        return Ok((fallback(), None));
    }
    let f = io::parse_graph(edge_list).map_err(|e| e.to_string())?;
    Ok((f.graph, f.part))
}

fn verdict(missing: usize, spurious: usize) -> String {
    if missing + spurious == 0 {
        "induced graph equals input".to_string()
    } else {
        format!("{missing} missing, {spurious} spurious edges")
    }
}

pub fn planar_grid_impl(edge_list: &str, n: usize, seed: u64) -> Result<Demo, String> {
    let (g, _) = parse_or(edge_list, || generate::random_planar(n, seed))?;
    let rep = build_gor2d(&special_visibility_rep(&g).map_err(|e| e.to_string())?);
    let report = verify_representation(&rep, &g).map_err(|e| e.to_string())?;
    Ok(Demo {
        svg: svg::render_gor2d(&rep),
        summary: format!(
            "n={} m={}: {}x{} grid, {} obstacle points; {}",
            g.n(),
            g.m(),
            rep.width,
            rep.height,
            rep.obstacle_count(),
            verdict(report.missing.len(), report.spurious.len())
        ),
        dump: io::write_gor2d(&rep),
    })
}

pub fn guarding_polygon_impl(edge_list: &str, n: usize, seed: u64) -> Result<Demo, String> {
    let (g, part) = parse_or(edge_list, || generate::random_planar_bipartite(n, seed).0)?;
    let part = match part {
        Some(p) => p,
        None => g.bipartition().map_err(|e| e.to_string())?,
    };
    let hh = hh_visibility_rep(&g, &part).map_err(|e| e.to_string())?;
    let rep = build_gor2d_nonblocking(&hh);
    let poly = build_sguard_polygon_auto(&rep, &g, &part).map_err(|e| e.to_string())?;
    let dom = min_dominating_set(&g);
    let constructive = guards_from_dominating_set(&poly, &dom).map_err(|e| e.to_string())?;
    let mut summary = format!(
        "|E|={} gamma={}: {} cells, {} guards from a minimum dominating set",
        g.m(),
        dom.len(),
        poly.cell_count(),
        constructive.size()
    );
    if poly.cell_count() <= EXACT_CELL_LIMIT {
        match min_sguards_exact(&poly, 200_000) {
            Ok(s) => summary += &format!("; exact optimum {} = 2*{}+{}", s.size(), g.m(), dom.len()),
            Err(e) => summary += &format!("; exact solve stopped: {e}"),
        }
    }
    Ok(Demo { svg: svg::render_polygon(&poly, Some(&constructive.guards)), summary, dump: io::write_polygon(&poly) })
}

pub fn grid_3d_impl(edge_list: &str, n: usize, p: f64, seed: u64) -> Result<Demo, String> {
    let (g, _) = parse_or(edge_list, || generate::random_gnp(n, p, seed))?;
    let rep = build_gor3d(&g);
    let report = verify_representation(&rep, &g).map_err(|e| e.to_string())?;
    let (x, y, z) = rep.extents;
    Ok(Demo {
        svg: svg::render_gor3d(&rep),
        summary: format!(
            "n={} m={}: {x}x{y}x{z} grid; {}",
            g.n(),
            g.m(),
            verdict(report.missing.len(), report.spurious.len())
        ),
        dump: io::write_gor3d(&rep),
    })
}

/// Blocking 2D representation of a planar graph.
#[wasm_bindgen]
pub fn planar_grid(edge_list: &str, n: usize, seed: u32) -> Result<Demo, JsError> {
    planar_grid_impl(edge_list, n, seed as u64).map_err(|e| JsError::new(&e))
}

/// Guarding polygon of a planar bipartite graph with the guards built from
/// a minimum dominating set.
#[wasm_bindgen]
pub fn guarding_polygon(edge_list: &str, n: usize, seed: u32) -> Result<Demo, JsError> {
    guarding_polygon_impl(edge_list, n, seed as u64).map_err(|e| JsError::new(&e))
}

/// Blocking 3D representation of an arbitrary graph.
#[wasm_bindgen]
pub fn grid_3d(edge_list: &str, n: usize, p: f64, seed: u32) -> Result<Demo, JsError> {
    grid_3d_impl(edge_list, n, p, seed as u64).map_err(|e| JsError::new(&e))
}
