//! Command-line front end: generate graphs, build and verify grid-obstacle
//! representations, build and solve guarding polygons, and render SVG.
//!
//! Exit status is 0 on success, 1 when a verification fails, and 2 for
//! usage errors or unreadable input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gridobs::guarding::{
    build_sguard_polygon, build_sguard_polygon_auto, check_reduction, min_sguards_exact, DEFAULT_BUDGET,
};
use gridobs::io::{self, Artifact, GraphFile};
use gridobs::monotone::{through_traffic, verify_representation, ObstacleGrid, Report};
use gridobs::obstacle::{build_gor2d, build_gor2d_nonblocking, build_gor3d, build_gor3d_nonblocking};
use gridobs::visibility::{hh_visibility_rep, special_visibility_rep};
use gridobs::{generate, svg, Bipartition, Graph};

#[derive(Parser)]
#[command(name = "gridobs", version, about = "Grid-obstacle representations and staircase guarding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random or structured graph
    Gen {
        #[arg(long, value_enum, default_value = "planar")]
        kind: Kind,
        /// Vertex count (side A size for complete-bipartite and bipartite)
        #[arg(short, long, default_value_t = 10)]
        n: usize,
        /// Side B size for complete-bipartite and bipartite
        #[arg(long, default_value_t = 0)]
        b: usize,
        /// Edge probability for gnp and bipartite
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blocking 2D representation of a planar graph
    Gor2d(BuildArgs),
    /// Non-blocking 2D representation of a planar bipartite graph
    #[command(name = "gor2d-nb")]
    Gor2dNb(BuildArgs),
    /// Blocking 3D representation of any graph
    Gor3d(BuildArgs),
    /// Non-blocking 3D representation of a bipartite graph
    #[command(name = "gor3d-nb")]
    Gor3dNb(BuildArgs),
    /// Compare the graph a representation induces with a graph file
    Verify {
        rep: PathBuf,
        graph: PathBuf,
        /// Treat other vertex points as obstacles
        #[arg(long, conflicts_with = "non_blocking")]
        blocking: bool,
        /// Let paths pass through other vertex points
        #[arg(long)]
        non_blocking: bool,
    },
    /// Guarding polygon of a planar bipartite graph
    Reduce {
        graph: PathBuf,
        /// Cells per grid unit; raised automatically when omitted
        #[arg(long)]
        resolution: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum staircase guards of a polygon
    SolveSguard {
        polygon: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the guard optimum of a graph's polygon with 2|E| plus its domination number
    CheckReduction {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Render any artifact as SVG
    Render {
        input: PathBuf,
        /// Guard file to overlay on a polygon
        #[arg(long)]
        guards: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct BuildArgs {
    graph: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip the monotone-path check of the result
    #[arg(long)]
    no_verify: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Planar,
    PlanarBipartite,
    Gnp,
    Bipartite,
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
}

enum Failure {
    /// Bad arguments or unreadable input.
    Usage(String),
    /// A check ran and failed.
    Invalid(String),
}

impl From<gridobs::Error> for Failure {
    fn from(e: gridobs::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<GraphFile, Failure> {
    io::parse_graph(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Bipartition from the file, or computed when the file has none.
fn bipartition(f: &GraphFile) -> Result<Bipartition, Failure> {
    match &f.part {
        Some(p) => Ok(p.clone()),
        None => Ok(f.graph.bipartition()?),
    }
}

fn print_report(report: &Report) -> Outcome {
    for (u, v) in &report.missing {
        eprintln!("missing edge {u} {v}");
    }
    for (u, v) in &report.spurious {
        eprintln!("spurious edge {u} {v}");
    }
    if report.is_valid() {
        eprintln!("verified: induced graph equals input");
        Ok(())
    } else {
        Err(Failure::Invalid(format!(
            "{} missing and {} spurious edges",
            report.missing.len(),
            report.spurious.len()
        )))
    }
}

fn build<R: ObstacleGrid>(args: &BuildArgs, g: &Graph, rep: &R, text: String) -> Outcome {
    emit(args.out.as_deref(), &text)?;
    if args.no_verify {
        return Ok(());
    }
    print_report(&verify_representation(rep, g)?)
}

fn generate(kind: Kind, n: usize, b: usize, p: f64, seed: u64) -> Result<(Graph, Option<Bipartition>), Failure> {
    let bip = |g: Graph| {
        let part = g.bipartition().expect("bipartite by construction");
        (g, Some(part))
    };
    Ok(match kind {
        Kind::Planar => (generate::random_planar(n, seed), None),
        Kind::PlanarBipartite => {
            let (g, part) = generate::random_planar_bipartite(n, seed);
            (g, Some(part))
        }
        Kind::Gnp => (generate::random_gnp(n, p, seed), None),
        Kind::Bipartite => {
            let (g, part) = generate::random_bipartite(n, b, p, seed);
            (g, Some(part))
        }
        Kind::Complete => (Graph::complete(n), None),
        Kind::CompleteBipartite => bip(Graph::complete_bipartite(n, b)),
        Kind::Path => bip(Graph::path(n)),
        Kind::Cycle if n >= 3 => {
            let g = Graph::cycle(n);
            let part = g.bipartition().ok();
            (g, part)
        }
        Kind::Cycle => return Err(Failure::Usage("a cycle needs at least 3 vertices".into())),
    })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { kind, n, b, p, seed, out } => {
            let (g, part) = generate(kind, n, b, p, seed)?;
            emit(out.as_deref(), &io::write_graph(&g, part.as_ref()))
        }
        Command::Gor2d(args) => {
            let g = read_graph(&args.graph)?.graph;
            let rep = build_gor2d(&special_visibility_rep(&g)?);
            build(&args, &g, &rep, io::write_gor2d(&rep))
        }
        Command::Gor2dNb(args) => {
            let f = read_graph(&args.graph)?;
            let part = bipartition(&f)?;
            let rep = build_gor2d_nonblocking(&hh_visibility_rep(&f.graph, &part)?);
            build(&args, &f.graph, &rep, io::write_gor2d(&rep))?;
            if !args.no_verify {
                let through = through_traffic(&rep);
                if !through.is_empty() {
                    return Err(Failure::Invalid(format!("paths run through vertex points {through:?}")));
                }
            }
            Ok(())
        }
        Command::Gor3d(args) => {
            let g = read_graph(&args.graph)?.graph;
            let rep = build_gor3d(&g);
            build(&args, &g, &rep, io::write_gor3d(&rep))
        }
        Command::Gor3dNb(args) => {
            let f = read_graph(&args.graph)?;
            let part = bipartition(&f)?;
            let rep = build_gor3d_nonblocking(&f.graph, &part)?;
            build(&args, &f.graph, &rep, io::write_gor3d(&rep))
        }
        Command::Verify { rep, graph, blocking, non_blocking } => {
            let g = read_graph(&graph)?.graph;
            let text = read(&rep)?;
            let mode = blocking.then_some(true).or(non_blocking.then_some(false));
            let artifact = io::parse_artifact(&text).map_err(|e| Failure::Usage(format!("{}: {e}", rep.display())))?;
            let report = match artifact {
                Artifact::Grid2D(mut r) => {
                    r.blocking = mode.unwrap_or(r.blocking);
                    verify_representation(&r, &g)?
                }
                Artifact::Grid3D(mut r) => {
                    r.blocking = mode.unwrap_or(r.blocking);
                    verify_representation(&r, &g)?
                }
                _ => return Err(Failure::Usage(format!("{} is not a gor2d or gor3d file", rep.display()))),
            };
            print_report(&report)
        }
        Command::Reduce { graph, resolution, out } => {
            let f = read_graph(&graph)?;
            let part = bipartition(&f)?;
            let rep = build_gor2d_nonblocking(&hh_visibility_rep(&f.graph, &part)?);
            let poly = match resolution {
                Some(r) => build_sguard_polygon(&rep, &f.graph, &part, r)?,
                None => build_sguard_polygon_auto(&rep, &f.graph, &part)?,
            };
            emit(out.as_deref(), &io::write_polygon(&poly))
        }
        Command::SolveSguard { polygon, budget, out } => {
            let text = read(&polygon)?;
            let poly = io::parse_polygon(&text).map_err(|e| Failure::Usage(format!("{}: {e}", polygon.display())))?;
            let sol = match min_sguards_exact(&poly, budget) {
                Err(gridobs::Error::BudgetExceeded { lower, upper }) => {
                    return Err(Failure::Invalid(format!("budget exhausted; optimum in [{lower}, {upper}]")))
                }
                other => other?,
            };
            if sol.cell_restricted {
                eprintln!("optimum among cell-centre guards: {}", sol.size());
            } else {
                eprintln!("optimum: {}", sol.size());
            }
            emit(out.as_deref(), &io::write_guards(&sol.guards))
        }
        Command::CheckReduction { graph, budget } => {
            let f = read_graph(&graph)?;
            let part = bipartition(&f)?;
            let report = check_reduction(&f.graph, &part, budget)?;
            println!("{report}");
            match report.holds() {
                Some(true) => Ok(()),
                Some(false) => Err(Failure::Invalid("identity violated".into())),
                None => Err(Failure::Invalid("solver budget exhausted".into())),
            }
        }
        Command::Render { input, guards, out } => {
            let text = read(&input)?;
            let artifact = io::parse_artifact(&text).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            let doc = match (&artifact, guards) {
                (Artifact::Polygon(p), Some(path)) => {
                    let g = io::parse_guards(&read(&path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    svg::render_polygon(p, Some(&g))
                }
                (_, Some(_)) => return Err(Failure::Usage("--guards applies to polygons only".into())),
                (a, None) => svg::render_artifact(a),
            };
            emit(out.as_deref(), &doc)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("invalid: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
