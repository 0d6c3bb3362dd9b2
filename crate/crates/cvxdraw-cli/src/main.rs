//! Command line front end: construct the drawing families, verify and
//! classify drawing files, run Minkowski subset experiments, search for
//! drawings numerically, print family tables, and render SVGs.
//!
//! Exit codes: 0 success, 1 verification / classification / search failure,
//! 2 usage errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cvxdraw::constructions::{self, ConstructionParams};
use cvxdraw::drawing::{Drawing, DrawingClass};
use cvxdraw::geom::Convexity;
use cvxdraw::minkowski::{brute_force_largest, largest_convex_subset};
use cvxdraw::ops::ConvexityMode;
use cvxdraw::search::{find_drawing, SearchConfig, SearchStatus};
use cvxdraw::seeing::seeing_profile;
use cvxdraw::{io as fmt_io, Scalar};

#[derive(Parser)]
#[command(
    name = "cvxdraw",
    version,
    about = "Convex vertex/midpoint drawing toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Strict,
    Weak,
}

impl From<Mode> for ConvexityMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Strict => ConvexityMode::Strict,
            Mode::Weak => ConvexityMode::Weak,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Ln,
    Bn,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a drawing of a named family (cycle, complete-weak, k4e, k23, ln,
    /// bn, hk, pk) in the drawing text format.
    Construct {
        /// Family name.
        name: String,
        /// Size parameter (required by cycle, complete-weak, ln, bn, hk, pk).
        param: Option<usize>,
        /// Output file (`-` for stdout).
        #[arg(short, long, default_value = "-")]
        output: String,
        /// Denominator bound for rational circle points.
        #[arg(long, default_value_t = 1000)]
        den_bound: u64,
    },
    /// Check the coincidence-free invariants of a drawing file.
    Verify {
        /// Drawing file (`-` for stdin).
        file: String,
    },
    /// Print convexity statuses, class memberships, and the seeing profile.
    Classify {
        /// Drawing file (`-` for stdin).
        file: String,
    },
    /// Largest strictly/weakly convex subset of A + A for a point-set file.
    Minkowski {
        /// Point-set file with the set A (`-` for stdin).
        #[arg(long = "self")]
        self_file: String,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Also run the exhaustive oracle and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Numerical search for a drawing meeting a target class.
    Search {
        /// Graph file (`-` for stdin).
        #[arg(long)]
        graph: String,
        /// Target class code: two of s/w/a, vertices first (e.g. `sw`).
        #[arg(long)]
        target: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        restarts: u32,
        #[arg(long, default_value_t = 4000)]
        iterations: u32,
        #[arg(long, default_value_t = 0.6)]
        step: f64,
        #[arg(long, default_value_t = 0.9995)]
        cooling: f64,
        #[arg(long, default_value_t = 4096)]
        den_bound: u64,
    },
    /// Edge-count table for the ln/bn families with certification status.
    Table {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n_max: usize,
    },
    /// Render a drawing file as SVG.
    Svg {
        /// Drawing file (`-` for stdin).
        file: String,
        /// Output file (`-` for stdout).
        #[arg(short, long, default_value = "-")]
        output: String,
    },
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn write_output(path: &str, content: &str) -> Result<(), String> {
    if path == "-" {
        print!("{content}");
        Ok(())
    } else {
        std::fs::write(PathBuf::from(path), content).map_err(|e| format!("writing {path}: {e}"))
    }
}

fn level_name(level: Convexity) -> &'static str {
    match level {
        Convexity::Strict => "strict",
        Convexity::WeakNotStrict => "weak",
        Convexity::NonConvex => "non-convex",
    }
}

fn construct(name: &str, param: Option<usize>, den_bound: u64) -> Result<Drawing<Scalar>, String> {
    let params = ConstructionParams {
        circle_denominator_bound: den_bound,
        ..ConstructionParams::default()
    };
    let need = |what: &str| param.ok_or(format!("`{what}` needs a size parameter"));
    let result = match name {
        "cycle" => constructions::cycle_drawing(need("cycle")?, &params),
        "complete-weak" => constructions::complete_weak_drawing(need("complete-weak")?),
        "k4e" => constructions::k4_minus_e_drawing(),
        "k23" => constructions::k23_drawing(),
        "ln" => constructions::ln_drawing(need("ln")?, &params),
        "bn" => constructions::bn_drawing(need("bn")?, &params),
        "hk" => constructions::hk_drawing(need("hk")?, &params),
        "pk" => {
            let k = need("pk")?;
            match constructions::pk_drawing(k) {
                Ok(d) => Ok(d),
                Err(cvxdraw::Error::Unsupported(_)) => {
                    let (d, report) =
                        constructions::pk_drawing_float(k).map_err(|e| e.to_string())?;
                    eprintln!(
                        "note: k = {k} has no exact drawing here; float mode, midpoints within {:.3e} of the outer-midpoint polygon",
                        report.max_midpoint_boundary_distance
                    );
                    Ok(d)
                }
                Err(e) => Err(e),
            }
        }
        other => return Err(format!("unknown family `{other}`")),
    };
    result.map_err(|e| e.to_string())
}

fn cmd_classify(text: &str) -> Result<bool, String> {
    let d = fmt_io::read_drawing(text).map_err(|e| e.to_string())?;
    if let Err(violation) = d.validate() {
        println!("invalid: {violation}");
        return Ok(false);
    }
    let report = d.classify().map_err(|e| e.to_string())?;
    println!("n: {}", d.vertex_count());
    println!("m: {}", d.edge_count());
    println!("vertices: {}", level_name(report.vertex_level()));
    if let Some(w) = report.vertex_status.witness() {
        println!("vertex-witness: {} {}", w.x, w.y);
    }
    println!("midpoints: {}", level_name(report.midpoint_level()));
    if let Some(w) = report.midpoint_status.witness() {
        println!("midpoint-witness: {} {}", w.x, w.y);
    }
    let classes: Vec<String> = report
        .witnessed_classes()
        .iter()
        .map(|c| c.to_string())
        .collect();
    println!("witnesses: {}", classes.join(" "));
    match seeing_profile(&d) {
        Ok(p) => {
            println!(
                "seeing: n0={} n1={} n2={} n_many={} good={} doubly_exterior={}",
                p.n0, p.n1, p.n2, p.n_many, p.good_edges, p.doubly_exterior
            );
            let identity = if p.degenerate_midpoint_hull {
                "degenerate midpoint hull"
            } else if p.accounting_identity_holds(d.edge_count()) {
                "holds"
            } else {
                "fails"
            };
            println!("identity m = n1 + 2*n2 - good: {identity}");
            if !p.unseen_edges.is_empty() {
                let list: Vec<String> = p
                    .unseen_edges
                    .iter()
                    .map(|e| format!("({}, {})", e.0, e.1))
                    .collect();
                println!("unseen-edges: {}", list.join(" "));
            }
        }
        Err(_) => println!("seeing: unavailable (vertex set not weakly convex)"),
    }
    Ok(true)
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Construct {
            name,
            param,
            output,
            den_bound,
        } => {
            let d = construct(&name, param, den_bound)?;
            write_output(&output, &fmt_io::write_drawing(&d))?;
            Ok(true)
        }
        Command::Verify { file } => {
            let d = fmt_io::read_drawing(&read_input(&file)?).map_err(|e| e.to_string())?;
            match d.validate() {
                Ok(()) => {
                    println!("ok");
                    Ok(true)
                }
                Err(violation) => {
                    println!("invalid: {violation}");
                    Ok(false)
                }
            }
        }
        Command::Classify { file } => cmd_classify(&read_input(&file)?),
        Command::Minkowski {
            self_file,
            mode,
            oracle,
        } => {
            let a = fmt_io::read_point_set(&read_input(&self_file)?).map_err(|e| e.to_string())?;
            let sum = cvxdraw::minkowski::minkowski_sum(&a, &a);
            let mode = ConvexityMode::from(mode);
            let result = largest_convex_subset(&sum, mode).map_err(|e| e.to_string())?;
            println!("points-in-sum: {}", sum.len());
            println!("size: {}", result.size);
            println!("witness:");
            for p in &result.witness {
                println!("{} {}", p.x, p.y);
            }
            if oracle {
                let bf = brute_force_largest(&sum, mode).map_err(|e| e.to_string())?;
                if bf.size == result.size {
                    println!("oracle: agrees (size {})", bf.size);
                } else {
                    println!(
                        "oracle: MISMATCH dp={} brute-force={}",
                        result.size, bf.size
                    );
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Command::Search {
            graph,
            target,
            seed,
            restarts,
            iterations,
            step,
            cooling,
            den_bound,
        } => {
            let g = fmt_io::read_graph(&read_input(&graph)?).map_err(|e| e.to_string())?;
            let target = DrawingClass::parse(&target).map_err(|e| e.to_string())?;
            let config = SearchConfig {
                restarts,
                iterations,
                initial_step: step,
                cooling,
                denominator_bound: den_bound,
                seed,
            };
            let outcome = find_drawing(&g, target, &config).map_err(|e| e.to_string())?;
            match outcome.status {
                SearchStatus::Certified(d) => {
                    eprintln!(
                        "certified after {} restart(s); target {target}",
                        outcome.restarts_used
                    );
                    print!("{}", fmt_io::write_drawing(&d));
                    Ok(true)
                }
                SearchStatus::Failed { best_penalty, .. } => {
                    eprintln!(
                        "failed: best penalty {best_penalty:.6e} over {} restart(s); target {target}",
                        outcome.restarts_used
                    );
                    Ok(false)
                }
            }
        }
        Command::Table { family, n_max } => {
            let params = ConstructionParams::default();
            println!("family n m expected certified");
            match family {
                Family::Ln => {
                    for n in 2..=n_max {
                        let expected = 2 * n - 3;
                        match constructions::ln_drawing(n, &params) {
                            Ok(d) => println!(
                                "ln {n} {} {expected} {}",
                                d.edge_count(),
                                if d.edge_count() == expected {
                                    "yes"
                                } else {
                                    "no"
                                }
                            ),
                            Err(e) => println!("ln {n} - {expected} error:{e}"),
                        }
                    }
                }
                Family::Bn => {
                    for n in (3..=n_max).step_by(2) {
                        let expected = 3 * (n - 1) / 2;
                        match constructions::bn_drawing(n, &params) {
                            Ok(d) => println!(
                                "bn {n} {} {expected} {}",
                                d.edge_count(),
                                if d.edge_count() == expected {
                                    "yes"
                                } else {
                                    "no"
                                }
                            ),
                            Err(e) => println!("bn {n} - {expected} error:{e}"),
                        }
                    }
                }
            }
            Ok(true)
        }
        Command::Svg { file, output } => {
            let d = fmt_io::read_drawing(&read_input(&file)?).map_err(|e| e.to_string())?;
            let svg = cvxdraw::svg::render(&d).map_err(|e| e.to_string())?;
            write_output(&output, &svg)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
