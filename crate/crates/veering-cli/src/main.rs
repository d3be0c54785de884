//! Command-line front end: census validation, polynomial invariants, flow
//! graphs and batch scans.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use veering::flowgraph::{flow_graph, graphs_isomorphic, FlowGraph};
use veering::io::{parse_index_list, read_census_list, read_cycles, read_weights};
use veering::scan::SCAN_HEADER;
use veering::triangulation::{parse_census_string, Triangulation};
use veering::{
    census_scan, cusps, lower_veering_polynomial, rank_of_cover, taut_polynomial, teichmueller_polynomial,
    upper_veering_polynomial, ComputeError, LaurentPoly, Track, TransverseTaut, TriangulationError, Veering,
};

#[derive(Parser)]
#[command(name = "veering", version, about = "Polynomial invariants of veering triangulations")]
struct Cli {
    /// Polynomial output: readable text or exponent/coefficient pairs.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Pairs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Lower,
    Upper,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Check the triangulation and print its basic data.
    Validate { triangulation: String },
    /// Taut polynomial, of the maximal free abelian cover or of the cover
    /// killing the given cycles.
    Taut {
        triangulation: String,
        /// One face vector per line.
        #[arg(long)]
        cycles: Option<PathBuf>,
    },
    /// Veering polynomials, exact unless `--normalize` is given.
    Veering {
        triangulation: String,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
        #[arg(long)]
        normalize: bool,
    },
    /// Flow graphs as arrow lists; `=>` marks diagonal arrows.
    Flowgraph {
        triangulation: String,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
        /// Write Graphviz text to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Report whether the lower and upper flow graphs are isomorphic.
        #[arg(long)]
        compare: bool,
    },
    /// Taut polynomial after filling the listed cusps of a carried surface.
    Teich {
        triangulation: String,
        /// 2n face weights.
        #[arg(long)]
        weights: PathBuf,
        /// Comma separated cusp indices, as in `0,2`.
        #[arg(long, default_value = "")]
        fill: String,
    },
    /// Compute a summary row for every entry of a census file.
    Scan {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<TriangulationError> for Failure {
    fn from(e: TriangulationError) -> Self {
        use TriangulationError::*;
        match e {
            NotTaut { .. } | NotTransverse | NonOrientable | NotVeering | Boundary => Failure::Domain(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<ComputeError> for Failure {
    fn from(e: ComputeError) -> Self {
        match e {
            ComputeError::Triangulation(t) => t.into(),
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// A census string, or a file in the structured text format.
fn load(arg: &str) -> Result<TransverseTaut, Failure> {
    let (tri, taut) = if Path::new(arg).is_file() {
        Triangulation::parse_text(&read(Path::new(arg))?)?
    } else {
        parse_census_string(arg)?
    };
    Ok(TransverseTaut::recover(tri, taut)?)
}

fn show(p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Pairs => {
            let terms: Vec<String> = p
                .to_pairs()
                .into_iter()
                .map(|(e, c)| {
                    let e: Vec<String> = e.iter().map(i64::to_string).collect();
                    format!("[[{}],{c}]", e.join(","))
                })
                .collect();
            format!("[{}]", terms.join(","))
        }
    }
}

fn print_graph(label: &str, g: &FlowGraph) {
    println!("{label} flow graph: {} vertices, {} arrows", g.vertices, g.arrows.len());
    for &(a, b, diag) in &g.arrows {
        println!("  {a} {} {b}", if diag { "=>" } else { "->" });
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let fmt = cli.format;
    match cli.command {
        Command::Validate { triangulation } => {
            let tt = load(&triangulation)?;
            println!("tetrahedra {}", tt.size());
            println!("cusps {}", cusps(&tt).count);
            println!("rank {}", rank_of_cover(&tt, &[])?);
            match Veering::new(tt) {
                Ok(_) => println!("veering yes"),
                Err(e) => {
                    println!("veering no");
                    return Err(e.into());
                }
            }
        }
        Command::Taut { triangulation, cycles } => {
            let tt = load(&triangulation)?;
            let cycles = match cycles {
                Some(path) => read_cycles(&read(&path)?)?,
                None => Vec::new(),
            };
            println!("{}", show(&taut_polynomial(&tt, &cycles)?, fmt));
        }
        Command::Veering { triangulation, side, normalize } => {
            let v = Veering::new(load(&triangulation)?)?;
            let finish = |p: LaurentPoly| if normalize { p.normalize() } else { p };
            match side {
                Side::Lower => println!("{}", show(&finish(lower_veering_polynomial(&v)?), fmt)),
                Side::Upper => println!("{}", show(&finish(upper_veering_polynomial(&v)?), fmt)),
                Side::Both => {
                    println!("lower {}", show(&finish(lower_veering_polynomial(&v)?), fmt));
                    println!("upper {}", show(&finish(upper_veering_polynomial(&v)?), fmt));
                }
            }
        }
        Command::Flowgraph { triangulation, side, dot, compare } => {
            let v = Veering::new(load(&triangulation)?)?;
            let lower = flow_graph(&v, Track::Lower);
            let upper = flow_graph(&v, Track::Upper);
            let mut shown = Vec::new();
            if side != Side::Upper {
                shown.push(("lower", &lower));
            }
            if side != Side::Lower {
                shown.push(("upper", &upper));
            }
            for (label, g) in &shown {
                print_graph(label, g);
            }
            if let Some(path) = dot {
                let text: String = shown.iter().map(|(label, g)| g.to_dot(label)).collect();
                fs::write(&path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            if compare {
                let iso = graphs_isomorphic(&lower, &upper);
                println!("{}", if iso { "ISOMORPHIC" } else { "NON-ISOMORPHIC" });
            }
        }
        Command::Teich { triangulation, weights, fill } => {
            let tt = load(&triangulation)?;
            let w = read_weights(&read(&weights)?)?;
            let fill = parse_index_list(&fill)?;
            println!("{}", show(&teichmueller_polynomial(&tt, &w, &fill)?, fmt));
        }
        Command::Scan { file, out } => {
            let entries = read_census_list(&read(&file)?);
            let rows = census_scan(&entries);
            let csv_err = |e: csv::Error| Failure::Usage(format!("{}: {e}", out.display()));
            let mut writer = csv::Writer::from_path(&out).map_err(csv_err)?;
            writer.write_record(SCAN_HEADER).map_err(csv_err)?;
            for row in &rows {
                writer.write_record(row.record()).map_err(csv_err)?;
            }
            writer.flush().map_err(|e| Failure::Usage(format!("{}: {e}", out.display())))?;
            let flagged = rows.iter().filter(|r| r.flagged()).count();
            let failed = rows.iter().filter(|r| r.result.is_err()).count();
            println!("{} entries, {flagged} flagged, {failed} failed", rows.len());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
