//! `cayley` — exact censuses, limit cycles, orbit fans, Chow polytopes,
//! and oracle verification for Cayley structures on lattice point
//! configurations.
//!
//! Input is a JSON document with `format_version`, `points` (integer
//! vectors, entries as numbers or decimal strings), and optional `labels`.
//! Output is a deterministic JSON document on stdout or `--output`; all
//! integers and rationals are serialized as decimal strings. Exit codes:
//! 0 on success, 1 on a domain error, 2 on malformed input.

mod document;
mod svg;

use cayley_core::matrix::Int;
use cayley_core::polytope::PointConfiguration;
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "cayley", version, about = "Exact toolkit for Cayley structures and rational curves in toric varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, clap::Args)]
struct CommonArgs {
    /// Input configuration file (JSON)
    #[arg(long)]
    input: PathBuf,
    /// Write the output document here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, clap::Args)]
struct StructureArgs {
    /// Degree of the Cayley structures
    #[arg(long)]
    degree: i64,
    /// Structure selector: class hash (hex) or index into `enumerate`
    #[arg(long)]
    structure: String,
}

#[derive(Subcommand)]
enum Command {
    /// List the faces of the configuration by dimension
    Faces {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Enumerate all Cayley structure classes of the given degree on every face
    Enumerate {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        degree: i64,
    },
    /// Census of Hilbert-scheme components: maximal smooth primitive classes
    Census {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        degree: i64,
    },
    /// Classify one structure: primitive / cuspidal / nodal / smooth
    Classify {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        sel: StructureArgs,
    },
    /// Limit one-cycle of a structure under a one-parameter subgroup
    Limit {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        sel: StructureArgs,
        /// One-parameter subgroup, e.g. "-1,-1,-1"
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// Seed for the linear forms entering the torus translates
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Orbit fan of the structure in the Chow variety
    Fan {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        sel: StructureArgs,
        /// Optional SVG output; requires 2-dimensional data after projection
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Integer projection matrix, rows separated by ';', e.g. "1,0,0;0,0,1"
        #[arg(long, allow_hyphen_values = true)]
        projection: Option<String>,
    },
    /// Chow polytope of the structure
    Chow {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        sel: StructureArgs,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        projection: Option<String>,
    },
    /// Conic machinery: matroid polytope and refined Hilbert fan (degree 2)
    Conics {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        sel: StructureArgs,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        projection: Option<String>,
    },
    /// Verify the combinatorial classification with the exact curve oracle
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        sel: StructureArgs,
        /// Base seed; three consecutive seeds are used
        #[arg(long, default_value_t = 100)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Malformed(msg)) => {
            eprintln!("error: malformed input: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

pub enum AppError {
    Malformed(String),
    Domain(String),
}

impl From<cayley_core::Error> for AppError {
    fn from(e: cayley_core::Error) -> Self {
        AppError::Domain(e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Faces { common } => {
            let cfg = load_configuration(&common.input)?;
            let doc = document::faces_document(&cfg);
            document::write_output(&doc, common.output.as_deref())
        }
        Command::Enumerate { common, degree } => {
            let cfg = load_configuration(&common.input)?;
            let doc = document::enumerate_document(&cfg, check_degree(degree)?)?;
            document::write_output(&doc, common.output.as_deref())
        }
        Command::Census { common, degree } => {
            let cfg = load_configuration(&common.input)?;
            let doc = document::census_document(&cfg, check_degree(degree)?)?;
            document::write_output(&doc, common.output.as_deref())
        }
        Command::Classify { common, sel } => {
            let cfg = load_configuration(&common.input)?;
            let pi = document::select_structure(&cfg, check_degree(sel.degree)?, &sel.structure)?;
            let doc = document::classify_document(&pi)?;
            document::write_output(&doc, common.output.as_deref())
        }
        Command::Limit { common, sel, v, seed } => {
            let cfg = load_configuration(&common.input)?;
            let pi = document::select_structure(&cfg, check_degree(sel.degree)?, &sel.structure)?;
            let v = parse_vector(&v, cfg.ambient_rank())?;
            let doc = document::limit_document(&pi, &v, seed)?;
            document::write_output(&doc, common.output.as_deref())
        }
        Command::Fan { common, sel, svg, projection } => {
            let cfg = load_configuration(&common.input)?;
            let pi = document::select_structure(&cfg, check_degree(sel.degree)?, &sel.structure)?;
            let (doc, fan) = document::fan_document(&pi)?;
            if let Some(path) = svg {
                let proj = parse_projection(projection.as_deref(), cfg.ambient_rank())?;
                svg::emit_fan(&fan, proj.as_ref(), &path)?;
            }
            document::write_output(&doc, common.output.as_deref())
        }
        Command::Chow { common, sel, svg, projection } => {
            let cfg = load_configuration(&common.input)?;
            let pi = document::select_structure(&cfg, check_degree(sel.degree)?, &sel.structure)?;
            let (doc, poly) = document::chow_document(&pi)?;
            if let Some(path) = svg {
                let proj = parse_projection(projection.as_deref(), cfg.ambient_rank())?;
                svg::emit_polytope(&poly, proj.as_ref(), &path)?;
            }
            document::write_output(&doc, common.output.as_deref())
        }
        Command::Conics { common, sel, svg, projection } => {
            let cfg = load_configuration(&common.input)?;
            let pi = document::select_structure(&cfg, check_degree(sel.degree)?, &sel.structure)?;
            let (doc, poly) = document::conics_document(&pi)?;
            if let Some(path) = svg {
                let proj = parse_projection(projection.as_deref(), cfg.ambient_rank())?;
                svg::emit_polytope(&poly, proj.as_ref(), &path)?;
            }
            document::write_output(&doc, common.output.as_deref())
        }
        Command::Verify { common, sel, seed } => {
            let cfg = load_configuration(&common.input)?;
            let pi = document::select_structure(&cfg, check_degree(sel.degree)?, &sel.structure)?;
            let doc = document::verify_document(&pi, seed)?;
            document::write_output(&doc, common.output.as_deref())
        }
    }
}

fn check_degree(d: i64) -> Result<Int, AppError> {
    if d < 1 {
        return Err(AppError::Domain(format!("degree must be positive, got {d}")));
    }
    Ok(Int::from(d))
}

fn parse_vector(s: &str, expect: usize) -> Result<Vec<Int>, AppError> {
    let parts: Result<Vec<Int>, _> = s.split(',').map(|p| p.trim().parse::<Int>()).collect();
    let v = parts.map_err(|e| AppError::Malformed(format!("vector {s:?}: {e}")))?;
    if v.len() != expect {
        return Err(AppError::Malformed(format!(
            "vector {s:?} has {} entries, expected {expect}",
            v.len()
        )));
    }
    Ok(v)
}

fn parse_projection(
    s: Option<&str>,
    ambient: usize,
) -> Result<Option<cayley_core::IntMatrix>, AppError> {
    let Some(s) = s else { return Ok(None) };
    let rows: Result<Vec<Vec<Int>>, AppError> =
        s.split(';').map(|row| parse_vector(row, ambient)).collect();
    let rows = rows?;
    Ok(Some(cayley_core::IntMatrix::from_rows(rows, ambient)))
}

fn load_configuration(path: &std::path::Path) -> Result<Arc<PointConfiguration>, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Malformed(format!("{}: {e}", path.display())))?;
    document::parse_configuration(&text)
}
