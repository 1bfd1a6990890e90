//! The `subspace-lrc` command line: `construct`, `analyze`, `verify` and
//! `repair`.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or
//! parameter error, 3 inconsistent data.

mod commands;
mod suite;

pub use suite::{CheckOutcome, CheckStatus, VerificationSuite};

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arraycode::{
    construction_all_subspaces, construction_from_blocks, construction_spread_with, construction_std, ArrayCode,
    Provenance, StdScope,
};
use crate::designs::dump::parse_design;
use crate::designs::SpreadMethod;
use crate::gf::{parse_descriptor, FieldContext};
use crate::{Error, Limits, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "subspace-lrc",
    version,
    about = "Array codes built from subspaces: construction, analysis, verification and repair",
    after_help = "Ties are always broken by the lexicographically first choice: thick columns use \
                  RREF bases, recovery sets are searched by size and then in lexicographic order, \
                  and designs list blocks in canonical order. The SUBSPACE_LRC_LIMIT environment \
                  variable overrides the enumeration and exhaustive-scan limits."
)]
pub struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Cap on enumerated subspaces and scanned codewords.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub limit: Option<u64>,
    /// Cap on candidate recovery sets for exact availability packing.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub packing_limit: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and write its bundle file.
    Construct {
        #[command(flatten)]
        spec: ConstructionArgs,
        /// Bundle destination; printed to stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the underlying design (spread or transversal design).
        #[arg(long)]
        design_out: Option<PathBuf>,
    },
    /// Report distance, weights, MDS, perfectness and locality of a bundle.
    Analyze {
        /// Code bundle written by `construct`.
        bundle: PathBuf,
        #[command(flatten)]
        toggles: Toggles,
        /// Write the code report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Write the locality report here instead of stdout.
        #[arg(long)]
        locality_report: Option<PathBuf>,
    },
    /// Check every applicable property against its closed form.
    Verify {
        #[command(flatten)]
        spec: OptionalConstruction,
        /// Verify a design dump instead of a code.
        #[arg(long, conflicts_with_all = ["construction", "bundle"])]
        design: Option<PathBuf>,
        /// Verify a code bundle.
        #[arg(long, conflicts_with = "construction")]
        bundle: Option<PathBuf>,
    },
    /// Rebuild an erased column of a codeword from a minimal recovery set.
    Repair {
        /// Code bundle written by `construct`.
        #[arg(long)]
        bundle: PathBuf,
        /// Codeword array in the matrix text format (b rows, n columns).
        #[arg(long)]
        codeword: PathBuf,
        /// Index of the erased column, from 0.
        #[arg(long)]
        column: usize,
        /// Compare the rebuilt column with the one in the codeword file.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructionName {
    AllSubspaces,
    Spread,
    StdPar,
    StdFull,
    Blocks,
}

#[derive(Debug, Clone, Args)]
pub struct ConstructionArgs {
    /// Field, as gf(p), gf(p^m) or gf(q).
    #[arg(long, default_value = "gf(2)")]
    pub field: String,
    #[arg(long, value_enum)]
    pub construction: ConstructionName,
    #[command(flatten)]
    pub params: ConstructionParams,
}

#[derive(Debug, Clone, Args)]
pub struct OptionalConstruction {
    #[arg(long, default_value = "gf(2)")]
    pub field: String,
    #[arg(long, value_enum)]
    pub construction: Option<ConstructionName>,
    #[command(flatten)]
    pub params: ConstructionParams,
}

#[derive(Debug, Clone, Args)]
pub struct ConstructionParams {
    /// Ambient dimension (the code dimension).
    #[arg(long = "M", short = 'M')]
    pub m: Option<usize>,
    /// Rows per codeword column (block dimension).
    #[arg(long, short = 'b')]
    pub b: Option<usize>,
    /// Transversal design strength.
    #[arg(long, short = 't', default_value_t = 1)]
    pub t: usize,
    /// Parallel class used by std-par.
    #[arg(long, default_value_t = 0)]
    pub class: usize,
    /// Spread construction method.
    #[arg(long, default_value = "gabidulin-echelon")]
    pub method: String,
    /// Design dump supplying the blocks for `--construction blocks`.
    #[arg(long)]
    pub blocks: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, Default, Args)]
pub struct Toggles {
    /// Minimum distance and the MDS test.
    #[arg(long)]
    pub distance: bool,
    /// Weight distribution.
    #[arg(long)]
    pub weights: bool,
    /// Symbol and node locality with one witness per target.
    #[arg(long)]
    pub locality: bool,
    /// Symbol and node availability (implies --locality).
    #[arg(long)]
    pub availability: bool,
    /// The same report for the dual code.
    #[arg(long)]
    pub dual: bool,
    /// Radius-one ball size and the perfectness ratio.
    #[arg(long)]
    pub perfectness: bool,
    /// Everything above.
    #[arg(long)]
    pub all: bool,
}

impl Toggles {
    /// With no flags, distance, weights and perfectness are reported.
    pub fn resolved(self) -> Toggles {
        if self.all {
            return Toggles {
                distance: true,
                weights: true,
                locality: true,
                availability: true,
                dual: true,
                perfectness: true,
                all: true,
            };
        }
        let none = !(self.distance || self.weights || self.locality || self.availability || self.dual || self.perfectness);
        if none {
            return Toggles {
                distance: true,
                weights: true,
                perfectness: true,
                ..self
            };
        }
        Toggles {
            locality: self.locality || self.availability,
            ..self
        }
    }
}

/// A validated construction request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    AllSubspaces { m: usize, b: usize },
    Spread { m: usize, b: usize, method: SpreadMethod },
    StdPar { t: usize, b: usize, m: usize, class: usize },
    StdFull { t: usize, b: usize, m: usize },
    Blocks { path: PathBuf },
}

impl Construction {
    pub fn from_args(name: ConstructionName, p: &ConstructionParams) -> Result<Self> {
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| Error::BadParams(format!("--{flag} is required for this construction")))
        };
        Ok(match name {
            ConstructionName::AllSubspaces => Construction::AllSubspaces {
                m: need(p.m, "M")?,
                b: need(p.b, "b")?,
            },
            ConstructionName::Spread => Construction::Spread {
                m: need(p.m, "M")?,
                b: need(p.b, "b")?,
                method: SpreadMethod::from_str(&p.method)?,
            },
            ConstructionName::StdPar => Construction::StdPar {
                t: p.t,
                b: need(p.b, "b")?,
                m: need(p.m, "M")?,
                class: p.class,
            },
            ConstructionName::StdFull => Construction::StdFull {
                t: p.t,
                b: need(p.b, "b")?,
                m: need(p.m, "M")?,
            },
            ConstructionName::Blocks => Construction::Blocks {
                path: p
                    .blocks
                    .clone()
                    .ok_or_else(|| Error::BadParams("--blocks FILE is required for --construction blocks".into()))?,
            },
        })
    }

    /// Recovers the construction named in a bundle's provenance line, when
    /// it is one of the parametrized families.
    pub fn from_provenance(p: &Provenance) -> Option<Self> {
        let num = |k: &str| p.get(k).and_then(|v| v.parse::<usize>().ok());
        Some(match p.construction.as_str() {
            "all-subspaces" => Construction::AllSubspaces { m: num("M")?, b: num("b")? },
            "spread" => Construction::Spread {
                m: num("M")?,
                b: num("b")?,
                method: p.get("method").unwrap_or("gabidulin-echelon").parse().ok()?,
            },
            "std-par" => Construction::StdPar {
                t: num("t")?,
                b: num("b")?,
                m: num("M")?,
                class: num("class")?,
            },
            "std-full" => Construction::StdFull {
                t: num("t")?,
                b: num("b")?,
                m: num("M")?,
            },
            _ => return None,
        })
    }

    pub fn build(&self, field: Arc<FieldContext>, limits: &Limits) -> Result<ArrayCode> {
        match self {
            Construction::AllSubspaces { m, b } => construction_all_subspaces(field, *m, *b, limits),
            Construction::Spread { m, b, method } => construction_spread_with(field, *m, *b, *method, limits),
            Construction::StdPar { t, b, m, class } => {
                construction_std(field, *t, *b, *m, StdScope::Par(*class), limits)
            }
            Construction::StdFull { t, b, m } => construction_std(field, *t, *b, *m, StdScope::Full, limits),
            Construction::Blocks { path } => {
                let dump = parse_design(&read_file(path)?)?;
                if dump.q != field.order() {
                    return Err(Error::BadParams(format!(
                        "design is over GF({}) but --field is {}",
                        dump.q,
                        field.descriptor()
                    )));
                }
                construction_from_blocks(field, &dump.blocks, limits)
            }
        }
    }
}

pub fn parse_field(s: &str, limits: &Limits) -> Result<Arc<FieldContext>> {
    let (p, m) = parse_descriptor(s)?;
    Ok(Arc::new(FieldContext::with_limit(p, m, limits.field_order)?))
}

pub(crate) fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub(crate) fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Inconsistent(_) => EXIT_INCONSISTENT,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let mut limits = Limits::from_env();
    if let Some(l) = cli.limit {
        limits.enumeration = l;
        limits.exhaustive = l;
    }
    if let Some(p) = cli.packing_limit {
        limits.packing_candidates = p as usize;
    }
    match commands::dispatch(&cli, &limits, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
