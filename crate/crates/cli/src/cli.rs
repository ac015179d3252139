//! Command-line surface. Each subcommand loads a document, calls one library
//! operation and prints its canonical serialization.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use colorshift_core::construction::{construct_gamma, verify_construction};
use colorshift_core::flag::{coarse_f, flag_f, h_from_f, two_color_realizable};
use colorshift_core::oracle::{
    count_two_color_shifted_by_edges, find_color_shifted_with_flag, partition_number, verify_uniqueness,
    SearchBudget, Verdict,
};
use colorshift_core::shift::{shift_maximal_faces, shift_violation};
use colorshift_core::{ColorSet, ColoredComplex};

use crate::format::{self, FormatError};

/// Stable exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// A definite negative answer (not shifted, not unique, not realizable).
    pub const NEGATIVE: i32 = 2;
    /// The search budget ran out before an answer.
    pub const INCONCLUSIVE: i32 = 3;
    pub const USAGE: i32 = 64;
    /// Valid document, but the operation's precondition fails.
    pub const DATA: i32 = 65;
    /// Unreadable or malformed input file.
    pub const INPUT: i32 = 66;
    pub const CANT_CREATE: i32 = 73;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Core(#[from] colorshift_core::Error),
    #[error("stdout: {0}")]
    Stdout(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Format { .. } => exit::INPUT,
            CliError::Write { .. } | CliError::Stdout(_) => exit::CANT_CREATE,
            CliError::Core(colorshift_core::Error::BudgetExhausted { .. }) => exit::INCONCLUSIVE,
            CliError::Core(_) => exit::DATA,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "colorshift", version, about = "Colored simplicial complexes, flag vectors and color-shifting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Search-tree node cap.
    #[arg(long, default_value_t = SearchBudget::DEFAULT_MAX_NODES)]
    max_nodes: u64,
    /// Stop after this many witnesses.
    #[arg(long, default_value_t = SearchBudget::DEFAULT_MAX_WITNESSES)]
    max_witnesses: usize,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget::new(self.max_nodes, self.max_witnesses)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the flag f-vector.
    Flag { file: PathBuf },
    /// Print the flag h-vector.
    Hvec { file: PathBuf },
    /// Print the color-blind f-vector (f_-1, f_0, ...).
    Coarse { file: PathBuf },
    /// Exit 0 if color-shifted, 2 with a witness pair otherwise.
    CheckShifted { file: PathBuf },
    /// List the shift-maximal faces of a color-shifted complex.
    ShiftMaximal { file: PathBuf },
    /// Color-selected subcomplex, recolored to 1..=|colors|.
    Select {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        colors: Vec<u32>,
    },
    /// Build the extended complex and its construction report.
    Construct {
        file: PathBuf,
        /// Write the complex here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also print the construction report.
        #[arg(long)]
        report: bool,
    },
    /// Check that the extended complex is the only color-shifted complex with its flag f-vector.
    VerifyUnique {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Search for color-shifted complexes with the same flag f-vector.
    FindShifted {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Count two-colored color-shifted edge sets next to the partition number.
    CountShifted {
        #[arg(long)]
        edges: u32,
    },
    /// Decide the two-color realizability criterion for a flag f-vector document.
    Realizable2 { file: PathBuf },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })
}

fn load_complex(path: &Path) -> Result<ColoredComplex, CliError> {
    format::parse_complex(&read(path)?).map_err(|source| CliError::Format { path: path.to_owned(), source })
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Flag { file } => {
            let c = load_complex(&file)?;
            out.write_all(format::emit_flag_vector(&flag_f(&c)).as_bytes())?;
        }
        Command::Hvec { file } => {
            let c = load_complex(&file)?;
            out.write_all(format::emit_flag_vector(&h_from_f(&flag_f(&c))?).as_bytes())?;
        }
        Command::Coarse { file } => {
            let c = load_complex(&file)?;
            out.write_all(format::emit_coarse(&coarse_f(&flag_f(&c))?).as_bytes())?;
        }
        Command::CheckShifted { file } => {
            let c = load_complex(&file)?;
            return Ok(match shift_violation(&c) {
                None => {
                    writeln!(out, "color-shifted")?;
                    exit::OK
                }
                Some(w) => {
                    writeln!(out, "{w}")?;
                    exit::NEGATIVE
                }
            });
        }
        Command::ShiftMaximal { file } => {
            let c = load_complex(&file)?;
            out.write_all(format::emit_face_list("shift_maximal", &shift_maximal_faces(&c)?).as_bytes())?;
        }
        Command::Select { file, colors } => {
            let c = load_complex(&file)?;
            let set = ColorSet::from_colors(colors)?;
            out.write_all(format::emit_complex(&c.color_selected(set)?).as_bytes())?;
        }
        Command::Construct { file, out: target, report } => {
            let delta = load_complex(&file)?;
            let (gamma, rep) = construct_gamma(&delta)?;
            verify_construction(&delta, &gamma, &rep).map_err(colorshift_core::Error::Construction)?;
            let doc = format::emit_complex(&gamma);
            match target {
                Some(path) => fs::write(&path, doc).map_err(|source| CliError::Write { path, source })?,
                None => out.write_all(doc.as_bytes())?,
            }
            if report {
                out.write_all(format::emit_report(&rep).as_bytes())?;
            }
        }
        Command::VerifyUnique { file, budget } => {
            let delta = load_complex(&file)?;
            let check = verify_uniqueness(&delta, budget.budget())?;
            let nodes = check.outcome.nodes_visited;
            return Ok(match check.verdict {
                Verdict::Unique => {
                    writeln!(out, "unique (m = {}, {nodes} nodes)", check.report.m)?;
                    exit::OK
                }
                Verdict::NotUnique => {
                    let n = check.outcome.witnesses.len();
                    let more = if check.outcome.truncated { " or more" } else { "" };
                    writeln!(out, "not unique ({n}{more} witnesses, {nodes} nodes)")?;
                    exit::NEGATIVE
                }
                Verdict::Inconclusive => {
                    writeln!(out, "inconclusive (budget exhausted after {nodes} nodes)")?;
                    exit::INCONCLUSIVE
                }
            });
        }
        Command::FindShifted { file, budget } => {
            let c = load_complex(&file)?;
            let outcome = find_color_shifted_with_flag(&c, budget.budget())?;
            for w in &outcome.witnesses {
                out.write_all(format::emit_complex(w).as_bytes())?;
            }
            if outcome.witnesses.is_empty() {
                return Ok(if outcome.exhausted { exit::NEGATIVE } else { exit::INCONCLUSIVE });
            }
        }
        Command::CountShifted { edges } => {
            let count = count_two_color_shifted_by_edges(edges)?;
            let p = partition_number(edges)?;
            let verdict = if count == p { "OK" } else { "MISMATCH" };
            writeln!(out, "{count} {p} {verdict}")?;
            if count != p {
                return Ok(exit::NEGATIVE);
            }
        }
        Command::Realizable2 { file } => {
            let text = read(&file)?;
            let v = format::parse_flag_vector(&text).map_err(|source| CliError::Format { path: file, source })?;
            let ok = two_color_realizable(&v)?;
            writeln!(out, "{ok}")?;
            if !ok {
                return Ok(exit::NEGATIVE);
            }
        }
    }
    Ok(exit::OK)
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit status. Diagnostics go to `err` and only with a non-zero status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    exit::OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    exit::USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "colorshift: {e}");
            e.exit_code()
        }
    }
}
