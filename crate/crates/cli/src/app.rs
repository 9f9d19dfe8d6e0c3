//! Command-line grammar and dispatch.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on input
//! errors (including usage errors reported by the argument parser).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use latdual_core::functors::dual;
use latdual_core::reconstruction::lattice_from;
use latdual_core::{fixtures, lattice_iso, Category};

use crate::document::{self, Document};
use crate::dot;
use crate::error::{CliError, CliResult, ParseError};
use crate::search::search_x0_xm;
use crate::verify::{check_bound, run_suite, Suite, VerifyOptions, VERIFY_SIZE_LIMIT};

/// Default upper bound on `--max-size` for `search`.
pub const SEARCH_SIZE_LIMIT: usize = 7;

const EXIT_OK: i32 = 0;
const EXIT_VERIFICATION_FAILED: i32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "latdual",
    version,
    about = "Dual representations of finite bounded lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A dual category, as named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Filt,
    Cg,
    Dh,
    Gvg,
    Hg,
    Urq,
    Plo,
}

impl From<Target> for Category {
    fn from(t: Target) -> Category {
        match t {
            Target::Filt => Category::Filt,
            Target::Cg => Category::Cg,
            Target::Dh => Category::Dh,
            Target::Gvg => Category::Gvg,
            Target::Hg => Category::Hg,
            Target::Urq => Category::Urq,
            Target::Plo => Category::Plo,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the dual of a lattice in one category.
    Dual {
        #[arg(long, value_enum)]
        target: Target,
        /// Lattice document (JSON file) or built-in fixture name (TWO, C<n>, B4, M<k>, N5, B8).
        input: String,
        /// Write the result to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Validate a dual-space document and rebuild its lattice.
    Reconstruct {
        #[arg(long, value_enum)]
        from: Target,
        /// Dual-space document (JSON file).
        input: String,
    },
    /// Run the exhaustive verification suites.
    Verify {
        #[arg(long)]
        max_size: usize,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Allow sizes above the default bound.
        #[arg(long)]
        allow_large: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Search for lattices whose DH dual has X₀ strictly inside X_m.
    Search {
        #[arg(long, required = true)]
        x0_vs_xm: bool,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        allow_large: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Render a lattice or dual-space document as a Graphviz digraph.
    Render {
        /// Lattice or dual-space document, or a fixture name.
        input: String,
        #[arg(long, required = true)]
        dot: bool,
    },
}

/// Parse `args` (including the program name), run the command and return
/// the exit code.  Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_input(input: &str) -> CliResult<String> {
    std::fs::read_to_string(input).map_err(|source| CliError::Read {
        path: PathBuf::from(input),
        source,
    })
}

/// A fixture name or a lattice document file.
fn load_lattice(input: &str) -> CliResult<latdual_core::Lattice> {
    if !Path::new(input).exists() {
        if let Some(l) = fixtures::by_name(input) {
            return Ok(l);
        }
    }
    document::parse_lattice(&read_input(input)?)
}

fn emit(out: &mut dyn Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Write {
            path: PathBuf::from("<stdout>"),
            source,
        })
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Dual {
            target,
            input,
            out: out_file,
            format,
        } => {
            let lattice = load_lattice(&input)?;
            let space = dual(&lattice, target.into())?;
            let text = match format {
                OutputFormat::Json => document::space_to_text(&space),
                OutputFormat::Dot => dot::render_space(&space),
            };
            match out_file {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|source| CliError::Write { path, source })?,
                None => emit(out, &text)?,
            }
            Ok(EXIT_OK)
        }
        Command::Reconstruct { from, input } => {
            let text = read_input(&input)?;
            let space = document::parse_space(&text)?;
            let expected: Category = from.into();
            if space.category() != expected {
                return Err(ParseError::new(format!(
                    "document is a {} space but --from {} was given",
                    space.category(),
                    expected
                ))
                .at_field("category")
                .into());
            }
            let report = space.validate();
            if !report.is_ok() {
                return Err(CliError::Invalid {
                    what: format!("{expected} space"),
                    report: report.to_string(),
                });
            }
            let lattice = lattice_from(&space)?;
            emit(out, &document::lattice_to_text(&lattice))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            max_size,
            suite,
            seed,
            allow_large,
            format,
        } => {
            check_bound(max_size, VERIFY_SIZE_LIMIT, allow_large)?;
            let reports = run_suite(suite, VerifyOptions { max_size, seed })?;
            let text = match format {
                ReportFormat::Text => reports.iter().map(|r| format!("{r}\n")).collect::<String>(),
                ReportFormat::Json => crate::json::to_text(
                    &serde_json::to_value(&reports).expect("reports serialize"),
                ),
            };
            emit(out, &text)?;
            for r in &reports {
                let _ = writeln!(err, "{}: {:.2?}", r.suite, r.wall_time);
            }
            Ok(if reports.iter().all(|r| r.is_ok()) {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            })
        }
        Command::Search {
            x0_vs_xm: _,
            max_size,
            allow_large,
            format,
        } => {
            check_bound(max_size, SEARCH_SIZE_LIMIT, allow_large)?;
            let report = search_x0_xm(max_size)?;
            let text = match format {
                ReportFormat::Text => format!("{report}\n"),
                ReportFormat::Json => {
                    crate::json::to_text(&serde_json::to_value(&report).expect("reports serialize"))
                }
            };
            emit(out, &text)?;
            Ok(if report.is_ok() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            })
        }
        Command::Render { input, dot: _ } => {
            let text = if !Path::new(&input).exists() && fixtures::by_name(&input).is_some() {
                dot::render_lattice(&load_lattice(&input)?)
            } else {
                let raw = read_input(&input)?;
                match document::parse_document(&raw)? {
                    Document::Lattice(_) => dot::render_lattice(&document::parse_lattice(&raw)?),
                    Document::Space(_) => {
                        let space = document::parse_space(&raw)?;
                        let report = space.validate();
                        if !report.is_ok() {
                            return Err(CliError::Invalid {
                                what: format!("{} space", space.category()),
                                report: report.to_string(),
                            });
                        }
                        dot::render_space(&space)
                    }
                    Document::Hom(_) => {
                        return Err(CliError::Unsupported(
                            "rendering homomorphism documents".into(),
                        ));
                    }
                }
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
    }
}

/// Whether two lattices are isomorphic (used by tests of `reconstruct`).
pub fn isomorphic(a: &latdual_core::Lattice, b: &latdual_core::Lattice) -> bool {
    lattice_iso(a, b).is_some()
}
