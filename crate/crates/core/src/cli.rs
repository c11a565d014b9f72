//! Command-line front end.
//!
//! Exit codes: 0 when the computation succeeded or the property was
//! verified, 1 when a property is violated (a certificate is printed), 2 on
//! malformed input or usage errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::kernel::{Element, Family, KernelError, F2};
use crate::morphisms::{BaseFormula, CanonicalEndo, MorphismError};
use crate::verify::{self, MapTable, Report, SuiteConfig, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bicyclic",
    version,
    about = "Exact arithmetic and endomorphism verification for B_Z^F"
)]
pub struct Cli {
    /// Worker threads for exhaustive scans (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiply two elements `i,j,f`.
    Mul {
        /// Family JSON such as `{"starts":[0,1,2]}`; defaults to {[0),[1)}.
        #[arg(long)]
        family: Option<String>,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Apply an endomorphism `alpha:k,p@t` or `beta:k,p@t` to an element.
    Apply {
        endo: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Normal form of "first E1, then E2".
    Compose {
        first: String,
        then: String,
        #[arg(long, default_value_t = 4)]
        window: u32,
    },
    /// Split an endomorphism into its origin-fixing part and automorphism.
    Decompose { endo: String },
    /// Classify a map table (JSON file, or stdin when omitted or `-`).
    Classify { file: Option<PathBuf> },
    /// Check a map table for the homomorphism property and injectivity.
    Verify { file: Option<PathBuf> },
    /// Run the seeded theorem suite.
    Suite {
        #[arg(long, default_value_t = 4)]
        window: u32,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Check the corner-shift diagram of a base map.
    Corner {
        /// Base `alpha:k,p` or `beta:k,p`.
        base: String,
        #[arg(long, default_value_t = 0)]
        offset: u32,
        #[arg(long, default_value_t = 4)]
        window: u32,
    },
    /// Print the map table of an endomorphism as JSON.
    Table {
        endo: String,
        #[arg(long, default_value_t = 4)]
        window: u32,
        /// Accept out-of-range `k, p` and tabulate the bare formula.
        #[arg(long)]
        unchecked: bool,
    },
}

/// A failure that maps to an exit code.
enum Failure {
    Usage(String),
    Violation {
        certificate: String,
        summary: String,
    },
}

impl From<KernelError> for Failure {
    fn from(e: KernelError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<MorphismError> for Failure {
    fn from(e: MorphismError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e.certificate() {
            Some(report) => Failure::Violation {
                certificate: to_json(&report),
                summary: e.to_string(),
            },
            None => Failure::Usage(e.to_string()),
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

/// Parses `args` (including the program name) and runs the command.
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
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    if let Some(threads) = cli.threads {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Violation {
            certificate,
            summary,
        }) => {
            let _ = writeln!(out, "{certificate}");
            let _ = writeln!(err, "{summary}");
            EXIT_VIOLATION
        }
    }
}

fn parse_element(s: &str) -> Result<Element, Failure> {
    Ok(s.parse::<Element>()?)
}

fn parse_endo(s: &str) -> Result<CanonicalEndo, Failure> {
    Ok(s.parse::<CanonicalEndo>()?)
}

fn read_table(file: Option<PathBuf>) -> Result<MapTable, Failure> {
    let text = match file {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(&path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("map table: {e}")))
}

fn verdict_code(passed: bool) -> i32 {
    if passed {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn summarize(err: &mut dyn Write, what: &str, report: &Report) {
    let _ = match &report.counterexample {
        None => writeln!(err, "{what}: pass ({} checks)", report.checks),
        Some(c) => writeln!(
            err,
            "{what}: FAIL ({} checks), counterexample {c:?}",
            report.checks
        ),
    };
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let io_err = |e: io::Error| Failure::Usage(e.to_string());
    match command {
        Command::Mul { family, x, y } => {
            let family = match family {
                Some(json) => serde_json::from_str::<Family>(&json)
                    .map_err(|e| Failure::Usage(format!("family: {e}")))?,
                None => F2,
            };
            let z = family.mul(parse_element(&x)?, parse_element(&y)?)?;
            writeln!(out, "{z}").map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Apply { endo, x } => {
            let y = parse_endo(&endo)?.apply(parse_element(&x)?)?;
            writeln!(out, "{y}").map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Compose {
            first,
            then,
            window,
        } => {
            let c = parse_endo(&first)?.compose(&parse_endo(&then)?, window)?;
            writeln!(out, "{c}").map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Decompose { endo } => {
            let d = parse_endo(&endo)?.decompose();
            writeln!(out, "{}\n{}", d.fixing, d.automorphism).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Classify { file } => {
            let table = read_table(file)?;
            let classified = verify::classify(&table)?;
            writeln!(out, "{}", classified.endo).map_err(io_err)?;
            writeln!(out, "{}", to_json(&classified.report)).map_err(io_err)?;
            summarize(err, "classify", &classified.report);
            Ok(EXIT_OK)
        }
        Command::Verify { file } => {
            let table = read_table(file)?;
            let hom = verify::check_homomorphism(&table)?;
            let inj = verify::check_injective(&table);
            let passed = hom.passed() && inj.passed();
            let body = json!({
                "verdict": if passed { "pass" } else { "fail" },
                "homomorphism": hom,
                "injectivity": inj,
            });
            writeln!(out, "{body}").map_err(io_err)?;
            summarize(err, "homomorphism", &hom);
            summarize(err, "injectivity", &inj);
            Ok(verdict_code(passed))
        }
        Command::Suite {
            window,
            kmax,
            trials,
            seed,
        } => {
            let report = verify::theorem_suite(SuiteConfig {
                window,
                kmax,
                trials,
                seed,
            })?;
            writeln!(out, "{}", to_json(&report)).map_err(io_err)?;
            for sub in &report.results {
                summarize(err, sub.name, &sub.report);
            }
            Ok(verdict_code(report.passed()))
        }
        Command::Corner {
            base,
            offset,
            window,
        } => {
            let endo = parse_endo(&base)?;
            if endo.twist != 0 {
                return Err(Failure::Usage(format!(
                    "corner takes a base without twist, got {endo}"
                )));
            }
            let report = verify::corner_diagram_check(endo.base, offset, window)?;
            writeln!(out, "{}", to_json(&report)).map_err(io_err)?;
            summarize(err, "corner diagram", &report);
            Ok(verdict_code(report.passed()))
        }
        Command::Table {
            endo,
            window,
            unchecked,
        } => {
            let table = if unchecked {
                let (formula, twist) = parse_formula(&endo)?;
                MapTable::tabulate(window, |x| {
                    crate::morphisms::apply_aut(twist, formula.apply(x)?)
                })?
            } else {
                let e = parse_endo(&endo)?;
                MapTable::tabulate(window, |x| e.apply(x))?
            };
            writeln!(out, "{}", to_json(&table)).map_err(io_err)?;
            Ok(EXIT_OK)
        }
    }
}

/// Like the endomorphism text form, without the range check on `k, p`.
fn parse_formula(s: &str) -> Result<(BaseFormula, i64), Failure> {
    match s.parse::<CanonicalEndo>() {
        Ok(e) => Ok((e.base.formula(), e.twist)),
        Err(MorphismError::ParamOutOfRange { kind, k, p }) => {
            let twist = match s.split_once('@') {
                Some((_, t)) => t
                    .trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("bad twist in `{s}`")))?,
                None => 0,
            };
            Ok((BaseFormula { kind, k, p }, twist))
        }
        Err(e) => Err(e.into()),
    }
}
