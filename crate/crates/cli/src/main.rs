//! `wreathlab`: certifies weak distributive laws, bilinear factorizations,
//! their 1-cells and the example gallery from JSON bundles.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 on
//! unreadable or malformed input.

mod commands;
mod gallery;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use wreathlab::io::write_json;
use wreathlab::{Error, Report};

#[derive(Parser, Debug)]
#[command(name = "wreathlab", version, about = "Exact certification of weak distributive laws")]
struct Cli {
    /// Print the certification report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Suppress the text report.
    #[arg(long, short, global = true)]
    quiet: bool,

    /// Write the result bundle here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate any bundle, detecting its kind from its keys.
    Validate { file: PathBuf },
    /// Check the weak distributive law axioms and the Ψ̄ identities.
    CheckWdl { file: PathBuf },
    /// Build the weak wreath product of a law.
    Wreath { file: PathBuf },
    /// Validate a factorization and emit the law it induces.
    Factor { file: PathBuf },
    /// Pass an object through both constructions and compare.
    Roundtrip { file: PathBuf },
    /// Check a 1-cell of laws or of factorizations.
    CheckCell { file: PathBuf },
    /// Lift a 1-cell of laws to a 1-cell of factorizations.
    LiftCell { file: PathBuf },
    /// Build and certify a gallery example.
    Example { name: ExampleName },
    /// Weak Ore extensions.
    Ore(OreArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExampleName {
    Triangle,
    #[value(name = "e-ext")]
    EExt,
    Dirsum,
    Frobenius,
    Smash,
}

#[derive(clap::Args, Debug)]
struct OreArgs {
    /// The p-q-quasi-derivation; the upper triangular example when omitted.
    #[arg(long, value_name = "FILE")]
    pqqd: Option<PathBuf>,

    /// Verify the law up to this degree.
    #[arg(long, value_name = "N", num_args = 0..=1, default_missing_value = "0")]
    check: Option<usize>,

    /// Multiply two polynomials given as coefficient lists.
    #[arg(long, num_args = 2, value_names = ["F", "G"])]
    mult: Option<Vec<PathBuf>>,
}

/// A certification report and an optional result bundle.
pub struct Outcome {
    pub report: Report,
    pub bundle: Option<Value>,
}

impl Outcome {
    pub fn report(report: Report) -> Self {
        Outcome { report, bundle: None }
    }

    pub fn with_bundle(report: Report, bundle: Value) -> Self {
        Outcome {
            report,
            bundle: Some(bundle),
        }
    }
}

fn run(cli: &Cli) -> wreathlab::Result<Outcome> {
    match &cli.command {
        Command::Validate { file } => commands::validate(file),
        Command::CheckWdl { file } => commands::check_law(file),
        Command::Wreath { file } => commands::wreath(file),
        Command::Factor { file } => commands::factor(file),
        Command::Roundtrip { file } => commands::roundtrip(file),
        Command::CheckCell { file } => commands::check_cell(file),
        Command::LiftCell { file } => commands::lift_cell(file),
        Command::Example { name } => match name {
            ExampleName::Triangle => gallery::triangle(),
            ExampleName::EExt => gallery::e_ext(),
            ExampleName::Dirsum => gallery::dirsum(),
            ExampleName::Frobenius => gallery::frobenius(),
            ExampleName::Smash => gallery::smash(),
        },
        Command::Ore(args) => {
            let d = commands::load_pqqd(args.pqqd.as_deref())?;
            match &args.mult {
                Some(files) => commands::ore_mult(&d, &files[0], &files[1]),
                None => commands::ore_check(&d, args.check.filter(|&n| n > 0)),
            }
        }
    }
}

/// A closed pipe downstream is not an error.
fn print_json(v: &Value) {
    let text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn emit_report(cli: &Cli, report: &Report) {
    if cli.json {
        print_json(&report.to_json());
    } else if !cli.quiet {
        let _ = write!(std::io::stderr().lock(), "{report}");
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Schema(_) | Error::Io { .. } | Error::Shape(_) | Error::DimensionMismatch { .. } => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            emit_report(&cli, &outcome.report);
            if let Some(bundle) = &outcome.bundle {
                match &cli.out {
                    Some(path) => {
                        if let Err(e) = write_json(bundle, path) {
                            eprintln!("error: {e}");
                            return ExitCode::from(2);
                        }
                    }
                    None if !cli.json => {
                        print_json(bundle);
                    }
                    None => {}
                }
            }
            ExitCode::from(if outcome.report.passed() { 0 } else { 1 })
        }
        Err(Error::CheckFailed { what, report }) => {
            emit_report(&cli, &report);
            eprintln!("error: {what} failed certification");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_line_is_well_formed() {
        Cli::command().debug_assert();
    }

    #[test]
    fn global_flags_follow_the_subcommand() {
        let cli = Cli::try_parse_from(["wreathlab", "wreath", "law.json", "--out", "w.json", "--json"]).unwrap();
        assert!(cli.json);
        assert_eq!(cli.out, Some(PathBuf::from("w.json")));
    }

    #[test]
    fn ore_check_degree_is_optional() {
        let cli = Cli::try_parse_from(["wreathlab", "ore", "--check"]).unwrap();
        let Command::Ore(args) = cli.command else {
            panic!("not ore")
        };
        assert_eq!(args.check, Some(0));
        let cli = Cli::try_parse_from(["wreathlab", "ore", "--mult", "f.json", "g.json"]).unwrap();
        let Command::Ore(args) = cli.command else {
            panic!("not ore")
        };
        assert_eq!(args.mult.map(|m| m.len()), Some(2));
    }

    #[test]
    fn input_errors_exit_two() {
        let schema = wreathlab::io::schema_err("/psi", "bad");
        assert_eq!(exit_code(&Error::Schema(schema)), 2);
        assert_eq!(exit_code(&Error::Shape("x".into())), 2);
        assert_eq!(exit_code(&Error::NoSolution), 1);
    }
}
