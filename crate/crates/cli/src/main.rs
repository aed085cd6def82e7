//! `mirrorsmith`: checks, mirror-reflective algebras, gendo certificates and
//! tilting evidence for quiver algebras given as presentation files.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mirrorsmith::homotopy::SearchShape;
use mirrorsmith::{with_field, FieldSpec};

use commands::{CliError, CmdResult, Outcome};

const DEFAULT_SEED: u64 = 0xA1B2;

#[derive(Parser)]
#[command(name = "mirrorsmith", version, about = "Mirror-reflective algebras and tilting evidence")]
struct Cli {
    /// Ground field (Q or F<p>), overriding the one in the files.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldSpec>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure invariants of a presented algebra.
    Check { file: PathBuf },
    /// Build R(A,e,λ) and optionally match it against a presentation.
    Mirror {
        file: PathBuf,
        /// `auto` or comma-separated vertex names.
        #[arg(long, default_value = "auto")]
        idempotent: String,
        /// Element of the corner algebra; `e` means the idempotent itself.
        #[arg(long)]
        level: String,
        #[arg(long)]
        expect: Option<PathBuf>,
    },
    /// Gendo-symmetry certificate for (A, e).
    Gendo {
        file: PathBuf,
        #[arg(long, default_value = "auto")]
        idempotent: String,
    },
    /// Tilting checks for one complex, or a search over small complexes.
    Tilt(TiltArgs),
    /// The worked example end to end.
    PaperExample,
    /// Derived invariants of two algebras side by side.
    Invariants {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long)]
        idempotent_a: Option<String>,
        #[arg(long)]
        idempotent_b: Option<String>,
    },
}

#[derive(Args)]
struct TiltArgs {
    file: PathBuf,
    #[arg(long, conflicts_with = "search", required_unless_present = "search")]
    complex: Option<PathBuf>,
    #[arg(long)]
    search: bool,
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    lo: i32,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    hi: i32,
    #[arg(long, default_value_t = 2)]
    max_mult: usize,
    /// Witness cones for a complex; candidates for a search.
    #[arg(long)]
    budget: Option<u64>,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: mirrorsmith::Error| e.to_string())
}

fn parse_seed(s: &str) -> Option<u64> {
    let s = s.trim();
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16).ok(),
        None => s.parse().ok(),
    }
}

fn seed() -> Result<u64, CliError> {
    match std::env::var("MIRRORSMITH_SEED") {
        Ok(v) => parse_seed(&v).ok_or_else(|| CliError::input(format!("MIRRORSMITH_SEED `{v}` is not a decimal or 0x-hex integer"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SEED),
        Err(e) => Err(CliError::input(format!("MIRRORSMITH_SEED: {e}"))),
    }
}

fn run(cli: Cli) -> CmdResult {
    let seed = seed()?;
    let field = cli.field;
    match cli.command {
        Command::Check { file } => {
            let pres = commands::load_presentation(&file, field)?;
            with_field!(pres.field, |f| commands::check(&f, &pres))
        }
        Command::Mirror { file, idempotent, level, expect } => {
            let pres = commands::load_presentation(&file, field)?;
            let expect = match expect {
                Some(p) => Some(commands::load_presentation(&p, Some(pres.field))?),
                None => None,
            };
            with_field!(pres.field, |f| commands::mirror(&f, &pres, &idempotent, &level, expect.as_ref(), seed))
        }
        Command::Gendo { file, idempotent } => {
            let pres = commands::load_presentation(&file, field)?;
            with_field!(pres.field, |f| commands::gendo(&f, &pres, &idempotent, seed))
        }
        Command::Tilt(t) => match t.complex {
            Some(cfile) => {
                let pres = commands::load_presentation(&t.file, field)?;
                let budget = t.budget.unwrap_or(200) as usize;
                with_field!(pres.field, |f| commands::tilt_complex(&f, &pres, &cfile, budget, seed))
            }
            None => {
                let pres = commands::load_presentation(&t.file, Some(field.unwrap_or(FieldSpec::Prime(2))))?;
                let shape = SearchShape { lo: t.lo, hi: t.hi, max_mult: t.max_mult };
                if shape.lo > shape.hi {
                    return Err(CliError::input("--lo must not exceed --hi"));
                }
                let budget = t.budget.unwrap_or(1_000_000);
                with_field!(pres.field, |f| commands::tilt_search(&f, &pres, shape, budget, seed))
            }
        },
        Command::PaperExample => {
            let spec = field.unwrap_or(FieldSpec::Prime(2));
            let items = with_field!(spec, |f| commands::worked_example(&f, &spec, seed));
            let out = commands::suite_outcome(&spec, &items);
            if let Some(first) = items.iter().find(|it| it.status == mirrorsmith::example_suite::ItemStatus::Fail) {
                eprintln!("first failing item: {} {}", first.number, first.name);
            }
            Ok(out)
        }
        Command::Invariants { file_a, file_b, idempotent_a, idempotent_b } => {
            let pa = commands::load_presentation(&file_a, field)?;
            let pb = commands::load_presentation(&file_b, field)?;
            let ra = with_field!(pa.field, |f| commands::side(&f, &pa, idempotent_a.as_deref(), "delta0_dim"))?;
            let rb = with_field!(pb.field, |f| commands::side(&f, &pb, idempotent_b.as_deref(), "theta0_dim"))?;
            Ok(commands::compare(ra, rb))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome { text, ok }) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_in_decimal_and_hex() {
        assert_eq!(parse_seed("41394"), Some(0xA1B2));
        assert_eq!(parse_seed("0xA1B2"), Some(0xA1B2));
        assert_eq!(parse_seed("0x"), None);
        assert_eq!(parse_seed("twelve"), None);
    }

    #[test]
    fn fields_parse() {
        assert_eq!(parse_field("F7"), Ok(FieldSpec::Prime(7)));
        assert_eq!(parse_field("Q"), Ok(FieldSpec::Rationals));
        assert!(parse_field("F6").is_err());
    }
}
