//! `asym`: command-line front end for group-covariant pure-state convertibility.

mod commands;
mod corpus;
mod input;
mod output;

use std::path::PathBuf;
use std::io::Write;
use std::process::ExitCode;

use asym_core::Tolerances;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use commands::*;
use input::{Failure, Inputs, Outcome};
use output::num;

#[derive(Debug, Parser)]
#[command(name = "asym", version, about = "Convertibility of pure states under group-covariant operations")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Json,
    Table,
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, global = true, value_enum)]
    output: Option<OutputMode>,
    /// Shorthand for `--output json`.
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Shorthand for `--output table`.
    #[arg(long, global = true)]
    table: bool,
    #[arg(long, global = true)]
    tol_one: Option<f64>,
    #[arg(long, global = true)]
    tol_zero: Option<f64>,
    #[arg(long, global = true)]
    tol_psd: Option<f64>,
    #[arg(long, global = true)]
    tol_w: Option<f64>,
    /// Seed for randomized internals.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

impl Common {
    fn mode(&self) -> OutputMode {
        match (self.output, self.json, self.table) {
            (Some(m), _, _) => m,
            (None, true, _) => OutputMode::Json,
            _ => OutputMode::Table,
        }
    }

    fn tolerances(&self) -> Outcome<Tolerances> {
        let mut tol = Tolerances::default();
        for (name, value, slot) in [
            ("tol-one", self.tol_one, &mut tol.one),
            ("tol-zero", self.tol_zero, &mut tol.zero),
            ("tol-psd", self.tol_psd, &mut tol.psd),
            ("tol-w", self.tol_w, &mut tol.w),
        ] {
            if let Some(v) = value {
                if !(v > 0.0 && v < 1.0) {
                    return Err(Failure::Usage(format!("--{name} must lie in (0, 1), got {v}")));
                }
                *slot = v;
            }
        }
        Ok(tol)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Characteristic function, resource measures and symmetry / zero sets.
    Chi(ChiArgs),
    /// Optimal exact conversion rate.
    RateExact(RateExactArgs),
    /// Single-shot exact feasibility of N copies to M copies.
    Convert(ConvertArgs),
    /// Smallest copy number from which conversion at a rate always succeeds.
    MinCopies(MinCopiesArgs),
    /// Charge distribution of a state under an abelian representation.
    Charges(ChargesArgs),
    /// Fourier-domain feasibility for charge distributions.
    ConvertAbelian(ConvertAbelianArgs),
    /// Approximate-rate classification and convergence curves.
    Approx(ApproxArgs),
    /// Quantum Fisher information matrix of a state.
    Qfim(QfimArgs),
    /// Fisher-information rate bound and converse certificate.
    Rf(RfArgs),
    /// Write the example corpus to a directory.
    Corpus(CorpusArgs),
}

#[derive(Debug, Args)]
struct CorpusArgs {
    #[arg(long)]
    out: PathBuf,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Chi(_) => "chi",
            Command::RateExact(_) => "rate-exact",
            Command::Convert(_) => "convert",
            Command::MinCopies(_) => "min-copies",
            Command::Charges(_) => "charges",
            Command::ConvertAbelian(_) => "convert-abelian",
            Command::Approx(_) => "approx",
            Command::Qfim(_) => "qfim",
            Command::Rf(_) => "rf",
            Command::Corpus(_) => "corpus",
        }
    }
}

fn run(cli: &Cli) -> Outcome<Value> {
    let tol = cli.common.tolerances()?;
    let mut inputs = Inputs::new(tol);
    let result = match &cli.command {
        Command::Chi(a) => chi(&mut inputs, a)?,
        Command::RateExact(a) => rate_exact(&mut inputs, a)?,
        Command::Convert(a) => convert(&mut inputs, a)?,
        Command::MinCopies(a) => min_copies(&mut inputs, a)?,
        Command::Charges(a) => charges(&mut inputs, a, cli.common.seed)?,
        Command::ConvertAbelian(a) => convert_abelian(&mut inputs, a)?,
        Command::Approx(a) => approx(&mut inputs, a)?,
        Command::Qfim(a) => qfim(&mut inputs, a)?,
        Command::Rf(a) => rf(&mut inputs, a)?,
        Command::Corpus(a) => obj! {
            "out" => a.out.display().to_string(),
            "files" => corpus::write(&a.out)?,
        },
    };
    Ok(obj! {
        "subcommand" => cli.command.name(),
        "inputs" => inputs.records(),
        "tolerances" => obj! {
            "unitary" => num(tol.unitary),
            "norm" => num(tol.norm),
            "one" => num(tol.one),
            "zero" => num(tol.zero),
            "psd" => num(tol.psd),
            "w" => num(tol.w),
            "supp" => num(tol.supp),
        },
        "seed" => cli.common.seed,
        "result" => result,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = match cli.common.mode() {
                OutputMode::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
                OutputMode::Table => output::render_table(&report),
            };
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("{}", failure.to_json());
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}
