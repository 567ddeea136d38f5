use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kfield::Scalar;
use tss_cli::{classify, construct, export, run_paper_suite, stabilizer, suite_lines, verify, CliError, Document, Outcome, Params};

#[derive(Parser)]
#[command(name = "tss", version, about = "Construct and verify totally symmetric sets over Q(i, sqrt2, sqrt3)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input document (JSON)
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output path; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog object and emit it after re-verification
    Construct {
        /// One of the catalog names (see README)
        name: String,
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
        lambda: Option<Scalar>,
        #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
        mu: Option<Scalar>,
        #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
        nu: Option<Scalar>,
        /// Comma-separated scalars for `partition` and `perm`
        #[arg(long, value_delimiter = ',', value_parser = parse_scalar, allow_hyphen_values = true)]
        weight: Option<Vec<Scalar>>,
    },
    /// Certify a tss, arrangement or system document
    Verify(Io),
    /// Classify a commutative tss document
    Classify(Io),
    /// Stabilizer of an arrangement document
    Stabilizer(Io),
    /// Run every anchored identity check
    PaperSuite {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-emit a document in canonical form
    Export(Io),
}

fn parse_scalar(s: &str) -> Result<Scalar, String> {
    s.parse::<Scalar>().map_err(|e| e.to_string())
}

fn read_doc(io: &Io) -> Result<Document, CliError> {
    let path = io.input.as_ref().ok_or_else(|| CliError::BadParams("--in is required".into()))?;
    Document::parse(&fs::read_to_string(path)?)
}

fn write(out: &Option<PathBuf>, doc: &Document) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, doc.emit())?,
        None => print!("{}", doc.emit()),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let (outcome, out): (Outcome, Option<PathBuf>) = match cli.command {
        Command::Construct { name, io, k, p, n, lambda, mu, nu, weight } => {
            let input = io.input.as_ref().map(|_| read_doc(&io)).transpose()?;
            let params = Params { k, p, n, lambda, mu, nu, weight, input };
            let (document, ok) = construct(&name, &params)?;
            if !ok {
                eprintln!("{name}: re-verification failed; nothing written");
                return Ok(false);
            }
            (Outcome { document, ok }, io.out)
        }
        Command::Verify(io) => (verify(&read_doc(&io)?)?, io.out),
        Command::Classify(io) => (classify(&read_doc(&io)?)?, io.out),
        Command::Stabilizer(io) => (stabilizer(&read_doc(&io)?)?, io.out),
        Command::Export(io) => (export(&read_doc(&io)?)?, io.out),
        Command::PaperSuite { out } => {
            let outcome = run_paper_suite();
            let report: spectral::Report =
                serde_json::from_value(outcome.document.payload.clone()).expect("suite report round-trips");
            for line in suite_lines(&report) {
                eprintln!("{line}");
            }
            eprintln!("{} checks, {} failed", report.checks.len(), report.failures().count());
            (outcome, out)
        }
    };
    write(&out, &outcome.document)?;
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
