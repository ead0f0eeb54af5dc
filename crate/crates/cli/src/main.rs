use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use ncinterp::Algorithm;
use ncinterp_cli::{execute, Command, Diagnostic, Method, Options};

/// Exact noncommutative interpolation: JSON in, JSON out.
#[derive(Parser, Debug)]
#[command(name = "ncinterp", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Inversion method for `invert`.
    #[arg(long, value_enum, default_value_t = Method::Theorem6)]
    method: Method,
    /// Difference-derivative algorithm for `diffderiv`.
    #[arg(long)]
    algorithm: Option<Algorithm>,
    /// Truncation order n (default: as large as the input allows).
    #[arg(long)]
    order: Option<usize>,
    /// Column sequence i0,i1,...
    #[arg(long, value_delimiter = ',')]
    cols: Option<Vec<usize>>,
    /// Row sequence k0,k1,...
    #[arg(long, value_delimiter = ',')]
    rows: Option<Vec<usize>>,
    /// Input file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: PathBuf,
    /// Output file, or `-` for stdout.
    #[arg(long, default_value = "-")]
    output: PathBuf,
    /// Also print D-digit decimal approximations.
    #[arg(long, value_name = "D")]
    decimal: Option<usize>,
}

fn is_std(p: &Path) -> bool {
    p.as_os_str() == "-"
}

fn io_failure(e: std::io::Error, location: &Path) -> ExitCode {
    let d = Diagnostic::new("IoError", e.to_string(), location.display().to_string());
    eprintln!("{}", d.to_json());
    ExitCode::from(d.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut input = String::new();
    let read = if is_std(&cli.input) {
        std::io::stdin().read_to_string(&mut input).map(|_| ())
    } else {
        std::fs::read_to_string(&cli.input).map(|s| input = s)
    };
    if let Err(e) = read {
        return io_failure(e, &cli.input);
    }

    let options =
        Options { method: cli.method, algorithm: cli.algorithm, order: cli.order, cols: cli.cols, rows: cli.rows };
    let outcome = execute(cli.command, &input, options, cli.decimal);

    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
    }
    let written = if is_std(&cli.output) {
        std::io::stdout().write_all(outcome.stdout.as_bytes())
    } else if outcome.exit_code == 0 {
        std::fs::write(&cli.output, &outcome.stdout)
    } else {
        Ok(())
    };
    if let Err(e) = written {
        return io_failure(e, &cli.output);
    }
    ExitCode::from(outcome.exit_code as u8)
}
