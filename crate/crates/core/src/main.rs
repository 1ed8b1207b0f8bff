use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use idempotoric::io::{self, Format, JobError, JobSpec, Mode};

#[derive(Parser)]
#[command(
    name = "idempotoric",
    version,
    about = "Idempotents of toric monoids and finite semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Idempotents of the closure of the powers of a diagonalizable matrix,
    /// from its nonzero rational eigenvalues.
    Eigen(Common),
    /// Idempotent poset and toric envelope of a weight monoid.
    Monoid(Common),
    /// Face lattice of the cone spanned by integer generators.
    Cone(Common),
    /// Idempotents, Green's classes and smallest-idempotent checks for a
    /// multiplication table.
    Finite(Common),
    /// Randomized and exhaustive consistency suites.
    Selftest(Common),
}

#[derive(Args)]
struct Common {
    /// Job or payload JSON; `-` reads standard input.
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[arg(long, short, value_enum)]
    format: Option<OutputFormat>,
    /// Largest coefficient in enumerated multiplicative relations.
    #[arg(long)]
    relation_bound: Option<u32>,
    /// Skip the independent cross-checks.
    #[arg(long)]
    no_crosscheck: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Dot,
    Text,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Dot => Format::Dot,
            OutputFormat::Text => Format::Text,
        }
    }
}

fn read_input(path: Option<&PathBuf>, mode: Mode) -> Result<String, JobError> {
    match path {
        None if mode == Mode::Selftest => Ok("{}".into()),
        None => Err(JobError::Schema(format!("{mode} needs --input <path|->"))),
        Some(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| JobError::Schema(format!("reading standard input: {e}")))?;
            Ok(s)
        }
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| JobError::Schema(format!("reading {}: {e}", p.display()))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mode, common) = match &cli.command {
        Command::Eigen(c) => (Mode::Eigen, c),
        Command::Monoid(c) => (Mode::Monoid, c),
        Command::Cone(c) => (Mode::Cone, c),
        Command::Finite(c) => (Mode::Finite, c),
        Command::Selftest(c) => (Mode::Selftest, c),
    };
    let fallback_format = common.format.map(Format::from).unwrap_or_default();

    let job = read_input(common.input.as_ref(), mode).and_then(|text| {
        let mut job = JobSpec::for_mode(mode, &text)?;
        if let Some(f) = common.format {
            job.options.format = f.into();
        }
        if let Some(b) = common.relation_bound {
            job.options.relation_bound = b;
        }
        if common.no_crosscheck {
            job.options.crosscheck = false;
        }
        Ok(job)
    });

    let outcome = match job {
        Ok(job) => io::execute(&job),
        Err(e) => io::render_error(&e, fallback_format),
    };
    if outcome.exit_code == 0 {
        print!("{}", outcome.output);
    } else if fallback_format == Format::Json {
        // The error document is the program's output.
        print!("{}", outcome.output);
    } else {
        eprint!("{}", outcome.output);
    }
    ExitCode::from(outcome.exit_code as u8)
}
