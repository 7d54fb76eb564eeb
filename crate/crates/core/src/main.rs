use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use flockgraph::report::{
    flock_rows, flock_rows_text, graph_dot, graph_text, orbit_text, AtlasReport, ConjugatorReport,
};
use flockgraph::verify::verify;
use flockgraph::{
    all_conjugators, atlas_with_threads, build_configuration, forward_orbit, parse, Error, Flock,
    Partition, Permutation,
};

#[derive(Parser)]
#[command(
    name = "flockgraph",
    version,
    about = "Flocks, conjugators and configuration graphs of S_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List every flock of S_n with its stem, size and conjugator count.
    Flocks {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the forward orbit of a start permutation under φ ↦ φσφ⁻¹.
    Orbit(StartArgs),
    /// Emit the configuration containing a start permutation.
    Config {
        #[command(flatten)]
        start: StartArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Summarize every configuration of a flock.
    Atlas {
        #[arg(long)]
        n: usize,
        /// Cycle lengths, comma separated, e.g. 1,2,3.
        #[arg(long = "type")]
        partition: String,
        /// Stem; defaults to the canonical stem of the flock.
        #[arg(long)]
        sigma: Option<String>,
        /// Include member lists.
        #[arg(long)]
        members: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Solve ρφρ⁻¹ = ψ.
    Conjugators {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        psi: String,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare every fast path with its brute-force oracle up to --max-n.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Args)]
struct StartArgs {
    #[arg(long)]
    n: usize,
    /// Stem; defaults to the canonical stem of the start's flock.
    #[arg(long)]
    sigma: Option<String>,
    #[arg(long)]
    start: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(std::io::Error),
    Unverified(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(e) => match e {
                Error::NotConjugate { .. }
                | Error::NotInFlock { .. }
                | Error::DegreeMismatch { .. } => 3,
                Error::TooLarge { .. } | Error::OracleTooLarge(_) | Error::Overflow => 4,
                _ => 2,
            },
            Failure::Usage(_) => 2,
            Failure::Io(_) | Failure::Unverified(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Usage(m) | Failure::Unverified(m) => m.clone(),
            Failure::Io(e) => e.to_string(),
        }
    }
}

fn stem_for(n: usize, sigma: Option<&str>, member: &Permutation) -> Result<Permutation, Failure> {
    match sigma {
        Some(text) => Ok(parse(text, n)?),
        None => Ok(Flock::containing(member).stem().clone()),
    }
}

fn start_pair(args: &StartArgs) -> Result<(Permutation, Permutation), Failure> {
    let start = parse(&args.start, args.n)?;
    let sigma = stem_for(args.n, args.sigma.as_deref(), &start)?;
    Ok((start, sigma))
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Flocks { n, format } => {
            let rows = flock_rows(n)?;
            match format {
                Format::Text => Ok(flock_rows_text(&rows)),
                Format::Json => Ok(serde_json::to_string_pretty(&rows).unwrap() + "\n"),
                Format::Dot => Err(Failure::Usage("flocks has no dot output".into())),
            }
        }
        Command::Orbit(args) => {
            let (start, sigma) = start_pair(&args)?;
            Ok(orbit_text(&forward_orbit(&start, &sigma)?))
        }
        Command::Config { start, format } => {
            let (start, sigma) = start_pair(&start)?;
            let graph = build_configuration(&start, &sigma)?;
            Ok(match format {
                Format::Text => graph_text(&graph),
                Format::Json => AtlasReport::new(&graph, true).to_json(),
                Format::Dot => graph_dot(&graph),
            })
        }
        Command::Atlas {
            n,
            partition,
            sigma,
            members,
            threads,
            format,
        } => {
            let partition: Partition = partition.parse()?;
            if partition.degree() != n {
                return Err(Failure::Usage(format!(
                    "--type {partition} is not a partition of {n}"
                )));
            }
            let flock = Flock::new(&partition)?;
            let sigma = stem_for(n, sigma.as_deref(), flock.stem())?;
            let graph = atlas_with_threads(&flock, &sigma, threads)?;
            Ok(match format {
                Format::Text => AtlasReport::new(&graph, members).to_text(),
                Format::Json => AtlasReport::new(&graph, members).to_json(),
                Format::Dot => graph_dot(&graph),
            })
        }
        Command::Conjugators {
            n,
            phi,
            psi,
            count_only,
            format,
        } => {
            let phi = parse(&phi, n)?;
            let psi = parse(&psi, n)?;
            let report = ConjugatorReport::new(&all_conjugators(&phi, &psi)?, count_only);
            match format {
                Format::Text => Ok(report.to_text()),
                Format::Json => Ok(serde_json::to_string_pretty(&report).unwrap() + "\n"),
                Format::Dot => Err(Failure::Usage("conjugators has no dot output".into())),
            }
        }
        Command::Verify { max_n } => {
            let report = verify(max_n)?;
            let text = report.to_text();
            if report.passed() {
                Ok(text)
            } else {
                Err(Failure::Unverified(text))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(Failure::Io),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(Failure::Io),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
