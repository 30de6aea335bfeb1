use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use kstab_cli::commands::{self, DEFAULT_APPENDIX_BOUND, DEFAULT_APPENDIX_KMAX};
use kstab_cli::{render, AppendixOptions, CliError, Format, Job, Output, Overrides};

/// Donaldson-Futaki invariants, L2 pairings and torus specialisations of
/// filtrations, computed exactly.
#[derive(Parser)]
#[command(name = "kstab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Largest degree k tabulated [default: 24, or the job's options.kmax]
    #[arg(long, global = true)]
    kmax: Option<usize>,

    /// First degree of the fit window [default: n + 3]
    #[arg(long, global = true)]
    window: Option<usize>,

    /// Seed for the generic one-parameter subgroup [default: 0]
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Weight functions, Donaldson-Futaki invariant and L2 norm of one filtration
    Df { job: PathBuf },
    /// L2 pairing of two filtrations (one job with `filtrations`, or two jobs)
    Pair { job: PathBuf, other: Option<PathBuf> },
    /// Angle between two filtrations with its per-degree approximations
    Distance { job: PathBuf, other: Option<PathBuf> },
    /// Specialise along a generic subgroup of the torus and re-present finitely
    Specialize {
        job: PathBuf,
        /// Largest approximation degree tried [default: kmax - 1]
        #[arg(long)]
        rmax: Option<usize>,
    },
    /// L2 projection onto the torus and the degeneracy verdict
    Project { job: PathBuf },
    /// Membership claims and the initial-algebra census of the built-in P1 example
    Appendix {
        #[arg(long, default_value_t = DEFAULT_APPENDIX_BOUND)]
        max_degree: usize,
        #[arg(long, default_value_t = DEFAULT_APPENDIX_KMAX)]
        jmax: usize,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load(path: &PathBuf) -> Result<Job, CliError> {
    Job::load(&read(path)?).map_err(|e| match e {
        CliError::Document(m) => CliError::Document(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// One job with two filtrations, or two jobs with one each over the same ring.
fn load_pair(job: &PathBuf, other: &Option<PathBuf>) -> Result<Job, CliError> {
    let mut a = load(job)?;
    if let Some(path) = other {
        let b = load(path)?;
        if !a.ring.same_as(&b.ring) {
            return Err(CliError::Core { context: "pair".into(), source: kstab::Error::RingMismatch });
        }
        a.filtrations.extend(b.filtrations);
    }
    Ok(a)
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let c = &cli.common;
    let mut o = Overrides { kmax: c.kmax, window: c.window, seed: c.seed, rmax: None };
    match &cli.command {
        Command::Df { job } => commands::df(&load(job)?, &o),
        Command::Pair { job, other } => commands::pair_cmd(&load_pair(job, other)?, &o),
        Command::Distance { job, other } => commands::distance_cmd(&load_pair(job, other)?, &o),
        Command::Specialize { job, rmax } => {
            o.rmax = *rmax;
            commands::specialize_cmd(&load(job)?, &o)
        }
        Command::Project { job } => commands::project_cmd(&load(job)?, &o),
        Command::Appendix { max_degree, jmax } => commands::appendix_cmd(AppendixOptions {
            max_degree: *max_degree,
            kmax: c.kmax.unwrap_or(DEFAULT_APPENDIX_KMAX),
            jmax: *jmax,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli).and_then(|out| {
        let text = render(&out, start.elapsed().as_secs_f64(), cli.common.format);
        match &cli.common.out {
            Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
            None => print!("{text}"),
        }
        Ok(out.certified)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
