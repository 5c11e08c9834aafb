use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use motivic_betti::betti::m_betti_table;
use motivic_betti::emit::{self, gens_report, hilb_report, relation_report, stable_report, Format};
use motivic_betti::hilb::HilbCache;
use motivic_betti::motivic::{verify_congruence_chain_with, ChainConstants};
use motivic_betti::Error;

/// Betti numbers of moduli of one-dimensional sheaves on the projective plane.
#[derive(Parser)]
#[command(name = "motivic-betti", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    format: OutputFormat,
    /// Directory for cached Hilbert-scheme polynomials.
    #[arg(
        long,
        env = "MOTIVIC_BETTI_CACHE",
        default_value = "./.hilb-cache",
        global = true
    )]
    cache_dir: PathBuf,
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Poincaré polynomial of the Hilbert scheme of N points on the plane.
    Hilb {
        #[arg(long)]
        n: usize,
    },
    /// Stable Betti numbers b_{2s} for s <= S.
    Stable {
        #[arg(long)]
        smax: usize,
    },
    /// Generator system and monomial counts a_{2i} for i <= D.
    Gens {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
    },
    /// Betti table b_{2k}(M(D, C)) for k <= D.
    Betti {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        chi: i64,
    },
    /// Relation counts among the generators in degrees 0..=D.
    Relations {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        chi: i64,
    },
    /// Check the congruence chain; exits 1 if any step fails.
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        /// Shift a chain constant, as NAME=DELTA (repeatable).
        #[arg(long, value_name = "NAME=DELTA")]
        mutate: Vec<String>,
    },
}

fn parse_mutations(specs: &[String]) -> Result<ChainConstants, Error> {
    let mut constants = ChainConstants::default();
    for spec in specs {
        let (name, delta) = spec
            .split_once('=')
            .ok_or_else(|| Error::Domain(format!("expected NAME=DELTA, got {spec:?}")))?;
        let delta: i64 = delta
            .parse()
            .map_err(|_| Error::Domain(format!("bad delta in {spec:?}")))?;
        constants = constants.perturbed(name, delta)?;
    }
    Ok(constants)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let format = Format::from(cli.common.format);
    let out = cli.common.output.as_deref();
    let cache = HilbCache::on_disk(cli.common.cache_dir);
    match cli.command {
        Command::Hilb { n } => emit::emit(&hilb_report(n, &cache)?, format, out)?,
        Command::Stable { smax } => emit::emit(&stable_report(smax), format, out)?,
        Command::Gens { d } => emit::emit(&gens_report(d)?, format, out)?,
        Command::Betti { d, chi } => emit::emit(&m_betti_table(d, chi, &cache)?, format, out)?,
        Command::Relations { d, chi } => {
            emit::emit(&relation_report(d, chi, &cache)?, format, out)?
        }
        Command::Verify { d, mutate } => {
            let constants = parse_mutations(&mutate)?;
            let report = verify_congruence_chain_with(d, &constants, &cache)?;
            emit::emit(&report, format, out)?;
            if !report.all_pass {
                for check in report.failing() {
                    eprintln!("verification failed: {}", check.name);
                }
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(if err.is_usage() { 2 } else { 1 })
        }
    }
}
