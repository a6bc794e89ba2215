//! `normcover`: covering numbers of permutation groups from the command line.
//!
//! Exit status is 0 on success, 1 when a verification check fails or a
//! computation errors, and 2 on a usage or group-spec parse error.

mod cache;
mod commands;
mod record;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use normcover::config::{DEFAULT_ENUM_CAP, DEFAULT_LATTICE_CAP};
use normcover::constructions::examples::DEFAULT_SEED;
use normcover::suite::SuiteConfig;
use normcover::{Caps, Error};

use record::{table, Format, Record};

#[derive(Parser)]
#[command(
    name = "normcover",
    version,
    about = "Covering and normal covering numbers of finite permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Largest group order whose subgroup lattice is built
    #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
    lattice_cap: u64,
    /// Largest group order whose elements are enumerated
    #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
    enum_cap: u64,
    #[arg(long, value_enum, default_value_t = Format::Records)]
    format: Format,
}

impl Common {
    fn caps(&self) -> Result<Caps, String> {
        if self.lattice_cap == 0 || self.enum_cap == 0 {
            return Err("caps must be positive".into());
        }
        Ok(Caps::default()
            .with_lattice(self.lattice_cap)
            .with_enumeration(self.enum_cap))
    }
}

#[derive(Args)]
struct Groups {
    /// Named group, e.g. "sym(4)" or "wreath(alt(5),7)"; repeatable
    #[arg(long = "name")]
    names: Vec<String>,
    /// Generators in cycle notation, e.g. "(1,2),(1,2,3)"; repeatable, each paired with a --deg
    #[arg(long = "gens", requires = "degs")]
    gens: Vec<String>,
    /// Degree for the matching --gens
    #[arg(long = "deg")]
    degs: Vec<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Order, sigma, gamma, mu, m and the bounds report for each group
    Compute {
        #[command(flatten)]
        groups: Groups,
        #[command(flatten)]
        common: Common,
        /// Result cache file
        #[arg(long, env = "NORMCOVER_CACHE")]
        cache: Option<PathBuf>,
    },
    /// Runs the verification suite, one record per check
    VerifyPaper {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Sample count for the sampled checks (defaults: 1000 for wreath-cover, 10000 for sl2-wreath)
        #[arg(long)]
        samples: Option<u64>,
        /// Run only these checks (comma-separated or repeated)
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Result cache file
        #[arg(long, env = "NORMCOVER_CACHE")]
        cache: Option<PathBuf>,
    },
    /// Conjugacy classes of subgroups
    Lattice {
        #[command(flatten)]
        groups: Groups,
        #[command(flatten)]
        common: Common,
    },
    /// Minimal covers with their members, replayed through the verifiers
    CoverCertificate {
        #[command(flatten)]
        groups: Groups,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::Parse { .. } | Error::UnsupportedParams(_)) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(anyhow::Error::new(e))
    }
}

fn resolve(groups: &Groups, caps: &Caps) -> Result<Vec<commands::Target>, Failure> {
    if groups.gens.len() != groups.degs.len() {
        return Err(Failure::Usage("each --gens needs exactly one --deg".into()));
    }
    if groups.names.is_empty() && groups.gens.is_empty() {
        return Err(Failure::Usage("give at least one --name or --gens".into()));
    }
    Ok(commands::targets(
        &groups.names,
        &groups.gens,
        &groups.degs,
        caps,
    )?)
}

fn emit(records: &[Record], format: Format, columns: &[&str]) -> std::io::Result<()> {
    let mut out = std::io::stdout().lock();
    match format {
        Format::Records => {
            for r in records {
                writeln!(out, "{r}")?;
            }
        }
        Format::Table => write!(out, "{}", table(records, columns))?,
    }
    out.flush()
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Compute {
            groups,
            common,
            cache,
        } => {
            let caps = common.caps().map_err(Failure::Usage)?;
            let targets = resolve(&groups, &caps)?;
            let mut cache = commands::open_cache(cache.as_ref())?;
            let records = commands::compute(&targets, &caps, cache.as_mut())?;
            emit(&records, common.format, commands::COMPUTE_COLUMNS)
                .map_err(|e| Failure::Runtime(e.into()))?;
            Ok(true)
        }
        Command::VerifyPaper {
            common,
            seed,
            samples,
            only,
            cache,
        } => {
            let caps = common.caps().map_err(Failure::Usage)?;
            let mut cfg = SuiteConfig {
                caps,
                seed,
                ..SuiteConfig::default()
            };
            if let Some(n) = samples {
                cfg.wreath_samples = n;
                cfg.sl2_samples = n;
            }
            let mut cache = commands::open_cache(cache.as_ref())?;
            let (records, ok) = commands::verify_paper(&cfg, &only, cache.as_mut())?;
            emit(&records, common.format, commands::CHECK_COLUMNS)
                .map_err(|e| Failure::Runtime(e.into()))?;
            Ok(ok)
        }
        Command::Lattice { groups, common } => {
            let caps = common.caps().map_err(Failure::Usage)?;
            let targets = resolve(&groups, &caps)?;
            let records = commands::lattice(&targets, &caps)?;
            emit(&records, common.format, commands::LATTICE_COLUMNS)
                .map_err(|e| Failure::Runtime(e.into()))?;
            Ok(true)
        }
        Command::CoverCertificate { groups, common } => {
            let caps = common.caps().map_err(Failure::Usage)?;
            let targets = resolve(&groups, &caps)?;
            let records = commands::cover_certificate(&targets, &caps)?;
            let ok = records.iter().all(|r| r.get("replayed") != Some("false"));
            emit(&records, common.format, commands::CERTIFICATE_COLUMNS)
                .map_err(|e| Failure::Runtime(e.into()))?;
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
