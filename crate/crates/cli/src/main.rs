//! `mould`: compute, render and verify exact moulds from the command line.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mould::displays::{self, Verdict};
use mould::error::Error as CoreError;
use mould::json::parse_mould;
use mould::verify::{self, Report};

mod render;
mod target;

use target::Target;

const DEFAULT_MAX_DEPTH: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Parser)]
#[command(name = "mould", version, about = "Exact mould calculus: flexions, singulators, polar and polynomial solutions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Truncation depth.
    #[arg(long, env = "MOULD_DEPTH", default_value_t = 4)]
    depth: usize,
    /// Largest depth accepted.
    #[arg(long, env = "MOULD_MAX_DEPTH", default_value_t = DEFAULT_MAX_DEPTH)]
    max_depth: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a named mould: paj, mupaj, dupal, pal, sa:S, sang:sa:S,
    /// slang:R:sa:S, psi:2N+1, psi:-1, xi:N, sigma_c:N, luma:N, D:A:B.
    Compute {
        target: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verifier and exit 0 iff every check passes.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        a: usize,
        #[arg(long, default_value_t = 1)]
        b: usize,
        /// Largest depth checked (defaults to --depth).
        #[arg(long)]
        dmax: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Compare every printed operator example with the implementation.
    Examples {
        /// Number of random instantiations besides the generic check.
        #[arg(long, default_value_t = 4)]
        seeds: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Render a mould given as JSON.
    Render {
        file: PathBuf,
        #[arg(long, default_value = "M")]
        name: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Claim {
    PsiOdd,
    PsiMinus1,
    Comparison,
    DPolynomial,
    PalSymmetral,
    DupalAlternal,
    SangExpansion,
    SlangSum,
    #[value(alias = "examples-section1")]
    Examples,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Core(CoreError::UnknownTarget(_)) => 2,
            _ => 1,
        }
    }
}

impl Common {
    fn depth(&self, bound: Option<usize>) -> Result<usize, CliError> {
        check_depth(self.depth, self.max_depth.min(bound.unwrap_or(usize::MAX)))
    }

    fn emit(&self, text: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
            None => {
                print!("{}", text);
                Ok(())
            }
        }
    }
}

fn check_depth(depth: usize, max: usize) -> Result<usize, CliError> {
    if depth == 0 {
        Err(CliError::Usage("depth must be at least 1".into()))
    } else if depth > max {
        Err(CliError::Usage(format!("depth {} exceeds the maximum {}", depth, max)))
    } else {
        Ok(depth)
    }
}

fn run_claim(claim: Claim, n: usize, a: usize, b: usize, dmax: usize) -> Result<Report, CliError> {
    let needs_n = matches!(claim, Claim::PsiOdd | Claim::Comparison);
    if needs_n && n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let r = match claim {
        Claim::PsiOdd => verify::psi_odd(n, dmax)?,
        Claim::PsiMinus1 => verify::psi_minus1(dmax)?,
        Claim::Comparison => verify::comparison(n)?,
        Claim::DPolynomial => {
            if a == 0 || b == 0 {
                return Err(CliError::Usage("--a and --b must be at least 1".into()));
            }
            let comp = verify::comparison(a + b)?;
            let key = format!("D_({},{})", a, b);
            let checks = comp.checks.into_iter().filter(|c| c.claim.starts_with(&key)).collect();
            Report::new(format!("{} in depth 3 is a polynomial", key), checks)
        }
        Claim::PalSymmetral => verify::pal_symmetral(dmax)?,
        Claim::DupalAlternal => verify::dupal_alternal(dmax)?,
        Claim::SangExpansion => verify::sang_expansion(&[3, 5], dmax)?,
        Claim::SlangSum => verify::slang_sum(&[3, 5], dmax)?,
        Claim::Examples => displays::report(&[0, 1, 2, 3])?,
    };
    Ok(r)
}

fn examples_text(seeds: u64, format: Format) -> Result<(String, bool), CliError> {
    let seeds: Vec<u64> = (0..seeds).collect();
    let report = displays::report(&seeds)?;
    if format == Format::Json {
        return Ok((render::report(&report, format), unexplained(&seeds)? == 0));
    }
    let rows = displays::all_rows(&displays::Inputs::generic())?;
    let mut out = String::new();
    for r in &rows {
        let (tag, detail) = match r.verdict() {
            Verdict::Reproduced => ("reproduced", String::new()),
            Verdict::KnownMisprint => ("misprint", format!(": operator minus printed display = {:?}", r.residual())),
            Verdict::Mismatch => ("MISMATCH", format!(": residual {:?}", r.residual())),
        };
        out.push_str(&format!("{:<10} {} depth {}{}\n", tag, r.name, r.depth, detail));
    }
    let reproduced = rows.iter().filter(|r| r.verdict() == Verdict::Reproduced).count();
    let bad = unexplained(&seeds)?;
    out.push_str(&format!(
        "{}/{} displays reproduced generically; {} random instantiations; {} unexplained\n",
        reproduced,
        rows.len(),
        seeds.len(),
        bad
    ));
    Ok((out, bad == 0))
}

fn unexplained(seeds: &[u64]) -> Result<usize, CliError> {
    let mut bad = displays::all_rows(&displays::Inputs::generic())?
        .iter()
        .filter(|r| r.verdict() == Verdict::Mismatch)
        .count();
    for &s in seeds {
        bad += displays::all_rows(&displays::Inputs::random(s))?
            .iter()
            .filter(|r| r.verdict() == Verdict::Mismatch)
            .count();
    }
    Ok(bad)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Compute { target, common } => {
            let t: Target = target.parse()?;
            let depth = common.depth(t.max_depth())?;
            let m = t.compute(depth)?;
            common.emit(&render::mould(&t.to_string(), &m, "x", common.format))?;
            Ok(true)
        }
        Command::Verify { claim, n, a, b, dmax, common } => {
            let dmax = check_depth(dmax.unwrap_or(common.depth), common.max_depth)?;
            let report = run_claim(claim, n, a, b, dmax)?;
            common.emit(&render::report(&report, common.format))?;
            Ok(report.passed())
        }
        Command::Examples { seeds, common } => {
            let (text, ok) = examples_text(seeds, common.format)?;
            common.emit(&text)?;
            Ok(ok)
        }
        Command::Render { file, name, common } => {
            let text = fs::read_to_string(&file).map_err(|source| CliError::Io { path: file.clone(), source })?;
            let m = parse_mould(&text).map_err(|e| match e {
                CoreError::Parse { location, message } => CoreError::Parse {
                    location: format!("{}: {}", file.display(), location),
                    message,
                },
                e => e,
            })?;
            common.emit(&render::mould(&name, &m, "x", common.format))?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code())
        }
    }
}
