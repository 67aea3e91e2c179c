//! The `artin-randlab` command line.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 verification failure,
//! 3 I/O error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use artin_randlab_core::classify::{classify_all_with_budget, DEFAULT_CLIQUE_BUDGET};
use artin_randlab_core::montecarlo::sample_at;
use artin_randlab_core::{EnumBudget, GrowthSpec, Predicate};
use clap::{Args, Parser, Subcommand};

use crate::experiment::{self, Formula, MSource, McConfig, NRange, CONJECTURE_DEFAULT};
use crate::format::{decode_graph, encode_graph, encode_report};
use crate::parallel::{available_threads, THREADS_ENV};
use crate::table::{write_table, Format, Record};
use crate::{verify, CliError};

#[derive(Debug, Parser)]
#[command(name = "artin-randlab", version, about = "Random Artin groups: sampling, classification, exact and Monte Carlo probabilities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw graphs from G(n, m) and print them as JSON lines.
    Sample(SampleArgs),
    /// Classify a graph file (`-` for stdin) and print its report.
    Classify(ClassifyArgs),
    /// Evaluate a closed form or an exhaustive count.
    Exact(ExactArgs),
    /// Monte Carlo estimate of a class probability.
    Estimate(EstimateArgs),
    /// Monte Carlo estimates across a range of n.
    Sweep(EstimateArgs),
    /// Check every closed form against enumeration on small spaces.
    Verify(VerifyArgs),
    /// (2,2)-free probability along m = floor(N^(3/2)).
    Conjecture(ConjectureArgs),
}

#[derive(Debug, Args)]
pub struct SpaceArgs {
    /// Vertex count, or an inclusive range `start:stop[:step]`.
    #[arg(long, value_parser = clap::value_parser!(NRange))]
    pub n: NRange,
    /// Alphabet size: labels are drawn from {inf, 2, ..., m}.
    #[arg(long, required_unless_present = "growth", conflicts_with = "growth")]
    pub m: Option<u64>,
    /// Alphabet size as a function of n, e.g. "1*N^3/2".
    #[arg(long)]
    pub growth: Option<String>,
}

impl SpaceArgs {
    fn source(&self) -> Result<MSource, CliError> {
        match (&self.m, &self.growth) {
            (Some(m), None) => Ok(MSource::Fixed(*m)),
            (None, Some(g)) => Ok(MSource::Growth(g.parse::<GrowthSpec>()?)),
            _ => Err(CliError::Usage("exactly one of --m and --growth is required".into())),
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SeedArgs {
    #[arg(long)]
    pub seed: Option<u64>,
    /// Refuse to run without an explicit --seed.
    #[arg(long)]
    pub require_seed: bool,
}

impl SeedArgs {
    fn seed(&self) -> Result<u64, CliError> {
        match (self.seed, self.require_seed) {
            (Some(s), _) => Ok(s),
            (None, false) => Ok(0),
            (None, true) => Err(CliError::Usage("--require-seed is set but --seed is missing".into())),
        }
    }
}

#[derive(Debug, Args)]
pub struct ThreadArgs {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = THREADS_ENV)]
    pub threads: Option<usize>,
}

impl ThreadArgs {
    fn count(&self) -> usize {
        self.threads.filter(|&t| t > 0).unwrap_or_else(available_threads)
    }
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    #[command(flatten)]
    pub seed: SeedArgs,
    /// Number of graphs; sample indices 0..count.
    #[arg(long, default_value_t = 1)]
    pub count: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    pub file: PathBuf,
    /// Cap on maximal cliques examined for the FC-type test.
    #[arg(long, default_value_t = DEFAULT_CLIQUE_BUDGET)]
    pub clique_budget: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    /// forbidden, 22free, large, ..., expectation-x, expectation-x2,
    /// second-moment, markov, cone-bound, join-bound, fc-bound or oracle.
    #[arg(long)]
    pub formula: String,
    /// Number of forbidden labels for `--formula forbidden`.
    #[arg(long)]
    pub k: Option<u32>,
    /// Class counted by `--formula oracle`.
    #[arg(long)]
    pub predicate: Option<String>,
    /// Largest space the oracle may enumerate.
    #[arg(long, default_value_t = EnumBudget::DEFAULT.max_graphs)]
    pub budget: u64,
    #[command(flatten)]
    pub threads: ThreadArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    /// Class name, optionally negated with a `not-` prefix.
    #[arg(long)]
    pub predicate: String,
    #[arg(long, default_value_t = 10_000)]
    pub samples: u64,
    #[command(flatten)]
    pub seed: SeedArgs,
    #[arg(long, default_value_t = 0.99)]
    pub confidence: f64,
    #[command(flatten)]
    pub threads: ThreadArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest space to enumerate; bigger grid points are skipped.
    #[arg(long, default_value_t = EnumBudget::DEFAULT.max_graphs)]
    pub budget: u64,
    #[command(flatten)]
    pub threads: ThreadArgs,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    /// Range of N, default 3:190.
    #[arg(long, value_parser = clap::value_parser!(NRange))]
    pub n: Option<NRange>,
    #[command(flatten)]
    pub out: OutputArgs,
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| CliError::io(p, e))?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn output_path(path: Option<&Path>) -> PathBuf {
    path.map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("<stdout>"))
}

fn emit_table<R: Record>(rows: &[R], out: &OutputArgs) -> Result<(), CliError> {
    let path = out.output.as_deref();
    let mut w = open_output(path)?;
    write_table(rows, out.format, &mut w)
        .and_then(|_| w.flush())
        .map_err(|e| CliError::io(output_path(path), e))
}

fn emit_lines(lines: &[String], path: Option<&Path>) -> Result<(), CliError> {
    let mut w = open_output(path)?;
    lines
        .iter()
        .try_for_each(|l| writeln!(w, "{l}"))
        .and_then(|_| w.flush())
        .map_err(|e| CliError::io(output_path(path), e))
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map_err(|e| CliError::io("<stdin>", e))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    }
    Ok(text)
}

pub fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sample(a) => {
            let ms = a.space.source()?;
            let seed = a.seed.seed()?;
            let mut lines = Vec::new();
            for n in a.space.n.values() {
                let space = ms.space(n)?;
                for i in 0..a.count {
                    lines.push(encode_graph(&sample_at(seed, i, space)));
                }
            }
            emit_lines(&lines, a.output.as_deref())
        }
        Command::Classify(a) => {
            let g = decode_graph(&read_input(&a.file)?)?;
            let report = classify_all_with_budget(&g, a.clique_budget)?;
            emit_lines(&[encode_report(&report)], a.output.as_deref())
        }
        Command::Exact(a) => {
            let predicate = a.predicate.as_deref().map(str::parse::<Predicate>).transpose()?;
            let formula = Formula::parse(&a.formula, a.k, predicate)?;
            let rows = experiment::exact_rows(
                formula,
                &a.space.source()?,
                &a.space.n.values(),
                EnumBudget::new(a.budget),
                a.threads.count(),
            )?;
            emit_table(&rows, &a.out)
        }
        Command::Estimate(a) | Command::Sweep(a) => {
            let predicate: Predicate = a.predicate.parse()?;
            let cfg = McConfig {
                samples: a.samples,
                seed: a.seed.seed()?,
                confidence: a.confidence,
                threads: a.threads.count(),
            };
            let rows = experiment::sweep(predicate, &a.space.source()?, &a.space.n.values(), cfg)?;
            emit_table(&rows, &a.out)
        }
        Command::Verify(a) => {
            let report = verify::run(EnumBudget::new(a.budget), a.threads.count())?;
            emit_lines(&report.lines, a.output.as_deref())?;
            if report.ok() {
                Ok(())
            } else {
                Err(CliError::Verification { failed: report.failed })
            }
        }
        Command::Conjecture(a) => {
            let range = a.n.unwrap_or(CONJECTURE_DEFAULT);
            let rows = experiment::conjecture_rows(&range.values())?;
            emit_table(&rows, &a.out)
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn m_and_growth_are_exclusive() {
        let r = Cli::try_parse_from(["x", "sample", "--n", "5", "--m", "3", "--growth", "N"]);
        assert!(r.is_err());
        let r = Cli::try_parse_from(["x", "sample", "--n", "5"]);
        assert!(r.is_err());
    }

    #[test]
    fn missing_seed_in_ci_mode() {
        let cli = Cli::try_parse_from(["x", "sample", "--n", "3", "--m", "3", "--require-seed"])
            .unwrap();
        assert!(matches!(execute(cli), Err(CliError::Usage(_))));
    }
}
