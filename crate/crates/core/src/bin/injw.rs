use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use injective_words::combinatorics::RankSet;
use injective_words::poset::{InjectiveWordPoset, DEFAULT_BUDGET};
use injective_words::rank_selection::{BetaTable, Method};
use injective_words::render::{chain_rows, render_chains, render_report, render_table, Format};
use injective_words::verify::{self, SuiteSelector};
use injective_words::Error;

/// Rank-selected homology of colored injective words.
#[derive(Parser)]
#[command(name = "injw", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of each irreducible in β(S), one row per rank set S.
    Table {
        #[command(flatten)]
        common: Common,
        /// Rank set such as `1,2` (repeatable; `""` is the empty set). Default: every S ⊆ [n].
        #[arg(long = "rank-set")]
        rank_sets: Vec<String>,
        #[arg(long, value_enum, default_value_t = MethodArg::Tau)]
        method: MethodArg,
    },
    /// Run verification suites and report each check.
    Verify {
        #[command(flatten)]
        common: Common,
        /// `all`, `oracle`, `identities`, or a single suite name.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Maximal chain counts a(S) and their alternating sums b(S).
    Chains {
        #[command(flatten)]
        common: Common,
        /// Rank set such as `1,2,3` (repeatable). Default: every S ⊆ [n].
        #[arg(long = "rank-set")]
        rank_sets: Vec<String>,
        /// Print every S ⊆ [n], ignoring --rank-set.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    r: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Largest amount of enumeration work allowed before giving up.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads (default: one per core).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Tau,
    Closed,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Md,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Tau => Method::Tau,
            MethodArg::Closed => Method::Closed,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Md => Format::Md,
        }
    }
}

enum Failure {
    Verification,
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

fn setup(common: &Common) -> Result<(), Error> {
    if common.n == 0 || common.r == 0 {
        return Err(Error::InvalidArgument(format!(
            "need n, r >= 1, got n = {}, r = {}",
            common.n, common.r
        )));
    }
    if let Some(jobs) = common.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Error::InvalidArgument(format!("--jobs: {e}")))?;
    }
    Ok(())
}

fn parse_sets(raw: &[String], n: usize) -> Result<Vec<RankSet>, Error> {
    if raw.is_empty() {
        return Ok(RankSet::all_subsets(n).collect());
    }
    raw.iter().map(|s| RankSet::parse(s, n)).collect()
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Table {
            common,
            rank_sets,
            method,
        } => {
            setup(&common)?;
            let sets = parse_sets(&rank_sets, common.n)?;
            let table =
                BetaTable::compute_for(common.n, common.r, method.into(), &sets, common.budget)?;
            Ok(render_table(&table, common.format.into())?)
        }
        Command::Verify { common, suite } => {
            setup(&common)?;
            let selector: SuiteSelector = suite.parse()?;
            let report = verify::run(selector, common.n, common.r, common.budget)?;
            let text = render_report(&report, common.format.into())?;
            if report.has_failures() {
                print!("{text}");
                return Err(Failure::Verification);
            }
            Ok(text)
        }
        Command::Chains {
            common,
            rank_sets,
            all,
        } => {
            setup(&common)?;
            let sets = if all {
                RankSet::all_subsets(common.n).collect()
            } else {
                parse_sets(&rank_sets, common.n)?
            };
            let poset = InjectiveWordPoset::build(common.n, common.r, common.budget)?;
            let rows = chain_rows(&poset, &sets)?;
            Ok(render_chains(
                common.n,
                common.r,
                &rows,
                common.format.into(),
            )?)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => {
            eprintln!("injw: verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Library(e)) => {
            eprintln!("injw: {e}");
            match e {
                Error::BudgetExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
