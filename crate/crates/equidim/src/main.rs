//! Thin command-line front end over the `equidim` library. Each
//! subcommand parses arguments, calls one library entry point, prints
//! the result, and exits with the shared code scheme (0 success,
//! 2 verification failure, 3 timeout, 4 input error).

use clap::{Args, Parser, Subcommand, ValueEnum};
use equidim::cli::{
    self, exit_code_for, CmdOutcome, FamilySpec, GraphInput, OutputFormat,
};
use equidim::constructions::ClosedFamily;
use equidim::error::Error;
use equidim::graph::Label;
use equidim::solver::Strategy;
use std::path::PathBuf;
use std::time::Duration;

#[derive(Parser)]
#[command(name = "equidim", version, about = "Distance-equalizer sets and the equidistant dimension of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Enum,
    Seeded,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Enum => Strategy::SubsetEnumeration,
            StrategyArg::Seeded => Strategy::BipartiteSeeded,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// Graph file in the `v e` text format
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,
    /// Family name followed by its parameters, e.g. `--family grid 3 3`
    #[arg(long, num_args = 1.., value_names = ["NAME", "PARAMS"])]
    family: Option<Vec<String>>,
}

impl InputArgs {
    fn resolve(&self) -> Result<GraphInput, Error> {
        match (&self.file, &self.family) {
            (Some(path), None) => Ok(GraphInput::File(path.clone())),
            (None, Some(tokens)) => Ok(GraphInput::Family(parse_family(tokens)?)),
            _ => Err(Error::Parameter(
                "provide exactly one of --file or --family".into(),
            )),
        }
    }
}

fn parse_family(tokens: &[String]) -> Result<FamilySpec, Error> {
    let (name, rest) = tokens
        .split_first()
        .ok_or_else(|| Error::Parameter("missing family name".into()))?;
    let params: Vec<u32> = rest
        .iter()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::Parameter(format!("bad family parameter {t:?}")))
        })
        .collect::<Result<_, _>>()?;
    FamilySpec::parse(name, &params)
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph and write it to a file
    Gen {
        /// Family name and parameters, e.g. `prism 6`
        #[arg(num_args = 1.., value_names = ["NAME", "PARAMS"])]
        family: Vec<String>,
        /// Output path
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Compute the equidistant dimension exactly
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
        /// Time budget in seconds
        #[arg(long, default_value_t = 60)]
        budget: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Check whether a vertex set is a distance-equalizer set
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Label list, e.g. `"(1,1) (2,2) (3,3)"`
        #[arg(long)]
        set: String,
    },
    /// Build and verify the closed-form witness set for a family
    Construct {
        /// Family name and parameters: hamming n m | hypercube n | prism n | grid n
        #[arg(num_args = 1.., value_names = ["NAME", "PARAMS"])]
        family: Vec<String>,
    },
    /// Reproduce the grid q-table: q(k,n) = xi(P_k x P_n) - ceil(kn/2)
    Table {
        #[arg(long, default_value_t = 6)]
        kmax: u32,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        /// Per-cell time budget in seconds
        #[arg(long, default_value_t = 60)]
        budget: u64,
        /// JSON-lines cache for resuming long runs (also via EQUIDIM_CACHE)
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
    },
    /// Print the bisector of two vertices
    Bisector {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, short)]
        v: String,
        #[arg(long, short)]
        w: String,
    },
}

fn parse_construct_family(tokens: &[String]) -> Result<(ClosedFamily, Vec<u32>), Error> {
    let (name, rest) = tokens
        .split_first()
        .ok_or_else(|| Error::Parameter("missing family name".into()))?;
    let params: Vec<u32> = rest
        .iter()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::Parameter(format!("bad family parameter {t:?}")))
        })
        .collect::<Result<_, _>>()?;
    let family = match name.as_str() {
        "hamming" => ClosedFamily::Hamming2,
        "hypercube" => ClosedFamily::Hypercube,
        "prism" => ClosedFamily::PrismCycle,
        "grid" => ClosedFamily::GridSquare,
        other => {
            return Err(Error::Parameter(format!(
                "no closed-form construction for {other:?} (expected hamming, hypercube, prism, grid)"
            )))
        }
    };
    Ok((family, params))
}

fn run(command: Command) -> Result<CmdOutcome, Error> {
    match command {
        Command::Gen { family, out } => cli::cmd_gen(&parse_family(&family)?, &out),
        Command::Solve {
            input,
            strategy,
            budget,
            format,
        } => cli::cmd_solve(
            &input.resolve()?,
            strategy.into(),
            Duration::from_secs(budget),
            format.into(),
        ),
        Command::Verify { input, set } => {
            let labels = cli::parse_label_list(&set)?;
            cli::cmd_verify(&input.resolve()?, &labels)
        }
        Command::Construct { family } => {
            let (closed, params) = parse_construct_family(&family)?;
            cli::cmd_construct(closed, &params)
        }
        Command::Table {
            kmax,
            nmax,
            budget,
            cache,
            format,
        } => {
            let cache_path = cache.or_else(|| std::env::var_os("EQUIDIM_CACHE").map(PathBuf::from));
            cli::cmd_table(
                kmax,
                nmax,
                Duration::from_secs(budget),
                cache_path.as_deref(),
                format.into(),
            )
        }
        Command::Bisector { input, v, w } => {
            let v = Label::parse(&v)?;
            let w = Label::parse(&w)?;
            cli::cmd_bisector(&input.resolve()?, &v, &w)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            std::process::exit(outcome.code);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code_for(&err));
        }
    }
}
