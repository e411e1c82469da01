//! Command-line front end: one subcommand per solver, JSON in/out (a line
//! protocol for `sets`), deterministic output, oracle cross-checks and
//! seed-driven instance generation.

pub mod commands;
pub mod generate;
pub mod schema;
pub mod sets_script;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use commands::{CliError, Flags, Output};
use sets_script::{AggfKind, SetsMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_STRICT_INFEASIBLE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PropArg {
    #[value(name = "one-item")]
    OneItem,
    Path,
    Cycle,
    Segment,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetsModeArg {
    #[value(name = "online-inv")]
    OnlineInv,
    #[value(name = "online-comm")]
    OnlineComm,
    Offline,
    Splitfind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AggfArg {
    Sum,
    Xor,
    Max,
    Min,
    Mulmod,
}

/// Offline optimization strategy solvers.
#[derive(Debug, Parser)]
#[command(name = "offsolve", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cross-check the result against the matching brute-force oracle.
    #[arg(long, global = true)]
    oracle: bool,
    /// Replay produced scripts/witnesses before printing.
    #[arg(long, global = true)]
    verify: bool,
    /// Exit with status 3 on INFEASIBLE/IMPOSSIBLE/DISCONNECTED results.
    #[arg(long, global = true)]
    strict: bool,
    /// Generate a random instance from this seed instead of reading stdin.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output format for JSON subcommands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum-waiting-time packet transfer under a deadline.
    Transfer,
    /// Maximum-ratio subset search with a pluggable property.
    Ratio {
        #[arg(long, value_enum)]
        prop: PropArg,
    },
    /// Maximum-weight length-bounded path.
    Maxpath,
    /// Maximum-weight length-bounded cycle.
    Maxcycle,
    /// Maximum-sum segment, optionally length-bounded.
    Maxsegment,
    /// Minimum spanning tree with at most one owner's special offer.
    #[command(name = "mst-offers")]
    MstOffers,
    /// Average-free permutation construction.
    Avgfree,
    /// Sorting by split rotations (case 1 or 2).
    Rotsort1,
    /// Sorting by prefix+suffix reversals.
    Rotsort2,
    /// Sorting with a restricted set of allowed position swaps.
    Swapsort,
    /// Minimum-cost sorting by swaps with per-value costs.
    Cyclesort,
    /// Circular sorting of a multi-permutation.
    Circsort,
    /// Adjacent-swap distance between two multi-permutations.
    Adjswaps,
    /// Fewest adjacent swaps to group identical values.
    Group,
    /// Minimum-cost sorting with Move(i, j) operations.
    Movesort,
    /// Ordered union-find / split-find script execution.
    Sets {
        #[arg(long, value_enum)]
        mode: SetsModeArg,
        #[arg(long, value_enum, default_value_t = AggfArg::Sum)]
        aggf: AggfArg,
    },
    /// Minimum-cost resource toggling on trees or tree decompositions.
    Toggle,
}

fn subcommand_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Transfer => "transfer",
        Command::Ratio { .. } => "ratio",
        Command::Maxpath => "maxpath",
        Command::Maxcycle => "maxcycle",
        Command::Maxsegment => "maxsegment",
        Command::MstOffers => "mst-offers",
        Command::Avgfree => "avgfree",
        Command::Rotsort1 => "rotsort1",
        Command::Rotsort2 => "rotsort2",
        Command::Swapsort => "swapsort",
        Command::Cyclesort => "cyclesort",
        Command::Circsort => "circsort",
        Command::Adjswaps => "adjswaps",
        Command::Group => "group",
        Command::Movesort => "movesort",
        Command::Sets { .. } => "sets",
        Command::Toggle => "toggle",
    }
}

/// Runs the CLI against the given arguments and stdin; returns the exit code
/// and everything written to stdout.
pub fn run(args: &[&str], stdin: &str) -> (i32, String) {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                ErrorKind::InvalidSubcommand | ErrorKind::UnknownArgument => EXIT_USAGE,
                _ => EXIT_VALIDATION,
            };
            return (code, e.render().to_string());
        }
    };

    let flags = Flags {
        oracle: cli.oracle,
        verify: cli.verify,
    };
    let name = subcommand_name(&cli.command);

    let sets_mode = match &cli.command {
        Command::Sets { mode, .. } => Some(match mode {
            SetsModeArg::OnlineInv => SetsMode::OnlineInv,
            SetsModeArg::OnlineComm => SetsMode::OnlineComm,
            SetsModeArg::Offline => SetsMode::Offline,
            SetsModeArg::Splitfind => SetsMode::SplitFind,
        }),
        _ => None,
    };

    let (input, generated) = match cli.seed {
        Some(seed) => match generate::generate(name, sets_mode, seed) {
            Ok(doc) => (doc, true),
            Err(e) => return render_error(e),
        },
        None => (stdin.to_string(), false),
    };

    // The sets subcommand speaks its line protocol directly.
    if let Command::Sets { aggf, .. } = &cli.command {
        let aggf = match aggf {
            AggfArg::Sum => AggfKind::Sum,
            AggfArg::Xor => AggfKind::Xor,
            AggfArg::Max => AggfKind::Max,
            AggfArg::Min => AggfKind::Min,
            AggfArg::Mulmod => AggfKind::MulMod,
        };
        return match sets_script::run_sets(&input, sets_mode.unwrap(), aggf, cli.oracle) {
            Ok(answers) => {
                let mut out = String::new();
                if generated {
                    for line in input.lines() {
                        out.push_str("# ");
                        out.push_str(line);
                        out.push('\n');
                    }
                }
                for a in answers {
                    out.push_str(&a);
                    out.push('\n');
                }
                (EXIT_OK, out)
            }
            Err(e) => render_error(e),
        };
    }

    let result = match &cli.command {
        Command::Transfer => commands::transfer(&input, flags),
        Command::Ratio { prop } => {
            let prop = match prop {
                PropArg::OneItem => "one-item",
                PropArg::Path => "path",
                PropArg::Cycle => "cycle",
                PropArg::Segment => "segment",
            };
            commands::ratio(&input, prop, flags)
        }
        Command::Maxpath => commands::maxpath(&input, flags),
        Command::Maxcycle => commands::maxcycle(&input, flags),
        Command::Maxsegment => commands::maxsegment(&input, flags),
        Command::MstOffers => commands::mst_offers(&input, flags),
        Command::Avgfree => commands::avgfree(&input, flags),
        Command::Rotsort1 => commands::rotsort1(&input, flags),
        Command::Rotsort2 => commands::rotsort2(&input, flags),
        Command::Swapsort => commands::swapsort(&input, flags),
        Command::Cyclesort => commands::cyclesort(&input, flags),
        Command::Circsort => commands::circsort(&input, flags),
        Command::Adjswaps => commands::adjswaps(&input, flags),
        Command::Group => commands::group(&input, flags),
        Command::Movesort => commands::movesort(&input, flags),
        Command::Sets { .. } => unreachable!("handled above"),
        Command::Toggle => commands::toggle(&input, flags),
    };

    match result {
        Ok(output) => render_output(output, &cli, &input, generated),
        Err(e) => render_error(e),
    }
}

fn render_output(output: Output, cli: &Cli, input: &str, generated: bool) -> (i32, String) {
    let code = if output.infeasible && cli.strict {
        EXIT_STRICT_INFEASIBLE
    } else {
        EXIT_OK
    };
    let text = match cli.format {
        Format::Json => {
            let doc = if generated {
                let instance: Value =
                    serde_json::from_str(input).unwrap_or(Value::String(input.to_string()));
                json!({"instance": instance, "result": output.json})
            } else {
                output.json
            };
            format!("{doc}\n")
        }
        Format::Plain => format!("{}\n", output.plain),
    };
    (code, text)
}

fn render_error(e: CliError) -> (i32, String) {
    let (code, kind, message) = match e {
        CliError::Validation(m) => (EXIT_VALIDATION, "validation", m),
        CliError::OracleMismatch(m) => (EXIT_MISMATCH, "oracle-mismatch", m),
        CliError::VerifyFailed(m) => (EXIT_MISMATCH, "verify-failed", m),
    };
    let doc = json!({"error": {"kind": kind, "message": message}});
    (code, format!("{doc}\n"))
}
