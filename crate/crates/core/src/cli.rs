//! Command-line front end.
//!
//! Exit status: 0 success, 1 usage error, 2 input or validation error,
//! 3 ranks requested at a σ where the relation has cycles.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dataset::{bundled_cec05, parse_performance_csv, PerformanceMatrix};
use crate::error::Error;
use crate::half::HalfUnit;
use crate::relation::{
    best_set, cyclic_components, is_cycle_free, maximum_set, minimal_cyclefree_sigma, rank_peeling,
    relation_at, strongly_connected_components, sweep,
};
use crate::report::{self, EdgeReduction, Format, LabelMode, RenderOptions};
use crate::score::{score_matrix, ObjectiveSense, ScoreMatrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_CYCLIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sigrank",
    version,
    about = "Rank optimization algorithms from benchmark tables with significance relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pairwise score matrix D.
    Score(Common),
    /// The relation {(i, j) : D(i, j) >= sigma}.
    Relation(Common),
    /// Rank levels by repeated removal of the maximum set.
    Ranks(Common),
    /// Edge count, cycle status, and maximum set at every distinct score.
    Sweep(Common),
    /// Smallest sigma at which the relation has no cycles.
    SigmaStar(Common),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SenseArg {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LabelArg {
    Index,
    Name,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum SigmaArg {
    Level(HalfUnit),
    /// Use the smallest cycle-free level.
    Star,
}

fn parse_sigma(s: &str) -> Result<SigmaArg, String> {
    if s.eq_ignore_ascii_case("star") {
        return Ok(SigmaArg::Star);
    }
    let v: HalfUnit = s.parse().map_err(|e: Error| e.to_string())?;
    if v.is_negative() {
        return Err(format!("sigma must be non-negative, got {v}"));
    }
    Ok(SigmaArg::Level(v))
}

#[derive(Debug, Args)]
struct Common {
    /// CSV file (functions as rows, algorithms as columns) or `cec05`.
    #[arg(long)]
    input: String,
    /// Significance level on the half-unit grid, or `star` for the smallest
    /// cycle-free level.
    #[arg(long, value_parser = parse_sigma)]
    sigma: Option<SigmaArg>,
    #[arg(long, value_enum, default_value = "min")]
    sense: SenseArg,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Read rows as algorithms and columns as functions.
    #[arg(long)]
    transpose: bool,
    /// Draw only the transitive reduction (dot output).
    #[arg(long)]
    reduce: bool,
    /// Node labels in dot output.
    #[arg(long, value_enum, default_value = "index")]
    labels: LabelArg,
    /// Annotate dot arcs with their scores.
    #[arg(long)]
    annotate: bool,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn data(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_DATA,
            message: message.into(),
        }
    }
}

fn load(common: &Common) -> Result<PerformanceMatrix, Failure> {
    let sense = match common.sense {
        SenseArg::Min => ObjectiveSense::Minimize,
        SenseArg::Max => ObjectiveSense::Maximize,
    };
    if common.input.eq_ignore_ascii_case("cec05") {
        let m = bundled_cec05().with_sense(sense);
        return Ok(if common.transpose { m.transposed() } else { m });
    }
    let path = PathBuf::from(&common.input);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Failure::data(format!("cannot read {}: {e}", path.display())))?;
    parse_performance_csv(&text, sense, common.transpose)
        .map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

fn text_or_json(format: FormatArg, command: &str) -> Result<Format, Failure> {
    match format {
        FormatArg::Text => Ok(Format::Text),
        FormatArg::Json => Ok(Format::Json),
        FormatArg::Dot => Err(Failure::usage(format!(
            "--format dot is only available for the relation command, not {command}"
        ))),
    }
}

fn resolve_sigma(
    common: &Common,
    scores: &ScoreMatrix,
    command: &str,
) -> Result<HalfUnit, Failure> {
    match &common.sigma {
        Some(SigmaArg::Level(v)) => Ok(*v),
        Some(SigmaArg::Star) => Ok(minimal_cyclefree_sigma(scores)),
        None => Err(Failure::usage(format!(
            "{command} requires --sigma <level|star>"
        ))),
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

#[derive(Serialize)]
struct RelationDocument {
    sigma: HalfUnit,
    algorithms: Vec<String>,
    edges: Vec<[usize; 2]>,
    cycle_free: bool,
    maximum_set: Vec<usize>,
    best_set: Vec<usize>,
    cyclic_components: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct SigmaStarDocument {
    sigma_star: HalfUnit,
}

fn execute(command: &Command) -> Result<String, Failure> {
    let (name, common) = match command {
        Command::Score(c) => ("score", c),
        Command::Relation(c) => ("relation", c),
        Command::Ranks(c) => ("ranks", c),
        Command::Sweep(c) => ("sweep", c),
        Command::SigmaStar(c) => ("sigma-star", c),
    };
    // validate format before touching the input
    if !matches!(command, Command::Relation(_)) {
        text_or_json(common.format, name)?;
    }
    let matrix = load(common)?;
    let names = matrix.algorithm_names().to_vec();
    let scores = score_matrix(&matrix);

    match command {
        Command::Score(_) => {
            let format = text_or_json(common.format, name)?;
            Ok(report::render_scores(&scores, &names, format).expect("names match matrix"))
        }
        Command::Relation(_) => {
            let sigma = resolve_sigma(common, &scores, name)?;
            let relation =
                relation_at(&scores, sigma).map_err(|e| Failure::usage(e.to_string()))?;
            match common.format {
                FormatArg::Dot => {
                    let options = RenderOptions {
                        label_mode: match common.labels {
                            LabelArg::Index => LabelMode::Index,
                            LabelArg::Name => LabelMode::Name,
                        },
                        edge_reduction: if common.reduce {
                            EdgeReduction::TransitiveReduction
                        } else {
                            EdgeReduction::Full
                        },
                        include_scores: common.annotate,
                    };
                    Ok(report::to_dot(&relation, &names, &options, Some(&scores))
                        .expect("names match matrix"))
                }
                FormatArg::Json => {
                    let doc = RelationDocument {
                        sigma,
                        algorithms: names,
                        edges: relation
                            .edges()
                            .iter()
                            .map(|&(i, j)| [i + 1, j + 1])
                            .collect(),
                        cycle_free: is_cycle_free(&relation),
                        maximum_set: one_based(&maximum_set(&relation)),
                        best_set: one_based(&best_set(&relation)),
                        cyclic_components: cyclic_components(&relation)
                            .iter()
                            .map(|c| one_based(c))
                            .collect(),
                    };
                    Ok(serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n")
                }
                FormatArg::Text => {
                    let label = |i: usize| format!("{} {}", i + 1, names[i]);
                    let list = |v: &[usize]| {
                        if v.is_empty() {
                            "(none)".to_string()
                        } else {
                            v.iter().map(|&i| label(i)).collect::<Vec<_>>().join(", ")
                        }
                    };
                    let mut out = format!(
                        "sigma = {}: {} pairs, {}\n",
                        sigma,
                        relation.edges().len(),
                        if is_cycle_free(&relation) {
                            "cycle-free"
                        } else {
                            "cyclic"
                        }
                    );
                    out += &format!("maximum set: {}\n", list(&maximum_set(&relation)));
                    out += &format!("best set: {}\n", list(&best_set(&relation)));
                    for comp in strongly_connected_components(&relation)
                        .iter()
                        .filter(|c| c.len() > 1)
                    {
                        out += &format!("cycle: {}\n", list(comp));
                    }
                    for &(i, j) in relation.edges() {
                        out += &format!("{} -> {}  (D = {})\n", i + 1, j + 1, scores.get(i, j));
                    }
                    Ok(out)
                }
            }
        }
        Command::Ranks(_) => {
            let format = text_or_json(common.format, name)?;
            let sigma = resolve_sigma(common, &scores, name)?;
            match rank_peeling(&scores, sigma) {
                Ok(ranks) => {
                    Ok(report::render_ranks(&ranks, &names, format).expect("names match matrix"))
                }
                Err(e @ Error::Cyclic(_)) => Err(Failure {
                    code: EXIT_CYCLIC,
                    message: format!("cannot rank at sigma = {sigma}: {e}"),
                }),
                Err(e) => Err(Failure::usage(e.to_string())),
            }
        }
        Command::Sweep(_) => {
            let format = text_or_json(common.format, name)?;
            Ok(report::render_sweep(&sweep(&scores), format))
        }
        Command::SigmaStar(_) => {
            let format = text_or_json(common.format, name)?;
            let star = minimal_cyclefree_sigma(&scores);
            Ok(match format {
                Format::Text => format!("{star}\n"),
                Format::Json => {
                    serde_json::to_string(&SigmaStarDocument { sigma_star: star })
                        .expect("plain data serializes")
                        + "\n"
                }
            })
        }
    }
}

/// Runs the CLI on `argv` (program name first), writing the payload to
/// `stdout` and diagnostics to `stderr`. Returns the exit status.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(payload) => {
            if let Err(e) = stdout.write_all(payload.as_bytes()) {
                let _ = writeln!(stderr, "error: writing output: {e}");
                return EXIT_DATA;
            }
            EXIT_OK
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
