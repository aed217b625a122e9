//! Command-line pipeline: ingest → bound → rank → compare → emit.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::comparison::{comparison_matrix, ComparisonRecord, PairSelection};
use crate::interval::IntInterval;
use crate::io::{self, EdgeDocument, InputFormat};
use crate::poset::{
    BoundingOptions, Poset, PosetError, DEFAULT_BOTTOM, DEFAULT_CHAIN_CAP, DEFAULT_TOP,
};
use crate::rank::{
    enumerate_strict_rank_functions, standard_interval_rank, validate_rank_assignment, OrderTag,
    RankAssignment, RankError, DEFAULT_MAX_ENUM_ELEMENTS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "intrank",
    version,
    about = "Interval ranks for DAG hierarchies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-element rank table.
    Rank(RankArgs),
    /// Pairwise rank-interval comparisons.
    Compare(CompareArgs),
    /// Graphviz layout aligned at rank midpoints.
    Layout(LayoutArgs),
    /// Validate a rank assignment file against an interval order.
    Check(CheckArgs),
    /// List every strict interval rank function of a small poset.
    Enumerate(EnumerateArgs),
    /// Height, chains, spindle, gradedness and width histogram.
    Stats(StatsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Auto,
    Edgelist,
    Obo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PairsArg {
    All,
    Covers,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Hierarchy file: `child<TAB>parent` lines or OBO.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = DEFAULT_BOTTOM)]
    bottom_name: String,
    #[arg(long, default_value = DEFAULT_TOP)]
    top_name: String,
}

#[derive(Debug, Args)]
struct RankArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Defaults to csv on a terminal and json otherwise.
    #[arg(long, value_enum)]
    output: Option<OutputFormat>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "json")]
    output: OutputFormat,
    #[arg(long, value_enum, default_value = "all")]
    pairs: PairsArg,
}

#[derive(Debug, Args)]
struct LayoutArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "dot")]
    output: OutputFormat,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Rank assignment: JSON object mapping element id to `[lo, hi]`, or a
    /// rank CSV as written by `rank`.
    #[arg(long)]
    ranks: PathBuf,
    #[arg(long, default_value = "weak-dual", value_parser = OrderTag::from_str)]
    order: OrderTag,
    /// Also require strictly monotone endpoints.
    #[arg(long)]
    strict: bool,
    /// Print the full report as JSON instead of one line per violation.
    #[arg(long, value_enum)]
    output: Option<OutputFormat>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value = "weak-dual", value_parser = OrderTag::from_str)]
    order: OrderTag,
    #[arg(long, default_value_t = DEFAULT_MAX_ENUM_ELEMENTS, value_parser = parse_positive)]
    max_enum_elements: usize,
    #[arg(long, value_enum, default_value = "json")]
    output: OutputFormat,
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Maximum number of chains to enumerate explicitly.
    #[arg(long, default_value_t = DEFAULT_CHAIN_CAP, value_parser = parse_positive)]
    chain_cap: usize,
    /// Fail with exit code 3 if the chain cap truncates enumeration.
    #[arg(long)]
    require_full_enumeration: bool,
    #[arg(long, value_enum, default_value = "json")]
    output: OutputFormat,
}

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be a positive integer".to_string()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// A failure with its exit code and a one-line diagnostic.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

fn require_output(cmd: &str, got: OutputFormat, allowed: &[OutputFormat]) -> Result<(), Failure> {
    if allowed.contains(&got) {
        Ok(())
    } else {
        Err(Failure::input(format!(
            "`{cmd}` does not support --output {}",
            got.to_possible_value()
                .expect("no skipped variants")
                .get_name()
        )))
    }
}

/// A rank assignment is either a JSON object `{"id": [lo, hi], ...}` or a
/// rank CSV as written by `rank`.
fn read_assignment(text: &str, path: &Path) -> Result<BTreeMap<String, IntInterval>, Failure> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text)
            .map_err(|e| Failure::input(format!("{}:{}: {e}", path.display(), e.line())));
    }
    let rt = io::parse_rank_csv(text, &path.display().to_string())
        .map_err(|e| Failure::input(e.to_string()))?;
    Ok(rt
        .rows()
        .iter()
        .map(|r| (r.id.clone(), r.interval()))
        .collect())
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load(args: &InputArgs) -> Result<(Poset, String), Failure> {
    let text = read_text(&args.input)?;
    let source = args.input.display().to_string();
    let format = match args.format {
        FormatArg::Auto => io::detect_format(&args.input, &text),
        FormatArg::Edgelist => InputFormat::Edgelist,
        FormatArg::Obo => InputFormat::Obo,
    };
    let doc = io::parse(format, &text, &source).map_err(|e| Failure::input(e.to_string()))?;
    let options = BoundingOptions {
        bottom_name: args.bottom_name.clone(),
        top_name: args.top_name.clone(),
    };
    let poset = Poset::build(&doc.edges, &options).map_err(|e| poset_failure(&doc, e))?;
    Ok((poset, source))
}

fn poset_failure(doc: &EdgeDocument, err: PosetError) -> Failure {
    let line = match &err {
        PosetError::CycleDetected { cycle } => cycle.windows(2).find_map(|w| {
            doc.edges
                .iter()
                .position(|(c, p)| c == &w[0] && p == &w[1])
                .map(|i| doc.line_numbers[i])
        }),
        PosetError::EmptyId { index } => doc.line_numbers.get(*index).copied(),
        _ => None,
    };
    match line {
        Some(line) => Failure::input(format!("{}:{line}: {err}", doc.source_name)),
        None => Failure::input(format!("{}: {err}", doc.source_name)),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn comparisons_csv(records: &[ComparisonRecord]) -> String {
    let mut out =
        String::from("a,b,relation,alpha_lo,alpha_hi,sep_lo,sep_hi,sep_width,same_rank_group\n");
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for r in records {
        w.write_record([
            r.a.clone(),
            r.b.clone(),
            r.relation.name().to_string(),
            r.alpha.lo().to_string(),
            r.alpha.hi().to_string(),
            r.sep.lo().to_string(),
            r.sep.hi().to_string(),
            r.sep_width.to_string(),
            r.same_rank_group.to_string(),
        ])
        .expect("in-memory write");
    }
    out.push_str(&String::from_utf8(w.into_inner().expect("in-memory")).expect("utf-8"));
    out
}

#[derive(Serialize)]
struct StatsReport {
    source: String,
    element_count: usize,
    cover_count: usize,
    height: usize,
    chain_count: u128,
    chains_enumerated: usize,
    truncated: bool,
    graded: bool,
    spindle: Vec<String>,
    width_histogram: Vec<usize>,
}

#[derive(Serialize)]
struct EnumerationReport<'a> {
    order: OrderTag,
    count: usize,
    assignments: Vec<&'a BTreeMap<String, IntInterval>>,
}

/// Parse arguments, run one command and return its exit code.
pub fn run<I, T>(
    args: I,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    stdout_is_terminal: bool,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli, stdout_is_terminal) {
        Ok((target, text, code)) => {
            let written = match target {
                Some(path) => std::fs::write(&path, text.as_bytes())
                    .map_err(|e| format!("{}: {e}", path.display())),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => code,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_INPUT
                }
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

type Outcome = (Option<PathBuf>, String, i32);

fn execute(cli: Cli, stdout_is_terminal: bool) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Rank(a) => {
            let output = a
                .output
                .unwrap_or(if stdout_is_terminal && a.input.out.is_none() {
                    OutputFormat::Csv
                } else {
                    OutputFormat::Json
                });
            require_output("rank", output, &[OutputFormat::Json, OutputFormat::Csv])?;
            let (p, source) = load(&a.input)?;
            let rt = standard_interval_rank(&p);
            let text = match output {
                OutputFormat::Csv => io::write_rank_csv(&rt),
                _ => io::write_report_json(&p, &rt, &[], &source),
            };
            Ok((a.input.out, text, EXIT_OK))
        }
        Command::Compare(a) => {
            require_output(
                "compare",
                a.output,
                &[OutputFormat::Json, OutputFormat::Csv],
            )?;
            let (p, source) = load(&a.input)?;
            let rt = standard_interval_rank(&p);
            let pairs = match a.pairs {
                PairsArg::All => PairSelection::All,
                PairsArg::Covers => PairSelection::Covers,
            };
            let matrix = comparison_matrix(&p, &rt, pairs);
            let text = match a.output {
                OutputFormat::Csv => comparisons_csv(&matrix),
                _ => io::write_report_json(&p, &rt, &matrix, &source),
            };
            Ok((a.input.out, text, EXIT_OK))
        }
        Command::Layout(a) => {
            require_output("layout", a.output, &[OutputFormat::Dot])?;
            let (p, _) = load(&a.input)?;
            let rt = standard_interval_rank(&p);
            Ok((a.input.out, io::write_layout_dot(&p, &rt), EXIT_OK))
        }
        Command::Check(a) => {
            if let Some(o) = a.output {
                require_output("check", o, &[OutputFormat::Json])?;
            }
            let (p, _) = load(&a.input)?;
            let ranks_text = read_text(&a.ranks)?;
            let intervals = read_assignment(&ranks_text, &a.ranks)?;
            let ra = RankAssignment::new(a.order, intervals);
            let report = validate_rank_assignment(&p, &ra, a.strict)
                .map_err(|e| Failure::input(format!("{}: {e}", a.ranks.display())))?;
            let code = if report.is_valid() {
                EXIT_OK
            } else {
                EXIT_INVALID
            };
            let text = if a.output == Some(OutputFormat::Json) {
                json(&report)
            } else {
                let mut s = String::new();
                for v in &report.violations {
                    let kind = match v.kind {
                        crate::rank::ViolationKind::Relation => "relation",
                        crate::rank::ViolationKind::LowerEndpoint => "lower-endpoint",
                        crate::rank::ViolationKind::UpperEndpoint => "upper-endpoint",
                    };
                    writeln!(
                        s,
                        "violation\t{kind}\t{} < {}\t{} vs {}",
                        v.lower, v.upper, v.lower_interval, v.upper_interval
                    )
                    .unwrap();
                }
                writeln!(
                    s,
                    "{}: {} comparable pairs checked, {} violation(s) for {}{}",
                    if report.is_valid() {
                        "valid"
                    } else {
                        "invalid"
                    },
                    report.checked_pairs,
                    report.violations.len(),
                    report.order_tag,
                    if report.strict { " (strict)" } else { "" }
                )
                .unwrap();
                s
            };
            Ok((a.input.out, text, code))
        }
        Command::Enumerate(a) => {
            require_output(
                "enumerate",
                a.output,
                &[OutputFormat::Json, OutputFormat::Csv],
            )?;
            let (p, _) = load(&a.input)?;
            let all =
                enumerate_strict_rank_functions(&p, a.order, a.max_enum_elements).map_err(|e| {
                    match e {
                        RankError::PosetTooLarge { .. } => Failure {
                            code: EXIT_LIMIT,
                            message: e.to_string(),
                        },
                        other => Failure::input(other.to_string()),
                    }
                })?;
            let text = match a.output {
                OutputFormat::Csv => {
                    let mut s = String::from("assignment,element,lo,hi\n");
                    for (i, ra) in all.iter().enumerate() {
                        for (id, iv) in &ra.intervals {
                            writeln!(s, "{i},{id},{},{}", iv.lo(), iv.hi()).unwrap();
                        }
                    }
                    s
                }
                _ => json(&EnumerationReport {
                    order: a.order,
                    count: all.len(),
                    assignments: all.iter().map(|r| &r.intervals).collect(),
                }),
            };
            Ok((a.input.out, text, EXIT_OK))
        }
        Command::Stats(a) => {
            require_output("stats", a.output, &[OutputFormat::Json])?;
            let (p, source) = load(&a.input)?;
            let rt = standard_interval_rank(&p);
            let chains = p.maximal_chains(a.chain_cap);
            if a.require_full_enumeration && chains.truncated {
                return Err(Failure {
                    code: EXIT_LIMIT,
                    message: format!(
                        "{source}: {} maximal chains exceed --chain-cap {}",
                        chains.count, a.chain_cap
                    ),
                });
            }
            let report = StatsReport {
                source,
                element_count: p.len(),
                cover_count: p.cover_edges().len(),
                height: p.height(),
                chain_count: chains.count,
                chains_enumerated: chains.chains.len(),
                truncated: chains.truncated,
                graded: p.is_graded(),
                spindle: p.spindle_elements().into_iter().map(String::from).collect(),
                width_histogram: rt.width_histogram(),
            };
            Ok((a.input.out, json(&report), EXIT_OK))
        }
    }
}
