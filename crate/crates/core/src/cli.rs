//! The `l1lines` command line.
//!
//! Every command that reads a point set prints a JSON report carrying a
//! version tag, the canonical input text and its SHA-256 hash. Exit codes
//! are fixed:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | file could not be read or written |
//! | 2 | invalid flags or sweep configuration |
//! | 3 | malformed input (point set or matrix) |
//! | 4 | line bound violated |
//! | 5 | a verifier check failed |
//! | 6 | oracle or rotation mismatch |

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::anomaly::AnomalyKind;
use crate::arrows::{build_graph_from, coinciding_pairs, pruned_graph, Arrow};
use crate::error::Error;
use crate::geometry::{MetricKind, Point, PointSet};
use crate::io::{input_hash, parse_point_set, serialize_point_set, sha256_hex};
use crate::lines::{enumerate_lines, half_ceil, LineCatalog};
use crate::oracle::{catalog_difference, lines_from_matrix, oracle_check, parse_matrix, rotate_45};
use crate::search::{parse_grid, parse_range, run_sweep, SweepConfig, SweepMode};
use crate::verifier::verify_theorem;

pub const REPORT_VERSION: &str = "l1lines-report/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_BOUND: i32 = 4;
pub const EXIT_ANOMALY: i32 = 5;
pub const EXIT_ORACLE: i32 = 6;

#[derive(Debug, Parser)]
#[command(name = "l1lines", version, about = "Metric lines of planar point sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    L1,
    Linf,
}

impl From<MetricArg> for MetricKind {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::L1 => MetricKind::L1,
            MetricArg::Linf => MetricKind::Linf,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the distinct lines of a point set.
    Lines {
        /// Point-set file, or `-` for standard input.
        file: PathBuf,
        #[arg(long, value_enum, default_value = "l1")]
        metric: MetricArg,
        /// List every line with its members and generating pairs.
        #[arg(long)]
        full: bool,
    },
    /// Blue and red arrows, coinciding pairs and degrees.
    Arrows { file: PathBuf },
    /// Run the certifying checker for the line bound.
    Verify { file: PathBuf },
    /// Print the 45 degree rotation `(x, y) -> (x + y, x - y)` of a point set.
    Rotate { file: PathBuf },
    /// Compare the fast enumeration with the distance-matrix oracle.
    OracleCheck {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "l1")]
        metric: MetricArg,
        /// Use this distance matrix as the oracle input instead of the one
        /// computed from the points.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Lines of an arbitrary finite metric space given as a distance matrix.
    MatrixLines {
        file: PathBuf,
        #[arg(long)]
        full: bool,
    },
    /// Exhaustive or random sweep.
    Search(SearchArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct SearchArgs {
    /// `exhaustive` or `random`.
    #[arg(long)]
    pub mode: Option<String>,
    /// Grid size `WxH` for exhaustive sweeps.
    #[arg(long)]
    pub grid: Option<String>,
    /// Number of points, `A-B` or `N`.
    #[arg(long)]
    pub n: Option<String>,
    /// Number of random sets.
    #[arg(long)]
    pub count: Option<u64>,
    /// Random coordinates lie in `0..=coord-max`.
    #[arg(long)]
    pub coord_max: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub workers: Option<usize>,
    /// `key=value` config file; flags override its entries.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub distinct_coords: bool,
    #[arg(long)]
    pub check_linf: bool,
    #[arg(long)]
    pub check_oracle: bool,
    /// Directory for replayable witness files.
    #[arg(long)]
    pub witness_dir: Option<PathBuf>,
    #[arg(long)]
    pub max_instances: Option<u64>,
    /// Number of anomalies listed in the report.
    #[arg(long)]
    pub max_recorded: Option<usize>,
}

/// A failed command: exit code and message.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::InvalidCoord(_)
        | Error::DuplicatePoint { .. }
        | Error::TooFewPoints { .. }
        | Error::NotAMetric(_) => EXIT_PARSE,
        Error::InvalidConfig(_) | Error::SweepTooLarge(_) | Error::CannotAvoidDuplicates(_) => {
            EXIT_USAGE
        }
        Error::RotationMismatch(_) => EXIT_ORACLE,
        _ => EXIT_IO,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(exit_code(&e), e.to_string())
    }
}

/// Output of a successful or failed command.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read_text(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load_points(path: &Path) -> Result<PointSet, Failure> {
    let text = read_text(path)?;
    parse_point_set(&text)
        .map_err(|e| Failure::new(exit_code(&e), format!("{}: {e}", path.display())))
}

fn point_json(p: &Point) -> Value {
    json!([p.x.to_string(), p.y.to_string()])
}

fn arrow_json(set: &PointSet, a: &Arrow) -> Value {
    json!({
        "color": a.color,
        "tail": a.tail,
        "head": a.head,
        "from": point_json(set.point(a.tail)),
        "to": point_json(set.point(a.head)),
    })
}

fn envelope(command: &str, set: &PointSet) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("version".into(), json!(REPORT_VERSION));
    m.insert("command".into(), json!(command));
    m.insert("input_hash".into(), json!(input_hash(set)));
    m.insert("input".into(), json!(serialize_point_set(set)));
    m.insert("n".into(), json!(set.len()));
    m
}

fn render(m: serde_json::Map<String, Value>) -> String {
    let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("reports serialize");
    s.push('\n');
    s
}

fn catalog_json(catalog: &LineCatalog, set: Option<&PointSet>) -> Value {
    catalog
        .entries
        .iter()
        .map(|(members, gens)| {
            let mut line = json!({ "members": members, "generators": gens });
            if let Some(set) = set {
                line["points"] = members.iter().map(|&i| point_json(set.point(i))).collect();
            }
            line
        })
        .collect()
}

/// Report of the `lines` command.
pub fn lines_report(set: &PointSet, metric: MetricKind, full: bool) -> Result<String, Failure> {
    let catalog = enumerate_lines(set, metric)?;
    let mut m = envelope("lines", set);
    m.insert("metric".into(), json!(metric));
    m.insert("count".into(), json!(catalog.len()));
    m.insert("universal".into(), json!(catalog.has_universal()));
    m.insert("required".into(), json!(half_ceil(set.len())));
    if full {
        m.insert("lines".into(), catalog_json(&catalog, Some(set)));
    }
    Ok(render(m))
}

/// Report of the `arrows` command.
pub fn arrows_report(set: &PointSet) -> Result<String, Failure> {
    let catalog = enumerate_lines(set, MetricKind::L1)?;
    let graph = build_graph_from(set, &catalog);
    let scan = coinciding_pairs(set, &graph);
    let pruned = pruned_graph(&graph, &scan.pairs);
    let arrows =
        |color| -> Vec<Value> { graph.of_color(color).map(|a| arrow_json(set, a)).collect() };
    let mut m = envelope("arrows", set);
    m.insert("blue".into(), json!(arrows(crate::arrows::Color::Blue)));
    m.insert("red".into(), json!(arrows(crate::arrows::Color::Red)));
    m.insert("edge_count".into(), json!(graph.edge_count()));
    m.insert(
        "coinciding".into(),
        scan.pairs
            .iter()
            .map(|p| json!({ "blue": arrow_json(set, &p.blue), "red": arrow_json(set, &p.red), "line": p.line }))
            .collect(),
    );
    m.insert("k".into(), json!(scan.pairs.len()));
    m.insert("pruned_edge_count".into(), json!(pruned.edge_count()));
    m.insert("out_degree".into(), json!(graph.out_degree));
    m.insert("in_degree".into(), json!(graph.in_degree));
    m.insert("isolated".into(), json!(graph.isolated()));
    if !scan.violations.is_empty() || !graph.skipped.is_empty() {
        let all: Vec<_> = scan.violations.iter().chain(&graph.skipped).collect();
        m.insert("anomalies".into(), json!(all));
    }
    Ok(render(m))
}

/// The `verify` command: report text and exit code.
pub fn verify_outcome(set: &PointSet) -> Result<Outcome, Failure> {
    let report = verify_theorem(set)?;
    let mut m = envelope("verify", set);
    let Value::Object(body) = serde_json::to_value(&report).expect("reports serialize") else {
        unreachable!("a struct serializes to an object")
    };
    m.extend(body);
    let mut out = Outcome {
        stdout: render(m),
        ..Outcome::default()
    };
    if report.is_clean() {
        return Ok(out);
    }
    let bound = !report.universal && !report.bound_holds
        || report
            .anomalies
            .iter()
            .any(|a| a.kind == AnomalyKind::Bound);
    out.code = if bound { EXIT_BOUND } else { EXIT_ANOMALY };
    for a in &report.anomalies {
        out.stderr.push_str(&format!("anomaly: {a}\n"));
    }
    out.stderr.push_str("witness:\n");
    out.stderr.push_str(&serialize_point_set(set));
    Ok(out)
}

/// The `oracle-check` command.
pub fn oracle_outcome(
    set: &PointSet,
    metric: MetricKind,
    matrix: Option<&str>,
) -> Result<Outcome, Failure> {
    let diff = match matrix {
        None => oracle_check(set, metric)?,
        Some(text) => {
            let d = parse_matrix(text)?;
            if d.len() != set.len() {
                return Err(Failure::new(
                    EXIT_PARSE,
                    format!("matrix has {} points, point set has {}", d.len(), set.len()),
                ));
            }
            catalog_difference(&enumerate_lines(set, metric)?, &lines_from_matrix(&d))
        }
    };
    let mut m = envelope("oracle-check", set);
    m.insert("metric".into(), json!(metric));
    m.insert("identical".into(), json!(diff.is_none()));
    if let Some(d) = &diff {
        m.insert("first_difference".into(), json!(d));
    }
    Ok(Outcome {
        code: if diff.is_some() { EXIT_ORACLE } else { EXIT_OK },
        stdout: render(m),
        stderr: diff.map(|d| format!("mismatch: {d}\n")).unwrap_or_default(),
    })
}

/// Report of the `matrix-lines` command.
pub fn matrix_lines_report(text: &str, full: bool) -> Result<String, Failure> {
    let d = parse_matrix(text)?;
    let catalog = lines_from_matrix(&d);
    let canonical = d.to_text();
    let mut m = serde_json::Map::new();
    m.insert("version".into(), json!(REPORT_VERSION));
    m.insert("command".into(), json!("matrix-lines"));
    m.insert("input_hash".into(), json!(sha256_hex(&canonical)));
    m.insert("input".into(), json!(canonical));
    m.insert("n".into(), json!(d.len()));
    m.insert("count".into(), json!(catalog.len()));
    m.insert("universal".into(), json!(catalog.has_universal()));
    if full {
        m.insert("lines".into(), catalog_json(&catalog, None));
    }
    Ok(render(m))
}

/// Merges the config file and flags, rejecting flags that do not apply to
/// the selected mode.
pub fn search_config(args: &SearchArgs) -> Result<SweepConfig, Failure> {
    let mut cfg = match &args.config {
        Some(path) => SweepConfig::from_kv(&read_text(path)?)
            .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))?,
        None => SweepConfig::default(),
    };
    if let Some(mode) = &args.mode {
        cfg.mode = mode.parse()?;
    }
    if let Some(g) = &args.grid {
        (cfg.grid_width, cfg.grid_height) = parse_grid(g)?;
    }
    if let Some(n) = &args.n {
        (cfg.n_min, cfg.n_max) = parse_range(n)?;
    }
    if let Some(c) = args.count {
        cfg.sample_count = c;
    }
    if let Some(c) = args.coord_max {
        cfg.coord_bound = c;
    }
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if let Some(w) = args.workers {
        cfg.workers = w;
    }
    if let Some(m) = args.max_instances {
        cfg.max_instances = m;
    }
    if let Some(m) = args.max_recorded {
        cfg.max_recorded = m;
    }
    if let Some(d) = &args.witness_dir {
        cfg.witness_dir = Some(d.clone());
    }
    cfg.distinct_coords |= args.distinct_coords;
    cfg.check_linf |= args.check_linf;
    cfg.check_oracle |= args.check_oracle;

    let misplaced: Vec<&str> = match cfg.mode {
        SweepMode::ExhaustiveGrid => [
            ("--count", args.count.is_some()),
            ("--coord-max", args.coord_max.is_some()),
            ("--seed", args.seed.is_some()),
            ("--distinct-coords", args.distinct_coords),
        ]
        .iter()
        .filter(|(_, set)| *set)
        .map(|(f, _)| *f)
        .collect(),
        SweepMode::Random => [
            ("--grid", args.grid.is_some()),
            ("--max-instances", args.max_instances.is_some()),
        ]
        .iter()
        .filter(|(_, set)| *set)
        .map(|(f, _)| *f)
        .collect(),
    };
    if !misplaced.is_empty() {
        let mode = match cfg.mode {
            SweepMode::ExhaustiveGrid => "exhaustive",
            SweepMode::Random => "random",
        };
        return Err(Failure::new(
            EXIT_USAGE,
            format!("{} cannot be used with --mode {mode}", misplaced.join(", ")),
        ));
    }
    cfg.validate()?;
    Ok(cfg)
}

/// The `search` command.
pub fn search_outcome(cfg: &SweepConfig) -> Result<Outcome, Failure> {
    let result = run_sweep(cfg)?;
    let mut m = serde_json::Map::new();
    m.insert("version".into(), json!(REPORT_VERSION));
    m.insert("command".into(), json!("search"));
    m.insert(
        "input_hash".into(),
        json!(sha256_hex(&cfg.canonical_text())),
    );
    m.insert("config".into(), json!(cfg.canonical()));
    m.insert(
        "result".into(),
        serde_json::to_value(&result).expect("reports serialize"),
    );
    let code = if result.bound_violations > 0 {
        EXIT_BOUND
    } else if result
        .anomaly_counts
        .contains_key(AnomalyKind::OracleMismatch.name())
    {
        EXIT_ORACLE
    } else if result.anomaly_total > 0 {
        EXIT_ANOMALY
    } else {
        EXIT_OK
    };
    let mut stderr = String::new();
    for (kind, count) in &result.anomaly_counts {
        stderr.push_str(&format!("anomaly {kind}: {count}\n"));
    }
    Ok(Outcome {
        code,
        stdout: render(m),
        stderr,
    })
}

fn dispatch(command: Command) -> Result<Outcome, Failure> {
    let ok = |stdout| {
        Ok(Outcome {
            stdout,
            ..Outcome::default()
        })
    };
    match command {
        Command::Lines { file, metric, full } => {
            ok(lines_report(&load_points(&file)?, metric.into(), full)?)
        }
        Command::Arrows { file } => ok(arrows_report(&load_points(&file)?)?),
        Command::Verify { file } => verify_outcome(&load_points(&file)?),
        Command::Rotate { file } => ok(serialize_point_set(&rotate_45(&load_points(&file)?))),
        Command::OracleCheck {
            file,
            metric,
            matrix,
        } => {
            let set = load_points(&file)?;
            let text = matrix.as_deref().map(read_text).transpose()?;
            oracle_outcome(&set, metric.into(), text.as_deref())
        }
        Command::MatrixLines { file, full } => ok(matrix_lines_report(&read_text(&file)?, full)?),
        Command::Search(args) => search_outcome(&search_config(&args)?),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    code,
                    stderr: text,
                    ..Outcome::default()
                }
            };
        }
    };
    dispatch(cli.command).unwrap_or_else(|f| Outcome {
        code: f.code,
        stderr: format!("error: {}\n", f.message),
        ..Outcome::default()
    })
}

/// Runs with the process arguments, writing to stdout and stderr.
pub fn run() -> i32 {
    let out = execute(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    out.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(c: &[(i64, i64)]) -> PointSet {
        PointSet::from_ints(c).unwrap()
    }

    fn field(report: &str, key: &str) -> Value {
        serde_json::from_str::<Value>(report).unwrap()[key].clone()
    }

    #[test]
    fn lines_examples() {
        let r = lines_report(&pts(&[(0, 0), (1, 0), (2, 0)]), MetricKind::L1, false).unwrap();
        assert_eq!(field(&r, "count"), json!(1));
        assert_eq!(field(&r, "universal"), json!(true));
        let r = lines_report(&pts(&[(0, 0), (1, 1), (2, 0)]), MetricKind::L1, true).unwrap();
        assert_eq!(field(&r, "count"), json!(3));
        assert_eq!(field(&r, "lines").as_array().unwrap().len(), 3);
        assert_eq!(field(&r, "version"), json!(REPORT_VERSION));
    }

    #[test]
    fn horizontal_set_has_no_arrows() {
        let r = arrows_report(&pts(&[(0, 0), (1, 0), (3, 0), (7, 0)])).unwrap();
        assert_eq!(field(&r, "edge_count"), json!(0));
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(
            verify_outcome(&pts(&[(0, 0), (1, 1), (2, 0)]))
                .unwrap()
                .code,
            EXIT_OK
        );
        let o = verify_outcome(&pts(&[(0, 0), (0, 1), (0, 2)])).unwrap();
        assert_eq!(o.code, EXIT_OK);
        assert_eq!(field(&o.stdout, "universal"), json!(true));
    }

    #[test]
    fn corrupt_matrix_is_a_mismatch() {
        let set = pts(&[(0, 0), (1, 1), (2, 0)]);
        // Collinear distances: the middle point is between the others.
        let o = oracle_outcome(&set, MetricKind::L1, Some("3\n0 1 2\n1 0 1\n2 1 0\n")).unwrap();
        assert_eq!(o.code, EXIT_ORACLE);
        assert!(o.stderr.contains("mismatch"));
        let o = oracle_outcome(&set, MetricKind::L1, Some("3\n0 2 2\n2 0 2\n2 2 0\n")).unwrap();
        assert_eq!(o.code, EXIT_OK);
    }

    #[test]
    fn search_flag_combinations() {
        let args = SearchArgs {
            mode: Some("exhaustive".into()),
            seed: Some(3),
            ..SearchArgs::default()
        };
        let f = search_config(&args).unwrap_err();
        assert_eq!(f.code, EXIT_USAGE);
        assert!(f.message.contains("--seed"));
        let args = SearchArgs {
            grid: Some("100x100".into()),
            n: Some("10".into()),
            ..SearchArgs::default()
        };
        let f = search_config(&args).unwrap_err();
        assert!(f.message.contains("sweep too large"), "{}", f.message);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(execute(["l1lines", "frobnicate"]).code, EXIT_USAGE);
        assert_eq!(execute(["l1lines", "--help"]).code, EXIT_OK);
        assert_eq!(
            execute(["l1lines", "lines", "/nonexistent/file"]).code,
            EXIT_IO
        );
    }
}
