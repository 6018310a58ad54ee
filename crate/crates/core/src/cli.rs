//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 infeasible or
//! ambiguous. A landmark set that fails a test is an answer, not an error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bounds::{bounds_report, bounds_report_for, BoundParams, BoundsReport};
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::Error;
use crate::generate::{generate, Family};
use crate::graph::{Edge, Graph};
use crate::landmarks::{coordinates, DistanceVectorMatrix, LandmarkSet, Resolution};
use crate::reconstruct::{enumerate_consistent_graphs, reconstruct};
use crate::solvers::{
    is_construction_set, link_dimension, metric_dimension, strong_metric_dimension,
    upgrade_to_construction_set, DimensionResult, SearchOptions,
};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "linkdim", version, about = "Landmark coordinates, construction sets and link dimension")]
struct Cli {
    /// Emit machine-readable JSON instead of key-value text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for parallel search (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph as an edge list.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Metric, link and strong metric dimension of a graph.
    Dims {
        /// Edge-list file, or `-` for standard input.
        graph: PathBuf,
        #[arg(long)]
        exact_limit: Option<usize>,
        #[arg(long)]
        skip_strong: bool,
        #[arg(long)]
        greedy: bool,
    },
    /// Test a landmark set for resolution and construction.
    CheckSet(GraphLandmarks),
    /// Extend a resolution set to a construction set.
    Upgrade(GraphLandmarks),
    /// Print landmark coordinates as CSV.
    Coords(GraphLandmarks),
    /// Rebuild a graph from coordinate CSV.
    Reconstruct {
        /// Coordinate CSV file, or `-` for standard input.
        coords: PathBuf,
        /// List every consistent graph instead of requiring a unique one.
        #[arg(long)]
        enumerate: bool,
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// Counting bounds on metric and link dimension.
    Bounds {
        /// Edge-list file, or `-`; omit to give the parameters directly.
        graph: Option<PathBuf>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        l: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        ndmax: Option<u64>,
        /// Also evaluate each bound at this landmark count.
        #[arg(long)]
        m: Option<u32>,
    },
}

#[derive(Debug, Args)]
struct GraphLandmarks {
    /// Edge-list file, or `-` for standard input.
    graph: PathBuf,
    /// Comma-separated landmark labels.
    #[arg(long)]
    landmarks: String,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Io(_) => EXIT_INPUT,
            Failure::Lib(e) => match e {
                Error::Input { .. } | Error::Disconnected(..) => EXIT_INPUT,
                Error::NotResolving(..) | Error::Unrealizable(_) | Error::Infeasible(_) => {
                    EXIT_INFEASIBLE
                }
                Error::ExactLimit { .. } => EXIT_USAGE,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Io(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

struct Ctx<'a> {
    json: bool,
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    fn read(&mut self, path: &PathBuf) -> Result<String, Failure> {
        if path.as_os_str() == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Io(format!("reading standard input: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| Failure::Io(format!("reading {}: {e}", path.display())))
        }
    }

    fn graph(&mut self, path: &PathBuf) -> Result<(Graph, DistanceMatrix), Failure> {
        let g = Graph::parse(&self.read(path)?)?;
        let h = all_pairs_distances(&g)?;
        Ok((g, h))
    }
}

/// Run the CLI with explicit streams; returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    if let Some(t) = cli.threads {
        // a second initialization (in-process reuse) is harmless
        let _ = crate::par::init_threads(t.max(1));
    }
    let mut ctx = Ctx {
        json: cli.json,
        stdin,
    };
    match execute(cli.command, &mut ctx) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err((text, failure)) => {
            let _ = out.write_all(text.as_bytes());
            let _ = writeln!(err, "linkdim: {}", failure.message());
            failure.code()
        }
    }
}

type Outcome = Result<String, (String, Failure)>;

fn execute(cmd: Command, ctx: &mut Ctx<'_>) -> Outcome {
    let plain = |r: Result<String, Failure>| r.map_err(|f| (String::new(), f));
    match cmd {
        Command::Gen { family, n, p, seed } => plain(cmd_gen(&family, n, p, seed)),
        Command::Dims {
            graph,
            exact_limit,
            skip_strong,
            greedy,
        } => plain(cmd_dims(ctx, &graph, exact_limit, skip_strong, greedy)),
        Command::CheckSet(a) => plain(cmd_check_set(ctx, &a)),
        Command::Upgrade(a) => plain(cmd_upgrade(ctx, &a)),
        Command::Coords(a) => plain(cmd_coords(ctx, &a)),
        Command::Reconstruct {
            coords,
            enumerate,
            limit,
        } => cmd_reconstruct(ctx, &coords, enumerate, limit),
        Command::Bounds {
            graph,
            n,
            l,
            d,
            ndmax,
            m,
        } => plain(cmd_bounds(ctx, graph.as_ref(), [n, l, d, ndmax], m)),
    }
}

fn cmd_gen(family: &str, n: usize, p: Option<f64>, seed: Option<u64>) -> Result<String, Failure> {
    let family: Family = family.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    if family == Family::ErdosRenyi && p.is_none() {
        return Err(Failure::Usage("--p is required for erdos-renyi graphs".into()));
    }
    if n < 2 || (family == Family::Cycle && n < 3) {
        return Err(Failure::Usage(format!("--n {n} is too small for a {family}")));
    }
    if let Some(p) = p {
        if !(p > 0.0 && p <= 1.0) {
            return Err(Failure::Usage(format!("--p {p} outside (0, 1]")));
        }
    }
    Ok(generate(family, n, p, seed)?.to_edge_list())
}

fn labels_of(g: &Graph, m: &LandmarkSet) -> Vec<String> {
    m.labels(g.labels()).into_iter().map(String::from).collect()
}

fn pair_labels(g: &Graph, pairs: &[Edge]) -> Vec<[String; 2]> {
    pairs
        .iter()
        .map(|&(a, b)| [g.label(a).to_string(), g.label(b).to_string()])
        .collect()
}

fn fmt_pairs(pairs: &[[String; 2]]) -> String {
    pairs
        .iter()
        .map(|[a, b]| format!("({a},{b})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn finish(json: bool, value: Value, text: String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&value).expect("json values serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

fn cmd_dims(
    ctx: &mut Ctx<'_>,
    path: &PathBuf,
    exact_limit: Option<usize>,
    skip_strong: bool,
    greedy: bool,
) -> Result<String, Failure> {
    let (g, h) = ctx.graph(path)?;
    let opts = SearchOptions {
        exact_limit,
        greedy,
        ..SearchOptions::default()
    };
    let beta = metric_dimension(&h, opts)?;
    let gamma = link_dimension(&g, &h, opts)?;
    let sdim = if skip_strong {
        None
    } else {
        Some(strong_metric_dimension(&h, opts)?)
    };
    let entry = |r: &DimensionResult| {
        json!({ "value": r.value, "witness": labels_of(&g, &r.witness), "method": r.method })
    };
    let mut value = json!({
        "schema_version": SCHEMA_VERSION,
        "nodes": g.node_count(),
        "edges": g.edge_count(),
        "beta": entry(&beta),
        "gamma": entry(&gamma),
    });
    let mut text = format!("nodes: {}\nedges: {}\n", g.node_count(), g.edge_count());
    let mut add = |name: &str, r: &DimensionResult| {
        let _ = writeln!(text, "{name}: {}", r.value);
        let _ = writeln!(text, "{name}_witness: {}", labels_of(&g, &r.witness).join(","));
        let _ = writeln!(text, "{name}_method: {}", r.method);
    };
    add("beta", &beta);
    add("gamma", &gamma);
    if let Some(s) = &sdim {
        add("sdim", s);
        value["sdim"] = entry(s);
    }
    Ok(finish(ctx.json, value, text))
}

fn landmarks(g: &Graph, list: &str) -> Result<LandmarkSet, Failure> {
    Ok(LandmarkSet::parse(g.labels(), list)?)
}

fn cmd_check_set(ctx: &mut Ctx<'_>, a: &GraphLandmarks) -> Result<String, Failure> {
    let (g, h) = ctx.graph(&a.graph)?;
    let m = landmarks(&g, &a.landmarks)?;
    let check = is_construction_set(&g, &h, &m);
    let collision = match check.resolution {
        Resolution::Resolving => None,
        Resolution::Collision(x, y) => Some(pair_labels(&g, &[(x, y)])[0].clone()),
    };
    let invisible = pair_labels(&g, &check.report.invisible_present_edges);
    let ambiguous = pair_labels(&g, &check.report.ambiguous_absent_edges);
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "landmarks": labels_of(&g, &m),
        "resolution": check.resolution.is_resolving(),
        "collision": collision,
        "construction": check.is_construction_set(),
        "invisible_edges": invisible,
        "ambiguous_nonedges": ambiguous,
    });
    let mut text = format!("landmarks: {}\n", labels_of(&g, &m).join(","));
    let _ = writeln!(text, "resolution: {}", check.resolution.is_resolving());
    if let Some([x, y]) = &collision {
        let _ = writeln!(text, "collision: {x},{y}");
    }
    let _ = writeln!(text, "construction: {}", check.is_construction_set());
    let _ = writeln!(text, "invisible_edges: {}", fmt_pairs(&invisible));
    let _ = writeln!(text, "ambiguous_nonedges: {}", fmt_pairs(&ambiguous));
    Ok(finish(ctx.json, value, text))
}

fn cmd_upgrade(ctx: &mut Ctx<'_>, a: &GraphLandmarks) -> Result<String, Failure> {
    let (g, h) = ctx.graph(&a.graph)?;
    let m = landmarks(&g, &a.landmarks)?;
    let up = labels_of(&g, &upgrade_to_construction_set(&g, &h, &m)?);
    let value = json!({ "schema_version": SCHEMA_VERSION, "landmarks": up });
    Ok(finish(ctx.json, value, format!("{}\n", up.join(","))))
}

fn cmd_coords(ctx: &mut Ctx<'_>, a: &GraphLandmarks) -> Result<String, Failure> {
    let (g, h) = ctx.graph(&a.graph)?;
    let m = landmarks(&g, &a.landmarks)?;
    Ok(coordinates(&h, &m).to_csv())
}

fn cmd_reconstruct(ctx: &mut Ctx<'_>, path: &PathBuf, enumerate: bool, limit: usize) -> Outcome {
    let fail = |f: Failure| (String::new(), f);
    let text = ctx.read(path).map_err(fail)?;
    let p = DistanceVectorMatrix::parse_csv(&text).map_err(|e| fail(e.into()))?;
    if !enumerate {
        let g = reconstruct(&p).map_err(|e| fail(e.into()))?;
        return Ok(g.to_edge_list());
    }
    let graphs = enumerate_consistent_graphs(&p, limit).map_err(|e| fail(e.into()))?;
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "count": graphs.len(),
        "limit": limit,
        "candidates": graphs.iter().map(|g| {
            g.edges().iter().map(|&(a, b)| [g.label(a), g.label(b)]).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
    });
    let mut out = format!("# count: {} (limit {limit})\n", graphs.len());
    for (i, g) in graphs.iter().enumerate() {
        let _ = writeln!(out, "# candidate {}", i + 1);
        for (a, b) in g.edges() {
            let _ = writeln!(out, "{} {}", g.label(a), g.label(b));
        }
    }
    let out = finish(ctx.json, value, out);
    if graphs.is_empty() {
        return Err((out, Failure::Lib(Error::Unrealizable("no graph reproduces these coordinates".into()))));
    }
    Ok(out)
}

fn cmd_bounds(
    ctx: &mut Ctx<'_>,
    graph: Option<&PathBuf>,
    scalars: [Option<u64>; 4],
    m: Option<u32>,
) -> Result<String, Failure> {
    let report: BoundsReport = match graph {
        Some(path) => {
            let (g, h) = ctx.graph(path)?;
            let mut r = bounds_report(&g, &h);
            if m.is_some() {
                r = bounds_report_for(r.params, m);
            }
            r
        }
        None => {
            let [Some(n), Some(l), Some(d), Some(ndmax)] = scalars else {
                return Err(Failure::Usage(
                    "without a graph file, --n, --l, --d and --ndmax are all required".into(),
                ));
            };
            if n < 2 || l == 0 || d == 0 || ndmax == 0 || m == Some(0) {
                return Err(Failure::Usage("bound parameters must be positive (n >= 2)".into()));
            }
            bounds_report_for(BoundParams { n, l, d, ndmax }, m)
        }
    };
    let mut value = serde_json::to_value(&report).expect("report serializes");
    value["schema_version"] = json!(SCHEMA_VERSION);
    let p = report.params;
    let mut text = format!("n: {}\nl: {}\nd: {}\nndmax: {}\n", p.n, p.l, p.d, p.ndmax);
    for e in &report.bounds {
        let min = e.minimal_m.map_or_else(|| "none".to_string(), |v| v.to_string());
        let _ = writeln!(text, "{}.minimal_m: {min}", e.name);
        if let Some(h) = e.holds_at_m {
            let _ = writeln!(text, "{}.holds_at_m: {h}", e.name);
        }
    }
    let _ = writeln!(text, "metric_lower_bound: {}", report.metric_lower_bound);
    let _ = writeln!(text, "link_lower_bound: {}", report.link_lower_bound);
    Ok(finish(ctx.json, value, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    const C5: &str = "1 2\n2 3\n3 4\n4 5\n5 1\n";

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("linkdim").chain(args.iter().copied());
        let code = run(argv, &mut input, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gen_cycle() {
        let (code, out, _) = call(&["gen", "--family", "cycle", "--n", "7"], "");
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 7);
    }

    #[test]
    fn gen_usage() {
        assert_eq!(call(&["gen", "--family", "er", "--n", "10"], "").0, 1);
        assert_eq!(call(&["gen", "--family", "blob", "--n", "10"], "").0, 1);
        assert_eq!(call(&["gen", "--n", "10"], "").0, 1);
        assert_eq!(call(&["frobnicate"], "").0, 1);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn check_set_text() {
        let (code, out, _) = call(&["check-set", "-", "--landmarks", "1,2"], C5);
        assert_eq!(code, 0);
        assert!(out.contains("resolution: true\n"));
        assert!(out.contains("construction: false\n"));
        assert!(out.contains("ambiguous_nonedges: (3,5)\n"));
        let (code, out, _) = call(&["check-set", "-", "--landmarks", "1"], C5);
        assert_eq!(code, 0);
        assert!(out.contains("resolution: false\ncollision: 2,5\n"));
    }

    #[test]
    fn check_set_json() {
        let (code, out, _) = call(&["--json", "check-set", "-", "--landmarks", "1,2,3"], C5);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["resolution"], true);
        assert_eq!(v["construction"], true);
        assert_eq!(v["invisible_edges"], json!([]));
        assert_eq!(v["schema_version"], SCHEMA_VERSION);
    }

    #[test]
    fn upgrade_codes() {
        assert_eq!(call(&["upgrade", "-", "--landmarks", "1,2"], C5), (0, "1,2,3\n".into(), String::new()));
        let (code, _, err) = call(&["upgrade", "-", "--landmarks", "1"], C5);
        assert_eq!(code, 3);
        assert!(err.contains("2 and 5"));
    }

    #[test]
    fn coords_and_bad_landmark() {
        let (code, out, _) = call(&["coords", "-", "--landmarks", "1,2"], C5);
        assert_eq!(code, 0);
        assert_eq!(out, "node,1,2\n1,0,1\n2,1,0\n3,2,1\n4,2,2\n5,1,2\n");
        assert_eq!(call(&["coords", "-", "--landmarks", "9"], C5).0, 2);
    }

    #[test]
    fn disconnected_input() {
        let (code, _, err) = call(&["dims", "-"], "a b\nc d\n");
        assert_eq!(code, 2);
        assert!(err.contains("disconnected"));
        assert_eq!(call(&["dims", "-"], "a a\n").0, 2);
        assert_eq!(call(&["dims", "/definitely/not/here"], "").0, 2);
    }

    #[test]
    fn reconstruct_modes() {
        let fig1 = "node,1,2\n1,0,1\n2,1,0\n3,2,1\n4,2,2\n5,1,2\n";
        assert_eq!(call(&["reconstruct", "-"], fig1).0, 3);
        let (code, out, _) = call(&["reconstruct", "-", "--enumerate"], fig1);
        assert_eq!(code, 0);
        assert!(out.starts_with("# count: 2"));
        let line = "node,1\n1,0\n2,1\n3,2\n4,3\n5,4\n";
        let (code, out, _) = call(&["reconstruct", "-"], line);
        assert_eq!(code, 0);
        assert_eq!(Graph::parse(&out).unwrap(), crate::generate::path(5));
        assert_eq!(call(&["reconstruct", "-"], "node,1\n1,1\n").0, 2);
    }

    #[test]
    fn bounds_modes() {
        let (code, out, _) = call(&["bounds", "-"], C5);
        assert_eq!(code, 0);
        assert!(out.contains("link_lower_bound: 2\n"));
        let (code, out, _) = call(
            &["bounds", "--n", "5", "--l", "10", "--d", "1", "--ndmax", "4"],
            "",
        );
        assert_eq!(code, 0);
        assert!(out.contains("landmark-degree.minimal_m: 3\n"));
        assert_eq!(call(&["bounds", "--n", "5", "--l", "10", "--d", "1"], "").0, 1);
    }

    #[test]
    fn dims_limits() {
        let big = crate::generate::cycle(20).to_edge_list();
        assert_eq!(call(&["dims", "-"], &big).0, 1);
        let (code, out, _) = call(&["dims", "-", "--greedy"], &big);
        assert_eq!(code, 0);
        assert!(out.contains("gamma_method: greedy-upper-bound"));
    }
}
