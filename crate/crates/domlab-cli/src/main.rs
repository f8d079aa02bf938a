//! domlab command line: classify graphs, construct family instances,
//! run censuses over enumerated graphs, and verify the theorem registry.
//!
//! Exit codes: 0 success, 1 verification violation, 2 input error,
//! 3 precondition violation.

mod famspec;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use domlab::census::{census, tally, CensusRecord};
use domlab::classify::{classify_graph, GammaRelation, GraphVerdict, Verdict};
use domlab::enumerate::{all_connected_graphs, all_trees, MAX_CONNECTED_N, MAX_TREE_N};
use domlab::graph::parse_edge_list;
use domlab::graph6::{parse_graph6_lines, to_graph6};
use domlab::verify::{registry, Scope};
use domlab::{Error, Graph};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "domlab",
    version,
    about = "Exact domination analysis of small graphs under edge removal and subdivision"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Jsonl,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Classify graphs as SR, ASR or NEITHER with a per-edge profile.
    Classify {
        /// Input file, or '-' for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Input format: newline-delimited graph6, or one edge-list graph.
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
        /// Emit one JSON record per graph instead of human tables.
        #[arg(long)]
        json: bool,
        /// Write output to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a family instance and print its graph6 line.
    ///
    /// Specs: `path 7`, `cycle 9`, `corona path 3`, compact forms `p7 k4
    /// c9 s3 corona(k2)`, `gt <h1> <h2> u=<id> v=<id> t=<k>`, and
    /// `bm k<r>+<h>[:s=<ids>];...;bridges=<i>.<x>-<j>.<y>,...`.
    Construct {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit one census record per graph of an enumerated family or file.
    Census {
        /// All trees on this many vertices.
        #[arg(long, conflicts_with_all = ["connected", "file"])]
        trees: Option<usize>,
        /// All connected graphs on this many vertices.
        #[arg(long, conflicts_with = "file")]
        connected: Option<usize>,
        /// Newline-delimited graph6 file to classify instead.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Jsonl)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker count; 0 means one worker per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Keep only matching records, e.g. verdict=ASR, gamma=2, n=6.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Run the registered theorem suites and report pass/fail per claim.
    Verify {
        /// Run only these theorem ids (repeatable; default: all).
        #[arg(long = "theorem")]
        theorems: Vec<String>,
        /// Lower the tree-suite scope (hard cap 14).
        #[arg(long)]
        max_tree_n: Option<usize>,
        /// Lower the graph-suite scope (hard cap 8).
        #[arg(long)]
        max_graph_n: Option<usize>,
        /// Print the report as JSON instead of a table.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// List the registered theorem ids and exit.
        #[arg(long)]
        list: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::MalformedInput { .. }
            | Error::MalformedGraph6 { .. }
            | Error::SpecInvalid(_)
            | Error::UnknownFamily(_)
            | Error::UnknownTheoremId(_)
            | Error::InvalidSize { .. } => EXIT_INPUT,
            _ => EXIT_PRECONDITION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: e.to_string(),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(io_failure)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(io_failure)
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(io_failure),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// DOMLAB_MAX_N lowers every enumeration cap, for constrained CI runs.
fn env_cap() -> Option<usize> {
    std::env::var("DOMLAB_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
}

fn capped(requested: usize, hard_cap: usize, what: &str) -> Result<usize, Failure> {
    let cap = env_cap().unwrap_or(hard_cap).min(hard_cap);
    if requested > cap {
        return Err(Failure {
            code: EXIT_PRECONDITION,
            message: format!("{what} {requested} exceeds the cap {cap}"),
        });
    }
    Ok(requested)
}

fn relation_symbol(rel: GammaRelation) -> &'static str {
    match rel {
        GammaRelation::Less => "<",
        GammaRelation::Equal => "=",
        GammaRelation::Greater => ">",
    }
}

fn profile_flags(bondage: bool, weak: bool, strong: bool) -> String {
    let mut flags = Vec::new();
    if bondage {
        flags.push("bondage");
    }
    if weak {
        flags.push("weak");
    }
    if strong {
        flags.push("strong");
    }
    flags.join(",")
}

fn render_verdict_table(buf: &mut String, g: &Graph, gv: &GraphVerdict) -> Result<(), Failure> {
    let gamma = gv.profiles.first().map_or(0, |p| p.gamma);
    // graphs beyond the graph6 range (n = 63, 64) still classify; they
    // just cannot be echoed back in graph6
    let label = to_graph6(g).unwrap_or_else(|_| "<no graph6>".to_string());
    buf.push_str(&format!(
        "{}  n={} m={} gamma={} verdict={}\n",
        label,
        g.n(),
        g.m(),
        gamma,
        gv.verdict
    ));
    buf.push_str("  edge      g(G-e)  g(G_e)  rel  flags\n");
    for p in &gv.profiles {
        let row = format!(
            "  {:<9} {:<7} {:<7} {:<4} {}",
            p.edge.to_string(),
            p.gamma_removed,
            p.gamma_subdivided,
            relation_symbol(p.relation),
            profile_flags(p.is_bondage, p.is_weak, p.is_strong)
        );
        buf.push_str(row.trim_end());
        buf.push('\n');
    }
    Ok(())
}

fn verdict_json(g: &Graph, gv: &GraphVerdict) -> Result<serde_json::Value, Failure> {
    let profiles: Vec<serde_json::Value> = gv
        .profiles
        .iter()
        .map(|p| {
            json!({
                "edge": [p.edge.u(), p.edge.v()],
                "gamma_removed": p.gamma_removed,
                "gamma_subdivided": p.gamma_subdivided,
                "relation": p.relation,
                "is_bondage": p.is_bondage,
                "is_weak": p.is_weak,
                "is_strong": p.is_strong,
            })
        })
        .collect();
    Ok(json!({
        "schema": "domlab.classify.v1",
        "graph6": to_graph6(g).ok(),
        "n": g.n(),
        "m": g.m(),
        "gamma": gv.profiles.first().map_or(0, |p| p.gamma),
        "verdict": gv.verdict,
        "profiles": profiles,
    }))
}

fn cmd_classify(
    input: String,
    format: InputFormat,
    json: bool,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let text = read_input(&input)?;
    let graphs: Vec<Graph> = match format {
        InputFormat::Graph6 => parse_graph6_lines(&text)?,
        InputFormat::Edgelist => vec![parse_edge_list(&text)?],
    };
    if graphs.is_empty() {
        return Err(Failure {
            code: EXIT_INPUT,
            message: "no graphs in input".to_string(),
        });
    }
    let mut buf = String::new();
    for g in &graphs {
        let gv = classify_graph(g)?;
        if json {
            buf.push_str(&verdict_json(g, &gv)?.to_string());
            buf.push('\n');
        } else {
            render_verdict_table(&mut buf, g, &gv)?;
        }
    }
    write_output(&out, &buf)?;
    Ok(0)
}

fn cmd_construct(spec: Vec<String>, out: Option<PathBuf>) -> Result<u8, Failure> {
    let g = famspec::parse_construct(&spec)?;
    let line = format!("{}\n", to_graph6(&g)?);
    write_output(&out, &line)?;
    Ok(0)
}

fn record_matches(rec: &CensusRecord, filter: &str) -> Result<bool, Failure> {
    let (key, value) = filter.split_once('=').ok_or_else(|| Failure {
        code: EXIT_INPUT,
        message: format!("filter must be key=value, got {filter:?}"),
    })?;
    let bad_value = |what: &str| Failure {
        code: EXIT_INPUT,
        message: format!("bad filter value {value:?} for {what}"),
    };
    match key {
        "verdict" => {
            let want = match value.to_ascii_uppercase().as_str() {
                "SR" => Verdict::Sr,
                "ASR" => Verdict::Asr,
                "NEITHER" => Verdict::Neither,
                _ => return Err(bad_value("verdict")),
            };
            Ok(rec.verdict == want)
        }
        "gamma" => Ok(rec.gamma == value.parse::<usize>().map_err(|_| bad_value("gamma"))?),
        "n" => Ok(rec.n == value.parse::<usize>().map_err(|_| bad_value("n"))?),
        _ => Err(Failure {
            code: EXIT_INPUT,
            message: format!("unknown filter key {key:?} (use verdict, gamma or n)"),
        }),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_census(
    trees: Option<usize>,
    connected: Option<usize>,
    file: Option<PathBuf>,
    format: OutputFormat,
    out: Option<PathBuf>,
    jobs: usize,
    filter: Option<String>,
) -> Result<u8, Failure> {
    let graphs: Vec<Graph> = match (trees, connected, &file) {
        (Some(n), None, None) => {
            let n = capped(n, MAX_TREE_N, "tree size")?;
            all_trees(n)?.into_iter().filter(|t| t.n() >= 2).collect()
        }
        (None, Some(n), None) => {
            let n = capped(n, MAX_CONNECTED_N, "graph size")?;
            all_connected_graphs(n)?
                .into_iter()
                .filter(|g| g.n() >= 2)
                .collect()
        }
        (None, None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(io_failure)?;
            parse_graph6_lines(&text)?
        }
        _ => {
            return Err(Failure {
                code: EXIT_INPUT,
                message: "choose exactly one of --trees, --connected, --file".to_string(),
            })
        }
    };
    let mut records = census(&graphs, jobs)?;
    if let Some(f) = &filter {
        let mut kept = Vec::new();
        for rec in records {
            if record_matches(&rec, f)? {
                kept.push(rec);
            }
        }
        records = kept;
    }
    let t = tally(&records);
    let mut buf = String::new();
    match format {
        OutputFormat::Jsonl => {
            for rec in &records {
                buf.push_str(&rec.to_jsonl());
                buf.push('\n');
            }
            buf.push_str(
                &json!({
                    "schema": "domlab.census.summary.v1",
                    "total": t.total,
                    "sr": t.sr,
                    "asr": t.asr,
                    "neither": t.neither,
                })
                .to_string(),
            );
            buf.push('\n');
        }
        OutputFormat::Csv => {
            buf.push_str(CensusRecord::CSV_HEADER);
            buf.push('\n');
            for rec in &records {
                buf.push_str(&rec.to_csv_row());
                buf.push('\n');
            }
            buf.push_str(&format!(
                "# summary total={} sr={} asr={} neither={}\n",
                t.total, t.sr, t.asr, t.neither
            ));
        }
    }
    write_output(&out, &buf)?;
    Ok(0)
}

fn cmd_verify(
    theorems: Vec<String>,
    max_tree_n: Option<usize>,
    max_graph_n: Option<usize>,
    json: bool,
    out: Option<PathBuf>,
    list: bool,
) -> Result<u8, Failure> {
    if list {
        let mut buf = String::new();
        for check in registry() {
            buf.push_str(&format!("{:<20} {}\n", check.id, check.claim));
        }
        write_output(&out, &buf)?;
        return Ok(0);
    }
    let defaults = Scope::default();
    let env = env_cap();
    let tree_scope = match max_tree_n {
        Some(t) => capped(t, MAX_TREE_N, "tree scope")?,
        None => defaults.max_tree_n.min(env.unwrap_or(usize::MAX)),
    };
    let graph_scope = match max_graph_n {
        Some(g) => capped(g, MAX_CONNECTED_N, "graph scope")?,
        None => defaults.max_graph_n.min(env.unwrap_or(usize::MAX)),
    };
    let scope = Scope {
        max_tree_n: tree_scope,
        max_graph_n: graph_scope,
    };
    let ids = if theorems.is_empty() {
        None
    } else {
        Some(theorems.as_slice())
    };
    let report = domlab::verify::run(ids, &scope)?;
    let mut buf = String::new();
    if json {
        buf.push_str(&serde_json::to_string_pretty(&report).expect("report serializes"));
        buf.push('\n');
    } else {
        buf.push_str(&format!(
            "{:<20} {:<6} {:>10}  {}\n",
            "theorem", "result", "instances", "scope"
        ));
        for entry in &report.entries {
            buf.push_str(&format!(
                "{:<20} {:<6} {:>10}  {}\n",
                entry.theorem_id,
                if entry.passed() { "pass" } else { "FAIL" },
                entry.instances_checked,
                entry.scope
            ));
            for note in &entry.notes {
                buf.push_str(&format!("  note: {note}\n"));
            }
            for violation in &entry.violations {
                buf.push_str(&format!("  violation: {violation}\n"));
            }
        }
    }
    write_output(&out, &buf)?;
    Ok(if report.passed() { 0 } else { EXIT_VIOLATION })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify {
            input,
            format,
            json,
            out,
        } => cmd_classify(input, format, json, out),
        Command::Construct { spec, out } => cmd_construct(spec, out),
        Command::Census {
            trees,
            connected,
            file,
            format,
            out,
            jobs,
            filter,
        } => cmd_census(trees, connected, file, format, out, jobs, filter),
        Command::Verify {
            theorems,
            max_tree_n,
            max_graph_n,
            json,
            out,
            list,
        } => cmd_verify(theorems, max_tree_n, max_graph_n, json, out, list),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
