use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use vramsey::colorer::{find_b_or_color_with, ColorerConfig};
use vramsey::degeneracy::{forest_decomposition_with, is_a_degenerate, ForestConfig};
use vramsey::ramsey::{is_eps_dense, is_r_ramsey_with, DensityMode, RamseyConfig, RamseyDecision};
use vramsey::randcon::{
    construct_f_free_dense_with, enumerate_min_trace_covers, estimate_copy_count_with, estimate_density,
    verify_cover_inequality, ConstructConfig,
};
use vramsey::{block_decomposition, parse_graph6, parse_graph_text, write_graph6, Error, Graph};

/// Output documents carry this tag; it changes whenever a field is renamed
/// or removed.
const SCHEMA: &str = "vramsey/1";

#[derive(Parser)]
#[command(name = "vramsey", version, about = "Vertex-Ramsey tools: degeneracy, certified colorings, exact checks and random constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for Monte Carlo trials (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Blocks, cut vertices and block-cut tree of a graph.
    Blocks(GraphArg),
    /// Whether every block of --graph embeds into --pattern.
    Degenerate(Pair),
    /// A minimum-size A-forest decomposition of --graph.
    Forest {
        #[command(flatten)]
        pair: Pair,
        /// Node budget for the exact search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Copy of --forest in --graph, or a coloring of --graph with no
    /// monochromatic --pattern.
    Color {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_name = "G6|@FILE")]
        forest: String,
        /// Node budget for exact petal packing.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Exact vertex r-Ramsey check.
    Ramsey {
        #[command(flatten)]
        pair: Pair,
        #[arg(short = 'r')]
        r: usize,
        /// Node budget for the coloring search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// eps-density: every floor(eps n)-subset contains the pattern. Exact
    /// unless --trials is given.
    Dense {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random F-free dense graph on n vertices.
    Construct {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_name = "G6|@FILE")]
        pattern: String,
        /// Forbidden graph; repeat for a family.
        #[arg(long, value_name = "G6|@FILE", required = true)]
        family: Vec<String>,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trials for the density estimate.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// C in the C * sqrt(n) deletion budget.
        #[arg(long, default_value_t = 1.0)]
        deletion_multiplier: f64,
    },
    /// Inclusion-minimal trace covers of --graph and the cover inequality.
    Covers {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        max_ell: Option<usize>,
    },
    /// Copies of --graph in sampled random graphs.
    Count {
        #[command(flatten)]
        pair: Pair,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Copy enumeration cap per trial.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Fraction of random subsets of --graph that contain --pattern.
    EstimateDensity {
        #[command(flatten)]
        pair: Pair,
        /// Subset size.
        #[arg(long)]
        subset: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct GraphArg {
    /// graph6 string, or @path to a graph6/edge-list file.
    #[arg(long, value_name = "G6|@FILE", required_unless_present = "file", conflicts_with = "file")]
    graph: Option<String>,
    /// File holding the graph (graph6 or edge list).
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct Pair {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long, value_name = "G6|@FILE")]
    pattern: String,
}

enum Failure {
    Usage(String),
    Unknown(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EnumerationTruncated { .. } => Failure::Unknown(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn load(arg: &str) -> Result<Graph, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => read_file(&PathBuf::from(path)),
        None => Ok(parse_graph6(arg.trim())?),
    }
}

fn read_file(path: &PathBuf) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(parse_graph_text(&text)?)
}

impl GraphArg {
    fn load(&self) -> Result<Graph, Failure> {
        match (&self.graph, &self.file) {
            (Some(g), _) => load(g),
            (None, Some(p)) => read_file(p),
            (None, None) => Err(Failure::Usage("--graph or --file is required".into())),
        }
    }
}

impl Pair {
    fn load(&self) -> Result<(Graph, Graph), Failure> {
        Ok((self.graph.load()?, load(&self.pattern)?))
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable report")
}

/// Runs one subcommand; the flag says whether the answer is UNKNOWN.
fn dispatch(command: &Command) -> Result<(Value, bool), Failure> {
    Ok(match command {
        Command::Blocks(g) => {
            let g = g.load()?;
            let mut v = to_value(&block_decomposition(&g));
            v["graph"] = json!(write_graph6(&g));
            (v, false)
        }
        Command::Degenerate(pair) => {
            let (b, a) = pair.load()?;
            (to_value(&is_a_degenerate(&b, &a)), false)
        }
        Command::Forest { pair, budget } => {
            let (b, a) = pair.load()?;
            let mut cfg = ForestConfig::default();
            if let Some(x) = budget {
                cfg.budget = *x;
            }
            let v = match forest_decomposition_with(&b, &a, &cfg) {
                Some(f) => json!({ "degenerate": true, "size": f.size(), "forest": f }),
                None => json!({ "degenerate": false, "offending_block": is_a_degenerate(&b, &a).offending_block }),
            };
            (v, false)
        }
        Command::Color { pair, forest, budget } => {
            let (g, a) = pair.load()?;
            let b = load(forest)?;
            let mut cfg = ColorerConfig::default();
            if let Some(x) = budget {
                cfg.pack_budget = *x;
            }
            (to_value(&find_b_or_color_with(&g, &a, &b, &cfg)?), false)
        }
        Command::Ramsey { pair, r, budget } => {
            let (g, a) = pair.load()?;
            let mut cfg = RamseyConfig::default();
            if let Some(x) = budget {
                cfg.node_budget = *x;
            }
            let out = is_r_ramsey_with(&g, &a, *r, &cfg)?;
            let unknown = out.decision == RamseyDecision::Unknown;
            let mut v = to_value(&out);
            v["ramsey"] = json!(out.is_ramsey());
            (v, unknown)
        }
        Command::Dense { pair, eps, trials, seed } => {
            let (g, a) = pair.load()?;
            let mode = match trials {
                Some(t) => DensityMode::Sampled { trials: *t, seed: *seed },
                None => DensityMode::Exact,
            };
            (to_value(&is_eps_dense(&g, &a, *eps, mode)?), false)
        }
        Command::Construct {
            n,
            pattern,
            family,
            eps,
            seed,
            trials,
            deletion_multiplier,
        } => {
            let a = load(pattern)?;
            let family = family.iter().map(|f| load(f)).collect::<Result<Vec<_>, _>>()?;
            let cfg = ConstructConfig {
                deletion_multiplier: *deletion_multiplier,
                density_trials: *trials,
                ..ConstructConfig::default()
            };
            let (_, report) = construct_f_free_dense_with(*n, &a, &family, *eps, *seed, &cfg)?;
            (to_value(&report), false)
        }
        Command::Covers { pair, max_ell } => {
            let (b, a) = pair.load()?;
            let covers = enumerate_min_trace_covers(&b, &a, *max_ell)?;
            let report = verify_cover_inequality(&b, &a)?;
            (json!({ "covers": covers, "inequality": report }), false)
        }
        Command::Count {
            pair,
            n,
            eps,
            trials,
            seed,
            budget,
        } => {
            let (b, a) = pair.load()?;
            let limit = budget.map_or(vramsey::embed::DEFAULT_COPY_LIMIT, |x| x as usize);
            (to_value(&estimate_copy_count_with(&b, &a, *n, *eps, *trials, *seed, limit)?), false)
        }
        Command::EstimateDensity {
            pair,
            subset,
            trials,
            seed,
        } => {
            let (g, a) = pair.load()?;
            (to_value(&estimate_density(&g, &a, *subset, *trials, *seed)?), false)
        }
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Blocks(_) => "blocks",
        Command::Degenerate(_) => "degenerate",
        Command::Forest { .. } => "forest",
        Command::Color { .. } => "color",
        Command::Ramsey { .. } => "ramsey",
        Command::Dense { .. } => "dense",
        Command::Construct { .. } => "construct",
        Command::Covers { .. } => "covers",
        Command::Count { .. } => "count",
        Command::EstimateDensity { .. } => "estimate-density",
    }
}

fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    let mut put = |key: &str, v: &Value| {
        let shown = match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out.push_str(&format!("{key}: {shown}\n"));
    };
    if let Value::Object(map) = doc {
        for (k, v) in map {
            match v {
                Value::Object(inner) => {
                    for (ik, iv) in inner {
                        put(&format!("{k}.{ik}"), iv);
                    }
                }
                other => put(k, other),
            }
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(1);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    let (result, unknown) = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
        Err(Failure::Unknown(msg)) => {
            eprintln!("unknown: {msg}");
            return ExitCode::from(2);
        }
    };
    let mut doc = Map::new();
    doc.insert("schema".into(), json!(SCHEMA));
    doc.insert("command".into(), json!(command_name(&cli.command)));
    doc.insert("result".into(), result);
    let doc = Value::Object(doc);
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&doc).expect("json") + "\n",
        Format::Text => render_text(&doc),
    };
    let written = match &cli.out {
        Some(p) => fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(if unknown { 2 } else { 0 })
}
