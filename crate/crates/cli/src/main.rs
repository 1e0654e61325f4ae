//! `homhom` command-line front end.
//!
//! Exit codes: 0 success, 1 a recognizer/oracle mismatch was found, 2 bad
//! input, 3 a size budget was exceeded.

mod sweep;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homhom::families::{enumerate_graphs_bounded, Family, DEFAULT_ENUM_BOUND, MAX_ENUM_BOUND};
use homhom::graph::{parse_edge_list, parse_graph, parse_graph6, to_edge_list, to_graph6};
use homhom::morphisms::core_of;
use homhom::oracle::{c_xy_symmetric, OracleConfig, Verdict};
use homhom::recognizers::{chh_symmetric, is_chh_connected};
use homhom::report::{classify, OracleMode, ReportOptions};
use homhom::{ClassQuery, Error, Graph};
use serde_json::{json, Value};

const BUDGET_VAR: &str = "HOMHOM_BUDGET";

#[derive(Parser)]
#[command(name = "homhom", version, about = "Connected-homomorphism-homogeneity of finite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report membership in the six connected classes.
    Classify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        classes: ClassList,
        /// When to run the brute-force oracle.
        #[arg(long, value_enum, default_value_t = OracleArg::Auto)]
        oracle: OracleArg,
    },
    /// Cross-check recognizers against the oracle on every small graph.
    Sweep(sweep::SweepArgs),
    /// Decide whether two graphs are symmetric for a class.
    Symmetric {
        /// `g6:STRING`, `edges:FILE` or `family:NAME[:P1,P2,...]`.
        first: String,
        second: String,
        #[arg(long, default_value = "C-HH")]
        class: String,
    },
    /// Compute the core and a retraction onto it.
    Core {
        #[command(flatten)]
        input: Input,
    },
    /// Print a named graph, e.g. `generate bcpm 4 --format edges`.
    Generate {
        /// Family name followed by its parameters.
        #[arg(value_name = "FAMILY")]
        named: Vec<String>,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        format: Format,
    },
    /// List one graph per isomorphism class, as graph6.
    Enumerate {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        connected: bool,
        /// Allow orders above the default bound.
        #[arg(long)]
        force: bool,
    },
}

#[derive(Args)]
struct Input {
    /// Graph in graph6 format.
    #[arg(long, conflicts_with_all = ["edges", "family"])]
    g6: Option<String>,
    /// File with an edge list: a header `n m`, then one `u v` per line.
    #[arg(long, value_name = "FILE", conflicts_with = "family")]
    edges: Option<PathBuf>,
    /// A named graph and its parameters, e.g. `--family bcpm 4`.
    #[arg(long, num_args = 1.., value_names = ["NAME", "P"])]
    family: Option<Vec<String>>,
}

#[derive(Args)]
struct ClassList {
    /// Comma-separated classes, e.g. `c-hh,c-mi`; all six by default.
    #[arg(long, value_delimiter = ',')]
    classes: Vec<String>,
}

impl ClassList {
    fn parse(&self) -> Result<Vec<ClassQuery>, CliError> {
        self.classes.iter().map(|c| parse_class(c)).collect()
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    Never,
    Auto,
    Always,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    #[value(alias = "graph6")]
    G6,
    Edges,
}

/// A failure with its exit code.
#[derive(Debug)]
enum CliError {
    Input(String),
    Budget(String),
    /// The reader went away; not worth reporting.
    BrokenPipe,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return CliError::BrokenPipe;
        }
        CliError::Input(e.to_string())
    }
}

fn parse_class(s: &str) -> Result<ClassQuery, CliError> {
    let q: ClassQuery = s.trim().parse().map_err(|e: Error| CliError::Input(e.to_string()))?;
    if !q.connected {
        return Err(CliError::Input(format!("{q} is not a connected class")));
    }
    Ok(q)
}

fn oracle_config() -> Result<OracleConfig, CliError> {
    let cfg = OracleConfig::default();
    match std::env::var(BUDGET_VAR) {
        Ok(spec) => cfg.with_budget_override(&spec).map_err(|e| CliError::Input(format!("{BUDGET_VAR}: {e}"))),
        Err(_) => Ok(cfg),
    }
}

fn family_graph(words: &[String]) -> Result<Graph, CliError> {
    let (name, rest) = words.split_first().ok_or_else(|| CliError::Input("--family needs a name".into()))?;
    let params = rest
        .iter()
        .map(|p| p.parse::<usize>().map_err(|_| CliError::Input(format!("bad family parameter `{p}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Family::from_name(name, &params)?.make()?)
}

fn read_graph(input: &Input) -> Result<Graph, CliError> {
    if let Some(s) = &input.g6 {
        return Ok(parse_graph6(s.trim())?);
    }
    if let Some(path) = &input.edges {
        let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        return Ok(parse_edge_list(&text)?);
    }
    if let Some(words) = &input.family {
        return family_graph(words);
    }
    let mut text = String::new();
    io::stdin().read_to_string(&mut text)?;
    Ok(parse_graph(&text)?)
}

/// Parses a positional graph spec of the `symmetric` command.
fn graph_from_spec(spec: &str) -> Result<Graph, CliError> {
    let (kind, rest) =
        spec.split_once(':').ok_or_else(|| CliError::Input(format!("`{spec}`: expected g6:, edges: or family:")))?;
    match kind {
        "g6" => Ok(parse_graph6(rest)?),
        "edges" => {
            let text = fs::read_to_string(rest).map_err(|e| CliError::Input(format!("{rest}: {e}")))?;
            Ok(parse_edge_list(&text)?)
        }
        "family" => {
            let (name, params) = rest.split_once(':').unwrap_or((rest, ""));
            let mut words = vec![name.to_string()];
            words.extend(params.split(',').filter(|p| !p.is_empty()).map(String::from));
            family_graph(&words)
        }
        _ => Err(CliError::Input(format!("`{spec}`: unknown graph source `{kind}`"))),
    }
}

fn print_json(v: &Value) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("values serialise"))?;
    Ok(())
}

fn to_json<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("library types serialise")
}

fn cmd_classify(input: &Input, classes: &ClassList, oracle: OracleArg) -> Result<bool, CliError> {
    let g = read_graph(input)?;
    let opts = ReportOptions {
        oracle: match oracle {
            OracleArg::Never => OracleMode::Never,
            OracleArg::Auto => OracleMode::WhenUndecided,
            OracleArg::Always => OracleMode::Always,
        },
        config: oracle_config()?,
        classes: classes.parse()?,
    };
    let report = classify(&g, &opts)?;
    print_json(&to_json(&report))?;
    Ok(report.mismatch)
}

fn verdict_json(v: &Verdict) -> Value {
    json!({ "holds": v.holds(), "witness": v.witness().map(to_json) })
}

fn cmd_symmetric(first: &str, second: &str, class: &str) -> Result<bool, CliError> {
    let q = parse_class(class)?;
    let (g1, g2) = (graph_from_spec(first)?, graph_from_spec(second)?);
    if !g1.is_connected() || !g2.is_connected() {
        return Err(CliError::Input("symmetry is defined between connected graphs".into()));
    }
    let s = c_xy_symmetric(&g1, &g2, q, &oracle_config()?)?;
    let recognizer = if q == ClassQuery::CHH && is_chh_connected(&g1)?.is_some() && is_chh_connected(&g2)?.is_some() {
        Some(chh_symmetric(&g1, &g2)?)
    } else {
        None
    };
    let mismatch = recognizer.is_some_and(|r| r != s.holds());
    print_json(&json!({
        "class": q.name(),
        "g1": to_graph6(&g1),
        "g2": to_graph6(&g2),
        "forward": verdict_json(&s.forward),
        "backward": verdict_json(&s.backward),
        "symmetric": s.holds(),
        "recognizer": recognizer,
        "mismatch": mismatch,
    }))?;
    Ok(mismatch)
}

fn cmd_core(input: &Input) -> Result<(), CliError> {
    let g = read_graph(input)?;
    let cfg = oracle_config()?;
    if g.n() > cfg.hom_budget {
        return Err(Error::Budget { what: "core", n: g.n(), bound: cfg.hom_budget }.into());
    }
    let core = core_of(&g);
    print_json(&json!({
        "graph6": to_graph6(&g),
        "core_graph6": to_graph6(&core.graph),
        "vertices": to_json(&core.vertices),
        "retraction": core.retraction,
    }))
}

fn cmd_generate(family: &[String], input: &Input, format: Format) -> Result<(), CliError> {
    let g = if family.is_empty() { read_graph(input)? } else { family_graph(family)? };
    let text = match format {
        Format::G6 => format!("{}\n", to_graph6(&g)),
        Format::Edges => to_edge_list(&g),
    };
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}

/// The largest order allowed, warning when `--force` lifts the default.
fn enum_bound(max_n: usize, force: bool) -> Result<usize, CliError> {
    if max_n > DEFAULT_ENUM_BOUND && !force {
        return Err(CliError::Budget(format!(
            "orders above {DEFAULT_ENUM_BOUND} need --force (at most {MAX_ENUM_BOUND})"
        )));
    }
    if max_n > DEFAULT_ENUM_BOUND {
        eprintln!("warning: enumerating up to {max_n} vertices takes a while");
    }
    Ok(if force { MAX_ENUM_BOUND } else { DEFAULT_ENUM_BOUND })
}

fn cmd_enumerate(max_n: usize, connected: bool, force: bool) -> Result<(), CliError> {
    let bound = enum_bound(max_n, force)?;
    let mut out = io::BufWriter::new(io::stdout().lock());
    for g in enumerate_graphs_bounded(max_n, connected, bound)? {
        writeln!(out, "{}", to_graph6(&g))?;
    }
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Classify { input, classes, oracle } => cmd_classify(&input, &classes, oracle),
        Command::Sweep(args) => sweep::run(&args),
        Command::Symmetric { first, second, class } => cmd_symmetric(&first, &second, &class),
        Command::Core { input } => cmd_core(&input).map(|()| false),
        Command::Generate { named, input, format } => cmd_generate(&named, &input, format).map(|()| false),
        Command::Enumerate { max_n, connected, force } => cmd_enumerate(max_n, connected, force).map(|()| false),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(false) | Err(CliError::BrokenPipe) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

#[cfg(test)]
mod tests {
    use clap::CommandFactory;

    #[test]
    fn arguments_are_well_formed() {
        super::Cli::command().debug_assert();
    }
}
