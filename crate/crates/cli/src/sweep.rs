//! The `sweep` command: every graph up to an order, classified with the
//! oracle always on, written as JSON lines in enumeration order.

use std::collections::{BTreeMap, HashSet};
use std::fs::{self, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use homhom::families::enumerate_graphs_bounded;
use homhom::graph::to_graph6;
use homhom::oracle::OracleConfig;
use homhom::report::{classify, ClassReport, OracleMode, ReportOptions};
use homhom::{ClassQuery, Graph};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{enum_bound, oracle_config, to_json, ClassList, CliError};

/// Records are computed in parallel but written in chunks of this size, so an
/// interrupted run can be resumed.
const CHUNK: usize = 256;

#[derive(Args)]
pub struct SweepArgs {
    #[arg(long)]
    max_n: usize,
    #[command(flatten)]
    classes: ClassList,
    /// Worker threads; all cores by default.
    #[arg(long)]
    jobs: Option<usize>,
    /// Allow orders above the default bound.
    #[arg(long)]
    force: bool,
    /// Skip graphs already recorded in the output file and append the rest.
    #[arg(long, requires = "out")]
    resume: bool,
    /// JSON-lines output file; records go to stdout otherwise.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Connected graphs only.
    #[arg(long)]
    connected: bool,
    /// Record the time spent on each graph, in microseconds.
    #[arg(long)]
    timings: bool,
}

fn family_tags(r: &ClassReport) -> Vec<String> {
    let mut tags = Vec::new();
    if let Some(m) = &r.cii {
        tags.push(format!("C-II:{}x{}", m.family, m.copies));
    }
    if let Some(case) = &r.chh_case {
        tags.push(format!("C-HH:case{case}"));
    }
    tags.extend(r.chh_families.iter().map(|f| format!("C-HH:{f}")));
    if let Some(f) = &r.multiclaw {
        tags.push(format!("GMC:{f}"));
    }
    tags
}

fn record(g: &Graph, classes: &[ClassQuery], config: &OracleConfig, timings: bool) -> Result<Value, CliError> {
    let start = Instant::now();
    let opts = ReportOptions { oracle: OracleMode::Always, config: config.clone(), classes: classes.to_vec() };
    let r = classify(g, &opts)?;
    let verdicts: BTreeMap<&String, Value> =
        r.classes.iter().map(|(name, e)| (name, json!({ "recognizer": e.recognizer, "oracle": e.oracle }))).collect();
    let witnesses: Vec<Value> = r
        .classes
        .iter()
        .filter_map(|(name, e)| e.witness.as_ref().map(|w| json!({ "class": name, "witness": to_json(w) })))
        .collect();
    let elapsed = timings.then(|| start.elapsed().as_micros() as u64);
    Ok(json!({
        "graph6": r.graph6,
        "n": r.n,
        "verdicts": verdicts,
        "familyTags": family_tags(&r),
        "witnesses": witnesses,
        "elapsed": elapsed,
        "mismatch": r.mismatch,
    }))
}

/// Per-class yes/no counts (by the oracle) and the mismatch total.
fn summary(records: &[Value], max_n: usize) -> Value {
    let mut counts: BTreeMap<String, (u64, u64)> = BTreeMap::new();
    let mut mismatches = 0;
    for r in records {
        if r["mismatch"] == json!(true) {
            mismatches += 1;
        }
        if let Some(vs) = r["verdicts"].as_object() {
            for (class, v) in vs {
                let c = counts.entry(class.clone()).or_default();
                match v["oracle"].as_bool().or(v["recognizer"].as_bool()) {
                    Some(true) => c.0 += 1,
                    Some(false) => c.1 += 1,
                    None => {}
                }
            }
        }
    }
    let classes: BTreeMap<String, Value> =
        counts.into_iter().map(|(k, (yes, no))| (k, json!({ "yes": yes, "no": no }))).collect();
    json!({
        "summary": {
            "maxN": max_n,
            "graphs": records.len(),
            "mismatches": mismatches,
            "classes": classes,
        }
    })
}

fn read_existing(path: &PathBuf) -> Result<Vec<Value>, CliError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e.into()),
    };
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, l)| {
            serde_json::from_str::<Value>(l).map_err(|e| CliError::Input(format!("{}:{}: {e}", path.display(), i + 1)))
        })
        .collect()
}

pub fn run(args: &SweepArgs) -> Result<bool, CliError> {
    let bound = enum_bound(args.max_n, args.force)?;
    let classes = args.classes.parse()?;
    let config = oracle_config()?;
    let graphs = enumerate_graphs_bounded(args.max_n, args.connected, bound)?;

    let mut records = match (&args.out, args.resume) {
        (Some(path), true) => read_existing(path)?,
        _ => Vec::new(),
    };
    let done: HashSet<String> = records.iter().filter_map(|r| r["graph6"].as_str().map(String::from)).collect();
    let todo: Vec<&Graph> = graphs.iter().filter(|g| !done.contains(&to_graph6(g))).collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Input(e.to_string()))?;
    let mut sink: Box<dyn Write> = match &args.out {
        Some(path) => {
            let file = OpenOptions::new()
                .create(true)
                .write(true)
                .append(args.resume)
                .truncate(!args.resume)
                .open(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    for chunk in todo.chunks(CHUNK) {
        let batch: Vec<Value> = pool.install(|| {
            chunk.par_iter().map(|g| record(g, &classes, &config, args.timings)).collect::<Result<_, _>>()
        })?;
        for r in &batch {
            writeln!(sink, "{r}")?;
        }
        sink.flush()?;
        records.extend(batch);
    }
    drop(sink);

    let s = summary(&records, args.max_n);
    let mismatch = s["summary"]["mismatches"].as_u64() != Some(0);
    if args.out.is_some() {
        println!("{s}");
    } else {
        eprintln!("{s}");
    }
    Ok(mismatch)
}
