//! Command-line front end for the commuting-graph library.

pub mod corpus;
pub mod record;
pub mod spec;
pub mod suites;

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use comgraph_core::analysis::measure_diameter;
use comgraph_core::arith::factorize;
use comgraph_core::comgraph::{to_dot, to_json};
use comgraph_core::{CommutingGraph, Distance, FiniteGroup, GroupSpec, Mode, DEFAULT_MAX_ORDER};
use serde_json::json;

use corpus::Corpus;
use record::ResultRecord;
use suites::Suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "comgraph", version, about = "Commuting graphs of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Refuse to enumerate groups larger than this.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, env = "COMGRAPH_THREADS")]
    pub threads: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact diameter of the commuting graph, with a witness path.
    Diameter {
        spec: String,
        /// Use every non-central element instead of one per centre coset.
        #[arg(long)]
        full_graph: bool,
        /// Also write the graph in DOT format.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Append a result record to this JSON-lines file.
        #[arg(long, value_name = "FILE")]
        cache: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite against the expected-values corpus.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, value_name = "FILE", default_value = "results.jsonl")]
        cache: PathBuf,
        /// Corpus to compare against instead of the built-in one.
        #[arg(long, value_name = "FILE")]
        expected: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Order, centre, derived subgroup and class data of a group.
    Info {
        spec: String,
        #[command(flatten)]
        common: Common,
    },
    /// Write the commuting graph as DOT or JSON.
    Export {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Output file (stdout when absent).
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long)]
        full_graph: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

/// Runs the parsed command and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> i32 {
    let cap = e.chain().any(|c| {
        matches!(c.downcast_ref(), Some(comgraph_core::Error::OrderCapExceeded(_)))
            || matches!(
                c.downcast_ref(),
                Some(spec::SpecError::Semantic(comgraph_core::Error::OrderCapExceeded(_)))
            )
    });
    if cap { EXIT_CAP } else { EXIT_ERROR }
}

fn configure_threads(common: &Common) -> Result<()> {
    if let Some(n) = common.threads {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    Ok(())
}

fn load_group(text: &str, max_order: usize) -> Result<(GroupSpec, FiniteGroup)> {
    let spec = spec::parse_spec(text)?;
    let g = spec.build(max_order)?;
    Ok((spec, g))
}

fn mode_for(full_graph: bool) -> Mode {
    if full_graph { Mode::Full } else { Mode::Transversal }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Diameter { spec, full_graph, dot, cache, common } => {
            configure_threads(&common)?;
            cmd_diameter(&spec, mode_for(full_graph), dot.as_deref(), cache.as_deref(), &common)
        }
        Command::Verify { suite, cache, expected, common } => {
            configure_threads(&common)?;
            cmd_verify(suite, &cache, expected.as_deref(), &common)
        }
        Command::Info { spec, common } => {
            configure_threads(&common)?;
            cmd_info(&spec, &common)
        }
        Command::Export { spec, format, output, full_graph, common } => {
            configure_threads(&common)?;
            cmd_export(&spec, format, output.as_deref(), mode_for(full_graph), &common)
        }
    }
}

fn element_label(g: &FiniteGroup, x: usize) -> String {
    g.element(x).to_string()
}

fn cmd_diameter(text: &str, mode: Mode, dot: Option<&Path>, cache: Option<&Path>, common: &Common) -> Result<i32> {
    let (spec, g) = load_group(text, common.max_order)?;
    let graph = CommutingGraph::build(&g, mode)?;
    let report = graph.diameter();
    let record = ResultRecord::new(&spec.to_string(), &g, mode, &report);
    if let Some(path) = dot {
        std::fs::write(path, to_dot(&graph)).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = cache {
        record::append(path, std::slice::from_ref(&record))
            .with_context(|| format!("appending to {}", path.display()))?;
    }
    if common.json {
        let mut v = serde_json::to_value(&record)?;
        v["witness_pair"] = json!([report.witness_pair.0, report.witness_pair.1]);
        v["witness_path"] = json!(report.witness_path);
        println!("{}", serde_json::to_string_pretty(&v)?);
        return Ok(EXIT_OK);
    }
    println!("group      {}", record.spec);
    println!("order      {}", record.group_order);
    println!("center     {}", record.center_order);
    println!("mode       {mode}");
    println!("vertices   {}", record.vertex_count);
    println!("edges      {}", record.edge_count);
    println!("components {}", record.component_count);
    println!("diameter   {}", record.diameter);
    let (a, b) = report.witness_pair;
    match report.diameter {
        Distance::Finite(_) => {
            let path: Vec<String> = report.witness_path.iter().map(|&x| element_label(&g, x)).collect();
            println!("witness    {}", path.join(" -- "));
        }
        Distance::Infinite => {
            println!("witness    {} and {} lie in different components", element_label(&g, a), element_label(&g, b));
        }
    }
    println!("elapsed    {:.1} ms", record.elapsed_ms);
    Ok(EXIT_OK)
}

fn cmd_verify(suite: Suite, cache: &Path, expected: Option<&Path>, common: &Common) -> Result<i32> {
    let corpus = match expected {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Corpus::from_json(&text).with_context(|| format!("parsing {}", path.display()))?
        }
        None => Corpus::embedded(),
    };
    let suites = suite.expand();
    let outcomes = suites::run_suites(&corpus, &suites, common.max_order);
    let records: Vec<ResultRecord> = outcomes.iter().filter_map(|o| o.record.clone()).collect();
    record::append(cache, &records).with_context(|| format!("appending to {}", cache.display()))?;
    let mismatches = suites::compare(&corpus, &outcomes);

    if common.json {
        let v = json!({
            "schema_version": record::SCHEMA_VERSION,
            "suite": suite.name(),
            "outcomes": outcomes,
            "mismatches": mismatches,
        });
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        let mut out = std::io::stdout().lock();
        writeln!(out, "{:<14} {:<48} {:>7} {:>9} {:>6}", "suite", "instance", "order", "diameter", "status")?;
        for o in &outcomes {
            let bad = o.error.is_some() || mismatches.iter().any(|m| m.suite == o.suite && m.spec == o.spec);
            let (order, diam) = match &o.record {
                Some(r) => (r.group_order.to_string(), r.diameter.to_string()),
                None => ("-".into(), "-".into()),
            };
            writeln!(
                out,
                "{:<14} {:<48} {:>7} {:>9} {:>6}",
                o.suite,
                o.spec,
                order,
                diam,
                if bad { "FAIL" } else { "ok" }
            )?;
            if let Some(e) = &o.error {
                writeln!(out, "    error: {e}")?;
            }
        }
        for m in &mismatches {
            let got = m.measured.as_ref().map_or("nothing".to_string(), |v| v.to_string());
            writeln!(
                out,
                "mismatch [{}] {} {}: expected {}, measured {} ({})",
                m.suite, m.spec, m.quantity, m.expected, got, m.anchor
            )?;
        }
        writeln!(out, "{} instances, {} mismatches", outcomes.len(), mismatches.len())?;
    }
    let errors = outcomes.iter().any(|o| o.error.is_some());
    Ok(if !mismatches.is_empty() {
        EXIT_MISMATCH
    } else if errors {
        EXIT_ERROR
    } else {
        EXIT_OK
    })
}

fn cmd_info(text: &str, common: &Common) -> Result<i32> {
    let (spec, g) = load_group(text, common.max_order)?;
    let mut hist = std::collections::BTreeMap::new();
    for &o in g.orders() {
        *hist.entry(o).or_insert(0usize) += 1;
    }
    let index = (g.order() / g.center().len()) as u64;
    let diameter = measure_diameter(&g).map(|r| r.diameter);
    let v = json!({
        "schema_version": record::SCHEMA_VERSION,
        "spec": spec.to_string(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "center_order": g.center().len(),
        "derived_order": g.derived_subgroup().len(),
        "class_count": g.conjugacy_classes().len(),
        "center_index": index,
        "center_index_factors": factorize(index),
        "element_orders": hist,
        "diameter": diameter,
    });
    if common.json {
        println!("{}", serde_json::to_string_pretty(&v)?);
        return Ok(EXIT_OK);
    }
    println!("group         {}", spec);
    println!("order         {}", g.order());
    println!("abelian       {}", g.is_abelian());
    println!("center        {}", g.center().len());
    println!("derived       {}", g.derived_subgroup().len());
    println!("classes       {}", g.conjugacy_classes().len());
    println!("center index  {} = {:?}", index, factorize(index));
    let orders: Vec<String> = hist.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    println!("orders        {}", orders.join(" "));
    match diameter {
        Some(d) => println!("diameter      {d}"),
        None => println!("diameter      (abelian, no vertices)"),
    }
    Ok(EXIT_OK)
}

fn cmd_export(text: &str, format: Format, output: Option<&Path>, mode: Mode, common: &Common) -> Result<i32> {
    let (_, g) = load_group(text, common.max_order)?;
    let graph = CommutingGraph::build(&g, mode)?;
    let body = match format {
        Format::Dot => to_dot(&graph),
        Format::Json => serde_json::to_string_pretty(&to_json(&graph))? + "\n",
    };
    match output {
        Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(EXIT_OK)
}
