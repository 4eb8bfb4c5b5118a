//! Verification suites: run the theorem checkers over the corpus instances
//! and compare measured values with the expected ones.

use std::fmt;

use clap::ValueEnum;
use comgraph_core::analysis::{self, TheoremReport};
use comgraph_core::{CommutingGraph, GroupSpec, Mode};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::corpus::Corpus;
use crate::record::ResultRecord;
use crate::spec::parse_spec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Wreath,
    Central,
    SmallCentre,
    PrimeCentre,
    Ult,
    WFamily,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Wreath,
        Suite::Central,
        Suite::SmallCentre,
        Suite::PrimeCentre,
        Suite::Ult,
        Suite::WFamily,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Wreath => "wreath",
            Suite::Central => "central",
            Suite::SmallCentre => "small-centre",
            Suite::PrimeCentre => "prime-centre",
            Suite::Ult => "ult",
            Suite::WFamily => "w-family",
            Suite::All => "all",
        }
    }

    pub fn expand(self) -> Vec<Suite> {
        if self == Suite::All { Suite::ALL.to_vec() } else { vec![self] }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Everything measured for one instance of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub suite: String,
    pub spec: String,
    pub record: Option<ResultRecord>,
    pub report: Option<TheoremReport>,
    pub error: Option<String>,
}

impl Outcome {
    /// Looks up a quantity: record fields first, then `hypothesis` and
    /// `passed` from the theorem report, then its measured values.
    pub fn value(&self, quantity: &str) -> Option<Value> {
        if let Some(r) = &self.record {
            let v = serde_json::to_value(r).ok()?;
            let key = if quantity == "order" { "group_order" } else { quantity };
            if let Some(x) = v.get(key) {
                return Some(x.clone());
            }
        }
        let report = self.report.as_ref()?;
        match quantity {
            "hypothesis" => Some(json!(report.hypothesis_satisfied)),
            "passed" => Some(json!(report.passed())),
            q => report.measured.get(q).cloned(),
        }
    }
}

fn checker(suite: Suite, spec: &GroupSpec, max_order: usize) -> comgraph_core::Result<Option<TheoremReport>> {
    let report = match (suite, spec) {
        (Suite::Wreath, GroupSpec::Wreath(base, n)) => {
            Some(analysis::check_wreath_theorem(&base.build(max_order)?, *n, max_order)?)
        }
        (Suite::Central, GroupSpec::CentralProduct(h, k, phi)) => Some(analysis::check_central_product_theorem(
            &h.build(max_order)?,
            &k.build(max_order)?,
            *phi,
            max_order,
        )?),
        (Suite::Central, GroupSpec::DirectProduct(h, k)) => Some(analysis::check_central_product_theorem(
            &h.build(max_order)?,
            &k.build(max_order)?,
            comgraph_core::Phi::Trivial,
            max_order,
        )?),
        (Suite::SmallCentre, s) => Some(analysis::check_small_centre(&s.build(max_order)?)),
        (Suite::PrimeCentre, s) => Some(analysis::check_prime_centre_index(&s.build(max_order)?)),
        (Suite::Ult, GroupSpec::Ult(n, p)) => Some(analysis::ult_certificate(*n, *p, max_order)?),
        (Suite::WFamily, GroupSpec::ConstructionW(p)) => Some(analysis::w_certificates(*p, max_order)?),
        _ => None,
    };
    Ok(report.map(|r| r.with_instance(spec.to_string())))
}

/// Runs one instance: a transversal diameter record plus the suite's checker.
pub fn run_instance(suite: Suite, spec_text: &str, max_order: usize) -> Outcome {
    let mut out = Outcome {
        suite: suite.name().to_string(),
        spec: spec_text.to_string(),
        record: None,
        report: None,
        error: None,
    };
    let result = (|| -> anyhow::Result<()> {
        let spec = parse_spec(spec_text)?;
        let g = spec.build(max_order)?;
        if !g.is_abelian() {
            let graph = CommutingGraph::build(&g, Mode::Transversal)?;
            out.record = Some(ResultRecord::new(&spec.to_string(), &g, Mode::Transversal, &graph.diameter()));
        }
        out.report = checker(suite, &spec, max_order)?;
        Ok(())
    })();
    if let Err(e) = result {
        out.error = Some(e.to_string());
    }
    out
}

/// One disagreement between a measured value and the corpus.
#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub suite: String,
    pub spec: String,
    pub quantity: String,
    pub expected: Value,
    pub measured: Option<Value>,
    pub anchor: String,
}

/// Runs every instance of the given suites concurrently; outcomes keep the
/// corpus order regardless of completion order.
pub fn run_suites(corpus: &Corpus, suites: &[Suite], max_order: usize) -> Vec<Outcome> {
    let jobs: Vec<(Suite, String)> = suites
        .iter()
        .flat_map(|&s| corpus.instances(s.name()).into_iter().map(move |spec| (s, spec)))
        .collect();
    jobs.par_iter().map(|(s, spec)| run_instance(*s, spec, max_order)).collect()
}

pub fn compare(corpus: &Corpus, outcomes: &[Outcome]) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for o in outcomes {
        for e in corpus.entries.iter().filter(|e| e.suite == o.suite && e.spec == o.spec) {
            let measured = o.value(&e.quantity);
            if measured.as_ref() != Some(&e.value) {
                out.push(Mismatch {
                    suite: e.suite.clone(),
                    spec: e.spec.clone(),
                    quantity: e.quantity.clone(),
                    expected: e.value.clone(),
                    measured,
                    anchor: e.anchor.clone(),
                });
            }
        }
    }
    out
}
