//! Result records, appended to a JSON-lines cache.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use comgraph_core::{DiameterReport, Distance, FiniteGroup, Mode};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema_version: u32,
    pub artifact_version: String,
    /// Canonical spec string; it re-parses to the same group spec.
    pub spec: String,
    pub group_order: usize,
    pub center_order: usize,
    pub mode: Mode,
    pub connected: bool,
    pub diameter: Distance,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub elapsed_ms: f64,
}

impl ResultRecord {
    pub fn new(spec: &str, g: &FiniteGroup, mode: Mode, report: &DiameterReport) -> Self {
        ResultRecord {
            schema_version: SCHEMA_VERSION,
            artifact_version: env!("CARGO_PKG_VERSION").to_string(),
            spec: spec.to_string(),
            group_order: g.order(),
            center_order: g.center().len(),
            mode,
            connected: report.connected,
            diameter: report.diameter,
            vertex_count: report.vertex_count,
            edge_count: report.edge_count,
            component_count: report.component_count,
            elapsed_ms: report.elapsed_ms,
        }
    }
}

/// Appends one JSON line per record.
pub fn append(path: &Path, records: &[ResultRecord]) -> std::io::Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut buf = String::new();
    for r in records {
        buf.push_str(&serde_json::to_string(r).expect("records serialize"));
        buf.push('\n');
    }
    file.write_all(buf.as_bytes())
}

/// Reads every record from a cache file.
pub fn load(path: &Path) -> anyhow::Result<Vec<ResultRecord>> {
    let text = std::fs::read_to_string(path)?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| Ok(serde_json::from_str(l)?))
        .collect()
}
