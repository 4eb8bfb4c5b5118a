//! Expected values shipped with the tool. Each entry names a suite, a spec,
//! a measured quantity and the value it must take, plus a short anchor
//! label printed when verification fails.

use serde::{Deserialize, Serialize};
use serde_json::Value;

const EMBEDDED: &str = include_str!("../data/expected.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Corpus {
    pub version: u32,
    pub entries: Vec<Expectation>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expectation {
    pub suite: String,
    pub spec: String,
    pub quantity: String,
    pub value: Value,
    pub anchor: String,
}

impl Corpus {
    pub fn embedded() -> Self {
        serde_json::from_str(EMBEDDED).expect("embedded corpus is valid JSON")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Distinct specs of `suite`, in first-appearance order.
    pub fn instances(&self, suite: &str) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for e in self.entries.iter().filter(|e| e.suite == suite) {
            if !out.contains(&e.spec) {
                out.push(e.spec.clone());
            }
        }
        out
    }
}
