//! Report assembly and rendering.

use std::collections::{BTreeMap, BTreeSet};

use clap::ValueEnum;
use idealarith::Caps;
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One verified (or failed) unit of work inside a run.
#[derive(Debug, Clone, Serialize)]
pub struct Experiment {
    pub key: String,
    pub passed: bool,
    pub summary: BTreeMap<String, String>,
    pub detail: Value,
}

impl Experiment {
    pub fn new(key: impl Into<String>, passed: bool, detail: Value) -> Self {
        Experiment {
            key: key.into(),
            passed,
            summary: BTreeMap::new(),
            detail,
        }
    }

    pub fn with(mut self, field: &str, value: impl ToString) -> Self {
        self.summary.insert(field.to_string(), value.to_string());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub arguments: Value,
    pub seed: u64,
    pub caps: Caps,
    pub passed: bool,
    pub experiments: Vec<Experiment>,
}

impl Report {
    pub fn new(
        command: &str,
        arguments: Value,
        seed: u64,
        caps: Caps,
        mut experiments: Vec<Experiment>,
    ) -> Self {
        experiments.sort_by(|a, b| a.key.cmp(&b.key));
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            arguments,
            seed,
            caps,
            passed: experiments.iter().all(|e| e.passed),
            experiments,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let fields: BTreeSet<&String> = self
            .experiments
            .iter()
            .flat_map(|e| e.summary.keys())
            .collect();
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["key".to_string(), "passed".to_string()];
        header.extend(fields.iter().map(|f| f.to_string()));
        w.write_record(&header).expect("csv write");
        for e in &self.experiments {
            let mut row = vec![e.key.clone(), e.passed.to_string()];
            row.extend(
                fields
                    .iter()
                    .map(|f| e.summary.get(*f).cloned().unwrap_or_default()),
            );
            w.write_record(&row).expect("csv write");
        }
        String::from_utf8(w.into_inner().expect("csv flush")).expect("utf-8")
    }

    fn render_text(&self) -> String {
        let mut out = format!(
            "idealarith {} (schema {}, seed {})\n",
            self.command, self.schema_version, self.seed
        );
        let width = self
            .experiments
            .iter()
            .map(|e| e.key.len())
            .max()
            .unwrap_or(0);
        for e in &self.experiments {
            let fields: Vec<String> = e.summary.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!(
                "{}  {:width$}  {}\n",
                if e.passed { "PASS" } else { "FAIL" },
                e.key,
                fields.join("  "),
            ));
        }
        out.push_str(&format!(
            "{} experiments, {} failed: {}\n",
            self.experiments.len(),
            self.experiments.iter().filter(|e| !e.passed).count(),
            if self.passed { "PASS" } else { "FAIL" }
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let a = Experiment::new("b", true, json!({})).with("n", 2);
        let b = Experiment::new("a", false, json!({"x": 1})).with("m", "x,y");
        Report::new("demo", json!({}), 7, Caps::default(), vec![a, b])
    }

    #[test]
    fn sorted_and_aggregated() {
        let r = sample();
        assert_eq!(r.experiments[0].key, "a");
        assert!(!r.passed);
    }

    #[test]
    fn csv_quotes_fields() {
        let csv = sample().render(Format::Csv);
        assert!(csv.starts_with("key,passed,m,n\n"));
        assert!(csv.contains("\"x,y\""));
    }

    #[test]
    fn text_footer() {
        assert!(sample()
            .render(Format::Text)
            .ends_with("2 experiments, 1 failed: FAIL\n"));
    }
}
