//! Machine-readable scenario results.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Criterion {
    pub name: String,
    pub pass: bool,
    pub threshold: f64,
    pub observed: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioResult {
    pub scenario: String,
    pub pass: bool,
    pub criteria: Vec<Criterion>,
    pub metrics: BTreeMap<String, f64>,
    pub artifacts: Vec<String>,
}

impl ScenarioResult {
    pub fn new(scenario: &str) -> Self {
        ScenarioResult {
            scenario: scenario.to_string(),
            pass: true,
            criteria: vec![],
            metrics: BTreeMap::new(),
            artifacts: vec![],
        }
    }

    /// Record one criterion where smaller is better.
    pub fn check_below(&mut self, name: &str, observed: f64, threshold: f64) {
        let pass = observed.is_finite() && observed <= threshold;
        self.push(name, pass, threshold, observed);
    }

    /// Record one criterion demanding observed in [lo, hi]; threshold column
    /// carries the violated bound (lo when under, hi when over).
    pub fn check_band(&mut self, name: &str, observed: f64, lo: f64, hi: f64) {
        let pass = observed.is_finite() && observed >= lo && observed <= hi;
        let threshold = if observed < lo { lo } else { hi };
        self.push(name, pass, threshold, observed);
    }

    fn push(&mut self, name: &str, pass: bool, threshold: f64, observed: f64) {
        self.pass &= pass;
        self.criteria.push(Criterion {
            name: name.to_string(),
            pass,
            threshold,
            observed,
        });
    }

    pub fn metric(&mut self, name: &str, value: f64) {
        self.metrics.insert(name.to_string(), value);
    }

    /// Record an artifact path; stored relative to the output directory so
    /// reports are byte-identical across runs in different locations.
    pub fn artifact(&mut self, path: &Path) {
        let rel = path.file_name().map(|f| f.to_string_lossy().into_owned());
        self.artifacts
            .push(rel.unwrap_or_else(|| path.display().to_string()));
    }

    pub fn write(&self, out_dir: &Path) -> anyhow::Result<PathBuf> {
        std::fs::create_dir_all(out_dir)?;
        let path = out_dir.join("result.json");
        std::fs::write(&path, serde_json::to_string_pretty(self)?)?;
        Ok(path)
    }

    pub fn print_summary(&self) {
        for c in &self.criteria {
            println!(
                "[{}] {}: observed {:.6e} (threshold {:.6e})",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.observed,
                c.threshold
            );
        }
        println!(
            "scenario {}: {}",
            self.scenario,
            if self.pass { "PASS" } else { "FAIL" }
        );
    }
}
