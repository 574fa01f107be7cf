use std::fmt::{self, Write as _};

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: u8,
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

/// Outcome of the extension pipeline on a torus-bearing entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineSummary {
    pub torus_dim: usize,
    pub index: usize,
    pub extension_dim: usize,
    pub generator_count: usize,
    pub kernel_dim: usize,
    pub kernel_index: usize,
    pub degree_sum: u32,
    pub c: usize,
    pub weights_independent: bool,
    pub generators_in_g: bool,
    pub kernel_codimension: bool,
    pub kernel_index_matches: bool,
    pub degree_bound: bool,
    pub invariant_on_g: Option<bool>,
    pub pfaffian_weight_is_trace: bool,
    pub pfaffian_homogeneous: bool,
    pub pfaffian: String,
    pub delta: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Parameter {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub entry: String,
    pub dim: usize,
    pub passed: bool,
    pub parameters: Vec<Parameter>,
    pub generators: Vec<String>,
    pub pipeline: Option<PipelineSummary>,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn check(&self, id: u8) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed { "ok" } else { "FAILED" };
        let _ = writeln!(out, "{} (dim {}): {verdict}", self.entry, self.dim);
        if !self.parameters.is_empty() {
            let params: Vec<String> = self.parameters.iter().map(|p| format!("{} = {}", p.name, p.value)).collect();
            let _ = writeln!(out, "  parameters: {}", params.join(", "));
        }
        if !self.generators.is_empty() {
            let _ = writeln!(out, "  generators: {}", self.generators.join(", "));
        }
        for c in &self.checks {
            let _ = writeln!(out, "  {:>2} {:<20} {:<4}  {}", c.id, c.name, c.status.to_string(), c.detail);
        }
        out
    }
}

/// A file that could not be loaded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoadFailure {
    pub file: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub seed: u64,
    pub entries: usize,
    pub passed: usize,
    pub failed: usize,
    pub load_failures: Vec<LoadFailure>,
    pub reports: Vec<Report>,
}

impl Summary {
    pub fn success(&self) -> bool {
        self.failed == 0 && self.load_failures.is_empty()
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.to_human());
        }
        for f in &self.load_failures {
            let _ = writeln!(out, "{}: load error: {}", f.file, f.error);
        }
        let _ = writeln!(
            out,
            "{} entries, {} passed, {} failed, {} load errors (seed {})",
            self.entries,
            self.passed,
            self.failed,
            self.load_failures.len(),
            self.seed
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
