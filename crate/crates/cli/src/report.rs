//! The run report: one entry per check, JSON or aligned text, with the
//! overall verdict driving the exit code.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub runtime_ms: u64,
}

impl CheckEntry {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        CheckEntry {
            name: name.into(),
            verdict: if passed { "pass" } else { "fail" }.into(),
            witness: None,
            tolerance: None,
            runtime_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn tolerance(mut self, t: f64) -> Self {
        self.tolerance = Some(t);
        self
    }

    pub fn runtime(mut self, ms: u64) -> Self {
        self.runtime_ms = ms;
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub instances: Vec<String>,
    pub checks: Vec<CheckEntry>,
    pub overall: String,
}

impl RunReport {
    pub fn new(
        command: impl Into<String>,
        instances: Vec<String>,
        checks: Vec<CheckEntry>,
    ) -> Self {
        let overall = if checks.iter().all(|c| c.passed()) {
            "pass"
        } else {
            "fail"
        };
        RunReport {
            command: command.into(),
            instances,
            checks,
            overall: overall.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == "pass"
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            return serde_json::to_string_pretty(self).expect("report serializes");
        }
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for inst in &self.instances {
            out.push_str(&format!("instance: {inst}\n"));
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let mark = if c.passed() { "ok  " } else { "FAIL" };
            out.push_str(&format!("  {mark} {:width$}", c.name));
            if let Some(t) = c.tolerance {
                out.push_str(&format!("  (tol {t})"));
            }
            out.push_str(&format!("  [{} ms]", c.runtime_ms));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  {w}"));
            }
            out.push('\n');
        }
        out.push_str(&format!("overall: {}\n", self.overall));
        out
    }
}
