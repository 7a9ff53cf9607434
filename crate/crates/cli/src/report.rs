use serde::Serialize;
use serde_json::Value;

/// Round to 12 decimals for display, so `0.4999999999999999` reads `0.5`.
pub fn tidy(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// One numeric or boolean check.
#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// `None` for purely combinatorial checks.
    pub residual: Option<f64>,
    pub tol: Option<f64>,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<String>,
    pub tol: f64,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub artifacts: serde_json::Map<String, Value>,
    pub passed: bool,
}

impl RunReport {
    pub fn new(command: &str, inputs: &[&str], tol: f64, seed: u64) -> Self {
        RunReport {
            command: command.into(),
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            tol,
            seed,
            checks: Vec::new(),
            artifacts: serde_json::Map::new(),
            passed: true,
        }
    }

    /// `residual ≤ tol`.
    pub fn residual(&mut self, name: &str, residual: f64, tol: f64) {
        let passed = residual <= tol;
        self.passed &= passed;
        self.checks.push(Check { name: name.into(), residual: Some(residual), tol: Some(tol), passed });
    }

    pub fn flag(&mut self, name: &str, passed: bool) {
        self.passed &= passed;
        self.checks.push(Check { name: name.into(), residual: None, tol: None, passed });
    }

    pub fn artifact(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("artifacts are plain data");
        self.artifacts.insert(key.into(), v);
    }

    pub fn render(&self) -> String {
        let mut out = format!("{} {}\n", self.command, self.inputs.join(" "));
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            match (c.residual, c.tol) {
                (Some(r), Some(t)) => out.push_str(&format!("  {status}  {:width$}  {r:.3e} (tol {t:.0e})\n", c.name)),
                _ => out.push_str(&format!("  {status}  {}\n", c.name)),
            }
        }
        for (k, v) in &self.artifacts {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        out.push_str(if self.passed { "all checks passed\n" } else { "some checks FAILED\n" });
        out
    }
}
