use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "report-v1";

/// One residual compared against its tolerance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            // Adding zero turns −0 into +0.
            residual: residual + 0.0,
            tolerance,
            // NaN residuals fail.
            pass: residual <= tolerance,
        }
    }

    /// An exact check: passes only with residual zero.
    pub fn exact(name: impl Into<String>, ok: bool) -> Self {
        Self::new(name, if ok { 0.0 } else { 1.0 }, 0.0)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub resolution: Option<usize>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub suite: String,
    pub params: Params,
    pub checks: Vec<Check>,
    pub pass: bool,
    /// Wall-clock time, only recorded on request so that reports stay
    /// reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<f64>,
}

impl Report {
    pub fn new(suite: impl Into<String>, params: Params) -> Self {
        Report {
            schema: SCHEMA.into(),
            suite: suite.into(),
            params,
            checks: Vec::new(),
            pass: true,
            elapsed_ms: None,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    /// Appends the checks of `other`, prefixed with its suite name.
    pub fn absorb(&mut self, other: Report) {
        for mut c in other.checks {
            c.name = format!("{}/{}", other.suite, c.name);
            self.push(c);
        }
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,check,residual,tolerance,pass\n");
        for c in &self.checks {
            let _ = writeln!(out, "{},{},{:e},{:e},{}", self.suite, c.name.replace(',', ";"), c.residual, c.tolerance, c.pass);
        }
        out
    }

    pub fn to_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let p = &self.params;
        let _ = write!(out, "suite {}  n={}  seed={}", self.suite, p.n, p.seed);
        if let Some(d) = p.degree {
            let _ = write!(out, "  degree={d}");
        }
        if let Some(r) = p.resolution {
            let _ = write!(out, "  resolution={r}");
        }
        out.push('\n');
        let _ = writeln!(out, "{:<width$}  {:>12}  {:>12}  result", "check", "residual", "tolerance");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<width$}  {:>12.3e}  {:>12.3e}  {}",
                c.name,
                c.residual,
                c.tolerance,
                if c.pass { "PASS" } else { "FAIL" }
            );
        }
        let _ = write!(out, "{}", if self.pass { "PASS" } else { "FAIL" });
        if let Some(ms) = self.elapsed_ms {
            let _ = write!(out, "  ({ms:.0} ms)");
        }
        out.push('\n');
        out
    }
}
