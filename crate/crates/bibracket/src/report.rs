//! Check results and machine-readable reports.
//!
//! Reports are deterministic: identical inputs and seed produce identical
//! JSON bytes, so wall-clock time appears only in the human-readable
//! rendering.

use serde::Serialize;

/// A concrete counterexample. All strings use the expression syntax of
/// `expr`, so a witness can be replayed by parsing its inputs and
/// re-evaluating the failed property.
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    /// Number of tuples the sweep covered.
    pub cases: usize,
    pub details: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn passed(name: impl Into<String>, cases: usize, details: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            pass: true,
            cases,
            details: details.into(),
            witness: None,
        }
    }

    pub fn failed(
        name: impl Into<String>,
        cases: usize,
        details: impl Into<String>,
        witness: Witness,
    ) -> Self {
        CheckResult {
            name: name.into(),
            pass: false,
            cases,
            details: details.into(),
            witness: Some(witness),
        }
    }
}

/// Aggregate result of one checker operation.
pub type AxiomReport = Vec<CheckResult>;

pub fn all_pass(checks: &[CheckResult]) -> bool {
    checks.iter().all(|c| c.pass)
}

#[derive(Serialize, Debug)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub spec: String,
    pub spec_digest: String,
    pub seed: u64,
    pub maxlen: usize,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(
        command: impl Into<String>,
        spec: impl Into<String>,
        spec_digest: impl Into<String>,
        seed: u64,
        maxlen: usize,
        checks: Vec<CheckResult>,
    ) -> Self {
        let pass = all_pass(&checks);
        Report {
            schema: 1,
            command: command.into(),
            spec: spec.into(),
            spec_digest: spec_digest.into(),
            seed,
            maxlen,
            pass,
            checks,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn render_text(&self, elapsed: std::time::Duration) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{} on {} (digest {}, seed {}, maxlen {})\n",
            self.command,
            self.spec,
            &self.spec_digest[..12.min(self.spec_digest.len())],
            self.seed,
            self.maxlen
        ));
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {} ({} cases) {}\n",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                c.cases,
                c.details
            ));
            if let Some(w) = &c.witness {
                out.push_str(&format!("        inputs: {}\n", w.inputs.join(" ; ")));
                out.push_str(&format!("        lhs: {}\n", w.lhs));
                out.push_str(&format!("        rhs: {}\n", w.rhs));
            }
        }
        out.push_str(&format!(
            "{} in {:.3}s\n",
            if self.pass { "ALL CHECKS PASSED" } else { "CHECKS FAILED" },
            elapsed.as_secs_f64()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape_is_stable() {
        let r = Report::new(
            "check-bibracket",
            "demo.spec",
            "abc123",
            7,
            4,
            vec![CheckResult::passed("antisymmetry", 10, "all pairs")],
        );
        let j = r.to_json();
        assert!(j.contains("\"schema\": 1"));
        assert!(j.contains("\"pass\": true"));
        assert!(!j.contains("elapsed"), "timing must stay out of JSON");
        // byte-identical on re-serialization
        assert_eq!(j, r.to_json());
    }

    #[test]
    fn failing_check_carries_witness() {
        let w = Witness {
            inputs: vec!["x".into(), "y".into()],
            lhs: "(1) * x".into(),
            rhs: "0".into(),
        };
        let r = Report::new(
            "check-bibracket",
            "demo.spec",
            "abc123",
            7,
            4,
            vec![CheckResult::failed("antisymmetry", 3, "mismatch", w)],
        );
        assert!(!r.pass);
        assert!(r.to_json().contains("witness"));
    }
}
