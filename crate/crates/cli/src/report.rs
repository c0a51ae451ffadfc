use serde::{Deserialize, Serialize};

/// Exit status of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Exit 0: accepted, geometry, clean cross-check, plain output.
    Affirmative,
    /// Exit 1: rejected, with a certificate in the result.
    Negative,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Affirmative => 0,
            Outcome::Negative => 1,
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Affirmative
        } else {
            Outcome::Negative
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub format: String,
    pub vertices: usize,
    pub edges: usize,
}

/// The `--json` document. One per invocation, written to stdout.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub input: Option<InputDigest>,
    pub outcome: Outcome,
    pub exit_code: u8,
    pub result: serde_json::Value,
    pub wall_ms: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_json_round_trips() {
        let report = RunReport {
            command: vec!["recognize".into(), "g.txt".into()],
            input: Some(InputDigest {
                path: "g.txt".into(),
                format: "canonical".into(),
                vertices: 7,
                edges: 11,
            }),
            outcome: Outcome::Negative,
            exit_code: 1,
            result: serde_json::json!({ "verdict": { "accepted": false, "certificate": { "kind": "p4", "path": [0, 1, 3, 5] } } }),
            wall_ms: 0.25,
        };
        let text = serde_json::to_string(&report).unwrap();
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.exit_code, back.outcome.code());
    }
}
