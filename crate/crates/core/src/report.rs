use serde::{Deserialize, Serialize};

/// Outcome of one verification: a containment test, a grid biconditional or
/// a Monte Carlo comparison.
///
/// `passed` is always `max_discrepancy <= tolerance`. What the discrepancy
/// measures depends on the check and is stated in `worst_case`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub passed: bool,
    pub max_discrepancy: f64,
    pub tolerance: f64,
    #[serde(rename = "n")]
    pub samples: u64,
    pub seed: Option<u64>,
    pub worst_case: String,
}

impl VerificationReport {
    pub fn new(
        name: impl Into<String>,
        max_discrepancy: f64,
        tolerance: f64,
        samples: u64,
        seed: Option<u64>,
        worst_case: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            passed: max_discrepancy <= tolerance,
            max_discrepancy,
            tolerance,
            samples,
            seed,
            worst_case: worst_case.into(),
        }
    }

    /// One JSON object, no trailing newline.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
