//! Machine-readable evaluation report: the scenario echoed back plus one
//! section per engine that ran. Timing is intentionally absent from the
//! serialized form so identical invocations stay byte-identical.

use serde::Serialize;

use crate::analytic::ReliabilityValue;
use crate::model::Scenario;
use crate::oracle::McEstimate;
use crate::scenario_io::ScenarioFile;

#[derive(Debug, Clone, Serialize)]
pub struct ReliabilityReport {
    pub scenario: ScenarioFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analytic: Option<ReliabilityValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive: Option<ExhaustiveSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monte_carlo: Option<McEstimate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSection>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ExhaustiveSection {
    pub value: f64,
    pub node_count: usize,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct VerificationSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive_ok: Option<bool>,
    pub mc_ok: bool,
    pub pass: bool,
}

impl ReliabilityReport {
    pub fn new(scenario: &Scenario) -> Self {
        Self {
            scenario: ScenarioFile::from_scenario(scenario),
            analytic: None,
            exhaustive: None,
            monte_carlo: None,
            verification: None,
        }
    }

    pub fn with_analytic(mut self, value: ReliabilityValue) -> Self {
        self.analytic = Some(value);
        self
    }

    pub fn with_exhaustive(mut self, value: f64, node_count: usize) -> Self {
        self.exhaustive = Some(ExhaustiveSection { value, node_count });
        self
    }

    pub fn with_monte_carlo(mut self, estimate: McEstimate) -> Self {
        self.monte_carlo = Some(estimate);
        self
    }

    pub fn with_verification(
        mut self,
        exhaustive_ok: Option<bool>,
        mc_ok: bool,
        pass: bool,
    ) -> Self {
        self.verification = Some(VerificationSection { exhaustive_ok, mc_ok, pass });
        self
    }

    /// Pretty JSON with a trailing newline; stable field order.
    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        text.push('\n');
        text
    }
}
