use super::FlagSet;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Quadrature,
    DeltaLimit,
}

/// A probability with provenance. Values are in units of p0 times p0's
/// actual value, i.e. plain numbers when `AtomPair::p0 = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbabilityResult {
    pub value: f64,
    pub method: Method,
    pub time: f64,
    pub regime_flags: FlagSet,
    /// Relative deviation from a comb of different resolution; quadrature only.
    pub error_estimate: Option<f64>,
    /// Human-readable caveats (e.g. unverifiable switched-on condition).
    pub warnings: Vec<String>,
}

impl ProbabilityResult {
    pub fn closed(value: f64, time: f64, regime_flags: FlagSet) -> Self {
        ProbabilityResult {
            value,
            method: Method::ClosedForm,
            time,
            regime_flags,
            error_estimate: None,
            warnings: Vec::new(),
        }
    }

    pub fn scaled(mut self, factor: f64) -> Self {
        self.value *= factor;
        self
    }
}
