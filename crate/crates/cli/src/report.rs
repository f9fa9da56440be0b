use serde::{Deserialize, Serialize};

use cusp_core::existence::{DecisionReport, OracleRecord};
use cusp_core::padic::{PadicReport, PadicSpec};
use cusp_core::rootdata::GroupSpec;

pub const SCHEMA: &str = "cusp-report/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    pub report: ReportBody,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportBody {
    Finite {
        spec: GroupSpec,
        decision: DecisionReport,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        oracle: Option<OracleRecord>,
    },
    Padic {
        spec: PadicSpec,
        decision: PadicReport,
    },
}

/// Milliseconds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub decision_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_ms: Option<f64>,
}

impl ReportDocument {
    pub fn new(report: ReportBody) -> Self {
        Self { schema: SCHEMA.to_string(), report, timing: None }
    }
}
