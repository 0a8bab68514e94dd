//! CSV and JSON rendering for command results.

use crate::model::{FlagSet, Method, ProbabilityResult};
use crate::numeric::fmt_sci;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One probability row; `error` is set when the route refused.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub method: Method,
    pub value: Option<f64>,
    pub error_estimate: Option<f64>,
    pub time: f64,
    pub regime_flags: FlagSet,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Record {
    pub fn ok(r: ProbabilityResult) -> Self {
        Record {
            method: r.method,
            value: Some(r.value),
            error_estimate: r.error_estimate,
            time: r.time,
            regime_flags: r.regime_flags,
            warnings: r.warnings,
            error: None,
        }
    }

    pub fn refused(method: Method, time: f64, why: String) -> Self {
        Record {
            method,
            value: None,
            error_estimate: None,
            time,
            regime_flags: FlagSet::new(),
            warnings: Vec::new(),
            error: Some(why),
        }
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::ClosedForm => "closed_form",
        Method::Quadrature => "quadrature",
        Method::DeltaLimit => "delta_limit",
    }
}

fn flag_names(f: &FlagSet) -> String {
    f.iter()
        .map(|x| serde_json::to_value(x).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default())
        .collect::<Vec<_>>()
        .join(";")
}

fn num(v: Option<f64>) -> String {
    v.map(fmt_sci).unwrap_or_else(|| "nan".into())
}

pub fn records_csv(records: &[Record]) -> String {
    let mut s = String::from("method,value,error_estimate,time,regime_flags\n");
    for r in records {
        s += &format!(
            "{},{},{},{},{}\n",
            method_name(r.method),
            num(r.value),
            r.error_estimate.map(fmt_sci).unwrap_or_default(),
            fmt_sci(r.time),
            flag_names(&r.regime_flags)
        );
    }
    s
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}
