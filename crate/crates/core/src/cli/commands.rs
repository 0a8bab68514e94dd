//! The five subcommands. Each returns the rendered output and its exit code.

use super::config::{
    parse_config, Family, FunctionSpec, MethodChoice, Scenario, ScenarioConfig, SweepVariable, TimeSpec, Transform,
    ValidateOnly, ValidateSpec,
};
use super::output::{records_csv, to_json, Format, Record};
use super::presets::{scenario_preset, CERTIFIED_PRESETS};
use crate::correlations::{correlation_widths, emit_figure_grid, figure_preset, g2_freq_map, linspace, CorrelationMap};
use crate::engine::{
    closed_cascade_at, closed_cascade_rho1_rho2, closed_p11, closed_p11_mixed, closed_spdc_family, dominance_ratio,
    enhancement_g12, enhancement_gp, prob_delta_limit, prob_quadrature,
};
use crate::error::{Error, Result};
use crate::model::{regime_flags, Detunings, ProbabilityResult, RegimeFlag};
use crate::numeric::fmt_sci;
use crate::states::BiphotonState;
use crate::validation::{
    comparison_certificate, delta_ladder, CausalTestFunction, DeltaLadder, EnergyCertificate, DELTA_LADDER,
};
use serde::Serialize;
use std::fmt::Write as _;

/// Why a command did not produce a normal result.
#[derive(Debug)]
pub enum Failure {
    Lib(Error),
    /// A closed form was requested with `--strict` outside its regime.
    Strict(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Strict(_) => 4,
            Failure::Lib(Error::UnderResolved { .. } | Error::Budget { .. }) => 3,
            Failure::Lib(_) => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Strict(m) => write!(f, "strict regime violation: {m}"),
        }
    }
}

/// Rendered output and exit status (0, or 1 for a failed certificate).
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

/// Inputs shared by every subcommand.
#[derive(Debug, Clone, Default)]
pub struct Common {
    pub config: Option<String>,
    pub preset: Option<String>,
    pub format: Option<Format>,
    pub strict: bool,
}

impl Common {
    fn format_or(&self, f: Format) -> Format {
        self.format.unwrap_or(f)
    }

    fn scenario_config(&self) -> Result<ScenarioConfig> {
        match (&self.config, &self.preset) {
            (Some(_), Some(_)) => Err(Error::Config("give --config or --preset, not both".into())),
            (Some(text), None) => parse_config(text),
            (None, Some(name)) => scenario_preset(name),
            (None, None) => Err(Error::Config("need --config PATH or --preset NAME".into())),
        }
    }
}

/// The closed-form value appropriate to the scenario's state.
pub fn closed_value(sc: &Scenario) -> Result<ProbabilityResult> {
    let (s, a, t, t_box) = (&sc.source, &sc.atoms, sc.t, sc.state.t_box());
    let pure = || match sc.family {
        Family::Uncorrelated => closed_p11(s, a),
        Family::Cascade => closed_cascade_at(s, a, t),
        Family::Spdc => closed_spdc_family(s, a, t, t_box).pure,
    };
    Ok(match (&sc.state, sc.family) {
        (BiphotonState::Pure(_), _) => pure(),
        (BiphotonState::CoherentLift { alpha, .. }, _) => pure().scaled(alpha.norm_sqr().powi(2)),
        (_, Family::Uncorrelated) => closed_p11_mixed(s, a, t, t_box),
        (BiphotonState::DiagonalMixed(_), Family::Cascade) => closed_cascade_rho1_rho2(s, a, t, t_box).0,
        (BiphotonState::FactorizedMixed(_), Family::Cascade) => closed_cascade_rho1_rho2(s, a, t, t_box).1,
        (BiphotonState::DiagonalMixed(_), Family::Spdc) => closed_spdc_family(s, a, t, t_box).rho1,
        (BiphotonState::FactorizedMixed(_), Family::Spdc) => closed_spdc_family(s, a, t, t_box).rho2,
    })
}

/// Conditions the closed forms rely on, checked at the scenario time.
fn strict_check(sc: &Scenario) -> std::result::Result<(), Failure> {
    let flags = regime_flags(&sc.source, &sc.atoms, &Detunings::of(&sc.atoms, &sc.source), sc.t);
    let mut missing = Vec::new();
    if !flags.contains(&RegimeFlag::LongTime) {
        missing.push("long_time");
    }
    if sc.family == Family::Spdc && !flags.contains(&RegimeFlag::PulseDelayed) {
        missing.push("pulse_delayed");
    }
    if missing.is_empty() {
        Ok(())
    } else {
        Err(Failure::Strict(format!("closed form needs {}", missing.join(", "))))
    }
}

#[derive(Serialize)]
struct ProbOutput<'a> {
    scenario: Option<&'a str>,
    state: &'a str,
    time: f64,
    records: &'a [Record],
}

pub fn cmd_prob(c: &Common) -> std::result::Result<Outcome, Failure> {
    let cfg = c.scenario_config()?;
    let sc = cfg.resolve()?;
    let m = sc.method;
    let wants = |x: MethodChoice| m == MethodChoice::All || m == x;
    let mut records = Vec::new();
    if wants(MethodChoice::Closed) {
        if c.strict {
            strict_check(&sc)?;
        }
        records.push(Record::ok(closed_value(&sc)?));
    }
    if wants(MethodChoice::Quadrature) {
        records.push(Record::ok(prob_quadrature(&sc.state, &sc.atoms, &sc.grid, sc.t)?));
    }
    if wants(MethodChoice::Delta) {
        records.push(Record::ok(prob_delta_limit(&sc.state, &sc.atoms, &sc.grid, sc.t)?));
    }
    Ok(Outcome::ok(match c.format_or(Format::Csv) {
        Format::Csv => records_csv(&records),
        Format::Json => to_json(&ProbOutput {
            scenario: cfg.name.as_deref(),
            state: sc.state.kind().name(),
            time: sc.t,
            records: &records,
        }),
    }))
}

fn apply_sweep(cfg: &mut ScenarioConfig, var: SweepVariable, v: f64) -> Result<()> {
    let atoms = cfg.atom_pair()?;
    let st = &mut cfg.state;
    match var {
        SweepVariable::Delta | SweepVariable::BigDelta => {
            st.to_detuning_form(&atoms)?;
            let d = st.detunings.as_mut().expect("detuning form");
            if var == SweepVariable::Delta {
                d.delta = v;
            } else {
                d.big_delta = v;
            }
        }
        SweepVariable::WidthAlpha | SweepVariable::WidthBeta => {
            let alpha = var == SweepVariable::WidthAlpha;
            if let Some(s) = st.source.as_mut() {
                if alpha {
                    s.width_alpha = v;
                } else {
                    s.width_beta = v;
                }
            } else if let Some(w) = st.widths.as_mut() {
                if alpha {
                    w.alpha = v;
                } else {
                    w.beta = v;
                }
            }
        }
        SweepVariable::AlphaMag => {
            let lift = st
                .transforms
                .iter_mut()
                .rev()
                .find_map(|t| match t {
                    Transform::CoherentLift(a) => Some(a),
                    _ => None,
                })
                .ok_or_else(|| Error::Config("alpha_mag sweeps need a coherent_lift transform".into()))?;
            let phase = if lift.re == 0.0 && lift.im == 0.0 { 0.0 } else { lift.im.atan2(lift.re) };
            lift.re = v * phase.cos();
            lift.im = v * phase.sin();
        }
        SweepVariable::Time => cfg.time = TimeSpec::Value(v),
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub variable: f64,
    pub value_closed: f64,
    pub value_quadrature: f64,
    pub ratio: f64,
}

#[derive(Serialize)]
struct SweepOutput<'a> {
    scenario: Option<&'a str>,
    variable: SweepVariable,
    rows: &'a [SweepRow],
}

/// Quadrature refusals at a sweep point become `nan`; anything else aborts.
pub fn sweep_rows(cfg: &ScenarioConfig) -> Result<Vec<SweepRow>> {
    let spec = cfg
        .sweep
        .ok_or_else(|| Error::Config("sweep needs a \"sweep\" section".into()))?;
    spec.values()?
        .into_iter()
        .map(|v| {
            let mut point = cfg.clone();
            apply_sweep(&mut point, spec.variable, v)?;
            let sc = point.resolve()?;
            let closed = closed_value(&sc)?.value;
            let quad = match prob_quadrature(&sc.state, &sc.atoms, &sc.grid, sc.t) {
                Ok(r) => r.value,
                Err(Error::UnderResolved { .. } | Error::Budget { .. }) => f64::NAN,
                Err(e) => return Err(e),
            };
            Ok(SweepRow {
                variable: v,
                value_closed: closed,
                value_quadrature: quad,
                ratio: quad / closed,
            })
        })
        .collect()
}

pub fn cmd_sweep(c: &Common) -> std::result::Result<Outcome, Failure> {
    let cfg = c.scenario_config()?;
    let rows = sweep_rows(&cfg)?;
    let variable = cfg.sweep.expect("checked by sweep_rows").variable;
    Ok(Outcome::ok(match c.format_or(Format::Csv) {
        Format::Csv => {
            let mut s = String::from("variable,value_closed,value_quadrature,ratio\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    fmt_sci(r.variable),
                    fmt_sci(r.value_closed),
                    fmt_sci(r.value_quadrature),
                    fmt_sci(r.ratio)
                );
            }
            s
        }
        Format::Json => to_json(&SweepOutput {
            scenario: cfg.name.as_deref(),
            variable,
            rows: &rows,
        }),
    }))
}

#[derive(Serialize)]
struct MapOutput<'a> {
    source: &'a str,
    map: &'a CorrelationMap,
}

pub fn cmd_g2(c: &Common) -> std::result::Result<Outcome, Failure> {
    let (source, map) = match (&c.config, &c.preset) {
        (None, Some(name)) => {
            let f = figure_preset(name)?;
            (name.clone(), emit_figure_grid(&f.state, &f.grid, &f.request)?)
        }
        _ => {
            let cfg = c.scenario_config()?;
            let req = cfg
                .g2
                .ok_or_else(|| Error::Config("g2 needs a \"g2\" section or a figure preset".into()))?
                .request();
            let sc = cfg.resolve()?;
            (cfg.name.clone().unwrap_or_else(|| "config".into()), emit_figure_grid(&sc.state, &sc.grid, &req)?)
        }
    };
    Ok(Outcome::ok(match c.format_or(Format::Csv) {
        Format::Csv => map.to_csv(),
        Format::Json => to_json(&MapOutput { source: &source, map: &map }),
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnhanceReport {
    #[serde(rename = "G_p")]
    pub g_p: f64,
    #[serde(rename = "G_p_degenerate")]
    pub g_p_degenerate: bool,
    #[serde(rename = "G_12")]
    pub g_12: f64,
    pub dominance_ratio: f64,
    pub antidiagonal_width: f64,
    pub diagonal_width: f64,
}

/// Largest per-axis sample count of the local width map.
const WIDTH_MAP_SIDE: usize = 1001;

pub fn enhance_report(sc: &Scenario) -> Result<EnhanceReport> {
    let gp = enhancement_gp(&sc.state, &sc.atoms)?;
    let g12 = enhancement_g12(&sc.state, &sc.atoms, &sc.grid)?;
    let p = sc.state.as_pure().expect("checked by enhancement_gp");
    // Ridge widths from a window around the source centers.
    let s = &sc.source;
    let half = 10.0 * s.max_width();
    let n = ((2.0 * half / (s.min_width() / 5.0)).ceil() as usize + 1).min(WIDTH_MAP_SIDE);
    let w1 = linspace(s.omega_alpha - half, s.omega_alpha + half, n);
    let w2 = linspace(s.omega_beta - half, s.omega_beta + half, n);
    let widths = correlation_widths(&g2_freq_map(&sc.state, &sc.grid, &w1, &w2)?)?;
    Ok(EnhanceReport {
        g_p: gp.value,
        g_p_degenerate: gp.degenerate,
        g_12: g12,
        dominance_ratio: dominance_ratio(p, &sc.atoms),
        antidiagonal_width: widths.antidiagonal_width,
        diagonal_width: widths.diagonal_width,
    })
}

pub fn cmd_enhance(c: &Common) -> std::result::Result<Outcome, Failure> {
    let sc = c.scenario_config()?.resolve()?;
    let r = enhance_report(&sc)?;
    Ok(Outcome::ok(match c.format_or(Format::Json) {
        Format::Json => to_json(&r),
        Format::Csv => {
            let mut s = String::from("quantity,value\n");
            for (k, v) in [
                ("G_p", r.g_p),
                ("G_12", r.g_12),
                ("dominance_ratio", r.dominance_ratio),
                ("antidiagonal_width", r.antidiagonal_width),
                ("diagonal_width", r.diagonal_width),
            ] {
                let _ = writeln!(s, "{k},{}", fmt_sci(v));
            }
            s
        }
    }))
}

fn test_function(f: &FunctionSpec) -> CausalTestFunction {
    match *f {
        FunctionSpec::ExpPoly { n, rate } => CausalTestFunction::exp_poly(n, rate),
        FunctionSpec::SwitchedExp { rate } => CausalTestFunction::switched_exp(rate),
        FunctionSpec::Gaussian { sigma, t0 } => CausalTestFunction::gaussian(sigma, t0),
        FunctionSpec::LorentzianPole { rate } => CausalTestFunction::lorentzian_pole(rate),
    }
}

/// Ladder tolerance at the last rung, and the absolute floor below which
/// rung-to-rung changes are quadrature noise (window truncation leaves ~4e-10).
pub const LADDER_TOLERANCE: f64 = 1e-2;
pub const LADDER_NOISE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub delta: Vec<DeltaLadder>,
    pub energy: Vec<EnergyCertificate>,
    pub passed: bool,
}

pub fn validation_report(spec: &ValidateSpec) -> Result<ValidationReport> {
    use super::config::ValidateWhich as W;
    let mut delta = Vec::new();
    if matches!(spec.which, W::Delta | W::All) {
        let funcs: Vec<CausalTestFunction> = if spec.functions.is_empty() {
            CausalTestFunction::builtins(1.0)
        } else {
            spec.functions.iter().map(test_function).collect()
        };
        for f in &funcs {
            delta.push(delta_ladder(f, &DELTA_LADDER, LADDER_TOLERANCE, LADDER_NOISE)?);
        }
    }
    let mut energy = Vec::new();
    if matches!(spec.which, W::Energy | W::All) {
        let names: Vec<String> = if spec.presets.is_empty() {
            CERTIFIED_PRESETS.iter().map(|s| s.to_string()).collect()
        } else {
            spec.presets.clone()
        };
        for n in &names {
            let sc = scenario_preset(n)?.resolve()?;
            energy.push(comparison_certificate(&sc.state, &sc.grid)?);
        }
    }
    let passed = delta.iter().all(|d| d.passed) && energy.iter().all(|e| e.passed);
    Ok(ValidationReport { delta, energy, passed })
}

pub fn cmd_validate(c: &Common) -> std::result::Result<Outcome, Failure> {
    let mut spec = match &c.config {
        Some(text) => match serde_json::from_str::<ValidateOnly>(text) {
            Ok(v) => v.validate,
            Err(_) => parse_config(text)?.validate.unwrap_or_default(),
        },
        None => ValidateSpec::default(),
    };
    if let Some(p) = &c.preset {
        spec.presets = vec![p.clone()];
        if c.config.is_none() {
            spec.which = super::config::ValidateWhich::Energy;
        }
    }
    let r = validation_report(&spec)?;
    let text = match c.format_or(Format::Json) {
        Format::Json => to_json(&r),
        Format::Csv => {
            let mut s = String::from("check,name,deviation,passed\n");
            for d in &r.delta {
                let last = d.checks.last().map(|x| x.deviation).unwrap_or(f64::NAN);
                let _ = writeln!(s, "delta,\"{}\",{},{}", d.function, fmt_sci(last), d.passed);
            }
            for e in &r.energy {
                let _ = writeln!(s, "energy,{},{},{}", e.state, fmt_sci(e.deviation), e.passed);
            }
            s
        }
    };
    Ok(Outcome {
        text,
        code: if r.passed { 0 } else { 1 },
    })
}
