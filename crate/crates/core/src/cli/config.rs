//! JSON scenario documents and their resolution into library objects.

use crate::correlations::{MapKind, MapRequest};
use crate::error::{Error, Result};
use crate::model::{make_grid, AtomPair, Detunings, FrequencyGrid, GridOptions, SourceParams};
use crate::states::{coherent_lift, disentangle, factorize, make_cascade, make_spdc, make_uncorrelated, BiphotonState};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Default quantization time: comb spacing 0.01.
pub const DEFAULT_PERIOD: f64 = 2.0 * PI / 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Uncorrelated,
    Cascade,
    Spdc,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transform {
    Disentangle,
    Factorize,
    CoherentLift(ComplexSpec),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DetuningSpec {
    pub delta: f64,
    #[serde(rename = "Delta")]
    pub big_delta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WidthSpec {
    pub alpha: f64,
    pub beta: f64,
}

/// A state: either explicit source centers or detunings around the atoms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateSpec {
    pub kind: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<SourceParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detunings: Option<DetuningSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub widths: Option<WidthSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t0: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase: Option<f64>,
    #[serde(default)]
    pub transforms: Vec<Transform>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomSpec {
    pub omega1: f64,
    pub omega2: f64,
    #[serde(default = "default_gamma")]
    pub gamma1: f64,
    #[serde(default = "default_gamma")]
    pub gamma2: f64,
    #[serde(default = "default_p0")]
    pub p0: f64,
}

fn default_gamma() -> f64 {
    1e-3
}

fn default_p0() -> f64 {
    1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    #[serde(default = "default_period")]
    pub period: f64,
    #[serde(default = "default_coverage")]
    pub coverage: f64,
    #[serde(default = "default_max_points")]
    pub max_points: usize,
}

fn default_period() -> f64 {
    DEFAULT_PERIOD
}

fn default_coverage() -> f64 {
    GridOptions::default().coverage
}

fn default_max_points() -> usize {
    GridOptions::default().max_points
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            period: default_period(),
            coverage: default_coverage(),
            max_points: default_max_points(),
        }
    }
}

/// `"auto"` or explicit grid parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GridChoice {
    Auto(String),
    Spec(GridSpec),
}

impl Default for GridChoice {
    fn default() -> Self {
        GridChoice::Auto("auto".into())
    }
}

impl GridChoice {
    pub fn spec(&self) -> Result<GridSpec> {
        match self {
            GridChoice::Auto(s) if s == "auto" => Ok(GridSpec::default()),
            GridChoice::Auto(s) => Err(Error::Config(format!("grid must be \"auto\" or an object, got \"{s}\""))),
            GridChoice::Spec(g) => Ok(*g),
        }
    }
}

/// A number, `"T"`, or a multiple like `"2T"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TimeSpec {
    Value(f64),
    Symbol(String),
}

impl Default for TimeSpec {
    fn default() -> Self {
        TimeSpec::Symbol("T".into())
    }
}

impl TimeSpec {
    pub fn resolve(&self, t_box: f64) -> Result<f64> {
        match self {
            TimeSpec::Value(v) if v.is_finite() && *v >= 0.0 => Ok(*v),
            TimeSpec::Value(v) => Err(Error::Config(format!("time must be finite and >= 0, got {v}"))),
            TimeSpec::Symbol(s) => {
                let s = s.trim();
                let k = s
                    .strip_suffix('T')
                    .ok_or_else(|| Error::Config(format!("time symbol must look like \"T\" or \"2T\", got \"{s}\"")))?;
                let k: f64 = if k.is_empty() {
                    1.0
                } else {
                    k.parse().map_err(|_| Error::Config(format!("bad time multiple \"{s}\"")))?
                };
                if !(k.is_finite() && k >= 0.0) {
                    return Err(Error::Config(format!("bad time multiple \"{s}\"")));
                }
                Ok(k * t_box)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum MethodChoice {
    Closed,
    Quadrature,
    Delta,
    #[default]
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepVariable {
    #[serde(rename = "delta")]
    Delta,
    #[serde(rename = "Delta")]
    BigDelta,
    #[serde(rename = "width_alpha")]
    WidthAlpha,
    #[serde(rename = "width_beta")]
    WidthBeta,
    #[serde(rename = "alpha_mag")]
    AlphaMag,
    #[serde(rename = "t")]
    Time,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum SweepScale {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    #[serde(default)]
    pub scale: SweepScale,
}

impl SweepSpec {
    pub fn values(&self) -> Result<Vec<f64>> {
        if self.steps < 2 {
            return Err(Error::Config(format!("sweep needs steps >= 2, got {}", self.steps)));
        }
        if !(self.from.is_finite() && self.to.is_finite()) {
            return Err(Error::Config("sweep bounds must be finite".into()));
        }
        let n = self.steps;
        Ok(match self.scale {
            SweepScale::Linear => (0..n).map(|i| self.from + (self.to - self.from) * i as f64 / (n - 1) as f64).collect(),
            SweepScale::Log => {
                if !(self.from > 0.0 && self.to > 0.0) {
                    return Err(Error::Config("log sweeps need positive bounds".into()));
                }
                let (a, b) = (self.from.ln(), self.to.ln());
                (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect()
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct G2Spec {
    pub kind: MapKind,
    pub range1: (f64, f64),
    pub range2: (f64, f64),
    pub resolution: (usize, usize),
}

impl G2Spec {
    pub fn request(&self) -> MapRequest {
        MapRequest {
            kind: self.kind,
            range1: self.range1,
            range2: self.range2,
            resolution: self.resolution,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ValidateWhich {
    Delta,
    Energy,
    #[default]
    All,
}

/// User-selectable test function families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum FunctionSpec {
    ExpPoly { n: u32, rate: f64 },
    SwitchedExp { rate: f64 },
    Gaussian { sigma: f64, t0: f64 },
    LorentzianPole { rate: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct ValidateSpec {
    #[serde(default)]
    pub which: ValidateWhich,
    /// Test functions; the three built-ins at rate 1 when empty.
    #[serde(default)]
    pub functions: Vec<FunctionSpec>,
    /// Scenario presets to certify; the in-window defaults when empty.
    #[serde(default)]
    pub presets: Vec<String>,
}

/// One JSON config document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub state: StateSpec,
    pub atoms: AtomSpec,
    #[serde(default)]
    pub grid: GridChoice,
    #[serde(default)]
    pub time: TimeSpec,
    #[serde(default)]
    pub method: MethodChoice,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g2: Option<G2Spec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validate: Option<ValidateSpec>,
}

/// A config with only a `validate` section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValidateOnly {
    pub validate: ValidateSpec,
}

pub fn parse_config(text: &str) -> Result<ScenarioConfig> {
    serde_json::from_str(text).map_err(|e| Error::Config(format!("config: {e}")))
}

/// A config resolved into library objects.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub family: Family,
    pub source: SourceParams,
    pub atoms: AtomPair,
    pub grid: FrequencyGrid,
    pub state: BiphotonState,
    /// The pure state before transforms.
    pub base: BiphotonState,
    pub t: f64,
    pub method: MethodChoice,
}

impl StateSpec {
    pub fn source(&self, atoms: &AtomPair) -> Result<SourceParams> {
        let mut s = match (&self.source, &self.detunings) {
            (Some(_), Some(_)) => return Err(Error::Config("give either state.source or state.detunings, not both".into())),
            (Some(s), None) => {
                if self.widths.is_some() {
                    return Err(Error::Config("state.widths only goes with state.detunings".into()));
                }
                *s
            }
            (None, Some(d)) => {
                let w = self
                    .widths
                    .ok_or_else(|| Error::Config("state.detunings needs state.widths".into()))?;
                SourceParams::from_detunings(atoms, Detunings::new(d.delta, d.big_delta), w.alpha, w.beta)
            }
            (None, None) => return Err(Error::Config("state needs source or detunings".into())),
        };
        if let Some(t0) = self.t0 {
            s.t0 = t0;
        }
        if let Some(ph) = self.phase {
            s.phase = ph;
        }
        s.validate().map_err(|e| Error::Config(e.to_string()))?;
        Ok(s)
    }

    /// Rewrite an explicit-source spec in detuning form.
    pub fn to_detuning_form(&mut self, atoms: &AtomPair) -> Result<()> {
        if self.detunings.is_some() {
            return Ok(());
        }
        let s = self.source(atoms)?;
        let d = Detunings::of(atoms, &s);
        self.source = None;
        self.detunings = Some(DetuningSpec {
            delta: d.delta,
            big_delta: d.big_delta,
        });
        self.widths = Some(WidthSpec {
            alpha: s.width_alpha,
            beta: s.width_beta,
        });
        self.t0 = Some(s.t0);
        self.phase = Some(s.phase);
        Ok(())
    }
}

impl ScenarioConfig {
    pub fn atom_pair(&self) -> Result<AtomPair> {
        let a = &self.atoms;
        AtomPair::new(a.omega1, a.omega2, a.gamma1, a.gamma2, a.p0).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn resolve(&self) -> Result<Scenario> {
        let atoms = self.atom_pair()?;
        let source = self.state.source(&atoms)?;
        let g = self.grid.spec()?;
        let grid = make_grid(
            &source,
            &atoms,
            g.period,
            GridOptions {
                coverage: g.coverage,
                max_points: g.max_points,
            },
        )?;
        let base = match self.state.kind {
            Family::Uncorrelated => make_uncorrelated(&source, g.period)?,
            Family::Cascade => make_cascade(&source, g.period)?,
            Family::Spdc => make_spdc(&source, g.period)?,
        };
        let mut state = base.clone();
        for tr in &self.state.transforms {
            state = match tr {
                Transform::Disentangle => disentangle(&state)?,
                Transform::Factorize => factorize(&state)?,
                Transform::CoherentLift(a) => coherent_lift(&state, C64::new(a.re, a.im))?,
            };
        }
        let t = self.time.resolve(g.period)?;
        Ok(Scenario {
            family: self.state.kind,
            source,
            atoms,
            grid,
            state,
            base,
            t,
            method: self.method,
        })
    }
}
