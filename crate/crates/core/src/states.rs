//! The biphoton state catalog.
//!
//! Pure states are analytic evaluators of the comb amplitude `c_kq`,
//! normalized so that `sum_kq |c_kq|^2 = 1` on the infinite comb of period T
//! (equivalently `(T/2pi)^2 * integral |c|^2 = 1`). Mixed states and the
//! coherent lift wrap a pure parent; grid samples are produced on demand.

use crate::error::{Error, Result};
use crate::model::{FlagSet, FrequencyGrid, RegimeFlag, SourceParams, Thresholds};
use crate::numeric::{comb_lorentzian_sum, pairwise_sum};
use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StateKind {
    UncorrelatedPure,
    CascadePure,
    SpdcPure,
    TabulatedPure,
    DiagonalMixed,
    FactorizedMixed,
    CoherentLift,
}

impl StateKind {
    pub fn name(&self) -> &'static str {
        match self {
            StateKind::UncorrelatedPure => "uncorrelated_pure",
            StateKind::CascadePure => "cascade_pure",
            StateKind::SpdcPure => "spdc_pure",
            StateKind::TabulatedPure => "tabulated_pure",
            StateKind::DiagonalMixed => "diagonal_mixed",
            StateKind::FactorizedMixed => "factorized_mixed",
            StateKind::CoherentLift => "coherent_lift",
        }
    }
}

/// Amplitudes given node by node on a comb; zero elsewhere.
#[derive(Debug, Clone, PartialEq)]
pub struct Tabulated {
    pub origin: f64,
    pub spacing: f64,
    pub entries: BTreeMap<(i64, i64), C64>,
}

impl Tabulated {
    fn lookup(&self, wk: f64, wq: f64) -> C64 {
        let xk = (wk - self.origin) / self.spacing;
        let xq = (wq - self.origin) / self.spacing;
        let (jk, jq) = (xk.round(), xq.round());
        if (xk - jk).abs() > 1e-6 || (xq - jq).abs() > 1e-6 {
            return C64::new(0.0, 0.0);
        }
        self.entries
            .get(&(jk as i64, jq as i64))
            .copied()
            .unwrap_or(C64::new(0.0, 0.0))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PureFamily {
    Uncorrelated,
    Cascade,
    Spdc,
    Tabulated(Arc<Tabulated>),
}

/// A normalized pure biphoton state on a comb of period `t_box`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    pub family: PureFamily,
    pub source: SourceParams,
    pub t_box: f64,
    /// Amplitude prefactor: g_alpha*g_beta for Lorentzian families, the
    /// normalization constant for SPDC, the rescaling for tabulated input.
    pub norm_const: f64,
}

impl PureState {
    pub fn kind(&self) -> StateKind {
        match self.family {
            PureFamily::Uncorrelated => StateKind::UncorrelatedPure,
            PureFamily::Cascade => StateKind::CascadePure,
            PureFamily::Spdc => StateKind::SpdcPure,
            PureFamily::Tabulated(_) => StateKind::TabulatedPure,
        }
    }

    /// Comb amplitude `c(omega_k, omega_q)`.
    pub fn amplitude(&self, wk: f64, wq: f64) -> C64 {
        let s = &self.source;
        match &self.family {
            PureFamily::Uncorrelated => {
                let a = C64::new(wk - s.omega_alpha, s.width_alpha);
                let b = C64::new(wq - s.omega_beta, s.width_beta);
                self.norm_const / (a * b)
            }
            PureFamily::Cascade => {
                let a = C64::new(wk + wq - s.omega_alpha - s.omega_beta, s.width_alpha);
                let b = C64::new(wq - s.omega_beta, s.width_beta);
                self.norm_const / (a * b)
            }
            PureFamily::Spdc => {
                let (sa, sb) = (s.width_alpha, s.width_beta);
                let sum = wk - s.omega_alpha + wq - s.omega_beta;
                let pump = C64::from_polar((-sum * sum / (2.0 * sa * sa)).exp(), sum * s.t0);
                let e1 = (-((wk - s.omega_alpha).powi(2) + (wq - s.omega_beta).powi(2)) / (2.0 * sb * sb)).exp();
                let e2 = (-((wk - s.omega_beta).powi(2) + (wq - s.omega_alpha).powi(2)) / (2.0 * sb * sb)).exp();
                self.norm_const * pump * (C64::new(e1, 0.0) + C64::from_polar(e2, s.phase))
            }
            PureFamily::Tabulated(t) => self.norm_const * t.lookup(wk, wq),
        }
    }

    pub fn weight(&self, wk: f64, wq: f64) -> f64 {
        self.amplitude(wk, wq).norm_sqr()
    }

    /// The same state in a box of another length.
    pub fn with_period(&self, t_box: f64) -> Result<PureState> {
        match &self.family {
            PureFamily::Uncorrelated => make_uncorrelated_pure(&self.source, t_box),
            PureFamily::Cascade => make_cascade_pure(&self.source, t_box),
            PureFamily::Spdc => make_spdc_pure(&self.source, t_box),
            PureFamily::Tabulated(_) => Err(Error::InvalidInput(
                "tabulated states live on a fixed comb and cannot be rescaled".into(),
            )),
        }
    }

    /// Whether the time-domain support starts at t = 0.
    pub fn switched_on(&self, th: &Thresholds) -> RegimeFlag {
        match self.family {
            PureFamily::Uncorrelated | PureFamily::Cascade => RegimeFlag::SwitchedOn,
            PureFamily::Spdc => {
                // Pulse envelope std is ~1/sigma; require t0 beyond threshold/sigma_min.
                if self.source.t0 * self.source.min_width() >= th.pulse_delay {
                    RegimeFlag::SwitchedOn
                } else {
                    RegimeFlag::SwitchedOnUnverified
                }
            }
            PureFamily::Tabulated(_) => RegimeFlag::SwitchedOnUnverified,
        }
    }
}

/// Any catalog state.
#[derive(Debug, Clone, PartialEq)]
pub enum BiphotonState {
    Pure(PureState),
    /// `p(k, q) = |c(k, q)|^2` of the parent.
    DiagonalMixed(PureState),
    /// Product of the parent's single-photon marginals.
    FactorizedMixed(PureState),
    CoherentLift { base: PureState, alpha: C64 },
}

impl BiphotonState {
    pub fn kind(&self) -> StateKind {
        match self {
            BiphotonState::Pure(p) => p.kind(),
            BiphotonState::DiagonalMixed(_) => StateKind::DiagonalMixed,
            BiphotonState::FactorizedMixed(_) => StateKind::FactorizedMixed,
            BiphotonState::CoherentLift { .. } => StateKind::CoherentLift,
        }
    }

    /// The pure state this one was derived from.
    pub fn parent(&self) -> &PureState {
        match self {
            BiphotonState::Pure(p)
            | BiphotonState::DiagonalMixed(p)
            | BiphotonState::FactorizedMixed(p)
            | BiphotonState::CoherentLift { base: p, .. } => p,
        }
    }

    pub fn source(&self) -> &SourceParams {
        &self.parent().source
    }

    pub fn t_box(&self) -> f64 {
        self.parent().t_box
    }

    pub fn as_pure(&self) -> Option<&PureState> {
        match self {
            BiphotonState::Pure(p) => Some(p),
            _ => None,
        }
    }

    pub fn with_period(&self, t_box: f64) -> Result<BiphotonState> {
        Ok(match self {
            BiphotonState::Pure(p) => BiphotonState::Pure(p.with_period(t_box)?),
            BiphotonState::DiagonalMixed(p) => BiphotonState::DiagonalMixed(p.with_period(t_box)?),
            BiphotonState::FactorizedMixed(p) => BiphotonState::FactorizedMixed(p.with_period(t_box)?),
            BiphotonState::CoherentLift { base, alpha } => BiphotonState::CoherentLift {
                base: base.with_period(t_box)?,
                alpha: *alpha,
            },
        })
    }

    /// Regime flags of the state itself (coherent amplitude, pulse delay).
    pub fn flags(&self, th: &Thresholds) -> FlagSet {
        let mut f = FlagSet::new();
        if let BiphotonState::CoherentLift { alpha, .. } = self {
            f.insert(if alpha.norm() >= th.coherent_amplitude {
                RegimeFlag::LargeCoherentAmplitude
            } else {
                RegimeFlag::SmallCoherentAmplitude
            });
        }
        f
    }
}

fn check_resolution(source: &SourceParams, t_box: f64) -> Result<()> {
    source.validate()?;
    if !(t_box.is_finite() && t_box > 0.0) {
        return Err(Error::InvalidInput(format!("T must be > 0, got {t_box}")));
    }
    let h = 2.0 * PI / t_box;
    let required = source.min_width() / 5.0;
    if h > required {
        return Err(Error::UnderResolved {
            spacing: h,
            required,
            what: "comb spacing must be <= min(width)/5".into(),
        });
    }
    Ok(())
}

fn make_uncorrelated_pure(source: &SourceParams, t_box: f64) -> Result<PureState> {
    check_resolution(source, t_box)?;
    let h = 2.0 * PI / t_box;
    // sum_kq |c|^2 factorizes into two lattice Lorentzian sums (comb origin 0).
    let sa = comb_lorentzian_sum(source.omega_alpha, source.width_alpha, h);
    let sb = comb_lorentzian_sum(source.omega_beta, source.width_beta, h);
    Ok(PureState {
        family: PureFamily::Uncorrelated,
        source: *source,
        t_box,
        norm_const: 1.0 / (sa * sb).sqrt(),
    })
}

fn make_cascade_pure(source: &SourceParams, t_box: f64) -> Result<PureState> {
    check_resolution(source, t_box)?;
    let h = 2.0 * PI / t_box;
    // For fixed q on the comb, the k sum runs over the lattice k + q, whose
    // offset from omega_alpha + omega_beta does not depend on q.
    let sa = comb_lorentzian_sum(source.omega_alpha + source.omega_beta, source.width_alpha, h);
    let sb = comb_lorentzian_sum(source.omega_beta, source.width_beta, h);
    Ok(PureState {
        family: PureFamily::Cascade,
        source: *source,
        t_box,
        norm_const: 1.0 / (sa * sb).sqrt(),
    })
}

fn make_spdc_pure(source: &SourceParams, t_box: f64) -> Result<PureState> {
    check_resolution(source, t_box)?;
    Ok(PureState {
        family: PureFamily::Spdc,
        source: *source,
        t_box,
        norm_const: spdc_norm(source.width_alpha, source.width_beta, t_box),
    })
}

/// Normalization constant of the two-term Gaussian amplitude:
/// `(T/2pi)^2 N^2 2 pi sa sb^2 / sqrt(sa^2 + 2 sb^2) = 1`.
pub fn spdc_norm(sa: f64, sb: f64, t_box: f64) -> f64 {
    let f = 2.0 * PI * sa * sb * sb / (sa * sa + 2.0 * sb * sb).sqrt();
    (2.0 * PI / t_box) / f.sqrt()
}

/// `g_alpha g_beta = 2 sqrt(gamma_alpha gamma_beta) / T`, the continuum value.
pub fn lorentzian_prefactor(source: &SourceParams, t_box: f64) -> f64 {
    2.0 * (source.width_alpha * source.width_beta).sqrt() / t_box
}

/// `zeta = 1 + sb^2 / (sa^2 + sb^2)`.
pub fn spdc_zeta(sa: f64, sb: f64) -> f64 {
    1.0 + sb * sb / (sa * sa + sb * sb)
}

/// Two uncorrelated Lorentzian wavepackets.
pub fn make_uncorrelated(source: &SourceParams, t_box: f64) -> Result<BiphotonState> {
    Ok(BiphotonState::Pure(make_uncorrelated_pure(source, t_box)?))
}

/// Atomic cascade biphoton: frequency anti-correlated, time ordered.
pub fn make_cascade(source: &SourceParams, t_box: f64) -> Result<BiphotonState> {
    Ok(BiphotonState::Pure(make_cascade_pure(source, t_box)?))
}

/// Type-II down-conversion biphoton in the Gaussian approximation.
pub fn make_spdc(source: &SourceParams, t_box: f64) -> Result<BiphotonState> {
    Ok(BiphotonState::Pure(make_spdc_pure(source, t_box)?))
}

/// Pure state from explicit node amplitudes on a comb. Entries are
/// rescaled so that their squared norms sum to one.
pub fn make_tabulated(
    origin: f64,
    t_box: f64,
    entries: impl IntoIterator<Item = ((i64, i64), C64)>,
) -> Result<BiphotonState> {
    let entries: BTreeMap<(i64, i64), C64> = entries.into_iter().collect();
    let norm: f64 = entries.values().map(|c| c.norm_sqr()).sum();
    if !(norm > 0.0 && norm.is_finite()) {
        return Err(Error::InvalidInput("tabulated state has no weight".into()));
    }
    let spacing = 2.0 * PI / t_box;
    Ok(BiphotonState::Pure(PureState {
        family: PureFamily::Tabulated(Arc::new(Tabulated {
            origin,
            spacing,
            entries,
        })),
        source: SourceParams::new(origin, origin, spacing, spacing),
        t_box,
        norm_const: 1.0 / norm.sqrt(),
    }))
}

fn require_pure<'a>(state: &'a BiphotonState, op: &'static str) -> Result<&'a PureState> {
    state.as_pure().ok_or_else(|| Error::WrongKind {
        op,
        kind: state.kind().name().into(),
    })
}

/// Keep only the diagonal of the density matrix: `p = |c|^2`.
pub fn disentangle(state: &BiphotonState) -> Result<BiphotonState> {
    Ok(BiphotonState::DiagonalMixed(require_pure(state, "disentangle")?.clone()))
}

/// Replace the state by the product of its single-photon marginals.
pub fn factorize(state: &BiphotonState) -> Result<BiphotonState> {
    Ok(BiphotonState::FactorizedMixed(require_pure(state, "factorize")?.clone()))
}

/// Two-mode coherent superposition built on a pure state.
pub fn coherent_lift(state: &BiphotonState, alpha: C64) -> Result<BiphotonState> {
    Ok(BiphotonState::CoherentLift {
        base: require_pure(state, "coherent_lift")?.clone(),
        alpha,
    })
}

/// Amplitudes on a product lattice: a fine axis `fine0 + j h` (`m` points)
/// against a coarse axis `coarse0 + i r h` (`n` points).
///
/// SPDC rows are built from shared one-dimensional tables; other families
/// evaluate point by point.
pub struct RowSampler<'a> {
    state: &'a PureState,
    fine: Vec<f64>,
    coarse: Vec<f64>,
    r: usize,
    spdc: Option<SpdcTables>,
}

struct SpdcTables {
    ga_fine: Vec<f64>,
    gb_fine: Vec<f64>,
    ga_coarse: Vec<f64>,
    gb_coarse: Vec<f64>,
    pump: Vec<C64>,
    twist: C64,
}

impl<'a> RowSampler<'a> {
    pub fn new(state: &'a PureState, fine0: f64, h: f64, m: usize, coarse0: f64, r: usize, n: usize) -> Self {
        let fine: Vec<f64> = (0..m).map(|j| fine0 + j as f64 * h).collect();
        let coarse: Vec<f64> = (0..n).map(|i| coarse0 + (i * r) as f64 * h).collect();
        let spdc = match state.family {
            PureFamily::Spdc => {
                let s = &state.source;
                let (sa, sb) = (s.width_alpha, s.width_beta);
                let g = |w: f64, c: f64| (-(w - c).powi(2) / (2.0 * sb * sb)).exp();
                let sums = m + r * n.saturating_sub(1);
                let pump = (0..sums)
                    .map(|k| {
                        let x = fine0 + coarse0 + k as f64 * h - s.omega_alpha - s.omega_beta;
                        C64::from_polar((-x * x / (2.0 * sa * sa)).exp(), x * s.t0)
                    })
                    .collect();
                Some(SpdcTables {
                    ga_fine: fine.iter().map(|&w| g(w, s.omega_alpha)).collect(),
                    gb_fine: fine.iter().map(|&w| g(w, s.omega_beta)).collect(),
                    ga_coarse: coarse.iter().map(|&w| g(w, s.omega_alpha)).collect(),
                    gb_coarse: coarse.iter().map(|&w| g(w, s.omega_beta)).collect(),
                    pump,
                    twist: C64::from_polar(1.0, s.phase),
                })
            }
            _ => None,
        };
        RowSampler {
            state,
            fine,
            coarse,
            r,
            spdc,
        }
    }

    pub fn fine_len(&self) -> usize {
        self.fine.len()
    }

    /// Row `i` of the coarse axis. With `fine_first` the fine axis is the
    /// first photon: `out[j] = c(fine_j, coarse_i)`; otherwise
    /// `out[j] = c(coarse_i, fine_j)`.
    pub fn fill(&self, i: usize, fine_first: bool, out: &mut [C64]) {
        let o = self.coarse[i];
        match &self.spdc {
            Some(t) => {
                let nc = self.state.norm_const;
                for (j, slot) in out.iter_mut().enumerate().take(self.fine.len()) {
                    let p = t.pump[j + self.r * i];
                    // First photon near alpha in the leading term.
                    let (lead, swap) = if fine_first {
                        (t.ga_fine[j] * t.gb_coarse[i], t.gb_fine[j] * t.ga_coarse[i])
                    } else {
                        (t.ga_coarse[i] * t.gb_fine[j], t.gb_coarse[i] * t.ga_fine[j])
                    };
                    *slot = nc * p * (C64::new(lead, 0.0) + t.twist * swap);
                }
            }
            None => {
                for (slot, &w) in out.iter_mut().zip(&self.fine) {
                    *slot = if fine_first {
                        self.state.amplitude(w, o)
                    } else {
                        self.state.amplitude(o, w)
                    };
                }
            }
        }
    }
}

/// Single-photon marginals sampled on a grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Marginals {
    /// `sum_q |c(omega_k, omega_q)|^2` at every grid point.
    pub first: Vec<f64>,
    /// `sum_k |c(omega_k, omega_q)|^2` at every grid point.
    pub second: Vec<f64>,
}

/// Marginals as row and column sums of `|c|^2` over the grid.
pub fn marginals(state: &PureState, grid: &FrequencyGrid) -> Marginals {
    let w = grid.omegas();
    let first: Vec<f64> = w.par_iter().map(|&k| marginal_first(state, &w, k)).collect();
    let second: Vec<f64> = w.par_iter().map(|&q| marginal_second(state, &w, q)).collect();
    Marginals { first, second }
}

/// `sum_q |c(k, q)|^2` over the grid frequencies `w`.
pub fn marginal_first(state: &PureState, w: &[f64], k: f64) -> f64 {
    let v: Vec<f64> = w.iter().map(|&q| state.weight(k, q)).collect();
    pairwise_sum(&v)
}

/// `sum_k |c(k, q)|^2` over the grid frequencies `w`.
pub fn marginal_second(state: &PureState, w: &[f64], q: f64) -> f64 {
    let v: Vec<f64> = w.iter().map(|&k| state.weight(k, q)).collect();
    pairwise_sum(&v)
}

/// Grid sum `sum_kq |c|^2` (equals the continuum integral with measure
/// (T/2pi)^2 because spacing * T / 2pi = 1).
pub fn grid_norm(state: &PureState, grid: &FrequencyGrid) -> f64 {
    let w = grid.omegas();
    let rows: Vec<f64> = w.par_iter().map(|&k| marginal_first(state, &w, k)).collect();
    pairwise_sum(&rows)
}

/// Analytic marginals of the cascade (Lorentzians of widths ga+gb and gb),
/// normalized over the infinite comb.
pub fn cascade_marginals_analytic(source: &SourceParams, t_box: f64, wk: f64, wq: f64) -> (f64, f64) {
    let g = source.width_alpha + source.width_beta;
    let gb = source.width_beta;
    let scale = 2.0 / t_box;
    let x = wk - source.omega_alpha;
    let y = wq - source.omega_beta;
    (scale * g / (x * x + g * g), scale * gb / (y * y + gb * gb))
}

/// Analytic SPDC marginal (either photon) from the factorized form.
pub fn spdc_marginal_analytic(source: &SourceParams, t_box: f64, w: f64) -> f64 {
    let (sa, sb) = (source.width_alpha, source.width_beta);
    let z = spdc_zeta(sa, sb);
    let pref = (PI * z).sqrt() / (t_box * sb);
    pref * ((-z * (w - source.omega_alpha).powi(2) / (sb * sb)).exp() + (-z * (w - source.omega_beta).powi(2) / (sb * sb)).exp())
}
