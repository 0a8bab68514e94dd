//! The discrete mode-sum oracle.
//!
//! The probability is the exact second-order expression on the box comb:
//! `P = |f1 f2|^2 |sum_mn c_mn (K1m K2n + K2m K1n)|^2` for pure states and
//! `sum_mn p_mn |K1m K2n + K2m K1n|^2` for diagonal and factorized mixtures.
//! When t/T is an integer and the atoms are comb nodes, the responses are
//! exact Kronecker deltas; terms with a vanishing response are skipped,
//! which changes nothing but the cost.

use super::kernel::{coupling, node_response};
use super::dominance_flags;
use crate::error::{Error, Result};
use crate::model::{
    regime_flags_with, AtomPair, Detunings, FlagSet, FrequencyGrid, Method, ProbabilityResult, RegimeFlag,
    Thresholds,
};
use crate::numeric::{pairwise_sum, par_sum};
use crate::states::{marginal_first, marginal_second, BiphotonState, PureFamily, PureState};
use num_complex::Complex64 as C64;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureOptions {
    pub thresholds: Thresholds,
    /// Refuse double sums with more terms than this.
    pub max_terms: f64,
    /// Compute the comparison against a comb of different resolution.
    pub error_estimate: bool,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        QuadratureOptions {
            thresholds: Thresholds::default(),
            max_terms: 2e8,
            error_estimate: true,
        }
    }
}

/// Whether `t / T` is a positive integer, and the snapped ratio.
pub fn commensurate(t: f64, t_box: f64) -> (bool, f64) {
    let r = t / t_box;
    let n = r.round();
    if n >= 1.0 && (r - n).abs() < 1e-9 {
        (true, n)
    } else {
        (false, r)
    }
}

/// Resolution rule for the kernel sum at time `t`.
pub fn check_time_resolution(grid: &FrequencyGrid, t: f64) -> Result<()> {
    let (comm, _) = commensurate(t, grid.period());
    if t == 0.0 || (comm && grid.atoms_on_comb()) {
        return Ok(());
    }
    let required = 1.0 / (5.0 * t);
    if grid.spacing > required {
        return Err(Error::UnderResolved {
            spacing: grid.spacing,
            required,
            what: format!("sinc scale at t = {t}: need t/T integer with atoms on nodes, or spacing <= 1/(5t)"),
        });
    }
    Ok(())
}

/// Exact comb quadrature of the co-excitation probability at time `t`.
pub fn prob_quadrature(state: &BiphotonState, atoms: &AtomPair, grid: &FrequencyGrid, t: f64) -> Result<ProbabilityResult> {
    prob_quadrature_with(state, atoms, grid, t, &QuadratureOptions::default())
}

pub fn prob_quadrature_with(
    state: &BiphotonState,
    atoms: &AtomPair,
    grid: &FrequencyGrid,
    t: f64,
    opts: &QuadratureOptions,
) -> Result<ProbabilityResult> {
    let value = quadrature_value(state, atoms, grid, t, opts)?;
    let (comm, r) = commensurate(t, grid.period());

    let mut warnings = Vec::new();
    let error_estimate = if opts.error_estimate {
        match comparison_value(state, atoms, grid, r, opts) {
            Ok(alt) => Some(if value == 0.0 && alt == 0.0 {
                0.0
            } else {
                (value - alt).abs() / value.abs().max(alt.abs())
            }),
            Err(e) => {
                warnings.push(format!("error estimate unavailable: {e}"));
                Some(0.0)
            }
        }
    } else {
        warnings.push("error estimate disabled".into());
        Some(0.0)
    };

    let source = state.source();
    let d = Detunings::of(atoms, source);
    let mut flags = match state.parent().family {
        PureFamily::Tabulated(_) => FlagSet::new(),
        _ => regime_flags_with(source, atoms, &d, t, &opts.thresholds),
    };
    flags.extend(state.flags(&opts.thresholds));
    if grid.atoms_on_comb() {
        flags.insert(RegimeFlag::AtomsOnComb);
    }
    if comm {
        flags.insert(RegimeFlag::CommensurateTime);
    }
    flags.extend(dominance_flags(state.parent(), atoms, &opts.thresholds));
    Ok(ProbabilityResult {
        value,
        method: Method::Quadrature,
        time: t,
        regime_flags: flags,
        error_estimate,
        warnings,
    })
}

/// Same t/T on a comb of half the resolution, or double if the coarse comb
/// loses atom 2 or under-resolves a width.
fn comparison_value(
    state: &BiphotonState,
    atoms: &AtomPair,
    grid: &FrequencyGrid,
    r: f64,
    opts: &QuadratureOptions,
) -> Result<f64> {
    let min_width = state.source().min_width();
    let coarse_ok = grid.omega2_node % 2 == 0 && 2.0 * grid.spacing <= min_width / 5.0;
    let t_alt = if coarse_ok { grid.period() / 2.0 } else { grid.period() * 2.0 };
    let alt_grid = grid.with_period(t_alt)?;
    let alt_state = state.with_period(t_alt)?;
    quadrature_value(&alt_state, atoms, &alt_grid, r * t_alt, opts)
}

fn quadrature_value(
    state: &BiphotonState,
    atoms: &AtomPair,
    grid: &FrequencyGrid,
    t: f64,
    opts: &QuadratureOptions,
) -> Result<f64> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::InvalidInput(format!("t must be finite and >= 0, got {t}")));
    }
    let t_box = grid.period();
    if (state.t_box() - t_box).abs() > 1e-12 * t_box {
        return Err(Error::InvalidInput(format!(
            "state period {} differs from grid period {}",
            state.t_box(),
            t_box
        )));
    }
    if !matches!(state.parent().family, PureFamily::Tabulated(_)) {
        let required = state.source().min_width() / 5.0;
        if grid.spacing > required {
            return Err(Error::UnderResolved {
                spacing: grid.spacing,
                required,
                what: "lineshape".into(),
            });
        }
    }
    check_time_resolution(grid, t)?;
    if t == 0.0 {
        return Ok(0.0);
    }

    let (_, r) = commensurate(t, t_box);
    let nodes = grid.nodes();
    let omegas = grid.omegas();
    let h = grid.spacing;
    let k1: Vec<C64> = nodes.iter().map(|&j| node_response(grid.atom_offset(1, j), h, r, t)).collect();
    let k2: Vec<C64> = nodes.iter().map(|&j| node_response(grid.atom_offset(2, j), h, r, t)).collect();
    let zero = C64::new(0.0, 0.0);
    let support: Vec<usize> = (0..nodes.len()).filter(|&i| k1[i] != zero || k2[i] != zero).collect();
    let terms = (support.len() as f64).powi(2);
    if terms > opts.max_terms {
        return Err(Error::Budget {
            needed: terms as usize,
            limit: opts.max_terms as usize,
        });
    }
    let f2 = coupling(atoms, t_box).powi(2);
    let s = &support;
    let pair = |m: usize, n: usize| k1[m] * k2[n] + k2[m] * k1[n];

    let value = match state {
        BiphotonState::Pure(p) => {
            let amp: C64 = par_sum(s.len(), |a| {
                let m = s[a];
                let row: Vec<C64> = s.iter().map(|&n| p.amplitude(omegas[m], omegas[n]) * pair(m, n)).collect();
                pairwise_sum(&row)
            });
            f2 * amp.norm_sqr()
        }
        BiphotonState::DiagonalMixed(p) => {
            f2 * par_sum(s.len(), |a| {
                let m = s[a];
                let row: Vec<f64> = s.iter().map(|&n| p.weight(omegas[m], omegas[n]) * pair(m, n).norm_sqr()).collect();
                pairwise_sum(&row)
            })
        }
        BiphotonState::FactorizedMixed(p) => {
            let (pa, pb) = marginals_on(p, &omegas, s);
            f2 * par_sum(s.len(), |a| {
                let m = s[a];
                let row: Vec<f64> = (0..s.len()).map(|b| pa[a] * pb[b] * pair(m, s[b]).norm_sqr()).collect();
                pairwise_sum(&row)
            })
        }
        BiphotonState::CoherentLift { base, alpha } => {
            let b = quadrature_value(&BiphotonState::Pure(base.clone()), atoms, grid, t, opts)?;
            alpha.norm_sqr().powi(2) * b
        }
    };
    Ok(value)
}

/// Grid marginals at the support positions only.
fn marginals_on(p: &PureState, omegas: &[f64], support: &[usize]) -> (Vec<f64>, Vec<f64>) {
    use rayon::prelude::*;
    let pa = support.par_iter().map(|&m| marginal_first(p, omegas, omegas[m])).collect();
    let pb = support.par_iter().map(|&n| marginal_second(p, omegas, omegas[n])).collect();
    (pa, pb)
}
