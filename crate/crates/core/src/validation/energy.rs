//! Energy delivered to the atoms' location, in photon quanta.
//!
//! For a pure state the flow of photon 1 up to time t is
//! `(1/(R^2 T)) int_0^t sum_q |U_q(s)|^2 ds` with
//! `U_q(s) = sum_k c(w_k, w_q) e^{-i w_k s}` over a k comb `R` times finer
//! than the box comb, so the synthesized pulse repeats every `R T` instead
//! of every `T`. Photon 2 is the same with the roles swapped. Mixed states
//! are stationary and deliver `2 t / T` quanta.

use crate::error::{Error, Result};
use crate::model::FrequencyGrid;
use crate::numeric::pairwise_sum;
use crate::states::{grid_norm, BiphotonState, PureState, RowSampler};
use num_complex::Complex64 as C64;
use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::Serialize;

/// Oversampling of the inner Fourier sum.
pub const OVERSAMPLING: usize = 4;

/// Sampled intensity over one extended period `R T`.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowProfile {
    /// Sample step in time.
    pub dt: f64,
    /// Total intensity of both photons at `m * dt`, in quanta per unit time.
    pub intensity: Vec<f64>,
    pub period: f64,
}

impl FlowProfile {
    /// Quanta delivered on `[0, t]`; `t = inf` (or any `t >= R T`) gives the
    /// full-period total.
    pub fn at(&self, t: f64) -> f64 {
        let n = self.intensity.len();
        if t <= 0.0 {
            return 0.0;
        }
        if t >= self.period {
            return pairwise_sum(&self.intensity) * self.dt;
        }
        let x = t / self.dt;
        let m = x.floor() as usize;
        // Trapezoid on whole steps, linear partial last step.
        let whole: Vec<f64> = (0..m).map(|i| 0.5 * (self.intensity[i] + self.intensity[(i + 1) % n])).collect();
        let mut acc = pairwise_sum(&whole) * self.dt;
        let frac = x - m as f64;
        if frac > 0.0 {
            let a = self.intensity[m % n];
            let b = self.intensity[(m + 1) % n];
            acc += self.dt * frac * (a + 0.5 * frac * (b - a));
        }
        acc
    }
}

fn fft_len(min: usize) -> usize {
    let mut n = min.max(1);
    loop {
        let mut m = n;
        for p in [2, 3, 5] {
            while m % p == 0 {
                m /= p;
            }
        }
        if m == 1 {
            return n;
        }
        n += 1;
    }
}

/// Intensity of one photon; `second = true` tracks the q photon.
fn photon_intensity(p: &PureState, grid: &FrequencyGrid, second: bool) -> (f64, Vec<f64>) {
    let r = OVERSAMPLING;
    let coarse = grid.omegas();
    let h = grid.spacing / r as f64;
    let w0 = coarse[0];
    let m = r * (coarse.len() - 1) + 1;
    let len = fft_len(m);
    let fft = FftPlanner::new().plan_fft_forward(len);
    // The fine comb carries R times the coarse weight.
    let scale = 1.0 / ((r * r) as f64 * grid.period());
    let sampler = RowSampler::new(p, w0, h, m, w0, r, coarse.len());
    const BLOCK: usize = 64;
    let nblocks = coarse.len().div_ceil(BLOCK);
    let partial: Vec<Vec<f64>> = (0..nblocks)
        .into_par_iter()
        .map(|b| {
            let mut acc = vec![0.0; len];
            let mut buf = vec![C64::new(0.0, 0.0); len];
            for i in b * BLOCK..((b + 1) * BLOCK).min(coarse.len()) {
                sampler.fill(i, !second, &mut buf[..m]);
                buf[m..].fill(C64::new(0.0, 0.0));
                fft.process(&mut buf);
                for (a, z) in acc.iter_mut().zip(&buf) {
                    *a += z.norm_sqr();
                }
            }
            acc
        })
        .collect();
    let intensity: Vec<f64> = (0..len)
        .map(|i| {
            let col: Vec<f64> = partial.iter().map(|v| v[i]).collect();
            pairwise_sum(&col) * scale
        })
        .collect();
    (r as f64 * grid.period() / len as f64, intensity)
}

/// The pure-state flow profile on a single contiguous window.
pub fn pure_flow_profile(p: &PureState, grid: &FrequencyGrid) -> Result<FlowProfile> {
    if !grid.spans_contiguously() {
        return Err(Error::InvalidInput(
            "energy flow needs a single contiguous frequency window".into(),
        ));
    }
    if (p.t_box - grid.period()).abs() > 1e-12 * grid.period() {
        return Err(Error::InvalidInput("state and grid periods differ".into()));
    }
    let (dt, a) = photon_intensity(p, grid, false);
    let (_, b) = photon_intensity(p, grid, true);
    Ok(FlowProfile {
        dt,
        intensity: a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        period: OVERSAMPLING as f64 * grid.period(),
    })
}

/// Quanta delivered on `[0, t]`.
pub fn energy_flow(state: &BiphotonState, grid: &FrequencyGrid, t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::InvalidInput(format!("t must be >= 0, got {t}")));
    }
    match state {
        BiphotonState::DiagonalMixed(_) | BiphotonState::FactorizedMixed(_) => {
            if t.is_infinite() {
                return Err(Error::InvalidInput("a stationary state has unbounded flow".into()));
            }
            Ok(2.0 * t / state.t_box())
        }
        BiphotonState::Pure(p) => Ok(pure_flow_profile(p, grid)?.at(t)),
        BiphotonState::CoherentLift { base, alpha } => Ok(alpha.norm_sqr() * pure_flow_profile(base, grid)?.at(t)),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridProvenance {
    pub omega_min: f64,
    pub omega_max: f64,
    pub n_points: usize,
    pub spacing: f64,
    pub period: f64,
    pub oversampling: usize,
}

impl GridProvenance {
    pub fn of(grid: &FrequencyGrid) -> Self {
        GridProvenance {
            omega_min: grid.omega_min,
            omega_max: grid.omega_max,
            n_points: grid.n_points,
            spacing: grid.spacing,
            period: grid.period(),
            oversampling: OVERSAMPLING,
        }
    }
}

/// Whether comparisons at t = T see equal energy from the pulse and from
/// its stationary counterparts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyCertificate {
    pub state: String,
    pub t: f64,
    pub pure_flow: f64,
    pub rho1_flow: f64,
    pub rho2_flow: f64,
    /// Share of the state's weight carried by the grid.
    pub grid_mass: f64,
    /// `grid_mass * rho1_flow`: what the stationary states deliver from the
    /// same truncated spectrum. The pulse is compared with this.
    pub reference_flow: f64,
    pub deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub message: String,
    pub grid: GridProvenance,
}

pub const CERTIFICATE_TOLERANCE: f64 = 0.02;

pub fn comparison_certificate(state: &BiphotonState, grid: &FrequencyGrid) -> Result<EnergyCertificate> {
    let p = state.as_pure().ok_or_else(|| Error::WrongKind {
        op: "comparison_certificate",
        kind: state.kind().name().into(),
    })?;
    let t = grid.period();
    let pure_flow = pure_flow_profile(p, grid)?.at(t);
    let rho1_flow = energy_flow(&BiphotonState::DiagonalMixed(p.clone()), grid, t)?;
    let rho2_flow = energy_flow(&BiphotonState::FactorizedMixed(p.clone()), grid, t)?;
    let grid_mass = grid_norm(p, grid);
    let reference_flow = grid_mass * rho1_flow;
    let deviation = (pure_flow - reference_flow).abs() / reference_flow;
    let passed = deviation <= CERTIFICATE_TOLERANCE;
    let message = if passed {
        "pulse and stationary states deliver the same energy on [0, T]".to_string()
    } else {
        format!(
            "pulse not contained in [0, T]: the pulse delivers {pure_flow:.4} quanta against {reference_flow:.4}"
        )
    };
    Ok(EnergyCertificate {
        state: state.kind().name().into(),
        t,
        pure_flow,
        rho1_flow,
        rho2_flow,
        grid_mass,
        reference_flow,
        deviation,
        tolerance: CERTIFICATE_TOLERANCE,
        passed,
        message,
        grid: GridProvenance::of(grid),
    })
}
