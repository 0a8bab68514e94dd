//! Cross second-order correlation maps in time and frequency.
//!
//! Time maps hold `|psi(t, tau)|^2 / T^2` with
//! `psi = sum_kq c_kq exp(-i w_k tau - i w_q t)`, so a pure state's map
//! integrates to 1 over the period box; `tau` is the first photon's time.
//! Frequency maps hold `T^2 |c(w, w')|^2` (the comb weight is `value / T^2`).

use crate::error::{Error, Result};
use crate::model::{make_grid, AtomPair, FrequencyGrid, GridOptions, SourceParams};
use crate::numeric::{fmt_sci, fwhm, pairwise_sum};
use crate::states::{factorize, grid_norm, make_cascade, make_spdc, marginal_first, marginal_second, BiphotonState, PureFamily, PureState};
use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    Time,
    Frequency,
}

/// A sampled correlation map; `values[i][j]` sits at `(axis1[i], axis2[j])`.
///
/// Time maps use `axis1 = t`, `axis2 = tau`; frequency maps use
/// `axis1 = w` (first photon), `axis2 = w'`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationMap {
    pub kind: MapKind,
    pub axis1: Vec<f64>,
    pub axis2: Vec<f64>,
    pub values: Vec<Vec<f64>>,
    pub normalization_tag: String,
    pub state_tag: String,
}

pub const TIME_TAG: &str = "|psi|^2/T^2; integrates to 1 over the period box";
pub const FREQ_TAG: &str = "T^2*|c|^2; comb weight is value/T^2";

impl CorrelationMap {
    /// Row-major CSV with header `axis1,axis2,value`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("axis1,axis2,value\n");
        for (i, a) in self.axis1.iter().enumerate() {
            for (j, b) in self.axis2.iter().enumerate() {
                let _ = writeln!(s, "{},{},{}", fmt_sci(*a), fmt_sci(*b), fmt_sci(self.values[i][j]));
            }
        }
        s
    }

    pub fn max(&self) -> f64 {
        self.values.iter().flatten().copied().fold(0.0, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().flatten().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Evenly spaced samples including both ends.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// Time map by direct double Fourier sum over the grid.
///
/// Mixed states carry no temporal correlation: their map is the constant
/// `(sum p) / T^2`. Coherent lifts are `|alpha|^4` times the base map.
pub fn g2_time_map(state: &BiphotonState, grid: &FrequencyGrid, ts: &[f64], taus: &[f64]) -> Result<CorrelationMap> {
    check_period(state, grid)?;
    let t_box = grid.period();
    let values = match state {
        BiphotonState::Pure(p) => fourier_map(p, grid, ts, taus),
        BiphotonState::CoherentLift { base, alpha } => {
            let m = fourier_map(base, grid, ts, taus);
            let f = alpha.norm_sqr().powi(2);
            m.into_iter().map(|r| r.into_iter().map(|v| v * f).collect()).collect()
        }
        BiphotonState::DiagonalMixed(p) => constant(grid_norm(p, grid) / (t_box * t_box), ts.len(), taus.len()),
        BiphotonState::FactorizedMixed(p) => constant(grid_norm(p, grid).powi(2) / (t_box * t_box), ts.len(), taus.len()),
    };
    Ok(CorrelationMap {
        kind: MapKind::Time,
        axis1: ts.to_vec(),
        axis2: taus.to_vec(),
        values,
        normalization_tag: TIME_TAG.into(),
        state_tag: state.kind().name().into(),
    })
}

/// Single time-map value.
pub fn g2_time(state: &BiphotonState, grid: &FrequencyGrid, t: f64, tau: f64) -> Result<f64> {
    Ok(g2_time_map(state, grid, &[t], &[tau])?.values[0][0])
}

fn constant(v: f64, n1: usize, n2: usize) -> Vec<Vec<f64>> {
    vec![vec![v; n2]; n1]
}

fn check_period(state: &BiphotonState, grid: &FrequencyGrid) -> Result<()> {
    let t_box = grid.period();
    if (state.t_box() - t_box).abs() > 1e-12 * t_box {
        return Err(Error::InvalidInput(format!(
            "state period {} differs from grid period {}",
            state.t_box(),
            t_box
        )));
    }
    Ok(())
}

fn fourier_map(p: &PureState, grid: &FrequencyGrid, ts: &[f64], taus: &[f64]) -> Vec<Vec<f64>> {
    let w = grid.omegas();
    let n = w.len();
    let phase = |x: f64| C64::from_polar(1.0, -x);
    let eq: Vec<Vec<C64>> = ts.iter().map(|&t| w.iter().map(|&q| phase(q * t)).collect()).collect();
    // u[k][i] = sum_q c(k, q) exp(-i w_q t_i)
    let u: Vec<Vec<C64>> = w
        .par_iter()
        .map(|&k| {
            let row: Vec<C64> = w.iter().map(|&q| p.amplitude(k, q)).collect();
            eq.iter()
                .map(|e| {
                    let mut acc = C64::new(0.0, 0.0);
                    for q in 0..n {
                        acc += row[q] * e[q];
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let ek: Vec<Vec<C64>> = taus.iter().map(|&tau| w.iter().map(|&k| phase(k * tau)).collect()).collect();
    let inv = 1.0 / (grid.period() * grid.period());
    (0..ts.len())
        .into_par_iter()
        .map(|i| {
            ek.iter()
                .map(|e| {
                    let mut acc = C64::new(0.0, 0.0);
                    for k in 0..n {
                        acc += e[k] * u[k][i];
                    }
                    acc.norm_sqr() * inv
                })
                .collect()
        })
        .collect()
}

/// Closed-form time map value for the Lorentzian and SPDC pure families,
/// in the same units as [`g2_time_map`].
pub fn g2_time_closed(state: &BiphotonState, t: f64, tau: f64) -> Result<f64> {
    let p = state.as_pure().ok_or_else(|| Error::WrongKind {
        op: "g2_time_closed",
        kind: state.kind().name().into(),
    })?;
    let s = &p.source;
    let (a, b) = (s.width_alpha, s.width_beta);
    let step = |x: f64| if x >= 0.0 { 1.0 } else { 0.0 };
    Ok(match p.family {
        PureFamily::Cascade => 4.0 * a * b * step(tau) * step(t - tau) * (-2.0 * a * tau - 2.0 * b * (t - tau)).exp(),
        PureFamily::Uncorrelated => 4.0 * a * b * step(tau) * step(t) * (-2.0 * a * tau - 2.0 * b * t).exp(),
        PureFamily::Spdc => {
            let r = (a * a + 2.0 * b * b).sqrt();
            let d = t - tau;
            let m = 0.5 * (t + tau);
            let fringe = 1.0 + (s.phase + (s.omega_beta - s.omega_alpha) * d).cos();
            let env = (-b * b * d * d / 2.0 - 2.0 * a * a * b * b / (r * r) * (s.t0 - m).powi(2)).exp();
            2.0 * a * b * b / (2.0 * PI * r) * fringe * env
        }
        PureFamily::Tabulated(_) => {
            return Err(Error::WrongKind {
                op: "g2_time_closed",
                kind: state.kind().name().into(),
            })
        }
    })
}

/// Frequency map: pure and diagonal states give `T^2 |c|^2`; factorized
/// states give `T^2 pa(w) pb(w')` with marginals summed over the grid.
pub fn g2_freq_map(state: &BiphotonState, grid: &FrequencyGrid, w1: &[f64], w2: &[f64]) -> Result<CorrelationMap> {
    check_period(state, grid)?;
    let t2 = grid.period().powi(2);
    let p = state.parent();
    let values: Vec<Vec<f64>> = match state {
        BiphotonState::Pure(_) | BiphotonState::DiagonalMixed(_) => w1
            .par_iter()
            .map(|&k| w2.iter().map(|&q| t2 * p.weight(k, q)).collect())
            .collect(),
        BiphotonState::CoherentLift { alpha, .. } => {
            let f = alpha.norm_sqr().powi(2);
            w1.par_iter().map(|&k| w2.iter().map(|&q| f * t2 * p.weight(k, q)).collect()).collect()
        }
        BiphotonState::FactorizedMixed(_) => {
            let w = grid.omegas();
            let pa: Vec<f64> = w1.par_iter().map(|&k| marginal_first(p, &w, k)).collect();
            let pb: Vec<f64> = w2.par_iter().map(|&q| marginal_second(p, &w, q)).collect();
            pa.iter().map(|&x| pb.iter().map(|&y| t2 * x * y).collect()).collect()
        }
    };
    Ok(CorrelationMap {
        kind: MapKind::Frequency,
        axis1: w1.to_vec(),
        axis2: w2.to_vec(),
        values,
        normalization_tag: FREQ_TAG.into(),
        state_tag: state.kind().name().into(),
    })
}

pub fn g2_freq(state: &BiphotonState, grid: &FrequencyGrid, omega: f64, omega_prime: f64) -> Result<f64> {
    Ok(g2_freq_map(state, grid, &[omega], &[omega_prime])?.values[0][0])
}

/// Ridge widths of a map on a square lattice.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrelationWidths {
    /// FWHM along the difference coordinate `a1 - a2`: the width of a
    /// diagonal ridge measured across it.
    pub diagonal_width: f64,
    /// FWHM along the sum coordinate `a1 + a2`: the width of an
    /// anti-diagonal ridge measured across it.
    pub antidiagonal_width: f64,
}

fn uniform_step(x: &[f64]) -> Option<f64> {
    if x.len() < 3 {
        return None;
    }
    let h = (x[x.len() - 1] - x[0]) / (x.len() - 1) as f64;
    let ok = x.windows(2).all(|p| ((p[1] - p[0]) - h).abs() <= 1e-9 * h.abs());
    (ok && h > 0.0).then_some(h)
}

/// Project the map onto the sum and difference lattice lines and measure
/// the FWHM of each profile. A profile with no half-maximum crossing on
/// both sides reports an infinite width.
pub fn correlation_widths(map: &CorrelationMap) -> Result<CorrelationWidths> {
    let (n1, n2) = (map.axis1.len(), map.axis2.len());
    let (h1, h2) = match (uniform_step(&map.axis1), uniform_step(&map.axis2)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::InvalidInput("widths need uniform axes with at least 3 samples".into())),
    };
    if (h1 - h2).abs() > 1e-9 * h1 {
        return Err(Error::InvalidInput("widths need equal steps on both axes".into()));
    }
    let (mx, mn) = (map.max(), map.min());
    if !(mx > 0.0) || (mx - mn) <= 1e-9 * mx {
        return Err(Error::NoStructure("map is flat".into()));
    }
    let mut sum = vec![0.0; n1 + n2 - 1];
    let mut diff = vec![0.0; n1 + n2 - 1];
    for i in 0..n1 {
        for j in 0..n2 {
            let v = map.values[i][j];
            sum[i + j] += v;
            diff[i + n2 - 1 - j] += v;
        }
    }
    let xs: Vec<f64> = (0..sum.len()).map(|s| map.axis1[0] + map.axis2[0] + s as f64 * h1).collect();
    let xd: Vec<f64> = (0..diff.len())
        .map(|s| map.axis1[0] - map.axis2[n2 - 1] + s as f64 * h1)
        .collect();
    let width = |x: &[f64], y: &[f64]| fwhm(x, y).unwrap_or(f64::INFINITY);
    Ok(CorrelationWidths {
        diagonal_width: width(&xd, &diff),
        antidiagonal_width: width(&xs, &sum),
    })
}

/// Local maxima above `frac * max` (8-neighbourhood, interior and edges).
pub fn count_spots(map: &CorrelationMap, frac: f64) -> usize {
    let v = &map.values;
    let (n1, n2) = (map.axis1.len(), map.axis2.len());
    let thr = frac * map.max();
    let mut count = 0;
    for i in 0..n1 {
        for j in 0..n2 {
            let x = v[i][j];
            if x < thr || x <= 0.0 {
                continue;
            }
            let mut peak = true;
            for di in -1i64..=1 {
                for dj in -1i64..=1 {
                    if di == 0 && dj == 0 {
                        continue;
                    }
                    let (a, b) = (i as i64 + di, j as i64 + dj);
                    if a < 0 || b < 0 || a >= n1 as i64 || b >= n2 as i64 {
                        continue;
                    }
                    let y = v[a as usize][b as usize];
                    // ties broken toward the lower index so plateaus count once
                    if y > x || (y == x && (di, dj) < (0, 0)) {
                        peak = false;
                    }
                }
            }
            if peak {
                count += 1;
            }
        }
    }
    count
}

/// Sum of a map over its samples times the cell area.
pub fn map_integral(map: &CorrelationMap) -> f64 {
    let h1 = if map.axis1.len() > 1 { map.axis1[1] - map.axis1[0] } else { 1.0 };
    let h2 = if map.axis2.len() > 1 { map.axis2[1] - map.axis2[0] } else { 1.0 };
    let rows: Vec<f64> = map.values.iter().map(|r| pairwise_sum(r)).collect();
    pairwise_sum(&rows) * h1 * h2
}

/// A map request: sampled window and resolution.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MapRequest {
    pub kind: MapKind,
    pub range1: (f64, f64),
    pub range2: (f64, f64),
    pub resolution: (usize, usize),
}

/// Default evaluation budget: output cells, and Fourier terms for time maps.
pub const MAP_CELL_BUDGET: usize = 4_000_000;
pub const MAP_TERM_BUDGET: f64 = 2e9;

/// Dense map over the requested window, refused beyond the budget.
pub fn emit_figure_grid(state: &BiphotonState, grid: &FrequencyGrid, req: &MapRequest) -> Result<CorrelationMap> {
    let (n1, n2) = req.resolution;
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidInput("map resolution must be positive".into()));
    }
    let cells = n1.saturating_mul(n2);
    if cells > MAP_CELL_BUDGET {
        return Err(Error::Budget {
            needed: cells,
            limit: MAP_CELL_BUDGET,
        });
    }
    let a1 = linspace(req.range1.0, req.range1.1, n1);
    let a2 = linspace(req.range2.0, req.range2.1, n2);
    match req.kind {
        MapKind::Frequency => g2_freq_map(state, grid, &a1, &a2),
        MapKind::Time => {
            let n = grid.n_points as f64;
            let terms = n * n * n1 as f64 + n * cells as f64;
            if matches!(state, BiphotonState::Pure(_) | BiphotonState::CoherentLift { .. }) && terms > MAP_TERM_BUDGET {
                return Err(Error::Budget {
                    needed: terms as usize,
                    limit: MAP_TERM_BUDGET as usize,
                });
            }
            g2_time_map(state, grid, &a1, &a2)
        }
    }
}

/// A figure preset: state, atoms at the double-resonance point, grid, window.
#[derive(Debug, Clone)]
pub struct FigureSetup {
    pub name: &'static str,
    pub state: BiphotonState,
    pub atoms: AtomPair,
    pub grid: FrequencyGrid,
    pub request: MapRequest,
}

pub const FIGURE_PRESETS: [&str; 6] = ["fig1-cascade", "fig1-spdc", "fig2-a", "fig2-b", "fig2-c", "fig2-d"];

/// Quantization time of the figure presets.
pub const FIGURE_PERIOD: f64 = 2.0 * PI / 0.01;

pub fn figure_preset(name: &str) -> Result<FigureSetup> {
    let name = FIGURE_PRESETS
        .iter()
        .find(|&&p| p == name)
        .copied()
        .ok_or_else(|| Error::Config(format!("unknown figure preset '{name}' (known: {})", FIGURE_PRESETS.join(", "))))?;
    let t = FIGURE_PERIOD;
    let source = SourceParams::new(1.5, 3.5, 0.05, 0.5);
    let spdc_source = source.clone().with_t0(30.0);
    let atoms = AtomPair::unit(1.5, 3.5)?;
    let freq = MapRequest {
        kind: MapKind::Frequency,
        range1: (0.5, 4.5),
        range2: (0.5, 4.5),
        resolution: (201, 201),
    };
    let (src, state, coverage, request) = match name {
        "fig1-cascade" => (
            source.clone(),
            make_cascade(&source, t)?,
            12.0,
            MapRequest {
                kind: MapKind::Time,
                range1: (0.0, 40.0),
                range2: (0.0, 40.0),
                resolution: (121, 121),
            },
        ),
        "fig1-spdc" => (
            spdc_source.clone(),
            make_spdc(&spdc_source, t)?,
            12.0,
            MapRequest {
                kind: MapKind::Time,
                range1: (0.0, 60.0),
                range2: (0.0, 60.0),
                resolution: (121, 121),
            },
        ),
        "fig2-a" => (source.clone(), make_cascade(&source, t)?, 40.0, freq),
        "fig2-b" => (source.clone(), factorize(&make_cascade(&source, t)?)?, 40.0, freq),
        "fig2-c" => (spdc_source.clone(), make_spdc(&spdc_source, t)?, 40.0, freq),
        _ => (spdc_source.clone(), factorize(&make_spdc(&spdc_source, t)?)?, 40.0, freq),
    };
    let grid = make_grid(
        &src,
        &atoms,
        t,
        GridOptions {
            coverage,
            ..Default::default()
        },
    )?;
    Ok(FigureSetup {
        name,
        state,
        atoms,
        grid,
        request,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{disentangle, make_uncorrelated};

    const T: f64 = FIGURE_PERIOD;

    fn cascade() -> (BiphotonState, FrequencyGrid) {
        let s = SourceParams::new(1.5, 3.5, 0.05, 0.5);
        let a = AtomPair::unit(1.5, 3.5).unwrap();
        (make_cascade(&s, T).unwrap(), make_grid(&s, &a, T, GridOptions::default()).unwrap())
    }

    #[test]
    fn cascade_time_ordering() {
        let (st, g) = cascade();
        assert_eq!(g2_time_closed(&st, 5.0, -1.0).unwrap(), 0.0);
        assert_eq!(g2_time_closed(&st, 2.0, 3.0).unwrap(), 0.0);
        let peak = g2_time_closed(&st, 1.0, 0.5).unwrap();
        let below = g2_time(&st, &g, 5.0, -2.0).unwrap();
        assert!(below < 0.01 * peak, "{below} vs {peak}");
    }

    #[test]
    fn numeric_time_map_matches_closed_cascade() {
        let (st, g) = cascade();
        let ts = linspace(1.05, 20.05, 20);
        let taus = linspace(0.3, 19.3, 20);
        let m = g2_time_map(&st, &g, &ts, &taus).unwrap();
        let scale = 4.0 * 0.05 * 0.5;
        let mut worst: f64 = 0.0;
        for (i, &t) in ts.iter().enumerate() {
            for (j, &tau) in taus.iter().enumerate() {
                if (t - tau).abs() < 0.3 {
                    continue; // Gibbs zone of the truncated sum at the step
                }
                let c = g2_time_closed(&st, t, tau).unwrap();
                worst = worst.max((m.values[i][j] - c).abs() / scale);
            }
        }
        assert!(worst < 0.02, "{worst}");
    }

    #[test]
    fn numeric_time_map_matches_closed_spdc() {
        let s = SourceParams::new(1.5, 3.5, 0.05, 0.5).with_t0(30.0);
        let a = AtomPair::unit(1.5, 3.5).unwrap();
        let st = make_spdc(&s, T).unwrap();
        let g = make_grid(&s, &a, T, GridOptions { coverage: 12.0, ..Default::default() }).unwrap();
        let ts = linspace(20.0, 40.0, 9);
        let taus = linspace(21.0, 39.0, 9);
        let m = g2_time_map(&st, &g, &ts, &taus).unwrap();
        let peak = g2_time_closed(&st, 30.0, 30.0).unwrap();
        for (i, &t) in ts.iter().enumerate() {
            for (j, &tau) in taus.iter().enumerate() {
                let c = g2_time_closed(&st, t, tau).unwrap();
                assert!((m.values[i][j] - c).abs() < 1e-3 * peak, "{t} {tau}: {} vs {c}", m.values[i][j]);
            }
        }
    }

    #[test]
    fn disentangled_maps() {
        let (st, g) = cascade();
        let d = disentangle(&st).unwrap();
        let ts = linspace(0.0, 10.0, 5);
        let m = g2_time_map(&d, &g, &ts, &ts).unwrap();
        assert!((m.max() - m.min()) <= 1e-10 * m.max());
        let w = linspace(1.0, 4.0, 31);
        let a = g2_freq_map(&st, &g, &w, &w).unwrap();
        let b = g2_freq_map(&d, &g, &w, &w).unwrap();
        assert_eq!(a.values, b.values);
    }

    #[test]
    fn cascade_frequency_antidiagonal_width() {
        let (st, g) = cascade();
        let w = linspace(0.5, 4.5, 401);
        let m = g2_freq_map(&st, &g, &w, &w).unwrap();
        let wd = correlation_widths(&m).unwrap();
        assert!((wd.antidiagonal_width / 0.1 - 1.0).abs() < 0.1, "{wd:?}");
        assert!(wd.diagonal_width > 5.0 * wd.antidiagonal_width);
    }

    #[test]
    fn flat_map_has_no_structure() {
        let m = CorrelationMap {
            kind: MapKind::Time,
            axis1: linspace(0.0, 1.0, 5),
            axis2: linspace(0.0, 1.0, 5),
            values: vec![vec![2.0; 5]; 5],
            normalization_tag: TIME_TAG.into(),
            state_tag: "diagonal_mixed".into(),
        };
        assert!(matches!(correlation_widths(&m), Err(Error::NoStructure(_))));
    }

    #[test]
    fn isotropic_gaussian_equal_widths() {
        let x = linspace(-3.0, 3.0, 121);
        let values = x.iter().map(|a| x.iter().map(|b| (-(a * a + b * b)).exp()).collect()).collect();
        let m = CorrelationMap {
            kind: MapKind::Frequency,
            axis1: x.clone(),
            axis2: x,
            values,
            normalization_tag: FREQ_TAG.into(),
            state_tag: "toy".into(),
        };
        let w = correlation_widths(&m).unwrap();
        assert!((w.diagonal_width - w.antidiagonal_width).abs() < 1e-9);
    }

    #[test]
    fn spdc_spots() {
        let s = SourceParams::new(1.5, 3.5, 0.05, 0.5);
        let a = AtomPair::unit(1.5, 3.5).unwrap();
        let g = make_grid(&s, &a, T, GridOptions::default()).unwrap();
        let st = make_spdc(&s, T).unwrap();
        let w = linspace(0.5, 4.5, 81);
        let pure = g2_freq_map(&st, &g, &w, &w).unwrap();
        let fact = g2_freq_map(&factorize(&st).unwrap(), &g, &w, &w).unwrap();
        assert_eq!(count_spots(&pure, 0.25), 2);
        assert_eq!(count_spots(&fact, 0.25), 4);
    }

    #[test]
    fn freq_map_grid_measure_is_unit() {
        let s = SourceParams::new(1.5, 3.5, 0.05, 0.5);
        let a = AtomPair::unit(1.5, 3.5).unwrap();
        let g = make_grid(&s, &a, T, GridOptions::default()).unwrap();
        let st = make_spdc(&s, T).unwrap();
        let w = g.omegas();
        let m = g2_freq_map(&st, &g, &w, &w).unwrap();
        let total: f64 = m.values.iter().flatten().sum::<f64>() / (T * T);
        assert!((total - 1.0).abs() < 1e-6);
        let u = make_uncorrelated(&s, T).unwrap();
        assert!(g2_time_closed(&u, 1.0, -1.0).unwrap() == 0.0);
    }

    #[test]
    fn csv_layout() {
        let (st, g) = cascade();
        let m = g2_freq_map(&st, &g, &[1.0, 2.0], &[3.0, 3.5]).unwrap();
        let csv = m.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "axis1,axis2,value");
        assert!(lines[1].starts_with("1.00000000e0,3.00000000e0,"));
    }

    #[test]
    fn budget_refusal() {
        let (st, g) = cascade();
        let req = MapRequest {
            kind: MapKind::Time,
            range1: (0.0, 1.0),
            range2: (0.0, 1.0),
            resolution: (400, 400),
        };
        assert!(matches!(emit_figure_grid(&st, &g, &req), Err(Error::Budget { .. })));
    }
}
