//! Numerical check that `(e^{-i w t} - 1) / w` acts on causal spectra as
//! `-2 pi i delta(w)` for large t.
//!
//! With `f(w) = (1/2pi) int F(s) e^{i w s} ds`, the integral equals
//! `-i int_0^t F(s) ds`, which tends to `-2 pi i f(0)` when F vanishes
//! for negative times.

use crate::engine::kernel::response;
use crate::error::{Error, Result};
use crate::numeric::{gauss_legendre, pairwise_sum};
use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;
use std::sync::Arc;

type TimeFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
type FreqFn = Arc<dyn Fn(f64) -> C64 + Send + Sync>;

/// A test function given in both domains.
#[derive(Clone)]
pub struct CausalTestFunction {
    pub name: String,
    /// Rate setting the natural time scale (`t` ladders are in units of 1/rate).
    pub rate: f64,
    pub time_form: TimeFn,
    pub freq_form: FreqFn,
    pub f_zero: C64,
}

impl std::fmt::Debug for CausalTestFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CausalTestFunction")
            .field("name", &self.name)
            .field("rate", &self.rate)
            .field("f_zero", &self.f_zero)
            .finish()
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

impl CausalTestFunction {
    /// `theta(t) t^n e^{-g t}`, with `f(w) = n! / (2 pi (g - i w)^{n+1})`.
    pub fn exp_poly(n: u32, g: f64) -> Self {
        let nf = factorial(n);
        CausalTestFunction {
            name: format!("theta(t) t^{n} exp(-{g} t)"),
            rate: g,
            time_form: Arc::new(move |t| if t < 0.0 { 0.0 } else { t.powi(n as i32) * (-g * t).exp() }),
            freq_form: Arc::new(move |w| nf / (2.0 * PI * C64::new(g, -w).powi(n as i32 + 1))),
            f_zero: C64::new(nf / (2.0 * PI * g.powi(n as i32 + 1)), 0.0),
        }
    }

    /// `theta(t) (1 - e^{-g t}) e^{-2 g t}`.
    pub fn switched_exp(g: f64) -> Self {
        CausalTestFunction {
            name: format!("theta(t) (1 - exp(-{g} t)) exp(-2*{g} t)"),
            rate: g,
            time_form: Arc::new(move |t| if t < 0.0 { 0.0 } else { (1.0 - (-g * t).exp()) * (-2.0 * g * t).exp() }),
            freq_form: Arc::new(move |w| g / (2.0 * PI * C64::new(2.0 * g, -w) * C64::new(3.0 * g, -w))),
            f_zero: C64::new(1.0 / (12.0 * PI * g), 0.0),
        }
    }

    /// Gaussian pulse centered at `t0`: not causal.
    pub fn gaussian(sigma: f64, t0: f64) -> Self {
        let a = sigma / (2.0 * PI).sqrt();
        CausalTestFunction {
            name: format!("gaussian(sigma={sigma}, t0={t0})"),
            rate: 1.0 / sigma,
            time_form: Arc::new(move |t| (-(t - t0).powi(2) / (2.0 * sigma * sigma)).exp()),
            freq_form: Arc::new(move |w| C64::from_polar(a * (-sigma * sigma * w * w / 2.0).exp(), w * t0)),
            f_zero: C64::new(a, 0.0),
        }
    }

    /// `theta(t) e^{-g t}`: causal, but its spectrum `1/(2 pi (g - i w))` is
    /// not absolutely integrable.
    pub fn lorentzian_pole(g: f64) -> Self {
        CausalTestFunction {
            name: format!("theta(t) exp(-{g} t)"),
            rate: g,
            time_form: Arc::new(move |t| if t < 0.0 { 0.0 } else { (-g * t).exp() }),
            freq_form: Arc::new(move |w| 1.0 / (2.0 * PI * C64::new(g, -w))),
            f_zero: C64::new(1.0 / (2.0 * PI * g), 0.0),
        }
    }

    /// The three shipped members of the causal class.
    pub fn builtins(g: f64) -> Vec<Self> {
        vec![Self::exp_poly(1, g), Self::exp_poly(2, g), Self::switched_exp(g)]
    }

    /// Default integration window `+-2000 rate`.
    pub fn default_window(&self) -> (f64, f64) {
        (-2000.0 * self.rate, 2000.0 * self.rate)
    }
}

/// Refuse functions with weight at negative times (100 samples on
/// `[-50/rate, 0)` compared with the largest of 100 samples on `(0, 50/rate]`).
pub fn screen_causality(f: &CausalTestFunction) -> Result<()> {
    let span = 50.0 / f.rate;
    let pos = (1..=100).map(|i| (f.time_form)(span * i as f64 / 100.0).abs()).fold(0.0, f64::max);
    let neg = (1..=100).map(|i| (f.time_form)(-span * i as f64 / 100.0).abs()).fold(0.0, f64::max);
    if !(neg <= 1e-12 * pos.max(1e-300)) {
        return Err(Error::RefusedFunction(format!("{} is not zero for t < 0", f.name)));
    }
    Ok(())
}

/// Refuse spectra whose tails stay heavy at the window edge:
/// `W |f(+-W)| / int |f| > 1e-2`.
pub fn screen_integrability(f: &CausalTestFunction, window: (f64, f64)) -> Result<()> {
    let (lo, hi) = window;
    let abs_int = integrate(|w| C64::new((f.freq_form)(w).norm(), 0.0), lo, hi, (hi - lo) / 20000.0).re;
    let edge = (lo.abs() * (f.freq_form)(lo).norm()).max(hi.abs() * (f.freq_form)(hi).norm());
    if !(abs_int > 0.0 && abs_int.is_finite()) || edge / abs_int > 1e-2 {
        return Err(Error::RefusedFunction(format!(
            "{} is not absolutely integrable on the window (edge ratio {:.3e})",
            f.name,
            edge / abs_int
        )));
    }
    Ok(())
}

/// Composite 8-point Gauss-Legendre with panels no wider than `max_panel`.
fn integrate<F: Fn(f64) -> C64 + Sync>(g: F, lo: f64, hi: f64, max_panel: f64) -> C64 {
    let (x, w) = gauss_legendre(8);
    let n = ((hi - lo) / max_panel).ceil().max(1.0) as usize;
    let h = (hi - lo) / n as f64;
    let panels: Vec<C64> = (0..n)
        .into_par_iter()
        .map(|p| {
            let a = lo + p as f64 * h;
            let mut acc = C64::new(0.0, 0.0);
            for i in 0..x.len() {
                acc += w[i] * g(a + 0.5 * h * (x[i] + 1.0));
            }
            acc * (0.5 * h)
        })
        .collect();
    pairwise_sum(&panels)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for ComplexValue {
    fn from(z: C64) -> Self {
        ComplexValue { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaCheck {
    pub function: String,
    pub t: f64,
    pub integral: ComplexValue,
    /// `-2 pi i f(0)`.
    pub target: ComplexValue,
    /// `+2 pi i f(0)`, the opposite-sign convention.
    pub opposite_sign_target: ComplexValue,
    pub deviation: f64,
}

/// `I(t) = int (e^{-i w t} - 1)/w f(w) dw` over `window`, compared with
/// `-2 pi i f(0)`.
pub fn delta_check(f: &CausalTestFunction, t: f64, window: (f64, f64)) -> Result<DeltaCheck> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidInput(format!("t must be finite and > 0, got {t}")));
    }
    if !(window.0 < 0.0 && window.1 > 0.0) {
        return Err(Error::InvalidInput("window must contain w = 0".into()));
    }
    screen_causality(f)?;
    screen_integrability(f, window)?;
    // Panels resolve the e^{-i w t} oscillation and the rate scale.
    let panel = (PI / (2.0 * t)).min(0.25 * f.rate);
    let integral = integrate(|w| -response(w, t) * (f.freq_form)(w), window.0, window.1, panel);
    let target = C64::new(0.0, -2.0 * PI) * f.f_zero;
    Ok(DeltaCheck {
        function: f.name.clone(),
        t,
        integral: integral.into(),
        target: target.into(),
        opposite_sign_target: (-target).into(),
        deviation: (integral - target).norm() / target.norm(),
    })
}

/// Ladder of checks at `t = m / rate` and a monotone-decay verdict with
/// `noise` tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaLadder {
    pub function: String,
    pub checks: Vec<DeltaCheck>,
    pub monotone: bool,
    /// Deviation at the last rung is below `tolerance`.
    pub converged: bool,
    pub tolerance: f64,
    pub passed: bool,
}

pub const DELTA_LADDER: [f64; 4] = [25.0, 50.0, 100.0, 200.0];

pub fn delta_ladder(f: &CausalTestFunction, multiples: &[f64], tolerance: f64, noise: f64) -> Result<DeltaLadder> {
    let window = f.default_window();
    let checks = multiples
        .iter()
        .map(|m| delta_check(f, m / f.rate, window))
        .collect::<Result<Vec<_>>>()?;
    let monotone = checks.windows(2).all(|p| p[1].deviation <= p[0].deviation + noise);
    let converged = checks.last().is_some_and(|c| c.deviation < tolerance);
    Ok(DeltaLadder {
        function: f.name.clone(),
        checks,
        monotone,
        converged,
        tolerance,
        passed: monotone && converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_converge_to_corrected_target() {
        for f in CausalTestFunction::builtins(1.0) {
            let c = delta_check(&f, 200.0, f.default_window()).unwrap();
            assert!(c.deviation < 1e-2, "{}: {}", f.name, c.deviation);
            let opposite = C64::new(c.opposite_sign_target.re, c.opposite_sign_target.im);
            let i = C64::new(c.integral.re, c.integral.im);
            assert!((i - opposite).norm() > opposite.norm());
        }
    }

    #[test]
    fn short_time_matches_partial_time_integral() {
        // I(t) = -i int_0^t s e^{-s} ds = -i (1 - (1 + t) e^{-t}) for g = 1.
        let f = CausalTestFunction::exp_poly(1, 1.0);
        let t = 1.5;
        let c = delta_check(&f, t, f.default_window()).unwrap();
        let exact = -(1.0 - (1.0 + t) * (-t as f64).exp());
        assert!((c.integral.im - exact).abs() < 1e-4, "{} vs {exact}", c.integral.im);
        assert!(c.integral.re.abs() < 1e-4);
    }

    #[test]
    fn refusals() {
        let g = CausalTestFunction::gaussian(1.0, 5.0);
        assert!(matches!(delta_check(&g, 10.0, g.default_window()), Err(Error::RefusedFunction(_))));
        let l = CausalTestFunction::lorentzian_pole(1.0);
        assert!(matches!(delta_check(&l, 10.0, l.default_window()), Err(Error::RefusedFunction(_))));
    }

    #[test]
    fn f_zero_consistent_with_freq_form() {
        let mut all = CausalTestFunction::builtins(0.7);
        all.push(CausalTestFunction::gaussian(1.0, 2.0));
        for f in all {
            assert!(((f.freq_form)(0.0) - f.f_zero).norm() < 1e-14);
        }
    }
}
