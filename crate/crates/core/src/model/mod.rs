//! Units, parameter bundles, the mode comb and result containers.
//!
//! All frequencies are angular frequencies in one internal unit (read as
//! rad/us); times are in the inverse unit and c = 1, so the box length only
//! enters through the quantization time `T = L/c`.

mod grid;
mod result;

pub use grid::{make_grid, FrequencyGrid, GridOptions, Segment};
pub use result::{Method, ProbabilityResult};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::f64::consts::PI;

/// The fixed unit conventions. Informational: nothing is converted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitsConvention {
    pub frequency_unit: &'static str,
    pub time_unit: &'static str,
    pub speed_of_light: f64,
}

pub const UNITS: UnitsConvention = UnitsConvention {
    frequency_unit: "rad/us",
    time_unit: "us",
    speed_of_light: 1.0,
};

/// Quantization time for a box of length `l` (c = 1).
pub fn quantization_time(l: f64) -> Result<f64> {
    if l.is_finite() && l > 0.0 {
        Ok(l / UNITS.speed_of_light)
    } else {
        Err(Error::InvalidInput(format!("box length must be > 0, got {l}")))
    }
}

/// The two detecting atoms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AtomPair {
    pub omega1: f64,
    pub omega2: f64,
    pub gamma1: f64,
    pub gamma2: f64,
    /// Coupling scale. Probabilities are reported in multiples of it.
    pub p0: f64,
}

impl AtomPair {
    pub fn new(omega1: f64, omega2: f64, gamma1: f64, gamma2: f64, p0: f64) -> Result<Self> {
        let a = AtomPair {
            omega1,
            omega2,
            gamma1,
            gamma2,
            p0,
        };
        a.validate()?;
        Ok(a)
    }

    /// Atoms with `p0 = 1`, so probabilities come out in units of p0.
    pub fn unit(omega1: f64, omega2: f64) -> Result<Self> {
        Self::new(omega1, omega2, 1e-3, 1e-3, 1.0)
    }

    /// Atoms whose p0 is derived from the dipole widths and the beam section.
    pub fn with_section(omega1: f64, omega2: f64, gamma1: f64, gamma2: f64, section: f64) -> Result<Self> {
        if !(section > 0.0) {
            return Err(Error::InvalidInput("beam section must be > 0".into()));
        }
        let p0 = derived_p0(omega1, omega2, gamma1, gamma2, section);
        Self::new(omega1, omega2, gamma1, gamma2, p0)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.omega1, self.omega2, self.gamma1, self.gamma2, self.p0];
        if all.iter().any(|v| !v.is_finite() || *v <= 0.0) {
            return Err(Error::InvalidInput(format!("atom parameters must be finite and > 0: {self:?}")));
        }
        if self.omega1 == self.omega2 {
            return Err(Error::InvalidInput("omega1 and omega2 must differ".into()));
        }
        Ok(())
    }
}

/// `36 pi^2 g1 g2 / (w1^2 w2^2 S^2)` with c = 1.
pub fn derived_p0(omega1: f64, omega2: f64, gamma1: f64, gamma2: f64, section: f64) -> f64 {
    36.0 * PI * PI * gamma1 * gamma2 / (omega1 * omega1 * omega2 * omega2 * section * section)
}

/// Emitter central frequencies and widths.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SourceParams {
    pub omega_alpha: f64,
    pub omega_beta: f64,
    /// gamma_alpha (Lorentzian) or sigma_alpha (Gaussian).
    pub width_alpha: f64,
    pub width_beta: f64,
    /// Pump pulse center (Gaussian sources only).
    #[serde(default)]
    pub t0: f64,
    /// Relative phase of the two Gaussian terms.
    #[serde(default = "default_phase")]
    pub phase: f64,
}

fn default_phase() -> f64 {
    PI / 2.0
}

impl SourceParams {
    pub fn new(omega_alpha: f64, omega_beta: f64, width_alpha: f64, width_beta: f64) -> Self {
        SourceParams {
            omega_alpha,
            omega_beta,
            width_alpha,
            width_beta,
            t0: 0.0,
            phase: default_phase(),
        }
    }

    /// Symmetric layout around fixed atoms:
    /// `omega_alpha = omega1 + d + delta/2`, `omega_beta = omega2 - d + delta/2`.
    pub fn from_detunings(atoms: &AtomPair, d: Detunings, width_alpha: f64, width_beta: f64) -> Self {
        let (wa, wb) = d.centers(atoms);
        Self::new(wa, wb, width_alpha, width_beta)
    }

    pub fn with_t0(mut self, t0: f64) -> Self {
        self.t0 = t0;
        self
    }

    pub fn with_phase(mut self, phase: f64) -> Self {
        self.phase = phase;
        self
    }

    pub fn min_width(&self) -> f64 {
        self.width_alpha.min(self.width_beta)
    }

    pub fn max_width(&self) -> f64 {
        self.width_alpha.max(self.width_beta)
    }

    pub fn validate(&self) -> Result<()> {
        let v = [self.omega_alpha, self.omega_beta, self.width_alpha, self.width_beta, self.t0, self.phase];
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite source parameter: {self:?}")));
        }
        if self.width_alpha <= 0.0 || self.width_beta <= 0.0 {
            return Err(Error::InvalidInput("source widths must be > 0".into()));
        }
        Ok(())
    }
}

/// 2P2A detuning and single-photon mismatch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Detunings {
    /// `omega_alpha + omega_beta - omega1 - omega2`.
    pub delta: f64,
    /// Signed mismatch `((omega_alpha - omega1) - (omega_beta - omega2)) / 2`.
    /// `|big_delta|` is the single-photon mismatch in the symmetric layout.
    pub big_delta: f64,
}

impl Detunings {
    pub fn new(delta: f64, big_delta: f64) -> Self {
        Detunings { delta, big_delta }
    }

    pub fn of(atoms: &AtomPair, source: &SourceParams) -> Self {
        let a = source.omega_alpha - atoms.omega1;
        let b = source.omega_beta - atoms.omega2;
        Detunings {
            delta: a + b,
            big_delta: (a - b) / 2.0,
        }
    }

    /// Source centers for this detuning pair around the given atoms.
    pub fn centers(&self, atoms: &AtomPair) -> (f64, f64) {
        (
            atoms.omega1 + self.big_delta + self.delta / 2.0,
            atoms.omega2 - self.big_delta + self.delta / 2.0,
        )
    }

    pub fn mismatch(&self) -> f64 {
        self.big_delta.abs()
    }
}

/// Numeric thresholds for the "much greater than" conditions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    pub long_time: f64,
    pub scale_separation: f64,
    pub pulse_delay: f64,
    pub coherent_amplitude: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            long_time: 20.0,
            scale_separation: 20.0,
            pulse_delay: 20.0,
            coherent_amplitude: 10.0,
        }
    }
}

/// Regime and diagnostic flags attached to results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegimeFlag {
    /// t * min(width) >= threshold.
    LongTime,
    /// |Delta| / max(width) >= threshold.
    ScaleSeparation,
    /// |delta| <= width_alpha.
    SmallDetuning,
    /// Source widths much smaller than the center separation.
    NarrowLines,
    /// gamma_alpha < gamma_beta: the time-energy EPR hierarchy.
    EprHierarchy,
    /// Pulse delay t0 well beyond the pulse duration.
    PulseDelayed,
    /// omega2 coincides with a comb node.
    AtomsOnComb,
    /// t / T is a positive integer.
    CommensurateTime,
    /// |c21| <= |c12| / threshold or the reverse.
    SingleComponentDominates,
    /// Time-domain support of the state is t >= 0 (or close enough).
    SwitchedOn,
    /// Switched-on condition could not be verified for this state.
    SwitchedOnUnverified,
    /// |alpha| >= threshold for a coherent lift.
    LargeCoherentAmplitude,
    /// |alpha| below the threshold: the lift scaling is formal.
    SmallCoherentAmplitude,
    /// G_p computed from two vanishing amplitudes.
    DegenerateIndex,
}

pub type FlagSet = BTreeSet<RegimeFlag>;

/// Which asymptotic conditions of the closed forms hold.
pub fn regime_flags(source: &SourceParams, atoms: &AtomPair, d: &Detunings, t: f64) -> FlagSet {
    regime_flags_with(source, atoms, d, t, &Thresholds::default())
}

pub fn regime_flags_with(
    source: &SourceParams,
    _atoms: &AtomPair,
    d: &Detunings,
    t: f64,
    th: &Thresholds,
) -> FlagSet {
    let mut f = FlagSet::new();
    if t * source.min_width() >= th.long_time {
        f.insert(RegimeFlag::LongTime);
    }
    if d.mismatch() / source.max_width() >= th.scale_separation {
        f.insert(RegimeFlag::ScaleSeparation);
    }
    if d.delta.abs() <= source.width_alpha {
        f.insert(RegimeFlag::SmallDetuning);
    }
    if (source.omega_alpha - source.omega_beta).abs() / source.max_width() >= th.scale_separation {
        f.insert(RegimeFlag::NarrowLines);
    }
    if source.width_alpha < source.width_beta {
        f.insert(RegimeFlag::EprHierarchy);
    }
    if source.t0 * source.min_width() >= th.pulse_delay {
        f.insert(RegimeFlag::PulseDelayed);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atoms() -> AtomPair {
        AtomPair::unit(990.0, 3010.0).unwrap()
    }

    #[test]
    fn long_time_flag() {
        let s = SourceParams::new(1000.0, 3000.0, 0.5, 0.5);
        let d = Detunings::of(&atoms(), &s);
        assert!(regime_flags(&s, &atoms(), &d, 1000.0).contains(&RegimeFlag::LongTime));
        assert!(!regime_flags(&s, &atoms(), &d, 10.0).contains(&RegimeFlag::LongTime));
    }

    #[test]
    fn scale_separation_at_threshold() {
        let s = SourceParams::new(1000.0, 3000.0, 0.05, 0.5);
        let d = Detunings::of(&atoms(), &s);
        assert!((d.mismatch() - 10.0).abs() < 1e-12);
        assert!(regime_flags(&s, &atoms(), &d, 1.0).contains(&RegimeFlag::ScaleSeparation));
    }

    #[test]
    fn zero_detuning_is_small() {
        let s = SourceParams::new(1000.0, 3000.0, 0.05, 0.5);
        let d = Detunings::of(&atoms(), &s);
        assert_eq!(d.delta, 0.0);
        assert!(regime_flags(&s, &atoms(), &d, 1.0).contains(&RegimeFlag::SmallDetuning));
    }

    #[test]
    fn detuning_layout_round_trips() {
        let a = atoms();
        let d = Detunings::new(0.3, 10.0);
        let s = SourceParams::from_detunings(&a, d, 0.05, 0.5);
        let back = Detunings::of(&a, &s);
        assert!((back.delta - 0.3).abs() < 1e-9 && (back.big_delta - 10.0).abs() < 1e-9);
    }

    #[test]
    fn derived_p0_matches_estimate_convention() {
        let (w1, w2) = (2.0, 3.0);
        let s = 4.0 * PI * PI / (w1 * w2);
        let p0 = derived_p0(w1, w2, 1e-3, 1e-3, s);
        assert!((p0 - 9e-6 / (4.0 * PI * PI)).abs() < 1e-20);
    }

    #[test]
    fn atom_validation() {
        assert!(AtomPair::unit(1.0, 1.0).is_err());
        assert!(AtomPair::new(1.0, 2.0, 0.0, 1.0, 1.0).is_err());
        assert!(quantization_time(-1.0).is_err());
    }
}
