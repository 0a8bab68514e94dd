//! Closed-form probabilities and amplitudes in the long-time regime.
//!
//! Values are in the same units as the quadrature (`P0` factored in).

use crate::model::{regime_flags, AtomPair, Detunings, FlagSet, ProbabilityResult, SourceParams};
use crate::states::spdc_zeta;
use num_complex::Complex64 as C64;
use serde::Serialize;
use std::f64::consts::PI;

fn long_time_flags(source: &SourceParams, atoms: &AtomPair) -> FlagSet {
    let d = Detunings::of(atoms, source);
    regime_flags(source, atoms, &d, f64::INFINITY)
}

fn closed(value: f64, source: &SourceParams, atoms: &AtomPair) -> ProbabilityResult {
    ProbabilityResult::closed(value, f64::INFINITY, long_time_flags(source, atoms))
}

fn closed_at(value: f64, t: f64, source: &SourceParams, atoms: &AtomPair) -> ProbabilityResult {
    let d = Detunings::of(atoms, source);
    ProbabilityResult::closed(value, t, regime_flags(source, atoms, &d, t))
}

/// Uncorrelated Lorentzian pair:
/// `P0 ga gb / ([(w1 - wa)^2 + ga^2][(w2 - wb)^2 + gb^2])`.
pub fn closed_p11(source: &SourceParams, atoms: &AtomPair) -> ProbabilityResult {
    let (ga, gb) = (source.width_alpha, source.width_beta);
    let x = atoms.omega1 - source.omega_alpha;
    let y = atoms.omega2 - source.omega_beta;
    closed(atoms.p0 * ga * gb / ((x * x + ga * ga) * (y * y + gb * gb)), source, atoms)
}

/// Mixed uncorrelated pair at time `t`; diagonal and factorized coincide:
/// `P0 (t/T)^2 ga gb [1/(La(w1) Lb(w2)) + 1/(La(w2) Lb(w1))]`, `L(w) = (w - w0)^2 + g^2`.
pub fn closed_p11_mixed(source: &SourceParams, atoms: &AtomPair, t: f64, t_box: f64) -> ProbabilityResult {
    let (ga, gb) = (source.width_alpha, source.width_beta);
    let la = |w: f64| (w - source.omega_alpha).powi(2) + ga * ga;
    let lb = |w: f64| (w - source.omega_beta).powi(2) + gb * gb;
    let (w1, w2) = (atoms.omega1, atoms.omega2);
    let v = atoms.p0 * (t / t_box).powi(2) * ga * gb * (1.0 / (la(w1) * lb(w2)) + 1.0 / (la(w2) * lb(w1)));
    closed_at(v, t, source, atoms)
}

/// Exact cascade probability `|A(t)|^2` at finite `t`.
pub fn closed_cascade_at(source: &SourceParams, atoms: &AtomPair, t: f64) -> ProbabilityResult {
    closed_at(cascade_amplitude_exact(source, atoms, t).norm_sqr(), t, source, atoms)
}

/// Double-resonance reference `P0 / (ga gb)`.
pub fn closed_p11_dr(source: &SourceParams, atoms: &AtomPair) -> ProbabilityResult {
    closed(atoms.p0 / (source.width_alpha * source.width_beta), source, atoms)
}

/// Wing-induced 2P2A value for uncorrelated photons, `P0 ga gb / Delta^4`.
pub fn closed_p11_2p2a(source: &SourceParams, atoms: &AtomPair) -> ProbabilityResult {
    let d = Detunings::of(atoms, source).mismatch();
    closed(atoms.p0 * source.width_alpha * source.width_beta / d.powi(4), source, atoms)
}

/// Order-of-magnitude estimate `9 g1 g2 / (4 pi^2 ga gb)` for a beam section
/// `S = 4 pi^2 / (w1 w2)`.
pub fn closed_p11_dr_estimate(atoms: &AtomPair, source: &SourceParams) -> f64 {
    9.0 * atoms.gamma1 * atoms.gamma2 / (4.0 * PI * PI * source.width_alpha * source.width_beta)
}

/// `e^{izt}/z` and its z-derivative, used at the degenerate denominator.
fn h(z: C64, t: f64) -> C64 {
    (C64::i() * z * t).exp() / z
}

fn dh(z: C64, t: f64) -> C64 {
    (C64::i() * z * t).exp() * (C64::i() * t / z - 1.0 / (z * z))
}

/// Time-dependent continuum amplitude for one atom ordering (atom `a`
/// absorbs the first photon). Returns `Phi` with `A = -sqrt(P0 ga gb) Phi`.
fn cascade_phi(source: &SourceParams, wa_atom: f64, wb_atom: f64, t: f64) -> C64 {
    let (ga, gb) = (source.width_alpha, source.width_beta);
    let delta = source.omega_alpha + source.omega_beta - wa_atom - wb_atom;
    let d2 = C64::new(-delta, ga);
    let e2 = C64::new(wb_atom - source.omega_beta, gb);
    let f = C64::new(source.omega_alpha - wa_atom, gb - ga);
    let lead = 1.0 / (d2 * e2);
    let scale = d2.norm().max(e2.norm());
    // Bracket h(E2) - h(D2) with D2 = E2 - F, divided by F.
    let tail = if f.norm() < 1e-7 * scale {
        dh(e2, t) - 0.5 * f * second_derivative(e2, t)
    } else {
        (h(e2, t) - h(d2, t)) / f
    };
    let v = lead + tail;
    if t == 0.0 {
        C64::new(0.0, 0.0)
    } else {
        v
    }
}

fn second_derivative(z: C64, t: f64) -> C64 {
    let i = C64::i();
    (i * z * t).exp() * (-(t * t) / z - 2.0 * i * t / (z * z) + 2.0 / (z * z * z))
}

/// Full time-dependent cascade amplitude including the four decaying
/// exponentials and the atom-swapped ordering. `|A|^2` is the probability.
pub fn cascade_amplitude_exact(source: &SourceParams, atoms: &AtomPair, t: f64) -> C64 {
    let pref = -(atoms.p0 * source.width_alpha * source.width_beta).sqrt();
    pref * (cascade_phi(source, atoms.omega1, atoms.omega2, t) + cascade_phi(source, atoms.omega2, atoms.omega1, t))
}

/// Long-time limit of [`cascade_amplitude_exact`].
pub fn cascade_amplitude_compact(source: &SourceParams, atoms: &AtomPair) -> C64 {
    let (ga, gb) = (source.width_alpha, source.width_beta);
    let delta = source.omega_alpha + source.omega_beta - atoms.omega1 - atoms.omega2;
    let d2 = C64::new(-delta, ga);
    let pref = -(atoms.p0 * ga * gb).sqrt();
    let e2 = C64::new(atoms.omega2 - source.omega_beta, gb);
    let e1 = C64::new(atoms.omega1 - source.omega_beta, gb);
    pref / d2 * (1.0 / e2 + 1.0 / e1)
}

/// Cascade at double resonance: `P0 / (ga gb)`.
pub fn closed_cascade_dr(source: &SourceParams, atoms: &AtomPair) -> ProbabilityResult {
    closed_p11_dr(source, atoms)
}

/// Cascade near 2P2A resonance, dominant term:
/// `P0 ga gb / ((delta^2 + ga^2) Delta^2)`; equals `P_DR gb^2 / Delta^2` at delta = 0.
pub fn closed_cascade_2p2a(source: &SourceParams, atoms: &AtomPair) -> ProbabilityResult {
    let (ga, gb) = (source.width_alpha, source.width_beta);
    let d = Detunings::of(atoms, source);
    let v = atoms.p0 * ga * gb / ((d.delta * d.delta + ga * ga) * d.mismatch().powi(2));
    closed(v, source, atoms)
}

/// Both atom orderings: `P0 ga gb / (delta^2 + ga^2) [1/(w2 - wb) + 1/(w1 - wb)]^2`.
pub fn closed_cascade_2p2a_two_term(source: &SourceParams, atoms: &AtomPair) -> ProbabilityResult {
    let (ga, gb) = (source.width_alpha, source.width_beta);
    let d = Detunings::of(atoms, source);
    let s = 1.0 / (atoms.omega2 - source.omega_beta) + 1.0 / (atoms.omega1 - source.omega_beta);
    closed(atoms.p0 * ga * gb / (d.delta * d.delta + ga * ga) * s * s, source, atoms)
}

/// Correlated-separable and factorized cascade analogues at time `t`.
pub fn closed_cascade_rho1_rho2(
    source: &SourceParams,
    atoms: &AtomPair,
    t: f64,
    t_box: f64,
) -> (ProbabilityResult, ProbabilityResult) {
    let (ga, gb) = (source.width_alpha, source.width_beta);
    let d = Detunings::of(atoms, source);
    let tt = (t / t_box).powi(2);
    let x1 = atoms.omega1 - source.omega_beta;
    let x2 = atoms.omega2 - source.omega_beta;
    let p1 = atoms.p0 * ga * gb / (d.delta * d.delta + ga * ga) * (1.0 / (x1 * x1) + 1.0 / (x2 * x2)) * tt;
    let p2 = atoms.p0 * gb * (ga + gb) * (1.0 / x1.powi(4) + 1.0 / x2.powi(4)) * tt;
    (closed_at(p1, t, source, atoms), closed_at(p2, t, source, atoms))
}

/// The SPDC entangled, correlated-separable and factorized probabilities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpdcFamily {
    pub pure: ProbabilityResult,
    pub rho1: ProbabilityResult,
    pub rho2: ProbabilityResult,
}

/// Derived limits of the SPDC family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpdcLimits {
    /// `pi P0 sqrt(sa^2 + 2 sb^2) / (sa sb^2)`.
    pub dr: f64,
    /// `dr * exp(-2 Delta^2 / sb^2)`.
    pub pure_2p2a: f64,
    /// `dr * (1 + 2 sb^2/sa^2)^{-1/2} exp(-2 zeta Delta^2 / sb^2)`.
    pub rho2_2p2a: f64,
}

pub fn closed_spdc_family(source: &SourceParams, atoms: &AtomPair, t: f64, t_box: f64) -> SpdcFamily {
    let (sa, sb) = (source.width_alpha, source.width_beta);
    let (wa, wb) = (source.omega_alpha, source.omega_beta);
    let (w1, w2) = (atoms.omega1, atoms.omega2);
    let d = Detunings::of(atoms, source);
    let dr = spdc_dr_value(source, atoms);
    let env = (-d.delta * d.delta / (sa * sa)).exp();
    let sb2 = sb * sb;
    let a = (-((w1 - wa).powi(2) + (w2 - wb).powi(2)) / (2.0 * sb2)).exp();
    let b = (-((w2 - wa).powi(2) + (w1 - wb).powi(2)) / (2.0 * sb2)).exp();
    let tt = (t / t_box).powi(2);
    let pure = dr * env * (a + b).powi(2);
    let rho1 = dr * env * (a * a + b * b) * tt;
    let z = spdc_zeta(sa, sb);
    let g = |w: f64| (-z * (w - wa).powi(2) / sb2).exp() + (-z * (w - wb).powi(2) / sb2).exp();
    let rho2 = PI * atoms.p0 / 2.0 * z / sb2 * g(w1) * g(w2) * tt;
    SpdcFamily {
        pure: closed(pure, source, atoms),
        rho1: closed_at(rho1, t, source, atoms),
        rho2: closed_at(rho2, t, source, atoms),
    }
}

fn spdc_dr_value(source: &SourceParams, atoms: &AtomPair) -> f64 {
    let (sa, sb) = (source.width_alpha, source.width_beta);
    PI * atoms.p0 * (sa * sa + 2.0 * sb * sb).sqrt() / (sa * sb * sb)
}

pub fn spdc_limits(source: &SourceParams, atoms: &AtomPair) -> SpdcLimits {
    let (sa, sb) = (source.width_alpha, source.width_beta);
    let d = Detunings::of(atoms, source).mismatch();
    let dr = spdc_dr_value(source, atoms);
    let z = spdc_zeta(sa, sb);
    SpdcLimits {
        dr,
        pure_2p2a: dr * (-2.0 * d * d / (sb * sb)).exp(),
        rho2_2p2a: dr / (1.0 + 2.0 * sb * sb / (sa * sa)).sqrt() * (-2.0 * z * d * d / (sb * sb)).exp(),
    }
}
