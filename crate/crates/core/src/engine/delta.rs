use crate::error::{Error, Result};
use crate::model::{regime_flags, AtomPair, Detunings, FlagSet, FrequencyGrid, Method, ProbabilityResult, RegimeFlag, Thresholds};
use crate::states::{marginal_first, marginal_second, BiphotonState, PureFamily};

/// Switched-on long-time limit: only the two resonant amplitudes survive.
///
/// Pure: `(P0/4) T^2 |c12 + c21|^2`. Diagonal: `(P0/4) t^2 (|c12|^2 + |c21|^2)`.
/// Factorized: `(P0/4) t^2 (pa(1) pb(2) + pa(2) pb(1))` with grid marginals.
/// All three coincide with the comb quadrature at t = T on a commensurate comb.
pub fn prob_delta_limit(state: &BiphotonState, atoms: &AtomPair, grid: &FrequencyGrid, t: f64) -> Result<ProbabilityResult> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidInput(format!("t must be finite and > 0, got {t}")));
    }
    let th = Thresholds::default();
    let p = state.parent();
    let t_box = p.t_box;
    let (w1, w2) = (atoms.omega1, atoms.omega2);
    let c12 = p.amplitude(w1, w2);
    let c21 = p.amplitude(w2, w1);
    let q = atoms.p0 / 4.0;
    let value = match state {
        BiphotonState::Pure(_) => q * t_box * t_box * (c12 + c21).norm_sqr(),
        BiphotonState::CoherentLift { alpha, .. } => q * t_box * t_box * (c12 + c21).norm_sqr() * alpha.norm_sqr().powi(2),
        BiphotonState::DiagonalMixed(_) => q * t * t * (c12.norm_sqr() + c21.norm_sqr()),
        BiphotonState::FactorizedMixed(_) => {
            let w = grid.omegas();
            let pa = |x| marginal_first(p, &w, x);
            let pb = |x| marginal_second(p, &w, x);
            q * t * t * (pa(w1) * pb(w2) + pa(w2) * pb(w1))
        }
    };

    let mut flags = match p.family {
        PureFamily::Tabulated(_) => FlagSet::new(),
        _ => regime_flags(&p.source, atoms, &Detunings::of(atoms, &p.source), t),
    };
    flags.extend(state.flags(&th));
    flags.extend(super::dominance_flags(p, atoms, &th));
    let on = p.switched_on(&th);
    flags.insert(on);
    let mut warnings = Vec::new();
    if on == RegimeFlag::SwitchedOnUnverified {
        warnings.push(format!(
            "switched-on condition not verified for {}; the delta limit may not apply",
            state.kind().name()
        ));
    }
    Ok(ProbabilityResult {
        value,
        method: Method::DeltaLimit,
        time: t,
        regime_flags: flags,
        error_estimate: None,
        warnings,
    })
}
