use crate::error::{Error, Result};
use crate::model::{AtomPair, FrequencyGrid};
use crate::states::{marginal_first, marginal_second, BiphotonState, PureState};
use serde::Serialize;

/// Pure-vs-diagonal gain `|c12 + c21|^2 / (|c12|^2 + |c21|^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GpIndex {
    pub value: f64,
    /// Both amplitudes vanish; the value is set to 1 by convention.
    pub degenerate: bool,
}

fn require_pure<'a>(state: &'a BiphotonState, op: &'static str) -> Result<&'a PureState> {
    state.as_pure().ok_or_else(|| Error::WrongKind {
        op,
        kind: state.kind().name().into(),
    })
}

pub fn enhancement_gp(state: &BiphotonState, atoms: &AtomPair) -> Result<GpIndex> {
    let p = require_pure(state, "enhancement_gp")?;
    let c12 = p.amplitude(atoms.omega1, atoms.omega2);
    let c21 = p.amplitude(atoms.omega2, atoms.omega1);
    let den = c12.norm_sqr() + c21.norm_sqr();
    if c12.norm() < 1e-30 && c21.norm() < 1e-30 {
        return Ok(GpIndex {
            value: 1.0,
            degenerate: true,
        });
    }
    Ok(GpIndex {
        value: (c12 + c21).norm_sqr() / den,
        degenerate: false,
    })
}

/// Correlation gain `(|c12|^2 + |c21|^2) / (pa(1) pb(2) + pa(2) pb(1))` with
/// grid marginals; equals P(diagonal) / P(factorized) in the delta limit.
pub fn enhancement_g12(state: &BiphotonState, atoms: &AtomPair, grid: &FrequencyGrid) -> Result<f64> {
    let p = require_pure(state, "enhancement_g12")?;
    let (w1, w2) = (atoms.omega1, atoms.omega2);
    let num = p.weight(w1, w2) + p.weight(w2, w1);
    let w = grid.omegas();
    let den = marginal_first(p, &w, w1) * marginal_second(p, &w, w2) + marginal_first(p, &w, w2) * marginal_second(p, &w, w1);
    if den == 0.0 {
        return Err(Error::InvalidInput("factorized reference vanishes at the atom frequencies".into()));
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::SourceParams;
    use crate::states::{disentangle, make_cascade, make_tabulated};
    use num_complex::Complex64 as C64;

    #[test]
    fn symmetric_amplitudes_double() {
        let h = 0.01;
        let t = 2.0 * std::f64::consts::PI / h;
        let a = AtomPair::unit(1.0, 1.0 + 3.0 * h).unwrap();
        let c = C64::new(0.3, 0.4);
        let st = make_tabulated(1.0, t, [((0, 3), c), ((3, 0), c)]).unwrap();
        let g = enhancement_gp(&st, &a).unwrap();
        assert!((g.value - 2.0).abs() < 1e-12);
        let anti = make_tabulated(1.0, t, [((0, 3), c), ((3, 0), -c)]).unwrap();
        assert!(enhancement_gp(&anti, &a).unwrap().value.abs() < 1e-12);
        let none = make_tabulated(1.0, t, [((5, 5), c)]).unwrap();
        let z = enhancement_gp(&none, &a).unwrap();
        assert!(z.degenerate && z.value == 1.0);
    }

    #[test]
    fn mixed_input_is_rejected() {
        let s = SourceParams::new(1.5, 3.5, 0.05, 0.5);
        let st = make_cascade(&s, 2.0 * std::f64::consts::PI / 0.01).unwrap();
        let a = AtomPair::unit(1.5, 3.5).unwrap();
        assert!(matches!(enhancement_gp(&disentangle(&st).unwrap(), &a), Err(Error::WrongKind { .. })));
    }
}
