//! Co-excitation probabilities: comb quadrature, closed forms, the
//! switched-on delta limit, and the enhancement indices.

mod closed;
mod delta;
mod enhance;
pub mod kernel;
mod quadrature;

pub use closed::*;
pub use delta::prob_delta_limit;
pub use enhance::{enhancement_g12, enhancement_gp, GpIndex};
pub use kernel::kernel;
pub use quadrature::{check_time_resolution, commensurate, prob_quadrature, prob_quadrature_with, QuadratureOptions};

use crate::model::{AtomPair, FlagSet, RegimeFlag, Thresholds};
use crate::states::PureState;

/// `|c21| / |c12|`, infinite when c12 vanishes.
pub fn dominance_ratio(state: &PureState, atoms: &AtomPair) -> f64 {
    let c12 = state.amplitude(atoms.omega1, atoms.omega2).norm();
    let c21 = state.amplitude(atoms.omega2, atoms.omega1).norm();
    if c12 == 0.0 {
        if c21 == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        c21 / c12
    }
}

pub(crate) fn dominance_flags(state: &PureState, atoms: &AtomPair, th: &Thresholds) -> FlagSet {
    let r = dominance_ratio(state, atoms);
    let mut f = FlagSet::new();
    if r * th.scale_separation <= 1.0 || r >= th.scale_separation {
        f.insert(RegimeFlag::SingleComponentDominates);
    }
    f
}
