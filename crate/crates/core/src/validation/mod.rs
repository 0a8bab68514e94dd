//! Numerical certificates for the delta-function limit and the energy
//! equalization at t = T.

pub mod delta_check;
pub mod energy;

pub use delta_check::{delta_check, delta_ladder, CausalTestFunction, DeltaCheck, DeltaLadder, DELTA_LADDER};
pub use energy::{comparison_certificate, energy_flow, pure_flow_profile, EnergyCertificate, FlowProfile};
