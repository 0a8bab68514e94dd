//! Check that a pulse and its stationary counterparts deliver the same
//! energy on [0, T], so comparing probabilities at t = T is fair.
//!
//!     cargo run --example energy_certificate

use coexcitation::cli::presets::scenario_preset;
use coexcitation::validation::{comparison_certificate, pure_flow_profile};

fn main() -> coexcitation::Result<()> {
    for name in ["spdc-dr", "spdc-late"] {
        let sc = scenario_preset(name)?.resolve()?;
        let c = comparison_certificate(&sc.state, &sc.grid)?;
        println!("{name}: passed {}, deviation {:.4}: {}", c.passed, c.deviation, c.message);
        let prof = pure_flow_profile(sc.state.as_pure().unwrap(), &sc.grid)?;
        let t = sc.grid.period();
        println!(
            "  quanta delivered by T/2: {:.4}, by T: {:.4}, over the full period: {:.4}",
            prof.at(t / 2.0),
            prof.at(t),
            prof.at(f64::INFINITY)
        );
    }
    Ok(())
}
