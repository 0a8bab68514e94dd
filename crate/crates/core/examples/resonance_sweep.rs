//! Sweep the two-photon detuning through resonance and measure the line.
//!
//!     cargo run --example resonance_sweep

use coexcitation::cli::commands::sweep_rows;
use coexcitation::cli::presets::scenario_preset;
use coexcitation::numeric::fwhm;

fn main() -> coexcitation::Result<()> {
    for name in ["cascade-delta-sweep", "uncorrelated-delta-sweep"] {
        let mut cfg = scenario_preset(name)?;
        cfg.sweep.as_mut().unwrap().steps = 101;
        let rows = sweep_rows(&cfg)?;
        let d: Vec<f64> = rows.iter().map(|r| r.variable).collect();
        let p: Vec<f64> = rows.iter().map(|r| r.value_quadrature).collect();
        let (lo, hi) = p.iter().fold((f64::MAX, f64::MIN), |(a, b), v| (a.min(*v), b.max(*v)));
        println!("{name}: P in [{lo:.4e}, {hi:.4e}], relative variation {:.2e}", (hi - lo) / lo);
        match fwhm(&d, &p) {
            Some(w) if (hi - lo) / lo > 0.5 => println!("  FWHM in delta: {w:.4}"),
            _ => println!("  no resonance"),
        }
        let worst = rows.iter().map(|r| (r.ratio - 1.0).abs()).fold(0.0, f64::max);
        println!("  largest |quadrature/closed - 1|: {worst:.2e}");
    }
    Ok(())
}
