//! How fast the response kernel approaches its delta-function limit on
//! causal spectra, and what happens to functions outside that class.
//!
//!     cargo run --example delta_check

use coexcitation::validation::{delta_check, delta_ladder, CausalTestFunction, DELTA_LADDER};

fn main() -> coexcitation::Result<()> {
    for f in CausalTestFunction::builtins(1.0) {
        let l = delta_ladder(&f, &DELTA_LADDER, 1e-2, 1e-9)?;
        let devs: Vec<String> = l.checks.iter().map(|c| format!("{:.1e}", c.deviation)).collect();
        println!("{}: deviations {} at t = {:?}, passed {}", f.name, devs.join(" "), DELTA_LADDER, l.passed);
    }
    let g = CausalTestFunction::gaussian(1.0, 5.0);
    if let Err(e) = delta_check(&g, 10.0, g.default_window()) {
        println!("refused: {e}");
    }
    let l = CausalTestFunction::lorentzian_pole(1.0);
    if let Err(e) = delta_check(&l, 10.0, l.default_window()) {
        println!("refused: {e}");
    }
    Ok(())
}
