//! Co-excitation probability by comb quadrature, closed form and delta
//! limit, for entangled, correlated-separable and factorized light.
//!
//!     cargo run --example probabilities

use coexcitation::engine::{closed_cascade_2p2a, closed_cascade_rho1_rho2, closed_p11_2p2a, prob_delta_limit, prob_quadrature};
use coexcitation::model::{make_grid, AtomPair, Detunings, GridOptions, SourceParams};
use coexcitation::states::{coherent_lift, disentangle, factorize, make_cascade, make_uncorrelated};
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

fn main() -> coexcitation::Result<()> {
    let t = 2.0 * PI / 0.01;
    // Atoms far apart, photons detuned by Delta = 10 but resonant in the sum.
    let atoms = AtomPair::unit(990.0, 3010.0)?;
    let source = SourceParams::from_detunings(&atoms, Detunings::new(0.0, 10.0), 0.05, 0.5);
    let grid = make_grid(&source, &atoms, t, GridOptions::default())?;

    let cascade = make_cascade(&source, t)?;
    let uncorrelated = make_uncorrelated(&source, t)?;
    let (c1, c2) = closed_cascade_rho1_rho2(&source, &atoms, t, t);
    let rows = [
        ("uncorrelated", &uncorrelated, closed_p11_2p2a(&source, &atoms).value),
        ("cascade", &cascade, closed_cascade_2p2a(&source, &atoms).value),
        ("cascade rho1", &disentangle(&cascade)?, c1.value),
        ("cascade rho2", &factorize(&cascade)?, c2.value),
    ];
    println!("{:>14} {:>12} {:>12} {:>12}", "state", "quadrature", "closed", "delta");
    for (name, st, closed) in rows {
        let q = prob_quadrature(st, &atoms, &grid, t)?;
        let d = prob_delta_limit(st, &atoms, &grid, t)?;
        println!("{name:>14} {:>12.4e} {closed:>12.4e} {:>12.4e}", q.value, d.value);
    }

    let base = prob_quadrature(&cascade, &atoms, &grid, t)?.value;
    for al in [C64::new(1.0, 0.0), C64::new(2.0, 0.0), C64::new(1.0, 1.0)] {
        let v = prob_quadrature(&coherent_lift(&cascade, al)?, &atoms, &grid, t)?.value;
        println!("coherent lift alpha = {al}: P / P_base = {:.6}", v / base);
    }
    Ok(())
}
