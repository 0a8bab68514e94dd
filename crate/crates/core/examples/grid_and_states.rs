//! Build a mode comb and the three biphoton families, then look at their
//! normalization and marginals.
//!
//!     cargo run --example grid_and_states

use coexcitation::model::{make_grid, AtomPair, GridOptions, SourceParams};
use coexcitation::states::{grid_norm, make_cascade, make_spdc, make_uncorrelated, marginal_first, marginal_second};
use std::f64::consts::PI;

fn main() -> coexcitation::Result<()> {
    let t_box = 2.0 * PI / 0.01;
    let source = SourceParams::new(1.5, 3.5, 0.05, 0.5).with_t0(400.0);
    let atoms = AtomPair::unit(1.5, 3.5)?;
    let grid = make_grid(&source, &atoms, t_box, GridOptions::default())?;
    println!(
        "grid: {} nodes on [{:.3}, {:.3}], spacing {:.4}, atoms on comb: {}",
        grid.n_points,
        grid.omega_min,
        grid.omega_max,
        grid.spacing,
        grid.atoms_on_comb()
    );

    let w = grid.omegas();
    for state in [make_uncorrelated(&source, t_box)?, make_cascade(&source, t_box)?, make_spdc(&source, t_box)?] {
        let p = state.as_pure().unwrap();
        println!(
            "{:>18}: grid weight {:.5}, pa(w1) {:.3e}, pb(w2) {:.3e}, |c(w1, w2)|^2 {:.3e}",
            state.kind().name(),
            grid_norm(p, &grid),
            marginal_first(p, &w, atoms.omega1),
            marginal_second(p, &w, atoms.omega2),
            p.weight(atoms.omega1, atoms.omega2)
        );
    }
    Ok(())
}
