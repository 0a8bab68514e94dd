use crate::model::AtomPair;
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

/// Single-atom response `(1 - e^{-i dw t}) / dw` with `dw = omega - omega_i`.
///
/// Uses `1 - e^{-ix} = 2 sin^2(x/2) + i sin x` to avoid cancellation; the
/// removable singularity gives `i t`.
pub fn response(dw: f64, t: f64) -> C64 {
    if t == 0.0 {
        return C64::new(0.0, 0.0);
    }
    if dw.abs() < 1e-9 / t {
        return C64::new(0.0, t);
    }
    let x = dw * t;
    let s = (0.5 * x).sin();
    C64::new(2.0 * s * s, x.sin()) / dw
}

/// Response at a comb node `x` spacings away from the atom, at `t = r T`.
///
/// The phase is reduced as `2 pi frac(x r)`, so integer `x` and integer `r`
/// give an exact zero away from the atom.
pub fn node_response(x: f64, spacing: f64, r: f64, t: f64) -> C64 {
    if t == 0.0 {
        return C64::new(0.0, 0.0);
    }
    if x == 0.0 {
        return C64::new(0.0, t);
    }
    let f = (x * r).rem_euclid(1.0);
    if f == 0.0 {
        return C64::new(0.0, 0.0);
    }
    let th = 2.0 * PI * f;
    let s = (0.5 * th).sin();
    C64::new(2.0 * s * s, th.sin()) / (x * spacing)
}

/// Coupling product with `|f1 f2|^2 = p0 / (4 T^2)` (phase convention real).
pub fn coupling(atoms: &AtomPair, t_box: f64) -> f64 {
    atoms.p0.sqrt() / (2.0 * t_box)
}

/// `A_mn(t) = f1 f2 K1(omega_m) K2(omega_n)` for a box of period `t_box`.
pub fn kernel(omega_m: f64, omega_n: f64, t: f64, atoms: &AtomPair, t_box: f64) -> C64 {
    coupling(atoms, t_box) * response(omega_m - atoms.omega1, t) * response(omega_n - atoms.omega2, t)
}
