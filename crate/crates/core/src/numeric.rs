//! Small numerical helpers: deterministic reductions, lattice sums,
//! Gauss-Legendre rules, regression and half-maximum crossings.

use num_complex::Complex64 as C64;
use std::f64::consts::PI;
use std::ops::Add;

/// Fixed-shape pairwise sum. The tree depends only on `xs.len()`.
pub fn pairwise_sum<T: Copy + Add<Output = T> + Default>(xs: &[T]) -> T {
    const LEAF: usize = 8;
    if xs.len() <= LEAF {
        let mut acc = T::default();
        for &x in xs {
            acc = acc + x;
        }
        return acc;
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

pub fn pairwise_sum_c(xs: &[C64]) -> C64 {
    pairwise_sum(xs)
}

/// Sum over `0..n` of `f(i)`, evaluated in parallel over fixed blocks.
///
/// Block boundaries do not depend on the rayon pool, so the result is
/// bit-identical for any thread count.
pub fn par_sum<T, F>(n: usize, f: F) -> T
where
    T: Copy + Add<Output = T> + Default + Send,
    F: Fn(usize) -> T + Sync,
{
    use rayon::prelude::*;
    const BLOCK: usize = 64;
    let nblocks = n.div_ceil(BLOCK);
    let partial: Vec<T> = (0..nblocks)
        .into_par_iter()
        .map(|b| {
            let lo = b * BLOCK;
            let hi = (lo + BLOCK).min(n);
            let vals: Vec<T> = (lo..hi).map(&f).collect();
            pairwise_sum(&vals)
        })
        .collect();
    pairwise_sum(&partial)
}

/// Scientific notation with 9 significant digits.
pub fn fmt_sci(v: f64) -> String {
    format!("{v:.8e}")
}

/// `sum_{n in Z} 1 / ((n h - a)^2 + g^2)` in closed form.
pub fn comb_lorentzian_sum(a: f64, g: f64, h: f64) -> f64 {
    // Poisson-summed lattice sum; stable for large 2*pi*g/h.
    let x = 2.0 * PI * g / h;
    let phase = 2.0 * PI * a / h;
    // sinh(x) / (cosh(x) - cos(p)) = (1 - e^{-2x}) / (1 - 2 e^{-x} cos p + e^{-2x})
    let e1 = (-x).exp();
    let e2 = e1 * e1;
    let ratio = (1.0 - e2) / (1.0 - 2.0 * e1 * phase.cos() + e2);
    PI / (h * g) * ratio
}

/// Gauss-Legendre nodes and weights on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        let (_, d) = legendre(n, z);
        if d != 0.0 {
            dp = d;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

fn legendre(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, d)
}

/// Least-squares line `y = a + b x`; returns (a, b, r_squared).
pub fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    let syy: f64 = y.iter().map(|b| (b - my) * (b - my)).sum();
    let b = sxy / sxx;
    let a = my - b * mx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    (a, b, r2)
}

/// Full width at half maximum of a sampled profile, with linear
/// interpolation at the two outermost crossings around the peak.
pub fn fwhm(x: &[f64], y: &[f64]) -> Option<f64> {
    let (imax, &ymax) = y
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))?;
    if ymax <= 0.0 {
        return None;
    }
    let half = ymax / 2.0;
    let mut left = None;
    for i in (0..imax).rev() {
        if y[i] < half {
            let t = (half - y[i]) / (y[i + 1] - y[i]);
            left = Some(x[i] + t * (x[i + 1] - x[i]));
            break;
        }
    }
    let mut right = None;
    for i in imax + 1..y.len() {
        if y[i] < half {
            let t = (y[i - 1] - half) / (y[i - 1] - y[i]);
            right = Some(x[i - 1] + t * (x[i] - x[i - 1]));
            break;
        }
    }
    // A one-sided profile (peak on the boundary) counts from the peak.
    let l = match left {
        Some(l) => l,
        None if imax == 0 => x[0],
        None => return None,
    };
    let r = match right {
        Some(r) => r,
        None if imax == y.len() - 1 => x[imax],
        None => return None,
    };
    Some(r - l)
}
