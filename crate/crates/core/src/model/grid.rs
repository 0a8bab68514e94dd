use super::{AtomPair, SourceParams};
use crate::error::{Error, Result};
use serde::Serialize;
use std::f64::consts::PI;

/// Options for [`make_grid`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridOptions {
    /// Window half-width in units of the largest source width.
    pub coverage: f64,
    /// Point budget.
    pub max_points: usize,
}

impl Default for GridOptions {
    fn default() -> Self {
        GridOptions {
            coverage: 40.0,
            max_points: 200_000,
        }
    }
}

/// A run of consecutive comb nodes `start, start+1, ..., start+len-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub start: i64,
    pub len: usize,
}

/// A finite piece of the box's mode comb `omega = origin + j * spacing`.
///
/// The comb is anchored on `omega1`, so atom 1 is always a node. The
/// points are a union of disjoint windows (segments) ordered by frequency.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrequencyGrid {
    pub omega_min: f64,
    pub omega_max: f64,
    pub n_points: usize,
    pub spacing: f64,
    /// Quantization time T; `spacing * T = 2 pi`.
    pub mode_density_time: f64,
    pub origin: f64,
    pub segments: Vec<Segment>,
    /// Requested windows in frequency, kept so the grid can be rebuilt at
    /// another resolution.
    pub windows: Vec<(f64, f64)>,
    /// Node index nearest to omega2 and its residual in units of spacing.
    pub omega2_node: i64,
    pub omega2_residual: f64,
    pub max_points: usize,
}

impl FrequencyGrid {
    /// Comb of period `t_box` covering the given frequency windows.
    pub fn from_windows(
        origin: f64,
        omega2: f64,
        t_box: f64,
        windows: &[(f64, f64)],
        max_points: usize,
    ) -> Result<Self> {
        if !(t_box.is_finite() && t_box > 0.0) {
            return Err(Error::InvalidInput(format!("T must be > 0, got {t_box}")));
        }
        if windows.is_empty() {
            return Err(Error::InvalidInput("grid needs at least one window".into()));
        }
        let h = 2.0 * PI / t_box;
        let mut ranges: Vec<(i64, i64)> = windows
            .iter()
            .map(|&(lo, hi)| {
                let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
                (((lo - origin) / h).floor() as i64, ((hi - origin) / h).ceil() as i64)
            })
            .collect();
        ranges.sort();
        let mut merged: Vec<(i64, i64)> = Vec::new();
        for (a, b) in ranges {
            match merged.last_mut() {
                Some(last) if a <= last.1 + 1 => last.1 = last.1.max(b),
                _ => merged.push((a, b)),
            }
        }
        let needed: i128 = merged.iter().map(|(a, b)| (*b - *a + 1) as i128).sum();
        if needed > max_points as i128 {
            return Err(Error::Budget {
                needed: needed.min(usize::MAX as i128) as usize,
                limit: max_points,
            });
        }
        let segments: Vec<Segment> = merged
            .iter()
            .map(|&(a, b)| Segment {
                start: a,
                len: (b - a + 1) as usize,
            })
            .collect();
        let x2 = (omega2 - origin) / h;
        let j2 = x2.round();
        let first = merged[0].0;
        let last = merged[merged.len() - 1].1;
        Ok(FrequencyGrid {
            omega_min: origin + first as f64 * h,
            omega_max: origin + last as f64 * h,
            n_points: needed as usize,
            spacing: h,
            mode_density_time: t_box,
            origin,
            segments,
            windows: windows.to_vec(),
            omega2_node: j2 as i64,
            omega2_residual: x2 - j2,
            max_points,
        })
    }

    /// Same windows, different box.
    pub fn with_period(&self, t_box: f64) -> Result<Self> {
        let omega2 = self.origin + (self.omega2_node as f64 + self.omega2_residual) * self.spacing;
        Self::from_windows(self.origin, omega2, t_box, &self.windows, self.max_points)
    }

    pub fn period(&self) -> f64 {
        self.mode_density_time
    }

    /// Whether omega2 sits on a node (residual below 1e-6 spacing).
    pub fn atoms_on_comb(&self) -> bool {
        self.omega2_residual.abs() < 1e-6
    }

    /// Comb index of every point, in frequency order.
    pub fn nodes(&self) -> Vec<i64> {
        let mut v = Vec::with_capacity(self.n_points);
        for s in &self.segments {
            v.extend(s.start..s.start + s.len as i64);
        }
        v
    }

    pub fn omega_of_node(&self, j: i64) -> f64 {
        self.origin + j as f64 * self.spacing
    }

    pub fn omegas(&self) -> Vec<f64> {
        self.nodes().into_iter().map(|j| self.omega_of_node(j)).collect()
    }

    /// Position of node `j` in the point list, if it is on the grid.
    pub fn position(&self, j: i64) -> Option<usize> {
        let mut offset = 0;
        for s in &self.segments {
            if j >= s.start && j < s.start + s.len as i64 {
                return Some(offset + (j - s.start) as usize);
            }
            offset += s.len;
        }
        None
    }

    pub fn contains_node(&self, j: i64) -> bool {
        self.position(j).is_some()
    }

    /// Nearest node to `omega` and whether it is within 1e-6 spacing.
    pub fn node_of(&self, omega: f64) -> (i64, bool) {
        let x = (omega - self.origin) / self.spacing;
        let j = x.round();
        (j as i64, (x - j).abs() < 1e-6)
    }

    /// Frequency offset of atom `i` (1 or 2) from node `j`, in units of
    /// spacing, treating on-comb atoms as exactly on their node.
    pub fn atom_offset(&self, atom: usize, j: i64) -> f64 {
        match atom {
            1 => j as f64,
            _ => {
                let r = if self.atoms_on_comb() { 0.0 } else { self.omega2_residual };
                (j - self.omega2_node) as f64 - r
            }
        }
    }

    pub fn spans_contiguously(&self) -> bool {
        self.segments.len() == 1
    }
}

/// Build the comb for a source and atom pair.
///
/// Windows `center +- coverage * max_width` are placed around both source
/// centers and around each atom not already inside a window; overlapping
/// windows merge.
pub fn make_grid(source: &SourceParams, atoms: &AtomPair, t_box: f64, opts: GridOptions) -> Result<FrequencyGrid> {
    source.validate()?;
    if !(t_box.is_finite() && t_box > 0.0) {
        return Err(Error::InvalidInput(format!("T must be > 0, got {t_box}")));
    }
    if !(opts.coverage >= 10.0) {
        return Err(Error::InvalidInput(format!("coverage must be >= 10, got {}", opts.coverage)));
    }
    let h = 2.0 * PI / t_box;
    let required = source.min_width() / 5.0;
    if h > required {
        return Err(Error::UnderResolved {
            spacing: h,
            required,
            what: "lineshape: spacing must be <= min(width)/5".into(),
        });
    }
    let half = opts.coverage * source.max_width();
    let mut windows = vec![
        (source.omega_alpha - half, source.omega_alpha + half),
        (source.omega_beta - half, source.omega_beta + half),
    ];
    for w in [atoms.omega1, atoms.omega2] {
        let inside = windows.iter().any(|&(lo, hi)| w >= lo && w <= hi);
        if !inside {
            windows.push((w - half, w + half));
        }
    }
    FrequencyGrid::from_windows(atoms.omega1, atoms.omega2, t_box, &windows, opts.max_points)
}
