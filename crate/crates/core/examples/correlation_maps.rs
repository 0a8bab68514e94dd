//! Time and frequency correlation maps for the figure presets, written as
//! CSV to the directory given on the command line (default: a temp dir).
//!
//!     cargo run --example correlation_maps -- out/

use coexcitation::correlations::{correlation_widths, count_spots, emit_figure_grid, figure_preset, map_integral, FIGURE_PRESETS};
use std::path::PathBuf;

fn main() -> coexcitation::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("coexcite-maps"));
    std::fs::create_dir_all(&dir).expect("output directory");
    for name in FIGURE_PRESETS {
        let f = figure_preset(name)?;
        let map = emit_figure_grid(&f.state, &f.grid, &f.request)?;
        let path = dir.join(format!("{name}.csv"));
        std::fs::write(&path, map.to_csv()).expect("write map");
        let widths = correlation_widths(&map)
            .map(|w| format!("diagonal {:.3}, anti-diagonal {:.3}", w.diagonal_width, w.antidiagonal_width))
            .unwrap_or_else(|e| e.to_string());
        println!(
            "{name:>12}: {} spots, integral {:.3}, {widths} -> {}",
            count_spots(&map, 0.01),
            map_integral(&map),
            path.display()
        );
    }
    Ok(())
}
