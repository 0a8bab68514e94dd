//! Named scenario presets shipped with the binary.

use super::config::{parse_config, ScenarioConfig};
use crate::error::{Error, Result};

const BUNDLES: [(&str, &str); 9] = [
    ("uncorrelated-dr", include_str!("../../presets/uncorrelated-dr.json")),
    ("cascade-dr", include_str!("../../presets/cascade-dr.json")),
    ("spdc-dr", include_str!("../../presets/spdc-dr.json")),
    ("uncorrelated-2p2a", include_str!("../../presets/uncorrelated-2p2a.json")),
    ("cascade-2p2a", include_str!("../../presets/cascade-2p2a.json")),
    ("spdc-2p2a", include_str!("../../presets/spdc-2p2a.json")),
    ("spdc-late", include_str!("../../presets/spdc-late.json")),
    ("cascade-delta-sweep", include_str!("../../presets/cascade-delta-sweep.json")),
    ("uncorrelated-delta-sweep", include_str!("../../presets/uncorrelated-delta-sweep.json")),
];

/// Presets certified by `validate` when none are named.
pub const CERTIFIED_PRESETS: [&str; 3] = ["uncorrelated-dr", "cascade-dr", "spdc-dr"];

pub fn scenario_names() -> impl Iterator<Item = &'static str> {
    BUNDLES.iter().map(|(n, _)| *n)
}

pub fn scenario_preset(name: &str) -> Result<ScenarioConfig> {
    let (_, text) = BUNDLES.iter().find(|(n, _)| *n == name).ok_or_else(|| {
        Error::Config(format!(
            "unknown preset \"{name}\"; known: {}",
            scenario_names().collect::<Vec<_>>().join(", ")
        ))
    })?;
    parse_config(text)
}
