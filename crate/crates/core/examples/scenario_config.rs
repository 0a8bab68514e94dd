//! Drive the command layer from a JSON document, as the `coexcite` binary
//! does, and print CSV records.
//!
//!     cargo run --example scenario_config

use coexcitation::cli::commands::{cmd_prob, Common};
use coexcitation::cli::output::Format;

const CONFIG: &str = r#"{
  "name": "rho1-cascade",
  "state": {
    "kind": "cascade",
    "detunings": {"delta": 0.0, "Delta": 10.0},
    "widths": {"alpha": 0.05, "beta": 0.5},
    "transforms": ["disentangle"]
  },
  "atoms": {"omega1": 990.0, "omega2": 3010.0},
  "time": "T",
  "method": "all"
}"#;

fn main() {
    let common = Common {
        config: Some(CONFIG.into()),
        format: Some(Format::Csv),
        ..Common::default()
    };
    match cmd_prob(&common) {
        Ok(out) => print!("{}", out.text),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
