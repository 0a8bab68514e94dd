//! Command-line front end for the `coexcite` binary.
//!
//! Exit codes: 0 ok, 1 certificate failure, 2 config error, 3 resource
//! refusal, 4 strict-regime violation.

pub mod commands;
pub mod config;
pub mod output;
pub mod presets;

use clap::{Args, Parser, Subcommand};
use commands::{Common, Failure, Outcome};
use output::Format;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "coexcite", about = "Two-atom co-excitation probabilities and biphoton correlation maps")]
pub struct Cli {
    /// Worker threads; results do not depend on this.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct CommonArgs {
    /// JSON scenario file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Named scenario or figure preset.
    #[arg(long)]
    pub preset: Option<String>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Refuse closed forms outside their asymptotic regime.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Co-excitation probability by the configured methods.
    Prob(CommonArgs),
    /// Closed form against quadrature over a parameter sweep.
    Sweep(CommonArgs),
    /// Time or frequency correlation map.
    G2(CommonArgs),
    /// Enhancement indices and correlation widths.
    Enhance(CommonArgs),
    /// Delta-limit ladders and energy certificates.
    Validate(CommonArgs),
}

fn execute(cmd: &Command) -> (Option<PathBuf>, Result<Outcome, Failure>) {
    let (a, f): (&CommonArgs, fn(&Common) -> Result<Outcome, Failure>) = match cmd {
        Command::Prob(a) => (a, commands::cmd_prob),
        Command::Sweep(a) => (a, commands::cmd_sweep),
        Command::G2(a) => (a, commands::cmd_g2),
        Command::Enhance(a) => (a, commands::cmd_enhance),
        Command::Validate(a) => (a, commands::cmd_validate),
    };
    let config = match &a.config {
        Some(p) => match std::fs::read_to_string(p) {
            Ok(t) => Some(t),
            Err(e) => {
                let err = crate::Error::Config(format!("cannot read {}: {e}", p.display()));
                return (a.out.clone(), Err(err.into()));
            }
        },
        None => None,
    };
    let common = Common {
        config,
        preset: a.preset.clone(),
        format: a.format,
        strict: a.strict,
    };
    (a.out.clone(), f(&common))
}

/// Parse `args` (program name first), run, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let (out, result) = match cli.threads {
        Some(0) => {
            eprintln!("error: --threads must be >= 1");
            return 2;
        }
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli.command)),
            Err(e) => {
                eprintln!("error: thread pool: {e}");
                return 3;
            }
        },
        None => execute(&cli.command),
    };
    match result {
        Ok(o) => {
            let written = match &out {
                Some(p) => std::fs::write(p, &o.text).map_err(|e| format!("cannot write {}: {e}", p.display())),
                None => {
                    print!("{}", o.text);
                    Ok(())
                }
            };
            if let Err(m) = written {
                eprintln!("error: {m}");
                return 2;
            }
            o.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
