// SPDX-License-Identifier: Apache-2.0

//! `vgmask`: mask, verify, and inspect circuits from the command line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use vgmask::{
    build_y, circuit_to_json, circuit_unitary, emit_qasm, extract_view, mask_gates, mask_total,
    parse_circuit, phase_distance, topology_from_json, Circuit, CoverOptions, Error, RSet,
    Topology, ViewMode,
};

const EXIT_UNEQUAL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "vgmask",
    version,
    about = "Side-channel masking for quantum circuits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Gates,
    Total,
}

#[derive(Clone, Copy, ValueEnum)]
enum View {
    Total,
    Positional,
    #[value(name = "r-absent")]
    RAbsent,
    #[value(name = "r-positional")]
    RPositional,
}

#[derive(Subcommand)]
enum Command {
    /// Mask a circuit and print the depth report.
    Mask {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Topology JSON; required for total mode.
        #[arg(long)]
        topology: Option<PathBuf>,
        #[arg(long = "in")]
        input: PathBuf,
        /// Output circuit; `.json` writes JSON, anything else QASM.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Drop the trailing identity step of each covering template.
        #[arg(long)]
        elide_identity: bool,
    },
    /// Compare two circuits up to global phase.
    Verify {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Print a leakage view.
    Leak {
        #[arg(long, value_enum)]
        view: View,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Build the all-label identity circuit for a topology.
    Ycircuit {
        #[arg(long)]
        topology: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Depth and gate counts.
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

struct Failure {
    code: u8,
    kind: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundViolation { .. } | Error::DecompositionFailed(_) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            kind: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        kind: "io".into(),
        message: format!("{}: {e}", path.display()),
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        kind: "usage".into(),
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    let bytes = fs::read(path).map_err(|e| io_failure(path, e))?;
    String::from_utf8(bytes).map_err(|e| Failure {
        code: EXIT_INPUT,
        kind: "encoding".into(),
        message: format!("{}: {e}", path.display()),
    })
}

fn read_circuit(path: &Path) -> Result<Circuit, Failure> {
    Ok(parse_circuit(&read(path)?)?)
}

fn read_topology(path: &Path) -> Result<Topology, Failure> {
    Ok(topology_from_json(&read(path)?)?)
}

/// Writes through a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| io_failure(path, e))?;
    tmp.write_all(contents.as_bytes())
        .map_err(|e| io_failure(path, e))?;
    tmp.persist(path).map_err(|e| io_failure(path, e.error))?;
    Ok(())
}

fn render_circuit(c: &Circuit, path: &Path) -> Result<String, Failure> {
    if path.extension().is_some_and(|e| e == "json") {
        Ok(circuit_to_json(c))
    } else {
        Ok(emit_qasm(c)?)
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Mask {
            mode,
            topology,
            input,
            out,
            report,
            elide_identity,
        } => {
            let opts = CoverOptions {
                elide_trailing_identity: elide_identity,
            };
            let c = read_circuit(&input)?;
            let (masked, rep) = match mode {
                Mode::Gates => mask_gates(&c, opts)?,
                Mode::Total => {
                    let t = topology.ok_or_else(|| usage("--mode total requires --topology"))?;
                    mask_total(&c, &read_topology(&t)?, opts)?
                }
            };
            write_atomic(&out, &render_circuit(&masked, &out)?)?;
            let line = serde_json::to_string(&rep).expect("report serializes");
            if let Some(path) = report {
                write_atomic(&path, &format!("{line}\n"))?;
            }
            println!("{line}");
            Ok(0)
        }
        Command::Verify { a, b, tol } => {
            if tol.is_nan() || tol < 0.0 {
                return Err(usage("--tol must be a non-negative number"));
            }
            let ua = circuit_unitary::<f64>(&read_circuit(&a)?)?;
            let ub = circuit_unitary::<f64>(&read_circuit(&b)?)?;
            let d = phase_distance(&ua, &ub)?.value();
            let equal = d <= tol;
            let shown = if d.is_finite() {
                json!(d)
            } else {
                json!("inf")
            };
            println!(
                "{}",
                json!({ "phase_distance": shown, "tol": tol, "equal": equal })
            );
            Ok(if equal { 0 } else { EXIT_UNEQUAL })
        }
        Command::Leak { view, input } => {
            let mode = match view {
                View::Total => ViewMode::Total,
                View::Positional => ViewMode::Positional,
                View::RAbsent => ViewMode::RAbsent,
                View::RPositional => ViewMode::RPositional,
            };
            let c = read_circuit(&input)?;
            print!("{}", extract_view(&c, mode, RSet::VirtualZ).to_text());
            Ok(0)
        }
        Command::Ycircuit { topology, out } => {
            let t = read_topology(&topology)?;
            let y = build_y(&t);
            write_atomic(&out, &render_circuit(&y, &out)?)?;
            let delta = t.max_degree();
            println!(
                "{}",
                json!({ "p": y.depth(), "max_degree": delta, "bound": delta + 2 })
            );
            Ok(0)
        }
        Command::Stats { input } => {
            let c = read_circuit(&input)?;
            println!(
                "{}",
                json!({
                    "n": c.n,
                    "depth": c.depth(),
                    "gate_count": c.gate_count(),
                    "gate_counts": c.gate_counts(),
                })
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let message = e.to_string();
            let first = message
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            report(&usage(first));
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            report(&f);
            ExitCode::from(f.code)
        }
    }
}

fn report(f: &Failure) {
    eprintln!("{}", json!({ "error": f.kind, "message": f.message }));
}
