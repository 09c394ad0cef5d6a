use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use plof_cli::commands::{self, Outcome};

/// Exact computation with piecewise-linear homeomorphisms of [0, 1]:
/// orbital analysis, Thompson's group F certificates, word equality, a
/// certificate-producing F-pair extractor and SVG rendering.
#[derive(Parser)]
#[command(name = "plof", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the orbitals of the maps in a file, classified for a pair.
    Analyze {
        /// Map file (JSON).
        input: PathBuf,
        /// Names of the generators to analyze; all maps when omitted.
        names: Vec<String>,
    },
    /// Run the F-extraction pipeline on the maps in a file.
    Extract {
        /// Map file (JSON); all maps in it are taken as generators.
        input: PathBuf,
        /// Witness word, e.g. "g1"; searched for when omitted.
        #[arg(long)]
        witness: Option<String>,
        /// Search depth for witness, conjugator and purification searches.
        #[arg(long, default_value_t = 8)]
        depth: usize,
        /// Write the full extraction trace (JSON) here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether two named maps generate a copy of F.
    Verify {
        input: PathBuf,
        p: String,
        q: String,
    },
    /// Decide equality of two words in F, e.g. "g0^-1 g1 g0" vs "g2".
    WordEq { u: String, v: String },
    /// Render named maps as an SVG graph on the unit square.
    Render {
        input: PathBuf,
        /// Names of the maps to draw; all maps when omitted.
        names: Vec<String>,
        /// Output SVG path.
        #[arg(long)]
        out: PathBuf,
        /// Image size as WIDTHxHEIGHT pixels.
        #[arg(long, default_value = "600x600")]
        size: String,
    },
}

fn read_input(path: &PathBuf) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome {
        code: 2,
        output: format!("error: cannot read {}: {}", path.display(), e),
        artifact: None,
    })
}

fn write_artifact(path: &PathBuf, artifact: &str) -> Result<(), Outcome> {
    std::fs::write(path, artifact).map_err(|e| Outcome {
        code: 1,
        output: format!("error: cannot write {}: {}", path.display(), e),
        artifact: None,
    })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Analyze { input, names } => match read_input(&input) {
            Ok(text) => commands::run_analyze(&text, &names),
            Err(o) => o,
        },
        Command::Extract {
            input,
            witness,
            depth,
            out,
        } => {
            let text = match read_input(&input) {
                Ok(t) => t,
                Err(o) => return o,
            };
            let mut outcome = commands::run_extract(&text, witness.as_deref(), depth);
            if outcome.code == 0 {
                if let (Some(path), Some(artifact)) = (&out, &outcome.artifact) {
                    if let Err(o) = write_artifact(path, artifact) {
                        return o;
                    }
                    outcome.output.push_str(&format!(
                        "trace written to {}\n",
                        path.display()
                    ));
                }
            }
            outcome
        }
        Command::Verify { input, p, q } => match read_input(&input) {
            Ok(text) => commands::run_verify(&text, &p, &q),
            Err(o) => o,
        },
        Command::WordEq { u, v } => commands::run_word_eq(&u, &v),
        Command::Render {
            input,
            names,
            out,
            size,
        } => {
            let text = match read_input(&input) {
                Ok(t) => t,
                Err(o) => return o,
            };
            let (width, height) = match commands::parse_size(&size) {
                Ok(wh) => wh,
                Err(e) => {
                    return Outcome {
                        code: e.exit_code(),
                        output: format!("error: {}", e.message()),
                        artifact: None,
                    }
                }
            };
            let outcome = commands::run_render(&text, &names, width, height);
            if outcome.code == 0 {
                if let Some(artifact) = &outcome.artifact {
                    if let Err(o) = write_artifact(&out, artifact) {
                        return o;
                    }
                }
            }
            outcome
        }
    }
}

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    print!("{}", outcome.output);
    ExitCode::from(outcome.code as u8)
}
