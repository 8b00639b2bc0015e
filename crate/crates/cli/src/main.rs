//! `quasigor`: reflection data, class groups, Brauer character series and the
//! quasi-Gorenstein verdict for finite linear groups given as JSON specs.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use quasigor::engine::{self, fmt_factors, report_json, report_text, GroupSpec, SubgroupChoice};

#[derive(Parser)]
#[command(name = "quasigor", version, about = "Invariant rings of finite linear groups: class groups, Brauer series, Gorenstein verdicts")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Subgroup {
    Auto,
    W,
    Wtilde,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis with the quasi-Gorenstein verdict.
    Analyze {
        spec: PathBuf,
        /// Degree bound of the polynomiality probe.
        #[arg(long)]
        max_degree: Option<u32>,
        /// Subgroup whose invariants play the role of S.
        #[arg(long, value_enum)]
        subgroup: Option<Subgroup>,
        /// Treat the probed invariant ring as a polynomial ring.
        #[arg(long)]
        assert_polynomial: bool,
    },
    /// Brauer character series of one element or all of them, and the Molien series.
    Series {
        spec: PathBuf,
        #[arg(long)]
        element: Option<usize>,
    },
    /// Divisor class group as characters of G trivial on W, with the transversal check.
    Classgroup {
        spec: PathBuf,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Bases of the invariants of each degree.
    Invariants {
        spec: PathBuf,
        #[arg(long)]
        max_degree: u32,
    },
    /// Bases of the semi-invariants of a character (an index, or `det`).
    Semiinv {
        spec: PathBuf,
        #[arg(long)]
        character: String,
        #[arg(long)]
        max_degree: u32,
    },
    /// Duality, λ = det⁻¹, trace compatibility and Molien-oracle suites.
    CheckIdentities {
        spec: PathBuf,
        #[arg(long)]
        max_degree: Option<u32>,
    },
}

/// Failure classes mapped to exit codes 1 and 2.
enum Failure {
    Input(anyhow::Error),
    Internal(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        let internal = e.chain().any(|c| matches!(c.downcast_ref::<quasigor::Error>(), Some(quasigor::Error::Internal(_))));
        if internal {
            Failure::Internal(e)
        } else {
            Failure::Input(e)
        }
    }
}

fn load(path: &Path) -> Result<GroupSpec> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    GroupSpec::from_json(&text).with_context(|| format!("invalid spec {}", path.display()))
}

fn emit(cli: &Cli, text: String) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn run(cli: &Cli) -> std::result::Result<(), Failure> {
    let out = match &cli.command {
        Command::Analyze { spec, max_degree, subgroup, assert_polynomial } => {
            let mut s = load(spec)?;
            if max_degree.is_some() {
                s.options.max_degree = *max_degree;
            }
            if let Some(sub) = subgroup {
                s.options.subgroup = match sub {
                    Subgroup::Auto => SubgroupChoice::Auto,
                    Subgroup::W => SubgroupChoice::W,
                    Subgroup::Wtilde => SubgroupChoice::Wtilde,
                };
            }
            s.options.assert_polynomial |= assert_polynomial;
            let r = engine::quasi_gorenstein_verdict(&s).map_err(anyhow::Error::from)?;
            if cli.json {
                report_json(&r)
            } else {
                report_text(&r)
            }
        }
        Command::Series { spec, element } => {
            let r = engine::series_report(&load(spec)?, *element).map_err(anyhow::Error::from)?;
            if cli.json {
                serde_json::to_string_pretty(&r).context("serializing report")?
            } else {
                let mut s = String::new();
                for e in &r.elements {
                    let series = e.series.as_deref().unwrap_or("p-singular, no Brauer series");
                    let _ = writeln!(s, "element {} (order {}): {series}", e.element, e.order);
                }
                if let Some(m) = &r.molien {
                    let _ = writeln!(s, "Molien series: {m}");
                }
                s
            }
        }
        Command::Classgroup { spec, max_degree } => {
            let r = engine::classgroup_report(&load(spec)?, *max_degree).map_err(anyhow::Error::from)?;
            if cli.json {
                serde_json::to_string_pretty(&r).context("serializing report")?
            } else {
                format!(
                    "class group: {} (order {})\ntransversal check up to degree {}: {:?}\n",
                    fmt_factors(&r.class_group.invariant_factors),
                    r.class_group.order,
                    r.transversal.bound,
                    r.transversal.status
                )
            }
        }
        Command::Invariants { spec, max_degree } => {
            let r = engine::invariants_report(&load(spec)?, *max_degree).map_err(anyhow::Error::from)?;
            if cli.json {
                serde_json::to_string_pretty(&r).context("serializing report")?
            } else {
                let mut s = String::new();
                for d in &r.degrees {
                    let _ = writeln!(s, "degree {} (dim {}): {}", d.degree, d.basis.len(), d.basis.join(", "));
                }
                s
            }
        }
        Command::Semiinv { spec, character, max_degree } => {
            let s = load(spec)?;
            let index = if character == "det" {
                engine::det_character_index(&s).map_err(anyhow::Error::from)?
            } else {
                character.parse::<usize>().with_context(|| format!("bad character index {character:?}"))?
            };
            let r = engine::semiinv_report(&s, index, *max_degree).map_err(anyhow::Error::from)?;
            if cli.json {
                serde_json::to_string_pretty(&r).context("serializing report")?
            } else {
                let mut out = String::new();
                for d in &r.degrees {
                    let _ = writeln!(out, "degree {} (dim {}): {}", d.degree, d.basis.len(), d.basis.join(", "));
                }
                match (&r.dchi, r.free) {
                    (Some(dchi), Some(free)) => {
                        let _ = writeln!(out, "d_chi up to degree {}: {dchi}; free: {free}", r.max_degree);
                    }
                    _ => {
                        let _ = writeln!(out, "no semi-invariants up to degree {}", r.max_degree);
                    }
                }
                out
            }
        }
        Command::CheckIdentities { spec, max_degree } => {
            let s = load(spec)?;
            let r = engine::identity_report(&s, *max_degree).map_err(anyhow::Error::from)?;
            let text = if cli.json {
                serde_json::to_string_pretty(&r).context("serializing report")?
            } else {
                let mut out = String::new();
                for (name, suite) in [
                    ("duality", &r.duality),
                    ("lambda = det^-1", &r.lambda),
                    ("traces", &r.traces),
                    ("molien", &r.molien),
                    ("isotypic", &r.isotypic),
                ] {
                    match &suite.skipped {
                        Some(why) => {
                            let _ = writeln!(out, "{name}: skipped ({why})");
                        }
                        None => {
                            let _ = writeln!(out, "{name}: {}/{} passed", suite.passed, suite.checked);
                        }
                    }
                }
                out
            };
            emit(cli, with_newline(text))?;
            if !r.all_pass {
                return Err(Failure::Internal(anyhow::anyhow!("identity suites failed (degree bound {})", r.bound)));
            }
            return Ok(());
        }
    };
    emit(cli, with_newline(out))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(2)
        }
    }
}
