//! Command line front end for instanton-core.
//!
//! Exit codes: 0 when the command succeeds and every check passes, 1 when a
//! well-formed input fails a mathematical verification (a subspace that is
//! not a member, a monad whose identities break, a non-simple monad), 2 for
//! malformed input or configuration.

mod schema;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use instanton_core::cohomology::natural_cohomology_table;
use instanton_core::moduli::{
    membership, moduli_dimension, random_member_subspace, stabilizer_dim, trace_invariants_pair,
    x1_invariants, MembershipMode, MembershipVerdict, ModuliContext,
};
use instanton_core::monad::{build_monad, hom_space_dim, kernel_sections, verify_monad};
use instanton_core::linalg::Matrix;

use schema::{
    rats_to_strings, GrassFile, InvariantsFile, MonadFile, SubspaceFile,
};

#[derive(Parser)]
#[command(name = "instanton", version, about = "Generate, verify and analyze special instanton monads")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Report {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a subspace that passes the membership test and write it as JSON.
    GenU {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Membership trials per candidate (only probed for k >= 2).
        #[arg(long, default_value_t = 8)]
        trials: usize,
        /// Write the subspace JSON to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a subspace file lies in the moduli space.
    Membership {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        report: Report,
    },
    /// Build the monad matrices for a subspace file (honors its `g` frame).
    BuildMonad {
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the monad JSON to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the monad identities of a monad file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Sample points for the two rank checks.
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        report: Report,
    },
    /// Dimension of the endomorphism space of a monad; 1 means simple.
    Simplicity {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        report: Report,
    },
    /// Natural cohomology table of the bundle for given n, k.
    Cohomology {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        report: Report,
    },
    /// Moduli dimension with its fiber/base decomposition.
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        report: Report,
    },
    /// Trace invariants of a pair or quadruple of 2x2 matrices.
    Invariants {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        report: Report,
    },
    /// Stabilizer dimension of a pair of planes of binary forms.
    Stabilizer {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        report: Report,
    },
    /// Dimension of the space of linear sections annihilated by b(z).
    KernelSections {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        report: Report,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(target: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match target {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, String> {
    let raw = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&raw).map_err(|e| format!("bad JSON in {}: {e}", path.display()))
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::GenU { n, k, seed, trials, out } => {
            let ctx = ModuliContext::new(n, k).map_err(|e| e.to_string())?;
            let u = match random_member_subspace(&ctx, trials, seed) {
                Ok(u) => u,
                Err(e) => {
                    eprintln!("no member found: {e}");
                    return Ok(1);
                }
            };
            let file = SubspaceFile::from_core(&u);
            emit(out.as_ref(), &pretty(&serde_json::to_value(&file).expect("serializable")))?;
            Ok(0)
        }
        Command::Membership { input, trials, seed, report } => {
            let u = read_json::<SubspaceFile>(&input)?.subspace()?;
            let verdict = membership(&u, trials, seed).map_err(|e| e.to_string())?;
            let (text, code) = membership_report(&verdict, report.format);
            emit(report.out.as_ref(), &text)?;
            Ok(code)
        }
        Command::BuildMonad { input, out } => {
            let file: SubspaceFile = read_json(&input)?;
            let u = file.subspace()?;
            let g = file.frame()?;
            let m = build_monad(&u, g.as_ref()).map_err(|e| e.to_string())?;
            let mf = MonadFile::from_core(&m);
            emit(out.as_ref(), &pretty(&serde_json::to_value(&mf).expect("serializable")))?;
            Ok(0)
        }
        Command::Verify { input, trials, seed, report } => {
            let m = read_json::<MonadFile>(&input)?.monad()?;
            let r = verify_monad(&m, trials, seed).map_err(|e| e.to_string())?;
            let text = match report.format {
                Format::Json => pretty(&json!({
                    "composition_zero": r.composition_zero,
                    "p_surjective": r.p_surjective,
                    "i_injective": r.i_injective,
                    "samples": r.samples,
                    "is_monad": r.is_monad(),
                })),
                Format::Text => format!(
                    "composition_zero: {}\np_surjective: {}\ni_injective: {}\nsamples: {}\nmonad: {}",
                    r.composition_zero,
                    r.p_surjective,
                    r.i_injective,
                    r.samples,
                    if r.is_monad() { "PASS" } else { "FAIL" }
                ),
            };
            emit(report.out.as_ref(), &text)?;
            Ok(if r.is_monad() { 0 } else { 1 })
        }
        Command::Simplicity { input, report } => {
            let m = read_json::<MonadFile>(&input)?.monad()?;
            let dim = hom_space_dim(&m, &m).map_err(|e| e.to_string())?;
            let simple = dim == 1;
            let text = match report.format {
                Format::Json => pretty(&json!({ "hom_dim": dim, "simple": simple })),
                Format::Text => format!("hom_dim: {dim}\nsimple: {simple}"),
            };
            emit(report.out.as_ref(), &text)?;
            Ok(if simple { 0 } else { 1 })
        }
        Command::Cohomology { n, k, report } => {
            let ctx = ModuliContext::new(n, k).map_err(|e| e.to_string())?;
            let table = natural_cohomology_table(&ctx).map_err(|e| e.to_string())?;
            let text = match report.format {
                Format::Json => {
                    let entries: BTreeMap<String, u64> = table
                        .entries()
                        .iter()
                        .map(|((q, l), h)| (format!("{q},{l}"), *h))
                        .collect();
                    pretty(&json!({
                        "n": n,
                        "k": k,
                        "window": [table.window().0, table.window().1],
                        "entries": entries,
                    }))
                }
                Format::Text => {
                    let (lo, hi) = table.window();
                    let mut lines = vec![format!("window: {lo} <= l <= {hi}")];
                    for ((q, l), h) in table.entries() {
                        lines.push(format!("h^{q}(E({l})) = {h}"));
                    }
                    lines.push("all other entries in the window vanish".into());
                    lines.join("\n")
                }
            };
            emit(report.out.as_ref(), &text)?;
            Ok(0)
        }
        Command::Dim { n, k, report } => {
            let ctx = ModuliContext::new(n, k).map_err(|e| e.to_string())?;
            let d = moduli_dimension(&ctx);
            let text = match report.format {
                Format::Json => pretty(&json!({
                    "fiber": d.fiber,
                    "base": d.base,
                    "total": d.total,
                })),
                Format::Text => format!("{}\nfiber {} + base {}", d.total, d.fiber, d.base),
            };
            emit(report.out.as_ref(), &text)?;
            Ok(0)
        }
        Command::Invariants { input, report } => {
            let file: InvariantsFile = read_json(&input)?;
            let values = match (&file.pair, &file.quadruple) {
                (Some(pair), None) => {
                    let ms = InvariantsFile::matrices(pair, 2)?;
                    trace_invariants_pair(&ms[0], &ms[1]).map_err(|e| e.to_string())?.to_vec()
                }
                (None, Some(quad)) => {
                    let ms = InvariantsFile::matrices(quad, 4)?;
                    let b: [Matrix; 4] = [ms[0].clone(), ms[1].clone(), ms[2].clone(), ms[3].clone()];
                    x1_invariants(&b).map_err(|e| e.to_string())?.to_vec()
                }
                _ => return Err("provide exactly one of \"pair\" or \"quadruple\"".into()),
            };
            let strings = rats_to_strings(&values);
            let text = match report.format {
                Format::Json => pretty(&json!({ "invariants": strings })),
                Format::Text => strings.join(" "),
            };
            emit(report.out.as_ref(), &text)?;
            Ok(0)
        }
        Command::Stabilizer { input, report } => {
            let point = read_json::<GrassFile>(&input)?.point()?;
            let dim = stabilizer_dim(&point).map_err(|e| e.to_string())?;
            let text = match report.format {
                Format::Json => pretty(&json!({ "dim": dim })),
                Format::Text => format!("{dim}"),
            };
            emit(report.out.as_ref(), &text)?;
            Ok(0)
        }
        Command::KernelSections { input, report } => {
            let m = read_json::<MonadFile>(&input)?.monad()?;
            let sections = kernel_sections(&m).map_err(|e| e.to_string())?;
            let text = match report.format {
                Format::Json => pretty(&json!({ "dim": sections.dim() })),
                Format::Text => format!("{}", sections.dim()),
            };
            emit(report.out.as_ref(), &text)?;
            Ok(0)
        }
    }
}

fn membership_report(verdict: &MembershipVerdict, format: Format) -> (String, u8) {
    match verdict {
        MembershipVerdict::Member { mode, trials } => {
            let mode_name = match mode {
                MembershipMode::Exact => "exact",
                MembershipMode::Probabilistic => "probabilistic",
            };
            let text = match format {
                Format::Json => pretty(&json!({
                    "member": true,
                    "mode": mode_name,
                    "trials": trials,
                })),
                Format::Text => match mode {
                    MembershipMode::Exact => "Member (exact)".to_string(),
                    MembershipMode::Probabilistic => {
                        format!("Member (probabilistic, {trials} trials)")
                    }
                },
            };
            (text, 0)
        }
        MembershipVerdict::NotMember { witness, certificate } => {
            let text = match format {
                Format::Json => pretty(&json!({
                    "member": false,
                    "witness": witness.as_ref().map(|w| rats_to_strings(w.values())),
                    "certificate": certificate.as_ref().map(|c| rats_to_strings(c.coeffs())),
                })),
                Format::Text => {
                    let mut lines = vec!["NotMember".to_string()];
                    if let Some(w) = witness {
                        lines.push(format!("witness: {}", rats_to_strings(w.values()).join(" ")));
                    }
                    if let Some(c) = certificate {
                        lines.push(format!(
                            "certificate: {}",
                            rats_to_strings(c.coeffs()).join(" ")
                        ));
                    }
                    lines.join("\n")
                }
            };
            (text, 1)
        }
    }
}
