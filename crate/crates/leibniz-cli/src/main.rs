//! `leibniz`: build catalog algebras, run individual checks, and run the
//! verification suite.
//!
//! Exit codes: 0 on success, 1 when a mathematical check fails, 2 on usage
//! or I/O errors. Set `LEIBNIZ_LOG=debug` for progress chatter.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use leibniz_core::derivations::{derivation_space, inner_derivations};
use leibniz_core::families::{build_with_mode, AlgebraDescriptor, Family};
use leibniz_core::json;
use leibniz_core::quotients::verify_nilradical_certificate;
use leibniz_core::series::{center, derived_series, is_nilpotent, is_solvable, lower_central_series, nil_index};
use leibniz_core::subspace::Subspace;
use leibniz_core::suite::{run_suite, SuiteConfig};
use leibniz_core::tensor::{Side, StructureTensor};
use leibniz_core::transforms::iso_witness_check;
use leibniz_core::Rational;

#[derive(Parser)]
#[command(name = "leibniz", version, about = "Exact verification tooling for a catalog of solvable Leibniz algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra from a family descriptor and emit algebra JSON.
    Build(BuildArgs),
    /// Run a check against algebra JSON input(s).
    Check(CheckArgs),
    /// Run the full verification suite.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Family tag (e.g. L2, G1, Gc2, RThm1Case1).
    #[arg(long)]
    family: Option<String>,
    /// Nilradical dimension.
    #[arg(long)]
    n: Option<usize>,
    /// Family parameter, repeatable: --param a=3/2 --param delta=-1
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Read the whole descriptor from a JSON file instead of flags.
    #[arg(long, conflicts_with_all = ["family", "n", "params"])]
    desc_file: Option<PathBuf>,
    /// Build with the verbatim transcription (no ledger patches).
    #[arg(long)]
    strict_transcription: bool,
    /// Output file (stdout when absent).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Leibniz,
    Series,
    Center,
    Derivations,
    Nilradical,
    Iso,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Both,
}

#[derive(Args)]
struct CheckArgs {
    /// What to check.
    #[arg(value_enum)]
    kind: CheckKind,
    /// Algebra JSON file(s); `iso` takes two.
    files: Vec<PathBuf>,
    /// Identity side for `leibniz`.
    #[arg(long, value_enum, default_value = "both")]
    side: SideArg,
    /// Candidate nilradical: subspace JSON file (for `nilradical`).
    #[arg(long)]
    candidate: Option<PathBuf>,
    /// Candidate nilradical: span of the first K basis vectors.
    #[arg(long, value_name = "K", conflicts_with = "candidate")]
    leading: Option<usize>,
    /// Isomorphism witness matrix JSON (for `iso`).
    #[arg(long)]
    map: Option<PathBuf>,
    /// Dump matrices in the report (for `derivations`).
    #[arg(long)]
    dump: bool,
    /// Emit the machine-readable JSON report on stdout.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 4)]
    n_min: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 20)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Disable ledger patches; report any exercised entries.
    #[arg(long)]
    strict_transcription: bool,
    /// Run suite items on a thread pool (deterministic output either way).
    #[arg(long)]
    parallel: bool,
}

fn debug_enabled() -> bool {
    matches!(
        std::env::var("LEIBNIZ_LOG").as_deref(),
        Ok("debug") | Ok("info")
    )
}

/// Prints to stdout, tolerating a closed pipe (e.g. `leibniz build | head`).
fn emit(text: impl std::fmt::Display) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn usage_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn read_algebra(path: &PathBuf) -> Result<StructureTensor, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    json::algebra_from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_descriptor(args: &BuildArgs) -> Result<AlgebraDescriptor, String> {
    if let Some(path) = &args.desc_file {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        return serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()));
    }
    let family = args
        .family
        .as_deref()
        .ok_or("--family is required without --desc-file")?;
    let family = Family::from_str(family).map_err(|e| e.to_string())?;
    let n = args.n.ok_or("--n is required without --desc-file")?;
    let mut params = BTreeMap::new();
    for p in &args.params {
        let (name, value) = p
            .split_once('=')
            .ok_or_else(|| format!("bad --param {p:?}, expected NAME=VALUE"))?;
        let value: Rational = value.parse().map_err(|e| format!("{p:?}: {e}"))?;
        params.insert(name.trim().to_string(), value);
    }
    Ok(AlgebraDescriptor { family, n, params })
}

fn cmd_build(args: &BuildArgs) -> ExitCode {
    let desc = match parse_descriptor(args) {
        Ok(d) => d,
        Err(e) => return usage_err(e),
    };
    let tensor = match build_with_mode(&desc, args.strict_transcription) {
        Ok(t) => t,
        Err(e) => return usage_err(e),
    };
    if debug_enabled() {
        eprintln!(
            "built {} at n={} (dim {}, {} nonzero brackets)",
            desc.family,
            desc.n,
            tensor.dim(),
            tensor.nonzero_brackets()
        );
    }
    let payload = json::algebra_to_string(&tensor);
    match &args.output {
        None => emit(&payload),
        Some(path) => {
            if let Err(e) = fs::write(path, payload + "\n") {
                return usage_err(format!("{}: {e}", path.display()));
            }
        }
    }
    ExitCode::SUCCESS
}

fn one_file(files: &[PathBuf]) -> Result<&PathBuf, String> {
    match files {
        [f] => Ok(f),
        _ => Err("expected exactly one algebra file".into()),
    }
}

fn check_leibniz(args: &CheckArgs) -> Result<(bool, serde_json::Value, String), String> {
    let t = read_algebra(one_file(&args.files)?)?;
    let sides: &[Side] = match args.side {
        SideArg::Left => &[Side::Left],
        SideArg::Right => &[Side::Right],
        SideArg::Both => &[Side::Right, Side::Left],
    };
    let mut human = String::new();
    let mut report = serde_json::Map::new();
    let mut ok = true;
    for side in sides {
        let violations = t.check_leibniz(*side);
        human.push_str(&format!(
            "{} identity: {}\n",
            side.name(),
            if violations.is_empty() {
                "holds".to_string()
            } else {
                format!("{} violating basis triples", violations.len())
            }
        ));
        for v in violations.iter().take(5) {
            human.push_str(&format!(
                "  triple {:?}: lhs {:?} vs rhs {:?}\n",
                v.triple,
                v.lhs.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                v.rhs.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            ));
        }
        ok &= violations.is_empty();
        report.insert(
            format!("{}_violations", side.name()),
            serde_json::Value::from(violations.len()),
        );
    }
    Ok((ok, serde_json::Value::Object(report), human))
}

fn series_json(t: &StructureTensor) -> serde_json::Value {
    let ds = derived_series(t);
    let ls = lower_central_series(t);
    serde_json::json!({
        "ds_dims": ds.dims,
        "ls_dims": ls.dims,
        "ls_stabilized": ls.stabilized,
        "nilpotent": is_nilpotent(t),
        "solvable": is_solvable(t),
        "nil_index": nil_index(t),
    })
}

fn check_series(args: &CheckArgs) -> Result<(bool, serde_json::Value, String), String> {
    let t = read_algebra(one_file(&args.files)?)?;
    let v = series_json(&t);
    let human = format!(
        "DS {:?}\nLS {:?}{}\nnilpotent: {}, solvable: {}\n",
        v["ds_dims"],
        v["ls_dims"],
        if v["ls_stabilized"].as_bool() == Some(true) {
            " (stabilized)"
        } else {
            ""
        },
        v["nilpotent"],
        v["solvable"],
    );
    Ok((true, v, human))
}

fn check_center(args: &CheckArgs) -> Result<(bool, serde_json::Value, String), String> {
    let t = read_algebra(one_file(&args.files)?)?;
    let c = center(&t);
    let human = format!("center dimension {}\n", c.dim());
    Ok((
        true,
        serde_json::json!({"dim": c.dim(), "basis": json::subspace_to_json(&c)}),
        human,
    ))
}

fn check_derivations(args: &CheckArgs) -> Result<(bool, serde_json::Value, String), String> {
    let t = read_algebra(one_file(&args.files)?)?;
    let space = derivation_space(&t);
    let mut human = format!("derivation space dimension {}\n", space.dim());
    let mut report = serde_json::json!({"dim": space.dim()});
    for (side, label) in [(Side::Right, "right"), (Side::Left, "left")] {
        if let Ok(inner) = inner_derivations(&t, side) {
            human.push_str(&format!("inner ({label}) dimension {}\n", inner.dim()));
            report[format!("inner_{label}_dim")] = serde_json::Value::from(inner.dim());
        }
    }
    if args.dump {
        report["basis"] = serde_json::Value::Array(
            space.basis.iter().map(json::map_to_json).collect(),
        );
    }
    Ok((true, report, human))
}

fn check_nilradical(args: &CheckArgs) -> Result<(bool, serde_json::Value, String), String> {
    let t = read_algebra(one_file(&args.files)?)?;
    let candidate = if let Some(path) = &args.candidate {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        json::subspace_from_str(&text).map_err(|e| e.to_string())?
    } else if let Some(k) = args.leading {
        if k > t.dim() {
            return Err(format!("--leading {k} exceeds algebra dimension {}", t.dim()));
        }
        let idx: Vec<usize> = (1..=k).collect();
        Subspace::span_basis(t.dim(), &idx)
    } else {
        return Err("nilradical check needs --candidate FILE or --leading K".into());
    };
    let cert = verify_nilradical_certificate(&t, &candidate).map_err(|e| e.to_string())?;
    let ok = cert.passes();
    let human = format!(
        "ideal: {}, nilpotent: {}, complement non-nilpotent: {}, dim bound: {}\nnote: {}\n",
        cert.checks.is_ideal,
        cert.checks.is_nilpotent_subalgebra,
        cert.checks.complement_nonnilpotent,
        cert.dim_bound_holds,
        cert.maximality_note,
    );
    let report = serde_json::to_value(&cert).map_err(|e| e.to_string())?;
    Ok((ok, report, human))
}

fn check_iso(args: &CheckArgs) -> Result<(bool, serde_json::Value, String), String> {
    let (fa, fb) = match args.files.as_slice() {
        [a, b] => (a, b),
        _ => return Err("iso check takes exactly two algebra files".into()),
    };
    let map_path = args.map.as_ref().ok_or("iso check needs --map FILE")?;
    let a = read_algebra(fa)?;
    let b = read_algebra(fb)?;
    let text = fs::read_to_string(map_path).map_err(|e| format!("{}: {e}", map_path.display()))?;
    let p = json::map_from_str(&text).map_err(|e| e.to_string())?;
    let ok = iso_witness_check(&a, &b, &p).map_err(|e| e.to_string())?;
    let human = format!(
        "witness {} the bracket tables\n",
        if ok { "matches" } else { "does not match" }
    );
    Ok((ok, serde_json::json!({"isomorphism_witness": ok}), human))
}

fn cmd_check(args: &CheckArgs) -> ExitCode {
    let result = match args.kind {
        CheckKind::Leibniz => check_leibniz(args),
        CheckKind::Series => check_series(args),
        CheckKind::Center => check_center(args),
        CheckKind::Derivations => check_derivations(args),
        CheckKind::Nilradical => check_nilradical(args),
        CheckKind::Iso => check_iso(args),
    };
    match result {
        Err(e) => usage_err(e),
        Ok((ok, report, human)) => {
            if args.json {
                emit(serde_json::to_string_pretty(&report).expect("serialization cannot fail"));
            } else {
                emit(human.trim_end());
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn cmd_suite(args: &SuiteArgs) -> ExitCode {
    let config = SuiteConfig {
        n_min: args.n_min,
        n_max: args.n_max,
        samples_per_family: args.samples,
        seed: args.seed,
        strict_transcription: args.strict_transcription,
        parallel: args.parallel,
    };
    if debug_enabled() {
        eprintln!(
            "running suite: n in [{}, {}], {} samples per family, seed {}",
            config.n_min, config.n_max, config.samples_per_family, config.seed
        );
    }
    let report = match run_suite(&config) {
        Ok(r) => r,
        Err(e) => return usage_err(e),
    };
    for line in report.render_lines() {
        emit(&line);
    }
    if args.strict_transcription {
        if report.exercised_patches.is_empty() {
            emit("strict transcription: no patch ledger entries exercised");
        } else {
            for p in &report.exercised_patches {
                emit(format!("patch exercised: {p}"));
            }
        }
    }
    if report.all_passed() {
        emit("all criteria passed");
        ExitCode::SUCCESS
    } else {
        emit("suite FAILED");
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Check(args) => cmd_check(args),
        Command::Suite(args) => cmd_suite(args),
    }
}
