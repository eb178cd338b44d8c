//! Command-line front end: argument parsing, dispatch and output.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::constructions::build_so2_semidirect;
use crate::error::Error;
use crate::flag::{Family, Flag};
use crate::linalg::primitive;
use crate::lie::{center, survey, unipotent_center_dim, SamplingConfig, StabilityVerdict, DEFAULT_SEED};
use crate::report::{to_csv, to_json};
use crate::scalar::to_fraction_string;
use crate::verify::{
    check_fixture_bases, evaluate, run_sweep, AlgebraKind, Check, InstanceRecord, ReportConfig, SweepConfig, Target,
    TheoremReport,
};

#[derive(Parser, Debug)]
#[command(name = "liestab", version, about = "Exact coadjoint invariants of flag-stabilizer Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Index: minimal stabilizer dimension of a linear form.
    Index(Query),
    /// Cartan–Duflo rank: torus dimension of a strongly regular stabilizer.
    Rank(Query),
    /// Basis of the stabilizer of a strongly regular sampled form.
    Stabilizer(Query),
    /// Whether some linear form is stable.
    Stable(Query),
    /// Whether the algebra is quasi-reductive.
    Quasired(Query),
    /// Compare computed invariants with the closed-form predictions over all flags.
    Sweep(SweepArgs),
    /// Check the closed-form stabilizer bases of the explicit fixture forms.
    Fixture(FixtureArgs),
    /// Invariants of so(2) ⋉ K², stable but not quasi-reductive.
    ExampleSo2(ExampleArgs),
}

#[derive(Args, Debug)]
struct TargetArgs {
    /// Algebra family: rv, pv or gl.
    #[arg(long, value_parser = parse_kind)]
    family: AlgebraKind,
    /// Flag dimensions, strictly increasing, e.g. 1,3,4.
    #[arg(long, value_parser = parse_flag)]
    flag: Flag,
    /// Ambient dimension; required for pv, optional (and equal to the last flag dimension) otherwise.
    #[arg(long)]
    q: Option<usize>,
}

#[derive(Args, Debug)]
struct SamplingArgs {
    /// Random forms per sampling round.
    #[arg(long, default_value_t = 5)]
    trials: usize,
    /// Base seed; each instance derives its own from it.
    #[arg(long, env = "LIESTAB_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Coefficients of random forms lie in [-N, N].
    #[arg(long, default_value_t = 100)]
    coeff_bound: u64,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Write a JSON report to PATH ("-" for stdout).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write a CSV report to PATH ("-" for stdout).
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Query {
    #[command(flatten)]
    target: TargetArgs,
    #[command(flatten)]
    sampling: SamplingArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Family to sweep: rv or pv.
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Largest ambient dimension (dim E for pv, dim V for rv).
    #[arg(long = "max-q", visible_alias = "max-dim", value_name = "N")]
    max_ambient: usize,
    /// Comma-separated checks: index, rank, stable, quasired, unip, stab-basis, or all.
    #[arg(long, default_value = "index,rank,quasired,stable,unip", value_parser = parse_checks)]
    checks: BTreeSet<Check>,
    #[command(flatten)]
    sampling: SamplingArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct FixtureArgs {
    /// Fixture family: rv or pv.
    #[arg(long, default_value = "pv", value_parser = parse_family)]
    family: Family,
    /// Check every p from 2 up to this value.
    #[arg(long, default_value_t = 3)]
    p_max: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct ExampleArgs {
    #[command(flatten)]
    sampling: SamplingArgs,
    /// Write the invariants as JSON to PATH ("-" for stdout).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

fn parse_kind(s: &str) -> Result<AlgebraKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    match s.to_ascii_lowercase().as_str() {
        "rv" => Ok(Family::RV),
        "pv" => Ok(Family::PV),
        _ => Err(format!("unknown family '{s}' (expected rv or pv)")),
    }
}

fn parse_flag(s: &str) -> Result<Flag, String> {
    s.parse().map_err(|e: Error| format!("{e}; expected strictly increasing positive integers such as 1,3,4"))
}

fn parse_checks(s: &str) -> Result<BTreeSet<Check>, String> {
    Check::parse_list(s).map_err(|e| e.to_string())
}

/// Exit code plus message.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Compute(_) => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidFlag(_) | Error::NonIsotropicFlag { .. } | Error::InvalidParameter(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Compute(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Compute(format!("cannot write output: {e}"))
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut stdout = std::io::stdout().lock();
    match dispatch(cli.command, &mut stdout) {
        Ok(()) => 0,
        Err(f) => {
            let (Failure::Usage(m) | Failure::Compute(m)) = &f;
            eprintln!("error: {m}");
            f.code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Index(q) => query(q, "index", &[Check::Index], out, |r| show(r.computed.index)),
        Command::Rank(q) => query(q, "rank", &[Check::RankZero], out, |r| show(r.computed.rank)),
        Command::Quasired(q) => query(q, "quasired", &[Check::QuasiReductive], out, |r| show(r.computed.quasired)),
        Command::Stable(q) => query(q, "stable", &[Check::Stable], out, |r| {
            r.computed.stable.map(|b| b.to_string()).ok_or_else(|| {
                Failure::Compute(format!(
                    "{}; retry with a larger --trials or another --seed",
                    r.notes.first().map_or("stability undecided", String::as_str)
                ))
            })
        }),
        Command::Stabilizer(q) => stabilizer(q, out),
        Command::Sweep(a) => sweep(a, out),
        Command::Fixture(a) => fixture(a, out),
        Command::ExampleSo2(a) => example_so2(a, out),
    }
}

fn show<T: ToString>(v: Option<T>) -> Result<String, Failure> {
    v.map(|x| x.to_string()).ok_or_else(|| Failure::Compute("invariant was not computed".into()))
}

fn sampling(a: &SamplingArgs) -> Result<SamplingConfig, Failure> {
    let cfg = SamplingConfig { seed: a.seed, trials: a.trials, coeff_bound: a.coeff_bound };
    cfg.validate().map_err(|e| Failure::Usage(format!("{e} (--trials and --coeff-bound must be positive)")))?;
    Ok(cfg)
}

fn target(a: &TargetArgs) -> Result<Target, Failure> {
    match a.family {
        AlgebraKind::Pv => {
            let q = a.q.ok_or_else(|| Failure::Usage("--q is required for --family pv".into()))?;
            Target::pv(q, a.flag.clone()).map_err(|e| match e {
                Error::NonIsotropicFlag { dim, q, max } => Failure::Usage(format!(
                    "--flag ends at {dim}, but an isotropic flag in --q {q} has dimension at most {max}"
                )),
                other => Failure::Usage(format!("--q: {other}")),
            })
        }
        kind => {
            let n = a.flag.total();
            if let Some(q) = a.q.filter(|&q| q != n) {
                return Err(Failure::Usage(format!("--q {q} differs from the last --flag dimension {n}")));
            }
            Ok(Target { kind, q: n, flag: a.flag.clone() })
        }
    }
}

fn family_of(t: &Target) -> Option<Family> {
    match t.kind {
        AlgebraKind::Rv => Some(Family::RV),
        AlgebraKind::Pv => Some(Family::PV),
        AlgebraKind::Gl => None,
    }
}

fn report_config(kind: &str, family: Option<Family>, max_ambient: Option<usize>, s: &SamplingConfig, checks: &BTreeSet<Check>) -> ReportConfig {
    ReportConfig {
        kind: kind.into(),
        family,
        max_ambient,
        seed: s.seed,
        trials: s.trials,
        coeff_bound: s.coeff_bound,
        checks: checks.iter().copied().collect(),
    }
}

fn open(path: &PathBuf, out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    if path.as_os_str() == "-" {
        out.write_all(text.as_bytes())?;
    } else {
        std::fs::write(path, text)
            .map_err(|e| Failure::Compute(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

/// Writes the requested files; returns whether stdout was taken by one of them.
fn emit(report: &TheoremReport, o: &OutputArgs, out: &mut dyn Write) -> Result<bool, Failure> {
    let mut took = false;
    if let Some(p) = &o.json {
        open(p, out, &to_json(report)?)?;
        took |= p.as_os_str() == "-";
    }
    if let Some(p) = &o.csv {
        open(p, out, &to_csv(report)?)?;
        took |= p.as_os_str() == "-";
    }
    Ok(took)
}

fn failed(rec: &InstanceRecord) -> Option<Failure> {
    rec.notes
        .iter()
        .find(|n| n.starts_with("computation failed"))
        .map(|n| Failure::Compute(n.clone()))
}

fn query(
    q: Query,
    name: &str,
    checks: &[Check],
    out: &mut dyn Write,
    value: impl Fn(&InstanceRecord) -> Result<String, Failure>,
) -> Result<(), Failure> {
    let t = target(&q.target)?;
    let s = sampling(&q.sampling)?;
    let checks: BTreeSet<Check> = checks.iter().copied().collect();
    let rec = evaluate(&t, &checks, &s);
    if let Some(f) = failed(&rec) {
        return Err(f);
    }
    let v = value(&rec)?;
    let report = TheoremReport::new(report_config(name, family_of(&t), None, &s, &checks), vec![rec]);
    if !emit(&report, &q.output, out)? {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct StabilizerOut {
    family: &'static str,
    q: usize,
    flag: Flag,
    seed: u64,
    dim: usize,
    form: Vec<String>,
    stabilizer_dim: usize,
    torus_dim: usize,
    /// Coordinates in the algebra basis, each vector scaled to coprime integers.
    basis: Vec<Vec<String>>,
}

fn stabilizer(q: Query, out: &mut dyn Write) -> Result<(), Failure> {
    if q.output.csv.is_some() {
        return Err(Failure::Usage("--csv is not available for stabilizer; use --json".into()));
    }
    let t = target(&q.target)?;
    let base = sampling(&q.sampling)?;
    let s = SamplingConfig { seed: t.seed(base.seed), ..base };
    let l = t.build()?;
    let sv = survey(&l, &s)?;
    let sr = sv.strongly_regular();
    let fr = |v: &[crate::Scalar]| v.iter().map(to_fraction_string).collect::<Vec<_>>();
    let o = StabilizerOut {
        family: t.family_name(),
        q: t.q,
        flag: t.flag.clone(),
        seed: base.seed,
        dim: l.dim(),
        form: fr(&sr.form.coeffs),
        stabilizer_dim: sr.stabilizer.dim(),
        torus_dim: sr.torus_dim,
        basis: sr.stabilizer.basis_vectors().iter().map(|v| fr(&primitive(v))).collect(),
    };
    if let Some(p) = &q.output.json {
        let mut text = serde_json::to_string_pretty(&o).map_err(Error::from)?;
        text.push('\n');
        open(p, out, &text)?;
        if p.as_os_str() == "-" {
            return Ok(());
        }
    }
    writeln!(out, "{} q={} flag={} dim={}", o.family, o.q, o.flag, o.dim)?;
    writeln!(out, "stabilizer dimension {} (torus {})", o.stabilizer_dim, o.torus_dim)?;
    for v in &o.basis {
        writeln!(out, "[{}]", v.join(", "))?;
    }
    Ok(())
}

fn sweep(a: SweepArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let s = sampling(&a.sampling)?;
    let cfg = SweepConfig { family: a.family, max_ambient: a.max_ambient, sampling: s, checks: a.checks };
    cfg.validate().map_err(|e| Failure::Usage(format!("--max-q: {e}")))?;
    let report = run_sweep(&cfg)?;
    if !emit(&report, &a.output, out)? {
        print_summary(&report, out)?;
    }
    Ok(())
}

fn print_summary(r: &TheoremReport, out: &mut dyn Write) -> Result<(), Failure> {
    let s = &r.summary;
    writeln!(
        out,
        "{} instances: {} agree, {} disagree, {} inconclusive",
        s.total, s.agree, s.disagree, s.inconclusive
    )?;
    for d in &r.discrepancies {
        writeln!(
            out,
            "discrepancy {} q={} flag={} {}: predicted {}, computed {}",
            d.family, d.q, d.flag, d.check, d.predicted, d.computed
        )?;
    }
    Ok(())
}

fn fixture(a: FixtureArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let report = check_fixture_bases(a.family, a.p_max).map_err(|e| Failure::Usage(format!("--p-max: {e}")))?;
    if !emit(&report, &a.output, out)? {
        for rec in &report.instances {
            writeln!(
                out,
                "{} q={} flag={} ({}): stabilizer dim {}, closed-form basis {}",
                rec.family,
                rec.q,
                rec.flag,
                rec.notes.first().map_or("", String::as_str),
                rec.computed.stab_dim.map_or("?".into(), |d| d.to_string()),
                if rec.computed.basis_match == Some(true) { "matches" } else { "DIFFERS" },
            )?;
        }
        print_summary(&report, out)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct So2Out {
    dim: usize,
    index: usize,
    rank: usize,
    center_dim: usize,
    quasi_reductive: bool,
    stability: StabilityVerdict,
}

fn example_so2(a: ExampleArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let s = sampling(&a.sampling)?;
    let l = build_so2_semidirect();
    let sv = survey(&l, &s)?;
    let o = So2Out {
        dim: l.dim(),
        index: sv.index,
        rank: sv.rank(),
        center_dim: center(&l).dim(),
        quasi_reductive: sv.index == sv.rank() + unipotent_center_dim(&l)?,
        stability: sv.stability,
    };
    if let Some(p) = &a.json {
        let mut text = serde_json::to_string_pretty(&o).map_err(Error::from)?;
        text.push('\n');
        open(p, out, &text)?;
        if p.as_os_str() == "-" {
            return Ok(());
        }
    }
    let stab = serde_json::to_value(o.stability).map_err(Error::from)?;
    writeln!(out, "dim {}", o.dim)?;
    writeln!(out, "index {}", o.index)?;
    writeln!(out, "rank {}", o.rank)?;
    writeln!(out, "center {}", o.center_dim)?;
    writeln!(out, "quasi-reductive {}", o.quasi_reductive)?;
    writeln!(out, "stability {}", stab.as_str().unwrap_or_default())?;
    Ok(())
}
