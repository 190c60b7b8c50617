//! Command-line harness binding the verification toolkit into reproducible
//! runs with machine-readable reports.
//!
//! Exit status contract: 0 — all checks pass; 1 — an inequality violation
//! (or oracle mismatch) was found; 2 — usage or configuration error.
//! Identical configurations produce byte-identical output.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bvineq::registry::{applicable_kinds, second_derivative};
use bvineq::report::{BoundReport, CSV_HEADER, CSV_SCHEMA_VERSION};
use bvineq::{
    baseline_mean_lp, baseline_mean_sup, builtin_registry, empirical_constant_search,
    grid_search_minimum, landau_check, midpoint_kernel_pnorm, minimize_landau_objective,
    ostrowski_sweep, quadrature, registry_from_json, registry_to_json, reverse_lp, reverse_sup,
    thm2_constant_lower_bound, verify_growth_certificate, AnalyticTestFunction, GeneratorProfile,
    GridSearch, Interval64, PiecewiseFunction64, ProfileKind, SearchInequality, SharpnessEstimate,
};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// D_min ladder reproduced by `sharpness`: (b, p) = (10^k, 10k), k = 1..=4.
const DMIN_LADDER: [(f64, f64); 4] = [(10.0, 10.0), (100.0, 20.0), (1e3, 30.0), (1e4, 40.0)];

#[derive(Parser)]
#[command(
    name = "bvineq",
    version,
    about = "Verify reverse mean/Lp-norm inequalities for BV functions and the Landau-type bounds built on them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct CommonOpts {
    /// Master seed for the random corpus.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of corpus functions.
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Lp exponents, comma separated (each >= 1).
    #[arg(long = "p", value_delimiter = ',', default_values_t = vec![1.0, 2.0])]
    p: Vec<f64>,
    /// Relative tolerance for gap checks.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ProfileOpts {
    /// Corpus profile: step, sawtooth, poly or mixed.
    #[arg(long, default_value = "mixed")]
    profile: String,
    /// Pieces per corpus function.
    #[arg(long, default_value_t = 6)]
    pieces: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the forward and reverse inequalities on a corpus or a
    /// function file; nonzero exit on any negative gap.
    Verify {
        #[command(flatten)]
        common: CommonOpts,
        #[command(flatten)]
        profile: ProfileOpts,
        /// Verify this function-spec JSON file instead of a random corpus.
        #[arg(long)]
        function: Option<PathBuf>,
    },
    /// Reproduce the best-constant lower-bound ladders and run the
    /// empirical constant search.
    Sharpness {
        #[command(flatten)]
        common: CommonOpts,
        #[command(flatten)]
        profile: ProfileOpts,
    },
    /// Sweep the analytic registry through every applicable derivative
    /// bound and verify the growth certificates.
    Landau {
        #[command(flatten)]
        common: CommonOpts,
        /// Registry JSON file; built-in registry when omitted.
        #[arg(long)]
        registry: Option<PathBuf>,
        /// Random (a, b) pairs per growth certificate.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Print the built-in registry as JSON and exit.
        #[arg(long)]
        dump_registry: bool,
    },
    /// Minimize C/lambda^u + D*lambda^r in closed form and compare with the
    /// logarithmic grid-search oracle.
    Minimize {
        #[command(flatten)]
        common: CommonOpts,
        c: f64,
        d: f64,
        r: f64,
        u: f64,
    },
    /// Midpoint-kernel p-norm: closed form against direct quadrature.
    Kernel {
        #[command(flatten)]
        common: CommonOpts,
        /// Interval as `a,b`.
        #[arg(long, default_value = "0,1", value_parser = parse_interval, allow_hyphen_values = true)]
        interval: (f64, f64),
    },
}

fn parse_interval(s: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err("expected `a,b`".into());
    }
    let a: f64 = parts[0].trim().parse().map_err(|e| format!("{e}"))?;
    let b: f64 = parts[1].trim().parse().map_err(|e| format!("{e}"))?;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(format!("endpoints must satisfy a < b, got [{a}, {b}]"));
    }
    Ok((a, b))
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(violations) => {
            if violations {
                ExitCode::from(EXIT_VIOLATION)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<bool, UsageError> {
    match command {
        Command::Verify {
            common,
            profile,
            function,
        } => cmd_verify(common, profile, function),
        Command::Sharpness { common, profile } => cmd_sharpness(common, profile),
        Command::Landau {
            common,
            registry,
            samples,
            dump_registry,
        } => cmd_landau(common, registry, samples, dump_registry),
        Command::Minimize { common, c, d, r, u } => cmd_minimize(common, c, d, r, u),
        Command::Kernel { common, interval } => cmd_kernel(common, interval),
    }
}

fn validate_common(common: &CommonOpts, needs_p: bool) -> Result<(), UsageError> {
    if common.count == 0 {
        return Err("count must be >= 1".into());
    }
    if !(common.tolerance.is_finite() && common.tolerance > 0.0) {
        return Err("tolerance must be strictly positive".into());
    }
    if needs_p {
        if common.p.is_empty() {
            return Err("at least one --p value is required".into());
        }
        for &p in &common.p {
            if !(p.is_finite() && p >= 1.0) {
                return Err(format!("p must be finite and >= 1, got {p}").into());
            }
        }
    }
    Ok(())
}

fn build_profile(opts: &ProfileOpts) -> Result<GeneratorProfile, UsageError> {
    let kind: ProfileKind = opts.profile.parse()?;
    if opts.pieces == 0 {
        return Err("pieces must be >= 1".into());
    }
    Ok(GeneratorProfile {
        kind,
        pieces: opts.pieces,
        ..GeneratorProfile::default()
    })
}

fn p_list_string(p: &[f64]) -> String {
    p.iter()
        .map(|v| format!("{v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn emit(common: &CommonOpts, text: String) -> Result<(), UsageError> {
    match &common.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn config_json(
    common: &CommonOpts,
    command: &str,
    extra: &[(&str, serde_json::Value)],
) -> serde_json::Value {
    let mut cfg = serde_json::Map::new();
    cfg.insert("command".into(), command.into());
    cfg.insert("seed".into(), common.seed.into());
    cfg.insert("count".into(), common.count.into());
    cfg.insert("p".into(), common.p.clone().into());
    cfg.insert("tolerance".into(), common.tolerance.into());
    for (k, v) in extra {
        cfg.insert((*k).to_string(), v.clone());
    }
    serde_json::json!({ "schema": CSV_SCHEMA_VERSION, "config": cfg })
}

fn json_document(envelope: serde_json::Value, key: &str, rows: Vec<serde_json::Value>) -> String {
    let mut doc = envelope;
    doc[key] = serde_json::Value::Array(rows);
    let mut s = serde_json::to_string_pretty(&doc).expect("document serializes");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(
    common: CommonOpts,
    profile_opts: ProfileOpts,
    function: Option<PathBuf>,
) -> Result<bool, UsageError> {
    validate_common(&common, true)?;
    let profile = build_profile(&profile_opts)?;

    // (seed, function) pairs: seeded corpus, or a single user-supplied file.
    let source;
    let items: Vec<(Option<u64>, PiecewiseFunction64)> = match &function {
        Some(path) => {
            source = "function-file".to_string();
            let text = std::fs::read_to_string(path)?;
            vec![(None, PiecewiseFunction64::from_json(&text)?)]
        }
        None => {
            source = "corpus".to_string();
            bvineq::corpus::corpus(common.seed, common.count, &profile)?
                .into_iter()
                .map(|(s, f)| (Some(s), f))
                .collect()
        }
    };

    let mut rows: Vec<(BoundReport<f64>, Option<u64>)> = Vec::new();
    let mut violation = false;
    for (seed, f) in &items {
        let mut reports = vec![baseline_mean_sup(f), reverse_sup(f)];
        for &p in &common.p {
            reports.push(baseline_mean_lp(f, p)?);
            reports.push(reverse_lp(f, p)?);
        }
        // The pointwise kernel bound is checked on its x-sweep but reported
        // only through the exit status; emitted rows stay one per
        // (function, inequality, p).
        for r in ostrowski_sweep(f) {
            violation |= !r.holds(common.tolerance);
        }
        for r in reports {
            violation |= !r.holds(common.tolerance);
            rows.push((r, *seed));
        }
    }

    let text = match common.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "# schema={CSV_SCHEMA_VERSION} command=verify seed={} count={} p={} tolerance={} profile={} pieces={} source={}",
                common.seed,
                common.count,
                p_list_string(&common.p),
                common.tolerance,
                profile.kind,
                profile.pieces,
                source
            );
            let _ = writeln!(s, "{CSV_HEADER}");
            for (r, seed) in &rows {
                let _ = writeln!(s, "{}", r.csv_row(*seed));
            }
            s
        }
        Format::Json => {
            let envelope = config_json(
                &common,
                "verify",
                &[
                    ("profile", profile.kind.to_string().into()),
                    ("pieces", profile.pieces.into()),
                    ("source", source.clone().into()),
                ],
            );
            json_document(
                envelope,
                "reports",
                rows.iter().map(|(r, seed)| r.json_row(*seed)).collect(),
            )
        }
    };
    emit(&common, text)?;
    Ok(violation)
}

// ---------------------------------------------------------------------------
// sharpness

fn cmd_sharpness(common: CommonOpts, profile_opts: ProfileOpts) -> Result<bool, UsageError> {
    validate_common(&common, true)?;
    let profile = build_profile(&profile_opts)?;

    let mut estimates: Vec<SharpnessEstimate<f64>> = Vec::new();
    estimates.push(empirical_constant_search(
        SearchInequality::ReverseSup,
        common.seed,
        common.count,
        &profile,
    )?);
    for &p in &common.p {
        estimates.push(empirical_constant_search(
            SearchInequality::ReverseLp(p),
            common.seed,
            common.count,
            &profile,
        )?);
    }
    // Finite double-limit ladder: D_min rises toward 1/2 as p then b grow.
    for (b, p) in DMIN_LADDER {
        let d = thm2_constant_lower_bound(b, p)?;
        let mut params = std::collections::BTreeMap::new();
        params.insert("b".to_string(), b);
        params.insert("p".to_string(), p);
        estimates.push(SharpnessEstimate {
            inequality: "thm2_dmin".to_string(),
            constant_lower_bound: d,
            witness_digest: bvineq::step_extremal(b)?.digest(),
            witness_params: params,
            target: 0.5,
        });
    }

    let violation = estimates
        .iter()
        .any(|e| e.constant_lower_bound > e.target + common.tolerance);

    let text = match common.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "# schema={CSV_SCHEMA_VERSION} command=sharpness seed={} count={} p={} tolerance={} profile={} pieces={}",
                common.seed,
                common.count,
                p_list_string(&common.p),
                common.tolerance,
                profile.kind,
                profile.pieces
            );
            let _ = writeln!(s, "inequality,p,b,implied_constant,target");
            for e in &estimates {
                let _ = writeln!(s, "{}", e.csv_row());
            }
            s
        }
        Format::Json => {
            let envelope = config_json(
                &common,
                "sharpness",
                &[
                    ("profile", profile.kind.to_string().into()),
                    ("pieces", profile.pieces.into()),
                ],
            );
            json_document(
                envelope,
                "estimates",
                estimates.iter().map(|e| e.json_row()).collect(),
            )
        }
    };
    emit(&common, text)?;
    Ok(violation)
}

// ---------------------------------------------------------------------------
// landau

fn cmd_landau(
    common: CommonOpts,
    registry_path: Option<PathBuf>,
    samples: usize,
    dump_registry: bool,
) -> Result<bool, UsageError> {
    validate_common(&common, false)?;
    if dump_registry {
        let mut text = registry_to_json(&builtin_registry());
        text.push('\n');
        emit(&common, text)?;
        return Ok(false);
    }
    if samples == 0 {
        return Err("samples must be >= 1".into());
    }
    let registry: Vec<AnalyticTestFunction> = match &registry_path {
        Some(path) => registry_from_json(&std::fs::read_to_string(path)?)?,
        None => builtin_registry(),
    };

    let mut rows: Vec<BoundReport<f64>> = Vec::new();
    let mut violation = false;
    for tf in &registry {
        for kind in applicable_kinds(tf) {
            let r = landau_check(tf, kind)?;
            violation |= !r.holds(common.tolerance);
            rows.push(r);
        }
        if tf.growth.is_some() {
            if second_derivative(&tf.name).is_some() {
                let ok = verify_growth_certificate(tf, samples, common.seed)?;
                eprintln!(
                    "certificate {}: {} ({samples} samples)",
                    tf.name,
                    if ok { "ok" } else { "VIOLATED" }
                );
                violation |= !ok;
            } else {
                eprintln!(
                    "certificate {}: skipped (no known second derivative)",
                    tf.name
                );
            }
        }
    }

    let text = match common.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "# schema={CSV_SCHEMA_VERSION} command=landau seed={} samples={samples} tolerance={} entries={}",
                common.seed,
                common.tolerance,
                registry.len()
            );
            let _ = writeln!(s, "{CSV_HEADER}");
            for r in &rows {
                let _ = writeln!(s, "{}", r.csv_row(None));
            }
            s
        }
        Format::Json => {
            let envelope = config_json(
                &common,
                "landau",
                &[
                    ("samples", samples.into()),
                    ("entries", registry.len().into()),
                ],
            );
            json_document(
                envelope,
                "reports",
                rows.iter().map(|r| r.json_row(None)).collect(),
            )
        }
    };
    emit(&common, text)?;
    Ok(violation)
}

// ---------------------------------------------------------------------------
// minimize

fn cmd_minimize(common: CommonOpts, c: f64, d: f64, r: f64, u: f64) -> Result<bool, UsageError> {
    validate_common(&common, false)?;
    let closed = minimize_landau_objective(c, d, r, u)?;
    let oracle = grid_search_minimum(c, d, r, u, &GridSearch::default())?;
    let rel_delta = (closed.value - oracle.value).abs() / oracle.value.abs().max(f64::MIN_POSITIVE);
    // grid + ternary refinement resolves the minimum well past this
    let violation = rel_delta > 1e-6;

    let text = match common.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "# schema={CSV_SCHEMA_VERSION} command=minimize C={c} D={d} r={r} u={u}"
            );
            let _ = writeln!(s, "lambda0,value,oracle_lambda0,oracle_value,rel_delta");
            let _ = writeln!(
                s,
                "{},{},{},{},{}",
                closed.lambda0, closed.value, oracle.lambda0, oracle.value, rel_delta
            );
            s
        }
        Format::Json => {
            let envelope = config_json(
                &common,
                "minimize",
                &[
                    ("C", c.into()),
                    ("D", d.into()),
                    ("r", r.into()),
                    ("u", u.into()),
                ],
            );
            json_document(
                envelope,
                "result",
                vec![serde_json::json!({
                    "lambda0": closed.lambda0,
                    "value": closed.value,
                    "oracle_lambda0": oracle.lambda0,
                    "oracle_value": oracle.value,
                    "rel_delta": rel_delta,
                })],
            )
        }
    };
    emit(&common, text)?;
    Ok(violation)
}

// ---------------------------------------------------------------------------
// kernel

fn cmd_kernel(common: CommonOpts, interval: (f64, f64)) -> Result<bool, UsageError> {
    validate_common(&common, true)?;
    let iv = Interval64::new(interval.0, interval.1)?;
    let mid = iv.midpoint();

    let mut rows: Vec<(f64, f64, f64, f64)> = Vec::new();
    let mut violation = false;
    for &p in &common.p {
        let closed = midpoint_kernel_pnorm(&iv, p)?;
        // independent route: integrate the kernel power over each smooth half
        let kernel = |x: f64| bvineq::inequalities::midpoint_kernel(&iv, x).powf(p);
        let integral = quadrature::integrate(kernel, iv.a(), mid, 1e-13)
            + quadrature::integrate(kernel, mid, iv.b(), 1e-13);
        let direct = integral.powf(1.0 / p);
        let delta = (closed - direct).abs();
        violation |= delta > common.tolerance;
        rows.push((p, closed, direct, delta));
    }

    let text = match common.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "# schema={CSV_SCHEMA_VERSION} command=kernel interval={},{} p={} tolerance={}",
                iv.a(),
                iv.b(),
                p_list_string(&common.p),
                common.tolerance
            );
            let _ = writeln!(s, "p,closed_form,quadrature,abs_delta");
            for (p, c, q, dl) in &rows {
                let _ = writeln!(s, "{p},{c},{q},{dl}");
            }
            s
        }
        Format::Json => {
            let envelope = config_json(
                &common,
                "kernel",
                &[("interval", serde_json::json!([iv.a(), iv.b()]))],
            );
            json_document(
                envelope,
                "rows",
                rows.iter()
                    .map(|(p, c, q, dl)| {
                        serde_json::json!({
                            "p": p, "closed_form": c, "quadrature": q, "abs_delta": dl
                        })
                    })
                    .collect(),
            )
        }
    };
    emit(&common, text)?;
    Ok(violation)
}
