//! Command-line surface for cyclotomic code enumeration.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 parameter error,
//! 3 capacity or cost refusal. Reports go to stdout, diagnostics to stderr,
//! and JSON output is byte-deterministic for identical inputs.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cyclocode::character::{CharacterSystem, GAUSS_TOLERANCE};
use cyclocode::closed_form::{classify, cwe_closed_form, cwe_from_periods, periods_closed_form};
use cyclocode::codes::{brute_force_cwe, build_defining_set, code_summary, griesmer_check};
use cyclocode::cwe::Cwe;
use cyclocode::cyclotomy::{
    gaussian_periods_exact, normalize_subset, partition_classes, period_polynomial, GaussianPeriods,
};
use cyclocode::field::{FieldContext, FieldParams, DEFAULT_SIZE_CAP};
use cyclocode::sweep::{
    admissible_cases, all_passed, enumeration_sweep, gauss_sweep, known_answer_checks,
    period_sweep, representative_checks, Check,
};
use cyclocode::Error;

/// Refuse brute-force enumeration beyond this many trace lookups unless
/// --force is given.
const COST_LIMIT: u64 = 1_000_000_000;

#[derive(Parser)]
#[command(
    name = "cyclocode",
    version,
    about = "Cyclotomic codes and their complete weight enumerators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the complete weight enumerator of one code.
    Compute(ComputeArgs),
    /// Run cross-verification batteries; exits nonzero on any failure.
    Verify(VerifyArgs),
    /// Print the deterministic field representation.
    Field(FieldArgs),
    /// Print exact and closed-form Gaussian periods.
    Periods(PeriodsArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Formula,
    Theorem,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Formula => "formula",
            Method::Theorem => "theorem",
            Method::All => "all",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    /// Field characteristic (prime).
    #[arg(long)]
    p: u64,
    /// Extension degree.
    #[arg(long)]
    m: u32,
    /// Cyclotomic order.
    #[arg(long = "N")]
    order: u64,
    /// Class indices of the defining set, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    classes: Vec<u64>,
    #[arg(long, value_enum, default_value = "all")]
    method: Method,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Run brute force even past the cost limit.
    #[arg(long)]
    force: bool,
    /// Override the field size cap.
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Full-scale sweep (r up to 65536) instead of the quick battery.
    #[arg(long)]
    sweep: bool,
    /// Override the sweep's field size ceiling.
    #[arg(long = "max-r")]
    max_r: Option<u64>,
    /// Only the Gauss-sum checks, reported as per-class errors in JSON.
    #[arg(long)]
    gauss: bool,
}

#[derive(Args)]
struct FieldArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    m: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Args)]
struct PeriodsArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    m: u32,
    #[arg(long = "N")]
    order: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    cap: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Field(args) => cmd_field(&args),
        Command::Periods(args) => cmd_periods(&args),
    };
    match status {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::SizeCap { .. } => 3,
        Error::Inconsistency(_) => 1,
        _ => 2,
    }
}

#[derive(Serialize)]
struct ReportParams {
    p: u64,
    m: u32,
    #[serde(rename = "N")]
    order: u64,
    classes: Vec<u64>,
    method: &'static str,
}

#[derive(Serialize)]
struct ReportSummary {
    n: u64,
    k: u32,
    d: u64,
}

#[derive(Serialize)]
struct ReportTerm {
    composition: Vec<u64>,
    multiplicity: u64,
}

#[derive(Serialize)]
struct ReportGriesmer {
    bound: u64,
    optimal: bool,
}

#[derive(Serialize)]
struct CweReport {
    params: ReportParams,
    summary: ReportSummary,
    cwe: Vec<ReportTerm>,
    periods: Option<Vec<i64>>,
    griesmer: ReportGriesmer,
    verdict: &'static str,
}

/// Monomial like w0^13*w1^8, unit exponents bare, zero exponents omitted.
fn monomial(composition: &[u64]) -> String {
    let factors: Vec<String> = composition
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("w{i}")
            } else {
                format!("w{i}^{e}")
            }
        })
        .collect();
    factors.join("*")
}

fn render_report(report: &CweReport, format: Format) {
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(report).expect("serializable")
            );
        }
        Format::Text => {
            let p = &report.params;
            let classes: Vec<String> = p.classes.iter().map(u64::to_string).collect();
            println!(
                "params: p={} m={} N={} classes={} method={}",
                p.p,
                p.m,
                p.order,
                classes.join(","),
                p.method
            );
            println!(
                "summary: [{}, {}, {}]",
                report.summary.n, report.summary.k, report.summary.d
            );
            match &report.periods {
                Some(eta) => {
                    let eta: Vec<String> = eta.iter().map(i64::to_string).collect();
                    println!("periods: [{}]", eta.join(", "));
                }
                None => println!("periods: none"),
            }
            let cwe: Vec<String> = report
                .cwe
                .iter()
                .map(|t| {
                    if t.multiplicity == 1 {
                        monomial(&t.composition)
                    } else {
                        format!("{}*{}", t.multiplicity, monomial(&t.composition))
                    }
                })
                .collect();
            println!("cwe: {}", cwe.join(" + "));
            println!(
                "griesmer: bound={} optimal={}",
                report.griesmer.bound, report.griesmer.optimal
            );
            println!("verdict: {}", report.verdict);
        }
    }
}

fn cmd_compute(args: &ComputeArgs) -> Result<ExitCode, Error> {
    let cap = args.cap.unwrap_or(DEFAULT_SIZE_CAP);
    let params = FieldParams::with_cap(args.p, args.m, cap)?;
    let r = params.size;
    let order = args.order;
    if order < 2 || !(r - 1).is_multiple_of(order) {
        return Err(Error::BadOrder {
            order,
            size_minus_one: r - 1,
        });
    }
    let subset = normalize_subset(order, &args.classes)?;
    let n = (r - 1) / order;
    let l = subset.len() as u64;

    let wants_brute = matches!(args.method, Method::Brute | Method::All);
    if wants_brute {
        let cost = r.saturating_mul(n).saturating_mul(l);
        if cost > COST_LIMIT && !args.force {
            eprintln!(
                "refusing brute force: {cost} trace lookups exceed {COST_LIMIT} (pass --force to override)"
            );
            return Ok(ExitCode::from(3));
        }
    }

    let ctx = FieldContext::build_with_cap(args.p, args.m, cap)?;
    let part = partition_classes(&ctx, order)?;

    let rational = ((r - 1) / (args.p - 1)).is_multiple_of(order);
    let exact = if rational && n > 1 {
        Some(gaussian_periods_exact(&ctx, &part)?)
    } else {
        None
    };

    let brute = if wants_brute {
        let ds = build_defining_set(&part, &subset)?;
        Some(brute_force_cwe(&ctx, &ds))
    } else {
        None
    };

    let formula = match (args.method, &exact) {
        (Method::Formula | Method::All, Some(periods)) => Some(cwe_from_periods(
            args.p,
            part.class_size,
            &periods.eta,
            &subset,
        )?),
        (Method::Formula, None) => {
            return Err(if rational {
                Error::DegenerateClasses { order }
            } else {
                Error::NotRational {
                    order,
                    quotient: (r - 1) / (args.p - 1),
                }
            });
        }
        (Method::All, None) => {
            eprintln!("note: period formula skipped: no rational integer periods here");
            None
        }
        _ => None,
    };

    let theorem = match args.method {
        Method::Theorem => Some(cwe_closed_form(args.p, args.m, order, &subset)?),
        Method::All => match cwe_closed_form(args.p, args.m, order, &subset) {
            Ok(cwe) => Some(cwe),
            Err(e) => {
                eprintln!("note: closed-form path skipped: {e}");
                None
            }
        },
        _ => None,
    };

    let computed: Vec<&Cwe> = [brute.as_ref(), formula.as_ref(), theorem.as_ref()]
        .into_iter()
        .flatten()
        .collect();
    let verdict = if computed.len() < 2 {
        eprintln!("note: only one computation path ran; no cross-comparison");
        "UNCHECKED"
    } else if computed.windows(2).all(|w| w[0] == w[1]) {
        "EQUAL"
    } else {
        "MISMATCH"
    };

    let primary = computed[0];
    let summary = code_summary(args.m, primary)?;
    let gries = griesmer_check(
        summary.length,
        summary.dimension,
        summary.minimum_distance,
        args.p,
    );
    let report = CweReport {
        params: ReportParams {
            p: args.p,
            m: args.m,
            order,
            classes: subset,
            method: args.method.name(),
        },
        summary: ReportSummary {
            n: summary.length,
            k: summary.dimension,
            d: summary.minimum_distance,
        },
        cwe: primary
            .sorted_terms()
            .into_iter()
            .map(|(composition, multiplicity)| ReportTerm {
                composition,
                multiplicity,
            })
            .collect(),
        periods: exact.map(|g| g.eta),
        griesmer: ReportGriesmer {
            bound: gries.bound,
            optimal: gries.distance_optimal,
        },
        verdict,
    };
    render_report(&report, args.format);
    if verdict == "MISMATCH" {
        eprintln!("computation paths disagree");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct GaussErrorReport {
    p: u64,
    m: u32,
    #[serde(rename = "N")]
    order: u64,
    eta_error: Vec<f64>,
    trivial_error: f64,
    modulus_error: f64,
    shift_deviation: f64,
}

fn cmd_verify_gauss(bound: u64) -> Result<ExitCode, Error> {
    let mut reports = Vec::new();
    let mut ok = true;
    for case in admissible_cases(bound, &[3, 4]) {
        let ctx = FieldContext::build(case.p, case.m)?;
        let part = partition_classes(&ctx, case.order)?;
        let exact = gaussian_periods_exact(&ctx, &part)?;
        let sys = CharacterSystem::new(&ctx)?;
        let eta = sys.periods_via_gauss_sums(case.order)?;
        let eta_error: Vec<f64> = exact
            .eta
            .iter()
            .zip(&eta)
            .map(|(&e, g)| (g - e as f64).norm())
            .collect();
        let trivial_error = (sys.gauss_sum(0) + 1.0).norm();
        let modulus_error = (sys.gauss_sum(1).norm() - (ctx.size() as f64).sqrt()).abs();
        let shift_deviation = sys.period_shift_deviation(case.order)?;
        ok &= eta_error.iter().all(|&e| e < GAUSS_TOLERANCE)
            && trivial_error < GAUSS_TOLERANCE
            && modulus_error < GAUSS_TOLERANCE
            && shift_deviation < GAUSS_TOLERANCE;
        reports.push(GaussErrorReport {
            p: case.p,
            m: case.m,
            order: case.order,
            eta_error,
            trivial_error,
            modulus_error,
            shift_deviation,
        });
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&reports).expect("serializable")
    );
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_checks(checks: &[Check]) {
    for check in checks {
        if check.passed {
            println!("ok   {}", check.name);
        } else {
            println!("FAIL {}: {}", check.name, check.detail);
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, Error> {
    if args.gauss {
        return cmd_verify_gauss(args.max_r.unwrap_or(4096));
    }
    let (period_bound, enum_bound, gauss_bound, crosscheck) = if args.sweep {
        let r = args.max_r.unwrap_or(65536);
        (r, r, r.min(4096), 2500)
    } else {
        match args.max_r {
            Some(r) => (r, r, r.min(1024), r),
            None => (4096, 2401, 1024, 2401),
        }
    };

    let mut checks = known_answer_checks()?;
    checks.extend(representative_checks()?);
    checks.extend(period_sweep(period_bound)?);
    checks.extend(enumeration_sweep(enum_bound, crosscheck)?);
    checks.extend(gauss_sweep(gauss_bound)?);
    print_checks(&checks);
    let passed = checks.iter().filter(|c| c.passed).count();
    println!("passed {passed}/{} checks", checks.len());
    Ok(if all_passed(&checks) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct OrderFacts {
    #[serde(rename = "N")]
    order: u64,
    divides_group: bool,
    rational: bool,
}

#[derive(Serialize)]
struct FieldReport {
    p: u64,
    m: u32,
    r: u64,
    modulus: Vec<u64>,
    alpha: u64,
    orders: Vec<OrderFacts>,
}

fn cmd_field(args: &FieldArgs) -> Result<ExitCode, Error> {
    let cap = args.cap.unwrap_or(DEFAULT_SIZE_CAP);
    let ctx = FieldContext::build_with_cap(args.p, args.m, cap)?;
    let r = ctx.size();
    let orders = [3u64, 4]
        .iter()
        .map(|&order| OrderFacts {
            order,
            divides_group: (r - 1).is_multiple_of(order),
            rational: (r - 1).is_multiple_of(order)
                && ((r - 1) / (args.p - 1)).is_multiple_of(order),
        })
        .collect();
    let report = FieldReport {
        p: args.p,
        m: args.m,
        r,
        modulus: ctx.modulus().coeffs().to_vec(),
        alpha: ctx.alpha().index(),
        orders,
    };
    match args.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        ),
        Format::Text => {
            println!("p={} m={} r={}", report.p, report.m, report.r);
            let coeffs: Vec<String> = report.modulus.iter().map(u64::to_string).collect();
            println!("modulus: [{}] ({})", coeffs.join(", "), ctx.modulus());
            println!("alpha: {}", report.alpha);
            for facts in &report.orders {
                println!(
                    "N={}: divides r-1 {}, divides (r-1)/(p-1) {}",
                    facts.order, facts.divides_group, facts.rational
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct PeriodsParams {
    p: u64,
    m: u32,
    #[serde(rename = "N")]
    order: u64,
}

#[derive(Serialize)]
struct PeriodsReport {
    params: PeriodsParams,
    exact: Vec<i64>,
    closed_form: Option<Vec<i64>>,
    polynomial: Vec<i64>,
    verdict: &'static str,
}

fn cmd_periods(args: &PeriodsArgs) -> Result<ExitCode, Error> {
    let cap = args.cap.unwrap_or(DEFAULT_SIZE_CAP);
    let ctx = FieldContext::build_with_cap(args.p, args.m, cap)?;
    let part = partition_classes(&ctx, args.order)?;
    let exact = gaussian_periods_exact(&ctx, &part)?;
    let closed = match classify(args.p, args.m, args.order) {
        Ok(_) => Some(periods_closed_form(args.p, args.m, args.order)?),
        Err(Error::NoClosedForm(msg)) => {
            eprintln!("note: {msg}");
            None
        }
        Err(e) => return Err(e),
    };
    let verdict = match &closed {
        None => "UNCHECKED",
        Some(eta) => {
            let mut a = exact.eta.clone();
            let mut b = eta.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a == b {
                "EQUAL"
            } else {
                "MISMATCH"
            }
        }
    };
    let polynomial = period_polynomial(&GaussianPeriods {
        order: args.order,
        eta: exact.eta.clone(),
    });
    let report = PeriodsReport {
        params: PeriodsParams {
            p: args.p,
            m: args.m,
            order: args.order,
        },
        exact: exact.eta,
        closed_form: closed,
        polynomial,
        verdict,
    };
    match args.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        ),
        Format::Text => {
            let fmt = |v: &[i64]| {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                format!("[{}]", parts.join(", "))
            };
            println!(
                "params: p={} m={} N={}",
                report.params.p, report.params.m, report.params.order
            );
            println!("exact: {}", fmt(&report.exact));
            match &report.closed_form {
                Some(eta) => println!("closed_form: {}", fmt(eta)),
                None => println!("closed_form: none"),
            }
            println!("polynomial: {}", fmt(&report.polynomial));
            println!("verdict: {}", report.verdict);
        }
    }
    Ok(if verdict == "MISMATCH" {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
