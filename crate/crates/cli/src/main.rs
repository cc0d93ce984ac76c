//! `qgrowth`: exact q-series toolkit for conjugacy growth series,
//! eta-quotients, coefficient operators, and congruence verification.
//!
//! Exit codes: 0 = success / claim verified; 1 = a checked claim is
//! violated (violations are listed); 2 = usage, parse, or precision errors.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qgrowth_core::congruence::{
    reproduce_section6, scan_congruences_with_workers, verify_congruence, CongruenceClaim,
    CongruenceReport, ResidueFilter, Verdict,
};
use qgrowth_core::eta::{eta_quotient_expansion, f_p_quotient, modularity_check, EtaQuotient};
use qgrowth_core::growth::{
    alt_series, even_parts_series, f_m_series, partition_series, wreath_alt_series,
};
use qgrowth_core::operators::{
    hecke_half_integral, hecke_integer, progression_extract, u_op, v_op, HeckeParams,
};
use qgrowth_core::oracle::{
    oracle_bfs_conjugacy_growth, oracle_partition_count, GeneratorSet, GroupFlavor, GroupSpec,
    PartitionPredicate,
};
use qgrowth_core::{CoefficientRing, QSeries};

#[derive(Parser)]
#[command(name = "qgrowth", version, about = "Exact q-series arithmetic for conjugacy growth series and congruences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a named growth series
    Series(SeriesArgs),
    /// Expand an eta-quotient (and optionally check its modularity data)
    Eta(EtaArgs),
    /// Apply a coefficient operator to a series
    Op(OpArgs),
    /// Verify a congruence claim on an arithmetic progression
    Verify(VerifyArgs),
    /// Scan for vanishing progressions
    Scan(ScanArgs),
    /// Run a bundled reproduction suite
    Reproduce(ReproduceArgs),
    /// Brute-force oracles (partition counts, Cayley-graph growth)
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Sym,
    Alt,
    EvenParts,
    WreathAlt,
    FM,
}

#[derive(Args)]
struct SeriesArgs {
    /// Series family
    #[arg(long, value_enum)]
    family: Family,
    /// Number of conjugacy classes M (wreath-alt and f-m only)
    #[arg(long = "M")]
    m: Option<i64>,
    /// Precision: coefficients are computed for exponents below this bound
    #[arg(long)]
    prec: i64,
    /// Compute in Z/m instead of Z
    #[arg(long = "mod")]
    modulus: Option<u64>,
    #[arg(long)]
    json: bool,
    /// Write the series (JSON) to a file
    #[arg(long)]
    save: Option<String>,
}

#[derive(Args)]
struct EtaArgs {
    /// Eta-quotient expression, e.g. "eta(1)^24 * eta(25)^-1"
    #[arg(long, conflicts_with = "fp")]
    expr: Option<String>,
    /// Use the built-in quotient F_p for this odd prime
    #[arg(long)]
    fp: Option<u64>,
    /// Precision in q-power units (the expansion runs to q^prec)
    #[arg(long)]
    prec: i64,
    #[arg(long = "mod")]
    modulus: Option<u64>,
    /// Override the level metadata
    #[arg(long)]
    level: Option<u64>,
    /// Print the modularity conditions instead of the expansion
    #[arg(long)]
    check: bool,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    save: Option<String>,
}

#[derive(Args)]
struct OpArgs {
    /// Load the input series from a JSON file
    #[arg(long, conflicts_with = "series")]
    load: Option<String>,
    /// Construct the input series from a spec: sym | alt | even-parts |
    /// wreath-alt:M | f:M
    #[arg(long)]
    series: Option<String>,
    /// Precision for a constructed input
    #[arg(long)]
    prec: Option<i64>,
    #[arg(long = "mod")]
    modulus: Option<u64>,

    /// Apply U_t
    #[arg(long, group = "operator")]
    u: Option<i64>,
    /// Apply V_t
    #[arg(long, group = "operator")]
    v: Option<i64>,
    /// Extract the progression A,B (coefficients at An + B)
    #[arg(long, group = "operator", value_name = "A,B")]
    extract: Option<String>,
    /// Apply the integer-weight Hecke operator for this prime
    #[arg(long, group = "operator", value_name = "P")]
    hecke_integer: Option<u64>,
    /// Apply the half-integral-weight Hecke operator for this odd prime
    #[arg(long, group = "operator", value_name = "L")]
    hecke_half: Option<u64>,
    /// Integer weight k (with --hecke-integer)
    #[arg(long)]
    weight: Option<i64>,
    /// Half-integral weight parameter lambda (with --hecke-half)
    #[arg(long)]
    lambda: Option<i64>,
    /// Kronecker character top D (default 1: trivial character)
    #[arg(long, default_value_t = 1)]
    character: i64,
    /// Level metadata for Hecke preconditions (default 1)
    #[arg(long, default_value_t = 1)]
    level: u64,

    #[arg(long)]
    json: bool,
    #[arg(long)]
    save: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Series spec: sym | alt | even-parts | wreath-alt:M | f:M
    #[arg(long, conflicts_with = "load")]
    series: Option<String>,
    #[arg(long)]
    load: Option<String>,
    /// Progression step A
    #[arg(long = "A")]
    step: i64,
    /// Progression shift B
    #[arg(long = "B")]
    shift: i64,
    /// Modulus of the claimed congruence
    #[arg(long = "mod")]
    modulus: u64,
    /// Largest n checked (inclusive)
    #[arg(long)]
    nmax: i64,
    /// Restrict to residue classes, e.g. "7:2,4,5,6" for n = 2,4,5,6 mod 7
    #[arg(long)]
    filter: Option<String>,
    /// Precision override for the constructed series
    #[arg(long)]
    prec: Option<i64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, conflicts_with = "load")]
    series: Option<String>,
    #[arg(long)]
    load: Option<String>,
    #[arg(long = "mod")]
    modulus: u64,
    /// Largest progression step scanned
    #[arg(long = "A-max")]
    a_max: i64,
    /// Largest n checked per progression (inclusive)
    #[arg(long)]
    nmax: i64,
    /// Worker threads for the (A, B) cells
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    prec: Option<i64>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReproduceTarget {
    /// The bundled mod-7 chain for the M = 2 wreath series
    Section6,
    /// gamma_{W'_1}(1250 n + 1198) == 0 (mod 5) for n <= 3
    Wreath1Mod5,
    /// gamma_{W'_1}(2 * 7^6 n + 225494) == 0 (mod 49) at n = 0 (long)
    Wreath1Mod49,
}

#[derive(Args)]
struct ReproduceArgs {
    #[arg(value_enum)]
    target: ReproduceTarget,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OracleArgs {
    /// Count partitions of n by exhaustive enumeration
    #[arg(long, group = "which")]
    partitions: Option<u64>,
    /// Restrict the count to partitions with an even number of parts
    #[arg(long)]
    even: bool,
    /// BFS conjugacy growth of a small group, e.g. "sym:8" or "alt:9"
    #[arg(long, group = "which")]
    group: Option<String>,
    /// Generator set for --group
    #[arg(long, value_enum)]
    gens: Option<GensArg>,
    /// Largest conjugacy length reported
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GensArg {
    Coxeter,
    AllTranspositions,
    #[value(name = "consecutive-3-cycles")]
    Consecutive3Cycles,
    #[value(name = "all-3-cycles")]
    All3Cycles,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Series(args) => cmd_series(args),
        Command::Eta(args) => cmd_eta(args),
        Command::Op(args) => cmd_op(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Reproduce(args) => cmd_reproduce(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

fn ring_for(modulus: Option<u64>) -> Result<CoefficientRing, qgrowth_core::Error> {
    match modulus {
        None => Ok(CoefficientRing::integers()),
        Some(m) => CoefficientRing::residues(m),
    }
}

/// Build a series from a spec string: `sym`, `alt`, `even-parts`,
/// `wreath-alt:M`, or `f:M`.
fn build_series(
    spec: &str,
    prec: i64,
    modulus: Option<u64>,
) -> Result<QSeries, Box<dyn std::error::Error>> {
    let ring = ring_for(modulus)?;
    let (name, m) = match spec.split_once(':') {
        Some((name, m)) => (name, Some(m.parse::<i64>()?)),
        None => (spec, None),
    };
    let series = match (name, m) {
        ("sym", None) => partition_series(prec, &ring)?,
        ("alt", None) => alt_series(prec, &ring)?,
        ("even-parts", None) => even_parts_series(prec, &ring)?,
        ("wreath-alt", Some(m)) => wreath_alt_series(m, prec, &ring)?,
        ("f", Some(m)) => f_m_series(m, prec, &ring)?,
        _ => return Err(format!("unknown series spec {:?}", spec).into()),
    };
    Ok(series)
}

fn emit_series(
    series: &QSeries,
    json: bool,
    save: Option<&str>,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let encoded = serde_json::to_string(series)?;
    if let Some(path) = save {
        fs::write(path, &encoded)?;
    }
    if json {
        println!("{}", encoded);
    } else {
        println!("{}", series);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_series(args: SeriesArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let ring = ring_for(args.modulus)?;
    let need_m = || args.m.ok_or("--M is required for this family");
    let series = match args.family {
        Family::Sym => partition_series(args.prec, &ring)?,
        Family::Alt => alt_series(args.prec, &ring)?,
        Family::EvenParts => even_parts_series(args.prec, &ring)?,
        Family::WreathAlt => wreath_alt_series(need_m()?, args.prec, &ring)?,
        Family::FM => f_m_series(need_m()?, args.prec, &ring)?,
    };
    emit_series(&series, args.json, args.save.as_deref())
}

fn cmd_eta(args: EtaArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let mut quotient = match (&args.expr, args.fp) {
        (Some(expr), None) => EtaQuotient::parse(expr)?,
        (None, Some(p)) => f_p_quotient(p)?,
        _ => return Err("exactly one of --expr or --fp is required".into()),
    };
    if let Some(level) = args.level {
        quotient = quotient.with_level(level)?;
    }
    if args.check {
        let verdict = modularity_check(&quotient);
        if args.json {
            println!(
                "{}",
                serde_json::json!({
                    "quotient": quotient.to_string(),
                    "level": quotient.level(),
                    "weight_times_2": verdict.weight_times_2,
                    "cond_A": verdict.cond_a,
                    "cond_B": verdict.cond_b,
                    "character_top": verdict.character_top.to_string(),
                })
            );
        } else {
            println!("quotient: {}  (level {})", quotient, quotient.level());
            println!("weight: {}/2", verdict.weight_times_2);
            println!("sum delta*r == 0 mod 24: {}", verdict.cond_a);
            println!("sum (N/delta)*r == 0 mod 24: {}", verdict.cond_b);
            println!("character top (D of (D/.)): {}", verdict.character_top);
        }
        return Ok(ExitCode::SUCCESS);
    }
    let ring = ring_for(args.modulus)?;
    let series = eta_quotient_expansion(&quotient, 24 * args.prec, &ring)?;
    emit_series(&series, args.json, args.save.as_deref())
}

fn cmd_op(args: OpArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let input: QSeries = match (&args.load, &args.series) {
        (Some(path), None) => serde_json::from_str(&fs::read_to_string(path)?)?,
        (None, Some(spec)) => {
            let prec = args.prec.ok_or("--prec is required with --series")?;
            build_series(spec, prec, args.modulus)?
        }
        _ => return Err("exactly one of --load or --series is required".into()),
    };
    let result = if let Some(t) = args.u {
        u_op(&input, t)?
    } else if let Some(t) = args.v {
        v_op(&input, t)?
    } else if let Some(extract) = &args.extract {
        let (a, b) = extract
            .split_once(',')
            .ok_or("--extract expects \"A,B\"")?;
        progression_extract(&input, a.trim().parse()?, b.trim().parse()?)?
    } else if let Some(p) = args.hecke_integer {
        let k = args.weight.ok_or("--weight is required with --hecke-integer")?;
        let params = HeckeParams::integer_weight(k, args.character, args.level);
        hecke_integer(&input, p, &params)?
    } else if let Some(ell) = args.hecke_half {
        let lambda = args.lambda.ok_or("--lambda is required with --hecke-half")?;
        let params = HeckeParams::half_integral(lambda, args.character, args.level);
        hecke_half_integral(&input, ell, &params)?
    } else {
        return Err("no operator given (--u, --v, --extract, --hecke-integer, --hecke-half)".into());
    };
    emit_series(&result, args.json, args.save.as_deref())
}

fn parse_filter(s: &str) -> Result<ResidueFilter, Box<dyn std::error::Error>> {
    let (m, rest) = s.split_once(':').ok_or("--filter expects \"c:r1,r2,...\"")?;
    let residues: Result<Vec<i64>, _> = rest.split(',').map(|r| r.trim().parse()).collect();
    Ok(ResidueFilter {
        modulus: m.trim().parse()?,
        residues: residues?,
    })
}

fn report_exit(report: &CongruenceReport, json: bool) -> ExitCode {
    if json {
        println!("{}", serde_json::to_string(report).expect("report serializes"));
    } else {
        println!(
            "claim: {} at {}n + {} == 0 (mod {}) for n <= {}",
            report.claim.series_id,
            report.claim.step,
            report.claim.shift,
            report.claim.modulus,
            report.claim.n_max
        );
        match report.verdict {
            Verdict::HoldsOnRange => {
                println!("verdict: holds-on-range ({} coefficients checked)", report.verified_count);
            }
            Verdict::Violated => {
                println!("verdict: violated");
                for (n, value) in &report.violations {
                    println!("  n = {}: coefficient {} != 0", n, value);
                }
            }
        }
    }
    match report.verdict {
        Verdict::HoldsOnRange => ExitCode::SUCCESS,
        Verdict::Violated => ExitCode::from(1),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let residue_filter = args.filter.as_deref().map(parse_filter).transpose()?;
    let needed = args
        .step
        .checked_mul(args.nmax)
        .and_then(|x| x.checked_add(args.shift))
        .and_then(|x| x.checked_add(1))
        .ok_or("progression bound overflows")?;
    let (series, series_id) = match (&args.series, &args.load) {
        (Some(spec), None) => {
            let prec = args.prec.unwrap_or(needed);
            (build_series(spec, prec, Some(args.modulus))?, spec.clone())
        }
        (None, Some(path)) => {
            let s: QSeries = serde_json::from_str(&fs::read_to_string(path)?)?;
            (s, path.clone())
        }
        _ => return Err("exactly one of --series or --load is required".into()),
    };
    let claim = CongruenceClaim {
        series_id,
        step: args.step,
        shift: args.shift,
        modulus: args.modulus,
        n_max: args.nmax,
        residue_filter,
    };
    let report = verify_congruence(&claim, &series)?;
    Ok(report_exit(&report, args.json))
}

fn cmd_scan(args: ScanArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let needed = args
        .a_max
        .checked_mul(args.nmax + 1)
        .ok_or("scan bound overflows")?;
    let (series, series_id) = match (&args.series, &args.load) {
        (Some(spec), None) => {
            let prec = args.prec.unwrap_or(needed);
            (build_series(spec, prec, Some(args.modulus))?, spec.clone())
        }
        (None, Some(path)) => {
            let s: QSeries = serde_json::from_str(&fs::read_to_string(path)?)?;
            (s, path.clone())
        }
        _ => return Err("exactly one of --series or --load is required".into()),
    };
    let claims = scan_congruences_with_workers(
        &series,
        &series_id,
        args.modulus,
        args.a_max,
        args.nmax,
        args.workers.max(1),
    )?;
    if args.json {
        println!("{}", serde_json::to_string(&claims)?);
    } else if claims.is_empty() {
        println!("no vanishing progressions with A <= {}", args.a_max);
    } else {
        for claim in &claims {
            println!(
                "candidate: {}n + {} == 0 (mod {}) checked for n <= {}",
                claim.step, claim.shift, claim.modulus, claim.n_max
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reproduce(args: ReproduceArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match args.target {
        ReproduceTarget::Section6 => {
            let report = reproduce_section6()?;
            if args.json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                for check in &report.checks {
                    println!(
                        "{}: {} [{}] (checked to q^{})",
                        check.name,
                        check.description,
                        if check.passed { "ok" } else { "FAILED" },
                        check.checked_to
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        ReproduceTarget::Wreath1Mod5 => {
            let series = wreath_alt_series(1, 1250 * 3 + 1198 + 2, &CoefficientRing::residues(5)?)?;
            let claim = CongruenceClaim {
                series_id: "wreath-alt:1".into(),
                step: 1250,
                shift: 1198,
                modulus: 5,
                n_max: 3,
                residue_filter: None,
            };
            let report = verify_congruence(&claim, &series)?;
            Ok(report_exit(&report, args.json))
        }
        ReproduceTarget::Wreath1Mod49 => {
            let series =
                wreath_alt_series(1, 225_494 + 2, &CoefficientRing::residues(49)?)?;
            let claim = CongruenceClaim {
                series_id: "wreath-alt:1".into(),
                step: 2 * 117_649,
                shift: 225_494,
                modulus: 49,
                n_max: 0,
                residue_filter: None,
            };
            let report = verify_congruence(&claim, &series)?;
            Ok(report_exit(&report, args.json))
        }
    }
}

fn cmd_oracle(args: OracleArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    if let Some(n) = args.partitions {
        let predicate = if args.even {
            PartitionPredicate::EvenPartCount
        } else {
            PartitionPredicate::All
        };
        let count = oracle_partition_count(n, predicate)?;
        if args.json {
            println!(
                "{}",
                serde_json::json!({ "n": n, "even_part_count_only": args.even, "count": count })
            );
        } else {
            println!("{}", count);
        }
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(group) = &args.group {
        let (flavor_str, degree) = group
            .split_once(':')
            .ok_or("--group expects \"sym:m\" or \"alt:m\"")?;
        let flavor = match flavor_str {
            "sym" => GroupFlavor::Symmetric,
            "alt" => GroupFlavor::Alternating,
            other => return Err(format!("unknown group flavor {:?}", other).into()),
        };
        let generators = match args.gens.ok_or("--gens is required with --group")? {
            GensArg::Coxeter => GeneratorSet::Coxeter,
            GensArg::AllTranspositions => GeneratorSet::AllTranspositions,
            GensArg::Consecutive3Cycles => GeneratorSet::Consecutive3Cycles,
            GensArg::All3Cycles => GeneratorSet::All3Cycles,
        };
        let spec = GroupSpec {
            degree: degree.parse()?,
            flavor,
            generators,
        };
        let n_max = args.nmax.ok_or("--nmax is required with --group")?;
        let gamma = oracle_bfs_conjugacy_growth(&spec, n_max)?;
        if args.json {
            println!("{}", serde_json::json!({ "group": group, "gamma": gamma }));
        } else {
            println!(
                "{}",
                gamma
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
        return Ok(ExitCode::SUCCESS);
    }
    Err("one of --partitions or --group is required".into())
}
