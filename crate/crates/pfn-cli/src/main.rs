//! Command-line front end for the poset engine.
//!
//! Every command writes deterministic output for fixed arguments: elements
//! appear in the canonical enumeration order, JSON fields in declaration
//! order, map keys sorted.  Exit codes are CI-friendly: 0 success, 1
//! verification failure, 2 usage error, 3 size-guard refusal.

use clap::{Parser, Subcommand, ValueEnum};
use pfn::census::skew_rank_census;
use pfn::export::{hasse_dot, hasse_json, CensusJson};
use pfn::involution::{enumerate_arcs, enumerate_pf, involution_number, PartialInvolution};
use pfn::labeling::{verify_el_interval, ElLabeling};
use pfn::poset::{leq, Poset, DEFAULT_MAX_N};
use pfn::qseries::{
    check_i_recurrence, check_p_recurrence, i_poly_closed, i_poly_enum, p_poly, skew_count_poly,
};
use pfn::verify::{run_all, run_suite, Suite, SuiteReport};
use pfn::QPoly;
use num_bigint::BigInt;
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "pfn",
    version,
    about = "Bruhat order on partial fixed-point-free involutions: enumeration, Hasse export, verification, generating functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the elements of a given size in canonical order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only elements with exactly this many arcs.
        #[arg(long)]
        arcs: Option<usize>,
        #[arg(long, value_enum, default_value_t = ListFormat::Oneline)]
        format: ListFormat,
        /// Bypass the size guard.
        #[arg(long)]
        force: bool,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the Hasse diagram as DOT or JSON.
    Hasse {
        #[arg(long)]
        n: usize,
        /// Attach edge labels and move classes.
        #[arg(long)]
        labels: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare two elements: prints <, >, = or incomparable.
    Compare {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Show a closed interval of the poset.
    Interval {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Also verify the EL property on this interval.
        #[arg(long)]
        check_el: bool,
        #[arg(long)]
        force: bool,
    },
    /// Run verification suites; exits 0 only if everything passes.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SuiteChoice::All)]
        suite: SuiteChoice,
        /// Machine-readable report.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        force: bool,
    },
    /// Length generating functions as a CSV table.
    Polys {
        #[arg(long)]
        n: usize,
        /// Restrict to one arc count.
        #[arg(long)]
        k: Option<usize>,
        /// Cross-check the table before printing it.
        #[arg(long, value_enum)]
        check: Option<CheckKind>,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Point counts of fixed-rank alternating matrices over a small field.
    Zeta {
        #[arg(long)]
        n: usize,
        /// Field size: 2, 3 or 5.
        #[arg(long)]
        q: u64,
        /// Cross-check the formula against the brute-force census.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Möbius function: of the whole poset, or of one interval.
    Mobius {
        #[arg(long)]
        n: usize,
        #[arg(long, requires = "y")]
        x: Option<String>,
        #[arg(long, requires = "x")]
        y: Option<String>,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Oneline,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Closed,
    Recurrence,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteChoice {
    Grading,
    Length,
    El,
    Topology,
    Qseries,
    All,
}

/// A failed run, tagged with its exit code.
enum Failure {
    /// Exit 1: a verification ran and found a violation.
    Verification(String),
    /// Exit 2: arguments were well-formed flags but semantically unusable.
    Usage(String),
    /// Exit 3: refused by a size guard.
    Guard(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Guard(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Guard(m) => m,
        }
    }
}

fn from_lib_error(e: pfn::Error) -> Failure {
    match e {
        pfn::Error::SizeGuard { .. } | pfn::Error::UnsupportedCensus { .. } => {
            Failure::Guard(format!("{e} (use --force where supported)"))
        }
        other => Failure::Usage(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap prints its own message and uses exit 2 for usage errors,
        // 0 for --help/--version
        Err(e) => e.exit(),
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Enumerate {
            n,
            arcs,
            format,
            force,
            out,
        } => enumerate_cmd(n, arcs, format, force, out),
        Command::Hasse {
            n,
            labels,
            format,
            force,
            out,
        } => hasse_cmd(n, labels, format, force, out),
        Command::Compare { n, x, y } => compare_cmd(n, &x, &y),
        Command::Interval {
            n,
            x,
            y,
            check_el,
            force,
        } => interval_cmd(n, &x, &y, check_el, force),
        Command::Verify {
            n,
            suite,
            json,
            force,
        } => verify_cmd(n, suite, json, force),
        Command::Polys {
            n,
            k,
            check,
            force,
            out,
        } => polys_cmd(n, k, check, force, out),
        Command::Zeta { n, q, oracle, out } => zeta_cmd(n, q, oracle, out),
        Command::Mobius { n, x, y, force } => mobius_cmd(n, x.as_deref(), y.as_deref(), force),
    }
}

// === shared plumbing ===

fn guard(n: usize, force: bool, what: &str) -> Result<(), Failure> {
    if n > DEFAULT_MAX_N && !force {
        return Err(Failure::Guard(format!(
            "size {n} exceeds the default guard {DEFAULT_MAX_N} for {what}; pass --force to proceed"
        )));
    }
    if n > DEFAULT_MAX_N {
        let count = involution_number(n);
        let matrix_mib = (count * count) as f64 / 4.0 / (1024.0 * 1024.0);
        eprintln!("# forced: ~{count} elements, ~{matrix_mib:.1} MiB order matrices");
    }
    Ok(())
}

fn build_poset(n: usize, force: bool) -> Result<Poset, Failure> {
    guard(n, force, "poset construction")?;
    Poset::build_forced(n).map_err(from_lib_error)
}

fn parse_element(n: usize, word: &str) -> Result<PartialInvolution, Failure> {
    let x: PartialInvolution = word
        .parse()
        .map_err(|e: pfn::Error| Failure::Usage(format!("cannot parse {word:?}: {e}")))?;
    if x.n() != n {
        return Err(Failure::Usage(format!(
            "{word:?} has size {}, but --n {n} was given",
            x.n()
        )));
    }
    Ok(x)
}

fn emit(text: &str, out: Option<PathBuf>) -> Result<(), Failure> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
    }
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    text.push('\n');
    text
}

// === subcommands ===

fn enumerate_cmd(
    n: usize,
    arcs: Option<usize>,
    format: ListFormat,
    force: bool,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    guard(n, force, "enumeration")?;
    let elements = match arcs {
        Some(k) => enumerate_arcs(n, k),
        None => enumerate_pf(n),
    };
    let text = match format {
        ListFormat::Oneline => {
            let mut text = String::new();
            for x in &elements {
                text.push_str(&x.to_string());
                text.push('\n');
            }
            text
        }
        ListFormat::Json => {
            #[derive(Serialize)]
            struct Listing {
                n: usize,
                count: usize,
                elements: Vec<String>,
            }
            to_pretty_json(&Listing {
                n,
                count: elements.len(),
                elements: elements.iter().map(|x| x.to_string()).collect(),
            })
        }
    };
    emit(&text, out)
}

fn hasse_cmd(
    n: usize,
    labels: bool,
    format: GraphFormat,
    force: bool,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let poset = build_poset(n, force)?;
    let labeling = if labels {
        Some(ElLabeling::new(&poset).map_err(from_lib_error)?)
    } else {
        None
    };
    let text = match format {
        GraphFormat::Dot => hasse_dot(&poset, labeling.as_ref()),
        GraphFormat::Json => to_pretty_json(&hasse_json(&poset, labeling.as_ref())),
    };
    emit(&text, out)
}

fn compare_cmd(n: usize, x: &str, y: &str) -> Result<(), Failure> {
    let a = parse_element(n, x)?;
    let b = parse_element(n, y)?;
    let forward = leq(&a, &b).map_err(from_lib_error)?;
    let backward = leq(&b, &a).map_err(from_lib_error)?;
    println!(
        "{}",
        match (forward, backward) {
            (true, true) => "=",
            (true, false) => "<",
            (false, true) => ">",
            (false, false) => "incomparable",
        }
    );
    Ok(())
}

fn interval_cmd(n: usize, x: &str, y: &str, check_el: bool, force: bool) -> Result<(), Failure> {
    let poset = build_poset(n, force)?;
    let a = parse_element(n, x)?;
    let b = parse_element(n, y)?;
    let ai = poset.index_of(&a).expect("validated element is enumerated");
    let bi = poset.index_of(&b).expect("validated element is enumerated");
    if !poset.leq_idx(ai, bi) {
        println!("incomparable; empty interval");
        return Ok(());
    }
    let interval = poset.interval(ai, bi).map_err(from_lib_error)?;
    println!(
        "interval [{a} .. {b}]: {} elements, length {}",
        interval.size(),
        interval.length()
    );
    for &m in &interval.members {
        println!("  {} (rank {})", poset.element(m), poset.rank(m));
    }
    if check_el {
        let labeling = ElLabeling::new(&poset).map_err(from_lib_error)?;
        let report = verify_el_interval(&poset, &labeling, ai, bi);
        if report.pass() {
            println!("el: 1 increasing chain, lex-smallest increasing");
        } else {
            return Err(Failure::Verification(format!(
                "el check failed: {} increasing chains, lex-smallest increasing: {}",
                report.increasing_chains, report.lex_smallest_ok
            )));
        }
    }
    Ok(())
}

fn verify_cmd(n: usize, suite: SuiteChoice, json: bool, force: bool) -> Result<(), Failure> {
    guard(n, force, "verification")?;
    let reports: Vec<SuiteReport> = match suite {
        SuiteChoice::All => run_all(n, force).map_err(from_lib_error)?,
        single => {
            let suite = match single {
                SuiteChoice::Grading => Suite::Grading,
                SuiteChoice::Length => Suite::Length,
                SuiteChoice::El => Suite::El,
                SuiteChoice::Topology => Suite::Topology,
                SuiteChoice::Qseries => Suite::Qseries,
                SuiteChoice::All => unreachable!(),
            };
            vec![run_suite(suite, n, force).map_err(from_lib_error)?]
        }
    };
    if json {
        print!("{}", to_pretty_json(&reports));
    } else {
        for report in &reports {
            println!("{report}");
        }
    }
    match reports.iter().filter(|r| !r.passed).count() {
        0 => Ok(()),
        failed => Err(Failure::Verification(format!("{failed} suite(s) failed"))),
    }
}

fn csv_field(poly: &QPoly) -> (String, String) {
    let coeffs = poly
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let compact = poly.to_string().replace(' ', "");
    (coeffs, compact)
}

fn polys_cmd(
    n: usize,
    k: Option<usize>,
    check: Option<CheckKind>,
    force: bool,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    guard(n, force, "polynomial tables")?;
    if let Some(k) = k {
        if 2 * k > n {
            return Err(Failure::Usage(format!(
                "k = {k} needs 2k <= n, but n = {n}"
            )));
        }
    }
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=n / 2).collect(),
    };
    let mut text = String::from("n,k,coefficients,polynomial\n");
    for &k in &ks {
        let (coeffs, compact) = csv_field(&i_poly_enum(n, k));
        text.push_str(&format!("{n},{k},\"{coeffs}\",\"{compact}\"\n"));
    }
    if k.is_none() {
        let (coeffs, compact) = csv_field(&p_poly(n));
        text.push_str(&format!("{n},all,\"{coeffs}\",\"{compact}\"\n"));
    }
    if let Some(kind) = check {
        if matches!(kind, CheckKind::Closed | CheckKind::All) {
            for &k in &ks {
                if i_poly_enum(n, k) != i_poly_closed(n, k) {
                    return Err(Failure::Verification(format!(
                        "closed form disagrees with enumeration at (n={n}, k={k})"
                    )));
                }
            }
            text.push_str("# check closed: ok\n");
        }
        if matches!(kind, CheckKind::Recurrence | CheckKind::All) {
            if n < 2 {
                text.push_str("# check recurrence: skipped (needs n >= 2)\n");
            } else {
                if !check_p_recurrence(n - 1) {
                    return Err(Failure::Verification(format!(
                        "length recurrence fails stepping to n={n}"
                    )));
                }
                for &k in &ks {
                    if !check_i_recurrence(n - 1, k) {
                        return Err(Failure::Verification(format!(
                            "arc-count recurrence fails at (n={n}, k={k})"
                        )));
                    }
                }
                text.push_str("# check recurrence: ok\n");
            }
        }
    }
    emit(&text, out)
}

fn zeta_cmd(n: usize, q: u64, oracle: bool, out: Option<PathBuf>) -> Result<(), Failure> {
    if !matches!(q, 2 | 3 | 5) {
        return Err(Failure::Guard(format!("q = {q} is not supported (use 2, 3 or 5)")));
    }
    if n > DEFAULT_MAX_N {
        return Err(Failure::Guard(format!(
            "size {n} exceeds the guard {DEFAULT_MAX_N} for point counts"
        )));
    }
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for k in 0..=n / 2 {
        let value = skew_count_poly(n, k).eval(&BigInt::from(q));
        let value = u64::try_from(&value).expect("counts fit in u64 at guarded sizes");
        if value > 0 {
            counts.insert(2 * k, value);
        }
    }
    if oracle {
        let censused = skew_rank_census(n, q).map_err(from_lib_error)?;
        if censused != counts {
            return Err(Failure::Verification(format!(
                "census disagrees with the formula: counted {censused:?}, predicted {counts:?}"
            )));
        }
    }
    emit(&to_pretty_json(&CensusJson { n, q, counts }), out)
}

fn mobius_cmd(n: usize, x: Option<&str>, y: Option<&str>, force: bool) -> Result<(), Failure> {
    let poset = build_poset(n, force)?;
    let (bottom, top) = match (x, y) {
        (Some(x), Some(y)) => {
            let a = parse_element(n, x)?;
            let b = parse_element(n, y)?;
            (
                poset.index_of(&a).expect("validated element is enumerated"),
                poset.index_of(&b).expect("validated element is enumerated"),
            )
        }
        _ => (poset.min_idx(), poset.max_idx()),
    };
    let mu = poset.mobius(bottom, top).map_err(from_lib_error)?;
    println!("{mu}");
    Ok(())
}
