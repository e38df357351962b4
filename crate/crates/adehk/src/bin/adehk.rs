//! Command-line front end: Hilbert-Kunz values, multiplicities, F-signature,
//! syzygy Hilbert series, classification, δ/τ evaluation, catalog listings,
//! pull-backs, matrix factorization checks, and CSV sweeps.
//!
//! Exit codes: 0 ok, 2 argument/parse errors, 3 mathematical inconsistency
//! (closed form vs. oracle mismatch, non-integral values, failed checks).

use adehk::catalog::{CatalogSeries, FrobeniusClass, PullbackTarget, Summand};
use adehk::engine::{classify_with, syzygy_series, Classification};
use adehk::field::Field;
use adehk::hk::{f_signature, hk_multiplicity, hk_report, HkError};
use adehk::matfac::{column_choice_check, kernel_vector, parse_matrix, MatFac};
use adehk::poly::{format_poly, parse_poly, WeightedOrder};
use adehk::rat::{parse_rat, Rat};
use adehk::AdeRing;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

const DEFAULT_ORACLE_CAP: u64 = 1_000_000;
const VARS: [&str; 3] = ["X", "Y", "Z"];

fn oracle_cap() -> u64 {
    std::env::var("HK_ORACLE_DEGREE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

#[derive(Parser)]
#[command(name = "adehk", about = "Hilbert-Kunz arithmetic on the ADE surface singularities", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Args)]
struct RingArg {
    /// Ring selector: E6 | E7 | E8 | A:n=<k> | D:n=<k> (D_{k+2})
    #[arg(long)]
    ring: String,
}

impl RingArg {
    fn parse(&self) -> Result<AdeRing, CliError> {
        AdeRing::parse(&self.ring).map_err(CliError::Usage)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert-Kunz value HK(p^e), optionally verified against the oracle
    Hk {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        e: u32,
        /// cross-check against the Gröbner oracle (skipped above the cap)
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Hilbert-Kunz multiplicity 2 - 1/|G|
    Ehk {
        #[command(flatten)]
        ring: RingArg,
    },
    /// F-signature 2p^{2e} - HK(p^e) (types D and E)
    Fsig {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        e: u32,
    },
    /// Hilbert series of Syz(X^a, Y^b, Z^c) over the ring
    Series {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        c: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Classify Syz(X^a, Y^b, Z^c) against the catalog
    Classify {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        c: u32,
    },
    /// Han's δ-function on a rational triple
    Delta {
        #[arg(long)]
        p: u64,
        /// comma-separated rationals, e.g. 30,31/3,31/5
        #[arg(long)]
        t: String,
    },
    /// Weighted τ-function: a·alpha·δ(t1, t2/a, t3/b)
    Tau {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        alpha: i64,
        #[arg(long)]
        beta: i64,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        t: String,
    },
    /// List the indecomposable MCM modules of the ring
    Catalog {
        #[command(flatten)]
        ring: RingArg,
        /// also print Hilbert series (computed over F_p)
        #[arg(long)]
        series: bool,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Pull-back of a catalog module along a subring inclusion
    Pullback {
        #[command(flatten)]
        ring: RingArg,
        /// target: A1 | A2h-1 | Ah-1
        #[arg(long)]
        target: String,
        #[arg(long)]
        index: u32,
    },
    /// Matrix factorization checks
    Mf {
        #[command(subcommand)]
        action: MfAction,
    },
    /// HK sweep over rings × primes × exponents, CSV output
    Sweep {
        /// comma-separated ring selectors
        #[arg(long)]
        rings: String,
        #[arg(long)]
        p_max: u64,
        #[arg(long)]
        e_max: u32,
        #[arg(long)]
        verify: bool,
        /// output file; stdout when absent
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum MfAction {
    /// Verify φψ = ψφ = F·E_n, reducedness, and the cokernel rank
    Verify {
        /// file with two bracketed matrices (φ then ψ), row-major
        #[arg(long)]
        file: String,
        /// defining polynomial, e.g. "X^2 + Y^3 + Z^5"
        #[arg(long = "F")]
        f: String,
        #[arg(long)]
        p: u64,
        /// weights of X, Y, Z, comma-separated
        #[arg(long, default_value = "15,10,6")]
        weights: String,
    },
    /// Kernel vector of ψ with one column deleted
    Kernel {
        #[arg(long)]
        file: String,
        #[arg(long = "F")]
        f: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value = "15,10,6")]
        weights: String,
        /// 1-based column of ψ to delete
        #[arg(long)]
        drop_column: usize,
    },
}

enum CliError {
    Usage(String),
    Math(String),
}

impl From<HkError> for CliError {
    fn from(e: HkError) -> Self {
        CliError::Math(e.to_string())
    }
}

fn engine_error(e: adehk::engine::EngineError) -> CliError {
    match e {
        adehk::engine::EngineError::UnsupportedFamily => CliError::Usage(e.to_string()),
        other => CliError::Math(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Math(msg)) => {
            eprintln!("inconsistency: {msg}");
            ExitCode::from(3)
        }
    }
}

fn parse_triple(s: &str) -> Result<[Rat; 3], CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!("expected three rationals, got '{s}'")));
    }
    let mut out = Vec::new();
    for part in parts {
        out.push(parse_rat(part.trim()).map_err(CliError::Usage)?);
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

fn parse_weights(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|w| {
            w.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("bad weight '{w}'")))
        })
        .collect()
}

fn classification_text(class: &Classification) -> String {
    match class {
        Classification::Catalog { index, shift } => format!("M_{index} twist {shift}"),
        Classification::FreeSplit { shifts: (m, n) } => format!("free R(-{m})+R(-{n})"),
        Classification::Unknown => "unknown".to_string(),
    }
}

fn summands_text(sum: &[Summand]) -> String {
    sum.iter()
        .map(|s| match s {
            Summand::O => "O".to_string(),
            Summand::M(i) => format!("M_{i}"),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn run(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Hk { ring, p, e, verify, format } => {
            let ring = ring.parse()?;
            let cap = verify.then(oracle_cap);
            let report = hk_report(&ring, p, e, cap)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                ),
                Format::Plain => {
                    println!("ring: {}", report.ring);
                    println!("q: {p}^{e}");
                    println!("value: {}", report.value);
                    println!("route: {:?}", report.route);
                    match &report.oracle_value {
                        Some(o) => println!("oracle: {o}"),
                        None if verify => println!("oracle: skipped (above cap)"),
                        None => {}
                    }
                    println!("class: {}", report.frobenius_class);
                }
                Format::Csv => {
                    println!("ring,p,e,value,oracle,route");
                    println!(
                        "{},{},{},{},{},{:?}",
                        report.ring,
                        p,
                        e,
                        report.value,
                        report.oracle_value.as_deref().unwrap_or(""),
                        report.route
                    );
                }
            }
            Ok(())
        }
        Command::Ehk { ring } => {
            println!("{}", hk_multiplicity(&ring.parse()?));
            Ok(())
        }
        Command::Fsig { ring, p, e } => {
            let value = f_signature(&ring.parse()?, p, e)?;
            println!("{value}");
            Ok(())
        }
        Command::Series { ring, p, a, b, c, format } => {
            let ring = ring.parse()?;
            let series = syzygy_series(&ring, p, a, b, c).map_err(engine_error)?;
            match format {
                Format::Json => {
                    let num: Vec<(i64, i64)> = series.numerator().terms().collect();
                    let value = serde_json::json!({
                        "numerator": num,
                        "denominator_weights": series.denominator_weights(),
                    });
                    println!("{value}");
                }
                _ => println!("{series}"),
            }
            Ok(())
        }
        Command::Classify { ring, p, a, b, c } => {
            let ring = ring.parse()?;
            let series = syzygy_series(&ring, p, a, b, c).map_err(engine_error)?;
            // catalog series need p coprime to |G|; free splits can still be
            // recognized without them
            let cats = if ring.group_order() % p == 0 {
                Vec::new()
            } else {
                ring.catalog_series(p)
            };
            println!("{}", classification_text(&classify_with(&series, &ring, &cats)));
            Ok(())
        }
        Command::Delta { p, t } => {
            let t = parse_triple(&t)?;
            let value = adehk::delta::delta(p, &t).map_err(|e| CliError::Usage(e.to_string()))?;
            println!("{value}");
            Ok(())
        }
        Command::Tau { p, alpha, beta, a, b, t } => {
            let t = parse_triple(&t)?;
            let value = adehk::delta::tau(p, alpha, beta, a, b, &t)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            println!("{value}");
            Ok(())
        }
        Command::Catalog { ring, series, p } => {
            let ring = ring.parse()?;
            let entries = ring.catalog();
            let all_series = if series {
                let p = p.unwrap_or_else(|| ring.default_prime());
                if ring.group_order() % p == 0 {
                    return Err(CliError::Usage(format!(
                        "p = {p} divides the group order {}; pick a coprime prime",
                        ring.group_order()
                    )));
                }
                Some((p, ring.catalog_series(p)))
            } else {
                None
            };
            println!("{} (|G| = {}, weights {:?})", ring, ring.group_order(), ring.weights());
            for entry in &entries {
                let dual = if entry.dual_index == entry.index {
                    "self-dual".to_string()
                } else {
                    format!("dual M_{}", entry.dual_index)
                };
                println!(
                    "M_{}: rank {}, Syz({}), {}",
                    entry.index,
                    entry.rank,
                    entry.generators.join(", "),
                    dual
                );
                if let Some((p, list)) = &all_series {
                    match &list[(entry.index - 1) as usize] {
                        CatalogSeries::Closed(h) => println!("   H (F_{p}): {h}"),
                        CatalogSeries::Truncated(coeffs) => {
                            let head: Vec<i64> = coeffs.iter().take(24).copied().collect();
                            println!("   H (F_{p}): truncated {head:?}...");
                        }
                    }
                }
            }
            Ok(())
        }
        Command::Pullback { ring, target, index } => {
            let ring = ring.parse()?;
            let target = match target.to_ascii_uppercase().replace(['_', ' '], "").as_str() {
                "A1" => PullbackTarget::A1,
                "A2H-1" | "A2H1" => PullbackTarget::A2hMinus1,
                "AH-1" | "AH1" => PullbackTarget::AhMinus1,
                other => return Err(CliError::Usage(format!("unknown target '{other}'"))),
            };
            let summands = ring.pullback(target, index).map_err(CliError::Usage)?;
            println!("{}", summands_text(&summands));
            Ok(())
        }
        Command::Mf { action } => run_mf(action),
        Command::Sweep { rings, p_max, e_max, verify, out } => {
            run_sweep(&rings, p_max, e_max, verify, out.as_deref())
        }
    }
}

fn load_matrices(
    path: &str,
    field: &Field,
    order: &WeightedOrder,
) -> Result<(adehk::matfac::Matrix, adehk::matfac::Matrix), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    // two top-level [[...]] blocks
    let mut blocks = Vec::new();
    let mut depth = 0usize;
    let mut start = None;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' => {
                if depth == 0 {
                    start = Some(i);
                }
                depth += 1;
            }
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| CliError::Usage("unbalanced brackets".into()))?;
                if depth == 0 {
                    blocks.push(&text[start.unwrap()..=i]);
                }
            }
            _ => {}
        }
    }
    if blocks.len() != 2 {
        return Err(CliError::Usage(format!(
            "expected two matrices in {path}, found {}",
            blocks.len()
        )));
    }
    let phi = parse_matrix(blocks[0], &VARS, field, order, None)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let psi = parse_matrix(blocks[1], &VARS, field, order, None)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok((phi, psi))
}

fn run_mf(action: MfAction) -> Result<(), CliError> {
    match action {
        MfAction::Verify { file, f, p, weights } => {
            let field = Field::prime(p);
            let order = WeightedOrder::new(&parse_weights(&weights)?);
            let fpoly = parse_poly(&f, &VARS, &field, &order, None).map_err(CliError::Usage)?;
            let (phi, psi) = load_matrices(&file, &field, &order)?;
            let mf = MatFac::new(phi, psi, fpoly).map_err(|e| CliError::Usage(e.to_string()))?;
            let outcome = mf.verify(&field, &order);
            println!("valid: {}", outcome.valid);
            println!("reduced: {}", outcome.reduced);
            if !outcome.valid {
                return Err(CliError::Math("products do not equal F times the identity".into()));
            }
            let rank = mf.coker_rank(&field, &order).map_err(|e| CliError::Math(e.to_string()))?;
            println!("coker rank: {rank}");
            for j in 0..mf.n {
                let ok = column_choice_check(&mf.psi_without_column(j), &mf.f, &field, &order);
                println!("column {} deletion keeps full rank off origin: {ok}", j + 1);
            }
            Ok(())
        }
        MfAction::Kernel { file, f, p, weights, drop_column } => {
            let field = Field::prime(p);
            let order = WeightedOrder::new(&parse_weights(&weights)?);
            let fpoly = parse_poly(&f, &VARS, &field, &order, None).map_err(CliError::Usage)?;
            let (_, psi) = load_matrices(&file, &field, &order)?;
            if drop_column == 0 || drop_column > psi[0].len() {
                return Err(CliError::Usage(format!("no column {drop_column}")));
            }
            let psi_j: adehk::matfac::Matrix = psi
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != drop_column - 1)
                        .map(|(_, q)| q.clone())
                        .collect()
                })
                .collect();
            let v = kernel_vector(&psi_j, &fpoly, &field, &order, None)
                .map_err(|e| CliError::Math(e.to_string()))?;
            let rendered: Vec<String> = v.iter().map(|q| format_poly(q, &VARS, &field)).collect();
            println!("({})", rendered.join(", "));
            Ok(())
        }
    }
}

fn run_sweep(
    rings: &str,
    p_max: u64,
    e_max: u32,
    verify: bool,
    out: Option<&str>,
) -> Result<(), CliError> {
    let rings: Vec<AdeRing> = rings
        .split(',')
        .map(|s| AdeRing::parse(s.trim()).map_err(CliError::Usage))
        .collect::<Result<_, _>>()?;
    let cap = verify.then(oracle_cap);
    let mut lines = vec!["ring,p,e,value,oracle,class,twist,route".to_string()];
    for ring in &rings {
        for p in 2..=p_max {
            if !adehk::field::is_prime(p) {
                continue;
            }
            for e in 1..=e_max {
                let report = hk_report(ring, p, e, cap)?;
                let (class, twist) = match ring.frobenius_class(p, e) {
                    FrobeniusClass::Catalog { index, twist, .. } => {
                        (format!("M_{index}"), twist.to_string())
                    }
                    FrobeniusClass::FreeSplit { shifts: (m, n) } => {
                        (format!("free({m},{n})"), String::new())
                    }
                    FrobeniusClass::KunzFormula => ("kunz".to_string(), String::new()),
                };
                lines.push(format!(
                    "{},{},{},{},{},{},{},{:?}",
                    ring,
                    p,
                    e,
                    report.value,
                    report.oracle_value.as_deref().unwrap_or(""),
                    class,
                    twist,
                    report.route
                ));
            }
        }
    }
    let body = lines.join("\n") + "\n";
    match out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| CliError::Usage(format!("cannot write {path}: {e}")))?,
        None => print!("{body}"),
    }
    Ok(())
}
