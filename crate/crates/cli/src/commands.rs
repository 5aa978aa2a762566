use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Subcommand, ValueEnum};
use hashfam::ca::{compose_dhf, compose_hetgen, compose_phf, verify_ca, CoveringArray};
use hashfam::covering::Covering;
use hashfam::tables::{diff_against_fixtures, dn2_sweep, ExistenceTable, Source, TableEntry};
use hashfam::text::parse_family;
use hashfam::verify::{check_column_bound, check_niu_cao, check_singleton_cover, BoundCheckResult};
use hashfam::verify::{
    dhhf_enumeration_count, fractal_enumeration_count, sample_verify, sample_verify_fractal,
    verify_dhhf, verify_fractal, EXHAUSTIVE_BUDGET,
};
use hashfam::{HashFamily, VerifyReport};
use log::info;

use crate::Outcome;

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn read_family(path: &Path) -> Result<HashFamily> {
    parse_family(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

pub fn read_covering(path: &Path) -> Result<Covering> {
    Covering::parse(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

pub fn read_ca(path: &Path) -> Result<CoveringArray> {
    CoveringArray::parse(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// Writes `text` to `out` (printing `summary`) or to stdout.
pub fn emit(text: &str, out: Option<&Path>, summary: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            println!("{summary} -> {}", path.display());
        }
        None => {
            print!("{text}");
            eprintln!("{summary}");
        }
    }
    Ok(())
}

pub fn summary(a: &HashFamily) -> String {
    let mut s = format!("HF {} {} widths {}", a.rows(), a.cols(), a.width_profile());
    if let (Some(t), Some(p)) = (a.claimed_strength(), a.claimed_parts()) {
        s.push_str(&format!(" strength {t} parts {p}"));
    }
    s
}

fn report_outcome(report: &VerifyReport) -> Outcome {
    println!("{report}");
    if report.passed() {
        Outcome::Success
    } else {
        Outcome::Violation
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    /// Exhaustive distributing check.
    Dhhf,
    /// Exhaustive perfect check.
    Phf,
    /// Exhaustive fractality check (strength = rows).
    Fractal,
    /// The file is a covering (`COV n m d`).
    Covering,
    /// Seeded random distributing check.
    Sample,
    /// Seeded random fractality check.
    SampleFractal,
    /// The file is a covering array (`CA N k v t`).
    Ca,
}

#[derive(Args)]
pub struct VerifyArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    mode: VerifyMode,
    /// Strength (default: the file's claim).
    #[arg(short)]
    t: Option<usize>,
    /// Parts (default: the file's claim, else t).
    #[arg(short)]
    p: Option<usize>,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    /// Required by the sampling modes.
    #[arg(long)]
    seed: Option<u64>,
    /// Allow exhaustive runs above the enumeration budget.
    #[arg(long)]
    force: bool,
}

pub fn verify(args: VerifyArgs) -> Result<Outcome> {
    match args.mode {
        VerifyMode::Covering => {
            return match Covering::parse(&read_text(&args.file)?) {
                Ok(c) => {
                    println!(
                        "PASS covering n={} m={} d={} type={:?}",
                        c.n(),
                        c.m(),
                        c.d(),
                        c.type_vector()
                    );
                    Ok(Outcome::Success)
                }
                Err(hashfam::Error::UncoveredSubset(s)) => {
                    println!("FAIL uncovered subset {s:?}");
                    Ok(Outcome::Violation)
                }
                Err(e) => Err(e).with_context(|| format!("parsing {}", args.file.display())),
            };
        }
        VerifyMode::Ca => {
            let ca = read_ca(&args.file)?;
            let t = args.t.unwrap_or(ca.strength());
            return Ok(report_outcome(&verify_ca(&ca, t)?));
        }
        _ => {}
    }
    let a = read_family(&args.file)?;
    let claimed_t = args.t.or(a.claimed_strength());
    let report = match args.mode {
        VerifyMode::Fractal | VerifyMode::SampleFractal => {
            let t = args.t.unwrap_or(a.rows());
            let p = args.p.or(a.claimed_parts()).unwrap_or(t);
            if args.mode == VerifyMode::SampleFractal {
                sample_verify_fractal(&a, t, p, args.samples, require_seed(args.seed)?)?
            } else {
                guard(fractal_enumeration_count(a.cols(), t, p.min(t)), args.force)?;
                verify_fractal(&a, t, p)?
            }
        }
        mode => {
            let t =
                claimed_t.context("no strength given and the file carries no claim; pass -t")?;
            let p = match mode {
                VerifyMode::Phf => t,
                _ => args.p.or(a.claimed_parts()).unwrap_or(t),
            };
            if mode == VerifyMode::Sample {
                sample_verify(&a, t, p, args.samples, require_seed(args.seed)?)?
            } else {
                if t <= a.cols() {
                    guard(dhhf_enumeration_count(a.cols(), t, p.min(t)), args.force)?;
                }
                verify_dhhf(&a, t, p)?
            }
        }
    };
    Ok(report_outcome(&report))
}

fn require_seed(seed: Option<u64>) -> Result<u64> {
    seed.context("sampling needs an explicit --seed")
}

fn guard(count: u128, force: bool) -> Result<()> {
    if count > EXHAUSTIVE_BUDGET && !force {
        bail!(
            "exhaustive check needs {count} checks (budget {EXHAUSTIVE_BUDGET}); \
             use --mode sample or pass --force"
        );
    }
    Ok(())
}

#[derive(Args)]
pub struct BoundsArgs {
    file: PathBuf,
    /// Strength to test (default: the file's claim).
    #[arg(short)]
    t: Option<usize>,
    /// Parts (default: the file's claim, else t).
    #[arg(short)]
    p: Option<usize>,
}

/// Column bound and singleton cover when the strength exceeds the row
/// count, plus the Niu-Cao limit when it equals it.
pub fn bounds(args: BoundsArgs) -> Result<Outcome> {
    let a = read_family(&args.file)?;
    let t = args
        .t
        .or(a.claimed_strength())
        .context("no strength given and the file carries no claim; pass -t")?;
    let p = args.p.or(a.claimed_parts()).unwrap_or(t);
    let n = a.rows();
    let mut results: Vec<BoundCheckResult> = Vec::new();
    if t > n {
        results.push(check_column_bound(&a, t)?);
        let d = t - n;
        if p > d && d <= a.cols() {
            results.push(check_singleton_cover(&a, d)?);
        }
    }
    if t == n && p == t {
        results.push(check_niu_cao(a.cols(), a.max_width(), t));
    }
    if results.is_empty() {
        println!("no bound applies to {n} rows at strength {t} with {p} parts");
        return Ok(Outcome::Success);
    }
    for r in &results {
        println!("{r}");
    }
    Ok(if results.iter().all(|r| r.holds) {
        Outcome::Success
    } else {
        Outcome::Violation
    })
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComposeKind {
    Phf,
    Dhf,
    Hetgen,
}

#[derive(Args)]
pub struct ComposeArgs {
    #[arg(value_enum)]
    kind: ComposeKind,
    /// The hash family.
    #[arg(long)]
    family: PathBuf,
    /// Covering array(s); hetgen takes one per distinct width.
    #[arg(long, required = true)]
    ca: Vec<PathBuf>,
    /// Alphabet for the dhf composition (default: the covering array's).
    #[arg(short)]
    v: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Check the result exhaustively.
    #[arg(long)]
    verify: bool,
}

pub fn compose_ca(args: ComposeArgs) -> Result<Outcome> {
    let a = read_family(&args.family)?;
    let cas = args
        .ca
        .iter()
        .map(|p| read_ca(p))
        .collect::<Result<Vec<_>>>()?;
    let single = || -> Result<&CoveringArray> {
        match cas.as_slice() {
            [one] => Ok(one),
            _ => bail!("this composition takes exactly one covering array"),
        }
    };
    let out = match args.kind {
        ComposeKind::Phf => compose_phf(&a, single()?)?,
        ComposeKind::Dhf => {
            let ca = single()?;
            compose_dhf(&a, ca, args.v.unwrap_or(ca.v()))?
        }
        ComposeKind::Hetgen => compose_hetgen(&a, &cas)?,
    };
    let summary = format!(
        "CA {} {} {} {}",
        out.rows(),
        out.cols(),
        out.v(),
        out.strength()
    );
    emit(&out.to_text(), args.output.as_deref(), &summary)?;
    if args.verify {
        let report = verify_ca(&out, out.strength())?;
        eprintln!("{report}");
        if !report.passed() {
            return Ok(Outcome::Violation);
        }
    }
    Ok(Outcome::Success)
}

#[derive(Args)]
pub struct TablesArgs {
    /// Table file.
    #[arg(long, env = "HASHFAM_TABLES", default_value = "hashfam-tables.txt")]
    store: PathBuf,
    #[command(subcommand)]
    action: TablesAction,
}

#[derive(Subcommand)]
enum TablesAction {
    /// Record a family file that carries a strength claim.
    Record {
        file: PathBuf,
        #[arg(long)]
        method: String,
        #[arg(long, default_value = "constructed")]
        source: String,
    },
    /// Load the published values.
    ImportFixtures,
    /// Compare recorded constructions with the published values.
    Diff {
        /// Also run the four-row dn2 constructions.
        #[arg(long)]
        with_dn2_sweep: bool,
    },
    /// Print the table.
    Export,
}

fn load_table(path: &Path) -> Result<ExistenceTable> {
    if !path.exists() {
        info!("{} does not exist; starting an empty table", path.display());
        return Ok(ExistenceTable::new());
    }
    ExistenceTable::import(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn save_table(path: &Path, table: &ExistenceTable) -> Result<()> {
    fs::write(path, table.export()).with_context(|| format!("writing {}", path.display()))
}

pub fn tables(args: TablesArgs) -> Result<Outcome> {
    let mut table = load_table(&args.store)?;
    match args.action {
        TablesAction::Record {
            file,
            method,
            source,
        } => {
            let a = read_family(&file)?;
            let source: Source = source.parse()?;
            let entry = TableEntry::from_family(&a, &method, source)?;
            let line = entry.to_string();
            if table.record(entry)? {
                save_table(&args.store, &table)?;
                println!("recorded {line}");
            } else {
                println!("not an improvement: {line}");
            }
        }
        TablesAction::ImportFixtures => {
            let n = table.import_fixtures();
            save_table(&args.store, &table)?;
            println!("imported {n} fixtures into {}", args.store.display());
        }
        TablesAction::Diff { with_dn2_sweep } => {
            let mut constructed: Vec<TableEntry> = table.entries().cloned().collect();
            if with_dn2_sweep {
                constructed.extend(dn2_sweep()?);
            }
            println!("{}", diff_against_fixtures(&constructed));
        }
        TablesAction::Export => print!("{}", table.export()),
    }
    Ok(Outcome::Success)
}
