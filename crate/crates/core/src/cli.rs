//! The `qp` command line.
//!
//! Exit codes: 0 ok, 2 input error, 3 budget exhausted, 4 verification
//! failure, 1 anything else. Errors are printed to stderr as JSON.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::analysis::Analysis;
use crate::chartab::{character_table, CharacterTable, RawTable};
use crate::codegree::{
    classify, codegrees, verify_identities, ClassifierReport, Status, VerificationReport,
};
use crate::corpus::{self, CorpusEntry, Tier};
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, DEFAULT_MAX_ORDER, HARD_MAX_ORDER};
use crate::pcparse::parse_group;
use crate::quasiperm::Budget;

pub const SCHEMA: &str = "qp-report/1";
pub const ENGINE: &str = concat!("qpdeg ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Parser)]
#[command(
    name = "qp",
    version,
    about = "Minimal faithful quasi-permutation degrees and codegrees"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Largest group order to realize (at most 20000).
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_group_order: usize,
    /// Subgroup budget for Ford pairs and lattice-dependent flags.
    #[arg(long, global = true, default_value_t = crate::codegree::DEFAULT_MAX_SUBGROUPS)]
    pub max_subgroups: usize,
    /// Kernel family budget of the c(G) search.
    #[arg(long, global = true, default_value_t = Budget::default().max_families)]
    pub max_families: usize,
    /// Witness expansion budget of the c(G) search.
    #[arg(long, global = true, default_value_t = Budget::default().max_expansions)]
    pub max_expansions: usize,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub parallel: Option<usize>,
    /// Character table cache directory (QP_CACHE overrides).
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Include wall-clock timings in reports.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct Input {
    /// Group file (PC text, permutation text, or JSON).
    pub path: Option<PathBuf>,
    /// Corpus entry instead of a file.
    #[arg(long)]
    pub group: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full JSON report.
    Report(Input),
    /// Run the identity checks over corpus groups.
    Verify(Selector),
    /// Inspect the bundled corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// CSV of c(G) against the codegree sum.
    Table(Selector),
    /// c(G) and every optimal witness.
    Cmin(Input),
    /// Codegrees of every irreducible.
    Cod(Input),
    /// Structural flags.
    Classify(Input),
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    List,
    Show { name: String },
}

#[derive(Debug, Clone, Args)]
pub struct Selector {
    /// Every corpus entry up to --max-order.
    #[arg(long)]
    pub all: bool,
    /// Order limit for --all.
    #[arg(long, default_value_t = 243)]
    pub max_order: usize,
    /// A corpus entry, or `m-p-n` together with --p and --n.
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub p: Option<u64>,
    /// A single n or a range `a..b` (inclusive).
    #[arg(long)]
    pub n: Option<String>,
    /// Also run slow-tier entries under --all.
    #[arg(long)]
    pub slow: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
    pub exponent: u64,
    pub prime: Option<u64>,
    pub center_order: usize,
    pub center_invariants: Vec<u64>,
    pub class_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct MemberInfo {
    pub index: usize,
    pub degree: u64,
    pub kernel_order: usize,
    pub cod: u64,
    pub field_degree: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessInfo {
    pub members: Vec<MemberInfo>,
    pub xi_degree: u64,
    pub m_value: u64,
    pub total: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub table_ms: u128,
    pub solver_ms: u128,
    pub checks_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub engine: &'static str,
    pub input_sha256: String,
    pub group: GroupInfo,
    /// `(degree, multiplicity)` pairs.
    pub degrees: Vec<(u64, usize)>,
    pub cod_set: Vec<u64>,
    pub c: u64,
    pub c_fast: Option<u64>,
    pub c_general: u64,
    pub witnesses: Vec<WitnessInfo>,
    pub classification: ClassifierReport,
    pub verification: VerificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

struct Loaded {
    name: String,
    text: String,
    /// Order of a bundled entry, which may exceed the default ceiling.
    known_order: Option<usize>,
}

fn sha256_hex(text: &str) -> String {
    let d = Sha256::digest(text.as_bytes());
    d.iter().map(|b| format!("{b:02x}")).collect()
}

impl Options {
    fn budget(&self) -> Budget {
        Budget {
            max_families: self.max_families,
            max_expansions: self.max_expansions,
        }
    }

    fn cache_dir(&self) -> Option<PathBuf> {
        match std::env::var_os("QP_CACHE") {
            Some(v) if !v.is_empty() => Some(PathBuf::from(v)),
            _ => self.cache.clone(),
        }
    }

    fn check(&self) -> Result<()> {
        if self.max_group_order > HARD_MAX_ORDER {
            return Err(Error::Budget {
                what: "group order",
                limit: HARD_MAX_ORDER,
                reached: self.max_group_order,
                detail: " (requested ceiling above the hard limit)".into(),
            });
        }
        Ok(())
    }

    /// Bundled entries are realized up to their own order, within the hard limit.
    fn ceiling(&self, known_order: Option<usize>) -> usize {
        match known_order {
            Some(n) => self.max_group_order.max(n.min(HARD_MAX_ORDER)),
            None => self.max_group_order,
        }
    }
}

fn load(input: &Input) -> Result<Loaded> {
    match (&input.path, &input.group) {
        (Some(p), None) => Ok(Loaded {
            name: p
                .file_stem()
                .map_or("input".into(), |s| s.to_string_lossy().into_owned()),
            text: std::fs::read_to_string(p)?,
            known_order: None,
        }),
        (None, Some(g)) => {
            let e = corpus::find(g)?;
            Ok(Loaded {
                name: e.name,
                text: e.text,
                known_order: Some(e.order),
            })
        }
        _ => Err(Error::Presentation(
            "give exactly one of a file path or --group".into(),
        )),
    }
}

fn cached_table(
    opts: &Options,
    hash: &str,
    g: &crate::group::Group,
    cd: &crate::group::ClassData,
) -> Result<CharacterTable> {
    let Some(dir) = opts.cache_dir() else {
        return character_table(g, cd);
    };
    let file = dir.join(format!("{hash}.table.json"));
    if let Ok(bytes) = std::fs::read(&file) {
        if let Ok(raw) = serde_json::from_slice::<RawTable>(&bytes) {
            if let Ok(t) = CharacterTable::from_raw(g, cd, raw) {
                return Ok(t);
            }
        }
    }
    let t = character_table(g, cd)?;
    std::fs::create_dir_all(&dir)?;
    let tmp = dir.join(format!("{hash}.table.json.tmp"));
    std::fs::write(&tmp, serde_json::to_vec(&t.to_raw())?)?;
    std::fs::rename(&tmp, &file)?;
    Ok(t)
}

/// Runs the whole pipeline on group text.
pub fn build_report(name: &str, text: &str, opts: &Options) -> Result<Report> {
    report_within(name, text, opts, opts.max_group_order)
}

fn report_within(name: &str, text: &str, opts: &Options, ceiling: usize) -> Result<Report> {
    opts.check()?;
    let hash = sha256_hex(text);
    let t0 = Instant::now();
    let g = parse_group(text)?.realize(ceiling)?;
    let cd = conjugacy_classes(&g);
    // cache key covers the engine version as well as the input
    let key = sha256_hex(&format!("{ENGINE}\n{hash}"));
    let table = cached_table(opts, &key, &g, &cd)?;
    let t1 = Instant::now();
    let a = Analysis::with_table(g, cd, table, &opts.budget())?;
    let t2 = Instant::now();
    let cls = classify(&a, opts.max_subgroups)?;
    let ver = verify_identities(&a, &cls, opts.max_subgroups)?;
    let t3 = Instant::now();
    let cods = codegrees(&a.table)?;
    let mut degrees: Vec<(u64, usize)> = Vec::new();
    for d in a.table.degrees() {
        match degrees.last_mut() {
            Some((x, n)) if *x == d => *n += 1,
            _ => degrees.push((d, 1)),
        }
    }
    let witnesses = a
        .solver
        .witnesses
        .iter()
        .map(|w| WitnessInfo {
            members: w
                .members
                .iter()
                .map(|&i| MemberInfo {
                    index: i,
                    degree: a.table.degree(i),
                    kernel_order: a.table.kernel(i).order(),
                    cod: cods[i],
                    field_degree: a.galois.field_degree(i),
                })
                .collect(),
            xi_degree: w.xi_degree,
            m_value: w.m_value,
            total: w.total,
        })
        .collect();
    Ok(Report {
        schema: SCHEMA,
        engine: ENGINE,
        input_sha256: hash,
        group: GroupInfo {
            name: name.to_string(),
            order: a.group.order(),
            exponent: a.group.exponent(),
            prime: a.prime(),
            center_order: cls.center_order,
            center_invariants: cls.center_invariants.clone(),
            class_count: a.table.len(),
        },
        degrees,
        cod_set: cls.cod_set.clone(),
        c: a.c(),
        c_fast: a.solver.fast,
        c_general: a.solver.general,
        witnesses,
        classification: cls,
        verification: ver,
        timing: opts.timing.then(|| Timing {
            table_ms: (t1 - t0).as_millis(),
            solver_ms: (t2 - t1).as_millis(),
            checks_ms: (t3 - t2).as_millis(),
        }),
    })
}

fn analyse(input: &Input, opts: &Options) -> Result<(Loaded, Analysis)> {
    opts.check()?;
    let l = load(input)?;
    let g = parse_group(&l.text)?.realize(opts.ceiling(l.known_order))?;
    let cd = conjugacy_classes(&g);
    let key = sha256_hex(&format!("{ENGINE}\n{}", sha256_hex(&l.text)));
    let table = cached_table(opts, &key, &g, &cd)?;
    let a = Analysis::with_table(g, cd, table, &opts.budget())?;
    Ok((l, a))
}

fn selected(sel: &Selector) -> Result<Vec<CorpusEntry>> {
    if sel.all {
        return Ok(corpus::corpus()
            .into_iter()
            .filter(|e| e.order <= sel.max_order && (sel.slow || e.tier != Tier::Slow))
            .collect());
    }
    let Some(name) = &sel.group else {
        return Err(Error::Presentation("give --all or --group".into()));
    };
    if name == "m-p-n" {
        let p = sel
            .p
            .ok_or_else(|| Error::Presentation("m-p-n needs --p".into()))?;
        let spec = sel
            .n
            .as_deref()
            .ok_or_else(|| Error::Presentation("m-p-n needs --n".into()))?;
        let (lo, hi) = match spec.split_once("..") {
            Some((a, b)) => (a.trim().parse::<u32>(), b.trim().parse::<u32>()),
            None => (spec.trim().parse::<u32>(), spec.trim().parse::<u32>()),
        };
        let (lo, hi) = match (lo, hi) {
            (Ok(a), Ok(b)) if a <= b => (a, b),
            _ => return Err(Error::Presentation(format!("bad --n range {spec:?}"))),
        };
        return (lo..=hi).map(|n| corpus::modular(p, n)).collect();
    }
    Ok(vec![corpus::find(name)?])
}

#[derive(Debug, Serialize)]
struct VerifyRow {
    group: String,
    order: usize,
    c: u64,
    expected_c: Option<u64>,
    passed: usize,
    failed: Vec<String>,
    not_applicable: usize,
    notices: Vec<String>,
}

fn write_out(opts: &Options, text: &str) -> Result<()> {
    match &opts.out {
        Some(p) => std::fs::write(p, text)?,
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn run_verify(sel: &Selector, opts: &Options) -> Result<bool> {
    let mut rows = Vec::new();
    let mut ok = true;
    for e in selected(sel)? {
        let r = report_within(&e.name, &e.text, opts, opts.ceiling(Some(e.order)))?;
        let v = &r.verification;
        let mut failed: Vec<String> = v
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| format!("{}: {}", c.id, c.detail))
            .collect();
        if let Some(x) = e.expected_c {
            if x != r.c {
                failed.push(format!("expected c = {x}, computed {}", r.c));
            }
        }
        ok &= failed.is_empty();
        rows.push(VerifyRow {
            group: e.name.clone(),
            order: r.group.order,
            c: r.c,
            expected_c: e.expected_c,
            passed: v.checks.iter().filter(|c| c.status == Status::Pass).count(),
            not_applicable: v
                .checks
                .iter()
                .filter(|c| c.status == Status::NotApplicable)
                .count(),
            notices: v
                .checks
                .iter()
                .filter(|c| c.status == Status::Notice)
                .map(|c| format!("{}: {}", c.id, c.detail))
                .collect(),
            failed,
        });
    }
    let mut text = String::new();
    for r in &rows {
        let verdict = if r.failed.is_empty() { "PASS" } else { "FAIL" };
        text.push_str(&format!(
            "{verdict} {:<22} order {:>6}  c = {:<5} pass {:>2}  n/a {:>2}\n",
            r.group, r.order, r.c, r.passed, r.not_applicable
        ));
        for f in &r.failed {
            text.push_str(&format!("    fail: {f}\n"));
        }
        for n in &r.notices {
            text.push_str(&format!("    notice: {n}\n"));
        }
    }
    write_out(opts, &text)?;
    Ok(ok)
}

fn run_table(sel: &Selector, opts: &Options) -> Result<()> {
    let mut text = String::from("group,order,c,witness,sum_cod,equal\n");
    for e in selected(sel)? {
        let g = parse_group(&e.text)?.realize(opts.ceiling(Some(e.order)))?;
        let a = Analysis::run(g, &opts.budget())?;
        let cods = codegrees(&a.table)?;
        for (i, w) in a.solver.witnesses.iter().enumerate() {
            let s: u64 = w.members.iter().map(|&x| cods[x]).sum();
            text.push_str(&format!(
                "{},{},{},{},{},{}\n",
                e.name,
                a.group.order(),
                a.c(),
                i,
                s,
                s == a.c()
            ));
        }
    }
    write_out(opts, &text)
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// Executes a parsed command line and returns the exit code.
pub fn run(cli: Cli) -> i32 {
    if let Some(n) = cli.opts.parallel {
        // ignore failure: the global pool may already exist in tests
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            let body = serde_json::json!({
                "error": { "kind": e.kind(), "message": e.to_string() }
            });
            eprintln!("{body}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => 3,
        e if e.is_input_error() => 2,
        _ => 1,
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Report(input) => {
            let l = load(input)?;
            let r = report_within(&l.name, &l.text, opts, opts.ceiling(l.known_order))?;
            write_out(opts, &json(&r)?)?;
        }
        Command::Verify(sel) => {
            if !run_verify(sel, opts)? {
                return Ok(4);
            }
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                let mut text = String::new();
                for e in corpus::corpus() {
                    let tier = match e.tier {
                        Tier::Fast => "fast",
                        Tier::Extended => "extended",
                        Tier::Slow => "slow",
                    };
                    text.push_str(&format!(
                        "{:<22} {:>6}  {:<8}  {}\n",
                        e.name, e.order, tier, e.provenance
                    ));
                }
                write_out(opts, &text)?;
            }
            CorpusAction::Show { name } => {
                let e = corpus::find(name)?;
                write_out(opts, &format!("# {}\n{}\n", e.provenance, e.text))?;
            }
        },
        Command::Table(sel) => run_table(sel, opts)?,
        Command::Cmin(input) => {
            let (l, a) = analyse(input, opts)?;
            let body = serde_json::json!({
                "group": l.name,
                "c": a.c(),
                "c_fast": a.solver.fast,
                "c_general": a.solver.general,
                "kernel_families": a.solver.families,
                "witnesses": a.solver.witnesses,
            });
            write_out(opts, &json(&body)?)?;
        }
        Command::Cod(input) => {
            let (l, a) = analyse(input, opts)?;
            let cods = codegrees(&a.table)?;
            let rows: Vec<serde_json::Value> = (0..a.table.len())
                .map(|i| {
                    serde_json::json!({
                        "index": i,
                        "degree": a.table.degree(i),
                        "kernel_order": a.table.kernel(i).order(),
                        "cod": cods[i],
                    })
                })
                .collect();
            let body = serde_json::json!({
                "group": l.name,
                "cod_set": crate::codegree::cod_set(&a.table)?,
                "characters": rows,
            });
            write_out(opts, &json(&body)?)?;
        }
        Command::Classify(input) => {
            let (_, a) = analyse(input, opts)?;
            write_out(opts, &json(&classify(&a, opts.max_subgroups)?)?)?;
        }
    }
    Ok(0)
}

/// Entry point used by the `qp` binary.
pub fn main() -> i32 {
    run(Cli::parse())
}
