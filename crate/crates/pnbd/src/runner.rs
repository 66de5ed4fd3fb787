//! Evaluates laws over case universes and tallies the outcomes.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::instance::Instance;
use crate::laws::{Case, Law, LawCtx, LawKind, Outcome, Shape, Skip};
use crate::universe;

pub const REPORT_SCHEMA: &str = "pnbd-report/1";

/// Cases are evaluated in parallel chunks of this size; the budget is
/// checked between chunks.
const CHUNK: usize = 512;
/// Failing, finding and witness cases kept per law.
const KEEP: usize = 3;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    /// Per-law wall-clock budget in milliseconds.
    pub budget_ms: Option<u64>,
    pub probe_bound: u32,
    /// Include wall times in the report (they make it non-deterministic).
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { seed: 0, budget_ms: None, probe_bound: LawCtx::default().probe_bound, timing: false }
    }
}

/// Where the cases come from.
pub enum Source<'a> {
    Builtin,
    File { name: String, instance: &'a Instance },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    /// An expected-witness law found no witness in a universe that should
    /// contain one.
    Warn,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseRecord {
    pub detail: String,
    pub case: String,
    /// The case as a replayable instance file.
    pub instance: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub id: &'static str,
    pub kind: &'static str,
    pub shape: &'static str,
    pub statement: &'static str,
    pub status: Status,
    pub cases: usize,
    pub pass: usize,
    pub fail: usize,
    pub findings: usize,
    pub witnesses: usize,
    pub skipped: BTreeMap<&'static str, usize>,
    pub not_applicable: BTreeMap<&'static str, usize>,
    pub failures: Vec<CaseRecord>,
    #[serde(rename = "finding_cases")]
    pub finding_records: Vec<CaseRecord>,
    #[serde(rename = "witness_cases")]
    pub witness_records: Vec<CaseRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl LawReport {
    pub fn skipped_total(&self) -> usize {
        self.skipped.values().sum()
    }

    pub fn not_applicable_total(&self) -> usize {
        self.not_applicable.values().sum()
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub laws: usize,
    pub pass: usize,
    pub warn: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub universe: String,
    pub seed: u64,
    pub probe_bound: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget_ms: Option<u64>,
    pub laws: Vec<LawReport>,
    pub summary: Summary,
}

impl RunReport {
    pub fn law(&self, id: &str) -> Option<&LawReport> {
        self.laws.iter().find(|l| l.id == id)
    }

    /// True when any law failed.
    pub fn violated(&self) -> bool {
        self.summary.fail > 0
    }
}

/// Runs `laws` over the cases of `source`, building each shape's universe
/// once.
pub fn run(laws: &[&'static Law], source: &Source<'_>, cfg: &RunConfig) -> Result<RunReport> {
    let mut cache: BTreeMap<Shape, Vec<Case>> = BTreeMap::new();
    let mut reports = Vec::new();
    for law in laws {
        let cases = match cache.entry(law.shape) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(match source {
                Source::Builtin => universe::builtin(law.shape, cfg.seed)?,
                Source::File { instance, .. } => universe::from_instance(instance, law.shape),
            }),
        };
        reports.push(run_law(law, cases, cfg));
    }
    let mut summary = Summary { laws: reports.len(), ..Summary::default() };
    for r in &reports {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Warn => summary.warn += 1,
            Status::Fail => summary.fail += 1,
        }
    }
    let universe = match source {
        Source::Builtin => "builtin".to_string(),
        Source::File { name, .. } => name.clone(),
    };
    Ok(RunReport {
        schema: REPORT_SCHEMA,
        universe,
        seed: cfg.seed,
        probe_bound: cfg.probe_bound,
        budget_ms: cfg.budget_ms,
        laws: reports,
        summary,
    })
}

fn record(detail: String, case: &Case) -> CaseRecord {
    let instance = serde_json::to_value(case.to_instance().to_file()).expect("instance files serialize");
    CaseRecord { detail, case: case.describe(), instance }
}

/// Evaluates one law on every case, in case order.
pub fn run_law(law: &'static Law, cases: &[Case], cfg: &RunConfig) -> LawReport {
    let ctx = LawCtx { probe_bound: cfg.probe_bound };
    let start = Instant::now();
    let budget = cfg.budget_ms.map(Duration::from_millis);
    let mut r = LawReport {
        id: law.id,
        kind: law.kind.name(),
        shape: law.shape.name(),
        statement: law.statement,
        status: Status::Pass,
        cases: cases.len(),
        pass: 0,
        fail: 0,
        findings: 0,
        witnesses: 0,
        skipped: BTreeMap::new(),
        not_applicable: BTreeMap::new(),
        failures: Vec::new(),
        finding_records: Vec::new(),
        witness_records: Vec::new(),
        elapsed_ms: None,
    };
    let mut non_reflecting = false;
    let mut done = 0;
    for chunk in cases.chunks(CHUNK) {
        if budget.is_some_and(|b| start.elapsed() >= b) {
            break;
        }
        let outcomes: Vec<Outcome> = chunk.par_iter().map(|c| law.evaluate(c, &ctx)).collect();
        for (case, outcome) in chunk.iter().zip(outcomes) {
            non_reflecting |= !case.context().reflects_zero();
            match outcome {
                Outcome::Pass => r.pass += 1,
                Outcome::Fail(d) => {
                    r.fail += 1;
                    if r.failures.len() < KEEP {
                        r.failures.push(record(d, case));
                    }
                }
                Outcome::Finding(d) => {
                    r.findings += 1;
                    if r.finding_records.len() < KEEP {
                        r.finding_records.push(record(d, case));
                    }
                }
                Outcome::Witness(d) => {
                    r.witnesses += 1;
                    if r.witness_records.len() < KEEP {
                        r.witness_records.push(record(d, case));
                    }
                }
                Outcome::Skip(s) => *r.skipped.entry(s.reason()).or_default() += 1,
                Outcome::NotApplicable(why) => *r.not_applicable.entry(why).or_default() += 1,
            }
        }
        done += chunk.len();
    }
    if done < cases.len() {
        *r.skipped.entry(Skip::Budget.reason()).or_default() += cases.len() - done;
    }
    r.status = if r.fail > 0 {
        Status::Fail
    } else if law.kind == LawKind::ExpectedWitness && non_reflecting && r.witnesses == 0 {
        Status::Warn
    } else {
        Status::Pass
    };
    if cfg.timing {
        r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    r
}

/// Human-readable report: one line per law, then the kept cases.
pub fn render(report: &RunReport) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(out, "universe {} (seed {}, probe bound {})", report.universe, report.seed, report.probe_bound);
    for l in &report.laws {
        let status = match l.status {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        };
        let _ = write!(
            out,
            "{status} {:<5} {:<16} cases {:>7}  pass {:>7}  fail {:>5}",
            l.id, l.kind, l.cases, l.pass, l.fail
        );
        if l.findings > 0 {
            let _ = write!(out, "  findings {}", l.findings);
        }
        if l.witnesses > 0 {
            let _ = write!(out, "  witnesses {}", l.witnesses);
        }
        for (why, n) in &l.skipped {
            let _ = write!(out, "  skip[{why}] {n}");
        }
        if l.not_applicable_total() > 0 {
            let _ = write!(out, "  n/a {}", l.not_applicable_total());
        }
        if let Some(ms) = l.elapsed_ms {
            let _ = write!(out, "  {ms} ms");
        }
        out.push('\n');
        for (tag, records) in [("fail", &l.failures), ("finding", &l.finding_records), ("witness", &l.witness_records)]
        {
            for rec in records.iter() {
                let _ = writeln!(out, "    {tag}: {}\n      case: {}", rec.detail, rec.case);
            }
        }
    }
    let s = &report.summary;
    let _ = writeln!(out, "{} laws: {} pass, {} warn, {} fail", s.laws, s.pass, s.warn, s.fail);
    out
}
