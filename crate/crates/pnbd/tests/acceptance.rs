//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria 3 and 5 report FAIL because of the defects recorded for the
//! closure's top exclusion. The target itself fails only when an attainable
//! criterion fails or when a law outside the known defect list breaks.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use pnbd::laws::Shape;
use pnbd::laws::{self, Case, Law, LawKind};
use pnbd::runner::{self, LawReport, RunConfig, RunReport, Source, Status};
use pnbd::search::{self, SearchConfig};
use pnbd::universe::{all_systems, builtin, finset};
use pnbd_core::closure::{closure, closure_oracle};
use pnbd_core::context::ContextObject;
use pnbd_core::endomap::enumerate_endomaps;
use pnbd_core::{Canonical, PreNbdSystem};

/// Laws with known genuine failures; see the README.
const KNOWN_DEFECTS: &[&str] =
    &["CL3", "CL5", "CL8", "CL9", "CL10", "CL13", "CL14", "CL18", "CL19", "CL20", "MO1", "MO2", "MO6"];

struct Verdict {
    pass: bool,
    detail: String,
    /// False when the result breaks an expectation the suite relies on.
    expected: bool,
}

impl Verdict {
    fn attainable(pass: bool, detail: String) -> Self {
        Verdict { pass, detail, expected: pass }
    }
}

fn within(start: Instant, limit: Duration) -> (bool, String) {
    let t = start.elapsed();
    (t <= limit, format!("{:.2}s of {}s", t.as_secs_f64(), limit.as_secs()))
}

/// Topologies on `n` points, enumerated as open-set families.
fn count_topologies(n: usize) -> usize {
    let size = 1usize << n;
    let full = size as u64 - 1;
    (0u64..1 << size)
        .filter(|family| {
            let open = |m: u64| family >> m & 1 == 1;
            let members: Vec<u64> = (0..size as u64).filter(|&m| open(m)).collect();
            open(0) && open(full) && members.iter().all(|&a| members.iter().all(|&b| open(a | b) && open(a & b)))
        })
        .count()
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let two = finset(2);
    let all = all_systems(&two).unwrap().len();
    let nbd2 = all_systems(&two).unwrap().iter().filter(|s| s.classify().is_nbd).count();
    let nbd3 = all_systems(&finset(3)).unwrap().iter().filter(|s| s.classify().is_nbd).count();
    let topo3 = count_topologies(3);
    let (fast, time) = within(start, Duration::from_secs(5));
    Verdict::attainable(
        all == 9 && nbd2 == 4 && nbd3 == 29 && topo3 == 29 && fast,
        format!("2 points: {all} systems, {nbd2} neighbourhood; 3 points: {nbd3} neighbourhood vs {topo3} topologies; {time}"),
    )
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let mut roundtrips = 0;
    let mut bad = 0;
    for n in 0..=3 {
        let obj = finset(n);
        for c in enumerate_endomaps(obj.lattice(), false, 1 << 20).unwrap() {
            roundtrips += 1;
            if PreNbdSystem::phi(&obj, &c).unwrap().psi() != c {
                bad += 1;
            }
        }
    }
    let two = finset(2);
    let systems = all_systems(&two).unwrap();
    let maps = enumerate_endomaps(two.lattice(), false, 1 << 20).unwrap();
    let mut pairs = 0;
    for mu in &systems {
        for c in &maps {
            pairs += 1;
            if mu.leq(&PreNbdSystem::phi(&two, c).unwrap()).unwrap() != c.pointwise_leq(&mu.psi()) {
                bad += 1;
            }
        }
    }
    let (fast, time) = within(start, Duration::from_secs(10));
    Verdict::attainable(
        bad == 0 && fast,
        format!("{roundtrips} round trips, {pairs} adjunction pairs, {bad} mismatches; {time}"),
    )
}

fn numbered(prefix: &str, last: u32) -> Vec<&'static Law> {
    laws::family(prefix).into_iter().filter(|l| l.id[prefix.len()..].parse::<u32>().is_ok_and(|n| n <= last)).collect()
}

fn run_builtin(laws: &[&'static Law]) -> RunReport {
    runner::run(laws, &Source::Builtin, &RunConfig::default()).unwrap()
}

fn failing(report: &RunReport) -> Vec<&LawReport> {
    report.laws.iter().filter(|l| l.status == Status::Fail).collect()
}

fn only_known(report: &RunReport) -> bool {
    failing(report).iter().all(|l| KNOWN_DEFECTS.contains(&l.id))
}

fn summary(report: &RunReport) -> String {
    let failed: Vec<String> = failing(report).iter().map(|l| format!("{}({})", l.id, l.fail)).collect();
    let skipped: usize = report.laws.iter().map(LawReport::skipped_total).sum();
    format!("{} laws, {} fail [{}], {} skipped cases", report.laws.len(), failed.len(), failed.join(" "), skipped)
}

/// The closure laws over the nine two-point systems (and their pairs,
/// maps and products): how many laws pass with nothing skipped.
fn two_point_closure_laws(laws: &[&'static Law]) -> String {
    let mut clean = 0;
    for law in laws {
        let cases: Vec<Case> = pnbd::universe::finset_universe(law.shape, 2)
            .unwrap()
            .into_iter()
            .filter(|c| match c {
                Case::Space(s) | Case::Pair(s, _) => s.object().size() == 2,
                Case::Mor { f, .. } | Case::Compose { f, .. } => f.dom().size() == 2 && f.cod().size() == 2,
                Case::Product(v) => v.iter().all(|s| s.object().size() == 2),
                Case::Map(f) => f.dom().size() == 2,
            })
            .collect();
        let r = runner::run_law(law, &cases, &RunConfig::default());
        if r.fail == 0 && r.skipped_total() == 0 {
            clean += 1;
        }
    }
    format!("two-point systems: {clean} of {} laws pass with none skipped", laws.len())
}

fn criterion_3(report: &RunReport, laws: &[&'static Law], elapsed: Duration) -> Verdict {
    let fast = elapsed <= Duration::from_secs(120);
    Verdict {
        pass: !report.violated() && fast,
        detail: format!("{}; {}; {:.1}s of 120s", summary(report), two_point_closure_laws(laws), elapsed.as_secs_f64()),
        expected: only_known(report) && fast,
    }
}

fn criterion_4() -> Verdict {
    let mut checked = 0;
    let mut bad = Vec::new();
    for case in builtin(Shape::Space, 0).unwrap() {
        let Case::Space(s) = case else { unreachable!() };
        for p in s.object().lattice().elements() {
            checked += 1;
            if closure(&s, p) != closure_oracle(&s, p) {
                bad.push(format!("{} at {}", s.describe(), s.object().label(p)));
            }
        }
    }
    Verdict::attainable(bad.is_empty(), format!("{checked} (space, subobject) pairs, {} mismatches", bad.len()))
}

fn criterion_5(report: &RunReport, elapsed: Duration) -> Verdict {
    let fast = elapsed <= Duration::from_secs(600);
    let missing: Vec<&str> = report
        .laws
        .iter()
        .filter(|l| l.kind == LawKind::ExpectedWitness.name() && l.witnesses == 0)
        .map(|l| l.id)
        .collect();
    Verdict {
        pass: !report.violated() && missing.is_empty() && fast,
        detail: format!(
            "{}; expected witnesses missing: [{}]; {:.1}s of 600s",
            summary(report),
            missing.join(" "),
            elapsed.as_secs_f64()
        ),
        expected: only_known(report) && missing.is_empty() && fast,
    }
}

fn criterion_6() -> Verdict {
    let z4 = ContextObject::builtin_group("Z4").unwrap();
    let up = PreNbdSystem::canonical(&z4, Canonical::Discrete);
    let cls = z4.label(closure(&up, z4.lattice().top()));
    let cfg = SearchConfig { max_points: 2, probe_bound: laws::LawCtx::default().probe_bound, seed: 0 };
    let r = search::search("hausdorff-nontrivial", &cfg).unwrap();
    let exhausted = r.witness.is_none() && r.examined == r.space_size;
    Verdict::attainable(
        cls == "{0,2}" && exhausted,
        format!(
            "cls(Z4, up) = {cls}; hausdorff-nontrivial at 2 points: {} of {} cases, {}",
            r.examined,
            r.space_size,
            if exhausted { "exhausted" } else { "counterexample found" }
        ),
    )
}

fn scratch_dir() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn pnbd(args: &[&str]) -> Option<i32> {
    Command::new(env!("CARGO_BIN_EXE_pnbd")).args(args).output().unwrap().status.code()
}

fn criterion_7(reports: &[&RunReport]) -> Verdict {
    let dir = scratch_dir();
    let mut replays = Vec::new();
    for report in reports {
        for law in failing(report) {
            for (i, rec) in law.failures.iter().enumerate() {
                replays.push((law.id, format!("{}-{i}", law.id), rec.instance.clone()));
            }
        }
    }
    let probe_bound = laws::LawCtx::default().probe_bound;
    for (target, _) in search::TARGETS {
        let cfg = SearchConfig { max_points: 2, probe_bound, seed: 0 };
        let r = search::search(target, &cfg).unwrap();
        if let Some(w) = r.witness {
            replays.push((r.law, format!("search-{target}"), w.instance));
            let code = pnbd(&["search", "--target", target, "--max-points", "2", "--expect-pass"]);
            if code != Some(1) {
                return Verdict::attainable(false, format!("search {target} exited with {code:?}"));
            }
        }
    }
    let mut bad = Vec::new();
    for (id, name, instance) in &replays {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(instance).unwrap()).unwrap();
        let code = pnbd(&["laws", path.to_str().unwrap(), "--law", id, "--expect-pass"]);
        if code != Some(1) {
            bad.push(format!("{name}: exit {code:?}"));
        }
    }
    Verdict::attainable(
        bad.is_empty() && !replays.is_empty(),
        format!("{} replays, {} without exit code 1 [{}]", replays.len(), bad.len(), bad.join(", ")),
    )
}

fn main() -> ExitCode {
    let mut verdicts = Vec::new();
    verdicts.push(criterion_1());
    verdicts.push(criterion_2());

    let cl = numbered("CL", 20);
    let start = Instant::now();
    let cl_report = run_builtin(&cl);
    let cl_time = start.elapsed();
    verdicts.push(criterion_3(&cl_report, &cl, cl_time));

    verdicts.push(criterion_4());

    let start = Instant::now();
    let mo_report = run_builtin(&numbered("MO", 17));
    verdicts.push(criterion_5(&mo_report, start.elapsed()));

    verdicts.push(criterion_6());
    verdicts.push(criterion_7(&[&cl_report, &mo_report]));

    let mut unexpected = BTreeSet::new();
    for (i, v) in verdicts.iter().enumerate() {
        println!("criterion {}: {} - {}", i + 1, if v.pass { "PASS" } else { "FAIL" }, v.detail);
        if !v.expected {
            unexpected.insert(i + 1);
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected results in criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
