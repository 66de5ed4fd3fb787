use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pnbd::error::{CliError, Result};
use pnbd::laws::{self, Law};
use pnbd::runner::{self, RunConfig, Source};
use pnbd::search::{self, SearchConfig};
use pnbd::{load_instance, witness_instance, Instance};
use pnbd_core::classify::{
    classify_morphism, dense_closed_factorize, is_compact, is_hausdorff, DEFAULT_PROBE_BOUND, MAX_PROBE_BOUND,
};
use pnbd_core::closure::{closed_elements, closure, closure_oracle};
use pnbd_core::context::ContextObject;
use pnbd_core::endomap::for_each_endomap;
use pnbd_core::{Context, Morphism, PreNbdSystem, Verdict};

#[derive(Parser)]
#[command(
    name = "pnbd",
    version,
    about = "Preneighbourhood systems on finite contexts: closure, morphism classes, law checks"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 when a law, verdict or search reports a violation.
    #[arg(long, global = true)]
    expect_pass: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an instance file.
    Validate { file: PathBuf },
    /// Closure of a subobject.
    Closure {
        file: PathBuf,
        #[arg(long)]
        system: String,
        #[arg(long)]
        subset: String,
        /// Also evaluate the literal filter quantification.
        #[arg(long)]
        oracle: bool,
    },
    /// Kind, opens and closed subobjects of a system.
    ClassifySystem {
        file: PathBuf,
        #[arg(long)]
        system: String,
    },
    /// Every morphism class of `f: (X,src) → (Y,dst)`.
    ClassifyMor {
        file: PathBuf,
        #[arg(long)]
        mor: String,
        #[arg(long)]
        src: String,
        #[arg(long)]
        dst: String,
        #[arg(long, default_value_t = DEFAULT_PROBE_BOUND)]
        probe_bound: u32,
    },
    /// Image factorization and dense/closed factorization.
    Factorize {
        file: PathBuf,
        #[arg(long)]
        mor: String,
        #[arg(long)]
        src: String,
        #[arg(long)]
        dst: String,
    },
    /// Hausdorff or compactness verdict of a space.
    Space {
        file: PathBuf,
        #[arg(long)]
        system: String,
        #[arg(long, value_enum)]
        check: SpaceCheck,
        #[arg(long, default_value_t = DEFAULT_PROBE_BOUND)]
        probe_bound: u32,
    },
    /// Enumerate systems on a finite set or builtin group.
    Enumerate {
        #[arg(long, default_value = "finset")]
        context: String,
        /// Number of points (finset).
        #[arg(long)]
        points: Option<usize>,
        /// Builtin group name (fingrp).
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_enum, default_value_t = Kind::Pre)]
        kind: Kind,
        /// Only grounded systems.
        #[arg(long)]
        grounded: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// Run laws over an instance file or the built-in universe.
    Laws {
        file: Option<PathBuf>,
        /// Law ids or families (e.g. CL8, MO).
        #[arg(long, num_args = 1..)]
        law: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-law budget in milliseconds.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_PROBE_BOUND)]
        probe_bound: u32,
        /// Include wall times in the report.
        #[arg(long)]
        timing: bool,
        /// List the registry instead of running it.
        #[arg(long)]
        list: bool,
    },
    /// Search for the least counterexample to a target.
    Search {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 2)]
        max_points: usize,
        #[arg(long, default_value_t = DEFAULT_PROBE_BOUND)]
        probe_bound: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the witness instance here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceCheck {
    Hausdorff,
    Compact,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Pre,
    Weak,
    Nbd,
}

/// What a command produced: text, JSON, and whether it found a violation.
struct Output {
    text: String,
    json: Value,
    violation: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("output serializes"));
            } else {
                print!("{}", out.text);
            }
            if cli.expect_pass && out.violation {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<Instance> {
    load_instance(path)
}

fn check_bound(k: u32) -> Result<()> {
    if k > MAX_PROBE_BOUND {
        return Err(CliError::Usage(format!("--probe-bound is at most {MAX_PROBE_BOUND}")));
    }
    Ok(())
}

fn label(s: &PreNbdSystem, e: pnbd_core::Elem) -> String {
    s.object().label(e)
}

fn verdict_json(v: &Verdict, f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Value {
    match v {
        Verdict::Holds => json!({"verdict": "holds", "exact": true}),
        Verdict::HoldsUpToBound(k) => json!({"verdict": "holds", "exact": false, "bound": k}),
        Verdict::Fails(w) => json!({
            "verdict": "fails",
            "subobject": w.pullback.object().label(w.subobject),
            "probe": w.probe.space.describe(),
            "witness": serde_json::to_value(witness_instance(f, mu, phi, w).to_file()).expect("instance serializes"),
        }),
    }
}

fn execute(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Validate { file } => validate(&load(file)?),
        Command::Closure { file, system, subset, oracle } => {
            let inst = load(file)?;
            let s = inst.system(system)?;
            let p = s.object().parse(subset)?;
            let c = closure(s, p);
            let mut text = format!("cls({:?}) = {:?}\n", subset, label(s, c));
            let mut j = json!({"system": system, "subset": label(s, p), "closure": label(s, c), "closed": c == p});
            let mut violation = false;
            if *oracle {
                let o = closure_oracle(s, p);
                violation = o != c;
                text.push_str(&format!(
                    "oracle = {:?} ({})\n",
                    label(s, o),
                    if violation { "MISMATCH" } else { "agrees" }
                ));
                j["oracle"] = json!(label(s, o));
                j["agrees"] = json!(!violation);
            }
            Ok(Output { text, json: j, violation })
        }
        Command::ClassifySystem { file, system } => {
            let inst = load(file)?;
            let s = inst.system(system)?;
            let k = s.classify();
            let l = s.object().lattice();
            let opens: Vec<String> = l.elements().filter(|&x| s.is_open(x)).map(|x| label(s, x)).collect();
            let closed: Vec<String> = closed_elements(s).into_iter().map(|x| label(s, x)).collect();
            let top_closed = closure(s, l.top()) == l.top();
            let text = format!(
                "{}\npreneighbourhood {}, weak {}, neighbourhood {}, grounded {}\nopen: {:?}\nclosed: {:?}\ntop closed: {}\n",
                s.describe(),
                k.is_pre,
                k.is_weak,
                k.is_nbd,
                k.grounded,
                opens,
                closed,
                top_closed
            );
            let j = json!({
                "system": system, "pre": k.is_pre, "weak": k.is_weak, "nbd": k.is_nbd, "grounded": k.grounded,
                "open": opens, "closed": closed, "top_closed": top_closed,
            });
            Ok(Output { text, json: j, violation: false })
        }
        Command::ClassifyMor { file, mor, src, dst, probe_bound } => {
            check_bound(*probe_bound)?;
            let inst = load(file)?;
            let (f, mu, phi) = (inst.morphism(mor)?, inst.system(src)?, inst.system(dst)?);
            let c = classify_morphism(f, mu, phi, *probe_bound)?;
            let flags = [
                ("continuous", c.continuous),
                ("reflects_zero", c.reflects_zero),
                ("formally_surjective", c.formally_surjective),
                ("closed", c.closed),
                ("dense", c.dense),
            ];
            let mut text = String::new();
            for (n, v) in flags {
                text.push_str(&format!("{n}: {v}\n"));
            }
            if let Some(ce) = c.closed_embedding {
                text.push_str(&format!("closed_embedding: {ce}\n"));
            }
            for (n, v) in [("proper", &c.proper), ("separated", &c.separated), ("perfect", &c.perfect)] {
                text.push_str(&format!("{n}: {}\n", v.name()));
            }
            let mut j = json!({"morphism": mor, "src": src, "dst": dst, "pnbd": c.pnbd, "probe_bound": probe_bound});
            for (n, v) in flags {
                j[n] = json!(v);
            }
            j["closed_embedding"] = json!(c.closed_embedding);
            // the separated verdict's witness lives on the kernel pair, so it
            // is reported by name only
            j["proper"] = verdict_json(&c.proper, f, mu, phi);
            j["separated"] = json!(c.separated.name());
            j["perfect"] = verdict_json(&c.perfect, f, mu, phi);
            let violation = [&c.proper, &c.separated, &c.perfect].iter().any(|v| !v.holds());
            Ok(Output { text, json: j, violation })
        }
        Command::Factorize { file, mor, src, dst } => {
            let inst = load(file)?;
            let (f, mu, phi) = (inst.morphism(mor)?, inst.system(src)?, inst.system(dst)?);
            let (e, m) = f.factorize()?;
            let image = f.cod().label(f.image_of_top());
            let mut text =
                format!("image {:?}\n  e = {}\n  m = {}\n", image, laws::describe_map(&e), laws::describe_map(&m));
            let mut j =
                json!({"morphism": mor, "image": image, "e": laws::describe_map(&e), "m": laws::describe_map(&m)});
            if f.dom().context().reflects_zero() {
                let dc = dense_closed_factorize(f, mu, phi)?;
                text.push_str(&format!(
                    "dense/closed through {:?}{}\n  d = {}\n  middle = {}\n",
                    label(phi, dc.m),
                    if dc.top_degenerate { " (top-degenerate)" } else { "" },
                    laws::describe_map(&dc.d),
                    dc.middle.describe()
                ));
                j["dense_closed"] = json!({
                    "closure": label(phi, dc.m), "top_degenerate": dc.top_degenerate,
                    "d": laws::describe_map(&dc.d), "middle": dc.middle.describe(),
                });
            } else {
                text.push_str("dense/closed factorization: not available (context does not reflect zero)\n");
                j["dense_closed"] = Value::Null;
            }
            Ok(Output { text, json: j, violation: false })
        }
        Command::Space { file, system, check, probe_bound } => {
            check_bound(*probe_bound)?;
            let inst = load(file)?;
            let s = inst.system(system)?;
            let (name, v) = match check {
                SpaceCheck::Hausdorff => ("hausdorff", is_hausdorff(s, *probe_bound)?),
                SpaceCheck::Compact => ("compact", is_compact(s, *probe_bound)?),
            };
            let text = format!("{name}: {}\n", v.name());
            let j = json!({"system": system, "check": name, "verdict": v.name(), "holds": v.holds(), "exact": v.is_exact()});
            Ok(Output { text, json: j, violation: !v.holds() })
        }
        Command::Enumerate { context, points, group, kind, grounded, count_only } => {
            enumerate(context, *points, group.as_deref(), *kind, *grounded, *count_only)
        }
        Command::Laws { file, law, all, seed, budget, probe_bound, timing, list } => {
            check_bound(*probe_bound)?;
            let selected = select(law, *all, *list)?;
            if *list {
                return Ok(listing(&selected));
            }
            let cfg = RunConfig { seed: *seed, budget_ms: *budget, probe_bound: *probe_bound, timing: *timing };
            let inst;
            let source = match file {
                Some(p) => {
                    inst = load(p)?;
                    Source::File { name: p.display().to_string(), instance: &inst }
                }
                None => Source::Builtin,
            };
            let report = runner::run(&selected, &source, &cfg)?;
            Ok(Output {
                text: runner::render(&report),
                json: serde_json::to_value(&report)?,
                violation: report.violated(),
            })
        }
        Command::Search { target, max_points, probe_bound, seed, out } => {
            check_bound(*probe_bound)?;
            let cfg = SearchConfig { max_points: *max_points, probe_bound: *probe_bound, seed: *seed };
            let r = search::search(target, &cfg)?;
            if let (Some(path), Some(w)) = (out, &r.witness) {
                let mut text = serde_json::to_string_pretty(&w.instance)?;
                text.push('\n');
                std::fs::write(path, text)
                    .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            }
            Ok(Output { text: search::render(&r), json: serde_json::to_value(&r)?, violation: r.witness.is_some() })
        }
    }
}

fn validate(inst: &Instance) -> Result<Output> {
    let mut text = format!("context {}\n", inst.context.name());
    let mut objects = serde_json::Map::new();
    for (n, o) in &inst.objects {
        text.push_str(&format!("object {n}: {} ({} subobjects)\n", o.describe(), o.lattice().len()));
        objects.insert(n.clone(), json!({"size": o.size(), "subobjects": o.lattice().len()}));
    }
    let mut systems = serde_json::Map::new();
    for (n, s) in &inst.systems {
        let k = s.classify();
        let kind = if k.is_nbd {
            "neighbourhood"
        } else if k.is_weak {
            "weak"
        } else {
            "preneighbourhood"
        };
        text.push_str(&format!("system {n}: {kind}{}\n", if k.grounded { "" } else { ", not grounded" }));
        systems.insert(n.clone(), json!({"kind": kind, "grounded": k.grounded}));
    }
    let mut morphisms = serde_json::Map::new();
    for (n, f) in &inst.morphisms {
        text.push_str(&format!("morphism {n}: {}\n", laws::describe_map(f)));
        morphisms.insert(n.clone(), json!(laws::describe_map(f)));
    }
    text.push_str("valid\n");
    let j = json!({"valid": true, "context": inst.context.name(), "objects": objects, "systems": systems, "morphisms": morphisms});
    Ok(Output { text, json: j, violation: false })
}

fn enumerate(
    context: &str,
    points: Option<usize>,
    group: Option<&str>,
    kind: Kind,
    grounded: bool,
    count_only: bool,
) -> Result<Output> {
    let obj = match (Context::parse(context)?, points, group) {
        (Context::FinSet, Some(n), None) => {
            let names: Vec<String> = (0..n).map(point_name).collect();
            ContextObject::finset(&names)?
        }
        (Context::FinGrp, None, Some(g)) => ContextObject::builtin_group(g)?,
        (Context::FinSet, ..) => return Err(CliError::Usage("finset enumeration needs --points".into())),
        (Context::FinGrp, ..) => return Err(CliError::Usage("fingrp enumeration needs --group".into())),
    };
    let mut count = 0u64;
    let mut listed = Vec::new();
    let mut failure = None;
    for_each_endomap(obj.lattice(), grounded, |values| {
        let s = match PreNbdSystem::from_values(obj.clone(), values.to_vec()) {
            Ok(s) => s,
            Err(e) => {
                failure = Some(e);
                return false;
            }
        };
        let k = s.classify();
        let keep = match kind {
            Kind::Pre => true,
            Kind::Weak => k.is_weak,
            Kind::Nbd => k.is_nbd,
        };
        if keep {
            count += 1;
            if !count_only {
                listed.push(s.describe());
            }
        }
        true
    });
    if let Some(e) = failure {
        return Err(e.into());
    }
    let mut text = String::new();
    for s in &listed {
        text.push_str(s);
        text.push('\n');
    }
    text.push_str(&format!("{count}\n"));
    let mut j = json!({"object": obj.describe(), "grounded_only": grounded, "count": count});
    if !count_only {
        j["systems"] = json!(listed);
    }
    Ok(Output { text, json: j, violation: false })
}

/// Point names a, b, ..., z, then p26, p27, ...
fn point_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("p{i}")
    }
}

fn select(ids: &[String], all: bool, list: bool) -> Result<Vec<&'static Law>> {
    if all || (list && ids.is_empty()) {
        return Ok(laws::registry());
    }
    if ids.is_empty() {
        return Err(CliError::Usage("select laws with --law ID ... or --all".into()));
    }
    let mut out: Vec<&'static Law> = Vec::new();
    for id in ids {
        let found = if id.chars().all(|c| c.is_ascii_alphabetic()) {
            let family = laws::family(&id.to_ascii_uppercase());
            if family.is_empty() {
                return Err(CliError::UnknownLaw(id.clone()));
            }
            family
        } else {
            vec![laws::find(id)?]
        };
        for l in found {
            if !out.iter().any(|o| o.id == l.id) {
                out.push(l);
            }
        }
    }
    Ok(out)
}

fn listing(selected: &[&'static Law]) -> Output {
    let mut text = String::new();
    let mut rows = Vec::new();
    for l in selected {
        text.push_str(&format!("{:<5} {:<16} {:<9} {}\n", l.id, l.kind.name(), l.shape.name(), l.statement));
        rows.push(json!({"id": l.id, "kind": l.kind.name(), "shape": l.shape.name(), "statement": l.statement}));
    }
    Output { text, json: json!({"laws": rows}), violation: false }
}
