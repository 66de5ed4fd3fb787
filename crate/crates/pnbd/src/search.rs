//! Counterexample search: the canonically least case on which a conjecture
//! (or any registered law) fails.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::laws::{self, Case, Law, LawCtx, Outcome};
use crate::runner::{CaseRecord, REPORT_SCHEMA};
use crate::universe;

/// Named targets and the law each one searches against.
pub const TARGETS: &[(&str, &str)] =
    &[("closed-not-proper", "SX1"), ("dense-closed-gap", "SX2"), ("hausdorff-nontrivial", "SX3")];

/// Largest carrier the search enumerates.
pub const MAX_SEARCH_POINTS: usize = 3;

const CHUNK: usize = 256;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub max_points: usize,
    pub probe_bound: u32,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub schema: &'static str,
    pub target: String,
    pub law: &'static str,
    pub statement: &'static str,
    pub max_points: usize,
    pub probe_bound: u32,
    pub seed: u64,
    /// Cases evaluated up to and including the witness.
    pub examined: usize,
    pub space_size: usize,
    pub witness: Option<CaseRecord>,
}

/// Resolves a target name, or a law id used as a custom predicate.
pub fn resolve(target: &str) -> Result<&'static Law> {
    match TARGETS.iter().find(|(name, _)| *name == target) {
        Some((_, id)) => laws::find(id),
        None => laws::find(target).map_err(|_| CliError::UnknownTarget(target.to_string())),
    }
}

fn counterexample(outcome: Outcome) -> Option<String> {
    match outcome {
        Outcome::Fail(d) | Outcome::Finding(d) => Some(d),
        _ => None,
    }
}

pub fn search(target: &str, cfg: &SearchConfig) -> Result<SearchReport> {
    let law = resolve(target)?;
    if cfg.max_points > MAX_SEARCH_POINTS {
        return Err(CliError::Usage(format!("--max-points is at most {MAX_SEARCH_POINTS}")));
    }
    pnbd_core::classify::probe_spaces(pnbd_core::Context::FinSet, cfg.probe_bound)?;
    let cases = universe::finset_universe(law.shape, cfg.max_points)?;
    let ctx = LawCtx { probe_bound: cfg.probe_bound };
    let mut witness = None;
    let mut examined = cases.len();
    for (i, chunk) in cases.chunks(CHUNK).enumerate() {
        // the first hit in case order is the canonically least one
        let hit = chunk
            .par_iter()
            .enumerate()
            .filter_map(|(j, c)| counterexample(law.evaluate(c, &ctx)).map(|d| (j, d)))
            .min_by_key(|(j, _)| *j);
        if let Some((j, detail)) = hit {
            let case: &Case = &chunk[j];
            examined = i * CHUNK + j + 1;
            let instance = serde_json::to_value(case.to_instance().to_file())?;
            witness = Some(CaseRecord { detail, case: case.describe(), instance });
            break;
        }
    }
    Ok(SearchReport {
        schema: REPORT_SCHEMA,
        target: target.to_string(),
        law: law.id,
        statement: law.statement,
        max_points: cfg.max_points,
        probe_bound: cfg.probe_bound,
        seed: cfg.seed,
        examined,
        space_size: cases.len(),
        witness,
    })
}

pub fn render(r: &SearchReport) -> String {
    match &r.witness {
        Some(w) => format!(
            "target {} ({}): counterexample after {} of {} cases\n  {}\n  case: {}\n",
            r.target, r.law, r.examined, r.space_size, w.detail, w.case
        ),
        None => format!(
            "target {} ({}): exhausted {} cases with at most {} points, no counterexample\n",
            r.target, r.law, r.space_size, r.max_points
        ),
    }
}
