//! Open statements probed by the counterexample search. A failure is a
//! counterexample, serialised for replay like any other failure.

use pnbd_core::classify::{is_closed_morphism, is_hausdorff, is_pnbd_morphism, is_proper, proper_analysis};
use pnbd_core::closure::is_closed;
use pnbd_core::{Context, Result, Verdict};

use super::{describe_map, Case, Law, LawCtx, LawKind, Outcome, Shape, Skip};

pub(super) static LAWS: &[Law] = &[
    Law {
        id: "SX1",
        kind: LawKind::Conjecture,
        shape: Shape::Mor,
        statement: "every closed preneighbourhood morphism is proper (up to the probe bound)",
        check: sx1,
    },
    Law {
        id: "SX2",
        kind: LawKind::Conjecture,
        shape: Shape::Mor,
        statement: "an embedding that is closed as a morphism and has a non-top image has a closed image",
        check: sx2,
    },
    Law {
        id: "SX3",
        kind: LawKind::Conjecture,
        shape: Shape::Space,
        statement: "no grounded finite-set space with at least two points is Hausdorff",
        check: sx3,
    },
];

fn sx1(case: &Case, ctx: &LawCtx) -> Result<Outcome> {
    let Case::Mor { f, mu, phi } = case else { unreachable!() };
    if !is_pnbd_morphism(f, mu, phi)? {
        return Ok(Outcome::NotApplicable("not a preneighbourhood morphism"));
    }
    let a = proper_analysis(f, mu, phi, ctx.probe_bound)?;
    Ok(match a.verdict {
        Verdict::Fails(w) if is_closed_morphism(f, mu, phi)? => Outcome::Fail(format!(
            "closed but not proper: probe {} along {}",
            w.probe.space.describe(),
            describe_map(&w.probe.h)
        )),
        Verdict::Fails(_) => Outcome::NotApplicable("not closed"),
        _ => Outcome::Pass,
    })
}

fn sx2(case: &Case, ctx: &LawCtx) -> Result<Outcome> {
    let Case::Mor { f, mu, phi } = case else { unreachable!() };
    if !f.is_injective() || !is_pnbd_morphism(f, mu, phi)? || *mu != phi.initial_along(f)? {
        return Ok(Outcome::NotApplicable("not an embedding"));
    }
    let image = f.image_of_top();
    // a non-closed top is the documented degeneracy, not a gap
    if image == f.cod().lattice().top() || !is_closed_morphism(f, mu, phi)? || is_closed(phi, image) {
        return Ok(Outcome::Pass);
    }
    let verdict = is_proper(f, mu, phi, ctx.probe_bound)?;
    Ok(Outcome::Fail(format!(
        "closed embedding with non-closed image {:?}; proper verdict {}",
        f.cod().label(image),
        verdict.name()
    )))
}

fn sx3(case: &Case, ctx: &LawCtx) -> Result<Outcome> {
    let Case::Space(s) = case else { unreachable!() };
    if s.object().context() != Context::FinSet || s.object().size() < 2 {
        return Ok(Outcome::NotApplicable("needs a finite set with at least two points"));
    }
    if !s.classify().grounded {
        return Ok(Outcome::Skip(Skip::NonGrounded));
    }
    let v = is_hausdorff(s, ctx.probe_bound)?;
    Ok(if v.holds() { Outcome::Fail(format!("Hausdorff ({})", v.name())) } else { Outcome::Pass })
}
