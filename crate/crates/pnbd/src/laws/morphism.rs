//! Laws about closed, dense, proper, separated and perfect morphisms,
//! Hausdorff and compact spaces, and continuity.

use pnbd_core::classify::{
    check_probe, closedness, continuity, dense_closed_factorize, density, is_closed_embedding, is_closed_morphism,
    is_compact, is_continuous, is_dense_morphism, is_hausdorff, is_iso, is_perfect, is_pnbd_morphism, is_proper,
    is_separated, morphisms_between, probe_spaces, probes, proper_analysis,
};
use pnbd_core::closure::{closed_elements, closure, is_closed};
use pnbd_core::context::pullback;
use pnbd_core::system::{kernel_pair_space, product_space};
use pnbd_core::{Error, Morphism, PreNbdSystem, Result, Verdict};

use super::{
    all_premises, describe_map, implies, implies_verdict, label, premise, repaired_closed, repaired_closed_morphism,
    repaired_closure, top_closed, Case, Claims, Law, LawCtx, LawKind, Outcome, Shape, Skip,
};

pub(super) static LAWS: &[Law] = &[
    Law {
        id: "MO1",
        kind: LawKind::Theorem,
        shape: Shape::Mor,
        statement: "f is closed ⟺ cls f[p] ≤ f[cls p] for every p",
        check: mo1,
    },
    Law {
        id: "MO2",
        kind: LawKind::Theorem,
        shape: Shape::Mor,
        statement:
            "for continuous f: closed ⟺ f[cls p] = cls f[p] for every p; an embedding is closed ⟺ its image is closed",
        check: mo2,
    },
    Law {
        id: "MO3",
        kind: LawKind::Theorem,
        shape: Shape::Compose,
        statement: "isomorphisms are closed; closed morphisms compose",
        check: mo3,
    },
    Law {
        id: "MO4",
        kind: LawKind::Theorem,
        shape: Shape::Mor,
        statement: "f closed and continuous, m ∈ mc(φ) ⇒ the corestriction f⁻¹M → M is closed and continuous",
        check: mo4,
    },
    Law {
        id: "MO5",
        kind: LawKind::Theorem,
        shape: Shape::Compose,
        statement: "g ∘ f closed, f formally surjective and continuous ⇒ g closed",
        check: mo5,
    },
    Law {
        id: "MO6",
        kind: LawKind::Theorem,
        shape: Shape::Mor,
        statement: "f dense ⟺ cls(f^M) = top; a dense closed subobject is the top",
        check: mo6,
    },
    Law {
        id: "MO7",
        kind: LawKind::Theorem,
        shape: Shape::Mor,
        statement: "dense morphisms lift against closed embeddings, and in reflecting-zero contexts f factors as a \
                    closed embedding after a dense morphism",
        check: mo7,
    },
    Law {
        id: "MO8",
        kind: LawKind::Theorem,
        shape: Shape::Compose,
        statement: "surjections are dense; g dense continuous, f dense ⇒ g ∘ f dense; g ∘ f dense ⇒ g dense",
        check: mo8,
    },
    Law {
        id: "MO9",
        kind: LawKind::Theorem,
        shape: Shape::Mor,
        statement: "closed embeddings are proper in reflecting-zero contexts; proper ⇒ closed; no probe refutes an \
                    exact proper verdict",
        check: mo9,
    },
    Law {
        id: "MO10",
        kind: LawKind::Theorem,
        shape: Shape::Compose,
        statement: "proper morphisms compose; g ∘ f proper, g mono ⇒ f proper; g ∘ f proper, f stably surjective and \
                    stably continuous ⇒ g proper",
        check: mo10,
    },
    Law {
        id: "MO11",
        kind: LawKind::Theorem,
        shape: Shape::Mor,
        statement: "monos are separated; no probe refutes an exact separated verdict; perfect = proper ∧ separated; \
                    closed embeddings are perfect in reflecting-zero contexts",
        check: mo11,
    },
    Law {
        id: "MO12",
        kind: LawKind::Theorem,
        shape: Shape::Compose,
        statement: "separated and perfect morphisms compose; g ∘ f separated ⇒ f separated; g ∘ f proper, g separated \
                    ⇒ f proper; g ∘ f perfect, g separated ⇒ f perfect; g ∘ f separated (perfect), f proper stably \
                    surjective stably continuous ⇒ g separated (perfect)",
        check: mo12,
    },
    Law {
        id: "MO13",
        kind: LawKind::Theorem,
        shape: Shape::Space,
        statement: "Hausdorff ⟺ the diagonal X → X × X is proper; maps out of a Hausdorff space are separated; \
                    subspaces of Hausdorff spaces are Hausdorff; closed subspaces of compact spaces are compact; \
                    compact subobjects of Hausdorff spaces are closed",
        check: mo13,
    },
    Law {
        id: "MO14",
        kind: LawKind::Theorem,
        shape: Shape::Product,
        statement: "products of Hausdorff spaces are Hausdorff; X Hausdorff ⇒ X × Y → Y separated; products of \
                    compact spaces are compact",
        check: mo14,
    },
    Law {
        id: "MO15",
        kind: LawKind::Theorem,
        shape: Shape::Mor,
        statement: "Y compact, f proper ⇒ X compact; X compact, f surjective ⇒ Y compact; X compact, Y Hausdorff ⇒ f \
                    proper; Y compact Hausdorff ⇒ (f proper ⟺ X compact)",
        check: mo15,
    },
    Law {
        id: "MO16",
        kind: LawKind::ExpectedWitness,
        shape: Shape::Mor,
        statement: "every preneighbourhood morphism is continuous exactly when every map satisfies x ∧ f⁻¹y ≠ σ ⇒ y ∧ \
                    f[x] ≠ σ; reflecting-zero contexts have no non-continuous morphism, others have one",
        check: mo16,
    },
    Law {
        id: "MO17",
        kind: LawKind::Theorem,
        shape: Shape::Mor,
        statement: "for t in the kernel pair: d⁻¹t is the equaliser part of t, d ∧ t is its diagonal, μ(d⁻¹t) ⊇ \
                    μ(f1[t]) ∨ μ(f2[t]); and μ is the restriction of μ ×_φ μ along d",
        check: mo17,
    },
];

fn mor(case: &Case) -> (&Morphism, &PreNbdSystem, &PreNbdSystem) {
    match case {
        Case::Mor { f, mu, phi } => (f, mu, phi),
        _ => unreachable!(),
    }
}

type Composite<'a> = (&'a Morphism, &'a Morphism, &'a PreNbdSystem, &'a PreNbdSystem, &'a PreNbdSystem, Morphism);

/// Components of a composable pair, with `g ∘ f`; `None` unless both maps
/// are preneighbourhood morphisms (then so is the composite).
fn composite(case: &Case) -> Result<Option<Composite<'_>>> {
    let Case::Compose { f, g, mu, phi, psi } = case else { unreachable!() };
    if !is_pnbd_morphism(f, mu, phi)? || !is_pnbd_morphism(g, phi, psi)? {
        return Ok(None);
    }
    Ok(Some((f, g, mu, phi, psi, f.then(g)?)))
}

const NOT_PNBD: &str = "not a preneighbourhood morphism";

/// `f⁻¹M → M` for the subobject `m` of the codomain, with the restricted
/// systems on both ends.
fn corestriction(
    f: &Morphism,
    mu: &PreNbdSystem,
    phi: &PreNbdSystem,
    m: u32,
) -> Result<(Morphism, PreNbdSystem, PreNbdSystem)> {
    let (phi_m, emb) = phi.restrict(m)?;
    let pb = pullback(f, &emb)?;
    let mu_m = mu.initial_along(&pb.h_f)?;
    Ok((pb.f_h, mu_m, phi_m))
}

/// A mono whose domain carries the restricted system.
fn is_embedding(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Result<bool> {
    Ok(f.is_injective() && *mu == phi.initial_along(f)?)
}

/// `f[cls p] ≤ cls f[p]` under the repaired closures.
fn repaired_continuous(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> bool {
    let (lx, ly) = (f.dom().lattice(), f.cod().lattice());
    lx.elements().all(|p| ly.leq(f.image(repaired_closure(mu, p)), repaired_closure(phi, f.image(p))))
}

fn mo1(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let (f, mu, phi) = mor(case);
    if !is_pnbd_morphism(f, mu, phi)? {
        return Ok(Outcome::NotApplicable(NOT_PNBD));
    }
    let t = closedness(f, mu, phi)?;
    let (lx, ly) = (f.dom().lattice(), f.cod().lattice());
    let alt = lx.elements().all(|p| ly.leq(repaired_closure(phi, f.image(p)), f.image(repaired_closure(mu, p))));
    let mut c = Claims::new();
    c.explained(t.agree(), repaired_closed_morphism(f, mu, phi) == alt, || {
        format!("definition gives {}, inequality form gives {}", t.primary, t.alternative)
    });
    Ok(c.outcome())
}

fn mo2(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let (f, mu, phi) = mor(case);
    if !is_pnbd_morphism(f, mu, phi)? || !is_continuous(f, mu, phi)? {
        return Ok(Outcome::NotApplicable("not a continuous preneighbourhood morphism"));
    }
    let closed = is_closed_morphism(f, mu, phi)?;
    let lx = f.dom().lattice();
    let commutes = lx.elements().all(|p| f.image(closure(mu, p)) == closure(phi, f.image(p)));
    let repaired_commutes =
        lx.elements().all(|p| f.image(repaired_closure(mu, p)) == repaired_closure(phi, f.image(p)));
    let mut c = Claims::new();
    c.explained(closed == commutes, repaired_closed_morphism(f, mu, phi) == repaired_commutes, || {
        format!("closed is {closed}, image commutes with closure is {commutes}")
    });
    if is_embedding(f, mu, phi)? {
        let image = f.image_of_top();
        let image_closed = is_closed(phi, image);
        c.explained(
            closed == image_closed,
            repaired_closed_morphism(f, mu, phi) == repaired_closed(phi, image),
            || format!("embedding: closed is {closed}, image closed is {image_closed}"),
        );
    }
    Ok(c.outcome())
}

fn mo3(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let Some((f, g, mu, phi, psi, gf)) = composite(case)? else { return Ok(Outcome::NotApplicable(NOT_PNBD)) };
    let (cf, cg) = (is_closed_morphism(f, mu, phi)?, is_closed_morphism(g, phi, psi)?);
    let mut c = Claims::new();
    if is_iso(f, mu, phi)? {
        c.check(cf, || "an isomorphism is not closed".into());
    }
    if cf && cg {
        c.check(is_closed_morphism(&gf, mu, psi)?, || "composite of closed morphisms is not closed".into());
    }
    Ok(c.outcome())
}

fn mo4(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let (f, mu, phi) = mor(case);
    if !is_pnbd_morphism(f, mu, phi)? || !is_continuous(f, mu, phi)? || !is_closed_morphism(f, mu, phi)? {
        return Ok(Outcome::NotApplicable("not a closed continuous preneighbourhood morphism"));
    }
    let mut c = Claims::new();
    for m in closed_elements(phi) {
        let (fm, mu_m, phi_m) = corestriction(f, mu, phi, m)?;
        if !is_pnbd_morphism(&fm, &mu_m, &phi_m)? {
            c.check(false, || format!("corestriction to {} is not a preneighbourhood morphism", label(phi, m)));
            continue;
        }
        let closed = is_closed_morphism(&fm, &mu_m, &phi_m)?;
        c.explained(closed, repaired_closed_morphism(&fm, &mu_m, &phi_m), || {
            format!("corestriction to {} is not closed", label(phi, m))
        });
        let cont = is_continuous(&fm, &mu_m, &phi_m)?;
        c.explained(cont, repaired_continuous(&fm, &mu_m, &phi_m), || {
            format!("corestriction to {} is not continuous", label(phi, m))
        });
    }
    Ok(c.outcome())
}

fn mo5(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let Some((f, g, mu, phi, psi, gf)) = composite(case)? else { return Ok(Outcome::NotApplicable(NOT_PNBD)) };
    if !is_closed_morphism(&gf, mu, psi)? || !f.is_formally_surjective() || !is_continuous(f, mu, phi)? {
        return Ok(Outcome::NotApplicable("hypotheses not met"));
    }
    let mut c = Claims::new();
    c.check(is_closed_morphism(g, phi, psi)?, || {
        "g ∘ f is closed, f formally surjective continuous, g not closed".into()
    });
    Ok(c.outcome())
}

fn mo6(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let (f, mu, phi) = mor(case);
    if !is_pnbd_morphism(f, mu, phi)? {
        return Ok(Outcome::NotApplicable(NOT_PNBD));
    }
    let t = density(f, mu, phi)?;
    let mut c = Claims::new();
    if !t.agree() {
        if top_closed(phi) {
            c.check(false, || format!("definition gives {}, cls(f^M) = top gives {}", t.primary, t.alternative));
        } else {
            c.top_degenerate(false);
        }
    }
    let top = f.cod().lattice().top();
    for m in closed_elements(phi) {
        if closure(phi, m) == top {
            c.check(m == top, || format!("{} is closed and dense but not the top", label(phi, m)));
        }
    }
    Ok(c.outcome())
}

fn mo7(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let (f, mu, phi) = mor(case);
    if !is_pnbd_morphism(f, mu, phi)? {
        return Ok(Outcome::NotApplicable(NOT_PNBD));
    }
    let ly = f.cod().lattice();
    let dense = is_dense_morphism(f, mu, phi)?;
    let image = f.image_of_top();
    let mut c = Claims::new();
    // a dense f factoring through a closed embedding forces the embedding to be the top
    let proper_closed_above = closed_elements(phi).into_iter().find(|&k| k != ly.top() && ly.leq(image, k));
    c.check(dense == proper_closed_above.is_none(), || {
        format!(
            "dense is {dense} but closed {:?} contains the image",
            proper_closed_above.map(|k| phi.object().label(k))
        )
    });
    if f.dom().context().reflects_zero() {
        let dc = dense_closed_factorize(f, mu, phi)?;
        c.check(dc.d.then(&dc.embedding)? == *f, || "factors do not compose to f".into());
        c.check(is_closed_embedding(&dc.embedding, phi)? || dc.top_degenerate, || {
            format!("{} is not a closed embedding", label(phi, dc.m))
        });
        c.check(is_pnbd_morphism(&dc.d, mu, &dc.middle)?, || "dense factor is not a preneighbourhood morphism".into());
        if !c.failed() {
            c.check(is_dense_morphism(&dc.d, mu, &dc.middle)?, || "first factor is not dense".into());
        }
        c.top_degenerate(!dc.top_degenerate);
    }
    Ok(c.outcome())
}

fn mo8(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let Some((f, g, mu, phi, psi, gf)) = composite(case)? else { return Ok(Outcome::NotApplicable(NOT_PNBD)) };
    let (df, dg, dgf) =
        (is_dense_morphism(f, mu, phi)?, is_dense_morphism(g, phi, psi)?, is_dense_morphism(&gf, mu, psi)?);
    let mut c = Claims::new();
    if f.is_surjective() {
        c.check(df, || "a surjective morphism is not dense".into());
    }
    if dg && is_continuous(g, phi, psi)? && df {
        c.check(dgf, || "g dense continuous and f dense but g ∘ f not dense".into());
    }
    if dgf {
        c.check(dg, || "g ∘ f dense but g not dense".into());
    }
    Ok(c.outcome())
}

fn no_probe_refutes(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem, bound: u32) -> Result<Option<String>> {
    for probe in probes(phi, bound)? {
        if let Some(w) = check_probe(f, mu, &probe)? {
            return Ok(Some(format!(
                "exact verdict refuted by probe {} along {}",
                probe.space.describe(),
                describe_map(&w.probe.h)
            )));
        }
    }
    Ok(None)
}

fn mo9(case: &Case, ctx: &LawCtx) -> Result<Outcome> {
    let (f, mu, phi) = mor(case);
    if !is_pnbd_morphism(f, mu, phi)? {
        return Ok(Outcome::NotApplicable(NOT_PNBD));
    }
    let a = proper_analysis(f, mu, phi, ctx.probe_bound)?;
    let mut c = Claims::new();
    if f.dom().context().reflects_zero() && is_embedding(f, mu, phi)? && is_closed(phi, f.image_of_top()) {
        c.check(a.verdict == Verdict::Holds, || format!("closed embedding has verdict {}", a.verdict.name()));
    }
    if a.verdict.holds() {
        c.check(is_closed_morphism(f, mu, phi)?, || "proper but not closed".into());
    }
    if a.verdict.is_exact() {
        if let Some(d) = no_probe_refutes(f, mu, phi, ctx.probe_bound)? {
            c.check(false, || d);
        }
    }
    Ok(c.outcome())
}

fn mo10(case: &Case, ctx: &LawCtx) -> Result<Outcome> {
    let Some((f, g, mu, phi, psi, gf)) = composite(case)? else { return Ok(Outcome::NotApplicable(NOT_PNBD)) };
    let b = ctx.probe_bound;
    let (pf, pg, pgf) = (is_proper(f, mu, phi, b)?, is_proper(g, phi, psi, b)?, is_proper(&gf, mu, psi, b)?);
    let mut c = Claims::new();
    implies_verdict(&mut c, all_premises(&[premise(&pf), premise(&pg)]), &pgf, || {
        "f and g proper but g ∘ f not proper".into()
    });
    if g.is_injective() {
        implies_verdict(&mut c, premise(&pgf), &pf, || "g ∘ f proper and g mono but f not proper".into());
    }
    // surjections are pullback-stable and every morphism is continuous in a
    // reflecting-zero context
    if f.dom().context().reflects_zero() && f.is_surjective() {
        implies_verdict(&mut c, premise(&pgf), &pg, || "g ∘ f proper, f stably surjective but g not proper".into());
    }
    Ok(c.outcome())
}

fn mo11(case: &Case, ctx: &LawCtx) -> Result<Outcome> {
    let (f, mu, phi) = mor(case);
    if !is_pnbd_morphism(f, mu, phi)? {
        return Ok(Outcome::NotApplicable(NOT_PNBD));
    }
    let b = ctx.probe_bound;
    let sep = is_separated(f, mu, phi, b)?;
    let proper = is_proper(f, mu, phi, b)?;
    let mut c = Claims::new();
    if f.is_injective() {
        c.check(sep == Verdict::Holds, || format!("a mono has separated verdict {}", sep.name()));
    } else if sep.is_exact() {
        let (kp, sys) = kernel_pair_space(f, mu)?;
        if let Some(d) = no_probe_refutes(&kp.diagonal, mu, &sys, b)? {
            c.check(false, || d);
        }
    }
    let perfect = is_perfect(f, mu, phi, b)?;
    c.check(perfect == proper.clone().and(sep), || "perfect verdict is not proper ∧ separated".into());
    if f.dom().context().reflects_zero() && is_embedding(f, mu, phi)? && is_closed(phi, f.image_of_top()) {
        c.check(perfect == Verdict::Holds, || format!("closed embedding has perfect verdict {}", perfect.name()));
    }
    Ok(c.outcome())
}

fn mo12(case: &Case, ctx: &LawCtx) -> Result<Outcome> {
    let Some((f, g, mu, phi, psi, gf)) = composite(case)? else { return Ok(Outcome::NotApplicable(NOT_PNBD)) };
    let b = ctx.probe_bound;
    let (sf, sg, sgf) = (is_separated(f, mu, phi, b)?, is_separated(g, phi, psi, b)?, is_separated(&gf, mu, psi, b)?);
    let (pf, pg, pgf) = (is_proper(f, mu, phi, b)?, is_proper(g, phi, psi, b)?, is_proper(&gf, mu, psi, b)?);
    let (qf, qg, qgf) = (pf.clone().and(sf.clone()), pg.clone().and(sg.clone()), pgf.clone().and(sgf.clone()));
    let mut c = Claims::new();
    implies_verdict(&mut c, all_premises(&[premise(&sf), premise(&sg)]), &sgf, || {
        "separated morphisms do not compose".into()
    });
    implies_verdict(&mut c, all_premises(&[premise(&qf), premise(&qg)]), &qgf, || {
        "perfect morphisms do not compose".into()
    });
    implies_verdict(&mut c, premise(&sgf), &sf, || "g ∘ f separated but f not separated".into());
    implies_verdict(&mut c, all_premises(&[premise(&pgf), premise(&sg)]), &pf, || {
        "g ∘ f proper and g separated but f not proper".into()
    });
    implies_verdict(&mut c, all_premises(&[premise(&qgf), premise(&sg)]), &qf, || {
        "g ∘ f perfect and g separated but f not perfect".into()
    });
    if f.dom().context().reflects_zero() && f.is_surjective() {
        implies_verdict(&mut c, all_premises(&[premise(&sgf), premise(&pf)]), &sg, || {
            "g ∘ f separated, f proper stably surjective, g not separated".into()
        });
        implies_verdict(&mut c, all_premises(&[premise(&qgf), premise(&pf)]), &qg, || {
            "g ∘ f perfect, f proper stably surjective, g not perfect".into()
        });
    }
    Ok(c.outcome())
}

fn diagonal_space(s: &PreNbdSystem) -> Result<(Morphism, PreNbdSystem)> {
    let (sq, proj) = product_space(&[s.clone(), s.clone()])?;
    let n = s.object().size();
    let map =
        (0..n).map(|x| (0..sq.object().size()).find(|&p| proj[0].at(p) == x && proj[1].at(p) == x).unwrap()).collect();
    Ok((Morphism::new(s.object().clone(), sq.object().clone(), map)?, sq))
}

fn mo13(case: &Case, ctx: &LawCtx) -> Result<Outcome> {
    let Case::Space(s) = case else { unreachable!() };
    if !s.classify().grounded {
        return Ok(Outcome::Skip(Skip::NonGrounded));
    }
    let b = ctx.probe_bound;
    let haus = is_hausdorff(s, b)?;
    let (d, sq) = diagonal_space(s)?;
    let diag = is_proper(&d, s, &sq, b)?;
    let mut c = Claims::new();
    c.check(haus.holds() == diag.holds(), || {
        format!("Hausdorff is {}, proper diagonal is {}", haus.name(), diag.name())
    });
    if s.object().size() <= 1 {
        c.check(haus == Verdict::Holds, || {
            format!("a grounded space with at most one point has verdict {}", haus.name())
        });
    }
    let ph = premise(&haus);
    for t in probe_spaces(s.object().context(), b)? {
        for f in morphisms_between(s.object(), t.object())? {
            if is_pnbd_morphism(&f, s, &t)? {
                implies_verdict(&mut c, ph, &is_separated(&f, s, &t, b)?, || {
                    format!("map {} out of a Hausdorff space is not separated", describe_map(&f))
                });
            }
        }
    }
    let compact = is_compact(s, b)?;
    let l = s.object().lattice();
    for m in l.elements() {
        let (sub, _) = s.restrict(m)?;
        if !sub.classify().grounded {
            continue;
        }
        implies_verdict(&mut c, ph, &is_hausdorff(&sub, b)?, || format!("subspace {} is not Hausdorff", label(s, m)));
        let sub_compact = is_compact(&sub, b)?;
        if is_closed(s, m) {
            implies_verdict(&mut c, premise(&compact), &sub_compact, || {
                format!("closed subspace {} of a compact space is not compact", label(s, m))
            });
        }
        if !is_closed(s, m) {
            implies(&mut c, all_premises(&[ph, premise(&sub_compact)]), false, || {
                format!("compact subobject {} of a Hausdorff space is not closed", label(s, m))
            });
        }
    }
    Ok(c.outcome())
}

fn mo14(case: &Case, ctx: &LawCtx) -> Result<Outcome> {
    match mo14_checked(case, ctx) {
        // the diagonal of a product of groups lives in its square
        Err(Error::Capacity { .. }) => Ok(Outcome::NotApplicable("square of the product exceeds the capacity")),
        r => r,
    }
}

fn mo14_checked(case: &Case, ctx: &LawCtx) -> Result<Outcome> {
    let Case::Product(spaces) = case else { unreachable!() };
    let [x, y] = spaces.as_slice() else { return Ok(Outcome::NotApplicable("needs two factors")) };

    if !x.classify().grounded || !y.classify().grounded {
        return Ok(Outcome::Skip(Skip::NonGrounded));
    }
    let b = ctx.probe_bound;
    let (prod, proj) = product_space(spaces)?;
    let (hx, hy) = (is_hausdorff(x, b)?, is_hausdorff(y, b)?);
    let mut c = Claims::new();
    implies_verdict(&mut c, all_premises(&[premise(&hx), premise(&hy)]), &is_hausdorff(&prod, b)?, || {
        "product of Hausdorff spaces is not Hausdorff".into()
    });
    implies_verdict(&mut c, premise(&hx), &is_separated(&proj[1], &prod, y, b)?, || {
        "projection X × Y → Y is not separated for Hausdorff X".into()
    });
    let (cx, cy) = (is_compact(x, b)?, is_compact(y, b)?);
    implies_verdict(&mut c, all_premises(&[premise(&cx), premise(&cy)]), &is_compact(&prod, b)?, || {
        "product of compact spaces is not compact".into()
    });
    Ok(c.outcome())
}

fn mo15(case: &Case, ctx: &LawCtx) -> Result<Outcome> {
    let (f, mu, phi) = mor(case);
    if !is_pnbd_morphism(f, mu, phi)? {
        return Ok(Outcome::NotApplicable(NOT_PNBD));
    }
    if !mu.classify().grounded || !phi.classify().grounded {
        return Ok(Outcome::Skip(Skip::NonGrounded));
    }
    let b = ctx.probe_bound;
    let (cx, cy) = (is_compact(mu, b)?, is_compact(phi, b)?);
    let hy = is_hausdorff(phi, b)?;
    let p = is_proper(f, mu, phi, b)?;
    let mut c = Claims::new();
    implies_verdict(&mut c, all_premises(&[premise(&cy), premise(&p)]), &cx, || {
        "proper map into a compact space from a non-compact space".into()
    });
    if f.is_surjective() {
        implies_verdict(&mut c, premise(&cx), &cy, || "surjective image of a compact space is not compact".into());
    }
    implies_verdict(&mut c, all_premises(&[premise(&cx), premise(&hy)]), &p, || {
        "map from a compact to a Hausdorff space is not proper".into()
    });
    Ok(c.outcome())
}

fn mo16(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let (f, mu, phi) = mor(case);
    let (lx, ly) = (f.dom().lattice(), f.cod().lattice());
    let condition = lx.elements().all(|x| {
        ly.elements().all(|y| lx.meet(x, f.preimage(y)) == lx.bottom() || ly.meet(y, f.image(x)) != ly.bottom())
    });
    let rzc = f.dom().context().reflects_zero();
    let mut c = Claims::new();
    if rzc {
        c.check(condition, || "the continuity condition fails in a reflecting-zero context".into());
        if is_pnbd_morphism(f, mu, phi)? {
            let t = continuity(f, mu, phi)?;
            c.check(t.agree(), || "the two continuity forms disagree".into());
            c.explained(t.primary, repaired_continuous(f, mu, phi), || {
                "a preneighbourhood morphism is not continuous".into()
            });
        }
        return Ok(c.outcome());
    }
    if is_pnbd_morphism(f, mu, phi)? {
        let t = continuity(f, mu, phi)?;
        c.check(t.agree(), || "the two continuity forms disagree".into());
        if !t.primary {
            return Ok(c.outcome_or(Outcome::Witness("given systems: not continuous".into())));
        }
    }
    // the construction behind the theorem: pull φ back along a surjection
    // that violates the condition
    if f.is_surjective() && !condition {
        let pulled = phi.initial_along(f)?;
        if !is_continuous(f, &pulled, phi)? {
            let gens =
                super::list(lx.elements().map(|x| format!("{}->{}", label(&pulled, x), label(&pulled, pulled.g(x)))));
            return Ok(c.outcome_or(Outcome::Witness(format!("pulled-back system [{gens}] is not continuous"))));
        }
    }
    Ok(c.outcome())
}

impl Claims {
    /// The failure if any, else `other`.
    fn outcome_or(&mut self, other: Outcome) -> Outcome {
        match self.outcome() {
            Outcome::Fail(d) => Outcome::Fail(d),
            _ => other,
        }
    }
}

fn mo17(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let (f, mu, phi) = mor(case);
    if !is_pnbd_morphism(f, mu, phi)? {
        return Ok(Outcome::NotApplicable(NOT_PNBD));
    }
    let (kp, sys) = kernel_pair_space(f, mu)?;
    let k = &kp.object;
    let lk = k.lattice();
    let lx = f.dom().lattice();
    let diag_points: u64 = (0..k.size()).filter(|&p| kp.f1.at(p) == kp.f2.at(p)).fold(0, |m, p| m | 1 << p);
    let mut c = Claims::new();
    for t in lk.elements() {
        let dinv = kp.diagonal.preimage(t);
        let Some(eq) = k.elem(k.mask(t) & diag_points) else {
            c.check(false, || format!("equaliser part of {:?} is not a subobject", k.label(t)));
            continue;
        };
        c.check(kp.f1.image(eq) == dinv && kp.f2.image(eq) == dinv, || format!("d⁻¹t wrong at {:?}", k.label(t)));
        c.check(lk.meet(kp.diagonal.image_of_top(), t) == eq, || format!("d ∧ t wrong at {:?}", k.label(t)));
        let bound = lx.meet(mu.g(kp.f1.image(t)), mu.g(kp.f2.image(t)));
        c.check(lx.leq(mu.g(dinv), bound), || format!("μ(d⁻¹t) ⊉ μ(f1[t]) ∨ μ(f2[t]) at {:?}", k.label(t)));
    }
    c.check(sys.initial_along(&kp.diagonal)? == *mu, || "μ is not the restriction of μ ×_φ μ along d".into());
    Ok(c.outcome())
}
