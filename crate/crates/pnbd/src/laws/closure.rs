//! Laws about the closure operator of a preneighbourhood space.

use std::collections::HashMap;

use pnbd_core::closure::{
    closed_elements, closed_formula_compose, closed_formula_phi, closure, closure_oracle, closure_table,
    gmext_closure_formula, hat_from_closed, hat_system, pointwise_closure, star, GmextVariant,
};
use pnbd_core::context::Carrier;
use pnbd_core::system::{product_space, Canonical};
use pnbd_core::{Context, Elem, Error, Morphism, PreNbdSystem, Result};

use super::{
    label, repaired_closure, single_subobject, top_closed, Case, Claims, Law, LawCtx, LawKind, Outcome, Shape, Skip,
};

pub(super) static LAWS: &[Law] = &[
    Law { id: "CL1", kind: LawKind::Theorem, shape: Shape::Space, statement: "cls(σ) = σ", check: cl1 },
    Law {
        id: "CL2", kind: LawKind::Theorem, shape: Shape::Space, statement: "p ≤ q ⇒ cls p ≤ cls q", check: cl2
    },
    Law { id: "CL3", kind: LawKind::Theorem, shape: Shape::Space, statement: "cls(cls p) = cls p", check: cl3 },
    Law {
        id: "CL4",
        kind: LawKind::Theorem,
        shape: Shape::Space,
        statement: "p ≤ cls p for σ ≠ p ≠ top, and cls(top) = top",
        check: cl4,
    },
    Law {
        id: "CL5",
        kind: LawKind::Theorem,
        shape: Shape::Space,
        statement: "cls p is the least closed element above p (p ≠ top)",
        check: cl5,
    },
    Law {
        id: "CL6",
        kind: LawKind::Theorem,
        shape: Shape::Space,
        statement: "closed elements are closed under meets, including the empty meet top",
        check: cl6,
    },
    Law {
        id: "CL7",
        kind: LawKind::Theorem,
        shape: Shape::Space,
        statement: "cls(p ∨ q) = cls p ∨ cls q when every filter lies in a prime filter",
        check: cl7,
    },
    Law {
        id: "CL8",
        kind: LawKind::Theorem,
        shape: Shape::Space,
        statement: "cls(a, μ|M) = m⁻¹(cls(m[a], μ)) for every subobject m",
        check: cl8,
    },
    Law {
        id: "CL9",
        kind: LawKind::Theorem,
        shape: Shape::Space,
        statement: "m ∈ mc(μ) and a ∈ mc(μ|M) ⇒ m[a] ∈ mc(μ)",
        check: cl9,
    },
    Law {
        id: "CL10",
        kind: LawKind::Theorem,
        shape: Shape::Space,
        statement: "x ≤ cls p ⟺ p* ∉ μ(x) for σ ≠ x, p ≠ top",
        check: cl10,
    },
    Law {
        id: "CL11",
        kind: LawKind::Theorem,
        shape: Shape::Space,
        statement: "μ̂(x) = {p : ∃y ∈ mc(μ), x ≤ y* ≤ p} is a weak neighbourhood system, a neighbourhood system in \
                    Boolean lattices, below μ for grounded μ, with y* ∈ μ̂(y*) and cls_μ̂ ≥ cls_μ",
        check: cl11,
    },
    Law {
        id: "CL12",
        kind: LawKind::Theorem,
        shape: Shape::Space,
        statement: "p ∈ mc(μ) ⇒ p* ∈ mo(μ) for σ ≠ p ≠ top",
        check: cl12,
    },
    Law {
        id: "CL13",
        kind: LawKind::Theorem,
        shape: Shape::Pair,
        statement: "cls(p, μ∘c) = ⋁{x ∈ Fix(c), x ≠ top, x ≤ cls(p, μ)} ∨ d_c, and the matching description of \
                    mc(μ∘c), for grounded c",
        check: cl13,
    },
    Law {
        id: "CL14",
        kind: LawKind::Theorem,
        shape: Shape::Space,
        statement: "cls(p, Φ(c)) = ⋁{x ∈ Fix(c), x ≠ top, x ∧ p ≠ σ} ∨ d_c, and the matching description of \
                    mc(Φ(c)), for grounded c",
        check: cl14,
    },
    Law {
        id: "CL15",
        kind: LawKind::Theorem,
        shape: Shape::Pair,
        statement: "if μ ≤ Φ(c) and the inf-meet condition holds then cls_Φ(c) = cls_μ; the literal and generator \
                    forms of the condition agree",
        check: cl15,
    },
    Law {
        id: "CL16",
        kind: LawKind::Theorem,
        shape: Shape::Pair,
        statement: "μ ≤ ν ⇒ cls_ν ≤ cls_μ, and cls_μ ∨ cls_Φ(c) ≤ cls_μ∘c",
        check: cl16,
    },
    Law {
        id: "CL17",
        kind: LawKind::Theorem,
        shape: Shape::Mor,
        statement: "y ≠ top and y ∧ f[x] ≠ σ ⇒ y ≤ cls f[x]",
        check: cl17,
    },
    Law {
        id: "CL18",
        kind: LawKind::Theorem,
        shape: Shape::Mor,
        statement: "f formally surjective, x ∈ mc(μ), f[x] ≠ top, σ ≠ top: x ∧ f⁻¹y = σ ⇒ y ∧ f[x] = σ; and if \
                    μ(f⁻¹y) ⊆ invfil f φ(y), y ≠ σ: y ≤ cls f[x] ⇒ y ∧ f[x] ≠ σ",
        check: cl18,
    },
    Law {
        id: "CL19",
        kind: LawKind::Theorem,
        shape: Shape::Product,
        statement: "projection preimages are rays and projections formally surjective; a ≤ box(a); for closed a and \
                    y ≠ σ: y ≰ cls p_i[a] ⟺ y ∧ p_i[a] = σ ⇐ a ∧ p_i⁻¹y = σ",
        check: cl19,
    },
    Law {
        id: "CL20",
        kind: LawKind::Theorem,
        shape: Shape::Product,
        statement: "cls p = ⋀_J p_J⁻¹ cls(p_J[p], μ_J) over non-empty index sets J, for non-empty factors",
        check: cl20,
    },
    Law {
        id: "CL21",
        kind: LawKind::Theorem,
        shape: Shape::Space,
        statement: "cls(p, ∇) = top and cls(p, ↑) = ⋁ st(p) without top, for p ≠ σ",
        check: cl21,
    },
    Law {
        id: "CL22",
        kind: LawKind::Theorem,
        shape: Shape::Space,
        statement: "the generator closure equals the closure quantified over every filter member",
        check: cl22,
    },
    Law {
        id: "CL23",
        kind: LawKind::Finding,
        shape: Shape::Space,
        statement: "finite sets: cls P = {x : g({x}) ∩ P ≠ ∅}",
        check: cl23,
    },
    Law {
        id: "CL24",
        kind: LawKind::Finding,
        shape: Shape::Space,
        statement: "groups: x ∈ cls P ⟺ g(⟨x⟩) ∧ P ≠ σ (x ≠ e)",
        check: cl24,
    },
];

fn space(case: &Case) -> &PreNbdSystem {
    match case {
        Case::Space(s) => s,
        _ => unreachable!(),
    }
}

fn cl1(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let bot = s.object().lattice().bottom();
    let mut c = Claims::new();
    c.check(closure(s, bot) == bot, || format!("cls(σ) = {}", label(s, closure(s, bot))));
    Ok(c.outcome())
}

fn cl2(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let l = s.object().lattice();
    let t = closure_table(s);
    let mut c = Claims::new();
    for p in l.elements() {
        for q in l.elements() {
            if l.leq(p, q) {
                c.check(l.leq(t[p as usize], t[q as usize]), || {
                    format!("{} ≤ {} but cls is not monotone", label(s, p), label(s, q))
                });
            }
        }
    }
    Ok(c.outcome())
}

fn cl3(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let t = closure_table(s);
    let mut c = Claims::new();
    for (p, &cp) in t.iter().enumerate() {
        c.check(t[cp as usize] == cp, || format!("cls(cls {}) ≠ cls {}", label(s, p as Elem), label(s, p as Elem)));
    }
    Ok(c.outcome())
}

fn cl4(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    if single_subobject(s) {
        return Ok(Outcome::Skip(Skip::Degenerate));
    }
    let l = s.object().lattice();
    let mut c = Claims::new();
    for p in l.elements().filter(|&p| p != l.bottom() && p != l.top()) {
        c.check(l.leq(p, closure(s, p)), || format!("{} is not below its closure", label(s, p)));
    }
    c.top_degenerate(top_closed(s));
    Ok(c.outcome())
}

fn cl5(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let l = s.object().lattice();
    let closed = closed_elements(s);
    let mut c = Claims::new();
    for p in l.elements().filter(|&p| p != l.top()) {
        let cp = closure(s, p);
        c.check(closed.contains(&cp), || format!("cls {} is not closed", label(s, p)));
        c.check(l.leq(p, cp), || format!("{} is not below its closure", label(s, p)));
        for &k in closed.iter().filter(|&&k| l.leq(p, k)) {
            c.check(l.leq(cp, k), || {
                format!("closed {} lies above {} but not above its closure", label(s, k), label(s, p))
            });
        }
    }
    Ok(c.outcome())
}

fn cl6(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let l = s.object().lattice();
    let closed = closed_elements(s);
    let mut c = Claims::new();
    for &a in &closed {
        for &b in &closed {
            let m = l.meet(a, b);
            c.check(closed.contains(&m), || format!("{} ∧ {} is not closed", label(s, a), label(s, b)));
        }
    }
    if single_subobject(s) {
        return Ok(if c.failed() { c.outcome() } else { Outcome::Skip(Skip::Degenerate) });
    }
    c.top_degenerate(top_closed(s));
    Ok(c.outcome())
}

fn cl7(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let l = s.object().lattice();
    if !l.has_prime_extensions() {
        return Ok(Outcome::NotApplicable("some proper filter has no prime extension"));
    }
    let t = closure_table(s);
    let mut c = Claims::new();
    for p in l.elements() {
        for q in l.elements() {
            let lhs = t[l.join(p, q) as usize];
            c.check(lhs == l.join(t[p as usize], t[q as usize]), || {
                format!("cls({} ∨ {}) = {} ≠ cls ∨ cls", label(s, p), label(s, q), label(s, lhs))
            });
        }
    }
    Ok(c.outcome())
}

fn cl8(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let l = s.object().lattice();
    let mut c = Claims::new();
    for m in l.elements() {
        let (res, emb) = s.restrict(m)?;
        let lm = res.object().lattice();
        let res_top_closed = top_closed(&res);
        for a in lm.elements() {
            let lhs = closure(&res, a);
            let rhs = emb.preimage(closure(s, emb.image(a)));
            if lhs == rhs {
                continue;
            }
            if a == lm.top() && !res_top_closed {
                c.top_degenerate(false);
            } else {
                c.check(false, || {
                    format!(
                        "M = {}, a = {:?}: cls in M = {:?}, m⁻¹cls(m a) = {:?}",
                        label(s, m),
                        res.object().label(a),
                        res.object().label(lhs),
                        res.object().label(rhs)
                    )
                });
            }
        }
    }
    Ok(c.outcome())
}

fn cl9(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let mut c = Claims::new();
    for m in closed_elements(s) {
        let (res, emb) = s.restrict(m)?;
        for a in closed_elements(&res) {
            let img = emb.image(a);
            c.check(closure(s, img) == img, || {
                format!("{:?} is closed in {} but its image is not closed", res.object().label(a), label(s, m))
            });
        }
    }
    Ok(c.outcome())
}

fn cl10(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let l = s.object().lattice();
    if !l.is_pseudocomplemented() {
        return Ok(Outcome::NotApplicable("lattice is not pseudocomplemented"));
    }
    let inner: Vec<Elem> = l.elements().filter(|&x| x != l.bottom() && x != l.top()).collect();
    if inner.is_empty() {
        return Ok(Outcome::Skip(Skip::Degenerate));
    }
    let mut c = Claims::new();
    for &x in &inner {
        for &p in &inner {
            let ok = pnbd_core::closure::pseudocomplement_characterization(s, x, p)?;
            c.check(ok, || {
                format!(
                    "x = {}, p = {}: x ≤ cls p is {}, p* = {}",
                    label(s, x),
                    label(s, p),
                    l.leq(x, closure(s, p)),
                    label(s, l.pseudocomplement(p).unwrap())
                )
            });
        }
    }
    Ok(c.outcome())
}

fn boolean(s: &PreNbdSystem) -> bool {
    let l = s.object().lattice();
    l.is_pseudocomplemented()
        && l.is_distributive()
        && l.elements().all(|x| l.join(x, l.pseudocomplement(x).unwrap()) == l.top())
}

fn cl11(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let l = s.object().lattice();
    if !l.is_pseudocomplemented() {
        return Ok(Outcome::NotApplicable("lattice is not pseudocomplemented"));
    }
    if single_subobject(s) {
        return Ok(Outcome::Skip(Skip::Degenerate));
    }
    let hat = match hat_system(s) {
        Ok(h) => h,
        Err(Error::Unsupported(m)) if boolean(s) => return Ok(Outcome::Fail(m)),
        Err(Error::Unsupported(_)) => return Ok(Outcome::NotApplicable("μ̂ is not a filter-valued map here")),
        Err(e) => return Err(e),
    };
    let mut c = Claims::new();
    let kind = hat.classify();
    c.check(kind.is_weak, || "μ̂ is not weak".into());
    if boolean(s) {
        let repaired = || -> Result<bool> {
            let mut closed = closed_elements(s);
            closed.push(l.top());
            Ok(hat_from_closed(s, &closed)?.classify().is_nbd)
        };
        if !kind.is_nbd {
            c.explained(false, !top_closed(s) && repaired()?, || {
                "μ̂ is not a neighbourhood system on a Boolean lattice".into()
            });
        }
    }
    if s.classify().grounded {
        c.check(hat.leq(s)?, || "μ̂ is not below μ".into());
    }
    for y in closed_elements(s) {
        let ys = l.pseudocomplement(y).unwrap();
        c.check(hat.filter(ys).contains(ys), || format!("y* ∉ μ̂(y*) for y = {}", label(s, y)));
    }
    for p in l.elements().filter(|&p| p != l.bottom() && p != l.top()) {
        c.check(l.leq(closure(s, p), closure(&hat, p)), || format!("cls_μ̂ {} is below cls_μ", label(s, p)));
    }
    Ok(c.outcome())
}

fn cl12(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let l = s.object().lattice();
    if !l.is_pseudocomplemented() {
        return Ok(Outcome::NotApplicable("lattice is not pseudocomplemented"));
    }
    let mut c = Claims::new();
    for p in closed_elements(s).into_iter().filter(|&p| p != l.bottom() && p != l.top()) {
        let ps = l.pseudocomplement(p).unwrap();
        c.check(s.is_open(ps), || format!("{} is closed but {} is not open", label(s, p), label(s, ps)));
    }
    Ok(c.outcome())
}

fn cl13(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let Case::Pair(mu, nu) = case else { unreachable!() };
    let c = nu.psi();
    if !c.is_grounded() {
        return Ok(Outcome::NotApplicable("c is not grounded"));
    }
    let l = mu.object().lattice();
    let composed = mu.compose_endomap(&c)?;
    let mut claims = Claims::new();
    for p in l.elements() {
        let rhs = gmext_closure_formula(mu, &c, p, GmextVariant::Compose)?;
        let lhs = closure(&composed, p);
        claims.check(lhs == rhs, || {
            format!("p = {}: cls(p, μ∘c) = {}, formula gives {}", label(mu, p), label(mu, lhs), label(mu, rhs))
        });
    }
    let formula = closed_formula_compose(mu, &c);
    let direct = closed_elements(&composed);
    claims.check(formula == direct, || {
        format!(
            "mc(μ∘c) = [{}], formula gives [{}]",
            super::list(direct.iter().map(|&e| label(mu, e))),
            super::list(formula.iter().map(|&e| label(mu, e)))
        )
    });
    Ok(claims.outcome())
}

fn cl14(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let c = s.psi();
    if !c.is_grounded() {
        return Ok(Outcome::NotApplicable("c is not grounded"));
    }
    let l = s.object().lattice();
    let mut claims = Claims::new();
    for p in l.elements() {
        let rhs = gmext_closure_formula(s, &c, p, GmextVariant::Phi)?;
        let lhs = closure(s, p);
        claims.check(lhs == rhs, || {
            format!("p = {}: cls(p, Φ(c)) = {}, formula gives {}", label(s, p), label(s, lhs), label(s, rhs))
        });
    }
    let formula = closed_formula_phi(&c);
    let direct = closed_elements(s);
    claims.check(formula == direct, || {
        format!(
            "mc(Φ(c)) = [{}], formula gives [{}]",
            super::list(direct.iter().map(|&e| label(s, e))),
            super::list(formula.iter().map(|&e| label(s, e)))
        )
    });
    Ok(claims.outcome())
}

fn cl15(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let Case::Pair(mu, nu) = case else { unreachable!() };
    let c = nu.psi();
    if !mu.leq(nu)? {
        return Ok(Outcome::NotApplicable("μ ≰ Φ(c)"));
    }
    let cond = mu.infmeet_condition(&c)?;
    let mut claims = Claims::new();
    claims.check(cond.literal == cond.reduced, || "literal and generator forms of the condition differ".into());
    if cond.literal {
        let l = mu.object().lattice();
        for p in l.elements() {
            claims.check(closure(nu, p) == closure(mu, p), || {
                format!("condition holds but cls differs at {}", label(mu, p))
            });
        }
    }
    Ok(claims.outcome())
}

fn cl16(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let Case::Pair(mu, nu) = case else { unreachable!() };
    let l = mu.object().lattice();
    let (tm, tn) = (closure_table(mu), closure_table(nu));
    let composed = mu.compose_endomap(&nu.psi())?;
    let tc = closure_table(&composed);
    let below = mu.leq(nu)?;
    let mut claims = Claims::new();
    for p in l.elements() {
        let i = p as usize;
        if below {
            claims.check(l.leq(tn[i], tm[i]), || format!("μ ≤ ν but cls_ν {} ≰ cls_μ", label(mu, p)));
        }
        claims.check(l.leq(l.join(tm[i], tn[i]), tc[i]), || format!("cls_μ ∨ cls_Φ(c) ≰ cls_μ∘c at {}", label(mu, p)));
    }
    Ok(claims.outcome())
}

fn cl17(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let Case::Mor { f, mu: _, phi } = case else { unreachable!() };
    let (lx, ly) = (f.dom().lattice(), f.cod().lattice());
    let mut c = Claims::new();
    for x in lx.elements() {
        let fx = f.image(x);
        let cfx = closure(phi, fx);
        for y in ly.elements().filter(|&y| y != ly.top()) {
            if ly.meet(y, fx) != ly.bottom() {
                c.check(ly.leq(y, cfx), || {
                    format!("y = {} meets f[x] = {} but is not below its closure", label(phi, y), label(phi, fx))
                });
            }
        }
    }
    Ok(c.outcome())
}

fn cl18(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let Case::Mor { f, mu, phi } = case else { unreachable!() };
    let (lx, ly) = (f.dom().lattice(), f.cod().lattice());
    if !f.is_formally_surjective() {
        return Ok(Outcome::NotApplicable("f is not formally surjective"));
    }
    if ly.len() == 1 {
        return Ok(Outcome::Skip(Skip::Degenerate));
    }
    let mut c = Claims::new();
    for x in closed_elements(mu) {
        let fx = f.image(x);
        if fx == ly.top() {
            continue;
        }
        let cfx = closure(phi, fx);
        for y in ly.elements() {
            let fy = f.preimage(y);
            if lx.meet(x, fy) == lx.bottom() {
                c.check(ly.meet(y, fx) == ly.bottom(), || {
                    format!("x = {} misses f⁻¹{} but {} meets f[x]", label(mu, x), label(phi, y), label(phi, y))
                });
            }
            let hyp = lx.leq(f.preimage(phi.g(y)), mu.g(fy)) && y != ly.bottom();
            if hyp && ly.leq(y, cfx) {
                c.check(ly.meet(y, fx) != ly.bottom(), || {
                    format!("x = {}, y = {}: y ≤ cls f[x] but y misses f[x]", label(mu, x), label(phi, y))
                });
            }
        }
    }
    Ok(c.outcome())
}

/// The product space with its partial products `∏_J` and the projections
/// onto them, one entry per non-empty `J` in increasing bitmask order.
struct ProductData {
    sys: PreNbdSystem,
    proj: Vec<Morphism>,
    partial: Vec<(u32, PreNbdSystem, Morphism)>,
}

fn product_data(spaces: &[PreNbdSystem]) -> Result<ProductData> {
    let (sys, proj) = product_space(spaces)?;
    let full = sys.object().clone();
    let n = spaces.len();
    let mut partial = Vec::new();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sub: Vec<PreNbdSystem> = idx.iter().map(|&i| spaces[i].clone()).collect();
        let (sj, pj) = product_space(&sub)?;
        let index: HashMap<Vec<usize>, usize> =
            (0..sj.object().size()).map(|t| (pj.iter().map(|q| q.at(t)).collect(), t)).collect();
        let map = (0..full.size()).map(|s| index[&idx.iter().map(|&i| proj[i].at(s)).collect::<Vec<_>>()]).collect();
        let pmap = Morphism::new(full.clone(), sj.object().clone(), map)?;
        partial.push((mask, sj, pmap));
    }
    Ok(ProductData { sys, proj, partial })
}

fn product_case(case: &Case) -> Option<&[PreNbdSystem]> {
    match case {
        Case::Product(v) => Some(v),
        _ => None,
    }
}

fn cl19(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let spaces = product_case(case).unwrap();
    if spaces.iter().any(|s| s.object().size() == 0) {
        return Ok(Outcome::NotApplicable("empty factor"));
    }
    let d = product_data(spaces)?;
    let obj = d.sys.object();
    let l = obj.lattice();
    let mut c = Claims::new();
    for (k, (pk, sk)) in d.proj.iter().zip(spaces).enumerate() {
        c.check(pk.is_formally_surjective(), || format!("projection {k} is not formally surjective"));
        for y in sk.object().lattice().elements() {
            let ray =
                (0..obj.size()).filter(|&s| sk.object().mask(y) >> pk.at(s) & 1 == 1).fold(0u64, |m, s| m | 1 << s);
            c.check(obj.mask(pk.preimage(y)) == ray, || {
                format!("preimage of {} under p{k} is not a ray", label(sk, y))
            });
        }
    }
    let closed = closed_elements(&d.sys);
    for a in l.elements() {
        let boxed = l.meet_all(d.proj.iter().map(|p| p.preimage(p.image(a))));
        c.check(l.leq(a, boxed), || format!("{} is not below its box", label(&d.sys, a)));
        for (_, _, pj) in &d.partial {
            c.check(l.leq(boxed, pj.preimage(pj.image(boxed))), || "box is not below a partial box".into());
        }
    }
    for &a in &closed {
        for (i, (pi, si)) in d.proj.iter().zip(spaces).enumerate() {
            let li = si.object().lattice();
            let pa = pi.image(a);
            let cpa = closure(si, pa);
            let repaired = repaired_closure(si, pa);
            for y in li.elements().filter(|&y| y != li.bottom()) {
                let misses = li.meet(y, pa) == li.bottom();
                c.explained(!li.leq(y, cpa) == misses, !li.leq(y, repaired) == misses, || {
                    format!(
                        "closed a = {}, factor {i}, y = {}: y ≰ cls p_i[a] is {}, y ∧ p_i[a] = σ is {misses}",
                        label(&d.sys, a),
                        label(si, y),
                        !li.leq(y, cpa)
                    )
                });
                if l.meet(a, pi.preimage(y)) == l.bottom() {
                    c.check(misses, || format!("a ∧ p_i⁻¹{} = σ but {} meets p_i[a]", label(si, y), label(si, y)));
                }
            }
        }
    }
    Ok(c.outcome())
}

fn cl20(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let spaces = product_case(case).unwrap();
    if spaces.iter().any(|s| s.object().size() == 0) {
        return Ok(Outcome::NotApplicable("empty factor"));
    }
    let d = product_data(spaces)?;
    let l = d.sys.object().lattice();
    let tables: Vec<Vec<Elem>> = d.partial.iter().map(|(_, sj, _)| closure_table(sj)).collect();
    let mut c = Claims::new();
    for p in l.elements() {
        let lhs = closure(&d.sys, p);
        let rhs = l.meet_all(d.partial.iter().zip(&tables).map(|((_, _, pj), t)| pj.preimage(t[pj.image(p) as usize])));
        if lhs != rhs {
            let repaired =
                l.meet_all(d.partial.iter().map(|(_, sj, pj)| pj.preimage(repaired_closure(sj, pj.image(p)))));
            c.explained(false, repaired_closure(&d.sys, p) == repaired, || {
                format!(
                    "p = {}: cls p = {}, formula gives {}",
                    label(&d.sys, p),
                    label(&d.sys, lhs),
                    label(&d.sys, rhs)
                )
            });
            if c.failed() {
                break;
            }
        }
    }
    Ok(c.outcome())
}

fn cl21(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let obj = s.object();
    let l = obj.lattice();
    let nabla = *s == PreNbdSystem::canonical(obj, Canonical::Indiscrete);
    let up = *s == PreNbdSystem::canonical(obj, Canonical::Discrete);
    if !nabla && !up {
        return Ok(Outcome::NotApplicable("neither ∇ nor ↑"));
    }
    if single_subobject(s) {
        return Ok(Outcome::Skip(Skip::Degenerate));
    }
    let mut c = Claims::new();
    for p in l.elements().filter(|&p| p != l.bottom()) {
        let cp = closure(s, p);
        let expected = if nabla { l.top() } else { star(s, p).1 };
        c.explained(cp == expected, repaired_closure(s, p) == expected, || {
            format!("p = {}: cls p = {}, formula gives {}", label(s, p), label(s, cp), label(s, expected))
        });
    }
    Ok(c.outcome())
}

fn cl22(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    let l = s.object().lattice();
    let mut c = Claims::new();
    for p in l.elements() {
        let (fast, oracle) = (closure(s, p), closure_oracle(s, p));
        c.check(fast == oracle, || {
            format!("p = {}: fast {} vs oracle {}", label(s, p), label(s, fast), label(s, oracle))
        });
    }
    Ok(c.outcome())
}

fn pointwise_mismatch(s: &PreNbdSystem, with_identity: bool) -> Option<String> {
    let obj = s.object();
    let l = obj.lattice();
    l.elements().find_map(|p| {
        let mut pw = pointwise_closure(s, p);
        if with_identity {
            pw |= obj.mask(l.bottom());
        }
        let direct = obj.mask(closure(s, p));
        (pw != direct).then(|| {
            let pts = |m: u64| {
                let labels = obj.point_labels();
                super::list((0..obj.size()).filter(|i| m >> i & 1 == 1).map(|i| labels[i].clone()))
            };
            format!("P = {}: cls P = {{{}}}, pointwise formula gives {{{}}}", label(s, p), pts(direct), pts(pw))
        })
    })
}

fn cl23(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    if s.object().context() != Context::FinSet {
        return Ok(Outcome::NotApplicable("needs finite sets"));
    }
    Ok(pointwise_mismatch(s, false).map_or(Outcome::Pass, Outcome::Fail))
}

fn cl24(case: &Case, _: &LawCtx) -> Result<Outcome> {
    let s = space(case);
    if !matches!(s.object().carrier(), Carrier::Group(_)) {
        return Ok(Outcome::NotApplicable("needs groups"));
    }
    Ok(pointwise_mismatch(s, true).map_or(Outcome::Pass, Outcome::Fail))
}
