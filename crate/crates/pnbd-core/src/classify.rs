//! Morphism classes: preneighbourhood morphisms, continuous, closed, dense,
//! closed embeddings, proper, separated and perfect morphisms, and the space
//! predicates Hausdorff and compact.
//!
//! Properness quantifies over all pullbacks. Exact verdicts are returned only
//! for isomorphisms and for monos in a context that reflects zero; otherwise
//! the classifier probes every space `(T, τ)` with at most `probe_bound`
//! points and every preneighbourhood morphism `h: T → Y`, in canonical order.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::closure::{closure, is_closed};
use crate::context::{all_functions, homomorphisms, same_object, Context, ContextObject, Morphism, Obj};
use crate::endomap::enumerate_endomaps;
use crate::error::{Error, Result};
use crate::filter::{imgfil, invfil};
use crate::group::Group;
use crate::lattice::Elem;
use crate::system::{kernel_pair_space, pullback_space, terminal_space, PreNbdSystem};

pub const DEFAULT_PROBE_BOUND: u32 = 2;
pub const MAX_PROBE_BOUND: u32 = 3;

fn check_shapes(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Result<()> {
    if !same_object(f.dom(), mu.object()) {
        return Err(Error::Domain("source system is not on the morphism's domain".into()));
    }
    if !same_object(f.cod(), phi.object()) {
        return Err(Error::Domain("target system is not on the morphism's codomain".into()));
    }
    Ok(())
}

/// The defining inequality and the three equivalent filter conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PnbdReport {
    /// `g_μ(f⁻¹u) ≤ f⁻¹(g_φ(u))` for all `u`.
    pub definition: bool,
    /// `invfil f (φ(y)) ⊆ μ(f⁻¹y)` for all `y`.
    pub invfil_form: bool,
    /// `φ(y) ⊆ imgfil f (μ(f⁻¹y))` for all `y`.
    pub imgfil_form: bool,
    /// `invfil f (φ(f[x])) ⊆ μ(x)` for all `x`.
    pub image_form: bool,
    /// Least codomain element violating the definition.
    pub witness: Option<Elem>,
}

impl PnbdReport {
    pub fn agree(&self) -> bool {
        self.definition == self.invfil_form
            && self.invfil_form == self.imgfil_form
            && self.imgfil_form == self.image_form
    }
}

pub fn pnbd_report(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Result<PnbdReport> {
    check_shapes(f, mu, phi)?;
    let (lx, ly) = (f.dom().lattice(), f.cod().lattice());
    let witness = ly.elements().find(|&u| !lx.leq(mu.g(f.preimage(u)), f.preimage(phi.g(u))));
    let mut invfil_form = true;
    let mut imgfil_form = true;
    for y in ly.elements() {
        let target = mu.filter(f.preimage(y));
        invfil_form &= invfil(f, &phi.filter(y))?.is_subset(&target);
        imgfil_form &= phi.filter(y).is_subset(&imgfil(f, &target)?);
    }
    let mut image_form = true;
    for x in lx.elements() {
        image_form &= invfil(f, &phi.filter(f.image(x)))?.is_subset(&mu.filter(x));
    }
    Ok(PnbdReport { definition: witness.is_none(), invfil_form, imgfil_form, image_form, witness })
}

pub fn is_pnbd_morphism(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Result<bool> {
    check_shapes(f, mu, phi)?;
    let (lx, ly) = (f.dom().lattice(), f.cod().lattice());
    Ok(ly.elements().all(|u| lx.leq(mu.g(f.preimage(u)), f.preimage(phi.g(u)))))
}

fn require_pnbd(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Result<()> {
    if is_pnbd_morphism(f, mu, phi)? {
        Ok(())
    } else {
        Err(Error::Domain("not a preneighbourhood morphism".into()))
    }
}

/// A property with two formulations that should coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoForms {
    pub primary: bool,
    pub alternative: bool,
}

impl TwoForms {
    pub fn agree(&self) -> bool {
        self.primary == self.alternative
    }
}

/// Image form `f[cls x] ≤ cls f[x]` and preimage form `cls f⁻¹y ≤ f⁻¹ cls y`.
pub fn continuity(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Result<TwoForms> {
    require_pnbd(f, mu, phi)?;
    let (lx, ly) = (f.dom().lattice(), f.cod().lattice());
    let primary = lx.elements().all(|x| ly.leq(f.image(closure(mu, x)), closure(phi, f.image(x))));
    let alternative = ly.elements().all(|y| lx.leq(closure(mu, f.preimage(y)), f.preimage(closure(phi, y))));
    Ok(TwoForms { primary, alternative })
}

pub fn is_continuous(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Result<bool> {
    Ok(continuity(f, mu, phi)?.primary)
}

/// Definition (closed subobjects map to closed subobjects) and the
/// alternative `cls f[p] ≤ f[cls p]` for all `p`.
pub fn closedness(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Result<TwoForms> {
    require_pnbd(f, mu, phi)?;
    Ok(TwoForms { primary: closed_violation(f, mu, phi).is_none(), alternative: closed_alt(f, mu, phi) })
}

fn closed_violation(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Option<Elem> {
    f.dom().lattice().elements().find(|&p| is_closed(mu, p) && !is_closed(phi, f.image(p)))
}

fn closed_alt(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> bool {
    let (lx, ly) = (f.dom().lattice(), f.cod().lattice());
    lx.elements().all(|p| ly.leq(closure(phi, f.image(p)), f.image(closure(mu, p))))
}

pub fn is_closed_morphism(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Result<bool> {
    require_pnbd(f, mu, phi)?;
    Ok(closed_violation(f, mu, phi).is_none())
}

pub fn is_closed_embedding(m: &Morphism, phi: &PreNbdSystem) -> Result<bool> {
    if !same_object(m.cod(), phi.object()) {
        return Err(Error::Domain("system is not on the codomain".into()));
    }
    if !m.is_injective() {
        return Err(Error::Domain("closed embedding test needs a mono".into()));
    }
    Ok(is_closed(phi, m.image_of_top()))
}

/// Definition (every closed subobject above `f^M` is the top) and the
/// closure criterion `cls(f^M) = top`.
pub fn density(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Result<TwoForms> {
    require_pnbd(f, mu, phi)?;
    let ly = f.cod().lattice();
    let fm = f.image_of_top();
    let primary = ly.elements().all(|m| !(ly.leq(fm, m) && is_closed(phi, m)) || m == ly.top());
    let alternative = closure(phi, fm) == ly.top();
    Ok(TwoForms { primary, alternative })
}

pub fn is_dense_morphism(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Result<bool> {
    Ok(density(f, mu, phi)?.primary)
}

/// `f = m ∘ d` with `m` the embedding of `cls(f^M)` and `d` into that
/// subspace with the restricted system.
#[derive(Clone, Debug)]
pub struct DenseClosed {
    pub d: Morphism,
    pub middle: PreNbdSystem,
    pub m: Elem,
    pub embedding: Morphism,
    /// `f^M ≰ cls(f^M)` (only at the top), so the top was used instead.
    pub top_degenerate: bool,
}

pub fn dense_closed_factorize(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Result<DenseClosed> {
    require_pnbd(f, mu, phi)?;
    if !f.dom().context().reflects_zero() {
        return Err(Error::Unsupported("dense/closed factorization needs a context that reflects zero".into()));
    }
    let ly = f.cod().lattice();
    let fm = f.image_of_top();
    let c = closure(phi, fm);
    let top_degenerate = !ly.leq(fm, c);
    let m = if top_degenerate { ly.top() } else { c };
    let (middle, embedding) = phi.restrict(m)?;
    let d = f.corestrict(&embedding)?;
    Ok(DenseClosed { d, middle, m, embedding, top_degenerate })
}

/// Isomorphism of spaces: bijective and the systems correspond.
pub fn is_iso(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem) -> Result<bool> {
    check_shapes(f, mu, phi)?;
    if !f.is_bijective() {
        return Ok(false);
    }
    Ok(f.dom().lattice().elements().all(|x| f.image(mu.g(x)) == phi.g(f.image(x))))
}

/// A test space with a preneighbourhood morphism into the codomain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probe {
    pub space: PreNbdSystem,
    pub h: Morphism,
}

/// Where a properness verdict failed: the pulled-back morphism `f_h` sends
/// the closed subobject `subobject` of the pullback space to a non-closed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub probe: Probe,
    pub pullback: PreNbdSystem,
    pub projection: Morphism,
    pub subobject: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    HoldsUpToBound(u32),
    Fails(Box<Witness>),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        !matches!(self, Verdict::Fails(_))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Verdict::Holds => "holds".into(),
            Verdict::HoldsUpToBound(k) => format!("holds up to bound {k}"),
            Verdict::Fails(_) => "fails".into(),
        }
    }

    /// Conjunction: failures dominate, exact only if both are exact.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fails(w), _) | (_, Verdict::Fails(w)) => Verdict::Fails(w),
            (Verdict::Holds, Verdict::Holds) => Verdict::Holds,
            (Verdict::HoldsUpToBound(a), Verdict::HoldsUpToBound(b)) => Verdict::HoldsUpToBound(a.min(b)),
            (Verdict::HoldsUpToBound(k), Verdict::Holds) | (Verdict::Holds, Verdict::HoldsUpToBound(k)) => {
                Verdict::HoldsUpToBound(k)
            }
        }
    }
}

/// Which rung of the ladder decided a properness verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rung {
    Iso,
    ClosedEmbedding,
    NotClosed,
    Probe,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperAnalysis {
    pub verdict: Verdict,
    pub rung: Rung,
    /// An embedding that is closed as a morphism although its image is not
    /// closed.
    pub gap: bool,
}

fn check_bound(bound: u32) -> Result<()> {
    if bound > MAX_PROBE_BOUND {
        return Err(Error::Capacity { what: "probe bound", limit: MAX_PROBE_BOUND as usize, got: bound as usize });
    }
    Ok(())
}

const PROBE_POINTS: [&str; 3] = ["p", "q", "r"];

/// Test spaces of a context with at most `bound` points, in canonical order.
pub fn probe_spaces(ctx: Context, bound: u32) -> Result<Vec<PreNbdSystem>> {
    check_bound(bound)?;
    let mut out = Vec::new();
    let objects: Vec<Obj> = match ctx {
        Context::FinSet => {
            (0..=bound as usize).map(|k| ContextObject::finset(&PROBE_POINTS[..k])).collect::<Result<_>>()?
        }
        Context::FinGrp => (1..=bound.max(1) as usize)
            .map(|k| ContextObject::group(Group::builtin(&format!("Z{k}"))?))
            .collect::<Result<_>>()?,
    };
    for obj in objects {
        for c in enumerate_endomaps(obj.lattice(), false, 1 << 20)? {
            out.push(PreNbdSystem::new(obj.clone(), c)?);
        }
    }
    Ok(out)
}

/// Morphisms between two objects of the same context, in canonical order.
pub fn morphisms_between(x: &Obj, y: &Obj) -> Result<Vec<Morphism>> {
    match x.context() {
        Context::FinSet => Ok(all_functions(x, y)),
        Context::FinGrp => homomorphisms(x, y),
    }
}

/// Every probe `(T, τ, h)` against `(Y, φ)` with `h` a preneighbourhood morphism.
pub fn probes(phi: &PreNbdSystem, bound: u32) -> Result<Vec<Probe>> {
    let mut out = Vec::new();
    for space in probe_spaces(phi.object().context(), bound)? {
        for h in morphisms_between(space.object(), phi.object())? {
            if is_pnbd_morphism(&h, &space, phi)? {
                out.push(Probe { space: space.clone(), h });
            }
        }
    }
    Ok(out)
}

/// Pulls `f` back along the probe and tests the pulled-back morphism for
/// closedness.
pub fn check_probe(f: &Morphism, mu: &PreNbdSystem, probe: &Probe) -> Result<Option<Witness>> {
    let (pb, sys) = pullback_space(f, &probe.h, mu, &probe.space)?;
    let bad = closed_violation(&pb.f_h, &sys, &probe.space);
    Ok(bad.map(|p| Witness { probe: probe.clone(), pullback: sys, projection: pb.f_h, subobject: p }))
}

pub fn proper_analysis(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem, bound: u32) -> Result<ProperAnalysis> {
    require_pnbd(f, mu, phi)?;
    check_bound(bound)?;
    if is_iso(f, mu, phi)? {
        return Ok(ProperAnalysis { verdict: Verdict::Holds, rung: Rung::Iso, gap: false });
    }
    let closed = closed_violation(f, mu, phi).is_none();
    let mut gap = false;
    // the shortcut covers embeddings only: a mono whose domain carries the
    // restricted system
    if f.dom().context().reflects_zero() && f.is_injective() && *mu == phi.initial_along(f)? {
        if is_closed(phi, f.image_of_top()) {
            return Ok(ProperAnalysis { verdict: Verdict::Holds, rung: Rung::ClosedEmbedding, gap: false });
        }
        gap = closed;
    }
    if !closed {
        let id = Probe { space: phi.clone(), h: Morphism::identity(phi.object()) };
        let w = check_probe(f, mu, &id)?.ok_or_else(|| {
            Error::Validation("pullback along the identity is closed although the morphism is not".into())
        })?;
        return Ok(ProperAnalysis { verdict: Verdict::Fails(Box::new(w)), rung: Rung::NotClosed, gap });
    }
    for probe in probes(phi, bound)? {
        if let Some(w) = check_probe(f, mu, &probe)? {
            return Ok(ProperAnalysis { verdict: Verdict::Fails(Box::new(w)), rung: Rung::Probe, gap });
        }
    }
    Ok(ProperAnalysis { verdict: Verdict::HoldsUpToBound(bound), rung: Rung::Probe, gap })
}

pub fn is_proper(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem, bound: u32) -> Result<Verdict> {
    Ok(proper_analysis(f, mu, phi, bound)?.verdict)
}

/// Properness of the diagonal `d_f: (X, μ) → (Kerp f, μ ×_φ μ)`.
pub fn is_separated(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem, bound: u32) -> Result<Verdict> {
    require_pnbd(f, mu, phi)?;
    check_bound(bound)?;
    if f.is_injective() {
        return Ok(Verdict::Holds);
    }
    let (kp, sys) = kernel_pair_space(f, mu)?;
    is_proper(&kp.diagonal, mu, &sys, bound)
}

pub fn is_perfect(f: &Morphism, mu: &PreNbdSystem, phi: &PreNbdSystem, bound: u32) -> Result<Verdict> {
    let p = is_proper(f, mu, phi, bound)?;
    let s = is_separated(f, mu, phi, bound)?;
    Ok(p.and(s))
}

fn terminal_map(space: &PreNbdSystem) -> Result<(Morphism, PreNbdSystem)> {
    let t = terminal_space(space.object().context());
    let f = Morphism::new(space.object().clone(), t.object().clone(), alloc::vec![0; space.object().size()])?;
    if !is_pnbd_morphism(&f, space, &t)? {
        return Err(Error::Precondition(
            "the map to the terminal space is not a preneighbourhood morphism (system is not grounded)".into(),
        ));
    }
    Ok((f, t))
}

/// Separatedness of the map to the terminal space `(1, ∇)`.
pub fn is_hausdorff(space: &PreNbdSystem, bound: u32) -> Result<Verdict> {
    let (f, t) = terminal_map(space)?;
    is_separated(&f, space, &t, bound)
}

/// Bounded probe: every projection `X × T → T` with `|T| ≤ bound` is closed.
pub fn is_compact(space: &PreNbdSystem, bound: u32) -> Result<Verdict> {
    let (f, t) = terminal_map(space)?;
    for probe in probes(&t, bound)? {
        if let Some(w) = check_probe(&f, space, &probe)? {
            return Ok(Verdict::Fails(Box::new(w)));
        }
    }
    Ok(Verdict::HoldsUpToBound(bound))
}

/// All flags of a morphism between two spaces.
#[derive(Clone, Debug)]
pub struct ClassifiedMorphism {
    pub pnbd: bool,
    pub continuous: bool,
    pub reflects_zero: bool,
    pub formally_surjective: bool,
    pub closed: bool,
    pub dense: bool,
    pub closed_embedding: Option<bool>,
    pub proper: Verdict,
    pub separated: Verdict,
    pub perfect: Verdict,
}

pub fn classify_morphism(
    f: &Morphism,
    mu: &PreNbdSystem,
    phi: &PreNbdSystem,
    bound: u32,
) -> Result<ClassifiedMorphism> {
    require_pnbd(f, mu, phi)?;
    let proper = is_proper(f, mu, phi, bound)?;
    let separated = is_separated(f, mu, phi, bound)?;
    Ok(ClassifiedMorphism {
        pnbd: true,
        continuous: is_continuous(f, mu, phi)?,
        reflects_zero: f.reflects_zero(),
        formally_surjective: f.is_formally_surjective(),
        closed: is_closed_morphism(f, mu, phi)?,
        dense: is_dense_morphism(f, mu, phi)?,
        closed_embedding: if f.is_injective() { Some(is_closed_embedding(f, phi)?) } else { None },
        perfect: proper.clone().and(separated.clone()),
        proper,
        separated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::Canonical;
    use alloc::vec;

    fn two() -> Obj {
        ContextObject::finset(&["a", "b"]).unwrap()
    }

    fn sierpinski() -> PreNbdSystem {
        PreNbdSystem::from_values(two(), vec![0, 3, 2, 3]).unwrap()
    }

    fn point_into(target: &Obj, label: &str) -> Morphism {
        let one = ContextObject::finset(&["a"]).unwrap();
        Morphism::new(one, target.clone(), vec![target.point(label).unwrap()]).unwrap()
    }

    fn discrete_point() -> PreNbdSystem {
        PreNbdSystem::canonical(&ContextObject::finset(&["a"]).unwrap(), Canonical::Discrete)
    }

    #[test]
    fn pnbd_examples() {
        let x = two();
        let id = Morphism::identity(&x);
        let up = PreNbdSystem::canonical(&x, Canonical::Discrete);
        let nabla = PreNbdSystem::canonical(&x, Canonical::Indiscrete);
        assert!(is_pnbd_morphism(&id, &up, &up).unwrap());
        assert!(is_pnbd_morphism(&id, &up, &nabla).unwrap());
        let r = pnbd_report(&id, &nabla, &up).unwrap();
        assert!(!r.definition && r.agree());
    }

    #[test]
    fn sierpinski_embeddings() {
        let s = sierpinski();
        let a = point_into(s.object(), "a");
        let b = point_into(s.object(), "b");
        let pt = discrete_point();
        assert!(is_closed_embedding(&a, &s).unwrap());
        assert!(!is_closed_embedding(&b, &s).unwrap());
        assert_eq!(is_proper(&a, &pt, &s, 2).unwrap(), Verdict::Holds);
        // The singleton's top is not closed, so "b" is closed as a morphism.
        assert!(is_closed_morphism(&b, &pt, &s).unwrap());
        let low = proper_analysis(&b, &pt, &s, 2).unwrap();
        assert_eq!((low.verdict, low.gap), (Verdict::HoldsUpToBound(2), true));
        let high = is_proper(&b, &pt, &s, 3).unwrap();
        assert_eq!(high.witness().unwrap().probe.space.object().size(), 3);
        assert!(!is_perfect(&b, &pt, &s, 3).unwrap().holds());
        assert!(!is_dense_morphism(&a, &pt, &s).unwrap());
        assert!(is_dense_morphism(&b, &pt, &s).unwrap());
        let fac = dense_closed_factorize(&b, &pt, &s).unwrap();
        assert_eq!(fac.m, 3);
    }

    #[test]
    fn hausdorff_examples() {
        let up = PreNbdSystem::canonical(&two(), Canonical::Discrete);
        assert!(!is_hausdorff(&up, 2).unwrap().holds());
        assert_eq!(is_hausdorff(&discrete_point(), 2).unwrap(), Verdict::Holds);
        let t = terminal_space(Context::FinSet);
        assert_eq!(is_hausdorff(&t, 2).unwrap(), Verdict::Holds);
        assert_eq!(is_compact(&discrete_point(), 2).unwrap(), Verdict::HoldsUpToBound(2));
    }

    #[test]
    fn identities_are_exact() {
        let s = sierpinski();
        let id = Morphism::identity(s.object());
        assert_eq!(is_proper(&id, &s, &s, 2).unwrap(), Verdict::Holds);
        assert_eq!(is_separated(&id, &s, &s, 2).unwrap(), Verdict::Holds);
        assert_eq!(is_perfect(&id, &s, &s, 2).unwrap(), Verdict::Holds);
    }

    #[test]
    fn probe_bound_is_capped() {
        let s = sierpinski();
        let id = Morphism::identity(s.object());
        assert!(is_proper(&id, &s, &s, 4).is_err());
    }
}
