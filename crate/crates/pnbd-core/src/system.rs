//! Preneighbourhood systems stored as generator maps `g(x) = min μ(x)`.

use alloc::format;
use alloc::vec::Vec;

use crate::context::{kernel_pair, product, pullback, same_object, ContextObject, Morphism, Obj, Pullback};
use crate::endomap::{same_lattice, EndoMap};
use crate::error::{Error, Result};
use crate::filter::Filter;
use crate::lattice::Elem;

/// A preneighbourhood system on an object; the pair is a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreNbdSystem {
    object: Obj,
    gen: EndoMap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Canonical {
    /// `∇`: `g(σ) = σ`, everything else goes to the top.
    Indiscrete,
    /// `↑`: `g` is the identity.
    Discrete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SystemKind {
    pub is_pre: bool,
    pub is_weak: bool,
    pub is_nbd: bool,
    pub grounded: bool,
}

/// Result of the infimum-meet condition: the literal quantification over
/// `μ(x)` and its reduction to the generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InfMeet {
    pub literal: bool,
    pub reduced: bool,
}

impl PreNbdSystem {
    pub fn new(object: Obj, gen: EndoMap) -> Result<Self> {
        same_lattice(object.lattice(), gen.lattice())?;
        gen.validate_pre()?;
        Ok(PreNbdSystem { object, gen })
    }

    pub fn from_values(object: Obj, values: Vec<Elem>) -> Result<Self> {
        let gen = EndoMap::new(object.lattice().clone(), values)?;
        PreNbdSystem::new(object, gen)
    }

    fn from_fn(object: &Obj, f: impl Fn(Elem) -> Elem) -> Result<Self> {
        PreNbdSystem::new(object.clone(), EndoMap::from_fn(object.lattice().clone(), f))
    }

    pub fn canonical(object: &Obj, kind: Canonical) -> Self {
        let l = object.lattice().clone();
        let gen = match kind {
            Canonical::Discrete => EndoMap::identity(l),
            Canonical::Indiscrete => {
                let (bot, top) = (l.bottom(), l.top());
                EndoMap::from_fn(l, |x| if x == bot { bot } else { top })
            }
        };
        PreNbdSystem { object: object.clone(), gen }
    }

    /// `ν`: each subgroup goes to its normal closure.
    pub fn nu(object: &Obj) -> Result<Self> {
        let g = object.as_group()?;
        PreNbdSystem::from_fn(object, |x| object.elem(g.normal_closure(object.mask(x))).unwrap())
    }

    /// `Φ(c)`: the system whose generators are `c`.
    pub fn phi(object: &Obj, c: &EndoMap) -> Result<Self> {
        PreNbdSystem::new(object.clone(), c.clone())
    }

    /// `Ψ(μ)`: the generator map.
    pub fn psi(&self) -> EndoMap {
        self.gen.clone()
    }

    pub fn object(&self) -> &Obj {
        &self.object
    }

    pub fn generators(&self) -> &EndoMap {
        &self.gen
    }

    #[inline]
    pub fn g(&self, x: Elem) -> Elem {
        self.gen.apply(x)
    }

    /// `μ(x) = ↑g(x)`.
    pub fn filter(&self, x: Elem) -> Filter {
        Filter::principal(self.object.lattice().clone(), self.g(x)).unwrap()
    }

    /// `x` is open when `x ∈ μ(x)`.
    pub fn is_open(&self, x: Elem) -> bool {
        self.object.lattice().leq(self.g(x), x)
    }

    pub fn classify(&self) -> SystemKind {
        let weak = self.gen.is_idempotent();
        let grounded = self.gen.is_grounded();
        SystemKind {
            is_pre: true,
            is_weak: weak,
            is_nbd: weak && grounded && self.gen.preserves_binary_joins(),
            grounded,
        }
    }

    fn check_same(&self, other: &PreNbdSystem) -> Result<()> {
        if same_object(&self.object, &other.object) {
            Ok(())
        } else {
            Err(Error::Domain("systems live on different objects".into()))
        }
    }

    /// `μ ≤ ν` iff `μ(x) ⊆ ν(x)` for all `x`, i.e. `g_μ ≥ g_ν` pointwise.
    pub fn leq(&self, other: &PreNbdSystem) -> Result<bool> {
        self.check_same(other)?;
        Ok(other.gen.pointwise_leq(&self.gen))
    }

    /// Pointwise intersection of filters.
    pub fn meet(&self, other: &PreNbdSystem) -> Result<PreNbdSystem> {
        self.check_same(other)?;
        let l = self.object.lattice();
        PreNbdSystem::from_fn(&self.object, |x| l.join(self.g(x), other.g(x)))
    }

    /// Pointwise join of filters.
    pub fn join(&self, other: &PreNbdSystem) -> Result<PreNbdSystem> {
        self.check_same(other)?;
        let l = self.object.lattice();
        PreNbdSystem::from_fn(&self.object, |x| l.meet(self.g(x), other.g(x)))
    }

    /// `μ ∘ c`: generators `x ↦ g_μ(c(x))`.
    pub fn compose_endomap(&self, c: &EndoMap) -> Result<PreNbdSystem> {
        same_lattice(self.object.lattice(), c.lattice())?;
        c.validate_pre()?;
        PreNbdSystem::from_fn(&self.object, |x| self.g(c.apply(x)))
    }

    /// Smallest system on `f`'s domain making `f` a preneighbourhood
    /// morphism into `(Y, self)`: `x ↦ f⁻¹(g(f[x]))`.
    pub fn initial_along(&self, f: &Morphism) -> Result<PreNbdSystem> {
        if !same_object(f.cod(), &self.object) {
            return Err(Error::Domain("morphism codomain is not the system's object".into()));
        }
        PreNbdSystem::from_fn(f.dom(), |x| f.preimage(self.g(f.image(x))))
    }

    /// `μ|M` on the object carried by `m`, together with the embedding.
    pub fn restrict(&self, m: Elem) -> Result<(PreNbdSystem, Morphism)> {
        let emb = self.object.subobject(m)?;
        Ok((self.initial_along(&emb)?, emb))
    }

    /// `⋀_{x ≠ top, c(x)∧p = σ} (∃u ∈ μ(x): u∧p = σ)` for all `p`.
    pub fn infmeet_condition(&self, c: &EndoMap) -> Result<InfMeet> {
        same_lattice(self.object.lattice(), c.lattice())?;
        let phi_c = PreNbdSystem::phi(&self.object, c)?;
        if !self.leq(&phi_c)? {
            return Err(Error::Precondition("infmeet condition needs μ ≤ Φ(c)".into()));
        }
        let l = self.object.lattice();
        let (bot, top) = (l.bottom(), l.top());
        let mut literal = true;
        let mut reduced = true;
        for p in l.elements() {
            for x in l.elements().filter(|&x| x != top) {
                if l.meet(c.apply(x), p) != bot {
                    continue;
                }
                let f = self.filter(x);
                literal &= l.elements().any(|u| f.contains(u) && l.meet(u, p) == bot);
                reduced &= l.meet(self.g(x), p) == bot;
            }
        }
        Ok(InfMeet { literal, reduced })
    }

    pub fn describe(&self) -> alloc::string::String {
        let l = self.object.lattice();
        let parts: Vec<_> = l.elements().map(|x| format!("{:?}->{:?}", l.label(x), l.label(self.g(x)))).collect();
        format!("{} [{}]", self.object.describe(), parts.join(", "))
    }
}

/// System on a pullback making both projections preneighbourhood morphisms:
/// `W ↦ h_f⁻¹(g_μ(h_f[W])) ∧ f_h⁻¹(g_τ(f_h[W]))`.
pub fn pullback_system(pb: &Pullback, mu: &PreNbdSystem, tau: &PreNbdSystem) -> Result<PreNbdSystem> {
    if !same_object(pb.h_f.cod(), &mu.object) || !same_object(pb.f_h.cod(), &tau.object) {
        return Err(Error::Domain("pullback system factors do not match the projections".into()));
    }
    let l = pb.object.lattice();
    PreNbdSystem::from_fn(&pb.object, |w| {
        l.meet(pb.h_f.preimage(mu.g(pb.h_f.image(w))), pb.f_h.preimage(tau.g(pb.f_h.image(w))))
    })
}

/// Pullback of `f: (X,μ) → Y` along `h: (T,τ) → Y`, with its system.
pub fn pullback_space(
    f: &Morphism,
    h: &Morphism,
    mu: &PreNbdSystem,
    tau: &PreNbdSystem,
) -> Result<(Pullback, PreNbdSystem)> {
    let pb = pullback(f, h)?;
    let sys = pullback_system(&pb, mu, tau)?;
    Ok((pb, sys))
}

/// Product space with the direct formula `W ↦ ⋀_i p_i⁻¹(g_i(p_i[W]))`.
/// The empty product is the terminal object with `∇`.
pub fn product_space(spaces: &[PreNbdSystem]) -> Result<(PreNbdSystem, Vec<Morphism>)> {
    let ctx = match spaces.first() {
        Some(s) => s.object.context(),
        None => return Err(Error::Precondition("empty product needs a context; use product_space_in".into())),
    };
    product_space_in(ctx, spaces)
}

pub fn product_space_in(
    ctx: crate::context::Context,
    spaces: &[PreNbdSystem],
) -> Result<(PreNbdSystem, Vec<Morphism>)> {
    let objs: Vec<Obj> = spaces.iter().map(|s| s.object.clone()).collect();
    let (obj, proj) = product(ctx, &objs)?;
    if spaces.is_empty() {
        return Ok((PreNbdSystem::canonical(&obj, Canonical::Indiscrete), proj));
    }
    let l = obj.lattice().clone();
    let sys = PreNbdSystem::from_fn(&obj, |w| {
        l.meet_all(spaces.iter().zip(&proj).map(|(s, p)| p.preimage(s.g(p.image(w)))))
    })?;
    Ok((sys, proj))
}

/// Binary product as the pullback over the terminal space.
pub fn product_via_terminal(a: &PreNbdSystem, b: &PreNbdSystem) -> Result<(Pullback, PreNbdSystem)> {
    let (fa, fb) = (a.object.to_terminal(), b.object.to_terminal());
    let fb = Morphism::new(b.object.clone(), fa.cod().clone(), fb.map().to_vec())?;
    pullback_space(&fa, &fb, a, b)
}

/// Kernel pair of `f` with the system `μ ×_φ μ`, plus the diagonal.
pub fn kernel_pair_space(f: &Morphism, mu: &PreNbdSystem) -> Result<(crate::context::KernelPair, PreNbdSystem)> {
    let kp = kernel_pair(f)?;
    let pb = Pullback { object: kp.object.clone(), h_f: kp.f1.clone(), f_h: kp.f2.clone() };
    let sys = pullback_system(&pb, mu, mu)?;
    Ok((kp, sys))
}

/// The terminal space `(1, ∇)` of a context.
pub fn terminal_space(ctx: crate::context::Context) -> PreNbdSystem {
    PreNbdSystem::canonical(&ContextObject::terminal(ctx), Canonical::Indiscrete)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endomap::enumerate_endomaps;
    use alloc::vec;

    fn two() -> Obj {
        ContextObject::finset(&["a", "b"]).unwrap()
    }

    #[test]
    fn classification_examples() {
        let x = two();
        let k = PreNbdSystem::canonical(&x, Canonical::Discrete).classify();
        assert!(k.is_weak && k.is_nbd);
        let s = PreNbdSystem::from_values(x.clone(), vec![0, 3, 2, 3]).unwrap().classify();
        assert!(s.is_nbd);
        let s = PreNbdSystem::from_values(x.clone(), vec![1, 1, 3, 3]).unwrap().classify();
        assert!(s.is_weak && !s.is_nbd && !s.grounded);
        assert!(PreNbdSystem::from_values(x, vec![0, 0, 2, 3]).is_err());
    }

    #[test]
    fn order_and_lattice_operations() {
        let x = two();
        let nabla = PreNbdSystem::canonical(&x, Canonical::Indiscrete);
        let up = PreNbdSystem::canonical(&x, Canonical::Discrete);
        assert!(nabla.leq(&up).unwrap());
        assert!(!up.leq(&nabla).unwrap());
        assert_eq!(nabla.join(&up).unwrap(), up);
        assert_eq!(nabla.meet(&up).unwrap(), nabla);
        assert_eq!(up.meet(&up).unwrap(), up);
    }

    #[test]
    fn phi_psi_round_trip() {
        let x = two();
        for c in enumerate_endomaps(x.lattice(), false, 100).unwrap() {
            assert_eq!(PreNbdSystem::phi(&x, &c).unwrap().psi(), c);
        }
    }

    #[test]
    fn composition_with_endomaps() {
        let x = two();
        let nabla = PreNbdSystem::canonical(&x, Canonical::Indiscrete);
        let c = EndoMap::new(x.lattice().clone(), vec![0, 3, 2, 3]).unwrap();
        let comp = nabla.compose_endomap(&c).unwrap();
        assert_eq!(comp.g(1), 3);
        let up = PreNbdSystem::canonical(&x, Canonical::Discrete);
        assert_eq!(up.compose_endomap(&c).unwrap(), PreNbdSystem::phi(&x, &c).unwrap());
        assert_eq!(nabla.compose_endomap(&EndoMap::identity(x.lattice().clone())).unwrap(), nabla);
    }

    #[test]
    fn restriction_of_indiscrete_to_a_point() {
        let x = two();
        let nabla = PreNbdSystem::canonical(&x, Canonical::Indiscrete);
        let (r, emb) = nabla.restrict(x.parse("a").unwrap()).unwrap();
        assert_eq!(emb.dom().size(), 1);
        assert_eq!(r.g(1), 1);
        let (r, _) = nabla.restrict(x.lattice().top()).unwrap();
        assert_eq!(r.generators().values(), nabla.generators().values());
    }

    #[test]
    fn box_hull_product() {
        let x = two();
        let y = ContextObject::finset(&["u", "v"]).unwrap();
        let (p, _) = product_space(&[
            PreNbdSystem::canonical(&x, Canonical::Discrete),
            PreNbdSystem::canonical(&y, Canonical::Discrete),
        ])
        .unwrap();
        let o = p.object();
        let w = o.parse("a|u,b|v").unwrap();
        assert_eq!(p.g(w), o.lattice().top());
        let w = o.parse("a|u,a|v").unwrap();
        assert_eq!(p.g(w), w);
    }

    #[test]
    fn nu_on_groups() {
        let z4 = ContextObject::builtin_group("Z4").unwrap();
        let nu = PreNbdSystem::nu(&z4).unwrap();
        assert_eq!(nu, PreNbdSystem::canonical(&z4, Canonical::Discrete));
        let s3 = ContextObject::builtin_group("S3").unwrap();
        let nu = PreNbdSystem::nu(&s3).unwrap();
        let t = s3.parse("{e,(12)}").unwrap();
        assert_eq!(nu.g(t), s3.lattice().top());
        assert!(nu.classify().is_nbd);
    }

    #[test]
    fn infmeet_condition_can_fail() {
        // ∇ ≤ Φ(id), but Φ(id)'s generator at "a" misses "b" while ∇'s does not
        let x = two();
        let nabla = PreNbdSystem::canonical(&x, Canonical::Indiscrete);
        let id = EndoMap::identity(x.lattice().clone());
        assert_eq!(nabla.infmeet_condition(&id).unwrap(), InfMeet { literal: false, reduced: false });
        let up = PreNbdSystem::canonical(&x, Canonical::Discrete);
        assert_eq!(up.infmeet_condition(&id).unwrap(), InfMeet { literal: true, reduced: true });
        let c = EndoMap::new(x.lattice().clone(), vec![0, 3, 2, 3]).unwrap();
        assert!(up.infmeet_condition(&c).is_err());
    }
}
