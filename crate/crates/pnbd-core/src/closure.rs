//! The closure operator induced by a preneighbourhood system:
//! `cls(p) = ⋁{x ≠ top : every u ∈ μ(x) meets p}`.

use alloc::vec::Vec;

use crate::context::{product, same_object, Carrier, Morphism, Obj};
use crate::endomap::{same_lattice, EndoMap};
use crate::error::{Error, Result};
use crate::lattice::Elem;
use crate::system::{product_space_in, PreNbdSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Uses the generator: `x` qualifies iff `g(x) ∧ p ≠ σ`.
    Fast,
    /// Quantifies over every member of the filter `μ(x)`.
    Oracle,
}

pub fn closure(sys: &PreNbdSystem, p: Elem) -> Elem {
    let l = sys.object().lattice();
    let (bot, top) = (l.bottom(), l.top());
    let mut acc = bot;
    for x in l.elements() {
        if x != top && l.meet(sys.g(x), p) != bot {
            acc = l.join(acc, x);
        }
    }
    acc
}

pub fn closure_oracle(sys: &PreNbdSystem, p: Elem) -> Elem {
    let l = sys.object().lattice();
    let (bot, top) = (l.bottom(), l.top());
    let qualifying = l.elements().filter(|&x| {
        let f = sys.filter(x);
        x != top && l.elements().filter(|&u| f.contains(u)).all(|u| l.meet(u, p) != bot)
    });
    l.join_all(qualifying)
}

pub fn closure_with(sys: &PreNbdSystem, p: Elem, mode: Mode) -> Elem {
    match mode {
        Mode::Fast => closure(sys, p),
        Mode::Oracle => closure_oracle(sys, p),
    }
}

/// Closure of every element, indexed by element.
pub fn closure_table(sys: &PreNbdSystem) -> Vec<Elem> {
    let l = sys.object().lattice();
    l.elements().map(|p| closure(sys, p)).collect()
}

/// Closed elements, open elements and the closure table of a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub closure: Vec<Elem>,
    /// `mc(μ)`, the fixed points of the closure.
    pub closed: Vec<Elem>,
    /// `mo(μ)`: `x ∈ μ(x)`.
    pub open: Vec<Elem>,
    /// Join of the open elements below each element.
    pub interior: Vec<Elem>,
    /// Binary meets of closed elements are closed.
    pub closed_meet_closed: bool,
    pub top_closed: bool,
}

pub fn closed_open_sets(sys: &PreNbdSystem) -> ClosureReport {
    let l = sys.object().lattice();
    let closure = closure_table(sys);
    let closed: Vec<Elem> = l.elements().filter(|&p| closure[p as usize] == p).collect();
    let open: Vec<Elem> = l.elements().filter(|&x| sys.is_open(x)).collect();
    let interior = l.elements().map(|p| l.join_all(open.iter().copied().filter(|&o| l.leq(o, p)))).collect();
    let closed_meet_closed =
        closed.iter().all(|&a| closed.iter().all(|&b| closure[l.meet(a, b) as usize] == l.meet(a, b)));
    let top_closed = closure[l.top() as usize] == l.top();
    ClosureReport { closure, closed, open, interior, closed_meet_closed, top_closed }
}

pub fn is_closed(sys: &PreNbdSystem, p: Elem) -> bool {
    closure(sys, p) == p
}

pub fn closed_elements(sys: &PreNbdSystem) -> Vec<Elem> {
    let l = sys.object().lattice();
    l.elements().filter(|&p| is_closed(sys, p)).collect()
}

/// The star `{u : u ∧ p ≠ σ}` and the join of its non-top members.
pub fn star(sys: &PreNbdSystem, p: Elem) -> (Vec<Elem>, Elem) {
    let l = sys.object().lattice();
    let members: Vec<Elem> = l.elements().filter(|&u| l.meet(u, p) != l.bottom()).collect();
    let j = l.join_all(members.iter().copied().filter(|&u| u != l.top()));
    (members, j)
}

/// `cls(p) = top`.
pub fn is_dense_sub(sys: &PreNbdSystem, p: Elem) -> bool {
    closure(sys, p) == sys.object().lattice().top()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GmextVariant {
    /// `cls(p, μ∘c) = ⋁{x ∈ Fix(c)≠1 : x ≤ cls(p, μ)} ∨ d_c`.
    Compose,
    /// `cls(p, Φ(c)) = ⋁{x ∈ Fix(c)≠1 : x ∧ p ≠ σ} ∨ d_c`.
    Phi,
}

/// Right-hand side of the closure formulas for `μ∘c` and `Φ(c)`.
pub fn gmext_closure_formula(mu: &PreNbdSystem, c: &EndoMap, p: Elem, variant: GmextVariant) -> Result<Elem> {
    same_lattice(mu.object().lattice(), c.lattice())?;
    c.validate_pre()?;
    let l = mu.object().lattice();
    let (bot, top) = (l.bottom(), l.top());
    let bound = match variant {
        GmextVariant::Compose => Some(closure(mu, p)),
        GmextVariant::Phi => None,
    };
    let fix = c.fixed_points().into_iter().filter(|&x| x != top).filter(|&x| match bound {
        Some(b) => l.leq(x, b),
        None => l.meet(x, p) != bot,
    });
    Ok(l.join(l.join_all(fix), c.d_c()))
}

/// `mc(Φ(c)) = {p : c(x) ∧ p ≠ σ ⇒ x ≤ p}`.
pub fn closed_formula_phi(c: &EndoMap) -> Vec<Elem> {
    let l = c.lattice();
    l.elements().filter(|&p| l.elements().all(|x| l.meet(c.apply(x), p) == l.bottom() || l.leq(x, p))).collect()
}

/// `mc(μ∘c) = {p : x ≠ top, (c(x) = top or c(x) = x ≤ cls(p, μ)) ⇒ x ≤ p}`.
pub fn closed_formula_compose(mu: &PreNbdSystem, c: &EndoMap) -> Vec<Elem> {
    let l = c.lattice();
    let top = l.top();
    l.elements()
        .filter(|&p| {
            let cp = closure(mu, p);
            l.elements().filter(|&x| x != top).all(|x| {
                let cx = c.apply(x);
                let premise = cx == top || (cx == x && l.leq(x, cp));
                !premise || l.leq(x, p)
            })
        })
        .collect()
}

/// Whether `x ≤ cls(p) ⟺ p* ∉ μ(x)` holds for this pair.
pub fn pseudocomplement_characterization(sys: &PreNbdSystem, x: Elem, p: Elem) -> Result<bool> {
    let l = sys.object().lattice();
    let (bot, top) = (l.bottom(), l.top());
    if x == bot || x == top || p == bot || p == top {
        return Err(Error::Precondition("need σ ≠ x ≠ top and σ ≠ p ≠ top".into()));
    }
    let ps = l.pseudocomplement(p).ok_or_else(|| Error::Unsupported("lattice is not pseudocomplemented".into()))?;
    let lhs = l.leq(x, closure(sys, p));
    let rhs = !sys.filter(x).contains(ps);
    Ok(lhs == rhs)
}

/// `μ̂`: `x ↦ ⋀{y* : y ∈ mc(μ), x ≤ y*}`. Fails if that meet is not itself one
/// of the `y*`, since the union of the principal filters is then not a filter.
pub fn hat_system(sys: &PreNbdSystem) -> Result<PreNbdSystem> {
    hat_from_closed(sys, &closed_elements(sys))
}

/// `μ̂` built from an explicit set of closed subobjects.
pub fn hat_from_closed(sys: &PreNbdSystem, closed: &[Elem]) -> Result<PreNbdSystem> {
    let l = sys.object().lattice();
    if !l.is_pseudocomplemented() {
        return Err(Error::Unsupported("hat system needs a pseudocomplemented lattice".into()));
    }
    let stars: Vec<Elem> = closed.iter().map(|&y| l.pseudocomplement(y).unwrap()).collect();
    let mut values = Vec::with_capacity(l.len());
    for x in l.elements() {
        let above: Vec<Elem> = stars.iter().copied().filter(|&s| l.leq(x, s)).collect();
        let m = l.meet_all(above.iter().copied());
        if !above.is_empty() && !above.contains(&m) {
            return Err(Error::Unsupported(alloc::format!("hat system at {:?} is not a principal filter", l.label(x))));
        }
        values.push(m);
    }
    PreNbdSystem::from_values(sys.object().clone(), values)
}

/// The factor closures behind the product formula: for every non-empty
/// `J ⊆ I`, `p_J⁻¹(cls(p_J[p], μ_J))`, met together.
pub fn product_closure_rhs(spaces: &[PreNbdSystem], product_obj: &Obj, p: Elem) -> Result<Elem> {
    if spaces.is_empty() || spaces.len() > 3 {
        return Err(Error::Precondition("product closure needs one to three factors".into()));
    }
    if spaces.iter().any(|s| s.object().size() == 0) {
        return Err(Error::Precondition("empty factor: projections are not surjective".into()));
    }
    let ctx = spaces[0].object().context();
    let objs: Vec<Obj> = spaces.iter().map(|s| s.object().clone()).collect();
    let (full, proj) = product(ctx, &objs)?;
    if !same_object(&full, product_obj) {
        return Err(Error::Domain("element does not live on the product of these factors".into()));
    }
    let l = full.lattice();
    let n = spaces.len();
    let mut acc = l.top();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sub: Vec<PreNbdSystem> = idx.iter().map(|&i| spaces[i].clone()).collect();
        let (sys_j, proj_j) = product_space_in(ctx, &sub)?;
        let p_j = projection_onto(&full, &proj, &idx, sys_j.object(), &proj_j)?;
        acc = l.meet(acc, p_j.preimage(closure(&sys_j, p_j.image(p))));
    }
    Ok(acc)
}

/// Morphism `∏_I → ∏_J` commuting with the projections.
fn projection_onto(full: &Obj, proj: &[Morphism], idx: &[usize], target: &Obj, tproj: &[Morphism]) -> Result<Morphism> {
    let map = (0..full.size())
        .map(|s| {
            (0..target.size())
                .find(|&t| idx.iter().zip(tproj).all(|(&i, q)| q.at(t) == proj[i].at(s)))
                .ok_or_else(|| Error::Domain("no matching point in the partial product".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Morphism::new(full.clone(), target.clone(), map)
}

/// Pointwise description: the points `x` whose smallest subobject `⟨x⟩`
/// has a generator meeting `p` (a singleton for sets, the cyclic subgroup
/// for groups). Returned as a carrier mask.
pub fn pointwise_closure(sys: &PreNbdSystem, p: Elem) -> u64 {
    let obj = sys.object();
    let l = obj.lattice();
    let mut out = 0u64;
    for x in 0..obj.size() {
        let cyclic = match obj.carrier() {
            Carrier::Set(_) => 1u64 << x,
            Carrier::Group(g) => g.generate(1 << x),
        };
        let e = obj.elem(cyclic).expect("cyclic subobject");
        if l.meet(sys.g(e), p) != l.bottom() {
            out |= 1 << x;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::ContextObject;
    use crate::system::Canonical;
    use alloc::vec;

    fn two() -> Obj {
        ContextObject::finset(&["a", "b"]).unwrap()
    }

    #[test]
    fn indiscrete_and_discrete_on_two_points() {
        let x = two();
        let nabla = PreNbdSystem::canonical(&x, Canonical::Indiscrete);
        assert_eq!(x.label(closure(&nabla, x.parse("a").unwrap())), "ab");
        assert_eq!(closure(&nabla, 0), 0);
        assert_eq!(closed_open_sets(&nabla).closed, vec![0, 3]);
        let up = PreNbdSystem::canonical(&x, Canonical::Discrete);
        assert_eq!(closed_open_sets(&up).closed, vec![0, 1, 2, 3]);
        assert!(is_dense_sub(&up, 3));
        assert!(is_dense_sub(&nabla, 1));
    }

    #[test]
    fn sierpinski_like_space() {
        let x = two();
        let s = PreNbdSystem::from_values(x.clone(), vec![0, 3, 2, 3]).unwrap();
        assert_eq!(x.label(closure(&s, x.parse("b").unwrap())), "ab");
        assert_eq!(x.label(closure(&s, x.parse("a").unwrap())), "a");
        for p in x.lattice().elements() {
            assert_eq!(closure(&s, p), closure_oracle(&s, p));
        }
    }

    #[test]
    fn cyclic_group_top_is_not_closed() {
        let z4 = ContextObject::builtin_group("Z4").unwrap();
        let up = PreNbdSystem::canonical(&z4, Canonical::Discrete);
        let r = closed_open_sets(&up);
        assert_eq!(z4.label(r.closure[z4.lattice().top() as usize]), "{0,2}");
        assert!(!r.top_closed);
        let labels: Vec<_> = r.closed.iter().map(|&e| z4.label(e)).collect();
        assert_eq!(labels, ["{0}", "{0,2}"]);
        let (_, j) = star(&up, z4.parse("{0,2}").unwrap());
        assert_eq!(z4.label(j), "{0,2}");
    }

    #[test]
    fn hat_of_canonical_systems() {
        let x = two();
        let up = PreNbdSystem::canonical(&x, Canonical::Discrete);
        assert_eq!(hat_system(&up).unwrap(), up);
        let nabla = PreNbdSystem::canonical(&x, Canonical::Indiscrete);
        assert_eq!(hat_system(&nabla).unwrap(), nabla);
    }

    #[test]
    fn pseudocomplement_precondition() {
        let x = two();
        let up = PreNbdSystem::canonical(&x, Canonical::Discrete);
        assert!(pseudocomplement_characterization(&up, 3, 1).is_err());
        assert!(pseudocomplement_characterization(&up, 1, 2).unwrap());
    }

    #[test]
    fn diagonal_of_discrete_square() {
        let x = two();
        let up = PreNbdSystem::canonical(&x, Canonical::Discrete);
        let (sq, _) = crate::system::product_space(&[up.clone(), up.clone()]).unwrap();
        let o = sq.object();
        let d = o.parse("a|a,b|b").unwrap();
        assert_eq!(closure(&sq, d), o.lattice().top());
        assert_eq!(product_closure_rhs(&[up.clone(), up], o, d).unwrap(), o.lattice().top());
    }
}
