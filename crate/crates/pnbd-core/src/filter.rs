//! Principal filters and their transport along morphisms.

use alloc::sync::Arc;

use crate::context::Morphism;
use crate::endomap::same_lattice;
use crate::error::{Error, Result};
use crate::lattice::{Elem, FiniteLattice};

/// The filter `↑generator`. Every filter of a finite lattice has this form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filter {
    lattice: Arc<FiniteLattice>,
    generator: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    /// Smallest filter containing both.
    Join,
    Intersect,
}

impl Filter {
    pub fn principal(lattice: Arc<FiniteLattice>, generator: Elem) -> Result<Self> {
        if generator as usize >= lattice.len() {
            return Err(Error::Domain("filter generator is not a lattice element".into()));
        }
        Ok(Filter { lattice, generator })
    }

    /// `↑σ`, the improper filter.
    pub fn whole(lattice: Arc<FiniteLattice>) -> Self {
        let generator = lattice.bottom();
        Filter { lattice, generator }
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.lattice.leq(self.generator, x)
    }

    pub fn is_proper(&self) -> bool {
        self.generator != self.lattice.bottom()
    }

    /// Set inclusion `self ⊆ other`.
    pub fn is_subset(&self, other: &Filter) -> bool {
        self.lattice.leq(other.generator, self.generator)
    }

    pub fn combine(mode: Combine, a: &Filter, b: &Filter) -> Result<Filter> {
        same_lattice(&a.lattice, &b.lattice)?;
        let l = &a.lattice;
        let generator = match mode {
            Combine::Join => l.meet(a.generator, b.generator),
            Combine::Intersect => l.join(a.generator, b.generator),
        };
        Ok(Filter { lattice: a.lattice.clone(), generator })
    }

    /// A prime filter containing this one, if any.
    pub fn prime_extension(&self) -> Option<Filter> {
        self.lattice
            .prime_extension(self.generator)
            .map(|generator| Filter { lattice: self.lattice.clone(), generator })
    }
}

/// `{y : f⁻¹y ∈ A}`, found by scanning the codomain lattice.
pub fn imgfil(f: &Morphism, a: &Filter) -> Result<Filter> {
    same_lattice(f.dom().lattice(), &a.lattice)?;
    let cod = f.cod().lattice();
    let generator = cod.meet_all(cod.elements().filter(|&y| a.contains(f.preimage(y))));
    Ok(Filter { lattice: cod.clone(), generator })
}

/// `{x : ∃b ∈ B, f⁻¹b ≤ x}`.
pub fn invfil(f: &Morphism, b: &Filter) -> Result<Filter> {
    same_lattice(f.cod().lattice(), &b.lattice)?;
    Ok(Filter { lattice: f.dom().lattice().clone(), generator: f.preimage(b.generator) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::ContextObject;

    #[test]
    fn combine_on_two_points() {
        let l = Arc::new(FiniteLattice::powerset(&["a", "b"]).unwrap());
        let a = Filter::principal(l.clone(), 1).unwrap();
        let b = Filter::principal(l.clone(), 2).unwrap();
        assert_eq!(Filter::combine(Combine::Join, &a, &b).unwrap().generator(), 0);
        assert_eq!(Filter::combine(Combine::Intersect, &a, &b).unwrap().generator(), 3);
        assert_eq!(Filter::combine(Combine::Join, &a, &a).unwrap(), a);
        let other = Arc::new(FiniteLattice::powerset(&["a"]).unwrap());
        assert!(Filter::combine(Combine::Join, &a, &Filter::whole(other)).is_err());
    }

    #[test]
    fn transport_along_constant_map() {
        let x = ContextObject::finset(&["a", "b"]).unwrap();
        let y = ContextObject::finset(&["u", "v"]).unwrap();
        let f = Morphism::new(x.clone(), y.clone(), alloc::vec![0, 0]).unwrap();
        let a = Filter::principal(x.lattice().clone(), x.parse("a").unwrap()).unwrap();
        assert_eq!(y.label(imgfil(&f, &a).unwrap().generator()), "u");
        let u = Filter::principal(y.lattice().clone(), y.parse("u").unwrap()).unwrap();
        assert_eq!(x.label(invfil(&f, &u).unwrap().generator()), "ab");
        let whole = Filter::whole(x.lattice().clone());
        assert_eq!(imgfil(&f, &whole).unwrap().generator(), 0);
        assert_eq!(invfil(&f, &Filter::whole(y.lattice().clone())).unwrap().generator(), 0);
    }
}
