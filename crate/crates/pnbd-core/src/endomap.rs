//! Endomaps of a finite lattice and the monoid of monotone extensional maps.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{Elem, FiniteLattice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoMap {
    lattice: Arc<FiniteLattice>,
    values: Vec<Elem>,
}

/// Order-theoretic profile of a monotone extensional endomap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub idempotent: bool,
    /// Preserves binary joins.
    pub join_preserving: bool,
    pub grounded: bool,
    pub fixed_points: Vec<Elem>,
    /// Join of the non-top `x` with `c(x) = top`.
    pub d_c: Elem,
    /// `d_c` is the top, i.e. the non-trivial `c`-dense elements are weakly cofinal.
    pub weakly_cofinal_dense: bool,
}

impl EndoMap {
    pub fn new(lattice: Arc<FiniteLattice>, values: Vec<Elem>) -> Result<Self> {
        if values.len() != lattice.len() {
            return Err(Error::Validation(format!(
                "endomap has {} values for a lattice of {} elements",
                values.len(),
                lattice.len()
            )));
        }
        if let Some(&v) = values.iter().find(|&&v| v as usize >= lattice.len()) {
            return Err(Error::Validation(format!("value index {v} is not a lattice element")));
        }
        Ok(EndoMap { lattice, values })
    }

    pub fn identity(lattice: Arc<FiniteLattice>) -> Self {
        let values = lattice.elements().collect();
        EndoMap { lattice, values }
    }

    pub fn from_fn(lattice: Arc<FiniteLattice>, f: impl Fn(Elem) -> Elem) -> Self {
        let values = lattice.elements().map(f).collect();
        EndoMap { lattice, values }
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.values[x as usize]
    }

    /// First pair `x ≤ y` (along a cover) with `c(x) ≰ c(y)`.
    pub fn monotonicity_violation(&self) -> Option<(Elem, Elem)> {
        let l = &*self.lattice;
        for x in l.elements() {
            for y in l.covers(x) {
                if !l.leq(self.apply(x), self.apply(y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn extensionality_violation(&self) -> Option<Elem> {
        self.lattice.elements().find(|&x| !self.lattice.leq(x, self.apply(x)))
    }

    /// Checks monotone and extensional, naming the failing element(s).
    pub fn validate_pre(&self) -> Result<()> {
        let l = &*self.lattice;
        if let Some(x) = self.extensionality_violation() {
            return Err(Error::Validation(format!(
                "not extensional at {:?}: image {:?} is not above it",
                l.label(x),
                l.label(self.apply(x))
            )));
        }
        if let Some((x, y)) = self.monotonicity_violation() {
            return Err(Error::Validation(format!(
                "not monotone at {:?} <= {:?}: images {:?}, {:?}",
                l.label(x),
                l.label(y),
                l.label(self.apply(x)),
                l.label(self.apply(y))
            )));
        }
        Ok(())
    }

    pub fn is_grounded(&self) -> bool {
        self.apply(self.lattice.bottom()) == self.lattice.bottom()
    }

    pub fn is_idempotent(&self) -> bool {
        self.values.iter().all(|&v| self.apply(v) == v)
    }

    /// `c(x ∨ y) = c(x) ∨ c(y)` for all pairs.
    pub fn preserves_binary_joins(&self) -> bool {
        let l = &*self.lattice;
        if l.is_powerset() {
            // In a Boolean lattice this is equivalent to every non-empty x
            // being sent to the join of the images of its atoms.
            return l.elements().filter(|&x| x != 0).all(|x| {
                let mut acc = 0;
                let mut rest = x;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    acc |= self.apply(bit);
                    rest &= rest - 1;
                }
                acc == self.apply(x)
            });
        }
        l.elements().all(|x| l.elements().all(|y| self.apply(l.join(x, y)) == l.join(self.apply(x), self.apply(y))))
    }

    pub fn fixed_points(&self) -> Vec<Elem> {
        self.lattice.elements().filter(|&x| self.apply(x) == x).collect()
    }

    pub fn d_c(&self) -> Elem {
        let l = &*self.lattice;
        let top = l.top();
        l.join_all(l.elements().filter(|&x| x != top && self.apply(x) == top))
    }

    pub fn profile(&self) -> Result<Profile> {
        self.validate_pre()?;
        let d_c = self.d_c();
        Ok(Profile {
            idempotent: self.is_idempotent(),
            join_preserving: self.preserves_binary_joins(),
            grounded: self.is_grounded(),
            fixed_points: self.fixed_points(),
            d_c,
            weakly_cofinal_dense: d_c == self.lattice.top(),
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &EndoMap) -> Result<EndoMap> {
        same_lattice(&self.lattice, &other.lattice)?;
        Ok(EndoMap::from_fn(self.lattice.clone(), |x| self.apply(other.apply(x))))
    }

    /// Pointwise order `self ≤ other`.
    pub fn pointwise_leq(&self, other: &EndoMap) -> bool {
        self.values.iter().zip(&other.values).all(|(&a, &b)| self.lattice.leq(a, b))
    }
}

pub(crate) fn same_lattice(a: &Arc<FiniteLattice>, b: &Arc<FiniteLattice>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::Domain("arguments live on different lattices".into()))
    }
}

/// Visits every monotone extensional endomap of `lat` (grounded only, if
/// requested) in lexicographic order of the value vector. The visitor returns
/// `false` to stop early. Returns the number of maps visited.
pub fn for_each_endomap(lat: &FiniteLattice, grounded: bool, mut visit: impl FnMut(&[Elem]) -> bool) -> u64 {
    let n = lat.len();
    let lower: Vec<Vec<Elem>> = {
        let mut lower = alloc::vec![Vec::new(); n];
        for x in lat.elements() {
            for y in lat.covers(x) {
                lower[y as usize].push(x);
            }
        }
        lower
    };
    let above: Vec<Vec<Elem>> = lat.elements().map(|x| lat.elements().filter(|&v| lat.leq(x, v)).collect()).collect();
    let mut values = alloc::vec![0 as Elem; n];
    let mut count = 0u64;
    let mut stop = false;
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        lat: &FiniteLattice,
        grounded: bool,
        lower: &[Vec<Elem>],
        above: &[Vec<Elem>],
        values: &mut [Elem],
        count: &mut u64,
        stop: &mut bool,
        visit: &mut dyn FnMut(&[Elem]) -> bool,
    ) {
        if *stop {
            return;
        }
        if i == values.len() {
            *count += 1;
            if !visit(values) {
                *stop = true;
            }
            return;
        }
        for &v in &above[i] {
            if grounded && i == 0 && v != 0 {
                break;
            }
            if lower[i].iter().all(|&j| lat.leq(values[j as usize], v)) {
                values[i] = v;
                go(i + 1, lat, grounded, lower, above, values, count, stop, visit);
                if *stop {
                    return;
                }
            }
        }
    }
    go(0, lat, grounded, &lower, &above, &mut values, &mut count, &mut stop, &mut visit);
    count
}

/// All monotone extensional endomaps, failing once more than `budget` exist.
pub fn enumerate_endomaps(lat: &Arc<FiniteLattice>, grounded: bool, budget: u64) -> Result<Vec<EndoMap>> {
    let mut out = Vec::new();
    let mut over = false;
    for_each_endomap(lat, grounded, |v| {
        if out.len() as u64 >= budget {
            over = true;
            return false;
        }
        out.push(EndoMap { lattice: lat.clone(), values: v.to_vec() });
        true
    });
    if over {
        return Err(Error::Budget { partial: out.len() as u64 });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn two() -> Arc<FiniteLattice> {
        Arc::new(FiniteLattice::powerset(&["a", "b"]).unwrap())
    }

    #[test]
    fn counts_on_small_lattices() {
        let chain = Arc::new(FiniteLattice::powerset(&["a"]).unwrap());
        assert_eq!(enumerate_endomaps(&chain, false, 100).unwrap().len(), 2);
        assert_eq!(enumerate_endomaps(&chain, true, 100).unwrap().len(), 1);
        assert_eq!(enumerate_endomaps(&two(), false, 100).unwrap().len(), 9);
        assert_eq!(enumerate_endomaps(&two(), true, 100).unwrap().len(), 4);
    }

    #[test]
    fn budget_reports_partial_count() {
        assert_eq!(enumerate_endomaps(&two(), false, 5), Err(Error::Budget { partial: 5 }));
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let maps = enumerate_endomaps(&two(), false, 100).unwrap();
        for w in maps.windows(2) {
            assert!(w[0].values() < w[1].values());
        }
    }

    #[test]
    fn profiles() {
        let l = two();
        let id = EndoMap::identity(l.clone()).profile().unwrap();
        assert!(id.idempotent && id.join_preserving && id.grounded);
        assert_eq!(id.fixed_points.len(), 4);
        assert_eq!(id.d_c, 0);

        // c(∅)=∅, c(a)=ab, c(b)=b, c(ab)=ab
        let c = EndoMap::new(l.clone(), vec![0, 3, 2, 3]).unwrap().profile().unwrap();
        assert!(c.idempotent && c.join_preserving);
        assert_eq!(c.fixed_points, vec![0, 2, 3]);
        assert_eq!(c.d_c, 1);

        let one = Arc::new(FiniteLattice::powerset(&["a"]).unwrap());
        let c = EndoMap::new(one, vec![1, 1]).unwrap().profile().unwrap();
        assert_eq!(c.d_c, 0);
        assert!(!c.weakly_cofinal_dense);
    }

    #[test]
    fn validation_names_the_element() {
        let l = two();
        let bad = EndoMap::new(l, vec![0, 0, 2, 3]).unwrap();
        let msg = alloc::string::ToString::to_string(&bad.validate_pre().unwrap_err());
        assert!(msg.contains("\"a\""), "{msg}");
    }
}
