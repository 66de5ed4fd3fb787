//! Finite complete lattices with dense element indices.
//!
//! Element indices always form a linear extension of the order, so index 0 is
//! the bottom and `len() - 1` the top. Powerset lattices use the subset
//! bitmask itself as the index.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A lattice element, as a dense index.
pub type Elem = u32;

pub const MAX_POWERSET_POINTS: usize = 20;
pub const MAX_TABLE_ELEMENTS: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Shape {
    Powerset { points: Vec<String>, comma: bool },
    Table(Table),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Table {
    labels: Vec<String>,
    meet: Vec<u16>,
    join: Vec<u16>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    shape: Shape,
}

impl FiniteLattice {
    /// Boolean lattice of all subsets of `points`. Points are sorted; bit `i`
    /// of an element stands for the `i`-th point in sorted order.
    pub fn powerset<S: AsRef<str>>(points: &[S]) -> Result<Self> {
        if points.len() > MAX_POWERSET_POINTS {
            return Err(Error::Capacity { what: "powerset points", limit: MAX_POWERSET_POINTS, got: points.len() });
        }
        let mut pts: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
        pts.sort();
        for w in pts.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Validation(format!("duplicate point {:?}", w[0])));
            }
        }
        if pts.iter().any(|p| p.is_empty() || p.contains(',')) {
            return Err(Error::Validation("point names must be non-empty and comma-free".into()));
        }
        let comma = pts.iter().any(|p| p.chars().count() != 1);
        Ok(FiniteLattice { shape: Shape::Powerset { points: pts, comma } })
    }

    /// Lattice of an intersection-closed family of subsets of a carrier of at
    /// most 64 points, ordered by inclusion. The family must contain its own
    /// union. Used for subgroup lattices.
    pub fn from_closure_system(members: Vec<(u64, String)>) -> Result<Self> {
        let n = members.len();
        if n == 0 {
            return Err(Error::NotALattice("empty family".into()));
        }
        if n > MAX_TABLE_ELEMENTS {
            return Err(Error::Capacity { what: "lattice elements", limit: MAX_TABLE_ELEMENTS, got: n });
        }
        let mut members = members;
        members.sort_by_key(|(m, _)| (m.count_ones(), *m));
        let index: BTreeMap<u64, usize> = members.iter().enumerate().map(|(i, (m, _))| (*m, i)).collect();
        if index.len() != n {
            return Err(Error::NotALattice("duplicate member".into()));
        }
        let mut meet = alloc::vec![0u16; n * n];
        let mut join = alloc::vec![0u16; n * n];
        for i in 0..n {
            for j in i..n {
                let (a, b) = (members[i].0, members[j].0);
                let m = *index
                    .get(&(a & b))
                    .ok_or_else(|| Error::NotALattice(format!("{} and {} have no meet", members[i].1, members[j].1)))?;
                let u = a | b;
                let k = (j..n)
                    .find(|&k| members[k].0 & u == u)
                    .ok_or_else(|| Error::NotALattice(format!("{} and {} have no join", members[i].1, members[j].1)))?;
                meet[i * n + j] = m as u16;
                meet[j * n + i] = m as u16;
                join[i * n + j] = k as u16;
                join[j * n + i] = k as u16;
            }
        }
        let labels = members.into_iter().map(|(_, l)| l).collect();
        Ok(FiniteLattice { shape: Shape::Table(Table { labels, meet, join }) })
    }

    /// Lattice from an explicit order relation, `leq[i][j]` meaning element
    /// `i` is below element `j`. Elements are reindexed along a linear
    /// extension; the returned permutation maps new index to old index.
    pub fn from_order(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<(Self, Vec<usize>)> {
        let n = labels.len();
        if n == 0 || leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::NotALattice("order table has wrong shape".into()));
        }
        if n > MAX_TABLE_ELEMENTS {
            return Err(Error::Capacity { what: "lattice elements", limit: MAX_TABLE_ELEMENTS, got: n });
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::NotALattice(format!("{} is not reflexive", labels[i])));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::NotALattice(format!("{} and {} are not antisymmetric", labels[i], labels[j])));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(Error::NotALattice(format!(
                            "transitivity fails at {}, {}, {}",
                            labels[i], labels[j], labels[k]
                        )));
                    }
                }
            }
        }
        let below = |i: usize| (0..n).filter(|&k| leq[k][i]).count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&i| (below(i), i));
        let mut inv = alloc::vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut meet = alloc::vec![0u16; n * n];
        let mut join = alloc::vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let (oa, ob) = (perm[a], perm[b]);
                let lower: Vec<usize> = (0..n).filter(|&k| leq[k][oa] && leq[k][ob]).collect();
                let glb = lower.iter().copied().find(|&k| lower.iter().all(|&l| leq[l][k]));
                let upper: Vec<usize> = (0..n).filter(|&k| leq[oa][k] && leq[ob][k]).collect();
                let lub = upper.iter().copied().find(|&k| upper.iter().all(|&l| leq[k][l]));
                match (glb, lub) {
                    (Some(g), Some(l)) => {
                        meet[a * n + b] = inv[g] as u16;
                        join[a * n + b] = inv[l] as u16;
                    }
                    _ => {
                        return Err(Error::NotALattice(format!(
                            "{} and {} lack a meet or join",
                            labels[oa], labels[ob]
                        )))
                    }
                }
            }
        }
        let new_labels = perm.iter().map(|&i| labels[i].clone()).collect();
        Ok((FiniteLattice { shape: Shape::Table(Table { labels: new_labels, meet, join }) }, perm))
    }

    pub fn len(&self) -> usize {
        match &self.shape {
            Shape::Powerset { points, .. } => 1usize << points.len(),
            Shape::Table(t) => t.labels.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> Elem {
        0
    }

    pub fn top(&self) -> Elem {
        (self.len() - 1) as Elem
    }

    pub fn elements(&self) -> core::ops::Range<Elem> {
        0..self.len() as Elem
    }

    /// Points of a powerset lattice, in bit order.
    pub fn points(&self) -> Option<&[String]> {
        match &self.shape {
            Shape::Powerset { points, .. } => Some(points),
            Shape::Table(_) => None,
        }
    }

    pub fn is_powerset(&self) -> bool {
        matches!(self.shape, Shape::Powerset { .. })
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        match &self.shape {
            Shape::Powerset { .. } => a & b,
            Shape::Table(t) => t.meet[a as usize * t.labels.len() + b as usize] as Elem,
        }
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        match &self.shape {
            Shape::Powerset { .. } => a | b,
            Shape::Table(t) => t.join[a as usize * t.labels.len() + b as usize] as Elem,
        }
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        match &self.shape {
            Shape::Powerset { .. } => a & !b == 0,
            Shape::Table(_) => self.meet(a, b) == a,
        }
    }

    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(self.top(), |acc, x| self.meet(acc, x))
    }

    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    pub fn label(&self, e: Elem) -> String {
        match &self.shape {
            Shape::Powerset { points, comma } => {
                let names = (0..points.len()).filter(|i| e >> i & 1 == 1).map(|i| points[i].as_str());
                if *comma {
                    names.collect::<Vec<_>>().join(",")
                } else {
                    names.collect()
                }
            }
            Shape::Table(t) => t.labels[e as usize].clone(),
        }
    }

    /// Inverse of [`label`](Self::label). Powerset labels may list points in
    /// any order, with or without commas when all names are single characters.
    pub fn parse(&self, label: &str) -> Result<Elem> {
        match &self.shape {
            Shape::Powerset { points, comma } => {
                let lookup = |name: &str| {
                    points
                        .binary_search_by(|p| p.as_str().cmp(name))
                        .map_err(|_| Error::Unknown(format!("point {name:?} in subset label {label:?}")))
                };
                let mut mask: Elem = 0;
                let mut add = |i: usize| {
                    if mask >> i & 1 == 1 {
                        return Err(Error::Validation(format!("repeated point in subset label {label:?}")));
                    }
                    mask |= 1 << i;
                    Ok(())
                };
                if *comma {
                    if !label.is_empty() {
                        for part in label.split(',') {
                            add(lookup(part)?)?;
                        }
                    }
                } else {
                    for ch in label.chars().filter(|&c| c != ',') {
                        let mut buf = [0u8; 4];
                        add(lookup(ch.encode_utf8(&mut buf))?)?;
                    }
                }
                Ok(mask)
            }
            Shape::Table(t) => t
                .labels
                .iter()
                .position(|l| l == label)
                .map(|i| i as Elem)
                .ok_or_else(|| Error::Unknown(format!("subobject label {label:?}"))),
        }
    }

    /// Greatest `y` with `x ∧ y = σ`, if it exists.
    pub fn pseudocomplement(&self, x: Elem) -> Option<Elem> {
        match &self.shape {
            Shape::Powerset { .. } => Some(!x & self.top()),
            Shape::Table(_) => {
                let j = self.join_all(self.elements().filter(|&y| self.meet(x, y) == self.bottom()));
                (self.meet(x, j) == self.bottom()).then_some(j)
            }
        }
    }

    pub fn is_pseudocomplemented(&self) -> bool {
        self.is_powerset() || self.elements().all(|x| self.pseudocomplement(x).is_some())
    }

    pub fn is_distributive(&self) -> bool {
        if self.is_powerset() {
            return true;
        }
        let els = self.elements();
        els.clone().all(|a| {
            els.clone().all(|b| {
                els.clone().all(|c| self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c)))
            })
        })
    }

    /// `a ≠ σ` and `a ≤ x ∨ y` implies `a ≤ x` or `a ≤ y`.
    pub fn is_join_prime(&self, a: Elem) -> bool {
        if a == self.bottom() {
            return false;
        }
        match &self.shape {
            Shape::Powerset { .. } => a.count_ones() == 1,
            Shape::Table(_) => {
                let rest = self.join_all(self.elements().filter(|&x| !self.leq(a, x)));
                !self.leq(a, rest)
            }
        }
    }

    /// Least-indexed join-prime `a ≤ gen`, i.e. a prime filter `↑a ⊇ ↑gen`.
    pub fn prime_extension(&self, gen: Elem) -> Option<Elem> {
        match &self.shape {
            Shape::Powerset { .. } => (gen != 0).then(|| gen & gen.wrapping_neg()),
            Shape::Table(_) => self.elements().find(|&a| self.leq(a, gen) && self.is_join_prime(a)),
        }
    }

    /// Every proper filter extends to a prime filter.
    pub fn has_prime_extensions(&self) -> bool {
        self.elements().filter(|&x| x != self.bottom()).all(|x| self.prime_extension(x).is_some())
    }

    /// Upper covers of `x` (elements `y > x` with nothing strictly between).
    pub fn covers(&self, x: Elem) -> Vec<Elem> {
        match &self.shape {
            Shape::Powerset { points, .. } => {
                (0..points.len()).filter(|i| x >> i & 1 == 0).map(|i| x | 1 << i).collect()
            }
            Shape::Table(_) => {
                let above: Vec<Elem> = self.elements().filter(|&y| y != x && self.leq(x, y)).collect();
                above.iter().copied().filter(|&y| !above.iter().any(|&z| z != y && self.leq(z, y))).collect()
            }
        }
    }

    /// Atoms, in index order.
    pub fn atoms(&self) -> Vec<Elem> {
        self.covers(self.bottom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(names: &[&str]) -> FiniteLattice {
        FiniteLattice::powerset(names).unwrap()
    }

    #[test]
    fn powerset_labels_and_ops() {
        let l = p(&["b", "a"]);
        assert_eq!(l.len(), 4);
        assert_eq!(l.label(l.bottom()), "");
        assert_eq!(l.label(l.top()), "ab");
        let l3 = p(&["a", "b", "c"]);
        let m = l3.meet(l3.parse("ab").unwrap(), l3.parse("bc").unwrap());
        assert_eq!(l3.label(m), "b");
        assert_eq!(l3.parse("ca").unwrap(), l3.parse("ac").unwrap());
        assert!(l3.parse("aa").is_err());
        assert!(l3.parse("d").is_err());
        let e = p(&[]);
        assert_eq!(e.len(), 1);
        assert_eq!(e.bottom(), e.top());
    }

    #[test]
    fn multi_char_points_use_commas() {
        let l = p(&["a|u", "b|u"]);
        let x = l.parse("b|u,a|u").unwrap();
        assert_eq!(l.label(x), "a|u,b|u");
        assert_eq!(l.parse("").unwrap(), 0);
    }

    #[test]
    fn capacity_is_enforced() {
        let names: Vec<String> = (0..21).map(|i| format!("p{i}")).collect();
        assert!(matches!(FiniteLattice::powerset(&names), Err(Error::Capacity { .. })));
    }

    #[test]
    fn pseudocomplements() {
        let l = p(&["a", "b"]);
        assert_eq!(l.pseudocomplement(l.parse("a").unwrap()), Some(l.parse("b").unwrap()));
        assert_eq!(l.pseudocomplement(0), Some(l.top()));
        // chain 0 < 1 < 2
        let chain = FiniteLattice::from_closure_system(vec![
            (0b0001, "{0}".into()),
            (0b0101, "{0,2}".into()),
            (0b1111, "{0,1,2,3}".into()),
        ])
        .unwrap();
        assert_eq!(chain.pseudocomplement(1), Some(0));
        assert_eq!(chain.pseudocomplement(0), Some(2));
    }

    #[test]
    fn diamond_is_not_pseudocomplemented() {
        // M3: bottom, three atoms, top
        let labels: Vec<String> = ["0", "x", "y", "z", "1"].iter().map(|s| s.to_string()).collect();
        let leq: Vec<Vec<bool>> = (0..5).map(|i| (0..5).map(|j| i == j || i == 0 || j == 4).collect()).collect();
        let (m3, _) = FiniteLattice::from_order(labels, &leq).unwrap();
        assert!(!m3.is_distributive());
        assert!(!m3.is_pseudocomplemented());
        assert!(!m3.is_join_prime(1));
        assert!(!m3.has_prime_extensions());
    }

    #[test]
    fn prime_extensions() {
        let l = p(&["a", "b"]);
        assert_eq!(l.prime_extension(l.top()).map(|e| l.label(e)), Some("a".into()));
        assert_eq!(l.prime_extension(l.bottom()), None);
        let one = p(&["a"]);
        assert_eq!(one.prime_extension(one.top()), Some(1));
    }

    #[test]
    fn non_lattice_orders_are_rejected() {
        // two incomparable maximal elements
        let labels: Vec<String> = ["0", "x", "y"].iter().map(|s| s.to_string()).collect();
        let leq = vec![vec![true, true, true], vec![false, true, false], vec![false, false, true]];
        assert!(matches!(FiniteLattice::from_order(labels, &leq), Err(Error::NotALattice(_))));
    }
}
