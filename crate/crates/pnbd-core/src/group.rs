//! Finite groups given by Cayley tables, with subgroup enumeration.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub const MAX_GROUP_ORDER: usize = 64;
pub const MAX_TABLE_INPUT_ORDER: usize = 16;

/// Element 0 is always the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    name: String,
    labels: Vec<String>,
    table: Vec<u8>,
    inverse: Vec<u8>,
}

pub const BUILTIN_GROUPS: &[&str] =
    &["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z2xZ2", "Z2xZ4", "S3", "D4", "Q8"];

impl Group {
    /// Builds a group from a Cayley table over `labels`. The identity is moved
    /// to index 0 if needed.
    pub fn from_table(name: &str, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Validation("a group needs at least one element".into()));
        }
        if n > MAX_GROUP_ORDER {
            return Err(Error::Capacity { what: "group order", limit: MAX_GROUP_ORDER, got: n });
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Validation(format!("Cayley table of {name} must be {n}x{n}")));
        }
        if table.iter().flatten().any(|&v| v >= n) {
            return Err(Error::Validation(format!("Cayley table of {name} has an entry out of range")));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if l.is_empty() || l.contains(',') || l.contains('{') || l.contains('}') || !seen.insert(l.clone()) {
                return Err(Error::Validation(format!("bad or repeated element label {l:?} in {name}")));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::Validation(format!("{name} has no identity element")))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Validation(format!(
                            "{name} is not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        // put identity first, keep the rest in order
        let mut order: Vec<usize> = Vec::with_capacity(n);
        order.push(e);
        order.extend((0..n).filter(|&x| x != e));
        let mut pos = alloc::vec![0usize; n];
        for (i, &o) in order.iter().enumerate() {
            pos[o] = i;
        }
        let mut t = alloc::vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                t[i * n + j] = pos[table[order[i]][order[j]]] as u8;
            }
        }
        let mut inverse = alloc::vec![0u8; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| t[a * n + b] == 0)
                .ok_or_else(|| Error::Validation(format!("{} has no inverse in {name}", labels[order[a]])))?;
            inverse[a] = b as u8;
        }
        Ok(Group {
            name: name.to_string(),
            labels: order.iter().map(|&i| labels[i].clone()).collect(),
            table: t,
            inverse,
        })
    }

    pub fn builtin(name: &str) -> Result<Self> {
        let cyclic = |n: usize| {
            let labels = (0..n).map(|i| i.to_string()).collect();
            let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
            Group::from_table(&format!("Z{n}"), labels, table)
        };
        match name {
            "Z1" | "Z2" | "Z3" | "Z4" | "Z5" | "Z6" | "Z7" | "Z8" => cyclic(name[1..].parse().unwrap()),
            "Z2xZ2" => Ok(Group::direct_product(&cyclic(2)?, &cyclic(2)?)?.renamed("Z2xZ2")),
            "Z2xZ4" => Ok(Group::direct_product(&cyclic(2)?, &cyclic(4)?)?.renamed("Z2xZ4")),
            "S3" => {
                let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
                let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
                let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
                // (s t)(i) = s(t(i))
                let table =
                    perms.iter().map(|s| perms.iter().map(|t| idx([s[t[0]], s[t[1]], s[t[2]]])).collect()).collect();
                Group::from_table("S3", labels.iter().map(|s| s.to_string()).collect(), table)
            }
            "D4" => {
                // r^k s^f, with s r = r^{-1} s
                let els: Vec<(usize, usize)> = (0..2).flat_map(|f| (0..4).map(move |k| (k, f))).collect();
                let labels = ["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"];
                let mul = |(k1, f1): (usize, usize), (k2, f2): (usize, usize)| {
                    let k = if f1 == 0 { (k1 + k2) % 4 } else { (k1 + 4 - k2) % 4 };
                    (k, f1 ^ f2)
                };
                let table = els
                    .iter()
                    .map(|&a| els.iter().map(|&b| els.iter().position(|&c| c == mul(a, b)).unwrap()).collect())
                    .collect();
                Group::from_table("D4", labels.iter().map(|s| s.to_string()).collect(), table)
            }
            "Q8" => {
                // units ±1, ±i, ±j, ±k as (sign, unit) with unit 0=1,1=i,2=j,3=k
                let els: Vec<(bool, usize)> = (0..4).flat_map(|u| [(false, u), (true, u)]).collect();
                let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
                let unit_mul = |a: usize, b: usize| -> (bool, usize) {
                    match (a, b) {
                        (0, x) | (x, 0) => (false, x),
                        (x, y) if x == y => (true, 0),
                        (1, 2) => (false, 3),
                        (2, 3) => (false, 1),
                        (3, 1) => (false, 2),
                        (2, 1) => (true, 3),
                        (3, 2) => (true, 1),
                        (1, 3) => (true, 2),
                        _ => unreachable!(),
                    }
                };
                let table = els
                    .iter()
                    .map(|&(sa, a)| {
                        els.iter()
                            .map(|&(sb, b)| {
                                let (s, u) = unit_mul(a, b);
                                els.iter().position(|&c| c == (s ^ sa ^ sb, u)).unwrap()
                            })
                            .collect()
                    })
                    .collect();
                Group::from_table("Q8", labels.iter().map(|s| s.to_string()).collect(), table)
            }
            _ => Err(Error::Unknown(format!("builtin group {name:?}"))),
        }
    }

    /// Direct product with elements `(x, t)` labelled `"x|t"`, ordered
    /// lexicographically by factor index.
    pub fn direct_product(a: &Group, b: &Group) -> Result<Self> {
        let n = a.order() * b.order();
        if n > MAX_GROUP_ORDER {
            return Err(Error::Capacity { what: "group order", limit: MAX_GROUP_ORDER, got: n });
        }
        let pairs: Vec<(usize, usize)> = (0..a.order()).flat_map(|x| (0..b.order()).map(move |t| (x, t))).collect();
        Group::from_pairs(&format!("{}x{}", a.name, b.name), a, b, &pairs)
    }

    /// The subgroup of `a × b` carried by `pairs`, which must be closed under
    /// the componentwise operation and contain `(e, e)` first.
    pub fn from_pairs(name: &str, a: &Group, b: &Group, pairs: &[(usize, usize)]) -> Result<Self> {
        let labels = pairs.iter().map(|&(x, t)| format!("{}|{}", a.labels[x], b.labels[t])).collect();
        let table = pairs
            .iter()
            .map(|&(x1, t1)| {
                pairs
                    .iter()
                    .map(|&(x2, t2)| {
                        let p = (a.mul(x1, x2), b.mul(t1, t2));
                        pairs.iter().position(|&q| q == p).ok_or_else(|| {
                            Error::Validation(format!("pairs of {name} are not closed under the operation"))
                        })
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Group::from_table(name, labels, table)
    }

    /// The subgroup carried by `mask`, keeping parent labels.
    pub fn subgroup(&self, name: &str, mask: u64) -> Result<Self> {
        let els: Vec<usize> = (0..self.order()).filter(|&i| mask >> i & 1 == 1).collect();
        let labels = els.iter().map(|&i| self.labels[i].clone()).collect();
        let table = els
            .iter()
            .map(|&x| {
                els.iter()
                    .map(|&y| {
                        let p = self.mul(x, y);
                        els.iter().position(|&z| z == p).ok_or_else(|| Error::Validation("not a subgroup".into()))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Group::from_table(name, labels, table)
    }

    fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn full_mask(&self) -> u64 {
        if self.order() == 64 {
            u64::MAX
        } else {
            (1u64 << self.order()) - 1
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup generated by the elements of `mask`.
    pub fn generate(&self, mask: u64) -> u64 {
        let gens: Vec<usize> = (0..self.order()).filter(|&i| mask >> i & 1 == 1).collect();
        let mut set = 1u64 | mask;
        let mut frontier: Vec<usize> = (0..self.order()).filter(|&i| set >> i & 1 == 1).collect();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if set >> y & 1 == 0 {
                    set |= 1 << y;
                    frontier.push(y);
                }
            }
        }
        set
    }

    pub fn is_subgroup(&self, mask: u64) -> bool {
        mask & 1 == 1 && self.generate(mask) == mask
    }

    /// All subgroups, as element masks, sorted by (size, mask).
    pub fn subgroups(&self) -> Vec<u64> {
        let cyclic: BTreeSet<u64> = (0..self.order()).map(|g| self.generate(1 << g)).collect();
        let mut all: BTreeSet<u64> = cyclic.clone();
        let mut frontier: Vec<u64> = all.iter().copied().collect();
        while let Some(h) = frontier.pop() {
            for &c in &cyclic {
                if c & !h != 0 {
                    let j = self.generate(h | c);
                    if all.insert(j) {
                        frontier.push(j);
                    }
                }
            }
        }
        let mut v: Vec<u64> = all.into_iter().collect();
        v.sort_by_key(|m| (m.count_ones(), *m));
        v
    }

    /// Canonical subgroup label: element labels in index order, braced.
    pub fn subgroup_label(&self, mask: u64) -> String {
        let names: Vec<&str> =
            (0..self.order()).filter(|&i| mask >> i & 1 == 1).map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn is_normal(&self, mask: u64) -> bool {
        self.conjugates(mask) == mask
    }

    fn conjugates(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for g in 0..self.order() {
            for h in (0..self.order()).filter(|&h| mask >> h & 1 == 1) {
                out |= 1 << self.mul(self.mul(g, h), self.inv(g));
            }
        }
        out
    }

    /// Smallest normal subgroup containing `mask`.
    pub fn normal_closure(&self, mask: u64) -> u64 {
        let mut h = self.generate(mask);
        loop {
            let next = self.generate(self.conjugates(h));
            if next == h {
                return h;
            }
            h = next;
        }
    }

    /// Small generating set, chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = 1u64;
        for g in 1..self.order() {
            if span >> g & 1 == 0 {
                gens.push(g);
                span = self.generate(span | 1 << g);
            }
        }
        gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn count(name: &str) -> usize {
        Group::builtin(name).unwrap().subgroups().len()
    }

    #[test]
    fn subgroup_counts_of_builtins() {
        assert_eq!(count("Z1"), 1);
        assert_eq!(count("Z4"), 3);
        assert_eq!(count("Z6"), 4);
        assert_eq!(count("Z8"), 4);
        assert_eq!(count("Z2xZ2"), 5);
        assert_eq!(count("S3"), 6);
        assert_eq!(count("D4"), 10);
        assert_eq!(count("Q8"), 6);
        assert_eq!(count("Z2xZ4"), 8);
    }

    #[test]
    fn group_axioms_of_builtins() {
        for name in BUILTIN_GROUPS {
            let g = Group::builtin(name).unwrap();
            assert_eq!(g.labels()[0], g.labels()[0]);
            for a in 0..g.order() {
                assert_eq!(g.mul(0, a), a);
                assert_eq!(g.mul(a, g.inv(a)), 0);
            }
            assert_eq!(g.generate(g.full_mask()), g.full_mask());
        }
        assert!(!Group::builtin("S3").unwrap().is_abelian());
        assert!(!Group::builtin("Q8").unwrap().is_abelian());
        assert!(Group::builtin("Z2xZ4").unwrap().is_abelian());
    }

    #[test]
    fn normal_closures() {
        let s3 = Group::builtin("S3").unwrap();
        let t = s3.generate(1 << s3.element("(12)").unwrap());
        assert_eq!(s3.normal_closure(t), s3.full_mask());
        let a3 = s3.generate(1 << s3.element("(123)").unwrap());
        assert_eq!(s3.normal_closure(a3), a3);
        let q8 = Group::builtin("Q8").unwrap();
        for h in q8.subgroups() {
            assert!(q8.is_normal(h));
        }
    }

    #[test]
    fn bad_tables_are_rejected() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(Group::from_table("bad", labels.clone(), vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(Group::from_table("bad", labels, vec![vec![0, 1]]).is_err());
    }
}
