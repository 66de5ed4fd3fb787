//! Objects and morphisms of the two finite contexts: finite sets with
//! (surjections, injections) and finite groups with (regular epis, monos).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::{Elem, FiniteLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Context {
    FinSet,
    FinGrp,
}

impl Context {
    pub fn name(self) -> &'static str {
        match self {
            Context::FinSet => "finset",
            Context::FinGrp => "fingrp",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "finset" => Ok(Context::FinSet),
            "fingrp" => Ok(Context::FinGrp),
            _ => Err(Error::Unknown(format!("context {s:?}"))),
        }
    }

    /// Preimages of the least subobject are least for every morphism.
    pub fn reflects_zero(self) -> bool {
        self == Context::FinSet
    }

    /// The unique morphism from the initial to the terminal object is an
    /// admissible mono. True in both contexts (`∅ ↪ 1`, and `1 = 0` for groups).
    pub fn admissibly_quasi_pointed(self) -> bool {
        true
    }

    /// The initial object is strict (only FinSet: every map into `∅` is iso).
    pub fn initial_is_strict(self) -> bool {
        self == Context::FinSet
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Carrier {
    Set(Vec<String>),
    Group(Group),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContextObject {
    carrier: Carrier,
    lattice: Arc<FiniteLattice>,
    /// Element masks of the subgroups, by lattice index (empty for sets).
    subgroups: Vec<u64>,
    index: BTreeMap<u64, Elem>,
}

pub type Obj = Arc<ContextObject>;

impl ContextObject {
    pub fn finset<S: AsRef<str>>(points: &[S]) -> Result<Obj> {
        let lattice = FiniteLattice::powerset(points)?;
        let pts = lattice.points().unwrap().to_vec();
        Ok(Arc::new(ContextObject {
            carrier: Carrier::Set(pts),
            lattice: Arc::new(lattice),
            subgroups: Vec::new(),
            index: BTreeMap::new(),
        }))
    }

    pub fn group(g: Group) -> Result<Obj> {
        let subs = g.subgroups();
        let members = subs.iter().map(|&m| (m, g.subgroup_label(m))).collect();
        let lattice = FiniteLattice::from_closure_system(members)?;
        let index = subs.iter().enumerate().map(|(i, &m)| (m, i as Elem)).collect();
        Ok(Arc::new(ContextObject { carrier: Carrier::Group(g), lattice: Arc::new(lattice), subgroups: subs, index }))
    }

    pub fn builtin_group(name: &str) -> Result<Obj> {
        ContextObject::group(Group::builtin(name)?)
    }

    pub fn terminal(ctx: Context) -> Obj {
        match ctx {
            Context::FinSet => ContextObject::finset(&["*"]).unwrap(),
            Context::FinGrp => ContextObject::builtin_group("Z1").unwrap(),
        }
    }

    pub fn context(&self) -> Context {
        match self.carrier {
            Carrier::Set(_) => Context::FinSet,
            Carrier::Group(_) => Context::FinGrp,
        }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn as_group(&self) -> Result<&Group> {
        match &self.carrier {
            Carrier::Group(g) => Ok(g),
            Carrier::Set(_) => Err(Error::Context("expected a group object".into())),
        }
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    /// Number of points (elements of the carrier).
    pub fn size(&self) -> usize {
        self.point_labels().len()
    }

    pub fn point_labels(&self) -> &[String] {
        match &self.carrier {
            Carrier::Set(p) => p,
            Carrier::Group(g) => g.labels(),
        }
    }

    pub fn point(&self, label: &str) -> Result<usize> {
        self.point_labels().iter().position(|p| p == label).ok_or_else(|| Error::Unknown(format!("point {label:?}")))
    }

    /// Carrier points of a subobject, as a bitmask.
    #[inline]
    pub fn mask(&self, e: Elem) -> u64 {
        match self.carrier {
            Carrier::Set(_) => e as u64,
            Carrier::Group(_) => self.subgroups[e as usize],
        }
    }

    /// The subobject carried by exactly `mask`, if there is one.
    #[inline]
    pub fn elem(&self, mask: u64) -> Option<Elem> {
        match self.carrier {
            Carrier::Set(_) => Some(mask as Elem),
            Carrier::Group(_) => self.index.get(&mask).copied(),
        }
    }

    pub fn label(&self, e: Elem) -> String {
        self.lattice.label(e)
    }

    pub fn parse(&self, label: &str) -> Result<Elem> {
        match &self.carrier {
            Carrier::Set(_) => self.lattice.parse(label),
            Carrier::Group(g) => {
                // accept any order of the listed elements
                let inner = label
                    .trim()
                    .strip_prefix('{')
                    .and_then(|s| s.strip_suffix('}'))
                    .ok_or_else(|| Error::Unknown(format!("subgroup label {label:?} must be braced")))?;
                let mut mask = 0u64;
                for part in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let i = g.element(part).ok_or_else(|| Error::Unknown(format!("group element {part:?}")))?;
                    mask |= 1 << i;
                }
                self.elem(mask).ok_or_else(|| Error::Validation(format!("{label:?} is not a subgroup")))
            }
        }
    }

    /// The object carried by a subobject, with its embedding.
    pub fn subobject(self: &Arc<Self>, e: Elem) -> Result<Morphism> {
        let mask = self.mask(e);
        let pts: Vec<usize> = (0..self.size()).filter(|&i| mask >> i & 1 == 1).collect();
        let obj = match &self.carrier {
            Carrier::Set(p) => ContextObject::finset(&pts.iter().map(|&i| p[i].clone()).collect::<Vec<_>>())?,
            Carrier::Group(g) => ContextObject::group(g.subgroup(&self.label(e), mask)?)?,
        };
        let map = obj.point_labels().iter().map(|l| self.point(l)).collect::<Result<Vec<_>>>()?;
        Morphism::new(obj, self.clone(), map)
    }

    /// Unique morphism to the terminal object.
    pub fn to_terminal(self: &Arc<Self>) -> Morphism {
        let t = ContextObject::terminal(self.context());
        Morphism { dom: self.clone(), cod: t, map: alloc::vec![0; self.size()] }
    }

    /// Conjugation-saturated subgroup generated by `e`.
    pub fn normal_closure(&self, e: Elem) -> Result<Elem> {
        let g = self.as_group().map_err(|_| Error::Context("normal closure needs a group object".into()))?;
        Ok(self.elem(g.normal_closure(self.mask(e))).expect("normal closure is a subgroup"))
    }
}

pub fn same_object(a: &Obj, b: &Obj) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    dom: Obj,
    cod: Obj,
    map: Vec<usize>,
}

impl Morphism {
    pub fn new(dom: Obj, cod: Obj, map: Vec<usize>) -> Result<Self> {
        if dom.context() != cod.context() {
            return Err(Error::Context("morphism between objects of different contexts".into()));
        }
        if map.len() != dom.size() {
            return Err(Error::Validation(format!(
                "map has {} entries for a domain of {} points",
                map.len(),
                dom.size()
            )));
        }
        if let Some(i) = map.iter().position(|&v| v >= cod.size()) {
            return Err(Error::Validation(format!("image of {:?} is out of range", dom.point_labels()[i])));
        }
        if let (Carrier::Group(g), Carrier::Group(h)) = (&dom.carrier, &cod.carrier) {
            for a in 0..g.order() {
                for b in 0..g.order() {
                    if map[g.mul(a, b)] != h.mul(map[a], map[b]) {
                        return Err(Error::Validation(format!(
                            "not a homomorphism at ({}, {})",
                            g.labels()[a],
                            g.labels()[b]
                        )));
                    }
                }
            }
        }
        Ok(Morphism { dom, cod, map })
    }

    pub fn identity(obj: &Obj) -> Self {
        Morphism { dom: obj.clone(), cod: obj.clone(), map: (0..obj.size()).collect() }
    }

    pub fn dom(&self) -> &Obj {
        &self.dom
    }

    pub fn cod(&self) -> &Obj {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn at(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Result<Morphism> {
        if !same_object(&self.cod, &other.dom) {
            return Err(Error::Domain("morphisms are not composable".into()));
        }
        Ok(Morphism {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        })
    }

    pub fn image_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            out |= 1 << self.map[i];
            rest &= rest - 1;
        }
        out
    }

    pub fn preimage_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for (i, &y) in self.map.iter().enumerate() {
            if mask >> y & 1 == 1 {
                out |= 1 << i;
            }
        }
        out
    }

    /// Image `f[x]` of a domain subobject.
    pub fn image(&self, x: Elem) -> Elem {
        self.cod.elem(self.image_mask(self.dom.mask(x))).expect("images of subobjects are subobjects")
    }

    /// Preimage `f⁻¹(y)` of a codomain subobject.
    pub fn preimage(&self, y: Elem) -> Elem {
        self.dom.elem(self.preimage_mask(self.cod.mask(y))).expect("preimages of subobjects are subobjects")
    }

    /// `f^M`, the image of the whole domain.
    pub fn image_of_top(&self) -> Elem {
        self.image(self.dom.lattice().top())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = 0u64;
        self.map.iter().all(|&y| {
            let fresh = seen >> y & 1 == 0;
            seen |= 1 << y;
            fresh
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.image_mask(all_points(self.dom.size())) == all_points(self.cod.size())
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Every codomain subobject is the image of some domain subobject.
    pub fn is_formally_surjective(&self) -> bool {
        self.cod.lattice().elements().all(|y| self.image(self.preimage(y)) == y)
    }

    /// First codomain subobject that is not an image.
    pub fn formal_surjectivity_witness(&self) -> Option<Elem> {
        self.cod.lattice().elements().find(|&y| self.image(self.preimage(y)) != y)
    }

    pub fn reflects_zero(&self) -> bool {
        self.preimage(self.cod.lattice().bottom()) == self.dom.lattice().bottom()
    }

    /// Image factorization `f = m ∘ e`.
    pub fn factorize(&self) -> Result<(Morphism, Morphism)> {
        let m = self.cod.subobject(self.image_of_top())?;
        let e_map = self.map.iter().map(|&y| m.map.iter().position(|&z| z == y).expect("lands in image")).collect();
        let e = Morphism::new(self.dom.clone(), m.dom.clone(), e_map)?;
        Ok((e, m))
    }

    /// Corestriction through a codomain subobject `n ≥ f^M`, given its embedding.
    pub fn corestrict(&self, n: &Morphism) -> Result<Morphism> {
        let map = self
            .map
            .iter()
            .map(|&y| {
                n.map
                    .iter()
                    .position(|&z| z == y)
                    .ok_or_else(|| Error::Precondition("morphism does not factor through the subobject".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(self.dom.clone(), n.dom.clone(), map)
    }
}

fn all_points(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A pullback square `P → X`, `P → T` over `f: X → Y`, `h: T → Y`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub object: Obj,
    /// Projection to the domain of `f`.
    pub h_f: Morphism,
    /// Projection to the domain of `h`.
    pub f_h: Morphism,
}

pub fn pullback(f: &Morphism, h: &Morphism) -> Result<Pullback> {
    if !same_object(&f.cod, &h.cod) {
        return Err(Error::Domain("pullback of morphisms with different codomains".into()));
    }
    let (x, t) = (&f.dom, &h.dom);
    let pairs: Vec<(usize, usize)> =
        (0..x.size()).flat_map(|a| (0..t.size()).map(move |b| (a, b))).filter(|&(a, b)| f.at(a) == h.at(b)).collect();
    pair_object(x, t, &pairs)
}

/// Object carried by a set of pairs with its two projections.
fn pair_object(x: &Obj, t: &Obj, pairs: &[(usize, usize)]) -> Result<Pullback> {
    let object = match (&x.carrier, &t.carrier) {
        (Carrier::Set(xp), Carrier::Set(tp)) => {
            let labels: Vec<String> = pairs.iter().map(|&(a, b)| format!("{}|{}", xp[a], tp[b])).collect();
            ContextObject::finset(&labels)?
        }
        (Carrier::Group(g), Carrier::Group(k)) => {
            let name = format!("{}x{}", g.name(), k.name());
            ContextObject::group(Group::from_pairs(&name, g, k, pairs)?)?
        }
        _ => return Err(Error::Context("pair object across contexts".into())),
    };
    // object points may be reordered; map back through labels
    let by_label: BTreeMap<String, (usize, usize)> = match (&x.carrier, &t.carrier) {
        (Carrier::Set(xp), Carrier::Set(tp)) => {
            pairs.iter().map(|&(a, b)| (format!("{}|{}", xp[a], tp[b]), (a, b))).collect()
        }
        _ => {
            let (xl, tl) = (x.point_labels(), t.point_labels());
            pairs.iter().map(|&(a, b)| (format!("{}|{}", xl[a], tl[b]), (a, b))).collect()
        }
    };
    let coords: Vec<(usize, usize)> = object.point_labels().iter().map(|l| by_label[l]).collect();
    let h_f = Morphism::new(object.clone(), x.clone(), coords.iter().map(|c| c.0).collect())?;
    let f_h = Morphism::new(object.clone(), t.clone(), coords.iter().map(|c| c.1).collect())?;
    Ok(Pullback { object, h_f, f_h })
}

/// Product of up to three objects with its projections; the empty product is
/// the terminal object of `ctx`.
pub fn product(ctx: Context, objects: &[Obj]) -> Result<(Obj, Vec<Morphism>)> {
    if objects.len() > 3 {
        return Err(Error::Capacity { what: "product factors", limit: 3, got: objects.len() });
    }
    if objects.iter().any(|o| o.context() != ctx) {
        return Err(Error::Context("product factor from another context".into()));
    }
    match objects {
        [] => Ok((ContextObject::terminal(ctx), Vec::new())),
        [a] => Ok((a.clone(), alloc::vec![Morphism::identity(a)])),
        [a, rest @ ..] => {
            let (tail, tail_proj) = product(ctx, rest)?;
            let pairs: Vec<(usize, usize)> =
                (0..a.size()).flat_map(|i| (0..tail.size()).map(move |j| (i, j))).collect();
            let pb = pair_object(a, &tail, &pairs)?;
            let mut proj = alloc::vec![pb.h_f.clone()];
            for p in tail_proj {
                proj.push(pb.f_h.then(&p)?);
            }
            Ok((pb.object, proj))
        }
    }
}

/// Kernel pair `(Kerp, f1, f2)` and the diagonal `d_f: X → Kerp`.
pub struct KernelPair {
    pub object: Obj,
    pub f1: Morphism,
    pub f2: Morphism,
    pub diagonal: Morphism,
}

pub fn kernel_pair(f: &Morphism) -> Result<KernelPair> {
    let pb = pullback(f, f)?;
    let diag: Vec<usize> = (0..f.dom.size())
        .map(|x| (0..pb.object.size()).find(|&p| pb.h_f.at(p) == x && pb.f_h.at(p) == x).unwrap())
        .collect();
    let diagonal = Morphism::new(f.dom.clone(), pb.object.clone(), diag)?;
    Ok(KernelPair { object: pb.object, f1: pb.h_f, f2: pb.f_h, diagonal })
}

/// Mediating morphism `T' → P` for a cone `(a: T' → X, b: T' → T)` over a
/// pullback, if the cone commutes.
pub fn mediate(pb: &Pullback, a: &Morphism, b: &Morphism) -> Option<Morphism> {
    if a.dom.size() != b.dom.size() {
        return None;
    }
    let map: Option<Vec<usize>> = (0..a.dom.size())
        .map(|s| (0..pb.object.size()).find(|&p| pb.h_f.at(p) == a.at(s) && pb.f_h.at(p) == b.at(s)))
        .collect();
    Morphism::new(a.dom.clone(), pb.object.clone(), map?).ok()
}

/// Every function between two finite sets, in lexicographic order of the map.
pub fn all_functions(x: &Obj, y: &Obj) -> Vec<Morphism> {
    let (n, m) = (x.size(), y.size());
    if n > 0 && m == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut map = alloc::vec![0usize; n];
    loop {
        out.push(Morphism { dom: x.clone(), cod: y.clone(), map: map.clone() });
        // odometer, last position fastest
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            map[i] += 1;
            if map[i] < m {
                break;
            }
            map[i] = 0;
        }
    }
}

/// Every group homomorphism `x → y`, determined by images of a greedy
/// generating set, in lexicographic order of generator images.
pub fn homomorphisms(x: &Obj, y: &Obj) -> Result<Vec<Morphism>> {
    let (g, h) = (x.as_group()?, y.as_group()?);
    let gens = g.generators();
    let mut out = Vec::new();
    let mut imgs = alloc::vec![0usize; gens.len()];
    loop {
        if let Some(map) = extend_hom(g, h, &gens, &imgs) {
            out.push(Morphism { dom: x.clone(), cod: y.clone(), map });
        }
        let mut i = gens.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            imgs[i] += 1;
            if imgs[i] < h.order() {
                break;
            }
            imgs[i] = 0;
        }
    }
}

fn extend_hom(g: &Group, h: &Group, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let mut map: Vec<Option<usize>> = alloc::vec![None; g.order()];
    map[0] = Some(0);
    let mut frontier = alloc::vec![0usize];
    while let Some(a) = frontier.pop() {
        let fa = map[a].unwrap();
        for (&s, &fs) in gens.iter().zip(imgs) {
            let b = g.mul(a, s);
            let fb = h.mul(fa, fs);
            match map[b] {
                None => {
                    map[b] = Some(fb);
                    frontier.push(b);
                }
                Some(v) if v != fb => return None,
                _ => {}
            }
        }
    }
    let map: Vec<usize> = map.into_iter().collect::<Option<_>>()?;
    for a in 0..g.order() {
        for b in 0..g.order() {
            if map[g.mul(a, b)] != h.mul(map[a], map[b]) {
                return None;
            }
        }
    }
    Some(map)
}

impl core::fmt::Display for Context {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

impl ContextObject {
    /// Short description, e.g. `{a,b}` or `Z4`.
    pub fn describe(&self) -> String {
        match &self.carrier {
            Carrier::Set(p) => format!("{{{}}}", p.join(",")),
            Carrier::Group(g) => g.name().to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(p: &[&str]) -> Obj {
        ContextObject::finset(p).unwrap()
    }

    fn fun(x: &Obj, y: &Obj, pairs: &[(&str, &str)]) -> Morphism {
        let mut map = alloc::vec![0; x.size()];
        for (a, b) in pairs {
            map[x.point(a).unwrap()] = y.point(b).unwrap();
        }
        Morphism::new(x.clone(), y.clone(), map).unwrap()
    }

    fn mod2() -> Morphism {
        let z4 = ContextObject::builtin_group("Z4").unwrap();
        let z2 = ContextObject::builtin_group("Z2").unwrap();
        Morphism::new(z4, z2, alloc::vec![0, 1, 0, 1]).unwrap()
    }

    #[test]
    fn set_image_and_preimage() {
        let (x, y) = (set(&["a", "b"]), set(&["u", "v"]));
        let f = fun(&x, &y, &[("a", "u"), ("b", "u")]);
        assert_eq!(y.label(f.image(x.parse("a").unwrap())), "u");
        assert_eq!(x.label(f.preimage(y.parse("u").unwrap())), "ab");
        let (e, m) = f.factorize().unwrap();
        assert_eq!(e.cod().point_labels(), ["u"]);
        assert!(e.is_surjective() && m.is_injective());
        assert_eq!(e.then(&m).unwrap(), f);
    }

    #[test]
    fn group_transport() {
        let f = mod2();
        let k = f.preimage(f.cod().lattice().bottom());
        assert_eq!(f.dom().label(k), "{0,2}");
        assert!(!f.reflects_zero());
        assert!(f.is_formally_surjective());
        let (e, m) = f.factorize().unwrap();
        assert!(m.is_bijective());
        assert_eq!(e.map(), f.map());
    }

    #[test]
    fn pullbacks_and_kernel_pairs() {
        let (x, u, c) = (set(&["a", "b"]), set(&["u"]), set(&["c"]));
        let f = fun(&x, &u, &[("a", "u"), ("b", "u")]);
        let h = fun(&c, &u, &[("c", "u")]);
        let pb = pullback(&f, &h).unwrap();
        assert_eq!(pb.object.point_labels(), ["a|c", "b|c"]);
        let kp = kernel_pair(&f).unwrap();
        assert_eq!(kp.object.size(), 4);
        assert_eq!(kp.object.label(kp.diagonal.image_of_top()), "a|a,b|b");

        let g = mod2();
        let kp = kernel_pair(&g).unwrap();
        assert_eq!(kp.object.size(), 8);
        assert!(kp.diagonal.is_injective());
        assert_eq!(kp.diagonal.then(&kp.f1).unwrap(), Morphism::identity(g.dom()));
    }

    #[test]
    fn products() {
        let (t, p) = product(Context::FinSet, &[]).unwrap();
        assert_eq!(t.size(), 1);
        assert!(p.is_empty());
        let z2 = ContextObject::builtin_group("Z2").unwrap();
        let (v, _) = product(Context::FinGrp, &[z2.clone(), z2]).unwrap();
        assert_eq!(v.lattice().len(), 5);
        let (x3, pr) = product(Context::FinSet, &[set(&["a", "b"]), set(&["u"]), set(&["p", "q"])]).unwrap();
        assert_eq!(x3.size(), 4);
        assert_eq!(pr.len(), 3);
        assert!(pr.iter().all(|p| p.is_surjective()));
    }

    #[test]
    fn homomorphism_counts() {
        let z4 = ContextObject::builtin_group("Z4").unwrap();
        let v = ContextObject::builtin_group("Z2xZ2").unwrap();
        let s3 = ContextObject::builtin_group("S3").unwrap();
        assert_eq!(homomorphisms(&z4, &z4).unwrap().len(), 4);
        assert_eq!(homomorphisms(&v, &v).unwrap().len(), 16);
        assert_eq!(homomorphisms(&s3, &s3).unwrap().len(), 10);
        assert_eq!(homomorphisms(&z4, &s3).unwrap().len(), 4);
    }

    #[test]
    fn function_enumeration() {
        let (x, y, e) = (set(&["a", "b"]), set(&["u", "v", "w"]), set(&[]));
        assert_eq!(all_functions(&x, &y).len(), 9);
        assert_eq!(all_functions(&e, &y).len(), 1);
        assert_eq!(all_functions(&x, &e).len(), 0);
    }

    #[test]
    fn formal_surjectivity_witness() {
        let (a, ab) = (set(&["a"]), set(&["a", "b"]));
        let i = fun(&a, &ab, &[("a", "a")]);
        assert_eq!(i.formal_surjectivity_witness().map(|y| ab.label(y)), Some("b".to_string()));
    }

    #[test]
    fn subgroup_labels_parse_in_any_order() {
        let s3 = ContextObject::builtin_group("S3").unwrap();
        let a = s3.parse("{(132),e,(123)}").unwrap();
        assert_eq!(s3.label(a), "{e,(123),(132)}");
        assert!(s3.parse("{e,(12),(13)}").is_err());
    }
}
