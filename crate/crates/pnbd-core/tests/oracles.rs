//! Independent oracles for derived counts and for the fast algorithms.
//! Every oracle here works on raw bitmasks or on the lattice order alone.

use std::collections::BTreeSet;

use pnbd_core::closure::closure;
use pnbd_core::context::{all_functions, mediate, pullback, ContextObject};
use pnbd_core::endomap::enumerate_endomaps;
use pnbd_core::filter::{imgfil, invfil};
use pnbd_core::group::BUILTIN_GROUPS;
use pnbd_core::{Canonical, Filter, Morphism, Obj, PreNbdSystem};

const POINTS: [&str; 4] = ["a", "b", "c", "d"];

fn set(n: usize) -> Obj {
    ContextObject::finset(&POINTS[..n]).unwrap()
}

fn systems(obj: &Obj, grounded: bool) -> Vec<PreNbdSystem> {
    enumerate_endomaps(obj.lattice(), grounded, 1 << 20)
        .unwrap()
        .into_iter()
        .map(|c| PreNbdSystem::new(obj.clone(), c).unwrap())
        .collect()
}

/// Generator tables of a system as subset masks, indexed by subset mask.
fn mask_table(s: &PreNbdSystem) -> Vec<u64> {
    let obj = s.object();
    let mut t = vec![0; 1 << obj.size()];
    for x in obj.lattice().elements() {
        t[obj.mask(x) as usize] = obj.mask(s.g(x));
    }
    t
}

/// All monotone extensional maps on the subsets of an `n`-point set, by
/// brute force over every table.
fn brute_force_endomaps(n: usize, grounded: bool) -> BTreeSet<Vec<u64>> {
    let size = 1usize << n;
    let mut out = BTreeSet::new();
    let total = (size as u64).pow(size as u32);
    for code in 0..total {
        let mut c = code;
        let table: Vec<u64> = (0..size)
            .map(|_| {
                let v = c % size as u64;
                c /= size as u64;
                v
            })
            .collect();
        let extensional = (0..size).all(|x| table[x] & x as u64 == x as u64);
        let monotone = (0..size).all(|x| (0..size).all(|y| x & y != x || table[x] & table[y] == table[x]));
        if extensional && monotone && (!grounded || table[0] == 0) {
            out.insert(table);
        }
    }
    out
}

#[test]
fn two_point_systems_match_the_brute_force_filter() {
    let oracle = brute_force_endomaps(2, false);
    assert_eq!(oracle.len(), 9);
    let lib: BTreeSet<Vec<u64>> = systems(&set(2), false).iter().map(mask_table).collect();
    assert_eq!(lib, oracle);
    let grounded: BTreeSet<Vec<u64>> = systems(&set(2), true).iter().map(mask_table).collect();
    assert_eq!(grounded, brute_force_endomaps(2, true));
    assert_eq!(grounded.len(), 4);
}

#[test]
fn small_system_counts() {
    assert_eq!(systems(&set(0), false).len(), 1);
    assert_eq!(systems(&set(1), false).len(), 2);
    assert_eq!(systems(&set(3), false).len(), 216);
}

/// Every topology on `n` points as a set of open-set masks.
fn topologies(n: usize) -> BTreeSet<BTreeSet<u64>> {
    let size = 1usize << n;
    let full = size as u64 - 1;
    let mut out = BTreeSet::new();
    for family in 0u64..1 << size {
        let open = |m: u64| family >> m & 1 == 1;
        if !open(0) || !open(full) {
            continue;
        }
        let members: Vec<u64> = (0..size as u64).filter(|&m| open(m)).collect();
        if members.iter().all(|&a| members.iter().all(|&b| open(a | b) && open(a & b))) {
            out.insert(members.into_iter().collect());
        }
    }
    out
}

fn open_sets(s: &PreNbdSystem) -> BTreeSet<u64> {
    let obj = s.object();
    obj.lattice().elements().filter(|&u| s.is_open(u)).map(|u| obj.mask(u)).collect()
}

#[test]
fn neighbourhood_systems_are_the_topologies() {
    for (n, expected) in [(2, 4), (3, 29)] {
        let oracle = topologies(n);
        assert_eq!(oracle.len(), expected);
        let nbd: Vec<PreNbdSystem> = systems(&set(n), true).into_iter().filter(|s| s.classify().is_nbd).collect();
        assert_eq!(nbd.len(), expected, "{n} points");
        let opens: BTreeSet<BTreeSet<u64>> = nbd.iter().map(open_sets).collect();
        assert_eq!(opens, oracle, "{n} points");
    }
}

/// The closure read literally: join every `x ≠ top` all of whose
/// neighbourhoods `u ⊇ g(x)` meet `p`.
fn literal_closure(s: &PreNbdSystem, p: u32) -> u32 {
    let l = s.object().lattice();
    let qualifying = l
        .elements()
        .filter(|&x| x != l.top() && l.elements().filter(|&u| l.leq(s.g(x), u)).all(|u| l.meet(u, p) != l.bottom()));
    l.join_all(qualifying)
}

fn check_closure_against_oracle(s: &PreNbdSystem) {
    for p in s.object().lattice().elements() {
        assert_eq!(closure(s, p), literal_closure(s, p), "{} at {}", s.describe(), s.object().label(p));
    }
}

#[test]
fn closure_matches_the_literal_definition_on_sets() {
    for n in 0..=3 {
        for s in systems(&set(n), false) {
            check_closure_against_oracle(&s);
        }
    }
}

#[test]
fn closure_matches_the_literal_definition_on_groups() {
    for name in BUILTIN_GROUPS {
        let obj = ContextObject::builtin_group(name).unwrap();
        for s in [
            PreNbdSystem::nu(&obj).unwrap(),
            PreNbdSystem::canonical(&obj, Canonical::Discrete),
            PreNbdSystem::canonical(&obj, Canonical::Indiscrete),
        ] {
            check_closure_against_oracle(&s);
        }
    }
}

#[test]
fn discrete_closure_on_z4_misses_the_top() {
    let z4 = ContextObject::builtin_group("Z4").unwrap();
    let up = PreNbdSystem::canonical(&z4, Canonical::Discrete);
    let top = z4.lattice().top();
    assert_eq!(z4.label(closure(&up, top)), "{0,2}");
}

/// Filters of a powerset as explicit sets of masks.
fn filter_masks(f: &Filter, obj: &Obj) -> BTreeSet<u64> {
    obj.lattice().elements().filter(|&u| f.contains(u)).map(|u| obj.mask(u)).collect()
}

fn principal_masks(gen: u64, n: usize) -> BTreeSet<u64> {
    (0..1u64 << n).filter(|&u| u & gen == gen).collect()
}

#[test]
fn filter_transport_matches_set_definitions() {
    for (n, m) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 1)] {
        let (x, y) = (set(n), set(m));
        for f in all_functions(&x, &y) {
            let pre = |v: u64| f.preimage_mask(v);
            for a in x.lattice().elements() {
                let fa = Filter::principal(x.lattice().clone(), a).unwrap();
                let oracle: BTreeSet<u64> =
                    (0..1u64 << m).filter(|&v| principal_masks(x.mask(a), n).contains(&pre(v))).collect();
                assert_eq!(filter_masks(&imgfil(&f, &fa).unwrap(), &y), oracle);
            }
            for b in y.lattice().elements() {
                let fb = Filter::principal(y.lattice().clone(), b).unwrap();
                let oracle: BTreeSet<u64> = (0..1u64 << n)
                    .filter(|&u| principal_masks(y.mask(b), m).iter().any(|&v| pre(v) & u == pre(v)))
                    .collect();
                assert_eq!(filter_masks(&invfil(&f, &fb).unwrap(), &x), oracle);
            }
        }
    }
}

#[test]
fn inverse_filter_image_is_left_adjoint() {
    for (n, m) in [(2, 2), (2, 3), (3, 2)] {
        let (x, y) = (set(n), set(m));
        for f in all_functions(&x, &y) {
            for a in x.lattice().elements() {
                let fa = Filter::principal(x.lattice().clone(), a).unwrap();
                let img = filter_masks(&imgfil(&f, &fa).unwrap(), &y);
                for b in y.lattice().elements() {
                    let fb = Filter::principal(y.lattice().clone(), b).unwrap();
                    let inv = filter_masks(&invfil(&f, &fb).unwrap(), &x);
                    let left = inv.is_subset(&filter_masks(&fa, &x));
                    let right = filter_masks(&fb, &y).is_subset(&img);
                    assert_eq!(left, right, "{:?} a={} b={}", f.map(), x.label(a), y.label(b));
                }
            }
        }
    }
}

#[test]
fn pullbacks_have_the_universal_property() {
    let (x, y, z) = (set(2), set(3), set(2));
    let cones: Vec<Obj> = (1..=2).map(set).collect();
    for f in all_functions(&x, &z) {
        for h in all_functions(&y, &z) {
            let pb = pullback(&f, &h).unwrap();
            let expected =
                (0..2).flat_map(|a| (0..3).map(move |b| (a, b))).filter(|&(a, b)| f.at(a) == h.at(b)).count();
            assert_eq!(pb.object.size(), expected);
            let fh = pb.h_f.then(&f).unwrap();
            let hf = pb.f_h.then(&h).unwrap();
            assert_eq!(fh.map(), hf.map(), "pullback square commutes");
            for t in &cones {
                for a in all_functions(t, &x) {
                    for b in all_functions(t, &y) {
                        let commutes = a.then(&f).unwrap().map() == b.then(&h).unwrap().map();
                        match mediate(&pb, &a, &b) {
                            Some(u) => {
                                assert!(commutes);
                                assert_eq!(u.then(&pb.h_f).unwrap().map(), a.map());
                                assert_eq!(u.then(&pb.f_h).unwrap().map(), b.map());
                                // uniqueness: no other map into the pullback has the same legs
                                let others = all_functions(t, &pb.object)
                                    .into_iter()
                                    .filter(|v: &Morphism| {
                                        v.then(&pb.h_f).unwrap().map() == a.map()
                                            && v.then(&pb.f_h).unwrap().map() == b.map()
                                    })
                                    .count();
                                assert_eq!(others, 1);
                            }
                            None => assert!(!commutes),
                        }
                    }
                }
            }
        }
    }
}
