//! Case universes: the built-in bounded enumeration and the cases derived
//! from an instance file.

use pnbd_core::classify::morphisms_between;
use pnbd_core::context::{same_object, ContextObject};
use pnbd_core::endomap::enumerate_endomaps;
use pnbd_core::group::BUILTIN_GROUPS;
use pnbd_core::{Canonical, Group, Obj, PreNbdSystem, Result};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::instance::Instance;
use crate::laws::{Case, Shape};

/// Points of the built-in finite sets.
const POINTS: [&str; 3] = ["a", "b", "c"];

/// Number of sampled system pairs on the three-point set.
pub const SAMPLED_PAIRS: usize = 16_384;

/// Largest group order in the built-in space, map and morphism universes.
const GROUP_ORDER: usize = 8;
/// Largest group order in the built-in composition universe.
const COMPOSE_GROUP_ORDER: usize = 4;
/// Largest carrier of a binary product formed from file systems.
const MAX_FILE_PRODUCT: usize = 16;

pub fn finset(n: usize) -> Obj {
    ContextObject::finset(&POINTS[..n]).expect("built-in set")
}

fn groups(max_order: usize) -> Vec<Obj> {
    BUILTIN_GROUPS
        .iter()
        .map(|n| ContextObject::group(Group::builtin(n).expect("built-in group")).expect("built-in group"))
        .filter(|o| o.size() <= max_order)
        .collect()
}

/// Every preneighbourhood system on `obj`, grounded or not.
pub fn all_systems(obj: &Obj) -> Result<Vec<PreNbdSystem>> {
    enumerate_endomaps(obj.lattice(), false, 1 << 20)?.into_iter().map(|c| PreNbdSystem::new(obj.clone(), c)).collect()
}

/// The canonical systems used for groups: ν, ↑ and optionally ∇, without
/// duplicates.
fn group_systems(obj: &Obj, with_nabla: bool) -> Result<Vec<PreNbdSystem>> {
    let mut out = vec![PreNbdSystem::nu(obj)?, PreNbdSystem::canonical(obj, Canonical::Discrete)];
    if with_nabla {
        out.push(PreNbdSystem::canonical(obj, Canonical::Indiscrete));
    }
    let mut dedup: Vec<PreNbdSystem> = Vec::new();
    for s in out {
        if !dedup.contains(&s) {
            dedup.push(s);
        }
    }
    Ok(dedup)
}

/// The built-in universe of one shape. The seed only affects the sampled
/// three-point pairs.
pub fn builtin(shape: Shape, seed: u64) -> Result<Vec<Case>> {
    let sets: Vec<Obj> = (0..=3).map(finset).collect();
    let small_sets = &sets[..3];
    let mut out = Vec::new();
    match shape {
        Shape::Space => {
            for x in &sets {
                out.extend(all_systems(x)?.into_iter().map(Case::Space));
            }
            for g in groups(GROUP_ORDER) {
                out.extend(group_systems(&g, false)?.into_iter().map(Case::Space));
            }
        }
        Shape::Pair => {
            for x in small_sets {
                let s = all_systems(x)?;
                for a in &s {
                    for b in &s {
                        out.push(Case::Pair(a.clone(), b.clone()));
                    }
                }
            }
            let s = all_systems(&sets[3])?;
            let n = s.len() * s.len();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picks: Vec<usize> = sample(&mut rng, n, SAMPLED_PAIRS.min(n)).into_vec();
            picks.sort_unstable();
            for i in picks {
                out.push(Case::Pair(s[i / s.len()].clone(), s[i % s.len()].clone()));
            }
            for g in groups(GROUP_ORDER) {
                let s = group_systems(&g, false)?;
                for a in &s {
                    for b in &s {
                        out.push(Case::Pair(a.clone(), b.clone()));
                    }
                }
            }
        }
        Shape::Map => {
            for x in &sets {
                for y in &sets {
                    out.extend(morphisms_between(x, y)?.into_iter().map(Case::Map));
                }
            }
            let gs = groups(GROUP_ORDER);
            for x in &gs {
                for y in &gs {
                    out.extend(morphisms_between(x, y)?.into_iter().map(Case::Map));
                }
            }
        }
        Shape::Mor => {
            mor_cases(small_sets, all_systems, &mut out)?;
            mor_cases(&groups(GROUP_ORDER), |o| group_systems(o, true), &mut out)?;
        }
        Shape::Compose => {
            compose_cases(small_sets, all_systems, &mut out)?;
            compose_cases(&groups(COMPOSE_GROUP_ORDER), |o| group_systems(o, true), &mut out)?;
        }
        Shape::Product => {
            let factors: Vec<Vec<PreNbdSystem>> = sets[1..3].iter().map(all_systems).collect::<Result<_>>()?;
            let spaces: Vec<&PreNbdSystem> = factors.iter().flatten().collect();
            for a in &spaces {
                for b in &spaces {
                    out.push(Case::Product(vec![(*a).clone(), (*b).clone()]));
                }
            }
            // ternary products only over single-point and discrete factors
            let ternary: Vec<&PreNbdSystem> =
                spaces.iter().copied().filter(|s| s.object().size() == 1 || s.classify().is_nbd).collect();
            for a in &ternary {
                for b in &ternary {
                    for c in &ternary {
                        out.push(Case::Product(vec![(*a).clone(), (*b).clone(), (*c).clone()]));
                    }
                }
            }
            let gs = groups(GROUP_ORDER);
            for x in &gs {
                for y in &gs {
                    if x.size() * y.size() > 16 {
                        continue;
                    }
                    for a in group_systems(x, false)? {
                        for b in group_systems(y, false)? {
                            out.push(Case::Product(vec![a.clone(), b]));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn mor_cases(objs: &[Obj], systems: impl Fn(&Obj) -> Result<Vec<PreNbdSystem>>, out: &mut Vec<Case>) -> Result<()> {
    let sys: Vec<Vec<PreNbdSystem>> = objs.iter().map(&systems).collect::<Result<_>>()?;
    for (i, x) in objs.iter().enumerate() {
        for (j, y) in objs.iter().enumerate() {
            for f in morphisms_between(x, y)? {
                for mu in &sys[i] {
                    for phi in &sys[j] {
                        out.push(Case::Mor { f: f.clone(), mu: mu.clone(), phi: phi.clone() });
                    }
                }
            }
        }
    }
    Ok(())
}

fn compose_cases(objs: &[Obj], systems: impl Fn(&Obj) -> Result<Vec<PreNbdSystem>>, out: &mut Vec<Case>) -> Result<()> {
    let sys: Vec<Vec<PreNbdSystem>> = objs.iter().map(&systems).collect::<Result<_>>()?;
    let homs: Vec<Vec<Vec<pnbd_core::Morphism>>> = objs
        .iter()
        .map(|x| objs.iter().map(|y| morphisms_between(x, y)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    for i in 0..objs.len() {
        for j in 0..objs.len() {
            for k in 0..objs.len() {
                for f in &homs[i][j] {
                    for g in &homs[j][k] {
                        for mu in &sys[i] {
                            for phi in &sys[j] {
                                for psi in &sys[k] {
                                    out.push(Case::Compose {
                                        f: f.clone(),
                                        g: g.clone(),
                                        mu: mu.clone(),
                                        phi: phi.clone(),
                                        psi: psi.clone(),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Cases of one shape built from the systems and morphisms of a file:
/// every ordered combination (with repetition) that fits together.
pub fn from_instance(inst: &Instance, shape: Shape) -> Vec<Case> {
    let systems: Vec<&PreNbdSystem> = inst.systems.iter().map(|(_, s)| s).collect();
    let on =
        |o: &Obj| -> Vec<&PreNbdSystem> { systems.iter().copied().filter(|s| same_object(s.object(), o)).collect() };
    let mut out = Vec::new();
    match shape {
        Shape::Space => out.extend(systems.iter().map(|s| Case::Space((*s).clone()))),
        Shape::Pair => {
            for a in &systems {
                for b in on(a.object()) {
                    out.push(Case::Pair((*a).clone(), b.clone()));
                }
            }
        }
        Shape::Map => out.extend(inst.morphisms.iter().map(|(_, f)| Case::Map(f.clone()))),
        Shape::Mor => {
            for (_, f) in &inst.morphisms {
                for mu in on(f.dom()) {
                    for phi in on(f.cod()) {
                        out.push(Case::Mor { f: f.clone(), mu: mu.clone(), phi: phi.clone() });
                    }
                }
            }
        }
        Shape::Compose => {
            for (_, f) in &inst.morphisms {
                for (_, g) in inst.morphisms.iter().filter(|(_, g)| same_object(g.dom(), f.cod())) {
                    for mu in on(f.dom()) {
                        for phi in on(f.cod()) {
                            for psi in on(g.cod()) {
                                out.push(Case::Compose {
                                    f: f.clone(),
                                    g: g.clone(),
                                    mu: mu.clone(),
                                    phi: phi.clone(),
                                    psi: psi.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
        Shape::Product => {
            let nonempty: Vec<&PreNbdSystem> = systems.iter().copied().filter(|s| s.object().size() > 0).collect();
            for a in &nonempty {
                for b in &nonempty {
                    if a.object().size() * b.object().size() <= MAX_FILE_PRODUCT {
                        out.push(Case::Product(vec![(*a).clone(), (*b).clone()]));
                    }
                }
            }
        }
    }
    out
}

/// Exhaustive finite-set cases of one shape on sets with at most
/// `max_points` points, in canonical order (smaller carriers first).
pub fn finset_universe(shape: Shape, max_points: usize) -> Result<Vec<Case>> {
    let sets: Vec<Obj> = (0..=max_points).map(finset).collect();
    let mut out = Vec::new();
    match shape {
        Shape::Space => {
            for x in &sets {
                out.extend(all_systems(x)?.into_iter().map(Case::Space));
            }
        }
        Shape::Pair => {
            for x in &sets {
                let s = all_systems(x)?;
                for a in &s {
                    for b in &s {
                        out.push(Case::Pair(a.clone(), b.clone()));
                    }
                }
            }
        }
        Shape::Map => {
            for x in &sets {
                for y in &sets {
                    out.extend(morphisms_between(x, y)?.into_iter().map(Case::Map));
                }
            }
        }
        Shape::Mor => mor_cases(&sets, all_systems, &mut out)?,
        Shape::Compose => compose_cases(&sets, all_systems, &mut out)?,
        Shape::Product => {
            let spaces: Vec<PreNbdSystem> =
                sets[1..].iter().map(all_systems).collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
            for a in &spaces {
                for b in &spaces {
                    out.push(Case::Product(vec![a.clone(), b.clone()]));
                }
            }
        }
    }
    Ok(out)
}
