//! Property tests over random systems on small powersets.

use proptest::prelude::*;

use pnbd_core::closure::{closure, closure_oracle, is_closed};
use pnbd_core::context::ContextObject;
use pnbd_core::{EndoMap, Obj, PreNbdSystem};

const POINTS: [&str; 4] = ["a", "b", "c", "d"];

fn set(n: usize) -> Obj {
    ContextObject::finset(&POINTS[..n]).unwrap()
}

/// Turns arbitrary raw values into a monotone extensional map:
/// `c(x) = x ∨ ⋁{raw(y) : y ≤ x}`.
fn repair(obj: &Obj, raw: &[u32], grounded: bool) -> EndoMap {
    let l = obj.lattice().clone();
    let n = l.len() as u32;
    EndoMap::from_fn(l.clone(), |x| {
        let below = l.elements().filter(|&y| l.leq(y, x) && !(grounded && y == l.bottom()));
        l.join(x, l.join_all(below.map(|y| raw[y as usize] % n)))
    })
}

fn endomap(grounded: bool) -> impl Strategy<Value = (Obj, EndoMap)> {
    (0usize..=4).prop_flat_map(move |n| {
        let size = 1usize << n;
        proptest::collection::vec(any::<u32>(), size).prop_map(move |raw| {
            let obj = set(n);
            let c = repair(&obj, &raw, grounded);
            (obj, c)
        })
    })
}

fn system(grounded: bool) -> impl Strategy<Value = PreNbdSystem> {
    endomap(grounded).prop_map(|(obj, c)| PreNbdSystem::new(obj, c).unwrap())
}

proptest! {
    #[test]
    fn repaired_maps_are_valid((_, c) in endomap(false)) {
        prop_assert!(c.validate_pre().is_ok());
    }

    #[test]
    fn fast_closure_agrees_with_the_oracle(s in system(false)) {
        for p in s.object().lattice().elements() {
            prop_assert_eq!(closure(&s, p), closure_oracle(&s, p));
        }
    }

    #[test]
    fn closure_is_monotone(s in system(false)) {
        let l = s.object().lattice();
        for p in l.elements() {
            for q in l.elements().filter(|&q| l.leq(p, q)) {
                prop_assert!(l.leq(closure(&s, p), closure(&s, q)));
            }
        }
    }

    #[test]
    fn grounded_closure_fixes_the_bottom(s in system(true)) {
        let l = s.object().lattice();
        prop_assert_eq!(closure(&s, l.bottom()), l.bottom());
        prop_assert!(is_closed(&s, l.bottom()));
    }

    #[test]
    fn closure_is_extensional_below_the_top(s in system(false)) {
        let l = s.object().lattice();
        for p in l.elements().filter(|&p| p != l.top()) {
            prop_assert!(l.leq(p, closure(&s, p)));
        }
    }

    #[test]
    fn psi_after_phi_is_the_identity((obj, c) in endomap(false)) {
        let back = PreNbdSystem::phi(&obj, &c).unwrap().psi();
        prop_assert_eq!(back.values(), c.values());
    }

    #[test]
    fn phi_is_right_adjoint_to_psi(mu in system(false), raw in proptest::collection::vec(any::<u32>(), 16)) {
        let obj = mu.object().clone();
        let c = repair(&obj, &raw, false);
        let phi = PreNbdSystem::phi(&obj, &c).unwrap();
        prop_assert_eq!(mu.leq(&phi).unwrap(), c.pointwise_leq(&mu.psi()));
    }

    #[test]
    fn lattice_laws(n in 0usize..=4, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let obj = set(n);
        let l = obj.lattice();
        let m = l.len() as u32;
        let (a, b, c) = (a % m, b % m, c % m);
        prop_assert_eq!(l.meet(a, b), l.meet(b, a));
        prop_assert_eq!(l.join(a, l.join(b, c)), l.join(l.join(a, b), c));
        prop_assert_eq!(l.meet(a, l.join(a, b)), a);
        prop_assert_eq!(l.leq(a, b), l.meet(a, b) == a);
        prop_assert_eq!(obj.mask(l.meet(a, b)), obj.mask(a) & obj.mask(b));
        prop_assert_eq!(obj.mask(l.join(a, b)), obj.mask(a) | obj.mask(b));
        let star = l.pseudocomplement(a).unwrap();
        prop_assert_eq!(obj.mask(star), !obj.mask(a) & ((1u64 << n) - 1));
    }
}
