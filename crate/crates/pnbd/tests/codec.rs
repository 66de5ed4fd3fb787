//! Instance files round-trip every built-in system and morphism case.

use std::sync::OnceLock;

use proptest::prelude::*;

use pnbd::laws::{Case, Shape};
use pnbd::parse_instance;
use pnbd::universe::finset_universe;

fn spaces() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| finset_universe(Shape::Space, 3).unwrap())
}

fn morphisms() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| finset_universe(Shape::Mor, 2).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn systems_round_trip(i in any::<prop::sample::Index>()) {
        let all = spaces();
        let Case::Space(s) = &all[i.index(all.len())] else { unreachable!() };
        let text = Case::Space(s.clone()).to_instance().to_json();
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back.systems[0].1, s);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn morphisms_round_trip(i in any::<prop::sample::Index>()) {
        let all = morphisms();
        let case = &all[i.index(all.len())];
        let Case::Mor { f, .. } = case else { unreachable!() };
        let back = parse_instance(&case.to_instance().to_json()).unwrap();
        prop_assert_eq!(back.morphism("f").unwrap().map(), f.map());
    }
}
