use doodle_core::dual::{boundary_is_embedded_circle, doodle_from_dual, dual_graph};
use doodle_core::gauss::rebuild_from_gauss;
use doodle_core::{DoodleDiagram, TwinWord};
use proptest::prelude::*;

fn word() -> impl Strategy<Value = TwinWord> {
    (2usize..=5)
        .prop_flat_map(|k| (Just(k), prop::collection::vec(1..k, 0..=14)))
        .prop_map(|(k, letters)| TwinWord::new(k, letters).unwrap())
}

fn reduced_connected() -> impl Strategy<Value = DoodleDiagram> {
    word()
        .prop_map(|w| w.closure().reduce())
        .prop_filter("connected with crossings", |d| d.n() > 0 && d.is_connected() && d.floating_circles() == 0)
}

fn relabelling(n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(0usize..4, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduction_is_stable(w in word()) {
        let d = w.closure();
        let r = d.reduce();
        prop_assert!(r.is_plane());
        prop_assert!(!r.has_monogon_or_bigon());
        prop_assert_eq!(r.component_count(), d.component_count());
        prop_assert_eq!(r.reduce().canonical_key(), r.canonical_key());
    }

    #[test]
    fn normal_form_has_the_same_closure(w in word()) {
        let a = w.closure().reduce().canonical_key();
        let b = w.normalize().closure().reduce().canonical_key();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn key_ignores_labelling(
        (d, (perm, shift)) in reduced_connected().prop_flat_map(|d| { let n = d.n(); (Just(d), relabelling(n)) }),
        mirror in any::<bool>(),
    ) {
        let mut r = d.relabel(&perm, &shift);
        if mirror {
            r = r.mirror();
        }
        prop_assert_eq!(r.canonical_key(), d.canonical_key());
    }

    #[test]
    fn keys_decode(d in reduced_connected()) {
        let key = d.canonical_key();
        prop_assert_eq!(key.decode().unwrap().canonical_key(), key);
    }

    #[test]
    fn faces_and_gauss_round_trip(d in reduced_connected()) {
        let regions = d.trace_regions().unwrap();
        prop_assert_eq!(regions.len(), d.n() + 2);
        prop_assert_eq!(regions.iter().map(|r| r.size()).sum::<usize>(), 4 * d.n());
        let g = d.gauss_code().unwrap();
        prop_assert_eq!(rebuild_from_gauss(&g).unwrap().canonical_key(), d.canonical_key());
    }

    #[test]
    fn dual_round_trip(d in reduced_connected()) {
        for r in d.trace_regions().unwrap() {
            let Ok(g) = dual_graph(&d, &r) else { continue };
            if boundary_is_embedded_circle(&g) {
                prop_assert_eq!(doodle_from_dual(&g).unwrap().canonical_key(), d.canonical_key());
            }
        }
    }
}
