use proptest::prelude::*;
use specprime::dot::{export_dot, SpaceKind};
use specprime::input::{InputSpec, RingSpec};
use specprime_core::{Correspondence, FiniteRing};

fn small_ring() -> impl Strategy<Value = RingSpec> {
    let zmod = (2usize..=24).prop_map(|n| RingSpec::Zmod { n });
    let poly = (prop_oneof![Just(2u64), Just(3)], prop::collection::vec(0i64..3, 1..=2)).prop_map(|(p, mut m)| {
        m.push(1);
        RingSpec::Polyquot { p, modulus: m }
    });
    let factor = prop_oneof![zmod.clone(), poly];
    prop_oneof![
        zmod,
        prop::collection::vec(factor, 2..=3).prop_filter_map("at most 64 elements", |factors| {
            let product = RingSpec::Product { factors };
            product.build().ok().filter(|r: &FiniteRing| r.len() <= 64).map(|_| product)
        })
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn schemas_round_trip(spec in small_ring()) {
        let input: InputSpec = spec.into();
        let text = serde_json::to_string(&input).unwrap();
        prop_assert_eq!(serde_json::from_str::<InputSpec>(&text).unwrap(), input);
    }

    #[test]
    fn dot_output_is_stable_and_complete(spec in small_ring()) {
        let ring = spec.build().unwrap();
        let c = Correspondence::new(&ring);
        let input = InputSpec::from(spec).build().unwrap();
        let sizes = [
            (SpaceKind::Spec, c.space().spectrum().len(), c.space().spectrum().order().covers().len()),
            (SpaceKind::Sprimes, c.space().len(), c.space().order().covers().len()),
            (SpaceKind::Xspace, c.xspace().len(), c.xspace().order().covers().len()),
        ];
        for (space, nodes, edges) in sizes {
            let a = export_dot(&input, space).unwrap();
            prop_assert_eq!(&a, &export_dot(&input, space).unwrap());
            prop_assert_eq!(a.matches("[label=").count(), nodes);
            prop_assert_eq!(a.matches(" -> ").count(), edges);
        }
    }
}
