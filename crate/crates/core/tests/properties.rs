use ncsym::partition::{concat_fiber, type_of};
use ncsym::{Algebra, Basis, Element, SetPartition};
use num_bigint::BigInt;
use proptest::prelude::*;

fn partition(max: usize) -> impl Strategy<Value = SetPartition> {
    prop::collection::vec(0u32..max as u32, 0..=max).prop_map(|w| type_of(&w))
}

fn pair_same_size(max: usize) -> impl Strategy<Value = (SetPartition, SetPartition)> {
    (0..=max).prop_flat_map(|n| {
        let side = prop::collection::vec(0u32..n.max(1) as u32, n).prop_map(|w| type_of(&w));
        (side.clone(), side)
    })
}

fn element(basis: Basis, max: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((partition(max), -5i64..=5), 0..4)
        .prop_map(move |ts| Element::from_terms(basis, ts.into_iter().map(|(a, c)| (a, BigInt::from(c)))))
}

proptest! {
    #[test]
    fn meet_and_join_are_bounds((a, b) in pair_same_size(7)) {
        let m = a.meet(&b).unwrap();
        let j = a.join(&b).unwrap();
        prop_assert!(m.refines(&a).unwrap() && m.refines(&b).unwrap());
        prop_assert!(a.refines(&j).unwrap() && b.refines(&j).unwrap());
        // absorption
        prop_assert_eq!(a.meet(&a.join(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.join(&a.meet(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.refines(&b).unwrap(), m == a);
    }

    #[test]
    fn concat_then_split(a in partition(5), b in partition(5)) {
        let c = a.concat(&b);
        prop_assert_eq!(c.split(a.size()).unwrap(), Some((a.clone(), b.clone())));
        prop_assert_eq!(c.cut(a.size()).unwrap(), (a.clone(), b.clone()));
        for f in concat_fiber(&a, &b) {
            prop_assert_eq!(f.cut(a.size()).unwrap(), (a.clone(), b.clone()));
        }
    }

    #[test]
    fn text_and_json_round_trip(a in partition(8)) {
        prop_assert_eq!(a.to_string().parse::<SetPartition>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<SetPartition>(&json).unwrap(), a);
    }

    #[test]
    fn basis_changes_round_trip(e in element(Basis::M, 5)) {
        for target in Basis::ALL {
            prop_assert_eq!(e.convert(target).convert(Basis::M), e.clone());
        }
    }

    #[test]
    fn products_agree_across_bases(a in element(Basis::X, 3), b in element(Basis::M, 3)) {
        let direct = a.convert(Basis::M).multiply(&b).unwrap();
        let via_p = a.convert(Basis::P).multiply(&b.convert(Basis::P)).unwrap();
        prop_assert_eq!(via_p.convert(Basis::M), direct);
    }

    #[test]
    fn element_json_round_trip(e in element(Basis::P, 4)) {
        let json = serde_json::to_string(&e).unwrap();
        prop_assert_eq!(serde_json::from_str::<Element>(&json).unwrap(), e);
    }

    #[test]
    fn tensor_of_simples_is_a_single_label((a, b) in pair_same_size(5)) {
        for alg in [Algebra::Meet, Algebra::Join] {
            let t = alg.tensor_simple(&a, &b);
            prop_assert_eq!(t.terms().len(), 1);
            prop_assert_eq!(t.clone(), alg.tensor_simple(&b, &a));
        }
    }
}
