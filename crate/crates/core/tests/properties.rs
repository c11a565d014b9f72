mod common;

use bicyclic::morphisms::apply_aut;
use bicyclic::{CanonicalEndo, Element, EndoBase, Product, F2};
use proptest::prelude::*;

fn element(r: i64) -> impl Strategy<Value = Element> {
    (-r..=r, -r..=r, 0usize..2).prop_map(|(i, j, f)| Element::new(i, j, f))
}

fn endo() -> impl Strategy<Value = CanonicalEndo> {
    let bases = EndoBase::all_up_to(9);
    (0..bases.len(), -40i64..=40).prop_map(move |(b, t)| CanonicalEndo::new(bases[b], t))
}

proptest! {
    #[test]
    fn element_text_round_trips(i in any::<i64>(), j in any::<i64>(), f in 0usize..8) {
        let x = Element::new(i, j, f);
        prop_assert_eq!(x.to_string().parse::<Element>().unwrap(), x);
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Element>(&json).unwrap(), x);
    }

    #[test]
    fn endo_text_round_trips(e in endo()) {
        prop_assert_eq!(e.to_string().parse::<CanonicalEndo>().unwrap(), e);
    }

    #[test]
    fn product_agrees_with_oracle(x in element(15), y in element(15)) {
        prop_assert_eq!(F2.mul(x, y).unwrap(), common::f2_mul(x, y));
    }

    #[test]
    fn associative(x in element(1000), y in element(1000), z in element(1000)) {
        let l = F2.mul(F2.mul(x, y).unwrap(), z).unwrap();
        let r = F2.mul(x, F2.mul(y, z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn inverse_laws(x in element(1000)) {
        let inv = x.inverse();
        prop_assert_eq!(F2.mul(F2.mul(x, inv).unwrap(), x).unwrap(), x);
        prop_assert_eq!(F2.mul(F2.mul(inv, x).unwrap(), inv).unwrap(), inv);
        prop_assert!(F2.is_idempotent(F2.mul(x, inv).unwrap()));
    }

    #[test]
    fn endomorphisms_preserve_products(e in endo(), x in element(200), y in element(200)) {
        let lhs = e.apply(F2.mul(x, y).unwrap()).unwrap();
        let rhs = F2.mul(e.apply(x).unwrap(), e.apply(y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn endomorphisms_are_injective(e in endo(), x in element(200), y in element(200)) {
        prop_assume!(x != y);
        prop_assert_ne!(e.apply(x).unwrap(), e.apply(y).unwrap());
    }

    #[test]
    fn twists_add(t1 in -1000i64..1000, t2 in -1000i64..1000, x in element(1000)) {
        let stepwise = apply_aut(t2, apply_aut(t1, x).unwrap()).unwrap();
        prop_assert_eq!(stepwise, apply_aut(t1 + t2, x).unwrap());
    }

    #[test]
    fn decomposition_recomposes(e in endo(), x in element(100)) {
        prop_assert_eq!(e.decompose().recompose(x).unwrap(), e.apply(x).unwrap());
    }

    #[test]
    fn automorphisms_invert(t in -1000i64..1000, x in element(1000)) {
        let a = CanonicalEndo::automorphism(t);
        let back = a.invert_automorphism().unwrap();
        prop_assert_eq!(back.apply(a.apply(x).unwrap()).unwrap(), x);
    }

    #[test]
    fn order_is_the_idempotent_order(x in element(3), y in element(3)) {
        let search = common::window(6, 2);
        prop_assert_eq!(F2.nat_leq(x, y), common::leq_by_search(x, y, &search));
    }
}

#[test]
fn overflow_is_reported_not_wrapped() {
    let big = Element::new(i64::MAX, 0, 0);
    assert!(F2.mul(Element::new(0, -1, 0), big).is_err());
    assert!(apply_aut(2, big).is_err());
    let doubling = CanonicalEndo::new(EndoBase::alpha(2, 1).unwrap(), 0);
    assert!(doubling.apply(big).is_err());
}
