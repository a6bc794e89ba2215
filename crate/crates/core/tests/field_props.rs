use normcover::field::{prime_power, Field};
use proptest::prelude::*;

const ORDERS: [u32; 10] = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27];

proptest! {
    #[test]
    fn field_axioms(qi in 0usize..ORDERS.len(), a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
        let f = Field::new(ORDERS[qi]).unwrap();
        let q = f.order();
        let (a, b, c) = ((a % q) as _, (b % q) as _, (c % q) as _);
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.from_int(0));
        if a != f.from_int(0) {
            prop_assert_eq!(f.mul(a, f.inv(a)), f.from_int(1));
        }
    }

    #[test]
    fn frobenius_is_automorphism(qi in 0usize..ORDERS.len(), a in 0u32..1000, b in 0u32..1000) {
        let f = Field::new(ORDERS[qi]).unwrap();
        let q = f.order();
        let (a, b) = ((a % q) as _, (b % q) as _);
        prop_assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
        prop_assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
        prop_assert_eq!(f.frobenius(a, f.degree()), a);
        prop_assert_eq!(f.frobenius(a, 1), f.pow(a, f.characteristic() as u64));
    }
}

#[test]
fn primitive_element_generates() {
    for q in ORDERS {
        let f = Field::new(q).unwrap();
        let w = f.primitive();
        let mut seen = std::collections::HashSet::new();
        for k in 0..(q - 1) as u64 {
            seen.insert(f.pow(w, k));
            assert_eq!(f.log(f.exp(k)) as u64, k);
        }
        assert_eq!(seen.len() as u32, q - 1);
    }
    assert_eq!(prime_power(49), Some((7, 2)));
    assert_eq!(prime_power(12), None);
    assert!(Field::new(6).is_err());
}
