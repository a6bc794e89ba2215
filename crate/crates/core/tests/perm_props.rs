use normcover::Perm;
use proptest::prelude::*;

fn perm(max_degree: usize) -> impl Strategy<Value = Perm> {
    (1..=max_degree)
        .prop_flat_map(|n| Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn pair(max_degree: usize) -> impl Strategy<Value = (Perm, Perm)> {
    (1..=max_degree).prop_flat_map(|n| {
        let v: Vec<u32> = (0..n as u32).collect();
        (Just(v.clone()).prop_shuffle(), Just(v).prop_shuffle())
            .prop_map(|(a, b)| (Perm::from_images(a).unwrap(), Perm::from_images(b).unwrap()))
    })
}

fn triple(max_degree: usize) -> impl Strategy<Value = (Perm, Perm, Perm)> {
    (1..=max_degree).prop_flat_map(|n| {
        let v: Vec<u32> = (0..n as u32).collect();
        let one = move || {
            Just(v.clone())
                .prop_shuffle()
                .prop_map(|a| Perm::from_images(a).unwrap())
        };
        (one(), one(), one())
    })
}

proptest! {
    #[test]
    fn inverse_cancels(p in perm(12)) {
        prop_assert!(p.then(&p.inverse()).is_identity());
        prop_assert!(p.inverse().then(&p).is_identity());
    }

    #[test]
    fn then_applies_left_first((a, b) in pair(10), x in 0usize..10) {
        let x = x % a.degree();
        prop_assert_eq!(a.then(&b).apply(x), b.apply(a.apply(x)));
    }

    #[test]
    fn order_is_lcm_of_cycles(p in perm(12)) {
        let o = p.order();
        prop_assert!(p.pow(o).is_identity());
        let l = p.cycle_lengths().into_iter().fold(1u64, |acc, c| num_integer::lcm(acc, c as u64));
        prop_assert_eq!(o, l);
    }

    #[test]
    fn conjugation_is_homomorphism((a, b, g) in triple(9)) {
        let lhs = a.then(&b).conjugate_by(&g);
        let rhs = a.conjugate_by(&g).then(&b.conjugate_by(&g));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.conjugate_by(&g), g.inverse().then(&a).then(&g));
    }

    #[test]
    fn cycle_notation_round_trips(p in perm(12)) {
        let text = p.to_string();
        prop_assert_eq!(Perm::parse(&text, p.degree()).unwrap(), p.clone());
        let cycles: Vec<Vec<usize>> = p.cycles();
        prop_assert_eq!(Perm::from_cycles(p.degree(), &cycles).unwrap(), p);
    }

    #[test]
    fn parity_is_multiplicative((a, b) in pair(10)) {
        prop_assert_eq!(a.then(&b).is_even(), a.is_even() == b.is_even());
    }
}

#[test]
fn rejects_malformed_images() {
    assert!(Perm::from_images(vec![0, 0, 1]).is_err());
    assert!(Perm::from_images(vec![0, 3]).is_err());
    assert!(Perm::parse("(1,2", 3).is_err());
    assert!(Perm::parse("(1,4)", 3).is_err());
}
