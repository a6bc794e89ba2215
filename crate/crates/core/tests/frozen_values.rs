//! Values computed once and frozen. Small cases are cross-checked against
//! the brute-force oracle in `cover_props.rs` and in the `oracle` check.

use normcover::constructions::examples::{gamma_squared_example, sl2_wreath_example, DEFAULT_SEED};
use normcover::constructions::named::{alt, m10, pgammal_2_9, pgl2, psl2, sym};
use normcover::cover::{gamma, sigma, Value};
use normcover::lattice::all_subgroups;
use normcover::Caps;

#[test]
fn subgroup_counts() {
    let caps = Caps::default();
    let counts: Vec<usize> = (3..=6)
        .map(|n| all_subgroups(&sym(n).unwrap(), &caps).unwrap().len())
        .collect();
    assert_eq!(counts, [6, 30, 156, 1455]);
    assert_eq!(all_subgroups(&alt(5).unwrap(), &caps).unwrap().len(), 59);
}

#[test]
fn sigma_values() {
    let caps = Caps::default();
    let cases = [
        (sym(4).unwrap(), 4),
        (sym(5).unwrap(), 16),
        (sym(6).unwrap(), 13),
        (alt(5).unwrap(), 10),
        (alt(6).unwrap(), 16),
        (psl2(7).unwrap(), 15),
        (psl2(8).unwrap(), 36),
        (psl2(11).unwrap(), 67),
        (pgl2(7).unwrap(), 29),
        (m10().unwrap(), 46),
        (pgammal_2_9().unwrap(), 3),
    ];
    for (g, want) in cases {
        assert_eq!(
            sigma(&g, &caps).unwrap().value,
            Value::Finite(want),
            "order {}",
            g.order()
        );
    }
}

#[test]
fn gamma_of_sym7_needs_three_classes() {
    let caps = Caps::default().with_lattice(5040);
    let c = gamma(&sym(7).unwrap(), &caps).unwrap();
    assert_eq!(c.value, Value::Finite(3));
    assert!(c.verified && !c.upper_bound_only);
    assert!(gamma(&sym(7).unwrap(), &Caps::default()).is_err());
}

#[test]
fn gamma_squared_histogram() {
    let ex = gamma_squared_example().unwrap();
    let total = ex.order_histogram(&Caps::default()).unwrap().total();
    let got: Vec<(u64, u64)> = total.iter().map(|(&o, &c)| (o as u64, c as u64)).collect();
    assert_eq!(got, [(4, 32400), (8, 226800), (16, 129600)]);
}

#[test]
fn sl2_wreath_samples() {
    let ex = sl2_wreath_example(5).unwrap();
    let s = ex.sample(10_000, DEFAULT_SEED);
    assert_eq!((s.outside_m, s.divisible), (9577, 9577));
    assert_eq!(ex.sample(10_000, DEFAULT_SEED), s);
}
