use normcover::cover::{gamma, sigma, verify_cover, verify_normal_cover, Value};
use normcover::lattice::all_subgroups;
use normcover::oracle::{gamma_oracle, sigma_oracle, subgroup_count_oracle, MAX_ORACLE_ORDER};
use normcover::structure::{is_cyclic, Subgroup};
use normcover::{Caps, Perm, PermGroup};
use proptest::prelude::*;

fn subgroup_of_sym(degree: usize) -> impl Strategy<Value = PermGroup> {
    let v: Vec<u32> = (0..degree as u32).collect();
    proptest::collection::vec(Just(v).prop_shuffle(), 1..=2).prop_map(move |gs| {
        let gens = gs
            .into_iter()
            .map(|g| Perm::from_images(g).unwrap())
            .collect();
        PermGroup::from_generators(degree, gens).unwrap()
    })
}

fn certified(cert_gens: &[Vec<Perm>], degree: usize) -> Vec<Subgroup> {
    cert_gens
        .iter()
        .map(|g| Subgroup::new(PermGroup::from_generators(degree, g.clone()).unwrap()))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn covering_numbers_are_consistent(g in subgroup_of_sym(5)) {
        let caps = Caps::default();
        let s = sigma(&g, &caps).unwrap();
        let n = gamma(&g, &caps).unwrap();
        prop_assert!(n.value <= s.value);
        prop_assert_eq!(is_cyclic(&g), s.value.is_inf());
        prop_assert_eq!(is_cyclic(&g), n.value.is_inf());
        if !is_cyclic(&g) {
            prop_assert!(s.value >= Value::Finite(3));
            prop_assert!(n.value >= Value::Finite(2));
            prop_assert_eq!(Value::Finite(s.generators.len() as u64), s.value);
            prop_assert!(verify_cover(&g, &certified(&s.generators, 5), &caps).unwrap());
            prop_assert!(verify_normal_cover(&g, &certified(&n.generators, 5), &caps).unwrap());
        }
        if g.order() <= MAX_ORACLE_ORDER {
            prop_assert_eq!(s.value, sigma_oracle(&g, &caps).unwrap());
            prop_assert_eq!(n.value, gamma_oracle(&g, &caps).unwrap());
            prop_assert_eq!(all_subgroups(&g, &caps).unwrap().len(), subgroup_count_oracle(&g, &caps).unwrap());
        }
    }

    #[test]
    fn conjugates_of_meet_miss_part_of_normal(g in subgroup_of_sym(5)) {
        let caps = Caps::default();
        let l = all_subgroups(&g, &caps).unwrap();
        let n = l.table().len();
        let normals: Vec<usize> = l.classes().iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
        for h in l.class_reps() {
            if l.order(h) == n {
                continue;
            }
            for &nn in &normals {
                let mut meet = l.bits(h).clone();
                meet.intersect_with(l.bits(nn));
                let m = meet.count_ones(..);
                if l.order(h) * l.order(nn) / m != n {
                    continue;
                }
                let elems: Vec<u16> = meet.ones().map(|e| e as u16).collect();
                prop_assert!(l.table().conjugate_closure(&elems).count_ones(..) < l.order(nn));
            }
        }
    }
}

#[test]
fn value_round_trips() {
    for v in [Value::Finite(0), Value::Finite(17), Value::Inf] {
        assert_eq!(v.to_string().parse::<Value>().unwrap(), v);
    }
    assert_eq!(Value::Inf.to_string(), "inf");
    assert!(Value::Finite(u64::MAX) < Value::Inf);
}

#[test]
fn improper_covers_rejected() {
    let caps = Caps::default();
    let g = normcover::constructions::named::sym(3).unwrap();
    assert!(verify_cover(&g, &[Subgroup::new(g.clone())], &caps).is_err());
}

#[test]
fn maximal_subgroups_suffice_for_sigma() {
    use normcover::catalog::catalog_up_to;
    use normcover::oracle::sigma_all_subgroups_oracle;
    let caps = Caps::default();
    let mut compared = 0;
    for e in catalog_up_to(100, &caps).unwrap() {
        let Some(all) = sigma_all_subgroups_oracle(&e.group, &caps, 3_000_000).unwrap() else {
            continue;
        };
        compared += 1;
        assert_eq!(sigma(&e.group, &caps).unwrap().value, all, "{}", e.label());
    }
    assert!(
        compared >= 20,
        "only {compared} groups fit the search budget"
    );
}

#[test]
fn certificates_are_irredundant() {
    use normcover::catalog::catalog_up_to;
    let caps = Caps::default();
    for e in catalog_up_to(200, &caps).unwrap() {
        let g = &e.group;
        if is_cyclic(g) {
            continue;
        }
        let s = certified(&sigma(g, &caps).unwrap().generators, g.degree());
        let n = certified(&gamma(g, &caps).unwrap().generators, g.degree());
        for i in 0..s.len() {
            let mut fewer = s.clone();
            fewer.remove(i);
            assert!(!verify_cover(g, &fewer, &caps).unwrap(), "{}", e.label());
        }
        for i in 0..n.len() {
            let mut fewer = n.clone();
            fewer.remove(i);
            assert!(
                !verify_normal_cover(g, &fewer, &caps).unwrap(),
                "{}",
                e.label()
            );
        }
    }
}
