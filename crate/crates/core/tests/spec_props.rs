use normcover::spec::GroupSpec;
use normcover::{Caps, Perm};
use proptest::prelude::*;

proptest! {
    #[test]
    fn gens_spec_round_trips(n in 2usize..9, seeds in proptest::collection::vec(any::<u64>(), 1..4)) {
        let gens: Vec<Perm> = seeds
            .iter()
            .map(|&s| {
                let mut v: Vec<u32> = (0..n as u32).collect();
                v.rotate_left((s % n as u64) as usize);
                v.swap(0, (s / 7 % n as u64) as usize);
                Perm::from_images(v).unwrap()
            })
            .collect();
        let spec = GroupSpec::Gens { degree: n, gens };
        let text = spec.to_string();
        let back = GroupSpec::parse(&text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        let caps = Caps::default();
        prop_assert_eq!(back.build(&caps).unwrap().order(), spec.build(&caps).unwrap().order());
    }
}

#[test]
fn named_specs_round_trip() {
    for text in normcover::catalog::CATALOG {
        let spec = GroupSpec::parse(text).unwrap();
        assert_eq!(
            GroupSpec::parse(&spec.to_string()).unwrap().to_string(),
            spec.to_string()
        );
    }
    assert!(GroupSpec::parse("name: sym(").is_err());
    assert!(GroupSpec::parse("name: nosuchgroup(3)").is_err());
}
