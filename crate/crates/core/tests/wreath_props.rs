use normcover::constructions::named::alt;
use normcover::constructions::wreath::{
    decompose, wreath_cover_conjugator, wreath_cyclic, wreath_element,
};
use normcover::error::Error;
use normcover::Caps;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugators_verify(seed in any::<u64>(), p in prop::sample::select(vec![7usize, 11, 13])) {
        let w = wreath_cyclic(&alt(5).unwrap(), p, &Caps::default()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = w.group.random_element(&mut rng);
        match wreath_cover_conjugator(&w, &g) {
            Ok((s, x)) => {
                let (_, blocks) = decompose(&g, p).unwrap();
                let id: Vec<usize> = (0..p).collect();
                let lhs = w.diagonal_element(&s, blocks[0]).conjugate_by(&wreath_element(&x, &id));
                prop_assert_eq!(lhs, g);
            }
            Err(Error::InBaseGroup) => prop_assert!(w.base.contains_unchecked(&g)),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn decompose_inverts_wreath_element(seed in any::<u64>()) {
        let w = wreath_cyclic(&alt(5).unwrap(), 7, &Caps::default()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = w.group.random_element(&mut rng);
        let (comps, blocks) = decompose(&g, 7).unwrap();
        prop_assert_eq!(wreath_element(&comps, &blocks), g);
    }
}

#[test]
fn p_dividing_order_rejected() {
    let err = wreath_cyclic(&alt(5).unwrap(), 5, &Caps::default()).unwrap_err();
    assert!(matches!(err, Error::PDividesOrder(5)));
}
