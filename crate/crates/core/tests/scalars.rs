use proptest::prelude::*;
use qmod_core::scalars::{bracket, chebyshev_t, specialize, Laurent, Ring, Rf, RatFunc, Q};

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-8i64..8, -5i64..6), 0..5)
        .prop_map(|ts| Laurent::from_terms(ts.into_iter().map(|(e, c)| (e, Q::from_integer(c.into()))).collect()))
}

fn ratfunc() -> impl Strategy<Value = Rf> {
    (laurent(), laurent()).prop_filter_map("zero denominator", |(n, d)| RatFunc::new(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).sub(&b), a);
    }
}

proptest! {
    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if let Some(inv) = qmod_core::scalars::Field::inv(&b) {
            prop_assert_eq!(a.mul(&b).mul(&inv), a);
        }
    }

    #[test]
    fn specialize_is_a_homomorphism(a in laurent(), b in laurent(), l in prop::sample::select(vec![3u32, 5, 7])) {
        let sa = specialize(&a, l).unwrap();
        let sb = specialize(&b, l).unwrap();
        prop_assert_eq!(specialize(&a.mul(&b), l).unwrap(), sa.mul(&sb));
        prop_assert_eq!(specialize(&a.add(&b), l).unwrap(), sa.add(&sb));
    }
}

#[test]
fn bracket_l_vanishes_at_root() {
    for l in [3u32, 5, 7] {
        assert!(specialize(&bracket(l as i64), l).unwrap().is_zero(), "[{l}]");
        assert!(!specialize(&bracket(l as i64 - 1), l).unwrap().is_zero());
    }
}

#[test]
fn chebyshev_up_to_twelve() {
    let y = Laurent::q_pow(1);
    let x = y.add(&Laurent::q_pow(-1));
    for k in 0..=12u32 {
        let want = Laurent::q_pow(k as i64).add(&Laurent::q_pow(-(k as i64)));
        assert_eq!(chebyshev_t(k).eval_laurent(&x), want, "T_{k}");
    }
}
