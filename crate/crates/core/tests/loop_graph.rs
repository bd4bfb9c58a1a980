use proptest::prelude::*;
use qmod_core::graphn::Graph;
use qmod_core::hopfdual::random_elem;
use qmod_core::ncalg::{Elem, Tensor, E, F, L};
use qmod_core::scalars::Rf;
use qmod_core::Sl2;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn s() -> &'static Sl2<Rf> {
    static S: OnceLock<Sl2<Rf>> = OnceLock::new();
    S.get_or_init(Sl2::generic)
}

fn loop_elem(rng: &mut ChaCha8Rng, deg: usize) -> Elem<Rf> {
    s().l01.reduce(&random_elem(rng, 4, deg, s().ctx())).unwrap()
}

fn two_leg(rng: &mut ChaCha8Rng) -> Tensor<Rf> {
    let x = Tensor::embed(&loop_elem(rng, 2), 0, 1);
    let y = Tensor::embed(&loop_elem(rng, 2), 0, 1);
    x.kron(&y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rewriting_product_matches_twist(seed in any::<u64>()) {
        let s = s();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (loop_elem(&mut rng, 3), loop_elem(&mut rng, 3));
        let via_rules = s.loop_to_star(&s.l01.mul(&x, &y).unwrap()).unwrap();
        let via_twist = s.twist(&s.loop_to_star(&x).unwrap(), &s.loop_to_star(&y).unwrap()).unwrap();
        prop_assert_eq!(via_rules, via_twist);
    }

    #[test]
    fn phi1_is_multiplicative(seed in any::<u64>()) {
        let s = s();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (loop_elem(&mut rng, 2), loop_elem(&mut rng, 2));
        let lhs = s.phi1(&s.l01.mul(&x, &y).unwrap()).unwrap();
        let rhs = s.uq.mul(&s.phi1(&x).unwrap(), &s.phi1(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn loop_star_round_trip(seed in any::<u64>()) {
        let s = s();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = loop_elem(&mut rng, 3);
        prop_assert_eq!(s.star_to_loop(&s.loop_to_star(&x).unwrap()).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn graph_product_is_associative(seed in any::<u64>()) {
        let g = Graph::new(s(), 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let [u, v, w] = [0; 3].map(|_| g.normalize(&two_leg(&mut rng)).unwrap());
        let left = g.mul(&g.mul(&u, &v).unwrap(), &w).unwrap();
        let right = g.mul(&u, &g.mul(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn phi2_is_multiplicative(seed in any::<u64>()) {
        let g = Graph::new(s(), 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let [u, v] = [0; 2].map(|_| g.normalize(&two_leg(&mut rng)).unwrap());
        let lhs = g.phi(&g.mul(&u, &v).unwrap()).unwrap();
        let uq2 = [&s().uq, &s().uq];
        let rhs = g.phi(&u).unwrap().mul_legwise(&g.phi(&v).unwrap(), &uq2).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi2_intertwines_coadjoint(seed in any::<u64>(), y in prop::sample::select(vec![E, F, L])) {
        let g = Graph::new(s(), 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = g.normalize(&two_leg(&mut rng)).unwrap();
        let y = s().letter(y);
        let lhs = g.phi(&g.coadjoint(&y, &u).unwrap()).unwrap();
        let rhs = g.ad(&y, &g.phi(&u).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
