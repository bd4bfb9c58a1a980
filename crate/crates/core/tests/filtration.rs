use proptest::prelude::*;
use qmod_core::filtration::{reynolds, reynolds_casimir, Filtration};
use qmod_core::graphn::Graph;
use qmod_core::hopfdual::random_elem;
use qmod_core::ncalg::{Tensor, E, F};
use qmod_core::scalars::Rf;
use qmod_core::Sl2;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn s() -> &'static Sl2<Rf> {
    static S: OnceLock<Sl2<Rf>> = OnceLock::new();
    S.get_or_init(Sl2::generic)
}

fn sample(seed: u64, deg: usize) -> Tensor<Rf> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Tensor::embed(&s().l01.reduce(&random_elem(&mut rng, 4, deg, s().ctx())).unwrap(), 0, 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn reynolds_is_idempotent(seed in any::<u64>()) {
        let fl = Filtration::new(s());
        let r = reynolds(&fl, &sample(seed, 2)).unwrap();
        prop_assert_eq!(reynolds(&fl, &r).unwrap(), r);
    }

    #[test]
    fn reynolds_agrees_with_casimir_projector(seed in any::<u64>()) {
        let fl = Filtration::new(s());
        let u = sample(seed, 2);
        prop_assert_eq!(reynolds(&fl, &u).unwrap(), reynolds_casimir(&fl, &u).unwrap());
    }

    #[test]
    fn reynolds_kills_coadjoint_images(seed in any::<u64>(), y in prop::sample::select(vec![E, F])) {
        let fl = Filtration::new(s());
        let g = Graph::new(s(), 1);
        let v = g.coadjoint(&s().letter(y), &sample(seed, 2)).unwrap();
        prop_assert!(reynolds(&fl, &v).unwrap().is_zero());
    }
}
