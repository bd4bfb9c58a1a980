use proptest::prelude::*;
use qmod_core::hopfdual::{hopf_suite, random_elem};
use qmod_core::ncalg::{Elem, E, F, L};
use qmod_core::scalars::{Ring, Rf};
use qmod_core::Sl2;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn s() -> &'static Sl2<Rf> {
    static S: OnceLock<Sl2<Rf>> = OnceLock::new();
    S.get_or_init(Sl2::generic)
}

/// `Σ (x_(1) ▷ α) ⋆ (x_(2) ▷ β)`
fn act_on_product(x: &Elem<Rf>, alpha: &Elem<Rf>, beta: &Elem<Rf>) -> Elem<Rf> {
    let s = s();
    let mut out = Elem::zero();
    for (ws, c) in s.uq_coproduct(x).unwrap().terms() {
        let u = s.left_act(&s.word(&ws[0]), alpha).unwrap();
        let v = s.left_act(&s.word(&ws[1]), beta).unwrap();
        out.add_scaled(&s.oq.mul(&u, &v).unwrap(), c);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn hopf_axioms_on_random_samples(seed in any::<u64>()) {
        let rep = hopf_suite(s(), 4, seed).unwrap();
        prop_assert!(rep.all_pass(), "{}", rep.summary());
    }

    #[test]
    fn left_action_is_module_algebra(seed in any::<u64>(), x in prop::sample::select(vec![E, F, L])) {
        let s = s();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alpha = s.oq.reduce(&random_elem(&mut rng, 4, 2, s.ctx())).unwrap();
        let beta = s.oq.reduce(&random_elem(&mut rng, 4, 2, s.ctx())).unwrap();
        let x = s.letter(x);
        let lhs = s.left_act(&x, &s.oq.mul(&alpha, &beta).unwrap()).unwrap();
        prop_assert_eq!(lhs, act_on_product(&x, &alpha, &beta));
    }

    #[test]
    fn coadjoint_is_a_right_action(seed in any::<u64>(), x in prop::sample::select(vec![E, F, L]), y in prop::sample::select(vec![E, F, L])) {
        let s = s();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alpha = s.oq.reduce(&random_elem(&mut rng, 4, 2, s.ctx())).unwrap();
        let (x, y) = (s.letter(x), s.letter(y));
        let xy = s.uq.mul(&x, &y).unwrap();
        let lhs = s.coad_star(&xy, &alpha).unwrap();
        let rhs = s.coad_star(&y, &s.coad_star(&x, &alpha).unwrap()).unwrap();
        prop_assert_eq!(s.oq.reduce(&lhs).unwrap(), s.oq.reduce(&rhs).unwrap());
    }
}

#[test]
fn counit_of_pairing_unit() {
    let s = s();
    let one = Rf::one(s.ctx());
    assert_eq!(s.pair(&s.oq.one(), &s.uq.one()), one);
}
