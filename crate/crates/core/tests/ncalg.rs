use proptest::prelude::*;
use qmod_core::hopfdual::random_elem;
use qmod_core::ncalg::{Presentation, E, F, L, LI};
use qmod_core::scalars::Rf;
use qmod_core::Sl2;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn s() -> &'static Sl2<Rf> {
    static S: OnceLock<Sl2<Rf>> = OnceLock::new();
    S.get_or_init(Sl2::generic)
}

fn pres(k: usize) -> &'static Presentation<Rf> {
    [&s().uq, &s().oq, &s().l01][k]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normal_form_is_idempotent(seed in any::<u64>(), k in 0usize..3) {
        let p = pres(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = p.reduce(&random_elem(&mut rng, 4, 4, s().ctx())).unwrap();
        prop_assert_eq!(p.reduce(&x).unwrap(), x.clone());
        prop_assert!(x.terms().all(|(w, _)| p.is_normal(w)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative(seed in any::<u64>(), k in 0usize..3) {
        let p = pres(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let [x, y, z] = [0; 3].map(|_| random_elem(&mut rng, 4, 4, s().ctx()));
        let left = p.mul(&p.mul(&x, &y).unwrap(), &z).unwrap();
        let right = p.mul(&x, &p.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

fn words(letters: u8, max: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max {
        layer = layer.iter().flat_map(|w: &Vec<u8>| (0..letters).map(move |x| [w.as_slice(), &[x]].concat())).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn omega_commutes_with_short_words() {
    let s = s();
    let w = s.omega();
    for x in words(4, 3) {
        let x = s.word(&x);
        assert_eq!(s.l01.mul(&w, &x).unwrap(), s.l01.mul(&x, &w).unwrap());
    }
}

#[test]
fn uq_words_reduce_to_pbw() {
    let s = s();
    for w in words(4, 5) {
        let r = s.uq.reduce_word(&w).unwrap();
        for (v, _) in r.terms() {
            // F^a (L or L^-1)^b E^c
            let f = v.iter().take_while(|&&x| x == F).count();
            let rest = &v[f..];
            let l = rest.iter().take_while(|&&x| x == L || x == LI).count();
            assert!(rest[..l].windows(2).all(|p| p[0] == p[1]), "{v:?}");
            assert!(rest[l..].iter().all(|&x| x == E), "{v:?} from {w:?}");
        }
    }
}
