use proptest::prelude::*;
use qmod_core::ncalg::{A, B, C_, D, E, F, L};
use qmod_core::rootsofunity::{drz_monomials, Character, FiberAlgebra, FiberData};
use qmod_core::scalars::Cyclo;
use qmod_core::Sl2;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn s() -> &'static Sl2<Cyclo> {
    static S: OnceLock<Sl2<Cyclo>> = OnceLock::new();
    S.get_or_init(|| Sl2::at_root(3).unwrap())
}

fn data() -> &'static FiberData<Cyclo> {
    static D3: OnceLock<FiberData<Cyclo>> = OnceLock::new();
    D3.get_or_init(|| FiberData::new(s(), 3, 2).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn fibre_has_rank_l_cubed(seed in any::<u64>()) {
        let s = s();
        let chi = Character::sample(&mut ChaCha8Rng::seed_from_u64(seed));
        let fa = FiberAlgebra::new(s, data(), chi).unwrap();
        prop_assert_eq!(fa.dim(), 27);
        let drz: Vec<_> = drz_monomials(3).iter().map(|w| s.oq.reduce_word(w).unwrap()).collect();
        prop_assert_eq!(fa.rank(&drz).unwrap(), 27);
    }

    #[test]
    fn omega_has_degree_l_over_the_fibre(seed in any::<u64>()) {
        let chi = Character::sample(&mut ChaCha8Rng::seed_from_u64(seed));
        let fa = FiberAlgebra::new(s(), data(), chi).unwrap();
        prop_assert_eq!(fa.min_poly_degree(&s().omega()).unwrap(), 3);
    }
}

#[test]
fn phi_pm_send_z0_to_central_elements() {
    let s = s();
    for x in [A, B, C_, D] {
        let z = s.oq.reduce_word(&[x; 3]).unwrap();
        for img in [s.phi_plus(&z).unwrap(), s.phi_minus(&z).unwrap()] {
            for g in [E, F, L] {
                let g = s.letter(g);
                assert_eq!(s.uq.mul(&img, &g).unwrap(), s.uq.mul(&g, &img).unwrap(), "{}", s.uq.fmt(&img));
            }
        }
    }
    let d3 = s.oq.reduce_word(&[D; 3]).unwrap();
    let minus = s.phi_minus(&d3).unwrap();
    let plus = s.phi_plus(&d3).unwrap();
    let l3 = s.word(&[L; 3]);
    assert_eq!(s.uq.fmt(&minus), s.uq.fmt(&l3), "plus: {}", s.uq.fmt(&plus));
}
