use proptest::prelude::*;
use qmod_core::ncalg::{Elem, A, B, C_, D};
use qmod_core::repmod::{module_vp, t_closed, t_eval, tilde_monomial, weyl_closed, weyl_saito};
use qmod_core::scalars::{Laurent, Rf};

fn t(e: &Elem<Rf>) -> Rf {
    t_eval(e, &())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn t_matches_closed_forms(m in 0u32..4, n in 0u32..4, p in 0u32..4, c_side in any::<bool>()) {
        let got = t(&tilde_monomial(m, n, p, c_side, &()));
        prop_assert_eq!(got, Rf::from_laurent(t_closed(m, n, p, c_side)));
    }

    #[test]
    fn tilde_dictionary(m in 0u32..3, n in 0u32..3, p in 0u32..3, c_side in any::<bool>()) {
        // b~ = q b, c~ = q^-1 c
        let x = if c_side { C_ } else { B };
        let w: Vec<u8> = [vec![A; m as usize], vec![x; n as usize], vec![D; p as usize]].concat();
        let shift = Laurent::q_pow(if c_side { -(n as i64) } else { n as i64 });
        let untilded = Elem::monomial(w, Rf::from_laurent(shift));
        prop_assert_eq!(t(&untilded), t(&tilde_monomial(m, n, p, c_side, &())));
    }
}

#[test]
fn saito_product_matches_closed_form_on_v5() {
    assert_eq!(weyl_saito(&module_vp(5)), weyl_closed(5));
}
