//! The three shipped presentations: `U_q(sl2)`, `O_q(SL2)` and `L_{0,1}(sl2)`.

use super::{Elem, OrderKind, Presentation, Rule, Word};
use crate::scalars::{Field, Laurent, RatFunc, Ring};

pub const F: u8 = 0;
pub const L: u8 = 1;
pub const LI: u8 = 2;
pub const E: u8 = 3;

pub const A: u8 = 0;
pub const B: u8 = 1;
pub const C_: u8 = 2;
pub const D: u8 = 3;

fn q(k: i64) -> Laurent {
    Laurent::q_pow(k)
}

fn lin(terms: &[(i64, i64)]) -> Laurent {
    Laurent::from_terms(terms.iter().map(|&(e, c)| (2 * e, crate::scalars::qint_r(c))).collect())
}

fn rule<C: Field>(lhs: [u8; 2], rhs: Vec<(RatFunc, Word)>, ctx: &C::Ctx) -> Rule<C> {
    let rhs = Elem::from_terms(rhs.into_iter().map(|(c, w)| (w, C::from_ratfunc(&c, ctx).expect("rule coefficient defined"))));
    Rule { lhs, rhs }
}

fn r(x: Laurent) -> RatFunc {
    RatFunc::from_laurent(x)
}

pub fn uq_letter(name: &str) -> Option<u8> {
    ["F", "L", "Li", "E"].iter().position(|&x| x == name).map(|i| i as u8)
}

pub fn oq_letter(name: &str) -> Option<u8> {
    ["a", "b", "c", "d"].iter().position(|&x| x == name).map(|i| i as u8)
}

pub fn l01_letter(name: &str) -> Option<u8> {
    oq_letter(name)
}

/// `U_q(sl2)` with generators `E, F, L^{±1}`, `K = L^2`; normal words `F^a L^b E^c`.
pub fn uq_sl2<C: Field>(ctx: C::Ctx) -> Presentation<C> {
    let qd = q(1).sub(&q(-1));
    let inv = RatFunc::new(Laurent::one(), qd).expect("q - q^-1 is nonzero");
    let rules = vec![
        rule::<C>([E, F], vec![(r(Laurent::one()), vec![F, E]), (inv.clone(), vec![L, L]), (Ring::neg(&inv), vec![LI, LI])], &ctx),
        rule::<C>([E, L], vec![(r(q(-1)), vec![L, E])], &ctx),
        rule::<C>([E, LI], vec![(r(q(1)), vec![LI, E])], &ctx),
        rule::<C>([L, F], vec![(r(q(-1)), vec![F, L])], &ctx),
        rule::<C>([LI, F], vec![(r(q(1)), vec![F, LI])], &ctx),
        rule::<C>([L, LI], vec![(r(Laurent::one()), vec![])], &ctx),
        rule::<C>([LI, L], vec![(r(Laurent::one()), vec![])], &ctx),
    ];
    Presentation::new("uq", &["F", "L", "Li", "E"], OrderKind::Pbw, rules, vec![(L, LI)], ctx)
}

/// `O_q(SL2)` in the convention where `a, b, c, d` are the matrix coefficients of
/// `V_2` in the basis `v0, v1 = F v0`; normal words `a^i b^j d^r`, `a^i c^k d^r`.
pub fn oq_sl2<C: Field>(ctx: C::Ctx) -> Presentation<C> {
    let rules = vec![
        rule::<C>([B, A], vec![(r(q(1)), vec![A, B])], &ctx),
        rule::<C>([C_, A], vec![(r(q(1)), vec![A, C_])], &ctx),
        rule::<C>([D, B], vec![(r(q(1)), vec![B, D])], &ctx),
        rule::<C>([D, C_], vec![(r(q(1)), vec![C_, D])], &ctx),
        rule::<C>([C_, B], vec![(r(q(1)), vec![A, D]), (r(q(1).neg()), vec![])], &ctx),
        rule::<C>([B, C_], vec![(r(q(1)), vec![A, D]), (r(q(1).neg()), vec![])], &ctx),
        rule::<C>([D, A], vec![(r(q(2)), vec![A, D]), (r(lin(&[(0, 1), (2, -1)])), vec![])], &ctx),
    ];
    Presentation::new("oq", &["a", "b", "c", "d"], OrderKind::Frt, rules, vec![], ctx)
}

/// The loop algebra `L_{0,1}(sl2)`, same normal words as `O_q`.
pub fn l01_sl2<C: Field>(ctx: C::Ctx) -> Presentation<C> {
    l01_rules(ctx, false)
}

pub(crate) fn l01_rules<C: Field>(ctx: C::Ctx, broken: bool) -> Presentation<C> {
    let t = lin(&[(0, 1), (-2, -1)]); // 1 - q^-2
    let mut ca = vec![(r(Laurent::one()), vec![A, C_])];
    if !broken {
        ca.push((r(t.mul(&q(-2)).neg()), vec![C_, D]));
    }
    let rules = vec![
        rule::<C>([D, A], vec![(r(Laurent::one()), vec![A, D])], &ctx),
        rule::<C>([B, A], vec![(r(Laurent::one()), vec![A, B]), (r(t.clone()), vec![B, D])], &ctx),
        rule::<C>([D, B], vec![(r(q(2)), vec![B, D])], &ctx),
        rule::<C>(
            [C_, B],
            vec![(r(Laurent::one()), vec![A, D]), (r(t.neg()), vec![D, D]), (r(q(-2).neg()), vec![])],
            &ctx,
        ),
        rule::<C>([D, C_], vec![(r(q(-2)), vec![C_, D])], &ctx),
        rule::<C>([C_, A], ca, &ctx),
        rule::<C>([B, C_], vec![(r(q(-2)), vec![A, D]), (r(q(-2).neg()), vec![])], &ctx),
    ];
    let name = if broken { "l01-broken" } else { "l01" };
    Presentation::new(name, &["a", "b", "c", "d"], OrderKind::Frt, rules, vec![], ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rf;

    fn w(p: &Presentation<Rf>, s: &str) -> Elem<Rf> {
        let letters: Vec<u8> = s.split('*').map(|x| p.letter_index(x).unwrap()).collect();
        Elem::word(letters, &())
    }

    #[test]
    fn uq_examples() {
        let u = uq_sl2::<Rf>(());
        assert_eq!(u.fmt(&u.reduce(&w(&u, "E*F")).unwrap()), "F*E - ((q)/(q^2 - 1))*L^-2 + ((q)/(q^2 - 1))*L^2");
        assert_eq!(u.fmt(&u.reduce(&w(&u, "E*L")).unwrap()), "q^-1*L*E");
        assert_eq!(u.fmt(&u.reduce(&w(&u, "L*E")).unwrap()), "L*E");
        assert_eq!(u.reduce(&w(&u, "L*Li")).unwrap(), u.one());
        assert_eq!(u.fmt_word(&[F, F, LI, E]), "F^2*L^-1*E");
    }

    #[test]
    fn l01_examples() {
        let p = l01_sl2::<Rf>(());
        assert_eq!(p.fmt(&p.reduce(&w(&p, "d*b")).unwrap()), "q^2*b*d");
        let ad = p.reduce(&w(&p, "a*d")).unwrap();
        let da = p.reduce(&w(&p, "d*a")).unwrap();
        assert_eq!(ad, da);
        let zero = p.reduce(&w(&p, "b*d").scale(&Rf::q_half(4, &())).sub(&w(&p, "d*b"))).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn shipped_presentations_confluent() {
        for p in [uq_sl2::<Rf>(()), oq_sl2::<Rf>(()), l01_sl2::<Rf>(())] {
            let rep = p.check_confluence(4);
            assert!(rep.all_pass(), "{}", rep.summary());
        }
    }

    #[test]
    fn broken_rules_detected() {
        let p = l01_rules::<Rf>((), true);
        let rep = p.check_confluence(3);
        assert!(!rep.all_pass());
        assert!(rep.cases.iter().any(|c| !c.witness.is_empty()));
    }
}
