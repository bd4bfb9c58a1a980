use num_traits::One;

use super::laurent::{qint_r, Laurent, Q};
use crate::error::{domain, Result};

/// Symmetric quantum integer `[p] = (q^p - q^-p)/(q - q^-1)`.
pub fn bracket(p: i64) -> Laurent {
    let n = p.abs();
    let terms = (0..n).map(|i| (2 * (n - 1 - 2 * i), Q::one())).collect();
    let x = Laurent::from_terms(terms);
    if p < 0 {
        x.neg()
    } else {
        x
    }
}

/// Non-symmetric quantum integer `(p) = (q^p - 1)/(q - 1)`.
pub fn paren(p: i64) -> Laurent {
    if p >= 0 {
        Laurent::from_terms((0..p).map(|i| (2 * i, Q::one())).collect())
    } else {
        Laurent::from_terms((p..0).map(|i| (2 * i, -Q::one())).collect())
    }
}

pub fn bracket_factorial(n: u32) -> Laurent {
    (1..=n as i64).fold(Laurent::one(), |acc, i| acc.mul(&bracket(i)))
}

pub fn paren_factorial(n: u32) -> Laurent {
    (1..=n as i64).fold(Laurent::one(), |acc, i| acc.mul(&paren(i)))
}

/// Gaussian binomial in symmetric normalisation `[n]!/([k]![n-k]!)`.
pub fn qbinom(n: i64, k: i64) -> Result<Laurent> {
    if n < 0 || k < 0 || k > n {
        return domain(format!("qbinom({n},{k}) out of range"));
    }
    let num = (n - k + 1..=n).fold(Laurent::one(), |acc, i| acc.mul(&bracket(i)));
    Ok(num.div_exact(&bracket_factorial(k as u32)).expect("Gaussian binomials are Laurent polynomials"))
}

/// `q - q^-1`.
pub fn qdiff() -> Laurent {
    Laurent::q_pow(1).sub(&Laurent::q_pow(-1))
}

/// Chebyshev polynomials normalised by `T_0 = 2`, `T_1 = x`, `T_{k+1} = x T_k - T_{k-1}`,
/// so that `T_k(y + y^-1) = y^k + y^-k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebyPoly {
    /// Integer coefficients, ascending in `x`.
    pub coeffs: Vec<i64>,
}

impl ChebyPoly {
    pub fn new(k: u32) -> Self {
        let mut prev = vec![2i64];
        let mut cur = vec![0i64, 1];
        if k == 0 {
            return ChebyPoly { coeffs: prev };
        }
        for _ in 1..k {
            let mut next = vec![0i64; cur.len() + 1];
            for (i, c) in cur.iter().enumerate() {
                next[i + 1] += c;
            }
            for (i, c) in prev.iter().enumerate() {
                next[i] -= c;
            }
            prev = cur;
            cur = next;
        }
        ChebyPoly { coeffs: cur }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Evaluate with caller-supplied ring operations (Horner).
    pub fn eval_with<T: Clone>(&self, x: &T, from_int: impl Fn(i64) -> T, add: impl Fn(&T, &T) -> T, mul: impl Fn(&T, &T) -> T) -> T {
        let mut acc = from_int(*self.coeffs.last().unwrap());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = add(&mul(&acc, x), &from_int(*c));
        }
        acc
    }

    pub fn eval_laurent(&self, x: &Laurent) -> Laurent {
        self.eval_with(x, Laurent::from_int, |a, b| a.add(b), |a, b| a.mul(b))
    }
}

pub fn chebyshev_t(k: u32) -> ChebyPoly {
    ChebyPoly::new(k)
}

#[allow(dead_code)]
pub(crate) fn rational(n: i64, d: i64) -> Q {
    qint_r(n) / qint_r(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_values() {
        assert_eq!(bracket(2).to_string(), "q + q^-1");
        assert_eq!(bracket(3).to_string(), "q^2 + 1 + q^-2");
        assert_eq!(paren(3).to_string(), "q^2 + q + 1");
        assert_eq!(qbinom(4, 2).unwrap().to_string(), "q^4 + q^2 + 2 + q^-2 + q^-4");
        assert!(qbinom(2, 3).is_err());
        assert_eq!(chebyshev_t(3).coeffs, vec![0, -3, 0, 1]);
    }

    proptest! {
        #[test]
        fn bracket_matches_quotient(p in -12i64..12) {
            let num = Laurent::q_pow(p).sub(&Laurent::q_pow(-p));
            prop_assert_eq!(num.div_exact(&qdiff()).unwrap(), bracket(p));
        }

        #[test]
        fn paren_matches_quotient(p in -12i64..12) {
            let num = Laurent::q_pow(p).sub(&Laurent::one());
            let den = Laurent::q_pow(1).sub(&Laurent::one());
            prop_assert_eq!(num.div_exact(&den).unwrap(), paren(p));
        }

        #[test]
        fn chebyshev_on_y_plus_inverse(k in 0u32..10, e in 1i64..4) {
            let y = Laurent::q_half(e);
            let x = y.add(&Laurent::q_half(-e));
            let want = Laurent::q_half(e * k as i64).add(&Laurent::q_half(-e * k as i64));
            prop_assert_eq!(chebyshev_t(k).eval_laurent(&x), want);
        }

        #[test]
        fn qbinom_pascal(n in 1i64..9, k in 1i64..8) {
            prop_assume!(k < n);
            // [n,k] = q^k [n-1,k] + q^{-(n-k)} [n-1,k-1]
            let lhs = qbinom(n, k).unwrap();
            let rhs = qbinom(n - 1, k).unwrap().shift(2 * k)
                .add(&qbinom(n - 1, k - 1).unwrap().shift(-2 * (n - k)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
