//! Cartan data, weights in the fundamental-weight basis, and the tail-first
//! lexicographic order on lists of (dominant weight, weight) pairs.

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;

use crate::error::{domain, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub m: usize,
    pub a: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    pub n_pos: usize,
    pub denom: i64,
}

impl CartanData {
    /// Builds the data from a symmetrizable Cartan matrix. `n_pos` is supplied by the
    /// caller since counting positive roots is not needed for the algebra layers.
    pub fn new(a: Vec<Vec<i64>>, d: Vec<i64>, n_pos: usize) -> Result<Self> {
        let m = a.len();
        if d.len() != m || a.iter().any(|r| r.len() != m) {
            return domain("Cartan matrix and symmetrizers must have matching sizes");
        }
        for i in 0..m {
            if d[i] <= 0 || a[i][i] != 2 {
                return domain("symmetrizers must be positive and a_ii = 2");
            }
            for j in 0..m {
                if d[i] * a[i][j] != d[j] * a[j][i] {
                    return domain("d_i a_ij must be symmetric");
                }
            }
        }
        if d.iter().fold(0, |g, x| g.gcd(x)) != 1 {
            return domain("symmetrizers must be coprime");
        }
        let mut cd = CartanData { m, a, d, n_pos, denom: 1 };
        let mut den = 1i64;
        for i in 0..m {
            for j in 0..m {
                let v = cd.fundamental_form()[i][j];
                den = den.lcm(v.denom());
            }
        }
        cd.denom = den;
        Ok(cd)
    }

    /// Gram matrix `(ϖ_i, ϖ_j)`. From `(ϖ_i, α_j) = d_j δ_ij` and `α_j = Σ_k a_kj ϖ_k`.
    pub fn fundamental_form(&self) -> Vec<Vec<Rational64>> {
        let inv = invert(&self.a);
        let m = self.m;
        let mut g = vec![vec![Rational64::from_integer(0); m]; m];
        for i in 0..m {
            for k in 0..m {
                g[i][k] = inv[i][k] * Rational64::from_integer(self.d[i]);
            }
        }
        g
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.m])
    }

    /// Simple root `α_i` in the ϖ basis (column `i` of the Cartan matrix).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.a.iter().map(|r| r[i]).collect())
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        let mut v = vec![0; self.m];
        v[i] = 1;
        Weight(v)
    }

    /// Coroot pairing `(λ, α̌_i)`, which is the `i`-th coordinate.
    pub fn coroot_pairing(&self, l: &Weight, i: usize) -> i64 {
        l.0[i]
    }

    /// Membership in the root lattice: solve `λ = Σ c_i α_i` over Q and test integrality.
    pub fn in_root_lattice(&self, l: &Weight) -> bool {
        let inv = invert(&self.a);
        (0..self.m).all(|i| {
            let c: Rational64 = (0..self.m).map(|k| inv[i][k] * Rational64::from_integer(l.0[k])).sum();
            c.is_integer()
        })
    }
}

fn invert(a: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let m = a.len();
    let mut aug: Vec<Vec<Rational64>> = (0..m)
        .map(|i| {
            let mut r: Vec<Rational64> = a[i].iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..m).map(|j| Rational64::from_integer((i == j) as i64)));
            r
        })
        .collect();
    for c in 0..m {
        let p = (c..m).find(|&r| aug[r][c] != Rational64::from_integer(0)).expect("Cartan matrix is invertible");
        aug.swap(c, p);
        let piv = aug[c][c];
        for x in aug[c].iter_mut() {
            *x /= piv;
        }
        for r in 0..m {
            if r != c {
                let f = aug[r][c];
                if f != Rational64::from_integer(0) {
                    for k in 0..2 * m {
                        let t = aug[c][k] * f;
                        aug[r][k] -= t;
                    }
                }
            }
        }
    }
    aug.into_iter().map(|r| r[m..].to_vec()).collect()
}

pub fn sl2_data() -> CartanData {
    CartanData::new(vec![vec![2]], vec![1], 1).expect("sl2 data is valid")
}

/// Integral weight, coordinates in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(m: usize) -> Self {
        Weight(vec![0; m])
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Membership in `P_+`.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

pub fn inner(l: &Weight, m: &Weight, cd: &CartanData) -> Rational64 {
    let g = cd.fundamental_form();
    let mut acc = Rational64::from_integer(0);
    for i in 0..cd.m {
        for j in 0..cd.m {
            acc += g[i][j] * Rational64::from_integer(l.0[i] * m.0[j]);
        }
    }
    acc
}

/// Same form computed by expanding `μ` in simple roots: `(λ, α_j) = d_j λ_j`.
pub fn inner_via_roots(l: &Weight, m: &Weight, cd: &CartanData) -> Rational64 {
    let inv = invert(&cd.a);
    let mut acc = Rational64::from_integer(0);
    for j in 0..cd.m {
        let cj: Rational64 = (0..cd.m).map(|k| inv[j][k] * Rational64::from_integer(m.0[k])).sum();
        acc += cj * Rational64::from_integer(cd.d[j] * l.0[j]);
    }
    acc
}

/// Key of `[Λ]`: one dominant weight and one weight per leg.
pub type LambdaKey = (Vec<Weight>, Vec<Weight>);

fn strictly_above(x: &Weight, y: &Weight) -> bool {
    let d = x.sub(y);
    d.is_dominant() && !d.is_zero()
}

/// `(μ', λ') ≤ (μ, λ)` in the order that compares legs from the last one down.
pub fn dominance_leq(lower: &LambdaKey, upper: &LambdaKey) -> Result<bool> {
    let (mu1, la1) = lower;
    let (mu, la) = upper;
    let n = mu.len();
    if mu1.len() != n || la1.len() != n || la.len() != n {
        return domain("dominance_leq: keys must have the same number of legs");
    }
    if n == 0 {
        return Ok(true);
    }
    for k in (0..n).rev() {
        if strictly_above(&mu[k], &mu1[k]) {
            return Ok(true);
        }
        if mu[k] != mu1[k] {
            return Ok(false);
        }
        if k == 0 {
            return Ok(la[0].sub(&la1[0]).is_dominant());
        }
        if strictly_above(&la[k], &la1[k]) {
            return Ok(true);
        }
        if la[k] != la1[k] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(x: i64) -> Weight {
        Weight(vec![x])
    }

    #[test]
    fn sl2_constants() {
        let cd = sl2_data();
        assert_eq!((cd.m, cd.n_pos, cd.denom), (1, 1, 2));
        assert_eq!(inner(&w(1), &w(1), &cd), Rational64::new(1, 2));
        assert_eq!(inner(&w(2), &w(2), &cd), Rational64::from_integer(2));
        // (ρ, α̌) is the coordinate of ρ
        assert_eq!(cd.coroot_pairing(&cd.rho(), 0), 1);
        assert!(cd.in_root_lattice(&w(2)) && !cd.in_root_lattice(&w(1)));
        assert_eq!(w(-3).to_string(), "[-3]");
    }

    #[test]
    fn rank_two_denominator() {
        // sl3: (ϖ_1, ϖ_1) = 2/3
        let cd = CartanData::new(vec![vec![2, -1], vec![-1, 2]], vec![1, 1], 3).unwrap();
        assert_eq!(cd.denom, 3);
        assert_eq!(inner(&cd.fundamental(0), &cd.fundamental(0), &cd), Rational64::new(2, 3));
        // B2 with the short root second
        let b2 = CartanData::new(vec![vec![2, -2], vec![-1, 2]], vec![1, 2], 4).unwrap();
        let g = b2.fundamental_form();
        assert_eq!(g[0][1], g[1][0]);
        assert!(CartanData::new(vec![vec![2, -2], vec![-1, 2]], vec![1, 1], 4).is_err());
    }

    #[test]
    fn tail_lex_examples() {
        let k = |m: &[i64], l: &[i64]| -> LambdaKey { (m.iter().map(|&x| w(x)).collect(), l.iter().map(|&x| w(x)).collect()) };
        assert!(dominance_leq(&k(&[0], &[0]), &k(&[0], &[0])).unwrap());
        assert!(dominance_leq(&k(&[1], &[-1]), &k(&[1], &[1])).unwrap());
        assert!(!dominance_leq(&k(&[1], &[1]), &k(&[1], &[-1])).unwrap());
        // last leg decides first
        assert!(dominance_leq(&k(&[1, 0], &[1, 0]), &k(&[0, 1], &[0, 1])).unwrap());
        assert!(!dominance_leq(&k(&[0, 1], &[0, 1]), &k(&[1, 0], &[1, 0])).unwrap());
        assert!(dominance_leq(&k(&[0], &[0]), &k(&[0, 0], &[0, 0])).is_err());
    }

    #[test]
    fn inner_two_ways_rank_two() {
        let cd = CartanData::new(vec![vec![2, -3], vec![-1, 2]], vec![1, 3], 6).unwrap();
        for a in -2..3 {
            for b in -2..3 {
                let l = Weight(vec![a, b]);
                let m = Weight(vec![b + 1, a - 1]);
                assert_eq!(inner(&l, &m, &cd), inner_via_roots(&l, &m, &cd));
            }
        }
    }

    fn key2() -> impl Strategy<Value = LambdaKey> {
        prop::collection::vec((0i64..3, -3i64..4), 2).prop_map(|v| {
            (v.iter().map(|p| w(p.0)).collect(), v.iter().map(|p| w(p.1)).collect())
        })
    }

    proptest! {
        #[test]
        fn order_axioms(x in key2(), y in key2(), z in key2()) {
            let le = |a: &LambdaKey, b: &LambdaKey| dominance_leq(a, b).unwrap();
            prop_assert!(le(&x, &x));
            if le(&x, &y) && le(&y, &x) { prop_assert_eq!(&x, &y); }
            if le(&x, &y) && le(&y, &z) { prop_assert!(le(&x, &z)); }
        }

        #[test]
        fn inner_symmetric(a in -5i64..5, b in -5i64..5) {
            let cd = sl2_data();
            prop_assert_eq!(inner(&w(a), &w(b), &cd), inner(&w(b), &w(a), &cd));
            prop_assert_eq!(inner(&w(a), &w(b), &cd), inner_via_roots(&w(a), &w(b), &cd));
        }
    }
}
