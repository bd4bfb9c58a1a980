use std::fmt;

use num_traits::{One, Zero};

use super::laurent::{Laurent, Q};
use super::ring::{Field, Ring};

/// Rational function in `q^(1/2)` over Q, kept as `num/den` with `den` a monic
/// polynomial with nonzero constant term, coprime to `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Laurent,
    den: Laurent,
}

type Dense = Vec<Q>;

fn to_dense(x: &Laurent) -> (i64, Dense) {
    let lo = x.min_exp().unwrap_or(0);
    let hi = x.max_exp().unwrap_or(0);
    let mut v = vec![Q::zero(); (hi - lo + 1) as usize];
    for (e, c) in x.terms() {
        v[(e - lo) as usize] = c.clone();
    }
    (lo, v)
}

fn from_dense(shift: i64, v: &[Q]) -> Laurent {
    Laurent::from_terms(v.iter().enumerate().map(|(i, c)| (i as i64 + shift, c.clone())).collect())
}

fn trim(v: &mut Dense) {
    while v.len() > 1 && v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn is_zero_poly(v: &Dense) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn poly_rem(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    while !is_zero_poly(&r) && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let f = &r[dr] / &lb;
        for i in 0..=db {
            let t = &f * &b[i];
            r[dr - db + i] -= t;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn monic(v: &mut Dense) {
    trim(v);
    let l = v.last().unwrap().clone();
    if !l.is_zero() && !l.is_one() {
        for c in v.iter_mut() {
            *c /= &l;
        }
    }
}

fn poly_gcd(a: &Dense, b: &Dense) -> Dense {
    let (mut x, mut y) = (a.clone(), b.clone());
    trim(&mut x);
    trim(&mut y);
    while !is_zero_poly(&y) {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
        if !is_zero_poly(&y) {
            monic(&mut y);
        }
    }
    monic(&mut x);
    x
}

impl RatFunc {
    pub fn from_laurent(x: Laurent) -> Self {
        RatFunc { num: x, den: Laurent::one() }
    }

    pub fn new(num: Laurent, den: Laurent) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    fn normalize(num: Laurent, den: Laurent) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: Laurent::one() };
        }
        if den.is_monomial() {
            let (e, c) = den.terms()[0].clone();
            return RatFunc { num: num.mul_monomial(-e, &c.recip()), den: Laurent::one() };
        }
        let (dlo, dd) = to_dense(&den);
        let num = num.shift(-dlo);
        let (nlo, nd) = to_dense(&num);
        let g = poly_gcd(&nd, &dd);
        let (num, den) = if g.len() > 1 {
            let gl = from_dense(0, &g);
            (
                from_dense(nlo, &nd).div_exact(&gl).expect("gcd divides numerator"),
                from_dense(0, &dd).div_exact(&gl).expect("gcd divides denominator"),
            )
        } else {
            (num, from_dense(0, &dd))
        };
        let lead = den.leading().unwrap().1.clone();
        let inv = lead.recip();
        let den = den.scale(&inv);
        let num = num.scale(&inv);
        if den.is_monomial() {
            let (e, c) = den.terms()[0].clone();
            return RatFunc { num: num.mul_monomial(-e, &c.recip()), den: Laurent::one() };
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &Laurent {
        &self.num
    }

    pub fn den(&self) -> &Laurent {
        &self.den
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_laurent(&self) -> Option<&Laurent> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn bar(&self) -> Self {
        Self::normalize(self.num.bar(), self.den.bar())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            let neg = self.num.leading().map_or(false, |t| t.1 < Q::zero());
            if neg {
                write!(f, "-({})/({})", self.num.neg(), self.den)
            } else {
                write!(f, "({})/({})", self.num, self.den)
            }
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Ring for RatFunc {
    type Ctx = ();
    fn zero(_: &()) -> Self {
        Self::from_laurent(Laurent::zero())
    }
    fn one(_: &()) -> Self {
        Self::from_laurent(Laurent::one())
    }
    fn from_laurent(x: &Laurent, _: &()) -> Self {
        Self::from_laurent(x.clone())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            if self.is_laurent() {
                return Self::from_laurent(self.num.add(&o.num));
            }
            return Self::normalize(self.num.add(&o.num), self.den.clone());
        }
        Self::normalize(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_laurent() && o.is_laurent() {
            return Self::from_laurent(self.num.mul(&o.num));
        }
        Self::normalize(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::normalize(self.den.clone(), self.num.clone()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancels_common_factors() {
        let qm = Laurent::q_pow(1).sub(&Laurent::q_pow(-1));
        let x = RatFunc::from_laurent(Laurent::q_pow(2).sub(&Laurent::q_pow(-2)));
        let y = x.div(&RatFunc::from_laurent(qm)).unwrap();
        assert!(y.is_laurent());
        assert_eq!(y.to_string(), "q + q^-1");
    }

    #[test]
    fn inverse_roundtrip() {
        let x = RatFunc::from_laurent(Laurent::q_pow(1).add(&Laurent::from_int(3)));
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), RatFunc::one(&()));
    }
}
