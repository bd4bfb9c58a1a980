use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::Ring;

pub type Q = BigRational;

pub fn qint_r(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Laurent polynomial in `q^(1/2)` with rational coefficients.
/// Exponents are stored in units of `q^(1/2)`, terms sorted by ascending exponent.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: Vec<(i64, Q)>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(qint_r(n))
    }

    /// `c * q^(e/2)`.
    pub fn monomial(e: i64, c: Q) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Laurent { terms: vec![(e, c)] }
        }
    }

    /// `q^(k/2)`.
    pub fn q_half(k: i64) -> Self {
        Self::monomial(k, Q::one())
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::q_half(2 * k)
    }

    pub fn from_terms(mut terms: Vec<(i64, Q)>) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(i64, Q)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Laurent { terms: out }
    }

    pub fn terms(&self) -> &[(i64, Q)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(0)
    }

    pub fn coeff(&self, e: i64) -> Q {
        self.terms
            .binary_search_by_key(&e, |t| t.0)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Q::zero())
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn leading(&self) -> Option<&(i64, Q)> {
        self.terms.last()
    }

    /// True when every exponent is an integer power of `q`.
    pub fn is_integral_q(&self) -> bool {
        self.terms.iter().all(|t| t.0 % 2 == 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j].clone());
                j += 1;
            } else {
                let c = &a[i].1 + &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Laurent { terms: out }
    }

    pub fn neg(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.terms.len() == 1 {
            let (e, c) = &o.terms[0];
            return self.mul_monomial(*e, c);
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return o.mul_monomial(*e, c);
        }
        let mut v = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                v.push((e1 + e2, c1 * c2));
            }
        }
        Self::from_terms(v)
    }

    pub fn mul_monomial(&self, e: i64, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { terms: self.terms.iter().map(|(e0, c0)| (e0 + e, c0 * c)).collect() }
    }

    pub fn scale(&self, c: &Q) -> Self {
        self.mul_monomial(0, c)
    }

    /// Multiply by `q^(k/2)`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `q^(1/2) -> q^(-1/2)`.
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (-e, c.clone())).collect())
    }

    /// Exact division; `None` when the quotient is not a Laurent polynomial.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (e, c) = &d.terms[0];
            return Some(self.mul_monomial(-e, &c.recip()));
        }
        let (alo, bhi, blo) = (self.min_exp().unwrap(), d.max_exp().unwrap(), d.min_exp().unwrap());
        let ahi = self.max_exp().unwrap();
        if ahi - alo < bhi - blo {
            return None;
        }
        let mut r = vec![Q::zero(); (ahi - alo + 1) as usize];
        for (e, c) in &self.terms {
            r[(e - alo) as usize] = c.clone();
        }
        let mut b = vec![Q::zero(); (bhi - blo + 1) as usize];
        for (e, c) in &d.terms {
            b[(e - blo) as usize] = c.clone();
        }
        let db = b.len() - 1;
        let mut quot = vec![Q::zero(); r.len() - db];
        for i in (0..quot.len()).rev() {
            if r[i + db].is_zero() {
                continue;
            }
            let f = &r[i + db] / &b[db];
            for j in 0..=db {
                if !b[j].is_zero() {
                    let t = &f * &b[j];
                    r[i + j] -= t;
                }
            }
            quot[i] = f;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_terms(quot.into_iter().enumerate().map(|(i, c)| (i as i64 + alo - blo, c)).collect()))
    }

    /// Evaluate at a rational value of `q^(1/2)`.
    pub fn eval_half(&self, t: &Q) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            acc += c * pow_q(t, *e);
        }
        acc
    }

    pub fn content_denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
    }
}

fn pow_q(t: &Q, e: i64) -> Q {
    let mut r = Q::one();
    let base = if e < 0 { t.recip() } else { t.clone() };
    for _ in 0..e.unsigned_abs() {
        r *= &base;
    }
    r
}

pub(crate) fn fmt_rational(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// `q`, `q^3`, `q^-1`, `q^(1/2)`, `q^(-3/2)`.
pub(crate) fn fmt_qpow(e: i64) -> String {
    if e % 2 == 0 {
        match e / 2 {
            1 => "q".to_string(),
            k => format!("q^{k}"),
        }
    } else {
        format!("q^({e}/2)")
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if *e == 0 {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", fmt_qpow(*e))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), fmt_qpow(*e))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl Ring for Laurent {
    type Ctx = ();
    fn zero(_: &()) -> Self {
        Laurent::zero()
    }
    fn one(_: &()) -> Self {
        Laurent::one()
    }
    fn from_laurent(x: &Laurent, _: &()) -> Self {
        x.clone()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        Laurent::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Laurent::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Laurent::mul(self, o)
    }
    fn neg(&self) -> Self {
        Laurent::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_orders_descending() {
        let x = Laurent::from_terms(vec![(-2, qint_r(1)), (4, qint_r(3)), (1, Q::new(1.into(), 2.into()))]);
        assert_eq!(x.to_string(), "3*q^2 + 1/2*q^(1/2) + q^-1");
    }

    #[test]
    fn exact_division() {
        // (q^2 - q^-2) / (q - q^-1) = q + q^-1
        let num = Laurent::q_pow(2).sub(&Laurent::q_pow(-2));
        let den = Laurent::q_pow(1).sub(&Laurent::q_pow(-1));
        assert_eq!(num.div_exact(&den).unwrap(), Laurent::q_pow(1).add(&Laurent::q_pow(-1)));
        assert!(Laurent::one().div_exact(&den).is_none());
    }
}
