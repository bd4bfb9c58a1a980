use std::fmt::{Debug, Display};

use super::{Laurent, RatFunc};

/// Commutative coefficient ring. Constants are built through a context so that
/// cyclotomic fields can carry their modulus.
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    type Ctx: Clone + Debug + PartialEq + Send + Sync + 'static;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_laurent(x: &Laurent, ctx: &Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn from_int(n: i64, ctx: &Self::Ctx) -> Self {
        Self::from_laurent(&Laurent::from_int(n), ctx)
    }

    /// `q^(k/2)`.
    fn q_half(k: i64, ctx: &Self::Ctx) -> Self {
        Self::from_laurent(&Laurent::q_half(k), ctx)
    }

    fn is_one(&self, ctx: &Self::Ctx) -> bool {
        *self == Self::one(ctx)
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn pow(&self, n: u32, ctx: &Self::Ctx) -> Self {
        let mut acc = Self::one(ctx);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    /// Image of a rational function; `None` when the denominator vanishes.
    fn from_ratfunc(x: &RatFunc, ctx: &Self::Ctx) -> Option<Self> {
        Self::from_laurent(x.num(), ctx).div(&Self::from_laurent(x.den(), ctx))
    }
}
