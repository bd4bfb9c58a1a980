//! Free-algebra elements and normal-form rewriting for finitely presented algebras.

mod presentation;
mod sl2;
mod tensor;

use std::collections::BTreeMap;

use crate::scalars::Ring;

pub use presentation::{OrderKind, Presentation, Rule, Strategy};
pub use tensor::Tensor;
pub use sl2::{l01_sl2, oq_sl2, uq_sl2, l01_letter, oq_letter, uq_letter, A, B, C_, D, E, F, L, LI};

/// A word in the generators, stored as letter indices.
pub type Word = Vec<u8>;

/// Finite linear combination of words with coefficients in `C`.
#[derive(Clone, PartialEq, Debug)]
pub struct Elem<C: Ring> {
    terms: BTreeMap<Word, C>,
}

impl<C: Ring> Default for Elem<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Ring> Elem<C> {
    pub fn zero() -> Self {
        Elem { terms: BTreeMap::new() }
    }

    pub fn one(ctx: &C::Ctx) -> Self {
        Self::word(Vec::new(), ctx)
    }

    pub fn word(w: Word, ctx: &C::Ctx) -> Self {
        Self::monomial(w, C::one(ctx))
    }

    pub fn letter(x: u8, ctx: &C::Ctx) -> Self {
        Self::word(vec![x], ctx)
    }

    pub fn scalar(c: C) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn monomial(w: Word, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Elem { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, C)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in it {
            e.add_term(w, &c);
        }
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, C)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[u8]) -> Option<&C> {
        self.terms.get(w)
    }

    /// Length of the longest word; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    /// Scalar value if the element is a multiple of the empty word.
    pub fn as_scalar(&self, ctx: &C::Ctx) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero(ctx)),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                x.add_assign(c);
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Self, c: &C) {
        for (w, x) in &o.terms {
            self.add_term(w.clone(), &x.mul(c));
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (w, x) in &o.terms {
            self.add_term(w.clone(), x);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, x) in &o.terms {
            r.add_term(w.clone(), &x.neg());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Elem { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Elem { terms: self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))).filter(|(_, x)| !x.is_zero()).collect() }
    }

    /// Product in the free algebra (concatenation, no rewriting).
    pub fn concat(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                r.add_term(w, &a.mul(b));
            }
        }
        r
    }

    /// Linear extension of a word map.
    pub fn map_linear(&self, mut f: impl FnMut(&Word) -> Self) -> Self {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            r.add_scaled(&f(w), c);
        }
        r
    }

    /// Linear extension of a fallible word map.
    pub fn try_map_linear<E>(&self, mut f: impl FnMut(&Word) -> Result<Self, E>) -> Result<Self, E> {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            r.add_scaled(&f(w)?, c);
        }
        Ok(r)
    }

    /// Coefficient-wise change of ring.
    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> Elem<D> {
        Elem::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }
}

/// Coefficient matrix of `elems` (one row each) over the union of their supports.
pub fn coordinate_matrix<C: Ring>(elems: &[Elem<C>], ctx: &C::Ctx) -> (Vec<Word>, crate::linalg::Mat<C>) {
    let support: BTreeMap<Word, usize> = {
        let mut ws: Vec<Word> = elems.iter().flat_map(|e| e.terms.keys().cloned()).collect();
        ws.sort();
        ws.dedup();
        ws.into_iter().enumerate().map(|(i, w)| (w, i)).collect()
    };
    let mut m = crate::linalg::Mat::zeros(elems.len(), support.len(), ctx);
    for (r, e) in elems.iter().enumerate() {
        for (w, c) in &e.terms {
            m.set(r, support[w], c.clone());
        }
    }
    (support.into_keys().collect(), m)
}

/// Dimension of the span of `elems`.
pub fn span_dim<C: crate::scalars::Field>(elems: &[Elem<C>], ctx: &C::Ctx) -> usize {
    coordinate_matrix(elems, ctx).1.rank()
}
