use std::collections::BTreeMap;

use super::{Elem, Presentation, Word};
use crate::error::Result;
use crate::scalars::Ring;

/// Linear combination of `n`-tuples of words; legs are interpreted in
/// presentations supplied by the caller.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor<C: Ring> {
    legs: usize,
    terms: BTreeMap<Vec<Word>, C>,
}

impl<C: Ring> Tensor<C> {
    pub fn zero(legs: usize) -> Self {
        Tensor { legs, terms: BTreeMap::new() }
    }

    pub fn one(legs: usize, ctx: &C::Ctx) -> Self {
        Self::pure(vec![Vec::new(); legs], C::one(ctx))
    }

    pub fn pure(words: Vec<Word>, c: C) -> Self {
        let mut t = Self::zero(words.len());
        t.add_term(words, &c);
        t
    }

    /// `x` placed on leg `a`, units elsewhere.
    pub fn embed(x: &Elem<C>, a: usize, legs: usize) -> Self {
        let mut t = Self::zero(legs);
        for (w, c) in x.terms() {
            let mut ws = vec![Vec::new(); legs];
            ws[a] = w.clone();
            t.add_term(ws, c);
        }
        t
    }

    /// `x ⊗ y` for single-leg elements.
    pub fn from_pair(x: &Elem<C>, y: &Elem<C>) -> Self {
        let mut t = Self::zero(2);
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                t.add_term(vec![u.clone(), v.clone()], &a.mul(b));
            }
        }
        t
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &C)> {
        self.terms.iter()
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

    pub fn coeff(&self, ws: &[Word]) -> Option<&C> {
        self.terms.get(ws)
    }

    pub fn add_term(&mut self, ws: Vec<Word>, c: &C) {
        debug_assert_eq!(ws.len(), self.legs);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&ws) {
            Some(x) => {
                x.add_assign(c);
                if x.is_zero() {
                    self.terms.remove(&ws);
                }
            }
            None => {
                self.terms.insert(ws, c.clone());
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

    pub fn scale(&self, c: &C) -> Self {
        let mut r = Self::zero(self.legs);
        r.add_scaled(self, c);
        r
    }

    /// Concatenation of legs: `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.legs + o.legs);
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                let mut w = u.clone();
                w.extend(v.iter().cloned());
                r.add_term(w, &a.mul(b));
            }
        }
        r
    }

    /// Applies a linear map on leg `a`, producing `k` legs in its place.
    pub fn apply_leg(&self, a: usize, k: usize, mut f: impl FnMut(&Word) -> Result<Tensor<C>>) -> Result<Self> {
        let mut r = Self::zero(self.legs + k - 1);
        for (ws, c) in &self.terms {
            let img = f(&ws[a])?;
            for (vs, d) in img.terms() {
                let mut w: Vec<Word> = ws[..a].to_vec();
                w.extend(vs.iter().cloned());
                w.extend(ws[a + 1..].iter().cloned());
                r.add_term(w, &c.mul(d));
            }
        }
        Ok(r)
    }

    /// Contracts every leg with scalar functionals.
    pub fn contract(&self, ctx: &C::Ctx, mut f: impl FnMut(usize, &Word) -> C) -> C {
        let mut acc = C::zero(ctx);
        for (ws, c) in &self.terms {
            let mut t = c.clone();
            for (i, w) in ws.iter().enumerate() {
                if t.is_zero() {
                    break;
                }
                t = t.mul(&f(i, w));
            }
            acc.add_assign(&t);
        }
        acc
    }

    /// Collapses all legs to one by multiplying them in order.
    pub fn multiply_out(&self, p: &Presentation<C>) -> Result<Elem<C>> {
        let mut out = Elem::zero();
        for (ws, c) in &self.terms {
            let w: Word = ws.concat();
            out.add_scaled(&p.reduce_word(&w)?, c);
        }
        Ok(out)
    }

    /// Leg `a` as a single-leg element, when all other legs are units.
    pub fn leg_elem(&self, a: usize) -> Option<Elem<C>> {
        let mut e = Elem::zero();
        for (ws, c) in &self.terms {
            if ws.iter().enumerate().any(|(i, w)| i != a && !w.is_empty()) {
                return None;
            }
            e.add_term(ws[a].clone(), c);
        }
        Some(e)
    }

    /// Normal form of every leg.
    pub fn reduce(&self, ps: &[&Presentation<C>]) -> Result<Self> {
        let mut r = Self::zero(self.legs);
        for (ws, c) in &self.terms {
            let mut acc = Tensor::pure(Vec::new(), c.clone());
            for (i, w) in ws.iter().enumerate() {
                let e = ps[i.min(ps.len() - 1)].reduce_word(w)?;
                acc = acc.kron(&Tensor::embed(&e, 0, 1));
            }
            r.add_assign(&acc);
        }
        Ok(r)
    }

    /// Legwise product, reduced in the given presentations.
    pub fn mul_legwise(&self, o: &Self, ps: &[&Presentation<C>]) -> Result<Self> {
        let mut raw = Self::zero(self.legs);
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                let w: Vec<Word> = u.iter().zip(v).map(|(x, y)| {
                    let mut z = x.clone();
                    z.extend_from_slice(y);
                    z
                }).collect();
                raw.add_term(w, &a.mul(b));
            }
        }
        raw.reduce(ps)
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> Tensor<D> {
        let mut t = Tensor::zero(self.legs);
        for (w, c) in &self.terms {
            t.add_term(w.clone(), &f(c));
        }
        t
    }

    /// Canonical printing with legs separated by ` (x) `.
    pub fn fmt(&self, ps: &[&Presentation<C>]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (ws, c)) in self.terms.iter().enumerate() {
            let (neg, body) = super::presentation::fmt_coeff(c);
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let legs: Vec<String> = ws.iter().enumerate().map(|(k, w)| ps[k.min(ps.len() - 1)].fmt_word(w)).collect();
            let inner = legs.join(" (x) ");
            if body == "1" {
                if self.legs > 1 && self.terms.len() > 1 {
                    s.push_str(&format!("({inner})"));
                } else {
                    s.push_str(&inner);
                }
            } else if self.legs > 1 {
                s.push_str(&format!("{body}*({inner})"));
            } else {
                s.push_str(&format!("{body}*{inner}"));
            }
        }
        s
    }
}
