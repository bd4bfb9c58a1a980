use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use parking_lot::RwLock;

use super::{Elem, Word};
use crate::error::{QmodError, Result};
use crate::report::{Case, Report};
use crate::scalars::Ring;

/// Monomial order family. Both compare length first, then the number of
/// "off-diagonal" letters, then inversions, then lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    /// Letters `F < L < L^-1 < E`; off-diagonal letters are `E`, `F`.
    Pbw,
    /// Letters `a < b < c < d`; off-diagonal letters are `b`, `c`, then the count of `a`.
    Frt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// A rewrite rule `lhs -> rhs` with a two-letter leading word.
#[derive(Clone, Debug)]
pub struct Rule<C: Ring> {
    pub lhs: [u8; 2],
    pub rhs: Elem<C>,
}

const MAX_DEPTH: usize = 1500;

fn step_budget() -> u64 {
    static B: OnceLock<u64> = OnceLock::new();
    *B.get_or_init(|| std::env::var("QMOD_STEP_BUDGET").ok().and_then(|s| s.parse().ok()).unwrap_or(1_000_000))
}

/// Finitely presented algebra with a quadratic-leading-word rewrite system.
pub struct Presentation<C: Ring> {
    name: String,
    letters: Vec<String>,
    kind: OrderKind,
    rules: HashMap<[u8; 2], Elem<C>>,
    rule_list: Vec<Rule<C>>,
    /// Pairs of mutually inverse letters, merged when printing.
    inverse: Vec<(u8, u8)>,
    ctx: C::Ctx,
    budget: u64,
    cache: RwLock<HashMap<Word, Elem<C>>>,
}

impl<C: Ring> Presentation<C> {
    pub fn new(name: &str, letters: &[&str], kind: OrderKind, rules: Vec<Rule<C>>, inverse: Vec<(u8, u8)>, ctx: C::Ctx) -> Self {
        let map = rules.iter().map(|r| (r.lhs, r.rhs.clone())).collect();
        Presentation {
            name: name.to_string(),
            letters: letters.iter().map(|s| s.to_string()).collect(),
            kind,
            rules: map,
            rule_list: rules,
            inverse,
            ctx,
            budget: step_budget(),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ctx(&self) -> &C::Ctx {
        &self.ctx
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn rules(&self) -> &[Rule<C>] {
        &self.rule_list
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn letter_index(&self, name: &str) -> Option<u8> {
        self.letters.iter().position(|l| l == name).map(|i| i as u8)
    }

    pub fn one(&self) -> Elem<C> {
        Elem::one(&self.ctx)
    }

    pub fn gen(&self, x: u8) -> Elem<C> {
        Elem::letter(x, &self.ctx)
    }

    pub fn scalar(&self, c: C) -> Elem<C> {
        Elem::scalar(c)
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        w.windows(2).all(|p| !self.rules.contains_key(&[p[0], p[1]]))
    }

    fn order_key(&self, w: &[u8]) -> (usize, usize, usize, usize) {
        let inv = w.iter().enumerate().map(|(i, x)| w[i + 1..].iter().filter(|y| *y < x).count()).sum();
        match self.kind {
            OrderKind::Pbw => {
                let ef = w.iter().filter(|&&x| x == super::E || x == super::F).count();
                (w.len(), ef, 0, inv)
            }
            OrderKind::Frt => {
                let bc = w.iter().filter(|&&x| x == super::B || x == super::C_).count();
                let a = w.iter().filter(|&&x| x == super::A).count();
                (w.len(), bc, a, inv)
            }
        }
    }

    /// Monomial order comparison.
    pub fn cmp_words(&self, u: &[u8], v: &[u8]) -> Ordering {
        self.order_key(u).cmp(&self.order_key(v)).then_with(|| u.cmp(v))
    }

    /// Normal form of a single word.
    pub fn reduce_word(&self, w: &[u8]) -> Result<Elem<C>> {
        let mut steps = 0;
        self.nf_word(w, &mut steps, 0)
    }

    /// Normal form of an element.
    pub fn reduce(&self, e: &Elem<C>) -> Result<Elem<C>> {
        let mut steps = 0;
        e.try_map_linear(|w| self.nf_word(w, &mut steps, 0))
    }

    /// Product followed by normal form.
    pub fn mul(&self, x: &Elem<C>, y: &Elem<C>) -> Result<Elem<C>> {
        let mut steps = 0;
        let mut out = Elem::zero();
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_scaled(&self.nf_word(&w, &mut steps, 0)?, &a.mul(b));
            }
        }
        Ok(out)
    }

    pub fn mul_all(&self, xs: &[Elem<C>]) -> Result<Elem<C>> {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, x: &Elem<C>, n: u32) -> Result<Elem<C>> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    fn too_long(&self, w: &[u8]) -> QmodError {
        QmodError::NonTerminating { budget: self.budget, word: self.fmt_word(w) }
    }

    fn nf_word(&self, w: &[u8], steps: &mut u64, depth: usize) -> Result<Elem<C>> {
        if w.len() < 2 {
            return Ok(Elem::word(w.to_vec(), &self.ctx));
        }
        if let Some(e) = self.cache.read().get(w) {
            return Ok(e.clone());
        }
        if depth > MAX_DEPTH {
            return Err(self.too_long(w));
        }
        let n = w.len();
        let prefix = self.nf_word(&w[..n - 1], steps, depth + 1)?;
        let x = w[n - 1];
        let mut out = Elem::zero();
        for (u, c) in prefix.terms() {
            let last = match u.last() {
                Some(&l) => l,
                None => {
                    out.add_term(vec![x], c);
                    continue;
                }
            };
            match self.rules.get(&[last, x]) {
                None => {
                    let mut v = u.clone();
                    v.push(x);
                    out.add_term(v, c);
                }
                Some(rhs) => {
                    *steps += 1;
                    if *steps > self.budget {
                        return Err(self.too_long(w));
                    }
                    let stem = &u[..u.len() - 1];
                    for (r, rc) in rhs.terms() {
                        let mut v = stem.to_vec();
                        v.extend_from_slice(r);
                        let part = self.nf_word(&v, steps, depth + 1)?;
                        out.add_scaled(&part, &rc.mul(c));
                    }
                }
            }
        }
        self.cache.write().insert(w.to_vec(), out.clone());
        Ok(out)
    }

    /// Reduction by repeatedly rewriting the leftmost or rightmost redex, without memoisation.
    pub fn reduce_with(&self, e: &Elem<C>, strategy: Strategy) -> Result<Elem<C>> {
        let mut todo = e.clone();
        let mut done = Elem::zero();
        let mut steps = 0u64;
        loop {
            let first = todo.terms().next().map(|(w, c)| (w.clone(), c.clone()));
            let Some((w, c)) = first else { break };
            todo.add_term(w.clone(), &c.neg());
            let pos: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| self.rules.contains_key(&[w[i], w[i + 1]])).collect();
            let p = match strategy {
                Strategy::Leftmost => pos.first(),
                Strategy::Rightmost => pos.last(),
            };
            match p {
                None => done.add_term(w, &c),
                Some(&i) => {
                    steps += 1;
                    if steps > self.budget {
                        return Err(self.too_long(&w));
                    }
                    let rhs = &self.rules[&[w[i], w[i + 1]]];
                    for (r, rc) in rhs.terms() {
                        let mut v = w[..i].to_vec();
                        v.extend_from_slice(r);
                        v.extend_from_slice(&w[i + 2..]);
                        todo.add_term(v, &rc.mul(&c));
                    }
                }
            }
        }
        Ok(done)
    }

    /// Checks that every rule decreases the monomial order, that all overlaps
    /// `xyz` of two leading words resolve, and that leftmost, rightmost and
    /// memoised reduction agree on every word up to `degree_bound`.
    pub fn check_confluence(&self, degree_bound: usize) -> Report {
        let mut rep = Report::new(&format!("confluence-{}", self.name));
        for r in &self.rule_list {
            let lhs = self.fmt_word(&r.lhs);
            let bad = r.rhs.terms().find(|(w, _)| self.cmp_words(w, &r.lhs) != Ordering::Less);
            match bad {
                None => rep.push(Case::pass(&format!("order:{lhs}"))),
                Some((w, _)) => rep.push(Case::fail(&format!("order:{lhs}"), "rhs below lhs", &self.fmt_word(w), &lhs)),
            }
        }
        for r1 in &self.rule_list {
            for r2 in &self.rule_list {
                if r1.lhs[1] != r2.lhs[0] {
                    continue;
                }
                let (x, y, z) = (r1.lhs[0], r1.lhs[1], r2.lhs[1]);
                let id = format!("overlap:{}", self.fmt_word(&[x, y, z]));
                let left = r1.rhs.concat(&Elem::letter(z, &self.ctx));
                let right = Elem::letter(x, &self.ctx).concat(&r2.rhs);
                let res = self
                    .reduce_with(&left, Strategy::Leftmost)
                    .and_then(|l| self.reduce_with(&right, Strategy::Leftmost).map(|r| (l, r)));
                match res {
                    Ok((l, r)) if l == r => rep.push(Case::pass(&id)),
                    Ok((l, r)) => rep.push(Case::fail(&id, &self.fmt(&l), &self.fmt(&r), &self.fmt_word(&[x, y, z]))),
                    Err(e) => rep.push(Case::fail(&id, "terminating reduction", &e.to_string(), &self.fmt_word(&[x, y, z]))),
                }
            }
        }
        let k = self.letters.len() as u8;
        let mut words: Vec<Word> = vec![Vec::new()];
        let mut mismatch = None;
        for _ in 0..degree_bound {
            words = words.iter().flat_map(|w| (0..k).map(move |x| {
                let mut v = w.clone();
                v.push(x);
                v
            })).collect();
            for w in &words {
                let e = Elem::word(w.clone(), &self.ctx);
                let a = self.reduce_with(&e, Strategy::Leftmost);
                let b = self.reduce_with(&e, Strategy::Rightmost);
                let c = self.reduce(&e);
                let ok = matches!((&a, &b, &c), (Ok(a), Ok(b), Ok(c)) if a == b && b == c);
                if !ok && mismatch.is_none() {
                    let show = |r: &Result<Elem<C>>| r.as_ref().map(|x| self.fmt(x)).unwrap_or_else(|e| e.to_string());
                    mismatch = Some(Case::fail("strategies", &show(&a), &show(&b), &self.fmt_word(w)));
                }
            }
        }
        rep.push(mismatch.unwrap_or_else(|| Case::pass("strategies")));
        rep
    }

    /// Word printed with `*` separators and merged powers, e.g. `F^2*L^-1*E`.
    pub fn fmt_word(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<(u8, i64)> = Vec::new();
        for &x in w {
            let (base, sign) = match self.inverse.iter().find(|p| p.1 == x) {
                Some(p) => (p.0, -1),
                None => (x, 1),
            };
            match parts.last_mut() {
                Some((b, e)) if *b == base && (*e > 0) == (sign > 0) => *e += sign,
                _ => parts.push((base, sign)),
            }
        }
        let mut s = String::new();
        for (i, (b, e)) in parts.iter().enumerate() {
            if i > 0 {
                s.push('*');
            }
            s.push_str(&self.letters[*b as usize]);
            if *e != 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }

    /// Canonical printing: terms in decreasing monomial order, `coeff*word`.
    pub fn fmt(&self, e: &Elem<C>) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let mut ws: Vec<(&Word, &C)> = e.terms().collect();
        ws.sort_by(|a, b| self.cmp_words(b.0, a.0));
        let mut s = String::new();
        for (i, (w, c)) in ws.into_iter().enumerate() {
            let (neg, body) = fmt_coeff(c);
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match (body.as_str(), w.is_empty()) {
                ("1", true) => s.push('1'),
                ("1", false) => s.push_str(&self.fmt_word(w)),
                (b, true) => s.push_str(b),
                (b, false) => {
                    s.push_str(b);
                    s.push('*');
                    s.push_str(&self.fmt_word(w));
                }
            }
        }
        s
    }
}

/// Sign and printable body of a coefficient; compound coefficients are parenthesised.
pub(crate) fn fmt_coeff<C: Ring>(c: &C) -> (bool, String) {
    let s = c.to_string();
    let (neg, rest) = match s.strip_prefix('-') {
        Some(r) => (true, r.to_string()),
        None => (false, s),
    };
    let mut depth = 0i32;
    let mut compound = false;
    for ch in rest.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ' ' if depth == 0 => compound = true,
            '/' if depth == 0 && rest.starts_with('(') => compound = true,
            _ => {}
        }
    }
    if compound {
        if neg && rest.contains(' ') && !rest.starts_with('(') {
            return (false, format!("(-{rest})"));
        }
        (neg, format!("({rest})"))
    } else {
        (neg, rest)
    }
}
