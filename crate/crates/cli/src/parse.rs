//! Expression syntax for the four algebras.
//!
//! ```text
//! top    := expr ("(x)" expr)*
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/")? factor)*
//! factor := "-" factor | atom ("^" exponent)?
//! atom   := integer | "q" | ident | "(" top ")" | "star(" top ")"
//! ```
//!
//! `q` takes half-integer exponents written `q^(1/2)` or `q^{-3/2}`.

use qmod_core::graphn::Graph;
use qmod_core::ncalg::{l01_letter, oq_letter, uq_letter, Presentation, Tensor, LI};
use qmod_core::scalars::{Field, Laurent, Q};
use qmod_core::{QmodError, Result, Sl2};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    Uq,
    Oq,
    L01,
    /// `L_{0,n}` with the given number of legs.
    L0n(usize),
}

impl Algebra {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "uq" => Some(Algebra::Uq),
            "oq" => Some(Algebra::Oq),
            "l01" => Some(Algebra::L01),
            _ => {
                let n: usize = name.strip_prefix("l0")?.parse().ok()?;
                (n >= 1).then_some(if n == 1 { Algebra::L01 } else { Algebra::L0n(n) })
            }
        }
    }

    pub fn legs(self) -> usize {
        match self {
            Algebra::L0n(n) => n,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(String),
    /// `q^(k/2)`.
    QHalf(i64),
    Gen(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Tensor(Vec<Expr>),
    Star(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
    Otimes,
}

fn perr<T>(offset: usize, msg: impl Into<String>) -> Result<T> {
    Err(QmodError::Parse { offset, msg: msg.into() })
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|c| c.1).collect();
            out.push((pos, Tok::Int(s)));
        } else if ch.is_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|c| c.1).collect())));
        } else if ch == '(' && chars.get(i + 1).map(|c| c.1) == Some('x') && chars.get(i + 2).map(|c| c.1) == Some(')') {
            out.push((pos, Tok::Otimes));
            i += 3;
        } else if "+-*/^(){}".contains(ch) {
            out.push((pos, Tok::Sym(ch)));
            i += 1;
        } else {
            return perr(pos, format!("unexpected character '{ch}'"));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            perr(self.offset(), format!("expected '{c}'"))
        }
    }

    fn top(&mut self) -> Result<Expr> {
        let mut legs = vec![self.expr()?];
        while self.peek() == Some(&Tok::Otimes) {
            self.pos += 1;
            legs.push(self.expr()?);
        }
        Ok(if legs.len() == 1 { legs.pop().unwrap() } else { Expr::Tensor(legs) })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('(')))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
            } else if self.eat('/') {
                acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
            } else if self.starts_atom() {
                acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let is_q = self.peek() == Some(&Tok::Ident("q".into()));
        let atom = self.atom()?;
        if !self.eat('^') {
            return Ok(atom);
        }
        let at = self.offset();
        let (num, den) = self.exponent()?;
        if is_q {
            if den != 1 && den != 2 {
                return perr(at, "q exponents must be half-integers");
            }
            return Ok(Expr::QHalf(num * (2 / den)));
        }
        if den != 1 {
            return perr(at, "only q takes fractional exponents");
        }
        Ok(Expr::Pow(Box::new(atom), num))
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let v: i64 = n.parse().map_err(|_| QmodError::Parse { offset: self.offset(), msg: "exponent too large".into() })?;
                Ok(if neg { -v } else { v })
            }
            _ => perr(self.offset(), "expected an integer"),
        }
    }

    fn exponent(&mut self) -> Result<(i64, i64)> {
        let close = if self.eat('(') {
            ')'
        } else if self.eat('{') {
            '}'
        } else {
            return Ok((self.int()?, 1));
        };
        let num = self.int()?;
        let den = if self.eat('/') { self.int()? } else { 1 };
        self.expect(close)?;
        if den <= 0 {
            return perr(self.offset(), "bad exponent denominator");
        }
        Ok((num, den))
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.top()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == "star" {
                    self.expect('(')?;
                    let e = self.top()?;
                    self.expect(')')?;
                    return Ok(Expr::Star(Box::new(e)));
                }
                Ok(split_ident(&name))
            }
            _ => perr(at, "expected a number, generator or '('"),
        }
    }
}

/// `q` alone, a named generator, or a run of single-letter generators.
fn split_ident(name: &str) -> Expr {
    if name == "q" || KNOWN.contains(&name) || name.chars().count() == 1 {
        return if name == "q" { Expr::QHalf(2) } else { Expr::Gen(name.to_string()) };
    }
    let mut it = name.chars().map(|c| if c == 'q' { Expr::QHalf(2) } else { Expr::Gen(c.to_string()) });
    let first = it.next().unwrap();
    it.fold(first, |acc, x| Expr::Mul(Box::new(acc), Box::new(x)))
}

const KNOWN: [&str; 3] = ["K", "Omega", "omega"];

pub fn parse(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let e = p.top()?;
    if p.pos != p.toks.len() {
        return perr(p.offset(), "unexpected trailing input");
    }
    Ok(e)
}

#[derive(Clone, Debug)]
enum Value<C: Field> {
    Scalar(C),
    Elem(Tensor<C>),
}

/// Evaluates parsed expressions in one algebra.
pub struct Evaluator<'a, C: Field> {
    pub s: &'a Sl2<C>,
    pub alg: Algebra,
}

impl<'a, C: Field> Evaluator<'a, C> {
    pub fn new(s: &'a Sl2<C>, alg: Algebra) -> Self {
        Evaluator { s, alg }
    }

    fn pres(&self, alg: Algebra) -> &'a Presentation<C> {
        match alg {
            Algebra::Uq => &self.s.uq,
            Algebra::Oq => &self.s.oq,
            _ => &self.s.l01,
        }
    }

    /// Canonical form of a parsed expression, as a tensor with `alg.legs()` legs.
    pub fn eval(&self, e: &Expr) -> Result<Tensor<C>> {
        let v = self.value(e, self.alg)?;
        let t = self.to_tensor(v, self.alg.legs());
        if t.legs() != self.alg.legs() {
            return Err(QmodError::Domain(format!("expression has {} legs, the algebra has {}", t.legs(), self.alg.legs())));
        }
        self.normalize(&t, self.alg)
    }

    /// Parses and evaluates a one-leg element.
    pub fn elem(&self, text: &str) -> Result<qmod_core::ncalg::Elem<C>> {
        let t = self.eval(&parse(text)?)?;
        Ok(t.leg_elem(0).unwrap_or_default())
    }

    pub fn tensor(&self, text: &str) -> Result<Tensor<C>> {
        self.eval(&parse(text)?)
    }

    pub fn print(&self, t: &Tensor<C>) -> String {
        match t.leg_elem(0) {
            Some(e) if t.legs() == 1 => self.pres(self.alg).fmt(&e),
            _ => t.fmt(&[self.pres(self.alg)]),
        }
    }

    fn normalize(&self, t: &Tensor<C>, alg: Algebra) -> Result<Tensor<C>> {
        match alg {
            Algebra::L0n(n) if t.legs() == n => Graph::new(self.s, n).normalize(t),
            _ => t.reduce(&vec![self.pres(alg); t.legs()]),
        }
    }

    fn to_tensor(&self, v: Value<C>, legs: usize) -> Tensor<C> {
        match v {
            Value::Scalar(c) => Tensor::one(legs, self.s.ctx()).scale(&c),
            Value::Elem(t) => t,
        }
    }

    fn gen(&self, name: &str, alg: Algebra) -> Result<Tensor<C>> {
        let s = self.s;
        let x = match (alg, name) {
            (Algebra::Uq, "K") => s.k(),
            (Algebra::Uq, "Omega") => s.casimir(),
            (Algebra::L01 | Algebra::L0n(_), "omega") => s.omega(),
            (Algebra::Uq, _) => s.letter(uq_letter(name).ok_or_else(|| unknown(name, alg))?),
            (Algebra::Oq, _) => s.letter(oq_letter(name).ok_or_else(|| unknown(name, alg))?),
            _ => s.letter(l01_letter(name).ok_or_else(|| unknown(name, alg))?),
        };
        Ok(Tensor::embed(&x, 0, 1))
    }

    fn mul(&self, u: Value<C>, v: Value<C>, alg: Algebra) -> Result<Value<C>> {
        Ok(match (u, v) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a.mul(&b)),
            (Value::Scalar(a), Value::Elem(t)) | (Value::Elem(t), Value::Scalar(a)) => Value::Elem(t.scale(&a)),
            (Value::Elem(t), Value::Elem(u)) => {
                if t.legs() != u.legs() {
                    return Err(QmodError::Domain(format!("cannot multiply {} legs by {} legs", t.legs(), u.legs())));
                }
                match alg {
                    Algebra::L0n(_) | Algebra::L01 if t.legs() > 1 => Value::Elem(Graph::new(self.s, t.legs()).mul(&t, &u)?),
                    _ => Value::Elem(t.mul_legwise(&u, &vec![self.pres(alg); t.legs()])?),
                }
            }
        })
    }

    fn add(&self, u: Value<C>, v: Value<C>) -> Result<Value<C>> {
        Ok(match (u, v) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a.add(&b)),
            (Value::Scalar(a), Value::Elem(t)) | (Value::Elem(t), Value::Scalar(a)) => Value::Elem(t.add(&Tensor::one(t.legs(), self.s.ctx()).scale(&a))),
            (Value::Elem(t), Value::Elem(u)) => {
                if t.legs() != u.legs() {
                    return Err(QmodError::Domain(format!("cannot add {} legs to {} legs", t.legs(), u.legs())));
                }
                Value::Elem(t.add(&u))
            }
        })
    }

    fn neg(&self, v: Value<C>) -> Value<C> {
        match v {
            Value::Scalar(a) => Value::Scalar(a.neg()),
            Value::Elem(t) => Value::Elem(t.scale(&C::one(self.s.ctx()).neg())),
        }
    }

    fn value(&self, e: &Expr, alg: Algebra) -> Result<Value<C>> {
        let s = self.s;
        Ok(match e {
            Expr::Int(n) => Value::Scalar(s.c(&Laurent::constant(n.parse::<Q>().expect("digits")))),
            Expr::QHalf(k) => Value::Scalar(s.c(&Laurent::q_half(*k))),
            Expr::Gen(name) => Value::Elem(self.gen(name, alg)?),
            Expr::Add(a, b) => self.add(self.value(a, alg)?, self.value(b, alg)?)?,
            Expr::Sub(a, b) => {
                let nb = self.neg(self.value(b, alg)?);
                self.add(self.value(a, alg)?, nb)?
            }
            Expr::Neg(a) => self.neg(self.value(a, alg)?),
            Expr::Mul(a, b) => self.mul(self.value(a, alg)?, self.value(b, alg)?, alg)?,
            Expr::Div(a, b) => match self.value(b, alg)? {
                Value::Scalar(c) => {
                    let inv = c.inv().ok_or_else(|| QmodError::Domain("division by zero".into()))?;
                    self.mul(self.value(a, alg)?, Value::Scalar(inv), alg)?
                }
                Value::Elem(_) => return Err(QmodError::Domain("division by a non-scalar".into())),
            },
            Expr::Pow(a, n) => self.pow(a, *n, alg)?,
            Expr::Tensor(legs) => {
                let mut acc = Tensor::pure(Vec::new(), C::one(s.ctx()));
                for leg in legs {
                    let v = self.value(leg, alg)?;
                    let t = self.to_tensor(v, 1);
                    acc = acc.kron(&t);
                }
                Value::Elem(acc)
            }
            Expr::Star(inner) => match alg {
                Algebra::Oq => self.value(inner, alg)?,
                Algebra::Uq => return Err(QmodError::Domain("star(...) needs a matrix-coefficient algebra".into())),
                _ => match self.value(inner, Algebra::Oq)? {
                    Value::Scalar(c) => Value::Scalar(c),
                    Value::Elem(t) => {
                        let mut cur = t.reduce(&vec![&s.oq; t.legs()])?;
                        for leg in 0..cur.legs() {
                            cur = cur.apply_leg(leg, 1, |w| Ok(Tensor::embed(&s.star_to_loop(&s.word(w))?, 0, 1)))?;
                        }
                        Value::Elem(cur)
                    }
                },
            },
        })
    }

    fn pow(&self, a: &Expr, n: i64, alg: Algebra) -> Result<Value<C>> {
        let s = self.s;
        if n < 0 {
            if alg == Algebra::Uq && *a == Expr::Gen("L".into()) {
                let t = Tensor::embed(&s.word(&vec![LI; n.unsigned_abs() as usize]), 0, 1);
                return Ok(Value::Elem(t));
            }
            if alg == Algebra::Uq && *a == Expr::Gen("K".into()) {
                let t = Tensor::embed(&s.word(&vec![LI; 2 * n.unsigned_abs() as usize]), 0, 1);
                return Ok(Value::Elem(t));
            }
        }
        let base = self.value(a, alg)?;
        match base {
            Value::Scalar(c) => {
                let p = c.pow(n.unsigned_abs() as u32, s.ctx());
                if n < 0 {
                    Ok(Value::Scalar(p.inv().ok_or_else(|| QmodError::Domain("zero to a negative power".into()))?))
                } else {
                    Ok(Value::Scalar(p))
                }
            }
            Value::Elem(t) => {
                if n < 0 {
                    return Err(QmodError::Domain("negative power of a non-invertible element".into()));
                }
                let mut acc = Value::Scalar(C::one(s.ctx()));
                for _ in 0..n {
                    acc = self.mul(acc, Value::Elem(t.clone()), alg)?;
                }
                Ok(acc)
            }
        }
    }
}

fn unknown(name: &str, alg: Algebra) -> QmodError {
    QmodError::Domain(format!("unknown generator '{name}' for {alg:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use qmod_core::scalars::Rf;

    fn ev(alg: Algebra, text: &str) -> String {
        let s: Sl2<Rf> = Sl2::generic();
        let e = Evaluator::new(&s, alg);
        let t = e.tensor(text).unwrap();
        e.print(&t)
    }

    #[test]
    fn relations_reduce() {
        assert_eq!(ev(Algebra::L01, "d*b - q^2*b*d"), "0");
        assert_eq!(ev(Algebra::L01, "q^2*b*d"), "q^2*b*d");
        assert_eq!(ev(Algebra::Uq, "L L^-1"), "1");
        assert_eq!(ev(Algebra::Uq, "K^-1"), "L^-2");
        assert_eq!(ev(Algebra::Oq, "a*d - q^-1*b*c"), "1");
    }

    #[test]
    fn tensors_and_precedence() {
        assert_eq!(ev(Algebra::L0n(2), "b (x) d"), "b (x) d");
        assert_eq!(ev(Algebra::L0n(2), "(a (x) 1)*(1 (x) b)"), "a (x) b");
        assert_eq!(ev(Algebra::L0n(2), "2*(a (x) b) - (a (x) b)"), "a (x) b");
    }

    #[test]
    fn scalars() {
        assert_eq!(ev(Algebra::Oq, "q^(1/2)*q^{1/2}"), "q");
        assert_eq!(ev(Algebra::Oq, "3/4 a"), "3/4*a");
        assert_eq!(ev(Algebra::Oq, "(q^2 - 1)/(q - q^-1)"), "q");
        assert_eq!(ev(Algebra::Oq, "123456789012345678901234567890 a - 123456789012345678901234567890 a"), "0");
    }

    #[test]
    fn star_selector() {
        let s: Sl2<Rf> = Sl2::generic();
        let e = Evaluator::new(&s, Algebra::L01);
        let via_star = e.elem("star(a*d)").unwrap();
        assert_eq!(s.loop_to_star(&via_star).unwrap(), s.oq.reduce(&s.word(&[0, 3])).unwrap());
    }

    #[test]
    fn errors_carry_offsets() {
        match parse("a + * b") {
            Err(QmodError::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse("a (x b").is_err());
        let s: Sl2<Rf> = Sl2::generic();
        assert!(Evaluator::new(&s, Algebra::Oq).tensor("E").is_err());
    }
}
