//! Hopf structure of `U_q(sl2)` and `O_q(SL2)`, their evaluation pairing, the
//! coregular and coadjoint actions, the Drinfeld pairing and the maps `Φ^±`.

use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{QmodError, Result};
use crate::linalg::Mat;
use crate::ncalg::{l01_sl2, oq_sl2, uq_sl2, Elem, Presentation, Tensor, Word, A, B, C_, D, E, F, L, LI};
use crate::repmod::{indices_word, pi_w, r_w, word_indices};
use crate::report::{Case, Report};
use crate::scalars::{qdiff, Cyclo, CycloField, Field, Laurent, Rf};

/// The three algebras over one coefficient field, with shared caches.
pub struct Sl2<C: Field> {
    pub uq: Presentation<C>,
    pub oq: Presentation<C>,
    pub l01: Presentation<C>,
    ctx: C::Ctx,
    delta_cache: RwLock<HashMap<Word, Tensor<C>>>,
    pub(crate) l2s_cache: RwLock<HashMap<Word, Elem<C>>>,
    pub(crate) s2l_cache: RwLock<HashMap<usize, Arc<crate::loop01::GradedInverse<C>>>>,
    pub(crate) s2l_word_cache: RwLock<HashMap<Word, Elem<C>>>,
    pub(crate) exchange_cache: RwLock<HashMap<(bool, Word, Word), Tensor<C>>>,
    pub(crate) phin_cache: RwLock<HashMap<(usize, usize, u8), Tensor<C>>>,
}

impl Sl2<Rf> {
    /// Generic `q`.
    pub fn generic() -> Self {
        Sl2::new(())
    }
}

impl Sl2<Cyclo> {
    /// `q` specialised to a primitive `l`-th root of unity.
    pub fn at_root(l: u32) -> Result<Self> {
        Ok(Sl2::new(CycloField::new(l)?))
    }
}

fn lq(k: i64) -> Laurent {
    Laurent::q_pow(k)
}

impl<C: Field> Sl2<C> {
    pub fn new(ctx: C::Ctx) -> Self {
        Sl2 {
            uq: uq_sl2(ctx.clone()),
            oq: oq_sl2(ctx.clone()),
            l01: l01_sl2(ctx.clone()),
            ctx,
            delta_cache: RwLock::new(HashMap::new()),
            l2s_cache: RwLock::new(HashMap::new()),
            s2l_cache: RwLock::new(HashMap::new()),
            s2l_word_cache: RwLock::new(HashMap::new()),
            exchange_cache: RwLock::new(HashMap::new()),
            phin_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn ctx(&self) -> &C::Ctx {
        &self.ctx
    }

    /// Image of a Laurent polynomial in the coefficient field.
    pub fn c(&self, x: &Laurent) -> C {
        C::from_laurent(x, &self.ctx)
    }

    pub fn int(&self, n: i64) -> C {
        C::from_int(n, &self.ctx)
    }

    pub fn letter(&self, x: u8) -> Elem<C> {
        Elem::letter(x, &self.ctx)
    }

    pub fn word(&self, w: &[u8]) -> Elem<C> {
        Elem::word(w.to_vec(), &self.ctx)
    }

    pub fn mono(&self, w: &[u8], c: Laurent) -> Elem<C> {
        Elem::monomial(w.to_vec(), self.c(&c))
    }

    /// `K = L^2`.
    pub fn k(&self) -> Elem<C> {
        self.word(&[L, L])
    }

    pub fn kinv(&self) -> Elem<C> {
        self.word(&[LI, LI])
    }

    /// `Ω = (q-q^-1)^2 F E + q K + q^-1 K^-1`.
    pub fn casimir(&self) -> Elem<C> {
        let mut o = self.mono(&[F, E], qdiff().pow(2));
        o.add_assign(&self.mono(&[L, L], lq(1)));
        o.add_assign(&self.mono(&[LI, LI], lq(-1)));
        o
    }

    /// `ω = q a + q^-1 d`.
    pub fn omega(&self) -> Elem<C> {
        self.mono(&[A], lq(1)).add(&self.mono(&[D], lq(-1)))
    }

    // ---- U_q ----

    fn uq_letter_delta(&self, x: u8) -> Tensor<C> {
        let one = C::one(&self.ctx);
        let p = |a: &[u8], b: &[u8]| Tensor::pure(vec![a.to_vec(), b.to_vec()], one.clone());
        match x {
            E => p(&[E], &[L, L]).add(&p(&[], &[E])),
            F => p(&[LI, LI], &[F]).add(&p(&[F], &[])),
            L => p(&[L], &[L]),
            LI => p(&[LI], &[LI]),
            _ => unreachable!(),
        }
    }

    fn uq_delta_word(&self, w: &[u8]) -> Result<Tensor<C>> {
        if let Some(t) = self.delta_cache.read().get(w) {
            return Ok(t.clone());
        }
        let t = match w.len() {
            0 => Tensor::one(2, &self.ctx),
            1 => self.uq_letter_delta(w[0]),
            n => {
                let head = self.uq_delta_word(&w[..n - 1])?;
                head.mul_legwise(&self.uq_letter_delta(w[n - 1]), &[&self.uq])?
            }
        };
        self.delta_cache.write().insert(w.to_vec(), t.clone());
        Ok(t)
    }

    /// `Δ` on `U_q`.
    pub fn uq_coproduct(&self, x: &Elem<C>) -> Result<Tensor<C>> {
        let mut out = Tensor::zero(2);
        for (w, c) in x.terms() {
            out.add_scaled(&self.uq_delta_word(w)?, c);
        }
        Ok(out)
    }

    fn uq_anti(&self, x: &Elem<C>, img: impl Fn(u8) -> Elem<C>) -> Result<Elem<C>> {
        x.try_map_linear(|w| {
            let parts: Vec<Elem<C>> = w.iter().rev().map(|&l| img(l)).collect();
            self.uq.mul_all(&parts)
        })
    }

    /// `S(E) = -E K^-1`, `S(F) = -K F`, `S(L) = L^-1`.
    pub fn uq_antipode(&self, x: &Elem<C>) -> Result<Elem<C>> {
        let m = self.int(-1);
        self.uq_anti(x, |l| match l {
            E => Elem::monomial(vec![E, LI, LI], m.clone()),
            F => Elem::monomial(vec![L, L, F], m.clone()),
            L => self.letter(LI),
            _ => self.letter(L),
        })
    }

    /// `S^-1(E) = -K^-1 E`, `S^-1(F) = -F K`.
    pub fn uq_antipode_inv(&self, x: &Elem<C>) -> Result<Elem<C>> {
        let m = self.int(-1);
        self.uq_anti(x, |l| match l {
            E => Elem::monomial(vec![LI, LI, E], m.clone()),
            F => Elem::monomial(vec![F, L, L], m.clone()),
            L => self.letter(LI),
            _ => self.letter(L),
        })
    }

    pub fn uq_counit(&self, x: &Elem<C>) -> C {
        let mut acc = C::zero(&self.ctx);
        for (w, c) in x.terms() {
            if w.iter().all(|&l| l == L || l == LI) {
                acc.add_assign(c);
            }
        }
        acc
    }

    /// `ad^r(y)(x) = Σ S(y_(1)) x y_(2)`.
    pub fn ad_r(&self, y: &Elem<C>, x: &Elem<C>) -> Result<Elem<C>> {
        let d = self.uq_coproduct(y)?;
        let mut out = Elem::zero();
        for (ws, c) in d.terms() {
            let s = self.uq_antipode(&self.word(&ws[0]))?;
            out.add_scaled(&self.uq.mul_all(&[s, x.clone(), self.word(&ws[1])])?, c);
        }
        Ok(out)
    }

    // ---- O_q ----

    /// `Δ φ^I_J = Σ_K φ^I_K ⊗ φ^K_J` on ⋆-words, legs reduced in `p`.
    pub fn star_coproduct(&self, x: &Elem<C>, p: &Presentation<C>) -> Result<Tensor<C>> {
        let mut raw = Tensor::zero(2);
        for (w, c) in x.terms() {
            let k = w.len();
            let (i, j) = word_indices(w);
            for m in 0..(1usize << k) {
                raw.add_term(vec![indices_word(k, i, m), indices_word(k, m, j)], c);
            }
        }
        raw.reduce(&[p])
    }

    pub fn oq_coproduct(&self, x: &Elem<C>) -> Result<Tensor<C>> {
        self.star_coproduct(x, &self.oq)
    }

    /// `S(a) = d`, `S(d) = a`, `S(b) = -q b`, `S(c) = -q^-1 c`, anti-multiplicative.
    pub fn oq_antipode(&self, x: &Elem<C>) -> Result<Elem<C>> {
        x.try_map_linear(|w| {
            let parts: Vec<Elem<C>> = w
                .iter()
                .rev()
                .map(|&l| match l {
                    A => self.letter(D),
                    D => self.letter(A),
                    B => self.mono(&[B], lq(1).neg()),
                    _ => self.mono(&[C_], lq(-1).neg()),
                })
                .collect();
            self.oq.mul_all(&parts)
        })
    }

    pub fn oq_counit(&self, x: &Elem<C>) -> C {
        let mut acc = C::zero(&self.ctx);
        for (w, c) in x.terms() {
            if w.iter().all(|&l| l == A || l == D) {
                acc.add_assign(c);
            }
        }
        acc
    }

    // ---- pairing and actions ----

    /// `⟨α, x⟩` for `α` a combination of ⋆-words and `x ∈ U_q`.
    pub fn pair(&self, alpha: &Elem<C>, x: &Elem<C>) -> C {
        let mut acc = C::zero(&self.ctx);
        for (w, c) in alpha.terms() {
            let (i, j) = word_indices(w);
            for (u, d) in x.terms() {
                let m = pi_w(w.len(), u);
                if let Some((_, v)) = m[j].iter().find(|(r, _)| *r == i) {
                    acc.add_assign(&self.c(v).mul(c).mul(d));
                }
            }
        }
        acc
    }

    /// `⟨α ⊗ β, x ⊗ y⟩` summed over both tensors.
    pub fn pair_tensor(&self, t: &Tensor<C>, u: &Tensor<C>) -> C {
        let mut acc = C::zero(&self.ctx);
        for (aw, ac) in t.terms() {
            for (xw, xc) in u.terms() {
                let mut v = ac.mul(xc);
                for k in 0..t.legs() {
                    if v.is_zero() {
                        break;
                    }
                    v = v.mul(&self.pair(&self.word(&aw[k]), &self.word(&xw[k])));
                }
                acc.add_assign(&v);
            }
        }
        acc
    }

    /// Column `j` of `π_{W_k}(x)`.
    fn column(&self, k: usize, x: &Elem<C>, j: usize) -> Vec<C> {
        let mut v = vec![C::zero(&self.ctx); 1 << k];
        for (u, d) in x.terms() {
            for (r, val) in &pi_w(k, u)[j] {
                v[*r].add_assign(&self.c(val).mul(d));
            }
        }
        v
    }

    /// Row `i` of `π_{W_k}(x)`.
    fn row(&self, k: usize, x: &Elem<C>, i: usize) -> Vec<C> {
        let mut v = vec![C::zero(&self.ctx); 1 << k];
        for (u, d) in x.terms() {
            let m = pi_w(k, u);
            for (c, col) in m.iter().enumerate() {
                if let Some((_, val)) = col.iter().find(|(r, _)| *r == i) {
                    v[c].add_assign(&self.c(val).mul(d));
                }
            }
        }
        v
    }

    /// `x ▷ α = Σ α_(1) ⟨α_(2), x⟩`, unreduced ⋆-words.
    pub fn left_act_raw(&self, x: &Elem<C>, alpha: &Elem<C>) -> Elem<C> {
        let mut out = Elem::zero();
        for (w, c) in alpha.terms() {
            let k = w.len();
            let (i, j) = word_indices(w);
            for (m, v) in self.column(k, x, j).into_iter().enumerate() {
                out.add_term(indices_word(k, i, m), &v.mul(c));
            }
        }
        out
    }

    /// `α ◁ x = Σ ⟨α_(1), x⟩ α_(2)`, unreduced ⋆-words.
    pub fn right_act_raw(&self, alpha: &Elem<C>, x: &Elem<C>) -> Elem<C> {
        let mut out = Elem::zero();
        for (w, c) in alpha.terms() {
            let k = w.len();
            let (i, j) = word_indices(w);
            for (m, v) in self.row(k, x, i).into_iter().enumerate() {
                out.add_term(indices_word(k, m, j), &v.mul(c));
            }
        }
        out
    }

    /// Left coregular action on `O_q`.
    pub fn left_act(&self, x: &Elem<C>, alpha: &Elem<C>) -> Result<Elem<C>> {
        self.oq.reduce(&self.left_act_raw(x, alpha))
    }

    /// Right coregular action on `O_q`.
    pub fn right_act(&self, alpha: &Elem<C>, x: &Elem<C>) -> Result<Elem<C>> {
        self.oq.reduce(&self.right_act_raw(alpha, x))
    }

    /// `coad^r(x)(α) = Σ S(x_(2)) ▷ α ◁ x_(1)` on ⋆-words (vector-space level).
    pub fn coad_star(&self, x: &Elem<C>, alpha: &Elem<C>) -> Result<Elem<C>> {
        let d = self.uq_coproduct(x)?;
        let mut out = Elem::zero();
        for (ws, c) in d.terms() {
            let s2 = self.uq_antipode(&self.word(&ws[1]))?;
            let r = self.right_act_raw(alpha, &self.word(&ws[0]));
            out.add_scaled(&self.left_act_raw(&s2, &r), c);
        }
        Ok(out)
    }

    fn coad_letter_gen(&self, h: u8, g: u8) -> Result<Elem<C>> {
        self.coad_star(&self.letter(h), &self.letter(g))
    }

    /// `coad^r(h)` for a single `U_q` letter on an `L_{0,1}` word, via the
    /// module-algebra rule.
    fn coad_letter_word(&self, h: u8, w: &[u8]) -> Result<Elem<C>> {
        if w.is_empty() {
            return Ok(Elem::scalar(self.uq_counit(&self.letter(h))));
        }
        if w.len() == 1 {
            return self.l01.reduce(&self.coad_letter_gen(h, w[0])?);
        }
        let (u, rest) = (&w[..1], &w[1..]);
        let p = &self.l01;
        match h {
            L | LI => {
                let a = self.coad_letter_word(h, u)?;
                let b = self.coad_letter_word(h, rest)?;
                p.mul(&a, &b)
            }
            E => {
                let eu = self.coad_letter_word(E, u)?;
                let kw = self.coad_word_elem(&[L, L], &self.word(rest))?;
                let ew = self.coad_letter_word(E, rest)?;
                Ok(p.mul(&eu, &kw)?.add(&p.mul(&self.word(u), &ew)?))
            }
            F => {
                let ku = self.coad_word_elem(&[LI, LI], &self.word(u))?;
                let fw = self.coad_letter_word(F, rest)?;
                let fu = self.coad_letter_word(F, u)?;
                Ok(p.mul(&ku, &fw)?.add(&p.mul(&fu, &self.word(rest))?))
            }
            _ => unreachable!(),
        }
    }

    fn coad_word_elem(&self, y: &[u8], alpha: &Elem<C>) -> Result<Elem<C>> {
        let mut cur = alpha.clone();
        for &h in y {
            cur = cur.try_map_linear(|w| self.coad_letter_word(h, w))?;
        }
        Ok(cur)
    }

    /// Right coadjoint action on `L_{0,1}`: `coad^r(xy) = coad^r(y) ∘ coad^r(x)`.
    pub fn coadjoint(&self, x: &Elem<C>, alpha: &Elem<C>) -> Result<Elem<C>> {
        let mut out = Elem::zero();
        for (y, c) in x.terms() {
            out.add_scaled(&self.coad_word_elem(y, alpha)?, c);
        }
        Ok(out)
    }

    // ---- Drinfeld pairing and Φ^± ----

    fn tau_letters(&self, x: u8, y: u8) -> C {
        match (x, y) {
            (L, L) | (LI, LI) => self.c(&Laurent::q_half(-1)),
            (L, LI) | (LI, L) => self.c(&Laurent::q_half(1)),
            (E, F) => self.c(&qdiff()).inv().expect("q - q^-1 invertible").neg(),
            _ => C::zero(&self.ctx),
        }
    }

    fn tau_words(&self, x: &[u8], y: &[u8]) -> Result<C> {
        if x.is_empty() {
            return Ok(self.uq_counit(&self.word(y)));
        }
        if y.is_empty() {
            return Ok(self.uq_counit(&self.word(x)));
        }
        if x.len() > 1 {
            // τ(x1 X', Y) = Σ τ(x1, Y_(1)) τ(X', Y_(2))
            let d = self.uq_delta_word(y)?;
            let mut acc = C::zero(&self.ctx);
            for (ws, c) in d.terms() {
                let a = self.tau_words(&x[..1], &ws[0])?;
                if a.is_zero() {
                    continue;
                }
                acc.add_assign(&a.mul(&self.tau_words(&x[1..], &ws[1])?).mul(c));
            }
            return Ok(acc);
        }
        if y.len() == 1 {
            return Ok(self.tau_letters(x[0], y[0]));
        }
        // τ(x, y1 Y') = Σ τ(x_(2), y1) τ(x_(1), Y')
        let d = self.uq_letter_delta(x[0]);
        let mut acc = C::zero(&self.ctx);
        for (ws, c) in d.terms() {
            let a = self.tau_words(&ws[1], &y[..1])?;
            if a.is_zero() {
                continue;
            }
            acc.add_assign(&a.mul(&self.tau_words(&ws[0], &y[1..])?).mul(c));
        }
        Ok(acc)
    }

    /// Drinfeld pairing `τ: U_q(b_+) × U_q(b_-) -> C(q)`.
    pub fn tau(&self, x: &Elem<C>, y: &Elem<C>) -> Result<C> {
        if x.terms().any(|(w, _)| w.contains(&F)) || y.terms().any(|(w, _)| w.contains(&E)) {
            return Err(QmodError::Domain("tau expects U_q(b+) x U_q(b-)".into()));
        }
        let mut acc = C::zero(&self.ctx);
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                acc.add_assign(&self.tau_words(u, v)?.mul(a).mul(b));
            }
        }
        Ok(acc)
    }

    /// `ρ(y, x) = τ(x, S^-1(y))`.
    pub fn rho(&self, y: &Elem<C>, x: &Elem<C>) -> Result<C> {
        let s = self.uq_antipode_inv(y)?;
        self.tau(x, &s)
    }

    fn script_r(&self, i: usize, j: usize) -> Elem<C> {
        match (i, j) {
            (0, 0) => self.letter(L),
            (0, 1) => self.mono(&[L, F], qdiff()),
            (1, 1) => self.letter(LI),
            _ => Elem::zero(),
        }
    }

    fn script_r_prime(&self, i: usize, j: usize) -> Elem<C> {
        match (i, j) {
            (0, 0) => self.letter(L),
            (1, 0) => self.mono(&[LI, E], qdiff()),
            (1, 1) => self.letter(LI),
            _ => Elem::zero(),
        }
    }

    fn script_r_minus(&self, i: usize, j: usize) -> Elem<C> {
        match (i, j) {
            (0, 0) => self.letter(LI),
            (1, 0) => self.mono(&[E, LI], qdiff().neg()),
            (1, 1) => self.letter(L),
            _ => Elem::zero(),
        }
    }

    /// `Π_t M[i_t, j_t]` over the letters of a ⋆-word, in factor order.
    pub(crate) fn matrix_word(&self, w: &[u8], m: impl Fn(usize, usize) -> Elem<C>, reversed: bool) -> Result<Elem<C>> {
        let mut parts: Vec<Elem<C>> = w.iter().map(|&x| m((x >> 1) as usize, (x & 1) as usize)).collect();
        if reversed {
            parts.reverse();
        }
        if parts.iter().any(|p| p.is_zero()) {
            return Ok(Elem::zero());
        }
        self.uq.mul_all(&parts)
    }

    /// `Φ^+(α) = (α ⊗ id)(R)`.
    pub fn phi_plus(&self, alpha: &Elem<C>) -> Result<Elem<C>> {
        alpha.try_map_linear(|w| self.matrix_word(w, |i, j| self.script_r(i, j), false))
    }

    /// `Φ^-(α) = (α ⊗ id)(R_{21}^{-1})`.
    pub fn phi_minus(&self, alpha: &Elem<C>) -> Result<Elem<C>> {
        alpha.try_map_linear(|w| self.matrix_word(w, |i, j| self.script_r_minus(i, j), false))
    }

    /// `Φ_1` on ⋆-coordinates: `Σ_M 𝓡_W[I,M] 𝓡'_W[M,J]` with `𝓡'` in reversed factor order.
    pub fn phi1_star(&self, alpha: &Elem<C>) -> Result<Elem<C>> {
        alpha.try_map_linear(|w| {
            let k = w.len();
            let (i, j) = word_indices(w);
            let mut out = Elem::zero();
            for m in 0..(1usize << k) {
                let left = self.matrix_word(&indices_word(k, i, m), |a, b| self.script_r(a, b), false)?;
                if left.is_zero() {
                    continue;
                }
                let right = self.matrix_word(&indices_word(k, m, j), |a, b| self.script_r_prime(a, b), true)?;
                out.add_assign(&self.uq.mul(&left, &right)?);
            }
            Ok(out)
        })
    }

    /// `⟨α ⊗ β, R⟩` from the R-matrix on `W_k1 ⊗ W_k2`.
    pub fn rpair(&self, alpha: &Elem<C>, beta: &Elem<C>) -> C {
        let mut acc = C::zero(&self.ctx);
        for (u, a) in alpha.terms() {
            for (v, b) in beta.terms() {
                let (i, j) = word_indices(u);
                let (p, q) = word_indices(v);
                let d2 = 1usize << v.len();
                let r = r_w(u.len(), v.len());
                acc.add_assign(&self.c(r.get(i * d2 + p, j * d2 + q)).mul(a).mul(b));
            }
        }
        acc
    }

    /// The displayed formula for `Δ(Ω)`.
    pub fn delta_casimir_formula(&self) -> Tensor<C> {
        let qd2 = self.c(&qdiff().pow(2));
        let om = self.casimir();
        let pair = |a: &[u8], b: &[u8], c: C| Tensor::pure(vec![a.to_vec(), b.to_vec()], c);
        let mut t = pair(&[LI, LI, E], &[F, L, L], qd2.clone());
        t.add_assign(&pair(&[F], &[E], qd2));
        t.add_assign(&Tensor::from_pair(&om, &self.k()));
        t.add_assign(&Tensor::from_pair(&self.kinv(), &om));
        t.add_assign(&pair(&[LI, LI], &[L, L], self.c(&lq(1).add(&lq(-1))).neg()));
        t
    }
}

/// Random element: a few words of length `<= deg` with small integer coefficients.
pub fn random_elem<C: Field>(rng: &mut ChaCha8Rng, letters: u8, deg: usize, ctx: &C::Ctx) -> Elem<C> {
    let mut e = Elem::zero();
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let len = rng.gen_range(0..=deg);
        let w: Word = (0..len).map(|_| rng.gen_range(0..letters)).collect();
        let c = rng.gen_range(-3i64..=3);
        e.add_term(w, &C::from_int(if c == 0 { 1 } else { c }, ctx));
    }
    e
}

fn check_eq<C: Field>(rep: &mut Report, id: &str, a: &C, b: &C) {
    if a == b {
        rep.push(Case::pass(id));
    } else {
        rep.push(Case::fail(id, &a.to_string(), &b.to_string(), id));
    }
}

/// Coassociativity, counit, antipode and pairing axioms on generators and
/// `samples` random elements of degree `<= 3`, plus the formula for `Δ(Ω)`.
pub fn hopf_suite<C: Field>(s: &Sl2<C>, samples: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("hopf-axioms");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ctx = s.ctx().clone();
    let mut uqs: Vec<Elem<C>> = [F, L, LI, E].iter().map(|&x| s.letter(x)).collect();
    let mut oqs: Vec<Elem<C>> = [A, B, C_, D].iter().map(|&x| s.letter(x)).collect();
    for _ in 0..samples {
        uqs.push(s.uq.reduce(&random_elem(&mut rng, 4, 3, &ctx))?);
        oqs.push(s.oq.reduce(&random_elem(&mut rng, 4, 3, &ctx))?);
    }
    let uqp = [&s.uq];
    let oqp = [&s.oq];
    for (n, x) in uqs.iter().enumerate() {
        let d = s.uq_coproduct(x)?;
        let l = d.apply_leg(0, 2, |w| s.uq_coproduct(&s.word(w)))?;
        let r = d.apply_leg(1, 2, |w| s.uq_coproduct(&s.word(w)))?;
        rep.push(Case::check(&format!("uq:coassoc:{n}"), l == r, &s.uq.fmt(x)));
        let c1 = d.apply_leg(0, 0, |w| Ok(Tensor::pure(vec![], s.uq_counit(&s.word(w)))))?.leg_elem(0);
        let c2 = d.apply_leg(1, 0, |w| Ok(Tensor::pure(vec![], s.uq_counit(&s.word(w)))))?.leg_elem(0);
        rep.push(Case::check(&format!("uq:counit:{n}"), c1.as_ref() == Some(x) && c2.as_ref() == Some(x), &s.uq.fmt(x)));
        let mut a1 = Elem::zero();
        let mut a2 = Elem::zero();
        for (ws, c) in d.terms() {
            a1.add_scaled(&s.uq.mul(&s.uq_antipode(&s.word(&ws[0]))?, &s.word(&ws[1]))?, c);
            a2.add_scaled(&s.uq.mul(&s.word(&ws[0]), &s.uq_antipode(&s.word(&ws[1]))?)?, c);
        }
        let eps = Elem::scalar(s.uq_counit(x));
        rep.push(Case::check(&format!("uq:antipode:{n}"), a1 == eps && a2 == eps, &s.uq.fmt(x)));
        let ss = s.uq_antipode(&s.uq_antipode(x)?)?;
        let conj = s.uq.mul_all(&[s.k(), x.clone(), s.kinv()])?;
        rep.push(Case::check(&format!("uq:s2:{n}"), ss == conj, &s.uq.fmt(x)));
        let back = s.uq_antipode_inv(&s.uq_antipode(x)?)?;
        rep.push(Case::check(&format!("uq:sinv:{n}"), &back == x, &s.uq.fmt(x)));
    }
    for (n, x) in oqs.iter().enumerate() {
        let d = s.oq_coproduct(x)?;
        let l = d.apply_leg(0, 2, |w| s.oq_coproduct(&s.word(w)))?;
        let r = d.apply_leg(1, 2, |w| s.oq_coproduct(&s.word(w)))?;
        rep.push(Case::check(&format!("oq:coassoc:{n}"), l == r, &s.oq.fmt(x)));
        let c1 = d.apply_leg(0, 0, |w| Ok(Tensor::pure(vec![], s.oq_counit(&s.word(w)))))?.leg_elem(0);
        let c2 = d.apply_leg(1, 0, |w| Ok(Tensor::pure(vec![], s.oq_counit(&s.word(w)))))?.leg_elem(0);
        rep.push(Case::check(&format!("oq:counit:{n}"), c1.as_ref() == Some(x) && c2.as_ref() == Some(x), &s.oq.fmt(x)));
        let mut a1 = Elem::zero();
        let mut a2 = Elem::zero();
        for (ws, c) in d.terms() {
            a1.add_scaled(&s.oq.mul(&s.oq_antipode(&s.word(&ws[0]))?, &s.word(&ws[1]))?, c);
            a2.add_scaled(&s.oq.mul(&s.word(&ws[0]), &s.oq_antipode(&s.word(&ws[1]))?)?, c);
        }
        let eps = Elem::scalar(s.oq_counit(x));
        rep.push(Case::check(&format!("oq:antipode:{n}"), a1 == eps && a2 == eps, &s.oq.fmt(x)));
    }
    // Δ and S respect the relations, pairing compatibilities.
    for n in 0..uqs.len().min(oqs.len()) {
        let (x, y) = (&uqs[n], &uqs[(n * 7 + 3) % uqs.len()]);
        let (al, be) = (&oqs[n], &oqs[(n * 5 + 1) % oqs.len()]);
        let xy = s.uq.mul(x, y)?;
        let dprod = s.uq_coproduct(x)?.mul_legwise(&s.uq_coproduct(y)?, &uqp)?;
        rep.push(Case::check(&format!("uq:delta-morphism:{n}"), s.uq_coproduct(&xy)? == dprod, ""));
        let ab = s.oq.mul(al, be)?;
        let dprod = s.oq_coproduct(al)?.mul_legwise(&s.oq_coproduct(be)?, &oqp)?;
        rep.push(Case::check(&format!("oq:delta-morphism:{n}"), s.oq_coproduct(&ab)? == dprod, ""));
        let sab = s.oq_antipode(&ab)?;
        let sba = s.oq.mul(&s.oq_antipode(be)?, &s.oq_antipode(al)?)?;
        rep.push(Case::check(&format!("oq:antipode-anti:{n}"), sab == sba, ""));
        let lhs = s.pair(&ab, x);
        let rhs = s.pair_tensor(&Tensor::from_pair(al, be), &s.uq_coproduct(x)?);
        check_eq(&mut rep, &format!("pair:product:{n}"), &lhs, &rhs);
        let lhs = s.pair(al, &xy);
        let rhs = s.pair_tensor(&s.oq_coproduct(al)?, &Tensor::from_pair(x, y));
        check_eq(&mut rep, &format!("pair:coproduct:{n}"), &lhs, &rhs);
        let lhs = s.pair(&s.oq_antipode(al)?, x);
        let rhs = s.pair(al, &s.uq_antipode(x)?);
        check_eq(&mut rep, &format!("pair:antipode:{n}"), &lhs, &rhs);
        check_eq(&mut rep, &format!("pair:unit:{n}"), &s.pair(&s.oq.one(), x), &s.uq_counit(x));
        check_eq(&mut rep, &format!("pair:counit:{n}"), &s.pair(al, &s.uq.one()), &s.oq_counit(al));
    }
    let got = s.uq_coproduct(&s.casimir())?;
    let want = s.delta_casimir_formula().reduce(&uqp)?;
    rep.push(Case::compare("delta-casimir", &want.fmt(&uqp), &got.fmt(&uqp)));
    Ok(rep)
}

/// `⟨α, x⟩ = ρ(Φ^+(α), x)` on `b_+` words and `⟨α, y⟩ = τ(Φ^-(α), y)` on `b_-` words.
pub fn drinfeld_suite<C: Field>(s: &Sl2<C>, deg: usize) -> Result<Report> {
    let mut rep = Report::new("drinfeld");
    let alphas = words_upto(4, deg);
    let bplus: Vec<Word> = words_upto(4, 2).into_iter().filter(|w| !w.contains(&F)).collect();
    let bminus: Vec<Word> = words_upto(4, 2).into_iter().filter(|w| !w.contains(&E)).collect();
    for a in &alphas {
        let al = s.word(a);
        let pp = s.phi_plus(&al)?;
        let pm = s.phi_minus(&al)?;
        for x in &bplus {
            let lhs = s.pair(&al, &s.word(x));
            let rhs = s.rho(&pp, &s.word(x))?;
            check_eq(&mut rep, &format!("plus:{}:{}", s.oq.fmt_word(a), s.uq.fmt_word(x)), &lhs, &rhs);
        }
        for y in &bminus {
            let lhs = s.pair(&al, &s.word(y));
            let rhs = s.tau(&pm, &s.word(y))?;
            check_eq(&mut rep, &format!("minus:{}:{}", s.oq.fmt_word(a), s.uq.fmt_word(y)), &lhs, &rhs);
        }
        for b in &alphas {
            if a.len() + b.len() > deg + 1 {
                continue;
            }
            let be = s.word(b);
            let lhs = s.rpair(&al, &be);
            let rhs = s.pair(&be, &pp);
            check_eq(&mut rep, &format!("rpair:{}:{}", s.oq.fmt_word(a), s.oq.fmt_word(b)), &lhs, &rhs);
        }
    }
    Ok(rep)
}

/// All words over `n` letters of length `<= deg`.
pub fn words_upto(n: u8, deg: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..deg {
        layer = layer.iter().flat_map(|w| (0..n).map(move |x| {
            let mut v = w.clone();
            v.push(x);
            v
        })).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Matrix of `coad^r(x)` in ⋆-coordinates on `W_k`, for equivariance checks.
pub fn coad_matrix<C: Field>(s: &Sl2<C>, x: &Elem<C>, k: usize) -> Result<Mat<C>> {
    let d = 1usize << (2 * k);
    let mut m = Mat::zeros(d, d, s.ctx());
    for col in 0..d {
        let w = indices_word(k, col >> k, col & ((1 << k) - 1));
        let img = s.coad_star(x, &s.word(&w))?;
        for (u, c) in img.terms() {
            let (i, j) = word_indices(u);
            m.set((i << k) | j, col, c.clone());
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Ring;

    fn g() -> Sl2<Rf> {
        Sl2::generic()
    }

    #[test]
    fn coproduct_examples() {
        let s = g();
        let up = [&s.uq];
        assert_eq!(s.uq_coproduct(&s.letter(E)).unwrap().fmt(&up), "(1 (x) E) + (E (x) L^2)");
        let d = s.oq_coproduct(&s.letter(A)).unwrap();
        assert_eq!(d.fmt(&[&s.oq]), "(a (x) a) + (b (x) c)");
    }

    #[test]
    fn antipode_counit_examples() {
        let s = g();
        assert_eq!(s.uq.fmt(&s.uq_antipode(&s.letter(E)).unwrap()), "-q^2*L^-2*E");
        assert_eq!(s.uq_counit(&s.letter(L)), Rf::one(&()));
        let sf = s.uq_antipode(&s.uq_antipode(&s.letter(F)).unwrap()).unwrap();
        assert_eq!(s.uq.fmt(&sf), "q^-2*F");
    }

    #[test]
    fn pairing_examples() {
        let s = g();
        assert_eq!(s.pair(&s.letter(A), &s.k()), s.c(&lq(1)));
        assert_eq!(s.pair(&s.letter(B), &s.letter(E)), Rf::one(&()));
        let x = s.uq.reduce(&s.word(&[E, F, L])).unwrap();
        assert_eq!(s.pair(&s.oq.one(), &x), s.uq_counit(&x));
    }

    #[test]
    fn coregular_examples() {
        let s = g();
        assert_eq!(s.left_act(&s.letter(E), &s.letter(B)).unwrap(), s.letter(A));
        assert_eq!(s.left_act(&s.k(), &s.letter(A)).unwrap(), s.mono(&[A], lq(1)));
        let x = s.oq.reduce(&s.word(&[B, A, D])).unwrap();
        assert_eq!(s.left_act(&s.uq.one(), &x).unwrap(), x);
    }

    #[test]
    fn coadjoint_examples() {
        let s = g();
        assert_eq!(s.coadjoint(&s.uq.one(), &s.letter(C_)).unwrap(), s.letter(C_));
        assert_eq!(s.coadjoint(&s.k(), &s.letter(D)).unwrap(), s.letter(D));
        assert!(s.coadjoint(&s.letter(E), &s.omega()).unwrap().is_zero());
        assert!(s.coadjoint(&s.letter(F), &s.omega()).unwrap().is_zero());
    }

    #[test]
    fn coadjoint_is_right_action() {
        let s = g();
        let gens: Vec<Elem<Rf>> = [A, B, C_, D].iter().map(|&x| s.letter(x)).collect();
        for x in [E, F, L] {
            for y in [E, F, L] {
                let xy = s.word(&[x, y]);
                for al in &gens {
                    let lhs = s.coadjoint(&xy, al).unwrap();
                    let rhs = s.coadjoint(&s.letter(y), &s.coadjoint(&s.letter(x), al).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn drinfeld_examples() {
        let s = g();
        let t = s.tau(&s.letter(E), &s.letter(F)).unwrap();
        assert_eq!(t, s.c(&qdiff()).inv().unwrap().neg());
        // K_ϖ = L, K_α = K
        assert_eq!(s.tau(&s.letter(L), &s.k()).unwrap(), s.c(&lq(-1)));
        assert!(s.tau(&s.letter(E), &s.k()).unwrap().is_zero());
        assert!(s.tau(&s.letter(F), &s.k()).is_err());
    }

    #[test]
    fn phi_pm_examples() {
        let s = g();
        assert_eq!(s.phi_minus(&s.letter(D)).unwrap(), s.letter(L));
        assert!(s.phi_minus(&s.letter(B)).unwrap().is_zero());
        assert_eq!(s.rpair(&s.letter(D), &s.letter(D)), s.c(&Laurent::q_half(1)));
    }

    #[test]
    fn phi_pm_are_morphisms() {
        let s = g();
        for a in [A, B, C_, D] {
            for b in [A, B, C_, D] {
                let ab = s.oq.reduce(&s.word(&[a, b])).unwrap();
                for f in [Sl2::phi_plus, Sl2::phi_minus] {
                    let lhs = f(&s, &ab).unwrap();
                    let rhs = s.uq.mul(&f(&s, &s.letter(a)).unwrap(), &f(&s, &s.letter(b)).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn drinfeld_routes_agree() {
        let rep = drinfeld_suite(&g(), 2).unwrap();
        assert!(rep.all_pass(), "{}", rep.summary());
    }

    #[test]
    fn hopf_axioms_small() {
        let rep = hopf_suite(&g(), 20, 7).unwrap();
        assert!(rep.all_pass(), "{}", rep.summary());
    }
}
