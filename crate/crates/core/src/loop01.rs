//! The loop algebra `L_{0,1}(sl2)`: twisted product, conversion to ⋆-coordinates
//! and the map `Φ_1`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{QmodError, Result};
use crate::hopfdual::Sl2;
use crate::linalg::Mat;
use crate::ncalg::{span_dim, Elem, Word, A, B, C_, D, E, F, L, LI};
use crate::repmod::{a_w, cached, indices_word, r_w, sparse_cols, sparse_rows, word_indices, Cache, SparseCols};
use crate::report::{Case, Report};
use crate::scalars::{Field, Laurent};

/// Inverse of the top-degree part of `loop_to_star` in one degree.
pub struct GradedInverse<C: Field> {
    pub loop_words: Vec<Word>,
    pub star_words: Vec<Word>,
    pub inv: Mat<C>,
}

struct TwistData {
    a_rows: SparseCols,
    r_cols: SparseCols,
}

/// Sparse `A = K_2 R^{-1} K_2^{-1}` rows and `R` columns on `W_{k2}⊗W_{k1}`.
fn twist_data(k2: usize, k1: usize) -> Arc<TwistData> {
    static C: Cache<(usize, usize), TwistData> = OnceLock::new();
    cached(&C, (k2, k1), || TwistData { a_rows: sparse_rows(&a_w(k2, k1)), r_cols: sparse_cols(&r_w(k2, k1)) })
}

/// Twisted product of two ⋆-words, as unreduced ⋆-words with Laurent coefficients.
pub fn twist_words(u: &[u8], v: &[u8]) -> Vec<(Word, Laurent)> {
    let (k1, k2) = (u.len(), v.len());
    if k1 == 0 || k2 == 0 {
        return vec![([u, v].concat(), Laurent::one())];
    }
    let (i, j) = word_indices(u);
    let (p, q) = word_indices(v);
    let d1 = 1usize << k1;
    let td = twist_data(k2, k1);
    let mut acc: HashMap<Word, Laurent> = HashMap::new();
    for x in 0..d1 {
        let rcol = &td.r_cols[q * d1 + x];
        if rcol.is_empty() {
            continue;
        }
        for (col, av) in &td.a_rows[p * d1 + x] {
            if col % d1 != j {
                continue;
            }
            let n = col / d1;
            for (row, rv) in rcol {
                let (n2, m) = (row / d1, row % d1);
                let mut w = indices_word(k1, i, m);
                w.extend(indices_word(k2, n, n2));
                let c = av.mul(rv);
                acc.entry(w).and_modify(|e| *e = e.add(&c)).or_insert(c);
            }
        }
    }
    let mut out: Vec<(Word, Laurent)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Normal words of degree `k`: `a^i b^j d^r` and `a^i c^j d^r` (`j ≥ 1`).
pub fn normal_words(k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for i in 0..=k {
        for j in 0..=k - i {
            let r = k - i - j;
            let mk = |mid: u8| [vec![A; i], vec![mid; j], vec![D; r]].concat();
            out.push(mk(B));
            if j > 0 {
                out.push(mk(C_));
            }
        }
    }
    out
}

impl<C: Field> Sl2<C> {
    /// `L_{0,1}` product of two `O_q` elements via the R-matrix twist, reduced in `O_q`.
    pub fn twist(&self, alpha: &Elem<C>, beta: &Elem<C>) -> Result<Elem<C>> {
        let mut raw = Elem::zero();
        for (u, a) in alpha.terms() {
            for (v, b) in beta.terms() {
                let ab = a.mul(b);
                for (w, c) in twist_words(u, v) {
                    raw.add_term(w, &self.c(&c).mul(&ab));
                }
            }
        }
        self.oq.reduce(&raw)
    }

    fn l2s_word(&self, w: &[u8]) -> Result<Elem<C>> {
        if w.len() <= 1 {
            return Ok(self.word(w));
        }
        if let Some(e) = self.l2s_cache.read().get(w) {
            return Ok(e.clone());
        }
        let rest = self.l2s_word(&w[1..])?;
        let e = self.twist(&self.word(&w[..1]), &rest)?;
        self.l2s_cache.write().insert(w.to_vec(), e.clone());
        Ok(e)
    }

    /// `O_q` coordinates of an `L_{0,1}` element (any words, read as `L_{0,1}` products).
    pub fn loop_to_star(&self, x: &Elem<C>) -> Result<Elem<C>> {
        x.try_map_linear(|w| self.l2s_word(w))
    }

    fn graded_inverse(&self, k: usize) -> Result<Arc<GradedInverse<C>>> {
        if let Some(g) = self.s2l_cache.read().get(&k) {
            return Ok(g.clone());
        }
        let words = normal_words(k);
        let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let n = words.len();
        let mut m = Mat::zeros(n, n, self.ctx());
        for (c, w) in words.iter().enumerate() {
            for (u, v) in self.l2s_word(w)?.terms() {
                if u.len() == k {
                    m.set(index[u], c, v.clone());
                }
            }
        }
        let inv = m.inverse(self.ctx()).ok_or_else(|| QmodError::Domain(format!("degree {k} change of basis singular")))?;
        let g = Arc::new(GradedInverse { loop_words: words.clone(), star_words: words, inv });
        self.s2l_cache.write().insert(k, g.clone());
        Ok(g)
    }

    /// `L_{0,1}` normal form of an element given in `O_q` coordinates.
    pub fn star_to_loop(&self, y: &Elem<C>) -> Result<Elem<C>> {
        let mut rest = self.oq.reduce(y)?;
        let mut out = Elem::zero();
        while let Some(k) = rest.degree() {
            let g = self.graded_inverse(k)?;
            let zero = C::zero(self.ctx());
            let top: Vec<C> = g.star_words.iter().map(|w| rest.coeff(w).cloned().unwrap_or_else(|| zero.clone())).collect();
            let mut t = Elem::zero();
            for (r, w) in g.loop_words.iter().enumerate() {
                let mut c = zero.clone();
                for (s, v) in top.iter().enumerate() {
                    if !v.is_zero() {
                        c.add_assign(&g.inv.get(r, s).mul(v));
                    }
                }
                t.add_term(w.clone(), &c);
            }
            let img = self.loop_to_star(&t)?;
            let next = rest.sub(&img);
            if next.degree().is_some_and(|d| d >= k) {
                return Err(QmodError::Domain("top degree did not cancel".into()));
            }
            out.add_assign(&t);
            rest = next;
        }
        Ok(out)
    }

    /// `Φ_1` on an `L_{0,1}` element.
    pub fn phi1(&self, x: &Elem<C>) -> Result<Elem<C>> {
        self.phi1_star(&self.loop_to_star(x)?)
    }

    /// `x d = d · coad^r(K^{-1})(x)` in `L_{0,1}`.
    pub fn ore_check(&self, x: &Elem<C>) -> Result<Report> {
        let mut rep = Report::new("ore");
        let d = self.letter(D);
        let y = self.coadjoint(&self.kinv(), x)?;
        let lhs = self.l01.mul(x, &d)?;
        let rhs = self.l01.mul(&d, &y)?;
        let mut c = Case::compare(&self.l01.fmt(x), &self.l01.fmt(&lhs), &self.l01.fmt(&rhs));
        c.witness = self.l01.fmt(&y);
        rep.push(c);
        Ok(rep)
    }
}

/// The ten products `x y` with `x ≥ y` among the generators.
pub fn generator_pairs() -> Vec<(u8, u8)> {
    let mut v = Vec::new();
    for x in (0..4u8).rev() {
        for y in (0..=x).rev() {
            v.push((x, y));
        }
    }
    v
}

/// Twist route against the rewrite route on generator pairs and degree-2 monomial pairs.
pub fn rel01_vs_twist<C: Field>(s: &Sl2<C>) -> Result<Report> {
    let mut rep = Report::new("rel01-vs-twist");
    for (x, y) in generator_pairs() {
        let via_twist = s.twist(&s.letter(x), &s.letter(y))?;
        let via_rules = s.loop_to_star(&s.l01.reduce_word(&[x, y])?)?;
        let id = format!("gen:{}*{}", s.l01.fmt_word(&[x]), s.l01.fmt_word(&[y]));
        rep.push(Case::compare(&id, &s.oq.fmt(&via_rules), &s.oq.fmt(&via_twist)));
    }
    let monos: Vec<Word> = generator_pairs().into_iter().map(|(x, y)| vec![y, x]).collect();
    for m1 in &monos {
        let s1 = s.loop_to_star(&s.word(m1))?;
        for m2 in &monos {
            let via_twist = s.twist(&s1, &s.loop_to_star(&s.word(m2))?)?;
            let via_rules = s.loop_to_star(&s.l01.reduce_word(&[m1.as_slice(), m2].concat())?)?;
            let id = format!("deg2:{}*{}", s.l01.fmt_word(m1), s.l01.fmt_word(m2));
            rep.push(Case::compare(&id, &s.oq.fmt(&via_rules), &s.oq.fmt(&via_twist)));
        }
    }
    Ok(rep)
}

/// Morphism property, equivariance and the generator values of `Φ_1`.
pub fn phi1_suite<C: Field>(s: &Sl2<C>, deg: usize) -> Result<Report> {
    let mut rep = Report::new("phi1-morphism");
    let mut elems: Vec<Word> = vec![vec![A], vec![B], vec![C_], vec![D]];
    if deg >= 2 {
        elems.extend(normal_words(2));
    }
    for u in &elems {
        for v in &elems {
            if u.len() + v.len() > deg.max(2) {
                continue;
            }
            let (x, y) = (s.word(u), s.word(v));
            let lhs = s.phi1(&s.l01.mul(&x, &y)?)?;
            let rhs = s.uq.mul(&s.phi1(&x)?, &s.phi1(&y)?)?;
            let id = format!("morphism:{}*{}", s.l01.fmt_word(u), s.l01.fmt_word(v));
            rep.push(Case::compare(&id, &s.uq.fmt(&rhs), &s.uq.fmt(&lhs)));
            if u.len() == 1 && v.len() == 1 {
                let tw = s.phi1_star(&s.twist(&x, &y)?)?;
                rep.push(Case::compare(&format!("twist-morphism:{}*{}", s.oq.fmt_word(u), s.oq.fmt_word(v)), &s.uq.fmt(&rhs), &s.uq.fmt(&tw)));
            }
        }
    }
    for h in [E, F, L, LI] {
        for g in [A, B, C_, D] {
            let x = s.letter(g);
            let lhs = s.phi1(&s.coadjoint(&s.letter(h), &x)?)?;
            let rhs = s.ad_r(&s.letter(h), &s.phi1(&x)?)?;
            let id = format!("equivariance:{}:{}", s.uq.fmt_word(&[h]), s.l01.fmt_word(&[g]));
            rep.push(Case::compare(&id, &s.uq.fmt(&rhs), &s.uq.fmt(&lhs)));
        }
    }
    rep.push(Case::compare("phi1(d)", &s.uq.fmt(&s.kinv()), &s.uq.fmt(&s.phi1(&s.letter(D))?)));
    rep.push(Case::compare("phi1(omega)", &s.uq.fmt(&s.casimir()), &s.uq.fmt(&s.phi1(&s.omega())?)));
    // Φ_1(C(ϖ)) = ad^r(U_q)(K^{-1})
    let imgs: Vec<Elem<C>> = [A, B, C_, D].iter().map(|&g| s.phi1(&s.letter(g))).collect::<Result<_>>()?;
    let orbit = ad_orbit(s, &s.kinv(), 3)?;
    let (di, do_) = (span_dim(&imgs, s.ctx()), span_dim(&orbit, s.ctx()));
    let joint = span_dim(&[imgs, orbit].concat(), s.ctx());
    rep.push(Case::check("phi1-image-span", di == 4 && do_ == 4 && joint == 4, &format!("{di} {do_} {joint}")));
    Ok(rep)
}

/// Span of `ad^r(w)(x)` over `U_q` words `w` of length `<= depth`.
pub fn ad_orbit<C: Field>(s: &Sl2<C>, x: &Elem<C>, depth: usize) -> Result<Vec<Elem<C>>> {
    let mut all = vec![x.clone()];
    let mut layer = vec![x.clone()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for y in &layer {
            for h in [E, F, L] {
                next.push(s.ad_r(&s.letter(h), y)?);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rf;

    fn g() -> Sl2<Rf> {
        Sl2::generic()
    }

    #[test]
    fn twist_examples() {
        let s = g();
        let db = s.twist(&s.letter(D), &s.letter(B)).unwrap();
        assert_eq!(s.oq.fmt(&db), "q^2*b*d");
        let b = s.letter(B);
        assert_eq!(s.twist(&s.oq.one(), &b).unwrap(), b);
        let ad = s.twist(&s.letter(A), &s.letter(D)).unwrap();
        assert_eq!(ad, s.twist(&s.letter(D), &s.letter(A)).unwrap());
    }

    #[test]
    fn all_sixteen_generator_pairs() {
        let s = g();
        for x in [A, B, C_, D] {
            for y in [A, B, C_, D] {
                let t = s.twist(&s.letter(x), &s.letter(y)).unwrap();
                let r = s.loop_to_star(&s.l01.reduce_word(&[x, y]).unwrap()).unwrap();
                assert_eq!(t, r, "{x} {y}");
            }
        }
    }

    #[test]
    fn conversion_examples() {
        let s = g();
        for k in 1..5 {
            let dk = s.word(&vec![D; k]);
            assert_eq!(s.loop_to_star(&dk).unwrap(), dk);
        }
        assert_eq!(s.star_to_loop(&s.oq.one()).unwrap(), s.l01.one());
        let bb = s.word(&[B, B]);
        let back = s.star_to_loop(&bb).unwrap();
        assert_eq!(s.loop_to_star(&back).unwrap(), bb);
        assert_eq!(s.l01.fmt(&back), "q^-1*b^2");
    }

    #[test]
    fn round_trip_degree_three() {
        let s = g();
        for w in normal_words(3) {
            let x = s.word(&w);
            assert_eq!(s.star_to_loop(&s.loop_to_star(&x).unwrap()).unwrap(), x);
            assert_eq!(s.loop_to_star(&s.star_to_loop(&x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn rewriting_matches_twist_oracle() {
        let rep = rel01_vs_twist(&g()).unwrap();
        assert_eq!(rep.cases.len(), 110);
        assert!(rep.all_pass(), "{}", rep.summary());
    }

    #[test]
    fn phi1_values() {
        let s = g();
        assert_eq!(s.uq.fmt(&s.phi1(&s.letter(D)).unwrap()), "L^-2");
        assert_eq!(s.uq.fmt(&s.phi1(&s.letter(B)).unwrap()), "(1 - q^-2)*F");
        assert_eq!(s.phi1(&s.omega()).unwrap(), s.casimir());
    }

    #[test]
    fn phi1_suite_passes() {
        let rep = phi1_suite(&g(), 2).unwrap();
        assert!(rep.all_pass(), "{}", rep.summary());
    }

    #[test]
    fn coadjoint_two_routes() {
        let s = g();
        for w in normal_words(2).into_iter().chain([vec![A], vec![B], vec![C_], vec![D]]) {
            let x = s.word(&w);
            for h in [E, F, L] {
                let via_loop = s.loop_to_star(&s.coadjoint(&s.letter(h), &x).unwrap()).unwrap();
                let via_star = s.oq.reduce(&s.coad_star(&s.letter(h), &s.loop_to_star(&x).unwrap()).unwrap()).unwrap();
                assert_eq!(via_loop, via_star);
            }
        }
    }

    #[test]
    fn ore_examples() {
        let s = g();
        for x in [s.letter(B), s.letter(D), s.omega(), s.letter(C_)] {
            let rep = s.ore_check(&x).unwrap();
            assert!(rep.all_pass(), "{}", rep.summary());
        }
        let y = s.coadjoint(&s.kinv(), &s.omega()).unwrap();
        assert_eq!(y, s.omega());
    }

    #[test]
    fn omega_central() {
        let s = g();
        let w = s.omega();
        for x in [A, B, C_, D] {
            let l = s.l01.mul(&w, &s.letter(x)).unwrap();
            let r = s.l01.mul(&s.letter(x), &w).unwrap();
            assert_eq!(l, r);
        }
    }
}
