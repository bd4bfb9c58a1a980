//! Specialisation at an odd root of unity: the central subalgebras `Z_0`, the
//! fibres of `O_ε` over central characters, and the functional `t` on `Z_0`.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, Result};
use crate::graphn::Graph;
use crate::hopfdual::{words_upto, Sl2};
use crate::linalg::Mat;
use crate::loop01::normal_words;
use crate::ncalg::{Elem, Presentation, Tensor, Word, A, B, C_, D, E, F, L};
use crate::repmod::t_eval;
use crate::report::{Case, Report};
use crate::scalars::{chebyshev_t, qdiff, Field, Laurent, Q};

/// `T_k(x)` evaluated in an algebra.
pub fn chebyshev_elem<C: Field>(p: &Presentation<C>, x: &Elem<C>, k: u32) -> Result<Elem<C>> {
    let t = chebyshev_t(k);
    let ctx = p.ctx();
    let mut acc = Elem::zero();
    for c in t.coeffs.iter().rev() {
        acc = p.mul(&acc, x)?;
        if *c != 0 {
            acc.add_assign(&Elem::scalar(C::from_int(*c, ctx)));
        }
    }
    Ok(acc)
}

/// Generators of `Z_0` in both coordinate systems.
#[derive(Clone, Debug)]
pub struct CentralFrame<C: Field> {
    pub l: u32,
    /// `a^{⋆l}, b^{⋆l}, c^{⋆l}, d^{⋆l}` in `O_q` coordinates.
    pub star: [Elem<C>; 4],
    /// `ω, b^l, c^l, d^l` as `L_{0,1}` normal forms.
    pub center: [Elem<C>; 4],
    /// `T_l(ω) - d^l` in `L_{0,1}`.
    pub a_loop: Elem<C>,
    /// `(T_l(ω) - d^l) d^l - b^l c^l - 1`, reduced in `L_{0,1}`.
    pub relation: Elem<C>,
}

impl<C: Field> CentralFrame<C> {
    /// `Z_0` generators in `L_{0,1}` coordinates, in the order `a, b, c, d`.
    pub fn loop_gens(&self) -> [Elem<C>; 4] {
        [self.a_loop.clone(), self.center[1].clone(), self.center[2].clone(), self.center[3].clone()]
    }
}

fn frame_unchecked<C: Field>(s: &Sl2<C>, l: u32) -> Result<CentralFrame<C>> {
    let star = [A, B, C_, D].map(|x| s.oq.reduce_word(&vec![x; l as usize]));
    let star = [star[0].clone()?, star[1].clone()?, star[2].clone()?, star[3].clone()?];
    let pw = |x: u8| s.l01.reduce_word(&vec![x; l as usize]);
    let center = [s.omega(), pw(B)?, pw(C_)?, pw(D)?];
    let a_loop = chebyshev_elem(&s.l01, &center[0], l)?.sub(&center[3]);
    let relation = s.l01.mul(&a_loop, &center[3])?.sub(&s.l01.mul(&center[1], &center[2])?).sub(&s.l01.one());
    Ok(CentralFrame { l, star, center, a_loop, relation })
}

/// Builds the frame and checks that the two descriptions of `Z_0` agree.
pub fn build_frame<C: Field>(s: &Sl2<C>, l: u32) -> Result<CentralFrame<C>> {
    if l < 3 || l % 2 == 0 {
        return domain(format!("l must be odd and >= 3, got {l}"));
    }
    let f = frame_unchecked(s, l)?;
    let rep = frame_report(s, &f)?;
    if !rep.all_pass() {
        return domain(format!("Z_0 identification failed: {}", rep.summary()));
    }
    Ok(f)
}

fn frame_report<C: Field>(s: &Sl2<C>, f: &CentralFrame<C>) -> Result<Report> {
    let mut rep = Report::new("frame");
    let names = ["a", "b", "c", "d"];
    for (k, z) in f.loop_gens().iter().enumerate() {
        let got = s.loop_to_star(z)?;
        rep.push(Case::compare(&format!("loop-vs-star:{}", names[k]), &s.oq.fmt(&f.star[k]), &s.oq.fmt(&got)));
    }
    rep.push(Case::compare("relation-l01", "0", &s.l01.fmt(&f.relation)));
    let pw = s.oq.mul(&f.star[0], &f.star[3])?.sub(&s.oq.mul(&f.star[1], &f.star[2])?);
    rep.push(Case::compare("relation-oq", "1", &s.oq.fmt(&pw)));
    Ok(rep)
}

/// `z x = x z` in `L_{0,1}` for every normal word `x` of degree `≤ degree`.
pub fn centrality_check<C: Field>(s: &Sl2<C>, z: &Elem<C>, degree: usize) -> Result<Report> {
    let mut rep = Report::new("central-l01");
    for k in 1..=degree {
        for w in normal_words(k) {
            let x = s.word(&w);
            let lhs = s.l01.mul(z, &x)?;
            let rhs = s.l01.mul(&x, z)?;
            let mut c = Case::compare(&s.l01.fmt_word(&w), &s.l01.fmt(&lhs), &s.l01.fmt(&rhs));
            if !c.passed() {
                c.witness = s.l01.fmt(&lhs.sub(&rhs));
            }
            rep.push(c);
        }
    }
    Ok(rep)
}

/// `z u = u z` in `L_{0,2}` for the generators `u` of both legs.
pub fn centrality_check_graph<C: Field>(s: &Sl2<C>, z: &Tensor<C>) -> Result<Report> {
    let g = Graph::new(s, 2);
    let mut rep = Report::new("central-l02");
    for a in 1..=2 {
        for x in [A, B, C_, D] {
            let u = g.gen(x, a);
            let lhs = g.mul(z, &u)?;
            let rhs = g.mul(&u, z)?;
            let mut c = Case::compare(&format!("{}{a}", s.l01.fmt_word(&[x])), &g.fmt(&lhs), &g.fmt(&rhs));
            if !c.passed() {
                c.witness = g.fmt(&lhs.sub(&rhs));
            }
            rep.push(c);
        }
    }
    Ok(rep)
}

/// The identities between the two descriptions of `Z_0`, `Φ_1(a^{⋆l})`, the
/// coproducts of `Z_0`, the module identity `f g = f ⋆ g` and centrality for
/// `n = 1` (degree `≤ 2`) and `n = 2` (generators).
pub fn z0_suite<C: Field>(s: &Sl2<C>, l: u32) -> Result<Report> {
    let f = frame_unchecked(s, l)?;
    let mut rep = Report::new("z0-central");
    rep.absorb(frame_report(s, &f)?);

    // Φ_1(a^{⋆l}) = K^l + (q - q^-1)^{2l} F^l E^l
    let mut want = s.word(&vec![L; 2 * l as usize]);
    let fe = [vec![F; l as usize], vec![E; l as usize]].concat();
    want.add_assign(&s.mono(&fe, qdiff().pow(2 * l)));
    rep.push(Case::compare("phi1(a*l)", &s.uq.fmt(&want), &s.uq.fmt(&s.phi1_star(&f.star[0])?)));

    // Δ(x^{⋆l}) = Σ_k x_{ik}^{⋆l} ⊗ x_{kj}^{⋆l}
    for (k, &x) in [A, B, C_, D].iter().enumerate() {
        let (i, j) = ((x >> 1) as usize, (x & 1) as usize);
        let mut want = Tensor::zero(2);
        for m in 0..2 {
            want.add_assign(&Tensor::from_pair(&f.star[2 * i + m], &f.star[2 * m + j]));
        }
        let got = s.oq_coproduct(&f.star[k])?;
        rep.push(Case::compare(&format!("coproduct:{}", s.oq.fmt_word(&[x])), &want.fmt(&[&s.oq, &s.oq]), &got.fmt(&[&s.oq, &s.oq])));
    }

    // α β = α ⋆ β for α ∈ Z_0
    let mut small = vec![Vec::new()];
    for k in 1..=2 {
        small.extend(normal_words(k));
    }
    for (k, z) in f.loop_gens().iter().enumerate() {
        let zs = &f.star[k];
        for w in &small {
            let g = s.word(w);
            let lhs = s.loop_to_star(&s.l01.mul(z, &g)?)?;
            let rhs = s.oq.mul(zs, &s.loop_to_star(&g)?)?;
            let id = format!("module:{}*{}", ["a", "b", "c", "d"][k], s.l01.fmt_word(w));
            rep.push(Case::compare(&id, &s.oq.fmt(&rhs), &s.oq.fmt(&lhs)));
        }
    }

    for (k, z) in f.center.iter().enumerate() {
        let mut r = centrality_check(s, z, 2)?;
        r.suite = format!("central-l01:{}", ["omega", "b^l", "c^l", "d^l"][k]);
        rep.absorb(r);
    }
    let g = Graph::new(s, 2);
    for (k, z) in f.loop_gens().iter().enumerate() {
        for a in 1..=2 {
            let mut r = centrality_check_graph(s, &g.embed(z, a)?)?;
            r.suite = format!("central-l02:{}{a}", ["a", "b", "c", "d"][k]);
            rep.absorb(r);
        }
    }
    Ok(rep)
}

/// A point of `SL_2`: rational values of `a^{⋆l}, b^{⋆l}, c^{⋆l}, d^{⋆l}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    pub vals: [Q; 4],
}

impl Character {
    pub fn new(a: Q, b: Q, c: Q, d: Q) -> Result<Self> {
        if &a * &d - &b * &c != Q::one() {
            return domain(format!("character ({a}, {b}, {c}, {d}) is not on SL2"));
        }
        Ok(Character { vals: [a, b, c, d] })
    }

    pub fn identity() -> Self {
        Character { vals: [Q::one(), Q::zero(), Q::zero(), Q::one()] }
    }

    /// Small rational point with `d ≠ 0` and `a = (1 + b c) / d`.
    pub fn sample(rng: &mut ChaCha8Rng) -> Self {
        let mut r = || Q::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into());
        let (b, c) = (r(), r());
        let mut d = r();
        while d.is_zero() {
            d = r();
        }
        let a = (Q::one() + &b * &c) / &d;
        Character { vals: [a, b, c, d] }
    }
}

impl std::fmt::Display for Character {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v = &self.vals;
        write!(f, "(a={}, b={}, c={}, d={})", v[0], v[1], v[2], v[3])
    }
}

/// Monomials `a^i b^j d^r`, `a^i c^k d^r` with exponents `< l` (`k ≥ 1`). Modulo
/// a central character they span the fibre of `O_ε`.
pub fn spanning_words(l: u32) -> Vec<Word> {
    let l = l as usize;
    let mut out = Vec::new();
    for i in 0..l {
        for mid in [B, C_] {
            for j in usize::from(mid == C_)..l {
                for r in 0..l {
                    out.push([vec![A; i], vec![mid; j], vec![D; r]].concat());
                }
            }
        }
    }
    out
}

/// The monomials `a^m b^n c^{s'}` and `b^n c^{s''} d^r` of the known `Z_0`-basis of `O_ε`.
pub fn drz_monomials(l: u32) -> Vec<Word> {
    let l = l as usize;
    let mut out = Vec::new();
    for m in 1..l {
        for n in 0..l {
            for s1 in m..l {
                out.push([vec![A; m], vec![B; n], vec![C_; s1]].concat());
            }
        }
    }
    for n in 0..l {
        for r in 0..l {
            for s2 in 0..l - r {
                out.push([vec![B; n], vec![C_; s2], vec![D; r]].concat());
            }
        }
    }
    out
}

/// Character-independent data: normal forms of `m v` for `Z_0` monomials `m`
/// of degree `≤ depth` and spanning words `v`.
pub struct FiberData<C: Field> {
    pub l: u32,
    pub words: Vec<Word>,
    index: HashMap<Word, usize>,
    /// `(exponents of m, index of v, normal form of m v)`.
    products: Vec<([u32; 4], usize, Elem<C>)>,
}

fn z0_monomials(depth: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for t in 1..=depth {
        for a in 0..=t {
            for b in 0..=t - a {
                for c in 0..=t - a - b {
                    out.push([a, b, c, t - a - b - c]);
                }
            }
        }
    }
    out
}

impl<C: Field> FiberData<C> {
    pub fn new(s: &Sl2<C>, l: u32, depth: u32) -> Result<Self> {
        let words = spanning_words(l);
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let mut products = Vec::new();
        for m in z0_monomials(depth) {
            let mw: Word = (0..4).flat_map(|k| vec![k as u8; (m[k] * l) as usize]).collect();
            for (i, v) in words.iter().enumerate() {
                products.push((m, i, s.oq.reduce_word(&[mw.as_slice(), v].concat())?));
            }
        }
        Ok(FiberData { l, words, index, products })
    }

    pub fn depth(&self) -> u32 {
        self.products.iter().map(|(m, _, _)| m.iter().sum::<u32>()).max().unwrap_or(0)
    }
}

/// `O_ε / (z - χ(z))` with both its `O_ε` and `L_{0,1}^ε` products.
pub struct FiberAlgebra<'a, C: Field> {
    s: &'a Sl2<C>,
    data: &'a FiberData<C>,
    pub chi: Character,
    /// Row echelon form of the kernel of the spanning set.
    rel: Mat<C>,
    pivots: Vec<usize>,
    free: Vec<usize>,
    /// Kernel rank using only `Z_0` monomials of degree `< depth`.
    pub rank_below_depth: usize,
}

impl<'a, C: Field> FiberAlgebra<'a, C> {
    pub fn new(s: &'a Sl2<C>, data: &'a FiberData<C>, chi: Character) -> Result<Self> {
        Character::new(chi.vals[0].clone(), chi.vals[1].clone(), chi.vals[2].clone(), chi.vals[3].clone())?;
        let n = data.words.len();
        let top = data.depth();
        let mut rows_low = Vec::new();
        let mut rows = Vec::new();
        let mut fa = FiberAlgebra { s, data, chi, rel: Mat::zeros(0, n, s.ctx()), pivots: Vec::new(), free: (0..n).collect(), rank_below_depth: 0 };
        for (m, i, prod) in &data.products {
            let mut v = fa.sigma(prod)?;
            let chi_m = fa.chi_mono(m);
            v[*i] = v[*i].sub(&chi_m);
            if m.iter().sum::<u32>() < top {
                rows_low.push(v.clone());
            }
            rows.push(v);
        }
        fa.rank_below_depth = if rows_low.is_empty() { 0 } else { Mat::from_rows(rows_low).rank() };
        let mut m = Mat::from_rows(rows);
        let piv = m.rref();
        let r = piv.len();
        fa.rel = Mat::from_rows((0..r).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect());
        if r == 0 {
            fa.rel = Mat::zeros(0, n, s.ctx());
        }
        fa.free = (0..n).filter(|c| !piv.contains(c)).collect();
        fa.pivots = piv;
        Ok(fa)
    }

    fn chi_mono(&self, m: &[u32; 4]) -> C {
        let mut acc = C::one(self.s.ctx());
        for k in 0..4 {
            acc = acc.mul(&self.val(k).pow(m[k], self.s.ctx()));
        }
        acc
    }

    fn val(&self, k: usize) -> C {
        C::from_laurent(&Laurent::constant(self.chi.vals[k].clone()), self.s.ctx())
    }

    /// Coordinates on the spanning set after replacing `x^{⋆l}` by `χ(x)`.
    /// The input must be an `O_q` normal form.
    pub fn sigma(&self, y: &Elem<C>) -> Result<Vec<C>> {
        let l = self.data.l as usize;
        let ctx = self.s.ctx();
        let mut v = vec![C::zero(ctx); self.data.words.len()];
        for (w, c) in y.terms() {
            let mut cnt = [0usize; 4];
            for &x in w {
                cnt[x as usize] += 1;
            }
            let mut coef = c.clone();
            for k in 0..4 {
                coef = coef.mul(&self.val(k).pow((cnt[k] / l) as u32, ctx));
            }
            let red: Word = (0..4).flat_map(|k| vec![k as u8; cnt[k] % l]).collect();
            let Some(&i) = self.data.index.get(&red) else {
                return domain(format!("word {} is not an O_q normal form", self.s.oq.fmt_word(w)));
            };
            v[i].add_assign(&coef);
        }
        Ok(v)
    }

    /// Coordinates in the fibre, on the basis of non-pivot spanning words.
    pub fn coords(&self, y: &Elem<C>) -> Result<Vec<C>> {
        let mut v = self.sigma(&self.s.oq.reduce(y)?)?;
        for (r, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for j in 0..v.len() {
                let x = self.rel.get(r, j);
                if !x.is_zero() {
                    v[j] = v[j].sub(&f.mul(x));
                }
            }
        }
        Ok(self.free.iter().map(|&j| v[j].clone()).collect())
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn basis_words(&self) -> Vec<Word> {
        self.free.iter().map(|&j| self.data.words[j].clone()).collect()
    }

    /// Rank of the images of `O_q` elements in the fibre.
    pub fn rank(&self, elems: &[Elem<C>]) -> Result<usize> {
        if elems.is_empty() {
            return Ok(0);
        }
        let rows: Vec<Vec<C>> = elems.iter().map(|e| self.coords(e)).collect::<Result<_>>()?;
        Ok(Mat::from_rows(rows).rank())
    }

    /// Dimension of the centre of the fibre of `L_{0,1}^ε`.
    pub fn loop_center_dim(&self) -> Result<usize> {
        let s = self.s;
        let basis = self.basis_words();
        let mut cols: Vec<Vec<C>> = Vec::new();
        for w in &basis {
            let x = s.word(w);
            let mut col = Vec::new();
            for g in [A, B, C_, D] {
                let gx = s.twist(&s.letter(g), &x)?;
                let xg = s.twist(&x, &s.letter(g))?;
                col.extend(self.coords(&gx.sub(&xg))?);
            }
            cols.push(col);
        }
        let m = Mat::from_rows(cols).transpose();
        Ok(basis.len() - m.rank())
    }

    /// Degree of the minimal polynomial of an `L_{0,1}` element acting in the
    /// fibre, from the first linear dependency among its `L_{0,1}` powers.
    pub fn min_poly_degree(&self, x: &Elem<C>) -> Result<usize> {
        let s = self.s;
        let mut pow = s.l01.one();
        let mut rows = Vec::new();
        for k in 0..=self.dim() {
            rows.push(self.coords(&s.loop_to_star(&pow)?)?);
            if Mat::from_rows(rows.clone()).rank() < rows.len() {
                return Ok(k);
            }
            pow = s.l01.mul(&pow, x)?;
        }
        domain("no dependency among powers")
    }
}

fn rank_case<C: Field>(id: &str, fa: &FiberAlgebra<C>, drz: &[Elem<C>], l: u32) -> Result<Vec<Case>> {
    let n = (l * l * l) as usize;
    let mut out = vec![Case::compare(&format!("{id}:fiber-dim"), &n.to_string(), &fa.dim().to_string())];
    let mut c = Case::compare(&format!("{id}:stable"), &fa.rank_below_depth.to_string(), &(fa.data.words.len() - fa.dim()).to_string());
    c.witness = fa.chi.to_string();
    out.push(c);
    let mut c = Case::compare(&format!("{id}:drz-rank"), &n.to_string(), &fa.rank(drz)?.to_string());
    c.witness = fa.chi.to_string();
    out.push(c);
    Ok(out)
}

/// The `l^3` monomials stay independent and span the fibre at the identity
/// character and at `samples` random characters.
pub fn drz_rank_check<C: Field>(s: &Sl2<C>, l: u32, samples: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("drz-rank");
    let words = drz_monomials(l);
    rep.push(Case::compare("count", &(l * l * l).to_string(), &words.len().to_string()));
    let drz: Vec<Elem<C>> = words.iter().map(|w| s.oq.reduce_word(w)).collect::<Result<_>>()?;
    let data = FiberData::new(s, l, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chars = vec![Character::identity()];
    chars.extend((0..samples).map(|_| Character::sample(&mut rng)));
    for (k, chi) in chars.into_iter().enumerate() {
        let fa = FiberAlgebra::new(s, &data, chi)?;
        for c in rank_case(&format!("chi{k}"), &fa, &drz, l)? {
            rep.push(c);
        }
    }
    Ok(rep)
}

/// Minimal polynomial degree of `ω`, the relation `T_l(ω) = a^{⋆l} + d^{⋆l}`
/// in the fibre, and the dimension of the fibre's centre, spanned by powers of `ω`.
pub fn minpoly_suite<C: Field>(s: &Sl2<C>, l: u32, seed: u64) -> Result<(Report, usize, usize)> {
    let mut rep = Report::new("minpoly");
    let data = FiberData::new(s, l, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chi = Character::sample(&mut rng);
    let fa = FiberAlgebra::new(s, &data, chi.clone())?;
    let w = s.omega();
    let deg = fa.min_poly_degree(&w)?;
    let mut c = Case::compare("degree", &l.to_string(), &deg.to_string());
    c.witness = chi.to_string();
    rep.push(c);

    let t = s.loop_to_star(&chebyshev_elem(&s.l01, &w, l)?)?;
    let sum = Elem::scalar(C::from_laurent(&Laurent::constant(&chi.vals[0] + &chi.vals[3]), s.ctx()));
    let resid = fa.coords(&t.sub(&sum))?;
    rep.push(Case::check("chebyshev-relation", resid.iter().all(|x| x.is_zero()), &chi.to_string()));

    let cdim = fa.loop_center_dim()?;
    rep.push(Case::compare("center-dim", &l.to_string(), &cdim.to_string()));
    let mut pows = vec![s.l01.one()];
    for k in 1..l as usize {
        pows.push(s.l01.mul(&pows[k - 1], &w)?);
    }
    let stars: Vec<Elem<C>> = pows.iter().map(|p| s.loop_to_star(p)).collect::<Result<_>>()?;
    rep.push(Case::compare("omega-powers-independent", &l.to_string(), &fa.rank(&stars)?.to_string()));
    let n = fa.dim();
    rep.push(Case::compare("pi-degree-squared", &((l * l) as usize).to_string(), &(n / cdim.max(1)).to_string()));
    Ok((rep, deg, cdim))
}

/// Algebra map from the classical polynomial ring in `a, b, c, d` (words read
/// commutatively) to `Z_0(O_ε)`.
pub fn frobenius<C: Field>(s: &Sl2<C>, l: u32, f: &Elem<C>) -> Result<Elem<C>> {
    let mut out = Elem::zero();
    for (w, c) in f.terms() {
        let mut cnt = [0usize; 4];
        for &x in w {
            if x > 3 {
                return domain(format!("letter {x} is not a generator"));
            }
            cnt[x as usize] += 1;
        }
        let word: Word = (0..4).flat_map(|k| vec![k as u8; cnt[k] * l as usize]).collect();
        out.add_scaled(&s.oq.reduce_word(&word)?, c);
    }
    Ok(out)
}

/// Value of a classical polynomial at the matrix `n = [[0, 1], [-1, 0]]`.
fn eval_at_n<C: Field>(f: &Elem<C>, ctx: &C::Ctx) -> C {
    let vals = [0i64, 1, -1, 0];
    let mut acc = C::zero(ctx);
    for (w, c) in f.terms() {
        let v: i64 = w.iter().map(|&x| vals[x as usize]).product();
        acc.add_assign(&c.mul(&C::from_int(v, ctx)));
    }
    acc
}

/// Multiplicativity of `t` on `Z_0`: against `⋆` products, against `L_{0,1}`
/// products, and `t(f) = f(n)` through the Frobenius map.
pub fn t_multiplicativity_check<C: Field>(s: &Sl2<C>, l: u32) -> Result<Report> {
    let ctx = s.ctx();
    let f = frame_unchecked(s, l)?;
    let names = ["a", "b", "c", "d"];
    let mut rep = Report::new("t-eval");
    let te = |e: &Elem<C>| t_eval(e, ctx);

    let mut gs = vec![Vec::new()];
    for k in 1..=3 {
        gs.extend(normal_words(k));
    }
    for (k, z) in f.star.iter().enumerate() {
        for w in &gs {
            let g = s.word(w);
            let lhs = te(&s.oq.mul(z, &g)?);
            let rhs = te(z).mul(&te(&g));
            rep.push(Case::compare(&format!("star:{}*{}", names[k], s.oq.fmt_word(w)), &rhs.to_string(), &lhs.to_string()));
        }
    }

    for w in words_upto(4, 2) {
        let p = s.word(&w);
        let got = te(&frobenius(s, l, &p)?);
        let want = eval_at_n(&p, ctx);
        rep.push(Case::compare(&format!("fn:{}", s.oq.fmt_word(&w)), &want.to_string(), &got.to_string()));
    }
    let det = s.word(&[A, D]).sub(&s.word(&[B, C_]));
    rep.push(Case::compare("fn:det", "1", &te(&frobenius(s, l, &det)?).to_string()));

    let mut small = vec![Vec::new()];
    for k in 1..=2 {
        small.extend(normal_words(k));
    }
    for (k, z) in f.loop_gens().iter().enumerate() {
        let tz = te(&s.loop_to_star(z)?);
        for w in &small {
            let g = s.word(w);
            let lhs = te(&s.loop_to_star(&s.l01.mul(z, &g)?)?);
            let rhs = tz.mul(&te(&s.loop_to_star(&g)?));
            rep.push(Case::compare(&format!("loop:{}*{}", names[k], s.l01.fmt_word(w)), &rhs.to_string(), &lhs.to_string()));
        }
    }
    for (k, want) in [(1usize, "1"), (2, "-1"), (0, "0"), (3, "0")] {
        rep.push(Case::compare(&format!("value:{}", names[k]), want, &te(&f.star[k]).to_string()));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Cyclo, Rf};

    fn s3() -> Sl2<Cyclo> {
        Sl2::at_root(3).unwrap()
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(drz_monomials(3).len(), 27);
        assert_eq!(drz_monomials(5).len(), 125);
        assert_eq!(spanning_words(3).len(), 45);
    }

    #[test]
    fn frame_at_three() {
        let s = s3();
        let f = build_frame(&s, 3).unwrap();
        assert_eq!(s.loop_to_star(&f.center[1]).unwrap(), s.oq.reduce_word(&[B, B, B]).unwrap());
        assert!(f.relation.is_zero());
    }

    #[test]
    fn frame_fails_at_generic_q() {
        assert!(build_frame(&Sl2::generic(), 3).is_err());
    }

    #[test]
    fn b_cubed_central_only_at_root() {
        let s = s3();
        let b3 = s.l01.reduce_word(&[B, B, B]).unwrap();
        assert!(centrality_check(&s, &b3, 2).unwrap().all_pass());
        let g = Sl2::<Rf>::generic();
        let b3 = g.l01.reduce_word(&[B, B, B]).unwrap();
        let rep = centrality_check(&g, &b3, 1).unwrap();
        assert!(!rep.all_pass());
        assert!(rep.failures().next().is_some_and(|c| !c.witness.is_empty()));
    }

    #[test]
    fn d_cubed_central_in_l02() {
        let s = s3();
        let g = Graph::new(&s, 2);
        let z = g.embed(&s.word(&[D, D, D]), 1).unwrap();
        assert!(centrality_check_graph(&s, &z).unwrap().all_pass());
    }

    #[test]
    fn frobenius_values() {
        let s = s3();
        assert_eq!(frobenius(&s, 3, &s.letter(A)).unwrap(), s.word(&[A, A, A]));
        assert_eq!(frobenius(&s, 3, &s.oq.one()).unwrap(), s.oq.one());
        let det = s.word(&[A, D]).sub(&s.word(&[B, C_]));
        assert_eq!(frobenius(&s, 3, &det).unwrap(), s.oq.one());
    }

    #[test]
    fn singular_character_rejected() {
        let two = Q::from_integer(2.into());
        assert!(Character::new(two.clone(), Q::zero(), Q::zero(), two).is_err());
    }

    #[test]
    fn fiber_at_identity_character() {
        let s = s3();
        let data = FiberData::new(&s, 3, 2).unwrap();
        let fa = FiberAlgebra::new(&s, &data, Character::identity()).unwrap();
        assert_eq!(fa.dim(), 27);
        let drz: Vec<Elem<Cyclo>> = drz_monomials(3).iter().map(|w| s.oq.reduce_word(w).unwrap()).collect();
        assert_eq!(fa.rank(&drz).unwrap(), 27);
    }

    #[test]
    fn t_values() {
        let s = s3();
        let te = |w: &[u8]| t_eval(&s.oq.reduce_word(w).unwrap(), s.ctx()).to_string();
        assert_eq!(te(&[B, B, B]), "1");
        assert_eq!(te(&[C_, C_, C_]), "-1");
        assert_eq!(te(&[A, A, A]), "0");
        let b3 = s.l01.reduce_word(&[B, B, B]).unwrap();
        for g in [A, B, C_, D] {
            let x = s.letter(g);
            let lhs = t_eval(&s.loop_to_star(&s.l01.mul(&b3, &x).unwrap()).unwrap(), s.ctx());
            assert_eq!(lhs, t_eval(&s.loop_to_star(&x).unwrap(), s.ctx()));
        }
    }

    #[test]
    fn suites_at_three() {
        let s = s3();
        let z = z0_suite(&s, 3).unwrap();
        assert!(z.all_pass(), "{}", z.summary());
        let d = drz_rank_check(&s, 3, 5, 7).unwrap();
        assert!(d.all_pass(), "{}", d.summary());
        let (m, deg, cdim) = minpoly_suite(&s, 3, 11).unwrap();
        assert!(m.all_pass(), "{}", m.summary());
        assert_eq!((deg, cdim), (3, 3));
        let t = t_multiplicativity_check(&s, 3).unwrap();
        assert!(t.all_pass(), "{}", t.summary());
    }
}
