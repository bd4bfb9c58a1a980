use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::laurent::{Laurent, Q};
use super::ring::{Field, Ring};
use crate::error::{domain, Result};

/// The field `Q[x]/Phi_l(x)` for odd `l >= 3`, with `q -> x` and `q^(1/2) -> x^((l+1)/2)`.
#[derive(Debug, PartialEq)]
pub struct CycloField {
    l: u32,
    /// Monic `Phi_l`, ascending coefficients.
    phi: Vec<Q>,
    /// `x^k mod Phi_l` for `0 <= k < l`.
    powers: Vec<Vec<Q>>,
}

pub type CycloCtx = Arc<CycloField>;

fn poly_div_exact(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut quot = vec![Q::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let f = &r[i + db] / &b[db];
        for j in 0..=db {
            r[i + j] -= &f * &b[j];
        }
        quot[i] = f;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()));
    quot
}

/// Cyclotomic polynomial `Phi_n`, ascending coefficients.
pub fn cyclotomic(n: u32) -> Vec<Q> {
    let mut p = vec![Q::zero(); n as usize + 1];
    p[0] = -Q::one();
    p[n as usize] = Q::one();
    for d in 1..n {
        if n % d == 0 {
            p = poly_div_exact(&p, &cyclotomic(d));
        }
    }
    p
}

impl CycloField {
    pub fn new(l: u32) -> Result<CycloCtx> {
        if l < 3 || l % 2 == 0 {
            return domain(format!("root of unity order must be odd and >= 3, got {l}"));
        }
        let phi = cyclotomic(l);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(l as usize);
        let mut cur = vec![Q::zero(); deg];
        cur[0] = Q::one();
        for _ in 0..l {
            powers.push(cur.clone());
            // multiply by x and reduce
            let top = cur[deg - 1].clone();
            let mut next = vec![Q::zero(); deg];
            for i in (1..deg).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !top.is_zero() {
                for i in 0..deg {
                    next[i] -= &top * &phi[i];
                }
            }
            cur = next;
        }
        Ok(Arc::new(CycloField { l, phi, powers }))
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let deg = self.degree();
        let mut out = vec![Q::zero(); deg];
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &self.powers[k % self.l as usize];
            for i in 0..deg {
                if !p[i].is_zero() {
                    out[i] += c * &p[i];
                }
            }
        }
        out
    }
}

#[derive(Clone)]
pub struct Cyclo {
    field: CycloCtx,
    c: Vec<Q>,
}

impl PartialEq for Cyclo {
    fn eq(&self, o: &Self) -> bool {
        self.field.l == o.field.l && self.c == o.c
    }
}

impl Cyclo {
    pub fn field(&self) -> &CycloCtx {
        &self.field
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn from_coeffs(field: &CycloCtx, v: &[Q]) -> Self {
        Cyclo { field: field.clone(), c: field.reduce(v) }
    }

    pub fn as_rational(&self) -> Option<Q> {
        self.c[1..].iter().all(|c| c.is_zero()).then(|| self.c[0].clone())
    }

    /// Image of a Laurent polynomial in `q^(1/2)`.
    pub fn specialize(x: &Laurent, field: &CycloCtx) -> Self {
        let l = field.l as i64;
        let half = (l + 1) / 2;
        let mut v = vec![Q::zero(); l as usize];
        for (e, c) in x.terms() {
            let k = (e * half).rem_euclid(l) as usize;
            v[k] += c;
        }
        Cyclo { field: field.clone(), c: field.reduce(&v) }
    }

    fn as_laurent(&self) -> Laurent {
        Laurent::from_terms(self.c.iter().enumerate().map(|(i, c)| (2 * i as i64, c.clone())).collect())
    }
}

/// Specialise `q` to a primitive `l`-th root of unity.
pub fn specialize(x: &Laurent, l: u32) -> Result<Cyclo> {
    Ok(Cyclo::specialize(x, &CycloField::new(l)?))
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_laurent())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[l={}]({self})", self.field.l)
    }
}

impl Ring for Cyclo {
    type Ctx = CycloCtx;
    fn zero(ctx: &CycloCtx) -> Self {
        Cyclo { field: ctx.clone(), c: vec![Q::zero(); ctx.degree()] }
    }
    fn one(ctx: &CycloCtx) -> Self {
        let mut z = Self::zero(ctx);
        z.c[0] = Q::one();
        z
    }
    fn from_laurent(x: &Laurent, ctx: &CycloCtx) -> Self {
        Cyclo::specialize(x, ctx)
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|c| c.is_zero())
    }
    fn add(&self, o: &Self) -> Self {
        Cyclo { field: self.field.clone(), c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect() }
    }
    fn sub(&self, o: &Self) -> Self {
        Cyclo { field: self.field.clone(), c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect() }
    }
    fn mul(&self, o: &Self) -> Self {
        let n = self.c.len();
        let mut v = vec![Q::zero(); 2 * n];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Cyclo { field: self.field.clone(), c: self.field.reduce(&v) }
    }
    fn neg(&self) -> Self {
        Cyclo { field: self.field.clone(), c: self.c.iter().map(|a| -a).collect() }
    }
}

impl Field for Cyclo {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // Solve (multiplication by self) * v = 1 over Q.
        let n = self.c.len();
        let mut cols: Vec<Vec<Q>> = Vec::with_capacity(n);
        let mut basis = Self::one(&self.field);
        let mut x = Self::zero(&self.field);
        if n > 1 {
            x.c[1] = Q::one();
        }
        for _ in 0..n {
            cols.push(self.mul(&basis).c);
            basis = basis.mul(&x);
        }
        let mut m: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let mut row: Vec<Q> = (0..n).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Q::one() } else { Q::zero() });
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, piv);
            let p = m[col][col].clone();
            for v in m[col].iter_mut() {
                *v /= &p;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in col..=n {
                        let t = &f * &m[col][k];
                        m[r][k] -= t;
                    }
                }
            }
        }
        Some(Cyclo { field: self.field.clone(), c: m.iter().map(|r| r[n].clone()).collect() })
    }
}
