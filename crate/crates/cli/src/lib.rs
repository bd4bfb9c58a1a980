//! Parser, command implementations and the verification-suite runner behind
//! the `qmod` binary.

pub mod parse;

use std::time::Instant;

use qmod_core::filtration::{self, fmt_key, Filtration};
use qmod_core::graphn::{graph_suite, Graph};
use qmod_core::hopfdual::{drinfeld_suite, hopf_suite};
use qmod_core::loop01::{phi1_suite, rel01_vs_twist};
use qmod_core::ncalg::{Elem, Tensor, Word};
use qmod_core::repmod::{appendix_suite, t_eval};
use qmod_core::report::{Case, Report};
use qmod_core::rootsofunity::{drz_rank_check, minpoly_suite, t_multiplicativity_check, z0_suite};
use qmod_core::scalars::{Cyclo, Field, Laurent, Rf};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use qmod_core::{QmodError, Result, Sl2};
use rayon::prelude::*;
use serde::Serialize;

pub use parse::{parse, Algebra, Evaluator, Expr};

/// Suites accepted by `verify`, in the order `all` reports them.
pub const SUITES: [&str; 13] = [
    "engine",
    "rel01-vs-twist",
    "hopf-axioms",
    "phi1-morphism",
    "weyl",
    "graph",
    "exchange-form",
    "invariants",
    "z0-central",
    "t-eval",
    "drz-rank",
    "minpoly",
    "forced-fail",
];

#[derive(Clone, Debug)]
pub struct VerifyOpts {
    pub l: u32,
    pub deg: usize,
    pub seed: u64,
}

impl Default for VerifyOpts {
    fn default() -> Self {
        VerifyOpts { l: 3, deg: 2, seed: 7 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseOut {
    pub id: String,
    pub status: String,
    pub expected: String,
    pub got: String,
    pub witness: String,
}

/// Machine-readable result of `verify`.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub l: u32,
    pub deg: usize,
    pub seed: u64,
    pub cases: Vec<CaseOut>,
    pub wall_ms: u128,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.status == "pass")
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| c.status != "pass").count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

fn to_cases(rep: &Report) -> Vec<CaseOut> {
    rep.cases
        .iter()
        .map(|c| CaseOut {
            id: c.id.clone(),
            status: if c.passed() { "pass" } else { "fail" }.to_string(),
            expected: c.expected.clone(),
            got: c.got.clone(),
            witness: c.witness.clone(),
        })
        .collect()
}

fn at_root(l: u32) -> Result<Sl2<Cyclo>> {
    if l < 3 || l % 2 == 0 {
        return Err(QmodError::Domain(format!("l must be odd and at least 3, got {l}")));
    }
    Sl2::at_root(l)
}

/// One suite as a core report. Generic-`q` suites ignore `l`.
pub fn run_suite(name: &str, o: &VerifyOpts) -> Result<Report> {
    let generic = || Sl2::<Rf>::generic();
    let mut rep = Report::new(name);
    match name {
        "engine" => {
            let s = generic();
            for (p, deg) in [(&s.uq, 4), (&s.oq, 4), (&s.l01, 4)] {
                let mut r = p.check_confluence(deg);
                r.suite = format!("confluence:{}", p.name());
                rep.absorb(r);
            }
            rep.absorb(round_trip(&s, 1000, o.seed)?);
            rep.absorb(round_trip(&at_root(o.l)?, 200, o.seed)?);
        }
        "rel01-vs-twist" => rep.absorb(rel01_vs_twist(&generic())?),
        "hopf-axioms" => {
            let s = generic();
            rep.absorb(hopf_suite(&s, 200, o.seed)?);
            rep.absorb(drinfeld_suite(&s, o.deg)?);
        }
        "phi1-morphism" => rep.absorb(phi1_suite(&generic(), o.deg)?),
        "weyl" => rep.absorb(appendix_suite(4, 3, 4)),
        "graph" => rep.absorb(graph_suite(&generic(), 10, o.seed)?),
        "exchange-form" => rep.absorb(filtration::exchange_suite(&generic())?),
        "invariants" => rep.absorb(filtration::invariants_suite(&generic())?),
        "z0-central" => rep.absorb(z0_suite(&at_root(o.l)?, o.l)?),
        "t-eval" => rep.absorb(t_multiplicativity_check(&at_root(o.l)?, o.l)?),
        "drz-rank" => rep.absorb(drz_rank_check(&at_root(o.l)?, o.l, 5, o.seed)?),
        "minpoly" => rep.absorb(minpoly_suite(&at_root(o.l)?, o.l, o.seed)?.0),
        "forced-fail" => {
            let mut r = Report::new("forced-fail");
            r.push(Case::compare("one-equals-two", "1", "2"));
            rep.absorb(r);
        }
        _ => return Err(QmodError::Domain(format!("unknown suite '{name}'"))),
    }
    let prefix = format!("{name}/");
    for c in &mut rep.cases {
        if !c.id.starts_with(&prefix) {
            c.id = format!("{prefix}{}", c.id);
        }
    }
    Ok(rep)
}

/// Runs a suite, or every suite except `forced-fail` for `all`, on the rayon
/// pool. Cases are merged in suite order.
pub fn verify(name: &str, o: &VerifyOpts) -> Result<VerifyReport> {
    let start = Instant::now();
    let names: Vec<&str> = if name == "all" {
        SUITES.iter().copied().filter(|s| *s != "forced-fail").collect()
    } else if SUITES.contains(&name) {
        vec![name]
    } else {
        return Err(QmodError::Domain(format!("unknown suite '{name}'")));
    };
    let reports: Vec<Result<Report>> = names.par_iter().map(|n| run_suite(n, o)).collect();
    let mut cases = Vec::new();
    for (n, r) in names.iter().zip(reports) {
        match r {
            Ok(r) => cases.extend(to_cases(&r)),
            Err(e) => cases.push(CaseOut {
                id: format!("{n}/error"),
                status: "fail".into(),
                expected: "no error".into(),
                got: e.to_string(),
                witness: String::new(),
            }),
        }
    }
    Ok(VerifyReport { suite: name.to_string(), l: o.l, deg: o.deg, seed: o.seed, cases, wall_ms: start.elapsed().as_millis() })
}

fn random_coeff<C: Field>(rng: &mut ChaCha8Rng, s: &Sl2<C>) -> C {
    let n = [-3i64, -2, -1, 1, 2, 3, 5][rng.gen_range(0..7)];
    let c = s.c(&Laurent::q_half(rng.gen_range(-4..=4)).mul(&Laurent::from_int(n)));
    match rng.gen_range(0..6) {
        0 => c.div(&s.c(&Laurent::q_pow(2).add(&Laurent::one()))).expect("q^2 + 1 is invertible"),
        1 => c.add(&s.int(rng.gen_range(-2..=2))),
        _ => c,
    }
}

fn random_loop<C: Field>(rng: &mut ChaCha8Rng, s: &Sl2<C>, letters: u8) -> Elem<C> {
    let mut e = Elem::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let w: Word = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(0..letters)).collect();
        e.add_term(w, &random_coeff(rng, s));
    }
    e
}

/// `parse ∘ print` on `n` random canonical elements of each of `U_q`, `O_q`,
/// `L_{0,1}` and `L_{0,2}`.
pub fn round_trip<C: Field>(s: &Sl2<C>, n: usize, seed: u64) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new("round-trip");
    for alg in [Algebra::Uq, Algebra::Oq, Algebra::L01, Algebra::L0n(2)] {
        let ev = Evaluator::new(s, alg);
        let mut bad = None;
        for _ in 0..n {
            let t = match alg {
                Algebra::Uq => Tensor::embed(&s.uq.reduce(&random_loop(&mut rng, s, 4))?, 0, 1),
                Algebra::Oq => Tensor::embed(&s.oq.reduce(&random_loop(&mut rng, s, 4))?, 0, 1),
                Algebra::L01 => Tensor::embed(&s.l01.reduce(&random_loop(&mut rng, s, 4))?, 0, 1),
                Algebra::L0n(k) => {
                    let mut t = Tensor::zero(k);
                    for _ in 0..2 {
                        let x = Tensor::embed(&random_loop(&mut rng, s, 4), 0, 1);
                        let y = Tensor::embed(&random_loop(&mut rng, s, 4), 0, 1);
                        t.add_assign(&x.kron(&y));
                    }
                    Graph::new(s, k).normalize(&t)?
                }
            };
            let text = ev.print(&t);
            match ev.tensor(&text) {
                Ok(back) if back == t => {}
                Ok(back) => {
                    bad = Some((text, ev.print(&back)));
                    break;
                }
                Err(e) => {
                    bad = Some((text, e.to_string()));
                    break;
                }
            }
        }
        let id = format!("{alg:?}").to_lowercase();
        rep.push(match bad {
            None => Case::pass(&id),
            Some((text, got)) => Case::fail(&id, &text, &got, "parse(print(x)) != x"),
        });
    }
    Ok(rep)
}

/// `reduce`: canonical form in the given algebra.
pub fn cmd_reduce<C: Field>(s: &Sl2<C>, alg: Algebra, text: &str) -> Result<String> {
    let ev = Evaluator::new(s, alg);
    Ok(ev.print(&ev.tensor(text)?))
}

/// `mul`: product of two elements of the same algebra.
pub fn cmd_mul<C: Field>(s: &Sl2<C>, alg: Algebra, x: &str, y: &str) -> Result<String> {
    cmd_reduce(s, alg, &format!("({x})*({y})"))
}

/// `pair`: the Hopf pairing of `α ∈ O_q` with `x ∈ U_q`.
pub fn cmd_pair<C: Field>(s: &Sl2<C>, alpha: &str, x: &str) -> Result<String> {
    let a = Evaluator::new(s, Algebra::Oq).elem(alpha)?;
    let u = Evaluator::new(s, Algebra::Uq).elem(x)?;
    Ok(s.pair(&a, &u).to_string())
}

/// `phi1`: image of an `L_{0,1}` element in `U_q`.
pub fn cmd_phi1<C: Field>(s: &Sl2<C>, x: &str) -> Result<String> {
    let e = Evaluator::new(s, Algebra::L01).elem(x)?;
    Ok(s.uq.fmt(&s.phi1(&e)?))
}

/// `phin`: image of an `L_{0,n}` element in `U_q^{⊗n}`.
pub fn cmd_phin<C: Field>(s: &Sl2<C>, legs: usize, x: &str) -> Result<String> {
    let alg = if legs == 1 { Algebra::L01 } else { Algebra::L0n(legs) };
    let t = Evaluator::new(s, alg).tensor(x)?;
    let g = Graph::new(s, legs);
    Ok(g.fmt_uq(&g.phi(&t)?))
}

/// `teval`: the functional `t` on `O_q`.
pub fn cmd_teval<C: Field>(s: &Sl2<C>, x: &str) -> Result<String> {
    let a = Evaluator::new(s, Algebra::Oq).elem(x)?;
    Ok(t_eval(&a, s.ctx()).to_string())
}

/// `grade`: homogeneous components, one per line, printed in matrix
/// coefficients as `star(...)`.
pub fn cmd_grade<C: Field>(s: &Sl2<C>, legs: usize, x: &str) -> Result<String> {
    let alg = if legs == 1 { Algebra::L01 } else { Algebra::L0n(legs) };
    let t = Evaluator::new(s, alg).tensor(x)?;
    let fl = Filtration::new(s);
    let parts = fl.bigrade(&t)?;
    if parts.is_empty() {
        return Ok("0".into());
    }
    let lines: Vec<String> = parts
        .iter()
        .rev()
        .map(|(k, p)| format!("{}: star({})", fmt_key(k), p.fmt(&[&s.oq])))
        .collect();
    Ok(lines.join("\n"))
}

/// `reynolds`: projection onto coadjoint invariants.
pub fn cmd_reynolds<C: Field>(s: &Sl2<C>, legs: usize, x: &str) -> Result<String> {
    let alg = if legs == 1 { Algebra::L01 } else { Algebra::L0n(legs) };
    let ev = Evaluator::new(s, alg);
    let t = ev.tensor(x)?;
    let r: Tensor<C> = filtration::reynolds(&Filtration::new(s), &t)?;
    Ok(ev.print(&r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forced_fail_fails() {
        let r = verify("forced-fail", &VerifyOpts::default()).unwrap();
        assert!(!r.all_pass());
        assert_eq!(r.cases[0].id, "forced-fail/one-equals-two");
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(verify("nope", &VerifyOpts::default()).is_err());
    }

    #[test]
    fn root_must_be_odd() {
        let o = VerifyOpts { l: 4, ..Default::default() };
        let r = verify("t-eval", &o).unwrap();
        assert!(!r.all_pass());
    }
}
