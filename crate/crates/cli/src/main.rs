use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qmod_cli::{cmd_grade, cmd_mul, cmd_pair, cmd_phi1, cmd_phin, cmd_reduce, cmd_reynolds, cmd_teval, verify, Algebra, VerifyOpts};
use qmod_core::scalars::Field;
use qmod_core::{QmodError, Result, Sl2};

#[derive(Parser)]
#[command(name = "qmod", version, about = "Exact computations in U_q(sl2), O_q(sl2) and the graph algebras L_{0,n}(sl2)")]
struct Cli {
    /// Specialise q to a primitive l-th root of unity (odd l >= 3).
    #[arg(long, global = true)]
    l: Option<u32>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the normal form of an expression.
    Reduce {
        /// uq, oq, l01, or l0N for N legs.
        #[arg(long, short, default_value = "l01")]
        algebra: String,
        expr: String,
    },
    /// Multiply two elements.
    Mul {
        #[arg(long, short, default_value = "l01")]
        algebra: String,
        x: String,
        y: String,
    },
    /// Pair an O_q element with a U_q element.
    Pair { alpha: String, x: String },
    /// Image of an L_{0,1} element under Phi_1.
    Phi1 { expr: String },
    /// Image of an L_{0,n} element under Phi_n.
    Phin {
        #[arg(long, default_value_t = 2)]
        legs: usize,
        expr: String,
    },
    /// Evaluate the functional t on an O_q element.
    Teval { expr: String },
    /// Split an element into homogeneous components.
    Grade {
        #[arg(long, default_value_t = 1)]
        legs: usize,
        expr: String,
    },
    /// Project onto coadjoint invariants.
    Reynolds {
        #[arg(long, default_value_t = 1)]
        legs: usize,
        expr: String,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 2)]
        deg: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Write the JSON report here ("-" for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn algebra(name: &str) -> Result<Algebra> {
    Algebra::from_name(name).ok_or_else(|| QmodError::Domain(format!("unknown algebra '{name}'")))
}

fn eval<C: Field>(s: &Sl2<C>, cmd: &Cmd) -> Result<String> {
    match cmd {
        Cmd::Reduce { algebra: a, expr } => cmd_reduce(s, algebra(a)?, expr),
        Cmd::Mul { algebra: a, x, y } => cmd_mul(s, algebra(a)?, x, y),
        Cmd::Pair { alpha, x } => cmd_pair(s, alpha, x),
        Cmd::Phi1 { expr } => cmd_phi1(s, expr),
        Cmd::Phin { legs, expr } => cmd_phin(s, *legs, expr),
        Cmd::Teval { expr } => cmd_teval(s, expr),
        Cmd::Grade { legs, expr } => cmd_grade(s, *legs, expr),
        Cmd::Reynolds { legs, expr } => cmd_reynolds(s, *legs, expr),
        Cmd::Verify { .. } => unreachable!(),
    }
}

fn run(cli: Cli) -> Result<bool> {
    if let Cmd::Verify { suite, deg, seed, json } = &cli.cmd {
        let o = VerifyOpts { l: cli.l.unwrap_or(3), deg: *deg, seed: *seed };
        let rep = verify(suite, &o)?;
        match json {
            Some(p) if p.as_os_str() == "-" => println!("{}", rep.to_json()),
            Some(p) => {
                std::fs::write(p, rep.to_json() + "\n").map_err(|e| QmodError::Domain(format!("{}: {e}", p.display())))?;
            }
            None => {}
        }
        if json.as_deref().map_or(true, |p| p.as_os_str() != "-") {
            for c in rep.cases.iter().filter(|c| c.status != "pass") {
                println!("FAIL {}: expected {}, got {} {}", c.id, c.expected, c.got, c.witness);
            }
            println!("{}: {}/{} cases pass in {} ms", rep.suite, rep.cases.len() - rep.failures(), rep.cases.len(), rep.wall_ms);
        }
        return Ok(rep.all_pass());
    }
    let out = match cli.l {
        Some(l) => eval(&Sl2::at_root(l)?, &cli.cmd)?,
        None => eval(&Sl2::generic(), &cli.cmd)?,
    };
    println!("{out}");
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
