//! `hopfcomb`: products, coproducts, basis changes, lattices, series and
//! verification suites from the command line.

mod algebra;

use algebra::{Algebra, Output};
use clap::{Parser, Subcommand, ValueEnum};
use hopfcomb::combinat::enumerate_packed_words;
use hopfcomb::order::Poset;
use hopfcomb::series;
use hopfcomb::subalg::WordClasses;
use hopfcomb::tc::SignClasses;
use hopfcomb::td::Trees;
use hopfcomb::verify::{self, CheckResult, Config};
use hopfcomb::{Basis, Error};
use std::process::ExitCode;

/// Degree bound for commands that enumerate whole graded components.
const DEFAULT_MAX_DEGREE: usize = 8;
const MAX_DEGREE_VAR: &str = "HOPFCOMB_MAX_DEGREE";

#[derive(Parser)]
#[command(name = "hopfcomb", version, about = "Exact computations in WQSym, TD and TC")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Product of two elements, or one of its partial products.
    Mul {
        algebra: Algebra,
        basis: String,
        x: String,
        y: String,
        /// Partial product (wqsym M and td MM only).
        #[arg(long, value_enum)]
        part: Option<Part>,
        #[arg(long)]
        json: bool,
    },
    /// Coproduct of an element, or one of its half coproducts.
    Comul {
        algebra: Algebra,
        basis: String,
        x: String,
        /// Half coproduct (wqsym M and td MM only).
        #[arg(long, value_enum)]
        half: Option<Half>,
        #[arg(long)]
        json: bool,
    },
    /// Antipode of an element.
    Antipode {
        algebra: Algebra,
        basis: String,
        x: String,
        #[arg(long)]
        json: bool,
    },
    /// Internal product on the duals: F for wqsym-dual, S for td and tc.
    Iprod {
        algebra: Algebra,
        x: String,
        y: String,
        #[arg(long)]
        json: bool,
    },
    /// Rewrites an element in another basis.
    Convert {
        algebra: Algebra,
        x: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        json: bool,
    },
    /// Polynomial realization over the alphabet {1..k}.
    Expand {
        algebra: Algebra,
        x: String,
        #[arg(long, default_value_t = 3)]
        alphabet: u32,
    },
    /// Dimensions of the graded components, checked against their series.
    Dims {
        algebra: Algebra,
        #[arg(long, default_value_t = 5)]
        max: usize,
        /// One row per degree with the series coefficient.
        #[arg(long)]
        table: bool,
        #[arg(long)]
        json: bool,
    },
    /// Hasse diagram of a lattice of packed words.
    Lattice {
        #[arg(value_enum)]
        family: Family,
        degree: usize,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients of a generating series.
    Series {
        /// ordered-bell, schroeder, conjecture or powers-of-three.
        name: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Runs a verification suite, or `all` of them.
    Check {
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random cases one degree above the bound.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Part {
    Left,
    Mid,
    Right,
    DendLeft,
    DendRight,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Half {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Permutohedron,
    Trees,
    Segcomp,
}

/// Why a command did not succeed.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn max_degree() -> Result<usize, Failure> {
    match std::env::var(MAX_DEGREE_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_DEGREE_VAR} must be a number, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn guard(what: &'static str, n: usize) -> Result<(), Failure> {
    let limit = max_degree()?;
    if n > limit {
        return Err(Error::TooLarge {
            what,
            requested: n,
            limit,
        }
        .into());
    }
    Ok(())
}

fn emit(out: Output, json: bool) {
    if json {
        println!("{}", out.json);
    } else {
        println!("{}", out.text);
    }
}

fn basis(name: &str) -> Result<Basis, Failure> {
    Basis::from_name(name).ok_or_else(|| Failure::Usage(format!("unknown basis `{name}`")))
}

fn dims(algebra: Algebra, max: usize, table: bool, json: bool) -> Result<(), Failure> {
    guard("degree", max)?;
    let order = max + 1;
    let (dims, expected): (Vec<usize>, series::Series) = match algebra {
        Algebra::Wqsym | Algebra::WqsymDual => (
            (0..order).map(|n| enumerate_packed_words(n).len()).collect(),
            series::ordered_bell(order)?,
        ),
        Algebra::Td => ((0..order).map(|n| Trees.dim(n)).collect(), series::schroeder(order)?),
        Algebra::Tc => (
            (0..order).map(|n| SignClasses.dim(n)).collect(),
            series::powers_of_three(order)?,
        ),
    };
    let coeffs: Vec<String> = (0..order).map(|n| expected.coeff(n).to_string()).collect();
    let agree = dims.iter().zip(&coeffs).all(|(d, c)| d.to_string() == *c);
    if json {
        let v = serde_json::json!({ "dims": dims, "series": coeffs, "agree": agree });
        println!("{v}");
    } else if table {
        println!("n\tdim\tseries");
        for (n, (d, c)) in dims.iter().zip(&coeffs).enumerate() {
            println!("{n}\t{d}\t{c}");
        }
    } else {
        let line: Vec<String> = dims.iter().map(ToString::to_string).collect();
        println!("{}", line.join(" "));
    }
    if agree {
        Ok(())
    } else {
        eprintln!("dimensions differ from the series: {}", coeffs.join(" "));
        Err(Failure::Verification)
    }
}

fn lattice(family: Family, n: usize, json: bool) -> Result<(), Failure> {
    guard("degree", n)?;
    let (name, poset) = match family {
        Family::Permutohedron => ("permutohedron", Poset::permutohedron(n)?),
        Family::Trees => (
            "trees",
            Poset::new(Trees.keys(n).iter().map(|k| Trees.canonical_word(k)).collect())?,
        ),
        Family::Segcomp => (
            "segcomp",
            Poset::new(
                SignClasses
                    .keys(n)
                    .iter()
                    .map(|k| SignClasses.canonical_word(k))
                    .collect(),
            )?,
        ),
    };
    if json {
        let v = serde_json::to_string(&poset.hasse_json()).expect("serializable");
        println!("{v}");
    } else {
        print!("{}", poset.hasse_dot(&format!("{name}-{n}")));
    }
    Ok(())
}

fn series_cmd(name: &str, order: usize) -> Result<(), Failure> {
    let s = series::by_name(name, order)?;
    let coeffs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
    println!("{}", coeffs.join(" "));
    Ok(())
}

fn check(suite: &str, max: usize, seed: u64, samples: usize, json: bool) -> Result<(), Failure> {
    guard("degree", max)?;
    let cfg = Config::new(max).with_samples(samples, seed);
    let names: Vec<&str> = if suite == "all" {
        verify::SUITES.to_vec()
    } else if verify::SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(Failure::Usage(format!(
            "unknown suite `{suite}`; expected all or one of {}",
            verify::SUITES.join(", ")
        )));
    };
    let results: Vec<CheckResult> = std::thread::scope(|s| {
        let handles: Vec<_> = names
            .iter()
            .map(|name| s.spawn(move || verify::run_suite(name, &cfg).expect("known suite")))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite thread"))
            .collect()
    });
    if json {
        println!("{}", serde_json::to_string(&results).expect("serializable"));
    } else {
        for r in &results {
            println!("{r}");
        }
    }
    if results.iter().all(CheckResult::passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Mul {
            algebra,
            basis: b,
            x,
            y,
            part,
            json,
        } => emit(algebra::mul(algebra, basis(&b)?, &x, &y, part, max_degree()?)?, json),
        Command::Comul {
            algebra,
            basis: b,
            x,
            half,
            json,
        } => emit(algebra::comul(algebra, basis(&b)?, &x, half, max_degree()?)?, json),
        Command::Antipode {
            algebra,
            basis: b,
            x,
            json,
        } => emit(algebra::antipode(algebra, basis(&b)?, &x, max_degree()?)?, json),
        Command::Iprod { algebra, x, y, json } => {
            emit(algebra::iprod(algebra, &x, &y, max_degree()?)?, json)
        }
        Command::Convert { algebra, x, to, json } => {
            emit(algebra::convert(algebra, &x, basis(&to)?, max_degree()?)?, json)
        }
        Command::Expand { algebra, x, alphabet } => {
            println!("{}", algebra::expand(algebra, &x, alphabet, max_degree()?)?)
        }
        Command::Dims {
            algebra,
            max,
            table,
            json,
        } => dims(algebra, max, table, json)?,
        Command::Lattice {
            family,
            degree,
            dot: _,
            json,
        } => lattice(family, degree, json)?,
        Command::Series { name, order } => series_cmd(&name, order)?,
        Command::Check {
            suite,
            max_degree,
            seed,
            samples,
            json,
        } => check(&suite, max_degree, seed, samples, json)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
