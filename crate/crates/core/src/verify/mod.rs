//! Verification suites shared by the command line and the test targets.
//!
//! Each check runs over a family of cases and stops at the first
//! counterexample. Cases are exhaustive up to `Config::max_degree`; when
//! `Config::samples` is positive, that many random cases one degree higher
//! are added, drawn from a seeded generator.

pub mod axioms;
pub mod duality;
pub mod lattice;
pub mod oracles;

use crate::error::Error;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;

/// Degree bound and sampling parameters.
#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub max_degree: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Config {
    pub fn new(max_degree: usize) -> Self {
        Config {
            max_degree,
            samples: 0,
            seed: 0,
        }
    }

    pub fn with_samples(mut self, samples: usize, seed: u64) -> Self {
        self.samples = samples;
        self.seed = seed;
        self
    }

    pub(crate) fn rng(&self, salt: &str) -> ChaCha8Rng {
        let h = salt
            .bytes()
            .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {}/{} ({} cases)", self.suite, self.name, self.cases),
            Some(msg) => write!(f, "FAIL {}/{}: {}", self.suite, self.name, msg),
        }
    }
}

/// A counterexample or an error met while checking.
#[derive(Clone, Debug)]
pub struct Failure(pub String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure(s)
    }
}

pub type Outcome = std::result::Result<(), Failure>;

/// Fails with both sides printed unless they are equal.
pub fn ensure_eq<T: PartialEq + fmt::Display>(label: impl fmt::Display, lhs: &T, rhs: &T) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Failure(format!("{label}: {lhs} != {rhs}")))
    }
}

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Failure(msg()))
    }
}

/// Runs `f` on every case, stopping at the first failure.
pub fn run_cases<T>(
    suite: &str,
    name: impl Into<String>,
    cases: impl IntoIterator<Item = T>,
    mut f: impl FnMut(&T) -> Outcome,
) -> CheckResult {
    let mut n = 0;
    let mut failure = None;
    for c in cases {
        n += 1;
        if let Err(Failure(msg)) = f(&c) {
            failure = Some(msg);
            break;
        }
    }
    CheckResult {
        suite: suite.to_string(),
        name: name.into(),
        cases: n,
        failure,
    }
}

/// A single check without cases.
pub fn run_once(suite: &str, name: impl Into<String>, f: impl FnOnce() -> Outcome) -> CheckResult {
    let mut f = Some(f);
    run_cases(suite, name, [()], |_| (f.take().expect("run once"))())
}

/// Tuples of `arity` keys of positive degree with degree sum exactly `total`.
pub fn tuples_of_total<K: Clone>(
    keys: &dyn Fn(usize) -> Vec<K>,
    arity: usize,
    total: usize,
) -> Vec<Vec<K>> {
    let mut out = Vec::new();
    for comp in compositions(total, arity) {
        let lists: Vec<Vec<K>> = comp.iter().map(|&d| keys(d)).collect();
        if lists.iter().any(Vec::is_empty) {
            continue;
        }
        let mut idx = vec![0usize; arity];
        'odometer: loop {
            out.push((0..arity).map(|i| lists[i][idx[i]].clone()).collect());
            for i in (0..arity).rev() {
                idx[i] += 1;
                if idx[i] < lists[i].len() {
                    continue 'odometer;
                }
                idx[i] = 0;
            }
            break;
        }
    }
    out
}

/// Compositions of `total` into `parts` positive parts.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if total < parts {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in 1..=total - (parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All tuples with degree sum at most `cfg.max_degree`, then `cfg.samples`
/// random tuples with degree sum `cfg.max_degree + 1`.
pub fn cases<K: Clone>(
    keys: &dyn Fn(usize) -> Vec<K>,
    arity: usize,
    cfg: &Config,
    salt: &str,
) -> Vec<Vec<K>> {
    let mut out = Vec::new();
    for total in arity..=cfg.max_degree {
        out.extend(tuples_of_total(keys, arity, total));
    }
    if cfg.samples > 0 {
        let total = cfg.max_degree + 1;
        let comps = compositions(total, arity);
        if !comps.is_empty() {
            let mut rng = cfg.rng(salt);
            let lists: Vec<Vec<K>> = (1..=total).map(keys).collect();
            for _ in 0..cfg.samples {
                let comp = &comps[rng.gen_range(0..comps.len())];
                let t: Vec<K> = comp
                    .iter()
                    .map(|&d| {
                        let l = &lists[d - 1];
                        l[rng.gen_range(0..l.len())].clone()
                    })
                    .collect();
                out.push(t);
            }
        }
    }
    out
}

/// Names of the suites run by [`run_suite`].
pub const SUITES: [&str; 6] = ["axioms", "oracles", "intervals", "patterns", "duality", "antipode"];

/// Runs a named suite; `None` for an unknown name.
pub fn run_suite(name: &str, cfg: &Config) -> Option<Vec<CheckResult>> {
    Some(match name {
        "axioms" => axioms::suite(cfg),
        "oracles" => oracles::suite(cfg),
        "intervals" => lattice::intervals_suite(cfg),
        "patterns" => lattice::patterns_suite(cfg),
        "duality" => duality::suite(cfg),
        "antipode" => axioms::antipode_suite(cfg),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_enumeration() {
        let keys = |d: usize| -> Vec<usize> { (0..d).collect() };
        let t = tuples_of_total(&keys, 2, 3);
        // (1,2): 1*2, (2,1): 2*1
        assert_eq!(t.len(), 4);
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(tuples_of_total(&keys, 1, 3).len(), 3);
        let cfg = Config::new(3).with_samples(5, 7);
        let c = cases(&keys, 2, &cfg, "x");
        assert_eq!(c.len(), 1 + 4 + 5);
        assert_eq!(cases(&keys, 2, &cfg, "x"), c);
    }
}
