//! Pairings between `WQSym` and its dual, and the internal products.

use super::{ensure, ensure_eq, run_cases, CheckResult, Config, Outcome};
use crate::combinat::{
    enumerate_packed_words, to_set_partition, OrderedSetPartition, PackedWord,
    SegmentedComposition,
};
use crate::freemod::{BasisKey, Element, GradedBialgebra, Q};
use crate::subalg::WordClasses;
use crate::tc::{self, SignClasses};
use crate::td::{self, TreeKey, Trees};
use crate::wqsym::{iprod_dual, DualF, PhiBasis, Ribbon, Wqsym};
use std::collections::{BTreeMap, BTreeSet};

const SUITE: &str = "duality";

type Triple = (PackedWord, PackedWord, PackedWord);

/// Structure constants `(u, v, w) ↦ coefficient` of the product in degree `n`.
fn product_constants(
    alg: &impl GradedBialgebra<Key = PackedWord>,
    n: usize,
) -> crate::Result<BTreeMap<Triple, Q>> {
    let mut out = BTreeMap::new();
    for i in 0..=n {
        for u in enumerate_packed_words(i) {
            for v in enumerate_packed_words(n - i) {
                for (w, c) in alg.mul(&alg.key(u.clone()), &alg.key(v.clone()))?.iter() {
                    out.insert((u.clone(), v.clone(), w.clone()), c.clone());
                }
            }
        }
    }
    Ok(out)
}

/// Structure constants of the coproduct in degree `n`.
fn coproduct_constants(
    alg: &impl GradedBialgebra<Key = PackedWord>,
    n: usize,
) -> crate::Result<BTreeMap<Triple, Q>> {
    let mut out = BTreeMap::new();
    for w in enumerate_packed_words(n) {
        for ((u, v), c) in alg.comul(&alg.key(w.clone()))?.iter() {
            out.insert((u.clone(), v.clone(), w.clone()), c.clone());
        }
    }
    Ok(out)
}

/// The product of `prod` in degree `n` is the transpose of the coproduct of
/// `coprod`, both keyed by packed words.
pub fn adjoint(
    prod: &impl GradedBialgebra<Key = PackedWord>,
    coprod: &impl GradedBialgebra<Key = PackedWord>,
    n: usize,
) -> Outcome {
    let p = product_constants(prod, n)?;
    let c = coproduct_constants(coprod, n)?;
    let keys: BTreeSet<&Triple> = p.keys().chain(c.keys()).collect();
    for k in keys {
        let zero = Q::default();
        let (a, b) = (p.get(k).unwrap_or(&zero), c.get(k).unwrap_or(&zero));
        ensure(a == b, || {
            let (u, v, w) = k;
            format!(
                "<{}{u} {}{v}, {w}> = {a} but <{u}⊗{v}, Δ {}{w}> = {b}",
                prod.basis(),
                prod.basis(),
                coprod.basis()
            )
        })?;
    }
    Ok(())
}

/// An internal product on single keys of one degree, tabulated by index.
struct ProductTable<K> {
    keys: Vec<K>,
    table: Vec<usize>,
    basis: crate::Basis,
}

impl<K: BasisKey> ProductTable<K> {
    fn new(
        keys: Vec<K>,
        product: impl Fn(&Element<K>, &Element<K>) -> Element<K>,
        basis: crate::Basis,
    ) -> Result<Self, String> {
        let index: BTreeMap<&K, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut table = Vec::with_capacity(keys.len() * keys.len());
        for a in &keys {
            for b in &keys {
                let p = product(
                    &Element::from_key(basis, a.clone()),
                    &Element::from_key(basis, b.clone()),
                );
                let single = match (p.len(), p.iter().next()) {
                    (1, Some((k, c))) if *c == crate::freemod::q(1) => index.get(k).copied(),
                    _ => None,
                };
                table.push(single.ok_or_else(|| {
                    format!(
                        "{} * {} = {p} is not a basis element of the same degree",
                        Element::from_key(basis, a.clone()),
                        Element::from_key(basis, b.clone())
                    )
                })?);
            }
        }
        Ok(ProductTable { keys, table, basis })
    }

    fn show(&self, k: &K) -> String {
        Element::from_key(self.basis, k.clone()).to_string()
    }

    fn at(&self, i: usize, j: usize) -> usize {
        self.table[i * self.keys.len() + j]
    }

    fn check(&self, identity: &K) -> Outcome {
        let n = self.keys.len();
        let e = self
            .keys
            .iter()
            .position(|k| k == identity)
            .ok_or_else(|| format!("{} is not a key", self.show(identity)))?;
        for i in 0..n {
            ensure(self.at(e, i) == i && self.at(i, e) == i, || {
                format!("{} is not a unit for {}", self.show(identity), self.show(&self.keys[i]))
            })?;
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.at(i, j);
                for k in 0..n {
                    if self.at(ij, k) != self.at(i, self.at(j, k)) {
                        let (a, b, c) = (
                            self.show(&self.keys[i]),
                            self.show(&self.keys[j]),
                            self.show(&self.keys[k]),
                        );
                        return Err(format!("({a} * {b}) * {c} != {a} * ({b} * {c})").into());
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn dual_internal_product(n: usize) -> Outcome {
    ProductTable::new(enumerate_packed_words(n), iprod_dual, crate::Basis::F)?
        .check(&PackedWord::ones(n))
}

pub fn tree_internal_product(n: usize) -> Outcome {
    ProductTable::new(Trees.keys(n), td::iprod_s, crate::Basis::S)?
        .check(&TreeKey::of_word(PackedWord::ones(n).letters()))
}

pub fn sign_internal_product(n: usize) -> Outcome {
    ProductTable::new(SignClasses.keys(n), tc::iprod_s, crate::Basis::S)?
        .check(&SegmentedComposition::all_commas(n))
}

/// The internal product of the dual read on ordered set partitions: the
/// nonempty intersections of blocks, ordered by the pair of block indices.
pub fn block_intersection(u: &PackedWord, v: &PackedWord) -> PackedWord {
    let (a, b) = (to_set_partition(u), to_set_partition(v));
    let blocks = a
        .blocks()
        .iter()
        .flat_map(|s| b.blocks().iter().map(move |t| s & t))
        .filter(|s| !s.is_empty())
        .collect();
    OrderedSetPartition::new(blocks)
        .expect("intersections of two set partitions of one set")
        .to_packed_word()
}

pub fn block_intersection_check(n: usize) -> Outcome {
    let words = enumerate_packed_words(n);
    for u in &words {
        for v in &words {
            let got = iprod_dual(&DualF.key(u.clone()), &DualF.key(v.clone()));
            ensure_eq(
                format!("{u} * {v}"),
                &got,
                &DualF.key(block_intersection(u, v)),
            )?;
        }
    }
    Ok(())
}

pub fn suite(cfg: &Config) -> Vec<CheckResult> {
    let degrees = || 0..=cfg.max_degree;
    vec![
        run_cases(SUITE, "M product adjoint to F coproduct", degrees(), |&n| {
            adjoint(&Wqsym, &DualF, n)
        }),
        run_cases(SUITE, "F product adjoint to M coproduct", degrees(), |&n| {
            adjoint(&DualF, &Wqsym, n)
        }),
        run_cases(SUITE, "Phi product adjoint to R coproduct", degrees(), |&n| {
            adjoint(&PhiBasis, &Ribbon, n)
        }),
        run_cases(SUITE, "R product adjoint to Phi coproduct", degrees(), |&n| {
            adjoint(&Ribbon, &PhiBasis, n)
        }),
        run_cases(SUITE, "dual internal product: associative, unit 1^n", degrees(), |&n| {
            dual_internal_product(n)
        }),
        run_cases(SUITE, "TD internal product: associative, unit T(1^n)", degrees(), |&n| {
            tree_internal_product(n)
        }),
        run_cases(SUITE, "TC internal product: associative, unit (1,...,1)", degrees(), |&n| {
            sign_internal_product(n)
        }),
        run_cases(SUITE, "dual internal product = block intersections", degrees(), |&n| {
            block_intersection_check(n)
        }),
    ]
}
