//! The pseudo-permutohedron, product intervals, and the canonical words of
//! tree classes and sign classes.

use super::{cases, ensure, ensure_eq, run_cases, run_once, CheckResult, Config, Outcome};
use crate::combinat::{avoids_all, enumerate_packed_words, evaluation, Letter, PackedWord};
use crate::freemod::{BasisKey, GradedBialgebra};
use crate::order::{leq, permutohedron, successors, Poset};
use crate::subalg::{ew_word, sw_word, ClassSums, WordClasses};
use crate::tc::SignClasses;
use crate::td::Trees;
use crate::wqsym::Wqsym;
use std::cmp::Reverse;
use std::collections::BTreeSet;

const INTERVALS: &str = "intervals";
const PATTERNS: &str = "patterns";

fn words(list: &[&str]) -> Vec<PackedWord> {
    list.iter().map(|s| s.parse().expect("packed word")).collect()
}

fn show_words(ws: &[PackedWord]) -> String {
    let parts: Vec<String> = ws.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

/// The reflexive-transitive closure of the successor relation equals the
/// order by inversion tables on words of length `n`.
pub fn successor_closure(n: usize) -> Outcome {
    let all = enumerate_packed_words(n);
    for u in &all {
        let mut seen: BTreeSet<PackedWord> = BTreeSet::from([u.clone()]);
        let mut stack = vec![u.clone()];
        while let Some(x) = stack.pop() {
            for y in successors(&x) {
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        for v in &all {
            ensure_eq(
                format!("{u} ≼ {v} by successors vs inversion tables"),
                &seen.contains(v),
                &leq(u, v)?,
            )?;
        }
    }
    Ok(())
}

pub fn successors_example() -> Outcome {
    let got = successors(&"44253313".parse()?);
    let mut expected = words(&["33242212", "44243313", "55264313", "55264413", "54263313"]);
    expected.sort();
    ensure_eq("successors of 44253313", &show_words(&got), &show_words(&expected))
}

/// The support of `M_u M_v` is the interval `[u·v[max u], u[max v]·v]`,
/// every coefficient being 1.
pub fn product_interval(k: &[PackedWord]) -> Outcome {
    let (u, v) = (&k[0], &k[1]);
    let p = Wqsym.mul(&Wqsym.key(u.clone()), &Wqsym.key(v.clone()))?;
    let lo = ew_word(u, v);
    let hi = sw_word(u, v);
    let poset = permutohedron(u.len() + v.len())?;
    let expected = poset.interval(&lo, &hi)?;
    let support: Vec<PackedWord> = p.keys().cloned().collect();
    ensure(p.iter().all(|(_, c)| *c == crate::freemod::q(1)), || {
        format!("M_{u} M_{v} has a coefficient other than 1")
    })?;
    let mut expected_sorted = expected;
    expected_sorted.sort();
    ensure_eq(format!("support of M_{u} M_{v}"), &show_words(&support), &show_words(&expected_sorted))
}

/// The support of `MM_T' MM_T''` is the interval of trees between the class
/// of `w'·w''[max w']` and the class of `w'[max w'']·w''`.
pub fn tree_product_interval(k: &[crate::td::TreeKey]) -> Outcome {
    let (a, b) = (&k[0], &k[1]);
    let (w1, w2) = (a.canonical_word(), b.canonical_word());
    let td = ClassSums(Trees);
    let p = td.mul(&td.key(a.clone()), &td.key(b.clone()))?;
    let lo = Trees.class_of(ew_word(w1, w2).letters()).canonical_word().clone();
    let hi = sw_word(w1, w2);
    ensure(Trees.class_of(hi.letters()).canonical_word() == &hi, || {
        format!("{hi} is not a canonical word")
    })?;
    let n = a.degree() + b.degree();
    let poset = permutohedron(n)?;
    let mut expected: Vec<PackedWord> = Trees
        .keys(n)
        .iter()
        .map(|t| t.canonical_word().clone())
        .filter(|c| poset.leq(&lo, c).unwrap_or(false) && poset.leq(c, &hi).unwrap_or(false))
        .collect();
    expected.sort();
    let mut support: Vec<PackedWord> = p.keys().map(|t| t.canonical_word().clone()).collect();
    support.sort();
    ensure(p.iter().all(|(_, c)| *c == crate::freemod::q(1)), || {
        format!("MM_{w1} MM_{w2} has a coefficient other than 1")
    })?;
    ensure_eq(format!("support of MM_{w1} MM_{w2}"), &show_words(&support), &show_words(&expected))
}

/// The restriction of the order to the canonical words of `c` is a lattice.
pub fn canonical_lattice<C: WordClasses>(c: C, n: usize) -> Outcome {
    let canon: Vec<PackedWord> = c.keys(n).iter().map(|k| c.canonical_word(k)).collect();
    let p = Poset::new(canon)?;
    ensure(p.is_lattice(), || format!("canonical words of degree {n} do not form a lattice"))
}

/// Comparing canonical words orders classes as comparing any of their
/// elements does.
pub fn class_orders_coincide<C: WordClasses>(c: C, n: usize) -> Outcome {
    let poset = permutohedron(n)?;
    let keys = c.keys(n);
    for s in &keys {
        for t in &keys {
            let by_canonical = poset.leq(&c.canonical_word(s), &c.canonical_word(t))?;
            let mut by_pairs = false;
            'search: for w in c.class_words(s) {
                for w2 in c.class_words(t) {
                    if poset.leq(w, w2)? {
                        by_pairs = true;
                        break 'search;
                    }
                }
            }
            ensure_eq(
                format!(
                    "class order of {} and {}",
                    c.canonical_word(s),
                    c.canonical_word(t)
                ),
                &by_canonical,
                &by_pairs,
            )?;
        }
    }
    Ok(())
}

pub fn intervals_suite(cfg: &Config) -> Vec<CheckResult> {
    let n = cfg.max_degree;
    let tree_keys = |d: usize| Trees.keys(d);
    vec![
        run_cases(INTERVALS, "successor closure = inversion-table order", 0..=n, |&d| {
            successor_closure(d)
        }),
        run_once(INTERVALS, "successors of 44253313", successors_example),
        run_cases(
            INTERVALS,
            "M product support is an interval",
            cases(&enumerate_packed_words, 2, &Config::new(n), "interval"),
            |k| product_interval(k),
        ),
        run_cases(
            INTERVALS,
            "MM product support is a tree interval",
            cases(&tree_keys, 2, &Config::new(n), "tree-interval"),
            |k| tree_product_interval(k),
        ),
        run_cases(INTERVALS, "tree canonical words form a lattice", 0..=n, |&d| {
            canonical_lattice(Trees, d)
        }),
        run_cases(INTERVALS, "sign-class canonical words form a lattice", 0..=n, |&d| {
            canonical_lattice(SignClasses, d)
        }),
        run_cases(INTERVALS, "tree class orders coincide", 0..=n, |&d| {
            class_orders_coincide(Trees, d)
        }),
        run_cases(INTERVALS, "sign-class orders coincide", 0..=n, |&d| {
            class_orders_coincide(SignClasses, d)
        }),
    ]
}

/// Each class contains its canonical and second canonical words, which are
/// above and below every word of the class.
pub fn class_extremes<C: WordClasses>(c: C, n: usize) -> Outcome {
    for k in c.keys(n) {
        let (hi, lo) = (c.canonical_word(&k), c.second_canonical_word(&k));
        let members = c.class_words(&k);
        ensure(members.contains(&hi) && members.contains(&lo), || {
            format!("{hi} or {lo} lies outside its class")
        })?;
        for w in members {
            ensure(leq(w, &hi)? && leq(&lo, w)?, || {
                format!("{w} is not between {lo} and {hi}")
            })?;
        }
    }
    Ok(())
}

/// The canonical (or second canonical) words of degree `n` are exactly the
/// packed words avoiding `patterns`.
pub fn extremes_are_avoiders<C: WordClasses>(
    c: C,
    n: usize,
    second: bool,
    patterns: &[&[Letter]],
) -> Outcome {
    let mut got: Vec<PackedWord> = c
        .keys(n)
        .iter()
        .map(|k| if second { c.second_canonical_word(k) } else { c.canonical_word(k) })
        .collect();
    got.sort();
    let expected: Vec<PackedWord> = enumerate_packed_words(n)
        .into_iter()
        .filter(|w| avoids_all(w.letters(), patterns))
        .collect();
    ensure_eq(
        format!("{} words of degree {n}", if second { "second canonical" } else { "canonical" }),
        &show_words(&got),
        &show_words(&expected),
    )
}

/// Canonical words of degree `n`, listed by number of distinct letters, then
/// by decreasing evaluation, then as words.
pub fn canonical_listing<C: WordClasses>(c: C, n: usize) -> Vec<PackedWord> {
    let mut ws: Vec<PackedWord> = c.keys(n).iter().map(|k| c.canonical_word(k)).collect();
    ws.sort_by_key(|w| (w.max_letter(), Reverse(evaluation(w.letters())), w.clone()));
    ws
}

pub fn patterns_suite(cfg: &Config) -> Vec<CheckResult> {
    let n = cfg.max_degree;
    let degrees = || 0..=n;
    let tree_hi: [&[Letter]; 2] = [&[1, 2, 1], &[1, 3, 2]];
    let tree_lo: [&[Letter]; 2] = [&[1, 2, 1], &[2, 3, 1]];
    let sc_hi: [&[Letter]; 4] = [&[1, 2, 1], &[1, 3, 2], &[2, 1, 2], &[2, 1, 3]];
    let sc_lo: [&[Letter]; 4] = [&[1, 2, 1], &[2, 3, 1], &[2, 1, 2], &[3, 1, 2]];
    vec![
        run_cases(PATTERNS, "tree classes: canonical words are extremes", degrees(), |&d| {
            class_extremes(Trees, d)
        }),
        run_cases(PATTERNS, "tree canonical words avoid 121, 132", degrees(), |&d| {
            extremes_are_avoiders(Trees, d, false, &tree_hi)
        }),
        run_cases(PATTERNS, "tree second canonical words avoid 121, 231", degrees(), |&d| {
            extremes_are_avoiders(Trees, d, true, &tree_lo)
        }),
        run_cases(PATTERNS, "sign classes: canonical words are extremes", degrees(), |&d| {
            class_extremes(SignClasses, d)
        }),
        run_cases(
            PATTERNS,
            "sign-class canonical words avoid 121, 132, 212, 213",
            degrees(),
            |&d| extremes_are_avoiders(SignClasses, d, false, &sc_hi),
        ),
        run_cases(
            PATTERNS,
            "sign-class second canonical words avoid 121, 231, 212, 312",
            degrees(),
            |&d| extremes_are_avoiders(SignClasses, d, true, &sc_lo),
        ),
        run_once(PATTERNS, "degree-3 canonical words", || {
            ensure_eq(
                "trees",
                &show_words(&canonical_listing(Trees, 3)),
                &show_words(&words(&[
                    "111", "112", "211", "122", "212", "221", "123", "213", "231", "312", "321",
                ])),
            )?;
            ensure_eq(
                "sign classes",
                &show_words(&canonical_listing(SignClasses, 3)),
                &show_words(&words(&["111", "112", "211", "122", "221", "123", "231", "312", "321"])),
            )
        }),
    ]
}
