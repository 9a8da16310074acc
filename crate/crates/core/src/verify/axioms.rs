//! Bialgebra, tridendriform and bidendriform identities, and the antipode.

use super::{cases, ensure_eq, run_cases, CheckResult, Config, Outcome};
use crate::combinat::{enumerate_packed_words, enumerate_segmented_compositions, PackedWord};
use crate::error::Result;
use crate::freemod::{BasisKey, Element, GradedBialgebra, Tensor, Tensor3, Tridendriform};
use crate::subalg::WordClasses;
use crate::tc::{SignClasses, Tc, TcEw, TcSw};
use crate::td::{TdEw, TdSw, Trees, TD};
use crate::wqsym::{DualF, EwBasis, PhiBasis, Ribbon, SwBasis, Wqsym};

const SUITE: &str = "axioms";

type BinOp<'a, K> = dyn Fn(&Element<K>, &Element<K>) -> Result<Element<K>> + 'a;

/// `(f ⊗ id)(t)`.
pub fn apply_left<K: BasisKey>(
    t: &Tensor<K>,
    f: impl Fn(&K) -> Result<Tensor<K>>,
) -> Result<Tensor3<K>> {
    let mut out = Element::zero(t.basis());
    for ((a, b), c) in t.iter() {
        for ((a1, a2), d) in f(a)?.iter() {
            out.add_term((a1.clone(), a2.clone(), b.clone()), c * d);
        }
    }
    Ok(out)
}

/// `(id ⊗ f)(t)`.
pub fn apply_right<K: BasisKey>(
    t: &Tensor<K>,
    f: impl Fn(&K) -> Result<Tensor<K>>,
) -> Result<Tensor3<K>> {
    let mut out = Element::zero(t.basis());
    for ((a, b), c) in t.iter() {
        for ((b1, b2), d) in f(b)?.iter() {
            out.add_term((a.clone(), b1.clone(), b2.clone()), c * d);
        }
    }
    Ok(out)
}

/// `Σ f(x', x'')` over the terms `x' ⊗ x''` of `t`.
pub fn sweedler<K: BasisKey>(
    t: &Tensor<K>,
    mut f: impl FnMut(&Element<K>, &Element<K>) -> Result<Tensor<K>>,
) -> Result<Tensor<K>> {
    let basis = t.basis();
    let mut out = Element::zero(basis);
    for ((a, b), c) in t.iter() {
        let v = f(&Element::from_key(basis, a.clone()), &Element::from_key(basis, b.clone()))?;
        out.add_scaled(&v.with_basis(basis), c)?;
    }
    Ok(out)
}

pub fn associativity<A: GradedBialgebra>(alg: &A, k: &[A::Key]) -> Outcome {
    let (x, y, z) = (alg.key(k[0].clone()), alg.key(k[1].clone()), alg.key(k[2].clone()));
    let lhs = alg.mul(&alg.mul(&x, &y)?, &z)?;
    let rhs = alg.mul(&x, &alg.mul(&y, &z)?)?;
    ensure_eq(format!("({x})({y})({z})"), &lhs, &rhs)
}

pub fn coassociativity<A: GradedBialgebra>(alg: &A, k: &A::Key) -> Outcome {
    let x = alg.key(k.clone());
    let d = alg.comul(&x)?;
    let lhs = apply_left(&d, |a| alg.comul(&alg.key(a.clone())))?;
    let rhs = apply_right(&d, |b| alg.comul(&alg.key(b.clone())))?;
    ensure_eq(format!("coassociativity at {x}"), &lhs, &rhs)
}

/// `Δ(xy) = Δ(x)Δ(y)`.
pub fn compatibility<A: GradedBialgebra>(alg: &A, k: &[A::Key]) -> Outcome {
    let (x, y) = (alg.key(k[0].clone()), alg.key(k[1].clone()));
    let lhs = alg.comul(&alg.mul(&x, &y)?)?;
    let rhs = alg.tensor_mul(&alg.comul(&x)?, &alg.comul(&y)?)?;
    ensure_eq(format!("Δ(({x})({y}))"), &lhs, &rhs)
}

/// `m(S ⊗ id)Δ = m(id ⊗ S)Δ = ηε`.
pub fn antipode_identity<A: GradedBialgebra>(alg: &A, k: &A::Key) -> Outcome {
    let x = alg.key(k.clone());
    let d = alg.comul(&x)?;
    let s = |a: &A::Key| alg.antipode(&alg.key(a.clone())).expect("same basis");
    let id = |a: &A::Key| alg.key(a.clone());
    let expected = alg.one().scale(&alg.counit(&x));
    ensure_eq(format!("m(S⊗id)Δ at {x}"), &alg.mul_tensor_with(&d, s, id)?, &expected)?;
    ensure_eq(format!("m(id⊗S)Δ at {x}"), &alg.mul_tensor_with(&d, id, s)?, &expected)
}

/// The seven relations of a dendriform trialgebra.
pub fn tri_relations<A: Tridendriform>(alg: &A, k: &[A::Key]) -> Outcome {
    let (x, y, z) = (alg.key(k[0].clone()), alg.key(k[1].clone()), alg.key(k[2].clone()));
    let l = |a: &Element<A::Key>, b: &Element<A::Key>| alg.tri_left(a, b);
    let m = |a: &Element<A::Key>, b: &Element<A::Key>| alg.tri_mid(a, b);
    let r = |a: &Element<A::Key>, b: &Element<A::Key>| alg.tri_right(a, b);
    let p = |a: &Element<A::Key>, b: &Element<A::Key>| alg.mul(a, b);
    let at = format!("({x}, {y}, {z})");
    ensure_eq(format!("(x≺y)≺z = x≺(yz) at {at}"), &l(&l(&x, &y)?, &z)?, &l(&x, &p(&y, &z)?)?)?;
    ensure_eq(format!("(x≻y)≺z = x≻(y≺z) at {at}"), &l(&r(&x, &y)?, &z)?, &r(&x, &l(&y, &z)?)?)?;
    ensure_eq(format!("(xy)≻z = x≻(y≻z) at {at}"), &r(&p(&x, &y)?, &z)?, &r(&x, &r(&y, &z)?)?)?;
    ensure_eq(format!("(x≻y)∘z = x≻(y∘z) at {at}"), &m(&r(&x, &y)?, &z)?, &r(&x, &m(&y, &z)?)?)?;
    ensure_eq(format!("(x≺y)∘z = x∘(y≻z) at {at}"), &m(&l(&x, &y)?, &z)?, &m(&x, &r(&y, &z)?)?)?;
    ensure_eq(format!("(x∘y)≺z = x∘(y≺z) at {at}"), &l(&m(&x, &y)?, &z)?, &m(&x, &l(&y, &z)?)?)?;
    ensure_eq(format!("(x∘y)∘z = x∘(y∘z) at {at}"), &m(&m(&x, &y)?, &z)?, &m(&x, &m(&y, &z)?)?)
}

/// The three relations of a dendriform dialgebra for `≺` and `∘ + ≻`.
pub fn dend_relations<A: Tridendriform>(alg: &A, k: &[A::Key]) -> Outcome {
    let (x, y, z) = (alg.key(k[0].clone()), alg.key(k[1].clone()), alg.key(k[2].clone()));
    let l = |a: &Element<A::Key>, b: &Element<A::Key>| alg.dend_left(a, b);
    let r = |a: &Element<A::Key>, b: &Element<A::Key>| alg.dend_right(a, b);
    let p = |a: &Element<A::Key>, b: &Element<A::Key>| alg.mul(a, b);
    let at = format!("({x}, {y}, {z})");
    ensure_eq(format!("(a≺b)≺c = a≺(bc) at {at}"), &l(&l(&x, &y)?, &z)?, &l(&x, &p(&y, &z)?)?)?;
    ensure_eq(format!("(a≻b)≺c = a≻(b≺c) at {at}"), &l(&r(&x, &y)?, &z)?, &r(&x, &l(&y, &z)?)?)?;
    ensure_eq(format!("(ab)≻c = a≻(b≻c) at {at}"), &r(&p(&x, &y)?, &z)?, &r(&x, &r(&y, &z)?)?)
}

/// `x≺y + x∘y + x≻y = xy`.
pub fn product_splits<A: Tridendriform>(alg: &A, k: &[A::Key]) -> Outcome {
    let (x, y) = (alg.key(k[0].clone()), alg.key(k[1].clone()));
    let sum = &(&alg.tri_left(&x, &y)? + &alg.tri_mid(&x, &y)?) + &alg.tri_right(&x, &y)?;
    ensure_eq(format!("split of ({x})({y})"), &sum, &alg.mul(&x, &y)?)
}

/// `Δ≺ + Δ≻ = Δ̄`.
pub fn coproduct_splits<A: Tridendriform>(alg: &A, k: &A::Key) -> Outcome {
    let x = alg.key(k.clone());
    let sum = &alg.codend_left(&x)? + &alg.codend_right(&x)?;
    ensure_eq(format!("split of Δ({x})"), &sum, &alg.reduced_comul(&x)?)
}

/// The three relations of a codendriform coalgebra.
pub fn codend_relations<A: Tridendriform>(alg: &A, k: &A::Key) -> Outcome {
    let c = alg.key(k.clone());
    let dl = |a: &A::Key| alg.codend_left(&alg.key(a.clone()));
    let dr = |a: &A::Key| alg.codend_right(&alg.key(a.clone()));
    let db = |a: &A::Key| alg.reduced_comul(&alg.key(a.clone()));
    let (l, r) = (alg.codend_left(&c)?, alg.codend_right(&c)?);
    ensure_eq(format!("(Δ≺⊗id)Δ≺ = (id⊗Δ̄)Δ≺ at {c}"), &apply_left(&l, dl)?, &apply_right(&l, db)?)?;
    ensure_eq(format!("(Δ≻⊗id)Δ≺ = (id⊗Δ≺)Δ≻ at {c}"), &apply_left(&l, dr)?, &apply_right(&r, dl)?)?;
    ensure_eq(format!("(Δ̄⊗id)Δ≻ = (id⊗Δ≻)Δ≻ at {c}"), &apply_left(&r, db)?, &apply_right(&r, dr)?)
}

/// The four compatibility relations of a bidendriform bialgebra.
pub fn bidend_relations<A: Tridendriform>(alg: &A, k: &[A::Key]) -> Outcome {
    type E<K> = Element<K>;
    let (a, b) = (alg.key(k[0].clone()), alg.key(k[1].clone()));
    let lt = |x: &E<A::Key>, y: &E<A::Key>| alg.dend_left(x, y);
    let gt = |x: &E<A::Key>, y: &E<A::Key>| alg.dend_right(x, y);
    let mul = |x: &E<A::Key>, y: &E<A::Key>| alg.mul(x, y);
    let da = alg.reduced_comul(&a)?;
    let (bl, br) = (alg.codend_left(&b)?, alg.codend_right(&b)?);
    let at = format!("({a}, {b})");

    // Σ a'b'_± ⊗ op(a'', b''_±)
    let cross = |half: &Tensor<A::Key>, op: &BinOp<'_, A::Key>| {
        sweedler(&da, |a1, a2| {
            sweedler(half, |b1, b2| Ok(mul(a1, b1)?.tensor(&op(a2, b2)?)))
        })
    };

    let lhs1 = alg.codend_right(&gt(&a, &b)?)?;
    let rhs1 = &(&(&(&cross(&br, &gt)? + &sweedler(&da, |a1, a2| Ok(a1.tensor(&gt(a2, &b)?)))?)
        + &sweedler(&br, |b1, b2| Ok(b1.tensor(&gt(&a, b2)?)))?)
        + &sweedler(&br, |b1, b2| Ok(mul(&a, b1)?.tensor(b2)))?)
        + &a.tensor(&b);
    ensure_eq(format!("Δ≻(a≻b) at {at}"), &lhs1, &rhs1)?;

    let lhs2 = alg.codend_right(&lt(&a, &b)?)?;
    let rhs2 = &(&cross(&br, &lt)? + &sweedler(&da, |a1, a2| Ok(a1.tensor(&lt(a2, &b)?)))?)
        + &sweedler(&br, |b1, b2| Ok(b1.tensor(&lt(&a, b2)?)))?;
    ensure_eq(format!("Δ≻(a≺b) at {at}"), &lhs2, &rhs2)?;

    let lhs3 = alg.codend_left(&gt(&a, &b)?)?;
    let rhs3 = &(&cross(&bl, &gt)? + &sweedler(&bl, |b1, b2| Ok(mul(&a, b1)?.tensor(b2)))?)
        + &sweedler(&bl, |b1, b2| Ok(b1.tensor(&gt(&a, b2)?)))?;
    ensure_eq(format!("Δ≺(a≻b) at {at}"), &lhs3, &rhs3)?;

    let lhs4 = alg.codend_left(&lt(&a, &b)?)?;
    let rhs4 = &(&(&cross(&bl, &lt)? + &sweedler(&da, |a1, a2| Ok(mul(a1, &b)?.tensor(a2)))?)
        + &sweedler(&bl, |b1, b2| Ok(b1.tensor(&lt(&a, b2)?)))?)
        + &b.tensor(&a);
    ensure_eq(format!("Δ≺(a≺b) at {at}"), &lhs4, &rhs4)
}

/// Keys of each degree for an algebra family.
pub type Keys<K> = dyn Fn(usize) -> Vec<K>;

pub fn packed_keys(n: usize) -> Vec<PackedWord> {
    enumerate_packed_words(n)
}

/// Associativity, coassociativity and compatibility for one algebra.
pub fn bialgebra_checks<A: GradedBialgebra>(
    label: &str,
    alg: &A,
    keys: &Keys<A::Key>,
    cfg: &Config,
) -> Vec<CheckResult> {
    vec![
        run_cases(
            SUITE,
            format!("{label} associativity"),
            cases(keys, 3, cfg, &format!("{label}-assoc")),
            |k| associativity(alg, k),
        ),
        run_cases(
            SUITE,
            format!("{label} coassociativity"),
            cases(keys, 1, cfg, &format!("{label}-coassoc")),
            |k| coassociativity(alg, &k[0]),
        ),
        run_cases(
            SUITE,
            format!("{label} bialgebra compatibility"),
            cases(keys, 2, cfg, &format!("{label}-compat")),
            |k| compatibility(alg, k),
        ),
    ]
}

/// Tridendriform, dendriform, codendriform and bidendriform identities.
pub fn tridendriform_checks<A: Tridendriform>(
    label: &str,
    alg: &A,
    keys: &Keys<A::Key>,
    cfg: &Config,
) -> Vec<CheckResult> {
    let triples = cases(keys, 3, cfg, &format!("{label}-tri"));
    let pairs = cases(keys, 2, cfg, &format!("{label}-pairs"));
    let singles = cases(keys, 1, cfg, &format!("{label}-singles"));
    vec![
        run_cases(SUITE, format!("{label} tridendriform relations"), &triples, |k| {
            tri_relations(alg, k)
        }),
        run_cases(SUITE, format!("{label} dendriform relations"), &triples, |k| {
            dend_relations(alg, k)
        }),
        run_cases(SUITE, format!("{label} product splits"), &pairs, |k| product_splits(alg, k)),
        run_cases(SUITE, format!("{label} coproduct splits"), &singles, |k| {
            coproduct_splits(alg, &k[0])
        }),
        run_cases(SUITE, format!("{label} codendriform relations"), &singles, |k| {
            codend_relations(alg, &k[0])
        }),
        run_cases(SUITE, format!("{label} bidendriform relations"), &pairs, |k| {
            bidend_relations(alg, k)
        }),
    ]
}

fn tree_keys(n: usize) -> Vec<crate::td::TreeKey> {
    Trees.keys(n)
}

fn sc_keys(n: usize) -> Vec<crate::combinat::SegmentedComposition> {
    enumerate_segmented_compositions(n)
}

/// Bialgebra axioms for `WQSym`, its dual, `TD` and `TC`, and the
/// tridendriform structures of `WQSym` and `TD`.
pub fn suite(cfg: &Config) -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.extend(bialgebra_checks("WQSym M", &Wqsym, &packed_keys, cfg));
    out.extend(bialgebra_checks("WQSym* F", &DualF, &packed_keys, cfg));
    out.extend(bialgebra_checks("WQSym* R", &Ribbon, &packed_keys, cfg));
    out.extend(bialgebra_checks("WQSym Phi", &PhiBasis, &packed_keys, cfg));
    out.extend(bialgebra_checks("TD MM", &TD, &tree_keys, cfg));
    out.extend(bialgebra_checks("TC MC", &Tc, &sc_keys, cfg));
    out.extend(tridendriform_checks("WQSym M", &Wqsym, &packed_keys, cfg));
    out.extend(tridendriform_checks("TD MM", &TD, &tree_keys, cfg));
    out
}

fn antipode_check<A: GradedBialgebra>(label: &str, alg: &A, keys: &Keys<A::Key>, max: usize) -> CheckResult {
    let all = (0..=max).flat_map(keys);
    run_cases("antipode", label, all, |k| antipode_identity(alg, k))
}

/// `m(S⊗id)Δ = ηε` on every basis element of degree at most `max_degree`.
pub fn antipode_suite(cfg: &Config) -> Vec<CheckResult> {
    let n = cfg.max_degree;
    vec![
        antipode_check("WQSym M", &Wqsym, &packed_keys, n),
        antipode_check("WQSym SW", &SwBasis, &packed_keys, n),
        antipode_check("WQSym EW", &EwBasis, &packed_keys, n),
        antipode_check("WQSym Phi", &PhiBasis, &packed_keys, n),
        antipode_check("WQSym* F", &DualF, &packed_keys, n),
        antipode_check("WQSym* R", &Ribbon, &packed_keys, n),
        antipode_check("TD MM", &TD, &tree_keys, n),
        antipode_check("TD SW", &TdSw::default(), &tree_keys, n),
        antipode_check("TD EW", &TdEw::default(), &tree_keys, n),
        antipode_check("TC MC", &Tc, &sc_keys, n),
        antipode_check("TC SW", &TcSw::default(), &|d| SignClasses.keys(d), n),
        antipode_check("TC EW", &TcEw::default(), &|d| SignClasses.keys(d), n),
    ]
}
