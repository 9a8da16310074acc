//! Products and coproducts compared with independent computations.

use super::axioms::packed_keys;
use super::{cases, ensure, ensure_eq, run_cases, CheckResult, Config, Outcome};
use crate::combinat::{
    enumerate_packed_words, enumerate_segmented_compositions, packed_shifted_shuffle, PackedWord,
};
use crate::freemod::{Basis, Element, GradedBialgebra, Tensor};
use crate::subalg::{
    collect, collect_tensor, ew_to_sums, ew_word, expand, key_of_canonical,
    key_of_second_canonical, sums_to_ew, sums_to_sw, sw_to_sums, sw_word, ClassSums, WordClasses,
};
use crate::tc::{SignClasses, Tc, TcEw, TcSums, TcSw};
use crate::td::{TdEw, TdSw, Trees};
use crate::wqsym::{
    collect_polynomial, ew_to_m, m_to_ew, m_to_phi, m_to_sw, phi_to_m, poly_mul, realize, sw_to_m,
    EwBasis, PhiBasis, SwBasis, Wqsym,
};
use std::collections::BTreeMap;

const SUITE: &str = "oracles";

/// `M_u M_v` against the product of the polynomial realizations over the
/// alphabet `{1..max(u)+max(v)}`.
pub fn product_by_polynomials(k: &[PackedWord]) -> Outcome {
    let (u, v) = (&k[0], &k[1]);
    let n = u.max_letter() + v.max_letter();
    let p = poly_mul(&realize(&Wqsym.key(u.clone()), n), &realize(&Wqsym.key(v.clone()), n));
    let got = Wqsym.mul(&Wqsym.key(u.clone()), &Wqsym.key(v.clone()))?;
    ensure_eq(format!("M_{u} M_{v}"), &got, &collect_polynomial(&p, n)?)
}

/// Coproducts of all `M_w` of degree `n`, read off the packed shifted
/// shuffles of all pairs `(u, v)` with `|u| + |v| = n`.
pub fn coproducts_by_shuffles(n: usize) -> BTreeMap<PackedWord, Tensor<PackedWord>> {
    let mut out: BTreeMap<PackedWord, Tensor<PackedWord>> = BTreeMap::new();
    for i in 0..=n {
        let left = enumerate_packed_words(i);
        let right = enumerate_packed_words(n - i);
        for u in &left {
            for v in &right {
                for w in packed_shifted_shuffle(u, v) {
                    out.entry(w)
                        .or_insert_with(|| Element::zero(Basis::M))
                        .add_term((u.clone(), v.clone()), crate::freemod::q(1));
                }
            }
        }
    }
    out
}

pub fn coproduct_by_shuffles_check(max: usize) -> CheckResult {
    run_cases(SUITE, "WQSym coproduct = packed shifted shuffles", 0..=max, |&n| {
        let table = coproducts_by_shuffles(n);
        ensure_eq(
            format!("number of words of degree {n}"),
            &table.len(),
            &enumerate_packed_words(n).len(),
        )?;
        for (w, t) in &table {
            ensure_eq(format!("Δ M_{w}"), &Wqsym.comul(&Wqsym.key(w.clone()))?, t)?;
        }
        Ok(())
    })
}

/// A product computed in a basis against the same product through `M`.
fn via_m(
    alg: &impl GradedBialgebra<Key = PackedWord>,
    to_m: fn(&Element<PackedWord>) -> Element<PackedWord>,
    from_m: fn(&Element<PackedWord>) -> crate::Result<Element<PackedWord>>,
    k: &[PackedWord],
) -> Outcome {
    let (x, y) = (alg.key(k[0].clone()), alg.key(k[1].clone()));
    let native = alg.mul(&x, &y)?;
    let through = from_m(&Wqsym.mul(&to_m(&x), &to_m(&y))?)?;
    ensure_eq(format!("({x})({y})"), &native, &through)
}

/// Class-sum products and coproducts stay class-saturated, so the
/// subalgebra is closed.
fn closure<C: WordClasses>(c: C, label: &str, cfg: &Config) -> Vec<CheckResult> {
    let keys = |d: usize| c.keys(d);
    let sums = ClassSums(c);
    vec![
        run_cases(
            SUITE,
            format!("{label} closed under the product"),
            cases(&keys, 2, cfg, &format!("{label}-closure")),
            |k| {
                let p = Wqsym.mul(
                    &expand(c, &sums.key(k[0].clone())),
                    &expand(c, &sums.key(k[1].clone())),
                )?;
                collect(c, &p)?;
                Ok(())
            },
        ),
        run_cases(
            SUITE,
            format!("{label} closed under the coproduct"),
            (0..=cfg.max_degree).flat_map(keys),
            |k| {
                let t = Wqsym.comul(&expand(c, &sums.key(k.clone())))?;
                collect_tensor(c, &t)?;
                Ok(())
            },
        ),
    ]
}

/// Multiplicative bases on canonical words agree with the class sums.
fn canonical_bases<C: WordClasses>(
    c: C,
    label: &str,
    sw: &impl GradedBialgebra<Key = C::Key>,
    ew: &impl GradedBialgebra<Key = C::Key>,
    cfg: &Config,
) -> Vec<CheckResult> {
    let keys = |d: usize| c.keys(d);
    let sums = ClassSums(c);
    let pairs = cases(&keys, 2, cfg, &format!("{label}-canonical"));
    vec![
        run_cases(SUITE, format!("{label} SW product on canonical words"), &pairs, |k| {
            key_of_canonical(c, &sw_word(&c.canonical_word(&k[0]), &c.canonical_word(&k[1])))?;
            let (x, y) = (sw.key(k[0].clone()), sw.key(k[1].clone()));
            let through = sums.mul(&sw_to_sums(c, &x)?, &sw_to_sums(c, &y)?)?;
            ensure_eq(format!("({x})({y})"), &sw.mul(&x, &y)?, &sums_to_sw(c, &through)?)
        }),
        run_cases(SUITE, format!("{label} EW product on second canonical words"), &pairs, |k| {
            let w = ew_word(&c.second_canonical_word(&k[0]), &c.second_canonical_word(&k[1]));
            key_of_second_canonical(c, &w)?;
            let (x, y) = (ew.key(k[0].clone()), ew.key(k[1].clone()));
            let through = sums.mul(&ew_to_sums(c, &x)?, &ew_to_sums(c, &y)?)?;
            ensure_eq(format!("({x})({y})"), &ew.mul(&x, &y)?, &sums_to_ew(c, &through)?)
        }),
    ]
}

pub fn suite(cfg: &Config) -> Vec<CheckResult> {
    let pairs = cases(&packed_keys, 2, cfg, "m-poly");
    let mut out = vec![
        run_cases(SUITE, "M product = polynomial realization", &pairs, |k| {
            product_by_polynomials(k)
        }),
        coproduct_by_shuffles_check(cfg.max_degree + 1),
        run_cases(SUITE, "SW product through M", &pairs, |k| via_m(&SwBasis, sw_to_m, m_to_sw, k)),
        run_cases(SUITE, "EW product through M", &pairs, |k| via_m(&EwBasis, ew_to_m, m_to_ew, k)),
        run_cases(SUITE, "Phi product through M", &pairs, |k| {
            via_m(&PhiBasis, phi_to_m, m_to_phi, k)
        }),
        run_cases(
            SUITE,
            "TC three-term product = WQSym product",
            cases(&enumerate_segmented_compositions, 2, cfg, "tc-native"),
            |k| {
                let (x, y) = (Tc.key(k[0].clone()), Tc.key(k[1].clone()));
                let native = Tc.mul(&x, &y)?;
                ensure(native.len() == 3, || format!("({x})({y}) has {} terms", native.len()))?;
                ensure_eq(format!("({x})({y})"), &native, &TcSums::default().mul(&x, &y)?)
            },
        ),
    ];
    out.extend(closure(Trees, "TD", cfg));
    out.extend(closure(SignClasses, "TC", cfg));
    out.extend(canonical_bases(Trees, "TD", &TdSw::default(), &TdEw::default(), cfg));
    out.extend(canonical_bases(SignClasses, "TC", &TcSw::default(), &TcEw::default(), cfg));
    out
}
