//! Word quasi-symmetric functions on packed words.
//!
//! [`Wqsym`] is the monomial basis `M`; [`bases`] holds the bases `SW`,
//! `EW` and `Phi`; [`dual`] holds the graded dual with its bases `F` and `R`
//! and the internal product.

pub mod bases;
pub mod dual;

pub use bases::{
    ew_to_m, m_to_ew, m_to_phi, m_to_sw, phi_to_m, seg_shifted_shuffle, sw_to_m, EwBasis,
    PhiBasis, SwBasis,
};
pub use dual::{f_to_r, iprod_dual, r_to_f, DualF, Ribbon};

use crate::combinat::{
    convolution_split, evaluation, pack, restrict_letters, subsets, Letter, PackedWord, Word,
};
use crate::error::Result;
use crate::freemod::{
    collect_classes, q, Basis, Element, GradedBialgebra, Tensor, Tridendriform, Q,
};
use num_traits::One;
use std::cmp::Ordering;

/// `WQSym` in the monomial basis.
#[derive(Clone, Copy, Debug, Default)]
pub struct Wqsym;

impl GradedBialgebra for Wqsym {
    type Key = PackedWord;

    fn basis(&self) -> Basis {
        Basis::M
    }

    fn mul_keys(&self, a: &PackedWord, b: &PackedWord) -> Element<PackedWord> {
        Element::from_keys(Basis::M, convolution_split(a, b))
    }

    /// `Σ_k M[u restricted to 1..k] ⊗ M[pack(u restricted to k+1..)]`.
    fn comul_key(&self, u: &PackedWord) -> Tensor<PackedWord> {
        let m = u.max_letter();
        Element::from_keys(
            Basis::M,
            (0..=m).map(|k| {
                let left = restrict_letters(u, 1, k).pack();
                let right = restrict_letters(u, k + 1, m).pack();
                (left, right)
            }),
        )
    }
}

impl Tridendriform for Wqsym {
    /// Splits `w = u·v` by comparing `max(v)` with `max(u)`: smaller is `≺`,
    /// equal is `∘`, larger is `≻`.
    fn split_keys(&self, a: &PackedWord, b: &PackedWord) -> [Element<PackedWord>; 3] {
        let mut parts = [
            Element::zero(Basis::M),
            Element::zero(Basis::M),
            Element::zero(Basis::M),
        ];
        for w in convolution_split(a, b) {
            let (u, v) = w.letters().split_at(a.len());
            let part = match v.iter().max().cmp(&u.iter().max()) {
                Ordering::Less => 0,
                Ordering::Equal => 1,
                Ordering::Greater => 2,
            };
            parts[part].add_term(w, Q::one());
        }
        parts
    }

    /// `Δ≺` collects the reduced terms whose left factor holds the last
    /// letter of the word.
    fn half_comul_key(&self, u: &PackedWord) -> (Tensor<PackedWord>, Tensor<PackedWord>) {
        let m = u.max_letter();
        let last = *u.letters().last().expect("positive degree");
        let mut left = Element::zero(Basis::M);
        let mut right = Element::zero(Basis::M);
        for k in 1..m {
            let term = (
                restrict_letters(u, 1, k).pack(),
                restrict_letters(u, k + 1, m).pack(),
            );
            if last <= k {
                left.add_term(term, Q::one());
            } else {
                right.add_term(term, Q::one());
            }
        }
        (left, right)
    }
}

/// A noncommutative polynomial: a linear combination of words.
pub type Polynomial = Element<Word>;

/// All words over `{1..k}` that pack to `u`, in increasing order.
pub fn expand_polynomial(u: &PackedWord, k: Letter) -> Vec<Word> {
    let mut out: Vec<Word> = subsets(k, u.max_letter() as usize)
        .into_iter()
        .map(|s| {
            Word::new(u.letters().iter().map(|&a| s[a as usize - 1]).collect())
                .expect("positive letters")
        })
        .collect();
    out.sort();
    out
}

/// The realization of an `M`-element over the alphabet `{1..k}`.
pub fn realize(x: &Element<PackedWord>, k: Letter) -> Polynomial {
    x.linear_extend(Basis::M, |u| {
        Element::from_keys(Basis::M, expand_polynomial(u, k))
    })
}

/// Concatenation product of polynomials.
pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p.bilinear_extend(q, Basis::M, |a, b| {
        let mut w = a.letters().to_vec();
        w.extend_from_slice(b.letters());
        Element::from_key(Basis::M, Word::new(w).expect("positive letters"))
    })
}

/// Reads a polynomial over `{1..k}` back in the `M` basis. Fails unless the
/// coefficients are constant on the words packing to a common word, with
/// every such word present.
pub fn collect_polynomial(p: &Polynomial, k: Letter) -> Result<Element<PackedWord>> {
    collect_classes(
        p,
        Basis::M,
        |w| pack(w.letters()),
        |u| binomial(k as u64, u.max_letter() as u64) as usize,
    )
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The coproduct read off from shuffles: `M_w ⊗`-pairs `(u, v)` such that
/// `w` occurs in the shuffle of `u` with `v[max(u)]`.
pub fn comul_by_shuffle(w: &PackedWord) -> Tensor<PackedWord> {
    let n = w.len();
    let mut out = Element::zero(Basis::M);
    for i in 0..=n {
        for u in crate::combinat::enumerate_packed_words(i) {
            for v in crate::combinat::enumerate_packed_words(n - i) {
                let count = crate::combinat::packed_shifted_shuffle(&u, &v)
                    .iter()
                    .filter(|x| *x == w)
                    .count();
                if count > 0 {
                    out.add_term((u.clone(), v.clone()), q(count as i64));
                }
            }
        }
    }
    out
}

/// Commutative image of an `M`-element: `M_u` maps to the monomial
/// quasi-symmetric function of the evaluation of `u`.
pub fn abelianize(x: &Element<PackedWord>) -> Element<Vec<usize>> {
    x.linear_extend(Basis::M, |u| {
        Element::from_key(Basis::M, evaluation(u.letters()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::quasi_shuffle;

    fn pw(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    fn m(keys: &[&str]) -> Element<PackedWord> {
        Element::from_keys(Basis::M, keys.iter().map(|s| pw(s)))
    }

    fn t(pairs: &[(&str, &str)]) -> Tensor<PackedWord> {
        Element::from_keys(Basis::M, pairs.iter().map(|(a, b)| (pw(a), pw(b))))
    }

    #[test]
    fn product_example() {
        let p = Wqsym.mul(&m(&["11"]), &m(&["21"])).unwrap();
        assert_eq!(p, m(&["1121", "1132", "2221", "2231", "3321"]));
        assert_eq!(Wqsym.mul(&m(&["212"]), &Wqsym.one()).unwrap(), m(&["212"]));
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(
            Wqsym.comul(&m(&["32121"])).unwrap(),
            t(&[("", "32121"), ("11", "211"), ("2121", "1"), ("32121", "")])
        );
        assert_eq!(Wqsym.comul(&m(&["1"])).unwrap(), t(&[("", "1"), ("1", "")]));
        assert_eq!(Wqsym.comul(&m(&["11"])).unwrap(), t(&[("", "11"), ("11", "")]));
    }

    #[test]
    fn tri_splits() {
        let x = m(&["1"]);
        assert_eq!(Wqsym.tri_left(&x, &x).unwrap(), m(&["21"]));
        assert_eq!(Wqsym.tri_mid(&x, &x).unwrap(), m(&["11"]));
        assert_eq!(Wqsym.tri_right(&x, &x).unwrap(), m(&["12"]));
        assert_eq!(
            Wqsym.tri_left(&m(&["11"]), &m(&["21"])).unwrap(),
            m(&["3321"])
        );
        assert_eq!(
            Wqsym.tri_mid(&m(&["11"]), &m(&["21"])).unwrap(),
            m(&["2221"])
        );
        assert_eq!(
            Wqsym.tri_right(&m(&["11"]), &m(&["21"])).unwrap(),
            m(&["1121", "1132", "2231"])
        );
        assert_eq!(Wqsym.dend_right(&x, &x).unwrap(), m(&["11", "12"]));
        assert!(Wqsym.tri_left(&Wqsym.one(), &x).is_err());
    }

    #[test]
    fn half_coproducts() {
        assert_eq!(Wqsym.codend_left(&m(&["21"])).unwrap(), t(&[("1", "1")]));
        assert!(Wqsym.codend_right(&m(&["21"])).unwrap().is_zero());
        assert_eq!(Wqsym.codend_right(&m(&["12"])).unwrap(), t(&[("1", "1")]));
        assert!(Wqsym.codend_left(&m(&["12"])).unwrap().is_zero());
    }

    #[test]
    fn polynomial_realization() {
        let words: Vec<String> = expand_polynomial(&pw("13132"), 5)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(words.len(), 10);
        assert!(words.contains(&"13132".to_string()));
        assert!(words.contains(&"35354".to_string()));
        assert_eq!(expand_polynomial(&pw("1"), 4).len(), 4);
        assert_eq!(expand_polynomial(&pw("21"), 2), vec![Word::new(vec![2, 1]).unwrap()]);
    }

    #[test]
    fn collect_rejects_partial_orbits() {
        let mut p = realize(&m(&["12"]), 3);
        let first = p.keys().next().unwrap().clone();
        p.add_term(first, q(-1));
        assert!(collect_polynomial(&p, 3).is_err());
    }

    #[test]
    fn antipode_small() {
        assert_eq!(Wqsym.antipode(&m(&["1"])).unwrap(), m(&["1"]).scale(&q(-1)));
        assert_eq!(Wqsym.antipode(&m(&["12"])).unwrap(), m(&["11", "21"]));
        assert_eq!(Wqsym.antipode(&Wqsym.one()).unwrap(), Wqsym.one());
    }

    #[test]
    fn abelianization_is_multiplicative_on_example() {
        let lhs = abelianize(&Wqsym.mul(&m(&["11"]), &m(&["21"])).unwrap());
        let rhs = Element::from_keys(
            Basis::M,
            quasi_shuffle(&[2], &[1, 1])
                .into_iter()
                .map(|c| c.into_iter().map(|x| x as usize).collect::<Vec<_>>()),
        );
        assert_eq!(lhs, rhs);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn packed(max_len: usize) -> impl Strategy<Value = PackedWord> {
            prop::collection::vec(1u32..=4, 0..=max_len).prop_map(|w| pack(&w))
        }

        proptest! {
            #[test]
            fn realization_is_multiplicative(a in packed(3), b in packed(3)) {
                let k = a.max_letter() + b.max_letter();
                let lhs = poly_mul(&realize(&Wqsym.key(a.clone()), k), &realize(&Wqsym.key(b.clone()), k));
                let prod = Wqsym.mul(&Wqsym.key(a), &Wqsym.key(b)).unwrap();
                prop_assert_eq!(collect_polynomial(&lhs, k).unwrap(), prod);
            }

            #[test]
            fn comul_matches_shuffle_oracle(a in packed(5)) {
                prop_assert_eq!(Wqsym.comul(&Wqsym.key(a.clone())).unwrap(), comul_by_shuffle(&a));
            }

            #[test]
            fn tri_parts_sum_to_product(a in packed(3), b in packed(3)) {
                prop_assume!(!a.is_empty() && !b.is_empty());
                let (x, y) = (Wqsym.key(a), Wqsym.key(b));
                let sum = &(&Wqsym.tri_left(&x, &y).unwrap() + &Wqsym.tri_mid(&x, &y).unwrap())
                    + &Wqsym.tri_right(&x, &y).unwrap();
                prop_assert_eq!(sum, Wqsym.mul(&x, &y).unwrap());
            }
        }
    }
}
