//! The bases `SW`, `EW` (sums over lower and upper sets of the
//! pseudo-permutohedron) and `Phi` (sums over bar insertions).

use super::Wqsym;
use crate::combinat::{
    from_seg_perm, interleavings, merge_by_mask, to_seg_perm, Letter, PackedWord,
    SegmentedPermutation,
};
use crate::error::Result;
use crate::freemod::{unitriangular_invert, Basis, Element, GradedBialgebra, Tensor};
use crate::order::{linear_extension_cmp, lower_set, upper_set};

/// `SW_u = Σ_{v ≼ u} M_v`.
pub fn sw_to_m(x: &Element<PackedWord>) -> Element<PackedWord> {
    x.linear_extend(Basis::M, |u| Element::from_keys(Basis::M, lower_set(u)))
}

/// `EW_u = Σ_{u ≼ v} M_v`.
pub fn ew_to_m(x: &Element<PackedWord>) -> Element<PackedWord> {
    x.linear_extend(Basis::M, |u| Element::from_keys(Basis::M, upper_set(u)))
}

pub fn m_to_sw(x: &Element<PackedWord>) -> Result<Element<PackedWord>> {
    unitriangular_invert(
        x,
        |u| Element::from_keys(Basis::M, lower_set(u)),
        linear_extension_cmp,
        Basis::SW,
    )
}

pub fn m_to_ew(x: &Element<PackedWord>) -> Result<Element<PackedWord>> {
    unitriangular_invert(
        x,
        |u| Element::from_keys(Basis::M, upper_set(u)),
        |a, b| linear_extension_cmp(b, a),
        Basis::EW,
    )
}

/// Words whose segmented permutation refines that of `u` by extra bars.
fn bar_refinements(u: &PackedWord) -> Vec<PackedWord> {
    let sp = to_seg_perm(u);
    let free: Vec<usize> = (0..sp.bar_after().len())
        .filter(|&i| !sp.bar_after()[i])
        .collect();
    (0u64..1 << free.len())
        .map(|mask| {
            let mut bars = sp.bar_after().to_vec();
            for (b, &i) in free.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    bars[i] = true;
                }
            }
            from_seg_perm(&SegmentedPermutation::from_parts_unchecked(
                sp.letters().to_vec(),
                bars,
            ))
        })
        .collect()
}

/// `Phi_σ = Σ M_σ'` over the `σ'` obtained from `σ` by inserting bars.
pub fn phi_to_m(x: &Element<PackedWord>) -> Element<PackedWord> {
    x.linear_extend(Basis::M, |u| Element::from_keys(Basis::M, bar_refinements(u)))
}

pub fn m_to_phi(x: &Element<PackedWord>) -> Result<Element<PackedWord>> {
    // Fewer blocks sit higher.
    unitriangular_invert(
        x,
        |u| Element::from_keys(Basis::M, bar_refinements(u)),
        |a, b| b.max_letter().cmp(&a.max_letter()).then_with(|| a.cmp(b)),
        Basis::Phi,
    )
}

/// Shifted shuffle of segmented permutations: the letters of `beta` are
/// raised by `|alpha|`, and a bar separates consecutive letters that were
/// separated by a bar in their common word, or a letter of `beta` followed
/// by a letter of `alpha`.
pub fn seg_shifted_shuffle(
    alpha: &SegmentedPermutation,
    beta: &SegmentedPermutation,
) -> Vec<SegmentedPermutation> {
    let shift = alpha.len() as Letter;
    let b_letters: Vec<Letter> = beta.letters().iter().map(|&x| x + shift).collect();
    let mut out: Vec<SegmentedPermutation> = interleavings(alpha.len(), beta.len())
        .into_iter()
        .map(|mask| {
            let letters = merge_by_mask(&mask, alpha.letters(), &b_letters);
            let (mut i, mut j) = (0usize, 0usize);
            let mut bars = Vec::with_capacity(letters.len().saturating_sub(1));
            for p in 0..mask.len() {
                let from_alpha = mask[p];
                if from_alpha {
                    i += 1;
                } else {
                    j += 1;
                }
                if p + 1 < mask.len() {
                    let bar = match (from_alpha, mask[p + 1]) {
                        (true, true) => alpha.bar_after()[i - 1],
                        (false, false) => beta.bar_after()[j - 1],
                        (false, true) => true,
                        (true, false) => false,
                    };
                    bars.push(bar);
                }
            }
            SegmentedPermutation::from_parts_unchecked(letters, bars)
        })
        .collect();
    out.sort();
    out
}

/// Cuts of the segmented permutation of `u` after each position, both sides
/// standardized.
pub(crate) fn seg_cuts(u: &PackedWord) -> Vec<(PackedWord, PackedWord)> {
    let sp = to_seg_perm(u);
    let n = sp.len();
    (0..=n)
        .map(|k| {
            let left = SegmentedPermutation::standardized(
                &sp.letters()[..k],
                &sp.bar_after()[..k.saturating_sub(1)],
            );
            let right = SegmentedPermutation::standardized(
                &sp.letters()[k..],
                if k < n { &sp.bar_after()[k..] } else { &[] },
            );
            (from_seg_perm(&left), from_seg_perm(&right))
        })
        .collect()
}

/// Rewrites a tensor factorwise with `f`.
pub(crate) fn map_tensor(
    t: &Tensor<PackedWord>,
    basis: Basis,
    f: impl Fn(&Element<PackedWord>) -> Result<Element<PackedWord>>,
) -> Result<Tensor<PackedWord>> {
    t.try_linear_extend(basis, |(a, b)| {
        let fa = f(&Element::from_key(Basis::M, a.clone()))?;
        let fb = f(&Element::from_key(Basis::M, b.clone()))?;
        Ok(fa.tensor(&fb).with_basis(basis))
    })
}

/// `WQSym` in the basis `SW`, with `SW_u' SW_u'' = SW_{u'[max u''] u''}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SwBasis;

impl GradedBialgebra for SwBasis {
    type Key = PackedWord;

    fn basis(&self) -> Basis {
        Basis::SW
    }

    fn mul_keys(&self, a: &PackedWord, b: &PackedWord) -> Element<PackedWord> {
        let mut letters: Vec<Letter> = a.letters().iter().map(|&x| x + b.max_letter()).collect();
        letters.extend_from_slice(b.letters());
        Element::from_key(Basis::SW, PackedWord::from_vec_unchecked(letters))
    }

    fn comul_key(&self, a: &PackedWord) -> Tensor<PackedWord> {
        let m = sw_to_m(&Element::from_key(Basis::SW, a.clone()));
        let t = Wqsym.comul(&m).expect("M basis");
        map_tensor(&t, Basis::SW, m_to_sw).expect("triangular")
    }
}

/// `WQSym` in the basis `EW`, with `EW_u' EW_u'' = EW_{u' u''[max u']}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct EwBasis;

impl GradedBialgebra for EwBasis {
    type Key = PackedWord;

    fn basis(&self) -> Basis {
        Basis::EW
    }

    fn mul_keys(&self, a: &PackedWord, b: &PackedWord) -> Element<PackedWord> {
        let mut letters = a.letters().to_vec();
        letters.extend(b.letters().iter().map(|&x| x + a.max_letter()));
        Element::from_key(Basis::EW, PackedWord::from_vec_unchecked(letters))
    }

    fn comul_key(&self, a: &PackedWord) -> Tensor<PackedWord> {
        let m = ew_to_m(&Element::from_key(Basis::EW, a.clone()));
        let t = Wqsym.comul(&m).expect("M basis");
        map_tensor(&t, Basis::EW, m_to_ew).expect("triangular")
    }
}

/// `WQSym` in the basis `Phi`; keys are packed words, shown as segmented
/// permutations.
#[derive(Clone, Copy, Debug, Default)]
pub struct PhiBasis;

impl GradedBialgebra for PhiBasis {
    type Key = PackedWord;

    fn basis(&self) -> Basis {
        Basis::Phi
    }

    fn mul_keys(&self, a: &PackedWord, b: &PackedWord) -> Element<PackedWord> {
        Element::from_keys(
            Basis::Phi,
            seg_shifted_shuffle(&to_seg_perm(a), &to_seg_perm(b))
                .iter()
                .map(from_seg_perm),
        )
    }

    fn comul_key(&self, a: &PackedWord) -> Tensor<PackedWord> {
        Element::from_keys(Basis::Phi, seg_cuts(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_packed_words;

    fn pw(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> SegmentedPermutation {
        s.parse().unwrap()
    }

    fn el(basis: Basis, keys: &[&str]) -> Element<PackedWord> {
        Element::from_keys(basis, keys.iter().map(|s| pw(s)))
    }

    fn phi(keys: &[&str]) -> Element<PackedWord> {
        Element::from_keys(Basis::Phi, keys.iter().map(|s| from_seg_perm(&sp(s))))
    }

    #[test]
    fn sw_ew_expansions() {
        assert_eq!(
            sw_to_m(&el(Basis::SW, &["212"])),
            el(Basis::M, &["212", "213", "112", "123"])
        );
        assert_eq!(
            ew_to_m(&el(Basis::EW, &["212"])),
            el(Basis::M, &["212", "312", "211", "321"])
        );
        assert_eq!(
            sw_to_m(&el(Basis::SW, &["1122"])),
            el(Basis::M, &["1122", "1123", "1233", "1234"])
        );
    }

    #[test]
    fn sw_ew_products() {
        let p = SwBasis
            .mul(&el(Basis::SW, &["1122"]), &el(Basis::SW, &["132"]))
            .unwrap();
        assert_eq!(p, el(Basis::SW, &["4455132"]));
        let q = EwBasis
            .mul(&el(Basis::EW, &["1122"]), &el(Basis::EW, &["132"]))
            .unwrap();
        assert_eq!(q, el(Basis::EW, &["1122354"]));
    }

    #[test]
    fn native_products_match_monomial_products() {
        for n1 in 1..=2 {
            for n2 in 1..=2 {
                for a in enumerate_packed_words(n1) {
                    for b in enumerate_packed_words(n2) {
                        let (x, y) = (el(Basis::SW, &[&a.to_string()]), el(Basis::SW, &[&b.to_string()]));
                        let native = sw_to_m(&SwBasis.mul(&x, &y).unwrap());
                        let via_m = Wqsym.mul(&sw_to_m(&x), &sw_to_m(&y)).unwrap();
                        assert_eq!(native, via_m, "SW {a} {b}");
                        let (x, y) = (x.with_basis(Basis::EW), y.with_basis(Basis::EW));
                        let native = ew_to_m(&EwBasis.mul(&x, &y).unwrap());
                        let via_m = Wqsym.mul(&ew_to_m(&x), &ew_to_m(&y)).unwrap();
                        assert_eq!(native, via_m, "EW {a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn conversions_round_trip() {
        for n in 0..=4 {
            for u in enumerate_packed_words(n) {
                let x = Element::from_key(Basis::M, u.clone());
                assert_eq!(sw_to_m(&m_to_sw(&x).unwrap()), x);
                assert_eq!(ew_to_m(&m_to_ew(&x).unwrap()), x);
                assert_eq!(phi_to_m(&m_to_phi(&x).unwrap()), x);
                let y = Element::from_key(Basis::Phi, u);
                assert_eq!(m_to_phi(&phi_to_m(&y)).unwrap(), y);
            }
        }
    }

    #[test]
    fn phi_expansion() {
        let expected = Element::from_keys(
            Basis::M,
            ["14|6|23|5", "14|6|2|3|5", "1|4|6|23|5", "1|4|6|2|3|5"]
                .iter()
                .map(|s| from_seg_perm(&sp(s))),
        );
        assert_eq!(phi_to_m(&phi(&["14|6|23|5"])), expected);
    }

    #[test]
    fn m_in_phi_is_alternating() {
        // M_σ = Σ (-1)^k Phi over bar insertions of k bars.
        let x = Element::from_key(Basis::M, from_seg_perm(&sp("123")));
        let got = m_to_phi(&x).unwrap();
        let mut expected = phi(&["123", "1|2|3"]);
        expected -= &phi(&["1|23", "12|3"]);
        assert_eq!(got, expected);
    }

    #[test]
    fn segmented_shuffle_examples() {
        let got: Vec<String> = seg_shifted_shuffle(&sp("2|1"), &sp("12"))
            .iter()
            .map(ToString::to_string)
            .collect();
        let mut expected = vec!["2|134", "23|14", "234|1", "3|2|14", "3|24|1", "34|2|1"];
        expected.sort_by_key(|s| sp(s));
        assert_eq!(got, expected);
        assert_eq!(
            PhiBasis.mul(&phi(&["1"]), &phi(&["13|2"])).unwrap(),
            phi(&["124|3", "2|14|3", "24|13", "24|3|1"])
        );
    }

    #[test]
    fn phi_coproduct_example() {
        let got = PhiBasis.comul(&phi(&["35|14|2"])).unwrap();
        let pairs = [
            ("", "35|14|2"),
            ("1", "4|13|2"),
            ("12", "13|2"),
            ("23|1", "2|1"),
            ("24|13", "1"),
            ("35|14|2", ""),
        ];
        let expected = Element::from_keys(
            Basis::Phi,
            pairs
                .iter()
                .map(|(a, b)| (from_seg_perm(&sp(a)), from_seg_perm(&sp(b)))),
        );
        assert_eq!(got, expected);
    }
}
