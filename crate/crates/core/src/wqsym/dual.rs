//! The graded dual of `WQSym`: the basis `F` dual to `M`, realized on
//! maximally unpacked parking functions, and the basis `R` dual to `Phi`.

use crate::combinat::{
    biword_pack, from_seg_perm, max_unpack, pack, parkize, shuffle, subsets, to_seg_perm, Letter,
    PackedWord, SegmentedPermutation,
};
use crate::freemod::{Basis, Element, GradedBialgebra, Tensor, Q};
use num_traits::One;

/// The dual algebra in the basis `F`, keyed by packed words.
///
/// The product shuffles the maximal unpackings with the second shifted by
/// the length of the first; the coproduct deconcatenates the maximal
/// unpacking and parkizes both halves.
#[derive(Clone, Copy, Debug, Default)]
pub struct DualF;

impl GradedBialgebra for DualF {
    type Key = PackedWord;

    fn basis(&self) -> Basis {
        Basis::F
    }

    fn mul_keys(&self, a: &PackedWord, b: &PackedWord) -> Element<PackedWord> {
        let shift = a.len() as Letter;
        let right: Vec<Letter> = max_unpack(b).letters().iter().map(|&x| x + shift).collect();
        Element::from_keys(
            Basis::F,
            shuffle(max_unpack(a).letters(), &right)
                .iter()
                .map(|w| pack(w.letters())),
        )
    }

    fn comul_key(&self, a: &PackedWord) -> Tensor<PackedWord> {
        let b = max_unpack(a);
        let letters = b.letters();
        Element::from_keys(
            Basis::F,
            (0..=letters.len()).map(|i| {
                (
                    parkize(&letters[..i]).pack(),
                    parkize(&letters[i..]).pack(),
                )
            }),
        )
    }
}

/// The dual algebra in the basis `R`, keyed by packed words through their
/// segmented permutations.
#[derive(Clone, Copy, Debug, Default)]
pub struct Ribbon;

impl GradedBialgebra for Ribbon {
    type Key = PackedWord;

    fn basis(&self) -> Basis {
        Basis::R
    }

    /// Sum over `σ = τ|ν`, and `σ = τν` when the result stays increasing
    /// inside blocks, with `Std(τ)`, `Std(ν)` the two factors.
    fn mul_keys(&self, a: &PackedWord, b: &PackedWord) -> Element<PackedWord> {
        let (s1, s2) = (to_seg_perm(a), to_seg_perm(b));
        let (n1, n2) = (s1.len(), s2.len());
        let n = (n1 + n2) as Letter;
        let mut out = Element::zero(Basis::R);
        for chosen in subsets(n, n1) {
            let rest: Vec<Letter> = (1..=n).filter(|x| chosen.binary_search(x).is_err()).collect();
            let mut letters: Vec<Letter> =
                s1.letters().iter().map(|&x| chosen[x as usize - 1]).collect();
            letters.extend(s2.letters().iter().map(|&x| rest[x as usize - 1]));
            for junction_bar in [true, false] {
                if !junction_bar && letters[n1 - 1] > letters[n1] {
                    continue;
                }
                let mut bars = s1.bar_after().to_vec();
                bars.push(junction_bar);
                bars.extend_from_slice(s2.bar_after());
                let sigma = SegmentedPermutation::from_parts_unchecked(letters.clone(), bars);
                out.add_term(from_seg_perm(&sigma), Q::one());
            }
        }
        out
    }

    /// Dual to the `Phi` product: all `(α, β)` with `σ` in the segmented
    /// shifted shuffle of `α` and `β`.
    fn comul_key(&self, a: &PackedWord) -> Tensor<PackedWord> {
        let sigma = to_seg_perm(a);
        let n = sigma.len();
        let mut out = Element::zero(Basis::R);
        for k in 0..=n as Letter {
            for (alpha, beta) in unshuffles(&sigma, k) {
                out.add_term((from_seg_perm(&alpha), from_seg_perm(&beta)), Q::one());
            }
        }
        out
    }
}

/// The pairs `(α, β)` with `|α| = k` whose segmented shifted shuffle
/// contains `sigma`.
fn unshuffles(sigma: &SegmentedPermutation, k: Letter) -> Vec<(SegmentedPermutation, SegmentedPermutation)> {
    let letters = sigma.letters();
    let bars = sigma.bar_after();
    let is_alpha: Vec<bool> = letters.iter().map(|&x| x <= k).collect();
    for p in 0..letters.len().saturating_sub(1) {
        match (is_alpha[p], is_alpha[p + 1]) {
            (true, false) if bars[p] => return Vec::new(),
            (false, true) if !bars[p] => return Vec::new(),
            _ => {}
        }
    }
    // Gaps of each side, with the bar forced by an adjacency in `sigma` or
    // left free.
    let side = |alpha: bool| -> (Vec<Letter>, Vec<Option<bool>>) {
        let pos: Vec<usize> = (0..letters.len()).filter(|&p| is_alpha[p] == alpha).collect();
        let word: Vec<Letter> = pos
            .iter()
            .map(|&p| if alpha { letters[p] } else { letters[p] - k })
            .collect();
        let gaps = pos
            .windows(2)
            .map(|w| (w[1] == w[0] + 1).then(|| bars[w[0]]))
            .collect();
        (word, gaps)
    };
    let choices = |word: &[Letter], gaps: &[Option<bool>]| -> Vec<SegmentedPermutation> {
        let free: Vec<usize> = (0..gaps.len()).filter(|&i| gaps[i].is_none()).collect();
        let mut out = Vec::new();
        for mask in 0u64..1 << free.len() {
            let mut b: Vec<bool> = gaps.iter().map(|g| g.unwrap_or(false)).collect();
            for (j, &i) in free.iter().enumerate() {
                b[i] = mask >> j & 1 == 1;
            }
            if (0..b.len()).all(|i| b[i] || word[i] < word[i + 1]) {
                out.push(SegmentedPermutation::from_parts_unchecked(word.to_vec(), b));
            }
        }
        out
    };
    let (wa, ga) = side(true);
    let (wb, gb) = side(false);
    let left = choices(&wa, &ga);
    let right = choices(&wb, &gb);
    let mut out = Vec::with_capacity(left.len() * right.len());
    for x in &left {
        for y in &right {
            out.push((x.clone(), y.clone()));
        }
    }
    out
}

/// Words whose segmented permutation is that of `u` with some removable
/// bars deleted, with the number of bars deleted.
fn bar_coarsenings(u: &PackedWord) -> Vec<(PackedWord, usize)> {
    let sp = to_seg_perm(u);
    let (letters, bars) = (sp.letters(), sp.bar_after());
    let removable: Vec<usize> = (0..bars.len())
        .filter(|&i| bars[i] && letters[i] < letters[i + 1])
        .collect();
    (0u64..1 << removable.len())
        .map(|mask| {
            let mut b = bars.to_vec();
            for (j, &i) in removable.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    b[i] = false;
                }
            }
            let sigma = SegmentedPermutation::from_parts_unchecked(letters.to_vec(), b);
            (from_seg_perm(&sigma), mask.count_ones() as usize)
        })
        .collect()
}

/// `F_v = Σ R_σ` over the `σ` from which `v` is obtained by inserting bars.
pub fn f_to_r(x: &Element<PackedWord>) -> Element<PackedWord> {
    x.linear_extend(Basis::R, |v| {
        Element::from_keys(Basis::R, bar_coarsenings(v).into_iter().map(|(w, _)| w))
    })
}

/// `R_σ = Σ (-1)^k F_v` over the `v` obtained from `σ` by deleting `k` bars.
pub fn r_to_f(x: &Element<PackedWord>) -> Element<PackedWord> {
    x.linear_extend(Basis::F, |sigma| {
        Element::from_terms(
            Basis::F,
            bar_coarsenings(sigma)
                .into_iter()
                .map(|(w, k)| (w, if k % 2 == 0 { Q::one() } else { -Q::one() })),
        )
    })
}

/// The internal product on the dual: `M*_u * M*_v = M*_{biword_pack(u, v)}`
/// in equal degrees, zero across degrees.
pub fn iprod_dual(x: &Element<PackedWord>, y: &Element<PackedWord>) -> Element<PackedWord> {
    x.bilinear_extend(y, x.basis(), |u, v| match biword_pack(u, v) {
        Ok(w) => Element::from_key(x.basis(), w),
        Err(_) => Element::zero(x.basis()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_packed_words;
    use crate::freemod::pairing;

    fn pw(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    fn f(keys: &[&str]) -> Element<PackedWord> {
        Element::from_keys(Basis::F, keys.iter().map(|s| pw(s)))
    }

    fn sp_key(s: &str) -> PackedWord {
        from_seg_perm(&s.parse().unwrap())
    }

    #[test]
    fn f_product_example() {
        // F_113 F_11: keys are the packings of the shuffles of 113 and 44.
        let got = DualF.mul(&f(&["112"]), &f(&["11"])).unwrap();
        let expected = f(&[
            "11233", "11323", "11332", "13123", "13132", "13312", "31123", "31132", "31312",
            "33112",
        ]);
        assert_eq!(got, expected);
        assert_eq!(got.len(), 10);
    }

    #[test]
    fn f_coproduct_example() {
        // Terms are given on parking functions; keys are their packings.
        let key = pack(&[5, 3, 1, 6, 1, 3]);
        assert_eq!(max_unpack(&key).letters(), &[5, 3, 1, 6, 1, 3]);
        let got = DualF.comul(&Element::from_key(Basis::F, key.clone())).unwrap();
        let pk = |s: &str| pack(&s.chars().map(|c| c.to_digit(10).unwrap()).collect::<Vec<_>>());
        let pairs = [
            ("", "531613"),
            ("1", "31513"),
            ("21", "1413"),
            ("321", "312"),
            ("3214", "12"),
            ("43151", "1"),
            ("531613", ""),
        ];
        let expected = Element::from_keys(Basis::F, pairs.iter().map(|(a, b)| (pk(a), pk(b))));
        assert_eq!(got, expected);
        assert_eq!(
            DualF.comul(&f(&["1"])).unwrap(),
            Element::from_keys(Basis::F, [(pw(""), pw("1")), (pw("1"), pw(""))])
        );
    }

    #[test]
    fn r_product_example() {
        let r = |keys: &[&str]| Element::from_keys(Basis::R, keys.iter().map(|s| pw(s)));
        assert_eq!(
            Ribbon.mul(&r(&["21"]), &r(&["1"])).unwrap(),
            r(&["212", "221", "213", "231", "321"])
        );
    }

    #[test]
    fn r_coproduct_small() {
        let key = sp_key("2|13");
        let got = Ribbon.comul(&Element::from_key(Basis::R, key.clone())).unwrap();
        let pairs = [
            (pw(""), key.clone()),
            (sp_key("1"), sp_key("12")),
            (sp_key("1"), sp_key("1|2")),
            (sp_key("2|1"), sp_key("1")),
            (key, pw("")),
        ];
        assert_eq!(got, Element::from_keys(Basis::R, pairs));
    }

    #[test]
    fn r_coproduct_is_dual_to_phi_product() {
        use crate::wqsym::PhiBasis;
        for n in 0..=4 {
            for c in enumerate_packed_words(n) {
                let delta = Ribbon.comul(&Element::from_key(Basis::R, c.clone())).unwrap();
                for i in 0..=n {
                    for a in enumerate_packed_words(i) {
                        for b in enumerate_packed_words(n - i) {
                            let prod = PhiBasis
                                .mul(&PhiBasis.key(a.clone()), &PhiBasis.key(b.clone()))
                                .unwrap();
                            let lhs = prod.coefficient(&c);
                            let rhs = delta.coefficient(&(a.clone(), b.clone()));
                            assert_eq!(lhs, rhs, "{a} {b} {c}");
                        }
                    }
                }
            }
        }
        let _ = pairing::<PackedWord>;
    }

    #[test]
    fn f_and_r_are_dual_to_m_and_phi() {
        use crate::wqsym::{m_to_phi, phi_to_m};
        for n in 0..=4 {
            let words = enumerate_packed_words(n);
            for v in &words {
                let fv = Element::from_key(Basis::F, v.clone());
                assert_eq!(r_to_f(&f_to_r(&fv)), fv);
                let rv = fv.clone().with_basis(Basis::R);
                assert_eq!(f_to_r(&r_to_f(&rv)), rv);
                // <Phi_σ, F_v> read in M and in R agree.
                for sigma in &words {
                    let phi = Element::from_key(Basis::Phi, sigma.clone());
                    assert_eq!(
                        phi_to_m(&phi).coefficient(v),
                        f_to_r(&fv).coefficient(sigma),
                        "{sigma} {v}"
                    );
                    let m = Element::from_key(Basis::M, v.clone());
                    assert_eq!(
                        m_to_phi(&m).unwrap().coefficient(sigma),
                        r_to_f(&Element::from_key(Basis::R, sigma.clone())).coefficient(v)
                    );
                }
            }
        }
    }

    #[test]
    fn internal_product() {
        let x = iprod_dual(&f(&["212"]), &f(&["122"]));
        assert_eq!(x, f(&["213"]));
        assert_eq!(iprod_dual(&f(&["221"]), &f(&["321"])), f(&["321"]));
        let one = f(&["111"]);
        assert_eq!(iprod_dual(&one, &f(&["213"])), f(&["213"]));
        assert!(iprod_dual(&f(&["1"]), &f(&["12"])).is_zero());
    }
}
