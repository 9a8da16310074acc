//! The free cubical trialgebra on one generator, realized inside `WQSym` as
//! the span of the sums `MC_I` of `M_u` over the words `u` with `SC(u) = I`.

use crate::combinat::{sc_of_word, Letter, PackedWord, SegmentedComposition, Sign};
use crate::error::{Error, Result};
use crate::freemod::{Basis, Element, GradedBialgebra, Tensor};
use crate::subalg::{
    collect_tensor, expand, internal_product, CanonicalEw, CanonicalSw, ClassSums, ClassTable,
    ClassTableCache, WordClasses,
};
use crate::wqsym::Wqsym;

static SC_TABLES: ClassTableCache<SegmentedComposition> = ClassTableCache::new();

/// Packed words grouped by their sign sequence.
#[derive(Clone, Copy, Debug, Default)]
pub struct SignClasses;

impl WordClasses for SignClasses {
    type Key = SegmentedComposition;

    fn sum_basis(&self) -> Basis {
        Basis::MC
    }

    fn class_of(&self, w: &[Letter]) -> SegmentedComposition {
        sc_of_word(w)
    }

    fn table(&self, n: usize) -> &'static ClassTable<SegmentedComposition> {
        SC_TABLES.get(n, sc_of_word)
    }

    fn canonical_word(&self, k: &SegmentedComposition) -> PackedWord {
        canonical_word(k)
    }

    fn second_canonical_word(&self, k: &SegmentedComposition) -> PackedWord {
        second_canonical_word(k)
    }
}

/// The greatest word with the given signs: the runs between `>` signs take
/// decreasing ranges of values, and inside a run `=` repeats the letter
/// while `<` increments it.
pub fn canonical_word(c: &SegmentedComposition) -> PackedWord {
    let n = c.degree();
    if n == 0 {
        return PackedWord::empty();
    }
    let signs = c.signs();
    // Letters relative to the start of their run, and run boundaries.
    let mut rel = vec![0 as Letter; n];
    let mut runs = vec![0usize];
    for (i, s) in signs.iter().enumerate() {
        match s {
            Sign::Lt => rel[i + 1] = rel[i] + 1,
            Sign::Eq => rel[i + 1] = rel[i],
            Sign::Gt => runs.push(i + 1),
        }
    }
    runs.push(n);
    let mut out = vec![0; n];
    let mut base: Letter = 1;
    for r in (0..runs.len() - 1).rev() {
        let (lo, hi) = (runs[r], runs[r + 1]);
        for i in lo..hi {
            out[i] = base + rel[i];
        }
        base += rel[hi - 1] + 1;
    }
    PackedWord::new(out).expect("runs fill consecutive ranges")
}

/// The least word with the given signs.
pub fn second_canonical_word(c: &SegmentedComposition) -> PackedWord {
    SignClasses.table(c.degree()).lowest[c].clone()
}

/// The segmented composition whose canonical word is `w`.
pub fn from_canonical_word(w: &PackedWord) -> Result<SegmentedComposition> {
    let c = sc_of_word(w.letters());
    if canonical_word(&c) != *w {
        return Err(Error::invalid_key(w.to_string(), "not a canonical word of a sign class"));
    }
    Ok(c)
}

/// The segmented composition whose second canonical word is `w`.
pub fn from_second_canonical_word(w: &PackedWord) -> Result<SegmentedComposition> {
    let c = sc_of_word(w.letters());
    if second_canonical_word(&c) != *w {
        return Err(Error::invalid_key(
            w.to_string(),
            "not a second canonical word of a sign class",
        ));
    }
    Ok(c)
}

/// `TC` in the basis `MC`, with the three-term product computed natively
/// and the coproduct through `WQSym`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Tc;

impl GradedBialgebra for Tc {
    type Key = SegmentedComposition;

    fn basis(&self) -> Basis {
        Basis::MC
    }

    fn mul_keys(&self, a: &SegmentedComposition, b: &SegmentedComposition) -> Element<SegmentedComposition> {
        Element::from_keys(Basis::MC, mul_split(a, b))
    }

    fn comul_key(&self, a: &SegmentedComposition) -> Tensor<SegmentedComposition> {
        let t = Wqsym.comul(&expand(SignClasses, &self.key(a.clone()))).expect("M basis");
        collect_tensor(SignClasses, &t).expect("sign classes are closed under the coproduct")
    }
}

/// The three terms `I ▷ J`, `I, J` and `I | J` of the product, which are the
/// three operations of the cubical trialgebra on basis elements.
pub fn mul_split(a: &SegmentedComposition, b: &SegmentedComposition) -> [SegmentedComposition; 3] {
    [a.glue(b), a.comma_join(b), a.bar_join(b)]
}

/// `TC` in `MC`, every operation through `WQSym`.
pub type TcSums = ClassSums<SignClasses>;
/// `TC` in the basis `SW` on canonical words.
pub type TcSw = CanonicalSw<SignClasses>;
/// `TC` in the basis `EW` on second canonical words.
pub type TcEw = CanonicalEw<SignClasses>;

/// Internal product on the dual basis `S` of `MC`.
pub fn iprod_s(
    x: &Element<SegmentedComposition>,
    y: &Element<SegmentedComposition>,
) -> Element<SegmentedComposition> {
    internal_product(SignClasses, x, y)
}

/// Number of segmented compositions of degree `n`, read off the classes.
pub fn dim(n: usize) -> usize {
    SignClasses.dim(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{avoids_all, enumerate_packed_words, enumerate_segmented_compositions};
    use crate::subalg::collect;
    use crate::td::{TreeKey, Trees};

    fn sc(s: &str) -> SegmentedComposition {
        s.parse().unwrap()
    }

    fn mc(keys: &[&str]) -> Element<SegmentedComposition> {
        Element::from_keys(Basis::MC, keys.iter().map(|s| sc(s)))
    }

    fn pw(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    /// Re-expresses an `MC` element in `MM` through `M`.
    fn in_mm(x: &Element<SegmentedComposition>) -> Element<TreeKey> {
        collect(Trees, &expand(SignClasses, x)).unwrap()
    }

    fn mm(words: &[&str]) -> Element<TreeKey> {
        Element::from_keys(Basis::MM, words.iter().map(|s| TreeKey::of_word(pw(s).letters())))
    }

    #[test]
    fn mc_in_mm() {
        assert_eq!(in_mm(&mc(&["1,2|1"])), mm(&["2231"]));
        assert_eq!(
            in_mm(&mc(&["1|3"])),
            mm(&["2123", "2134", "3123", "3124", "4123"])
        );
        assert_eq!(
            expand(SignClasses, &mc(&["1"])),
            Element::from_key(Basis::M, pw("1"))
        );
    }

    #[test]
    fn three_term_product() {
        assert_eq!(
            Tc.mul(&mc(&["1|2,1"]), &mc(&["3,1"])).unwrap(),
            mc(&["1|2,4,1", "1|2,1,3,1", "1|2,1|3,1"])
        );
        assert_eq!(Tc.mul(&mc(&["1"]), &mc(&["1"])).unwrap(), mc(&["2", "1,1", "1|1"]));
    }

    #[test]
    fn native_product_matches_wqsym() {
        for i in 1..=3 {
            for j in 1..=3 {
                for a in enumerate_segmented_compositions(i) {
                    for b in enumerate_segmented_compositions(j) {
                        let x = Tc.key(a.clone());
                        let y = Tc.key(b.clone());
                        let native = Tc.mul(&x, &y).unwrap();
                        let via = TcSums::default().mul(&x, &y).unwrap();
                        assert_eq!(native, via, "{a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_words() {
        let mut got: Vec<String> =
            SignClasses.keys(3).iter().map(|k| canonical_word(k).to_string()).collect();
        got.sort();
        let mut expected = vec!["111", "112", "211", "122", "221", "123", "231", "312", "321"];
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(canonical_word(&sc("2")).to_string(), "12");
        assert_eq!(canonical_word(&sc("1|1")).to_string(), "21");
        assert_eq!(canonical_word(&sc("1,1")).to_string(), "11");
        assert_eq!(canonical_word(&sc("1,2|1")).to_string(), "2231");
    }

    #[test]
    fn canonical_words_are_class_extremes_and_avoiders() {
        for n in 0..=5 {
            let t = SignClasses.table(n);
            for (k, hi) in &t.highest {
                assert_eq!(canonical_word(k), *hi);
            }
            let mut canon: Vec<PackedWord> = t.highest.values().cloned().collect();
            let mut second: Vec<PackedWord> = t.lowest.values().cloned().collect();
            canon.sort();
            second.sort();
            let words = enumerate_packed_words(n);
            let avoiders = |pats: &[&[Letter]]| -> Vec<PackedWord> {
                words.iter().filter(|w| avoids_all(w.letters(), pats)).cloned().collect()
            };
            assert_eq!(canon, avoiders(&[&[1, 2, 1], &[1, 3, 2], &[2, 1, 2], &[2, 1, 3]]));
            assert_eq!(second, avoiders(&[&[1, 2, 1], &[2, 3, 1], &[2, 1, 2], &[3, 1, 2]]));
        }
    }

    #[test]
    fn multiplicative_bases() {
        let sw = |w: &str| Element::from_key(Basis::SW, from_canonical_word(&pw(w)).unwrap());
        let ew = |w: &str| Element::from_key(Basis::EW, from_second_canonical_word(&pw(w)).unwrap());
        assert_eq!(TcSw::default().mul(&sw("12"), &sw("1")).unwrap(), sw("231"));
        assert_eq!(TcSw::default().mul(&sw("1"), &sw("1")).unwrap(), sw("21"));
        assert_eq!(TcEw::default().mul(&ew("11"), &ew("1")).unwrap(), ew("112"));
        assert!(from_canonical_word(&pw("121")).is_err());
    }

    #[test]
    fn internal_product_examples() {
        let s = |k: &str| Element::from_key(Basis::S, sc(k));
        assert_eq!(iprod_s(&s("2"), &s("1|1")), s("2"));
        for x in enumerate_segmented_compositions(3) {
            let sx = Element::from_key(Basis::S, x);
            assert_eq!(iprod_s(&s("1,1,1"), &sx), sx);
            assert_eq!(iprod_s(&sx, &s("1,1,1")), sx);
            assert_eq!(iprod_s(&s("3"), &sx), s("3"));
        }
    }

    #[test]
    fn dimensions() {
        for n in 1..=6 {
            assert_eq!(dim(n), 3usize.pow(n as u32 - 1));
        }
        assert_eq!(dim(0), 1);
    }
}
