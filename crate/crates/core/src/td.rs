//! The free dendriform trialgebra on one generator, realized inside `WQSym`
//! as the span of the sums `MM_T` of `M_u` over the words `u` of tree `T`.
//!
//! Trees are written by their canonical word (the greatest word of their
//! class); the `EW` basis is written by second canonical words.

use crate::combinat::{sylvester_classes, tree_of_word, Letter, PackedWord, PlaneTree};
use crate::error::{Error, Result};
use crate::freemod::{Basis, BasisKey, Echelon, Element, GradedBialgebra, Tridendriform};
use crate::subalg::{
    internal_product, CanonicalEw, CanonicalSw, ClassSums, ClassTable, ClassTableCache,
    TriCompatible, WordClasses,
};
use crate::wqsym::Wqsym;
use std::cmp::Ordering;

/// A plane tree together with its two canonical words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeKey {
    tree: PlaneTree,
    canonical: PackedWord,
    second: PackedWord,
}

impl TreeKey {
    pub fn new(tree: PlaneTree) -> Self {
        let canonical = tree.canonical_word();
        let second = tree.second_canonical_word();
        TreeKey {
            tree,
            canonical,
            second,
        }
    }

    pub fn of_word(w: &[Letter]) -> Self {
        TreeKey::new(tree_of_word(w))
    }

    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    pub fn canonical_word(&self) -> &PackedWord {
        &self.canonical
    }

    pub fn second_canonical_word(&self) -> &PackedWord {
        &self.second
    }
}

impl Ord for TreeKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical.cmp(&other.canonical)
    }
}

impl PartialOrd for TreeKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BasisKey for TreeKey {
    fn degree(&self) -> usize {
        self.canonical.len()
    }

    fn unit() -> Self {
        TreeKey::new(PlaneTree::leaf())
    }

    fn fmt_key(&self, basis: Basis) -> String {
        match basis {
            Basis::EW => self.second.to_string(),
            _ => self.canonical.to_string(),
        }
    }

    /// `MM` and `S` accept any word of the class; `SW` requires the
    /// canonical word and `EW` the second canonical word.
    fn parse_key(s: &str, basis: Basis) -> Result<Self> {
        let w: PackedWord = s.parse()?;
        let k = TreeKey::of_word(w.letters());
        match basis {
            Basis::MM | Basis::S => Ok(k),
            Basis::SW if k.canonical == w => Ok(k),
            Basis::SW => Err(Error::invalid_key(s, "not a canonical word of a tree")),
            Basis::EW if k.second == w => Ok(k),
            Basis::EW => Err(Error::invalid_key(s, "not a second canonical word of a tree")),
            other => Err(Error::Unsupported(format!(
                "basis {other} is not indexed by plane trees"
            ))),
        }
    }
}

static TREE_TABLES: ClassTableCache<TreeKey> = ClassTableCache::new();

/// Packed words grouped by their tree.
#[derive(Clone, Copy, Debug, Default)]
pub struct Trees;

impl WordClasses for Trees {
    type Key = TreeKey;

    fn sum_basis(&self) -> Basis {
        Basis::MM
    }

    fn class_of(&self, w: &[Letter]) -> TreeKey {
        TreeKey::of_word(w)
    }

    fn table(&self, n: usize) -> &'static ClassTable<TreeKey> {
        TREE_TABLES.get(n, TreeKey::of_word)
    }

    fn canonical_word(&self, k: &TreeKey) -> PackedWord {
        k.canonical.clone()
    }

    fn second_canonical_word(&self, k: &TreeKey) -> PackedWord {
        k.second.clone()
    }
}

impl TriCompatible for Trees {}

/// `TD` in the basis `MM`.
pub type Td = ClassSums<Trees>;
/// `TD` in the basis `SW` on canonical words.
pub type TdSw = CanonicalSw<Trees>;
/// `TD` in the basis `EW` on second canonical words.
pub type TdEw = CanonicalEw<Trees>;

pub const TD: Td = ClassSums(Trees);

/// Internal product on the dual basis `S` of `MM`.
pub fn iprod_s(x: &Element<TreeKey>, y: &Element<TreeKey>) -> Element<TreeKey> {
    internal_product(Trees, x, y)
}

/// Number of trees of degree `n`.
pub fn dim(n: usize) -> usize {
    Trees.dim(n)
}

/// Largest degree accepted by [`sylvester_dims`].
pub const SYLVESTER_MAX: usize = 7;

/// Number of sylvester classes of packed words of length `n`.
pub fn sylvester_dims(n: usize) -> Result<usize> {
    if n > SYLVESTER_MAX {
        return Err(Error::TooLarge {
            what: "sylvester degree",
            requested: n,
            limit: SYLVESTER_MAX,
        });
    }
    Ok(sylvester_classes(n).len())
}

/// Dimensions in degrees `0..=max` of the subalgebra of `WQSym` generated
/// by `M_1` under the three partial products.
pub fn generated_dims(max: usize) -> Vec<usize> {
    let mut spans: Vec<Vec<Element<PackedWord>>> = vec![Vec::new(); max + 1];
    let mut dims = vec![1];
    if max >= 1 {
        spans[1].push(Wqsym.key(PackedWord::ones(1)));
        dims.push(1);
    }
    for n in 2..=max {
        let mut ech = Echelon::new();
        let mut basis = Vec::new();
        for i in 1..n {
            for x in &spans[i] {
                for y in &spans[n - i] {
                    for op in [Wqsym::tri_left, Wqsym::tri_mid, Wqsym::tri_right] {
                        let p = op(&Wqsym, x, y).expect("positive degree");
                        if ech.insert(&p) {
                            basis.push(p);
                        }
                    }
                }
            }
        }
        dims.push(ech.rank());
        spans[n] = basis;
    }
    dims
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{avoids_all, enumerate_packed_words};
    use crate::subalg::{collect, expand};

    fn pw(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    fn mm(words: &[&str]) -> Element<TreeKey> {
        Element::from_keys(Basis::MM, words.iter().map(|s| TreeKey::of_word(pw(s).letters())))
    }

    fn m(words: &[&str]) -> Element<PackedWord> {
        Element::from_keys(Basis::M, words.iter().map(|s| pw(s)))
    }

    #[test]
    fn degree_three_canonical_words() {
        let got: Vec<String> = Trees.keys(3).iter().map(|k| k.canonical.to_string()).collect();
        let mut expected = vec![
            "111", "112", "211", "122", "212", "221", "123", "213", "231", "312", "321",
        ];
        expected.sort_by_key(|s| pw(s));
        assert_eq!(got, expected);
        assert_eq!(TreeKey::of_word(&[1]).canonical.to_string(), "1");
    }

    #[test]
    fn class_of_231() {
        let k = TreeKey::of_word(&[2, 3, 1]);
        let words: Vec<String> = Trees.class_words(&k).iter().map(ToString::to_string).collect();
        assert_eq!(words, ["121", "132", "231"]);
        assert_eq!(k.second.to_string(), "132");
        assert_eq!(expand(Trees, &mm(&["231"])), m(&["121", "132", "231"]));
    }

    #[test]
    fn canonical_words_are_pattern_avoiders() {
        for n in 0..=5 {
            let canon: Vec<PackedWord> = Trees.keys(n).iter().map(|k| k.canonical.clone()).collect();
            let mut second: Vec<PackedWord> =
                Trees.keys(n).iter().map(|k| k.second.clone()).collect();
            second.sort();
            let words = enumerate_packed_words(n);
            let av1: Vec<PackedWord> = words
                .iter()
                .filter(|w| avoids_all(w.letters(), &[&[1, 2, 1], &[1, 3, 2]]))
                .cloned()
                .collect();
            let av2: Vec<PackedWord> = words
                .iter()
                .filter(|w| avoids_all(w.letters(), &[&[1, 2, 1], &[2, 3, 1]]))
                .cloned()
                .collect();
            assert_eq!(canon, av1);
            assert_eq!(second, av2);
        }
    }

    #[test]
    fn expand_and_collect() {
        assert_eq!(expand(Trees, &mm(&["11", "12", "21"])), m(&["11", "12", "21"]));
        assert!(collect(Trees, &m(&["121", "132"])).is_err());
        assert_eq!(collect(Trees, &m(&["121", "132", "231"])).unwrap(), mm(&["231"]));
    }

    #[test]
    fn products() {
        assert_eq!(
            TD.mul(&mm(&["21"]), &mm(&["1"])).unwrap(),
            mm(&["211", "212", "213", "312", "321"])
        );
        assert_eq!(TD.mul(&mm(&["1"]), &mm(&["1"])).unwrap(), mm(&["11", "12", "21"]));
        let x = mm(&["1"]);
        assert_eq!(TD.tri_left(&x, &x).unwrap(), mm(&["21"]));
    }

    #[test]
    fn coproduct_stays_in_td() {
        for k in Trees.keys(4) {
            TD.comul(&TD.key(k)).unwrap();
        }
    }

    #[test]
    fn internal_product_examples() {
        let s = |w: &str| Element::from_key(Basis::S, TreeKey::of_word(pw(w).letters()));
        assert_eq!(iprod_s(&s("221"), &s("122")), s("231"));
        assert_eq!(iprod_s(&s("221"), &s("321")), s("321"));
        assert_eq!(iprod_s(&s("453223515"), &s("433442214")), s("674223518"));
        assert_eq!(iprod_s(&s("111"), &s("213")), s("213"));
        assert!(iprod_s(&s("1"), &s("12")).is_zero());
    }

    #[test]
    fn multiplicative_bases() {
        let sw = |w: &str| Element::from_key(Basis::SW, TreeKey::parse_key(w, Basis::SW).unwrap());
        let ew = |w: &str| Element::from_key(Basis::EW, TreeKey::parse_key(w, Basis::EW).unwrap());
        let tsw = TdSw::default();
        let tew = TdEw::default();
        assert_eq!(tsw.mul(&sw("21"), &sw("1")).unwrap(), sw("321"));
        assert_eq!(tsw.mul(&sw("1"), &sw("1")).unwrap(), sw("21"));
        assert_eq!(tew.mul(&ew("12"), &ew("1")).unwrap(), ew("123"));
        assert!(TreeKey::parse_key("121", Basis::SW).is_err());
        assert!(TreeKey::parse_key("231", Basis::EW).is_err());
    }

    #[test]
    fn dimensions() {
        let d: Vec<usize> = (0..=5).map(dim).collect();
        assert_eq!(d, [1, 1, 3, 11, 45, 197]);
        let s: Vec<usize> = (0..=5).map(|n| sylvester_dims(n).unwrap()).collect();
        assert_eq!(s, d);
        assert!(sylvester_dims(8).is_err());
        assert_eq!(generated_dims(4), [1, 1, 3, 11, 45]);
    }
}
