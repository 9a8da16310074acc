//! Plane trees with at least two children per internal node (Schröder
//! trees), and the map from words to trees.
//!
//! A nonempty word `w` with maximal letter `m` factors uniquely as
//! `v_0 m v_1 m ... m v_k` where no `v_i` contains `m`; its tree has the
//! trees of `v_0, ..., v_k` as children. The empty word gives a leaf, and
//! the degree of a tree is the length of any word mapping to it.

use super::word::{Letter, PackedWord};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree::default()
    }

    /// A node over `children`; `None` unless there are at least two.
    pub fn node(children: Vec<PlaneTree>) -> Option<Self> {
        (children.len() >= 2).then_some(PlaneTree { children })
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    /// Number of separators between consecutive children, summed over nodes.
    pub fn degree(&self) -> usize {
        if self.is_leaf() {
            0
        } else {
            self.children.len() - 1 + self.children.iter().map(PlaneTree::degree).sum::<usize>()
        }
    }

    /// The greatest word of the class: earlier subtrees take larger letters.
    pub fn canonical_word(&self) -> PackedWord {
        let mut out = vec![0; self.degree()];
        fill(self, &mut out, 0, 1, true);
        PackedWord::from_vec_unchecked(out)
    }

    /// The least word of the class: earlier subtrees take smaller letters.
    pub fn second_canonical_word(&self) -> PackedWord {
        let mut out = vec![0; self.degree()];
        fill(self, &mut out, 0, 1, false);
        PackedWord::from_vec_unchecked(out)
    }
}

/// Writes the word of `t` into `out[pos..]` using letters starting at `base`.
/// Returns the next unused letter.
fn fill(t: &PlaneTree, out: &mut [Letter], pos: usize, base: Letter, decreasing: bool) -> Letter {
    if t.is_leaf() {
        return base;
    }
    let sizes: Vec<usize> = t.children.iter().map(PlaneTree::degree).collect();
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut p = pos;
    for (i, s) in sizes.iter().enumerate() {
        offsets.push(p);
        p += s + usize::from(i + 1 < sizes.len());
    }
    let mut next = base;
    let order: Vec<usize> = if decreasing {
        (0..t.children.len()).rev().collect()
    } else {
        (0..t.children.len()).collect()
    };
    for i in order {
        next = fill(&t.children[i], out, offsets[i], next, decreasing);
    }
    for &off in offsets.iter().skip(1) {
        out[off - 1] = next;
    }
    next + 1
}

/// The tree of a word (any letters; only their relative order matters).
pub fn tree_of_word(w: &[Letter]) -> PlaneTree {
    let Some(&m) = w.iter().max() else {
        return PlaneTree::leaf();
    };
    let children = w
        .split(|&a| a == m)
        .map(tree_of_word)
        .collect::<Vec<_>>();
    PlaneTree { children }
}

impl fmt::Display for PlaneTree {
    /// Nested parentheses; a leaf is `o`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_leaf() {
            return f.write_str("o");
        }
        f.write_str("(")?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::word::enumerate_packed_words;
    use std::collections::BTreeMap;

    fn pw(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    fn classes(n: usize) -> BTreeMap<PlaneTree, Vec<PackedWord>> {
        let mut m: BTreeMap<PlaneTree, Vec<PackedWord>> = BTreeMap::new();
        for w in enumerate_packed_words(n) {
            m.entry(tree_of_word(w.letters())).or_default().push(w);
        }
        m
    }

    #[test]
    fn small_trees() {
        let t = tree_of_word(&[1]);
        assert_eq!(t, PlaneTree::node(vec![PlaneTree::leaf(), PlaneTree::leaf()]).unwrap());
        assert_eq!(t.to_string(), "(o o)");
        assert_eq!(t.degree(), 1);
        assert_eq!(tree_of_word(&[]).degree(), 0);
        assert!(PlaneTree::node(vec![PlaneTree::leaf()]).is_none());
    }

    #[test]
    fn class_of_231() {
        let t = tree_of_word(&[2, 3, 1]);
        let cls = &classes(3)[&t];
        assert_eq!(cls, &vec![pw("121"), pw("132"), pw("231")]);
        assert_eq!(t.canonical_word(), pw("231"));
        assert_eq!(t.second_canonical_word(), pw("132"));
    }

    #[test]
    fn class_counts_are_little_schroeder() {
        let counts: Vec<usize> = (1..=7).map(|n| classes(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 11, 45, 197, 903, 4279]);
    }

    #[test]
    fn degree_two_classes_are_singletons() {
        let c = classes(2);
        assert_eq!(c.len(), 3);
        assert!(c.values().all(|v| v.len() == 1));
    }

    #[test]
    fn canonical_words_stay_in_class() {
        for n in 0..=6 {
            for (t, words) in classes(n) {
                let c = t.canonical_word();
                let s = t.second_canonical_word();
                assert!(words.contains(&c), "{c} not in class of {t}");
                assert!(words.contains(&s), "{s} not in class of {t}");
                assert_eq!(tree_of_word(c.letters()), t);
            }
        }
    }

    #[test]
    fn degree_matches_word_length() {
        for w in enumerate_packed_words(5) {
            assert_eq!(tree_of_word(w.letters()).degree(), 5);
        }
    }
}
