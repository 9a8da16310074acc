//! Sylvester congruence on packed words: the closure of
//! `a c u b ≡ c a u b` for letters `a <= b < c` and any word `u`.

use super::word::{enumerate_packed_words, PackedWord};
use std::collections::HashMap;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Partition of the packed words of length `n` into sylvester classes.
/// Classes are listed by their least element, words inside in order.
pub fn sylvester_classes(n: usize) -> Vec<Vec<PackedWord>> {
    let words = enumerate_packed_words(n);
    let index: HashMap<&PackedWord, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = UnionFind::new(words.len());
    for (i, w) in words.iter().enumerate() {
        let l = w.letters();
        for p in 0..l.len().saturating_sub(1) {
            let (x, y) = (l[p], l[p + 1]);
            if x == y {
                continue;
            }
            let (a, c) = (x.min(y), x.max(y));
            if l[p + 2..].iter().any(|&b| a <= b && b < c) {
                let mut swapped = l.to_vec();
                swapped.swap(p, p + 1);
                let j = index[&PackedWord::from_vec_unchecked(swapped)];
                uf.union(i, j);
            }
        }
    }
    let mut groups: Vec<Vec<PackedWord>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        let r = uf.find(i);
        let k = *slot.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[k].push(w.clone());
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let c: Vec<usize> = (0..=6).map(|n| sylvester_classes(n).len()).collect();
        assert_eq!(c, vec![1, 1, 3, 11, 45, 197, 903]);
    }

    #[test]
    fn degree_three_merges() {
        let classes = sylvester_classes(3);
        let big: Vec<Vec<String>> = classes
            .iter()
            .filter(|c| c.len() > 1)
            .map(|c| c.iter().map(|w| w.to_string()).collect())
            .collect();
        assert_eq!(big, vec![vec!["121", "211"], vec!["132", "312"]]);
    }

    #[test]
    fn classes_share_last_letter() {
        for class in sylvester_classes(5) {
            let last = class[0].letters().last().copied();
            assert!(class.iter().all(|w| w.letters().last().copied() == last));
        }
    }
}
