//! Words over the positive integers and packed words.
//!
//! Ordering on both [`Word`] and [`PackedWord`] is graded: shorter words
//! come first, words of equal length compare lexicographically.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

pub type Letter = u32;

/// A finite word over `{1, 2, ...}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

/// A word whose letters are exactly `1..=m` for some `m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PackedWord(Vec<Letter>);

fn graded_cmp(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        graded_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PackedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        graded_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for PackedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::invalid_key(
                format_letters(&letters),
                "letters must be positive",
            ));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn pack(&self) -> PackedWord {
        pack(&self.0)
    }
}

impl PackedWord {
    /// Checks that `letters` is packed.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if !is_packed(&letters) {
            return Err(Error::invalid_key(format_letters(&letters), "not a packed word"));
        }
        Ok(PackedWord(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(is_packed(&letters), "{letters:?} is not packed");
        PackedWord(letters)
    }

    pub fn empty() -> Self {
        PackedWord(Vec::new())
    }

    /// `1 1 ... 1` of length `n`.
    pub fn ones(n: usize) -> Self {
        PackedWord(vec![1; n])
    }

    /// `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        PackedWord((1..=n as Letter).collect())
    }

    /// `n ... 2 1`.
    pub fn reversed_identity(n: usize) -> Self {
        PackedWord((1..=n as Letter).rev().collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter, `0` for the empty word.
    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `w[k]`: every letter increased by `k`.
    pub fn shifted(&self, k: Letter) -> Word {
        Word(self.0.iter().map(|&a| a + k).collect())
    }

    pub fn as_word(&self) -> Word {
        Word(self.0.clone())
    }
}

impl From<PackedWord> for Word {
    fn from(p: PackedWord) -> Word {
        Word(p.0)
    }
}

pub(crate) fn format_letters(letters: &[Letter]) -> String {
    if letters.iter().any(|&a| a > 9) {
        letters
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    } else {
        letters.iter().map(|a| a.to_string()).collect()
    }
}

/// Reads `32121` or `3,2,12,1,1`.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let bad = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };
    if s.contains(',') {
        let mut out = Vec::new();
        let mut pos = 0;
        for piece in s.split(',') {
            let t = piece.trim();
            let a: Letter = t.parse().map_err(|_| bad(pos, "expected a positive integer"))?;
            if a == 0 {
                return Err(bad(pos, "letters must be positive"));
            }
            out.push(a);
            pos += piece.len() + 1;
        }
        Ok(out)
    } else {
        s.chars()
            .enumerate()
            .map(|(i, c)| match c.to_digit(10) {
                Some(0) | None => Err(bad(i, "expected a digit 1-9")),
                Some(d) => Ok(d),
            })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.0))
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.0))
    }
}

impl std::str::FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_letters(s)?)
    }
}

impl std::str::FromStr for PackedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PackedWord::new(parse_letters(s)?)
    }
}

pub fn is_packed(letters: &[Letter]) -> bool {
    let m = letters.iter().copied().max().unwrap_or(0) as usize;
    let mut seen = vec![false; m + 1];
    for &a in letters {
        if a == 0 {
            return false;
        }
        seen[a as usize] = true;
    }
    seen[1..].iter().all(|&b| b)
}

/// Order-preserving relabeling of the occurring letters onto `1..=m`.
pub fn pack(letters: &[Letter]) -> PackedWord {
    let distinct: BTreeSet<Letter> = letters.iter().copied().collect();
    let rank: Vec<Letter> = distinct.into_iter().collect();
    PackedWord(
        letters
            .iter()
            .map(|a| rank.binary_search(a).unwrap() as Letter + 1)
            .collect(),
    )
}

/// Standardization: equal letters are numbered left to right.
pub fn standardize(letters: &[Letter]) -> Vec<Letter> {
    let mut idx: Vec<usize> = (0..letters.len()).collect();
    idx.sort_by_key(|&i| (letters[i], i));
    let mut out = vec![0; letters.len()];
    for (rank, i) in idx.into_iter().enumerate() {
        out[i] = rank as Letter + 1;
    }
    out
}

/// Number of occurrences of each letter `1..=max`.
pub fn evaluation(letters: &[Letter]) -> Vec<usize> {
    let m = letters.iter().copied().max().unwrap_or(0) as usize;
    let mut ev = vec![0; m];
    for &a in letters {
        ev[a as usize - 1] += 1;
    }
    ev
}

/// `u · v[|u|]`.
pub fn shifted_concat(u: &Word, v: &Word) -> Word {
    let k = u.len() as Letter;
    let mut out = u.0.clone();
    out.extend(v.0.iter().map(|&a| a + k));
    Word(out)
}

/// All ways of interleaving `left` items with `right` items; `true` marks a
/// position taken from the left sequence. Lexicographic in the mask with
/// `false < true`.
pub fn interleavings(left: usize, right: usize) -> Vec<Vec<bool>> {
    fn rec(left: usize, right: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if left == 0 && right == 0 {
            out.push(cur.clone());
            return;
        }
        if right > 0 {
            cur.push(false);
            rec(left, right - 1, cur, out);
            cur.pop();
        }
        if left > 0 {
            cur.push(true);
            rec(left - 1, right, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(left, right, &mut Vec::with_capacity(left + right), &mut out);
    out
}

pub(crate) fn merge_by_mask<T: Copy>(mask: &[bool], left: &[T], right: &[T]) -> Vec<T> {
    let (mut i, mut j) = (0, 0);
    mask.iter()
        .map(|&from_left| {
            if from_left {
                i += 1;
                left[i - 1]
            } else {
                j += 1;
                right[j - 1]
            }
        })
        .collect()
}

/// Shuffle product of two words, as a sorted multiset.
pub fn shuffle(u: &[Letter], v: &[Letter]) -> Vec<Word> {
    let mut out: Vec<Word> = interleavings(u.len(), v.len())
        .iter()
        .map(|m| Word(merge_by_mask(m, u, v)))
        .collect();
    out.sort();
    out
}

/// `u ⧢ v[|u|]`.
pub fn shifted_shuffle(u: &Word, v: &Word) -> Vec<Word> {
    shuffle(&u.0, v.shifted_by(u.len() as Letter).letters())
}

impl Word {
    fn shifted_by(&self, k: Letter) -> Word {
        Word(self.0.iter().map(|&a| a + k).collect())
    }
}

/// Shuffle of `u` with `v[max(u)]`. Every result is packed.
pub fn packed_shifted_shuffle(u: &PackedWord, v: &PackedWord) -> Vec<PackedWord> {
    shuffle(&u.0, v.shifted(u.max_letter()).letters())
        .into_iter()
        .map(|w| PackedWord::from_vec_unchecked(w.0))
        .collect()
}

/// Subsets of `1..=m` of size `k`, each as an increasing vector.
pub(crate) fn subsets(m: Letter, k: usize) -> Vec<Vec<Letter>> {
    fn rec(start: Letter, m: Letter, k: usize, cur: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = (k - cur.len()) as Letter;
        let mut a = start;
        while a + need - 1 <= m {
            cur.push(a);
            rec(a + 1, m, k, cur, out);
            cur.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    rec(1, m, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// The convolution of packed words: all packed `w = v·x` with
/// `pack(v) = left`, `pack(x) = right` and `|v| = |left|`. Sorted.
pub fn convolution_split(left: &PackedWord, right: &PackedWord) -> Vec<PackedWord> {
    let (a, b) = (left.max_letter(), right.max_letter());
    let mut out = Vec::new();
    for m in a.max(b)..=a + b {
        for sa in subsets(m, a as usize) {
            let in_a: BTreeSet<Letter> = sa.iter().copied().collect();
            let missing: Vec<Letter> = (1..=m).filter(|x| !in_a.contains(x)).collect();
            if missing.len() > b as usize {
                continue;
            }
            for sb in subsets(m, b as usize) {
                if !missing.iter().all(|x| sb.binary_search(x).is_ok()) {
                    continue;
                }
                let mut w: Vec<Letter> = left.0.iter().map(|&x| sa[x as usize - 1]).collect();
                w.extend(right.0.iter().map(|&x| sb[x as usize - 1]));
                out.push(PackedWord::from_vec_unchecked(w));
            }
        }
    }
    out.sort();
    out
}

/// Subword of the letters lying in `[lo, hi]`.
pub fn restrict_letters(u: &PackedWord, lo: Letter, hi: Letter) -> Word {
    Word(u.0.iter().copied().filter(|&x| lo <= x && x <= hi).collect())
}

/// Position `p` receives the rank of the pair `(u_p, v_p)` among the
/// distinct pairs, ordered lexicographically.
pub fn biword_pack(u: &PackedWord, v: &PackedWord) -> Result<PackedWord> {
    if u.len() != v.len() {
        return Err(Error::DegreeMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let pairs: Vec<(Letter, Letter)> = u.0.iter().copied().zip(v.0.iter().copied()).collect();
    let distinct: BTreeSet<(Letter, Letter)> = pairs.iter().copied().collect();
    let rank: Vec<(Letter, Letter)> = distinct.into_iter().collect();
    Ok(PackedWord(
        pairs
            .iter()
            .map(|p| rank.binary_search(p).unwrap() as Letter + 1)
            .collect(),
    ))
}

/// Whether some subsequence of `u` packs to `pattern`.
pub fn contains_pattern(u: &[Letter], pattern: &[Letter]) -> bool {
    fn rec(u: &[Letter], p: &[Letter], start: usize, chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == p.len() {
            return true;
        }
        if u.len() - start < p.len() - k {
            return false;
        }
        for pos in start..u.len() {
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(i, &q)| u[q].cmp(&u[pos]) == p[i].cmp(&p[k]));
            if ok {
                chosen.push(pos);
                if rec(u, p, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(u, pattern, 0, &mut Vec::with_capacity(pattern.len()))
}

/// Whether `u` avoids every pattern in `patterns`.
pub fn avoids_all(u: &[Letter], patterns: &[&[Letter]]) -> bool {
    patterns.iter().all(|p| !contains_pattern(u, p))
}

/// All packed words of length `n` in lexicographic order.
pub fn enumerate_packed_words(n: usize) -> Vec<PackedWord> {
    fn rec(n: usize, m: Letter, cur: &mut Vec<Letter>, used: &mut Vec<usize>, out: &mut Vec<PackedWord>) {
        let missing = used.iter().filter(|&&c| c == 0).count();
        if cur.len() == n {
            if missing == 0 {
                out.push(PackedWord(cur.clone()));
            }
            return;
        }
        if n - cur.len() < missing {
            return;
        }
        for a in 1..=m {
            cur.push(a);
            used[a as usize - 1] += 1;
            rec(n, m, cur, used, out);
            used[a as usize - 1] -= 1;
            cur.pop();
        }
    }
    if n == 0 {
        return vec![PackedWord::empty()];
    }
    let mut out = Vec::new();
    for m in 1..=n as Letter {
        rec(n, m, &mut Vec::with_capacity(n), &mut vec![0; m as usize], &mut out);
    }
    out.sort();
    out
}

/// Quasi-shuffle (overlapping shuffle) of two compositions, sorted multiset.
pub fn quasi_shuffle(i: &[u32], j: &[u32]) -> Vec<Vec<u32>> {
    fn rec(i: &[u32], j: &[u32]) -> Vec<Vec<u32>> {
        if i.is_empty() {
            return vec![j.to_vec()];
        }
        if j.is_empty() {
            return vec![i.to_vec()];
        }
        let mut out = Vec::new();
        let prepend = |head: u32, tails: Vec<Vec<u32>>, out: &mut Vec<Vec<u32>>| {
            for t in tails {
                let mut v = Vec::with_capacity(t.len() + 1);
                v.push(head);
                v.extend(t);
                out.push(v);
            }
        };
        prepend(i[0], rec(&i[1..], j), &mut out);
        prepend(j[0], rec(i, &j[1..]), &mut out);
        prepend(i[0] + j[0], rec(&i[1..], &j[1..]), &mut out);
        out
    }
    let mut out = rec(i, j);
    out.sort();
    out
}
