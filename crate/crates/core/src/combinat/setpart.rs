//! Ordered set partitions and segmented permutations, both in bijection
//! with packed words: letter `i` at position `j` puts `j` in block `i`.

use super::word::{parse_letters, Letter, PackedWord};
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrderedSetPartition {
    blocks: Vec<BTreeSet<usize>>,
}

impl OrderedSetPartition {
    pub fn new(blocks: Vec<BTreeSet<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let union: BTreeSet<usize> = blocks.iter().flatten().copied().collect();
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::invalid_key(format!("{blocks:?}"), "empty block"));
        }
        if union.len() != n || union.iter().copied().ne(1..=n) {
            return Err(Error::invalid_key(
                format!("{blocks:?}"),
                "blocks must be disjoint and cover 1..n",
            ));
        }
        Ok(OrderedSetPartition { blocks })
    }

    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn to_packed_word(&self) -> PackedWord {
        let mut w = vec![0; self.size()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &j in b {
                w[j - 1] = i as Letter + 1;
            }
        }
        PackedWord::from_vec_unchecked(w)
    }
}

pub fn to_set_partition(u: &PackedWord) -> OrderedSetPartition {
    let mut blocks = vec![BTreeSet::new(); u.max_letter() as usize];
    for (j, &a) in u.letters().iter().enumerate() {
        blocks[a as usize - 1].insert(j + 1);
    }
    OrderedSetPartition { blocks }
}

/// A permutation cut by bars into increasing blocks.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SegmentedPermutation {
    letters: Vec<Letter>,
    /// `bar_after[i]`: a bar separates positions `i` and `i + 1`.
    bar_after: Vec<bool>,
}

impl SegmentedPermutation {
    pub fn new(letters: Vec<Letter>, bar_after: Vec<bool>) -> Result<Self> {
        let n = letters.len();
        if bar_after.len() != n.saturating_sub(1) {
            return Err(Error::invalid_key(
                format!("{letters:?}"),
                "bar vector has the wrong length",
            ));
        }
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if sorted.iter().copied().ne(1..=n as Letter) {
            return Err(Error::invalid_key(format!("{letters:?}"), "not a permutation"));
        }
        let sp = SegmentedPermutation { letters, bar_after };
        if let Some(i) = (0..n.saturating_sub(1))
            .find(|&i| !sp.bar_after[i] && sp.letters[i] > sp.letters[i + 1])
        {
            return Err(Error::invalid_key(
                sp.to_string(),
                format!("block is not increasing at position {}", i + 1),
            ));
        }
        Ok(sp)
    }

    pub fn from_blocks(blocks: &[Vec<Letter>]) -> Result<Self> {
        let mut letters = Vec::new();
        let mut bar_after = Vec::new();
        for (k, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::invalid_key(format!("{blocks:?}"), "empty block"));
            }
            if k > 0 {
                bar_after.push(true);
            }
            for (i, &a) in b.iter().enumerate() {
                if i > 0 {
                    bar_after.push(false);
                }
                letters.push(a);
            }
        }
        SegmentedPermutation::new(letters, bar_after)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn bar_after(&self) -> &[bool] {
        &self.bar_after
    }

    /// Bar positions as a subset of `1..n-1`.
    pub fn bar_positions(&self) -> Vec<usize> {
        (0..self.bar_after.len())
            .filter(|&i| self.bar_after[i])
            .map(|i| i + 1)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn blocks(&self) -> Vec<Vec<Letter>> {
        let mut out: Vec<Vec<Letter>> = Vec::new();
        for (i, &a) in self.letters.iter().enumerate() {
            if i == 0 || self.bar_after[i - 1] {
                out.push(Vec::new());
            }
            out.last_mut().unwrap().push(a);
        }
        out
    }

    /// Standardization of letters, bars kept in place.
    pub(crate) fn standardized(letters: &[Letter], bar_after: &[bool]) -> SegmentedPermutation {
        SegmentedPermutation {
            letters: super::word::standardize(letters),
            bar_after: bar_after.to_vec(),
        }
    }

    pub(crate) fn from_parts_unchecked(letters: Vec<Letter>, bar_after: Vec<bool>) -> Self {
        SegmentedPermutation { letters, bar_after }
    }
}

pub fn to_seg_perm(u: &PackedWord) -> SegmentedPermutation {
    let blocks: Vec<Vec<Letter>> = to_set_partition(u)
        .blocks
        .into_iter()
        .map(|b| b.into_iter().map(|j| j as Letter).collect())
        .collect();
    SegmentedPermutation::from_blocks(&blocks).expect("blocks of a packed word")
}

pub fn from_seg_perm(sigma: &SegmentedPermutation) -> PackedWord {
    let mut w = vec![0; sigma.len()];
    for (i, b) in sigma.blocks().iter().enumerate() {
        for &j in b {
            w[j as usize - 1] = i as Letter + 1;
        }
    }
    PackedWord::from_vec_unchecked(w)
}

impl fmt::Display for SegmentedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.letters.len() > 9;
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let parts: Vec<String> = b.iter().map(|a| a.to_string()).collect();
                parts.join(if wide { "," } else { "" })
            })
            .collect();
        f.write_str(&blocks.join("|"))
    }
}

impl std::str::FromStr for SegmentedPermutation {
    type Err = Error;

    /// Reads `247|9|138|56`; blocks use comma-separated letters when the
    /// permutation has more than nine letters.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return SegmentedPermutation::new(Vec::new(), Vec::new());
        }
        // With commas anywhere, or more than nine digits, letters are
        // integers separated by commas.
        let integer_mode = s.contains(',') || s.chars().filter(|c| *c != '|').count() > 9;
        let mut blocks = Vec::new();
        let mut offset = 0;
        for piece in s.split('|') {
            let block = if integer_mode {
                piece
                    .split(',')
                    .map(|t| match t.trim().parse::<Letter>() {
                        Ok(a) if a > 0 => Ok(a),
                        _ => Err(Error::Parse {
                            pos: offset,
                            msg: "expected a positive integer".into(),
                        }),
                    })
                    .collect::<Result<Vec<_>>>()?
            } else {
                parse_letters(piece).map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse {
                        pos: pos + offset,
                        msg,
                    },
                    other => other,
                })?
            };
            if block.is_empty() {
                return Err(Error::Parse {
                    pos: offset,
                    msg: "empty block".into(),
                });
            }
            blocks.push(block);
            offset += piece.len() + 1;
        }
        SegmentedPermutation::from_blocks(&blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::word::enumerate_packed_words;

    #[test]
    fn paper_example() {
        let u: PackedWord = "313144132".parse().unwrap();
        let p = to_set_partition(&u);
        let expected: Vec<BTreeSet<usize>> = vec![
            [2, 4, 7].into_iter().collect(),
            [9].into_iter().collect(),
            [1, 3, 8].into_iter().collect(),
            [5, 6].into_iter().collect(),
        ];
        assert_eq!(p.blocks(), &expected[..]);
        let s = to_seg_perm(&u);
        assert_eq!(s.to_string(), "247|9|138|56");
        assert_eq!(from_seg_perm(&s), u);
        assert_eq!(s.bar_positions(), vec![3, 4, 7]);
    }

    #[test]
    fn small_cases() {
        let ones = PackedWord::ones(4);
        assert_eq!(to_seg_perm(&ones).to_string(), "1234");
        let u: PackedWord = "212".parse().unwrap();
        assert_eq!(to_seg_perm(&u).to_string(), "2|13");
        let s: SegmentedPermutation = "2|13".parse().unwrap();
        assert_eq!(from_seg_perm(&s), u);
    }

    #[test]
    fn rejects_decreasing_block() {
        assert!("21|3".parse::<SegmentedPermutation>().is_err());
        assert!("2|2".parse::<SegmentedPermutation>().is_err());
        assert!(OrderedSetPartition::new(vec![[1].into(), [1, 2].into()]).is_err());
    }

    #[test]
    fn round_trips_up_to_six() {
        for n in 0..=6 {
            for u in enumerate_packed_words(n) {
                let s = to_seg_perm(&u);
                assert_eq!(from_seg_perm(&s), u);
                assert_eq!(s.to_string().parse::<SegmentedPermutation>().unwrap(), s);
                assert_eq!(to_set_partition(&u).to_packed_word(), u);
            }
        }
    }

    #[test]
    fn wide_text_form() {
        let u = PackedWord::reversed_identity(10);
        let s = to_seg_perm(&u);
        assert_eq!(s.to_string(), "10|9|8|7|6|5|4|3|2|1");
        assert_eq!(s.to_string().parse::<SegmentedPermutation>().unwrap(), s);
    }
}
