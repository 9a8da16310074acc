//! Parking functions, parkization and maximal unpacking.

use super::word::{format_letters, Letter, PackedWord};
use crate::error::{Error, Result};
use std::fmt;

/// A word whose nondecreasing rearrangement `b` satisfies `b_i <= i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ParkingFunction(Vec<Letter>);

impl ParkingFunction {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if !is_parking(&letters) {
            return Err(Error::invalid_key(format_letters(&letters), "not a parking function"));
        }
        Ok(ParkingFunction(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pack(&self) -> PackedWord {
        super::word::pack(&self.0)
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.0))
    }
}

/// `#{j : w_j <= i}`, indexed by `i` in `0..=n`.
fn cumulative_counts(w: &[Letter]) -> Vec<usize> {
    let n = w.len();
    let mut counts = vec![0usize; n + 1];
    for &a in w {
        if (a as usize) <= n {
            counts[a as usize] += 1;
        }
    }
    for i in 1..=n {
        counts[i] += counts[i - 1];
    }
    counts
}

pub fn is_parking(w: &[Letter]) -> bool {
    if w.contains(&0) {
        return false;
    }
    let c = cumulative_counts(w);
    (1..=w.len()).all(|i| c[i] >= i)
}

/// Parkization: while some `i` has fewer than `i` letters `<= i`, take the
/// smallest such `i` and decrement every letter greater than `i`.
pub fn parkize(w: &[Letter]) -> ParkingFunction {
    let mut cur = w.to_vec();
    loop {
        let c = cumulative_counts(&cur);
        match (1..=cur.len()).find(|&i| c[i] < i) {
            None => return ParkingFunction(cur),
            Some(i) => {
                for a in cur.iter_mut() {
                    if *a as usize > i {
                        *a -= 1;
                    }
                }
            }
        }
    }
}

/// Lexicographically greatest parking function packing to `u`.
///
/// Letter `k` of `u` is sent to `1 + #{positions with letter < k}`, the
/// largest value the parking condition allows.
pub fn max_unpack(u: &PackedWord) -> ParkingFunction {
    let ev = super::word::evaluation(u.letters());
    let mut image = Vec::with_capacity(ev.len());
    let mut below = 0usize;
    for e in ev {
        image.push(below as Letter + 1);
        below += e;
    }
    ParkingFunction(u.letters().iter().map(|&a| image[a as usize - 1]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::word::{enumerate_packed_words, pack};

    fn letters(s: &str) -> Vec<Letter> {
        s.chars().map(|c| c.to_digit(10).unwrap()).collect()
    }

    /// All parking functions of length `n`, brute force over `{1..n}^n`.
    fn all_parking(n: usize) -> Vec<Vec<Letter>> {
        let mut out = Vec::new();
        let total = n.pow(n as u32);
        for mut code in 0..total {
            let mut w = Vec::with_capacity(n);
            for _ in 0..n {
                w.push((code % n) as Letter + 1);
                code /= n;
            }
            if is_parking(&w) {
                out.push(w);
            }
        }
        out
    }

    #[test]
    fn parkize_examples() {
        assert_eq!(parkize(&letters("1613")).letters(), &letters("1413")[..]);
        assert_eq!(parkize(&letters("5316")).letters(), &letters("3214")[..]);
        assert_eq!(parkize(&letters("53")).letters(), &letters("21")[..]);
        assert_eq!(parkize(&letters("31613")).letters(), &letters("31513")[..]);
        assert_eq!(parkize(&letters("3")).letters(), &letters("1")[..]);
    }

    #[test]
    fn max_unpack_examples() {
        let u: PackedWord = "321412451".parse().unwrap();
        assert_eq!(max_unpack(&u).letters(), &letters("641714791")[..]);
        assert_eq!(max_unpack(&"12".parse().unwrap()).letters(), &[1, 2]);
        assert_eq!(max_unpack(&PackedWord::ones(4)).letters(), &[1, 1, 1, 1]);
        assert_eq!(max_unpack(&"112".parse().unwrap()).letters(), &[1, 1, 3]);
    }

    #[test]
    fn max_unpack_is_lex_max_by_brute_force() {
        for n in 1..=5 {
            let parking = all_parking(n);
            for u in enumerate_packed_words(n) {
                let best = parking
                    .iter()
                    .filter(|b| pack(b) == u)
                    .max()
                    .expect("every packed word has a parking unpacking");
                assert_eq!(max_unpack(&u).letters(), &best[..], "mup({u})");
            }
        }
    }

    #[test]
    fn parking_counts() {
        // (n+1)^(n-1)
        let counts: Vec<usize> = (1..=5).map(|n| all_parking(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 16, 125, 1296]);
    }

    #[test]
    fn new_rejects_non_parking() {
        assert!(ParkingFunction::new(vec![1, 3]).is_err());
        assert!(ParkingFunction::new(vec![2, 1]).is_ok());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn parkize_output_is_parking(w in prop::collection::vec(1u32..12, 0..8)) {
                let p = parkize(&w);
                prop_assert!(is_parking(p.letters()));
                prop_assert_eq!(p.len(), w.len());
            }

            #[test]
            fn parkize_fixes_exactly_parking(w in prop::collection::vec(1u32..7, 0..7)) {
                prop_assert_eq!(parkize(&w).letters() == &w[..], is_parking(&w));
            }
        }
    }
}
