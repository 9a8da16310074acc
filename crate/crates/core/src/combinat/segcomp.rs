//! Segmented compositions and the sign map `SC`.

use super::word::Letter;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Separator {
    Comma,
    Bar,
}

/// Comparison between consecutive letters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Lt,
    Eq,
    Gt,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Lt => '<',
            Sign::Eq => '=',
            Sign::Gt => '>',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '<' => Some(Sign::Lt),
            '=' => Some(Sign::Eq),
            '>' => Some(Sign::Gt),
            _ => None,
        }
    }
}

/// Parts separated by commas or bars. The empty composition stands for the
/// unit in degree 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SegmentedComposition {
    parts: Vec<u32>,
    separators: Vec<Separator>,
}

impl SegmentedComposition {
    pub fn new(parts: Vec<u32>, separators: Vec<Separator>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid_key(format!("{parts:?}"), "parts must be positive"));
        }
        if separators.len() + 1 != parts.len() && !(parts.is_empty() && separators.is_empty()) {
            return Err(Error::invalid_key(
                format!("{parts:?}"),
                "need exactly one separator between consecutive parts",
            ));
        }
        Ok(SegmentedComposition { parts, separators })
    }

    pub fn empty() -> Self {
        SegmentedComposition::default()
    }

    /// The composition `(n)`.
    pub fn single(n: u32) -> Self {
        SegmentedComposition {
            parts: vec![n],
            separators: Vec::new(),
        }
    }

    /// `(1,1,...,1)`.
    pub fn all_commas(n: usize) -> Self {
        SegmentedComposition {
            parts: vec![1; n],
            separators: vec![Separator::Comma; n.saturating_sub(1)],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn separators(&self) -> &[Separator] {
        &self.separators
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// The sign sequence of length `n - 1`: `<` inside a part, `=` at a
    /// comma, `>` at a bar.
    pub fn signs(&self) -> Vec<Sign> {
        let mut out = Vec::with_capacity(self.degree().saturating_sub(1));
        for (i, &p) in self.parts.iter().enumerate() {
            out.extend(std::iter::repeat_n(Sign::Lt, p as usize - 1));
            if let Some(sep) = self.separators.get(i) {
                out.push(match sep {
                    Separator::Comma => Sign::Eq,
                    Separator::Bar => Sign::Gt,
                });
            }
        }
        out
    }

    /// Inverse of [`signs`](Self::signs) for a word of length `signs.len() + 1`.
    pub fn from_signs(signs: &[Sign]) -> Self {
        let mut parts = vec![1u32];
        let mut separators = Vec::new();
        for s in signs {
            match s {
                Sign::Lt => *parts.last_mut().unwrap() += 1,
                Sign::Eq | Sign::Gt => {
                    separators.push(if *s == Sign::Eq {
                        Separator::Comma
                    } else {
                        Separator::Bar
                    });
                    parts.push(1);
                }
            }
        }
        SegmentedComposition { parts, separators }
    }

    pub fn sign_string(&self) -> String {
        self.signs().into_iter().map(Sign::as_char).collect()
    }

    pub fn parse_signs(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .enumerate()
            .map(|(i, c)| {
                Sign::from_char(c).ok_or(Error::Parse {
                    pos: i,
                    msg: format!("expected one of <, =, > but found `{c}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SegmentedComposition::from_signs(&signs))
    }

    fn joined(&self, other: &Self, sep: Separator) -> Self {
        if self.parts.is_empty() {
            return other.clone();
        }
        if other.parts.is_empty() {
            return self.clone();
        }
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        let mut separators = self.separators.clone();
        separators.push(sep);
        separators.extend_from_slice(&other.separators);
        SegmentedComposition { parts, separators }
    }

    /// `I, J`.
    pub fn comma_join(&self, other: &Self) -> Self {
        self.joined(other, Separator::Comma)
    }

    /// `I | J`.
    pub fn bar_join(&self, other: &Self) -> Self {
        self.joined(other, Separator::Bar)
    }

    /// `I ▷ J`: the last part of `I` and the first part of `J` are added.
    pub fn glue(&self, other: &Self) -> Self {
        if self.parts.is_empty() {
            return other.clone();
        }
        if other.parts.is_empty() {
            return self.clone();
        }
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() += other.parts[0];
        parts.extend_from_slice(&other.parts[1..]);
        let mut separators = self.separators.clone();
        separators.extend_from_slice(&other.separators);
        SegmentedComposition { parts, separators }
    }
}

/// Degree first, then the sign sequence.
impl Ord for SegmentedComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.signs().cmp(&other.signs()))
    }
}

impl PartialOrd for SegmentedComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `SC(w)`: the comparison signs between consecutive letters.
pub fn sc_of_word(w: &[Letter]) -> SegmentedComposition {
    if w.is_empty() {
        return SegmentedComposition::empty();
    }
    let signs: Vec<Sign> = w
        .windows(2)
        .map(|p| match p[0].cmp(&p[1]) {
            Ordering::Less => Sign::Lt,
            Ordering::Equal => Sign::Eq,
            Ordering::Greater => Sign::Gt,
        })
        .collect();
    SegmentedComposition::from_signs(&signs)
}

/// All segmented compositions of `n`, in key order. `3^(n-1)` of them.
pub fn enumerate_segmented_compositions(n: usize) -> Vec<SegmentedComposition> {
    if n == 0 {
        return vec![SegmentedComposition::empty()];
    }
    let mut out = Vec::with_capacity(3usize.pow(n as u32 - 1));
    let all = [Sign::Lt, Sign::Eq, Sign::Gt];
    let mut signs = vec![Sign::Lt; n - 1];
    loop {
        out.push(SegmentedComposition::from_signs(&signs));
        // odometer
        let mut i = signs.len();
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            let k = all.iter().position(|s| *s == signs[i]).unwrap();
            if k + 1 < all.len() {
                signs[i] = all[k + 1];
                break;
            }
            signs[i] = all[0];
        }
    }
}

impl fmt::Display for SegmentedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(match self.separators[i - 1] {
                    Separator::Comma => ",",
                    Separator::Bar => "|",
                })?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for SegmentedComposition {
    type Err = Error;

    /// Reads `2,1|2|1,2`; a string made only of `<`, `=`, `>` is read as a
    /// sign sequence (an empty sign string is the composition `(1)`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if !s.is_empty() && s.chars().all(|c| Sign::from_char(c).is_some()) {
            return SegmentedComposition::parse_signs(s);
        }
        let mut parts = Vec::new();
        let mut separators = Vec::new();
        let mut cur = String::new();
        let mut start = 0;
        let flush = |cur: &mut String, start: usize, parts: &mut Vec<u32>| -> Result<()> {
            match cur.trim().parse::<u32>() {
                Ok(p) if p > 0 => {
                    parts.push(p);
                    cur.clear();
                    Ok(())
                }
                _ => Err(Error::Parse {
                    pos: start,
                    msg: "expected a positive part".into(),
                }),
            }
        };
        for (i, c) in s.char_indices() {
            match c {
                ',' | '|' => {
                    flush(&mut cur, start, &mut parts)?;
                    separators.push(if c == ',' {
                        Separator::Comma
                    } else {
                        Separator::Bar
                    });
                    start = i + 1;
                }
                _ => cur.push(c),
            }
        }
        if s.is_empty() {
            return Ok(SegmentedComposition::empty());
        }
        flush(&mut cur, start, &mut parts)?;
        SegmentedComposition::new(parts, separators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(s: &str) -> SegmentedComposition {
        s.parse().unwrap()
    }

    #[test]
    fn sign_map_examples() {
        let w = [1, 6, 1, 5, 1, 1, 6, 2, 4, 4, 5, 4, 3];
        let c = sc_of_word(&w);
        assert_eq!(c.sign_string(), "<><>=<><=<>>");
        assert_eq!(c, sc("2|2|1,2|2,2|1|1"));
        assert_eq!(sc_of_word(&[1, 2]), sc("2"));
        assert_eq!(sc_of_word(&[2, 1]), sc("1|1"));
        assert_eq!(sc_of_word(&[1, 1]), sc("1,1"));
        assert_eq!(sc_of_word(&[2, 2, 3, 1]), sc("1,2|1"));
    }

    #[test]
    fn parse_and_print() {
        let c = sc("2,1|2|1,2");
        assert_eq!(c.to_string(), "2,1|2|1,2");
        assert_eq!(c.degree(), 8);
        assert_eq!(sc("=<>"), sc("1,2|1"));
        assert_eq!(sc("(1,2|1)"), sc("1,2|1"));
        assert!("1,,2".parse::<SegmentedComposition>().is_err());
        assert!("0|1".parse::<SegmentedComposition>().is_err());
    }

    #[test]
    fn joins() {
        let a = sc("1|2,1");
        let b = sc("3,1");
        assert_eq!(a.glue(&b), sc("1|2,4,1"));
        assert_eq!(a.comma_join(&b), sc("1|2,1,3,1"));
        assert_eq!(a.bar_join(&b), sc("1|2,1|3,1"));
        assert_eq!(a.glue(&SegmentedComposition::empty()), a);
    }

    #[test]
    fn counts_are_powers_of_three() {
        for n in 1..=7 {
            let all = enumerate_segmented_compositions(n);
            assert_eq!(all.len(), 3usize.pow(n as u32 - 1));
            assert!(all.windows(2).all(|p| p[0] < p[1]));
            for c in &all {
                assert_eq!(SegmentedComposition::from_signs(&c.signs()), *c);
            }
        }
    }
}
