//! The pseudo-permutohedron: packed words ordered by their tables of full
//! and half inversions.

use crate::combinat::{enumerate_packed_words, Letter, PackedWord};
use crate::error::{Error, Result};
use crate::freemod::Q;
use num_bigint::BigInt;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::OnceLock;

/// Inversion values over pairs of positions `p < q`, in lexicographic pair
/// order, doubled: 2 for `u_p > u_q`, 1 for `u_p = u_q`, 0 otherwise.
pub type InversionTable = Vec<u8>;

pub fn inversion_table(u: &PackedWord) -> InversionTable {
    let w = u.letters();
    let n = w.len();
    let mut t = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for p in 0..n {
        for q in p + 1..n {
            t.push(match w[p].cmp(&w[q]) {
                Ordering::Greater => 2,
                Ordering::Equal => 1,
                Ordering::Less => 0,
            });
        }
    }
    t
}

/// Twice the number of inversions (half inversions count one).
pub fn inv_count_doubled(u: &PackedWord) -> usize {
    inversion_table(u).iter().map(|&x| x as usize).sum()
}

/// Number of inversions, a half-integer.
pub fn inv_count(u: &PackedWord) -> Q {
    Q::new(BigInt::from(inv_count_doubled(u)), BigInt::from(2))
}

pub fn leq(u: &PackedWord, v: &PackedWord) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::DegreeMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(table_leq(&inversion_table(u), &inversion_table(v)))
}

fn table_leq(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// A linear extension of the order: inversion count, then the word.
pub fn linear_extension_cmp(u: &PackedWord, v: &PackedWord) -> Ordering {
    inv_count_doubled(u)
        .cmp(&inv_count_doubled(v))
        .then_with(|| u.cmp(v))
}

/// The covers of `u` going up.
///
/// Merge: when every `i - 1` lies left of every `i`, each letter `j >= i`
/// becomes `j - 1`. Split: for a letter `i` occurring `k >= 2` times and
/// `1 <= j < k`, the `j` leftmost `i` become `i + 1` and larger letters
/// are raised by one.
pub fn successors(u: &PackedWord) -> Vec<PackedWord> {
    let w = u.letters();
    let m = u.max_letter();
    let mut out = BTreeSet::new();
    for i in 2..=m {
        let last_prev = w.iter().rposition(|&a| a == i - 1);
        let first_cur = w.iter().position(|&a| a == i);
        if let (Some(l), Some(f)) = (last_prev, first_cur) {
            if l < f {
                let v: Vec<Letter> = w.iter().map(|&a| if a >= i { a - 1 } else { a }).collect();
                out.insert(PackedWord::from_vec_unchecked(v));
            }
        }
    }
    for i in 1..=m {
        let positions: Vec<usize> = (0..w.len()).filter(|&p| w[p] == i).collect();
        for j in 1..positions.len() {
            let mut v: Vec<Letter> = w.iter().map(|&a| if a > i { a + 1 } else { a }).collect();
            for &p in &positions[..j] {
                v[p] = i + 1;
            }
            out.insert(PackedWord::from_vec_unchecked(v));
        }
    }
    out.into_iter().collect()
}

#[derive(Clone, Debug)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }
}

/// A finite set of packed words of one degree with the induced order.
#[derive(Clone, Debug)]
pub struct Poset {
    elems: Vec<PackedWord>,
    index: BTreeMap<PackedWord, usize>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
}

impl Poset {
    /// Elements are sorted by the linear extension, so `i < j` whenever
    /// `elems[i] < elems[j]` in the order.
    pub fn new(mut elems: Vec<PackedWord>) -> Result<Self> {
        elems.sort_by(linear_extension_cmp);
        elems.dedup();
        if let Some(w) = elems.windows(2).find(|p| p[0].len() != p[1].len()) {
            return Err(Error::DegreeMismatch {
                left: w[0].len(),
                right: w[1].len(),
            });
        }
        let tables: Vec<InversionTable> = elems.iter().map(inversion_table).collect();
        let n = elems.len();
        let mut up = vec![BitSet::new(n); n];
        let mut down = vec![BitSet::new(n); n];
        for i in 0..n {
            for j in i..n {
                if table_leq(&tables[i], &tables[j]) {
                    up[i].set(j);
                    down[j].set(i);
                }
            }
        }
        let index = elems.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(Poset {
            elems,
            index,
            up,
            down,
        })
    }

    /// All packed words of degree `n`.
    pub fn permutohedron(n: usize) -> Result<Self> {
        Poset::new(enumerate_packed_words(n))
    }

    pub fn elements(&self) -> &[PackedWord] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, u: &PackedWord) -> bool {
        self.index.contains_key(u)
    }

    fn idx(&self, u: &PackedWord) -> Result<usize> {
        self.index
            .get(u)
            .copied()
            .ok_or_else(|| Error::invalid_key(u.to_string(), "not an element of this poset"))
    }

    pub fn leq(&self, u: &PackedWord, v: &PackedWord) -> Result<bool> {
        Ok(self.up[self.idx(u)?].get(self.idx(v)?))
    }

    /// `{v : v <= u}`.
    pub fn lower_set(&self, u: &PackedWord) -> Result<Vec<PackedWord>> {
        Ok(self.down[self.idx(u)?].iter().map(|k| self.elems[k].clone()).collect())
    }

    /// `{v : u <= v}`.
    pub fn upper_set(&self, u: &PackedWord) -> Result<Vec<PackedWord>> {
        Ok(self.up[self.idx(u)?].iter().map(|k| self.elems[k].clone()).collect())
    }

    /// `[u, v]`, in linear-extension order.
    pub fn interval(&self, u: &PackedWord, v: &PackedWord) -> Result<Vec<PackedWord>> {
        let (i, j) = (self.idx(u)?, self.idx(v)?);
        if !self.up[i].get(j) {
            return Err(Error::Incomparable(u.to_string(), v.to_string()));
        }
        Ok(self.up[i]
            .and(&self.down[j])
            .iter()
            .map(|k| self.elems[k].clone())
            .collect())
    }

    fn least_of(&self, s: &BitSet, cones: &[BitSet]) -> Option<usize> {
        let size = s.count();
        s.iter().find(|&x| cones[x].count() >= size && s.and(&cones[x]).count() == size)
    }

    fn join_idx(&self, i: usize, j: usize) -> Option<usize> {
        self.least_of(&self.up[i].and(&self.up[j]), &self.up)
    }

    fn meet_idx(&self, i: usize, j: usize) -> Option<usize> {
        self.least_of(&self.down[i].and(&self.down[j]), &self.down)
    }

    /// Least upper bound, if it exists in this poset.
    pub fn join(&self, u: &PackedWord, v: &PackedWord) -> Result<Option<PackedWord>> {
        Ok(self
            .join_idx(self.idx(u)?, self.idx(v)?)
            .map(|k| self.elems[k].clone()))
    }

    /// Greatest lower bound, if it exists in this poset.
    pub fn meet(&self, u: &PackedWord, v: &PackedWord) -> Result<Option<PackedWord>> {
        Ok(self
            .meet_idx(self.idx(u)?, self.idx(v)?)
            .map(|k| self.elems[k].clone()))
    }

    /// Every pair has a meet and a join.
    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.join_idx(i, j).is_some() && self.meet_idx(i, j).is_some()))
    }

    pub fn minimum(&self) -> Option<&PackedWord> {
        (0..self.len())
            .find(|&i| self.up[i].count() == self.len())
            .map(|i| &self.elems[i])
    }

    pub fn maximum(&self) -> Option<&PackedWord> {
        (0..self.len())
            .find(|&i| self.down[i].count() == self.len())
            .map(|i| &self.elems[i])
    }

    pub fn mobius(&self, u: &PackedWord, v: &PackedWord) -> Result<i64> {
        let (i, j) = (self.idx(u)?, self.idx(v)?);
        if !self.up[i].get(j) {
            return Err(Error::Incomparable(u.to_string(), v.to_string()));
        }
        // Interval elements come in linear-extension order.
        let inside: Vec<usize> = self.up[i].and(&self.down[j]).iter().collect();
        let mut mu: BTreeMap<usize, i64> = BTreeMap::new();
        for &z in &inside {
            let val = if z == i {
                1
            } else {
                -inside
                    .iter()
                    .take_while(|&&y| y != z)
                    .filter(|&&y| self.down[z].get(y))
                    .map(|y| mu[y])
                    .sum::<i64>()
            };
            mu.insert(z, val);
        }
        Ok(mu[&j])
    }

    /// Covering pairs `(lower, upper)`.
    pub fn covers(&self) -> Vec<(PackedWord, PackedWord)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in self.up[i].iter().filter(|&j| j != i) {
                let between = self.up[i].and(&self.down[j]).count();
                if between == 2 {
                    out.push((self.elems[i].clone(), self.elems[j].clone()));
                }
            }
        }
        out
    }

    /// Hasse diagram in DOT, edges pointing up.
    pub fn hasse_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for w in &self.elems {
            let _ = writeln!(s, "  \"{w}\";");
        }
        for (a, b) in self.covers() {
            let _ = writeln!(s, "  \"{a}\" -> \"{b}\";");
        }
        s.push_str("}\n");
        s
    }

    pub fn hasse_json(&self) -> HasseJson {
        HasseJson {
            nodes: self.elems.iter().map(ToString::to_string).collect(),
            edges: self
                .covers()
                .into_iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HasseJson {
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String)>,
}

/// Cached pseudo-permutohedra up to degree 6.
pub fn permutohedron(n: usize) -> Result<&'static Poset> {
    const CACHED: usize = 6;
    static CACHE: [OnceLock<Poset>; CACHED + 1] = [const { OnceLock::new() }; CACHED + 1];
    if n > CACHED {
        return Err(Error::TooLarge {
            what: "cached pseudo-permutohedron degree",
            requested: n,
            limit: CACHED,
        });
    }
    Ok(CACHE[n].get_or_init(|| Poset::permutohedron(n).expect("one degree")))
}

/// `{v : v <= u}` over all packed words of the degree of `u`.
pub fn lower_set(u: &PackedWord) -> Vec<PackedWord> {
    cone(u, true)
}

/// `{v : u <= v}` over all packed words of the degree of `u`.
pub fn upper_set(u: &PackedWord) -> Vec<PackedWord> {
    cone(u, false)
}

fn cone(u: &PackedWord, below: bool) -> Vec<PackedWord> {
    if let Ok(p) = permutohedron(u.len()) {
        let set = if below { p.lower_set(u) } else { p.upper_set(u) };
        return set.expect("u has the poset's degree");
    }
    let tu = inversion_table(u);
    enumerate_packed_words(u.len())
        .into_iter()
        .filter(|v| {
            let tv = inversion_table(v);
            if below {
                table_leq(&tv, &tu)
            } else {
                table_leq(&tu, &tv)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::VecDeque;

    fn pw(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    fn words(list: &[&str]) -> Vec<PackedWord> {
        list.iter().map(|s| pw(s)).collect()
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(inv_count(&pw("23211334")), Q::new(19.into(), 2.into()));
        assert_eq!(inv_count_doubled(&PackedWord::identity(5)), 0);
        assert_eq!(inv_count_doubled(&PackedWord::reversed_identity(5)), 20);
    }

    #[test]
    fn small_comparisons() {
        assert!(leq(&pw("123"), &pw("112")).unwrap());
        assert!(leq(&pw("112"), &pw("213")).unwrap());
        assert!(leq(&pw("132"), &pw("121")).unwrap());
        assert!(leq(&pw("121"), &pw("231")).unwrap());
        assert!(!leq(&pw("213"), &pw("112")).unwrap());
        assert!(leq(&pw("1"), &pw("12")).is_err());
    }

    #[test]
    fn successor_examples() {
        assert_eq!(
            successors(&pw("44253313")),
            {
                let mut v = words(&["33242212", "44243313", "55264313", "55264413", "54263313"]);
                v.sort();
                v
            }
        );
        assert_eq!(successors(&pw("123")), words(&["112", "122"]));
        assert!(successors(&pw("1")).is_empty());
    }

    /// The reflexive-transitive closure of the successor relation.
    fn closure(n: usize) -> BTreeSet<(PackedWord, PackedWord)> {
        let mut out = BTreeSet::new();
        for u in enumerate_packed_words(n) {
            let mut seen = BTreeSet::from([u.clone()]);
            let mut queue = VecDeque::from([u.clone()]);
            while let Some(x) = queue.pop_front() {
                for y in successors(&x) {
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
            out.extend(seen.into_iter().map(|v| (u.clone(), v)));
        }
        out
    }

    #[test]
    fn successor_closure_is_the_table_order() {
        for n in 0..=4 {
            let p = permutohedron(n).unwrap();
            let mut by_table = BTreeSet::new();
            for u in p.elements() {
                for v in p.elements() {
                    if p.leq(u, v).unwrap() {
                        by_table.insert((u.clone(), v.clone()));
                    }
                }
            }
            assert_eq!(closure(n), by_table, "degree {n}");
        }
    }

    #[test]
    fn covers_are_successors() {
        for n in 1..=4 {
            let p = permutohedron(n).unwrap();
            let mut from_covers: BTreeMap<PackedWord, Vec<PackedWord>> = BTreeMap::new();
            for (a, b) in p.covers() {
                from_covers.entry(a).or_default().push(b);
            }
            for u in p.elements() {
                let mut got = from_covers.remove(u).unwrap_or_default();
                got.sort();
                assert_eq!(got, successors(u), "covers of {u}");
            }
        }
    }

    #[test]
    fn intervals_and_bounds() {
        let p = permutohedron(3).unwrap();
        let mut iv = p.interval(&pw("213"), &pw("321")).unwrap();
        iv.sort();
        assert_eq!(iv, words(&["211", "212", "213", "312", "321"]));
        assert_eq!(p.join(&pw("121"), &pw("212")).unwrap(), Some(pw("321")));
        assert_eq!(p.join(&pw("121"), &pw("121")).unwrap(), Some(pw("121")));
        assert_eq!(p.minimum(), Some(&pw("123")));
        assert_eq!(p.maximum(), Some(&pw("321")));
        assert!(matches!(
            p.interval(&pw("321"), &pw("123")),
            Err(Error::Incomparable(..))
        ));
        assert!(p.is_lattice());
    }

    #[test]
    fn mobius_values() {
        let p = permutohedron(2).unwrap();
        // 12 < 11 < 21, a chain.
        assert_eq!(p.mobius(&pw("12"), &pw("12")).unwrap(), 1);
        assert_eq!(p.mobius(&pw("12"), &pw("11")).unwrap(), -1);
        assert_eq!(p.mobius(&pw("12"), &pw("21")).unwrap(), 0);
        // Full degree-3 interval: sum of mu over [bottom, top] vanishes.
        let p3 = permutohedron(3).unwrap();
        let bottom = pw("123");
        let total: i64 = p3
            .elements()
            .iter()
            .map(|z| p3.mobius(&bottom, z).unwrap())
            .sum();
        assert_eq!(total, 0);
    }

    #[test]
    fn lattice_axioms_degree_four() {
        let p = permutohedron(4).unwrap();
        let e = p.elements();
        for a in e.iter().step_by(3) {
            for b in e.iter().step_by(5) {
                let j = p.join(a, b).unwrap().unwrap();
                let m = p.meet(a, b).unwrap().unwrap();
                assert_eq!(p.join(b, a).unwrap().unwrap(), j);
                assert_eq!(p.join(a, &m).unwrap().unwrap(), *a);
                assert_eq!(p.meet(a, &j).unwrap().unwrap(), *a);
            }
        }
    }

    #[test]
    fn dot_output() {
        let dot = permutohedron(2).unwrap().hasse_dot("P2");
        assert!(dot.contains("\"12\" -> \"11\";"));
        assert!(dot.contains("\"11\" -> \"21\";"));
        assert_eq!(dot.matches("->").count(), 2);
    }
}
