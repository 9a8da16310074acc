//! Graded free modules over the rationals.
//!
//! An [`Element`] is a finite linear combination of basis keys carrying a
//! [`Basis`] tag. Tensors are elements keyed by pairs (or triples) of keys.
//! Zero coefficients are never stored.

mod hopf;
mod linalg;
mod text;

pub use hopf::{GradedBialgebra, Tridendriform};
pub use linalg::{collect_classes, rank, unitriangular_invert, Echelon};
pub use text::{parse_element, JsonTerm};

use crate::combinat::{PackedWord, SegmentedComposition};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Basis {
    /// Monomial basis of `WQSym`.
    M,
    /// Sums over lower sets of the pseudo-permutohedron.
    SW,
    /// Sums over upper sets of the pseudo-permutohedron.
    EW,
    /// Quasi-ribbon basis of `WQSym`.
    Phi,
    /// Dual of `M`, realized on maximally unpacked parking functions.
    F,
    /// Dual of `Phi`.
    R,
    /// Tree classes in `TD`.
    MM,
    /// Segmented-composition classes in `TC`.
    MC,
    /// Dual basis of `MM` or `MC`.
    S,
}

impl Basis {
    pub const ALL: [Basis; 9] = [
        Basis::M,
        Basis::SW,
        Basis::EW,
        Basis::Phi,
        Basis::F,
        Basis::R,
        Basis::MM,
        Basis::MC,
        Basis::S,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::SW => "SW",
            Basis::EW => "EW",
            Basis::Phi => "Phi",
            Basis::F => "F",
            Basis::R => "R",
            Basis::MM => "MM",
            Basis::MC => "MC",
            Basis::S => "S",
        }
    }

    pub fn from_name(s: &str) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.name() == s)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Keys indexing a graded basis.
pub trait BasisKey: Clone + Ord + fmt::Debug {
    fn degree(&self) -> usize;

    /// The degree-0 key.
    fn unit() -> Self;

    fn is_unit(&self) -> bool {
        self.degree() == 0
    }

    /// Text of the key alone, e.g. `212` or `2|13`.
    fn fmt_key(&self, basis: Basis) -> String;

    fn parse_key(s: &str, basis: Basis) -> Result<Self>;

    /// Text of the basis element, e.g. `M[212]`; the unit prints as `1`.
    fn fmt_term(&self, basis: Basis) -> String {
        if self.is_unit() {
            "1".to_string()
        } else {
            format!("{}[{}]", basis, self.fmt_key(basis))
        }
    }
}

impl BasisKey for PackedWord {
    fn degree(&self) -> usize {
        self.len()
    }

    fn unit() -> Self {
        PackedWord::empty()
    }

    fn fmt_key(&self, basis: Basis) -> String {
        match basis {
            Basis::Phi => crate::combinat::to_seg_perm(self).to_string(),
            _ => self.to_string(),
        }
    }

    fn parse_key(s: &str, basis: Basis) -> Result<Self> {
        match basis {
            Basis::Phi => Ok(crate::combinat::from_seg_perm(&s.parse()?)),
            Basis::M | Basis::SW | Basis::EW | Basis::F | Basis::R => s.parse(),
            other => Err(Error::Unsupported(format!(
                "basis {other} is not indexed by packed words"
            ))),
        }
    }
}

impl BasisKey for SegmentedComposition {
    fn degree(&self) -> usize {
        SegmentedComposition::degree(self)
    }

    fn unit() -> Self {
        SegmentedComposition::empty()
    }

    fn fmt_key(&self, basis: Basis) -> String {
        match basis {
            Basis::SW => crate::tc::canonical_word(self).to_string(),
            Basis::EW => crate::tc::second_canonical_word(self).to_string(),
            _ => self.to_string(),
        }
    }

    fn parse_key(s: &str, basis: Basis) -> Result<Self> {
        match basis {
            Basis::MC | Basis::S => s.parse(),
            Basis::SW => crate::tc::from_canonical_word(&s.parse()?),
            Basis::EW => crate::tc::from_second_canonical_word(&s.parse()?),
            other => Err(Error::Unsupported(format!(
                "basis {other} is not indexed by segmented compositions"
            ))),
        }
    }
}

impl<A: BasisKey, B: BasisKey> BasisKey for (A, B) {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }

    fn unit() -> Self {
        (A::unit(), B::unit())
    }

    fn fmt_key(&self, basis: Basis) -> String {
        self.fmt_term(basis)
    }

    fn parse_key(s: &str, basis: Basis) -> Result<Self> {
        let (a, b) = s.split_once('⊗').ok_or(Error::Parse {
            pos: 0,
            msg: "expected `⊗`".into(),
        })?;
        Ok((A::parse_key(a.trim(), basis)?, B::parse_key(b.trim(), basis)?))
    }

    fn fmt_term(&self, basis: Basis) -> String {
        format!("{} ⊗ {}", self.0.fmt_term(basis), self.1.fmt_term(basis))
    }
}

impl<A: BasisKey, B: BasisKey, C: BasisKey> BasisKey for (A, B, C) {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree() + self.2.degree()
    }

    fn unit() -> Self {
        (A::unit(), B::unit(), C::unit())
    }

    fn fmt_key(&self, basis: Basis) -> String {
        self.fmt_term(basis)
    }

    fn parse_key(_s: &str, _basis: Basis) -> Result<Self> {
        Err(Error::Unsupported("parsing triple tensors".into()))
    }

    fn fmt_term(&self, basis: Basis) -> String {
        format!(
            "{} ⊗ {} ⊗ {}",
            self.0.fmt_term(basis),
            self.1.fmt_term(basis),
            self.2.fmt_term(basis)
        )
    }
}

/// A finite linear combination of basis keys.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element<K> {
    basis: Basis,
    terms: BTreeMap<K, Q>,
}

pub type Tensor<K> = Element<(K, K)>;
pub type Tensor3<K> = Element<(K, K, K)>;

impl<K: Ord + Clone> Element<K> {
    pub fn zero(basis: Basis) -> Self {
        Element {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_key(basis: Basis, key: K) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, Q::one());
        Element { basis, terms }
    }

    /// Sum of the given keys, repeated keys accumulating.
    pub fn from_keys(basis: Basis, keys: impl IntoIterator<Item = K>) -> Self {
        let mut e = Element::zero(basis);
        for k in keys {
            e.add_term(k, Q::one());
        }
        e
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (K, Q)>) -> Self {
        let mut e = Element::zero(basis);
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<K, Q> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Q)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &K) -> Q {
        self.terms.get(key).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, key: K, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c * other` into `self`.
    pub fn add_scaled(&mut self, other: &Element<K>, c: &Q) -> Result<()> {
        self.check_basis(other)?;
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
        Ok(())
    }

    fn check_basis(&self, other: &Element<K>) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis,
                right: other.basis,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Element<K>) -> Result<Element<K>> {
        let mut out = self.clone();
        out.add_scaled(other, &Q::one())?;
        Ok(out)
    }

    pub fn try_sub(&self, other: &Element<K>) -> Result<Element<K>> {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one())?;
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> Element<K> {
        if c.is_zero() {
            return Element::zero(self.basis);
        }
        Element {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Same coefficients, relabeled basis tag.
    pub fn with_basis(mut self, basis: Basis) -> Element<K> {
        self.basis = basis;
        self
    }

    /// Extends a key-level rule linearly.
    pub fn linear_extend<K2: Ord + Clone>(
        &self,
        basis: Basis,
        mut rule: impl FnMut(&K) -> Element<K2>,
    ) -> Element<K2> {
        let mut out = Element::zero(basis);
        for (k, c) in &self.terms {
            let image = rule(k);
            for (k2, v) in image.terms {
                out.add_term(k2, v * c);
            }
        }
        out
    }

    /// Fallible version of [`linear_extend`](Self::linear_extend).
    pub fn try_linear_extend<K2: Ord + Clone>(
        &self,
        basis: Basis,
        mut rule: impl FnMut(&K) -> Result<Element<K2>>,
    ) -> Result<Element<K2>> {
        let mut out = Element::zero(basis);
        for (k, c) in &self.terms {
            for (k2, v) in rule(k)?.terms {
                out.add_term(k2, v * c);
            }
        }
        Ok(out)
    }

    /// Extends a rule on pairs of keys bilinearly.
    pub fn bilinear_extend<K2: Ord + Clone, K3: Ord + Clone>(
        &self,
        other: &Element<K2>,
        basis: Basis,
        mut rule: impl FnMut(&K, &K2) -> Element<K3>,
    ) -> Element<K3> {
        let mut out = Element::zero(basis);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for (k, v) in rule(a, b).terms {
                    out.add_term(k, v * &c);
                }
            }
        }
        out
    }

    /// Fallible version of [`bilinear_extend`](Self::bilinear_extend).
    pub fn try_bilinear_extend<K2: Ord + Clone, K3: Ord + Clone>(
        &self,
        other: &Element<K2>,
        basis: Basis,
        mut rule: impl FnMut(&K, &K2) -> Result<Element<K3>>,
    ) -> Result<Element<K3>> {
        let mut out = Element::zero(basis);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for (k, v) in rule(a, b)?.terms {
                    out.add_term(k, v * &c);
                }
            }
        }
        Ok(out)
    }

    /// `self ⊗ other`.
    pub fn tensor<K2: Ord + Clone>(&self, other: &Element<K2>) -> Element<(K, K2)> {
        self.bilinear_extend(other, self.basis, |a, b| {
            Element::from_key(self.basis, (a.clone(), b.clone()))
        })
    }

    /// Keeps the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Element<K> {
        Element {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

impl<K: BasisKey> Element<K> {
    pub fn homogeneous_component(&self, degree: usize) -> Element<K> {
        self.filter(|k| k.degree() == degree)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(BasisKey::degree).max()
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(k, c)| JsonTerm::new(self.basis, k.fmt_key(self.basis), c))
            .collect()
    }
}

/// `<x, y>` with basis keys paired to their duals; keys of different degree
/// pair to zero automatically.
pub fn pairing<K: Ord + Clone>(x: &Element<K>, y: &Element<K>) -> Q {
    let (small, large) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    small
        .terms
        .iter()
        .filter_map(|(k, c)| large.terms.get(k).map(|d| c * d))
        .fold(Q::zero(), |acc, v| acc + v)
}

impl<K: Ord + Clone> std::ops::Add for &Element<K> {
    type Output = Element<K>;

    /// Panics on a basis mismatch; use [`Element::try_add`] to get an error.
    fn add(self, rhs: &Element<K>) -> Element<K> {
        self.try_add(rhs).expect("adding elements of different bases")
    }
}

impl<K: Ord + Clone> std::ops::Sub for &Element<K> {
    type Output = Element<K>;

    /// Panics on a basis mismatch; use [`Element::try_sub`] to get an error.
    fn sub(self, rhs: &Element<K>) -> Element<K> {
        self.try_sub(rhs).expect("subtracting elements of different bases")
    }
}

impl<K: Ord + Clone> std::ops::Neg for &Element<K> {
    type Output = Element<K>;

    fn neg(self) -> Element<K> {
        self.scale(&-Q::one())
    }
}

impl<K: Ord + Clone> std::ops::AddAssign<&Element<K>> for Element<K> {
    fn add_assign(&mut self, rhs: &Element<K>) {
        self.add_scaled(rhs, &Q::one())
            .expect("adding elements of different bases");
    }
}

impl<K: Ord + Clone> std::ops::SubAssign<&Element<K>> for Element<K> {
    fn sub_assign(&mut self, rhs: &Element<K>) {
        self.add_scaled(rhs, &-Q::one())
            .expect("subtracting elements of different bases");
    }
}

impl<K: BasisKey> fmt::Display for Element<K> {
    /// `M[212] + 3*M[1122] - 1/2*M[1]`; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let negative = c < &Q::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let term = k.fmt_term(self.basis);
            if abs.is_one() {
                f.write_str(&term)?;
            } else if k.is_unit() {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{term}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pw(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    fn m(keys: &[&str]) -> Element<PackedWord> {
        Element::from_keys(Basis::M, keys.iter().map(|s| pw(s)))
    }

    #[test]
    fn zero_pruning() {
        let x = m(&["212", "1122"]);
        assert!(x.scale(&q(0)).is_zero());
        assert!((&x + &x.scale(&q(-1))).is_zero());
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn basis_mismatch_is_an_error() {
        let x = m(&["1"]);
        let y = Element::from_key(Basis::Phi, pw("1"));
        assert_eq!(
            x.try_add(&y),
            Err(Error::BasisMismatch {
                left: Basis::M,
                right: Basis::Phi
            })
        );
    }

    #[test]
    fn pairing_is_the_dual_basis_axiom() {
        let a = Element::from_key(Basis::M, pw("212"));
        let b = Element::from_key(Basis::F, pw("212"));
        let c = Element::from_key(Basis::F, pw("122"));
        assert_eq!(pairing(&a, &b), q(1));
        assert_eq!(pairing(&a, &c), q(0));
        assert_eq!(pairing(&m(&["1", "12"]), &m(&["12", "21"]).scale(&q(3))), q(3));
    }

    #[test]
    fn display_forms() {
        let mut x = m(&["212"]);
        x.add_term(pw("1122"), q(3));
        x.add_term(pw("1"), q(-1));
        assert_eq!(x.to_string(), "-M[1] + M[212] + 3*M[1122]");
        let phi = Element::from_key(Basis::Phi, pw("212"));
        assert_eq!(phi.to_string(), "Phi[2|13]");
        let t = m(&["", "1"]).tensor(&m(&["", "11"]));
        assert_eq!(t.to_string(), "1 ⊗ 1 + 1 ⊗ M[11] + M[1] ⊗ 1 + M[1] ⊗ M[11]");
        assert_eq!(Element::<PackedWord>::zero(Basis::M).to_string(), "0");
        let half = Element::from_terms(Basis::M, [(pw("1"), Q::new(1.into(), 2.into()))]);
        assert_eq!(half.to_string(), "1/2*M[1]");
    }

    #[test]
    fn bilinear_extension_respects_grading() {
        let x = m(&["1", "12"]);
        let y = m(&["11"]);
        let prod = x.bilinear_extend(&y, Basis::M, |a, b| {
            Element::from_keys(Basis::M, crate::combinat::convolution_split(a, b))
        });
        assert!(prod.keys().all(|k| k.len() == 3 || k.len() == 4));
        assert_eq!(prod.homogeneous_component(3).len(), 3);
    }
}
