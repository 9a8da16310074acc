//! Triangular change of basis, class collection and rank.

use super::{Basis, Element, Q};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Debug;

/// Rewrites `x` in a basis whose elements expand unitriangularly in the
/// basis of `x`.
///
/// `expansion(k)` must be `k` with coefficient 1 plus keys strictly smaller
/// than `k` under `order`. Terms are peeled off from the top.
pub fn unitriangular_invert<K: Ord + Clone + Debug>(
    x: &Element<K>,
    expansion: impl Fn(&K) -> Element<K>,
    order: impl Fn(&K, &K) -> Ordering,
    out_basis: Basis,
) -> Result<Element<K>> {
    let mut rest = x.clone();
    let mut out = Element::zero(out_basis);
    while !rest.is_zero() {
        let top = rest
            .keys()
            .max_by(|a, b| order(a, b))
            .cloned()
            .expect("nonempty");
        let c = rest.coefficient(&top);
        let e = expansion(&top);
        if e.coefficient(&top) != Q::one() {
            return Err(Error::NonTriangular(format!(
                "expansion of {top:?} does not contain it with coefficient 1"
            )));
        }
        if let Some(bad) = e
            .keys()
            .find(|k| *k != &top && order(k, &top) != Ordering::Less)
        {
            return Err(Error::NonTriangular(format!(
                "expansion of {top:?} contains {bad:?}, which is not smaller"
            )));
        }
        for (k, v) in e.iter() {
            rest.add_term(k.clone(), -(v * &c));
        }
        out.add_term(top, c);
    }
    Ok(out)
}

/// Groups the terms of `x` into classes and returns the element on class
/// keys. Fails unless each class present in the support appears in full
/// with a constant coefficient.
pub fn collect_classes<K, C>(
    x: &Element<K>,
    out_basis: Basis,
    classify: impl Fn(&K) -> C,
    class_size: impl Fn(&C) -> usize,
) -> Result<Element<C>>
where
    K: Ord + Clone + Debug,
    C: Ord + Clone + Debug,
{
    let mut groups: BTreeMap<C, (Q, usize)> = BTreeMap::new();
    for (k, v) in x.iter() {
        let cls = classify(k);
        match groups.get_mut(&cls) {
            None => {
                groups.insert(cls, (v.clone(), 1));
            }
            Some((c, n)) => {
                if c != v {
                    return Err(Error::NotSaturated(format!(
                        "coefficients differ inside the class of {k:?}"
                    )));
                }
                *n += 1;
            }
        }
    }
    let mut out = Element::zero(out_basis);
    for (cls, (c, n)) in groups {
        let size = class_size(&cls);
        if n != size {
            return Err(Error::NotSaturated(format!(
                "class {cls:?} has {size} words but {n} appear"
            )));
        }
        out.add_term(cls, c);
    }
    Ok(out)
}

/// Row echelon form over the rationals, rows keyed by their largest key.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord> {
    pivots: BTreeMap<K, BTreeMap<K, Q>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds `v`; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, v: &Element<K>) -> bool {
        let mut row: BTreeMap<K, Q> = v.terms().clone();
        loop {
            let Some((lead, c)) = row.iter().next_back().map(|(k, c)| (k.clone(), c.clone()))
            else {
                return false;
            };
            match self.pivots.get(&lead) {
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(p) => {
                    let f = &c / &p[&lead];
                    for (k, pv) in p {
                        let e = row.entry(k.clone()).or_insert_with(Q::zero);
                        *e -= pv * &f;
                        if e.is_zero() {
                            row.remove(k);
                        }
                    }
                }
            }
        }
    }
}

/// Rank over the rationals of a family of vectors.
pub fn rank<K: Ord + Clone>(vectors: &[Element<K>]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}
