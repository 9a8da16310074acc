//! Subalgebras of `WQSym` spanned by sums of `M_u` over classes of packed
//! words.
//!
//! A [`WordClasses`] partitions packed words of each degree. The class sums
//! are computed through `WQSym`: expand to `M`, operate there, collect back,
//! failing loudly whenever a result is not a union of whole classes.

use crate::combinat::{biword_pack, enumerate_packed_words, Letter, PackedWord};
use crate::error::{Error, Result};
use crate::freemod::{
    collect_classes, Basis, BasisKey, Element, GradedBialgebra, Tensor, Tridendriform,
};
use crate::order::{linear_extension_cmp, lower_set, upper_set};
use crate::wqsym::{m_to_ew, m_to_sw, Wqsym};
use std::collections::BTreeMap;
use std::fmt::Debug;
use std::sync::Mutex;

/// The classes of one degree, each listed in increasing word order, with
/// the least and greatest word of each for a linear extension of the
/// pseudo-permutohedron.
#[derive(Debug)]
pub struct ClassTable<K> {
    pub classes: BTreeMap<K, Vec<PackedWord>>,
    pub lowest: BTreeMap<K, PackedWord>,
    pub highest: BTreeMap<K, PackedWord>,
}

/// Per-degree class tables, built on first use and kept for the process.
pub struct ClassTableCache<K: 'static> {
    tables: Mutex<BTreeMap<usize, &'static ClassTable<K>>>,
}

impl<K: Ord + Clone + Send + Sync + 'static> ClassTableCache<K> {
    pub const fn new() -> Self {
        ClassTableCache {
            tables: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn get(&self, n: usize, classify: impl Fn(&[Letter]) -> K) -> &'static ClassTable<K> {
        let mut tables = self.tables.lock().unwrap_or_else(|e| e.into_inner());
        tables.entry(n).or_insert_with(|| {
            let mut classes: BTreeMap<K, Vec<PackedWord>> = BTreeMap::new();
            for w in enumerate_packed_words(n) {
                classes.entry(classify(w.letters())).or_default().push(w);
            }
            let extreme = |pick: fn(std::slice::Iter<'_, PackedWord>) -> Option<&PackedWord>| {
                classes
                    .iter()
                    .map(|(k, ws)| (k.clone(), pick(ws.iter()).expect("nonempty class").clone()))
                    .collect()
            };
            let lowest = extreme(|it| it.min_by(|a, b| linear_extension_cmp(a, b)));
            let highest = extreme(|it| it.max_by(|a, b| linear_extension_cmp(a, b)));
            Box::leak(Box::new(ClassTable {
                classes,
                lowest,
                highest,
            }))
        })
    }
}

impl<K: Ord + Clone + Send + Sync + 'static> Default for ClassTableCache<K> {
    fn default() -> Self {
        Self::new()
    }
}

/// A partition of packed words compatible with the structure of `WQSym`.
pub trait WordClasses: Copy + Debug + Default {
    type Key: BasisKey + Send + Sync + 'static;

    /// Tag of the basis of class sums.
    fn sum_basis(&self) -> Basis;

    fn class_of(&self, w: &[Letter]) -> Self::Key;

    fn table(&self, n: usize) -> &'static ClassTable<Self::Key>;

    /// Greatest word of the class in the pseudo-permutohedron.
    fn canonical_word(&self, k: &Self::Key) -> PackedWord;

    /// Least word of the class in the pseudo-permutohedron.
    fn second_canonical_word(&self, k: &Self::Key) -> PackedWord;

    fn class_words(&self, k: &Self::Key) -> &'static [PackedWord] {
        self.table(k.degree())
            .classes
            .get(k)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    fn keys(&self, n: usize) -> Vec<Self::Key> {
        self.table(n).classes.keys().cloned().collect()
    }

    fn dim(&self, n: usize) -> usize {
        self.table(n).classes.len()
    }
}

/// Class sums in the `M` basis.
pub fn expand<C: WordClasses>(c: C, x: &Element<C::Key>) -> Element<PackedWord> {
    x.linear_extend(Basis::M, |k| {
        Element::from_keys(Basis::M, c.class_words(k).iter().cloned())
    })
}

/// Inverse of [`expand`]; fails unless the support is a union of classes
/// with constant coefficients.
pub fn collect<C: WordClasses>(c: C, x: &Element<PackedWord>) -> Result<Element<C::Key>> {
    collect_classes(
        x,
        c.sum_basis(),
        |w| c.class_of(w.letters()),
        |k| c.class_words(k).len(),
    )
}

pub fn expand_tensor<C: WordClasses>(
    c: C,
    t: &Tensor<C::Key>,
) -> Tensor<PackedWord> {
    t.linear_extend(Basis::M, |(a, b)| {
        let ea = expand(c, &Element::from_key(c.sum_basis(), a.clone()));
        let eb = expand(c, &Element::from_key(c.sum_basis(), b.clone()));
        ea.tensor(&eb)
    })
}

pub fn collect_tensor<C: WordClasses>(c: C, t: &Tensor<PackedWord>) -> Result<Tensor<C::Key>> {
    collect_classes(
        t,
        c.sum_basis(),
        |(a, b)| (c.class_of(a.letters()), c.class_of(b.letters())),
        |(a, b)| c.class_words(a).len() * c.class_words(b).len(),
    )
}

/// The subalgebra in the basis of class sums.
#[derive(Clone, Copy, Debug, Default)]
pub struct ClassSums<C>(pub C);

impl<C: WordClasses> GradedBialgebra for ClassSums<C> {
    type Key = C::Key;

    fn basis(&self) -> Basis {
        self.0.sum_basis()
    }

    fn mul_keys(&self, a: &C::Key, b: &C::Key) -> Element<C::Key> {
        let c = self.0;
        let p = Wqsym
            .mul(&expand(c, &self.key(a.clone())), &expand(c, &self.key(b.clone())))
            .expect("M basis");
        collect(c, &p).expect("class sums are closed under the product")
    }

    fn comul_key(&self, a: &C::Key) -> Tensor<C::Key> {
        let t = Wqsym.comul(&expand(self.0, &self.key(a.clone()))).expect("M basis");
        collect_tensor(self.0, &t).expect("class sums are closed under the coproduct")
    }
}

/// Tridendriform operations for partitions compatible with them.
pub trait TriCompatible: WordClasses {}

type WqsymOp = fn(&Wqsym, &Element<PackedWord>, &Element<PackedWord>) -> Result<Element<PackedWord>>;

impl<C: TriCompatible> Tridendriform for ClassSums<C> {
    fn split_keys(&self, a: &C::Key, b: &C::Key) -> [Element<C::Key>; 3] {
        let c = self.0;
        let (ea, eb) = (expand(c, &self.key(a.clone())), expand(c, &self.key(b.clone())));
        let ops: [WqsymOp; 3] = [Wqsym::tri_left, Wqsym::tri_mid, Wqsym::tri_right];
        ops.map(|op| {
            let p = op(&Wqsym, &ea, &eb).expect("positive degree");
            collect(c, &p).expect("class sums are closed under the partial products")
        })
    }

    fn half_comul_key(&self, a: &C::Key) -> (Tensor<C::Key>, Tensor<C::Key>) {
        let c = self.0;
        let e = expand(c, &self.key(a.clone()));
        let l = Wqsym.codend_left(&e).expect("positive degree");
        let r = Wqsym.codend_right(&e).expect("positive degree");
        (
            collect_tensor(c, &l).expect("class sums are closed under the half coproducts"),
            collect_tensor(c, &r).expect("class sums are closed under the half coproducts"),
        )
    }
}

/// The subalgebra in the basis `SW` indexed by canonical words:
/// `SW_w' SW_w'' = SW_{w'[max w''] w''}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CanonicalSw<C>(pub C);

/// The subalgebra in the basis `EW` indexed by second canonical words:
/// `EW_w' EW_w'' = EW_{w' w''[max w']}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CanonicalEw<C>(pub C);

/// `w'[max w''] · w''`.
pub fn sw_word(a: &PackedWord, b: &PackedWord) -> PackedWord {
    let mut letters: Vec<Letter> = a.letters().iter().map(|&x| x + b.max_letter()).collect();
    letters.extend_from_slice(b.letters());
    PackedWord::from_vec_unchecked(letters)
}

/// `w' · w''[max w']`.
pub fn ew_word(a: &PackedWord, b: &PackedWord) -> PackedWord {
    let mut letters = a.letters().to_vec();
    letters.extend(b.letters().iter().map(|&x| x + a.max_letter()));
    PackedWord::from_vec_unchecked(letters)
}

/// The class whose canonical word is `w`.
pub fn key_of_canonical<C: WordClasses>(c: C, w: &PackedWord) -> Result<C::Key> {
    let k = c.class_of(w.letters());
    if c.canonical_word(&k) != *w {
        return Err(Error::invalid_key(w.to_string(), "not a canonical word"));
    }
    Ok(k)
}

/// The class whose second canonical word is `w`.
pub fn key_of_second_canonical<C: WordClasses>(c: C, w: &PackedWord) -> Result<C::Key> {
    let k = c.class_of(w.letters());
    if c.second_canonical_word(&k) != *w {
        return Err(Error::invalid_key(w.to_string(), "not a second canonical word"));
    }
    Ok(k)
}

/// `SW`-element to class sums.
pub fn sw_to_sums<C: WordClasses>(c: C, x: &Element<C::Key>) -> Result<Element<C::Key>> {
    let m = x.linear_extend(Basis::M, |k| {
        Element::from_keys(Basis::M, lower_set(&c.canonical_word(k)))
    });
    collect(c, &m)
}

/// `EW`-element to class sums.
pub fn ew_to_sums<C: WordClasses>(c: C, x: &Element<C::Key>) -> Result<Element<C::Key>> {
    let m = x.linear_extend(Basis::M, |k| {
        Element::from_keys(Basis::M, upper_set(&c.second_canonical_word(k)))
    });
    collect(c, &m)
}

/// Class sums to the `SW` basis on canonical words.
pub fn sums_to_sw<C: WordClasses>(c: C, x: &Element<C::Key>) -> Result<Element<C::Key>> {
    let sw = m_to_sw(&expand(c, x))?;
    sw.try_linear_extend(Basis::SW, |w| {
        Ok(Element::from_key(Basis::SW, key_of_canonical(c, w)?))
    })
}

/// Class sums to the `EW` basis on second canonical words.
pub fn sums_to_ew<C: WordClasses>(c: C, x: &Element<C::Key>) -> Result<Element<C::Key>> {
    let ew = m_to_ew(&expand(c, x))?;
    ew.try_linear_extend(Basis::EW, |w| {
        Ok(Element::from_key(Basis::EW, key_of_second_canonical(c, w)?))
    })
}

fn map_tensor_factors<K: BasisKey>(
    t: &Tensor<K>,
    basis: Basis,
    f: impl Fn(&Element<K>) -> Result<Element<K>>,
    from: Basis,
) -> Result<Tensor<K>> {
    t.try_linear_extend(basis, |(a, b)| {
        let fa = f(&Element::from_key(from, a.clone()))?;
        let fb = f(&Element::from_key(from, b.clone()))?;
        Ok(fa.tensor(&fb).with_basis(basis))
    })
}

impl<C: WordClasses> GradedBialgebra for CanonicalSw<C> {
    type Key = C::Key;

    fn basis(&self) -> Basis {
        Basis::SW
    }

    fn mul_keys(&self, a: &C::Key, b: &C::Key) -> Element<C::Key> {
        let c = self.0;
        let w = sw_word(&c.canonical_word(a), &c.canonical_word(b));
        let k = key_of_canonical(c, &w).expect("canonical words are closed under the product");
        Element::from_key(Basis::SW, k)
    }

    fn comul_key(&self, a: &C::Key) -> Tensor<C::Key> {
        let c = self.0;
        let sums = sw_to_sums(c, &self.key(a.clone())).expect("class sums");
        let t = ClassSums(c).comul(&sums).expect("class basis");
        map_tensor_factors(&t, Basis::SW, |x| sums_to_sw(c, x), c.sum_basis())
            .expect("canonical words span")
    }
}

impl<C: WordClasses> GradedBialgebra for CanonicalEw<C> {
    type Key = C::Key;

    fn basis(&self) -> Basis {
        Basis::EW
    }

    fn mul_keys(&self, a: &C::Key, b: &C::Key) -> Element<C::Key> {
        let c = self.0;
        let w = ew_word(&c.second_canonical_word(a), &c.second_canonical_word(b));
        let k = key_of_second_canonical(c, &w)
            .expect("second canonical words are closed under the product");
        Element::from_key(Basis::EW, k)
    }

    fn comul_key(&self, a: &C::Key) -> Tensor<C::Key> {
        let c = self.0;
        let sums = ew_to_sums(c, &self.key(a.clone())).expect("class sums");
        let t = ClassSums(c).comul(&sums).expect("class basis");
        map_tensor_factors(&t, Basis::EW, |x| sums_to_ew(c, x), c.sum_basis())
            .expect("second canonical words span")
    }
}

/// The internal product on the dual basis `S` of class sums:
/// `S_a * S_b = S_{class(biword_pack(can a, can b))}`, zero across degrees.
pub fn internal_product<C: WordClasses>(
    c: C,
    x: &Element<C::Key>,
    y: &Element<C::Key>,
) -> Element<C::Key> {
    x.bilinear_extend(y, Basis::S, |a, b| {
        match biword_pack(&c.canonical_word(a), &c.canonical_word(b)) {
            Ok(w) => Element::from_key(Basis::S, c.class_of(w.letters())),
            Err(_) => Element::zero(Basis::S),
        }
    })
}
