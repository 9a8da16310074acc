//! Graded connected bialgebras and their tridendriform refinements.

use super::{Basis, BasisKey, Element, Tensor, Q};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// A graded connected bialgebra given on a basis.
///
/// Implementors supply the product of two keys of positive degree and the
/// full coproduct of a key of positive degree; the unit is handled here.
pub trait GradedBialgebra {
    type Key: BasisKey;

    fn basis(&self) -> Basis;

    fn mul_keys(&self, a: &Self::Key, b: &Self::Key) -> Element<Self::Key>;

    fn comul_key(&self, a: &Self::Key) -> Tensor<Self::Key>;

    fn key(&self, k: Self::Key) -> Element<Self::Key> {
        Element::from_key(self.basis(), k)
    }

    fn one(&self) -> Element<Self::Key> {
        self.key(Self::Key::unit())
    }

    fn check(&self, x: &Element<Self::Key>) -> Result<()> {
        if x.basis() != self.basis() {
            return Err(Error::BasisMismatch {
                left: self.basis(),
                right: x.basis(),
            });
        }
        Ok(())
    }

    fn mul(&self, x: &Element<Self::Key>, y: &Element<Self::Key>) -> Result<Element<Self::Key>> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.bilinear_extend(y, self.basis(), |a, b| {
            if a.is_unit() {
                self.key(b.clone())
            } else if b.is_unit() {
                self.key(a.clone())
            } else {
                self.mul_keys(a, b)
            }
        }))
    }

    fn comul(&self, x: &Element<Self::Key>) -> Result<Tensor<Self::Key>> {
        self.check(x)?;
        Ok(x.linear_extend(self.basis(), |a| {
            if a.is_unit() {
                Element::from_key(self.basis(), (a.clone(), a.clone()))
            } else {
                self.comul_key(a)
            }
        }))
    }

    /// `Δ(x) - x ⊗ 1 - 1 ⊗ x` on the augmentation ideal.
    fn reduced_comul(&self, x: &Element<Self::Key>) -> Result<Tensor<Self::Key>> {
        Ok(self.comul(x)?.filter(|(a, b)| !a.is_unit() && !b.is_unit()))
    }

    fn counit(&self, x: &Element<Self::Key>) -> Q {
        x.coefficient(&Self::Key::unit())
    }

    /// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    fn tensor_mul(
        &self,
        x: &Tensor<Self::Key>,
        y: &Tensor<Self::Key>,
    ) -> Result<Tensor<Self::Key>> {
        let basis = self.basis();
        x.try_bilinear_extend(y, basis, |(a, b), (c, d)| {
            let left = self.mul(&self.key(a.clone()), &self.key(c.clone()))?;
            let right = self.mul(&self.key(b.clone()), &self.key(d.clone()))?;
            Ok(left.tensor(&right))
        })
    }

    /// Applies `f ⊗ g` to a tensor and multiplies the factors.
    fn mul_tensor_with(
        &self,
        t: &Tensor<Self::Key>,
        f: impl Fn(&Self::Key) -> Element<Self::Key>,
        g: impl Fn(&Self::Key) -> Element<Self::Key>,
    ) -> Result<Element<Self::Key>> {
        let mut out = Element::zero(self.basis());
        for ((a, b), c) in t.iter() {
            let p = self.mul(&f(a), &g(b))?;
            out.add_scaled(&p, c)?;
        }
        Ok(out)
    }

    /// The antipode, by the recursion `S(x) = -x - Σ S(x') x''` over the
    /// reduced coproduct.
    fn antipode(&self, x: &Element<Self::Key>) -> Result<Element<Self::Key>> {
        self.check(x)?;
        let mut memo: BTreeMap<Self::Key, Element<Self::Key>> = BTreeMap::new();
        x.try_linear_extend(self.basis(), |k| self.antipode_key(k, &mut memo))
    }

    #[doc(hidden)]
    fn antipode_key(
        &self,
        k: &Self::Key,
        memo: &mut BTreeMap<Self::Key, Element<Self::Key>>,
    ) -> Result<Element<Self::Key>> {
        if let Some(s) = memo.get(k) {
            return Ok(s.clone());
        }
        let mut out = -&self.key(k.clone());
        if !k.is_unit() {
            for ((a, b), c) in self.comul_key(k).iter() {
                if a.is_unit() || b.is_unit() {
                    continue;
                }
                let sa = self.antipode_key(a, memo)?;
                let p = self.mul(&sa, &self.key(b.clone()))?;
                out.add_scaled(&p, &-c.clone())?;
            }
        } else {
            out = self.one();
        }
        memo.insert(k.clone(), out.clone());
        Ok(out)
    }
}

/// A bialgebra whose product splits into three pieces `≺ ∘ ≻` and whose
/// reduced coproduct splits into two pieces `Δ≺ + Δ≻`.
pub trait Tridendriform: GradedBialgebra {
    /// `[a ≺ b, a ∘ b, a ≻ b]` for keys of positive degree.
    fn split_keys(&self, a: &Self::Key, b: &Self::Key) -> [Element<Self::Key>; 3];

    /// `(Δ≺ a, Δ≻ a)` for a key of positive degree.
    fn half_comul_key(&self, a: &Self::Key) -> (Tensor<Self::Key>, Tensor<Self::Key>);

    #[doc(hidden)]
    fn split_part(
        &self,
        x: &Element<Self::Key>,
        y: &Element<Self::Key>,
        part: usize,
        op: &'static str,
    ) -> Result<Element<Self::Key>> {
        self.check(x)?;
        self.check(y)?;
        if x.keys().chain(y.keys()).any(BasisKey::is_unit) {
            return Err(Error::ZeroDegree { op });
        }
        Ok(x.bilinear_extend(y, self.basis(), |a, b| {
            let [l, m, r] = self.split_keys(a, b);
            [l, m, r].into_iter().nth(part).expect("three parts")
        }))
    }

    fn tri_left(&self, x: &Element<Self::Key>, y: &Element<Self::Key>) -> Result<Element<Self::Key>> {
        self.split_part(x, y, 0, "tri_left")
    }

    fn tri_mid(&self, x: &Element<Self::Key>, y: &Element<Self::Key>) -> Result<Element<Self::Key>> {
        self.split_part(x, y, 1, "tri_mid")
    }

    fn tri_right(&self, x: &Element<Self::Key>, y: &Element<Self::Key>) -> Result<Element<Self::Key>> {
        self.split_part(x, y, 2, "tri_right")
    }

    fn dend_left(&self, x: &Element<Self::Key>, y: &Element<Self::Key>) -> Result<Element<Self::Key>> {
        self.tri_left(x, y)
    }

    /// `x ∘ y + x ≻ y`.
    fn dend_right(&self, x: &Element<Self::Key>, y: &Element<Self::Key>) -> Result<Element<Self::Key>> {
        Ok(&self.tri_mid(x, y)? + &self.tri_right(x, y)?)
    }

    #[doc(hidden)]
    fn codend_part(&self, x: &Element<Self::Key>, left: bool, op: &'static str) -> Result<Tensor<Self::Key>> {
        self.check(x)?;
        if x.keys().any(BasisKey::is_unit) {
            return Err(Error::ZeroDegree { op });
        }
        Ok(x.linear_extend(self.basis(), |a| {
            let (l, r) = self.half_comul_key(a);
            if left {
                l
            } else {
                r
            }
        }))
    }

    fn codend_left(&self, x: &Element<Self::Key>) -> Result<Tensor<Self::Key>> {
        self.codend_part(x, true, "codend_left")
    }

    fn codend_right(&self, x: &Element<Self::Key>) -> Result<Tensor<Self::Key>> {
        self.codend_part(x, false, "codend_right")
    }
}
