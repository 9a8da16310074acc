//! Truncated power series with exact rational coefficients.

use crate::error::{Error, Result};
use crate::freemod::{q, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Largest truncation order accepted by the named series.
pub const MAX_ORDER: usize = 20;

/// `Σ_{i < order} c_i t^i`, everything from `t^order` on discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Q>,
}

impl Series {
    pub fn new(mut coeffs: Vec<Q>, order: usize) -> Self {
        coeffs.resize(order, Q::zero());
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Series::new(coeffs.iter().map(|&c| q(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::from_ints(&[1], order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Series::from_ints(&[0, 1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficients as integers; `None` if some coefficient is fractional.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    fn with_order(&self, order: usize) -> Series {
        Series::new(self.coeffs.clone(), order)
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series::new((0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(), n)
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let mut out = vec![Q::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inv(&self) -> Result<Series> {
        let n = self.order();
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::Unsupported("inverting a series without constant term".into()));
        }
        let mut out = vec![Q::zero(); n];
        if n > 0 {
            out[0] = c0.recip();
        }
        for k in 1..n {
            let s = (1..=k).fold(Q::zero(), |acc, i| acc + &self.coeffs[i] * &out[k - i]);
            out[k] = -s / &c0;
        }
        Ok(Series { coeffs: out })
    }

    pub fn div(&self, other: &Series) -> Result<Series> {
        Ok(self.mul(&other.inv()?))
    }

    /// Drops the constant term and divides by `t`, losing one order.
    pub fn div_t(&self) -> Result<Series> {
        if !self.coeff(0).is_zero() {
            return Err(Error::Unsupported("dividing by t a series with constant term".into()));
        }
        Ok(Series {
            coeffs: self.coeffs.iter().skip(1).cloned().collect(),
        })
    }

    /// Square root with positive constant term, by Newton iteration
    /// `y <- (y + x / y) / 2`, doubling the correct order at each step.
    pub fn sqrt(&self) -> Result<Series> {
        let n = self.order();
        let c0 = self.coeff(0);
        let r0 = rational_sqrt(&c0).ok_or_else(|| {
            Error::Unsupported(format!("constant term {c0} is not a rational square"))
        })?;
        if r0.is_zero() {
            return Err(Error::Unsupported("square root of a series with zero constant term".into()));
        }
        let half = Q::new(BigInt::one(), BigInt::from(2));
        let mut y = Series::new(vec![r0], n.min(1));
        let mut prec = 1;
        while prec < n {
            prec = (2 * prec).min(n);
            let yp = y.with_order(prec);
            let x = self.with_order(prec);
            y = yp.add(&x.div(&yp)?).scale(&half);
        }
        Ok(y.with_order(n))
    }
}

fn rational_sqrt(c: &Q) -> Option<Q> {
    if c.is_negative() {
        return None;
    }
    let (n, d) = (c.numer(), c.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Q::new(rn, rd))
}

impl fmt::Display for Series {
    /// Coefficients separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::TooLarge {
            what: "series order",
            requested: order,
            limit: MAX_ORDER,
        });
    }
    Ok(())
}

/// Ordered Bell numbers, from `a_n = Σ_{k=1}^{n} C(n, k) a_{n-k}`.
pub fn ordered_bell(order: usize) -> Result<Series> {
    check_order(order)?;
    let mut a: Vec<BigInt> = Vec::with_capacity(order);
    for n in 0..order {
        if n == 0 {
            a.push(BigInt::one());
            continue;
        }
        let mut s = BigInt::zero();
        let mut binom = BigInt::one();
        for k in 1..=n {
            binom = binom * BigInt::from(n - k + 1) / BigInt::from(k);
            s += &binom * &a[n - k];
        }
        a.push(s);
    }
    Ok(Series::new(a.into_iter().map(Q::from_integer).collect(), order))
}

/// Little Schröder numbers: `(1 + t - sqrt(1 - 6t + t^2)) / (4t)`.
pub fn schroeder(order: usize) -> Result<Series> {
    check_order(order)?;
    let n = order + 1;
    let disc = Series::from_ints(&[1, -6, 1], n);
    let num = Series::from_ints(&[1, 1], n).sub(&disc.sqrt()?);
    Ok(num.div_t()?.scale(&Q::new(BigInt::one(), BigInt::from(4))))
}

/// Generators of a free dendriform trialgebra with Hilbert series `OB(t)`:
/// `(OB - 1) / (2 OB^2 - OB)`.
pub fn conjecture_generators(order: usize) -> Result<Series> {
    check_order(order)?;
    let ob = ordered_bell(order)?;
    let one = Series::one(order);
    let den = ob.mul(&ob).scale(&q(2)).sub(&ob);
    ob.sub(&one).div(&den)
}

/// `1 + Σ_{n >= 1} 3^{n-1} t^n`.
pub fn powers_of_three(order: usize) -> Result<Series> {
    check_order(order)?;
    let mut c = Vec::with_capacity(order);
    let mut p = BigInt::one();
    for n in 0..order {
        if n <= 1 {
            c.push(Q::one());
        } else {
            p *= 3;
            c.push(Q::from_integer(p.clone()));
        }
    }
    Ok(Series::new(c, order))
}

/// Looks up a named series.
pub fn by_name(name: &str, order: usize) -> Result<Series> {
    match name {
        "ordered-bell" | "ordered_bell" => ordered_bell(order),
        "schroeder" => schroeder(order),
        "conjecture" | "conjecture-generators" | "conjecture_generators" => {
            conjecture_generators(order)
        }
        "powers-of-three" | "powers_of_three" => powers_of_three(order),
        other => Err(Error::Unsupported(format!("unknown series `{other}`"))),
    }
}

pub const NAMES: [&str; 4] = ["ordered-bell", "schroeder", "conjecture", "powers-of-three"];

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    /// `Σ_k k! S(n, k)` with Stirling numbers from their recurrence.
    fn fubini(n: usize) -> i64 {
        let mut s = vec![vec![0i64; n + 1]; n + 1];
        s[0][0] = 1;
        for i in 1..=n {
            for k in 1..=i {
                s[i][k] = k as i64 * s[i - 1][k] + s[i - 1][k - 1];
            }
        }
        (0..=n).map(|k| s[n][k] * (1..=k as i64).product::<i64>()).sum()
    }

    #[test]
    fn named_series() {
        assert_eq!(ints(&ordered_bell(6).unwrap()), vec![1, 1, 3, 13, 75, 541]);
        assert_eq!(ints(&schroeder(6).unwrap()), vec![1, 1, 3, 11, 45, 197]);
        assert_eq!(
            ints(&conjecture_generators(8).unwrap()),
            vec![0, 1, 0, 2, 18, 170, 1794, 21082]
        );
        assert_eq!(ints(&powers_of_three(5).unwrap()), vec![1, 1, 3, 9, 27]);
    }

    #[test]
    fn ordered_bell_matches_stirling_sum() {
        let ob = ints(&ordered_bell(12).unwrap());
        for (n, &a) in ob.iter().enumerate() {
            assert_eq!(a, fubini(n));
        }
    }

    #[test]
    fn order_cap() {
        assert!(schroeder(MAX_ORDER).is_ok());
        assert!(matches!(schroeder(MAX_ORDER + 1), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn sqrt_squares_back() {
        let x = Series::from_ints(&[4, 3, -2, 7, 1], 9);
        let y = x.sqrt().unwrap();
        assert_eq!(y.mul(&y), x);
        assert!(Series::from_ints(&[2, 1], 3).sqrt().is_err());
    }

    #[test]
    fn inverse() {
        let x = Series::from_ints(&[1, -1], 6);
        assert_eq!(ints(&x.inv().unwrap()), vec![1; 6]);
        assert!(Series::t(4).inv().is_err());
    }

    #[test]
    fn display() {
        let s = Series::new(vec![q(1), Q::new(1.into(), 2.into())], 3);
        assert_eq!(s.to_string(), "1 1/2 0");
    }
}
