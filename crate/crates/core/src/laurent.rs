//! Exact integer Laurent polynomials in one variable `t`.
//!
//! Coefficients live in `i128` until an operation would overflow, at which
//! point the computation is redone over `BigInt`. Results that fit back into
//! `i128` are demoted again, so the representation is canonical and derived
//! equality is semantic equality.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

trait Coef: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Coef for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Coef for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Coeffs {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

/// `Σ coeffs[i]·t^(low + i)`, trimmed so the first and last coefficients are
/// nonzero. The zero polynomial has no coefficients and `low == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Coeffs,
}

fn add_aligned<T: Coef>(a_low: i64, a: &[T], b_low: i64, b: &[T]) -> Option<(i64, Vec<T>)> {
    if a.is_empty() {
        return Some((b_low, b.to_vec()));
    }
    if b.is_empty() {
        return Some((a_low, a.to_vec()));
    }
    let low = a_low.min(b_low);
    let high = (a_low + a.len() as i64).max(b_low + b.len() as i64);
    let mut out = vec![T::zero(); (high - low) as usize];
    for (i, c) in a.iter().enumerate() {
        out[(a_low - low) as usize + i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        let slot = &mut out[(b_low - low) as usize + i];
        *slot = slot.add(c)?;
    }
    Some((low, out))
}

fn mul_full<T: Coef>(a_low: i64, a: &[T], b_low: i64, b: &[T]) -> Option<(i64, Vec<T>)> {
    if a.is_empty() || b.is_empty() {
        return Some((0, Vec::new()));
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y)?)?;
        }
    }
    Some((a_low + b_low, out))
}

fn neg_all<T: Coef>(a: &[T]) -> Option<Vec<T>> {
    a.iter().map(Coef::neg).collect()
}

fn to_big(v: &[i128]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Coeffs::Small(Vec::new()),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c·t^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        Self::from_small(k, vec![c as i128])
    }

    /// Builds `Σ coeffs[i]·t^(low + i)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_small(low, coeffs.iter().map(|&c| c as i128).collect())
    }

    fn from_small(low: i64, v: Vec<i128>) -> Self {
        let (low, v) = trim(low, v, |c| *c == 0);
        LaurentPoly {
            low,
            coeffs: Coeffs::Small(v),
        }
    }

    fn from_big(low: i64, v: Vec<BigInt>) -> Self {
        let (low, v) = trim(low, v, Zero::is_zero);
        let small: Option<Vec<i128>> = v.iter().map(ToPrimitive::to_i128).collect();
        match small {
            Some(s) => LaurentPoly {
                low,
                coeffs: Coeffs::Small(s),
            },
            None => LaurentPoly {
                low,
                coeffs: Coeffs::Big(v),
            },
        }
    }

    fn big_coeffs(&self) -> Vec<BigInt> {
        match &self.coeffs {
            Coeffs::Small(v) => to_big(v),
            Coeffs::Big(v) => v.clone(),
        }
    }

    fn len(&self) -> usize {
        match &self.coeffs {
            Coeffs::Small(v) => v.len(),
            Coeffs::Big(v) => v.len(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 0
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Lowest and highest exponents with nonzero coefficient.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            None
        } else {
            Some((self.low, self.low + self.len() as i64 - 1))
        }
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        let i = k - self.low;
        if i < 0 || i >= self.len() as i64 {
            return <BigInt as Zero>::zero();
        }
        match &self.coeffs {
            Coeffs::Small(v) => BigInt::from(v[i as usize]),
            Coeffs::Big(v) => v[i as usize].clone(),
        }
    }

    /// Nonzero terms as `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> Vec<(i64, BigInt)> {
        self.big_coeffs()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(c))
            .map(|(i, c)| (self.low + i as i64, c))
            .collect()
    }

    /// True when the coefficients are held as big integers.
    pub fn is_big(&self) -> bool {
        matches!(self.coeffs, Coeffs::Big(_))
    }

    pub fn add(&self, other: &Self) -> Self {
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.coeffs, &other.coeffs) {
            if let Some((low, v)) = add_aligned(self.low, a, other.low, b) {
                return Self::from_small(low, v);
            }
        }
        let (low, v) = add_aligned(self.low, &self.big_coeffs(), other.low, &other.big_coeffs())
            .expect("bigint addition is total");
        Self::from_big(low, v)
    }

    pub fn neg(&self) -> Self {
        match &self.coeffs {
            Coeffs::Small(a) => match neg_all(a) {
                Some(v) => Self::from_small(self.low, v),
                None => Self::from_big(self.low, neg_all(&to_big(a)).unwrap()),
            },
            Coeffs::Big(a) => Self::from_big(self.low, neg_all(a).unwrap()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.coeffs, &other.coeffs) {
            if let Some((low, v)) = mul_full(self.low, a, other.low, b) {
                return Self::from_small(low, v);
            }
        }
        let (low, v) = mul_full(self.low, &self.big_coeffs(), other.low, &other.big_coeffs())
            .expect("bigint multiplication is total");
        Self::from_big(low, v)
    }

    /// Multiplication by `±t^k`, a pure shift with optional sign flip.
    pub fn mul_unit(&self, negate: bool, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let shifted = LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        };
        if negate {
            shifted.neg()
        } else {
            shifted
        }
    }

    /// `Some((sign, k))` when the polynomial is a unit `±t^k`.
    pub fn as_unit(&self) -> Option<(i64, i64)> {
        if self.len() != 1 {
            return None;
        }
        let c = self.coeff(self.low);
        if c.is_one() {
            Some((1, self.low))
        } else if (-c).is_one() {
            Some((-1, self.low))
        } else {
            None
        }
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.big_coeffs().iter().sum()
    }
}

fn trim<T>(mut low: i64, mut v: Vec<T>, is_zero: impl Fn(&T) -> bool) -> (i64, Vec<T>) {
    while v.last().is_some_and(&is_zero) {
        v.pop();
    }
    let lead = v.iter().take_while(|c| is_zero(c)).count();
    if lead > 0 {
        v.drain(..lead);
        low += lead as i64;
    }
    if v.is_empty() {
        low = 0;
    }
    (low, v)
}

impl fmt::Display for LaurentPoly {
    /// Terms in decreasing degree, e.g. `-t^2 + 3t - 1 + t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in terms.iter().rev().enumerate() {
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let unit = mag.is_one();
            match *k {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("t")?,
                1 => write!(f, "{mag}t")?,
                _ if unit => write!(f, "t^{k}")?,
                _ => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_zero() {
        let p = LaurentPoly::from_coeffs(-3, &[0, 0, 0]);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
        let q = LaurentPoly::from_coeffs(-2, &[0, 1, 0]);
        assert_eq!(q, LaurentPoly::monomial(1, -1));
    }

    #[test]
    fn arithmetic() {
        // (1 + t)(1 - t) = 1 - t^2
        let a = LaurentPoly::from_coeffs(0, &[1, 1]);
        let b = LaurentPoly::from_coeffs(0, &[1, -1]);
        assert_eq!(a.mul(&b), LaurentPoly::from_coeffs(0, &[1, 0, -1]));
        assert_eq!(a.sub(&a), LaurentPoly::zero());
        assert_eq!(
            a.mul_unit(true, -1),
            LaurentPoly::from_coeffs(-1, &[-1, -1])
        );
        assert_eq!(a.eval_one(), BigInt::from(2));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = LaurentPoly::from_small(0, vec![i128::MAX]);
        let sum = big.add(&big);
        assert!(sum.is_big());
        assert_eq!(sum.coeff(0), BigInt::from(i128::MAX) * 2);
        let back = sum.sub(&big);
        assert!(!back.is_big());
        assert_eq!(back, big);
        let sq = big.mul(&big);
        assert!(sq.is_big());
        assert_eq!(sq.coeff(0), BigInt::from(i128::MAX) * BigInt::from(i128::MAX));
        let min = LaurentPoly::from_small(0, vec![i128::MIN]);
        assert!(min.neg().is_big());
    }

    #[test]
    fn units() {
        assert_eq!(LaurentPoly::monomial(-1, 4).as_unit(), Some((-1, 4)));
        assert_eq!(LaurentPoly::monomial(2, 4).as_unit(), None);
        assert_eq!(LaurentPoly::from_coeffs(0, &[1, 1]).as_unit(), None);
    }

    #[test]
    fn display() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(
            LaurentPoly::from_coeffs(-1, &[1, -1, 3, -1]).to_string(),
            "-t^2 + 3t - 1 + t^-1"
        );
    }
}
