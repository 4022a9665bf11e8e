use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::PolyError;

/// Integer polynomial in one variable `t`; `coeffs[i]` multiplies `t^i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `c * t^e`.
    pub fn term(e: usize, c: BigInt) -> Self {
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = c;
        Self::new(v)
    }

    /// `(1 - t)^n`.
    pub fn one_minus_t_pow(n: usize) -> Self {
        let base = Self::from_i64s(&[1, -1]);
        (0..n).fold(Self::one(), |acc, _| &acc * &base)
    }

    /// `1 - t^e`.
    pub fn one_minus_power(e: usize) -> Self {
        let mut p = Self::one();
        p.add_term(e, &BigInt::from(-1));
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add_term(&mut self, e: usize, c: &BigInt) {
        if self.coeffs.len() <= e {
            self.coeffs.resize(e + 1, BigInt::zero());
        }
        self.coeffs[e] += c;
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Value at `t = 1`, i.e. the coefficient sum.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn derivative(&self) -> UniPoly {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact quotient by `(1 - t)`, or `None` when `t = 1` is not a root.
    pub fn div_one_minus_t(&self) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        if !self.eval_one().is_zero() {
            return None;
        }
        // p(t) = (1 - t) q(t)  =>  q_i = sum_{j<=i} p_j
        let n = self.coeffs.len();
        let mut q = Vec::with_capacity(n - 1);
        let mut acc = BigInt::zero();
        for c in &self.coeffs[..n - 1] {
            acc += c;
            q.push(acc.clone());
        }
        Some(Self::new(q))
    }

    /// Largest `r` with `(1 - t)^r` dividing `self` (zero polynomial: `None`).
    pub fn one_minus_t_multiplicity(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut r = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_one_minus_t() {
            cur = q;
            r += 1;
        }
        Some(r)
    }

    pub fn to_rational_coeffs(&self) -> Vec<BigRational> {
        self.coeffs.iter().cloned().map(BigRational::from_integer).collect()
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Power series in `t` known exactly through `t^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TaylorSeries {
    coeffs: Vec<BigRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Mul,
    Invert,
    Truncate(usize),
}

/// Series operations in one entry point. `Invert` and `Truncate` ignore `b`.
pub fn series_ops(
    a: &TaylorSeries,
    b: &TaylorSeries,
    op: SeriesOp,
) -> Result<TaylorSeries, PolyError> {
    match op {
        SeriesOp::Mul => Ok(a.mul(b)),
        SeriesOp::Invert => a.invert(),
        SeriesOp::Truncate(order) => Ok(a.truncate(order)),
    }
}

impl TaylorSeries {
    /// Series with the given leading coefficients, padded or cut to `order`.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TaylorSeries { coeffs }
    }

    pub fn from_i64s(cs: &[i64], order: usize) -> Self {
        Self::new(cs.iter().map(|&c| BigRational::from_integer(c.into())).collect(), order)
    }

    pub fn from_unipoly(p: &UniPoly, order: usize) -> Self {
        Self::new(p.to_rational_coeffs(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> TaylorSeries {
        let mut c = self.coeffs.clone();
        c.truncate(order + 1);
        Self::new(c, order)
    }

    /// Product, known to the smaller of the two orders.
    pub fn mul(&self, other: &TaylorSeries) -> TaylorSeries {
        let order = self.order().min(other.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TaylorSeries { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn invert(&self) -> Result<TaylorSeries, PolyError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(PolyError::NonUnitInversion);
        }
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = BigRational::zero();
            for j in 1..=n {
                acc += &self.coeffs[j] * &out[n - j];
            }
            out.push(-acc * &inv0);
        }
        Ok(TaylorSeries { coeffs: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TaylorSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.numer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn invert_one_plus_t() {
        let s = TaylorSeries::from_i64s(&[1, 1], 3);
        assert_eq!(ints(&s.invert().unwrap()), vec![1, -1, 1, -1]);
    }

    #[test]
    fn invert_product_matches_u_coefficients() {
        // (1+t)(1+2t) = 1 + 3t + 2t^2
        let s = TaylorSeries::from_i64s(&[1, 3, 2], 3);
        let inv = series_ops(&s, &s, SeriesOp::Invert).unwrap();
        assert_eq!(ints(&inv), vec![1, -3, 7, -15]);
        // u_1 = -C(3,2)
        assert_eq!(ints(&inv)[1], -3);
    }

    #[test]
    fn multiply_linear_factors() {
        let a = TaylorSeries::from_i64s(&[1, 2], 3);
        let b = TaylorSeries::from_i64s(&[1, 3], 3);
        assert_eq!(ints(&series_ops(&a, &b, SeriesOp::Mul).unwrap()), vec![1, 5, 6, 0]);
    }

    #[test]
    fn non_unit_inversion_fails() {
        let s = TaylorSeries::from_i64s(&[0, 1], 2);
        assert_eq!(s.invert(), Err(PolyError::NonUnitInversion));
    }

    #[test]
    fn unipoly_one_minus_t() {
        let p = UniPoly::from_i64s(&[1, 0, -1, -1, 0, 1]);
        assert_eq!(p.one_minus_t_multiplicity(), Some(2));
        let q = p.div_one_minus_t().unwrap().div_one_minus_t().unwrap();
        // (1 + t)(1 + t + t^2)
        assert_eq!(q, UniPoly::from_i64s(&[1, 2, 2, 1]));
        assert_eq!(q.eval_one(), BigInt::from(6));
        assert_eq!(p.to_string(), "1 - t^2 - t^3 + t^5");
    }
}
