//! Closed-form Hilbert series and degrees of the Vandermonde quotients.
//!
//! Everything here is a formula evaluation; the Gröbner oracle is the ground
//! truth these are compared against.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::HilbertSeries;
use crate::ideal::IndexTuple;
use crate::polyring::{TaylorSeries, UniPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("numerator vanishes to order {found} at t = 1, needed {needed}")]
    InsufficientVanishing { needed: usize, found: usize },
    #[error("formula produced the negative exponent {0}")]
    NegativeExponent(i64),
}

/// Reading of the Eagon-Northcott Hilbert numerator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EnConvention {
    /// Subsets through `i_0 = 0` and markers `t_1, ..., t_{k-1}`: the terms
    /// left after the `t_0` cancellation, with the signs of the complex.
    #[default]
    #[serde(rename = "zero-anchored")]
    ZeroAnchored,
    /// The printed display taken literally: `J` ranges over `(k+i)`-subsets
    /// of `I'`, `M` over all monomials of tdeg `i` in `t_0, ..., t_{m-1}`,
    /// and the bracket is subtracted from 1.
    #[serde(rename = "as-stated")]
    AsStated,
}

impl std::str::FromStr for EnConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zero-anchored" => Ok(EnConvention::ZeroAnchored),
            "as-stated" => Ok(EnConvention::AsStated),
            other => Err(format!("unknown convention '{other}'")),
        }
    }
}

/// A value produced by an unproved formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conjectural<T> {
    pub value: T,
    pub conjectural: bool,
}

impl<T> Conjectural<T> {
    fn new(value: T) -> Self {
        Conjectural { value, conjectural: true }
    }
}

fn choose2(k: usize) -> i64 {
    (k * k.saturating_sub(1) / 2) as i64
}

fn require_zero_anchored(t: &IndexTuple) -> Result<(), ClosedFormError> {
    if t.i(0) != 0 {
        return Err(ClosedFormError::Precondition(format!("i_0 = {} is not 0", t.i(0))));
    }
    Ok(())
}

fn require_kk1(t: &IndexTuple) -> Result<(), ClosedFormError> {
    require_zero_anchored(t)?;
    if t.m() != t.k() + 1 {
        return Err(ClosedFormError::Precondition(format!("m = {} is not k + 1 = {}", t.m(), t.k() + 1)));
    }
    Ok(())
}

fn laurent_to_unipoly(terms: BTreeMap<i64, BigInt>) -> Result<UniPoly, ClosedFormError> {
    let mut p = UniPoly::zero();
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        if e < 0 {
            return Err(ClosedFormError::NegativeExponent(e));
        }
        p.add_term(e as usize, &c);
    }
    Ok(p)
}

/// Numerator over `(1 - t)^k` of the Hilbert series of a regular A-quotient,
/// read off the Eagon-Northcott resolution.
pub fn hilbert_numerator_en(t: &IndexTuple, convention: EnConvention) -> Result<UniPoly, ClosedFormError> {
    require_zero_anchored(t)?;
    let (k, m) = (t.k(), t.m());
    if m > 2 * k - 1 {
        return Err(ClosedFormError::Precondition(format!("m = {m} exceeds 2k - 1 = {}", 2 * k - 1)));
    }
    let rest = &t.values()[1..];
    let c2 = choose2(k);
    let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
    *terms.entry(0).or_default() += 1;
    for i in 0..=m - k {
        let sign = if i % 2 == 0 { -1 } else { 1 };
        let (size, markers): (usize, Vec<i64>) = match convention {
            EnConvention::ZeroAnchored => (k - 1 + i, (1..k as i64).collect()),
            EnConvention::AsStated => (k + i, (0..m as i64).collect()),
        };
        let marker_degrees: Vec<i64> =
            markers.iter().combinations_with_replacement(i).map(|c| c.into_iter().sum()).collect();
        for j in rest.iter().combinations(size) {
            let s_j = j.into_iter().map(|&v| v as i64).sum::<i64>() - c2;
            for d in &marker_degrees {
                *terms.entry(s_j - d).or_default() += sign;
            }
        }
    }
    laurent_to_unipoly(terms)
}

/// `T^(c)(1) (-1)^c / c!`, the value at 1 of `T / (1 - t)^c`.
pub fn degree_from_numerator(numerator: &UniPoly, codim: usize) -> Result<BigInt, ClosedFormError> {
    if !numerator.is_zero() {
        let found = numerator.one_minus_t_multiplicity().unwrap_or(0);
        if found < codim {
            return Err(ClosedFormError::InsufficientVanishing { needed: codim, found });
        }
    }
    let mut d = numerator.clone();
    let mut fact = BigInt::one();
    for j in 1..=codim {
        d = d.derivative();
        fact *= j;
    }
    let v = d.eval_one();
    let v = if codim % 2 == 1 { -v } else { v };
    Ok(v / fact)
}

/// The `m = k + 1` Hilbert series
/// `(1 - sum_j t^(N - i_j - C(k,2)) + sum_{j<k} t^(N - j - C(k,2))) / (1 - t)^k`.
pub fn hilbert_series_kk1(t: &IndexTuple) -> Result<HilbertSeries, ClosedFormError> {
    require_kk1(t)?;
    if t.gcd() != 1 {
        return Err(ClosedFormError::Precondition(format!("gcd {} is not 1", t.gcd())));
    }
    let k = t.k();
    let n = t.n_stat() as i64;
    let c2 = choose2(k);
    let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
    *terms.entry(0).or_default() += 1;
    for &ij in &t.values()[1..] {
        *terms.entry(n - ij as i64 - c2).or_default() -= 1;
    }
    for j in 1..k as i64 {
        *terms.entry(n - j - c2).or_default() += 1;
    }
    Ok(HilbertSeries::new(laurent_to_unipoly(terms)?, k))
}

fn u2(k: usize) -> BigInt {
    BigInt::from(binomial(k as u64 + 1, 3) * (3 * k as u64 - 2) / 4)
}

/// `sum_{j<l} i_j i_l - C(k,2) sum_j i_j + C(k+1,3)(3k-2)/4` for `m = k + 1`.
pub fn degree_kk1(t: &IndexTuple) -> Result<BigInt, ClosedFormError> {
    require_kk1(t)?;
    let rest: Vec<BigInt> = t.values()[1..].iter().map(|&v| BigInt::from(v)).collect();
    let sigma2: BigInt = rest.iter().tuple_combinations().map(|(a, b)| a * b).sum();
    let sigma1: BigInt = rest.iter().sum();
    Ok(sigma2 - BigInt::from(choose2(t.k())) * sigma1 + u2(t.k()))
}

/// Taylor coefficients `u_0, ..., u_n` of `prod_{j=1}^{k-1} 1 / (1 + j t)`.
pub fn gtp_u_coefficients(k: usize, n: usize) -> Vec<BigInt> {
    let mut den = TaylorSeries::from_i64s(&[1], n);
    for j in 1..k as i64 {
        den = den.mul(&TaylorSeries::from_i64s(&[1, j], n));
    }
    let inv = den.invert().expect("constant term 1");
    inv.coeffs().iter().map(|c| c.to_integer()).collect()
}

/// Coefficient of `t^(m-k+1)` in `prod_{j>=1} (1 + i_j t) / prod_{j<k} (1 + j t)`.
pub fn degree_gtp(t: &IndexTuple) -> Result<BigInt, ClosedFormError> {
    require_zero_anchored(t)?;
    let (k, m) = (t.k(), t.m());
    let order = m - k + 1;
    let mut num = TaylorSeries::from_i64s(&[1], order);
    for &ij in &t.values()[1..] {
        num = num.mul(&TaylorSeries::from_i64s(&[1, ij as i64], order));
    }
    let u = gtp_u_coefficients(k, order);
    let u = TaylorSeries::new(u.into_iter().map(BigRational::from_integer).collect(), order);
    let c = num.mul(&u).coeff(order).clone();
    debug_assert!(c.is_integer());
    Ok(c.to_integer())
}

/// Reading of the conjectured BC resolution for `m = k + 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BcReading {
    /// Shifts as printed: generators in degrees `N - i_j - C(k,2)` and
    /// `N - k i_1`, syzygies in degrees `N - j - C(k,2)`, `j = 0..k-1`.
    #[serde(rename = "as-printed")]
    AsPrinted,
    /// Shifts of the generators `S_1, ..., S_k, G_0` and of the `k`
    /// conjectured relations among them: `G_0` in degree
    /// `N - k i_1 - C(k,2)`, relation `s` in degree `N - i_1 - s - C(k,2)`.
    #[default]
    #[serde(rename = "relation-degrees")]
    RelationDegrees,
}

impl std::str::FromStr for BcReading {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "as-printed" => Ok(BcReading::AsPrinted),
            "relation-degrees" => Ok(BcReading::RelationDegrees),
            other => Err(format!("unknown reading '{other}'")),
        }
    }
}

/// Conjectured Hilbert series of the BC quotient for `m = k + 1`.
pub fn hilbert_series_bc_conj(t: &IndexTuple, reading: BcReading) -> Result<Conjectural<HilbertSeries>, ClosedFormError> {
    require_kk1(t)?;
    let k = t.k();
    let n = t.n_stat() as i64;
    let c2 = choose2(k);
    let i1 = t.i(1) as i64;
    let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
    *terms.entry(0).or_default() += 1;
    for &ij in &t.values()[1..] {
        *terms.entry(n - ij as i64 - c2).or_default() -= 1;
    }
    match reading {
        BcReading::AsPrinted => {
            *terms.entry(n - k as i64 * i1).or_default() -= 1;
            for j in 0..k as i64 {
                *terms.entry(n - j - c2).or_default() += 1;
            }
        }
        BcReading::RelationDegrees => {
            *terms.entry(n - k as i64 * i1 - c2).or_default() -= 1;
            for s in 0..k as i64 {
                *terms.entry(n - i1 - s - c2).or_default() += 1;
            }
        }
    }
    Ok(Conjectural::new(HilbertSeries::new(laurent_to_unipoly(terms)?, k)))
}

/// `degree_kk1 - C(k,2) i_1 (i_1 - 1)`.
pub fn degree_bc_conj(t: &IndexTuple) -> Result<Conjectural<BigInt>, ClosedFormError> {
    let base = degree_kk1(t)?;
    let i1 = BigInt::from(t.i(1));
    let corr = BigInt::from(choose2(t.k())) * &i1 * (&i1 - 1);
    Ok(Conjectural::new(base - corr))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(k: usize, v: &[u32]) -> IndexTuple {
        IndexTuple::new(k, v.to_vec()).unwrap()
    }

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn en_zero_anchored() {
        let n = hilbert_numerator_en(&t(3, &[0, 2, 3, 4]), EnConvention::ZeroAnchored).unwrap();
        assert_eq!(n, up(&[1, 0, -1, -1, 0, 1]));
        let n = hilbert_numerator_en(&t(3, &[0, 1, 2, 4]), EnConvention::ZeroAnchored).unwrap();
        assert!(n.is_zero());
        let n = hilbert_numerator_en(&t(3, &[0, 1, 3, 5, 7]), EnConvention::ZeroAnchored).unwrap();
        assert_eq!(degree_from_numerator(&n, 3).unwrap(), BigInt::from(15));
        assert!(hilbert_numerator_en(&t(2, &[0, 1, 2, 3, 4]), EnConvention::ZeroAnchored).is_err());
        assert!(hilbert_numerator_en(&t(2, &[1, 2, 3]), EnConvention::ZeroAnchored).is_err());
    }

    #[test]
    fn en_as_stated_differs() {
        let n = hilbert_numerator_en(&t(3, &[0, 2, 3, 4]), EnConvention::AsStated).unwrap();
        assert_ne!(n, up(&[1, 0, -1, -1, 0, 1]));
    }

    #[test]
    fn degree_extraction() {
        assert_eq!(degree_from_numerator(&up(&[1, -2, 1]), 2).unwrap(), BigInt::from(1));
        assert_eq!(degree_from_numerator(&up(&[1, 0, -1, -1, 0, 1]), 2).unwrap(), BigInt::from(6));
        assert_eq!(
            degree_from_numerator(&up(&[1, -1]), 2),
            Err(ClosedFormError::InsufficientVanishing { needed: 2, found: 1 })
        );
    }

    #[test]
    fn kk1_formulas() {
        let hs = hilbert_series_kk1(&t(3, &[0, 2, 3, 4])).unwrap();
        assert_eq!(hs, HilbertSeries::new(up(&[1, 0, -1, -1, 0, 1]), 3));
        assert!(hilbert_series_kk1(&t(3, &[0, 1, 2, 4])).unwrap().numerator.is_zero());
        assert_eq!(degree_kk1(&t(3, &[0, 2, 3, 4])).unwrap(), BigInt::from(6));
        assert_eq!(degree_kk1(&t(3, &[0, 1, 2, 4])).unwrap(), BigInt::from(0));
        assert_eq!(degree_kk1(&t(3, &[0, 1, 2, 3])).unwrap(), BigInt::from(0));
        assert!(hilbert_series_kk1(&t(2, &[0, 2, 4])).is_err());
    }

    #[test]
    fn gtp() {
        let u: Vec<i64> = gtp_u_coefficients(3, 3).iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(u, vec![1, -3, 7, -15]);
        assert_eq!(degree_gtp(&t(3, &[0, 1, 3, 5, 7])).unwrap(), BigInt::from(15));
        assert_eq!(degree_gtp(&t(3, &[0, 1, 2, 3, 4])).unwrap(), BigInt::from(0));
        for k in 1..8 {
            assert_eq!(gtp_u_coefficients(k, 2)[2], u2(k));
            assert_eq!(gtp_u_coefficients(k, 1)[1], BigInt::from(-choose2(k)));
        }
    }

    #[test]
    fn bc_conjecture_shapes() {
        for reading in [BcReading::AsPrinted, BcReading::RelationDegrees] {
            let hs = hilbert_series_bc_conj(&t(3, &[0, 1, 3, 4]), reading).unwrap();
            assert!(hs.conjectural);
            assert!(hs.value.numerator.eval_one().is_zero());
        }
        let d = degree_bc_conj(&t(3, &[0, 1, 3, 4])).unwrap();
        assert_eq!(d.value, degree_kk1(&t(3, &[0, 1, 3, 4])).unwrap());
        assert_eq!(degree_bc_conj(&t(3, &[0, 2, 3, 4])).unwrap().value, BigInt::from(0));
    }
}
