//! Symmetric polynomial constructors.
//!
//! Row conventions are fixed as follows: the alternant of an exponent set
//! `J = (j_1 < ... < j_k)` is `det(x_c^{j_r})` with row `r` for `j_r` and
//! column `c` for `x_c`, rows in increasing exponent order. With that
//! convention the Vandermonde determinant is `prod_{a<b} (x_b - x_a)`, so for
//! `k = 2` it is `x2 - x1`.
//!
//! Both Schur constructors return the coefficient-positive normal form
//! together with the sign the raw determinant carried. The bialternant
//! quotient comes out positive; the Jacobi-Trudi determinant with rows in
//! increasing order carries `(-1)^{k(k-1)/2}`.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::{det_bareiss, det_cofactor, Monomial, PolyError, PolyMatrix, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetricError {
    #[error("exponent set must be strictly increasing, got {0:?}")]
    NotIncreasing(Vec<u32>),
    #[error("exponent set must be nonempty")]
    Empty,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Strictly increasing exponent sequence `j_1 < ... < j_k`; its length is the
/// number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentSet(Vec<u32>);

impl ExponentSet {
    pub fn new(values: Vec<u32>) -> Result<Self, SymmetricError> {
        if values.is_empty() {
            return Err(SymmetricError::Empty);
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SymmetricError::NotIncreasing(values));
        }
        Ok(ExponentSet(values))
    }

    /// `0, 1, ..., k-1`.
    pub fn staircase(k: usize) -> Self {
        ExponentSet((0..k as u32).collect())
    }

    /// Exponent set `j_r = lambda_{k+1-r} + (r - 1)` of a partition with at
    /// most `k` parts (parts given weakly decreasing, zeros optional).
    pub fn from_partition(parts: &[u32], k: usize) -> Result<Self, SymmetricError> {
        let mut lambda: Vec<u32> = parts.to_vec();
        if lambda.len() > k {
            if lambda[k..].iter().any(|&p| p != 0) {
                return Err(SymmetricError::NotIncreasing(parts.to_vec()));
            }
            lambda.truncate(k);
        }
        lambda.resize(k, 0);
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymmetricError::NotIncreasing(parts.to_vec()));
        }
        Ok(ExponentSet((0..k).map(|r| lambda[k - 1 - r] + r as u32).collect()))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// The partition `lambda_a = j_{k+1-a} - (k - a)`, weakly decreasing,
    /// trailing zeros kept.
    pub fn partition(&self) -> Vec<u32> {
        let k = self.k();
        (1..=k).map(|a| self.0[k - a] - (k - a) as u32).collect()
    }

    /// Degree of the Schur polynomial: `sum j - C(k, 2)`.
    pub fn schur_degree(&self) -> u32 {
        let k = self.k() as u32;
        self.0.iter().sum::<u32>() - k * (k - 1) / 2
    }

    /// `(0, j_2 - j_1, ..., j_k - j_1)`.
    pub fn reduced(&self) -> ExponentSet {
        let j1 = self.0[0];
        ExponentSet(self.0.iter().map(|j| j - j1).collect())
    }

    pub fn shifted(&self, c: u32) -> ExponentSet {
        ExponentSet(self.0.iter().map(|j| j + c).collect())
    }
}

impl fmt::Display for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Global sign of a raw determinant relative to its canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn apply(self, p: &Polynomial) -> Polynomial {
        match self {
            Sign::Plus => p.clone(),
            Sign::Minus => -p,
        }
    }
}

/// A polynomial in coefficient-positive normal form plus the sign of the raw
/// construction it came from: `raw = sign * poly`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPoly {
    pub poly: Polynomial,
    pub sign: Sign,
}

impl SignedPoly {
    /// Normalizes so the lex-leading coefficient is positive.
    pub fn canonicalize(raw: Polynomial) -> SignedPoly {
        if raw.leading_sign() < 0 {
            SignedPoly { poly: -raw, sign: Sign::Minus }
        } else {
            SignedPoly { poly: raw, sign: Sign::Plus }
        }
    }

    pub fn raw(&self) -> Polynomial {
        self.sign.apply(&self.poly)
    }
}

/// Sum of all monomials of degree `d` in `k` variables; `0` for `d < 0`.
pub fn complete_h(d: i64, k: usize) -> Polynomial {
    assert!(k >= 1, "complete_h needs at least one variable");
    let mut p = Polynomial::zero(k);
    if d < 0 {
        return p;
    }
    let mut exps = vec![0u32; k];
    fill_compositions(d as u32, 0, &mut exps, &mut |e| {
        p.add_term(Monomial::from_exponents(e).expect("degree fits"), BigRational::one());
    });
    p
}

fn fill_compositions(rest: u32, pos: usize, exps: &mut [u32], emit: &mut dyn FnMut(&[u32])) {
    if pos == exps.len() - 1 {
        exps[pos] = rest;
        emit(exps);
        return;
    }
    for e in (0..=rest).rev() {
        exps[pos] = e;
        fill_compositions(rest - e, pos + 1, exps, emit);
    }
}

/// `det(x_c^{j_r})` by permutation expansion; every term is a monomial.
pub fn alternant(j: &ExponentSet) -> Polynomial {
    let k = j.k();
    let mut p = Polynomial::zero(k);
    for perm in (0..k).permutations(k) {
        let inversions = (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
            .filter(|&(a, b)| perm[a] > perm[b])
            .count();
        // row r uses variable perm[r]
        let mut exps = vec![0u32; k];
        for (r, &c) in perm.iter().enumerate() {
            exps[c] = j.values()[r];
        }
        let c = if inversions % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        p.add_term(Monomial::from_exponents(&exps).expect("exponent fits"), c.into());
    }
    p
}

/// Vandermonde determinant with rows `x^0, ..., x^{k-1}` top to bottom.
pub fn vandermonde_det(k: usize) -> Polynomial {
    alternant(&ExponentSet::staircase(k))
}

/// Schur polynomial as the bialternant quotient `det(x_c^{j_r}) / W`.
pub fn schur_bialternant(j: &ExponentSet) -> Result<SignedPoly, SymmetricError> {
    let q = alternant(j).div_exact(&vandermonde_det(j.k()))?;
    Ok(SignedPoly::canonicalize(q))
}

/// The `k x k` Jacobi-Trudi matrix with row `r = (h_{j_r-(k-1)}, ..., h_{j_r})`.
pub fn jacobi_trudi_matrix(j: &ExponentSet) -> PolyMatrix {
    let k = j.k();
    j.values()
        .iter()
        .map(|&jr| (0..k).map(|c| complete_h(jr as i64 - (k - 1 - c) as i64, k)).collect())
        .collect()
}

/// How to evaluate the Jacobi-Trudi determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetMethod {
    Bareiss,
    Cofactor,
}

/// Schur polynomial as the Jacobi-Trudi determinant in the `h_i`.
pub fn schur_jacobi_trudi(j: &ExponentSet) -> Result<SignedPoly, SymmetricError> {
    schur_jacobi_trudi_with(j, DetMethod::Bareiss)
}

pub fn schur_jacobi_trudi_with(
    j: &ExponentSet,
    method: DetMethod,
) -> Result<SignedPoly, SymmetricError> {
    let m = jacobi_trudi_matrix(j);
    let d = match method {
        DetMethod::Bareiss => det_bareiss(&m)?,
        DetMethod::Cofactor => det_cofactor(&m)?,
    };
    Ok(SignedPoly::canonicalize(d))
}

/// Schur polynomial of the gap sequence `(0, j_2 - j_1, ..., j_k - j_1)`.
pub fn reduced_schur(j: &ExponentSet) -> Result<SignedPoly, SymmetricError> {
    schur_bialternant(&j.reduced())
}

/// Schur polynomial `s_lambda(x_1, ..., x_k)`; zero when `lambda` has more
/// than `k` nonzero parts.
pub fn schur_of_partition(parts: &[u32], k: usize) -> Result<Polynomial, SymmetricError> {
    if parts.iter().filter(|&&p| p > 0).count() > k {
        return Ok(Polynomial::zero(k));
    }
    let j = ExponentSet::from_partition(parts, k)?;
    Ok(schur_bialternant(&j)?.poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn es(v: &[u32]) -> ExponentSet {
        ExponentSet::new(v.to_vec()).unwrap()
    }

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn complete_h_edge_cases() {
        assert!(complete_h(-2, 3).is_zero());
        assert!(complete_h(0, 3).is_one());
        assert_eq!(complete_h(2, 2), p("x1^2 + x1 x2 + x2^2", 2));
        assert_eq!(complete_h(3, 3).num_terms(), 10);
    }

    #[test]
    fn h1_times_h2() {
        let prod = &complete_h(1, 2) * &complete_h(2, 2);
        assert_eq!(prod, p("x1^3 + 2 x1^2 x2 + 2 x1 x2^2 + x2^3", 2));
    }

    #[test]
    fn vandermonde_convention() {
        assert!(vandermonde_det(1).is_one());
        assert_eq!(vandermonde_det(2), p("x2 - x1", 2));
        let v3 = vandermonde_det(3);
        assert_eq!(v3.num_terms(), 6);
        let expect = &(&p("x2 - x1", 3) * &p("x3 - x1", 3)) * &p("x3 - x2", 3);
        assert_eq!(v3, expect);
    }

    #[test]
    fn bialternant_examples() {
        assert!(schur_bialternant(&es(&[0, 1, 2])).unwrap().poly.is_one());
        let s = schur_bialternant(&es(&[2, 3])).unwrap();
        assert_eq!(s.poly, p("x1^2 x2^2", 2));
        assert_eq!(s.sign, Sign::Plus);
        // s_{(2,1)} in three variables
        let s21 = schur_bialternant(&es(&[0, 2, 4])).unwrap().poly;
        let expect = p(
            "x1^2 x2 + x1^2 x3 + x2^2 x1 + x2^2 x3 + x3^2 x1 + x3^2 x2 + 2 x1 x2 x3",
            3,
        );
        assert_eq!(s21, expect);
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert!(schur_jacobi_trudi(&es(&[0, 1, 2])).unwrap().poly.is_one());
        let a = schur_jacobi_trudi(&es(&[0, 2, 4])).unwrap();
        let b = schur_bialternant(&es(&[0, 2, 4])).unwrap();
        assert_eq!(a.poly, b.poly);
        // rows in increasing order carry (-1)^{C(3,2)} = -1
        assert_eq!(a.sign, Sign::Minus);
        let c = schur_jacobi_trudi(&es(&[2, 3])).unwrap();
        assert_eq!(c.poly, p("x1^2 x2^2", 2));
        assert_eq!(c.sign, Sign::Minus);
    }

    #[test]
    fn cofactor_agrees_with_bareiss() {
        let j = es(&[1, 3, 4, 7]);
        let a = schur_jacobi_trudi_with(&j, DetMethod::Bareiss).unwrap();
        let b = schur_jacobi_trudi_with(&j, DetMethod::Cofactor).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn reduced_schur_examples() {
        assert!(reduced_schur(&es(&[2, 3])).unwrap().poly.is_one());
        assert_eq!(
            reduced_schur(&es(&[1, 3, 5])).unwrap(),
            schur_bialternant(&es(&[0, 2, 4])).unwrap()
        );
        let base = reduced_schur(&es(&[0, 2, 5])).unwrap();
        for c in 1..=3 {
            assert_eq!(reduced_schur(&es(&[c, 2 + c, 5 + c])).unwrap(), base);
        }
    }

    #[test]
    fn partition_round_trip() {
        let j = es(&[0, 2, 4]);
        assert_eq!(j.partition(), vec![2, 1, 0]);
        assert_eq!(ExponentSet::from_partition(&[2, 1], 3).unwrap(), j);
        assert_eq!(j.schur_degree(), 3);
        assert!(ExponentSet::new(vec![2, 2, 3]).is_err());
    }

    #[test]
    fn too_many_parts_vanish() {
        assert!(schur_of_partition(&[1, 1, 1], 2).unwrap().is_zero());
        assert_eq!(schur_of_partition(&[1, 1], 2).unwrap(), p("x1 x2", 2));
    }
}
