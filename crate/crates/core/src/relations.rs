//! Linear relations among the Schur generators of an `m = k + 1` tuple.
//!
//! For `I = (0 = i_0 < ... < i_k)` the generator `S_l` is the Schur
//! polynomial of `I` with `i_l` removed, in its coefficient-positive form.
//! The A-side family is
//! `sum_{j=0}^{k} (-1)^{k-j} h_{i_j - s} S_j = 0` for `s = 0, ..., k-1`.
//! It is certified in the Schur basis: each `h_a S_j` is expanded with the
//! Pieri rule and the signed sum must cancel partition by partition. Because
//! Schur polynomials with at most `k` parts are a basis of the symmetric
//! polynomials in `k` variables, this is an exact certificate.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::ideal::{build_h_matrix, IndexTuple};
use crate::polyring::{det_bareiss, PolyError, Polynomial};
use crate::symmetric::{complete_h, reduced_schur, schur_bialternant, schur_of_partition, ExponentSet, SymmetricError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Symmetric(#[from] SymmetricError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateStatus {
    Verified,
    Failed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerificationMethod {
    /// Cancellation in the Schur basis after Pieri expansion.
    Pieri,
    /// Cancellation of the fully expanded polynomial.
    Expansion,
}

/// One summand `sign * coefficient * generator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationTerm {
    pub sign: i8,
    /// `h_d` or `s_(...)`; `vanishes` marks the conventions `h_d = 0` for
    /// `d < 0` and `s_(i,...,i,j) = 0` for `j > i`.
    pub coefficient: String,
    pub vanishes: bool,
    /// `S_l` or `G_0`.
    pub generator: String,
    /// Partition of the generator's Schur polynomial.
    pub generator_partition: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCertificate {
    pub tuple: IndexTuple,
    /// The relation index `s`.
    pub s: usize,
    pub terms: Vec<RelationTerm>,
    pub status: CertificateStatus,
    pub method: VerificationMethod,
    /// The nonzero remainder when the relation fails.
    pub residual: Option<String>,
}

type SchurCombination = BTreeMap<Vec<u32>, BigInt>;

fn require_kk1(t: &IndexTuple) -> Result<(), RelationError> {
    if t.i(0) != 0 || t.m() != t.k() + 1 {
        return Err(RelationError::Precondition(format!("{t} is not of the form (0, i_1, ..., i_k)")));
    }
    Ok(())
}

fn require_s(t: &IndexTuple, s: usize) -> Result<(), RelationError> {
    if s >= t.k() {
        return Err(RelationError::Precondition(format!("s = {s} is outside 0..{}", t.k())));
    }
    Ok(())
}

/// Exponent set of `S_l`: the tuple with `i_l` removed.
fn generator_set(t: &IndexTuple, l: usize) -> ExponentSet {
    let v: Vec<u32> = t.values().iter().enumerate().filter(|&(r, _)| r != l).map(|(_, &x)| x).collect();
    ExponentSet::new(v).expect("subsequence of an increasing tuple")
}

fn sign_of(odd: bool) -> i8 {
    if odd {
        -1
    } else {
        1
    }
}

/// All `mu` with `mu / lambda` a horizontal strip of size `a` and at most
/// `k` parts.
fn pieri(lambda: &[u32], a: u32, k: usize) -> Vec<Vec<u32>> {
    let mut lam = lambda.to_vec();
    lam.resize(k, 0);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(i: usize, rest: u32, lam: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == lam.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = if i == 0 { lam[0] + rest } else { lam[i - 1].min(lam[i] + rest) };
        for v in lam[i]..=hi {
            cur.push(v);
            rec(i + 1, rest - (v - lam[i]), lam, cur, out);
            cur.pop();
        }
    }
    rec(0, a, &lam, &mut cur, &mut out);
    out
}

fn add_h_times_schur(acc: &mut SchurCombination, sign: i8, h: i64, lambda: &[u32], k: usize) {
    if h < 0 {
        return;
    }
    for mu in pieri(lambda, h as u32, k) {
        *acc.entry(mu).or_insert_with(BigInt::zero) += sign as i64;
    }
}

fn render_combination(c: &SchurCombination) -> String {
    c.iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(mu, v)| format!("{v}*s_({})", mu.iter().join(",")))
        .join(" + ")
}

fn h_term(sign: i8, d: i64, generator: String, partition: Vec<u32>) -> RelationTerm {
    RelationTerm { sign, coefficient: format!("h_{d}"), vanishes: d < 0, generator, generator_partition: partition }
}

/// `sum_j (-1)^{k-j} h_{i_j - s} S_j = 0`, certified by Pieri expansion.
pub fn arel_relation(t: &IndexTuple, s: usize) -> Result<RelationCertificate, RelationError> {
    require_kk1(t)?;
    require_s(t, s)?;
    let k = t.k();
    let mut terms = Vec::with_capacity(k + 1);
    let mut acc = SchurCombination::new();
    for j in (0..=k).rev() {
        let lambda = generator_set(t, j).partition();
        let sign = sign_of((k - j) % 2 == 1);
        let d = t.i(j) as i64 - s as i64;
        add_h_times_schur(&mut acc, sign, d, &lambda, k);
        terms.push(h_term(sign, d, format!("S_{j}"), lambda));
    }
    acc.retain(|_, v| !v.is_zero());
    let status = if acc.is_empty() { CertificateStatus::Verified } else { CertificateStatus::Failed };
    let residual = (!acc.is_empty()).then(|| render_combination(&acc));
    Ok(RelationCertificate { tuple: t.clone(), s, terms, status, method: VerificationMethod::Pieri, residual })
}

fn expand_terms(terms: &[(i8, Polynomial, Polynomial)], k: usize) -> Polynomial {
    let mut acc = Polynomial::zero(k);
    for (sign, c, g) in terms {
        let prod = c * g;
        acc = if *sign > 0 { &acc + &prod } else { &acc - &prod };
    }
    acc
}

/// [`arel_relation`] certified by expanding every product as a polynomial.
pub fn arel_relation_expanded(t: &IndexTuple, s: usize) -> Result<RelationCertificate, RelationError> {
    let mut cert = arel_relation(t, s)?;
    let k = t.k();
    let mut parts = Vec::new();
    for (term, j) in cert.terms.iter().zip((0..=k).rev()) {
        let d = t.i(j) as i64 - s as i64;
        parts.push((term.sign, complete_h(d, k), schur_bialternant(&generator_set(t, j))?.poly));
    }
    let total = expand_terms(&parts, k);
    cert.method = VerificationMethod::Expansion;
    cert.status = if total.is_zero() { CertificateStatus::Verified } else { CertificateStatus::Failed };
    cert.residual = (!total.is_zero()).then(|| total.to_string());
    Ok(cert)
}

/// Expansion of `det(H_l)` along its appended last column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DetHlReport {
    pub tuple: IndexTuple,
    pub l: usize,
    /// The appended column `(h_{i_r - (k - l)})_r` is a column of `H`.
    pub duplicated: bool,
    pub determinant_vanishes: bool,
    /// Each minor of `H` without row `r` equals this sign times `S_r`.
    pub minor_sign: i8,
    /// `s` of the relation family matching this expansion up to
    /// `minor_sign`, if any.
    pub matches_s: Option<usize>,
    pub terms: Vec<RelationTerm>,
}

/// Builds `H_l` by appending the column `(h_{i_r - (k - l)})_r` to the
/// `(k+1) x k` matrix `H`, takes its determinant directly, and reads the
/// relation off the expansion along the appended column. For
/// `1 <= l <= k` the column is column `l` of `H` (counting from 1).
pub fn det_hl_expansion(t: &IndexTuple, l: usize) -> Result<DetHlReport, RelationError> {
    require_kk1(t)?;
    let k = t.k();
    if l > k {
        return Err(RelationError::Precondition(format!("l = {l} exceeds k = {k}")));
    }
    let h = build_h_matrix(t);
    let shift = (k - l) as i64;
    let col: Vec<Polynomial> = t.values().iter().map(|&ir| complete_h(ir as i64 - shift, k)).collect();
    let hl: Vec<Vec<Polynomial>> = h.iter().zip(&col).map(|(row, c)| row.iter().cloned().chain([c.clone()]).collect()).collect();
    let determinant_vanishes = det_bareiss(&hl)?.is_zero();

    let minor_sign = sign_of((k * (k - 1) / 2) % 2 == 1);
    let mut terms = Vec::with_capacity(k + 1);
    for r in (0..=k).rev() {
        let minor: Vec<Vec<Polynomial>> =
            h.iter().enumerate().filter(|&(q, _)| q != r).map(|(_, row)| row.clone()).collect();
        let sr = schur_bialternant(&generator_set(t, r))?.poly;
        let m = det_bareiss(&minor)?;
        let ok = if minor_sign > 0 { m == sr } else { m == -&sr };
        if !ok {
            return Err(RelationError::Precondition(format!("minor without row {r} is not {minor_sign} * S_{r}")));
        }
        // cofactor sign along column k of a (k+1) x (k+1) matrix
        let sign = sign_of((r + k) % 2 == 1);
        let d = t.i(r) as i64 - shift;
        terms.push(h_term(sign, d, format!("S_{r}"), generator_set(t, r).partition()));
    }
    let matches_s = (0..k).find(|&s| {
        arel_relation(t, s).map(|c| c.terms == terms).unwrap_or(false)
    });
    Ok(DetHlReport { tuple: t.clone(), l, duplicated: l >= 1, determinant_vanishes, minor_sign, matches_s, terms })
}

/// Sign of the closing `G_0` term in the BC relation family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FinalSign {
    /// `(-1)^k`, continuing the alternation.
    Alternating,
    /// `-(-1)^k`.
    Flipped,
    /// `-1` for every `k`.
    Negative,
}

/// `G_0`, the reduced Schur polynomial of `(i_1, ..., i_k)`.
fn g0(t: &IndexTuple) -> Result<(Polynomial, Vec<u32>), RelationError> {
    let j = generator_set(t, 0);
    Ok((reduced_schur(&j)?.poly, j.reduced().partition()))
}

/// The BC family
/// `sum_{j=1}^{k} (-1)^{k-j} h_{i_j - i_1 - s} S_j + sign * s_mu G_0 = 0`
/// with `mu = (i_1 - 1, ..., i_1 - 1, k - 1 - s)` (`k - 1` copies), taking
/// `s_mu = 0` when `k - 1 - s > i_1 - 1`. Certified by full expansion.
pub fn brel_relation(t: &IndexTuple, s: usize, final_sign: FinalSign) -> Result<RelationCertificate, RelationError> {
    require_kk1(t)?;
    require_s(t, s)?;
    let k = t.k();
    let i1 = t.i(1);
    let mut terms = Vec::with_capacity(k + 1);
    let mut parts = Vec::with_capacity(k + 1);
    for j in (1..=k).rev() {
        let sign = sign_of((k - j) % 2 == 1);
        let d = t.i(j) as i64 - i1 as i64 - s as i64;
        let set = generator_set(t, j);
        terms.push(h_term(sign, d, format!("S_{j}"), set.partition()));
        parts.push((sign, complete_h(d, k), schur_bialternant(&set)?.poly));
    }
    let mut mu = vec![i1 - 1; k - 1];
    mu.push((k - 1 - s) as u32);
    let rect_vanishes = (k - 1 - s) as u32 > i1 - 1;
    let sign = match final_sign {
        FinalSign::Alternating => sign_of(k % 2 == 1),
        FinalSign::Flipped => sign_of(k % 2 == 0),
        FinalSign::Negative => -1,
    };
    let (g, g_partition) = g0(t)?;
    let rect = if rect_vanishes { Polynomial::zero(k) } else { schur_of_partition(&mu, k)? };
    terms.push(RelationTerm {
        sign,
        coefficient: format!("s_({})", mu.iter().join(",")),
        vanishes: rect_vanishes,
        generator: "G_0".into(),
        generator_partition: g_partition,
    });
    parts.push((sign, rect, g));
    let total = expand_terms(&parts, k);
    Ok(RelationCertificate {
        tuple: t.clone(),
        s,
        terms,
        status: if total.is_zero() { CertificateStatus::Verified } else { CertificateStatus::Failed },
        method: VerificationMethod::Expansion,
        residual: (!total.is_zero()).then(|| total.to_string()),
    })
}
