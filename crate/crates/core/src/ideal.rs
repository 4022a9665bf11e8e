//! Generator sets of the Vandermonde ideals attached to an index tuple.
//!
//! For `(k; I)` with `I = (i_0 < ... < i_{m-1})` the matrix `M_{k;I}` has
//! rows `(x_1^{i_r}, ..., x_k^{i_r})`. Its maximal minors are alternants; the
//! A-localized ideal uses the Schur quotients, the BC-localized one the Schur
//! polynomials of the gap sequences.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::{maximal_minors, Monomial, PolyMatrix, Polynomial, MAX_VARS};
use crate::symmetric::{alternant, complete_h, reduced_schur, schur_bialternant, ExponentSet, SymmetricError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("invalid index tuple: {0}")]
    InvalidTuple(String),
    #[error("minimal generators need i_0 = 0, got i_0 = {0}")]
    MinimalNeedsZero(u32),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error(transparent)]
    Symmetric(#[from] SymmetricError),
}

/// The pair `(k; I)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexTuple {
    k: usize,
    values: Vec<u32>,
}

impl IndexTuple {
    pub fn new(k: usize, values: Vec<u32>) -> Result<Self, IdealError> {
        if k == 0 {
            return Err(IdealError::InvalidTuple("k must be positive".into()));
        }
        if k > MAX_VARS {
            return Err(IdealError::InvalidTuple(format!("k = {k} exceeds {MAX_VARS}")));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(IdealError::InvalidTuple(format!("{values:?} is not strictly increasing")));
        }
        if values.len() < k {
            return Err(IdealError::InvalidTuple(format!("m = {} is smaller than k = {k}", values.len())));
        }
        Ok(IndexTuple { k, values })
    }

    /// Parses the comma-separated form `0,1,3,7`.
    pub fn parse(k: usize, text: &str) -> Result<Self, IdealError> {
        let values = text
            .split(',')
            .map(|s| s.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| IdealError::InvalidTuple(format!("'{text}': {e}")))?;
        Self::new(k, values)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn i(&self, r: usize) -> u32 {
        self.values[r]
    }

    /// `N = i_1 + ... + i_{m-1}`.
    pub fn n_stat(&self) -> u64 {
        self.values[1..].iter().map(|&v| v as u64).sum()
    }

    /// `gcd(i_1 - i_0, ..., i_{m-1} - i_0)`; zero when `m = 1`.
    pub fn gcd(&self) -> u32 {
        let i0 = self.values[0];
        self.values[1..].iter().fold(0u32, |g, &v| g.gcd(&(v - i0)))
    }

    /// Tagged when the gaps share a common factor.
    pub fn is_rescalable(&self) -> bool {
        self.gcd() > 1
    }

    /// `{i_{m-1} - i_j}` sorted increasingly.
    pub fn dual(&self) -> IndexTuple {
        let top = *self.values.last().expect("m >= k >= 1");
        let mut v: Vec<u32> = self.values.iter().map(|&x| top - x).collect();
        v.reverse();
        IndexTuple { k: self.k, values: v }
    }

    pub fn shifted(&self, c: u32) -> IndexTuple {
        IndexTuple { k: self.k, values: self.values.iter().map(|&x| x + c).collect() }
    }

    /// All `k`-element subsequences, in lexicographic order of positions.
    pub fn subsequences(&self) -> impl Iterator<Item = ExponentSet> + '_ {
        self.values
            .iter()
            .copied()
            .combinations(self.k)
            .map(|v| ExponentSet::new(v).expect("subsequence of an increasing tuple"))
    }

    /// The same tuple viewed with another `k`.
    pub fn with_k(&self, k: usize) -> Result<IndexTuple, IdealError> {
        IndexTuple::new(k, self.values.clone())
    }

    /// Text form `0,1,3,7`.
    pub fn values_text(&self) -> String {
        self.values.iter().join(",")
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}; I=({})", self.k, self.values_text())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    A,
    BC,
    #[serde(rename = "coarse-minor")]
    CoarseMinor,
    #[serde(rename = "confluent")]
    Confluent,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::A => "A",
            Flavor::BC => "BC",
            Flavor::CoarseMinor => "coarse-minor",
            Flavor::Confluent => "confluent",
        })
    }
}

/// Generators together with the row subsequence each one came from.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    pub nvars: usize,
    pub generators: Vec<Polynomial>,
    pub provenance: Vec<Vec<u32>>,
    pub flavor: Flavor,
    pub rescalable: bool,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[u32], &Polynomial)> {
        self.provenance.iter().map(Vec::as_slice).zip(&self.generators)
    }

    /// The generator built from subsequence `j`, if present.
    pub fn by_provenance(&self, j: &[u32]) -> Option<&Polynomial> {
        self.iter().find(|(p, _)| *p == j).map(|(_, g)| g)
    }
}

/// A partition `lambda_1 >= ... >= lambda_s >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionSpec {
    parts: Vec<u32>,
}

impl PartitionSpec {
    pub fn new(parts: Vec<u32>) -> Result<Self, IdealError> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(IdealError::InvalidPartition(format!("{parts:?} has an empty or zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(IdealError::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(PartitionSpec { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(1, ..., 1)`.
    pub fn is_distinct_stratum(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<PartitionSpec> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<PartitionSpec>) {
            if rest == 0 {
                out.push(PartitionSpec { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// Every `(k; I)` with `i_0 = 0`, `m` entries, `i_{m-1} <= bound` and gap
/// gcd 1, in lexicographic order.
pub fn zero_anchored_tuples(k: usize, m: usize, bound: u32) -> Vec<IndexTuple> {
    if m == 0 {
        return Vec::new();
    }
    (1..=bound)
        .combinations(m - 1)
        .filter_map(|rest| {
            let mut v = Vec::with_capacity(m);
            v.push(0);
            v.extend(rest);
            IndexTuple::new(k, v).ok()
        })
        .filter(|t| m == 1 || t.gcd() == 1)
        .collect()
}

/// Schur generators of the A-localized ideal. Minimal mode keeps only the
/// subsequences through `i_0`, which requires `i_0 = 0`.
pub fn build_ideal_a(t: &IndexTuple, minimal: bool) -> Result<GeneratorSet, IdealError> {
    if minimal && t.i(0) != 0 {
        return Err(IdealError::MinimalNeedsZero(t.i(0)));
    }
    let mut generators = Vec::new();
    let mut provenance = Vec::new();
    for j in t.subsequences() {
        if minimal && j.values()[0] != t.i(0) {
            continue;
        }
        generators.push(schur_bialternant(&j)?.poly);
        provenance.push(j.values().to_vec());
    }
    Ok(GeneratorSet { nvars: t.k(), generators, provenance, flavor: Flavor::A, rescalable: t.is_rescalable() })
}

/// Reduced Schur generators of the BC-localized ideal; repeated polynomials
/// keep the provenance of their first occurrence.
pub fn build_ideal_bc(t: &IndexTuple) -> Result<GeneratorSet, IdealError> {
    let mut generators: Vec<Polynomial> = Vec::new();
    let mut provenance = Vec::new();
    for j in t.subsequences() {
        let g = reduced_schur(&j)?.poly;
        if !generators.contains(&g) {
            generators.push(g);
            provenance.push(j.values().to_vec());
        }
    }
    Ok(GeneratorSet { nvars: t.k(), generators, provenance, flavor: Flavor::BC, rescalable: t.is_rescalable() })
}

/// The `m x k` matrix with row `r = (h_{i_r-(k-1)}, ..., h_{i_r})`.
pub fn build_h_matrix(t: &IndexTuple) -> PolyMatrix {
    let k = t.k();
    t.values()
        .iter()
        .map(|&ir| (0..k).map(|c| complete_h(ir as i64 - (k - 1 - c) as i64, k)).collect())
        .collect()
}

/// Maximal minors of `M_{k;I}` itself (alternants, no localization).
pub fn build_coarse_ideal(t: &IndexTuple) -> GeneratorSet {
    let mut generators = Vec::new();
    let mut provenance = Vec::new();
    for j in t.subsequences() {
        generators.push(alternant(&j));
        provenance.push(j.values().to_vec());
    }
    GeneratorSet {
        nvars: t.k(),
        generators,
        provenance,
        flavor: Flavor::CoarseMinor,
        rescalable: t.is_rescalable(),
    }
}

/// The confluent matrix `M^lambda`: one column block per part, block `j` with
/// columns `i^r x_j^i` for `r = 0, ..., lambda_j - 1`.
pub fn confluent_matrix(t: &IndexTuple, lambda: &PartitionSpec) -> Result<PolyMatrix, IdealError> {
    if lambda.size() as usize != t.k() {
        return Err(IdealError::InvalidPartition(format!("{lambda} is not a partition of k = {}", t.k())));
    }
    let s = lambda.len();
    let rows = t
        .values()
        .iter()
        .map(|&i| {
            let mut row = Vec::with_capacity(t.k());
            for (j, &part) in lambda.parts().iter().enumerate() {
                for r in 0..part {
                    let c = BigRational::from_integer(BigInt::from(i).pow(r));
                    row.push(Polynomial::monomial(s, Monomial::var(j, i), c));
                }
            }
            row
        })
        .collect();
    Ok(rows)
}

/// All `k x k` minors of the confluent matrix, zero minors included, in
/// the variables `x_1, ..., x_s`.
pub fn build_confluent_ideal(t: &IndexTuple, lambda: &PartitionSpec) -> Result<GeneratorSet, IdealError> {
    let m = confluent_matrix(t, lambda)?;
    let minors = maximal_minors(&m).map_err(SymmetricError::from)?;
    let (provenance, generators): (Vec<Vec<u32>>, Vec<Polynomial>) = minors
        .into_iter()
        .map(|(rows, d)| (rows.iter().map(|&r| t.i(r)).collect(), d))
        .unzip();
    Ok(GeneratorSet {
        nvars: lambda.len(),
        generators,
        provenance,
        flavor: Flavor::Confluent,
        rescalable: t.is_rescalable(),
    })
}
