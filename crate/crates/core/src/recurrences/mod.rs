//! Linear recurrences with constant coefficients and the variety-side
//! experiments built on them.
//!
//! A recurrence of order `k` is `u_n + a_1 u_{n-1} + ... + a_k u_{n-k} = 0`
//! with `a_k != 0`; its characteristic polynomial is
//! `t^k + a_1 t^{k-1} + ... + a_k`.

mod scan;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::groebner::GroebnerError;
use crate::ideal::{IdealError, IndexTuple};
use crate::polyring::{Monomial, Polynomial};

pub use scan::{
    degenerate_ratio_product, emptiness_of, emptiness_scan, forcing_check, EmptinessOptions, EmptinessRow,
    StratumResult, StratumStatus,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecurrenceError {
    #[error("a recurrence needs at least one coefficient")]
    Empty,
    #[error("the last coefficient must be nonzero")]
    ZeroLastCoefficient,
    #[error("root {0} is zero")]
    ZeroRoot(usize),
    #[error("roots are not known for this recurrence")]
    NoRoots,
    #[error("expected {expected} initial values, got {got}")]
    InitialLength { expected: usize, got: usize },
    #[error("window end {n_max} is smaller than the order {k}")]
    ShortWindow { n_max: usize, k: usize },
    #[error("invalid points: {0}")]
    InvalidPoints(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

impl RecurrenceError {
    pub fn is_inconclusive(&self) -> bool {
        matches!(self, RecurrenceError::Groebner(e) if e.is_inconclusive())
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Coefficients `a_1, ..., a_k`, optionally with the roots they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSpec {
    coefficients: Vec<BigRational>,
    roots: Option<Vec<BigRational>>,
}

impl RecurrenceSpec {
    pub fn new(coefficients: Vec<BigRational>) -> Result<Self, RecurrenceError> {
        match coefficients.last() {
            None => Err(RecurrenceError::Empty),
            Some(c) if c.is_zero() => Err(RecurrenceError::ZeroLastCoefficient),
            Some(_) => Ok(RecurrenceSpec { coefficients, roots: None }),
        }
    }

    pub fn from_i64s(coefficients: &[i64]) -> Result<Self, RecurrenceError> {
        Self::new(coefficients.iter().map(|&c| rat(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn roots(&self) -> Option<&[BigRational]> {
        self.roots.as_deref()
    }

    /// `t^k + a_1 t^{k-1} + ... + a_k` in one variable.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        let k = self.order();
        let mut p = Polynomial::monomial(1, Monomial::var(0, k as u32), BigRational::one());
        for (j, a) in self.coefficients.iter().enumerate() {
            p = &p + &Polynomial::monomial(1, Monomial::var(0, (k - 1 - j) as u32), a.clone());
        }
        p
    }
}

/// The recurrence whose characteristic polynomial is `prod (t - x_j)`.
pub fn vieta(roots: &[BigRational]) -> Result<RecurrenceSpec, RecurrenceError> {
    if roots.is_empty() {
        return Err(RecurrenceError::Empty);
    }
    if let Some(j) = roots.iter().position(Zero::is_zero) {
        return Err(RecurrenceError::ZeroRoot(j));
    }
    // c[i] is the coefficient of t^{deg - i}
    let mut c = vec![BigRational::one()];
    for x in roots {
        let mut next = c.clone();
        next.push(BigRational::zero());
        for (i, ci) in c.iter().enumerate() {
            next[i + 1] -= ci * x;
        }
        c = next;
    }
    c.remove(0);
    Ok(RecurrenceSpec { coefficients: c, roots: Some(roots.to_vec()) })
}

/// `u_0, ..., u_{n_max}` from the initial values `u_0, ..., u_{k-1}`.
pub fn eval_recurrence(
    spec: &RecurrenceSpec,
    initial: &[BigRational],
    n_max: usize,
) -> Result<Vec<BigRational>, RecurrenceError> {
    let k = spec.order();
    if initial.len() != k {
        return Err(RecurrenceError::InitialLength { expected: k, got: initial.len() });
    }
    if n_max < k {
        return Err(RecurrenceError::ShortWindow { n_max, k });
    }
    let mut u = initial.to_vec();
    for n in k..=n_max {
        let mut v = BigRational::zero();
        for (j, a) in spec.coefficients.iter().enumerate() {
            v -= a * &u[n - 1 - j];
        }
        u.push(v);
    }
    Ok(u)
}

/// A residue class all of whose members in the window vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Progression {
    pub residue: usize,
    pub difference: usize,
    /// Members of the class inside the window.
    pub members: usize,
}

/// Zeros of a sequence inside `[0, n_max]`. Progressions are observed in the
/// window only; nothing beyond `n_max` is claimed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroReport {
    pub n_max: usize,
    pub zeros: Vec<usize>,
    pub progressions: Vec<Progression>,
    pub sporadic: Vec<usize>,
    /// The sequence is identically zero.
    pub trivial: bool,
}

/// Zero set and observed progressions `r + dZ` (`0 <= r < d <= d_max`, at
/// least three members in the window). A class already covered by a reported
/// progression of smaller difference is not reported again.
pub fn zero_report(
    spec: &RecurrenceSpec,
    initial: &[BigRational],
    n_max: usize,
    d_max: usize,
) -> Result<ZeroReport, RecurrenceError> {
    let u = eval_recurrence(spec, initial, n_max)?;
    let zeros: Vec<usize> = (0..=n_max).filter(|&n| u[n].is_zero()).collect();
    // a recurrence solution vanishing at k consecutive places is zero
    let trivial = initial.iter().all(Zero::is_zero);
    let mut progressions: Vec<Progression> = Vec::new();
    if !trivial {
        for d in 1..=d_max {
            for r in 0..d {
                let class: Vec<usize> = (r..=n_max).step_by(d).collect();
                if class.len() < 3 || class.iter().any(|&n| !u[n].is_zero()) {
                    continue;
                }
                if progressions.iter().any(|p| d % p.difference == 0 && r % p.difference == p.residue) {
                    continue;
                }
                progressions.push(Progression { residue: r, difference: d, members: class.len() });
            }
        }
    }
    let covered: BTreeSet<usize> = progressions
        .iter()
        .flat_map(|p| (p.residue..=n_max).step_by(p.difference))
        .collect();
    let sporadic = if trivial { Vec::new() } else { zeros.iter().copied().filter(|n| !covered.contains(n)).collect() };
    Ok(ZeroReport { n_max, zeros, progressions, sporadic, trivial })
}

/// No ratio of two distinct roots is a root of unity. For rational roots
/// the only candidates are `1` and `-1`, so this is `x_i != -x_j`.
pub fn nondegenerate(spec: &RecurrenceSpec) -> Result<bool, RecurrenceError> {
    let roots = spec.roots().ok_or(RecurrenceError::NoRoots)?;
    let distinct: BTreeSet<&BigRational> = roots.iter().collect();
    Ok(!distinct.iter().any(|&x| x.is_positive() && distinct.contains(&-x)))
}

/// Rank of `M_{k;I}` at a point, with a kernel vector when it drops rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VandermondeRank {
    pub rank: usize,
    pub kernel: Option<Vec<BigRational>>,
}

/// Exact rank of the matrix `(x_j^{i})_{i in I, j}` at pairwise distinct
/// nonzero points.
pub fn vandermonde_rank(points: &[BigRational], t: &IndexTuple) -> Result<VandermondeRank, RecurrenceError> {
    let k = points.len();
    if k != t.k() {
        return Err(RecurrenceError::InvalidPoints(format!("{k} points for k = {}", t.k())));
    }
    if points.iter().any(Zero::is_zero) {
        return Err(RecurrenceError::InvalidPoints("zero coordinate".into()));
    }
    if points.iter().collect::<BTreeSet<_>>().len() != k {
        return Err(RecurrenceError::InvalidPoints("repeated coordinate".into()));
    }
    let mut rows: Vec<Vec<BigRational>> = t
        .values()
        .iter()
        .map(|&i| points.iter().map(|x| num_traits::pow(x.clone(), i as usize)).collect())
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..k {
                    let d = &f * &rows[r][j];
                    rows[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rank = pivots.len();
    let kernel = (0..k).find(|c| !pivots.contains(c)).map(|free| {
        let mut v = vec![BigRational::zero(); k];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[row][free].clone();
        }
        let lead = v.iter().find(|c| !c.is_zero()).expect("free entry is one").clone();
        v.iter().map(|c| c / &lead).collect()
    });
    Ok(VandermondeRank { rank, kernel })
}

/// Initial values `u_0, ..., u_{k-1}` of `u_n = sum_j c_j x_j^n`.
pub fn power_sum_initial(points: &[BigRational], weights: &[BigRational]) -> Vec<BigRational> {
    (0..points.len())
        .map(|n| {
            points
                .iter()
                .zip(weights)
                .map(|(x, c)| c * num_traits::pow(x.clone(), n))
                .fold(BigRational::zero(), |a, b| a + b)
        })
        .collect()
}
