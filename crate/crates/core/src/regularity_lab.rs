//! Regularity questions for Vandermonde ideals: expected codimension of the
//! A-localized ideal, the arithmetic CKW criterion for `(h_a, h_b, h_c)` in
//! three variables, and dimension tables along a growing last entry.

use std::ops::RangeInclusive;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::groebner::{GroebnerError, Oracle};
use crate::ideal::{build_ideal_a, build_ideal_bc, zero_anchored_tuples, Flavor, IdealError, IndexTuple};
use crate::polyring::{MonomialOrder, Polynomial};
use crate::symmetric::complete_h;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegularityError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("codimension {codim} exceeds the determinantal bound {bound} for {tuple}")]
    CodimensionBound { tuple: String, codim: i64, bound: i64 },
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordStatus {
    Ok,
    Inconclusive,
}

/// Where condition (3) of the CKW criterion stops scanning `t`. Beyond
/// `c + 2` every `d + 2` is its own residue and lies in `[2, t - 1]`.
pub const CKW_T_BOUND_NOTE: &str = "condition (3) checked for 3 <= t <= c+2; for t > c+2 each d+2 is a residue in [2, t-1]";

/// One ideal examined for expected codimension.
///
/// `flavor` is `None` for the three-variable sequences `(h_a, h_b, h_c)` of
/// the CKW comparison, whose entries are `(a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityRecord {
    pub k: usize,
    pub entries: Vec<u32>,
    pub flavor: Option<Flavor>,
    pub codim: Option<i64>,
    pub expected_codim: i64,
    pub is_regular: Option<bool>,
    /// The ideal is the whole ring; its codimension is reported as `nvars + 1`.
    pub unit_ideal: bool,
    pub ckw_prediction: Option<bool>,
    pub membership: Option<bool>,
    /// `(h_{i_2-2}, h_{i_3-2}, h_{i_4-2})` is a regular sequence
    /// (`k = 3`, `m = 5`, `i_1 = 1` only).
    pub reduction_regular: Option<bool>,
    /// The reduction sequence contains `h_0 = 1`.
    pub degenerate: bool,
    pub status: RecordStatus,
}

impl RegularityRecord {
    fn blank(k: usize, entries: Vec<u32>, flavor: Option<Flavor>, expected_codim: i64) -> Self {
        RegularityRecord {
            k,
            entries,
            flavor,
            codim: None,
            expected_codim,
            is_regular: None,
            unit_ideal: false,
            ckw_prediction: None,
            membership: None,
            reduction_regular: None,
            degenerate: false,
            status: RecordStatus::Inconclusive,
        }
    }

    /// The CKW prediction disagrees with the oracle.
    pub fn ckw_mismatch(&self) -> bool {
        matches!((self.ckw_prediction, self.is_regular), (Some(p), Some(r)) if p != r)
    }

    pub fn is_inconclusive(&self) -> bool {
        self.status == RecordStatus::Inconclusive
    }

    pub const CSV_HEADER: [&'static str; 13] = [
        "k",
        "entries",
        "flavor",
        "codim",
        "expected_codim",
        "is_regular",
        "unit_ideal",
        "ckw_prediction",
        "membership",
        "reduction_regular",
        "degenerate",
        "ckw_mismatch",
        "status",
    ];

    pub fn csv_row(&self) -> Vec<String> {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(ToString::to_string).unwrap_or_default()
        }
        vec![
            self.k.to_string(),
            self.entries.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
            self.flavor.map(|f| f.to_string()).unwrap_or_else(|| "h".into()),
            opt(&self.codim),
            self.expected_codim.to_string(),
            opt(&self.is_regular),
            self.unit_ideal.to_string(),
            opt(&self.ckw_prediction),
            opt(&self.membership),
            opt(&self.reduction_regular),
            self.degenerate.to_string(),
            self.ckw_mismatch().to_string(),
            match self.status {
                RecordStatus::Ok => "ok".into(),
                RecordStatus::Inconclusive => "inconclusive".into(),
            },
        ]
    }
}

fn check_triple(a: u32, b: u32, c: u32) -> Result<(), RegularityError> {
    if a == 0 || !(a < b && b < c) {
        return Err(RegularityError::Precondition(format!("need 0 < a < b < c, got ({a},{b},{c})")));
    }
    Ok(())
}

/// The CKW criterion: `(h_a, h_b, h_c)` should be regular in three
/// variables iff `abc = 0 mod 6`, `gcd(a+1, b+1, c+1) = 1`, and every
/// `t >= 3` has some `d` in `{a, b, c}` with `d + 2 != 0, 1 mod t`.
pub fn ckw_predicate(a: u32, b: u32, c: u32) -> Result<bool, RegularityError> {
    check_triple(a, b, c)?;
    let (a64, b64, c64) = (a as u64, b as u64, c as u64);
    if (a64 * b64 * c64) % 6 != 0 {
        return Ok(false);
    }
    if (a + 1).gcd(&(b + 1)).gcd(&(c + 1)) != 1 {
        return Ok(false);
    }
    Ok((3..=c + 2).all(|t| [a, b, c].iter().any(|d| (d + 2) % t > 1)))
}

fn h3(d: u32) -> Polynomial {
    complete_h(d as i64, 3)
}

/// Whether `h_c` lies in `(h_a, h_b)` in three variables.
pub fn membership_hc(a: u32, b: u32, c: u32, oracle: &Oracle) -> Result<bool, RegularityError> {
    check_triple(a, b, c)?;
    let gb = oracle.basis(&[h3(a), h3(b)], 3, MonomialOrder::DegRevLex)?;
    Ok(gb.contains(&h3(c)).map_err(GroebnerError::from)?)
}

/// Codimension of the ideal generated by `gens`; unit ideals get `nvars + 1`.
fn codim_of(gens: &[Polynomial], nvars: usize, oracle: &Oracle) -> Result<(i64, bool), GroebnerError> {
    let gb = oracle.basis(gens, nvars, MonomialOrder::DegRevLex)?;
    Ok((nvars as i64 - gb.krull_dimension(), gb.is_unit()))
}

fn ckw_record(a: u32, b: u32, c: u32, oracle: &Oracle) -> Result<RegularityRecord, RegularityError> {
    let mut rec = RegularityRecord::blank(3, vec![a, b, c], None, 3);
    rec.ckw_prediction = Some(ckw_predicate(a, b, c)?);
    let codim = match codim_of(&[h3(a), h3(b), h3(c)], 3, oracle) {
        Ok(v) => v,
        Err(e) if e.is_inconclusive() => return Ok(rec),
        Err(e) => return Err(e.into()),
    };
    let membership = match membership_hc(a, b, c, oracle) {
        Ok(v) => v,
        Err(RegularityError::Groebner(e)) if e.is_inconclusive() => return Ok(rec),
        Err(e) => return Err(e),
    };
    rec.codim = Some(codim.0);
    rec.unit_ideal = codim.1;
    rec.is_regular = Some(codim.0 == 3);
    rec.membership = Some(membership);
    rec.status = RecordStatus::Ok;
    Ok(rec)
}

/// CKW prediction against the oracle for every `1 <= a < b < c <= bound`,
/// in lexicographic order.
pub fn ckw_comparison_scan(bound: u32, oracle: &Oracle) -> Result<Vec<RegularityRecord>, RegularityError> {
    let triples: Vec<(u32, u32, u32)> = (1..=bound)
        .flat_map(|a| (a + 1..=bound).flat_map(move |b| (b + 1..=bound).map(move |c| (a, b, c))))
        .collect();
    triples.par_iter().map(|&(a, b, c)| ckw_record(a, b, c, oracle)).collect()
}

/// Expected codimension of one tuple for the given flavor.
pub fn regularity_of(t: &IndexTuple, flavor: Flavor, oracle: &Oracle) -> Result<RegularityRecord, RegularityError> {
    let (k, m) = (t.k(), t.m());
    if !(k <= m && m < 2 * k) {
        return Err(RegularityError::Precondition(format!("need k <= m <= 2k-1, got k={k}, m={m}")));
    }
    let expected = (m - k + 1) as i64;
    let gens = match flavor {
        Flavor::A => build_ideal_a(t, t.i(0) == 0)?,
        Flavor::BC => build_ideal_bc(t)?,
        other => return Err(RegularityError::Precondition(format!("flavor {other} has no expected codimension"))),
    };
    let mut rec = RegularityRecord::blank(k, t.values().to_vec(), Some(flavor), expected);
    let (codim, unit) = match codim_of(&gens.generators, gens.nvars, oracle) {
        Ok(v) => v,
        Err(e) if e.is_inconclusive() => return Ok(rec),
        Err(e) => return Err(e.into()),
    };
    if !unit && codim > expected {
        return Err(RegularityError::CodimensionBound { tuple: t.to_string(), codim, bound: expected });
    }
    if flavor == Flavor::A && k == 3 && m == 5 && t.i(0) == 0 && t.i(1) == 1 {
        let idx = [t.i(2) - 2, t.i(3) - 2, t.i(4) - 2];
        rec.degenerate = idx[0] == 0;
        let hs: Vec<Polynomial> = idx.iter().map(|&d| h3(d)).collect();
        match crate::groebner::is_regular_sequence(&hs, 3, oracle) {
            Ok(r) => rec.reduction_regular = Some(r),
            Err(e) if e.is_inconclusive() => return Ok(rec),
            Err(e) => return Err(e.into()),
        }
    }
    rec.codim = Some(codim);
    rec.unit_ideal = unit;
    rec.is_regular = Some(codim == expected);
    rec.status = RecordStatus::Ok;
    Ok(rec)
}

/// [`regularity_of`] for the A flavor over every gcd-1 tuple
/// `(0, i_1, ..., i_{m-1})` with entries up to `bound`.
pub fn a_regularity_scan(k: usize, m: usize, bound: u32, oracle: &Oracle) -> Result<Vec<RegularityRecord>, RegularityError> {
    if !(k <= m && m < 2 * k) {
        return Err(RegularityError::Precondition(format!("need k <= m <= 2k-1, got k={k}, m={m}")));
    }
    zero_anchored_tuples(k, m, bound)
        .par_iter()
        .map(|t| regularity_of(t, Flavor::A, oracle))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodObservation {
    pub period: usize,
    /// First last-entry value from which the table repeats.
    pub from: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityReport {
    pub k: usize,
    pub prefix: Vec<u32>,
    /// `(i_{m-1}, dim Vd^A)`; `None` marks an inconclusive cell.
    pub table: Vec<(u32, Option<i64>)>,
    pub period: Option<PeriodObservation>,
}

/// Eventual period of `values`: the pair `(p, start)` with `values[start..]`
/// repeating with period `p` over at least two full periods, minimizing
/// `start + p` and then `p`. Unknown cells never match.
pub fn detect_period(values: &[Option<i64>]) -> Option<(usize, usize)> {
    let n = values.len();
    let mut best: Option<(usize, usize)> = None;
    for p in 1..=n / 2 {
        let mut start = n - p;
        while start > 0 {
            let (x, y) = (values[start - 1], values[start - 1 + p]);
            if x.is_none() || x != y {
                break;
            }
            start -= 1;
        }
        if values[start..].iter().any(Option::is_none) || n - start < 2 * p {
            continue;
        }
        if best.is_none_or(|(bp, bs)| start + p < bs + bp) {
            best = Some((p, start));
        }
    }
    best
}

/// Dimension of the A-variety of `prefix + (last,)` for each `last` in the
/// range, with the minimal eventual period seen inside the window.
pub fn periodicity_scan(
    k: usize,
    prefix: &[u32],
    last: RangeInclusive<u32>,
    oracle: &Oracle,
) -> Result<PeriodicityReport, RegularityError> {
    if prefix.len() < 2 || prefix[0] != 0 || prefix[1] != 1 {
        return Err(RegularityError::Precondition("prefix must start with 0, 1".into()));
    }
    let top = *prefix.last().expect("nonempty");
    if *last.start() <= top {
        return Err(RegularityError::Precondition(format!("last entry must exceed {top}")));
    }
    let lasts: Vec<u32> = last.collect();
    let dims = lasts
        .par_iter()
        .map(|&l| {
            let mut v = prefix.to_vec();
            v.push(l);
            let t = IndexTuple::new(k, v)?;
            let gens = build_ideal_a(&t, true)?;
            match oracle.basis(&gens.generators, k, MonomialOrder::DegRevLex) {
                Ok(gb) => Ok(Some(gb.krull_dimension())),
                Err(e) if e.is_inconclusive() => Ok(None),
                Err(e) => Err(e.into()),
            }
        })
        .collect::<Result<Vec<Option<i64>>, RegularityError>>()?;
    let period = detect_period(&dims).map(|(p, s)| PeriodObservation { period: p, from: lasts[s] });
    Ok(PeriodicityReport { k, prefix: prefix.to_vec(), table: lasts.into_iter().zip(dims).collect(), period })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ckw_arithmetic() {
        assert!(ckw_predicate(1, 2, 3).unwrap());
        assert!(!ckw_predicate(1, 4, 5).unwrap());
        assert!(ckw_predicate(2, 2, 3).is_err());
        assert!(ckw_predicate(0, 2, 3).is_err());
        assert!(!ckw_predicate(1, 2, 4).unwrap());
        assert!(!ckw_predicate(1, 3, 5).unwrap());
    }

    #[test]
    fn period_detector() {
        let c: Vec<Option<i64>> = vec![Some(1); 6];
        assert_eq!(detect_period(&c), Some((1, 0)));
        let v: Vec<Option<i64>> = [5, 0, 1, 0, 1, 0, 1].iter().map(|&x| Some(x)).collect();
        assert_eq!(detect_period(&v), Some((2, 1)));
        let w: Vec<Option<i64>> = [0, 1, 2, 3].iter().map(|&x| Some(x)).collect();
        assert_eq!(detect_period(&w), None);
        assert_eq!(detect_period(&[Some(1), None, Some(1), None]), None);
        let u: Vec<Option<i64>> = [0, 1, 1, 0, 1, 1, 0, 1, 1].iter().map(|&x| Some(x)).collect();
        assert_eq!(detect_period(&u), Some((3, 0)));
    }

    #[test]
    fn small_records() {
        let o = Oracle::default();
        let r = ckw_record(1, 4, 5, &o).unwrap();
        assert_eq!(r.is_regular, Some(false));
        assert_eq!(r.membership, Some(false));
        let r = ckw_record(1, 2, 3, &o).unwrap();
        assert_eq!(r.is_regular, Some(true));
        assert_eq!(r.membership, Some(false));
        let t = IndexTuple::new(3, vec![0, 1, 2, 3, 7]).unwrap();
        let r = regularity_of(&t, Flavor::A, &o).unwrap();
        assert!(r.unit_ideal && r.degenerate);
        assert_eq!(r.is_regular, r.reduction_regular);
    }
}
