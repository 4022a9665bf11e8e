//! Emptiness of the recurrence varieties `V_{k;I}` stratum by stratum, and
//! forcing of extra zeros.
//!
//! A recurrence of order `k` with a nontrivial solution vanishing on `I`
//! has characteristic roots `x_1, ..., x_s` of multiplicities `lambda`; the
//! stratum `lambda` is nonempty iff the confluent minors have a common zero
//! with all `x_j` nonzero and pairwise distinct. The distinct-root stratum
//! uses the BC-localized Schur generators directly.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::RecurrenceError;
use crate::groebner::{arrangement_product, saturate_off_arrangement, saturate_off_hypersurface, Arrangement, Oracle};
use crate::ideal::{build_coarse_ideal, build_confluent_ideal, build_ideal_a, build_ideal_bc, zero_anchored_tuples};
use crate::ideal::{IndexTuple, PartitionSpec};
use crate::polyring::{Monomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StratumStatus {
    Empty,
    Nonempty,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EmptinessOptions {
    /// Also discard points where some ratio `x_a / x_b` is a root of unity
    /// of order `2..=n` (degenerate recurrences). `0` keeps every point.
    pub exclude_roots_of_unity_up_to: u32,
}

impl EmptinessOptions {
    pub fn literal() -> Self {
        EmptinessOptions { exclude_roots_of_unity_up_to: 0 }
    }

    pub fn nondegenerate(max_order: u32) -> Self {
        EmptinessOptions { exclude_roots_of_unity_up_to: max_order }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumResult {
    pub partition: String,
    pub status: StratumStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmptinessRow {
    pub tuple: IndexTuple,
    pub strata: Vec<StratumResult>,
    pub status: StratumStatus,
    /// All pairwise differences of the entries are distinct.
    pub distinct_differences: bool,
}

impl EmptinessRow {
    pub fn is_empty(&self) -> bool {
        self.status == StratumStatus::Empty
    }

    /// The verdict a scan that skipped `partition` would have produced.
    pub fn status_without(&self, partition: &str) -> StratumStatus {
        combine(self.strata.iter().filter(|s| s.partition != partition).map(|s| s.status))
    }
}

fn combine(statuses: impl Iterator<Item = StratumStatus>) -> StratumStatus {
    let mut out = StratumStatus::Empty;
    for s in statuses {
        match s {
            StratumStatus::Nonempty => return StratumStatus::Nonempty,
            StratumStatus::Inconclusive => out = StratumStatus::Inconclusive,
            StratumStatus::Empty => {}
        }
    }
    out
}

fn distinct_differences(t: &IndexTuple) -> bool {
    let diffs: Vec<u32> = t.values().iter().tuple_combinations().map(|(a, b)| b - a).collect();
    diffs.iter().all_unique()
}

fn cyclotomic(n: u32) -> Polynomial {
    let mut p = &Polynomial::var(1, 0).pow(n) - &Polynomial::one(1);
    for d in (1..n).filter(|d| n % d == 0) {
        p = p.div_exact(&cyclotomic(d)).expect("cyclotomic factor");
    }
    p
}

/// `c(x_a / x_b) * x_b^deg c` in `nvars` variables.
fn homogenize_ratio(c: &Polynomial, nvars: usize, a: usize, b: usize) -> Polynomial {
    let d = c.total_degree().expect("nonzero");
    let mut out = Polynomial::zero(nvars);
    for (m, coef) in c.terms() {
        let e = m.exponent(0);
        let mono = Monomial::var(a, e).mul(&Monomial::var(b, d - e));
        out = &out + &Polynomial::monomial(nvars, mono, coef.clone());
    }
    out
}

/// `prod_{a<b} prod_{n=2..=max_order} Phi_n(x_a, x_b)`, vanishing exactly
/// where some ratio `x_a / x_b` is a root of unity of order `2..=max_order`.
pub fn degenerate_ratio_product(nvars: usize, max_order: u32) -> Polynomial {
    let mut acc = Polynomial::one(nvars);
    for n in 2..=max_order {
        let c = cyclotomic(n);
        for (a, b) in (0..nvars).tuple_combinations() {
            acc = &acc * &homogenize_ratio(&c, nvars, a, b);
        }
    }
    acc
}

fn stratum_status(
    gens: &[Polynomial],
    nvars: usize,
    options: EmptinessOptions,
    oracle: &Oracle,
) -> Result<StratumStatus, RecurrenceError> {
    let mut product = arrangement_product(Arrangement::BC, nvars);
    if options.exclude_roots_of_unity_up_to >= 2 {
        product = &product * &degenerate_ratio_product(nvars, options.exclude_roots_of_unity_up_to);
    }
    match saturate_off_hypersurface(gens, nvars, &product, oracle) {
        Ok(r) if r.empty_off_arrangement => Ok(StratumStatus::Empty),
        Ok(_) => Ok(StratumStatus::Nonempty),
        Err(e) if e.is_inconclusive() => Ok(StratumStatus::Inconclusive),
        Err(e) => Err(e.into()),
    }
}

/// Per-stratum emptiness of `V_{k;I}` off the BC arrangement.
pub fn emptiness_of(t: &IndexTuple, options: EmptinessOptions, oracle: &Oracle) -> Result<EmptinessRow, RecurrenceError> {
    let mut strata = Vec::new();
    for lambda in PartitionSpec::all(t.k() as u32) {
        let status = if lambda.is_distinct_stratum() {
            let g = build_ideal_bc(t)?;
            stratum_status(&g.generators, g.nvars, options, oracle)?
        } else {
            let g = build_confluent_ideal(t, &lambda)?;
            stratum_status(&g.generators, g.nvars, options, oracle)?
        };
        strata.push(StratumResult { partition: lambda.to_string(), status });
    }
    let status = combine(strata.iter().map(|s| s.status));
    Ok(EmptinessRow { tuple: t.clone(), strata, status, distinct_differences: distinct_differences(t) })
}

/// [`emptiness_of`] over every gcd-1 tuple `(0, i_1, ..., i_{m-1})` with
/// entries up to `bound`, in lexicographic order.
pub fn emptiness_scan(
    k: usize,
    m: usize,
    bound: u32,
    options: EmptinessOptions,
    oracle: &Oracle,
) -> Result<Vec<EmptinessRow>, RecurrenceError> {
    zero_anchored_tuples(k, m, bound)
        .par_iter()
        .map(|t| emptiness_of(t, options, oracle))
        .collect()
}

/// Whether every solution with distinct nonzero characteristic roots that
/// vanishes on `base` also vanishes at `extra`: each maximal minor of
/// `M_{k; base + extra}` must lie in the saturation of the A-ideal of
/// `base` off the BC arrangement, and off the degenerate ratios when
/// `options` excludes them. Confluent strata are not examined.
pub fn forcing_check(
    base: &IndexTuple,
    extra: u32,
    options: EmptinessOptions,
    oracle: &Oracle,
) -> Result<bool, RecurrenceError> {
    if base.values().contains(&extra) {
        return Ok(true);
    }
    let gens = build_ideal_a(base, false)?;
    let sat = if options.exclude_roots_of_unity_up_to >= 2 {
        let product = &arrangement_product(Arrangement::BC, gens.nvars)
            * &degenerate_ratio_product(gens.nvars, options.exclude_roots_of_unity_up_to);
        saturate_off_hypersurface(&gens.generators, gens.nvars, &product, oracle)?
    } else {
        saturate_off_arrangement(&gens.generators, gens.nvars, Arrangement::BC, oracle)?
    };
    let mut values = base.values().to_vec();
    values.push(extra);
    values.sort_unstable();
    let extended = IndexTuple::new(base.k(), values)?;
    for (j, minor) in build_coarse_ideal(&extended).iter() {
        if !j.contains(&extra) {
            continue;
        }
        if !sat.saturation_contains(minor).map_err(crate::groebner::GroebnerError::from)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[u32]) -> IndexTuple {
        IndexTuple::new(3, v.to_vec()).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), Polynomial::parse("x1 - 1", 1).unwrap());
        assert_eq!(cyclotomic(6), Polynomial::parse("x1^2 - x1 + 1", 1).unwrap());
        assert_eq!(cyclotomic(12), Polynomial::parse("x1^4 - x1^2 + 1", 1).unwrap());
        assert_eq!(degenerate_ratio_product(2, 3), Polynomial::parse("x1^3 + 2 x1^2 x2 + 2 x1 x2^2 + x2^3", 2).unwrap());
    }

    #[test]
    fn differences() {
        assert!(distinct_differences(&t(&[0, 1, 3, 7])));
        assert!(!distinct_differences(&t(&[0, 1, 2, 7])));
    }

    #[test]
    fn cube_roots_of_unity_solve_0137() {
        let o = Oracle::default();
        let row = emptiness_of(&t(&[0, 1, 3, 7]), EmptinessOptions::literal(), &o).unwrap();
        assert_eq!(row.strata[2].partition, "(1,1,1)");
        assert_eq!(row.strata[2].status, StratumStatus::Nonempty);
        // u_n = 1 + w^{n+1} + w^{2n+2} with w^3 = 1 vanishes off 3Z + 2
        let row = emptiness_of(&t(&[0, 1, 3, 7]), EmptinessOptions::nondegenerate(3), &o).unwrap();
        assert!(row.is_empty());
    }

    #[test]
    fn single_root_stratum_is_empty() {
        let o = Oracle::default();
        for v in [[0, 1, 3, 7], [0, 2, 3, 5], [0, 4, 6, 7]] {
            let row = emptiness_of(&t(&v), EmptinessOptions::literal(), &o).unwrap();
            assert_eq!(row.strata[0].partition, "(3)");
            assert_eq!(row.strata[0].status, StratumStatus::Empty);
        }
    }

    #[test]
    fn skipping_a_stratum_changes_the_verdict() {
        let o = Oracle::default();
        let row = emptiness_of(&t(&[0, 1, 3, 7]), EmptinessOptions::literal(), &o).unwrap();
        assert_eq!(row.status, StratumStatus::Nonempty);
        assert_eq!(row.status_without("(1,1,1)"), StratumStatus::Empty);
    }
}
