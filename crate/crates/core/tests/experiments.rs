use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use vdlab::closed_forms::{degree_gtp, degree_kk1, hilbert_numerator_en, hilbert_series_kk1, EnConvention};
use vdlab::groebner::{HilbertSeries, Oracle};
use vdlab::ideal::{build_ideal_a, zero_anchored_tuples, IndexTuple};
use vdlab::recurrences::{
    eval_recurrence, power_sum_initial, vandermonde_rank, vieta, zero_report, RecurrenceSpec,
};
use vdlab::regularity_lab::{ckw_comparison_scan, periodicity_scan, regularity_of};
use vdlab::relations::{arel_relation, arel_relation_expanded, CertificateStatus};
use vdlab::{MonomialOrder, Polynomial};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn direct_power_sum(points: &[BigRational], weights: &[BigRational], n: usize) -> BigRational {
    points.iter().zip(weights).map(|(x, w)| w * num_traits::pow(x.clone(), n)).sum()
}

fn distinct_points() -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::btree_set((-5i64..=5, 1i64..=3), 1..=3).prop_filter_map("nonzero distinct", |s| {
        let mut pts: Vec<BigRational> = s.into_iter().map(|(n, d)| q(n, d)).collect();
        pts.sort();
        pts.dedup();
        (pts.iter().all(|x| !x.is_zero())).then_some(pts)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn recurrence_matches_closed_form(points in distinct_points(), ws in prop::collection::vec(-3i64..=3, 3)) {
        let k = points.len();
        let weights: Vec<BigRational> = ws[..k].iter().map(|&w| q(w, 1)).collect();
        let spec = vieta(&points).unwrap();
        let u = eval_recurrence(&spec, &power_sum_initial(&points, &weights), 15).unwrap();
        for (n, un) in u.iter().enumerate() {
            prop_assert_eq!(un, &direct_power_sum(&points, &weights, n));
        }
    }

    #[test]
    fn vieta_is_permutation_invariant_and_factors(points in distinct_points()) {
        let spec = vieta(&points).unwrap();
        let mut rev = points.clone();
        rev.reverse();
        let reversed = vieta(&rev).unwrap();
        prop_assert_eq!(spec.coefficients(), reversed.coefficients());
        let mut p = spec.characteristic_polynomial();
        for x in &points {
            let linear = &Polynomial::var(1, 0) - &Polynomial::constant(1, x.clone());
            p = p.div_exact(&linear).unwrap();
        }
        prop_assert!(p.is_one());
    }

    #[test]
    fn reported_progressions_vanish(cs in prop::collection::vec(-2i64..=2, 1..=3), init in prop::collection::vec(-2i64..=2, 3)) {
        prop_assume!(*cs.last().unwrap() != 0);
        let spec = RecurrenceSpec::from_i64s(&cs).unwrap();
        let initial: Vec<BigRational> = init[..cs.len()].iter().map(|&v| q(v, 1)).collect();
        let report = zero_report(&spec, &initial, 40, 8).unwrap();
        let u = eval_recurrence(&spec, &initial, 40).unwrap();
        for pr in &report.progressions {
            for n in (pr.residue..=40).step_by(pr.difference) {
                prop_assert!(u[n].is_zero());
            }
        }
        for &z in &report.zeros {
            prop_assert!(u[z].is_zero());
        }
        prop_assert_eq!(report.zeros.len(), u.iter().filter(|v| v.is_zero()).count());
    }
}

#[test]
fn kernel_solutions_vanish_on_the_tuple() {
    let cases: Vec<(Vec<BigRational>, IndexTuple)> = vec![
        (vec![q(1, 1), q(-1, 1)], IndexTuple::new(2, vec![0, 2]).unwrap()),
        (vec![q(1, 1), q(-1, 1)], IndexTuple::new(2, vec![1, 3, 5]).unwrap()),
        (vec![q(1, 1), q(2, 1), q(-2, 1)], IndexTuple::new(3, vec![0, 2, 4]).unwrap()),
    ];
    for (points, t) in cases {
        let r = vandermonde_rank(&points, &t).unwrap();
        assert!(r.rank < t.k());
        let w = r.kernel.unwrap();
        let u = eval_recurrence(&vieta(&points).unwrap(), &power_sum_initial(&points, &w), 12).unwrap();
        for &i in t.values() {
            assert!(u[i as usize].is_zero(), "{t} at {i}");
        }
        assert!(u.iter().any(|v| !v.is_zero()));
    }
    let full = vandermonde_rank(&[q(1, 1), q(2, 1)], &IndexTuple::new(2, vec![0, 1, 3]).unwrap()).unwrap();
    assert_eq!(full.rank, 2);
    assert!(full.kernel.is_none());
}

#[test]
fn ckw_small_scale_agreement() {
    let records = ckw_comparison_scan(7, &Oracle::default()).unwrap();
    assert_eq!(records.len(), 35);
    assert!(records.iter().all(|r| !r.is_inconclusive()));
    assert!(records.iter().all(|r| !r.ckw_mismatch()), "CKW disagrees at small scale");
    for r in &records {
        if r.is_regular == Some(true) {
            assert_eq!(r.membership, Some(false), "{:?}", r.entries);
        }
    }
}

#[test]
fn period_report_is_stable_under_extension() {
    let o = Oracle::default();
    let first = periodicity_scan(3, &[0, 1, 3, 4], 5..=22, &o).unwrap();
    let p = first.period.expect("period observed");
    let longer = periodicity_scan(3, &[0, 1, 3, 4], 5..=22 + p.period as u32, &o).unwrap();
    assert_eq!(longer.period.map(|x| x.period), Some(p.period));
    assert_eq!(&longer.table[..first.table.len()], &first.table[..]);
}

#[test]
fn reduction_agrees_on_i1_equal_one() {
    let o = Oracle::default();
    for t in zero_anchored_tuples(3, 5, 9).into_iter().filter(|t| t.i(1) == 1) {
        let r = regularity_of(&t, vdlab::ideal::Flavor::A, &o).unwrap();
        assert_eq!(r.reduction_regular, r.is_regular, "{t}");
        assert_eq!(r.degenerate, t.i(2) == 2);
    }
}

#[test]
fn pieri_and_expansion_certificates_agree() {
    for t in zero_anchored_tuples(3, 4, 7).into_iter().take(25) {
        for s in 0..3 {
            let a = arel_relation(&t, s).unwrap();
            let b = arel_relation_expanded(&t, s).unwrap();
            assert_eq!(a.status, CertificateStatus::Verified);
            assert_eq!(b.status, CertificateStatus::Verified);
        }
    }
}

fn oracle_series(t: &IndexTuple) -> HilbertSeries {
    let g = build_ideal_a(t, true).unwrap();
    Oracle::default().basis(&g.generators, t.k(), MonomialOrder::DegRevLex).unwrap().hilbert_series()
}

#[test]
fn closed_forms_against_the_oracle() {
    for v in [[0, 1, 3, 7], [0, 2, 3, 7], [0, 3, 5, 8], [0, 1, 2, 4]] {
        let t = IndexTuple::new(3, v.to_vec()).unwrap();
        let hs = oracle_series(&t);
        assert_eq!(hilbert_series_kk1(&t).unwrap().canonical(), hs.canonical(), "{t}");
        assert_eq!(degree_kk1(&t).unwrap(), hs.degree(), "{t}");
    }
    let regular: Vec<IndexTuple> = zero_anchored_tuples(3, 5, 8)
        .into_iter()
        .filter(|t| regularity_of(t, vdlab::ideal::Flavor::A, &Oracle::default()).unwrap().is_regular == Some(true))
        .collect();
    assert!(!regular.is_empty());
    for t in regular {
        let hs = oracle_series(&t);
        let en = HilbertSeries::new(hilbert_numerator_en(&t, EnConvention::ZeroAnchored).unwrap(), 3);
        assert_eq!(en.canonical(), hs.canonical(), "{t}");
        assert_eq!(degree_gtp(&t).unwrap(), hs.degree(), "{t}");
    }
    assert_eq!(degree_gtp(&IndexTuple::new(3, vec![0, 1, 3, 5, 7]).unwrap()).unwrap(), BigInt::from(15));
}
