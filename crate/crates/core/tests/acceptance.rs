//! Acceptance suite. Prints one PASS/FAIL line per criterion plus INFO lines
//! for reported findings, and exits non-zero if any criterion fails.
//! All comparisons are exact.

use std::process::ExitCode;
use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;
use vdlab::closed_forms::{
    degree_gtp, degree_kk1, gtp_u_coefficients, hilbert_numerator_en, hilbert_series_kk1, EnConvention,
};
use vdlab::groebner::{GroebnerBasis, Oracle};
use vdlab::ideal::{build_ideal_a, zero_anchored_tuples, IndexTuple};
use vdlab::polyring::UniPoly;
use vdlab::recurrences::{emptiness_scan, forcing_check, EmptinessOptions, EmptinessRow, StratumStatus};
use vdlab::regularity_lab::{a_regularity_scan, ckw_comparison_scan, RegularityRecord};
use vdlab::relations::{arel_relation, brel_relation, CertificateStatus, FinalSign};
use vdlab::symmetric::{schur_bialternant, schur_jacobi_trudi, ExponentSet};
use vdlab::{MonomialOrder, Polynomial};

/// Largest root-of-unity order excluded by the non-degenerate reading.
const NONDEGENERATE_N: u32 = 6;

struct Verdict {
    pass: bool,
    detail: String,
    info: Vec<String>,
}

impl Verdict {
    fn new(pass: bool, detail: String) -> Self {
        Verdict { pass, detail, info: Vec::new() }
    }
}

fn tuple(k: usize, v: &[u32]) -> IndexTuple {
    IndexTuple::new(k, v.to_vec()).unwrap()
}

fn binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// `S_j`: the Schur polynomial of the tuple with entry `j` removed.
fn s_j(t: &IndexTuple, j: usize) -> Polynomial {
    let v: Vec<u32> = t.values().iter().enumerate().filter(|(r, _)| *r != j).map(|(_, x)| *x).collect();
    schur_bialternant(&ExponentSet::new(v).unwrap()).unwrap().poly
}

fn a_basis(t: &IndexTuple, oracle: &Oracle) -> GroebnerBasis {
    let g = build_ideal_a(t, true).unwrap();
    oracle.basis(&g.generators, t.k(), MonomialOrder::DegRevLex).unwrap()
}

fn raw_numerator(gb: &GroebnerBasis, k: usize) -> UniPoly {
    gb.hilbert_series().with_denominator(k).expect("denominator power at most k").numerator
}

fn strictly_increasing(k: usize, bound: u32) -> Vec<ExponentSet> {
    (0..=bound).combinations(k).map(|v| ExponentSet::new(v).unwrap()).collect()
}

fn kk1_population() -> Vec<IndexTuple> {
    [(2, 10), (3, 10), (4, 8)].into_iter().flat_map(|(k, b)| zero_anchored_tuples(k, k + 1, b)).collect()
}

fn regular_scans(oracle: &Oracle) -> Vec<RegularityRecord> {
    [4, 5].into_iter().flat_map(|m| a_regularity_scan(3, m, 9, oracle).unwrap()).collect()
}

fn criterion_1() -> Verdict {
    let sets: Vec<ExponentSet> = (1..=4).flat_map(|k| strictly_increasing(k, 10)).collect();
    let bad: Vec<String> = sets
        .par_iter()
        .filter(|j| schur_bialternant(j).unwrap().poly != schur_jacobi_trudi(j).unwrap().poly)
        .map(|j| format!("{:?}", j.values()))
        .collect();
    Verdict::new(bad.is_empty(), format!("{} exponent sets, {} disagreements {:?}", sets.len(), bad.len(), bad))
}

struct Kk1Row {
    t: IndexTuple,
    unit: bool,
    codim_ok: bool,
    hilbert_ok: bool,
    degree_ok: bool,
    s0_ok: bool,
    two_gen: Option<bool>,
}

fn kk1_row(t: &IndexTuple, oracle: &Oracle) -> Kk1Row {
    let k = t.k();
    let gb = a_basis(t, oracle);
    let unit = gb.is_unit();
    let hs = gb.hilbert_series();
    let two_gen = (t.i(k - 2) <= (k - 1) as u32).then(|| {
        let pair = oracle.basis(&[s_j(t, k), s_j(t, k - 1)], k, MonomialOrder::DegRevLex).unwrap();
        (0..=k).all(|j| pair.contains(&s_j(t, j)).unwrap())
    });
    Kk1Row {
        t: t.clone(),
        unit,
        codim_ok: unit || k as i64 - gb.krull_dimension() == 2,
        hilbert_ok: hs.canonical() == hilbert_series_kk1(t).unwrap().canonical(),
        degree_ok: BigInt::from(gb.degree()) == degree_kk1(t).unwrap(),
        s0_ok: gb.contains(&s_j(t, 0)).unwrap(),
        two_gen,
    }
}

fn criterion_2(oracle: &Oracle) -> Verdict {
    let rows: Vec<Kk1Row> = kk1_population().par_iter().map(|t| kk1_row(t, oracle)).collect();
    let failing = |f: fn(&Kk1Row) -> bool| rows.iter().filter(|r| !f(r)).map(|r| r.t.to_string()).collect::<Vec<_>>();
    let codim = failing(|r| r.codim_ok);
    let hilbert = failing(|r| r.hilbert_ok);
    let degree = failing(|r| r.degree_ok);
    let s0 = failing(|r| r.s0_ok);
    let two = failing(|r| r.two_gen != Some(false));
    let units = rows.iter().filter(|r| r.unit).count();
    let two_checked = rows.iter().filter(|r| r.two_gen.is_some()).count();
    let pass = [&codim, &hilbert, &degree, &s0, &two].iter().all(|v| v.is_empty());
    let mut v = Verdict::new(
        pass,
        format!(
            "{} tuples ({} unit ideals, codim checked on the rest); failures: codim {:?}, hilbert {:?}, degree {:?}, S0 {:?}, two generators {:?} of {}",
            rows.len(),
            units,
            codim,
            hilbert,
            degree,
            s0,
            two,
            two_checked
        ),
    );
    v.info.push(format!("unit ideals: {}", rows.iter().filter(|r| r.unit).map(|r| r.t.to_string()).join(" ")));
    v
}

fn criterion_3() -> Verdict {
    let a_cases: Vec<(IndexTuple, usize)> = (2..=5)
        .flat_map(|k| zero_anchored_tuples(k, k + 1, 12))
        .flat_map(|t| (0..t.k()).map(move |s| (t.clone(), s)))
        .collect();
    let a_bad: Vec<String> = a_cases
        .par_iter()
        .filter(|(t, s)| arel_relation(t, *s).unwrap().status != CertificateStatus::Verified)
        .map(|(t, s)| format!("{t} s={s}"))
        .collect();
    let b3: Vec<(IndexTuple, usize)> =
        zero_anchored_tuples(3, 4, 10).into_iter().flat_map(|t| (0..3).map(move |s| (t.clone(), s))).collect();
    let b_bad: Vec<String> = b3
        .par_iter()
        .filter(|(t, s)| brel_relation(t, *s, FinalSign::Alternating).unwrap().status != CertificateStatus::Verified)
        .map(|(t, s)| format!("{t} s={s}"))
        .collect();
    let mut v = Verdict::new(
        a_bad.is_empty() && b_bad.is_empty(),
        format!(
            "A family {} cases, {} unverified {:?}; BC family k=3 {} cases, {} unverified {:?}",
            a_cases.len(),
            a_bad.len(),
            a_bad,
            b3.len(),
            b_bad.len(),
            b_bad
        ),
    );
    let b4: Vec<(IndexTuple, usize)> =
        zero_anchored_tuples(4, 5, 8).into_iter().flat_map(|t| (0..4).map(move |s| (t.clone(), s))).collect();
    for sign in [FinalSign::Alternating, FinalSign::Flipped, FinalSign::Negative] {
        let ok = b4.par_iter().filter(|(t, s)| brel_relation(t, *s, sign).unwrap().status == CertificateStatus::Verified).count();
        v.info.push(format!("BC family k=4, entries <= 8, final sign {sign:?}: {ok}/{} verified", b4.len()));
    }
    v
}

fn criterion_4(oracle: &Oracle, records: &[RegularityRecord]) -> Verdict {
    let inconclusive = records.iter().filter(|r| r.is_inconclusive()).count();
    let regular: Vec<IndexTuple> =
        records.iter().filter(|r| r.is_regular == Some(true)).map(|r| IndexTuple::new(3, r.entries.clone()).unwrap()).collect();
    let gtp_bad: Vec<String> = regular
        .par_iter()
        .filter(|t| degree_gtp(t).unwrap() != BigInt::from(a_basis(t, oracle).degree()))
        .map(|t| t.to_string())
        .collect();
    let example = degree_gtp(&tuple(3, &[0, 1, 3, 5, 7])).unwrap();
    let u2_bad: Vec<usize> = (2..=12usize)
        .filter(|&k| {
            let kk = k as u64;
            gtp_u_coefficients(k, 2)[2] != binom(kk + 1, 3) * BigInt::from(3 * kk - 2) / 4
        })
        .collect();
    let kk1 = kk1_population();
    let spec_bad: Vec<String> =
        kk1.iter().filter(|t| degree_gtp(t).unwrap() != degree_kk1(t).unwrap()).map(|t| t.to_string()).collect();
    let pass = inconclusive == 0 && gtp_bad.is_empty() && example == BigInt::from(15) && u2_bad.is_empty() && spec_bad.is_empty();
    Verdict::new(
        pass,
        format!(
            "{} regular of {} scanned ({} inconclusive), gtp mismatches {:?}; gtp(0,1,3,5,7) = {}; u2 mismatches for k in 2..=12 {:?}; m=k+1 specialization mismatches {:?} of {}",
            regular.len(),
            records.len(),
            inconclusive,
            gtp_bad,
            example,
            u2_bad,
            spec_bad,
            kk1.len()
        ),
    )
}

fn criterion_5(records: &[RegularityRecord]) -> Verdict {
    let scoped: Vec<&RegularityRecord> = records.iter().filter(|r| r.entries.len() == 5 && r.entries[1] >= 2).collect();
    let inconclusive = scoped.iter().filter(|r| r.is_inconclusive()).count();
    let bad: Vec<String> =
        scoped.iter().filter(|r| r.codim.is_some_and(|c| c >= 3)).map(|r| format!("{:?}", r.entries)).collect();
    let histogram = scoped.iter().map(|r| r.codim).counts();
    let mut hist: Vec<_> = histogram.into_iter().collect();
    hist.sort();
    Verdict::new(
        inconclusive == 0 && bad.is_empty(),
        format!("{} tuples with i1 >= 2, {} inconclusive, codim >= 3 at {:?}; codim histogram {:?}", scoped.len(), inconclusive, bad, hist),
    )
}

fn empty_list(rows: &[&EmptinessRow]) -> Vec<String> {
    rows.iter().filter(|r| r.is_empty()).map(|r| r.tuple.values_text()).collect()
}

fn dual_symmetric(rows: &[EmptinessRow]) -> bool {
    let empty: std::collections::BTreeSet<&IndexTuple> = rows.iter().filter(|r| r.is_empty()).map(|r| &r.tuple).collect();
    rows.iter().all(|r| r.is_empty() == empty.contains(&r.tuple.dual()))
}

fn criterion_6(oracle: &Oracle) -> Verdict {
    let expected = ["0,1,3,7", "0,1,3,9", "0,4,6,7", "0,6,8,9"];
    let rows = emptiness_scan(3, 4, 13, EmptinessOptions::nondegenerate(NONDEGENERATE_N), oracle).unwrap();
    let inconclusive = rows.iter().filter(|r| r.status == StratumStatus::Inconclusive).count();
    let all: Vec<&EmptinessRow> = rows.iter().collect();
    let distinct: Vec<&EmptinessRow> = rows.iter().filter(|r| r.distinct_differences).collect();
    let found = empty_list(&distinct);
    let symmetric = dual_symmetric(&rows);
    let pass = inconclusive == 0 && symmetric && found == expected;
    let mut v = Verdict::new(
        pass,
        format!(
            "non-degenerate reading (root-of-unity ratios of order <= {NONDEGENERATE_N} removed), {} tuples with distinct differences of {}: EMPTY {:?}; dual symmetric {}; {} inconclusive",
            distinct.len(),
            rows.len(),
            found,
            symmetric,
            inconclusive
        ),
    );
    v.info.push(format!(
        "non-degenerate reading, all {} tuples: {} EMPTY (the rest have two equal differences)",
        rows.len(),
        empty_list(&all).len()
    ));
    let literal = emptiness_scan(3, 4, 13, EmptinessOptions::literal(), oracle).unwrap();
    let lit_all: Vec<&EmptinessRow> = literal.iter().collect();
    let lit_empty = empty_list(&lit_all);
    v.info.push(format!(
        "literal reading (BC arrangement only, all tuples): {} EMPTY, contains none of the four: {}, dual symmetric {}, {} inconclusive",
        lit_empty.len(),
        expected.iter().all(|e| !lit_empty.iter().any(|x| x == e)),
        dual_symmetric(&literal),
        literal.iter().filter(|r| r.status == StratumStatus::Inconclusive).count()
    ));
    v
}

fn criterion_7(oracle: &Oracle) -> Verdict {
    let nd = EmptinessOptions::nondegenerate(NONDEGENERATE_N);
    let a = forcing_check(&tuple(3, &[0, 1, 4, 6]), 13, nd, oracle).unwrap();
    let b = forcing_check(&tuple(3, &[0, 1, 4, 13]), 6, nd, oracle).unwrap();
    let control = forcing_check(&tuple(3, &[0, 1, 4, 6]), 5, nd, oracle).unwrap();
    let mut v = Verdict::new(
        a && b && !control,
        format!("non-degenerate reading: (0,1,4,6) forces 13: {a}; (0,1,4,13) forces 6: {b}; control (0,1,4,6) forces 5: {control}"),
    );
    for base in [[0, 1, 4, 6], [0, 1, 4, 13]] {
        let r = forcing_check(&tuple(3, &base), 52, nd, oracle);
        let text = match r {
            Ok(f) => f.to_string(),
            Err(e) if e.is_inconclusive() => "inconclusive".into(),
            Err(e) => format!("error: {e}"),
        };
        v.info.push(format!("stretch: {:?} forces 52: {text}", base));
    }
    let lit = forcing_check(&tuple(3, &[0, 1, 4, 13]), 6, EmptinessOptions::literal(), oracle).unwrap();
    v.info.push(format!("literal reading (degenerate solutions kept): (0,1,4,13) forces 6: {lit}"));
    v
}

fn criterion_8(oracle: &Oracle) -> Verdict {
    let records = ckw_comparison_scan(12, oracle).unwrap();
    let inconclusive = records.iter().filter(|r| r.is_inconclusive()).count();
    let mismatches: Vec<String> = records.iter().filter(|r| r.ckw_mismatch()).map(|r| format!("{:?}", r.entries)).collect();
    let family: Vec<(Vec<u32>, bool)> = (1..=3u32)
        .map(|k| {
            let e = vec![1, 4, 3 * k + 2];
            let r = records.iter().find(|r| r.entries == e).expect("triple scanned");
            (e, r.is_regular == Some(false) && r.membership == Some(false))
        })
        .collect();
    let mut v = Verdict::new(
        inconclusive == 0 && family.iter().all(|(_, ok)| *ok),
        format!(
            "{} triples, {} inconclusive; (1,4,3k+2) not regular and h_c not in (h_a,h_b): {:?}",
            records.len(),
            inconclusive,
            family
        ),
    );
    v.info.push(format!(
        "CKW predicate vs oracle: {} agree, {} disagree {:?}; {} regular",
        records.len() - mismatches.len() - inconclusive,
        mismatches.len(),
        mismatches,
        records.iter().filter(|r| r.is_regular == Some(true)).count()
    ));
    v
}

fn criterion_9(oracle: &Oracle, records: &[RegularityRecord]) -> Verdict {
    let mut population: Vec<IndexTuple> = kk1_population();
    population.extend(
        records.iter().filter(|r| r.is_regular == Some(true)).map(|r| IndexTuple::new(3, r.entries.clone()).unwrap()),
    );
    let rows: Vec<(IndexTuple, bool, bool)> = population
        .par_iter()
        .filter_map(|t| {
            let gb = a_basis(t, oracle);
            if gb.is_unit() || t.k() as i64 - gb.krull_dimension() != (t.m() - t.k() + 1) as i64 {
                return None;
            }
            let raw = raw_numerator(&gb, t.k());
            let zero = hilbert_numerator_en(t, EnConvention::ZeroAnchored).map(|n| n == raw).unwrap_or(false);
            let stated = hilbert_numerator_en(t, EnConvention::AsStated).map(|n| n == raw).unwrap_or(false);
            Some((t.clone(), zero, stated))
        })
        .collect();
    let zero_bad: Vec<String> = rows.iter().filter(|r| !r.1).map(|r| r.0.to_string()).collect();
    let stated_bad = rows.iter().filter(|r| !r.2).count();
    let mut v = Verdict::new(
        rows.len() >= 10 && zero_bad.is_empty(),
        format!("{} regular instances; zero-anchored mismatches {:?}", rows.len(), zero_bad),
    );
    v.info.push(format!(
        "as-stated convention: {stated_bad}/{} mismatches, e.g. {}",
        rows.len(),
        rows.iter().filter(|r| !r.2).take(5).map(|r| r.0.to_string()).join(" ")
    ));
    v
}

fn main() -> ExitCode {
    let oracle = Oracle::default();
    let mut failed = 0;
    let mut run = |id: u32, name: &str, f: &mut dyn FnMut() -> Verdict| {
        let start = Instant::now();
        let v = f();
        let secs = start.elapsed().as_secs_f64();
        println!("{} [{id}] {name}: {} ({secs:.1} s)", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        for line in &v.info {
            println!("INFO [{id}] {line}");
        }
        if !v.pass {
            failed += 1;
        }
    };
    let records = regular_scans(&oracle);
    run(1, "Schur cross-construction", &mut || criterion_1());
    run(2, "m = k+1 codimension, Hilbert series, degree, generators", &mut || criterion_2(&oracle));
    run(3, "relation certificates", &mut || criterion_3());
    run(4, "GTP degree consistency", &mut || criterion_4(&oracle, &records));
    run(5, "i1 = 1 necessity scan", &mut || criterion_5(&records));
    run(6, "emptiness reproduction", &mut || criterion_6(&oracle));
    run(7, "forcing reproduction", &mut || criterion_7(&oracle));
    run(8, "CKW comparison", &mut || criterion_8(&oracle));
    run(9, "Eagon-Northcott convention", &mut || criterion_9(&oracle, &records));
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
