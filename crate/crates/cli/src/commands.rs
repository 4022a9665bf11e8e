use std::fmt::Display;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};
use vdlab::closed_forms::{
    degree_bc_conj, degree_gtp, degree_kk1, hilbert_numerator_en, hilbert_series_bc_conj, hilbert_series_kk1,
    BcReading, EnConvention,
};
use vdlab::groebner::{GroebnerBasis, GroebnerError, HilbertSeries, Oracle};
use vdlab::ideal::{
    build_coarse_ideal, build_confluent_ideal, build_ideal_a, build_ideal_bc, GeneratorSet, IndexTuple,
    PartitionSpec,
};
use vdlab::recurrences::{
    emptiness_scan, eval_recurrence, forcing_check, nondegenerate, power_sum_initial, vieta, zero_report,
    EmptinessOptions, RecurrenceError, RecurrenceSpec, StratumStatus,
};
use vdlab::regularity_lab::{
    a_regularity_scan, ckw_comparison_scan, ckw_predicate, membership_hc, periodicity_scan,
    RegularityError, RegularityRecord, CKW_T_BOUND_NOTE,
};
use vdlab::relations::{arel_relation, arel_relation_expanded, brel_relation, det_hl_expansion, CertificateStatus, FinalSign};
use vdlab::symmetric::{reduced_schur, schur_bialternant, schur_jacobi_trudi, ExponentSet};
use vdlab::{MonomialOrder, Polynomial};

use crate::output::{int, ints, rat, rats, to_value, Output, Records, ScanRecord};
use crate::{Command, FamilyArg, FinalSignArg, FlavorArg, OrderArg, SchurMethod};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Inconclusive(String),
}

fn usage<E: Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn gb_err(e: GroebnerError) -> CliError {
    if e.is_inconclusive() {
        CliError::Inconclusive(e.to_string())
    } else {
        CliError::Usage(e.to_string())
    }
}

fn rec_err(e: RecurrenceError) -> CliError {
    if e.is_inconclusive() {
        CliError::Inconclusive(e.to_string())
    } else {
        CliError::Usage(e.to_string())
    }
}

fn reg_err(e: RegularityError) -> CliError {
    match e {
        RegularityError::Groebner(g) => gb_err(g),
        other => usage(other),
    }
}

fn tuple(k: usize, text: &str) -> Result<IndexTuple, CliError> {
    IndexTuple::parse(k, text).map_err(usage)
}

fn list<T: FromStr>(text: &str) -> Result<Vec<T>, CliError>
where
    T::Err: Display,
{
    text.split(',')
        .map(|s| s.trim().parse::<T>().map_err(|e| usage(format!("'{s}': {e}"))))
        .collect()
}

fn elapsed(start: Instant, timings: bool) -> Option<u64> {
    timings.then(|| start.elapsed().as_millis() as u64)
}

pub fn run(cmd: &Command, oracle: &Oracle, timings: bool) -> Result<Output, CliError> {
    match cmd {
        Command::Schur { j, method, reduced } => schur(j, *method, *reduced),
        Command::Ideal { k, i, flavor, lambda, full } => ideal(*k, i, *flavor, lambda.as_deref(), *full),
        Command::Gb { gens, nvars, order } => gb(gens, *nvars, *order, oracle, timings),
        Command::Hilbert { k, i, flavor, convention, bc_reading } => {
            hilbert(*k, i, *flavor, convention, bc_reading, oracle, timings)
        }
        Command::Degree { k, i, flavor } => degree(*k, i, *flavor, oracle, timings),
        Command::Relations { k, i, family, final_sign, expanded, det_hl } => {
            relations(*k, i, *family, *final_sign, *expanded, *det_hl)
        }
        Command::Ckw { a, b, c, bound } => ckw(*a, *b, *c, *bound, oracle),
        Command::ScanRegular { k, m, bound } => scan_regular(*k, *m, *bound, oracle),
        Command::ScanEmpty { k, m, bound, nondegenerate, all_tuples, literal } => {
            let (n, distinct_only) = if *literal { (0, false) } else { (*nondegenerate, !*all_tuples) };
            scan_empty(*k, *m, *bound, n, distinct_only, oracle, timings)
        }
        Command::ScanPeriod { k, prefix, from, to } => scan_period(*k, prefix, *from, *to, oracle),
        Command::Recurrence { coeffs, roots, initial, weights, n_max, d_max, sequence } => recurrence(
            coeffs.as_deref(),
            roots.as_deref(),
            initial.as_deref(),
            weights.as_deref(),
            *n_max,
            *d_max,
            *sequence,
        ),
        Command::Forcing { k, base, extra, nondegenerate, literal } => {
            forcing(*k, base, *extra, if *literal { 0 } else { *nondegenerate }, oracle, timings)
        }
    }
}

fn schur(j: &str, method: SchurMethod, reduced: bool) -> Result<Output, CliError> {
    let set = ExponentSet::new(list(j)?).map_err(usage)?;
    let sp = if reduced {
        reduced_schur(&set)
    } else {
        match method {
            SchurMethod::Bialternant => schur_bialternant(&set),
            SchurMethod::JacobiTrudi => schur_jacobi_trudi(&set),
        }
    }
    .map_err(usage)?;
    let mut rec = ScanRecord::new("schur", set.to_string());
    rec.degree = sp.poly.total_degree().map(BigInt::from);
    let mut out = Output::new("schur", Records::Scan(vec![rec]));
    out.set("j", to_value(&set.values()));
    out.set("partition", to_value(&set.partition()));
    out.set("reduced", reduced);
    out.set("sign", sp.sign.as_i64());
    out.set("polynomial", sp.poly.to_string());
    out.set("terms", sp.poly.num_terms());
    Ok(out)
}

fn generators(t: &IndexTuple, flavor: FlavorArg, lambda: Option<&str>, full: bool) -> Result<GeneratorSet, CliError> {
    match flavor {
        FlavorArg::A => build_ideal_a(t, !full && t.i(0) == 0).map_err(usage),
        FlavorArg::Bc => build_ideal_bc(t).map_err(usage),
        FlavorArg::Coarse => Ok(build_coarse_ideal(t)),
        FlavorArg::Confluent => {
            let parts = lambda.ok_or_else(|| usage("--lambda is required for the confluent flavor"))?;
            let lambda = PartitionSpec::new(list(parts)?).map_err(usage)?;
            build_confluent_ideal(t, &lambda).map_err(usage)
        }
    }
}

fn flavor_name(flavor: FlavorArg) -> &'static str {
    match flavor {
        FlavorArg::A => "A",
        FlavorArg::Bc => "BC",
        FlavorArg::Coarse => "coarse-minor",
        FlavorArg::Confluent => "confluent",
    }
}

fn ideal(k: usize, i: &str, flavor: FlavorArg, lambda: Option<&str>, full: bool) -> Result<Output, CliError> {
    let t = tuple(k, i)?;
    let g = generators(&t, flavor, lambda, full)?;
    let mut rec = ScanRecord::new("ideal", t.values_text());
    rec.flavor = Some(flavor_name(flavor).into());
    rec.detail = format!("{} generators", g.len());
    let mut out = Output::new("ideal", Records::Scan(vec![rec]));
    out.set("k", k);
    out.set("tuple", t.values_text());
    out.set("flavor", flavor_name(flavor));
    out.set("nvars", g.nvars);
    out.set("rescalable", g.rescalable);
    let gens: Vec<Value> = g
        .iter()
        .map(|(j, p)| json!({ "provenance": j, "polynomial": p.to_string(), "degree": p.total_degree() }))
        .collect();
    out.set("generators", Value::Array(gens));
    Ok(out)
}

fn gb(gens: &str, nvars: Option<usize>, order: OrderArg, oracle: &Oracle, timings: bool) -> Result<Output, CliError> {
    let texts: Vec<&str> = gens.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
    let auto = texts
        .iter()
        .map(|s| Polynomial::parse_auto(s).map(|p| p.nvars()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(usage)?;
    let n = nvars.unwrap_or_else(|| auto.iter().copied().max().unwrap_or(1).max(1));
    let polys = texts.iter().map(|s| Polynomial::parse(s, n)).collect::<Result<Vec<_>, _>>().map_err(usage)?;
    let order = match order {
        OrderArg::Degrevlex => MonomialOrder::DegRevLex,
        OrderArg::Lex => MonomialOrder::Lex,
    };
    let start = Instant::now();
    let basis = oracle.basis(&polys, n, order).map_err(gb_err)?;
    let mut rec = ScanRecord::new("gb", texts.join("; "));
    rec.wall_ms = elapsed(start, timings);
    rec.detail = format!("{} elements", basis.basis().len());
    if order == MonomialOrder::DegRevLex && polys.iter().all(Polynomial::is_homogeneous) {
        rec.dim = Some(basis.krull_dimension());
        rec.codim = Some(n as i64 - basis.krull_dimension());
    }
    let mut out = Output::new("gb", Records::Scan(vec![rec]));
    out.set("nvars", n);
    out.set("order", order.name());
    out.set("basis", basis.basis().iter().map(ToString::to_string).collect::<Vec<_>>());
    out.set("unit", basis.is_unit());
    Ok(out)
}

fn oracle_series(g: &GeneratorSet, oracle: &Oracle) -> Result<(GroebnerBasis, HilbertSeries), CliError> {
    let basis = oracle.basis(&g.generators, g.nvars, MonomialOrder::DegRevLex).map_err(gb_err)?;
    let hs = basis.hilbert_series();
    Ok((basis, hs))
}

fn series_json(hs: &HilbertSeries) -> Value {
    let c = hs.canonical();
    json!({ "numerator": ints(c.numerator.coeffs()), "denom_power": c.denom_power })
}

/// Closed-form series for the tuple when one applies: the value, whether it
/// is conjectural, and its source.
fn closed_series(
    t: &IndexTuple,
    flavor: FlavorArg,
    codim: i64,
    convention: EnConvention,
    reading: BcReading,
) -> Option<(HilbertSeries, bool, &'static str)> {
    let (k, m) = (t.k(), t.m());
    match flavor {
        FlavorArg::A if m == k + 1 && t.gcd() == 1 => hilbert_series_kk1(t).ok().map(|h| (h, false, "m=k+1")),
        FlavorArg::A if t.i(0) == 0 && m < 2 * k && codim == (m - k + 1) as i64 => hilbert_numerator_en(t, convention)
            .ok()
            .map(|n| (HilbertSeries::new(n, k), false, "eagon-northcott")),
        FlavorArg::Bc if m == k + 1 && t.gcd() == 1 => {
            hilbert_series_bc_conj(t, reading).ok().map(|c| (c.value, c.conjectural, "bc-conjecture"))
        }
        _ => None,
    }
}

fn hilbert(
    k: usize,
    i: &str,
    flavor: FlavorArg,
    convention: &str,
    bc_reading: &str,
    oracle: &Oracle,
    timings: bool,
) -> Result<Output, CliError> {
    let t = tuple(k, i)?;
    let convention = EnConvention::from_str(convention).map_err(usage)?;
    let reading = BcReading::from_str(bc_reading).map_err(usage)?;
    let g = generators(&t, flavor, None, false)?;
    let start = Instant::now();
    let (basis, hs) = oracle_series(&g, oracle)?;
    let raw = hs.with_denominator(g.nvars).expect("raw series has the ring dimension as denominator");
    let codim = g.nvars as i64 - basis.krull_dimension();
    let mut rec = ScanRecord::new("hilbert", t.values_text());
    rec.flavor = Some(flavor_name(flavor).into());
    rec.dim = Some(basis.krull_dimension());
    rec.codim = Some(codim);
    rec.degree = Some(hs.degree());
    rec.hilbert_numerator = Some(raw.numerator.coeffs().to_vec());
    rec.regular = Some(!basis.is_unit() && codim == (t.m() as i64 - k as i64 + 1));
    rec.wall_ms = elapsed(start, timings);
    let closed = closed_series(&t, flavor, codim, convention, reading);
    rec.conjectural = closed.as_ref().map(|c| c.1);
    let mut out = Output::new("hilbert", Records::Scan(vec![rec]));
    out.set("numerator", ints(raw.numerator.coeffs()));
    out.set("denom_power", raw.denom_power);
    out.set("canonical", series_json(&hs));
    match closed {
        Some((c, conjectural, source)) => {
            out.set("closed_form", series_json(&c));
            out.set("closed_form_source", source);
            out.set("conjectural", conjectural);
            out.set("match", c.canonical() == hs.canonical());
        }
        None => {
            out.set("closed_form", Value::Null);
            out.set("match", Value::Null);
        }
    }
    Ok(out)
}

fn degree(k: usize, i: &str, flavor: FlavorArg, oracle: &Oracle, timings: bool) -> Result<Output, CliError> {
    let t = tuple(k, i)?;
    let g = generators(&t, flavor, None, false)?;
    let start = Instant::now();
    let (basis, hs) = oracle_series(&g, oracle)?;
    let codim = g.nvars as i64 - basis.krull_dimension();
    let expected = t.m() as i64 - k as i64 + 1;
    let d = hs.degree();
    let mut out_closed: Vec<(&str, BigInt, bool)> = Vec::new();
    match flavor {
        FlavorArg::A if t.m() == k + 1 && t.gcd() == 1 => {
            out_closed.push(("m=k+1", degree_kk1(&t).map_err(usage)?, false));
        }
        FlavorArg::Bc if t.m() == k + 1 && t.gcd() == 1 => {
            let c = degree_bc_conj(&t).map_err(usage)?;
            out_closed.push(("bc-conjecture", c.value, c.conjectural));
        }
        _ => {}
    }
    if matches!(flavor, FlavorArg::A) && !basis.is_unit() && codim == expected {
        if let Ok(v) = degree_gtp(&t) {
            out_closed.push(("giambelli-thom-porteous", v, false));
        }
    }
    let mut rec = ScanRecord::new("degree", t.values_text());
    rec.flavor = Some(flavor_name(flavor).into());
    rec.dim = Some(basis.krull_dimension());
    rec.codim = Some(codim);
    rec.degree = Some(d.clone());
    rec.regular = Some(!basis.is_unit() && codim == expected);
    rec.conjectural = Some(out_closed.iter().any(|c| c.2));
    rec.wall_ms = elapsed(start, timings);
    let mut out = Output::new("degree", Records::Scan(vec![rec]));
    out.set("degree", int(&d));
    let closed: Vec<Value> = out_closed
        .iter()
        .map(|(src, v, conj)| json!({ "source": src, "degree": int(v), "conjectural": conj, "match": *v == d }))
        .collect();
    out.set("match", out_closed.iter().all(|c| c.1 == d));
    out.set("closed_forms", Value::Array(closed));
    Ok(out)
}

fn relations(
    k: usize,
    i: &str,
    family: FamilyArg,
    final_sign: FinalSignArg,
    expanded: bool,
    det_hl: bool,
) -> Result<Output, CliError> {
    let t = tuple(k, i)?;
    let sign = match final_sign {
        FinalSignArg::Alternating => FinalSign::Alternating,
        FinalSignArg::Flipped => FinalSign::Flipped,
        FinalSignArg::Negative => FinalSign::Negative,
    };
    let mut certs = Vec::new();
    for s in 0..k {
        let c = match family {
            FamilyArg::A if expanded => arel_relation_expanded(&t, s),
            FamilyArg::A => arel_relation(&t, s),
            FamilyArg::Bc => brel_relation(&t, s, sign),
        }
        .map_err(usage)?;
        certs.push(c);
    }
    let records = certs
        .iter()
        .map(|c| {
            let mut r = ScanRecord::new("relations", t.values_text());
            r.flavor = Some(if matches!(family, FamilyArg::A) { "A" } else { "BC" }.into());
            r.conjectural = Some(matches!(family, FamilyArg::Bc));
            r.detail = format!("s={} status={}", c.s, if c.status == CertificateStatus::Verified { "verified" } else { "failed" });
            r
        })
        .collect();
    let mut out = Output::new("relations", Records::Scan(records));
    out.set("all_verified", certs.iter().all(|c| c.status == CertificateStatus::Verified));
    out.set("certificates", to_value(&certs));
    if matches!(family, FamilyArg::Bc) {
        out.set("final_sign", to_value(&sign));
    }
    if det_hl {
        let reports = (0..=k).map(|l| det_hl_expansion(&t, l)).collect::<Result<Vec<_>, _>>().map_err(usage)?;
        out.set("det_hl", to_value(&reports));
    }
    Ok(out)
}

fn ckw(a: Option<u32>, b: Option<u32>, c: Option<u32>, bound: Option<u32>, oracle: &Oracle) -> Result<Output, CliError> {
    let records = match (a, b, c, bound) {
        (Some(a), Some(b), Some(c), None) => {
            let prediction = ckw_predicate(a, b, c).map_err(reg_err)?;
            let regular = vdlab::groebner::is_regular_sequence(
                &[a, b, c].map(|d| vdlab::symmetric::complete_h(d as i64, 3)),
                3,
                oracle,
            )
            .map_err(gb_err)?;
            let membership = membership_hc(a, b, c, oracle).map_err(reg_err)?;
            let mut out = Output::new("ckw", Records::Scan(Vec::new()));
            out.set("a", a);
            out.set("b", b);
            out.set("c", c);
            out.set("ckw_prediction", prediction);
            out.set("is_regular", regular);
            out.set("membership", membership);
            out.set("agree", prediction == regular);
            out.set("t_bound", CKW_T_BOUND_NOTE);
            let mut rec = ScanRecord::new("ckw", format!("{a},{b},{c}"));
            rec.regular = Some(regular);
            rec.detail = format!("ckw_prediction={prediction} membership={membership}");
            out.records = Records::Scan(vec![rec]);
            return Ok(out);
        }
        (None, None, None, Some(bound)) => ckw_comparison_scan(bound, oracle).map_err(reg_err)?,
        _ => return Err(usage("give either --a --b --c or --bound")),
    };
    let mismatches: Vec<Vec<u32>> = records.iter().filter(|r| r.ckw_mismatch()).map(|r| r.entries.clone()).collect();
    let mut out = Output::new("ckw", Records::Regularity(Vec::new()));
    out.set("cells", records.len());
    out.set("regular", records.iter().filter(|r| r.is_regular == Some(true)).count());
    out.set("inconclusive_cells", records.iter().filter(|r| r.is_inconclusive()).count());
    out.set("mismatches", to_value(&mismatches));
    out.set("t_bound", CKW_T_BOUND_NOTE);
    out.records = Records::Regularity(records);
    Ok(out)
}

fn scan_regular(k: usize, m: usize, bound: u32, oracle: &Oracle) -> Result<Output, CliError> {
    let records = a_regularity_scan(k, m, bound, oracle).map_err(reg_err)?;
    let mut out = Output::new("scan-regular", Records::Regularity(Vec::new()));
    out.set("tuples", records.len());
    out.set("regular", records.iter().filter(|r| r.is_regular == Some(true)).count());
    out.set("unit_ideals", records.iter().filter(|r| r.unit_ideal).count());
    out.set(
        "regular_with_i1_at_least_2",
        records.iter().filter(|r| r.entries[1] >= 2 && r.is_regular == Some(true)).count(),
    );
    let reduction: Vec<&RegularityRecord> = records.iter().filter(|r| r.reduction_regular.is_some()).collect();
    if !reduction.is_empty() {
        out.set("reduction_mismatches", reduction.iter().filter(|r| r.reduction_regular != r.is_regular).count());
    }
    out.records = Records::Regularity(records);
    Ok(out)
}

fn status_text(s: StratumStatus) -> &'static str {
    match s {
        StratumStatus::Empty => "empty",
        StratumStatus::Nonempty => "nonempty",
        StratumStatus::Inconclusive => "inconclusive",
    }
}

fn scan_empty(
    k: usize,
    m: usize,
    bound: u32,
    nondegenerate: u32,
    distinct_only: bool,
    oracle: &Oracle,
    timings: bool,
) -> Result<Output, CliError> {
    let options = EmptinessOptions { exclude_roots_of_unity_up_to: nondegenerate };
    let start = Instant::now();
    let rows = emptiness_scan(k, m, bound, options, oracle).map_err(rec_err)?;
    let wall = elapsed(start, timings);
    let empty_set: std::collections::BTreeSet<&IndexTuple> = rows.iter().filter(|r| r.is_empty()).map(|r| &r.tuple).collect();
    let dual_symmetric = rows.iter().all(|r| r.is_empty() == empty_set.contains(&r.tuple.dual()));
    let total = rows.len();
    let rows: Vec<_> = rows.into_iter().filter(|r| !distinct_only || r.distinct_differences).collect();
    let excluded = total - rows.len();
    let records: Vec<ScanRecord> = rows
        .iter()
        .map(|r| {
            let mut rec = ScanRecord::new("scan-empty", r.tuple.values_text());
            rec.flavor = Some("BC".into());
            rec.empty = (r.status != StratumStatus::Inconclusive).then(|| r.is_empty());
            rec.inconclusive = r.status == StratumStatus::Inconclusive;
            let strata: Vec<String> = r.strata.iter().map(|s| format!("{}={}", s.partition, status_text(s.status))).collect();
            rec.detail = format!("{} distinct_differences={}", strata.join(" "), r.distinct_differences);
            rec
        })
        .collect();
    let mut out = Output::new("scan-empty", Records::Scan(records));
    out.set("k", k);
    out.set("m", m);
    out.set("bound", bound);
    out.set("exclude_roots_of_unity_up_to", nondegenerate);
    out.set("distinct_differences_only", distinct_only);
    out.set("excluded_equal_differences", excluded);
    out.set("empty", rows.iter().filter(|r| r.is_empty()).map(|r| r.tuple.values_text()).collect::<Vec<_>>());
    out.set("dual_symmetric", dual_symmetric);
    out.set("wall_ms", wall);
    Ok(out)
}

fn scan_period(k: usize, prefix: &str, from: u32, to: u32, oracle: &Oracle) -> Result<Output, CliError> {
    let prefix: Vec<u32> = list(prefix)?;
    let report = periodicity_scan(k, &prefix, from..=to, oracle).map_err(reg_err)?;
    let prefix_text = prefix.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let records = report
        .table
        .iter()
        .map(|(last, dim)| {
            let mut rec = ScanRecord::new("scan-period", format!("{prefix_text},{last}"));
            rec.flavor = Some("A".into());
            rec.dim = *dim;
            rec.inconclusive = dim.is_none();
            rec
        })
        .collect();
    let mut out = Output::new("scan-period", Records::Scan(records));
    out.set("k", k);
    out.set("prefix", to_value(&prefix));
    out.set("period", to_value(&report.period));
    out.set("period_note", "observed within the scanned window only");
    Ok(out)
}

fn recurrence(
    coeffs: Option<&str>,
    roots: Option<&str>,
    initial: Option<&str>,
    weights: Option<&str>,
    n_max: usize,
    d_max: usize,
    sequence: bool,
) -> Result<Output, CliError> {
    let spec = match (coeffs, roots) {
        (Some(c), None) => RecurrenceSpec::new(list::<BigRational>(c)?).map_err(rec_err)?,
        (None, Some(r)) => vieta(&list::<BigRational>(r)?).map_err(rec_err)?,
        _ => return Err(usage("give exactly one of --coeffs and --roots")),
    };
    let init = match (initial, weights) {
        (Some(i), None) => list::<BigRational>(i)?,
        (None, Some(w)) => {
            let points = spec.roots().expect("roots given").to_vec();
            let w = list::<BigRational>(w)?;
            if w.len() != points.len() {
                return Err(usage("--weights needs one weight per root"));
            }
            power_sum_initial(&points, &w)
        }
        _ => return Err(usage("give exactly one of --initial and --weights")),
    };
    let report = zero_report(&spec, &init, n_max, d_max).map_err(rec_err)?;
    let mut rec = ScanRecord::new("recurrence", rats(spec.coefficients()).to_string());
    rec.degenerate = spec.roots().map(|_| !nondegenerate(&spec).unwrap_or(false));
    rec.detail = format!("zeros={:?}", report.zeros);
    let mut out = Output::new("recurrence", Records::Scan(vec![rec]));
    out.set("coefficients", rats(spec.coefficients()));
    out.set("roots", spec.roots().map_or(Value::Null, rats));
    out.set("initial", rats(&init));
    if spec.roots().is_some() {
        out.set("nondegenerate", nondegenerate(&spec).map_err(rec_err)?);
    }
    out.set("report", to_value(&report));
    out.set("note", "progressions are observed within the window only");
    if sequence {
        let u = eval_recurrence(&spec, &init, n_max).map_err(rec_err)?;
        out.set("sequence", Value::Array(u.iter().map(rat).collect()));
    }
    Ok(out)
}

fn forcing(k: usize, base: &str, extra: u32, nondegenerate: u32, oracle: &Oracle, timings: bool) -> Result<Output, CliError> {
    let t = tuple(k, base)?;
    let start = Instant::now();
    let options = EmptinessOptions { exclude_roots_of_unity_up_to: nondegenerate };
    let forces = forcing_check(&t, extra, options, oracle).map_err(rec_err)?;
    let mut rec = ScanRecord::new("forcing", t.values_text());
    rec.flavor = Some("A".into());
    rec.detail = format!("extra={extra} forces={forces}");
    rec.wall_ms = elapsed(start, timings);
    let mut out = Output::new("forcing", Records::Scan(vec![rec]));
    out.set("base", t.values_text());
    out.set("extra", extra);
    out.set("forces", forces);
    out.set("exclude_roots_of_unity_up_to", nondegenerate);
    out.set("scope", "solutions with distinct nonzero characteristic roots only");
    Ok(out)
}
