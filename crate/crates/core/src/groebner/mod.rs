//! Gröbner bases over the rationals and everything read off from them:
//! membership, Krull dimension, Hilbert series, degree, and emptiness off a
//! hyperplane arrangement.

mod engine;
mod hilbert;
mod saturation;

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::{Monomial, MonomialOrder, PolyError, Polynomial};
use engine::{Buchberger, IPoly, Reducers};

pub use engine::EngineStats;
pub use hilbert::{hilbert_numerator, HilbertSeries};
pub use saturation::{
    arrangement_product, saturate_off_arrangement, saturate_off_hypersurface, Arrangement, SaturationResult,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CapKind {
    Pairs,
    Degree,
}

impl fmt::Display for CapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CapKind::Pairs => "S-pair",
            CapKind::Degree => "degree",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    /// The computation hit a configured budget; the answer is unknown.
    #[error("inconclusive: {kind} cap of {limit} exceeded")]
    ResourceCap { kind: CapKind, limit: u64 },
    #[error("expected homogeneous input: {0}")]
    NotHomogeneous(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl GroebnerError {
    pub fn is_inconclusive(&self) -> bool {
        matches!(self, GroebnerError::ResourceCap { .. })
    }
}

/// Budgets for a single Buchberger run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerConfig {
    pub max_pairs: usize,
    pub max_degree: u32,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_pairs: 1_000_000, max_degree: 1_000 }
    }
}

impl GroebnerConfig {
    /// Defaults overridden by `VDLAB_MAX_PAIRS` / `VDLAB_MAX_DEGREE`.
    pub fn from_env() -> Self {
        let mut c = Self::default();
        if let Some(v) = std::env::var("VDLAB_MAX_PAIRS").ok().and_then(|s| s.parse().ok()) {
            c.max_pairs = v;
        }
        if let Some(v) = std::env::var("VDLAB_MAX_DEGREE").ok().and_then(|s| s.parse().ok()) {
            c.max_degree = v;
        }
        c
    }
}

/// Reduced Gröbner basis with monic elements sorted by ascending leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    leading: Vec<Monomial>,
    integral: Vec<IPoly>,
    stats: Option<EngineStats>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.order == other.order && self.basis == other.basis
    }
}

impl GroebnerBasis {
    /// Wraps a basis that is already known to be reduced (for example one
    /// read back from a cache). Elements are normalized and re-sorted.
    pub fn from_reduced(nvars: usize, order: MonomialOrder, basis: Vec<Polynomial>) -> Result<Self, PolyError> {
        let mut integral = Vec::with_capacity(basis.len());
        for p in &basis {
            if p.nvars() != nvars {
                return Err(PolyError::RingMismatch { left: nvars, right: p.nvars() });
            }
            if !p.is_zero() {
                integral.push(IPoly::from_poly(p, order).0);
            }
        }
        integral.sort_by(|a, b| order.cmp(&a.lm(), &b.lm()));
        Ok(Self::from_integral(nvars, order, integral, None))
    }

    /// Reduced basis from a set already known to be a Gröbner basis.
    pub(crate) fn interreduced(nvars: usize, order: MonomialOrder, polys: &[Polynomial]) -> Self {
        let integral = polys.iter().filter(|p| !p.is_zero()).map(|p| IPoly::from_poly(p, order).0).collect();
        Self::from_integral(nvars, order, engine::interreduce(integral, order), None)
    }

    fn from_integral(nvars: usize, order: MonomialOrder, integral: Vec<IPoly>, stats: Option<EngineStats>) -> Self {
        let basis = integral.iter().map(|p| p.to_poly(nvars)).collect();
        let leading = integral.iter().map(IPoly::lm).collect();
        GroebnerBasis { nvars, order, basis, leading, integral, stats }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// Engine counters; `None` when the basis did not come from a fresh run.
    pub fn stats(&self) -> Option<EngineStats> {
        self.stats
    }

    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(Monomial::is_one)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    fn reducers(&self) -> Reducers<'_> {
        // integral is kept sorted by ascending leading monomial
        Reducers { polys: self.integral.iter().collect() }
    }

    /// Remainder of `f` on division by the basis; zero iff `f` is in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        if f.nvars() != self.nvars {
            return Err(PolyError::RingMismatch { left: self.nvars, right: f.nvars() });
        }
        if f.is_zero() {
            return Ok(f.clone());
        }
        let (fi, c) = IPoly::from_poly(f, self.order);
        let (r, mu) = engine::reduce_full(fi, &self.reducers(), self.order, true);
        if r.is_zero() {
            return Ok(Polynomial::zero(self.nvars));
        }
        // f = c * fi, r = mu * NF(fi), and to_poly divides by lc(r)
        let lc = BigRational::from_integer(r.lc().clone());
        Ok(r.to_poly(self.nvars).scale(&(lc * c / mu)))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks that every S-polynomial of basis pairs reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let n = self.integral.len();
        for i in 0..n {
            for j in i + 1..n {
                let (f, g) = (&self.basis[i], &self.basis[j]);
                let l = self.leading[i].lcm(&self.leading[j]);
                let one = BigRational::from_integer(1.into());
                let sf = f.mul_monomial(&self.leading[i].quotient_of(&l).unwrap(), &one);
                let sg = g.mul_monomial(&self.leading[j].quotient_of(&l).unwrap(), &one);
                match self.normal_form(&(&sf - &sg)) {
                    Ok(r) if r.is_zero() => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Largest set of variables containing the support of no leading
    /// monomial; `-1` for the unit ideal.
    pub fn krull_dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let n = self.nvars;
        let masks: Vec<u32> = self
            .leading
            .iter()
            .map(|m| m.support().fold(0u32, |acc, v| acc | (1 << v)))
            .collect();
        let mut best = 0;
        for s in 0u32..(1 << n) {
            let size = s.count_ones();
            if size > best && masks.iter().all(|&lm| lm & !s != 0) {
                best = size;
            }
        }
        best as i64
    }

    /// Hilbert series of the quotient by the leading-term ideal, in raw form
    /// (denominator `(1 - t)^nvars`).
    pub fn hilbert_series(&self) -> HilbertSeries {
        if self.is_unit() {
            return HilbertSeries::zero();
        }
        HilbertSeries::new(hilbert_numerator(&self.leading, self.nvars), self.nvars)
    }

    /// `P(1)` for the canonical numerator `P`; zero for the unit ideal.
    pub fn degree(&self) -> u64 {
        self.hilbert_series().degree().to_u64().expect("degree is a non-negative machine integer")
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `nvars`
/// variables, using budgets from the environment.
pub fn groebner_basis(gens: &[Polynomial], nvars: usize, order: MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    groebner_basis_with(gens, nvars, order, &GroebnerConfig::from_env())
}

pub fn groebner_basis_with(
    gens: &[Polynomial],
    nvars: usize,
    order: MonomialOrder,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis, GroebnerError> {
    let mut input = Vec::with_capacity(gens.len());
    for g in gens {
        if g.nvars() != nvars {
            return Err(PolyError::RingMismatch { left: nvars, right: g.nvars() }.into());
        }
        if !g.is_zero() {
            input.push(IPoly::from_poly(g, order).0);
        }
    }
    let (basis, stats) = Buchberger::new(order).run(input, config)?;
    Ok(GroebnerBasis::from_integral(nvars, order, basis, Some(stats)))
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial, PolyError> {
    gb.normal_form(f)
}

pub fn krull_dimension(gb: &GroebnerBasis) -> i64 {
    gb.krull_dimension()
}

pub fn hilbert_series_quotient(gb: &GroebnerBasis) -> HilbertSeries {
    gb.hilbert_series()
}

pub fn degree_of_quotient(gb: &GroebnerBasis) -> u64 {
    gb.degree()
}

/// Whether homogeneous `fs` form a regular sequence, i.e. cut out a variety
/// of codimension `fs.len()`. Constants never do.
pub fn is_regular_sequence(fs: &[Polynomial], nvars: usize, oracle: &Oracle) -> Result<bool, GroebnerError> {
    for f in fs {
        if f.is_zero() || f.is_constant() {
            return Ok(false);
        }
        if !f.is_homogeneous() {
            return Err(GroebnerError::NotHomogeneous(f.to_string()));
        }
    }
    let gb = oracle.basis(fs, nvars, MonomialOrder::DegRevLex)?;
    let codim = nvars as i64 - gb.krull_dimension();
    Ok(codim == fs.len() as i64)
}

/// Persistent storage for computed bases, keyed by [`basis_key`].
pub trait BasisStore: Send + Sync {
    fn load(&self, key: &str, nvars: usize) -> Option<Vec<Polynomial>>;
    fn save(&self, key: &str, gb: &GroebnerBasis);
}

/// Canonical description of a Gröbner problem: order, ring size and the
/// sorted, monic-normalized generator texts.
pub fn basis_key(gens: &[Polynomial], nvars: usize, order: MonomialOrder) -> String {
    let mut texts: Vec<String> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (_, c) = g.leading_term(order).expect("nonzero");
            g.scale(&c.recip()).to_string()
        })
        .collect();
    texts.sort();
    texts.dedup();
    format!("{};{};{}", order.name(), nvars, texts.join(";"))
}

/// Entry point used by every higher-level module: budgets plus an optional
/// cache.
#[derive(Clone, Default)]
pub struct Oracle {
    pub config: GroebnerConfig,
    store: Option<Arc<dyn BasisStore>>,
}

impl fmt::Debug for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Oracle")
            .field("config", &self.config)
            .field("cached", &self.store.is_some())
            .finish()
    }
}

impl Oracle {
    pub fn new(config: GroebnerConfig) -> Self {
        Oracle { config, store: None }
    }

    pub fn from_env() -> Self {
        Self::new(GroebnerConfig::from_env())
    }

    pub fn with_store(mut self, store: Arc<dyn BasisStore>) -> Self {
        self.store = Some(store);
        self
    }

    pub fn basis(&self, gens: &[Polynomial], nvars: usize, order: MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
        let Some(store) = &self.store else {
            return groebner_basis_with(gens, nvars, order, &self.config);
        };
        let key = basis_key(gens, nvars, order);
        if let Some(polys) = store.load(&key, nvars) {
            if let Ok(gb) = GroebnerBasis::from_reduced(nvars, order, polys) {
                return Ok(gb);
            }
        }
        let gb = groebner_basis_with(gens, nvars, order, &self.config)?;
        store.save(&key, &gb);
        Ok(gb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    fn gb(gens: &[&str], n: usize) -> GroebnerBasis {
        let gens: Vec<Polynomial> = gens.iter().map(|s| p(s, n)).collect();
        groebner_basis(&gens, n, MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn single_variable() {
        let g = gb(&["x1"], 2);
        assert_eq!(g.basis(), &[p("x1", 2)]);
    }

    #[test]
    fn h1_h2() {
        let g = gb(&["x1 + x2", "x1^2 + x1 x2 + x2^2"], 2);
        assert_eq!(g.basis(), &[p("x1 + x2", 2), p("x2^2", 2)]);
        assert_eq!(g.krull_dimension(), 0);
        assert_eq!(g.hilbert_series().canonical().numerator, crate::UniPoly::from_i64s(&[1, 1]));
        assert_eq!(g.degree(), 2);
        assert!(g.satisfies_buchberger_criterion());
    }

    #[test]
    fn h3_in_h1_h2() {
        let g = gb(&["x1 + x2", "x1^2 + x1 x2 + x2^2"], 2);
        let h3 = p("x1^3 + x1^2 x2 + x1 x2^2 + x2^3", 2);
        assert!(g.normal_form(&h3).unwrap().is_zero());
    }

    #[test]
    fn unit_ideal_conventions() {
        let g = gb(&["1"], 3);
        assert_eq!(g.basis(), &[p("1", 3)]);
        assert_eq!(g.krull_dimension(), -1);
        assert_eq!(g.degree(), 0);
        assert!(g.hilbert_series().numerator.is_zero());
        assert_eq!(g.normal_form(&p("x1 + 7", 3)).unwrap(), p("0", 3));
    }

    #[test]
    fn zero_ideal() {
        let g = groebner_basis(&[], 3, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(g.krull_dimension(), 3);
        assert_eq!(g.degree(), 1);
        let hs = g.hilbert_series().canonical();
        assert_eq!(hs.numerator, crate::UniPoly::one());
        assert_eq!(hs.denom_power, 3);
        assert_eq!(g.normal_form(&p("1", 3)).unwrap(), p("1", 3));
    }

    #[test]
    fn normal_form_keeps_scale() {
        let g = gb(&["x1 - 2 x2"], 2);
        assert_eq!(g.normal_form(&p("3 x1^2 + 1/2", 2)).unwrap(), p("12 x2^2 + 1/2", 2));
        let g = gb(&["x1"], 2);
        assert_eq!(g.normal_form(&p("1", 2)).unwrap(), p("1", 2));
    }

    #[test]
    fn lex_elimination() {
        // twisted cubic: eliminate the parameter x1
        let g = groebner_basis(
            &[p("x2 - x1", 4), p("x3 - x1^2", 4), p("x4 - x1^3", 4)],
            4,
            MonomialOrder::Lex,
        )
        .unwrap();
        let inner: Vec<&Polynomial> = g.basis().iter().filter(|q| q.terms().all(|(m, _)| m.exponent(0) == 0)).collect();
        assert!(!inner.is_empty());
        assert!(g.contains(&p("x3 - x2^2", 4)).unwrap());
        assert!(g.contains(&p("x2 x4 - x3^2", 4)).unwrap());
        assert!(g.satisfies_buchberger_criterion());
    }

    #[test]
    fn pair_cap_is_inconclusive() {
        let gens = [p("x1^2 - x2", 3), p("x1 x2 - x3", 3)];
        let cfg = GroebnerConfig { max_pairs: 0, max_degree: 1000 };
        let err = groebner_basis_with(&gens, 3, MonomialOrder::DegRevLex, &cfg).unwrap_err();
        assert!(err.is_inconclusive());
        let cfg = GroebnerConfig { max_pairs: 1_000_000, max_degree: 2 };
        let err = groebner_basis_with(&gens, 3, MonomialOrder::DegRevLex, &cfg).unwrap_err();
        assert_eq!(err, GroebnerError::ResourceCap { kind: CapKind::Degree, limit: 2 });
    }

    #[test]
    fn regular_sequences() {
        let o = Oracle::default();
        let h = |d: i64, k: usize| crate::symmetric::complete_h(d, k);
        assert!(is_regular_sequence(&[h(1, 2), h(2, 2)], 2, &o).unwrap());
        assert!(!is_regular_sequence(&[p("x1", 2), p("x1^2", 2)], 2, &o).unwrap());
        assert!(!is_regular_sequence(&[p("1", 2)], 2, &o).unwrap());
    }

    #[test]
    fn key_ignores_generator_order_and_scaling() {
        let a = basis_key(&[p("2 x1", 2), p("x2 + 1", 2)], 2, MonomialOrder::DegRevLex);
        let b = basis_key(&[p("3 x2 + 3", 2), p("x1", 2)], 2, MonomialOrder::DegRevLex);
        assert_eq!(a, b);
    }
}
