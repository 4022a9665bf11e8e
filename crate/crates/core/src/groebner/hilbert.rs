//! Hilbert series of monomial quotients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::polyring::{Monomial, UniPoly};

/// `numerator(t) / (1 - t)^denom_power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: UniPoly,
    pub denom_power: usize,
}

impl HilbertSeries {
    pub fn new(numerator: UniPoly, denom_power: usize) -> Self {
        HilbertSeries { numerator, denom_power }
    }

    /// The series of the zero ring (quotient by the unit ideal).
    pub fn zero() -> Self {
        HilbertSeries { numerator: UniPoly::zero(), denom_power: 0 }
    }

    /// Cancels every factor `(1 - t)` shared by numerator and denominator.
    pub fn canonical(&self) -> Self {
        if self.numerator.is_zero() {
            return Self::zero();
        }
        let mut num = self.numerator.clone();
        let mut d = self.denom_power;
        while d > 0 {
            match num.div_one_minus_t() {
                Some(q) => {
                    num = q;
                    d -= 1;
                }
                None => break,
            }
        }
        HilbertSeries { numerator: num, denom_power: d }
    }

    /// Re-expresses the series over `(1 - t)^power`; `None` when `power` is
    /// smaller than the canonical denominator power.
    pub fn with_denominator(&self, power: usize) -> Option<Self> {
        let c = self.canonical();
        if self.numerator.is_zero() {
            return Some(HilbertSeries { numerator: UniPoly::zero(), denom_power: power });
        }
        if power < c.denom_power {
            return None;
        }
        let mut num = c.numerator;
        let factor = UniPoly::one_minus_t_pow(1);
        for _ in c.denom_power..power {
            num = &num * &factor;
        }
        Some(HilbertSeries { numerator: num, denom_power: power })
    }

    /// Krull dimension of the quotient; `-1` for the zero ring.
    pub fn dimension(&self) -> i64 {
        if self.numerator.is_zero() {
            -1
        } else {
            self.canonical().denom_power as i64
        }
    }

    /// Value at `t = 1` of the canonical numerator; zero for the zero ring.
    pub fn degree(&self) -> BigInt {
        if self.numerator.is_zero() {
            BigInt::zero()
        } else {
            self.canonical().numerator.eval_one()
        }
    }

    /// First `n` coefficients of the power series expansion.
    pub fn coefficients(&self, n: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = (0..n).map(|i| self.numerator.coeff(i)).collect();
        for _ in 0..self.denom_power {
            for i in 1..n {
                let prev = out[i - 1].clone();
                out[i] += prev;
            }
        }
        out
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.denom_power {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({})/(1 - t)", self.numerator),
            d => write!(f, "({})/(1 - t)^{d}", self.numerator),
        }
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), *m));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^nvars` of the
/// quotient of `nvars` variables by the monomial ideal generated by `gens`.
///
/// Pivot recursion: `N(I) = N(I + (p)) + t^deg(p) N(I : p)` with `p` a pure
/// power of the variable occurring in the most non-pure generators.
pub fn hilbert_numerator(gens: &[Monomial], nvars: usize) -> UniPoly {
    numerator_rec(minimalize(gens.to_vec()), nvars)
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> UniPoly {
    if gens.is_empty() {
        return UniPoly::one();
    }
    if gens.iter().any(Monomial::is_one) {
        return UniPoly::zero();
    }
    let mixed: Vec<&Monomial> = gens.iter().filter(|m| m.support().count() > 1).collect();
    if mixed.is_empty() {
        // minimal pure powers are in distinct variables: complete intersection
        let mut acc = UniPoly::one();
        for g in &gens {
            acc = &acc * &UniPoly::one_minus_power(g.degree() as usize);
        }
        return acc;
    }
    if gens.len() == 1 {
        return UniPoly::one_minus_power(gens[0].degree() as usize);
    }
    let mut counts = vec![0usize; nvars];
    for m in &mixed {
        for v in m.support() {
            counts[v] += 1;
        }
    }
    let var = (0..nvars).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).expect("nvars > 0");
    let mut exps: Vec<u32> = mixed.iter().map(|m| m.exponent(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2];
    let pivot = Monomial::var(var, e);

    let mut plus = gens.clone();
    plus.push(pivot);
    let plus = minimalize(plus);
    let colon = minimalize(
        gens.iter()
            .map(|g| pivot.gcd(g).quotient_of(g).expect("gcd divides"))
            .collect(),
    );
    let a = numerator_rec(plus, nvars);
    let b = numerator_rec(colon, nvars);
    &a + &(&UniPoly::term(e as usize, BigInt::one()) * &b)
}
