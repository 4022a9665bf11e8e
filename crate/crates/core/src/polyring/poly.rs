use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, PolyError, MAX_VARS};

/// Sparse polynomial over the rationals in a fixed number of variables.
///
/// Terms live in a map keyed by monomial, so the representation is canonical:
/// two polynomials are equal exactly when their term maps are equal. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Exact `a op b`, failing when the ring contexts differ.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial, PolyError> {
    a.check_ring(b)?;
    Ok(match op {
        ArithOp::Add => a.add_ref(b),
        ArithOp::Sub => a.sub_ref(b),
        ArithOp::Mul => a.mul_ref(b),
    })
}

/// Exact quotient `num / den`; any remainder is an error.
pub fn poly_divide_exact(num: &Polynomial, den: &Polynomial) -> Result<Polynomial, PolyError> {
    num.div_exact(den)
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(nvars, Monomial::one(), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(BigInt::from(c)))
    }

    /// The variable `x_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} outside ring of {nvars} variables");
        Self::monomial(nvars, Monomial::var(index, 1), BigRational::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        debug_assert!(m.span() <= nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// monomials are summed.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, BigRational)>,
    {
        if nvars > MAX_VARS {
            return Err(PolyError::TooManyVariables(nvars));
        }
        let mut p = Self::zero(nvars);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(PolyError::RingMismatch { left: nvars, right: exps.len() });
            }
            p.add_term(Monomial::from_exponents(&exps)?, c);
        }
        Ok(p)
    }

    pub(crate) fn from_map(nvars: usize, terms: BTreeMap<Monomial, BigRational>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(Monomial, &BigRational)> {
        match order {
            MonomialOrder::Lex => self.terms.iter().next_back().map(|(m, c)| (*m, c)),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| order.cmp(a.0, b.0))
                .map(|(m, c)| (*m, c)),
        }
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, BigRational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub(crate) fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(PolyError::RingMismatch { left: self.nvars, right: other.nvars })
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_ref(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    fn sub_ref(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    fn mul_ref(&self, other: &Polynomial) -> Polynomial {
        // integer accumulation is much cheaper than rational when both sides
        // have integral coefficients, which is the common case here
        if self.is_integral() && other.is_integral() {
            let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    let prod = ca.numer() * cb.numer();
                    *acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += prod;
                }
            }
            let terms = acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m, BigRational::from_integer(c)))
                .collect();
            return Polynomial { nvars: self.nvars, terms };
        }
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Exact division, performed by repeatedly cancelling the lex-leading term.
    pub fn div_exact(&self, den: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(den)?;
        let (lead_m, lead_c) = match den.terms.iter().next_back() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(PolyError::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            let qm = lead_m.quotient_of(&m).ok_or(PolyError::InexactDivision)?;
            let qc = c / &lead_c;
            for (dm, dc) in &den.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong dimension");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Relabels variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        assert_eq!(perm.len(), self.nvars);
        let terms = self.terms.iter().map(|(m, c)| (m.permuted(perm), c.clone())).collect();
        Polynomial { nvars: self.nvars, terms }
    }

    /// Embeds into a ring with `nvars` variables (the new ones appended).
    pub fn extend_vars(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars && nvars <= MAX_VARS);
        Polynomial { nvars, terms: self.terms.clone() }
    }

    /// Embeds into a ring with `extra` new variables placed in front.
    pub fn prepend_vars(&self, extra: usize) -> Polynomial {
        assert!(self.nvars + extra <= MAX_VARS);
        let terms = self.terms.iter().map(|(m, c)| (m.shifted(extra), c.clone())).collect();
        Polynomial { nvars: self.nvars + extra, terms }
    }

    /// Drops trailing variables that do not occur.
    pub fn restrict_vars(&self, nvars: usize) -> Result<Polynomial, PolyError> {
        if self.terms.keys().any(|m| m.span() > nvars) {
            return Err(PolyError::RingMismatch { left: nvars, right: self.nvars });
        }
        Ok(Polynomial { nvars, terms: self.terms.clone() })
    }

    /// Homogenizes with the variable `var`, which must not occur in `self`.
    pub fn homogenize(&self, var: usize) -> Polynomial {
        assert!(var < self.nvars);
        let Some(d) = self.total_degree() else { return self.clone() };
        let mut p = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            assert_eq!(m.exponent(var), 0, "homogenizing variable already in use");
            p.add_term(m.mul(&Monomial::var(var, d - m.degree())), c.clone());
        }
        p
    }

    /// Substitutes `1` for the variable `var`.
    pub fn set_var_to_one(&self, var: usize) -> Polynomial {
        let mut p = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.exponents(self.nvars);
            e[var] = 0;
            p.add_term(Monomial::from_exponents(&e).expect("smaller exponents"), c.clone());
        }
        p
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..self.nvars).collect();
            perm.swap(i, i + 1);
            self.permute_vars(&perm) == *self
        })
    }

    /// Sign of the lex-leading coefficient (zero for the zero polynomial).
    pub fn leading_sign(&self) -> i8 {
        match self.terms.values().next_back() {
            None => 0,
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Least common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect();
        Polynomial { nvars: self.nvars, terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

// Operator forms panic on a ring mismatch; use `poly_arith` for the checked form.
macro_rules! binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.check_ring(rhs).expect("ring context mismatch");
                self.$inner(rhs)
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn add_cancels() {
        let p = &(&x(2, 0) + &x(2, 1)) + &(-x(2, 1));
        assert_eq!(p, x(2, 0));
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(2, 0) + &x(2, 1)) * &(&x(2, 0) - &x(2, 1));
        let expect = &x(2, 0).pow(2) - &x(2, 1).pow(2);
        assert_eq!(p, expect);
    }

    #[test]
    fn ring_mismatch_is_error() {
        let err = poly_arith(&x(2, 0), &x(3, 0), ArithOp::Add).unwrap_err();
        assert!(matches!(err, PolyError::RingMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn exact_division() {
        let num = &x(2, 0).pow(2) - &x(2, 1).pow(2);
        let den = &x(2, 0) - &x(2, 1);
        assert_eq!(poly_divide_exact(&num, &den).unwrap(), &x(2, 0) + &x(2, 1));
    }

    #[test]
    fn bialternant_style_division() {
        // det[[x1^2, x2^2], [x1^3, x2^3]] = x1^2 x2^3 - x1^3 x2^2
        let num = &(&x(2, 0).pow(2) * &x(2, 1).pow(3)) - &(&x(2, 0).pow(3) * &x(2, 1).pow(2));
        let den = &x(2, 1) - &x(2, 0);
        let q = poly_divide_exact(&num, &den).unwrap();
        assert_eq!(q, &x(2, 0).pow(2) * &x(2, 1).pow(2));
    }

    #[test]
    fn inexact_division_is_error() {
        assert_eq!(poly_divide_exact(&x(2, 0), &x(2, 1)), Err(PolyError::InexactDivision));
        assert_eq!(
            poly_divide_exact(&x(2, 0), &Polynomial::zero(2)),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn leading_terms() {
        let p = &(&x(3, 1).pow(2) + &(&x(3, 0) * &x(3, 2))) + &x(3, 2).pow(3);
        let (m, _) = p.leading_term(MonomialOrder::DegRevLex).unwrap();
        assert_eq!(m, Monomial::var(2, 3));
        let (m, _) = p.leading_term(MonomialOrder::Lex).unwrap();
        assert_eq!(m, Monomial::from_exponents(&[1, 0, 1]).unwrap());
    }
}
