use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::PolyError;

/// Largest number of variables a ring context may carry.
///
/// The experiments need at most five root variables plus one auxiliary
/// variable for localization, so a fixed inline array keeps monomials `Copy`.
pub const MAX_VARS: usize = 8;

/// A power product `x1^a1 ... xn^an` stored inline.
///
/// Slots beyond the ring's variable count are always zero, so the derived
/// ordering is lexicographic with `x1 > x2 > ...` for every ring size.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { exps: [0; MAX_VARS] }
    }

    pub fn from_exponents(exponents: &[u32]) -> Result<Self, PolyError> {
        if exponents.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables(exponents.len()));
        }
        let mut exps = [0u16; MAX_VARS];
        for (slot, &e) in exps.iter_mut().zip(exponents) {
            *slot = u16::try_from(e).map_err(|_| PolyError::ExponentOverflow)?;
        }
        Ok(Monomial { exps })
    }

    /// `x_{index+1}^exponent` (variables are zero-based internally).
    pub fn var(index: usize, exponent: u32) -> Self {
        assert!(index < MAX_VARS, "variable index {index} out of range");
        let mut m = Monomial::one();
        m.exps[index] = u16::try_from(exponent).expect("exponent overflow");
        m
    }

    #[inline]
    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Number of variables actually used (highest nonzero slot + 1).
    pub fn span(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("monomial exponent overflow");
        }
        Monomial { exps }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = other.exps[i] - self.exps[i];
        }
        Some(Monomial { exps })
    }

    #[inline]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
        }
        Monomial { exps }
    }

    #[inline]
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].min(other.exps[i]);
        }
        Monomial { exps }
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Moves the exponent of variable `i` to slot `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for (i, &target) in perm.iter().enumerate() {
            exps[target] = self.exps[i];
        }
        Monomial { exps }
    }

    /// Shifts every exponent up by `offset` slots (used to prepend variables).
    pub fn shifted(&self, offset: usize) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        exps[offset..].copy_from_slice(&self.exps[..MAX_VARS - offset]);
        debug_assert!(self.exps[MAX_VARS - offset..].iter().all(|&e| e == 0));
        Monomial { exps }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..self.span().max(1)])
    }
}

/// Supported term orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::DegRevLex => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    return da.cmp(&db);
                }
                for i in (0..MAX_VARS).rev() {
                    if a.exps[i] != b.exps[i] {
                        // smaller exponent in the last differing variable wins
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::Lex => "lex",
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "degrevlex" | "grevlex" => Ok(MonomialOrder::DegRevLex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(PolyError::Parse(format!("unknown monomial order `{other}`"))),
        }
    }
}
