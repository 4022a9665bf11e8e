//! Localization away from hyperplane arrangements.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{GroebnerBasis, GroebnerError, Oracle};
use crate::polyring::{MonomialOrder, PolyError, Polynomial, MAX_VARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Arrangement {
    /// `x_i = 0`
    #[serde(rename = "coordinate")]
    Coordinate,
    /// `x_i = x_j`
    #[serde(rename = "braid")]
    Braid,
    /// both of the above
    #[serde(rename = "BC")]
    BC,
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arrangement::Coordinate => "coordinate",
            Arrangement::Braid => "braid",
            Arrangement::BC => "BC",
        })
    }
}

impl FromStr for Arrangement {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "coordinate" | "coord" => Ok(Arrangement::Coordinate),
            "braid" | "a" => Ok(Arrangement::Braid),
            "bc" => Ok(Arrangement::BC),
            other => Err(format!("unknown arrangement '{other}'")),
        }
    }
}

/// Product of the linear forms defining the arrangement in `nvars` variables.
pub fn arrangement_product(arrangement: Arrangement, nvars: usize) -> Polynomial {
    let mut acc = Polynomial::one(nvars);
    if matches!(arrangement, Arrangement::Coordinate | Arrangement::BC) {
        for i in 0..nvars {
            acc = &acc * &Polynomial::var(nvars, i);
        }
    }
    if matches!(arrangement, Arrangement::Braid | Arrangement::BC) {
        for i in 0..nvars {
            for j in i + 1..nvars {
                acc = &acc * &(&Polynomial::var(nvars, i) - &Polynomial::var(nvars, j));
            }
        }
    }
    acc
}

#[derive(Clone, Debug)]
pub struct SaturationResult {
    /// No point of the variety lies off the arrangement.
    pub empty_off_arrangement: bool,
    /// Reduced degrevlex basis of `I + (1 - y * P)` with `y` the last
    /// variable.
    pub witness: GroebnerBasis,
}

impl SaturationResult {
    /// Membership in the saturation `I : P^infinity`.
    pub fn saturation_contains(&self, f: &Polynomial) -> Result<bool, PolyError> {
        let n = self.witness.nvars();
        if f.nvars() + 1 != n {
            return Err(PolyError::RingMismatch { left: n - 1, right: f.nvars() });
        }
        self.witness.contains(&f.extend_vars(n))
    }
}

/// Decides whether the variety of `gens` lies inside the arrangement by
/// adjoining `1 - y * P` in one extra variable `y`.
pub fn saturate_off_arrangement(
    gens: &[Polynomial],
    nvars: usize,
    arrangement: Arrangement,
    oracle: &Oracle,
) -> Result<SaturationResult, GroebnerError> {
    saturate_off_hypersurface(gens, nvars, &arrangement_product(arrangement, nvars), oracle)
}

/// Same as [`saturate_off_arrangement`] for an arbitrary nonzero
/// homogeneous product `P`.
///
/// The system is solved in homogenized form: with `z` a homogenizing
/// variable placed last, a degrevlex basis of `(f^h) + (y P - z^(deg P + 1))`
/// with all powers of `z` divided out is a basis of the homogenization of
/// `I + (1 - y P)`, and setting `z = 1` recovers a basis of that ideal.
/// Homogeneous Buchberger runs avoid the coefficient swell of the affine
/// system.
pub fn saturate_off_hypersurface(
    gens: &[Polynomial],
    nvars: usize,
    product: &Polynomial,
    oracle: &Oracle,
) -> Result<SaturationResult, GroebnerError> {
    if nvars + 2 > MAX_VARS {
        return Err(PolyError::TooManyVariables(nvars + 2).into());
    }
    if product.nvars() != nvars {
        return Err(PolyError::RingMismatch { left: nvars, right: product.nvars() }.into());
    }
    if product.is_zero() || !product.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous(product.to_string()));
    }
    let (yi, zi) = (nvars, nvars + 1);
    let n = nvars + 2;
    let prod = product.extend_vars(n);
    let d = prod.total_degree().expect("nonzero product");
    let mut all: Vec<Polynomial> = Vec::with_capacity(gens.len() + 1);
    for g in gens {
        if g.nvars() != nvars {
            return Err(PolyError::RingMismatch { left: nvars, right: g.nvars() }.into());
        }
        all.push(g.extend_vars(n).homogenize(zi));
    }
    all.push(&(&Polynomial::var(n, yi) * &prod) - &Polynomial::var(n, zi).pow(d + 1));
    let hom = oracle.basis(&all, n, MonomialOrder::DegRevLex)?;
    let affine: Vec<Polynomial> = hom
        .basis()
        .iter()
        .map(|g| g.set_var_to_one(zi).restrict_vars(nvars + 1).expect("z eliminated"))
        .collect();
    let witness = GroebnerBasis::interreduced(nvars + 1, MonomialOrder::DegRevLex, &affine);
    Ok(SaturationResult { empty_off_arrangement: witness.is_unit(), witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(arrangement_product(Arrangement::Coordinate, 2), p("x1 x2", 2));
        assert_eq!(arrangement_product(Arrangement::Braid, 2), p("x1 - x2", 2));
        assert_eq!(arrangement_product(Arrangement::BC, 2), p("x1^2 x2 - x1 x2^2", 2));
    }

    #[test]
    fn inside_arrangement() {
        let o = Oracle::default();
        let r = saturate_off_arrangement(&[p("x1", 2)], 2, Arrangement::Coordinate, &o).unwrap();
        assert!(r.empty_off_arrangement);
        let r = saturate_off_arrangement(&[p("x1 - x2", 2)], 2, Arrangement::Braid, &o).unwrap();
        assert!(r.empty_off_arrangement);
        let r = saturate_off_arrangement(&[p("x1 - x2 - 1", 2)], 2, Arrangement::Braid, &o).unwrap();
        assert!(!r.empty_off_arrangement);
    }

    #[test]
    fn saturation_membership() {
        let o = Oracle::default();
        let r = saturate_off_arrangement(&[p("x1 x2", 2)], 2, Arrangement::Coordinate, &o).unwrap();
        assert!(r.empty_off_arrangement);
        let r = saturate_off_arrangement(&[p("x1 x2 - x1", 2)], 2, Arrangement::Coordinate, &o).unwrap();
        assert!(!r.empty_off_arrangement);
        assert!(r.saturation_contains(&p("x2 - 1", 2)).unwrap());
        assert!(!r.saturation_contains(&p("x1", 2)).unwrap());
    }

    #[test]
    fn witness_is_affine_basis() {
        let o = Oracle::default();
        let gens = [p("x1 x2 - x1", 2)];
        let r = saturate_off_arrangement(&gens, 2, Arrangement::Coordinate, &o).unwrap();
        let direct = crate::groebner::groebner_basis(
            &[p("x1 x2 - x1", 3), p("1 - x1 x2 x3", 3)],
            3,
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        assert_eq!(r.witness, direct);
        assert!(r.witness.satisfies_buchberger_criterion());
    }

    #[test]
    fn parse_names() {
        assert_eq!("bc".parse::<Arrangement>().unwrap(), Arrangement::BC);
        assert_eq!("braid".parse::<Arrangement>().unwrap(), Arrangement::Braid);
        assert!("x".parse::<Arrangement>().is_err());
    }
}
