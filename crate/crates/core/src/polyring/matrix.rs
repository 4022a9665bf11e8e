//! Determinants of small matrices with polynomial entries.

use itertools::Itertools;

use super::{PolyError, Polynomial};

/// Row-major square or rectangular matrix of polynomials in one ring.
pub type PolyMatrix = Vec<Vec<Polynomial>>;

fn check_square(m: &PolyMatrix) -> Result<(usize, usize), PolyError> {
    let n = m.len();
    let nvars = m.first().and_then(|r| r.first()).map_or(0, Polynomial::nvars);
    for row in m {
        if row.len() != n {
            return Err(PolyError::Shape(format!("expected {n} columns, found {}", row.len())));
        }
        for e in row {
            if e.nvars() != nvars {
                return Err(PolyError::RingMismatch { left: nvars, right: e.nvars() });
            }
        }
    }
    Ok((n, nvars))
}

/// Fraction-free Gaussian elimination (Bareiss). Every intermediate division
/// is exact over an integral domain.
pub fn det_bareiss(m: &PolyMatrix) -> Result<Polynomial, PolyError> {
    let (n, nvars) = check_square(m)?;
    if n == 0 {
        return Ok(Polynomial::one(nvars));
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = Polynomial::one(nvars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Polynomial::zero(nvars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Laplace expansion along the first row. Exponential; meant for `n <= 5`
/// as an independent check on [`det_bareiss`].
pub fn det_cofactor(m: &PolyMatrix) -> Result<Polynomial, PolyError> {
    let (n, nvars) = check_square(m)?;
    let cols: Vec<usize> = (0..n).collect();
    Ok(cofactor_rec(m, 0, &cols, nvars))
}

fn cofactor_rec(m: &PolyMatrix, row: usize, cols: &[usize], nvars: usize) -> Polynomial {
    if cols.is_empty() {
        return Polynomial::one(nvars);
    }
    let mut acc = Polynomial::zero(nvars);
    for (pos, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = cofactor_rec(m, row + 1, &rest, nvars);
        let term = &m[row][c] * &minor;
        acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// All maximal minors of an `rows x cols` matrix with `rows >= cols`, keyed by
/// the chosen row indices in increasing order.
pub fn maximal_minors(m: &PolyMatrix) -> Result<Vec<(Vec<usize>, Polynomial)>, PolyError> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if rows < cols {
        return Err(PolyError::Shape(format!("{rows}x{cols} matrix has no maximal minors")));
    }
    (0..rows)
        .combinations(cols)
        .map(|sel| {
            let sub: PolyMatrix = sel.iter().map(|&r| m[r].clone()).collect();
            det_bareiss(&sub).map(|d| (sel, d))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, 3).unwrap()
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = vec![
            vec![p("x1"), p("x2 + 1"), p("0")],
            vec![p("0"), p("x1*x3"), p("x2^2")],
            vec![p("1"), p("x3"), p("x1 - x2")],
        ];
        assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m).unwrap());
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let m = vec![vec![p("0"), p("1")], vec![p("1"), p("x1")]];
        assert_eq!(det_bareiss(&m).unwrap(), p("-1"));
        assert_eq!(det_cofactor(&m).unwrap(), p("-1"));
    }

    #[test]
    fn singular_column() {
        let m = vec![vec![p("0"), p("x1")], vec![p("0"), p("x2")]];
        assert!(det_bareiss(&m).unwrap().is_zero());
    }

    #[test]
    fn minors_of_tall_matrix() {
        let m = vec![vec![p("1")], vec![p("x1")], vec![p("x2")]];
        let minors = maximal_minors(&m).unwrap();
        assert_eq!(minors.len(), 3);
        assert_eq!(minors[2], (vec![2], p("x2")));
    }
}
