//! Buchberger's algorithm on primitive integer polynomials.
//!
//! Working over `Z` with primitive representatives is equivalent to working
//! over `Q` up to unit scaling and avoids rational normalization in the inner
//! loop. Pairs are pruned with the Gebauer-Möller update and selected by the
//! normal strategy (smallest lcm degree, ties broken by pair index).

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{CapKind, GroebnerConfig, GroebnerError};
use crate::polyring::{Monomial, MonomialOrder, Polynomial};

/// Integer polynomial with terms strictly descending under the ring order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IPoly {
    pub terms: Vec<(Monomial, BigInt)>,
}

impl IPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> Monomial {
        self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Clears denominators and content; returns the polynomial together with
    /// the rational `c` such that `p = c * result`.
    pub fn from_poly(p: &Polynomial, order: MonomialOrder) -> (IPoly, BigRational) {
        let d = p.denominator_lcm();
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .map(|(m, c)| (*m, (c * BigRational::from_integer(d.clone())).to_integer()))
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut ip = IPoly { terms };
        let content = ip.make_primitive();
        (ip, BigRational::new(content, d))
    }

    /// Monic rational form.
    pub fn to_poly(&self, nvars: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero(nvars);
        }
        let lc = self.lc().clone();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, BigRational::new(c.clone(), lc.clone())))
            .collect();
        Polynomial::from_map(nvars, terms)
    }

    /// Divides out the content and makes the leading coefficient positive.
    /// Returns the signed factor removed.
    pub fn make_primitive(&mut self) -> BigInt {
        if self.is_zero() {
            return BigInt::one();
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.lc().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c /= &g;
            }
        }
        g
    }
}

/// `ca * ma * f - cb * mb * g`, merging in term order.
fn lin_comb(
    ca: &BigInt,
    ma: &Monomial,
    f: &[(Monomial, BigInt)],
    cb: &BigInt,
    mb: &Monomial,
    g: &[(Monomial, BigInt)],
    order: MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let a_one = ca.is_one();
    let b_one = cb.is_one();
    let scale_a = |c: &BigInt| if a_one { c.clone() } else { c * ca };
    let scale_b = |c: &BigInt| if b_one { c.clone() } else { c * cb };
    while i < f.len() && j < g.len() {
        let fm = f[i].0.mul(ma);
        let gm = g[j].0.mul(mb);
        match order.cmp(&fm, &gm) {
            Ordering::Greater => {
                out.push((fm, scale_a(&f[i].1)));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, -scale_b(&g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = scale_a(&f[i].1) - scale_b(&g[j].1);
                if !c.is_zero() {
                    out.push((fm, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(f[i..].iter().map(|(m, c)| (m.mul(ma), scale_a(c))));
    out.extend(g[j..].iter().map(|(m, c)| (m.mul(mb), -scale_b(c))));
    out
}

/// Reducer lookup: leading monomials of the current basis.
pub(crate) struct Reducers<'a> {
    pub polys: Vec<&'a IPoly>,
}

impl<'a> Reducers<'a> {
    /// Smallest leading monomial first, which keeps coefficient growth down.
    pub fn sorted(mut polys: Vec<&'a IPoly>, order: MonomialOrder) -> Self {
        polys.sort_by(|a, b| order.cmp(&a.lm(), &b.lm()));
        Reducers { polys }
    }

    fn find(&self, m: &Monomial) -> Option<&'a IPoly> {
        self.polys.iter().copied().find(|g| g.lm().divides(m))
    }
}

/// Full reduction of `f`. When `track` is set, also returns the rational `mu`
/// such that `result = mu * NF(f)`.
pub(crate) fn reduce_full(
    f: IPoly,
    reducers: &Reducers<'_>,
    order: MonomialOrder,
    track: bool,
) -> (IPoly, BigRational) {
    let mut mu = BigRational::one();
    let mut done: Vec<(Monomial, BigInt)> = Vec::new();
    let mut rest = f.terms;
    let mut start = 0usize;
    let mut steps = 0usize;
    let mut last_bits = rest.iter().map(|(_, c)| c.bits()).max().unwrap_or(0);
    loop {
        // skip irreducible leading terms into `done`
        while start < rest.len() && reducers.find(&rest[start].0).is_none() {
            start += 1;
        }
        if start > 0 {
            done.extend(rest.drain(..start));
            start = 0;
        }
        let Some((m, c)) = rest.first().cloned() else { break };
        let g = reducers.find(&m).expect("checked above");
        let q = g.lm().quotient_of(&m).expect("divides");
        let gl = g.lc();
        let d = c.gcd(gl);
        let a = &c / &d;
        // reducers are primitive with positive leading coefficient, so b > 0
        let b = gl / &d;
        rest = lin_comb(&b, &Monomial::one(), &rest, &a, &q, &g.terms, order);
        debug_assert!(rest.first().is_none_or(|t| t.0 != m));
        if !b.is_one() {
            for t in &mut done {
                t.1 *= &b;
            }
            if track {
                mu *= BigRational::from_integer(b.clone());
            }
        }
        steps += 1;
        // periodic content removal keeps coefficient growth in check
        let bits = rest.first().map_or(0, |t| t.1.bits());
        if steps % 16 == 0 || bits > 2 * last_bits + 64 {
            let g = content(&done, &rest);
            if !g.is_one() && !g.is_zero() {
                for t in done.iter_mut().chain(rest.iter_mut()) {
                    t.1 /= &g;
                }
                if track {
                    mu /= BigRational::from_integer(g);
                }
            }
            last_bits = rest.iter().chain(&done).map(|(_, c)| c.bits()).max().unwrap_or(0);
        }
    }
    let mut out = IPoly { terms: done };
    let g = out.make_primitive();
    if track {
        mu /= BigRational::from_integer(g);
    }
    (out, mu)
}

fn content(a: &[(Monomial, BigInt)], b: &[(Monomial, BigInt)]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in a.iter().chain(b) {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Critical pair ordered by its lcm under the ring order, then by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct PairKey {
    order: MonomialOrder,
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&self.lcm, &other.lcm)
            .then(self.i.cmp(&other.i))
            .then(self.j.cmp(&other.j))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Counters from one run, reported alongside the basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub max_degree_seen: u32,
}

pub(crate) struct Buchberger {
    order: MonomialOrder,
    basis: Vec<IPoly>,
    active: Vec<bool>,
    pairs: BTreeSet<PairKey>,
    pub stats: EngineStats,
}

impl Buchberger {
    pub fn new(order: MonomialOrder) -> Self {
        Buchberger {
            order,
            basis: Vec::new(),
            active: Vec::new(),
            pairs: BTreeSet::new(),
            stats: EngineStats::default(),
        }
    }

    fn reducers(&self) -> Reducers<'_> {
        Reducers::sorted(
            self.basis.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p).collect(),
            self.order,
        )
    }

    /// Runs to completion. Returns the reduced basis as primitive integer
    /// polynomials sorted by ascending leading monomial.
    pub fn run(
        mut self,
        gens: Vec<IPoly>,
        config: &GroebnerConfig,
    ) -> Result<(Vec<IPoly>, EngineStats), GroebnerError> {
        // feed generators in ascending order of leading monomial; each one is
        // reduced against what is already present
        let mut gens: Vec<IPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        gens.sort_by(|a, b| self.order.cmp(&a.lm(), &b.lm()));
        for g in gens {
            let (h, _) = reduce_full(g, &self.reducers(), self.order, false);
            if h.is_zero() {
                continue;
            }
            if h.is_constant() {
                return Ok((vec![h], self.stats));
            }
            self.insert(h);
        }

        while let Some(key) = self.pairs.pop_first() {
            let degree = key.lcm.degree();
            self.stats.pairs_reduced += 1;
            if self.stats.pairs_reduced > config.max_pairs {
                return Err(GroebnerError::ResourceCap {
                    kind: CapKind::Pairs,
                    limit: config.max_pairs as u64,
                });
            }
            if degree > config.max_degree {
                return Err(GroebnerError::ResourceCap {
                    kind: CapKind::Degree,
                    limit: config.max_degree as u64,
                });
            }
            self.stats.max_degree_seen = self.stats.max_degree_seen.max(degree);
            let s = self.spoly(key.i, key.j, &key.lcm);
            if s.is_zero() {
                self.stats.zero_reductions += 1;
                continue;
            }
            let (h, _) = reduce_full(s, &self.reducers(), self.order, false);
            if h.is_zero() {
                self.stats.zero_reductions += 1;
                continue;
            }
            if h.is_constant() {
                return Ok((vec![h], self.stats));
            }
            self.insert(h);
        }
        let stats = self.stats;
        Ok((self.finish(), stats))
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> IPoly {
        let (f, g) = (&self.basis[i], &self.basis[j]);
        let mf = f.lm().quotient_of(lcm).expect("lcm");
        let mg = g.lm().quotient_of(lcm).expect("lcm");
        let d = f.lc().gcd(g.lc());
        let cf = g.lc() / &d;
        let cg = f.lc() / &d;
        let terms = lin_comb(&cf, &mf, &f.terms[1..], &cg, &mg, &g.terms[1..], self.order);
        let mut p = IPoly { terms };
        p.make_primitive();
        p
    }

    /// Gebauer-Möller update for a new element `h`.
    fn insert(&mut self, h: IPoly) {
        let lh = h.lm();
        let n = self.basis.len();
        let mut candidates: Vec<(usize, Monomial)> = (0..n)
            .filter(|&i| self.active[i])
            .map(|i| (i, lh.lcm(&self.basis[i].lm())))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = candidates.pop() {
            let coprime = lh.is_coprime(&self.basis[g1].lm());
            let dominated = candidates.iter().any(|(_, l2)| l2.divides(&l1))
                || kept.iter().any(|(_, l2)| l2.divides(&l1));
            if coprime || !dominated {
                kept.push((g1, l1));
            }
        }
        let new_pairs: Vec<(usize, Monomial)> = kept
            .into_iter()
            .filter(|(g, _)| !lh.is_coprime(&self.basis[*g].lm()))
            .collect();

        let basis = &self.basis;
        self.pairs.retain(|key| {
            !(lh.divides(&key.lcm)
                && lh.lcm(&basis[key.i].lm()) != key.lcm
                && lh.lcm(&basis[key.j].lm()) != key.lcm)
        });
        for (g, lcm) in new_pairs {
            self.pairs.insert(PairKey { order: self.order, lcm, i: g, j: n });
        }
        for i in 0..n {
            if self.active[i] && lh.divides(&self.basis[i].lm()) {
                self.active[i] = false;
            }
        }
        self.basis.push(h);
        self.active.push(true);
    }

    fn finish(self) -> Vec<IPoly> {
        let elems = self
            .basis
            .into_iter()
            .zip(self.active)
            .filter(|(_, a)| *a)
            .map(|(p, _)| p)
            .collect();
        interreduce(elems, self.order)
    }
}

/// Reduced form of a set that is already a Gröbner basis: drops elements
/// with a redundant leading monomial, then reduces every tail.
pub(crate) fn interreduce(mut elems: Vec<IPoly>, order: MonomialOrder) -> Vec<IPoly> {
    elems.retain(|p| !p.is_zero());
    elems.sort_by(|a, b| order.cmp(&a.lm(), &b.lm()));
    let mut kept: Vec<IPoly> = Vec::with_capacity(elems.len());
    for p in elems {
        if !kept.iter().any(|q| q.lm().divides(&p.lm())) {
            kept.push(p);
        }
    }
    let mut elems = kept;
    for idx in 0..elems.len() {
        let others = Reducers::sorted(
            elems.iter().enumerate().filter(|(j, _)| *j != idx).map(|(_, p)| p).collect(),
            order,
        );
        let head = elems[idx].terms[0].clone();
        let tail = IPoly { terms: elems[idx].terms[1..].to_vec() };
        let (mut red, beta) = reduce_full_keep_scale(tail, &others, order);
        let mut terms = vec![(head.0, head.1 * &beta)];
        terms.append(&mut red.terms);
        let mut p = IPoly { terms };
        p.make_primitive();
        elems[idx] = p;
    }
    elems
}

/// Reduces without making the result primitive; returns the result and the
/// positive integer factor `beta` with `result = beta * NF(f)`.
fn reduce_full_keep_scale(f: IPoly, reducers: &Reducers<'_>, order: MonomialOrder) -> (IPoly, BigInt) {
    if f.is_zero() {
        return (f, BigInt::one());
    }
    let (r, mu) = reduce_full(f, reducers, order, true);
    // r = mu * NF(f) with mu = num / den, so num * NF(f) = den * r
    let (num, den) = (mu.numer().clone(), mu.denom().clone());
    let (num, den) = if num.sign() == Sign::Minus { (-num, -den) } else { (num, den) };
    let terms = r.terms.into_iter().map(|(m, c)| (m, c * &den)).collect();
    (IPoly { terms }, num)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(s: &str, n: usize) -> IPoly {
        IPoly::from_poly(&Polynomial::parse(s, n).unwrap(), MonomialOrder::DegRevLex).0
    }

    #[test]
    fn lin_comb_cancels_leading() {
        let f = ip("x1^2 + x2", 2);
        let g = ip("x1 x2 + 1", 2);
        // x2 * f - x1 * g = x2^2 - x1
        let out = lin_comb(
            &BigInt::one(),
            &Monomial::var(1, 1),
            &f.terms,
            &BigInt::one(),
            &Monomial::var(0, 1),
            &g.terms,
            MonomialOrder::DegRevLex,
        );
        let p = IPoly { terms: out }.to_poly(2);
        assert_eq!(p, Polynomial::parse("x2^2 - x1", 2).unwrap());
    }

    #[test]
    fn reduce_tracks_scale() {
        let g = ip("2 x1 + 3 x2", 2);
        let f = ip("x1^2", 2);
        let r = Reducers { polys: vec![&g] };
        let (res, mu) = reduce_full(f, &r, MonomialOrder::DegRevLex, true);
        // NF(x1^2) = 9/4 x2^2
        let nf = res.to_poly(2).scale(&(BigRational::from_integer(res.lc().clone()) / mu));
        assert_eq!(nf, Polynomial::parse("9/4 x2^2", 2).unwrap());
    }
}
