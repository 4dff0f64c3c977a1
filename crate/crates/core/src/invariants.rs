//! `A_G`, `B_G` and the quantities derived from them.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::group::{CentralizerSpectrum, FiniteGroup};
use crate::ratfun::{divisors, PartialFraction, Polynomial, RatFunError, RationalFunction};
use crate::Rational;

/// Nesting bound for the centralizer recursion. Centers grow strictly at
/// each level, so valid groups stay far below it.
pub const MAX_RECURSION_DEPTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("centralizer recursion exceeded depth {0}")]
    RecursionDepthExceeded(usize),
    #[error("alpha sequence must be nonempty")]
    EmptyInput,
    #[error("Vandermonde solution is not integral at m = {m}")]
    NonIntegralSolution { m: u64 },
    #[error("Vandermonde solution is negative at m = {m}")]
    NegativeSolution { m: u64 },
    #[error("asymptotic horizon must be at least 3, got {0}")]
    HorizonTooSmall(usize),
    #[error(transparent)]
    RatFun(#[from] RatFunError),
}

/// `α_{G,n} = (1/|G|) Σ_m z_m mⁿ`.
pub fn alpha_n(g: &FiniteGroup, n: u32) -> BigInt {
    alpha_from_spectrum(&g.class_equation(), g.order() as u64, n)
}

fn alpha_from_spectrum(z: &CentralizerSpectrum, order: u64, n: u32) -> BigInt {
    let sum: BigInt = z
        .iter()
        .map(|(m, c)| BigInt::from(c) * Pow::pow(BigInt::from(m), n))
        .sum();
    let (q, r) = sum.div_rem(&BigInt::from(order));
    debug_assert!(r.is_zero());
    q
}

fn a_from_spectrum(z: &CentralizerSpectrum, order: u64) -> RationalFunction {
    RationalFunction::from_terms(z.iter().map(|(m, c)| (Rational::new(c.into(), order.into()), m)))
}

/// `A_G(t) = (1/|G|) Σ_m z_m/(1 - m t)`.
pub fn a_of(g: &FiniteGroup) -> RationalFunction {
    a_from_spectrum(&g.class_equation(), g.order() as u64)
}

pub fn a_partial_fractions(g: &FiniteGroup) -> PartialFraction {
    let n = g.order() as u64;
    PartialFraction::new(
        g.class_equation()
            .iter()
            .map(|(m, c)| (Rational::new(c.into(), n.into()), m)),
    )
}

/// `B_G(t)` by the centralizer recursion
/// `(1 - |Z(S)| t) B_S = 1 + Σ t B_{Z_S(g)}`, the sum over non-central class
/// representatives `g` of `S`.
pub fn b_of(g: &FiniteGroup) -> Result<RationalFunction, InvariantError> {
    BRecursion::new(g).run()
}

struct BRecursion<'a> {
    g: &'a FiniteGroup,
    centralizers: Vec<Option<BitSet>>,
    memo: BTreeMap<BitSet, RationalFunction>,
}

impl<'a> BRecursion<'a> {
    fn new(g: &'a FiniteGroup) -> Self {
        BRecursion {
            g,
            centralizers: vec![None; g.order()],
            memo: BTreeMap::new(),
        }
    }

    fn run(mut self) -> Result<RationalFunction, InvariantError> {
        let whole = BitSet::full(self.g.order());
        self.b(&whole, 0)
    }

    fn centralizer(&mut self, x: usize) -> &BitSet {
        let g = self.g;
        self.centralizers[x].get_or_insert_with(|| g.centralizer_bits(x))
    }

    fn b(&mut self, s: &BitSet, depth: usize) -> Result<RationalFunction, InvariantError> {
        if depth > MAX_RECURSION_DEPTH {
            return Err(InvariantError::RecursionDepthExceeded(MAX_RECURSION_DEPTH));
        }
        if let Some(f) = self.memo.get(s) {
            return Ok(f.clone());
        }
        let elems = s.to_vec();
        let gens = self.generators_of(&elems);
        let central: Vec<usize> = elems
            .iter()
            .copied()
            .filter(|&x| gens.iter().all(|&h| self.g.commute(x, h)))
            .collect();
        let z = central.len() as u64;
        let result = if central.len() == elems.len() {
            RationalFunction::geometric(z)
        } else {
            let mut sub: BTreeMap<BitSet, u64> = BTreeMap::new();
            let mut seen = BitSet::new(self.g.order());
            for &x in &central {
                seen.insert(x);
            }
            for &x in &elems {
                if seen.contains(x) {
                    continue;
                }
                seen.insert(x);
                let mut stack = vec![x];
                while let Some(y) = stack.pop() {
                    for &h in &gens {
                        let c = self.g.conj(y, h);
                        if seen.insert(c) {
                            stack.push(c);
                        }
                    }
                }
                let key = s.intersection(self.centralizer(x));
                *sub.entry(key).or_insert(0) += 1;
            }
            let mut acc = RationalFunction::zero();
            for (key, count) in sub {
                let f = self.b(&key, depth + 1)?;
                acc = acc.add(&f.scale(&Rational::from_integer(count.into())));
            }
            let t = RationalFunction::from_polynomial(Polynomial::from_ints(&[0, 1]));
            RationalFunction::one()
                .add(&t.mul(&acc))
                .mul(&RationalFunction::geometric(z))
        };
        self.memo.insert(s.clone(), result.clone());
        Ok(result)
    }

    fn generators_of(&self, elems: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = BitSet::new(self.g.order());
        span.insert(0);
        for &x in elems {
            if !span.contains(x) {
                gens.push(x);
                span = self.g.closure(&gens);
                if span.len() == elems.len() {
                    break;
                }
            }
        }
        gens
    }
}

/// Partial fractions of `B_G`, with pole parameters among the divisors of `|G|`.
pub fn b_partial_fractions(g: &FiniteGroup, b: &RationalFunction) -> Result<PartialFraction, InvariantError> {
    Ok(b.to_partial_fractions_with(&divisors(g.order() as u64))?)
}

/// Recovers the class equation from `α_{G,1..N}`, `N = |G|`.
///
/// With `b_k = N α_k` and `w_m = m z_m` the system `Σ_m w_m m^{k-1} = b_k`
/// is a transposed Vandermonde system. It is first solved on the divisors of
/// `N` and checked against every equation; otherwise it is solved on all of
/// `1..=N`.
pub fn class_eq_from_alpha(alphas: &[BigInt]) -> Result<CentralizerSpectrum, InvariantError> {
    let n = alphas.len() as u64;
    if n == 0 {
        return Err(InvariantError::EmptyInput);
    }
    let b: Vec<BigInt> = alphas.iter().map(|a| a * BigInt::from(n)).collect();
    let nodes = divisors(n);
    if let Ok(w) = solve_transposed_vandermonde(&nodes, &b[..nodes.len()]) {
        let fits = (0..b.len()).all(|k| {
            let lhs: BigInt = nodes
                .iter()
                .zip(&w)
                .map(|(&m, wm)| wm * Pow::pow(BigInt::from(m), k as u32))
                .sum();
            lhs == b[k]
        });
        if fits {
            return spectrum_from_weights(&nodes, &w);
        }
    }
    let all: Vec<u64> = (1..=n).collect();
    let w = solve_transposed_vandermonde(&all, &b)?;
    spectrum_from_weights(&all, &w)
}

/// Solves `Σ_j w_j x_j^i = b_i` (`i = 0..d`) for integer `w` using
/// `w_j = Σ_i [x^i] (P(x)/(x - x_j)) b_i / P'(x_j)` with `P = Π (x - x_j)`.
fn solve_transposed_vandermonde(nodes: &[u64], b: &[BigInt]) -> Result<Vec<BigInt>, InvariantError> {
    let d = nodes.len();
    let mut p = vec![BigInt::one()];
    for &x in nodes {
        let x = BigInt::from(x);
        let mut next = vec![BigInt::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &x;
        }
        p = next;
    }
    let mut w = Vec::with_capacity(d);
    for &xj in nodes {
        let x = BigInt::from(xj);
        // synthetic division of P by (x - x_j)
        let mut q = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (0..d).rev() {
            carry = &p[i + 1] + &carry * &x;
            q[i] = carry.clone();
        }
        let denom: BigInt = nodes
            .iter()
            .filter(|&&m| m != xj)
            .map(|&m| BigInt::from(xj as i64 - m as i64))
            .product();
        let numer: BigInt = q.iter().zip(b).map(|(qi, bi)| qi * bi).sum();
        let (quot, rem) = numer.div_rem(&denom);
        if !rem.is_zero() {
            return Err(InvariantError::NonIntegralSolution { m: xj });
        }
        w.push(quot);
    }
    Ok(w)
}

fn spectrum_from_weights(nodes: &[u64], w: &[BigInt]) -> Result<CentralizerSpectrum, InvariantError> {
    let mut pairs = Vec::new();
    for (&m, wm) in nodes.iter().zip(w) {
        let (z, r) = wm.div_rem(&BigInt::from(m));
        if !r.is_zero() {
            return Err(InvariantError::NonIntegralSolution { m });
        }
        if z.is_negative() {
            return Err(InvariantError::NegativeSolution { m });
        }
        let z = z.to_u64().ok_or(InvariantError::NonIntegralSolution { m })?;
        pairs.push((m, z));
    }
    Ok(CentralizerSpectrum::from_pairs(pairs))
}

fn inverse_order(g: &FiniteGroup) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(g.order()))
}

/// `A_G(t/|G|)`, an isoclinism family invariant.
pub fn normalized_a(g: &FiniteGroup) -> RationalFunction {
    a_of(g).scale_variable(&inverse_order(g))
}

/// `B_G(t/|G|)`, an isoclinism family invariant.
pub fn normalized_b(g: &FiniteGroup) -> Result<RationalFunction, InvariantError> {
    Ok(b_of(g)?.scale_variable(&inverse_order(g)))
}

/// `A_G = A_H`. Panics if this disagrees with equality of class equations,
/// since the two are equivalent.
pub fn a_equivalent(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    let by_function = a_of(g) == a_of(h);
    let by_classes = g.class_equation() == h.class_equation();
    assert_eq!(
        by_function, by_classes,
        "A-equivalence disagrees with class-equation equality"
    );
    by_function
}

pub fn b_equivalent(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool, InvariantError> {
    Ok(b_of(g)? == b_of(h)?)
}

/// Growth data read off the dominant poles of `A_G` and `B_G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticReport {
    pub dominant_pole_a: u64,
    /// `|Z(G)|/|G|`.
    pub leading_residue_a: Rational,
    pub dominant_pole_b: u64,
    /// Residue at the dominant pole of `B_G`, when it is positive.
    pub dominant_residue_b: Option<Rational>,
    /// `β_{n+1}/β_n` for `n = 0..horizon`.
    pub empirical_ratio_b: Vec<Rational>,
}

/// Panics if the dominant pole of `B_G` differs from the maximal order of an
/// abelian subgroup.
pub fn asymptotic_report(g: &FiniteGroup, horizon: usize) -> Result<AsymptoticReport, InvariantError> {
    if horizon < 3 {
        return Err(InvariantError::HorizonTooSmall(horizon));
    }
    let a_pf = a_partial_fractions(g);
    let (leading_residue_a, dominant_pole_a) = a_pf.dominant().expect("A_G has a pole");
    let b = b_of(g)?;
    let b_pf = b_partial_fractions(g, &b)?;
    let (res_b, dominant_pole_b) = b_pf.dominant().expect("B_G has a pole");
    assert_eq!(
        dominant_pole_b,
        g.max_abelian_order() as u64,
        "dominant pole of B_G is not the maximal abelian order"
    );
    let series = b.series_coeffs(horizon + 1);
    let empirical_ratio_b = series.windows(2).map(|w| &w[1] / &w[0]).collect();
    Ok(AsymptoticReport {
        dominant_pole_a,
        leading_residue_a,
        dominant_pole_b,
        dominant_residue_b: res_b.is_positive().then_some(res_b),
        empirical_ratio_b,
    })
}

/// Everything computed for one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    pub group_id: String,
    pub order: u64,
    pub center_order: u64,
    pub class_count: u64,
    pub derived_order: u64,
    pub is_ac: bool,
    pub a: RationalFunction,
    pub b: RationalFunction,
    pub a_pf: PartialFraction,
    pub b_pf: PartialFraction,
    pub spectrum: CentralizerSpectrum,
    pub max_abelian: u64,
    pub normalized_a: RationalFunction,
    pub normalized_b: RationalFunction,
}

impl InvariantRecord {
    pub fn compute(g: &FiniteGroup) -> Result<Self, InvariantError> {
        let order = g.order() as u64;
        let classes = g.conjugacy_classes();
        let spectrum = classes.spectrum();
        let a = a_from_spectrum(&spectrum, order);
        let a_pf = PartialFraction::new(spectrum.iter().map(|(m, c)| (Rational::new(c.into(), order.into()), m)));
        let b = b_of(g)?;
        let b_pf = b_partial_fractions(g, &b)?;
        let inv = inverse_order(g);
        Ok(InvariantRecord {
            group_id: g.group_id(),
            order,
            center_order: spectrum.get(order),
            class_count: classes.class_count() as u64,
            derived_order: g.derived_subgroup().order() as u64,
            is_ac: g.is_ac_group(),
            normalized_a: a.scale_variable(&inv),
            normalized_b: b.scale_variable(&inv),
            a,
            b,
            a_pf,
            b_pf,
            spectrum,
            max_abelian: g.max_abelian_order() as u64,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, GroupSpec};
    use crate::ratfun::q;

    fn group(spec: GroupSpec) -> FiniteGroup {
        build(&spec).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn alpha_of_s3() {
        let s3 = group(GroupSpec::dihedral(6));
        let got: Vec<BigInt> = (0..7).map(|n| alpha_n(&s3, n)).collect();
        assert_eq!(got, ints(&[1, 3, 11, 49, 251, 1393, 8051]));
    }

    #[test]
    fn a_of_q8() {
        let q8 = group(GroupSpec::quaternion(8));
        let expected: RationalFunction = "(1/8)(2/(1-8t) + 6/(1-4t))".parse().unwrap();
        assert_eq!(a_of(&q8), expected);
        assert_eq!(a_of(&group(GroupSpec::cyclic(5))), RationalFunction::geometric(5u32));
    }

    #[test]
    fn b_of_q8_and_abelian() {
        let q8 = group(GroupSpec::quaternion(8));
        let expected: RationalFunction = "(1-t)/((1-2t)(1-4t))".parse().unwrap();
        assert_eq!(b_of(&q8).unwrap(), expected);
        let c6 = group(GroupSpec::cyclic(6));
        assert_eq!(b_of(&c6).unwrap(), RationalFunction::geometric(6u32));
    }

    #[test]
    fn b_series_of_s3() {
        let s3 = group(GroupSpec::dihedral(6));
        let s = b_of(&s3).unwrap().series_coeffs(4);
        assert_eq!(s, vec![q(1, 1), q(3, 1), q(8, 1), q(21, 1)]);
    }

    #[test]
    fn class_equation_round_trip() {
        let got = class_eq_from_alpha(&ints(&[3, 11, 49, 251, 1393, 8051])).unwrap();
        assert_eq!(got, CentralizerSpectrum::from_pairs([(2, 3), (3, 2), (6, 1)]));
        let c2 = class_eq_from_alpha(&ints(&[2, 4])).unwrap();
        assert_eq!(c2, CentralizerSpectrum::from_pairs([(2, 2)]));
        let bad = class_eq_from_alpha(&ints(&[3, 12, 49, 251, 1393, 8051]));
        assert!(matches!(
            bad,
            Err(InvariantError::NonIntegralSolution { .. } | InvariantError::NegativeSolution { .. })
        ));
        assert_eq!(class_eq_from_alpha(&[]), Err(InvariantError::EmptyInput));
    }

    #[test]
    fn q8_and_d8_share_normalized_invariants() {
        let q8 = group(GroupSpec::quaternion(8));
        let d8 = group(GroupSpec::dihedral(8));
        assert_eq!(normalized_a(&q8), normalized_a(&d8));
        assert_eq!(normalized_b(&q8).unwrap(), normalized_b(&d8).unwrap());
        assert!(a_equivalent(&q8, &d8));
        assert!(b_equivalent(&q8, &d8).unwrap());
    }

    #[test]
    fn asymptotics_of_q8() {
        let q8 = group(GroupSpec::quaternion(8));
        let r = asymptotic_report(&q8, 5).unwrap();
        assert_eq!(r.dominant_pole_a, 8);
        assert_eq!(r.leading_residue_a, q(1, 4));
        assert_eq!(r.dominant_pole_b, 4);
        assert_eq!(r.empirical_ratio_b.len(), 5);
        assert!(asymptotic_report(&q8, 2).is_err());
    }

    #[test]
    fn record_of_s3() {
        let s3 = group(GroupSpec::dihedral(6));
        let r = InvariantRecord::compute(&s3).unwrap();
        assert_eq!(r.order, 6);
        assert_eq!(r.center_order, 1);
        assert_eq!(r.class_count, 3);
        assert_eq!(r.derived_order, 3);
        assert_eq!(r.max_abelian, 3);
        assert!(r.is_ac);
        assert_eq!(r.b_pf.dominant().unwrap().1, 3);
    }
}
