//! Closed formulas for `A_G` and `B_G` of specific groups and families,
//! written directly from their displayed forms. They are independent of the
//! computational pipeline and serve as cross-checks.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::ratfun::{render_terms, RationalFunction};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
}

type Result<T> = core::result::Result<T, ClosedFormError>;

fn out_of_range(msg: String) -> ClosedFormError {
    ClosedFormError::ParameterOutOfRange(msg)
}

fn r(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn ri(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn pow(p: u64, k: u32) -> u64 {
    p.checked_pow(k).expect("parameter overflow")
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(out_of_range(format!("{p} is not prime")))
    }
}

/// `c/(1 - m t)`.
fn term(c: Rational, m: u64) -> RationalFunction {
    RationalFunction::simple_pole(c, m)
}

/// `(1/total) Σ count/(1 - m t)`.
fn weighted(total: u64, terms: &[(u64, u64)]) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for &(count, m) in terms {
        acc = acc.add(&term(Rational::new(count.into(), total.into()), m));
    }
    acc
}

fn t_times(f: &RationalFunction) -> RationalFunction {
    f.mul(&RationalFunction::from_polynomial(
        crate::ratfun::Polynomial::from_ints(&[0, 1]),
    ))
}

/// `1/(1 - m t)`.
fn geo(m: u64) -> RationalFunction {
    RationalFunction::geometric(m)
}

/// `k t/(1 - m t)`.
fn kt_over(k: Rational, m: u64) -> RationalFunction {
    t_times(&term(k, m))
}

/// Dihedral group of order `2n`, `n` odd.
pub fn a_dihedral_odd(n: u64) -> Result<RationalFunction> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(out_of_range(format!("n must be odd and at least 3, got {n}")));
    }
    Ok(weighted(2 * n, &[(1, 2 * n), (n, 2), (n - 1, n)]))
}

pub fn b_dihedral_odd(n: u64) -> Result<RationalFunction> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(out_of_range(format!("n must be odd and at least 3, got {n}")));
    }
    let inner = RationalFunction::one()
        .add(&kt_over(Rational::new((n - 1).into(), 2.into()), n))
        .add(&kt_over(Rational::one(), 2));
    Ok(inner.mul(&geo(1)))
}

/// Dihedral group of order `2n`, `n` even.
pub fn a_dihedral_even(n: u64) -> Result<RationalFunction> {
    if n < 2 || n % 2 == 1 {
        return Err(out_of_range(format!("n must be even and at least 2, got {n}")));
    }
    Ok(weighted(2 * n, &[(2, 2 * n), (n, 4), (n - 2, n)]))
}

pub fn b_dihedral_even(n: u64) -> Result<RationalFunction> {
    if n < 2 || n % 2 == 1 {
        return Err(out_of_range(format!("n must be even and at least 2, got {n}")));
    }
    let inner = RationalFunction::one()
        .add(&kt_over(Rational::new((n - 2).into(), 2.into()), n))
        .add(&kt_over(ri(2), 4));
    Ok(inner.mul(&geo(2)))
}

fn check_pm(p: u64, m: u32, min_m: u32) -> Result<()> {
    require_prime(p)?;
    if m < min_m {
        return Err(out_of_range(format!(
            "order exponent must be at least {min_m}, got {m}"
        )));
    }
    if p.checked_pow(m).is_none_or(|v| v > 1 << 50) {
        return Err(out_of_range(format!("p^m too large: {p}^{m}")));
    }
    Ok(())
}

/// `p`-group of order `p^m` with `|G/Z(G)| = p²`.
pub fn a_central_quotient_p2(p: u64, m: u32) -> Result<RationalFunction> {
    check_pm(p, m, 3)?;
    let g = pow(p, m);
    Ok(weighted(g, &[(pow(p, m - 2), g), (g - pow(p, m - 2), pow(p, m - 1))]))
}

pub fn b_central_quotient_p2(p: u64, m: u32) -> Result<RationalFunction> {
    check_pm(p, m, 3)?;
    let num = RationalFunction::one().sub(&t_times(&RationalFunction::constant(r(pow(p, m - 3)))));
    Ok(num.mul(&geo(pow(p, m - 2))).mul(&geo(pow(p, m - 1))))
}

/// `p`-group of order `p^m` with `|G/Z(G)| = p³`.
pub fn a_central_quotient_p3(p: u64, m: u32, has_abelian_maximal: bool) -> Result<RationalFunction> {
    check_pm(p, m, if has_abelian_maximal { 4 } else { 5 })?;
    let g = pow(p, m);
    let z = pow(p, m - 3);
    Ok(if has_abelian_maximal {
        let big = pow(p, m - 1);
        weighted(g, &[(z, g), (big - z, big), (g - big, pow(p, m - 2))])
    } else {
        weighted(g, &[(z, g), (g - z, pow(p, m - 2))])
    })
}

pub fn b_central_quotient_p3(p: u64, m: u32, has_abelian_maximal: bool) -> Result<RationalFunction> {
    check_pm(p, m, if has_abelian_maximal { 4 } else { 5 })?;
    if has_abelian_maximal {
        let inner = RationalFunction::one()
            .add(&kt_over(r(pow(p, m - 2) - pow(p, m - 4)), pow(p, m - 1)))
            .add(&kt_over(r(pow(p, m - 2) - pow(p, m - 3)), pow(p, m - 2)));
        Ok(inner.mul(&geo(pow(p, m - 3))))
    } else {
        let num = RationalFunction::one().sub(&t_times(&RationalFunction::constant(r(pow(p, m - 5)))));
        Ok(num.mul(&geo(pow(p, m - 2))).mul(&geo(pow(p, m - 3))))
    }
}

/// Non-abelian `p`-group with an abelian maximal subgroup `M`.
pub fn a_abelian_maximal(order_g: u64, order_m: u64, order_z: u64) -> Result<RationalFunction> {
    if order_m == 0 || order_z == 0 || !order_g.is_multiple_of(order_m) {
        return Err(out_of_range(format!("|M| = {order_m} does not divide |G| = {order_g}")));
    }
    let p = order_g / order_m;
    if !is_prime(p) {
        return Err(out_of_range(format!("|G|/|M| = {p} is not prime")));
    }
    let mut g = order_g;
    while g.is_multiple_of(p) {
        g /= p;
    }
    if g != 1 {
        return Err(out_of_range(format!("|G| = {order_g} is not a power of {p}")));
    }
    if !order_m.is_multiple_of(order_z) || order_z >= order_m {
        return Err(out_of_range(format!("|Z| = {order_z} must be a proper divisor of |M|")));
    }
    Ok(weighted(
        order_g,
        &[
            (order_z, order_g),
            (order_g - order_m, p * order_z),
            (order_m - order_z, order_m),
        ],
    ))
}

/// Extraspecial group of order `p^{2n+1}`.
pub fn a_extraspecial(p: u64, n: u32) -> Result<RationalFunction> {
    check_pm(p, 2 * n + 1, 3)?;
    let g = pow(p, 2 * n + 1);
    Ok(weighted(g, &[(p, g), (g - p, pow(p, 2 * n))]))
}

/// `B_{p^{2n+1}}(t) = (1 + (p^{2n} - 1) t B_{p^{2n-1}}(p t))/(1 - p t)`,
/// starting from `B_{p³}(t) = (1 - t)/((1 - p t)(1 - p² t))`.
pub fn b_extraspecial(p: u64, n: u32) -> Result<RationalFunction> {
    check_pm(p, 2 * n + 1, 3)?;
    let base = RationalFunction::one()
        .sub(&t_times(&RationalFunction::one()))
        .mul(&geo(p))
        .mul(&geo(p * p));
    let mut b = base;
    for k in 2..=n {
        let inner = t_times(&b.scale_variable(&r(p))).scale(&r(pow(p, 2 * k) - 1));
        b = RationalFunction::one().add(&inner).mul(&geo(p));
    }
    Ok(b)
}

/// Cases covered by the maximal-class formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MaximalClassCase {
    AbelianMaximal,
    /// `[P₁, P₃] = 1` and no abelian maximal subgroup.
    NoAbelianMaximal,
}

impl FromStr for MaximalClassCase {
    type Err = ClosedFormError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "abelian-maximal" => Ok(MaximalClassCase::AbelianMaximal),
            "no-abelian-maximal" => Ok(MaximalClassCase::NoAbelianMaximal),
            _ => Err(out_of_range(format!("unknown maximal-class case `{s}`"))),
        }
    }
}

fn check_maximal_class(p: u64, m: u32, case: MaximalClassCase) -> Result<()> {
    check_pm(
        p,
        m,
        match case {
            MaximalClassCase::AbelianMaximal => 4,
            MaximalClassCase::NoAbelianMaximal => 5,
        },
    )
}

/// Maximal-class `p`-group of order `p^m` with positive degree of
/// commutativity.
pub fn a_maximal_class(p: u64, m: u32, case: MaximalClassCase) -> Result<RationalFunction> {
    check_maximal_class(p, m, case)?;
    let g = pow(p, m);
    let pm1 = pow(p, m - 1);
    Ok(match case {
        MaximalClassCase::AbelianMaximal => weighted(g, &[(p, g), (g - pm1, p * p), (pm1 - p, pm1)]),
        MaximalClassCase::NoAbelianMaximal => {
            let pm3 = pow(p, m - 3);
            weighted(
                g,
                &[(p, g), (g - pm1, p * p), (pm1 - pm3, pow(p, m - 2)), (pm3 - p, pm1)],
            )
        }
    })
}

pub fn b_maximal_class(p: u64, m: u32, case: MaximalClassCase) -> Result<RationalFunction> {
    check_maximal_class(p, m, case)?;
    let tail = kt_over(r(p * p - p), p * p);
    let inner = match case {
        MaximalClassCase::AbelianMaximal => RationalFunction::one()
            .add(&kt_over(r(pow(p, m - 2) - 1), pow(p, m - 1)))
            .add(&tail),
        MaximalClassCase::NoAbelianMaximal => {
            let pm4 = pow(p, m - 4);
            let first = t_times(
                &RationalFunction::one()
                    .sub(&t_times(&RationalFunction::constant(r(pm4))))
                    .mul(&geo(pow(p, m - 2)))
                    .mul(&geo(pow(p, m - 3))),
            )
            .scale(&r(pm4 - 1));
            RationalFunction::one()
                .add(&first)
                .add(&kt_over(r(pow(p, m - 3) - pow(p, m - 5)), pow(p, m - 2)))
                .add(&tail)
        }
    };
    Ok(inner.mul(&geo(p)))
}

/// `|G| A_G = 1/(1-|G|t) + (|N| A_N - 1/(1-|N|t)) + |N| (|H| A_H - 1/(1-|H|t))`.
pub fn a_frobenius(
    a_n: &RationalFunction,
    order_n: u64,
    a_h: &RationalFunction,
    order_h: u64,
) -> Result<RationalFunction> {
    if order_h < 2 || order_n < 2 {
        return Err(out_of_range("kernel and complement must be nontrivial".into()));
    }
    let g = order_n * order_h;
    let total = geo(g)
        .add(&a_n.scale(&r(order_n)).sub(&geo(order_n)))
        .add(&a_h.scale(&r(order_h)).sub(&geo(order_h)).scale(&r(order_n)));
    Ok(total.scale(&Rational::new(1.into(), g.into())))
}

/// `(1-t) B_G = 1 + ((1-t) B_N - 1)/|H| + ((1-t) B_H - 1)`.
pub fn b_frobenius(b_n: &RationalFunction, b_h: &RationalFunction, order_h: u64) -> Result<RationalFunction> {
    if order_h < 2 {
        return Err(out_of_range("complement must be nontrivial".into()));
    }
    let one_minus_t = RationalFunction::from_polynomial(crate::ratfun::Polynomial::from_ints(&[1, -1]));
    let one = RationalFunction::one();
    let rhs = one
        .add(
            &one_minus_t
                .mul(b_n)
                .sub(&one)
                .scale(&Rational::new(1.into(), order_h.into())),
        )
        .add(&one_minus_t.mul(b_h).sub(&one));
    Ok(rhs.mul(&geo(1)))
}

/// Frobenius group with abelian kernel of order `n` and abelian complement
/// of order `h`.
pub fn frobenius_abelian(order_n: u64, order_h: u64) -> Result<(RationalFunction, RationalFunction)> {
    let a = a_frobenius(&geo(order_n), order_n, &geo(order_h), order_h)?;
    let b = b_frobenius(&geo(order_n), &geo(order_h), order_h)?;
    Ok((a, b))
}

/// Isoclinism families of rank at most 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "String", into = "String"))]
pub enum Family {
    Abelian,
    Phi2,
    Phi3,
    Phi4,
    Phi5,
    Phi6,
    Phi7,
    Phi8,
    Phi9,
    Phi10,
    Gamma2,
    Gamma3,
    Gamma4,
    Gamma5,
    Gamma6,
    Gamma7,
    Gamma8,
}

impl Family {
    pub const ALL: [Family; 17] = [
        Family::Abelian,
        Family::Phi2,
        Family::Phi3,
        Family::Phi4,
        Family::Phi5,
        Family::Phi6,
        Family::Phi7,
        Family::Phi8,
        Family::Phi9,
        Family::Phi10,
        Family::Gamma2,
        Family::Gamma3,
        Family::Gamma4,
        Family::Gamma5,
        Family::Gamma6,
        Family::Gamma7,
        Family::Gamma8,
    ];

    pub fn is_two_group_family(self) -> bool {
        self >= Family::Gamma2
    }

    pub fn is_odd_family(self) -> bool {
        self != Family::Abelian && !self.is_two_group_family()
    }

    /// Exponent `r` with stem groups of order `p^r`.
    pub fn rank(self) -> u32 {
        use Family::*;
        match self {
            Abelian => 0,
            Phi2 | Gamma2 => 3,
            Phi3 | Gamma3 => 4,
            _ => 5,
        }
    }

    /// The families valid at prime `p`, in table order.
    pub fn for_prime(p: u64) -> Vec<Family> {
        Family::ALL
            .iter()
            .copied()
            .filter(|f| match f {
                Family::Abelian => true,
                f if f.is_two_group_family() => p == 2,
                _ => p != 2,
            })
            .collect()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (*self).into();
        f.write_str(&s)
    }
}

impl From<Family> for String {
    fn from(f: Family) -> String {
        use Family::*;
        match f {
            Abelian => "Abelian".into(),
            Phi2 | Phi3 | Phi4 | Phi5 | Phi6 | Phi7 | Phi8 | Phi9 | Phi10 => {
                format!("Phi{}", f as u32 - Phi2 as u32 + 2)
            }
            _ => format!("Gamma{}", f as u32 - Gamma2 as u32 + 2),
        }
    }
}

impl FromStr for Family {
    type Err = ClosedFormError;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_lowercase();
        if lower == "abelian" {
            return Ok(Family::Abelian);
        }
        let (base, rest) = if let Some(r) = lower.strip_prefix("phi").or_else(|| lower.strip_prefix('φ')) {
            (Family::Phi2, r)
        } else if let Some(r) = lower.strip_prefix("gamma").or_else(|| lower.strip_prefix('γ')) {
            (Family::Gamma2, r)
        } else {
            return Err(out_of_range(format!("unknown family `{s}`")));
        };
        let k: u32 = rest
            .parse()
            .map_err(|_| out_of_range(format!("unknown family `{s}`")))?;
        let max = if base == Family::Phi2 { 10 } else { 8 };
        if !(2..=max).contains(&k) {
            return Err(out_of_range(format!("unknown family `{s}`")));
        }
        Ok(Family::ALL[base as usize + (k - 2) as usize])
    }
}

impl TryFrom<String> for Family {
    type Error = ClosedFormError;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// A row of the normalized-invariant table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyFormula {
    pub family: Family,
    pub p: u64,
    /// `(residue, m)` pairs of `A_G(t/|G|) = Σ residue/(1 - m t)`.
    pub a_terms: Vec<(Rational, Rational)>,
    pub b_terms: Vec<(Rational, Rational)>,
    pub a: RationalFunction,
    pub b: RationalFunction,
}

impl FamilyFormula {
    pub fn render_a(&self) -> String {
        render_terms(&self.a_terms)
    }

    pub fn render_b(&self) -> String {
        render_terms(&self.b_terms)
    }
}

type Terms = Vec<(Rational, Rational)>;

/// Normalized `A` and `B` of an isoclinism family at prime `p`.
pub fn family_table(family: Family, p: u64) -> Result<FamilyFormula> {
    use Family::*;
    require_prime(p)?;
    if family.is_two_group_family() && p != 2 {
        return Err(out_of_range(format!("{family} is a family of 2-groups")));
    }
    if family.is_odd_family() && p == 2 {
        return Err(out_of_range(format!("{family} needs an odd prime")));
    }
    let q = Rational::new(1.into(), p.into());
    let q2 = &q * &q;
    let q3 = &q2 * &q;
    let q4 = &q3 * &q;
    let one = Rational::one();
    let pr = r(p);
    let (a_terms, b_terms): (Terms, Terms) = match family {
        Abelian => (vec1(&one, &one), vec1(&one, &one)),
        Phi2 | Gamma2 => (
            vec![(&one - &q2, q.clone()), (q2.clone(), one.clone())],
            vec![(-q.clone(), q2.clone()), (&one + &q, q.clone())],
        ),
        Phi3 | Phi4 | Gamma3 | Gamma4 => (
            vec![
                (&one - &q, q2.clone()),
                (&q - &q3, q.clone()),
                (q3.clone(), one.clone()),
            ],
            vec![
                (-q.clone(), q3.clone()),
                (one.clone(), q2.clone()),
                (q.clone(), q.clone()),
            ],
        ),
        Phi5 | Gamma5 => {
            let s = &pr + &one + &q + &q2;
            (
                vec![(&one - &q4, q.clone()), (q4.clone(), one.clone())],
                vec![(one.clone(), q4.clone()), (-s.clone(), q3.clone()), (s, q2.clone())],
            )
        }
        Phi6 => (
            vec![(&one - &q3, q2.clone()), (q3.clone(), one.clone())],
            vec![(-(&q + &q2), q3.clone()), (&one + &q + &q2, q2.clone())],
        ),
        Phi7 | Phi8 | Gamma6 | Gamma7 => (
            vec![
                (&one - &q2, q2.clone()),
                (&q2 - &q4, q.clone()),
                (q4.clone(), one.clone()),
            ],
            vec![(-(&q + &q2), q3.clone()), (&one + &q + &q2, q2.clone())],
        ),
        Phi9 | Gamma8 => (
            vec![
                (&one - &q, q3.clone()),
                (&q - &q4, q.clone()),
                (q4.clone(), one.clone()),
            ],
            vec![
                (-q.clone(), q4.clone()),
                (one.clone(), q3.clone()),
                (q.clone(), q.clone()),
            ],
        ),
        Phi10 => (
            vec![
                (&one - &q, q3.clone()),
                (&q - &q3, q2.clone()),
                (&q3 - &q4, q.clone()),
                (q4.clone(), one.clone()),
            ],
            vec![
                (-q.clone(), q4.clone()),
                (&one - &q2, q3.clone()),
                (&q + &q2, q2.clone()),
            ],
        ),
    };
    let build = |terms: &[(Rational, Rational)]| {
        terms.iter().fold(RationalFunction::zero(), |acc, (c, m)| {
            acc.add(&RationalFunction::pole(c.clone(), m.clone()))
        })
    };
    let (a, b) = (build(&a_terms), build(&b_terms));
    debug_assert!(a.eval(&Rational::zero()) == Some(one.clone()));
    Ok(FamilyFormula {
        family,
        p,
        a_terms,
        b_terms,
        a,
        b,
    })
}

fn vec1(c: &Rational, m: &Rational) -> Vec<(Rational, Rational)> {
    alloc::vec![(c.clone(), m.clone())]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::q;
    use alloc::string::ToString;

    #[test]
    fn dihedral_odd_n3() {
        let a = a_dihedral_odd(3).unwrap();
        let expected: RationalFunction = "(1/6)(1/(1-6t)+3/(1-2t)+2/(1-3t))".parse().unwrap();
        assert_eq!(a, expected);
        let b = b_dihedral_odd(3).unwrap();
        assert_eq!(b.series_coeffs(4), alloc::vec![q(1, 1), q(3, 1), q(8, 1), q(21, 1)]);
        assert!(a_dihedral_odd(1).is_err());
    }

    #[test]
    fn klein_four_from_even_formula() {
        assert_eq!(a_dihedral_even(2).unwrap(), geo(4));
        assert_eq!(b_dihedral_even(2).unwrap(), geo(4));
    }

    #[test]
    fn extraspecial_small_cases() {
        let b8: RationalFunction = "(1-t)/((1-2t)(1-4t))".parse().unwrap();
        assert_eq!(b_extraspecial(2, 1).unwrap(), b8);
        let b27: RationalFunction = "(1-t)/((1-3t)(1-9t))".parse().unwrap();
        assert_eq!(b_extraspecial(3, 1).unwrap(), b27);
        assert_eq!(b_central_quotient_p2(2, 3).unwrap(), b8);
    }

    #[test]
    fn parameter_checks() {
        assert!(a_central_quotient_p2(2, 2).is_err());
        assert!(a_abelian_maximal(16, 4, 2).is_err());
        assert!(b_frobenius(&geo(3), &geo(1), 1).is_err());
        assert!(family_table(Family::Gamma3, 3).is_err());
        assert!(family_table(Family::Phi3, 4).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert_eq!("Φ5".parse::<Family>().unwrap(), Family::Phi5);
        assert!("Phi11".parse::<Family>().is_err());
    }
}
