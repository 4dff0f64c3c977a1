//! Exact rational functions in one variable `t` whose denominators do not
//! vanish at `t = 0`, and their partial fractions over poles `1/(1 - m t)`.

mod parse;
mod poly;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::Rational;
pub use parse::ParseError;
pub use poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatFunError {
    #[error("denominator vanishes at t = 0")]
    PoleAtZero,
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("numerator degree is not below denominator degree")]
    NotProper,
    #[error("denominator is not a product of distinct factors 1 - m t with positive integer m")]
    NotSimpleIntegerPoles,
}

/// A rational function `num/den` in lowest terms with `den(0) = 1`.
///
/// The canonical form is unique, so `==` is equality of functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, RatFunError> {
        if den.is_zero() {
            return Err(RatFunError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let c = den.coeff(0);
        if c.is_zero() {
            return Err(RatFunError::PoleAtZero);
        }
        let inv = c.recip();
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// `1/(1 - m t)`.
    pub fn geometric(m: impl Into<BigInt>) -> Self {
        Self::simple_pole(Rational::one(), m)
    }

    /// `c/(1 - m t)`.
    pub fn simple_pole(c: Rational, m: impl Into<BigInt>) -> Self {
        let m = Rational::from_integer(m.into());
        if m.is_zero() || c.is_zero() {
            return Self::constant(c);
        }
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one_minus(m),
        }
    }

    /// `c/(1 - m t)` for rational `m`.
    pub fn pole(c: Rational, m: Rational) -> Self {
        if m.is_zero() || c.is_zero() {
            return Self::constant(c);
        }
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one_minus(m),
        }
    }

    /// `Σ c/(1 - m t)`, built over a common denominator.
    pub fn from_terms<I: IntoIterator<Item = (Rational, u64)>>(terms: I) -> Self {
        let mut acc = Self::zero();
        for (c, m) in terms {
            acc = acc.add(&Self::simple_pole(c, m));
        }
        acc
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        (!d.is_zero()).then(|| self.num.eval(t) / d)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).expect("den(0) = 1");
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::new(num, self.den.mul(&other.den)).expect("den(0) = 1")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("den(0) = 1")
    }

    pub fn div(&self, other: &Self) -> Result<Self, RatFunError> {
        if other.is_zero() {
            return Err(RatFunError::DivisionByZero);
        }
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `R(c t)`.
    pub fn scale_variable(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::constant(self.num.coeff(0));
        }
        RationalFunction {
            num: self.num.scale_variable(c),
            den: self.den.scale_variable(c),
        }
    }

    /// First `n` Taylor coefficients at `t = 0`.
    pub fn series_coeffs(&self, n: usize) -> Vec<Rational> {
        let d = self.den.coeffs();
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut a = self.num.coeff(k);
            for (j, dj) in d.iter().enumerate().skip(1).take(k) {
                a -= dj * &out[k - j];
            }
            out.push(a);
        }
        out
    }

    /// Partial fractions, trying the divisors of the denominator's leading
    /// coefficient as pole parameters.
    pub fn to_partial_fractions(&self) -> Result<PartialFraction, RatFunError> {
        self.partial_fractions_impl(None)
    }

    /// Partial fractions with pole parameters restricted to `candidates`.
    pub fn to_partial_fractions_with(&self, candidates: &[u64]) -> Result<PartialFraction, RatFunError> {
        self.partial_fractions_impl(Some(candidates))
    }

    fn partial_fractions_impl(&self, candidates: Option<&[u64]>) -> Result<PartialFraction, RatFunError> {
        let deg_d = self.den.degree().unwrap_or(0);
        if self.is_zero() {
            return Ok(PartialFraction { terms: Vec::new() });
        }
        if self.num.degree().unwrap_or(0) >= deg_d {
            return Err(RatFunError::NotProper);
        }
        // reversed denominator is monic: Π (x - m_i)
        let mut rev = Polynomial::new(self.den.coeffs().iter().rev().cloned().collect());
        let constant = rev.coeff(0);
        if !constant.is_integer() {
            return Err(RatFunError::NotSimpleIntegerPoles);
        }
        let owned;
        let cands: &[u64] = match candidates {
            Some(c) => c,
            None => {
                owned = divisors_of(&constant.to_integer().abs()).ok_or(RatFunError::NotSimpleIntegerPoles)?;
                &owned
            }
        };
        let mut poles = Vec::new();
        for &m in cands {
            if rev.degree() == Some(0) {
                break;
            }
            if m == 0 {
                continue;
            }
            let x = Rational::from_integer(m.into());
            if rev.eval(&x).is_zero() {
                let lin = Polynomial::new(alloc::vec![-x.clone(), Rational::one()]);
                rev = rev.div_rem(&lin).0;
                if rev.eval(&x).is_zero() {
                    return Err(RatFunError::NotSimpleIntegerPoles);
                }
                poles.push(m);
            }
        }
        if rev.degree() != Some(0) {
            return Err(RatFunError::NotSimpleIntegerPoles);
        }
        let mut terms = Vec::with_capacity(poles.len());
        for (i, &mi) in poles.iter().enumerate() {
            let mi_r = Rational::from_integer(mi.into());
            let at = mi_r.recip();
            let mut denom = Rational::one();
            for (j, &mj) in poles.iter().enumerate() {
                if j != i {
                    denom *= Rational::one() - Rational::from_integer(mj.into()) / &mi_r;
                }
            }
            terms.push((self.num.eval(&at) / denom, mi));
        }
        Ok(PartialFraction::new(terms))
    }
}

fn divisors_of(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.to_u64()?;
    if n == 0 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    divisors_of(&BigInt::from(n)).unwrap_or_default()
}

/// `Σ c_i/(1 - m_i t)` with distinct positive `m_i`, sorted by `m`
/// descending, no zero residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PartialFraction {
    terms: Vec<(Rational, u64)>,
}

impl PartialFraction {
    /// Merges equal poles and drops zero residues.
    pub fn new<I: IntoIterator<Item = (Rational, u64)>>(terms: I) -> Self {
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (c, m) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        PartialFraction {
            terms: acc
                .into_iter()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (c, m))
                .collect(),
        }
    }

    /// `(residue, m)` pairs, `m` descending.
    pub fn terms(&self) -> &[(Rational, u64)] {
        &self.terms
    }

    pub fn residue(&self, m: u64) -> Rational {
        self.terms
            .iter()
            .find(|(_, k)| *k == m)
            .map(|(c, _)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Largest pole parameter.
    pub fn dominant(&self) -> Option<(Rational, u64)> {
        self.terms.first().cloned()
    }

    pub fn residue_sum(&self) -> Rational {
        self.terms.iter().map(|(c, _)| c).sum()
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        RationalFunction::from_terms(self.terms.iter().cloned())
    }
}

fn fmt_coeff(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "({}/{})", c.numer(), c.denom())
    }
}

impl fmt::Display for PartialFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            fmt_coeff(f, &mag)?;
            if *m == 1 {
                f.write_str("/(1-t)")?;
            } else {
                write!(f, "/(1-{m}t)")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for RationalFunction {
    /// Integer-coefficient quotient, e.g. `(1 - t)/(1 - 6t + 8t^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.num.denominator_lcm().lcm(&self.den.denominator_lcm());
        let mut num = self.num.integer_coeffs(&k);
        let mut den = self.den.integer_coeffs(&k);
        let content = num.iter().chain(&den).fold(BigInt::zero(), |g, c| g.gcd(c));
        if !content.is_zero() && !content.is_one() {
            num.iter_mut().for_each(|c| *c /= &content);
            den.iter_mut().for_each(|c| *c /= &content);
        }
        let monomial = |c: &[BigInt]| c.iter().filter(|x| !x.is_zero()).count() <= 1;
        let den_is_one = den.len() == 1 && den[0].is_one();
        let wrap_num = !den_is_one && !monomial(&num);
        if wrap_num {
            f.write_str("(")?;
        }
        poly::fmt_int_poly(f, &num)?;
        if wrap_num {
            f.write_str(")")?;
        }
        if !den_is_one {
            f.write_str("/")?;
            let wrap = !monomial(&den);
            if wrap {
                f.write_str("(")?;
            }
            poly::fmt_int_poly(f, &den)?;
            if wrap {
                f.write_str(")")?;
            }
        }
        Ok(())
    }
}

/// Renders `Σ c/(1 - m t)` with rational `m`, e.g. `(3/4)/(1-(1/2)t) + (1/4)/(1-t)`.
pub fn render_terms(terms: &[(Rational, Rational)]) -> alloc::string::String {
    use core::fmt::Write;
    let mut out = alloc::string::String::new();
    if terms.is_empty() {
        out.push('0');
    }
    for (i, (c, m)) in terms.iter().enumerate() {
        let sign = c.is_negative();
        out.push_str(match (i, sign) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let mag = c.abs();
        if mag.is_integer() {
            let _ = write!(out, "{}", mag.numer());
        } else {
            let _ = write!(out, "({}/{})", mag.numer(), mag.denom());
        }
        if m.is_one() {
            out.push_str("/(1-t)");
        } else if m.is_integer() {
            let _ = write!(out, "/(1-{}t)", m.numer());
        } else {
            let _ = write!(out, "/(1-({}/{})t)", m.numer(), m.denom());
        }
    }
    out
}

impl PartialFraction {
    /// Terms of `R(c t)`: each pole parameter is multiplied by `c`.
    pub fn scaled_terms(&self, c: &Rational) -> Vec<(Rational, Rational)> {
        self.terms
            .iter()
            .map(|(r, m)| (r.clone(), Rational::from_integer((*m).into()) * c))
            .collect()
    }
}

impl core::str::FromStr for RationalFunction {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse(s)
    }
}

/// Shorthand for an exact rational `n/d`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
