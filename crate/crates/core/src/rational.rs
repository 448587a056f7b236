//! Exact rational and complex-rational scalars.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`. Decimal points and exponents are rejected so that
/// only exactly representable values enter the system.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::input(format!("invalid rational literal {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::input(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(num, den))
}

/// Parses a comma separated list of rationals.
pub fn parse_q_vec(s: &str) -> Result<Vec<Q>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_q).collect()
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise with `q > 0`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `x ∈ (1/n)ℤ`.
pub fn in_frac_lattice(x: &Q, n: u64) -> bool {
    (x * Q::from_integer(BigInt::from(n))).is_integer()
}

pub fn lcm_denominators<'a>(xs: impl IntoIterator<Item = &'a Q>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_int(a: &[i64], b: &[Q]) -> Q {
    a.iter()
        .zip(b)
        .filter(|(c, _)| **c != 0)
        .fold(Q::zero(), |acc, (c, y)| acc + q(*c) * y)
}

/// A complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplexQ {
    pub re: Q,
    pub im: Q,
}

impl ComplexQ {
    pub fn new(re: Q, im: Q) -> Self {
        ComplexQ { re, im }
    }

    pub fn real(re: Q) -> Self {
        ComplexQ { re, im: Q::zero() }
    }

    /// Membership in `(1/n)ℤ`: the imaginary part must vanish.
    pub fn in_frac_lattice(&self, n: u64) -> bool {
        self.im.is_zero() && in_frac_lattice(&self.re, n)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl fmt::Display for ComplexQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", fmt_q(&self.re))
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", fmt_q(&self.re), fmt_q(&-self.im.clone()))
        } else {
            write!(f, "{}+{}i", fmt_q(&self.re), fmt_q(&self.im))
        }
    }
}
