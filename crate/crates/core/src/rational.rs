//! Exact rationals.
//!
//! All coefficients, evaluation points and exponents `λ` are [`Rat`] values,
//! which are arbitrary-precision fractions kept in lowest terms with a
//! positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"-7"` or `"3/-4"` into a rational in lowest terms.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

/// `"p/q"` or `"p"` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact floor as a machine integer.
pub fn floor_i64(r: &Rat) -> i64 {
    let f = r.numer().div_floor(r.denom());
    f.to_i64().expect("floor out of i64 range")
}

pub fn ceil_i64(r: &Rat) -> i64 {
    -floor_i64(&-r.clone())
}

pub fn is_nonnegative(r: &Rat) -> bool {
    !r.is_negative()
}
