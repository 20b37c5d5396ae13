//! The coefficient domain shared by the cumulant and series code.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed};

use crate::error::{Error, Result};

/// A field-like scalar. Every formula in this crate is written against this
/// trait; exact results come from [`BigRational`], floats are accepted for
/// quick numerical experiments.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive {
    /// Square root inside the scalar domain, `None` when it does not exist
    /// there (negative input, or a rational that is not a perfect square).
    fn exact_sqrt(&self) -> Option<Self>;

    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("scalar type cannot represent a count")
    }

    fn pow2(exp: u32) -> Self {
        let two = Self::one() + Self::one();
        (0..exp).fold(Self::one(), |acc, _| acc * two.clone())
    }
}

fn bigint_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Scalar for BigRational {
    fn exact_sqrt(&self) -> Option<Self> {
        // Ratio is always reduced, so numerator and denominator must both be squares.
        let num = bigint_sqrt(self.numer())?;
        let den = bigint_sqrt(self.denom())?;
        Some(BigRational::new(num, den))
    }
}

impl Scalar for f64 {
    fn exact_sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }
}

impl Scalar for f32 {
    fn exact_sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }
}

/// Parses `p/q` or `p` (optionally signed) into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parsed: BigRational = s
        .parse()
        .map_err(|_| Error::Parse(format!("`{s}` is not a rational of the form p/q")))?;
    Ok(parsed)
}

/// Formats a rational as `p/q`, dropping `/1`.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
