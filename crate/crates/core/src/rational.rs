//! Exact rationals for approximation factors.
//!
//! Small user-facing values (`ε`, `c₀`, hub rates) are `Ratio<u64>`; products
//! such as `(1+ε)^k` are carried as [`BigRational`] so that precondition
//! bookkeeping never drifts.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Ratio64 = Ratio<u64>;

/// Parses `"3"`, `"1/2"` or `"0.25"` into an exact rational.
pub fn parse_ratio(s: &str) -> Result<Ratio64> {
    let bad = || Error::InvalidParameter(format!("not a nonnegative rational: {s:?}"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: u64 = num.trim().parse().map_err(|_| bad())?;
        let den: u64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let den = 10u64.pow(frac.len() as u32);
        let frac: u64 = frac.parse().map_err(|_| bad())?;
        let num = int
            .checked_mul(den)
            .and_then(|x| x.checked_add(frac))
            .ok_or_else(bad)?;
        return Ok(Ratio::new(num, den));
    }
    let int: u64 = s.parse().map_err(|_| bad())?;
    Ok(Ratio::from_integer(int))
}

pub fn to_big(r: Ratio64) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

pub fn to_f64(r: Ratio64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// `(1 + eps)^k`.
pub fn one_plus_pow(eps: Ratio64, k: u32) -> BigRational {
    let base = BigRational::one() + to_big(eps);
    num_traits::pow(base, k as usize)
}

/// Exact test of `lhs <= alpha * rhs` for nonnegative integers.
pub fn le_scaled(lhs: u64, alpha: &BigRational, rhs: u64) -> bool {
    // lhs * den <= num * rhs
    BigInt::from(lhs) * alpha.denom() <= alpha.numer() * BigInt::from(rhs)
}

pub fn big_to_f64(r: &BigRational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if d != 0.0 => n / d,
        _ => f64::INFINITY,
    }
}

/// A measured stretch: the worst ratio `dist^{(h)}_{G∪H}(u,v) / dist_G(u,v)`
/// over reachable pairs, or unbounded when some reachable pair has no path
/// within the hop budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stretch {
    Finite(Ratio64),
    Unbounded,
}

impl Stretch {
    pub fn one() -> Self {
        Stretch::Finite(Ratio::one())
    }

    /// Maximum of two stretches.
    pub fn max(self, other: Stretch) -> Stretch {
        match (self, other) {
            (Stretch::Unbounded, _) | (_, Stretch::Unbounded) => Stretch::Unbounded,
            (Stretch::Finite(a), Stretch::Finite(b)) => {
                // compare a.n/a.d vs b.n/b.d without overflow
                let lhs = *a.numer() as u128 * *b.denom() as u128;
                let rhs = *b.numer() as u128 * *a.denom() as u128;
                if lhs >= rhs {
                    Stretch::Finite(a)
                } else {
                    Stretch::Finite(b)
                }
            }
        }
    }

    pub fn is_at_most(&self, alpha: &BigRational) -> bool {
        match self {
            Stretch::Unbounded => false,
            Stretch::Finite(r) => {
                BigInt::from(*r.numer()) * alpha.denom() <= alpha.numer() * BigInt::from(*r.denom())
            }
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Stretch::Finite(r) if r.is_one())
    }
}

impl Default for Stretch {
    fn default() -> Self {
        Stretch::one()
    }
}

impl fmt::Display for Stretch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stretch::Unbounded => f.write_str("inf"),
            Stretch::Finite(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Stretch::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl Serialize for Stretch {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Formats an exact rational as `p/q` (or `p` when integral).
pub fn format_big(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_ratio(r: Ratio64) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_positive(r: Ratio64) -> bool {
    !r.is_zero()
}
