//! Exact rational arithmetic helpers.
//!
//! Densities, thresholds and expected counts are all exact
//! [`BigRational`](num_rational::BigRational) values. Reports serialize them
//! as decimal strings in `{num, den}` pairs so no precision is lost on the
//! wire regardless of magnitude.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_counts(num: u128, den: u128) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: u128) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `x^e` for a non-negative exponent.
pub fn rat_pow(x: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Smallest `u64` greater than or equal to the (non-negative) rational.
pub fn ceil_to_u64(x: &Rat) -> u64 {
    assert!(!x.is_negative(), "ceil_to_u64 expects a non-negative value");
    let q = x.ceil();
    let (digits_sign, digits) = q.to_integer().to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => {
            debug_assert!(digits_sign != num_bigint::Sign::Minus);
            digits[0]
        }
        _ => panic!("ceiling does not fit in u64"),
    }
}

/// Wire form of a rational: numerator and denominator as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatJson {
    pub num: String,
    pub den: String,
}

impl RatJson {
    pub fn from_rat(r: &Rat) -> Self {
        Self {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }

    pub fn to_rat(&self) -> Option<Rat> {
        let num: BigInt = self.num.parse().ok()?;
        let den: BigInt = self.den.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Rat::new(num, den))
    }
}
