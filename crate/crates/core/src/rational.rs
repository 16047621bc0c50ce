//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision rational, always in lowest terms with a
//! positive denominator. The canonical text form is `p/q` with `/q`
//! omitted when the denominator is 1 (`"3"`, `"-1/2"`); `Display` and
//! `FromStr` of the underlying type already produce and accept exactly
//! this form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// `n!` as an integer.
pub fn factorial_int(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// `n!` as a rational, so it composes with series coefficients directly.
pub fn factorial(n: u64) -> Rat {
    Rat::from_integer(factorial_int(n))
}

/// Exact integer power.
pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Parse the canonical `p` or `p/q` form.
pub fn parse_rat(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| Error::Input(format!("bad rational '{s}': {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn canonical_text_form() {
        assert_eq!(rat(3).to_string(), "3");
        assert_eq!(ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(ratio(2, 4).to_string(), "1/2");
        assert_eq!(ratio(1, -2).to_string(), "-1/2");
        assert_eq!(Rat::zero().to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "7", "-7", "3/5", "-22/7"] {
            assert_eq!(parse_rat(s).unwrap().to_string(), s);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), rat(1));
        assert_eq!(factorial(5), rat(120));
        assert_eq!(factorial_int(12), Int::from(479001600u64));
    }
}
