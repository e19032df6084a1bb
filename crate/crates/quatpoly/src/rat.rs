//! Exact rational scalars.
//!
//! [`Rat`] is an arbitrary-precision rational, always held in lowest terms
//! with a positive denominator; `0` is represented as `0/1`.  Both invariants
//! are maintained by the underlying `Ratio` type, so equality and hashing are
//! structural.

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational number in canonical form.
pub type Rat = BigRational;

/// `n/d` as a [`Rat`].
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed, Zero};

    #[test]
    fn canonical_form() {
        // 2/4 = 1/2, 3/-6 = -1/2, 0/5 = 0/1.
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert!(rat(3, -6).denom().is_positive());
        assert_eq!(rat(0, 5), rat_int(0));
        assert!(rat(0, 5).is_zero());
        assert!(rat(0, 5).denom().is_one());
    }

    #[test]
    fn arithmetic_stays_canonical() {
        // 1/6 + 1/3 = 1/2.
        let s = rat(1, 6) + rat(1, 3);
        assert_eq!(s, rat(1, 2));
        assert_eq!(s.denom(), rat(1, 2).denom());
    }

    #[test]
    #[should_panic]
    fn zero_denominator_panics() {
        let _ = rat(1, 0);
    }
}
