//! The scalar type: arbitrary-precision rationals.
//!
//! Every coordinate and every slope in this crate is a [`Rational`]. The
//! representation is always reduced (gcd of numerator and denominator is 1,
//! denominator positive), so structural equality coincides with numeric
//! equality and the derived total order agrees with the order of the reals.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Exact fraction with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Builds the rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn is_power_of_two(n: &BigUint) -> bool {
    if n.is_zero() {
        return false;
    }
    let tz = n.trailing_zeros().unwrap_or(0);
    (n >> tz).is_one()
}

/// True when `r` is a dyadic rational, i.e. of the form `a / 2^b`.
pub fn is_dyadic(r: &Rational) -> bool {
    is_power_of_two(r.denom().magnitude())
}

/// True when `r` is an integral power of 2 (positive or negative exponent).
///
/// In reduced form such a number has one of numerator and denominator equal
/// to 1 and the other a power of two, so it suffices to check that both are
/// powers of two and the sign is positive.
pub fn is_power_of_two_ratio(r: &Rational) -> bool {
    r.is_positive()
        && is_power_of_two(r.numer().magnitude())
        && is_power_of_two(r.denom().magnitude())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_representation() {
        let r = rat(2, 4);
        assert_eq!(r, rat(1, 2));
        assert_eq!(r.numer(), &BigInt::from(1));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn dyadic_detection() {
        assert!(is_dyadic(&rat(3, 8)));
        assert!(is_dyadic(&rat_int(0)));
        assert!(is_dyadic(&rat_int(1)));
        assert!(is_dyadic(&rat(-5, 16)));
        assert!(!is_dyadic(&rat(1, 3)));
        assert!(!is_dyadic(&rat(5, 6)));
    }

    #[test]
    fn power_of_two_ratio_detection() {
        assert!(is_power_of_two_ratio(&rat_int(1)));
        assert!(is_power_of_two_ratio(&rat_int(4)));
        assert!(is_power_of_two_ratio(&rat(1, 8)));
        assert!(!is_power_of_two_ratio(&rat(3, 2)));
        assert!(!is_power_of_two_ratio(&rat(2, 3)));
        assert!(!is_power_of_two_ratio(&rat(-2, 1)));
        assert!(!is_power_of_two_ratio(&rat_int(0)));
    }
}
