//! Exact rational coefficients.
//!
//! `BigRational` keeps values in lowest terms with a positive denominator,
//! which is exactly the normal form the engine relies on for bit-exact
//! comparisons and deterministic printing.

use num::BigRational;
pub use num::traits::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(num.into(), den.into())
}

/// (-1)^e for an integer exponent, taken mod 2.
pub fn sign_pow(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(ratio(1, -2), ratio(-1, 2));
        assert_eq!(ratio(-3, -6), ratio(1, 2));
    }

    #[test]
    fn sign_pow_parity() {
        assert_eq!(sign_pow(0), int(1));
        assert_eq!(sign_pow(1), int(-1));
        assert_eq!(sign_pow(-1), int(-1));
        assert_eq!(sign_pow(-4), int(1));
        assert_eq!(sign_pow(7), int(-1));
    }
}
