//! Exact arithmetic: rationals, univariate polynomials over `Q`, and the
//! rational-function field `Q(n)`.
//!
//! All scalar computation in the crate bottoms out here. There is no floating
//! point anywhere; coefficients are arbitrary-precision rationals and rational
//! functions are kept in a canonical reduced form (coprime numerator and
//! denominator, monic denominator) so that equality is representational.

mod polynomial;
mod rational_function;

pub use polynomial::Polynomial;
pub use rational_function::RationalFunction;

use num_bigint::BigInt;

/// Arbitrary-precision rational number, always reduced with positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Errors from exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    /// Division by the zero polynomial or zero rational function.
    #[error("division by zero")]
    DivisionByZero,
    /// Evaluation of a rational function at a root of its denominator.
    #[error("evaluation at a pole")]
    Pole,
    /// A malformed textual or structured representation.
    #[error("invalid rational literal: {0}")]
    BadLiteral(String),
}

/// `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer `p` as a [`Rational`].
pub fn rat_int(p: i64) -> Rational {
    Rational::from(BigInt::from(p))
}

/// Parses `"p"` or `"p/q"` into a [`Rational`].
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let bad = || ArithError::BadLiteral(s.to_string());
    match s.split_once('/') {
        None => {
            let p: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(Rational::from(p))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(ArithError::DivisionByZero);
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Formats a [`Rational`] as `"p"` or `"p/q"`.
pub fn format_rational(q: &Rational) -> String {
    use num_traits::One;
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_and_format_round_trip() {
        for s in ["0", "-3", "1/2", "-7/3"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(format_rational(&q), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(matches!(
            parse_rational("1/0"),
            Err(ArithError::DivisionByZero)
        ));
        assert!(parse_rational("n+1").is_err());
    }
}
