//! The field `Q(n)` of rational functions in one indeterminate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{parse_rational, ArithError, Polynomial, Rational};

/// Quotient of two polynomials in canonical form: numerator and denominator
/// coprime, denominator monic and nonzero. Zero is `0/1`. Canonical form makes
/// equality and hashing representational.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Canonicalizes `raw_num / raw_den`. Equal fractions normalize to
    /// identical representations.
    pub fn new(raw_num: Polynomial, raw_den: Polynomial) -> Result<Self, ArithError> {
        if raw_den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if raw_num.is_zero() {
            return Ok(RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = raw_num.gcd(&raw_den);
        let (num, r1) = raw_num.div_rem(&g).expect("gcd nonzero");
        let (den, r2) = raw_den.div_rem(&g).expect("gcd nonzero");
        debug_assert!(r1.is_zero() && r2.is_zero());
        let lead = den.leading();
        Ok(RationalFunction {
            num: num.scale(&lead.recip()),
            den: den.monic(),
        })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_poly(Polynomial::constant(q))
    }

    /// The indeterminate `n` as a rational function.
    pub fn variable() -> Self {
        Self::from_poly(Polynomial::variable())
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The constant value, if this function is a constant.
    pub fn as_rational(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        RationalFunction::one().checked_div(self)
    }

    /// Exact evaluation at `x`; fails at a pole.
    pub fn eval(&self, x: &Rational) -> Result<Rational, ArithError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ArithError::Pole);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = RationalFunction::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Numerator and denominator rescaled to primitive integer polynomials
    /// (for display): same fraction, integer coefficients with no common
    /// factor, denominator with positive leading coefficient.
    fn integer_scaled(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let mut lcm = BigInt::one();
        for c in self.num.coeffs().iter().chain(self.den.coeffs()) {
            lcm = lcm.lcm(c.denom());
        }
        let scale_up = |p: &Polynomial| -> Vec<BigInt> {
            p.coeffs()
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect()
        };
        let (mut ni, mut di) = (scale_up(&self.num), scale_up(&self.den));
        let mut g = BigInt::zero();
        for c in ni.iter().chain(di.iter()) {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in ni.iter_mut().chain(di.iter_mut()) {
                *c /= &g;
            }
        }
        if di.last().is_some_and(|c| c.is_negative()) {
            for c in ni.iter_mut().chain(di.iter_mut()) {
                *c = -c.clone();
            }
        }
        (ni, di)
    }

    /// Structured JSON form: `{"num": ["p/q", ...], "den": [...]}` with
    /// coefficients in ascending degree.
    pub fn to_json(&self) -> serde_json::Value {
        let strings = |p: &Polynomial| -> Vec<String> {
            p.coeffs().iter().map(super::format_rational).collect()
        };
        serde_json::json!({ "num": strings(&self.num), "den": strings(&self.den) })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, ArithError> {
        let parse_poly = |key: &str| -> Result<Polynomial, ArithError> {
            let arr = v
                .get(key)
                .and_then(|a| a.as_array())
                .ok_or_else(|| ArithError::BadLiteral(v.to_string()))?;
            let coeffs = arr
                .iter()
                .map(|c| {
                    c.as_str()
                        .ok_or_else(|| ArithError::BadLiteral(c.to_string()))
                        .and_then(parse_rational)
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Polynomial::from_coeffs(coeffs))
        };
        RationalFunction::new(parse_poly("num")?, parse_poly("den")?)
    }

    /// Builds from ascending integer coefficient lists for numerator and
    /// denominator.
    pub fn from_integer_coeffs(num: &[i64], den: &[i64]) -> Result<Self, ArithError> {
        RationalFunction::new(
            Polynomial::from_integers(num),
            Polynomial::from_integers(den),
        )
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunction {
    /// `num/den` over primitive integer polynomials, descending degree, e.g.
    /// `-1/(2*n^2 - 2*n)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (ni, di) = self.integer_scaled();
        let to_poly = |c: &[BigInt]| {
            Polynomial::from_coeffs(c.iter().map(|x| Rational::from(x.clone())).collect())
        };
        let num = to_poly(&ni);
        let den = to_poly(&di);
        if den.is_one() {
            return write!(f, "{num}");
        }
        if num.is_constant() {
            write!(f, "{num}/({den})")
        } else {
            write!(f, "({num})/({den})")
        }
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &-rhs
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominators")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn n() -> RationalFunction {
        RationalFunction::variable()
    }

    fn one() -> RationalFunction {
        RationalFunction::one()
    }

    #[test]
    fn normalize_cancels_and_makes_monic() {
        // (n - 1)/(n^2 - 1) = 1/(n + 1)
        let f = RationalFunction::from_integer_coeffs(&[-1, 1], &[-1, 0, 1]).unwrap();
        assert_eq!(
            f,
            RationalFunction::from_integer_coeffs(&[1], &[1, 1]).unwrap()
        );
        // (2n)/2 = n with denominator 1
        let g = RationalFunction::from_integer_coeffs(&[0, 2], &[2]).unwrap();
        assert_eq!(g, n());
        assert!(g.den().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(Polynomial::one(), Polynomial::zero()),
            Err(ArithError::DivisionByZero)
        );
        assert_eq!(one().checked_div(&RationalFunction::zero()), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn figure_scale_determinant_normalizes() {
        // -1 / (2 (n-2)^3 (n-1)^2 n^7) in canonical monic form, then evaluated
        // at n = 3: -1/17496.
        let m = |c: i64| Polynomial::from_integers(&[-c, 1]);
        let den = &(&(&Polynomial::from_integers(&[2]) * &m(2).pow(3)) * &m(1).pow(2))
            * &Polynomial::variable().pow(7);
        let f = RationalFunction::new(Polynomial::from_integers(&[-1]), den).unwrap();
        assert_eq!(f.num(), &Polynomial::constant(rat(-1, 2)));
        assert!(f.den().leading().is_one());
        assert_eq!(f.eval(&rat_int(3)).unwrap(), rat(-1, 17496));
        assert_eq!(f.eval(&rat_int(2)), Err(ArithError::Pole));
    }

    #[test]
    fn arithmetic_examples() {
        // 1/(n(n-1)) + (n-1)^-1 * (-1/n) = 0
        let nn1 = RationalFunction::from_integer_coeffs(&[1], &[0, -1, 1]).unwrap();
        let a = RationalFunction::from_integer_coeffs(&[-1], &[0, 1]).unwrap();
        let b = RationalFunction::from_integer_coeffs(&[1], &[-1, 1]).unwrap();
        assert!((&nn1 + &(&b * &a)).is_zero());
        // (1/(n-1)) * n = n/(n-1)
        assert_eq!(
            &b * &n(),
            RationalFunction::from_integer_coeffs(&[0, 1], &[-1, 1]).unwrap()
        );
        // 1/(2(n-2)) - 1/(2n) = 1/((n-2)n)
        let l = RationalFunction::from_integer_coeffs(&[1], &[-4, 2]).unwrap();
        let r = RationalFunction::from_integer_coeffs(&[1], &[0, 2]).unwrap();
        assert_eq!(
            &l - &r,
            RationalFunction::from_integer_coeffs(&[1], &[0, -2, 1]).unwrap()
        );
    }

    #[test]
    fn display_uses_integer_scaling() {
        let f = RationalFunction::from_integer_coeffs(&[-1], &[0, -2, 2]).unwrap();
        assert_eq!(f.to_string(), "-1/(2*n^2 - 2*n)");
        assert_eq!(n().to_string(), "n");
    }

    #[test]
    fn json_round_trip() {
        let f = RationalFunction::from_integer_coeffs(&[1, 3], &[0, -2, 2]).unwrap();
        let j = f.to_json();
        assert_eq!(RationalFunction::from_json(&j).unwrap(), f);
    }
}
