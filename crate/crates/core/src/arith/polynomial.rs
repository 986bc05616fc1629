//! Univariate polynomials over `Q` in the indeterminate `n`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{format_rational, ArithError, Rational};

/// Polynomial with rational coefficients, stored in ascending degree with no
/// trailing zero coefficient. The zero polynomial has an empty coefficient
/// vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Builds a polynomial from ascending integer coefficients.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| super::rat_int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `n`.
    pub fn variable() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients (no trailing zeros).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `n^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Scales every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient; the zero polynomial is unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        self.scale(&lead.recip())
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn div_rem(&self, div: &Polynomial) -> Result<(Polynomial, Polynomial), ArithError> {
        if div.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let d = div.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < d {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let lead = div.leading();
        let mut quot = vec![Rational::zero(); rem.len() - d + 1];
        for i in (0..quot.len()).rev() {
            let top = rem[i + d - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = &top / &lead;
            for (j, c) in div.coeffs.iter().enumerate() {
                let t = &q * c;
                rem[i + j] = &rem[i + j] - &t;
            }
            quot[i] = q;
        }
        Ok((
            Polynomial::from_coeffs(quot),
            Polynomial::from_coeffs(rem),
        ))
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    /// Sparse form in descending degree, e.g. `2*n^3 - n + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{}", format_rational(&mag))?,
                (1, true) => write!(f, "n")?,
                (1, false) => write!(f, "{}*n", format_rational(&mag))?,
                (_, true) => write!(f, "n^{i}")?,
                (_, false) => write!(f, "{}*n^{i}", format_rational(&mag))?,
            }
        }
        Ok(())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    fn n() -> Polynomial {
        Polynomial::variable()
    }

    #[test]
    fn div_rem_reconstructs() {
        // (n^2 - 1) = (n - 1)(n + 1)
        let p = Polynomial::from_integers(&[-1, 0, 1]);
        let d = Polynomial::from_integers(&[-1, 1]);
        let (q, r) = p.div_rem(&d).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, Polynomial::from_integers(&[1, 1]));
        assert_eq!(&(&q * &d) + &r, p);
    }

    #[test]
    fn zero_divisor_rejected() {
        assert_eq!(
            n().div_rem(&Polynomial::zero()),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        // gcd(2(n-1)(n-2), 4(n-1)n) = n - 1
        let a = &Polynomial::from_integers(&[2]) * &(&(&n() - &Polynomial::one()) * &(&n() - &Polynomial::from_integers(&[2])));
        let b = &Polynomial::from_integers(&[4]) * &(&(&n() - &Polynomial::one()) * &n());
        assert_eq!(a.gcd(&b), &n() - &Polynomial::one());
    }

    #[test]
    fn display_descending_sparse() {
        let p = Polynomial::from_coeffs(vec![rat_int(2), rat_int(0), rat_int(-1), rat_int(3)]);
        assert_eq!(p.to_string(), "3*n^3 - n^2 + 2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
