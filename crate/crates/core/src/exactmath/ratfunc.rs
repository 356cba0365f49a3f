//! Quotients of polynomials in canonical form.
//!
//! Canonical means gcd(num, den) = 1 and den monic, so equality — and in
//! particular "identically zero" — is an exact structural check. The whole
//! verification strategy of this crate rests on that.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{ExactMathError, Polynomial, Rational};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Canonicalizes num/den: coprime, monic denominator. Idempotent.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ExactMathError> {
        if den.is_zero() {
            return Err(ExactMathError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc = den.leading_coeff();
        let inv = Rational::from_integer(1.into()) / lc;
        Ok(Self {
            num: num.scale(&inv),
            den: den.make_monic(),
        })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
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

    /// Exact value at z0; `None` if z0 is a pole.
    pub fn eval(&self, z0: &Rational) -> Option<Rational> {
        let d = self.den.eval(z0);
        if d == Rational::from_integer(0.into()) {
            return None;
        }
        Some(self.num.eval(z0) / d)
    }

    /// Quotient-rule derivative, canonicalized.
    pub fn diff(&self) -> Self {
        let num = &(&self.num.diff() * &self.den) - &(&self.num * &self.den.diff());
        let den = &self.den * &self.den;
        Self::new(num, den).expect("den^2 nonzero")
    }

    pub fn recip(&self) -> Result<Self, ExactMathError> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("nonzero dens")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("nonzero dens")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero dens")
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
    use crate::exactmath::rational::rat;

    #[test]
    fn cancels_common_factor() {
        let f = RationalFunction::new(
            Polynomial::from_ints(&[-1, 0, 1]),
            Polynomial::from_ints(&[-1, 1]),
        )
        .unwrap();
        assert_eq!(f, RationalFunction::from_poly(Polynomial::from_ints(&[1, 1])));
    }

    #[test]
    fn zero_is_zero_over_one() {
        let f = RationalFunction::new(Polynomial::zero(), Polynomial::from_ints(&[3, 1, 4])).unwrap();
        assert_eq!(f, RationalFunction::zero());
        assert_eq!(f.den(), &Polynomial::one());
    }

    #[test]
    fn scalar_normalization() {
        // (2z+2)/4 canonicalizes with monic denominator 1
        let f = RationalFunction::new(Polynomial::from_ints(&[2, 2]), Polynomial::from_ints(&[4]))
            .unwrap();
        assert_eq!(f.den(), &Polynomial::one());
        assert_eq!(f.num(), &Polynomial::new(vec![rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(Polynomial::one(), Polynomial::zero()),
            Err(ExactMathError::ZeroDenominator)
        );
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let f = RationalFunction::new(
            Polynomial::from_ints(&[2, 4, 2]),
            Polynomial::from_ints(&[3, 3]),
        )
        .unwrap();
        let again = RationalFunction::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn product_cancellation_matches_plain() {
        // rf(p*q, q) == rf(p, 1) for nonzero q
        let p = Polynomial::from_ints(&[1, -2, 5]);
        let q = Polynomial::from_ints(&[7, 0, 0, 2]);
        let lhs = RationalFunction::new(&p * &q, q).unwrap();
        assert_eq!(lhs, RationalFunction::from_poly(p));
    }

    #[test]
    fn derivative_of_quotient() {
        // d/dz (1/(1+z)) = -1/(1+z)^2
        let f = RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[1, 1])).unwrap();
        let expect =
            RationalFunction::new(Polynomial::from_ints(&[-1]), Polynomial::from_ints(&[1, 2, 1]))
                .unwrap();
        assert_eq!(f.diff(), expect);
    }
}
