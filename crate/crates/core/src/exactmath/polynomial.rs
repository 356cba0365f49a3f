//! Dense univariate polynomials over the exact rationals.
//!
//! Coefficients are stored constant term first. The zero polynomial is the
//! empty coefficient vector; any other canonical form has a nonzero leading
//! coefficient. All degrees in this crate stay in the low tens, so dense
//! storage wins over sparse bookkeeping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{self, Rational};

/// Clears denominators and divides out the integer content; trailing zeros
/// are already absent in canonical coefficient vectors.
fn int_primitive(coeffs: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * &lcm / c.denom())
        .collect();
    int_content_free(ints)
}

/// Divides a nonzero integer coefficient vector by its content.
fn int_content_free(coeffs: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in &coeffs {
        content = content.gcd(c);
    }
    if content.is_zero() || content.is_one() {
        return coeffs;
    }
    coeffs.into_iter().map(|c| c / &content).collect()
}

/// Pseudo-remainder of integer polynomials: lc(b)^k · a mod b for the k
/// needed to keep every step integral. Trailing zeros stripped.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().expect("nonzero divisor");
    let mut r = a.to_vec();
    while r.len() > db {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= bc * &lr;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from coefficients, constant term first.
    /// Trailing zeros are stripped.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// c · z^deg
    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// Convenience constructor from small integers, constant term first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the last nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of z^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, z0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z0 + c;
        }
        acc
    }

    /// Formal derivative d/dz.
    pub fn diff(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rational::int(k as i64))
            .collect();
        Self::new(coeffs)
    }

    /// q with q(z) = p(-z): sign flip on odd powers.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading_coeff();
        self.scale(&(Rational::one() / lc))
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().expect("nonzero");
        let lc = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coeff() / &lc;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let sub = divisor.scale(&factor);
            let mut coeffs = rem.coeffs;
            for (k, c) in sub.coeffs.iter().enumerate() {
                coeffs[k + shift] -= c;
            }
            rem = Self::new(coeffs);
        }
        (Self::new(quot), rem)
    }

    /// Monic greatest common divisor.
    ///
    /// Runs a primitive pseudo-remainder sequence over the integers rather
    /// than rational-coefficient Euclid: the content division after each
    /// step keeps coefficients small, where the naive recursion blows up
    /// exponentially on the degree-40+ operands the residual checks produce.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.make_monic();
        }
        if other.is_zero() {
            return self.make_monic();
        }
        let mut a = int_primitive(&self.coeffs);
        let mut b = int_primitive(&other.coeffs);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = int_content_free(r);
        }
        Self::new(a.into_iter().map(Rational::from_integer).collect()).make_monic()
    }

    /// (1 + s·z)^k expanded, for s = ±1.
    pub fn one_plus_signed_z_pow(sign: i64, k: usize) -> Self {
        let base = Self::from_ints(&[1, sign]);
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * &base;
        }
        acc
    }

    /// Coefficients in the `"num/den"` string form, constant term first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational::to_string).collect()
    }

    pub fn from_coeff_strings(strings: &[String]) -> Result<Self, super::ExactMathError> {
        let coeffs = strings
            .iter()
            .map(|s| rational::from_str(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{}", rational::to_string(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", rational::to_string(&a))?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        Self::from_coeff_strings(&strings).map_err(D::Error::custom)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
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
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn difference_of_squares() {
        let a = Polynomial::from_ints(&[1, 1]);
        let b = Polynomial::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, Polynomial::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn additive_identity() {
        let p = Polynomial::from_ints(&[3, 0, 7]);
        assert_eq!(&p + &Polynomial::zero(), p);
    }

    #[test]
    fn square_at_lambda_one() {
        // (z^2 + 2(1-λ)z + 1) at λ=1, squared
        let p = Polynomial::from_ints(&[1, 0, 1]);
        assert_eq!(&p * &p, Polynomial::from_ints(&[1, 0, 2, 0, 1]));
    }

    #[test]
    fn derivative_cases() {
        let lam = rat(1, 3);
        let p = Polynomial::new(vec![int(1), (int(1) - &lam) * int(2), int(1)]);
        assert_eq!(
            p.diff(),
            Polynomial::new(vec![(int(1) - &lam) * int(2), int(2)])
        );
        assert_eq!(Polynomial::constant(rat(5, 2)).diff(), Polynomial::zero());
        // (1+z)^2/8 -> (1+z)/4
        let q = Polynomial::one_plus_signed_z_pow(1, 2).scale(&rat(1, 8));
        assert_eq!(q.diff(), Polynomial::one_plus_signed_z_pow(1, 1).scale(&rat(1, 4)));
    }

    #[test]
    fn eval_cases() {
        // z^2 + 2(1-λ)z + 1 with λ=1/2 at z=-1 gives 1 (= 2λ)
        let lam = rat(1, 2);
        let p = Polynomial::new(vec![int(1), (int(1) - &lam) * int(2), int(1)]);
        assert_eq!(p.eval(&int(-1)), int(1));
        assert_eq!(p.eval(&int(0)), p.coeff(0));
        assert_eq!(Polynomial::from_ints(&[-1, 0, 1]).eval(&int(1)), int(0));
    }

    #[test]
    fn reflect_cases() {
        let p = Polynomial::from_ints(&[1, 4, 1]);
        assert_eq!(p.reflect(), Polynomial::from_ints(&[1, -4, 1]));
        let even = Polynomial::from_ints(&[2, 0, -3, 0, 1]);
        assert_eq!(even.reflect(), even);
        assert_eq!(
            Polynomial::from_ints(&[0, 0, 0, 1]).reflect(),
            Polynomial::from_ints(&[0, 0, 0, -1])
        );
    }

    #[test]
    fn div_rem_recombines() {
        let a = Polynomial::from_ints(&[2, -3, 0, 1, 5]);
        let b = Polynomial::from_ints(&[1, 2, 3]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn zero_polynomial_canonical() {
        assert!(Polynomial::from_ints(&[0, 0, 0]).is_zero());
        assert_eq!(Polynomial::from_ints(&[0]).degree(), None);
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-9i64..=9, 1i64..=4), 0..=9)
            .prop_map(|cs| Polynomial::new(cs.into_iter().map(|(p, q)| rat(p, q)).collect()))
    }

    proptest! {
        #[test]
        fn add_is_associative(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn mul_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn leibniz_rule(a in small_poly(), b in small_poly()) {
            let lhs = (&a * &b).diff();
            let rhs = &(&a.diff() * &b) + &(&a * &b.diff());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
