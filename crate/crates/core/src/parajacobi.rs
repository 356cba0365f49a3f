//! Para-Jacobi polynomials p_n^(-N,-M)(z;λ) and their nodelessness
//! classification.
//!
//! For negative integer Jacobi parameters with (N+M)/2 ≤ n < N+M the general
//! solution of the Jacobi equation is polynomial; λ parametrizes the
//! one-parameter family. This module builds the family from the Θ basis,
//! carries the λ parameter transforms, and classifies the λ windows on which
//! the polynomial has no node in ]-1, 1[.
//!
//! The factorial prefactors additionally require n ≥ max(N, M); indices
//! violating that are rejected outright instead of being extended by some
//! unstated limiting convention.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::rational::{self, factorial, int, neg_two_pow, rat, Rational};
use crate::exactmath::{sturm_root_count, ExactMathError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParaJacobiError {
    #[error("invalid para-Jacobi index (n={n}, N={big_n}, M={big_m}): {reason}")]
    InvalidIndex {
        n: u32,
        big_n: u32,
        big_m: u32,
        reason: String,
    },
    #[error("second-derivative parameter needs n >= 2, got n={0}")]
    NTooSmall(u32),
    #[error("lambda={0} lies on a window boundary: p(±1;lambda) = 0")]
    BoundaryLambda(String),
    #[error(transparent)]
    Exact(#[from] ExactMathError),
}

/// The integer triple (n, N, M) indexing p_n^(-N,-M).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParaJacobiIndex {
    pub n: u32,
    pub big_n: u32,
    pub big_m: u32,
}

impl ParaJacobiIndex {
    /// Validates N, M ≥ 1, max(N, M) ≤ n < N + M. The lower constraint is
    /// strictly stronger than the (N+M)/2 ≤ n existence condition; it makes
    /// every factorial in the prefactors a factorial of a nonnegative
    /// integer.
    pub fn new(n: u32, big_n: u32, big_m: u32) -> Result<Self, ParaJacobiError> {
        let fail = |reason: &str| ParaJacobiError::InvalidIndex {
            n,
            big_n,
            big_m,
            reason: reason.to_string(),
        };
        if big_n == 0 || big_m == 0 {
            return Err(fail("N and M must be positive"));
        }
        if n < big_n.max(big_m) {
            return Err(fail("n < max(N, M): prefactor factorials undefined"));
        }
        if n >= big_n + big_m {
            return Err(fail("n >= N + M: outside the polynomial-solution range"));
        }
        Ok(Self { n, big_n, big_m })
    }
}

/// Θ_{n,1}^(-N,-M) or Θ_{n,2}^(-N,-M), the two-element polynomial basis.
pub fn theta(n: u32, big_n: u32, big_m: u32, which: u8) -> Result<Polynomial, ParaJacobiError> {
    ParaJacobiIndex::new(n, big_n, big_m)?;
    Ok(match which {
        1 => theta1_relaxed(n, big_n, big_m),
        2 => theta2_relaxed(n, big_n, big_m),
        _ => panic!("theta index must be 1 or 2"),
    })
}

fn theta1_relaxed(n: u32, big_n: u32, big_m: u32) -> Polynomial {
    let lo = big_m.max((big_n + big_m).saturating_sub(n));
    let mut acc = Polynomial::zero();
    for k in lo..=n {
        let sign = if k % 2 == 1 { int(-1) } else { int(1) };
        let c = sign * factorial(n + k - big_m - big_n)
            / (rational::int(2i64.pow(k)) * factorial(k) * factorial(k - big_m) * factorial(n - k));
        acc = &acc + &Polynomial::one_plus_signed_z_pow(1, k as usize).scale(&c);
    }
    acc
}

fn theta2_relaxed(n: u32, big_n: u32, big_m: u32) -> Polynomial {
    let hi = big_n + big_m - n - 1;
    let mut acc = Polynomial::zero();
    for k in 0..=hi {
        let sign = if k % 2 == 1 { int(-1) } else { int(1) };
        let c = sign * factorial(big_m - 1 - k)
            / (rational::int(2i64.pow(k)) * factorial(k) * factorial(hi - k) * factorial(n - k));
        acc = &acc + &Polynomial::one_plus_signed_z_pow(1, k as usize).scale(&c);
    }
    acc
}

/// Θ-basis recombination without the public index guard. Handles the
/// degenerate indices reached by the derivative reductions, where the
/// λ-part prefactor is undefined but λ itself is exactly zero.
pub(crate) fn para_jacobi_relaxed(n: u32, big_n: u32, big_m: u32, lambda: &Rational) -> Polynomial {
    if n == 0 {
        return Polynomial::one();
    }
    let a = neg_two_pow(n) * factorial(n - big_m) * factorial(n)
        / factorial(2 * n - big_m - big_n);
    let mut p = theta1_relaxed(n, big_n, big_m).scale(&a);
    if !lambda.is_zero() {
        let b = neg_two_pow(n)
            * factorial(2 * n - big_m - big_n + 1)
            * factorial(big_m + big_n - n - 1)
            / factorial(n - big_n);
        p = &p + &theta2_relaxed(n, big_n, big_m).scale(&(lambda * b));
    }
    p
}

/// The monic para-Jacobi polynomial p_n^(-N,-M)(z;λ), built from the Θ
/// basis. Degree exactly n, leading coefficient exactly 1.
pub fn para_jacobi(
    n: u32,
    big_n: u32,
    big_m: u32,
    lambda: &Rational,
) -> Result<Polynomial, ParaJacobiError> {
    ParaJacobiIndex::new(n, big_n, big_m)?;
    Ok(para_jacobi_relaxed(n, big_n, big_m, lambda))
}

/// Cross-check constructor: the monic double-sum form, expanded verbatim.
/// Must agree exactly with the Θ-basis recombination.
pub fn para_jacobi_double_sum(
    n: u32,
    big_n: u32,
    big_m: u32,
    lambda: &Rational,
) -> Result<Polynomial, ParaJacobiError> {
    ParaJacobiIndex::new(n, big_n, big_m)?;
    let half_one_plus_z = Polynomial::new(vec![rat(1, 2), rat(1, 2)]);
    let mut pow_cache = vec![Polynomial::one()];
    for _ in 0..n {
        let last = pow_cache.last().expect("nonempty");
        pow_cache.push(last * &half_one_plus_z);
    }

    let pre1 = neg_two_pow(n) * factorial(n - big_m) * factorial(n)
        / factorial(2 * n - big_m - big_n);
    let mut sum1 = Polynomial::zero();
    for k in 0..=(n - big_m) {
        let sign = if (n - k) % 2 == 1 { int(-1) } else { int(1) };
        let c = sign * factorial(2 * n - big_m - big_n - k)
            / (factorial(k) * factorial(n - big_m - k) * factorial(n - k));
        sum1 = &sum1 + &pow_cache[(n - k) as usize].scale(&c);
    }

    let pre2 = lambda
        * (neg_two_pow(n) * factorial(2 * n - big_m - big_n + 1)
            * factorial(big_m + big_n - n - 1)
            / factorial(n - big_n));
    let mut sum2 = Polynomial::zero();
    for k in (2 * n + 1 - big_m - big_n)..=n {
        let sign = if (n - k) % 2 == 1 { int(-1) } else { int(1) };
        let c = sign * factorial(k + big_m - n - 1)
            / (factorial(k) * factorial(k + big_n + big_m - 2 * n - 1) * factorial(n - k));
        sum2 = &sum2 + &pow_cache[(n - k) as usize].scale(&c);
    }

    Ok(&sum1.scale(&pre1) + &sum2.scale(&pre2))
}

/// λ' with d/dz p_n^(-N,-M)(z;λ) = n · p_{n-1}^(-N+1,-M+1)(z;λ').
pub fn lambda_prime(n: u32, big_n: u32, big_m: u32, lambda: &Rational) -> Rational {
    assert!(n >= 1, "lambda_prime needs n >= 1");
    lambda * rat(big_m as i64 + big_n as i64 - n as i64 - 1, n as i64)
}

/// λ'' with d²/dz² p_n^(-N,-M)(z;λ) = n(n-1) · p_{n-2}^(-N+2,-M+2)(z;λ'').
pub fn lambda_double_prime(
    n: u32,
    big_n: u32,
    big_m: u32,
    lambda: &Rational,
) -> Result<Rational, ParaJacobiError> {
    if n < 2 {
        return Err(ParaJacobiError::NTooSmall(n));
    }
    let s = big_m as i64 + big_n as i64 - n as i64;
    Ok(lambda * rat((s - 1) * (s - 2), n as i64 * (n as i64 - 1)))
}

/// λ̃ in the reflection identity
/// p_n^(-N,-M)(-z;λ) = (-1)^n p_n^(-M,-N)(z;λ̃).
pub fn lambda_tilde(
    n: u32,
    big_n: u32,
    big_m: u32,
    lambda: &Rational,
) -> Result<Rational, ParaJacobiError> {
    let thr = lambda_threshold(n, big_n, big_m)?;
    let s1 = if (big_n + big_m + 1) % 2 == 1 { int(-1) } else { int(1) };
    let s2 = if (n + big_m) % 2 == 1 { int(-1) } else { int(1) };
    Ok(s1 * lambda + s2 * thr)
}

/// The strictly positive threshold λ_n^(-N,-M).
pub fn lambda_threshold(n: u32, big_n: u32, big_m: u32) -> Result<Rational, ParaJacobiError> {
    ParaJacobiIndex::new(n, big_n, big_m)?;
    Ok(factorial(n) * factorial(n - big_m) * factorial(n - big_n)
        / (factorial(2 * n - big_n - big_m)
            * factorial(2 * n - big_n - big_m + 1)
            * factorial(big_n + big_m - n - 1)))
}

/// One end of a λ interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    /// Wire form: `"-inf"`, `"inf"`, or the rational string.
    pub fn to_wire(&self) -> String {
        match self {
            Bound::NegInf => "-inf".to_string(),
            Bound::PosInf => "inf".to_string(),
            Bound::Finite(r) => rational::to_string(r),
        }
    }

    /// Parses the wire form back.
    pub fn from_wire(s: &str) -> Result<Self, ExactMathError> {
        match s {
            "-inf" => Ok(Bound::NegInf),
            "inf" => Ok(Bound::PosInf),
            _ => Ok(Bound::Finite(rational::from_str(s)?)),
        }
    }
}

/// An open λ interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub fn contains(&self, lambda: &Rational) -> bool {
        let above = match &self.lo {
            Bound::NegInf => true,
            Bound::Finite(lo) => lambda > lo,
            Bound::PosInf => false,
        };
        let below = match &self.hi {
            Bound::PosInf => true,
            Bound::Finite(hi) => lambda < hi,
            Bound::NegInf => false,
        };
        above && below
    }

    /// A representative interior point: the midpoint for a bounded interval,
    /// unit offset from the finite end otherwise.
    pub fn representative(&self) -> Rational {
        match (&self.lo, &self.hi) {
            (Bound::Finite(lo), Bound::Finite(hi)) => (lo + hi) / int(2),
            (Bound::Finite(lo), Bound::PosInf) => lo + int(1),
            (Bound::NegInf, Bound::Finite(hi)) => hi - int(1),
            _ => Rational::zero(),
        }
    }

    /// Three interior sample points.
    pub fn interior_points(&self) -> Vec<Rational> {
        match (&self.lo, &self.hi) {
            (Bound::Finite(lo), Bound::Finite(hi)) => {
                let w = hi - lo;
                [1, 2, 3]
                    .iter()
                    .map(|&q| lo + &w * rat(q, 4))
                    .collect()
            }
            (Bound::Finite(lo), Bound::PosInf) => {
                [1, 2, 3].iter().map(|&q| lo + int(q)).collect()
            }
            (Bound::NegInf, Bound::Finite(hi)) => {
                [1, 2, 3].iter().map(|&q| hi - int(q)).collect()
            }
            _ => vec![int(-1), int(0), int(1)],
        }
    }
}

/// The parity-case labels for the nodeless classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WindowCase {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii")]
    III,
    #[serde(rename = "iv")]
    IV,
}

/// The admissible λ intervals on which p_n^(-N,-M)(·;λ) is nodeless.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaWindow {
    pub case: WindowCase,
    pub intervals: Vec<Interval>,
    pub lambda_n: Rational,
}

impl LambdaWindow {
    pub fn contains(&self, lambda: &Rational) -> bool {
        self.intervals.iter().any(|iv| iv.contains(lambda))
    }

    /// All finite endpoints of the window intervals (0 and ±λ_n only).
    pub fn finite_endpoints(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        for iv in &self.intervals {
            for b in [&iv.lo, &iv.hi] {
                if let Bound::Finite(r) = b {
                    if !out.contains(r) {
                        out.push(r.clone());
                    }
                }
            }
        }
        out
    }
}

mod window_serde {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Wire {
        case: WindowCase,
        intervals: Vec<[String; 2]>,
        lambda_n: String,
    }

    impl Serialize for LambdaWindow {
        fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            Wire {
                case: self.case,
                intervals: self
                    .intervals
                    .iter()
                    .map(|iv| [iv.lo.to_wire(), iv.hi.to_wire()])
                    .collect(),
                lambda_n: rational::to_string(&self.lambda_n),
            }
            .serialize(s)
        }
    }

    impl<'de> Deserialize<'de> for LambdaWindow {
        fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            use serde::de::Error;
            let w = Wire::deserialize(d)?;
            let intervals = w
                .intervals
                .iter()
                .map(|[lo, hi]| {
                    Ok(Interval {
                        lo: Bound::from_wire(lo).map_err(D::Error::custom)?,
                        hi: Bound::from_wire(hi).map_err(D::Error::custom)?,
                    })
                })
                .collect::<Result<Vec<_>, D::Error>>()?;
            Ok(LambdaWindow {
                case: w.case,
                intervals,
                lambda_n: rational::from_str(&w.lambda_n).map_err(D::Error::custom)?,
            })
        }
    }
}

/// The nodeless window per the parity table:
/// (i)   M even, n-N odd:  λ < -λ_n or λ > 0
/// (ii)  M even, n-N even: 0 < λ < λ_n
/// (iii) M odd,  n-N even: λ < 0 or λ > λ_n
/// (iv)  M odd,  n-N odd:  -λ_n < λ < 0
pub fn nodeless_window(n: u32, big_n: u32, big_m: u32) -> Result<LambdaWindow, ParaJacobiError> {
    let thr = lambda_threshold(n, big_n, big_m)?;
    let m_even = big_m.is_multiple_of(2);
    let nn_even = (n + big_n).is_multiple_of(2);
    let zero = Rational::zero;
    let (case, intervals) = match (m_even, nn_even) {
        (true, false) => (
            WindowCase::I,
            vec![
                Interval {
                    lo: Bound::NegInf,
                    hi: Bound::Finite(-&thr),
                },
                Interval {
                    lo: Bound::Finite(zero()),
                    hi: Bound::PosInf,
                },
            ],
        ),
        (true, true) => (
            WindowCase::II,
            vec![Interval {
                lo: Bound::Finite(zero()),
                hi: Bound::Finite(thr.clone()),
            }],
        ),
        (false, true) => (
            WindowCase::III,
            vec![
                Interval {
                    lo: Bound::NegInf,
                    hi: Bound::Finite(zero()),
                },
                Interval {
                    lo: Bound::Finite(thr.clone()),
                    hi: Bound::PosInf,
                },
            ],
        ),
        (false, false) => (
            WindowCase::IV,
            vec![Interval {
                lo: Bound::Finite(-&thr),
                hi: Bound::Finite(zero()),
            }],
        ),
    };
    Ok(LambdaWindow {
        case,
        intervals,
        lambda_n: thr,
    })
}

/// Independent nodelessness oracle: true iff p_n^(-N,-M)(·;λ) has zero
/// roots in ]-1, 1[ by exact Sturm counting. λ with p(±1;λ) = 0 (window
/// boundaries) is rejected.
pub fn is_nodeless(
    n: u32,
    big_n: u32,
    big_m: u32,
    lambda: &Rational,
) -> Result<bool, ParaJacobiError> {
    let p = para_jacobi(n, big_n, big_m, lambda)?;
    if p.eval(&int(-1)).is_zero() || p.eval(&int(1)).is_zero() {
        return Err(ParaJacobiError::BoundaryLambda(rational::to_string(lambda)));
    }
    let count = sturm_root_count(&p, &int(-1), &int(1))?;
    Ok(count == 0)
}

/// The closed-form boundary values (p(-1;λ), p(1;λ)).
pub fn boundary_values(
    n: u32,
    big_n: u32,
    big_m: u32,
    lambda: &Rational,
) -> Result<(Rational, Rational), ParaJacobiError> {
    ParaJacobiIndex::new(n, big_n, big_m)?;
    // p(-1;λ) = λ (-2)^n (2n-N-M+1)! (M-1)! / ((n-N)! n!)
    let at_minus_one = |nn: u32, mm: u32, lam: &Rational| {
        lam * (neg_two_pow(n) * factorial(2 * n - nn - mm + 1) * factorial(mm - 1)
            / (factorial(n - nn) * factorial(n)))
    };
    let left = at_minus_one(big_n, big_m, lambda);
    // p(1;λ) = (-1)^n p^(-M,-N)(-1;λ̃), parameters swapped
    let lt = lambda_tilde(n, big_n, big_m, lambda)?;
    let sign = if n % 2 == 1 { int(-1) } else { int(1) };
    let right = sign * at_minus_one(big_m, big_n, &lt);
    Ok((left, right))
}
