//! The classical trigonometric Darboux-Pöschl-Teller model.
//!
//! Everything is expressed in the variable z = cos 2x on ]-1, 1[, where the
//! potential, the gauge-stripped eigenfunctions and all residuals are
//! rational. x-space only reappears in the sampling layer.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::rational::{self, int, rat, Rational};
use crate::exactmath::{Polynomial, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TdptError {
    #[error("parameters (alpha={0}, beta={1}) are not confining: need |alpha| > 1/2 and |beta| > 1/2")]
    NonConfining(String, String),
}

/// TDPT parameters (α, β).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdptParams {
    #[serde(with = "rational::serde_str")]
    pub alpha: Rational,
    #[serde(with = "rational::serde_str")]
    pub beta: Rational,
}

impl TdptParams {
    pub fn new(alpha: Rational, beta: Rational) -> Self {
        Self { alpha, beta }
    }

    pub fn from_ints(alpha: i64, beta: i64) -> Self {
        Self::new(int(alpha), int(beta))
    }

    /// Confining iff |α| > 1/2 and |β| > 1/2.
    pub fn is_confining(&self) -> bool {
        let half = rat(1, 2);
        self.alpha.abs() > half && self.beta.abs() > half
    }
}

/// The discrete parameter symmetries of the TDPT potential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetryTag {
    /// (α, β) → (-α, β)
    GammaPlus,
    /// (α, β) → (α, -β)
    GammaMinus,
    /// (α, β) → (-α, -β)
    Gamma3,
    /// coordinate reflection x → π/2 - x combined with (α, β) → (β, α)
    Omega,
}

/// f(z) = scale · (1-z)^a (1+z)^b · rf(z) on z ∈ ]-1, 1[.
///
/// Houses every eigenfunction in the crate; the exponents keep the gauge
/// factor exact so logarithmic derivatives stay rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiRationalFunction {
    pub scale: Rational,
    pub exp_one_minus_z: Rational,
    pub exp_one_plus_z: Rational,
    pub rf: RationalFunction,
}

impl QuasiRationalFunction {
    pub fn new(
        exp_one_minus_z: Rational,
        exp_one_plus_z: Rational,
        rf: RationalFunction,
    ) -> Self {
        Self {
            scale: Rational::one(),
            exp_one_minus_z,
            exp_one_plus_z,
            rf,
        }
    }

    /// The exact logarithmic derivative f'/f in z:
    /// -a/(1-z) + b/(1+z) + rf'/rf.
    pub fn log_derivative(&self) -> RationalFunction {
        let one_minus_z = Polynomial::from_ints(&[1, -1]);
        let one_plus_z = Polynomial::from_ints(&[1, 1]);
        let a_term = RationalFunction::new(
            Polynomial::constant(-self.exp_one_minus_z.clone()),
            one_minus_z,
        )
        .expect("1-z nonzero");
        let b_term = RationalFunction::new(
            Polynomial::constant(self.exp_one_plus_z.clone()),
            one_plus_z,
        )
        .expect("1+z nonzero");
        // rf'/rf computed as (num' den - num den') / (num den)
        let num =
            &(&self.rf.num().diff() * self.rf.den()) - &(self.rf.num() * &self.rf.den().diff());
        let den = self.rf.num() * self.rf.den();
        let rf_term = RationalFunction::new(num, den).expect("rf nonzero");
        &(&a_term + &b_term) + &rf_term
    }

    /// Multiply the rational part by another rational function.
    pub fn mul_rf(&self, other: &RationalFunction) -> Self {
        Self {
            scale: self.scale.clone(),
            exp_one_minus_z: self.exp_one_minus_z.clone(),
            exp_one_plus_z: self.exp_one_plus_z.clone(),
            rf: &self.rf * other,
        }
    }

    /// Equality up to one global nonzero rational factor. Exponents must
    /// match exactly; scale and rational-part normalization may differ.
    pub fn proportional_to(&self, other: &Self) -> bool {
        if self.exp_one_minus_z != other.exp_one_minus_z
            || self.exp_one_plus_z != other.exp_one_plus_z
        {
            return false;
        }
        if self.rf.is_zero() || other.rf.is_zero() {
            return self.rf.is_zero() && other.rf.is_zero();
        }
        // cross-multiplied equality: num1 * den2 * c == num2 * den1 for some c
        let lhs = self.rf.num() * other.rf.den();
        let rhs = other.rf.num() * self.rf.den();
        let c = rhs.leading_coeff() / lhs.leading_coeff();
        lhs.scale(&c) == rhs
    }
}

mod qrf_serde {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Wire {
        scale: String,
        exp_one_minus_z: String,
        exp_one_plus_z: String,
        num_coeffs: Vec<String>,
        den_coeffs: Vec<String>,
    }

    impl Serialize for QuasiRationalFunction {
        fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            Wire {
                scale: rational::to_string(&self.scale),
                exp_one_minus_z: rational::to_string(&self.exp_one_minus_z),
                exp_one_plus_z: rational::to_string(&self.exp_one_plus_z),
                num_coeffs: self.rf.num().coeff_strings(),
                den_coeffs: self.rf.den().coeff_strings(),
            }
            .serialize(s)
        }
    }

    impl<'de> Deserialize<'de> for QuasiRationalFunction {
        fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            use serde::de::Error;
            let w = Wire::deserialize(d)?;
            let num = Polynomial::from_coeff_strings(&w.num_coeffs).map_err(D::Error::custom)?;
            let den = Polynomial::from_coeff_strings(&w.den_coeffs).map_err(D::Error::custom)?;
            Ok(QuasiRationalFunction {
                scale: rational::from_str(&w.scale).map_err(D::Error::custom)?,
                exp_one_minus_z: rational::from_str(&w.exp_one_minus_z)
                    .map_err(D::Error::custom)?,
                exp_one_plus_z: rational::from_str(&w.exp_one_plus_z).map_err(D::Error::custom)?,
                rf: RationalFunction::new(num, den).map_err(D::Error::custom)?,
            })
        }
    }
}

/// V(z) = 2(α²-1/4)/(1-z) + 2(β²-1/4)/(1+z) - (α+β+1)², as one canonical
/// rational function. The constant is folded in so each potential is a
/// single object.
pub fn tdpt_potential_z(params: &TdptParams) -> RationalFunction {
    let a2 = &params.alpha * &params.alpha - rat(1, 4);
    let b2 = &params.beta * &params.beta - rat(1, 4);
    let shift = {
        let s = &params.alpha + &params.beta + int(1);
        &s * &s
    };
    let t1 = RationalFunction::new(
        Polynomial::constant(a2 * int(2)),
        Polynomial::from_ints(&[1, -1]),
    )
    .expect("1-z");
    let t2 = RationalFunction::new(
        Polynomial::constant(b2 * int(2)),
        Polynomial::from_ints(&[1, 1]),
    )
    .expect("1+z");
    &(&t1 + &t2) - &RationalFunction::constant(shift)
}

/// Generalized binomial coefficient binom(x, k) with rational x, as an exact
/// falling-factorial product. No Γ-function numerics anywhere.
fn gen_binom(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc *= x - int(j as i64);
    }
    acc / rational::factorial(k)
}

/// Γ(hi)/Γ(lo) for hi - lo a nonnegative integer: the product lo(lo+1)…(hi-1).
fn gamma_ratio(lo: &Rational, steps: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..steps {
        acc *= lo + int(j as i64);
    }
    acc
}

/// Which of the three explicit sum representations to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobiForm {
    /// Double-binomial sum in (1-z)^(n-k) (1+z)^k.
    Binomial,
    /// Single sum in powers of (1-z).
    OneMinusZ,
    /// Single sum in powers of (1+z).
    OnePlusZ,
}

/// The Jacobi polynomial P_n^(α,β)(z) for rational α, β, via one of the
/// three explicit sums with exact generalized binomials.
pub fn jacobi_poly_form(n: u32, alpha: &Rational, beta: &Rational, form: JacobiForm) -> Polynomial {
    let mut acc = Polynomial::zero();
    match form {
        JacobiForm::Binomial => {
            let na = alpha + int(n as i64);
            let nb = beta + int(n as i64);
            for k in 0..=n {
                let sign = if (n - k) % 2 == 1 { int(-1) } else { int(1) };
                let c = sign * gen_binom(&na, k) * gen_binom(&nb, n - k);
                let term = &Polynomial::one_plus_signed_z_pow(-1, (n - k) as usize)
                    * &Polynomial::one_plus_signed_z_pow(1, k as usize);
                acc = &acc + &term.scale(&c);
            }
            acc.scale(&(Rational::one() / rational::int(2i64.pow(n))))
        }
        JacobiForm::OneMinusZ => {
            // prefactor Γ(n+α+1)/(n! Γ(n+α+β+1)) folded term-wise into
            // exact Γ ratios.
            let inv_nfact = Rational::one() / rational::factorial(n);
            for k in 0..=n {
                let sign = if k % 2 == 1 { int(-1) } else { int(1) };
                let up = alpha + int(1 + k as i64); // Γ(n+α+1)/Γ(α+1+k), n-k steps
                let rising = alpha + beta + int(n as i64 + 1); // Γ(n+α+β+1+k)/Γ(n+α+β+1)
                let c = sign
                    * gen_binom(&int(n as i64), k)
                    * gamma_ratio(&up, n - k)
                    * gamma_ratio(&rising, k)
                    / rational::int(2i64.pow(k));
                let term = Polynomial::one_plus_signed_z_pow(-1, k as usize);
                acc = &acc + &term.scale(&(c * &inv_nfact));
            }
            acc
        }
        JacobiForm::OnePlusZ => {
            let outer = if n % 2 == 1 { int(-1) } else { int(1) };
            let inv_nfact = Rational::one() / rational::factorial(n);
            for k in 0..=n {
                let sign = if k % 2 == 1 { int(-1) } else { int(1) };
                let up = beta + int(1 + k as i64);
                let rising = alpha + beta + int(n as i64 + 1);
                let c = sign
                    * gen_binom(&int(n as i64), k)
                    * gamma_ratio(&up, n - k)
                    * gamma_ratio(&rising, k)
                    / rational::int(2i64.pow(k));
                let term = Polynomial::one_plus_signed_z_pow(1, k as usize);
                acc = &acc + &term.scale(&(c * &inv_nfact * &outer));
            }
            acc
        }
    }
}

/// P_n^(α,β)(z) via the binomial sum.
pub fn jacobi_poly(n: u32, alpha: &Rational, beta: &Rational) -> Polynomial {
    jacobi_poly_form(n, alpha, beta, JacobiForm::Binomial)
}

/// Dispersion relation E_ν = 4ν(ν+α+β+1).
pub fn energy(nu: &Rational, params: &TdptParams) -> Rational {
    int(4) * nu * (nu + &params.alpha + &params.beta + int(1))
}

/// The n-th bound state (E_n, ψ_n = ψ₀ · P_n^(α,β)) of a confining TDPT
/// potential, with gauge exponents a = (α+1/2)/2 and b = (β+1/2)/2.
pub fn bound_state(
    n: u32,
    params: &TdptParams,
) -> Result<(Rational, QuasiRationalFunction), TdptError> {
    if !params.is_confining() {
        return Err(TdptError::NonConfining(
            rational::to_string(&params.alpha),
            rational::to_string(&params.beta),
        ));
    }
    let e = energy(&int(n as i64), params);
    let a = (&params.alpha + rat(1, 2)) / int(2);
    let b = (&params.beta + rat(1, 2)) / int(2);
    let poly = jacobi_poly(n, &params.alpha, &params.beta);
    Ok((
        e,
        QuasiRationalFunction::new(a, b, RationalFunction::from_poly(poly)),
    ))
}

/// ψ_n with parameters sign-flipped per the tag, paired with its energy
/// ℰ_{n,i}(α,β). For Ω the standard identification is returned verbatim:
/// the pair (ℰ_{n,-}, (-1)^n · φ_{n,-}).
pub fn apply_symmetry(
    tag: SymmetryTag,
    n: u32,
    params: &TdptParams,
) -> (Rational, QuasiRationalFunction) {
    let nn = int(n as i64);
    let phi = |alpha: Rational, beta: Rational| {
        let a = (&alpha + rat(1, 2)) / int(2);
        let b = (&beta + rat(1, 2)) / int(2);
        let poly = jacobi_poly(n, &alpha, &beta);
        QuasiRationalFunction::new(a, b, RationalFunction::from_poly(poly))
    };
    match tag {
        SymmetryTag::GammaPlus => {
            let e = int(4) * (&nn - &params.alpha) * (&nn + &params.beta + int(1));
            (e, phi(-params.alpha.clone(), params.beta.clone()))
        }
        SymmetryTag::GammaMinus => {
            let e = int(4) * (&nn - &params.beta) * (&nn + &params.alpha + int(1));
            (e, phi(params.alpha.clone(), -params.beta.clone()))
        }
        SymmetryTag::Gamma3 => {
            let e = int(-4) * (&nn + int(1)) * (&params.alpha + &params.beta - &nn);
            (e, phi(-params.alpha.clone(), -params.beta.clone()))
        }
        SymmetryTag::Omega => {
            let (e, mut f) = apply_symmetry(SymmetryTag::GammaMinus, n, params);
            if n % 2 == 1 {
                f.scale = -f.scale;
            }
            (e, f)
        }
    }
}

/// Residual of the Jacobi equation at spectral parameter ν:
/// (1-z²)y'' - [(α+β+2)z + (α-β)]y' + ν(ν+α+β+1)y.
/// The zero polynomial iff y solves the equation.
pub fn jacobi_ode_residual(y: &Polynomial, nu: &Rational, params: &TdptParams) -> Polynomial {
    let one_minus_z2 = Polynomial::from_ints(&[1, 0, -1]);
    let drift = Polynomial::new(vec![
        &params.alpha - &params.beta,
        &params.alpha + &params.beta + int(2),
    ]);
    let ev = nu * (nu + &params.alpha + &params.beta + int(1));
    let t2 = &one_minus_z2 * &y.diff().diff();
    let t1 = &drift * &y.diff();
    let t0 = y.scale(&ev);
    &(&t2 - &t1) + &t0
}
