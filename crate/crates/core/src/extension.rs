//! State-adding Darboux-Bäcklund extensions of the TDPT potential.
//!
//! The extended potential is built twice (log-derivative transport and the
//! explicit three-term display), the eigenstates twice (Wronskian and
//! Q-polynomial routes), and every level is checked by an exact Schrödinger
//! residual. The long displayed formulas are exactly where transcription
//! errors live, so each object carries its own independent cross-check.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::rational::{self, int, rat, Rational};
use crate::exactmath::{Polynomial, RationalFunction};
use crate::parajacobi::{
    self, lambda_double_prime, lambda_prime, nodeless_window, para_jacobi, LambdaWindow,
    ParaJacobiError, ParaJacobiIndex,
};
use crate::tdpt::{jacobi_poly, tdpt_potential_z, QuasiRationalFunction, TdptParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error(transparent)]
    Index(#[from] ParaJacobiError),
    #[error("extensions need N, M >= 2, got N={0}, M={1}")]
    ParametersTooSmall(u32, u32),
    #[error("lambda={0} is outside the nodeless window")]
    WindowViolation(String),
    #[error("invalid level {0}: levels are -(n+1) = {1} or k >= 0")]
    InvalidLevel(i64, i64),
}

/// Validates the full extension preconditions and returns the index and the
/// nodeless window.
fn validate(
    n: u32,
    big_n: u32,
    big_m: u32,
    lambda: &Rational,
) -> Result<(ParaJacobiIndex, LambdaWindow), ExtensionError> {
    let index = ParaJacobiIndex::new(n, big_n, big_m)?;
    if big_n < 2 || big_m < 2 {
        return Err(ExtensionError::ParametersTooSmall(big_n, big_m));
    }
    let window = nodeless_window(n, big_n, big_m)?;
    if !window.contains(lambda) {
        return Err(ExtensionError::WindowViolation(rational::to_string(lambda)));
    }
    Ok((index, window))
}

fn one_minus_z2() -> Polynomial {
    Polynomial::from_ints(&[1, 0, -1])
}

fn reduced_potential(big_n: u32, big_m: u32) -> RationalFunction {
    let params = TdptParams::from_ints(big_n as i64 - 1, big_m as i64 - 1);
    tdpt_potential_z(&params)
}

/// V~ via the second x-derivative of log p transported to z:
/// V~ = V(z; N-1, M-1) - 4(N+M) - 2[4(1-z²)(p'/p)' - 4z(p'/p)].
pub fn extended_potential_log_form(
    n: u32,
    big_n: u32,
    big_m: u32,
    lambda: &Rational,
) -> Result<RationalFunction, ExtensionError> {
    validate(n, big_n, big_m, lambda)?;
    let p = para_jacobi(n, big_n, big_m, lambda)?;
    let log_deriv = RationalFunction::new(p.diff(), p).expect("p nonzero");
    let t1 = &RationalFunction::from_poly(one_minus_z2().scale(&int(8))) * &log_deriv.diff();
    let t2 = &RationalFunction::from_poly(Polynomial::from_ints(&[0, 8])) * &log_deriv;
    let base = &reduced_potential(big_n, big_m)
        - &RationalFunction::constant(int(4 * (big_n as i64 + big_m as i64)));
    Ok(&(&base - &t1) + &t2)
}

/// V~ via the explicit three-term display in p_{n-2}(λ''), p_{n-1}(λ'),
/// p_n(λ). Independently constructed; must agree exactly with the log form.
pub fn extended_potential_explicit(
    n: u32,
    big_n: u32,
    big_m: u32,
    lambda: &Rational,
) -> Result<RationalFunction, ExtensionError> {
    validate(n, big_n, big_m, lambda)?;
    let p = para_jacobi(n, big_n, big_m, lambda)?;
    let lp = lambda_prime(n, big_n, big_m, lambda);
    let lpp = lambda_double_prime(n, big_n, big_m, lambda)?;
    let p_minus_1 = parajacobi::para_jacobi_relaxed(n - 1, big_n - 1, big_m - 1, &lp);
    let p_minus_2 = parajacobi::para_jacobi_relaxed(n - 2, big_n - 2, big_m - 2, &lpp);

    let over_p = |poly: Polynomial| RationalFunction::new(poly, p.clone()).expect("p nonzero");
    let ratio1 = over_p(p_minus_1);
    let ratio2 = over_p(p_minus_2);

    let nn = n as i64;
    let t_second = &RationalFunction::from_poly(one_minus_z2().scale(&int(8 * nn * (nn - 1))))
        * &ratio2;
    let sq = &ratio1 * &ratio1;
    let t_square =
        &RationalFunction::from_poly(one_minus_z2().scale(&int(8 * nn * nn))) * &sq;
    let t_first = &RationalFunction::from_poly(Polynomial::from_ints(&[0, 8 * nn])) * &ratio1;

    let base = &reduced_potential(big_n, big_m)
        - &RationalFunction::constant(int(4 * (big_n as i64 + big_m as i64)));
    Ok(&(&(&base - &t_second) + &t_square) + &t_first)
}

/// One member of the λ-dependent orthogonal family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPolynomial {
    pub level: i64,
    pub poly: Polynomial,
}

/// Q_k^(n)(z; N, M; λ). For k = -(n+1) this is 1; for k ≥ 0 it is the
/// displayed combination of P_{k-1}^(N+1,M+1), P_k^(N,M), p_n and p_{n-1},
/// with the convention P_{-1} ≡ 0.
pub fn q_polynomial(
    k: i64,
    n: u32,
    big_n: u32,
    big_m: u32,
    lambda: &Rational,
) -> Result<QPolynomial, ExtensionError> {
    validate(n, big_n, big_m, lambda)?;
    let added = -(n as i64) - 1;
    if k == added {
        return Ok(QPolynomial {
            level: k,
            poly: Polynomial::one(),
        });
    }
    if k < 0 {
        return Err(ExtensionError::InvalidLevel(k, added));
    }
    let ku = k as u32;
    let p = para_jacobi(n, big_n, big_m, lambda)?;
    let lp = lambda_prime(n, big_n, big_m, lambda);
    let p_minus_1 = parajacobi::para_jacobi_relaxed(n - 1, big_n - 1, big_m - 1, &lp);
    let big_p = jacobi_poly(ku, &int(big_n as i64), &int(big_m as i64));
    let big_p_shift = if ku == 0 {
        Polynomial::zero()
    } else {
        jacobi_poly(ku - 1, &int(big_n as i64 + 1), &int(big_m as i64 + 1))
    };

    let half = rat(k + big_m as i64 + big_n as i64 + 1, 2);
    let inner = &(&big_p_shift * &p).scale(&half) - &(&p_minus_1 * &big_p).scale(&int(n as i64));
    let drift = Polynomial::new(vec![
        int(big_n as i64 - big_m as i64),
        int(big_n as i64 + big_m as i64),
    ]);
    let poly = &(&one_minus_z2() * &inner) - &(&(&drift * &big_p) * &p);
    Ok(QPolynomial { level: k, poly })
}

/// ψ~_k = ψ₀(x; N-1, M-1)/p · Q_k as a quasi-rational function with gauge
/// exponents a = (N-1/2)/2 and b = (M-1/2)/2.
pub fn eigenstate(
    k: i64,
    n: u32,
    big_n: u32,
    big_m: u32,
    lambda: &Rational,
) -> Result<QuasiRationalFunction, ExtensionError> {
    let q = q_polynomial(k, n, big_n, big_m, lambda)?;
    let p = para_jacobi(n, big_n, big_m, lambda)?;
    let rf = RationalFunction::new(q.poly, p).expect("p nonzero");
    Ok(QuasiRationalFunction::new(
        rat(2 * big_n as i64 - 1, 4),
        rat(2 * big_m as i64 - 1, 4),
        rf,
    ))
}

/// Independent eigenstate route: the z-space Wronskian
/// W(p_n, (1-z)^N (1+z)^M P_k | z) with all derivatives taken formally,
/// stripped of its common gauge factor. Agrees projectively with the
/// Q-formula route.
pub fn eigenstate_wronskian(
    k: i64,
    n: u32,
    big_n: u32,
    big_m: u32,
    lambda: &Rational,
) -> Result<QuasiRationalFunction, ExtensionError> {
    validate(n, big_n, big_m, lambda)?;
    let added = -(n as i64) - 1;
    let p = para_jacobi(n, big_n, big_m, lambda)?;
    let a = rat(2 * big_n as i64 - 1, 4);
    let b = rat(2 * big_m as i64 - 1, 4);
    if k == added {
        // image of the seed: 1/ψ_n
        let rf = RationalFunction::new(Polynomial::one(), p).expect("p nonzero");
        return Ok(QuasiRationalFunction::new(a, b, rf));
    }
    if k < 0 {
        return Err(ExtensionError::InvalidLevel(k, added));
    }
    let big_p = jacobi_poly(k as u32, &int(big_n as i64), &int(big_m as i64));
    // W(p, (1-z)^N (1+z)^M P_k) = (1-z)^(N-1) (1+z)^(M-1) ×
    //   { p [-((N+M)z + N-M) P_k + (1-z²) P_k'] - (1-z²) p' P_k }
    let drift = Polynomial::new(vec![
        int(big_n as i64 - big_m as i64),
        int(big_n as i64 + big_m as i64),
    ]);
    let bracket = &(&p * &(&(&one_minus_z2() * &big_p.diff()) - &(&drift * &big_p)))
        - &(&(&one_minus_z2() * &p.diff()) * &big_p);
    let rf = RationalFunction::new(bracket, p).expect("p nonzero");
    Ok(QuasiRationalFunction::new(a, b, rf))
}

/// Spectrum levels k ∈ {-(n+1), 0, 1, …, cutoff} with E_k = 4k(N+M+1+k);
/// the added level sits at -4(n+1)(N+M-n) < 0.
pub fn extended_spectrum(
    n: u32,
    big_n: u32,
    big_m: u32,
    cutoff: u32,
) -> Result<Vec<(i64, Rational)>, ExtensionError> {
    let index = ParaJacobiIndex::new(n, big_n, big_m)?;
    if big_n < 2 || big_m < 2 {
        return Err(ExtensionError::ParametersTooSmall(big_n, big_m));
    }
    let _ = index;
    let mut out = Vec::with_capacity(cutoff as usize + 2);
    out.push((-(n as i64) - 1, level_energy(-(n as i64) - 1, big_n, big_m)));
    for k in 0..=cutoff as i64 {
        out.push((k, level_energy(k, big_n, big_m)));
    }
    Ok(out)
}

/// E_k(N, M) = 4k(N+M+1+k), for any integer level.
pub fn level_energy(k: i64, big_n: u32, big_m: u32) -> Rational {
    int(4 * k) * int(big_n as i64 + big_m as i64 + 1 + k)
}

/// ψ''/ψ + E - V as a canonical rational function of z, with
/// ψ''/ψ = 4(1-z²)[L' + L²] - 4zL for the exact logarithmic derivative
/// L = ψ_z/ψ. The zero rational function iff ψ is a formal eigenfunction
/// of V at energy E.
pub fn schrodinger_residual(
    psi: &QuasiRationalFunction,
    energy: &Rational,
    potential: &RationalFunction,
) -> RationalFunction {
    let l = psi.log_derivative();
    let lsq_plus_lp = &l.diff() + &(&l * &l);
    let t1 = &RationalFunction::from_poly(one_minus_z2().scale(&int(4))) * &lsq_plus_lp;
    let t2 = &RationalFunction::from_poly(Polynomial::from_ints(&[0, 4])) * &l;
    &(&(&t1 - &t2) + &RationalFunction::constant(energy.clone())) - potential
}

/// The orthogonality measure μ = (1-z)^(N-1) (1+z)^(M-1) / p², strictly
/// positive on ]-1, 1[ and integrable at ±1 for N, M ≥ 2.
pub fn orthogonality_measure(
    n: u32,
    big_n: u32,
    big_m: u32,
    lambda: &Rational,
) -> Result<QuasiRationalFunction, ExtensionError> {
    validate(n, big_n, big_m, lambda)?;
    let p = para_jacobi(n, big_n, big_m, lambda)?;
    let rf = RationalFunction::new(Polynomial::one(), &p * &p).expect("p² nonzero");
    Ok(QuasiRationalFunction::new(
        int(big_n as i64 - 1),
        int(big_m as i64 - 1),
        rf,
    ))
}

/// A fully assembled extension: index, λ, potential, seed, spectrum and the
/// Q-polynomial family up to the spectrum cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedModel {
    pub index: ParaJacobiIndex,
    pub lambda: Rational,
    pub potential: RationalFunction,
    pub seed: QuasiRationalFunction,
    pub spectrum: Vec<(i64, Rational)>,
    pub q_family: Vec<QPolynomial>,
}

pub const DEFAULT_SPECTRUM_CUTOFF: u32 = 8;

impl ExtendedModel {
    pub fn new(
        n: u32,
        big_n: u32,
        big_m: u32,
        lambda: Rational,
        cutoff: u32,
    ) -> Result<Self, ExtensionError> {
        let (index, _) = validate(n, big_n, big_m, &lambda)?;
        let potential = extended_potential_log_form(n, big_n, big_m, &lambda)?;
        let p = para_jacobi(n, big_n, big_m, &lambda)?;
        // seed ψ_n(x; -N, -M; λ) = ψ₀(x; -N, -M) · p
        let seed = QuasiRationalFunction::new(
            rat(-(big_n as i64) * 2 + 1, 4),
            rat(-(big_m as i64) * 2 + 1, 4),
            RationalFunction::from_poly(p),
        );
        let spectrum = extended_spectrum(n, big_n, big_m, cutoff)?;
        let q_family = spectrum
            .iter()
            .map(|(k, _)| q_polynomial(*k, n, big_n, big_m, &lambda))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            index,
            lambda,
            potential,
            seed,
            spectrum,
            q_family,
        })
    }
}

mod model_serde {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Wire {
        n: u32,
        #[serde(rename = "N")]
        big_n: u32,
        #[serde(rename = "M")]
        big_m: u32,
        lambda: String,
        potential_num: Vec<String>,
        potential_den: Vec<String>,
        spectrum: Vec<(i64, String)>,
        q_family: Vec<(i64, Vec<String>)>,
    }

    impl Serialize for ExtendedModel {
        fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            Wire {
                n: self.index.n,
                big_n: self.index.big_n,
                big_m: self.index.big_m,
                lambda: rational::to_string(&self.lambda),
                potential_num: self.potential.num().coeff_strings(),
                potential_den: self.potential.den().coeff_strings(),
                spectrum: self
                    .spectrum
                    .iter()
                    .map(|(k, e)| (*k, rational::to_string(e)))
                    .collect(),
                q_family: self
                    .q_family
                    .iter()
                    .map(|q| (q.level, q.poly.coeff_strings()))
                    .collect(),
            }
            .serialize(s)
        }
    }

    impl<'de> Deserialize<'de> for ExtendedModel {
        fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            use serde::de::Error;
            let w = Wire::deserialize(d)?;
            let lambda = rational::from_str(&w.lambda).map_err(D::Error::custom)?;
            let cutoff = w.spectrum.iter().map(|(k, _)| *k).max().unwrap_or(0).max(0) as u32;
            let model = ExtendedModel::new(w.n, w.big_n, w.big_m, lambda, cutoff)
                .map_err(D::Error::custom)?;
            Ok(model)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tdpt::bound_state;
    use num_traits::Signed;

    #[test]
    fn two_potential_forms_agree_simplest() {
        for lam in [rat(1, 2), int(1), rat(3, 2), rat(1, 7), rat(1999, 1000)] {
            let a = extended_potential_log_form(2, 2, 2, &lam).unwrap();
            let b = extended_potential_explicit(2, 2, 2, &lam).unwrap();
            assert_eq!(a, b, "forms disagree at lambda={lam}");
        }
    }

    #[test]
    fn two_potential_forms_agree_other_indices() {
        for (n, bn, bm, lam) in [
            (3u32, 2u32, 2u32, int(1)),
            (4, 3, 3, int(-1)),
            (3, 3, 2, rat(1, 10)),
            (4, 2, 3, rat(-1, 10)),
        ] {
            let a = extended_potential_log_form(n, bn, bm, &lam).unwrap();
            let b = extended_potential_explicit(n, bn, bm, &lam).unwrap();
            assert_eq!(a, b, "forms disagree at ({n},{bn},{bm};{lam})");
        }
    }

    #[test]
    fn window_violation_rejected() {
        assert!(matches!(
            extended_potential_log_form(2, 2, 2, &int(3)),
            Err(ExtensionError::WindowViolation(_))
        ));
        assert!(matches!(
            ExtendedModel::new(2, 2, 2, int(-1), 3),
            Err(ExtensionError::WindowViolation(_))
        ));
    }

    #[test]
    fn small_parameters_rejected() {
        assert!(matches!(
            extended_spectrum(1, 1, 1, 3),
            Err(ExtensionError::ParametersTooSmall(1, 1))
        ));
    }

    #[test]
    fn q_zero_worked_example() {
        // Q_0^(2)(z;2,2;λ) = -2z³ + 6(λ-1)z² - 6z + 2(λ-1)
        for lam in [rat(1, 2), int(1), rat(3, 2)] {
            let q = q_polynomial(0, 2, 2, 2, &lam).unwrap();
            let lm1 = &lam - int(1);
            let expect = Polynomial::new(vec![
                int(2) * &lm1,
                int(-6),
                int(6) * &lm1,
                int(-2),
            ]);
            assert_eq!(q.poly, expect);
        }
    }

    #[test]
    fn q_added_level_is_one() {
        let q = q_polynomial(-3, 2, 2, 2, &int(1)).unwrap();
        assert_eq!(q.poly, Polynomial::one());
    }

    #[test]
    fn q_invalid_level() {
        assert!(matches!(
            q_polynomial(-2, 2, 2, 2, &int(1)),
            Err(ExtensionError::InvalidLevel(-2, -3))
        ));
    }

    #[test]
    fn q_degrees() {
        // degree n+k+1 for the (2,2,2) family
        for k in 0..=6i64 {
            let q = q_polynomial(k, 2, 2, 2, &int(1)).unwrap();
            assert_eq!(q.poly.degree(), Some((2 + k + 1) as usize));
        }
    }

    #[test]
    fn eigenstate_k0_worked_example() {
        let psi = eigenstate(0, 2, 2, 2, &int(1)).unwrap();
        assert_eq!(psi.exp_one_minus_z, rat(3, 4));
        assert_eq!(psi.exp_one_plus_z, rat(3, 4));
        let expect = RationalFunction::new(
            Polynomial::from_ints(&[0, -6, 0, -2]),
            Polynomial::from_ints(&[1, 0, 1]),
        )
        .unwrap();
        assert_eq!(psi.rf, expect);
    }

    #[test]
    fn added_state_is_seed_reciprocal() {
        let lam = int(1);
        let psi = eigenstate(-3, 2, 2, 2, &lam).unwrap();
        let p = para_jacobi(2, 2, 2, &lam).unwrap();
        assert_eq!(
            psi.rf,
            RationalFunction::new(Polynomial::one(), p).unwrap()
        );
        // and equals the Wronskian route's image of the seed
        let w = eigenstate_wronskian(-3, 2, 2, 2, &lam).unwrap();
        assert!(psi.proportional_to(&w));
    }

    #[test]
    fn wronskian_route_agrees_projectively() {
        for (n, bn, bm, lam) in [
            (2u32, 2u32, 2u32, int(1)),
            (2, 2, 2, rat(1, 2)),
            (3, 2, 2, int(1)),
            (4, 3, 3, rat(-1, 3)),
        ] {
            for k in [0i64, 1, 2, 3] {
                let a = eigenstate(k, n, bn, bm, &lam).unwrap();
                let b = eigenstate_wronskian(k, n, bn, bm, &lam).unwrap();
                assert!(
                    a.proportional_to(&b),
                    "routes disagree at ({n},{bn},{bm};{lam}), k={k}"
                );
            }
        }
    }

    #[test]
    fn spectrum_worked_example() {
        let s = extended_spectrum(2, 2, 2, 3).unwrap();
        let expect: Vec<(i64, Rational)> = vec![
            (-3, int(-24)),
            (0, int(0)),
            (1, int(24)),
            (2, int(56)),
            (3, int(96)),
        ];
        assert_eq!(s, expect);
    }

    #[test]
    fn added_level_always_negative() {
        for (n, bn, bm) in [(2u32, 2u32, 2u32), (3, 2, 2), (4, 3, 3), (5, 4, 4)] {
            let s = extended_spectrum(n, bn, bm, 0).unwrap();
            assert!(s[0].1.is_negative());
        }
        assert_eq!(extended_spectrum(4, 3, 3, 0).unwrap()[0].1, int(-40));
    }

    #[test]
    fn residual_zero_for_added_state() {
        let lam = int(1);
        let psi = eigenstate(-3, 2, 2, 2, &lam).unwrap();
        let v = extended_potential_log_form(2, 2, 2, &lam).unwrap();
        let r = schrodinger_residual(&psi, &int(-24), &v);
        assert!(r.is_zero(), "residual {r}");
    }

    #[test]
    fn residual_zero_for_tdpt_ground_state() {
        let params = TdptParams::from_ints(2, 2);
        let (e, psi) = bound_state(0, &params).unwrap();
        let r = schrodinger_residual(&psi, &e, &tdpt_potential_z(&params));
        assert!(r.is_zero(), "residual {r}");
    }

    #[test]
    fn residual_shifts_with_energy_offset() {
        // wrong energy E_true + 1 gives the constant residual 1
        let lam = int(1);
        let psi = eigenstate(0, 2, 2, 2, &lam).unwrap();
        let v = extended_potential_log_form(2, 2, 2, &lam).unwrap();
        let r = schrodinger_residual(&psi, &int(1), &v);
        assert_eq!(r, RationalFunction::constant(int(1)));
    }

    #[test]
    fn measure_worked_example() {
        let lam = int(1);
        let mu = orthogonality_measure(2, 2, 2, &lam).unwrap();
        assert_eq!(mu.exp_one_minus_z, int(1));
        assert_eq!(mu.exp_one_plus_z, int(1));
        // p(0;λ) = 1 for all λ at (2,2,2), so μ(0) = 1·1/1 = 1
        assert_eq!(mu.rf.eval(&int(0)).unwrap(), int(1));
        // λ at the window edge: p(-1;2) = 4, interior values stay finite
        let p = para_jacobi(2, 2, 2, &int(2)).unwrap();
        assert_eq!(p.eval(&int(-1)), int(4));
    }

    #[test]
    fn model_json_round_trip() {
        let m = ExtendedModel::new(2, 2, 2, int(1), 3).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        let back: ExtendedModel = serde_json::from_str(&json).unwrap();
        assert_eq!(m, back);
    }
}
