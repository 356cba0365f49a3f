//! Exact real-root counting on open intervals via Sturm sequences.
//!
//! Works entirely over the rationals: nodelessness classification has to be
//! decided arbitrarily close to window boundaries, where floating point would
//! misclassify.

use num_traits::{Signed, Zero};

use super::rational::to_string;
use super::{ExactMathError, Polynomial, Rational};

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
///
/// Endpoint roots are an error rather than being silently included or
/// excluded: the callers need open-interval counts on (-1, 1) where roots at
/// the endpoints occur exactly at window boundaries and must be surfaced.
pub fn sturm_root_count(
    p: &Polynomial,
    lo: &Rational,
    hi: &Rational,
) -> Result<usize, ExactMathError> {
    if p.is_zero() {
        return Err(ExactMathError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(ExactMathError::EmptyInterval);
    }
    if p.eval(lo).is_zero() {
        return Err(ExactMathError::EndpointRoot(to_string(lo)));
    }
    if p.eval(hi).is_zero() {
        return Err(ExactMathError::EndpointRoot(to_string(hi)));
    }

    // Squarefree part so multiple roots are counted once.
    let g = p.gcd(&p.diff());
    let (sf, _) = p.div_rem(&g);

    let chain = sturm_chain(&sf);
    let lo_changes = sign_changes(&chain, lo);
    let hi_changes = sign_changes(&chain, hi);
    Ok(lo_changes - hi_changes)
}

fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone(), p.diff()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(-&r);
    }
}

fn sign_changes(chain: &[Polynomial], at: &Rational) -> usize {
    let mut changes = 0;
    let mut prev: Option<bool> = None;
    for q in chain {
        let v = q.eval(at);
        if v.is_zero() {
            continue;
        }
        let s = v.is_positive();
        if let Some(ps) = prev {
            if ps != s {
                changes += 1;
            }
        }
        prev = Some(s);
    }
    changes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn no_real_roots() {
        let p = Polynomial::from_ints(&[1, 1, 1]);
        assert_eq!(sturm_root_count(&p, &int(-1), &int(1)).unwrap(), 0);
    }

    #[test]
    fn two_roots_inside() {
        let p = Polynomial::new(vec![rat(-1, 4), int(0), int(1)]);
        assert_eq!(sturm_root_count(&p, &int(-1), &int(1)).unwrap(), 2);
    }

    #[test]
    fn para_jacobi_outside_window_has_a_node() {
        // p_2^(-2,-2)(z; λ=3) = z^2 - 4z + 1, roots 2±√3, one inside (-1,1)
        let p = Polynomial::from_ints(&[1, -4, 1]);
        assert_eq!(sturm_root_count(&p, &int(-1), &int(1)).unwrap(), 1);
    }

    #[test]
    fn endpoint_root_is_an_error() {
        let p = Polynomial::from_ints(&[-1, 0, 1]);
        assert!(matches!(
            sturm_root_count(&p, &int(-1), &int(1)),
            Err(ExactMathError::EndpointRoot(_))
        ));
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert_eq!(
            sturm_root_count(&Polynomial::zero(), &int(0), &int(1)),
            Err(ExactMathError::ZeroPolynomial)
        );
    }

    #[test]
    fn multiple_roots_counted_once() {
        // (z - 1/2)^2 (z + 1/2)
        let a = Polynomial::new(vec![rat(-1, 2), int(1)]);
        let b = Polynomial::new(vec![rat(1, 2), int(1)]);
        let p = &(&a * &a) * &b;
        assert_eq!(sturm_root_count(&p, &int(-1), &int(1)).unwrap(), 2);
    }

    fn random_poly(deg: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-20i64..=20, deg + 1).prop_map(move |mut cs| {
            if cs[deg] == 0 {
                cs[deg] = 1;
            }
            Polynomial::from_ints(&cs)
        })
    }

    proptest! {
        // A sign-change scan on a coarse grid gives a lower bound on the
        // Sturm count (roots can only be missed, never invented).
        #[test]
        fn grid_scan_never_exceeds_sturm(p in random_poly(3), q in random_poly(4)) {
            for poly in [p, q] {
                let lo = int(-1);
                let hi = int(1);
                if poly.eval(&lo).is_zero() || poly.eval(&hi).is_zero() {
                    return Ok(());
                }
                let sturm = sturm_root_count(&poly, &lo, &hi).unwrap();
                let steps = 200i64;
                let mut scan = 0usize;
                let mut prev = poly.eval(&lo);
                for i in 1..=steps {
                    let z = rat(-steps + 2 * i, steps);
                    let v = poly.eval(&z);
                    if !v.is_zero() && !prev.is_zero() && v.is_positive() != prev.is_positive() {
                        scan += 1;
                    }
                    if !v.is_zero() {
                        prev = v;
                    }
                }
                prop_assert!(scan <= sturm, "scan {} > sturm {} for {}", scan, sturm, poly);
            }
        }
    }
}
