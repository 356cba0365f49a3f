//! Exact construction and verification of para-Jacobi polynomials and the
//! associated one-parameter rational extensions of the trigonometric
//! Darboux-Pöschl-Teller potential.
//!
//! Everything structural is done over arbitrary-precision rationals: the
//! polynomials, the potentials, the eigenfunctions and the Schrödinger
//! residuals are exact objects, and "this identity holds" means a canonical
//! rational function is structurally zero. Floating point appears only in
//! [`numverify`], as an independent numerical oracle (Gauss-Jacobi
//! orthogonality, finite-difference spectra) that never feeds back into the
//! exact layer.
//!
//! Start with the runnable examples in `examples/`, or with
//! [`extension::ExtendedModel`] for the assembled object.

pub mod cli;
pub mod exactmath;
pub mod extension;
pub mod numverify;
pub mod parajacobi;
pub mod tdpt;
pub mod verify;
