//! Point counts, Frobenius data and Galois-theoretic checks for the Dwork
//! quintic pencil `x0^5 + ... + x4^5 - 5 psi x0 x1 x2 x3 x4` and its mirror.
//!
//! Finite-field counting lives in [`ffield`] and [`counts`]; [`weil`] turns
//! counts into Frobenius polynomials; [`sp4s6`] holds the `S_6 = Sp_4(F_2)`
//! dictionary; [`galois`] and [`dioph`] work over `Q`.

pub mod counts;
pub mod dioph;
pub mod error;
pub mod ffield;
pub mod galois;
pub mod modp;
pub mod poly;
pub mod psi;
pub mod roots;
pub mod sp4s6;
pub mod suite;
pub mod weil;

pub use counts::{Method, MirrorCurve};
pub use error::{Error, Result};
pub use ffield::{Embedding, Fe, FieldCtx};
pub use galois::{GaloisGroup, GaloisVerdict};
pub use psi::RationalPsi;
pub use sp4s6::{CycleType, Perm6, SpMat4};
pub use weil::{EulerClassMod2, WeilQuartic};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Polynomials over `Q`.
pub type QPoly = poly::Poly<BigRational>;
/// Polynomials over `Z`.
pub type ZPoly = poly::Poly<BigInt>;
pub type Complex64 = num_complex::Complex<f64>;
