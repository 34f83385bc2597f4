//! Discrete second moments of the Riemann zeta function along polynomial shifts.
//!
//! The crate is organised bottom-up:
//!
//! * [`zeta`] evaluates ζ(s) and truncated Dirichlet sums; it is the reference
//!   every other module measures against.
//! * [`afe`] holds 𝐀(μ), the root μ₀ and empirical checks of the
//!   approximate functional equation.
//! * [`weyl`] and [`count`] evaluate Weyl sums and count the solutions of the
//!   mean-value systems J_{h,d}, M_{h,d}, T_h.
//! * [`abscissa`] turns the exponent bounds into the strips 𝐒(d) and 𝐒_mo(d).
//! * [`moments`] runs the discrete and continuous moment experiments.

// `!(x > 0.0)` style guards are deliberate: they reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod abscissa;
pub mod afe;
pub mod count;
pub mod error;
pub mod fit;
pub mod moments;
pub mod sum;
pub mod weyl;
pub mod zeta;

pub use error::{Error, Result};
pub use num_complex::Complex64;
