//! Exact Vieta jumping on `x^2 - p*x*y + y^2 = q`, rational parametrizations,
//! arithmetic in real quadratic rings, the Pell-conic unit action, and the
//! brute-force searchers that check every theorem-backed answer.
//!
//! All arithmetic is on arbitrary-precision integers and rationals; floating
//! point only seeds searches whose results are then confirmed exactly.

pub mod arith;
pub mod conic;
pub mod error;
pub mod oracle;
pub mod pell;
pub mod qfield;
pub mod rational_param;

pub use conic::{Conic, IntPoint};
pub use error::{Error, Result};
pub use qfield::QuadElt;
pub use rational_param::{RatPoint, SlopeParam};
