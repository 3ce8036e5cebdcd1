//! Length-2 Witt vectors `W_2(F_q)`.
//!
//! For `q = p` the ring is `ℤ/p²` through `(a_0, a_1) ↦ ã_0^p + p ã_1`.

mod field;
mod witt;

pub use field::{FiniteField, FqElement};
pub use witt::{carry_polynomial, CarryPolynomial, WittPair};
