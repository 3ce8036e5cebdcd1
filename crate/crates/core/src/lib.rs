//! Exact computation of explicit Manin–Mumford type bounds for prime-to-p
//! torsion points on complete intersections `X = H_1 ∩ … ∩ H_c` in an
//! abelian variety, together with the algebra the bound is built from:
//! truncated power series, composition sums, Chern and Segre series in the
//! hyperplane class, and length-2 Witt vectors over finite fields.
//!
//! Every quantity is an exact integer or rational. Identities that admit two
//! independent routes (closed form vs. series inversion) are evaluated both
//! ways and compared before a value is returned.

pub mod bound;
pub mod chern_segre;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod witt2;

pub use error::{Error, Result};
pub use exact::{CycleClass, Integer, Rational, TruncatedSeries};
