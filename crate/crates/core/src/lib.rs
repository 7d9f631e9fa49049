//! Exact computation of one-part double, orbifold and spin Hurwitz numbers,
//! together with the intersection-number identities (hyperbolic-kernel
//! generating series, Chiodo-class evaluations, Witten-Kontsevich recursion)
//! that those numbers satisfy. Everything is arbitrary-precision rational
//! arithmetic; verification suites check identities as exact equalities.
//!
//! The high-level entry points are:
//! - [`hurwitz::one_part`] / [`hurwitz::one_part_polynomial`] for the closed
//!   generating-series route,
//! - [`oracle::double_hurwitz`] for ground truth by enumerating transposition
//!   factorizations in symmetric groups,
//! - [`hurwitz::double_cutjoin`] for the class-algebra route,
//! - [`hurwitz::spin_one_part`] for the spin generalisation,
//! - [`moduli`] for psi/Hodge/Chiodo intersection evaluations, and
//! - [`relations`] for the exact verification suites.

pub mod cli;
pub mod error;
pub mod exact;
pub mod hurwitz;
pub mod moduli;
pub mod oracle;
pub mod partitions;
pub mod relations;
pub mod series;

pub use error::{Error, Result};
pub use exact::Rational;
pub use partitions::Partition;
