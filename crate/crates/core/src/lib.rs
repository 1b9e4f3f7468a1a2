//! k-Naples parking functions.
//!
//! A k-Naples car that finds its preferred spot taken first backs up,
//! checking up to `k` spots behind it nearest-first, and then drives forward.
//! This crate simulates that rule and carries monotone k-Naples preferences
//! through their Catalan-family encodings: k-Dyck paths, Dyck paths, full and
//! pruned binary trees, polygon dissections and rooted non-crossing
//! partitions. Exact counts come from recurrences, truncated power series and
//! closed binomial forms, all checked against the brute-force [`oracle`].
//!
//! Series and counting code is generic over the coefficient type (see
//! [`scalar`]); the aliases below fix it to arbitrary-precision integers.

pub mod catalan_objects;
pub mod convert;
pub mod enumeration;
pub mod error;
pub mod oracle;
pub mod parking;
pub mod paths;
pub mod scalar;
pub mod series;
pub mod theorems;
pub mod trees;

pub use error::{Error, Result};
pub use parking::{
    is_k_naples, is_strictly_k_naples, minimal_k, park, park_filled, rearrangements_all_k_naples, FilledPreference,
    ParkingOutcome, ParkingPreference,
};
pub use paths::{DyckPath, KDyckPath, Step, StepWord};

/// Arbitrary-precision count.
pub type Count = num_bigint::BigInt;
/// Power series with arbitrary-precision coefficients.
pub type Series = series::PowerSeries<Count>;
/// `I(n, k)` / `U(n, k)` table with arbitrary-precision entries.
pub type Table = enumeration::CountTable<Count>;
