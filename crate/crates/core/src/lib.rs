//! Exact divisor calculus on the cubic rational normal 3-folds of P^5 and the
//! arithmetic of curves of maximal genus lying on them.
//!
//! The crate is organised bottom-up:
//!
//! - [`scroll`]: Weil divisor classes, the intersection form, section counts
//!   and the total-transform calculus on the cone S(0,0,3).
//! - [`bounds`]: the parameter decomposition, the h-vector profile and the
//!   genus bound it determines.
//! - [`classifier`]: shape of the linked curve C' for each case.
//! - [`linkage`]: genus bookkeeping for linked and nodal curves.
//! - [`catalog`]: existence constructions as checkable arithmetic data.
//! - [`verify`]: grid sweeps cross-checking all of the above.
//!
//! Everything is exact; no floating point is used anywhere.

pub mod bounds;
pub mod catalog;
pub mod classifier;
pub mod error;
pub mod linkage;
pub mod scroll;
mod serde_str;
pub mod verify;

pub use bounds::{decompose, delta_h, genus_from_profile, DeltaHProfile, ExtremalParams};
pub use classifier::{classify, ClassificationReport, CoarseCase, SurfaceClassOfS};
pub use error::{Error, Result};
pub use scroll::{DivisorClass, ResolvedClass, ScrollType, TotalTransform};
