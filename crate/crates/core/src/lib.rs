//! Polars of convex lattice sets via the discrete Legendre transform.
//!
//! The pipeline turns a full-dimensional convex lattice set `K` with the origin
//! in its interior into its lattice polar `K*`:
//!
//! ```text
//! K --DLT--> K_L --λ--> K_Q* --T--> K_Z*
//! ```
//!
//! Everything is computed with exact rational arithmetic.

pub mod error;
pub mod geometry;
pub mod hrep;
pub mod legendre;
pub mod theorems;

pub use error::{Error, Result};
pub use geometry::*;
pub use hrep::*;
pub use legendre::*;
