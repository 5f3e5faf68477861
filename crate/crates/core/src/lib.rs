//! Exact isotopy invariants of configurations of skew lines in real
//! projective 3-space.

pub mod atlas;
pub mod config;
pub mod error;
pub mod field;
pub mod invariants;
pub mod io;
pub mod joins;
pub mod linalg;
pub mod planar;
pub mod projgeom;
pub mod schlafli;

pub use config::Config;
pub use error::{Error, Result};
