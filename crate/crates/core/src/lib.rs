//! Dyck paths under the area and bounce statistics.
//!
//! The crate provides path statistics and enumeration ([`path`]), the
//! partial cell and bounce operators ([`ops`]), the area/bounce flipping
//! bijection and its two-stage extension ([`bijection`]), area- and
//! bounce-minimal paths and the ab-level structure ([`extremal`]), exact
//! q-Bell and `(q,t)`-Catalan polynomials ([`qbell`]), and an exhaustive
//! brute-force checker ([`oracle`]).

pub mod bijection;
pub mod error;
pub mod extremal;
pub mod ops;
pub mod partition;
pub mod path;
pub mod oracle;
pub mod qbell;
pub mod render;

pub use error::{Error, Result};
pub use ops::{Op, PathContext, PathResult};
pub use partition::{Composition, Partition};
pub use path::{BouncePath, DyckPath, PathRecord};
