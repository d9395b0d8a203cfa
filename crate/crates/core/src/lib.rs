//! Exact Hall algebras.
//!
//! The crate builds Hall algebras of two families of finitary hereditary
//! categories and their Hopf structure:
//!
//! * the classical Hall algebra of nilpotent modules over the Jordan quiver,
//!   generically in a formal parameter `t` ([`classical`]);
//! * representation categories of quivers over a prime field `F_q`, by
//!   brute-force enumeration ([`quiverrep`]).
//!
//! The backend-generic [`engine`] provides multiplication, Green's coproduct,
//! the extended algebra with `k_α` symbols, the Green pairing, the antipode and
//! its inverse, and the reduced Drinfeld double cross relation. [`verify`]
//! bundles structural identity checks into reports.
//!
//! Everything is exact. There is no floating point anywhere in the crate.

pub mod error;
pub mod exactnum;
pub mod classical;
pub mod engine;
mod render;
pub mod partitions;
pub mod quiverrep;
pub mod verify;

pub use error::{HallError, Result};
