//! Exact integer and rational algebra for order-two Brauer classes on K3
//! surfaces, twisted Mukai lattices, Heegner divisors of K3^[2]-type
//! fourfolds, and the polynomial identities of a Fermat-type EPW sextic.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod brauer;
pub mod chern;
pub mod error;
pub mod fermat;
pub mod heegner;
pub mod lattice;
pub mod mukai;
pub mod pell;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
pub use lattice::{Lattice, Q};
pub use report::{Check, Report};
