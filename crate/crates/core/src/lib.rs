//! Permutation groups, their subgroup intervals and the parity of their
//! classical actions.
//!
//! The crate is organised bottom-up: [`perm`] and [`group`] supply the
//! basic objects, [`gf`] and [`factory`] build the named families,
//! [`action`] studies blocks and transitivity, [`lattice`] and [`product`]
//! compute intervals, and [`verify`] runs the numbered check suites used by
//! the command-line tool.

pub mod action;
pub mod error;
pub mod factory;
pub mod gf;
pub mod group;
pub mod lattice;
pub mod paritylaws;
pub mod perm;
pub mod product;
pub mod verify;

pub use action::Equipartition;
pub use error::{Error, Result};
pub use factory::{Construction, Flavor};
pub use group::Group;
pub use lattice::{Interval, Shape};
pub use perm::{CycleCensus, Permutation, Point};
pub use product::GoursatDatum;
