//! Preneighbourhood systems on finite lattices of subobjects.
//!
//! Objects of a context (finite sets or finite groups) carry their lattice of
//! subobjects. A preneighbourhood system is stored as a monotone, extensional
//! generator map `g` on that lattice, with `μ(x) = ↑g(x)`.

#![no_std]

extern crate alloc;

pub mod classify;
pub mod closure;
pub mod context;
pub mod endomap;
pub mod error;
pub mod filter;
pub mod group;
pub mod lattice;
pub mod system;

pub use classify::{Verdict, Witness};
pub use context::{Context, ContextObject, Morphism, Obj};
pub use endomap::EndoMap;
pub use error::{Error, Result};
pub use filter::Filter;
pub use group::Group;
pub use lattice::{Elem, FiniteLattice};
pub use system::{Canonical, PreNbdSystem};
