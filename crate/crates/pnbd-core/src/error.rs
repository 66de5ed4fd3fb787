use alloc::string::String;
use core::fmt;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A carrier or lattice exceeds a hard size limit.
    Capacity { what: &'static str, limit: usize, got: usize },
    /// An order relation that is not a lattice (or not a partial order).
    NotALattice(String),
    /// Enumeration stopped after `partial` items because the budget ran out.
    Budget { partial: u64 },
    /// Arguments live on different lattices or objects.
    Domain(String),
    /// A value violates its type invariant.
    Validation(String),
    /// The operation does not apply to this context (finset/fingrp).
    Context(String),
    /// Precondition of an operation was not met.
    Precondition(String),
    /// The operation is defined but not supported for this input.
    Unsupported(String),
    /// A label or name could not be resolved.
    Unknown(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Capacity { what, limit, got } => {
                write!(f, "capacity exceeded: {what} has {got}, limit is {limit}")
            }
            Error::NotALattice(m) => write!(f, "not a lattice: {m}"),
            Error::Budget { partial } => {
                write!(f, "enumeration budget exhausted after {partial} items")
            }
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Validation(m) => write!(f, "validation error: {m}"),
            Error::Context(m) => write!(f, "context error: {m}"),
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
            Error::Unknown(m) => write!(f, "unknown: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
