//! Planar doodles: 4-valent plane graphs up to monogon and bigon moves.
//!
//! The crate covers the diagram model ([`diagram`]), canonical keys and Gauss
//! codes for deduplication and exchange, doodle codes ([`codes`]), dual
//! quadrangulations and incidence matrices ([`dual`]), the staged census
//! search ([`search`]), primality classification ([`classify`]), Hamiltonian
//! circuit codes ([`hamiltonian`]) and twin-group words ([`twin`]).
//!
//! Everything here is pure computation over owned values and builds without
//! the standard library.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod canonical;
pub mod circles;
pub mod classify;
pub mod codes;
pub mod diagram;
pub mod dual;
pub mod error;
pub mod gauss;
pub mod hamiltonian;
pub mod known;
pub mod planar;
pub mod search;
pub mod twin;

pub use canonical::CanonicalKey;
pub use classify::Classification;
pub use codes::DoodleCode;
pub use diagram::{Component, DoodleDiagram, Region};
pub use dual::{IncidenceMatrix, PlaneGraph};
pub use error::{Error, Result};
pub use gauss::GaussCode;
pub use hamiltonian::{CycleCode, HamiltonianCircuit};
pub use twin::TwinWord;
