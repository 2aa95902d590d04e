//! Distinct squares of circular words.
//!
//! The crate counts distinct squares of linear and circular words, splits
//! power factors into classes of conjugate primitive roots, builds Rauzy
//! graphs with their elementary circuits and cycle-space ranks, and runs
//! exhaustive sweeps that check the resulting bounds, chiefly
//! `Sq([w]) <= 5n/3` for circular words of length `n`.

pub mod error;
pub mod rauzy;
pub mod squares;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use rauzy::{build_rauzy_graph, Circuit, ClassCircuit, RauzyGraph, SmallCircuitProfile};
pub use squares::{ClassDecomposition, PowerClass, SquareReport, SquareSet};
pub use verify::{CheckId, CheckReport, SweepConfig};
pub use words::{CircularWord, PrimitiveRoot, Symbol, Word};
