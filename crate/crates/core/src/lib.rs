//! Magma-valued state-sum invariants of framed links and marked graph diagrams.

pub mod algebra;
pub mod diagram;
pub mod evaluate;
pub mod magma;
pub mod moves;
mod unionfind;
pub mod error;

pub use algebra::{RingContext, RingElement};
pub use diagram::{MarkedDiagram, Sign, SiteKind, State};
pub use error::{Error, Result};
pub use magma::MagmaSpec;
pub use moves::MoveKind;
