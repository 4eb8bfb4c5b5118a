//! Finite groups, their commuting graphs, and checkers for structural
//! theorems about commuting-graph connectivity and diameter.
//!
//! ```
//! use comgraph_core::{constructions, CommutingGraph, Distance, Mode, DEFAULT_MAX_ORDER};
//!
//! let (w7, _) = constructions::construction_w(7, DEFAULT_MAX_ORDER).unwrap();
//! assert_eq!(w7.order(), 1176);
//! let graph = CommutingGraph::build(&w7, Mode::Transversal).unwrap();
//! assert_eq!(graph.diameter().diameter, Distance::Finite(6));
//! ```

pub mod analysis;
pub mod arith;
pub mod comgraph;
pub mod constructions;
pub mod error;
pub mod groups;

pub use comgraph::{CommutingGraph, DiameterReport, Distance, Mode};
pub use constructions::{GroupSpec, Phi, StandardGroup};
pub use error::{Error, Result};
pub use groups::{enumerate_closure, ElementId, FiniteGroup, GroupElement, Repr, DEFAULT_MAX_ORDER};
