//! Exact computation of the coloring invariants clique number ω, chromatic
//! number χ, Grundy number Γ, achromatic number α and pseudoachromatic number
//! ψ on small graphs, together with forbidden induced subgraph detection,
//! ab-perfectness checks, a structural recognizer for ωψ-perfect graphs and
//! exhaustive sweeps over all small graphs.
//!
//! ```
//! use abperfect::graph::Named;
//! use abperfect::solvers::profile;
//!
//! let c4 = Named::Cycle(4).build().unwrap();
//! let p = profile(&c4).unwrap();
//! assert_eq!(p.as_array(), [2, 2, 2, 2, 3]);
//! ```

pub mod cli;
pub mod coloring;
pub mod error;
pub mod forbidden;
pub mod graph;
pub mod harness;
pub mod perfectness;
pub mod solvers;

pub use coloring::Coloring;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use solvers::{Invariant, ParameterProfile};
