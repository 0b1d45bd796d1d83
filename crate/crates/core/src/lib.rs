//! Block/thread decomposition of cubic multigraphs, list-size selection and
//! Combinatorial Nullstellensatz certificates for list edge colouring.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bridges;
pub mod certificate;
pub mod choosability;
pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod matching;
pub mod nullstellensatz;
pub mod pipeline;
pub mod thread;
pub mod weighting;

pub use error::Error;
pub use graph::{EdgeId, Flag, Multigraph, VertexId};
