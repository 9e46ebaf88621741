//! Perfect matchings under weight-parity constraints, parameterized by the size
//! of an odd cycle transversal.

pub mod alternating;
pub mod bcpm;
pub mod em;
pub mod error;
pub mod format;
pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod modp;
pub mod oct;
pub mod oracle;
pub mod search;
pub mod ub;
pub mod vertex_cover;

pub use alternating::{AlternatingCycle, Matching};
pub use error::{Error, Result};
pub use graph::{Bipartition, Edge, EdgeId, Graph, Vertex};
