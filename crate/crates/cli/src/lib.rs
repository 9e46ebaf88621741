//! Library side of the `oddmatch` command: solving, transforming, generating
//! and verifying instances in the text format of `oddmatch-core`.

pub mod generate;
pub mod report;
pub mod solve;
pub mod transform;
pub mod verify;

pub use generate::{generate, GenKind, GenSpec};
pub use report::{strip_timing, RunReport};
pub use solve::{solve, SolveOptions};
pub use transform::{transform, Reduction, Transformed};
pub use verify::{verify, Verdict};
