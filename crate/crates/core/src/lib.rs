//! Lower bounds on branching rules for spherical pairs `G ⊂ Ĝ`, with an
//! exact oracle (Freudenthal, Brauer–Klimyk, character peeling) to check them.

pub mod cli;
pub mod error;
pub mod generators;
pub mod oracle;
pub mod pairs;
pub mod rootsys;

pub use error::{Error, Result};
pub use generators::{all_components, Hyperrectangle, Input, Options, Segment, TaggedComponent, Theorem};
pub use oracle::{branch, tensor_decompose, verify_components, Decomposition, VerificationReport};
pub use pairs::{load_pair, SphericalPair};
pub use rootsys::{GroupType, RootSystem, Weight, WeylWord};
