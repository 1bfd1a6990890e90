//! Array codes constructed from subspaces of `F_q^M`.
//!
//! Every codeword column of a `[b×n, M, d]` array code is associated with the
//! column space of the matching thick column of its generator matrix. This
//! crate builds such codes from Grassmannians, spreads and subspace
//! transversal designs, and then measures their parameters exactly: minimum
//! distance, weight distribution, duals, MDS and perfectness, node and symbol
//! locality, and availability.
//!
//! The modules are layered bottom-up:
//!
//! - [`gf`]: prime-power fields and their extensions.
//! - [`linalg`]: matrices and canonical subspaces.
//! - [`designs`]: Gaussian coefficients, Grassmannians, MRD codes, spreads
//!   and transversal designs.
//! - [`arraycode`]: the code constructions and their distance properties.
//! - [`locality`]: recovery sets, availability and column repair.
//! - [`cli`]: file formats, reports and the verification suites behind the
//!   `subspace-lrc` binary.

pub mod arraycode;
pub mod cli;
pub mod designs;
mod error;
pub mod gf;
mod limits;
pub mod linalg;
pub mod locality;

pub use error::{Error, Result};
pub use limits::Limits;
