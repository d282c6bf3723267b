//! Exact genus distributions of face-oriented embeddings of Eulerian digraphs
//! and of one-face m-constellations.
//!
//! The crate is organized bottom-up:
//!
//! - [`combinatorics`]: partitions, permutations, conjugacy classes, contents
//!   and representation dimensions.
//! - [`polyring`]: exact univariate polynomials over the rationals, the
//!   backward shift operator and Sturm-chain root counting.
//! - [`characters`]: symmetric-group characters (Murnaghan–Nakayama, the hook
//!   generating function) and the Frobenius factorization count.
//! - [`genus`]: the character formula for one-face constellations and its
//!   specializations to bipartite digraphs, bouquets, dipoles and fans.
//! - [`oracle`]: brute-force enumerators used as ground truth.
//! - [`analysis`]: log-concavity, real-rootedness certificates and exact
//!   genus moments.
//!
//! All arithmetic is exact. Nothing in a certification path touches floating
//! point.

pub mod analysis;
pub mod characters;
pub mod combinatorics;
mod error;
pub mod genus;
pub mod oracle;
pub mod polyring;
pub mod serde_util;

pub use error::{Error, Result};
