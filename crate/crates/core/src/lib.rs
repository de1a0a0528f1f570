//! Finite ordered completely regular semigroups.
//!
//! Validation of Cayley tables and stable orders, ω-terms and their
//! satisfaction, classification of generated pseudovarieties, explicit
//! decompositions and a brute-force verification harness.

pub mod classify;
pub mod decompose;
pub mod divide;
pub mod error;
pub mod io;
pub mod iso;
pub mod matrix;
pub mod semigroup;
pub mod terms;
pub mod varieties;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::BoolMatrix;
pub use semigroup::{
    check_homomorphism, is_stable_quasiorder, FiniteSemigroup, GreenData, HomomorphismReport,
    OrderedSemigroup, StableQuasiorder,
};
