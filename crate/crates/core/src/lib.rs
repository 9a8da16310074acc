//! Exact computations in the Hopf algebra of word quasi-symmetric functions
//! (`WQSym`), in its sub-bialgebras given by the free dendriform trialgebra
//! on one generator (`TD`, indexed by plane trees) and the free cubical
//! trialgebra on one generator (`TC`, indexed by segmented compositions),
//! and in their duals.
//!
//! All coefficients are exact rationals. Every basis key is ultimately a
//! packed word, so every algebra here can be expanded into the monomial
//! basis `M` of `WQSym` and checked there.

pub mod combinat;
pub mod error;
pub mod freemod;
pub mod order;
pub mod series;
pub mod subalg;
pub mod tc;
pub mod td;
pub mod verify;
pub mod wqsym;

pub use error::{Error, Result};
pub use freemod::{Basis, BasisKey, Element, Q};
