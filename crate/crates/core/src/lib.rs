//! Order polytopes and chain polytopes of finite posets.
//!
//! [`poset`] holds the order-theoretic side, [`polytope`] the combinatorial
//! models of both polytopes and the edge bijection between them, [`oracle`]
//! exact geometric cross-checks, and [`harness`] the property suite that
//! runs everything over exhaustive and random posets.

pub mod cli;
pub mod error;
pub mod harness;
pub mod oracle;
pub mod par;
pub mod polytope;
pub mod poset;

pub use error::{Error, Result};
pub use par::Exec;
pub use polytope::Kind;
pub use poset::{ElementSet, Poset, XWitness};
