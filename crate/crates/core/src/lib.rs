//! Quantum cliques and anticliques among stabilizer codes for Pauli channels.
//!
//! A Pauli channel `x ↦ Σ λᵢ Eᵢ x Eᵢ†` has quantum graph
//! `G = span{Eᵢ†Eⱼ}`. For the code `C(R)` of a stabilizer group `R` with
//! projector `P`, `dim(P G P)` equals the number of cosets of `L(R)` inside
//! `L(Z(R))` hit by the check vectors `r(Eᵢ) + r(Eⱼ)`. This crate computes
//! that count with F₂ linear algebra ([`ramsey`]), searches all stabilizer
//! codes for cliques and anticliques, classifies channels, and re-derives
//! every answer from dense matrices ([`oracle`]).
//!
//! ```
//! use pauli_ramsey::{PauliChannel, StabilizerGroup, ramsey, oracle};
//!
//! let phi = PauliChannel::from_json(r#"{"n":2,"noise":["II","XI","IX","XX"]}"#).unwrap();
//! let r = StabilizerGroup::parse(2, "ZZ").unwrap();
//! assert_eq!(ramsey::compressed_dimension(&phi, &r).unwrap(), 2);
//! assert_eq!(oracle::dense_compressed_dimension(&phi, &r).unwrap().rank, 2);
//! ```

pub mod channel;
pub mod error;
pub mod f2;
pub mod oracle;
pub mod pauli;
pub mod ramsey;
pub mod selftest;
pub mod stabilizer;

pub use channel::{maximal_stabilizer_channel, DifferenceSet, PauliChannel};
pub use error::{Error, Result};
pub use f2::{BitVec2n, CosetSpace, F2Basis};
pub use oracle::{GramRankResult, Oracle};
pub use pauli::{DenseMatrix, PauliOperator};
pub use ramsey::{ClassificationResult, SearchMode, SearchReport, Verdict};
pub use stabilizer::StabilizerGroup;
