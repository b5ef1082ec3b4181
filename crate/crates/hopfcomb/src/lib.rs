//! Combinatorial Hopf algebras from good monoid congruences.
//!
//! This crate computes, exactly, the combinatorics that grows out of two
//! idempotent maps on words — standardization and packing — and the monoid
//! congruences compatible with them:
//!
//! - [`words`]: words over `{1, 2, 3, …}`, the φ-maps `std`/`pack`, canonical
//!   words, and refinement between φ-maps;
//! - [`congruence`]: the sylvester, sylvester#, stalactic and taïga
//!   congruences, closed under union and intersection; class enumeration,
//!   canonical forms, and machine checks of φ-goodness;
//! - [`trees`]: binary search trees with multiplicities, the insertion
//!   algorithm `B`, the P/Q-symbol correspondence and its inverse, trees
//!   with multiplicities ([`trees::Btm`]) as taïga classes, fibers, and the
//!   hook-length counting formula;
//! - [`hopf`]: FQSym and WQSym through their polynomial realizations,
//!   quotient Hopf algebras for good congruences (stalactic classes, PBTm on
//!   trees), the dual bases, the lifting operators `B_k`, and a
//!   degree-by-degree Hopf-axiom verifier;
//! - [`series`]: truncated power series over exact rationals — the ordinary
//!   generating series of trees with multiplicities and the exponential
//!   fixed point `x = 1 + ∫ eˢ x(s)² ds` whose tree expansion reproves the
//!   hook-length formula.
//!
//! Everything is exact: integer coefficients in the Hopf layer, arbitrary
//! precision rationals in the series layer, no floating point anywhere.
//!
//! # Example
//!
//! ```
//! use hopfcomb::congruence::{class_of, CongruenceExpr};
//! use hopfcomb::trees::{btm_of_word, hook_count};
//! use hopfcomb::words::Word;
//!
//! let w: Word = "13322".parse().unwrap();
//! let class = class_of(&CongruenceExpr::Taiga, &w);
//! let tree = btm_of_word(&w);
//! // The taïga class of a word is the fiber of its tree, counted by the
//! // hook-length formula.
//! assert_eq!(hook_count(&tree).unwrap(), class.len().into());
//! ```

pub mod congruence;
pub mod hopf;
pub mod series;
pub mod trees;
pub mod words;

pub use congruence::{CongruenceError, CongruenceExpr, EquivalenceClass, GoodnessReport};
pub use hopf::{AxiomReport, BasisIndex, HopfAlgebraKind, HopfError, LinComb, Tensor2};
pub use series::{SeriesError, TruncatedSeries};
pub use trees::{Bstm, Btm, QSymbol, TreeError};
pub use words::{Letter, PhiMap, Word, WordError};
