//! Exact highest-weight combinatorics for `GL(n)` over a totally real field.
//!
//! Everything here is integer or rational arithmetic; there is no floating
//! point anywhere.  Half-integers (means of integer vectors of even length,
//! archimedean parameters divided by two, critical points of odd-rank pairs)
//! are stored *doubled*, as plain `i64`, and only rendered as fractions at
//! the serialization boundary.
//!
//! The main objects:
//!
//! - [`weights::Weight`] — an algebraic highest weight of `GL(n)/F` given by
//!   its standard coordinates at each real embedding, with predicates
//!   (dominant / algebraic / pure), the fundamental-basis dictionary, and
//!   cuspidal (archimedean) parameters.
//! - [`weyl::KostantElement`] — minimal-length coset representatives for
//!   block parabolics of the symmetric group, the dot action, and the
//!   balanced-representative search for a tensor-product weight.
//! - [`hodge`] — Hodge types of the associated motives, motivic and
//!   automorphic critical sets, Γ-factor inventories, and the equivalence
//!   between "a balanced representative exists", an interval condition on
//!   `d - d'`, and criticality of the near-central points.
//! - [`degrees`] — cohomological degree bookkeeping (bottom / top / dual-top
//!   degrees and the lowest degree supporting the relevant modules).
//! - [`oracles`] — independent brute-force and symbolic cross-checks used by
//!   the test-suite and exposed through the CLI via `--with-oracle`.

#![forbid(unsafe_code)]

pub mod degrees;
pub mod error;
pub mod hodge;
pub mod json;
pub mod oracles;
pub mod weights;
pub mod weyl;

pub use error::{Error, Result};
pub use weights::{CuspidalParams, FundamentalCoords, Weight};
pub use weyl::{KostantElement, Perm};
