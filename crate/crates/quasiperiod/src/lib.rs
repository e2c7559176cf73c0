//! Quasiperiodicity algorithms: periods, borders, covers and seeds of strings.
//!
//! A string `s` *covers* `u` when every position of `u` lies inside an
//! occurrence of `s`; it is a *seed* of `u` when it is a factor of `u` and
//! covers some superstring of `u`. This crate computes the classical arrays
//! attached to these notions:
//!
//! * period / border / suffix-period arrays and the shortest/longest cover
//!   arrays, all in linear time ([`arrays`], [`cover`]);
//! * the left-seed array by two independent linear algorithms and the
//!   longest left-seed array ([`left_seed`]);
//! * all seeds of a fixed length in linear time and the seed array in
//!   quadratic time ([`seeds`]);
//! * the shortest seed in `O(n log n)` via prefix maxgaps over the suffix
//!   tree, and the shortest seed of length at least `m` in `O(n log(n/m))`
//!   ([`shortest`]);
//! * the supporting index structures: suffix array, LCP array, suffix tree,
//!   heaviest-path decomposition and an interval find-union ([`index`]);
//! * naive reference implementations of every predicate and array, used as
//!   ground truth in the test suites ([`oracle`]).
//!
//! Positions in all public contracts are 1-based. Inputs are non-empty byte
//! strings ([`Text`]); results refer to factors as [`FactorRef`] values.
//!
//! ```
//! use quasiperiod::{Text, left_seed, shortest};
//!
//! let u = Text::from_str("abaabaaabbaabaab").unwrap();
//! assert_eq!(left_seed::shortest_left_seed(&u).unwrap(), 11);
//! let (len, f) = shortest::shortest_seed(&u).unwrap();
//! assert_eq!(len, 11);
//! assert_eq!(u.factor(f), b"abaabaaabba");
//! ```

use thiserror::Error as ThisError;

mod text;

pub mod arrays;
pub mod cover;
pub mod index;
pub mod left_seed;
pub mod oracle;
pub mod seeds;
pub mod shortest;

pub use text::{FactorRef, PosArray, Text};

/// Errors reported at the API boundary.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    /// The empty string is rejected by every algorithmic operation.
    #[error("input text must be non-empty")]
    EmptyText,
    /// A length or position argument lies outside `1..=n`.
    #[error("argument {name} = {value} out of range 1..={max}")]
    OutOfRange {
        name: &'static str,
        value: usize,
        max: usize,
    },
    /// Batched queries were not presented in non-decreasing threshold order.
    #[error("queries must be sorted by non-decreasing threshold")]
    UnsortedQueries,
    /// A prefix family entry violates its invariants.
    #[error("malformed prefix family entry (first={first}, last={last}, k={k}, len={len})")]
    InvalidFamilyEntry {
        first: usize,
        last: usize,
        k: usize,
        len: usize,
    },
}

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
