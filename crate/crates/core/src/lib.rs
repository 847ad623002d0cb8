//! Linear-time construction of the Lyndon array.
//!
//! Two builders share one control flow:
//!
//! * [`build_plain`] produces the Lyndon array `λ` as a word-width array,
//!   using the output buffer itself as the only working storage.
//! * [`build_succinct`] produces the `2n + 2`-bit balanced parentheses
//!   sequence of the previous-smaller-suffix tree, which answers `λ`, `nss`
//!   and `pss` queries once finalized into a [`SuccinctPssTree`].
//!
//! Positions are 1-based throughout the public API: a text of length `n`
//! has positions `1..=n`, and positions `0` and `n + 1` stand for a virtual
//! sentinel that is smaller than every byte.
//!
//! ```
//! let lambda = lyndon::build_plain(b"northamerica");
//! assert_eq!(lambda.to_vec(), vec![4, 3, 2, 1, 1, 6, 1, 3, 1, 1, 1, 1]);
//!
//! let tree = lyndon::build_succinct(b"northamerica").finalize().unwrap();
//! assert_eq!(tree.lambda(6).unwrap(), 6);
//! assert_eq!(tree.pss(9).unwrap(), 8);
//! ```

pub mod alloc_meter;
pub mod bps;
pub mod cli;
pub mod construct;
pub mod duval;
mod error;
pub mod format;
pub mod gen;
pub mod oracle;
pub mod textcore;

pub use bps::{AppendOnlyBps, BuildStats, SuccinctPssTree, TreeConfig};
pub use construct::{
    build_plain, build_plain_into, build_plain_with, build_succinct, build_succinct_with,
    LyndonArray, Width,
};
pub use error::{Error, Result};
pub use textcore::{Outcome, SuffixOrdering, Text};
