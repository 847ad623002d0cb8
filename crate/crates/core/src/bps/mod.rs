//! Balanced parentheses sequences of previous-smaller-suffix trees.
//!
//! The sequence is written in preorder: an opening parenthesis (bit `1`)
//! when a node is entered and a closing one (bit `0`) when it is left. A
//! text of length `n` yields `n + 1` nodes and `2n + 2` bits.

mod append;
mod rank;
mod stats;
mod tables;
mod tree;

pub use append::AppendOnlyBps;
pub use stats::BuildStats;
pub use tree::{SuccinctPssTree, TreeConfig};


/// Renders parentheses as a string of `(` and `)`.
pub fn to_paren_string<I: IntoIterator<Item = bool>>(bits: I) -> String {
    bits.into_iter().map(|b| if b { '(' } else { ')' }).collect()
}

/// Parses a string of `(` and `)`; any other character yields `None`.
pub fn parse_parens(s: &str) -> Option<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '(' => Some(true),
            ')' => Some(false),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests;
