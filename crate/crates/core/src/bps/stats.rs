use crate::textcore::ComparisonHook;

/// Counters collected during a build.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildStats {
    /// Symbol comparisons made by LCE scans, each deciding mismatch included.
    pub char_comparisons: u64,
    /// Positions whose search was skipped by run extension.
    pub indices_skipped_run: u64,
    /// Positions whose search was skipped by look-ahead copies.
    pub indices_skipped_lookahead: u64,
    /// Closing parentheses written, directly or through copies. A finished
    /// build of a length-`n` text writes `n + 1`.
    pub closes_written: u64,
}

impl ComparisonHook for BuildStats {
    #[inline]
    fn on_comparisons(&mut self, count: u64) {
        self.char_comparisons += count;
    }
}
