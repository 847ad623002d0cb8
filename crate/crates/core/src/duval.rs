//! Lyndon factorization and extended-run detection in constant space.

use crate::error::{Error, Result};
use crate::textcore::ComparisonHook;

/// Streaming Lyndon factorization: yields the 1-based end position of each
/// factor, left to right, holding only a handful of indices.
#[derive(Clone, Debug)]
pub struct FactorEnds<'a> {
    s: &'a [u8],
    /// Start of the next factor to emit (0-based).
    next: usize,
    /// Last start of a pending batch of equal factors, and their length.
    batch_last: usize,
    period: usize,
    pending: bool,
    comparisons: u64,
}

impl<'a> FactorEnds<'a> {
    fn over(s: &'a [u8]) -> Self {
        FactorEnds { s, next: 0, batch_last: 0, period: 0, pending: false, comparisons: 0 }
    }
}

/// Factorizes `s`; the last emitted end equals `s.len()`.
pub fn lyndon_factorization_stream(s: &[u8]) -> Result<FactorEnds<'_>> {
    if s.is_empty() {
        return Err(Error::usage("cannot factorize an empty string"));
    }
    Ok(FactorEnds::over(s))
}

impl Iterator for FactorEnds<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        let s = self.s;
        if !self.pending {
            let i = self.next;
            if i >= s.len() {
                return None;
            }
            let (mut j, mut k) = (i + 1, i);
            while j < s.len() && s[k] <= s[j] {
                k = if s[k] < s[j] { i } else { k + 1 };
                j += 1;
            }
            self.comparisons += (j - i) as u64;
            self.period = j - k;
            self.batch_last = k;
            self.pending = true;
        }
        let end = self.next + self.period;
        self.next = end;
        if self.next > self.batch_last {
            self.pending = false;
        }
        Some(end)
    }
}

/// A slice of the form `suf(μ)·μ^t·pre(μ)` with `μ` Lyndon and `t ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtendedRun {
    /// `|μ|`.
    pub period: usize,
    /// 1-based start of the first full copy of `μ` within the slice.
    pub first_full_start: usize,
}

/// Decides whether `slice` is an extended Lyndon run. The longest Lyndon
/// factor (the first one, on ties) is the only candidate for `μ`.
pub fn detect_extended_run(slice: &[u8]) -> Result<Option<ExtendedRun>> {
    if slice.is_empty() {
        return Err(Error::usage("cannot examine an empty slice"));
    }
    Ok(detect(slice))
}

#[inline]
pub(crate) fn detect(slice: &[u8]) -> Option<ExtendedRun> {
    detect_counted(slice, &mut ())
}

/// [`detect`], charging its symbol comparisons to `hook`.
///
/// Runs Duval's scans directly. The batch of `μ` cannot start at or after
/// `n/2`, and once a scan reaches the end every later factor is shorter
/// than its period, so either event settles the answer.
pub(crate) fn detect_counted<H: ComparisonHook + ?Sized>(slice: &[u8], hook: &mut H) -> Option<ExtendedRun> {
    let s = slice;
    let n = s.len();
    let (mut i, mut longest, mut comparisons) = (0, 0, 0);
    let result = loop {
        if 2 * i >= n {
            break None;
        }
        let (mut j, mut k) = (i + 1, i);
        while j < n && s[k] <= s[j] {
            k = if s[k] < s[j] { i } else { k + 1 };
            j += 1;
        }
        comparisons += j - i;
        let p = j - k;
        if j == n {
            // Factors before `i` are shorter than `p` unless one ties or
            // beats it, and that one was not periodic to the end.
            if longest >= p || 2 * p > n {
                break None;
            }
            let mismatch = (0..i).position(|x| s[x] != s[x + p]);
            comparisons += mismatch.map_or(i, |x| x + 1);
            break mismatch.is_none().then_some(ExtendedRun { period: p, first_full_start: i + 1 });
        }
        longest = longest.max(p);
        i += (j - i) / p * p;
    };
    hook.on_comparisons(comparisons as u64);
    result
}
