//! Byte strings with sentinel-aware suffix order.
//!
//! A [`Text`] wraps a borrowed byte slice. Positions are 1-based; position
//! `0` and position `n + 1` denote the sentinel suffix, which is smaller than
//! every suffix that starts inside the text. The sentinel is never stored:
//! reads past either end simply stop the comparison.

use crate::error::{Error, Result};

/// Receives the number of symbol comparisons performed by an LCE scan.
///
/// The unit implementation compiles to nothing, so uninstrumented builds
/// pay no cost for the hook.
pub trait ComparisonHook {
    #[inline(always)]
    fn on_comparisons(&mut self, _count: u64) {}
}

impl ComparisonHook for () {}

/// Result of comparing two distinct suffixes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Less,
    Greater,
}

impl Outcome {
    pub fn reverse(self) -> Outcome {
        match self {
            Outcome::Less => Outcome::Greater,
            Outcome::Greater => Outcome::Less,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuffixOrdering {
    pub outcome: Outcome,
    /// Length of the longest common prefix of the two suffixes.
    pub lce: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct Text<'a> {
    bytes: &'a [u8],
}

impl<'a> Text<'a> {
    pub fn new(bytes: &'a [u8]) -> Self {
        Text { bytes }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    #[inline]
    pub fn as_bytes(&self) -> &'a [u8] {
        self.bytes
    }

    /// Symbol at 1-based position `p`, or `None` for the sentinel.
    #[inline]
    pub fn symbol(&self, p: usize) -> Option<u8> {
        if p == 0 {
            None
        } else {
            self.bytes.get(p - 1).copied()
        }
    }

    fn check_position(&self, p: usize) -> Result<()> {
        if p > self.len() + 1 {
            return Err(Error::usage(format!(
                "position {p} outside [0, {}]",
                self.len() + 1
            )));
        }
        Ok(())
    }

    /// Longest common extension of `S_i` and `S_j`, given that the first
    /// `skip` symbols are already known to match.
    pub fn lce(&self, i: usize, j: usize, skip: usize) -> Result<usize> {
        self.check_position(i)?;
        self.check_position(j)?;
        let l = self.lce_counted(i, j, skip, &mut ());
        debug_assert!(skip <= l, "skip exceeds the true extension");
        Ok(l)
    }

    /// Unchecked LCE for positions in `[0, n + 1]`. Charges `l - skip + 1`
    /// comparisons (the matching symbols plus the deciding mismatch) to
    /// `hook`.
    #[inline]
    pub(crate) fn lce_counted<H: ComparisonHook + ?Sized>(
        &self,
        i: usize,
        j: usize,
        skip: usize,
        hook: &mut H,
    ) -> usize {
        let n = self.bytes.len();
        if i == 0 || j == 0 || i > n || j > n {
            return 0;
        }
        let l = if i == j {
            n + 1 - i
        } else {
            skip + common_prefix(self.bytes, i - 1 + skip, j - 1 + skip)
        };
        hook.on_comparisons((l - skip + 1) as u64);
        l
    }

    /// `lce_counted(a, b, skip)` together with whether `S_a ≺ S_b`, for
    /// `a < b`, the only case the PSS search needs.
    #[inline(always)]
    pub(crate) fn probe<H: ComparisonHook + ?Sized>(
        &self,
        a: usize,
        b: usize,
        skip: usize,
        hook: &mut H,
    ) -> (usize, bool) {
        debug_assert!(a < b && b <= self.bytes.len());
        let s = self.bytes;
        if a == 0 {
            hook.on_comparisons(1);
            return (0, true);
        }
        let (x, y) = (a - 1 + skip, b - 1 + skip);
        // `S_b` is the shorter suffix; if it runs out it is the smaller one.
        if y >= s.len() {
            hook.on_comparisons(1);
            return (skip, false);
        }
        if s[x] != s[y] {
            hook.on_comparisons(1);
            return (skip, s[x] < s[y]);
        }
        let l = skip + 1 + common_prefix(s, x + 1, y + 1);
        hook.on_comparisons((l - skip + 1) as u64);
        let less = b - 1 + l < s.len() && s[a - 1 + l] < s[b - 1 + l];
        (l, less)
    }

    /// Whether `S_a ≺ S_b`, given their common extension `l`.
    #[inline]
    pub(crate) fn less_after(&self, a: usize, b: usize, l: usize) -> bool {
        let n = self.bytes.len();
        if a == 0 || b == 0 {
            return a == 0;
        }
        if a + l > n || b + l > n {
            return a + l > n;
        }
        self.bytes[a + l - 1] < self.bytes[b + l - 1]
    }

    pub fn suffix_compare(&self, i: usize, j: usize) -> Result<SuffixOrdering> {
        self.check_position(i)?;
        self.check_position(j)?;
        if i == j {
            return Err(Error::usage("suffix_compare needs two distinct suffixes"));
        }
        let l = self.lce_counted(i, j, 0, &mut ());
        let outcome = if self.less_after(i, j, l) {
            Outcome::Less
        } else {
            Outcome::Greater
        };
        Ok(SuffixOrdering { outcome, lce: l })
    }

    /// Whether `S[start..start+len)` is strictly smaller than each of its
    /// proper non-empty suffixes. Linear in `len`.
    pub fn is_lyndon_word(&self, start: usize, len: usize) -> Result<bool> {
        if len == 0 || start == 0 || start + len > self.len() + 1 {
            return Err(Error::usage(format!(
                "range [{start}, {start}+{len}) is not a non-empty range of the text"
            )));
        }
        Ok(is_lyndon(&self.bytes[start - 1..start - 1 + len]))
    }
}

/// Lyndon test on a standalone byte string: `w` is Lyndon iff it is a
/// prefix of a power of a Lyndon word of length `|w|`, which one pass of
/// Duval's scan decides.
pub(crate) fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    let (mut j, mut k) = (1, 0);
    while j < w.len() && w[k] <= w[j] {
        k = if w[k] < w[j] { 0 } else { k + 1 };
        j += 1;
    }
    j == w.len() && k == 0
}

/// Length of the common prefix of `bytes[a..]` and `bytes[b..]`, 0-based.
#[inline(always)]
pub(crate) fn common_prefix(bytes: &[u8], a: usize, b: usize) -> usize {
    let n = bytes.len();
    let far = a.max(b);
    if far >= n {
        return 0;
    }
    // Most extensions on non-repetitive text end at the first symbol.
    if bytes[a] != bytes[b] {
        return 0;
    }
    let max = n - far;
    let x = &bytes[a..a + max];
    let y = &bytes[b..b + max];
    let mut l = 0;
    while l + 8 <= max {
        let u = u64::from_le_bytes(x[l..l + 8].try_into().unwrap());
        let v = u64::from_le_bytes(y[l..l + 8].try_into().unwrap());
        let d = u ^ v;
        if d != 0 {
            return l + (d.trailing_zeros() / 8) as usize;
        }
        l += 8;
    }
    while l < max && x[l] == y[l] {
        l += 1;
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_lce(s: &[u8], i: usize, j: usize) -> usize {
        if i == 0 || j == 0 {
            return 0;
        }
        let mut l = 0;
        while i + l <= s.len() && j + l <= s.len() && s[i + l - 1] == s[j + l - 1] {
            l += 1;
        }
        l
    }

    #[test]
    fn lce_examples() {
        let t = Text::new(b"northamerica");
        assert_eq!(t.lce(6, 12, 0).unwrap(), 1);
        assert_eq!(Text::new(b"abaabaaba").lce(1, 4, 0).unwrap(), 6);
        assert_eq!(t.lce(0, 5, 0).unwrap(), 0);
        assert_eq!(t.lce(13, 5, 0).unwrap(), 0);
        assert!(t.lce(14, 1, 0).is_err());
    }

    #[test]
    fn compare_examples() {
        let t = Text::new(b"northamerica");
        let o = t.suffix_compare(12, 6).unwrap();
        assert_eq!(o, SuffixOrdering { outcome: Outcome::Less, lce: 1 });
        let o = t.suffix_compare(1, 2).unwrap();
        assert_eq!(o, SuffixOrdering { outcome: Outcome::Less, lce: 0 });
        let o = t.suffix_compare(0, 1).unwrap();
        assert_eq!(o.outcome, Outcome::Less);
        assert_eq!(t.suffix_compare(13, 1).unwrap().outcome, Outcome::Less);
        assert!(t.suffix_compare(3, 3).is_err());
    }

    #[test]
    fn lyndon_examples() {
        let t = Text::new(b"northamerica");
        assert!(t.is_lyndon_word(6, 6).unwrap());
        assert!(!t.is_lyndon_word(1, 12).unwrap());
        assert!(t.is_lyndon_word(3, 1).unwrap());
        assert!(t.is_lyndon_word(1, 0).is_err());
        assert!(t.is_lyndon_word(12, 2).is_err());
        assert!(!is_lyndon(b"aa"));
        assert!(!is_lyndon(b"abab"));
        assert!(is_lyndon(b"aab"));
        assert!(!is_lyndon(b"aba"));
        assert!(is_lyndon(b"aabab"));
    }

    #[test]
    fn counted_comparisons() {
        struct Tally(u64);
        impl ComparisonHook for Tally {
            fn on_comparisons(&mut self, c: u64) {
                self.0 += c;
            }
        }
        let t = Text::new(b"abaabaaba");
        let mut tally = Tally(0);
        assert_eq!(t.lce_counted(1, 4, 2, &mut tally), 6);
        assert_eq!(tally.0, 5);
    }

    fn text_strategy() -> impl Strategy<Value = Vec<u8>> {
        prop::collection::vec(prop::sample::select(vec![b'a', b'b', b'c', 0u8, 255u8]), 1..80)
    }

    proptest! {
        #[test]
        fn lce_matches_naive_and_skip(s in text_strategy(), a in 0usize..82, b in 0usize..82) {
            let n = s.len();
            let (i, j) = (a % (n + 2), b % (n + 2));
            let t = Text::new(&s);
            let want = naive_lce(&s, i, j);
            prop_assert_eq!(t.lce(i, j, 0).unwrap(), want);
            for skip in 0..=want {
                prop_assert_eq!(t.lce(i, j, skip).unwrap(), want);
            }
        }

        #[test]
        fn compare_is_antisymmetric(s in text_strategy(), a in 0usize..82, b in 0usize..82) {
            let n = s.len();
            let (i, j) = (a % (n + 2), b % (n + 2));
            prop_assume!(i != j);
            let t = Text::new(&s);
            let x = t.suffix_compare(i, j).unwrap();
            let y = t.suffix_compare(j, i).unwrap();
            prop_assert_eq!(x.outcome, y.outcome.reverse());
            prop_assert_eq!(x.lce, y.lce);
            // Agrees with slice order where the empty slice plays the sentinel.
            let sl = |p: usize| if p == 0 || p > n { &s[n..] } else { &s[p - 1..] };
            let expect = if sl(i) < sl(j) || (i == 0) { Outcome::Less } else { Outcome::Greater };
            if i != 0 && j != 0 && i <= n && j <= n {
                prop_assert_eq!(x.outcome, expect);
            }
        }

        #[test]
        fn lyndon_test_matches_standalone_nss(s in text_strategy(), a in 0usize..80, b in 1usize..80) {
            let n = s.len();
            let start = a % n + 1;
            let len = (b - 1) % (n - start + 1) + 1;
            let w = &s[start - 1..start - 1 + len];
            // The longest Lyndon prefix of w ends where its first smaller suffix begins.
            let sub = Text::new(w);
            let mut nss = len + 1;
            for k in 2..=len {
                if sub.suffix_compare(k, 1).unwrap().outcome == Outcome::Less {
                    nss = k;
                    break;
                }
            }
            let got = Text::new(&s).is_lyndon_word(start, len).unwrap();
            prop_assert_eq!(got, len == nss - 1);
            prop_assert_eq!(got, crate::oracle::is_lyndon_bruteforce(w));
        }
    }
}
