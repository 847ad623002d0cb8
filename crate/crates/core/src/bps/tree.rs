use super::append::AppendOnlyBps;
use super::rank::RankIndex;
use super::tables::{delta_of, DELTA, FWD_MIN};
use crate::error::{Error, Result};

/// Navigation layout of a finalized tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeConfig {
    /// Bits per leaf of the min-excess tree: a power of two, at least 64.
    /// Larger leaves shrink the index and lengthen in-leaf scans.
    pub leaf_bits: usize,
}

impl Default for TreeConfig {
    fn default() -> Self {
        TreeConfig { leaf_bits: 1024 }
    }
}

/// The finalized previous-smaller-suffix tree of a text of length `n`:
/// `n + 1` nodes in preorder, node `0` the root.
///
/// `E(t)`, the excess after bit `t` (0-based), is the depth reached there.
/// Each leaf of `mins` covers `leaf_bits` bits and stores the smallest `E`
/// inside; the inner nodes hold the minimum of their children.
#[derive(Clone, Debug)]
pub struct SuccinctPssTree {
    words: Vec<u64>,
    len: usize,
    index: RankIndex,
    leaf_bits: usize,
    leaves: usize,
    /// Implicit binary tree: node `v` has children `2v` and `2v + 1`;
    /// leaf `l` sits at `mins[base + l]`.
    mins: Vec<i64>,
    base: usize,
}

impl AppendOnlyBps {
    /// Checks that the sequence encodes a single tree and builds the
    /// navigation index.
    pub fn finalize(self) -> Result<SuccinctPssTree> {
        self.finalize_with(TreeConfig::default())
    }

    pub fn finalize_with(mut self, config: TreeConfig) -> Result<SuccinctPssTree> {
        if !config.leaf_bits.is_power_of_two() || config.leaf_bits < 64 {
            return Err(Error::usage("leaf_bits must be a power of two of at least 64"));
        }
        if self.unclosed() != 0 || self.len != 2 * self.opens || self.len == 0 {
            return Err(Error::integrity(format!(
                "sequence of {} bits with {} opens is not balanced",
                self.len, self.opens
            )));
        }
        self.seal();
        SuccinctPssTree::build(self.words, self.len, self.index, config.leaf_bits)
    }
}

impl SuccinctPssTree {
    /// Parses raw packed bits, as stored in a file.
    pub(crate) fn from_words(words: &[u64], len: usize) -> Result<Self> {
        AppendOnlyBps::from_words(words, len)?.finalize()
    }

    fn build(words: Vec<u64>, len: usize, index: RankIndex, leaf_bits: usize) -> Result<Self> {
        let leaves = len.div_ceil(leaf_bits);
        let base = leaves.next_power_of_two();
        let mut mins = vec![i64::MAX; 2 * base];
        let mut e = 0i64;
        for l in 0..leaves {
            let (from, to) = (l * leaf_bits, ((l + 1) * leaf_bits).min(len));
            let mut m = i64::MAX;
            let mut p = from;
            while p < to {
                if p % 8 == 0 && p + 8 <= to {
                    let byte = (words[p / 64] >> (p % 64)) as u8 as usize;
                    m = m.min(e + FWD_MIN[byte] as i64);
                    e += DELTA[byte] as i64;
                    p += 8;
                } else {
                    e += delta_of(words[p / 64] >> (p % 64) & 1 == 1);
                    m = m.min(e);
                    p += 1;
                }
            }
            mins[base + l] = m;
        }
        for v in (1..base).rev() {
            mins[v] = mins[2 * v].min(mins[2 * v + 1]);
        }
        let tree = SuccinctPssTree { words, len, index, leaf_bits, leaves, mins, base };
        // The root's close must be the only point where the excess returns to 0.
        if tree.fwd_search(0, 0) != Some(len - 1) {
            return Err(Error::integrity("sequence encodes more than one tree"));
        }
        Ok(tree)
    }

    /// Number of text positions `n`; the tree has `n + 1` nodes.
    pub fn text_len(&self) -> usize {
        self.len / 2 - 1
    }

    /// Length of the parentheses sequence, `2n + 2`.
    pub fn len_bits(&self) -> usize {
        self.len
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|p| self.words[p / 64] >> (p % 64) & 1 == 1)
    }

    /// Bits used by rank/select and navigation structures.
    pub fn support_bits(&self) -> usize {
        self.index.size_bits() + self.mins.capacity() * 64
    }

    fn check_node(&self, i: usize) -> Result<()> {
        if i > self.text_len() {
            return Err(Error::usage(format!("node {i} outside [0, {}]", self.text_len())));
        }
        Ok(())
    }

    fn check_position(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.text_len() {
            return Err(Error::usage(format!("position {i} outside [1, {}]", self.text_len())));
        }
        Ok(())
    }

    #[inline]
    fn excess(&self, t: usize) -> i64 {
        2 * self.index.rank(&self.words, t + 1) as i64 - (t as i64 + 1)
    }

    #[inline]
    fn bit(&self, p: usize) -> bool {
        self.words[p / 64] >> (p % 64) & 1 == 1
    }

    /// Smallest `t > o` with `E(t) ≤ target`.
    fn fwd_search(&self, o: usize, target: i64) -> Option<usize> {
        let mut e = self.excess(o);
        let leaf = o / self.leaf_bits;
        let end = ((leaf + 1) * self.leaf_bits).min(self.len);
        if let Some(t) = self.scan_fwd(o + 1, end, &mut e, target) {
            return Some(t);
        }
        let l = self.next_leaf(leaf + 1, target)?;
        let from = l * self.leaf_bits;
        let mut e = self.excess(from - 1);
        self.scan_fwd(from, ((l + 1) * self.leaf_bits).min(self.len), &mut e, target)
    }

    fn scan_fwd(&self, mut p: usize, to: usize, e: &mut i64, target: i64) -> Option<usize> {
        while p < to {
            if p % 8 == 0 && p + 8 <= to {
                let byte = (self.words[p / 64] >> (p % 64)) as u8 as usize;
                if *e + (FWD_MIN[byte] as i64) > target {
                    *e += DELTA[byte] as i64;
                    p += 8;
                    continue;
                }
            }
            *e += delta_of(self.bit(p));
            if *e <= target {
                return Some(p);
            }
            p += 1;
        }
        None
    }

    /// Largest `t < o` with `E(t) ≤ target`, where `t = -1` (before the
    /// sequence) has excess 0.
    fn bwd_search(&self, o: usize, target: i64) -> Option<isize> {
        if o > 0 {
            let leaf = o / self.leaf_bits;
            let mut e = self.excess(o - 1);
            if let Some(t) = self.scan_bwd(leaf * self.leaf_bits, o, &mut e, target) {
                return Some(t as isize);
            }
            if leaf > 0 {
                if let Some(l) = self.prev_leaf(leaf - 1, target) {
                    let to = (l + 1) * self.leaf_bits;
                    let mut e = self.excess(to - 1);
                    return self.scan_bwd(l * self.leaf_bits, to, &mut e, target).map(|t| t as isize);
                }
            }
        }
        (target >= 0).then_some(-1)
    }

    /// Scans `t` from `to - 1` down to `from` with `e = E(to - 1)` on entry.
    fn scan_bwd(&self, from: usize, mut to: usize, e: &mut i64, target: i64) -> Option<usize> {
        while to > from {
            if to % 8 == 0 && to - 8 >= from {
                let byte = (self.words[(to - 8) / 64] >> ((to - 8) % 64)) as u8 as usize;
                let before = *e - DELTA[byte] as i64;
                if before + (FWD_MIN[byte] as i64) > target {
                    *e = before;
                    to -= 8;
                    continue;
                }
            }
            let t = to - 1;
            if *e <= target {
                return Some(t);
            }
            *e -= delta_of(self.bit(t));
            to -= 1;
        }
        None
    }

    /// First leaf at or after `from` whose minimum is at most `target`.
    fn next_leaf(&self, from: usize, target: i64) -> Option<usize> {
        if from >= self.leaves {
            return None;
        }
        let mut v = self.base + from;
        while self.mins[v] > target {
            while v & 1 == 1 {
                v >>= 1;
            }
            if v == 0 {
                return None;
            }
            v += 1;
        }
        while v < self.base {
            v = if self.mins[2 * v] <= target { 2 * v } else { 2 * v + 1 };
        }
        Some(v - self.base)
    }

    /// Last leaf at or before `from` whose minimum is at most `target`.
    fn prev_leaf(&self, from: usize, target: i64) -> Option<usize> {
        let mut v = self.base + from;
        while self.mins[v] > target {
            while v & 1 == 0 {
                v >>= 1;
            }
            if v == 1 {
                return None;
            }
            v -= 1;
        }
        while v < self.base {
            v = if self.mins[2 * v + 1] <= target { 2 * v + 1 } else { 2 * v };
        }
        Some(v - self.base)
    }

    #[inline]
    fn open_of(&self, i: usize) -> usize {
        self.index.select(&self.words, i)
    }

    /// 1-based position of the opening parenthesis of node `i`.
    pub fn node_to_open(&self, i: usize) -> Result<usize> {
        self.check_node(i)?;
        Ok(self.open_of(i) + 1)
    }

    /// 1-based position of the closing parenthesis matching node `i`.
    pub fn find_close(&self, i: usize) -> Result<usize> {
        self.check_node(i)?;
        Ok(self.close_of(self.open_of(i)) + 1)
    }

    fn close_of(&self, o: usize) -> usize {
        self.fwd_search(o, self.excess(o) - 1).expect("balanced sequence")
    }

    /// Number of nodes in the subtree rooted at `i`, including `i`.
    pub fn subtree_size(&self, i: usize) -> Result<usize> {
        self.check_node(i)?;
        let o = self.open_of(i);
        Ok((self.close_of(o) - o + 1) / 2)
    }

    pub fn parent(&self, i: usize) -> Result<usize> {
        if i == 0 {
            return Err(Error::usage("the root has no parent"));
        }
        self.check_node(i)?;
        let o = self.open_of(i);
        let t = self.bwd_search(o, self.excess(o) - 2).expect("non-root node has a parent");
        Ok(self.index.rank(&self.words, (t + 1) as usize))
    }

    /// Length of the longest Lyndon word starting at `i`.
    pub fn lambda(&self, i: usize) -> Result<usize> {
        self.check_position(i)?;
        self.subtree_size(i)
    }

    pub fn nss(&self, i: usize) -> Result<usize> {
        self.check_position(i)?;
        Ok(i + self.subtree_size(i)?)
    }

    pub fn pss(&self, i: usize) -> Result<usize> {
        self.check_position(i)?;
        self.parent(i)
    }

    /// All `λ` values in position order.
    pub fn lambdas(&self) -> Vec<usize> {
        (1..=self.text_len()).map(|i| self.subtree_size(i).unwrap()).collect()
    }
}
