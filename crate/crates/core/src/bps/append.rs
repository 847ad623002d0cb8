use super::rank::{RankIndex, BLOCK_BITS, BLOCK_WORDS, SAMPLE_RATE};
use super::tables::{delta_of, select_in_word, word_excess, DELTA, FWD_MIN, SUF_MAX};
use crate::error::{Error, Result};

/// A parentheses sequence that only grows at its right end, with rank,
/// select and select-unclosed support kept current on every append.
///
/// Bit positions in the public methods are 1-based, like text positions.
///
/// Unclosed parentheses are tracked per 512-bit block: `live[b]` counts the
/// unclosed opens in block `b`. Since a close always retires the rightmost
/// unclosed open, the blocks with a non-zero count form a stack ordered by
/// position, and each stack entry records how many unclosed opens lie in
/// blocks to its left. Within a block, the unclosed opens are always the
/// leftmost `live[b]` of the opens that have no partner inside the block.
#[derive(Clone, Debug)]
pub struct AppendOnlyBps {
    pub(crate) words: Vec<u64>,
    pub(crate) len: usize,
    pub(crate) opens: usize,
    unclosed: usize,
    pub(crate) index: RankIndex,
    live: Vec<u16>,
    /// Opens without a partner inside the block, for each completed block.
    tail: Vec<u16>,
    stack_block: Vec<u32>,
    stack_cum: Vec<u64>,
}

impl Default for AppendOnlyBps {
    fn default() -> Self {
        Self::new()
    }
}

impl AppendOnlyBps {
    pub fn new() -> Self {
        Self::with_capacity(0)
    }

    /// Reserves room for `bits` parentheses, so appends up to that length
    /// never reallocate.
    pub fn with_capacity(bits: usize) -> Self {
        let blocks = bits / BLOCK_BITS + 1;
        let mut live = Vec::with_capacity(blocks);
        live.push(0);
        AppendOnlyBps {
            words: vec![0; bits.div_ceil(64)],
            len: 0,
            opens: 0,
            unclosed: 0,
            index: RankIndex::with_capacity(bits),
            live,
            tail: Vec::with_capacity(blocks),
            stack_block: Vec::with_capacity(blocks),
            stack_cum: Vec::with_capacity(blocks),
        }
    }

    /// Appends raw parentheses (`true` = open), rejecting any prefix that
    /// closes more than it opened.
    pub fn from_parens<I: IntoIterator<Item = bool>>(bits: I) -> Result<Self> {
        let mut b = Self::new();
        for bit in bits {
            if bit {
                b.append_open();
            } else {
                b.append_close()?;
            }
        }
        Ok(b)
    }

    /// Rebuilds the sequence from packed words (bit `p` of the sequence is
    /// bit `p % 64` of word `p / 64`).
    pub(crate) fn from_words(words: &[u64], len: usize) -> Result<Self> {
        let mut b = Self::with_capacity(len);
        let mut p = 0;
        while p < len {
            let take = (len - p).min(64).min(BLOCK_BITS - b.len % BLOCK_BITS);
            let chunk = read_bits(words, p, take);
            let (m, _) = word_excess(chunk, take);
            if (b.unclosed as i64) + m < 0 {
                return Err(Error::integrity(format!(
                    "parenthesis at bit {} closes nothing",
                    p + 1
                )));
            }
            b.put_chunk(chunk, take);
            p += take;
        }
        Ok(b)
    }

    /// Number of bits written.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn open_count(&self) -> usize {
        self.opens
    }

    pub fn unclosed(&self) -> usize {
        self.unclosed
    }

    /// Bit at 1-based position `pos`.
    pub fn get(&self, pos: usize) -> Option<bool> {
        (pos >= 1 && pos <= self.len).then(|| self.bit(pos - 1))
    }

    #[inline]
    pub(crate) fn bit(&self, p: usize) -> bool {
        self.words[p / 64] >> (p % 64) & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|p| self.bit(p))
    }

    /// Bits of support structures currently allocated, including reserved
    /// capacity.
    pub fn support_bits(&self) -> usize {
        self.index.size_bits()
            + (self.live.capacity() + self.tail.capacity()) * 16
            + self.stack_block.capacity() * 32
            + self.stack_cum.capacity() * 64
    }

    #[inline]
    pub fn append_open(&mut self) {
        self.grow_to(self.len + 1);
        self.push_open();
    }

    /// [`append_open`](Self::append_open) into storage already sized for it.
    #[inline(always)]
    pub(crate) fn push_open(&mut self) {
        let p = self.len;
        debug_assert!(p < self.words.len() * 64);
        self.words[p / 64] |= 1 << (p % 64);
        self.opens += 1;
        // `live` ends with the entry of the block being written.
        let b = self.live.len() - 1;
        if self.live[b] == 0 {
            self.stack_block.push(b as u32);
            self.stack_cum.push(self.unclosed as u64);
        }
        self.live[b] += 1;
        self.unclosed += 1;
        self.len += 1;
        if self.len % BLOCK_BITS == 0 {
            self.complete_block();
        }
    }

    pub fn append_close(&mut self) -> Result<()> {
        self.append_closes(1)
    }

    /// Appends `count` closing parentheses.
    pub fn append_closes(&mut self, count: usize) -> Result<()> {
        if count > self.unclosed {
            return Err(Error::usage(format!(
                "cannot close {count} parentheses with {} unclosed",
                self.unclosed
            )));
        }
        self.grow_to(self.len + count);
        self.push_closes(count);
        Ok(())
    }

    #[inline(always)]
    pub(crate) fn push_closes(&mut self, count: usize) {
        debug_assert!(count <= self.unclosed);
        if count == 0 {
            return;
        }
        self.retire(count);
        self.unclosed -= count;
        let end = self.len + count;
        debug_assert!(end <= self.words.len() * 64);
        if end / BLOCK_BITS == self.len / BLOCK_BITS {
            self.len = end;
            return;
        }
        while self.len < end {
            let step = (BLOCK_BITS - self.len % BLOCK_BITS).min(end - self.len);
            self.len += step;
            if self.len % BLOCK_BITS == 0 {
                self.complete_block();
            }
        }
    }

    /// Makes room for `bits` bits. Storage past `len` is always zero.
    #[inline(always)]
    fn grow_to(&mut self, bits: usize) {
        let need = bits.div_ceil(64);
        if need > self.words.len() {
            self.words.resize(need, 0);
        }
    }

    #[inline]
    fn retire(&mut self, mut count: usize) {
        while count > 0 {
            let top = *self.stack_block.last().unwrap() as usize;
            let l = self.live[top] as usize;
            if count < l {
                self.live[top] -= count as u16;
                return;
            }
            self.live[top] = 0;
            count -= l;
            self.stack_block.pop();
            self.stack_cum.pop();
        }
    }

    fn complete_block(&mut self) {
        let b = self.len / BLOCK_BITS - 1;
        let (mut e, mut m) = (0i32, 0i32);
        for &w in &self.words[b * BLOCK_WORDS..(b + 1) * BLOCK_WORDS] {
            for k in 0..8 {
                let byte = (w >> (8 * k)) as u8 as usize;
                m = m.min(e + FWD_MIN[byte] as i32);
                e += DELTA[byte] as i32;
            }
        }
        self.tail.push((e - m) as u16);
        self.sample_block(b);
        self.index.start_block(b + 1, self.opens);
        self.live.push(0);
    }

    /// Records the positions of the sampled opens of block `b`, which ends
    /// at the current length.
    fn sample_block(&mut self, b: usize) {
        let start = self.index.block_abs(b) as usize;
        let mut next = start.next_multiple_of(SAMPLE_RATE);
        let mut seen = start;
        for w in b * BLOCK_WORDS..self.len.div_ceil(64) {
            let word = self.words[w];
            let c = word.count_ones() as usize;
            while next < seen + c {
                let r = select_in_word(word, (next - seen) as u32) as usize;
                self.index.samples.push((w * 64 + r) as u64);
                next += SAMPLE_RATE;
            }
            seen += c;
        }
    }

    /// Samples the trailing partial block, once no more bits will follow.
    pub(crate) fn seal(&mut self) {
        if self.len % BLOCK_BITS != 0 {
            self.sample_block(self.len / BLOCK_BITS);
        }
    }

    /// Appends `nbits ≤ 64` bits that do not cross a block boundary and
    /// whose prefixes never close more than is currently unclosed.
    fn put_chunk(&mut self, chunk: u64, nbits: usize) {
        debug_assert!(nbits <= 64 && self.len % BLOCK_BITS + nbits <= BLOCK_BITS);
        let p = self.len;
        self.grow_to(p + nbits);
        let o = p % 64;
        self.words[p / 64] |= chunk << o;
        if o + nbits > 64 {
            self.words[p / 64 + 1] |= chunk >> (64 - o);
        }
        self.opens += chunk.count_ones() as usize;
        let (m, e) = word_excess(chunk, nbits);
        let closed = (-m).max(0) as usize;
        let opened = (e + closed as i64) as usize;
        self.retire(closed);
        self.unclosed -= closed;
        if opened > 0 {
            let b = p / BLOCK_BITS;
            if self.live[b] == 0 {
                self.stack_block.push(b as u32);
                self.stack_cum.push(self.unclosed as u64);
            }
            self.live[b] += opened as u16;
            self.unclosed += opened;
        }
        self.len += nbits;
        if self.len % BLOCK_BITS == 0 {
            self.complete_block();
        }
    }

    /// Appends the 0-based bit range `[from, from + nbits)` `reps` times.
    pub(crate) fn copy_range(&mut self, from: usize, nbits: usize, reps: usize) {
        self.grow_to(self.len + nbits * reps);
        for _ in 0..reps {
            let mut off = 0;
            while off < nbits {
                let take = (nbits - off).min(64).min(BLOCK_BITS - self.len % BLOCK_BITS);
                let chunk = read_bits(&self.words, from + off, take);
                self.put_chunk(chunk, take);
                off += take;
            }
        }
    }

    /// Appends the bits at 1-based positions `src_from..=src_to`,
    /// `repetitions` times.
    pub fn copy_append(&mut self, src_from: usize, src_to: usize, repetitions: usize) -> Result<()> {
        if src_from == 0 || src_from > src_to || src_to > self.len {
            return Err(Error::usage(format!(
                "source range [{src_from}, {src_to}] is not within [1, {}]",
                self.len
            )));
        }
        if repetitions == 0 {
            return Ok(());
        }
        let (mut e, mut m) = (0i64, 0i64);
        for p in src_from - 1..src_to {
            e += delta_of(self.bit(p));
            m = m.min(e);
        }
        let worst = self.unclosed as i64 + m + if e < 0 { e * (repetitions as i64 - 1) } else { 0 };
        if worst < 0 {
            return Err(Error::usage("copy would close more parentheses than are open"));
        }
        self.copy_range(src_from - 1, src_to - src_from + 1, repetitions);
        Ok(())
    }

    /// Number of open bits among positions `1..=pos`.
    pub fn rank_open(&self, pos: usize) -> Result<usize> {
        if pos > self.len {
            return Err(Error::usage(format!("position {pos} beyond length {}", self.len)));
        }
        Ok(self.index.rank(&self.words, pos))
    }

    /// 1-based position of the `k`-th open bit.
    pub fn select_open(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.opens {
            return Err(Error::usage(format!("no open parenthesis number {k}")));
        }
        Ok(self.index.select(&self.words, k - 1) + 1)
    }

    /// 1-based position of the opening parenthesis of node `i`.
    pub fn node_to_open(&self, i: usize) -> Result<usize> {
        self.select_open(i + 1)
    }

    /// Node whose opening parenthesis is at 1-based position `pos`.
    pub fn open_to_node(&self, pos: usize) -> Result<usize> {
        if self.get(pos) != Some(true) {
            return Err(Error::usage(format!("bit {pos} is not an open parenthesis")));
        }
        Ok(self.index.rank(&self.words, pos - 1))
    }

    /// 1-based position of the `k`-th unclosed open, counted from the left.
    pub fn select_uncl(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.unclosed {
            return Err(Error::usage(format!(
                "no unclosed parenthesis number {k} (have {})",
                self.unclosed
            )));
        }
        Ok(self.uncl_from_right(self.unclosed - k + 1) + 1)
    }

    /// 0-based position of the `x`-th unclosed open counted from the right.
    #[inline]
    pub(crate) fn uncl_from_right(&self, x: usize) -> usize {
        let top = *self.stack_block.last().unwrap() as usize;
        if x <= self.live[top] as usize {
            return self.live_in_block(top, x);
        }
        let k = (self.unclosed - x) as u64;
        let e = self.stack_cum.partition_point(|&c| c <= k) - 1;
        let b = self.stack_block[e] as usize;
        let r = (k - self.stack_cum[e]) as usize;
        self.live_in_block(b, self.live[b] as usize - r)
    }

    /// The `x`-th unclosed open of block `b`, counted from the right.
    fn live_in_block(&self, b: usize, x: usize) -> usize {
        let current = b + 1 == self.live.len();
        let (end, unmatched) = if current {
            (self.len, self.live[b] as usize)
        } else {
            ((b + 1) * BLOCK_BITS, self.tail[b] as usize)
        };
        let target = (unmatched - self.live[b] as usize + x) as i64;
        let mut d = 0i64;
        let first = b * BLOCK_WORDS;
        let mut w = (end - 1) / 64;
        let mut nbits = end - w * 64;
        loop {
            if let Some(r) = scan_back(self.words[w], nbits, &mut d, target) {
                return w * 64 + r;
            }
            debug_assert!(w > first);
            w -= 1;
            nbits = 64;
        }
    }
}

impl AppendOnlyBps {
    /// Nodes of the unclosed opens at 0-based positions `from..len`, from
    /// the right, at most `out.len()` of them. Returns how many were found
    /// and whether they are all of them.
    pub(crate) fn unclosed_nodes_after(&self, from: usize, out: &mut [u64]) -> (usize, bool) {
        let (mut d, mut found, mut opens_after) = (0i64, 0usize, 0usize);
        let mut p = self.len;
        while p > from && found < out.len() {
            if p % 8 == 0 && p >= from + 8 {
                let byte = (self.words[(p - 8) / 64] >> ((p - 8) % 64)) as u8;
                if d + (SUF_MAX[byte as usize] as i64) <= found as i64 {
                    d += DELTA[byte as usize] as i64;
                    opens_after += byte.count_ones() as usize;
                    p -= 8;
                    continue;
                }
            }
            p -= 1;
            if self.bit(p) {
                d += 1;
                if d > found as i64 {
                    out[found] = (self.opens - 1 - opens_after) as u64;
                    found += 1;
                }
                opens_after += 1;
            } else {
                d -= 1;
            }
        }
        (found, p <= from && found < out.len())
    }
}

/// Reads `nbits ≤ 64` bits starting at 0-based bit `p`.
#[inline]
pub(crate) fn read_bits(words: &[u64], p: usize, nbits: usize) -> u64 {
    let (w, o) = (p / 64, p % 64);
    let mut v = words[w] >> o;
    if o + nbits > 64 {
        v |= words[w + 1] << (64 - o);
    }
    if nbits < 64 {
        v &= (1u64 << nbits) - 1;
    }
    v
}

/// Walks the low `nbits` bits of `word` from the top down, adding each
/// bit's excess to `d`; returns the bit where `d` first reaches `target`.
#[inline]
fn scan_back(word: u64, nbits: usize, d: &mut i64, target: i64) -> Option<usize> {
    let mut r = nbits;
    while r % 8 != 0 {
        r -= 1;
        *d += delta_of(word >> r & 1 == 1);
        if *d == target {
            return Some(r);
        }
    }
    while r > 0 {
        let byte = (word >> (r - 8)) as u8 as usize;
        if *d + SUF_MAX[byte] as i64 >= target {
            for q in (r - 8..r).rev() {
                *d += delta_of(word >> q & 1 == 1);
                if *d == target {
                    return Some(q);
                }
            }
            unreachable!("suffix maximum promised a hit");
        }
        *d += DELTA[byte] as i64;
        r -= 8;
    }
    None
}
