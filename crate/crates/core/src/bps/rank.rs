//! Blocked rank/select over a packed bit vector.
//!
//! Blocks of 512 bits store their open count relative to the enclosing
//! superblock of 64 blocks, which stores an absolute count. Every 8192nd
//! open bit has its position sampled to seed `select`; samples are taken
//! when a block is completed.

pub(crate) const BLOCK_BITS: usize = 512;
pub(crate) const BLOCK_WORDS: usize = BLOCK_BITS / 64;
pub(crate) const SUPER_BLOCKS: usize = 64;
pub(crate) const SUPER_BITS: usize = BLOCK_BITS * SUPER_BLOCKS;
pub(crate) const SAMPLE_RATE: usize = 8192;

#[derive(Clone, Debug)]
pub(crate) struct RankIndex {
    pub(crate) super_ranks: Vec<u64>,
    pub(crate) block_ranks: Vec<u16>,
    pub(crate) samples: Vec<u64>,
}

impl RankIndex {
    pub(crate) fn with_capacity(bits: usize) -> Self {
        let blocks = bits / BLOCK_BITS + 1;
        let mut idx = RankIndex {
            super_ranks: Vec::with_capacity(blocks / SUPER_BLOCKS + 1),
            block_ranks: Vec::with_capacity(blocks),
            samples: Vec::with_capacity(bits / 2 / SAMPLE_RATE + 1),
        };
        idx.super_ranks.push(0);
        idx.block_ranks.push(0);
        idx
    }

    /// Registers the start of block `b`, preceded by `opens` open bits.
    #[inline]
    pub(crate) fn start_block(&mut self, b: usize, opens: usize) {
        if b % SUPER_BLOCKS == 0 {
            self.super_ranks.push(opens as u64);
        }
        let base = self.super_ranks[b / SUPER_BLOCKS];
        self.block_ranks.push((opens as u64 - base) as u16);
    }

    #[inline]
    pub(crate) fn block_abs(&self, b: usize) -> u64 {
        self.super_ranks[b / SUPER_BLOCKS] + self.block_ranks[b] as u64
    }

    /// Open bits in `[0, p)`. Needs `p` within the registered blocks.
    #[inline]
    pub(crate) fn rank(&self, words: &[u64], p: usize) -> usize {
        let b = p / BLOCK_BITS;
        let mut r = self.block_abs(b) as usize;
        for w in &words[b * BLOCK_WORDS..p / 64] {
            r += w.count_ones() as usize;
        }
        if p % 64 != 0 {
            r += (words[p / 64] & ((1u64 << (p % 64)) - 1)).count_ones() as usize;
        }
        r
    }

    /// Position of the open bit with 0-based index `k`; `k < opens`.
    pub(crate) fn select(&self, words: &[u64], k: usize) -> usize {
        let k64 = k as u64;
        // Samples of the block under construction are not recorded yet;
        // any earlier sample still bounds the search from below.
        let s = (k / SAMPLE_RATE).min(self.samples.len().saturating_sub(1));
        let lo_pos = self.samples.get(s).map_or(0, |&p| p as usize);
        let lo_sb = lo_pos / SUPER_BITS;
        let hi_sb = match self.samples.get(s + 1) {
            Some(&p) => p as usize / SUPER_BITS,
            None => self.super_ranks.len() - 1,
        };
        let sb = lo_sb
            + self.super_ranks[lo_sb..=hi_sb].partition_point(|&r| r <= k64)
            - 1;
        let first = (sb * SUPER_BLOCKS).max(lo_pos / BLOCK_BITS);
        let last = ((sb + 1) * SUPER_BLOCKS).min(self.block_ranks.len());
        let base = self.super_ranks[sb];
        let b = first
            + self.block_ranks[first..last].partition_point(|&r| base + r as u64 <= k64)
            - 1;
        let mut rem = k - self.block_abs(b) as usize;
        let mut w = b * BLOCK_WORDS;
        loop {
            let c = words[w].count_ones() as usize;
            if rem < c {
                return w * 64 + super::tables::select_in_word(words[w], rem as u32) as usize;
            }
            rem -= c;
            w += 1;
        }
    }

    pub(crate) fn size_bits(&self) -> usize {
        self.super_ranks.capacity() * 64 + self.block_ranks.capacity() * 16 + self.samples.capacity() * 64
    }
}
