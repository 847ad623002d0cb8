use super::search::RightmostPath;
use super::{Frontier, RunDirection, RunGeometry};
use crate::bps::AppendOnlyBps;

const CACHE: usize = 512;

/// Rightmost path read off the unclosed parentheses of the sequence under
/// construction: `p_x` is the node of the `x`-th unclosed open from the
/// right.
///
/// The topmost path nodes are also kept in a fixed-size ring, so most
/// probes avoid the select-unclosed and rank queries. The ring always holds
/// a contiguous top segment `p_1..p_cached` of the path.
pub(crate) struct SuccinctFrontier {
    pub(crate) bps: AppendOnlyBps,
    k: usize,
    u: usize,
    w: usize,
    ring: [u64; CACHE],
    head: usize,
    cached: usize,
}

impl SuccinctFrontier {
    pub(crate) fn new(n: usize) -> Self {
        let mut bps = AppendOnlyBps::with_capacity(2 * n + 2);
        bps.append_open();
        let mut f = SuccinctFrontier { bps, k: 1, u: 1, w: 1, ring: [0; CACHE], head: 0, cached: 0 };
        f.push_cached(0);
        f
    }

    #[inline(always)]
    fn push_cached(&mut self, node: usize) {
        self.head = (self.head + 1) % CACHE;
        self.ring[self.head] = node as u64;
        self.cached = (self.cached + 1).min(CACHE);
    }

    #[inline(always)]
    fn pop_cached(&mut self, count: usize) {
        if count >= self.cached {
            self.cached = 0;
        } else {
            self.cached -= count;
            self.head = (self.head + CACHE - count) % CACHE;
        }
    }

    #[inline(always)]
    fn node(&self, rank: usize) -> usize {
        if rank <= self.cached {
            return self.ring[(self.head + CACHE + 1 - rank) % CACHE] as usize;
        }
        let pos = self.bps.uncl_from_right(rank);
        self.bps.index.rank(&self.bps.words, pos)
    }

    #[inline]
    fn open_of(&self, node: usize) -> usize {
        self.bps.index.select(&self.bps.words, node)
    }
}

impl RightmostPath for SuccinctFrontier {
    #[inline]
    fn start(&mut self, i: usize) -> usize {
        self.k = self.bps.unclosed();
        self.u = 1;
        self.w = 1;
        i - 1
    }

    #[inline]
    fn jump(&mut self, hops: usize) -> (usize, usize) {
        self.w = (self.u + hops).min(self.k);
        (self.w, self.node(self.w))
    }

    #[inline]
    fn accept_jump(&mut self) {
        self.u = self.w;
    }

    #[inline]
    fn after_u(&mut self) -> usize {
        self.node(self.u + 1)
    }

    #[inline]
    fn advance_u(&mut self) {
        self.u += 1;
    }

    #[inline]
    fn before_w(&mut self) -> usize {
        self.node(self.w - 1)
    }

    #[inline]
    fn retreat_w(&mut self) {
        self.w -= 1;
    }

    #[inline(always)]
    fn attach(&mut self, i: usize, m: usize) {
        self.bps.push_closes(m - 1);
        self.bps.push_open();
        self.pop_cached(m - 1);
        self.push_cached(i);
    }
}

impl Frontier for SuccinctFrontier {
    fn extend_run(&mut self, g: &RunGeometry) -> u64 {
        // The open of `i` is the last bit written.
        let o_j = self.open_of(g.first);
        let o_i = self.bps.len() - 1;
        let nbits = o_i - o_j;
        self.bps.copy_range(o_j + 1, nbits, g.t - 2);
        match g.direction {
            RunDirection::Increasing => {
                for x in (g.t + 1).saturating_sub(CACHE).max(3)..=g.t {
                    self.push_cached(g.rep(x));
                }
            }
            RunDirection::Decreasing => {
                self.pop_cached(1);
                self.push_cached(g.rep(g.t));
            }
        }
        debug_assert_eq!(
            g.direction == RunDirection::Decreasing,
            nbits - g.mu_len == g.mu_len
        );
        ((nbits - g.mu_len) * (g.t - 2)) as u64
    }

    fn copy_nodes(&mut self, j: usize, _i: usize, count: usize) -> u64 {
        if count < 2 {
            return 0;
        }
        let from = self.open_of(j) + 1;
        let to = self.open_of(j + count - 1);
        let start = self.bps.len();
        self.bps.copy_range(from, to + 1 - from, 1);
        let mut spine = [0u64; CACHE];
        let (found, complete) = self.bps.unclosed_nodes_after(start, &mut spine);
        if !complete {
            self.cached = 0;
        }
        for &node in spine[..found].iter().rev() {
            self.push_cached(node as usize);
        }
        (to + 1 - from - (count - 1)) as u64
    }

    fn finish(&mut self) -> u64 {
        let open = self.bps.unclosed();
        self.bps.push_closes(open);
        self.cached = 0;
        open as u64
    }
}
