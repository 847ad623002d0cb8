//! Locating `pss(i)` on the rightmost path.

use crate::textcore::{ComparisonHook, Text};

/// Instrumentation points of a build. Every method defaults to a no-op.
pub trait BuildObserver: ComparisonHook {
    /// An LCE value `lce` between `S_i` and `p_rank`, the path node at
    /// `rank`, was computed during the current search.
    #[inline(always)]
    fn on_probe(&mut self, _rank: usize, _node: usize, _lce: usize) {}
    #[inline(always)]
    fn on_search_end(&mut self, _i: usize, _result: &PssSearchResult) {}
    #[inline(always)]
    fn on_run_skip(&mut self, _skipped: u64) {}
    #[inline(always)]
    fn on_lookahead_skip(&mut self, _skipped: u64) {}
    #[inline(always)]
    fn on_closes(&mut self, _count: u64) {}
}

impl BuildObserver for () {}

impl BuildObserver for crate::BuildStats {
    #[inline]
    fn on_run_skip(&mut self, skipped: u64) {
        self.indices_skipped_run += skipped;
    }
    #[inline]
    fn on_lookahead_skip(&mut self, skipped: u64) {
        self.indices_skipped_lookahead += skipped;
    }
    #[inline]
    fn on_closes(&mut self, count: u64) {
        self.closes_written += count;
    }
}

/// Where `i` attaches, and the largest LCE seen on the way.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PssSearchResult {
    /// Rank of `pss(i)` on the path `p_1 = i - 1 > p_2 > … > p_k = 0`.
    pub m: usize,
    /// `p_m` or `p_{m-1}`, whichever shares the longer prefix with `S_i`
    /// (`p_{m-1}` on ties).
    pub j: usize,
    /// `lce(j, i)`.
    pub ell: usize,
    /// `p_m`, the previous smaller suffix of `i`.
    pub pss: usize,
}

/// Cursor over the rightmost path `P_{i-1}` during one search.
///
/// The search keeps two ranks `u ≤ w` with `S_{p_u} ≻ S_i` (unless `u` is
/// the start rank) and `S_{p_w} ≺ S_i`. Implementations must track both
/// ends, since nodes are addressed relative to them.
pub trait RightmostPath {
    /// Begins the search for `i`. Sets `u = w = 1` and returns `p_1`.
    fn start(&mut self, i: usize) -> usize;
    /// Sets `w = min(u + hops, k)` and returns `(w, p_w)`.
    fn jump(&mut self, hops: usize) -> (usize, usize);
    /// Every node of rank `u..w` was found larger than `S_i`; sets `u = w`.
    fn accept_jump(&mut self);
    /// Called once when the interval `(u, w]` containing `m` is fixed.
    fn begin_narrow(&mut self) {}
    /// `p_{u+1}`; requires `u + 1 < w`.
    fn after_u(&mut self) -> usize;
    fn advance_u(&mut self);
    /// `p_{w-1}`; requires `u + 1 < w`.
    fn before_w(&mut self) -> usize;
    fn retreat_w(&mut self);
    /// Makes `i` a child of `p_m`: ranks `1..m` leave the path.
    fn attach(&mut self, i: usize, m: usize);
}

/// Finds `pss(i)` with LCE work bounded by the largest LCE on the path.
///
/// Along the path the LCE values against `S_i` rise up to rank `m - 1`
/// and fall from rank `m` on, so a probe next to a known value may skip
/// the symbols that value already covers.
#[inline(always)]
pub fn find_pss<P, O>(text: &Text<'_>, path: &mut P, i: usize, obs: &mut O) -> PssSearchResult
where
    P: RightmostPath + ?Sized,
    O: BuildObserver + ?Sized,
{
    let p1 = path.start(i);
    let (l1, less) = text.probe(p1, i, 0, obs);
    obs.on_probe(1, p1, l1);
    if less {
        let r = PssSearchResult { m: 1, j: p1, ell: l1, pss: p1 };
        obs.on_search_end(i, &r);
        return r;
    }
    let (mut u, mut pu, mut lu) = (1, p1, l1);
    let (mut w, mut pw, mut lw);
    loop {
        let (x, px) = path.jump(lu + 1);
        let (lx, less) = text.probe(px, i, 0, obs);
        obs.on_probe(x, px, lx);
        if less {
            (w, pw, lw) = (x, px, lx);
            break;
        }
        path.accept_jump();
        (u, pu, lu) = (x, px, lx);
    }
    path.begin_narrow();
    // (p_{m-1}, ℓ_{m-1}, p_m, ℓ_m, m)
    let (pa, la, pb, lb, m) = loop {
        if w == u + 1 {
            break (pu, lu, pw, lw, w);
        }
        if lu < lw {
            let px = path.after_u();
            let (lx, less) = text.probe(px, i, lu, obs);
            obs.on_probe(u + 1, px, lx);
            if less {
                break (pu, lu, px, lx, u + 1);
            }
            path.advance_u();
            (u, pu, lu) = (u + 1, px, lx);
        } else {
            let px = path.before_w();
            let (lx, less) = text.probe(px, i, lw, obs);
            obs.on_probe(w - 1, px, lx);
            if !less {
                break (px, lx, pw, lw, w);
            }
            path.retreat_w();
            (w, pw, lw) = (w - 1, px, lx);
        }
    };
    let (j, ell) = if la >= lb { (pa, la) } else { (pb, lb) };
    let r = PssSearchResult { m, j, ell, pss: pb };
    obs.on_search_end(i, &r);
    r
}

/// A rightmost path held as an explicit list, for experiments and tests.
#[derive(Clone, Debug)]
pub struct VecPath {
    /// `p_1, p_2, …, p_k` in descending order, ending with `0`.
    nodes: Vec<usize>,
    u: usize,
    w: usize,
}

impl VecPath {
    pub fn new(nodes: Vec<usize>) -> Self {
        assert_eq!(nodes.last(), Some(&0), "the path ends at the root");
        VecPath { nodes, u: 1, w: 1 }
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    fn at(&self, rank: usize) -> usize {
        self.nodes[rank - 1]
    }
}

impl RightmostPath for VecPath {
    fn start(&mut self, _i: usize) -> usize {
        self.u = 1;
        self.w = 1;
        self.at(1)
    }
    fn jump(&mut self, hops: usize) -> (usize, usize) {
        self.w = (self.u + hops).min(self.nodes.len());
        (self.w, self.at(self.w))
    }
    fn accept_jump(&mut self) {
        self.u = self.w;
    }
    fn after_u(&mut self) -> usize {
        self.at(self.u + 1)
    }
    fn advance_u(&mut self) {
        self.u += 1;
    }
    fn before_w(&mut self) -> usize {
        self.at(self.w - 1)
    }
    fn retreat_w(&mut self) {
        self.w -= 1;
    }
    fn attach(&mut self, i: usize, m: usize) {
        self.nodes.drain(..m - 1);
        self.nodes.insert(0, i);
    }
}
