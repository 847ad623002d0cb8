//! Linear-time builders.
//!
//! Position `i` is processed by finding `pss(i)` on the rightmost path of
//! the tree built so far, closing the path nodes above it and opening `i`.
//! Two shortcuts bound the total LCE work by `O(n)`:
//!
//! * **Run extension.** When `ℓ = lce(j, i) ≥ 2(i - j)`, the text from `j`
//!   is a run of period `i - j`, and the structure of one period repeats
//!   for the remaining `⌊ℓ/(i-j)⌋ - 1` periods; it is copied wholesale.
//! * **Look-ahead.** Otherwise, when `⌊ℓ/4⌋ ≥ 2`, the structure of the
//!   `⌊ℓ/4⌋` nodes starting at `j` repeats at `i`, unless the window
//!   `S[j+⌊ℓ/4⌋..j+ℓ)` is a periodic run that reaches further left, in which
//!   case only the part before that run's second period is copied.

mod plain;
mod search;
mod succinct;

pub use search::{find_pss, BuildObserver, PssSearchResult, RightmostPath, VecPath};

use crate::bps::AppendOnlyBps;
use crate::duval;
use crate::textcore::Text;
use plain::PlainFrontier;
use succinct::SuccinctFrontier;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunDirection {
    /// `S_{r_1} ≺ S_{r_2}`: each repetition start is the parent of the next.
    Increasing,
    /// `S_{r_1} ≻ S_{r_2}`: all repetition starts share one parent.
    Decreasing,
}

/// A run `μ^t·pre(μ)` starting at `first`, found while processing
/// `first + mu_len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunGeometry {
    pub mu_len: usize,
    pub t: usize,
    pub first: usize,
    pub direction: RunDirection,
}

impl RunGeometry {
    /// Start `r_x` of the `x`-th repetition, 1-based.
    pub fn rep(&self, x: usize) -> usize {
        self.first + (x - 1) * self.mu_len
    }
}

/// How many nodes a look-ahead copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LookaheadOutcome {
    /// Copy `len = ⌊ℓ/4⌋` nodes.
    FullCopy { len: usize },
    /// Copy `chi` nodes. The run with period `|μ|` starting at text
    /// position `h` continues past `i + chi`, where the next search
    /// recovers it through run extension.
    RunHandoff { chi: usize, h: usize },
}

impl LookaheadOutcome {
    pub fn copied(&self) -> usize {
        match *self {
            LookaheadOutcome::FullCopy { len } => len,
            LookaheadOutcome::RunHandoff { chi, .. } => chi,
        }
    }

    /// `lce(h, i + χ)` for a handoff: the extension the next search sees.
    pub fn ell_prime(&self, text: &Text<'_>, i: usize) -> Option<usize> {
        match *self {
            LookaheadOutcome::FullCopy { .. } => None,
            LookaheadOutcome::RunHandoff { chi, h } => text.lce(h, i + chi, 0).ok(),
        }
    }
}

/// Decides the look-ahead copy for `i` with largest-LCE partner `j < i`
/// and `ℓ = lce(j, i) < 2(i - j)`, `⌊ℓ/4⌋ ≥ 2`.
pub fn plan_lookahead<H>(text: &Text<'_>, i: usize, j: usize, ell: usize, hook: &mut H) -> LookaheadOutcome
where
    H: crate::textcore::ComparisonHook + ?Sized,
{
    let q = ell / 4;
    let s = text.as_bytes();
    let full = LookaheadOutcome::FullCopy { len: q };
    let Some(run) = duval::detect_counted(&s[j + q - 1..j + ell - 1], hook) else {
        return full;
    };
    let p = run.period;
    let f = j + q + run.first_full_start - 1;
    // Extend the run leftwards, no further than j.
    let mut y = f;
    while y > j && s[y - 2] == s[y - 2 + p] {
        y -= 1;
    }
    hook.on_comparisons((f - y + 1) as u64);
    let h = f - (f - y) / p * p - j;
    if h + p >= q {
        return full;
    }
    LookaheadOutcome::RunHandoff { chi: h + p, h: i + h }
}

/// Operations the main loop needs beyond path access.
pub(crate) trait Frontier: RightmostPath {
    /// Copies the structure of `(r_1, r_2]` onto `(r_2, r_t]`; returns the
    /// closing parentheses written.
    fn extend_run(&mut self, g: &RunGeometry) -> u64;
    /// Reproduces nodes `j+1..j+count-1` as `i+1..i+count-1`; returns the
    /// closing parentheses written.
    fn copy_nodes(&mut self, j: usize, i: usize, count: usize) -> u64;
    /// Closes the remaining path; returns the closing parentheses written.
    fn finish(&mut self) -> u64;
}

fn drive<F: Frontier, O: BuildObserver + ?Sized>(text: &Text<'_>, f: &mut F, obs: &mut O) {
    let n = text.len();
    let s = text.as_bytes();
    let mut i = 1;
    while i <= n {
        // Fast path for m = 1 decided by the first symbol: the previous
        // suffix is smaller, nothing closes and no extension can follow.
        if i >= 2 && s[i - 2] < s[i - 1] {
            obs.on_comparisons(1);
            obs.on_probe(1, i - 1, 0);
            obs.on_search_end(i, &PssSearchResult { m: 1, j: i - 1, ell: 0, pss: i - 1 });
            f.attach(i, 1);
            i += 1;
            continue;
        }
        let r = find_pss(text, f, i, obs);
        f.attach(i, r.m);
        obs.on_closes((r.m - 1) as u64);
        let (j, ell) = (r.j, r.ell);
        if j > 0 && ell >= 2 * (i - j) {
            let p = i - j;
            let g = RunGeometry {
                mu_len: p,
                t: ell / p + 1,
                first: j,
                direction: if j == r.pss { RunDirection::Increasing } else { RunDirection::Decreasing },
            };
            obs.on_closes(f.extend_run(&g));
            let last = g.rep(g.t);
            obs.on_run_skip((last - i) as u64);
            i = last + 1;
        } else if ell / 4 >= 2 {
            let plan = plan_lookahead(text, i, j, ell, obs);
            let c = plan.copied();
            obs.on_closes(f.copy_nodes(j, i, c));
            obs.on_lookahead_skip((c - 1) as u64);
            i += c;
        } else {
            i += 1;
        }
    }
    obs.on_closes(f.finish());
}

/// Unsigned integer type of a plain Lyndon array entry.
pub trait Slot: Copy + Default + Send + Sync + std::fmt::Debug + 'static {
    const BYTES: usize;
    fn from_usize(v: usize) -> Self;
    fn to_usize(self) -> usize;
}

impl Slot for u32 {
    const BYTES: usize = 4;
    #[inline(always)]
    fn from_usize(v: usize) -> Self {
        v as u32
    }
    #[inline(always)]
    fn to_usize(self) -> usize {
        self as usize
    }
}

impl Slot for u64 {
    const BYTES: usize = 8;
    #[inline(always)]
    fn from_usize(v: usize) -> Self {
        v as u64
    }
    #[inline(always)]
    fn to_usize(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Width {
    W32,
    W64,
}

impl Width {
    /// 32-bit entries suffice below `2^31` symbols.
    pub fn for_len(n: usize) -> Width {
        if (n as u64) < 1 << 31 {
            Width::W32
        } else {
            Width::W64
        }
    }

    pub fn bytes(self) -> usize {
        match self {
            Width::W32 => 4,
            Width::W64 => 8,
        }
    }
}

/// The Lyndon array `λ[1..=n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LyndonArray {
    W32(Vec<u32>),
    W64(Vec<u64>),
}

impl LyndonArray {
    pub fn len(&self) -> usize {
        match self {
            LyndonArray::W32(v) => v.len(),
            LyndonArray::W64(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn width(&self) -> Width {
        match self {
            LyndonArray::W32(_) => Width::W32,
            LyndonArray::W64(_) => Width::W64,
        }
    }

    /// `λ[i]` for 1-based `i`.
    pub fn get(&self, i: usize) -> Option<usize> {
        let k = i.checked_sub(1)?;
        match self {
            LyndonArray::W32(v) => v.get(k).map(|&x| x as usize),
            LyndonArray::W64(v) => v.get(k).map(|&x| x as usize),
        }
    }

    pub fn iter(&self) -> Box<dyn Iterator<Item = usize> + '_> {
        match self {
            LyndonArray::W32(v) => Box::new(v.iter().map(|&x| x as usize)),
            LyndonArray::W64(v) => Box::new(v.iter().map(|&x| x as usize)),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Size of the entries in bytes.
    pub fn byte_len(&self) -> usize {
        self.len() * self.width().bytes()
    }
}

/// Builds the Lyndon array, choosing the entry width from the length.
pub fn build_plain(text: &[u8]) -> LyndonArray {
    build_plain_with(text, &mut ())
}

pub fn build_plain_with<O: BuildObserver + ?Sized>(text: &[u8], obs: &mut O) -> LyndonArray {
    match Width::for_len(text.len()) {
        Width::W32 => {
            let mut a = vec![0u32; text.len()];
            build_plain_into(text, &mut a, obs);
            LyndonArray::W32(a)
        }
        Width::W64 => {
            let mut a = vec![0u64; text.len()];
            build_plain_into(text, &mut a, obs);
            LyndonArray::W64(a)
        }
    }
}

/// Writes `λ` into `out`, which must hold exactly `text.len()` entries wide
/// enough for `text.len()`. Uses no other storage that grows with the text.
pub fn build_plain_into<T: Slot, O: BuildObserver + ?Sized>(text: &[u8], out: &mut [T], obs: &mut O) {
    assert_eq!(out.len(), text.len(), "output length must equal text length");
    assert!(
        T::BYTES >= 8 || (text.len() as u64) < 1 << (8 * T::BYTES - 1),
        "entry type too narrow for the text length"
    );
    let mut f = PlainFrontier::new(out);
    drive(&Text::new(text), &mut f, obs);
}

/// Builds the `2n + 2`-bit parentheses sequence of the previous-smaller-
/// suffix tree.
pub fn build_succinct(text: &[u8]) -> AppendOnlyBps {
    build_succinct_with(text, &mut ())
}

pub fn build_succinct_with<O: BuildObserver + ?Sized>(text: &[u8], obs: &mut O) -> AppendOnlyBps {
    let mut f = SuccinctFrontier::new(text.len());
    drive(&Text::new(text), &mut f, obs);
    f.bps
}
