//! Per-byte excess tables. Bit 0 of a byte is the earliest parenthesis.

const fn bit_delta(v: usize, r: usize) -> i8 {
    if v >> r & 1 == 1 {
        1
    } else {
        -1
    }
}

const fn build_delta() -> [i8; 256] {
    let mut t = [0i8; 256];
    let mut v = 0;
    while v < 256 {
        t[v] = 2 * (v as u32).count_ones() as i8 - 8;
        v += 1;
    }
    t
}

/// Smallest excess over the non-empty prefixes of the byte.
const fn build_fwd_min() -> [i8; 256] {
    let mut t = [0i8; 256];
    let mut v = 0;
    while v < 256 {
        let (mut e, mut m, mut r) = (0i8, i8::MAX, 0);
        while r < 8 {
            e += bit_delta(v, r);
            if e < m {
                m = e;
            }
            r += 1;
        }
        t[v] = m;
        v += 1;
    }
    t
}

/// Largest excess over the non-empty suffixes of the byte.
const fn build_suf_max() -> [i8; 256] {
    let mut t = [0i8; 256];
    let mut v = 0;
    while v < 256 {
        let (mut e, mut m, mut r) = (0i8, i8::MIN, 8);
        while r > 0 {
            r -= 1;
            e += bit_delta(v, r);
            if e > m {
                m = e;
            }
        }
        t[v] = m;
        v += 1;
    }
    t
}

pub(crate) static DELTA: [i8; 256] = build_delta();
pub(crate) static FWD_MIN: [i8; 256] = build_fwd_min();
pub(crate) static SUF_MAX: [i8; 256] = build_suf_max();

#[inline]
pub(crate) fn delta_of(bit: bool) -> i64 {
    if bit {
        1
    } else {
        -1
    }
}

/// `(min over non-empty prefixes, total)` excess of the low `nbits` bits.
#[inline]
pub(crate) fn word_excess(word: u64, nbits: usize) -> (i64, i64) {
    let (mut e, mut m) = (0i64, i64::MAX);
    let full = nbits / 8;
    for k in 0..full {
        let b = (word >> (8 * k)) as u8 as usize;
        m = m.min(e + FWD_MIN[b] as i64);
        e += DELTA[b] as i64;
    }
    for r in 8 * full..nbits {
        e += delta_of(word >> r & 1 == 1);
        m = m.min(e);
    }
    (m, e)
}

/// Index of the `r`-th (0-based) set bit of `w`; `r < popcount(w)`.
#[inline]
pub(crate) fn select_in_word(mut w: u64, mut r: u32) -> u32 {
    let mut base = 0;
    loop {
        let c = (w as u8).count_ones();
        if r < c {
            break;
        }
        r -= c;
        w >>= 8;
        base += 8;
    }
    for _ in 0..r {
        w &= w - 1;
    }
    base + w.trailing_zeros()
}
