//! Reference implementations computed directly from the definitions.
//!
//! Nothing here is shared with the fast builders: suffixes are compared one
//! symbol at a time. The routines are quadratic in the worst case and meant
//! for texts of up to roughly `10^5` symbols.

macro_rules! position_array {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, Debug, PartialEq, Eq, Default)]
        pub struct $name(Vec<usize>);

        impl $name {
            /// Value at 1-based position `i`.
            pub fn get(&self, i: usize) -> usize {
                self.0[i - 1]
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            /// Values for positions `1..=n` in order.
            pub fn as_slice(&self) -> &[usize] {
                &self.0
            }

            pub fn into_vec(self) -> Vec<usize> {
                self.0
            }
        }

        impl From<Vec<usize>> for $name {
            fn from(v: Vec<usize>) -> Self {
                $name(v)
            }
        }
    };
}

position_array!(
    /// `pss(i)`: largest `j < i` with `S_j ≺ S_i`, or `0`.
    PssArray
);
position_array!(
    /// `nss(i)`: smallest `j > i` with `S_j ≺ S_i`, or `n + 1`.
    NssArray
);
position_array!(
    /// `λ[i]`: length of the longest Lyndon word starting at `i`.
    LyndonValues
);

/// Longest common prefix of the 1-based suffixes `S_a` and `S_b`, and
/// whether `S_a ≺ S_b`. A suffix that runs out first is the smaller one.
fn compare(text: &[u8], a: usize, b: usize) -> (usize, bool) {
    let (x, y) = (&text[a - 1..], &text[b - 1..]);
    let l = x.iter().zip(y).take_while(|(p, q)| p == q).count();
    let less = match (x.get(l), y.get(l)) {
        (Some(p), Some(q)) => p < q,
        (None, _) => true,
        (Some(_), None) => false,
    };
    (l, less)
}

fn smaller(text: &[u8], a: usize, b: usize) -> bool {
    compare(text, a, b).1
}

/// Scans leftwards from `i - 1`. A candidate `j` with `S_j ≻ S_i` lets the
/// scan jump to `pss(j)`: every suffix strictly between them is larger than
/// `S_j`, hence larger than `S_i`.
pub fn pss_bruteforce(text: &[u8]) -> PssArray {
    let n = text.len();
    let mut pss = vec![0usize; n + 1];
    for i in 1..=n {
        let mut j = i - 1;
        while j > 0 && !smaller(text, j, i) {
            j = pss[j];
        }
        pss[i] = j;
    }
    pss.remove(0);
    PssArray(pss)
}

/// Mirror image of [`pss_bruteforce`], scanning rightwards with jumps to
/// `nss(j)` over candidates that are larger than `S_i`.
pub fn nss_bruteforce(text: &[u8]) -> NssArray {
    let n = text.len();
    let mut nss = vec![n + 1; n + 2];
    for i in (1..=n).rev() {
        let mut j = i + 1;
        while j <= n && !smaller(text, j, i) {
            j = nss[j];
        }
        nss[i] = j;
    }
    NssArray(nss[1..=n].to_vec())
}

/// For each `i`, tests every candidate length against every proper suffix
/// start `k`. With `L = lce(k, i)`:
///
/// * if `S_k ≺ S_i`, no word `S[i..i+ℓ)` with `ℓ > k - i` is Lyndon, and no
///   larger `k` needs to be examined;
/// * otherwise `S[k..i+ℓ)` is a prefix of `S_i` exactly for
///   `ℓ ∈ (k - i, k - i + L]`, which rules those lengths out.
///
/// The answer is the largest length that survives.
pub fn lyndon_array_bruteforce(text: &[u8]) -> LyndonValues {
    let n = text.len();
    let mut out = Vec::with_capacity(n);
    let mut excluded: Vec<(usize, usize)> = Vec::new();
    for i in 1..=n {
        excluded.clear();
        let mut bound = n - i + 1;
        for k in i + 1..=n {
            let (lce, less) = compare(text, k, i);
            if less {
                bound = k - i;
                break;
            }
            excluded.push((k - i + 1, k - i + lce));
        }
        let mut best = 1;
        for len in (1..=bound).rev() {
            if excluded.iter().all(|&(lo, hi)| len < lo || len > hi) {
                best = len;
                break;
            }
        }
        out.push(best);
    }
    LyndonValues(out)
}

/// Balanced parentheses of the tree with `parent(i) = pss(i)`, children in
/// ascending order, written in preorder; `true` is an opening parenthesis.
pub fn bps_bruteforce(text: &[u8]) -> Vec<bool> {
    let pss = pss_bruteforce(text);
    let n = text.len();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for i in 1..=n {
        children[pss.get(i)].push(i);
    }
    let mut bits = Vec::with_capacity(2 * n + 2);
    // Stack of (node, index of the next child to visit).
    let mut stack = vec![(0usize, 0usize)];
    bits.push(true);
    while let Some(top) = stack.last_mut() {
        let (node, next) = *top;
        if next < children[node].len() {
            top.1 += 1;
            stack.push((children[node][next], 0));
            bits.push(true);
        } else {
            stack.pop();
            bits.push(false);
        }
    }
    bits
}

/// The Lyndon factorization found by trying every decomposition, returned
/// as 1-based end positions. Exponential; for `n ≤ 16`.
pub fn lyndon_factorization_bruteforce(text: &[u8]) -> Vec<usize> {
    let n = text.len();
    assert!(n <= 20, "exhaustive factorization is exponential");
    if n == 0 {
        return Vec::new();
    }
    let mut found = None;
    // Bit k of `mask` set means a factor boundary after symbol k + 1.
    for mask in 0u32..(1 << (n - 1)) {
        let mut ends: Vec<usize> = (0..n - 1).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
        ends.push(n);
        let mut start = 0;
        let mut prev: Option<&[u8]> = None;
        let mut ok = true;
        for &e in &ends {
            let f = &text[start..e];
            if !is_lyndon_bruteforce(f) || prev.is_some_and(|p| p < f) {
                ok = false;
                break;
            }
            prev = Some(f);
            start = e;
        }
        if ok {
            assert!(found.is_none(), "factorization is not unique");
            found = Some(ends);
        }
    }
    found.expect("every string has a Lyndon factorization")
}

/// Whether `w` is smaller than each of its proper non-empty suffixes,
/// checked suffix by suffix.
pub fn is_lyndon_bruteforce(w: &[u8]) -> bool {
    !w.is_empty() && (2..=w.len()).all(|k| smaller(w, 1, k))
}

/// Whether `s` has the form `suf(μ)·μ^t·pre(μ)` with `μ` Lyndon, `t ≥ 2`,
/// `suf(μ)` a proper suffix and `pre(μ)` a proper prefix of `μ`. Returns
/// `(|μ|, |suf(μ)| + 1)`.
pub fn extended_run_bruteforce(s: &[u8]) -> Option<(usize, usize)> {
    let n = s.len();
    for p in 1..=n / 2 {
        if (p..n).any(|x| s[x] != s[x - p]) {
            continue;
        }
        for off in 0..p {
            if n - off >= 2 * p && is_lyndon_bruteforce(&s[off..off + p]) {
                return Some((p, off + 1));
            }
        }
    }
    None
}
