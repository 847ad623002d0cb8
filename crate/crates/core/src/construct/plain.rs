use super::search::RightmostPath;
use super::{Frontier, RunDirection, RunGeometry, Slot};

/// The output array doubles as path storage: entries of nodes on the
/// rightmost path hold `pss`, all others hold their final `λ`.
///
/// Narrowing the candidate interval `(u, w]` needs both neighbours of each
/// end. Before narrowing, each interior node of the interval stores the
/// XOR of its two path neighbours, so the list can be walked from either
/// end while only the two end pairs live in registers.
pub(crate) struct PlainFrontier<'a, T: Slot> {
    a: &'a mut [T],
    i: usize,
    u: usize,
    w: usize,
    pu: usize,
    pw: usize,
    /// `p_{u+1}` and `p_{w-1}` once narrowing has begun.
    pu_next: usize,
    pw_prev: usize,
}

impl<'a, T: Slot> PlainFrontier<'a, T> {
    pub(crate) fn new(a: &'a mut [T]) -> Self {
        PlainFrontier { a, i: 0, u: 1, w: 1, pu: 0, pw: 0, pu_next: 0, pw_prev: 0 }
    }

    #[inline(always)]
    fn get(&self, x: usize) -> usize {
        debug_assert!((1..=self.a.len()).contains(&x));
        // SAFETY: only nodes `1..=i` of the path under construction are
        // touched, and `i ≤ n = a.len()`.
        unsafe { self.a.get_unchecked(x - 1).to_usize() }
    }

    #[inline(always)]
    fn set(&mut self, x: usize, v: usize) {
        debug_assert!((1..=self.a.len()).contains(&x));
        // SAFETY: as in `get`.
        unsafe { *self.a.get_unchecked_mut(x - 1) = T::from_usize(v) }
    }

    #[inline(always)]
    fn retire(&mut self, x: usize) {
        self.set(x, self.i - x);
    }
}

impl<T: Slot> RightmostPath for PlainFrontier<'_, T> {
    #[inline]
    fn start(&mut self, i: usize) -> usize {
        self.i = i;
        self.u = 1;
        self.w = 1;
        self.pu = i - 1;
        self.pw = i - 1;
        i - 1
    }

    #[inline]
    fn jump(&mut self, hops: usize) -> (usize, usize) {
        let mut x = self.pu;
        let mut steps = 0;
        while steps < hops && x != 0 {
            x = self.get(x);
            steps += 1;
        }
        self.w = self.u + steps;
        self.pw = x;
        (self.w, x)
    }

    #[inline]
    fn accept_jump(&mut self) {
        let mut x = self.pu;
        while x != self.pw {
            let next = self.get(x);
            self.retire(x);
            x = next;
        }
        self.u = self.w;
        self.pu = self.pw;
    }

    #[inline]
    fn begin_narrow(&mut self) {
        if self.w - self.u < 2 {
            self.pu_next = self.pw;
            self.pw_prev = self.pu;
            return;
        }
        let mut prev = self.pu;
        let mut cur = self.get(prev);
        self.pu_next = cur;
        while cur != self.pw {
            let next = self.get(cur);
            self.set(cur, prev ^ next);
            prev = cur;
            cur = next;
        }
        self.pw_prev = prev;
    }

    #[inline]
    fn after_u(&mut self) -> usize {
        self.pu_next
    }

    #[inline]
    fn advance_u(&mut self) {
        let old = self.pu;
        self.retire(old);
        self.pu = self.pu_next;
        self.pu_next = self.get(self.pu) ^ old;
        self.u += 1;
    }

    #[inline]
    fn before_w(&mut self) -> usize {
        self.pw_prev
    }

    #[inline]
    fn retreat_w(&mut self) {
        let old = self.pw;
        self.pw = self.pw_prev;
        self.pw_prev = self.get(self.pw) ^ old;
        self.set(self.pw, old);
        self.w -= 1;
    }

    #[inline]
    fn attach(&mut self, i: usize, m: usize) {
        if m == 1 {
            self.set(i, i - 1);
            return;
        }
        let pu = self.pu;
        self.retire(pu);
        if m == self.w {
            // Ranks u+1..w-1 close too; decode them left to right.
            let (mut prev, mut cur) = (pu, self.pu_next);
            while cur != self.pw {
                let next = self.get(cur) ^ prev;
                self.retire(cur);
                prev = cur;
                cur = next;
            }
            self.set(i, self.pw);
        } else {
            debug_assert_eq!(m, self.u + 1);
            // Ranks u+1..w-1 stay; restore their pointers right to left.
            let (mut next, mut cur) = (self.pw, self.pw_prev);
            for _ in self.u + 1..self.w {
                let prev = self.get(cur) ^ next;
                self.set(cur, next);
                next = cur;
                cur = prev;
            }
            self.set(i, self.pu_next);
        }
    }
}

impl<T: Slot> Frontier for PlainFrontier<'_, T> {
    fn extend_run(&mut self, g: &RunGeometry) -> u64 {
        let (j, p) = (g.first, g.mu_len);
        let i = j + p;
        let pss_i = self.get(i);
        // Repetition x + 1 is built after r_x; node y lives at index y - 1.
        for x in 2..g.t {
            let r = g.rep(x);
            self.a.copy_within(j..i - 1, r);
            match g.direction {
                RunDirection::Increasing => self.set(r + p, r),
                RunDirection::Decreasing => self.set(r, p),
            }
        }
        match g.direction {
            RunDirection::Increasing => ((g.t - 2) * (p - 1)) as u64,
            RunDirection::Decreasing => {
                self.set(g.rep(g.t), pss_i);
                ((g.t - 2) * p) as u64
            }
        }
    }

    fn copy_nodes(&mut self, j: usize, i: usize, count: usize) -> u64 {
        let last = j + count - 1;
        let mut spine = i;
        let mut spine_nodes = 0;
        for d in 1..count {
            let v = self.get(j + d);
            if j + d + v > last {
                self.set(i + d, spine);
                spine = i + d;
                spine_nodes += 1;
            } else {
                self.set(i + d, v);
            }
        }
        (count - 1 - spine_nodes) as u64
    }

    fn finish(&mut self) -> u64 {
        let n = self.a.len();
        let mut x = n;
        let mut closed = 1;
        while x != 0 {
            let next = self.get(x);
            self.set(x, n - x + 1);
            x = next;
            closed += 1;
        }
        closed
    }
}
