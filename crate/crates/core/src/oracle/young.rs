//! Kronecker coefficients with two two-row arguments through complete
//! homogeneous products and Kostka numbers.
//!
//! `s_(n-r,r) = h_(n-r) h_r - h_(n-r+1) h_(r-1)`, and the Kronecker product
//! `h_(n-a,a) * h_(n-b,b)` is the sum over 2×2 contingency tables of
//! `h_(n-a-b+t, a-t, b-t, t)`. Pairing with `s_λ` leaves Kostka numbers
//! `K_{λ,M}` for contents `M` with at most four parts.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::partition::Partition;

/// Shape and sorted content, both padded to four parts.
type KostkaKey = ([u32; 4], [u32; 4]);

#[derive(Default)]
pub(crate) struct KostkaCache {
    memo: Mutex<HashMap<KostkaKey, u64>>,
}

impl KostkaCache {
    /// `K_{λ,M}` for a content with at most four parts (any order).
    pub fn kostka(&self, lambda: &Partition, content: [u32; 4]) -> u64 {
        if lambda.length() > 4 {
            return 0;
        }
        let mut c = content;
        c.sort_unstable_by(|a, b| b.cmp(a));
        let l = [
            lambda.part(0),
            lambda.part(1),
            lambda.part(2),
            lambda.part(3),
        ];
        if l.iter().map(|&x| u64::from(x)).sum::<u64>()
            != c.iter().map(|&x| u64::from(x)).sum::<u64>()
        {
            return 0;
        }
        if let Some(&v) = self.memo.lock().expect("kostka memo").get(&(l, c)) {
            return v;
        }
        let v = kostka4(l, c);
        self.memo.lock().expect("kostka memo").insert((l, c), v);
        v
    }
}

/// Counts Gelfand–Tsetlin patterns with top row `l` and row sums given by
/// `c`: `∅ ⊂ (c1) ⊂ μ² ⊂ μ³ ⊂ l`, consecutive rows interlacing.
fn kostka4(l: [u32; 4], c: [u32; 4]) -> u64 {
    let [c1, c2, c3, _] = c.map(i64::from);
    let l = l.map(i64::from);
    let s3 = c1 + c2 + c3;
    let s2 = c1 + c2;
    let mut total = 0u64;
    for m0 in l[1]..=l[0] {
        for m1 in l[2]..=l[1] {
            let m2 = s3 - m0 - m1;
            if m2 < l[3] || m2 > l[2] {
                continue;
            }
            // μ² = (s2 - y, y) interlacing μ³ and containing (c1).
            let lo = m2.max(s2 - m0).max(0);
            let hi = m1.min(s2 - m1).min(c1).min(c2);
            if hi >= lo {
                total += (hi - lo + 1) as u64;
            }
        }
    }
    total
}

/// `g_{(n-r,r),(n-s,s)}^λ`.
pub(crate) fn kron_two_two_rows(
    k: &KostkaCache,
    lambda: &Partition,
    n: u32,
    r: u32,
    s: u32,
) -> i128 {
    let mut total: i128 = 0;
    let terms = |x: u32| {
        let mut v = vec![(x, 1i128)];
        if x > 0 {
            v.push((x - 1, -1));
        }
        v
    };
    for (a, sa) in terms(r) {
        for (b, sb) in terms(s) {
            let t_lo = (a + b).saturating_sub(n);
            for t in t_lo..=a.min(b) {
                let content = [n + t - a - b, a - t, b - t, t];
                total += sa * sb * i128::from(k.kostka(lambda, content));
            }
        }
    }
    total
}
