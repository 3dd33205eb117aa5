//! Small, deliberately naive references shared by the integration tests.
#![allow(dead_code)]

use kron22::Partition;

/// Lattice points of the seven half-planes, by scanning a bounding box.
pub fn brute_polygon_count(r: i64, s: i64, g1: i64, g2: i64) -> u64 {
    let rows: [(i64, i64, i64); 7] = [
        (1, 0, -s),
        (1, 0, -r),
        (1, 1, g1 - r - s),
        (0, 1, 0),
        (-1, 1, g1 + g2),
        (-1, -1, r + s - g2),
        (1, -1, -g1),
    ];
    let m = r + s + g1 + g2 + 1;
    let mut count = 0;
    for x in -m..=m {
        for y in -m..=m {
            if rows.iter().all(|&(a, b, c)| a * x + b * y + c >= 0) {
                count += 1;
            }
        }
    }
    count
}

/// `f^λ` by the hook-length formula.
pub fn hook_dimension(lambda: &Partition) -> u128 {
    let n = lambda.weight() as u128;
    let parts = lambda.parts();
    let conj = |j: usize| parts.iter().filter(|&&p| p as usize > j).count();
    let mut hooks: u128 = 1;
    for (i, &p) in parts.iter().enumerate() {
        for j in 0..p as usize {
            hooks *= ((p as usize - j - 1) + (conj(j) - i - 1) + 1) as u128;
        }
    }
    (1..=n).product::<u128>() / hooks
}
