//! The parametric polygon whose lattice points count reduced Kronecker
//! coefficients `ḡ_{(r),(s)}^{(g1,g2)}`.
//!
//! For `h = (r, s, g1, g2)` the polygon is cut out of the `(X, Y)` plane by
//! seven half-planes `a_i X + b_i Y + c_i(h) >= 0`:
//!
//! | row | `(a, b)`   | `c(h)`          |
//! |-----|------------|-----------------|
//! | 0   | `(1, 0)`   | `-s`            |
//! | 1   | `(1, 0)`   | `-r`            |
//! | 2   | `(1, 1)`   | `g1 - r - s`    |
//! | 3   | `(0, 1)`   | `0`             |
//! | 4   | `(-1, 1)`  | `g1 + g2`       |
//! | 5   | `(-1, -1)` | `r + s - g2`    |
//! | 6   | `(1, -1)`  | `-g1`           |

use serde::{Deserialize, Serialize};

use crate::error::{KronError, Result};
use crate::index::ReducedIndex;

/// The `(a, b)` coefficient pairs of the seven rows.
pub const ROW_COEFFS: [(i64, i64); 7] =
    [(1, 0), (1, 0), (1, 1), (0, 1), (-1, 1), (-1, -1), (1, -1)];

/// The coefficients of `c_i` as a linear form in `(r, s, g1, g2)`.
pub const ROW_CONSTANTS: [[i64; 4]; 7] = [
    [0, -1, 0, 0],
    [-1, 0, 0, 0],
    [-1, -1, 1, 0],
    [0, 0, 0, 0],
    [0, 0, 1, 1],
    [1, 1, 0, -1],
    [0, 0, -1, 0],
];

/// One half-plane `a X + b Y + c >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstraintRow {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl ConstraintRow {
    pub fn holds(&self, x: i64, y: i64) -> bool {
        self.a * x + self.b * y + self.c >= 0
    }
}

/// Value of `c_i` at a raw parameter vector.
pub fn row_constant(i: usize, h: [i64; 4]) -> i64 {
    ROW_CONSTANTS[i].iter().zip(h).map(|(a, x)| a * x).sum()
}

/// The seven rows at `h`, in index order. Any integer vector is accepted.
pub fn polygon_constraints(h: [i64; 4]) -> [ConstraintRow; 7] {
    std::array::from_fn(|i| ConstraintRow {
        a: ROW_COEFFS[i].0,
        b: ROW_COEFFS[i].1,
        c: row_constant(i, h),
    })
}

/// Counts the integer points `(X, Y)` satisfying every row.
///
/// Sweeps `X` over the range allowed by the vertical rows (`b = 0`) and by
/// `X` bounds implied by pairs of rows with opposite `b` signs, intersecting
/// a closed-form `Y` interval per column. Fails with
/// [`KronError::Unbounded`] when the system does not bound `X`.
pub fn count_lattice_points(rows: &[ConstraintRow]) -> Result<u64> {
    let (x_lo, x_hi) = x_range(rows).ok_or(KronError::Unbounded)?;
    let mut total: u64 = 0;
    for x in x_lo..=x_hi {
        if let Some((lo, hi)) = y_interval(rows, x)? {
            total += (hi - lo + 1) as u64;
        }
    }
    Ok(total)
}

/// A finite `X` range outside which the rows have no solution, or `None`
/// when the rows leave `X` unbounded.
fn x_range(rows: &[ConstraintRow]) -> Option<(i64, i64)> {
    let mut lo: Option<i64> = None;
    let mut hi: Option<i64> = None;
    let mut bound = |a: i64, c: i64| {
        // a X + c >= 0
        if a > 0 {
            let v = div_ceil(-c, a);
            lo = Some(lo.map_or(v, |l| l.max(v)));
        } else if a < 0 {
            let v = div_floor(c, -a);
            hi = Some(hi.map_or(v, |h| h.min(v)));
        }
    };
    for row in rows.iter().filter(|r| r.b == 0) {
        bound(row.a, row.c);
    }
    // Eliminating Y from a pair with b of opposite signs gives
    // (a1 |b2| + a2 b1) X + (c1 |b2| + c2 b1) >= 0.
    for p in rows.iter().filter(|r| r.b > 0) {
        for q in rows.iter().filter(|r| r.b < 0) {
            bound(p.a * -q.b + q.a * p.b, p.c * -q.b + q.c * p.b);
        }
    }
    Some((lo?, hi?))
}

fn y_interval(rows: &[ConstraintRow], x: i64) -> Result<Option<(i64, i64)>> {
    let mut lo: Option<i64> = None;
    let mut hi: Option<i64> = None;
    for row in rows {
        let v = row.a * x + row.c;
        match row.b.signum() {
            0 => {
                if v < 0 {
                    return Ok(None);
                }
            }
            1 => {
                let bound = div_ceil(-v, row.b);
                lo = Some(lo.map_or(bound, |l| l.max(bound)));
            }
            _ => {
                let bound = div_floor(v, -row.b);
                hi = Some(hi.map_or(bound, |h| h.min(bound)));
            }
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) => Ok((l <= h).then_some((l, h))),
        _ => Err(KronError::Unbounded),
    }
}

fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if a % b != 0 && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -div_floor(-a, b)
}

/// `ḡ_{(r),(s)}^{(g1,g2)}` by counting lattice points of the polygon.
pub fn reduced_kron_count(h: ReducedIndex) -> Result<u64> {
    if !h.is_valid() {
        return Err(KronError::InvalidReducedIndex(h.point()));
    }
    count_lattice_points(&polygon_constraints(h.point()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(r: i64, s: i64, g1: i64, g2: i64) -> u64 {
        reduced_kron_count(ReducedIndex::new(r, s, g1, g2).unwrap()).unwrap()
    }

    fn brute(rows: &[ConstraintRow], span: i64) -> u64 {
        let mut n = 0;
        for x in -span..=span {
            for y in -span..=span {
                if rows.iter().all(|row| row.holds(x, y)) {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn constraint_rows() {
        assert_eq!(
            polygon_constraints([1, 0, 1, 0])[6],
            ConstraintRow { a: 1, b: -1, c: -1 }
        );
        assert_eq!(
            polygon_constraints([0, 0, 0, 0])[5],
            ConstraintRow { a: -1, b: -1, c: 0 }
        );
        assert_eq!(
            polygon_constraints([2, 2, 2, 0])[2],
            ConstraintRow { a: 1, b: 1, c: -2 }
        );
    }

    #[test]
    fn counts() {
        assert_eq!(
            count_lattice_points(&polygon_constraints([1, 0, 1, 0])).unwrap(),
            1
        );
        assert_eq!(
            count_lattice_points(&polygon_constraints([1, 0, 0, 0])).unwrap(),
            0
        );
        assert_eq!(
            count_lattice_points(&polygon_constraints([13, 8, 10, 6])).unwrap(),
            6
        );
    }

    #[test]
    fn classical_values() {
        assert_eq!(g(0, 0, 0, 0), 1);
        assert_eq!(g(1, 0, 1, 0), 1);
        assert_eq!(g(1, 0, 0, 0), 0);
        for (g1, g2) in [(0, 0), (1, 0), (2, 0), (1, 1)] {
            assert_eq!(g(1, 1, g1, g2), 1, "({g1},{g2})");
        }
    }

    #[test]
    fn column_sweep_matches_brute_force() {
        for r in 0..=5 {
            for s in 0..=5 {
                for g1 in 0..=6 {
                    for g2 in 0..=g1 {
                        let rows = polygon_constraints([r, s, g1, g2]);
                        assert_eq!(
                            count_lattice_points(&rows).unwrap(),
                            brute(&rows, 20),
                            "{:?}",
                            (r, s, g1, g2)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn unbounded_system_is_reported() {
        let rows = [
            ConstraintRow { a: 1, b: 0, c: 0 },
            ConstraintRow { a: 0, b: 1, c: 0 },
        ];
        assert_eq!(count_lattice_points(&rows), Err(KronError::Unbounded));
    }

    #[test]
    fn invalid_reduced_index_is_rejected() {
        let h = ReducedIndex {
            r: 0,
            s: 0,
            g1: 0,
            g2: 1,
        };
        assert!(reduced_kron_count(h).is_err());
    }

    #[test]
    fn rounding_helpers() {
        assert_eq!(div_floor(-3, 2), -2);
        assert_eq!(div_floor(3, 2), 1);
        assert_eq!(div_ceil(-3, 2), -1);
        assert_eq!(div_ceil(3, 2), 2);
        assert_eq!(div_floor(3, -2), -2);
    }
}
