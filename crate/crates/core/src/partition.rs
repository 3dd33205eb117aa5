//! Integer partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{KronError, Result};

/// A weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are dropped on construction, so `(2,1,0)` and `(2,1)` are
/// the same partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Checks the parts and strips trailing zeros.
    pub fn new(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) {
            return Err(KronError::NegativePart(parts.to_vec()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(KronError::NotWeaklyDecreasing(parts.to_vec()));
        }
        let mut v: Vec<u32> = parts
            .iter()
            .map(|&p| u32::try_from(p).map_err(|_| KronError::Overflow("partition part")))
            .collect::<Result<_>>()?;
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(Partition(v))
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut v: Vec<u32>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] >= w[1]));
        while v.last() == Some(&0) {
            v.pop();
        }
        Partition(v)
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The partition with its first part removed.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Multiplies every part by `n`.
    pub fn scaled(&self, n: u32) -> Partition {
        Partition::from_sorted(self.0.iter().map(|&p| p * n).collect())
    }

    /// `(n - |self|, self_1, self_2, ...)` when that is a partition.
    pub fn padded_to(&self, n: u64) -> Option<Partition> {
        let w = self.weight();
        let head = n.checked_sub(w)?;
        if head < u64::from(self.part(0)) {
            return None;
        }
        let head = u32::try_from(head).ok()?;
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(head);
        v.extend_from_slice(&self.0);
        Some(Partition::from_sorted(v))
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }
}

fn fill(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=rem.min(max)).rev() {
        cur.push(p);
        fill(rem - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated parts: `3,1`, `(3,1)`, `0` or the empty string.
impl FromStr for Partition {
    type Err = KronError;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim().parse::<i64>().map_err(|e| KronError::Parse {
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&parts)
    }
}

impl From<&[u32]> for Partition {
    /// Sorts the parts into weakly decreasing order.
    fn from(parts: &[u32]) -> Self {
        let mut v = parts.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(v)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        Partition::new(&v).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for a partition literal; panics on invalid input.
///
/// ```
/// use kron22::part;
/// assert_eq!(part![3, 1, 0].parts(), &[3, 1]);
/// ```
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(&[$($p as i64),+]).expect("partition literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_are_dropped() {
        assert_eq!(part![2, 1, 0, 0], part![2, 1]);
        assert_eq!(part![0], Partition::empty());
        assert_eq!(part![2, 1, 0].length(), 2);
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(matches!(
            Partition::new(&[1, 2]),
            Err(KronError::NotWeaklyDecreasing(_))
        ));
        assert!(matches!(
            Partition::new(&[1, -1]),
            Err(KronError::NegativePart(_))
        ));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), part![3, 1]);
        assert_eq!("(2,2)".parse::<Partition>().unwrap(), part![2, 2]);
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert_eq!(
            Partition::all(3),
            vec![part![3], part![2, 1], part![1, 1, 1]]
        );
    }

    #[test]
    fn padding() {
        assert_eq!(part![2, 1].padded_to(6), Some(part![3, 2, 1]));
        assert_eq!(part![2, 1].padded_to(4), None);
        assert_eq!(Partition::empty().padded_to(3), Some(part![3]));
    }
}
