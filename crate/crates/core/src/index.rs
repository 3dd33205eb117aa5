//! Index types for the two-two-row family and the reduction of a general
//! triple `(λ, μ, ν)` to the normalized five-parameter form.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{KronError, Result};
use crate::partition::Partition;

/// `(n, r, s, g1, g2)`, standing for
/// `g_{(n-r,r),(n-s,s)}^{(n-g1-g2, g1, g2)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KronIndex {
    pub n: i64,
    pub r: i64,
    pub s: i64,
    pub g1: i64,
    pub g2: i64,
}

impl KronIndex {
    pub fn new(n: i64, r: i64, s: i64, g1: i64, g2: i64) -> Result<Self> {
        let idx = KronIndex { n, r, s, g1, g2 };
        if idx.is_valid() {
            Ok(idx)
        } else {
            Err(KronError::InvalidKronIndex(idx.to_array()))
        }
    }

    pub fn from_array(a: [i64; 5]) -> Result<Self> {
        Self::new(a[0], a[1], a[2], a[3], a[4])
    }

    /// All three indexing sequences are partitions of `n`.
    pub fn is_valid(&self) -> bool {
        let KronIndex { n, r, s, g1, g2 } = *self;
        n - r >= r && r >= 0 && n - s >= s && s >= 0 && n - g1 - g2 >= g1 && g1 >= g2 && g2 >= 0
    }

    pub fn to_array(&self) -> [i64; 5] {
        [self.n, self.r, self.s, self.g1, self.g2]
    }

    pub fn scaled(&self, k: i64) -> KronIndex {
        KronIndex {
            n: self.n * k,
            r: self.r * k,
            s: self.s * k,
            g1: self.g1 * k,
            g2: self.g2 * k,
        }
    }

    /// The largest part of `λ`.
    pub fn lambda1(&self) -> i64 {
        self.n - self.g1 - self.g2
    }

    /// `(λ, μ, ν)` as partitions. Only meaningful for valid indices.
    pub fn partitions(&self) -> Result<(Partition, Partition, Partition)> {
        if !self.is_valid() {
            return Err(KronError::InvalidKronIndex(self.to_array()));
        }
        let lambda = Partition::new(&[self.lambda1(), self.g1, self.g2])?;
        let mu = Partition::new(&[self.n - self.r, self.r])?;
        let nu = Partition::new(&[self.n - self.s, self.s])?;
        Ok((lambda, mu, nu))
    }

    /// Exchanges the roles of `μ` and `ν`.
    pub fn swapped(&self) -> KronIndex {
        KronIndex {
            r: self.s,
            s: self.r,
            ..*self
        }
    }
}

impl fmt::Display for KronIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.n, self.r, self.s, self.g1, self.g2
        )
    }
}

/// `(r, s, g1, g2)`, standing for the reduced coefficient
/// `ḡ_{(r),(s)}^{(g1,g2)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReducedIndex {
    pub r: i64,
    pub s: i64,
    pub g1: i64,
    pub g2: i64,
}

impl ReducedIndex {
    pub fn new(r: i64, s: i64, g1: i64, g2: i64) -> Result<Self> {
        let h = ReducedIndex { r, s, g1, g2 };
        if h.is_valid() {
            Ok(h)
        } else {
            Err(KronError::InvalidReducedIndex(h.point()))
        }
    }

    pub fn from_point(p: [i64; 4]) -> Result<Self> {
        Self::new(p[0], p[1], p[2], p[3])
    }

    pub fn is_valid(&self) -> bool {
        self.r >= 0 && self.s >= 0 && self.g1 >= self.g2 && self.g2 >= 0
    }

    /// The raw parameter vector `(r, s, g1, g2)`.
    pub fn point(&self) -> [i64; 4] {
        [self.r, self.s, self.g1, self.g2]
    }
}

impl fmt::Display for ReducedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.r, self.s, self.g1, self.g2)
    }
}

/// One reason a triple is not a two-two-row Kronecker index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    WeightMismatch { lambda: u64, mu: u64, nu: u64 },
    LambdaTooLong(usize),
    MuTooLong(usize),
    NuTooLong(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WeightMismatch { lambda, mu, nu } => {
                write!(f, "weights differ: |λ|={lambda}, |μ|={mu}, |ν|={nu}")
            }
            Violation::LambdaTooLong(l) => write!(f, "length(λ)={l} > 4"),
            Violation::MuTooLong(l) => write!(f, "length(μ)={l} > 2"),
            Violation::NuTooLong(l) => write!(f, "length(ν)={l} > 2"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Lists every way in which `(λ, μ, ν)` fails to be a triple with equal
/// weights, `length(μ), length(ν) <= 2` and `length(λ) <= 4`.
pub fn validate_triple(lambda: &Partition, mu: &Partition, nu: &Partition) -> ValidityReport {
    let mut violations = Vec::new();
    let (wl, wm, wn) = (lambda.weight(), mu.weight(), nu.weight());
    if wl != wm || wm != wn {
        violations.push(Violation::WeightMismatch {
            lambda: wl,
            mu: wm,
            nu: wn,
        });
    }
    if lambda.length() > 4 {
        violations.push(Violation::LambdaTooLong(lambda.length()));
    }
    if mu.length() > 2 {
        violations.push(Violation::MuTooLong(mu.length()));
    }
    if nu.length() > 2 {
        violations.push(Violation::NuTooLong(nu.length()));
    }
    ValidityReport { violations }
}

/// Outcome of normalizing a triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalized {
    Index(KronIndex),
    /// Some intermediate step of the reduction left a non-partition; the
    /// coefficient is zero.
    Zero,
}

/// Strips `λ_4` from every part of `λ` (and `2λ_4` from both parts of `μ`
/// and `ν`), then reads off `(n, r, s, g1, g2)`.
pub fn to_kron_index(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Normalized> {
    let report = validate_triple(lambda, mu, nu);
    if !report.is_valid() {
        return Err(KronError::InvalidTriple(report.violations));
    }
    let l4 = i64::from(lambda.part(3));
    // Each application lowers μ_2 and ν_2 by 2; a negative second part at
    // any step is already negative at the last one.
    let r = i64::from(mu.part(1)) - 2 * l4;
    let s = i64::from(nu.part(1)) - 2 * l4;
    if r < 0 || s < 0 {
        return Ok(Normalized::Zero);
    }
    let n = lambda.weight() as i64 - 4 * l4;
    let g1 = i64::from(lambda.part(1)) - l4;
    let g2 = i64::from(lambda.part(2)) - l4;
    Ok(Normalized::Index(KronIndex::new(n, r, s, g1, g2)?))
}

/// A box of indices, with one inclusive range per coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexBox {
    pub n: RangeInclusive<i64>,
    pub r: RangeInclusive<i64>,
    pub s: RangeInclusive<i64>,
    pub g1: RangeInclusive<i64>,
    pub g2: RangeInclusive<i64>,
}

impl IndexBox {
    /// Every valid index with `n <= n_max`.
    pub fn up_to(n_max: i64) -> Self {
        IndexBox {
            n: 0..=n_max,
            r: 0..=i64::MAX,
            s: 0..=i64::MAX,
            g1: 0..=i64::MAX,
            g2: 0..=i64::MAX,
        }
    }

    /// A box with no indices.
    pub fn empty() -> Self {
        IndexBox {
            #[allow(clippy::reversed_empty_ranges)]
            n: 1..=0,
            ..Self::up_to(0)
        }
    }

    pub fn contains(&self, idx: &KronIndex) -> bool {
        self.n.contains(&idx.n)
            && self.r.contains(&idx.r)
            && self.s.contains(&idx.s)
            && self.g1.contains(&idx.g1)
            && self.g2.contains(&idx.g2)
    }

    /// Valid indices of the box, sorted by `(n, r, s, g1, g2)`.
    pub fn indices(&self) -> Vec<KronIndex> {
        let mut out = Vec::new();
        let (lo, hi) = (*self.n.start(), *self.n.end());
        for n in lo.max(0)..=hi {
            for r in 0..=n / 2 {
                for s in 0..=n / 2 {
                    for g1 in 0..=n {
                        for g2 in 0..=g1 {
                            let idx = KronIndex { n, r, s, g1, g2 };
                            if idx.is_valid() && self.contains(&idx) {
                                out.push(idx);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn max_n(&self) -> i64 {
        *self.n.end()
    }
}
