//! Kronecker coefficients from reduced ones, and their vanishing.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chambers::ChamberCatalog;
use crate::error::{KronError, Result};
use crate::index::{to_kron_index, validate_triple, KronIndex, Normalized, ReducedIndex};
use crate::oracle::Oracle;
use crate::partition::Partition;
use crate::polygon::reduced_kron_count;

/// Anything that can answer `ḡ_{αβ}^γ`.
pub trait ReducedProvider {
    fn reduced(&self, alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<u64>;
}

impl ReducedProvider for Oracle {
    fn reduced(&self, alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<u64> {
        self.reduced_oracle(alpha, beta, gamma)
    }
}

/// The name of a strategy, as selected on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EngineKind {
    Count,
    Chamber,
    Oracle,
}

impl EngineKind {
    pub const ALL: [EngineKind; 3] = [EngineKind::Count, EngineKind::Chamber, EngineKind::Oracle];
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EngineKind::Count => "count",
            EngineKind::Chamber => "chamber",
            EngineKind::Oracle => "oracle",
        })
    }
}

/// A strategy for the reduced coefficients of the two-two-row family.
#[derive(Clone, Copy)]
pub enum ReducedEngine<'a> {
    /// Lattice points of the polygon.
    Count,
    /// Chamber quasipolynomials of the given catalog.
    Chamber(&'a ChamberCatalog),
    /// Character-theoretic ground truth. For ordinary coefficients this
    /// evaluates the character inner product directly rather than going
    /// through reduced coefficients.
    Oracle(&'a Oracle),
}

impl Default for ReducedEngine<'_> {
    fn default() -> Self {
        ReducedEngine::Chamber(ChamberCatalog::standard())
    }
}

impl<'a> ReducedEngine<'a> {
    pub fn kind(&self) -> EngineKind {
        match self {
            ReducedEngine::Count => EngineKind::Count,
            ReducedEngine::Chamber(_) => EngineKind::Chamber,
            ReducedEngine::Oracle(_) => EngineKind::Oracle,
        }
    }

    /// `ḡ_{(r),(s)}^{(g1,g2)}` as a signed value. Only a corrupted chamber
    /// catalog can make it negative.
    pub fn reduced_value(&self, h: ReducedIndex) -> Result<i64> {
        if !h.is_valid() {
            return Err(KronError::InvalidReducedIndex(h.point()));
        }
        let as_i64 =
            |v: u64| i64::try_from(v).map_err(|_| KronError::Overflow("reduced coefficient"));
        match self {
            ReducedEngine::Count => as_i64(reduced_kron_count(h)?),
            ReducedEngine::Chamber(cat) => cat.reduced_value(h.point()),
            ReducedEngine::Oracle(o) => {
                let p = |v: &[i64]| Partition::new(v);
                as_i64(o.reduced_oracle(&p(&[h.r])?, &p(&[h.s])?, &p(&[h.g1, h.g2])?)?)
            }
        }
    }

    pub fn reduced_point(&self, h: ReducedIndex) -> Result<u64> {
        let v = self.reduced_value(h)?;
        u64::try_from(v).map_err(|_| {
            KronError::Unsupported(format!("engine {} returned {v} at {h}", self.kind()))
        })
    }
}

impl ReducedProvider for ReducedEngine<'_> {
    fn reduced(&self, alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<u64> {
        if let ReducedEngine::Oracle(o) = self {
            return o.reduced_oracle(alpha, beta, gamma);
        }
        if alpha.length() > 1 || beta.length() > 1 || gamma.length() > 2 {
            return Err(KronError::Unsupported(format!(
                "engine {} only answers ḡ with one-row α, β and two-row γ",
                self.kind()
            )));
        }
        let h = ReducedIndex::new(
            i64::from(alpha.part(0)),
            i64::from(beta.part(0)),
            i64::from(gamma.part(0)),
            i64::from(gamma.part(1)),
        )?;
        self.reduced_point(h)
    }
}

/// `(1+λ_1, …, 1+λ_{i-1}, λ_{i+1}, λ_{i+2}, …)`, for `i >= 1`.
pub fn dagger(lambda: &Partition, i: usize) -> Vec<i64> {
    assert!(i >= 1, "dagger index starts at 1");
    let len = lambda.length().max(i);
    let mut out = Vec::with_capacity(len);
    for t in 0..i - 1 {
        out.push(i64::from(lambda.part(t)) + 1);
    }
    for t in i..lambda.length() {
        out.push(i64::from(lambda.part(t)));
    }
    out
}

/// `g_{μν}^λ = Σ_{i=1}^{ℓ1ℓ2} (-1)^{i+1} ḡ_{μ̄,ν̄}^{λ^{†i}}` where `μ̄` is `μ`
/// without its first part.
pub fn kron_from_reduced_general(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    l1: usize,
    l2: usize,
    provider: &dyn ReducedProvider,
) -> Result<u64> {
    let w = [lambda.weight(), mu.weight(), nu.weight()];
    if w[0] != w[1] || w[1] != w[2] {
        return Err(KronError::WeightMismatch(w.to_vec()));
    }
    if mu.length() > l1 || nu.length() > l2 || lambda.length() > l1 * l2 {
        return Err(KronError::Unsupported(format!(
            "lengths ({}, {}, {}) exceed (ℓ1, ℓ2, ℓ1ℓ2) = ({l1}, {l2}, {})",
            mu.length(),
            nu.length(),
            lambda.length(),
            l1 * l2
        )));
    }
    let (mb, nb) = (mu.tail(), nu.tail());
    let mut total: i128 = 0;
    for i in 1..=l1 * l2 {
        // 1 + λ_{i-1} >= λ_{i+1}, so this is always a partition.
        let gamma = Partition::new(&dagger(lambda, i))?;
        let v = i128::from(provider.reduced(&mb, &nb, &gamma)?);
        total += if i % 2 == 1 { v } else { -v };
    }
    u64::try_from(total).map_err(|_| KronError::Unsupported(format!("alternating sum is {total}")))
}

/// The three reduced indices `(r, s, g1, g2)`, `(r, s, λ1+1, g2)`,
/// `(r, s, λ1+1, g1+1)` whose alternating sum is `g(idx)`.
pub fn reduced_terms(idx: &KronIndex) -> Result<[ReducedIndex; 3]> {
    if !idx.is_valid() {
        return Err(KronError::InvalidKronIndex(idx.to_array()));
    }
    let l1 = idx.lambda1();
    Ok([
        ReducedIndex::new(idx.r, idx.s, idx.g1, idx.g2)?,
        ReducedIndex::new(idx.r, idx.s, l1 + 1, idx.g2)?,
        ReducedIndex::new(idx.r, idx.s, l1 + 1, idx.g1 + 1)?,
    ])
}

/// `g(idx)` as a signed value; see [`ReducedEngine::reduced_value`].
pub fn kron_two_row_value(idx: &KronIndex, engine: &ReducedEngine<'_>) -> Result<i64> {
    if !idx.is_valid() {
        return Err(KronError::InvalidKronIndex(idx.to_array()));
    }
    if let ReducedEngine::Oracle(o) = engine {
        let (l, m, n) = idx.partitions()?;
        let v = o.kron_oracle(&l, &m, &n)?;
        return i64::try_from(v).map_err(|_| KronError::Overflow("Kronecker coefficient"));
    }
    let [a, b, c] = reduced_terms(idx)?;
    let (a, b, c) = (
        engine.reduced_value(a)?,
        engine.reduced_value(b)?,
        engine.reduced_value(c)?,
    );
    a.checked_sub(b)
        .and_then(|x| x.checked_add(c))
        .ok_or(KronError::Overflow("Kronecker coefficient"))
}

/// `g_{(n-r,r),(n-s,s)}^{(n-g1-g2,g1,g2)}`.
pub fn kron_two_row(idx: &KronIndex, engine: &ReducedEngine<'_>) -> Result<u64> {
    let v = kron_two_row_value(idx, engine)?;
    u64::try_from(v).map_err(|_| {
        KronError::Unsupported(format!("engine {} returned {v} at {idx}", engine.kind()))
    })
}

/// `g_{μν}^λ` for `λ` with at most four rows and two-row `μ`, `ν`, with the
/// default engine.
pub fn kron_full(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    kron_full_with(lambda, mu, nu, &ReducedEngine::default())
}

pub fn kron_full_with(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    engine: &ReducedEngine<'_>,
) -> Result<u64> {
    let report = validate_triple(lambda, mu, nu);
    if !report.is_valid() {
        return Err(KronError::InvalidTriple(report.violations));
    }
    match to_kron_index(lambda, mu, nu)? {
        Normalized::Zero => Ok(0),
        Normalized::Index(idx) => kron_two_row(&idx, engine),
    }
}

/// The five systems of conditions under which `g` vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VanishingSystem {
    S1,
    S2,
    S3,
    S4,
    S5,
}

impl fmt::Display for VanishingSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Every system satisfied by `idx`:
///
/// * S1: `n = 2r = 2s`, `g1` or `g2` odd;
/// * S2: `n = max(2r, 2s)`, `g1 = g2`, `r + s + g1` odd;
/// * S3: `n = max(2r, 2s, 2g1 + g2)`, `g2 = 0`, `r + s + g1` odd;
/// * S4: `n = 2g1 + g2 = max(2r, 2s)`, `r + s + g1` odd;
/// * S5: `n = max(2r, 2s)`, `|r - s| = 1`, `min(2r, 2s) >= 2g1 + g2`, `g1`
///   and `g2` even.
pub fn vanishing_systems(idx: &KronIndex) -> Result<Vec<VanishingSystem>> {
    if !idx.is_valid() {
        return Err(KronError::InvalidKronIndex(idx.to_array()));
    }
    let KronIndex { n, r, s, g1, g2 } = *idx;
    let odd = |x: i64| x.rem_euclid(2) == 1;
    let m = (2 * r).max(2 * s);
    let w = 2 * g1 + g2;
    let mut out = Vec::new();
    if n == 2 * s && n == 2 * r && (odd(g1) || odd(g2)) {
        out.push(VanishingSystem::S1);
    }
    if n == m && g1 == g2 && odd(r + s + g1) {
        out.push(VanishingSystem::S2);
    }
    if n == m.max(w) && g2 == 0 && odd(r + s + g1) {
        out.push(VanishingSystem::S3);
    }
    if n == w && n == m && odd(r + s + g1) {
        out.push(VanishingSystem::S4);
    }
    if n == m && (r - s).abs() == 1 && (2 * r).min(2 * s) >= w && !odd(g1) && !odd(g2) {
        out.push(VanishingSystem::S5);
    }
    Ok(out)
}

pub fn vanishing_by_conditions(idx: &KronIndex) -> Result<bool> {
    Ok(!vanishing_systems(idx)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn idx(a: [i64; 5]) -> KronIndex {
        KronIndex::from_array(a).unwrap()
    }

    #[test]
    fn dagger_examples() {
        let l = part![3, 2, 1];
        assert_eq!(dagger(&l, 1), vec![2, 1]);
        assert_eq!(dagger(&l, 2), vec![4, 1]);
        assert_eq!(dagger(&l, 3), vec![4, 3]);
        assert_eq!(dagger(&l, 4), vec![4, 3, 2]);
    }

    #[test]
    fn two_row_examples() {
        for engine in [ReducedEngine::Count, ReducedEngine::default()] {
            assert_eq!(kron_two_row(&idx([2, 1, 1, 0, 0]), &engine).unwrap(), 1);
            assert_eq!(kron_two_row(&idx([2, 1, 1, 1, 0]), &engine).unwrap(), 0);
            assert_eq!(kron_two_row(&idx([4, 2, 2, 2, 0]), &engine).unwrap(), 1);
        }
        let terms = reduced_terms(&idx([4, 2, 2, 2, 0])).unwrap();
        let vals: Vec<u64> = terms
            .iter()
            .map(|h| reduced_kron_count(*h).unwrap())
            .collect();
        assert_eq!(vals, vec![2, 1, 0]);
    }

    #[test]
    fn invalid_index_is_rejected() {
        let bad = KronIndex {
            n: 2,
            r: 2,
            s: 0,
            g1: 0,
            g2: 0,
        };
        assert!(kron_two_row(&bad, &ReducedEngine::Count).is_err());
        assert!(vanishing_systems(&bad).is_err());
    }

    #[test]
    fn full_examples() {
        assert_eq!(
            kron_full(&part![2, 2, 0, 0], &part![2, 2], &part![2, 2]).unwrap(),
            1
        );
        assert_eq!(
            kron_full(&part![1, 1, 1, 1], &part![3, 1], &part![3, 1]).unwrap(),
            0
        );
        assert_eq!(
            kron_full(&part![2, 2, 1, 1], &part![3, 3], &part![3, 3]).unwrap(),
            0
        );
        assert!(matches!(
            kron_full(&part![3, 1], &part![2, 2], &part![3]),
            Err(KronError::InvalidTriple(_))
        ));
    }

    #[test]
    fn general_reconstruction_examples() {
        let o = Oracle::default();
        let g = |l: Partition, m: Partition, n: Partition| {
            kron_from_reduced_general(&l, &m, &n, 2, 2, &o).unwrap()
        };
        assert_eq!(g(part![2], part![1, 1], part![1, 1]), 1);
        assert_eq!(g(part![1, 1], part![1, 1], part![1, 1]), 0);
        assert_eq!(g(part![2, 2], part![2, 2], part![2, 2]), 1);
        assert!(kron_from_reduced_general(&part![2], &part![2], &part![1], 2, 2, &o).is_err());
    }

    #[test]
    fn vanishing_examples() {
        assert_eq!(
            vanishing_systems(&idx([4, 2, 2, 1, 1])).unwrap(),
            vec![VanishingSystem::S1, VanishingSystem::S2]
        );
        assert!(!vanishing_by_conditions(&idx([2, 1, 1, 0, 0])).unwrap());
        assert_eq!(
            vanishing_systems(&idx([12, 5, 6, 4, 2])).unwrap(),
            vec![VanishingSystem::S5]
        );
    }

    #[test]
    fn provider_limits() {
        let e = ReducedEngine::Count;
        assert!(e.reduced(&part![1, 1], &part![1], &part![1, 1, 1]).is_err());
        assert_eq!(e.reduced(&part![1], &part![1], &part![1, 1]).unwrap(), 1);
    }
}
