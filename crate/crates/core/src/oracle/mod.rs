//! Ground truth independent of the formula engines.
//!
//! Kronecker coefficients come from character inner products
//! `Σ_ρ χ_λ(ρ) χ_μ(ρ) χ_ν(ρ) / z_ρ` for `n` up to a configurable cap, with
//! characters from the Murnaghan–Nakayama rule. Past the cap, triples with
//! two arguments of at most two rows go through Kostka numbers instead.
//! Reduced coefficients are read off the stationary tail of
//! `n ↦ g_{(n-|α|,α),(n-|β|,β)}^{(n-|γ|,γ)}`; the stopping rule (two equal
//! consecutive values followed by a confirmation window) is a heuristic.

mod cache;
mod characters;
mod young;

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

pub use cache::{default_cache_dir, table_path, TABLE_SCHEMA_VERSION};
pub use characters::{centralizer, remove_rim_hooks};

use crate::error::{KronError, Result};
use crate::partition::Partition;
use characters::CharacterStore;
use young::KostkaCache;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `n` evaluated through characters.
    pub cap: u64,
    /// Where character tables are persisted; `None` keeps everything in
    /// memory.
    pub cache_dir: Option<PathBuf>,
    /// Largest `n` scanned while waiting for a reduced coefficient to
    /// stabilize.
    pub stabilization_limit: u64,
    /// Number of further agreeing values required after the first two equal
    /// consecutive ones.
    pub confirm_window: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: 20,
            cache_dir: None,
            stabilization_limit: 120,
            confirm_window: 3,
        }
    }
}

impl OracleConfig {
    /// Default settings with the per-user cache directory.
    pub fn from_env() -> Self {
        OracleConfig {
            cache_dir: default_cache_dir(),
            ..Self::default()
        }
    }

    pub fn with_cap(cap: u64) -> Self {
        OracleConfig {
            cap,
            ..Self::default()
        }
    }
}

/// The full character table of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: u32,
    /// Shapes and cycle types, both in [`Partition::all`] order.
    pub partitions: Vec<Partition>,
    /// `z_ρ` per cycle type.
    pub z: Vec<BigUint>,
    /// `values[λ][ρ] = χ_λ(ρ)`.
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    /// Column orthogonality `Σ_λ χ_λ(ρ)² = z_ρ` and the trivial row.
    pub fn spot_check(&self) -> bool {
        let k = self.partitions.len();
        if self
            .values
            .first()
            .is_none_or(|row| row.iter().any(|&v| v != 1))
        {
            return false;
        }
        (0..k).all(|col| {
            let sum: BigUint = self
                .values
                .iter()
                .map(|row| BigUint::from(row[col].unsigned_abs()).pow(2))
                .sum();
            sum == self.z[col]
        })
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> Option<i64> {
        let i = self.partitions.iter().position(|p| p == lambda)?;
        let j = self.partitions.iter().position(|p| p == rho)?;
        Some(self.values[i][j])
    }
}

/// Values seen while waiting for a reduced coefficient to stabilize.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationTrace {
    pub n0: u64,
    pub values: Vec<(u64, u64)>,
    /// First `n` of the confirmed constant run.
    pub stable_from: u64,
    pub value: u64,
}

/// Which computation produced a Kronecker coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleRoute {
    Characters,
    Kostka,
}

type Triple = (Partition, Partition, Partition);

pub struct Oracle {
    config: OracleConfig,
    store: CharacterStore,
    kostka: KostkaCache,
    loaded: Mutex<Vec<u32>>,
    reduced: Mutex<HashMap<Triple, StabilizationTrace>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(OracleConfig::default())
    }
}

/// `2^61 - 1`.
const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(P)) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn to_mod(x: i64) -> u64 {
    x.rem_euclid(P as i64) as u64
}

/// Largest `n` with `n! < P²`. Taking `λ` of largest degree,
/// `g <= f^μ f^ν / f^λ <= sqrt(n!)`, so up to this `n` the residue mod `P`
/// is the coefficient itself.
const MODULAR_LIMIT: u32 = 32;

impl Oracle {
    pub fn new(config: OracleConfig) -> Self {
        Oracle {
            config,
            store: CharacterStore::new(),
            kostka: KostkaCache::default(),
            loaded: Mutex::new(Vec::new()),
            reduced: Mutex::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &OracleConfig {
        &self.config
    }

    fn check_cap(&self, n: u64) -> Result<u32> {
        if n > self.config.cap {
            return Err(KronError::CapExceeded {
                n,
                cap: self.config.cap,
            });
        }
        u32::try_from(n).map_err(|_| KronError::Overflow("weight"))
    }

    /// Seeds the row store from the cache file for `n`, once.
    fn load_level(&self, n: u32) {
        let Some(dir) = &self.config.cache_dir else {
            return;
        };
        let mut loaded = self.loaded.lock().expect("oracle cache lock");
        if loaded.contains(&n) {
            return;
        }
        loaded.push(n);
        if let Some(table) = cache::load(dir, n) {
            for (lambda, row) in table.partitions.into_iter().zip(table.values) {
                self.store.seed(lambda, Arc::from(row));
            }
        }
    }

    fn row(&self, lambda: &Partition) -> Result<Arc<[i64]>> {
        if let Some(r) = self.store.cached_row(lambda) {
            return Ok(r);
        }
        self.load_level(lambda.weight() as u32);
        self.store.row(lambda)
    }

    /// `χ_λ(ρ)`.
    pub fn character(&self, lambda: &Partition, rho: &Partition) -> Result<i64> {
        if lambda.weight() != rho.weight() {
            return Err(KronError::WeightMismatch(vec![
                lambda.weight(),
                rho.weight(),
            ]));
        }
        let n = self.check_cap(lambda.weight())?;
        let level = self.store.level(n);
        let row = self.row(lambda)?;
        Ok(row[level.index[rho]])
    }

    /// The full table of `S_n`, loaded from or written to the cache
    /// directory when one is configured. Corrupt cache files are rebuilt.
    pub fn character_table(&self, n: u32) -> Result<CharacterTable> {
        self.check_cap(u64::from(n))?;
        if let Some(dir) = &self.config.cache_dir {
            if let Some(t) = cache::load(dir, n) {
                return Ok(t);
            }
        }
        let level = self.store.level(n);
        let values = level
            .parts
            .iter()
            .map(|lambda| Ok(self.row(lambda)?.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        let table = CharacterTable {
            n,
            partitions: level.parts.clone(),
            z: level.z.clone(),
            values,
        };
        if let Some(dir) = &self.config.cache_dir {
            cache::store(dir, &table)?;
        }
        Ok(table)
    }

    /// `g_{μν}^λ` by the character inner product; requires `n <= cap`.
    pub fn kron_characters(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
    ) -> Result<u64> {
        let n = same_weight(lambda, mu, nu)?;
        let n = self.check_cap(n)?;
        let level = self.store.level(n);
        let (a, b, c) = (self.row(lambda)?, self.row(mu)?, self.row(nu)?);
        if n <= MODULAR_LIMIT {
            let mut acc = 0u64;
            for k in 0..level.parts.len() {
                if a[k] == 0 || b[k] == 0 || c[k] == 0 {
                    continue;
                }
                let z = (&level.z[k] % P).to_u64().expect("reduced mod P");
                let t = mulmod(mulmod(to_mod(a[k]), to_mod(b[k])), to_mod(c[k]));
                acc = (acc + mulmod(t, powmod(z, P - 2))) % P;
            }
            return Ok(acc);
        }
        let fact: BigUint = (1..=u64::from(n)).map(BigUint::from).product();
        let mut acc = BigInt::zero();
        for k in 0..level.parts.len() {
            let class = BigInt::from(&fact / &level.z[k]);
            acc += class * BigInt::from(a[k]) * BigInt::from(b[k]) * BigInt::from(c[k]);
        }
        let q = acc / BigInt::from(fact);
        q.to_u64()
            .ok_or(KronError::Overflow("Kronecker coefficient"))
    }

    /// `g_{μν}^λ` through Kostka numbers; requires two arguments with at
    /// most two rows.
    pub fn kron_kostka(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        let n = same_weight(lambda, mu, nu)?;
        let mut args = [lambda, mu, nu];
        args.sort_by_key(|p| p.length());
        let [a, b, c] = args;
        if b.length() > 2 {
            return Err(KronError::Unsupported(
                "the Kostka route needs two arguments with at most two rows".into(),
            ));
        }
        let n = u32::try_from(n).map_err(|_| KronError::Overflow("weight"))?;
        let v = young::kron_two_two_rows(&self.kostka, c, n, a.part(1), b.part(1));
        u64::try_from(v).map_err(|_| KronError::Overflow("negative Kostka sum"))
    }

    /// `g_{μν}^λ`, with the route used.
    pub fn kron_with_route(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
    ) -> Result<(u64, OracleRoute)> {
        let n = same_weight(lambda, mu, nu)?;
        if n <= self.config.cap {
            return Ok((
                self.kron_characters(lambda, mu, nu)?,
                OracleRoute::Characters,
            ));
        }
        let short = [lambda, mu, nu].iter().filter(|p| p.length() <= 2).count();
        if short >= 2 {
            return Ok((self.kron_kostka(lambda, mu, nu)?, OracleRoute::Kostka));
        }
        Err(KronError::CapExceeded {
            n,
            cap: self.config.cap,
        })
    }

    /// `g_{μν}^λ`.
    pub fn kron_oracle(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        Ok(self.kron_with_route(lambda, mu, nu)?.0)
    }

    /// `ḡ_{αβ}^γ` with the sequence of values that witnessed it.
    pub fn reduced_trace(
        &self,
        alpha: &Partition,
        beta: &Partition,
        gamma: &Partition,
    ) -> Result<StabilizationTrace> {
        let key = (alpha.clone(), beta.clone(), gamma.clone());
        if let Some(t) = self.reduced.lock().expect("reduced memo").get(&key) {
            return Ok(t.clone());
        }
        let n0 = alpha.weight()
            + beta.weight()
            + gamma.weight()
            + u64::from(alpha.part(0).max(beta.part(0)).max(gamma.part(0)));
        let what = || format!("ḡ with α={alpha}, β={beta}, γ={gamma}");
        let mut values: Vec<(u64, u64)> = Vec::new();
        // Start of the current run of equal values.
        let mut run_start = 0usize;
        let mut n = n0;
        loop {
            if n > self.config.stabilization_limit {
                return Err(KronError::NotStabilized {
                    what: what(),
                    limit: self.config.stabilization_limit,
                });
            }
            let pad = |p: &Partition| p.padded_to(n).expect("n0 leaves room for the first row");
            let v = self.kron_oracle(&pad(gamma), &pad(alpha), &pad(beta))?;
            if values.last().is_some_and(|&(_, last)| last != v) {
                run_start = values.len();
            }
            values.push((n, v));
            if (values.len() - run_start) as u64 >= 2 + self.config.confirm_window {
                let trace = StabilizationTrace {
                    n0,
                    stable_from: values[run_start].0,
                    value: v,
                    values,
                };
                self.reduced
                    .lock()
                    .expect("reduced memo")
                    .insert(key, trace.clone());
                return Ok(trace);
            }
            n += 1;
        }
    }

    /// `ḡ_{αβ}^γ`.
    pub fn reduced_oracle(
        &self,
        alpha: &Partition,
        beta: &Partition,
        gamma: &Partition,
    ) -> Result<u64> {
        Ok(self.reduced_trace(alpha, beta, gamma)?.value)
    }
}

fn same_weight(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let w = [lambda.weight(), mu.weight(), nu.weight()];
    if w[0] != w[1] || w[1] != w[2] {
        return Err(KronError::WeightMismatch(w.to_vec()));
    }
    Ok(w[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn character_examples() {
        let o = Oracle::default();
        for rho in Partition::all(5) {
            assert_eq!(o.character(&part![5], &rho).unwrap(), 1);
        }
        assert_eq!(o.character(&part![1, 1, 1], &part![2, 1]).unwrap(), -1);
        assert_eq!(o.character(&part![2, 1], &part![1, 1, 1]).unwrap(), 2);
        assert!(matches!(
            o.character(&part![2, 1], &part![2]),
            Err(KronError::WeightMismatch(_))
        ));
    }

    #[test]
    fn kron_examples() {
        let o = Oracle::default();
        for n in 0..=6u32 {
            let t = Partition::new(&[i64::from(n)]).unwrap();
            assert_eq!(o.kron_oracle(&t, &t, &t).unwrap(), 1);
        }
        assert_eq!(
            o.kron_oracle(&part![2], &part![1, 1], &part![1, 1])
                .unwrap(),
            1
        );
        assert_eq!(
            o.kron_oracle(&part![2, 2], &part![2, 2], &part![2, 2])
                .unwrap(),
            1
        );
    }

    #[test]
    fn cap_is_enforced() {
        let o = Oracle::new(OracleConfig::with_cap(4));
        let l = part![3, 1, 1];
        assert_eq!(
            o.kron_oracle(&l, &l, &l),
            Err(KronError::CapExceeded { n: 5, cap: 4 })
        );
        // two two-row arguments go through Kostka numbers instead
        assert_eq!(
            o.kron_with_route(&part![3, 2], &part![3, 2], &part![3, 1, 1])
                .unwrap(),
            (1, OracleRoute::Kostka)
        );
    }

    #[test]
    fn big_integer_route_matches_modular() {
        let o = Oracle::new(OracleConfig::with_cap(40));
        let (l, m, nu) = (part![20, 8, 5], part![25, 8], part![22, 11]);
        assert_eq!(
            o.kron_characters(&l, &m, &nu).unwrap(),
            o.kron_kostka(&l, &m, &nu).unwrap()
        );
    }

    #[test]
    fn reduced_examples() {
        let o = Oracle::default();
        let e = Partition::empty();
        assert_eq!(o.reduced_oracle(&e, &e, &e).unwrap(), 1);
        assert_eq!(o.reduced_oracle(&part![1], &e, &part![1]).unwrap(), 1);
        assert_eq!(
            o.reduced_oracle(&part![1], &part![1], &part![1, 1])
                .unwrap(),
            1
        );
        let t = o.reduced_trace(&part![1], &part![1], &part![1, 1]).unwrap();
        assert_eq!(t.n0, 5);
        assert!(t.values.len() >= 5);
    }

    #[test]
    fn stabilization_limit_is_reported() {
        let o = Oracle::new(OracleConfig {
            stabilization_limit: 6,
            ..OracleConfig::default()
        });
        assert!(matches!(
            o.reduced_oracle(&part![1], &part![1], &part![1, 1]),
            Err(KronError::NotStabilized { .. })
        ));
    }

    #[test]
    fn table_orthogonality() {
        let o = Oracle::default();
        for n in 0..=8 {
            assert!(o.character_table(n).unwrap().spot_check());
        }
    }
}
