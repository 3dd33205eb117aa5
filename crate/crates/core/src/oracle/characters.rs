//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.
//!
//! Rows `χ_λ(·)` are computed lazily, one shape at a time, over all
//! cycle types of `|λ|`. Removing a rim hook of length `ρ_1` from `λ` leaves
//! a shape of weight `|λ| - ρ_1`, whose row is looked up at the cycle type
//! `ρ` with its first part removed.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{KronError, Result};
use crate::partition::Partition;

/// A rim-hook removal: its sign and the character row left behind.
type SignedRow = (i64, Arc<[i64]>);

/// Cycle types of one weight and the bookkeeping needed by the recursion.
pub(crate) struct Level {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// For each cycle type: its first part and the index of its tail one
    /// level down.
    pub tail: Vec<(u32, usize)>,
    /// Centralizer orders `z_ρ`.
    pub z: Vec<BigUint>,
}

impl Level {
    fn new(n: u32, lower: &dyn Fn(u32) -> Arc<Level>) -> Level {
        let parts = Partition::all(n);
        let index = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let tail = parts
            .iter()
            .map(|p| {
                let first = p.part(0);
                if first == 0 {
                    return (0, 0);
                }
                let down = lower(n - first);
                (first, down.index[&p.tail()])
            })
            .collect();
        let z = parts.iter().map(centralizer).collect();
        Level {
            parts,
            index,
            tail,
            z,
        }
    }
}

/// `z_ρ = Π_i i^{m_i} m_i!`.
pub fn centralizer(rho: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_default() += 1;
        z *= p;
        z *= counts[&p];
    }
    z
}

/// Rim hooks of length `m`: `(sign, λ minus the hook)`.
pub fn remove_rim_hooks(lambda: &Partition, m: u32) -> Vec<(i64, Partition)> {
    let len = lambda.length();
    let beta: Vec<i64> = (0..len)
        .map(|i| i64::from(lambda.part(i)) + (len - 1 - i) as i64)
        .collect();
    let m = i64::from(m);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let nb = b - m;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > nb && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nbeta
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (len - 1 - j) as i64) as u32)
            .collect();
        out.push((sign, Partition::from_sorted(parts)));
    }
    out
}

pub(crate) struct CharacterStore {
    levels: Vec<OnceLock<Arc<Level>>>,
    rows: RwLock<HashMap<Partition, Arc<[i64]>>>,
}

/// Levels beyond this are never built; the caller's cap is far smaller.
const MAX_LEVEL: u32 = 64;

impl CharacterStore {
    pub fn new() -> Self {
        CharacterStore {
            levels: (0..=MAX_LEVEL).map(|_| OnceLock::new()).collect(),
            rows: RwLock::new(HashMap::new()),
        }
    }

    pub fn level(&self, n: u32) -> Arc<Level> {
        assert!(n <= MAX_LEVEL, "character level {n} out of range");
        self.levels[n as usize]
            .get_or_init(|| Arc::new(Level::new(n, &|k| self.level(k))))
            .clone()
    }

    pub fn seed(&self, lambda: Partition, row: Arc<[i64]>) {
        self.rows
            .write()
            .expect("character rows lock")
            .insert(lambda, row);
    }

    pub fn cached_row(&self, lambda: &Partition) -> Option<Arc<[i64]>> {
        self.rows
            .read()
            .expect("character rows lock")
            .get(lambda)
            .cloned()
    }

    /// `χ_λ(ρ)` for every cycle type `ρ` of `|λ|`, in [`Partition::all`]
    /// order.
    pub fn row(&self, lambda: &Partition) -> Result<Arc<[i64]>> {
        if let Some(r) = self.cached_row(lambda) {
            return Ok(r);
        }
        let n = u32::try_from(lambda.weight()).map_err(|_| KronError::Overflow("weight"))?;
        if n > MAX_LEVEL {
            return Err(KronError::Unsupported(format!(
                "characters of S_{n} are out of reach"
            )));
        }
        let level = self.level(n);
        let row: Arc<[i64]> = if n == 0 {
            Arc::from(vec![1i64])
        } else {
            let mut by_length: HashMap<u32, Vec<SignedRow>> = HashMap::new();
            let mut values = vec![0i64; level.parts.len()];
            for (k, &(first, tail)) in level.tail.iter().enumerate() {
                if let Entry::Vacant(slot) = by_length.entry(first) {
                    let hooks = remove_rim_hooks(lambda, first)
                        .into_iter()
                        .map(|(sign, mu)| Ok((sign, self.row(&mu)?)))
                        .collect::<Result<Vec<_>>>()?;
                    slot.insert(hooks);
                }
                let mut acc: i64 = 0;
                for (sign, sub) in &by_length[&first] {
                    acc = acc
                        .checked_add(sign * sub[tail])
                        .ok_or(KronError::Overflow("character value"))?;
                }
                values[k] = acc;
            }
            Arc::from(values)
        };
        self.seed(lambda.clone(), row.clone());
        Ok(row)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn rim_hooks_of_a_staircase() {
        assert!(remove_rim_hooks(&part![3, 2, 1], 2).is_empty());
        assert_eq!(remove_rim_hooks(&part![3, 2, 1], 3).len(), 2);
        let mut hooks = remove_rim_hooks(&part![3, 2, 1], 1);
        hooks.sort_by(|a, b| a.1.cmp(&b.1));
        assert_eq!(
            hooks,
            vec![(1, part![2, 2, 1]), (1, part![3, 1, 1]), (1, part![3, 2])]
        );
        assert_eq!(remove_rim_hooks(&part![2, 2], 3), vec![(-1, part![1])]);
        assert!(remove_rim_hooks(&part![2, 2], 4).is_empty());
        assert_eq!(
            remove_rim_hooks(&part![2, 2], 2),
            vec![(-1, part![1, 1]), (1, part![2])]
        );
    }

    #[test]
    fn centralizers() {
        assert_eq!(centralizer(&part![1, 1, 1]), BigUint::from(6u32));
        assert_eq!(centralizer(&part![2, 1]), BigUint::from(2u32));
        assert_eq!(centralizer(&part![2, 2]), BigUint::from(8u32));
        assert_eq!(centralizer(&Partition::empty()), BigUint::one());
    }

    #[test]
    fn rows_of_s3() {
        let store = CharacterStore::new();
        // cycle types in order (3), (2,1), (1,1,1)
        assert_eq!(&*store.row(&part![3]).unwrap(), &[1, 1, 1]);
        assert_eq!(&*store.row(&part![2, 1]).unwrap(), &[-1, 0, 2]);
        assert_eq!(&*store.row(&part![1, 1, 1]).unwrap(), &[1, -1, 1]);
    }
}
