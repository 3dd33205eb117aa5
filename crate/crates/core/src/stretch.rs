//! Stretching functions `N ↦ g(N·idx)`, exact quasipolynomial fits, and the
//! search for saturation counterexamples.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{KronError, Result};
use crate::index::{IndexBox, KronIndex};
use crate::kron::{kron_two_row, vanishing_systems, ReducedEngine, VanishingSystem};
use crate::oracle::Oracle;

/// `(N, g(N·idx))` for `N = 1..=n_max`, with the chamber engine.
pub fn stretch_samples(idx: &KronIndex, n_max: u64) -> Result<Vec<(u64, u64)>> {
    stretch_samples_with(idx, n_max, &ReducedEngine::default())
}

pub fn stretch_samples_with(
    idx: &KronIndex,
    n_max: u64,
    engine: &ReducedEngine<'_>,
) -> Result<Vec<(u64, u64)>> {
    if !idx.is_valid() {
        return Err(KronError::InvalidKronIndex(idx.to_array()));
    }
    (1..=n_max)
        .map(|n| {
            let k = i64::try_from(n).map_err(|_| KronError::Overflow("stretch factor"))?;
            Ok((n, kron_two_row(&idx.scaled(k), engine)?))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FitError {
    #[error("parity class {class} mod {period} has {have} samples, {need} needed")]
    TooFewSamples {
        class: u64,
        period: u64,
        have: usize,
        need: usize,
    },
    #[error("parity class {class} mod {period}: sample at N = {n} is {actual}, the fit gives {expected}")]
    Inconsistent {
        class: u64,
        period: u64,
        n: u64,
        expected: String,
        actual: u64,
    },
    #[error("period must be positive")]
    ZeroPeriod,
}

/// One polynomial per residue class of `N` mod `period`; coefficients in
/// ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateQuasi {
    period: u64,
    classes: Vec<Vec<BigRational>>,
}

impl UnivariateQuasi {
    pub fn new(classes: Vec<Vec<BigRational>>) -> Self {
        assert!(!classes.is_empty(), "a quasipolynomial needs a class");
        UnivariateQuasi {
            period: classes.len() as u64,
            classes,
        }
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn class(&self, c: u64) -> &[BigRational] {
        &self.classes[c as usize]
    }

    pub fn eval(&self, n: i64) -> BigRational {
        let coeffs = &self.classes[n.rem_euclid(self.period as i64) as usize];
        let x = BigRational::from_integer(BigInt::from(n));
        coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// The value at `n` when it is an integer that fits.
    pub fn eval_integer(&self, n: i64) -> Option<i128> {
        let v = self.eval(n);
        v.is_integer().then(|| v.to_integer().to_i128()).flatten()
    }

    /// True when every class is the same polynomial.
    pub fn is_polynomial(&self) -> bool {
        let strip = |c: &[BigRational]| {
            let mut v = c.to_vec();
            while v.last().is_some_and(Zero::is_zero) {
                v.pop();
            }
            v
        };
        let first = strip(&self.classes[0]);
        self.classes.iter().all(|c| strip(c) == first)
    }

    pub fn is_zero(&self) -> bool {
        self.classes.iter().flatten().all(Zero::is_zero)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: &[BigRational]) -> fmt::Result {
    let mut wrote = false;
    for (d, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        if wrote {
            write!(f, " {sign} ")?;
        } else if c.is_negative() {
            f.write_str("-")?;
        }
        let a = c.abs();
        let unit = a.is_one() && d > 0;
        if !unit {
            if a.is_integer() {
                write!(f, "{}", a.numer())?;
            } else {
                write!(f, "({a})")?;
            }
        }
        match d {
            0 => {}
            1 => f.write_str("N")?,
            _ => write!(f, "N^{d}")?,
        }
        wrote = true;
    }
    if !wrote {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for UnivariateQuasi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write_poly(f, &self.classes[0]);
        }
        for (c, coeffs) in self.classes.iter().enumerate() {
            if c > 0 {
                f.write_str("; ")?;
            }
            write!(f, "N ≡ {c} mod {}: ", self.period)?;
            write_poly(f, coeffs)?;
        }
        Ok(())
    }
}

impl Serialize for UnivariateQuasi {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            period: u64,
            classes: Vec<Vec<String>>,
        }
        Repr {
            period: self.period,
            classes: self
                .classes
                .iter()
                .map(|c| c.iter().map(ToString::to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

/// Coefficients of the degree-`degree` polynomial through `pts`, which must
/// have distinct abscissae; Gaussian elimination over the rationals.
fn interpolate(pts: &[(u64, u64)], degree: usize) -> Vec<BigRational> {
    let m = degree + 1;
    let mut a: Vec<Vec<BigRational>> = pts[..m]
        .iter()
        .map(|&(x, y)| {
            let x = BigRational::from_integer(BigInt::from(x));
            let mut row = Vec::with_capacity(m + 1);
            let mut p = BigRational::one();
            for _ in 0..m {
                row.push(p.clone());
                p *= &x;
            }
            row.push(BigRational::from_integer(BigInt::from(y)));
            row
        })
        .collect();
    for col in 0..m {
        let piv = (col..m)
            .find(|&r| !a[r][col].is_zero())
            .expect("Vandermonde matrix on distinct points is invertible");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..m {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..=m {
                    let t = &a[col][c] * &factor;
                    a[r][c] -= t;
                }
            }
        }
    }
    a.into_iter().map(|row| row[m].clone()).collect()
}

/// Exact fit of a quasipolynomial of the given period and degree. Each
/// residue class is interpolated on its first `degree + 1` samples and
/// checked against the rest.
pub fn fit_quasipolynomial(
    samples: &[(u64, u64)],
    period: u64,
    degree: usize,
) -> std::result::Result<UnivariateQuasi, FitError> {
    if period == 0 {
        return Err(FitError::ZeroPeriod);
    }
    let mut classes = Vec::with_capacity(period as usize);
    for class in 0..period {
        let mut pts: Vec<(u64, u64)> = samples
            .iter()
            .copied()
            .filter(|&(n, _)| n % period == class)
            .collect();
        pts.sort_unstable();
        pts.dedup_by_key(|p| p.0);
        if pts.len() < degree + 1 {
            return Err(FitError::TooFewSamples {
                class,
                period,
                have: pts.len(),
                need: degree + 1,
            });
        }
        classes.push(interpolate(&pts, degree));
    }
    let fitted = UnivariateQuasi::new(classes);
    for &(n, v) in samples {
        let expected = fitted.eval(n as i64);
        if expected != BigRational::from_integer(BigInt::from(v)) {
            return Err(FitError::Inconsistent {
                class: n % period,
                period,
                n,
                expected: expected.to_string(),
                actual: v,
            });
        }
    }
    Ok(fitted)
}

#[derive(Debug, Error)]
pub enum StretchError {
    #[error(transparent)]
    Kron(#[from] KronError),
    #[error("no period-2, degree-2 fit: {0}")]
    Fit(#[from] FitError),
}

/// A stretching function with its exact fit.
#[derive(Clone, Debug, Serialize)]
pub struct StretchProfile {
    pub base: KronIndex,
    pub samples: Vec<(u64, u64)>,
    pub fitted: UnivariateQuasi,
}

impl StretchProfile {
    pub fn compute(idx: &KronIndex, n_max: u64) -> std::result::Result<Self, StretchError> {
        let samples = stretch_samples(idx, n_max)?;
        let fitted = fit_quasipolynomial(&samples, 2, 2)?;
        Ok(StretchProfile {
            base: *idx,
            samples,
            fitted,
        })
    }

    /// `fitted(N)` for samples not yet taken.
    pub fn predict(&self, n: u64) -> Option<i128> {
        self.fitted.eval_integer(n as i64)
    }
}

pub const CERTIFICATE_SCHEMA_VERSION: u32 = 1;

/// A value of the stretching function at one scale, from both routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaleValues {
    pub stretch: u64,
    pub engine: u64,
    pub oracle: u64,
}

/// One saturation counterexample: `g(idx) = 0` although the odd residue
/// class of the stretching quasipolynomial is not identically zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShCertificate {
    pub schema_version: u32,
    pub index: KronIndex,
    pub at_1: ScaleValues,
    pub at_2: ScaleValues,
    /// First odd scale (3 or 5) with a nonzero value.
    pub odd_witness: ScaleValues,
    pub systems: Vec<VanishingSystem>,
}

impl ShCertificate {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}

fn oracle_at(oracle: &Oracle, idx: &KronIndex, k: u64) -> Result<u64> {
    let (l, m, n) = idx.scaled(k as i64).partitions()?;
    oracle.kron_oracle(&l, &m, &n)
}

fn check(idx: &KronIndex, k: u64, engine_value: u64, oracle: &Oracle) -> Result<ScaleValues> {
    let o = oracle_at(oracle, idx, k)?;
    if o != engine_value {
        return Err(KronError::Disagreement(format!(
            "g({k}·{idx}) is {engine_value} by formula and {o} by characters"
        )));
    }
    Ok(ScaleValues {
        stretch: k,
        engine: engine_value,
        oracle: o,
    })
}

fn certificate(
    idx: &KronIndex,
    engine: &ReducedEngine<'_>,
    oracle: &Oracle,
) -> Result<Option<ShCertificate>> {
    let g = |k: i64| kron_two_row(&idx.scaled(k), engine);
    let (g1, g2) = (g(1)?, g(2)?);
    if g1 != 0 || g2 == 0 {
        return Ok(None);
    }
    let mut odd = None;
    for k in [3, 5] {
        let v = g(k)?;
        if v > 0 {
            odd = Some((k as u64, v));
            break;
        }
    }
    let Some((k, v)) = odd else {
        return Ok(None);
    };
    Ok(Some(ShCertificate {
        schema_version: CERTIFICATE_SCHEMA_VERSION,
        index: *idx,
        at_1: check(idx, 1, g1, oracle)?,
        at_2: check(idx, 2, g2, oracle)?,
        odd_witness: check(idx, k, v, oracle)?,
        systems: vanishing_systems(idx)?,
    }))
}

/// Every index in the box where the saturation property fails, sorted.
/// Each hit is confirmed by the oracle at every scale it relies on.
pub fn find_sh_counterexamples(bx: &IndexBox, oracle: &Oracle) -> Result<Vec<ShCertificate>> {
    find_sh_counterexamples_with(bx, &ReducedEngine::default(), oracle)
}

pub fn find_sh_counterexamples_with(
    bx: &IndexBox,
    engine: &ReducedEngine<'_>,
    oracle: &Oracle,
) -> Result<Vec<ShCertificate>> {
    let found: Vec<Option<ShCertificate>> = bx
        .indices()
        .par_iter()
        .map(|idx| certificate(idx, engine, oracle))
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[(i64, i64)]) -> Vec<BigRational> {
        v.iter()
            .map(|&(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
            .collect()
    }

    #[test]
    fn fits_a_polynomial() {
        let s = [(1, 6), (2, 15), (3, 28), (4, 45), (5, 66), (6, 91)];
        let f = fit_quasipolynomial(&s, 2, 2).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.class(0), q(&[(1, 1), (3, 1), (2, 1)]).as_slice());
        assert_eq!(f.to_string(), "2N^2 + 3N + 1");
        assert_eq!(f.eval_integer(0), Some(1));
    }

    #[test]
    fn fits_constants() {
        let s: Vec<(u64, u64)> = (1..=6).map(|n| (n, 1)).collect();
        let f = fit_quasipolynomial(&s, 2, 2).unwrap();
        assert_eq!(f.to_string(), "1");
    }

    #[test]
    fn fits_a_genuine_quasipolynomial() {
        // (N + 1)/2 rounded down
        let s: Vec<(u64, u64)> = (1..=8u64).map(|n| (n, n.div_ceil(2))).collect();
        let f = fit_quasipolynomial(&s, 2, 2).unwrap();
        assert!(!f.is_polynomial());
        assert_eq!(f.eval_integer(0), Some(0));
        assert_eq!(f.eval_integer(9), Some(5));
        assert_eq!(
            f.to_string(),
            "N ≡ 0 mod 2: (1/2)N; N ≡ 1 mod 2: (1/2)N + (1/2)"
        );
    }

    #[test]
    fn fit_failures_name_the_class() {
        let s = [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)];
        assert_eq!(
            fit_quasipolynomial(&s, 2, 2),
            Err(FitError::TooFewSamples {
                class: 0,
                period: 2,
                have: 2,
                need: 3
            })
        );
        let s: Vec<(u64, u64)> = (1..=8u64).map(|n| (n, n.pow(3))).collect();
        match fit_quasipolynomial(&s, 2, 2) {
            Err(FitError::Inconsistent { class, n, .. }) => assert_eq!((class, n), (1, 7)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn samples_of_a_trivial_stretch() {
        let idx = KronIndex::new(2, 1, 1, 0, 0).unwrap();
        assert_eq!(
            stretch_samples(&idx, 4).unwrap(),
            vec![(1, 1), (2, 1), (3, 1), (4, 1)]
        );
    }

    #[test]
    fn empty_box_has_no_counterexamples() {
        let o = Oracle::default();
        assert!(find_sh_counterexamples(&IndexBox::empty(), &o)
            .unwrap()
            .is_empty());
    }
}
