//! Quasipolynomials of degree at most two with period two in every
//! coordinate, stored in the normal form `(Q + 2L + M) / 4`.
//!
//! `Q` is an integral quadratic form, `L` an integral linear form and `M` an
//! integer constant that depends only on the residues of the coordinates
//! mod 2. The coset of a point is encoded as a bitmask, bit `i` set when
//! coordinate `i` is odd.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{KronError, Result};

/// An affine form `c + Σ a_i x_i` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Affine {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

impl Affine {
    pub fn new(coeffs: Vec<i64>, constant: i64) -> Self {
        Affine { coeffs, constant }
    }

    pub fn eval(&self, x: &[i64]) -> i128 {
        self.coeffs
            .iter()
            .zip(x)
            .map(|(&a, &v)| i128::from(a) * i128::from(v))
            .sum::<i128>()
            + i128::from(self.constant)
    }

    /// Parity of the form on the coset `mask`.
    pub fn is_odd_on(&self, mask: u32) -> bool {
        let mut p = self.constant.rem_euclid(2);
        for (i, a) in self.coeffs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                p += a.rem_euclid(2);
            }
        }
        p % 2 == 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quasipolynomial {
    vars: Vec<String>,
    /// Upper-triangular coefficients of `Q`, row-major: `x_0², x_0 x_1, …`.
    quad: Vec<i64>,
    lin: Vec<i64>,
    /// `M` per coset, indexed by residue bitmask.
    consts: Vec<i64>,
}

/// Position of monomial `x_i x_j` (`i <= j`) in the packed upper triangle.
fn tri(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * n - i * (i + 1) / 2 + j
}

impl Quasipolynomial {
    pub fn zero(vars: &[&str]) -> Self {
        let n = vars.len();
        assert!(n <= 16, "too many variables");
        Quasipolynomial {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            quad: vec![0; n * (n + 1) / 2],
            lin: vec![0; n],
            consts: vec![0; 1 << n],
        }
    }

    pub fn constant(vars: &[&str], c: i64) -> Self {
        let mut q = Self::zero(vars);
        q.consts.iter_mut().for_each(|m| *m = 4 * c);
        q
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Coefficient of `x_i x_j` in `Q`.
    pub fn quad_coeff(&self, i: usize, j: usize) -> i64 {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        self.quad[tri(self.nvars(), i, j)]
    }

    pub fn lin_coeffs(&self) -> &[i64] {
        &self.lin
    }

    pub fn coset_constant(&self, mask: u32) -> i64 {
        self.consts[mask as usize]
    }

    /// `k·f²/4`.
    pub fn square(vars: &[&str], f: &Affine, k: i64) -> Self {
        let n = vars.len();
        let mut q = Self::zero(vars);
        for i in 0..n {
            for j in i..n {
                let c = f.coeffs[i] * f.coeffs[j];
                q.quad[tri(n, i, j)] = k * if i == j { c } else { 2 * c };
            }
        }
        // k (Σ a x + c)² = k Q + 2 k c Σ a x + k c²; the linear part enters as
        // 2L, so L = k c a.
        for i in 0..n {
            q.lin[i] = k * f.constant * f.coeffs[i];
        }
        let c2 = k * f.constant * f.constant;
        q.consts.iter_mut().for_each(|m| *m = c2);
        q
    }

    /// `k·f / 2`.
    pub fn half_linear(vars: &[&str], f: &Affine, k: i64) -> Self {
        let mut q = Self::zero(vars);
        for (l, a) in q.lin.iter_mut().zip(&f.coeffs) {
            *l = k * a;
        }
        q.consts.iter_mut().for_each(|m| *m = 2 * k * f.constant);
        q
    }

    /// `k/4` on cosets where `f` is odd, 0 elsewhere.
    pub fn odd_indicator(vars: &[&str], f: &Affine, k: i64) -> Self {
        let mut q = Self::zero(vars);
        for (mask, m) in q.consts.iter_mut().enumerate() {
            if f.is_odd_on(mask as u32) {
                *m = k;
            }
        }
        q
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "variable lists differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let zip = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        Quasipolynomial {
            vars: self.vars.clone(),
            quad: zip(&self.quad, &other.quad),
            lin: zip(&self.lin, &other.lin),
            consts: zip(&self.consts, &other.consts),
        }
    }

    pub fn neg(&self) -> Self {
        let neg = |a: &[i64]| a.iter().map(|x| -x).collect();
        Quasipolynomial {
            vars: self.vars.clone(),
            quad: neg(&self.quad),
            lin: neg(&self.lin),
            consts: neg(&self.consts),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn coset_of(x: &[i64]) -> u32 {
        x.iter()
            .enumerate()
            .fold(0, |m, (i, v)| m | ((v.rem_euclid(2) as u32) << i))
    }

    /// `4·P(x)` in exact arithmetic.
    pub fn eval_times_four(&self, x: &[i64]) -> Result<i128> {
        assert_eq!(x.len(), self.nvars(), "point has the wrong dimension");
        let n = self.nvars();
        let ov = || KronError::Overflow("quasipolynomial evaluation");
        let mut acc = i128::from(self.consts[Self::coset_of(x) as usize]);
        for i in 0..n {
            let xi = i128::from(x[i]);
            let l = i128::from(self.lin[i]).checked_mul(2 * xi).ok_or_else(ov)?;
            acc = acc.checked_add(l).ok_or_else(ov)?;
            for j in i..n {
                let c = self.quad[tri(n, i, j)];
                if c != 0 {
                    let t = i128::from(c)
                        .checked_mul(xi)
                        .and_then(|t| t.checked_mul(i128::from(x[j])))
                        .ok_or_else(ov)?;
                    acc = acc.checked_add(t).ok_or_else(ov)?;
                }
            }
        }
        Ok(acc)
    }

    /// Exact value; fails if the value is not an integer.
    pub fn try_eval(&self, x: &[i64]) -> Result<i128> {
        let four = self.eval_times_four(x)?;
        if four % 4 != 0 {
            return Err(KronError::Unsupported(format!(
                "quasipolynomial takes the non-integral value {four}/4 at {x:?}"
            )));
        }
        Ok(four / 4)
    }

    /// Exact value. Panics if the quasipolynomial is not integer-valued at `x`
    /// or the computation overflows.
    pub fn eval(&self, x: &[i64]) -> i128 {
        self.try_eval(x).expect("integral quasipolynomial")
    }

    /// Sufficient and necessary test that every integer point gets an
    /// integer value: cross terms of `Q` are even (so the value mod 4 only
    /// depends on residues mod 2) and every coset representative in
    /// `{0,1}^n` evaluates to a multiple of 4.
    pub fn is_integral(&self) -> bool {
        let n = self.nvars();
        for i in 0..n {
            for j in i + 1..n {
                if self.quad[tri(n, i, j)] % 2 != 0 {
                    return false;
                }
            }
        }
        (0..1u32 << n).all(|mask| {
            let x: Vec<i64> = (0..n).map(|i| i64::from(mask >> i & 1)).collect();
            self.eval_times_four(&x).is_ok_and(|v| v % 4 == 0)
        })
    }

    /// The polynomial `(Q + 2L + M(coset)) / 4` valid on one coset, as a
    /// map from exponent vectors to coefficients with denominator 4.
    pub fn polynomial_on(&self, mask: u32) -> Vec<(Vec<u32>, i64)> {
        let n = self.nvars();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let c = self.quad[tri(n, i, j)];
                if c != 0 {
                    let mut e = vec![0; n];
                    e[i] += 1;
                    e[j] += 1;
                    out.push((e, c));
                }
            }
        }
        for i in 0..n {
            if self.lin[i] != 0 {
                let mut e = vec![0; n];
                e[i] = 1;
                out.push((e, 2 * self.lin[i]));
            }
        }
        let m = self.consts[mask as usize];
        if m != 0 {
            out.push((vec![0; n], m));
        }
        out
    }

    pub fn normal_form(&self) -> NormalForm {
        let n = self.nvars();
        let mut q = Vec::new();
        for i in 0..n {
            for j in i..n {
                let c = self.quad[tri(n, i, j)];
                if c != 0 {
                    q.push(Monomial {
                        vars: vec![self.vars[i].clone(), self.vars[j].clone()],
                        coeff: c,
                    });
                }
            }
        }
        let l = (0..n)
            .filter(|&i| self.lin[i] != 0)
            .map(|i| Monomial {
                vars: vec![self.vars[i].clone()],
                coeff: self.lin[i],
            })
            .collect();
        let m = (0..1u32 << n)
            .map(|mask| CosetConstant {
                residues: (0..n).map(|i| (mask >> i & 1) as u8).collect(),
                m: self.consts[mask as usize],
            })
            .collect();
        NormalForm {
            vars: self.vars.clone(),
            q,
            l,
            m,
        }
    }

    pub fn from_normal_form(nf: &NormalForm) -> Result<Self> {
        let names: Vec<&str> = nf.vars.iter().map(String::as_str).collect();
        let n = names.len();
        if n > 16 {
            return Err(KronError::Catalog("too many variables".into()));
        }
        let pos = |v: &str| {
            names
                .iter()
                .position(|w| *w == v)
                .ok_or_else(|| KronError::Catalog(format!("unknown variable {v:?}")))
        };
        let mut q = Self::zero(&names);
        for mono in &nf.q {
            let [a, b] = mono.vars.as_slice() else {
                return Err(KronError::Catalog(
                    "quadratic monomial needs two variables".into(),
                ));
            };
            let (i, j) = (pos(a)?, pos(b)?);
            let (i, j) = if i <= j { (i, j) } else { (j, i) };
            q.quad[tri(n, i, j)] += mono.coeff;
        }
        for mono in &nf.l {
            let [a] = mono.vars.as_slice() else {
                return Err(KronError::Catalog(
                    "linear monomial needs one variable".into(),
                ));
            };
            q.lin[pos(a)?] += mono.coeff;
        }
        if nf.m.len() != 1 << n {
            return Err(KronError::Catalog("wrong number of coset constants".into()));
        }
        for c in &nf.m {
            if c.residues.len() != n || c.residues.iter().any(|&b| b > 1) {
                return Err(KronError::Catalog("bad coset residues".into()));
            }
            let mask = c
                .residues
                .iter()
                .enumerate()
                .fold(0usize, |m, (i, &b)| m | (usize::from(b) << i));
            q.consts[mask] = c.m;
        }
        Ok(q)
    }
}

impl fmt::Debug for Quasipolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders `(Q + 2L + M) / 4` with `M` listed per coset.
impl fmt::Display for Quasipolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nf = self.normal_form();
        let join = |terms: &[Monomial]| {
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms
                    .iter()
                    .map(|t| format!("{}*{}", t.coeff, t.vars.join("*")))
                    .collect::<Vec<_>>()
                    .join(" + ")
            }
        };
        write!(
            f,
            "(Q + 2L + M)/4 with Q = {}, L = {}, M = [",
            join(&nf.q),
            join(&nf.l)
        )?;
        for (i, c) in self.consts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub vars: Vec<String>,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetConstant {
    pub residues: Vec<u8>,
    pub m: i64,
}

/// Serializable `(Q, L, M)` triple; the value is `Q/4 + L/2 + M/4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalForm {
    pub vars: Vec<String>,
    pub q: Vec<Monomial>,
    pub l: Vec<Monomial>,
    pub m: Vec<CosetConstant>,
}

#[cfg(test)]
mod tests {
    use super::*;

    const V: [&str; 2] = ["x", "y"];

    #[test]
    fn binomial_via_square_and_linear() {
        // x(x-1)/2 = 2x²/4 - x/2
        let f = Affine::new(vec![1, 0], 0);
        let p = Quasipolynomial::square(&V, &f, 2).sub(&Quasipolynomial::half_linear(&V, &f, 1));
        for x in -5..=5 {
            assert_eq!(p.eval(&[x, 7]), i128::from(x * (x - 1) / 2));
        }
        assert!(p.is_integral());
    }

    #[test]
    fn floor_square_over_four() {
        // (f² - [f odd]) / 4 with f = x + y + 1
        let f = Affine::new(vec![1, 1], 1);
        let p = Quasipolynomial::square(&V, &f, 1).sub(&Quasipolynomial::odd_indicator(&V, &f, 1));
        for x in -6..=6 {
            for y in -6..=6 {
                let v = x + y + 1;
                assert_eq!(p.eval(&[x, y]), i128::from(v * v / 4));
            }
        }
        assert!(p.is_integral());
    }

    #[test]
    fn non_integral_is_detected() {
        let f = Affine::new(vec![1, 0], 0);
        let p = Quasipolynomial::half_linear(&V, &f, 1);
        assert!(!p.is_integral());
        assert!(p.try_eval(&[1, 0]).is_err());
        assert_eq!(p.try_eval(&[2, 0]).unwrap(), 1);
    }

    #[test]
    fn normal_form_round_trip() {
        let f = Affine::new(vec![2, -1], 3);
        let p = Quasipolynomial::square(&V, &f, 1)
            .add(&Quasipolynomial::odd_indicator(&V, &f, 3))
            .add(&Quasipolynomial::constant(&V, 2));
        let nf = p.normal_form();
        assert_eq!(Quasipolynomial::from_normal_form(&nf).unwrap(), p);
    }

    #[test]
    fn polynomial_on_coset_matches_eval() {
        let f = Affine::new(vec![1, 1], 0);
        let p = Quasipolynomial::square(&V, &f, 1).sub(&Quasipolynomial::odd_indicator(&V, &f, 1));
        let poly = p.polynomial_on(0b01);
        let x = [3i64, 4];
        let v: i64 = poly
            .iter()
            .map(|(e, c)| c * x[0].pow(e[0]) * x[1].pow(e[1]))
            .sum();
        assert_eq!(i128::from(v / 4), p.eval(&x));
    }

    #[test]
    fn overflow_is_reported() {
        let f = Affine::new(vec![1, 0], 0);
        let p = Quasipolynomial::square(&V, &f, 1);
        assert!(matches!(
            p.eval_times_four(&[i64::MAX, 0]),
            Ok(_) | Err(KronError::Overflow(_))
        ));
        let big = Quasipolynomial::square(&V, &f, i64::MAX);
        assert_eq!(
            big.eval_times_four(&[i64::MAX, 0]),
            Err(KronError::Overflow("quasipolynomial evaluation"))
        );
    }
}
