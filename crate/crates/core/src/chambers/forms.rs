//! Linear forms on the parameter space `(r, s, g1, g2)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{KronError, Result};
use crate::polygon::{ROW_COEFFS, ROW_CONSTANTS};
use crate::quasi::Affine;

pub const VARS: [&str; 4] = ["r", "s", "g1", "g2"];

/// A homogeneous integral linear form `a·(r, s, g1, g2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearForm(pub [i64; 4]);

impl LinearForm {
    pub fn eval(&self, h: [i64; 4]) -> i64 {
        self.0.iter().zip(h).map(|(a, x)| a * x).sum()
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm(self.0.map(|a| -a))
    }

    pub fn affine(&self) -> Affine {
        Affine::new(self.0.to_vec(), 0)
    }

    /// `r - s`.
    pub fn r_minus_s() -> LinearForm {
        LinearForm([1, -1, 0, 0])
    }

    /// The degenerate form `f_25 = g1 - g2`.
    pub fn f25() -> LinearForm {
        LinearForm([0, 0, 1, -1])
    }

    /// The degenerate form `f_46 = g2`.
    pub fn f46() -> LinearForm {
        LinearForm([0, 0, 0, 1])
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, v) in self.0.iter().zip(VARS) {
            if *a == 0 {
                continue;
            }
            let sign = if *a < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = a.abs();
            let sep = if first { "" } else { " " };
            let sp = if first || sign.is_empty() { "" } else { " " };
            if mag == 1 {
                write!(f, "{sep}{sign}{sp}{v}")?;
            } else {
                write!(f, "{sep}{sign}{sp}{mag}{v}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `f_ijk`: minus the determinant of the columns `(a, b, c(h))` of rows
/// `i`, `j`, `k` of the polygon system, as a linear form in `h`.
pub fn triple_form(i: usize, j: usize, k: usize) -> Result<LinearForm> {
    if i > 6 || j > 6 || k > 6 || i == j || j == k || i == k {
        return Err(KronError::BadTriple([i, j, k]));
    }
    let (a, b) = (|t: usize| ROW_COEFFS[t].0, |t: usize| ROW_COEFFS[t].1);
    // Laplace expansion along the c-row.
    let minor = [
        a(j) * b(k) - a(k) * b(j),
        -(a(i) * b(k) - a(k) * b(i)),
        a(i) * b(j) - a(j) * b(i),
    ];
    let mut coeffs = [0i64; 4];
    for (m, t) in minor.iter().zip([i, j, k]) {
        for (c, x) in coeffs.iter_mut().zip(ROW_CONSTANTS[t]) {
            *c -= m * x;
        }
    }
    Ok(LinearForm(coeffs))
}

/// Value of `f_ijk` at `h`.
pub fn f_form(i: usize, j: usize, k: usize, h: [i64; 4]) -> Result<i64> {
    Ok(triple_form(i, j, k)?.eval(h))
}

/// A named half-space `form >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub label: String,
    pub form: LinearForm,
}

impl Inequality {
    pub fn holds(&self, h: [i64; 4]) -> bool {
        self.form.eval(h) >= 0
    }

    pub fn strict(&self, h: [i64; 4]) -> bool {
        self.form.eval(h) > 0
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} >= 0", self.label, self.form)
    }
}

/// Resolves a facet name: two digits for the degenerate forms (`"25"`,
/// `"46"`), three for `f_ijk`.
pub fn named_form(name: &str) -> Result<LinearForm> {
    let digits: Vec<usize> = name
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as usize))
        .collect::<Option<_>>()
        .ok_or_else(|| KronError::Catalog(format!("bad form name {name:?}")))?;
    match digits.as_slice() {
        [2, 5] => Ok(LinearForm::f25()),
        [4, 6] => Ok(LinearForm::f46()),
        &[i, j, k] => triple_form(i, j, k),
        _ => Err(KronError::Catalog(format!("bad form name {name:?}"))),
    }
}

/// The cone of parameters with nonzero reduced coefficients, as seven
/// half-spaces.
pub fn delta_prime() -> Vec<Inequality> {
    let le = |name: &str| Inequality {
        label: format!("-f{name}"),
        form: named_form(name).expect("static name").neg(),
    };
    let ge = |name: &str| Inequality {
        label: format!("f{name}"),
        form: named_form(name).expect("static name"),
    };
    vec![
        le("145"),
        le("045"),
        le("356"),
        le("035"),
        le("135"),
        ge("25"),
        ge("46"),
    ]
}

pub fn in_delta_prime(h: [i64; 4]) -> bool {
    delta_prime().iter().all(|q| q.holds(h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn facet_forms() {
        assert_eq!(triple_form(1, 3, 5).unwrap(), LinearForm([0, -1, 0, 1]));
        assert_eq!(triple_form(1, 4, 5).unwrap(), LinearForm([1, -1, -1, 0]));
        assert_eq!(triple_form(0, 4, 5).unwrap(), LinearForm([-1, 1, -1, 0]));
        assert_eq!(triple_form(3, 5, 6).unwrap(), LinearForm([-1, -1, 1, 1]));
        assert_eq!(triple_form(0, 3, 5).unwrap(), LinearForm([-1, 0, 0, 1]));
    }

    #[test]
    fn repeated_indices_are_rejected() {
        assert_eq!(triple_form(1, 1, 5), Err(KronError::BadTriple([1, 1, 5])));
        assert!(triple_form(1, 2, 7).is_err());
    }

    #[test]
    fn alternating_in_the_indices() {
        for (i, j, k) in [(0, 2, 4), (1, 3, 6), (2, 5, 6)] {
            let f = triple_form(i, j, k).unwrap();
            assert_eq!(triple_form(j, i, k).unwrap(), f.neg());
            assert_eq!(triple_form(j, k, i).unwrap(), f);
        }
    }

    #[test]
    fn cone_membership() {
        assert!(in_delta_prime([0, 0, 0, 0]));
        assert!(in_delta_prime([1, 1, 0, 0]));
        assert!(!in_delta_prime([1, 0, 0, 0]));
        assert!(in_delta_prime([13, 8, 10, 6]));
    }

    #[test]
    fn display() {
        assert_eq!(LinearForm([1, -1, -1, 0]).to_string(), "r - s - g1");
        assert_eq!(LinearForm([0, -1, 0, 1]).to_string(), "-s + g2");
        assert_eq!(LinearForm([0, 0, 2, 0]).to_string(), "2g1");
        assert_eq!(LinearForm([0; 4]).to_string(), "0");
    }
}
