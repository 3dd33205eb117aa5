//! Kronecker coefficients of the symmetric group indexed by two two-row
//! shapes.
//!
//! Three independent routes to the same numbers:
//!
//! * [`polygon`]: reduced coefficients as lattice-point counts of a
//!   parametric polygon;
//! * [`chambers`]: reduced coefficients as quasipolynomials on the 26
//!   chambers of a fan, evaluated by walking the chamber graph;
//! * [`oracle`]: characters of `S_n` by the Murnaghan–Nakayama rule and
//!   reduced coefficients by stabilization.
//!
//! [`kron`] rebuilds ordinary coefficients from reduced ones and decides
//! vanishing; [`stretch`] studies `N ↦ g(N·idx)` and certifies saturation
//! counterexamples.
//!
//! ```
//! use kron22::{kron::kron_full, part};
//!
//! let g = kron_full(&part![2, 2], &part![2, 2], &part![2, 2]).unwrap();
//! assert_eq!(g, 1);
//! ```

pub mod chambers;
pub mod error;
pub mod index;
pub mod kron;
pub mod oracle;
pub mod partition;
pub mod polygon;
pub mod quasi;
pub mod stretch;
pub mod verify;

pub use error::{KronError, Result};
pub use index::{IndexBox, KronIndex, Normalized, ReducedIndex};
pub use partition::Partition;
pub use quasi::Quasipolynomial;

#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $file:literal) => {
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            pub struct $name;
        };
    }
    chapter!(Intro, "intro.md");
    chapter!(Indices, "indices.md");
    chapter!(Polygon, "polygon.md");
    chapter!(Chambers, "chambers.md");
    chapter!(Reconstruction, "reconstruction.md");
    chapter!(Oracle, "oracle.md");
    chapter!(Stretching, "stretching.md");
    chapter!(Cli, "cli.md");
    chapter!(Schemas, "schemas.md");
}
