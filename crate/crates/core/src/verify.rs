//! Agreement sweeps between the engines over a box of indices.

use rayon::prelude::*;
use serde::Serialize;

use crate::chambers::ChamberCatalog;
use crate::error::Result;
use crate::index::{IndexBox, KronIndex};
use crate::kron::{kron_two_row_value, EngineKind, ReducedEngine};
use crate::oracle::Oracle;

/// An index where the engines do not all return the same value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: KronIndex,
    pub values: Vec<(EngineKind, i64)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Evaluates every index of the box with each listed engine. The chamber
/// engine uses `catalog`, so a corrupted catalog shows up as mismatches.
/// Mismatches come back sorted by index.
pub fn verify_box(
    bx: &IndexBox,
    engines: &[EngineKind],
    catalog: &ChamberCatalog,
    oracle: &Oracle,
) -> Result<VerifyReport> {
    let engines: Vec<ReducedEngine<'_>> = engines
        .iter()
        .map(|k| match k {
            EngineKind::Count => ReducedEngine::Count,
            EngineKind::Chamber => ReducedEngine::Chamber(catalog),
            EngineKind::Oracle => ReducedEngine::Oracle(oracle),
        })
        .collect();
    let indices = bx.indices();
    let mut mismatches: Vec<Mismatch> = indices
        .par_iter()
        .map(|idx| {
            let values = engines
                .iter()
                .map(|e| Ok((e.kind(), kron_two_row_value(idx, e)?)))
                .collect::<Result<Vec<_>>>()?;
            let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
            Ok((!agree).then_some(Mismatch {
                index: *idx,
                values,
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    mismatches.sort_by_key(|m| m.index);
    Ok(VerifyReport {
        checked: indices.len(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chambers::RuleClass;

    #[test]
    fn small_box_is_clean() {
        let o = Oracle::default();
        let r = verify_box(
            &IndexBox::up_to(6),
            &EngineKind::ALL,
            ChamberCatalog::standard(),
            &o,
        )
        .unwrap();
        assert!(r.is_clean(), "{:?}", r.mismatches);
        assert!(r.checked > 0);
    }

    #[test]
    fn corrupted_catalog_is_caught() {
        let bad = ChamberCatalog::standard()
            .with_rule((1, 2, 3), RuleClass::SquareQuarter)
            .unwrap();
        let r = verify_box(
            &IndexBox::up_to(10),
            &[EngineKind::Count, EngineKind::Chamber],
            &bad,
            &Oracle::default(),
        )
        .unwrap();
        assert!(!r.is_clean());
    }
}
