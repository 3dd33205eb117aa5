//! Versioned JSON form of a chamber catalog.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{ChamberCatalog, Facet, Inequality, LinearForm, RuleClass, Wall, VARS};
use crate::error::{KronError, Result};
use crate::quasi::NormalForm;

pub const CATALOG_SCHEMA_VERSION: u32 = 1;
const KIND: &str = "kron22.chamber_catalog";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDocument {
    pub schema_version: u32,
    pub kind: String,
    pub variables: Vec<String>,
    pub root: String,
    pub cone: Vec<Inequality>,
    pub chambers: Vec<ChamberEntry>,
    pub edges: Vec<[usize; 2]>,
    pub rules: Vec<RuleEntry>,
    pub facets: Vec<FacetEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberEntry {
    pub id: usize,
    pub sides: Vec<usize>,
    pub neighbors: Vec<NeighborEntry>,
    /// Wall inequalities; the closed cell also satisfies every `cone` entry.
    pub inequalities: Vec<Inequality>,
    pub quasipolynomial: NormalForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborEntry {
    pub id: usize,
    pub wall: Wall,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleEntry {
    pub triple: [usize; 3],
    pub class: RuleClass,
    pub zero_offsets: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetEntry {
    pub name: String,
    pub form: LinearForm,
    pub chambers: Vec<usize>,
    pub offsets: Vec<i64>,
}

impl ChamberCatalog {
    pub fn to_document(&self) -> CatalogDocument {
        CatalogDocument {
            schema_version: CATALOG_SCHEMA_VERSION,
            kind: KIND.to_string(),
            variables: VARS.iter().map(|v| v.to_string()).collect(),
            root: self.root().label(),
            cone: super::delta_prime(),
            chambers: self
                .chambers()
                .iter()
                .map(|c| ChamberEntry {
                    id: c.id,
                    sides: c.sides.clone(),
                    neighbors: c
                        .neighbors
                        .iter()
                        .map(|&(id, wall)| NeighborEntry { id, wall })
                        .collect(),
                    inequalities: self.chamber_inequalities(c),
                    quasipolynomial: self.quasipolynomial(c).normal_form(),
                })
                .collect(),
            edges: self.edges().iter().map(|&(a, b)| [a, b]).collect(),
            rules: self
                .rules()
                .iter()
                .map(|(&(i, j, k), &class)| RuleEntry {
                    triple: [i, j, k],
                    class,
                    zero_offsets: class.zero_offsets().to_vec(),
                })
                .collect(),
            facets: self
                .facets()
                .iter()
                .map(|f| FacetEntry {
                    name: f.name.clone(),
                    form: f.form,
                    chambers: f.chambers.clone(),
                    offsets: f.offsets.clone(),
                })
                .collect(),
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_document()).expect("serializable");
        s.push('\n');
        s
    }

    /// Rebuilds a catalog from its chambers, edges, rules and facets. The
    /// derived fields (inequalities, quasipolynomials) are recomputed, not
    /// trusted.
    pub fn from_document(doc: &CatalogDocument) -> Result<ChamberCatalog> {
        if doc.schema_version != CATALOG_SCHEMA_VERSION {
            return Err(KronError::Catalog(format!(
                "schema version {} is not supported (expected {CATALOG_SCHEMA_VERSION})",
                doc.schema_version
            )));
        }
        if doc.kind != KIND {
            return Err(KronError::Catalog(format!(
                "unexpected document kind {:?}",
                doc.kind
            )));
        }
        for (pos, c) in doc.chambers.iter().enumerate() {
            if c.id != pos {
                return Err(KronError::Catalog(format!(
                    "chamber ids must be 0..n, got {}",
                    c.id
                )));
            }
        }
        let sides = doc
            .chambers
            .iter()
            .map(|c| {
                let mut s = c.sides.clone();
                s.sort_unstable();
                s.dedup();
                if s.iter().any(|&d| d > 6) {
                    return Err(KronError::Catalog(format!("bad sides-set {:?}", c.sides)));
                }
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut rules = BTreeMap::new();
        for r in &doc.rules {
            let [i, j, k] = r.triple;
            if rules.insert((i, j, k), r.class).is_some() {
                return Err(KronError::Catalog(format!("duplicate rule {i}{j}{k}")));
            }
        }
        let facets = doc
            .facets
            .iter()
            .map(|f| Facet {
                name: f.name.clone(),
                form: f.form,
                chambers: f.chambers.clone(),
                offsets: f.offsets.clone(),
            })
            .collect();
        ChamberCatalog::build(
            sides,
            doc.edges.iter().map(|&[a, b]| (a, b)).collect(),
            rules,
            facets,
            &doc.root,
        )
    }

    pub fn from_json(s: &str) -> Result<ChamberCatalog> {
        let doc: CatalogDocument =
            serde_json::from_str(s).map_err(|e| KronError::Catalog(e.to_string()))?;
        Self::from_document(&doc)
    }
}
