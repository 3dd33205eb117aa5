//! The 26-chamber fan on which the reduced coefficients are given by
//! quasipolynomials, and evaluation by walking the adjacency graph.
//!
//! Each chamber is labelled by the set of polygon rows supporting an edge
//! of the polygon. Adjacent chambers either differ by exchanging rows 0 and
//! 1 (the wall `r = s`) or by one inserted row `j`; in the latter case the
//! wall is `f_ijk = 0` where `i`, `k` are the cyclic neighbours of `j` in the
//! larger set. The quasipolynomials of adjacent chambers differ by one of
//! three rule classes evaluated at `f_ijk`.

mod data;
mod export;
mod forms;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use export::{CatalogDocument, CATALOG_SCHEMA_VERSION};
pub use forms::{
    delta_prime, f_form, in_delta_prime, named_form, triple_form, Inequality, LinearForm, VARS,
};

use crate::error::{KronError, Result};
use crate::index::ReducedIndex;
use crate::quasi::{Affine, Quasipolynomial};

/// The three shapes a difference `q_I - q_J` can take, as a function of
/// `f = f_ijk(h)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleClass {
    /// `f (f - 1) / 2`.
    Choose2,
    /// `(f² - [f odd]) / 4`.
    SquareQuarter,
    /// `(f (f - 2) + [f odd]) / 4`.
    ShiftedQuarter,
}

impl RuleClass {
    pub const ALL: [RuleClass; 3] = [
        RuleClass::Choose2,
        RuleClass::SquareQuarter,
        RuleClass::ShiftedQuarter,
    ];

    pub fn apply(self, f: i64) -> Result<i64> {
        let ov = || KronError::Overflow("wall difference");
        let f = i128::from(f);
        let odd = i128::from(f.rem_euclid(2) == 1);
        let v = match self {
            RuleClass::Choose2 => f.checked_mul(f - 1).map(|x| x / 2),
            RuleClass::SquareQuarter => f.checked_mul(f).map(|x| (x - odd) / 4),
            RuleClass::ShiftedQuarter => f.checked_mul(f - 2).map(|x| (x + odd) / 4),
        }
        .ok_or_else(ov)?;
        i64::try_from(v).map_err(|_| ov())
    }

    /// Offsets `δ` for which the difference vanishes on `f = δ`.
    pub fn zero_offsets(self) -> &'static [i64] {
        match self {
            RuleClass::Choose2 => &[0, 1],
            RuleClass::SquareQuarter => &[-1, 0, 1],
            RuleClass::ShiftedQuarter => &[0, 1, 2],
        }
    }

    /// The difference as a quasipolynomial in `(r, s, g1, g2)`.
    pub fn quasipolynomial(self, f: &LinearForm) -> Quasipolynomial {
        let a = f.affine();
        match self {
            RuleClass::Choose2 => Quasipolynomial::square(&VARS, &a, 2)
                .sub(&Quasipolynomial::half_linear(&VARS, &a, 1)),
            RuleClass::SquareQuarter => Quasipolynomial::square(&VARS, &a, 1)
                .sub(&Quasipolynomial::odd_indicator(&VARS, &a, 1)),
            RuleClass::ShiftedQuarter => Quasipolynomial::square(&VARS, &a, 1)
                .sub(&Quasipolynomial::half_linear(&VARS, &a, 1))
                .add(&Quasipolynomial::odd_indicator(&VARS, &a, 1)),
        }
    }
}

/// How two adjacent chambers are separated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Wall {
    /// The sides-sets differ by exchanging 0 and 1; the wall is `r = s`.
    Swap01,
    /// Row `j` is added, `i` and `k` being its cyclic predecessor and
    /// successor in the larger sides-set.
    Insert { i: usize, j: usize, k: usize },
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Wall::Swap01 => write!(f, "swap01"),
            Wall::Insert { i, j, k } => write!(f, "insert {i}{j}{k}"),
        }
    }
}

/// The wall between sides-sets `a` and `b`, or `None` if they are not of
/// one of the two adjacent shapes.
pub fn wall_between(a: &[usize], b: &[usize]) -> Option<Wall> {
    let swap = |x: &[usize]| -> Vec<usize> {
        let mut v: Vec<usize> = x
            .iter()
            .map(|&t| match t {
                0 => 1,
                1 => 0,
                t => t,
            })
            .collect();
        v.sort_unstable();
        v
    };
    if a.len() == b.len() {
        return (a != b && swap(a) == b).then_some(Wall::Swap01);
    }
    let (small, large) = if a.len() < b.len() { (a, b) } else { (b, a) };
    if large.len() != small.len() + 1 || !small.iter().all(|x| large.contains(x)) {
        return None;
    }
    let p = large.iter().position(|x| !small.contains(x))?;
    let n = large.len();
    Some(Wall::Insert {
        i: large[(p + n - 1) % n],
        j: large[p],
        k: large[(p + 1) % n],
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chamber {
    pub id: usize,
    /// Sorted sides-set.
    pub sides: Vec<usize>,
    /// `(neighbour id, wall)`, sorted by neighbour id.
    pub neighbors: Vec<(usize, Wall)>,
}

impl Chamber {
    pub fn label(&self) -> String {
        self.sides.iter().map(|d| d.to_string()).collect()
    }
}

impl fmt::Display for Chamber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ{{")?;
        for (n, d) in self.sides.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

/// A facet of the cone together with the chambers whose quasipolynomial
/// vanishes on the parallel hyperplanes `form = δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub name: String,
    pub form: LinearForm,
    pub chambers: Vec<usize>,
    pub offsets: Vec<i64>,
}

/// One step of the path from the root chamber: the value at `to` is the
/// value at `from` minus `sign ·` the wall difference.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Step {
    to: usize,
    wall: Wall,
    /// `+1` when moving to the larger sides-set, `-1` when moving to the
    /// smaller one, `0` across a swap wall.
    sign: i64,
}

#[derive(Clone, Debug)]
pub struct ChamberCatalog {
    chambers: Vec<Chamber>,
    edges: Vec<(usize, usize)>,
    rules: BTreeMap<(usize, usize, usize), RuleClass>,
    facets: Vec<Facet>,
    root: usize,
    /// Steps from the root to each chamber along a breadth-first tree.
    paths: Vec<Vec<Step>>,
    root_form: LinearForm,
}

/// `q` on the root chamber: `(u + 1)(u + 2) / 2` with `u = s - g2`.
fn root_value(h: [i64; 4]) -> Result<i64> {
    let u = i128::from(h[1]) - i128::from(h[3]);
    let v = (u + 1)
        .checked_mul(u + 2)
        .ok_or(KronError::Overflow("root quasipolynomial"))?
        / 2;
    i64::try_from(v).map_err(|_| KronError::Overflow("root quasipolynomial"))
}

fn parse_label(label: &str) -> Result<Vec<usize>> {
    let mut v: Vec<usize> = label
        .chars()
        .map(|c| c.to_digit(10).filter(|&d| d <= 6).map(|d| d as usize))
        .collect::<Option<_>>()
        .ok_or_else(|| KronError::Catalog(format!("bad chamber label {label:?}")))?;
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

impl ChamberCatalog {
    /// The fan transcribed from the static tables, built once.
    pub fn standard() -> &'static ChamberCatalog {
        static CATALOG: OnceLock<ChamberCatalog> = OnceLock::new();
        CATALOG.get_or_init(|| {
            let sides: Vec<Vec<usize>> = data::CHAMBER_LABELS
                .iter()
                .map(|l| parse_label(l).expect("static label"))
                .collect();
            let id = |l: &str| {
                let s = parse_label(l).expect("static label");
                sides.iter().position(|x| *x == s).expect("listed chamber")
            };
            let edges = data::EDGES.iter().map(|(a, b)| (id(a), id(b))).collect();
            let facets = data::FACETS
                .iter()
                .map(|(name, owners, offsets)| Facet {
                    name: name.to_string(),
                    form: named_form(name).expect("static form"),
                    chambers: owners.iter().map(|l| id(l)).collect(),
                    offsets: offsets.to_vec(),
                })
                .collect();
            ChamberCatalog::build(
                sides,
                edges,
                data::RULES.into_iter().collect(),
                facets,
                &data::ROOT_LABEL.chars().collect::<String>(),
            )
            .expect("static catalog is consistent")
        })
    }

    /// Assembles a catalog, deriving walls and the evaluation tree.
    pub fn build(
        sides: Vec<Vec<usize>>,
        edges: Vec<(usize, usize)>,
        rules: BTreeMap<(usize, usize, usize), RuleClass>,
        facets: Vec<Facet>,
        root_label: &str,
    ) -> Result<ChamberCatalog> {
        let n = sides.len();
        let root_sides = parse_label(root_label)?;
        let root = sides
            .iter()
            .position(|s| *s == root_sides)
            .ok_or_else(|| KronError::Catalog(format!("root chamber {root_label} missing")))?;
        let mut neighbors: Vec<Vec<(usize, Wall)>> = vec![Vec::new(); n];
        for &(a, b) in &edges {
            if a >= n || b >= n || a == b {
                return Err(KronError::Catalog(format!("bad edge ({a}, {b})")));
            }
            let wall = wall_between(&sides[a], &sides[b]).ok_or_else(|| {
                KronError::Catalog(format!(
                    "chambers {:?} and {:?} are not adjacent shapes",
                    sides[a], sides[b]
                ))
            })?;
            if let Wall::Insert { i, j, k } = wall {
                if !rules.contains_key(&(i, j, k)) {
                    return Err(KronError::UnlistedTriple(i, j, k));
                }
            }
            neighbors[a].push((b, wall));
            neighbors[b].push((a, wall));
        }
        for f in &facets {
            if f.chambers.iter().any(|&c| c >= n) {
                return Err(KronError::Catalog(format!(
                    "facet {} names a missing chamber",
                    f.name
                )));
            }
        }
        let chambers: Vec<Chamber> = sides
            .into_iter()
            .zip(neighbors)
            .enumerate()
            .map(|(id, (sides, mut neighbors))| {
                neighbors.sort_by_key(|x| x.0);
                Chamber {
                    id,
                    sides,
                    neighbors,
                }
            })
            .collect();

        let mut paths: Vec<Option<Vec<Step>>> = vec![None; n];
        paths[root] = Some(Vec::new());
        let mut queue = VecDeque::from([root]);
        while let Some(c) = queue.pop_front() {
            let base = paths[c].clone().expect("visited");
            for &(d, wall) in &chambers[c].neighbors {
                if paths[d].is_none() {
                    let sign = match wall {
                        Wall::Swap01 => 0,
                        Wall::Insert { .. }
                            if chambers[d].sides.len() > chambers[c].sides.len() =>
                        {
                            1
                        }
                        Wall::Insert { .. } => -1,
                    };
                    let mut p = base.clone();
                    p.push(Step { to: d, wall, sign });
                    paths[d] = Some(p);
                    queue.push_back(d);
                }
            }
        }
        let paths = paths
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| KronError::Catalog(format!("chamber {i} unreachable"))))
            .collect::<Result<_>>()?;
        Ok(ChamberCatalog {
            chambers,
            edges,
            rules,
            facets,
            root,
            paths,
            root_form: LinearForm([0, 1, 0, -1]),
        })
    }

    /// A copy with one wall rule replaced; used to check that the tests
    /// notice a wrong rule.
    pub fn with_rule(&self, triple: (usize, usize, usize), class: RuleClass) -> Result<Self> {
        if !self.rules.contains_key(&triple) {
            return Err(KronError::UnlistedTriple(triple.0, triple.1, triple.2));
        }
        let mut c = self.clone();
        c.rules.insert(triple, class);
        Ok(c)
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn chamber(&self, id: usize) -> &Chamber {
        &self.chambers[id]
    }

    pub fn by_sides(&self, sides: &[usize]) -> Option<&Chamber> {
        let mut s = sides.to_vec();
        s.sort_unstable();
        self.chambers.iter().find(|c| c.sides == s)
    }

    pub fn by_label(&self, label: &str) -> Option<&Chamber> {
        self.by_sides(&parse_label(label).ok()?)
    }

    pub fn root(&self) -> &Chamber {
        &self.chambers[self.root]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn rules(&self) -> &BTreeMap<(usize, usize, usize), RuleClass> {
        &self.rules
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// `q_I(h) - q_J(h)` across the insertion wall `(i, j, k)`.
    pub fn wall_difference(&self, i: usize, j: usize, k: usize, h: [i64; 4]) -> Result<i64> {
        let class = self
            .rules
            .get(&(i, j, k))
            .ok_or(KronError::UnlistedTriple(i, j, k))?;
        class.apply(f_form(i, j, k, h)?)
    }

    /// Wall inequalities of a chamber; its closed cell is these together
    /// with the cone inequalities.
    pub fn chamber_inequalities(&self, c: &Chamber) -> Vec<Inequality> {
        let mut out = Vec::new();
        for &(d, wall) in &c.neighbors {
            let other = &self.chambers[d];
            match wall {
                Wall::Swap01 => {
                    let (label, form) = if c.sides.contains(&1) {
                        ("r - s".to_string(), LinearForm::r_minus_s())
                    } else {
                        ("s - r".to_string(), LinearForm::r_minus_s().neg())
                    };
                    out.push(Inequality { label, form });
                }
                Wall::Insert { i, j, k } => {
                    let f = triple_form(i, j, k).expect("catalog triples are distinct");
                    if other.sides.len() > c.sides.len() {
                        out.push(Inequality {
                            label: format!("f{i}{j}{k} [{}]", other.label()),
                            form: f,
                        });
                    } else {
                        out.push(Inequality {
                            label: format!("-f{i}{j}{k} [{}]", other.label()),
                            form: f.neg(),
                        });
                    }
                }
            }
        }
        out
    }

    /// Whether `h` lies in the closed cell of `c`.
    pub fn contains(&self, c: &Chamber, h: [i64; 4]) -> bool {
        in_delta_prime(h) && self.chamber_inequalities(c).iter().all(|q| q.holds(h))
    }

    /// Whether `h` lies in the open cell of `c`.
    pub fn contains_strictly(&self, c: &Chamber, h: [i64; 4]) -> bool {
        delta_prime().iter().all(|q| q.strict(h))
            && self.chamber_inequalities(c).iter().all(|q| q.strict(h))
    }

    /// Every chamber whose closed cell contains `h`.
    pub fn chambers_containing(&self, h: [i64; 4]) -> Result<Vec<&Chamber>> {
        if !in_delta_prime(h) {
            return Err(KronError::OutsideCone(h));
        }
        Ok(self
            .chambers
            .iter()
            .filter(|c| self.chamber_inequalities(c).iter().all(|q| q.holds(h)))
            .collect())
    }

    /// `q_c(h)`, obtained from the root quasipolynomial by adding wall
    /// differences along the evaluation tree. Defined for every integer `h`.
    pub fn eval_q(&self, c: &Chamber, h: [i64; 4]) -> Result<i64> {
        let mut v = root_value(h)?;
        for step in &self.paths[c.id] {
            if let Wall::Insert { i, j, k } = step.wall {
                let d = self.wall_difference(i, j, k, h)?;
                v = v
                    .checked_sub(step.sign * d)
                    .ok_or(KronError::Overflow("chamber evaluation"))?;
            }
        }
        Ok(v)
    }

    /// Difference between the two sides of an edge and what its wall rule
    /// predicts; zero everywhere when the catalog is consistent.
    pub fn edge_residual(&self, edge: (usize, usize), h: [i64; 4]) -> Result<i64> {
        let (a, b) = edge;
        let (ca, cb) = (&self.chambers[a], &self.chambers[b]);
        let (qa, qb) = (self.eval_q(ca, h)?, self.eval_q(cb, h)?);
        let expected = match wall_between(&ca.sides, &cb.sides) {
            Some(Wall::Insert { i, j, k }) => {
                let d = self.wall_difference(i, j, k, h)?;
                if ca.sides.len() < cb.sides.len() {
                    d
                } else {
                    -d
                }
            }
            _ => 0,
        };
        Ok(qa - qb - expected)
    }

    /// Reduced coefficient by chamber lookup; 0 outside the cone. On a wall
    /// the first containing chamber is used.
    pub fn reduced_value(&self, h: [i64; 4]) -> Result<i64> {
        if !in_delta_prime(h) {
            return Ok(0);
        }
        let c = self
            .chambers
            .iter()
            .find(|c| self.chamber_inequalities(c).iter().all(|q| q.holds(h)))
            .ok_or(KronError::OutsideCone(h))?;
        self.eval_q(c, h)
    }

    /// The quasipolynomial of a chamber, accumulated symbolically along the
    /// same path that [`ChamberCatalog::eval_q`] walks.
    pub fn quasipolynomial(&self, c: &Chamber) -> Quasipolynomial {
        let u = Affine::new(self.root_form.0.to_vec(), 0);
        // (u + 1)(u + 2)/2 = (2u² + 6u + 4)/4
        let mut q = Quasipolynomial::square(&VARS, &u, 2)
            .add(&Quasipolynomial::half_linear(&VARS, &u, 3))
            .add(&Quasipolynomial::constant(&VARS, 1));
        for step in &self.paths[c.id] {
            if let Wall::Insert { i, j, k } = step.wall {
                let f = triple_form(i, j, k).expect("catalog triples are distinct");
                let d = self.rules[&(i, j, k)].quasipolynomial(&f);
                q = if step.sign > 0 { q.sub(&d) } else { q.add(&d) };
            }
        }
        q
    }

    /// The path (as chamber ids) used to evaluate `c`, starting at the root.
    pub fn evaluation_path(&self, c: &Chamber) -> Vec<usize> {
        std::iter::once(self.root)
            .chain(self.paths[c.id].iter().map(|s| s.to))
            .collect()
    }
}

/// `f_ijk`-wall difference with the standard rules.
pub fn table_difference(i: usize, j: usize, k: usize, h: [i64; 4]) -> Result<i64> {
    ChamberCatalog::standard().wall_difference(i, j, k, h)
}

/// Chambers of the standard catalog containing `h`.
pub fn chambers_containing(h: ReducedIndex) -> Result<Vec<&'static Chamber>> {
    ChamberCatalog::standard().chambers_containing(h.point())
}

/// `q_c(h)` in the standard catalog.
pub fn eval_q(c: &Chamber, h: [i64; 4]) -> Result<i64> {
    ChamberCatalog::standard().eval_q(c, h)
}

/// `ḡ` at any integer vector: 0 outside the cone, the chamber
/// quasipolynomial inside.
pub fn reduced_kron_fast(h: [i64; 4]) -> Result<u64> {
    let v = ChamberCatalog::standard().reduced_value(h)?;
    u64::try_from(v).map_err(|_| {
        KronError::Unsupported(format!(
            "chamber quasipolynomial is negative ({v}) at {h:?}"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> &'static ChamberCatalog {
        ChamberCatalog::standard()
    }

    fn ch(label: &str) -> &'static Chamber {
        cat().by_label(label).unwrap()
    }

    #[test]
    fn shape_of_the_graph() {
        assert_eq!(cat().chambers().len(), 26);
        assert_eq!(cat().edges().len(), 48);
        let swaps = cat()
            .edges()
            .iter()
            .filter(|&&(a, b)| {
                wall_between(&cat().chamber(a).sides, &cat().chamber(b).sides) == Some(Wall::Swap01)
            })
            .count();
        assert_eq!(swaps, 3);
    }

    #[test]
    fn adjacency_is_symmetric() {
        for c in cat().chambers() {
            for &(d, w) in &c.neighbors {
                assert!(cat().chamber(d).neighbors.contains(&(c.id, w)));
            }
        }
    }

    #[test]
    fn every_wall_has_a_rule() {
        let mut used = std::collections::BTreeSet::new();
        for c in cat().chambers() {
            for &(_, w) in &c.neighbors {
                if let Wall::Insert { i, j, k } = w {
                    assert!(cat().rules().contains_key(&(i, j, k)));
                    used.insert((i, j, k));
                }
            }
        }
        assert_eq!(used.len(), 12);
    }

    #[test]
    fn wall_between_examples() {
        assert_eq!(
            wall_between(&[1, 3, 5], &[1, 2, 3, 5]),
            Some(Wall::Insert { i: 1, j: 2, k: 3 })
        );
        assert_eq!(
            wall_between(&[1, 3, 5, 6], &[1, 3, 5]),
            Some(Wall::Insert { i: 5, j: 6, k: 1 })
        );
        assert_eq!(
            wall_between(&[1, 2, 4, 5, 6], &[0, 2, 4, 5, 6]),
            Some(Wall::Swap01)
        );
        assert_eq!(wall_between(&[1, 3, 5], &[0, 2, 4]), None);
    }

    #[test]
    fn rule_examples() {
        assert_eq!(RuleClass::Choose2.apply(2).unwrap(), 1);
        assert_eq!(RuleClass::SquareQuarter.apply(2).unwrap(), 1);
        assert_eq!(RuleClass::ShiftedQuarter.apply(3).unwrap(), 1);
        for class in RuleClass::ALL {
            for &d in class.zero_offsets() {
                assert_eq!(class.apply(d).unwrap(), 0);
            }
        }
    }

    #[test]
    fn table_difference_rejects_unlisted_triples() {
        assert_eq!(
            table_difference(1, 3, 5, [0; 4]),
            Err(KronError::UnlistedTriple(1, 3, 5))
        );
        assert!(table_difference(6, 1, 3, [0, 0, 0, 0]).is_ok());
    }

    #[test]
    fn root_chamber_inequalities() {
        let ineqs = cat().chamber_inequalities(ch("135"));
        let forms: Vec<LinearForm> = ineqs.iter().map(|q| q.form).collect();
        assert!(forms.contains(&triple_form(1, 2, 3).unwrap()));
        assert!(forms.contains(&triple_form(3, 4, 5).unwrap()));
        assert!(forms.contains(&triple_form(5, 6, 1).unwrap()));
        let c = ch("356");
        assert_eq!(cat().chamber_inequalities(c).len(), 3);
        assert!(!cat()
            .chamber_inequalities(c)
            .iter()
            .any(|q| q.form == LinearForm::r_minus_s() || q.form == LinearForm::r_minus_s().neg()));
        assert!(cat()
            .chamber_inequalities(ch("12456"))
            .iter()
            .any(|q| q.form == LinearForm::r_minus_s()));
    }

    #[test]
    fn membership_examples() {
        let labels = |h| {
            cat()
                .chambers_containing(h)
                .unwrap()
                .iter()
                .map(|c| c.label())
                .collect::<Vec<_>>()
        };
        assert_eq!(labels([13, 8, 10, 6]), vec!["135"]);
        assert_eq!(labels([8, 13, 10, 6]), vec!["035"]);
        assert_eq!(labels([0, 0, 0, 0]).len(), 26);
        assert_eq!(
            cat().chambers_containing([1, 0, 0, 0]),
            Err(KronError::OutsideCone([1, 0, 0, 0]))
        );
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(eval_q(ch("135"), [13, 8, 10, 6]).unwrap(), 6);
        assert_eq!(eval_q(ch("035"), [8, 13, 10, 6]).unwrap(), 6);
        assert_eq!(eval_q(ch("135"), [0, 0, 0, 0]).unwrap(), 1);
        assert_eq!(reduced_kron_fast([1, 0, 0, 0]).unwrap(), 0);
        assert_eq!(reduced_kron_fast([13, 8, 10, 6]).unwrap(), 6);
        assert_eq!(reduced_kron_fast([1, 1, 1, 1]).unwrap(), 1);
    }

    #[test]
    fn symbolic_and_numeric_agree() {
        for c in cat().chambers() {
            let q = cat().quasipolynomial(c);
            assert!(q.is_integral(), "{c}");
            for h in [[0, 0, 0, 0], [3, -2, 5, 1], [-7, 4, 0, 9], [13, 8, 10, 6]] {
                assert_eq!(
                    q.eval(&h),
                    i128::from(cat().eval_q(c, h).unwrap()),
                    "{c} at {h:?}"
                );
            }
        }
    }

    #[test]
    fn evaluation_paths_start_at_the_root() {
        for c in cat().chambers() {
            let p = cat().evaluation_path(c);
            assert_eq!(p[0], cat().root().id);
            assert_eq!(*p.last().unwrap(), c.id);
            for w in p.windows(2) {
                assert!(cat().chamber(w[0]).neighbors.iter().any(|n| n.0 == w[1]));
            }
        }
    }

    #[test]
    fn mutation_is_detected_by_edge_residuals() {
        let bad = cat().with_rule((2, 3, 4), RuleClass::Choose2).unwrap();
        let mut hits = 0;
        for h in [[5, 3, 2, 1], [4, 7, 3, 0], [9, 9, 5, 2], [2, 6, 8, 3]] {
            for &e in bad.edges() {
                if bad.edge_residual(e, h).unwrap() != 0 {
                    hits += 1;
                }
            }
        }
        assert!(hits > 0);
        assert!(cat().with_rule((1, 3, 5), RuleClass::Choose2).is_err());
    }
}
