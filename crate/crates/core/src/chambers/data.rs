//! Static description of the chamber fan: vertex labels, adjacency, the
//! wall-crossing rules and the facet data of the cone.

use super::RuleClass;

/// Sides-sets of the 26 chambers, written as digit strings.
pub const CHAMBER_LABELS: [&str; 26] = [
    "1245", "12456", "02456", "0245", "145", "1456", "0456", "045", "12345", "123456", "023456",
    "02345", "1345", "13456", "3456", "03456", "0345", "1235", "12356", "02356", "0235", "135",
    "1356", "356", "0356", "035",
];

/// The 48 edges of the adjacency graph.
pub const EDGES: [(&str, &str); 48] = [
    ("1245", "12456"),
    ("12456", "02456"),
    ("0245", "02456"),
    ("145", "1456"),
    ("145", "1245"),
    ("145", "1345"),
    ("1456", "12456"),
    ("1456", "13456"),
    ("0456", "02456"),
    ("0456", "03456"),
    ("045", "0456"),
    ("045", "0245"),
    ("045", "0345"),
    ("12345", "1245"),
    ("12345", "123456"),
    ("123456", "12456"),
    ("123456", "023456"),
    ("023456", "02456"),
    ("02345", "0245"),
    ("02345", "023456"),
    ("1345", "13456"),
    ("1345", "12345"),
    ("13456", "123456"),
    ("3456", "13456"),
    ("3456", "03456"),
    ("03456", "023456"),
    ("0345", "03456"),
    ("0345", "02345"),
    ("1235", "12345"),
    ("1235", "12356"),
    ("12356", "123456"),
    ("12356", "02356"),
    ("02356", "023456"),
    ("0235", "02345"),
    ("0235", "02356"),
    ("135", "1235"),
    ("135", "1345"),
    ("135", "1356"),
    ("1356", "12356"),
    ("1356", "13456"),
    ("356", "1356"),
    ("356", "3456"),
    ("356", "0356"),
    ("0356", "02356"),
    ("0356", "03456"),
    ("035", "0235"),
    ("035", "0345"),
    ("035", "0356"),
];

/// The chamber whose quasipolynomial is written down directly.
pub const ROOT_LABEL: &str = "135";

/// `q_I - q_J` across an insertion wall, keyed by `(i, j, k)`.
pub const RULES: [((usize, usize, usize), RuleClass); 12] = [
    ((6, 1, 3), RuleClass::Choose2),
    ((1, 2, 3), RuleClass::Choose2),
    ((1, 3, 4), RuleClass::Choose2),
    ((6, 0, 3), RuleClass::Choose2),
    ((0, 2, 3), RuleClass::Choose2),
    ((0, 3, 4), RuleClass::Choose2),
    ((2, 3, 4), RuleClass::SquareQuarter),
    ((3, 4, 5), RuleClass::ShiftedQuarter),
    ((1, 2, 4), RuleClass::ShiftedQuarter),
    ((5, 6, 1), RuleClass::ShiftedQuarter),
    ((0, 2, 4), RuleClass::ShiftedQuarter),
    ((5, 6, 0), RuleClass::ShiftedQuarter),
];

/// Facets of the cone: form name, owning chambers, offsets on which their
/// quasipolynomials vanish.
pub const FACETS: [(&str, &[&str], &[i64]); 7] = [
    ("46", &["3456", "1456", "0456"], &[-1]),
    ("25", &["1245", "0245", "1235", "0235"], &[-1]),
    ("145", &["145"], &[1, 2, 3]),
    ("045", &["045"], &[1, 2, 3]),
    ("356", &["356"], &[1, 2, 3]),
    ("035", &["035"], &[1, 2]),
    ("135", &["135"], &[1, 2]),
];
