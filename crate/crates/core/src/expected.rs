//! Published reference values that the verification suites compare against.
//! Kept in one place so a reader can audit every hard-coded number.

use crate::schubert::{Label, SchubertElement};

/// Quantum Chevalley rows `x * s1` for the classes of degree 3 to 6.
/// Below degree 3 the quantum and classical products agree.
pub const CHEVALLEY_ROWS: [(Label, &str); 9] = [
    (Label::S3, "2*s4 + 2*s4p + 2*q"),
    (Label::S3p, "s4p + s4pp"),
    (Label::S4, "2*s5 + q*s1"),
    (Label::S4p, "2*s5 + s5p + q*s1"),
    (Label::S4pp, "s5p"),
    (Label::S5, "s6 + 2*s6p + q*s2p"),
    (Label::S5p, "3*s6 + 2*s6p + q*s2"),
    (Label::S6, "s7 + q*s3p"),
    (Label::S6p, "s7 + q*s3"),
];

pub fn chevalley_rows() -> Vec<(Label, SchubertElement)> {
    CHEVALLEY_ROWS
        .iter()
        .map(|(l, s)| (*l, s.parse().expect("reference rows parse")))
        .collect()
}

/// The undetermined coefficients of the degree-one Chevalley ansatz, each
/// as the GW slot `(d, a, b)` meaning `I_d(s1, a, b)`, with its value.
pub const CHEVALLEY_UNKNOWNS: [(&str, u32, Label, Label, i64); 10] = [
    ("a3", 1, Label::S3, Label::S8, 2),
    ("a3p", 1, Label::S3p, Label::S8, 0),
    ("a4", 1, Label::S4, Label::S7, 1),
    ("a4p", 1, Label::S4p, Label::S7, 1),
    ("a4pp", 1, Label::S4pp, Label::S7, 0),
    ("a5", 1, Label::S5, Label::S6, 0),
    ("b5", 1, Label::S5, Label::S6p, 1),
    ("a5p", 1, Label::S5p, Label::S6, 1),
    ("b5p", 1, Label::S5p, Label::S6p, 0),
    ("a7", 2, Label::S8, Label::S7, 0),
];

/// The two quantum relations, in the generator order s1, s2, q.
pub const R5: &str = "s1^5 - 5*s1^3*s2 + 6*s1*s2^2 + 4*q*s1";
pub const R6: &str = "16*s2^3 - 27*s1^2*s2^2 + 9*s1^4*s2 + 32*q*s2 - 28*q*s1^2";

/// Coefficients of det(tI - M) for quantum multiplication by s1 at q = 1,
/// as (power of t, coefficient).
pub const CHARPOLY_Q1: [(u32, i64); 4] = [(15, 1), (11, -102), (7, 317), (3, -2048)];

pub const Y_MAX_DECIMAL: &str = "99.00713881372502";
pub const T_CG_DECIMAL: &str = "12.6175960332";

/// Scenario id, main integral, correction.
pub const SCENARIO_VALUES: [(&str, i64, i64); 12] = [
    ("4.1.1", 2, 0),
    ("4.1.2", 0, 0),
    ("4.1.3", 1, 0),
    ("4.1.4", 3, 0),
    ("4.1.5", 2, 0),
    ("4.1.6", 2, 0),
    ("4.1.7", 3, 0),
    ("4.1.8", 7, 1),
    ("4.1.9", 4, 0),
    ("4.2.1", 0, 0),
    ("4.2.2", 2, 0),
    ("4.2.3", 3, 1),
];
