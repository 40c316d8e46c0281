use num_traits::{One, Signed, Zero};

use super::element::SchubertElement;
use super::label::{Label, DIMENSION};
use super::table::MultiplicationTable;
use crate::expected;
use crate::report::{Check, VerificationReport};

/// How many offending items a failing check spells out before summarizing.
const SHOWN: usize = 5;

fn summarize(id: &str, what: &str, total: usize, bad: Vec<String>) -> Check {
    if bad.is_empty() {
        return Check::pass(id, format!("{total} {what} checked"));
    }
    let shown: Vec<_> = bad.iter().take(SHOWN).cloned().collect();
    let more = if bad.len() > SHOWN { format!(" (+{} more)", bad.len() - SHOWN) } else { String::new() };
    Check::fail(id, format!("{} of {total} {what} fail: {}{more}", bad.len(), shown.join("; ")))
}

pub fn check_identity(t: &MultiplicationTable) -> Check {
    let mut bad = Vec::new();
    for l in Label::ALL {
        let want = SchubertElement::basis(l);
        for (x, y) in [(Label::S0, l), (l, Label::S0)] {
            if t.product(x, y) != &want {
                bad.push(format!("{x}*{y} = {}", t.product(x, y)));
            }
        }
    }
    summarize("identity", "products with s0", 30, bad)
}

pub fn check_symmetry(t: &MultiplicationTable) -> Check {
    let mut bad = Vec::new();
    for a in Label::ALL {
        for b in Label::ALL.into_iter().filter(|b| *b > a) {
            if t.product(a, b) != t.product(b, a) {
                bad.push(format!("{a}*{b} = {} but {b}*{a} = {}", t.product(a, b), t.product(b, a)));
            }
        }
    }
    summarize("symmetry", "unordered pairs", 105, bad)
}

pub fn check_grading(t: &MultiplicationTable) -> Check {
    let mut bad = Vec::new();
    for (a, b, e) in t.entries() {
        let d = a.degree() + b.degree();
        for (k, l, c) in e.terms() {
            if l.degree() + 4 * k != d {
                bad.push(format!("{a}*{b} has term {c}*q^{k}*{l} of degree {} instead of {d}", l.degree() + 4 * k));
            }
        }
    }
    summarize("grading", "ordered products", 225, bad)
}

pub fn check_positivity(t: &MultiplicationTable) -> Check {
    let mut bad = Vec::new();
    for (a, b, e) in t.entries() {
        for (k, l, c) in e.terms() {
            if c.is_negative() || !c.is_integer() {
                bad.push(format!("{a}*{b}: coefficient of q^{k}*{l} is {c}"));
            }
        }
    }
    summarize("positivity", "ordered products", 225, bad)
}

/// In each pair of complementary degrees the pairing matrix must be the
/// permutation matrix of the duality involution.
pub fn check_duality(t: &MultiplicationTable) -> Check {
    let mut bad = Vec::new();
    for k in 0..=DIMENSION {
        for a in Label::of_degree(k) {
            for b in Label::of_degree(DIMENSION - k) {
                let v = t.poincare_pairing(&SchubertElement::basis(a), &SchubertElement::basis(b));
                let want = if b == a.dual() { One::one() } else { Zero::zero() };
                if v != want {
                    bad.push(format!("<{a},{b}> = {v}, expected {want}"));
                }
            }
        }
    }
    summarize("duality", "complementary pairs", 33, bad)
}

/// I_d(a,b,c) must not depend on the order of its three arguments.
pub fn check_gw_symmetry(t: &MultiplicationTable) -> Check {
    let mut bad = Vec::new();
    let mut total = 0;
    for d in 0..=4 {
        for a in Label::ALL {
            for b in Label::ALL.into_iter().filter(|b| *b >= a) {
                for c in Label::ALL.into_iter().filter(|c| *c >= b) {
                    if a.degree() + b.degree() + c.degree() != DIMENSION + 4 * d {
                        continue;
                    }
                    total += 1;
                    let perms = [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)];
                    let vals: Vec<_> = perms.iter().map(|&(x, y, z)| t.gw_invariant(d, x, y, z)).collect();
                    if vals.iter().any(|v| *v != vals[0]) {
                        let shown: Vec<String> = vals.iter().map(ToString::to_string).collect();
                        bad.push(format!("I_{d}({a},{b},{c}) takes values [{}] across permutations", shown.join(",")));
                    }
                }
            }
        }
    }
    summarize("gw-symmetry", "unordered invariant triples", total, bad)
}

/// (x*y)*z = x*(y*z) on every ordered triple of basis classes.
pub fn check_associativity(t: &MultiplicationTable) -> Check {
    let mut bad = Vec::new();
    for a in Label::ALL {
        for b in Label::ALL {
            let ab = t.product(a, b);
            for c in Label::ALL {
                let left = t.quantum_product(ab, &SchubertElement::basis(c));
                let right = t.quantum_product(&SchubertElement::basis(a), t.product(b, c));
                if left != right {
                    bad.push(format!("({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}"));
                }
            }
        }
    }
    summarize("associativity", "ordered triples", 3375, bad)
}

/// Multiplication by s1 must reproduce the reference Chevalley rows up to
/// degree 7, with no quantum term below degree 3.
pub fn check_chevalley(t: &MultiplicationTable) -> Check {
    let mut bad = Vec::new();
    for l in Label::ALL.into_iter().filter(|l| l.degree() <= 2) {
        let p = t.product(l, Label::S1);
        if p.max_q_power().unwrap_or(0) > 0 {
            bad.push(format!("{l}*s1 = {p} has a quantum term"));
        }
    }
    for (l, want) in expected::chevalley_rows() {
        let got = t.product(l, Label::S1);
        if got != &want {
            bad.push(format!("{l}*s1 = {got}, expected {want}"));
        }
    }
    summarize("chevalley", "rows", 6 + expected::CHEVALLEY_ROWS.len(), bad)
}

/// Reads each undetermined Chevalley slot from the table in both orders of
/// its last two arguments; they must agree with each other and with the
/// reference value.
pub fn check_chevalley_slots(t: &MultiplicationTable) -> Check {
    let mut bad = Vec::new();
    for (name, d, a, b, v) in expected::CHEVALLEY_UNKNOWNS {
        let x = t.gw_invariant(d, Label::S1, a, b);
        let y = t.gw_invariant(d, Label::S1, b, a);
        let want = crate::exact::rat(v);
        if x != y || x != want {
            bad.push(format!("{name}: I_{d}(s1,{a},{b}) = {x}, I_{d}(s1,{b},{a}) = {y}, expected {want}"));
        }
    }
    summarize("chevalley-slots", "slots", expected::CHEVALLEY_UNKNOWNS.len(), bad)
}

/// The table suite, checks in a fixed order.
pub fn verify_table(t: &MultiplicationTable) -> VerificationReport {
    VerificationReport::new(
        "table",
        vec![
            check_identity(t),
            check_symmetry(t),
            check_grading(t),
            check_positivity(t),
            check_duality(t),
            check_gw_symmetry(t),
            check_associativity(t),
            check_chevalley(t),
            check_chevalley_slots(t),
        ],
    )
}
