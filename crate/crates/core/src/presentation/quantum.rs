use std::collections::HashMap;

use super::giambelli::GiambelliDictionary;
use super::ring::PresentedRing;
use super::{cg_relations, cg_vars, expected_dimension, PresentationError, MAX_DEGREE};
use crate::exact::{Monomial, MultiPoly, RationalMatrix};
use crate::report::{Check, VerificationReport};
use crate::schubert::{Label, MultiplicationTable, SchubertElement};

/// Schubert classes `q^k * l` of total degree `d`, ordered by k then label.
pub fn schubert_classes(d: u32) -> Vec<(u32, Label)> {
    (0..=d / 4)
        .flat_map(|k| Label::ALL.into_iter().filter(move |l| l.degree() + 4 * k == d).map(move |l| (k, l)))
        .collect()
}

/// Evaluates polynomials in s1, s2, q inside the table's ring by repeated
/// quantum multiplication.
pub struct SchubertEvaluator<'a> {
    table: &'a MultiplicationTable,
    powers: HashMap<(usize, u32), SchubertElement>,
}

impl<'a> SchubertEvaluator<'a> {
    pub fn new(table: &'a MultiplicationTable) -> Self {
        SchubertEvaluator { table, powers: HashMap::new() }
    }

    fn generator(i: usize) -> SchubertElement {
        match i {
            0 => SchubertElement::basis(Label::S1),
            1 => SchubertElement::basis(Label::S2),
            _ => SchubertElement::unit().shift_q(1),
        }
    }

    fn power(&mut self, i: usize, e: u32) -> SchubertElement {
        if e == 0 {
            return SchubertElement::unit();
        }
        if i == 2 {
            return SchubertElement::unit().shift_q(e);
        }
        if let Some(p) = self.powers.get(&(i, e)) {
            return p.clone();
        }
        let lower = self.power(i, e - 1);
        let p = self.table.quantum_product(&lower, &Self::generator(i));
        self.powers.insert((i, e), p.clone());
        p
    }

    fn monomial(&mut self, m: &Monomial) -> SchubertElement {
        let e = m.exponents();
        let a = self.power(0, e[0]);
        let b = self.power(1, e[1]);
        self.table.quantum_product(&a, &b).shift_q(e[2])
    }

    pub fn evaluate(&mut self, p: &MultiPoly) -> SchubertElement {
        let mut out = SchubertElement::zero();
        for (m, c) in p.terms_grlex() {
            out = &out + &self.monomial(m).scale(c);
        }
        out
    }
}

pub fn evaluate_in_schubert(table: &MultiplicationTable, p: &MultiPoly) -> SchubertElement {
    SchubertEvaluator::new(table).evaluate(p)
}

/// The quotient ring together with a Giambelli dictionary, able to express
/// normal forms back in the Schubert basis.
#[derive(Clone, Debug)]
pub struct QuantumPresentation {
    ring: PresentedRing,
    dictionary: GiambelliDictionary,
    /// Per degree: inverse of the matrix whose columns are the normal-form
    /// coordinates of `q^k * Giambelli(l)`.
    to_schubert: Vec<RationalMatrix>,
}

impl QuantumPresentation {
    pub fn new(relations: Vec<MultiPoly>, dictionary: GiambelliDictionary) -> Result<Self, PresentationError> {
        let ring = PresentedRing::new(&cg_vars(), relations, MAX_DEGREE)?;
        ring.ensure_dimensions(expected_dimension)?;
        let mut to_schubert = Vec::new();
        for d in 0..=MAX_DEGREE {
            let classes = schubert_classes(d);
            let cols: Vec<Vec<_>> = classes
                .iter()
                .map(|(k, l)| {
                    let q = MultiPoly::var(&ring.vars().clone(), 2).pow(*k);
                    ring.coordinates(&(&q * dictionary.get(*l)), d)
                })
                .collect::<Result<_, _>>()?;
            let n = classes.len();
            let mut c = RationalMatrix::zeros(n, n);
            for (j, col) in cols.iter().enumerate() {
                for (i, x) in col.iter().enumerate() {
                    c.set(i, j, x.clone());
                }
            }
            let inv = c
                .inverse()
                .map_err(|e| PresentationError::Data(e.to_string()))?
                .ok_or(PresentationError::SingularChangeOfBasis(d))?;
            to_schubert.push(inv);
        }
        Ok(QuantumPresentation { ring, dictionary, to_schubert })
    }

    /// The shipped relations and dictionary.
    pub fn shipped() -> Result<Self, PresentationError> {
        Self::new(cg_relations(), GiambelliDictionary::from_json(crate::data::GIAMBELLI_JSON)?)
    }

    pub fn ring(&self) -> &PresentedRing {
        &self.ring
    }

    pub fn dictionary(&self) -> &GiambelliDictionary {
        &self.dictionary
    }

    pub fn to_schubert(&self, p: &MultiPoly) -> Result<SchubertElement, PresentationError> {
        let mut out = SchubertElement::zero();
        let Some(top) = p.degree() else {
            return Ok(out);
        };
        for d in 0..=top {
            let part = p.homogeneous_part(d);
            if part.is_zero() {
                continue;
            }
            let coords = self.ring.coordinates(&part, d)?;
            let x = self.to_schubert[d as usize].mul_vec(&coords);
            for ((k, l), c) in schubert_classes(d).into_iter().zip(x) {
                out.add_term(l, k, c);
            }
        }
        Ok(out)
    }

    pub fn product(&self, a: Label, b: Label) -> Result<SchubertElement, PresentationError> {
        self.to_schubert(&(self.dictionary.get(a) * self.dictionary.get(b)))
    }

    /// All products recomputed through the presentation.
    pub fn derived_table(&self) -> Result<MultiplicationTable, PresentationError> {
        let mut err = None;
        let t = MultiplicationTable::from_fn(|a, b| match self.product(a, b) {
            Ok(e) => e,
            Err(e) => {
                err.get_or_insert(e);
                SchubertElement::zero()
            }
        });
        err.map_or(Ok(t), Err)
    }
}

/// Entry-by-entry comparison of two tables over unordered pairs.
pub fn diff_tables(derived: &MultiplicationTable, reference: &MultiplicationTable) -> Vec<(Label, Label, SchubertElement, SchubertElement)> {
    let mut out = Vec::new();
    for a in Label::ALL {
        for b in Label::ALL.into_iter().filter(|b| *b >= a) {
            let (x, y) = (derived.product(a, b), reference.product(a, b));
            if x != y {
                out.push((a, b, x.clone(), y.clone()));
            }
        }
    }
    out
}

fn fixed_entry(l: Label) -> Option<&'static str> {
    match l {
        Label::S0 => Some("1"),
        Label::S1 => Some("s1"),
        Label::S2 => Some("s2"),
        Label::S2p => Some("s1^2 - s2"),
        _ => None,
    }
}

/// Checks the table against the presentation `relations` and the Giambelli
/// `dictionary`.
pub fn cross_check_presentation(
    table: &MultiplicationTable,
    relations: &[MultiPoly],
    dictionary: &GiambelliDictionary,
) -> VerificationReport {
    let vars = cg_vars();
    let mut checks = Vec::new();
    let mut ev = SchubertEvaluator::new(table);

    let qp = QuantumPresentation::new(relations.to_vec(), dictionary.clone());
    match &qp {
        Err(PresentationError::DimensionMismatch { .. }) | Err(PresentationError::NonHomogeneous(_)) => {
            checks.push(Check::fail("dimensions", qp.as_ref().unwrap_err().to_string()));
        }
        _ => checks.push(Check::pass("dimensions", format!("graded dimensions match for degrees 0..={MAX_DEGREE}"))),
    }

    let bad: Vec<String> = relations
        .iter()
        .map(|r| (r, ev.evaluate(r)))
        .filter(|(_, v)| !v.is_zero())
        .map(|(r, v)| format!("{r} evaluates to {v}"))
        .collect();
    checks.push(Check::new("relations-vanish", bad.is_empty(), if bad.is_empty() { format!("{} relations evaluate to 0", relations.len()) } else { bad.join("; ") }));

    let mut bad = Vec::new();
    for (l, p) in dictionary.iter() {
        if !p.is_homogeneous() || p.degree().unwrap_or(0) != l.degree() || p.is_zero() {
            bad.push(format!("{l} -> {p} is not homogeneous of degree {}", l.degree()));
        }
        if let Some(s) = fixed_entry(l) {
            let want = MultiPoly::parse(&vars, s).expect("fixed entries parse");
            if p != &want {
                bad.push(format!("{l} -> {p}, expected {want}"));
            }
        }
    }
    checks.push(Check::new("dictionary-shape", bad.is_empty(), if bad.is_empty() { "15 homogeneous entries".to_string() } else { bad.join("; ") }));

    let bad: Vec<String> = dictionary
        .iter()
        .map(|(l, p)| (l, ev.evaluate(p)))
        .filter(|(l, v)| v != &SchubertElement::basis(*l))
        .map(|(l, v)| format!("Giambelli({l}) evaluates to {v}"))
        .collect();
    checks.push(Check::new("giambelli", bad.is_empty(), if bad.is_empty() { "every class evaluates to itself".to_string() } else { bad.join("; ") }));

    match &qp {
        Ok(qp) => {
            checks.push(Check::pass("change-of-basis", format!("invertible in every degree 0..={MAX_DEGREE}")));
            match qp.derived_table() {
                Ok(derived) => {
                    let diff = diff_tables(&derived, table);
                    let shown: Vec<String> = diff.iter().take(5).map(|(a, b, x, y)| format!("{a}*{b}: presentation gives {x}, table has {y}")).collect();
                    checks.push(Check::new(
                        "products",
                        diff.is_empty(),
                        if diff.is_empty() { "120 unordered products agree".to_string() } else { format!("{} of 120 products differ: {}", diff.len(), shown.join("; ")) },
                    ));
                }
                Err(e) => checks.push(Check::fail("products", e.to_string())),
            }
        }
        Err(e) => {
            checks.push(Check::fail("change-of-basis", e.to_string()));
            checks.push(Check::fail("products", "skipped: no usable presentation"));
        }
    }
    VerificationReport::new("presentation", checks)
}
