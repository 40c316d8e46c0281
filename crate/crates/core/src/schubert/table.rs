use std::collections::HashSet;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::element::SchubertElement;
use super::label::{Label, DIMENSION};
use super::SchubertError;
use crate::exact::{rat, Rational};

/// On-disk shape of the multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub labels: Vec<LabelRecord>,
    pub products: Vec<ProductRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelRecord {
    pub label: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductRecord {
    pub a: String,
    pub b: String,
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub label: String,
    pub q: u32,
    pub coeff: i64,
}

/// Quantum products of all ordered pairs of Schubert classes.
///
/// Symmetry is not assumed: a file may list both orders of a pair, and the
/// verification suite then compares them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationTable {
    entries: Vec<SchubertElement>,
}

impl MultiplicationTable {
    pub fn from_json(text: &str) -> Result<Self, SchubertError> {
        let file: TableFile = serde_json::from_str(text).map_err(|e| SchubertError::Data(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn from_file(file: &TableFile) -> Result<Self, SchubertError> {
        let listed: Vec<(String, u32)> = file.labels.iter().map(|r| (r.label.clone(), r.degree)).collect();
        let expected: Vec<(String, u32)> = Label::ALL.iter().map(|l| (l.to_string(), l.degree())).collect();
        if listed != expected {
            return Err(SchubertError::Data(format!(
                "label list must be the 15 classes in canonical order with their degrees, got {listed:?}"
            )));
        }
        let mut entries = vec![None::<SchubertElement>; 225];
        let mut seen = HashSet::new();
        for rec in &file.products {
            let a: Label = rec.a.parse()?;
            let b: Label = rec.b.parse()?;
            if !seen.insert((a, b)) {
                return Err(SchubertError::Data(format!("duplicate record for {a}*{b}")));
            }
            let mut e = SchubertElement::zero();
            for t in &rec.terms {
                e.add_term(t.label.parse()?, t.q, rat(t.coeff));
            }
            entries[a.index() * 15 + b.index()] = Some(e.clone());
            if !seen.contains(&(b, a)) {
                entries[b.index() * 15 + a.index()] = Some(e);
            }
        }
        let entries = entries
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                e.ok_or_else(|| {
                    SchubertError::Data(format!(
                        "no record for {}*{}",
                        Label::from_index(i / 15),
                        Label::from_index(i % 15)
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MultiplicationTable { entries })
    }

    /// Serializes with one record per unordered pair, plus a second record
    /// for any pair whose two orders disagree.
    pub fn to_file(&self) -> Result<TableFile, SchubertError> {
        let labels = Label::ALL.iter().map(|l| LabelRecord { label: l.to_string(), degree: l.degree() }).collect();
        let mut products = Vec::new();
        for a in Label::ALL {
            for b in Label::ALL {
                let keep = a <= b || self.product(a, b) != self.product(b, a);
                if keep {
                    products.push(ProductRecord { a: a.to_string(), b: b.to_string(), terms: term_records(self.product(a, b))? });
                }
            }
        }
        Ok(TableFile { labels, products })
    }

    /// One product record per line, matching the shipped file layout.
    pub fn to_json(&self) -> Result<String, SchubertError> {
        let file = self.to_file()?;
        let labels: Vec<String> = file.labels.iter().map(|r| format!("    {}", one_line(r))).collect();
        let products: Vec<String> = file.products.iter().map(|r| format!("    {}", one_line(r))).collect();
        Ok(format!(
            "{{\n  \"labels\": [\n{}\n  ],\n  \"products\": [\n{}\n  ]\n}}\n",
            labels.join(",\n"),
            products.join(",\n")
        ))
    }

    /// Builds a table from a function of ordered pairs.
    pub fn from_fn(mut f: impl FnMut(Label, Label) -> SchubertElement) -> Self {
        let entries = (0..225).map(|i| f(Label::from_index(i / 15), Label::from_index(i % 15))).collect();
        MultiplicationTable { entries }
    }

    pub fn product(&self, a: Label, b: Label) -> &SchubertElement {
        &self.entries[a.index() * 15 + b.index()]
    }

    /// Replaces both orders of an entry. Meant for building perturbed
    /// tables in fault-injection runs.
    pub fn set_product(&mut self, a: Label, b: Label, value: SchubertElement) {
        self.entries[a.index() * 15 + b.index()] = value.clone();
        self.entries[b.index() * 15 + a.index()] = value;
    }

    /// Replaces one order only, leaving the table asymmetric.
    pub fn set_ordered_product(&mut self, a: Label, b: Label, value: SchubertElement) {
        self.entries[a.index() * 15 + b.index()] = value;
    }

    /// Bilinear extension of the table, q-coefficients multiplied through.
    pub fn quantum_product(&self, x: &SchubertElement, y: &SchubertElement) -> SchubertElement {
        let mut out = SchubertElement::zero();
        for a in Label::ALL {
            let pa = x.coeff_poly(a);
            if pa.is_zero() {
                continue;
            }
            for b in Label::ALL {
                let pb = y.coeff_poly(b);
                if pb.is_zero() {
                    continue;
                }
                out = &out + &self.product(a, b).mul_poly(&(&pa * &pb));
            }
        }
        out
    }

    pub fn classical_product(&self, x: &SchubertElement, y: &SchubertElement) -> SchubertElement {
        self.quantum_product(&x.classical(), &y.classical()).classical()
    }

    /// Coefficient of the point class in the classical product.
    pub fn poincare_pairing(&self, x: &SchubertElement, y: &SchubertElement) -> Rational {
        self.classical_product(x, y).coeff(Label::S8, 0)
    }

    /// I_d(a, b, c): the q^d coefficient of the dual of `c` in `a*b`; zero
    /// unless the degrees add up to 8 + 4d.
    pub fn gw_invariant(&self, d: u32, a: Label, b: Label, c: Label) -> Rational {
        if a.degree() + b.degree() + c.degree() != DIMENSION + 4 * d {
            return Rational::zero();
        }
        self.product(a, b).coeff(c.dual(), d)
    }

    /// The table with every positive q-power dropped.
    pub fn classical_slice(&self) -> MultiplicationTable {
        MultiplicationTable { entries: self.entries.iter().map(SchubertElement::classical).collect() }
    }

    pub fn entries(&self) -> impl Iterator<Item = (Label, Label, &SchubertElement)> {
        self.entries.iter().enumerate().map(|(i, e)| (Label::from_index(i / 15), Label::from_index(i % 15), e))
    }
}

fn term_records(e: &SchubertElement) -> Result<Vec<TermRecord>, SchubertError> {
    e.terms()
        .into_iter()
        .map(|(k, l, c)| {
            let n = if c.is_integer() { c.to_integer().to_i64() } else { None };
            let coeff = n.ok_or_else(|| SchubertError::Data(format!("coefficient {c} of {l} is not a small integer")))?;
            Ok(TermRecord { label: l.to_string(), q: k, coeff })
        })
        .collect()
}

fn one_line<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v)
        .expect("plain records always serialize")
        .replace("\":", "\": ")
        .replace(",\"", ", \"")
        .replace("},{", "}, {")
}
