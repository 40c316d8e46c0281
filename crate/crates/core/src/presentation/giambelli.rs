use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{cg_vars, PresentationError};
use crate::exact::{parse_rational, Monomial, MultiPoly, VarSet};
use crate::schubert::Label;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct TermRecord {
    exponents: Vec<u32>,
    coeff: String,
}

/// Each Schubert class written as a polynomial in s1, s2 and q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GiambelliDictionary {
    vars: Arc<VarSet>,
    polys: BTreeMap<Label, MultiPoly>,
}

impl GiambelliDictionary {
    pub fn from_polys(polys: BTreeMap<Label, MultiPoly>) -> Result<Self, PresentationError> {
        let vars = cg_vars();
        for l in Label::ALL {
            if !polys.contains_key(&l) {
                return Err(PresentationError::Data(format!("no polynomial for {l}")));
            }
        }
        Ok(GiambelliDictionary { vars, polys })
    }

    pub fn from_json(text: &str) -> Result<Self, PresentationError> {
        let raw: BTreeMap<String, Vec<TermRecord>> =
            serde_json::from_str(text).map_err(|e| PresentationError::Data(e.to_string()))?;
        let vars = cg_vars();
        let mut polys = BTreeMap::new();
        for (name, terms) in raw {
            let l: Label = name.parse().map_err(|_| PresentationError::Data(format!("unknown label {name:?}")))?;
            let mut p = MultiPoly::zero(&vars);
            for t in terms {
                if t.exponents.len() != vars.len() {
                    return Err(PresentationError::Data(format!("{name}: exponent vector {:?} needs 3 entries", t.exponents)));
                }
                let c = parse_rational(&t.coeff).map_err(|e| PresentationError::Data(format!("{name}: {e}")))?;
                p.add_term(Monomial(t.exponents), c);
            }
            polys.insert(l, p);
        }
        Self::from_polys(polys)
    }

    /// One label per line, terms grlex-descending, coefficients as `n/d`.
    pub fn to_json(&self) -> String {
        let lines: Vec<String> = self
            .polys
            .iter()
            .map(|(l, p)| {
                let terms: Vec<String> = p
                    .terms_grlex()
                    .into_iter()
                    .map(|(m, c)| {
                        let e: Vec<String> = m.exponents().iter().map(ToString::to_string).collect();
                        format!("{{\"exponents\": [{}], \"coeff\": \"{}/{}\"}}", e.join(", "), c.numer(), c.denom())
                    })
                    .collect();
                format!("  \"{l}\": [{}]", terms.join(", "))
            })
            .collect();
        format!("{{\n{}\n}}\n", lines.join(",\n"))
    }

    pub fn get(&self, l: Label) -> &MultiPoly {
        &self.polys[&l]
    }

    pub fn set(&mut self, l: Label, p: MultiPoly) {
        self.polys.insert(l, p);
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn iter(&self) -> impl Iterator<Item = (Label, &MultiPoly)> {
        self.polys.iter().map(|(l, p)| (*l, p))
    }
}
