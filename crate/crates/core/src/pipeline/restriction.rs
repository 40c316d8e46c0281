use std::collections::BTreeMap;

use super::PipelineError;
use crate::schubert::{Label, SchubertElement};

/// Pull-backs of the Schubert classes of G(4, 7), indexed by partition, to
/// the Cayley Grassmannian. Only the classes up to degree six are needed.
pub const RESTRICTIONS: [(&str, &str); 19] = [
    ("1", "s1"),
    ("2", "s2"),
    ("11", "s2p"),
    ("3", "s3p"),
    ("111", "s3"),
    ("1111", "s4"),
    ("211", "s4 + 2*s4p"),
    ("22", "s4 + s4p + s4pp"),
    ("31", "s4p + s4pp"),
    ("2111", "2*s5"),
    ("221", "3*s5 + s5p"),
    ("311", "s5 + s5p"),
    ("32", "s5 + s5p"),
    ("2211", "s6 + 3*s6p"),
    ("222", "2*s6 + 2*s6p"),
    ("321", "3*s6 + 3*s6p"),
    ("33", "s6 + s6p"),
    ("3111", "s6 + s6p"),
    ("", "1"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionFormula {
    map: BTreeMap<String, SchubertElement>,
}

impl RestrictionFormula {
    pub fn shipped() -> Self {
        let map = RESTRICTIONS
            .iter()
            .map(|(p, e)| (p.to_string(), e.parse().expect("restriction literals parse")))
            .collect();
        RestrictionFormula { map }
    }

    pub fn restrict(&self, partition: &str) -> Result<&SchubertElement, PipelineError> {
        self.map
            .get(partition)
            .ok_or_else(|| PipelineError::Data(format!("no restriction formula for tau_{partition}")))
    }

    pub fn set(&mut self, partition: &str, image: SchubertElement) {
        self.map.insert(partition.to_string(), image);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &SchubertElement)> {
        self.map.iter().map(|(p, e)| (p.as_str(), e))
    }
}

/// A class inserted into a Gromov-Witten invariant: either an ambient
/// Schubert class, pulled back, or a class of the Cayley Grassmannian.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insertion {
    Ambient(&'static str),
    Class(Label),
}

impl Insertion {
    pub fn expand(&self, res: &RestrictionFormula) -> Result<SchubertElement, PipelineError> {
        match self {
            Insertion::Ambient(p) => res.restrict(p).cloned(),
            Insertion::Class(l) => Ok(SchubertElement::basis(*l)),
        }
    }
}
