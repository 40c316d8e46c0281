//! The quantum ring as a quotient of Q[s1, s2, q], with graded normal forms
//! and the Giambelli dictionary linking it back to the Schubert basis.

mod giambelli;
mod quantum;
mod ring;

use std::sync::{Arc, OnceLock};

pub use giambelli::GiambelliDictionary;
pub use quantum::{
    cross_check_presentation, diff_tables, evaluate_in_schubert, schubert_classes, QuantumPresentation,
    SchubertEvaluator,
};
pub use ring::PresentedRing;

use thiserror::Error;

use crate::exact::{MultiPoly, VarSet};
use crate::expected;
use crate::schubert::BETTI;

/// Enough for the product of two classes of top degree.
pub const MAX_DEGREE: u32 = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("relation {0} is not homogeneous")]
    NonHomogeneous(String),
    #[error("degree {degree} has dimension {found}, expected {expected}")]
    DimensionMismatch { degree: u32, expected: usize, found: usize },
    #[error("degree {degree} is beyond the built range 0..={max}")]
    DegreeOutOfRange { degree: u32, max: u32 },
    #[error("change of basis to Schubert classes is singular in degree {0}")]
    SingularChangeOfBasis(u32),
    #[error("malformed data: {0}")]
    Data(String),
}

/// The generators s1, s2, q with weights 1, 2, 4.
pub fn cg_vars() -> Arc<VarSet> {
    static VARS: OnceLock<Arc<VarSet>> = OnceLock::new();
    VARS.get_or_init(|| VarSet::new([("s1", 1), ("s2", 2), ("q", 4)])).clone()
}

/// Parses a polynomial in s1, s2, q; panics on malformed input, so only
/// for literals.
pub fn parse_cg(s: &str) -> MultiPoly {
    MultiPoly::parse(&cg_vars(), s).unwrap_or_else(|e| panic!("{e}"))
}

/// The two published quantum relations.
pub fn cg_relations() -> Vec<MultiPoly> {
    vec![parse_cg(expected::R5), parse_cg(expected::R6)]
}

/// Dimension of the degree-d piece of the quantum ring, a free module over
/// Q[q] on the Schubert classes: sum over c of b_{d - 4c}.
pub fn expected_dimension(d: u32) -> usize {
    (0..=d / 4).map(|c| BETTI.get((d - 4 * c) as usize).copied().unwrap_or(0)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_dimensions_of_the_quotient() {
        let ring = PresentedRing::new(&cg_vars(), cg_relations(), MAX_DEGREE).unwrap();
        assert_eq!(ring.dimension(0), 1);
        // No relation acts below degree 5, so these count monomials.
        assert_eq!(ring.dimension(4), 4);
        assert_eq!(cg_vars().monomials_of_degree(4).len(), 4);
        assert_eq!(ring.dimension(5), 3);
        assert!(ring.ensure_dimensions(expected_dimension).is_ok());
    }

    #[test]
    fn relations_reduce_to_zero() {
        let ring = PresentedRing::new(&cg_vars(), cg_relations(), MAX_DEGREE).unwrap();
        for r in cg_relations() {
            assert!(ring.in_ideal(&r).unwrap());
        }
    }

    #[test]
    fn classical_limit_relations() {
        let rels = cg_relations();
        let q0: Vec<MultiPoly> = rels.iter().map(|r| r.substitute(&[parse_cg("s1"), parse_cg("s2"), MultiPoly::zero(&cg_vars())])).collect();
        assert_eq!(q0[0], parse_cg("s1^5 - 5*s1^3*s2 + 6*s1*s2^2"));
        assert_eq!(q0[1], parse_cg("16*s2^3 - 27*s1^2*s2^2 + 9*s1^4*s2"));
    }
}
