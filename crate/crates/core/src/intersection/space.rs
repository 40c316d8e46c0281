use std::sync::Arc;

use num_traits::Zero;

use super::IntersectionError;
use crate::exact::{Monomial, MultiPoly, Rational, VarSet};
use crate::presentation::PresentedRing;

/// A smooth projective parameter space known through a presentation of its
/// cohomology ring and a top-degree class of integral 1.
#[derive(Clone, Debug)]
pub struct SpaceModel {
    name: String,
    ring: PresentedRing,
    top_degree: u32,
    normalization: MultiPoly,
    /// Coordinate of the normalization class in the one-dimensional top
    /// slice.
    scale: Rational,
}

impl SpaceModel {
    pub fn new(
        name: impl Into<String>,
        vars: &Arc<VarSet>,
        relations: Vec<MultiPoly>,
        normalization: MultiPoly,
    ) -> Result<Self, IntersectionError> {
        let name = name.into();
        let top_degree = normalization
            .degree()
            .filter(|_| normalization.is_homogeneous())
            .ok_or_else(|| IntersectionError::Space(format!("{name}: normalization must be a nonzero homogeneous class")))?;
        let ring = PresentedRing::new(vars, relations, top_degree + 1)?;
        if ring.dimension(top_degree) != 1 || ring.dimension(top_degree + 1) != 0 {
            return Err(IntersectionError::Space(format!(
                "{name}: top slice has dimension {} and the next one {}, expected 1 and 0",
                ring.dimension(top_degree),
                ring.dimension(top_degree + 1)
            )));
        }
        let scale = ring.coordinates(&normalization, top_degree)?.remove(0);
        if scale.is_zero() {
            return Err(IntersectionError::Space(format!("{name}: normalization class {normalization} is zero in the ring")));
        }
        Ok(SpaceModel { name, ring, top_degree, normalization, scale })
    }

    /// Product of projective spaces `P^n` with hyperplane classes named as
    /// given: relations h^(n+1) = 0, normalization the product of h^n.
    pub fn projective_product(name: impl Into<String>, factors: &[(&str, u32)]) -> Result<Self, IntersectionError> {
        let vars = VarSet::new(factors.iter().map(|(n, _)| (*n, 1)));
        let relations = (0..factors.len()).map(|i| MultiPoly::var(&vars, i).pow(factors[i].1 + 1)).collect();
        let norm = MultiPoly::term(&vars, Monomial(factors.iter().map(|f| f.1).collect()), Rational::from_integer(1.into()));
        Self::new(name, &vars, relations, norm)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        self.ring.vars()
    }

    pub fn ring(&self) -> &PresentedRing {
        &self.ring
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn normalization(&self) -> &MultiPoly {
        &self.normalization
    }

    pub fn class(&self, name: &str) -> MultiPoly {
        MultiPoly::var_named(self.vars(), name)
    }

    /// Degree of the top-degree part of `cls`; lower and higher parts
    /// contribute nothing.
    pub fn integrate(&self, cls: &MultiPoly) -> Rational {
        let part = cls.homogeneous_part(self.top_degree);
        let c = self.ring.coordinates(&part, self.top_degree).expect("top degree is built");
        &c[0] / &self.scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::intersection::bundle::{projective_bundle_relation, FormalBundle};

    #[test]
    fn projective_products_integrate_monomials() {
        let s = SpaceModel::projective_product("P1xP2", &[("h1", 1), ("h2", 2)]).unwrap();
        let h1 = s.class("h1");
        let h2 = s.class("h2");
        assert_eq!(s.integrate(&(&h1 * &h2.pow(2))), rat(1));
        assert_eq!(s.integrate(&h2.pow(3)), rat(0));
        assert_eq!(s.integrate(&h2), rat(0));
        assert_eq!(s.top_degree(), 3);
    }

    #[test]
    fn projective_bundle_over_a_point() {
        for n in 1..=5u32 {
            let vars = VarSet::new([("m", 1)]);
            let e = FormalBundle::trivial(&vars, i64::from(n), n);
            let m = MultiPoly::var(&vars, 0);
            let rel = projective_bundle_relation(&e, &m);
            let s = SpaceModel::new("P(E)", &vars, vec![rel], m.pow(n - 1)).unwrap();
            assert_eq!(s.integrate(&m.pow(n - 1)), rat(1));
        }
    }

    #[test]
    fn bad_normalization_is_rejected() {
        let vars = VarSet::new([("h", 1)]);
        let h = MultiPoly::var(&vars, 0);
        assert!(SpaceModel::new("P1", &vars, vec![h.pow(2)], h.pow(2)).is_err());
        assert!(SpaceModel::new("A1", &vars, vec![], h.clone()).is_err());
        assert!(SpaceModel::new("P1", &vars, vec![h.pow(2)], &h + &MultiPoly::one(&vars)).is_err());
    }
}
