use std::sync::Arc;

use num_traits::Zero;

use super::PresentationError;
use crate::exact::{Monomial, MultiPoly, Rational, RationalMatrix, VarSet};

/// One graded piece of the quotient.
#[derive(Clone, Debug)]
struct Slice {
    /// All monomials of this degree, grlex-descending; vector coordinates
    /// are indexed by this list.
    monomials: Vec<Monomial>,
    /// Nonzero rows of the reduced relation span, with their pivot columns.
    rows: RationalMatrix,
    pivots: Vec<usize>,
    /// Non-pivot columns, i.e. the normal-form basis.
    basis: Vec<usize>,
}

/// A graded commutative ring `Q[vars] / (relations)` handled degree by
/// degree with exact row reduction.
///
/// In degree d the ideal is spanned by monomial multiples of the relations;
/// its reduced row echelon form under grlex order picks out the leading
/// monomials, and the remaining monomials form the normal-form basis.
#[derive(Clone, Debug)]
pub struct PresentedRing {
    vars: Arc<VarSet>,
    relations: Vec<MultiPoly>,
    slices: Vec<Slice>,
}

impl PresentedRing {
    pub fn new(vars: &Arc<VarSet>, relations: Vec<MultiPoly>, max_degree: u32) -> Result<Self, PresentationError> {
        for r in &relations {
            if !r.is_homogeneous() {
                return Err(PresentationError::NonHomogeneous(r.to_string()));
            }
        }
        let relations: Vec<MultiPoly> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        let slices = (0..=max_degree).map(|d| build_slice(vars, &relations, d)).collect();
        Ok(PresentedRing { vars: vars.clone(), relations, slices })
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn relations(&self) -> &[MultiPoly] {
        &self.relations
    }

    pub fn max_degree(&self) -> u32 {
        self.slices.len() as u32 - 1
    }

    pub fn dimension(&self, d: u32) -> usize {
        self.slices.get(d as usize).map_or(0, |s| s.basis.len())
    }

    pub fn basis(&self, d: u32) -> Vec<Monomial> {
        self.slices
            .get(d as usize)
            .map(|s| s.basis.iter().map(|&i| s.monomials[i].clone()).collect())
            .unwrap_or_default()
    }

    /// Compares every graded dimension up to `max_degree` with `expected`.
    pub fn ensure_dimensions(&self, expected: impl Fn(u32) -> usize) -> Result<(), PresentationError> {
        for d in 0..=self.max_degree() {
            let (got, want) = (self.dimension(d), expected(d));
            if got != want {
                return Err(PresentationError::DimensionMismatch { degree: d, expected: want, found: got });
            }
        }
        Ok(())
    }

    fn slice(&self, d: u32) -> Result<&Slice, PresentationError> {
        self.slices
            .get(d as usize)
            .ok_or(PresentationError::DegreeOutOfRange { degree: d, max: self.max_degree() })
    }

    fn to_vector(&self, s: &Slice, p: &MultiPoly) -> Vec<Rational> {
        s.monomials.iter().map(|m| p.coeff(m)).collect()
    }

    fn reduce_vector(&self, s: &Slice, mut v: Vec<Rational>) -> Vec<Rational> {
        for (r, &c) in s.pivots.iter().enumerate() {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for (j, x) in s.rows.row(r).iter().enumerate() {
                if !x.is_zero() {
                    v[j] -= &f * x;
                }
            }
        }
        v
    }

    /// Representative of `p` supported on the normal-form basis. Works
    /// degree by degree, so `p` need not be homogeneous.
    pub fn normal_form(&self, p: &MultiPoly) -> Result<MultiPoly, PresentationError> {
        let mut out = MultiPoly::zero(&self.vars);
        let Some(top) = p.degree() else {
            return Ok(out);
        };
        for d in 0..=top {
            let part = p.homogeneous_part(d);
            if part.is_zero() {
                continue;
            }
            let s = self.slice(d)?;
            let v = self.reduce_vector(s, self.to_vector(s, &part));
            for (m, c) in s.monomials.iter().zip(v) {
                out.add_term(m.clone(), c);
            }
        }
        Ok(out)
    }

    /// Coordinates of the degree-d part of `p` in `basis(d)`.
    pub fn coordinates(&self, p: &MultiPoly, d: u32) -> Result<Vec<Rational>, PresentationError> {
        let s = self.slice(d)?;
        let v = self.reduce_vector(s, self.to_vector(s, &p.homogeneous_part(d)));
        Ok(s.basis.iter().map(|&i| v[i].clone()).collect())
    }

    pub fn in_ideal(&self, p: &MultiPoly) -> Result<bool, PresentationError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Product reduced to normal form.
    pub fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, PresentationError> {
        self.normal_form(&(a * b))
    }
}

fn build_slice(vars: &Arc<VarSet>, relations: &[MultiPoly], d: u32) -> Slice {
    let monomials = vars.monomials_of_degree(d);
    let index = |m: &Monomial| monomials.iter().position(|x| x == m).expect("monomial of the right degree");
    let mut rows = Vec::new();
    for r in relations {
        let e = r.degree().expect("nonzero relation");
        if e > d {
            continue;
        }
        for m in vars.monomials_of_degree(d - e) {
            let mut row = vec![Rational::zero(); monomials.len()];
            for (k, c) in r.mul_monomial(&m).terms_grlex() {
                row[index(k)] = c.clone();
            }
            rows.push(row);
        }
    }
    let n = monomials.len();
    if rows.is_empty() {
        return Slice { monomials, rows: RationalMatrix::zeros(0, n), pivots: vec![], basis: (0..n).collect() };
    }
    let rr = RationalMatrix::from_rows(rows).expect("rows have equal length").rref();
    let rank = rr.rank();
    let kept: Vec<Vec<Rational>> = (0..rank).map(|i| rr.matrix.row(i).to_vec()).collect();
    let basis = (0..n).filter(|c| !rr.pivots.contains(c)).collect();
    let rows = if kept.is_empty() { RationalMatrix::zeros(0, n) } else { RationalMatrix::from_rows(kept).expect("rectangular") };
    Slice { monomials, rows, pivots: rr.pivots, basis }
}
