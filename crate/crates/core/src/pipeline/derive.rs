use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::chevalley::{DegreeOneSolution, MissingProducts, QuantumChevalley};
use super::PipelineError;
use crate::exact::{MultiPoly, Rational, RationalMatrix};
use crate::presentation::{cg_vars, schubert_classes, GiambelliDictionary, PresentedRing};
use crate::schubert::{Label, MultiplicationTable, SchubertElement};

/// Highest degree with a class that is not a q-multiple.
const TOP: u32 = 8;

/// Inputs of the presentation derivation. Every field is public so tests
/// can perturb one thing at a time.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub solution: DegreeOneSolution,
    pub products: MissingProducts,
    /// The q = 0 slice of the table, source of all classical coefficients.
    pub classical: MultiplicationTable,
    /// Called on every Giambelli polynomial as soon as it is derived, before
    /// later degrees use it.
    pub giambelli_hook: Option<fn(Label, MultiPoly) -> MultiPoly>,
}

/// The output of a successful derivation.
#[derive(Clone, Debug)]
pub struct DerivedPresentation {
    pub relations: Vec<MultiPoly>,
    pub dictionary: GiambelliDictionary,
    pub a7: Rational,
    pub chevalley: QuantumChevalley,
}

struct Stage {
    relations: Vec<MultiPoly>,
    giambelli: BTreeMap<Label, MultiPoly>,
}

impl Derivation {
    pub fn new(solution: DegreeOneSolution, products: MissingProducts, classical: MultiplicationTable) -> Self {
        Derivation { solution, products, classical, giambelli_hook: None }
    }

    fn chevalley(&self, a7: &Rational) -> QuantumChevalley {
        let mut sol = self.solution.clone();
        sol.unknowns.a7 = Some(a7.clone());
        QuantumChevalley::new(&self.classical, &sol)
    }

    /// Builds Giambelli polynomials degree by degree. In degree d the
    /// unknowns are the classes of degree d; every product of s1 with a
    /// class of degree d - 1, and the two s2 products, give one linear
    /// equation between them with a known polynomial on the right.
    /// Equations left over once the unknowns are eliminated are relations.
    fn run(&self, a7: &Rational) -> Result<Stage, PipelineError> {
        let vars = cg_vars();
        let s1 = MultiPoly::var(&vars, 0);
        let s2 = MultiPoly::var(&vars, 1);
        let q = MultiPoly::var(&vars, 2);
        let ch = self.chevalley(a7);
        let mut st = Stage { relations: Vec::new(), giambelli: BTreeMap::new() };
        st.giambelli.insert(Label::S0, MultiPoly::one(&vars));
        st.giambelli.insert(Label::S1, s1.clone());
        st.giambelli.insert(Label::S2, s2.clone());

        let class_poly = |st: &Stage, k: u32, l: Label| st.giambelli.get(&l).map(|g| &q.pow(k) * g);

        for d in 2..=TOP {
            let unknown: Vec<Label> = Label::of_degree(d).filter(|l| !st.giambelli.contains_key(l)).collect();
            let mut lhs: Vec<SchubertElement> = Vec::new();
            let mut rhs: Vec<MultiPoly> = Vec::new();
            for (k, x) in schubert_classes(d - 1) {
                let gx = class_poly(&st, k, x).expect("lower degrees are complete");
                lhs.push(ch.row(x).shift_q(k));
                rhs.push(&s1 * &gx);
            }
            if d == 4 {
                lhs.push(self.products.s2_s2.clone());
                rhs.push(&s2 * &s2);
            }
            if d == 6 {
                lhs.push(self.products.s4_s2.clone());
                rhs.push(&s2 * &st.giambelli[&Label::S4]);
            }

            // Move the known classes to the right-hand side.
            let m = lhs.len();
            let u = unknown.len();
            let mut a = RationalMatrix::zeros(m, u + m);
            for (i, e) in lhs.iter().enumerate() {
                for (k, l, c) in e.terms() {
                    if let Some(j) = unknown.iter().position(|x| *x == l).filter(|_| k == 0) {
                        a.set(i, j, c);
                    } else {
                        let g = class_poly(&st, k, l).ok_or_else(|| {
                            PipelineError::Inconsistent(format!("degree {d} row mentions q^{k}*{l} before it is known"))
                        })?;
                        rhs[i] = &rhs[i] - &g.scale(&c);
                    }
                }
                a.set(i, u + i, Rational::one());
            }
            let r = a.rref();
            let solved = r.pivots.iter().take_while(|p| **p < u).count();
            if solved < u {
                return Err(PipelineError::Inconsistent(format!(
                    "degree {d}: s1 and s2 do not generate the classes {:?}",
                    &unknown[solved..]
                )));
            }
            let combine = |row: usize| {
                (0..m).fold(MultiPoly::zero(&vars), |acc, j| {
                    let c = r.matrix.get(row, u + j);
                    if c.is_zero() {
                        acc
                    } else {
                        &acc + &rhs[j].scale(c)
                    }
                })
            };

            // New relations, reduced against the multiples of old ones.
            for row in u..m {
                let cand = combine(row);
                if cand.is_zero() {
                    continue;
                }
                let ring = PresentedRing::new(&vars, st.relations.clone(), d)?;
                let nf = ring.normal_form(&cand)?;
                if !nf.is_zero() {
                    st.relations.push(nf.primitive());
                }
            }

            let ring = PresentedRing::new(&vars, st.relations.clone(), d)?;
            for (row, l) in unknown.iter().enumerate() {
                let mut g = ring.normal_form(&combine(row))?;
                if let Some(hook) = self.giambelli_hook {
                    g = hook(*l, g);
                }
                st.giambelli.insert(*l, g);
            }
        }
        Ok(st)
    }

    /// Normal form of `s1 * G(s8)` minus the Giambelli image of the s8 row
    /// of the Chevalley formula; it vanishes exactly when a7 is right.
    fn s8_residual(&self, a7: &Rational, st: &Stage) -> Result<MultiPoly, PipelineError> {
        let vars = cg_vars();
        let s1 = MultiPoly::var(&vars, 0);
        let q = MultiPoly::var(&vars, 2);
        let row = self.chevalley(a7).row(Label::S8).clone();
        let mut res = &s1 * &st.giambelli[&Label::S8];
        for (k, l, c) in row.terms() {
            res = &res - &(&q.pow(k) * &st.giambelli[&l]).scale(&c);
        }
        let ring = PresentedRing::new(&vars, st.relations.clone(), TOP + 1)?;
        Ok(ring.normal_form(&res)?)
    }

    /// The relations found by a run with a fixed a7. Those of degree below 8
    /// do not depend on a7.
    pub fn relations_with(&self, a7: &Rational) -> Result<Vec<MultiPoly>, PipelineError> {
        Ok(self.run(a7)?.relations)
    }

    /// Finds a7 from the s8 row (both sides are affine in a7 below degree
    /// 16, so two trial runs suffice) and returns the presentation.
    pub fn derive(&self) -> Result<DerivedPresentation, PipelineError> {
        let a7 = match &self.solution.unknowns.a7 {
            Some(v) => v.clone(),
            None => {
                let (zero, one) = (Rational::zero(), Rational::one());
                let f0 = self.s8_residual(&zero, &self.run(&zero)?)?;
                let f1 = self.s8_residual(&one, &self.run(&one)?)?;
                let df = &f1 - &f0;
                let Some((m, c)) = df.leading_term() else {
                    return Err(PipelineError::Inconsistent("the s8 row does not involve a7".into()));
                };
                -(f0.coeff(m) / c)
            }
        };
        let st = self.run(&a7)?;
        let res = self.s8_residual(&a7, &st)?;
        if !res.is_zero() {
            return Err(PipelineError::Inconsistent(format!("no value of a7 makes the s8 row consistent; residual {res}")));
        }
        let dictionary = GiambelliDictionary::from_polys(st.giambelli)?;
        Ok(DerivedPresentation { relations: st.relations, dictionary, chevalley: self.chevalley(&a7), a7 })
    }
}

/// Derives the relations and Giambelli dictionary from the solved
/// invariants, the two s2 products and the classical table.
pub fn derive_presentation(
    solution: &DegreeOneSolution,
    products: &MissingProducts,
    classical: &MultiplicationTable,
) -> Result<DerivedPresentation, PipelineError> {
    Derivation::new(solution.clone(), products.clone(), classical.classical_slice()).derive()
}
