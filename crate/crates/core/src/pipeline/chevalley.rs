use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::restriction::{Insertion, RestrictionFormula};
use super::PipelineError;
use crate::exact::{LinearSolution, Rational, RationalMatrix};
use crate::intersection::{run_scenario, SCENARIO_IDS};
use crate::schubert::{Label, MultiplicationTable, SchubertElement};

use Insertion::{Ambient, Class};
use Label::*;

/// The degree-one invariants the enumerative computations determine, as
/// sorted label triples. The first nine are the `I_1(s1, a, b)` of the
/// Chevalley ansatz; the last three feed the products by s2.
pub const UNKNOWNS: [(&str, [Label; 3]); 12] = [
    ("a3", [S1, S3, S8]),
    ("a3p", [S1, S3p, S8]),
    ("a4", [S1, S4, S7]),
    ("a4p", [S1, S4p, S7]),
    ("a4pp", [S1, S4pp, S7]),
    ("a5", [S1, S5, S6]),
    ("b5", [S1, S5, S6p]),
    ("a5p", [S1, S5p, S6]),
    ("b5p", [S1, S5p, S6p]),
    ("i_s2_s2_s8", [S2, S2, S8]),
    ("i_s2_s4_s6p", [S2, S4, S6p]),
    ("i_s2_s4_s6", [S2, S4, S6]),
];

/// The invariant each catalogued computation evaluates. Two-point
/// invariants get s1 as a third insertion (divisor axiom, degree one).
pub const EQUATIONS: [(&str, &[Insertion]); 12] = [
    ("4.1.1", &[Ambient("111"), Class(S8)]),
    ("4.1.2", &[Ambient("3"), Class(S8)]),
    ("4.1.3", &[Ambient("1111"), Class(S7)]),
    ("4.1.4", &[Ambient("211"), Class(S7)]),
    ("4.1.5", &[Ambient("22"), Class(S7)]),
    ("4.1.6", &[Ambient("2111"), Class(S6p)]),
    ("4.1.7", &[Ambient("221"), Class(S6p)]),
    ("4.1.8", &[Ambient("2111"), Ambient("2211")]),
    ("4.1.9", &[Ambient("32"), Ambient("2211")]),
    ("4.2.1", &[Ambient("2"), Ambient("2"), Class(S8)]),
    ("4.2.2", &[Ambient("2"), Ambient("1111"), Class(S6p)]),
    ("4.2.3", &[Ambient("1111"), Ambient("2"), Ambient("33")]),
];

/// Scenario id to its reported value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScenarioOutputs(pub BTreeMap<String, Rational>);

impl ScenarioOutputs {
    /// Runs every computation of the intersection engine.
    pub fn computed() -> Result<Self, PipelineError> {
        let mut m = BTreeMap::new();
        for id in SCENARIO_IDS {
            m.insert(id.to_string(), run_scenario(id)?.value);
        }
        Ok(ScenarioOutputs(m))
    }

    /// The same ids with every value zero: a world without lines.
    pub fn zero() -> Self {
        ScenarioOutputs(SCENARIO_IDS.iter().map(|id| (id.to_string(), Rational::zero())).collect())
    }

    pub fn with(mut self, id: &str, value: Rational) -> Self {
        self.0.insert(id.to_string(), value);
        self
    }

    pub fn without(mut self, id: &str) -> Self {
        self.0.remove(id);
        self
    }
}

/// Solved coefficients of the quantum Chevalley formula. `a7` is the single
/// degree-two invariant I_2(s1, s7, s8); the degree-one data do not see it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChevalleyUnknowns {
    pub a3: Rational,
    pub a3p: Rational,
    pub a4: Rational,
    pub a4p: Rational,
    pub a4pp: Rational,
    pub a5: Rational,
    pub b5: Rational,
    pub a5p: Rational,
    pub b5p: Rational,
    pub a7: Option<Rational>,
}

/// Everything the degree-one computations pin down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeOneSolution {
    pub unknowns: ChevalleyUnknowns,
    pub i_s2_s2_s8: Rational,
    pub i_s2_s4_s6p: Rational,
    pub i_s2_s4_s6: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

impl DegreeOneSolution {
    fn from_vec(x: &[Rational]) -> Self {
        DegreeOneSolution {
            unknowns: ChevalleyUnknowns {
                a3: x[0].clone(),
                a3p: x[1].clone(),
                a4: x[2].clone(),
                a4p: x[3].clone(),
                a4pp: x[4].clone(),
                a5: x[5].clone(),
                b5: x[6].clone(),
                a5p: x[7].clone(),
                b5p: x[8].clone(),
                a7: None,
            },
            i_s2_s2_s8: x[9].clone(),
            i_s2_s4_s6p: x[10].clone(),
            i_s2_s4_s6: x[11].clone(),
        }
    }

    /// Values in the order of [`UNKNOWNS`].
    pub fn values(&self) -> Vec<Rational> {
        let u = &self.unknowns;
        vec![
            u.a3.clone(),
            u.a3p.clone(),
            u.a4.clone(),
            u.a4p.clone(),
            u.a4pp.clone(),
            u.a5.clone(),
            u.b5.clone(),
            u.a5p.clone(),
            u.b5p.clone(),
            self.i_s2_s2_s8.clone(),
            self.i_s2_s4_s6p.clone(),
            self.i_s2_s4_s6.clone(),
        ]
    }

    pub fn named(&self) -> Vec<NamedValue> {
        let mut out: Vec<NamedValue> = UNKNOWNS
            .iter()
            .zip(self.values())
            .map(|((n, _), v)| NamedValue { name: n.to_string(), value: v.to_string() })
            .collect();
        if let Some(a7) = &self.unknowns.a7 {
            out.push(NamedValue { name: "a7".into(), value: a7.to_string() });
        }
        out
    }

    /// Sets one unknown by name; used to inject faults.
    pub fn set(&mut self, name: &str, v: Rational) -> Result<(), PipelineError> {
        let mut x = self.values();
        let i = UNKNOWNS
            .iter()
            .position(|(n, _)| *n == name)
            .ok_or_else(|| PipelineError::Data(format!("no unknown named {name}")))?;
        x[i] = v;
        let a7 = self.unknowns.a7.take();
        *self = Self::from_vec(&x);
        self.unknowns.a7 = a7;
        Ok(())
    }

    /// I_d(s1, a, b) as fixed by the solution, for the degrees where the
    /// Chevalley formula can have quantum terms. `a7` defaults to zero.
    pub fn chevalley_invariant(&self, d: u32, a: Label, b: Label) -> Rational {
        let mut t = [S1, a, b];
        t.sort();
        match d {
            1 => UNKNOWNS[..9]
                .iter()
                .position(|(_, u)| *u == t)
                .map_or_else(Rational::zero, |i| self.values()[i].clone()),
            2 if t == [S1, S7, S8] => self.unknowns.a7.clone().unwrap_or_else(Rational::zero),
            _ => Rational::zero(),
        }
    }
}

/// One row of the linear system: the coefficients of a scenario's
/// invariant in the twelve unknowns.
pub fn equation_row(insertions: &[Insertion], res: &RestrictionFormula) -> Result<Vec<Rational>, PipelineError> {
    let mut factors: Vec<SchubertElement> = insertions.iter().map(|i| i.expand(res)).collect::<Result<_, _>>()?;
    if factors.len() == 2 {
        factors.insert(0, SchubertElement::basis(S1));
    }
    let mut row = vec![Rational::zero(); UNKNOWNS.len()];
    let [x, y, z] = &factors[..] else {
        return Err(PipelineError::Data(format!("{} insertions", insertions.len())));
    };
    for (_, a, ca) in x.terms() {
        for (_, b, cb) in y.terms() {
            for (_, c, cc) in z.terms() {
                if a.degree() + b.degree() + c.degree() != 12 {
                    continue;
                }
                let mut t = [a, b, c];
                t.sort();
                let i = UNKNOWNS.iter().position(|(_, u)| *u == t).ok_or_else(|| {
                    PipelineError::Data(format!("invariant I_1({}, {}, {}) is not among the unknowns", t[0], t[1], t[2]))
                })?;
                row[i] += &(&ca * &cb) * &cc;
            }
        }
    }
    Ok(row)
}

/// Inverts the restriction formulas. The system is square when every
/// scenario is present; with one missing it is underdetermined.
pub fn solve_chevalley(outputs: &ScenarioOutputs) -> Result<DegreeOneSolution, PipelineError> {
    solve_chevalley_with(outputs, &RestrictionFormula::shipped())
}

pub fn solve_chevalley_with(outputs: &ScenarioOutputs, res: &RestrictionFormula) -> Result<DegreeOneSolution, PipelineError> {
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (id, ins) in EQUATIONS {
        if let Some(v) = outputs.0.get(id) {
            rows.push(equation_row(ins, res)?);
            rhs.push(v.clone());
        }
    }
    if rows.is_empty() {
        return Err(PipelineError::Underdetermined { free: UNKNOWNS.iter().map(|(n, _)| n.to_string()).collect() });
    }
    let a = RationalMatrix::from_rows(rows).map_err(|e| PipelineError::Data(e.to_string()))?;
    match a.solve(&rhs).map_err(|e| PipelineError::Data(e.to_string()))? {
        LinearSolution::Inconsistent => Err(PipelineError::Inconsistent("the scenario equations contradict each other".into())),
        LinearSolution::Underdetermined { free, .. } => {
            Err(PipelineError::Underdetermined { free: free.iter().map(|i| UNKNOWNS[*i].0.to_string()).collect() })
        }
        LinearSolution::Unique(x) => {
            for ((name, _), v) in UNKNOWNS.iter().zip(&x) {
                if !v.is_integer() || v.is_negative() {
                    return Err(PipelineError::Inconsistent(format!("{name} = {v} is not a non-negative integer")));
                }
            }
            Ok(DegreeOneSolution::from_vec(&x))
        }
    }
}

/// Quantum multiplication by s1 on the Schubert basis: the classical rows
/// from the q = 0 slice plus the solved quantum corrections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumChevalley {
    rows: BTreeMap<Label, SchubertElement>,
}

impl QuantumChevalley {
    pub fn new(classical: &MultiplicationTable, sol: &DegreeOneSolution) -> Self {
        let rows = Label::ALL
            .into_iter()
            .map(|x| {
                let mut row = classical.product(x, S1).classical();
                for d in 1..=2u32 {
                    for y in Label::ALL {
                        if y.degree() + 4 * d == x.degree() + 1 {
                            row.add_term(y, d, sol.chevalley_invariant(d, x, y.dual()));
                        }
                    }
                }
                (x, row)
            })
            .collect();
        QuantumChevalley { rows }
    }

    pub fn row(&self, x: Label) -> &SchubertElement {
        &self.rows[&x]
    }

    /// `e * s1`.
    pub fn apply(&self, e: &SchubertElement) -> SchubertElement {
        let mut out = SchubertElement::zero();
        for x in Label::ALL {
            let p = e.coeff_poly(x);
            if !p.is_zero() {
                out = &out + &self.rows[&x].mul_poly(&p);
            }
        }
        out
    }
}

/// The two products by s2 that complement the image of multiplication by s1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MissingProducts {
    pub s2_s2: SchubertElement,
    pub s4_s2: SchubertElement,
}

/// Classical parts from the table's q = 0 slice; the only possible quantum
/// terms are q times classes of degree 0 (for s2^2) and 2 (for s4 s2).
pub fn derive_missing_products(classical: &MultiplicationTable, sol: &DegreeOneSolution) -> MissingProducts {
    let mut s2_s2 = classical.product(S2, S2).classical();
    s2_s2.add_term(S0, 1, sol.i_s2_s2_s8.clone());
    let mut s4_s2 = classical.product(S4, S2).classical();
    s4_s2.add_term(S2, 1, sol.i_s2_s4_s6.clone());
    s4_s2.add_term(S2p, 1, sol.i_s2_s4_s6p.clone());
    MissingProducts { s2_s2, s4_s2 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::expected::{chevalley_rows, CHEVALLEY_UNKNOWNS, SCENARIO_VALUES};

    fn published() -> ScenarioOutputs {
        ScenarioOutputs(SCENARIO_VALUES.iter().map(|(id, m, c)| (id.to_string(), rat(m - c))).collect())
    }

    #[test]
    fn published_values_give_the_chevalley_coefficients() {
        let s = solve_chevalley(&published()).unwrap();
        let got: Vec<Rational> = s.values()[..9].to_vec();
        let want: Vec<Rational> = CHEVALLEY_UNKNOWNS[..9].iter().map(|u| rat(u.4)).collect();
        assert_eq!(got, want);
        assert_eq!(s.values()[9..], [rat(0), rat(2), rat(0)]);
    }

    #[test]
    fn equations_read_as_expected() {
        let res = RestrictionFormula::shipped();
        // 2 I(s5, s6) + 6 I(s5, s6p) for tau2111 against tau2211.
        let row = equation_row(EQUATIONS[7].1, &res).unwrap();
        assert_eq!(row[5], rat(2));
        assert_eq!(row[6], rat(6));
        assert_eq!(row.iter().filter(|c| !c.is_zero()).count(), 2);
        // s4 s2 paired with s6 + s6p.
        let row = equation_row(EQUATIONS[11].1, &res).unwrap();
        assert_eq!(row[10..], [rat(1), rat(1)]);
    }

    #[test]
    fn perturbed_value_is_not_integral() {
        let e = solve_chevalley(&published().with("4.1.4", rat(4))).unwrap_err();
        assert!(matches!(e, PipelineError::Inconsistent(ref m) if m.contains("a4p = 3/2")), "{e}");
    }

    #[test]
    fn zero_inputs_give_zero_unknowns() {
        let s = solve_chevalley(&ScenarioOutputs::zero()).unwrap();
        assert!(s.values().iter().all(Zero::is_zero));
    }

    #[test]
    fn every_scenario_is_load_bearing() {
        for id in SCENARIO_IDS {
            let e = solve_chevalley(&published().without(id)).unwrap_err();
            assert!(matches!(e, PipelineError::Underdetermined { .. } | PipelineError::Inconsistent(_)), "{id}");
        }
    }

    #[test]
    fn chevalley_rows_reproduce_the_reference() {
        let t = MultiplicationTable::shipped();
        let s = solve_chevalley(&published()).unwrap();
        let ch = QuantumChevalley::new(&t.classical_slice(), &s);
        for (l, row) in chevalley_rows() {
            assert_eq!(ch.row(l), &row, "{l}");
        }
        for l in Label::ALL {
            assert_eq!(ch.row(l), t.product(l, S1), "{l}");
        }
    }

    #[test]
    fn missing_products_match_the_table() {
        let t = MultiplicationTable::shipped();
        let s = solve_chevalley(&published()).unwrap();
        let m = derive_missing_products(&t.classical_slice(), &s);
        assert_eq!(m.s2_s2.to_string(), "s4 + 2*s4p + 2*s4pp");
        assert_eq!(m.s4_s2.to_string(), "s6 + s6p + 2*q*s2p");
        let z = derive_missing_products(&t.classical_slice(), &solve_chevalley(&ScenarioOutputs::zero()).unwrap());
        assert_eq!(z.s4_s2, t.product(S4, S2).classical());
        let mut bad = s.clone();
        bad.set("i_s2_s2_s8", rat(1)).unwrap();
        assert_eq!(derive_missing_products(&t.classical_slice(), &bad).s2_s2.to_string(), "s4 + 2*s4p + 2*s4pp + q");
    }
}
