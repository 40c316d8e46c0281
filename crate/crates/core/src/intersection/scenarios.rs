use std::fmt;

use super::bundle::{grassmann_relations, projective_bundle_relation, FormalBundle};
use super::space::SpaceModel;
use super::IntersectionError;
use crate::exact::{Monomial, MultiPoly, Rational, VarSet};

/// Outcome of one enumerative computation: the main integral, the
/// contribution of the degenerate locus, and their difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioResult {
    pub main: Rational,
    pub correction: Rational,
    pub value: Rational,
}

impl ScenarioResult {
    fn new(main: Rational, correction: Rational) -> Self {
        let value = &main - &correction;
        ScenarioResult { main, correction, value }
    }
}

impl fmt::Display for ScenarioResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "main={} correction={} value={}", self.main, self.correction, self.value)
    }
}

/// A catalogued computation.
#[derive(Clone, Copy)]
pub struct Scenario {
    pub id: &'static str,
    /// The invariant it computes, in terms of Schubert classes of the
    /// ambient Grassmannian restricted to the Cayley Grassmannian.
    pub invariant: &'static str,
    pub space: &'static str,
    compute: fn() -> Result<ScenarioResult, IntersectionError>,
}

impl Scenario {
    pub fn run(&self) -> Result<ScenarioResult, IntersectionError> {
        (self.compute)()
    }
}

impl fmt::Debug for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Scenario").field("id", &self.id).field("invariant", &self.invariant).finish()
    }
}

pub const SCENARIO_IDS: [&str; 12] =
    ["4.1.1", "4.1.2", "4.1.3", "4.1.4", "4.1.5", "4.1.6", "4.1.7", "4.1.8", "4.1.9", "4.2.1", "4.2.2", "4.2.3"];

const CATALOG: [Scenario; 12] = [
    Scenario { id: "4.1.1", invariant: "I1(tau111, s8)", space: "P1", compute: lines_tau111_point },
    Scenario { id: "4.1.2", invariant: "I1(tau3, s8)", space: "P3", compute: lines_tau3_point },
    Scenario { id: "4.1.3", invariant: "I1(tau1111, s7)", space: "P1", compute: lines_tau1111_s7 },
    Scenario { id: "4.1.4", invariant: "I1(tau211, s7)", space: "P1 x P1", compute: lines_tau211_s7 },
    Scenario { id: "4.1.5", invariant: "I1(tau22, s7)", space: "P2", compute: lines_tau22_s7 },
    Scenario { id: "4.1.6", invariant: "I1(tau2111, s6p)", space: "P1 x P2", compute: lines_tau2111_s6p },
    Scenario { id: "4.1.7", invariant: "I1(tau221, s6p)", space: "P1 x P1 x P1", compute: lines_tau221_s6p },
    Scenario {
        id: "4.1.8",
        invariant: "I1(tau2111, tau2211)",
        space: "G(2, W5/D1) over P1",
        compute: lines_tau2111_tau2211,
    },
    Scenario {
        id: "4.1.9",
        invariant: "I1(tau32, tau2211)",
        space: "P(V6/(D1 + D1')) over P1 x P2",
        compute: lines_tau32_tau2211,
    },
    Scenario { id: "4.2.1", invariant: "I1(tau2, tau2, s8)", space: "P3", compute: lines_tau3_point },
    Scenario { id: "4.2.2", invariant: "I1(tau2, tau1111, s6p)", space: "P2", compute: lines_tau22_s7 },
    Scenario {
        id: "4.2.3",
        invariant: "I1(tau1111, tau2, tau33)",
        space: "P1 x G(2, 5)",
        compute: lines_tau1111_tau2_tau33,
    },
];

pub fn scenario(id: &str) -> Result<&'static Scenario, IntersectionError> {
    CATALOG.iter().find(|s| s.id == id).ok_or_else(|| IntersectionError::UnknownScenario(id.to_string()))
}

pub fn run_scenario(id: &str) -> Result<ScenarioResult, IntersectionError> {
    scenario(id)?.run()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn monomial(vars: &std::sync::Arc<VarSet>, exps: &[u32]) -> MultiPoly {
    MultiPoly::term(vars, Monomial(exps.to_vec()), int(1))
}

fn c(b: &FormalBundle, k: u32) -> MultiPoly {
    b.c(k)
}

fn projective_line() -> SpaceModel {
    SpaceModel::projective_product("P1", &[("h", 1)]).expect("P1")
}

/// A3* = O^2 + O(1) on the line of 3-planes through a fixed 2-plane.
fn a3_dual_on_line(s: &SpaceModel) -> FormalBundle {
    let top = s.top_degree();
    FormalBundle::trivial(s.vars(), 2, top).direct_sum(&FormalBundle::line(&s.class("h"), top))
}

fn lines_tau111_point() -> Result<ScenarioResult, IntersectionError> {
    let s = projective_line();
    let a = a3_dual_on_line(&s);
    Ok(ScenarioResult::new(s.integrate(&c(&a.exterior_square()?, 1)), int(0)))
}

/// A3 = O^4 - O(1) on P3, i.e. the hyperplanes of a fixed 4-space.
fn hyperplane_bundle_dual(s: &SpaceModel, ambient: i64) -> FormalBundle {
    let top = s.top_degree();
    FormalBundle::trivial(s.vars(), ambient, top).difference(&FormalBundle::line(&s.class("h"), top)).dual()
}

fn lines_tau3_point() -> Result<ScenarioResult, IntersectionError> {
    let s = SpaceModel::projective_product("P3", &[("h", 3)])?;
    let a = hyperplane_bundle_dual(&s, 4);
    Ok(ScenarioResult::new(s.integrate(&c(&a.exterior_square()?, 3)), int(0)))
}

fn lines_tau1111_s7() -> Result<ScenarioResult, IntersectionError> {
    let s = projective_line();
    let top = s.top_degree();
    let a_dual = a3_dual_on_line(&s);
    let quotient = FormalBundle::trivial(s.vars(), 6, top).difference(&a_dual.dual());
    let e = a_dual.exterior_square()?.difference(&quotient);
    Ok(ScenarioResult::new(s.integrate(&c(&e, 1)), int(0)))
}

fn lines_tau211_s7() -> Result<ScenarioResult, IntersectionError> {
    let s = SpaceModel::projective_product("P1xP1", &[("h", 1), ("k", 1)])?;
    let v = s.vars();
    let a = FormalBundle::split(v, &[MultiPoly::zero(v), s.class("h"), s.class("k")], s.top_degree());
    Ok(ScenarioResult::new(s.integrate(&c(&a.exterior_square()?, 2)), int(0)))
}

fn lines_tau22_s7() -> Result<ScenarioResult, IntersectionError> {
    let s = SpaceModel::projective_product("P2", &[("h", 2)])?;
    let top = s.top_degree();
    let a = hyperplane_bundle_dual(&s, 3).direct_sum(&FormalBundle::trivial(s.vars(), 1, top));
    Ok(ScenarioResult::new(s.integrate(&c(&a.exterior_square()?, 2)), int(0)))
}

fn lines_tau2111_s6p() -> Result<ScenarioResult, IntersectionError> {
    let s = SpaceModel::projective_product("P1xP2", &[("h1", 1), ("h2", 2)])?;
    let top = s.top_degree();
    let quotient = FormalBundle::trivial(s.vars(), 3, top).difference(&FormalBundle::line(&s.class("h2"), top));
    let u = FormalBundle::trivial(s.vars(), 1, top).direct_sum(&quotient.dual());
    let e = u.exterior_square()?.twist(&s.class("h1"));
    Ok(ScenarioResult::new(s.integrate(&c(&e, 3)), int(0)))
}

fn lines_tau221_s6p() -> Result<ScenarioResult, IntersectionError> {
    let s = SpaceModel::projective_product("P1xP1xP1", &[("h1", 1), ("h2", 1), ("h3", 1)])?;
    let v = s.vars();
    let u = FormalBundle::split(v, &[MultiPoly::zero(v), s.class("h1"), s.class("h2")], s.top_degree());
    let e = u.exterior_square()?.twist(&s.class("h3"));
    Ok(ScenarioResult::new(s.integrate(&c(&e, 3)), int(0)))
}

/// V3/D1 with D1 the tautological line of weight -h: c = 1/(1 - h).
fn v3_over_line(s: &SpaceModel, h: &str) -> FormalBundle {
    let top = s.top_degree();
    FormalBundle::trivial(s.vars(), 3, top).difference(&FormalBundle::line(&s.class(h).scale(&int(-1)), top))
}

/// Grassmann bundle of 2-planes S in W5/D1 (rank 4, c = 1/(1 - h)) over P1.
/// a1, a2 are the Chern classes of S*.
fn grassmann_over_line() -> Result<SpaceModel, IntersectionError> {
    let vars = VarSet::new([("h", 1), ("a1", 1), ("a2", 2)]);
    let top = 5;
    let h = MultiPoly::var(&vars, 0);
    let w = FormalBundle::trivial(&vars, 5, top).difference(&FormalBundle::line(&h.scale(&int(-1)), top));
    let s_dual = FormalBundle::from_chern(2, &(&MultiPoly::one(&vars) + &MultiPoly::var(&vars, 1)) + &MultiPoly::var(&vars, 2), top);
    let mut relations = vec![h.pow(2)];
    relations.extend(grassmann_relations(&w, &s_dual.dual()));
    SpaceModel::new("G(2, W5/D1) over P1", &vars, relations, monomial(&vars, &[1, 0, 2]))
}

fn lines_tau2111_tau2211() -> Result<ScenarioResult, IntersectionError> {
    let s = grassmann_over_line()?;
    let top = s.top_degree();
    let v = s.vars();
    let s_dual = FormalBundle::from_chern(2, &(&MultiPoly::one(v) + &s.class("a1")) + &s.class("a2"), top);
    let d = FormalBundle::line(&s.class("h"), top).direct_sum(&s_dual);
    let l2 = d.exterior_square()?;
    let main = s.integrate(&(&(&c(&d, 1) * &c(&l2, 2)) * &c(&l2.difference(&v3_over_line(&s, "h")), 2)));

    // The degenerate locus: D3 containing the fixed line, a projective
    // plane bundle over P1 with hyperplane class m.
    let vars = VarSet::new([("h", 1), ("m", 1)]);
    let (h, m) = (MultiPoly::var(&vars, 0), MultiPoly::var(&vars, 1));
    let e = FormalBundle::trivial(&vars, 2, 3).direct_sum(&FormalBundle::line(&h, 3));
    let locus = SpaceModel::new("P(W5/(W1 + D1))", &vars, vec![h.pow(2), projective_bundle_relation(&e, &m)], monomial(&vars, &[1, 2]))?;
    let top = locus.top_degree();
    let d = FormalBundle::split(&vars, &[h, MultiPoly::zero(&vars), m], top);
    let l2 = d.exterior_square()?;
    let correction = locus.integrate(&(&c(&d, 1) * &c(&l2.difference(&v3_over_line(&locus, "h")), 2)));
    Ok(ScenarioResult::new(main, correction))
}

/// P(E) over P1 x P2 with E = V6/(D1 + D1'), rank 4 and c = 1/((1 - h1)(1 - h2)).
fn projective_bundle_over_plane_line() -> Result<SpaceModel, IntersectionError> {
    let vars = VarSet::new([("h1", 1), ("h2", 1), ("m", 1)]);
    let top = 6;
    let neg = |i| FormalBundle::line(&MultiPoly::var(&vars, i).scale(&int(-1)), top);
    let e = FormalBundle::trivial(&vars, 6, top).difference(&neg(0)).difference(&neg(1));
    let m = MultiPoly::var(&vars, 2);
    let relations = vec![MultiPoly::var(&vars, 0).pow(2), MultiPoly::var(&vars, 1).pow(3), projective_bundle_relation(&e, &m)];
    SpaceModel::new("P(V6/(D1 + D1'))", &vars, relations, monomial(&vars, &[1, 2, 3]))
}

fn lines_tau32_tau2211() -> Result<ScenarioResult, IntersectionError> {
    let s = projective_bundle_over_plane_line()?;
    let d = FormalBundle::split(s.vars(), &[s.class("h1"), s.class("h2"), s.class("m")], s.top_degree());
    let l2 = d.exterior_square()?;
    let main = s.integrate(&(&(&c(&d, 1) * &c(&l2, 3)) * &c(&l2.difference(&v3_over_line(&s, "h2")), 2)));
    // The degenerate locus does not meet the cycle in the expected dimension.
    Ok(ScenarioResult::new(main, int(0)))
}

/// P1 x G(2, 5); t1, t11 are the Chern classes of S*.
fn line_times_grassmannian() -> Result<SpaceModel, IntersectionError> {
    let vars = VarSet::new([("h", 1), ("t1", 1), ("t11", 2)]);
    let top = 7;
    let s_dual = FormalBundle::from_chern(2, &(&MultiPoly::one(&vars) + &MultiPoly::var(&vars, 1)) + &MultiPoly::var(&vars, 2), top);
    let mut relations = vec![MultiPoly::var(&vars, 0).pow(2)];
    relations.extend(grassmann_relations(&FormalBundle::trivial(&vars, 5, top), &s_dual.dual()));
    SpaceModel::new("P1 x G(2, 5)", &vars, relations, monomial(&vars, &[1, 0, 3]))
}

fn lines_tau1111_tau2_tau33() -> Result<ScenarioResult, IntersectionError> {
    let s = line_times_grassmannian()?;
    let top = s.top_degree();
    let v = s.vars();
    let s_dual = FormalBundle::from_chern(2, &(&MultiPoly::one(v) + &s.class("t1")) + &s.class("t11"), top);
    let d = FormalBundle::trivial(v, 1, top).direct_sum(&s_dual);
    let l2 = d.exterior_square()?;
    let main = s.integrate(&(&(&c(&s_dual.exterior_square()?, 1) * &c(&l2, 3)) * &c(&l2.twist(&s.class("h")), 3)));

    // Degenerate locus: P(V) over P1 with V of rank 4 and c(V) = 1 + l.
    let vars = VarSet::new([("l", 1), ("m", 1)]);
    let (l, m) = (MultiPoly::var(&vars, 0), MultiPoly::var(&vars, 1));
    let e = FormalBundle::trivial(&vars, 3, 4).direct_sum(&FormalBundle::line(&l, 4));
    let locus = SpaceModel::new("P(V) over P1", &vars, vec![l.pow(2), projective_bundle_relation(&e, &m)], monomial(&vars, &[1, 3]))?;
    let d = FormalBundle::split(&vars, &[MultiPoly::zero(&vars), l, m], locus.top_degree());
    let correction = locus.integrate(&(&c(&d.determinant(), 1) * &c(&d.exterior_square()?, 3)));
    Ok(ScenarioResult::new(main, correction))
}

/// Every parameter space the catalog integrates over.
pub fn shipped_spaces() -> Vec<SpaceModel> {
    let mut out = vec![projective_line()];
    for (name, f) in [("P3", &[("h", 3)][..]), ("P2", &[("h", 2)]), ("P1xP1", &[("h", 1), ("k", 1)])] {
        out.push(SpaceModel::projective_product(name, f).expect("projective product"));
    }
    out.push(SpaceModel::projective_product("P1xP2", &[("h1", 1), ("h2", 2)]).expect("P1xP2"));
    out.push(SpaceModel::projective_product("P1xP1xP1", &[("h1", 1), ("h2", 1), ("h3", 1)]).expect("P1^3"));
    out.push(grassmann_over_line().expect("Grassmann bundle"));
    out.push(projective_bundle_over_plane_line().expect("projective bundle"));
    out.push(line_times_grassmannian().expect("P1 x G(2,5)"));
    out
}
