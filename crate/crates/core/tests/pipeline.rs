use cgqh_core::exact::rat;
use cgqh_core::intersection::SCENARIO_IDS;
use cgqh_core::pipeline::*;
use cgqh_core::presentation::{cg_relations, parse_cg, GiambelliDictionary, QuantumPresentation};
use cgqh_core::schubert::{verify_table, Label, MultiplicationTable};

#[test]
fn loop_closes_on_the_shipped_table() {
    let run = close_loop().unwrap();
    assert_eq!(run.presentation.a7, rat(0));
    assert_eq!(run.presentation.relations, cg_relations());
    assert!(run.diff.is_empty(), "{:?}", run.diff);
    // Same classes, possibly different representatives of each coset.
    let shipped = GiambelliDictionary::from_json(cgqh_core::data::GIAMBELLI_JSON).unwrap();
    let qp = QuantumPresentation::new(cg_relations(), shipped.clone()).unwrap();
    for (l, g) in run.presentation.dictionary.iter() {
        assert!(qp.ring().in_ideal(&(g - shipped.get(l))).unwrap(), "{l}");
    }
    assert_eq!(run.derived_table, MultiplicationTable::shipped());
}

#[test]
fn report_serializes() {
    let run = close_loop().unwrap();
    let v = serde_json::to_value(run.report()).unwrap();
    assert_eq!(v["relations"][0], "s1^5 - 5*s1^3*s2 + 6*s1*s2^2 + 4*s1*q");
    assert_eq!(v["diff"].as_array().unwrap().len(), 0);
    assert_eq!(v["unknowns"].as_array().unwrap().last().unwrap()["name"], "a7");
}

#[test]
fn classical_inputs_give_the_classical_ring() {
    let shipped = MultiplicationTable::shipped();
    let run = close_loop_with(ScenarioOutputs::zero(), &shipped).unwrap();
    assert_eq!(run.presentation.a7, rat(0));
    assert_eq!(
        run.presentation.relations,
        vec![parse_cg("s1^5 - 5*s1^3*s2 + 6*s1*s2^2"), parse_cg("16*s2^3 - 27*s1^2*s2^2 + 9*s1^4*s2")]
    );
    assert_eq!(run.derived_table, shipped.classical_slice());
    let want: Vec<(Label, Label)> = quantum_entries(&shipped).into_iter().map(|(a, b, _)| (a, b)).collect();
    let got: Vec<(Label, Label)> = run.diff.iter().map(|e| (e.a, e.b)).collect();
    assert_eq!(got, want);
}

#[test]
fn forcing_a4pp_breaks_the_quintic_relation() {
    let shipped = MultiplicationTable::shipped();
    let classical = shipped.classical_slice();
    let mut sol = solve_chevalley(&ScenarioOutputs::computed().unwrap()).unwrap();
    sol.set("a4pp", rat(1)).unwrap();
    let d = Derivation::new(sol.clone(), derive_missing_products(&classical, &sol), classical);
    let rels = d.relations_with(&rat(0)).unwrap();
    assert_ne!(rels[0], cg_relations()[0]);
    assert_eq!(rels[0].degree(), Some(5));
    match close_loop_from(ScenarioOutputs::computed().unwrap(), &d, &shipped) {
        Ok(run) => assert!(!run.diff.is_empty()),
        Err(e) => assert!(matches!(e, PipelineError::Presentation(_) | PipelineError::Inconsistent(_)), "{e}"),
    }
}

#[test]
fn quantum_term_in_s2_squared_is_fatal() {
    let shipped = MultiplicationTable::shipped();
    let classical = shipped.classical_slice();
    let mut sol = solve_chevalley(&ScenarioOutputs::computed().unwrap()).unwrap();
    sol.set("i_s2_s2_s8", rat(1)).unwrap();
    let d = Derivation::new(sol.clone(), derive_missing_products(&classical, &sol), classical);
    match close_loop_from(ScenarioOutputs::computed().unwrap(), &d, &shipped) {
        Ok(run) => {
            assert!(!run.diff.is_empty());
            assert!(!verify_table(&run.derived_table).all_passed());
        }
        Err(e) => assert!(matches!(e, PipelineError::Presentation(_) | PipelineError::Inconsistent(_)), "{e}"),
    }
}

#[test]
fn dropped_q_term_shifts_the_quintic_relation_by_a_q_multiple() {
    let classical = MultiplicationTable::shipped().classical_slice();
    let sol = solve_chevalley(&ScenarioOutputs::computed().unwrap()).unwrap();
    let mut d = Derivation::new(sol.clone(), derive_missing_products(&classical, &sol), classical);
    d.giambelli_hook = Some(drop_q_from_s4p);
    let r5 = d.relations_with(&rat(0)).unwrap()[0].clone();
    let delta = &r5 - &cg_relations()[0];
    assert!(!delta.is_zero());
    assert!(delta.terms_grlex().iter().all(|(m, _)| m.exponents()[2] > 0), "{delta}");
}

#[test]
fn leave_one_out_never_solves() {
    let all = ScenarioOutputs::computed().unwrap();
    for id in SCENARIO_IDS {
        assert!(solve_chevalley(&all.clone().without(id)).is_err(), "{id}");
    }
}

#[test]
fn pipeline_suite_passes() {
    let r = verify_pipeline(&MultiplicationTable::shipped());
    assert!(r.all_passed(), "{}", r.render_text());
}
