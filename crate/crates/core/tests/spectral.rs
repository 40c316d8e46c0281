use cgqh_core::exact::{frac, parse_rational, rat, to_f64, Rational, RationalMatrix};
use cgqh_core::presentation::GiambelliDictionary;
use cgqh_core::schubert::{Label, MultiplicationTable, SchubertElement};
use cgqh_core::spectral::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn table() -> MultiplicationTable {
    MultiplicationTable::shipped()
}

/// Independent route to det(tI - M): evaluate det(xI - M) at 16 integer
/// points by elimination and interpolate.
fn charpoly_by_interpolation(m: &RationalMatrix) -> Vec<Rational> {
    let n = m.rows();
    let xs: Vec<Rational> = (0..=n as i64).map(rat).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| {
            let shifted = RationalMatrix::identity(n).scale(x).add(&m.scale(&-Rational::one())).unwrap();
            shifted.determinant().unwrap()
        })
        .collect();
    // Vandermonde solve.
    let rows: Vec<Vec<Rational>> = xs
        .iter()
        .map(|x| (0..=n).map(|k| (0..k).fold(Rational::one(), |a, _| a * x)).collect())
        .collect();
    let v = RationalMatrix::from_rows(rows).unwrap();
    match v.solve(&ys).unwrap() {
        cgqh_core::exact::LinearSolution::Unique(c) => c,
        other => panic!("{other:?}"),
    }
}

#[test]
fn charpoly_agrees_with_interpolated_determinants() {
    let m = sigma1_operator(&table(), &Rational::one()).matrix;
    let c = charpoly_by_interpolation(&m);
    let p = charpoly_at(&table(), &Rational::one());
    for (k, ck) in c.iter().enumerate() {
        assert_eq!(&p.coeff(k as u32), ck, "t^{k}");
    }
    assert_eq!(p.display_with("t"), "t^15 - 102 t^11 + 317 t^7 - 2048 t^3");
}

#[test]
fn charpoly_scales_with_the_grading() {
    let p1 = charpoly_at(&table(), &Rational::one());
    let p16 = charpoly_at(&table(), &rat(16));
    assert!(grading_violations(&p1, &p16, &rat(2)).is_empty());
    assert_eq!(p16.coeff(11), rat(-102 * 16));
    assert_eq!(p16.coeff(3), rat(-2048 * 4096));
}

#[test]
fn gram_determinant_at_one() {
    // Computed independently of the Faddeev-LeVerrier path: the trace of
    // multiplication by s_l is read off the diagonal of the products.
    let t = table();
    let traces: Vec<Rational> = Label::ALL
        .iter()
        .map(|l| Label::ALL.iter().map(|b| t.product(*l, *b).specialize(&Rational::one())[b.index()].clone()).sum())
        .collect();
    let mut g = RationalMatrix::zeros(15, 15);
    for a in Label::ALL {
        for b in Label::ALL {
            let c = t.product(a, b).specialize(&Rational::one());
            g.set(a.index(), b.index(), c.iter().zip(&traces).map(|(x, y)| x * y).sum());
        }
    }
    let det = g.determinant().unwrap();
    assert_eq!(det.to_string(), "12741241792184927125504");
    // 2^54 * 29^4
    assert_eq!(det, rat(1 << 54) * rat(29 * 29 * 29 * 29));
    let s = check_semisimple(&t, &Rational::one());
    assert!(s.semisimple && s.symmetric);
    assert_eq!(s.rank, 15);
    assert_eq!(s.gram_determinant, det.to_string());
}

#[test]
fn classical_ring_is_not_semisimple() {
    let s = check_semisimple(&table(), &Rational::zero());
    assert!(!s.semisimple);
    assert!(s.rank < 15);
}

#[test]
fn conjecture_o_report() {
    let rep = conjecture_o_check(&table());
    assert!(rep.all_flags(), "{:?}", rep.diagnostics);
    assert!(rep.diagnostics.is_empty());
    assert_eq!(rep.cubic.as_deref(), Some("y^3 - 102 y^2 + 317 y - 2048"));
    assert_eq!(rep.real_roots_of_cubic, Some(1));
    let y = rep.y_max_interval().unwrap();
    let published = parse_rational("99.00713881372502").unwrap();
    assert!(y.lo <= y.hi);
    let rel = to_f64(&((&y.midpoint() - &published) / &published)).abs();
    assert!(rel < 1e-9, "{rel}");

    let m = rep.moduli();
    assert_eq!(m.len(), 15);
    let t = to_f64(&parse_rational(&rep.t.as_ref().unwrap().lo).unwrap());
    for v in &m[..4] {
        assert!((v - t).abs() < 1e-12);
    }
    assert!(m[3] > m[4] + 0.5);
    assert_eq!(&m[12..], &[0.0, 0.0, 0.0]);
    // The complex pair of the cubic has modulus sqrt(2048 / y_max), about 4.55.
    let pair = (2048.0 / to_f64(&published)).sqrt();
    assert!((pair - 4.548).abs() < 1e-3);
    for v in &m[4..12] {
        assert!((v.powi(4) - pair).abs() < 1e-9);
    }
    for e in &rep.eigenvalues {
        assert!(e.radius < 1e-9, "{e:?}");
    }
    let g = rep.galkin.as_ref().unwrap();
    assert!(g.bound_ok);
    assert!((g.value() - 12.6175960332).abs() < 1e-8);
}

#[test]
fn report_serializes_with_string_numbers() {
    let rep = conjecture_o_check(&table());
    let v: serde_json::Value = serde_json::to_value(&rep).unwrap();
    assert_eq!(v["max_eigenvalue_real_simple"], true);
    assert_eq!(v["trace_form"]["gram_determinant"], "12741241792184927125504");
    assert!(v["eigenvalues"][1]["re"].as_str().unwrap().starts_with("3.154"));
    assert_eq!(v["char_poly_coefficients"][0], serde_json::json!([15, "1"]));
}

#[test]
fn nilpotent_classical_operator() {
    assert!(sigma1_nilpotent_at_zero(&table()));
    let mut t = table();
    // A classical s8 * s1 = s0 closes a cycle through every degree.
    t.set_product(Label::S8, Label::S1, SchubertElement::unit());
    assert!(!sigma1_nilpotent_at_zero(&t));
}

#[test]
fn spectral_suite_passes() {
    let dict = GiambelliDictionary::from_json(cgqh_core::data::GIAMBELLI_JSON).unwrap();
    let r = verify_spectral(&table(), &dict);
    assert!(r.all_passed(), "{}", r.render_text());
}

#[test]
fn galkin_threshold_examples() {
    let at = |y: Rational| galkin_bound(&RootInterval { lo: y.clone(), hi: y });
    assert!(!at(frac(6561, 256)).bound_ok);
    assert!(at(frac(6561, 256) + frac(1, 1 << 40)).bound_ok);
    assert!(!at(rat(16)).bound_ok);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplier_operators_commute(a in 0usize..15, b in 0usize..15, q in -3i64..4) {
        let t = table();
        let q = rat(q);
        let ma = multiplication_matrix(&t, &SchubertElement::basis(Label::from_index(a)), &q).matrix;
        let mb = multiplication_matrix(&t, &SchubertElement::basis(Label::from_index(b)), &q).matrix;
        prop_assert_eq!(&ma * &mb, &mb * &ma);
    }

    #[test]
    fn grading_covariance_at_fourth_powers(s in 1i64..5) {
        let t = table();
        let p1 = charpoly_at(&t, &Rational::one());
        let ps = charpoly_at(&t, &rat(s.pow(4)));
        prop_assert!(grading_violations(&p1, &ps, &rat(s)).is_empty());
    }
}
