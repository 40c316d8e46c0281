use cgqh_core::exact::{rat, MultiPoly, Rational};
use cgqh_core::intersection::{shipped_spaces, FormalBundle, SpaceModel};
use num_traits::Zero;
use proptest::prelude::*;

/// A random class of degree 1 on the space: an integer combination of the
/// degree-1 generators.
fn linear_class(s: &SpaceModel, coeffs: &[i64]) -> MultiPoly {
    let v = s.vars();
    let mut out = MultiPoly::zero(v);
    let mut k = 0;
    for (i, w) in v.weights().iter().enumerate() {
        if *w == 1 {
            out = &out + &MultiPoly::var(v, i).scale(&rat(coeffs[k % coeffs.len()]));
            k += 1;
        }
    }
    out
}

/// Total Chern class of a random bundle with a nontrivial denominator.
fn random_bundle(s: &SpaceModel, rank: i64, a: &[i64], b: &[i64]) -> FormalBundle {
    let top = s.top_degree();
    let x = linear_class(s, a);
    let y = linear_class(s, b);
    let base = FormalBundle::split(s.vars(), &[x.clone(), y.clone(), &x + &y], top);
    let extra = FormalBundle::trivial(s.vars(), rank, top).difference(&FormalBundle::line(&y, top));
    base.direct_sum(&extra)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn whitney_on_shipped_spaces(
        a in prop::collection::vec(-3i64..=3, 3),
        b in prop::collection::vec(-3i64..=3, 3),
        c in prop::collection::vec(-3i64..=3, 3),
        rank in 1i64..=4,
    ) {
        for s in shipped_spaces() {
            let top = s.top_degree();
            let ea = random_bundle(&s, rank, &a, &b);
            let eb = random_bundle(&s, rank, &c, &a);
            let sum = ea.direct_sum(&eb);
            prop_assert_eq!(sum.chern(), ea.chern().mul_truncated(&eb.chern(), top));
            prop_assert_eq!(sum.difference(&eb).chern(), ea.chern());
            prop_assert_eq!(sum.difference(&eb).rank(), ea.rank());
        }
    }

    #[test]
    fn exterior_square_matches_pairwise_roots(
        a in prop::collection::vec(-3i64..=3, 3),
        b in prop::collection::vec(-3i64..=3, 3),
        c in prop::collection::vec(-3i64..=3, 3),
    ) {
        for s in shipped_spaces() {
            let top = s.top_degree();
            let (x, y, z) = (linear_class(&s, &a), linear_class(&s, &b), linear_class(&s, &c));
            let e = FormalBundle::split(s.vars(), &[x.clone(), y.clone(), z.clone()], top);
            let pairwise = FormalBundle::split(s.vars(), &[&x + &y, &x + &z, &y + &z], top);
            prop_assert_eq!(e.exterior_square().unwrap().chern(), pairwise.chern());
            let two = FormalBundle::split(s.vars(), &[x.clone(), y.clone()], top);
            prop_assert_eq!(two.exterior_square().unwrap().chern(), FormalBundle::line(&(&x + &y), top).chern());
        }
    }

    #[test]
    fn only_top_degree_integrates(coeffs in prop::collection::vec(-5i64..=5, 3), power in 0u32..=9) {
        for s in shipped_spaces() {
            let cls = linear_class(&s, &coeffs).pow(power);
            if power != s.top_degree() {
                prop_assert!(s.integrate(&cls).is_zero());
            }
        }
    }
}

#[test]
fn spaces_have_one_dimensional_top_slices() {
    for s in shipped_spaces() {
        let d = s.top_degree();
        assert_eq!(s.ring().dimension(d), 1, "{}", s.name());
        assert_eq!(s.ring().dimension(d + 1), 0, "{}", s.name());
        assert_eq!(s.integrate(s.normalization()), Rational::from_integer(1.into()), "{}", s.name());
    }
}

#[test]
fn projective_bundle_of_trivial_bundle_over_a_point() {
    use cgqh_core::exact::VarSet;
    use cgqh_core::intersection::projective_bundle_relation;
    for n in 1..=6u32 {
        let vars = VarSet::new([("m", 1)]);
        let m = MultiPoly::var(&vars, 0);
        let e = FormalBundle::trivial(&vars, i64::from(n), n);
        let s = SpaceModel::new("P(E)", &vars, vec![projective_bundle_relation(&e, &m)], m.pow(n - 1)).unwrap();
        assert_eq!(s.integrate(&m.pow(n - 1)), rat(1));
    }
}
