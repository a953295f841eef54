use linecone::fixtures::{coordinate_points, three_collinear};
use linecone::{
    cross_check, default_grid, monomial_mi, verify_chart_identity, Ideal, Lambda, Monomial, NewtonPolyhedron,
};
use proptest::prelude::*;

fn lam(s: &str) -> Lambda {
    Lambda::parse(s).unwrap()
}

#[test]
fn newton_polyhedron_of_coordinate_points() {
    let gens = [Monomial::new(1, 1, 0), Monomial::new(1, 0, 1), Monomial::new(0, 1, 1)];
    let p = NewtonPolyhedron::new(&gens).unwrap();
    assert!(p.contains([1, 1, 0]));
    assert!(p.contains([1, 1, 1]));
    assert!(!p.contains([1, 0, 0]));
    assert!(NewtonPolyhedron::new(&[]).is_err());
    assert_eq!(monomial_mi(&gens, &lam("3/2")).unwrap(), Ideal::parse(&["x", "y", "z"]));
    assert!(monomial_mi(&gens, &lam("1")).unwrap().is_unit());
}

#[test]
fn principal_monomial_ideal_rounds_down() {
    let x = [Monomial::new(1, 0, 0)];
    assert!(monomial_mi(&x, &lam("1/2")).unwrap().is_unit());
    assert_eq!(monomial_mi(&x, &lam("1")).unwrap(), Ideal::parse(&["x"]));
    assert_eq!(monomial_mi(&x, &lam("5/2")).unwrap(), Ideal::parse(&["x^2"]));
}

#[test]
fn chart_identity_examples() {
    let js = [Ideal::parse(&["x", "y"]), Ideal::parse(&["x^2", "y"])];
    assert!(verify_chart_identity(&js, &[1, 2]).unwrap());
    assert!(verify_chart_identity(&js, &[1]).is_err());
    assert!(verify_chart_identity(&js, &[2, 1]).is_err());
    assert!(verify_chart_identity(&[Ideal::parse(&["z"])], &[1]).is_err());
}

#[test]
fn cross_check_supported_and_not() {
    let r = cross_check(&coordinate_points(), &default_grid()).unwrap();
    assert!(r.all_passed(), "{:?}", r.checks);
    assert!(r.checks.iter().any(|c| c.name.contains("monomial")));
    let r = cross_check(&three_collinear(), &default_grid()).unwrap();
    assert!(r.all_passed(), "{:?}", r.checks);
    let r = cross_check(&linecone::fixtures::three_collinear_plus_one(), &default_grid()).unwrap();
    assert!(!r.all_passed());
    assert_eq!(r.checks.len(), 1);
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (0u16..=3, 0u16..=3, 0u16..=3).prop_map(|(a, b, c)| Monomial::new(a, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn monomial_mi_is_monotone(gens in prop::collection::vec(monomial(), 1..=3), a in 0i64..=20, b in 0i64..=20) {
        prop_assume!(gens.iter().any(|m| m.degree() > 0));
        let (lo, hi) = (a.min(b), a.max(b));
        let j_lo = monomial_mi(&gens, &Lambda::new(linecone::rat(lo, 4)).unwrap()).unwrap();
        let j_hi = monomial_mi(&gens, &Lambda::new(linecone::rat(hi, 4)).unwrap()).unwrap();
        prop_assert!(j_lo.contains_ideal(&j_hi));
        let i = Ideal::monomial(gens.clone());
        prop_assert!(j_hi.contains_ideal(&i.power(((hi + 3) / 4) as u32)));
    }

    #[test]
    fn chart_identity_holds(e1 in 1u32..=3, gap in 1u32..=2, g1 in prop::collection::vec(monomial(), 1..=2), g2 in prop::collection::vec(monomial(), 1..=2)) {
        let strip = |v: Vec<Monomial>| Ideal::monomial(v.into_iter().map(|m| Monomial::new(m.exps()[0], m.exps()[1], 0)));
        let js = [strip(g1), strip(g2)];
        prop_assert!(verify_chart_identity(&js, &[e1, e1 + gap]).unwrap());
    }
}
