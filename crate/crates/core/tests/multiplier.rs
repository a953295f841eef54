use linecone::fixtures::{coordinate_points, six_on_conic, three_collinear};
use linecone::{
    candidate_lambdas, classify, closed_form_below_three, ideal_of_points, jumping_numbers, lct, membership_by_valuation,
    multiplier_ideal, poly, power_of_m, rat, Branch, Error, Ideal, Lambda, PointSet, LAMBDA_CAP,
};
use proptest::prelude::*;

fn lam(s: &str) -> Lambda {
    Lambda::parse(s).unwrap()
}

#[test]
fn lambda_parsing() {
    assert_eq!(lam("3/2").to_string(), "3/2");
    assert!(Lambda::parse("-1").is_err());
    assert!(Lambda::parse("one").is_err());
}

#[test]
fn powers_of_m() {
    assert!(power_of_m(-3).is_unit());
    assert!(power_of_m(0).is_unit());
    assert_eq!(power_of_m(1), Ideal::parse(&["x", "y", "z"]));
}

#[test]
fn coordinate_points_at_three_halves() {
    let z = coordinate_points();
    let c = classify(&z).unwrap();
    let r = multiplier_ideal(&c, &z, &lam("3/2")).unwrap();
    assert_eq!(r.ideal, Ideal::parse(&["x", "y", "z"]));
    assert_eq!(r.branch, Branch::A0To2);
    assert_eq!(lct(&c).unwrap(), rat(3, 2));
}

#[test]
fn conic_threshold() {
    let z = six_on_conic();
    let c = classify(&z).unwrap();
    assert_eq!(lct(&c).unwrap(), rat(4, 3));
    assert!(!multiplier_ideal(&c, &z, &lam("4/3")).unwrap().ideal.is_unit());
    assert!(multiplier_ideal(&c, &z, &lam("13/10")).unwrap().ideal.is_unit());
    assert_eq!(multiplier_ideal(&c, &z, &lam("4/3")).unwrap().branch, Branch::B1To2);
}

#[test]
fn collinear_threshold() {
    let c = classify(&three_collinear()).unwrap();
    assert_eq!(lct(&c).unwrap(), rat(5, 3));
}

#[test]
fn jump_table_matches_threshold() {
    let z = six_on_conic();
    let c = classify(&z).unwrap();
    let table = jumping_numbers(&c, &z, &rat(2, 1)).unwrap();
    assert_eq!(table.lct, Some(rat(4, 3)));
    assert_eq!(table.jumps.first().map(|j| j.0.clone()), Some(rat(4, 3)));
    for w in table.jumps.windows(2) {
        assert!(w[0].0 < w[1].0);
        assert!(w[0].1.contains_ideal(&w[1].1));
        assert_ne!(w[0].1, w[1].1);
    }
}

#[test]
fn candidates_are_sorted_and_bounded() {
    let c = classify(&six_on_conic()).unwrap();
    let cands = candidate_lambdas(&c, &rat(3, 1));
    assert!(cands.windows(2).all(|w| w[0] < w[1]));
    assert!(cands.iter().all(|l| *l > rat(0, 1) && *l <= rat(3, 1)));
    assert!(cands.contains(&rat(4, 3)) && cands.contains(&rat(3, 2)) && cands.contains(&rat(2, 1)));
}

#[test]
fn skoda_recursion_above_three() {
    let z = coordinate_points();
    let c = classify(&z).unwrap();
    let r = multiplier_ideal(&c, &z, &lam("7/2")).unwrap();
    assert_eq!(r.branch, Branch::Skoda);
    let below = closed_form_below_three(&c, &z, &lam("5/2")).unwrap().ideal;
    assert_eq!(r.ideal, ideal_of_points(&z).product(&below));
    assert!(closed_form_below_three(&c, &z, &lam("3")).is_err());
    assert!(matches!(
        multiplier_ideal(&c, &z, &Lambda::new(rat(LAMBDA_CAP + 1, 1)).unwrap()),
        Err(Error::LambdaRange(_))
    ));
}

#[test]
fn valuation_membership_examples() {
    let z = six_on_conic();
    let c = classify(&z).unwrap();
    assert!(membership_by_valuation(&c, &z, &poly("y^2 - x*z"), &lam("4/3")).unwrap());
    assert!(membership_by_valuation(&c, &z, &poly("x"), &lam("3/2")).unwrap());
    assert!(!membership_by_valuation(&c, &z, &poly("x"), &lam("5/3")).unwrap());
    assert!(membership_by_valuation(&c, &z, &poly("x"), &lam("1")).unwrap());
    assert!(membership_by_valuation(&c, &z, &poly("x + 1"), &lam("1")).is_err());
    let eight = PointSet::random_general(8, 42).unwrap();
    let c8 = classify(&eight).unwrap();
    assert!(matches!(membership_by_valuation(&c8, &eight, &poly("x"), &lam("1")), Err(Error::NoCaseCOracle)));
}

#[test]
fn unsupported_has_no_multiplier_ideal() {
    let z = linecone::fixtures::three_collinear_plus_one();
    let c = classify(&z).unwrap();
    assert!(multiplier_ideal(&c, &z, &lam("1")).is_err());
    assert!(lct(&c).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn monotone_in_lambda(a in 0i64..=30, b in 0i64..=30) {
        let z = six_on_conic();
        let c = classify(&z).unwrap();
        let (lo, hi) = (a.min(b), a.max(b));
        let j_lo = multiplier_ideal(&c, &z, &Lambda::new(rat(lo, 10)).unwrap()).unwrap().ideal;
        let j_hi = multiplier_ideal(&c, &z, &Lambda::new(rat(hi, 10)).unwrap()).unwrap().ideal;
        prop_assert!(j_lo.contains_ideal(&j_hi));
        if lo * 3 < 40 {
            prop_assert!(j_lo.is_unit());
        }
    }

    #[test]
    fn contains_integral_power(k in 1i64..=25) {
        let z = coordinate_points();
        let c = classify(&z).unwrap();
        let l = rat(k, 10);
        let j = multiplier_ideal(&c, &z, &Lambda::new(l.clone()).unwrap()).unwrap().ideal;
        let ceil = l.ceil().to_integer();
        let p: u32 = ceil.try_into().unwrap();
        prop_assert!(j.contains_ideal(&ideal_of_points(&z).power(p)));
    }
}
