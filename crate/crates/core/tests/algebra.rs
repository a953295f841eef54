use linecone::groebner::groebner_basis;
use linecone::{
    format_rat, kernel_basis, monomials_of_degree, parse_rat, poly, radical_zero_dim, rat, zero_dim_report, Ideal,
    Monomial, MonomialOrder, PointSet, Poly, RatMatrix, Rat, Var, ZeroDimReport,
};
use proptest::prelude::*;

fn gens(strs: &[&str]) -> Vec<String> {
    Ideal::parse(strs).canonical_strings()
}

#[test]
fn ring_operations() {
    assert_eq!(&poly("x + y") * &poly("x - y"), poly("x^2 - y^2"));
    assert_eq!(poly("x^2*y + x*y^2").exact_div(&poly("x + y")).unwrap(), Some(poly("x*y")));
    assert_eq!(poly("x*y + z^2").exact_div(&poly("x")).unwrap(), None);
    assert!(poly("x").exact_div(&Poly::zero()).is_err());
    assert_eq!(poly("3/2*x").scale(&rat(2, 3)), poly("x"));
}

#[test]
fn monomial_lists() {
    assert_eq!(monomials_of_degree(0), [Monomial::new(0, 0, 0)]);
    let d1: Vec<String> = monomials_of_degree(1).iter().map(|m| m.to_string()).collect();
    assert_eq!(d1, ["x", "y", "z"]);
    for d in 0..=10u32 {
        assert_eq!(monomials_of_degree(d).len() as u32, (d + 1) * (d + 2) / 2);
    }
}

#[test]
fn kernels() {
    assert!(kernel_basis(&RatMatrix::identity(3)).is_empty());
    assert_eq!(kernel_basis(&RatMatrix::zeros(1, 3)).len(), 3);
    let z = PointSet::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
    let m = z.evaluation_matrix(2);
    let k = kernel_basis(&m);
    let forms: Vec<String> = k.iter().map(|v| Poly::from_coefficients(&monomials_of_degree(2), v).to_string()).collect();
    assert_eq!(forms, ["x*y", "x*z", "y*z"]);
}

#[test]
fn groebner_examples() {
    assert_eq!(gens(&["x"]), ["x"]);
    assert_eq!(gens(&["x*y", "x*z", "y*z"]), ["x*y", "x*z", "y*z"]);
    assert_eq!(gens(&["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]).len(), 6);
    assert_eq!(gens(&["x", "x + 1"]), ["1"]);
}

#[test]
fn membership_examples() {
    assert!(Ideal::parse(&["x", "y"]).contains(&poly("x^2 + x*y")));
    assert!(!Ideal::parse(&["x*y", "x*z", "y*z"]).contains(&poly("x^2")));
    assert!(Ideal::unit().contains(&poly("x^7 - 3*y*z + 2")));
}

#[test]
fn sums_products_powers() {
    assert_eq!(Ideal::parse(&["x"]).sum(&Ideal::parse(&["y"])), Ideal::parse(&["x", "y"]));
    assert_eq!(
        Ideal::parse(&["x", "y"]).product(&Ideal::parse(&["x", "z"])),
        Ideal::parse(&["x^2", "x*z", "x*y", "y*z"])
    );
    assert_eq!(Ideal::parse(&["x", "y"]).power(2), Ideal::parse(&["x^2", "x*y", "y^2"]));
    assert!(Ideal::parse(&["x", "y"]).power(0).is_unit());
}

#[test]
fn intersections() {
    assert_eq!(Ideal::parse(&["x"]).intersect(&Ideal::parse(&["y"])), Ideal::parse(&["x*y"]));
    let i = Ideal::parse(&["x^2 + y*z", "x*y"]);
    assert_eq!(i.intersect(&i), i);
    let three = Ideal::intersect_all(&[Ideal::parse(&["x", "y"]), Ideal::parse(&["x", "z"]), Ideal::parse(&["y", "z"])]);
    assert_eq!(three, Ideal::parse(&["x*y", "x*z", "y*z"]));
}

#[test]
fn quotients() {
    assert_eq!(Ideal::parse(&["x*y"]).quotient(&Ideal::parse(&["y"])), Ideal::parse(&["x"]));
    let i = Ideal::parse(&["x^2 - y*z", "x*y*z"]);
    assert_eq!(i.quotient(&Ideal::unit()), i);
    let four = PointSet::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]).unwrap();
    let three = PointSet::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
    let rest = PointSet::from_ints(&[[1, 1, 1]]).unwrap();
    let q = linecone::ideal_of_points(&four).quotient(&linecone::ideal_of_points(&three));
    assert_eq!(q, linecone::ideal_of_points(&rest));
}

#[test]
fn saturations() {
    let m = Ideal::maximal_power(1);
    assert_eq!(Ideal::parse(&["x^2", "x*y", "x*z"]).saturate(&m).unwrap(), Ideal::parse(&["x"]));
    assert!(Ideal::maximal_power(3).saturate(&m).unwrap().is_unit());
    let five = PointSet::random_general(5, 42).unwrap();
    let piece = linecone::graded_piece(&five, 2);
    let sat = Ideal::new(piece.basis.clone()).saturate_irrelevant().unwrap();
    assert_eq!(sat.groebner().len(), 1);
    assert_eq!(sat, Ideal::new(piece.basis));
}

#[test]
fn eliminations() {
    let t = Poly::var(Var::T);
    let gens = vec![&t * &poly("x"), &(&Poly::one() - &t) * &poly("y")];
    assert_eq!(Ideal::new(gens).eliminate(&[Var::T]), Ideal::parse(&["x*y"]));
    assert_eq!(Ideal::parse(&["x - z", "y - z"]).eliminate(&[Var::X]), Ideal::parse(&["y - z"]));
    assert_eq!(Ideal::parse(&["x*y", "x*z", "y*z"]).eliminate(&[Var::Z]), Ideal::parse(&["x*y"]));
}

#[test]
fn zero_dimensional_reports() {
    let r = zero_dim_report(&Ideal::parse(&["x*y", "x*z", "y*z"])).unwrap();
    assert_eq!(r, ZeroDimReport { is_zero_dimensional: true, degree: 3, is_reduced: true });
    let fat = Ideal::parse(&["x", "y"]).power(2);
    let r = zero_dim_report(&fat.saturate_irrelevant().unwrap()).unwrap();
    assert_eq!(r, ZeroDimReport { is_zero_dimensional: true, degree: 3, is_reduced: false });
    let pencil = linecone::envelope(&PointSet::random_general(8, 42).unwrap(), 3).unwrap();
    let r = zero_dim_report(&pencil).unwrap();
    assert_eq!(r, ZeroDimReport { is_zero_dimensional: true, degree: 9, is_reduced: true });
}

#[test]
fn degree_is_additive_over_disjoint_sets() {
    let a = PointSet::from_ints(&[[1, 0, 0], [0, 1, 0], [1, 2, 3]]).unwrap();
    let b = PointSet::from_ints(&[[0, 0, 1], [1, 1, 1]]).unwrap();
    let both = PointSet::from_ints(&[[1, 0, 0], [0, 1, 0], [1, 2, 3], [0, 0, 1], [1, 1, 1]]).unwrap();
    let deg = |z: &PointSet| zero_dim_report(&linecone::ideal_of_points(z)).unwrap().degree;
    assert_eq!(deg(&a) + deg(&b), deg(&both));
    assert_eq!(deg(&both), 5);
}

#[test]
fn radicals() {
    let xy = [Var::X, Var::Y];
    assert_eq!(radical_zero_dim(&Ideal::parse(&["x^2", "y"]), &xy).unwrap(), Ideal::parse(&["x", "y"]));
    let already = Ideal::parse(&["x^2 - x", "y"]);
    assert_eq!(radical_zero_dim(&already, &xy).unwrap(), already);
    assert_eq!(
        radical_zero_dim(&Ideal::parse(&["x^2 - 2*x + 1", "y - x"]), &xy).unwrap(),
        Ideal::parse(&["x - 1", "y - 1"])
    );
}

#[test]
fn ideal_equality() {
    assert_eq!(Ideal::parse(&["x", "y"]), Ideal::parse(&["y", "x + y"]));
    assert_ne!(Ideal::parse(&["x"]), Ideal::parse(&["x^2"]));
    let four = PointSet::random_general(4, 42).unwrap();
    let via_piece = Ideal::new(linecone::graded_piece(&four, 2).basis).saturate_irrelevant().unwrap();
    assert_eq!(via_piece, linecone::ideal_of_points(&four));
}

#[test]
fn rationals_round_trip() {
    for s in ["0", "-2", "3/7", "-12/5"] {
        assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
    }
    assert_eq!(format_rat(&parse_rat("4/6").unwrap()), "2/3");
    assert!(parse_rat("1/0").is_err());
    assert!(parse_rat("x").is_err());
}

fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    (0u16..=3, 0u16..=3, 0u16..=2).prop_map(|(a, b, c)| Monomial::new(a, b, c))
}

fn monomial_ideal() -> impl Strategy<Value = Ideal> {
    prop::collection::vec(monomial_strategy(), 1..=4).prop_map(Ideal::monomial)
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((monomial_strategy(), -3i64..=3), 1..=3)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(m, c)| (m, rat(c, 1)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn groebner_is_idempotent(ps in prop::collection::vec(small_poly(), 1..=3)) {
        let once = groebner_basis(&ps, MonomialOrder::Grevlex);
        let twice = groebner_basis(&once, MonomialOrder::Grevlex);
        prop_assert_eq!(&once, &twice);
        let i = Ideal::new(ps.clone());
        for p in &ps {
            prop_assert!(i.contains(p));
        }
    }

    #[test]
    fn intersection_lattice(i in monomial_ideal(), j in monomial_ideal()) {
        let meet = i.intersect(&j);
        prop_assert!(i.contains_ideal(&meet));
        prop_assert!(j.contains_ideal(&meet));
        prop_assert!(meet.contains_ideal(&i.product(&j)));
        prop_assert!(i.sum(&j).contains_ideal(&meet));
    }

    #[test]
    fn quotient_times_divisor(i in monomial_ideal(), j in monomial_ideal()) {
        let q = i.quotient(&j);
        prop_assert!(i.contains_ideal(&q.product(&j)));
    }

    #[test]
    fn saturation_grows_and_is_idempotent(i in monomial_ideal()) {
        let s = i.saturate_irrelevant().unwrap();
        prop_assert!(s.contains_ideal(&i));
        prop_assert_eq!(&s.saturate_irrelevant().unwrap(), &s);
    }

    #[test]
    fn truncation_is_intersection_with_powers_of_m(i in monomial_ideal(), k in 0i64..=5) {
        prop_assert_eq!(i.truncate(k), i.intersect(&Ideal::maximal_power(k)));
    }

    #[test]
    fn kernel_dimension(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=4)) {
        let m = RatMatrix::from_rows(4, rows.iter().map(|r| r.iter().map(|&c| rat(c, 1)).collect()).collect());
        let k = kernel_basis(&m);
        prop_assert_eq!(m.rank() + k.len(), 4);
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|c| *c == Rat::from_integer(0.into())));
        }
    }

    #[test]
    fn product_degree_adds(p in small_poly(), q in small_poly()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let (p, q) = (leading_form(&p), leading_form(&q));
        prop_assert_eq!((&p * &q).degree().unwrap(), p.degree().unwrap() + q.degree().unwrap());
    }
}

/// Top-degree homogeneous component.
fn leading_form(p: &Poly) -> Poly {
    let d = p.degree().unwrap();
    Poly::from_terms(p.terms().iter().filter(|(m, _)| m.degree() == d).cloned())
}
