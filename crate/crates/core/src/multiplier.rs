//! Closed-form multiplier ideals `J(I^λ)` of the line-arrangement ideal,
//! log canonical thresholds and jumping numbers.
//!
//! Below `λ = 3` the ideal is assembled from powers of `m = (x, y, z)`, the
//! envelope curve `F_d`, the extra points `W` and `I` itself, depending on
//! the case. From `λ = 3` on, Skoda's theorem gives `J(I^λ) = I·J(I^{λ-1})`.

use std::fmt;

use num_traits::{One, Zero};

use crate::arrangement::{ideal_of_points, vanishes_on, PointSet};
use crate::envelope::Classification;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Poly;
use crate::rational::{floor_i64, format_rat, int, parse_rat, Rat};

/// Largest `λ` accepted; each unit above 3 costs one more ideal product.
pub const LAMBDA_CAP: i64 = 10;

/// A non-negative exact rational exponent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lambda(Rat);

impl Lambda {
    pub fn new(value: Rat) -> Result<Self> {
        if value < Rat::zero() {
            return Err(Error::LambdaRange(format!("λ = {} is negative", format_rat(&value))));
        }
        Ok(Lambda(value))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_rat(s)?)
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }

    /// `⌊λ·k⌋`.
    fn floor_times(&self, k: u32) -> i64 {
        floor_i64(&(&self.0 * int(k as i64)))
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rat(&self.0))
    }
}

/// The clause of the closed form that produced an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    A0To2,
    A2To3,
    B0To1,
    B1To2,
    B2To3,
    C0To2,
    C2To3,
    Skoda,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::A0To2 => "A[0,2)",
            Branch::A2To3 => "A[2,3)",
            Branch::B0To1 => "B[0,1)",
            Branch::B1To2 => "B[1,2)",
            Branch::B2To3 => "B[2,3)",
            Branch::C0To2 => "C[0,2)",
            Branch::C2To3 => "C[2,3)",
            Branch::Skoda => "skoda-recursion",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct MultiplierIdealResult {
    pub lambda: Lambda,
    /// Reduced (grevlex) basis already computed.
    pub ideal: Ideal,
    pub branch: Branch,
}

#[derive(Debug, Clone)]
pub struct JumpTable {
    /// Jumping numbers with the ideal from that point on, increasing.
    pub jumps: Vec<(Rat, Ideal)>,
    /// First jump; `None` when the scanned range ends below it.
    pub lct: Option<Rat>,
}

/// `m^k`, the unit ideal for `k <= 0`.
pub fn power_of_m(k: i64) -> Ideal {
    Ideal::maximal_power(k)
}

fn supported(c: &Classification) -> Result<()> {
    match c {
        Classification::Unsupported { reason } => Err(Error::Unsupported(reason.clone())),
        _ => Ok(()),
    }
}

/// Evaluates the closed forms against one arrangement, holding `I` so that
/// repeated evaluations share its Gröbner basis.
pub(crate) struct Evaluator<'a> {
    class: &'a Classification,
    ideal: Ideal,
}

impl<'a> Evaluator<'a> {
    pub(crate) fn new(class: &'a Classification, z: &PointSet) -> Result<Self> {
        supported(class)?;
        Ok(Evaluator { class, ideal: ideal_of_points(z) })
    }

    pub(crate) fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// The clause for `λ < 3`.
    pub(crate) fn closed_form(&self, lambda: &Lambda) -> Result<MultiplierIdealResult> {
        let l = lambda.value();
        if *l >= int(3) {
            return Err(Error::LambdaRange(format!("closed form needs λ < 3, got {lambda}")));
        }
        let two = int(2);
        let i = &self.ideal;
        let (ideal, branch) = match self.class {
            Classification::CaseA { d } => {
                let k = lambda.floor_times(*d) - 2;
                if *l < two {
                    (power_of_m(k), Branch::A0To2)
                } else {
                    (i.truncate(k), Branch::A2To3)
                }
            }
            Classification::CaseB { d, e, f_d } => {
                let (d, e) = (*d as i64, *e as i64);
                let ld = lambda.floor_times(d as u32);
                let le = lambda.floor_times(e as u32);
                if *l < Rat::one() {
                    (power_of_m(ld - 2), Branch::B0To1)
                } else if *l < two {
                    let sum = power_of_m(le - (2 + e - d)).sum(&power_of_m(ld - (2 + d)).scale(f_d));
                    (sum, Branch::B1To2)
                } else {
                    let f2 = f_d * f_d;
                    let sum = power_of_m(le - (2 + e - d))
                        .sum(&power_of_m(le - (2 + 2 * e - d)).scale(f_d))
                        .sum(&power_of_m(ld - (2 + 2 * d)).scale(&f2));
                    (meet(i, &sum), Branch::B2To3)
                }
            }
            Classification::CaseC { d, e, w_ideal, .. } => {
                let (d, e) = (*d as i64, *e as i64);
                let ld = lambda.floor_times(d as u32);
                if *l < two {
                    (power_of_m(ld - 2), Branch::C0To2)
                } else {
                    let le = lambda.floor_times(e as u32);
                    let inner = w_ideal.truncate(ld - 2).sum(&power_of_m(le - 2 * (1 + e - d)));
                    (meet(i, &inner), Branch::C2To3)
                }
            }
            Classification::Unsupported { reason } => return Err(Error::Unsupported(reason.clone())),
        };
        Ok(MultiplierIdealResult { lambda: lambda.clone(), ideal: ideal.reduced(), branch })
    }

    pub(crate) fn evaluate(&self, lambda: &Lambda) -> Result<MultiplierIdealResult> {
        let l = lambda.value();
        if *l > int(LAMBDA_CAP) {
            return Err(Error::LambdaRange(format!("λ = {lambda} exceeds the cap {LAMBDA_CAP}")));
        }
        if *l < int(3) {
            return self.closed_form(lambda);
        }
        let mut steps = 0;
        let mut base = l.clone();
        while base >= int(3) {
            base -= Rat::one();
            steps += 1;
        }
        let mut ideal = self.closed_form(&Lambda(base))?.ideal;
        for _ in 0..steps {
            ideal = self.ideal.product(&ideal).reduced();
        }
        Ok(MultiplierIdealResult { lambda: lambda.clone(), ideal, branch: Branch::Skoda })
    }
}

/// `I ∩ J` for homogeneous `I`, short-cut when `J` is a power of `m`.
fn meet(i: &Ideal, j: &Ideal) -> Ideal {
    if j.is_unit() {
        return i.clone();
    }
    if j.is_monomial() {
        if let Some(k) = pure_power_of_m(j) {
            return i.truncate(k);
        }
    }
    i.intersect(j)
}

fn pure_power_of_m(j: &Ideal) -> Option<i64> {
    let gb = j.groebner();
    let k = gb.first()?.degree()?;
    (gb.len() == crate::monomial::monomials_of_degree(k).len() && gb.iter().all(|g| g.degree() == Some(k)))
        .then_some(k as i64)
}

/// `J(I^λ)` for a supported arrangement.
pub fn multiplier_ideal(c: &Classification, z: &PointSet, lambda: &Lambda) -> Result<MultiplierIdealResult> {
    Evaluator::new(c, z)?.evaluate(lambda)
}

/// The `λ < 3` closed form, without the Skoda recursion.
pub fn closed_form_below_three(c: &Classification, z: &PointSet, lambda: &Lambda) -> Result<MultiplierIdealResult> {
    Evaluator::new(c, z)?.closed_form(lambda)
}

/// Log canonical threshold from the case data.
pub fn lct(c: &Classification) -> Result<Rat> {
    supported(c)?;
    let three = int(3);
    let mut best = int(2);
    let mut consider = |r: Rat| {
        if r < best {
            best = r;
        }
    };
    let d = int(c.d().expect("supported case has d") as i64);
    consider(&three / &d);
    if let Classification::CaseB { e, .. } = c {
        let e = int(*e as i64);
        consider((&three + &e - &d) / &e);
    }
    Ok(best)
}

/// Candidate breakpoints `k/d`, `k/e` and integers in `(0, λ_max]`.
pub fn candidate_lambdas(c: &Classification, lambda_max: &Rat) -> Vec<Rat> {
    let mut denoms = vec![1u32];
    denoms.extend(c.d());
    denoms.extend(c.e());
    let mut out = Vec::new();
    for q in denoms {
        let top = floor_i64(&(lambda_max * int(q as i64)));
        out.extend((1..=top).map(|k| Rat::new(k.into(), (q as i64).into())));
    }
    out.sort();
    out.dedup();
    out
}

/// Scans the candidate breakpoints up to `λ_max` and records where the
/// ideal strictly shrinks.
pub fn jumping_numbers(c: &Classification, z: &PointSet, lambda_max: &Rat) -> Result<JumpTable> {
    if *lambda_max > int(LAMBDA_CAP) {
        return Err(Error::LambdaRange(format!("λ_max exceeds the cap {LAMBDA_CAP}")));
    }
    let eval = Evaluator::new(c, z)?;
    let mut jumps = Vec::new();
    let mut prev = Rat::zero();
    for cand in candidate_lambdas(c, lambda_max) {
        let mid = (&prev + &cand) / int(2);
        let before = eval.evaluate(&Lambda(mid))?.ideal;
        let at = eval.evaluate(&Lambda(cand.clone()))?.ideal;
        if before.contains_ideal(&at) && before != at {
            jumps.push((cand.clone(), at));
        }
        prev = cand;
    }
    let lct = jumps.first().map(|(l, _)| l.clone());
    Ok(JumpTable { jumps, lct })
}

/// Largest `a` with `F^a | G`, and the cofactor.
fn split_off_power(g: &Poly, f: &Poly) -> Result<(Poly, u32)> {
    let mut h = g.clone();
    let mut a = 0;
    while let Some(q) = h.exact_div(f)? {
        h = q;
        a += 1;
    }
    Ok((h, a))
}

/// Decides `G ∈ J(I^λ)` from the orders of vanishing along the exceptional
/// divisors of the resolution, independently of the assembled ideal.
pub fn membership_by_valuation(c: &Classification, z: &PointSet, g: &Poly, lambda: &Lambda) -> Result<bool> {
    if g.is_zero() || !g.is_homogeneous() {
        return Err(Error::Invalid(format!("expected a nonzero homogeneous polynomial, got {g}")));
    }
    if *lambda.value() >= int(3) {
        return Err(Error::LambdaRange(format!("valuation test needs λ < 3, got {lambda}")));
    }
    let deg = |p: &Poly| p.degree().expect("nonzero") as i64;
    let numeric = match c {
        Classification::CaseA { d } => deg(g) >= lambda.floor_times(*d) - 2,
        Classification::CaseB { d, e, f_d } => {
            let (h, a) = split_off_power(g, f_d)?;
            let a = a as i64;
            (0..=(e - d)).all(|j| {
                let dj = d + j;
                deg(&h) + dj as i64 * a >= lambda.floor_times(dj) - (2 + j as i64)
            })
        }
        Classification::CaseC { .. } => return Err(Error::NoCaseCOracle),
        Classification::Unsupported { reason } => return Err(Error::Unsupported(reason.clone())),
    };
    // λ < 3 leaves only the symbolic powers 0 (unit) and 1 (vanishing on Z)
    let k = floor_i64(lambda.value()) - 1;
    Ok(numeric && (k <= 0 || vanishes_on(g, z)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::points_on_conic;
    use crate::envelope::classify;
    use crate::poly::poly;
    use crate::rational::rat;

    fn lam(n: i64, d: i64) -> Lambda {
        Lambda::new(rat(n, d)).unwrap()
    }

    fn coordinate_points() -> PointSet {
        PointSet::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    fn collinear() -> PointSet {
        PointSet::from_ints(&[[1, 0, 0], [0, 1, 0], [1, 1, 0]]).unwrap()
    }

    #[test]
    fn powers_of_m() {
        assert!(power_of_m(-1).is_unit());
        assert!(power_of_m(0).is_unit());
        assert_eq!(power_of_m(2).canonical_strings(), ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]);
    }

    #[test]
    fn rejects_negative_lambda() {
        assert!(matches!(Lambda::new(rat(-1, 2)), Err(Error::LambdaRange(_))));
        assert!(Lambda::parse("0").is_ok());
    }

    #[test]
    fn coordinate_points_threshold() {
        let z = coordinate_points();
        let c = classify(&z).unwrap();
        assert!(multiplier_ideal(&c, &z, &lam(1, 1)).unwrap().ideal.is_unit());
        let r = multiplier_ideal(&c, &z, &lam(3, 2)).unwrap();
        assert_eq!(r.ideal, power_of_m(1));
        assert_eq!(r.branch, Branch::A0To2);
        assert_eq!(lct(&c).unwrap(), rat(3, 2));
        let r = multiplier_ideal(&c, &z, &lam(5, 2)).unwrap();
        assert_eq!(r.branch, Branch::A2To3);
        assert_eq!(r.ideal, ideal_of_points(&z).truncate(3));
    }

    #[test]
    fn collinear_threshold() {
        let z = collinear();
        let c = classify(&z).unwrap();
        assert_eq!(lct(&c).unwrap(), rat(5, 3));
        let at = multiplier_ideal(&c, &z, &lam(5, 3)).unwrap();
        assert_eq!(at.branch, Branch::B1To2);
        assert!(!at.ideal.is_unit());
        assert!(multiplier_ideal(&c, &z, &lam(497, 300)).unwrap().ideal.is_unit());
    }

    #[test]
    fn skoda_step() {
        let z = coordinate_points();
        let c = classify(&z).unwrap();
        let i = ideal_of_points(&z);
        let r = multiplier_ideal(&c, &z, &lam(7, 2)).unwrap();
        assert_eq!(r.branch, Branch::Skoda);
        let below = closed_form_below_three(&c, &z, &lam(5, 2)).unwrap().ideal;
        assert_eq!(r.ideal, i.product(&below));
        assert!(multiplier_ideal(&c, &z, &lam(11, 1)).is_err());
        assert!(closed_form_below_three(&c, &z, &lam(3, 1)).is_err());
    }

    #[test]
    fn unsupported_is_an_error() {
        let c = Classification::Unsupported { reason: "test".into() };
        assert!(matches!(lct(&c), Err(Error::Unsupported(_))));
        assert!(multiplier_ideal(&c, &coordinate_points(), &lam(1, 1)).is_err());
    }

    #[test]
    fn candidates() {
        let c = Classification::CaseB { d: 2, e: 3, f_d: poly("y^2 - x*z") };
        let got: Vec<String> = candidate_lambdas(&c, &int(1)).iter().map(format_rat).collect();
        assert_eq!(got, ["1/3", "1/2", "2/3", "1"]);
    }

    #[test]
    fn jumps_of_coordinate_points() {
        let z = coordinate_points();
        let c = classify(&z).unwrap();
        let t = jumping_numbers(&c, &z, &int(2)).unwrap();
        assert_eq!(t.lct, Some(rat(3, 2)));
        assert_eq!(t.jumps[0].1, power_of_m(1));
        assert!(jumping_numbers(&c, &z, &rat(1, 1)).unwrap().jumps.is_empty());
    }

    #[test]
    fn six_on_conic_jumps() {
        let z = points_on_conic(&[0, 1, -1, 2, -2, 3], false).unwrap();
        let c = classify(&z).unwrap();
        assert_eq!(lct(&c).unwrap(), rat(4, 3));
        let t = jumping_numbers(&c, &z, &int(2)).unwrap();
        assert_eq!(t.lct, Some(rat(4, 3)));
    }

    #[test]
    fn valuation_examples() {
        let z = coordinate_points();
        let c = classify(&z).unwrap();
        assert!(membership_by_valuation(&c, &z, &poly("x"), &lam(3, 2)).unwrap());
        assert!(!membership_by_valuation(&c, &z, &poly("x"), &lam(2, 1)).unwrap());
        let z = collinear();
        let c = classify(&z).unwrap();
        assert!(membership_by_valuation(&c, &z, &poly("z"), &lam(1, 1)).unwrap());
        assert!(membership_by_valuation(&c, &z, &poly("x^2"), &lam(3, 1)).is_err());
        let cc = Classification::CaseC { d: 3, e: 4, w_ideal: Ideal::unit(), zd_ideal: Ideal::unit() };
        assert!(matches!(membership_by_valuation(&cc, &z, &poly("x"), &lam(1, 1)), Err(Error::NoCaseCOracle)));
    }
}
