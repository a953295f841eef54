//! Independent checks on the closed forms: Howald's Newton-polyhedron
//! description of monomial multiplier ideals, the chart identity behind the
//! blow-up computation, and a batch verifier that runs whatever applies to a
//! given arrangement.

use num_integer::Integer;

use crate::arrangement::PointSet;
use crate::envelope::{classify, Classification};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::{monomials_of_degree, Monomial, Var};
use crate::multiplier::{membership_by_valuation, Evaluator, Lambda};
use crate::poly::Poly;
use crate::rational::{ceil_i64, floor_i64, int, Rat};

/// `conv(points) + R_{≥0}^3`, described by its supporting inequalities
/// `normal · v ≥ offset`.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    pub exponent_points: Vec<[i64; 3]>,
    pub facet_inequalities: Vec<([i64; 3], i64)>,
}

fn cross(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: [i64; 3], b: [i64; 3]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Orients `n` into the closed positive orthant and makes it primitive;
/// `None` when that is impossible or `n = 0`.
fn normalize(n: [i64; 3]) -> Option<[i64; 3]> {
    let n = if n.iter().any(|&c| c < 0) { n.map(|c| -c) } else { n };
    if n.iter().any(|&c| c < 0) || n == [0, 0, 0] {
        return None;
    }
    let g = n.iter().fold(0i64, |g, &c| g.gcd(&c));
    Some(n.map(|c| c / g))
}

impl NewtonPolyhedron {
    /// Enumerates planes spanned by triples drawn from the points and the
    /// three axis directions, keeping those that bound every point.
    pub fn new(gens: &[Monomial]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Invalid("Newton polyhedron of an empty generator list".into()));
        }
        let mut points: Vec<[i64; 3]> = gens.iter().map(|m| [0, 1, 2].map(|i| m.0[i] as i64)).collect();
        points.sort();
        points.dedup();
        let axes = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        let mut normals: Vec<([i64; 3], [i64; 3])> = Vec::new();
        for (i, &p) in points.iter().enumerate() {
            for (j, &q) in points.iter().enumerate().skip(i + 1) {
                for &r in &points[j + 1..] {
                    normals.push((cross(sub(q, p), sub(r, p)), p));
                }
                for e in axes {
                    normals.push((cross(sub(q, p), e), p));
                }
            }
            for (a, &e) in axes.iter().enumerate() {
                for &f in &axes[a + 1..] {
                    normals.push((cross(e, f), p));
                }
            }
        }
        let mut facets: Vec<([i64; 3], i64)> = Vec::new();
        for (n, p) in normals {
            let Some(n) = normalize(n) else { continue };
            let offset = dot(n, p);
            if points.iter().all(|&v| dot(n, v) >= offset) && !facets.contains(&(n, offset)) {
                facets.push((n, offset));
            }
        }
        facets.sort();
        Ok(NewtonPolyhedron { exponent_points: points, facet_inequalities: facets })
    }

    pub fn contains(&self, v: [i64; 3]) -> bool {
        self.facet_inequalities.iter().all(|&(n, c)| dot(n, v) >= c)
    }

    /// `v` lies in the interior of `λ·P`.
    pub fn interior_of_scaled(&self, v: [i64; 3], lambda: &Rat) -> bool {
        self.facet_inequalities.iter().all(|&(n, c)| int(dot(n, v)) > lambda * int(c))
    }
}

/// Multiplier ideal of a monomial ideal: `x^v` with `v + (1,1,1)` in the
/// interior of `λ` times the Newton polyhedron.
pub fn monomial_mi(gens: &[Monomial], lambda: &Lambda) -> Result<Ideal> {
    let poly = NewtonPolyhedron::new(gens)?;
    let max = poly.exponent_points.iter().flatten().copied().max().unwrap_or(0);
    let bound = floor_i64(&(lambda.value() * int(max))) + 3;
    let mut found: Vec<Monomial> = Vec::new();
    for total in 0..=3 * bound {
        for m in monomials_of_degree(total as u32) {
            let v = [0, 1, 2].map(|i| m.0[i] as i64);
            if v.iter().any(|&c| c > bound) || found.iter().any(|f| f.divides(&m)) {
                continue;
            }
            if poly.interior_of_scaled(v.map(|c| c + 1), lambda.value()) {
                found.push(m);
            }
        }
    }
    Ok(Ideal::monomial(found).reduced())
}

/// Checks `Σ z^{a_k} J_k = z^{a_1}·(∩_{k<p} (J_1 + … + J_k + (z^{a_{k+1} − a_1})) ∩ (J_1 + … + J_p))`
/// for ideals `J_k` in `x, y`, with `z` as the extra variable.
pub fn verify_chart_identity(js: &[Ideal], a: &[u32]) -> Result<bool> {
    if js.is_empty() || js.len() != a.len() {
        return Err(Error::Invalid("need as many exponents as ideals, at least one".into()));
    }
    if a.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Invalid("exponents must be strictly increasing".into()));
    }
    if js.iter().any(|j| j.generators().iter().any(|g| g.uses_var(Var::Z) || g.uses_var(Var::T))) {
        return Err(Error::Invalid("ideals must live in x, y".into()));
    }
    let zpow = |k: u32| Poly::monomial(Monomial::new(0, 0, k as u16));
    let left = js
        .iter()
        .zip(a)
        .fold(Ideal::zero(), |acc, (j, &ak)| acc.sum(&j.scale(&zpow(ak))));
    let mut partial = Ideal::zero();
    let mut parts = Vec::new();
    for (k, j) in js.iter().enumerate() {
        partial = partial.sum(j);
        match a.get(k + 1) {
            Some(next) => parts.push(partial.sum(&Ideal::new(vec![zpow(next - a[0])]))),
            None => parts.push(partial.clone()),
        }
    }
    let right = Ideal::intersect_all(&parts).scale(&zpow(a[0]));
    Ok(left == right)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// A counterexample or explanation when the check failed.
    pub witness: Option<String>,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, witness: Option<String>) -> Self {
        CheckOutcome { name: name.into(), passed: witness.is_none(), witness }
    }
}

#[derive(Debug, Clone)]
pub struct CrossCheckReport {
    pub classification: Classification,
    pub checks: Vec<CheckOutcome>,
}

impl CrossCheckReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Degree bound for the valuation comparison.
pub const VALUATION_TEST_DEGREE: u32 = 8;

/// Test polynomials `monomial · F^a` of total degree at most
/// [`VALUATION_TEST_DEGREE`], `a ≤ 3` (`a = 0` only outside Case B).
pub fn valuation_test_polys(c: &Classification) -> Vec<Poly> {
    let f = match c {
        Classification::CaseB { f_d, .. } => Some(f_d),
        _ => None,
    };
    let mut out = Vec::new();
    for a in 0..=3u32 {
        let fa = match (f, a) {
            (_, 0) => Poly::one(),
            (Some(f), _) => f.pow(a),
            (None, _) => break,
        };
        let fdeg = fa.degree().unwrap_or(0);
        if fdeg > VALUATION_TEST_DEGREE {
            break;
        }
        for deg in 0..=VALUATION_TEST_DEGREE - fdeg {
            out.extend(monomials_of_degree(deg).iter().map(|m| fa.mul_monomial(m)));
        }
    }
    out
}

/// Runs every applicable oracle over the λ grid.
pub fn cross_check(z: &PointSet, grid: &[Lambda]) -> Result<CrossCheckReport> {
    let class = classify(z)?;
    if let Classification::Unsupported { reason } = &class {
        let checks = vec![CheckOutcome::new("classification unsupported", Some(reason.clone()))];
        return Ok(CrossCheckReport { classification: class, checks });
    }
    let eval = Evaluator::new(&class, z)?;
    let mut grid = grid.to_vec();
    grid.sort();
    grid.dedup();
    let mut ideals = Vec::new();
    for l in &grid {
        ideals.push(eval.evaluate(l)?.ideal);
    }
    let mut checks = Vec::new();
    let i = eval.ideal();

    if i.groebner().iter().all(Poly::is_monomial) {
        let gens: Vec<Monomial> = i.groebner().iter().map(|g| g.terms()[0].0).collect();
        for (l, j) in grid.iter().zip(&ideals) {
            let expected = monomial_mi(&gens, l)?;
            let witness = (expected != *j).then(|| format!("closed form {j}, Newton polyhedron {expected}"));
            checks.push(CheckOutcome::new(format!("monomial oracle at λ={l}"), witness));
        }
    }

    if !matches!(class, Classification::CaseC { .. }) {
        let tests = valuation_test_polys(&class);
        for (l, j) in grid.iter().zip(&ideals) {
            if *l.value() >= int(3) {
                continue;
            }
            let mut witness = None;
            for g in &tests {
                let by_valuation = membership_by_valuation(&class, z, g, l)?;
                if by_valuation != j.contains(g) {
                    witness = Some(format!("{g}: valuation says {by_valuation}"));
                    break;
                }
            }
            checks.push(CheckOutcome::new(format!("valuation oracle at λ={l}"), witness));
        }
    }

    for (w, pair) in ideals.windows(2).enumerate() {
        let witness = (!pair[0].contains_ideal(&pair[1]))
            .then(|| format!("J at λ={} not contained in J at λ={}", grid[w + 1], grid[w]));
        checks.push(CheckOutcome::new(format!("monotone on [{}, {}]", grid[w], grid[w + 1]), witness));
    }

    for (l, j) in grid.iter().zip(&ideals) {
        let k = ceil_i64(l.value()).max(0) as u32;
        let witness = (!j.contains_ideal(&i.power(k))).then(|| format!("I^{k} not in {j}"));
        checks.push(CheckOutcome::new(format!("I^ceil(λ) ⊆ J at λ={l}"), witness));
    }

    Ok(CrossCheckReport { classification: class, checks })
}

/// Grid used by `verify` when none is given.
pub fn default_grid() -> Vec<Lambda> {
    ["1/2", "1", "3/2", "2", "5/2"].iter().map(|s| Lambda::parse(s).expect("valid literal")).collect()
}
