//! Point sets in the projective plane, i.e. line arrangements through the
//! origin of affine 3-space, and the ideals they define.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::{kernel_basis, RatMatrix};
use crate::monomial::monomials_of_degree;
use crate::poly::Poly;
use crate::rational::{format_rat, int, parse_rat, Rat};

/// A point of the projective plane, scaled so its first nonzero coordinate
/// is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointP2 {
    coords: [Rat; 3],
}

impl PointP2 {
    pub fn new(coords: [Rat; 3]) -> Result<Self> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or_else(|| Error::Invalid("the zero vector is not a projective point".into()))?;
        let inv = lead.recip();
        Ok(PointP2 { coords: coords.map(|c| c * &inv) })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new([int(a), int(b), int(c)])
    }

    pub fn coords(&self) -> &[Rat; 3] {
        &self.coords
    }

    /// The two linear forms cutting out the point: the reduced echelon basis
    /// of the kernel of the 1×3 evaluation matrix.
    pub fn linear_forms(&self) -> [Poly; 2] {
        let m = RatMatrix::from_rows(3, vec![self.coords.to_vec()]);
        let k = kernel_basis(&m);
        debug_assert_eq!(k.len(), 2);
        let form = |v: &Vec<Rat>| Poly::linear(&[v[0].clone(), v[1].clone(), v[2].clone()]);
        [form(&k[0]), form(&k[1])]
    }

    /// The prime ideal of the point (equivalently of the line through the
    /// origin in that direction).
    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.linear_forms().to_vec())
    }

    pub fn to_strings(&self) -> [String; 3] {
        [0, 1, 2].map(|i| format_rat(&self.coords[i]))
    }
}

impl fmt::Display for PointP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.to_strings();
        write!(f, "[{a}:{b}:{c}]")
    }
}

/// A nonempty set of distinct points of the projective plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<PointP2>,
}

/// Coordinate bound for seeded random points.
pub const RANDOM_COORD_BOUND: i64 = 50;
/// Resampling budget when a random draw fails the generality checks.
pub const RANDOM_RETRIES: usize = 20;

impl PointSet {
    pub fn new(points: Vec<PointP2>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Invalid("a point set needs at least one point".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if let Some(j) = points[..i].iter().position(|q| q == p) {
                return Err(Error::Invalid(format!("points {j} and {i} coincide at {p}")));
            }
        }
        Ok(PointSet { points })
    }

    pub fn from_ints(pts: &[[i64; 3]]) -> Result<Self> {
        Self::new(pts.iter().map(|&[a, b, c]| PointP2::from_ints(a, b, c)).collect::<Result<_>>()?)
    }

    /// Parses coordinate strings such as `"3/7"` or `"-2"`.
    pub fn parse<S: AsRef<str>>(pts: &[[S; 3]]) -> Result<Self> {
        let mut out = Vec::with_capacity(pts.len());
        for (i, p) in pts.iter().enumerate() {
            let mut c = Vec::with_capacity(3);
            for (j, s) in p.iter().enumerate() {
                c.push(parse_rat(s.as_ref()).map_err(|e| Error::Parse(format!("point {i}, coordinate {j}: {e}")))?);
            }
            let coords: [Rat; 3] = c.try_into().expect("three coordinates");
            out.push(PointP2::new(coords).map_err(|e| Error::Invalid(format!("point {i}: {e}")))?);
        }
        Self::new(out)
    }

    pub fn points(&self) -> &[PointP2] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of `n` points in general position, sampled with integer
    /// coordinates in `[-50, 50]` from a seeded generator.
    ///
    /// Each draw is checked: the Hilbert function must be maximal
    /// (`dim I_t = max(0, C(t+2,2) - n)`) up to one past the least degree of
    /// a curve through the points, and no three points may be collinear.
    /// Failing draws are resampled up to 20 times.
    pub fn random_general(n: usize, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("need at least one point".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..=RANDOM_RETRIES {
            let pts: Vec<[i64; 3]> = (0..n)
                .map(|_| {
                    [0; 3].map(|_| rng.gen_range(-RANDOM_COORD_BOUND..=RANDOM_COORD_BOUND))
                })
                .collect();
            let Ok(set) = Self::from_ints(&pts) else { continue };
            if set.is_general() {
                return Ok(set);
            }
        }
        Err(Error::Invalid(format!("no general set of {n} points after {RANDOM_RETRIES} retries")))
    }

    /// The rank conditions used by [`PointSet::random_general`].
    pub fn is_general(&self) -> bool {
        let n = self.len();
        let d = least_curve_degree(n);
        let hilbert_ok = (0..=d + 1).all(|t| {
            let expected = binom2(t as usize + 2).saturating_sub(n);
            graded_piece(self, t).basis.len() == expected
        });
        hilbert_ok && !self.has_three_collinear()
    }

    pub fn has_three_collinear(&self) -> bool {
        let p = &self.points;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                for k in j + 1..p.len() {
                    if det3(p[i].coords(), p[j].coords(), p[k].coords()).is_zero() {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Evaluation matrix: one row per point, one column per degree-`d`
    /// monomial in grevlex order.
    pub fn evaluation_matrix(&self, d: u32) -> RatMatrix {
        let monos = monomials_of_degree(d);
        let rows = self
            .points
            .iter()
            .map(|p| monos.iter().map(|m| Poly::monomial(*m).eval(p.coords())).collect())
            .collect();
        RatMatrix::from_rows(monos.len(), rows)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", s.join(", "))
    }
}

fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Least `d` with `C(d+2, 2) > n`, the least degree of a curve through `n`
/// general points.
pub fn least_curve_degree(n: usize) -> u32 {
    let mut d = 0;
    while binom2(d as usize + 2) <= n {
        d += 1;
    }
    d
}

fn det3(a: &[Rat; 3], b: &[Rat; 3], c: &[Rat; 3]) -> Rat {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

/// The forms of degree `d` vanishing on a point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPiece {
    pub degree: u32,
    /// Echelon basis against the grevlex monomial list of degree `d`.
    pub basis: Vec<Poly>,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `I_d`: the kernel of the evaluation map on degree-`d` forms.
pub fn graded_piece(z: &PointSet, d: u32) -> GradedPiece {
    let monos = monomials_of_degree(d);
    let basis = kernel_basis(&z.evaluation_matrix(d))
        .iter()
        .map(|v| Poly::from_coefficients(&monos, v))
        .collect();
    GradedPiece { degree: d, basis }
}

/// Saturated homogeneous ideal of the points: the intersection of their
/// prime ideals.
pub fn ideal_of_points(z: &PointSet) -> Ideal {
    let primes: Vec<Ideal> = z.points.iter().map(PointP2::ideal).collect();
    Ideal::intersect_all(&primes)
}

/// `I^⟨k⟩ = ∩_p P_p^k`; the unit ideal for `k = 0`.
pub fn symbolic_power(z: &PointSet, k: u32) -> Ideal {
    if k == 0 {
        return Ideal::unit();
    }
    let powers: Vec<Ideal> = z.points.iter().map(|p| p.ideal().power(k)).collect();
    Ideal::intersect_all(&powers)
}

/// A degree-`d` homogeneous form through the points is the same thing as a
/// vector in the kernel; used as a spot check on arbitrary forms.
pub fn vanishes_on(f: &Poly, z: &PointSet) -> bool {
    z.points.iter().all(|p| f.eval(p.coords()).is_zero())
}

/// Integer points `[1 : t : t^2]` on the smooth conic `y^2 = x z`, plus the
/// point at infinity `[0:0:1]` when `with_infinity` is set.
pub fn points_on_conic(params: &[i64], with_infinity: bool) -> Result<PointSet> {
    let mut pts: Vec<[i64; 3]> = params.iter().map(|&t| [1, t, t * t]).collect();
    if with_infinity {
        pts.push([0, 0, 1]);
    }
    PointSet::from_ints(&pts)
}
