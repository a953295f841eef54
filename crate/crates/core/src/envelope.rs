//! Degree envelopes, geometric generating degrees and the case split.
//!
//! The `d`-envelope `Z_d` of a point set `Z` is the scheme cut out by `I_d`,
//! the degree-`d` forms vanishing on `Z`. The envelopes shrink as `d` grows,
//! starting from the whole plane and ending at `Z`; a degree where the
//! envelope strictly shrinks is a geometric generating degree. Arrangements
//! with one such degree, or two where the intermediate envelope is a smooth
//! curve or a reduced finite set, are the supported cases.

use std::fmt;

use crate::arrangement::{graded_piece, ideal_of_points, PointSet};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::RatMatrix;
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder, Var};
use crate::poly::Poly;
use crate::zerodim::{zero_dim_report, ZeroDimReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnvelopeKind {
    AllOfPlane,
    Curve,
    FiniteScheme,
    EqualsZ,
    /// Components of different dimensions, e.g. a line plus a point.
    Mixed,
}

impl EnvelopeKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EnvelopeKind::AllOfPlane => "all-of-plane",
            EnvelopeKind::Curve => "curve",
            EnvelopeKind::FiniteScheme => "finite-scheme",
            EnvelopeKind::EqualsZ => "equals-Z",
            EnvelopeKind::Mixed => "mixed-dimension",
        }
    }
}

#[derive(Debug, Clone)]
pub struct EnvelopeEntry {
    pub degree: u32,
    /// Saturated ideal of `Z_d`.
    pub ideal: Ideal,
    pub kind: EnvelopeKind,
    /// Present for finite and mixed envelopes.
    pub report: Option<ZeroDimReport>,
}

#[derive(Debug, Clone)]
pub struct EnvelopeReport {
    pub entries: Vec<EnvelopeEntry>,
    pub ggds: Vec<u32>,
    pub generator_degrees: Vec<u32>,
}

#[derive(Debug, Clone)]
pub enum Classification {
    /// A single geometric generating degree.
    CaseA { d: u32 },
    /// Two degrees `d < e` with `Z_d` the smooth curve `F_d = 0`.
    CaseB { d: u32, e: u32, f_d: Poly },
    /// Two degrees `d < e` with `Z_d` finite and reduced; `w_ideal` is the
    /// saturated ideal of the extra points `Z_d \ Z`.
    CaseC { d: u32, e: u32, w_ideal: Ideal, zd_ideal: Ideal },
    Unsupported { reason: String },
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::CaseA { .. } => "CaseA",
            Classification::CaseB { .. } => "CaseB",
            Classification::CaseC { .. } => "CaseC",
            Classification::Unsupported { .. } => "Unsupported",
        }
    }

    pub fn d(&self) -> Option<u32> {
        match self {
            Classification::CaseA { d } | Classification::CaseB { d, .. } | Classification::CaseC { d, .. } => {
                Some(*d)
            }
            Classification::Unsupported { .. } => None,
        }
    }

    pub fn e(&self) -> Option<u32> {
        match self {
            Classification::CaseB { e, .. } | Classification::CaseC { e, .. } => Some(*e),
            _ => None,
        }
    }

    pub fn is_supported(&self) -> bool {
        !matches!(self, Classification::Unsupported { .. })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::CaseA { d } => write!(f, "CaseA{{d={d}}}"),
            Classification::CaseB { d, e, f_d } => write!(f, "CaseB{{d={d}, e={e}, F_d={f_d}}}"),
            Classification::CaseC { d, e, w_ideal, .. } => write!(f, "CaseC{{d={d}, e={e}, I_W={w_ideal}}}"),
            Classification::Unsupported { reason } => write!(f, "Unsupported{{{reason}}}"),
        }
    }
}

/// Saturated ideal of `Z_d`; the zero ideal when no degree-`d` form
/// vanishes on `Z`.
pub fn envelope(z: &PointSet, d: u32) -> Result<Ideal> {
    let piece = graded_piece(z, d);
    if piece.basis.is_empty() {
        return Ok(Ideal::zero());
    }
    Ideal::new(piece.basis).saturate_irrelevant()
}

fn first_nonzero_degree(z: &PointSet) -> u32 {
    (0..).find(|&d| graded_piece(z, d).dim() > 0).expect("a finite set lies on some curve")
}

fn scan_envelopes(z: &PointSet, ideal: &Ideal) -> Result<(Vec<EnvelopeEntry>, Vec<u32>)> {
    let limit = z.len() as u32 + 2;
    let mut entries = Vec::new();
    let mut ggds = Vec::new();
    let mut prev = Ideal::zero();
    for d in first_nonzero_degree(z)..=limit {
        let env = envelope(z, d)?;
        if env != prev {
            ggds.push(d);
        }
        let done = env == *ideal;
        let (kind, report) = describe(&env, done)?;
        entries.push(EnvelopeEntry { degree: d, ideal: env.clone(), kind, report });
        if done {
            return Ok((entries, ggds));
        }
        prev = env;
    }
    Err(Error::NoStabilization(limit))
}

fn describe(env: &Ideal, equals_z: bool) -> Result<(EnvelopeKind, Option<ZeroDimReport>)> {
    if equals_z {
        return Ok((EnvelopeKind::EqualsZ, None));
    }
    if env.is_zero() {
        return Ok((EnvelopeKind::AllOfPlane, None));
    }
    if env.groebner().len() == 1 {
        return Ok((EnvelopeKind::Curve, None));
    }
    let report = zero_dim_report(env)?;
    let kind = if report.is_zero_dimensional { EnvelopeKind::FiniteScheme } else { EnvelopeKind::Mixed };
    Ok((kind, Some(report)))
}

/// Degrees `d` where `Z_d ≠ Z_{d-1}`, scanned until the envelope equals `Z`.
pub fn geometric_generating_degrees(z: &PointSet) -> Result<Vec<u32>> {
    Ok(scan_envelopes(z, &ideal_of_points(z))?.1)
}

/// Degrees of a minimal generating set of the saturated ideal, found by
/// comparing `dim I_d` with `dim S_1 · I_{d-1}`.
pub fn generator_degrees(z: &PointSet) -> Vec<u32> {
    let n = z.len();
    let mut out = Vec::new();
    let mut prev = graded_piece(z, 0);
    let mut d = 1;
    loop {
        let piece = graded_piece(z, d);
        let monos = monomials_of_degree(d);
        let shifted: Vec<Vec<_>> = prev
            .basis
            .iter()
            .flat_map(|b| Var::PLANE.map(|v| b.mul_monomial(&Monomial::var(v))))
            .map(|p| p.coefficients(&monos))
            .collect();
        let span = if shifted.is_empty() { 0 } else { RatMatrix::from_rows(monos.len(), shifted).rank() };
        if piece.dim() > span {
            out.push(d);
        }
        // once the Hilbert function of Z has reached n in degree d-1, the
        // ideal is generated in degrees <= d
        let regular_before = prev.dim() + n == monomials_of_degree(d - 1).len();
        if regular_before {
            return out;
        }
        prev = piece;
        d += 1;
    }
}

/// `F` defines a smooth plane curve iff `F` and its partials have no common
/// projective zero.
pub fn is_smooth_plane_curve(f: &Poly) -> Result<bool> {
    if f.is_zero() || !f.is_homogeneous() || f.degree() == Some(0) {
        return Err(Error::Invalid(format!("expected a homogeneous form of positive degree, got {f}")));
    }
    let mut gens = vec![f.clone()];
    gens.extend(Var::PLANE.map(|v| f.derivative(v)));
    Ok(Ideal::new(gens).saturate_irrelevant()?.is_unit())
}

/// Envelope chain, geometric generating degrees and generator degrees.
pub fn envelope_report(z: &PointSet) -> Result<EnvelopeReport> {
    let ideal = ideal_of_points(z);
    let (entries, ggds) = scan_envelopes(z, &ideal)?;
    Ok(EnvelopeReport { entries, ggds, generator_degrees: generator_degrees(z) })
}

/// Sorts an arrangement into the supported cases.
pub fn classify(z: &PointSet) -> Result<Classification> {
    let ideal = ideal_of_points(z);
    let (entries, ggds) = scan_envelopes(z, &ideal)?;
    classify_from(&ideal, &entries, &ggds)
}

pub(crate) fn classify_from(ideal: &Ideal, entries: &[EnvelopeEntry], ggds: &[u32]) -> Result<Classification> {
    let unsupported = |reason: &str| Ok(Classification::Unsupported { reason: reason.to_string() });
    let (d, e) = match *ggds {
        [d] => return Ok(Classification::CaseA { d }),
        [d, e] => (d, e),
        _ => return unsupported(&format!("{} geometric generating degrees", ggds.len())),
    };
    let entry = entries.iter().find(|en| en.degree == d).expect("envelope of the first degree");
    let zd = &entry.ideal;
    match entry.kind {
        EnvelopeKind::Curve => {
            let f_d = zd.groebner()[0].monic(MonomialOrder::Grevlex);
            if is_smooth_plane_curve(&f_d)? {
                Ok(Classification::CaseB { d, e, f_d })
            } else {
                unsupported("intermediate envelope is a singular curve")
            }
        }
        EnvelopeKind::FiniteScheme => {
            if !entry.report.as_ref().is_some_and(|r| r.is_reduced) {
                return unsupported("intermediate envelope is a non-reduced finite scheme");
            }
            let w_ideal = zd.quotient(ideal).saturate_irrelevant()?;
            Ok(Classification::CaseC { d, e, w_ideal, zd_ideal: zd.clone() })
        }
        _ => unsupported("intermediate envelope has components of different dimensions"),
    }
}
