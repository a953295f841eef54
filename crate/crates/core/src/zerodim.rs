//! Finite projective schemes in the plane: Hilbert function, degree and
//! reducedness.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder, Var};
use crate::poly::Poly;
use crate::rational::{int, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDimReport {
    pub is_zero_dimensional: bool,
    /// Length of the scheme; 0 when it is not zero-dimensional.
    pub degree: u64,
    pub is_reduced: bool,
}

/// Minimal generators of the grevlex lead-term ideal.
fn lead_monomials(i: &Ideal) -> Vec<Monomial> {
    let mut leads: Vec<Monomial> = i
        .groebner()
        .iter()
        .filter_map(|p| p.lead(MonomialOrder::Grevlex).map(|(m, _)| *m))
        .collect();
    leads.sort_by_key(|m| m.degree());
    let mut minimal: Vec<Monomial> = Vec::new();
    for m in leads {
        if !minimal.iter().any(|n| n.divides(&m)) {
            minimal.push(m);
        }
    }
    minimal
}

/// `dim_k (S/I)_t`, counted as standard monomials of the lead-term ideal.
pub fn hilbert_function(i: &Ideal, t: u32) -> u64 {
    hilbert_from_leads(&lead_monomials(i), t)
}

fn hilbert_from_leads(leads: &[Monomial], t: u32) -> u64 {
    monomials_of_degree(t)
        .iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .count() as u64
}

/// Dimension, degree and reducedness of the projective scheme cut out by a
/// saturated homogeneous ideal in `x, y, z`.
pub fn zero_dim_report(i: &Ideal) -> Result<ZeroDimReport> {
    if i.is_zero() || i.is_unit() || !i.is_homogeneous() {
        return Err(Error::Invalid("expected a proper nonzero homogeneous ideal".into()));
    }
    let leads = lead_monomials(i);
    // past this degree the Hilbert function of a monomial ideal is polynomial
    let t0: u32 = leads.iter().map(|m| m.degree()).sum::<u32>().max(1);
    let h = [t0, t0 + 1, t0 + 2].map(|t| hilbert_from_leads(&leads, t));
    if h[0] != h[1] || h[1] != h[2] {
        return Ok(ZeroDimReport { is_zero_dimensional: false, degree: 0, is_reduced: false });
    }
    let mut reduced = true;
    for v in Var::PLANE {
        let chart = i.substitute(v, &int(1));
        if chart.is_unit() {
            continue;
        }
        let others: Vec<Var> = Var::PLANE.into_iter().filter(|&w| w != v).collect();
        let rad = radical_zero_dim(&chart, &others)?;
        if rad != chart {
            reduced = false;
            break;
        }
    }
    Ok(ZeroDimReport { is_zero_dimensional: true, degree: h[0], is_reduced: reduced })
}

/// Radical of a zero-dimensional affine ideal in the variables `vars`
/// (Seidenberg): add the squarefree part of the minimal univariate
/// polynomial in each variable.
pub fn radical_zero_dim(i: &Ideal, vars: &[Var]) -> Result<Ideal> {
    let mut extra = Vec::new();
    for &v in vars {
        let f = minimal_polynomial(i, v, vars)?;
        let g = squarefree_part(&f, v);
        // f already lies in i, so only a proper squarefree part adds anything
        if g != f {
            extra.push(g);
        }
    }
    if extra.is_empty() {
        return Ok(i.reduced());
    }
    Ok(i.sum(&Ideal::with_order(extra, i.order())).reduced())
}

/// Monic generator of `i ∩ k[v]`, found as the first linear dependency among
/// the normal forms of `1, v, v^2, ...`.
fn minimal_polynomial(i: &Ideal, v: Var, vars: &[Var]) -> Result<Poly> {
    let order = i.order();
    let leads: Vec<Monomial> = i.groebner().iter().filter_map(|p| p.lead(order).map(|(m, _)| *m)).collect();
    let finite = vars.iter().all(|&w| leads.iter().any(|m| m.degree() == m.exp(w) as u32));
    let extraneous = i.groebner().iter().any(|p| p.terms().iter().any(|(m, _)| {
        Var::ALL.iter().any(|w| !vars.contains(w) && m.exp(*w) > 0)
    }));
    if !finite || extraneous {
        return Err(Error::NotZeroDimensional(format!("no univariate polynomial in {}", v.name())));
    }
    // echelon rows: (pivot monomial, reduced normal form, combination of
    // powers of v it equals)
    let mut rows: Vec<(Monomial, Poly, Vec<Rat>)> = Vec::new();
    let mut power = Poly::one();
    for k in 0.. {
        let mut vec = i.normal_form(&power);
        let mut comb = vec![Rat::zero(); k + 1];
        comb[k] = Rat::one();
        for (pivot, row, row_comb) in &rows {
            let c = vec.terms().iter().find(|(m, _)| m == pivot).map(|(_, c)| c.clone());
            if let Some(c) = c {
                vec = &vec - &row.scale(&c);
                for (a, b) in comb.iter_mut().zip(row_comb) {
                    *a -= &c * b;
                }
            }
        }
        if vec.is_zero() {
            let terms = comb.into_iter().enumerate().map(|(j, c)| {
                let mut e = [0u16; 4];
                e[v.index()] = j as u16;
                (Monomial(e), c)
            });
            return Ok(Poly::from_terms(terms).monic(MonomialOrder::Grevlex));
        }
        let (pivot, lc) = vec.terms()[0].clone();
        let inv = lc.recip();
        let vec = vec.scale(&inv);
        let comb = comb.iter().map(|c| c * &inv).collect();
        // keep earlier rows free of the new pivot
        for (_, row, row_comb) in rows.iter_mut() {
            let c = row.terms().iter().find(|(m, _)| *m == pivot).map(|(_, c)| c.clone());
            if let Some(c) = c {
                *row = &*row - &vec.scale(&c);
                row_comb.resize(k + 1, Rat::zero());
                for (a, b) in row_comb.iter_mut().zip(&comb) {
                    *a -= &c * b;
                }
            }
        }
        rows.push((pivot, vec, comb));
        power = &power * &Poly::var(v);
    }
    unreachable!("the loop only exits through a dependency")
}

/// Dense integer coefficients of a univariate `p`, constant term first,
/// scaled to be primitive.
fn to_dense(p: &Poly, v: Var) -> Vec<BigInt> {
    let deg = p.terms().iter().map(|(m, _)| m.exp(v) as usize).max().unwrap_or(0);
    let denom = p.terms().iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut out = vec![BigInt::zero(); deg + 1];
    for (m, c) in p.terms() {
        out[m.exp(v) as usize] = c.numer() * (&denom / c.denom());
    }
    primitive(out)
}

fn primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    let g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &g;
        }
    }
    p
}

fn from_dense(c: &[BigInt], v: Var) -> Poly {
    Poly::from_terms(c.iter().enumerate().map(|(k, a)| {
        let mut e = [0u16; 4];
        e[v.index()] = k as u16;
        (Monomial(e), Rat::from_integer(a.clone()))
    }))
}

/// Pseudo-remainder of `a` by `b`, made primitive.
fn dense_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (k, c) in b.iter().enumerate() {
            r[shift + k] -= &lr * c;
        }
        r = primitive(r);
    }
    r
}

/// Primitive gcd over the integers (primitive remainder sequence).
fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = (primitive(a.to_vec()), primitive(b.to_vec()));
    while !b.is_empty() {
        let r = dense_prem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// `f / gcd(f, f')` for a univariate `f` in `v`.
fn squarefree_part(f: &Poly, v: Var) -> Poly {
    let dense = to_dense(f, v);
    let g = dense_gcd(&dense, &to_dense(&f.derivative(v), v));
    let g = from_dense(&g, v);
    if g.is_constant() {
        return f.clone();
    }
    f.exact_div(&g)
        .expect("gcd is nonzero")
        .expect("gcd divides f")
        .monic(crate::monomial::MonomialOrder::Grevlex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    #[test]
    fn seidenberg_radicals() {
        let xy = [Var::X, Var::Y];
        assert_eq!(radical_zero_dim(&Ideal::parse(&["x^2", "y"]), &xy).unwrap(), Ideal::parse(&["x", "y"]));
        let already = Ideal::parse(&["x^2 - x", "y"]);
        assert_eq!(radical_zero_dim(&already, &xy).unwrap(), already);
        assert_eq!(
            radical_zero_dim(&Ideal::parse(&["x^2 - 2*x + 1", "y - x"]), &xy).unwrap(),
            Ideal::parse(&["x - 1", "y - 1"])
        );
        assert!(matches!(
            radical_zero_dim(&Ideal::parse(&["x^2"]), &xy),
            Err(Error::NotZeroDimensional(_))
        ));
    }

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_part(&poly("x^3 - x^2"), Var::X), poly("x^2 - x"));
        assert_eq!(squarefree_part(&poly("z^4"), Var::Z), poly("z"));
    }

    #[test]
    fn coordinate_points() {
        let r = zero_dim_report(&Ideal::parse(&["x*y", "x*z", "y*z"])).unwrap();
        assert_eq!(r, ZeroDimReport { is_zero_dimensional: true, degree: 3, is_reduced: true });
    }

    #[test]
    fn fat_point() {
        // (x, y)^2 is saturated; S/(x,y)^2 has Hilbert function 1, 3, 3, ...
        let fat = Ideal::parse(&["x", "y"]).power(2);
        assert_eq!(fat.saturate_irrelevant().unwrap(), fat);
        let r = zero_dim_report(&fat).unwrap();
        assert_eq!(r, ZeroDimReport { is_zero_dimensional: true, degree: 3, is_reduced: false });
    }

    #[test]
    fn curve_is_not_zero_dimensional() {
        let r = zero_dim_report(&Ideal::parse(&["x^2 + y^2 + z^2"])).unwrap();
        assert!(!r.is_zero_dimensional);
        assert_eq!(r.degree, 0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(zero_dim_report(&Ideal::unit()).is_err());
        assert!(zero_dim_report(&Ideal::zero()).is_err());
        assert!(zero_dim_report(&Ideal::parse(&["x - 1"])).is_err());
    }

    #[test]
    fn hilbert_values() {
        let i = Ideal::parse(&["x*y", "x*z", "y*z"]);
        assert_eq!((0..5).map(|t| hilbert_function(&i, t)).collect::<Vec<_>>(), [1, 3, 3, 3, 3]);
    }
}
