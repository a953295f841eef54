//! Polynomial ideals and their calculus.
//!
//! An [`Ideal`] is a generator list plus a lazily computed reduced Gröbner
//! basis. Equality of ideals is equality of reduced bases under the same
//! monomial order.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, Reducer};
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder, Var};
use crate::poly::Poly;

/// Saturation gives up after this many quotient steps.
pub const SATURATION_LIMIT: usize = 50;

#[derive(Clone)]
pub struct Ideal {
    gens: Vec<Poly>,
    order: MonomialOrder,
    gb: OnceLock<Vec<Poly>>,
    reducer: OnceLock<Reducer>,
}

impl Ideal {
    pub fn new(gens: Vec<Poly>) -> Self {
        Self::with_order(gens, MonomialOrder::Grevlex)
    }

    pub fn with_order(gens: Vec<Poly>, order: MonomialOrder) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { gens, order, gb: OnceLock::new(), reducer: OnceLock::new() }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn unit() -> Self {
        Self::new(vec![Poly::one()])
    }

    /// Parses each string as a polynomial; panics on malformed input.
    pub fn parse(gens: &[&str]) -> Self {
        Self::new(gens.iter().map(|s| crate::poly::poly(s)).collect())
    }

    /// The monomial ideal generated by the given monomials.
    pub fn monomial(ms: impl IntoIterator<Item = Monomial>) -> Self {
        Self::new(ms.into_iter().map(Poly::monomial).collect())
    }

    /// `(x, y, z)^k`, the unit ideal for `k <= 0`.
    pub fn maximal_power(k: i64) -> Self {
        if k <= 0 {
            return Self::unit();
        }
        Self::monomial(monomials_of_degree(k as u32))
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Reduced Gröbner basis, computed once.
    pub fn groebner(&self) -> &[Poly] {
        self.gb.get_or_init(|| groebner_basis(&self.gens, self.order))
    }

    /// The same ideal with its reduced basis as generators.
    pub fn reduced(&self) -> Ideal {
        let gb = self.groebner().to_vec();
        let out = Ideal::with_order(gb.clone(), self.order);
        let _ = out.gb.set(gb);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.groebner(), [p] if p.is_constant())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Poly::is_homogeneous)
    }

    /// True when the reduced basis consists of monomials.
    pub fn is_monomial(&self) -> bool {
        self.groebner().iter().all(Poly::is_monomial)
    }

    fn reducer(&self) -> &Reducer {
        self.reducer.get_or_init(|| Reducer::new(self.groebner(), self.order))
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.reducer().reduce(p)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        p.is_zero() || self.reducer().reduces_to_zero(p)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::with_order(gens, self.order)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let gens = self
            .gens
            .iter()
            .flat_map(|f| other.gens.iter().map(move |g| f * g))
            .collect();
        Ideal::with_order(gens, self.order)
    }

    /// `I^k`; `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::with_order(vec![Poly::one()], self.order);
        for _ in 0..k {
            acc = acc.product(self).reduced();
        }
        acc
    }

    /// The ideal generated by `g * I`.
    pub fn scale(&self, g: &Poly) -> Ideal {
        Ideal::with_order(self.gens.iter().map(|f| f * g).collect(), self.order)
    }

    /// `I ∩ J` via `t·I + (1 − t)·J` with `t` eliminated.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        if self.is_zero() || other.is_zero() {
            return Ideal::with_order(Vec::new(), self.order);
        }
        if self.is_unit() {
            return other.reduced_in(self.order);
        }
        if other.is_unit() {
            return self.reduced();
        }
        let t = Poly::var(Var::T);
        let one_minus_t = &Poly::one() - &t;
        let mut gens: Vec<Poly> = self.gens.iter().map(|f| f * &t).collect();
        gens.extend(other.gens.iter().map(|g| g * &one_minus_t));
        Ideal::new(gens).eliminate(&[Var::T]).reduced_in(self.order)
    }

    fn reduced_in(&self, order: MonomialOrder) -> Ideal {
        Ideal::with_order(self.gens.clone(), order).reduced()
    }

    /// Intersection of several ideals; the unit ideal for an empty list.
    pub fn intersect_all<'a>(ideals: impl IntoIterator<Item = &'a Ideal>) -> Ideal {
        ideals
            .into_iter()
            .fold(None, |acc: Option<Ideal>, i| match acc {
                None => Some(i.reduced()),
                Some(a) => Some(a.intersect(i)),
            })
            .unwrap_or_else(Ideal::unit)
    }

    /// `I : (g) = (I ∩ (g)) / g`.
    pub fn quotient_by(&self, g: &Poly) -> Ideal {
        if g.is_zero() {
            return Ideal::with_order(vec![Poly::one()], self.order);
        }
        let meet = self.intersect(&Ideal::with_order(vec![g.clone()], self.order));
        let gens = meet
            .groebner()
            .iter()
            .map(|h| {
                h.exact_div(g)
                    .expect("nonzero divisor")
                    .expect("element of (g) is divisible by g")
            })
            .collect();
        Ideal::with_order(gens, self.order).reduced()
    }

    /// `I : J = ∩_{g ∈ gens(J)} (I : g)`.
    pub fn quotient(&self, other: &Ideal) -> Ideal {
        if other.is_zero() {
            return Ideal::with_order(vec![Poly::one()], self.order);
        }
        let parts: Vec<Ideal> = other.gens.iter().map(|g| self.quotient_by(g)).collect();
        Ideal::intersect_all(&parts)
    }

    /// `I : J^∞`, iterating quotients until the ideal stops growing.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        let mut current = self.reduced();
        for _ in 0..SATURATION_LIMIT {
            let next = current.quotient(other);
            if next == current {
                return Ok(current);
            }
            current = next;
        }
        Err(Error::SaturationLimit(SATURATION_LIMIT))
    }

    /// `I : (x, y, z)^∞`.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        self.saturate(&Ideal::maximal_power(1))
    }

    /// `I ∩ k[remaining variables]`, returned under grevlex.
    pub fn eliminate(&self, vars: &[Var]) -> Ideal {
        let order = MonomialOrder::eliminating(vars);
        let gb = groebner_basis(&self.gens, order);
        let kept = gb
            .into_iter()
            .filter(|p| vars.iter().all(|&v| !p.uses_var(v)))
            .collect();
        Ideal::new(kept)
    }

    /// `I ∩ (x, y, z)^k` for a homogeneous ideal: every generator of degree
    /// below `k` is multiplied up to degree `k`.
    pub fn truncate(&self, k: i64) -> Ideal {
        let mut gens = Vec::new();
        for g in &self.gens {
            let deg = g.degree().unwrap_or(0) as i64;
            if deg >= k {
                gens.push(g.clone());
            } else {
                for m in monomials_of_degree((k - deg) as u32) {
                    gens.push(g.mul_monomial(&m));
                }
            }
        }
        Ideal::with_order(gens, self.order)
    }

    /// Substitutes a constant for one variable in every generator.
    pub fn substitute(&self, v: Var, value: &crate::rational::Rat) -> Ideal {
        Ideal::with_order(self.gens.iter().map(|g| g.substitute(v, value)).collect(), self.order)
    }

    /// Sorted canonical strings of the reduced basis.
    pub fn canonical_strings(&self) -> Vec<String> {
        self.groebner().iter().map(|p| p.to_string()).collect()
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Ideal) -> bool {
        if self.order == other.order {
            self.groebner() == other.groebner()
        } else {
            self.groebner() == other.reduced_in(self.order).groebner()
        }
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({})", self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.canonical_strings().join(", "))
    }
}
