//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::monomial::{Monomial, MonomialOrder, Var, NVARS};
use crate::rational::{format_rat, parse_rat, Rat};

/// A polynomial in `x, y, z` (and possibly the auxiliary `t`).
///
/// Terms are kept sorted descending in grevlex with no zero coefficients, so
/// structural equality is polynomial equality and printing is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rat)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rat::one())
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v))
    }

    /// Collects arbitrary terms, combining like monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(terms: I) -> Self {
        let mut acc: HashMap<Monomial, Rat> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rat::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&b.0, &a.0));
        Poly { terms }
    }

    /// Linear form `a x + b y + c z`.
    pub fn linear(coeffs: &[Rat; 3]) -> Self {
        Self::from_terms(
            Var::PLANE
                .iter()
                .zip(coeffs.iter())
                .map(|(&v, c)| (Monomial::var(v), c.clone())),
        )
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    /// Leading term under `order`.
    pub fn lead(&self, order: MonomialOrder) -> Option<&(Monomial, Rat)> {
        if order == MonomialOrder::Grevlex {
            return self.terms.first();
        }
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a.clone())).collect(),
        }
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> Poly {
        match self.lead(order) {
            None => Poly::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Returns `Ok(Some(q))` with `self = q * divisor`, `Ok(None)` if the
    /// divisor does not divide `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Option<Poly>, Error> {
        let (lm, lc) = divisor.terms.first().ok_or(Error::DivisionByZero)?.clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let Some(q) = lm.div(&m) else {
                return Ok(None);
            };
            let coef = c / &lc;
            rem = &rem - &divisor.mul_monomial(&q).scale(&coef);
            quot.push((q, coef));
        }
        Ok(Some(Poly::from_terms(quot)))
    }

    pub fn derivative(&self, v: Var) -> Poly {
        Poly::from_terms(self.terms.iter().filter(|(m, _)| m.exp(v) > 0).map(|(m, c)| {
            let mut e = m.0;
            let k = e[v.index()];
            e[v.index()] -= 1;
            (Monomial(e), c * Rat::from_integer(k.into()))
        }))
    }

    /// Evaluates at a point of `x, y, z` (`t` must not occur).
    pub fn eval(&self, p: &[Rat; 3]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, coord) in p.iter().enumerate() {
                let e = m.0[i];
                if e > 0 {
                    v *= num_traits::pow(coord.clone(), e as usize);
                }
            }
            acc += v;
        }
        acc
    }

    /// Substitutes a constant for one variable.
    pub fn substitute(&self, v: Var, value: &Rat) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = m.0;
            let k = std::mem::replace(&mut e[v.index()], 0);
            (Monomial(e), c * num_traits::pow(value.clone(), k as usize))
        }))
    }

    /// Coefficients against a list of monomials (missing monomials are zero).
    pub fn coefficients(&self, basis: &[Monomial]) -> Vec<Rat> {
        let map: HashMap<&Monomial, &Rat> = self.terms.iter().map(|(m, c)| (m, c)).collect();
        basis
            .iter()
            .map(|m| map.get(m).map(|c| (*c).clone()).unwrap_or_else(Rat::zero))
            .collect()
    }

    pub fn from_coefficients(basis: &[Monomial], coeffs: &[Rat]) -> Poly {
        Poly::from_terms(basis.iter().copied().zip(coeffs.iter().cloned()))
    }

    /// Adds `c * m * g` to `self` where the result must stay sorted under
    /// grevlex; this is a merge, not a re-sort.
    fn merge(a: &[(Monomial, Rat)], b: impl Iterator<Item = (Monomial, Rat)>) -> Poly {
        let mut out = Vec::with_capacity(a.len());
        let mut a = a.iter().peekable();
        let mut b = b.peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match MonomialOrder::Grevlex.cmp(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = ca + cb;
                        if !c.is_zero() {
                            out.push((*m, c));
                        }
                    }
                },
            }
        }
        Poly { terms: out }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::merge(&self.terms, rhs.terms.iter().cloned())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::merge(&self.terms, rhs.terms.iter().map(|(m, c)| (*m, -c)))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .flat_map(|(m, a)| rhs.terms.iter().map(move |(n, b)| (m.mul(n), a * b))),
        )
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{}", format_rat(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rat(&abs))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Accepts sums of products of rationals and `x, y, z, t` powers, e.g.
    /// `"x^2 - 3/2*y*z + 1"` or `"2 x y"`. No parentheses.
    fn from_str(s: &str) -> Result<Self, Error> {
        let err = |msg: &str| Error::Parse(format!("{msg} in polynomial {s:?}"));
        let mut terms = Vec::new();
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(err("empty input"));
        }
        let mut sign = Rat::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (chunk, tail) = rest.split_at(end);
            let mut coef = sign.clone();
            let mut exps = [0u16; NVARS];
            let mut any = false;
            for factor in chunk.split(|c: char| c == '*' || c.is_whitespace()) {
                if factor.is_empty() {
                    continue;
                }
                any = true;
                let (base, e) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u16>().map_err(|_| err("bad exponent"))?),
                    None => (factor, 1),
                };
                let var = match base {
                    "x" => Some(Var::X),
                    "y" => Some(Var::Y),
                    "z" => Some(Var::Z),
                    "t" => Some(Var::T),
                    _ => None,
                };
                match var {
                    Some(v) => exps[v.index()] += e,
                    None => {
                        let c = parse_rat(base).map_err(|_| err("bad factor"))?;
                        coef *= num_traits::pow(c, e as usize);
                    }
                }
            }
            if !any {
                return Err(err("empty term"));
            }
            terms.push((Monomial(exps), coef));
            if tail.is_empty() {
                break;
            }
            sign = if tail.starts_with('-') { -Rat::one() } else { Rat::one() };
            rest = &tail[1..];
        }
        Ok(Poly::from_terms(terms))
    }
}

/// Shorthand for parsing a polynomial literal; panics on malformed input.
pub fn poly(s: &str) -> Poly {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}
