//! Monomials in `x, y, z` (plus the auxiliary variable `t`) and monomial
//! orders.

use std::cmp::Ordering;
use std::fmt;

/// Number of variables carried by a [`Monomial`]: `x, y, z` and the
/// auxiliary elimination variable `t`.
pub const NVARS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
    /// Auxiliary variable, only used inside ideal operations.
    T = 3,
}

impl Var {
    pub const PLANE: [Var; 3] = [Var::X, Var::Y, Var::Z];
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "z", "t"][self.index()]
    }
}

/// `x^a y^b z^c t^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn new(a: u16, b: u16, c: u16) -> Self {
        Monomial([a, b, c, 0])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u16; NVARS] {
        &self.0
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; NVARS];
        for ((out, a), b) in e.iter_mut().zip(other.0).zip(self.0) {
            *out = a.checked_sub(b)?;
        }
        Some(Monomial(e))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = (*a).max(b);
        }
        Monomial(e)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u16) -> Monomial {
        let mut e = self.0;
        for a in e.iter_mut() {
            *a *= k;
        }
        Monomial(e)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

/// A total order on monomials compatible with multiplication, with `1`
/// minimal. Variables rank `x > y > z > t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    /// Block order: compare the eliminated variables first (grevlex on that
    /// block), then break ties with grevlex on the remaining variables.
    /// The `u8` is a bit mask over [`Var::index`].
    Elimination(u8),
}

impl MonomialOrder {
    pub fn eliminating(vars: &[Var]) -> Self {
        MonomialOrder::Elimination(vars.iter().fold(0u8, |m, v| m | (1 << v.index())))
    }

    pub fn eliminated_vars(&self) -> Vec<Var> {
        match self {
            MonomialOrder::Elimination(mask) => Var::ALL
                .into_iter()
                .filter(|v| mask & (1 << v.index()) != 0)
                .collect(),
            _ => Vec::new(),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex_masked(a, b, 0xff),
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Elimination(mask) => grevlex_masked(a, b, mask)
                .then_with(|| grevlex_masked(a, b, !mask)),
        }
    }
}

fn grevlex_masked(a: &Monomial, b: &Monomial, mask: u8) -> Ordering {
    let in_mask = |i: usize| mask & (1 << i) != 0;
    let deg = |m: &Monomial| -> u32 {
        (0..NVARS).filter(|&i| in_mask(i)).map(|i| m.0[i] as u32).sum()
    };
    deg(a).cmp(&deg(b)).then_with(|| {
        for i in (0..NVARS).rev().filter(|&i| in_mask(i)) {
            match a.0[i].cmp(&b.0[i]) {
                Ordering::Equal => continue,
                // smaller exponent in the last variable wins
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

/// All monomials of total degree `d` in `x, y, z`, sorted descending in
/// grevlex. There are `(d+1)(d+2)/2` of them.
pub fn monomials_of_degree(d: u32) -> Vec<Monomial> {
    let d = d as u16;
    let mut out = Vec::with_capacity(((d as usize + 1) * (d as usize + 2)) / 2);
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push(Monomial::new(a, b, d - a - b));
        }
    }
    out.sort_by(|p, q| MonomialOrder::Grevlex.cmp(q, p));
    out
}
