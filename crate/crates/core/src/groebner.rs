//! Buchberger's algorithm with the Gebauer–Möller pair update.
//!
//! Polynomials are moved into a working form whose terms are sorted by the
//! active monomial order, reduced there, and converted back to [`Poly`] at the
//! end. S-pairs are selected by sugar degree (the lcm degree for homogeneous
//! input), ties broken by the lcm itself, so the run is deterministic.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;
use crate::rational::Rat;

type Terms = Vec<(Monomial, BigInt)>;

/// A polynomial with integer coefficients, terms sorted by the active order.
#[derive(Debug, Clone)]
struct Work {
    terms: Terms,
}

impl Work {
    /// `s·p` with integer coefficients, returned together with `s`.
    fn from_poly(p: &Poly, order: MonomialOrder) -> (Self, Rat) {
        let denom = p.terms().iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut terms: Terms = p.terms().iter().map(|(m, c)| (*m, c.numer() * (&denom / c.denom()))).collect();
        if order != MonomialOrder::Grevlex {
            terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        let mut w = Work { terms };
        let content = w.make_primitive();
        (w, Rat::from_integer(denom) / content)
    }

    /// Monic rational polynomial with the same leading monomial.
    fn to_poly(&self) -> Poly {
        let Some((_, lc)) = self.terms.first() else { return Poly::zero() };
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, Rat::new(c.clone(), lc.clone()))))
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Divides by the content, sign chosen so the leading coefficient is
    /// positive; returns the signed divisor.
    fn make_primitive(&mut self) -> Rat {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if g.is_zero() {
            return Rat::one();
        }
        if self.lc().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c = &*c / &g;
            }
        }
        Rat::from_integer(g)
    }
}

/// `ca·a − cg·m·g`, merged under `order`.
fn combine(a: &[(Monomial, BigInt)], ca: &BigInt, m: &Monomial, g: &[(Monomial, BigInt)], cg: &BigInt, order: MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let scale = |c: &BigInt| if ca.is_one() { c.clone() } else { c * ca };
    let mut i = 0;
    let mut j = 0;
    while i < a.len() || j < g.len() {
        if j == g.len() {
            out.extend(a[i..].iter().map(|(mono, c)| (*mono, scale(c))));
            break;
        }
        let gm = g[j].0.mul(m);
        if i == a.len() {
            out.push((gm, -(cg * &g[j].1)));
            j += 1;
            continue;
        }
        match order.cmp(&a[i].0, &gm) {
            Ordering::Greater => {
                out.push((a[i].0, scale(&a[i].1)));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, -(cg * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = scale(&a[i].1) - cg * &g[j].1;
                if !v.is_zero() {
                    out.push((gm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Reduces every term from position `start` on against `basis`.
///
/// The result is `s·NF(f)` for the returned nonzero rational `s`.
fn normal_form_from(f: Work, start: usize, basis: &[&Work], order: MonomialOrder) -> (Work, Rat) {
    reduce_terms(f, start, basis, order, false)
}

/// With `stop_at_remainder`, returns as soon as some term past `start` is
/// irreducible; the result is then nonzero but not fully reduced.
fn reduce_terms(f: Work, start: usize, basis: &[&Work], order: MonomialOrder, stop_at_remainder: bool) -> (Work, Rat) {
    let mut p = f.terms;
    let mut s = Rat::one();
    let mut k = start;
    while k < p.len() {
        let lm = p[k].0;
        let Some((g, q)) = basis.iter().find_map(|g| g.lm().div(&lm).map(|q| (g, q))) else {
            if stop_at_remainder {
                break;
            }
            k += 1;
            continue;
        };
        let common = p[k].1.gcd(g.lc());
        let mp = g.lc() / &common;
        let mg = &p[k].1 / &common;
        let tail = combine(&p[k + 1..], &mp, &q, &g.terms[1..], &mg, order);
        p.truncate(k);
        if !mp.is_one() {
            for (_, c) in p.iter_mut() {
                *c *= &mp;
            }
            s *= Rat::from_integer(mp);
        }
        p.extend(tail);
        let mut w = Work { terms: p };
        s /= w.make_primitive();
        p = w.terms;
    }
    (Work { terms: p }, s)
}

fn normal_form(f: Work, basis: &[&Work], order: MonomialOrder) -> Work {
    normal_form_from(f, 0, basis, order).0
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State {
    order: MonomialOrder,
    polys: Vec<Work>,
    sugar: Vec<u32>,
    basis: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State {
    fn pair(&self, i: usize, j: usize) -> Pair {
        let (li, lj) = (self.polys[i].lm(), self.polys[j].lm());
        let lcm = li.lcm(lj);
        let si = self.sugar[i] + lcm.degree() - li.degree();
        let sj = self.sugar[j] + lcm.degree() - lj.degree();
        Pair { i, j, lcm, sugar: si.max(sj) }
    }

    fn update(&mut self, h: usize) {
        let lh = *self.polys[h].lm();
        let candidates: Vec<Pair> = self.basis.iter().map(|&g| self.pair(h, g)).collect();

        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in candidates.iter().enumerate() {
            let coprime = lh.coprime(self.polys[p.j].lm());
            let dominated = candidates[k + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(Pair { ..*p });
            }
        }
        kept.retain(|p| !lh.coprime(self.polys[p.j].lm()));

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && lh.lcm(polys[p.i].lm()) != p.lcm
                && lh.lcm(polys[p.j].lm()) != p.lcm)
        });
        self.pairs.extend(kept);

        self.basis.retain(|&g| !lh.divides(polys[g].lm()));
        self.basis.push(h);
    }

    fn push(&mut self, mut w: Work, sugar: u32) -> bool {
        w.make_primitive();
        let unit = w.lm().is_one();
        self.polys.push(w);
        self.sugar.push(sugar);
        self.update(self.polys.len() - 1);
        unit
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.sugar
                .cmp(&q.sugar)
                .then_with(|| order.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_poly(&self, p: &Pair) -> Work {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let mf = f.lm().div(&p.lcm).unwrap();
        let mg = g.lm().div(&p.lcm).unwrap();
        let common = f.lc().gcd(g.lc());
        let cf = g.lc() / &common;
        let cg = f.lc() / &common;
        let shifted_f: Terms = f.terms[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
        let mut w = Work { terms: combine(&shifted_f, &cf, &mg, &g.terms[1..], &cg, self.order) };
        w.make_primitive();
        w
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
///
/// The output is monic, inter-reduced, and sorted by descending leading
/// monomial. The zero ideal gives an empty list, the unit ideal `[1]`.
pub fn groebner_basis(gens: &[Poly], order: MonomialOrder) -> Vec<Poly> {
    let mut st = State { order, polys: Vec::new(), sugar: Vec::new(), basis: Vec::new(), pairs: Vec::new() };
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let sugar = g.degree().unwrap_or(0);
        if st.push(Work::from_poly(g, order).0, sugar) {
            return vec![Poly::one()];
        }
    }
    while let Some(pair) = st.pop_pair() {
        let s = st.s_poly(&pair);
        let reducers: Vec<&Work> = st.basis.iter().map(|&i| &st.polys[i]).collect();
        let nf = normal_form(s, &reducers, order);
        if !nf.is_zero() && st.push(nf, pair.sugar) {
            return vec![Poly::one()];
        }
    }
    let mut basis: Vec<Work> = st.basis.iter().map(|&i| st.polys[i].clone()).collect();
    basis.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    // a generator arriving after a divisor of its lead is still in the set;
    // leads are pairwise distinct after the pair update
    let leads: Vec<Monomial> = basis.iter().map(|w| *w.lm()).collect();
    basis.retain(|w| !leads.iter().any(|l| l != w.lm() && l.divides(w.lm())));
    inter_reduce(basis, order).iter().map(Work::to_poly).collect()
}

fn inter_reduce(mut basis: Vec<Work>, order: MonomialOrder) -> Vec<Work> {
    for k in 0..basis.len() {
        let current = std::mem::replace(&mut basis[k], Work { terms: Vec::new() });
        let others: Vec<&Work> = basis.iter().filter(|w| !w.is_zero()).collect();
        basis[k] = normal_form_from(current, 1, &others, order).0;
    }
    basis
}

/// A Gröbner basis prepared for repeated normal-form computations.
#[derive(Debug, Clone)]
pub struct Reducer {
    order: MonomialOrder,
    basis: Vec<Work>,
}

impl Reducer {
    pub fn new(gb: &[Poly], order: MonomialOrder) -> Self {
        Reducer { order, basis: gb.iter().map(|g| Work::from_poly(g, order).0).collect() }
    }

    /// Normal form of `f`.
    pub fn reduce(&self, f: &Poly) -> Poly {
        let (r, s) = self.scaled_reduce(f);
        Poly::from_terms(r.terms.into_iter().map(|(m, c)| (m, Rat::from_integer(c) / &s)))
    }

    /// `f` reduces to zero.
    pub fn reduces_to_zero(&self, f: &Poly) -> bool {
        let refs: Vec<&Work> = self.basis.iter().collect();
        let (w, _) = Work::from_poly(f, self.order);
        reduce_terms(w, 0, &refs, self.order, true).0.is_zero()
    }

    fn scaled_reduce(&self, f: &Poly) -> (Work, Rat) {
        let refs: Vec<&Work> = self.basis.iter().collect();
        let (w, s0) = Work::from_poly(f, self.order);
        let (r, s1) = normal_form_from(w, 0, &refs, self.order);
        (r, s0 * s1)
    }
}

/// Normal form of `f` modulo a (reduced) Gröbner basis under `order`.
pub fn reduce(f: &Poly, gb: &[Poly], order: MonomialOrder) -> Poly {
    Reducer::new(gb, order).reduce(f)
}
