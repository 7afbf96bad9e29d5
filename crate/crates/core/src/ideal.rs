//! Ideals of the ambient polynomial ring with a lazily computed Groebner
//! basis, and the ideal-level operations built on it.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{AlgebraError, Result};
use crate::groebner::{buchberger, kernel, GroebnerBasis};
use crate::hilbert::{minimize, monomial_series, HilbertSeries};
use crate::module::FreeModule;
use crate::monomial::{Monomial, MAX_VARS};
use crate::order::TermOrder;
use crate::poly::{PolyRing, Polynomial, Term};

/// An ideal given by generators. The reduced Groebner basis under the
/// ring's order is computed on first use; concurrent first uses may both
/// compute it, and either result is kept (they are identical).
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    gb: OnceBox<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceBox::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(Box::new(g.clone()));
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), gb }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal").field("gens", &self.display()).finish()
    }
}

impl Ideal {
    pub fn new(ring: &PolyRing, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if g.nvars() != ring.nvars() {
                return Err(AlgebraError::RingMismatch);
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, gb: OnceBox::new() })
    }

    fn from_gb(ring: &PolyRing, gb: GroebnerBasis) -> Ideal {
        let cell = OnceBox::new();
        let gens = gb.generators().to_vec();
        let _ = cell.set(Box::new(gb));
        Ideal { ring: ring.clone(), gens, gb: cell }
    }

    pub fn zero(ring: &PolyRing) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb: OnceBox::new() }
    }

    pub fn unit(ring: &PolyRing) -> Ideal {
        Ideal { ring: ring.clone(), gens: alloc::vec![ring.one()], gb: OnceBox::new() }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &PolyRing) -> Ideal {
        Ideal { ring: ring.clone(), gens: ring.vars(), gb: OnceBox::new() }
    }

    #[inline]
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    #[inline]
    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| Box::new(buchberger(&self.ring, &self.gens).expect("generators checked at construction")))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn check_homogeneous(&self) -> Result<()> {
        match self.gens.iter().find(|g| !g.is_homogeneous()) {
            Some(g) => Err(AlgebraError::NotHomogeneous(self.ring.display(g))),
            None => Ok(()),
        }
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring.nvars() != other.ring.nvars() || self.ring.field() != other.ring.field() {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.gb().contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals (reduced bases coincide).
    pub fn equals(&self, other: &Ideal) -> bool {
        self.gb().generators() == other.gb().generators()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.gb().normal_form(f)
    }

    /// The ideal with its reduced Groebner basis as generators.
    pub fn reduced(&self) -> Ideal {
        Ideal::from_gb(&self.ring, self.gb().clone())
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.display(g)).collect();
        alloc::format!("({})", parts.join(", "))
    }

    /// Smallest degree of a term among the generators (the largest `n` with
    /// the ideal inside `m^n` for homogeneous generators).
    pub fn order(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.order()).min()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    /// `self + (gens)`, reusing a computed basis of `self`.
    pub fn extend(&self, gens: &[Polynomial]) -> Result<Ideal> {
        let gb = self.gb().extend(gens)?;
        Ok(Ideal::from_gb(&self.ring, gb))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(self.ring.mul(a, b));
            }
        }
        Ideal::new(&self.ring, linear_basis(&self.ring, g))
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut r = Ideal::unit(&self.ring);
        for _ in 0..k {
            r = r.product(self).expect("same ring");
        }
        r
    }

    /// `self ∩ other` by eliminating `t` from `t self + (1 - t) other`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let n = self.ring.nvars();
        if n + 1 > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(n + 1));
        }
        let mut names: Vec<String> = alloc::vec![String::from("_t")];
        names.extend(self.ring.names().iter().cloned());
        let big = PolyRing::new(&names, *self.ring.field(), TermOrder::Elimination(1))?;
        let t = big.var(0);
        let one_minus_t = big.sub(&big.one(), &t);
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(big.mul(&t, &lift(&big, f)));
        }
        for g in &other.gens {
            gens.push(big.mul(&one_minus_t, &lift(&big, g)));
        }
        let gb = buchberger(&big, &gens)?;
        let out: Vec<Polynomial> = gb
            .generators()
            .iter()
            .filter(|f| f.terms().iter().all(|t| t.mono.exp(0) == 0))
            .map(|f| drop_first(&self.ring, f))
            .collect();
        Ideal::new(&self.ring, out)
    }

    /// `self : other`, read off one kernel computation:
    /// `{f : f g_j ∈ self for all j}`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let g: Vec<&Polynomial> = other.gens.iter().collect();
        if g.is_empty() {
            return Ok(Ideal::unit(&self.ring));
        }
        let twists: Vec<i32> = g.iter().map(|f| -(f.degree().unwrap_or(0) as i32)).collect();
        let target = FreeModule::top(&self.ring, twists);
        let image = target.from_polys(&g.iter().map(|f| (*f).clone()).collect::<Vec<_>>());
        let mut base = Vec::new();
        let own = self.gb().generators();
        for j in 0..g.len() {
            for f in own {
                base.push(target.from_poly(f, j));
            }
        }
        let (src, ker) = kernel(&target, &[image], &[0], &base)?;
        let gens: Vec<Polynomial> = ker.basis().iter().map(|v| src.component(v, 0)).collect();
        Ideal::new(&self.ring, gens)
    }

    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        self.colon(&Ideal::new(&self.ring, alloc::vec![f.clone()])?)
    }

    /// `self : other^∞`, the first fixed point of the iterated colon.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        let mut cur = self.reduced();
        loop {
            let next = cur.colon(other)?.reduced();
            if cur.contains_ideal(&next) {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `self ∩ k[x_k, ..., x_{n-1}]`, as polynomials of the same ring.
    pub fn eliminate(&self, k: usize) -> Result<Ideal> {
        if k == 0 {
            return Ok(self.clone());
        }
        let er = self.ring.with_order(TermOrder::Elimination(k));
        let gb = buchberger(&er, &self.gens)?;
        let out: Vec<Polynomial> = gb
            .generators()
            .iter()
            .filter(|f| f.terms().iter().all(|t| (0..k).all(|i| t.mono.exp(i) == 0)))
            .map(|f| self.ring.adopt(f))
            .collect();
        Ideal::new(&self.ring, out)
    }

    /// Minimal generators of the leading-term ideal.
    pub fn leading_ideal(&self) -> Vec<Monomial> {
        minimize(self.gb().leading_monomials())
    }

    /// Krull dimension of `S/self`.
    pub fn dim_quotient(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(AlgebraError::EmptyRing);
        }
        let n = self.ring.nvars();
        let supports: Vec<u32> = self.leading_ideal().iter().map(|m| m.support()).collect();
        let mut best = 0;
        for sigma in 0u32..(1u32 << n) {
            let size = sigma.count_ones() as usize;
            if size <= best {
                continue;
            }
            if supports.iter().all(|&s| s & !sigma != 0) {
                best = size;
            }
        }
        Ok(best)
    }

    /// Hilbert series of `S/self`.
    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        self.check_homogeneous()?;
        Ok(monomial_series(self.ring.nvars(), &self.leading_ideal()))
    }
}

/// `ℓ(A/B)` for homogeneous `B ⊆ A` with `A/B` of finite length.
pub fn length_subquotient(a: &Ideal, b: &Ideal) -> Result<u64> {
    a.same_ring(b)?;
    if !a.contains_ideal(b) {
        return Err(AlgebraError::NotContained);
    }
    let diff = b.hilbert_series()?.sub(&a.hilbert_series()?);
    diff.length()
}

/// Hilbert series of `A/B` for `B ⊆ A`.
pub fn series_subquotient(a: &Ideal, b: &Ideal) -> Result<HilbertSeries> {
    Ok(b.hilbert_series()?.sub(&a.hilbert_series()?))
}

fn lift(big: &PolyRing, f: &Polynomial) -> Polynomial {
    let n = big.nvars();
    let terms = f.terms().iter().map(|t| Term { mono: t.mono.embed(n, 1), coeff: t.coeff }).collect();
    big.from_terms(terms)
}

fn drop_first(ring: &PolyRing, f: &Polynomial) -> Polynomial {
    let terms = f.terms().iter().map(|t| Term { mono: t.mono.drop_leading(1), coeff: t.coeff }).collect();
    ring.from_terms(terms)
}

/// A basis of the span of `polys` over the field, by Gaussian elimination on
/// leading terms. Products of homogeneous generators stay homogeneous, so
/// this prunes generator lists of powers without any Groebner basis.
pub fn linear_basis(ring: &PolyRing, polys: Vec<Polynomial>) -> Vec<Polynomial> {
    let f = ring.field();
    let one = Monomial::one(ring.nvars());
    let mut rows: Vec<Polynomial> = Vec::new();
    let mut piv: BTreeMap<[u16; MAX_VARS], usize> = BTreeMap::new();
    for mut p in polys {
        loop {
            let Some(t) = p.terms().first().copied() else { break };
            match piv.get(&t.mono.key()) {
                Some(&r) => p = ring.axpy(&p, f.neg(t.coeff), &one, &rows[r]),
                None => break,
            }
        }
        if p.is_zero() {
            continue;
        }
        let p = ring.monic(&p);
        piv.insert(p.terms()[0].mono.key(), rows.len());
        rows.push(p);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring(names: &[&str]) -> PolyRing {
        PolyRing::new(names, PrimeField::default(), TermOrder::GrevLex).unwrap()
    }

    fn id(r: &PolyRing, g: Vec<Polynomial>) -> Ideal {
        Ideal::new(r, g).unwrap()
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let i = id(&r, alloc::vec![x.clone()]).intersect(&id(&r, alloc::vec![y.clone()])).unwrap();
        assert!(i.equals(&id(&r, alloc::vec![r.mul(&x, &y)])));
        let r4 = ring(&["x1", "x2", "x3", "y"]);
        let v = r4.vars();
        let a = id(&r4, v[..3].to_vec()).intersect(&id(&r4, alloc::vec![v[3].clone()])).unwrap();
        let want = id(&r4, (0..3).map(|i| r4.mul(&v[i], &v[3])).collect());
        assert!(a.equals(&want));
    }

    #[test]
    fn colons() {
        let r = ring(&["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let q = id(&r, alloc::vec![r.mul(&x, &x), r.mul(&y, &y)]);
        let c = q.colon(&Ideal::maximal(&r)).unwrap();
        let want = id(&r, alloc::vec![r.mul(&x, &x), r.mul(&y, &y), r.mul(&x, &y)]);
        assert!(c.equals(&want));
        let xy = id(&r, alloc::vec![r.mul(&x, &y)]);
        assert!(xy.colon_poly(&x).unwrap().equals(&id(&r, alloc::vec![y.clone()])));
        assert!(q.colon(&Ideal::unit(&r)).unwrap().equals(&q));
    }

    #[test]
    fn saturation_and_dimension() {
        let r = ring(&["x1", "x2", "x3", "y"]);
        let v = r.vars();
        let j = id(&r, (0..3).map(|i| r.mul(&v[i], &v[3])).collect());
        let s = j.saturate(&id(&r, v[..3].to_vec())).unwrap();
        assert!(s.equals(&id(&r, alloc::vec![v[3].clone()])));
        assert_eq!(j.dim_quotient().unwrap(), 3);
        assert_eq!(Ideal::maximal(&r).dim_quotient().unwrap(), 0);
        assert_eq!(Ideal::unit(&r).dim_quotient(), Err(AlgebraError::EmptyRing));
    }

    #[test]
    fn lengths() {
        let r = ring(&["x", "y"]);
        let m = Ideal::maximal(&r);
        assert_eq!(length_subquotient(&m, &m.power(2)).unwrap(), 2);
        let (x, y) = (r.var(0), r.var(1));
        let q = id(&r, alloc::vec![r.mul(&x, &x), r.mul(&y, &y)]);
        let i = q.colon(&m).unwrap();
        assert_eq!(length_subquotient(&i, &q).unwrap(), 1);
        assert_eq!(length_subquotient(&q, &q).unwrap(), 0);
        assert_eq!(
            length_subquotient(&Ideal::unit(&r), &id(&r, alloc::vec![x.clone()])),
            Err(AlgebraError::InfiniteLength { pole_order: 1 })
        );
    }

    #[test]
    fn powers() {
        let r = ring(&["x", "y"]);
        let m = Ideal::maximal(&r);
        assert_eq!(m.power(2).gens().len(), 3);
        assert!(m.power(0).is_unit());
    }
}
