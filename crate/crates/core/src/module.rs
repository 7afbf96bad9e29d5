//! Graded free modules `S^r` and their elements.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::order::{ModuleOrder, TermOrder};
use crate::poly::{PolyRing, Polynomial, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModTerm {
    pub comp: u32,
    pub mono: Monomial,
    pub coeff: u32,
}

/// An element of a free module, terms strictly descending in the order of
/// the [`FreeModule`] that built it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ModuleElement {
    terms: Vec<ModTerm>,
}

impl ModuleElement {
    pub fn zero() -> Self {
        ModuleElement { terms: Vec::new() }
    }

    pub(crate) fn from_sorted(terms: Vec<ModTerm>) -> Self {
        ModuleElement { terms }
    }

    #[inline]
    pub fn terms(&self) -> &[ModTerm] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<ModTerm> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn lead(&self) -> Option<&ModTerm> {
        self.terms.first()
    }

    pub fn max_comp(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }
}

/// `S^r` with degree twists (basis vector `e_i` has degree `twists[i]`) and a
/// module term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    ring: PolyRing,
    twists: Vec<i32>,
    order: ModuleOrder,
}

impl FreeModule {
    pub fn new(ring: PolyRing, twists: Vec<i32>, order: ModuleOrder) -> Self {
        FreeModule { ring, twists, order }
    }

    /// The ring itself as a rank one module.
    pub fn ring_module(ring: &PolyRing) -> Self {
        let order = ModuleOrder::pot(ring.order());
        FreeModule { ring: ring.clone(), twists: alloc::vec![0], order }
    }

    pub fn top(ring: &PolyRing, twists: Vec<i32>) -> Self {
        let order = ModuleOrder::top(ring.order());
        FreeModule { ring: ring.clone(), twists, order }
    }

    #[inline]
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    #[inline]
    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn mono_order(&self) -> TermOrder {
        self.order.mono
    }

    pub fn with_order(&self, order: ModuleOrder) -> FreeModule {
        FreeModule { ring: self.ring.clone(), twists: self.twists.clone(), order }
    }

    #[inline]
    pub fn cmp_terms(&self, a: &ModTerm, b: &ModTerm) -> Ordering {
        self.order.cmp(a.comp, &a.mono, b.comp, &b.mono)
    }

    #[inline]
    pub fn cmp(&self, ca: u32, a: &Monomial, cb: u32, b: &Monomial) -> Ordering {
        self.order.cmp(ca, a, cb, b)
    }

    /// Degree of `m e_c`.
    #[inline]
    pub fn term_degree(&self, comp: u32, m: &Monomial) -> i32 {
        m.degree() as i32 + self.twists[comp as usize]
    }

    /// Degree of the leading term; `None` for zero.
    pub fn degree(&self, v: &ModuleElement) -> Option<i32> {
        v.terms.first().map(|t| self.term_degree(t.comp, &t.mono))
    }

    pub fn max_degree(&self, v: &ModuleElement) -> Option<i32> {
        v.terms.iter().map(|t| self.term_degree(t.comp, &t.mono)).max()
    }

    pub fn is_homogeneous(&self, v: &ModuleElement) -> bool {
        match v.terms.first() {
            None => true,
            Some(t) => {
                let d = self.term_degree(t.comp, &t.mono);
                v.terms.iter().all(|s| self.term_degree(s.comp, &s.mono) == d)
            }
        }
    }

    pub fn check(&self, v: &ModuleElement) -> Result<()> {
        for t in &v.terms {
            if t.comp as usize >= self.rank() {
                return Err(AlgebraError::RankMismatch { expected: self.rank(), found: t.comp as usize + 1 });
            }
            if t.mono.nvars() != self.ring.nvars() {
                return Err(AlgebraError::RingMismatch);
            }
        }
        Ok(())
    }

    pub fn basis(&self, i: usize) -> ModuleElement {
        let one = Monomial::one(self.ring.nvars());
        ModuleElement { terms: alloc::vec![ModTerm { comp: i as u32, mono: one, coeff: 1 }] }
    }

    /// Canonicalise arbitrary terms: sort, merge, drop zeros.
    pub fn from_terms(&self, mut terms: Vec<ModTerm>) -> ModuleElement {
        let f = self.ring.field();
        let p = f.characteristic();
        for t in terms.iter_mut() {
            t.coeff %= p;
        }
        terms.sort_unstable_by(|a, b| self.cmp_terms(b, a));
        let mut out: Vec<ModTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mono == t.mono => {
                    last.coeff = f.add(last.coeff, t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        ModuleElement { terms: out }
    }

    /// Re-sort an element built under another order.
    pub fn adopt(&self, v: &ModuleElement) -> ModuleElement {
        let mut terms = v.terms.clone();
        terms.sort_unstable_by(|a, b| self.cmp_terms(b, a));
        ModuleElement { terms }
    }

    /// `sum_i f_i e_i`.
    pub fn from_polys(&self, fs: &[Polynomial]) -> ModuleElement {
        let mut terms = Vec::new();
        for (i, f) in fs.iter().enumerate() {
            for t in f.terms() {
                terms.push(ModTerm { comp: i as u32, mono: t.mono, coeff: t.coeff });
            }
        }
        let mut v = ModuleElement { terms };
        v.terms.sort_unstable_by(|a, b| self.cmp_terms(b, a));
        v
    }

    /// `f e_i`.
    pub fn from_poly(&self, f: &Polynomial, i: usize) -> ModuleElement {
        let terms = f
            .terms()
            .iter()
            .map(|t| ModTerm { comp: i as u32, mono: t.mono, coeff: t.coeff })
            .collect();
        self.adopt(&ModuleElement { terms })
    }

    /// Component `i` as a polynomial of the underlying ring.
    pub fn component(&self, v: &ModuleElement, i: usize) -> Polynomial {
        let terms = v
            .terms
            .iter()
            .filter(|t| t.comp as usize == i)
            .map(|t| Term { mono: t.mono, coeff: t.coeff })
            .collect();
        self.ring.from_terms(terms)
    }

    pub fn components(&self, v: &ModuleElement) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<Term>> = alloc::vec![Vec::new(); self.rank()];
        for t in &v.terms {
            buckets[t.comp as usize].push(Term { mono: t.mono, coeff: t.coeff });
        }
        buckets.into_iter().map(|b| self.ring.from_terms(b)).collect()
    }

    pub fn add(&self, a: &ModuleElement, b: &ModuleElement) -> ModuleElement {
        self.axpy(a, 1, &Monomial::one(self.ring.nvars()), b)
    }

    pub fn sub(&self, a: &ModuleElement, b: &ModuleElement) -> ModuleElement {
        let m1 = self.ring.field().neg(1);
        self.axpy(a, m1, &Monomial::one(self.ring.nvars()), b)
    }

    pub fn scale(&self, v: &ModuleElement, c: u32) -> ModuleElement {
        if c == 0 {
            return ModuleElement::zero();
        }
        let f = self.ring.field();
        let terms = v.terms.iter().map(|t| ModTerm { coeff: f.mul(t.coeff, c), ..*t }).collect();
        ModuleElement { terms }
    }

    pub fn mul_term(&self, v: &ModuleElement, c: u32, m: &Monomial) -> ModuleElement {
        if c == 0 {
            return ModuleElement::zero();
        }
        let f = self.ring.field();
        let terms = v
            .terms
            .iter()
            .map(|t| ModTerm { comp: t.comp, mono: t.mono.mul(m), coeff: f.mul(t.coeff, c) })
            .collect();
        ModuleElement { terms }
    }

    /// `f * v` for a polynomial `f`.
    pub fn mul_poly(&self, f: &Polynomial, v: &ModuleElement) -> ModuleElement {
        let mut acc = ModuleElement::zero();
        for t in f.terms() {
            acc = self.axpy(&acc, t.coeff, &t.mono, v);
        }
        acc
    }

    /// `a + c * m * b` by one merge pass.
    pub fn axpy(&self, a: &ModuleElement, c: u32, m: &Monomial, b: &ModuleElement) -> ModuleElement {
        let f = self.ring.field();
        let (at, bt) = (&a.terms, &b.terms);
        let mut out = Vec::with_capacity(at.len() + bt.len());
        let (mut i, mut j) = (0, 0);
        while i < at.len() && j < bt.len() {
            let bm = bt[j].mono.mul(m);
            match self.order.cmp(at[i].comp, &at[i].mono, bt[j].comp, &bm) {
                Ordering::Greater => {
                    out.push(at[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(ModTerm { comp: bt[j].comp, mono: bm, coeff: f.mul(c, bt[j].coeff) });
                    j += 1;
                }
                Ordering::Equal => {
                    let cc = f.add(at[i].coeff, f.mul(c, bt[j].coeff));
                    if cc != 0 {
                        out.push(ModTerm { comp: bt[j].comp, mono: bm, coeff: cc });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&at[i..]);
        if c != 0 {
            for t in &bt[j..] {
                out.push(ModTerm { comp: t.comp, mono: t.mono.mul(m), coeff: f.mul(c, t.coeff) });
            }
        }
        ModuleElement { terms: out }
    }

    pub fn monic(&self, v: &ModuleElement) -> ModuleElement {
        match v.terms.first() {
            None => v.clone(),
            Some(t) if t.coeff == 1 => v.clone(),
            Some(t) => self.scale(v, self.ring.field().inv(t.coeff)),
        }
    }

    /// Map into a module whose basis contains this one's at `offset`.
    pub fn shift_into(&self, target: &FreeModule, v: &ModuleElement, offset: usize) -> ModuleElement {
        let terms = v
            .terms
            .iter()
            .map(|t| ModTerm { comp: t.comp + offset as u32, ..*t })
            .collect();
        target.adopt(&ModuleElement { terms })
    }

    /// Keep the components in `lo..hi`, renumbered from zero, in `target`.
    pub fn restrict_to(&self, target: &FreeModule, v: &ModuleElement, lo: usize, hi: usize) -> ModuleElement {
        let terms = v
            .terms
            .iter()
            .filter(|t| (lo..hi).contains(&(t.comp as usize)))
            .map(|t| ModTerm { comp: t.comp - lo as u32, ..*t })
            .collect();
        target.adopt(&ModuleElement { terms })
    }

    /// Dot product `sum_i v_i g_i` with a list of images in another module.
    pub fn evaluate(&self, v: &ModuleElement, target: &FreeModule, images: &[ModuleElement]) -> ModuleElement {
        let mut acc = ModuleElement::zero();
        for t in &v.terms {
            acc = target.axpy(&acc, t.coeff, &t.mono, &images[t.comp as usize]);
        }
        acc
    }

    pub fn display(&self, v: &ModuleElement) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .components(v)
            .iter()
            .map(|f| self.ring.display(f))
            .collect();
        format!("({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn components_roundtrip() {
        let r = PolyRing::with_vars(2, PrimeField::default()).unwrap();
        let f = FreeModule::top(&r, alloc::vec![0, 1]);
        let (x, y) = (r.var(0), r.var(1));
        let v = f.from_polys(&[r.mul(&x, &y), y.clone()]);
        assert_eq!(f.components(&v), alloc::vec![r.mul(&x, &y), y]);
        assert!(f.is_homogeneous(&v));
        assert_eq!(f.degree(&v), Some(2));
        let w = f.sub(&v, &v);
        assert!(w.is_zero());
    }
}
