//! Multivariate polynomials over `F_p` and the ring descriptor that owns
//! their term order.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{AlgebraError, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, MAX_VARS};
use crate::order::TermOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: u32,
}

/// A polynomial in canonical form: terms strictly descending in the order
/// of the ring that built it, no zero coefficients. The zero polynomial has
/// no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: u8,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { nvars: n as u8, terms: Vec::new() }
    }

    /// Wrap terms that are already canonical for some order.
    pub(crate) fn from_sorted(n: usize, terms: Vec<Term>) -> Self {
        Polynomial { nvars: n as u8, terms }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
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

    /// Leading term under the order the polynomial was built with.
    pub fn leading_term(&self) -> Result<(Monomial, u32)> {
        self.terms
            .first()
            .map(|t| (t.mono, t.coeff))
            .ok_or(AlgebraError::ZeroPolynomial)
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mono.degree() == t.mono.degree()),
        }
    }

    /// Total degree (maximum over terms); `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Minimal degree of a term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).min()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

/// Arithmetic operation selector for [`PolyRing::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// The ambient polynomial ring `F_p[x_0, ..., x_{n-1}]` with a term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    field: PrimeField,
    order: TermOrder,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S], field: PrimeField, order: TermOrder) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::DimensionMismatch { expected: 1, found: 0 });
        }
        if n > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(n));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(AlgebraError::DuplicateVariable(a.clone()));
            }
        }
        if let TermOrder::Elimination(k) = order {
            if k > n {
                return Err(AlgebraError::DimensionMismatch { expected: n, found: k });
            }
        }
        Ok(PolyRing { names, field, order })
    }

    /// `F_p[x_0..x_{n-1}]` with generic names and grevlex.
    pub fn with_vars(n: usize, field: PrimeField) -> Result<Self> {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        PolyRing::new(&names, field, TermOrder::GrevLex)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn order(&self) -> TermOrder {
        self.order
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: TermOrder) -> PolyRing {
        PolyRing { names: self.names.clone(), field: self.field, order }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars())
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        let c = self.field.from_i64(c);
        if c == 0 {
            return self.zero();
        }
        Polynomial::from_sorted(self.nvars(), alloc::vec![Term { mono: Monomial::one(self.nvars()), coeff: c }])
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.monomial(Monomial::var(self.nvars(), i), 1)
    }

    pub fn vars(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn monomial(&self, m: Monomial, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            return self.zero();
        }
        Polynomial::from_sorted(self.nvars(), alloc::vec![Term { mono: m, coeff: c }])
    }

    /// Build a canonical polynomial from arbitrary (monomial, coefficient)
    /// pairs: sorts, merges duplicates and drops zeros.
    pub fn from_terms(&self, mut terms: Vec<Term>) -> Polynomial {
        let p = self.field.characteristic();
        for t in terms.iter_mut() {
            t.coeff %= p;
        }
        terms.sort_unstable_by(|a, b| self.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = self.field.add(last.coeff, t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        Polynomial::from_sorted(self.nvars(), out)
    }

    /// Re-sort a polynomial built under another order of the same variables.
    pub fn adopt(&self, f: &Polynomial) -> Polynomial {
        let mut terms = f.terms.clone();
        terms.sort_unstable_by(|a, b| self.cmp(&b.mono, &a.mono));
        Polynomial::from_sorted(self.nvars(), terms)
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        if f.nvars() != self.nvars() {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(())
    }

    /// Checked arithmetic entry point.
    pub fn arith(&self, op: ArithOp, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        self.check(g)?;
        Ok(match op {
            ArithOp::Add => self.add(f, g),
            ArithOp::Sub => self.sub(f, g),
            ArithOp::Mul => self.mul(f, g),
        })
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.axpy(f, 1, &Monomial::one(self.nvars()), g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.axpy(f, self.field.neg(1), &Monomial::one(self.nvars()), g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(1))
    }

    pub fn scale(&self, f: &Polynomial, c: u32) -> Polynomial {
        if c == 0 {
            return self.zero();
        }
        let terms = f
            .terms
            .iter()
            .map(|t| Term { mono: t.mono, coeff: self.field.mul(t.coeff, c) })
            .collect();
        Polynomial::from_sorted(self.nvars(), terms)
    }

    /// `c * m * f`. Multiplication by a monomial preserves the order.
    pub fn mul_term(&self, f: &Polynomial, c: u32, m: &Monomial) -> Polynomial {
        if c == 0 {
            return self.zero();
        }
        let terms = f
            .terms
            .iter()
            .map(|t| Term { mono: t.mono.mul(m), coeff: self.field.mul(t.coeff, c) })
            .collect();
        Polynomial::from_sorted(self.nvars(), terms)
    }

    /// `f + c * m * g` by a single merge pass.
    pub fn axpy(&self, f: &Polynomial, c: u32, m: &Monomial, g: &Polynomial) -> Polynomial {
        let fd = &self.field;
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            let gm = g.terms[j].mono.mul(m);
            match self.cmp(&f.terms[i].mono, &gm) {
                Ordering::Greater => {
                    out.push(f.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    let cc = fd.mul(c, g.terms[j].coeff);
                    if cc != 0 {
                        out.push(Term { mono: gm, coeff: cc });
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let cc = fd.add(f.terms[i].coeff, fd.mul(c, g.terms[j].coeff));
                    if cc != 0 {
                        out.push(Term { mono: gm, coeff: cc });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f.terms[i..]);
        for t in &g.terms[j..] {
            let cc = fd.mul(c, t.coeff);
            if cc != 0 {
                out.push(Term { mono: t.mono.mul(m), coeff: cc });
            }
        }
        Polynomial::from_sorted(self.nvars(), out)
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return self.zero();
        }
        if f.terms.len() == 1 {
            return self.mul_term(g, f.terms[0].coeff, &f.terms[0].mono);
        }
        if g.terms.len() == 1 {
            return self.mul_term(f, g.terms[0].coeff, &g.terms[0].mono);
        }
        let mut terms = Vec::with_capacity(f.terms.len() * g.terms.len());
        for a in &f.terms {
            for b in &g.terms {
                terms.push(Term { mono: a.mono.mul(&b.mono), coeff: self.field.mul(a.coeff, b.coeff) });
            }
        }
        self.from_terms(terms)
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, f);
        }
        r
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.terms.first() {
            None => f.clone(),
            Some(t) if t.coeff == 1 => f.clone(),
            Some(t) => self.scale(f, self.field.inv(t.coeff)),
        }
    }

    /// Checked leading term.
    pub fn leading_term(&self, f: &Polynomial) -> Result<(Monomial, u32)> {
        self.check(f)?;
        f.leading_term()
    }

    /// Exact division by a monomial that divides every term.
    pub fn div_monomial(&self, f: &Polynomial, m: &Monomial) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(f.terms.len());
        for t in &f.terms {
            if !m.divides(&t.mono) {
                return None;
            }
            terms.push(Term { mono: m.quotient_of(&t.mono), coeff: t.coeff });
        }
        Some(Polynomial::from_sorted(self.nvars(), terms))
    }

    /// Human-readable rendering, e.g. `x^2 - 3*x*y + 1`.
    pub fn display(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, t) in f.terms.iter().enumerate() {
            let c = self.field.to_signed(t.coeff);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.display_monomial(&t.mono);
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else if abs == 1 {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{abs}*{mono}"));
            }
        }
        s
    }

    pub fn display_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> PolyRing {
        PolyRing::new(&["x", "y"], PrimeField::default(), TermOrder::GrevLex).unwrap()
    }

    #[test]
    fn sum_difference_and_square() {
        let r = ring2();
        let (x, y) = (r.var(0), r.var(1));
        let s = r.add(&x, &y);
        let d = r.sub(&x, &y);
        assert_eq!(r.display(&r.add(&s, &d)), "2*x");
        assert!(r.mul(&s, &r.zero()).is_zero());
        assert_eq!(r.display(&r.pow(&s, 2)), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn leading_terms() {
        let r = ring2();
        let (x, y) = (r.var(0), r.var(1));
        let f = r.add(&r.add(&r.mul(&x, &x), &r.mul(&x, &y)), &r.pow(&y, 3));
        assert_eq!(r.leading_term(&f).unwrap().0, Monomial::from_exponents(&[0, 3]).unwrap());
        let c = r.constant(5);
        assert_eq!(r.leading_term(&c).unwrap(), (Monomial::one(2), 5));
        assert_eq!(r.leading_term(&r.add(&x, &y)).unwrap().0, Monomial::var(2, 0));
        assert_eq!(r.leading_term(&r.zero()), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn ring_mismatch() {
        let r = ring2();
        let r3 = PolyRing::with_vars(3, PrimeField::default()).unwrap();
        assert_eq!(r.arith(ArithOp::Add, &r.var(0), &r3.var(0)), Err(AlgebraError::RingMismatch));
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(PolyRing::new(&["x", "x"], PrimeField::default(), TermOrder::GrevLex).is_err());
    }
}
