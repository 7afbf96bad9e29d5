//! Dense exponent vectors with cached total degree.

use core::cmp::Ordering;
use core::fmt;

use crate::error::{AlgebraError, Result};

/// Hard cap on the number of ring variables (including auxiliary
/// elimination variables).
pub const MAX_VARS: usize = 12;

/// A monomial `x^a` in at most [`MAX_VARS`] variables.
///
/// Equality and hashing look at the exponents only; the ordering used for
/// polynomials comes from a [`crate::order::TermOrder`], never from `Ord`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
    len: u8,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        Monomial { exps: [0; MAX_VARS], deg: 0, len: n as u8 }
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(exps.len()));
        }
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            if e > u16::MAX as u32 {
                return Err(AlgebraError::Internal("exponent overflow".into()));
            }
            m.exps[i] = e as u16;
            m.deg += e;
        }
        Ok(m)
    }

    /// The variable `x_i` in an `n`-variable ring.
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Monomial::one(n);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.len as usize]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len, other.len);
        let mut m = *self;
        for i in 0..self.len as usize {
            m.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow in monomial product");
        }
        m.deg = self.deg + other.deg;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        (0..self.len as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut m = *other;
        for i in 0..self.len as usize {
            m.exps[i] = other.exps[i] - self.exps[i];
        }
        m.deg = other.deg - self.deg;
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut deg = 0;
        for i in 0..self.len as usize {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            deg += m.exps[i] as u32;
        }
        m.deg = deg;
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut deg = 0;
        for i in 0..self.len as usize {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            deg += m.exps[i] as u32;
        }
        m.deg = deg;
        m
    }

    /// True when the supports are disjoint.
    pub fn coprime(&self, other: &Monomial) -> bool {
        (0..self.len as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Bit `i` set iff `x_i` occurs.
    pub fn support(&self) -> u32 {
        let mut s = 0;
        for i in 0..self.len as usize {
            if self.exps[i] > 0 {
                s |= 1 << i;
            }
        }
        s
    }

    /// Coarse divisibility filter: if `a` divides `b` then
    /// `a.divmask() & !b.divmask() == 0`.
    #[inline]
    pub fn divmask(&self) -> u64 {
        let mut mask = 0u64;
        for i in 0..self.len as usize {
            let e = self.exps[i];
            let base = 4 * i;
            if e >= 1 {
                mask |= 1 << base;
            }
            if e >= 2 {
                mask |= 1 << (base + 1);
            }
            if e >= 4 {
                mask |= 1 << (base + 2);
            }
            if e >= 8 {
                mask |= 1 << (base + 3);
            }
        }
        mask
    }

    /// Re-embed into a ring with `n` variables, placing this monomial's
    /// variables starting at `offset`.
    pub fn embed(&self, n: usize, offset: usize) -> Monomial {
        let mut m = Monomial::one(n);
        for i in 0..self.len as usize {
            m.exps[i + offset] = self.exps[i];
        }
        m.deg = self.deg;
        m
    }

    /// Drop the first `k` variables (which must have exponent zero).
    pub fn drop_leading(&self, k: usize) -> Monomial {
        let n = self.len as usize - k;
        let mut m = Monomial::one(n);
        for i in 0..n {
            m.exps[i] = self.exps[i + k];
        }
        m.deg = self.deg;
        m
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut m = *self;
        m.deg = m.deg - m.exps[i] as u32 + e;
        m.exps[i] = e as u16;
        m
    }

    /// Raw exponent array, usable as a map key.
    #[inline]
    pub fn key(&self) -> [u16; MAX_VARS] {
        self.exps
    }

    /// Checked length comparison used by the public comparison entry point.
    pub fn check_same_len(&self, other: &Monomial) -> Result<()> {
        if self.len != other.len {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.len as usize,
                found: other.len as usize,
            });
        }
        Ok(())
    }

    /// Lexicographic comparison of the raw exponent vectors, first variable
    /// most significant.
    #[inline]
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn arithmetic() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.mul(&b), m(&[3, 3, 1]));
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 0, 0]));
        assert!(m(&[1, 0, 1]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(m(&[1, 0, 1]).quotient_of(&a), m(&[1, 0, 0]));
        assert!(m(&[1, 0, 0]).coprime(&m(&[0, 4, 4])));
    }

    #[test]
    fn divmask_filter_is_sound() {
        let a = m(&[3, 1, 0, 9]);
        let b = m(&[4, 1, 2, 9]);
        assert!(a.divides(&b));
        assert_eq!(a.divmask() & !b.divmask(), 0);
    }

    #[test]
    fn rejects_oversized() {
        assert!(Monomial::from_exponents(&[0; MAX_VARS + 1]).is_err());
    }
}
