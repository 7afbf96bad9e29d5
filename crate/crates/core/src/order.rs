//! Monomial and module term orders.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::Result;
use crate::monomial::Monomial;

/// A monomial order on `k[x_0, ..., x_{n-1}]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Graded reverse lexicographic, `x_0 > x_1 > ...`.
    GrevLex,
    /// Pure lexicographic, `x_0 > x_1 > ...`.
    Lex,
    /// Block order eliminating the first `k` variables: grevlex on the
    /// first block, ties broken by grevlex on the rest.
    Elimination(usize),
}

impl TermOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            TermOrder::GrevLex => grevlex(a, b, 0, a.nvars()),
            TermOrder::Lex => a.cmp_lex(b),
            TermOrder::Elimination(k) => {
                grevlex(a, b, 0, k).then_with(|| grevlex(a, b, k, a.nvars()))
            }
        }
    }

    /// Checked comparison: errors when the monomials have different lengths.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        a.check_same_len(b)?;
        Ok(self.cmp(a, b))
    }
}

#[inline]
fn grevlex(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    let (da, db): (u32, u32) = if lo == 0 && hi == a.nvars() {
        (a.degree(), b.degree())
    } else {
        (
            ea[lo..hi].iter().map(|&e| e as u32).sum(),
            eb[lo..hi].iter().map(|&e| e as u32).sum(),
        )
    };
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (lo..hi).rev() {
        if ea[i] != eb[i] {
            return if ea[i] < eb[i] {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
    }
    Ordering::Equal
}

/// How components enter the comparison of module terms `m e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    /// Position over term; `e_0` is the largest position.
    PositionOverTerm,
    /// Term over position.
    TermOverPosition,
    /// Schreyer order induced by the leading monomials of the images of the
    /// basis vectors: `m e_i > m' e_j` iff `m lm_i > m' lm_j`, ties broken
    /// by `i < j`.
    Schreyer(Arc<[Monomial]>),
    /// Components `< split` dominate every term in components `>= split`;
    /// term over position inside each block. Used to read off kernels.
    BlockTop { split: u32 },
}

/// A term order on a free module `S^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub mono: TermOrder,
    pub kind: ModuleKind,
}

impl ModuleOrder {
    pub fn pot(mono: TermOrder) -> Self {
        ModuleOrder { mono, kind: ModuleKind::PositionOverTerm }
    }

    pub fn top(mono: TermOrder) -> Self {
        ModuleOrder { mono, kind: ModuleKind::TermOverPosition }
    }

    pub fn block_top(mono: TermOrder, split: usize) -> Self {
        ModuleOrder { mono, kind: ModuleKind::BlockTop { split: split as u32 } }
    }

    pub fn schreyer(mono: TermOrder, leads: Vec<Monomial>) -> Self {
        ModuleOrder { mono, kind: ModuleKind::Schreyer(leads.into()) }
    }

    #[inline]
    pub fn cmp(&self, ca: u32, a: &Monomial, cb: u32, b: &Monomial) -> Ordering {
        match &self.kind {
            ModuleKind::PositionOverTerm => cb.cmp(&ca).then_with(|| self.mono.cmp(a, b)),
            ModuleKind::TermOverPosition => self.mono.cmp(a, b).then_with(|| cb.cmp(&ca)),
            ModuleKind::Schreyer(leads) => {
                let sa = a.mul(&leads[ca as usize]);
                let sb = b.mul(&leads[cb as usize]);
                self.mono.cmp(&sa, &sb).then_with(|| cb.cmp(&ca))
            }
            ModuleKind::BlockTop { split } => {
                let (ba, bb) = (ca >= *split, cb >= *split);
                bb.cmp(&ba)
                    .then_with(|| self.mono.cmp(a, b))
                    .then_with(|| cb.cmp(&ca))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn grevlex_examples() {
        let o = TermOrder::GrevLex;
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // x z^... reverse lex tie break on the last variable
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn lex_examples() {
        let o = TermOrder::Lex;
        assert_eq!(o.cmp(&m(&[0, 5]), &m(&[1, 0])), Ordering::Less);
    }

    #[test]
    fn elimination_dominates_first_block() {
        let o = TermOrder::Elimination(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(TermOrder::GrevLex.compare(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn module_orders() {
        let pot = ModuleOrder::pot(TermOrder::GrevLex);
        assert_eq!(pot.cmp(0, &m(&[0, 0]), 1, &m(&[3, 0])), Ordering::Greater);
        let top = ModuleOrder::top(TermOrder::GrevLex);
        assert_eq!(top.cmp(0, &m(&[0, 0]), 1, &m(&[3, 0])), Ordering::Less);
        let sch = ModuleOrder::schreyer(TermOrder::GrevLex, alloc::vec![m(&[0, 2]), m(&[1, 0])]);
        // e_0 carries y^2, e_1 carries x: x e_1 = x^2 beats 1 e_0 = y^2
        assert_eq!(sch.cmp(0, &m(&[0, 0]), 1, &m(&[1, 0])), Ordering::Less);
    }
}
