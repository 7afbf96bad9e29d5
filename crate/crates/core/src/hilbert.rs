//! Hilbert series of graded quotients, computed on leading-term ideals.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;

/// `t^shift * numerator(t) / (1 - t)^pole_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Vec<i64>,
    pub shift: i32,
    pub pole_order: usize,
}

impl HilbertSeries {
    pub fn zero(pole_order: usize) -> Self {
        HilbertSeries { numerator: Vec::new(), shift: 0, pole_order }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.iter().all(|&c| c == 0)
    }

    fn trimmed(mut self) -> Self {
        while self.numerator.last() == Some(&0) {
            self.numerator.pop();
        }
        let lead = self.numerator.iter().take_while(|&&c| c == 0).count();
        if lead == self.numerator.len() {
            return HilbertSeries { numerator: Vec::new(), shift: 0, pole_order: self.pole_order };
        }
        self.numerator.drain(..lead);
        self.shift += lead as i32;
        self
    }

    /// Cancel `(1 - t)` as far as possible. The remaining pole order is the
    /// Krull dimension of the module (zero for the zero module).
    pub fn reduced(&self) -> HilbertSeries {
        let mut s = self.clone().trimmed();
        while s.pole_order > 0 && !s.numerator.is_empty() && s.numerator.iter().sum::<i64>() == 0 {
            // synthetic division by (1 - t)
            let mut q = Vec::with_capacity(s.numerator.len() - 1);
            let mut acc = 0i64;
            for &c in &s.numerator[..s.numerator.len() - 1] {
                acc += c;
                q.push(acc);
            }
            s.numerator = q;
            s.pole_order -= 1;
            s = s.trimmed();
        }
        if s.numerator.is_empty() {
            s.pole_order = 0;
        }
        s
    }

    /// Krull dimension; `None` for the zero module.
    pub fn dimension(&self) -> Option<usize> {
        let r = self.reduced();
        if r.numerator.is_empty() {
            None
        } else {
            Some(r.pole_order)
        }
    }

    /// Multiplicity: reduced numerator at `t = 1`.
    pub fn degree(&self) -> i64 {
        self.reduced().numerator.iter().sum()
    }

    /// Total length when finite.
    pub fn length(&self) -> Result<u64> {
        let r = self.reduced();
        if r.pole_order > 0 {
            return Err(AlgebraError::InfiniteLength { pole_order: r.pole_order });
        }
        let v: i64 = r.numerator.iter().sum();
        if v < 0 {
            return Err(AlgebraError::Internal("negative length".into()));
        }
        Ok(v as u64)
    }

    /// Dimension of the graded piece of degree `k`.
    pub fn coefficient(&self, k: i32) -> i64 {
        if self.pole_order == 0 {
            let idx = k - self.shift;
            return if idx >= 0 && (idx as usize) < self.numerator.len() {
                self.numerator[idx as usize]
            } else {
                0
            };
        }
        let mut total = 0i64;
        for (i, &c) in self.numerator.iter().enumerate() {
            let e = k - self.shift - i as i32;
            if e < 0 || c == 0 {
                continue;
            }
            total += c * binom_i64(e as i64 + self.pole_order as i64 - 1, self.pole_order as i64 - 1);
        }
        total
    }

    fn raised(&self, pole: usize) -> HilbertSeries {
        let mut num = self.numerator.clone();
        for _ in self.pole_order..pole {
            num = poly_mul(&num, &[1, -1]);
        }
        HilbertSeries { numerator: num, shift: self.shift, pole_order: pole }
    }

    fn combine(&self, other: &HilbertSeries, sign: i64) -> HilbertSeries {
        let pole = self.pole_order.max(other.pole_order);
        let a = self.raised(pole);
        let b = other.raised(pole);
        let lo = a.shift.min(b.shift);
        let hi = (a.shift + a.numerator.len() as i32).max(b.shift + b.numerator.len() as i32);
        let mut num = vec![0i64; (hi - lo).max(0) as usize];
        for (i, &c) in a.numerator.iter().enumerate() {
            num[(a.shift - lo) as usize + i] += c;
        }
        for (i, &c) in b.numerator.iter().enumerate() {
            num[(b.shift - lo) as usize + i] += sign * c;
        }
        HilbertSeries { numerator: num, shift: lo, pole_order: pole }.trimmed()
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, -1)
    }
}

pub(crate) fn binom_i64(n: i64, k: i64) -> i64 {
    if k < 0 || n < k || n < 0 {
        return if k == 0 && n == -1 { 1 } else { 0 };
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

/// Minimal generators of a monomial ideal, sorted by degree.
pub fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|k| k.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N(t)` with `HS(S/M) = N(t) / (1 - t)^n`, by pivot recursion.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    numerator_rec(minimize(gens.to_vec()))
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let n = gens[0].nvars();
    let mut used = 0u32;
    let mut disjoint = true;
    for g in &gens {
        let s = g.support();
        if used & s != 0 {
            disjoint = false;
            break;
        }
        used |= s;
    }
    if disjoint {
        let mut num = vec![1i64];
        for g in &gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            num = poly_mul(&num, &f);
        }
        return num;
    }
    // pivot on the variable occurring in the most non-pure-power generators
    let mut count = [0u32; crate::monomial::MAX_VARS];
    for g in &gens {
        let s = g.support();
        if s.count_ones() > 1 {
            for (i, c) in count.iter_mut().enumerate().take(n) {
                if s & (1 << i) != 0 {
                    *c += 1;
                }
            }
        }
    }
    let var = (0..n).max_by_key(|&i| (count[i], core::cmp::Reverse(i))).unwrap();
    let mut exps: Vec<u32> = gens
        .iter()
        .filter(|g| g.support().count_ones() > 1)
        .map(|g| g.exp(var))
        .filter(|&e| e > 0)
        .collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2].max(1);
    let pivot = Monomial::one(n).with_exp(var, e);

    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).copied().collect();
    plus.push(pivot);
    let quot: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let ge = g.exp(var);
            g.with_exp(var, ge.saturating_sub(e))
        })
        .collect();
    let mut a = numerator_rec(minimize(plus));
    let b = numerator_rec(minimize(quot));
    poly_add_shifted(&mut a, &b, e as usize);
    a
}

/// Hilbert series of `S/M` for a monomial ideal `M` in `n` variables.
pub fn monomial_series(n: usize, gens: &[Monomial]) -> HilbertSeries {
    HilbertSeries { numerator: hilbert_numerator(gens), shift: 0, pole_order: n }.trimmed()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn spec_example() {
        let hs = monomial_series(2, &[m(&[2, 0]), m(&[1, 1])]);
        assert_eq!(hs.numerator, vec![1, 0, -2, 1]);
        let vals: Vec<i64> = (0..5).map(|k| hs.coefficient(k)).collect();
        assert_eq!(vals, vec![1, 2, 1, 1, 1]);
        assert_eq!(hs.dimension(), Some(1));
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(monomial_series(3, &[]).numerator, vec![1]);
        assert!(monomial_series(3, &[m(&[0, 0, 0])]).is_zero());
    }

    #[test]
    fn artinian_length() {
        let hs = monomial_series(2, &[m(&[2, 0]), m(&[0, 2])]);
        assert_eq!(hs.length().unwrap(), 4);
        let hs = monomial_series(3, &[m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[3, 0, 0])]);
        assert_eq!(hs.dimension(), Some(1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom_i64(5, 2), 10);
        assert_eq!(binom_i64(2, 3), 0);
        assert_eq!(binom_i64(-1, 0), 1);
    }
}
