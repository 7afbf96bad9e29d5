//! Hilbert-Samuel coefficients, index of reducibility and fiber-cone
//! counts, with exact polynomial fits in the binomial basis.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::hilbert::binom_i64;
use crate::homology::Subquotient;
use crate::ideal::{length_subquotient, linear_basis, Ideal};
use crate::poly::Polynomial;

/// Stabilisation window used when none is given.
pub const DEFAULT_WINDOW: usize = 3;

/// Default cap on `n` for fitted sequences.
pub const DEFAULT_N_MAX: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FitOptions {
    /// Largest `n` whose value may be computed.
    pub n_max: usize,
    /// Extra points a fit must reproduce before it is trusted.
    pub window: usize,
    /// Values for `n = 0..=n_min` are always computed.
    pub n_min: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions { n_max: DEFAULT_N_MAX, window: DEFAULT_WINDOW, n_min: 0 }
    }
}

/// A sequence `v_0, v_1, ...` with the coefficients `c_0..c_s` of
/// `v_n = Σ (-1)^i c_i binom(n + s - i, s - i)` for `n ≥ stable_from`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittedSequence {
    pub values: Vec<u64>,
    pub coefficients: Vec<i64>,
    pub stable_from: usize,
    pub degree: usize,
}

impl FittedSequence {
    pub fn predict(&self, n: usize) -> i64 {
        eval_fit(&self.coefficients, self.degree, n)
    }
}

fn eval_fit(c: &[i64], s: usize, n: usize) -> i64 {
    let mut v = 0i64;
    for (i, &ci) in c.iter().enumerate() {
        let b = binom_i64((n + s - i) as i64, (s - i) as i64);
        v += if i % 2 == 0 { ci * b } else { -ci * b };
    }
    v
}

/// Solve for `c` on the points `k..=k+s`; `None` if not integral.
fn solve_window(values: &[u64], s: usize, k: usize) -> Option<Vec<i64>> {
    let m = s + 1;
    let mut a: Vec<Vec<i128>> = (0..m)
        .map(|r| {
            let n = k + r;
            let mut row: Vec<i128> = (0..m)
                .map(|i| {
                    let b = binom_i64((n + s - i) as i64, (s - i) as i64) as i128;
                    if i % 2 == 0 { b } else { -b }
                })
                .collect();
            row.push(values[n] as i128);
            row
        })
        .collect();
    // Bareiss fraction-free elimination
    let mut prev: i128 = 1;
    for col in 0..m {
        let piv = (col..m).find(|&r| a[r][col] != 0)?;
        a.swap(col, piv);
        for r in col + 1..m {
            for c in col + 1..=m {
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[col][col];
    }
    let mut x = vec![0i128; m];
    for r in (0..m).rev() {
        let mut rhs = a[r][m];
        for c in r + 1..m {
            rhs -= a[r][c] * x[c];
        }
        if rhs % a[r][r] != 0 {
            return None;
        }
        x[r] = rhs / a[r][r];
    }
    Some(x.into_iter().map(|v| v as i64).collect())
}

/// First `k` whose fit on `k..=k+s` reproduces every later value, with at
/// least `window` points beyond the fitted ones.
pub fn fit_values(values: &[u64], s: usize, window: usize) -> Option<FittedSequence> {
    let mut k = 0;
    while k + s + window < values.len() {
        if let Some(c) = solve_window(values, s, k) {
            if (k..values.len()).all(|n| eval_fit(&c, s, n) == values[n] as i64) {
                return Some(FittedSequence { values: values.to_vec(), coefficients: c, stable_from: k, degree: s });
            }
        }
        k += 1;
    }
    None
}

/// Compute values lazily until a fit of degree `s` stabilises.
pub fn fit_sequence<F>(mut value: F, s: usize, opts: FitOptions) -> Result<FittedSequence>
where
    F: FnMut(usize) -> Result<u64>,
{
    let mut values: Vec<u64> = Vec::new();
    for n in 0..=opts.n_max {
        values.push(value(n)?);
        if n < opts.n_min {
            continue;
        }
        if let Some(f) = fit_values(&values, s, opts.window) {
            return Ok(f);
        }
    }
    Err(AlgebraError::NotStabilized { n_max: opts.n_max })
}

/// Products `I^k`, reduced modulo `base` and pruned to a linear basis at
/// each step.
pub struct PowerSequence<'a> {
    i: &'a Ideal,
    base: &'a Ideal,
    cur: Vec<Polynomial>,
    k: u32,
}

impl<'a> PowerSequence<'a> {
    pub fn new(i: &'a Ideal, base: &'a Ideal) -> Self {
        PowerSequence { i, base, cur: vec![i.ring().one()], k: 0 }
    }

    /// Generators of `I^k` modulo `base`.
    pub fn power(&mut self, k: u32) -> &[Polynomial] {
        let ring = self.i.ring();
        while self.k < k {
            let mut next = Vec::with_capacity(self.cur.len() * self.i.gens().len());
            for a in &self.cur {
                for b in self.i.gens() {
                    let p = self.base.normal_form(&ring.mul(a, b));
                    if !p.is_zero() {
                        next.push(p);
                    }
                }
            }
            self.cur = linear_basis(ring, next);
            self.k += 1;
        }
        &self.cur
    }
}

/// Preimage of `(q + J) : m`.
pub fn socle_ideal(q: &Ideal, j: &Ideal) -> Result<Ideal> {
    q.sum(j)?.colon(&Ideal::maximal(q.ring()))
}

/// `I^k A + B` for the subquotient `A/B`.
fn power_times(powers: &mut PowerSequence<'_>, k: u32, m: &Subquotient) -> Result<Ideal> {
    let ring = m.ring();
    let pk = powers.power(k).to_vec();
    let mut gens = Vec::with_capacity(pk.len() * m.top().gens().len());
    for a in &pk {
        for b in m.top().gens() {
            gens.push(ring.mul(a, b));
        }
    }
    let gens = linear_basis(ring, gens);
    m.bottom().extend(&gens)
}

/// `ℓ(A / (I^{n+1} A + B))` for `n = 0..` with the degree-`dim M` fit.
pub fn hilbert_samuel(i: &Ideal, m: &Subquotient, opts: FitOptions) -> Result<FittedSequence> {
    let s = m.dim()?.ok_or(AlgebraError::ZeroModule)?;
    let base = m.bottom().clone();
    let mut powers = PowerSequence::new(i, &base);
    let first = power_times(&mut powers, 1, m)?;
    match length_subquotient(m.top(), &first) {
        Ok(_) => {}
        Err(AlgebraError::InfiniteLength { .. }) => return Err(AlgebraError::NotMPrimary),
        Err(e) => return Err(e),
    }
    fit_sequence(
        |n| {
            let p = power_times(&mut powers, n as u32 + 1, m)?;
            length_subquotient(m.top(), &p)
        },
        s,
        opts,
    )
}

/// `ir_M(I) = ℓ(((I A + B) : m) ∩ A / (I A + B))` for `M = A/B`.
pub fn index_of_reducibility(i: &Ideal, m: &Subquotient) -> Result<u64> {
    let mut powers = PowerSequence::new(i, m.bottom());
    let n = power_times(&mut powers, 1, m)?;
    socle_length(&n, m.top())
}

/// `ℓ(((N : m) ∩ A) / N)`.
fn socle_length(n: &Ideal, a: &Ideal) -> Result<u64> {
    let mut c = n.colon(&Ideal::maximal(n.ring()))?;
    if !a.is_unit() {
        c = c.intersect(a)?;
    }
    length_subquotient(&c, n).map_err(|e| match e {
        AlgebraError::InfiniteLength { .. } => AlgebraError::NotMPrimary,
        e => e,
    })
}

/// `ir_R(q^{n+1})` for `R = S/J` and `n = 0..`, fitted in degree `d - 1`.
pub fn ir_polynomial(q: &Ideal, j: &Ideal, opts: FitOptions) -> Result<FittedSequence> {
    let d = j.dim_quotient()?;
    if d == 0 {
        return Err(AlgebraError::NotMPrimary);
    }
    let mut powers = PowerSequence::new(q, j);
    let unit = Ideal::unit(j.ring());
    fit_sequence(
        |n| {
            let gens = powers.power(n as u32 + 1).to_vec();
            let qn = j.extend(&gens)?;
            socle_length(&qn, &unit)
        },
        d - 1,
        opts,
    )
}

/// `ir_R(q^{n+1})` for `n = 0..=n_max`, unfitted.
pub fn ir_values(q: &Ideal, j: &Ideal, n_max: usize) -> Result<Vec<u64>> {
    let mut powers = PowerSequence::new(q, j);
    let unit = Ideal::unit(j.ring());
    (0..=n_max)
        .map(|n| {
            let gens = powers.power(n as u32 + 1).to_vec();
            socle_length(&j.extend(&gens)?, &unit)
        })
        .collect()
}

/// `μ(I^{n+1} R) = ℓ((I^{n+1} + J) / (m I^{n+1} + J))` for `n = 0..`,
/// fitted in degree `d - 1`.
pub fn fiber_function(i: &Ideal, j: &Ideal, opts: FitOptions) -> Result<FittedSequence> {
    let d = j.dim_quotient()?;
    if d == 0 {
        return Err(AlgebraError::NotMPrimary);
    }
    let ring = j.ring();
    let m = Ideal::maximal(ring);
    let mut powers = PowerSequence::new(i, j);
    fit_sequence(
        |n| {
            let gens = powers.power(n as u32 + 1).to_vec();
            let top = j.extend(&gens)?;
            let mut low = Vec::new();
            for g in &gens {
                for x in m.gens() {
                    low.push(ring.mul(x, g));
                }
            }
            let bottom = j.extend(&linear_basis(ring, low))?;
            length_subquotient(&top, &bottom)
        },
        d - 1,
        opts,
    )
}

/// `e_0(m; R)`.
pub fn multiplicity_e0_m(j: &Ideal) -> Result<i64> {
    let hs = j.hilbert_series()?;
    if hs.dimension().is_none() {
        return Err(AlgebraError::EmptyRing);
    }
    Ok(hs.degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::order::TermOrder;
    use crate::poly::PolyRing;

    fn ring(names: &[&str]) -> PolyRing {
        PolyRing::new(names, PrimeField::default(), TermOrder::GrevLex).unwrap()
    }

    #[test]
    fn fit_recovers_binomials() {
        let vals: Vec<u64> = (0..8).map(|n| (4 * binom_i64(n + 2, 2)) as u64).collect();
        let f = fit_values(&vals, 2, 3).unwrap();
        assert_eq!(f.coefficients, vec![4, 0, 0]);
        assert_eq!(f.stable_from, 0);
        let vals: Vec<u64> = (0..8).map(|n| binom_i64(2 * n + 3, 2) as u64).collect();
        assert_eq!(fit_values(&vals, 2, 3).unwrap().coefficients, vec![4, 1, 0]);
    }

    #[test]
    fn regular_plane() {
        let r = ring(&["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let j = Ideal::zero(&r);
        let rr = Subquotient::quotient_ring(&j);
        let q = Ideal::new(&r, vec![r.mul(&x, &x), r.mul(&y, &y)]).unwrap();
        let e = hilbert_samuel(&q, &rr, FitOptions::default()).unwrap();
        assert_eq!(e.coefficients, vec![4, 0, 0]);
        let i = socle_ideal(&q, &j).unwrap();
        let e = hilbert_samuel(&i, &rr, FitOptions::default()).unwrap();
        assert_eq!(e.coefficients, vec![4, 1, 0]);
        assert_eq!(index_of_reducibility(&q, &rr).unwrap(), 1);
        let m = Ideal::maximal(&r);
        assert_eq!(index_of_reducibility(&m.power(3), &rr).unwrap(), 3);
        let g = ir_polynomial(&m, &j, FitOptions::default()).unwrap();
        assert_eq!(g.coefficients, vec![1, 0]);
        let f = fiber_function(&q, &j, FitOptions::default()).unwrap();
        assert_eq!(f.coefficients[0], 1);
    }

    #[test]
    fn line_and_two_lines() {
        let r = ring(&["x"]);
        let m = Ideal::maximal(&r);
        let e = hilbert_samuel(&m, &Subquotient::quotient_ring(&Ideal::zero(&r)), FitOptions::default()).unwrap();
        assert_eq!(e.coefficients, vec![1, 0]);
        let r = ring(&["x", "y", "z"]);
        let j = Ideal::new(&r, vec![r.mul(&r.var(0), &r.var(1))]).unwrap();
        assert_eq!(multiplicity_e0_m(&j).unwrap(), 2);
    }
}
