//! Systems of parameters, distinguished with respect to the dimension
//! filtration, drawn at a prescribed `m`-adic depth.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{AlgebraError, Result};
use crate::homology::DimensionFiltration;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial, Term};

/// Homogeneous `x_1, ..., x_d` with `dim R/(x) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterSystem {
    pub elements: Vec<Polynomial>,
    /// Every `x_j` lies in `m^adic_depth`.
    pub adic_depth: u32,
    pub distinguished: bool,
    pub seed: u64,
}

impl ParameterSystem {
    /// `q = (x_1, ..., x_d)` as an ideal of the ambient ring.
    pub fn ideal(&self, ring: &PolyRing) -> Result<Ideal> {
        Ideal::new(ring, self.elements.clone())
    }

    /// `q_j = (x_1, ..., x_j)`.
    pub fn prefix(&self, ring: &PolyRing, j: usize) -> Result<Ideal> {
        Ideal::new(ring, self.elements[..j].to_vec())
    }

    /// `b = (x_{d_{ℓ-1}+1}, ..., x_d)`, the parameters that kill the
    /// unmixed component.
    pub fn tail(&self, ring: &PolyRing, f: &DimensionFiltration) -> Result<Ideal> {
        let start = if f.ell >= 2 { f.dims[f.ell - 2] } else { 0 };
        Ideal::new(ring, self.elements[start..].to_vec())
    }

    /// `x_1^{n_1}, ..., x_d^{n_d}`.
    pub fn powered(&self, ring: &PolyRing, exps: &[u32]) -> ParameterSystem {
        let elements: Vec<Polynomial> =
            self.elements.iter().zip(exps).map(|(x, &e)| ring.pow(x, e)).collect();
        let depth = elements.iter().filter_map(|x| x.order()).min().unwrap_or(0);
        ParameterSystem { elements, adic_depth: depth, distinguished: self.distinguished, seed: self.seed }
    }
}

/// `dim S/(J + (xs)) = 0` with `|xs| = dim S/J`.
pub fn is_system_of_parameters(xs: &[Polynomial], j: &Ideal) -> Result<bool> {
    let d = j.dim_quotient()?;
    if xs.len() != d {
        return Err(AlgebraError::WrongParameterCount { expected: d, found: xs.len() });
    }
    let q = j.extend(xs)?;
    if q.is_unit() {
        return Ok(false);
    }
    Ok(q.dim_quotient()? == 0)
}

/// `x_j a_i ⊆ J` whenever `d_i < j`.
pub fn is_distinguished(xs: &[Polynomial], j: &Ideal, f: &DimensionFiltration) -> Result<bool> {
    let ring = j.ring();
    for i in 1..f.ell {
        let di = f.dims[i - 1];
        for x in xs.iter().skip(di) {
            for g in f.ideals[i].gens() {
                if !j.contains(&ring.mul(x, g)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Least degree of a term over all generators.
pub fn adic_order(q: &Ideal) -> Result<u32> {
    q.order().ok_or(AlgebraError::ZeroPolynomial)
}

pub(crate) fn monomials_of_degree(n: usize, k: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::from_exponents(cur).expect("within bounds"));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(n, i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut cur = vec![0u32; n];
    rec(n, 0, k, &mut cur, &mut out);
    out
}

fn random_form(ring: &PolyRing, k: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let p = ring.field().characteristic();
    let terms = monomials_of_degree(ring.nvars(), k)
        .into_iter()
        .map(|mono| Term { mono, coeff: rng.next_u32() % p })
        .filter(|t| t.coeff != 0)
        .collect();
    ring.from_terms(terms)
}

/// A random homogeneous element of `gens` of degree `deg`, reduced mod `J`.
fn random_element(
    ring: &PolyRing,
    gens: &[Polynomial],
    deg: u32,
    j: &Ideal,
    rng: &mut ChaCha8Rng,
) -> Polynomial {
    let mut x = ring.zero();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > deg {
            continue;
        }
        let c = random_form(ring, deg - dg, rng);
        x = ring.add(&x, &ring.mul(&c, g));
    }
    j.normal_form(&x)
}

/// Draw `x_j` from `J : a_{i(j)}` with `i(j) = max {i : d_i < j}` until the
/// tuple is a distinguished system of parameters.
pub fn random_distinguished_sop(
    j: &Ideal,
    f: &DimensionFiltration,
    adic_depth: u32,
    seed: u64,
    max_tries: usize,
) -> Result<ParameterSystem> {
    let ring = j.ring();
    let d = j.dim_quotient()?;
    let adic_depth = adic_depth.max(1);
    // annihilators of the filtration steps, by slot
    let mut anns: Vec<Option<(Vec<Polynomial>, u32)>> = vec![None; f.ell + 1];
    let mut pools: Vec<usize> = Vec::with_capacity(d);
    for jj in 1..=d {
        let i = f.slot(jj);
        if anns[i].is_none() {
            let gens = if i == 0 { vec![ring.one()] } else { j.colon(&f.ideals[i])?.reduced().gens().to_vec() };
            let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !j.contains(g)).collect();
            let low = gens.iter().filter_map(|g| g.degree()).min().unwrap_or(adic_depth);
            anns[i] = Some((gens, low.max(adic_depth)));
        }
        pools.push(i);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last: Vec<Polynomial> = Vec::new();
    for _ in 0..max_tries.max(1) {
        let xs: Vec<Polynomial> = pools
            .iter()
            .map(|&i| {
                let (gens, deg) = anns[i].as_ref().expect("filled above");
                random_element(ring, gens, *deg, j, &mut rng)
            })
            .collect();
        if xs.iter().any(|x| x.is_zero()) {
            last = xs;
            continue;
        }
        if is_system_of_parameters(&xs, j)? && is_distinguished(&xs, j, f)? {
            return Ok(ParameterSystem { elements: xs, adic_depth, distinguished: true, seed });
        }
        last = xs;
    }
    Err(AlgebraError::SopExhausted { slot: first_bad_slot(j, &last, d)?, tries: max_tries })
}

/// The first `k` with `dim S/(J + (x_1..x_k)) ≠ d - k`.
fn first_bad_slot(j: &Ideal, xs: &[Polynomial], d: usize) -> Result<usize> {
    for k in 1..=xs.len() {
        if xs[k - 1].is_zero() {
            return Ok(k);
        }
        let q = j.extend(&xs[..k])?;
        if q.is_unit() || q.dim_quotient()? != d - k {
            return Ok(k);
        }
    }
    Ok(d.max(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::homology::dimension_filtration;
    use crate::order::TermOrder;

    fn example() -> (PolyRing, Ideal) {
        let r = PolyRing::new(&["x1", "x2", "x3", "y"], PrimeField::default(), TermOrder::GrevLex).unwrap();
        let y = r.var(3);
        let j = Ideal::new(&r, (0..3).map(|i| r.mul(&r.var(i), &y)).collect()).unwrap();
        (r, j)
    }

    #[test]
    fn sop_membership() {
        let (r, j) = example();
        let xs = vec![r.add(&r.var(0), &r.var(3)), r.var(1), r.var(2)];
        assert!(is_system_of_parameters(&xs, &j).unwrap());
        let f = dimension_filtration(&j).unwrap();
        assert!(is_distinguished(&xs, &j, &f).unwrap());
        let swapped = vec![xs[1].clone(), xs[0].clone(), xs[2].clone()];
        assert!(!is_distinguished(&swapped, &j, &f).unwrap());
        assert!(!is_system_of_parameters(&r.vars()[..3], &j).unwrap());
        assert!(matches!(
            is_system_of_parameters(&r.vars()[..2], &j),
            Err(AlgebraError::WrongParameterCount { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn random_sops_verify() {
        let (r, j) = example();
        let f = dimension_filtration(&j).unwrap();
        for depth in 1..=2 {
            let s = random_distinguished_sop(&j, &f, depth, 7, 20).unwrap();
            assert!(s.elements.iter().all(|x| x.order() == Some(depth)));
            assert!(is_system_of_parameters(&s.elements, &j).unwrap());
            assert!(is_distinguished(&s.elements, &j, &f).unwrap());
            let p = s.powered(&r, &[2, 1, 3]);
            assert!(is_distinguished(&p.elements, &j, &f).unwrap());
            assert!(is_system_of_parameters(&p.elements, &j).unwrap());
        }
    }

    #[test]
    fn orders() {
        let r = PolyRing::new(&["x", "y"], PrimeField::default(), TermOrder::GrevLex).unwrap();
        let (x, y) = (r.var(0), r.var(1));
        let q = Ideal::new(&r, vec![r.pow(&x, 2), r.pow(&y, 3)]).unwrap();
        assert_eq!(adic_order(&q).unwrap(), 2);
        assert_eq!(adic_order(&Ideal::maximal(&r)).unwrap(), 1);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
    }
}
