//! Primary decomposition of monomial ideals by splitting, used as an
//! independent check on the Ext-based dimension filtration.

use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::hilbert::minimize;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::PolyRing;

/// A monomial ideal as its minimal generators.
pub type MonomialSet = Vec<Monomial>;

fn is_pure_power(m: &Monomial) -> bool {
    m.support().count_ones() == 1
}

/// `a ⊆ b` for monomial ideals.
pub fn monomial_contains(b: &[Monomial], a: &[Monomial]) -> bool {
    a.iter().all(|g| b.iter().any(|h| h.divides(g)))
}

pub fn monomial_intersect(a: &[Monomial], b: &[Monomial]) -> MonomialSet {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.lcm(y));
        }
    }
    minimize(out)
}

fn same(a: &[Monomial], b: &[Monomial]) -> bool {
    monomial_contains(a, b) && monomial_contains(b, a)
}

fn irreducible(gens: MonomialSet, out: &mut Vec<MonomialSet>) {
    let gens = minimize(gens);
    let Some(g) = gens.iter().find(|g| !is_pure_power(g)).copied() else {
        out.push(gens);
        return;
    };
    let var = (0..g.nvars()).find(|&i| g.exp(i) > 0).unwrap();
    let power = Monomial::one(g.nvars()).with_exp(var, g.exp(var));
    let rest = g.with_exp(var, 0);
    let mut left = gens.clone();
    left.push(power);
    let mut right = gens;
    right.push(rest);
    irreducible(left, out);
    irreducible(right, out);
}

/// Irredundant primary decomposition of a monomial ideal with the Krull
/// dimension of each component, sorted by decreasing dimension.
pub fn primary_decomposition(n: usize, gens: &[Monomial]) -> Vec<(MonomialSet, usize)> {
    let gens = minimize(gens.to_vec());
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    if gens.is_empty() {
        return alloc::vec![(Vec::new(), n)];
    }
    let mut irr = Vec::new();
    irreducible(gens.clone(), &mut irr);
    // drop components containing another one
    let mut kept: Vec<MonomialSet> = Vec::new();
    for (i, c) in irr.iter().enumerate() {
        let redundant = irr.iter().enumerate().any(|(k, o)| {
            k != i && monomial_contains(c, o) && (!same(c, o) || k < i)
        });
        if !redundant {
            kept.push(c.clone());
        }
    }
    // merge components with the same radical
    let mut groups: Vec<(u32, MonomialSet)> = Vec::new();
    for c in kept {
        let rad = c.iter().fold(0u32, |s, m| s | m.support());
        match groups.iter_mut().find(|g| g.0 == rad) {
            Some(g) => g.1 = monomial_intersect(&g.1, &c),
            None => groups.push((rad, c)),
        }
    }
    // final irredundancy check
    let mut i = 0;
    while i < groups.len() && groups.len() > 1 {
        let mut others: Option<MonomialSet> = None;
        for (k, g) in groups.iter().enumerate() {
            if k != i {
                others = Some(match others {
                    None => g.1.clone(),
                    Some(o) => monomial_intersect(&o, &g.1),
                });
            }
        }
        if others.is_some_and(|o| same(&o, &gens)) {
            groups.remove(i);
        } else {
            i += 1;
        }
    }
    let mut out: Vec<(MonomialSet, usize)> = groups
        .into_iter()
        .map(|(rad, c)| (c, n - rad.count_ones() as usize))
        .collect();
    out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.len().cmp(&b.0.len())));
    out
}

fn monomials_of(j: &Ideal) -> Result<MonomialSet> {
    let mut out = Vec::new();
    for g in j.gens() {
        if !g.is_monomial() {
            return Err(AlgebraError::NotMonomial);
        }
        out.push(g.terms()[0].mono);
    }
    Ok(out)
}

fn to_ideal(ring: &PolyRing, ms: &[Monomial]) -> Result<Ideal> {
    Ideal::new(ring, ms.iter().map(|m| ring.monomial(*m, 1)).collect())
}

/// Primary components of a monomial ideal with their dimensions.
pub fn monomial_primary_oracle(j: &Ideal) -> Result<Vec<(Ideal, usize)>> {
    let ms = monomials_of(j)?;
    primary_decomposition(j.ring().nvars(), &ms)
        .into_iter()
        .map(|(c, d)| Ok((to_ideal(j.ring(), &c)?, d)))
        .collect()
}

/// The dimension filtration assembled from a monomial decomposition:
/// `(dims, ideals)` with `ideals[0] = J`, `ideals[i]` the intersection of
/// the components of dimension `> d_i`, and the last ideal the unit ideal.
pub fn oracle_filtration(j: &Ideal) -> Result<(Vec<usize>, Vec<Ideal>)> {
    let ms = minimize(monomials_of(j)?);
    let n = j.ring().nvars();
    let comps = primary_decomposition(n, &ms);
    if comps.is_empty() {
        return Err(AlgebraError::EmptyRing);
    }
    let mut dims: Vec<usize> = comps.iter().map(|c| c.1).collect();
    dims.sort_unstable();
    dims.dedup();
    let mut ideals = alloc::vec![to_ideal(j.ring(), &ms)?];
    for &d in &dims {
        let mut acc: Option<MonomialSet> = None;
        for (c, cd) in &comps {
            if *cd > d {
                acc = Some(match acc {
                    None => c.clone(),
                    Some(a) => monomial_intersect(&a, c),
                });
            }
        }
        ideals.push(match acc {
            None => Ideal::unit(j.ring()),
            Some(a) => to_ideal(j.ring(), &a)?,
        });
    }
    Ok((dims, ideals))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn splits() {
        let d = primary_decomposition(2, &[m(&[1, 1])]);
        assert_eq!(d.len(), 2);
        let d = primary_decomposition(4, &[m(&[1, 0, 0, 1]), m(&[0, 1, 0, 1]), m(&[0, 0, 1, 1])]);
        assert_eq!(d, alloc::vec![(alloc::vec![m(&[0, 0, 0, 1])], 3), (alloc::vec![m(&[1, 0, 0, 0]), m(&[0, 1, 0, 0]), m(&[0, 0, 1, 0])], 1)]);
        let d = primary_decomposition(2, &[m(&[2, 0]), m(&[1, 1])]);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0], (alloc::vec![m(&[1, 0])], 1));
        assert!(same(&d[1].0, &[m(&[2, 0]), m(&[0, 1])]));
    }

    #[test]
    fn intersection_recovers_input() {
        let gens = [m(&[2, 1, 0]), m(&[0, 2, 1]), m(&[1, 0, 3])];
        let d = primary_decomposition(3, &gens);
        let mut acc = d[0].0.clone();
        for c in &d[1..] {
            acc = monomial_intersect(&acc, &c.0);
        }
        assert!(same(&acc, &gens));
    }
}
