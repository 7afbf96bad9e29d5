//! Subquotient modules `A/B`, minimal graded free resolutions, `Ext` into
//! the ring, local cohomology socle ranks and the dimension filtration.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::groebner::{kernel, minimal_generators, ModuleGb};
use crate::hilbert::HilbertSeries;
use crate::ideal::{series_subquotient, Ideal};
use crate::module::{FreeModule, ModTerm, ModuleElement};
use crate::poly::{PolyRing, Polynomial};

/// The module `A/B` for ideals `B ⊆ A` of the ambient ring.
#[derive(Clone, Debug)]
pub struct Subquotient {
    a: Ideal,
    b: Ideal,
}

impl Subquotient {
    pub fn new(a: Ideal, b: Ideal) -> Result<Self> {
        if a.ring().nvars() != b.ring().nvars() {
            return Err(AlgebraError::RingMismatch);
        }
        if !a.contains_ideal(&b) {
            return Err(AlgebraError::NotContained);
        }
        Ok(Subquotient { a, b })
    }

    /// The cyclic module `S/J`.
    pub fn quotient_ring(j: &Ideal) -> Self {
        Subquotient { a: Ideal::unit(j.ring()), b: j.clone() }
    }

    pub fn ring(&self) -> &PolyRing {
        self.a.ring()
    }

    pub fn top(&self) -> &Ideal {
        &self.a
    }

    pub fn bottom(&self) -> &Ideal {
        &self.b
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        series_subquotient(&self.a, &self.b)
    }

    /// Krull dimension; `None` for the zero module.
    pub fn dim(&self) -> Result<Option<usize>> {
        Ok(self.hilbert_series()?.dimension())
    }

    pub fn is_zero(&self) -> bool {
        self.b.contains_ideal(&self.a)
    }

    pub fn length(&self) -> Result<u64> {
        self.hilbert_series()?.length()
    }

    /// `ann(A/B) = B : A`.
    pub fn annihilator(&self) -> Result<Ideal> {
        self.b.colon(&self.a)
    }
}

/// Minimal homogeneous generators of an ideal.
pub fn minimal_ideal_generators(i: &Ideal) -> Result<Vec<Polynomial>> {
    let m = FreeModule::ring_module(i.ring());
    let gens: Vec<ModuleElement> = i.gens().iter().map(|f| m.from_poly(f, 0)).collect();
    Ok(minimal_generators(&m, &gens, None)?.iter().map(|v| m.component(v, 0)).collect())
}

/// A graded free resolution `F_0 <- F_1 <- ... <- F_k` of a subquotient.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: PolyRing,
    /// Generators of `A` modulo `B`: the images of the basis of `F_0`.
    augmentation: Vec<Polynomial>,
    modules: Vec<FreeModule>,
    /// `maps[i]` lists the images in `F_i` of the basis of `F_{i+1}`.
    maps: Vec<Vec<ModuleElement>>,
}

impl Resolution {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    pub fn maps(&self) -> &[Vec<ModuleElement>] {
        &self.maps
    }

    pub fn augmentation(&self) -> &[Polynomial] {
        &self.augmentation
    }

    pub fn betti(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// Projective dimension; `None` for the zero module.
    pub fn length(&self) -> Option<usize> {
        if self.modules.is_empty() {
            None
        } else {
            Some(self.modules.len() - 1)
        }
    }

    /// No map has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().flatten().all(|v| v.terms().iter().all(|t| !t.mono.is_one()))
    }

    /// Consecutive composites vanish and the augmentation lands in `B`.
    pub fn is_complex(&self, m: &Subquotient) -> bool {
        let s = FreeModule::ring_module(&self.ring);
        let aug: Vec<ModuleElement> = self.augmentation.iter().map(|f| s.from_poly(f, 0)).collect();
        if let Some(first) = self.maps.first() {
            let f0 = &self.modules[0];
            for v in first {
                let img = f0.evaluate(v, &s, &aug);
                if !m.bottom().contains(&s.component(&img, 0)) {
                    return false;
                }
            }
        }
        for i in 1..self.maps.len() {
            let src = &self.modules[i];
            let tgt = &self.modules[i - 1];
            for v in &self.maps[i] {
                if !src.evaluate(v, tgt, &self.maps[i - 1]).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Minimal graded free resolution of `A/B`, built by taking minimal
/// generators of each successive kernel.
pub fn free_resolution(m: &Subquotient) -> Result<Resolution> {
    let ring = m.ring().clone();
    m.top().check_homogeneous()?;
    m.bottom().check_homogeneous()?;
    let s = FreeModule::ring_module(&ring);
    let base = ModuleGb::compute(&s, &m.bottom().gb().generators().iter().map(|f| s.from_poly(f, 0)).collect::<Vec<_>>())?;
    let gens: Vec<ModuleElement> = m.top().gens().iter().map(|f| s.from_poly(f, 0)).collect();
    let f0_gens = minimal_generators(&s, &gens, Some(&base))?;
    let mut res = Resolution {
        ring: ring.clone(),
        augmentation: f0_gens.iter().map(|v| s.component(v, 0)).collect(),
        modules: Vec::new(),
        maps: Vec::new(),
    };
    if f0_gens.is_empty() {
        return Ok(res);
    }
    let tw0: Vec<i32> = f0_gens.iter().map(|v| s.degree(v).unwrap()).collect();
    let (f0, mut ker) = kernel(&s, &f0_gens, &tw0, base.basis())?;
    res.modules.push(f0);
    loop {
        let cur = res.modules.last().unwrap().clone();
        let gens = minimal_generators(&cur, ker.basis(), None)?;
        if gens.is_empty() {
            break;
        }
        let tw: Vec<i32> = gens.iter().map(|v| cur.degree(v).unwrap()).collect();
        let (next, k) = kernel(&cur, &gens, &tw, &[])?;
        res.maps.push(gens);
        res.modules.push(next);
        ker = k;
        if res.modules.len() > ring.nvars() + 2 {
            return Err(AlgebraError::Internal("resolution longer than the number of variables".into()));
        }
    }
    Ok(res)
}

/// `depth(A/B)` by Auslander-Buchsbaum.
pub fn depth(m: &Subquotient) -> Result<usize> {
    let res = free_resolution(m)?;
    let pd = res.length().ok_or(AlgebraError::ZeroModule)?;
    Ok(m.ring().nvars() - pd)
}

/// `Ext^c(M, S)` as a subquotient `ker / im` of the dual free module
/// `F_c^*`.
#[derive(Clone, Debug)]
pub struct ExtModule {
    pub c: usize,
    pub module: FreeModule,
    /// Minimal generators of the kernel modulo the image.
    pub generators: Vec<ModuleElement>,
    pub image: ModuleGb,
}

impl ExtModule {
    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// `ann(ker / im)`, from one kernel computation into `F^k / im^k`.
    pub fn annihilator(&self) -> Result<Ideal> {
        let ring = self.module.ring();
        if self.is_zero() {
            return Ok(Ideal::unit(ring));
        }
        let r = self.module.rank();
        let k = self.generators.len();
        let mut tw = Vec::with_capacity(r * k);
        for g in &self.generators {
            let d = self.module.degree(g).unwrap();
            tw.extend(self.module.twists().iter().map(|t| t - d));
        }
        let target = FreeModule::top(ring, tw);
        let mut img_terms = Vec::new();
        for (j, g) in self.generators.iter().enumerate() {
            for t in g.terms() {
                img_terms.push(ModTerm { comp: t.comp + (j * r) as u32, ..*t });
            }
        }
        let img = target.from_terms(img_terms);
        let mut base = Vec::new();
        for j in 0..k {
            for b in self.image.basis() {
                base.push(self.module.shift_into(&target, b, j * r));
            }
        }
        let (src, ker) = kernel(&target, &[img], &[0], &base)?;
        let gens = ker.basis().iter().map(|v| src.component(v, 0)).collect();
        Ideal::new(ring, gens)
    }
}

fn dual(m: &FreeModule) -> FreeModule {
    FreeModule::top(m.ring(), m.twists().iter().map(|t| -t).collect())
}

/// Images of the basis of `F_c^*` under the transpose of `F_{c+1} -> F_c`.
fn transpose(src_dual: &FreeModule, tgt_dual: &FreeModule, images: &[ModuleElement]) -> Vec<ModuleElement> {
    let mut rows: Vec<Vec<ModTerm>> = vec![Vec::new(); src_dual.rank()];
    for (l, v) in images.iter().enumerate() {
        for t in v.terms() {
            rows[t.comp as usize].push(ModTerm { comp: l as u32, ..*t });
        }
    }
    rows.into_iter().map(|r| tgt_dual.from_terms(r)).collect()
}

/// All of `Ext^c(M, S)` for `c = 0..=n`, from a minimal resolution of `M`.
pub fn ext_modules(res: &Resolution) -> Result<Vec<ExtModule>> {
    let n = res.ring.nvars();
    let pd = match res.length() {
        Some(p) => p,
        None => return Ok(Vec::new()),
    };
    let duals: Vec<FreeModule> = res.modules.iter().map(dual).collect();
    let mut out = Vec::with_capacity(n + 1);
    for c in 0..=n {
        if c > pd {
            let fm = FreeModule::top(&res.ring, Vec::new());
            out.push(ExtModule { c, image: ModuleGb::empty(&fm), module: fm, generators: Vec::new() });
            continue;
        }
        let fc = &duals[c];
        let ker_gens: Vec<ModuleElement> = if c < pd {
            let rows = transpose(fc, &duals[c + 1], &res.maps[c]);
            let (_, k) = kernel(&duals[c + 1], &rows, fc.twists(), &[])?;
            k.basis().to_vec()
        } else {
            (0..fc.rank()).map(|i| fc.basis(i)).collect()
        };
        let image = if c == 0 {
            ModuleGb::empty(fc)
        } else {
            let rows = transpose(&duals[c - 1], fc, &res.maps[c - 1]);
            ModuleGb::compute(fc, &rows)?
        };
        let generators = minimal_generators(fc, &ker_gens, Some(&image))?;
        out.push(ExtModule { c, module: fc.clone(), generators, image });
    }
    Ok(out)
}

/// `μ(Ext^c(M, S))`.
pub fn ext_min_generators(c: usize, m: &Subquotient) -> Result<usize> {
    let res = free_resolution(m)?;
    let exts = ext_modules(&res)?;
    Ok(exts.get(c).map_or(0, |e| e.num_generators()))
}

/// Socle ranks `r_j = μ(Ext^{n-j}(M, S))` of the local cohomology of `M`,
/// for `j = 0..=dim M`.
pub fn r_invariants(m: &Subquotient) -> Result<Vec<usize>> {
    let d = m.dim()?.ok_or(AlgebraError::ZeroModule)?;
    let res = free_resolution(m)?;
    let exts = ext_modules(&res)?;
    let n = m.ring().nvars();
    Ok((0..=d).map(|j| exts[n - j].num_generators()).collect())
}

/// Precomputed `Ext^c(S/J, S)` annihilators, shared by the hulls of all
/// dimensions.
pub struct DualityData {
    j: Ideal,
    anns: Vec<Option<Ideal>>,
}

impl DualityData {
    pub fn new(j: &Ideal) -> Result<Self> {
        let res = free_resolution(&Subquotient::quotient_ring(j))?;
        let exts = ext_modules(&res)?;
        let mut anns = Vec::with_capacity(exts.len());
        for e in &exts {
            anns.push(if e.is_zero() { None } else { Some(e.annihilator()?) });
        }
        Ok(DualityData { j: j.clone(), anns })
    }

    /// Codimensions `c` with `Ext^c(S/J, S) ≠ 0`.
    pub fn nonzero(&self) -> Vec<usize> {
        (0..self.anns.len()).filter(|&c| self.anns[c].is_some()).collect()
    }

    /// Intersection of the primary components of dimension `≥ k`.
    pub fn hull(&self, k: usize) -> Result<Ideal> {
        let n = self.j.ring().nvars();
        let mut b: Option<Ideal> = None;
        for c in (n + 1).saturating_sub(k)..self.anns.len() {
            if let Some(a) = &self.anns[c] {
                b = Some(match b {
                    None => a.clone(),
                    Some(x) => x.intersect(a)?,
                });
            }
        }
        match b {
            None => Ok(self.j.reduced()),
            Some(b) => {
                let g = minimal_ideal_generators(&b)?;
                self.j.saturate(&Ideal::new(self.j.ring(), g)?)
            }
        }
    }
}

/// Intersection of the primary components of `J` of dimension at least
/// `k`: `J : b^∞` where `b` annihilates every `Ext^c(S/J, S)` with
/// `c > n - k`.
pub fn unmixed_hull(j: &Ideal, k: usize) -> Result<Ideal> {
    if j.is_unit() {
        return Err(AlgebraError::EmptyRing);
    }
    DualityData::new(j)?.hull(k)
}

/// `J = a_0 ⊊ a_1 ⊊ ... ⊊ a_ℓ = S` with `dim a_i / J = d_i`.
#[derive(Clone, Debug)]
pub struct DimensionFiltration {
    /// `a_0, ..., a_ℓ` as ideals of the ambient ring containing `J`.
    pub ideals: Vec<Ideal>,
    /// `d_1 < ... < d_ℓ`.
    pub dims: Vec<usize>,
    pub ell: usize,
}

impl DimensionFiltration {
    /// `Λ = {d_1, ..., d_ℓ}`.
    pub fn lambda(&self) -> &[usize] {
        &self.dims
    }

    /// The largest `i` with `d_i < j` (zero when there is none).
    pub fn slot(&self, j: usize) -> usize {
        (1..=self.ell).rev().find(|&i| self.dims[i - 1] < j).unwrap_or(0)
    }

    pub fn is_unmixed(&self) -> bool {
        self.ell == 1
    }
}

/// The dimension filtration of `S/J` from the hulls `u_0, ..., u_d`.
pub fn dimension_filtration(j: &Ideal) -> Result<DimensionFiltration> {
    if j.is_unit() {
        return Err(AlgebraError::EmptyRing);
    }
    let d = j.dim_quotient()?;
    let data = DualityData::new(j)?;
    let mut hulls: Vec<Ideal> = Vec::with_capacity(d + 2);
    for k in 0..=d {
        let h = match hulls.last() {
            Some(prev) if !changes(&data, j.ring().nvars(), k) => prev.clone(),
            _ => data.hull(k)?,
        };
        hulls.push(h);
    }
    hulls.push(Ideal::unit(j.ring()));
    if !hulls[0].equals(j) {
        return Err(AlgebraError::Internal("hull of dimension 0 differs from the ideal".into()));
    }
    let mut dims = Vec::new();
    let mut ideals = vec![j.reduced()];
    for k in 0..=d {
        if !hulls[k].equals(&hulls[k + 1]) {
            if !hulls[k + 1].contains_ideal(&hulls[k]) {
                return Err(AlgebraError::Internal("hull chain is not increasing".into()));
            }
            dims.push(k);
            ideals.push(hulls[k + 1].clone());
        }
    }
    let ell = dims.len();
    for i in 1..=ell {
        let dim = j.colon(&ideals[i])?.dim_quotient()?;
        if dim != dims[i - 1] {
            return Err(AlgebraError::Internal(alloc::format!(
                "filtration step {i} has dimension {dim}, expected {}",
                dims[i - 1]
            )));
        }
    }
    if dims.last() != Some(&d) {
        return Err(AlgebraError::Internal("top of the filtration misses dim S/J".into()));
    }
    Ok(DimensionFiltration { ideals, dims, ell })
}

/// Whether the hull can differ from the one at `k - 1`: only when
/// `Ext^{n-k+1}` is nonzero.
fn changes(data: &DualityData, n: usize, k: usize) -> bool {
    let c = n + 1 - k;
    data.anns.get(c).is_some_and(|a| a.is_some())
}

/// `dim M = depth M` (the zero module is not Cohen-Macaulay).
pub fn is_cohen_macaulay(m: &Subquotient) -> Result<bool> {
    let dim = m.dim()?.ok_or(AlgebraError::ZeroModule)?;
    Ok(depth(m)? == dim)
}

/// Every quotient `a_i / a_{i-1}` of the filtration is Cohen-Macaulay.
pub fn is_seq_cm_direct(f: &DimensionFiltration) -> Result<bool> {
    for i in 1..=f.ell {
        let c = Subquotient::new(f.ideals[i].clone(), f.ideals[i - 1].clone())?;
        if !is_cohen_macaulay(&c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::order::TermOrder;

    fn ring(names: &[&str]) -> PolyRing {
        PolyRing::new(names, PrimeField::default(), TermOrder::GrevLex).unwrap()
    }

    fn example() -> (PolyRing, Ideal) {
        let r = ring(&["x1", "x2", "x3", "y"]);
        let v = r.vars();
        let j = Ideal::new(&r, (0..3).map(|i| r.mul(&v[i], &v[3])).collect()).unwrap();
        (r, j)
    }

    #[test]
    fn koszul_betti() {
        let r = ring(&["x", "y"]);
        let m = Subquotient::quotient_ring(&Ideal::maximal(&r));
        let res = free_resolution(&m).unwrap();
        assert_eq!(res.betti(), vec![1, 2, 1]);
        assert!(res.is_minimal() && res.is_complex(&m));
        let s = Subquotient::quotient_ring(&Ideal::zero(&r));
        assert_eq!(free_resolution(&s).unwrap().betti(), vec![1]);
    }

    #[test]
    fn example_ring_homology() {
        let (_, j) = example();
        let m = Subquotient::quotient_ring(&j);
        let res = free_resolution(&m).unwrap();
        assert_eq!(res.length(), Some(3));
        assert!(res.is_complex(&m));
        assert_eq!(depth(&m).unwrap(), 1);
        assert_eq!(r_invariants(&m).unwrap(), vec![0, 1, 0, 1]);
        let f = dimension_filtration(&j).unwrap();
        assert_eq!(f.dims, vec![1, 3]);
        assert!(is_seq_cm_direct(&f).unwrap());
    }

    #[test]
    fn embedded_component_hull() {
        let r = ring(&["x", "y", "z"]);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let j = Ideal::new(&r, vec![r.mul(&x, &x), r.mul(&x, &y), r.mul(&x, &z)]).unwrap();
        assert!(unmixed_hull(&j, 0).unwrap().equals(&j));
        assert!(unmixed_hull(&j, 2).unwrap().equals(&Ideal::new(&r, vec![x.clone()]).unwrap()));
        let f = dimension_filtration(&j).unwrap();
        assert_eq!(f.dims, vec![0, 2]);
    }

    #[test]
    fn two_planes() {
        let r = ring(&["x", "y", "u", "v"]);
        let v = r.vars();
        let j = Ideal::new(&r, vec![
            r.mul(&v[0], &v[2]),
            r.mul(&v[0], &v[3]),
            r.mul(&v[1], &v[2]),
            r.mul(&v[1], &v[3]),
        ])
        .unwrap();
        let m = Subquotient::quotient_ring(&j);
        assert_eq!(depth(&m).unwrap(), 1);
        let f = dimension_filtration(&j).unwrap();
        assert_eq!(f.ell, 1);
        assert!(!is_seq_cm_direct(&f).unwrap());
        assert_eq!(r_invariants(&m).unwrap(), vec![0, 1, 2]);
    }
}
