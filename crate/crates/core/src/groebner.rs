//! Buchberger's algorithm for submodules of graded free modules, with the
//! ideal case as rank one.
//!
//! Pairs are processed by increasing sugar, ties by the module order of the
//! lcm, and pruned with the Gebauer-Moeller criteria. Reductions run through
//! a geobucket so long reduction chains stay linear per step.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{AlgebraError, Result};
use crate::module::{FreeModule, ModTerm, ModuleElement};
use crate::monomial::Monomial;
use crate::order::ModuleOrder;
use crate::poly::{PolyRing, Polynomial, Term};

#[derive(Clone, Debug)]
struct Lead {
    comp: u32,
    mono: Monomial,
    mask: u64,
    len: u32,
    active: bool,
}

/// Index of leading terms for divisor lookup.
#[derive(Clone, Debug, Default)]
struct LeadIndex {
    leads: Vec<Lead>,
    by_comp: Vec<Vec<u32>>,
}

impl LeadIndex {
    fn push(&mut self, v: &ModuleElement) -> usize {
        let t = v.lead().expect("nonzero basis element");
        let c = t.comp as usize;
        if self.by_comp.len() <= c {
            self.by_comp.resize(c + 1, Vec::new());
        }
        let idx = self.leads.len();
        self.by_comp[c].push(idx as u32);
        self.leads.push(Lead { comp: t.comp, mono: t.mono, mask: t.mono.divmask(), len: v.len() as u32, active: true });
        idx
    }

    /// Shortest active element whose lead divides `m e_comp`.
    #[inline]
    fn find(&self, comp: u32, m: &Monomial) -> Option<usize> {
        let list = self.by_comp.get(comp as usize)?;
        let mask = m.divmask();
        let mut best: Option<usize> = None;
        for &i in list {
            let l = &self.leads[i as usize];
            if !l.active || l.mask & !mask != 0 || !l.mono.divides(m) {
                continue;
            }
            match best {
                Some(b) if self.leads[b].len <= l.len => {}
                _ => best = Some(i as usize),
            }
            if l.len == 1 {
                break;
            }
        }
        best
    }
}

/// Sum of sorted runs of sizes growing by powers of four. Runs are stored
/// ascending so the leading term sits at the end.
struct Bucket<'a> {
    m: &'a FreeModule,
    runs: Vec<Vec<ModTerm>>,
}

impl<'a> Bucket<'a> {
    fn new(m: &'a FreeModule) -> Self {
        Bucket { m, runs: Vec::new() }
    }

    fn merge(&self, a: Vec<ModTerm>, b: Vec<ModTerm>) -> Vec<ModTerm> {
        if a.is_empty() {
            return b;
        }
        if b.is_empty() {
            return a;
        }
        let f = self.m.ring().field();
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.m.cmp_terms(&a[i], &b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a[i].coeff, b[j].coeff);
                    if c != 0 {
                        out.push(ModTerm { coeff: c, ..a[i] });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        out
    }

    /// Add `c * m * terms` where `terms` is descending.
    fn add(&mut self, c: u32, m: &Monomial, terms: &[ModTerm]) {
        if terms.is_empty() || c == 0 {
            return;
        }
        let f = self.m.ring().field();
        let run: Vec<ModTerm> = terms
            .iter()
            .rev()
            .map(|t| ModTerm { comp: t.comp, mono: t.mono.mul(m), coeff: f.mul(c, t.coeff) })
            .collect();
        self.insert(run);
    }

    fn insert(&mut self, mut run: Vec<ModTerm>) {
        let mut k = level(run.len());
        loop {
            if self.runs.len() <= k {
                self.runs.resize_with(k + 1, Vec::new);
            }
            let cur = core::mem::take(&mut self.runs[k]);
            run = self.merge(cur, run);
            if run.len() <= cap(k) {
                self.runs[k] = run;
                return;
            }
            k += 1;
        }
    }

    fn pop_lead(&mut self) -> Option<ModTerm> {
        let f = self.m.ring().field();
        loop {
            let mut best: Option<ModTerm> = None;
            for r in &self.runs {
                if let Some(t) = r.last() {
                    match best {
                        Some(b) if self.m.cmp_terms(t, &b) != Ordering::Greater => {}
                        _ => best = Some(*t),
                    }
                }
            }
            let b = best?;
            let mut c = 0;
            for r in self.runs.iter_mut() {
                if let Some(t) = r.last() {
                    if t.comp == b.comp && t.mono == b.mono {
                        c = f.add(c, t.coeff);
                        r.pop();
                    }
                }
            }
            if c != 0 {
                return Some(ModTerm { coeff: c, ..b });
            }
        }
    }

    /// Remaining terms, descending.
    fn drain(mut self) -> Vec<ModTerm> {
        let runs = core::mem::take(&mut self.runs);
        let mut acc = Vec::new();
        for r in runs {
            acc = self.merge(acc, r);
        }
        acc.reverse();
        acc
    }
}

#[inline]
fn cap(k: usize) -> usize {
    4usize << (2 * k)
}

#[inline]
fn level(len: usize) -> usize {
    let mut k = 0;
    while cap(k) < len {
        k += 1;
    }
    k
}

/// Reduce `v` by the active elements of `index`/`basis`. With `full` false
/// only the leading term is reduced. Returns the result and the updated
/// sugar.
fn reduce(
    m: &FreeModule,
    index: &LeadIndex,
    basis: &[ModuleElement],
    sugars: &[i32],
    v: &ModuleElement,
    mut sugar: i32,
    full: bool,
) -> (ModuleElement, i32) {
    let f = m.ring().field();
    let mut bucket = Bucket::new(m);
    bucket.add(1, &Monomial::one(m.ring().nvars()), v.terms());
    let mut out: Vec<ModTerm> = Vec::new();
    while let Some(t) = bucket.pop_lead() {
        match index.find(t.comp, &t.mono) {
            Some(g) => {
                let gl = &index.leads[g];
                let q = gl.mono.quotient_of(&t.mono);
                bucket.add(f.neg(t.coeff), &q, &basis[g].terms()[1..]);
                sugar = sugar.max(sugars[g] + q.degree() as i32);
            }
            None => {
                out.push(t);
                if !full {
                    out.extend(bucket.drain());
                    break;
                }
            }
        }
    }
    (ModuleElement::from_sorted(out), sugar)
}

#[derive(Clone, Debug)]
struct Pair {
    i: u32,
    j: u32,
    lcm: Monomial,
    comp: u32,
    sugar: i32,
    dead: bool,
}

enum Task {
    Pair(usize),
    Gen(ModuleElement, i32),
}

struct Engine<'a> {
    m: &'a FreeModule,
    rank1: bool,
    basis: Vec<ModuleElement>,
    sugars: Vec<i32>,
    index: LeadIndex,
    pairs: Vec<Pair>,
    dead: usize,
    graded: bool,
}

impl<'a> Engine<'a> {
    fn new(m: &'a FreeModule) -> Self {
        Engine {
            m,
            rank1: m.rank() == 1,
            basis: Vec::new(),
            sugars: Vec::new(),
            index: LeadIndex::default(),
            pairs: Vec::new(),
            dead: 0,
            graded: true,
        }
    }

    /// Seed with elements already forming a Groebner basis.
    fn seed(&mut self, gb: &[ModuleElement]) {
        for g in gb {
            let s = self.m.max_degree(g).unwrap_or(0);
            self.graded &= self.m.is_homogeneous(g);
            self.index.push(g);
            self.basis.push(g.clone());
            self.sugars.push(s);
        }
    }

    fn spoly(&self, p: &Pair) -> ModuleElement {
        let (i, j) = (p.i as usize, p.j as usize);
        let (li, lj) = (&self.index.leads[i].mono, &self.index.leads[j].mono);
        let qi = li.quotient_of(&p.lcm);
        let qj = lj.quotient_of(&p.lcm);
        let neg1 = self.m.ring().field().neg(1);
        let mut b = Bucket::new(self.m);
        b.add(1, &qi, &self.basis[i].terms()[1..]);
        b.add(neg1, &qj, &self.basis[j].terms()[1..]);
        ModuleElement::from_sorted(b.drain())
    }

    fn insert(&mut self, h: ModuleElement, sugar: i32) {
        let h = self.m.monic(&h);
        let hl = *h.lead().expect("nonzero");
        let hn = self.basis.len();

        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        if let Some(list) = self.index.by_comp.get(hl.comp as usize) {
            for &g in list {
                let l = &self.index.leads[g as usize];
                if !l.active {
                    continue;
                }
                cands.push((g as usize, l.mono.lcm(&hl.mono), l.mono.coprime(&hl.mono)));
            }
        }
        let mut keep: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g, l, cop)) = cands.pop() {
            let prod = self.rank1 && cop;
            if prod
                || (!cands.iter().any(|c| c.1.divides(&l)) && !keep.iter().any(|c| c.1.divides(&l)))
            {
                keep.push((g, l, cop));
            }
        }

        for p in self.pairs.iter_mut() {
            if p.dead || p.comp != hl.comp || !hl.mono.divides(&p.lcm) {
                continue;
            }
            let li = self.index.leads[p.i as usize].mono.lcm(&hl.mono);
            let lj = self.index.leads[p.j as usize].mono.lcm(&hl.mono);
            if li != p.lcm && lj != p.lcm {
                p.dead = true;
                self.dead += 1;
            }
        }

        for (g, l, cop) in keep.into_iter().rev() {
            if self.rank1 && cop {
                continue;
            }
            let lg = &self.index.leads[g].mono;
            let s = (self.sugars[g] + lg.quotient_of(&l).degree() as i32)
                .max(sugar + hl.mono.quotient_of(&l).degree() as i32);
            self.pairs.push(Pair { i: g as u32, j: hn as u32, lcm: l, comp: hl.comp, sugar: s, dead: false });
        }

        if let Some(list) = self.index.by_comp.get(hl.comp as usize) {
            for &g in list {
                let l = &mut self.index.leads[g as usize];
                if l.active && hl.mono.divides(&l.mono) {
                    l.active = false;
                }
            }
        }
        self.index.push(&h);
        self.basis.push(h);
        self.sugars.push(sugar);
    }

    fn run(&mut self, gens: Vec<ModuleElement>) {
        let mut pending: Vec<(ModuleElement, i32)> = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                let s = self.m.max_degree(&g).unwrap_or(0);
                (g, s)
            })
            .collect();
        self.graded &= pending.iter().all(|(g, _)| self.m.is_homogeneous(g));
        loop {
            let mut s: Option<i32> = None;
            for p in self.pairs.iter().filter(|p| !p.dead) {
                s = Some(s.map_or(p.sugar, |x: i32| x.min(p.sugar)));
            }
            for (_, gs) in &pending {
                s = Some(s.map_or(*gs, |x: i32| x.min(*gs)));
            }
            let Some(s) = s else { break };

            let mut batch: Vec<Task> = Vec::new();
            for (k, p) in self.pairs.iter().enumerate() {
                if !p.dead && p.sugar == s {
                    batch.push(Task::Pair(k));
                }
            }
            let mut rest = Vec::new();
            for (g, gs) in pending.drain(..) {
                if gs == s {
                    batch.push(Task::Gen(g, gs));
                } else {
                    rest.push((g, gs));
                }
            }
            pending = rest;
            let m = self.m;
            let key = |t: &Task, pairs: &[Pair]| -> (u32, Monomial, u8) {
                match t {
                    Task::Pair(k) => (pairs[*k].comp, pairs[*k].lcm, 1),
                    Task::Gen(g, _) => {
                        let l = g.lead().unwrap();
                        (l.comp, l.mono, 0)
                    }
                }
            };
            let pairs = &self.pairs;
            batch.sort_by(|a, b| {
                let (ca, ma, ka) = key(a, pairs);
                let (cb, mb, kb) = key(b, pairs);
                m.cmp(ca, &ma, cb, &mb).then(ka.cmp(&kb))
            });

            for t in batch {
                let (h, hs) = match t {
                    Task::Pair(k) => {
                        if self.pairs[k].dead {
                            continue;
                        }
                        self.pairs[k].dead = true;
                        self.dead += 1;
                        let p = self.pairs[k].clone();
                        (self.spoly(&p), p.sugar)
                    }
                    Task::Gen(g, gs) => (g, gs),
                };
                let (r, rs) = reduce(self.m, &self.index, &self.basis, &self.sugars, &h, hs, true);
                if !r.is_zero() {
                    self.insert(r, rs);
                }
            }
            if self.dead * 2 > self.pairs.len() + 64 {
                self.pairs.retain(|p| !p.dead);
                self.dead = 0;
            }
            if self.rank1 && self.graded && self.kills_degree(s) {
                self.pairs.clear();
                self.dead = 0;
                break;
            }
        }
    }

    /// For a homogeneous ideal complete through degree `s`: true when every
    /// monomial of degree `s` is a leading monomial, so the basis is already
    /// complete in all degrees.
    fn kills_degree(&self, s: i32) -> bool {
        let n = self.m.ring().nvars();
        let mut pure = [u32::MAX; crate::monomial::MAX_VARS];
        let mut leads = Vec::new();
        for l in self.index.leads.iter().filter(|l| l.active) {
            let sup = l.mono.support();
            if sup.count_ones() == 1 {
                let v = sup.trailing_zeros() as usize;
                pure[v] = pure[v].min(l.mono.exp(v));
            }
            leads.push(l.mono);
        }
        if n == 0 || pure[..n].contains(&u32::MAX) {
            return false;
        }
        let top: i64 = pure[..n].iter().map(|&e| e as i64 - 1).sum();
        if s as i64 > top {
            return true;
        }
        crate::hilbert::monomial_series(n, &leads).coefficient(s) == 0
    }

    /// Reduced, monic basis sorted by degree, then by descending lead.
    fn finish(self) -> ModuleGb {
        let m = self.m;
        let mut idx: Vec<usize> = (0..self.basis.len()).filter(|&i| self.index.leads[i].active).collect();
        idx.sort_by(|&a, &b| {
            let (la, lb) = (&self.index.leads[a], &self.index.leads[b]);
            m.term_degree(la.comp, &la.mono)
                .cmp(&m.term_degree(lb.comp, &lb.mono))
                .then_with(|| m.cmp(lb.comp, &lb.mono, la.comp, &la.mono))
        });
        let mut out = Vec::with_capacity(idx.len());
        for &i in &idx {
            let g = &self.basis[i];
            let head = *g.lead().unwrap();
            let tail = ModuleElement::from_sorted(g.terms()[1..].to_vec());
            let (r, _) = reduce(m, &self.index, &self.basis, &self.sugars, &tail, 0, true);
            let mut terms = Vec::with_capacity(r.len() + 1);
            terms.push(head);
            terms.extend_from_slice(r.terms());
            out.push(ModuleElement::from_sorted(terms));
        }
        ModuleGb::from_reduced(m.clone(), out)
    }
}

/// A reduced Groebner basis of a submodule of a free module.
#[derive(Clone, Debug)]
pub struct ModuleGb {
    module: FreeModule,
    basis: Vec<ModuleElement>,
    sugars: Vec<i32>,
    index: LeadIndex,
}

impl ModuleGb {
    fn from_reduced(module: FreeModule, basis: Vec<ModuleElement>) -> Self {
        let mut index = LeadIndex::default();
        let mut sugars = Vec::with_capacity(basis.len());
        for g in &basis {
            index.push(g);
            sugars.push(module.max_degree(g).unwrap_or(0));
        }
        ModuleGb { module, basis, sugars, index }
    }

    /// Groebner basis of the submodule generated by `gens`.
    pub fn compute(module: &FreeModule, gens: &[ModuleElement]) -> Result<ModuleGb> {
        for g in gens {
            module.check(g)?;
        }
        let mut e = Engine::new(module);
        e.run(gens.iter().map(|g| module.adopt(g)).collect());
        Ok(e.finish())
    }

    /// The zero submodule.
    pub fn empty(module: &FreeModule) -> ModuleGb {
        ModuleGb::from_reduced(module.clone(), Vec::new())
    }

    /// Basis of this submodule plus `gens`, reusing the finished pairs.
    pub fn extend(&self, gens: &[ModuleElement]) -> Result<ModuleGb> {
        for g in gens {
            self.module.check(g)?;
        }
        let mut e = Engine::new(&self.module);
        e.seed(&self.basis);
        e.run(gens.iter().map(|g| self.module.adopt(g)).collect());
        Ok(e.finish())
    }

    #[inline]
    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    #[inline]
    pub fn basis(&self) -> &[ModuleElement] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn normal_form(&self, v: &ModuleElement) -> ModuleElement {
        reduce(&self.module, &self.index, &self.basis, &self.sugars, v, 0, true).0
    }

    pub fn contains(&self, v: &ModuleElement) -> bool {
        reduce(&self.module, &self.index, &self.basis, &self.sugars, v, 0, false).0.is_zero()
    }

    /// Leading monomials grouped by component.
    pub fn leading_monomials(&self, comp: usize) -> Vec<Monomial> {
        self.basis
            .iter()
            .filter_map(|g| g.lead())
            .filter(|t| t.comp as usize == comp)
            .map(|t| t.mono)
            .collect()
    }

    /// True when this submodule is the whole free module.
    pub fn is_everything(&self) -> bool {
        (0..self.module.rank()).all(|c| self.leading_monomials(c).iter().any(|m| m.is_one()))
    }

    /// Same submodule (both bases reduced under the same order).
    pub fn same_as(&self, other: &ModuleGb) -> bool {
        self.basis == other.basis
    }

    /// True when every element of `other` lies here.
    pub fn contains_all(&self, other: &[ModuleElement]) -> bool {
        other.iter().all(|v| self.contains(v))
    }
}

/// Reduced Groebner basis of an ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: PolyRing,
    gb: ModuleGb,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    fn wrap(ring: &PolyRing, gb: ModuleGb) -> Self {
        let polys = gb.basis.iter().map(|v| to_poly(ring, v)).collect();
        GroebnerBasis { ring: ring.clone(), gb, polys }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn module_gb(&self) -> &ModuleGb {
        &self.gb
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|f| f.is_constant())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        to_poly(&self.ring, &self.gb.normal_form(&to_vec(f)))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.gb.contains(&to_vec(f))
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gb.leading_monomials(0)
    }

    pub fn extend(&self, gens: &[Polynomial]) -> Result<GroebnerBasis> {
        for g in gens {
            if g.nvars() != self.ring.nvars() {
                return Err(AlgebraError::RingMismatch);
            }
        }
        let v: Vec<ModuleElement> = gens.iter().map(|g| adopt_vec(&self.ring, g)).collect();
        Ok(GroebnerBasis::wrap(&self.ring, self.gb.extend(&v)?))
    }
}

fn to_vec(f: &Polynomial) -> ModuleElement {
    let terms = f
        .terms()
        .iter()
        .map(|t| ModTerm { comp: 0, mono: t.mono, coeff: t.coeff })
        .collect();
    ModuleElement::from_sorted(terms)
}

fn adopt_vec(ring: &PolyRing, f: &Polynomial) -> ModuleElement {
    to_vec(&ring.adopt(f))
}

fn to_poly(ring: &PolyRing, v: &ModuleElement) -> Polynomial {
    let terms: Vec<Term> = v.terms().iter().map(|t| Term { mono: t.mono, coeff: t.coeff }).collect();
    let _ = ring;
    Polynomial::from_sorted(ring.nvars(), terms)
}

/// Reduced Groebner basis of the ideal generated by `gens` under the ring's
/// order.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    for g in gens {
        if g.nvars() != ring.nvars() {
            return Err(AlgebraError::RingMismatch);
        }
    }
    let m = FreeModule::ring_module(ring);
    let v: Vec<ModuleElement> = gens.iter().map(|g| adopt_vec(ring, g)).collect();
    let mut e = Engine::new(&m);
    e.run(v);
    Ok(GroebnerBasis::wrap(ring, e.finish()))
}

/// Normal form of `f` with respect to `g`.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Polynomial {
    g.normal_form(f)
}

/// Reduced Groebner basis of a submodule.
pub fn module_groebner(module: &FreeModule, gens: &[ModuleElement]) -> Result<ModuleGb> {
    ModuleGb::compute(module, gens)
}

/// Division with quotients: `v = sum_k q_k g_k + r`, with the quotients
/// returned as an element of the free module on the basis of `gb`.
pub fn divide(gb: &ModuleGb, v: &ModuleElement, quot: &FreeModule) -> (ModuleElement, ModuleElement) {
    let m = &gb.module;
    let f = m.ring().field();
    let mut cur = v.clone();
    let mut q: Vec<ModTerm> = Vec::new();
    let mut rem: Vec<ModTerm> = Vec::new();
    while let Some(t) = cur.lead().copied() {
        match gb.index.find(t.comp, &t.mono) {
            Some(g) => {
                let qm = gb.index.leads[g].mono.quotient_of(&t.mono);
                q.push(ModTerm { comp: g as u32, mono: qm, coeff: t.coeff });
                cur = m.axpy(&cur, f.neg(t.coeff), &qm, &gb.basis[g]);
            }
            None => {
                rem.push(t);
                cur = ModuleElement::from_sorted(cur.terms()[1..].to_vec());
            }
        }
    }
    (quot.from_terms(q), ModuleElement::from_sorted(rem))
}

/// Syzygies of a reduced Groebner basis via Schreyer's theorem. Returns the
/// source module (rank = basis length, Schreyer order) and the syzygies,
/// which form a Groebner basis of the syzygy module in that order.
pub fn syzygies(gb: &ModuleGb) -> (FreeModule, Vec<ModuleElement>) {
    let m = &gb.module;
    let s = gb.basis.len();
    let leads: Vec<Monomial> = gb.basis.iter().map(|g| g.lead().unwrap().mono).collect();
    let comps: Vec<u32> = gb.basis.iter().map(|g| g.lead().unwrap().comp).collect();
    let twists: Vec<i32> = gb.basis.iter().map(|g| m.degree(g).unwrap_or(0)).collect();
    let src = FreeModule::new(
        m.ring().clone(),
        twists,
        ModuleOrder::schreyer(m.mono_order(), leads.clone()),
    );
    let f = m.ring().field();
    let mut cand: Vec<(usize, usize, Monomial)> = Vec::new();
    for i in 0..s {
        for j in i + 1..s {
            if comps[i] == comps[j] {
                cand.push((i, j, leads[i].lcm(&leads[j])));
            }
        }
    }
    // Leading term of s_ij is (lcm/lm_i) e_i; keep only minimal ones.
    let mut keep = Vec::new();
    for (a, &(i, j, l)) in cand.iter().enumerate() {
        let redundant = cand.iter().enumerate().any(|(b, &(i2, j2, l2))| {
            b != a && i2 == i && l2.divides(&l) && (l2 != l || j2 < j)
        });
        if !redundant {
            keep.push((i, j, l));
        }
    }
    let mut out = Vec::new();
    for (i, j, l) in keep {
        let qi = leads[i].quotient_of(&l);
        let qj = leads[j].quotient_of(&l);
        let sp = m.axpy(&m.mul_term(&gb.basis[i], 1, &qi), f.neg(1), &qj, &gb.basis[j]);
        let (q, r) = divide(gb, &sp, &src);
        debug_assert!(r.is_zero());
        let mut terms = alloc::vec![
            ModTerm { comp: i as u32, mono: qi, coeff: 1 },
            ModTerm { comp: j as u32, mono: qj, coeff: f.neg(1) },
        ];
        for t in q.terms() {
            terms.push(ModTerm { coeff: f.neg(t.coeff), ..*t });
        }
        let v = src.from_terms(terms);
        if !v.is_zero() {
            out.push(v);
        }
    }
    (src, out)
}

/// Kernel of `src -> target / base`, `e_i -> images[i]`, where `src` has
/// the given twists and term-over-position order. Returns the source module
/// and a Groebner basis of the kernel.
pub fn kernel(
    target: &FreeModule,
    images: &[ModuleElement],
    src_twists: &[i32],
    base: &[ModuleElement],
) -> Result<(FreeModule, ModuleGb)> {
    let r = target.rank();
    let k = images.len();
    if src_twists.len() != k {
        return Err(AlgebraError::RankMismatch { expected: k, found: src_twists.len() });
    }
    let mut tw = target.twists().to_vec();
    tw.extend_from_slice(src_twists);
    let joint = FreeModule::new(
        target.ring().clone(),
        tw,
        ModuleOrder::block_top(target.mono_order(), r),
    );
    let mut gens = Vec::with_capacity(k + base.len());
    for (i, v) in images.iter().enumerate() {
        target.check(v)?;
        let mut w = target.shift_into(&joint, v, 0);
        w = joint.add(&w, &joint.basis(r + i));
        gens.push(w);
    }
    for b in base {
        target.check(b)?;
        gens.push(target.shift_into(&joint, b, 0));
    }
    let gb = ModuleGb::compute(&joint, &gens)?;
    let src = FreeModule::top(target.ring(), src_twists.to_vec());
    let mut ker = Vec::new();
    for g in gb.basis() {
        if g.lead().unwrap().comp as usize >= r {
            ker.push(joint.restrict_to(&src, g, r, r + k));
        }
    }
    Ok((src.clone(), ModuleGb::from_reduced(src, ker)))
}

/// A minimal homogeneous generating set of `(N + base) / base` where `N` is
/// generated by `gens`. The returned elements are normal forms modulo the
/// base and the lower-degree generators kept before them.
pub fn minimal_generators(
    module: &FreeModule,
    gens: &[ModuleElement],
    base: Option<&ModuleGb>,
) -> Result<Vec<ModuleElement>> {
    let mut cur = match base {
        Some(b) => b.clone(),
        None => ModuleGb::empty(module),
    };
    let mut items: Vec<(i32, &ModuleElement)> = Vec::new();
    for g in gens {
        module.check(g)?;
        if g.is_zero() {
            continue;
        }
        if !module.is_homogeneous(g) {
            return Err(AlgebraError::NotHomogeneous(module.display(g)));
        }
        items.push((module.degree(g).unwrap(), g));
    }
    items.sort_by_key(|x| x.0);
    let mut out = Vec::new();
    let mut k = 0;
    while k < items.len() {
        let d = items[k].0;
        let mut rows: Vec<ModuleElement> = Vec::new();
        while k < items.len() && items[k].0 == d {
            let mut v = cur.normal_form(&module.adopt(items[k].1));
            k += 1;
            // reduce against rows already kept in this degree
            loop {
                let Some(lt) = v.lead().copied() else { break };
                let hit = rows.iter().find(|r| {
                    let l = r.lead().unwrap();
                    l.comp == lt.comp && l.mono == lt.mono
                });
                match hit {
                    Some(r) => {
                        let c = module.ring().field().neg(lt.coeff);
                        v = module.axpy(&v, c, &Monomial::one(module.ring().nvars()), r);
                    }
                    None => break,
                }
            }
            if !v.is_zero() {
                rows.push(module.monic(&v));
            }
        }
        if rows.is_empty() {
            continue;
        }
        if k < items.len() {
            cur = cur.extend(&rows)?;
        }
        out.extend(rows);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::order::TermOrder;

    fn ring(names: &[&str]) -> PolyRing {
        PolyRing::new(names, PrimeField::default(), TermOrder::GrevLex).unwrap()
    }

    #[test]
    fn spec_trace() {
        let r = ring(&["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let f = r.add(&r.mul(&x, &x), &r.mul(&y, &y));
        let g = r.mul(&x, &y);
        let gb = buchberger(&r, &[f.clone(), g.clone()]).unwrap();
        let shown: Vec<_> = gb.generators().iter().map(|p| r.display(p)).collect();
        assert_eq!(shown, ["x^2 + y^2", "x*y", "y^3"]);
        assert_eq!(r.display(&gb.normal_form(&r.mul(&x, &x))), "-y^2");
        assert!(gb.contains(&r.pow(&y, 3)));
    }

    #[test]
    fn unit_and_trivial() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&r, &[r.one(), r.var(0)]).unwrap();
        assert_eq!(gb.generators(), &[r.one()]);
        let gb = buchberger(&r, &[r.var(0), r.var(1)]).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(!gb.contains(&r.one()));
        assert!(gb.contains(&r.zero()));
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&r, &[r.var(0), r.var(1)]).unwrap();
        let (src, syz) = syzygies(gb.module_gb());
        assert_eq!(syz.len(), 1);
        let comps = src.components(&syz[0]);
        let ev = r.add(&r.mul(&comps[0], &gb.generators()[0]), &r.mul(&comps[1], &gb.generators()[1]));
        assert!(ev.is_zero());
    }

    #[test]
    fn kernel_of_linear_map() {
        let r = ring(&["x", "y"]);
        let s = FreeModule::ring_module(&r);
        let imgs = [s.from_poly(&r.var(0), 0), s.from_poly(&r.var(1), 0)];
        let (src, k) = kernel(&s, &imgs, &[1, 1], &[]).unwrap();
        assert_eq!(k.len(), 1);
        let c = src.components(&k.basis()[0]);
        assert_eq!(c[0].len(), 1);
        assert!(r.add(&r.mul(&c[0], &r.var(0)), &r.mul(&c[1], &r.var(1))).is_zero());
    }

    #[test]
    fn minimal_generators_prunes() {
        let r = ring(&["x", "y"]);
        let s = FreeModule::ring_module(&r);
        let (x, y) = (r.var(0), r.var(1));
        let gens: Vec<_> = [x.clone(), y.clone(), r.mul(&x, &y), r.add(&x, &y)]
            .iter()
            .map(|f| s.from_poly(f, 0))
            .collect();
        assert_eq!(minimal_generators(&s, &gens, None).unwrap().len(), 2);
    }
}
