//! Theorem-level checks: each characterisation is evaluated on concrete
//! integers and compared with the direct homological verdicts.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::hilbert::binom_i64;
use crate::homology::{
    dimension_filtration, ext_modules, free_resolution, is_cohen_macaulay, is_seq_cm_direct,
    minimal_ideal_generators, r_invariants, DimensionFiltration, Subquotient,
};
use crate::ideal::{linear_basis, Ideal};
use crate::invariants::{
    fiber_function, hilbert_samuel, index_of_reducibility, ir_polynomial, multiplicity_e0_m, socle_ideal,
    FitOptions, FittedSequence, PowerSequence,
};
use crate::poly::Polynomial;
use crate::sop::{adic_order, is_distinguished, is_system_of_parameters, random_distinguished_sop, ParameterSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// The statement failed, but `ir(q) ≠ Σ r_j` shows `q` is not yet deep
    /// enough for the hypothesis `q ⊆ m^{g(R)}`.
    DepthInsufficient,
    NotApplicable,
    /// The statement quantifies over an empty set.
    Vacuous,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::DepthInsufficient => "depth-insufficient",
            Verdict::NotApplicable => "not-applicable",
            Verdict::Vacuous => "vacuous",
        }
    }

    /// True for verdicts that count as the statement being satisfied.
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Holds | Verdict::Vacuous)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
}

impl Relation {
    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Le => "<=",
        }
    }
}

/// `lhs relation rhs` with both sides computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub label: String,
    pub lhs: i64,
    pub rhs: i64,
    pub relation: Relation,
}

impl Comparison {
    pub fn new(label: impl Into<String>, lhs: i64, relation: Relation, rhs: i64) -> Self {
        Comparison { label: label.into(), lhs, rhs, relation }
    }

    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::Eq => self.lhs == self.rhs,
            Relation::Le => self.lhs <= self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub verdict: Verdict,
    pub comparisons: Vec<Comparison>,
    pub note: String,
}

impl CheckResult {
    fn new(name: &'static str, verdict: Verdict, comparisons: Vec<Comparison>, note: impl Into<String>) -> Self {
        CheckResult { name, verdict, comparisons, note: note.into() }
    }

    fn not_applicable(name: &'static str, why: &str) -> Self {
        CheckResult::new(name, Verdict::NotApplicable, Vec::new(), why)
    }
}

/// Ring-level data shared by every parameter ideal.
#[derive(Clone, Debug)]
pub struct RingData {
    pub ideal: Ideal,
    pub dim: usize,
    pub depth: usize,
    pub betti: Vec<usize>,
    /// `r_0, ..., r_d`.
    pub r: Vec<usize>,
    pub filtration: DimensionFiltration,
    pub seq_cm: bool,
    pub cm: bool,
    pub e0_m: i64,
}

impl RingData {
    pub fn new(j: &Ideal) -> Result<RingData> {
        j.check_homogeneous()?;
        let dim = j.dim_quotient()?;
        let n = j.ring().nvars();
        let res = free_resolution(&Subquotient::quotient_ring(j))?;
        let pd = res.length().ok_or(AlgebraError::ZeroModule)?;
        let exts = ext_modules(&res)?;
        let r = (0..=dim).map(|k| exts[n - k].num_generators()).collect();
        let filtration = dimension_filtration(j)?;
        let seq_cm = is_seq_cm_direct(&filtration)?;
        let depth = n - pd;
        Ok(RingData {
            ideal: j.reduced(),
            dim,
            depth,
            betti: res.betti(),
            r,
            filtration,
            seq_cm,
            cm: depth == dim,
            e0_m: multiplicity_e0_m(j)?,
        })
    }

    pub fn sum_r(&self) -> u64 {
        self.r.iter().map(|&x| x as u64).sum()
    }

    /// `r_j`, zero outside `0..=d`.
    pub fn r_at(&self, j: i64) -> i64 {
        if j < 0 || j as usize > self.dim {
            0
        } else {
            self.r[j as usize] as i64
        }
    }

    /// The unmixed component `a_{ℓ-1}` (as an ideal containing `J`).
    pub fn unmixed_component(&self) -> &Ideal {
        &self.filtration.ideals[self.filtration.ell - 1]
    }

    /// Whether `S = R / a_{ℓ-1}` is Cohen-Macaulay.
    pub fn top_quotient_cm(&self) -> Result<bool> {
        is_cohen_macaulay(&Subquotient::quotient_ring(self.unmixed_component()))
    }

    /// Cohen-Macaulay type `r_d`, equal to the last Betti number for CM rings.
    pub fn type_number(&self) -> usize {
        self.r[self.dim]
    }
}

/// A distinguished parameter ideal `q` with its socle ideal `I = q : m`.
#[derive(Clone, Debug)]
pub struct ParameterIdeal {
    pub sop: ParameterSystem,
    /// `(x_1, ..., x_d)` in the ambient ring.
    pub q: Ideal,
    /// Minimal generators of the preimage of `I = q : m`, those outside `J`.
    pub socle: Ideal,
    pub adic_order: u32,
    pub distinguished: bool,
    pub ir_q: u64,
}

impl ParameterIdeal {
    pub fn new(ring: &RingData, sop: ParameterSystem) -> Result<ParameterIdeal> {
        let j = &ring.ideal;
        let s = j.ring();
        if !is_system_of_parameters(&sop.elements, j)? {
            return Err(AlgebraError::NotMPrimary);
        }
        let distinguished = is_distinguished(&sop.elements, j, &ring.filtration)?;
        let q = sop.ideal(s)?;
        let socle_full = socle_ideal(&q, j)?;
        let gens: Vec<Polynomial> =
            minimal_ideal_generators(&socle_full)?.into_iter().filter(|g| !j.contains(g)).collect();
        let socle = Ideal::new(s, gens)?;
        let ir_q = index_of_reducibility(&q, &Subquotient::quotient_ring(j))?;
        Ok(ParameterIdeal { adic_order: adic_order(&q)?, sop, q, socle, distinguished, ir_q })
    }

    /// `ir(q) = Σ r_j`, the witness that `q` is deep enough.
    pub fn is_deep(&self, ring: &RingData) -> bool {
        self.ir_q == ring.sum_r()
    }
}

/// A parameter ideal with its fitted Hilbert, socle and fiber functions.
#[derive(Clone, Debug)]
pub struct ParameterBlock {
    pub param: ParameterIdeal,
    pub e_q: FittedSequence,
    pub e_i: FittedSequence,
    /// `ir(q^{n+1})` with its fitted `g_i`.
    pub ir: Option<FittedSequence>,
    pub fiber_i: Option<FittedSequence>,
    pub fiber_q: Option<FittedSequence>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockOptions {
    pub fit: FitOptions,
    /// `ir(q^{n+1})` is computed at least for `n = 0..=ir_points`.
    pub ir_points: usize,
    /// Also fit `ir(q^{n+1})` and the fiber cone functions.
    pub extras: bool,
}

impl Default for BlockOptions {
    fn default() -> Self {
        BlockOptions { fit: FitOptions::default(), ir_points: 4, extras: true }
    }
}

impl BlockOptions {
    /// Only the Hilbert-Samuel coefficients of `q` and `I`.
    pub fn without_extras(self) -> Self {
        BlockOptions { extras: false, ..self }
    }
}

impl ParameterBlock {
    pub fn new(ring: &RingData, sop: ParameterSystem, opts: BlockOptions) -> Result<ParameterBlock> {
        let param = ParameterIdeal::new(ring, sop)?;
        let j = &ring.ideal;
        let rr = Subquotient::quotient_ring(j);
        let e_q = hilbert_samuel(&param.q, &rr, opts.fit)?;
        let e_i = hilbert_samuel(&param.socle, &rr, opts.fit)?;
        if !opts.extras {
            return Ok(ParameterBlock { param, e_q, e_i, ir: None, fiber_i: None, fiber_q: None });
        }
        let ir_opts = FitOptions { n_min: opts.fit.n_min.max(opts.ir_points), ..opts.fit };
        let ir = ir_polynomial(&param.q, j, ir_opts)?;
        let fiber_i = fiber_function(&param.socle, j, opts.fit)?;
        let fiber_q = fiber_function(&param.q, j, opts.fit)?;
        Ok(ParameterBlock { param, e_q, e_i, ir: Some(ir), fiber_i: Some(fiber_i), fiber_q: Some(fiber_q) })
    }

    /// `e_k(I) - e_k(q)`.
    pub fn e_diff(&self, k: usize) -> i64 {
        coeff(&self.e_i, k) - coeff(&self.e_q, k)
    }

    pub fn is_deep(&self, ring: &RingData) -> bool {
        self.param.is_deep(ring)
    }
}

fn coeff(f: &FittedSequence, k: usize) -> i64 {
    f.coefficients.get(k).copied().unwrap_or(0)
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) { 1 } else { -1 }
}

/// Holds when every comparison holds; a failure with `ir(q) ≠ Σ r_j` means
/// `q` is not yet deep enough for the statement.
fn judge(ring: &RingData, block: &ParameterIdeal, comps: &[Comparison]) -> Verdict {
    if comps.iter().all(Comparison::holds) {
        Verdict::Holds
    } else if !block.is_deep(ring) {
        Verdict::DepthInsufficient
    } else {
        Verdict::Fails
    }
}

/// A biconditional `statement ⟺ oracle`: holds when both sides agree.
fn judge_equivalence(ring: &RingData, block: &ParameterIdeal, statement: bool, oracle: bool) -> Verdict {
    if statement == oracle {
        Verdict::Holds
    } else if !block.is_deep(ring) {
        Verdict::DepthInsufficient
    } else {
        Verdict::Fails
    }
}

/// `I = q : m` is proper and the identities involving it are meaningful.
fn proper_socle_guard(name: &'static str, ring: &RingData, block: &ParameterIdeal) -> Option<CheckResult> {
    if ring.e0_m > 1 || block.adic_order >= 2 {
        None
    } else {
        Some(CheckResult::not_applicable(name, "needs e_0(m) > 1 or q inside m^2"))
    }
}

/// `(-1)^{d-j} (e_{d-j+1}(I) - e_{d-j+1}(q)) ≤ r_j` for `2 ≤ j ∈ Λ`.
pub fn criterion_main1(ring: &RingData, block: &ParameterBlock) -> CheckResult {
    const NAME: &str = "main1";
    if !block.param.distinguished {
        return CheckResult::not_applicable(NAME, "q is not distinguished");
    }
    let d = ring.dim;
    let comps: Vec<Comparison> = ring
        .filtration
        .lambda()
        .iter()
        .filter(|&&j| j >= 2)
        .map(|&j| {
            let k = d - j + 1;
            Comparison::new(format!("j={j}"), sign(d - j) * block.e_diff(k), Relation::Le, ring.r_at(j as i64))
        })
        .collect();
    if comps.is_empty() {
        return CheckResult::new(NAME, Verdict::Vacuous, comps, "no j >= 2 in the dimension set");
    }
    // a failure is the expected outcome on rings that are not sequentially
    // Cohen-Macaulay
    let v = match judge(ring, &block.param, &comps) {
        Verdict::DepthInsufficient if !ring.seq_cm => Verdict::Fails,
        v => v,
    };
    CheckResult::new(NAME, v, comps, "")
}

/// `e_j(I) - e_j(q) = (-1)^{j-1} r_{d-j+1}` for `j = 0..=d`.
pub fn verify_cor_coe(ring: &RingData, block: &ParameterBlock) -> CheckResult {
    const NAME: &str = "coe";
    if !ring.seq_cm {
        return CheckResult::not_applicable(NAME, "ring is not sequentially Cohen-Macaulay");
    }
    if !block.param.distinguished {
        return CheckResult::not_applicable(NAME, "q is not distinguished");
    }
    let d = ring.dim;
    let comps: Vec<Comparison> = (0..=d)
        .map(|j| {
            let rhs = -sign(j) * ring.r_at(d as i64 - j as i64 + 1);
            Comparison::new(format!("j={j}"), block.e_diff(j), Relation::Eq, rhs)
        })
        .collect();
    if let Some(r) = proper_socle_guard(NAME, ring, &block.param) {
        return r;
    }
    let v = judge(ring, &block.param, &comps);
    CheckResult::new(NAME, v, comps, "")
}

/// `ir(q^{n+1}) = Σ_{i=1}^d r_i binom(n+i-1, i-1) + r_0` for the computed `n`.
pub fn verify_prop_2_7(ring: &RingData, block: &ParameterBlock, n_max: usize) -> CheckResult {
    const NAME: &str = "prop27";
    if !ring.seq_cm {
        return CheckResult::not_applicable(NAME, "ring is not sequentially Cohen-Macaulay");
    }
    let base = Comparison::new("ir(q) = sum r", block.param.ir_q as i64, Relation::Eq, ring.sum_r() as i64);
    if !base.holds() {
        return CheckResult::new(NAME, Verdict::DepthInsufficient, vec![base], "ir(q) differs from the sum of the r_j");
    }
    let Some(ir) = &block.ir else {
        return CheckResult::not_applicable(NAME, "ir(q^(n+1)) was not computed");
    };
    let d = ring.dim;
    let mut comps = vec![base];
    let top = n_max.min(ir.values.len().saturating_sub(1));
    for n in 1..=top {
        let mut pred = ring.r_at(0);
        for i in 1..=d {
            pred += ring.r_at(i as i64) * binom_i64((n + i - 1) as i64, (i - 1) as i64);
        }
        comps.push(Comparison::new(format!("n={n}"), ir.values[n] as i64, Relation::Eq, pred));
    }
    let v = judge(ring, &block.param, &comps);
    CheckResult::new(NAME, v, comps, "")
}

fn unmixed_guard(name: &'static str, ring: &RingData) -> Option<CheckResult> {
    if !ring.filtration.is_unmixed() {
        return Some(CheckResult::not_applicable(name, "ring is not unmixed"));
    }
    if ring.dim < 2 {
        return Some(CheckResult::not_applicable(name, "needs dim R >= 2"));
    }
    None
}

/// `f_0(I) = r_d + 1` compared with Cohen-Macaulayness on non-regular
/// unmixed rings.
pub fn theorem_t1_2(ring: &RingData, block: &ParameterBlock) -> CheckResult {
    const NAME: &str = "t12";
    if let Some(r) = unmixed_guard(NAME, ring) {
        return r;
    }
    if ring.e0_m <= 1 {
        return CheckResult::not_applicable(NAME, "ring is regular");
    }
    let Some(fiber) = &block.fiber_i else {
        return CheckResult::not_applicable(NAME, "fiber cone function was not computed");
    };
    let c = Comparison::new("f_0(I) = r_d + 1", coeff(fiber, 0), Relation::Eq, ring.r_at(ring.dim as i64) + 1);
    let v = judge_equivalence(ring, &block.param, c.holds(), ring.cm);
    CheckResult::new(NAME, v, vec![c], format!("cohen-macaulay: {}", ring.cm))
}

/// `g_0(q) = r_d` compared with Cohen-Macaulayness on unmixed rings.
pub fn theorem_t1_3(ring: &RingData, block: &ParameterBlock) -> CheckResult {
    const NAME: &str = "t13";
    if let Some(r) = unmixed_guard(NAME, ring) {
        return r;
    }
    let Some(ir) = &block.ir else {
        return CheckResult::not_applicable(NAME, "ir(q^(n+1)) was not computed");
    };
    let c = Comparison::new("g_0(q) = r_d", coeff(ir, 0), Relation::Eq, ring.r_at(ring.dim as i64));
    let v = judge_equivalence(ring, &block.param, c.holds(), ring.cm);
    CheckResult::new(NAME, v, vec![c], format!("cohen-macaulay: {}", ring.cm))
}

/// The inequalities around `e_1(I) - e_1(q)`: the lower bound `r_d`, the
/// socle ranks of `R/q_j`, the unmixed Cohen-Macaulay test and the
/// Gorenstein test.
pub fn inequality_suite(ring: &RingData, block: &ParameterBlock) -> Result<Vec<CheckResult>> {
    let d = ring.dim;
    let rd = ring.r_at(d as i64);
    let diff = block.e_diff(1);
    let mut out = Vec::new();

    let guard = |name| proper_socle_guard(name, ring, &block.param);
    if d < 2 {
        out.push(CheckResult::not_applicable("p43", "needs dim R >= 2"));
    } else if let Some(r) = guard("p43") {
        out.push(r);
    } else if !block.param.distinguished {
        out.push(CheckResult::not_applicable("p43", "q is not distinguished"));
    } else {
        let c = vec![Comparison::new("r_d <= e_1(I) - e_1(q)", rd, Relation::Le, diff)];
        out.push(CheckResult::new("p43", judge(ring, &block.param, &c), c, ""));
    }

    out.push(lemma_tcr(ring, &block.param)?);

    match unmixed_guard("t66", ring).or_else(|| guard("t66")) {
        Some(r) => out.push(r),
        None => {
            let c = Comparison::new("e_1(I) - e_1(q) <= r_d", diff, Relation::Le, rd);
            let v = judge_equivalence(ring, &block.param, c.holds(), ring.cm);
            out.push(CheckResult::new("t66", v, vec![c], format!("cohen-macaulay: {}", ring.cm)));
        }
    }

    match unmixed_guard("gorenstein", ring).or_else(|| guard("gorenstein")) {
        Some(r) => out.push(r),
        None => {
            let c = Comparison::new("e_1(I) - e_1(q) = 1", diff, Relation::Eq, 1);
            let t = Comparison::new("type r_d = 1", rd, Relation::Eq, 1);
            let gorenstein = ring.cm && t.holds();
            let v = judge_equivalence(ring, &block.param, c.holds(), gorenstein);
            out.push(CheckResult::new("gorenstein", v, vec![c, t], format!("gorenstein: {gorenstein}")));
        }
    }
    Ok(out)
}

/// `r_d(R) ≤ r_{d-j}(R/q_j)` for `j = 0..=d`.
pub fn lemma_tcr(ring: &RingData, block: &ParameterIdeal) -> Result<CheckResult> {
    const NAME: &str = "tcr";
    if !block.distinguished {
        return Ok(CheckResult::not_applicable(NAME, "q is not distinguished"));
    }
    let d = ring.dim;
    let s = ring.ideal.ring();
    let rd = ring.r_at(d as i64);
    let mut comps = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let qj = ring.ideal.extend(block.sop.prefix(s, j)?.gens())?;
        let rs = r_invariants(&Subquotient::quotient_ring(&qj))?;
        let top = rs.get(d - j).copied().unwrap_or(0) as i64;
        comps.push(Comparison::new(format!("j={j}"), rd, Relation::Le, top));
    }
    let v = judge(ring, block, &comps);
    Ok(CheckResult::new(NAME, v, comps, ""))
}

/// Generators of one ideal missing from the other, in both directions.
fn mismatch(a: &Ideal, b: &Ideal) -> i64 {
    let ab = a.gens().iter().filter(|g| !b.contains(g)).count();
    let ba = b.gens().iter().filter(|g| !a.contains(g)).count();
    (ab + ba) as i64
}

/// `(I^n + b) ∩ a_{ℓ-1} = I^n ∩ a_{ℓ-1}` for `n = 1..=n_max`, reported as
/// the number of generators on either side missing from the other.
pub fn claim_intersection(ring: &RingData, block: &ParameterIdeal, n_max: usize) -> Result<CheckResult> {
    const NAME: &str = "claim";
    let f = &ring.filtration;
    if f.ell == 1 {
        return Ok(CheckResult::new(NAME, Verdict::Vacuous, Vec::new(), "unmixed ring: a_{l-1} = 0"));
    }
    if !block.distinguished {
        return Ok(CheckResult::not_applicable(NAME, "q is not distinguished"));
    }
    if !ring.top_quotient_cm()? {
        return Ok(CheckResult::not_applicable(NAME, "R / a_{l-1} is not Cohen-Macaulay"));
    }
    let j = &ring.ideal;
    let s = j.ring();
    let a = ring.unmixed_component();
    let b = block.sop.tail(s, f)?;
    let mut powers = PowerSequence::new(&block.socle, j);
    let mut comps = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let p = powers.power(n as u32).to_vec();
        let lhs_gens: Vec<Polynomial> = p.iter().chain(b.gens()).cloned().collect();
        let lhs = j.extend(&lhs_gens)?.intersect(a)?;
        let rhs = j.extend(&p)?.intersect(a)?;
        comps.push(Comparison::new(format!("n={n}"), mismatch(&lhs, &rhs), Relation::Eq, 0));
    }
    let v = judge(ring, block, &comps);
    Ok(CheckResult::new(NAME, v, comps, ""))
}

/// Generators of `(q^n + a + b) : m` and of `q^n : m + a + b`.
fn first_socle_pair(j: &Ideal, qn: &[Polynomial], extra: &[Polynomial]) -> Result<(Ideal, Ideal)> {
    let m = Ideal::maximal(j.ring());
    let qn_ideal = j.extend(qn)?;
    let lhs = qn_ideal.extend(extra)?.colon(&m)?;
    let rhs = qn_ideal.colon(&m)?.extend(extra)?;
    Ok((lhs, rhs))
}

/// For `n = 0..=n_max`: `(q^n + a_{ℓ-1} + b) : m = q^n : m + a_{ℓ-1} + b`
/// and `q^{n+1} : m = q^n (q : m) + 0 : m`, on preimages in the ambient
/// ring.
///
/// The first identity is checked for `b = 0` and for the tail
/// `b = (x_{d_{ℓ-1}+1}, ..., x_d)` when that leaves at least one parameter
/// outside `b`; with no parameter left it fails from `n = 2` on.
pub fn lemma_f2_5(ring: &RingData, block: &ParameterIdeal, n_max: usize) -> Result<CheckResult> {
    const NAME: &str = "f25";
    if !ring.seq_cm {
        return Ok(CheckResult::not_applicable(NAME, "ring is not sequentially Cohen-Macaulay"));
    }
    if !block.distinguished {
        return Ok(CheckResult::not_applicable(NAME, "q is not distinguished"));
    }
    if !block.is_deep(ring) {
        return Ok(CheckResult::new(NAME, Verdict::DepthInsufficient, Vec::new(), "ir(q) differs from the sum of the r_j"));
    }
    let j = &ring.ideal;
    let s = j.ring();
    let m = Ideal::maximal(s);
    let f = &ring.filtration;
    let a = ring.unmixed_component();
    let kept = if f.ell >= 2 { f.dims[f.ell - 2] } else { 0 };
    let mut bs: Vec<(&str, Vec<Polynomial>)> = vec![("b=0", a.gens().to_vec())];
    let mut note = String::new();
    if kept >= 1 {
        let tail = block.sop.tail(s, f)?;
        bs.push(("b=tail", a.gens().iter().chain(tail.gens()).cloned().collect()));
    } else {
        note = "tail b is all of q, left out".to_string();
    }
    let zero_socle = j.colon(&m)?;
    let mut powers = PowerSequence::new(&block.q, j);
    let mut comps = Vec::with_capacity((bs.len() + 1) * (n_max + 1));
    for n in 0..=n_max {
        let qn = powers.power(n as u32).to_vec();
        for (label, extra) in &bs {
            let (lhs, rhs) = first_socle_pair(j, &qn, extra)?;
            comps.push(Comparison::new(format!("first {label} n={n}"), mismatch(&lhs, &rhs), Relation::Eq, 0));
        }

        let qn1 = powers.power(n as u32 + 1).to_vec();
        let lhs = j.extend(&qn1)?.colon(&m)?;
        let mut prod = Vec::with_capacity(qn.len() * block.socle.gens().len());
        for x in &qn {
            for y in block.socle.gens() {
                prod.push(j.normal_form(&s.mul(x, y)));
            }
        }
        let prod = linear_basis(s, prod.into_iter().filter(|p| !p.is_zero()).collect());
        let rhs = zero_socle.extend(&prod)?;
        comps.push(Comparison::new(format!("second n={n}"), mismatch(&lhs, &rhs), Relation::Eq, 0));
    }
    let v = judge(ring, block, &comps);
    Ok(CheckResult::new(NAME, v, comps, note))
}

/// `ir_R(q) = ir_{a_{ℓ-1}}(q) + ir_S(q)` with `S = R / a_{ℓ-1}`.
pub fn lemma_2_10(ring: &RingData, block: &ParameterIdeal) -> Result<CheckResult> {
    const NAME: &str = "l210";
    if !ring.top_quotient_cm()? {
        return Ok(CheckResult::not_applicable(NAME, "R / a_{l-1} is not Cohen-Macaulay"));
    }
    let a = ring.unmixed_component();
    let lower = if a.equals(&ring.ideal) {
        0
    } else {
        index_of_reducibility(&block.q, &Subquotient::new(a.clone(), ring.ideal.clone())?)?
    };
    let upper = index_of_reducibility(&block.q, &Subquotient::quotient_ring(a))?;
    let c = vec![Comparison::new("ir_R(q) = ir_a(q) + ir_S(q)", block.ir_q as i64, Relation::Eq, (lower + upper) as i64)];
    let v = judge(ring, block, &c);
    Ok(CheckResult::new(NAME, v, c, format!("ir_a(q) = {lower}, ir_S(q) = {upper}")))
}

/// Which checks a report runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Criteria {
    pub main1: bool,
    pub coe: bool,
    pub prop27: bool,
    pub t12: bool,
    pub t13: bool,
    pub ineq: bool,
    pub claim: bool,
}

impl Criteria {
    pub const NAMES: [&'static str; 7] = ["main1", "coe", "prop27", "t12", "t13", "ineq", "claim"];

    pub fn all() -> Self {
        Criteria { main1: true, coe: true, prop27: true, t12: true, t13: true, ineq: true, claim: true }
    }

    pub fn none() -> Self {
        Criteria { main1: false, coe: false, prop27: false, t12: false, t13: false, ineq: false, claim: false }
    }

    /// Enable one criterion by name; `false` for an unknown name.
    pub fn enable(&mut self, name: &str) -> bool {
        let slot = match name {
            "main1" => &mut self.main1,
            "coe" => &mut self.coe,
            "prop27" => &mut self.prop27,
            "t12" => &mut self.t12,
            "t13" => &mut self.t13,
            "ineq" => &mut self.ineq,
            "claim" => &mut self.claim,
            _ => return false,
        };
        *slot = true;
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub depths: Vec<u32>,
    pub seed: u64,
    pub block: BlockOptions,
    pub max_tries: usize,
    pub criteria: Criteria,
    /// Largest `n` for the claim and the `ir` identity.
    pub n_check: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            depths: vec![2],
            seed: 1,
            block: BlockOptions::default(),
            max_tries: 50,
            criteria: Criteria::all(),
            n_check: 3,
        }
    }
}

/// One parameter ideal and its verdicts, or the error that stopped it.
#[derive(Clone, Debug)]
pub struct BlockReport {
    pub depth: u32,
    pub block: Option<ParameterBlock>,
    pub checks: Vec<CheckResult>,
    pub error: Option<String>,
}

impl BlockReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub ring: RingData,
    pub blocks: Vec<BlockReport>,
    pub seed: u64,
}

impl InvariantReport {
    /// Any verdict `fails`.
    pub fn any_failure(&self) -> bool {
        self.blocks.iter().flat_map(|b| &b.checks).any(|c| c.verdict == Verdict::Fails)
    }

    pub fn any_error(&self) -> bool {
        self.blocks.iter().any(|b| b.error.is_some())
    }
}

/// Run every requested check on one parameter block.
pub fn run_checks(ring: &RingData, block: &ParameterBlock, opts: &ReportOptions) -> Result<Vec<CheckResult>> {
    let c = opts.criteria;
    let mut out = Vec::new();
    if c.main1 {
        out.push(criterion_main1(ring, block));
    }
    if c.coe {
        out.push(verify_cor_coe(ring, block));
    }
    if c.prop27 {
        out.push(verify_prop_2_7(ring, block, opts.block.ir_points));
    }
    if c.t12 {
        out.push(theorem_t1_2(ring, block));
    }
    if c.t13 {
        out.push(theorem_t1_3(ring, block));
    }
    if c.ineq {
        out.extend(inequality_suite(ring, block)?);
    }
    if c.claim {
        out.push(claim_intersection(ring, &block.param, opts.n_check)?);
    }
    Ok(out)
}

fn block_report(ring: &RingData, depth: u32, sop: Result<ParameterSystem>, opts: &ReportOptions) -> BlockReport {
    let run = || -> Result<(ParameterBlock, Vec<CheckResult>)> {
        let block = ParameterBlock::new(ring, sop?, opts.block)?;
        let checks = run_checks(ring, &block, opts)?;
        Ok((block, checks))
    };
    match run() {
        Ok((block, checks)) => BlockReport { depth, block: Some(block), checks, error: None },
        Err(e) => BlockReport { depth, block: None, checks: Vec::new(), error: Some(e.to_string()) },
    }
}

/// Ring data plus one seeded distinguished parameter ideal per requested
/// depth.
pub fn full_report(j: &Ideal, opts: &ReportOptions) -> Result<InvariantReport> {
    let ring = RingData::new(j)?;
    let mut blocks = Vec::new();
    if ring.dim > 0 {
        for &depth in &opts.depths {
            let sop = random_distinguished_sop(&ring.ideal, &ring.filtration, depth, opts.seed, opts.max_tries);
            blocks.push(block_report(&ring, depth, sop, opts));
        }
    }
    Ok(InvariantReport { ring, blocks, seed: opts.seed })
}

/// The report for a user-supplied parameter system.
pub fn report_for_parameters(j: &Ideal, xs: Vec<Polynomial>, opts: &ReportOptions) -> Result<InvariantReport> {
    let ring = RingData::new(j)?;
    if !is_system_of_parameters(&xs, &ring.ideal)? {
        return Err(AlgebraError::NotMPrimary);
    }
    let depth = xs.iter().filter_map(|x| x.order()).min().unwrap_or(0);
    let distinguished = is_distinguished(&xs, &ring.ideal, &ring.filtration)?;
    let sop = ParameterSystem { elements: xs, adic_depth: depth, distinguished, seed: opts.seed };
    let blocks = vec![block_report(&ring, depth, Ok(sop), opts)];
    Ok(InvariantReport { ring, blocks, seed: opts.seed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::order::TermOrder;
    use crate::poly::PolyRing;

    #[test]
    fn first_socle_identity_needs_a_parameter_outside_b() {
        // k[x,y], q = (x^2, y^2), b = q, n = 2:
        // (q^2 + q) : m = q + (xy) while q^2 : m + q = q
        let r = PolyRing::new(&["x", "y"], PrimeField::default(), TermOrder::GrevLex).unwrap();
        let (x, y) = (r.var(0), r.var(1));
        let j = Ideal::zero(&r);
        let q = vec![r.pow(&x, 2), r.pow(&y, 2)];
        let q2 = Ideal::new(&r, q.clone()).unwrap().power(2);
        let (lhs, rhs) = first_socle_pair(&j, q2.gens(), &q).unwrap();
        assert!(lhs.contains(&r.mul(&x, &y)));
        assert!(rhs.equals(&Ideal::new(&r, q.clone()).unwrap()));
        let (lhs, rhs) = first_socle_pair(&j, q2.gens(), &q[1..]).unwrap();
        assert!(lhs.equals(&rhs));
    }

    fn example() -> Ideal {
        let r = PolyRing::new(&["x1", "x2", "x3", "y"], PrimeField::default(), TermOrder::GrevLex).unwrap();
        let y = r.var(3);
        Ideal::new(&r, (0..3).map(|i| r.mul(&r.var(i), &y)).collect()).unwrap()
    }

    #[test]
    fn example_ring_report() {
        let rep = full_report(&example(), &ReportOptions::default()).unwrap();
        assert_eq!(rep.ring.r, vec![0, 1, 0, 1]);
        let b = &rep.blocks[0];
        assert!(b.error.is_none(), "{:?}", b.error);
        let blk = b.block.as_ref().unwrap();
        assert_eq!(blk.param.ir_q, 2);
        assert_eq!(blk.e_diff(1), 1);
        for c in &b.checks {
            assert!(c.verdict.passed() || c.verdict == Verdict::NotApplicable, "{c:?}");
        }
        assert_eq!(b.check("main1").unwrap().verdict, Verdict::Holds);
        assert_eq!(b.check("coe").unwrap().verdict, Verdict::Holds);
    }
}
