//! JSON and text renderings of invariant reports.

use std::fmt::Write as _;

use serde::Serialize;
use socle_core::checks::{BlockReport, CheckResult, Comparison, InvariantReport};
use socle_core::homology::DimensionFiltration;
use socle_core::invariants::FittedSequence;
use socle_core::{Ideal, PolyRing, Polynomial};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RingJson {
    pub p: u32,
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FiltrationJson {
    pub ell: usize,
    pub dims: Vec<usize>,
    /// Generators of `a_0, ..., a_ℓ` modulo the defining ideal.
    pub ideals: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ComparisonJson {
    pub label: String,
    pub lhs: i64,
    pub relation: &'static str,
    pub rhs: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerdictJson {
    pub verdict: &'static str,
    pub overall: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_j: Option<Vec<ComparisonJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparisons: Option<Vec<ComparisonJson>>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

/// Verdicts keyed by check name, serialised as an object in check order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdicts(pub Vec<(String, VerdictJson)>);

impl Serialize for Verdicts {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl Verdicts {
    pub fn get(&self, name: &str) -> Option<&VerdictJson> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BlockJson {
    pub adic_depth: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub q: Vec<String>,
    #[serde(rename = "I")]
    pub socle: Vec<String>,
    pub adic_order: u32,
    pub distinguished: bool,
    pub ir_q: u64,
    pub e_q: Vec<i64>,
    #[serde(rename = "e_I")]
    pub e_i: Vec<i64>,
    pub ir_values: Vec<u64>,
    pub g: Vec<i64>,
    pub f: Vec<i64>,
    pub f_q: Vec<i64>,
    pub verdicts: Verdicts,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReportJson {
    pub ring: RingJson,
    pub filtration: FiltrationJson,
    pub depth: usize,
    pub dim: usize,
    pub r: Vec<usize>,
    pub betti: Vec<usize>,
    pub seq_cm: bool,
    pub cohen_macaulay: bool,
    pub e0_m: i64,
    pub blocks: Vec<BlockJson>,
    pub seed: u64,
    pub version: &'static str,
}

pub fn polys(ring: &PolyRing, gens: &[Polynomial]) -> Vec<String> {
    gens.iter().map(|g| ring.display(g)).collect()
}

pub fn ring_json(j: &Ideal) -> RingJson {
    let ring = j.ring();
    RingJson { p: ring.field().characteristic(), vars: ring.names().to_vec(), ideal: polys(ring, j.gens()) }
}

/// `a_i` written by the generators outside `J`.
pub fn filtration_json(j: &Ideal, f: &DimensionFiltration) -> FiltrationJson {
    let ideals = f
        .ideals
        .iter()
        .map(|a| {
            let gens: Vec<Polynomial> = a.reduced().gens().iter().filter(|g| !j.contains(g)).cloned().collect();
            polys(j.ring(), &gens)
        })
        .collect();
    FiltrationJson { ell: f.ell, dims: f.dims.clone(), ideals }
}

fn comparison_json(c: &Comparison) -> ComparisonJson {
    ComparisonJson { label: c.label.clone(), lhs: c.lhs, relation: c.relation.symbol(), rhs: c.rhs, holds: c.holds() }
}

pub fn verdict_json(c: &CheckResult) -> VerdictJson {
    let list: Vec<ComparisonJson> = c.comparisons.iter().map(comparison_json).collect();
    let (per_j, comparisons) = if c.name == "main1" { (Some(list), None) } else { (None, Some(list)) };
    VerdictJson { verdict: c.verdict.as_str(), overall: c.verdict.passed(), per_j, comparisons, note: c.note.clone() }
}

fn coeffs(f: &FittedSequence) -> Vec<i64> {
    f.coefficients.clone()
}

fn opt_coeffs(f: &Option<FittedSequence>) -> Vec<i64> {
    f.as_ref().map(coeffs).unwrap_or_default()
}

fn block_json(ring: &PolyRing, b: &BlockReport) -> BlockJson {
    let verdicts = Verdicts(b.checks.iter().map(|c| (c.name.to_string(), verdict_json(c))).collect());
    match &b.block {
        Some(blk) => BlockJson {
            adic_depth: b.depth,
            error: b.error.clone(),
            q: polys(ring, &blk.param.sop.elements),
            socle: polys(ring, blk.param.socle.gens()),
            adic_order: blk.param.adic_order,
            distinguished: blk.param.distinguished,
            ir_q: blk.param.ir_q,
            e_q: coeffs(&blk.e_q),
            e_i: coeffs(&blk.e_i),
            ir_values: blk.ir.as_ref().map(|f| f.values.clone()).unwrap_or_default(),
            g: opt_coeffs(&blk.ir),
            f: opt_coeffs(&blk.fiber_i),
            f_q: opt_coeffs(&blk.fiber_q),
            verdicts,
        },
        None => BlockJson {
            adic_depth: b.depth,
            error: b.error.clone(),
            q: Vec::new(),
            socle: Vec::new(),
            adic_order: 0,
            distinguished: false,
            ir_q: 0,
            e_q: Vec::new(),
            e_i: Vec::new(),
            ir_values: Vec::new(),
            g: Vec::new(),
            f: Vec::new(),
            f_q: Vec::new(),
            verdicts,
        },
    }
}

pub fn report_json(rep: &InvariantReport) -> ReportJson {
    let ring = &rep.ring;
    let j = &ring.ideal;
    ReportJson {
        ring: ring_json(j),
        filtration: filtration_json(j, &ring.filtration),
        depth: ring.depth,
        dim: ring.dim,
        r: ring.r.clone(),
        betti: ring.betti.clone(),
        seq_cm: ring.seq_cm,
        cohen_macaulay: ring.cm,
        e0_m: ring.e0_m,
        blocks: rep.blocks.iter().map(|b| block_json(j.ring(), b)).collect(),
        seed: rep.seed,
        version: VERSION,
    }
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialises");
    s.push('\n');
    s
}

fn list<T: ToString>(xs: &[T]) -> String {
    format!("[{}]", xs.iter().map(T::to_string).collect::<Vec<_>>().join(", "))
}

fn ideal_text(gens: &[String]) -> String {
    if gens.is_empty() {
        "(0)".into()
    } else {
        format!("({})", gens.join(", "))
    }
}

pub fn ring_text(out: &mut String, r: &RingJson) {
    let _ = writeln!(out, "ring: F_{}[{}] / {}", r.p, r.vars.join(", "), ideal_text(&r.ideal));
}

pub fn filtration_text(out: &mut String, f: &FiltrationJson) {
    let _ = writeln!(out, "filtration: ell = {}, dims = {}", f.ell, list(&f.dims));
    for (i, a) in f.ideals.iter().enumerate() {
        let _ = writeln!(out, "  a_{i} = {}", ideal_text(a));
    }
}

fn verdict_text(out: &mut String, name: &str, v: &VerdictJson) {
    let _ = write!(out, "    {name}: {}", v.verdict);
    if !v.note.is_empty() {
        let _ = write!(out, " ({})", v.note);
    }
    out.push('\n');
    for c in v.per_j.iter().chain(v.comparisons.iter()).flatten() {
        let mark = if c.holds { "ok" } else { "violated" };
        let _ = writeln!(out, "      {}: {} {} {} {mark}", c.label, c.lhs, c.relation, c.rhs);
    }
}

pub fn report_text(r: &ReportJson) -> String {
    let mut out = String::new();
    ring_text(&mut out, &r.ring);
    filtration_text(&mut out, &r.filtration);
    let _ = writeln!(out, "dim = {}, depth = {}, e_0(m) = {}", r.dim, r.depth, r.e0_m);
    let _ = writeln!(out, "r = {}", list(&r.r));
    let _ = writeln!(out, "betti = {}", list(&r.betti));
    let _ = writeln!(out, "sequentially cohen-macaulay: {}, cohen-macaulay: {}", r.seq_cm, r.cohen_macaulay);
    for b in &r.blocks {
        let _ = writeln!(out, "block at adic depth {}", b.adic_depth);
        if let Some(e) = &b.error {
            let _ = writeln!(out, "  error: {e}");
            continue;
        }
        let _ = writeln!(out, "  q = {}", ideal_text(&b.q));
        let _ = writeln!(out, "  I = q : m = {}", ideal_text(&b.socle));
        let _ = writeln!(out, "  adic order = {}, distinguished = {}, ir(q) = {}", b.adic_order, b.distinguished, b.ir_q);
        let _ = writeln!(out, "  e(q) = {}", list(&b.e_q));
        let _ = writeln!(out, "  e(I) = {}", list(&b.e_i));
        let _ = writeln!(out, "  ir(q^(n+1)) = {}", list(&b.ir_values));
        let _ = writeln!(out, "  g = {}", list(&b.g));
        let _ = writeln!(out, "  f(I) = {}", list(&b.f));
        let _ = writeln!(out, "  f(q) = {}", list(&b.f_q));
        if !b.verdicts.0.is_empty() {
            out.push_str("  verdicts:\n");
            for (name, v) in &b.verdicts.0 {
                verdict_text(&mut out, name, v);
            }
        }
    }
    let _ = writeln!(out, "seed = {}, version = {}", r.seed, r.version);
    out
}
