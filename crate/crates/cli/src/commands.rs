//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use socle_core::checks::{full_report, report_for_parameters, BlockOptions, Criteria, ReportOptions};
use socle_core::homology::{dimension_filtration, is_cohen_macaulay, is_seq_cm_direct, DimensionFiltration, Subquotient};
use socle_core::invariants::{fiber_function, hilbert_samuel, ir_polynomial, FitOptions, DEFAULT_N_MAX, DEFAULT_WINDOW};
use socle_core::oracle::{monomial_primary_oracle, oracle_filtration};
use socle_core::sop::{is_distinguished, random_distinguished_sop, ParameterSystem};
use socle_core::{AlgebraError, Ideal, Polynomial};

use crate::corpus;
use crate::parse::{parse_exprs, parse_ring, RingFile};
use crate::report::{self, filtration_json, polys, ring_json, FiltrationJson, Format, RingJson, VERSION};
use crate::selftest;
use crate::Exit;

#[derive(Parser, Debug)]
#[command(name = "socle", version, about = "Socle, Hilbert and local cohomology invariants of graded rings over F_p")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Field characteristic, overriding the ring file.
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// Largest n evaluated when fitting Hilbert-type polynomials.
    #[arg(long, global = true, default_value_t = DEFAULT_N_MAX)]
    pub nmax: usize,
    /// Extra points a polynomial fit must reproduce.
    #[arg(long, global = true, default_value_t = DEFAULT_WINDOW)]
    pub window: usize,
    /// Seed for random parameter systems.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl Global {
    fn fit(&self) -> FitOptions {
        FitOptions { n_max: self.nmax, window: self.window, n_min: 0 }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the dimension filtration of the ring.
    Filtration { file: PathBuf },
    /// Hilbert-Samuel, socle and fiber data of an m-primary ideal.
    Invariants {
        file: PathBuf,
        /// A name from the ring file or comma-separated expressions.
        #[arg(long)]
        ideal: String,
    },
    /// Draw a random system of parameters.
    Sop {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        depth: u32,
        /// Respect the dimension filtration.
        #[arg(long)]
        distinguished: bool,
        #[arg(long, default_value_t = 50)]
        tries: usize,
    },
    /// Full invariant report with the theorem checks.
    Check {
        file: PathBuf,
        /// Parameter ideal: a name from the ring file or expressions.
        #[arg(long)]
        q: Option<String>,
        /// Adic depths for generated parameter ideals.
        #[arg(long, value_delimiter = ',', default_values_t = [2u32])]
        depth: Vec<u32>,
        /// Subset of main1, coe, prop27, t12, t13, ineq, claim.
        #[arg(long, value_delimiter = ',')]
        criteria: Option<Vec<String>>,
        #[arg(long, default_value_t = 50)]
        tries: usize,
    },
    /// Direct sequentially Cohen-Macaulay test and, for monomial ideals,
    /// the primary decomposition cross-check.
    Oracle { file: PathBuf },
    /// Run the built-in acceptance corpus.
    Selftest {
        /// Criterion numbers to run (default: all).
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<u8>>,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit: Exit,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { exit: Exit::Success, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { exit: Exit::Usage, stdout: String::new(), stderr: msg.into() }
    }

    fn algebra(e: AlgebraError) -> Self {
        let exit = match e {
            AlgebraError::Internal(_) => Exit::Inconsistent,
            AlgebraError::NotHomogeneous(_)
            | AlgebraError::NotMPrimary
            | AlgebraError::WrongParameterCount { .. }
            | AlgebraError::EmptyRing
            | AlgebraError::NotPrime(_)
            | AlgebraError::TooManyVariables(_) => Exit::Usage,
            _ => Exit::CheckFailed,
        };
        Outcome { exit, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(&cli),
        Err(e) => {
            let exit = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Exit::Success,
                _ => Exit::Usage,
            };
            let text = e.render().to_string();
            if exit == Exit::Success {
                Outcome::ok(text)
            } else {
                Outcome::usage(text)
            }
        }
    }
}

pub fn dispatch(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let res = match &cli.command {
        Command::Filtration { file } => load(file, g).and_then(|rf| filtration(&rf, g)),
        Command::Invariants { file, ideal } => load(file, g).and_then(|rf| invariants(&rf, ideal, g)),
        Command::Sop { file, depth, distinguished, tries } => {
            load(file, g).and_then(|rf| sop(&rf, *depth, *distinguished, *tries, g))
        }
        Command::Check { file, q, depth, criteria, tries } => {
            load(file, g).and_then(|rf| check(&rf, q.as_deref(), depth, criteria.as_deref(), *tries, g))
        }
        Command::Oracle { file } => load(file, g).and_then(|rf| oracle(&rf, g)),
        Command::Selftest { only } => Ok(run_selftest(only.as_deref(), g)),
    };
    res.unwrap_or_else(|o| o)
}

/// Read a ring file from disk, `-` for stdin, or a shipped corpus name.
fn load(path: &PathBuf, g: &Global) -> Result<RingFile, Outcome> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Outcome::usage(format!("error: stdin: {e}\n")))?
    } else {
        match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => match corpus::find(&path.to_string_lossy()) {
                Some(entry) => entry.text.to_string(),
                None => return Err(Outcome::usage(format!("error: {}: {e}\n", path.display()))),
            },
        }
    };
    parse_ring(&text, g.p).map_err(|e| Outcome::usage(format!("error: {}: {e}\n", path.display())))
}

fn defining(rf: &RingFile) -> Result<Ideal, Outcome> {
    rf.defining_ideal().map_err(Outcome::algebra)
}

/// A name from the file or inline expressions.
fn resolve(rf: &RingFile, expr: &str) -> Result<Vec<Polynomial>, Outcome> {
    if let Some(gens) = rf.named(expr.trim()) {
        return Ok(gens.to_vec());
    }
    parse_exprs(&rf.ring, expr).map_err(|e| Outcome::usage(format!("error: in '{expr}': {}\n", e.msg)))
}

fn emit<T: Serialize>(value: &T, g: &Global, text: impl FnOnce(&T) -> String) -> String {
    match g.format {
        Format::Json => report::to_json(value),
        Format::Text => text(value),
    }
}

#[derive(Serialize)]
struct FiltrationOut {
    ring: RingJson,
    filtration: FiltrationJson,
    version: &'static str,
}

fn filtration(rf: &RingFile, g: &Global) -> Result<Outcome, Outcome> {
    let j = defining(rf)?;
    let f = dimension_filtration(&j).map_err(Outcome::algebra)?;
    let out = FiltrationOut { ring: ring_json(&j), filtration: filtration_json(&j, &f), version: VERSION };
    Ok(Outcome::ok(emit(&out, g, |o| {
        let mut s = String::new();
        report::ring_text(&mut s, &o.ring);
        report::filtration_text(&mut s, &o.filtration);
        s
    })))
}

#[derive(Serialize)]
struct InvariantsOut {
    ring: RingJson,
    ideal: Vec<String>,
    e: Vec<i64>,
    length_values: Vec<u64>,
    ir_values: Vec<u64>,
    g: Vec<i64>,
    mu_values: Vec<u64>,
    f: Vec<i64>,
    version: &'static str,
}

fn invariants(rf: &RingFile, expr: &str, g: &Global) -> Result<Outcome, Outcome> {
    let j = defining(rf)?;
    let gens = resolve(rf, expr)?;
    let i = Ideal::new(&rf.ring, gens.clone()).map_err(Outcome::algebra)?;
    i.check_homogeneous().map_err(Outcome::algebra)?;
    let fit = g.fit();
    let e = hilbert_samuel(&i, &Subquotient::quotient_ring(&j), fit).map_err(Outcome::algebra)?;
    let ir = ir_polynomial(&i, &j, fit).map_err(Outcome::algebra)?;
    let mu = fiber_function(&i, &j, fit).map_err(Outcome::algebra)?;
    let out = InvariantsOut {
        ring: ring_json(&j),
        ideal: polys(&rf.ring, &gens),
        e: e.coefficients,
        length_values: e.values,
        ir_values: ir.values,
        g: ir.coefficients,
        mu_values: mu.values,
        f: mu.coefficients,
        version: VERSION,
    };
    Ok(Outcome::ok(emit(&out, g, |o| {
        let mut s = String::new();
        report::ring_text(&mut s, &o.ring);
        let _ = writeln!(s, "ideal = ({})", o.ideal.join(", "));
        let _ = writeln!(s, "e = {:?}\nlength(R/I^(n+1)) = {:?}", o.e, o.length_values);
        let _ = writeln!(s, "ir(I^(n+1)) = {:?}\ng = {:?}", o.ir_values, o.g);
        let _ = writeln!(s, "mu(I^(n+1)) = {:?}\nf = {:?}", o.mu_values, o.f);
        s
    })))
}

#[derive(Serialize)]
struct SopOut {
    ring: RingJson,
    elements: Vec<String>,
    adic_depth: u32,
    distinguished: bool,
    seed: u64,
    version: &'static str,
}

/// A filtration with a single step, so every slot draws from all of `m`.
fn trivial_filtration(j: &Ideal, d: usize) -> DimensionFiltration {
    DimensionFiltration { ideals: vec![j.clone(), Ideal::unit(j.ring())], dims: vec![d], ell: 1 }
}

fn sop(rf: &RingFile, depth: u32, distinguished: bool, tries: usize, g: &Global) -> Result<Outcome, Outcome> {
    let j = defining(rf)?;
    let f = dimension_filtration(&j).map_err(Outcome::algebra)?;
    let d = j.dim_quotient().map_err(Outcome::algebra)?;
    let pools = if distinguished { f.clone() } else { trivial_filtration(&j, d) };
    let s: ParameterSystem =
        random_distinguished_sop(&j, &pools, depth, g.seed, tries).map_err(Outcome::algebra)?;
    let is_dist = is_distinguished(&s.elements, &j, &f).map_err(Outcome::algebra)?;
    let out = SopOut {
        ring: ring_json(&j),
        elements: polys(&rf.ring, &s.elements),
        adic_depth: s.adic_depth,
        distinguished: is_dist,
        seed: s.seed,
        version: VERSION,
    };
    Ok(Outcome::ok(emit(&out, g, |o| {
        let mut s = String::new();
        report::ring_text(&mut s, &o.ring);
        for (k, x) in o.elements.iter().enumerate() {
            let _ = writeln!(s, "x{} = {x}", k + 1);
        }
        let _ = writeln!(s, "adic depth = {}, distinguished = {}, seed = {}", o.adic_depth, o.distinguished, o.seed);
        s
    })))
}

fn criteria_from(list: Option<&[String]>) -> Result<Criteria, Outcome> {
    let Some(list) = list else { return Ok(Criteria::all()) };
    let mut c = Criteria::none();
    for name in list {
        if !c.enable(name.trim()) {
            return Err(Outcome::usage(format!(
                "error: unknown criterion '{name}' (expected one of {})\n",
                Criteria::NAMES.join(", ")
            )));
        }
    }
    Ok(c)
}

fn check(
    rf: &RingFile,
    q: Option<&str>,
    depths: &[u32],
    criteria: Option<&[String]>,
    tries: usize,
    g: &Global,
) -> Result<Outcome, Outcome> {
    let j = defining(rf)?;
    let opts = ReportOptions {
        depths: depths.to_vec(),
        seed: g.seed,
        block: BlockOptions { fit: g.fit(), ..BlockOptions::default() },
        max_tries: tries,
        criteria: criteria_from(criteria)?,
        ..ReportOptions::default()
    };
    let rep = match q {
        Some(expr) => report_for_parameters(&j, resolve(rf, expr)?, &opts),
        None => full_report(&j, &opts),
    }
    .map_err(Outcome::algebra)?;
    let json = report::report_json(&rep);
    let exit = if rep.any_failure() || rep.any_error() { Exit::CheckFailed } else { Exit::Success };
    let stdout = emit(&json, g, report::report_text);
    Ok(Outcome { exit, stdout, stderr: String::new() })
}

#[derive(Serialize)]
struct ComponentJson {
    ideal: Vec<String>,
    dim: usize,
}

#[derive(Serialize)]
struct MonomialJson {
    components: Vec<ComponentJson>,
    filtration_agrees: bool,
}

#[derive(Serialize)]
struct OracleOut {
    ring: RingJson,
    filtration: FiltrationJson,
    dim: usize,
    depth: usize,
    seq_cm: bool,
    cohen_macaulay: bool,
    monomial: Option<MonomialJson>,
    blocks: Vec<()>,
    version: &'static str,
}

/// Ext-based filtration against the monomial decomposition, when `J` is
/// monomial.
pub fn filtration_agreement(j: &Ideal, f: &DimensionFiltration) -> Result<Option<bool>, AlgebraError> {
    let (dims, ideals) = match oracle_filtration(j) {
        Ok(v) => v,
        Err(AlgebraError::NotMonomial) => return Ok(None),
        Err(e) => return Err(e),
    };
    Ok(Some(dims == f.dims && ideals.len() == f.ideals.len() && ideals.iter().zip(&f.ideals).all(|(a, b)| a.equals(b))))
}

fn oracle(rf: &RingFile, g: &Global) -> Result<Outcome, Outcome> {
    let j = defining(rf)?;
    let f = dimension_filtration(&j).map_err(Outcome::algebra)?;
    let rr = Subquotient::quotient_ring(&j);
    let dim = j.dim_quotient().map_err(Outcome::algebra)?;
    let depth = socle_core::homology::depth(&rr).map_err(Outcome::algebra)?;
    let monomial = match filtration_agreement(&j, &f).map_err(Outcome::algebra)? {
        None => None,
        Some(agrees) => {
            let comps = monomial_primary_oracle(&j).map_err(Outcome::algebra)?;
            let components = comps
                .iter()
                .map(|(c, d)| ComponentJson { ideal: polys(&rf.ring, c.gens()), dim: *d })
                .collect();
            Some(MonomialJson { components, filtration_agrees: agrees })
        }
    };
    let out = OracleOut {
        ring: ring_json(&j),
        filtration: filtration_json(&j, &f),
        dim,
        depth,
        seq_cm: is_seq_cm_direct(&f).map_err(Outcome::algebra)?,
        cohen_macaulay: is_cohen_macaulay(&rr).map_err(Outcome::algebra)?,
        monomial,
        blocks: Vec::new(),
        version: VERSION,
    };
    let exit = match &out.monomial {
        Some(m) if !m.filtration_agrees => Exit::Inconsistent,
        _ => Exit::Success,
    };
    let stdout = emit(&out, g, |o| {
        let mut s = String::new();
        report::ring_text(&mut s, &o.ring);
        report::filtration_text(&mut s, &o.filtration);
        let _ = writeln!(s, "dim = {}, depth = {}", o.dim, o.depth);
        let _ = writeln!(s, "sequentially cohen-macaulay: {}, cohen-macaulay: {}", o.seq_cm, o.cohen_macaulay);
        if let Some(m) = &o.monomial {
            s.push_str("primary components:\n");
            for c in &m.components {
                let _ = writeln!(s, "  ({}) of dimension {}", c.ideal.join(", "), c.dim);
            }
            let _ = writeln!(s, "filtration agrees with decomposition: {}", m.filtration_agrees);
        }
        s
    });
    Ok(Outcome { exit, stdout, stderr: String::new() })
}

fn run_selftest(only: Option<&[u8]>, g: &Global) -> Outcome {
    let opts = selftest::Options { seed: g.seed, fit: g.fit(), ..selftest::Options::default() };
    let results = selftest::run(only, &opts);
    let mut stdout = String::new();
    let mut exit = Exit::Success;
    for r in &results {
        stdout.push_str(&r.render());
        exit = exit.worst(r.exit());
    }
    Outcome { exit, stdout, stderr: String::new() }
}
