//! Command implementations behind the `gradual` binary.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use gradual_core::berezin::{verify_main_theorem, BerezinError};
use gradual_core::ce::{
    ce_algebra, ce_vector_field, hazewinkel_check, twisted_cohomology, CeError, McElement, Side, DEFAULT_TRUNCATION,
};
use gradual_core::exact::{format_scalar, ExactError};
use gradual_core::io::{element_to_terms, load_algebra, load_element, load_module, parse_json, IoError};
use gradual_core::liealg::{supertrace_character, validate, validate_module, GradedLieAlgebra, LieModule};
use gradual_core::linfty::{
    conjecture_evidence, default_window, divergence_cocycle, is_minimal, linfty_mc, satisfies_hypothesis_h,
    truncated_cohomology, validate_linfty, LinftyError, LinftyStructure,
};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Validate,
    Cohomology,
    Character,
    Hazewinkel,
    Divergence,
    Linfty,
    Conjecture,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Twist {
    None,
    Divergence,
    File(PathBuf),
}

impl std::str::FromStr for Twist {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "none" => Ok(Twist::None),
            "divergence" => Ok(Twist::Divergence),
            _ => s
                .strip_prefix("file:")
                .map(|p| Twist::File(PathBuf::from(p)))
                .ok_or_else(|| format!("expected none, divergence or file:PATH, got `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub input: PathBuf,
    pub modules: Vec<PathBuf>,
    pub truncation: Option<usize>,
    pub min_degree: Option<i64>,
    pub max_degree: Option<i64>,
    pub twist: Option<Twist>,
    pub format: Format,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Io(#[from] IoError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Input(_) => 1,
            CliError::Check(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<CeError> for CliError {
    fn from(e: CeError) -> Self {
        match e {
            CeError::Exact(ExactError::CompositionNonzero) | CeError::Internal(_) => CliError::Internal(e.to_string()),
            CeError::Exact(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<BerezinError> for CliError {
    fn from(e: BerezinError) -> Self {
        match e {
            BerezinError::NotClosed => CliError::Check(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<LinftyError> for CliError {
    fn from(e: LinftyError) -> Self {
        match e {
            LinftyError::NotCocycle(_) => CliError::Check(e.to_string()),
            LinftyError::Internal(_) | LinftyError::Exact(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// A finished command: report plus exit status (0 or 2).
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Value,
    pub table: String,
    pub code: i32,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.report).expect("serializable") + "\n",
            Format::Table => self.table.clone(),
        }
    }
}

/// `GRADUAL_CATALOG`, or the catalog shipped with this crate.
pub fn catalog_dir() -> PathBuf {
    std::env::var_os("GRADUAL_CATALOG")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/catalog")))
}

/// Existing paths win; otherwise the name is looked up in the catalog, with or without
/// a leading `catalog/` and the `.json` suffix.
pub fn resolve(path: &Path) -> PathBuf {
    if path.exists() {
        return path.to_path_buf();
    }
    let dir = catalog_dir();
    let rel = path.strip_prefix("catalog").unwrap_or(path);
    for cand in [dir.join(rel), dir.join(rel).with_extension("json")] {
        if cand.exists() {
            return cand;
        }
    }
    path.to_path_buf()
}

enum Input {
    Algebra(GradedLieAlgebra),
    Linfty(LinftyStructure),
}

fn load_input(path: &Path) -> Result<Input, CliError> {
    let path = resolve(path);
    let label = path.display().to_string();
    let text = std::fs::read_to_string(&path).map_err(|source| IoError::Read { path: label.clone(), source })?;
    let value: Value = parse_json(&text, &label)?;
    if value.get("derivation").is_some() {
        Ok(Input::Linfty(gradual_core::io::parse_linfty(&text, &label)?))
    } else {
        Ok(Input::Algebra(load_algebra(&path)?))
    }
}

fn algebra_input(path: &Path) -> Result<GradedLieAlgebra, CliError> {
    match load_input(path)? {
        Input::Algebra(a) => Ok(a),
        Input::Linfty(_) => Err(CliError::Input(format!("{} is an L-infinity structure, not a Lie algebra", path.display()))),
    }
}

fn linfty_input(path: &Path) -> Result<LinftyStructure, CliError> {
    match load_input(path)? {
        Input::Algebra(a) => Ok(LinftyStructure::from_lie_algebra(&a)),
        Input::Linfty(s) => Ok(s),
    }
}

fn module_input(cfg: &RunConfig, alg: &GradedLieAlgebra) -> Result<LieModule, CliError> {
    match cfg.modules.first() {
        None => Ok(LieModule::trivial(alg)),
        Some(p) => {
            let m = load_module(&resolve(p), alg)?;
            let problems = validate_module(alg, &m);
            if problems.is_empty() {
                Ok(m)
            } else {
                Err(CliError::Input(problems.join("; ")))
            }
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cfg.command {
        Command::Validate => run_validate(cfg),
        Command::Cohomology => run_cohomology(cfg),
        Command::Character => run_character(cfg),
        Command::Hazewinkel => run_hazewinkel(cfg),
        Command::Divergence => run_divergence(cfg),
        Command::Linfty => run_linfty(cfg),
        Command::Conjecture => run_conjecture(cfg),
    }
}

fn run_validate(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let (kind, violations) = match load_input(&cfg.input)? {
        Input::Algebra(alg) => {
            let mut v = validate(&alg).describe(&alg);
            for p in &cfg.modules {
                let m = load_module(&resolve(p), &alg)?;
                v.extend(validate_module(&alg, &m).into_iter().map(|s| format!("{}: {s}", p.display())));
            }
            ("lie_algebra", v)
        }
        Input::Linfty(s) => ("linfty", validate_linfty(&s).violations),
    };
    let valid = violations.is_empty();
    let mut table = format!("{kind}: {}\n", if valid { "valid" } else { "INVALID" });
    for v in &violations {
        let _ = writeln!(table, "  {v}");
    }
    Ok(Outcome {
        report: json!({"kind": kind, "valid": valid, "violations": violations}),
        table,
        code: if valid { 0 } else { 1 },
    })
}

fn lie_twist(cfg: &RunConfig, alg: &GradedLieAlgebra) -> Result<Option<McElement>, CliError> {
    match cfg.twist.clone().unwrap_or(Twist::None) {
        Twist::None => Ok(None),
        Twist::Divergence => Ok(Some(McElement::from_character(alg, &supertrace_character(alg))?)),
        Twist::File(p) => {
            let xi = load_element(&resolve(&p), &ce_algebra(alg))?;
            Ok(Some(McElement::new(alg, xi)?))
        }
    }
}

fn run_cohomology(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let alg = algebra_input(&cfg.input)?;
    let m = module_input(cfg, &alg)?;
    let graded = alg.n_odd() > 0;
    let max = cfg.max_degree.map_or(alg.dim() + if graded { 2 } else { 0 }, |d| d.max(0) as usize);
    let t = if graded { Some(cfg.truncation.unwrap_or(DEFAULT_TRUNCATION)) } else { cfg.truncation };
    let xi = lie_twist(cfg, &alg)?;
    let table = twisted_cohomology(&alg, &m, max, t, xi.as_ref().map(|x| (x, Side::Left)))?;
    let mut out = String::from("degree  dim  stable\n");
    for d in &table.degrees {
        let _ = writeln!(out, "{:>6}  {:>3}  {}", d.i, d.dim, d.stable);
    }
    let _ = writeln!(out, "euler: {}", table.euler());
    Ok(Outcome {
        report: json!({"degrees": table.degrees, "truncation": table.truncation, "euler": table.euler(),
                       "twisted": xi.is_some()}),
        table: out,
        code: 0,
    })
}

fn run_character(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let alg = algebra_input(&cfg.input)?;
    let r = verify_main_theorem(&alg)?;
    let ok = r.holds();
    let mut out = String::from("gen  r  str_ad  match\n");
    for c in &r.character {
        let _ = writeln!(out, "{}  {}  {}  {}", c.gen, c.r, c.str_ad, c.matches);
    }
    let _ = writeln!(out, "berezinian degree {} (expected {}), closed: {}", r.berezinian_degree, r.expected_degree, r.closed);
    let _ = writeln!(out, "match: {ok}");
    let mut report = serde_json::to_value(&r).expect("serializable");
    report["match"] = json!(ok);
    Ok(Outcome { report, table: out, code: if ok { 0 } else { 2 } })
}

fn run_hazewinkel(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let alg = algebra_input(&cfg.input)?;
    let m = module_input(cfg, &alg)?;
    let twist = match cfg.twist.clone().unwrap_or(Twist::Divergence) {
        Twist::None => false,
        Twist::Divergence => true,
        Twist::File(_) => return Err(CliError::Input("hazewinkel accepts only none or divergence twists".into())),
    };
    let r = hazewinkel_check(&alg, &m, twist)?;
    let mut out = String::from("i  H_i(tw)  H^(n-i)  match\n");
    for d in &r.degrees {
        let _ = writeln!(out, "{}  {}  {}  {}", d.i, d.homology, d.cohomology, d.matches);
    }
    let _ = writeln!(out, "match: {}", r.matches);
    Ok(Outcome {
        report: serde_json::to_value(&r).expect("serializable"),
        table: out,
        code: if r.matches { 0 } else { 2 },
    })
}

fn run_divergence(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match load_input(&cfg.input)? {
        Input::Algebra(alg) => {
            let ce = ce_algebra(&alg);
            let div = ce.divergence(&ce_vector_field(&alg, &ce));
            let chi = supertrace_character(&alg);
            let mut expected = gradual_core::FormalElement::zero();
            for (q, c) in chi.iter().enumerate() {
                expected.add_scaled(&ce.gen(q), c);
            }
            let ok = div == expected;
            let str_ad: Vec<Value> = chi
                .iter()
                .enumerate()
                .map(|(i, c)| json!({"gen": alg.basis().name(i), "str_ad": format_scalar(c)}))
                .collect();
            let table = format!("∇(d_CE) = {}\nΣ str(ad) x = {}\nmatch: {ok}\n", ce.format(&div), ce.format(&expected));
            Ok(Outcome {
                report: json!({"divergence": element_to_terms(&ce, &div), "supertrace": str_ad, "match": ok}),
                table,
                code: if ok { 0 } else { 2 },
            })
        }
        Input::Linfty(s) => {
            let div = s.algebra.divergence(&s.derivation);
            let cocycle = divergence_cocycle(&s).is_ok();
            let table = format!("∇(ℓ) = {}\ncocycle: {cocycle}\n", s.algebra.format(&div));
            Ok(Outcome {
                report: json!({"divergence": element_to_terms(&s.algebra, &div), "cocycle": cocycle}),
                table,
                code: if cocycle { 0 } else { 2 },
            })
        }
    }
}

fn window(cfg: &RunConfig, s: &LinftyStructure) -> (i64, i64) {
    let (lo, hi) = default_window(s);
    (cfg.min_degree.unwrap_or(lo), cfg.max_degree.unwrap_or(hi))
}

fn run_linfty(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let s = linfty_input(&cfg.input)?.with_truncation_override(cfg.truncation);
    let report = validate_linfty(&s);
    if !report.is_valid() {
        return Err(CliError::Input(report.violations.join("; ")));
    }
    let xi = match cfg.twist.clone().unwrap_or(Twist::None) {
        Twist::None => None,
        Twist::Divergence => Some(divergence_cocycle(&s)?),
        Twist::File(p) => Some(linfty_mc(&s, load_element(&resolve(&p), &s.algebra)?)?),
    };
    let h = truncated_cohomology(&s, xi.as_ref().map(|x| (x, Side::Left)), window(cfg, &s), None, None)?;
    let div = s.algebra.divergence(&s.derivation);
    let dims: serde_json::Map<String, Value> = h.degrees.iter().map(|d| (format!("H{}", d.degree), json!(d.dim))).collect();
    let mut out = format!(
        "|g| = {}, minimal: {}, hypothesis H: {}, truncation: {}\n∇(ℓ) = {}\n",
        s.total_dimension(),
        is_minimal(&s),
        satisfies_hypothesis_h(&s),
        h.truncation,
        s.algebra.format(&div)
    );
    if let Some(g) = &h.grading {
        let _ = writeln!(out, "weights {:?}, shift {}", g.weights, g.shift);
    }
    out.push_str("degree  dim  stable\n");
    for d in &h.degrees {
        let _ = writeln!(out, "{:>6}  {:>3}  {}", d.degree, d.dim, d.stable);
    }
    Ok(Outcome {
        report: json!({
            "total_dimension": s.total_dimension(),
            "minimal": is_minimal(&s),
            "hypothesis_h": satisfies_hypothesis_h(&s),
            "divergence": element_to_terms(&s.algebra, &div),
            "twisted": xi.is_some(),
            "truncation": h.truncation,
            "grading": h.grading,
            "degrees": h.degrees,
            "slices": h.slices,
            "dims": dims,
        }),
        table: out,
        code: 0,
    })
}

fn run_conjecture(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let s = linfty_input(&cfg.input)?.with_truncation_override(cfg.truncation);
    let r = conjecture_evidence(&s, window(cfg, &s), None)?;
    let mut out = format!("|g| = {}, minimal: {}, ∇(ℓ) = 0: {}\n", r.total_dimension, r.minimal, r.divergence_vanishes);
    out.push_str("d  H^d  |g|-d  H^(|g|-d)_tw  stable  equal\n");
    for row in &r.rows {
        let _ = writeln!(
            out,
            "{}  {}  {}  {}  {}  {}",
            row.degree, row.untwisted, row.dual_degree, row.twisted, row.stable, row.equal
        );
    }
    let _ = writeln!(out, "symmetric: {}", r.symmetric);
    Ok(Outcome { report: serde_json::to_value(&r).expect("serializable"), table: out, code: 0 })
}

trait TruncationOverride {
    fn with_truncation_override(self, t: Option<usize>) -> Self;
}

impl TruncationOverride for LinftyStructure {
    fn with_truncation_override(self, t: Option<usize>) -> Self {
        match t {
            Some(_) => self.with_truncation(t),
            None => self,
        }
    }
}
