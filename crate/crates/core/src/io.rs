//! JSON input formats for algebras, modules, L∞ structures and twist elements.

use std::collections::BTreeMap;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{format_scalar, parse_scalar, Scalar};
use crate::formal::{FormalElement, FreeAlgebra, Generator, SuperMonomial, VectorField};
use crate::graded::{GradedBasis, GradingMode};
use crate::liealg::{GradedLieAlgebra, LieModule};
use crate::linfty::LinftyStructure;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}:{line}:{column}: field `{field}`: {message}")]
    Parse { path: String, line: usize, column: usize, field: String, message: String },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorJson {
    pub name: String,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub gen: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketJson {
    pub left: String,
    pub right: String,
    pub result: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub mode: GradingMode,
    pub generators: Vec<GeneratorJson>,
    #[serde(default)]
    pub brackets: Vec<BracketJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionJson {
    pub gen: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub carrier: Vec<GeneratorJson>,
    #[serde(default)]
    pub action: Vec<ActionJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialTermJson {
    pub monomial: BTreeMap<String, i32>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentJson {
    pub on: String,
    pub value: Vec<MonomialTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinftyJson {
    #[serde(default = "default_mode")]
    pub mode: GradingMode,
    pub generators: Vec<GeneratorJson>,
    pub derivation: Vec<ComponentJson>,
    #[serde(default)]
    pub truncation: Option<usize>,
}

fn default_mode() -> GradingMode {
    GradingMode::Z
}

/// Parses `text` with the offending field path, line and column in errors.
pub fn parse_json<T: DeserializeOwned>(text: &str, path: &str) -> Result<T, IoError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let field = e.path().to_string();
        let inner = e.into_inner();
        IoError::Parse { path: path.into(), line: inner.line(), column: inner.column(), field, message: inner.to_string() }
    })
}

fn read(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.display().to_string(), source })
}

fn invalid(path: &str, message: impl Into<String>) -> IoError {
    IoError::Invalid { path: path.into(), message: message.into() }
}

fn scalar(path: &str, s: &str) -> Result<Scalar, IoError> {
    parse_scalar(s).map_err(|e| invalid(path, format!("coefficient `{s}`: {e}")))
}

fn basis(path: &str, mode: GradingMode, gens: &[GeneratorJson]) -> Result<GradedBasis, IoError> {
    GradedBasis::new(mode, gens.iter().map(|g| g.name.clone()).collect(), gens.iter().map(|g| g.degree).collect())
        .map_err(|e| invalid(path, e.to_string()))
}

pub fn algebra_from_json(doc: &AlgebraJson, path: &str) -> Result<GradedLieAlgebra, IoError> {
    let b = basis(path, doc.mode, &doc.generators)?;
    let index = |name: &str| b.index_of(name).ok_or_else(|| invalid(path, format!("unknown generator `{name}`")));
    let mut brackets = Vec::new();
    for br in &doc.brackets {
        let mut result = Vec::new();
        for t in &br.result {
            result.push((index(&t.gen)?, scalar(path, &t.coeff)?));
        }
        brackets.push((index(&br.left)?, index(&br.right)?, result));
    }
    GradedLieAlgebra::from_brackets(b.clone(), &brackets).map_err(|e| invalid(path, e.to_string()))
}

pub fn parse_algebra(text: &str, path: &str) -> Result<GradedLieAlgebra, IoError> {
    algebra_from_json(&parse_json(text, path)?, path)
}

pub fn load_algebra(path: &Path) -> Result<GradedLieAlgebra, IoError> {
    parse_algebra(&read(path)?, &path.display().to_string())
}

/// Inverse of [`parse_algebra`] up to the evens-first basis order.
pub fn algebra_to_json(alg: &GradedLieAlgebra) -> AlgebraJson {
    let b = alg.basis();
    let generators = (0..b.len()).map(|i| GeneratorJson { name: b.name(i).into(), degree: b.degree(i) }).collect();
    let mut brackets = Vec::new();
    for i in 0..b.len() {
        for j in i..b.len() {
            let result: Vec<TermJson> = alg
                .bracket_terms(i, j)
                .map(|(k, c)| TermJson { gen: b.name(k).into(), coeff: format_scalar(c) })
                .collect();
            if !result.is_empty() {
                brackets.push(BracketJson { left: b.name(i).into(), right: b.name(j).into(), result });
            }
        }
    }
    AlgebraJson { mode: b.mode(), generators, brackets }
}

/// Rows and columns follow the carrier order; generators without an entry act by zero.
pub fn module_from_json(doc: &ModuleJson, alg: &GradedLieAlgebra, path: &str) -> Result<LieModule, IoError> {
    let carrier = basis(path, alg.mode(), &doc.carrier)?;
    let d = carrier.len();
    let zero = || vec![vec![Scalar::from_integer(0.into()); d]; d];
    let mut action: Vec<Vec<Vec<Scalar>>> = (0..alg.dim()).map(|_| zero()).collect();
    for a in &doc.action {
        let g = alg.basis().index_of(&a.gen).ok_or_else(|| invalid(path, format!("unknown generator `{}`", a.gen)))?;
        if a.matrix.len() != d || a.matrix.iter().any(|r| r.len() != d) {
            return Err(invalid(path, format!("matrix for `{}` must be {d}×{d}", a.gen)));
        }
        for (r, row) in a.matrix.iter().enumerate() {
            for (c, s) in row.iter().enumerate() {
                action[g][r][c] = scalar(path, s)?;
            }
        }
    }
    Ok(LieModule { carrier, action })
}

pub fn load_module(path: &Path, alg: &GradedLieAlgebra) -> Result<LieModule, IoError> {
    let p = path.display().to_string();
    module_from_json(&parse_json(&read(path)?, &p)?, alg, &p)
}

fn element_from_terms(a: &FreeAlgebra, terms: &[MonomialTermJson], path: &str) -> Result<FormalElement, IoError> {
    let mut f = FormalElement::zero();
    for t in terms {
        let mut e = vec![0i32; a.n_gens()];
        for (name, &k) in &t.monomial {
            let i = a.index_of(name).ok_or_else(|| invalid(path, format!("unknown generator `{name}`")))?;
            e[i] += k;
        }
        let m = a.monomial(e).ok_or_else(|| invalid(path, "odd generators may appear at most once"))?;
        f.add_term(m, scalar(path, &t.coeff)?);
    }
    Ok(f)
}

pub fn linfty_from_json(doc: &LinftyJson, path: &str) -> Result<LinftyStructure, IoError> {
    basis(path, doc.mode, &doc.generators)?;
    let gens = doc.generators.iter().map(|g| Generator { name: g.name.clone(), degree: g.degree }).collect();
    let a = FreeAlgebra::new(doc.mode, gens, false);
    let mut d = VectorField::zero();
    for c in &doc.derivation {
        let k = a.index_of(&c.on).ok_or_else(|| invalid(path, format!("unknown generator `{}`", c.on)))?;
        d.add_to(k, &element_from_terms(&a, &c.value, path)?);
    }
    Ok(LinftyStructure::new(a, d, doc.truncation))
}

pub fn parse_linfty(text: &str, path: &str) -> Result<LinftyStructure, IoError> {
    linfty_from_json(&parse_json(text, path)?, path)
}

pub fn load_linfty(path: &Path) -> Result<LinftyStructure, IoError> {
    parse_linfty(&read(path)?, &path.display().to_string())
}

/// A twist element: a JSON array of `{"monomial": …, "coeff": …}` terms.
pub fn load_element(path: &Path, a: &FreeAlgebra) -> Result<FormalElement, IoError> {
    let p = path.display().to_string();
    let terms: Vec<MonomialTermJson> = parse_json(&read(path)?, &p)?;
    element_from_terms(a, &terms, &p)
}

/// `{"gen": exponent}` with zero exponents omitted.
pub fn monomial_map(a: &FreeAlgebra, m: &SuperMonomial) -> BTreeMap<String, i32> {
    m.0.iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| (a.generators()[i].name.clone(), e))
        .collect()
}

pub fn element_to_terms(a: &FreeAlgebra, f: &FormalElement) -> Vec<MonomialTermJson> {
    f.terms().map(|(m, c)| MonomialTermJson { monomial: monomial_map(a, m), coeff: format_scalar(c) }).collect()
}
