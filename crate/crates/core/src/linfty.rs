//! L∞ structures as square-zero derivations on free graded-commutative algebras,
//! with truncated cohomology sliced by degree and an internal weight grading.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::ce::{ce_algebra, ce_vector_field, McElement, Side};
use crate::exact::{homology_dim, int, ExactError, Scalar, SparseMatrix};
use crate::formal::{FormalElement, FreeAlgebra, SuperMonomial, VectorField};
use crate::graded::{GradingMode, sign_of};
use crate::liealg::GradedLieAlgebra;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinftyError {
    #[error("invalid L-infinity structure: {0}")]
    Invalid(String),
    #[error("divergence is not a cocycle: {0}")]
    NotCocycle(String),
    #[error("not a Maurer-Cartan element: {0}")]
    NotMaurerCartan(String),
    #[error("weight grading rejected: {0}")]
    InvalidWeights(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// `(𝔤[1])*` generators with a derivation `ℓ` of degree +1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinftyStructure {
    pub algebra: FreeAlgebra,
    pub derivation: VectorField,
    /// Highest polynomial order stored and used by default.
    pub truncation: Option<usize>,
}

impl LinftyStructure {
    pub fn new(algebra: FreeAlgebra, derivation: VectorField, truncation: Option<usize>) -> Self {
        LinftyStructure { algebra, derivation, truncation }
    }

    /// The quadratic structure `d_CE` of a graded Lie algebra.
    pub fn from_lie_algebra(alg: &GradedLieAlgebra) -> Self {
        let ce = ce_algebra(alg);
        let d = ce_vector_field(alg, &ce);
        LinftyStructure { algebra: ce, derivation: d, truncation: None }
    }

    pub fn with_truncation(mut self, t: Option<usize>) -> Self {
        self.truncation = t;
        self
    }

    pub fn mode(&self) -> GradingMode {
        self.algebra.mode()
    }

    /// `ℓ(f)`.
    pub fn apply(&self, f: &FormalElement) -> FormalElement {
        self.algebra.apply_vector_field(&self.derivation, f)
    }

    /// Largest polynomial order among the coefficients of `ℓ`.
    pub fn max_order(&self) -> usize {
        self.derivation
            .components()
            .flat_map(|(_, f)| f.terms().map(|(m, _)| m.order() as usize))
            .max()
            .unwrap_or(0)
    }

    /// Stored truncation, or `max(8, 2·max order + 2)`.
    pub fn default_truncation(&self) -> usize {
        self.truncation.unwrap_or_else(|| 8.max(2 * self.max_order() + 2))
    }

    /// `|𝔤| = Σ_{odd} |g| + Σ_{even} (1 − |g|)` over generators, or its parity in Z2 mode.
    pub fn total_dimension(&self) -> i64 {
        let a = &self.algebra;
        let v: i64 = (0..a.n_gens())
            .map(|i| if a.is_odd(i) { a.degree(i) } else { 1 - a.degree(i) })
            .sum();
        a.reduce(v)
    }

    pub fn even_generators(&self) -> Vec<usize> {
        (0..self.algebra.n_gens()).filter(|&i| !self.algebra.is_odd(i)).collect()
    }

    pub fn odd_generators(&self) -> Vec<usize> {
        (0..self.algebra.n_gens()).filter(|&i| self.algebra.is_odd(i)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct LinftyReport {
    pub violations: Vec<String>,
}

impl LinftyReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks degree +1, no constant term and `ℓ(ℓ(g)) = 0` up to the truncation order.
pub fn validate_linfty(s: &LinftyStructure) -> LinftyReport {
    let a = &s.algebra;
    let t = s.default_truncation() as i64;
    let mut violations = Vec::new();
    let one = a.reduce(1);
    for (i, f) in s.derivation.components() {
        let name = &a.generators()[i].name;
        for (m, _) in f.terms() {
            if m.order() == 0 {
                violations.push(format!("constant term in ℓ({name})"));
            }
            if a.reduce(a.mono_degree(m) - a.degree(i)) != one {
                violations.push(format!(
                    "ℓ({name}) has the term {} of the wrong degree",
                    a.format_monomial(m)
                ));
            }
        }
    }
    for i in 0..a.n_gens() {
        let sq = s.apply(&s.apply(&a.gen(i))).truncate(t);
        let first = sq.terms().next().map(|(m, _)| a.format_monomial(m));
        if let Some(m) = first {
            violations.push(format!("ℓ²({}) ≠ 0: contains {m}", a.generators()[i].name));
        }
    }
    LinftyReport { violations }
}

/// True iff `ℓ` has no linear part.
pub fn is_minimal(s: &LinftyStructure) -> bool {
    s.derivation.components().all(|(_, f)| f.terms().all(|(m, _)| m.order() != 1))
}

/// True iff `ℓ` vanishes on every even generator.
pub fn satisfies_hypothesis_h(s: &LinftyStructure) -> bool {
    s.even_generators().iter().all(|&i| s.derivation.component(i).is_zero())
}

/// `∇(ℓ)`, checked to have degree 1 and to satisfy `ℓ(∇ℓ) = 0` up to the truncation order.
pub fn divergence_cocycle(s: &LinftyStructure) -> Result<McElement, LinftyError> {
    let a = &s.algebra;
    let div = a.divergence(&s.derivation);
    let one = a.reduce(1);
    if let Some((m, _)) = div.terms().find(|(m, _)| a.mono_degree(m) != one) {
        return Err(LinftyError::NotCocycle(format!("term {} does not have degree 1", a.format_monomial(m))));
    }
    let l = s.apply(&div).truncate(s.default_truncation() as i64);
    if !l.is_zero() {
        return Err(LinftyError::NotCocycle(format!("ℓ(∇ℓ) = {}", a.format(&l))));
    }
    Ok(McElement { element: div })
}

/// Checks that `ξ` has degree 1 and `ℓ(ξ) = 0` up to the truncation order.
pub fn linfty_mc(s: &LinftyStructure, xi: FormalElement) -> Result<McElement, LinftyError> {
    let a = &s.algebra;
    let one = a.reduce(1);
    if let Some((m, _)) = xi.terms().find(|(m, _)| a.mono_degree(m) != one) {
        return Err(LinftyError::NotMaurerCartan(format!("{} does not have degree 1", a.format_monomial(m))));
    }
    let l = s.apply(&xi).truncate(s.default_truncation() as i64);
    if !l.is_zero() {
        return Err(LinftyError::NotMaurerCartan(format!("ℓ(ξ) = {}", a.format(&l))));
    }
    Ok(McElement { element: xi })
}

/// Integer weights on generators, positive on even ones, with `ℓ` raising weight by `shift`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightGrading {
    pub weights: Vec<i64>,
    pub shift: i64,
}

impl WeightGrading {
    pub fn weight(&self, m: &SuperMonomial) -> i64 {
        m.0.iter().zip(&self.weights).map(|(&e, &w)| e as i64 * w).sum()
    }
}

/// Each term `(monomial, Some(k))` of `ℓ` must satisfy `w(monomial) − w_k = shift`;
/// `(monomial, None)` terms of a twist must satisfy `w(monomial) = shift`.
fn constraint_terms(s: &LinftyStructure, extra: &[&FormalElement]) -> Vec<(SuperMonomial, Option<usize>)> {
    let mut out: Vec<(SuperMonomial, Option<usize>)> = Vec::new();
    for (k, f) in s.derivation.components() {
        out.extend(f.terms().map(|(m, _)| (m.clone(), Some(k))));
    }
    for f in extra {
        out.extend(f.terms().map(|(m, _)| (m.clone(), None)));
    }
    out
}

fn check_grading(
    s: &LinftyStructure,
    terms: &[(SuperMonomial, Option<usize>)],
    w: &[i64],
) -> Option<i64> {
    let mut shift = None;
    for (m, k) in terms {
        let v: i64 = m.0.iter().zip(w).map(|(&e, &x)| e as i64 * x).sum::<i64>() - k.map_or(0, |k| w[k]);
        match shift {
            None => shift = Some(v),
            Some(c) if c != v => return None,
            _ => {}
        }
    }
    let _ = s;
    Some(shift.unwrap_or(0))
}

/// Validates an explicit grading.
pub fn check_weight_grading(
    s: &LinftyStructure,
    g: &WeightGrading,
    extra: &[&FormalElement],
) -> Result<(), LinftyError> {
    if g.weights.len() != s.algebra.n_gens() {
        return Err(LinftyError::InvalidWeights("one weight per generator is required".into()));
    }
    if s.even_generators().iter().any(|&i| g.weights[i] < 1) {
        return Err(LinftyError::InvalidWeights("even generators need positive weight".into()));
    }
    let terms = constraint_terms(s, extra);
    match check_grading(s, &terms, &g.weights) {
        Some(c) if terms.is_empty() || c == g.shift => Ok(()),
        _ => Err(LinftyError::InvalidWeights("the differential is not homogeneous".into())),
    }
}

/// Brute-force search preferring the smallest `|shift|`, then the smallest `Σ|w|`, then
/// the lexicographically smallest weight vector.
pub fn find_weight_grading(s: &LinftyStructure, extra: &[&FormalElement]) -> Option<WeightGrading> {
    let n = s.algebra.n_gens();
    let terms = constraint_terms(s, extra);
    let n_even = s.even_generators().len() as u32;
    let n_odd = s.odd_generators().len() as u32;
    let mut r = 6.max(s.max_order() as i64 + 1);
    while r > 2 && (r as u64).pow(n_even) * ((2 * r + 1) as u64).pow(n_odd) > 200_000 {
        r -= 1;
    }
    let ranges: Vec<(i64, i64)> =
        (0..n).map(|i| if s.algebra.is_odd(i) { (-r, r) } else { (1, r) }).collect();
    let mut best: Option<(i64, i64, Vec<i64>, i64)> = None;
    let mut w: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    loop {
        if let Some(c) = check_grading(s, &terms, &w) {
            let key = (c.abs(), w.iter().map(|x| x.abs()).sum::<i64>(), w.clone(), c);
            if best.as_ref().map_or(true, |b| (key.0, key.1, &key.2) < (b.0, b.1, &b.2)) {
                best = Some(key);
            }
        }
        let mut i = n;
        loop {
            if i == 0 {
                return best.map(|(_, _, weights, shift)| WeightGrading { weights, shift });
            }
            i -= 1;
            if w[i] < ranges[i].1 {
                w[i] += 1;
                break;
            }
            w[i] = ranges[i].0;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceDim {
    pub degree: i64,
    pub weight: Option<i64>,
    pub dim: usize,
    pub stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeTotal {
    pub degree: i64,
    /// Sum over stable slices.
    pub dim: usize,
    pub stable: bool,
}

/// Truncated cohomology, per slice and summed per degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinftyCohomology {
    pub grading: Option<WeightGrading>,
    pub truncation: usize,
    pub slices: Vec<SliceDim>,
    pub degrees: Vec<DegreeTotal>,
}

impl LinftyCohomology {
    pub fn dim(&self, degree: i64) -> Option<usize> {
        self.degrees.iter().find(|d| d.degree == degree).map(|d| d.dim)
    }

    pub fn is_stable(&self, degree: i64) -> bool {
        self.degrees.iter().any(|d| d.degree == degree && d.stable)
    }
}

type SliceKey = (i64, Option<i64>);

/// Finite slices of the quotient by monomials of order `> T`.
struct SliceEngine<'a> {
    s: &'a LinftyStructure,
    left: FormalElement,
    right: FormalElement,
    grading: Option<WeightGrading>,
    t: usize,
    min_odd_sum: i64,
    max_odd_sum: i64,
    min_even_weight: i64,
    bases: RefCell<HashMap<SliceKey, Vec<SuperMonomial>>>,
    all: RefCell<Option<Vec<SuperMonomial>>>,
}

impl<'a> SliceEngine<'a> {
    fn new(s: &'a LinftyStructure, twist: Option<(&McElement, Side)>, grading: Option<WeightGrading>, t: usize) -> Self {
        let (mut left, mut right) = (FormalElement::zero(), FormalElement::zero());
        match twist {
            Some((xi, Side::Left)) => left = xi.element.clone(),
            Some((xi, Side::Right)) => right = xi.element.clone(),
            None => {}
        }
        let (mut lo, mut hi, mut me) = (0, 0, i64::MAX);
        if let Some(g) = &grading {
            for i in 0..s.algebra.n_gens() {
                let w = g.weights[i];
                if s.algebra.is_odd(i) {
                    lo += w.min(0);
                    hi += w.max(0);
                } else {
                    me = me.min(w);
                }
            }
        }
        SliceEngine {
            s,
            left,
            right,
            grading,
            t,
            min_odd_sum: lo,
            max_odd_sum: hi,
            min_even_weight: if me == i64::MAX { 1 } else { me },
            bases: RefCell::default(),
            all: RefCell::default(),
        }
    }

    fn shift(&self) -> i64 {
        self.grading.as_ref().map_or(0, |g| g.shift)
    }

    fn next_degree(&self, d: i64) -> i64 {
        self.s.algebra.reduce(d + 1)
    }

    fn prev_degree(&self, d: i64) -> i64 {
        self.s.algebra.reduce(d - 1)
    }

    fn n_odd(&self) -> i64 {
        self.s.odd_generators().len() as i64
    }

    fn n_even(&self) -> usize {
        self.s.even_generators().len()
    }

    /// Whether every monomial of weight `w` has order `≤ T`.
    fn complete(&self, w: Option<i64>) -> bool {
        match w {
            Some(w) => {
                let even = if self.n_even() == 0 { 0 } else { (w - self.min_odd_sum).max(0) / self.min_even_weight };
                self.n_odd() + even <= self.t as i64
            }
            None => self.n_even() == 0 && self.n_odd() <= self.t as i64,
        }
    }

    /// Weights `w` whose slices are complete (or all nonempty ones when there are no even generators).
    fn weight_range(&self) -> Vec<i64> {
        let hi = if self.n_even() == 0 {
            self.max_odd_sum
        } else {
            let mut w = self.min_odd_sum;
            while self.complete(Some(w + 1)) {
                w += 1;
            }
            w
        };
        (self.min_odd_sum..=hi).collect()
    }

    fn all_monomials(&self) -> Vec<SuperMonomial> {
        if let Some(v) = self.all.borrow().as_ref() {
            return v.clone();
        }
        let v: Vec<SuperMonomial> = (0..=self.t).flat_map(|k| self.s.algebra.monomials_of_order(k)).collect();
        *self.all.borrow_mut() = Some(v.clone());
        v
    }

    fn weighted(&self, w: i64, g: &WeightGrading) -> Vec<SuperMonomial> {
        let a = &self.s.algebra;
        let odd = self.s.odd_generators();
        let even = self.s.even_generators();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << odd.len()) {
            let mut e = vec![0i32; a.n_gens()];
            let mut used = 0i64;
            let mut count = 0usize;
            for (b, &i) in odd.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    e[i] = 1;
                    used += g.weights[i];
                    count += 1;
                }
            }
            let r = w - used;
            if r < 0 || count > self.t {
                continue;
            }
            fill_even(&even, &g.weights, 0, r, self.t - count, &mut e, &mut out);
        }
        out.sort();
        out
    }

    fn basis(&self, key: SliceKey) -> Vec<SuperMonomial> {
        if let Some(v) = self.bases.borrow().get(&key) {
            return v.clone();
        }
        let (d, w) = key;
        let a = &self.s.algebra;
        let pool = match (w, &self.grading) {
            (Some(w), Some(g)) => self.weighted(w, g),
            _ => self.all_monomials(),
        };
        let v: Vec<SuperMonomial> = pool.into_iter().filter(|m| a.mono_degree(m) == d).collect();
        self.bases.borrow_mut().insert(key, v.clone());
        v
    }

    /// The twisted differential on one monomial, truncated.
    fn apply(&self, m: &SuperMonomial) -> FormalElement {
        let a = &self.s.algebra;
        let f = FormalElement::from_monomial(m.clone(), Scalar::one());
        let mut out = self.s.apply(&f);
        if !self.left.is_zero() {
            out = out.add(&a.multiply(&self.left, &f));
        }
        if !self.right.is_zero() {
            let s = int(-sign_of(a.mono_parity(m), true));
            out.add_scaled(&a.multiply(&f, &self.right), &s);
        }
        out.truncate(self.t as i64)
    }

    fn target(&self, key: SliceKey) -> SliceKey {
        (self.next_degree(key.0), key.1.map(|w| w + self.shift()))
    }

    fn source(&self, key: SliceKey) -> SliceKey {
        (self.prev_degree(key.0), key.1.map(|w| w - self.shift()))
    }

    fn matrix(&self, key: SliceKey) -> Result<SparseMatrix, LinftyError> {
        let src = self.basis(key);
        let tgt = self.basis(self.target(key));
        let index: HashMap<&SuperMonomial, usize> = tgt.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut d = SparseMatrix::zeros(tgt.len(), src.len());
        for (col, m) in src.iter().enumerate() {
            for (t, c) in self.apply(m).terms() {
                match index.get(t) {
                    Some(&row) => d.add_to(row, col, c),
                    None => {
                        return Err(LinftyError::Internal(format!(
                            "{} leaves its slice",
                            self.s.algebra.format_monomial(t)
                        )))
                    }
                }
            }
        }
        Ok(d)
    }

    fn cohomology(&self, key: SliceKey) -> Result<usize, LinftyError> {
        let d_out = self.matrix(key)?;
        let d_in = self.matrix(self.source(key))?;
        homology_dim(&d_out, &d_in).map_err(|e| match e {
            ExactError::CompositionNonzero => LinftyError::NotMaurerCartan("the twisted differential does not square to zero".into()),
            e => e.into(),
        })
    }

    fn slice_complete(&self, key: SliceKey) -> bool {
        self.complete(self.source(key).1) && self.complete(key.1) && self.complete(self.target(key).1)
    }

    /// `(dim, complete)` per slice over the degree window.
    fn run(&self, degrees: &[i64]) -> Result<Vec<(SliceKey, usize, bool)>, LinftyError> {
        let weights: Vec<Option<i64>> = match &self.grading {
            Some(_) => self.weight_range().into_iter().map(Some).collect(),
            None => vec![None],
        };
        let mut out = Vec::new();
        for &d in degrees {
            for &w in &weights {
                let key = (d, w);
                if self.basis(key).is_empty() {
                    continue;
                }
                out.push((key, self.cohomology(key)?, self.slice_complete(key)));
            }
        }
        Ok(out)
    }
}

fn fill_even(
    even: &[usize],
    weights: &[i64],
    pos: usize,
    remaining: i64,
    order_left: usize,
    e: &mut Vec<i32>,
    out: &mut Vec<SuperMonomial>,
) {
    if pos == even.len() {
        if remaining == 0 {
            out.push(SuperMonomial(e.clone()));
        }
        return;
    }
    let i = even[pos];
    let w = weights[i];
    let mut k = 0;
    while k as i64 * w <= remaining && k <= order_left {
        e[i] = k as i32;
        fill_even(even, weights, pos + 1, remaining - k as i64 * w, order_left - k, e, out);
        k += 1;
    }
    e[i] = 0;
}

/// Degrees in the window: every integer in `lo..=hi` (Z mode) or both parities (Z2 mode).
pub fn degree_list(s: &LinftyStructure, window: (i64, i64)) -> Vec<i64> {
    match s.mode() {
        GradingMode::Z => (window.0..=window.1).collect(),
        GradingMode::Z2 => vec![0, 1],
    }
}

/// `min(0, lowest generator degree) ..= |𝔤| + 1`.
pub fn default_window(s: &LinftyStructure) -> (i64, i64) {
    let a = &s.algebra;
    let lo = (0..a.n_gens()).map(|i| a.degree(i)).min().unwrap_or(0).min(0);
    (lo, s.total_dimension().max(0) + 1)
}

/// Cohomology of the truncated complex with `ℓ` (optionally twisted), sliced by degree and by
/// a weight grading when one exists; flags compare the runs at `T` and `T + 1`.
pub fn truncated_cohomology(
    s: &LinftyStructure,
    twist: Option<(&McElement, Side)>,
    window: (i64, i64),
    order: Option<usize>,
    weights: Option<WeightGrading>,
) -> Result<LinftyCohomology, LinftyError> {
    let t = order.unwrap_or_else(|| s.default_truncation());
    let extra: Vec<&FormalElement> = twist.iter().map(|(x, _)| &x.element).collect();
    let grading = match weights {
        Some(g) => {
            check_weight_grading(s, &g, &extra)?;
            Some(g)
        }
        None => find_weight_grading(s, &extra),
    };
    let degrees = degree_list(s, window);
    let first = SliceEngine::new(s, twist, grading.clone(), t).run(&degrees)?;
    let second = SliceEngine::new(s, twist, grading.clone(), t + 1).run(&degrees)?;
    let again: HashMap<SliceKey, (usize, bool)> = second.iter().map(|(k, d, c)| (*k, (*d, *c))).collect();
    let slices: Vec<SliceDim> = first
        .iter()
        .map(|(k, dim, complete)| {
            let same = again.get(k).map_or(false, |(d2, _)| d2 == dim);
            SliceDim { degree: k.0, weight: k.1, dim: *dim, stable: *complete && same }
        })
        .collect();
    let total = |runs: &[(SliceKey, usize, bool)], d: i64, stable_only: bool| -> usize {
        runs.iter()
            .filter(|(k, _, c)| k.0 == d && (*c || !stable_only))
            .map(|(_, dim, _)| *dim)
            .sum()
    };
    let degrees = degrees
        .iter()
        .map(|&d| {
            let has_grading = grading.is_some() || s.even_generators().is_empty();
            let (a, b) = if has_grading {
                (total(&first, d, true), total(&second, d, true))
            } else {
                (total(&first, d, false), total(&second, d, false))
            };
            DegreeTotal { degree: d, dim: a, stable: a == b }
        })
        .collect();
    Ok(LinftyCohomology { grading, truncation: t, slices, degrees })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub degree: i64,
    pub untwisted: usize,
    pub dual_degree: i64,
    pub twisted: usize,
    pub stable: bool,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub total_dimension: i64,
    pub minimal: bool,
    pub divergence_vanishes: bool,
    pub rows: Vec<ConjectureRow>,
    /// All stable rows agree.
    pub symmetric: bool,
}

/// Untwisted `H^d` against the divergence-twisted `H^{|𝔤|−d}` over the window.
pub fn conjecture_evidence(
    s: &LinftyStructure,
    window: (i64, i64),
    order: Option<usize>,
) -> Result<ConjectureReport, LinftyError> {
    let n = s.total_dimension();
    let div = divergence_cocycle(s)?;
    let untwisted = truncated_cohomology(s, None, window, order, None)?;
    let dual_window = match s.mode() {
        GradingMode::Z => (n - window.1, n - window.0),
        GradingMode::Z2 => (0, 1),
    };
    let twisted = truncated_cohomology(s, Some((&div, Side::Left)), dual_window, order, None)?;
    let rows: Vec<ConjectureRow> = degree_list(s, window)
        .into_iter()
        .map(|d| {
            let dd = s.algebra.reduce(n - d);
            let (u, t) = (untwisted.dim(d).unwrap_or(0), twisted.dim(dd).unwrap_or(0));
            let stable = untwisted.is_stable(d) && twisted.is_stable(dd);
            ConjectureRow { degree: d, untwisted: u, dual_degree: dd, twisted: t, stable, equal: u == t }
        })
        .collect();
    let symmetric = rows.iter().any(|r| r.stable) && rows.iter().filter(|r| r.stable).all(|r| r.equal);
    Ok(ConjectureReport {
        total_dimension: n,
        minimal: is_minimal(s),
        divergence_vanishes: div.element.is_zero(),
        rows,
        symmetric,
    })
}

fn structure(mode: GradingMode, gens: &[(&str, i64)], parts: &[(usize, &[i32], i64)]) -> LinftyStructure {
    let a = FreeAlgebra::from_pairs(mode, gens, false);
    let mut d = VectorField::zero();
    for &(k, exps, c) in parts {
        let m = a.monomial(exps.to_vec()).expect("valid monomial");
        d.add_to(k, &FormalElement::from_monomial(m, int(c)));
    }
    LinftyStructure::new(a, d, None)
}

/// `Λ(x) ⊗ 𝕜[[y]]`, `|x| = 2n+1`, `|y| = 2`, `ℓ = y^{n+1} ∂/∂x`.
pub fn example_projective_space(n: u32) -> LinftyStructure {
    let n = n as i32;
    structure(GradingMode::Z, &[("x", 2 * n as i64 + 1), ("y", 2)], &[(0, &[0, n + 1], 1)])
}

/// `𝕜[[x]] ⊗ Λ(y)`, `|x| = 0`, `|y| = 1`, `ℓ = xⁿ y ∂/∂x`.
pub fn example_square_zero(n: u32) -> LinftyStructure {
    structure(GradingMode::Z, &[("x", 0), ("y", 1)], &[(0, &[n as i32, 1], 1)])
}

/// `𝕜[[x,y]] ⊗ Λ(z)`, `|x| = |y| = 0`, `|z| = 1`, `ℓ = yⁿ z ∂/∂x`.
pub fn example_open_case(n: u32) -> LinftyStructure {
    structure(GradingMode::Z, &[("x", 0), ("y", 0), ("z", 1)], &[(0, &[0, n as i32, 1], 1)])
}

/// The acyclic dg Lie algebra `d(a) = b`: `𝕜[[p]] ⊗ Λ(q)` with `ℓ(p) = q`.
pub fn example_non_minimal() -> LinftyStructure {
    structure(GradingMode::Z, &[("p", 0), ("q", 1)], &[(0, &[0, 1], 1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedBasis;

    fn nonabelian2() -> GradedLieAlgebra {
        let b = GradedBasis::numbered(GradingMode::Z, "e", &[0, 0]);
        GradedLieAlgebra::from_brackets(b, &[(0, 1, vec![(1, int(1))])]).unwrap()
    }

    #[test]
    fn validate_examples() {
        for n in 1..4 {
            assert!(validate_linfty(&example_projective_space(n)).is_valid());
            assert!(validate_linfty(&example_square_zero(n)).is_valid());
        }
        let bad = structure(GradingMode::Z, &[("x", 0), ("y", 1)], &[(1, &[0, 1], 1)]);
        let r = validate_linfty(&bad);
        assert!(r.violations.iter().any(|v| v.contains("wrong degree")));
    }

    #[test]
    fn minimal_examples() {
        assert!(is_minimal(&example_square_zero(2)));
        assert!(!is_minimal(&example_non_minimal()));
        assert!(is_minimal(&LinftyStructure::from_lie_algebra(&nonabelian2())));
    }

    #[test]
    fn hypothesis_h_examples() {
        assert!(satisfies_hypothesis_h(&example_projective_space(2)));
        assert!(!satisfies_hypothesis_h(&example_square_zero(2)));
        assert!(satisfies_hypothesis_h(&LinftyStructure::from_lie_algebra(&nonabelian2())));
    }

    #[test]
    fn divergence_examples() {
        assert!(divergence_cocycle(&example_projective_space(3)).unwrap().element.is_zero());
        let s = example_square_zero(3);
        let expected = FormalElement::from_monomial(SuperMonomial(vec![2, 1]), int(3));
        assert_eq!(divergence_cocycle(&s).unwrap().element, expected);
        let s = LinftyStructure::from_lie_algebra(&nonabelian2());
        assert_eq!(divergence_cocycle(&s).unwrap().element, s.algebra.gen(0));
    }

    #[test]
    fn projective_space_cohomology() {
        for n in 1..4u32 {
            let s = example_projective_space(n);
            let h = truncated_cohomology(&s, None, default_window(&s), None, None).unwrap();
            for d in 0..=(2 * n as i64 + 1) {
                let expected = usize::from(d % 2 == 0 && d <= 2 * n as i64);
                assert_eq!(h.dim(d), Some(expected), "n={n} d={d}");
                assert!(h.is_stable(d));
            }
        }
    }

    #[test]
    fn square_zero_cohomology() {
        for n in 1..5u32 {
            let s = example_square_zero(n);
            let w = default_window(&s);
            let h = truncated_cohomology(&s, None, w, None, None).unwrap();
            assert_eq!((h.dim(0), h.dim(1)), (Some(1), Some(n as usize)));
            let div = divergence_cocycle(&s).unwrap();
            let t = truncated_cohomology(&s, Some((&div, Side::Left)), w, None, None).unwrap();
            assert_eq!((t.dim(0), t.dim(1)), (Some(0), Some(n as usize - 1)));
            assert!(t.is_stable(0) && t.is_stable(1) && h.is_stable(0) && h.is_stable(1));
        }
    }

    #[test]
    fn weight_search_is_deterministic() {
        let g = find_weight_grading(&example_open_case(2), &[]).unwrap();
        assert_eq!(g, WeightGrading { weights: vec![1, 1, -1], shift: 0 });
        let g = find_weight_grading(&example_square_zero(1), &[]).unwrap();
        assert_eq!(g, WeightGrading { weights: vec![1, 0], shift: 0 });
    }
}
