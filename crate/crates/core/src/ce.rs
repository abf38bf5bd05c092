//! Chevalley–Eilenberg cochain and chain complexes with coefficients, twisting by
//! Maurer–Cartan elements, cohomology tables and the Hazewinkel duality check.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::{frac, homology_dim, int, ExactError, Scalar, SparseMatrix};
use crate::formal::{FormalElement, FreeAlgebra, Generator, SuperMonomial, VectorField};
use crate::graded::{sign_of, GradingMode};
use crate::liealg::{
    dual_module, twisted_dual_with_character, GradedLieAlgebra, LieModule,
};

pub const DEFAULT_TRUNCATION: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CeError {
    #[error("the algebra has odd elements; a truncation order is required")]
    TruncationRequired,
    #[error("not a Maurer-Cartan element: {0}")]
    NotMaurerCartan(String),
    #[error("twisting element must be linear in the generators")]
    NotLinear,
    #[error("the algebra must be ungraded")]
    NotUngraded,
    #[error("degree {0} is outside the built range")]
    DegreeOutOfRange(usize),
    #[error("module does not match the algebra: {0}")]
    ModuleMismatch(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// `CE^•(𝔤)`: generator `i` is dual to basis element `i` of `𝔤`.
pub fn ce_algebra(alg: &GradedLieAlgebra) -> FreeAlgebra {
    let b = alg.basis();
    let gens = (0..b.len())
        .map(|i| {
            let (prefix, degree) = match alg.mode() {
                GradingMode::Z => (if b.is_odd(i) { "y" } else { "x" }, 1 - b.degree(i)),
                GradingMode::Z2 => (if b.is_odd(i) { "y" } else { "x" }, (1 + b.degree(i)).rem_euclid(2)),
            };
            Generator { name: format!("{prefix}_{}", b.name(i)), degree }
        })
        .collect();
    FreeAlgebra::new(alg.mode(), gens, false)
}

/// `d_CE = −½ Σ (−1)^{|e_p|(|e_q|+1)} N_pq^k x^p x^q ∂/∂x^k`.
pub fn ce_vector_field(alg: &GradedLieAlgebra, ce: &FreeAlgebra) -> VectorField {
    let mut xi = VectorField::zero();
    let minus_half = frac(-1, 2);
    for (p, q, k, c) in alg.nonzero_constants() {
        let s = sign_of(alg.is_odd(p), !alg.is_odd(q));
        let term = ce.multiply(&ce.gen(p), &ce.gen(q)).scale(&(c * &minus_half * int(s)));
        xi.add_to(k, &term);
    }
    xi
}

/// Number of odd-type (even generator) factors in a cochain monomial.
fn y_order(alg: &GradedLieAlgebra, m: &SuperMonomial) -> usize {
    m.order_in(alg.n_even()..alg.dim()) as usize
}

pub type CochainBasis = Vec<(SuperMonomial, usize)>;

/// Which side a Maurer–Cartan twist acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `d(m) − (−1)^{|m|} m ξ`
    Right,
    /// `d(m) + ξ m`
    Left,
}

/// Truncated CE cochain complex `C^n = (polynomial order n, y-order ≤ T) ⊗ M` for `n ≤ W + 1`.
#[derive(Debug, Clone)]
pub struct CeCochainComplex {
    pub algebra: GradedLieAlgebra,
    pub coefficients: LieModule,
    pub ce: FreeAlgebra,
    pub d_ce: VectorField,
    pub max_degree: usize,
    pub truncation: Option<usize>,
    pub left_twist: FormalElement,
    pub right_twist: FormalElement,
    bases: Vec<CochainBasis>,
    differentials: Vec<SparseMatrix>,
}

impl CeCochainComplex {
    pub fn new(
        alg: &GradedLieAlgebra,
        coefficients: &LieModule,
        max_degree: usize,
        truncation: Option<usize>,
    ) -> Result<Self, CeError> {
        if alg.n_odd() > 0 && truncation.is_none() {
            return Err(CeError::TruncationRequired);
        }
        if coefficients.action.len() != alg.dim() {
            return Err(CeError::ModuleMismatch(format!(
                "{} action matrices for {} generators",
                coefficients.action.len(),
                alg.dim()
            )));
        }
        let ce = ce_algebra(alg);
        let d_ce = ce_vector_field(alg, &ce);
        let mut c = CeCochainComplex {
            algebra: alg.clone(),
            coefficients: coefficients.clone(),
            ce,
            d_ce,
            max_degree,
            truncation,
            left_twist: FormalElement::zero(),
            right_twist: FormalElement::zero(),
            bases: Vec::new(),
            differentials: Vec::new(),
        };
        c.bases = (0..=max_degree + 1).map(|n| c.basis_of(n)).collect();
        c.rebuild()?;
        Ok(c)
    }

    fn basis_of(&self, n: usize) -> CochainBasis {
        let mut out = Vec::new();
        for m in self.ce.monomials_of_order(n) {
            if let Some(t) = self.truncation {
                if y_order(&self.algebra, &m) > t {
                    continue;
                }
            }
            for p in 0..self.coefficients.dim() {
                out.push((m.clone(), p));
            }
        }
        out
    }

    fn rebuild(&mut self) -> Result<(), CeError> {
        let mut ds = Vec::with_capacity(self.max_degree + 1);
        for n in 0..=self.max_degree {
            let index: HashMap<&(SuperMonomial, usize), usize> =
                self.bases[n + 1].iter().enumerate().map(|(i, b)| (b, i)).collect();
            let mut d = SparseMatrix::zeros(self.bases[n + 1].len(), self.bases[n].len());
            for (col, (m, p)) in self.bases[n].iter().enumerate() {
                for ((tm, q), c) in self.apply_basis(m, *p) {
                    if let Some(&row) = index.get(&(tm, q)) {
                        d.add_to(row, col, &c);
                    }
                }
            }
            ds.push(d);
        }
        for n in 1..ds.len() {
            if !ds[n].mul(&ds[n - 1])?.is_zero() {
                return Err(CeError::Internal(format!("d² ≠ 0 at degree {}", n - 1)));
            }
        }
        self.differentials = ds;
        Ok(())
    }

    /// `δ(A⊗v)` with both twists applied.
    pub fn apply_basis(&self, a: &SuperMonomial, p: usize) -> Vec<((SuperMonomial, usize), Scalar)> {
        let ce = &self.ce;
        let alg = &self.algebra;
        let module = &self.coefficients;
        let mut acc: HashMap<(SuperMonomial, usize), Scalar> = HashMap::new();
        let mut push = |f: &FormalElement, q: usize, k: &Scalar| {
            for (m, c) in f.terms() {
                let e = acc.entry((m.clone(), q)).or_insert_with(Scalar::zero);
                *e += c * k;
            }
        };
        let af = FormalElement::from_monomial(a.clone(), Scalar::one());
        let a_odd = ce.mono_parity(a);
        push(&ce.apply_vector_field(&self.d_ce, &af), p, &Scalar::one());
        for g in 0..alg.dim() {
            let xa = ce.multiply(&ce.gen(g), &af);
            if xa.is_zero() {
                continue;
            }
            let s = int(sign_of(alg.is_odd(g), a_odd));
            for (q, row) in module.action[g].iter().enumerate() {
                let v = &row[p];
                if !v.is_zero() {
                    push(&xa, q, &(&s * v));
                }
            }
        }
        if !self.left_twist.is_zero() {
            push(&ce.multiply(&self.left_twist, &af), p, &Scalar::one());
        }
        if !self.right_twist.is_zero() {
            let m_odd = a_odd ^ module.is_odd(p);
            // (A⊗v)ξ = (−1)^{|ξ||v|} Aξ⊗v, with |ξ| odd.
            let s = int(-sign_of(m_odd, true) * sign_of(module.is_odd(p), true));
            push(&ce.multiply(&af, &self.right_twist), p, &s);
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn basis(&self, n: usize) -> Result<&CochainBasis, CeError> {
        self.bases.get(n).ok_or(CeError::DegreeOutOfRange(n))
    }

    /// `d: C^n → C^{n+1}`.
    pub fn differential(&self, n: usize) -> Result<&SparseMatrix, CeError> {
        self.differentials.get(n).ok_or(CeError::DegreeOutOfRange(n))
    }

    /// Parity of the basis element `A ⊗ v`.
    pub fn basis_parity(&self, b: &(SuperMonomial, usize)) -> bool {
        self.ce.mono_parity(&b.0) ^ self.coefficients.is_odd(b.1)
    }

    /// `dim H^n` for `n ≤ max_degree`.
    pub fn cohomology_dim(&self, n: usize) -> Result<usize, CeError> {
        let d_out = self.differential(n)?;
        let zero;
        let d_in = if n == 0 {
            zero = SparseMatrix::zeros(self.bases[0].len(), 0);
            &zero
        } else {
            self.differential(n - 1)?
        };
        Ok(homology_dim(d_out, d_in)?)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases[..=self.max_degree].iter().map(|b| b.len()).collect()
    }
}

/// A degree-one element `ξ ∈ CE^•(𝔤)` with `d_CE ξ = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McElement {
    pub element: FormalElement,
}

impl McElement {
    /// Linear MC elements are characters: `ξ = Σ χ_b x^b` over even `b` with `|b| = 0`.
    pub fn new(alg: &GradedLieAlgebra, xi: FormalElement) -> Result<Self, CeError> {
        let ce = ce_algebra(alg);
        if xi.terms().any(|(m, _)| m.order() != 1) {
            return Err(CeError::NotLinear);
        }
        let one = ce.reduce(1);
        if let Some(bad) = xi.terms().find(|(m, _)| ce.mono_degree(m) != one) {
            return Err(CeError::NotMaurerCartan(format!(
                "{} does not have degree 1",
                ce.format_monomial(bad.0)
            )));
        }
        let d = ce.apply_vector_field(&ce_vector_field(alg, &ce), &xi);
        if !d.is_zero() {
            return Err(CeError::NotMaurerCartan(format!("d ξ = {}", ce.format(&d))));
        }
        Ok(McElement { element: xi })
    }

    pub fn from_character(alg: &GradedLieAlgebra, chi: &[Scalar]) -> Result<Self, CeError> {
        let ce = ce_algebra(alg);
        let mut xi = FormalElement::zero();
        for (i, c) in chi.iter().enumerate() {
            if !c.is_zero() {
                xi.add_scaled(&ce.gen(i), c);
            }
        }
        Self::new(alg, xi)
    }

    pub fn neg(&self) -> McElement {
        McElement { element: self.element.neg() }
    }
}

/// Same complex with `ξ` added to the chosen side.
pub fn twist_differential(
    complex: &CeCochainComplex,
    xi: &McElement,
    side: Side,
) -> Result<CeCochainComplex, CeError> {
    let mut c = complex.clone();
    match side {
        Side::Left => c.left_twist = c.left_twist.add(&xi.element),
        Side::Right => c.right_twist = c.right_twist.add(&xi.element),
    }
    c.rebuild().map_err(|e| match e {
        CeError::Internal(s) => CeError::NotMaurerCartan(s),
        e => e,
    })?;
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeDim {
    pub i: usize,
    pub dim: usize,
    pub stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub degrees: Vec<DegreeDim>,
    pub truncation: Option<usize>,
}

impl CohomologyTable {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }

    pub fn all_stable(&self) -> bool {
        self.degrees.iter().all(|d| d.stable)
    }

    /// Euler characteristic of the reported range.
    pub fn euler(&self) -> i64 {
        self.degrees
            .iter()
            .map(|d| if d.i % 2 == 0 { d.dim as i64 } else { -(d.dim as i64) })
            .sum()
    }
}

fn table_from(dims: Vec<usize>, again: Option<Vec<usize>>, truncation: Option<usize>) -> CohomologyTable {
    let degrees = dims
        .iter()
        .enumerate()
        .map(|(i, &dim)| DegreeDim { i, dim, stable: again.as_ref().map_or(true, |a| a[i] == dim) })
        .collect();
    CohomologyTable { degrees, truncation }
}

fn cochain_dims(c: &CeCochainComplex) -> Result<Vec<usize>, CeError> {
    (0..=c.max_degree).map(|n| c.cohomology_dim(n)).collect()
}

/// `dim H^i(𝔤, M)` for `i ≤ max_degree`, rechecked at truncation + 1.
pub fn cohomology(
    alg: &GradedLieAlgebra,
    coefficients: &LieModule,
    max_degree: usize,
    truncation: Option<usize>,
) -> Result<CohomologyTable, CeError> {
    twisted_cohomology(alg, coefficients, max_degree, truncation, None)
}

/// Cohomology of the complex twisted on the given side.
pub fn twisted_cohomology(
    alg: &GradedLieAlgebra,
    coefficients: &LieModule,
    max_degree: usize,
    truncation: Option<usize>,
    twist: Option<(&McElement, Side)>,
) -> Result<CohomologyTable, CeError> {
    let build = |t: Option<usize>| -> Result<Vec<usize>, CeError> {
        let c = CeCochainComplex::new(alg, coefficients, max_degree, t)?;
        let c = match twist {
            Some((xi, side)) => twist_differential(&c, xi, side)?,
            None => c,
        };
        cochain_dims(&c)
    };
    let t = if alg.n_odd() > 0 { truncation } else { None };
    if alg.n_odd() > 0 && t.is_none() {
        return Err(CeError::TruncationRequired);
    }
    let dims = build(t)?;
    let again = match t {
        Some(t) => Some(build(Some(t + 1))?),
        None => None,
    };
    Ok(table_from(dims, again, t))
}

/// CE chain complex with coefficients `N`, defined as the pairing dual of the cochains
/// with coefficients `N*`: `∂[a][b] = −(−1)^{|X_a|} D[b][a]`.
#[derive(Debug, Clone)]
pub struct CeChainComplex {
    pub cochains: CeCochainComplex,
    /// `boundaries[n]` is `∂_n: C_n → C_{n−1}` (empty at `n = 0`).
    boundaries: Vec<SparseMatrix>,
}

impl CeChainComplex {
    /// `∂_n` for `1 ≤ n ≤ max_degree + 1`.
    pub fn boundary(&self, n: usize) -> Result<&SparseMatrix, CeError> {
        if n == 0 {
            return Err(CeError::DegreeOutOfRange(0));
        }
        self.boundaries.get(n).ok_or(CeError::DegreeOutOfRange(n))
    }

    /// `dim H_n` for `n ≤ max_degree`.
    pub fn homology_dim(&self, n: usize) -> Result<usize, CeError> {
        let size = self.cochains.basis(n)?.len();
        let zero;
        let d_out = if n == 0 {
            zero = SparseMatrix::zeros(0, size);
            &zero
        } else {
            self.boundary(n)?
        };
        Ok(homology_dim(d_out, self.boundary(n + 1)?)?)
    }

    pub fn homology(&self) -> Result<Vec<usize>, CeError> {
        (0..=self.cochains.max_degree).map(|n| self.homology_dim(n)).collect()
    }
}

pub fn chain_complex(
    alg: &GradedLieAlgebra,
    coefficients: &LieModule,
    max_degree: usize,
    truncation: Option<usize>,
) -> Result<CeChainComplex, CeError> {
    let cochains = CeCochainComplex::new(alg, &dual_module(alg, coefficients), max_degree, truncation)?;
    let mut boundaries = vec![SparseMatrix::zeros(0, 0)];
    for n in 1..=max_degree + 1 {
        let d = cochains.differential(n - 1)?;
        let lower = cochains.basis(n - 1)?;
        let mut b = SparseMatrix::zeros(d.cols(), d.rows());
        for (r, c, v) in d.entries() {
            // r indexes C^n (chain b), c indexes C^{n−1} (chain a).
            let s = if cochains.basis_parity(&lower[c]) { v.clone() } else { -v.clone() };
            b.set(c, r, s);
        }
        boundaries.push(b);
    }
    for n in 2..boundaries.len() {
        if !boundaries[n - 1].mul(&boundaries[n])?.is_zero() {
            return Err(CeError::Internal(format!("∂² ≠ 0 at degree {n}")));
        }
    }
    Ok(CeChainComplex { cochains, boundaries })
}

/// `S^c(𝔤[1])` as a free algebra on `s_b` of degree `|e_b| − 1`.
pub fn shifted_algebra(alg: &GradedLieAlgebra) -> FreeAlgebra {
    let b = alg.basis();
    let gens = (0..b.len())
        .map(|i| Generator { name: format!("s_{}", b.name(i)), degree: b.reduce(b.degree(i) - 1) })
        .collect();
    FreeAlgebra::new(alg.mode(), gens, false)
}

fn word(m: &SuperMonomial) -> Vec<usize> {
    m.0.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize)).collect()
}

/// The coderivation `δ_CE` on `S^c(𝔤[1])` extending `q(s_i s_j) = (−1)^{|e_i|} Σ N_ij^k s_k`.
pub fn coderivation(alg: &GradedLieAlgebra, sh: &FreeAlgebra, a: &SuperMonomial) -> FormalElement {
    let w = word(a);
    let odd: Vec<bool> = w.iter().map(|&g| sh.is_odd(g)).collect();
    let mut out = FormalElement::zero();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            // Sign of moving w_i and then w_j to the front.
            let mut flips = 0;
            if odd[i] {
                flips += odd[..i].iter().filter(|&&o| o).count();
            }
            if odd[j] {
                flips += odd[..j].iter().enumerate().filter(|&(k, &o)| k != i && o).count();
            }
            let mut q = FormalElement::zero();
            let s = int(if alg.is_odd(w[i]) { -1 } else { 1 } * if flips % 2 == 0 { 1 } else { -1 });
            for (k, c) in alg.bracket_terms(w[i], w[j]) {
                q.add_scaled(&sh.gen(k), &(c * &s));
            }
            if q.is_zero() {
                continue;
            }
            let mut rest = sh.one();
            for (k, &g) in w.iter().enumerate() {
                if k != i && k != j {
                    rest = sh.multiply(&rest, &sh.gen(g));
                }
            }
            out.add_scaled(&sh.multiply(&q, &rest), &Scalar::one());
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `⟨ξ^{b₁}⋯ξ^{b_k}, a₁⋯a_k⟩ = (ξ^{b₁}⊗⋯⊗ξ^{b_k})(Σ_σ ε(σ) a_{σ(1)}⊗⋯⊗a_{σ(k)})`.
pub fn ce_pairing(sh: &FreeAlgebra, x: &SuperMonomial, a: &SuperMonomial) -> Scalar {
    let (xw, aw) = (word(x), word(a));
    if xw.len() != aw.len() {
        return Scalar::zero();
    }
    let mut total = 0i64;
    for sigma in permutations(aw.len()) {
        let permuted: Vec<usize> = sigma.iter().map(|&s| aw[s]).collect();
        if permuted != xw {
            continue;
        }
        let mut flips = 0;
        for i in 0..sigma.len() {
            for j in i + 1..sigma.len() {
                if sigma[i] > sigma[j] && sh.is_odd(aw[sigma[i]]) && sh.is_odd(aw[sigma[j]]) {
                    flips += 1;
                }
                // ξ^{b_j} passes over a_{σ(i)}.
                if sh.is_odd(permuted[i]) && sh.is_odd(permuted[j]) {
                    flips += 1;
                }
            }
        }
        total += if flips % 2 == 0 { 1 } else { -1 };
    }
    int(total)
}

/// Checks `⟨dX, A⟩ + (−1)^{|X|}⟨X, δA⟩ = 0` on all basis pairs below CE-degree `max_degree`.
/// Returns the failing pairs.
pub fn pairing_check(
    alg: &GradedLieAlgebra,
    max_degree: usize,
) -> Vec<(SuperMonomial, SuperMonomial)> {
    let ce = ce_algebra(alg);
    let sh = shifted_algebra(alg);
    let d = ce_vector_field(alg, &ce);
    let mut failures = Vec::new();
    for k in 0..max_degree {
        for x in ce.monomials_of_order(k) {
            let xf = FormalElement::from_monomial(x.clone(), Scalar::one());
            let dx = ce.apply_vector_field(&d, &xf);
            let sign = if ce.mono_parity(&x) { int(-1) } else { int(1) };
            for a in sh.monomials_of_order(k + 1) {
                let mut lhs = Scalar::zero();
                for (m, c) in dx.terms() {
                    lhs += c * ce_pairing(&sh, m, &a);
                }
                for (m, c) in coderivation(alg, &sh, &a).terms() {
                    lhs += c * &sign * ce_pairing(&sh, &x, m);
                }
                if !lhs.is_zero() {
                    failures.push((x.clone(), a.clone()));
                }
            }
        }
    }
    failures
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HazewinkelDegree {
    pub i: usize,
    pub homology: usize,
    pub cohomology: usize,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HazewinkelReport {
    pub degrees: Vec<HazewinkelDegree>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub twisted: bool,
}

/// Compares `dim H_i(𝔤, (M*)^tw)` with `dim H^{n−i}(𝔤, M*)`; with `twist = false` the
/// character is dropped (the unimodular case).
pub fn hazewinkel_check(alg: &GradedLieAlgebra, m: &LieModule, twist: bool) -> Result<HazewinkelReport, CeError> {
    if !alg.is_ungraded() || alg.n_odd() > 0 {
        return Err(CeError::NotUngraded);
    }
    let n = alg.dim();
    let chi = if twist {
        crate::liealg::supertrace_character(alg)
    } else {
        vec![Scalar::zero(); n]
    };
    let tw = twisted_dual_with_character(alg, m, &chi, alg.total_dimension())
        .map_err(|e| CeError::ModuleMismatch(e.to_string()))?;
    let homology = chain_complex(alg, &tw.underlying, n, None)?.homology()?;
    let co = cohomology(alg, &dual_module(alg, m), n, None)?.dims();
    let degrees: Vec<HazewinkelDegree> = (0..=n)
        .map(|i| HazewinkelDegree {
            i,
            homology: homology[i],
            cohomology: co[n - i],
            matches: homology[i] == co[n - i],
        })
        .collect();
    let matches = degrees.iter().all(|d| d.matches);
    Ok(HazewinkelReport { degrees, matches, twisted: twist })
}

/// `ce_differential` for a single degree.
pub fn ce_differential(
    alg: &GradedLieAlgebra,
    coefficients: &LieModule,
    ce_degree: usize,
    truncation: Option<usize>,
) -> Result<SparseMatrix, CeError> {
    let c = CeCochainComplex::new(alg, coefficients, ce_degree, truncation)?;
    Ok(c.differential(ce_degree)?.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedBasis;
    use crate::graded::GradingMode::Z;

    fn nonabelian2() -> GradedLieAlgebra {
        let b = GradedBasis::numbered(Z, "e", &[0, 0]);
        GradedLieAlgebra::from_brackets(b, &[(0, 1, vec![(1, int(1))])]).unwrap()
    }

    fn sl2() -> GradedLieAlgebra {
        let b = GradedBasis::new(Z, vec!["e".into(), "f".into(), "h".into()], vec![0, 0, 0]).unwrap();
        GradedLieAlgebra::from_brackets(
            b,
            &[(2, 0, vec![(0, int(2))]), (2, 1, vec![(1, int(-2))]), (0, 1, vec![(2, int(1))])],
        )
        .unwrap()
    }

    fn heisenberg() -> GradedLieAlgebra {
        let b = GradedBasis::numbered(Z, "e", &[0, 0, 0]);
        GradedLieAlgebra::from_brackets(b, &[(0, 1, vec![(2, int(1))])]).unwrap()
    }

    #[test]
    fn differential_examples() {
        let ab = GradedLieAlgebra::abelian(GradedBasis::numbered(Z, "e", &[0, 0]));
        for n in 0..3 {
            assert!(ce_differential(&ab, &LieModule::trivial(&ab), n, None).unwrap().is_zero());
        }
        let g = nonabelian2();
        let ce = ce_algebra(&g);
        let d = ce_vector_field(&g, &ce);
        let x12 = ce.multiply(&ce.gen(0), &ce.gen(1));
        assert_eq!(ce.apply_vector_field(&d, &ce.gen(1)), x12.neg());
        assert!(ce.apply_vector_field(&d, &ce.gen(0)).is_zero());
    }

    #[test]
    fn cohomology_examples() {
        let ab = GradedLieAlgebra::abelian(GradedBasis::numbered(Z, "e", &[0]));
        assert_eq!(cohomology(&ab, &LieModule::trivial(&ab), 1, None).unwrap().dims(), vec![1, 1]);
        let g = nonabelian2();
        assert_eq!(cohomology(&g, &LieModule::trivial(&g), 2, None).unwrap().dims(), vec![1, 1, 0]);
        let s = sl2();
        assert_eq!(cohomology(&s, &LieModule::trivial(&s), 3, None).unwrap().dims(), vec![1, 0, 0, 1]);
    }

    #[test]
    fn truncation_required_for_odd_part() {
        let b = GradedBasis::numbered(Z, "e", &[0, 1]);
        let g = GradedLieAlgebra::abelian(b);
        assert_eq!(
            CeCochainComplex::new(&g, &LieModule::trivial(&g), 2, None).err(),
            Some(CeError::TruncationRequired)
        );
    }

    #[test]
    fn chain_examples() {
        let ab = GradedLieAlgebra::abelian(GradedBasis::numbered(Z, "e", &[0]));
        assert_eq!(chain_complex(&ab, &LieModule::trivial(&ab), 1, None).unwrap().homology().unwrap(), vec![1, 1]);
        let g = nonabelian2();
        assert_eq!(
            chain_complex(&g, &LieModule::trivial(&g), 2, None).unwrap().homology().unwrap(),
            vec![1, 1, 0]
        );
    }

    #[test]
    fn pairing_intertwines() {
        for g in [nonabelian2(), sl2(), heisenberg()] {
            assert!(pairing_check(&g, 3).is_empty());
        }
        let g = nonabelian2();
        let sh = shifted_algebra(&g);
        let s12 = SuperMonomial(vec![1, 1]);
        assert_eq!(ce_pairing(&sh, &s12, &s12), int(-1));
        assert_eq!(coderivation(&g, &sh, &s12), sh.gen(1));
    }

    #[test]
    fn twist_examples() {
        let g = nonabelian2();
        let c = CeCochainComplex::new(&g, &LieModule::trivial(&g), 2, None).unwrap();
        let zero = McElement::new(&g, FormalElement::zero()).unwrap();
        let same = twist_differential(&c, &zero, Side::Right).unwrap();
        assert_eq!(same.differential(1).unwrap(), c.differential(1).unwrap());
        let xi = McElement::from_character(&g, &[int(1), int(0)]).unwrap();
        let there = twist_differential(&c, &xi, Side::Right).unwrap();
        let back = twist_differential(&there, &xi.neg(), Side::Right).unwrap();
        for n in 0..=2 {
            assert_eq!(back.differential(n).unwrap(), c.differential(n).unwrap());
        }
        assert!(McElement::from_character(&g, &[int(0), int(1)]).is_err());
    }

    #[test]
    fn left_twist_is_character_coefficients() {
        let g = nonabelian2();
        let chi = [int(3), int(0)];
        let xi = McElement::from_character(&g, &chi).unwrap();
        let twisted =
            twisted_cohomology(&g, &LieModule::trivial(&g), 2, None, Some((&xi, Side::Left))).unwrap();
        let direct = cohomology(&g, &LieModule::character(&g, &chi), 2, None).unwrap();
        assert_eq!(twisted.dims(), direct.dims());
    }

    #[test]
    fn hazewinkel_examples() {
        let ab = GradedLieAlgebra::abelian(GradedBasis::numbered(Z, "e", &[0, 0, 0]));
        let r = hazewinkel_check(&ab, &LieModule::trivial(&ab), true).unwrap();
        assert!(r.matches);
        assert_eq!(r.degrees.iter().map(|d| d.homology).collect::<Vec<_>>(), vec![1, 3, 3, 1]);

        let g = nonabelian2();
        let r = hazewinkel_check(&g, &LieModule::trivial(&g), true).unwrap();
        assert!(r.matches);
        assert_eq!(r.degrees.iter().map(|d| d.homology).collect::<Vec<_>>(), vec![0, 1, 1]);

        let h = heisenberg();
        assert!(hazewinkel_check(&h, &LieModule::adjoint(&h), true).unwrap().matches);
        assert!(hazewinkel_check(&h, &LieModule::adjoint(&h), false).unwrap().matches);
    }
}
