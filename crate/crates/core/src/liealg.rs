//! Graded and super Lie algebras from structure constants, their modules,
//! the supertrace character and the twisted dual module.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{format_scalar, int, Scalar};
use crate::graded::{supertrace, total_dimension_invariant, GradedBasis, GradingMode};

pub type Matrix = Vec<Vec<Scalar>>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("contradictory brackets for ({0}, {1})")]
    Contradiction(String, String),
    #[error("module action is malformed: {0}")]
    MalformedModule(String),
    #[error("module axiom violated: {0}")]
    ModuleAxiomViolation(String),
    #[error("algebra is not graded-commutative-compatible: {0}")]
    Invalid(String),
}

/// Finite-dimensional graded Lie algebra with the basis ordered evens first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedLieAlgebra {
    basis: GradedBasis,
    consts: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>>,
}

/// One violated axiom, with 0-based basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Antisymmetry { i: usize, j: usize, k: usize },
    Homogeneity { i: usize, j: usize, k: usize },
    Jacobi { i: usize, j: usize, k: usize, component: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// One line per violation, using basis names and 1-based positions.
    pub fn describe(&self, alg: &GradedLieAlgebra) -> Vec<String> {
        let n = |i: usize| alg.basis().name(i).to_string();
        self.violations
            .iter()
            .map(|v| match *v {
                Violation::Antisymmetry { i, j, k } => format!(
                    "antisymmetry fails at ({},{},{}): [{},{}] vs [{},{}] on {}",
                    i + 1, j + 1, k + 1, n(i), n(j), n(j), n(i), n(k)
                ),
                Violation::Homogeneity { i, j, k } => format!(
                    "degree mismatch at ({},{},{}): [{},{}] has a {} component",
                    i + 1, j + 1, k + 1, n(i), n(j), n(k)
                ),
                Violation::Jacobi { i, j, k, component } => format!(
                    "Jacobi fails at ({},{},{}) for {},{},{} in the {} component",
                    i + 1, j + 1, k + 1, n(i), n(j), n(k), n(component)
                ),
            })
            .collect()
    }
}

impl GradedLieAlgebra {
    /// Builds from brackets `(i, j, [(k, N_ij^k)])` given in the input basis order.
    /// Missing `(j, i)` entries are filled in by graded antisymmetry; explicitly given pairs are
    /// stored as given, so contradictions surface in [`validate`].
    pub fn from_brackets(
        basis: GradedBasis,
        brackets: &[(usize, usize, Vec<(usize, Scalar)>)],
    ) -> Result<Self, LieError> {
        let (nb, perm) = basis.normalized();
        let dim = basis.len();
        let mut given: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
        for (i, j, res) in brackets {
            for x in [*i, *j].into_iter().chain(res.iter().map(|(k, _)| *k)) {
                if x >= dim {
                    return Err(LieError::IndexOutOfRange(x));
                }
            }
            let key = (perm[*i], perm[*j]);
            if given.contains_key(&key) {
                return Err(LieError::Contradiction(basis.name(*i).into(), basis.name(*j).into()));
            }
            let mut m = BTreeMap::new();
            for (k, c) in res {
                let e: &mut Scalar = m.entry(perm[*k]).or_insert_with(Scalar::zero);
                *e += c;
            }
            m.retain(|_, c: &mut Scalar| !c.is_zero());
            given.insert(key, m);
        }
        let mut consts = given.clone();
        for (&(i, j), m) in &given {
            if !given.contains_key(&(j, i)) {
                let s = if nb.is_odd(i) && nb.is_odd(j) { int(1) } else { int(-1) };
                let neg: BTreeMap<usize, Scalar> = m.iter().map(|(&k, c)| (k, c * &s)).collect();
                consts.insert((j, i), neg);
            }
        }
        consts.retain(|_, m| !m.is_empty());
        Ok(GradedLieAlgebra { basis: nb, consts })
    }

    /// Abelian algebra on the given basis.
    pub fn abelian(basis: GradedBasis) -> Self {
        GradedLieAlgebra { basis: basis.normalized().0, consts: BTreeMap::new() }
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn mode(&self) -> GradingMode {
        self.basis.mode()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of even basis elements.
    pub fn n_even(&self) -> usize {
        self.basis.even_indices().len()
    }

    /// Number of odd basis elements.
    pub fn n_odd(&self) -> usize {
        self.basis.odd_indices().len()
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.basis.is_odd(i)
    }

    pub fn is_ungraded(&self) -> bool {
        self.basis.degrees().iter().all(|&d| d == 0)
    }

    /// `|𝔤|` (Z mode) or the parity of the dimension (Z2 mode).
    pub fn total_dimension(&self) -> i64 {
        total_dimension_invariant(&self.basis).0
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.consts.get(&(i, j)).and_then(|m| m.get(&k)).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Nonzero `N_ij^k` for fixed `(i, j)`.
    pub fn bracket_terms(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, &Scalar)> {
        self.consts.get(&(i, j)).into_iter().flat_map(|m| m.iter().map(|(&k, c)| (k, c)))
    }

    /// All nonzero structure constants `((i, j), k, N_ij^k)`.
    pub fn nonzero_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.consts.iter().flat_map(|(&(i, j), m)| m.iter().map(move |(&k, c)| (i, j, k, c)))
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.is_empty()
    }

    /// Bracket of coefficient vectors.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (&(i, j), m) in &self.consts {
            if u[i].is_zero() || v[j].is_zero() {
                continue;
            }
            let uv = &u[i] * &v[j];
            for (&k, c) in m {
                out[k] += &uv * c;
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    fn sgn(&self, a: usize, b: usize) -> Scalar {
        int(if self.is_odd(a) && self.is_odd(b) { -1 } else { 1 })
    }

    fn degree_sum_matches(&self, i: usize, j: usize, k: usize) -> bool {
        let b = &self.basis;
        b.reduce(b.degree(i) + b.degree(j)) == b.degree(k)
    }
}

/// Lists every antisymmetry, homogeneity and Jacobi violation.
pub fn validate(alg: &GradedLieAlgebra) -> ValidationReport {
    let n = alg.dim();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let a = alg.structure_constant(i, j, k);
                let b = alg.structure_constant(j, i, k);
                if b != -(alg.sgn(i, j) * &a) {
                    violations.push(Violation::Antisymmetry { i, j, k });
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for (k, _) in alg.bracket_terms(i, j) {
                if !alg.degree_sum_matches(i, j, k) {
                    violations.push(Violation::Homogeneity { i, j, k });
                }
            }
        }
    }
    // (−1)^{|a||c|}[a,[b,c]] + (−1)^{|b||a|}[b,[c,a]] + (−1)^{|c||b|}[c,[a,b]] = 0.
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let (a, b, c) = (alg.unit_vector(i), alg.unit_vector(j), alg.unit_vector(k));
                let t1 = alg.bracket(&a, &alg.bracket(&b, &c));
                let t2 = alg.bracket(&b, &alg.bracket(&c, &a));
                let t3 = alg.bracket(&c, &alg.bracket(&a, &b));
                let (s1, s2, s3) = (alg.sgn(i, k), alg.sgn(j, i), alg.sgn(k, j));
                for comp in 0..n {
                    let v = &s1 * &t1[comp] + &s2 * &t2[comp] + &s3 * &t3[comp];
                    if !v.is_zero() {
                        violations.push(Violation::Jacobi { i, j, k, component: comp });
                    }
                }
            }
        }
    }
    ValidationReport { violations }
}

/// Matrix of `ad_{e_i}`: column `j` holds `N_ij^k`.
pub fn adjoint_matrix(alg: &GradedLieAlgebra, i: usize) -> Result<Matrix, LieError> {
    if i >= alg.dim() {
        return Err(LieError::IndexOutOfRange(i));
    }
    let n = alg.dim();
    let mut m = vec![vec![Scalar::zero(); n]; n];
    for j in 0..n {
        for (k, c) in alg.bracket_terms(i, j) {
            m[k][j] = c.clone();
        }
    }
    Ok(m)
}

/// `str(ad_{e_i})` for every basis element.
pub fn supertrace_character(alg: &GradedLieAlgebra) -> Vec<Scalar> {
    let odd = alg.basis().parities();
    (0..alg.dim())
        .map(|i| supertrace(&adjoint_matrix(alg, i).expect("index in range"), &odd).expect("square"))
        .collect()
}

pub fn is_unimodular(alg: &GradedLieAlgebra) -> bool {
    supertrace_character(alg).iter().all(|c| c.is_zero())
}

/// Left module: `action[i]` is the matrix of `ρ(e_i)` (column q ↦ coefficients of `e_i·m_q`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieModule {
    pub carrier: GradedBasis,
    pub action: Vec<Matrix>,
}

impl LieModule {
    pub fn dim(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_odd(&self, p: usize) -> bool {
        self.carrier.is_odd(p)
    }

    /// The one-dimensional trivial module in degree 0.
    pub fn trivial(alg: &GradedLieAlgebra) -> Self {
        let carrier = GradedBasis::new(alg.mode(), vec!["1".into()], vec![0]).expect("basis");
        LieModule { carrier, action: vec![vec![vec![Scalar::zero()]]; alg.dim()] }
    }

    pub fn adjoint(alg: &GradedLieAlgebra) -> Self {
        let action = (0..alg.dim()).map(|i| adjoint_matrix(alg, i).expect("in range")).collect();
        LieModule { carrier: alg.basis().clone(), action }
    }

    /// One-dimensional module in degree 0 where `e_i` acts by `chi[i]`.
    pub fn character(alg: &GradedLieAlgebra, chi: &[Scalar]) -> Self {
        let carrier = GradedBasis::new(alg.mode(), vec!["1".into()], vec![0]).expect("basis");
        LieModule { carrier, action: chi.iter().map(|c| vec![vec![c.clone()]]).collect() }
    }

    /// Same action on a basis with degrees shifted by `k`; `e_i` picks up `(−1)^{k|e_i|}`.
    pub fn shifted(&self, alg: &GradedLieAlgebra, k: i64) -> LieModule {
        let action = self
            .action
            .iter()
            .enumerate()
            .map(|(i, m)| {
                if alg.is_odd(i) && k.rem_euclid(2) == 1 {
                    m.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
                } else {
                    m.clone()
                }
            })
            .collect();
        LieModule { carrier: self.carrier.shifted(k), action }
    }
}

/// Checks shapes, homogeneity and `ρ([u,v]) = ρ(u)ρ(v) − (−1)^{|u||v|}ρ(v)ρ(u)` on basis pairs.
pub fn validate_module(alg: &GradedLieAlgebra, m: &LieModule) -> Vec<String> {
    let mut out = Vec::new();
    let d = m.dim();
    if m.action.len() != alg.dim() {
        out.push(format!("{} action matrices for a {}-dimensional algebra", m.action.len(), alg.dim()));
        return out;
    }
    for (i, a) in m.action.iter().enumerate() {
        if a.len() != d || a.iter().any(|r| r.len() != d) {
            out.push(format!("action of {} is not {d}x{d}", alg.basis().name(i)));
            return out;
        }
    }
    let cb = &m.carrier;
    for (i, a) in m.action.iter().enumerate() {
        for (p, row) in a.iter().enumerate() {
            for (q, x) in row.iter().enumerate() {
                if !x.is_zero() && cb.degree(p) != cb.reduce(cb.degree(q) + alg.basis().degree(i)) {
                    out.push(format!(
                        "{} maps {} to {} with the wrong degree",
                        alg.basis().name(i),
                        cb.name(q),
                        cb.name(p)
                    ));
                }
            }
        }
    }
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let mut lhs = vec![vec![Scalar::zero(); d]; d];
            for (k, c) in alg.bracket_terms(i, j) {
                add_scaled(&mut lhs, &m.action[k], c);
            }
            let mut rhs = matmul(&m.action[i], &m.action[j]);
            add_scaled(&mut rhs, &matmul(&m.action[j], &m.action[i]), &-alg.sgn(i, j));
            if lhs != rhs {
                out.push(format!(
                    "representation property fails for ({}, {})",
                    alg.basis().name(i),
                    alg.basis().name(j)
                ));
            }
        }
    }
    out
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Scalar::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    out
}

fn add_scaled(acc: &mut Matrix, m: &Matrix, k: &Scalar) {
    for (r, row) in acc.iter_mut().enumerate() {
        for (c, x) in row.iter_mut().enumerate() {
            *x += &m[r][c] * k;
        }
    }
}

/// Koszul sign helper for converting between left and right actions:
/// `u·m = −(−1)^{|u||m|} m·u`.
pub fn side_sign(u_odd: bool, m_odd: bool) -> Scalar {
    if u_odd && m_odd {
        int(1)
    } else {
        int(-1)
    }
}

/// Dual module `M*` with basis `m^p` of degree `−|m_p|` and
/// `(u·α)(m) = −(−1)^{|u||α|} α(u·m)`.
pub fn dual_module(alg: &GradedLieAlgebra, m: &LieModule) -> LieModule {
    let d = m.dim();
    let action = (0..alg.dim())
        .map(|i| {
            let mut a = vec![vec![Scalar::zero(); d]; d];
            for (p, row) in a.iter_mut().enumerate() {
                for (q, x) in row.iter_mut().enumerate() {
                    let v = &m.action[i][q][p];
                    if !v.is_zero() {
                        *x = side_sign(alg.is_odd(i), m.is_odd(q)) * v;
                    }
                }
            }
            a
        })
        .collect();
    LieModule { carrier: m.carrier.dual(), action }
}

/// `M*[−|𝔤|]` with the right action `ν·u + χ(u)ν`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedDualModule {
    /// The same module seen as a left module through the antipode.
    pub underlying: LieModule,
    /// Right action matrices: column q holds the coefficients of `ν_q · e_i`.
    pub right_action: Vec<Matrix>,
    pub shift: i64,
}

/// Twisted dual for an arbitrary character `chi` (applied after the degree shift by `shift`).
pub fn twisted_dual_with_character(
    alg: &GradedLieAlgebra,
    m: &LieModule,
    chi: &[Scalar],
    shift: i64,
) -> Result<TwistedDualModule, LieError> {
    let dual = dual_module(alg, m).shifted(alg, shift);
    let d = dual.dim();
    let mut left = dual.clone();
    let mut right_action = Vec::with_capacity(alg.dim());
    for i in 0..alg.dim() {
        if !chi[i].is_zero() && alg.is_odd(i) {
            return Err(LieError::ModuleAxiomViolation(format!(
                "character is nonzero on the odd element {}",
                alg.basis().name(i)
            )));
        }
        let mut r = vec![vec![Scalar::zero(); d]; d];
        for p in 0..d {
            for q in 0..d {
                // Convert the left action entry of the column element ν_q to its right action.
                let l = &dual.action[i][p][q];
                if !l.is_zero() {
                    r[p][q] = side_sign(alg.is_odd(i), dual.is_odd(q)) * l;
                }
            }
            r[p][p] += &chi[i];
            left.action[i][p][p] -= &chi[i];
        }
        right_action.push(r);
    }
    let problems = validate_module(alg, &left);
    if !problems.is_empty() {
        return Err(LieError::ModuleAxiomViolation(problems.join("; ")));
    }
    Ok(TwistedDualModule { underlying: left, right_action, shift })
}

/// `(M*)^{tw}`: carrier `M*[−|𝔤|]`, right action `ν·u + str(ad_u)ν`.
pub fn twisted_dual_module(alg: &GradedLieAlgebra, m: &LieModule) -> Result<TwistedDualModule, LieError> {
    twisted_dual_with_character(alg, m, &supertrace_character(alg), alg.total_dimension())
}

pub fn format_matrix(m: &Matrix) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(format_scalar).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradingMode::{Z, Z2};

    pub(crate) fn nonabelian2() -> GradedLieAlgebra {
        let b = GradedBasis::numbered(Z, "e", &[0, 0]);
        GradedLieAlgebra::from_brackets(b, &[(0, 1, vec![(1, int(1))])]).unwrap()
    }

    fn sl2() -> GradedLieAlgebra {
        let b = GradedBasis::new(Z, vec!["e".into(), "f".into(), "h".into()], vec![0, 0, 0]).unwrap();
        GradedLieAlgebra::from_brackets(
            b,
            &[
                (2, 0, vec![(0, int(2))]),
                (2, 1, vec![(1, int(-2))]),
                (0, 1, vec![(2, int(1))]),
            ],
        )
        .unwrap()
    }

    fn super2() -> GradedLieAlgebra {
        let b = GradedBasis::new(Z2, vec!["h".into(), "eps".into()], vec![0, 1]).unwrap();
        GradedLieAlgebra::from_brackets(b, &[(0, 1, vec![(1, int(1))])]).unwrap()
    }

    #[test]
    fn validate_examples() {
        let ab = GradedLieAlgebra::abelian(GradedBasis::numbered(Z, "e", &[0, 1, 2]));
        assert!(validate(&ab).is_valid());
        assert!(validate(&nonabelian2()).is_valid());
        let b = GradedBasis::numbered(Z, "e", &[0, 0]);
        let broken = GradedLieAlgebra::from_brackets(
            b,
            &[(0, 1, vec![(0, int(1))]), (1, 0, vec![(0, int(1))])],
        )
        .unwrap();
        let r = validate(&broken);
        assert_eq!(r.violations[0], Violation::Antisymmetry { i: 0, j: 1, k: 0 });
        assert!(r.describe(&broken)[0].contains("(1,2,1)"));
        assert!(validate(&sl2()).is_valid());
        assert!(validate(&super2()).is_valid());
    }

    #[test]
    fn adjoint_examples() {
        let ab = GradedLieAlgebra::abelian(GradedBasis::numbered(Z, "e", &[0, 0]));
        assert!(adjoint_matrix(&ab, 0).unwrap().iter().flatten().all(|x| x.is_zero()));
        let ad1 = adjoint_matrix(&nonabelian2(), 0).unwrap();
        assert_eq!(ad1, vec![vec![int(0), int(0)], vec![int(0), int(1)]]);
        let adh = adjoint_matrix(&sl2(), 2).unwrap();
        assert_eq!((adh[0][0].clone(), adh[1][1].clone(), adh[2][2].clone()), (int(2), int(-2), int(0)));
        assert!(adjoint_matrix(&sl2(), 3).is_err());
    }

    #[test]
    fn character_examples() {
        let ab = GradedLieAlgebra::abelian(GradedBasis::numbered(Z, "e", &[0, 0]));
        assert_eq!(supertrace_character(&ab), vec![int(0), int(0)]);
        assert_eq!(supertrace_character(&nonabelian2()), vec![int(1), int(0)]);
        assert_eq!(supertrace_character(&super2()), vec![int(-1), int(0)]);
        assert!(is_unimodular(&ab));
        assert!(!is_unimodular(&nonabelian2()));
        assert!(is_unimodular(&sl2()));
    }

    #[test]
    fn twisted_dual_examples() {
        let ab = GradedLieAlgebra::abelian(GradedBasis::numbered(Z, "e", &[0, 0, 0]));
        let t = twisted_dual_module(&ab, &LieModule::trivial(&ab)).unwrap();
        assert_eq!(t.underlying.carrier.degrees(), &[3]);
        assert!(t.right_action.iter().flatten().flatten().all(|x| x.is_zero()));

        let g = nonabelian2();
        let t = twisted_dual_module(&g, &LieModule::trivial(&g)).unwrap();
        assert_eq!(t.right_action, vec![vec![vec![int(1)]], vec![vec![int(0)]]]);

        let t = twisted_dual_module(&g, &LieModule::adjoint(&g)).unwrap();
        assert_eq!(t.underlying.dim(), 2);
        assert!(validate_module(&g, &t.underlying).is_empty());
    }

    #[test]
    fn builtin_modules_are_valid() {
        for g in [nonabelian2(), sl2(), super2()] {
            for m in [LieModule::trivial(&g), LieModule::adjoint(&g)] {
                assert!(validate_module(&g, &m).is_empty());
                assert!(validate_module(&g, &dual_module(&g, &m)).is_empty());
            }
        }
    }
}
