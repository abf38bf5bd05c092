//! Hodge decomposition on `Ŝ((𝔤[1])*) ⊗ S(𝔤)`, the perturbation `x = ∂ − d`,
//! the deformed Berezinian and the dualizing character.

use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::ce::{ce_algebra, ce_vector_field};
use crate::env::Envelope;
use crate::exact::{format_scalar, int, Scalar};
use crate::formal::{FormalElement, FreeAlgebra, Generator, SuperMonomial, VectorField};
use crate::graded::{sign_of, total_dimension_invariant};
use crate::liealg::{supertrace_character, GradedLieAlgebra};

/// Elements of `Ŝ((𝔤[1])*) ⊗ S(𝔤)`: generators `0..N` are the duals, `N..2N` the basis of `𝔤`.
pub type BiElement = FormalElement;

fn l_join(left: &SuperMonomial, n: usize) -> SuperMonomial {
    let mut e = left.0.clone();
    e.resize(2 * n, 0);
    SuperMonomial(e)
}

/// Upper bound on Neumann-series length; the series are locally nilpotent well before this.
const SERIES_LIMIT: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BerezinError {
    #[error("[Δ,d] does not act by the expected scalar on {0}")]
    NotEigenvector(String),
    #[error("the deformed Berezinian is not closed")]
    NotClosed,
    #[error("transferred action is inconsistent for {0}")]
    TransferInconsistent(String),
    #[error("Neumann series did not terminate")]
    SeriesDiverged,
    #[error("∂² ≠ 0")]
    NotDifferential,
}

/// Operators `d, Δ, s, t, ∂, x` for one algebra.
pub struct Berezin<'a> {
    alg: &'a GradedLieAlgebra,
    env: Envelope<'a>,
    bi: FreeAlgebra,
    theta: BiElement,
    d_ce: VectorField,
    berezinian: SuperMonomial,
}

impl<'a> Berezin<'a> {
    pub fn new(alg: &'a GradedLieAlgebra) -> Self {
        let n = alg.dim();
        let ce = ce_algebra(alg);
        let b = alg.basis();
        let mut gens: Vec<Generator> = ce.generators().to_vec();
        gens.extend((0..n).map(|i| Generator { name: b.name(i).to_string(), degree: b.degree(i) }));
        let bi = FreeAlgebra::new(alg.mode(), gens, false);
        let mut theta = FormalElement::zero();
        for i in 0..n {
            theta.add_scaled(&bi.multiply(&bi.gen(i), &bi.gen(n + i)), &Scalar::one());
        }
        let mut d_ce = VectorField::zero();
        for (k, f) in ce_vector_field(alg, &ce).components() {
            d_ce.set(k, Self::lift_left(&bi, f, n));
        }
        let mut exps = vec![0; 2 * n];
        for i in 0..n {
            if alg.is_odd(i) {
                exps[n + i] = 1;
            } else {
                exps[i] = 1;
            }
        }
        Berezin { alg, env: Envelope::new(alg), bi, theta, d_ce, berezinian: SuperMonomial(exps) }
    }

    fn lift_left(bi: &FreeAlgebra, f: &FormalElement, n: usize) -> BiElement {
        let mut out = FormalElement::zero();
        for (m, c) in f.terms() {
            let mut e = m.0.clone();
            e.resize(2 * n, 0);
            out.add_term(SuperMonomial(e), c.clone());
        }
        debug_assert_eq!(bi.n_gens(), 2 * n);
        out
    }

    pub fn algebra(&self) -> &GradedLieAlgebra {
        self.alg
    }

    pub fn bi_algebra(&self) -> &FreeAlgebra {
        &self.bi
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// `B = x¹⋯xⁿ ⊗ ε₁⋯ε_m`.
    pub fn berezinian(&self) -> BiElement {
        FormalElement::from_monomial(self.berezinian.clone(), Scalar::one())
    }

    pub fn is_berezinian(&self, m: &SuperMonomial) -> bool {
        *m == self.berezinian
    }

    /// Splits a bimonomial into its left (dual) and right (`S(𝔤)`) exponent vectors.
    pub fn split(&self, m: &SuperMonomial) -> (SuperMonomial, SuperMonomial) {
        let n = self.dim();
        (SuperMonomial(m.0[..n].to_vec()), SuperMonomial(m.0[n..].to_vec()))
    }

    fn join(&self, left: &SuperMonomial, right: &SuperMonomial) -> SuperMonomial {
        SuperMonomial(left.0.iter().chain(right.0.iter()).copied().collect())
    }

    /// `A ⊗ X` from a left monomial and a right element.
    pub fn tensor(&self, left: &SuperMonomial, right: &FormalElement) -> BiElement {
        let mut out = FormalElement::zero();
        for (r, c) in right.terms() {
            out.add_term(self.join(left, r), c.clone());
        }
        out
    }

    /// CE-degree (left polynomial order) and S-degree (right polynomial order).
    pub fn degrees(&self, m: &SuperMonomial) -> (i64, i64) {
        let n = self.dim();
        (m.order_in(0..n), m.order_in(n..2 * n))
    }

    /// `d(A⊗X) = Σ xⁱA⊗eᵢX + Σ(−1)^{|A|} yⁱA⊗εᵢX`, i.e. left multiplication by `θ`.
    pub fn hodge_d(&self, v: &BiElement) -> BiElement {
        self.bi.multiply(&self.theta, v)
    }

    /// `Δ = Σ ∂_{eᵢ}∂_{xⁱ} + Σ ∂_{yʲ}∂_{εⱼ}`.
    pub fn laplacian(&self, v: &BiElement) -> BiElement {
        let n = self.dim();
        let mut out = FormalElement::zero();
        for i in 0..n {
            let (inner, outer) = if self.alg.is_odd(i) { (n + i, i) } else { (i, n + i) };
            let d = self.bi.left_partial(outer, &self.bi.left_partial(inner, v));
            out.add_scaled(&d, &Scalar::one());
        }
        out
    }

    /// `N + deg_e + deg_y − deg_x − deg_ε` on a bimonomial.
    pub fn eigenvalue(&self, m: &SuperMonomial) -> i64 {
        let n = self.dim();
        let mut v = n as i64;
        for i in 0..n {
            let (l, r) = (m.0[i] as i64, m.0[n + i] as i64);
            if self.alg.is_odd(i) {
                v += l - r;
            } else {
                v += r - l;
            }
        }
        v
    }

    /// Checks `[Δ,d](P⊗Q) = λ·P⊗Q` and returns `λ`.
    pub fn hodge_laplacian_commutator(&self, m: &SuperMonomial) -> Result<i64, BerezinError> {
        let v = FormalElement::from_monomial(m.clone(), Scalar::one());
        let lhs = self.laplacian(&self.hodge_d(&v)).add(&self.hodge_d(&self.laplacian(&v)));
        let lambda = self.eigenvalue(m);
        if lhs != v.scale(&int(lambda)) {
            return Err(BerezinError::NotEigenvector(self.bi.format_monomial(m)));
        }
        Ok(lambda)
    }

    /// `s = Δ/λ` off the Berezinian line and `Δ` on it.
    pub fn hodge_s(&self, v: &BiElement) -> BiElement {
        let mut out = FormalElement::zero();
        for (m, c) in v.terms() {
            let single = FormalElement::from_monomial(m.clone(), c.clone());
            let lap = self.laplacian(&single);
            if self.is_berezinian(m) {
                out.add_scaled(&lap, &Scalar::one());
            } else {
                let lambda = self.eigenvalue(m);
                out.add_scaled(&lap, &Scalar::new(1.into(), lambda.into()));
            }
        }
        out
    }

    /// Projection onto the Berezinian line.
    pub fn hodge_t(&self, v: &BiElement) -> BiElement {
        v.filter(|m| self.is_berezinian(m))
    }

    /// Coefficient of `B`.
    pub fn berezinian_coefficient(&self, v: &BiElement) -> Scalar {
        v.coefficient(&self.berezinian)
    }

    /// `eᵢ ⋆ X` in `S(𝔤)`.
    pub fn star_left(&self, i: usize, x: &FormalElement) -> FormalElement {
        self.env.phi_inv(&self.env.left_mul_gen(i, &self.env.phi(x)))
    }

    /// `(A⊗X)⋆u = A⊗(X⋆u)` for `u` a basis element.
    pub fn star_right(&self, v: &BiElement, u: usize) -> BiElement {
        let mut out = FormalElement::zero();
        let ug = self.env.sym().gen(u);
        for (m, c) in v.terms() {
            let (l, r) = self.split(m);
            let x = FormalElement::from_monomial(r, c.clone());
            out.add_scaled(&self.tensor(&l, &self.env.gutt_star(&x, &ug)), &Scalar::one());
        }
        out
    }

    /// `∂(A⊗X) = d_CE(A)⊗X + Σ(−1)^{|b||A|} x^bA⊗(e_b⋆X)`.
    pub fn perturbed_d(&self, v: &BiElement) -> BiElement {
        let n = self.dim();
        let mut out = self.bi.apply_vector_field(&self.d_ce, v);
        for (m, c) in v.terms() {
            let (l, r) = self.split(m);
            let a = self.tensor(&l, &self.env.sym().constant(c.clone()));
            let a_odd = self.bi.mono_parity(&l_join(&l, n));
            let x = FormalElement::from_monomial(r, Scalar::one());
            for b in 0..n {
                let xa = self.bi.multiply(&self.bi.gen(b), &a);
                if xa.is_zero() {
                    continue;
                }
                let star = self.star_left(b, &x);
                let s = int(sign_of(self.alg.is_odd(b), a_odd));
                for (lm, lc) in xa.terms() {
                    let (left, _) = self.split(lm);
                    out.add_scaled(&self.tensor(&left, &star), &(lc * &s));
                }
            }
        }
        out
    }

    /// `x = ∂ − d`.
    pub fn perturbation_x(&self, v: &BiElement) -> BiElement {
        self.perturbed_d(v).sub(&self.hodge_d(v))
    }

    fn neumann(&self, v: &BiElement, step: impl Fn(&BiElement) -> BiElement) -> Result<BiElement, BerezinError> {
        let mut total = v.clone();
        let mut term = v.clone();
        for _ in 0..SERIES_LIMIT {
            term = step(&term).neg();
            if term.is_zero() {
                return Ok(total);
            }
            total = total.add(&term);
        }
        Err(BerezinError::SeriesDiverged)
    }

    /// `α = Σ(−sx)^k`.
    pub fn alpha(&self, v: &BiElement) -> Result<BiElement, BerezinError> {
        self.neumann(v, |w| self.hodge_s(&self.perturbation_x(w)))
    }

    /// `β = Σ(−xs)^k`.
    pub fn beta(&self, v: &BiElement) -> Result<BiElement, BerezinError> {
        self.neumann(v, |w| self.perturbation_x(&self.hodge_s(w)))
    }

    /// Total degree of a homogeneous element.
    pub fn total_degree(&self, v: &BiElement) -> Option<i64> {
        self.bi.homogeneous_degree(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformedBerezinian {
    pub element: BiElement,
    pub degree: i64,
}

pub fn deformed_berezinian(p: &Berezin) -> Result<DeformedBerezinian, BerezinError> {
    let b = p.berezinian();
    let element = p.alpha(&b)?;
    if !p.perturbed_d(&element).is_zero() {
        return Err(BerezinError::NotClosed);
    }
    let degree = p.total_degree(&element).ok_or(BerezinError::NotClosed)?;
    Ok(DeformedBerezinian { element, degree })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualizingCharacter {
    pub values: Vec<Scalar>,
}

/// `r(u)` = coefficient of `B` in `β(B̃⋆u)`, checked against `w − r B̃ = ∂(αs w)`.
pub fn dualizing_character(p: &Berezin, bt: &DeformedBerezinian) -> Result<DualizingCharacter, BerezinError> {
    let mut values = Vec::with_capacity(p.dim());
    for u in 0..p.dim() {
        let w = p.star_right(&bt.element, u);
        let r = p.berezinian_coefficient(&p.beta(&w)?);
        let homotopy = p.perturbed_d(&p.alpha(&p.hodge_s(&w))?);
        if w.sub(&bt.element.scale(&r)) != homotopy {
            return Err(BerezinError::TransferInconsistent(p.algebra().basis().name(u).to_string()));
        }
        values.push(r);
    }
    Ok(DualizingCharacter { values })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterEntry {
    pub gen: String,
    pub r: String,
    pub str_ad: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainTheoremReport {
    pub character: Vec<CharacterEntry>,
    pub berezinian_degree: i64,
    pub expected_degree: i64,
    pub closed: bool,
}

impl MainTheoremReport {
    pub fn holds(&self) -> bool {
        self.closed
            && self.berezinian_degree == self.expected_degree
            && self.character.iter().all(|c| c.matches)
    }
}

/// Compares the dualizing character with `str(ad)` and the degree of `B̃` with `|𝔤|`.
pub fn verify_main_theorem(alg: &GradedLieAlgebra) -> Result<MainTheoremReport, BerezinError> {
    let p = Berezin::new(alg);
    let bt = deformed_berezinian(&p)?;
    let chi = dualizing_character(&p, &bt)?;
    let str_ad = supertrace_character(alg);
    let character = (0..alg.dim())
        .map(|i| CharacterEntry {
            gen: alg.basis().name(i).to_string(),
            r: format_scalar(&chi.values[i]),
            str_ad: format_scalar(&str_ad[i]),
            matches: chi.values[i] == str_ad[i],
        })
        .collect();
    Ok(MainTheoremReport {
        character,
        berezinian_degree: bt.degree,
        expected_degree: total_dimension_invariant(alg.basis()).0,
        closed: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedBasis;
    use crate::graded::GradingMode::{Z, Z2};

    fn nonabelian2() -> GradedLieAlgebra {
        let b = GradedBasis::numbered(Z, "e", &[0, 0]);
        GradedLieAlgebra::from_brackets(b, &[(0, 1, vec![(1, int(1))])]).unwrap()
    }

    fn super2() -> GradedLieAlgebra {
        let b = GradedBasis::new(Z2, vec!["h".into(), "eps".into()], vec![0, 1]).unwrap();
        GradedLieAlgebra::from_brackets(b, &[(0, 1, vec![(1, int(1))])]).unwrap()
    }

    #[test]
    fn hodge_d_examples() {
        let g = nonabelian2();
        let p = Berezin::new(&g);
        let one = p.bi_algebra().one();
        let d1 = p.hodge_d(&one);
        assert_eq!(d1.len(), 2);
        assert!(p.hodge_d(&d1).is_zero());
        assert!(p.hodge_d(&p.berezinian()).is_zero());
    }

    #[test]
    fn laplacian_eigenvalues() {
        let g = super2();
        let p = Berezin::new(&g);
        let n = 2;
        assert_eq!(p.hodge_laplacian_commutator(&p.berezinian.clone()).unwrap(), 0);
        assert_eq!(p.hodge_laplacian_commutator(&SuperMonomial::one(2 * n)).unwrap(), 2);
        // P = e_h² (degree 2), Q = x_h (degree 1).
        assert_eq!(p.hodge_laplacian_commutator(&SuperMonomial(vec![1, 0, 2, 0])).unwrap(), 3);
    }

    #[test]
    fn s_examples() {
        let g = nonabelian2();
        let p = Berezin::new(&g);
        assert!(p.hodge_s(&p.berezinian()).is_zero());
        // x¹⊗e₁ has eigenvalue 2 and Δ(x¹e₁) = 1.
        let v = FormalElement::from_monomial(SuperMonomial(vec![1, 0, 1, 0]), Scalar::one());
        assert_eq!(p.hodge_s(&v), p.bi_algebra().one().scale(&Scalar::new(1.into(), 2.into())));
    }

    #[test]
    fn x_vanishes_for_abelian() {
        let g = GradedLieAlgebra::abelian(GradedBasis::numbered(Z, "e", &[0, 1]));
        let p = Berezin::new(&g);
        for m in p.bi_algebra().monomials_of_order(3) {
            let v = FormalElement::from_monomial(m, Scalar::one());
            assert!(p.perturbation_x(&v).is_zero());
        }
        let bt = deformed_berezinian(&p).unwrap();
        assert_eq!(bt.element, p.berezinian());
    }

    #[test]
    fn main_theorem_examples() {
        let r = verify_main_theorem(&nonabelian2()).unwrap();
        assert!(r.holds());
        assert_eq!(r.character[0].r, "1");
        let r = verify_main_theorem(&super2()).unwrap();
        assert!(r.holds());
        assert_eq!((r.character[0].r.as_str(), r.character[1].r.as_str()), ("-1", "0"));
    }
}
