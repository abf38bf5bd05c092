//! The universal enveloping algebra: PBW normal form, symmetrization and its inverse,
//! the Gutt star product, Hopf maps, tensor and Hom modules.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::exact::{int, rank, Scalar, SparseMatrix};
use crate::formal::{FormalElement, FreeAlgebra, Generator, SuperMonomial};
use crate::graded::GradedBasis;
use crate::liealg::{dual_module, GradedLieAlgebra, LieModule};

/// Element of `U(𝔤)` in PBW normal form; monomials are ordered exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UElement(pub FormalElement);

/// Element of `S(𝔤)`.
pub type SymElement = FormalElement;

impl UElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &UElement) -> UElement {
        UElement(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &UElement) -> UElement {
        UElement(self.0.sub(&other.0))
    }

    pub fn scale(&self, k: &Scalar) -> UElement {
        UElement(self.0.scale(k))
    }
}

/// `S(𝔤)` as a free graded-commutative algebra on the basis of `𝔤`.
pub fn sym_algebra(alg: &GradedLieAlgebra) -> FreeAlgebra {
    let b = alg.basis();
    let gens = (0..b.len())
        .map(|i| Generator { name: b.name(i).to_string(), degree: b.degree(i) })
        .collect();
    FreeAlgebra::new(alg.mode(), gens, false)
}

/// Homogeneous component of polynomial degree `k`.
pub fn pr(x: &SymElement, k: i64) -> SymElement {
    x.filter(|m| m.order() == k)
}

/// `U(𝔤)` with memoized normal form, `Φ` and `Φ⁻¹`. Caches live as long as the value.
pub struct Envelope<'a> {
    alg: &'a GradedLieAlgebra,
    sym: FreeAlgebra,
    gen_cache: RefCell<HashMap<(usize, SuperMonomial), FormalElement>>,
    phi_cache: RefCell<HashMap<SuperMonomial, FormalElement>>,
    phi_inv_cache: RefCell<HashMap<SuperMonomial, FormalElement>>,
}

impl<'a> Envelope<'a> {
    pub fn new(alg: &'a GradedLieAlgebra) -> Self {
        Envelope {
            alg,
            sym: sym_algebra(alg),
            gen_cache: RefCell::default(),
            phi_cache: RefCell::default(),
            phi_inv_cache: RefCell::default(),
        }
    }

    pub fn algebra(&self) -> &GradedLieAlgebra {
        self.alg
    }

    pub fn sym(&self) -> &FreeAlgebra {
        &self.sym
    }

    pub fn one(&self) -> UElement {
        UElement(self.sym.one())
    }

    pub fn gen(&self, i: usize) -> UElement {
        UElement(self.sym.gen(i))
    }

    fn unit_mono(&self, g: usize) -> SuperMonomial {
        let mut e = vec![0; self.alg.dim()];
        e[g] = 1;
        SuperMonomial(e)
    }

    /// Normal form of `e_g · M` for a PBW monomial `M`.
    pub fn gen_times(&self, g: usize, m: &SuperMonomial) -> FormalElement {
        if let Some(v) = self.gen_cache.borrow().get(&(g, m.clone())) {
            return v.clone();
        }
        let out = self.gen_times_uncached(g, m);
        self.gen_cache.borrow_mut().insert((g, m.clone()), out.clone());
        out
    }

    fn gen_times_uncached(&self, g: usize, m: &SuperMonomial) -> FormalElement {
        let first = m.0.iter().position(|&e| e != 0);
        let j = match first {
            None => return FormalElement::from_monomial(self.unit_mono(g), Scalar::one()),
            Some(j) => j,
        };
        if g < j || (g == j && !self.alg.is_odd(g)) {
            let mut e = m.clone();
            e.0[g] += 1;
            return FormalElement::from_monomial(e, Scalar::one());
        }
        let mut rest = m.clone();
        rest.0[j] -= 1;
        let mut out = FormalElement::zero();
        if g == j {
            // e_g² = ½[e_g, e_g] for odd e_g.
            let half = Scalar::new(1.into(), 2.into());
            for (k, c) in self.alg.bracket_terms(g, g) {
                out.add_scaled(&self.gen_times(k, &rest), &(c * &half));
            }
            return out;
        }
        // g > j: e_g e_j M' = (−1)^{|g||j|} e_j (e_g M') + [e_g, e_j] M'.
        let s = int(if self.alg.is_odd(g) && self.alg.is_odd(j) { -1 } else { 1 });
        for (t, c) in self.gen_times(g, &rest).terms() {
            out.add_scaled(&self.gen_times(j, t), &(c * &s));
        }
        for (k, c) in self.alg.bracket_terms(g, j) {
            out.add_scaled(&self.gen_times(k, &rest), c);
        }
        out
    }

    pub fn left_mul_gen(&self, g: usize, u: &UElement) -> UElement {
        let mut out = FormalElement::zero();
        for (m, c) in u.0.terms() {
            out.add_scaled(&self.gen_times(g, m), c);
        }
        UElement(out)
    }

    /// The generator word of a PBW monomial, in order.
    pub fn word_of(&self, m: &SuperMonomial) -> Vec<usize> {
        m.0.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize)).collect()
    }

    pub fn mul(&self, a: &UElement, b: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in a.0.terms() {
            let mut acc = b.clone();
            for &g in self.word_of(m).iter().rev() {
                acc = self.left_mul_gen(g, &acc);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// Normal form of `c · e_{w₁}⋯e_{w_k}`.
    pub fn normal_form(&self, word: &[usize], c: &Scalar) -> UElement {
        let mut acc = self.one().scale(c);
        for &g in word.iter().rev() {
            acc = self.left_mul_gen(g, &acc);
        }
        acc
    }

    fn phi_mono(&self, m: &SuperMonomial) -> FormalElement {
        if let Some(v) = self.phi_cache.borrow().get(m) {
            return v.clone();
        }
        let k = m.order();
        let out = if k == 0 {
            self.sym.one()
        } else {
            let mut acc = FormalElement::zero();
            let mut odd_before = 0usize;
            for g in 0..m.0.len() {
                let e = m.0[g];
                if e == 0 {
                    continue;
                }
                let mut rest = m.clone();
                rest.0[g] -= 1;
                let sign = if self.alg.is_odd(g) && odd_before % 2 == 1 { -1 } else { 1 };
                let inner = UElement(self.phi_mono(&rest));
                acc.add_scaled(&self.left_mul_gen(g, &inner).0, &int(sign * e as i64));
                if self.alg.is_odd(g) {
                    odd_before += 1;
                }
            }
            acc.scale(&Scalar::new(1.into(), k.into()))
        };
        self.phi_cache.borrow_mut().insert(m.clone(), out.clone());
        out
    }

    /// `Φ`: graded symmetrization `S(𝔤) → U(𝔤)`.
    pub fn phi(&self, x: &SymElement) -> UElement {
        let mut out = FormalElement::zero();
        for (m, c) in x.terms() {
            out.add_scaled(&self.phi_mono(m), c);
        }
        UElement(out)
    }

    fn phi_inv_mono(&self, m: &SuperMonomial) -> FormalElement {
        if let Some(v) = self.phi_inv_cache.borrow().get(m) {
            return v.clone();
        }
        let mut out = FormalElement::from_monomial(m.clone(), Scalar::one());
        if m.order() > 0 {
            let mut rem = self.phi_mono(m);
            rem.add_term(m.clone(), -Scalar::one());
            // `rem = Φ(M) − M` lies in lower PBW filtration.
            debug_assert!(rem.terms().all(|(t, _)| t.order() < m.order()));
            out.add_scaled(&self.phi_inv(&UElement(rem)), &-Scalar::one());
        }
        self.phi_inv_cache.borrow_mut().insert(m.clone(), out.clone());
        out
    }

    /// `Φ⁻¹` by descending induction on the PBW filtration.
    pub fn phi_inv(&self, u: &UElement) -> SymElement {
        let mut out = FormalElement::zero();
        for (m, c) in u.0.terms() {
            out.add_scaled(&self.phi_inv_mono(m), c);
        }
        out
    }

    /// `x ⋆ y = Φ⁻¹(Φ(x)Φ(y))`.
    pub fn gutt_star(&self, x: &SymElement, y: &SymElement) -> SymElement {
        self.phi_inv(&self.mul(&self.phi(x), &self.phi(y)))
    }

    /// Lie–Poisson bracket `{X,Y} = Σ (X∂⃖ᵢ)[eᵢ,eⱼ](∂ⱼY)`.
    pub fn poisson(&self, x: &SymElement, y: &SymElement) -> SymElement {
        let mut out = FormalElement::zero();
        for (i, j, k, c) in self.alg.nonzero_constants() {
            let a = self.sym.right_partial(i, x);
            let b = self.sym.left_partial(j, y);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let mid = self.sym.multiply(&a, &self.sym.gen(k));
            out.add_scaled(&self.sym.multiply(&mid, &b), c);
        }
        out
    }

    /// Antipode: `S(e_{i₁}⋯e_{i_k}) = (−1)^k (Koszul sign) e_{i_k}⋯e_{i₁}`.
    pub fn antipode(&self, u: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in u.0.terms() {
            let w = self.word_of(m);
            let odd = w.iter().filter(|&&g| self.alg.is_odd(g)).count();
            let pairs = odd * odd.saturating_sub(1) / 2;
            let sign = if (w.len() + pairs) % 2 == 0 { 1 } else { -1 };
            let rev: Vec<usize> = w.iter().rev().copied().collect();
            out = out.add(&self.normal_form(&rev, &(c * int(sign))));
        }
        out
    }

    pub fn counit(&self, u: &UElement) -> Scalar {
        u.0.coefficient(&SuperMonomial::one(self.alg.dim()))
    }
}

/// A factor in `U ⊗ U` on generator level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorFactor {
    One,
    Gen(usize),
}

/// Generator-level Hopf data: `Δ(u) = u⊗1 + 1⊗u`, `S(u) = −u`, `ε(u) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfMaps {
    pub coproduct: Vec<Vec<(Scalar, TensorFactor, TensorFactor)>>,
    pub antipode: Vec<(Scalar, usize)>,
    pub counit: Vec<Scalar>,
}

pub fn hopf_maps(alg: &GradedLieAlgebra) -> HopfMaps {
    let n = alg.dim();
    HopfMaps {
        coproduct: (0..n)
            .map(|i| {
                vec![
                    (Scalar::one(), TensorFactor::Gen(i), TensorFactor::One),
                    (Scalar::one(), TensorFactor::One, TensorFactor::Gen(i)),
                ]
            })
            .collect(),
        antipode: (0..n).map(|i| (-Scalar::one(), i)).collect(),
        counit: vec![Scalar::zero(); n],
    }
}

fn zero_matrix(n: usize) -> Vec<Vec<Scalar>> {
    vec![vec![Scalar::zero(); n]; n]
}

/// `N ⊗ M` with `u·(n⊗m) = un⊗m + (−1)^{|u||n|} n⊗um`; basis `n_p⊗m_q` at `p·dim M + q`.
pub fn tensor_module(alg: &GradedLieAlgebra, n: &LieModule, m: &LieModule) -> LieModule {
    let (dn, dm) = (n.dim(), m.dim());
    let mut names = Vec::new();
    let mut degrees = Vec::new();
    for p in 0..dn {
        for q in 0..dm {
            names.push(format!("{}⊗{}", n.carrier.name(p), m.carrier.name(q)));
            degrees.push(n.carrier.reduce(n.carrier.degree(p) + m.carrier.degree(q)));
        }
    }
    let carrier = GradedBasis::new(alg.mode(), names, degrees).expect("tensor basis");
    let hopf = hopf_maps(alg);
    let action = (0..alg.dim())
        .map(|i| {
            let mut a = zero_matrix(dn * dm);
            for (c, left, right) in &hopf.coproduct[i] {
                for p in 0..dn {
                    for q in 0..dm {
                        let col = p * dm + q;
                        match (left, right) {
                            (TensorFactor::Gen(g), TensorFactor::One) => {
                                for (r, row) in n.action[*g].iter().enumerate() {
                                    if !row[p].is_zero() {
                                        a[r * dm + q][col] += c * &row[p];
                                    }
                                }
                            }
                            (TensorFactor::One, TensorFactor::Gen(g)) => {
                                let s = int(if alg.is_odd(*g) && n.is_odd(p) { -1 } else { 1 });
                                for (r, row) in m.action[*g].iter().enumerate() {
                                    if !row[q].is_zero() {
                                        a[p * dm + r][col] += c * &s * &row[q];
                                    }
                                }
                            }
                            _ => {}
                        }
                    }
                }
            }
            a
        })
        .collect();
    LieModule { carrier, action }
}

/// `Hom(M, N)` with basis `E_pq: m_q ↦ n_p` at `p·dim M + q` and
/// `u·f = ρ_N(u)∘f − (−1)^{|u||f|} f∘ρ_M(u)`.
pub fn hom_module(alg: &GradedLieAlgebra, m: &LieModule, n: &LieModule) -> LieModule {
    let (dn, dm) = (n.dim(), m.dim());
    let mut names = Vec::new();
    let mut degrees = Vec::new();
    for p in 0..dn {
        for q in 0..dm {
            names.push(format!("E[{},{}]", n.carrier.name(p), m.carrier.name(q)));
            degrees.push(n.carrier.reduce(n.carrier.degree(p) - m.carrier.degree(q)));
        }
    }
    let carrier = GradedBasis::new(alg.mode(), names, degrees).expect("hom basis");
    let action = (0..alg.dim())
        .map(|i| {
            let mut a = zero_matrix(dn * dm);
            for p in 0..dn {
                for q in 0..dm {
                    let col = p * dm + q;
                    for (r, row) in n.action[i].iter().enumerate() {
                        if !row[p].is_zero() {
                            a[r * dm + q][col] += &row[p];
                        }
                    }
                    let f_odd = carrier.is_odd(col);
                    let s = int(if alg.is_odd(i) && f_odd { 1 } else { -1 });
                    // (E_pq ∘ ρ_M(u)) sends m_r to ρ_M(u)[q][r] n_p.
                    for r in 0..dm {
                        let v = &m.action[i][q][r];
                        if !v.is_zero() {
                            a[p * dm + r][col] += &s * v;
                        }
                    }
                }
            }
            a
        })
        .collect();
    LieModule { carrier, action }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiIsoReport {
    pub bijective: bool,
    pub equivariant: bool,
    pub degree_preserving: bool,
}

impl PhiIsoReport {
    pub fn holds(&self) -> bool {
        self.bijective && self.equivariant && self.degree_preserving
    }
}

/// Checks that `φ(n⊗α)(m) = nα(m)` is a module isomorphism `N⊗M* → Hom(M,N)`.
pub fn phi_iso_check(alg: &GradedLieAlgebra, m: &LieModule, n: &LieModule) -> PhiIsoReport {
    let src = tensor_module(alg, n, &dual_module(alg, m));
    let dst = hom_module(alg, m, n);
    let dim = src.dim();
    // φ(n_p ⊗ m^q) = E_pq.
    let mut phi = SparseMatrix::zeros(dst.dim(), dim);
    for c in 0..dim {
        phi.set(c, c, Scalar::one());
    }
    let bijective = dst.dim() == dim && rank(&phi) == dim;
    let degree_preserving = (0..dim).all(|c| src.carrier.degree(c) == dst.carrier.degree(c));
    let equivariant = (0..alg.dim()).all(|i| {
        let a = SparseMatrix::from_dense(&src.action[i]);
        let b = SparseMatrix::from_dense(&dst.action[i]);
        phi.mul(&a).ok() == b.mul(&phi).ok()
    });
    PhiIsoReport { bijective, equivariant, degree_preserving }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use crate::graded::GradingMode::{Z, Z2};
    use crate::liealg::validate_module;

    fn nonabelian2() -> GradedLieAlgebra {
        let b = GradedBasis::numbered(Z, "e", &[0, 0]);
        GradedLieAlgebra::from_brackets(b, &[(0, 1, vec![(1, int(1))])]).unwrap()
    }

    fn osp_like() -> GradedLieAlgebra {
        let b = GradedBasis::new(Z2, vec!["h".into(), "eps".into()], vec![0, 1]).unwrap();
        GradedLieAlgebra::from_brackets(b, &[(1, 1, vec![(0, int(2))])]).unwrap()
    }

    fn sym(_env: &Envelope, exps: &[i32]) -> SymElement {
        FormalElement::from_monomial(SuperMonomial(exps.to_vec()), Scalar::one())
    }

    #[test]
    fn normal_form_examples() {
        let g = nonabelian2();
        let env = Envelope::new(&g);
        let u = env.normal_form(&[1, 0], &Scalar::one());
        let expected = UElement(sym(&env, &[1, 1]).sub(&sym(&env, &[0, 1])));
        assert_eq!(u, expected);
        assert_eq!(env.normal_form(&[0, 1], &Scalar::one()), UElement(sym(&env, &[1, 1])));

        let s = osp_like();
        let env = Envelope::new(&s);
        assert_eq!(env.normal_form(&[1, 1], &Scalar::one()), UElement(sym(&env, &[1, 0])));
    }

    #[test]
    fn phi_examples() {
        let g = nonabelian2();
        let env = Envelope::new(&g);
        assert_eq!(env.phi(&env.sym().one()), env.one());
        assert_eq!(env.phi(&env.sym().gen(0)), env.gen(0));
        let half = frac(1, 2);
        let expected = env
            .normal_form(&[0, 1], &half)
            .add(&env.normal_form(&[1, 0], &half));
        assert_eq!(env.phi(&sym(&env, &[1, 1])), expected);
    }

    #[test]
    fn phi_inv_examples() {
        let g = nonabelian2();
        let env = Envelope::new(&g);
        let got = env.phi_inv(&env.gen(0).add(&UElement::zero()));
        assert_eq!(got, env.sym().gen(0));
        let e1e2 = UElement(sym(&env, &[1, 1]));
        let expected = sym(&env, &[1, 1]).add(&sym(&env, &[0, 1]).scale(&frac(1, 2)));
        assert_eq!(env.phi_inv(&e1e2), expected);
        assert_eq!(env.phi_inv(&env.one()), env.sym().one());
    }

    #[test]
    fn gutt_examples() {
        let g = nonabelian2();
        let env = Envelope::new(&g);
        let (x, y) = (env.sym().gen(0), env.sym().gen(1));
        let expected = sym(&env, &[1, 1]).add(&sym(&env, &[0, 1]).scale(&frac(1, 2)));
        assert_eq!(env.gutt_star(&x, &y), expected);
        let comm = env.gutt_star(&x, &y).sub(&env.gutt_star(&y, &x));
        assert_eq!(comm, y);

        let ab = GradedLieAlgebra::abelian(GradedBasis::numbered(Z, "e", &[0, 0]));
        let env = Envelope::new(&ab);
        let (x, y) = (sym(&env, &[2, 1]), sym(&env, &[1, 3]));
        assert_eq!(env.gutt_star(&x, &y), env.sym().multiply(&x, &y));
    }

    #[test]
    fn hopf_examples() {
        let g = osp_like();
        let h = hopf_maps(&g);
        for (i, (c, j)) in h.antipode.iter().enumerate() {
            let (c2, k) = &h.antipode[*j];
            assert_eq!((c * c2, *k), (Scalar::one(), i));
            assert_eq!(h.counit[*j].clone() * c, h.counit[i]);
        }
        let env = Envelope::new(&g);
        let u = env.normal_form(&[0, 1], &Scalar::one());
        assert_eq!(env.antipode(&env.antipode(&u)), u);
        assert_eq!(env.counit(&env.antipode(&u)), env.counit(&u));
    }

    #[test]
    fn phi_isomorphism_small_modules() {
        for g in [nonabelian2(), osp_like()] {
            let adj = LieModule::adjoint(&g);
            let triv = LieModule::trivial(&g);
            for (m, n) in [(&adj, &adj), (&adj, &triv), (&triv, &adj)] {
                assert!(validate_module(&g, &tensor_module(&g, n, m)).is_empty());
                assert!(validate_module(&g, &hom_module(&g, m, n)).is_empty());
                assert!(phi_iso_check(&g, m, n).holds());
            }
        }
    }
}
