//! Free graded-commutative algebras `𝕜[y]⊗Λ(x)` (optionally Laurent in the even generators),
//! formal vector fields, divergence, the formal integral and the residue pairing.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{format_scalar, int, Scalar};
use crate::graded::{parity, GradingMode};

/// Exponent vector over all generators; odd generators carry 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperMonomial(pub Vec<i32>);

impl SuperMonomial {
    pub fn one(n: usize) -> Self {
        SuperMonomial(vec![0; n])
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    /// Total polynomial order `Σ kᵢ`.
    pub fn order(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn order_in(&self, range: std::ops::Range<usize>) -> i64 {
        self.0[range].iter().map(|&e| e as i64).sum()
    }
}

/// Finite ℚ-linear combination of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalElement {
    terms: BTreeMap<SuperMonomial, Scalar>,
}

impl FormalElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_monomial(m: SuperMonomial, c: Scalar) -> Self {
        let mut f = Self::zero();
        f.add_term(m, c);
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<SuperMonomial, Scalar> {
        self.terms
    }

    pub fn coefficient(&self, m: &SuperMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FormalElement, k: &Scalar) {
        if k.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * k);
        }
    }

    pub fn add(&self, other: &FormalElement) -> FormalElement {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &FormalElement) -> FormalElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn scale(&self, k: &Scalar) -> FormalElement {
        let mut out = FormalElement::zero();
        out.add_scaled(self, k);
        out
    }

    pub fn neg(&self) -> FormalElement {
        self.scale(&-Scalar::one())
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&SuperMonomial) -> bool) -> FormalElement {
        FormalElement {
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Drops all terms of polynomial order above `order`.
    pub fn truncate(&self, order: i64) -> FormalElement {
        self.filter(|m| m.order() <= order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
}

/// A formal vector field `Σ fᵢ ∂/∂xᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VectorField {
    coeffs: BTreeMap<usize, FormalElement>,
}

impl VectorField {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The field `f ∂/∂x_i`.
    pub fn single(i: usize, f: FormalElement) -> Self {
        let mut v = Self::zero();
        v.set(i, f);
        v
    }

    pub fn set(&mut self, i: usize, f: FormalElement) {
        if f.is_zero() {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, f);
        }
    }

    pub fn add_to(&mut self, i: usize, f: &FormalElement) {
        let cur = self.component(i);
        self.set(i, cur.add(f));
    }

    pub fn component(&self, i: usize) -> FormalElement {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &FormalElement)> {
        self.coeffs.iter().map(|(&i, f)| (i, f))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        let mut out = self.clone();
        for (i, f) in other.components() {
            out.add_to(i, f);
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> VectorField {
        let mut out = VectorField::zero();
        for (i, f) in self.components() {
            out.set(i, f.scale(k));
        }
        out
    }
}

/// Free graded-commutative algebra on named generators with integer degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAlgebra {
    mode: GradingMode,
    gens: Vec<Generator>,
    odd: Vec<bool>,
    laurent: bool,
}

impl FreeAlgebra {
    pub fn new(mode: GradingMode, gens: Vec<Generator>, laurent: bool) -> Self {
        let odd = gens.iter().map(|g| parity(g.degree)).collect();
        FreeAlgebra { mode, gens, odd, laurent }
    }

    /// Generators given as `(name, degree)` pairs.
    pub fn from_pairs(mode: GradingMode, pairs: &[(&str, i64)], laurent: bool) -> Self {
        let gens = pairs.iter().map(|&(n, d)| Generator { name: n.to_string(), degree: d }).collect();
        Self::new(mode, gens, laurent)
    }

    pub fn mode(&self) -> GradingMode {
        self.mode
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn n_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.odd[i]
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.gens[i].degree
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn reduce(&self, d: i64) -> i64 {
        match self.mode {
            GradingMode::Z => d,
            GradingMode::Z2 => d.rem_euclid(2),
        }
    }

    pub fn one(&self) -> FormalElement {
        FormalElement::from_monomial(SuperMonomial::one(self.n_gens()), Scalar::one())
    }

    pub fn constant(&self, c: Scalar) -> FormalElement {
        FormalElement::from_monomial(SuperMonomial::one(self.n_gens()), c)
    }

    pub fn gen(&self, i: usize) -> FormalElement {
        let mut e = vec![0; self.n_gens()];
        e[i] = 1;
        FormalElement::from_monomial(SuperMonomial(e), Scalar::one())
    }

    /// Monomial `Π gᵢ^{kᵢ}`; `None` if an odd exponent exceeds 1 or a negative exponent
    /// appears outside Laurent mode.
    pub fn monomial(&self, exps: Vec<i32>) -> Option<SuperMonomial> {
        assert_eq!(exps.len(), self.n_gens());
        for (i, &e) in exps.iter().enumerate() {
            if self.odd[i] && !(e == 0 || e == 1) {
                return None;
            }
            if e < 0 && !self.laurent {
                return None;
            }
        }
        Some(SuperMonomial(exps))
    }

    pub fn mono_parity(&self, m: &SuperMonomial) -> bool {
        m.0.iter().zip(&self.odd).filter(|(&e, &o)| o && e != 0).count() % 2 == 1
    }

    /// Degree of a monomial, reduced mod 2 in Z2 mode.
    pub fn mono_degree(&self, m: &SuperMonomial) -> i64 {
        let d = m.0.iter().zip(&self.gens).map(|(&e, g)| e as i64 * g.degree).sum();
        self.reduce(d)
    }

    /// The common degree of all terms, if any.
    pub fn homogeneous_degree(&self, f: &FormalElement) -> Option<i64> {
        let mut it = f.terms().map(|(m, _)| self.mono_degree(m));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// The common parity of all terms, if any.
    pub fn parity_of(&self, f: &FormalElement) -> Option<bool> {
        let mut it = f.terms().map(|(m, _)| self.mono_parity(m));
        let p = it.next()?;
        it.all(|q| q == p).then_some(p)
    }

    /// Splits into (even part, odd part).
    pub fn parity_parts(&self, f: &FormalElement) -> (FormalElement, FormalElement) {
        (f.filter(|m| !self.mono_parity(m)), f.filter(|m| self.mono_parity(m)))
    }

    /// Product of monomials with its Koszul sign, or `None` when an odd generator repeats.
    pub fn mono_mul(&self, a: &SuperMonomial, b: &SuperMonomial) -> Option<(SuperMonomial, i64)> {
        let mut swaps = 0usize;
        let mut odd_in_a_after = 0usize;
        // Count odd generators of `a` with index larger than each odd generator of `b`.
        for i in (0..self.n_gens()).rev() {
            if self.odd[i] {
                if b.0[i] != 0 {
                    if a.0[i] != 0 {
                        return None;
                    }
                    swaps += odd_in_a_after;
                }
                if a.0[i] != 0 {
                    odd_in_a_after += 1;
                }
            }
        }
        let exps = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        Some((SuperMonomial(exps), if swaps % 2 == 0 { 1 } else { -1 }))
    }

    pub fn multiply(&self, a: &FormalElement, b: &FormalElement) -> FormalElement {
        let mut out = FormalElement::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                if let Some((m, s)) = self.mono_mul(ma, mb) {
                    out.add_term(m, ca * cb * int(s));
                }
            }
        }
        out
    }

    pub fn power(&self, a: &FormalElement, k: u32) -> FormalElement {
        let mut out = self.one();
        for _ in 0..k {
            out = self.multiply(&out, a);
        }
        out
    }

    /// Left partial derivative of a monomial: `∂/∂gᵢ (a b) = (∂a) b + (−1)^{|gᵢ||a|} a (∂b)`.
    pub fn mono_left_partial(&self, i: usize, m: &SuperMonomial) -> Option<(SuperMonomial, Scalar)> {
        let e = m.0[i];
        if e == 0 {
            return None;
        }
        let mut out = m.clone();
        out.0[i] = e - 1;
        if self.odd[i] {
            let before = (0..i).filter(|&j| self.odd[j] && m.0[j] != 0).count();
            Some((out, int(if before % 2 == 0 { 1 } else { -1 })))
        } else {
            Some((out, int(e as i64)))
        }
    }

    /// Right partial derivative of a monomial.
    pub fn mono_right_partial(&self, i: usize, m: &SuperMonomial) -> Option<(SuperMonomial, Scalar)> {
        let e = m.0[i];
        if e == 0 {
            return None;
        }
        let mut out = m.clone();
        out.0[i] = e - 1;
        if self.odd[i] {
            let after = (i + 1..self.n_gens()).filter(|&j| self.odd[j] && m.0[j] != 0).count();
            Some((out, int(if after % 2 == 0 { 1 } else { -1 })))
        } else {
            Some((out, int(e as i64)))
        }
    }

    pub fn left_partial(&self, i: usize, f: &FormalElement) -> FormalElement {
        let mut out = FormalElement::zero();
        for (m, c) in f.terms() {
            if let Some((d, k)) = self.mono_left_partial(i, m) {
                out.add_term(d, c * k);
            }
        }
        out
    }

    pub fn right_partial(&self, i: usize, f: &FormalElement) -> FormalElement {
        let mut out = FormalElement::zero();
        for (m, c) in f.terms() {
            if let Some((d, k)) = self.mono_right_partial(i, m) {
                out.add_term(d, c * k);
            }
        }
        out
    }

    /// `ξ(f) = Σ fᵢ ∂f/∂xᵢ`.
    pub fn apply_vector_field(&self, xi: &VectorField, f: &FormalElement) -> FormalElement {
        let mut out = FormalElement::zero();
        for (i, fi) in xi.components() {
            let d = self.left_partial(i, f);
            if !d.is_zero() {
                out.add_scaled(&self.multiply(fi, &d), &Scalar::one());
            }
        }
        out
    }

    /// Degree of a homogeneous field, `|fᵢ| − |xᵢ|`.
    pub fn field_degree(&self, xi: &VectorField) -> Option<i64> {
        let mut deg = None;
        for (i, fi) in xi.components() {
            for (m, _) in fi.terms() {
                let d = self.reduce(self.mono_degree(m) - self.degree(i));
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return None,
                    _ => {}
                }
            }
        }
        deg
    }

    fn field_parity_parts(&self, xi: &VectorField) -> [(bool, VectorField); 2] {
        let mut even = VectorField::zero();
        let mut odd = VectorField::zero();
        for (i, fi) in xi.components() {
            let gi = self.odd[i];
            even.set(i, fi.filter(|m| self.mono_parity(m) == gi));
            odd.set(i, fi.filter(|m| self.mono_parity(m) != gi));
        }
        [(false, even), (true, odd)]
    }

    /// `∇(ξ) = Σ (−1)^{|fᵢ||xᵢ|} ∂fᵢ/∂xᵢ`.
    pub fn divergence(&self, xi: &VectorField) -> FormalElement {
        let mut out = FormalElement::zero();
        for (i, fi) in xi.components() {
            for (m, c) in fi.terms() {
                if let Some((d, k)) = self.mono_left_partial(i, m) {
                    let s = if self.odd[i] && self.mono_parity(m) { -1 } else { 1 };
                    out.add_term(d, c * k * int(s));
                }
            }
        }
        out
    }

    /// `f·ξ = Σ (f fᵢ) ∂/∂xᵢ`.
    pub fn mul_field(&self, f: &FormalElement, xi: &VectorField) -> VectorField {
        let mut out = VectorField::zero();
        for (i, fi) in xi.components() {
            out.set(i, self.multiply(f, fi));
        }
        out
    }

    /// Graded commutator `[ξ₁, ξ₂] = ξ₁ξ₂ − (−1)^{|ξ₁||ξ₂|} ξ₂ξ₁`, extended bilinearly over parity parts.
    pub fn bracket(&self, a: &VectorField, b: &VectorField) -> VectorField {
        let mut out = VectorField::zero();
        for (pa, xa) in self.field_parity_parts(a) {
            for (pb, xb) in self.field_parity_parts(b) {
                if xa.is_zero() || xb.is_zero() {
                    continue;
                }
                let s = int(if pa && pb { -1 } else { 1 });
                let keys: std::collections::BTreeSet<usize> =
                    xa.components().chain(xb.components()).map(|(i, _)| i).collect();
                for i in keys {
                    let t1 = self.apply_vector_field(&xa, &xb.component(i));
                    let t2 = self.apply_vector_field(&xb, &xa.component(i));
                    let mut c = t1;
                    c.add_scaled(&t2, &-s.clone());
                    out.add_to(i, &c);
                }
            }
        }
        out
    }

    /// The monomial `(y¹)^{−1}⋯(y^m)^{−1}·x¹⋯xⁿ` read off by the formal integral.
    pub fn volume_monomial(&self) -> SuperMonomial {
        SuperMonomial(self.odd.iter().map(|&o| if o { 1 } else { -1 }).collect())
    }

    /// `∫f`: the coefficient of the volume monomial.
    pub fn formal_integral(&self, f: &FormalElement) -> Scalar {
        f.coefficient(&self.volume_monomial())
    }

    /// `⟨f, g⟩ = ∫ f g`.
    pub fn pairing(&self, f: &FormalElement, g: &FormalElement) -> Scalar {
        self.formal_integral(&self.multiply(f, g))
    }

    /// `ξ*(f) = ξ(f) + ∇(ξ) f`.
    pub fn adjoint_vector_field(&self, xi: &VectorField, f: &FormalElement) -> FormalElement {
        let mut out = self.apply_vector_field(xi, f);
        out.add_scaled(&self.multiply(&self.divergence(xi), f), &Scalar::one());
        out
    }

    /// All monomials of polynomial order exactly `k` with nonnegative exponents.
    pub fn monomials_of_order(&self, k: usize) -> Vec<SuperMonomial> {
        let mut out = Vec::new();
        let mut cur = vec![0i32; self.n_gens()];
        self.fill(0, k, &mut cur, &mut out);
        out.sort();
        out
    }

    fn fill(&self, i: usize, left: usize, cur: &mut Vec<i32>, out: &mut Vec<SuperMonomial>) {
        if i == self.n_gens() {
            if left == 0 {
                out.push(SuperMonomial(cur.clone()));
            }
            return;
        }
        let max = if self.odd[i] { left.min(1) } else { left };
        for e in 0..=max {
            cur[i] = e as i32;
            self.fill(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }

    pub fn format_monomial(&self, m: &SuperMonomial) -> String {
        let mut s = String::new();
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&self.gens[i].name);
            if e != 1 {
                let _ = write!(s, "^{e}");
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    pub fn format(&self, f: &FormalElement) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = f
            .terms()
            .map(|(m, c)| format!("({})*{}", format_scalar(c), self.format_monomial(m)))
            .collect();
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    fn xy() -> FreeAlgebra {
        // x¹, x² odd; y¹ even.
        FreeAlgebra::from_pairs(GradingMode::Z, &[("x1", 1), ("x2", 1), ("y1", 0)], false)
    }

    #[test]
    fn multiply_examples() {
        let a = xy();
        let f = a.multiply(&a.gen(2), &a.gen(0)).add(&a.gen(1));
        assert_eq!(a.multiply(&a.one(), &f), f);
        assert!(a.multiply(&a.gen(0), &a.gen(0)).is_zero());
        let s = a.multiply(&a.gen(0), &a.gen(1)).add(&a.multiply(&a.gen(1), &a.gen(0)));
        assert!(s.is_zero());
    }

    #[test]
    fn apply_examples() {
        let a = xy();
        let y3 = a.power(&a.gen(2), 3);
        let d = VectorField::single(2, a.one());
        assert_eq!(a.apply_vector_field(&d, &y3), a.power(&a.gen(2), 2).scale(&int(3)));
        let xi = VectorField::single(0, a.gen(2));
        assert_eq!(a.apply_vector_field(&xi, &a.gen(0)), a.gen(2));
    }

    #[test]
    fn divergence_examples() {
        let a = FreeAlgebra::from_pairs(GradingMode::Z, &[("y1", 0)], false);
        let xi = VectorField::single(0, a.power(&a.gen(0), 2));
        assert_eq!(a.divergence(&xi), a.gen(0).scale(&int(2)));
        for n in 1..6u32 {
            // x even of degree 0, y odd of degree 1, ℓ = xⁿ y ∂/∂x.
            let b = FreeAlgebra::from_pairs(GradingMode::Z, &[("x", 0), ("y", 1)], false);
            let l = VectorField::single(0, b.multiply(&b.power(&b.gen(0), n), &b.gen(1)));
            let expect = b.multiply(&b.power(&b.gen(0), n - 1), &b.gen(1)).scale(&int(n as i64));
            assert_eq!(b.divergence(&l), expect);
            // y even of degree 2, x odd of degree 2n+1, ℓ = y^{n+1} ∂/∂x.
            let c = FreeAlgebra::from_pairs(GradingMode::Z, &[("y", 2), ("x", 2 * n as i64 + 1)], false);
            let l = VectorField::single(1, c.power(&c.gen(0), n + 1));
            assert!(c.divergence(&l).is_zero());
        }
    }

    #[test]
    fn integral_and_pairing_examples() {
        let a = FreeAlgebra::from_pairs(GradingMode::Z, &[("y1", 0), ("y2", 2), ("x1", 1), ("x2", 1)], true);
        let vol = FormalElement::from_monomial(a.volume_monomial(), int(1));
        assert_eq!(a.formal_integral(&vol), int(1));
        assert_eq!(a.formal_integral(&a.one()), int(0));
        let yinv = FormalElement::from_monomial(SuperMonomial(vec![-1, -1, 0, 0]), int(1));
        let xs = FormalElement::from_monomial(SuperMonomial(vec![0, 0, 1, 1]), int(1));
        assert_eq!(a.pairing(&yinv, &xs), int(1));
        assert_eq!(a.pairing(&xs, &yinv), int(1));
        assert_eq!(a.pairing(&a.one(), &a.one()), int(0));
    }

    #[test]
    fn adjoint_examples() {
        let a = FreeAlgebra::from_pairs(GradingMode::Z, &[("y", 0), ("x", 1)], true);
        let f = a.multiply(&a.power(&a.gen(0), 2), &a.gen(1)).add(&a.gen(0).scale(&frac(1, 2)));
        let free = VectorField::single(1, a.gen(0));
        assert_eq!(a.adjoint_vector_field(&free, &f), a.apply_vector_field(&free, &f));
        let euler = VectorField::single(0, a.gen(0));
        assert_eq!(a.adjoint_vector_field(&euler, &f), a.apply_vector_field(&euler, &f).add(&f));
    }

    #[test]
    fn laurent_derivative() {
        let a = FreeAlgebra::from_pairs(GradingMode::Z, &[("y", 0)], true);
        let yinv = FormalElement::from_monomial(SuperMonomial(vec![-1]), int(1));
        let d = a.left_partial(0, &yinv);
        assert_eq!(d, FormalElement::from_monomial(SuperMonomial(vec![-2]), int(-1)));
    }
}
