mod common;

use gradual_core::berezin::{deformed_berezinian, dualizing_character, verify_main_theorem, Berezin};
use gradual_core::exact::{int, Scalar};
use gradual_core::formal::{FormalElement, SuperMonomial};
use gradual_core::graded::GradingMode;
use gradual_core::liealg::{supertrace_character, validate, GradedLieAlgebra};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bimonomials with CE-degree ≤ n and S-degree ≤ m + 2.
fn sample(p: &Berezin, seed: u64, count: usize) -> Vec<FormalElement> {
    let g = p.algebra();
    let n = g.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..count {
        let mut e = vec![0i32; 2 * n];
        let mut left = rng.gen_range(0..=n);
        let mut right = rng.gen_range(0..=g.n_odd() + 2);
        while left > 0 {
            let i = rng.gen_range(0..n);
            if g.is_odd(i) || e[i] == 0 {
                e[i] += 1;
            }
            left -= 1;
        }
        while right > 0 {
            let i = rng.gen_range(0..n);
            if !g.is_odd(i) || e[n + i] == 0 {
                e[n + i] += 1;
            }
            right -= 1;
        }
        out.push(FormalElement::from_monomial(SuperMonomial(e), int(rng.gen_range(1..4))));
    }
    out.push(p.berezinian());
    out
}

fn algebras() -> Vec<GradedLieAlgebra> {
    let mut v = common::small_algebras();
    v.push(common::alg(GradingMode::Z2, &["h", "e1", "e2"], &[0, 1, 1], &[(0, 1, &[(1, 1)]), (0, 2, &[(2, 2)])]));
    v
}

#[test]
fn hodge_axioms() {
    for g in algebras() {
        let p = Berezin::new(&g);
        for v in sample(&p, 7, 40) {
            let (d, s, t) = (|w: &FormalElement| p.hodge_d(w), |w: &FormalElement| p.hodge_s(w), |w: &FormalElement| p.hodge_t(w));
            assert_eq!(d(&s(&v)).add(&s(&d(&v))), v.sub(&t(&v)));
            assert!(d(&d(&v)).is_zero());
            assert!(d(&t(&v)).is_zero() && t(&d(&v)).is_zero());
            assert_eq!(t(&t(&v)), t(&v));
            assert!(s(&s(&v)).is_zero() && s(&t(&v)).is_zero() && t(&s(&v)).is_zero());
            for (m, _) in v.terms() {
                p.hodge_laplacian_commutator(m).unwrap();
            }
        }
    }
}

#[test]
fn perturbation_degrees_and_square_zero() {
    for g in algebras() {
        let p = Berezin::new(&g);
        for v in sample(&p, 11, 40) {
            assert!(p.perturbed_d(&p.perturbed_d(&v)).is_zero());
            let (m, _) = v.terms().next().unwrap();
            let (ce, sdeg) = p.degrees(m);
            for (t, _) in p.perturbation_x(&v).terms() {
                let (ce2, s2) = p.degrees(t);
                assert_eq!(ce2, ce + 1);
                assert!(ce2 - s2 >= ce - sdeg + 1);
            }
            for (t, _) in p.hodge_s(&v).terms() {
                assert_eq!(p.degrees(t).0, ce - 1);
            }
        }
    }
}

#[test]
fn perturbed_hodge_axioms() {
    for g in algebras() {
        let p = Berezin::new(&g);
        for v in sample(&p, 13, 25) {
            let a = p.alpha(&v).unwrap();
            let b = p.beta(&v).unwrap();
            // (id + sx)α = id and (id + xs)β = id.
            assert_eq!(a.add(&p.hodge_s(&p.perturbation_x(&a))), v);
            assert_eq!(b.add(&p.perturbation_x(&p.hodge_s(&b))), v);
            let h = |w: &FormalElement| p.alpha(&p.hodge_s(w)).unwrap();
            let proj = |w: &FormalElement| p.alpha(&p.hodge_t(&p.beta(w).unwrap())).unwrap();
            let lhs = p.perturbed_d(&h(&v)).add(&h(&p.perturbed_d(&v)));
            assert_eq!(lhs, v.sub(&proj(&v)));
        }
        let bt = deformed_berezinian(&p).unwrap();
        // αtβ ∘ i = id on the cohomology line.
        let back = p.berezinian_coefficient(&p.beta(&bt.element).unwrap());
        assert_eq!(back, Scalar::from_integer(1.into()));
    }
}

#[test]
fn character_vanishes_on_odd_and_matches_supertrace() {
    for g in algebras() {
        let p = Berezin::new(&g);
        let bt = deformed_berezinian(&p).unwrap();
        let chi = dualizing_character(&p, &bt).unwrap();
        for i in 0..g.dim() {
            if g.is_odd(i) {
                assert!(chi.values[i].is_zero());
            }
        }
        assert_eq!(chi.values, supertrace_character(&g));
        assert!(verify_main_theorem(&g).unwrap().holds());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn main_theorem_on_random_solvable(a in proptest::array::uniform4(-3i64..=3)) {
        let g = common::alg(
            GradingMode::Z,
            &["e1", "e2", "e3"],
            &[0, 0, 0],
            &[(2, 0, &[(0, a[0]), (1, a[2])]), (2, 1, &[(0, a[1]), (1, a[3])])],
        );
        prop_assert!(validate(&g).is_valid());
        let r = verify_main_theorem(&g).unwrap();
        prop_assert!(r.holds());
        prop_assert_eq!(&r.character[2].r, &(a[0] + a[3]).to_string());
    }
}
