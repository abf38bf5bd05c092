mod common;

use gradual_core::ce::{
    chain_complex, cohomology, hazewinkel_check, pairing_check, twisted_cohomology, CeCochainComplex, McElement,
    Side,
};
use gradual_core::exact::int;
use gradual_core::graded::{GradedBasis, GradingMode};
use gradual_core::liealg::{is_unimodular, supertrace_character, validate, GradedLieAlgebra, LieModule};
use proptest::prelude::*;

/// `k e3 ⋉ k²` with `ad_{e3}` given by `a`.
fn solvable(a: [i64; 4]) -> GradedLieAlgebra {
    common::alg(
        GradingMode::Z,
        &["e1", "e2", "e3"],
        &[0, 0, 0],
        &[(2, 0, &[(0, a[0]), (1, a[2])]), (2, 1, &[(0, a[1]), (1, a[3])])],
    )
}

#[test]
fn every_small_complex_squares_to_zero() {
    for g in common::small_algebras() {
        for m in [LieModule::trivial(&g), LieModule::adjoint(&g)] {
            CeCochainComplex::new(&g, &m, 3, Some(3)).unwrap();
            chain_complex(&g, &m, 3, Some(3)).unwrap();
        }
    }
}

#[test]
fn pairing_intertwines_for_super_algebras() {
    for g in common::small_algebras() {
        assert!(pairing_check(&g, 3).is_empty(), "{:?}", g.basis().names());
    }
}

#[test]
fn euler_characteristic_vanishes_for_ungraded() {
    for g in [common::nonabelian2(), common::sl2(), common::heisenberg3()] {
        let n = g.dim();
        let t = cohomology(&g, &LieModule::trivial(&g), n, None).unwrap();
        assert_eq!(t.euler(), 0);
    }
}

#[test]
fn chain_and_cochain_dims_agree_for_dual_coefficients() {
    for g in [common::nonabelian2(), common::sl2(), common::heisenberg3()] {
        let m = LieModule::adjoint(&g);
        let n = g.dim();
        let h = chain_complex(&g, &m, n, None).unwrap().homology().unwrap();
        let c = cohomology(&g, &gradual_core::liealg::dual_module(&g, &m), n, None).unwrap().dims();
        assert_eq!(h, c);
    }
}

#[test]
fn unimodular_poincare_duality_without_twist() {
    for g in [common::sl2(), common::heisenberg3()] {
        assert!(is_unimodular(&g));
        for m in [LieModule::trivial(&g), LieModule::adjoint(&g)] {
            assert!(hazewinkel_check(&g, &m, false).unwrap().matches);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hazewinkel_on_random_solvable(a in proptest::array::uniform4(-2i64..=2)) {
        let g = solvable(a);
        prop_assert!(validate(&g).is_valid());
        for m in [LieModule::trivial(&g), LieModule::adjoint(&g)] {
            prop_assert!(hazewinkel_check(&g, &m, true).unwrap().matches);
        }
    }

    #[test]
    fn twisting_keeps_graded_pieces(a in proptest::array::uniform4(-2i64..=2), c in -3i64..=3) {
        let g = solvable(a);
        let chi = [int(0), int(0), int(c)];
        let xi = McElement::from_character(&g, &chi).unwrap();
        let base = CeCochainComplex::new(&g, &LieModule::trivial(&g), 3, None).unwrap();
        let tw = gradual_core::ce::twist_differential(&base, &xi, Side::Right).unwrap();
        prop_assert_eq!(base.dims(), tw.dims());
        let t = twisted_cohomology(&g, &LieModule::trivial(&g), 3, None, Some((&xi, Side::Right))).unwrap();
        prop_assert_eq!(t.euler(), 0);
    }

    #[test]
    fn abelian_cohomology_is_binomial(n in 1usize..5) {
        let g = GradedLieAlgebra::abelian(GradedBasis::numbered(GradingMode::Z, "e", &vec![0; n]));
        let t = cohomology(&g, &LieModule::trivial(&g), n, None).unwrap();
        let mut binom = vec![1usize];
        for k in 1..=n {
            binom.push(binom[k - 1] * (n - k + 1) / k);
        }
        prop_assert_eq!(t.dims(), binom);
        prop_assert!(supertrace_character(&g).iter().all(|x| *x == int(0)));
    }
}
