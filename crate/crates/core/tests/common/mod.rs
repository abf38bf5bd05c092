#![allow(dead_code)]

use gradual_core::exact::{int, Scalar};
use gradual_core::graded::{GradedBasis, GradingMode};
use gradual_core::liealg::GradedLieAlgebra;

pub fn alg(mode: GradingMode, names: &[&str], degrees: &[i64], br: &[(usize, usize, &[(usize, i64)])]) -> GradedLieAlgebra {
    let b = GradedBasis::new(mode, names.iter().map(|s| s.to_string()).collect(), degrees.to_vec()).unwrap();
    let brackets: Vec<(usize, usize, Vec<(usize, Scalar)>)> =
        br.iter().map(|(i, j, r)| (*i, *j, r.iter().map(|&(k, c)| (k, int(c))).collect())).collect();
    GradedLieAlgebra::from_brackets(b, &brackets).unwrap()
}

pub fn nonabelian2() -> GradedLieAlgebra {
    alg(GradingMode::Z, &["e1", "e2"], &[0, 0], &[(0, 1, &[(1, 1)])])
}

pub fn sl2() -> GradedLieAlgebra {
    alg(
        GradingMode::Z,
        &["e", "f", "h"],
        &[0, 0, 0],
        &[(2, 0, &[(0, 2)]), (2, 1, &[(1, -2)]), (0, 1, &[(2, 1)])],
    )
}

pub fn heisenberg3() -> GradedLieAlgebra {
    alg(GradingMode::Z, &["p", "q", "z"], &[0, 0, 0], &[(0, 1, &[(2, 1)])])
}

pub fn super_h_eps() -> GradedLieAlgebra {
    alg(GradingMode::Z2, &["h", "eps"], &[0, 1], &[(0, 1, &[(1, 1)])])
}

pub fn super3() -> GradedLieAlgebra {
    alg(
        GradingMode::Z,
        &["h", "eps", "c"],
        &[0, 1, 2],
        &[(0, 1, &[(1, 1)]), (1, 1, &[(2, 1)]), (0, 2, &[(2, 2)])],
    )
}

pub fn osp_like() -> GradedLieAlgebra {
    alg(GradingMode::Z2, &["h", "eps"], &[0, 1], &[(1, 1, &[(0, 2)])])
}

pub fn small_algebras() -> Vec<GradedLieAlgebra> {
    vec![nonabelian2(), sl2(), heisenberg3(), super_h_eps(), super3(), osp_like()]
}
