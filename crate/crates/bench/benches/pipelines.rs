use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gradual_bench::gradual_core::berezin::verify_main_theorem;
use gradual_bench::gradual_core::ce::{cohomology, hazewinkel_check};
use gradual_bench::gradual_core::env::Envelope;
use gradual_bench::gradual_core::exact::{int, Scalar};
use gradual_bench::gradual_core::formal::FormalElement;
use gradual_bench::gradual_core::graded::{GradedBasis, GradingMode};
use gradual_bench::gradual_core::liealg::{GradedLieAlgebra, LieModule};
use gradual_bench::gradual_core::linfty::{conjecture_evidence, default_window, example_projective_space, example_square_zero};

fn algebra(mode: GradingMode, names: &[&str], degrees: &[i64], br: &[(usize, usize, &[(usize, i64)])]) -> GradedLieAlgebra {
    let b = GradedBasis::new(mode, names.iter().map(|s| s.to_string()).collect(), degrees.to_vec()).unwrap();
    let brackets: Vec<(usize, usize, Vec<(usize, Scalar)>)> =
        br.iter().map(|(i, j, r)| (*i, *j, r.iter().map(|&(k, c)| (k, int(c))).collect())).collect();
    GradedLieAlgebra::from_brackets(b, &brackets).unwrap()
}

fn sl2() -> GradedLieAlgebra {
    algebra(GradingMode::Z, &["e", "f", "h"], &[0, 0, 0], &[(2, 0, &[(0, 2)]), (2, 1, &[(1, -2)]), (0, 1, &[(2, 1)])])
}

fn super3() -> GradedLieAlgebra {
    algebra(
        GradingMode::Z,
        &["h", "eps", "c"],
        &[0, 1, 2],
        &[(0, 1, &[(1, 1)]), (1, 1, &[(2, 1)]), (0, 2, &[(2, 2)])],
    )
}

fn main_theorem(c: &mut Criterion) {
    let (a, b) = (sl2(), super3());
    c.bench_function("main theorem sl2", |bench| bench.iter(|| verify_main_theorem(black_box(&a)).unwrap()));
    c.bench_function("main theorem super3", |bench| bench.iter(|| verify_main_theorem(black_box(&b)).unwrap()));
}

fn ce(c: &mut Criterion) {
    let a = sl2();
    let adj = LieModule::adjoint(&a);
    c.bench_function("sl2 adjoint cohomology", |bench| bench.iter(|| cohomology(black_box(&a), &adj, 3, None).unwrap()));
    c.bench_function("sl2 hazewinkel adjoint", |bench| bench.iter(|| hazewinkel_check(black_box(&a), &adj, true).unwrap()));
    let b = super3();
    let triv = LieModule::trivial(&b);
    c.bench_function("super3 cohomology T=8", |bench| bench.iter(|| cohomology(black_box(&b), &triv, 4, Some(8)).unwrap()));
}

fn gutt(c: &mut Criterion) {
    let a = sl2();
    let env = Envelope::new(&a);
    let monos = env.sym().monomials_of_order(3);
    let x = monos.iter().fold(FormalElement::zero(), |mut acc, m| {
        acc.add_term(m.clone(), int(1));
        acc
    });
    c.bench_function("sl2 gutt star degree 3", |bench| bench.iter(|| Envelope::new(&a).gutt_star(black_box(&x), &x)));
}

fn linfty(c: &mut Criterion) {
    let s = example_projective_space(4);
    let w = default_window(&s);
    c.bench_function("projective space n=4 evidence", |bench| bench.iter(|| conjecture_evidence(black_box(&s), w, None).unwrap()));
    let s = example_square_zero(5);
    let w = default_window(&s);
    c.bench_function("square zero n=5 evidence", |bench| bench.iter(|| conjecture_evidence(black_box(&s), w, None).unwrap()));
}

criterion_group!(benches, main_theorem, ce, gutt, linfty);
criterion_main!(benches);
