use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use rescalc_core::{
    annihilator, coleff_herrera, decompose, Current, CurrentVector, ElementaryTerm, Factor, MonIdeal, MonModule,
    Monomial, OmegaSet, VarSet,
};

fn bare(f: &[Factor]) -> Current {
    Current::from_term(ElementaryTerm::bare(f.to_vec())).unwrap()
}

fn worked_example() -> (CurrentVector, MonModule) {
    let r = bare(&[Factor::Res(1), Factor::Pv(1)]).add(&bare(&[Factor::Res(2), Factor::Res(1)])).unwrap();
    let j = MonIdeal::new(2, vec![Monomial(vec![2, 0]), Monomial(vec![1, 1])]).unwrap();
    (CurrentVector::single(r), MonModule::from_ideal(j))
}

fn ch_4() -> (Vec<Monomial>, CurrentVector) {
    let f = vec![Monomial(vec![3, 2, 0, 0]), Monomial(vec![0, 0, 2, 0]), Monomial(vec![0, 0, 0, 3])];
    let t = coleff_herrera(4, &f).unwrap();
    (f, CurrentVector::single(t))
}

fn engine(c: &mut Criterion) {
    let (r, j) = worked_example();
    c.bench_function("decompose/worked example", |b| b.iter(|| decompose(black_box(&r), black_box(&j)).unwrap()));

    let (f, t) = ch_4();
    c.bench_function("coleff_herrera/n=4", |b| b.iter(|| coleff_herrera(4, black_box(&f)).unwrap()));
    c.bench_function("annihilator/n=4 complete intersection", |b| b.iter(|| annihilator(black_box(&t)).unwrap()));

    let w = OmegaSet::coord_variety(4, VarSet::from_indices([2])).unwrap();
    let big = t.components()[0].clone();
    c.bench_function("restrict/n=4", |b| b.iter(|| w.restrict(black_box(&big)).unwrap()));

    let ideal = MonIdeal::new(
        4,
        vec![
            Monomial(vec![3, 1, 0, 0]),
            Monomial(vec![1, 2, 1, 0]),
            Monomial(vec![0, 1, 2, 2]),
            Monomial(vec![2, 0, 0, 3]),
            Monomial(vec![0, 3, 0, 1]),
        ],
    )
    .unwrap();
    c.bench_function("primary_decomposition_oracle/n=4", |b| {
        b.iter(|| black_box(&ideal).primary_decomposition_oracle().unwrap())
    });
}

criterion_group!(benches, engine);
criterion_main!(benches);
