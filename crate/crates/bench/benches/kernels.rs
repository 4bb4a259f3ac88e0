use criterion::{black_box, criterion_group, criterion_main, Criterion};
use eqsym::bijections::{compatible_pairs, gr_eta, gr_phi};
use eqsym::eulerian::{q_fun, EulerianTable, Selector};
use eqsym::related::d_graded;
use eqsym::{Basis, Partition};

fn table(c: &mut Criterion) {
    c.bench_function("table S_7", |b| b.iter(|| EulerianTable::build(black_box(7)).unwrap()));
}

fn q_expansions(c: &mut Criterion) {
    let sel = Selector::LambdaJ { lambda: Partition::from_parts([4, 2]), j: 2 };
    c.bench_function("Q fundamental (4,2) j=2", |b| b.iter(|| q_fun(black_box(&sel)).unwrap()));
    let f = q_fun(&sel).unwrap().symf().unwrap();
    c.bench_function("Q to Schur (4,2) j=2", |b| b.iter(|| black_box(&f).convert(Basis::S).unwrap()));
}

fn bijections(c: &mut Criterion) {
    let pairs = compatible_pairs(4, 3).unwrap();
    c.bench_function("phi/eta round trip n=4", |b| {
        b.iter(|| {
            for p in &pairs {
                let back = gr_eta(&gr_phi(p).unwrap()).unwrap();
                assert_eq!(&back, p);
            }
        })
    });
}

fn derangements(c: &mut Criterion) {
    c.bench_function("multiset derangements n=4 in 4 vars", |b| b.iter(|| d_graded(black_box(4), 4).unwrap()));
}

criterion_group!(benches, table, q_expansions, bijections, derangements);
criterion_main!(benches);
