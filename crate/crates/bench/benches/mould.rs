use criterion::{black_box, criterion_group, criterion_main, Criterion};
use mould::flexion::{ari, gari, Adari};
use mould::special::{pal, paj, sa, Singulator};
use mould::verify;

fn ratfunc(c: &mut Criterion) {
    let p = pal(4).unwrap();
    let (a, b) = (p.component(3).clone(), p.component(4).clone());
    c.bench_function("ratfunc add", |bench| bench.iter(|| black_box(&a).add(black_box(&b))));
    c.bench_function("ratfunc mul", |bench| bench.iter(|| black_box(&a).mul(black_box(&b))));
}

fn operators(c: &mut Criterion) {
    let (s3, s5) = (sa(3, 4), sa(5, 4));
    c.bench_function("ari sa_3 sa_5 depth 4", |b| b.iter(|| ari(black_box(&s3), black_box(&s5)).unwrap()));
    let p = pal(4).unwrap();
    let q = paj(4);
    c.bench_function("gari pal paj depth 4", |b| b.iter(|| gari(black_box(&p), black_box(&q)).unwrap()));
    c.bench_function("adari(pal) setup depth 4", |b| b.iter(|| Adari::new(black_box(&p)).unwrap()));
}

fn singulator(c: &mut Criterion) {
    let mut g = c.benchmark_group("singulator");
    g.sample_size(10);
    g.bench_function("setup depth 4", |b| b.iter(|| Singulator::<mould::RationalFunction>::new(4).unwrap()));
    let sg: Singulator = Singulator::new(4).unwrap();
    let a = sa(5, 4);
    g.bench_function("sang sa_5 depth 4", |b| b.iter(|| sg.sang(black_box(&a)).unwrap()));
    g.bench_function("slang_1 sa_5 depth 4", |b| b.iter(|| sg.slang(1, black_box(&a)).unwrap()));
    g.finish();
}

fn theorems(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    g.bench_function("psi_5 depth 4", |b| b.iter(|| verify::psi_odd(2, 4).unwrap()));
    g.bench_function("comparison n=3", |b| b.iter(|| verify::comparison(3).unwrap()));
    g.finish();
}

criterion_group!(benches, ratfunc, operators, singulator, theorems);
criterion_main!(benches);
