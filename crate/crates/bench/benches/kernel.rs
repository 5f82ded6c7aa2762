use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hgx_core::bialgebroid::{galois_lambda, galois_mu};
use hgx_core::corpus;
use hgx_core::model::{self, ModelDocument};
use hgx_core::suite::{self, Suite};
use hgx_core::{Bialgebroid, Field, Matrix, Q};

fn dense(n: usize) -> Matrix<Q> {
    Matrix::from_fn(n, n, |i, j| Q::from_i64(((i * 7 + j * 3 + i * j) % 11) as i64 - 5))
}

fn linalg(c: &mut Criterion) {
    let m = dense(40);
    c.bench_function("rank 40x40 over Q", |b| b.iter(|| black_box(&m).rank()));
    c.bench_function("inverse 24x24 over Q", |b| {
        let m = dense(24).add(&Matrix::identity(24).scale(&Q::from_i64(13)));
        b.iter(|| black_box(&m).inverse().unwrap())
    });
}

fn model_io(c: &mut Criterion) {
    let text = model::serialize(&corpus::t2());
    c.bench_function("parse t2", |b| b.iter(|| model::parse::<Q>(black_box(&text)).unwrap()));
    let doc = corpus::t2();
    c.bench_function("serialize t2", |b| b.iter(|| model::serialize(black_box(&doc))));
}

fn bialgebroids(c: &mut Criterion) {
    let t2 = corpus::t2().bialgebroid.unwrap();
    c.bench_function("validate T2^e", |b| b.iter(|| Bialgebroid::new(black_box(t2.clone())).unwrap()));
    let bg = Bialgebroid::new(t2).unwrap();
    c.bench_function("lambda and mu inverses on T2^e", |b| b.iter(|| (galois_lambda(&bg).unwrap(), galois_mu(&bg).unwrap())));
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    let klein = ModelDocument { cocycle: corpus::minus().cocycle, ..corpus::z2z2() };
    let runs: [(&str, ModelDocument<Q>, Suite); 6] = [
        ("hopf t2", corpus::t2(), Suite::Hopf),
        ("galois qxq", corpus::qxq(), Suite::Galois),
        ("twist klein", klein, Suite::Twist),
        ("double z2", corpus::z2_double(), Suite::Double),
        ("cleft z3", corpus::z3(), Suite::Cleft),
        ("crossed swap", corpus::crossed_swap(), Suite::Crossed),
    ];
    for (name, doc, s) in &runs {
        g.bench_function(*name, |b| b.iter(|| assert!(suite::run(black_box(doc), *s).pass())));
    }
    let (a, b2) = (corpus::gauge_f5(4), corpus::gauge_f5(1));
    g.bench_function("gauge search f5", |b| b.iter(|| suite::compare_gauge(&a, &b2, false).1.unwrap()));
    g.finish();
}

criterion_group!(benches, linalg, model_io, bialgebroids, suites);
criterion_main!(benches);
