use criterion::{criterion_group, criterion_main, Criterion};
use knotsurf::{checkerboard_coloring, parse_pd, seifert_matrix, InvariantReport, Kind};
use knotsurf_bench::{random_maps, table_maps};
use std::hint::black_box;

fn parse(c: &mut Criterion) {
    let pd = "X(14,8,1,7),X(6,2,7,1),X(2,12,3,11),X(10,4,11,3),X(4,10,5,9),X(12,6,13,5),X(8,14,9,13)";
    c.bench_function("parse_pd 7_4", |b| b.iter(|| parse_pd(black_box(pd)).unwrap()));
}

fn reports(c: &mut Criterion) {
    let table = table_maps();
    c.bench_function("report table 3_1..7_7", |b| {
        b.iter(|| {
            for m in &table {
                black_box(InvariantReport::compute(m, false).unwrap());
            }
        })
    });
    let random = random_maps(12, 32, Kind::Random);
    c.bench_function("report 32 random 12-crossing", |b| {
        b.iter(|| {
            for m in &random {
                black_box(InvariantReport::compute(m, false).unwrap());
            }
        })
    });
    c.bench_function("coloring 32 random 12-crossing", |b| {
        b.iter(|| {
            for m in &random {
                black_box(checkerboard_coloring(m).unwrap());
            }
        })
    });
}

fn oracle(c: &mut Criterion) {
    let random = random_maps(12, 32, Kind::Random);
    c.bench_function("seifert oracle 32 random 12-crossing", |b| {
        b.iter(|| {
            for m in &random {
                black_box(seifert_matrix(m).unwrap());
            }
        })
    });
}

criterion_group!(benches, parse, reports, oracle);
criterion_main!(benches);
