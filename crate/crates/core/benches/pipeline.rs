//! Classification and regular-level verification, on the rayon pool versus a
//! single thread. Built with `--no-default-features` only the sequential
//! variant runs.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qplane::cli::load_datum;
use qplane::lifting::LiftingDatum;
use qplane::pipeline::{self, Level};
use std::path::PathBuf;

fn datum(name: &str) -> LiftingDatum {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    load_datum(&p).unwrap()
}

#[cfg(feature = "parallel")]
fn variants() -> Vec<(&'static str, Option<rayon::ThreadPool>)> {
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    vec![("parallel", None), ("sequential", Some(single))]
}

#[cfg(feature = "parallel")]
fn run<T: Send>(pool: &Option<rayon::ThreadPool>, f: impl FnOnce() -> T + Send) -> T {
    match pool {
        Some(p) => p.install(f),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn variants() -> Vec<(&'static str, Option<()>)> {
    vec![("sequential", None)]
}

#[cfg(not(feature = "parallel"))]
fn run<T: Send>(_: &Option<()>, f: impl FnOnce() -> T + Send) -> T {
    f()
}

fn bench_pipeline(c: &mut Criterion) {
    let data = [("datum_a", datum("datum_a.toml")), ("datum_d", datum("datum_d.toml")), ("z9", datum("z9_nilpotent.toml"))];
    let variants = variants();

    let mut g = c.benchmark_group("classify");
    g.sample_size(10);
    for (name, d) in &data {
        for (mode, pool) in &variants {
            g.bench_with_input(BenchmarkId::new(*mode, name), d, |b, d| {
                b.iter(|| run(pool, || pipeline::classify(d).unwrap()))
            });
        }
    }
    g.finish();

    let mut g = c.benchmark_group("verify_regular");
    g.sample_size(10);
    for (name, d) in &data {
        for (mode, pool) in &variants {
            g.bench_with_input(BenchmarkId::new(*mode, name), d, |b, d| {
                b.iter(|| run(pool, || pipeline::verify(d, Level::Regular).unwrap()))
            });
        }
    }
    g.finish();
}

criterion_group!(benches, bench_pipeline);
criterion_main!(benches);
