//! Sequential against parallel on the exhaustive checks.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rlkit::algebra::{boolean, chain, direct_product, validate_algebra_with, RawTables};
use rlkit::corpus;
use rlkit::filters::enumerate_filters;
use rlkit::hull::build_hull;
use rlkit::stone::{classify_stone, ClassifyOptions};
use rlkit::{Algebra, Caps, ResiduatedLattice, Strategy};
use std::hint::black_box;

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn raw(a: &ResiduatedLattice) -> RawTables {
    RawTables {
        labels: a.labels().to_vec(),
        join: a.lattice().join_table().rows(),
        meet: a.lattice().meet_table().rows(),
        times: a.times_table().rows(),
        implies: a.implies_table().rows(),
    }
}

fn caps(strategy: Strategy) -> Caps {
    Caps { strategy, ..Caps::default() }
}

fn validation(c: &mut Criterion) {
    let mut g = c.benchmark_group("validate");
    for (name, a) in [
        ("lrex8", corpus::get("lrex8").unwrap()),
        ("chain16xbool4", direct_product(&[chain(16).unwrap(), boolean(4).unwrap()], 4096).unwrap().algebra),
    ] {
        let tables = raw(&a);
        for (s, strategy) in STRATEGIES {
            g.bench_with_input(BenchmarkId::new(s, name), &tables, |b, t| {
                b.iter(|| validate_algebra_with(black_box(t), strategy).unwrap())
            });
        }
    }
    g.finish();
}

fn filters(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_filters");
    g.sample_size(20);
    for (name, a) in [("lrex8", corpus::get("lrex8").unwrap()), ("bool16", boolean(16).unwrap())] {
        for (s, strategy) in STRATEGIES {
            g.bench_with_input(BenchmarkId::new(s, name), &a, |b, a| {
                b.iter(|| enumerate_filters(black_box(a), &caps(strategy)).unwrap())
            });
        }
    }
    g.finish();
}

fn classify(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    let opts = ClassifyOptions { exhaustive_subsets: true, reticulation_side: true };
    for key in ["lrex0", "lrex8"] {
        let a = corpus::get(key).unwrap();
        for (s, strategy) in STRATEGIES {
            g.bench_with_input(BenchmarkId::new(s, key), &a, |b, a| {
                b.iter(|| classify_stone(black_box(a), &caps(strategy), opts).unwrap())
            });
        }
    }
    g.finish();
}

fn hull(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_hull");
    g.sample_size(10);
    for key in ["lrex0_5", "lrex8"] {
        let a = corpus::get(key).unwrap();
        for (s, strategy) in STRATEGIES {
            g.bench_with_input(BenchmarkId::new(s, key), &a, |b, a| {
                b.iter(|| build_hull(black_box(a), &caps(strategy)).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, validation, filters, classify, hull);
criterion_main!(benches);
