use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use latkit_bench::{cu_lattice, inputs};
use latkit_core::constructions::double_interval;
use latkit_core::search::{census, intervals, CensusOptions};
use latkit_core::{canonical_join_complex, is_crosscut_simplicial};

fn complexes(c: &mut Criterion) {
    for (name, l) in inputs() {
        c.bench_function(&format!("cjc/{name}"), |b| {
            b.iter(|| canonical_join_complex(black_box(&l)).unwrap())
        });
        c.bench_function(&format!("sd_local/{name}"), |b| {
            b.iter(|| {
                let l = black_box(&l);
                l.join_sd_witness_local().is_none() && l.meet_sd_witness_local().is_none()
            })
        });
        c.bench_function(&format!("sd_covers/{name}"), |b| {
            b.iter(|| {
                let l = black_box(&l);
                l.is_join_semidistributive_by_covers() && l.is_meet_semidistributive_by_covers()
            })
        });
    }
    let (_, t4) = &inputs()[1];
    c.bench_function("crosscut/tamari4", |b| b.iter(|| is_crosscut_simplicial(black_box(t4))));
}

fn doubling(c: &mut Criterion) {
    let l = cu_lattice(8).lattice;
    let ivs = intervals(&l);
    c.bench_function("double/cu8_all_intervals", |b| {
        b.iter(|| {
            for &(lo, hi) in &ivs {
                black_box(double_interval(&l, lo, hi).unwrap());
            }
        })
    });
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    group.bench_function("k4", |b| b.iter(|| census(&CensusOptions::new(4)).unwrap()));
    group.finish();
}

criterion_group!(benches, complexes, doubling, search);
criterion_main!(benches);
